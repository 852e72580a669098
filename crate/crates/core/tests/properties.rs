use humbert_core::arith::{rad_is_zero, rad_mul, rat, ratio, Mode, RadElem, Rat, Settings};
use humbert_core::config::{is_config, is_nondegenerate};
use humbert_core::fixtures::sample;
use humbert_core::hecurve::{
    from_lambda, normal_form, ramification_points, recover_fourth_quadric, verify_witness,
    ConstraintSet, LambdaForm,
};
use humbert_core::kummer::{
    all_lines, incidence, make_branch, power_residue, sign_rule_config, surface, vandermonde_row,
    verify_line, BranchData,
};
use humbert_core::moduli::{apply, canonical_key, is_isomorphic, BranchSet, MobiusMap, P1Point};
use proptest::prelude::*;

fn branch(seed: u64) -> BranchData {
    make_branch(sample(seed, 1).sextuples.remove(0)).unwrap()
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=30).prop_map(|(n, d)| ratio(n, d))
}

fn element(b: &BranchData, terms: &[(u8, Rat)]) -> RadElem {
    terms.iter().fold(RadElem::zero(b.basis()), |acc, (m, c)| {
        acc + RadElem::monomial(b.basis(), m & 0x3f, c.clone())
    })
}

fn terms() -> impl Strategy<Value = Vec<(u8, Rat)>> {
    prop::collection::vec((any::<u8>(), small_rat()), 0..6)
}

fn close(a: humbert_core::arith::CNum, b: humbert_core::arith::CNum, eps: f64) -> bool {
    (a - b).norm() <= eps * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #[test]
    fn radical_product_is_commutative_and_associative(seed in 0u64..1000, x in terms(), y in terms(), z in terms()) {
        let b = branch(seed);
        let (x, y, z) = (element(&b, &x), element(&b, &y), element(&b, &z));
        prop_assert_eq!(rad_mul(&x, &y).unwrap(), rad_mul(&y, &x).unwrap());
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn embedding_is_a_ring_homomorphism(seed in 0u64..1000, x in terms(), y in terms()) {
        let b = branch(seed);
        let (x, y) = (element(&b, &x), element(&b, &y));
        prop_assert!(close((&x * &y).embed(), x.embed() * y.embed(), 1e-6));
        prop_assert!(close((&x + &y).embed(), x.embed() + y.embed(), 1e-6));
    }

    #[test]
    fn exact_and_numeric_zero_tests_agree(seed in 0u64..1000, x in terms()) {
        let b = branch(seed);
        let x = element(&b, &x);
        let exact = rad_is_zero(&x, &Settings::exact()).unwrap();
        let numeric = rad_is_zero(&x, &Settings::numeric()).unwrap();
        prop_assert_eq!(exact.holds, numeric.holds);
        prop_assert!(!exact.numeric && numeric.numeric);
        let diff = &x - &x;
        prop_assert!(rad_is_zero(&diff, &Settings::exact()).unwrap().holds);
    }

    #[test]
    fn mobius_invariance_of_keys(
        lambdas in prop::collection::btree_set(small_rat(), 3),
        m in (small_rat(), small_rat(), small_rat(), small_rat()),
    ) {
        let lambdas: Vec<Rat> = lambdas.into_iter().collect();
        prop_assume!(lambdas.iter().all(|l| *l != rat(0) && *l != rat(1)));
        let s = BranchSet::from_lambdas(&lambdas).unwrap();
        let Ok(map) = MobiusMap::new(m.0, m.1, m.2, m.3) else { return Ok(()) };
        let t = apply(&map, &s);
        prop_assert_eq!(canonical_key(&t), canonical_key(&s));
        let w = is_isomorphic(&s, &t).unwrap().unwrap();
        prop_assert!(apply(&w, &s).same_set(&t));
        let back = is_isomorphic(&t, &s).unwrap().unwrap();
        prop_assert!(apply(&back, &t).same_set(&s));
        prop_assert!(apply(&w.inverse(), &t).same_set(&s));
    }
}

#[test]
fn power_residues_on_random_branch_data() {
    for a in sample(11, 100).sextuples {
        let b = make_branch(a).unwrap();
        for k in 0..5 {
            assert_eq!(power_residue(k, &b), rat(0));
        }
        assert_eq!(power_residue(5, &b), rat(1));
    }
}

#[test]
fn lines_and_incidence_on_random_branch_data() {
    let rule = sign_rule_config();
    for a in sample(12, 8).sextuples {
        let b = make_branch(a).unwrap();
        let s = surface(&b);
        let fourth = vandermonde_row(&b, 3);
        for line in all_lines(&b) {
            let c = verify_line(&line, &s, &fourth, &Settings::exact()).unwrap();
            assert!(c.on_surface.holds && c.fourth_row_is_one.holds);
        }
        let report = incidence(&b, &Settings::exact()).unwrap();
        assert!(report.nodes_disjoint.holds && report.tropes_disjoint.holds);
        assert!(is_config(report.config.rows()) && is_nondegenerate(&report.config));
        assert_eq!(report.config.rows(), rule.rows());
    }
}

#[test]
fn degenerate_bases_fall_back_in_auto_mode() {
    let b = make_branch([0, 1, 2, 3, 4, 5].map(rat)).unwrap();
    // s1 s2 s3 s4 squares to 288^2; principal roots of 24, -12, 12, -24
    // multiply to -288
    let x = RadElem::monomial(b.basis(), 0b011110, rat(1)) + RadElem::scalar(b.basis(), rat(288));
    assert!(!x.is_free());
    assert!(rad_is_zero(&x, &Settings::exact()).is_err());
    let auto = Settings {
        mode: Mode::Auto,
        ..Settings::default()
    };
    let v = rad_is_zero(&x, &auto).unwrap();
    assert!(v.holds && v.numeric);
    let numeric = incidence(&b, &Settings::numeric()).unwrap();
    assert_eq!(numeric.config.rows(), sign_rule_config().rows());
}

#[test]
fn tropes_and_nodes_give_the_same_quadric_family() {
    for a in sample(13, 20).sextuples {
        let b = make_branch(a).unwrap();
        let t = recover_fourth_quadric(&b, ConstraintSet::Tropes).unwrap();
        let n = recover_fourth_quadric(&b, ConstraintSet::Nodes).unwrap();
        assert!(t.same_space(&n) && t.mixed_all_zero);
    }
}

#[test]
fn random_lambda_curves() {
    for l in sample(14, 20).triples {
        let form = LambdaForm::new(l.to_vec()).unwrap();
        let x = from_lambda(&form).unwrap();
        for i in 0..6 {
            let r = ramification_points(&x, i).unwrap();
            assert_eq!(r.points.len(), 16);
            assert!(r.max_residual < 1e-9);
        }
        let nf = normal_form(x.coeffs()).unwrap();
        assert!(verify_witness(x.coeffs(), &nf).unwrap());
        let reference = BranchSet::from_lambdas(form.lambdas()).unwrap();
        assert_eq!(canonical_key(&nf.branch_set()), canonical_key(&reference));
    }
}

#[test]
fn isomorphism_is_transitive_via_composition() {
    let s = BranchSet::from_lambdas(&[rat(2), ratio(-1, 3), rat(7)]).unwrap();
    let m1 = MobiusMap::new(rat(2), rat(1), rat(1), rat(-3)).unwrap();
    let m2 = MobiusMap::new(rat(0), rat(1), rat(-1), rat(5)).unwrap();
    let t = apply(&m1, &s);
    let u = apply(&m2, &t);
    let st = is_isomorphic(&s, &t).unwrap().unwrap();
    let tu = is_isomorphic(&t, &u).unwrap().unwrap();
    assert!(apply(&tu.compose(&st), &s).same_set(&u));
    assert!(is_isomorphic(&s, &u).unwrap().is_some());
    assert!(u
        .points()
        .contains(&m2.compose(&m1).apply(&P1Point::Infinity)));
}
