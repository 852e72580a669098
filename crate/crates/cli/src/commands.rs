//! The subcommands. Each returns a report builder, or an input error.

use std::fmt;
use std::path::Path;

use serde_json::{json, Value};

use humbert_core::arith::{parse_rat, Mode, Rat, RatMatrix, Settings, Verdict};
use humbert_core::config::{is_config, is_nondegenerate, rosenhain_enumerate};
use humbert_core::fixtures::{sample, CorpusFile};
use humbert_core::hecurve::{
    branch_locus, from_lambda, invariants_of_type, kummer_of, normal_form, recover_fourth_quadric,
    verify_witness, ConstraintSet, CurveFile, LambdaForm,
};
use humbert_core::kummer::{
    all_lines, incidence, lines_distinct, make_branch, sign_rule_config, surface, vandermonde_row,
    verify_line, BranchData, KummerSurface,
};
use humbert_core::moduli::{apply, canonical_key, is_isomorphic, moduli_map_f, BranchSet};
use humbert_core::theta::{quotient_genus, rosenhain_ledger, theta_report, CoveringSpec};
use humbert_core::Error;

use crate::report::Builder;

/// Bad input: exit code 2.
#[derive(Debug)]
pub struct Invalid(pub String);

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for Invalid {
    fn from(e: Error) -> Self {
        Invalid(e.to_string())
    }
}

type Outcome = Result<Builder, Invalid>;

fn parse_all(args: &[String]) -> Result<Vec<Rat>, Invalid> {
    args.iter()
        .map(|s| parse_rat(s.trim()).map_err(Invalid::from))
        .collect()
}

fn echo(cmd: &str, values: &[Rat]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("{cmd} {}", parts.join(" "))
}

fn strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn basis_warning(r: &mut Builder, b: &BranchData, settings: &Settings) {
    if b.basis().is_independent() {
        return;
    }
    let relations: Vec<String> = b
        .basis()
        .relations()
        .iter()
        .map(|m| {
            let idx: Vec<String> = (0..6)
                .filter(|j| m & (1 << j) != 0)
                .map(|j| j.to_string())
                .collect();
            format!("{{{}}}", idx.join(","))
        })
        .collect();
    let policy = match settings.mode {
        Mode::Exact => "exact mode refuses zero tests on elements mixing related monomials",
        _ => "zero tests on elements mixing related monomials are decided numerically",
    };
    r.warn(format!(
        "numeric fallback: radical basis is dependent (square products over {}); {policy}",
        relations.join(" ")
    ));
}

/// Lines, incidence and Rosenhain checks under `prefix`.
fn kummer_suite(
    r: &mut Builder,
    prefix: &str,
    b: &BranchData,
    s: &KummerSurface,
    settings: &Settings,
) -> Result<(), Invalid> {
    let name = |n: &str| format!("{prefix}{n}");
    let lines = all_lines(b);
    r.check(&name("lines.count"), lines.len() == 32, json!(lines.len()));

    let fourth = vandermonde_row(b, 3);
    let mut on = Verdict::exact(true);
    let mut one = Verdict::exact(true);
    let mut off_surface = Vec::new();
    let mut not_one = Vec::new();
    for line in &lines {
        let c = verify_line(line, s, &fourth, settings)?;
        if !c.on_surface.holds {
            off_surface.push(line.class.label());
        }
        if !c.fourth_row_is_one.holds {
            not_one.push(line.class.label());
        }
        on = on.and(c.on_surface);
        one = one.and(c.fourth_row_is_one);
    }
    let failing = |v: Vec<String>| {
        if v.is_empty() {
            Value::Null
        } else {
            json!({ "failing": v })
        }
    };
    r.verdict(&name("lines.on_surface"), on, failing(off_surface));
    r.verdict(&name("lines.fourth_row_is_one"), one, failing(not_one));
    r.verdict(
        &name("lines.distinct"),
        lines_distinct(&lines, settings)?,
        Value::Null,
    );

    let inc = incidence(b, settings)?;
    let c = &inc.config;
    r.check(
        &name("incidence.configuration"),
        is_config(c.rows()),
        Value::Null,
    );
    r.check(
        &name("incidence.nondegenerate"),
        is_nondegenerate(c),
        Value::Null,
    );
    r.verdict(
        &name("incidence.nodes_disjoint"),
        inc.nodes_disjoint,
        Value::Null,
    );
    r.verdict(
        &name("incidence.tropes_disjoint"),
        inc.tropes_disjoint,
        Value::Null,
    );
    r.check(
        &name("incidence.sign_rule"),
        c.rows() == sign_rule_config().rows(),
        Value::Null,
    );
    let tetras = rosenhain_enumerate(c).len();
    r.check(&name("rosenhain.count"), tetras == 80, json!(tetras));

    let line_data: Vec<Value> = lines
        .iter()
        .map(|l| {
            let pt = |p: &humbert_core::geom::PPoint| -> Vec<String> {
                p.coords().iter().map(ToString::to_string).collect()
            };
            json!({
                "label": l.class.label(),
                "kind": if l.class.is_odd() { "node" } else { "trope" },
                "t0": pt(l.line.p()),
                "t1": pt(l.line.q()),
            })
        })
        .collect();
    r.data(&name("lines"), line_data);
    r.data(&name("incidence"), c.to_file());
    r.data(&name("rosenhain_count"), tetras);
    Ok(())
}

pub fn lines(args: &[String], settings: &Settings) -> Outcome {
    if args.len() != 6 {
        return Err(Invalid(format!(
            "lines needs 6 branch parameters, got {}",
            args.len()
        )));
    }
    let a = parse_all(args)?;
    let mut r = Builder::new(echo("lines", &a));
    let b = make_branch(std::array::from_fn(|j| a[j].clone()))?;
    basis_warning(&mut r, &b, settings);
    r.data("fprime", strings(b.fprime()));
    kummer_suite(&mut r, "", &b, &surface(&b), settings)?;
    Ok(r)
}

fn parse_matrix_file(text: &str) -> Result<RatMatrix, Invalid> {
    let rows: Vec<Vec<Rat>> = if text.trim_start().starts_with('{') {
        let file: CurveFile =
            serde_json::from_str(text).map_err(|e| Invalid(format!("curve file: {e}")))?;
        if file.n != 5 || file.coeffs.len() != 24 {
            return Err(Invalid(format!(
                "normalize needs n = 5 with 24 coefficients, got n = {} with {}",
                file.n,
                file.coeffs.len()
            )));
        }
        let v = parse_all(&file.coeffs)?;
        v.chunks(6).map(<[Rat]>::to_vec).collect()
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| parse_all(&l.split_whitespace().map(str::to_owned).collect::<Vec<_>>()))
            .collect::<Result<_, _>>()?
    };
    if rows.len() != 4 || rows.iter().any(|r| r.len() != 6) {
        return Err(Invalid("expected a 4 x 6 matrix".into()));
    }
    RatMatrix::from_rows(rows).map_err(Invalid::from)
}

pub fn normalize(path: &Path, settings: &Settings) -> Outcome {
    let bytes = std::fs::read(path).map_err(|e| Invalid(format!("{}: {e}", path.display())))?;
    let text =
        String::from_utf8(bytes.clone()).map_err(|_| Invalid("matrix file is not UTF-8".into()))?;
    let a = parse_matrix_file(&text)?;
    let mut r = Builder::new(format!("normalize {}", path.display()));
    r.digest_bytes(&bytes);
    let nf = match normal_form(&a) {
        Ok(nf) => nf,
        Err(e @ Error::GeneralPosition(_)) => {
            r.check("normal_form.general_position", false, json!(e.to_string()));
            return Ok(r);
        }
        Err(e) => {
            r.check("normal_form.computed", false, json!(e.to_string()));
            return Ok(r);
        }
    };
    r.check("normal_form.general_position", true, Value::Null);
    r.check(
        "normal_form.witness_residual_zero",
        verify_witness(&a, &nf)?,
        Value::Null,
    );
    basis_warning(&mut r, &nf.branch, settings);

    let s = kummer_of(&nf);
    let fourth = vandermonde_row(&nf.branch, 3);
    let mut on = Verdict::exact(true);
    for line in all_lines(&nf.branch) {
        on = on.and(verify_line(&line, &s, &fourth, settings)?.on_surface);
    }
    r.verdict("normal_form.kummer_contains_lines", on, Value::Null);

    let key = canonical_key(&nf.branch_set());
    r.data("branch", strings(nf.branch.a()));
    r.data("cubic_params", &nf.cubic_params);
    r.data("reparametrization", &nf.reparam);
    r.data(
        "witness",
        json!({
            "r": nf.witness.r.to_rows().iter().map(|row| strings(row)).collect::<Vec<_>>(),
            "mu": strings(&nf.witness.mu),
        }),
    );
    r.data("key", &key);
    Ok(r)
}

pub fn iso(n: usize, lhs: &[String], rhs: &[String]) -> Outcome {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::Parity(n).into());
    }
    for (side, v) in [("lhs", lhs), ("rhs", rhs)] {
        if v.len() != n - 2 {
            return Err(Invalid(format!(
                "{side} needs {} parameters for n = {n}, got {}",
                n - 2,
                v.len()
            )));
        }
    }
    let (l, rr) = (parse_all(lhs)?, parse_all(rhs)?);
    let mut r = Builder::new(format!(
        "iso --n {n} {} -- {}",
        strings(&l).join(" "),
        strings(&rr).join(" ")
    ));
    let ls = BranchSet::from_lambdas(&l)?;
    let rs = BranchSet::from_lambdas(&rr)?;
    let witness = is_isomorphic(&ls, &rs)?;
    let (kl, kr) = (canonical_key(&ls), canonical_key(&rs));
    r.check(
        "iso.keys_consistent",
        (kl == kr) == witness.is_some(),
        Value::Null,
    );
    if let Some(m) = &witness {
        r.check(
            "iso.witness_verified",
            apply(m, &ls).same_set(&rs),
            json!(m.to_string()),
        );
    }
    r.data("lhs", ls.points());
    r.data("rhs", rs.points());
    r.data("isomorphic", witness.is_some());
    r.data("witness", &witness);
    r.data("key_lhs", &kl);
    r.data("key_rhs", &kr);
    Ok(r)
}

pub fn verify_all(args: &[String], settings: &Settings) -> Outcome {
    if args.len() != 3 {
        return Err(Invalid(format!(
            "verify-all needs 3 parameters, got {}",
            args.len()
        )));
    }
    let lambdas = parse_all(args)?;
    let mut r = Builder::new(echo("verify-all", &lambdas));
    let form = LambdaForm::new(lambdas.clone())?;
    let x = from_lambda(&form)?;
    r.check("curve.smooth", true, Value::Null);

    let inv = invariants_of_type(5)?;
    r.check(
        "invariants.type5",
        (inv.degree, inv.genus, inv.moduli_dim) == (16, 17, 3),
        json!(inv),
    );
    r.check(
        "invariants.genus_from_degree",
        inv.degree * inv.degree / 16 + 1 == inv.genus,
        Value::Null,
    );

    let nf = normal_form(x.coeffs())?;
    let reference = BranchSet::from_lambdas(&lambdas)?;
    r.check(
        "normal_form.witness_residual_zero",
        verify_witness(x.coeffs(), &nf)?,
        Value::Null,
    );
    let key = canonical_key(&nf.branch_set());
    r.check(
        "normal_form.key_matches",
        key == canonical_key(&reference),
        json!(key),
    );
    basis_warning(&mut r, &nf.branch, settings);
    r.data("normal_form_branch", strings(nf.branch.a()));

    kummer_suite(&mut r, "kummer.", &nf.branch, &kummer_of(&nf), settings)?;

    let tropes = recover_fourth_quadric(&nf.branch, ConstraintSet::Tropes);
    let nodes = recover_fourth_quadric(&nf.branch, ConstraintSet::Nodes);
    match (&tropes, &nodes) {
        (Ok(t), Ok(n)) => {
            r.check(
                "recovery.rank",
                t.rank == 16 && n.rank == 16,
                json!([t.rank, n.rank]),
            );
            r.check(
                "recovery.mixed_vanish",
                t.mixed_all_zero && n.mixed_all_zero,
                Value::Null,
            );
            let fp = nf.branch.fprime();
            let formula = (0..5).all(|k| t.d5_coeffs[k] == -&fp[5] / &fp[k]);
            r.check("recovery.d5_formula", formula, json!(strings(&t.d5_coeffs)));
            r.check("recovery.tropes_equal_nodes", t.same_space(n), Value::Null);
        }
        _ => {
            let msg = [&tropes, &nodes]
                .iter()
                .filter_map(|s| s.as_ref().err().map(ToString::to_string))
                .collect::<Vec<_>>();
            r.check("recovery.rank", false, json!(msg));
        }
    }

    match branch_locus(&form) {
        Ok(locus) => {
            let counts: Vec<usize> = locus.fibers.iter().map(|f| f.points.len()).collect();
            r.check(
                "ramification.sixteen_per_hyperplane",
                counts.iter().all(|&c| c == 16),
                json!(counts),
            );
            let residual = locus
                .fibers
                .iter()
                .map(|f| f.max_residual)
                .fold(0.0, f64::max);
            r.check(
                "ramification.residual",
                residual < settings.tol.eps_zero,
                json!(residual),
            );
            let got = locus.as_branch_set()?;
            r.check(
                "branch_locus.values",
                got.same_set(&reference),
                json!(locus.values),
            );
        }
        Err(e) => r.check(
            "ramification.sixteen_per_hyperplane",
            false,
            json!(e.to_string()),
        ),
    }

    let config = incidence(&nf.branch, settings)?.config;
    let theta = theta_report(&x, &config)?;
    r.check(
        "theta.odd_count",
        theta.odd_count == 26,
        json!(theta.odd_count),
    );
    r.check(
        "theta.vanishing_count",
        theta.vanishing_count == 80,
        json!(theta.vanishing_count),
    );
    r.check("theta.degrees", theta.all_hold(), Value::Null);
    r.data("theta", &theta);

    let genera = [vec![0], vec![0, 1], vec![0, 1, 2]]
        .into_iter()
        .map(|g| CoveringSpec::new(g).and_then(|c| quotient_genus(&c)))
        .collect::<Result<Vec<_>, _>>()?;
    r.check("theta.quotient_genera", genera == [5, 1, 0], json!(genera));
    let ledger = rosenhain_ledger();
    r.check(
        "theta.intersection_ledger",
        ledger.checks.iter().all(|c| c.holds()),
        json!(ledger),
    );

    let rec = moduli_map_f(&lambdas, 5)?;
    r.check("moduli.keys_agree", rec.keys_agree(), json!(rec.he_curve));
    r.check(
        "moduli.genera",
        (rec.g, rec.he_genus) == (2, 17),
        json!([rec.g, rec.he_genus]),
    );
    Ok(r)
}

pub fn fixtures(count: usize, out: &Path, seed: u64) -> Outcome {
    if count == 0 {
        return Err(Invalid("count must be at least 1".into()));
    }
    let mut r = Builder::new(format!("fixtures --count {count} --out {}", out.display()));
    let corpus = sample(seed, count);
    let file: CorpusFile = corpus.to_file();
    let text = serde_json::to_string_pretty(&file).expect("corpus serializes") + "\n";
    std::fs::write(out, &text).map_err(|e| Invalid(format!("{}: {e}", out.display())))?;
    r.digest_bytes(&seed.to_le_bytes());
    let valid = corpus.sextuples.iter().all(|a| {
        make_branch(a.clone())
            .map(|b| b.basis().is_independent())
            .unwrap_or(false)
    });
    r.check(
        "fixtures.count",
        corpus.sextuples.len() == count && corpus.triples.len() == count,
        json!(count),
    );
    r.check("fixtures.branch_valid", valid, Value::Null);
    r.data("path", out.display().to_string());
    r.data("degenerate", corpus.degenerate.len());
    Ok(r)
}
