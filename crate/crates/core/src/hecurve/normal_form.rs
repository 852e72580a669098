//! Reduction of a diagonal net of four quadrics in P^5 to Vandermonde form
//! through the twisted cubic on its six column points.

use num_traits::{One, Zero};

use crate::arith::{combinations, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::kummer::{make_branch, surface, BranchData, KummerSurface};
use crate::moduli::{BranchSet, MobiusMap, P1Point};

/// R * A * diag(mu) = Vandermonde(a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub r: RatMatrix,
    pub mu: Vec<Rat>,
}

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub branch: BranchData,
    /// Parameters of the six columns on the cubic before reparametrizing.
    pub cubic_params: Vec<P1Point>,
    /// Reparametrization making all six parameters finite.
    pub reparam: MobiusMap,
    pub witness: Witness,
}

impl NormalForm {
    pub fn branch_set(&self) -> BranchSet {
        BranchSet::from_finite(self.branch.a()).expect("branch data entries are distinct")
    }
}

/// Rows a_j^i for i = 0..rows.
pub fn vandermonde(a: &[Rat], rows: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, a.len(), |i, j| num_traits::pow(a[j].clone(), i))
}

pub fn normal_form(a: &RatMatrix) -> Result<NormalForm> {
    if a.rows() != 4 || a.cols() != 6 {
        return Err(Error::DimensionMismatch {
            expected: 24,
            found: a.rows() * a.cols(),
        });
    }
    for cols in combinations(6, 4) {
        if a.select_columns(&cols).det()?.is_zero() {
            return Err(Error::GeneralPosition(format!(
                "columns {cols:?} are dependent"
            )));
        }
    }

    // send columns 0..3 to the coordinate points and column 4 to (1:1:1:1)
    let frame = a.select_columns(&[0, 1, 2, 3]);
    let c = frame.solve(&a.column(4))?;
    let to_standard = frame.scale_columns(&c).inverse()?;
    let q = to_standard.mul_vec(&a.column(5))?;

    // cubic t -> (1/(t - alpha_r)): alpha_r at e_r, infinity at the unit
    // point, 0 at q
    let alphas: Vec<Rat> = q.iter().map(|x| -x.recip()).collect();
    let mut cubic_params: Vec<P1Point> = alphas.iter().cloned().map(P1Point::Finite).collect();
    cubic_params.push(P1Point::Infinity);
    cubic_params.push(P1Point::Finite(Rat::zero()));

    // t -> 1/(t - shift) with shift the least positive integer not used
    let shift = (1i64..)
        .map(crate::arith::rat)
        .find(|s| !alphas.contains(s))
        .expect("only four values are excluded");
    let reparam = MobiusMap::new(Rat::zero(), Rat::one(), Rat::one(), -shift)?;
    let params: Vec<Rat> = cubic_params
        .iter()
        .map(|p| {
            reparam
                .apply(p)
                .as_finite()
                .cloned()
                .expect("shift avoids every parameter")
        })
        .collect();
    let branch = make_branch(std::array::from_fn(|j| params[j].clone()))?;
    let witness = solve_witness(a, branch.a())?;
    Ok(NormalForm {
        branch,
        cubic_params,
        reparam,
        witness,
    })
}

/// Unknowns: R row-major (16), then w_j with R A_j = w_j V_j; mu_j = 1/w_j.
fn solve_witness(a: &RatMatrix, params: &[Rat]) -> Result<Witness> {
    let v = vandermonde(params, 4);
    let system = RatMatrix::from_fn(24, 22, |eq, unk| {
        let (i, j) = (eq / 6, eq % 6);
        if unk < 16 {
            let (ri, k) = (unk / 4, unk % 4);
            if ri == i {
                a[(k, j)].clone()
            } else {
                Rat::zero()
            }
        } else if unk - 16 == j {
            -v[(i, j)].clone()
        } else {
            Rat::zero()
        }
    });
    let null = system.nullspace();
    let sol = null
        .first()
        .ok_or_else(|| Error::Anomaly("no projective equivalence to Vandermonde form".into()))?;
    if sol[16..].iter().any(Zero::is_zero) {
        return Err(Error::Anomaly("witness scaling has a zero entry".into()));
    }
    let r = RatMatrix::from_fn(4, 4, |i, k| sol[i * 4 + k].clone());
    let mu = sol[16..].iter().map(Rat::recip).collect();
    Ok(Witness { r, mu })
}

/// Exact check of R * A * diag(mu) = Vandermonde(a) with R invertible.
pub fn verify_witness(a: &RatMatrix, nf: &NormalForm) -> Result<bool> {
    let w = &nf.witness;
    if w.r.det()?.is_zero() {
        return Ok(false);
    }
    let lhs = w.r.mul(a)?.scale_columns(&w.mu);
    Ok(lhs == vandermonde(nf.branch.a(), 4))
}

/// Rows 0..2 of the Vandermonde net.
pub fn kummer_of(nf: &NormalForm) -> KummerSurface {
    surface(&nf.branch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Settings};
    use crate::hecurve::{from_lambda, LambdaForm};
    use crate::kummer::{all_lines, vandermonde_row, verify_line};
    use crate::moduli::{canonical_key, is_isomorphic};

    fn lambda_curve(l: [i64; 3]) -> RatMatrix {
        from_lambda(&LambdaForm::new(l.map(rat).to_vec()).unwrap())
            .unwrap()
            .coeffs()
            .clone()
    }

    #[test]
    fn lambda_curve_reduces_to_its_branch_set() {
        let a = lambda_curve([2, 3, 4]);
        let nf = normal_form(&a).unwrap();
        assert!(verify_witness(&a, &nf).unwrap());
        let reference = BranchSet::from_lambdas(&[rat(2), rat(3), rat(4)]).unwrap();
        assert!(is_isomorphic(&nf.branch_set(), &reference)
            .unwrap()
            .is_some());
        assert_eq!(canonical_key(&nf.branch_set()), canonical_key(&reference));
    }

    #[test]
    fn vandermonde_is_a_fixed_class() {
        let a = vandermonde(&(0..6).map(rat).collect::<Vec<_>>(), 4);
        let nf = normal_form(&a).unwrap();
        assert!(verify_witness(&a, &nf).unwrap());
        let reference = BranchSet::from_finite(&(0..6).map(rat).collect::<Vec<_>>()).unwrap();
        assert_eq!(canonical_key(&nf.branch_set()), canonical_key(&reference));
    }

    #[test]
    fn general_position_required() {
        let mut a = lambda_curve([2, 3, 4]);
        for i in 0..4 {
            a[(i, 5)] = a[(i, 4)].clone() * rat(3);
        }
        assert!(matches!(normal_form(&a), Err(Error::GeneralPosition(_))));
    }

    #[test]
    fn kummer_of_normal_form_carries_the_lines() {
        let nf = normal_form(&lambda_curve([2, 3, 4])).unwrap();
        let s = kummer_of(&nf);
        assert_eq!(s.quadrics()[0].diag(), vec![rat(1); 6].as_slice());
        let fourth = vandermonde_row(&nf.branch, 3);
        for line in all_lines(&nf.branch) {
            let check = verify_line(&line, &s, &fourth, &Settings::default()).unwrap();
            assert!(check.on_surface.holds && check.fourth_row_is_one.holds);
        }
    }
}
