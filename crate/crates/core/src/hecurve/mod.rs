//! Humbert-Edge curves: complete intersections of n-1 diagonal quadrics in
//! P^n, written as an (n-1) x (n+1) matrix acting on y_j = x_j^2.

mod normal_form;
mod ramification;
mod recovery;

pub use normal_form::{kummer_of, normal_form, vandermonde, verify_witness, NormalForm, Witness};
pub use ramification::{
    branch_locus, branch_locus_of, branch_map_value, ramification_points, reconstruct, BranchLocus,
    RamificationSet,
};
pub use recovery::{
    complete_d5, constraint_matrix, recover_fourth_quadric, restricted_leading_coeff,
    ConstraintSet, QuadricSolution,
};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{combinations, parse_rat, Rat, RatMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HECurve {
    n: usize,
    coeffs: RatMatrix,
}

impl HECurve {
    /// Checks shape and that every maximal minor is nonzero.
    pub fn new(coeffs: RatMatrix) -> Result<Self> {
        let n = coeffs.cols().saturating_sub(1);
        if n < 4 {
            return Err(Error::InvalidParameter(format!(
                "type n must be at least 4, got {n}"
            )));
        }
        if coeffs.rows() != n - 1 {
            return Err(Error::DimensionMismatch {
                expected: n - 1,
                found: coeffs.rows(),
            });
        }
        if let Some(cols) = singular_minor(&coeffs) {
            return Err(Error::Singular(cols));
        }
        Ok(HECurve { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &RatMatrix {
        &self.coeffs
    }

    pub fn to_file(&self, lambdas: Option<&LambdaForm>) -> CurveFile {
        CurveFile {
            n: self.n,
            coeffs: (0..self.coeffs.rows())
                .flat_map(|i| {
                    self.coeffs
                        .row(i)
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                })
                .collect(),
            lambdas: lambdas.map(|f| f.lambdas().iter().map(ToString::to_string).collect()),
        }
    }

    pub fn from_file(file: &CurveFile) -> Result<Self> {
        let (rows, cols) = (file.n.saturating_sub(1), file.n + 1);
        if file.coeffs.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} coefficients for n = {}, found {}",
                rows * cols,
                file.n,
                file.coeffs.len()
            )));
        }
        let values = file
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        let curve = HECurve::new(RatMatrix::from_fn(rows, cols, |i, j| {
            values[i * cols + j].clone()
        }))?;
        if let Some(ls) = &file.lambdas {
            let form = LambdaForm::new(ls.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?)?;
            if from_lambda(&form)? != curve {
                return Err(Error::Parse("lambdas disagree with coefficients".into()));
            }
        }
        Ok(curve)
    }
}

/// First set of n-1 columns with vanishing determinant.
pub fn singular_minor(m: &RatMatrix) -> Option<Vec<usize>> {
    combinations(m.cols(), m.rows()).into_iter().find(|cols| {
        m.select_columns(cols)
            .det()
            .map(|d| d.is_zero())
            .unwrap_or(true)
    })
}

/// Curve interchange format: coefficients row-major as "p/q" strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    pub n: usize,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<String>>,
}

/// Parameters lambda_1..lambda_{n-2} of the normal form
/// x0^2 + x1^2 + x2^2 = 0, lambda_k x0^2 + x1^2 + x_{k+2}^2 = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaForm {
    lambdas: Vec<Rat>,
}

impl LambdaForm {
    pub fn new(lambdas: Vec<Rat>) -> Result<Self> {
        if lambdas.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least 2 parameters, got {}",
                lambdas.len()
            )));
        }
        for (k, l) in lambdas.iter().enumerate() {
            if l.is_zero() || l.is_one() {
                return Err(Error::InvalidParameter(format!(
                    "lambda_{} = {l} is excluded",
                    k + 1
                )));
            }
            if lambdas[..k].contains(l) {
                return Err(Error::Duplicate(format!("lambda = {l}")));
            }
        }
        Ok(LambdaForm { lambdas })
    }

    pub fn lambdas(&self) -> &[Rat] {
        &self.lambdas
    }

    pub fn n(&self) -> usize {
        self.lambdas.len() + 2
    }
}

pub fn from_lambda(form: &LambdaForm) -> Result<HECurve> {
    let n = form.n();
    let coeffs = RatMatrix::from_fn(n - 1, n + 1, |i, j| {
        let hit = match (i, j) {
            (0, 0..=2) => true,
            (0, _) => false,
            (k, 0) => return form.lambdas[k - 1].clone(),
            (_, 1) => true,
            (k, j) => j == k + 2,
        };
        if hit {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    HECurve::new(coeffs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TypeInvariants {
    pub degree: u64,
    pub genus: u64,
    pub moduli_dim: u64,
}

/// Degree 2^{n-1}, genus 2^{n-2}(n-3) + 1, moduli dimension n-2.
pub fn invariants_of_type(n: usize) -> Result<TypeInvariants> {
    if !(4..=60).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "type n must lie in 4..=60, got {n}"
        )));
    }
    let n64 = n as u64;
    Ok(TypeInvariants {
        degree: 1 << (n - 1),
        genus: (1u64 << (n - 2)) * (n64 - 3) + 1,
        moduli_dim: n64 - 2,
    })
}
