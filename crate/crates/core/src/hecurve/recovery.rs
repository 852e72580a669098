//! Recovering the fourth quadric of the normal form from the lines of the
//! Kummer surface: a quadric meeting each line in at most one point has
//! vanishing t^2 coefficient along it.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::kummer::{BranchData, SignClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConstraintSet {
    Tropes,
    Nodes,
}

impl ConstraintSet {
    pub fn classes(self) -> Vec<SignClass> {
        match self {
            ConstraintSet::Tropes => SignClass::tropes(),
            ConstraintSet::Nodes => SignClass::nodes(),
        }
    }
}

/// Unknowns: the 15 products u_ij = s_i s_j d_ij (i < j, lexicographic),
/// then d_5, then d_0..d_4.
pub const UNKNOWNS: usize = 21;
const MIXED: usize = 15;
const D5: usize = 15;
const FREE: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricSolution {
    pub constraints: ConstraintSet,
    pub rank: usize,
    /// Dimension of the solution space.
    pub nullity: usize,
    /// Every solution has u_ij = 0.
    pub mixed_all_zero: bool,
    /// d_5 = sum_k d5_coeffs[k] * d_k over k = 0..4.
    pub d5_coeffs: Vec<Rat>,
    pub rref: RatMatrix,
}

impl QuadricSolution {
    /// Same reduced row form, hence the same solution space.
    pub fn same_space(&self, other: &QuadricSolution) -> bool {
        self.rref == other.rref
    }
}

/// One row per line: sum_j d_j / b_j + sum_{i<j} eps_i eps_j u_ij / (b_i b_j).
pub fn constraint_matrix(b: &BranchData, set: ConstraintSet) -> RatMatrix {
    let fp = b.fprime();
    let pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
        .collect();
    let classes = set.classes();
    RatMatrix::from_fn(classes.len(), UNKNOWNS, |r, c| {
        let cls = classes[r];
        match c {
            c if c < MIXED => {
                let (i, j) = pairs[c];
                let sign = Rat::from_integer((cls.sign(i) * cls.sign(j)).into());
                sign / (&fp[i] * &fp[j])
            }
            D5 => fp[5].recip(),
            c => fp[c - FREE].recip(),
        }
    })
}

pub fn recover_fourth_quadric(b: &BranchData, set: ConstraintSet) -> Result<QuadricSolution> {
    let m = constraint_matrix(b, set);
    let rref = m.rref();
    let rank = rref.pivots.len();
    if rank != 16 || rref.pivots != (0..16).collect::<Vec<_>>() {
        return Err(Error::Anomaly(format!(
            "{set:?} system has rank {rank} with pivots {:?}",
            rref.pivots
        )));
    }
    let r = &rref.matrix;
    let mixed_all_zero = (0..MIXED).all(|row| (FREE..UNKNOWNS).all(|c| r[(row, c)].is_zero()));
    let d5_coeffs = (FREE..UNKNOWNS).map(|c| -r[(D5, c)].clone()).collect();
    Ok(QuadricSolution {
        constraints: set,
        rank,
        nullity: UNKNOWNS - rank,
        mixed_all_zero,
        d5_coeffs,
        rref: rref.matrix,
    })
}

/// The t^2 coefficient of sum_j d_j x_j^2 along any of the 32 lines; the
/// signs drop out since eps_j^2 = 1.
pub fn restricted_leading_coeff(b: &BranchData, d: &[Rat; 6]) -> Rat {
    d.iter().zip(b.fprime()).map(|(dj, f)| dj / f).sum()
}

/// The d_5 making (d_0..d_4, d_5) a member of the recovered family.
pub fn complete_d5(sol: &QuadricSolution, d: &[Rat; 5]) -> Rat {
    sol.d5_coeffs.iter().zip(d).map(|(c, x)| c * x).sum()
}
