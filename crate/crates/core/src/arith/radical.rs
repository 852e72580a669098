//! The formal radical algebra Q[s_0..s_5] / (s_j^2 - b_j).
//!
//! Elements are sparse maps from subsets S of {0..5} (bit masks) to rational
//! coefficients, each key standing for the monomial prod_{j in S} s_j. Products
//! combine keys by symmetric difference and pick up prod_{j in S & T} b_j.
//!
//! Exact zero testing is coefficient inspection. It is always sound for
//! "zero" (a formal zero vanishes under every embedding). It is complete when
//! no two monomials of the element have a rational ratio under the embedding,
//! which holds for every element once the basis is independent, and for
//! single-monomial elements over any basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::numeric::{CNum, Mode, Settings, Verdict};
use super::rat::{is_rational_square, to_f64, Rat};
use crate::error::{Error, Result};

pub const GENERATORS: usize = 6;
pub const DIM: usize = 1 << GENERATORS;

/// Subset of {0..5} as a bit mask.
pub type Mask = u8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadBasis {
    squares: [Rat; GENERATORS],
    /// prod_{j in U} b_j for every mask U.
    products: Vec<Rat>,
    /// bit U set iff U is nonempty and prod_{j in U} b_j is a rational square
    relations: u64,
}

impl RadBasis {
    pub fn new(squares: [Rat; GENERATORS]) -> Result<Arc<Self>> {
        if let Some(j) = squares.iter().position(Zero::is_zero) {
            return Err(Error::ZeroSquare(j));
        }
        let mut products = vec![Rat::one(); DIM];
        for mask in 1..DIM {
            let low = mask.trailing_zeros() as usize;
            products[mask] = &products[mask & (mask - 1)] * &squares[low];
        }
        let relations = (1..DIM)
            .filter(|&m| is_rational_square(&products[m]))
            .fold(0u64, |acc, m| acc | (1 << m));
        Ok(Arc::new(RadBasis {
            squares,
            products,
            relations,
        }))
    }

    pub fn squares(&self) -> &[Rat; GENERATORS] {
        &self.squares
    }

    pub fn product(&self, mask: Mask) -> &Rat {
        &self.products[mask as usize]
    }

    /// No nonempty subset product is a rational square.
    pub fn is_independent(&self) -> bool {
        self.relations == 0
    }

    /// Nonempty subsets whose square-product is a rational square.
    pub fn relations(&self) -> Vec<Mask> {
        (1..DIM as u8).filter(|&m| self.is_relation(m)).collect()
    }

    pub fn is_relation(&self, mask: Mask) -> bool {
        mask != 0 && self.relations & (1u64 << mask) != 0
    }

    /// Principal square roots of the b_j.
    pub fn principal_roots(&self) -> [CNum; GENERATORS] {
        std::array::from_fn(|j| CNum::new(to_f64(&self.squares[j]), 0.0).sqrt())
    }
}

/// The 63 subset-product perfect-square tests.
pub fn rad_independent(basis: &RadBasis) -> bool {
    basis.is_independent()
}

#[derive(Clone, PartialEq, Eq)]
pub struct RadElem {
    basis: Arc<RadBasis>,
    coeffs: BTreeMap<Mask, Rat>,
}

fn same_basis(a: &Arc<RadBasis>, b: &Arc<RadBasis>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl RadElem {
    pub fn zero(basis: &Arc<RadBasis>) -> Self {
        RadElem {
            basis: Arc::clone(basis),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(basis: &Arc<RadBasis>, r: Rat) -> Self {
        Self::monomial(basis, 0, r)
    }

    pub fn one(basis: &Arc<RadBasis>) -> Self {
        Self::scalar(basis, Rat::one())
    }

    /// The generator s_j.
    pub fn generator(basis: &Arc<RadBasis>, j: usize) -> Self {
        assert!(j < GENERATORS, "generator index {j} out of range");
        Self::monomial(basis, 1 << j, Rat::one())
    }

    /// `coeff * prod_{j in mask} s_j`
    pub fn monomial(basis: &Arc<RadBasis>, mask: Mask, coeff: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(mask & (DIM as u8 - 1), coeff);
        }
        RadElem {
            basis: Arc::clone(basis),
            coeffs,
        }
    }

    pub fn basis(&self) -> &Arc<RadBasis> {
        &self.basis
    }

    pub fn coeff(&self, mask: Mask) -> Rat {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Rat)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// All 64 coefficients vanish.
    pub fn is_formally_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Some(r)` when the element is the rational `r`.
    pub fn as_scalar(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// No two support monomials have a rational ratio under the embedding,
    /// so coefficient inspection decides zero-ness exactly.
    pub fn is_free(&self) -> bool {
        if self.basis.is_independent() {
            return true;
        }
        let keys: Vec<Mask> = self.coeffs.keys().copied().collect();
        keys.iter().enumerate().all(|(i, &a)| {
            keys[i + 1..]
                .iter()
                .all(|&b| !self.basis.is_relation(a ^ b))
        })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return RadElem::zero(&self.basis);
        }
        RadElem {
            basis: Arc::clone(&self.basis),
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    pub fn try_add(&self, other: &RadElem) -> Result<RadElem> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &RadElem) -> Result<RadElem> {
        self.combine(other, true)
    }

    fn combine(&self, other: &RadElem, subtract: bool) -> Result<RadElem> {
        if !same_basis(&self.basis, &other.basis) {
            return Err(Error::BasisMismatch);
        }
        let mut coeffs = self.coeffs.clone();
        for (m, c) in &other.coeffs {
            let entry = coeffs.entry(*m).or_insert_with(Rat::zero);
            if subtract {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                coeffs.remove(m);
            }
        }
        Ok(RadElem {
            basis: Arc::clone(&self.basis),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &RadElem) -> Result<RadElem> {
        if !same_basis(&self.basis, &other.basis) {
            return Err(Error::BasisMismatch);
        }
        let mut coeffs: BTreeMap<Mask, Rat> = BTreeMap::new();
        for (s, c) in &self.coeffs {
            for (t, d) in &other.coeffs {
                let shared = s & t;
                let mut term = c * d;
                if shared != 0 {
                    term *= self.basis.product(shared);
                }
                let entry = coeffs.entry(s ^ t).or_insert_with(Rat::zero);
                *entry += term;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(RadElem {
            basis: Arc::clone(&self.basis),
            coeffs,
        })
    }

    /// Evaluates under the principal square roots.
    pub fn embed(&self) -> CNum {
        self.embed_unchecked(&self.basis.principal_roots())
    }

    fn embed_unchecked(&self, roots: &[CNum; GENERATORS]) -> CNum {
        let mut monomials = [CNum::new(1.0, 0.0); DIM];
        for mask in 1..DIM {
            let low = mask.trailing_zeros() as usize;
            monomials[mask] = monomials[mask & (mask - 1)] * roots[low];
        }
        self.coeffs
            .iter()
            .map(|(m, c)| monomials[*m as usize] * to_f64(c))
            .sum()
    }
}

/// Product in the radical algebra.
pub fn rad_mul(x: &RadElem, y: &RadElem) -> Result<RadElem> {
    x.try_mul(y)
}

/// Numeric evaluation with an explicit root choice; each root must square to
/// its b_j within `eps_zero` (relative to max(1, |b_j|)).
pub fn rad_embed(x: &RadElem, roots: &[CNum; GENERATORS], eps_zero: f64) -> Result<CNum> {
    for (j, (r, b)) in roots.iter().zip(x.basis.squares()).enumerate() {
        let b = to_f64(b);
        if (r * r - b).norm() > eps_zero * b.abs().max(1.0) {
            return Err(Error::InconsistentRoots(j));
        }
    }
    Ok(x.embed_unchecked(roots))
}

/// Zero test under the given policy.
///
/// Exact mode refuses elements whose zero-ness is not decided by their
/// coefficients (dependent basis and related monomials in the support);
/// auto mode falls back to the embedding for those.
pub fn rad_is_zero(x: &RadElem, settings: &Settings) -> Result<Verdict> {
    let numeric = || Verdict::numeric(x.embed().norm() < settings.tol.eps_zero);
    match settings.mode {
        Mode::Numeric => Ok(numeric()),
        Mode::Exact if x.is_free() => Ok(Verdict::exact(x.is_formally_zero())),
        Mode::Exact => Err(Error::DegenerateBasis),
        Mode::Auto if x.is_free() => Ok(Verdict::exact(x.is_formally_zero())),
        Mode::Auto => Ok(numeric()),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&RadElem> for &RadElem {
            type Output = RadElem;

            /// Panics when the operands live over different bases.
            fn $method(self, rhs: &RadElem) -> RadElem {
                self.$inner(rhs)
                    .expect("radical elements over different bases")
            }
        }

        impl $trait<RadElem> for RadElem {
            type Output = RadElem;

            fn $method(self, rhs: RadElem) -> RadElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &RadElem {
    type Output = RadElem;

    fn neg(self) -> RadElem {
        RadElem {
            basis: Arc::clone(&self.basis),
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for RadElem {
    type Output = RadElem;

    fn neg(self) -> RadElem {
        -&self
    }
}

impl fmt::Display for RadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (mask, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for j in 0..GENERATORS {
                if mask & (1 << j) != 0 {
                    write!(f, "*s{j}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadElem({self})")
    }
}
