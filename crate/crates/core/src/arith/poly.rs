use std::sync::Arc;

use num_traits::Zero;

use super::numeric::{Settings, Verdict};
use super::radical::{rad_is_zero, RadBasis, RadElem};
use super::rat::Rat;
use crate::error::Result;

/// Univariate polynomial in a parameter t with radical-algebra coefficients.
/// Index = degree; trailing formal zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RadPoly {
    basis: Arc<RadBasis>,
    coeffs: Vec<RadElem>,
}

impl RadPoly {
    pub fn new(basis: &Arc<RadBasis>, mut coeffs: Vec<RadElem>) -> Self {
        while coeffs.last().is_some_and(RadElem::is_formally_zero) {
            coeffs.pop();
        }
        RadPoly {
            basis: Arc::clone(basis),
            coeffs,
        }
    }

    pub fn coeffs(&self) -> &[RadElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RadElem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| RadElem::zero(&self.basis))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_formally_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &Rat) -> RadElem {
        // Horner
        let mut acc = RadElem::zero(&self.basis);
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(t) + c;
        }
        acc
    }

    /// Every coefficient is zero under `settings`.
    pub fn is_zero(&self, settings: &Settings) -> Result<Verdict> {
        self.coeffs.iter().try_fold(Verdict::exact(true), |v, c| {
            Ok(v.and(rad_is_zero(c, settings)?))
        })
    }

    /// The polynomial equals the rational constant `value`.
    pub fn is_constant(&self, value: &Rat, settings: &Settings) -> Result<Verdict> {
        let mut shifted = self.coeffs.clone();
        if shifted.is_empty() {
            return Ok(Verdict::exact(value.is_zero()));
        }
        shifted[0] = &shifted[0] - &RadElem::scalar(&self.basis, value.clone());
        RadPoly::new(&self.basis, shifted).is_zero(settings)
    }
}
