//! Exact rationals, the formal radical algebra housing sqrt(f'(a_j)),
//! polynomials over it, rational linear algebra and the numeric embedding.

pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod radical;
pub mod rat;

pub use linalg::{combinations, RatMatrix, Rref};
pub use numeric::{CNum, Mode, Settings, Tolerance, Verdict};
pub use poly::RadPoly;
pub use radical::{rad_embed, rad_independent, rad_is_zero, rad_mul, Mask, RadBasis, RadElem};
pub use rat::{parse_rat, rat, ratio, Rat};
