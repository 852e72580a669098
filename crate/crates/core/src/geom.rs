//! Projective points, lines in P^5 and quadrics, with exact incidence by
//! minor expansion.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_traits::Zero;

use crate::arith::{
    combinations, rad_is_zero, CNum, Mode, RadBasis, RadElem, RadPoly, Rat, Settings, Verdict,
};
use crate::error::{Error, Result};

/// Point of P^n with radical-algebra coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPoint {
    coords: Vec<RadElem>,
}

impl PPoint {
    pub fn new(coords: Vec<RadElem>) -> Result<Self> {
        let Some(first) = coords.first() else {
            return Err(Error::ZeroPoint);
        };
        if coords.iter().any(|c| c.basis() != first.basis()) {
            return Err(Error::BasisMismatch);
        }
        if coords.iter().all(RadElem::is_formally_zero) {
            return Err(Error::ZeroPoint);
        }
        Ok(PPoint { coords })
    }

    pub fn from_rationals(basis: &Arc<RadBasis>, coords: &[Rat]) -> Result<Self> {
        PPoint::new(
            coords
                .iter()
                .map(|c| RadElem::scalar(basis, c.clone()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[RadElem] {
        &self.coords
    }

    pub fn basis(&self) -> &Arc<RadBasis> {
        self.coords[0].basis()
    }

    /// n for a point of P^n.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn embed(&self) -> NumPoint {
        NumPoint {
            coords: self.coords.iter().map(RadElem::embed).collect(),
        }
    }

    /// Projective equality: every 2x2 minor of the stacked coordinates vanishes.
    pub fn same_point(&self, other: &PPoint, settings: &Settings) -> Result<Verdict> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.len(),
                found: other.coords.len(),
            });
        }
        let mut verdict = Verdict::exact(true);
        for pair in combinations(self.coords.len(), 2) {
            let (i, j) = (pair[0], pair[1]);
            let m = &self.coords[i] * &other.coords[j] - &self.coords[j] * &other.coords[i];
            verdict = verdict.and(rad_is_zero(&m, settings)?);
            if !verdict.holds {
                break;
            }
        }
        Ok(verdict)
    }
}

/// Point with floating-point coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct NumPoint {
    pub coords: Vec<CNum>,
}

impl NumPoint {
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> NumPoint {
        let n = self.norm();
        NumPoint {
            coords: self.coords.iter().map(|c| c / n).collect(),
        }
    }
}

/// Coefficient access shared by diagonal and general quadrics.
pub trait QuadForm {
    /// Number of variables.
    fn vars(&self) -> usize;
    fn diag_coeff(&self, j: usize) -> &Rat;
    /// Coefficient of x_i x_j for i < j, `None` when structurally absent.
    fn mixed_coeff(&self, i: usize, j: usize) -> Option<&Rat>;
}

/// sum_j d_j x_j^2
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagQuadric {
    diag: Vec<Rat>,
}

impl DiagQuadric {
    pub fn new(diag: Vec<Rat>) -> Result<Self> {
        if diag.iter().all(Zero::is_zero) {
            return Err(Error::ZeroQuadric);
        }
        Ok(DiagQuadric { diag })
    }

    pub fn diag(&self) -> &[Rat] {
        &self.diag
    }
}

impl QuadForm for DiagQuadric {
    fn vars(&self) -> usize {
        self.diag.len()
    }

    fn diag_coeff(&self, j: usize) -> &Rat {
        &self.diag[j]
    }

    fn mixed_coeff(&self, _: usize, _: usize) -> Option<&Rat> {
        None
    }
}

/// sum_j d_j x_j^2 + sum_{i<j} d_ij x_i x_j
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenQuadric {
    diag: Vec<Rat>,
    /// (0,1), (0,2), ..., (n-2, n-1)
    mixed: Vec<Rat>,
}

impl GenQuadric {
    pub fn new(diag: Vec<Rat>, mixed: Vec<Rat>) -> Result<Self> {
        let n = diag.len();
        if mixed.len() != n * (n - 1) / 2 {
            return Err(Error::DimensionMismatch {
                expected: n * (n - 1) / 2,
                found: mixed.len(),
            });
        }
        if diag.iter().chain(&mixed).all(Zero::is_zero) {
            return Err(Error::ZeroQuadric);
        }
        Ok(GenQuadric { diag, mixed })
    }

    pub fn diag(&self) -> &[Rat] {
        &self.diag
    }

    pub fn mixed(&self) -> &[Rat] {
        &self.mixed
    }
}

/// Position of the pair (i, j), i < j, in the lexicographic pair order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl QuadForm for GenQuadric {
    fn vars(&self) -> usize {
        self.diag.len()
    }

    fn diag_coeff(&self, j: usize) -> &Rat {
        &self.diag[j]
    }

    fn mixed_coeff(&self, i: usize, j: usize) -> Option<&Rat> {
        Some(&self.mixed[pair_index(self.diag.len(), i, j)])
    }
}

impl From<DiagQuadric> for GenQuadric {
    fn from(q: DiagQuadric) -> Self {
        let n = q.diag.len();
        GenQuadric {
            diag: q.diag,
            mixed: vec![Rat::zero(); n * (n - 1) / 2],
        }
    }
}

fn check_vars<Q: QuadForm + ?Sized>(q: &Q, len: usize) -> Result<()> {
    if q.vars() != len {
        return Err(Error::DimensionMismatch {
            expected: q.vars(),
            found: len,
        });
    }
    Ok(())
}

/// Q(p) in the radical algebra.
pub fn quad_eval<Q: QuadForm + ?Sized>(q: &Q, p: &PPoint) -> Result<RadElem> {
    check_vars(q, p.coords.len())?;
    Ok(polar_raw(q, &p.coords, &p.coords).scale(&Rat::new(1.into(), 2.into())))
}

/// Q(x) in floating point.
pub fn quad_eval_numeric<Q: QuadForm + ?Sized>(q: &Q, p: &NumPoint) -> Result<CNum> {
    check_vars(q, p.coords.len())?;
    let x = &p.coords;
    let n = x.len();
    let mut acc = CNum::zero();
    for j in 0..n {
        acc += x[j] * x[j] * crate::arith::rat::to_f64(q.diag_coeff(j));
        for k in j + 1..n {
            if let Some(c) = q.mixed_coeff(j, k) {
                if !c.is_zero() {
                    acc += x[j] * x[k] * crate::arith::rat::to_f64(c);
                }
            }
        }
    }
    Ok(acc)
}

/// Polar form P(x, y) = Q(x + y) - Q(x) - Q(y).
fn polar_raw<Q: QuadForm + ?Sized>(q: &Q, x: &[RadElem], y: &[RadElem]) -> RadElem {
    let basis = x[0].basis();
    let two = Rat::from_integer(2.into());
    let mut acc = RadElem::zero(basis);
    for j in 0..x.len() {
        let d = q.diag_coeff(j);
        if !d.is_zero() {
            acc = &acc + &(&x[j] * &y[j]).scale(&(d * &two));
        }
        for k in j + 1..x.len() {
            if let Some(c) = q.mixed_coeff(j, k) {
                if !c.is_zero() {
                    let cross = &x[j] * &y[k] + &x[k] * &y[j];
                    acc = &acc + &cross.scale(c);
                }
            }
        }
    }
    acc
}

/// Line of P^5 through two points, with its fifteen 2x2 minors cached.
#[derive(Clone, Debug)]
pub struct LineP5 {
    p: PPoint,
    q: PPoint,
    /// minors[pair_index(6, i, j)] = p_i q_j - p_j q_i
    minors: Vec<RadElem>,
    numeric: [NumPoint; 2],
}

impl LineP5 {
    pub fn new(p: PPoint, q: PPoint) -> Result<Self> {
        for pt in [&p, &q] {
            if pt.coords.len() != 6 {
                return Err(Error::DimensionMismatch {
                    expected: 6,
                    found: pt.coords.len(),
                });
            }
        }
        if p.basis() != q.basis() {
            return Err(Error::BasisMismatch);
        }
        let minors: Vec<RadElem> = combinations(6, 2)
            .into_iter()
            .map(|c| &p.coords[c[0]] * &q.coords[c[1]] - &p.coords[c[1]] * &q.coords[c[0]])
            .collect();
        if minors.iter().all(RadElem::is_formally_zero) {
            return Err(Error::DegenerateLine);
        }
        let numeric = [p.embed(), q.embed()];
        Ok(LineP5 {
            p,
            q,
            minors,
            numeric,
        })
    }

    /// The line t -> base + t * dir.
    pub fn from_parametrization(base: Vec<RadElem>, dir: Vec<RadElem>) -> Result<Self> {
        let q: Vec<RadElem> = base.iter().zip(&dir).map(|(b, d)| b + d).collect();
        LineP5::new(PPoint::new(base)?, PPoint::new(q)?)
    }

    pub fn p(&self) -> &PPoint {
        &self.p
    }

    pub fn q(&self) -> &PPoint {
        &self.q
    }

    pub fn basis(&self) -> &Arc<RadBasis> {
        self.p.basis()
    }

    /// Point at parameter 0.
    pub fn base(&self) -> &[RadElem] {
        &self.p.coords
    }

    /// q - p
    pub fn direction(&self) -> Vec<RadElem> {
        self.q
            .coords
            .iter()
            .zip(&self.p.coords)
            .map(|(a, b)| a - b)
            .collect()
    }

    pub fn point_at(&self, t: &Rat) -> Vec<RadElem> {
        self.p
            .coords
            .iter()
            .zip(self.direction())
            .map(|(b, d)| b + &d.scale(t))
            .collect()
    }

    pub fn minors(&self) -> &[RadElem] {
        &self.minors
    }

    pub fn numeric_points(&self) -> &[NumPoint; 2] {
        &self.numeric
    }
}

/// Q restricted to the line, as a polynomial of degree <= 2 in t.
pub fn quad_on_line<Q: QuadForm + ?Sized>(q: &Q, line: &LineP5) -> Result<RadPoly> {
    check_vars(q, 6)?;
    let base = line.base();
    let dir = line.direction();
    let half = Rat::new(1.into(), 2.into());
    let c0 = polar_raw(q, base, base).scale(&half);
    let c1 = polar_raw(q, base, &dir);
    let c2 = polar_raw(q, &dir, &dir).scale(&half);
    Ok(RadPoly::new(line.basis(), vec![c0, c1, c2]))
}

/// Numerical rank of the stacked rows, after scaling each row to unit norm.
fn numeric_rank(rows: &[&NumPoint], eps: f64) -> usize {
    let ncols = rows[0].coords.len();
    let data: Vec<CNum> = rows.iter().flat_map(|r| r.normalized().coords).collect();
    let m = DMatrix::from_row_slice(rows.len(), ncols, &data);
    m.singular_values().iter().filter(|s| **s > eps).count()
}

/// The two lines share a point: the 4x6 matrix of both spanning pairs has
/// rank < 4.
///
/// Exact route: each 4x4 minor on columns C is expanded along the first two
/// rows, det = sum over 2-subsets A of C of +-M1[A] * M2[C \ A], using the
/// cached 2x2 minors of each line.
pub fn lines_meet(l1: &LineP5, l2: &LineP5, settings: &Settings) -> Result<Verdict> {
    if l1.basis() != l2.basis() {
        return Err(Error::BasisMismatch);
    }
    if settings.mode == Mode::Numeric {
        let [a, b] = &l1.numeric;
        let [c, d] = &l2.numeric;
        return Ok(Verdict::numeric(
            numeric_rank(&[a, b, c, d], settings.tol.eps_zero) < 4,
        ));
    }
    let mut verdict = Verdict::exact(true);
    for cols in combinations(6, 4) {
        let minor = laplace4(l1, l2, &cols);
        verdict = verdict.and(rad_is_zero(&minor, settings)?);
        if !verdict.holds {
            break;
        }
    }
    Ok(verdict)
}

fn laplace4(l1: &LineP5, l2: &LineP5, cols: &[usize]) -> RadElem {
    let mut acc = RadElem::zero(l1.basis());
    for top in combinations(4, 2) {
        let rest: Vec<usize> = (0..4).filter(|k| !top.contains(k)).collect();
        let m1 = &l1.minors[pair_index(6, cols[top[0]], cols[top[1]])];
        let m2 = &l2.minors[pair_index(6, cols[rest[0]], cols[rest[1]])];
        let term = m1 * m2;
        // sign (-1)^{(0 + 1) + (a0 + a1)}
        if (1 + top[0] + top[1]) % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// The two lines coincide: both spanning points of `l2` lie on `l1`.
pub fn lines_equal(l1: &LineP5, l2: &LineP5, settings: &Settings) -> Result<Verdict> {
    if l1.basis() != l2.basis() {
        return Err(Error::BasisMismatch);
    }
    if settings.mode == Mode::Numeric {
        let [a, b] = &l1.numeric;
        let [c, d] = &l2.numeric;
        return Ok(Verdict::numeric(
            numeric_rank(&[a, b, c, d], settings.tol.eps_zero) <= 2,
        ));
    }
    let mut verdict = Verdict::exact(true);
    for x in [&l2.p, &l2.q] {
        for c in combinations(6, 3) {
            let (i, j, k) = (c[0], c[1], c[2]);
            let m = |a, b| &l1.minors[pair_index(6, a, b)];
            let x = &x.coords;
            let det = &x[k] * m(i, j) - &x[j] * m(i, k) + &x[i] * m(j, k);
            verdict = verdict.and(rad_is_zero(&det, settings)?);
            if !verdict.holds {
                return Ok(verdict);
            }
        }
    }
    Ok(verdict)
}
