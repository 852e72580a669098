//! Fixed points of the coordinate involutions and the degree-2^{n} map
//! x -> -(x_1/x_0)^2 to the projective line.

use num_traits::{Signed, Zero};

use super::{from_lambda, HECurve, LambdaForm};
use crate::arith::rat::{approximate, to_f64};
use crate::arith::{CNum, Rat, Tolerance};
use crate::error::{Error, Result};
use crate::geom::NumPoint;
use crate::moduli::{BranchSet, P1Point, CP1};

/// The points of the curve on the hyperplane x_i = 0.
#[derive(Clone, Debug)]
pub struct RamificationSet {
    pub hyperplane: usize,
    /// Exact squares y_j = x_j^2 of the points, with y_i = 0.
    pub y: Vec<Rat>,
    pub points: Vec<NumPoint>,
    /// Largest quadric residual over all points, each row scaled by its
    /// largest coefficient.
    pub max_residual: f64,
}

impl RamificationSet {
    /// -y_1 / y_0 as a point of P^1.
    pub fn exact_branch_value(&self) -> P1Point {
        P1Point::from_pair(-self.y[1].clone(), self.y[0].clone())
            .expect("a generic section has y_0 or y_1 nonzero")
    }
}

pub fn ramification_points(x: &HECurve, i: usize) -> Result<RamificationSet> {
    let n = x.n();
    if i > n {
        return Err(Error::InvalidParameter(format!(
            "hyperplane index {i} out of range 0..={n}"
        )));
    }
    let others: Vec<usize> = (0..=n).filter(|&j| j != i).collect();
    let null = x.coeffs().select_columns(&others).nullspace();
    if null.len() != 1 {
        return Err(Error::DegenerateNet(i));
    }
    let mut y = vec![Rat::zero(); n + 1];
    for (k, &j) in others.iter().enumerate() {
        if null[0][k].is_zero() {
            return Err(Error::NonGeneric {
                hyperplane: i,
                index: j,
            });
        }
        y[j] = null[0][k].clone();
    }
    let roots: Vec<CNum> = y.iter().map(|v| CNum::new(to_f64(v), 0.0).sqrt()).collect();

    // the first nonzero coordinate keeps its sign: 2^{n-1} points
    let free = &others[1..];
    let mut points = Vec::with_capacity(1 << free.len());
    for signs in 0u64..(1 << free.len()) {
        let mut coords = roots.clone();
        for (b, &j) in free.iter().enumerate() {
            if signs & (1 << b) != 0 {
                coords[j] = -coords[j];
            }
        }
        points.push(NumPoint { coords }.normalized());
    }

    let mut max_residual = 0.0f64;
    for r in 0..x.coeffs().rows() {
        let row = x.coeffs().row(r);
        let scale = row.iter().map(|c| to_f64(&c.abs())).fold(0.0, f64::max);
        for p in &points {
            let value: CNum = row
                .iter()
                .zip(&p.coords)
                .map(|(c, z)| z * z * to_f64(c))
                .sum();
            max_residual = max_residual.max(value.norm() / scale);
        }
    }
    Ok(RamificationSet {
        hyperplane: i,
        y,
        points,
        max_residual,
    })
}

/// (-x_1^2 : x_0^2)
pub fn branch_map_value(p: &NumPoint, eps_zero: f64) -> Result<CP1> {
    let (x0, x1) = (p.coords[0], p.coords[1]);
    let scale = p.norm().max(f64::MIN_POSITIVE);
    if x0.norm() <= eps_zero * scale && x1.norm() <= eps_zero * scale {
        return Err(Error::ZeroPoint);
    }
    CP1::from_pair(-x1 * x1, x0 * x0, eps_zero).ok_or(Error::ZeroPoint)
}

/// Rational value within `eps` of a numeric point of P^1.
pub fn reconstruct(z: CP1, eps: f64) -> Option<P1Point> {
    match z {
        CP1::Infinity => Some(P1Point::Infinity),
        CP1::Finite(w) => {
            let slack = eps * (1.0 + w.re.abs());
            if w.im.abs() > slack {
                return None;
            }
            let r = approximate(w.re, 1_000_000)?;
            ((to_f64(&r) - w.re).abs() <= slack).then_some(P1Point::Finite(r))
        }
    }
}

/// The six fibers over the branch values, one per coordinate hyperplane.
#[derive(Clone, Debug)]
pub struct BranchLocus {
    pub fibers: Vec<RamificationSet>,
    /// Value attained on fiber i.
    pub values: Vec<P1Point>,
}

impl BranchLocus {
    pub fn as_branch_set(&self) -> Result<BranchSet> {
        BranchSet::new(self.values.clone())
    }

    pub fn point_count(&self) -> usize {
        self.fibers.iter().map(|f| f.points.len()).sum()
    }
}

/// Evaluates the branch map on every ramification point and requires it to
/// be constant on each fiber, agreeing with the exact value from y.
pub fn branch_locus_of(x: &HECurve, tol: &Tolerance) -> Result<BranchLocus> {
    let mut fibers = Vec::with_capacity(x.n() + 1);
    let mut values = Vec::with_capacity(x.n() + 1);
    for i in 0..=x.n() {
        let fiber = ramification_points(x, i)?;
        let exact = fiber.exact_branch_value();
        for p in &fiber.points {
            let z = branch_map_value(p, tol.eps_zero)?;
            let got = reconstruct(z, tol.eps_zero);
            if got.as_ref() != Some(&exact) {
                return Err(Error::Anomaly(format!(
                    "hyperplane {i}: branch value {z:?} does not match {exact}"
                )));
            }
        }
        values.push(exact);
        fibers.push(fiber);
    }
    Ok(BranchLocus { fibers, values })
}

pub fn branch_locus(form: &LambdaForm) -> Result<BranchLocus> {
    branch_locus_of(&from_lambda(form)?, &Tolerance::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn x234() -> HECurve {
        from_lambda(&LambdaForm::new(vec![rat(2), rat(3), rat(4)]).unwrap()).unwrap()
    }

    #[test]
    fn sixteen_points_per_hyperplane() {
        let x = x234();
        for i in 0..6 {
            let r = ramification_points(&x, i).unwrap();
            assert_eq!(r.points.len(), 16);
            assert!(r.max_residual < 1e-12, "i = {i}: {}", r.max_residual);
            assert!(r.points.iter().all(|p| p.coords[i].norm() == 0.0));
        }
    }

    #[test]
    fn fiber_values() {
        let x = x234();
        for (i, expect) in [(2, 1), (3, 2)] {
            let r = ramification_points(&x, i).unwrap();
            for p in &r.points {
                let z = branch_map_value(p, 1e-9).unwrap();
                assert_eq!(reconstruct(z, 1e-9), Some(P1Point::Finite(rat(expect))));
            }
        }
    }

    #[test]
    fn branch_value_edge_cases() {
        let one = CNum::new(1.0, 0.0);
        let zero = CNum::new(0.0, 0.0);
        let at = |c: Vec<CNum>| NumPoint { coords: c };
        assert_eq!(
            branch_map_value(&at(vec![zero, one, one]), 1e-9).unwrap(),
            CP1::Infinity
        );
        assert_eq!(
            branch_map_value(&at(vec![one, zero, one]), 1e-9).unwrap(),
            CP1::Finite(-zero)
        );
        assert_eq!(
            branch_map_value(&at(vec![zero, zero, one]), 1e-9).unwrap_err(),
            Error::ZeroPoint
        );
        assert_eq!(reconstruct(CP1::Finite(CNum::new(0.5, 1e-3)), 1e-9), None);
    }

    #[test]
    fn locus_table() {
        let form = LambdaForm::new(vec![rat(2), rat(3), rat(4)]).unwrap();
        let locus = branch_locus(&form).unwrap();
        let expect = [
            P1Point::Infinity,
            P1Point::Finite(rat(0)),
            P1Point::Finite(rat(1)),
            P1Point::Finite(rat(2)),
            P1Point::Finite(rat(3)),
            P1Point::Finite(rat(4)),
        ];
        assert_eq!(locus.values, expect);
        assert_eq!(locus.point_count(), 96);

        let half = LambdaForm::new(vec![ratio(1, 2), ratio(3, 2), rat(2)]).unwrap();
        let set = branch_locus(&half).unwrap().as_branch_set().unwrap();
        assert!(set.same_set(&BranchSet::from_lambdas(half.lambdas()).unwrap()));
    }

    #[test]
    fn higher_type() {
        let form = LambdaForm::new(vec![rat(2), rat(3), rat(4), rat(5), rat(6)]).unwrap();
        let locus = branch_locus(&form).unwrap();
        assert_eq!(locus.fibers.len(), 8);
        assert!(locus.fibers.iter().all(|f| f.points.len() == 64));
    }
}
