//! Counting and degree bookkeeping for theta characteristics of type-5
//! curves, and intersection numbers on the Kummer surface.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::combinations;
use crate::config::{rosenhain_enumerate, Config16};
use crate::error::{Error, Result};
use crate::hecurve::{invariants_of_type, ramification_points, HECurve};

/// Quotient by the subgroup generated by 1 to 3 coordinate involutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringSpec {
    generators: Vec<usize>,
}

impl CoveringSpec {
    pub fn new(mut generators: Vec<usize>) -> Result<Self> {
        generators.sort_unstable();
        generators.dedup();
        if !(1..=3).contains(&generators.len()) || generators.iter().any(|&g| g > 5) {
            return Err(Error::InvalidParameter(format!(
                "covering needs 1 to 3 distinct involutions from 0..=5, got {generators:?}"
            )));
        }
        Ok(CoveringSpec { generators })
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn degree(&self) -> i64 {
        1 << self.generators.len()
    }
}

/// Solves 2*17 - 2 = deg (2g - 2) + 16 |generators| for g.
pub fn quotient_genus(c: &CoveringSpec) -> Result<i64> {
    let genus = invariants_of_type(5)?.genus as i64;
    let ramification = 16 * c.generators.len() as i64;
    let rhs = 2 * genus - 2 - ramification;
    if rhs % c.degree() != 0 || (rhs / c.degree()) % 2 != 0 {
        return Err(Error::Anomaly(format!(
            "no integral genus for {:?}",
            c.generators
        )));
    }
    Ok((rhs / c.degree() + 2) / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
}

impl DegreeCheck {
    fn new(name: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        DegreeCheck {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    pub odd_count: usize,
    /// R_0..R_5, then the 20 triples T_ijk.
    pub odd_structures: Vec<String>,
    pub vanishing_count: usize,
    pub degree_checks: Vec<DegreeCheck>,
    /// Section counts that are stated, not computed.
    pub annotations: Vec<String>,
}

impl ThetaReport {
    pub fn all_hold(&self) -> bool {
        self.degree_checks.iter().all(DegreeCheck::holds)
    }
}

pub fn theta_report(x: &HECurve, c: &Config16) -> Result<ThetaReport> {
    if x.n() != 5 {
        return Err(Error::InvalidParameter(format!(
            "theta report needs type 5, got {}",
            x.n()
        )));
    }
    let genus = invariants_of_type(5)?.genus as i64;
    let fibers = (0..6)
        .map(|i| ramification_points(x, i))
        .collect::<Result<Vec<_>>>()?;

    let mut odd_structures: Vec<String> = (0..6).map(|i| format!("R_{i}")).collect();
    odd_structures.extend(
        combinations(6, 3)
            .iter()
            .map(|t| format!("T_{}{}{}", t[0], t[1], t[2])),
    );

    let mut degree_checks = Vec::new();
    for f in &fibers {
        degree_checks.push(DegreeCheck::new(
            format!("deg R_{} = g - 1", f.hyperplane),
            f.points.len() as i64,
            genus - 1,
        ));
    }
    for pair in combinations(6, 2) {
        let (i, j) = (pair[0], pair[1]);
        degree_checks.push(DegreeCheck::new(
            format!("deg R_{i} + R_{j} = 2g - 2"),
            (fibers[i].points.len() + fibers[j].points.len()) as i64,
            2 * genus - 2,
        ));
    }
    // fiber i lies on x_i = 0; it meets fiber j only if x_j vanishes there too
    let overlaps = combinations(6, 2)
        .iter()
        .filter(|p| fibers[p[0]].y[p[1]].is_zero() || fibers[p[1]].y[p[0]].is_zero())
        .count();
    degree_checks.push(DegreeCheck::new(
        "fibers pairwise disjoint",
        overlaps as i64,
        0,
    ));
    degree_checks.push(DegreeCheck::new(
        "odd count = 6 + C(6,3)",
        odd_structures.len() as i64,
        26,
    ));

    Ok(ThetaReport {
        odd_count: odd_structures.len(),
        odd_structures,
        vanishing_count: rosenhain_enumerate(c).len(),
        degree_checks,
        annotations: vec![
            "odd theta characteristics: h0 = 3 (annotation, not computed)".into(),
            "vanishing thetanulls: h0 = 6 (annotation, not computed)".into(),
        ],
    })
}

/// Rosenhain divisor D with D^2 = 8 and the curve in |2D|.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionLedger {
    pub d_sq: i64,
    pub x_class_multiple: i64,
    pub d_dot_x: i64,
    pub x_sq: i64,
    pub genus: i64,
    pub checks: Vec<DegreeCheck>,
}

pub fn rosenhain_ledger() -> IntersectionLedger {
    let d_sq = 8;
    let m = 2;
    let d_dot_x = m * d_sq;
    let x_sq = m * m * d_sq;
    // adjunction on a K3: 2g - 2 = X^2
    let genus = x_sq / 2 + 1;
    let expected_genus = invariants_of_type(5).expect("type 5 is valid").genus as i64;
    IntersectionLedger {
        d_sq,
        x_class_multiple: m,
        d_dot_x,
        x_sq,
        genus,
        checks: vec![
            DegreeCheck::new("D.X = g - 1", d_dot_x, expected_genus - 1),
            DegreeCheck::new("X^2 = 2g - 2", x_sq, 2 * expected_genus - 2),
            DegreeCheck::new("adjunction genus", genus, expected_genus),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Settings};
    use crate::hecurve::{from_lambda, normal_form, LambdaForm};
    use crate::kummer::incidence;

    #[test]
    fn riemann_hurwitz() {
        let g = |v: Vec<usize>| quotient_genus(&CoveringSpec::new(v).unwrap()).unwrap();
        assert_eq!(g(vec![0]), 5);
        assert_eq!(g(vec![1, 4]), 1);
        assert_eq!(g(vec![0, 2, 5]), 0);
        assert!(CoveringSpec::new(vec![]).is_err());
        assert!(CoveringSpec::new(vec![0, 1, 2, 3]).is_err());
        assert!(CoveringSpec::new(vec![6]).is_err());
        assert_eq!(CoveringSpec::new(vec![3, 3]).unwrap().degree(), 2);
    }

    #[test]
    fn report_for_lambdas_234() {
        let x = from_lambda(&LambdaForm::new(vec![rat(2), rat(3), rat(4)]).unwrap()).unwrap();
        let nf = normal_form(x.coeffs()).unwrap();
        let c = incidence(&nf.branch, &Settings::default()).unwrap().config;
        let report = theta_report(&x, &c).unwrap();
        assert_eq!((report.odd_count, report.vanishing_count), (26, 80));
        assert_eq!(report.odd_structures.len(), 26);
        assert_eq!(report.odd_structures[5], "R_5");
        assert_eq!(report.odd_structures[6], "T_012");
        assert!(report.all_hold());
        let r0 = &report.degree_checks[0];
        assert_eq!((r0.lhs, r0.rhs), (16, 16));
    }

    #[test]
    fn ledger() {
        let l = rosenhain_ledger();
        assert_eq!((l.d_dot_x, l.x_sq, l.genus), (16, 32, 17));
        assert!(l.checks.iter().all(DegreeCheck::holds));
    }
}
