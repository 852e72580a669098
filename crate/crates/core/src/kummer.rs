//! The Kummer surface of y^2 = prod (x - a_j) as three diagonal quadrics in
//! P^5, its 32 lines as orbits of one line under coordinate sign flips, and
//! the node/trope incidence they induce.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{Mask, RadBasis, RadElem, Rat, Settings, Verdict};
use crate::config::{matrix_from_fn, Config16};
use crate::error::{Error, Result};
use crate::geom::{lines_equal, lines_meet, quad_on_line, DiagQuadric, LineP5, PPoint};

/// Six distinct branch parameters with f'(a_j) = prod_{k != j} (a_j - a_k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchData {
    a: [Rat; 6],
    fprime: [Rat; 6],
    basis: Arc<RadBasis>,
}

pub fn make_branch(a: [Rat; 6]) -> Result<BranchData> {
    for j in 0..6 {
        for k in j + 1..6 {
            if a[j] == a[k] {
                return Err(Error::Duplicate(format!("a_{j} = a_{k} = {}", a[j])));
            }
        }
    }
    let fprime: [Rat; 6] =
        std::array::from_fn(|j| (0..6).filter(|&k| k != j).map(|k| &a[j] - &a[k]).product());
    let basis = RadBasis::new(fprime.clone())?;
    Ok(BranchData { a, fprime, basis })
}

impl BranchData {
    pub fn a(&self) -> &[Rat; 6] {
        &self.a
    }

    pub fn fprime(&self) -> &[Rat; 6] {
        &self.fprime
    }

    pub fn basis(&self) -> &Arc<RadBasis> {
        &self.basis
    }
}

/// sum_j a_j^k / f'(a_j)
pub fn power_residue(k: u32, b: &BranchData) -> Rat {
    b.a.iter()
        .zip(&b.fprime)
        .map(|(a, f)| num_traits::pow(a.clone(), k as usize) / f)
        .sum()
}

/// Diagonal quadric with coefficients a_j^i.
pub fn vandermonde_row(b: &BranchData, i: u32) -> DiagQuadric {
    let diag =
        b.a.iter()
            .map(|a| num_traits::pow(a.clone(), i as usize))
            .collect();
    DiagQuadric::new(diag)
        .expect("a_j^0 = 1 keeps the row nonzero; distinct a_j keep higher rows nonzero")
}

/// Q_i = sum_j a_j^i x_j^2 for i = 0, 1, 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerSurface {
    quadrics: [DiagQuadric; 3],
}

impl KummerSurface {
    pub fn quadrics(&self) -> &[DiagQuadric; 3] {
        &self.quadrics
    }
}

pub fn surface(b: &BranchData) -> KummerSurface {
    KummerSurface {
        quadrics: [0, 1, 2].map(|i| vandermonde_row(b, i)),
    }
}

/// A coset {S, complement(S)} of sign flips; stored as the representative
/// not containing index 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignClass(Mask);

impl SignClass {
    pub fn new(flips: Mask) -> Self {
        let m = flips & 0x3f;
        SignClass(if m & 1 != 0 { m ^ 0x3f } else { m })
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        SignClass::new(indices.iter().fold(0, |acc, &i| acc ^ (1 << i)))
    }

    pub fn mask(self) -> Mask {
        self.0
    }

    /// +1 or -1 for coordinate j.
    pub fn sign(self, j: usize) -> i8 {
        if self.0 & (1 << j) != 0 {
            -1
        } else {
            1
        }
    }

    /// Odd classes are the 16 node lines, even classes the 16 trope lines.
    pub fn is_odd(self) -> bool {
        self.0.count_ones() % 2 == 1
    }

    /// The representative of size at most three.
    pub fn short_indices(self) -> Vec<usize> {
        let m = if self.0.count_ones() > 3 {
            self.0 ^ 0x3f
        } else {
            self.0
        };
        (0..6).filter(|j| m & (1 << j) != 0).collect()
    }

    /// `l`, `l_3`, `l_01`, `l_123`.
    pub fn label(self) -> String {
        let idx = self.short_indices();
        if idx.is_empty() {
            "l".to_string()
        } else {
            let digits: String = idx.iter().map(|i| char::from(b'0' + *i as u8)).collect();
            format!("l_{digits}")
        }
    }

    fn sort_key(self) -> (usize, Vec<usize>) {
        let idx = self.short_indices();
        (idx.len(), idx)
    }

    /// The 16 even classes: l and the 15 l_ij.
    pub fn tropes() -> Vec<SignClass> {
        Self::collect(false)
    }

    /// The 16 odd classes: the 6 l_i and the 10 l_ijk.
    pub fn nodes() -> Vec<SignClass> {
        Self::collect(true)
    }

    /// Tropes followed by nodes.
    pub fn all() -> Vec<SignClass> {
        let mut v = Self::tropes();
        v.extend(Self::nodes());
        v
    }

    fn collect(odd: bool) -> Vec<SignClass> {
        let mut v: Vec<SignClass> = (0u8..64)
            .filter(|m| m & 1 == 0)
            .map(SignClass)
            .filter(|c| c.is_odd() == odd)
            .collect();
        v.sort_by_key(|c| c.sort_key());
        v
    }
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignClass({})", self.label())
    }
}

/// A line on the surface, tagged by its sign class.
#[derive(Clone, Debug)]
pub struct LabeledLine {
    pub class: SignClass,
    pub line: LineP5,
}

/// x_j = eps_j (t + a_j) s_j / b_j, spanned by the points at t = 0 and t = 1.
pub fn line_of(b: &BranchData, class: SignClass) -> LabeledLine {
    let coord = |t: &Rat, j: usize| {
        let c = (t + &b.a[j]) / &b.fprime[j] * Rat::from_integer(class.sign(j).into());
        RadElem::monomial(&b.basis, 1 << j, c)
    };
    let at = |t: Rat| PPoint::new((0..6).map(|j| coord(&t, j)).collect());
    let p = at(Rat::zero()).expect("t = 0 point has a nonzero coordinate for distinct a_j");
    let q = at(Rat::one()).expect("t = 1 point has a nonzero coordinate for distinct a_j");
    let line = LineP5::new(p, q).expect("direction s_j / b_j is never proportional to the base");
    LabeledLine { class, line }
}

/// The 32 lines: tropes first, then nodes.
pub fn all_lines(b: &BranchData) -> Vec<LabeledLine> {
    SignClass::all()
        .into_iter()
        .map(|c| line_of(b, c))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineCheck {
    /// Q_0, Q_1, Q_2 vanish identically on the line.
    pub on_surface: Verdict,
    /// The fourth Vandermonde quadric (a_j^3) restricts to the constant 1.
    pub fourth_row_is_one: Verdict,
}

pub fn verify_line(
    line: &LabeledLine,
    s: &KummerSurface,
    fourth: &DiagQuadric,
    settings: &Settings,
) -> Result<LineCheck> {
    let mut on_surface = Verdict::exact(true);
    for q in &s.quadrics {
        on_surface = on_surface.and(quad_on_line(q, &line.line)?.is_zero(settings)?);
    }
    let fourth_row_is_one = quad_on_line(fourth, &line.line)?.is_constant(&Rat::one(), settings)?;
    Ok(LineCheck {
        on_surface,
        fourth_row_is_one,
    })
}

/// Geometric node/trope incidence with the disjointness facts that come with it.
#[derive(Clone, Debug)]
pub struct IncidenceReport {
    /// rows: nodes (odd classes), columns: tropes (even classes)
    pub config: Config16,
    /// The 16 node lines are pairwise disjoint.
    pub nodes_disjoint: Verdict,
    /// The 16 trope lines are pairwise disjoint.
    pub tropes_disjoint: Verdict,
    pub numeric: bool,
}

fn pairwise<F>(count: usize, parallel: bool, f: F) -> Result<Vec<Verdict>>
where
    F: Fn(usize, usize) -> Result<Verdict> + Sync,
{
    let pairs: Vec<(usize, usize)> = (0..count)
        .flat_map(|i| (i + 1..count).map(move |j| (i, j)))
        .collect();
    if parallel {
        pairs.par_iter().map(|&(i, j)| f(i, j)).collect()
    } else {
        pairs.iter().map(|&(i, j)| f(i, j)).collect()
    }
}

fn all_hold(vs: &[Verdict], negate: bool) -> Verdict {
    vs.iter().fold(Verdict::exact(true), |acc, v| {
        acc.and(Verdict {
            holds: v.holds != negate,
            numeric: v.numeric,
        })
    })
}

pub fn incidence(b: &BranchData, settings: &Settings) -> Result<IncidenceReport> {
    let nodes: Vec<LabeledLine> = SignClass::nodes()
        .into_iter()
        .map(|c| line_of(b, c))
        .collect();
    let tropes: Vec<LabeledLine> = SignClass::tropes()
        .into_iter()
        .map(|c| line_of(b, c))
        .collect();

    let cells: Vec<(usize, usize)> = (0..16).flat_map(|i| (0..16).map(move |j| (i, j))).collect();
    let meet = |&(i, j): &(usize, usize)| lines_meet(&nodes[i].line, &tropes[j].line, settings);
    let verdicts: Vec<Verdict> = if settings.parallel {
        cells.par_iter().map(meet).collect::<Result<_>>()?
    } else {
        cells.iter().map(meet).collect::<Result<_>>()?
    };
    let rows = matrix_from_fn(|i, j| verdicts[i * 16 + j].holds);

    let node_pairs = pairwise(16, settings.parallel, |i, j| {
        lines_meet(&nodes[i].line, &nodes[j].line, settings)
    })?;
    let trope_pairs = pairwise(16, settings.parallel, |i, j| {
        lines_meet(&tropes[i].line, &tropes[j].line, settings)
    })?;
    let nodes_disjoint = all_hold(&node_pairs, true);
    let tropes_disjoint = all_hold(&trope_pairs, true);

    let numeric =
        verdicts.iter().any(|v| v.numeric) || nodes_disjoint.numeric || tropes_disjoint.numeric;
    let config = Config16::with_labels(
        rows,
        nodes.iter().map(|l| l.class.label()).collect(),
        tropes.iter().map(|l| l.class.label()).collect(),
    )?;
    Ok(IncidenceReport {
        config,
        nodes_disjoint,
        tropes_disjoint,
        numeric,
    })
}

/// No two of the lines coincide.
pub fn lines_distinct(lines: &[LabeledLine], settings: &Settings) -> Result<Verdict> {
    let eq = pairwise(lines.len(), settings.parallel, |i, j| {
        lines_equal(&lines[i].line, &lines[j].line, settings)
    })?;
    Ok(all_hold(&eq, true))
}

/// The incidence predicted combinatorially: node S meets trope T iff
/// |S xor T| is 1 or 5.
pub fn sign_rule_config() -> Config16 {
    let nodes = SignClass::nodes();
    let tropes = SignClass::tropes();
    let rows =
        matrix_from_fn(|i, j| matches!((nodes[i].mask() ^ tropes[j].mask()).count_ones(), 1 | 5));
    Config16::with_labels(
        rows,
        nodes.iter().map(|c| c.label()).collect(),
        tropes.iter().map(|c| c.label()).collect(),
    )
    .expect("sign rule yields a (16,6)-configuration")
}
