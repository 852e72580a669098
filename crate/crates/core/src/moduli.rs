//! Möbius transformations, projective equivalence of branch sets, canonical
//! keys and the map from hyperelliptic curves to Humbert-Edge curves.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{CNum, Rat, Tolerance};
use crate::error::{Error, Result};
use crate::hecurve::{branch_locus, invariants_of_type, LambdaForm};

/// A point of the rational projective line. Ordered with infinity first,
/// then finite values ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Point {
    Infinity,
    Finite(Rat),
}

impl P1Point {
    pub fn finite(r: Rat) -> Self {
        P1Point::Finite(r)
    }

    /// (u : v); `None` for (0 : 0).
    pub fn from_pair(u: Rat, v: Rat) -> Option<Self> {
        if v.is_zero() {
            (!u.is_zero()).then_some(P1Point::Infinity)
        } else {
            Some(P1Point::Finite(u / v))
        }
    }

    pub fn to_pair(&self) -> (Rat, Rat) {
        match self {
            P1Point::Infinity => (Rat::one(), Rat::zero()),
            P1Point::Finite(r) => (r.clone(), Rat::one()),
        }
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            P1Point::Finite(r) => Some(r),
            P1Point::Infinity => None,
        }
    }

    /// `inf` or `p/q`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "inf" | "∞" => Ok(P1Point::Infinity),
            other => Ok(P1Point::Finite(crate::arith::parse_rat(other)?)),
        }
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Infinity => f.write_str("inf"),
            P1Point::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for P1Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// x -> (alpha x + beta) / (gamma x + delta), stored normalized with
/// delta = 1, or gamma = 1 when delta = 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    m: [Rat; 4],
}

impl MobiusMap {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> Result<Self> {
        if (&alpha * &delta - &beta * &gamma).is_zero() {
            return Err(Error::InvalidParameter("Möbius determinant is zero".into()));
        }
        let scale = if !delta.is_zero() {
            delta.clone()
        } else {
            gamma.clone()
        };
        Ok(MobiusMap {
            m: [alpha, beta, gamma, delta].map(|x| x / &scale),
        })
    }

    pub fn identity() -> Self {
        MobiusMap {
            m: [Rat::one(), Rat::zero(), Rat::zero(), Rat::one()],
        }
    }

    /// [[alpha, beta], [gamma, delta]]
    pub fn matrix(&self) -> [[Rat; 2]; 2] {
        let [a, b, c, d] = self.m.clone();
        [[a, b], [c, d]]
    }

    pub fn apply(&self, p: &P1Point) -> P1Point {
        let [a, b, c, d] = &self.m;
        let (u, v) = p.to_pair();
        P1Point::from_pair(a * &u + b * &v, c * &u + d * &v)
            .expect("invertible map sends nonzero pairs to nonzero pairs")
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        MobiusMap::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
            .expect("product of invertible maps is invertible")
    }

    pub fn inverse(&self) -> MobiusMap {
        let [a, b, c, d] = self.m.clone();
        MobiusMap::new(d, -b, -c, a).expect("inverse of an invertible map is invertible")
    }

    pub fn is_identity(&self) -> bool {
        *self == MobiusMap::identity()
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "({a}*x + {b}) / ({c}*x + {d})")
    }
}

impl fmt::Debug for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MobiusMap[{self}]")
    }
}

impl Serialize for MobiusMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .matrix()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        rows.serialize(s)
    }
}

/// The map with 0 -> p, 1 -> q, infinity -> r.
pub fn mobius_through(p: &P1Point, q: &P1Point, r: &P1Point) -> Result<MobiusMap> {
    if p == q || q == r || p == r {
        return Err(Error::Duplicate(format!("frame ({p}, {q}, {r})")));
    }
    let (pu, pv) = p.to_pair();
    let (qu, qv) = q.to_pair();
    let (ru, rv) = r.to_pair();
    // q = x r + y p, then columns x r (image of infinity) and y p (image of 0)
    let det = &ru * &pv - &pu * &rv;
    let x = (&qu * &pv - &pu * &qv) / &det;
    let y = (&ru * &qv - &qu * &rv) / &det;
    MobiusMap::new(&x * ru, &y * pu, x * rv, y * pv)
}

/// Pairwise distinct points of P^1, kept in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchSet {
    points: Vec<P1Point>,
}

impl BranchSet {
    pub fn new(points: Vec<P1Point>) -> Result<Self> {
        let mut sorted = points.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(format!("branch point {}", w[0])));
        }
        if points.len() < 3 {
            return Err(Error::InvalidParameter(format!(
                "a branch set needs at least 3 points, got {}",
                points.len()
            )));
        }
        Ok(BranchSet { points })
    }

    /// {0, 1, inf, lambda_1, ..., lambda_r}
    pub fn from_lambdas(lambdas: &[Rat]) -> Result<Self> {
        let mut points = vec![
            P1Point::Finite(Rat::zero()),
            P1Point::Finite(Rat::one()),
            P1Point::Infinity,
        ];
        points.extend(lambdas.iter().cloned().map(P1Point::Finite));
        BranchSet::new(points)
    }

    pub fn from_finite(values: &[Rat]) -> Result<Self> {
        BranchSet::new(values.iter().cloned().map(P1Point::Finite).collect())
    }

    pub fn points(&self) -> &[P1Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn sorted(&self) -> Vec<P1Point> {
        let mut v = self.points.clone();
        v.sort();
        v
    }

    pub fn same_set(&self, other: &BranchSet) -> bool {
        self.sorted() == other.sorted()
    }
}

pub fn apply(m: &MobiusMap, s: &BranchSet) -> BranchSet {
    BranchSet {
        points: s.points.iter().map(|p| m.apply(p)).collect(),
    }
}

fn ordered_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n)
        .flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| i != j && j != k && i != k)
}

/// First map (in lexicographic order of rhs frames) carrying lhs onto rhs.
/// The first three lhs points are the source frame.
pub fn is_isomorphic(lhs: &BranchSet, rhs: &BranchSet) -> Result<Option<MobiusMap>> {
    if lhs.len() != rhs.len() {
        return Err(Error::SizeMismatch(lhs.len(), rhs.len()));
    }
    let p = &lhs.points;
    let from_lhs = mobius_through(&p[0], &p[1], &p[2])?.inverse();
    let target = rhs.sorted();
    for (i, j, k) in ordered_triples(rhs.len()) {
        let q = &rhs.points;
        let m = mobius_through(&q[i], &q[j], &q[k])?.compose(&from_lhs);
        if apply(&m, lhs).sorted() == target {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// All maps carrying lhs onto rhs, one per rhs frame hit.
pub fn all_isomorphisms(lhs: &BranchSet, rhs: &BranchSet) -> Result<Vec<MobiusMap>> {
    if lhs.len() != rhs.len() {
        return Err(Error::SizeMismatch(lhs.len(), rhs.len()));
    }
    let p = &lhs.points;
    let from_lhs = mobius_through(&p[0], &p[1], &p[2])?.inverse();
    let target = rhs.sorted();
    let mut out = Vec::new();
    for (i, j, k) in ordered_triples(rhs.len()) {
        let q = &rhs.points;
        let m = mobius_through(&q[i], &q[j], &q[k])?.compose(&from_lhs);
        if apply(&m, lhs).sorted() == target && !out.contains(&m) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Lexicographically smallest sorted tuple of the remaining points over all
/// frames sent to (0, 1, inf).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey(pub Vec<P1Point>);

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey{self}")
    }
}

pub fn canonical_key(s: &BranchSet) -> CanonicalKey {
    let n = s.len();
    let p = &s.points;
    ordered_triples(n)
        .map(|(i, j, k)| {
            let to_frame = mobius_through(&p[i], &p[j], &p[k])
                .expect("branch set points are distinct")
                .inverse();
            let mut rest: Vec<P1Point> = (0..n)
                .filter(|&m| m != i && m != j && m != k)
                .map(|m| to_frame.apply(&p[m]))
                .collect();
            rest.sort();
            rest
        })
        .min()
        .map(CanonicalKey)
        .expect("at least one frame")
}

/// Both sides of the moduli map for one parameter tuple.
#[derive(Clone, Debug, Serialize)]
pub struct ModuliRecord {
    pub n: usize,
    /// genus of y^2 = x(x-1)(x-lambda_1)...(x-lambda_r)
    pub g: u64,
    pub he_genus: u64,
    pub hyperelliptic: BranchSet,
    pub hyperelliptic_key: CanonicalKey,
    /// Key of the branch locus computed from the Humbert-Edge curve itself.
    pub he_curve: CanonicalKey,
}

impl ModuliRecord {
    pub fn keys_agree(&self) -> bool {
        self.hyperelliptic_key == self.he_curve
    }
}

pub fn moduli_map_f(lambdas: &[Rat], n: usize) -> Result<ModuliRecord> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::Parity(n));
    }
    if lambdas.len() != n - 2 {
        return Err(Error::SizeMismatch(n - 2, lambdas.len()));
    }
    let form = LambdaForm::new(lambdas.to_vec())?;
    let hyperelliptic = BranchSet::from_lambdas(lambdas)?;
    let hyperelliptic_key = canonical_key(&hyperelliptic);
    let locus = branch_locus(&form)?;
    let he_curve = canonical_key(&locus.as_branch_set()?);
    Ok(ModuliRecord {
        n,
        g: ((n - 1) / 2) as u64,
        he_genus: invariants_of_type(n)?.genus,
        hyperelliptic,
        hyperelliptic_key,
        he_curve,
    })
}

/// A point of P^1 over the complex numbers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CP1 {
    Infinity,
    Finite(CNum),
}

impl CP1 {
    pub fn from_pair(u: CNum, v: CNum, eps_zero: f64) -> Option<Self> {
        let scale = u.norm().max(v.norm());
        if scale <= eps_zero {
            None
        } else if v.norm() <= eps_zero * scale {
            Some(CP1::Infinity)
        } else {
            Some(CP1::Finite(u / v))
        }
    }

    fn to_pair(self) -> (CNum, CNum) {
        match self {
            CP1::Infinity => (CNum::new(1.0, 0.0), CNum::new(0.0, 0.0)),
            CP1::Finite(z) => (z, CNum::new(1.0, 0.0)),
        }
    }

    /// Chordal closeness: both infinite, or finite and within `eps` of each
    /// other relative to their size.
    pub fn close(self, other: CP1, eps: f64) -> bool {
        match (self, other) {
            (CP1::Infinity, CP1::Infinity) => true,
            (CP1::Finite(a), CP1::Finite(b)) => {
                (a - b).norm() <= eps * (1.0 + a.norm().max(b.norm()))
            }
            (CP1::Finite(z), CP1::Infinity) | (CP1::Infinity, CP1::Finite(z)) => {
                z.norm() > 1.0 / eps
            }
        }
    }
}

impl From<&P1Point> for CP1 {
    fn from(p: &P1Point) -> Self {
        match p {
            P1Point::Infinity => CP1::Infinity,
            P1Point::Finite(r) => CP1::Finite(CNum::new(crate::arith::rat::to_f64(r), 0.0)),
        }
    }
}

type CMobius = [CNum; 4];

fn c_through(p: CP1, q: CP1, r: CP1) -> Option<CMobius> {
    let (pu, pv) = p.to_pair();
    let (qu, qv) = q.to_pair();
    let (ru, rv) = r.to_pair();
    let det = ru * pv - pu * rv;
    if det.norm() == 0.0 {
        return None;
    }
    let x = (qu * pv - pu * qv) / det;
    let y = (ru * qv - qu * rv) / det;
    Some([x * ru, y * pu, x * rv, y * pv])
}

fn c_apply(m: &CMobius, p: CP1, eps_zero: f64) -> Option<CP1> {
    let (u, v) = p.to_pair();
    CP1::from_pair(m[0] * u + m[1] * v, m[2] * u + m[3] * v, eps_zero)
}

fn c_compose(a: &CMobius, b: &CMobius) -> CMobius {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

fn c_inverse(m: &CMobius) -> CMobius {
    [m[3], -m[1], -m[2], m[0]]
}

/// Frame search over complex branch points; images are matched to rhs
/// points within `eps_match`. Returns [alpha, beta, gamma, delta].
pub fn is_isomorphic_numeric(lhs: &[CP1], rhs: &[CP1], tol: &Tolerance) -> Result<Option<CMobius>> {
    if lhs.len() != rhs.len() {
        return Err(Error::SizeMismatch(lhs.len(), rhs.len()));
    }
    if lhs.len() < 3 {
        return Err(Error::InvalidParameter(
            "a branch set needs at least 3 points".into(),
        ));
    }
    let Some(frame) = c_through(lhs[0], lhs[1], lhs[2]) else {
        return Err(Error::Duplicate("lhs frame".into()));
    };
    let from_lhs = c_inverse(&frame);
    for (i, j, k) in ordered_triples(rhs.len()) {
        let Some(to_rhs) = c_through(rhs[i], rhs[j], rhs[k]) else {
            continue;
        };
        let m = c_compose(&to_rhs, &from_lhs);
        let mut used = vec![false; rhs.len()];
        let matched = lhs.iter().all(|&p| {
            let Some(img) = c_apply(&m, p, tol.eps_zero) else {
                return false;
            };
            match (0..rhs.len()).find(|&t| !used[t] && img.close(rhs[t], tol.eps_match)) {
                Some(t) => {
                    used[t] = true;
                    true
                }
                None => false,
            }
        });
        if matched {
            let scale = if m[3].norm() > tol.eps_zero {
                m[3]
            } else {
                m[2]
            };
            return Ok(Some(m.map(|x| x / scale)));
        }
    }
    Ok(None)
}

/// Total order for numeric keys: infinity first, then real part, then
/// imaginary part, treating differences below `eps` as ties.
pub fn cmp_numeric(a: CP1, b: CP1, eps: f64) -> Ordering {
    let bucket = |x: f64, y: f64| {
        if (x - y).abs() <= eps * (1.0 + x.abs().max(y.abs())) {
            Ordering::Equal
        } else {
            x.partial_cmp(&y).unwrap_or(Ordering::Equal)
        }
    };
    match (a, b) {
        (CP1::Infinity, CP1::Infinity) => Ordering::Equal,
        (CP1::Infinity, _) => Ordering::Less,
        (_, CP1::Infinity) => Ordering::Greater,
        (CP1::Finite(x), CP1::Finite(y)) => bucket(x.re, y.re).then(bucket(x.im, y.im)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn fin(n: i64, d: i64) -> P1Point {
        P1Point::Finite(ratio(n, d))
    }

    fn set(values: &[(i64, i64)], with_inf: bool) -> BranchSet {
        let mut pts: Vec<P1Point> = values.iter().map(|&(n, d)| fin(n, d)).collect();
        if with_inf {
            pts.insert(2, P1Point::Infinity);
        }
        BranchSet::new(pts).unwrap()
    }

    fn reference() -> BranchSet {
        BranchSet::from_lambdas(&[rat(2), rat(3), rat(4)]).unwrap()
    }

    #[test]
    fn point_order_and_pairs() {
        assert!(P1Point::Infinity < fin(-100, 1));
        assert!(fin(-1, 2) < fin(0, 1));
        assert_eq!(P1Point::from_pair(rat(2), rat(4)), Some(fin(1, 2)));
        assert_eq!(P1Point::from_pair(rat(3), rat(0)), Some(P1Point::Infinity));
        assert_eq!(P1Point::from_pair(rat(0), rat(0)), None);
        assert_eq!(P1Point::parse("inf").unwrap(), P1Point::Infinity);
        assert_eq!(P1Point::parse("-3/6").unwrap(), fin(-1, 2));
    }

    #[test]
    fn through_examples() {
        let zero = fin(0, 1);
        let one = fin(1, 1);
        let inf = P1Point::Infinity;
        assert!(mobius_through(&zero, &one, &inf).unwrap().is_identity());
        let flip = mobius_through(&one, &zero, &inf).unwrap();
        assert_eq!(
            flip,
            MobiusMap::new(rat(-1), rat(1), rat(0), rat(1)).unwrap()
        );
        let half = mobius_through(&zero, &fin(1, 2), &inf).unwrap();
        assert_eq!(
            half,
            MobiusMap::new(ratio(1, 2), rat(0), rat(0), rat(1)).unwrap()
        );
        let m = mobius_through(&fin(3, 1), &inf, &fin(-1, 2)).unwrap();
        assert_eq!(m.apply(&zero), fin(3, 1));
        assert_eq!(m.apply(&one), inf);
        assert_eq!(m.apply(&inf), fin(-1, 2));
        assert!(mobius_through(&zero, &zero, &inf).is_err());
    }

    #[test]
    fn apply_examples() {
        let s = reference();
        assert_eq!(apply(&MobiusMap::identity(), &s), s);
        let half = MobiusMap::new(ratio(1, 2), rat(0), rat(0), rat(1)).unwrap();
        assert!(apply(&half, &s).same_set(&set(&[(0, 1), (1, 2), (1, 1), (3, 2), (2, 1)], true)));
        let flip = MobiusMap::new(rat(-1), rat(1), rat(0), rat(1)).unwrap();
        assert!(apply(&flip, &s).same_set(&set(&[(1, 1), (0, 1), (-1, 1), (-2, 1), (-3, 1)], true)));
    }

    #[test]
    fn isomorphism_examples() {
        let s = reference();
        assert!(is_isomorphic(&s, &s).unwrap().unwrap().is_identity());
        let t = BranchSet::from_lambdas(&[ratio(1, 2), ratio(3, 2), rat(2)]).unwrap();
        let w = is_isomorphic(&s, &t).unwrap().unwrap();
        assert_eq!(
            w,
            MobiusMap::new(ratio(1, 2), rat(0), rat(0), rat(1)).unwrap()
        );
        assert!(apply(&w, &s).same_set(&t));
        // frozen from an independent frame-search script
        assert_eq!(all_isomorphisms(&s, &t).unwrap().len(), 4);
        assert_eq!(all_isomorphisms(&s, &s).unwrap().len(), 4);
        let u = BranchSet::from_lambdas(&[rat(2), rat(3), ratio(9, 2)]).unwrap();
        assert_eq!(is_isomorphic(&s, &u).unwrap(), None);
        let small = BranchSet::from_lambdas(&[rat(2)]).unwrap();
        assert_eq!(
            is_isomorphic(&s, &small).unwrap_err(),
            Error::SizeMismatch(6, 4)
        );
    }

    #[test]
    fn keys() {
        let s = reference();
        let t = BranchSet::from_lambdas(&[ratio(1, 2), ratio(3, 2), rat(2)]).unwrap();
        let u = BranchSet::from_lambdas(&[rat(2), rat(3), ratio(9, 2)]).unwrap();
        let expect = |v: &[(i64, i64)]| CanonicalKey(v.iter().map(|&(n, d)| fin(n, d)).collect());
        // frozen from an independent enumeration script
        assert_eq!(canonical_key(&s), expect(&[(-8, 1), (-2, 1), (4, 1)]));
        assert_eq!(canonical_key(&t), canonical_key(&s));
        assert_eq!(canonical_key(&u), expect(&[(-6, 1), (-2, 1), (4, 1)]));
        let v = BranchSet::from_finite(&(0..6).map(rat).collect::<Vec<_>>()).unwrap();
        assert_eq!(canonical_key(&v), expect(&[(-15, 1), (-5, 1), (-5, 3)]));
        let mut shuffled = s.points().to_vec();
        shuffled.reverse();
        shuffled.swap(1, 4);
        assert_eq!(
            canonical_key(&BranchSet::new(shuffled).unwrap()),
            canonical_key(&s)
        );
    }

    #[test]
    fn duplicates_rejected() {
        assert!(matches!(
            BranchSet::from_lambdas(&[rat(2), rat(2), rat(4)]),
            Err(Error::Duplicate(_))
        ));
        assert!(BranchSet::from_lambdas(&[rat(1), rat(3), rat(4)]).is_err());
    }

    #[test]
    fn numeric_isomorphism() {
        let tol = Tolerance::default();
        let s: Vec<CP1> = reference().points().iter().map(CP1::from).collect();
        let t: Vec<CP1> = BranchSet::from_lambdas(&[ratio(1, 2), ratio(3, 2), rat(2)])
            .unwrap()
            .points()
            .iter()
            .map(CP1::from)
            .collect();
        let w = is_isomorphic_numeric(&s, &t, &tol).unwrap().unwrap();
        assert!((w[0] - CNum::new(0.5, 0.0)).norm() < 1e-12);
        let i = CNum::new(0.0, 1.0);
        let rot: Vec<CP1> = s
            .iter()
            .map(|p| match p {
                CP1::Infinity => CP1::Infinity,
                CP1::Finite(z) => CP1::Finite(z * i + 1.0),
            })
            .collect();
        assert!(is_isomorphic_numeric(&s, &rot, &tol).unwrap().is_some());
        let u: Vec<CP1> = BranchSet::from_lambdas(&[rat(2), rat(3), ratio(9, 2)])
            .unwrap()
            .points()
            .iter()
            .map(CP1::from)
            .collect();
        assert!(is_isomorphic_numeric(&s, &u, &tol).unwrap().is_none());
        assert_eq!(
            cmp_numeric(CP1::Infinity, CP1::Finite(i), 1e-7),
            Ordering::Less
        );
    }

    #[test]
    fn moduli_map() {
        let rec = moduli_map_f(&[rat(2), rat(3), rat(4)], 5).unwrap();
        assert_eq!((rec.g, rec.he_genus), (2, 17));
        assert!(rec.keys_agree());
        let rec7 = moduli_map_f(&[2, 3, 4, 5, 6].map(rat), 7).unwrap();
        assert_eq!((rec7.g, rec7.he_genus), (3, 129));
        assert!(rec7.keys_agree());
        assert_eq!(
            moduli_map_f(&[2, 3, 4, 5].map(rat), 6).unwrap_err(),
            Error::Parity(6)
        );
        assert_eq!(
            moduli_map_f(&[rat(2)], 5).unwrap_err(),
            Error::SizeMismatch(3, 1)
        );
    }
}
