//! Abstract (16,6)-configurations and Rosenhain tetrahedra.
//!
//! A configuration is a 16x16 0/1 matrix; rows are points, columns planes.
//! Row i is stored as a bit mask with bit j set when point i lies on plane j.

use serde::{Deserialize, Serialize};

use crate::arith::combinations;
use crate::error::{Error, Result};

pub const SIZE: usize = 16;

/// Row bit masks of a 16x16 binary matrix.
pub type Matrix16 = [u16; SIZE];

pub fn matrix_from_fn(f: impl Fn(usize, usize) -> bool) -> Matrix16 {
    std::array::from_fn(|i| {
        (0..SIZE)
            .filter(|&j| f(i, j))
            .fold(0u16, |acc, j| acc | (1 << j))
    })
}

pub fn transpose(m: &Matrix16) -> Matrix16 {
    matrix_from_fn(|i, j| m[j] & (1 << i) != 0)
}

/// Every row and every column has exactly six ones.
pub fn is_config(m: &Matrix16) -> bool {
    let rows_ok = m.iter().all(|r| r.count_ones() == 6);
    rows_ok && transpose(m).iter().all(|c| c.count_ones() == 6)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config16 {
    rows: Matrix16,
    point_labels: Vec<String>,
    plane_labels: Vec<String>,
}

impl Config16 {
    pub fn new(rows: Matrix16) -> Result<Self> {
        let points = (0..SIZE).map(|i| format!("p{i}")).collect();
        let planes = (0..SIZE).map(|j| format!("P{j}")).collect();
        Config16::with_labels(rows, points, planes)
    }

    pub fn with_labels(
        rows: Matrix16,
        point_labels: Vec<String>,
        plane_labels: Vec<String>,
    ) -> Result<Self> {
        if !is_config(&rows) {
            return Err(Error::NotConfiguration);
        }
        for labels in [&point_labels, &plane_labels] {
            if labels.len() != SIZE {
                return Err(Error::DimensionMismatch {
                    expected: SIZE,
                    found: labels.len(),
                });
            }
        }
        Ok(Config16 {
            rows,
            point_labels,
            plane_labels,
        })
    }

    pub fn rows(&self) -> &Matrix16 {
        &self.rows
    }

    pub fn contains(&self, point: usize, plane: usize) -> bool {
        self.rows[point] & (1 << plane) != 0
    }

    pub fn point_labels(&self) -> &[String] {
        &self.point_labels
    }

    pub fn plane_labels(&self) -> &[String] {
        &self.plane_labels
    }

    /// Relabels rows and columns: new point i is old point `point_perm[i]`.
    pub fn permuted(&self, point_perm: &[usize; SIZE], plane_perm: &[usize; SIZE]) -> Config16 {
        let rows = matrix_from_fn(|i, j| self.contains(point_perm[i], plane_perm[j]));
        Config16 {
            rows,
            point_labels: point_perm
                .iter()
                .map(|&i| self.point_labels[i].clone())
                .collect(),
            plane_labels: plane_perm
                .iter()
                .map(|&j| self.plane_labels[j].clone())
                .collect(),
        }
    }

    /// Sixteen lines of sixteen `0`/`1` characters.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(SIZE * (SIZE + 1));
        for i in 0..SIZE {
            for j in 0..SIZE {
                out.push(if self.contains(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Config16> {
        Config16::new(parse_matrix(text.lines())?)
    }

    pub fn to_file(&self) -> ConfigFile {
        ConfigFile {
            matrix: self.to_text().lines().map(str::to_owned).collect(),
            point_labels: self.point_labels.clone(),
            plane_labels: self.plane_labels.clone(),
        }
    }

    pub fn from_file(file: &ConfigFile) -> Result<Config16> {
        let rows = parse_matrix(file.matrix.iter().map(String::as_str))?;
        Config16::with_labels(rows, file.point_labels.clone(), file.plane_labels.clone())
    }
}

fn parse_matrix<'a>(lines: impl Iterator<Item = &'a str>) -> Result<Matrix16> {
    let lines: Vec<&str> = lines.map(str::trim).filter(|l| !l.is_empty()).collect();
    if lines.len() != SIZE {
        return Err(Error::Parse(format!(
            "expected 16 rows, found {}",
            lines.len()
        )));
    }
    let mut rows = [0u16; SIZE];
    for (i, line) in lines.iter().enumerate() {
        if line.len() != SIZE {
            return Err(Error::Parse(format!(
                "row {i} has {} characters, expected 16",
                line.len()
            )));
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '1' => rows[i] |= 1 << j,
                '0' => {}
                other => {
                    return Err(Error::Parse(format!(
                        "row {i}: unexpected character {other:?}"
                    )))
                }
            }
        }
    }
    Ok(rows)
}

/// JSON wrapper of the text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub matrix: Vec<String>,
    pub point_labels: Vec<String>,
    pub plane_labels: Vec<String>,
}

/// Every two planes share exactly two points and every two points lie on
/// exactly two common planes.
pub fn is_nondegenerate(c: &Config16) -> bool {
    let cols = transpose(&c.rows);
    let pairs_ok =
        |m: &Matrix16| (0..SIZE).all(|a| (a + 1..SIZE).all(|b| (m[a] & m[b]).count_ones() == 2));
    pairs_ok(&c.rows) && pairs_ok(&cols)
}

/// Four points and four planes, each plane through exactly three of the
/// points and each point on exactly three of the planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RosenhainTetra {
    pub points: [usize; 4],
    pub planes: [usize; 4],
}

impl RosenhainTetra {
    pub fn is_valid_in(&self, c: &Config16) -> bool {
        let planes_ok = self
            .planes
            .iter()
            .all(|&j| self.points.iter().filter(|&&i| c.contains(i, j)).count() == 3);
        let points_ok = self
            .points
            .iter()
            .all(|&i| self.planes.iter().filter(|&&j| c.contains(i, j)).count() == 3);
        planes_ok && points_ok
    }
}

/// Scans all C(16,4) point quadruples.
pub fn rosenhain_enumerate(c: &Config16) -> Vec<RosenhainTetra> {
    let cols = transpose(&c.rows);
    let mut out = Vec::new();
    for quad in combinations(SIZE, 4) {
        let mask = quad.iter().fold(0u16, |acc, &i| acc | (1 << i));
        let planes: Vec<usize> = (0..SIZE)
            .filter(|&j| (cols[j] & mask).count_ones() == 3)
            .collect();
        if planes.len() != 4 {
            continue;
        }
        let tetra = RosenhainTetra {
            points: [quad[0], quad[1], quad[2], quad[3]],
            planes: [planes[0], planes[1], planes[2], planes[3]],
        };
        if tetra.is_valid_in(c) {
            out.push(tetra);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Classes of subsets of {0..5} modulo complement, split by parity, with
    /// incidence |S xor T| in {1, 5}. Built here independently of the line
    /// geometry.
    fn sign_rule() -> Config16 {
        let canon: Vec<u8> = (0u8..64).filter(|m| m & 1 == 0).collect();
        let odd: Vec<u8> = canon
            .iter()
            .copied()
            .filter(|m| m.count_ones() % 2 == 1)
            .collect();
        let even: Vec<u8> = canon
            .iter()
            .copied()
            .filter(|m| m.count_ones() % 2 == 0)
            .collect();
        let rows = matrix_from_fn(|i, j| matches!((odd[i] ^ even[j]).count_ones(), 1 | 5));
        Config16::new(rows).unwrap()
    }

    fn circulant() -> Matrix16 {
        matrix_from_fn(|i, j| (j + SIZE - i) % SIZE < 6)
    }

    fn blocks() -> Matrix16 {
        matrix_from_fn(|i, j| i / 4 == j / 4 || matches!((j + SIZE - i) % SIZE, 4 | 5))
    }

    #[test]
    fn config_predicate() {
        assert!(is_config(sign_rule().rows()));
        assert!(!is_config(&[0; SIZE]));
        assert!(!is_config(&[u16::MAX; SIZE]));
        assert!(is_config(&circulant()));
        assert!(is_config(&blocks()));
        assert_eq!(
            Config16::new([0; SIZE]).unwrap_err(),
            Error::NotConfiguration
        );
    }

    #[test]
    fn nondegeneracy() {
        assert!(is_nondegenerate(&sign_rule()));
        assert!(!is_nondegenerate(&Config16::new(blocks()).unwrap()));
        assert!(!is_nondegenerate(&Config16::new(circulant()).unwrap()));
    }

    #[test]
    fn rosenhain_counts() {
        // Frozen from an independent enumeration script.
        let kummer = sign_rule();
        let tetras = rosenhain_enumerate(&kummer);
        assert_eq!(tetras.len(), 80);
        assert!(tetras.iter().all(|t| t.is_valid_in(&kummer)));
        assert_eq!(
            rosenhain_enumerate(&Config16::new(circulant()).unwrap()).len(),
            0
        );
        assert_eq!(
            rosenhain_enumerate(&Config16::new(blocks()).unwrap()).len(),
            0
        );
    }

    #[test]
    fn enumeration_is_relabeling_invariant() {
        let c = sign_rule();
        let mut points: [usize; SIZE] = std::array::from_fn(|i| (i * 5 + 3) % SIZE);
        let planes: [usize; SIZE] = std::array::from_fn(|j| (SIZE - 1 - j) % SIZE);
        points.swap(0, 7);
        let p = c.permuted(&points, &planes);
        assert!(is_config(p.rows()));
        let mut image: Vec<RosenhainTetra> = rosenhain_enumerate(&c)
            .into_iter()
            .map(|t| {
                let inv =
                    |perm: &[usize; SIZE], x: usize| perm.iter().position(|&y| y == x).unwrap();
                let mut pts = t.points.map(|i| inv(&points, i));
                let mut pls = t.planes.map(|j| inv(&planes, j));
                pts.sort_unstable();
                pls.sort_unstable();
                RosenhainTetra {
                    points: pts,
                    planes: pls,
                }
            })
            .collect();
        image.sort();
        let mut direct = rosenhain_enumerate(&p);
        direct.sort();
        assert_eq!(image, direct);
    }

    #[test]
    fn text_and_json_formats() {
        let c = sign_rule();
        let text = c.to_text();
        assert_eq!(text.lines().count(), 16);
        assert!(text
            .lines()
            .all(|l| l.len() == 16 && l.chars().filter(|&x| x == '1').count() == 6));
        assert_eq!(Config16::parse_text(&text).unwrap(), c);
        let json = serde_json::to_string(&c.to_file()).unwrap();
        let back: ConfigFile = serde_json::from_str(&json).unwrap();
        assert_eq!(Config16::from_file(&back).unwrap(), c);
    }

    #[test]
    fn malformed_text_rejected() {
        assert!(matches!(
            Config16::parse_text("0101\n"),
            Err(Error::Parse(_))
        ));
        let bad = "2".repeat(16) + "\n";
        assert!(matches!(
            Config16::parse_text(&bad.repeat(16)),
            Err(Error::Parse(_))
        ));
        let zeros = ("0".repeat(16) + "\n").repeat(16);
        assert_eq!(
            Config16::parse_text(&zeros).unwrap_err(),
            Error::NotConfiguration
        );
    }
}
