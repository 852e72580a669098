//! Deterministic random inputs for property tests and the CLI corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{parse_rat, rat, ratio, Rat};
use crate::error::Result;
use crate::hecurve::{from_lambda, LambdaForm};
use crate::kummer::make_branch;

pub const MAX_HEIGHT: i64 = 30;

/// Numerator in [-30, 30], denominator in [1, 30]; integers half the time.
pub fn sample_rat<R: Rng>(rng: &mut R) -> Rat {
    let num = rng.random_range(-MAX_HEIGHT..=MAX_HEIGHT);
    if rng.random_bool(0.5) {
        rat(num)
    } else {
        ratio(num, rng.random_range(1..=MAX_HEIGHT))
    }
}

fn distinct<const N: usize, R: Rng>(rng: &mut R, ok: impl Fn(&Rat) -> bool) -> [Rat; N] {
    let mut out: Vec<Rat> = Vec::with_capacity(N);
    while out.len() < N {
        let x = sample_rat(rng);
        if ok(&x) && !out.contains(&x) {
            out.push(x);
        }
    }
    out.try_into().expect("filled to N")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub seed: u64,
    /// Branch data whose radical basis is independent.
    pub sextuples: Vec<[Rat; 6]>,
    /// Parameters of smooth type-5 curves.
    pub triples: Vec<[Rat; 3]>,
    /// Distinct sextuples rejected for a dependent basis.
    pub degenerate: Vec<[Rat; 6]>,
}

pub fn sample(seed: u64, count: usize) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sextuples = Vec::with_capacity(count);
    let mut degenerate = Vec::new();
    while sextuples.len() < count {
        let a: [Rat; 6] = distinct(&mut rng, |_| true);
        let b = make_branch(a.clone()).expect("entries are distinct");
        if b.basis().is_independent() {
            sextuples.push(a);
        } else {
            degenerate.push(a);
        }
    }
    let mut triples = Vec::with_capacity(count);
    while triples.len() < count {
        let l: [Rat; 3] = distinct(&mut rng, |x| *x != rat(0) && *x != rat(1));
        let smooth = LambdaForm::new(l.to_vec())
            .and_then(|f| from_lambda(&f))
            .is_ok();
        if smooth {
            triples.push(l);
        }
    }
    Corpus {
        seed,
        sextuples,
        triples,
        degenerate,
    }
}

/// JSON form with rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFile {
    pub seed: u64,
    pub sextuples: Vec<Vec<String>>,
    pub triples: Vec<Vec<String>>,
    pub degenerate: Vec<Vec<String>>,
}

fn strings(rows: &[impl AsRef<[Rat]>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.as_ref().iter().map(ToString::to_string).collect())
        .collect()
}

fn parse_rows<const N: usize>(rows: &[Vec<String>]) -> Result<Vec<[Rat; N]>> {
    rows.iter()
        .map(|r| {
            let v = r.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
            let len = v.len();
            v.try_into().map_err(|_| crate::Error::SizeMismatch(N, len))
        })
        .collect()
}

impl Corpus {
    pub fn to_file(&self) -> CorpusFile {
        CorpusFile {
            seed: self.seed,
            sextuples: strings(&self.sextuples),
            triples: strings(&self.triples),
            degenerate: strings(&self.degenerate),
        }
    }

    pub fn from_file(f: &CorpusFile) -> Result<Corpus> {
        Ok(Corpus {
            seed: f.seed,
            sextuples: parse_rows(&f.sextuples)?,
            triples: parse_rows(&f.triples)?,
            degenerate: parse_rows(&f.degenerate)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::height;
    use num_bigint::BigInt;

    #[test]
    fn deterministic() {
        assert_eq!(sample(42, 5), sample(42, 5));
        assert_ne!(sample(42, 5), sample(43, 5));
    }

    #[test]
    fn bounded_and_valid() {
        let c = sample(7, 30);
        for a in &c.sextuples {
            assert!(a.iter().all(|x| height(x) <= BigInt::from(MAX_HEIGHT)));
            assert!(make_branch(a.clone()).unwrap().basis().is_independent());
        }
        for l in &c.triples {
            assert!(from_lambda(&LambdaForm::new(l.to_vec()).unwrap()).is_ok());
        }
    }

    #[test]
    fn degenerate_draws_recorded() {
        let c = sample(1, 300);
        assert!(!c.degenerate.is_empty());
        for a in &c.degenerate {
            assert!(!make_branch(a.clone()).unwrap().basis().is_independent());
        }
    }

    #[test]
    fn file_round_trip() {
        let c = sample(3, 4);
        let json = serde_json::to_string(&c.to_file()).unwrap();
        let back: CorpusFile = serde_json::from_str(&json).unwrap();
        assert_eq!(Corpus::from_file(&back).unwrap(), c);
    }
}
