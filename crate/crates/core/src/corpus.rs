//! Deterministic pseudorandom corpora of monomial ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, ExponentVector};

const MAX_ATTEMPTS: usize = 10_000;

/// Parameters of a corpus. Equal specs give equal corpora.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub gens_min: usize,
    pub gens_max: usize,
    pub max_exp: Exp,
    pub m_list: Vec<Exp>,
    pub max_s: u32,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 20240501,
            count: 100,
            n_min: 2,
            n_max: 4,
            gens_min: 2,
            gens_max: 5,
            max_exp: 3,
            m_list: vec![2, 3],
            max_s: 3,
        }
    }
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.max_exp == 0 {
            return Err(Error::input("corpus max exponent must be at least 1"));
        }
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::input("corpus variable range must satisfy 1 <= n_min <= n_max"));
        }
        if self.gens_min == 0 || self.gens_min > self.gens_max {
            return Err(Error::input("corpus generator range must satisfy 1 <= gens_min <= gens_max"));
        }
        if self.m_list.contains(&0) {
            return Err(Error::input("square power exponents must be at least 1"));
        }
        Ok(())
    }
}

/// Draw `spec.count` proper nonzero ideals. Each draw picks `n`, a target
/// generator count and that many random nonzero exponent vectors; draws
/// whose minimalization has fewer than `gens_min` generators are redrawn.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<MonomialIdeal>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        out.push(draw(&mut rng, spec)?);
    }
    Ok(out)
}

fn draw(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> Result<MonomialIdeal> {
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.gen_range(spec.n_min..=spec.n_max);
        let k = rng.gen_range(spec.gens_min..=spec.gens_max);
        let raw: Vec<ExponentVector> = (0..k)
            .map(|_| loop {
                let v: Vec<Exp> = (0..n).map(|_| rng.gen_range(0..=spec.max_exp)).collect();
                if v.iter().any(|&e| e > 0) {
                    break ExponentVector::new(v);
                }
            })
            .collect();
        let ideal = MonomialIdeal::minimalize(raw, n)?;
        if ideal.is_proper_nonzero() && ideal.num_gens() >= spec.gens_min {
            return Ok(ideal);
        }
    }
    Err(Error::input(format!(
        "corpus spec admits no ideal with at least {} minimal generators",
        spec.gens_min
    )))
}

/// A second ideal in the same ring, derived deterministically from a seed.
/// Used by checks that need a pair of ideals.
pub fn companion(ideal: &MonomialIdeal, spec: &CorpusSpec, index: usize) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = ideal.n();
    let k = rng.gen_range(1..=spec.gens_max.max(1));
    let raw: Vec<ExponentVector> = (0..k)
        .map(|_| {
            let mut v: Vec<Exp> = (0..n).map(|_| rng.gen_range(0..=spec.max_exp.max(1))).collect();
            if v.iter().all(|&e| e == 0) {
                v[rng.gen_range(0..n)] = 1;
            }
            ExponentVector::new(v)
        })
        .collect();
    MonomialIdeal::minimalize(raw, n).expect("companion vectors have length n")
}
