//! Seeded random digraphs.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`. Ordered pairs `(u, v)`, `u != v`, are visited in
//! lexicographic order and each becomes an arc with probability
//! `num / den`, decided by one `gen_range(0..den) < num` draw. Rejected
//! samples keep drawing from the same stream, so a spec always yields the
//! same digraph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::conditions::Condition;
use crate::connectivity::{is_k_strong, is_strong};
use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

pub type Prng = ChaCha8Rng;

pub fn prng(seed: u64) -> Prng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational probability `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcProbability {
    num: u32,
    den: u32,
}

impl ArcProbability {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidProbability { num, den });
        }
        Ok(ArcProbability { num, den })
    }

    /// `percent / 100`.
    pub fn percent(percent: u32) -> Result<Self> {
        Self::new(percent, 100)
    }

    pub fn sample(&self, rng: &mut impl Rng) -> bool {
        rng.gen_range(0..self.den) < self.num
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PostFilter {
    Strong,
    KStrong(usize),
    ConditionM { z0: usize },
    ConditionN,
    MeynielSet(VertexSet),
}

impl PostFilter {
    pub fn accepts(&self, d: &Digraph) -> Result<bool> {
        match *self {
            PostFilter::Strong => Ok(is_strong(d)),
            PostFilter::KStrong(k) => is_k_strong(d, k),
            PostFilter::ConditionM { z0 } => Ok(Condition::M { z0 }.check(d)?.holds),
            PostFilter::ConditionN => Ok(Condition::N.check(d)?.holds),
            PostFilter::MeynielSet(set) => Ok(Condition::MeynielSet(set).check(d)?.holds),
        }
    }
}

/// Maximum number of samples drawn before giving up on the filters.
pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub n: usize,
    pub arc_probability: ArcProbability,
    pub seed: u64,
    /// All filters must accept the sample.
    pub post_filter: Vec<PostFilter>,
}

impl RandomSpec {
    pub fn new(n: usize, arc_probability: ArcProbability, seed: u64) -> Self {
        RandomSpec {
            n,
            arc_probability,
            seed,
            post_filter: Vec::new(),
        }
    }

    pub fn filtered(mut self, filter: PostFilter) -> Self {
        self.post_filter.push(filter);
        self
    }
}

/// One unfiltered sample drawn from `rng`.
pub fn sample_digraph(n: usize, p: ArcProbability, rng: &mut impl Rng) -> Result<Digraph> {
    let mut d = Digraph::empty(n)?;
    for u in 0..n {
        for v in 0..n {
            if u != v && p.sample(rng) {
                d.add_arc(u, v)?;
            }
        }
    }
    Ok(d)
}

pub fn random_digraph(spec: &RandomSpec) -> Result<Digraph> {
    let mut rng = prng(spec.seed);
    for _ in 0..MAX_ATTEMPTS {
        let d = sample_digraph(spec.n, spec.arc_probability, &mut rng)?;
        let mut ok = true;
        for f in &spec.post_filter {
            if !f.accepts(&d)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(d);
        }
    }
    Err(Error::FilterGaveUp {
        attempts: MAX_ATTEMPTS,
    })
}
