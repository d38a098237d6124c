//! Seeded random instances.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, which is portable and stable across platforms, so a
//! parameter set plus seed always yields the same instance.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub m: usize,
    /// Largest hyperedge size, at least 2 and at most `n`.
    pub rank_max: usize,
    /// Costs are drawn uniformly from `1..=weight_max`.
    pub weight_max: u64,
    pub seed: u64,
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        if self.rank_max < 2 || self.rank_max > self.n {
            return Err(Error::InvalidParams(format!(
                "need 2 <= rank_max <= n (rank_max = {}, n = {})",
                self.rank_max, self.n
            )));
        }
        if self.weight_max == 0 {
            return Err(Error::InvalidParams("weight_max must be at least 1".into()));
        }
        Ok(())
    }
}

/// `m` hyperedges; each has size uniform in `2..=rank_max`, a uniformly
/// random vertex set of that size and cost uniform in `1..=weight_max`.
///
/// ```
/// use hypergraph_kcut::{gen_random, GenParams};
///
/// let p = GenParams { n: 6, m: 8, rank_max: 4, weight_max: 1, seed: 42 };
/// assert_eq!(gen_random(&p).unwrap(), gen_random(&p).unwrap());
/// ```
pub fn gen_random(p: &GenParams) -> Result<Hypergraph> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let edges: Vec<(Vec<usize>, u64)> = (0..p.m)
        .map(|_| {
            let size = rng.gen_range(2..=p.rank_max);
            let verts = sample(&mut rng, p.n, size).into_vec();
            let cost = rng.gen_range(1..=p.weight_max);
            (verts, cost)
        })
        .collect();
    Hypergraph::new(p.n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let p = GenParams {
            n: 6,
            m: 8,
            rank_max: 4,
            weight_max: 1,
            seed: 42,
        };
        let a = gen_random(&p).unwrap();
        assert_eq!(a, gen_random(&p).unwrap());
        assert_eq!(a.m(), 8);
        assert!(a.edges().iter().all(|e| (2..=4).contains(&e.len()) && e.cost() == 1));
        let b = gen_random(&GenParams { seed: 43, ..p }).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn rank_two_forced() {
        let p = GenParams {
            n: 3,
            m: 1,
            rank_max: 2,
            weight_max: 1,
            seed: 7,
        };
        let h = gen_random(&p).unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(h.edges()[0].len(), 2);
    }

    #[test]
    fn invalid_params() {
        let p = GenParams {
            n: 6,
            m: 8,
            rank_max: 7,
            weight_max: 1,
            seed: 0,
        };
        assert!(matches!(gen_random(&p), Err(Error::InvalidParams(_))));
        assert!(gen_random(&GenParams { rank_max: 1, ..p }).is_err());
        assert!(gen_random(&GenParams {
            rank_max: 3,
            weight_max: 0,
            ..p
        })
        .is_err());
    }
}
