#![allow(dead_code)]

use hypergraph_kcut::oracle::AccountedPartition;
use hypergraph_kcut::{gen_random, GenParams, Hypergraph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn h1() -> Hypergraph {
    Hypergraph::unit(3, [vec![0, 1, 2]]).unwrap()
}

pub fn h2() -> Hypergraph {
    Hypergraph::unit(3, [vec![0, 1], vec![1, 2]]).unwrap()
}

pub fn h3() -> Hypergraph {
    Hypergraph::unit(4, [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap()
}

/// Cut value by bitmask, written independently of the library.
pub fn cut_bits(h: &Hypergraph, inside: u64) -> u64 {
    h.edges()
        .iter()
        .filter(|e| {
            let hits = e.vertices().iter().filter(|&&v| inside >> v & 1 == 1).count();
            hits > 0 && hits < e.len()
        })
        .map(|e| e.cost())
        .sum()
}

/// Exhaustive minimum `(S,T)`-terminal cut: value and the intersection and
/// union of all optimal source sides.
pub fn brute_terminal_cut(h: &Hypergraph, s: &VertexSet, t: &VertexSet) -> (u64, VertexSet, VertexSet) {
    let n = h.n();
    let (sb, tb) = (s.to_bits(), t.to_bits());
    let free: Vec<usize> = (0..n).filter(|&v| sb >> v & 1 == 0 && tb >> v & 1 == 0).collect();
    let mut best = u64::MAX;
    let (mut meet, mut join) = (0u64, 0u64);
    for pick in 0u64..1 << free.len() {
        let mut side = sb;
        for (i, &v) in free.iter().enumerate() {
            if pick >> i & 1 == 1 {
                side |= 1 << v;
            }
        }
        let c = cut_bits(h, side);
        if c < best {
            best = c;
            meet = side;
            join = side;
        } else if c == best {
            meet &= side;
            join |= side;
        }
    }
    (best, VertexSet::from_bits(meet), VertexSet::from_bits(join))
}

pub fn random_instance<R: Rng>(rng: &mut R, n: usize, m_max: usize, rank: usize, weighted: bool) -> Hypergraph {
    gen_random(&GenParams {
        n,
        m: rng.gen_range(0..=m_max),
        rank_max: rank.clamp(2, n),
        weight_max: if weighted { 5 } else { 1 },
        seed: rng.gen(),
    })
    .unwrap()
}

/// Disjoint non-empty random terminal sets.
pub fn random_terminals<R: Rng>(rng: &mut R, n: usize) -> (VertexSet, VertexSet) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let s_len = rng.gen_range(1..n);
    let t_len = rng.gen_range(1..=n - s_len);
    (
        VertexSet::new(order[..s_len].iter().copied()),
        VertexSet::new(order[s_len..s_len + t_len].iter().copied()),
    )
}

/// Uniform labels in `0..parts` with every label used; requires `n >= parts`.
pub fn random_labels<R: Rng>(rng: &mut R, n: usize, parts: usize) -> Vec<usize> {
    let mut labels: Vec<usize> = (0..parts).chain((parts..n).map(|_| rng.gen_range(0..parts))).collect();
    labels.shuffle(rng);
    labels
}

pub fn sets_from_labels(labels: &[usize], parts: usize) -> Vec<VertexSet> {
    (0..parts)
        .map(|l| VertexSet::new((0..labels.len()).filter(|&v| labels[v] == l)))
        .collect()
}

/// Random `(Y_1, …, Y_p, W, Z)` on `n >= p + 2` vertices.
pub fn random_accounted<R: Rng>(rng: &mut R, n: usize, p: usize) -> AccountedPartition {
    let mut sets = sets_from_labels(&random_labels(rng, n, p + 2), p + 2);
    let z = sets.pop().unwrap();
    let w = sets.pop().unwrap();
    AccountedPartition::new(n, sets, w, z).unwrap()
}

/// Random admissible `Q` for a refinement step, if one exists within a few
/// tries: it must meet `Z` without covering it and leave every part of the
/// refined partition non-empty.
pub fn random_refiner<R: Rng>(rng: &mut R, ap: &AccountedPartition, n: usize) -> Option<VertexSet> {
    for _ in 0..20 {
        let q = VertexSet::new((0..n).filter(|_| rng.gen_bool(0.35)));
        if ap.refine_with(&q).is_some() {
            return Some(q);
        }
    }
    None
}
