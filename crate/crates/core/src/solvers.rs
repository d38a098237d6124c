//! Exact minimum k-partition solvers.
//!
//! * [`cut_recursive`] peels off one part at a time. Every part of a
//!   maximal minimum k-partition is either tiny (at most `2k-3` vertices,
//!   so it is enumerated outright) or it is the source-maximal minimum
//!   `(S,T)`-terminal cut for some `|S| = 2k-2`, `|T| = k-1`.
//! * [`cut_divide_conquer`] instead recovers the union of `⌊k/2⌋` parts as a
//!   source-minimal minimum `(S,T)`-terminal cut with `|S|,|T| <= 2k-2`, then
//!   solves both sides independently. The recursion depth drops to
//!   `O(log k)`.
//!
//! Both run a pure map over candidate sets followed by a reduction to the
//! smallest `(value, canonical partition)`, so results do not depend on the
//! degree of parallelism.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::AddAssign;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Partition, VertexSet};
use crate::oracle;
use crate::subsets::{by_size, disjoint_pairs};
use crate::terminal_cut::min_terminal_cut;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Minimum terminal cut computations.
    pub terminal_cut_calls: u64,
    /// Solver invocations, including the trivial `k = 1` leaves.
    pub recursion_nodes: u64,
    /// Candidate partitions assembled and costed.
    pub candidates_considered: u64,
    pub wall_time: Duration,
}

impl AddAssign for SolveStats {
    fn add_assign(&mut self, rhs: SolveStats) {
        self.terminal_cut_calls += rhs.terminal_cut_calls;
        self.recursion_nodes += rhs.recursion_nodes;
        self.candidates_considered += rhs.candidates_considered;
        self.wall_time += rhs.wall_time;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Canonical k-partition.
    pub partition: Partition,
    pub value: u64,
    pub stats: SolveStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Recursive,
    DivideConquer,
    BruteForce,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Recursive => "recursive",
            Algorithm::DivideConquer => "dc",
            Algorithm::BruteForce => "brute",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursive" => Ok(Algorithm::Recursive),
            "dc" | "divide-conquer" => Ok(Algorithm::DivideConquer),
            "brute" | "brute-force" => Ok(Algorithm::BruteForce),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Return a zero-cost partition directly when `H` has at least `k`
    /// connected components.
    pub component_shortcut: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            threads: None,
            component_shortcut: true,
        }
    }
}

fn check_k(h: &Hypergraph, k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::KZero)
    } else if k > h.n() {
        Err(Error::KTooLarge { k, n: h.n() })
    } else {
        Ok(())
    }
}

/// Recursive algorithm peeling off one part per level.
pub fn cut_recursive(h: &Hypergraph, k: usize) -> Result<Solution> {
    check_k(h, k)?;
    let start = Instant::now();
    let found = recursive(h, k);
    Ok(found.into_solution(start))
}

/// Divide-and-conquer algorithm splitting off `⌊k/2⌋` parts per level.
pub fn cut_divide_conquer(h: &Hypergraph, k: usize) -> Result<Solution> {
    check_k(h, k)?;
    let start = Instant::now();
    let found = divide_conquer(h, k);
    Ok(found.into_solution(start))
}

/// Dispatches to `algo` after the component shortcut.
pub fn solve(h: &Hypergraph, k: usize, algo: Algorithm, opts: &SolveOptions) -> Result<Solution> {
    check_k(h, k)?;
    let start = Instant::now();
    if opts.component_shortcut {
        if let Some(partition) = component_partition(h, k) {
            return Ok(Solution {
                value: h.labels_cost(&partition.labels()),
                partition,
                stats: SolveStats {
                    wall_time: start.elapsed(),
                    ..SolveStats::default()
                },
            });
        }
    }
    let run = || match algo {
        Algorithm::Recursive => cut_recursive(h, k),
        Algorithm::DivideConquer => cut_divide_conquer(h, k),
        Algorithm::BruteForce => {
            let bf = oracle::min_kcut_bruteforce(h, k)?;
            let partition = bf.optima.into_iter().next().expect("k <= n has an optimum");
            Ok(Solution {
                partition,
                value: bf.value,
                stats: SolveStats {
                    recursion_nodes: 1,
                    candidates_considered: bf.partitions_enumerated,
                    wall_time: start.elapsed(),
                    ..SolveStats::default()
                },
            })
        }
    };
    let mut sol = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    sol.stats.wall_time = start.elapsed();
    Ok(sol)
}

/// When `h` has at least `k` components: the first `k-1` components (by
/// smallest id) as singleton parts, everything else merged into the last.
pub fn component_partition(h: &Hypergraph, k: usize) -> Option<Partition> {
    let comps = h.components();
    if k == 0 || comps.len() < k {
        return None;
    }
    let mut parts: Vec<VertexSet> = comps[..k - 1].to_vec();
    parts.push(VertexSet::new(comps[k - 1..].iter().flat_map(|c| c.iter())));
    Some(Partition::from_parts_unchecked(parts))
}

struct Found {
    value: u64,
    partition: Partition,
    stats: SolveStats,
}

impl Found {
    fn leaf(n: usize) -> Found {
        Found {
            value: 0,
            partition: Partition::trivial(n),
            stats: SolveStats {
                recursion_nodes: 1,
                ..SolveStats::default()
            },
        }
    }

    fn into_solution(self, start: Instant) -> Solution {
        Solution {
            partition: self.partition,
            value: self.value,
            stats: SolveStats {
                wall_time: start.elapsed(),
                ..self.stats
            },
        }
    }
}

/// Costs every candidate and keeps the smallest `(value, partition)`.
fn best_of<F>(h: &Hypergraph, candidates: &BTreeSet<VertexSet>, mut stats: SolveStats, assemble: F) -> Found
where
    F: Fn(&VertexSet) -> (Vec<VertexSet>, SolveStats) + Sync,
{
    stats.candidates_considered += candidates.len() as u64;
    let evaluated: Vec<(u64, Partition, SolveStats)> = candidates
        .par_iter()
        .map(|u| {
            let (parts, sub_stats) = assemble(u);
            let partition = Partition::from_parts_unchecked(parts).canonicalize();
            (h.labels_cost(&partition.labels()), partition, sub_stats)
        })
        .collect();
    let mut best: Option<(u64, Partition)> = None;
    for (value, partition, sub_stats) in evaluated {
        stats += sub_stats;
        let better = match &best {
            None => true,
            Some((bv, bp)) => (value, &partition) < (*bv, bp),
        };
        if better {
            best = Some((value, partition));
        }
    }
    let (value, partition) = best.expect("at least one candidate for 2 <= k <= n");
    Found {
        value,
        partition,
        stats,
    }
}

/// Solves on `G[set]` and lifts the resulting parts back to `h`'s ids.
fn solve_induced(
    h: &Hypergraph,
    set: &VertexSet,
    k: usize,
    solver: fn(&Hypergraph, usize) -> Found,
) -> (Vec<VertexSet>, SolveStats) {
    let (sub, map) = h.induced(set).expect("non-empty candidate side");
    let found = solver(&sub, k);
    let parts = found.partition.parts().iter().map(|p| map.lift(p)).collect();
    (parts, found.stats)
}

fn recursive(h: &Hypergraph, k: usize) -> Found {
    let n = h.n();
    if k == 1 {
        return Found::leaf(n);
    }
    let mut stats = SolveStats {
        recursion_nodes: 1,
        ..SolveStats::default()
    };
    // the rest must still hold k-1 non-empty parts
    let fits = |u: &VertexSet| n - u.len() >= k - 1;
    let all: Vec<usize> = (0..n).collect();
    let mut candidates: BTreeSet<VertexSet> = by_size(&all, 1, 2 * k - 3).map(VertexSet::from).filter(fits).collect();
    let pairs = disjoint_pairs(n, (2 * k - 2, 2 * k - 2), (k - 1, k - 1));
    stats.terminal_cut_calls += pairs.len() as u64;
    let sides: Vec<VertexSet> = pairs
        .par_iter()
        .map(|(s, t)| {
            min_terminal_cut(h, &s.iter().copied().collect(), &t.iter().copied().collect())
                .expect("disjoint non-empty terminals")
                .src_maximal
        })
        .collect();
    candidates.extend(sides.into_iter().filter(fits));

    best_of(h, &candidates, stats, |u| {
        let (rest, sub_stats) = solve_induced(h, &u.complement(n), k - 1, recursive);
        let mut parts = Vec::with_capacity(k);
        parts.push(u.clone());
        parts.extend(rest);
        (parts, sub_stats)
    })
}

fn divide_conquer(h: &Hypergraph, k: usize) -> Found {
    let n = h.n();
    if k == 1 {
        return Found::leaf(n);
    }
    let mut stats = SolveStats {
        recursion_nodes: 1,
        ..SolveStats::default()
    };
    let p = k / 2;
    let pairs = disjoint_pairs(n, (1, 2 * k - 2), (1, 2 * k - 2));
    stats.terminal_cut_calls += pairs.len() as u64;
    let sides: Vec<VertexSet> = pairs
        .par_iter()
        .map(|(s, t)| {
            min_terminal_cut(h, &s.iter().copied().collect(), &t.iter().copied().collect())
                .expect("disjoint non-empty terminals")
                .src_minimal
        })
        .collect();
    let candidates: BTreeSet<VertexSet> = sides
        .into_iter()
        .filter(|u| u.len() >= p && n - u.len() >= k - p)
        .collect();

    best_of(h, &candidates, stats, |u| {
        let (mut parts, mut sub_stats) = solve_induced(h, u, p, divide_conquer);
        let (rest, rest_stats) = solve_induced(h, &u.complement(n), k - p, divide_conquer);
        parts.extend(rest);
        sub_stats += rest_stats;
        (parts, sub_stats)
    })
}
