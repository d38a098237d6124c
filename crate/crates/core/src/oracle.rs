//! Exhaustive ground truth and executable structural checks.
//!
//! The enumerator here shares no code path with the solvers: it walks
//! every k-partition as a restricted growth string and costs it directly.
//! The checkers replay the structural facts behind the solvers (terminal
//! cut recovery of optimal parts, the crossing accounting `σ`, uncrossing
//! and aggregation) on concrete instances and record every counterexample
//! with a reproducible transcript instead of failing fast.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, Partition, VertexSet};
use crate::io::write_instance;
use crate::subsets::by_size;
use crate::terminal_cut::min_terminal_cut;

/// Largest vertex count the exhaustive enumerator accepts.
pub const ORACLE_MAX_N: usize = 14;

/// Above this many candidate sink vertices, [`check_small_witness`] samples
/// sink sets instead of enumerating them.
pub const SINK_ENUMERATION_LIMIT: usize = 8;
pub const SINK_SAMPLES: usize = 50;
const SINK_SAMPLE_SEED: u64 = 0x5eed;

fn guard(h: &Hypergraph, k: usize) -> Result<()> {
    if h.n() > ORACLE_MAX_N {
        return Err(Error::OracleTooLarge {
            n: h.n(),
            max: ORACLE_MAX_N,
        });
    }
    if k == 0 {
        return Err(Error::KZero);
    }
    if k > h.n() {
        return Err(Error::KTooLarge { k, n: h.n() });
    }
    Ok(())
}

/// Calls `visit` with the block labels of every partition of `0..n` into
/// exactly `k` non-empty blocks, each exactly once, as restricted growth
/// strings in lexicographic order.
pub fn for_each_kpartition(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k == 0 || k > n {
        return;
    }
    let mut labels = vec![0; n];
    fn walk(i: usize, blocks: usize, n: usize, k: usize, labels: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if i == n {
            if blocks == k {
                visit(labels);
            }
            return;
        }
        let top = if blocks < k { blocks + 1 } else { k };
        for b in 0..top {
            let next = blocks.max(b + 1);
            // enough positions left to open the missing blocks
            if n - i - 1 < k - next {
                continue;
            }
            labels[i] = b;
            walk(i + 1, next, n, k, labels, visit);
        }
    }
    labels[0] = 0;
    walk(1, 1, n, k, &mut labels, &mut visit);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForce {
    pub value: u64,
    /// Every optimal k-partition, canonical, in increasing order.
    pub optima: Vec<Partition>,
    pub partitions_enumerated: u64,
}

/// Minimum k-partition value and all optimal k-partitions by enumeration.
pub fn min_kcut_bruteforce(h: &Hypergraph, k: usize) -> Result<BruteForce> {
    guard(h, k)?;
    let mut best = u64::MAX;
    let mut optima = Vec::new();
    let mut count = 0;
    for_each_kpartition(h.n(), k, |labels| {
        count += 1;
        let cost = h.labels_cost(labels);
        if cost < best {
            best = cost;
            optima.clear();
        }
        if cost == best {
            optima.push(Partition::from_labels(labels));
        }
    });
    optima.sort();
    Ok(BruteForce {
        value: best,
        optima,
        partitions_enumerated: count,
    })
}

/// A minimum k-partition written as its distinguished first part and the
/// remaining `k-1` parts (canonical order).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DistinguishedPartition {
    pub first: VertexSet,
    pub rest: Vec<VertexSet>,
}

/// Every (first part, remainder) of a minimum k-partition whose first part
/// is not strictly contained in a part of another minimum k-partition.
pub fn maximal_min_kpartitions(h: &Hypergraph, k: usize) -> Result<Vec<DistinguishedPartition>> {
    let bf = min_kcut_bruteforce(h, k)?;
    let optimal_parts: BTreeSet<&VertexSet> = bf.optima.iter().flat_map(|p| p.parts()).collect();
    let mut out = BTreeSet::new();
    for p in &bf.optima {
        for (i, first) in p.parts().iter().enumerate() {
            let dominated = optimal_parts
                .iter()
                .any(|q| q.len() > first.len() && first.is_subset(q));
            if !dominated {
                let rest = p
                    .parts()
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, q)| q.clone())
                    .collect();
                out.insert(DistinguishedPartition {
                    first: first.clone(),
                    rest,
                });
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Unions of `⌊k/2⌋` parts of minimum k-partitions that are inclusion-minimal
/// among all such unions.
pub fn minimal_balanced_splits(h: &Hypergraph, k: usize) -> Result<Vec<VertexSet>> {
    let bf = min_kcut_bruteforce(h, k)?;
    let p = k / 2;
    let mut unions = BTreeSet::new();
    for opt in &bf.optima {
        for chosen in opt.parts().iter().combinations(p) {
            unions.insert(VertexSet::new(chosen.into_iter().flat_map(|s| s.iter())));
        }
    }
    Ok(unions
        .iter()
        .filter(|u| !unions.iter().any(|o| o.len() < u.len() && o.is_subset(u)))
        .cloned()
        .collect())
}

/// A partition `(Y_1, …, Y_p, W, Z)` with `p >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccountedPartition {
    y: Vec<VertexSet>,
    w: VertexSet,
    z: VertexSet,
}

impl AccountedPartition {
    pub fn new(n: usize, y: Vec<VertexSet>, w: VertexSet, z: VertexSet) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::InvalidPartition("need at least one Y part".into()));
        }
        let mut parts = y.clone();
        parts.push(w.clone());
        parts.push(z.clone());
        Partition::new(n, parts)?;
        Ok(AccountedPartition { y, w, z })
    }

    pub fn y(&self) -> &[VertexSet] {
        &self.y
    }

    pub fn w(&self) -> &VertexSet {
        &self.w
    }

    pub fn z(&self) -> &VertexSet {
        &self.z
    }

    pub fn p(&self) -> usize {
        self.y.len()
    }

    pub fn n(&self) -> usize {
        self.y.iter().map(VertexSet::len).sum::<usize>() + self.w.len() + self.z.len()
    }

    /// The `(p+2)`-partition `(Y_1, …, Y_p, W, Z)`.
    pub fn partition(&self) -> Partition {
        let mut parts = self.y.clone();
        parts.push(self.w.clone());
        parts.push(self.z.clone());
        Partition::from_parts_unchecked(parts)
    }

    /// Labels: `Y_i -> i`, `W -> p`, `Z -> p + 1`.
    fn labels(&self) -> Vec<usize> {
        self.partition().labels()
    }

    /// Splits along `Q`: `Y_i = X_i - Q`, `Y_{p+1} = Q ∩ Z_0`,
    /// `Z = Z_0 - Q`, `W = W_0 ∪ (Q - Z_0)`. `None` when any resulting part
    /// would be empty.
    pub fn refine_with(&self, q: &VertexSet) -> Option<AccountedPartition> {
        let mut y: Vec<VertexSet> = self.y.iter().map(|x| x.difference(q)).collect();
        let y_new = q.intersection(&self.z);
        let z = self.z.difference(q);
        let w = self.w.union(&q.difference(&self.z));
        if y.iter().any(VertexSet::is_empty) || y_new.is_empty() || z.is_empty() || w.is_empty() {
            return None;
        }
        y.push(y_new);
        Some(AccountedPartition { y, w, z })
    }
}

/// The crossing accounting of an [`AccountedPartition`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PartitionAccounting {
    /// Cost of hyperedges crossing `(Y_1, …, Y_p, W, Z)`.
    pub cross_cost: u64,
    /// Hyperedges inside `W ∪ Z` meeting both.
    pub wz_cost: u64,
    /// Hyperedges meeting `Z` and at least two of `Y_1, …, Y_p, W`.
    pub alpha: u64,
    /// Hyperedges avoiding `Z` and meeting at least two of `Y_1, …, Y_p`.
    pub beta: u64,
    pub sigma: u64,
}

/// Per-hyperedge membership in the four accounting terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EdgeClass {
    pub crosses: bool,
    pub wz: bool,
    pub alpha: bool,
    pub beta: bool,
}

impl EdgeClass {
    /// How many times `σ` counts the hyperedge (0, 1 or 2).
    pub fn sigma_count(&self) -> u8 {
        [self.crosses, self.wz, self.alpha, self.beta]
            .iter()
            .filter(|&&b| b)
            .count() as u8
    }
}

fn classify(labels: &[usize], p: usize, e: &Hyperedge) -> EdgeClass {
    let hit: BTreeSet<usize> = e.vertices().iter().map(|&v| labels[v]).collect();
    let (w, z) = (p, p + 1);
    let ys = hit.iter().filter(|&&l| l < p).count();
    let meets_z = hit.contains(&z);
    EdgeClass {
        crosses: hit.len() >= 2,
        wz: ys == 0 && hit.contains(&w) && meets_z,
        alpha: meets_z && hit.len() > 2,
        beta: !meets_z && ys >= 2,
    }
}

fn check_accounted(h: &Hypergraph, ap: &AccountedPartition) -> Result<()> {
    if ap.n() != h.n() {
        return Err(Error::InvalidPartition(format!(
            "accounted partition covers {} vertices, hypergraph has {}",
            ap.n(),
            h.n()
        )));
    }
    Ok(())
}

/// Classification of every hyperedge of `h`, in edge order.
pub fn edge_classes(h: &Hypergraph, ap: &AccountedPartition) -> Result<Vec<EdgeClass>> {
    check_accounted(h, ap)?;
    let labels = ap.labels();
    Ok(h.edges().iter().map(|e| classify(&labels, ap.p(), e)).collect())
}

/// `cost`, `cost(W,Z)`, `α`, `β` and their sum `σ`.
pub fn accounting(h: &Hypergraph, ap: &AccountedPartition) -> Result<PartitionAccounting> {
    let classes = edge_classes(h, ap)?;
    let mut acc = PartitionAccounting::default();
    for (e, c) in h.edges().iter().zip(&classes) {
        let w = e.cost();
        acc.cross_cost += if c.crosses { w } else { 0 };
        acc.wz_cost += if c.wz { w } else { 0 };
        acc.alpha += if c.alpha { w } else { 0 };
        acc.beta += if c.beta { w } else { 0 };
    }
    acc.sigma = acc.cross_cost + acc.wz_cost + acc.alpha + acc.beta;
    Ok(acc)
}

/// Builds `(Y_1, …, Y_p, W, Z)` from a family `A_1, …, A_p` of sink sides:
/// `W` is the union of pairwise intersections, `Z` the common complement and
/// `Y_i = A_i - W`.
///
/// Only set conditions are checked: `∅ ≠ R ⊊ U ⊊ V`, `S ⊆ U - R`, `p >= 2`,
/// each `A_i` contains `∁U`, avoids `(S ∪ R) - {u_i}`, and `u_i` lies in
/// `A_i` alone. Minimality of the cuts is the caller's business.
pub fn uncross_family(
    h: &Hypergraph,
    u: &VertexSet,
    r: &VertexSet,
    s: &[usize],
    a: &[VertexSet],
) -> Result<AccountedPartition> {
    let n = h.n();
    let bad = |msg: String| Err(Error::Precondition(msg));
    if r.is_empty() || r.len() >= u.len() || !r.is_subset(u) || u.len() >= n {
        return bad("need ∅ ≠ R ⊊ U ⊊ V".into());
    }
    if s.len() < 2 || s.len() != a.len() {
        return bad(format!(
            "need p >= 2 vertices and p sets (got {} and {})",
            s.len(),
            a.len()
        ));
    }
    let s_set = VertexSet::new(s.iter().copied());
    if s_set.len() != s.len() || !s_set.is_subset(&u.difference(r)) {
        return bad("S must be distinct vertices of U - R".into());
    }
    let sink = u.complement(n);
    let terminals = s_set.union(r);
    for (i, (&ui, ai)) in s.iter().zip(a).enumerate() {
        if !sink.is_subset(ai) {
            return bad(format!("A_{i} does not contain the complement of U"));
        }
        if ai.iter().any(|v| v != ui && terminals.contains(v)) {
            return bad(format!("A_{i} meets a source terminal other than u_{i}"));
        }
        let alone = ai.contains(ui) && a.iter().enumerate().all(|(j, aj)| j == i || !aj.contains(ui));
        if !alone {
            return bad(format!("u_{i} = {ui} is not exclusive to A_{i}"));
        }
    }
    let z = a.iter().fold(VertexSet::full(n), |acc, ai| acc.difference(ai));
    let w = a
        .iter()
        .tuple_combinations()
        .fold(VertexSet::empty(), |acc, (ai, aj)| acc.union(&ai.intersection(aj)));
    let y = a.iter().map(|ai| ai.difference(&w)).collect();
    AccountedPartition::new(n, y, w, z)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aggregation {
    /// Indices (0-based) of the chosen Y parts.
    pub indices: Vec<usize>,
    /// `(Y_{i_1}, …, Y_{i_{k-1}}, rest)`.
    pub partition: Partition,
    pub cost: u64,
}

/// First choice, in lexicographic order, of `k-1` Y parts whose k-partition
/// (chosen parts plus the rest) costs at most half of `cross + α + β`.
pub fn aggregate_parts(h: &Hypergraph, ap: &AccountedPartition, k: usize) -> Result<Aggregation> {
    if k < 2 || ap.p() < 2 * k - 2 {
        return Err(Error::Precondition(format!(
            "need k >= 2 and p >= 2k-2 (k = {k}, p = {})",
            ap.p()
        )));
    }
    let acc = accounting(h, ap)?;
    let budget = acc.cross_cost + acc.alpha + acc.beta;
    for indices in (0..ap.p()).combinations(k - 1) {
        let mut parts: Vec<VertexSet> = indices.iter().map(|&i| ap.y[i].clone()).collect();
        let chosen = parts.iter().fold(VertexSet::empty(), |acc, s| acc.union(s));
        parts.push(chosen.complement(h.n()));
        let partition = Partition::from_parts_unchecked(parts);
        let cost = h.labels_cost(&partition.labels());
        if 2 * cost <= budget {
            return Ok(Aggregation {
                indices,
                partition,
                cost,
            });
        }
    }
    Err(Error::AggregationFailed(format!(
        "no {} of {} parts reach 2·cost <= {budget}",
        k - 1,
        ap.p()
    )))
}

/// Sink sides `A_i` of minimum `((S ∪ R) - {u_i}, ∁U)`-terminal cuts, taking
/// either the smallest or the largest optimal sink side. `None` unless every
/// `u_i` lands in its own `A_i` and no other.
pub fn terminal_cut_family(
    h: &Hypergraph,
    u: &VertexSet,
    r: &VertexSet,
    s: &[usize],
    smallest_sink: bool,
) -> Option<Vec<VertexSet>> {
    let n = h.n();
    let sink = u.complement(n);
    let terminals = VertexSet::new(s.iter().copied()).union(r);
    let mut family = Vec::with_capacity(s.len());
    for &ui in s {
        let sources = terminals.difference(&[ui].into());
        let tc = min_terminal_cut(h, &sources, &sink).ok()?;
        let side = if smallest_sink { tc.src_maximal } else { tc.src_minimal };
        family.push(side.complement(n));
    }
    let exclusive = s
        .iter()
        .enumerate()
        .all(|(i, &ui)| family.iter().enumerate().all(|(j, aj)| (i == j) == aj.contains(ui)));
    exclusive.then_some(family)
}

/// Smallest `d(A_i) + d(A_j)` over `i ≠ j`.
pub fn min_pair_sum(h: &Hypergraph, family: &[VertexSet]) -> u64 {
    family
        .iter()
        .map(|a| h.boundary_cost(a))
        .tuple_combinations()
        .map(|(x, y)| x + y)
        .min()
        .unwrap_or(u64::MAX)
}

/// Cheapest k-partition whose last part strictly contains `sink`
/// (exhaustive over partitions of `U` into `k-1` parts plus a non-empty
/// remainder joining `sink`).
pub fn cheapest_partition_around(h: &Hypergraph, u: &VertexSet, k: usize) -> Option<u64> {
    let n = h.n();
    let members = u.as_slice();
    let mut best = None;
    // each U vertex gets one of k labels; label k-1 joins the sink side
    for_each_kpartition(members.len(), k, |rgs| {
        for last in 0..k {
            let mut labels = vec![k - 1; n];
            for (idx, &v) in members.iter().enumerate() {
                let l = rgs[idx];
                labels[v] = if l == last {
                    k - 1
                } else if l == k - 1 {
                    last
                } else {
                    l
                };
            }
            let cost = h.labels_cost(&labels);
            best = Some(best.map_or(cost, |b: u64| b.min(cost)));
        }
    });
    best
}

/// An admissible uncrossing configuration and both sides of its bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncrossingCase {
    pub u: VertexSet,
    pub r: VertexSet,
    pub s: Vec<usize>,
    pub family: Vec<VertexSet>,
    /// Smallest `d(A_i) + d(A_j)`.
    pub pair_sum: u64,
    /// Cheapest k-partition whose last part strictly contains `∁U`.
    pub best: u64,
}

impl UncrossingCase {
    /// Whether some k-partition reaches half the pair sum.
    pub fn holds(&self) -> bool {
        2 * self.best <= self.pair_sum
    }
}

/// Builds the family for `(U, R, S)` from minimum terminal cuts and
/// evaluates both sides of the uncrossing bound. `None` when the sets are
/// not admissible or the `u_i` do not separate.
pub fn uncrossing_case(
    h: &Hypergraph,
    k: usize,
    u: &VertexSet,
    r: &VertexSet,
    s: &[usize],
    smallest_sink: bool,
) -> Option<UncrossingCase> {
    if k < 2 || u.len() < k || u.len() >= h.n() || r.is_empty() || !r.is_subset(u) {
        return None;
    }
    let family = terminal_cut_family(h, u, r, s, smallest_sink)?;
    uncross_family(h, u, r, s, &family).ok()?;
    Some(UncrossingCase {
        u: u.clone(),
        r: r.clone(),
        s: s.to_vec(),
        pair_sum: min_pair_sum(h, &family),
        best: cheapest_partition_around(h, u, k)?,
        family,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFailure {
    pub property: String,
    pub k: usize,
    /// Instance in the on-disk text format.
    pub instance: String,
    /// The quantifier assignment that failed.
    pub assignment: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub instances_checked: u64,
    /// Hypothesis instantiations examined (e.g. `(V_1, T)` pairs).
    pub cases_checked: u64,
    pub failures: Vec<StructureFailure>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: StructureReport) {
        self.instances_checked += other.instances_checked;
        self.cases_checked += other.cases_checked;
        self.failures.extend(other.failures);
    }

    fn fail(&mut self, property: &str, h: &Hypergraph, k: usize, assignment: String) {
        self.failures.push(StructureFailure {
            property: property.to_string(),
            k,
            instance: write_instance(h),
            assignment,
        });
    }
}

fn set_of(v: &[usize]) -> VertexSet {
    VertexSet::new(v.iter().copied())
}

/// Sink sets inside `outside` meeting every part of `rest`.
fn hitting_sinks(outside: &VertexSet, rest: &[VertexSet]) -> Vec<VertexSet> {
    let hits_all = |t: &VertexSet| rest.iter().all(|p| !p.is_disjoint(t));
    if outside.len() <= SINK_ENUMERATION_LIMIT {
        return by_size(outside.as_slice(), 1, outside.len())
            .map(VertexSet::from)
            .filter(hits_all)
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SINK_SAMPLE_SEED);
    (0..SINK_SAMPLES)
        .map(|_| {
            let mut t: Vec<usize> = rest
                .iter()
                .map(|p| *p.as_slice().choose(&mut rng).expect("non-empty part"))
                .collect();
            t.extend(outside.iter().filter(|_| rng.gen_bool(0.5)));
            VertexSet::new(t)
        })
        .collect()
}

/// For every maximal minimum k-partition with `|V_1| >= 2k-2` and every sink
/// set `T ⊆ ∁V_1` meeting each other part: (a) some `S ⊆ V_1` with
/// `|S| = 2k-2` has `V_1` as its source-maximal minimum `(S,T)`-terminal
/// cut, and (b) every examined minimum cut has its source side inside `V_1`.
pub fn check_small_witness(h: &Hypergraph, k: usize) -> Result<StructureReport> {
    guard(h, k)?;
    let mut report = StructureReport {
        instances_checked: 1,
        ..StructureReport::default()
    };
    if k < 2 {
        return Ok(report);
    }
    let size = 2 * k - 2;
    for dp in maximal_min_kpartitions(h, k)? {
        if dp.first.len() < size {
            continue;
        }
        let outside = dp.first.complement(h.n());
        for t in hitting_sinks(&outside, &dp.rest) {
            report.cases_checked += 1;
            let mut witness = false;
            for s in dp.first.as_slice().iter().copied().combinations(size) {
                let s = set_of(&s);
                let tc = min_terminal_cut(h, &s, &t)?;
                if !tc.src_maximal.is_subset(&dp.first) {
                    report.fail(
                        "containment",
                        h,
                        k,
                        format!("V1={} S={} T={} source side={}", dp.first, s, t, tc.src_maximal),
                    );
                }
                if tc.src_maximal == dp.first {
                    witness = true;
                    break;
                }
            }
            if !witness {
                report.fail(
                    "small-witness",
                    h,
                    k,
                    format!("V1={} rest={:?} T={}", dp.first, fmt_sets(&dp.rest), t),
                );
            }
        }
    }
    Ok(report)
}

fn fmt_sets(sets: &[VertexSet]) -> Vec<String> {
    sets.iter().map(ToString::to_string).collect()
}

/// Checks, with exhaustive first-witness search by ascending subset size:
///
/// * every 2-partition `(U,∁U)` with `d(U) <= OPT_k` is the source-maximal
///   minimum `(S,∁U)`-terminal cut for some `S ⊆ U`, `|S| <= 2k-2`;
/// * for every minimal balanced split `U` and `u_0 ∈ U`, some
///   `S ⊆ U - {u_0}`, `|S| <= 2k-3` makes `U` the unique minimum
///   `(S ∪ {u_0}, ∁U)`-terminal cut;
/// * and some such `S` with `T ⊆ ∁U`, `|T| <= 2k-2` makes `U` the
///   source-minimal minimum `(S ∪ {u_0}, T)`-terminal cut.
pub fn check_split_recovery(h: &Hypergraph, k: usize) -> Result<StructureReport> {
    guard(h, k)?;
    let mut report = StructureReport {
        instances_checked: 1,
        ..StructureReport::default()
    };
    if k < 2 {
        return Ok(report);
    }
    let n = h.n();
    let opt = min_kcut_bruteforce(h, k)?.value;

    let all: Vec<usize> = (0..n).collect();
    for u in by_size(&all, 1, n - 1).map(VertexSet::from) {
        if h.boundary_cost(&u) > opt {
            continue;
        }
        report.cases_checked += 1;
        let sink = u.complement(n);
        let found = by_size(u.as_slice(), 1, 2 * k - 2).any(|s| {
            min_terminal_cut(h, &set_of(&s), &sink)
                .map(|tc| tc.src_maximal == u)
                .unwrap_or(false)
        });
        if !found {
            report.fail(
                "sink-side-recovery",
                h,
                k,
                format!("U={u} d(U)={} OPT={opt}", h.boundary_cost(&u)),
            );
        }
    }

    for u in minimal_balanced_splits(h, k)? {
        let sink = u.complement(n);
        for u0 in u.iter() {
            report.cases_checked += 1;
            let others: Vec<usize> = u.iter().filter(|&v| v != u0).collect();
            let with_u0 = |s: &[usize]| set_of(s).union(&[u0].into());

            let unique = by_size(&others, 0, 2 * k - 3).any(|s| {
                let tc = min_terminal_cut(h, &with_u0(&s), &sink).expect("valid terminals");
                tc.is_unique() && tc.src_minimal == u
            });
            if !unique {
                report.fail("unique-source-recovery", h, k, format!("U={u} u0={u0}"));
            }

            let minimal = by_size(&others, 0, 2 * k - 3).any(|s| {
                let sources = with_u0(&s);
                by_size(sink.as_slice(), 1, 2 * k - 2).any(|t| {
                    let tc = min_terminal_cut(h, &sources, &set_of(&t)).expect("valid terminals");
                    tc.src_minimal == u
                })
            });
            if !minimal {
                report.fail("source-minimal-recovery", h, k, format!("U={u} u0={u0}"));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h1() -> Hypergraph {
        Hypergraph::unit(3, [vec![0, 1, 2]]).unwrap()
    }
    fn h2() -> Hypergraph {
        Hypergraph::unit(3, [vec![0, 1], vec![1, 2]]).unwrap()
    }
    fn h3() -> Hypergraph {
        Hypergraph::unit(4, [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap()
    }
    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| set_of(s)).collect()
    }
    fn ap(y: &[&[usize]], w: &[usize], z: &[usize]) -> AccountedPartition {
        let n = y.iter().map(|s| s.len()).sum::<usize>() + w.len() + z.len();
        AccountedPartition::new(n, sets(y), set_of(w), set_of(z)).unwrap()
    }

    #[test]
    fn rgs_counts_are_stirling_numbers() {
        let count = |n, k| {
            let mut c = 0;
            for_each_kpartition(n, k, |_| c += 1);
            c
        };
        assert_eq!(count(4, 2), 7);
        assert_eq!(count(5, 3), 25);
        assert_eq!(count(6, 3), 90);
        assert_eq!(count(7, 4), 350);
        assert_eq!(count(3, 3), 1);
        assert_eq!(count(3, 4), 0);
    }

    #[test]
    fn brute_force_examples() {
        let bf = min_kcut_bruteforce(&h1(), 2).unwrap();
        assert_eq!(bf.value, 1);
        let got: Vec<String> = bf.optima.iter().map(ToString::to_string).collect();
        assert_eq!(got, vec!["[{0},{1,2}]", "[{0,1},{2}]", "[{0,2},{1}]"]);

        let bf = min_kcut_bruteforce(&h3(), 2).unwrap();
        assert_eq!((bf.value, bf.optima.len()), (2, 6));
        assert_eq!(min_kcut_bruteforce(&h2(), 3).unwrap().value, 2);
    }

    #[test]
    fn oracle_guard() {
        let big = Hypergraph::unit(15, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(
            min_kcut_bruteforce(&big, 2).unwrap_err(),
            Error::OracleTooLarge { n: 15, max: 14 }
        );
        assert!(min_kcut_bruteforce(&h2(), 4).is_err());
        assert!(min_kcut_bruteforce(&h2(), 0).is_err());
    }

    #[test]
    fn maximal_parts() {
        let firsts: Vec<VertexSet> = maximal_min_kpartitions(&h3(), 2)
            .unwrap()
            .into_iter()
            .map(|d| d.first)
            .collect();
        assert!(firsts.contains(&[1, 2, 3].into()));
        assert!(!firsts.contains(&[0].into()));
        assert!(firsts.iter().all(|f| f.len() == 3));

        for h in [h1(), Hypergraph::unit(3, Vec::<Vec<usize>>::new()).unwrap()] {
            let maximal = maximal_min_kpartitions(&h, 2).unwrap();
            assert_eq!(maximal.len(), 3);
            assert!(maximal.iter().all(|d| d.first.len() == 2 && d.rest.len() == 1));
        }
    }

    #[test]
    fn balanced_splits() {
        assert_eq!(
            minimal_balanced_splits(&h3(), 2).unwrap(),
            sets(&[&[0], &[1], &[2], &[3]])
        );
        assert_eq!(minimal_balanced_splits(&h1(), 3).unwrap(), sets(&[&[0], &[1], &[2]]));
        assert_eq!(minimal_balanced_splits(&h2(), 2).unwrap(), sets(&[&[0], &[2]]));
    }

    #[test]
    fn accounting_examples() {
        let a = accounting(&h3(), &ap(&[&[0], &[2]], &[1], &[3])).unwrap();
        assert_eq!(
            a,
            PartitionAccounting {
                cross_cost: 4,
                wz_cost: 0,
                alpha: 0,
                beta: 0,
                sigma: 4
            }
        );
        let a = accounting(&h1(), &ap(&[&[0]], &[1], &[2])).unwrap();
        assert_eq!((a.cross_cost, a.wz_cost, a.alpha, a.beta, a.sigma), (1, 0, 1, 0, 2));

        let h = Hypergraph::unit(5, [vec![0, 1], vec![2, 3]]).unwrap();
        let a = accounting(&h, &ap(&[&[0, 1]], &[2, 3], &[4])).unwrap();
        assert_eq!(a, PartitionAccounting::default());
    }

    #[test]
    fn accounted_partition_validation() {
        assert!(AccountedPartition::new(3, vec![], [0, 1].into(), [2].into()).is_err());
        assert!(AccountedPartition::new(3, sets(&[&[0]]), [0, 1].into(), [2].into()).is_err());
        assert!(accounting(&h3(), &ap(&[&[0]], &[1], &[2])).is_err());
    }

    #[test]
    fn sigma_counts_wz_edges_twice() {
        let h = Hypergraph::unit(3, [vec![1, 2]]).unwrap();
        let classes = edge_classes(&h, &ap(&[&[0]], &[1], &[2])).unwrap();
        assert_eq!(classes[0].sigma_count(), 2);
        assert!(classes[0].wz);
    }

    #[test]
    fn uncross_example() {
        let a = sets(&[&[0, 3], &[2, 3]]);
        let out = uncross_family(&h3(), &[0, 1, 2].into(), &[1].into(), &[0, 2], &a).unwrap();
        assert_eq!(out.w(), &[3].into());
        assert_eq!(out.z(), &[1].into());
        assert_eq!(out.y(), &sets(&[&[0], &[2]])[..]);
        let acc = accounting(&h3(), &out).unwrap();
        assert_eq!(acc.sigma, 4);
        assert_eq!(min_pair_sum(&h3(), &a), 4);
    }

    #[test]
    fn uncross_rejects_bad_families() {
        let u: VertexSet = [0, 1, 2].into();
        let r: VertexSet = [1].into();
        // u_0 = 0 also in A_1
        let a = sets(&[&[0, 3], &[0, 2, 3]]);
        assert!(uncross_family(&h3(), &u, &r, &[0, 2], &a).is_err());
        // A_0 misses the complement of U
        let a = sets(&[&[0], &[2, 3]]);
        assert!(uncross_family(&h3(), &u, &r, &[0, 2], &a).is_err());
        // p = 1
        assert!(uncross_family(&h3(), &u, &r, &[0], &sets(&[&[0, 3]])).is_err());
        // R not inside U
        assert!(uncross_family(&h3(), &u, &[3].into(), &[0, 2], &sets(&[&[0, 3], &[2, 3]])).is_err());
    }

    #[test]
    fn aggregate_examples() {
        let agg = aggregate_parts(&h3(), &ap(&[&[0], &[2]], &[1], &[3]), 2).unwrap();
        assert_eq!(agg.indices, vec![0]);
        assert_eq!(agg.partition.to_string(), "[{0},{1,2,3}]");
        assert_eq!(agg.cost, 2);

        let isolated = Hypergraph::unit(4, [vec![2, 3]]).unwrap();
        let agg = aggregate_parts(&isolated, &ap(&[&[0], &[1]], &[2], &[3]), 2).unwrap();
        assert_eq!(agg.cost, 0);

        let spanning = Hypergraph::unit(4, [vec![0, 1, 2, 3]]).unwrap();
        let agg = aggregate_parts(&spanning, &ap(&[&[0], &[1]], &[2], &[3]), 2).unwrap();
        assert_eq!((agg.indices.clone(), agg.cost), (vec![0], 1));

        assert!(aggregate_parts(&h3(), &ap(&[&[0], &[2]], &[1], &[3]), 3).is_err());
    }

    #[test]
    fn refine_requires_non_empty_parts() {
        let base = ap(&[&[0], &[1]], &[2], &[3, 4]);
        let r = base.refine_with(&[3].into()).unwrap();
        assert_eq!(r.p(), 3);
        assert_eq!(r.z(), &[4].into());
        assert!(base.refine_with(&[3, 4].into()).is_none());
        assert!(base.refine_with(&[0, 3].into()).is_none());
    }

    #[test]
    fn small_witness_examples() {
        let report = check_small_witness(&h3(), 2).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.cases_checked > 0);

        let empty = Hypergraph::unit(5, Vec::<Vec<usize>>::new()).unwrap();
        for k in 2..=3 {
            assert!(check_small_witness(&empty, k).unwrap().passed());
        }
        // H1 at k = 2 has maximal parts of size 2 = 2k-2
        assert!(check_small_witness(&h1(), 2).unwrap().passed());
    }

    #[test]
    fn split_recovery_examples() {
        for h in [h2(), h3(), h1()] {
            let report = check_split_recovery(&h, 2).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
        }
        let split = Hypergraph::unit(6, [vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(check_split_recovery(&split, 3).unwrap().passed());
    }

    #[test]
    fn cheapest_around_matches_definition() {
        // U = {0,1,2} in the 4-cycle; last part must contain 3 plus something
        let best = cheapest_partition_around(&h3(), &[0, 1, 2].into(), 2).unwrap();
        assert_eq!(best, 2);
    }
}
