//! Minimum `(S,T)`-terminal cuts in hypergraphs.
//!
//! A hypergraph is turned into a directed network: each hyperedge `e`
//! becomes a pair of auxiliary nodes `e_in -> e_out` joined by an arc of
//! capacity `c(e)`, every member `v` of `e` gets uncuttable arcs
//! `v -> e_in` and `e_out -> v`, and a super-source / super-sink are wired
//! to the terminals. Finite `s-t` cuts of this network are exactly the
//! hypergraph cuts separating `S` from `T`, so one max-flow yields the
//! value, and the residual network yields both extremal optimal source
//! sides.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: usize,
    cap: u64,
}

/// Directed network with paired residual arcs; arc `a ^ 1` is the reverse
/// of arc `a`.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    hyper_vertices: usize,
    infinity: u64,
}

impl FlowNetwork {
    /// Lawler network for terminal sets `sources` / `sinks`.
    ///
    /// Node layout: hypergraph vertices `0..n`, hyperedge `i` at `n + 2i`
    /// (in) and `n + 2i + 1` (out), then the super-source and super-sink.
    pub fn lawler(h: &Hypergraph, sources: &VertexSet, sinks: &VertexSet) -> Self {
        let n = h.n();
        let m = h.m();
        let nodes = n + 2 * m + 2;
        let infinity = h.total_cost() + 1;
        let arc_count = 2 * (m + 2 * h.size_p() + sources.len() + sinks.len());
        let mut net = FlowNetwork {
            arcs: Vec::with_capacity(arc_count),
            adj: vec![Vec::new(); nodes],
            source: n + 2 * m,
            sink: n + 2 * m + 1,
            hyper_vertices: n,
            infinity,
        };
        for (i, e) in h.edges().iter().enumerate() {
            let (e_in, e_out) = (n + 2 * i, n + 2 * i + 1);
            net.add_arc(e_in, e_out, e.cost());
            for &v in e.vertices() {
                net.add_arc(v, e_in, infinity);
                net.add_arc(e_out, v, infinity);
            }
        }
        for s in sources.iter() {
            net.add_arc(net.source, s, infinity);
        }
        for t in sinks.iter() {
            net.add_arc(t, net.sink, infinity);
        }
        net
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Capacity standing in for an uncuttable arc.
    pub fn infinity(&self) -> u64 {
        self.infinity
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn levels(&self) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.adj.len()];
        level[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && level[to] == u32::MAX {
                    level[to] = level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        (level[self.sink] != u32::MAX).then_some(level)
    }

    fn augment(&mut self, u: usize, limit: u64, level: &[u32], next: &mut [usize]) -> u64 {
        if u == self.sink {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let a = self.adj[u][next[u]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.augment(to, limit.min(cap), level, next);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Dinic's blocking-flow max-flow. Mutates residual capacities.
    pub fn max_flow(&mut self) -> u64 {
        let mut total = 0;
        while let Some(level) = self.levels() {
            let mut next = vec![0; self.adj.len()];
            loop {
                let pushed = self.augment(self.source, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from the super-source in the residual network.
    pub fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    /// Nodes with a residual path to the super-sink.
    pub fn sink_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[self.sink] = true;
        let mut queue = VecDeque::from([self.sink]);
        while let Some(w) = queue.pop_front() {
            // arc a leaves w; its partner a ^ 1 enters w
            for &a in &self.adj[w] {
                let from = self.arcs[a].to;
                if self.arcs[a ^ 1].cap > 0 && !seen[from] {
                    seen[from] = true;
                    queue.push_back(from);
                }
            }
        }
        seen
    }

    pub(crate) fn hyper_vertices(&self) -> usize {
        self.hyper_vertices
    }
}

/// Minimum terminal cut value together with the inclusion-minimal and
/// inclusion-maximal optimal source sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalCutResult {
    pub value: u64,
    pub src_minimal: VertexSet,
    pub src_maximal: VertexSet,
}

impl TerminalCutResult {
    /// The minimum cut is unique iff its extremal source sides coincide.
    pub fn is_unique(&self) -> bool {
        self.src_minimal == self.src_maximal
    }
}

/// Free-function form of [`TerminalCutResult::is_unique`].
pub fn is_unique_min_cut(tc: &TerminalCutResult) -> bool {
    tc.is_unique()
}

/// Exact minimum `(S,T)`-terminal cut of `h`.
///
/// ```
/// use hypergraph_kcut::{min_terminal_cut, Hypergraph, VertexSet};
///
/// let path = Hypergraph::unit(3, [vec![0, 1], vec![1, 2]]).unwrap();
/// let tc = min_terminal_cut(&path, &[0].into(), &[2].into()).unwrap();
/// assert_eq!(tc.value, 1);
/// assert_eq!(tc.src_minimal, VertexSet::from([0]));
/// assert_eq!(tc.src_maximal, VertexSet::from([0, 1]));
/// ```
pub fn min_terminal_cut(h: &Hypergraph, sources: &VertexSet, sinks: &VertexSet) -> Result<TerminalCutResult> {
    if sources.is_empty() || sinks.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    for set in [sources, sinks] {
        if let Some(v) = set.last().filter(|&v| v >= h.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
        }
    }
    if !sources.is_disjoint(sinks) {
        return Err(Error::TerminalsOverlap);
    }
    let mut net = FlowNetwork::lawler(h, sources, sinks);
    let value = net.max_flow();
    let n = net.hyper_vertices();
    let reach = net.source_side();
    let to_sink = net.sink_side();
    Ok(TerminalCutResult {
        value,
        src_minimal: VertexSet::from_mask(&reach[..n]),
        src_maximal: VertexSet::new((0..n).filter(|&v| !to_sink[v])),
    })
}
