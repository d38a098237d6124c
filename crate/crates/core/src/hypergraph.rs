//! Hypergraphs with non-negative integer hyperedge costs, the cut function,
//! partitions and their canonical form.
//!
//! Vertices are dense ids `0..n`. Every set-valued quantity is a
//! [`VertexSet`], which is kept sorted so that the derived ordering is the
//! lexicographic order used for deterministic tie-breaking.

use std::fmt;

use crate::error::{Error, Result};

/// Upper bound (exclusive) on the total hyperedge cost.
pub const COST_LIMIT: u64 = 1 << 62;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary ids, sorting and deduplicating.
    pub fn new(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// All vertices of an `n`-vertex hypergraph.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Set of vertices `v` with `mask[v]`.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(mask.iter().enumerate().filter_map(|(v, &b)| b.then_some(v)).collect())
    }

    /// Set of the bits of `bits` (vertex `v` present iff bit `v` is set).
    pub fn from_bits(bits: u64) -> Self {
        VertexSet((0..64).filter(|v| bits >> v & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// Complement relative to the vertex set `0..n`.
    pub fn complement(&self, n: usize) -> VertexSet {
        let mask = self.to_mask(n);
        VertexSet((0..n).filter(|&v| !mask[v]).collect())
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn to_bits(&self) -> u64 {
        self.iter().fold(0, |acc, v| acc | 1 << v)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        VertexSet::new(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    vertices: Vec<usize>,
    cost: u64,
}

impl Hyperedge {
    /// Member vertices, sorted and deduplicated.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn cost(&self) -> u64 {
        self.cost
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// An immutable hypergraph on vertices `0..n` with a multiset of hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
    size_p: usize,
    total_cost: u64,
}

impl Hypergraph {
    /// Validates and normalizes a hypergraph. Edges keep their input order;
    /// the vertices inside each edge are sorted and deduplicated.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, u64)>,
        E: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut out = Vec::new();
        let mut total: u64 = 0;
        let mut size_p = 0;
        for (verts, cost) in edges {
            let mut vertices: Vec<usize> = verts.into_iter().collect();
            if let Some(&vertex) = vertices.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            vertices.sort_unstable();
            vertices.dedup();
            total = total
                .checked_add(cost)
                .filter(|&t| t < COST_LIMIT)
                .ok_or(Error::CostOverflow)?;
            size_p += vertices.len();
            out.push(Hyperedge { vertices, cost });
        }
        Ok(Hypergraph {
            n,
            edges: out,
            size_p,
            total_cost: total,
        })
    }

    /// Same hypergraph with every hyperedge at unit cost.
    pub fn unit<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        Hypergraph::new(n, edges.into_iter().map(|e| (e, 1)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    /// Sum of hyperedge cardinalities.
    pub fn size_p(&self) -> usize {
        self.size_p
    }

    pub fn total_cost(&self) -> u64 {
        self.total_cost
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Merges hyperedges with identical vertex sets into one, summing costs.
    /// The merged edge takes the position of the first occurrence.
    pub fn merge_parallel(&self) -> Hypergraph {
        let mut index = std::collections::HashMap::new();
        let mut edges: Vec<Hyperedge> = Vec::new();
        for e in &self.edges {
            match index.get(&e.vertices) {
                Some(&i) => {
                    let merged: &mut Hyperedge = &mut edges[i];
                    merged.cost += e.cost;
                }
                None => {
                    index.insert(e.vertices.clone(), edges.len());
                    edges.push(e.clone());
                }
            }
        }
        Hypergraph {
            n: self.n,
            size_p: edges.iter().map(Hyperedge::len).sum(),
            edges,
            total_cost: self.total_cost,
        }
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// `d(U)`: total cost of hyperedges meeting both `U` and its complement.
    pub fn cut_value(&self, set: &VertexSet) -> Result<u64> {
        self.check_set(set)?;
        if set.is_empty() || set.len() == self.n {
            return Err(Error::TrivialCut);
        }
        Ok(self.boundary_cost(set))
    }

    /// Unchecked cut function, extended with `d(∅) = d(V) = 0`.
    pub fn boundary_cost(&self, set: &VertexSet) -> u64 {
        self.boundary_cost_mask(&set.to_mask(self.n))
    }

    pub fn boundary_cost_mask(&self, inside: &[bool]) -> u64 {
        self.edges
            .iter()
            .filter(|e| {
                let mut ins = false;
                let mut outs = false;
                for &v in &e.vertices {
                    if inside[v] {
                        ins = true;
                    } else {
                        outs = true;
                    }
                }
                ins && outs
            })
            .map(|e| e.cost)
            .sum()
    }

    /// Cost of hyperedges crossing a partition.
    pub fn partition_cost(&self, partition: &Partition) -> Result<u64> {
        if partition.vertex_count() != self.n {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices, hypergraph has {}",
                partition.vertex_count(),
                self.n
            )));
        }
        Ok(self.labels_cost(&partition.labels()))
    }

    /// Cost of the partition given as a block label per vertex.
    pub fn labels_cost(&self, labels: &[usize]) -> u64 {
        self.edges
            .iter()
            .filter(|e| match e.vertices.split_first() {
                Some((&first, rest)) => rest.iter().any(|&v| labels[v] != labels[first]),
                None => false,
            })
            .map(|e| e.cost)
            .sum()
    }

    /// `G[U]`: drops the complement of `U` and every hyperedge meeting it.
    /// Vertices of the result are re-indexed in increasing order of their
    /// original ids.
    pub fn induced(&self, set: &VertexSet) -> Result<(Hypergraph, VertexMap)> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut to_new = vec![None; self.n];
        for (i, v) in set.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let edges: Vec<Hyperedge> = self
            .edges
            .iter()
            .filter(|e| e.vertices.iter().all(|&v| to_new[v].is_some()))
            .map(|e| Hyperedge {
                vertices: e.vertices.iter().map(|&v| to_new[v].unwrap()).collect(),
                cost: e.cost,
            })
            .collect();
        let sub = Hypergraph {
            n: set.len(),
            size_p: edges.iter().map(Hyperedge::len).sum(),
            total_cost: edges.iter().map(|e| e.cost).sum(),
            edges,
        };
        let map = VertexMap {
            to_old: set.as_slice().to_vec(),
            to_new,
        };
        Ok((sub, map))
    }

    /// Connected components, each hyperedge joining all of its members,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            if let Some((&first, rest)) = e.vertices.split_first() {
                for &v in rest {
                    let a = find(&mut parent, first);
                    let b = find(&mut parent, v);
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups.into_iter().map(VertexSet).collect()
    }
}

/// Correspondence between an induced subhypergraph and its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    to_old: Vec<usize>,
    to_new: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn to_old(&self, v: usize) -> usize {
        self.to_old[v]
    }

    pub fn to_new(&self, v: usize) -> Option<usize> {
        self.to_new.get(v).copied().flatten()
    }

    /// Maps a set of sub-hypergraph ids back to parent ids.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        // to_old is increasing, so sortedness is preserved
        VertexSet(set.iter().map(|v| self.to_old[v]).collect())
    }
}

/// An ordered tuple of pairwise disjoint, non-empty vertex sets covering
/// `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<VertexSet>,
}

impl Partition {
    /// Validates that `parts` partition `0..n`.
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!("part {i} is empty")));
            }
            for v in part.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in more than one part"
                    )));
                }
                seen[v] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidPartition(format!("parts cover {count} of {n} vertices")));
        }
        Ok(Partition { parts })
    }

    /// Builds the partition whose blocks are the classes of `labels`,
    /// ordered by first occurrence (which is canonical order).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut slot: Vec<Option<usize>> = Vec::new();
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            if l >= slot.len() {
                slot.resize(l + 1, None);
            }
            let s = *slot[l].get_or_insert_with(|| {
                parts.push(Vec::new());
                parts.len() - 1
            });
            parts[s].push(v);
        }
        Partition {
            parts: parts.into_iter().map(VertexSet).collect(),
        }
    }

    /// The single-part partition `(V)`.
    pub fn trivial(n: usize) -> Self {
        Partition {
            parts: vec![VertexSet::full(n)],
        }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(VertexSet::len).sum()
    }

    /// Block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.vertex_count()];
        for (i, part) in self.parts.iter().enumerate() {
            for v in part.iter() {
                labels[v] = i;
            }
        }
        labels
    }

    /// Parts ordered by minimum element. Two partitions with the same
    /// unordered structure canonicalize identically, and the derived `Ord`
    /// on the result is the tie-breaking order used throughout the crate.
    pub fn canonicalize(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| p.first());
        Partition { parts }
    }

    pub fn is_canonical(&self) -> bool {
        self.parts.windows(2).all(|w| w[0].first() < w[1].first())
    }

    /// Wraps parts without validation.
    pub(crate) fn from_parts_unchecked(parts: Vec<VertexSet>) -> Self {
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
