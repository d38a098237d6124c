use itertools::Itertools;

/// Subsets of `items` with sizes in `lo..=hi`, by ascending size and
/// lexicographically within a size (for sorted `items`).
pub(crate) fn by_size(items: &[usize], lo: usize, hi: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    (lo..=hi.min(items.len())).flat_map(move |r| items.iter().copied().combinations(r))
}

/// Ordered pairs of disjoint subsets `(S, T)` of `0..n` with
/// `|S| in s_sizes`, `|T| in t_sizes`; S-major, each side by size then
/// lexicographically.
pub(crate) fn disjoint_pairs(
    n: usize,
    s_sizes: (usize, usize),
    t_sizes: (usize, usize),
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let all: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for s in by_size(&all, s_sizes.0, s_sizes.1) {
        let rest: Vec<usize> = all.iter().copied().filter(|v| !s.contains(v)).collect();
        for t in by_size(&rest, t_sizes.0, t_sizes.1) {
            out.push((s.clone(), t));
        }
    }
    out
}
