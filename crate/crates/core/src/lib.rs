//! Deterministic exact minimum k-cut for hypergraphs.
//!
//! Given a hypergraph with non-negative integer hyperedge costs and an
//! integer `k`, find a partition of the vertices into `k` non-empty parts
//! minimizing the total cost of hyperedges that meet more than one part.
//! Both solvers in [`solvers`] reduce the problem to polynomially many
//! minimum `(S,T)`-terminal cuts ([`terminal_cut`]) on small terminal sets,
//! recursing on induced subhypergraphs.
//!
//! [`oracle`] holds an exhaustive enumerator used as ground truth, plus
//! executable checks of the structural facts the solvers depend on.
//!
//! ```
//! use hypergraph_kcut::{solve, Algorithm, Hypergraph, SolveOptions};
//!
//! let cycle = Hypergraph::unit(4, [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap();
//! let sol = solve(&cycle, 3, Algorithm::DivideConquer, &SolveOptions::default()).unwrap();
//! assert_eq!(sol.value, 3);
//! ```

pub mod cli;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod oracle;
pub mod solvers;
mod subsets;
pub mod terminal_cut;

pub use error::{Error, Result};
pub use generate::{gen_random, GenParams};
pub use hypergraph::{Hyperedge, Hypergraph, Partition, VertexMap, VertexSet};
pub use io::{parse_instance, write_instance};
pub use solvers::{cut_divide_conquer, cut_recursive, solve, Algorithm, Solution, SolveOptions, SolveStats};
pub use terminal_cut::{is_unique_min_cut, min_terminal_cut, TerminalCutResult};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    mod hypergraphs {}
    #[doc = include_str!("../../../book/src/terminal_cuts.md")]
    mod terminal_cuts {}
    #[doc = include_str!("../../../book/src/recursive.md")]
    mod recursive {}
    #[doc = include_str!("../../../book/src/divide_and_conquer.md")]
    mod divide_and_conquer {}
    #[doc = include_str!("../../../book/src/uncrossing.md")]
    mod uncrossing {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
