//! hMETIS-style instance files.
//!
//! ```text
//! % optional comment lines
//! <m> <n> [fmt]
//! [weight] v1 v2 ...     (one line per hyperedge, vertices 1-indexed)
//! ```
//!
//! `fmt = 1` means every hyperedge line starts with an integer weight;
//! `fmt` absent or `0` means unit weights. Vertex-weighted variants are
//! rejected. Vertices are 0-indexed in memory.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn int(tok: &str, line: usize, what: &str) -> Result<i128> {
    tok.parse::<i128>()
        .map_err(|_| parse_err(line, format!("{what} `{tok}` is not an integer")))
}

/// Parses an instance file into a hypergraph.
///
/// ```
/// use hypergraph_kcut::parse_instance;
///
/// let h = parse_instance("% path\n2 3 1\n5 1 2\n1 2 3\n").unwrap();
/// assert_eq!(h.n(), 3);
/// assert_eq!(h.edges()[0].cost(), 5);
/// assert_eq!(h.edges()[1].vertices(), &[1, 2]);
/// ```
pub fn parse_instance(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if !(2..=3).contains(&fields.len()) {
        return Err(parse_err(hline, "header must be `m n [fmt]`"));
    }
    let m = int(fields[0], hline, "edge count")?;
    let n = int(fields[1], hline, "vertex count")?;
    if m < 0 || n < 1 {
        return Err(parse_err(hline, format!("invalid header counts m = {m}, n = {n}")));
    }
    let weighted = match fields.get(2).map(|f| int(f, hline, "fmt")).transpose()? {
        None | Some(0) => false,
        Some(1) => true,
        Some(10) | Some(11) => {
            return Err(parse_err(hline, "vertex weights (fmt 10/11) are not supported"));
        }
        Some(f) => return Err(parse_err(hline, format!("unknown fmt {f}"))),
    };
    let (m, n) = (m as usize, n as usize);

    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        if edges.len() == m {
            return Err(parse_err(lineno, format!("more than {m} hyperedge lines")));
        }
        let mut toks = line.split_whitespace();
        let cost = if weighted {
            let w = int(toks.next().expect("non-empty line"), lineno, "weight")?;
            if w < 0 {
                return Err(parse_err(lineno, format!("negative weight {w}")));
            }
            u64::try_from(w).map_err(|_| parse_err(lineno, format!("weight {w} too large")))?
        } else {
            1
        };
        let mut verts = Vec::new();
        for tok in toks {
            let v = int(tok, lineno, "vertex")?;
            if v < 1 || v > n as i128 {
                return Err(parse_err(lineno, format!("vertex {v} out of range 1..={n}")));
            }
            verts.push(v as usize - 1);
        }
        if verts.is_empty() {
            return Err(parse_err(lineno, "hyperedge with no vertices"));
        }
        edges.push((verts, cost));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} hyperedges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges).map_err(|e| parse_err(hline, e.to_string()))
}

/// Serializes `h` in weighted format; `parse_instance` inverts it exactly.
///
/// ```
/// use hypergraph_kcut::{write_instance, Hypergraph};
///
/// let path = Hypergraph::unit(3, [vec![0, 1], vec![1, 2]]).unwrap();
/// assert_eq!(write_instance(&path), "2 3 1\n1 1 2\n1 2 3\n");
/// ```
pub fn write_instance(h: &Hypergraph) -> String {
    let mut out = format!("{} {} 1\n", h.m(), h.n());
    for e in h.edges() {
        write!(out, "{}", e.cost()).unwrap();
        for &v in e.vertices() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    out
}
