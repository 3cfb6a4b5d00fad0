//! Shared fixtures and brute-force oracles for unit tests. Nothing here calls
//! into the enumerators it is used to check.

use std::collections::VecDeque;

use crate::multigraph::{build_multigraph, Multigraph};
use crate::spanning::Facet;

pub fn figure_one() -> Multigraph {
    build_multigraph(
        ["a", "b", "c", "d"],
        [
            ("e11", ("a", "b")),
            ("e12", ("a", "b")),
            ("e13", ("a", "b")),
            ("e21", ("b", "c")),
            ("e31", ("c", "a")),
            ("e41", ("c", "d")),
            ("e42", ("c", "d")),
        ],
    )
    .unwrap()
}

pub fn triangle() -> Multigraph {
    build_multigraph(
        ["a", "b", "c"],
        [("e1", ("a", "b")), ("e2", ("b", "c")), ("e3", ("c", "a"))],
    )
    .unwrap()
}

/// Triangle whose first side is doubled.
pub fn cycle_211() -> Multigraph {
    build_multigraph(
        ["a", "b", "c"],
        [
            ("e11", ("a", "b")),
            ("e12", ("a", "b")),
            ("e21", ("b", "c")),
            ("e31", ("c", "a")),
        ],
    )
    .unwrap()
}

pub fn cycle_211_pendant_pair() -> Multigraph {
    build_multigraph(
        ["a", "b", "c", "d"],
        [
            ("e11", ("a", "b")),
            ("e12", ("a", "b")),
            ("e21", ("b", "c")),
            ("e31", ("c", "a")),
            ("e41", ("c", "d")),
            ("e42", ("c", "d")),
        ],
    )
    .unwrap()
}

pub fn theta() -> Multigraph {
    build_multigraph(
        ["s", "t", "x", "y", "z"],
        [
            ("a1", ("s", "x")),
            ("a2", ("x", "t")),
            ("b1", ("s", "y")),
            ("b2", ("y", "t")),
            ("c1", ("s", "z")),
            ("c2", ("z", "t")),
        ],
    )
    .unwrap()
}

fn components(g: &Multigraph, mask: u64) -> usize {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[e.ends[0]].push(e.ends[1]);
            adj[e.ends[1]].push(e.ends[0]);
        }
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    count
}

/// A subset is a forest iff removing it leaves exactly |V| - |S| components.
pub fn is_forest(g: &Multigraph, mask: u64) -> bool {
    components(g, mask) + mask.count_ones() as usize == g.vertex_count()
}

pub fn facet_of(g: &Multigraph, mask: u64) -> Facet {
    Facet::new(
        g.edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.id.as_str()),
    )
}

pub fn spanning_trees_by_subset_filter(g: &Multigraph) -> Vec<Facet> {
    let target = g.vertex_count() as u32 - 1;
    let mut out: Vec<Facet> = (0u64..1 << g.edge_count())
        .filter(|&m| m.count_ones() == target && is_forest(g, m))
        .map(|m| facet_of(g, m))
        .collect();
    out.sort();
    out
}

/// Forest counts by cardinality, index 0 holding one-edge forests.
pub fn forest_counts_by_subset_filter(g: &Multigraph) -> Vec<u64> {
    let mut counts = vec![0u64; g.vertex_count() - 1];
    for m in 1u64..1 << g.edge_count() {
        if is_forest(g, m) {
            counts[m.count_ones() as usize - 1] += 1;
        }
    }
    counts
}
