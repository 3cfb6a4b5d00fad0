//! Spanning trees: the closed-form choice structure on a uni-cyclic layout,
//! and a backtracking enumerator that works on any connected multigraph.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::dsu::RollbackDsu;
use crate::multigraph::{Multigraph, ParallelClass, UnicyclicLayout};

/// The edge set of one spanning tree, i.e. one facet of the spanning
/// simplicial complex. Ids are kept sorted so that equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Facet {
    edge_ids: Vec<String>,
}

impl Facet {
    pub fn new<I, S>(ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut edge_ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        edge_ids.sort();
        edge_ids.dedup();
        Self { edge_ids }
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.edge_ids
            .binary_search_by(|e| e.as_str().cmp(id))
            .is_ok()
    }
}

/// Every spanning tree of a uni-cyclic layout: pick one member of each
/// multiple class, keep all single edges, then delete one edge of the
/// resulting cycle. The deleted edge of a multiple cycle class is always the
/// representative that was picked for it.
///
/// Result is sorted and free of duplicates.
pub fn enumerate_spanning_trees_lemma(layout: &UnicyclicLayout) -> Vec<Facet> {
    let multiple: Vec<&ParallelClass> = layout
        .cycle_multiple_classes()
        .iter()
        .chain(layout.outside_multiple_classes())
        .collect();
    let r_cycle = layout.scalars().r_cycle;
    let fixed: Vec<&str> = layout
        .cycle_single_edges()
        .chain(layout.outside_single_edges().iter().map(String::as_str))
        .collect();
    let cycle_singles: Vec<&str> = layout.cycle_single_edges().collect();

    let mut facets = BTreeSet::new();
    let mut choice = vec![0usize; multiple.len()];
    loop {
        let picked: Vec<&str> = multiple
            .iter()
            .zip(&choice)
            .map(|(c, &i)| c.members[i].as_str())
            .collect();
        // Cycle representatives: picked[..r'] followed by the single cycle edges.
        let cycle_reps: Vec<&str> = picked[..r_cycle]
            .iter()
            .copied()
            .chain(cycle_singles.iter().copied())
            .collect();
        for dropped in &cycle_reps {
            let tree = picked
                .iter()
                .chain(&fixed)
                .filter(|e| *e != dropped)
                .copied();
            facets.insert(Facet::new(tree));
        }

        // Odometer over the member choices.
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return facets.into_iter().collect();
            }
            choice[pos] += 1;
            if choice[pos] < multiple[pos].size() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// All spanning trees of `g` by backtracking over the edge list: grow a
/// forest edge by edge, never accepting an edge that would close a cycle.
/// Result is sorted.
pub fn enumerate_spanning_trees_generic(g: &Multigraph) -> Vec<Facet> {
    let mut out = Vec::new();
    spanning_tree_positions(g, |tree| {
        out.push(Facet::new(tree.iter().map(|&i| g.edges()[i].id.as_str())));
    });
    out.sort();
    out
}

/// Calls `visit` with the edge positions of every spanning tree of `g`.
pub(crate) fn spanning_tree_positions(g: &Multigraph, mut visit: impl FnMut(&[usize])) {
    let target = g.vertex_count() - 1;
    let mut dsu = RollbackDsu::new(g.vertex_count());
    let mut chosen = Vec::with_capacity(target);
    grow(g, 0, target, &mut dsu, &mut chosen, &mut visit);
}

fn grow(
    g: &Multigraph,
    next: usize,
    target: usize,
    dsu: &mut RollbackDsu,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == target {
        visit(chosen);
        return;
    }
    let edges = g.edges();
    if edges.len() - next < target - chosen.len() {
        return;
    }
    let [a, b] = edges[next].ends;
    if dsu.union(a, b) {
        chosen.push(next);
        grow(g, next + 1, target, dsu, chosen, visit);
        chosen.pop();
        dsu.rollback();
    }
    grow(g, next + 1, target, dsu, chosen, visit);
}

/// Closed-form tree count: the product of the off-cycle class sizes times
/// the sum, over cycle classes `w`, of the product of the other cycle class
/// sizes.
pub fn count_spanning_trees_formula(layout: &UnicyclicLayout) -> BigUint {
    let outside: BigUint = layout
        .outside_multiple_classes()
        .iter()
        .map(|c| BigUint::from(c.size()))
        .product();
    let cycle = layout.cycle_classes();
    let around: BigUint = (0..cycle.len())
        .map(|w| {
            cycle
                .iter()
                .enumerate()
                .filter(|&(h, _)| h != w)
                .fold(BigUint::one(), |acc, (_, c)| acc * c.size())
        })
        .sum();
    outside * around
}
