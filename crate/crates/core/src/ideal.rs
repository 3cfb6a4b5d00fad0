//! Facet ideals and minimal vertex covers.
//!
//! The minimal primes of a facet ideal are generated by the variables of the
//! minimal vertex covers, so the primary decomposition is read off the covers.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multigraph::UnicyclicLayout;
use crate::spanning::Facet;

/// A set of complex vertices (graph edges) meeting every facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexCover {
    edge_ids: Vec<String>,
}

impl VertexCover {
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

    pub fn meets(&self, facet: &Facet) -> bool {
        self.edge_ids.iter().any(|e| facet.contains(e))
    }
}

// Size first, then lexicographic.
impl Ord for VertexCover {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.edge_ids.cmp(&other.edge_ids))
    }
}

impl PartialOrd for VertexCover {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Covering and drop-one minimality, checked directly against the facets.
pub fn is_minimal_cover(cover: &VertexCover, facets: &[Facet]) -> bool {
    if !facets.iter().all(|f| cover.meets(f)) {
        return false;
    }
    (0..cover.len()).all(|skip| {
        let smaller = VertexCover::new(
            cover
                .edge_ids
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, e)| e.as_str()),
        );
        !facets.iter().all(|f| smaller.meets(f))
    })
}

/// All minimal transversals of the facet hypergraph.
///
/// Branches on the elements of the first facet not yet hit, excluding
/// elements already tried at the same level, and prunes any partial set in
/// which some chosen element no longer hits a facet on its own.
pub fn minimal_vertex_covers_generic(
    facets: &[Facet],
    max_facets: usize,
) -> Result<Vec<VertexCover>> {
    if facets.len() > max_facets {
        return Err(Error::BudgetExceeded {
            stage: "minimal_vertex_covers_generic",
            limit: max_facets,
            actual: facets.len(),
        });
    }
    let universe: Vec<&str> = facets
        .iter()
        .flat_map(|f| f.edge_ids().iter().map(String::as_str))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if universe.len() > 128 {
        return Err(Error::BudgetExceeded {
            stage: "minimal_vertex_covers_generic",
            limit: 128,
            actual: universe.len(),
        });
    }
    let masks: Vec<u128> = facets
        .iter()
        .map(|f| {
            f.edge_ids().iter().fold(0u128, |acc, e| {
                let bit = universe.binary_search(&e.as_str()).expect("id in universe");
                acc | 1 << bit
            })
        })
        .collect();

    let mut found = BTreeSet::new();
    search(&masks, 0, 0, &mut found);
    let mut covers: Vec<VertexCover> = found
        .into_iter()
        .map(|mask| {
            VertexCover::new(
                (0..universe.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| universe[b]),
            )
        })
        .collect();
    covers.sort();
    Ok(covers)
}

fn has_private_facets(masks: &[u128], chosen: u128) -> bool {
    let mut private = 0u128;
    for &f in masks {
        let hit = f & chosen;
        if hit.count_ones() == 1 {
            private |= hit;
        }
    }
    private == chosen
}

fn search(masks: &[u128], chosen: u128, forbidden: u128, found: &mut BTreeSet<u128>) {
    let Some(&open) = masks.iter().find(|&&f| f & chosen == 0) else {
        if has_private_facets(masks, chosen) {
            found.insert(chosen);
        }
        return;
    };
    let mut tried = forbidden;
    let mut candidates = open & !forbidden;
    while candidates != 0 {
        let bit = candidates & candidates.wrapping_neg();
        candidates &= !bit;
        let next = chosen | bit;
        if has_private_facets(masks, next) {
            search(masks, next, tried, found);
        }
        tried |= bit;
    }
}

/// Minimal covers of a uni-cyclic layout's complex, family by family:
/// each off-cycle single edge; an entire multiple cycle class with one
/// single cycle edge; two single cycle edges; two entire multiple cycle
/// classes; each entire off-cycle multiple class.
pub fn minimal_vertex_covers_formula(layout: &UnicyclicLayout) -> Vec<VertexCover> {
    let mut covers = BTreeSet::new();
    let multiple = layout.cycle_multiple_classes();
    let singles: Vec<&str> = layout.cycle_single_edges().collect();

    for e in layout.outside_single_edges() {
        covers.insert(VertexCover::new([e.as_str()]));
    }
    for class in multiple {
        for &k in &singles {
            covers.insert(VertexCover::new(
                class.members.iter().map(String::as_str).chain([k]),
            ));
        }
    }
    for (a, &k) in singles.iter().enumerate() {
        for &l in &singles[a + 1..] {
            covers.insert(VertexCover::new([k, l]));
        }
    }
    for (a, first) in multiple.iter().enumerate() {
        for second in &multiple[a + 1..] {
            covers.insert(VertexCover::new(
                first.members.iter().chain(&second.members).map(String::as_str),
            ));
        }
    }
    for class in layout.outside_multiple_classes() {
        covers.insert(VertexCover::new(class.members.iter().map(String::as_str)));
    }
    covers.into_iter().collect()
}

/// Combinatorial view of a squarefree monomial ideal: generators and prime
/// components, each held as a sorted list of edge ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MonomialIdealView {
    pub generators: Vec<Vec<String>>,
    #[serde(rename = "components")]
    pub decomposition: Vec<Vec<String>>,
}

pub fn variable(id: &str) -> String {
    format!("x_{{{id}}}")
}

/// One squarefree generator per facet, in facet order.
pub fn facet_ideal(facets: &[Facet]) -> MonomialIdealView {
    MonomialIdealView {
        generators: facets.iter().map(|f| f.edge_ids().to_vec()).collect(),
        decomposition: Vec::new(),
    }
}

/// Attaches one prime component per minimal cover to `ideal`.
pub fn primary_decomposition(ideal: MonomialIdealView, covers: &[VertexCover]) -> MonomialIdealView {
    let mut sorted: Vec<&VertexCover> = covers.iter().collect();
    sorted.sort();
    sorted.dedup();
    MonomialIdealView {
        decomposition: sorted.into_iter().map(|c| c.edge_ids().to_vec()).collect(),
        ..ideal
    }
}

impl MonomialIdealView {
    /// Whether the squarefree monomial on `subset` lies in the ideal, i.e.
    /// some generator divides it.
    pub fn contains_monomial(&self, subset: &[String]) -> bool {
        self.generators
            .iter()
            .any(|g| g.iter().all(|x| subset.contains(x)))
    }

    pub fn render_generators(&self) -> String {
        let monomials: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|e| variable(e)).collect::<String>())
            .collect();
        format!("⟨{}⟩", monomials.join(", "))
    }

    pub fn render_decomposition(&self) -> String {
        self.decomposition
            .iter()
            .map(|c| {
                let vars: Vec<String> = c.iter().map(|e| variable(e)).collect();
                format!("({})", vars.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ∩ ")
    }
}

impl fmt::Display for MonomialIdealView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_generators())?;
        if !self.decomposition.is_empty() {
            write!(f, " = {}", self.render_decomposition())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::recognize_unicyclic;
    use crate::spanning::{enumerate_spanning_trees_generic, enumerate_spanning_trees_lemma};
    use crate::testgraphs;

    fn covers(list: &[&[&str]]) -> Vec<VertexCover> {
        let mut v: Vec<VertexCover> = list.iter().map(|c| VertexCover::new(c.iter().copied())).collect();
        v.sort();
        v
    }

    // Independent check: scan every edge subset, keep the minimal covers.
    fn covers_by_subset_filter(ids: &[&str], facets: &[Facet]) -> Vec<VertexCover> {
        let mut out: Vec<VertexCover> = (1u32..1 << ids.len())
            .map(|m| {
                VertexCover::new(
                    ids.iter()
                        .enumerate()
                        .filter(|(i, _)| m >> i & 1 == 1)
                        .map(|(_, e)| *e),
                )
            })
            .filter(|c| is_minimal_cover(c, facets))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn figure_one_covers() {
        let g = testgraphs::figure_one();
        let facets = enumerate_spanning_trees_generic(&g);
        let ids: Vec<&str> = g.edge_ids().collect();
        let expected = covers(&[
            &["e41", "e42"],
            &["e21", "e31"],
            &["e11", "e12", "e13", "e21"],
            &["e11", "e12", "e13", "e31"],
        ]);
        assert_eq!(covers_by_subset_filter(&ids, &facets), expected);
        assert_eq!(minimal_vertex_covers_generic(&facets, 1000).unwrap(), expected);
        let layout = recognize_unicyclic(&g).unwrap();
        assert_eq!(minimal_vertex_covers_formula(&layout), expected);
    }

    #[test]
    fn triangle_covers() {
        let g = testgraphs::triangle();
        let facets = enumerate_spanning_trees_generic(&g);
        let expected = covers(&[&["e1", "e2"], &["e1", "e3"], &["e2", "e3"]]);
        assert_eq!(minimal_vertex_covers_generic(&facets, 1000).unwrap(), expected);
        let layout = recognize_unicyclic(&g).unwrap();
        assert_eq!(minimal_vertex_covers_formula(&layout), expected);
    }

    #[test]
    fn single_facet() {
        let facets = vec![Facet::new(["e1"])];
        assert_eq!(
            minimal_vertex_covers_generic(&facets, 10).unwrap(),
            covers(&[&["e1"]])
        );
        let ideal = primary_decomposition(facet_ideal(&facets), &covers(&[&["e1"]]));
        assert_eq!(ideal.render_generators(), "⟨x_{e1}⟩");
        assert_eq!(ideal.render_decomposition(), "(x_{e1})");
    }

    #[test]
    fn pendant_edge_is_its_own_cover() {
        let g = crate::multigraph::build_multigraph(
            ["a", "b", "c", "d"],
            [
                ("e1", ("a", "b")),
                ("e2", ("b", "c")),
                ("e3", ("c", "a")),
                ("p", ("c", "d")),
            ],
        )
        .unwrap();
        let layout = recognize_unicyclic(&g).unwrap();
        let formula = minimal_vertex_covers_formula(&layout);
        assert!(formula.contains(&VertexCover::new(["p"])));
        let facets = enumerate_spanning_trees_lemma(&layout);
        assert_eq!(minimal_vertex_covers_generic(&facets, 100).unwrap(), formula);
    }

    #[test]
    fn figure_one_ideal_rendering() {
        let g = testgraphs::figure_one();
        let facets = enumerate_spanning_trees_generic(&g);
        let ideal = facet_ideal(&facets);
        assert_eq!(ideal.generators.len(), 14);
        assert_eq!(ideal.generators[0], ["e11", "e21", "e41"]);
        assert!(ideal.render_generators().starts_with("⟨x_{e11}x_{e21}x_{e41}, "));
        let cs = minimal_vertex_covers_generic(&facets, 1000).unwrap();
        let ideal = primary_decomposition(ideal, &cs);
        assert_eq!(
            ideal.render_decomposition(),
            "(x_{e21},x_{e31}) ∩ (x_{e41},x_{e42}) ∩ (x_{e11},x_{e12},x_{e13},x_{e21}) ∩ (x_{e11},x_{e12},x_{e13},x_{e31})"
        );
        let strs = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert!(ideal.contains_monomial(&strs(&["e11", "e21", "e41", "e42"])));
        assert!(!ideal.contains_monomial(&strs(&["e11", "e12", "e41"])));
    }

    #[test]
    fn budget_on_facets() {
        let facets = vec![Facet::new(["a"]), Facet::new(["b"])];
        assert!(matches!(
            minimal_vertex_covers_generic(&facets, 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
