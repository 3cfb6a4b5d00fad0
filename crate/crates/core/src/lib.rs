//! Spanning simplicial complexes of multigraphs.
//!
//! The faces of the complex are the forests of a connected multigraph and its
//! facets are the spanning trees. For uni-cyclic multigraphs the facets, the
//! f-vector, the Euler characteristic and the minimal vertex covers of the
//! facet ideal all have closed forms; each closed form here has a
//! brute-force counterpart that works on any multigraph.

pub mod complex;
mod dsu;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod multigraph;
pub mod spanning;

#[cfg(test)]
mod testgraphs;

pub use complex::{
    binomial, dimension, euler_characteristic, f_vector_formula, f_vector_oracle, tail_terms,
    theorem_term, FVector,
};
pub use error::{Error, Result};
pub use homology::{
    betti_from_faces, betti_numbers, boundary_matrix, euler_from_betti, graded_faces,
    matrix_rank_exact, BettiProfile, BoundaryMatrix, GradedFaces,
};
pub use ideal::{
    facet_ideal, is_minimal_cover, minimal_vertex_covers_formula, minimal_vertex_covers_generic,
    primary_decomposition, MonomialIdealView, VertexCover,
};
pub use multigraph::{
    build_multigraph, parallel_classes, recognize_unicyclic, LayoutScalars, Multigraph,
    ParallelClass, UnicyclicLayout,
};
pub use spanning::{
    count_spanning_trees_formula, enumerate_spanning_trees_generic,
    enumerate_spanning_trees_lemma, Facet,
};

/// Limits on the brute-force paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest edge count the subset-enumerating oracles accept.
    pub max_edges: usize,
    /// Largest facet count handed to the transversal search.
    pub max_facets: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_edges: 24,
            max_facets: 200_000,
        }
    }
}
