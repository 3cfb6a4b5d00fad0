//! Simplicial chain complex of the spanning simplicial complex and its
//! Betti numbers (ranks only; torsion is not tracked).

use std::collections::HashMap;

use crate::complex::forest_positions;
use crate::error::{Error, Result};
use crate::linalg;
use crate::multigraph::{recognize_unicyclic, Multigraph};

/// Faces grouped by dimension. Each face is a strictly increasing list of
/// positions into [`GradedFaces::order`]; each grade is sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFaces {
    order: Vec<String>,
    grades: Vec<Vec<Vec<usize>>>,
}

impl GradedFaces {
    /// The global vertex order used for orientation.
    pub fn order(&self) -> &[String] {
        &self.order
    }

    pub fn grades(&self) -> &[Vec<Vec<usize>>] {
        &self.grades
    }

    pub fn dimension(&self) -> usize {
        self.grades.len() - 1
    }

    pub fn grade_sizes(&self) -> Vec<usize> {
        self.grades.iter().map(Vec::len).collect()
    }

    pub fn face_ids(&self, face: &[usize]) -> Vec<&str> {
        face.iter().map(|&p| self.order[p].as_str()).collect()
    }
}

/// Vertex order for orientation: canonical label order when the graph is
/// uni-cyclic, input edge order otherwise.
pub fn vertex_order(g: &Multigraph) -> Vec<String> {
    match recognize_unicyclic(g) {
        Ok(layout) => layout.canonical_edge_order(),
        Err(_) => g.edge_ids().map(str::to_owned).collect(),
    }
}

pub fn graded_faces(g: &Multigraph, max_edges: usize) -> Result<GradedFaces> {
    graded_faces_with_order(g, &vertex_order(g), max_edges)
}

/// `order` must be a permutation of the edge ids of `g`.
pub fn graded_faces_with_order(
    g: &Multigraph,
    order: &[String],
    max_edges: usize,
) -> Result<GradedFaces> {
    if g.edge_count() > max_edges {
        return Err(Error::BudgetExceeded {
            stage: "graded_faces",
            limit: max_edges,
            actual: g.edge_count(),
        });
    }
    let rank_of: Vec<usize> = {
        let mut r = vec![0; g.edge_count()];
        for (p, id) in order.iter().enumerate() {
            let e = g.edge_position(id).expect("order lists the graph's edges");
            r[e] = p;
        }
        r
    };
    let mut grades = vec![Vec::new(); g.vertex_count() - 1];
    forest_positions(g, |forest| {
        let mut face: Vec<usize> = forest.iter().map(|&e| rank_of[e]).collect();
        face.sort_unstable();
        grades[face.len() - 1].push(face);
    });
    grades.iter_mut().for_each(|grade| grade.sort());
    Ok(GradedFaces {
        order: order.to_vec(),
        grades,
    })
}

/// `∂_i`: rows indexed by `(i-1)`-faces, columns by `i`-faces, stored
/// column-wise as sparse `(row, value)` lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    pub cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.columns[c]
            .iter()
            .find(|&&(row, _)| row == r)
            .map_or(0, |&(_, v)| v)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut dense = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                dense[r][c] = v;
            }
        }
        dense
    }

    /// `(row, col, value)` for each nonzero, column-major.
    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r, c, v)))
            .collect()
    }

    pub fn to_triples_text(&self) -> String {
        self.triples()
            .into_iter()
            .map(|(r, c, v)| format!("{r} {c} {v}\n"))
            .collect()
    }

    /// Whether `self * rhs` is the zero matrix (`self = ∂_i`, `rhs = ∂_{i+1}`).
    pub fn composes_to_zero(&self, rhs: &BoundaryMatrix) -> bool {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        rhs.columns.iter().all(|col| {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(mid, v) in col {
                for &(r, w) in &self.columns[mid] {
                    *acc.entry(r).or_default() += v * w;
                }
            }
            acc.values().all(|&x| x == 0)
        })
    }
}

/// Signed incidence between grade `i` and grade `i - 1`: dropping the vertex
/// at position `k` of a face contributes `(-1)^k`.
pub fn boundary_matrix(faces: &GradedFaces, i: usize) -> Result<BoundaryMatrix> {
    let d = faces.dimension();
    if i == 0 || i > d {
        return Err(Error::BoundaryIndex { index: i, max: d });
    }
    let lower: HashMap<&[usize], usize> = faces.grades[i - 1]
        .iter()
        .enumerate()
        .map(|(r, f)| (f.as_slice(), r))
        .collect();
    let columns = faces.grades[i]
        .iter()
        .map(|face| {
            let mut col: Vec<(usize, i64)> = (0..face.len())
                .map(|k| {
                    let sub: Vec<usize> = face
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != k)
                        .map(|(_, &v)| v)
                        .collect();
                    let row = lower[sub.as_slice()];
                    (row, if k % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    Ok(BoundaryMatrix {
        dim: i,
        rows: faces.grades[i - 1].len(),
        cols: faces.grades[i].len(),
        columns,
    })
}

pub fn matrix_rank_exact(m: &BoundaryMatrix) -> usize {
    linalg::rank(&m.to_dense())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiProfile {
    /// `β_0, ..., β_d`.
    pub ranks: Vec<u64>,
    /// `rank ∂_i` for `i = 0..=d`, with `∂_0 = 0`.
    pub boundary_ranks: Vec<usize>,
}

pub fn betti_numbers(g: &Multigraph, max_edges: usize) -> Result<BettiProfile> {
    Ok(betti_from_faces(&graded_faces(g, max_edges)?))
}

pub fn betti_from_faces(faces: &GradedFaces) -> BettiProfile {
    let d = faces.dimension();
    let sizes = faces.grade_sizes();
    let mut boundary_ranks = vec![0usize];
    for i in 1..=d {
        let m = boundary_matrix(faces, i).expect("index within 1..=d");
        boundary_ranks.push(matrix_rank_exact(&m));
    }
    let ranks = (0..=d)
        .map(|i| {
            let nullity = sizes[i] - boundary_ranks[i];
            let image = boundary_ranks.get(i + 1).copied().unwrap_or(0);
            (nullity - image) as u64
        })
        .collect();
    BettiProfile {
        ranks,
        boundary_ranks,
    }
}

pub fn euler_from_betti(b: &BettiProfile) -> i64 {
    b.ranks
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::build_multigraph;
    use crate::testgraphs;

    fn row_of(faces: &GradedFaces, grade: usize, ids: &[&str]) -> usize {
        faces.grades()[grade]
            .iter()
            .position(|f| faces.face_ids(f) == ids)
            .unwrap()
    }

    #[test]
    fn figure_one_chain_complex() {
        let g = testgraphs::figure_one();
        let faces = graded_faces(&g, 24).unwrap();
        assert_eq!(faces.grade_sizes(), vec![7, 17, 14]);

        let d2 = boundary_matrix(&faces, 2).unwrap();
        let col = row_of(&faces, 2, &["e21", "e31", "e41"]);
        let expect = [
            (["e31", "e41"], 1),
            (["e21", "e41"], -1),
            (["e21", "e31"], 1),
        ];
        for (ids, sign) in expect {
            assert_eq!(d2.entry(row_of(&faces, 1, &ids), col), sign);
        }
        assert_eq!(d2.column(col).len(), 3);

        let d1 = boundary_matrix(&faces, 1).unwrap();
        let col = row_of(&faces, 1, &["e11", "e21"]);
        assert_eq!(d1.entry(row_of(&faces, 0, &["e21"]), col), 1);
        assert_eq!(d1.entry(row_of(&faces, 0, &["e11"]), col), -1);

        assert_eq!(matrix_rank_exact(&d2), 11);
        assert_eq!(faces.grade_sizes()[2] - matrix_rank_exact(&d2), 3);
        assert_eq!(matrix_rank_exact(&d1), 6);
        assert!(d1.composes_to_zero(&d2));

        let betti = betti_from_faces(&faces);
        assert_eq!(betti.ranks, vec![1, 0, 3]);
        assert_eq!(betti.boundary_ranks, vec![0, 6, 11]);
        assert_eq!(euler_from_betti(&betti), 4);
    }

    #[test]
    fn single_edge_face_column() {
        let g = build_multigraph(
            ["a", "b", "c"],
            [("a1", ("a", "b")), ("b1", ("b", "c"))],
        )
        .unwrap();
        let faces = graded_faces(&g, 24).unwrap();
        let d1 = boundary_matrix(&faces, 1).unwrap();
        assert_eq!((d1.rows, d1.cols), (2, 1));
        assert_eq!(d1.to_dense(), vec![vec![-1], vec![1]]);
        assert_eq!(d1.to_triples_text(), "0 0 -1\n1 0 1\n");
    }

    #[test]
    fn cycle_betti() {
        let b = betti_numbers(&testgraphs::triangle(), 24).unwrap();
        assert_eq!(b.ranks, vec![1, 1]);
        assert_eq!(euler_from_betti(&b), 0);
        let b = betti_numbers(&testgraphs::cycle_211(), 24).unwrap();
        assert_eq!(b.ranks, vec![1, 2]);
        assert_eq!(euler_from_betti(&b), -1);
        assert_eq!(graded_faces(&testgraphs::cycle_211(), 24).unwrap().grade_sizes(), vec![4, 5]);
    }

    #[test]
    fn zero_matrix_rank() {
        assert_eq!(linalg::rank(&[vec![0, 0, 0]]), 0);
    }

    #[test]
    fn boundary_index_range() {
        let faces = graded_faces(&testgraphs::triangle(), 24).unwrap();
        assert_eq!(
            boundary_matrix(&faces, 2),
            Err(Error::BoundaryIndex { index: 2, max: 1 })
        );
        assert!(boundary_matrix(&faces, 0).is_err());
    }

    #[test]
    fn non_unicyclic_uses_input_order() {
        let g = testgraphs::theta();
        assert_eq!(vertex_order(&g), ["a1", "a2", "b1", "b2", "c1", "c2"]);
        let b = betti_numbers(&g, 24).unwrap();
        assert_eq!(b.ranks[0], 1);
    }
}
