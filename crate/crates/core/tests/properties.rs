use std::collections::VecDeque;

use num_bigint::BigInt;
use proptest::prelude::*;
use ssc_core::*;

/// Cycle class sizes plus off-cycle attachments `(size, parent selector)`;
/// edge ids are assigned from a permutation so canonical labels differ from
/// input order.
fn unicyclic() -> impl Strategy<Value = Multigraph> {
    (
        prop::collection::vec(1usize..=3, 3..=5),
        prop::collection::vec((1usize..=3, any::<prop::sample::Index>()), 0..=3),
        any::<u64>(),
    )
        .prop_map(|(cycle, outside, salt)| {
            let m = cycle.len();
            let mut vertices: Vec<String> = (0..m).map(|i| format!("v{i}")).collect();
            let mut ends = Vec::new();
            for (i, &t) in cycle.iter().enumerate() {
                for _ in 0..t {
                    ends.push((format!("v{i}"), format!("v{}", (i + 1) % m)));
                }
            }
            for (t, parent) in outside {
                let p = vertices[parent.index(vertices.len())].clone();
                let child = format!("v{}", vertices.len());
                for _ in 0..t {
                    ends.push((p.clone(), child.clone()));
                }
                vertices.push(child);
            }
            let n = ends.len();
            let mut ids: Vec<usize> = (0..n).collect();
            // Cheap deterministic shuffle from the salt.
            ids.sort_by_key(|&i| (i as u64 + 1).wrapping_mul(salt | 1).rotate_left(17));
            let edges: Vec<(String, (String, String))> = ends
                .into_iter()
                .enumerate()
                .map(|(i, e)| (format!("e{:02}", ids[i]), e))
                .collect();
            Multigraph::new(vertices, edges).unwrap()
        })
}

fn is_forest(g: &Multigraph, mask: u32) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[e.ends[0]].push(e.ends[1]);
            adj[e.ends[1]].push(e.ends[0]);
        }
    }
    let mut seen = vec![false; n];
    let mut comps = 0;
    for s in 0..n {
        if !seen[s] {
            comps += 1;
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
    }
    comps + mask.count_ones() as usize == n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_forms_match_oracles(g in unicyclic()) {
        let layout = recognize_unicyclic(&g).unwrap();
        let s = layout.scalars();
        prop_assert_eq!(s.n, s.alpha + (s.m - s.r_cycle) + s.beta + s.v);

        let lemma = enumerate_spanning_trees_lemma(&layout);
        let generic = enumerate_spanning_trees_generic(&g);
        prop_assert_eq!(&lemma, &generic);
        prop_assert_eq!(BigInt::from(count_spanning_trees_formula(&layout)), BigInt::from(generic.len()));
        prop_assert!(generic.iter().all(|f| f.len() == g.vertex_count() - 1));

        let formula = f_vector_formula(&layout);
        let oracle = f_vector_oracle(&g, 24).unwrap();
        prop_assert_eq!(&formula, &oracle);
        prop_assert_eq!(oracle.counts()[0].clone(), BigInt::from(s.n));
        prop_assert!(complex::within_binomial_bounds(&oracle, s.n));
        prop_assert!(tail_terms(&layout).iter().all(|(_, t)| *t == BigInt::from(0)));

        let covers = minimal_vertex_covers_formula(&layout);
        prop_assert_eq!(&covers, &minimal_vertex_covers_generic(&generic, 100_000).unwrap());
        prop_assert!(covers.iter().all(|c| is_minimal_cover(c, &generic)));
    }

    #[test]
    fn oracle_matches_exhaustive_subsets(g in unicyclic()) {
        prop_assume!(g.edge_count() <= 14);
        let mut counts = vec![0i64; g.vertex_count() - 1];
        for mask in 1u32..1 << g.edge_count() {
            if is_forest(&g, mask) {
                counts[mask.count_ones() as usize - 1] += 1;
            }
        }
        prop_assert_eq!(
            f_vector_oracle(&g, 24).unwrap(),
            counts.into_iter().collect::<FVector>()
        );
    }

    #[test]
    fn homology_invariants(g in unicyclic()) {
        prop_assume!(g.edge_count() <= 11);
        let faces = graded_faces(&g, 24).unwrap();
        let d = faces.dimension();
        let matrices: Vec<BoundaryMatrix> =
            (1..=d).map(|i| boundary_matrix(&faces, i).unwrap()).collect();
        for pair in matrices.windows(2) {
            prop_assert!(pair[0].composes_to_zero(&pair[1]));
        }
        for m in &matrices {
            prop_assert!((0..m.cols).all(|c| m.column(c).len() == m.dim + 1));
        }
        let betti = betti_from_faces(&faces);
        prop_assert!(betti.ranks[0] >= 1);
        let oracle = f_vector_oracle(&g, 24).unwrap();
        prop_assert_eq!(BigInt::from(euler_from_betti(&betti)), euler_characteristic(&oracle));
    }

    #[test]
    fn labeling_is_deterministic(g in unicyclic()) {
        let a = recognize_unicyclic(&g).unwrap();
        let b = recognize_unicyclic(&g.clone()).unwrap();
        prop_assert_eq!(a.labels(), b.labels());
        let classes = parallel_classes(&g);
        prop_assert_eq!(classes.iter().map(ParallelClass::size).sum::<usize>(), g.edge_count());
    }
}
