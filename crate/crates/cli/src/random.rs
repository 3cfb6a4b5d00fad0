//! Seeded generator of random uni-cyclic multigraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::{EdgeRecord, GraphFile};

/// Draws one layout: cycle length 3..=6, any number of its sides multiplied
/// (class sizes 2..=4), up to three off-cycle multiple classes and up to
/// three off-cycle single edges, each hung from a uniformly chosen existing
/// vertex. Draws exceeding `max_edges` are rejected and redrawn.
///
/// Edge ids are a random permutation of `e1..en` and the edge list is
/// shuffled, so the canonical labeling must do real work.
pub fn random_unicyclic(rng: &mut impl Rng, max_edges: usize) -> GraphFile {
    assert!(max_edges >= 3, "a uni-cyclic multigraph needs at least three edges");
    loop {
        let m = rng.gen_range(3..=6);
        let r_cycle = rng.gen_range(0..=m);
        let r_outside = rng.gen_range(0..=3);
        let v = rng.gen_range(0..=3);

        let mut sizes = vec![1usize; m];
        let mut sides: Vec<usize> = (0..m).collect();
        sides.shuffle(rng);
        for &i in &sides[..r_cycle] {
            sizes[i] = rng.gen_range(2..=4);
        }
        let mut hanging: Vec<usize> = (0..r_outside)
            .map(|_| rng.gen_range(2..=4))
            .chain(std::iter::repeat_n(1, v))
            .collect();
        hanging.shuffle(rng);

        let n: usize = sizes.iter().sum::<usize>() + hanging.iter().sum::<usize>();
        if n > max_edges {
            continue;
        }

        let mut vertices: Vec<String> = (0..m).map(|i| format!("v{i}")).collect();
        let mut ends: Vec<[String; 2]> = Vec::with_capacity(n);
        for (i, &t) in sizes.iter().enumerate() {
            for _ in 0..t {
                ends.push([vertices[i].clone(), vertices[(i + 1) % m].clone()]);
            }
        }
        for &t in &hanging {
            let parent = vertices[rng.gen_range(0..vertices.len())].clone();
            let child = format!("v{}", vertices.len());
            for _ in 0..t {
                ends.push([parent.clone(), child.clone()]);
            }
            vertices.push(child);
        }

        let mut labels: Vec<usize> = (1..=n).collect();
        labels.shuffle(rng);
        let mut edges: Vec<EdgeRecord> = ends
            .into_iter()
            .zip(labels)
            .map(|(ends, k)| EdgeRecord {
                id: format!("e{k}"),
                ends,
            })
            .collect();
        edges.shuffle(rng);
        return GraphFile { vertices, edges };
    }
}

/// `count` graphs from a ChaCha stream seeded with `seed`.
pub fn random_suite(seed: u64, count: usize, max_edges: usize) -> Vec<GraphFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_unicyclic(&mut rng, max_edges)).collect()
}
