//! Finite connected multigraphs with parallel edges, and recognition of the
//! uni-cyclic layout with its canonical edge labeling.
//!
//! A multigraph is reduced to its *quotient*: one node per vertex and one arc
//! per parallel class. The graph is uni-cyclic when that quotient is
//! connected with exactly one cycle, i.e. it has as many arcs as nodes.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// A single edge. Endpoints are indices into [`Multigraph::vertices`] and are
/// stored with the earlier-declared vertex first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    edge_index: HashMap<String, usize>,
}

/// Builds and validates a multigraph from raw identifier lists.
pub fn build_multigraph<V, E, S>(vertices: V, edges: E) -> Result<Multigraph>
where
    V: IntoIterator<Item = S>,
    E: IntoIterator<Item = (S, (S, S))>,
    S: Into<String>,
{
    let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
    let edges: Vec<(String, (String, String))> = edges
        .into_iter()
        .map(|(id, (a, b))| (id.into(), (a.into(), b.into())))
        .collect();
    Multigraph::new(vertices, edges)
}

impl Multigraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(String, (String, String))>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertices);
        }
        if edges.is_empty() {
            return Err(Error::EmptyEdges);
        }
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }

        let mut edge_index = HashMap::with_capacity(edges.len());
        let mut built = Vec::with_capacity(edges.len());
        for (i, (id, (a, b))) in edges.into_iter().enumerate() {
            if edge_index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateEdgeId(id));
            }
            let lookup = |v: &String| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::UnknownEndpoint {
                        edge: id.clone(),
                        vertex: v.clone(),
                    })
            };
            let (ia, ib) = (lookup(&a)?, lookup(&b)?);
            if ia == ib {
                return Err(Error::Loop(id));
            }
            built.push(Edge {
                id,
                ends: [ia.min(ib), ia.max(ib)],
            });
        }

        let graph = Self {
            vertices,
            edges: built,
            edge_index,
        };
        graph.check_connected()?;
        Ok(graph)
    }

    fn check_connected(&self) -> Result<()> {
        let adjacency = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(i) => Err(Error::Disconnected {
                root: self.vertices[0].clone(),
                unreachable: self.vertices[i].clone(),
            }),
            None => Ok(()),
        }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adjacency[e.ends[0]].push(e.ends[1]);
            adjacency[e.ends[1]].push(e.ends[0]);
        }
        adjacency
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_position(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(|e| e.id.as_str())
    }

    /// Groups edges by unordered endpoint pair. Member order follows input
    /// order; classes appear in order of their first member.
    pub fn parallel_classes(&self) -> Vec<ParallelClass> {
        self.class_indices()
            .into_iter()
            .map(|(ends, members)| ParallelClass {
                endpoints: [
                    self.vertices[ends[0]].clone(),
                    self.vertices[ends[1]].clone(),
                ],
                members: members.iter().map(|&i| self.edges[i].id.clone()).collect(),
            })
            .collect()
    }

    fn class_indices(&self) -> Vec<([usize; 2], Vec<usize>)> {
        let mut slot: HashMap<[usize; 2], usize> = HashMap::new();
        let mut classes: Vec<([usize; 2], Vec<usize>)> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let k = *slot.entry(e.ends).or_insert_with(|| {
                classes.push((e.ends, Vec::new()));
                classes.len() - 1
            });
            classes[k].1.push(i);
        }
        classes
    }
}

/// Free function form of [`Multigraph::parallel_classes`].
pub fn parallel_classes(g: &Multigraph) -> Vec<ParallelClass> {
    g.parallel_classes()
}

/// All edges sharing one unordered endpoint pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelClass {
    pub endpoints: [String; 2],
    pub members: Vec<String>,
}

impl ParallelClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_multiple(&self) -> bool {
        self.members.len() >= 2
    }

    /// Lexicographically smallest member id; drives canonical tie-breaks.
    pub fn min_member(&self) -> &str {
        self.members
            .iter()
            .min()
            .map(String::as_str)
            .expect("parallel class is never empty")
    }
}

/// Scalar parameters of a uni-cyclic layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LayoutScalars {
    /// Total number of edges.
    pub n: usize,
    /// Cycle length, counted in parallel classes.
    pub m: usize,
    /// Multiple classes on the cycle (r').
    pub r_cycle: usize,
    /// Multiple classes off the cycle (r'').
    pub r_outside: usize,
    pub r: usize,
    /// Edges in multiple cycle classes.
    pub alpha: usize,
    /// Edges in multiple off-cycle classes.
    pub beta: usize,
    /// Single off-cycle edges.
    pub v: usize,
}

/// The canonical labeling of a uni-cyclic multigraph: cycle classes at
/// positions `1..=m` (multiple classes first), off-cycle multiple classes at
/// `m+1..=m+r''`, then the off-cycle single edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnicyclicLayout {
    cycle_classes: Vec<ParallelClass>,
    outside_multiple_classes: Vec<ParallelClass>,
    outside_single_edges: Vec<String>,
    scalars: LayoutScalars,
}

impl UnicyclicLayout {
    /// Assembles a layout from already-ordered parts, checking the structural
    /// invariants. `cycle_classes` must list multiple classes before single
    /// ones.
    pub fn from_parts(
        cycle_classes: Vec<ParallelClass>,
        outside_multiple_classes: Vec<ParallelClass>,
        outside_single_edges: Vec<String>,
    ) -> Result<Self> {
        let m = cycle_classes.len();
        if m < 3 {
            return Err(Error::InvalidLayout(format!(
                "cycle has {m} classes, need at least 3"
            )));
        }
        let r_cycle = cycle_classes.iter().take_while(|c| c.is_multiple()).count();
        if cycle_classes[r_cycle..].iter().any(ParallelClass::is_multiple) {
            return Err(Error::InvalidLayout(
                "multiple cycle classes must precede single ones".into(),
            ));
        }
        if let Some(c) = outside_multiple_classes.iter().find(|c| !c.is_multiple()) {
            return Err(Error::InvalidLayout(format!(
                "outside class {:?} has fewer than two members",
                c.members
            )));
        }
        let mut seen = HashSet::new();
        let all_ids = cycle_classes
            .iter()
            .chain(&outside_multiple_classes)
            .flat_map(|c| c.members.iter())
            .chain(&outside_single_edges);
        for id in all_ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateEdgeId(id.clone()));
            }
        }

        let alpha: usize = cycle_classes[..r_cycle].iter().map(ParallelClass::size).sum();
        let beta: usize = outside_multiple_classes.iter().map(ParallelClass::size).sum();
        let r_outside = outside_multiple_classes.len();
        let v = outside_single_edges.len();
        let n = seen.len();
        let scalars = LayoutScalars {
            n,
            m,
            r_cycle,
            r_outside,
            r: r_cycle + r_outside,
            alpha,
            beta,
            v,
        };
        assert_eq!(n, alpha + (m - r_cycle) + beta + v, "edge count identity");
        Ok(Self {
            cycle_classes,
            outside_multiple_classes,
            outside_single_edges,
            scalars,
        })
    }

    pub fn scalars(&self) -> LayoutScalars {
        self.scalars
    }

    pub fn cycle_classes(&self) -> &[ParallelClass] {
        &self.cycle_classes
    }

    /// Cycle classes at positions `1..=r'`.
    pub fn cycle_multiple_classes(&self) -> &[ParallelClass] {
        &self.cycle_classes[..self.scalars.r_cycle]
    }

    /// Single cycle edges at positions `r'+1..=m`.
    pub fn cycle_single_edges(&self) -> impl Iterator<Item = &str> {
        self.cycle_classes[self.scalars.r_cycle..]
            .iter()
            .map(|c| c.members[0].as_str())
    }

    pub fn outside_multiple_classes(&self) -> &[ParallelClass] {
        &self.outside_multiple_classes
    }

    pub fn outside_single_edges(&self) -> &[String] {
        &self.outside_single_edges
    }

    /// `(edge-id, canonical label)` pairs in canonical order.
    pub fn labels(&self) -> Vec<(String, String)> {
        let classes = self
            .cycle_classes
            .iter()
            .chain(&self.outside_multiple_classes)
            .enumerate()
            .flat_map(|(h, c)| {
                c.members
                    .iter()
                    .enumerate()
                    .map(move |(k, id)| (id.clone(), format!("e_{{{},{}}}", h + 1, k + 1)))
            });
        let singles = self
            .outside_single_edges
            .iter()
            .enumerate()
            .map(|(a, id)| (id.clone(), format!("e_{{{}}}", a + 1)));
        classes.chain(singles).collect()
    }

    pub fn label_of(&self, id: &str) -> Option<String> {
        self.labels()
            .into_iter()
            .find(|(e, _)| e == id)
            .map(|(_, label)| label)
    }

    /// Edge ids in canonical label order.
    pub fn canonical_edge_order(&self) -> Vec<String> {
        self.labels().into_iter().map(|(id, _)| id).collect()
    }
}

/// Recognizes the uni-cyclic structure of `g` and fixes its canonical
/// labeling.
///
/// The cycle is walked from the class with the smallest member id, heading
/// towards whichever neighbouring cycle class has the smaller member id.
pub fn recognize_unicyclic(g: &Multigraph) -> Result<UnicyclicLayout> {
    let classes = g.class_indices();
    let nodes = g.vertex_count();
    let arcs = classes.len();
    if arcs < nodes {
        return Err(Error::NotUnicyclic(
            "quotient graph is a tree (no cycle of length >= 3)".into(),
        ));
    }
    if arcs > nodes {
        return Err(Error::NotUnicyclic(format!(
            "quotient graph has {} independent cycles",
            arcs - nodes + 1
        )));
    }

    // Peel leaves until only the cycle remains.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (k, (ends, _)) in classes.iter().enumerate() {
        incident[ends[0]].push(k);
        incident[ends[1]].push(k);
    }
    let mut degree: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut removed = vec![false; arcs];
    let mut queue: VecDeque<usize> = (0..nodes).filter(|&u| degree[u] == 1).collect();
    while let Some(u) = queue.pop_front() {
        let Some(&k) = incident[u].iter().find(|&&k| !removed[k]) else {
            continue;
        };
        removed[k] = true;
        degree[u] -= 1;
        let [a, b] = classes[k].0;
        let w = if a == u { b } else { a };
        degree[w] -= 1;
        if degree[w] == 1 {
            queue.push_back(w);
        }
    }

    let class = |k: usize| ParallelClass {
        endpoints: [
            g.vertices[classes[k].0[0]].clone(),
            g.vertices[classes[k].0[1]].clone(),
        ],
        members: classes[k].1.iter().map(|&i| g.edges[i].id.clone()).collect(),
    };
    let min_id = |k: usize| {
        classes[k]
            .1
            .iter()
            .map(|&i| g.edges[i].id.as_str())
            .min()
            .expect("class is never empty")
    };

    let on_cycle: Vec<usize> = (0..arcs).filter(|&k| !removed[k]).collect();
    let start = *on_cycle
        .iter()
        .min_by_key(|&&k| min_id(k))
        .expect("a unicyclic quotient has a cycle");
    let other_cycle_arc = |node: usize, arc: usize| {
        *incident[node]
            .iter()
            .find(|&&k| k != arc && !removed[k])
            .expect("cycle nodes have two cycle arcs")
    };
    let [a, b] = classes[start].0;
    let (via_a, via_b) = (other_cycle_arc(a, start), other_cycle_arc(b, start));
    let mut node = if min_id(via_b) < min_id(via_a) { b } else { a };
    let mut order = vec![start];
    let mut arc = start;
    loop {
        let next = other_cycle_arc(node, arc);
        if next == start {
            break;
        }
        let [x, y] = classes[next].0;
        node = if x == node { y } else { x };
        arc = next;
        order.push(next);
    }

    let (mult, single): (Vec<usize>, Vec<usize>) =
        order.into_iter().partition(|&k| classes[k].1.len() >= 2);
    let cycle_classes: Vec<ParallelClass> = mult.into_iter().chain(single).map(class).collect();

    let mut outside: Vec<usize> = (0..arcs).filter(|&k| removed[k]).collect();
    outside.sort_by_key(|&k| min_id(k));
    let (outside_mult, outside_single): (Vec<usize>, Vec<usize>) =
        outside.into_iter().partition(|&k| classes[k].1.len() >= 2);

    UnicyclicLayout::from_parts(
        cycle_classes,
        outside_mult.into_iter().map(class).collect(),
        outside_single
            .into_iter()
            .map(|k| g.edges[classes[k].1[0]].id.clone())
            .collect(),
    )
}
