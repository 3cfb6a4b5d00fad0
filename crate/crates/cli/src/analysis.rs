//! The full pipeline: closed forms where a uni-cyclic layout exists, oracles
//! within budget, and the cross-checks between them.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use ssc_core::homology::BoundaryMatrix;
use ssc_core::*;
use thiserror::Error;

use crate::input::GraphFile;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub budget: Budget,
    /// Closed forms only.
    pub no_oracle: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Core(#[from] ssc_core::Error),
    #[error("graph is not uni-cyclic and oracles are disabled; nothing to compute")]
    NothingToRun,
}

/// One failed cross-check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub check: String,
    pub expected: Value,
    pub actual: Value,
    pub fingerprint: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelEntry {
    pub id: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayoutReport {
    #[serde(flatten)]
    pub scalars: LayoutScalars,
    pub labels: Vec<LabelEntry>,
}

/// χ by each available route, as decimal strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EulerValues {
    pub formula: Option<String>,
    pub oracle: Option<String>,
    pub betti: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub grade_sizes: Vec<usize>,
    pub betti: Vec<u64>,
    pub boundary_ranks: Vec<usize>,
    pub boundary_nullities: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub fingerprint: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub layout: Option<LayoutReport>,
    pub dimension: i64,
    pub facet_count: String,
    pub facets: Vec<Facet>,
    pub f_vector_formula: Option<FVector>,
    pub f_vector_oracle: Option<FVector>,
    pub euler: EulerValues,
    pub homology: Option<HomologyReport>,
    pub covers: Vec<VertexCover>,
    pub ideal: MonomialIdealView,
    pub notices: Vec<String>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Short stable identifier of a graph: the first 16 hex digits of the
/// SHA-256 of its compact JSON form.
pub fn fingerprint(g: &Multigraph) -> String {
    let json = serde_json::to_string(&GraphFile::from_graph(g)).expect("serializable");
    hex::encode(Sha256::digest(json.as_bytes()))[..16].to_owned()
}

fn check_budget(g: &Multigraph, budget: &Budget, stage: &'static str) -> Result<(), AnalysisError> {
    if g.edge_count() > budget.max_edges {
        return Err(ssc_core::Error::BudgetExceeded {
            stage,
            limit: budget.max_edges,
            actual: g.edge_count(),
        }
        .into());
    }
    Ok(())
}

fn ids<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn run_analyze(g: &Multigraph, options: &Options) -> Result<AnalysisReport, AnalysisError> {
    let fp = fingerprint(g);
    let mut notices = Vec::new();
    let layout = match recognize_unicyclic(g) {
        Ok(layout) => Some(layout),
        Err(e @ ssc_core::Error::NotUnicyclic(_)) => {
            notices.push(format!("closed forms skipped: {e}"));
            None
        }
        Err(e) => return Err(e.into()),
    };
    if layout.is_none() && options.no_oracle {
        return Err(AnalysisError::NothingToRun);
    }
    if options.no_oracle {
        notices.push("oracles disabled; cross-checks skipped".into());
    }

    let lemma_facets = layout.as_ref().map(enumerate_spanning_trees_lemma);
    let f_formula = layout.as_ref().map(f_vector_formula);
    let formula_covers = layout.as_ref().map(minimal_vertex_covers_formula);

    struct Oracles {
        facets: Vec<Facet>,
        f_vector: FVector,
        covers: Vec<VertexCover>,
        faces: GradedFaces,
        betti: BettiProfile,
    }
    let oracles = if options.no_oracle {
        None
    } else {
        check_budget(g, &options.budget, "enumerate_spanning_trees_generic")?;
        let facets = enumerate_spanning_trees_generic(g);
        let f_vector = f_vector_oracle(g, options.budget.max_edges)?;
        let covers = minimal_vertex_covers_generic(&facets, options.budget.max_facets)?;
        let faces = graded_faces(g, options.budget.max_edges)?;
        let betti = betti_from_faces(&faces);
        Some(Oracles {
            facets,
            f_vector,
            covers,
            faces,
            betti,
        })
    };

    let mut discrepancies = Vec::new();
    let mut record = |check: &str, expected: Value, actual: Value| {
        discrepancies.push(Discrepancy {
            check: check.to_owned(),
            expected,
            actual,
            fingerprint: fp.clone(),
        })
    };

    let euler = EulerValues {
        formula: f_formula.as_ref().map(|f| euler_characteristic(f).to_string()),
        oracle: oracles
            .as_ref()
            .map(|o| euler_characteristic(&o.f_vector).to_string()),
        betti: oracles
            .as_ref()
            .map(|o| euler_from_betti(&o.betti).to_string()),
    };

    if let Some(o) = &oracles {
        if let (Some(layout), Some(lemma), Some(formula), Some(covers)) =
            (&layout, &lemma_facets, &f_formula, &formula_covers)
        {
            if *lemma != o.facets {
                record("spanning_trees", ids(&o.facets), ids(lemma));
            }
            if *formula != o.f_vector {
                record("f_vector", ids(&o.f_vector), ids(formula));
            }
            if *covers != o.covers {
                record("minimal_covers", ids(&o.covers), ids(covers));
            }
            let nonzero: Vec<(i64, String)> = tail_terms(layout)
                .into_iter()
                .filter(|(_, t)| !t.is_zero())
                .map(|(i, t)| (i, t.to_string()))
                .collect();
            if !nonzero.is_empty() {
                record("theorem_tail", json!([]), ids(&nonzero));
            }
        }
        let values: Vec<&String> = [&euler.formula, &euler.oracle, &euler.betti]
            .into_iter()
            .flatten()
            .collect();
        if values.windows(2).any(|w| w[0] != w[1]) {
            record("euler", ids(&euler.oracle), ids(&euler));
        }
        let matrices: Vec<BoundaryMatrix> = (1..=o.faces.dimension())
            .map(|i| boundary_matrix(&o.faces, i))
            .collect::<Result<_, _>>()?;
        let failing: Vec<usize> = matrices
            .windows(2)
            .filter(|w| !w[0].composes_to_zero(&w[1]))
            .map(|w| w[1].dim)
            .collect();
        if !failing.is_empty() {
            record("boundary_squared", json!([]), ids(&failing));
        }
    }

    let facets = lemma_facets
        .or_else(|| oracles.as_ref().map(|o| o.facets.clone()))
        .expect("one facet route always runs");
    let covers = formula_covers
        .or_else(|| oracles.as_ref().map(|o| o.covers.clone()))
        .expect("one cover route always runs");
    let dimension = match &layout {
        Some(layout) => ssc_core::dimension(layout),
        None => g.vertex_count() as i64 - 2,
    };
    let ideal = primary_decomposition(facet_ideal(&facets), &covers);
    let homology = oracles.as_ref().map(|o| {
        let sizes = o.faces.grade_sizes();
        HomologyReport {
            boundary_nullities: sizes
                .iter()
                .zip(&o.betti.boundary_ranks)
                .map(|(f, r)| f - r)
                .collect(),
            grade_sizes: sizes,
            betti: o.betti.ranks.clone(),
            boundary_ranks: o.betti.boundary_ranks.clone(),
        }
    });

    Ok(AnalysisReport {
        fingerprint: fp,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        layout: layout.as_ref().map(|l| LayoutReport {
            scalars: l.scalars(),
            labels: l
                .labels()
                .into_iter()
                .map(|(id, label)| LabelEntry { id, label })
                .collect(),
        }),
        dimension,
        facet_count: BigInt::from(facets.len()).to_string(),
        facets,
        f_vector_formula: f_formula,
        f_vector_oracle: oracles.as_ref().map(|o| o.f_vector.clone()),
        euler,
        homology,
        covers,
        ideal,
        notices,
        discrepancies,
    })
}

/// Runs every cross-check; an empty list means the closed forms agree with
/// the oracles on `g`.
pub fn run_verify(g: &Multigraph, budget: Budget) -> Result<Vec<Discrepancy>, AnalysisError> {
    let report = run_analyze(
        g,
        &Options {
            budget,
            no_oracle: false,
        },
    )?;
    Ok(report.discrepancies)
}

fn braces<S: AsRef<str>>(ids: &[S]) -> String {
    let inner: Vec<&str> = ids.iter().map(AsRef::as_ref).collect();
    format!("{{{}}}", inner.join(", "))
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report always serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "graph {} ({} vertices, {} edges)", self.fingerprint, self.vertex_count, self.edge_count);
        if let Some(l) = &self.layout {
            let s = &l.scalars;
            let _ = writeln!(
                w,
                "layout: n={} m={} r'={} r''={} r={} alpha={} beta={} v={}",
                s.n, s.m, s.r_cycle, s.r_outside, s.r, s.alpha, s.beta, s.v
            );
            let labels: Vec<String> = l.labels.iter().map(|e| format!("{}={}", e.id, e.label)).collect();
            let _ = writeln!(w, "labels: {}", labels.join(" "));
        }
        for notice in &self.notices {
            let _ = writeln!(w, "note: {notice}");
        }
        let _ = writeln!(w, "dimension: {}", self.dimension);
        let _ = writeln!(w, "spanning trees: {}", self.facet_count);
        for f in &self.facets {
            let _ = writeln!(w, "  {}", braces(f.edge_ids()));
        }
        if let Some(f) = &self.f_vector_formula {
            let _ = writeln!(w, "f-vector (formula): {f}");
        }
        if let Some(f) = &self.f_vector_oracle {
            let _ = writeln!(w, "f-vector (oracle):  {f}");
        }
        let show = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
        let _ = writeln!(
            w,
            "euler characteristic: formula {} / oracle {} / betti {}",
            show(&self.euler.formula),
            show(&self.euler.oracle),
            show(&self.euler.betti)
        );
        if let Some(h) = &self.homology {
            let _ = writeln!(w, "boundary ranks: {:?}", h.boundary_ranks);
            let _ = writeln!(w, "boundary nullities: {:?}", h.boundary_nullities);
            let _ = writeln!(w, "betti numbers: {:?}", h.betti);
        }
        let _ = writeln!(w, "minimal vertex covers: {}", self.covers.len());
        for c in &self.covers {
            let _ = writeln!(w, "  {}", braces(c.edge_ids()));
        }
        let _ = writeln!(w, "facet ideal: {}", self.ideal.render_generators());
        let _ = writeln!(w, "primary decomposition: {}", self.ideal.render_decomposition());
        if self.discrepancies.is_empty() {
            let _ = writeln!(w, "cross-checks: ok");
        } else {
            for d in &self.discrepancies {
                let _ = writeln!(w, "DISCREPANCY {}: expected {} got {}", d.check, d.expected, d.actual);
            }
        }
        out
    }
}
