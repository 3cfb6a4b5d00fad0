//! Face counts of the spanning simplicial complex.
//!
//! Faces are the forests of the multigraph (edge subsets that extend to a
//! spanning tree). [`f_vector_oracle`] counts them by enumeration;
//! [`f_vector_formula`] evaluates the closed form for uni-cyclic layouts:
//!
//! ```text
//! f_i = C(n, i+1)
//!     - P * [ C(N, i+1-m)
//!             - sum_{j=2..beta} (C(beta, j) - S_out(j))
//!                 * sum_{l=j..beta} (-1)^(l-j) C(beta-j, l-j) C(N-l, i+1-m-l) ]
//!     - sum_{j=2..alpha+beta} (C(alpha+beta, j) - S_all(j))
//!         * sum_{l=j..alpha+beta} (-1)^(l-j) C(alpha+beta-j, l-j) C(n-l, i+1-l)
//! ```
//!
//! with `N = n - alpha + r' - m`, `P` the product of the multiple cycle class
//! sizes, and `S_out(j)` / `S_all(j)` the sum over `j`-sets of off-cycle /
//! all multiple classes of the product of their sizes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::dsu::RollbackDsu;
use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, ParallelClass, UnicyclicLayout};

/// `(f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<BigInt>,
}

impl FVector {
    pub fn new(counts: Vec<BigInt>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Top face dimension `d`, or `None` for an empty vector.
    pub fn dimension(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.counts.iter().map(BigInt::to_string).collect()
    }
}

impl<T: Into<BigInt>> FromIterator<T> for FVector {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self::new(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for FVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.counts.iter().map(BigInt::to_string))
    }
}

/// Counts forests of every cardinality by backtracking with union-find.
pub fn f_vector_oracle(g: &Multigraph, max_edges: usize) -> Result<FVector> {
    if g.edge_count() > max_edges {
        return Err(Error::BudgetExceeded {
            stage: "f_vector_oracle",
            limit: max_edges,
            actual: g.edge_count(),
        });
    }
    let mut counts = vec![0u64; g.vertex_count() - 1];
    forest_positions(g, |forest| counts[forest.len() - 1] += 1);
    Ok(counts.into_iter().collect())
}

/// Calls `visit` once for every non-empty forest, passing its edge
/// positions in increasing order.
pub(crate) fn forest_positions(g: &Multigraph, mut visit: impl FnMut(&[usize])) {
    fn extend(
        g: &Multigraph,
        from: usize,
        dsu: &mut RollbackDsu,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        for next in from..g.edge_count() {
            let [a, b] = g.edges()[next].ends;
            if dsu.union(a, b) {
                chosen.push(next);
                visit(chosen);
                extend(g, next + 1, dsu, chosen, visit);
                chosen.pop();
                dsu.rollback();
            }
        }
    }
    let mut dsu = RollbackDsu::new(g.vertex_count());
    extend(g, 0, &mut dsu, &mut Vec::new(), &mut visit);
}

/// `n - alpha - beta + r - 2`.
pub fn dimension(layout: &UnicyclicLayout) -> i64 {
    let s = layout.scalars();
    s.n as i64 - s.alpha as i64 - s.beta as i64 + s.r as i64 - 2
}

/// `C(a, b)`, taken to be zero whenever `b < 0`, `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    acc
}

/// Sum over all `j`-element sets of classes of the product of their sizes.
fn selection_sum(classes: &[&ParallelClass], j: usize) -> BigInt {
    // elem[k] = sum over k-sets among the classes seen so far.
    let mut elem = vec![BigInt::zero(); j + 1];
    elem[0] = BigInt::one();
    for c in classes {
        for k in (1..=j).rev() {
            let add = &elem[k - 1] * c.size();
            elem[k] += add;
        }
    }
    elem.swap_remove(j)
}

/// `sum_{l=j..top} (-1)^(l-j) C(top-j, l-j) C(base-l, k-l)`.
fn alternating_tail(top: i64, j: i64, base: i64, k: i64) -> BigInt {
    (j..=top).fold(BigInt::zero(), |acc, l| {
        let term = binomial(top - j, l - j) * binomial(base - l, k - l);
        if (l - j) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// The closed-form count of `i`-dimensional faces, for any `i >= 0`.
pub fn theorem_term(layout: &UnicyclicLayout, i: i64) -> BigInt {
    let s = layout.scalars();
    let (n, m, rc) = (s.n as i64, s.m as i64, s.r_cycle as i64);
    let (alpha, beta) = (s.alpha as i64, s.beta as i64);
    let k = i + 1;
    let rest = n - alpha + rc - m;

    let outside: Vec<&ParallelClass> = layout.outside_multiple_classes().iter().collect();
    let all: Vec<&ParallelClass> = layout
        .cycle_multiple_classes()
        .iter()
        .chain(layout.outside_multiple_classes())
        .collect();
    let cycle_product: BigInt = layout
        .cycle_multiple_classes()
        .iter()
        .map(|c| BigInt::from(c.size()))
        .product();

    let mut with_cycle = binomial(rest, k - m);
    for j in 2..=beta {
        let bad = binomial(beta, j) - selection_sum(&outside, j as usize);
        with_cycle -= bad * alternating_tail(beta, j, rest, k - m);
    }

    let mut doubled = BigInt::zero();
    let ab = alpha + beta;
    for j in 2..=ab {
        let bad = binomial(ab, j) - selection_sum(&all, j as usize);
        doubled += bad * alternating_tail(ab, j, n, k);
    }

    binomial(n, k) - cycle_product * with_cycle - doubled
}

/// Closed-form f-vector, `i = 0..=d`.
pub fn f_vector_formula(layout: &UnicyclicLayout) -> FVector {
    let d = dimension(layout);
    FVector::new((0..=d).map(|i| theorem_term(layout, i)).collect())
}

/// Closed-form terms past the top dimension, `i = d+1..=n-1`. All of them
/// vanish for a well-formed layout.
pub fn tail_terms(layout: &UnicyclicLayout) -> Vec<(i64, BigInt)> {
    let d = dimension(layout);
    let n = layout.scalars().n as i64;
    (d + 1..n).map(|i| (i, theorem_term(layout, i))).collect()
}

pub fn euler_characteristic(f: &FVector) -> BigInt {
    f.counts
        .iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (i, c)| if i % 2 == 0 { acc + c } else { acc - c })
}

/// True when every entry is non-negative and bounded by `C(n, i+1)`.
pub fn within_binomial_bounds(f: &FVector, n: usize) -> bool {
    f.counts
        .iter()
        .enumerate()
        .all(|(i, c)| !c.is_negative() && *c <= binomial(n as i64, i as i64 + 1))
}
