//! Book size, small induced-subgraph counts and the four-cycle counting
//! lemma for graphs of bounded book size.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::rational::{self, int, Rational};

#[inline]
fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Largest page count over all edges, or `None` for an edgeless graph.
pub fn book_size(g: &Graph) -> Option<usize> {
    g.edges().map(|(u, v)| g.common_count(u, v)).max()
}

/// An edge realizing [`book_size`], lexicographically first among ties.
pub fn largest_book(g: &Graph) -> Option<((usize, usize), VertexSet)> {
    let mut best: Option<((usize, usize), usize)> = None;
    for (u, v) in g.edges() {
        let c = g.common_count(u, v);
        if best.is_none_or(|(_, b)| c > b) {
            best = Some(((u, v), c));
        }
    }
    best.map(|((u, v), _)| ((u, v), g.common_neighbor_set(u, v)))
}

/// Induced counts of `C4`, `K4`, the diamond `B2`, and `C4 ∪ K1`, together
/// with the two common-neighbour sums they are tied to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphCensus {
    pub c4: u64,
    pub k4: u64,
    pub b2: u64,
    pub h: u64,
    /// `Σ_{u<v} C(c(u,v), 2)` over all vertex pairs.
    pub pair_sum: u64,
    /// `Σ_{uv ∈ E} C(c(u,v), 2)`.
    pub edge_sum: u64,
}

impl SubgraphCensus {
    /// `pair_sum - 2 c4 - 6 k4 - 2 b2`.
    pub fn pair_residual(&self) -> i128 {
        self.pair_sum as i128 - 2 * self.c4 as i128 - 6 * self.k4 as i128 - 2 * self.b2 as i128
    }

    /// `edge_sum - 6 k4 - b2`.
    pub fn edge_residual(&self) -> i128 {
        self.edge_sum as i128 - 6 * self.k4 as i128 - self.b2 as i128
    }

    /// `2 c4 - (pair_sum - 2 edge_sum + 6 k4)`, i.e. twice the residual of
    /// `c4 = pair_sum/2 - edge_sum + 3 k4`, kept integral.
    pub fn c4_identity_residual(&self) -> i128 {
        2 * self.c4 as i128
            - (self.pair_sum as i128 - 2 * self.edge_sum as i128 + 6 * self.k4 as i128)
    }
}

/// Sums `f(u)` over all vertices, in parallel only for larger graphs.
fn sum_pairs(g: &Graph, f: impl Fn(usize) -> (u64, u64) + Sync + Send) -> (u64, u64) {
    let add = |a: (u64, u64), b: (u64, u64)| (a.0 + b.0, a.1 + b.1);
    if g.order() < PARALLEL_ORDER {
        (0..g.order()).map(f).fold((0, 0), add)
    } else {
        (0..g.order()).into_par_iter().map(f).reduce(|| (0, 0), add)
    }
}

const PARALLEL_ORDER: usize = 64;

fn pair_and_edge_sums(g: &Graph) -> (u64, u64) {
    sum_pairs(g, |u| {
        let mut pairs = 0;
        let mut edges = 0;
        for v in u + 1..g.order() {
            let c = choose2(g.common_count(u, v) as u64);
            pairs += c;
            if g.has_edge(u, v) {
                edges += c;
            }
        }
        (pairs, edges)
    })
}

/// Induced `K4`s and induced diamonds, counted directly.
fn clique_and_diamond_counts(g: &Graph) -> (u64, u64) {
    sum_pairs(g, |u| {
        let mut k4 = 0u64;
        let mut b2 = 0u64;
        for v in g.neighbors_above(u) {
            let common = g.common_neighbor_set(u, v);
            let c = common.len() as u64;
            let inner_edges: u64 = common
                .iter()
                .map(|w| g.degree_into(w, &common) as u64)
                .sum::<u64>()
                / 2;
            // a diamond's spine is the unique edge lying in both triangles
            b2 += choose2(c) - inner_edges;
            for w in common.iter().filter(|&w| w > v) {
                k4 += common.iter().filter(|&x| x > w && g.has_edge(w, x)).count() as u64;
            }
        }
        (k4, b2)
    })
}

/// Calls `f(u, v, w, z)` once per induced 4-cycle `u-v-w-z-u`, with `u` the
/// smallest vertex and `v < z`. Enumeration order is deterministic.
pub fn for_each_induced_c4(g: &Graph, mut f: impl FnMut(usize, usize, usize, usize)) {
    find_induced_c4(g, |u, v, w, z| {
        f(u, v, w, z);
        false
    });
}

/// First induced 4-cycle, in [`for_each_induced_c4`] order, accepted by `pred`.
pub fn find_induced_c4(
    g: &Graph,
    mut pred: impl FnMut(usize, usize, usize, usize) -> bool,
) -> Option<[usize; 4]> {
    let n = g.order();
    for u in 0..n {
        for w in u + 1..n {
            if g.has_edge(u, w) {
                continue;
            }
            let common: Vec<usize> = g
                .common_neighbor_set(u, w)
                .iter()
                .filter(|&x| x > u)
                .collect();
            for (i, &v) in common.iter().enumerate() {
                for &z in &common[i + 1..] {
                    if !g.has_edge(v, z) && pred(u, v, w, z) {
                        return Some([u, v, w, z]);
                    }
                }
            }
        }
    }
    None
}

/// Induced 4-cycles and induced `C4 ∪ K1`, the latter as the number of
/// vertices adjacent to none of each cycle's four vertices.
fn c4_and_h_counts(g: &Graph) -> (u64, u64) {
    let (mut c4, mut h) = (0u64, 0u64);
    let n = g.order();
    for_each_induced_c4(g, |u, v, w, z| {
        let covered: usize = (0..g.words())
            .map(|i| (g.row(u)[i] | g.row(v)[i] | g.row(w)[i] | g.row(z)[i]).count_ones() as usize)
            .sum();
        c4 += 1;
        h += (n - covered) as u64;
    });
    (c4, h)
}

/// Number of induced `C4 ∪ K1`.
pub fn count_h(g: &Graph) -> u64 {
    c4_and_h_counts(g).1
}

/// Full census. Every count is taken directly, so the identities tying
/// them to the two sums are checks rather than definitions.
pub fn census(g: &Graph) -> SubgraphCensus {
    let (pair_sum, edge_sum) = pair_and_edge_sums(g);
    let (k4, b2) = clique_and_diamond_counts(g);
    let (c4, h) = c4_and_h_counts(g);
    SubgraphCensus {
        c4,
        k4,
        b2,
        h,
        pair_sum,
        edge_sum,
    }
}

/// `C(⌊n/2⌋, 2) · C(⌈n/2⌉, 2)`, the maximum number of 4-cycles in a graph
/// of order `n`.
pub fn c4_max_bound(n: u64) -> u128 {
    let lo = n / 2;
    let hi = n - lo;
    choose2(lo) as u128 * choose2(hi) as u128
}

fn check_lambda(lambda: &Rational) -> Result<(), String> {
    if lambda <= &Rational::zero() || lambda >= &Rational::one() {
        Err(format!("lambda = {lambda} is not in (0, 1)"))
    } else {
        Ok(())
    }
}

/// `5(2λ + 1)/λ²`; the order must strictly exceed it.
pub fn four_cycle_threshold(lambda: &Rational) -> crate::Result<Rational> {
    check_lambda(lambda).map_err(crate::Error::Domain)?;
    Ok(int(5) * (int(2) * lambda + int(1)) / (lambda * lambda))
}

/// `(λ³ p² / 5 − m² / 2) · q`.
pub fn four_cycle_rhs(p: u64, q: u64, lambda: &Rational, m: u64) -> crate::Result<Rational> {
    check_lambda(lambda).map_err(crate::Error::Domain)?;
    let p = int(p);
    let m = int(m);
    Ok((lambda * lambda * lambda * &p * &p / int(5) - &m * &m / int(2)) * int(q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FourCycleHypothesis {
    LambdaRange,
    MinDegree,
    Order,
}

#[derive(Debug, Clone, Serialize)]
pub struct FourCycleReport {
    pub p: u64,
    pub q: u64,
    /// `bs(G)`, with an edgeless graph counted as 0.
    pub m: u64,
    pub min_degree: u64,
    pub c4: u64,
    pub pair_sum: u64,
    pub edge_sum: u64,
    /// `q · C(m, 2)`, which bounds `edge_sum` from above.
    pub edge_sum_bound: u64,
    /// `x/2 · (x / C(p,2) − 1)` with `x = q(λp − 1)`.
    #[serde(serialize_with = "rational::serialize")]
    pub pair_sum_convexity_bound: Rational,
    /// `2 λ³ p² q / 5`.
    #[serde(serialize_with = "rational::serialize")]
    pub pair_sum_cubic_bound: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub bound: Rational,
    /// `c4 > bound`.
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FourCycleVerdict {
    HypothesesUnmet {
        hypothesis: FourCycleHypothesis,
        detail: String,
    },
    Checked(Box<FourCycleReport>),
}

impl FourCycleVerdict {
    pub fn holds(&self) -> Option<bool> {
        match self {
            FourCycleVerdict::Checked(r) => Some(r.holds),
            FourCycleVerdict::HypothesesUnmet { .. } => None,
        }
    }
}

/// Checks the hypotheses of the four-cycle lemma on `g` and, when they hold,
/// compares the induced `C4` count with the lower bound at `m = bs(g)`.
pub fn four_cycle_check(g: &Graph, lambda: &Rational) -> FourCycleVerdict {
    if let Err(detail) = check_lambda(lambda) {
        return FourCycleVerdict::HypothesesUnmet {
            hypothesis: FourCycleHypothesis::LambdaRange,
            detail,
        };
    }
    let p = g.order() as u64;
    let min_degree = g.min_degree().unwrap_or(0) as u64;
    if int(min_degree) < lambda * int(p) {
        return FourCycleVerdict::HypothesesUnmet {
            hypothesis: FourCycleHypothesis::MinDegree,
            detail: format!("min degree {min_degree} < {lambda} * {p}"),
        };
    }
    let threshold = four_cycle_threshold(lambda).expect("lambda checked");
    if int(p) <= threshold {
        return FourCycleVerdict::HypothesesUnmet {
            hypothesis: FourCycleHypothesis::Order,
            detail: format!("order {p} does not exceed {threshold}"),
        };
    }
    let q = g.edge_count() as u64;
    let m = book_size(g).unwrap_or(0) as u64;
    let c = census(g);
    let bound = four_cycle_rhs(p, q, lambda, m).expect("lambda checked");
    let x = int(q) * (lambda * int(p) - int(1));
    let pairs = int(choose2(p));
    let pair_sum_convexity_bound = &x / int(2) * (&x / pairs - int(1));
    let pair_sum_cubic_bound = int(2) * lambda * lambda * lambda * int(p * p) * int(q) / int(5);
    FourCycleVerdict::Checked(Box::new(FourCycleReport {
        p,
        q,
        m,
        min_degree,
        c4: c.c4,
        pair_sum: c.pair_sum,
        edge_sum: c.edge_sum,
        edge_sum_bound: q * choose2(m),
        holds: int(c.c4) > bound,
        pair_sum_convexity_bound,
        pair_sum_cubic_bound,
        bound,
    }))
}
