//! Monochromatic book extraction from colourings with few red pages.
//!
//! [`extract`] runs a fixed sequence of steps on a concrete colouring of
//! `K_N` with a red page budget `m`. Either it exhibits a red book with more
//! than `m` pages, or it builds the partition
//! `S ⊇ S1 ∪ S2`, `W1 = S1 ∪ T1`, `W2 = S2 ∪ T2`, `X = V \ (W1 ∪ W2)`
//! and returns the best blue book it can certify from it. When a structural
//! condition fails on the instance (typical for small `N`), the outcome
//! names the failing step instead. Every threshold comparison is exact.

use serde::Serialize;
use serde_json::{json, Value};

use crate::chromatic::{chromatic_number, has_clique};
use crate::error::{domain, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::metrics::{book_size, find_induced_c4, largest_book};
use crate::rational::{int, ratio, Rational};
use crate::search::Coloring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Red,
    Blue,
}

/// A spine `uv` and the page vertices adjacent to both ends in `color`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookWitness {
    pub color: Color,
    pub spine: (usize, usize),
    pub pages: VertexSet,
}

impl BookWitness {
    pub fn page_count(&self) -> usize {
        self.pages.len()
    }

    /// Re-checks the witness against `c`.
    pub fn validate(&self, c: &Coloring) -> bool {
        let g = match self.color {
            Color::Red => c.red().clone(),
            Color::Blue => c.blue(),
        };
        let (u, v) = self.spine;
        u != v
            && g.has_edge(u, v)
            && !self.pages.contains(u)
            && !self.pages.contains(v)
            && self
                .pages
                .iter()
                .all(|p| g.has_edge(p, u) && g.has_edge(p, v))
    }

    fn to_json(&self) -> Value {
        json!({
            "color": self.color,
            "spine": [self.spine.0, self.spine.1],
            "pages": self.pages.to_vec(),
            "page_count": self.page_count(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Step {
    #[serde(rename = "bs_red_check")]
    BsRedCheck,
    #[serde(rename = "degree_set_S")]
    DegreeSetS,
    #[serde(rename = "S_size_check")]
    SSizeCheck,
    #[serde(rename = "triangle_free_check")]
    TriangleFreeCheck,
    #[serde(rename = "bipartition")]
    Bipartition,
    #[serde(rename = "partition_W1_W2_X")]
    PartitionW1W2X,
    #[serde(rename = "X_empty_branch")]
    XEmptyBranch,
    #[serde(rename = "averaging_branch")]
    AveragingBranch,
}

impl Step {
    pub fn name(self) -> &'static str {
        match self {
            Step::BsRedCheck => "bs_red_check",
            Step::DegreeSetS => "degree_set_S",
            Step::SSizeCheck => "S_size_check",
            Step::TriangleFreeCheck => "triangle_free_check",
            Step::Bipartition => "bipartition",
            Step::PartitionW1W2X => "partition_W1_W2_X",
            Step::XEmptyBranch => "X_empty_branch",
            Step::AveragingBranch => "averaging_branch",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepRecord {
    pub step: Step,
    pub status: Status,
    pub data: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ExtractionTrace(pub Vec<StepRecord>);

impl ExtractionTrace {
    fn push(&mut self, step: Step, status: Status, data: Value) {
        self.0.push(StepRecord { step, status, data });
    }

    pub fn steps(&self) -> &[StepRecord] {
        &self.0
    }

    pub fn get(&self, step: Step) -> Option<&StepRecord> {
        self.0.iter().find(|r| r.step == step)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExtractionResult {
    RedBook(BookWitness),
    BlueBook(BookWitness),
    HypothesisFailed(Step),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionOutcome {
    pub result: ExtractionResult,
    pub trace: ExtractionTrace,
}

impl ExtractionOutcome {
    pub fn witness(&self) -> Option<&BookWitness> {
        match &self.result {
            ExtractionResult::RedBook(w) | ExtractionResult::BlueBook(w) => Some(w),
            ExtractionResult::HypothesisFailed(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let result = match &self.result {
            ExtractionResult::RedBook(w) => json!({"kind": "red_book", "witness": w.to_json()}),
            ExtractionResult::BlueBook(w) => json!({"kind": "blue_book", "witness": w.to_json()}),
            ExtractionResult::HypothesisFailed(s) => {
                json!({"kind": "hypothesis_failed", "step": s})
            }
        };
        json!({"result": result, "trace": self.trace})
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Maps vertex indices of an induced subgraph back to the parent graph.
fn lift(set: &VertexSet, index: &[usize], order: usize) -> VertexSet {
    VertexSet::from_vertices(order, set.iter().map(|i| index[i])).expect("lifted index in range")
}

/// Pair `u < v` from `candidates` maximising `|B(u) ∩ B(v) ∩ within|`,
/// first in lexicographic order among ties.
fn best_spine(
    blue: &Graph,
    candidates: &VertexSet,
    within: &VertexSet,
) -> Option<((usize, usize), VertexSet)> {
    let verts = candidates.to_vec();
    let mut best: Option<((usize, usize), usize)> = None;
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !blue.has_edge(u, v) {
                continue;
            }
            let c = blue.common_neighbor_set(u, v).intersection_len(within);
            if best.is_none_or(|(_, b)| c > b) {
                best = Some(((u, v), c));
            }
        }
    }
    best.map(|((u, v), _)| ((u, v), blue.common_neighbor_set(u, v).intersection(within)))
}

/// Runs the extraction steps on `c` with red page budget `m`.
pub fn extract(c: &Coloring, m: usize) -> Result<ExtractionOutcome> {
    let n = c.order();
    if n < 5 {
        return domain(format!("extraction needs at least 5 vertices, got {n}"));
    }
    let red = c.red();
    let blue = c.blue();
    let mut trace = ExtractionTrace::default();
    let finish = |result, trace| Ok(ExtractionOutcome { result, trace });
    let n_big = n as i64;

    // 1. red book larger than m
    let bs_red = book_size(red);
    if bs_red.is_some_and(|b| b > m) {
        let ((u, v), pages) = largest_book(red).expect("red has edges");
        trace.push(
            Step::BsRedCheck,
            Status::Passed,
            json!({"bs_red": bs_red, "m": m, "exceeds_m": true}),
        );
        return finish(
            ExtractionResult::RedBook(BookWitness {
                color: Color::Red,
                spine: (u, v),
                pages,
            }),
            trace,
        );
    }
    trace.push(
        Step::BsRedCheck,
        Status::Passed,
        json!({"bs_red": bs_red, "m": m, "exceeds_m": false}),
    );

    // 2. S = {v : deg_R(v) > 9N/20}
    let s = VertexSet::from_vertices(n, (0..n).filter(|&v| 20 * red.degree(v) > 9 * n))?;
    trace.push(
        Step::DegreeSetS,
        Status::Passed,
        json!({"threshold": rat(&ratio(9 * n_big, 20)), "size": s.len(), "low_degree_vertices": n - s.len()}),
    );

    // 3. |S| > 19N/20
    let size_ok = 20 * s.len() > 19 * n;
    trace.push(
        Step::SSizeCheck,
        if size_ok {
            Status::Passed
        } else {
            Status::Failed
        },
        json!({"size": s.len(), "threshold": rat(&ratio(19 * n_big, 20))}),
    );
    if !size_ok {
        return finish(ExtractionResult::HypothesisFailed(Step::SSizeCheck), trace);
    }

    // 4. R[S] triangle-free
    let s_index = s.to_vec();
    let red_s = red.induced_subgraph(&s)?;
    if let Some((a, b, d)) = red_s.find_triangle() {
        let t = VertexSet::from_vertices(n, [s_index[a], s_index[b], s_index[d]])?;
        let u = t.complement();
        let e = red.edges_between(&t, &u)?;
        let lower = int(3) * (ratio(9 * n_big, 20) - int(2));
        let upper = n as i64 + 3 * (m as i64 - 1);
        trace.push(
            Step::TriangleFreeCheck,
            Status::Failed,
            json!({
                "triangle": t.to_vec(),
                "e_R(T,U)": e,
                "lower": rat(&lower),
                "upper": upper,
                "lower_holds": lower < int(e as i64),
                "upper_holds": (e as i64) <= upper,
            }),
        );
        return finish(
            ExtractionResult::HypothesisFailed(Step::TriangleFreeCheck),
            trace,
        );
    }
    trace.push(
        Step::TriangleFreeCheck,
        Status::Passed,
        json!({"size": s.len()}),
    );

    // 5. bipartition of R[S]
    let delta = red_s.min_degree().unwrap_or(0);
    let degree_data = json!({
        "min_degree": delta,
        "threshold": rat(&ratio(2 * s.len() as i64, 5)),
        "above_threshold": 5 * delta > 2 * s.len(),
    });
    let Some((side_a, side_b)) = red_s.is_bipartite() else {
        trace.push(Step::Bipartition, Status::Failed, degree_data);
        return finish(ExtractionResult::HypothesisFailed(Step::Bipartition), trace);
    };
    let s1 = lift(&side_a, &s_index, n);
    let s2 = lift(&side_b, &s_index, n);
    let mut data = degree_data;
    data["S1"] = json!(s1.len());
    data["S2"] = json!(s2.len());
    trace.push(Step::Bipartition, Status::Passed, data);

    // 6. T1, T2, W1, W2, X
    let blue_to_all = |v: usize, side: &VertexSet| {
        let mut rest = side.clone();
        rest.remove(v);
        rest.is_subset(&blue.neighbors(v))
    };
    let t1 = VertexSet::from_vertices(n, (0..n).filter(|&v| blue_to_all(v, &s1)))?;
    let t2 = VertexSet::from_vertices(
        n,
        (0..n).filter(|&v| !t1.contains(v) && blue_to_all(v, &s2)),
    )?;
    let w1 = s1.union(&t1);
    let w2 = s2.union(&t2);
    if !w1.is_disjoint(&w2) {
        return Err(Error::Invariant("W1 and W2 overlap".into()));
    }
    let x = w1.union(&w2).complement();
    trace.push(
        Step::PartitionW1W2X,
        Status::Passed,
        json!({
            "S1": s1.len(), "S2": s2.len(),
            "T1_outside_S1": t1.difference(&s1).len(),
            "T2_outside_S2": t2.difference(&s2).len(),
            "W1": w1.len(), "W2": w2.len(), "X": x.len(),
        }),
    );

    // 7. X empty: the larger W_i carries a blue book on a spine inside S_i
    if x.is_empty() {
        let mut order = [(1, &s1, &w1), (2, &s2, &w2)];
        if w2.len() > w1.len() {
            order.swap(0, 1);
        }
        for (i, si, wi) in order {
            if let Some(((u, v), pages)) = best_spine(&blue, si, wi) {
                trace.push(
                    Step::XEmptyBranch,
                    Status::Passed,
                    json!({
                        "side": i,
                        "W": wi.len(),
                        "half_order": rat(&ratio(n_big, 2)),
                        "guaranteed": wi.len() - 2,
                        "pages": pages.len(),
                    }),
                );
                trace.push(Step::AveragingBranch, Status::Skipped, json!({}));
                let w = BookWitness {
                    color: Color::Blue,
                    spine: (u, v),
                    pages,
                };
                return finish(ExtractionResult::BlueBook(w), trace);
            }
        }
        trace.push(
            Step::XEmptyBranch,
            Status::Failed,
            json!({"reason": "no blue spine inside S1 or S2"}),
        );
        return finish(
            ExtractionResult::HypothesisFailed(Step::XEmptyBranch),
            trace,
        );
    }
    trace.push(Step::XEmptyBranch, Status::Skipped, json!({"X": x.len()}));

    // 8. averaging over spines inside S1 and S2
    let all = VertexSet::full(n);
    let spine1 = best_spine(&blue, &s1, &all);
    let spine2 = best_spine(&blue, &s2, &all);
    let best = match (spine1, spine2) {
        (Some(a), Some(b)) => Some(
            if b.1.len() > a.1.len() || (b.1.len() == a.1.len() && b.0 < a.0) {
                b
            } else {
                a
            },
        ),
        (a, b) => a.or(b),
    };
    let x_len = x.len() as i64;
    let averaged = |si: &VertexSet, ti: &VertexSet| -> Result<Option<Rational>> {
        if si.len() < 2 {
            return Ok(None);
        }
        let e = red.edges_between(si, &x)? as i64;
        let wi = si.union(ti).len() as i64;
        Ok(Some(int(wi + x_len - 2) - ratio(2 * e, si.len() as i64)))
    };
    let bound1 = averaged(&s1, &t1)?;
    let bound2 = averaged(&s2, &t2)?;
    let e_sx = red.edges_between(&s, &x)? as i64;
    let red_side = ratio(e_sx, x_len) - ratio(s.len() as i64, 5);
    let two_bs_red = 2 * bs_red.unwrap_or(0) as i64;
    let mut data = json!({
        "X": x.len(),
        "e_R(S1,X)": red.edges_between(&s1, &x)?,
        "e_R(S2,X)": red.edges_between(&s2, &x)?,
        "blue_bound_1": bound1.as_ref().map(rat),
        "blue_bound_2": bound2.as_ref().map(rat),
        "red_bound": rat(&red_side),
        "two_bs_red": two_bs_red,
        "two_m": 2 * m,
        "red_bound_holds": int(two_bs_red) >= red_side,
    });
    let Some(((u, v), pages)) = best else {
        data["reason"] = json!("no blue spine inside S1 or S2");
        trace.push(Step::AveragingBranch, Status::Failed, data);
        return finish(
            ExtractionResult::HypothesisFailed(Step::AveragingBranch),
            trace,
        );
    };
    let pages_r = int(pages.len() as i64);
    for b in [&bound1, &bound2].into_iter().flatten() {
        if &pages_r < b {
            return Err(Error::Invariant(format!(
                "blue book with {} pages below averaged bound {b}",
                pages.len()
            )));
        }
    }
    data["pages"] = json!(pages.len());
    trace.push(Step::AveragingBranch, Status::Passed, data);
    finish(
        ExtractionResult::BlueBook(BookWitness {
            color: Color::Blue,
            spine: (u, v),
            pages,
        }),
        trace,
    )
}

/// An induced red 4-cycle whose vertices share at least `4m + 1` blue
/// neighbours, with the cycle edge carrying the most red pages.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeavyCycleRecord {
    /// Cycle vertices in cyclic order.
    pub cycle: [usize; 4],
    pub common_blue: Vec<usize>,
    pub heavy_edge: (usize, usize),
    pub heavy_edge_red_pages: usize,
    pub blue_bs: Option<usize>,
    /// `bs(B) <= N/2 − 2`, under which the heavy edge must carry `m + 1`
    /// red pages.
    pub blue_hypothesis: bool,
    pub heavy_edge_exceeds_m: bool,
}

/// Searches induced red 4-cycles for one with `4m + 1` common blue neighbours.
pub fn heavy_cycle_scan(c: &Coloring, m: usize) -> Option<HeavyCycleRecord> {
    let red = c.red();
    let blue = c.blue();
    let need = 4 * m + 1;
    let common = |q: [usize; 4]| {
        let mut s = blue.neighbors(q[0]);
        for &x in &q[1..] {
            s = s.intersection(&blue.neighbors(x));
        }
        s
    };
    let cycle = find_induced_c4(red, |u, v, w, z| common([u, v, w, z]).len() >= need)?;
    let [u, v, w, z] = cycle;
    let heavy = [(u, v), (v, w), (w, z), (z, u)]
        .into_iter()
        .map(|(a, b)| ((a, b), red.common_count(a, b)))
        .fold(
            None,
            |best: Option<((usize, usize), usize)>, e| match best {
                Some(b) if b.1 >= e.1 => Some(b),
                _ => Some(e),
            },
        )
        .expect("four edges");
    let blue_bs = book_size(&blue);
    Some(HeavyCycleRecord {
        cycle,
        common_blue: common(cycle).to_vec(),
        heavy_edge: heavy.0,
        heavy_edge_red_pages: heavy.1,
        blue_bs,
        blue_hypothesis: blue_bs.is_none_or(|b| 2 * b + 4 <= c.order()),
        heavy_edge_exceeds_m: heavy.1 > m,
    })
}

/// The three properties of the Andrásfai–Erdős–Sós theorem for `K_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AesTriple {
    pub r: usize,
    /// (i) `g` contains no `K_r`.
    pub no_clique: bool,
    /// (ii) `δ(g) > (3r − 7) n / (3r − 4)`.
    pub min_degree_above: bool,
    /// (iii) `χ(g) >= r`.
    pub chromatic_at_least_r: bool,
}

impl AesTriple {
    pub fn count_true(&self) -> usize {
        [
            self.no_clique,
            self.min_degree_above,
            self.chromatic_at_least_r,
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }
}

/// Largest order for which `aes_check` computes exact chromatic numbers.
pub const AES_ORDER_CAP: usize = 30;

/// Evaluates the three properties; an error if all three hold, since at
/// most two can.
pub fn aes_check(g: &Graph, r: usize) -> Result<AesTriple> {
    if r < 3 {
        return domain(format!("clique order must be at least 3, got {r}"));
    }
    if r > 3 && g.order() > AES_ORDER_CAP {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap: AES_ORDER_CAP,
        });
    }
    let n = g.order();
    let no_clique = if r == 3 {
        !g.has_triangle()
    } else {
        !has_clique(g, r)
    };
    let min_degree_above = g
        .min_degree()
        .is_some_and(|d| (3 * r - 4) * d > (3 * r - 7) * n);
    let chromatic_at_least_r = if r == 3 {
        g.is_bipartite().is_none()
    } else {
        chromatic_number(g) >= r
    };
    let t = AesTriple {
        r,
        no_clique,
        min_degree_above,
        chromatic_at_least_r,
    };
    if t.count_true() == 3 {
        return Err(Error::Invariant(format!(
            "all three AES properties hold for r = {r}"
        )));
    }
    Ok(t)
}
