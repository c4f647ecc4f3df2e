//! Exhaustive arrowing decisions and stochastic witness hunting for small
//! book Ramsey instances.
//!
//! `K_N → (B_m, B_n)` holds when every red/blue colouring of `K_N` has a red
//! book with `m` pages or a blue book with `n` pages. The exhaustive search
//! colours edges in lexicographic order `(0,1), (0,2), …, (N−2,N−1)` and
//! rejects a colour as soon as the decided edges of that colour contain a
//! target book. Vertex 0's edges are restricted to the pattern
//! `red…red blue…blue`, which loses nothing since vertices `1..N` can be
//! permuted freely.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::metrics::book_size;

/// Largest order the bitset kernels support.
pub const MAX_ORDER: usize = 64;
/// Largest order decided exhaustively without `force`.
pub const DEFAULT_CAP: usize = 10;
/// Default annealing budget in attempted flips.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A red/blue colouring of `E(K_N)`, stored as the red graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    red: Graph,
}

impl Coloring {
    pub fn new(red: Graph) -> Self {
        Coloring { red }
    }

    pub fn order(&self) -> usize {
        self.red.order()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> Graph {
        self.red.complement()
    }

    pub fn red_book_size(&self) -> Option<usize> {
        book_size(&self.red)
    }

    pub fn blue_book_size(&self) -> Option<usize> {
        book_size(&self.blue())
    }

    /// No red book with `m` pages and no blue book with `n` pages.
    pub fn avoids(&self, m: usize, n: usize) -> bool {
        self.red_book_size().is_none_or(|b| b < m) && self.blue_book_size().is_none_or(|b| b < n)
    }

    pub fn witness_file(&self, m: usize, n: usize) -> WitnessFile {
        WitnessFile {
            order: self.order(),
            m,
            n,
            red_graph6: to_graph6(&self.red),
        }
    }
}

/// Sidecar JSON written next to a witness colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct WitnessFile {
    #[serde(rename = "N")]
    pub order: usize,
    pub m: usize,
    pub n: usize,
    pub red_graph6: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Answer {
    Arrows,
    DoesNotArrow,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub order: usize,
    pub m: usize,
    pub n: usize,
    pub answer: Answer,
    pub witness: Option<Coloring>,
    /// Exact for single-threaded runs; summed across workers otherwise.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportJson {
    question: QuestionJson,
    answer: Answer,
    witness: Option<String>,
    nodes_explored: u64,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct QuestionJson {
    #[serde(rename = "N")]
    order: usize,
    m: usize,
    n: usize,
}

impl SearchReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            question: QuestionJson {
                order: self.order,
                m: self.m,
                n: self.n,
            },
            answer: self.answer,
            witness: self.witness.as_ref().map(|c| to_graph6(c.red())),
            nodes_explored: self.nodes_explored,
            elapsed_ms: self.elapsed.as_millis(),
        })
        .expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub cap: usize,
    pub force: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DEFAULT_CAP,
            force: false,
            threads: None,
        }
    }
}

#[inline]
fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// Whether adding edge `uv` to `adj` keeps every edge below `limit` pages.
#[inline]
fn can_add(adj: &[u64; MAX_ORDER], limit: u32, u: usize, v: usize) -> bool {
    let (ru, rv) = (adj[u], adj[v]);
    let common = ru & rv;
    if common.count_ones() >= limit {
        return false;
    }
    // v joins N(u) ∩ N(w) and u joins N(v) ∩ N(w) for each common w
    bits(common)
        .all(|w| (ru & adj[w]).count_ones() + 1 < limit && (rv & adj[w]).count_ones() + 1 < limit)
}

#[derive(Clone)]
struct DfsState {
    red: [u64; MAX_ORDER],
    blue: [u64; MAX_ORDER],
    next: usize,
}

struct Dfs<'a> {
    edges: &'a [(usize, usize)],
    red_limit: u32,
    blue_limit: u32,
    nodes: u64,
}

impl Dfs<'_> {
    fn allowed(&self, s: &DfsState, idx: usize, red: bool) -> bool {
        let (u, v) = self.edges[idx];
        if red {
            // vertex 0: once an edge is blue, all later ones are blue
            if u == 0 && v >= 2 && s.blue[0] >> (v - 1) & 1 == 1 {
                return false;
            }
            can_add(&s.red, self.red_limit, u, v)
        } else {
            can_add(&s.blue, self.blue_limit, u, v)
        }
    }

    fn set(s: &mut DfsState, u: usize, v: usize, red: bool, on: bool) {
        let adj = if red { &mut s.red } else { &mut s.blue };
        if on {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        } else {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
    }

    /// Depth-first completion of `s`; leaves `s` holding a good colouring on
    /// success.
    fn run(&mut self, s: &mut DfsState) -> bool {
        let idx = s.next;
        if idx == self.edges.len() {
            return true;
        }
        self.nodes += 1;
        let (u, v) = self.edges[idx];
        for red in [true, false] {
            if self.allowed(s, idx, red) {
                Self::set(s, u, v, red, true);
                s.next += 1;
                if self.run(s) {
                    return true;
                }
                s.next -= 1;
                Self::set(s, u, v, red, false);
            }
        }
        false
    }

    /// All states at depth `depth` (or completed earlier), in DFS order.
    fn frontier(&mut self, s: &mut DfsState, depth: usize, out: &mut Vec<DfsState>) {
        let idx = s.next;
        if idx == depth || idx == self.edges.len() {
            out.push(s.clone());
            return;
        }
        self.nodes += 1;
        let (u, v) = self.edges[idx];
        for red in [true, false] {
            if self.allowed(s, idx, red) {
                Self::set(s, u, v, red, true);
                s.next += 1;
                self.frontier(s, depth, out);
                s.next -= 1;
                Self::set(s, u, v, red, false);
            }
        }
    }
}

fn edge_order(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn check_question(order: usize, m: usize, n: usize) -> Result<()> {
    if order > MAX_ORDER {
        return domain(format!(
            "order {order} exceeds the supported maximum {MAX_ORDER}"
        ));
    }
    if m == 0 || n == 0 {
        return domain("page targets must be at least 1");
    }
    Ok(())
}

fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Decides `K_N → (B_m, B_n)` exhaustively.
pub fn arrows(order: usize, m: usize, n: usize, opts: &SearchOptions) -> Result<SearchReport> {
    if order < 2 {
        return domain(format!("order must be at least 2, got {order}"));
    }
    check_question(order, m, n)?;
    if order > opts.cap && !opts.force {
        return Err(Error::CapExceeded {
            order,
            cap: opts.cap,
        });
    }
    let start = Instant::now();
    let edges = edge_order(order);
    let mut dfs = Dfs {
        edges: &edges,
        red_limit: m as u32,
        blue_limit: n as u32,
        nodes: 0,
    };
    let mut root = DfsState {
        red: [0; MAX_ORDER],
        blue: [0; MAX_ORDER],
        next: 0,
    };

    let (found, nodes) = if edges.len() <= 21 {
        let found = dfs.run(&mut root).then_some(root);
        (found, dfs.nodes)
    } else {
        // split after vertex 0's edges and a few more
        let depth = (order - 1 + 6).min(edges.len());
        let mut frontier = Vec::new();
        dfs.frontier(&mut root, depth, &mut frontier);
        let counter = AtomicU64::new(dfs.nodes);
        let found = in_pool(opts.threads, || {
            frontier.into_par_iter().find_map_first(|mut s| {
                let mut worker = Dfs {
                    edges: &edges,
                    red_limit: m as u32,
                    blue_limit: n as u32,
                    nodes: 0,
                };
                let ok = worker.run(&mut s);
                counter.fetch_add(worker.nodes, Ordering::Relaxed);
                ok.then_some(s)
            })
        });
        (found, counter.load(Ordering::Relaxed))
    };

    let witness = match found {
        Some(s) => {
            let red = Graph::from_u64_rows(&s.red[..order]);
            let c = Coloring::new(red);
            if !c.avoids(m, n) {
                return Err(Error::Invariant(format!(
                    "search produced an invalid witness for K_{order} -/-> (B_{m}, B_{n})"
                )));
            }
            Some(c)
        }
        None => None,
    };
    Ok(SearchReport {
        order,
        m,
        n,
        answer: if witness.is_some() {
            Answer::DoesNotArrow
        } else {
            Answer::Arrows
        },
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Annealing state over a 64-bit red adjacency.
struct Anneal {
    order: usize,
    mask: u64,
    red: [u64; MAX_ORDER],
    red_free: u32,
    blue_free: u32,
}

impl Anneal {
    #[inline]
    fn blue_row(&self, u: usize) -> u64 {
        !self.red[u] & self.mask & !(1 << u)
    }

    #[inline]
    fn edge_cost(&self, a: usize, b: usize) -> i64 {
        if self.red[a] >> b & 1 == 1 {
            ((self.red[a] & self.red[b]).count_ones() as i64 - self.red_free as i64).max(0)
        } else {
            ((self.blue_row(a) & self.blue_row(b)).count_ones() as i64 - self.blue_free as i64)
                .max(0)
        }
    }

    /// Cost of every edge whose page count depends on the colour of `uv`.
    fn local_cost(&self, u: usize, v: usize) -> i64 {
        let mut c = self.edge_cost(u, v);
        for w in 0..self.order {
            if w != u && w != v {
                c += self.edge_cost(u, w) + self.edge_cost(v, w);
            }
        }
        c
    }

    fn total_cost(&self) -> i64 {
        let mut c = 0;
        for a in 0..self.order {
            for b in a + 1..self.order {
                c += self.edge_cost(a, b);
            }
        }
        c
    }

    fn flip(&mut self, u: usize, v: usize) {
        self.red[u] ^= 1 << v;
        self.red[v] ^= 1 << u;
    }

    fn randomize(&mut self, rng: &mut ChaCha8Rng) {
        self.red = [0; MAX_ORDER];
        for a in 0..self.order {
            for b in a + 1..self.order {
                if rng.gen_bool(0.5) {
                    self.flip(a, b);
                }
            }
        }
    }
}

/// Seeded simulated annealing for a colouring of `K_N` with no red `B_m` and
/// no blue `B_n`. The cost of a colouring is the total excess of pages over
/// `m − 1` (red edges) and `n − 1` (blue edges). Deterministic in
/// `(order, m, n, budget, seed)`.
pub fn find_witness(
    order: usize,
    m: usize,
    n: usize,
    budget: u64,
    seed: u64,
) -> Result<Option<Coloring>> {
    check_question(order, m, n)?;
    if order < 2 {
        return Ok(Some(Coloring::new(Graph::empty(order))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = edge_order(order);
    let mask = if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    };
    let mut st = Anneal {
        order,
        mask,
        red: [0; MAX_ORDER],
        red_free: m as u32 - 1,
        blue_free: n as u32 - 1,
    };
    st.randomize(&mut rng);
    let mut cost = st.total_cost();

    let patience = (budget / 10).max(1000);
    let (t_start, t_end) = (2.0f64, 0.05f64);
    let alpha = (t_end / t_start).powf(1.0 / patience as f64);
    let mut temp = t_start;
    let mut epoch_best = cost;
    let mut since_improvement = 0u64;

    for _ in 0..budget {
        if cost == 0 {
            break;
        }
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let before = st.local_cost(u, v);
        st.flip(u, v);
        let delta = st.local_cost(u, v) - before;
        if delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp() {
            cost += delta;
        } else {
            st.flip(u, v);
        }
        temp = (temp * alpha).max(t_end);
        if cost < epoch_best {
            epoch_best = cost;
            since_improvement = 0;
        } else {
            since_improvement += 1;
            if since_improvement >= patience {
                st.randomize(&mut rng);
                cost = st.total_cost();
                epoch_best = cost;
                since_improvement = 0;
                temp = t_start;
            }
        }
    }
    if cost != 0 {
        return Ok(None);
    }
    let c = Coloring::new(Graph::from_u64_rows(&st.red[..order]));
    if !c.avoids(m, n) {
        return Err(Error::Invariant(
            "annealing reported a zero-cost colouring that fails".into(),
        ));
    }
    Ok(Some(c))
}

#[derive(Debug, Clone)]
pub struct RamseyValue {
    /// Smallest arrowing order found, if within the cap.
    pub value: Option<usize>,
    /// One report per order tried, ascending.
    pub reports: Vec<SearchReport>,
}

impl RamseyValue {
    /// Witness colouring at `value − 1`.
    pub fn witness(&self) -> Option<&Coloring> {
        let v = self.value?;
        self.reports
            .iter()
            .find(|r| r.order == v - 1)?
            .witness
            .as_ref()
    }
}

/// Smallest `N <= max_order` with `K_N → (B_m, B_n)`, scanning upward from 2.
pub fn ramsey_number(
    m: usize,
    n: usize,
    max_order: usize,
    opts: &SearchOptions,
) -> Result<RamseyValue> {
    let mut reports = Vec::new();
    for order in 2..=max_order {
        let report = arrows(order, m, n, opts)?;
        let done = report.answer == Answer::Arrows;
        reports.push(report);
        if done {
            return Ok(RamseyValue {
                value: Some(order),
                reports,
            });
        }
    }
    Ok(RamseyValue {
        value: None,
        reports,
    })
}
