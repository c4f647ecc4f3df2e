//! Brute-force reference implementations used as test oracles. They only
//! touch `Graph::order` and `Graph::has_edge`.

#![allow(dead_code)]

use bookram::Graph;
use rand::Rng;

pub fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

fn induced_degrees(g: &Graph, s: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = s
        .iter()
        .map(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count())
        .collect();
    d.sort_unstable();
    d
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub c4: u64,
    pub k4: u64,
    pub b2: u64,
    pub h: u64,
    pub pair_sum: u64,
    pub edge_sum: u64,
}

/// Classifies every 4-subset (and 5-subset for `h`) by its induced
/// degree sequence, and sums `C(c(u,v), 2)` pair by pair.
pub fn brute_counts(g: &Graph, with_h: bool) -> Counts {
    let n = g.order();
    let mut c = Counts::default();
    subsets(n, 4, &mut |s| match induced_degrees(g, s).as_slice() {
        [2, 2, 2, 2] => c.c4 += 1,
        [3, 3, 3, 3] => c.k4 += 1,
        [2, 2, 3, 3] => c.b2 += 1,
        _ => {}
    });
    if with_h {
        subsets(n, 5, &mut |s| {
            if induced_degrees(g, s) == [0, 2, 2, 2, 2] {
                c.h += 1;
            }
        });
    }
    for u in 0..n {
        for v in u + 1..n {
            let common = (0..n)
                .filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                .count() as u64;
            c.pair_sum += choose2(common);
            if g.has_edge(u, v) {
                c.edge_sum += choose2(common);
            }
        }
    }
    c
}

pub fn brute_book_size(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                let c = (0..n)
                    .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w))
                    .count();
                best = best.max(Some(c));
            }
        }
    }
    best
}

/// Whether some proper 2-colouring exists, by trying all of them.
pub fn brute_bipartite(g: &Graph) -> bool {
    let n = g.order();
    (0u64..1 << n).any(|mask| {
        (0..n).all(|u| {
            (u + 1..n).all(|v| !g.has_edge(u, v) || ((mask >> u) & 1) != ((mask >> v) & 1))
        })
    })
}

/// Literal enumeration of all colourings of `K_n`: true iff each has a red
/// `B_m` or a blue `B_k`.
pub fn brute_arrows(n: usize, m: usize, k: usize) -> bool {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).all(|mask| {
        let red = Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap();
        let blue = red.complement();
        brute_book_size(&red).is_some_and(|b| b >= m)
            || brute_book_size(&blue).is_some_and(|b| b >= k)
    })
}

/// Reference graph6 decoder for orders below 63, written from the format
/// description as a plain bit string.
pub fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = s.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<bool> = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |i| ((b - 63) >> i) & 1 == 1))
        .collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    (n, edges)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Graph with `n` vertices and edge set given by the bits of `mask`, in
/// lexicographic pair order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut i = 0;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (mask >> i) & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
