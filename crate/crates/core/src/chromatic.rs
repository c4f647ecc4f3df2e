//! Clique and chromatic number for small graphs.

use crate::graph::{Graph, VertexSet};

fn extend_clique(g: &Graph, candidates: &VertexSet, size: usize, best: &mut usize, target: usize) {
    if size > *best {
        *best = size;
    }
    if *best >= target || size + candidates.len() <= *best {
        return;
    }
    let mut rest = candidates.clone();
    for v in candidates.iter() {
        if size + rest.len() <= *best {
            return;
        }
        rest.remove(v);
        let next = rest.intersection(&g.neighbors(v));
        extend_clique(g, &next, size + 1, best, target);
        if *best >= target {
            return;
        }
    }
}

/// Clique number `ω(g)`.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    extend_clique(g, &VertexSet::full(g.order()), 0, &mut best, usize::MAX);
    best
}

/// Whether `g` contains `K_r`. Stops as soon as one is found.
pub fn has_clique(g: &Graph, r: usize) -> bool {
    if r == 0 {
        return true;
    }
    let mut best = 0;
    extend_clique(g, &VertexSet::full(g.order()), 0, &mut best, r);
    best >= r
}

/// DSATUR greedy colouring; returns the number of colours used.
fn dsatur(g: &Graph) -> usize {
    let n = g.order();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = g.neighbors(v).iter().filter_map(|u| color[u]).collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), g.degree(v), usize::MAX - v)
            })
            .unwrap();
        let mut c = 0;
        while g.neighbors(v).iter().any(|u| color[u] == Some(c)) {
            c += 1;
        }
        color[v] = Some(c);
        used = used.max(c + 1);
    }
    used
}

fn colorable(
    g: &Graph,
    order: &[usize],
    k: usize,
    idx: usize,
    color: &mut [usize],
    max_used: usize,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    // colours above max_used are interchangeable, so only try one of them
    for c in 0..k.min(max_used + 1) {
        if g.neighbors(v).iter().all(|u| color[u] != c) {
            color[v] = c;
            if colorable(g, order, k, idx + 1, color, max_used.max(c + 1)) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}

/// Whether `g` admits a proper colouring with `k` colours.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if g.order() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; g.order()];
    colorable(g, &order, k, 0, &mut color, 0)
}

/// Exact chromatic number by branch and bound: clique lower bound, DSATUR
/// upper bound, then decreasing colourability tests in between.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let lo = clique_number(g).max(1);
    let mut hi = dsatur(g);
    while hi > lo && is_k_colorable(g, hi - 1) {
        hi -= 1;
    }
    hi
}
