//! Writes the strongly regular witness graphs in `data/`.
//!
//! Usage: `cargo run -p bookram --example gen_srg_data -- [DIR]`

use std::fs;
use std::path::PathBuf;

use bookram::graph::named::{kneser2, rook};
use bookram::srg::verify_srg;
use bookram::{to_graph6, Graph};

/// Symplectic graph on the nonzero vectors of `GF(2)^{2d}`: `x ~ y` when
/// the standard alternating form of `x` and `y` is 1.
fn symplectic(d: u32) -> Graph {
    let n = (1usize << (2 * d)) - 1;
    let form = |x: usize, y: usize| {
        (0..d).fold(0, |acc, i| {
            let (a0, a1) = ((x >> (2 * i)) & 1, (x >> (2 * i + 1)) & 1);
            let (b0, b1) = ((y >> (2 * i)) & 1, (y >> (2 * i + 1)) & 1);
            acc ^ (a0 & b1) ^ (a1 & b0)
        })
    };
    Graph::from_fn(n, |u, v| form(u + 1, v + 1) == 1)
}

/// Parity of the `2d`-bit vectors' symplectic form, also the polarisation
/// of both quadratic forms below.
fn alternating(d: u32, x: usize, y: usize) -> usize {
    (0..d).fold(0, |acc, i| {
        acc ^ ((x >> (2 * i)) & (y >> (2 * i + 1)) & 1) ^ ((x >> (2 * i + 1)) & (y >> (2 * i)) & 1)
    })
}

/// Polar graph of a nondegenerate quadratic form on `GF(2)^{2d}`: the nonzero
/// singular vectors, adjacent when orthogonal. `elliptic` selects the minus
/// type form, which replaces the last hyperbolic pair by `a² + ab + b²`.
fn polar(d: u32, elliptic: bool) -> Graph {
    let q = |x: usize| {
        let mut v = (0..d).fold(0, |acc, i| acc ^ ((x >> (2 * i)) & (x >> (2 * i + 1)) & 1));
        if elliptic {
            v ^= ((x >> (2 * d - 2)) & 1) ^ ((x >> (2 * d - 1)) & 1);
        }
        v
    };
    let points: Vec<usize> = (1..1usize << (2 * d)).filter(|&x| q(x) == 0).collect();
    Graph::from_fn(points.len(), |u, v| {
        alternating(d, points[u], points[v]) == 0
    })
}

/// Multiplies polynomials over `GF(3)` given as coefficient vectors, low degree first.
fn mul3(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % 3;
        }
    }
    c
}

/// Delsarte graph of the `[11, 5]` ternary code dual to the Golay code: the
/// 243 codewords, adjacent at Hamming distance 9. The code is the cyclic
/// code generated by whichever sextic factor of `x^11 - 1` gives weights
/// {6, 9}.
fn golay_dual_graph() -> Graph {
    let digits = |mut x: usize, len: usize| -> Vec<u8> {
        (0..len)
            .map(|_| {
                let d = (x % 3) as u8;
                x /= 3;
                d
            })
            .collect()
    };
    // x^11 - 1 = x^11 + 2
    let target: Vec<u8> = (0..12)
        .map(|i| [2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1][i])
        .collect();
    let monic = |x: usize, deg: usize| {
        let mut p = digits(x, deg);
        p.push(1);
        p
    };
    let divides = |h: &[u8]| (0..3usize.pow(5)).any(|m| mul3(h, &monic(m, 5)) == target);
    for low in 0..3usize.pow(6) {
        let h = monic(low, 6);
        if !divides(&h) {
            continue;
        }
        let words: Vec<Vec<u8>> = (0..243).map(|m| mul3(&digits(m, 5), &h)).collect();
        let weights = words
            .iter()
            .skip(1)
            .map(|w| w.iter().filter(|&&c| c != 0).count());
        if weights.clone().all(|w| w == 6 || w == 9) {
            let dist = |a: &[u8], b: &[u8]| a.iter().zip(b).filter(|(x, y)| x != y).count();
            return Graph::from_fn(243, |u, v| dist(&words[u], &words[v]) == 9);
        }
    }
    panic!("no two-weight factor found")
}

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"));
    fs::create_dir_all(&dir).expect("create data directory");
    let graphs = [
        kneser2(6),
        rook(4),
        kneser2(7),
        symplectic(3).complement(),
        symplectic(4).complement(),
        polar(3, false).complement(),
        polar(4, true),
        polar(4, false).complement(),
        golay_dual_graph(),
    ];
    for g in graphs {
        let p = verify_srg(&g).expect("construction is strongly regular");
        let path = dir.join(format!("srg_{}_{}_{}_{}.g6", p.v, p.k, p.lambda, p.mu));
        fs::write(&path, to_graph6(&g) + "\n").expect("write graph6");
        println!("{} {p}", path.display());
    }
}
