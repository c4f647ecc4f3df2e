//! Paley graphs, strongly regular parameter checks, and book-Ramsey lower
//! bound certificates.
//!
//! A graph on `N` vertices whose own book size is below `m` and whose
//! complement's book size is below `n` is a red/blue colouring of `K_N`
//! avoiding both targets, so `r(B_m, B_n) >= N + 1`. For a
//! `(v, k, λ, μ)` strongly regular graph the two book sizes are `λ` and
//! `v − 2k + μ − 2`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::field::{prime_power, FiniteField};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::metrics::book_size;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// Validates range constraints and `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        if k >= v {
            return domain(format!("degree {k} must be below order {v}"));
        }
        if k >= 1 && lambda > k - 1 {
            return domain(format!("lambda {lambda} exceeds k - 1"));
        }
        if mu > k {
            return domain(format!("mu {mu} exceeds k"));
        }
        let p = SrgParams { v, k, lambda, mu };
        if !p.is_feasible() {
            return domain(format!(
                "({v},{k},{lambda},{mu}) fails k(k-lambda-1) = (v-k-1)mu"
            ));
        }
        Ok(p)
    }

    pub fn is_feasible(&self) -> bool {
        let (v, k, l, mu) = (
            self.v as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        );
        k * (k - l - 1) == (v - k - 1) * mu
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let SrgParams { v, k, lambda, mu } = *self;
        let clamp = |x: i128| x.max(0) as u64;
        let (vi, ki) = (v as i128, k as i128);
        SrgParams {
            v,
            k: v - k - 1,
            lambda: clamp(vi + mu as i128 - 2 * ki - 2),
            mu: clamp(vi + lambda as i128 - 2 * ki),
        }
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Paley graph on `GF(q)`, `q ≡ 1 (mod 4)` a prime power.
pub fn paley(q: u64) -> Result<Graph> {
    if prime_power(q).is_none() {
        return domain(format!("{q} is not a prime power"));
    }
    if q % 4 != 1 {
        return domain(format!("{q} is not 1 mod 4"));
    }
    let field = FiniteField::new(q)?;
    let squares = field.nonzero_squares();
    if !squares[field.neg(1) as usize] {
        return Err(Error::Invariant(format!("-1 is not a square in GF({q})")));
    }
    let n = q as usize;
    Ok(Graph::from_fn(n, |x, y| {
        squares[field.sub(x as u64, y as u64) as usize]
    }))
}

/// Returns the parameters when `g` is strongly regular.
pub fn verify_srg(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let k = g.degree(0);
    if (1..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_count(u, v);
            let slot = if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                Some(_) => {}
            }
        }
    }
    // complete and edgeless graphs leave one of the two undetermined
    let p = SrgParams {
        v: n as u64,
        k: k as u64,
        lambda: lambda.unwrap_or(0) as u64,
        mu: mu.unwrap_or(0) as u64,
    };
    assert!(
        p.is_feasible(),
        "verified parameters {p} violate the feasibility identity"
    );
    Some(p)
}

/// `(m, n, bound)` with `m = λ + 1`, `n = v − 2k + μ − 1`, `bound = v + 1`.
pub fn srg_book_bound(p: &SrgParams) -> Result<(u64, u64, u64)> {
    let n = (p.v + p.mu) as i128 - 2 * p.k as i128 - 1;
    if n < 1 {
        return domain(format!("{p} gives blue page target {n} < 1"));
    }
    Ok((p.lambda + 1, n as u64, p.v + 1))
}

/// A colouring of `K_{order}` (red = witness, blue = complement) showing
/// `r(B_m, B_n) >= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundCertificate {
    pub m: u64,
    pub n: u64,
    pub bound: u64,
    pub order: u64,
    /// `bs(witness)`; `null` when the witness has no edges.
    pub red_bs: Option<u64>,
    /// `bs(complement)`; `null` when the complement has no edges.
    pub blue_bs: Option<u64>,
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub srg_params: Option<SrgParams>,
}

impl LowerBoundCertificate {
    /// One side has no edges at all, so its page count was taken as 0.
    pub fn is_degenerate(&self) -> bool {
        self.red_bs.is_none() || self.blue_bs.is_none()
    }

    /// Recomputes both book sizes from the stored graph6 and checks the
    /// stated targets and bound.
    pub fn validate(&self) -> Result<()> {
        let g = crate::graph6::from_graph6(&self.graph6)?;
        let red = book_size(&g).map(|x| x as u64);
        let blue = book_size(&g.complement()).map(|x| x as u64);
        let below = |bs: Option<u64>, target: u64| bs.is_none_or(|b| b < target);
        if g.order() as u64 != self.order
            || self.bound != self.order + 1
            || red != self.red_bs
            || blue != self.blue_bs
            || !below(red, self.m)
            || !below(blue, self.n)
        {
            return Err(Error::Invariant(format!(
                "certificate for r(B_{}, B_{}) >= {} does not match its witness",
                self.m, self.n, self.bound
            )));
        }
        Ok(())
    }
}

/// Certificate `r(B_{bs(g)+1}, B_{bs(ḡ)+1}) >= |g| + 1`.
pub fn certify(g: &Graph) -> LowerBoundCertificate {
    let red_bs = book_size(g).map(|x| x as u64);
    let blue_bs = book_size(&g.complement()).map(|x| x as u64);
    let srg_params = verify_srg(g);
    if let Some(p) = srg_params {
        let blue_expected = (p.v + p.mu) as i128 - 2 * p.k as i128 - 2;
        if p.k > 0 {
            assert_eq!(red_bs, Some(p.lambda), "SRG book size must equal lambda");
        }
        if let Some(b) = blue_bs {
            assert_eq!(
                b as i128, blue_expected,
                "SRG complement book size mismatch"
            );
        }
    }
    let cert = LowerBoundCertificate {
        m: red_bs.unwrap_or(0) + 1,
        n: blue_bs.unwrap_or(0) + 1,
        bound: g.order() as u64 + 1,
        order: g.order() as u64,
        red_bs,
        blue_bs,
        graph6: to_graph6(g),
        srg_params,
    };
    cert.validate().expect("emitted certificate re-validates");
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn params_validation() {
        assert!(SrgParams::new(5, 2, 0, 1).is_ok());
        assert!(SrgParams::new(15, 6, 1, 3).is_ok());
        assert!(SrgParams::new(15, 6, 1, 2).is_err());
        assert!(SrgParams::new(5, 5, 0, 1).is_err());
        assert!(SrgParams::new(10, 3, 3, 1).is_err());
        let p = SrgParams::new(15, 6, 1, 3).unwrap();
        assert_eq!(
            p.complement(),
            SrgParams {
                v: 15,
                k: 8,
                lambda: 4,
                mu: 4
            }
        );
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn small_paley_graphs() {
        let p5 = paley(5).unwrap();
        assert_eq!(
            verify_srg(&p5),
            Some(SrgParams {
                v: 5,
                k: 2,
                lambda: 0,
                mu: 1
            })
        );
        assert!(p5.degrees().iter().all(|&d| d == 2) && !p5.has_triangle());
        let p9 = paley(9).unwrap();
        assert_eq!(
            verify_srg(&p9),
            Some(SrgParams {
                v: 9,
                k: 4,
                lambda: 1,
                mu: 2
            })
        );
        assert_eq!(
            p9.common_neighbors(0, p9.neighbors(0).iter().next().unwrap())
                .unwrap(),
            1
        );
        assert!(paley(4).is_err());
        assert!(paley(15).is_err());
        assert!(paley(7).is_err());
    }

    #[test]
    fn verify_named() {
        assert_eq!(
            verify_srg(&cycle(5)),
            Some(SrgParams {
                v: 5,
                k: 2,
                lambda: 0,
                mu: 1
            })
        );
        assert_eq!(verify_srg(&path(3)), None);
        assert_eq!(
            verify_srg(&rook(4)),
            Some(SrgParams {
                v: 16,
                k: 6,
                lambda: 2,
                mu: 2
            })
        );
        assert_eq!(
            verify_srg(&kneser2(6)),
            Some(SrgParams {
                v: 15,
                k: 6,
                lambda: 1,
                mu: 3
            })
        );
        assert_eq!(
            verify_srg(&petersen()),
            Some(SrgParams {
                v: 10,
                k: 3,
                lambda: 0,
                mu: 1
            })
        );
        assert_eq!(verify_srg(&Graph::empty(1)), None);
    }

    #[test]
    fn book_bounds_from_params() {
        let p = SrgParams::new(15, 6, 1, 3).unwrap();
        assert_eq!(srg_book_bound(&p).unwrap(), (2, 5, 16));
        let p = SrgParams::new(9, 4, 1, 2).unwrap();
        assert_eq!(srg_book_bound(&p).unwrap(), (2, 2, 10));
        let p = SrgParams::new(243, 110, 37, 60).unwrap();
        assert_eq!(srg_book_bound(&p).unwrap(), (38, 82, 244));
        // K_{3,3}: v - 2k + mu - 1 = 6 - 6 + 3 - 1
        let p = SrgParams::new(6, 3, 0, 3).unwrap();
        assert_eq!(srg_book_bound(&p).unwrap(), (1, 2, 7));
        // complete graph: blue side is empty
        let p = SrgParams {
            v: 4,
            k: 3,
            lambda: 2,
            mu: 0,
        };
        assert!(srg_book_bound(&p).is_err());
    }

    #[test]
    fn certificates() {
        let c = certify(&paley(9).unwrap());
        assert_eq!((c.m, c.n, c.bound), (2, 2, 10));
        assert!(!c.is_degenerate());

        for n in 1..6 {
            let c = certify(&complete_bipartite(n + 1, n + 1));
            assert_eq!((c.m, c.n, c.bound), (1, n as u64, 2 * n as u64 + 3));
            c.validate().unwrap();
        }

        let c = certify(&Graph::empty(1));
        assert!(c.is_degenerate());
        assert_eq!(
            (c.m, c.n, c.bound, c.red_bs, c.blue_bs),
            (1, 1, 2, None, None)
        );
    }

    #[test]
    fn tampered_certificate_fails_validation() {
        let mut c = certify(&cycle(5));
        c.m = 0;
        assert!(c.validate().is_err());
        let mut c = certify(&cycle(5));
        c.bound = 7;
        assert!(c.validate().is_err());
    }
}
