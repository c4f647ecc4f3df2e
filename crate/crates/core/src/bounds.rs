//! Closed-form bounds on `r(B_m, B_n)` and their aggregation into a
//! best-known interval. All arithmetic is over integers.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::srg::LowerBoundCertificate;

/// Constant in the `n >= c·m` exactness threshold.
pub const NR_CONSTANT: u64 = 1_000_000;

fn check_pages(m: u64, n: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return domain(format!("page counts must be positive, got ({m}, {n})"));
    }
    Ok(())
}

/// `m + n + 2 + ⌊(2/3)·√(3(m² + mn + n²))⌋`.
///
/// The floor is the largest `k` with `9k² <= 12s`, i.e. `⌊isqrt(12s) / 3⌋`.
pub fn parsons_upper(m: u64, n: u64) -> Result<u64> {
    check_pages(m, n)?;
    let s = m as u128 * m as u128 + m as u128 * n as u128 + n as u128 * n as u128;
    let k = (12 * s).isqrt() / 3;
    Ok(m + n + 2 + k as u64)
}

/// `2(m + n + 1)` when `6(m + n + 1) > |n − m|³`.
pub fn small_gap_upper(m: u64, n: u64) -> Option<u64> {
    if m == 0 || n == 0 {
        return None;
    }
    let gap = m.abs_diff(n) as u128;
    (6 * (m + n + 1) as u128 > gap * gap * gap).then_some(2 * (m + n + 1))
}

/// `4m + 5` for the pair `(m, m + 2)` with `3 | m`, in either order.
pub fn mod3_upper(m: u64, n: u64) -> Option<u64> {
    let (a, b) = (m.min(n), m.max(n));
    (a >= 1 && a % 3 == 0 && b == a + 2).then_some(4 * a + 5)
}

/// Upper bound for `r(B_2, B_n)`, piecewise in `n`.
pub fn b2_upper(n: u64) -> Result<u64> {
    match n {
        0 | 1 => domain(format!("b2_upper needs n >= 2, got {n}")),
        2..=11 => Ok(2 * n + 6),
        12..=22 => Ok(2 * n + 5),
        23..=37 => Ok(2 * n + 4),
        _ => Ok(2 * n + 3),
    }
}

/// `(m − 1)(16m³ + 16m² − 24m − 10) + 1`: for `n` at or above it,
/// `r(B_m, B_n) = 2n + 3`.
pub fn frs_exact_threshold(m: u64) -> Result<u128> {
    if m < 2 {
        return domain(format!("threshold needs m >= 2, got {m}"));
    }
    let m = m as u128;
    Ok((m - 1) * (16 * m * m * m + 16 * m * m - 24 * m - 10) + 1)
}

/// `2n + 3` when one side is 1 and the other exceeds 1.
pub fn b1_exact(m: u64, n: u64) -> Option<u64> {
    match (m, n) {
        (1, n) if n > 1 => Some(2 * n + 3),
        (m, 1) if m > 1 => Some(2 * m + 3),
        _ => None,
    }
}

/// `2·max(m, n) + 3`, from a red `K_{t+1,t+1}` (or its colour swap) with
/// `t = max(m, n)`.
pub fn trivial_lower(m: u64, n: u64) -> Result<u64> {
    check_pages(m, n)?;
    Ok(2 * m.max(n) + 3)
}

/// Smallest `n` with `2n + 3 >= NR_CONSTANT · m`.
pub fn nr_exact_threshold(m: u64) -> Result<u64> {
    if m == 0 {
        return domain("threshold needs m >= 1");
    }
    Ok((NR_CONSTANT * m).saturating_sub(3).div_ceil(2))
}

/// Which end of the interval a rule bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProvenanceEntry {
    pub rule: String,
    pub side: Side,
    pub value: Option<u64>,
    pub applicable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundInterval {
    pub m: u64,
    pub n: u64,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub provenance: Vec<ProvenanceEntry>,
}

impl BoundInterval {
    pub fn upper_rules(&self) -> impl Iterator<Item = &ProvenanceEntry> {
        self.provenance
            .iter()
            .filter(|p| p.applicable && p.side != Side::Lower && p.value == Some(self.upper))
    }
}

pub mod rule {
    pub const TRIVIAL_LOWER: &str = "trivial_lower";
    pub const B1_EXACT: &str = "b1_exact";
    pub const PARSONS: &str = "parsons_upper";
    pub const SMALL_GAP: &str = "small_gap_upper";
    pub const MOD3: &str = "mod3_upper";
    pub const B2: &str = "b2_upper";
    pub const FRS: &str = "frs_threshold";
    pub const NR: &str = "NR threshold (c = 10^6)";
}

/// Whether a certificate for `r(B_a, B_b) >= L` also bounds `r(B_m, B_n)`:
/// a colouring with no red `B_a` and no blue `B_b` also avoids every larger
/// book, in either colour order.
fn certificate_applies(c: &LowerBoundCertificate, m: u64, n: u64) -> bool {
    (m >= c.m && n >= c.n) || (m >= c.n && n >= c.m)
}

/// Best interval for `r(B_m, B_n)` from every rule plus the supplied
/// certificates. Rules are evaluated on `(min, max)`, so the result does not
/// depend on argument order apart from the echoed `m` and `n`.
pub fn best_bounds(
    m: u64,
    n: u64,
    certificates: &[LowerBoundCertificate],
) -> Result<BoundInterval> {
    check_pages(m, n)?;
    let (s, t) = (m.min(n), m.max(n));
    let mut provenance = Vec::new();
    let mut lower = trivial_lower(s, t)?;
    let mut upper = u64::MAX;
    let mut push = |rule: String, side: Side, value: Option<u64>, applicable: bool| {
        provenance.push(ProvenanceEntry {
            rule,
            side,
            value,
            applicable,
        });
    };

    push(rule::TRIVIAL_LOWER.into(), Side::Lower, Some(lower), true);

    let t1 = b1_exact(s, t);
    if let Some(v) = t1 {
        lower = lower.max(v);
        upper = upper.min(v);
    }
    push(rule::B1_EXACT.into(), Side::Exact, t1, t1.is_some());

    let p = parsons_upper(s, t)?;
    upper = upper.min(p);
    push(rule::PARSONS.into(), Side::Upper, Some(p), true);

    let sg = small_gap_upper(s, t);
    if let Some(v) = sg {
        upper = upper.min(v);
    }
    push(rule::SMALL_GAP.into(), Side::Upper, sg, sg.is_some());

    let m3 = mod3_upper(s, t);
    if let Some(v) = m3 {
        upper = upper.min(v);
    }
    push(rule::MOD3.into(), Side::Upper, m3, m3.is_some());

    let b2 = if s == 2 { Some(b2_upper(t)?) } else { None };
    if let Some(v) = b2 {
        upper = upper.min(v);
    }
    push(rule::B2.into(), Side::Upper, b2, b2.is_some());

    let frs = match frs_exact_threshold(s) {
        Ok(th) if t as u128 >= th => Some(2 * t + 3),
        _ => None,
    };
    if let Some(v) = frs {
        upper = upper.min(v);
    }
    push(rule::FRS.into(), Side::Upper, frs, frs.is_some());

    let nr = (t >= nr_exact_threshold(s)?).then_some(2 * t + 3);
    if let Some(v) = nr {
        upper = upper.min(v);
    }
    push(rule::NR.into(), Side::Upper, nr, nr.is_some());

    let mut certs: Vec<&LowerBoundCertificate> = certificates.iter().collect();
    certs.sort_by(|a, b| (a.bound, a.m, a.n, &a.graph6).cmp(&(b.bound, b.m, b.n, &b.graph6)));
    for c in certs {
        let name = match c.srg_params {
            Some(p) => format!(
                "certificate r(B_{},B_{}) >= {} from SRG {p}",
                c.m, c.n, c.bound
            ),
            None => format!(
                "certificate r(B_{},B_{}) >= {} (order {})",
                c.m, c.n, c.bound, c.order
            ),
        };
        let applies = certificate_applies(c, s, t) && c.validate().is_ok();
        if applies {
            lower = lower.max(c.bound);
        }
        push(name, Side::Lower, Some(c.bound), applies);
    }

    Ok(BoundInterval {
        m,
        n,
        lower,
        upper,
        exact: lower == upper,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsons_examples() {
        assert_eq!(parsons_upper(2, 5).unwrap(), 16);
        assert_eq!(parsons_upper(7, 10).unwrap(), 36);
        for n in 1..=100 {
            assert_eq!(parsons_upper(n, n).unwrap(), 4 * n + 2);
        }
        assert!(parsons_upper(0, 3).is_err());
    }

    #[test]
    fn small_gap_examples() {
        assert_eq!(small_gap_upper(2, 5), Some(16));
        assert_eq!(small_gap_upper(1, 100), None);
        for n in 1..50 {
            assert_eq!(small_gap_upper(n, n), Some(4 * n + 2));
        }
    }

    #[test]
    fn mod3_examples() {
        assert_eq!(mod3_upper(3, 5), Some(17));
        assert_eq!(mod3_upper(5, 3), Some(17));
        assert_eq!(mod3_upper(69, 71), Some(281));
        assert_eq!(mod3_upper(4, 6), None);
        assert_eq!(mod3_upper(3, 6), None);
    }

    #[test]
    fn b2_branches() {
        assert_eq!(b2_upper(2).unwrap(), 10);
        assert_eq!(b2_upper(11).unwrap(), 28);
        assert_eq!(b2_upper(12).unwrap(), 29);
        assert_eq!(b2_upper(22).unwrap(), 49);
        assert_eq!(b2_upper(23).unwrap(), 50);
        assert_eq!(b2_upper(37).unwrap(), 78);
        assert_eq!(b2_upper(38).unwrap(), 79);
        assert!(b2_upper(1).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(frs_exact_threshold(2).unwrap(), 135);
        assert_eq!(frs_exact_threshold(3).unwrap(), 989);
        assert!(frs_exact_threshold(1).is_err());
        assert_eq!(nr_exact_threshold(1).unwrap(), 499_999);
        assert_eq!(nr_exact_threshold(2).unwrap(), 999_999);
        for m in 1..20 {
            let t = nr_exact_threshold(m).unwrap();
            assert!(2 * t + 3 >= NR_CONSTANT * m);
            assert!(2 * (t - 1) + 3 < NR_CONSTANT * m);
        }
    }

    #[test]
    fn b1_exact_and_trivial() {
        assert_eq!(b1_exact(1, 5), Some(13));
        assert_eq!(b1_exact(1, 1), None);
        assert_eq!(b1_exact(4, 1), Some(11));
        assert_eq!(b1_exact(2, 3), None);
        assert_eq!(trivial_lower(1, 7).unwrap(), 17);
        assert_eq!(trivial_lower(5, 5).unwrap(), 13);
        assert_eq!(trivial_lower(2, 38).unwrap(), 79);
    }

    #[test]
    fn one_one_interval() {
        let b = best_bounds(1, 1, &[]).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (5, 6, false));
    }

    #[test]
    fn b2_large_n_is_exact() {
        let b = best_bounds(2, 200, &[]).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (403, 403, true));
        let b = best_bounds(200, 2, &[]).unwrap();
        assert_eq!((b.lower, b.upper), (403, 403));
    }

    #[test]
    fn provenance_lists_every_rule() {
        let b = best_bounds(4, 9, &[]).unwrap();
        let names: Vec<&str> = b.provenance.iter().map(|p| p.rule.as_str()).collect();
        for r in [
            rule::TRIVIAL_LOWER,
            rule::B1_EXACT,
            rule::PARSONS,
            rule::SMALL_GAP,
            rule::MOD3,
            rule::B2,
            rule::FRS,
            rule::NR,
        ] {
            assert!(names.contains(&r), "{r} missing");
        }
    }
}
