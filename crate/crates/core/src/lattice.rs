//! Construction A4: the unimodular lattice of a self-dual Z4 code,
//! its minimum norm and kissing number.
//!
//! The lattice is `(1/2) { x in Z^n : x mod 4 in C }`, so a vector of
//! norm `m` is an integer vector with `sum x_i^2 = 4m` reducing to a
//! codeword. A coordinate holding digit 0
//! lifts minimally to 0 (next option ±4, adding 16), digits 1 and 3 lift
//! minimally to ±1 (next option adds 8), and digit 2 lifts to +2 or -2,
//! two choices of the same square. Hence for `4m <= 16` the number of
//! norm-`m` vectors is
//!
//! ```text
//!   sum_{wtE(c) = 4m}      2^{n2(c)}
//! + sum_{wtE(c) = 4m - 8}  (n1+n3)(c) * 2^{n2(c)}          (one unit bumped)
//! + sum_{wtE(c) = 4m - 16} [ C(n1+n3, 2) + 2(n - wt(c)) ] * 2^{n2(c)}
//!                                   (two units bumped, or one zero to ±4)
//! ```
//!
//! The closed form is validated against [`brute_force_kissing`] in the test
//! suite before being trusted.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::analyze::{is_type_ii, WeightReport};
use crate::codes::{codewords, is_self_dual};
use crate::z4::Z4Matrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Minimum norm and kissing number of `A4(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeReport {
    pub n: usize,
    /// `min(4, d_E/4)`.
    pub min_norm: u64,
    /// Number of lattice vectors of minimum norm.
    pub kissing: u64,
    /// Even iff the code is Type II.
    pub parity: Parity,
}

/// Number of lattice vectors of norm `m` (valid for `1 <= m <= 4`),
/// computed from the SWE terms of an uncapped report.
pub fn norm_vector_count(report: &WeightReport, m: u64) -> u64 {
    assert!((1..=4).contains(&m), "closed form only valid for norms 1..4");
    let n = report.n as u64;
    let target = 4 * m;
    let mut count: u64 = 0;
    for (&(_, j, k), &c) in &report.swe {
        let we = j + 4 * k;
        let lifts = 1u64 << k;
        if we == target {
            count += c * lifts;
        }
        if target >= 8 && we == target - 8 {
            count += c * j * lifts;
        }
        if target >= 16 && we == target - 16 {
            count += c * (j * j.saturating_sub(1) / 2 + 2 * (n - j - k)) * lifts;
        }
    }
    count
}

/// Minimum norm and kissing number of the Construction A4 lattice of a
/// self-dual code, from its uncapped weight report.
pub fn lattice_report(g: &Z4Matrix, report: &WeightReport) -> Result<LatticeReport> {
    if !is_self_dual(g)? {
        return Err(Error::NotSelfOrthogonal);
    }
    if !report.d_e.is_multiple_of(4) {
        return Err(Error::FractionalNorm { d_e: report.d_e });
    }
    let min_norm = (report.d_e / 4).min(4);
    if let Some(cap) = report.capped_at {
        if cap < 4 * min_norm {
            return Err(Error::CappedBelow { cap, needed: 4 * min_norm });
        }
    }
    let kissing = norm_vector_count(report, min_norm);
    let parity = if is_type_ii(report) { Parity::Even } else { Parity::Odd };
    Ok(LatticeReport { n: report.n, min_norm, kissing, parity })
}

const BRUTE_FORCE_MAX_N: usize = 12;

/// Count integer vectors `x` with `|x_i| <= radius`, `x mod 4 in C`, and
/// `sum x_i^2 = 4 * norm` by direct enumeration. Oracle for the closed-form
/// lift count; refuses `n > 12` and radii too small to be exhaustive.
pub fn brute_force_kissing(g: &Z4Matrix, norm: u64, radius: i64) -> Result<u64> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::LengthAboveEquivalenceBound { n, max: BRUTE_FORCE_MAX_N });
    }
    if radius < 0 || ((radius + 1) * (radius + 1)) as u64 <= 4 * norm {
        return Err(Error::RadiusTooSmall { radius, norm });
    }
    if norm == 0 {
        return Ok(0); // only x = 0, which is excluded
    }
    let target = 4 * norm;

    // squares available per digit value within the radius
    let mut digit_squares: [Vec<u64>; 4] = [vec![], vec![], vec![], vec![]];
    for x in -radius..=radius {
        let sq = (x * x) as u64;
        if sq <= target {
            digit_squares[(x.rem_euclid(4)) as usize].push(sq);
        }
    }

    let mut total = 0u64;
    for w in codewords(g)? {
        // dp over coordinates: partial square sum -> ways
        let mut dp: BTreeMap<u64, u64> = BTreeMap::new();
        dp.insert(0, 1);
        for i in 0..n {
            let options = &digit_squares[w.get(i) as usize];
            let mut next: BTreeMap<u64, u64> = BTreeMap::new();
            for (&s, &ways) in &dp {
                for &sq in options {
                    if s + sq <= target {
                        *next.entry(s + sq).or_insert(0) += ways;
                    }
                }
            }
            dp = next;
            if dp.is_empty() {
                break;
            }
        }
        total += dp.get(&target).copied().unwrap_or(0);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::weight_report;
    use crate::z4::Z4Vector;

    fn m(rows: &[&str]) -> Z4Matrix {
        Z4Matrix::from_rows(rows.iter().map(|s| Z4Vector::parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn two_i4_lattice() {
        let g = m(&["2000", "0200", "0020", "0002"]);
        let r = weight_report(&g, None).unwrap();
        let l = lattice_report(&g, &r).unwrap();
        assert_eq!(l.min_norm, 1);
        assert_eq!(l.kissing, 8); // the vectors (+-2, 0, 0, 0)/2 and permutations
        assert_eq!(l.parity, Parity::Odd);
        assert_eq!(brute_force_kissing(&g, 1, 4).unwrap(), 8);
    }

    #[test]
    fn closed_form_matches_oracle_at_higher_norms() {
        let g = m(&["2000", "0200", "0020", "0002"]);
        let r = weight_report(&g, None).unwrap();
        for norm in 1..=4 {
            assert_eq!(
                norm_vector_count(&r, norm),
                brute_force_kissing(&g, norm, 4).unwrap(),
                "norm {norm}"
            );
        }
    }

    #[test]
    fn norm_zero_counts_nothing() {
        let g = m(&["2000", "0200", "0020", "0002"]);
        assert_eq!(brute_force_kissing(&g, 0, 4).unwrap(), 0);
    }

    #[test]
    fn radius_guard() {
        let g = m(&["2000", "0200", "0020", "0002"]);
        // radius 3 cannot see the (+-4) e_i lifts needed at norm 4
        assert!(matches!(brute_force_kissing(&g, 4, 3), Err(Error::RadiusTooSmall { .. })));
        // radius 4 is exhaustive for norm 4: (radius+1)^2 = 25 > 16
        assert!(brute_force_kissing(&g, 4, 4).is_ok());
    }

    #[test]
    fn capped_report_is_rejected() {
        let g = m(&["2000", "0200", "0020", "0002"]);
        let r = weight_report(&g, Some(2)).unwrap();
        assert!(matches!(lattice_report(&g, &r), Err(Error::CappedBelow { .. })));
    }

    #[test]
    fn non_self_dual_is_rejected() {
        let g = m(&["1111"]);
        let r = weight_report(&g, None).unwrap();
        assert!(lattice_report(&g, &r).is_err());
    }
}
