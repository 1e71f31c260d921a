//! Exhaustive codeword analytics: Lee and Euclidean weight distributions,
//! minimum weights, the symmetric weight enumerator, and small-length
//! permutation-equivalence testing.
//!
//! Everything derives from one joint histogram indexed by
//! `(units, twos) = (n1+n3, n2)` per codeword: the SWE is the histogram
//! itself, Lee weight is `units + 2*twos`, Euclidean weight is
//! `units + 4*twos`, and the lattice lift counts need exactly the `twos`
//! refinement. One enumeration pass therefore feeds every report.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{standard_form, CodewordBasis};
use crate::z4::Z4Matrix;
use crate::{Error, Result};

/// Partial joint histogram over `(units, twos)` counts. Histograms over
/// disjoint Gray ranges merge by addition, so workers can fill them
/// independently and combine at the end.
#[derive(Debug, Clone)]
pub struct WeightScan {
    n: usize,
    counts: Vec<u64>, // index units * (n+1) + twos
}

impl WeightScan {
    pub fn new(n: usize) -> Self {
        Self { n, counts: vec![0; (n + 1) * (n + 1)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Tally codewords with Gray indices `start..end`.
    pub fn accumulate(&mut self, basis: &CodewordBasis, start: u64, end: u64) {
        assert_eq!(basis.n(), self.n);
        assert!(start <= end && end <= basis.total());
        if start == end {
            return;
        }
        let stride = self.n + 1;
        let deltas = basis.gray_deltas();
        if self.n <= 64 {
            // single-word fast path: the whole loop is a handful of word ops
            let pos: Vec<(u64, u64)> =
                deltas.iter().map(|d| (d.lo_words()[0], d.hi_words()[0])).collect();
            let neg: Vec<(u64, u64)> = deltas
                .iter()
                .map(|d| (d.lo_words()[0], d.hi_words()[0] ^ d.lo_words()[0]))
                .collect();
            let w0 = basis.codeword_at(start);
            let (mut lo, mut hi) = (w0.lo_words()[0], w0.hi_words()[0]);
            self.counts[lo.count_ones() as usize * stride + (hi & !lo).count_ones() as usize] += 1;
            for t in start + 1..end {
                let b = t.trailing_zeros() as usize;
                let on = ((t ^ (t >> 1)) >> b) & 1 == 1;
                let (dlo, dhi) = if on { pos[b] } else { neg[b] };
                let carry = lo & dlo;
                lo ^= dlo;
                hi ^= dhi ^ carry;
                self.counts
                    [lo.count_ones() as usize * stride + (hi & !lo).count_ones() as usize] += 1;
            }
        } else {
            for w in basis.range_iter(start, end) {
                let t = w.weights();
                let units = (t.symbol_counts[1] + t.symbol_counts[3]) as usize;
                let twos = t.symbol_counts[2] as usize;
                self.counts[units * stride + twos] += 1;
            }
        }
    }

    /// Merge a histogram accumulated over a disjoint range.
    pub fn merge(&mut self, other: &WeightScan) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Finish into a report. `cap` limits the weights retained in the Lee
    /// and Euclidean distributions; totals and minima stay exact.
    pub fn into_report(self, cap: Option<u64>) -> WeightReport {
        let stride = self.n + 1;
        let mut swe = BTreeMap::new();
        let mut lee = BTreeMap::new();
        let mut euclidean = BTreeMap::new();
        let mut d_l = u64::MAX;
        let mut d_e = u64::MAX;
        for units in 0..=self.n as u64 {
            for twos in 0..=(self.n as u64 - units) {
                let c = self.counts[units as usize * stride + twos as usize];
                if c == 0 {
                    continue;
                }
                let zeros = self.n as u64 - units - twos;
                swe.insert((zeros, units, twos), c);
                let wl = units + 2 * twos;
                let we = units + 4 * twos;
                if wl > 0 {
                    d_l = d_l.min(wl);
                    d_e = d_e.min(we);
                }
                if cap.is_none_or(|cap| wl <= cap) {
                    *lee.entry(wl).or_insert(0) += c;
                }
                if cap.is_none_or(|cap| we <= cap) {
                    *euclidean.entry(we).or_insert(0) += c;
                }
            }
        }
        let total = self.total();
        WeightReport { n: self.n, total, lee, euclidean, d_l, d_e, swe, capped_at: cap }
    }
}

/// Weight distributions of a code.
///
/// `swe` maps the exponent triple `(i, j, k)` of `a` (zeros), `b` (units),
/// `c` (twos), with `i + j + k = n`, to the number of codewords of that shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightReport {
    pub n: usize,
    /// Codeword count, `4^k1 * 2^k2`.
    pub total: u64,
    /// Lee weight -> count (weights above `capped_at` omitted).
    pub lee: BTreeMap<u64, u64>,
    /// Euclidean weight -> count (weights above `capped_at` omitted).
    pub euclidean: BTreeMap<u64, u64>,
    /// Minimum positive Lee weight (`u64::MAX` for the zero code, which
    /// cannot be constructed).
    pub d_l: u64,
    /// Minimum positive Euclidean weight.
    pub d_e: u64,
    /// Symmetric weight enumerator terms.
    pub swe: BTreeMap<(u64, u64, u64), u64>,
    pub capped_at: Option<u64>,
}

impl WeightReport {
    /// Count of codewords at a given Lee weight (0 when absent).
    pub fn lee_count(&self, w: u64) -> u64 {
        self.lee.get(&w).copied().unwrap_or(0)
    }

    pub fn euclidean_count(&self, w: u64) -> u64 {
        self.euclidean.get(&w).copied().unwrap_or(0)
    }

    /// Render the SWE sorted by descending `a` exponent, then `b`, then `c`.
    pub fn swe_string(&self) -> String {
        render_swe(&self.swe)
    }
}

/// Full enumeration of `g`, single-threaded. Callers that want to spread the
/// work across workers use [`WeightScan`] directly over disjoint ranges.
pub fn weight_report(g: &Z4Matrix, cap: Option<u64>) -> Result<WeightReport> {
    let basis = CodewordBasis::new(g)?;
    let mut scan = WeightScan::new(basis.n());
    scan.accumulate(&basis, 0, basis.total());
    Ok(scan.into_report(cap))
}

/// Minimum positive Lee or Euclidean weight, scanning the whole code but
/// returning `None` as soon as a weight below `abort_below` is seen. The
/// scoring loop of the expansion search.
pub fn min_positive_weight(
    basis: &CodewordBasis,
    euclidean: bool,
    abort_below: Option<u64>,
) -> Option<u64> {
    let two_weight: u64 = if euclidean { 4 } else { 2 };
    let mut min = u64::MAX;
    let total = basis.total();
    if basis.n() <= 64 {
        let deltas = basis.gray_deltas();
        let pos: Vec<(u64, u64)> =
            deltas.iter().map(|d| (d.lo_words()[0], d.hi_words()[0])).collect();
        let neg: Vec<(u64, u64)> =
            deltas.iter().map(|d| (d.lo_words()[0], d.hi_words()[0] ^ d.lo_words()[0])).collect();
        let (mut lo, mut hi) = (0u64, 0u64);
        for t in 1..total {
            let b = t.trailing_zeros() as usize;
            let on = ((t ^ (t >> 1)) >> b) & 1 == 1;
            let (dlo, dhi) = if on { pos[b] } else { neg[b] };
            let carry = lo & dlo;
            lo ^= dlo;
            hi ^= dhi ^ carry;
            let w = lo.count_ones() as u64 + two_weight * (hi & !lo).count_ones() as u64;
            if w < min {
                min = w;
                if abort_below.is_some_and(|f| min < f) {
                    return None;
                }
            }
        }
    } else {
        for w in basis.iter().skip(1) {
            let t = w.weights();
            let score = if euclidean { t.euclidean } else { t.lee };
            if score < min {
                min = score;
                if abort_below.is_some_and(|f| min < f) {
                    return None;
                }
            }
        }
    }
    Some(min)
}

/// Render an SWE term map as a polynomial in `a`, `b`, `c`.
pub fn render_swe(swe: &BTreeMap<(u64, u64, u64), u64>) -> String {
    use core::fmt::Write;
    let mut terms: Vec<_> = swe.iter().collect();
    terms.sort_by_key(|((i, j, _), _)| (core::cmp::Reverse(*i), core::cmp::Reverse(*j)));
    let mut s = String::new();
    for (idx, (&(i, j, k), &count)) in terms.iter().enumerate() {
        if idx > 0 {
            s.push_str(" + ");
        }
        let exps = [(i, 'a'), (j, 'b'), (k, 'c')];
        if count != 1 || (i == 0 && j == 0 && k == 0) {
            let _ = write!(s, "{count}");
        }
        for (e, var) in exps {
            match e {
                0 => {}
                1 => s.push(var),
                _ => {
                    let _ = write!(s, "{var}^{e}");
                }
            }
        }
    }
    s
}

/// Parse a polynomial in the form produced by [`render_swe`], e.g.
/// `"a^6 + 3a^4c^2 + 24ab^4c"`. Also used for the expected polynomials
/// embedded in the catalog.
pub fn parse_swe(text: &str) -> Result<BTreeMap<(u64, u64, u64), u64>> {
    let mut out = BTreeMap::new();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::InvalidParameter("empty SWE term"));
        }
        let bytes = term.as_bytes();
        let mut pos = 0;
        let mut coef: u64 = 0;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            coef = coef * 10 + (bytes[pos] - b'0') as u64;
            pos += 1;
        }
        if pos == 0 {
            coef = 1;
        }
        let mut exps = [0u64; 3];
        while pos < bytes.len() {
            let var = bytes[pos];
            let slot = match var {
                b'a' => 0,
                b'b' => 1,
                b'c' => 2,
                _ => return Err(Error::InvalidParameter("bad SWE variable")),
            };
            pos += 1;
            let mut e: u64 = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                e = 0;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    e = e * 10 + (bytes[pos] - b'0') as u64;
                    pos += 1;
                }
            }
            exps[slot] = e;
        }
        if coef == 0 {
            coef = 1; // a bare leading 0 cannot occur in rendered output
        }
        *out.entry((exps[0], exps[1], exps[2])).or_insert(0) += coef;
    }
    Ok(out)
}

/// Type II: self-dual with every Euclidean weight divisible by 8.
pub fn is_type_ii(report: &WeightReport) -> bool {
    report.swe.keys().all(|&(_, j, k)| (j + 4 * k) % 8 == 0)
}

const EQUIVALENCE_MAX_N: usize = 10;

/// Decide whether some coordinate permutation maps one codeword set onto the
/// other. Backtracking over columns, pruned by per-column symbol counts and
/// by multiset equality of the assigned projections; refuses `n > 10`.
pub fn permutation_equivalent(g1: &Z4Matrix, g2: &Z4Matrix) -> Result<bool> {
    if g1.n() != g2.n() {
        return Ok(false);
    }
    let n = g1.n();
    if n > EQUIVALENCE_MAX_N {
        return Err(Error::LengthAboveEquivalenceBound { n, max: EQUIVALENCE_MAX_N });
    }
    let p1 = standard_form(g1)?;
    let p2 = standard_form(g2)?;
    if (p1.k1(), p1.k2()) != (p2.k1(), p2.k2()) {
        return Ok(false);
    }
    let r1 = weight_report(g1, None)?;
    let r2 = weight_report(g2, None)?;
    if r1.swe != r2.swe {
        return Ok(false);
    }

    let words = |g: &Z4Matrix| -> Result<Vec<Vec<u8>>> {
        Ok(CodewordBasis::new(g)?.iter().map(|w| w.digits()).collect())
    };
    let w1 = words(g1)?;
    let w2 = words(g2)?;

    // per-column symbol counts are permutation invariants
    let signature = |ws: &[Vec<u8>], col: usize| -> [u64; 4] {
        let mut sig = [0u64; 4];
        for w in ws {
            sig[w[col] as usize] += 1;
        }
        sig
    };
    let sig1: Vec<[u64; 4]> = (0..n).map(|c| signature(&w1, c)).collect();
    let sig2: Vec<[u64; 4]> = (0..n).map(|c| signature(&w2, c)).collect();

    // assign source columns of g1 to target positions of g2 left to right;
    // the sorted projection list is a multiset fingerprint
    fn prefixes(ws: &[Vec<u8>], cols: &[usize]) -> Vec<Vec<u8>> {
        let mut items: Vec<Vec<u8>> =
            ws.iter().map(|w| cols.iter().map(|&c| w[c]).collect()).collect();
        items.sort_unstable();
        items
    }

    struct Search<'a> {
        n: usize,
        w1: &'a [Vec<u8>],
        w2: &'a [Vec<u8>],
        sig1: &'a [[u64; 4]],
        sig2: &'a [[u64; 4]],
    }

    impl Search<'_> {
        fn backtrack(&self, depth: usize, used: &mut [bool], assigned: &mut Vec<usize>) -> bool {
            if depth == self.n {
                return true;
            }
            for src in 0..self.n {
                if used[src] || self.sig1[src] != self.sig2[depth] {
                    continue;
                }
                assigned.push(src);
                used[src] = true;
                let target_cols: Vec<usize> = (0..=depth).collect();
                let ok = prefixes(self.w1, assigned) == prefixes(self.w2, &target_cols)
                    && self.backtrack(depth + 1, used, assigned);
                used[src] = false;
                assigned.pop();
                if ok {
                    return true;
                }
            }
            false
        }
    }

    let mut used = vec![false; n];
    let mut assigned = Vec::with_capacity(n);
    let search = Search { n, w1: &w1, w2: &w2, sig1: &sig1, sig2: &sig2 };
    Ok(search.backtrack(0, &mut used, &mut assigned))
}
