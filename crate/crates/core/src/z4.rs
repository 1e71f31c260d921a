//! Exact arithmetic on vectors and matrices over Z4 = {0,1,2,3}.
//!
//! A vector is stored as two parallel bit planes: `lo` holds the low bit of
//! every coordinate and `hi` the high bit, so coordinate `i` equals
//! `lo[i] + 2*hi[i]`. Addition mod 4 is three word operations per 64
//! coordinates and symbol counts reduce to population counts, which is what
//! makes exhaustive enumeration of 2^34 codewords practical.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

/// Symbol counts of a vector together with its Lee and Euclidean weights.
///
/// With `n_i` the number of coordinates equal to `i`:
/// `lee = n1 + 2*n2 + n3` and `euclidean = n1 + 4*n2 + n3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightTriple {
    pub lee: u64,
    pub euclidean: u64,
    /// `(n0, n1, n2, n3)`.
    pub symbol_counts: [u64; 4],
}

/// A fixed-length vector over Z4.
///
/// Immutable after construction; all operations return new values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4Vector {
    len: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Z4Vector {
    /// The zero vector of length `len`.
    pub fn zero(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyMatrix);
        }
        let w = words_for(len);
        Ok(Self { len, lo: vec![0; w], hi: vec![0; w] })
    }

    /// Build from digits in {0,1,2,3}.
    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        let mut v = Self::zero(digits.len())?;
        for (i, &d) in digits.iter().enumerate() {
            if d > 3 {
                return Err(Error::InvalidDigit { row: 0, col: i, digit: (b'0' + d) as char });
            }
            v.set(i, d);
        }
        Ok(v)
    }

    /// Parse a string of digit characters, e.g. `"10113000"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut digits = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0'..='3' => digits.push(ch as u8 - b'0'),
                _ => return Err(Error::InvalidDigit { row: 0, col: i, digit: ch }),
            }
        }
        Self::from_digits(&digits)
    }

    pub(crate) fn from_planes(len: usize, lo: Vec<u64>, hi: Vec<u64>) -> Self {
        debug_assert_eq!(lo.len(), words_for(len));
        debug_assert_eq!(hi.len(), words_for(len));
        Self { len, lo, hi }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        (((self.lo[w] >> b) & 1) + 2 * ((self.hi[w] >> b) & 1)) as u8
    }

    pub(crate) fn set(&mut self, i: usize, d: u8) {
        debug_assert!(i < self.len && d < 4);
        let (w, b) = (i / 64, i % 64);
        self.lo[w] = (self.lo[w] & !(1 << b)) | (((d & 1) as u64) << b);
        self.hi[w] = (self.hi[w] & !(1 << b)) | ((((d >> 1) & 1) as u64) << b);
    }

    pub fn digits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().all(|&w| w == 0) && self.hi.iter().all(|&w| w == 0)
    }

    pub(crate) fn lo_words(&self) -> &[u64] {
        &self.lo
    }

    pub(crate) fn hi_words(&self) -> &[u64] {
        &self.hi
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { left: self.len, right: other.len });
        }
        Ok(())
    }

    /// Coordinatewise sum mod 4.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    #[inline]
    pub(crate) fn add_assign(&mut self, other: &Self) {
        for w in 0..self.lo.len() {
            let carry = self.lo[w] & other.lo[w];
            self.lo[w] ^= other.lo[w];
            self.hi[w] ^= other.hi[w] ^ carry;
        }
    }

    /// Coordinatewise difference mod 4.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Coordinatewise negation: 1 <-> 3, 0 and 2 fixed.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for w in 0..out.lo.len() {
            out.hi[w] ^= out.lo[w];
        }
        out
    }

    /// Coordinatewise product with a scalar, mod 4.
    pub fn scale(&self, a: u8) -> Self {
        match a & 3 {
            0 => {
                let w = self.lo.len();
                Self { len: self.len, lo: vec![0; w], hi: vec![0; w] }
            }
            1 => self.clone(),
            2 => Self { len: self.len, lo: vec![0; self.lo.len()], hi: self.lo.clone() },
            _ => self.neg(),
        }
    }

    /// Euclidean inner product mod 4.
    ///
    /// With `u = ul + 2uh`, `v = vl + 2vh` coordinatewise,
    /// `sum u_i v_i = |ul & vl| + 2(|ul & vh| + |uh & vl|)  (mod 4)`.
    pub fn inner_product(&self, other: &Self) -> Result<u8> {
        self.check_len(other)?;
        let mut units: u64 = 0;
        let mut twos: u64 = 0;
        for w in 0..self.lo.len() {
            units += (self.lo[w] & other.lo[w]).count_ones() as u64;
            twos += (self.lo[w] & other.hi[w]).count_ones() as u64;
            twos += (self.hi[w] & other.lo[w]).count_ones() as u64;
        }
        Ok(((units + 2 * twos) % 4) as u8)
    }

    /// Symbol counts and both weights.
    pub fn weights(&self) -> WeightTriple {
        let mut n1 = 0u64;
        let mut n2 = 0u64;
        let mut n3 = 0u64;
        for w in 0..self.lo.len() {
            n1 += (self.lo[w] & !self.hi[w]).count_ones() as u64;
            n2 += (self.hi[w] & !self.lo[w]).count_ones() as u64;
            n3 += (self.lo[w] & self.hi[w]).count_ones() as u64;
        }
        let n0 = self.len as u64 - n1 - n2 - n3;
        WeightTriple {
            lee: n1 + 2 * n2 + n3,
            euclidean: n1 + 4 * n2 + n3,
            symbol_counts: [n0, n1, n2, n3],
        }
    }

    /// Reduction mod 2 as bit words (the low plane).
    pub(crate) fn low_plane(&self) -> Vec<u64> {
        self.lo.clone()
    }

    /// The high plane, i.e. `v[i] div 2`.
    pub(crate) fn high_plane(&self) -> Vec<u64> {
        self.hi.clone()
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

/// A generator matrix over Z4: a nonempty list of equal-length rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4Matrix {
    n: usize,
    rows: Vec<Z4Vector>,
}

impl Z4Matrix {
    pub fn from_rows(rows: Vec<Z4Vector>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyMatrix)?;
        let n = first.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch { left: n, right: r.len() });
            }
        }
        Ok(Self { n, rows })
    }

    /// Parse a digit grid: one row per line, `#` starts a comment line,
    /// blank lines ignored.
    pub fn parse_grid(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut digits = Vec::with_capacity(line.len());
            for (col, ch) in line.chars().enumerate() {
                match ch {
                    '0'..='3' => digits.push(ch as u8 - b'0'),
                    _ => {
                        return Err(Error::InvalidDigit { row: rows.len(), col, digit: ch });
                    }
                }
            }
            rows.push(Z4Vector::from_digits(&digits)?);
        }
        Self::from_rows(rows)
    }

    /// Render as a digit grid, one row per line.
    pub fn render_grid(&self) -> String {
        use fmt::Write;
        let mut s = String::new();
        for r in &self.rows {
            let _ = writeln!(s, "{r}");
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Z4Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Z4Vector {
        &self.rows[i]
    }

    /// Rows as digit vectors; convenient for row reduction.
    pub(crate) fn to_digit_rows(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|r| r.digits()).collect()
    }

    pub(crate) fn from_digit_rows(rows: &[Vec<u8>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| Z4Vector::from_digits(r)).collect::<Result<_>>()?)
    }

    /// Vertically stack `extra` rows under this matrix.
    pub fn stack(&self, extra: &[Z4Vector]) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows.extend_from_slice(extra);
        Self::from_rows(rows)
    }
}

impl fmt::Display for Z4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_grid())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Z4Vector {
        Z4Vector::parse(s).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(v("1230").add(&v("3210")).unwrap(), v("0000"));
        assert_eq!(v("1111").add(&v("0000")).unwrap(), v("1111"));
        assert_eq!(v("23").add(&v("33")).unwrap(), v("12"));
    }

    #[test]
    fn add_length_mismatch() {
        assert!(matches!(v("123").add(&v("12")), Err(Error::LengthMismatch { left: 3, right: 2 })));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(v("1111").scale(2), v("2222"));
        assert_eq!(v("1230").scale(0), v("0000"));
        assert_eq!(v("1230").scale(3), v("3210"));
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(v("123").inner_product(&v("111")).unwrap(), 2);
        assert_eq!(v("1111").inner_product(&v("1111")).unwrap(), 0);
        // row of the D6+ seed 111300 is isotropic: 1+1+1+9 = 12 = 0 mod 4
        assert_eq!(v("1113").inner_product(&v("1113")).unwrap(), 0);
    }

    #[test]
    fn weight_examples() {
        // digit 3 contributes 1 to both weights (n1 + 2*n2 + n3, n1 + 4*n2 + n3)
        let w = v("111300").weights();
        assert_eq!((w.lee, w.euclidean), (4, 4));
        assert_eq!(w.symbol_counts, [2, 3, 0, 1]);

        let w = v("2222").weights();
        assert_eq!((w.lee, w.euclidean), (8, 16));

        let w = v("000").weights();
        assert_eq!((w.lee, w.euclidean), (0, 0));
    }

    #[test]
    fn weights_across_word_boundary() {
        let mut digits = vec![0u8; 70];
        digits[0] = 1;
        digits[63] = 2;
        digits[64] = 3;
        digits[69] = 2;
        let w = Z4Vector::from_digits(&digits).unwrap().weights();
        assert_eq!(w.symbol_counts, [66, 1, 2, 1]);
        assert_eq!(w.lee, 1 + 4 + 1);
        assert_eq!(w.euclidean, 1 + 8 + 1);
    }

    #[test]
    fn neg_matches_scale_by_three() {
        let x = v("0123321002");
        assert_eq!(x.neg(), x.scale(3));
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn grid_round_trip() {
        let g = Z4Matrix::parse_grid("1230\n# comment\n0213\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(Z4Matrix::parse_grid(&g.render_grid()).unwrap(), g);
    }

    #[test]
    fn grid_rejects_bad_digit() {
        assert!(matches!(
            Z4Matrix::parse_grid("104\n"),
            Err(Error::InvalidDigit { row: 0, col: 2, digit: '4' })
        ));
    }
}
