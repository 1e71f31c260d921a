//! GF(2) machinery behind the Z4 expansions: duals, doubly-even tests,
//! maximal doubly-even extension, and dual-basis computation.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::z4::{words_for, Z4Vector};
use crate::{Error, Result};

/// A fixed-length vector over GF(2), bit-packed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BinVector {
    len: usize,
    words: Vec<u64>,
}

impl BinVector {
    pub fn zero(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut v = Self::zero(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::InvalidDigit { row: 0, col: i, digit: ch }),
            }
        }
        Ok(v)
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        let (w, b) = (i / 64, i % 64);
        if bit {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Size of the support intersection.
    pub fn intersection_count(&self, other: &Self) -> u64 {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as u64).sum()
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &Self) -> bool {
        self.intersection_count(other) % 2 == 1
    }

    /// Index of the lowest set bit.
    pub fn leading_support(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Lexicographic order on the sorted support lists: the vector holding
    /// the lowest differing coordinate is smaller, unless the other vector's
    /// support is a proper prefix (which then comes first). Deterministic
    /// tie-break for the extension scans.
    pub fn support_lex_cmp(&self, other: &Self) -> Ordering {
        for (w, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let diff = a ^ b;
            if diff == 0 {
                continue;
            }
            let bit = diff.trailing_zeros();
            let self_has = (a >> bit) & 1 == 1;
            let above_in_word = if bit == 63 { 0 } else { u64::MAX << (bit + 1) };
            let (word, rest) = if self_has {
                (b & above_in_word, &other.words[w + 1..])
            } else {
                (a & above_in_word, &self.words[w + 1..])
            };
            let other_continues = word != 0 || rest.iter().any(|&x| x != 0);
            return match (self_has, other_continues) {
                (true, true) | (false, false) => Ordering::Less,
                (true, false) | (false, true) => Ordering::Greater,
            };
        }
        Ordering::Equal
    }

    /// The 0/1 lift into Z4^n.
    pub fn lift01(&self) -> Z4Vector {
        Z4Vector::from_planes(self.len, self.words.clone(), vec![0; self.words.len()])
    }

    /// The doubled lift `2*v` into Z4^n.
    pub fn lift2(&self) -> Z4Vector {
        Z4Vector::from_planes(self.len, vec![0; self.words.len()], self.words.clone())
    }

    /// Reduction of a Z4 vector mod 2.
    pub fn from_z4_mod2(v: &Z4Vector) -> Self {
        Self { len: v.len(), words: v.low_plane() }
    }

    /// The binary vector `u` with `2u = v`, for `v` with entries in {0,2}.
    pub fn from_z4_halved(v: &Z4Vector) -> Self {
        debug_assert!(v.low_plane().iter().all(|&w| w == 0));
        Self { len: v.len(), words: v.high_plane() }
    }
}

impl fmt::Display for BinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// A list of equal-length GF(2) rows; not necessarily independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinMatrix {
    n: usize,
    rows: Vec<BinVector>,
}

impl BinMatrix {
    pub fn new(n: usize, rows: Vec<BinVector>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == n));
        Self { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BinVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BinVector {
        &self.rows[i]
    }
}

/// A binary linear code held as a reduced row-echelon generator matrix.
///
/// The RREF form (pivot columns strictly increasing, each pivot the only
/// 1 in its column) is a canonical representative, so equality of
/// `BinaryCode` values is equality of codes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<BinVector>,
    pivots: Vec<usize>,
}

impl BinaryCode {
    /// The zero code of length `n`.
    pub fn empty(n: usize) -> Self {
        Self { n, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Span of the given rows; dependent and zero rows are dropped.
    pub fn from_rows(n: usize, rows: &[BinVector]) -> Self {
        let mut code = Self::empty(n);
        for r in rows {
            code.insert(r);
        }
        code
    }

    pub fn from_matrix(m: &BinMatrix) -> Self {
        Self::from_rows(m.n(), m.rows())
    }

    /// Add `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &BinVector) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.leading_support() else {
            return false;
        };
        // clear column p in existing rows, then insert keeping pivot order
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, core::mem::take(&mut v));
        self.pivots.insert(pos, p);
        true
    }

    /// Remainder of `v` after elimination by the generator rows.
    pub fn reduce(&self, v: &BinVector) -> BinVector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BinVector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[BinVector] {
        &self.rows
    }

    /// The dual code: all vectors orthogonal to every codeword.
    pub fn dual(&self) -> BinaryCode {
        let mut basis = Vec::with_capacity(self.n - self.rows.len());
        let mut piv_iter = self.pivots.iter().copied().peekable();
        let mut free = Vec::new();
        for j in 0..self.n {
            if piv_iter.peek() == Some(&j) {
                piv_iter.next();
            } else {
                free.push(j);
            }
        }
        for &f in &free {
            let mut v = BinVector::unit(self.n, f);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row.get(f) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BinaryCode::from_rows(self.n, &basis)
    }

    /// True iff every codeword weight is divisible by 4. Checked on the
    /// generator: all row weights divisible by 4 and all pairwise support
    /// intersections even.
    pub fn is_doubly_even(&self) -> bool {
        for (i, r) in self.rows.iter().enumerate() {
            if r.weight() % 4 != 0 {
                return false;
            }
            for s in &self.rows[i + 1..] {
                if r.intersection_count(s) % 2 != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Visit all 2^k codewords (Gray-code order).
    pub fn for_each_codeword(&self, mut f: impl FnMut(&BinVector)) {
        let k = self.rows.len();
        assert!(k < 64, "binary code too large to enumerate");
        let mut cur = BinVector::zero(self.n);
        f(&cur);
        for t in 1u64..(1 << k) {
            let b = t.trailing_zeros() as usize;
            cur.xor_assign(&self.rows[b]);
            f(&cur);
        }
    }

    /// Flat canonical key (the RREF rows), usable for dedup in ordered sets.
    pub fn canonical_key(&self) -> Vec<u64> {
        let mut key = Vec::with_capacity(2 + self.rows.len() * words_for(self.n));
        key.push(self.n as u64);
        key.push(self.rows.len() as u64);
        for r in &self.rows {
            key.extend_from_slice(&r.clone().into_words());
        }
        key
    }
}

impl BinVector {
    fn into_words(self) -> Vec<u64> {
        self.words
    }
}

/// Dual basis for independent rows `e_1..e_k`: vectors `e*_1..e*_k` with
/// `e_i . e*_j = delta_ij` over GF(2).
///
/// Row-reduces the input while tracking the transform `U` with `R = U G`;
/// `e*_j` is supported on the pivot columns of `R` with `e*_j[p_i] = U[i][j]`.
pub fn dual_basis(g: &BinMatrix) -> Result<BinMatrix> {
    let k = g.m();
    let n = g.n();
    let mut rows: Vec<BinVector> = g.rows().to_vec();
    let mut transform: Vec<BinVector> = (0..k).map(|i| BinVector::unit(k, i)).collect();
    let mut pivots: Vec<usize> = Vec::with_capacity(k);
    for i in 0..k {
        // eliminate with already-reduced rows
        for (j, &p) in pivots.iter().enumerate() {
            if rows[i].get(p) {
                let (a, b) = split_two(&mut rows, i, j);
                a.xor_assign(b);
                let (a, b) = split_two(&mut transform, i, j);
                a.xor_assign(b);
            }
        }
        let p = rows[i].leading_support().ok_or(Error::DependentRows)?;
        for j in 0..i {
            if rows[j].get(p) {
                let (a, b) = split_two(&mut rows, j, i);
                a.xor_assign(b);
                let (a, b) = split_two(&mut transform, j, i);
                a.xor_assign(b);
            }
        }
        pivots.push(p);
    }
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let mut v = BinVector::zero(n);
        for (i, &p) in pivots.iter().enumerate() {
            if transform[i].get(j) {
                v.set(p, true);
            }
        }
        out.push(v);
    }
    Ok(BinMatrix::new(n, out))
}

fn split_two<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    debug_assert_ne!(i, j);
    if i < j {
        let (a, b) = v.split_at_mut(j);
        (&mut a[i], &mut b[0])
    } else {
        let (a, b) = v.split_at_mut(i);
        (&mut b[0], &mut a[j])
    }
}

/// Independent vectors of `A^perp \ B` that complete `B` to `A^perp`.
///
/// Requires `B` to be a subcode of `A^perp`; returns
/// `dim(A^perp) - dim(B)` vectors in deterministic order.
pub fn complement_in_dual(a: &BinaryCode, b: &BinaryCode) -> Result<Vec<BinVector>> {
    let adual = a.dual();
    for row in b.rows() {
        if !adual.contains(row) {
            return Err(Error::NotInDual);
        }
    }
    let mut span = b.clone();
    let mut out = Vec::new();
    for row in adual.rows() {
        if span.insert(row) {
            out.push(row.clone());
        }
    }
    Ok(out)
}

/// Options controlling the candidate scan in doubly-even extension.
#[derive(Debug, Clone, Copy)]
pub struct ExtendOptions {
    /// Above this code length the dual is not enumerated in full; candidates
    /// are combinations of at most `combination_depth` reduced-basis vectors,
    /// and maximality is certified only up to that depth.
    pub full_enum_max_n: usize,
    pub combination_depth: usize,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        Self { full_enum_max_n: 24, combination_depth: 3 }
    }
}

/// Smallest (support-lex) doubly-even vector that extends `code` while
/// staying orthogonal to `code` and to `constraint`, or None.
fn min_extension_candidate(
    code: &BinaryCode,
    constraint: Option<&BinaryCode>,
    opts: &ExtendOptions,
) -> Option<BinVector> {
    let mut joint = code.clone();
    if let Some(c) = constraint {
        for r in c.rows() {
            joint.insert(r);
        }
    }
    let ambient = joint.dual();
    let mut best: Option<BinVector> = None;
    let mut consider = |v: &BinVector| {
        if v.is_zero() || !v.weight().is_multiple_of(4) || code.contains(v) {
            return;
        }
        match &best {
            Some(b) if b.support_lex_cmp(v) != Ordering::Greater => {}
            _ => best = Some(v.clone()),
        }
    };
    if code.length() <= opts.full_enum_max_n {
        ambient.for_each_codeword(|v| consider(v));
    } else {
        for_each_combination(ambient.rows(), opts.combination_depth, &mut consider);
    }
    best
}

/// All extension candidates (used by the supercode enumeration).
pub(crate) fn extension_candidates(
    code: &BinaryCode,
    constraint: Option<&BinaryCode>,
    opts: &ExtendOptions,
) -> Vec<BinVector> {
    let mut joint = code.clone();
    if let Some(c) = constraint {
        for r in c.rows() {
            joint.insert(r);
        }
    }
    let ambient = joint.dual();
    let mut out = Vec::new();
    let mut consider = |v: &BinVector| {
        if !v.is_zero() && v.weight().is_multiple_of(4) && !code.contains(v) {
            out.push(v.clone());
        }
    };
    if code.length() <= opts.full_enum_max_n {
        ambient.for_each_codeword(|v| consider(v));
    } else {
        for_each_combination(ambient.rows(), opts.combination_depth, &mut consider);
    }
    out.sort_by(|a, b| a.support_lex_cmp(b));
    out
}

fn for_each_combination(basis: &[BinVector], depth: usize, f: &mut impl FnMut(&BinVector)) {
    if basis.is_empty() {
        return;
    }
    let n = basis[0].len();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        basis: &[BinVector],
        depth: usize,
        start: usize,
        acc: &BinVector,
        stack: &mut Vec<usize>,
        f: &mut impl FnMut(&BinVector),
    ) {
        if stack.len() == depth {
            return;
        }
        for i in start..basis.len() {
            let next = acc.xor(&basis[i]);
            f(&next);
            stack.push(i);
            rec(basis, depth, i + 1, &next, stack, f);
            stack.pop();
        }
    }
    rec(basis, depth, 0, &BinVector::zero(n), &mut stack, f);
}

/// Greedily extend a doubly-even self-orthogonal code until no doubly-even
/// vector of its dual extends it (within `constraint`'s dual, if given).
///
/// Candidates are scanned in support-lex order and the first valid vector is
/// taken, so the result is deterministic.
pub fn extend_to_maximal_doubly_even(
    code: &BinaryCode,
    constraint: Option<&BinaryCode>,
    opts: &ExtendOptions,
) -> Result<BinaryCode> {
    if !code.is_doubly_even() {
        return Err(Error::NotDoublyEven);
    }
    let mut cur = code.clone();
    while let Some(v) = min_extension_candidate(&cur, constraint, opts) {
        cur.insert(&v);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn bv(s: &str) -> BinVector {
        BinVector::parse(s).unwrap()
    }

    fn code(n: usize, rows: &[&str]) -> BinaryCode {
        let rows: Vec<_> = rows.iter().map(|s| bv(s)).collect();
        BinaryCode::from_rows(n, &rows)
    }

    /// Brute-force dual over all 2^n vectors.
    fn dual_oracle(c: &BinaryCode) -> BTreeSet<BinVector> {
        let n = c.length();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let mut v = BinVector::zero(n);
            for i in 0..n {
                if (mask >> i) & 1 == 1 {
                    v.set(i, true);
                }
            }
            if c.rows().iter().all(|r| !r.dot(&v)) {
                out.insert(v);
            }
        }
        out
    }

    #[test]
    fn dual_of_all_ones() {
        let c = code(4, &["1111"]);
        let d = c.dual();
        assert_eq!(d.dimension(), 3);
        assert!(d.contains(&bv("1111")));
    }

    #[test]
    fn dual_of_empty_code_is_full_space() {
        let d = BinaryCode::empty(4).dual();
        assert_eq!(d.dimension(), 4);
    }

    #[test]
    fn dual_matches_oracle() {
        let c = code(8, &["10111000", "01110100"]);
        let d = c.dual();
        assert_eq!(d.dimension(), 6);
        // rows of the maximal doubly-even extension are in the dual
        assert!(d.contains(&bv("00101101")));
        assert!(d.contains(&bv("00011110")));
        let oracle = dual_oracle(&c);
        assert_eq!(oracle.len(), 1 << 6);
        let mut listed = BTreeSet::new();
        d.for_each_codeword(|v| {
            listed.insert(v.clone());
        });
        assert_eq!(listed, oracle);
    }

    #[test]
    fn doubly_even_examples() {
        assert!(code(4, &["1111"]).is_doubly_even());
        assert!(!code(4, &["1100"]).is_doubly_even());
        // intersection {2,3} has size 2, so the span stays doubly-even
        assert!(code(8, &["11110000", "01101100"]).is_doubly_even());
        // oracle: enumerate all codewords of the last one
        code(8, &["11110000", "01101100"]).for_each_codeword(|v| {
            assert_eq!(v.weight() % 4, 0);
        });
    }

    #[test]
    fn complement_examples() {
        let a = code(4, &["1111"]);
        let picked = complement_in_dual(&a, &a).unwrap();
        assert_eq!(picked.len(), 2);
        let mut span = a.clone();
        for v in &picked {
            assert!(span.insert(v));
        }
        assert_eq!(span, a.dual());

        let a8 = code(8, &["11111111"]);
        assert_eq!(complement_in_dual(&a8, &a8).unwrap().len(), 6);

        let b = a.dual();
        assert!(complement_in_dual(&a, &b).unwrap().is_empty());

        let not_sub = code(4, &["1000"]);
        assert!(matches!(complement_in_dual(&a, &not_sub), Err(Error::NotInDual)));
    }

    #[test]
    fn extend_examples() {
        let opts = ExtendOptions::default();
        let c = extend_to_maximal_doubly_even(&code(6, &["111100"]), None, &opts).unwrap();
        assert_eq!(c.dimension(), 2);
        assert!(c.is_doubly_even());
        assert!(c.contains(&bv("111100")));

        let c = extend_to_maximal_doubly_even(&code(8, &["10111000", "01110100"]), None, &opts)
            .unwrap();
        assert_eq!(c.dimension(), 4);
        assert!(c.is_doubly_even());

        // a doubly-even self-dual input comes back unchanged
        let sd = extend_to_maximal_doubly_even(&c, None, &opts).unwrap();
        assert_eq!(sd, c);

        assert!(matches!(
            extend_to_maximal_doubly_even(&code(4, &["1100"]), None, &opts),
            Err(Error::NotDoublyEven)
        ));
    }

    #[test]
    fn extend_respects_constraint() {
        // constrain extensions of <111100> to the dual of <000011>
        let base = code(6, &["111100"]);
        let constraint = code(6, &["000011"]);
        let c = extend_to_maximal_doubly_even(&base, Some(&constraint), &ExtendOptions::default())
            .unwrap();
        for r in c.rows() {
            assert!(!r.dot(&bv("000011")));
        }
    }

    #[test]
    fn extend_maximality_is_exhaustive_small_n() {
        let opts = ExtendOptions::default();
        for start in [code(6, &["111100"]), code(8, &["11111111"]), code(12, &["111100000000"])] {
            let n = start.length();
            let m = extend_to_maximal_doubly_even(&start, None, &opts).unwrap();
            // no vector of the dual extends it while staying doubly-even
            let mut extendable = false;
            m.dual().for_each_codeword(|v| {
                if !v.is_zero() && v.weight() % 4 == 0 && !m.contains(v) {
                    extendable = true;
                }
            });
            assert!(!extendable);
            // dimension bound for maximal doubly-even codes
            let bound = if n % 2 == 0 { n / 2 } else { (n - 1) / 2 };
            assert!(m.dimension() <= bound);
        }
    }

    #[test]
    fn dual_basis_examples() {
        // [I | M]: unit vectors work
        let g = BinMatrix::new(5, vec![bv("10011"), bv("01010")]);
        let s = dual_basis(&g).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(g.row(i).dot(s.row(j)), i == j);
            }
        }

        let g = BinMatrix::new(4, vec![bv("1111")]);
        let s = dual_basis(&g).unwrap();
        assert!(g.row(0).dot(s.row(0)));

        // residue rows of the n=8 free example
        let g = BinMatrix::new(8, vec![bv("10111000"), bv("01110100")]);
        let s = dual_basis(&g).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(g.row(i).dot(s.row(j)), i == j);
            }
        }

        let dep = BinMatrix::new(4, vec![bv("1100"), bv("0110"), bv("1010")]);
        assert!(matches!(dual_basis(&dep), Err(Error::DependentRows)));
    }

    #[test]
    fn support_lex_order() {
        // support {0,5} < support {1}
        assert_eq!(bv("100001").support_lex_cmp(&bv("010000")), Ordering::Less);
        // prefix is smaller
        assert_eq!(bv("100000").support_lex_cmp(&bv("110000")), Ordering::Less);
        assert_eq!(bv("110000").support_lex_cmp(&bv("110000")), Ordering::Equal);
    }
}
