//! Structure of a Z4 linear code given by a generator matrix: standard form,
//! type `4^k1 2^k2`, residue and torsion codes, duals, self-orthogonality,
//! and codeword enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::binary::{BinMatrix, BinVector, BinaryCode};
use crate::z4::{Z4Matrix, Z4Vector};
use crate::{Error, Result};

/// Result of bringing a generator matrix to the standard form
///
/// ```text
///     [ I_k1   A   B1 + 2*B2 ]
///     [  O   2*I_k2    2*C   ]
/// ```
///
/// reachable by row operations and column permutation. `A`, `B1`, `B2`, `C`
/// are binary. The standard-form code equals the column-permuted input code;
/// `column_permutation[j]` is the input column sitting at standard position
/// `j`, so un-permuting restores the original coordinate order.
#[derive(Debug, Clone)]
pub struct CodeProfile {
    standard: Z4Matrix,
    column_permutation: Vec<usize>,
    k1: usize,
    k2: usize,
}

impl CodeProfile {
    pub fn standard_generator(&self) -> &Z4Matrix {
        &self.standard
    }

    pub fn column_permutation(&self) -> &[usize] {
        &self.column_permutation
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }

    pub fn n(&self) -> usize {
        self.standard.n()
    }

    /// log2 of the number of codewords, `2*k1 + k2`.
    pub fn log2_size(&self) -> usize {
        2 * self.k1 + self.k2
    }

    /// True when the permutation recorded is the identity.
    pub fn is_identity_permutation(&self) -> bool {
        self.column_permutation.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Map a vector in standard coordinates back to input coordinates.
    pub fn unpermute(&self, v: &Z4Vector) -> Z4Vector {
        let mut digits = vec![0u8; v.len()];
        for (j, &orig) in self.column_permutation.iter().enumerate() {
            digits[orig] = v.get(j);
        }
        Z4Vector::from_digits(&digits).expect("same length")
    }

    /// Map a whole matrix back to input coordinates.
    pub fn unpermute_matrix(&self, m: &Z4Matrix) -> Z4Matrix {
        Z4Matrix::from_rows(m.rows().iter().map(|r| self.unpermute(r)).collect()).expect("nonempty")
    }

    /// Map a vector in input coordinates to standard coordinates.
    pub fn permute(&self, v: &Z4Vector) -> Z4Vector {
        let mut digits = vec![0u8; v.len()];
        for (j, &orig) in self.column_permutation.iter().enumerate() {
            digits[j] = v.get(orig);
        }
        Z4Vector::from_digits(&digits).expect("same length")
    }

    /// Generator matrix of the residue code `Res(C) = C mod 2`, in standard
    /// coordinates: `[I_k1 A B1]`. Empty (dimension 0) when `k1 = 0`.
    pub fn residue(&self) -> BinMatrix {
        let rows = (0..self.k1).map(|i| BinVector::from_z4_mod2(self.standard.row(i))).collect();
        BinMatrix::new(self.n(), rows)
    }

    /// Generator matrix of the torsion code `Tor(C) = {c : 2c in C}`, in
    /// standard coordinates: `[I_k1 A B1; 0 I_k2 C]`, dimension `k1 + k2`.
    pub fn torsion(&self) -> BinMatrix {
        let mut rows: Vec<BinVector> =
            (0..self.k1).map(|i| BinVector::from_z4_mod2(self.standard.row(i))).collect();
        for i in self.k1..self.k1 + self.k2 {
            rows.push(BinVector::from_z4_halved(self.standard.row(i)));
        }
        BinMatrix::new(self.n(), rows)
    }

    /// Residue code as a [`BinaryCode`], standard coordinates.
    pub fn residue_code(&self) -> BinaryCode {
        BinaryCode::from_matrix(&self.residue())
    }

    /// Torsion code as a [`BinaryCode`], standard coordinates.
    pub fn torsion_code(&self) -> BinaryCode {
        BinaryCode::from_matrix(&self.torsion())
    }

    /// Membership test for a vector in input coordinates.
    pub fn contains(&self, v: &Z4Vector) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let mut w = self.permute(v);
        for i in 0..self.k1 {
            let c = w.get(i);
            if c != 0 {
                w = w.sub(&self.standard.row(i).scale(c)).expect("same length");
            }
        }
        for j in 0..self.k2 {
            let c = w.get(self.k1 + j);
            if !c.is_multiple_of(2) {
                return false;
            }
            if c == 2 {
                w = w.sub(self.standard.row(self.k1 + j)).expect("same length");
            }
        }
        w.is_zero()
    }
}

/// Row-reduce `g` over Z4 to the standard form, with column swaps as needed.
///
/// Unit pivots are chosen first (leftmost column holding a unit, lowest row
/// index), then pivots equal to 2. Duplicate and dependent rows reduce to
/// zero and are dropped; an all-zero matrix is rejected.
pub fn standard_form(g: &Z4Matrix) -> Result<CodeProfile> {
    let n = g.n();
    let nr = g.m();
    let mut m = g.to_digit_rows();
    let mut perm: Vec<usize> = (0..n).collect();

    let find_pivot = |m: &[Vec<u8>], from: usize, unit: bool| -> Option<(usize, usize)> {
        for j in from..n {
            for (i, row) in m.iter().enumerate().skip(from) {
                let d = row[j];
                if (unit && (d == 1 || d == 3)) || (!unit && d == 2) {
                    return Some((i, j));
                }
            }
        }
        None
    };

    let mut r = 0;
    while r < nr {
        let Some((i, j)) = find_pivot(&m, r, true) else { break };
        m.swap(r, i);
        if j != r {
            for row in m.iter_mut() {
                row.swap(r, j);
            }
            perm.swap(r, j);
        }
        if m[r][r] == 3 {
            for x in m[r].iter_mut() {
                *x = (*x * 3) % 4;
            }
        }
        let pivot_row = m[r].clone();
        for (i2, row) in m.iter_mut().enumerate() {
            let c = row[r];
            if i2 != r && c != 0 {
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (4 - c) * p) % 4;
                }
            }
        }
        r += 1;
    }
    let k1 = r;

    let mut s = r;
    while s < nr {
        let Some((i, j)) = find_pivot(&m, s, false) else { break };
        m.swap(s, i);
        if j != s {
            for row in m.iter_mut() {
                row.swap(s, j);
            }
            perm.swap(s, j);
        }
        let pivot_row = m[s].clone();
        for (i2, row) in m.iter_mut().enumerate() {
            if i2 != s && row[s] >= 2 {
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + 4 - p) % 4;
                }
            }
        }
        s += 1;
    }
    let k2 = s - k1;

    if k1 + k2 == 0 {
        return Err(Error::ZeroMatrix);
    }
    debug_assert!(m[s..].iter().all(|row| row.iter().all(|&x| x == 0)));

    let standard = Z4Matrix::from_digit_rows(&m[..s])?;
    Ok(CodeProfile { standard, column_permutation: perm, k1, k2 })
}

/// True iff all pairwise (including self) row inner products vanish mod 4,
/// which by bilinearity makes every pair of codewords orthogonal.
pub fn is_self_orthogonal(g: &Z4Matrix) -> bool {
    let rows = g.rows();
    for i in 0..rows.len() {
        for j in i..rows.len() {
            if rows[i].inner_product(&rows[j]).expect("equal lengths") != 0 {
                return false;
            }
        }
    }
    true
}

/// Self-dual iff self-orthogonal and `2*k1 + k2 = n`.
pub fn is_self_dual(g: &Z4Matrix) -> Result<bool> {
    if !is_self_orthogonal(g) {
        return Ok(false);
    }
    let p = standard_form(g)?;
    Ok(p.log2_size() == p.n())
}

/// Generator matrix of the dual code, in the input's coordinates.
///
/// Built from the standard-form blocks: with `G = [I A B1+2B2; 0 2I 2C]`,
///
/// ```text
///     H = [ -(B1+2B2)^T - C^T A^T   C^T   I ]
///         [        2 A^T           2 I    0 ]
/// ```
///
/// where the product `C^T A^T` is taken over Z4. In debug builds the
/// orthogonality contract is re-checked row by row.
///
/// The full space `Z4^n` is rejected: its dual is the zero code, which has
/// no generator matrix in this representation.
pub fn dual(g: &Z4Matrix) -> Result<Z4Matrix> {
    let p = standard_form(g)?;
    let n = p.n();
    let (k1, k2) = (p.k1, p.k2);
    if 2 * k1 + k2 == 2 * n {
        return Err(Error::ZeroMatrix);
    }
    let k3 = n - k1 - k2;
    let std = &p.standard;

    // digit access into the standard matrix
    let row_digits: Vec<Vec<u8>> = std.to_digit_rows();
    let a = |i: usize, j: usize| row_digits[i][k1 + j]; // k1 x k2, binary
    let b = |i: usize, j: usize| row_digits[i][k1 + k2 + j]; // k1 x k3, Z4
    let c = |i: usize, j: usize| row_digits[k1 + i][k1 + k2 + j] / 2; // k2 x k3, binary

    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(k3 + k2);
    for t in 0..k3 {
        let mut row = vec![0u8; n];
        for (i, slot) in row.iter_mut().enumerate().take(k1) {
            let mut acc: u32 = b(i, t) as u32;
            for j in 0..k2 {
                acc += (c(j, t) * a(i, j)) as u32;
            }
            *slot = ((4 - (acc % 4)) % 4) as u8;
        }
        for j in 0..k2 {
            row[k1 + j] = c(j, t);
        }
        row[k1 + k2 + t] = 1;
        rows.push(row);
    }
    for s in 0..k2 {
        let mut row = vec![0u8; n];
        for (i, slot) in row.iter_mut().enumerate().take(k1) {
            *slot = 2 * a(i, s);
        }
        row[k1 + s] = 2;
        rows.push(row);
    }

    let h = Z4Matrix::from_digit_rows(&rows)?;
    #[cfg(debug_assertions)]
    {
        for hr in h.rows() {
            for gr in std.rows() {
                debug_assert_eq!(hr.inner_product(gr).unwrap(), 0, "dual row not orthogonal");
            }
        }
        let hp = standard_form(&h).expect("dual has a pivot");
        // |C| * |C_dual| = 4^n, checked on exponents
        debug_assert_eq!(p.log2_size() + hp.log2_size(), 2 * n);
    }
    Ok(p.unpermute_matrix(&h))
}

/// Two codes are equal iff they have the same type and each generator row of
/// one lies in the other.
pub fn same_code(a: &Z4Matrix, b: &Z4Matrix) -> Result<bool> {
    if a.n() != b.n() {
        return Ok(false);
    }
    let pa = standard_form(a)?;
    let pb = standard_form(b)?;
    if (pa.k1, pa.k2) != (pb.k1, pb.k2) {
        return Ok(false);
    }
    Ok(b.rows().iter().all(|r| pa.contains(r)))
}

/// Generators of a code split into order-4 and order-2 parts, in input
/// coordinates; the iteration basis for codeword enumeration.
#[derive(Debug, Clone)]
pub struct CodewordBasis {
    n: usize,
    free_rows: Vec<Z4Vector>,
    two_rows: Vec<Z4Vector>,
}

impl CodewordBasis {
    pub fn new(g: &Z4Matrix) -> Result<Self> {
        let p = standard_form(g)?;
        Self::from_profile(&p)
    }

    pub fn from_profile(p: &CodeProfile) -> Result<Self> {
        if p.log2_size() > 63 {
            return Err(Error::TooManyCodewords { log2: p.log2_size() });
        }
        let std = p.standard_generator();
        let free_rows = (0..p.k1()).map(|i| p.unpermute(std.row(i))).collect();
        let two_rows = (p.k1()..p.k1() + p.k2()).map(|i| p.unpermute(std.row(i))).collect();
        Ok(Self { n: p.n(), free_rows, two_rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k1(&self) -> usize {
        self.free_rows.len()
    }

    pub fn k2(&self) -> usize {
        self.two_rows.len()
    }

    /// Total number of codewords, `4^k1 * 2^k2`.
    pub fn total(&self) -> u64 {
        1u64 << (2 * self.k1() + self.k2())
    }

    /// The toggle vectors of the Gray walk: every codeword is a subset sum
    /// of these. Bits `0..k1` add a free row, bits `k1..2k1` add twice a
    /// free row, bits `2k1..` add an order-2 row.
    pub(crate) fn gray_deltas(&self) -> Vec<Z4Vector> {
        let mut deltas = Vec::with_capacity(2 * self.k1() + self.k2());
        deltas.extend(self.free_rows.iter().cloned());
        deltas.extend(self.free_rows.iter().map(|r| r.scale(2)));
        deltas.extend(self.two_rows.iter().cloned());
        deltas
    }

    /// Codeword at Gray index `t`: the subset sum selected by `gray(t)`.
    pub fn codeword_at(&self, t: u64) -> Z4Vector {
        let deltas = self.gray_deltas();
        let state = t ^ (t >> 1);
        let mut w = Z4Vector::zero(self.n).expect("n > 0");
        for (b, d) in deltas.iter().enumerate() {
            if (state >> b) & 1 == 1 {
                w.add_assign(d);
            }
        }
        w
    }

    /// Iterate codewords of Gray indices `start..end`. Disjoint ranges
    /// partition the code, so workers can enumerate concurrently.
    pub fn range_iter(&self, start: u64, end: u64) -> CodewordIter {
        assert!(start <= end && end <= self.total());
        CodewordIter {
            deltas: self.gray_deltas(),
            neg_deltas: self.gray_deltas().iter().map(|d| d.neg()).collect(),
            cur: if start < end { Some(self.codeword_at(start)) } else { None },
            t: start,
            end,
        }
    }

    /// Iterate all codewords exactly once.
    pub fn iter(&self) -> CodewordIter {
        self.range_iter(0, self.total())
    }
}

/// Streaming codeword iterator; each step adds one toggle vector.
pub struct CodewordIter {
    deltas: Vec<Z4Vector>,
    neg_deltas: Vec<Z4Vector>,
    cur: Option<Z4Vector>,
    t: u64,
    end: u64,
}

impl Iterator for CodewordIter {
    type Item = Z4Vector;

    fn next(&mut self) -> Option<Z4Vector> {
        let cur = self.cur.as_mut()?;
        let out = cur.clone();
        self.t += 1;
        if self.t >= self.end {
            self.cur = None;
        } else {
            let b = self.t.trailing_zeros() as usize;
            let on = ((self.t ^ (self.t >> 1)) >> b) & 1 == 1;
            let d = if on { &self.deltas[b] } else { &self.neg_deltas[b] };
            cur.add_assign(d);
        }
        Some(out)
    }
}

/// Convenience: enumerate all codewords of `g`.
pub fn codewords(g: &Z4Matrix) -> Result<CodewordIter> {
    Ok(CodewordBasis::new(g)?.iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn m(rows: &[&str]) -> Z4Matrix {
        Z4Matrix::from_rows(rows.iter().map(|s| Z4Vector::parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn standard_form_types() {
        let p = standard_form(&m(&["2000"])).unwrap();
        assert_eq!((p.k1(), p.k2()), (0, 1));

        let p = standard_form(&m(&["1111"])).unwrap();
        assert_eq!((p.k1(), p.k2()), (1, 0));

        let p = standard_form(&m(&["1111", "0220", "0022"])).unwrap();
        assert_eq!((p.k1(), p.k2()), (1, 2));

        assert!(matches!(standard_form(&m(&["0000"])), Err(Error::ZeroMatrix)));
    }

    #[test]
    fn standard_form_drops_dependent_rows() {
        let p = standard_form(&m(&["1111", "2222", "1111", "0000"])).unwrap();
        assert_eq!((p.k1(), p.k2()), (1, 0));
    }

    #[test]
    fn standard_form_needs_column_swap() {
        // leading zero column forces a swap; the permuted code must match
        let g = m(&["0211", "0102"]);
        let p = standard_form(&g).unwrap();
        assert_eq!((p.k1(), p.k2()), (2, 0));
        let orig: BTreeSet<_> = codewords(&g).unwrap().collect();
        let back: BTreeSet<_> = CodewordBasis::new(&p.unpermute_matrix(p.standard_generator()))
            .unwrap()
            .iter()
            .collect();
        assert_eq!(orig, back);
    }

    #[test]
    fn a_block_is_binary() {
        // strips the 2-component of unit rows over the 2I block
        let g = m(&["1300", "0220"]);
        let p = standard_form(&g).unwrap();
        assert_eq!((p.k1(), p.k2()), (1, 1));
        let std = p.standard_generator();
        let a_entry = std.row(0).get(1);
        assert!(a_entry < 2, "A block entry not binary: {a_entry}");
    }

    #[test]
    fn residue_torsion_examples() {
        let p = standard_form(&m(&["1111"])).unwrap();
        assert_eq!(p.residue().rows()[0], BinVector::parse("1111").unwrap());
        assert_eq!(p.torsion().m(), 1);

        let p = standard_form(&m(&["2000"])).unwrap();
        assert_eq!(p.residue().m(), 0);
        assert_eq!(p.torsion().rows()[0], BinVector::parse("1000").unwrap());

        // the n=8 free example: residue rows as printed
        let p = standard_form(&m(&["10111200", "01110320"])).unwrap();
        assert!(p.is_identity_permutation());
        let res = p.residue();
        assert_eq!(res.rows()[0], BinVector::parse("10111000").unwrap());
        assert_eq!(res.rows()[1], BinVector::parse("01110100").unwrap());
    }

    #[test]
    fn torsion_matches_bruteforce() {
        let g = m(&["1111", "0220", "0022"]);
        let p = standard_form(&g).unwrap();
        let tor = p.torsion_code();
        assert_eq!(tor.dimension(), 3);
        // oracle: all 16 binary vectors c with 2c in C
        let mut count = 0;
        for mask in 0u8..16 {
            let digits: Vec<u8> = (0..4).map(|i| ((mask >> i) & 1) * 2).collect();
            let v = Z4Vector::from_digits(&digits).unwrap();
            if p.contains(&v) {
                count += 1;
            }
        }
        assert_eq!(count, 1 << tor.dimension());
    }

    #[test]
    fn dual_examples() {
        let d = dual(&m(&["1111"])).unwrap();
        let pd = standard_form(&d).unwrap();
        assert_eq!(pd.log2_size(), 6); // 4^3 = 64 codewords

        // 2I_4 is its own dual
        let g = m(&["2000", "0200", "0020", "0002"]);
        assert!(same_code(&dual(&g).unwrap(), &g).unwrap());
    }

    #[test]
    fn dual_is_involution_small() {
        for g in [m(&["1111"]), m(&["1230", "0211"]), m(&["2200", "0120"])] {
            let dd = dual(&dual(&g).unwrap()).unwrap();
            assert!(same_code(&dd, &g).unwrap());
        }
    }

    #[test]
    fn self_orthogonality_predicates() {
        assert!(is_self_orthogonal(&m(&["1111"])));
        assert!(!is_self_dual(&m(&["1111"])).unwrap());
        assert!(is_self_dual(&m(&["20000", "02000", "00200", "00020", "00002"])).unwrap());
        assert!(!is_self_orthogonal(&m(&["1000"])));
    }

    #[test]
    fn codeword_enumeration() {
        let words: BTreeSet<_> = codewords(&m(&["20", "02"])).unwrap().collect();
        let expect: BTreeSet<_> =
            ["00", "20", "02", "22"].iter().map(|s| Z4Vector::parse(s).unwrap()).collect();
        assert_eq!(words, expect);

        let words: BTreeSet<_> = codewords(&m(&["1111"])).unwrap().collect();
        let expect: BTreeSet<_> =
            ["0000", "1111", "2222", "3333"].iter().map(|s| Z4Vector::parse(s).unwrap()).collect();
        assert_eq!(words, expect);
    }

    #[test]
    fn ranged_enumeration_partitions() {
        let basis = CodewordBasis::new(&m(&["1111", "0220", "0022"])).unwrap();
        let total = basis.total();
        assert_eq!(total, 16);
        let all: BTreeSet<_> = basis.iter().collect();
        assert_eq!(all.len(), 16);
        let mut merged = BTreeSet::new();
        for (s, e) in [(0, 5), (5, 6), (6, 16)] {
            merged.extend(basis.range_iter(s, e));
        }
        assert_eq!(merged, all);
    }

    #[test]
    fn contains_respects_code() {
        let p = standard_form(&m(&["1111", "0220", "0022"])).unwrap();
        assert!(p.contains(&Z4Vector::parse("1331").unwrap()));
        assert!(!p.contains(&Z4Vector::parse("1000").unwrap()));
    }
}
