//! Embedded generator matrices with their published invariants: the
//! indecomposable self-dual codes of lengths 4 to 8 recovered by the
//! expansion pipeline, the five optimal Type I codes of lengths 27, 28, 29,
//! 33 and 34, and the `D_2m` constructor families.
//!
//! Matrices are stored as digit grids exactly as published (one row per
//! line); the structural checks in [`reproduce`] double as transcription
//! checksums, since a single wrong digit almost surely breaks self-duality.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::analyze::{parse_swe, permutation_equivalent, weight_report, WeightReport};
use crate::codes::{is_self_dual, is_self_orthogonal, same_code, standard_form};
use crate::expand::{expand_free, saturate, verify_expansion, ExpandOptions};
use crate::lattice::{brute_force_kissing, lattice_report, norm_vector_count};
use crate::z4::Z4Matrix;
use crate::{Error, Result};

/// Published values attached to a catalog entry; absent fields are simply
/// not checked.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub k1: usize,
    pub k2: usize,
    pub self_dual: bool,
    pub d_e: Option<u64>,
    pub d_l: Option<u64>,
    /// `(weight, count)` pairs of the Euclidean distribution.
    pub euclidean_counts: &'static [(u64, u64)],
    /// `(weight, count)` pairs of the Lee distribution.
    pub lee_counts: &'static [(u64, u64)],
    pub swe: Option<&'static str>,
    pub type_ii: Option<bool>,
    pub min_norm: Option<u64>,
    pub kissing: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub matrix: Z4Matrix,
    pub source: &'static str,
    pub expected: Expected,
}

struct RawEntry {
    name: &'static str,
    grid: &'static str,
    source: &'static str,
    expected: Expected,
}

const D6_OPLUS_SWE: &str =
    "a^6 + 3a^4c^2 + 8a^3c^3 + 12a^2b^4 + 3a^2c^4 + 24ab^4c + 12b^4c^2 + c^6";
const E7_PLUS_SWE: &str =
    "a^7 + 7a^4c^3 + 14a^3b^4 + 7a^3c^4 + 42a^2b^4c + 42ab^4c^2 + 14b^4c^3 + c^7";
const L8_SWE: &str = "a^8 + 4a^6c^2 + 22a^4c^4 + 96a^3b^4c + 4a^2c^6 + 96ab^4c^3 + 32b^8 + c^8";
const O8_SWE: &str = "a^8 + 14a^4c^4 + 112a^3b^4c + 112ab^4c^3 + 16b^8 + c^8";
const E8_SWE: &str =
    "a^8 + 16a^4b^4 + 14a^4c^4 + 48a^3b^4c + 96a^2b^4c^2 + 48ab^4c^3 + 16b^8 + 16b^4c^4 + c^8";
const D8_OPLUS_SWE: &str = "a^8 + 4a^6c^2 + 16a^4b^4 + 22a^4c^4 + 32a^3b^4c + 96a^2b^4c^2 \
                            + 4a^2c^6 + 32ab^4c^3 + 32b^8 + 16b^4c^4 + c^8";
const K8_PRIME_SWE: &str =
    "a^8 + 12a^6c^2 + 38a^4c^4 + 64a^3b^4c + 12a^2c^6 + 64ab^4c^3 + 64b^8 + c^8";

const G27_GRID: &str = "\
100000010011100010113320130
010000001011010100013333030
001000001010101010002131131
000100000010010111112303103
000010011110010010101330201
002201211111010101100000110
202000310001011010110110110
200000000000000000002002002
020000000000000000002222222
002000000000000000000002220
000200000000000000002222002
000020000000000000002220220
000002000000000000000202202
000000200000000000000020222
000000020000000000000000202
000000002000000000000202020
000000000200000000002022022
000000000020000000000022020
000000000002000000000002200
000000000000020000002002020";

const G28_GRID: &str = "\
1000000001101001010102330111
0100000000110100101011211211
0010000100011010010101123101
0001000010001101001011132130
0000100101000110100100331031
2002012011010111100010011100
0202221110100100011000101111
2000000000000000000000020202
0200000000000000000002000022
0020000000000000000002200002
0002000000000000000002200020
0000200000000000000000222000
0000020000000000000000022200
0000002000000000000000002220
0000000200000000000002020222
0000000020000000000002220000
0000000002000000000000220002
0000000000200000000002022000
0000000000020000000000222220
0000000000002000000000020220
0000000000000200000000002022";

const G29_GRID: &str = "\
10000001110001000001111103030
01000001101100110101002001303
00100001100001001101112030103
00010001101110010010002110213
00001000110111000111010010212
00222301001010101110111110111
00002030011011100000101111100
20000000000000000000002022220
02000000000000000000000220022
00200000000000000000000202002
00020000000000000000002200000
00002000000000000000002000222
00000200000000000000002222022
00000020000000000000002200202
00000002000000000000002022222
00000000200000000000002200022
00000000020000000000002222200
00000000002000000000002002202
00000000000200000000000020200
00000000000020000000000222002
00000000000002000000002020202
00000000000000200000000202202";

const G33_GRID: &str = "\
100000000100101011010001020213213
010000000110010100011100203101010
001000000011111010001001010333131
000100000110111000110111200023000
000010000001010111111011113223001
000001000101011111111100312212322
000000100001001111100011302030032
222022030110011001100000010101011
002200023110101001100111000110000
200000000000000000000002022022000
020000000000000000000002202022020
002000000000000000000002002022202
000200000000000000000002202020022
000020000000000000000002200022020
000002000000000000000002002022002
000000200000000000000000002000022
000000020000000000000002220022220
000000002000000000000002020002222
000000000200000000000000220022002
000000000020000000000002202000202
000000000002000000000002202022202
000000000000200000000000202022002
000000000000020000000000020002002
000000000000000200000002002022020";

const G34_GRID: &str = "\
1000000000010110100101010311033313
0100000000001001110101000113202213
0010000000011010010101003100021323
0001000000000111011101110221331112
0000100000101000101001001031101030
0000010000011111010001100322300012
0000001000110010100111111103122323
0000000100111010010111112213011100
0002002032101001101101111001101011
2222222201110111011111001111111101
2000000000000000000000000220020022
0200000000000000000000000002022200
0020000000000000000000020222022220
0002000000000000000000000022220222
0000200000000000000000000000222022
0000020000000000000000020022222200
0000002000000000000000020222002020
0000000200000000000000020202020022
0000000020000000000000020222222202
0000000002000000000000020000200222
0000000000200000000000000202222000
0000000000002000000000000222202022
0000000000000002000000020220002202
0000000000000000002000000200020220";

fn raw_entries() -> Vec<RawEntry> {
    vec![
        RawEntry {
            name: "A1",
            grid: "2",
            source: "trivial self-dual code {0,2} of length 1",
            expected: Expected { k1: 0, k2: 1, self_dual: true, ..Default::default() },
        },
        RawEntry {
            name: "2I4",
            grid: "2000\n0200\n0020\n0002",
            source: "scaled identity, one of the two self-dual codes of length 4",
            expected: Expected { k1: 0, k2: 4, self_dual: true, ..Default::default() },
        },
        RawEntry {
            name: "2I5",
            grid: "20000\n02000\n00200\n00020\n00002",
            source: "scaled identity of length 5",
            expected: Expected { k1: 0, k2: 5, self_dual: true, ..Default::default() },
        },
        RawEntry {
            name: "D4_oplus",
            grid: "1111\n0220\n0022",
            source: "the free-seed expansion of length 4",
            expected: Expected { k1: 1, k2: 2, self_dual: true, ..Default::default() },
        },
        RawEntry {
            name: "D4_oplus_A1",
            grid: "11110\n02200\n00220\n00002",
            source: "decomposable self-dual code of length 5",
            expected: Expected { k1: 1, k2: 3, self_dual: true, ..Default::default() },
        },
        RawEntry {
            name: "D6_oplus",
            grid: "111300\n211011\n202020\n000022",
            source: "indecomposable self-dual code of length 6",
            expected: Expected {
                k1: 2,
                k2: 2,
                self_dual: true,
                d_l: Some(4),
                swe: Some(D6_OPLUS_SWE),
                ..Default::default()
            },
        },
        RawEntry {
            name: "E7_plus",
            grid: "1003110\n0101101\n2210111\n2222222",
            source: "indecomposable self-dual code of length 7",
            expected: Expected {
                k1: 3,
                k2: 1,
                self_dual: true,
                d_l: Some(4),
                swe: Some(E7_PLUS_SWE),
                ..Default::default()
            },
        },
        RawEntry {
            name: "L8",
            grid: "10101320\n01113020\n02101011\n00202000\n00022220",
            source: "indecomposable self-dual code of length 8",
            expected: Expected {
                k1: 3,
                k2: 2,
                self_dual: true,
                d_l: Some(4),
                swe: Some(L8_SWE),
                ..Default::default()
            },
        },
        RawEntry {
            name: "O8",
            grid: "10111200\n01110320\n00321101\n20031110",
            source: "the octacode, free self-dual code of length 8",
            expected: Expected {
                k1: 4,
                k2: 0,
                self_dual: true,
                d_l: Some(6),
                swe: Some(O8_SWE),
                type_ii: Some(true),
                ..Default::default()
            },
        },
        RawEntry {
            name: "E8",
            grid: "10111200\n01110320\n22301101\n02231110",
            source: "free self-dual code of length 8",
            expected: Expected {
                k1: 4,
                k2: 0,
                self_dual: true,
                d_l: Some(4),
                swe: Some(E8_SWE),
                ..Default::default()
            },
        },
        RawEntry {
            name: "D8_oplus",
            grid: "10113000\n21200111\n00101110\n02000002\n00220202",
            source: "indecomposable self-dual code of length 8",
            expected: Expected {
                k1: 3,
                k2: 2,
                self_dual: true,
                d_l: Some(4),
                swe: Some(D8_OPLUS_SWE),
                ..Default::default()
            },
        },
        RawEntry {
            name: "K8_prime",
            grid: "10111002\n21000111\n02000002\n00202000\n00022000\n00000022",
            source: "indecomposable self-dual code of length 8",
            expected: Expected {
                k1: 2,
                k2: 4,
                self_dual: true,
                d_l: Some(4),
                swe: Some(K8_PRIME_SWE),
                ..Default::default()
            },
        },
        RawEntry {
            name: "K8",
            grid: "11111111\n02000002\n00200002\n00020002\n00002002\n00000202\n00000022",
            source: "indecomposable self-dual code of length 8",
            expected: Expected {
                k1: 1,
                k2: 6,
                self_dual: true,
                d_l: Some(4),
                ..Default::default()
            },
        },
        RawEntry {
            name: "G27_4",
            grid: G27_GRID,
            source: "optimal Type I code of length 27",
            expected: Expected {
                k1: 7,
                k2: 13,
                self_dual: true,
                d_e: Some(12),
                d_l: Some(6),
                euclidean_counts: &[(12, 2509), (16, 60366)],
                lee_counts: &[(6, 13), (8, 142), (10, 752), (12, 5488)],
                type_ii: Some(false),
                min_norm: Some(3),
                kissing: Some(2664),
                ..Default::default()
            },
        },
        RawEntry {
            name: "G28_4",
            grid: G28_GRID,
            source: "optimal Type I code of length 28",
            expected: Expected {
                k1: 7,
                k2: 14,
                self_dual: true,
                d_e: Some(12),
                d_l: Some(8),
                euclidean_counts: &[(12, 2240), (16, 64827)],
                lee_counts: &[(6, 0), (8, 315), (10, 0), (12, 8288)],
                type_ii: Some(false),
                min_norm: Some(3),
                kissing: Some(2240),
                ..Default::default()
            },
        },
        RawEntry {
            name: "G29_4",
            grid: G29_GRID,
            source: "optimal Type I code of length 29",
            expected: Expected {
                k1: 7,
                k2: 15,
                self_dual: true,
                d_e: Some(12),
                d_l: Some(6),
                euclidean_counts: &[(12, 1716), (16, 63342)],
                lee_counts: &[(6, 20), (8, 206), (10, 861), (12, 5580)],
                type_ii: Some(false),
                min_norm: Some(3),
                kissing: Some(1856),
                ..Default::default()
            },
        },
        RawEntry {
            name: "G33_4",
            grid: G33_GRID,
            source: "optimal Type I code of length 33",
            expected: Expected {
                k1: 9,
                k2: 15,
                self_dual: true,
                d_e: Some(12),
                d_l: Some(6),
                euclidean_counts: &[(12, 625), (16, 50322)],
                lee_counts: &[(6, 9), (8, 74), (10, 480), (12, 2897)],
                type_ii: Some(false),
                min_norm: Some(3),
                kissing: Some(704),
                ..Default::default()
            },
        },
        RawEntry {
            name: "G34_4",
            grid: G34_GRID,
            source: "optimal Type I code of length 34",
            expected: Expected {
                k1: 10,
                k2: 14,
                self_dual: true,
                d_e: Some(12),
                d_l: Some(6),
                euclidean_counts: &[(12, 515), (16, 45771)],
                lee_counts: &[(6, 3), (8, 43), (10, 294), (12, 1929)],
                type_ii: Some(false),
                min_norm: Some(3),
                kissing: Some(544),
                ..Default::default()
            },
        },
    ]
}

/// Kissing number of the only previously known odd extremal unimodular
/// lattice in dimension 34; the lattice of `G34_4` must differ from it.
pub const DIM34_KNOWN_KISSING: u64 = 560;

/// All entry names, in catalog order.
pub fn names() -> Vec<&'static str> {
    raw_entries().iter().map(|e| e.name).collect()
}

/// Fetch and parse an entry by name.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let raw = raw_entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))?;
    Ok(CatalogEntry {
        name: raw.name,
        matrix: Z4Matrix::parse_grid(raw.grid)?,
        source: raw.source,
        expected: raw.expected,
    })
}

/// Names of the five optimal codes, in length order.
pub fn golden_names() -> [&'static str; 5] {
    ["G27_4", "G28_4", "G29_4", "G33_4", "G34_4"]
}

/// The scaled identity code `2 I_n`.
pub fn scaled_identity(n: usize) -> Result<Z4Matrix> {
    let rows = (0..n)
        .map(|i| {
            let mut digits = vec![0u8; n];
            digits[i] = 2;
            crate::z4::Z4Vector::from_digits(&digits)
        })
        .collect::<Result<_>>()?;
    Z4Matrix::from_rows(rows)
}

/// Variants of the `D_2m` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DVariant {
    /// Shifted `1113` blocks only.
    Plain,
    /// Plain plus the wrap-around row `1 3 0...0 1 1`.
    Circle,
    /// Plain plus `2 v2 = 0...0 2 2`.
    Plus,
    /// Plain plus both extra rows.
    Oplus,
}

/// Build `D_2m` and its decorated variants from shifted `1113` blocks.
pub fn build_d_family(m: usize, variant: DVariant) -> Result<Z4Matrix> {
    if m < 2 {
        return Err(Error::InvalidParameter("D family needs m >= 2"));
    }
    let n = 2 * m;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for i in 0..m - 1 {
        let mut r = vec![0u8; n];
        r[2 * i..2 * i + 4].copy_from_slice(&[1, 1, 1, 3]);
        rows.push(r);
    }
    if matches!(variant, DVariant::Circle | DVariant::Oplus) {
        let mut r = vec![0u8; n];
        r[0] = 1;
        r[1] = 3;
        r[n - 2] = 1;
        r[n - 1] = 1;
        rows.push(r);
    }
    if matches!(variant, DVariant::Plus | DVariant::Oplus) {
        let mut r = vec![0u8; n];
        r[n - 2] = 2;
        r[n - 1] = 2;
        rows.push(r);
    }
    Z4Matrix::from_digit_rows(&rows)
}

/// One small-length recovery: expanding `seed` must produce the codes named
/// in `targets`.
#[derive(Debug, Clone)]
pub struct RecoveryCase {
    pub name: &'static str,
    pub seed: &'static str,
    /// 1 = saturation only, 2 = free residue growth.
    pub algorithm: u8,
    pub target_dim: Option<usize>,
    pub targets: &'static [&'static str],
}

/// The seed-to-code recoveries of lengths 4 to 8.
pub fn recovery_cases() -> Vec<RecoveryCase> {
    vec![
        RecoveryCase {
            name: "n4_free",
            seed: "1111",
            algorithm: 1,
            target_dim: None,
            targets: &["D4_oplus"],
        },
        RecoveryCase {
            name: "n4_torsion",
            seed: "2000",
            algorithm: 1,
            target_dim: None,
            targets: &["2I4"],
        },
        RecoveryCase {
            name: "n5_free",
            seed: "11110",
            algorithm: 1,
            target_dim: None,
            targets: &["D4_oplus_A1"],
        },
        RecoveryCase {
            name: "n5_torsion",
            seed: "20000",
            algorithm: 1,
            target_dim: None,
            targets: &["2I5"],
        },
        RecoveryCase {
            name: "D6_oplus",
            seed: "111300",
            algorithm: 2,
            target_dim: Some(2),
            targets: &["D6_oplus"],
        },
        RecoveryCase {
            name: "E7_plus",
            seed: "1003110",
            algorithm: 2,
            target_dim: Some(3),
            targets: &["E7_plus"],
        },
        RecoveryCase {
            name: "O8_E8",
            seed: "10111200\n01110320",
            algorithm: 2,
            target_dim: Some(4),
            targets: &["O8", "E8"],
        },
        RecoveryCase {
            name: "L8",
            seed: "10101320\n01113020",
            algorithm: 2,
            target_dim: Some(3),
            targets: &["L8"],
        },
        RecoveryCase {
            name: "D8_oplus",
            seed: "10113000",
            algorithm: 2,
            target_dim: Some(3),
            targets: &["D8_oplus"],
        },
        RecoveryCase {
            name: "K8_prime",
            seed: "10111002",
            algorithm: 2,
            target_dim: Some(2),
            targets: &["K8_prime"],
        },
        RecoveryCase {
            name: "K8",
            seed: "11111111",
            algorithm: 1,
            target_dim: None,
            targets: &["K8"],
        },
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One recomputed quantity diffed against its published value.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

impl Check {
    fn diff<T: PartialEq + core::fmt::Display>(label: String, expected: T, actual: T) -> Self {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check { label, expected: format!("{expected}"), actual: format!("{actual}"), status }
    }

    fn skipped(label: String) -> Self {
        Check { label, expected: String::new(), actual: "skipped".into(), status: Status::Skipped }
    }
}

#[derive(Debug, Clone)]
pub struct Section {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone)]
pub struct ReproduceOutcome {
    pub sections: Vec<Section>,
}

impl ReproduceOutcome {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.checks.iter().all(|c| c.status != Status::Fail))
    }
}

/// Diff a recomputed weight report against an entry's published values.
pub fn verify_weights(entry: &CatalogEntry, report: &WeightReport) -> Vec<Check> {
    let name = entry.name;
    let e = &entry.expected;
    let mut checks = Vec::new();
    if let Some(d_e) = e.d_e {
        checks.push(Check::diff(format!("{name}: d_E"), d_e, report.d_e));
    }
    if let Some(d_l) = e.d_l {
        checks.push(Check::diff(format!("{name}: d_L"), d_l, report.d_l));
    }
    for &(w, c) in e.euclidean_counts {
        checks.push(Check::diff(format!("{name}: A_{w}^E"), c, report.euclidean_count(w)));
    }
    for &(w, c) in e.lee_counts {
        checks.push(Check::diff(format!("{name}: A_{w}^L"), c, report.lee_count(w)));
    }
    if let Some(swe) = e.swe {
        let expected = parse_swe(swe).expect("embedded SWE parses");
        checks.push(Check::diff(
            format!("{name}: SWE"),
            crate::analyze::render_swe(&expected),
            report.swe_string(),
        ));
    }
    if let Some(t2) = e.type_ii {
        checks.push(Check::diff(
            format!("{name}: type II"),
            t2,
            crate::analyze::is_type_ii(report),
        ));
    }
    checks
}

/// Recompute everything the catalog pins down and diff it.
///
/// `analyze` computes an uncapped weight report for a matrix; injecting it
/// lets callers spread the large enumerations (2^33, 2^34 codewords) over
/// threads and report progress. With `fast`, entries of length 33 and up are
/// skipped. Reports are cached and reused across sections.
pub fn reproduce(
    analyze: &mut dyn FnMut(&Z4Matrix) -> Result<WeightReport>,
    fast: bool,
) -> Result<ReproduceOutcome> {
    let mut sections = Vec::new();
    let mut reports: BTreeMap<&'static str, WeightReport> = BTreeMap::new();

    // structural integrity; also the transcription checksum
    let mut checks = Vec::new();
    for name in names() {
        let entry = get(name)?;
        let p = standard_form(&entry.matrix)?;
        checks.push(Check::diff(
            format!("{name}: type"),
            format!("4^{} 2^{}", entry.expected.k1, entry.expected.k2),
            format!("4^{} 2^{}", p.k1(), p.k2()),
        ));
        checks.push(Check::diff(
            format!("{name}: self-orthogonal"),
            true,
            is_self_orthogonal(&entry.matrix),
        ));
        if entry.expected.self_dual {
            checks.push(Check::diff(
                format!("{name}: self-dual"),
                true,
                is_self_dual(&entry.matrix)?,
            ));
        }
    }
    sections.push(Section { name: "catalog", checks });

    // weight tables
    let mut checks = Vec::new();
    for name in names() {
        let entry = get(name)?;
        let e = &entry.expected;
        let has_weight_data = e.d_e.is_some()
            || e.d_l.is_some()
            || e.swe.is_some()
            || !e.euclidean_counts.is_empty()
            || !e.lee_counts.is_empty()
            || e.type_ii.is_some();
        if !has_weight_data {
            continue;
        }
        if fast && entry.matrix.n() >= 33 {
            checks.push(Check::skipped(format!("{name}: weight table")));
            continue;
        }
        let report = analyze(&entry.matrix)?;
        checks.extend(verify_weights(&entry, &report));
        reports.insert(entry.name, report);
    }
    sections.push(Section { name: "weights", checks });

    // lattice table and the closed-form/brute-force cross-check
    let mut checks = Vec::new();
    for name in names() {
        let entry = get(name)?;
        let e = &entry.expected;
        if e.min_norm.is_none() && e.kissing.is_none() {
            // cross-check the lift-count formula on every small self-dual code
            if e.self_dual && entry.matrix.n() <= 10 {
                let report = match reports.get(entry.name) {
                    Some(r) => r.clone(),
                    None => analyze(&entry.matrix)?,
                };
                let l = lattice_report(&entry.matrix, &report)?;
                let oracle = brute_force_kissing(&entry.matrix, l.min_norm, 4)?;
                checks.push(Check::diff(
                    format!("{name}: kissing vs brute force (mu={})", l.min_norm),
                    oracle,
                    l.kissing,
                ));
                for norm in 1..=4 {
                    let oracle = brute_force_kissing(&entry.matrix, norm, 4)?;
                    checks.push(Check::diff(
                        format!("{name}: norm-{norm} vector count vs brute force"),
                        oracle,
                        norm_vector_count(&report, norm),
                    ));
                }
            }
            continue;
        }
        let Some(report) = reports.get(entry.name) else {
            checks.push(Check::skipped(format!("{name}: lattice")));
            continue;
        };
        let l = lattice_report(&entry.matrix, report)?;
        if let Some(mu) = e.min_norm {
            checks.push(Check::diff(format!("{name}: min norm"), mu, l.min_norm));
        }
        if let Some(kissing) = e.kissing {
            checks.push(Check::diff(format!("{name}: kissing"), kissing, l.kissing));
        }
    }
    // the recomputed 34-dimensional kissing number must differ from the
    // previously known lattice's 560
    match reports.get("G34_4") {
        Some(report) => {
            let entry = get("G34_4")?;
            let l = lattice_report(&entry.matrix, report)?;
            checks.push(Check::diff(
                "G34_4: kissing differs from the known dimension-34 lattice".to_string(),
                true,
                l.kissing != DIM34_KNOWN_KISSING,
            ));
        }
        None => checks.push(Check::skipped("G34_4: dimension-34 comparison".to_string())),
    }
    sections.push(Section { name: "lattice", checks });

    // small-length recovery through the expansion pipeline
    let mut checks = Vec::new();
    for case in recovery_cases() {
        let seed = Z4Matrix::parse_grid(case.seed)?;
        match case.algorithm {
            1 => {
                let result = saturate(&seed)?;
                let target = get(case.targets[0])?;
                checks.push(Check::diff(
                    format!("recover {}: code match", case.name),
                    true,
                    same_code(&result.code, &target.matrix)?,
                ));
                checks.push(Check::diff(
                    format!("recover {}: expansion valid", case.name),
                    true,
                    verify_expansion(&seed, &result)?,
                ));
            }
            _ => {
                let opts = ExpandOptions { target_dim: case.target_dim, ..Default::default() };
                let mut found: Vec<bool> = vec![false; case.targets.len()];
                let mut all_valid = true;
                for r in expand_free(&seed, &opts)? {
                    all_valid &= verify_expansion(&seed, &r)?;
                    for (i, t) in case.targets.iter().enumerate() {
                        if !found[i] && same_code(&r.code, &get(t)?.matrix)? {
                            found[i] = true;
                        }
                    }
                }
                for (i, t) in case.targets.iter().enumerate() {
                    checks.push(Check::diff(
                        format!("recover {}: reaches {t}", case.name),
                        true,
                        found[i],
                    ));
                }
                checks.push(Check::diff(
                    format!("recover {}: expansions valid", case.name),
                    true,
                    all_valid,
                ));
            }
        }
    }
    // the two length-4 expansions are inequivalent
    let d4 = get("D4_oplus")?;
    let i4 = get("2I4")?;
    checks.push(Check::diff(
        "n=4: the two expansions are permutation-inequivalent".to_string(),
        false,
        permutation_equivalent(&d4.matrix, &i4.matrix)?,
    ));
    sections.push(Section { name: "recovery", checks });

    Ok(ReproduceOutcome { sections })
}

/// [`reproduce`] with the single-threaded analyzer.
pub fn reproduce_serial(fast: bool) -> Result<ReproduceOutcome> {
    reproduce(&mut |g| weight_report(g, None), fast)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_parse_and_have_declared_structure() {
        for name in names() {
            let e = get(name).unwrap();
            let p = standard_form(&e.matrix).unwrap();
            assert_eq!((p.k1(), p.k2()), (e.expected.k1, e.expected.k2), "{name}");
            assert!(is_self_orthogonal(&e.matrix), "{name}");
            if e.expected.self_dual {
                assert!(is_self_dual(&e.matrix).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn unknown_entry_is_an_error() {
        assert!(matches!(get("nope"), Err(Error::UnknownCatalogEntry(_))));
    }

    #[test]
    fn d_family_shapes() {
        let d4 = build_d_family(2, DVariant::Plain).unwrap();
        assert_eq!(d4.render_grid().trim(), "1113");
        let d6 = build_d_family(3, DVariant::Plain).unwrap();
        assert_eq!(d6.render_grid().trim(), "111300\n001113");
        assert!(build_d_family(1, DVariant::Plain).is_err());
    }

    #[test]
    fn d6_oplus_family_matches_printed_swe() {
        let g = build_d_family(3, DVariant::Oplus).unwrap();
        assert!(is_self_dual(&g).unwrap());
        let r = weight_report(&g, None).unwrap();
        assert_eq!(r.swe, parse_swe(D6_OPLUS_SWE).unwrap());
    }

    #[test]
    fn small_entry_swe_strings_are_exact() {
        for name in ["D6_oplus", "E7_plus", "L8", "O8", "E8", "D8_oplus", "K8_prime"] {
            let e = get(name).unwrap();
            let r = weight_report(&e.matrix, None).unwrap();
            assert_eq!(r.swe, parse_swe(e.expected.swe.unwrap()).unwrap(), "{name}");
            assert_eq!(r.d_l, e.expected.d_l.unwrap(), "{name}");
        }
    }

    #[test]
    fn verify_weights_catches_mismatches() {
        // fault injection: check a report computed from a different code
        let l8 = get("L8").unwrap();
        let wrong = weight_report(&get("K8").unwrap().matrix, None).unwrap();
        let checks = verify_weights(&l8, &wrong);
        assert!(checks.iter().any(|c| c.status == Status::Fail));
    }

    #[test]
    fn reproduce_small_sections_pass() {
        let out = reproduce_serial(true).unwrap();
        for section in &out.sections {
            for c in &section.checks {
                assert_ne!(
                    c.status,
                    Status::Fail,
                    "{}: {} expected {} got {}",
                    section.name,
                    c.label,
                    c.expected,
                    c.actual
                );
            }
        }
    }
}
