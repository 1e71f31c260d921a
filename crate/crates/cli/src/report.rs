//! JSON-serializable report shapes for `--json` output.

use std::collections::BTreeMap;

use serde::Serialize;

use z4codes_core::analyze::WeightReport;
use z4codes_core::lattice::{LatticeReport, Parity};

#[derive(Serialize)]
pub struct AnalyzeJson {
    pub n: usize,
    #[serde(rename = "type")]
    pub code_type: [usize; 2],
    pub self_orthogonal: bool,
    pub self_dual: bool,
    #[serde(rename = "dL")]
    pub d_l: u64,
    #[serde(rename = "dE")]
    pub d_e: u64,
    pub lee: BTreeMap<u64, u64>,
    pub euclidean: BTreeMap<u64, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swe: Option<Vec<[u64; 4]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
}

#[derive(Serialize)]
pub struct LatticeJson {
    pub mu: u64,
    pub kissing: u64,
    pub parity: String,
}

impl AnalyzeJson {
    pub fn new(
        k1: usize,
        k2: usize,
        self_orthogonal: bool,
        self_dual: bool,
        report: &WeightReport,
        swe: bool,
        lattice: Option<&LatticeReport>,
    ) -> Self {
        AnalyzeJson {
            n: report.n,
            code_type: [k1, k2],
            self_orthogonal,
            self_dual,
            d_l: report.d_l,
            d_e: report.d_e,
            lee: report.lee.clone(),
            euclidean: report.euclidean.clone(),
            swe: swe.then(|| report.swe.iter().map(|(&(i, j, k), &c)| [i, j, k, c]).collect()),
            lattice: lattice.map(|l| LatticeJson {
                mu: l.min_norm,
                kissing: l.kissing,
                parity: match l.parity {
                    Parity::Odd => "odd".into(),
                    Parity::Even => "even".into(),
                },
            }),
        }
    }
}
