//! JSON and CSV output for bases, decompositions, scans and acceptance runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::acceptance::{CriterionResult, Status};
use crate::error::Result;
use crate::homology::chains::ChainTermJson;
use crate::homology::BasisElement;
use crate::partition::IntPartition;
use crate::poset::GradedPoset;
use crate::repstab::{ClassFunction, IrrepDecomposition, StabilityReport, Verdict};
use crate::scalar::exact_string;
use crate::tableaux::ribbon::FillingJson;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisElementJson {
    pub filling: FillingJson,
    pub top: String,
    pub chain_terms: Vec<ChainTermJson>,
}

pub fn basis_json(l: &GradedPoset, basis: &[BasisElement]) -> Vec<BasisElementJson> {
    basis
        .iter()
        .map(|b| BasisElementJson {
            filling: b.filling.to_json(|p| l.describe(l.atoms()[p])),
            top: l.describe(b.top),
            chain_terms: b.vector.to_json(l),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub n: usize,
    pub lambda: String,
    pub mult: u64,
}

pub fn decomposition_rows(decs: &BTreeMap<usize, IrrepDecomposition>) -> Vec<DecompositionRow> {
    decs.iter()
        .flat_map(|(&n, d)| {
            d.mults.iter().map(move |(l, &mult)| DecompositionRow {
                n,
                lambda: l.comma_string(),
                mult,
            })
        })
        .collect()
}

/// Rows `n,"λ",mult` under a header line.
pub fn decomposition_csv(decs: &BTreeMap<usize, IrrepDecomposition>) -> String {
    let mut out = String::from("n,lambda,mult\n");
    for r in decomposition_rows(decs) {
        writeln!(out, "{},\"{}\",{}", r.n, r.lambda, r.mult).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityJson {
    pub bound: usize,
    pub range: (usize, usize),
    pub stable_at: Option<usize>,
    pub sharp: bool,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub witness_mults: Option<(u64, u64)>,
}

impl From<&StabilityReport> for StabilityJson {
    fn from(r: &StabilityReport) -> Self {
        StabilityJson {
            bound: r.bound,
            range: r.range,
            stable_at: r.stable_at,
            sharp: r.sharp,
            verdict: r.verdict,
            witness: r.witness.as_ref().map(IntPartition::comma_string),
            witness_mults: r.witness_mults,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassValueJson {
    pub cycle_type: String,
    pub value: String,
}

pub fn class_function_json(chi: &ClassFunction) -> Vec<ClassValueJson> {
    chi.values
        .iter()
        .map(|(rho, v)| ClassValueJson {
            cycle_type: rho.comma_string(),
            value: exact_string(v),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryEntry {
    pub id: u32,
    pub name: String,
    pub status: Status,
    pub runtime_ms: u64,
    pub detail: String,
}

pub fn summary_json(results: &[CriterionResult]) -> Result<String> {
    let entries: Vec<SummaryEntry> = results
        .iter()
        .map(|r| SummaryEntry {
            id: r.id,
            name: r.name.clone(),
            status: r.status,
            runtime_ms: r.runtime_ms,
            detail: r.detail.clone(),
        })
        .collect();
    Ok(serde_json::to_string_pretty(&entries)?)
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}
