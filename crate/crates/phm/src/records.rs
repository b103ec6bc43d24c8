//! Line-delimited JSON records for reports, subspaces and certificates.

use std::fmt::Write as _;

use phm_core::checks::CoinvariantSummary;
use phm_core::fundamental::{InverseSource, IsoCertificate};
use phm_core::{CheckEntry, Matrix, Report, Status, Subspace};
use serde::Serialize;

use crate::bundle::SparseBlock;
use crate::rational;

#[derive(Serialize)]
struct WitnessRecord {
    basis: Vec<usize>,
    residual: Vec<(usize, String)>,
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    law: &'a str,
    indices: &'a [usize],
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<bool>,
}

fn check_record(e: &CheckEntry) -> CheckRecord<'_> {
    let mut rec = CheckRecord {
        law: &e.law,
        indices: &e.indices,
        status: "pass",
        witness: None,
        reason: None,
        value: None,
    };
    match &e.status {
        Status::Pass => {}
        Status::Fail(w) => {
            rec.status = "fail";
            rec.witness = Some(WitnessRecord {
                basis: w.basis.clone(),
                residual: w
                    .residual
                    .iter()
                    .map(|(i, x)| (*i, rational::format(x)))
                    .collect(),
            });
        }
        Status::Skipped(reason) => {
            rec.status = "skipped";
            rec.reason = Some(reason);
        }
        Status::Flag(v) => {
            rec.status = "flag";
            rec.value = Some(*v);
        }
    }
    rec
}

fn line(out: &mut String, value: &impl Serialize) {
    out.push_str(&serde_json::to_string(value).expect("record serializes"));
    out.push('\n');
}

/// One line per entry, in report order.
pub fn report_lines(r: &Report) -> String {
    let mut out = String::new();
    for e in &r.entries {
        line(&mut out, &check_record(e));
    }
    out
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    law: &'a str,
    status: &'static str,
    error: String,
}

/// A certification that could not run to completion.
pub fn error_line(stage: &str, err: &phm_core::Error) -> String {
    let mut out = String::new();
    line(
        &mut out,
        &ErrorRecord {
            law: stage,
            status: "error",
            error: err.to_string(),
        },
    );
    out
}

#[derive(Serialize)]
struct SubspaceRecord<'a> {
    subspace: &'a str,
    degree: usize,
    dim: usize,
    basis: Vec<Vec<String>>,
}

/// One line per degree with the canonical basis of the subspace.
pub fn subspace_lines(name: &str, spaces: &[&Subspace]) -> String {
    let mut out = String::new();
    for (degree, s) in spaces.iter().enumerate() {
        let basis = s
            .basis()
            .iter()
            .map(|v| v.iter().map(rational::format).collect())
            .collect();
        line(
            &mut out,
            &SubspaceRecord {
                subspace: name,
                degree,
                dim: s.dim(),
                basis,
            },
        );
    }
    out
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    summary: &'a str,
    dims: &'a [usize],
}

pub fn summary_lines(s: &CoinvariantSummary) -> String {
    let mut out = String::new();
    for (name, dims) in [
        ("module.coinvariants", &s.module_coinvariants),
        ("module.annihilator", &s.module_annihilator),
        ("module.acoinvariants", &s.module_acoinvariants),
        ("algebra.coinvariants", &s.algebra_coinvariants),
        ("algebra.center", &s.algebra_center),
        ("algebra.base", &s.algebra_base),
    ] {
        line(
            &mut out,
            &SummaryRecord {
                summary: name,
                dims,
            },
        );
    }
    out
}

#[derive(Serialize)]
struct CertificateRecord {
    certificate: &'static str,
    hypotheses: &'static str,
    isomorphism: &'static str,
    morphism: bool,
    inverse_source: &'static str,
    phi_algebra_map: bool,
    phi_central: bool,
    diamond_trivial_on_module: bool,
    diamond_trivial_on_algebra: bool,
    tensor_dims: Vec<usize>,
    module_dims: Vec<usize>,
    forward: Vec<SparseBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse: Option<Vec<SparseBlock>>,
}

fn blocks(ms: &[Matrix]) -> Vec<SparseBlock> {
    crate::bundle::sparse_all(ms)
}

pub fn hypotheses_text(c: &IsoCertificate) -> &'static str {
    if c.hypotheses_hold {
        "satisfied"
    } else {
        "not satisfied"
    }
}

pub fn isomorphism_text(c: &IsoCertificate) -> &'static str {
    if c.iso_holds && c.morphism {
        "verified"
    } else {
        "not verified"
    }
}

/// The check lines of the certificate followed by one closing record.
pub fn certificate_lines(c: &IsoCertificate) -> String {
    let mut out = report_lines(&c.report);
    let inverse_source = match c.inverse_source {
        InverseSource::Formula => "formula",
        InverseSource::ExactInversion => "exact_inversion",
        InverseSource::None => "none",
    };
    line(
        &mut out,
        &CertificateRecord {
            certificate: "fundamental_map",
            hypotheses: hypotheses_text(c),
            isomorphism: isomorphism_text(c),
            morphism: c.morphism,
            inverse_source,
            phi_algebra_map: c.flags.phi_algebra_map,
            phi_central: c.flags.phi_central,
            diamond_trivial_on_module: c.flags.diamond_trivial_on_module,
            diamond_trivial_on_algebra: c.flags.diamond_trivial_on_algebra,
            tensor_dims: c.tensor_dims.clone(),
            module_dims: c.module_dims.clone(),
            forward: blocks(&c.forward),
            inverse: c.inverse.as_deref().map(blocks),
        },
    );
    out
}

/// `passed/failed/skipped` counts, for the human summary.
pub fn tally(r: &Report) -> String {
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for e in &r.entries {
        match e.status {
            Status::Pass => pass += 1,
            Status::Fail(_) => fail += 1,
            Status::Skipped(_) => skip += 1,
            Status::Flag(_) => {}
        }
    }
    let mut s = format!("{pass} passed, {fail} failed, {skip} skipped");
    if let Some(first) = r.failures().next() {
        let _ = write!(s, "; first failure: {} at {:?}", first.law, first.indices);
    }
    s
}
