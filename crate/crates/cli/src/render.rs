//! Plain-text reports.

use std::fmt::Write;

use torquo::action::CanonicalStep;
use torquo::checks::{Status, VerifyReport};
use torquo::classify::Classification;
use torquo::topology::{QuotientSummary, ReducedHomology, Stratum, WedgeSummand};
use torquo::tutte::BivariatePolynomial;
use torquo::{FlatLattice, IntMatrix};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analyze(s: &QuotientSummary) -> String {
    let mut out = String::new();
    writeln!(out, "dimension: {}", s.dimension).unwrap();
    writeln!(out, "reduced Poincare polynomial: {}", s.poincare).unwrap();
    let betti: Vec<String> = s.betti.iter().map(|b| format!("b_{} = {}", b.degree, b.rank)).collect();
    if betti.is_empty() {
        writeln!(out, "reduced Betti numbers: all zero").unwrap();
    } else {
        writeln!(out, "reduced Betti numbers: {}", betti.join(", ")).unwrap();
    }
    writeln!(out, "simply connected: {}", yes_no(s.simply_connected)).unwrap();
    writeln!(out, "torsion free: {}", yes_no(s.torsion_free)).unwrap();
    out
}

pub fn tutte(dc: &BivariatePolynomial, oracle: &BivariatePolynomial, equal: bool) -> String {
    format!(
        "deletion-contraction: {dc}\nsubset expansion:     {oracle}\nequal: {}\n",
        yes_no(equal)
    )
}

pub fn flats(l: &FlatLattice) -> String {
    let mut out = String::new();
    for (i, f) in l.flats().iter().enumerate() {
        writeln!(out, "rank {}  mobius {:>4}  {}", f.rank, l.mobius_from_bottom(i), f.elements).unwrap();
    }
    writeln!(out, "{} flats, mobius {}", l.len(), l.mobius()).unwrap();
    out
}

pub fn singular(p: &ReducedHomology, strata: &[Stratum], wedge: &[WedgeSummand]) -> String {
    let mut out = String::new();
    writeln!(out, "singular set: {p}").unwrap();
    writeln!(out, "strata:").unwrap();
    if strata.is_empty() {
        writeln!(out, "  none").unwrap();
    }
    for s in strata {
        writeln!(out, "  {}  dimension {}", s.hyperplane.elements, s.dim).unwrap();
    }
    writeln!(out, "wedge summands:").unwrap();
    for w in wedge {
        writeln!(
            out,
            "  {}  multiplicity {}  S^{} * X_F, X_F = {}",
            w.flat.elements, w.multiplicity, w.sphere_dim, w.flat_quotient
        )
        .unwrap();
    }
    out
}

fn classification_into(out: &mut String, c: &Classification, indent: usize) {
    let pad = " ".repeat(indent);
    writeln!(out, "{pad}verdict: {}", c.verdict).unwrap();
    writeln!(out, "{pad}dimension: {}", c.dim).unwrap();
    writeln!(out, "{pad}reduced Poincare polynomial: {}", c.homology.poincare).unwrap();
    for e in &c.evidence {
        writeln!(out, "{pad}- {e}").unwrap();
    }
    for f in &c.factors {
        writeln!(out, "{pad}factor on {}:", f.columns).unwrap();
        classification_into(out, &f.classification, indent + 2);
    }
}

pub fn classification(c: &Classification) -> String {
    let mut out = String::new();
    classification_into(&mut out, c, 0);
    out
}

pub fn canonical(m: &IntMatrix, steps: &[CanonicalStep]) -> String {
    let mut out = format!("{m}\n");
    if !steps.is_empty() {
        writeln!(out, "steps:").unwrap();
    }
    for s in steps {
        writeln!(out, "  {}", serde_json::to_string(s).expect("steps serialize")).unwrap();
    }
    out
}

pub fn verify(r: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        writeln!(out, "{status} {}: {}", c.name, c.detail).unwrap();
    }
    out
}
