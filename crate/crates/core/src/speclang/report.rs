//! JSON and text renderings of a pipeline report.
//!
//! JSON schema `cpt-kernel/report/v1`, keys in this order:
//!
//! ```text
//! schema      string
//! status      "pass" | "fail"
//! system      { dimension, fields: [{ name, rep, spin, charge, components,
//!               declared, statistics }] }
//! checks      [{ id, status, witnesses: [{ location, expected, found, details? }] }]
//! artifacts   { generator: { normal, schematic, reduced: [string] } | null,
//!               fundamental_partition: { fundamental, non_fundamental } | null,
//!               brackets: [{ sector, kind, relation, components: [label] }] }
//! notes       [string]
//! ```
//!
//! Every number is an exact rational or complex rational written as a string.

use serde::Serialize;

use super::pipeline::Report;
use crate::exact::fmt_rational;
use crate::lagrangian::brackets::{BracketKind, Sector};
use crate::verdict::{Status, Witness};

pub const SCHEMA: &str = "cpt-kernel/report/v1";

#[derive(Serialize)]
struct JField {
    name: String,
    rep: String,
    spin: String,
    charge: String,
    components: usize,
    declared: String,
    statistics: String,
}

#[derive(Serialize)]
struct JSystem {
    dimension: usize,
    fields: Vec<JField>,
}

#[derive(Serialize)]
struct JCheck<'a> {
    id: &'a str,
    status: Status,
    witnesses: &'a [Witness],
}

#[derive(Serialize)]
struct JGenerator {
    normal: Vec<String>,
    schematic: String,
    reduced: Vec<String>,
}

#[derive(Serialize)]
struct JPartition {
    fundamental: Vec<String>,
    non_fundamental: Vec<String>,
}

#[derive(Serialize)]
struct JBracket {
    sector: Sector,
    kind: BracketKind,
    relation: String,
    components: Vec<String>,
}

#[derive(Serialize)]
struct JArtifacts {
    generator: Option<JGenerator>,
    fundamental_partition: Option<JPartition>,
    brackets: Vec<JBracket>,
}

#[derive(Serialize)]
struct JReport<'a> {
    schema: &'static str,
    status: &'static str,
    system: JSystem,
    checks: Vec<JCheck<'a>>,
    artifacts: JArtifacts,
    notes: &'a [String],
}

fn rep_text(f: &crate::field::FieldSpec) -> String {
    let b = &f.block;
    let mut s = format!("({},{})", b.a, b.b);
    if b.parity_doubled {
        s = format!("{}⊕({},{})", s, b.b, b.a);
    }
    if b.charge_doubled {
        s.push_str(" charge-doubled");
    }
    s
}

fn status_word(r: &Report) -> &'static str {
    if r.all_pass() {
        "pass"
    } else {
        "fail"
    }
}

pub fn to_json(r: &Report) -> String {
    let sys = &r.model.sys;
    let fields = sys
        .fields()
        .iter()
        .enumerate()
        .map(|(k, f)| JField {
            name: f.name.clone(),
            rep: rep_text(f),
            spin: f.spin.to_string(),
            charge: fmt_rational(&f.charge),
            components: f.dimension(),
            declared: f.statistics.to_string(),
            statistics: r.statistics.fields[k].to_string(),
        })
        .collect();
    let a = &r.artifacts;
    let generator = a.generator.as_ref().map(|g| JGenerator {
        normal: g.normal.iter().map(|c| c.to_string()).collect(),
        schematic: a.schematic.clone().unwrap_or_default(),
        reduced: a.component_form.clone(),
    });
    let fundamental_partition =
        a.partition.as_ref().map(|(f, n)| JPartition { fundamental: f.clone(), non_fundamental: n.clone() });
    let brackets = a
        .brackets
        .iter()
        .map(|b| JBracket {
            sector: b.sector,
            kind: b.kind,
            relation: b.display(),
            components: b.components.iter().map(|&k| sys.component(k).label.clone()).collect(),
        })
        .collect();
    let report = JReport {
        schema: SCHEMA,
        status: status_word(r),
        system: JSystem { dimension: sys.dimension(), fields },
        checks: r.checks.iter().map(|c| JCheck { id: &c.id, status: c.verdict.status, witnesses: &c.verdict.witnesses }).collect(),
        artifacts: JArtifacts { generator, fundamental_partition, brackets },
        notes: &r.notes,
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}

fn paint(status: Status, color: bool) -> String {
    let word = status.to_string();
    if !color {
        return word;
    }
    let code = match status {
        Status::Pass => "32",
        Status::Fail => "31",
        Status::Indeterminate => "33",
        Status::Skipped => "36",
    };
    format!("\x1b[{}m{}\x1b[0m", code, word)
}

pub fn to_text(r: &Report, color: bool) -> String {
    let mut out = String::new();
    let sys = &r.model.sys;
    out.push_str(&format!("system: {} components\n", sys.dimension()));
    for (k, f) in sys.fields().iter().enumerate() {
        out.push_str(&format!(
            "  {} {} spin {} charge {} -> {}\n",
            f.name,
            rep_text(f),
            f.spin,
            fmt_rational(&f.charge),
            r.statistics.fields[k]
        ));
    }
    for c in &r.checks {
        out.push_str(&format!("{:<22} {}\n", c.id, paint(c.verdict.status, color)));
        for w in &c.verdict.witnesses {
            out.push_str(&format!("    {}\n", w));
            for (k, v) in &w.details {
                out.push_str(&format!("      {} = {}\n", k, v));
            }
        }
    }
    let a = &r.artifacts;
    if let Some(s) = &a.schematic {
        out.push_str(&format!("generator: {}\n", s));
        for l in &a.component_form {
            out.push_str(&format!("    {}\n", l));
        }
    }
    if let Some((f, n)) = &a.partition {
        out.push_str(&format!("fundamental: {}\n", f.join(", ")));
        out.push_str(&format!("non-fundamental: {}\n", n.join(", ")));
    }
    for b in &a.brackets {
        out.push_str(&format!("bracket: {}\n", b.display()));
    }
    for n in &r.notes {
        out.push_str(&format!("note: {}\n", n));
    }
    out.push_str(&format!("status: {}\n", status_word(r)));
    out
}

/// Single-artifact text for `derive generators`.
pub fn generators_text(r: &Report) -> String {
    let a = &r.artifacts;
    let mut out = String::new();
    match &a.schematic {
        Some(s) => {
            out.push_str(s);
            out.push('\n');
            for l in &a.component_form {
                out.push_str(&format!("    {}\n", l));
            }
        }
        None => out.push_str("no generator\n"),
    }
    if let Some((f, n)) = &a.partition {
        out.push_str(&format!("fundamental: {}\n", f.join(", ")));
        out.push_str(&format!("non-fundamental: {}\n", n.join(", ")));
    }
    out
}

pub fn commutators_text(r: &Report) -> String {
    let sys = &r.model.sys;
    let mut out = String::new();
    for b in &r.artifacts.brackets {
        out.push_str(&b.display());
        out.push('\n');
        let labels: Vec<&str> = b.components.iter().map(|&k| sys.component(k).label.as_str()).collect();
        out.push_str(&format!("    over {}\n", labels.join(" ")));
        for (mu, m) in b.matrices.iter().enumerate() {
            if !m.is_zero() {
                out.push_str(&format!("    μ={}:\n", mu));
                for line in m.to_string().lines() {
                    out.push_str(&format!("      {}\n", line));
                }
            }
        }
    }
    out
}
