//! Canonical text form of a document; parsing it gives the document back.

use std::fmt::Write;

use super::doc::*;
use crate::exact::fmt_rational;
use crate::field::Basis;
use crate::umatrix::Part;

fn attrs_text(a: &Attrs) -> String {
    let mut s = String::new();
    if let Some(q) = &a.charge {
        write!(s, " charge={}", fmt_rational(q)).unwrap();
    }
    if let Some(st) = a.stats {
        write!(s, " stats={}", st).unwrap();
    }
    if let Some(b) = a.basis {
        s.push_str(match b {
            Basis::Native => " basis=native",
            Basis::Adapted => " basis=adapted",
        });
    }
    if let Some(p) = &a.tphase {
        write!(s, " tphase={}", p).unwrap();
    }
    if let Some(l) = &a.labels {
        write!(s, " labels={}", l.join(",")).unwrap();
    }
    if let Some(d) = &a.display {
        write!(s, " display={}", d).unwrap();
    }
    s
}

fn slot_text(s: &SlotDecl) -> String {
    let name = s.field.as_deref().unwrap_or("chi");
    if s.conj {
        format!("{}*", name)
    } else {
        name.to_string()
    }
}

fn chain_text(c: &ChainDecl) -> String {
    let head = match c.part {
        None => "U",
        Some(Part::A) => "UA",
        Some(Part::S) => "US",
    };
    format!("{}^{}", head, c.mu)
}

pub fn format_spec(doc: &SpecDocument) -> String {
    let mut out = String::from("[fields]\n");
    for f in &doc.fields {
        match f {
            FieldDecl::Template { template, names } => {
                writeln!(out, "template {} {}", template, names.join(" ")).unwrap();
            }
            FieldDecl::Field { name, a, b, parity, charge, spin, attrs } => {
                let mut dbl = Vec::new();
                if *parity {
                    dbl.push("parity");
                }
                if *charge {
                    dbl.push("charge");
                }
                let dbl = if dbl.is_empty() { String::new() } else { format!(" double={}", dbl.join(",")) };
                writeln!(out, "field {} rep=({},{}) spin={}{}{}", name, a, b, spin, dbl, attrs_text(attrs)).unwrap();
            }
            FieldDecl::Set { name, attrs } => writeln!(out, "set {}{}", name, attrs_text(attrs)).unwrap(),
        }
    }
    if !doc.umatrix.is_empty() {
        out.push_str("\n[umatrix]\n");
    }
    for u in &doc.umatrix {
        match u {
            UDecl::Matrix { mu, rows } => {
                let body: Vec<String> =
                    rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
                writeln!(out, "U{} = [{}]", mu, body.join("; ")).unwrap();
            }
            UDecl::Entry { mu, row, col, value, skew } => {
                let skew = if *skew { " skew" } else { "" };
                writeln!(out, "U{}[{}, {}] = {}{}", mu, row, col, value, skew).unwrap();
            }
        }
    }
    if !doc.lagrangian.is_empty() {
        out.push_str("\n[lagrangian]\n");
    }
    for l in &doc.lagrangian {
        match l {
            LDecl::Kinematic => out.push_str("kinematic\n"),
            LDecl::Term { coeff, segments } => {
                let segs: Vec<String> = segments
                    .iter()
                    .map(|s| {
                        let mut parts = vec![slot_text(&s.left)];
                        parts.extend(s.chain.iter().map(chain_text));
                        parts.push(slot_text(&s.right));
                        format!("({})", parts.join(" "))
                    })
                    .collect();
                writeln!(out, "term {} {}", coeff, segs.join(" ")).unwrap();
            }
        }
    }
    let o = &doc.options;
    if o.phase_s.is_some() || o.phase_c.is_some() || o.normal.is_some() {
        out.push_str("\n[options]\n");
    }
    if let Some(p) = &o.phase_s {
        writeln!(out, "phase-s = {}", p).unwrap();
    }
    if let Some(p) = &o.phase_c {
        writeln!(out, "phase-c = {}", p).unwrap();
    }
    if let Some(n) = o.normal {
        writeln!(out, "normal = {}", n.name()).unwrap();
    }
    out
}
