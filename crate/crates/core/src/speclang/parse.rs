//! Line-oriented parser. Each line yields at most one diagnostic, so an error
//! never cascades into the following lines.

use super::doc::*;
use crate::exact::{HalfInt, Phase, QComplex};
use crate::field::{Basis, Statistics};
use crate::lagrangian::structured::MuLabel;
use crate::umatrix::Part;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Fields,
    UMatrix,
    Lagrangian,
    Options,
}

type PResult<T> = Result<T, (usize, String)>;

/// Whitespace-separated words with their 1-based starting column.
fn words(s: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, (i, ch)) in s.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((k, i)),
            (true, Some((kc, bi))) => {
                out.push((base + kc, &s[bi..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((kc, bi)) = start {
        out.push((base + kc, &s[bi..]));
    }
    out
}

fn col_of(line: &str, sub: &str) -> usize {
    let off = sub.as_ptr() as usize - line.as_ptr() as usize;
    line[..off].chars().count() + 1
}

pub struct Parsed {
    pub doc: SpecDocument,
    pub spans: Spans,
}

pub fn parse_spec(text: &str) -> Result<Parsed, Vec<Diagnostic>> {
    let mut doc = SpecDocument::default();
    let mut spans = Spans::default();
    let mut diags = Vec::new();
    let mut section = Section::None;
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col0 = col_of(raw, trimmed);
        if trimmed.starts_with('[') && trimmed.ends_with(']') && !trimmed.contains('=') {
            section = match &trimmed[1..trimmed.len() - 1] {
                "fields" => Section::Fields,
                "umatrix" => Section::UMatrix,
                "lagrangian" => Section::Lagrangian,
                "options" => Section::Options,
                other => {
                    diags.push(Diagnostic::new(line_no, col0, format!("unknown section `{}`", other)));
                    Section::None
                }
            };
            continue;
        }
        let res = match section {
            Section::None => Err((col0, "declaration outside any section".to_string())),
            Section::Fields => parse_field(raw, trimmed).map(|d| {
                doc.fields.push(d);
                spans.fields.push((line_no, col0));
            }),
            Section::UMatrix => parse_u(raw, trimmed).map(|d| {
                doc.umatrix.push(d);
                spans.umatrix.push((line_no, col0));
            }),
            Section::Lagrangian => parse_l(raw, trimmed).map(|d| {
                doc.lagrangian.push(d);
                spans.lagrangian.push((line_no, col0));
            }),
            Section::Options => parse_option(raw, trimmed, &mut doc.options),
        };
        if let Err((col, msg)) = res {
            diags.push(Diagnostic::new(line_no, col, msg));
            if diags.len() >= MAX_DIAGNOSTICS {
                break;
            }
        }
    }
    if doc.fields.is_empty() && diags.is_empty() {
        diags.push(Diagnostic::new(1, 1, "no fields declared"));
    }
    if diags.is_empty() {
        Ok(Parsed { doc, spans })
    } else {
        Err(finish(diags))
    }
}

/// Parses and builds in one step.
pub fn load(text: &str) -> Result<(SpecDocument, Model), Vec<Diagnostic>> {
    let p = parse_spec(text)?;
    let m = p.doc.build(&p.spans)?;
    Ok((p.doc, m))
}

fn parse_half(s: &str, col: usize) -> PResult<HalfInt> {
    HalfInt::parse(s).ok_or((col, format!("expected a non-negative half-integer, found `{}`", s)))
}

fn parse_attr(attrs: &mut Attrs, key: &str, val: &str, col: usize) -> PResult<()> {
    let bad = |what: &str| (col, format!("invalid {} `{}`", what, val));
    match key {
        "charge" => {
            let q = QComplex::parse(val).filter(QComplex::is_real).ok_or_else(|| bad("charge"))?;
            attrs.charge = Some(q.re);
        }
        "stats" => {
            attrs.stats = Some(match val {
                "Bose" => Statistics::Bose,
                "Fermi" => Statistics::Fermi,
                "Unknown" => Statistics::Unknown,
                _ => return Err(bad("statistics")),
            })
        }
        "basis" => {
            attrs.basis = Some(match val {
                "native" => Basis::Native,
                "adapted" => Basis::Adapted,
                _ => return Err(bad("basis")),
            })
        }
        "tphase" => attrs.tphase = Some(Phase::parse(val).ok_or_else(|| bad("phase"))?),
        "labels" => attrs.labels = Some(val.split(',').map(str::to_string).collect()),
        "display" => attrs.display = Some(val.to_string()),
        _ => return Err((col, format!("unknown attribute `{}`", key))),
    }
    Ok(())
}

fn parse_field(raw: &str, line: &str) -> PResult<FieldDecl> {
    let ws = words(line, col_of(raw, line));
    let (kcol, kw) = ws[0];
    let name = ws.get(1).map(|w| w.1.to_string()).ok_or((kcol, format!("`{}` needs a name", kw)))?;
    match kw {
        "template" => {
            let names: Vec<String> = ws[2..].iter().map(|w| w.1.to_string()).collect();
            Ok(FieldDecl::Template { template: name, names })
        }
        "field" | "set" => {
            let mut attrs = Attrs::default();
            let (mut rep, mut spin, mut parity, mut charge) = (None, None, false, false);
            for &(col, w) in &ws[2..] {
                let (key, val) = w.split_once('=').ok_or((col, format!("expected key=value, found `{}`", w)))?;
                match (kw, key) {
                    ("field", "rep") => {
                        let inner = val
                            .strip_prefix('(')
                            .and_then(|v| v.strip_suffix(')'))
                            .ok_or((col, format!("expected rep=(A,B), found `{}`", val)))?;
                        let (a, b) = inner.split_once(',').ok_or((col, "expected rep=(A,B)".to_string()))?;
                        rep = Some((parse_half(a.trim(), col)?, parse_half(b.trim(), col)?));
                    }
                    ("field", "spin") => spin = Some(parse_half(val, col)?),
                    ("field", "double") => {
                        for d in val.split(',') {
                            match d {
                                "parity" => parity = true,
                                "charge" => charge = true,
                                _ => return Err((col, format!("unknown doubling `{}`", d))),
                            }
                        }
                    }
                    _ => parse_attr(&mut attrs, key, val, col)?,
                }
            }
            if kw == "set" {
                return Ok(FieldDecl::Set { name, attrs });
            }
            let (a, b) = rep.ok_or((kcol, "field needs rep=(A,B)".to_string()))?;
            let spin = spin.ok_or((kcol, "field needs spin=".to_string()))?;
            Ok(FieldDecl::Field { name, a, b, parity, charge, spin, attrs })
        }
        _ => Err((kcol, format!("expected `template`, `field` or `set`, found `{}`", kw))),
    }
}

fn parse_mu(s: &str) -> Option<u8> {
    match s {
        "0" => Some(0),
        "1" => Some(1),
        "2" => Some(2),
        "3" => Some(3),
        _ => None,
    }
}

fn parse_value(s: &str, col: usize) -> PResult<QComplex> {
    QComplex::parse(s).ok_or((col, format!("invalid exact number `{}`", s)))
}

fn parse_u(raw: &str, line: &str) -> PResult<UDecl> {
    let c0 = col_of(raw, line);
    let rest = line.strip_prefix('U').ok_or((c0, "expected U0..U3".to_string()))?;
    let mu = rest.get(..1).and_then(parse_mu).ok_or((c0, "expected U0..U3".to_string()))?;
    let rest = &rest[1..];
    let (lhs, rhs) = rest.split_once('=').ok_or((c0, "expected `=`".to_string()))?;
    let rcol = col_of(raw, rhs.trim_start());
    let rhs = rhs.trim();
    if lhs.trim().is_empty() {
        let body = rhs
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or((rcol, "matrix literal must be [row; row; …]".to_string()))?;
        let mut rows = Vec::new();
        for row in body.split(';') {
            let mut r = Vec::new();
            for (col, w) in words(row, col_of(raw, row)) {
                r.push(parse_value(w, col)?);
            }
            rows.push(r);
        }
        return Ok(UDecl::Matrix { mu, rows });
    }
    let idx = lhs
        .trim()
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or((c0 + 2, "expected [row, col]".to_string()))?;
    let (row, col) = idx.split_once(',').ok_or((c0 + 2, "expected [row, col]".to_string()))?;
    let ws = words(rhs, rcol);
    let (vcol, v) = ws.first().copied().ok_or((rcol, "missing value".to_string()))?;
    let value = parse_value(v, vcol)?;
    let skew = match ws.get(1) {
        None => false,
        Some((_, "skew")) if ws.len() == 2 => true,
        Some(&(col, w)) => return Err((col, format!("unexpected `{}`", w))),
    };
    Ok(UDecl::Entry { mu, row: row.trim().to_string(), col: col.trim().to_string(), value, skew })
}

fn parse_slot(w: &str, col: usize) -> PResult<SlotDecl> {
    let (name, conj) = match w.strip_suffix('*') {
        Some(n) => (n, true),
        None => (w, false),
    };
    if name.is_empty() || name.starts_with('U') && name.contains('^') {
        return Err((col, format!("expected a field name, found `{}`", w)));
    }
    let field = if name == "chi" { None } else { Some(name.to_string()) };
    Ok(SlotDecl { field, conj })
}

fn parse_chain(w: &str, col: usize) -> PResult<ChainDecl> {
    let (head, idx) = w.split_once('^').ok_or((col, format!("expected U^μ, UA^μ or US^μ, found `{}`", w)))?;
    let part = match head {
        "U" => None,
        "UA" => Some(Part::A),
        "US" => Some(Part::S),
        _ => return Err((col, format!("expected U, UA or US, found `{}`", head))),
    };
    let mu = match (parse_mu(idx), idx.chars().collect::<Vec<_>>().as_slice()) {
        (Some(m), _) => MuLabel::Fixed(m),
        (None, [c]) if c.is_ascii_lowercase() => MuLabel::Sum(*c),
        _ => return Err((col, format!("index must be 0..3 or a letter, found `{}`", idx))),
    };
    Ok(ChainDecl { part, mu })
}

fn parse_l(raw: &str, line: &str) -> PResult<LDecl> {
    let c0 = col_of(raw, line);
    if line == "kinematic" {
        return Ok(LDecl::Kinematic);
    }
    let rest = line.strip_prefix("term").ok_or((c0, "expected `kinematic` or `term`".to_string()))?;
    let open = rest.find('(').ok_or((c0, "term needs at least one (segment)".to_string()))?;
    let ctext = rest[..open].trim();
    if ctext.is_empty() {
        return Err((c0, "term needs a coefficient".to_string()));
    }
    let coeff = parse_value(ctext, col_of(raw, ctext))?;
    let mut segments = Vec::new();
    let mut tail = &rest[open..];
    while !tail.trim().is_empty() {
        let t = tail.trim_start();
        let tcol = col_of(raw, t);
        let body_end = t.find(')').ok_or((tcol, "unclosed `(`".to_string()))?;
        if !t.starts_with('(') {
            return Err((tcol, "expected `(`".to_string()));
        }
        let body = &t[1..body_end];
        let ws = words(body, col_of(raw, body));
        if ws.len() < 2 {
            return Err((tcol, "segment needs two field slots".to_string()));
        }
        let left = parse_slot(ws[0].1, ws[0].0)?;
        let right = parse_slot(ws[ws.len() - 1].1, ws[ws.len() - 1].0)?;
        let chain = ws[1..ws.len() - 1].iter().map(|&(c, w)| parse_chain(w, c)).collect::<PResult<Vec<_>>>()?;
        segments.push(SegDecl { left, chain, right });
        tail = &t[body_end + 1..];
    }
    Ok(LDecl::Term { coeff, segments })
}

fn parse_option(raw: &str, line: &str, opts: &mut Options) -> PResult<()> {
    let c0 = col_of(raw, line);
    let (k, v) = line.split_once('=').ok_or((c0, "expected key = value".to_string()))?;
    let (k, v) = (k.trim(), v.trim());
    let vcol = col_of(raw, v);
    let dup = |set: bool| if set { Err((c0, format!("duplicate option `{}`", k))) } else { Ok(()) };
    match k {
        "phase-s" => {
            dup(opts.phase_s.is_some())?;
            opts.phase_s = Some(Phase::parse(v).ok_or((vcol, format!("invalid phase `{}`", v)))?);
        }
        "phase-c" => {
            dup(opts.phase_c.is_some())?;
            opts.phase_c = Some(Phase::parse(v).ok_or((vcol, format!("invalid phase `{}`", v)))?);
        }
        "normal" => {
            dup(opts.normal.is_some())?;
            opts.normal = Some(Normal::parse(v).ok_or((vcol, format!("normal must be t, x, y or z, found `{}`", v)))?);
        }
        _ => return Err((c0, format!("unknown option `{}`", k))),
    }
    Ok(())
}
