//! Parsed spec documents and their conversion to a checked model.

use std::fmt;

use num_rational::BigRational;

use super::templates::{self, NamedBlock};
use crate::exact::{CMatrix, HalfInt, Phase, QComplex, Ring};
use crate::field::{Basis, FSystem, FieldError, FieldSpec, Phases, Statistics};
use crate::lagrangian::generator::time_normal;
use crate::lagrangian::structured::{build_kinematic, ChainElem, MuLabel, Segment, Slot, Term};
use crate::reps::RepBlock;
use crate::umatrix::{Part, UMatrixSet};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl Diagnostic {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        Diagnostic { line, col, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

pub const MAX_DIAGNOSTICS: usize = 20;

/// Optional per-field attributes, shared by `field` and `set` lines.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Attrs {
    pub charge: Option<BigRational>,
    pub stats: Option<Statistics>,
    pub basis: Option<Basis>,
    pub tphase: Option<Phase>,
    pub labels: Option<Vec<String>>,
    pub display: Option<String>,
}

impl Attrs {
    fn apply(&self, mut f: FieldSpec) -> FieldSpec {
        if let Some(q) = &self.charge {
            f.charge = q.clone();
        }
        if let Some(s) = self.stats {
            f.statistics = s;
        }
        if let Some(b) = self.basis {
            f.basis = b;
        }
        if let Some(p) = &self.tphase {
            f.t_phase = p.clone();
        }
        if let Some(l) = &self.labels {
            f.labels = Some(l.clone());
        }
        if let Some(d) = &self.display {
            f.display = Some(d.clone());
        }
        f
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDecl {
    Template { template: String, names: Vec<String> },
    Field { name: String, a: HalfInt, b: HalfInt, parity: bool, charge: bool, spin: HalfInt, attrs: Attrs },
    Set { name: String, attrs: Attrs },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UDecl {
    /// `U0 = [a b; c d]` replaces the whole matrix.
    Matrix { mu: u8, rows: Vec<Vec<QComplex>> },
    /// `U0[row, col] = v`, with `skew` also setting [col, row] = −v*.
    Entry { mu: u8, row: String, col: String, value: QComplex, skew: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotDecl {
    /// `None` is the whole general field, written `chi`.
    pub field: Option<String>,
    pub conj: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecl {
    /// `None` is the full U^μ.
    pub part: Option<Part>,
    pub mu: MuLabel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegDecl {
    pub left: SlotDecl,
    pub chain: Vec<ChainDecl>,
    pub right: SlotDecl,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LDecl {
    Kinematic,
    Term { coeff: QComplex, segments: Vec<SegDecl> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normal {
    T,
    X,
    Y,
    Z,
}

impl Normal {
    pub fn parse(s: &str) -> Option<Normal> {
        Some(match s {
            "t" => Normal::T,
            "x" => Normal::X,
            "y" => Normal::Y,
            "z" => Normal::Z,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Normal::T => "t",
            Normal::X => "x",
            Normal::Y => "y",
            Normal::Z => "z",
        }
    }

    pub fn vector(self) -> [QComplex; 4] {
        let k = match self {
            Normal::T => return time_normal(),
            Normal::X => 1,
            Normal::Y => 2,
            Normal::Z => 3,
        };
        std::array::from_fn(|mu| QComplex::from_int((mu == k) as i64))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Options {
    pub phase_s: Option<Phase>,
    pub phase_c: Option<Phase>,
    pub normal: Option<Normal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SpecDocument {
    pub fields: Vec<FieldDecl>,
    pub umatrix: Vec<UDecl>,
    pub lagrangian: Vec<LDecl>,
    pub options: Options,
}

/// Source positions of each declaration, parallel to the document vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Spans {
    pub fields: Vec<(usize, usize)>,
    pub umatrix: Vec<(usize, usize)>,
    pub lagrangian: Vec<(usize, usize)>,
}

/// One Lagrangian term as written, before well-formedness checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelTerm {
    pub name: String,
    pub term: Term,
    pub kinematic: bool,
}

#[derive(Clone, Debug)]
pub struct Model {
    pub sys: FSystem,
    pub u: UMatrixSet,
    pub named: Vec<NamedBlock>,
    pub terms: Vec<ModelTerm>,
    pub phases: Phases,
    pub normal: Normal,
}

fn at(spans: &[(usize, usize)], k: usize) -> (usize, usize) {
    spans.get(k).copied().unwrap_or((1, 1))
}

struct Placed {
    fields: Vec<FieldSpec>,
    origin: Vec<usize>,
    blocks: Vec<(usize, [CMatrix; 4])>,
    named: Vec<NamedBlock>,
}

fn place_fields(doc: &SpecDocument, spans: &Spans, diags: &mut Vec<Diagnostic>) -> Placed {
    let mut p = Placed { fields: Vec::new(), origin: Vec::new(), blocks: Vec::new(), named: Vec::new() };
    for (k, decl) in doc.fields.iter().enumerate() {
        let (line, col) = at(&spans.fields, k);
        match decl {
            FieldDecl::Template { template, names } => match templates::instantiate(template, names) {
                Some(t) => {
                    let first = p.fields.len();
                    p.blocks.push((first, t.u));
                    p.named.extend(t.named);
                    for f in t.fields {
                        p.fields.push(f);
                        p.origin.push(k);
                    }
                }
                None => diags.push(Diagnostic::new(line, col, format!("unknown template `{}` or wrong field count", template))),
            },
            FieldDecl::Field { name, a, b, parity, charge, spin, attrs } => {
                let block = RepBlock::new(*a, *b, *parity, *charge);
                let f = FieldSpec::new(name.clone(), block, *spin);
                p.fields.push(attrs.apply(f));
                p.origin.push(k);
                p.blocks.push((p.fields.len() - 1, std::array::from_fn(|_| CMatrix::zeros(block.dimension(), block.dimension()))));
            }
            FieldDecl::Set { name, attrs } => match p.fields.iter().position(|f| &f.name == name) {
                Some(j) => p.fields[j] = attrs.apply(p.fields[j].clone()),
                None => diags.push(Diagnostic::new(line, col, format!("`set` names unknown field `{}`", name))),
            },
        }
    }
    p
}

fn field_error_target(e: &FieldError) -> Option<&str> {
    match e {
        FieldError::Empty => None,
        FieldError::DuplicateName(n) | FieldError::AdaptedUnsupported(n) | FieldError::Rep(n, _) => Some(n),
        FieldError::SpinBound { name, .. } | FieldError::LabelCount { name, .. } => Some(name),
    }
}

impl SpecDocument {
    /// Semantic pass: builds the field system, U^μ, and the Lagrangian terms.
    pub fn build(&self, spans: &Spans) -> Result<Model, Vec<Diagnostic>> {
        let mut diags = Vec::new();
        let placed = place_fields(self, spans, &mut diags);
        if !diags.is_empty() {
            return Err(finish(diags));
        }
        let sys = match FSystem::new(placed.fields.clone()) {
            Ok(s) => s,
            Err(e) => {
                let pos = field_error_target(&e)
                    .and_then(|n| placed.fields.iter().position(|f| f.name == n))
                    .map(|j| at(&spans.fields, placed.origin[j]))
                    .unwrap_or((1, 1));
                diags.push(Diagnostic::new(pos.0, pos.1, e.to_string()));
                return Err(finish(diags));
            }
        };
        let dim = sys.dimension();
        let mut ms: [CMatrix; 4] = std::array::from_fn(|_| CMatrix::zeros(dim, dim));
        for (first, block) in &placed.blocks {
            let off = sys.range(*first).start;
            for mu in 0..4 {
                for (r, c, v) in block[mu].entries() {
                    ms[mu].set(off + r, off + c, v.clone());
                }
            }
        }
        let label_index = |l: &str| sys.components().iter().position(|c| c.label == l);
        for (k, decl) in self.umatrix.iter().enumerate() {
            let (line, col) = at(&spans.umatrix, k);
            match decl {
                UDecl::Matrix { mu, rows } => {
                    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                        diags.push(Diagnostic::new(line, col, format!("U{} literal must be {}×{}", mu, dim, dim)));
                        continue;
                    }
                    ms[*mu as usize] = CMatrix::from_rows(rows.clone()).expect("checked shape");
                }
                UDecl::Entry { mu, row, col: c, value, skew } => {
                    let (Some(r), Some(cc)) = (label_index(row), label_index(c)) else {
                        let bad = if label_index(row).is_none() { row } else { c };
                        diags.push(Diagnostic::new(line, col, format!("unknown component `{}`", bad)));
                        continue;
                    };
                    let m = &mut ms[*mu as usize];
                    m.set(r, cc, value.clone());
                    if *skew {
                        m.set(cc, r, -value.conj());
                    }
                }
            }
        }
        let mut terms = Vec::new();
        let mut dyn_count = 0;
        for (k, decl) in self.lagrangian.iter().enumerate() {
            let (line, col) = at(&spans.lagrangian, k);
            match decl {
                LDecl::Kinematic => {
                    for (j, t) in build_kinematic().into_iter().enumerate() {
                        terms.push(ModelTerm { name: format!("kinematic[{}]", j), term: t, kinematic: true });
                    }
                }
                LDecl::Term { coeff, segments } => match lower_term(coeff, segments, &sys) {
                    Ok(t) => {
                        terms.push(ModelTerm { name: format!("dynamic[{}]", dyn_count), term: t, kinematic: false });
                        dyn_count += 1;
                    }
                    Err(name) => diags.push(Diagnostic::new(line, col, format!("unknown field `{}` in term", name))),
                },
            }
        }
        if !diags.is_empty() {
            return Err(finish(diags));
        }
        let phases = Phases {
            s: self.options.phase_s.clone().unwrap_or_else(Phase::one),
            c: self.options.phase_c.clone().unwrap_or_else(Phase::one),
        };
        Ok(Model {
            sys,
            u: UMatrixSet::new(ms),
            named: placed.named,
            terms,
            phases,
            normal: self.options.normal.unwrap_or(Normal::T),
        })
    }
}

pub(crate) fn finish(mut diags: Vec<Diagnostic>) -> Vec<Diagnostic> {
    diags.sort();
    diags.truncate(MAX_DIAGNOSTICS);
    diags
}

fn lower_term(coeff: &QComplex, segments: &[SegDecl], sys: &FSystem) -> Result<Term, String> {
    let slot = |s: &SlotDecl| -> Result<Slot, String> {
        let base = match &s.field {
            None => Slot::all(),
            Some(n) => Slot::of(sys.field(n).ok_or_else(|| n.clone())?.0),
        };
        Ok(if s.conj { base.conj() } else { base })
    };
    let mut segs = Vec::new();
    for s in segments {
        let chain = s
            .chain
            .iter()
            .map(|c| match c.part {
                None => ChainElem::full(c.mu),
                Some(p) => ChainElem::part(c.mu, p),
            })
            .collect();
        segs.push(Segment::new(slot(&s.left)?, chain, slot(&s.right)?));
    }
    Ok(Term::new(coeff.clone(), segs))
}
