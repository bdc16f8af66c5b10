//! Coupling matrices U^μ: validation, symmetric/antisymmetric split,
//! statistics inference, discrete sign laws and the spin-statistics verdict.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{CMatrix, QComplex, Ring};
use crate::field::{FSystem, Statistics};
use crate::reps::Discrete;
use crate::verdict::{Status, Verdict, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UError {
    #[error("U^{mu} is {rows}x{cols}, the general field has {dim} components")]
    Dimension { mu: usize, rows: usize, cols: usize, dim: usize },
    #[error("transformation matrix is singular")]
    Singular,
    #[error("transformation matrix is {0}x{0}, U is {1}x{1}")]
    TransformDimension(usize, usize),
    #[error("every U^mu vanishes, so no generalized momentum exists")]
    NoMomentum,
    #[error("statistics conflict: {}", .0.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("; "))]
    Conflict(Vec<Witness>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Part {
    S,
    A,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::S => "S",
            Part::A => "A",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UMatrixSet {
    u: [CMatrix; 4],
    parts: [(CMatrix, CMatrix); 4],
}

impl UMatrixSet {
    pub fn new(u: [CMatrix; 4]) -> Self {
        let parts = std::array::from_fn(|mu| decompose_u(&u[mu]));
        UMatrixSet { u, parts }
    }

    pub fn zero(dim: usize) -> Self {
        UMatrixSet::new(std::array::from_fn(|_| CMatrix::zeros(dim, dim)))
    }

    pub fn get(&self, mu: usize) -> &CMatrix {
        &self.u[mu]
    }

    pub fn all(&self) -> &[CMatrix; 4] {
        &self.u
    }

    pub fn dimension(&self) -> usize {
        self.u[0].rows()
    }

    pub fn part(&self, mu: usize, part: Part) -> &CMatrix {
        let (s, a) = &self.parts[mu];
        match part {
            Part::S => s,
            Part::A => a,
        }
    }

    pub fn check_dimension(&self, dim: usize) -> Result<(), UError> {
        for (mu, m) in self.u.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(UError::Dimension { mu, rows: m.rows(), cols: m.cols(), dim });
            }
        }
        Ok(())
    }

    /// Σ_μ n_μ U^μ.
    pub fn contract(&self, n: &[QComplex; 4]) -> CMatrix {
        let dim = self.dimension();
        (0..4).fold(CMatrix::zeros(dim, dim), |acc, mu| acc.add(&self.u[mu].scale(&n[mu])))
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(CMatrix::is_zero)
    }
}

/// (U_S, U_A) = ((U+Uᵀ)/2, (U−Uᵀ)/2).
pub fn decompose_u(u: &CMatrix) -> (CMatrix, CMatrix) {
    let half = QComplex::from_ratio(1, 2);
    let t = u.transpose();
    (u.add(&t).scale(&half), u.sub(&t).scale(&half))
}

/// Antihermiticity of every U^μ and the reality classes of its parts:
/// U_S imaginary, U_A real.
pub fn validate_u(u: &UMatrixSet, dim: usize) -> Result<Verdict, UError> {
    u.check_dimension(dim)?;
    let mut witnesses = Vec::new();
    for mu in 0..4 {
        let m = u.get(mu);
        let neg_dag = m.dagger().neg();
        for (r, c, v) in m.entries() {
            if v != neg_dag.get(r, c) {
                witnesses.push(Witness::new(
                    format!("U^{}({},{})", mu, r, c),
                    format!("dagger(U) = -U, i.e. {}", neg_dag.get(r, c)),
                    v.to_string(),
                ));
            }
        }
        let (s, a) = decompose_u(m);
        if !s.is_imaginary() {
            witnesses.push(Witness::new(format!("U^{}_S", mu), "imaginary", "has a real part"));
        }
        if !a.is_real() {
            witnesses.push(Witness::new(format!("U^{}_A", mu), "real", "has an imaginary part"));
        }
    }
    Ok(Verdict::from_witnesses(witnesses))
}

/// Exact split check: U_S + U_A = U, U_Sᵀ = U_S, U_Aᵀ = −U_A.
pub fn verify_decomposition(u: &UMatrixSet) -> Verdict {
    let mut witnesses = Vec::new();
    for mu in 0..4 {
        let (s, a) = decompose_u(u.get(mu));
        if s.add(&a) != *u.get(mu) {
            witnesses.push(Witness::new(format!("U^{}", mu), "U_S + U_A = U", "mismatch"));
        }
        if s.transpose() != s {
            witnesses.push(Witness::new(format!("U^{}_S", mu), "symmetric", "not symmetric"));
        }
        if a.transpose() != a.neg() {
            witnesses.push(Witness::new(format!("U^{}_A", mu), "antisymmetric", "not antisymmetric"));
        }
    }
    Verdict::from_witnesses(witnesses)
}

/// Per-component and per-field statistics with the coupling entries that
/// decided them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatisticsAssignment {
    pub components: Vec<Statistics>,
    pub fields: Vec<Statistics>,
    pub evidence: Vec<Option<String>>,
}

impl StatisticsAssignment {
    /// Uses each field's tag for all of its components.
    pub fn from_fields(sys: &FSystem, fields: Vec<Statistics>) -> Self {
        let components = (0..sys.dimension()).map(|k| fields[sys.component(k).index.field]).collect();
        let evidence = vec![None; fields.len()];
        StatisticsAssignment { components, fields, evidence }
    }

    pub fn declared(sys: &FSystem) -> Self {
        Self::from_fields(sys, sys.fields().iter().map(|f| f.statistics).collect())
    }

    pub fn is_fermi(&self, component: usize) -> bool {
        self.components[component] == Statistics::Fermi
    }

    pub fn resolved(&self) -> bool {
        self.fields.iter().all(|s| *s != Statistics::Unknown)
    }
}

fn entry_name(mu: usize, part: Part, r: usize, c: usize, sys: &FSystem) -> String {
    format!("U^{}_{}({},{})", mu, part, sys.component(r).label, sys.component(c).label)
}

/// Components joined by a nonzero U_S entry are Fermi, by U_A entry Bose.
struct RawInference {
    fields: Vec<Statistics>,
    evidence: Vec<Option<String>>,
    conflicts: Vec<Witness>,
}

fn infer_raw(sys: &FSystem, u: &UMatrixSet) -> Result<RawInference, UError> {
    u.check_dimension(sys.dimension())?;
    if u.is_zero() {
        return Err(UError::NoMomentum);
    }
    let n = sys.dimension();
    let mut fermi: Vec<Option<String>> = vec![None; n];
    let mut bose: Vec<Option<String>> = vec![None; n];
    for mu in 0..4 {
        let (s, a) = decompose_u(u.get(mu));
        for (part, m, tags) in [(Part::S, &s, &mut fermi), (Part::A, &a, &mut bose)] {
            for (r, c, v) in m.entries() {
                if v.is_zero() {
                    continue;
                }
                for k in [r, c] {
                    tags[k].get_or_insert_with(|| entry_name(mu, part, r, c, sys));
                }
            }
        }
    }
    let mut conflicts = Vec::new();
    for k in 0..n {
        if let (Some(f), Some(b)) = (&fermi[k], &bose[k]) {
            conflicts.push(Witness::new(
                sys.component(k).label.clone(),
                "a single statistics class",
                format!("Fermi via {}, Bose via {}", f, b),
            ));
        }
    }
    let nf = sys.fields().len();
    let mut fields = vec![Statistics::Unknown; nf];
    let mut evidence: Vec<Option<String>> = vec![None; nf];
    let mut seen_both = vec![false; nf];
    for k in 0..n {
        let fi = sys.component(k).index.field;
        let tag = match (&fermi[k], &bose[k]) {
            (Some(e), None) => Some((Statistics::Fermi, e)),
            (None, Some(e)) => Some((Statistics::Bose, e)),
            _ => None,
        };
        if let Some((st, e)) = tag {
            match fields[fi] {
                Statistics::Unknown => {
                    fields[fi] = st;
                    evidence[fi] = Some(e.clone());
                }
                prev if prev != st && !seen_both[fi] => {
                    seen_both[fi] = true;
                    conflicts.push(Witness::new(
                        sys.fields()[fi].name.clone(),
                        format!("{} for every component", prev),
                        format!("{} via {}", st, e),
                    ));
                }
                _ => {}
            }
        }
    }
    for (fi, f) in sys.fields().iter().enumerate() {
        if f.statistics != Statistics::Unknown && fields[fi] != Statistics::Unknown && f.statistics != fields[fi] {
            conflicts.push(Witness::new(
                f.name.clone(),
                format!("declared {}", f.statistics),
                format!("inferred {} via {}", fields[fi], evidence[fi].clone().unwrap_or_default()),
            ));
        }
    }
    Ok(RawInference { fields, evidence, conflicts })
}

pub fn infer_statistics(sys: &FSystem, u: &UMatrixSet) -> Result<StatisticsAssignment, UError> {
    let raw = infer_raw(sys, u)?;
    if !raw.conflicts.is_empty() {
        return Err(UError::Conflict(raw.conflicts));
    }
    let fields = sys
        .fields()
        .iter()
        .zip(raw.fields)
        .map(|(f, i)| if i == Statistics::Unknown { f.statistics } else { i })
        .collect();
    let mut st = StatisticsAssignment::from_fields(sys, fields);
    st.evidence = raw.evidence;
    Ok(st)
}

/// Assignment used after a conflict: the declared tag where there is one, otherwise the inferred one.
pub fn fallback_statistics(sys: &FSystem, u: &UMatrixSet) -> StatisticsAssignment {
    let inferred = infer_raw(sys, u).map(|r| r.fields).unwrap_or_else(|_| vec![Statistics::Unknown; sys.fields().len()]);
    let fields = sys
        .fields()
        .iter()
        .zip(inferred)
        .map(|(f, i)| if f.statistics == Statistics::Unknown { i } else { f.statistics })
        .collect();
    StatisticsAssignment::from_fields(sys, fields)
}

/// Sign s with D·U^μ_part·D⁻¹ = s·U^μ_part.
pub fn expected_sign(kind: Discrete, mu: usize, part: Part) -> i64 {
    let time = if mu == 0 { -1 } else { 1 };
    match (kind, part) {
        (Discrete::P, _) => -time,
        (Discrete::T, Part::A) => time,
        (Discrete::T, Part::S) => -time,
        (Discrete::PT, Part::A) | (Discrete::CPT, Part::A) => -1,
        (Discrete::PT, Part::S) | (Discrete::CPT, Part::S) => 1,
        (Discrete::C, _) => 1,
    }
}

/// conj(U_part) = r·U_part.
pub fn reality_sign(part: Part) -> i64 {
    match part {
        Part::A => 1,
        Part::S => -1,
    }
}

/// Entrywise check of the sign law for every μ and both parts. Under T the
/// matrix must also be real on Bose and imaginary on Fermi components.
pub fn check_u_transform(
    kind: Discrete,
    d: &CMatrix,
    u: &UMatrixSet,
    stats: &StatisticsAssignment,
    sys: &FSystem,
) -> Result<Verdict, UError> {
    let dim = u.dimension();
    if d.rows() != dim || d.cols() != dim {
        return Err(UError::TransformDimension(d.rows(), dim));
    }
    let dinv = d.inverse().map_err(|_| UError::Singular)?;
    let mut witnesses = Vec::new();
    for mu in 0..4 {
        for part in [Part::S, Part::A] {
            let m = u.part(mu, part);
            let sign = expected_sign(kind, mu, part);
            let lhs = d.mul(&m).mul(&dinv);
            let rhs = m.scale(&QComplex::from_int(sign));
            let bad = lhs.entries().find(|(r, c, v)| *v != rhs.get(*r, *c)).map(|(r, c, v)| (r, c, v.to_string()));
            if let Some((r, c, v)) = bad {
                witnesses.push(Witness::new(
                    format!("{} on {}", kind, entry_name(mu, part, r, c, sys)),
                    format!("{}", rhs.get(r, c)),
                    v,
                ));
            }
        }
    }
    if kind == Discrete::T {
        witnesses.extend(t_pairing(d, stats, sys));
    }
    Ok(Verdict::from_witnesses(witnesses))
}

fn t_pairing(d: &CMatrix, stats: &StatisticsAssignment, sys: &FSystem) -> Vec<Witness> {
    let mut out = Vec::new();
    for (fi, f) in sys.fields().iter().enumerate() {
        let range: Vec<usize> = sys.range(fi).collect();
        let block = d.submatrix(&range, &range);
        let ok = match stats.fields[fi] {
            Statistics::Bose => block.is_real(),
            Statistics::Fermi => block.is_imaginary(),
            Statistics::Unknown => true,
        };
        if !ok {
            let want = if stats.fields[fi] == Statistics::Fermi { "imaginary" } else { "real" };
            out.push(Witness::new(format!("D(I_t) block of {}", f.name), want, format!("not {}", want)));
        }
    }
    out
}

/// Name of the two incompatible requirements on D(I_t) when spin and
/// statistics disagree: the pairing with the U parts versus the reality fixed
/// by the spin.
pub const SPIN_STATISTICS_CLASH: &str = "statistics pairing vs spin reality";

/// Integer spin must be Bose and half-integer spin Fermi; uncoupled fields are
/// indeterminate.
pub fn spin_statistics_verdict(sys: &FSystem, stats: &StatisticsAssignment) -> Verdict {
    let mut fails = Vec::new();
    let mut unknown = Vec::new();
    for (fi, f) in sys.fields().iter().enumerate() {
        let expected = if f.spin.is_integer() { Statistics::Bose } else { Statistics::Fermi };
        let got = stats.fields[fi];
        let w = Witness::new(f.name.clone(), expected.to_string(), got.to_string())
            .detail("field", f.name.clone())
            .detail("spin", f.spin.to_string())
            .detail("assigned", got.to_string());
        if got == Statistics::Unknown {
            unknown.push(w.detail("reason", "no coupling in any U^mu"));
        } else if got != expected {
            let required = if got == Statistics::Fermi { "imaginary" } else { "real" };
            let fixed = if f.spin.is_integer() { "real" } else { "imaginary" };
            fails.push(
                w.detail("violated", SPIN_STATISTICS_CLASH)
                    .detail("pairing", format!("D(I_t) {} for {}", required, got))
                    .detail("reality", format!("D(I_t) {} for spin {}", fixed, f.spin)),
            );
        }
    }
    if !fails.is_empty() {
        fails.extend(unknown);
        return Verdict { status: Status::Fail, witnesses: fails };
    }
    if !unknown.is_empty() {
        return Verdict::indeterminate(unknown);
    }
    Verdict::pass()
}
