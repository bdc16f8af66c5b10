//! Basic fields, f-systems and the flat component index of the general field.
//!
//! Components are laid out field by field in declaration order. Inside a field
//! the order is the block layout of [`crate::reps`]. A field declared in the
//! adapted basis carries components S·χ where S is fixed per block shape, and
//! its discrete matrices are conjugated accordingly.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{CMatrix, HalfInt, Phase};
use crate::reps::{discrete_matrix, Discrete, RepBlock, RepError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Statistics {
    Unknown,
    Bose,
    Fermi,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Unknown => "Unknown",
            Statistics::Bose => "Bose",
            Statistics::Fermi => "Fermi",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Basis {
    #[default]
    Native,
    Adapted,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("no fields declared")]
    Empty,
    #[error("duplicate field name `{0}`")]
    DuplicateName(String),
    #[error("field `{name}`: spin {spin} outside |A-B|..A+B for ({a},{b})")]
    SpinBound { name: String, spin: HalfInt, a: HalfInt, b: HalfInt },
    #[error("field `{0}`: adapted basis needs a parity-doubled block or A = B = 1/2")]
    AdaptedUnsupported(String),
    #[error("field `{name}`: {given} labels for {expected} components")]
    LabelCount { name: String, given: usize, expected: usize },
    #[error("field `{0}`: {1}")]
    Rep(String, RepError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub name: String,
    pub block: RepBlock,
    pub spin: HalfInt,
    pub charge: BigRational,
    pub statistics: Statistics,
    pub basis: Basis,
    /// Block phase of D(I_t); must be a fourth root of unity.
    pub t_phase: Phase,
    pub labels: Option<Vec<String>>,
    /// Name used when the whole field is shown at once.
    pub display: Option<String>,
}

impl FieldSpec {
    pub fn new(name: impl Into<String>, block: RepBlock, spin: HalfInt) -> Self {
        FieldSpec {
            name: name.into(),
            block,
            spin,
            charge: BigRational::zero(),
            statistics: Statistics::Unknown,
            basis: Basis::Native,
            t_phase: Phase::one(),
            labels: None,
            display: None,
        }
    }

    pub fn with_charge(mut self, q: BigRational) -> Self {
        self.charge = q;
        self
    }

    pub fn with_statistics(mut self, s: Statistics) -> Self {
        self.statistics = s;
        self
    }

    pub fn with_basis(mut self, b: Basis) -> Self {
        self.basis = b;
        self
    }

    pub fn with_t_phase(mut self, p: Phase) -> Self {
        self.t_phase = p;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn with_display(mut self, d: impl Into<String>) -> Self {
        self.display = Some(d.into());
        self
    }

    /// Fields are hermitian operators; there is no way to declare otherwise.
    pub fn hermitian(&self) -> bool {
        true
    }

    pub fn dimension(&self) -> usize {
        self.block.dimension()
    }

    pub fn display_name(&self) -> &str {
        self.display.as_deref().unwrap_or(&self.name)
    }

    pub fn label(&self, k: usize) -> String {
        match &self.labels {
            Some(l) => l[k].clone(),
            None => format!("{}[{}]", self.name, k),
        }
    }

    fn validate(&self) -> Result<(), FieldError> {
        let (a, b, j) = (self.block.a.twice(), self.block.b.twice(), self.spin.twice());
        if j < a.abs_diff(b) || j > a + b || (a + b - j) % 2 != 0 {
            return Err(FieldError::SpinBound {
                name: self.name.clone(),
                spin: self.spin,
                a: self.block.a,
                b: self.block.b,
            });
        }
        if let Some(l) = &self.labels {
            if l.len() != self.dimension() {
                return Err(FieldError::LabelCount {
                    name: self.name.clone(),
                    given: l.len(),
                    expected: self.dimension(),
                });
            }
        }
        if self.basis == Basis::Adapted {
            self.adapted_matrix()?;
        }
        Ok(())
    }

    /// S with χ_field = S·χ_block.
    pub fn adapted_matrix(&self) -> Result<CMatrix, FieldError> {
        let blk = &self.block;
        let charge = CMatrix::identity(blk.charge_slots());
        if self.basis == Basis::Native {
            return Ok(CMatrix::identity(self.dimension()));
        }
        if blk.parity_doubled {
            let mix = CMatrix::from_ints(&[&[1, 1], &[1, -1]]);
            return Ok(charge.kron(&mix).kron(&CMatrix::identity(blk.irrep_dimension())));
        }
        if blk.a == HalfInt::HALF && blk.b == HalfInt::HALF {
            // singlet, then the triplet with m = 1, 0, −1
            let s = CMatrix::from_ints(&[&[0, 1, -1, 0], &[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]]);
            return Ok(charge.kron(&s));
        }
        Err(FieldError::AdaptedUnsupported(self.name.clone()))
    }

    /// The per-field discrete matrix in the field's own basis.
    pub fn discrete_matrix(&self, kind: Discrete, phases: &Phases) -> Result<CMatrix, FieldError> {
        let err = |e| FieldError::Rep(self.name.clone(), e);
        let raw = match kind {
            Discrete::P => discrete_matrix(kind, &self.block, &phases.s).map_err(err)?,
            Discrete::C => discrete_matrix(kind, &self.block, &phases.c).map_err(err)?,
            Discrete::T => discrete_matrix(kind, &self.block, &self.t_phase).map_err(err)?,
            Discrete::PT => self.discrete_matrix(Discrete::P, phases)?.mul(&self.discrete_matrix(Discrete::T, phases)?),
            Discrete::CPT => {
                return Ok(self.discrete_matrix(Discrete::C, phases)?.mul(&self.discrete_matrix(Discrete::PT, phases)?))
            }
        };
        if matches!(kind, Discrete::PT) || self.basis == Basis::Native {
            return Ok(raw);
        }
        let s = self.adapted_matrix()?;
        let sinv = s.inverse().expect("adapted basis matrices are invertible");
        Ok(s.mul(&raw).mul(&sinv))
    }
}

/// The configurable phases ν_s and ν_c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phases {
    pub s: Phase,
    pub c: Phase,
}

impl Default for Phases {
    fn default() -> Self {
        Phases { s: Phase::one(), c: Phase::one() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ComponentIndex {
    pub field: usize,
    /// charge_slot · parity_slots + parity_slot
    pub slot: usize,
    pub row: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub index: ComponentIndex,
    pub field_name: String,
    pub label: String,
    /// −1 on the second charge slot, +1 otherwise.
    pub charge_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSystem {
    fields: Vec<FieldSpec>,
    components: Vec<Component>,
    offsets: Vec<usize>,
}

impl FSystem {
    pub fn new(fields: Vec<FieldSpec>) -> Result<Self, FieldError> {
        if fields.is_empty() {
            return Err(FieldError::Empty);
        }
        let mut seen = BTreeSet::new();
        for f in &fields {
            if !seen.insert(f.name.clone()) {
                return Err(FieldError::DuplicateName(f.name.clone()));
            }
            f.validate()?;
        }
        let mut components = Vec::new();
        let mut offsets = Vec::new();
        for (fi, f) in fields.iter().enumerate() {
            offsets.push(components.len());
            let inner = f.block.irrep_dimension();
            for k in 0..f.dimension() {
                let slot = k / inner;
                let charge_slot = slot / f.block.parity_slots();
                components.push(Component {
                    index: ComponentIndex { field: fi, slot, row: k % inner },
                    field_name: f.name.clone(),
                    label: f.label(k),
                    charge_sign: if charge_slot == 1 { -1 } else { 1 },
                });
            }
        }
        Ok(FSystem { fields, components, offsets })
    }

    pub fn fields(&self) -> &[FieldSpec] {
        &self.fields
    }

    pub fn field(&self, name: &str) -> Option<(usize, &FieldSpec)> {
        self.fields.iter().enumerate().find(|(_, f)| f.name == name)
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, flat: usize) -> &Component {
        &self.components[flat]
    }

    /// Flat range of a field's components.
    pub fn range(&self, field: usize) -> std::ops::Range<usize> {
        let start = self.offsets[field];
        start..start + self.fields[field].dimension()
    }

    pub fn flat(&self, idx: &ComponentIndex) -> Option<usize> {
        let f = self.fields.get(idx.field)?;
        let inner = f.block.irrep_dimension();
        let k = idx.slot * inner + idx.row;
        if idx.row >= inner || k >= f.dimension() {
            return None;
        }
        Some(self.offsets[idx.field] + k)
    }

    pub fn field_of(&self, flat: usize) -> &FieldSpec {
        &self.fields[self.components[flat].index.field]
    }

    /// Eigenvalue of the gauge charge on one component.
    pub fn component_charge(&self, flat: usize) -> BigRational {
        let c = &self.components[flat];
        let q = self.fields[c.index.field].charge.clone();
        if c.charge_sign < 0 {
            -q
        } else {
            q
        }
    }

    pub fn is_neutral(&self) -> bool {
        self.fields.iter().all(|f| f.charge.is_zero())
    }

    /// Block-diagonal D over the general field, blocks in field order.
    pub fn transform(&self, kind: Discrete, phases: &Phases) -> Result<CMatrix, FieldError> {
        let blocks = self
            .fields
            .iter()
            .map(|f| f.discrete_matrix(kind, phases))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CMatrix::direct_sum(&blocks).expect("system is non-empty"))
    }

    /// Replaces the fields' statistics, keeping everything else.
    pub fn with_statistics(&self, stats: &[Statistics]) -> FSystem {
        let mut s = self.clone();
        for (f, st) in s.fields.iter_mut().zip(stats) {
            f.statistics = *st;
        }
        s
    }
}

pub fn assemble_general_field(fields: Vec<FieldSpec>) -> Result<FSystem, FieldError> {
    FSystem::new(fields)
}

pub fn system_transform(sys: &FSystem, kind: Discrete, phases: &Phases) -> Result<CMatrix, FieldError> {
    sys.transform(kind, phases)
}
