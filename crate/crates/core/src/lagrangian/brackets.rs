//! Equal-surface (anti)commutation relations read off from U_A and U_S.

use serde::Serialize;
use thiserror::Error;

use crate::exact::CMatrix;
use crate::field::{FSystem, Statistics};
use crate::umatrix::{Part, StatisticsAssignment, UMatrixSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("statistics of component {0} unresolved")]
    Unresolved(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

impl BracketKind {
    /// Anticommutator exactly for two odd operators.
    pub fn for_pair(a: Statistics, b: Statistics) -> BracketKind {
        if a == Statistics::Fermi && b == Statistics::Fermi {
            BracketKind::Anticommutator
        } else {
            BracketKind::Commutator
        }
    }

    pub fn subscript(self) -> &'static str {
        match self {
            BracketKind::Commutator => "₋",
            BracketKind::Anticommutator => "₊",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Bose,
    Fermi,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketRelation {
    pub sector: Sector,
    pub kind: BracketKind,
    pub left: String,
    pub right: String,
    /// "i·U_A^μ δ_s(x−x′)" style token, or "0".
    pub rhs: String,
    /// Components the relation ranges over.
    pub components: Vec<usize>,
    /// The U part restricted to `components`, per μ; empty for the mixed
    /// bracket.
    pub matrices: Vec<CMatrix>,
}

impl BracketRelation {
    pub fn display(&self) -> String {
        format!("[{}, {}]{} = {}", self.left, self.right, self.kind.subscript(), self.rhs)
    }
}

pub fn derive_commutators(
    sys: &FSystem,
    u: &UMatrixSet,
    stats: &StatisticsAssignment,
) -> Result<Vec<BracketRelation>, BracketError> {
    let mut bose = Vec::new();
    let mut fermi = Vec::new();
    for k in 0..sys.dimension() {
        match stats.components[k] {
            Statistics::Bose => bose.push(k),
            Statistics::Fermi => fermi.push(k),
            Statistics::Unknown => return Err(BracketError::Unresolved(sys.component(k).label.clone())),
        }
    }
    let restrict = |part: Part, comps: &[usize]| (0..4).map(|mu| u.part(mu, part).submatrix(comps, comps)).collect();
    let mut out = Vec::new();
    if !bose.is_empty() {
        out.push(BracketRelation {
            sector: Sector::Bose,
            kind: BracketKind::for_pair(Statistics::Bose, Statistics::Bose),
            left: "U_A^μ φ(x)".to_string(),
            right: "φ(x′) U_A^μ".to_string(),
            rhs: "i U_A^μ δ_s(x−x′)".to_string(),
            matrices: restrict(Part::A, &bose),
            components: bose.clone(),
        });
    }
    if !fermi.is_empty() {
        out.push(BracketRelation {
            sector: Sector::Fermi,
            kind: BracketKind::for_pair(Statistics::Fermi, Statistics::Fermi),
            left: "U_S^μ ψ(x)".to_string(),
            right: "ψ(x′) U_S^μ".to_string(),
            rhs: "i U_S^μ δ_s(x−x′)".to_string(),
            matrices: restrict(Part::S, &fermi),
            components: fermi.clone(),
        });
    }
    if !bose.is_empty() && !fermi.is_empty() {
        let mut all = bose;
        all.extend(fermi);
        out.push(BracketRelation {
            sector: Sector::Mixed,
            kind: BracketKind::for_pair(Statistics::Bose, Statistics::Fermi),
            left: "φ(x)".to_string(),
            right: "ψ(x′)".to_string(),
            rhs: "0".to_string(),
            components: all,
            matrices: Vec::new(),
        });
    }
    Ok(out)
}
