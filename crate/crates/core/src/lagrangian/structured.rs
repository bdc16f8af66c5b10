//! Lagrangian terms as products of bilinear segments χ_slot · Π U · χ_slot.
//!
//! A chain element is one U^μ factor with separate per-μ weights on its
//! antisymmetric and symmetric parts, so w = (1, 1) is the full U^μ. A μ
//! label is either a fixed index or a letter; equal letters anywhere in a
//! term are summed together over 0..3.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::term::{OperatorFactor, PointLabel, Poly};
use crate::exact::{CMatrix, QComplex, Ring};
use crate::field::FSystem;
use crate::umatrix::{Part, UMatrixSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("U-power sum {0} is odd")]
    OddPowerSum(usize),
    #[error("coefficient {0} is not real")]
    ComplexCoefficient(QComplex),
    #[error("term has no segments")]
    Empty,
    #[error("unknown field index {0}")]
    UnknownField(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MuLabel {
    Fixed(u8),
    Sum(char),
}

impl fmt::Display for MuLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuLabel::Fixed(m) => write!(f, "{}", m),
            MuLabel::Sum(c) => write!(f, "{}", c),
        }
    }
}

impl MuLabel {
    fn value(&self, bind: &[(char, u8)]) -> u8 {
        match self {
            MuLabel::Fixed(m) => *m,
            MuLabel::Sum(c) => bind.iter().find(|(l, _)| l == c).map(|(_, v)| *v).expect("bound letter"),
        }
    }
}

fn ones() -> [QComplex; 4] {
    std::array::from_fn(|_| QComplex::from_int(1))
}

fn zeros() -> [QComplex; 4] {
    std::array::from_fn(|_| QComplex::zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainElem {
    pub mu: MuLabel,
    pub wa: [QComplex; 4],
    pub ws: [QComplex; 4],
}

impl ChainElem {
    pub fn full(mu: MuLabel) -> Self {
        ChainElem { mu, wa: ones(), ws: ones() }
    }

    pub fn part(mu: MuLabel, part: Part) -> Self {
        match part {
            Part::A => ChainElem { mu, wa: ones(), ws: zeros() },
            Part::S => ChainElem { mu, wa: zeros(), ws: ones() },
        }
    }

    pub fn weight(&self, part: Part) -> &[QComplex; 4] {
        match part {
            Part::A => &self.wa,
            Part::S => &self.ws,
        }
    }

    /// Multiplies the weight of `part` at index μ by `s`.
    pub fn scale_weight(&mut self, part: Part, mu: usize, s: &QComplex) {
        let w = match part {
            Part::A => &mut self.wa,
            Part::S => &mut self.ws,
        };
        w[mu] = &w[mu] * s;
    }

    /// Named form when the weights are one of the three plain choices.
    pub fn kind_name(&self) -> Option<&'static str> {
        let (o, z) = (ones(), zeros());
        if self.wa == o && self.ws == o {
            Some("U")
        } else if self.wa == o && self.ws == z {
            Some("UA")
        } else if self.wa == z && self.ws == o {
            Some("US")
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Deriv {
    pub mu: MuLabel,
    pub sign: [QComplex; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    /// Restriction to one field's components; `None` runs over all of χ.
    pub field: Option<usize>,
    pub conj: bool,
    pub point: PointLabel,
    pub deriv: Option<Deriv>,
}

impl Slot {
    pub fn all() -> Self {
        Slot { field: None, conj: false, point: PointLabel::X, deriv: None }
    }

    pub fn of(field: usize) -> Self {
        Slot { field: Some(field), ..Slot::all() }
    }

    pub fn conj(mut self) -> Self {
        self.conj = true;
        self
    }

    pub fn with_deriv(mut self, mu: MuLabel) -> Self {
        self.deriv = Some(Deriv { mu, sign: ones() });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub left: Slot,
    pub chain: Vec<ChainElem>,
    pub right: Slot,
}

impl Segment {
    pub fn new(left: Slot, chain: Vec<ChainElem>, right: Slot) -> Self {
        Segment { left, chain, right }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub coeff: QComplex,
    pub segments: Vec<Segment>,
}

impl Term {
    pub fn new(coeff: QComplex, segments: Vec<Segment>) -> Self {
        Term { coeff, segments }
    }

    /// (k_1, …, k_s): chain length of each segment.
    pub fn k_powers(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.chain.len()).collect()
    }

    pub fn power_sum(&self) -> usize {
        self.k_powers().iter().sum()
    }

    /// Some chain multiplies U^μ with different μ labels.
    pub fn mixes_indices(&self) -> bool {
        self.segments.iter().any(|s| s.chain.windows(2).any(|w| w[0].mu != w[1].mu))
    }

    pub fn derivative_count(&self) -> usize {
        self.segments.iter().map(|s| s.left.deriv.is_some() as usize + s.right.deriv.is_some() as usize).sum()
    }

    fn letters(&self) -> Vec<char> {
        let mut set = BTreeSet::new();
        for s in &self.segments {
            for slot in [&s.left, &s.right] {
                if let Some(Deriv { mu: MuLabel::Sum(c), .. }) = &slot.deriv {
                    set.insert(*c);
                }
            }
            for e in &s.chain {
                if let MuLabel::Sum(c) = e.mu {
                    set.insert(c);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn check_fields(&self, sys: &FSystem) -> Result<(), TermError> {
        for s in &self.segments {
            for f in [s.left.field, s.right.field].into_iter().flatten() {
                if f >= sys.fields().len() {
                    return Err(TermError::UnknownField(f));
                }
            }
        }
        Ok(())
    }

    /// Component-level expansion with every letter summed over 0..3.
    pub fn expand(&self, sys: &FSystem, u: &UMatrixSet, odd: &dyn Fn(usize) -> bool) -> Poly {
        let letters = self.letters();
        let mut out = Poly::new();
        let combos = 4usize.pow(letters.len() as u32);
        for code in 0..combos {
            let bind: Vec<(char, u8)> =
                letters.iter().enumerate().map(|(k, c)| (*c, ((code >> (2 * k)) & 3) as u8)).collect();
            let mut partial: Vec<(QComplex, Vec<OperatorFactor>)> = vec![(self.coeff.clone(), Vec::new())];
            for seg in &self.segments {
                let pairs = segment_pairs(seg, sys, u, &bind);
                let mut next = Vec::with_capacity(partial.len() * pairs.len());
                for (c, fs) in &partial {
                    for (pc, a, b) in &pairs {
                        let mut f2 = fs.clone();
                        f2.push(*a);
                        f2.push(*b);
                        next.push((c * pc, f2));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (c, fs) in partial {
                out.add_product(c, fs, odd);
            }
        }
        out
    }
}

fn chain_matrix(chain: &[ChainElem], u: &UMatrixSet, bind: &[(char, u8)]) -> CMatrix {
    let n = u.dimension();
    let mut m = CMatrix::identity(n);
    for e in chain {
        let mu = e.mu.value(bind) as usize;
        let piece = u.part(mu, Part::A).scale(&e.wa[mu]).add(&u.part(mu, Part::S).scale(&e.ws[mu]));
        m = m.mul(&piece);
    }
    m
}

fn slot_factor(slot: &Slot, component: usize, bind: &[(char, u8)]) -> (QComplex, OperatorFactor) {
    let (sign, deriv) = match &slot.deriv {
        Some(d) => {
            let mu = d.mu.value(bind);
            (d.sign[mu as usize].clone(), Some(mu))
        }
        None => (QComplex::from_int(1), None),
    };
    let f = OperatorFactor { component, delta: false, point: slot.point, conj: slot.conj, deriv };
    (sign, f)
}

fn slot_range(slot: &Slot, sys: &FSystem) -> std::ops::Range<usize> {
    match slot.field {
        Some(f) => sys.range(f),
        None => 0..sys.dimension(),
    }
}

/// Nonzero (coefficient, left factor, right factor) triples of one segment.
fn segment_pairs(
    seg: &Segment,
    sys: &FSystem,
    u: &UMatrixSet,
    bind: &[(char, u8)],
) -> Vec<(QComplex, OperatorFactor, OperatorFactor)> {
    let m = chain_matrix(&seg.chain, u, bind);
    let mut out = Vec::new();
    for r in slot_range(&seg.left, sys) {
        for l in slot_range(&seg.right, sys) {
            let v = m.get(r, l);
            if v.is_zero() {
                continue;
            }
            let (sa, fa) = slot_factor(&seg.left, r, bind);
            let (sb, fb) = slot_factor(&seg.right, l, bind);
            let c = &(v * &sa) * &sb;
            if !c.is_zero() {
                out.push((c, fa, fb));
            }
        }
    }
    out
}

/// A dynamical term: real coefficient and an even U-power sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynTerm(Term);

impl DynTerm {
    pub fn new(term: Term) -> Result<Self, TermError> {
        if term.segments.is_empty() {
            return Err(TermError::Empty);
        }
        if !term.coeff.is_real() {
            return Err(TermError::ComplexCoefficient(term.coeff));
        }
        if term.power_sum() % 2 != 0 {
            return Err(TermError::OddPowerSum(term.power_sum()));
        }
        Ok(DynTerm(term))
    }

    /// Skips validation, for probing how the checks treat ill-formed input.
    pub fn new_unchecked(term: Term) -> Self {
        DynTerm(term)
    }

    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn into_term(self) -> Term {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Lagrangian {
    pub kinematic: Vec<Term>,
    pub dynamic: Vec<DynTerm>,
}

impl Lagrangian {
    /// All terms with a stable name for witnesses.
    pub fn labelled_terms(&self) -> Vec<(String, &Term)> {
        let kin = self.kinematic.iter().enumerate().map(|(k, t)| (format!("kinematic[{}]", k), t));
        let dy = self.dynamic.iter().enumerate().map(|(k, t)| (format!("dynamic[{}]", k), t.term()));
        kin.chain(dy).collect()
    }

    pub fn expand(&self, sys: &FSystem, u: &UMatrixSet, odd: &dyn Fn(usize) -> bool) -> Poly {
        let mut p = Poly::new();
        for (_, t) in self.labelled_terms() {
            p.add_poly(&t.expand(sys, u, odd));
        }
        p
    }

}

/// ½[χ* U^μ ∂_μχ − ∂_μχ* U^μ χ]. The conjugation flag only routes charge
/// bookkeeping; the components are hermitian.
pub fn build_kinematic() -> Vec<Term> {
    let mu = MuLabel::Sum('m');
    let chain = vec![ChainElem::full(mu)];
    vec![
        Term::new(
            QComplex::from_ratio(1, 2),
            vec![Segment::new(Slot::all().conj(), chain.clone(), Slot::all().with_deriv(mu))],
        ),
        Term::new(
            QComplex::from_ratio(-1, 2),
            vec![Segment::new(Slot::all().conj().with_deriv(mu), chain, Slot::all())],
        ),
    ]
}
