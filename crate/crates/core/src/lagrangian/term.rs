//! Component-level operator monomials and their graded normal form.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{QComplex, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointError {
    #[error("discrete maps act on the point x, not on x'")]
    PrimedPoint,
}

/// Spacetime argument of a factor: x, x′, or an image of x under the Klein
/// group generated by I_s and I_t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PointLabel {
    X,
    XPrime,
    IsX,
    ItX,
    NegX,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointMap {
    Is,
    It,
    Neg,
}

impl PointLabel {
    const KLEIN: [PointLabel; 4] = [PointLabel::X, PointLabel::IsX, PointLabel::ItX, PointLabel::NegX];

    fn bits(self) -> Option<u8> {
        PointLabel::KLEIN.iter().position(|p| *p == self).map(|k| k as u8)
    }

    pub fn apply(self, m: PointMap) -> Result<PointLabel, PointError> {
        let b = self.bits().ok_or(PointError::PrimedPoint)?;
        let g = match m {
            PointMap::Is => 1,
            PointMap::It => 2,
            PointMap::Neg => 3,
        };
        Ok(PointLabel::KLEIN[(b ^ g) as usize])
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointLabel::X => "x",
            PointLabel::XPrime => "x'",
            PointLabel::IsX => "I_s x",
            PointLabel::ItX => "I_t x",
            PointLabel::NegX => "-x",
        })
    }
}

/// One operator in a product. Ordering is the canonical factor order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorFactor {
    pub component: usize,
    /// δχ rather than χ.
    pub delta: bool,
    pub point: PointLabel,
    pub conj: bool,
    pub deriv: Option<u8>,
}

impl OperatorFactor {
    pub fn field(component: usize) -> Self {
        OperatorFactor { component, delta: false, point: PointLabel::X, conj: false, deriv: None }
    }

    pub fn variation(component: usize) -> Self {
        OperatorFactor { delta: true, ..Self::field(component) }
    }
}

/// Sorts `factors` into canonical order and returns the sign picked up from
/// exchanging odd factors. Counts inversions among odd factors, which equals
/// the parity of any adjacent-swap sorting sequence.
pub fn graded_sort(factors: &mut [OperatorFactor], odd: &dyn Fn(usize) -> bool) -> i64 {
    let mut inversions = 0usize;
    for i in 0..factors.len() {
        if !odd(factors[i].component) {
            continue;
        }
        for j in i + 1..factors.len() {
            if odd(factors[j].component) && factors[j] < factors[i] {
                inversions += 1;
            }
        }
    }
    factors.sort();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ordered product of factors; canonical once built through [`Poly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<OperatorFactor>);

impl Monomial {
    /// A repeated odd factor squares to zero.
    fn vanishes(&self, odd: &dyn Fn(usize) -> bool) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1] && odd(w[0].component))
    }
}

/// Linear combination of canonical monomials with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, QComplex>,
}

impl Poly {
    pub fn new() -> Self {
        Poly::default()
    }

    /// Adds `coeff · factors`, canonicalizing first.
    pub fn add_product(&mut self, coeff: QComplex, mut factors: Vec<OperatorFactor>, odd: &dyn Fn(usize) -> bool) {
        if coeff.is_zero() {
            return;
        }
        let sign = graded_sort(&mut factors, odd);
        let m = Monomial(factors);
        if m.vanishes(odd) {
            return;
        }
        let c = if sign < 0 { -coeff } else { coeff };
        self.add_canonical(m, c);
    }

    fn add_canonical(&mut self, m: Monomial, c: QComplex) {
        let slot = self.terms.entry(m.clone()).or_insert_with(QComplex::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_poly(&mut self, o: &Poly) {
        for (m, c) in &o.terms {
            self.add_canonical(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, s: &QComplex) -> Poly {
        let mut p = Poly::new();
        for (m, c) in &self.terms {
            p.add_canonical(m.clone(), c * s);
        }
        p
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_poly(&o.scale(&QComplex::from_int(-1)));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &QComplex)> {
        self.terms.iter()
    }

    /// Rebuilds every monomial through `f` and re-canonicalizes.
    pub fn map_factors(
        &self,
        odd: &dyn Fn(usize) -> bool,
        f: impl Fn(&[OperatorFactor], &QComplex) -> (QComplex, Vec<OperatorFactor>),
    ) -> Poly {
        let mut p = Poly::new();
        for (m, c) in &self.terms {
            let (c2, fs) = f(&m.0, c);
            p.add_product(c2, fs, odd);
        }
        p
    }

    /// Hermitian conjugate for hermitian component operators: reverse the
    /// order, conjugate the coefficient.
    pub fn dagger(&self, odd: &dyn Fn(usize) -> bool) -> Poly {
        self.map_factors(odd, |fs, c| (c.conj(), fs.iter().rev().copied().collect()))
    }

    pub fn erase_conj(&self, odd: &dyn Fn(usize) -> bool) -> Poly {
        self.map_factors(odd, |fs, c| (c.clone(), fs.iter().map(|f| OperatorFactor { conj: false, ..*f }).collect()))
    }
}
