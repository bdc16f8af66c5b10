//! Gaussian rationals extended by square roots of non-negative integers.
//!
//! An element is a finite sum `Σ c_n √n` with `n` squarefree; the square roots
//! of distinct squarefree integers are linearly independent over `Q(i)`, so
//! equality is coefficient-wise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{QComplex, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Radical {
    terms: BTreeMap<u64, QComplex>,
}

/// Splits `n = t²·s` with `s` squarefree.
fn square_split(mut n: u64) -> (u64, u64) {
    let mut outer = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        while n % (p * p) == 0 {
            n /= p * p;
            outer *= p;
        }
        p += 1;
    }
    (outer, n)
}

impl Radical {
    pub fn from_q(q: QComplex) -> Self {
        let mut r = Radical::default();
        r.push(1, q);
        r
    }

    /// `√n`, reduced to `t·√s`.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return Radical::default();
        }
        let (outer, inner) = square_split(n);
        let mut r = Radical::default();
        r.push(inner, QComplex::from_int(outer as i64));
        r
    }

    fn push(&mut self, radicand: u64, c: QComplex) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand).or_insert_with(QComplex::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    /// The value as a Gaussian rational, when no irrational part remains.
    pub fn to_qcomplex(&self) -> Option<QComplex> {
        match self.terms.len() {
            0 => Some(QComplex::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(QComplex::is_real)
    }

    pub fn scale_q(&self, q: &QComplex) -> Self {
        let mut r = Radical::default();
        for (n, c) in &self.terms {
            r.push(*n, c * q);
        }
        r
    }
}

impl From<QComplex> for Radical {
    fn from(q: QComplex) -> Self {
        Radical::from_q(q)
    }
}

impl Add for Radical {
    type Output = Radical;
    fn add(mut self, o: Radical) -> Radical {
        for (n, c) in o.terms {
            self.push(n, c);
        }
        self
    }
}

impl Sub for Radical {
    type Output = Radical;
    fn sub(self, o: Radical) -> Radical {
        self + (-o)
    }
}

impl Neg for Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        Radical { terms: self.terms.into_iter().map(|(n, c)| (n, -c)).collect() }
    }
}

impl Mul for Radical {
    type Output = Radical;
    fn mul(self, o: Radical) -> Radical {
        self.mul_ref(&o)
    }
}

impl Ring for Radical {
    fn zero() -> Self {
        Radical::default()
    }
    fn one() -> Self {
        Radical::from_q(QComplex::from_int(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn conj(&self) -> Self {
        Radical { terms: self.terms.iter().map(|(n, c)| (*n, c.conj())).collect() }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let mut r = Radical::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let (outer, inner) = square_split(a * b);
                let factor = QComplex::real(BigRational::from_integer(BigInt::from(outer)));
                r.push(inner, &(ca * cb) * &factor);
            }
        }
        r
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn from_qcomplex(q: QComplex) -> Self {
        Radical::from_q(q)
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(n, c)| if *n == 1 { c.to_string() } else { format!("({})√{}", c, n) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
