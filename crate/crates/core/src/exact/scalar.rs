//! Exact scalars: half-integers, Gaussian rationals and phases.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// Shorthand for building a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A non-negative half-integer `j`, stored as `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub fn from_twice(twice: u32) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    /// `2j + 1`.
    pub fn multiplicity(self) -> usize {
        self.0 as usize + 1
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_rational(self) -> BigRational {
        rat(self.0 as i64, 2)
    }

    /// Parses `0`, `1`, `1/2`, `3/2`, ...
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: u32 = n.trim().parse().ok()?;
            match d.trim() {
                "2" if n % 2 == 1 => Some(HalfInt(n)),
                _ => None,
            }
        } else {
            let n: u32 = s.parse().ok()?;
            Some(HalfInt(n.checked_mul(2)?))
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl QComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        QComplex { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        QComplex { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::real(rat(num, den))
    }

    pub fn i() -> Self {
        QComplex { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(QComplex { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QComplex { re: &self.re * r, im: &self.im * r }
    }

    /// Parses literals such as `1`, `-2/3`, `i`, `-i`, `3i/4`, `1/2+3i/4`, `2-i`.
    pub fn parse(s: &str) -> Option<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        // split into signed chunks at '+'/'-' that are not leading
        let bytes = s.as_bytes();
        let mut cuts = vec![0];
        for (k, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[k - 1] != b'/' {
                cuts.push(k);
            }
        }
        cuts.push(s.len());
        let mut acc = QComplex::zero();
        for w in cuts.windows(2) {
            let chunk = &s[w[0]..w[1]];
            acc = acc + parse_chunk(chunk)?;
        }
        Some(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        Some(BigRational::from_integer(s.parse().ok()?))
    }
}

fn parse_chunk(chunk: &str) -> Option<QComplex> {
    let (neg, body) = match chunk.as_bytes().first()? {
        b'+' => (false, &chunk[1..]),
        b'-' => (true, &chunk[1..]),
        _ => (false, chunk),
    };
    if body.is_empty() {
        return None;
    }
    let value = if let Some(pos) = body.find('i') {
        // forms: i, ni, i/d, ni/d
        let (before, after) = (&body[..pos], &body[pos + 1..]);
        let num = if before.is_empty() { BigRational::one() } else { parse_rational(before)? };
        let coeff = if after.is_empty() {
            num
        } else {
            let d = after.strip_prefix('/')?;
            if before.contains('/') {
                return None;
            }
            num / parse_rational(d)?
        };
        QComplex::new(BigRational::zero(), coeff)
    } else {
        QComplex::real(parse_rational(body)?)
    };
    Some(if neg { -value } else { value })
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |im: &BigRational| -> String {
            let a = im.abs();
            if a.is_one() {
                "i".to_string()
            } else if a.denom().is_one() {
                format!("{}i", a.numer())
            } else {
                format!("{}i/{}", a.numer(), a.denom())
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{}{}", sign, im_part(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}", fmt_rational(&self.re), sign, im_part(&self.im))
            }
        }
    }
}

impl Add for QComplex {
    type Output = QComplex;
    fn add(self, o: QComplex) -> QComplex {
        QComplex { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<'a> Add<&'a QComplex> for &'a QComplex {
    type Output = QComplex;
    fn add(self, o: &QComplex) -> QComplex {
        QComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl AddAssign for QComplex {
    fn add_assign(&mut self, o: QComplex) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for QComplex {
    type Output = QComplex;
    fn sub(self, o: QComplex) -> QComplex {
        QComplex { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<'a> Sub<&'a QComplex> for &'a QComplex {
    type Output = QComplex;
    fn sub(self, o: &QComplex) -> QComplex {
        QComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for QComplex {
    type Output = QComplex;
    fn mul(self, o: QComplex) -> QComplex {
        &self * &o
    }
}

impl<'a> Mul<&'a QComplex> for &'a QComplex {
    type Output = QComplex;
    fn mul(self, o: &QComplex) -> QComplex {
        QComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex { re: -self.re, im: -self.im }
    }
}

impl Ring for QComplex {
    fn zero() -> Self {
        QComplex { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn one() -> Self {
        QComplex::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn conj(&self) -> Self {
        QComplex { re: self.re.clone(), im: -&self.im }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn from_qcomplex(q: QComplex) -> Self {
        q
    }
}

/// A unimodular c-number `e^{2πi·turns}` with `turns ∈ [0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Phase {
    turns: BigRational,
}

impl Phase {
    pub fn one() -> Self {
        Phase { turns: BigRational::zero() }
    }

    pub fn from_turns(turns: BigRational) -> Self {
        let floor = turns.floor();
        Phase { turns: turns - floor }
    }

    pub fn turns(&self) -> &BigRational {
        &self.turns
    }

    pub fn mul(&self, o: &Phase) -> Phase {
        Phase::from_turns(&self.turns + &o.turns)
    }

    pub fn conj(&self) -> Phase {
        Phase::from_turns(-&self.turns)
    }

    /// Exact value for the fourth roots of unity; other phases stay symbolic.
    pub fn to_qcomplex(&self) -> Option<QComplex> {
        let four = &self.turns * BigRational::from_integer(BigInt::from(4));
        if !four.is_integer() {
            return None;
        }
        let k: i64 = four.to_integer().try_into().ok()?;
        Some(match k {
            0 => QComplex::from_int(1),
            1 => QComplex::i(),
            2 => QComplex::from_int(-1),
            _ => -QComplex::i(),
        })
    }

    /// Reads `1`, `-1`, `i`, `-i`, or `turns:p/q`.
    pub fn parse(s: &str) -> Option<Phase> {
        let s = s.trim();
        if let Some(t) = s.strip_prefix("turns:") {
            return parse_rational(t.trim()).map(Phase::from_turns);
        }
        let q = QComplex::parse(s)?;
        let k = if q == QComplex::from_int(1) {
            0
        } else if q == QComplex::i() {
            1
        } else if q == QComplex::from_int(-1) {
            2
        } else if q == -QComplex::i() {
            3
        } else {
            return None;
        };
        Some(Phase::from_turns(rat(k, 4)))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_qcomplex() {
            Some(q) => write!(f, "{}", q),
            None => write!(f, "turns:{}", fmt_rational(&self.turns)),
        }
    }
}
