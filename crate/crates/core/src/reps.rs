//! Finite-dimensional (A,B) representations of the Lorentz algebra and the
//! discrete matrices acting on one representation block.
//!
//! Basis order inside a spin-j factor is m = j, j−1, …, −j. A block's
//! components are laid out as charge slot (+, −) ⊗ parity slot ((A,B), (B,A))
//! ⊗ (m_A, m_B), with the (B,A) slot reusing the (m_A, m_B) order.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{CMatrix, HalfInt, Matrix, Phase, QComplex, RMatrix, Radical, Ring};
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("space inversion needs a parity-doubled block or A = B, got ({0},{1})")]
    ParityUndefined(HalfInt, HalfInt),
    #[error("phase {0} is not a fourth root of unity")]
    PhaseNotExact(Phase),
    #[error("generator dimensions disagree: {0} vs {1}")]
    Dimension(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Discrete {
    P,
    C,
    T,
    PT,
    CPT,
}

impl Discrete {
    pub fn is_antiunitary(self) -> bool {
        matches!(self, Discrete::T | Discrete::PT | Discrete::CPT)
    }
}

impl fmt::Display for Discrete {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Discrete::P => "P",
            Discrete::C => "C",
            Discrete::T => "T",
            Discrete::PT => "PT",
            Discrete::CPT => "CPT",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RepBlock {
    pub a: HalfInt,
    pub b: HalfInt,
    pub parity_doubled: bool,
    pub charge_doubled: bool,
}

impl RepBlock {
    /// Parity doubling is dropped when A = B, where (A,B)⊕(B,A) would repeat the block.
    pub fn new(a: HalfInt, b: HalfInt, parity_doubled: bool, charge_doubled: bool) -> Self {
        RepBlock { a, b, parity_doubled: parity_doubled && a != b, charge_doubled }
    }

    pub fn irrep_dimension(&self) -> usize {
        self.a.multiplicity() * self.b.multiplicity()
    }

    pub fn parity_slots(&self) -> usize {
        if self.parity_doubled {
            2
        } else {
            1
        }
    }

    pub fn charge_slots(&self) -> usize {
        if self.charge_doubled {
            2
        } else {
            1
        }
    }

    pub fn dimension(&self) -> usize {
        self.irrep_dimension() * self.parity_slots() * self.charge_slots()
    }

    /// True when 2A + 2B is odd, i.e. every spin in the block is half-integer.
    pub fn is_fermionic_label(&self) -> bool {
        (self.a.twice() + self.b.twice()) % 2 == 1
    }
}

impl fmt::Display for RepBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)?;
        if self.parity_doubled {
            write!(f, "+({},{})", self.b, self.a)?;
        }
        if self.charge_doubled {
            write!(f, " x2 charge")?;
        }
        Ok(())
    }
}

pub fn rep_dimension(block: &RepBlock) -> usize {
    block.dimension()
}

fn radical_i() -> Radical {
    Radical::from_q(QComplex::i())
}

fn radical_q(n: i64, d: i64) -> Radical {
    Radical::from_q(QComplex::from_ratio(n, d))
}

/// (J_x, J_y, J_z) for spin j.
pub fn su2_generators(j: HalfInt) -> [RMatrix; 3] {
    let n = j.multiplicity();
    let tj = j.twice() as i64;
    let mut jp = RMatrix::zeros(n, n);
    // row k holds m = j − k; J+ moves column k to row k−1
    for k in 1..n {
        let kk = k as i64;
        jp.set(k - 1, k, Radical::sqrt((kk * (tj - kk + 1)) as u64));
    }
    let jm = jp.transpose();
    let jx = jp.add(&jm).scale(&radical_q(1, 2));
    let jy = jp.sub(&jm).scale(&radical_i().mul_ref(&radical_q(-1, 2)));
    let jz = RMatrix::diagonal((0..n).map(|k| radical_q(tj - 2 * k as i64, 2)).collect());
    [jx, jy, jz]
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraGenerators {
    pub j: [RMatrix; 3],
    pub k: [RMatrix; 3],
}

/// Generators on (2A+1)(2B+1) dimensions: J = A⊗1 + 1⊗B, K = −i(A⊗1 − 1⊗B).
pub fn ab_generators(a: HalfInt, b: HalfInt) -> AlgebraGenerators {
    let ga = su2_generators(a);
    let gb = su2_generators(b);
    let ia = RMatrix::identity(a.multiplicity());
    let ib = RMatrix::identity(b.multiplicity());
    let minus_i = radical_i().neg_ref();
    let left: Vec<RMatrix> = ga.iter().map(|m| m.kron(&ib)).collect();
    let right: Vec<RMatrix> = gb.iter().map(|m| ia.kron(m)).collect();
    let j = std::array::from_fn(|i| left[i].add(&right[i]));
    let k = std::array::from_fn(|i| left[i].sub(&right[i]).scale(&minus_i));
    AlgebraGenerators { j, k }
}

/// Diagonal of J_{34} = A_3 − B_3, i.e. the values a − b in basis order.
pub fn j4_spectrum(a: HalfInt, b: HalfInt) -> Vec<QComplex> {
    let ta = a.twice() as i64;
    let tb = b.twice() as i64;
    let mut out = Vec::new();
    for ka in 0..a.multiplicity() as i64 {
        for kb in 0..b.multiplicity() as i64 {
            out.push(QComplex::from_ratio((ta - 2 * ka) - (tb - 2 * kb), 2));
        }
    }
    out
}

fn first_mismatch(lhs: &RMatrix, rhs: &RMatrix) -> Option<String> {
    lhs.entries()
        .zip(rhs.entries())
        .find(|((_, _, x), (_, _, y))| x != y)
        .map(|((r, c, x), (_, _, y))| format!("entry ({},{}) = {} instead of {}", r, c, x, y))
}

/// Checks [J_i,J_j] = iε J_k, [J_i,K_j] = iε K_k, [K_i,K_j] = −iε J_k exactly.
pub fn verify_lorentz_algebra(g: &AlgebraGenerators) -> Result<Verdict, RepError> {
    let n = g.j[0].rows();
    for m in g.j.iter().chain(g.k.iter()) {
        if m.rows() != n || m.cols() != n {
            return Err(RepError::Dimension(n, m.rows().max(m.cols())));
        }
    }
    let families: [(&str, &[RMatrix; 3], &str, &[RMatrix; 3], &str, &[RMatrix; 3], i64); 3] = [
        ("J", &g.j, "J", &g.j, "J", &g.j, 1),
        ("J", &g.j, "K", &g.k, "K", &g.k, 1),
        ("K", &g.k, "K", &g.k, "J", &g.j, -1),
    ];
    let mut witnesses = Vec::new();
    for (ln, l, rn, r, on, out, cs) in families.iter() {
        for a in 0..3 {
            for b in 0..3 {
                let lhs = l[a].commutator(&r[b]).map_err(|_| RepError::Dimension(n, 0))?;
                let (expected, rhs) = match levi_civita(a, b) {
                    Some((c, sign)) => {
                        let s = cs * sign;
                        let m = out[c].scale(&radical_i().mul_ref(&radical_q(s, 1)));
                        (m, format!("{}i{}{}", if s < 0 { "-" } else { "" }, on, c + 1))
                    }
                    None => (RMatrix::zeros(n, n), "0".to_string()),
                };
                if let Some(found) = first_mismatch(&lhs, &expected) {
                    witnesses.push(Witness::new(format!("[{}{},{}{}]", ln, a + 1, rn, b + 1), rhs, found));
                }
            }
        }
    }
    Ok(Verdict::from_witnesses(witnesses))
}

/// ε_{abc} for the given pair: the remaining index and its sign.
fn levi_civita(a: usize, b: usize) -> Option<(usize, i64)> {
    if a == b {
        return None;
    }
    let c = 3 - a - b;
    let sign = if (a + 1) % 3 == b { 1 } else { -1 };
    Some((c, sign))
}

/// Rotation by π about the y axis: Y[−m, m] = (−1)^{j−m}.
pub fn pi_rotation_matrix(j: HalfInt) -> CMatrix {
    let n = j.multiplicity();
    let mut y = CMatrix::zeros(n, n);
    for c in 0..n {
        // column c carries m = j − c, so j − m = c
        let sign = if c % 2 == 0 { 1 } else { -1 };
        y.set(n - 1 - c, c, QComplex::from_int(sign));
    }
    y
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RealityClass {
    Real,
    Imaginary,
}

impl fmt::Display for RealityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealityClass::Real => "Real",
            RealityClass::Imaginary => "Imaginary",
        })
    }
}

pub fn reality_class(j: HalfInt) -> RealityClass {
    if j.is_integer() {
        RealityClass::Real
    } else {
        RealityClass::Imaginary
    }
}

/// Passes iff D* = D for integer j and D* = −D for half-integer j.
pub fn verify_t_reality(d: &CMatrix, j: HalfInt) -> Verdict {
    let class = reality_class(j);
    let target = match class {
        RealityClass::Real => d.clone(),
        RealityClass::Imaginary => d.neg(),
    };
    let conj = d.conj();
    let witnesses = conj
        .entries()
        .zip(target.entries())
        .filter(|((_, _, x), (_, _, y))| x != y)
        .map(|((r, c, _), _)| {
            Witness::new(
                format!("D_t({},{}) for j={}", r, c, j),
                format!("{} entry", class),
                d.get(r, c).to_string(),
            )
        })
        .collect();
    Verdict::from_witnesses(witnesses)
}

fn exact_phase(p: &Phase) -> Result<QComplex, RepError> {
    p.to_qcomplex().ok_or_else(|| RepError::PhaseNotExact(p.clone()))
}

fn charge_identity(block: &RepBlock) -> CMatrix {
    CMatrix::identity(block.charge_slots())
}

fn parity_identity(block: &RepBlock) -> CMatrix {
    CMatrix::identity(block.parity_slots())
}

/// D(I_s), D(I_c) or D(I_t) on one block, scaled by the given phase. Composite
/// kinds are the products C·P·T in that order, each factor carrying `phase`
/// only once.
pub fn discrete_matrix(kind: Discrete, block: &RepBlock, phase: &Phase) -> Result<CMatrix, RepError> {
    let nu = exact_phase(phase)?;
    let inner = CMatrix::identity(block.irrep_dimension());
    let m = match kind {
        Discrete::P => {
            if block.parity_doubled {
                let swap = CMatrix::from_ints(&[&[0, 1], &[1, 0]]);
                charge_identity(block).kron(&swap).kron(&inner)
            } else if block.a == block.b {
                CMatrix::identity(block.dimension())
            } else {
                return Err(RepError::ParityUndefined(block.a, block.b));
            }
        }
        Discrete::C => {
            let signs = if block.charge_doubled {
                CMatrix::diagonal(vec![QComplex::from_int(1), QComplex::from_int(-1)])
            } else {
                CMatrix::identity(1)
            };
            signs.kron(&parity_identity(block)).kron(&inner)
        }
        Discrete::T => {
            let kappa = if block.is_fermionic_label() { QComplex::i() } else { QComplex::from_int(1) };
            let y = pi_rotation_matrix(block.a).kron(&pi_rotation_matrix(block.b)).scale(&kappa);
            charge_identity(block).kron(&parity_identity(block)).kron(&y)
        }
        Discrete::PT => {
            let one = Phase::one();
            discrete_matrix(Discrete::P, block, &one)?.mul(&discrete_matrix(Discrete::T, block, &one)?)
        }
        Discrete::CPT => {
            let one = Phase::one();
            discrete_matrix(Discrete::C, block, &one)?.mul(&discrete_matrix(Discrete::PT, block, &one)?)
        }
    };
    Ok(m.scale(&nu))
}

/// Rational form of a generator, when it has no irrational entries.
pub fn to_exact(m: &RMatrix) -> Option<CMatrix> {
    m.to_cmatrix()
}

pub fn lift(m: &CMatrix) -> RMatrix {
    Matrix::from(m)
}
