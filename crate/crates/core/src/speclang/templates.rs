//! Built-in field blocks with fixed coupling matrices.
//!
//! `vector-fieldstrength A F` is a (½,½) vector plus a (0,1)⊕(1,0) tensor, both
//! in the adapted basis, coupled only through antisymmetric real U^μ.
//! `dirac-doubled psi` is a charge-doubled (0,½)⊕(½,0) spinor in the native
//! basis with U^μ = 1_charge ⊗ iα^μ on the (parity ⊗ spin) factor, where
//!
//! ```text
//! α⁰ = 1₄   α¹ = σ_z⊗σ_z   α² = σ_z⊗σ_x   α³ = α¹ + α²
//! ```
//!
//! These α^μ are real symmetric and compatible with the discrete matrices of
//! the block; they are not a Clifford algebra.

use crate::exact::{CMatrix, HalfInt, Phase, QComplex};
use crate::field::{Basis, FieldSpec};
use crate::lagrangian::structured::{build_kinematic, ChainElem, DynTerm, Lagrangian, MuLabel, Segment, Slot, Term};
use crate::reps::RepBlock;
use crate::umatrix::Part;

/// A named matrix family shown in place of its entries, e.g. iα^μ on ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedBlock {
    pub field: String,
    pub symbol: String,
    /// U^μ restricted to the field equals `factor · matrices[μ]`.
    pub factor: QComplex,
    pub matrices: [CMatrix; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateBlock {
    pub fields: Vec<FieldSpec>,
    pub u: [CMatrix; 4],
    pub named: Vec<NamedBlock>,
}

pub const TEMPLATE_NAMES: [&str; 3] = ["spin0", "vector-fieldstrength", "dirac-doubled"];

/// Number of field names each template takes.
pub fn arity(template: &str) -> Option<usize> {
    match template {
        "spin0" | "dirac-doubled" => Some(1),
        "vector-fieldstrength" => Some(2),
        _ => None,
    }
}

pub fn instantiate(template: &str, names: &[String]) -> Option<TemplateBlock> {
    if arity(template)? != names.len() {
        return None;
    }
    Some(match template {
        "spin0" => spin0(&names[0]),
        "vector-fieldstrength" => vector_fieldstrength(&names[0], &names[1]),
        "dirac-doubled" => dirac_doubled(&names[0]),
        _ => unreachable!(),
    })
}

pub fn spin0(name: &str) -> TemplateBlock {
    let block = RepBlock::new(HalfInt::ZERO, HalfInt::ZERO, false, false);
    TemplateBlock {
        fields: vec![FieldSpec::new(name, block, HalfInt::ZERO)],
        u: std::array::from_fn(|_| CMatrix::zeros(1, 1)),
        named: Vec::new(),
    }
}

fn q(n: i64, d: i64) -> QComplex {
    QComplex::from_ratio(n, d)
}

/// Antisymmetric 10×10 coupling with `b` as the (A, F) block.
fn vector_coupling(b: &[[QComplex; 6]; 4]) -> CMatrix {
    let mut m = CMatrix::zeros(10, 10);
    for (r, row) in b.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m.set(r, 4 + c, v.clone());
            m.set(4 + c, r, -v.clone());
        }
    }
    m
}

pub fn vector_fieldstrength(a: &str, f: &str) -> TemplateBlock {
    let vec_block = RepBlock::new(HalfInt::HALF, HalfInt::HALF, false, false);
    let ten_block = RepBlock::new(HalfInt::ZERO, HalfInt::ONE, true, false);
    let a_labels = (0..4).map(|k| format!("{}_{}", a, k)).collect();
    let f_labels = ["01", "02", "03", "23", "31", "12"].iter().map(|s| format!("{}^{{{}}}", f, s)).collect();
    let fields = vec![
        FieldSpec::new(a, vec_block, HalfInt::ONE).with_basis(Basis::Adapted).with_labels(a_labels),
        FieldSpec::new(f, ten_block, HalfInt::ONE)
            .with_basis(Basis::Adapted)
            .with_t_phase(Phase::parse("-1").expect("literal phase"))
            .with_labels(f_labels),
    ];
    let z = || q(0, 1);
    let h = || q(1, 2);
    let nh = || q(-1, 2);
    // U⁰ pairs A_k with F^{0k}; U^k pairs A with the F^{kl} slot
    let u0 = [
        [z(), z(), z(), z(), z(), z()],
        [h(), z(), z(), z(), z(), z()],
        [z(), h(), z(), z(), z(), z()],
        [z(), z(), h(), z(), z(), z()],
    ];
    let u1 = [
        [z(), z(), z(), nh(), z(), h()],
        [z(), z(), z(), z(), z(), z()],
        [z(), z(), z(), z(), z(), z()],
        [z(), z(), z(), z(), z(), z()],
    ];
    let u2 = [
        [z(), z(), z(), z(), z(), z()],
        [z(), z(), z(), z(), h(), z()],
        [z(), z(), z(), z(), z(), z()],
        [z(), z(), z(), z(), h(), z()],
    ];
    let u3 = [
        [z(), z(), z(), z(), z(), z()],
        [z(), z(), z(), z(), z(), z()],
        [z(), z(), z(), h(), z(), h()],
        [z(), z(), z(), z(), z(), z()],
    ];
    TemplateBlock {
        fields,
        u: [vector_coupling(&u0), vector_coupling(&u1), vector_coupling(&u2), vector_coupling(&u3)],
        named: Vec::new(),
    }
}

/// α^μ on (parity slot ⊗ spin).
pub fn alpha(mu: usize) -> CMatrix {
    let z = CMatrix::from_ints(&[&[1, 0], &[0, -1]]);
    let x = CMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    match mu {
        0 => CMatrix::identity(4),
        1 => z.kron(&z),
        2 => z.kron(&x),
        3 => z.kron(&z).add(&z.kron(&x)),
        _ => panic!("spacetime index {} out of range", mu),
    }
}

pub fn dirac_doubled(name: &str) -> TemplateBlock {
    let block = RepBlock::new(HalfInt::ZERO, HalfInt::HALF, true, true);
    let labels = (1..=2).flat_map(|c| (0..4).map(move |k| format!("{}{}_{}", name, c, k))).collect();
    let display = if name == "psi" { "ψ".to_string() } else { name.to_string() };
    let field = FieldSpec::new(name, block, HalfInt::HALF).with_labels(labels).with_display(display.clone());
    let i = QComplex::i();
    let alphas: [CMatrix; 4] = std::array::from_fn(|mu| CMatrix::identity(2).kron(&alpha(mu)));
    TemplateBlock {
        fields: vec![field],
        u: std::array::from_fn(|mu| alphas[mu].scale(&i)),
        named: vec![NamedBlock { field: name.to_string(), symbol: "α".to_string(), factor: i, matrices: alphas }],
    }
}

/// Concatenates blocks in order, with block-diagonal U^μ.
pub fn assemble(blocks: Vec<TemplateBlock>) -> TemplateBlock {
    let mut fields = Vec::new();
    let mut named = Vec::new();
    let mut parts: [Vec<CMatrix>; 4] = Default::default();
    for b in blocks {
        fields.extend(b.fields);
        named.extend(b.named);
        for (mu, m) in b.u.into_iter().enumerate() {
            parts[mu].push(m);
        }
    }
    let u = std::array::from_fn(|mu| CMatrix::direct_sum(&parts[mu]).unwrap_or_else(|_| CMatrix::zeros(0, 0)));
    TemplateBlock { fields, u, named }
}

/// The interacting spin-1 / spin-½ system: A, F and a charged ψ.
pub fn interacting_one_half() -> TemplateBlock {
    let mut b = assemble(vec![vector_fieldstrength("A", "F"), dirac_doubled("psi")]);
    b.fields[2].charge = num_rational::BigRational::from_integer(1.into());
    b
}

/// Kinematic part plus a·(A U_A U_A A) + b·(F U_A U_A F) + c·(ψ U_S U_S ψ)
/// and the coupling e·(A U_A^μ F)(ψ* U_S^μ U_S^ν U_S^ρ ψ). The ψ self-term
/// vanishes identically for hermitian components and is kept as written.
pub fn interacting_one_half_lagrangian(a: i64, b: i64, c: i64, e: i64) -> Lagrangian {
    let (m, n, r) = (MuLabel::Sum('m'), MuLabel::Sum('n'), MuLabel::Sum('r'));
    let ua = |mu| ChainElem::part(mu, Part::A);
    let us = |mu| ChainElem::part(mu, Part::S);
    let quad = |k: i64, field: usize, el: &dyn Fn(MuLabel) -> ChainElem| {
        Term::new(QComplex::from_int(k), vec![Segment::new(Slot::of(field), vec![el(m), el(m)], Slot::of(field))])
    };
    let coupling = Term::new(
        QComplex::from_int(e),
        vec![
            Segment::new(Slot::of(0), vec![ua(m)], Slot::of(1)),
            Segment::new(Slot::of(2).conj(), vec![us(m), us(n), us(r)], Slot::of(2)),
        ],
    );
    let dynamic = [quad(a, 0, &ua), quad(b, 1, &ua), quad(c, 2, &us), coupling]
        .into_iter()
        .map(|t| DynTerm::new(t).expect("even power sums, real coefficients"))
        .collect();
    Lagrangian { kinematic: build_kinematic(), dynamic }
}
