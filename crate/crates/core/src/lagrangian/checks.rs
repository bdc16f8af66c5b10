//! Hermiticity, gauge invariance and discrete transformations of Lagrangians.

use num_rational::BigRational;
use num_traits::Zero;

use super::structured::{DynTerm, Lagrangian, Slot, Term};
use super::term::{PointError, PointLabel, PointMap, Poly};
use crate::exact::{fmt_rational, QComplex, Ring};
use crate::field::FSystem;
use crate::reps::Discrete;
use crate::umatrix::{expected_sign, reality_sign, Part, StatisticsAssignment, UMatrixSet};
use crate::verdict::{Verdict, Witness};

/// Everything needed to expand a Lagrangian to components.
pub struct Context<'a> {
    pub sys: &'a FSystem,
    pub u: &'a UMatrixSet,
    pub stats: &'a StatisticsAssignment,
}

impl<'a> Context<'a> {
    pub fn new(sys: &'a FSystem, u: &'a UMatrixSet, stats: &'a StatisticsAssignment) -> Self {
        Context { sys, u, stats }
    }

    pub fn odd(&self) -> impl Fn(usize) -> bool + '_ {
        move |k| self.stats.is_fermi(k)
    }

    pub fn expand(&self, l: &Lagrangian) -> Poly {
        l.expand(self.sys, self.u, &self.odd())
    }

    pub fn expand_term(&self, t: &Term) -> Poly {
        t.expand(self.sys, self.u, &self.odd())
    }

    pub fn describe(&self, p: &Poly) -> String {
        describe_poly(p, self.sys)
    }
}

pub fn describe_monomial(fs: &[super::term::OperatorFactor], sys: &FSystem) -> String {
    fs.iter()
        .map(|f| {
            let mut s = String::new();
            if let Some(m) = f.deriv {
                s.push_str(&format!("d{} ", m));
            }
            if f.delta {
                s.push('δ');
            }
            s.push_str(&sys.component(f.component).label);
            if f.conj {
                s.push('*');
            }
            if f.point != PointLabel::X {
                s.push_str(&format!("({})", f.point));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn describe_poly(p: &Poly, sys: &FSystem) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.iter()
        .map(|(m, c)| format!("({})·{}", c, describe_monomial(&m.0, sys)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn first_difference(a: &Poly, b: &Poly, sys: &FSystem) -> Option<(String, String, String)> {
    let diff = a.sub(b);
    let first = diff.iter().next().map(|(m, _)| m.clone());
    first.map(|m| {
        let find = |p: &Poly| {
            p.iter().find(|(k, _)| **k == m).map(|(_, c)| c.to_string()).unwrap_or_else(|| "0".to_string())
        };
        (describe_monomial(&m.0, sys), find(b), find(a))
    })
}

/// L = L† after erasing conjugation flags, monomial by monomial.
pub fn check_hermiticity(l: &Lagrangian, ctx: &Context) -> Verdict {
    let odd = ctx.odd();
    let mut witnesses = Vec::new();
    for (name, t) in l.labelled_terms() {
        let p = ctx.expand_term(t).erase_conj(&odd);
        let d = p.dagger(&odd);
        if let Some((mono, want, got)) = first_difference(&d, &p, ctx.sys) {
            witnesses.push(Witness::new(format!("{}: {}", name, mono), want, format!("{} in the adjoint", got)));
        }
    }
    Verdict::from_witnesses(witnesses)
}

/// Summed charge of every monomial vanishes; a conjugated factor counts −q.
pub fn check_gauge(l: &Lagrangian, ctx: &Context) -> Verdict {
    if ctx.sys.is_neutral() {
        return Verdict::pass();
    }
    let mut witnesses = Vec::new();
    for (name, t) in l.labelled_terms() {
        let p = ctx.expand_term(t);
        for (m, _) in p.iter() {
            let total = m.0.iter().fold(BigRational::zero(), |acc, f| {
                let q = ctx.sys.component_charge(f.component);
                if f.conj {
                    acc - q
                } else {
                    acc + q
                }
            });
            if !total.is_zero() {
                witnesses.push(Witness::new(
                    format!("{}: {}", name, describe_monomial(&m.0, ctx.sys)),
                    "charge 0",
                    format!("charge {}", fmt_rational(&total)),
                ));
                break;
            }
        }
    }
    Verdict::from_witnesses(witnesses)
}

fn map_point(p: PointLabel, m: Option<PointMap>) -> Result<PointLabel, PointError> {
    match m {
        Some(m) => p.apply(m),
        None => Ok(p),
    }
}

fn derivative_flip(kind: Discrete, mu: usize) -> i64 {
    match kind {
        Discrete::P => {
            if mu == 0 {
                1
            } else {
                -1
            }
        }
        Discrete::T => {
            if mu == 0 {
                -1
            } else {
                1
            }
        }
        Discrete::PT | Discrete::CPT => -1,
        Discrete::C => 1,
    }
}

fn point_map(kind: Discrete) -> Option<PointMap> {
    match kind {
        Discrete::P => Some(PointMap::Is),
        Discrete::T => Some(PointMap::It),
        Discrete::PT | Discrete::CPT => Some(PointMap::Neg),
        Discrete::C => None,
    }
}

fn map_slot(slot: &Slot, kind: Discrete) -> Result<Slot, PointError> {
    let mut s = slot.clone();
    s.point = map_point(s.point, point_map(kind))?;
    if let Some(d) = &mut s.deriv {
        for mu in 0..4 {
            d.sign[mu] = d.sign[mu].scale(&BigRational::from_integer(derivative_flip(kind, mu).into()));
        }
    }
    if kind.is_antiunitary() {
        s.conj = !s.conj;
    }
    Ok(s)
}

fn law_sign(kind: Discrete, mu: usize, part: Part) -> i64 {
    match kind {
        // C commutes with U, so CPT carries the PT law
        Discrete::CPT => expected_sign(Discrete::PT, mu, part),
        k => expected_sign(k, mu, part),
    }
}

/// Image of one term under a discrete transformation: each U^μ part picks up
/// its sign law, points and derivatives are mapped, and antiunitary kinds
/// conjugate the coefficient and flip conjugation flags.
pub fn transform_term(t: &Term, kind: Discrete) -> Result<Term, PointError> {
    let mut out = t.clone();
    if kind.is_antiunitary() {
        out.coeff = t.coeff.conj();
    }
    for seg in &mut out.segments {
        seg.left = map_slot(&seg.left, kind)?;
        seg.right = map_slot(&seg.right, kind)?;
        for e in &mut seg.chain {
            for mu in 0..4 {
                for part in [Part::A, Part::S] {
                    let s = QComplex::from_int(law_sign(kind, mu, part));
                    e.scale_weight(part, mu, &s);
                }
            }
        }
    }
    Ok(out)
}

pub fn transform_lagrangian(l: &Lagrangian, kind: Discrete) -> Result<Lagrangian, PointError> {
    let kinematic = l.kinematic.iter().map(|t| transform_term(t, kind)).collect::<Result<Vec<_>, _>>()?;
    let dynamic = l
        .dynamic
        .iter()
        .map(|t| transform_term(t.term(), kind).map(DynTerm::new_unchecked))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Lagrangian { kinematic, dynamic })
}

/// Complex conjugate of a term: coefficient and U entries conjugated, the
/// latter through conj(U_part) = ±U_part, and conjugation flags flipped.
pub fn conj_image(t: &Term) -> Term {
    let mut out = t.clone();
    out.coeff = t.coeff.conj();
    for seg in &mut out.segments {
        for slot in [&mut seg.left, &mut seg.right] {
            slot.conj = !slot.conj;
            if let Some(d) = &mut slot.deriv {
                d.sign = d.sign.clone().map(|s| s.conj());
            }
        }
        for e in &mut seg.chain {
            for mu in 0..4 {
                e.wa[mu] = e.wa[mu].conj().scale(&BigRational::from_integer(reality_sign(Part::A).into()));
                e.ws[mu] = e.ws[mu].conj().scale(&BigRational::from_integer(reality_sign(Part::S).into()));
            }
        }
    }
    out
}

/// Re-labels the point x everywhere as `to`.
pub fn at_point(t: &Term, to: PointLabel) -> Term {
    let mut out = t.clone();
    for seg in &mut out.segments {
        for slot in [&mut seg.left, &mut seg.right] {
            if slot.point == PointLabel::X {
                slot.point = to;
            }
        }
    }
    out
}

fn compare_terms(name: &str, lhs: &Term, rhs: &Term, ctx: &Context, what: &str) -> Option<Witness> {
    let a = ctx.expand_term(lhs);
    let b = ctx.expand_term(rhs);
    first_difference(&a, &b, ctx.sys).map(|(mono, want, got)| {
        Witness::new(format!("{}: {}", name, mono), want, got).detail("check", what.to_string())
    })
}

/// {CPT L[x] (CPT)⁻¹}* = L[−x], term by term. Odd U-power sums are reported
/// structurally as well as through the residue they leave.
pub fn cpt_verdict(l: &Lagrangian, ctx: &Context) -> Verdict {
    let mut witnesses = Vec::new();
    for (name, t) in l.labelled_terms() {
        let k = t.power_sum();
        let parity = (k + t.derivative_count()) % 2;
        if parity != 0 {
            witnesses.push(
                Witness::new(name.clone(), "even U-power plus derivative count", format!("{} (sign -1)", k + t.derivative_count()))
                    .detail("kind", "parity")
                    .detail("k_powers", format!("{:?}", t.k_powers())),
            );
            continue;
        }
        let image = match transform_term(t, Discrete::CPT) {
            Ok(img) => conj_image(&img),
            Err(e) => {
                witnesses.push(Witness::new(name.clone(), "points at x", e.to_string()));
                continue;
            }
        };
        if let Some(w) = compare_terms(&name, &image, &at_point(t, PointLabel::NegX), ctx, "CPT") {
            witnesses.push(w.detail("kind", "phase residue"));
        }
    }
    Verdict::from_witnesses(witnesses)
}

/// P-image = L_kin[I_s x], C-image = L_kin, T-image = conj-image of L_kin at I_t x.
pub fn check_kinematic_invariance(kin: &[Term], ctx: &Context) -> Verdict {
    let mut witnesses = Vec::new();
    for (k, t) in kin.iter().enumerate() {
        let name = format!("kinematic[{}]", k);
        let cases: [(Discrete, Term); 3] = [
            (Discrete::P, at_point(t, PointLabel::IsX)),
            (Discrete::C, t.clone()),
            (Discrete::T, conj_image(&at_point(t, PointLabel::ItX))),
        ];
        for (kind, want) in cases {
            match transform_term(t, kind) {
                Ok(img) => witnesses.extend(compare_terms(&name, &img, &want, ctx, &kind.to_string())),
                Err(e) => witnesses.push(Witness::new(name.clone(), kind.to_string(), e.to_string())),
            }
        }
    }
    Verdict::from_witnesses(witnesses)
}
