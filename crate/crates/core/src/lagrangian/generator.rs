//! Surface generators F(δχ), F(δπ), their symmetric form, and the split into
//! fundamental and non-fundamental components.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::term::{OperatorFactor, Poly};
use crate::exact::{rat, CMatrix, QComplex, Ring};
use crate::field::{FSystem, Statistics};
use crate::speclang::templates::NamedBlock;
use crate::umatrix::{StatisticsAssignment, UMatrixSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("surface normal ({0}) is not a unit timelike vector")]
    NotTimelike(String),
    #[error("{0}")]
    Dimension(String),
}

pub fn time_normal() -> [QComplex; 4] {
    [QComplex::from_int(1), QComplex::zero(), QComplex::zero(), QComplex::zero()]
}

fn check_normal(n: &[QComplex; 4]) -> Result<(), GeneratorError> {
    let real = n.iter().all(QComplex::is_real);
    let norm = n[1..].iter().fold(n[0].re.clone() * n[0].re.clone(), |acc, c| acc - c.re.clone() * c.re.clone());
    if !real || norm != rat(1, 1) || !n[0].re.is_positive() {
        let s = n.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        return Err(GeneratorError::NotTimelike(s));
    }
    Ok(())
}

/// One bilinear c · χ^a δχ^b (or δχ^a χ^b for the dual form).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenTerm {
    pub coeff: QComplex,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorExpr {
    pub normal: [QComplex; 4],
    /// Σ n_μ U^μ.
    pub m: CMatrix,
    /// ∫ds π_l δχ^l = Σ m_rl χ^r δχ^l.
    pub f_dchi: Vec<GenTerm>,
    /// −∫ds δπ_l χ^l = −Σ m_rl δχ^r χ^l.
    pub f_dpi: Vec<GenTerm>,
    /// F(δχ) with exact variations δ(χ^r χ^l) removed; terms are momentum
    /// component `a` times the variation of component `b`.
    pub reduced: Vec<GenTerm>,
}

pub fn derive_generator(
    sys: &FSystem,
    u: &UMatrixSet,
    stats: &StatisticsAssignment,
    n: &[QComplex; 4],
) -> Result<GeneratorExpr, GeneratorError> {
    check_normal(n)?;
    u.check_dimension(sys.dimension()).map_err(|e| GeneratorError::Dimension(e.to_string()))?;
    let m = u.contract(n);
    let mut f_dchi = Vec::new();
    let mut f_dpi = Vec::new();
    for (r, l, v) in m.entries() {
        if v.is_zero() {
            continue;
        }
        f_dchi.push(GenTerm { coeff: v.clone(), a: r, b: l });
        f_dpi.push(GenTerm { coeff: -v.clone(), a: r, b: l });
    }
    let reduced = reduce(&m, stats);
    Ok(GeneratorExpr { normal: n.clone(), m, f_dchi, f_dpi, reduced })
}

fn reduce(m: &CMatrix, stats: &StatisticsAssignment) -> Vec<GenTerm> {
    let mut acc: BTreeMap<(usize, usize), QComplex> = BTreeMap::new();
    let n = m.rows();
    for r in 0..n {
        for l in r..n {
            let fermi = stats.components[r] == Statistics::Fermi && stats.components[l] == Statistics::Fermi;
            if r == l {
                if fermi && !m.get(r, r).is_zero() {
                    acc.insert((r, r), m.get(r, r).clone());
                }
                continue;
            }
            let (crl, clr) = (m.get(r, l), m.get(l, r));
            // c_rl χ^r δχ^l − c_rl δ(χ^r χ^l) moves onto χ^l δχ^r
            let c = if fermi { clr + crl } else { clr - crl };
            if !c.is_zero() {
                acc.insert((l, r), c);
            }
        }
    }
    let mut out: Vec<GenTerm> = acc.into_iter().map(|((a, b), coeff)| GenTerm { coeff, a, b }).collect();
    out.sort_by_key(|t| (t.b, t.a));
    out
}

impl GeneratorExpr {
    pub fn f_dchi_poly(&self, odd: &dyn Fn(usize) -> bool) -> Poly {
        let mut p = Poly::new();
        for t in &self.f_dchi {
            p.add_product(t.coeff.clone(), vec![OperatorFactor::field(t.a), OperatorFactor::variation(t.b)], odd);
        }
        p
    }

    pub fn f_dpi_poly(&self, odd: &dyn Fn(usize) -> bool) -> Poly {
        let mut p = Poly::new();
        for t in &self.f_dpi {
            p.add_product(t.coeff.clone(), vec![OperatorFactor::variation(t.a), OperatorFactor::field(t.b)], odd);
        }
        p
    }

    pub fn f_sym_poly(&self, odd: &dyn Fn(usize) -> bool) -> Poly {
        let mut p = self.f_dchi_poly(odd);
        p.add_poly(&self.f_dpi_poly(odd));
        p.scale(&QComplex::from_ratio(1, 2))
    }

    /// π_l δχ^l = −δπ_l χ^l as graded polynomials.
    pub fn momentum_exchange_holds(&self, odd: &dyn Fn(usize) -> bool) -> bool {
        self.f_dchi_poly(odd) == self.f_dpi_poly(odd)
    }

    fn surface(&self) -> String {
        if self.normal == time_normal() {
            "ds₀".to_string()
        } else {
            "ds_n".to_string()
        }
    }

    /// Component-level reduced form, one term per line.
    pub fn component_form(&self, sys: &FSystem) -> Vec<String> {
        self.reduced
            .iter()
            .map(|t| format!("({}) {} δ{}", t.coeff, sys.component(t.a).label, sys.component(t.b).label))
            .collect()
    }

    /// Compact form: equal-coefficient families share an index ν, named
    /// blocks print by symbol, an overall minus sign is factored out.
    pub fn schematic(&self, sys: &FSystem, named: &[NamedBlock]) -> String {
        let mut groups: BTreeMap<(usize, usize), Vec<&GenTerm>> = BTreeMap::new();
        for t in &self.reduced {
            let key = (sys.component(t.a).index.field, sys.component(t.b).index.field);
            groups.entry(key).or_default().push(t);
        }
        let parts: Vec<(QComplex, String)> =
            groups.iter().map(|(&(fa, fb), ts)| self.render_group(sys, named, fa, fb, ts)).collect();
        if parts.is_empty() {
            return "0".to_string();
        }
        let lead_negative = is_negative(&parts[0].0);
        let flip = if lead_negative { QComplex::from_int(-1) } else { QComplex::from_int(1) };
        let mut body = String::new();
        for (k, (c, s)) in parts.iter().enumerate() {
            let c = c * &flip;
            let neg = is_negative(&c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    body.push('−');
                }
            } else {
                body.push_str(if neg { " − " } else { " + " });
            }
            body.push_str(&coeff_prefix(&mag));
            body.push_str(s);
        }
        let sign = if lead_negative { "−" } else { "" };
        format!("{}∫{} ({})", sign, self.surface(), body)
    }

    fn render_group(
        &self,
        sys: &FSystem,
        named: &[NamedBlock],
        fa: usize,
        fb: usize,
        ts: &[&GenTerm],
    ) -> (QComplex, String) {
        let field_a = &sys.fields()[fa];
        if fa == fb {
            if let Some(nb) = named.iter().find(|nb| nb.field == field_a.name) {
                if let Some(s) = self.match_named(sys, fa, nb, ts) {
                    return (nb.factor.clone(), s);
                }
            }
        }
        let c0 = ts[0].coeff.clone();
        if ts.iter().all(|t| t.coeff == c0) {
            let ma: Vec<String> = ts.iter().map(|t| sys.component(t.a).label.clone()).collect();
            let mb: Vec<String> = ts.iter().map(|t| sys.component(t.b).label.clone()).collect();
            if let Some((a, b)) = shared_index(&ma, &mb) {
                return (c0, format!("{}δ{}", a, b));
            }
        }
        let body = ts
            .iter()
            .map(|t| format!("({}){}δ{}", t.coeff, sys.component(t.a).label, sys.component(t.b).label))
            .collect::<Vec<_>>()
            .join(" + ");
        (QComplex::from_int(1), format!("[{}]", body))
    }

    fn match_named(&self, sys: &FSystem, field: usize, nb: &NamedBlock, ts: &[&GenTerm]) -> Option<String> {
        let range: Vec<usize> = sys.range(field).collect();
        let start = range[0];
        let dim = range.len();
        let mut got = CMatrix::zeros(dim, dim);
        for t in ts {
            got.set(t.a - start, t.b - start, t.coeff.clone());
        }
        let mut want = CMatrix::zeros(dim, dim);
        for mu in 0..4 {
            want = want.add(&nb.matrices[mu].scale(&self.normal[mu]));
        }
        // the reduced form keeps only the upper triangle of a symmetric block
        let want_reduced = CMatrix::from_fn(dim, dim, |r, c| {
            if r == c {
                want.get(r, c).clone()
            } else if r > c {
                want.get(r, c) + want.get(c, r)
            } else {
                QComplex::zero()
            }
        });
        if got.scale(&nb.factor.inv()?) != want_reduced {
            return None;
        }
        let disp = sys.fields()[field].display_name();
        let sup = if self.normal == time_normal() { "⁰".to_string() } else { "·n".to_string() };
        Some(format!("{}{}{}δ{}", nb.symbol, sup, disp, disp))
    }
}

fn is_negative(c: &QComplex) -> bool {
    c.re.is_negative() || (c.re.is_zero() && c.im.is_negative())
}

fn coeff_prefix(c: &QComplex) -> String {
    if *c == QComplex::from_int(1) {
        String::new()
    } else if *c == QComplex::i() {
        "i".to_string()
    } else {
        format!("({})", c)
    }
}

/// Positions where the labels of a family differ, when there is exactly one.
fn single_varying(labels: &[Vec<char>]) -> Option<usize> {
    let len = labels[0].len();
    if labels.iter().any(|l| l.len() != len) {
        return None;
    }
    let varying: Vec<usize> = (0..len).filter(|&p| labels.iter().any(|l| l[p] != labels[0][p])).collect();
    match varying.as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

/// `(F^{01}, A_1), (F^{02}, A_2), …` → `(F^{0ν}, A_ν)`.
fn shared_index(a: &[String], b: &[String]) -> Option<(String, String)> {
    if a.len() < 2 {
        return None;
    }
    let ca: Vec<Vec<char>> = a.iter().map(|s| s.chars().collect()).collect();
    let cb: Vec<Vec<char>> = b.iter().map(|s| s.chars().collect()).collect();
    let pa = single_varying(&ca)?;
    let pb = single_varying(&cb)?;
    if ca.iter().zip(&cb).any(|(x, y)| x[pa] != y[pb]) {
        return None;
    }
    let mut sa = ca[0].clone();
    let mut sb = cb[0].clone();
    sa[pa] = 'ν';
    sb[pb] = 'ν';
    Some((sa.into_iter().collect(), sb.into_iter().collect()))
}

/// Fundamental components have a nonzero row or column in Σ n_μ U^μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub fundamental: Vec<usize>,
    pub non_fundamental: Vec<usize>,
}

pub fn classify_fundamental(
    sys: &FSystem,
    u: &UMatrixSet,
    n: &[QComplex; 4],
) -> Result<Partition, GeneratorError> {
    check_normal(n)?;
    let m = u.contract(n);
    let mut fundamental = Vec::new();
    let mut non_fundamental = Vec::new();
    for k in 0..sys.dimension() {
        let coupled = (0..sys.dimension()).any(|j| !m.get(k, j).is_zero() || !m.get(j, k).is_zero());
        if coupled {
            fundamental.push(k);
        } else {
            non_fundamental.push(k);
        }
    }
    Ok(Partition { fundamental, non_fundamental })
}

impl Partition {
    pub fn fundamental_labels(&self, sys: &FSystem) -> Vec<String> {
        compress(&self.fundamental, sys)
    }

    pub fn non_fundamental_labels(&self, sys: &FSystem) -> Vec<String> {
        compress(&self.non_fundamental, sys)
    }
}

/// Per field: the display name when every component is listed, a spatial
/// index pattern (k or kl) when the family covers 1..3, else each label.
pub fn compress(components: &[usize], sys: &FSystem) -> Vec<String> {
    let mut out = Vec::new();
    for (fi, f) in sys.fields().iter().enumerate() {
        let mine: Vec<usize> = components.iter().copied().filter(|&k| sys.component(k).index.field == fi).collect();
        if mine.is_empty() {
            continue;
        }
        if mine.len() == f.dimension() && f.dimension() > 1 {
            out.push(f.display_name().to_string());
            continue;
        }
        let labels: Vec<String> = mine.iter().map(|&k| sys.component(k).label.clone()).collect();
        match spatial_pattern(&labels) {
            Some(p) => out.push(p),
            None => out.extend(labels),
        }
    }
    out
}

fn spatial_pattern(labels: &[String]) -> Option<String> {
    let chars: Vec<Vec<char>> = labels.iter().map(|s| s.chars().collect()).collect();
    let len = chars[0].len();
    if labels.len() < 2 || chars.iter().any(|c| c.len() != len) {
        return None;
    }
    let varying: Vec<usize> = (0..len).filter(|&p| chars.iter().any(|c| c[p] != chars[0][p])).collect();
    let values: std::collections::BTreeSet<String> =
        chars.iter().map(|c| varying.iter().map(|&p| c[p]).collect::<String>()).collect();
    let (names, expect): (&str, Vec<&str>) = match varying.len() {
        1 => ("k", vec!["1", "2", "3"]),
        2 => ("kl", vec!["12", "23", "31"]),
        _ => return None,
    };
    if values.len() != 3 || !values.iter().all(|v| expect.contains(&v.as_str())) {
        return None;
    }
    if varying.len() == 2 && varying[1] != varying[0] + 1 {
        return None;
    }
    let mut s = chars[0].clone();
    let names: Vec<char> = names.chars().collect();
    for (j, &p) in varying.iter().enumerate() {
        s[p] = names[j];
    }
    Some(s.into_iter().collect())
}
