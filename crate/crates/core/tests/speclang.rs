use cpt_kernel::exact::{rat, HalfInt, Phase, QComplex};
use cpt_kernel::field::{Basis, Statistics};
use cpt_kernel::lagrangian::structured::MuLabel;
use cpt_kernel::speclang::builtin::INTERACTING_ONE_HALF;
use cpt_kernel::speclang::doc::*;
use cpt_kernel::speclang::report::to_json;
use cpt_kernel::speclang::{format_spec, load, parse_spec, run_pipeline};
use cpt_kernel::umatrix::{Part, SPIN_STATISTICS_CLASH};
use cpt_kernel::verdict::Status;
use proptest::prelude::*;

fn diags(text: &str) -> Vec<Diagnostic> {
    match load(text) {
        Ok(_) => panic!("expected diagnostics"),
        Err(d) => d,
    }
}

#[test]
fn builtin_round_trips() {
    let p = parse_spec(INTERACTING_ONE_HALF).unwrap();
    let text = format_spec(&p.doc);
    assert_eq!(parse_spec(&text).unwrap().doc, p.doc);
    assert_eq!(format_spec(&parse_spec(&text).unwrap().doc), text);
}

#[test]
fn empty_document() {
    let d = diags("# nothing\n\n");
    assert_eq!(d, vec![Diagnostic::new(1, 1, "no fields declared")]);
    assert_eq!(d[0].to_string(), "1:1: no fields declared");
}

#[test]
fn spin_outside_rep_is_positioned() {
    let d = diags("[fields]\n  field w rep=(0,1/2) spin=1\n");
    assert_eq!(d.len(), 1);
    assert_eq!((d[0].line, d[0].col), (2, 3));
}

#[test]
fn one_diagnostic_per_line_and_capped() {
    let mut text = String::from("[fields]\n");
    for _ in 0..30 {
        text.push_str("field x rep=(q,0) spin=zz\n");
    }
    let d = diags(&text);
    assert_eq!(d.len(), MAX_DIAGNOSTICS);
    assert!(d.windows(2).all(|w| w[0].line < w[1].line));
}

#[test]
fn unknown_things_are_reported() {
    let d = diags("[fields]\ntemplate dirac-doubled psi\n[lagrangian]\nterm 1 (psi US^m nope)\n[umatrix]\nU0[bad, psi1_0] = 1\n");
    let lines: Vec<usize> = d.iter().map(|x| x.line).collect();
    assert_eq!(lines, vec![4, 6]);
    let d = diags("[fields]\ntemplate nosuch a\n");
    assert_eq!(d[0].line, 2);
    let d = diags("[options]\nnormal = w\n[fields]\ntemplate scalar s\n");
    assert_eq!((d[0].line, d[0].col), (2, 10));
    let d = diags("[options]\nnormal = t\nnormal = t\n[fields]\ntemplate scalar s\n");
    assert_eq!(d[0].line, 3);
}

#[test]
fn example_pipeline_passes() {
    let (_, m) = load(INTERACTING_ONE_HALF).unwrap();
    let r = run_pipeline(m);
    for c in &r.checks {
        assert_eq!(c.verdict.status, Status::Pass, "{}", c.id);
    }
    assert_eq!(r.exit_code(), 0);
    assert!(r.notes.iter().any(|n| n.contains("different indices")));
    let j1 = to_json(&r);
    let j2 = to_json(&run_pipeline(load(INTERACTING_ONE_HALF).unwrap().1));
    assert_eq!(j1, j2);
    let v: serde_json::Value = serde_json::from_str(&j1).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 6);
}

#[test]
fn psi_declared_bose_fails() {
    let text = INTERACTING_ONE_HALF.replace("set psi charge=1", "set psi charge=1 stats=Bose");
    let r = run_pipeline(load(&text).unwrap().1);
    assert_eq!(r.exit_code(), 1);
    let v = r.check("spin-statistics").unwrap();
    assert_eq!(v.status, Status::Fail);
    assert_eq!(v.witnesses[0].details["violated"], SPIN_STATISTICS_CLASH);
    assert_eq!(r.check("statistics").unwrap().status, Status::Fail);
}

#[test]
fn odd_power_term_skips_cpt() {
    let text = INTERACTING_ONE_HALF.replace("term 1 (A UA^m UA^m A)", "term 1 (A UA^0 F)");
    let r = run_pipeline(load(&text).unwrap().1);
    assert_eq!(r.check("term-construction").unwrap().status, Status::Fail);
    assert_eq!(r.check("CPT").unwrap().status, Status::Skipped);
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn imaginary_coefficient_rejected() {
    let text = INTERACTING_ONE_HALF.replace("term 1 (F UA^m UA^m F)", "term 1i (F UA^m UA^m F)");
    let r = run_pipeline(load(&text).unwrap().1);
    assert_eq!(r.check("term-construction").unwrap().status, Status::Fail);
}

#[test]
fn document_normal_x_fails_generator() {
    let text = INTERACTING_ONE_HALF.replace("normal = t", "normal = x");
    let r = run_pipeline(load(&text).unwrap().1);
    assert_eq!(r.check("generator").unwrap().status, Status::Fail);
    assert_eq!(r.exit_code(), 1);
}

fn name() -> impl Strategy<Value = String> {
    "[a-t][a-z0-9_]{0,4}".prop_filter("reserved", |s| s != "chi")
}

fn value() -> impl Strategy<Value = QComplex> {
    (-6i64..7, 1i64..5, -6i64..7, 1i64..5).prop_map(|(a, b, c, d)| QComplex::new(rat(a, b), rat(c, d)))
}

fn phase() -> impl Strategy<Value = Phase> {
    (0i64..12, 1i64..13).prop_map(|(p, q)| Phase::from_turns(rat(p, q)))
}

fn half() -> impl Strategy<Value = HalfInt> {
    (0u32..5).prop_map(HalfInt::from_twice)
}

fn attrs() -> impl Strategy<Value = Attrs> {
    (
        proptest::option::of((-4i64..5, 1i64..4).prop_map(|(a, b)| rat(a, b))),
        proptest::option::of(prop_oneof![Just(Statistics::Bose), Just(Statistics::Fermi), Just(Statistics::Unknown)]),
        proptest::option::of(prop_oneof![Just(Basis::Native), Just(Basis::Adapted)]),
        proptest::option::of(phase()),
        proptest::option::of(proptest::collection::vec(name(), 1..4)),
        proptest::option::of(name()),
    )
        .prop_map(|(charge, stats, basis, tphase, labels, display)| Attrs { charge, stats, basis, tphase, labels, display })
}

fn field_decl() -> impl Strategy<Value = FieldDecl> {
    prop_oneof![
        (name(), proptest::collection::vec(name(), 1..3))
            .prop_map(|(template, names)| FieldDecl::Template { template, names }),
        (name(), half(), half(), any::<bool>(), any::<bool>(), half(), attrs())
            .prop_map(|(name, a, b, parity, charge, spin, attrs)| FieldDecl::Field { name, a, b, parity, charge, spin, attrs }),
        (name(), attrs()).prop_map(|(name, attrs)| FieldDecl::Set { name, attrs }),
    ]
}

fn u_decl() -> impl Strategy<Value = UDecl> {
    prop_oneof![
        (0u8..4, proptest::collection::vec(proptest::collection::vec(value(), 1..4), 1..4))
            .prop_map(|(mu, rows)| UDecl::Matrix { mu, rows }),
        (0u8..4, name(), name(), value(), any::<bool>())
            .prop_map(|(mu, row, col, value, skew)| UDecl::Entry { mu, row, col, value, skew }),
    ]
}

fn slot() -> impl Strategy<Value = SlotDecl> {
    (proptest::option::of(name()), any::<bool>()).prop_map(|(field, conj)| SlotDecl { field, conj })
}

fn chain() -> impl Strategy<Value = ChainDecl> {
    (
        prop_oneof![Just(None), Just(Some(Part::A)), Just(Some(Part::S))],
        prop_oneof![(0u8..4).prop_map(MuLabel::Fixed), prop_oneof![Just('m'), Just('n'), Just('r')].prop_map(MuLabel::Sum)],
    )
        .prop_map(|(part, mu)| ChainDecl { part, mu })
}

fn l_decl() -> impl Strategy<Value = LDecl> {
    let seg = (slot(), proptest::collection::vec(chain(), 0..4), slot())
        .prop_map(|(left, chain, right)| SegDecl { left, chain, right });
    prop_oneof![
        1 => Just(LDecl::Kinematic),
        4 => (value(), proptest::collection::vec(seg, 1..3)).prop_map(|(coeff, segments)| LDecl::Term { coeff, segments }),
    ]
}

fn document() -> impl Strategy<Value = SpecDocument> {
    (
        proptest::collection::vec(field_decl(), 1..4),
        proptest::collection::vec(u_decl(), 0..3),
        proptest::collection::vec(l_decl(), 0..4),
        proptest::option::of(phase()),
        proptest::option::of(phase()),
        proptest::option::of(prop_oneof![Just(Normal::T), Just(Normal::X), Just(Normal::Y), Just(Normal::Z)]),
    )
        .prop_map(|(fields, umatrix, lagrangian, phase_s, phase_c, normal)| SpecDocument {
            fields,
            umatrix,
            lagrangian,
            options: Options { phase_s, phase_c, normal },
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]
    #[test]
    fn format_then_parse_is_identity(doc in document()) {
        let text = format_spec(&doc);
        let back = parse_spec(&text).map(|p| p.doc).map_err(|d| format!("{:?}\n{}", d, text));
        prop_assert_eq!(back, Ok(doc));
    }
}
