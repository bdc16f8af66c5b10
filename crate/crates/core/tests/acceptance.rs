use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cpt_kernel::exact::{rat, CMatrix, HalfInt, Phase, QComplex};
use cpt_kernel::field::{FSystem, FieldSpec, Phases, Statistics};
use cpt_kernel::lagrangian::brackets::{derive_commutators, BracketKind, Sector};
use cpt_kernel::lagrangian::checks::{cpt_verdict, Context};
use cpt_kernel::lagrangian::generator::{classify_fundamental, derive_generator, time_normal};
use cpt_kernel::lagrangian::structured::*;
use cpt_kernel::lagrangian::term::{graded_sort, OperatorFactor};
use cpt_kernel::reps::*;
use cpt_kernel::speclang::builtin::INTERACTING_ONE_HALF;
use cpt_kernel::speclang::templates::{interacting_one_half, interacting_one_half_lagrangian};
use cpt_kernel::speclang::{load, run_pipeline};
use cpt_kernel::umatrix::*;
use cpt_kernel::verdict::Status;

fn report(n: u32, ok: bool, what: &str) {
    println!("AC{} {}: {}", n, if ok { "pass" } else { "fail" }, what);
}

fn within(n: u32, what: &str, start: Instant, limit: Duration) {
    let took = start.elapsed();
    let ok = took < limit;
    report(n, ok, &format!("{} in {:?} (limit {:?})", what, took, limit));
    assert!(ok, "AC{} took {:?}, limit {:?}", n, took, limit);
}

fn half(twice: u32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn example_system() -> (FSystem, UMatrixSet, StatisticsAssignment) {
    let t = interacting_one_half();
    let sys = FSystem::new(t.fields).unwrap();
    let u = UMatrixSet::new(t.u);
    let st = infer_statistics(&sys, &u).unwrap();
    (sys, u, st)
}

#[test]
fn ac1_dimensions() {
    let start = Instant::now();
    let scalar = rep_dimension(&RepBlock::new(half(0), half(0), false, false));
    let dirac = rep_dimension(&RepBlock::new(half(0), half(1), true, true));
    assert_eq!(scalar, 1);
    assert_eq!(dirac, 8);
    within(1, "scalar 1 component, charge-doubled Dirac 8 components", start, Duration::from_millis(1));
}

#[test]
fn ac2_lorentz_algebra() {
    let start = Instant::now();
    for ta in 0..=3 {
        for tb in 0..=3 {
            let v = verify_lorentz_algebra(&ab_generators(half(ta), half(tb))).unwrap();
            assert_eq!(v.status, Status::Pass, "({}/2,{}/2)", ta, tb);
        }
    }
    within(2, "exact Lorentz algebra for all 2A,2B <= 3", start, Duration::from_secs(1));
}

#[test]
fn ac3_antihermitian_split() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut count = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=8);
        let raw = CMatrix::from_fn(n, n, |_, _| QComplex::new(BigRational::zero(), BigRational::zero()));
        let mut raw = raw;
        for r in 0..n {
            for c in 0..n {
                let v = QComplex::new(rat(rng.gen_range(-20..=20), rng.gen_range(1..=6)), rat(rng.gen_range(-20..=20), rng.gen_range(1..=6)));
                raw.set(r, c, v);
            }
        }
        let m = raw.sub(&raw.dagger());
        assert!(validate_u(&UMatrixSet::new([m.clone(), CMatrix::zeros(n, n), CMatrix::zeros(n, n), CMatrix::zeros(n, n)]), n)
            .unwrap()
            .passed());
        let (s, a) = decompose_u(&m);
        assert!(s.is_imaginary() && s.transpose() == s);
        assert!(a.is_real() && a.transpose() == a.neg());
        assert_eq!(s.add(&a), m);
        count += 1;
    }
    assert_eq!(count, 1000);
    within(3, "1000 antihermitian matrices split exactly", start, Duration::from_secs(5));
}

#[test]
fn ac4_reality_dichotomy() {
    for tj in 0..=4 {
        let j = half(tj);
        let block = RepBlock::new(j, half(0), tj != 0, false);
        let d = discrete_matrix(Discrete::T, &block, &Phase::one()).unwrap();
        assert_eq!(reality_class(j) == RealityClass::Real, tj % 2 == 0);
        assert!(verify_t_reality(&d, j).passed(), "j = {}", j);
        assert_eq!(verify_t_reality(&d, half(tj + 1)).status, Status::Fail, "j = {} with the wrong class", j);
        assert_eq!(d.is_real(), tj % 2 == 0);
    }
    report(4, true, "D(I_t) real exactly for integer j in 0..2, imaginary for half-integer j");
}

fn bubble_sign(fs: &[OperatorFactor], odd: &dyn Fn(usize) -> bool) -> (i64, Vec<OperatorFactor>) {
    let mut v = fs.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j + 1] < v[j] {
                if odd(v[j].component) && odd(v[j + 1].component) {
                    sign = -sign;
                }
                v.swap(j, j + 1);
            }
        }
    }
    (sign, v)
}

#[test]
fn ac9_graded_sort_exhaustive() {
    let start = Instant::now();
    let odd = |k: usize| k % 2 == 1;
    let mut alphabet: Vec<OperatorFactor> = (0..4).map(OperatorFactor::field).collect();
    alphabet.push(OperatorFactor::variation(1));
    alphabet.push(OperatorFactor::variation(2));
    let mut conj = OperatorFactor::field(3);
    conj.conj = true;
    alphabet.push(conj);
    let a = alphabet.len();
    let mut checked = 0usize;
    for len in 0..=5u32 {
        for code in 0..a.pow(len) {
            let mut c = code;
            let seq: Vec<OperatorFactor> = (0..len)
                .map(|_| {
                    let f = alphabet[c % a].clone();
                    c /= a;
                    f
                })
                .collect();
            let mut sorted = seq.clone();
            let s = graded_sort(&mut sorted, &odd);
            let (want, order) = bubble_sign(&seq, &odd);
            assert_eq!((s, &sorted), (want, &order), "{:?}", seq);
            checked += 1;
        }
    }
    assert_eq!(checked, (0..=5).map(|l| a.pow(l)).sum::<usize>());
    within(9, &format!("{} sequences of up to 5 factors match the transposition oracle", checked), start, Duration::from_secs(10));
}

fn mutate(edit: impl Fn(&str) -> String) -> cpt_kernel::speclang::Report {
    let text = edit(INTERACTING_ONE_HALF);
    let (_, m) = load(&text).unwrap_or_else(|d| panic!("{:?}\n{}", d, text));
    run_pipeline(m)
}

#[test]
fn ac5_spin_statistics() {
    let base = mutate(str::to_string);
    assert_eq!(base.check("spin-statistics").unwrap().status, Status::Pass);
    let (sys, u, st) = example_system();
    assert!(spin_statistics_verdict(&sys, &st).passed());
    assert!(u.dimension() == 18);

    let add_set = |line: &'static str| move |t: &str| t.replace("set psi charge=1", &format!("set psi charge=1\n{}", line));
    let spin0_fermi = |t: &str| {
        t.replace("set psi charge=1", "set psi charge=1\ntemplate spin0 phi\nset phi labels=phi stats=Fermi")
            + "\n[umatrix]\nU0[phi, phi] = i\n"
    };
    let cases: Vec<(&str, String, cpt_kernel::speclang::Report)> = vec![
        ("A spin 1 -> Fermi", "A".into(), mutate(add_set("set A stats=Fermi"))),
        ("F spin 1 -> Fermi", "F".into(), mutate(add_set("set F stats=Fermi"))),
        ("psi spin 1/2 -> Bose", "psi".into(), mutate(add_set("set psi stats=Bose"))),
        ("added spin 0 -> Fermi", "phi".into(), mutate(spin0_fermi)),
    ];
    for (what, field, r) in &cases {
        let v = r.check("spin-statistics").unwrap();
        assert_eq!(v.status, Status::Fail, "{}", what);
        let w = v.witnesses.iter().find(|w| w.details.get("field") == Some(field)).expect("witness for the mutated field");
        assert_eq!(w.details["violated"], SPIN_STATISTICS_CLASH, "{}", what);
        assert_eq!(r.exit_code(), 1);
    }
    report(5, true, &format!("example passes; 4 single-field mutations fail with `{}`", SPIN_STATISTICS_CLASH));
}

#[test]
fn ac6_commutators() {
    let (sys, u, st) = example_system();
    let rels = derive_commutators(&sys, &u, &st).unwrap();
    assert_eq!(rels.len(), 3);
    let shapes: Vec<(Sector, BracketKind)> = rels.iter().map(|r| (r.sector, r.kind)).collect();
    assert_eq!(
        shapes,
        vec![(Sector::Bose, BracketKind::Commutator), (Sector::Fermi, BracketKind::Anticommutator), (Sector::Mixed, BracketKind::Commutator)]
    );
    for (r, part) in rels[..2].iter().zip([Part::A, Part::S]) {
        for mu in 0..4 {
            assert_eq!(r.matrices[mu], u.part(mu, part).submatrix(&r.components, &r.components));
        }
        let outside: Vec<usize> = (0..18).filter(|k| !r.components.contains(k)).collect();
        for mu in 0..4 {
            assert!(u.part(mu, part).submatrix(&outside, &r.components).is_zero());
        }
    }
    assert_eq!(rels[0].components, (0..10).collect::<Vec<_>>());
    assert_eq!(rels[1].components, (10..18).collect::<Vec<_>>());
    assert_eq!(rels[2].rhs, "0");
    let lines: Vec<String> = rels.iter().map(|r| r.display()).collect();
    assert_eq!(
        lines,
        vec![
            "[U_A^μ φ(x), φ(x′) U_A^μ]₋ = i U_A^μ δ_s(x−x′)",
            "[U_S^μ ψ(x), ψ(x′) U_S^μ]₊ = i U_S^μ δ_s(x−x′)",
            "[φ(x), ψ(x′)]₋ = 0",
        ]
    );
    report(6, true, "three bracket families: Bose commutator, Fermi anticommutator, vanishing mixed bracket");
}

#[test]
fn ac7_generator_golden() {
    let t = interacting_one_half();
    let named = t.named.clone();
    let sys = FSystem::new(t.fields).unwrap();
    let u = UMatrixSet::new(t.u);
    let st = infer_statistics(&sys, &u).unwrap();
    let n = time_normal();
    let g = derive_generator(&sys, &u, &st, &n).unwrap();
    let p = classify_fundamental(&sys, &u, &n).unwrap();
    let got = format!(
        "{}\nfundamental: {}\nnon-fundamental: {}\n",
        g.schematic(&sys, &named),
        p.fundamental_labels(&sys).join(", "),
        p.non_fundamental_labels(&sys).join(", ")
    );
    let golden = include_str!("golden/generator.txt");
    assert_eq!(got, golden);
    report(7, true, "generator and fundamental split equal the golden file byte for byte");
}

// reduced row echelon form over Q; returns a basis of the null space
fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = BigRational::one() / m[row][col].clone();
        for x in m[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let d = m[row][c].clone() * f.clone();
                    m[r][c] = m[r][c].clone() - d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

fn random_fields(rng: &mut ChaCha8Rng) -> Vec<FieldSpec> {
    let mut fields = Vec::new();
    let mut dim = 0;
    let nfields = rng.gen_range(1..=3);
    while fields.len() < nfields {
        let k = fields.len();
        let f = match rng.gen_range(0..4) {
            0 => FieldSpec::new(format!("s{}", k), RepBlock::new(half(0), half(0), false, false), half(0))
                .with_statistics(Statistics::Bose),
            1 => FieldSpec::new(format!("c{}", k), RepBlock::new(half(0), half(0), false, true), half(0))
                .with_charge(rat(1, 1))
                .with_statistics(Statistics::Bose),
            2 => FieldSpec::new(format!("d{}", k), RepBlock::new(half(0), half(1), true, false), half(1))
                .with_statistics(Statistics::Fermi),
            _ => FieldSpec::new(format!("v{}", k), RepBlock::new(half(1), half(1), false, false), half(2))
                .with_statistics(Statistics::Bose),
        };
        if dim + f.dimension() > 6 {
            break;
        }
        dim += f.dimension();
        fields.push(f);
    }
    fields
}

/// U^μ drawn from the solution space of the P, C, T and PT laws.
fn random_admissible_u(sys: &FSystem, rng: &mut ChaCha8Rng) -> Option<UMatrixSet> {
    let n = sys.dimension();
    let fermi = |k: usize| sys.field_of(k).statistics == Statistics::Fermi;
    let phases = Phases::default();
    let ds: Vec<(Discrete, CMatrix, CMatrix)> = [Discrete::P, Discrete::C, Discrete::T, Discrete::PT]
        .into_iter()
        .map(|k| {
            let d = sys.transform(k, &phases).unwrap();
            let inv = d.inverse().unwrap();
            (k, d, inv)
        })
        .collect();
    let mut ms: [CMatrix; 4] = std::array::from_fn(|_| CMatrix::zeros(n, n));
    for (mu, m) in ms.iter_mut().enumerate() {
        for part in [Part::S, Part::A] {
            let mut basis = Vec::new();
            for r in 0..n {
                for c in r..n {
                    let mut e = CMatrix::zeros(n, n);
                    match part {
                        Part::S if fermi(r) && fermi(c) => {
                            e.set(r, c, QComplex::i());
                            e.set(c, r, QComplex::i());
                        }
                        Part::A if !fermi(r) && !fermi(c) && r != c => {
                            e.set(r, c, QComplex::from_int(1));
                            e.set(c, r, QComplex::from_int(-1));
                        }
                        _ => continue,
                    }
                    basis.push(e);
                }
            }
            if basis.is_empty() {
                continue;
            }
            let mut rows = Vec::new();
            for (kind, d, inv) in &ds {
                let s = QComplex::from_int(expected_sign(*kind, mu, part));
                let images: Vec<CMatrix> = basis.iter().map(|e| d.mul(e).mul(inv).sub(&e.scale(&s))).collect();
                for r in 0..n {
                    for c in 0..n {
                        rows.push(images.iter().map(|im| im.get(r, c).re.clone()).collect());
                        rows.push(images.iter().map(|im| im.get(r, c).im.clone()).collect());
                    }
                }
            }
            for v in nullspace(&rows, basis.len()) {
                let w = QComplex::from_int(rng.gen_range(-2..=2));
                for (x, e) in v.iter().zip(&basis) {
                    *m = m.add(&e.scale(&w.scale(x)));
                }
            }
        }
    }
    let u = UMatrixSet::new(ms);
    if u.is_zero() {
        None
    } else {
        Some(u)
    }
}

fn valid_system(sys: &FSystem, u: &UMatrixSet) -> Option<StatisticsAssignment> {
    let st = infer_statistics(sys, u).ok()?;
    if !st.resolved() || !validate_u(u, sys.dimension()).ok()?.passed() || !spin_statistics_verdict(sys, &st).passed() {
        return None;
    }
    for kind in [Discrete::P, Discrete::C, Discrete::T, Discrete::PT] {
        let d = sys.transform(kind, &Phases::default()).ok()?;
        if !check_u_transform(kind, &d, u, &st, sys).ok()?.passed() {
            return None;
        }
    }
    Some(st)
}

fn random_elem(rng: &mut ChaCha8Rng) -> ChainElem {
    let mu = match rng.gen_range(0..6) {
        4 => MuLabel::Sum('m'),
        5 => MuLabel::Sum('n'),
        k => MuLabel::Fixed(k as u8),
    };
    match rng.gen_range(0..3) {
        0 => ChainElem::full(mu),
        1 => ChainElem::part(mu, Part::S),
        _ => ChainElem::part(mu, Part::A),
    }
}

fn random_slot(nfields: usize, rng: &mut ChaCha8Rng) -> Slot {
    let s = if rng.gen_bool(0.2) { Slot::all() } else { Slot::of(rng.gen_range(0..nfields)) };
    if rng.gen_bool(0.3) {
        s.conj()
    } else {
        s
    }
}

fn random_lagrangian(nfields: usize, rng: &mut ChaCha8Rng) -> Lagrangian {
    let mut dynamic = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let mut segments: Vec<Segment> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let chain = (0..rng.gen_range(0..=3)).map(|_| random_elem(rng)).collect();
                Segment::new(random_slot(nfields, rng), chain, random_slot(nfields, rng))
            })
            .collect();
        let k: usize = segments.iter().map(|s| s.chain.len()).sum();
        if k % 2 == 1 {
            let e = random_elem(rng);
            segments[0].chain.push(e);
        }
        let coeff = QComplex::real(rat(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3)));
        dynamic.push(DynTerm::new(Term::new(coeff, segments)).unwrap());
    }
    Lagrangian { kinematic: build_kinematic(), dynamic }
}

#[test]
fn ac8_cpt() {
    let start = Instant::now();
    let (sys, u, st) = example_system();
    let ctx = Context::new(&sys, &u, &st);
    assert!(cpt_verdict(&interacting_one_half_lagrangian(1, 1, 1, 1), &ctx).passed());

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut lagrangians, mut attempts, mut flipped) = (0, 0, 0);
    let mut kinds = std::collections::BTreeSet::new();
    while lagrangians < 500 {
        attempts += 1;
        assert!(attempts < 20_000, "could not draw valid systems");
        let sys = FSystem::new(random_fields(&mut rng)).unwrap();
        let Some(u) = random_admissible_u(&sys, &mut rng) else { continue };
        let Some(st) = valid_system(&sys, &u) else { continue };
        for f in sys.fields() {
            kinds.insert(f.name.chars().next().unwrap());
        }
        let ctx = Context::new(&sys, &u, &st);
        let odd = ctx.odd();
        // redraw until some interaction term survives expansion
        let Some(l) = (0..10)
            .map(|_| random_lagrangian(sys.fields().len(), &mut rng))
            .find(|l| l.dynamic.iter().any(|t| !ctx.expand_term(t.term()).erase_conj(&odd).is_zero()))
        else {
            continue;
        };
        let v = cpt_verdict(&l, &ctx);
        assert!(v.passed(), "{:?}\n{:?}", v.witnesses, l);
        lagrangians += 1;

        let pick = rng.gen_range(0..l.dynamic.len());
        let mut broken = l.clone();
        let mut t = broken.dynamic[pick].term().clone();
        t.segments[0].chain.push(random_elem(&mut rng));
        broken.dynamic[pick] = DynTerm::new_unchecked(t);
        let v = cpt_verdict(&broken, &ctx);
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.witnesses.len(), 1);
        assert_eq!(v.witnesses[0].location, format!("dynamic[{}]", pick));
        assert_eq!(v.witnesses[0].details["kind"], "parity");
        flipped += 1;
    }
    assert_eq!(flipped, lagrangians);
    assert_eq!(kinds.len(), 4);
    println!("ac8: {} systems drawn, {} used, field kinds {:?}", attempts, lagrangians, kinds);
    within(
        8,
        &format!("CPT holds on the example and {} random Lagrangians with nonvanishing interactions; each odd-power mutation fails with a parity witness", lagrangians),
        start,
        Duration::from_secs(30),
    );
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cpt-kernel")).args(args).env("CPT_KERNEL_COLOR", "0").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn ac10_cli_contract() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("example.spec");
    let (code, emitted, _) = cli(&["example", "interacting-1-half", "--emit"]);
    assert_eq!(code, 0);
    std::fs::write(&spec, &emitted).unwrap();
    let path = spec.to_str().unwrap();

    let (code, text, _) = cli(&["check", path]);
    assert_eq!(code, 0, "{}", text);
    assert!(text.ends_with("status: pass\n"));
    let (code, j1, _) = cli(&["check", path, "--format", "json"]);
    let (_, j2, _) = cli(&["check", path, "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(j1.as_bytes(), j2.as_bytes());
    let (_, j3, _) = cli(&["example", "interacting-1-half", "--format", "json"]);
    assert_eq!(j1, j3);
    let v: serde_json::Value = serde_json::from_str(&j1).unwrap();
    assert_eq!(v["schema"], "cpt-kernel/report/v1");
    assert_eq!(v["status"], "pass");
    let (code, gens, _) = cli(&["derive", "generators", path]);
    assert_eq!(code, 0);
    assert_eq!(gens.lines().next().unwrap(), "−∫ds₀ (F^{0ν}δA_ν − iα⁰ψδψ)");
    let (code, brackets, _) = cli(&["derive", "commutators", path]);
    assert_eq!(code, 0);
    assert!(brackets.contains("[φ(x), ψ(x′)]₋ = 0"));
    let (code, reps, _) = cli(&["reps", "show", "1/2", "0", "--parity", "--charge", "--format", "json"]);
    assert_eq!(code, 0);
    let r: serde_json::Value = serde_json::from_str(&reps).unwrap();
    assert_eq!(r["dimension"], 8);
    let (_, reps, _) = cli(&["reps", "show", "0", "0", "--format", "json"]);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&reps).unwrap()["dimension"], 1);

    let bose = dir.path().join("bose.spec");
    std::fs::write(&bose, emitted.replace("set psi charge=1", "set psi charge=1 stats=Bose")).unwrap();
    let (code, out, _) = cli(&["check", bose.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 1);
    assert!(out.contains(SPIN_STATISTICS_CLASH));

    let bad = dir.path().join("bad.spec");
    std::fs::write(&bad, "[fields]\nfield x rep=(1/2,0) spin=1\n").unwrap();
    let (code, _, err) = cli(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains(&format!("{}:2:1:", bad.to_str().unwrap())), "{}", err);
    let empty = dir.path().join("empty.spec");
    std::fs::write(&empty, "").unwrap();
    let (code, _, err) = cli(&["check", empty.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains(":1:1: no fields declared"));
    assert_eq!(cli(&["check", dir.path().join("missing.spec").to_str().unwrap()]).0, 2);
    assert_eq!(cli(&["check", path, "--normal", "x"]).0, 2);
    assert_eq!(cli(&["check", path, "--phase-s", "sideways"]).0, 2);
    assert_eq!(cli(&["check", path, "--normal", "t", "--phase-s", "-1"]).0, 0);
    assert_eq!(cli(&["bogus"]).0, 2);
    assert_eq!(cli(&["example", "nope"]).0, 2);
    report(10, true, "exit codes 0/1/2, byte-identical JSON, emitted example checks clean");
}
