use cpt_kernel::exact::{CMatrix, HalfInt, Phase, QComplex, RMatrix, Radical, Ring};
use cpt_kernel::reps::*;
use cpt_kernel::verdict::Status;

fn h(twice: u32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn rq(n: i64, d: i64) -> Radical {
    Radical::from_q(QComplex::from_ratio(n, d))
}

fn spins() -> Vec<HalfInt> {
    (0..=3).map(h).collect()
}

#[test]
fn spin_zero_generators_vanish() {
    for m in su2_generators(h(0)) {
        assert_eq!(m, RMatrix::zeros(1, 1));
    }
}

#[test]
fn spin_half_commutator() {
    let [jx, jy, jz] = su2_generators(h(1));
    assert_eq!(jz, RMatrix::diagonal(vec![rq(1, 2), rq(-1, 2)]));
    let i = Radical::from_q(QComplex::i());
    assert_eq!(jx.commutator(&jy).unwrap(), jz.scale(&i));
}

#[test]
fn spin_one_casimir() {
    let [jx, jy, jz] = su2_generators(h(2));
    assert_eq!(jz, RMatrix::diagonal(vec![rq(1, 1), rq(0, 1), rq(-1, 1)]));
    let c = jx.mul(&jx).add(&jy.mul(&jy)).add(&jz.mul(&jz));
    assert_eq!(c, RMatrix::identity(3).scale(&rq(2, 1)));
}

#[test]
fn casimir_matches_j_j_plus_one() {
    for twice in 0..=6u32 {
        let [jx, jy, jz] = su2_generators(h(twice));
        let n = twice as usize + 1;
        let c = jx.mul(&jx).add(&jy.mul(&jy)).add(&jz.mul(&jz));
        let jj = rq((twice * (twice + 2)) as i64, 4);
        assert_eq!(c, RMatrix::identity(n).scale(&jj), "2j = {}", twice);
    }
}

#[test]
fn trivial_block_has_zero_generators() {
    let g = ab_generators(h(0), h(0));
    for m in g.j.iter().chain(g.k.iter()) {
        assert!(m.is_zero());
    }
    assert!(verify_lorentz_algebra(&g).unwrap().passed());
}

#[test]
fn left_handed_spinor_is_self_dual() {
    let g = ab_generators(h(1), h(0));
    let s = su2_generators(h(1));
    let minus_i = Radical::from_q(-QComplex::i());
    for k in 0..3 {
        assert_eq!(g.j[k], s[k]);
        assert_eq!(g.k[k], s[k].scale(&minus_i));
    }
    assert!(verify_lorentz_algebra(&g).unwrap().passed());
}

#[test]
fn vector_block_spectrum() {
    let g = ab_generators(h(1), h(1));
    let jz = g.j[2].to_cmatrix().unwrap();
    let diag: Vec<QComplex> = (0..4).map(|k| jz.get(k, k).clone()).collect();
    let q = QComplex::from_int;
    assert_eq!(diag, vec![q(1), q(0), q(0), q(-1)]);
    assert!(jz.entries().all(|(r, c, v)| r == c || v.is_zero()));
}

#[test]
fn algebra_holds_for_all_small_labels() {
    for a in spins() {
        for b in spins() {
            let v = verify_lorentz_algebra(&ab_generators(a, b)).unwrap();
            assert!(v.passed(), "({},{}): {:?}", a, b, v.witnesses);
        }
    }
}

#[test]
fn corrupted_boost_is_named() {
    let mut g = ab_generators(h(2), h(1));
    let v = g.k[0].get(0, 0).add_ref(&Radical::one());
    g.k[0].set(0, 0, v);
    let verdict = verify_lorentz_algebra(&g).unwrap();
    assert_eq!(verdict.status, Status::Fail);
    assert!(verdict.witnesses.iter().any(|w| w.location.contains("K1")));
}

#[test]
fn mismatched_generator_dimensions_error() {
    let mut g = ab_generators(h(1), h(0));
    g.k[2] = RMatrix::zeros(3, 3);
    assert!(verify_lorentz_algebra(&g).is_err());
}

#[test]
fn j4_phase_constant_on_block() {
    for a in spins() {
        for b in spins() {
            let spec = j4_spectrum(a, b);
            let g = ab_generators(a, b);
            // K_3 = −i(A_3⊗1 − 1⊗B_3), so iK_3 is diagonal with entries a − b
            let ik3 = g.k[2].scale(&Radical::from_q(QComplex::i())).to_cmatrix().unwrap();
            for (k, v) in spec.iter().enumerate() {
                assert_eq!(ik3.get(k, k), v);
            }
            let integer = spec[0].re.is_integer();
            assert!(spec.iter().all(|v| v.re.is_integer() == integer));
            assert_eq!(integer, (a.twice() + b.twice()) % 2 == 0);
        }
    }
}

#[test]
fn dimensions() {
    assert_eq!(rep_dimension(&RepBlock::new(h(0), h(0), false, false)), 1);
    assert_eq!(rep_dimension(&RepBlock::new(h(0), h(1), true, true)), 8);
    assert_eq!(rep_dimension(&RepBlock::new(h(2), h(2), false, false)), 9);
    assert!(!RepBlock::new(h(1), h(1), true, false).parity_doubled);
    for a in spins() {
        for b in spins() {
            let base = RepBlock::new(a, b, false, false).dimension();
            let pd = if a == b { 1 } else { 2 };
            assert_eq!(RepBlock::new(a, b, true, false).dimension(), base * pd);
            assert_eq!(RepBlock::new(a, b, true, true).dimension(), base * pd * 2);
        }
    }
}

#[test]
fn pi_rotation_entries_and_square() {
    assert_eq!(pi_rotation_matrix(h(0)), CMatrix::identity(1));
    assert_eq!(pi_rotation_matrix(h(1)), CMatrix::from_ints(&[&[0, -1], &[1, 0]]));
    for twice in 1..=3u32 {
        let y = pi_rotation_matrix(h(twice));
        let sign = if twice % 2 == 0 { 1 } else { -1 };
        let n = twice as usize + 1;
        assert_eq!(y.mul(&y), CMatrix::identity(n).scale(&QComplex::from_int(sign)));
    }
}

#[test]
fn pi_rotation_conjugates_generators() {
    // Y J_x Y⁻¹ = −J_x, Y J_y Y⁻¹ = J_y, Y J_z Y⁻¹ = −J_z
    for twice in 0..=4u32 {
        let y = lift(&pi_rotation_matrix(h(twice)));
        let yinv = lift(&pi_rotation_matrix(h(twice)).inverse().unwrap());
        let [jx, jy, jz] = su2_generators(h(twice));
        assert_eq!(y.mul(&jx).mul(&yinv), jx.neg());
        assert_eq!(y.mul(&jy).mul(&yinv), jy);
        assert_eq!(y.mul(&jz).mul(&yinv), jz.neg());
    }
}

#[test]
fn parity_on_dirac_block() {
    let blk = RepBlock::new(h(0), h(1), true, false);
    let p = discrete_matrix(Discrete::P, &blk, &Phase::one()).unwrap();
    let swap = CMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    let expected = swap.kron(&CMatrix::identity(2));
    assert_eq!(p, expected);
}

#[test]
fn parity_needs_doubling() {
    let blk = RepBlock::new(h(0), h(1), false, false);
    assert!(discrete_matrix(Discrete::P, &blk, &Phase::one()).is_err());
    let sc = RepBlock::new(h(0), h(0), false, false);
    let minus = Phase::parse("-1").unwrap();
    assert_eq!(discrete_matrix(Discrete::P, &sc, &minus).unwrap(), CMatrix::from_ints(&[&[-1]]));
}

#[test]
fn charge_on_scalar_pair() {
    let blk = RepBlock::new(h(0), h(0), false, true);
    let c = discrete_matrix(Discrete::C, &blk, &Phase::one()).unwrap();
    assert_eq!(c, CMatrix::from_ints(&[&[1, 0], &[0, -1]]));
    let single = RepBlock::new(h(0), h(0), false, false);
    let ci = discrete_matrix(Discrete::C, &single, &Phase::parse("i").unwrap()).unwrap();
    assert_eq!(ci.get(0, 0), &QComplex::i());
}

#[test]
fn time_reversal_on_scalar() {
    let blk = RepBlock::new(h(0), h(0), false, false);
    let t = discrete_matrix(Discrete::T, &blk, &Phase::one()).unwrap();
    assert_eq!(t, CMatrix::identity(1));
    assert!(t.is_real());
}

#[test]
fn symbolic_phase_not_materialized() {
    let blk = RepBlock::new(h(0), h(0), false, false);
    let p = Phase::parse("turns:1/3").unwrap();
    assert!(matches!(discrete_matrix(Discrete::P, &blk, &p), Err(RepError::PhaseNotExact(_))));
}

#[test]
fn squares_of_p_and_c() {
    let phases = ["1", "-1", "i", "-i"];
    for a in spins() {
        for b in spins() {
            let blk = RepBlock::new(a, b, true, true);
            for ph in phases {
                let nu = Phase::parse(ph).unwrap();
                let nu2 = nu.mul(&nu).to_qcomplex().unwrap();
                let id = CMatrix::identity(blk.dimension()).scale(&nu2);
                let p = discrete_matrix(Discrete::P, &blk, &nu).unwrap();
                let c = discrete_matrix(Discrete::C, &blk, &nu).unwrap();
                assert_eq!(p.mul(&p), id);
                assert_eq!(c.mul(&c), id);
            }
        }
    }
}

#[test]
fn reality_dichotomy() {
    assert_eq!(reality_class(h(2)), RealityClass::Real);
    assert_eq!(reality_class(h(3)), RealityClass::Imaginary);
    for twice in 0..=4u32 {
        let j = h(twice);
        let blk = RepBlock::new(j, h(0), false, false);
        let t = discrete_matrix(Discrete::T, &blk, &Phase::one()).unwrap();
        assert!(verify_t_reality(&t, j).passed());
        assert_eq!(t.is_real(), twice % 2 == 0);
    }
    let bad = verify_t_reality(&CMatrix::identity(2), h(1));
    assert_eq!(bad.status, Status::Fail);
}

#[test]
fn discrete_kinds_commute_on_blocks() {
    for a in spins() {
        for b in spins() {
            let blk = RepBlock::new(a, b, true, true);
            let one = Phase::one();
            let p = discrete_matrix(Discrete::P, &blk, &one).unwrap();
            let c = discrete_matrix(Discrete::C, &blk, &one).unwrap();
            let t = discrete_matrix(Discrete::T, &blk, &one).unwrap();
            assert!(p.commutator(&t).unwrap().is_zero());
            assert!(p.commutator(&c).unwrap().is_zero());
            assert!(c.commutator(&t).unwrap().is_zero());
            assert_eq!(discrete_matrix(Discrete::CPT, &blk, &one).unwrap(), c.mul(&p).mul(&t));
        }
    }
}
