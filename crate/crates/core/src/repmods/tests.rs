use super::*;
use crate::cyclofield::parse_literal;
use crate::cyclofield::{Field, FieldCtx};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn int(f: &Field, n: i64) -> CycNum {
    CycNum::from_int(f, n)
}

fn mat(f: &Field, rows: &[&[i64]]) -> Mat {
    Mat::from_rows(f, rows.iter().map(|r| r.iter().map(|&n| int(f, n)).collect()).collect()).unwrap()
}

fn m1(f: &Field, a: i64, b: i64, c: i64) -> FamilySpec {
    FamilySpec::M1 { mu1: int(f, a), mu2: int(f, b), mu3: int(f, c) }
}

#[test]
fn m1_example_matrices() {
    let f = FieldCtx::new(2).unwrap();
    let p = Params::from_ints(&f, 0, 0, 0);
    let r = build_family(&m1(&f, 1, 1, 0), &p).unwrap();
    assert!(r.x.is_zero());
    assert_eq!(r.y, mat(&f, &[&[0, -1], &[1, 0]]));
    assert_eq!(r.z, mat(&f, &[&[1, 0], &[0, -1]]));
    assert!(check_relations(&r));
    assert!(is_simple_burnside(&r));
    let cs = central_scalars(&r).unwrap();
    assert!(cs.z_l.is_one() && cs.x_l.is_zero() && cs.omega.is_zero());
    let der = derived_operators(&r);
    assert_eq!(der.f.mul(&r.z).unwrap(), r.z.mul(&der.f).unwrap().scale(&p.q2pow(1)));
}

#[test]
fn m4_example_matrices() {
    let f = FieldCtx::new(2).unwrap();
    let p = Params::from_ints(&f, 0, 1, 0);
    let spec = FamilySpec::M4 { mu1: int(&f, 0), mu2: int(&f, 0) };
    let r = build_family(&spec, &p).unwrap();
    assert_eq!(r.x, mat(&f, &[&[0, 1], &[0, 0]]));
    assert!(r.y.is_zero());
    assert_eq!(r.z, mat(&f, &[&[0, 0], &[1, 0]]));
    assert!(check_relations(&r));
    assert!(is_simple_burnside(&r));
    assert!(derived_operators(&r).omega.is_zero());
    let c = classify(&r, &Hints::default()).unwrap();
    assert_eq!(c.family, Family::M4);
    assert_eq!(c.spec, Some(spec));
}

#[test]
fn m0_example() {
    let f = FieldCtx::new(2).unwrap();
    let p = Params::from_ints(&f, 1, 0, 0);
    let r = build_family(&FamilySpec::M0 { a: int(&f, 1) }, &p).unwrap();
    assert_eq!(r.y[(0, 0)], CycNum::from_rat(&f, crate::Rat::new(1.into(), 2.into())));
    assert!(r.z.is_zero());
    assert!(check_relations(&r));
    let c = classify(&r, &Hints::default()).unwrap();
    assert_eq!(c.spec, Some(FamilySpec::M0 { a: int(&f, 1) }));
}

#[test]
fn domain_errors_name_the_constraint() {
    let f = FieldCtx::new(3).unwrap();
    let p = Params::from_ints(&f, 1, 1, 0);
    let err = build_family(&FamilySpec::M5 { mu1: int(&f, 1), mu2: int(&f, 1) }, &p).unwrap_err();
    assert!(err.to_string().contains("M5 requires beta = 0"), "{err}");
    let err = build_family(&m1(&f, 0, 1, 0), &p).unwrap_err();
    assert!(err.to_string().contains("mu1 != 0"), "{err}");
    let err = build_family(&FamilySpec::M7 { mu: int(&f, 1) }, &p).unwrap_err();
    assert!(err.to_string().contains("M7 requires beta = 0"), "{err}");
}

#[test]
fn s_value_examples() {
    let f = FieldCtx::new(3).unwrap();
    let one = int(&f, 1);
    assert_eq!(s_value(&Params::from_ints(&f, 0, 0, 0), &one).unwrap(), 1);
    assert_eq!(s_value(&Params::from_ints(&f, 1, 1, 1), &one).unwrap(), 3);
    let gamma = parse_literal(&f, "1 - t^2").unwrap();
    let p = Params::new(&f, one.clone(), one.clone(), gamma).unwrap();
    assert_eq!(s_value(&p, &one).unwrap(), 1);
    let r = build_family(&FamilySpec::M3 { mu: one }, &p).unwrap();
    assert_eq!(r.dim(), 1);
    assert!(check_relations(&r));
}

#[test]
fn zero_action_violates_relations() {
    let f = FieldCtx::new(3).unwrap();
    let z = Mat::zeros(&f, 2, 2);
    let r = Rep::new(Params::from_ints(&f, 1, 0, 0), z.clone(), z.clone(), z).unwrap();
    assert!(!check_relations(&r));
    assert_eq!(failed_relations(&r), vec!["xy = q^2 yx + alpha"]);
}

#[test]
fn direct_sum_is_rejected() {
    let f = FieldCtx::new(2).unwrap();
    let p = Params::from_ints(&f, 1, 0, 0);
    let a = build_family(&FamilySpec::M0 { a: int(&f, 1) }, &p).unwrap();
    let b = build_family(&FamilySpec::M0 { a: int(&f, 2) }, &p).unwrap();
    let sum = a.direct_sum(&b).unwrap();
    assert!(check_relations(&sum));
    assert_eq!(generated_algebra_dim(&sum), 2);
    assert!(matches!(central_scalars(&sum), Err(Error::NotSchurScalar(_))));
    assert!(matches!(classify(&sum, &Hints::default()), Err(Error::NotSimple)));
}

#[test]
fn intertwiner_examples() {
    let f = FieldCtx::new(2).unwrap();
    let p = Params::from_ints(&f, 0, 0, 0);
    let r = build_family(&m1(&f, 1, 1, 0), &p).unwrap();
    let r2 = build_family(&m1(&f, -1, 1, 0), &p).unwrap();
    assert_eq!(intertwiner_space(&r, &r).unwrap().len(), 1);
    let maps = intertwiner_space(&r, &r2).unwrap();
    assert_eq!(maps.len(), 1);
    let scale = maps[0][(0, 0)].inv().unwrap();
    assert_eq!(maps[0].scale(&scale), mat(&f, &[&[1, 0], &[0, -1]]));
    let m2 = build_family(&FamilySpec::M2 { mu1: int(&f, 1), mu2: int(&f, 1) }, &p).unwrap();
    assert!(intertwiner_space(&r, &m2).unwrap().is_empty());
}

#[test]
fn iso_criterion_examples() {
    let f = FieldCtx::new(2).unwrap();
    let p = Params::from_ints(&f, 0, 0, 0);
    assert!(iso_by_criterion(&m1(&f, 1, 1, 0), &m1(&f, -1, 1, 0), &p).unwrap().0);
    assert!(!iso_by_criterion(&m1(&f, 1, 1, 0), &m1(&f, 1, -1, 1), &p).unwrap().0);
    let m3 = FamilySpec::M3 { mu: int(&f, 3) };
    assert!(iso_by_criterion(&m3, &m3, &p).unwrap().0);
    let (iso, why) = iso_by_criterion(&m3, &m1(&f, 1, 1, 0), &p).unwrap();
    assert!(!iso && why.contains("different families"));
}

#[test]
fn basis_walks_rebuild_m1_and_m2() {
    // m_k = μ₁^{-k} m₀ f^k on M1 and m_k = μ₁^{-k} m₀ e^k on M2
    let f = FieldCtx::new(4).unwrap();
    let p = Params::from_ints(&f, 2, 3, -1);
    let mu1 = int(&f, 3);
    let mu2 = parse_literal(&f, "1 + t").unwrap();
    let cases = [
        (FamilySpec::M1 { mu1: mu1.clone(), mu2: mu2.clone(), mu3: int(&f, 5) }, true),
        (FamilySpec::M2 { mu1: mu1.clone(), mu2 }, false),
    ];
    for (spec, use_f) in cases {
        let r = build_family(&spec, &p).unwrap();
        let der = derived_operators(&r);
        let step = if use_f { &der.f } else { &der.e };
        let inv = mu1.inv().unwrap();
        let mut v: Vec<CycNum> = (0..4).map(|i| int(&f, (i == 0) as i64)).collect();
        for k in 0..4 {
            let expected: Vec<CycNum> = (0..4).map(|i| int(&f, (i == k) as i64)).collect();
            assert_eq!(v, expected, "{spec:?} at k = {k}");
            v = step.apply(&v).unwrap().iter().map(|c| c * &inv).collect();
        }
    }
}

#[test]
fn classify_conjugated_m1() {
    let f = FieldCtx::new(2).unwrap();
    let p = Params::from_ints(&f, 0, 0, 0);
    let r = build_family(&m1(&f, 1, 1, 0), &p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let conj = conjugate(&r, &random_invertible(&f, 2, &mut rng)).unwrap();
    assert_eq!(central_scalars(&conj).unwrap(), central_scalars(&r).unwrap());
    let hints = Hints { z_eigenvalue: Some(int(&f, 1)), ..Hints::default() };
    let c = classify(&conj, &hints).unwrap();
    assert_eq!(c.family, Family::M1);
    assert_eq!(c.canonical, canonical(&m1(&f, 1, 1, 0), &p).unwrap());
    assert!(c.spec.is_none());
    let hints = Hints { mu1_root: Some(int(&f, -1)), ..hints };
    assert!(classify(&conj, &hints).unwrap().spec.is_some());
    let bad = Hints { z_eigenvalue: Some(int(&f, 2)), ..Hints::default() };
    assert!(matches!(classify(&conj, &bad), Err(Error::HintRejected(_))));
}

#[test]
fn conjugation_by_identity_and_back() {
    let f = FieldCtx::new(3).unwrap();
    let p = Params::from_ints(&f, 1, 0, 0);
    let r = build_family(&FamilySpec::M6 { mu1: int(&f, 2), mu2: int(&f, 3) }, &p).unwrap();
    assert_eq!(conjugate(&r, &Mat::identity(&f, 3)).unwrap(), r);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pm = random_invertible(&f, 3, &mut rng);
    let back = conjugate(&conjugate(&r, &pm).unwrap(), &pm.inverse().unwrap()).unwrap();
    assert_eq!(back, r);
    assert!(conjugate(&r, &Mat::zeros(&f, 3, 3)).is_err());
}

#[test]
fn m2_criterion_misses_isomorphisms_when_f_has_a_root() {
    // With F(k0, μ₂) = 0 for some 0 < k0 < l, ker f on M2(μ₁, μ₂) contains
    // m_{k0} as well as m_0, and the module is also M2(μ₁, q^{-2k0}μ₂). The
    // exact-μ₂ criterion does not see this; the intertwiner does.
    let f = FieldCtx::new(3).unwrap();
    let one = CycNum::one(&f);
    let gamma = &(&CycNum::zeta(&f) - &one) * &CycNum::q2pow(&f, -1);
    let p = Params::new(&f, one.clone(), one.clone(), gamma).unwrap();
    let a = FamilySpec::M2 { mu1: int(&f, 2), mu2: one };
    let b = FamilySpec::M2 { mu1: int(&f, 2), mu2: CycNum::q2pow(&f, -1) };
    let dim = intertwiner_space(&build_family(&a, &p).unwrap(), &build_family(&b, &p).unwrap()).unwrap().len();
    assert_eq!(dim, 1);
    assert!(!iso_by_criterion(&a, &b, &p).unwrap().0);
}
