//! Cross-module consistency: lifted transformations against their
//! displayed block actions, and the partial transfer against the
//! restriction of the total degree-swap map.

use e8_algebra::e8::{
    build_e8_map, lift_e7, zeta_delta, AlgebraMap, E8Element, E8MapName, P_OFF, S_IDX, T_IDX,
};
use e8_algebra::fixpoints::{graded_piece, named_map};
use e8_algebra::freudenthal::{build_p_map, phi_theta, PMapName, PVector, P_DIM};
use e8_algebra::jordan::JordanC;
use e8_algebra::linalg::{SpMat, SpVec};
use e8_algebra::scalar::Scalar;

#[test]
fn omega4_moves_first_slot_by_i() {
    let omega4 = named_map(E8MapName::Omega4);
    let mut r = E8Element::zero();
    r.p = PVector::new(
        JordanC::e(1),
        JordanC::zero(),
        Scalar::zero(),
        Scalar::zero(),
    );
    let out = omega4.apply(&r);
    let mut expect = E8Element::zero();
    expect.p = PVector::new(
        JordanC::e(1).scale(&Scalar::i()),
        JordanC::zero(),
        Scalar::zero(),
        Scalar::zero(),
    );
    assert_eq!(out, expect);
}

#[test]
fn kappa4_negates_the_last_two_slots() {
    let kappa4 = named_map(E8MapName::Kappa4);
    assert_eq!(kappa4.mat.get(S_IDX, S_IDX), -&Scalar::one());
    assert_eq!(kappa4.mat.get(T_IDX, T_IDX), -&Scalar::one());
    assert_eq!(kappa4.mat.get(245, 245), Scalar::one());
}

#[test]
fn lift_of_minus_identity_is_upsilon() {
    let minus_id = SpMat::identity(P_DIM).scale(&-&Scalar::one());
    let lifted = lift_e7(&minus_id).unwrap();
    assert_eq!(&lifted, named_map(E8MapName::Upsilon));
}

#[test]
fn lift_of_nu4_commutes_with_kappa4() {
    let nu4 = build_p_map(PMapName::Nu4);
    let lifted = lift_e7(&nu4).unwrap();
    let kappa4 = named_map(E8MapName::Kappa4);
    assert_eq!(lifted.compose(kappa4), kappa4.compose(&lifted));
}

#[test]
fn lift_kernel_pair_is_identity() {
    let w = Scalar::omega();
    let w2 = &w * &w;
    let prod = lift_e7(&phi_theta(&w))
        .unwrap()
        .compose(&lift_e7(&phi_theta(&w2)).unwrap());
    assert!(prod.is_identity());
}

#[test]
fn transfer_matches_the_restricted_total_map() {
    // delta flip on the plus-two piece, then compare against the partial map
    let zeta = named_map(E8MapName::Zeta);
    let delta = |r: &E8Element| -> E8Element {
        let mut out = r.clone();
        let rho1 = r.phi.b.xi[0].clone();
        let t = r.t.clone();
        let mut b = JordanC::zero();
        b.xi[0] = -&t;
        out.phi = e8_algebra::freudenthal::E7Gen::new_unchecked(
            SpMat::zero(e8_algebra::jordan::JORDAN_DIM),
            JordanC::zero(),
            b,
            Scalar::zero(),
        );
        out.t = -&rho1;
        out
    };
    for v in &graded_piece(-2).basis {
        let e = E8Element::from_vec(v);
        let via_total = delta(&zeta.apply(&e));
        let via_partial = zeta_delta(&e).unwrap();
        assert_eq!(via_total, via_partial);
    }
}

#[test]
fn zeta_swaps_the_scalar_slots() {
    let zeta = named_map(E8MapName::Zeta);
    let mut r = E8Element::zero();
    r.s = Scalar::int(3);
    r.t = Scalar::int(5);
    r.r = Scalar::int(7);
    let out = zeta.apply(&r);
    assert_eq!(out.s, Scalar::int(5));
    assert_eq!(out.t, Scalar::int(3));
    assert_eq!(out.r, Scalar::int(-7));
}

#[test]
fn antilinear_composition_parity() {
    let tlo = named_map(E8MapName::TauLambdaOmega);
    let omega4 = named_map(E8MapName::Omega4);
    assert!(tlo.compose(omega4).antilinear);
    assert!(!tlo.compose(tlo).antilinear);
    // applying with the flag conjugates coordinates first
    let v = SpVec::unit(P_OFF).scale(&Scalar::i());
    let lin = AlgebraMap::linear(SpMat::identity(248));
    let anti = AlgebraMap::antilinear(SpMat::identity(248));
    assert_eq!(lin.apply_vec(&v), v);
    assert_eq!(anti.apply_vec(&v), v.scale(&-&Scalar::one()));
}

#[test]
fn unknown_map_requests_are_partial() {
    let zd = build_e8_map(E8MapName::ZetaDelta).unwrap().partial();
    let mut bad = E8Element::zero();
    bad.r = Scalar::one();
    assert!(zd.apply(&bad).is_err());
    let good = E8Element::from_vec(&graded_piece(-2).basis[0]);
    assert!(zd.apply(&good).is_ok());
}
