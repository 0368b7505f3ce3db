//! Property tests for the algebraic invariants the layers promise.

use e8_algebra::cayley::{oct_conj, oct_inner, oct_mul, oct_norm, OctonionC};
use e8_algebra::e8::{bracket, E8Element, E8_DIM};
use e8_algebra::freudenthal::{p_cross_q, skew, PVector};
use e8_algebra::jordan::{jcross, jdet, jmul, JordanC, JORDAN_DIM};
use e8_algebra::linalg::SpVec;
use e8_algebra::scalar::Scalar;
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3, 0usize..4).prop_map(|(num, den, kind)| {
        let base = Scalar::ratio(num, den);
        match kind {
            0 => base,
            1 => &base * &Scalar::i(),
            2 => &base * &Scalar::omega(),
            _ => &base + &Scalar::i(),
        }
    })
}

fn octonion_strategy() -> impl Strategy<Value = OctonionC> {
    proptest::collection::vec((0usize..8, scalar_strategy()), 1..4).prop_map(|entries| {
        let mut o = OctonionC::zero();
        for (k, v) in entries {
            o.c[k] = &o.c[k] + &v;
        }
        o
    })
}

fn jordan_strategy() -> impl Strategy<Value = JordanC> {
    proptest::collection::vec((0usize..JORDAN_DIM, scalar_strategy()), 1..5).prop_map(|entries| {
        let mut j = JordanC::zero();
        for (k, v) in entries {
            j.set_coord(k, &j.coord(k) + &v);
        }
        j
    })
}

fn pvec_strategy() -> impl Strategy<Value = PVector> {
    proptest::collection::vec((0usize..56, scalar_strategy()), 1..4).prop_map(|entries| {
        PVector::from_vec(&SpVec::from_entries(
            entries.into_iter().collect::<Vec<_>>(),
        ))
    })
}

fn element_strategy() -> impl Strategy<Value = E8Element> {
    proptest::collection::vec((0usize..E8_DIM, scalar_strategy()), 1..4).prop_map(|entries| {
        E8Element::from_vec(&SpVec::from_entries(
            entries.into_iter().collect::<Vec<_>>(),
        ))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_laws(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).tau(), &a.tau() * &b.tau());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), Scalar::one());
        }
    }

    #[test]
    fn octonion_laws(x in octonion_strategy(), y in octonion_strategy()) {
        // alternativity
        prop_assert_eq!(oct_mul(&oct_mul(&x, &x), &y), oct_mul(&x, &oct_mul(&x, &y)));
        // norm multiplicativity and the conjugation anti-homomorphism
        prop_assert_eq!(oct_norm(&oct_mul(&x, &y)), &oct_norm(&x) * &oct_norm(&y));
        prop_assert_eq!(oct_conj(&oct_mul(&x, &y)), oct_mul(&oct_conj(&y), &oct_conj(&x)));
        prop_assert_eq!(oct_inner(&x, &y), oct_inner(&y, &x));
    }

    #[test]
    fn jordan_laws(x in jordan_strategy(), y in jordan_strategy()) {
        prop_assert_eq!(jmul(&x, &y), jmul(&y, &x));
        prop_assert_eq!(jcross(&x, &y), jcross(&y, &x));
        // adjoint identity (X x X) o X = det(X) I
        let lhs = jmul(&jcross(&x, &x), &x);
        let rhs = JordanC::identity().scale(&jdet(&x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn freudenthal_laws(p in pvec_strategy(), q in pvec_strategy()) {
        prop_assert_eq!(skew(&p, &q), -&skew(&q, &p));
        prop_assert_eq!(p_cross_q(&p, &q), p_cross_q(&q, &p));
    }

    #[test]
    fn bracket_laws(x in element_strategy(), y in element_strategy()) {
        prop_assert!(bracket(&x, &x).is_zero());
        prop_assert_eq!(bracket(&x, &y).to_vec(), bracket(&y, &x).neg().to_vec());
    }
}
