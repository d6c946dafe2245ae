use genjones::daha::UModuleElem;
use genjones::exactalg::{LaurentPoly, Monomial, QFraction, SignedMonomial, TruncatedSeries, Var};
use genjones::params::{HeckeParams, Param};
use genjones::qcombo::qbinom;
use proptest::prelude::*;

fn monomial() -> impl Strategy<Value = Monomial> {
    (-6i32..=6, -3i32..=3, -2i32..=2, -3i32..=3).prop_map(|(q, t1, t2, x)| {
        Monomial::from_pairs(&[(Var::Q, q), (Var::T1, t1), (Var::T2, t2), (Var::X, x)])
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-20i64..=20, monomial()), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, m)| LaurentPoly::monomial(c.into(), m))
            .sum()
    })
}

fn qpoly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-9i64..=9, -8i32..=8), 1..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, e)| LaurentPoly::monomial(c.into(), Monomial::var(Var::Q, e)))
            .sum()
    })
}

fn params() -> impl Strategy<Value = HeckeParams> {
    prop_oneof![
        Just(HeckeParams::formal()),
        Just(HeckeParams::new(Param::Formal, Param::One)),
        Just(HeckeParams::new(Param::One, Param::Formal)),
        Just(HeckeParams::classical()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn substitution_round_trip(a in poly(), k in -3i32..=3, negate in any::<bool>()) {
        let shift = Monomial::from_pairs(&[(Var::X, 1), (Var::Q, k)]);
        let back = Monomial::from_pairs(&[(Var::X, 1), (Var::Q, -k)]);
        let (there, home) = if negate {
            (SignedMonomial::neg(shift), SignedMonomial::neg(back))
        } else {
            (SignedMonomial::pos(shift), SignedMonomial::pos(back))
        };
        prop_assert_eq!(a.substitute(Var::X, &there).substitute(Var::X, &home), a.clone());
        prop_assert_eq!(a.invert_var(Var::T1).invert_var(Var::T1), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly()) {
        let image = SignedMonomial::neg(Monomial::from_pairs(&[(Var::Q, 2), (Var::T1, -1)]));
        prop_assert_eq!(
            (&a * &b).substitute(Var::X, &image),
            &a.substitute(Var::X, &image) * &b.substitute(Var::X, &image)
        );
    }

    #[test]
    fn reduce_preserves_value(
        num in qpoly(),
        factor in prop::collection::vec(1i32..=6, 0..3),
        den in prop::collection::vec(1i32..=6, 0..4),
    ) {
        // build a numerator that shares some brace factors with the denominator
        let shared: LaurentPoly = factor
            .iter()
            .map(|&m| LaurentPoly::var_pow(Var::Q, m) - LaurentPoly::var_pow(Var::Q, -m))
            .product();
        let f = QFraction::new(&num * &shared, den.iter().copied());
        let r = f.reduce();
        prop_assert_eq!(r.num() * &f.den_poly(), f.num() * &r.den_poly());
        prop_assert!(r.den().len() <= f.den().len());
    }

    #[test]
    fn series_inversion(tail in prop::collection::vec(qpoly(), 0..5), order in 1usize..7) {
        let mut coeffs = vec![QFraction::one()];
        coeffs.extend(tail.into_iter().map(QFraction::from_poly));
        let s = TruncatedSeries::from_coeffs(coeffs, order);
        let inv = s.invert().unwrap();
        prop_assert!(s.mul(&inv).agrees_with(&TruncatedSeries::one(order)));
    }

    #[test]
    fn q_pascal(n in 1i32..=12, m in 0i32..=12, base in 1i32..=4) {
        prop_assume!(m <= n);
        let v = |e: i32| LaurentPoly::var_pow(Var::Q, base * e);
        // the mirrored rule, independent of the one used to build the table
        let rhs = &v(m) * &qbinom(n - 1, m, base) + &v(m - n) * &qbinom(n - 1, m - 1, base);
        prop_assert_eq!(qbinom(n, m, base), rhs);
        prop_assert_eq!(qbinom(n, m, base), qbinom(n, n - m, base));
    }

    #[test]
    fn inverse_y_contract(
        terms in prop::collection::vec((-6i32..=6, qpoly()), 1..5),
        p in params(),
    ) {
        let mut f = UModuleElem::zero();
        for (k, c) in terms {
            f.add_term(k, QFraction::from_poly(c));
        }
        let f = f.reduce();
        prop_assert_eq!(f.act_y_dunkl(&p, false).act_y_dunkl(&p, true).reduce(), f.clone());
        prop_assert_eq!(f.act_y_dunkl(&p, true).act_y_dunkl(&p, false).reduce(), f);
    }
}
