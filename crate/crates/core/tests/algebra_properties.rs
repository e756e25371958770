use lambda_operad::{LambdaPoly, Rational, TreeCombination, WeightedTree};
use proptest::prelude::*;

/// Dense coefficient vectors, index = exponent; the reference for sparse arithmetic.
type Dense = Vec<i64>;

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn dense_add(a: &Dense, b: &Dense) -> Dense {
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect()
}

fn to_poly(d: &Dense) -> LambdaPoly {
    let mut p = LambdaPoly::zero();
    for (k, &c) in d.iter().enumerate() {
        p.add_monomial(&Rational::integer(c), k as u32);
    }
    p
}

fn horner(d: &Dense, x: i64) -> i64 {
    d.iter().rev().fold(0, |acc, &c| acc * x + c)
}

fn dense() -> impl Strategy<Value = Dense> {
    prop::collection::vec(-5i64..=5, 0..6)
}

proptest! {
    #[test]
    fn products_match_convolution(a in dense(), b in dense()) {
        prop_assert_eq!(&to_poly(&a) * &to_poly(&b), to_poly(&dense_mul(&a, &b)));
    }

    #[test]
    fn sums_match_dense(a in dense(), b in dense()) {
        prop_assert_eq!(&to_poly(&a) + &to_poly(&b), to_poly(&dense_add(&a, &b)));
        prop_assert!((&to_poly(&a) - &to_poly(&a)).is_zero());
    }

    #[test]
    fn ring_axioms(a in dense(), b in dense(), c in dense()) {
        let (p, q, r) = (to_poly(&a), to_poly(&b), to_poly(&c));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &LambdaPoly::one(), p.clone());
    }

    #[test]
    fn evaluation_matches_horner(a in dense(), x in -3i64..=3) {
        prop_assert_eq!(to_poly(&a).eval(&Rational::integer(x)), Rational::integer(horner(&a, x)));
    }

    #[test]
    fn evaluation_is_a_ring_morphism(a in dense(), b in dense(), num in -4i64..=4, den in 1i64..=4) {
        let x = Rational::new(num, den).unwrap();
        let (p, q) = (to_poly(&a), to_poly(&b));
        prop_assert_eq!((&p * &q).eval(&x), &p.eval(&x) * &q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), &p.eval(&x) + &q.eval(&x));
    }

    #[test]
    fn polynomial_print_parse_round_trip(a in dense()) {
        let p = to_poly(&a);
        prop_assert_eq!(p.to_string().parse::<LambdaPoly>().unwrap(), p);
    }

    #[test]
    fn rational_print_parse_round_trip(num in -50i64..=50, den in 1i64..=50) {
        let r = Rational::new(num, den).unwrap();
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn combination_module_laws(a in dense(), b in dense(), c in dense()) {
        let x: WeightedTree = "r:1[s:2]".parse().unwrap();
        let y: WeightedTree = "r:2".parse().unwrap();
        let mut u = TreeCombination::term(x.clone(), to_poly(&a));
        u.add_term(y.clone(), &to_poly(&b)).unwrap();
        let mut v = TreeCombination::term(y, to_poly(&c));
        v.add_term(x, &to_poly(&b)).unwrap();
        let k = to_poly(&c);
        prop_assert_eq!(u.try_add(&v).unwrap(), v.try_add(&u).unwrap());
        prop_assert_eq!(u.try_add(&v).unwrap().scale(&k), u.scale(&k).try_add(&v.scale(&k)).unwrap());
        prop_assert!(u.try_sub(&u).unwrap().is_zero());
        prop_assert_eq!(u.scale(&LambdaPoly::one()), u.clone());
        prop_assert!(u.iter().all(|(_, p)| !p.is_zero()));
    }
}

#[test]
fn rationals_reject_zero_denominators() {
    assert!(Rational::new(1, 0).is_err());
    assert!("1/0".parse::<Rational>().is_err());
    assert_eq!("-6/4".parse::<Rational>().unwrap().to_string(), "-3/2");
}
