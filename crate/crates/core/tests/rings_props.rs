use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quintic::rings::{dense, is_square, Field, PrimeField, RationalField, RationalFunctionField, Ring};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn check_axioms<F: Field>(f: &F, a: &F::Element, b: &F::Element, c: &F::Element) {
    assert_eq!(f.add(a, b), f.add(b, a));
    assert_eq!(f.mul(a, b), f.mul(b, a));
    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    assert_eq!(f.add(a, &f.zero()), *a);
    assert_eq!(f.mul(a, &f.one()), *a);
    assert!(f.is_zero(&f.add(a, &f.neg(a))));
    if f.is_zero(a) {
        assert!(f.inv(a).is_none());
    } else {
        let ai = f.inv(a).expect("unit");
        assert!(f.is_one(&f.mul(a, &ai)));
    }
}

fn check_square<F: Field>(f: &F, s: &F::Element) {
    let s2 = f.mul(s, s);
    let w = is_square(f, &s2).expect("square has a root");
    assert_eq!(f.mul(&w, &w), s2);
}

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

fn fpc() -> RationalFunctionField<PrimeField> {
    RationalFunctionField::new(PrimeField::new(11).unwrap(), "c")
}

fn qc() -> RationalFunctionField<RationalField> {
    RationalFunctionField::new(RationalField, "c")
}

fn fpc_elem() -> impl Strategy<Value = (Vec<u64>, Vec<u64>)> {
    (
        prop::collection::vec(0u64..11, 0..4),
        prop::collection::vec(0u64..11, 1..4).prop_filter("nonzero", |d| d.iter().any(|&x| x != 0)),
    )
}

fn qc_elem() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (
        prop::collection::vec(-6i64..=6, 0..4),
        prop::collection::vec(-6i64..=6, 1..3).prop_filter("nonzero", |d| d.iter().any(|&x| x != 0)),
    )
}

fn mk_fpc(k: &RationalFunctionField<PrimeField>, (n, d): &(Vec<u64>, Vec<u64>)) -> <RationalFunctionField<PrimeField> as Ring>::Element {
    k.normalize(n.clone(), d.clone()).unwrap()
}

fn mk_qc(k: &RationalFunctionField<RationalField>, (n, d): &(Vec<i64>, Vec<i64>)) -> <RationalFunctionField<RationalField> as Ring>::Element {
    let n = n.iter().map(|&v| rat(v, 1)).collect();
    let d = d.iter().map(|&v| rat(v, 1)).collect();
    k.normalize(n, d).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
        check_axioms(&RationalField, &a, &b, &c);
    }

    #[test]
    fn prime_axioms(p in prop::sample::select(vec![7u64, 11, 13, 101, 1_000_000_007]), a: u64, b: u64, c: u64) {
        let f = PrimeField::new(p).unwrap();
        check_axioms(&f, &f.reduce_u64(a), &f.reduce_u64(b), &f.reduce_u64(c));
    }

    #[test]
    fn fpc_axioms(a in fpc_elem(), b in fpc_elem(), c in fpc_elem()) {
        let k = fpc();
        check_axioms(&k, &mk_fpc(&k, &a), &mk_fpc(&k, &b), &mk_fpc(&k, &c));
    }

    #[test]
    fn qc_axioms(a in qc_elem(), b in qc_elem(), c in qc_elem()) {
        let k = qc();
        check_axioms(&k, &mk_qc(&k, &a), &mk_qc(&k, &b), &mk_qc(&k, &c));
    }

    #[test]
    fn normalize_is_idempotent(a in qc_elem(), b in fpc_elem()) {
        let k = qc();
        let r = mk_qc(&k, &a);
        let again = k.normalize(r.numerator().to_vec(), r.denominator().to_vec()).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert!(k.base().is_one(dense::lead(r.denominator()).unwrap()));

        let k = fpc();
        let r = mk_fpc(&k, &b);
        let again = k.normalize(r.numerator().to_vec(), r.denominator().to_vec()).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert!(dense::is_one(k.base(), &dense::gcd(k.base(), r.numerator(), r.denominator()))
            || r.numerator().is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn square_witness_rational(s in small_rat()) {
        check_square(&RationalField, &s);
    }

    #[test]
    fn square_witness_prime(p in prop::sample::select(vec![7u64, 11, 13, 101, 1_000_000_007]), s: u64) {
        let f = PrimeField::new(p).unwrap();
        check_square(&f, &f.reduce_u64(s));
    }

    #[test]
    fn square_witness_fpc(s in fpc_elem()) {
        let k = fpc();
        check_square(&k, &mk_fpc(&k, &s));
    }

    #[test]
    fn square_witness_qc(s in qc_elem()) {
        let k = qc();
        check_square(&k, &mk_qc(&k, &s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn poly_sqrt_roundtrip(cs in prop::collection::vec(-20i64..=20, 1..6)) {
        let f = RationalField;
        let q = dense::trim(&f, cs.iter().map(|&v| rat(v, 1)).collect());
        let q2 = dense::mul(&f, &q, &q);
        let r = dense::sqrt(&f, &q2).expect("square");
        prop_assert!(r == q || r == dense::neg(&f, &q));
    }

    #[test]
    fn poly_sqrt_roundtrip_mod_p(cs in prop::collection::vec(0u64..13, 1..6)) {
        let f = PrimeField::new(13).unwrap();
        let q = dense::trim(&f, cs);
        let q2 = dense::mul(&f, &q, &q);
        let r = dense::sqrt(&f, &q2).expect("square");
        prop_assert!(r == q || r == dense::neg(&f, &q));
    }

    #[test]
    fn nonsquares_are_rejected(n in 2i64..500) {
        let r = rat(n, 1);
        let root = (n as f64).sqrt().round() as i64;
        prop_assert_eq!(is_square(&RationalField, &r).is_some(), root * root == n);
        prop_assert!(is_square(&RationalField, &rat(-n, 1)).is_none());
    }
}
