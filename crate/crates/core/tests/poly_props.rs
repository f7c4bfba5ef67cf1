use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quintic::formparse::{format_poly, parse_poly};
use quintic::poly::{resultant, MultiPoly};
use quintic::rings::{RationalField, Ring};

const VARS: [&str; 3] = ["x", "y", "c"];

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn poly() -> impl Strategy<Value = MultiPoly<RationalField>> {
    prop::collection::vec((-9i64..=9, prop::collection::vec(0u32..4, 3)), 0..6)
        .prop_map(|ts| MultiPoly::from_terms(&RationalField, &VARS, ts.into_iter().map(|(c, e)| (rat(c), e))))
}

fn linear_product(var: &str, roots: &[i64]) -> MultiPoly<RationalField> {
    let f = RationalField;
    let x = MultiPoly::var(&f, var);
    roots.iter().fold(MultiPoly::one(&f), |acc, &r| acc.mul(&x.sub(&MultiPoly::constant(&f, rat(r)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn mixed_partials_commute(a in poly()) {
        prop_assert_eq!(a.derivative("x").derivative("y"), a.derivative("y").derivative("x"));
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly()) {
        let lhs = a.mul(&b).derivative("x");
        let rhs = a.derivative("x").mul(&b).add(&a.mul(&b.derivative("x")));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), r in poly()) {
        let r = r.substitute("x", &MultiPoly::zero(&RationalField, &VARS));
        prop_assert_eq!(
            a.mul(&b).substitute("x", &r),
            a.substitute("x", &r).mul(&b.substitute("x", &r))
        );
        prop_assert_eq!(
            a.add(&b).substitute("x", &r),
            a.substitute("x", &r).add(&b.substitute("x", &r))
        );
    }

    #[test]
    fn resultant_antisymmetry(a in poly(), b in poly()) {
        let (Some(da), Some(db)) = (a.degree_in("x"), b.degree_in("x")) else { return Ok(()); };
        prop_assume!(da > 0 && db > 0);
        let r1 = resultant(&a, &b, "x").unwrap();
        let r2 = resultant(&b, &a, "x").unwrap();
        let r2 = if (da * db) % 2 == 1 { r2.neg() } else { r2 };
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn resultant_is_root_product(
        xs in prop::collection::vec(-6i64..=6, 1..4),
        ys in prop::collection::vec(-6i64..=6, 1..4),
    ) {
        let f = linear_product("x", &xs);
        let g = linear_product("x", &ys);
        let expected: BigRational = xs.iter().flat_map(|a| ys.iter().map(move |b| rat(a - b))).product();
        let r = resultant(&f, &g, "x").unwrap();
        prop_assert_eq!(r.as_constant().unwrap_or_else(|| RationalField.zero()), expected);
    }

    #[test]
    fn format_parse_roundtrip(a in poly()) {
        let text = format_poly(&a);
        let back = parse_poly(&text, &RationalField, &VARS).unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    // Mutated inputs must give a value or a structured error, never a panic.
    #[test]
    fn parser_mutations_never_panic(
        a in poly(),
        edits in prop::collection::vec((any::<prop::sample::Index>(), prop::sample::select(
            vec!["", "(", ")", "^", "*", "+", "-", "/", "x", "q", "^-1", "^999", "^99999999999", "1/0", " ", "é", "3.5", "**"]
        )), 1..4),
    ) {
        let mut text = format_poly(&a);
        for (at, ins) in edits {
            let mut cut = at.index(text.len() + 1);
            while !text.is_char_boundary(cut) {
                cut -= 1;
            }
            text.insert_str(cut, ins);
        }
        let _ = parse_poly(&text, &RationalField, &VARS);
    }

    #[test]
    fn parser_random_bytes_never_panic(s in "[ -~]{0,40}") {
        let _ = parse_poly(&s, &RationalField, &VARS);
    }
}
