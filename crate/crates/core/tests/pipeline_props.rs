mod common;

use common::{act, rat, random_integer_quintic};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use quintic::invariants::{absolute_invariants, invariants};
use quintic::poly::UniPoly;
use quintic::reduction::{certify_same_field, reduce_extension, squared_roots, tschirnhausen_minpoly};
use quintic::rings::{is_square, RationalField, Ring};
use quintic::templates::{specialize, template, TemplateId};
use quintic::transvect::{transvectant, BinaryForm};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn uni(cs: &[i64]) -> UniPoly<RationalField> {
    UniPoly::new(&RationalField, "x", cs.iter().map(|&c| rat(c, 1)).collect())
}

fn quintic(seed: u64) -> UniPoly<RationalField> {
    random_integer_quintic(&mut ChaCha8Rng::seed_from_u64(seed), 9)
}

type C = (f64, f64);

fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: C, b: C) -> C {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

/// Durand–Kerner on a monic polynomial with f64 coefficients, low degree first.
fn roots(cs: &[f64]) -> Vec<C> {
    let n = cs.len() - 1;
    let mut z: Vec<C> = vec![(0.4, 0.9); n];
    for k in 1..n {
        z[k] = cmul(z[k - 1], (0.4, 0.9));
    }
    for _ in 0..2000 {
        for i in 0..n {
            let mut num = (0.0, 0.0);
            for &c in cs.iter().rev() {
                num = cmul(num, z[i]);
                num.0 += c;
            }
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den = cmul(den, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let step = cdiv(num, den);
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
        }
    }
    z
}

fn to_f64(p: &UniPoly<RationalField>) -> Vec<f64> {
    p.coeffs().iter().map(|c: &BigRational| c.to_f64().unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn transvectant_order_bookkeeping(p in 0u32..6, q in 0u32..6, m in 0u32..7) {
        let z = quintic::rings::IntegerRing;
        let t = transvectant(&BinaryForm::generic(&z, p), &BinaryForm::generic(&z, q), m);
        prop_assert_eq!(t.exceeded, m > p.min(q));
        if !t.exceeded {
            prop_assert_eq!(t.form.order(), p + q - 2 * m);
            if let Some(d) = t.form.poly().homogeneous_degree(&["x", "y"]) {
                prop_assert_eq!(d, p + q - 2 * m);
            }
        } else {
            prop_assert!(t.form.is_zero());
        }
    }

    #[test]
    fn tschirnhausen_identity_is_monic_input(seed: u64) {
        let g = quintic(seed);
        let x = UniPoly::x(&RationalField, "x");
        let one = UniPoly::one(&RationalField, "x");
        prop_assert_eq!(tschirnhausen_minpoly(&g, &x, &one).unwrap(), g.monic());
    }

    #[test]
    fn tschirnhausen_degree_and_monic(seed: u64, num in prop::collection::vec(-4i64..=4, 1..5)) {
        let g = quintic(seed);
        let m = tschirnhausen_minpoly(&g, &uni(&num), &UniPoly::one(&RationalField, "x")).unwrap();
        prop_assert_eq!(m.degree(), Some(5));
        prop_assert!(m.is_monic());
    }

    #[test]
    fn scaling_weights(seed: u64, l in prop::sample::select(vec![-3i64, -2, 2, 3, 5])) {
        let g = quintic(seed);
        let f = RationalField;
        let lam = rat(l, 1);
        let a = invariants(&g).unwrap();
        let b = invariants(&g.scale(&lam)).unwrap();
        prop_assert_eq!(b.a, f.mul(&a.a, &f.pow(&lam, 4)));
        prop_assert_eq!(b.delta, f.mul(&a.delta, &f.pow(&lam, 8)));
        prop_assert_eq!(b.m, f.mul(&a.m, &f.pow(&lam, 12)));
    }

    #[test]
    fn absolute_invariants_under_diagonal_action(seed: u64, l in prop::sample::select(vec![-3i64, -2, 2, 3, 7])) {
        let g = quintic(seed);
        let Some(h) = act(&g, [[rat(l, 1), rat(0, 1)], [rat(0, 1), rat(1, 1)]]) else { return Ok(()); };
        let (Ok(a), Ok(b)) = (
            absolute_invariants(&invariants(&g).unwrap()),
            absolute_invariants(&invariants(&h).unwrap()),
        ) else { return Ok(()); };
        prop_assert_eq!(a, b);
    }

    #[test]
    fn squared_roots_with_opposite_pair_has_zero_disc(r in 1i64..6, cubic in prop::collection::vec(-5i64..=5, 3)) {
        let mut c = cubic.clone();
        c.push(1);
        let g = uni(&[-r * r, 0, 1]).mul(&uni(&c));
        let s = squared_roots(&g).unwrap();
        prop_assert_eq!(s.discriminant().unwrap(), rat(0, 1));
    }

    #[test]
    fn two_stage_specialization(dn in -20i64..=20, dd in 1i64..=9, qn in 1i64..=20, qd in 1i64..=9) {
        let f = RationalField;
        let (delta, q) = (rat(dn, dd), rat(qn, qd));
        let Ok(one) = specialize(TemplateId::P2S5, &f, &[("delta", delta.clone()), ("q", q.clone())], false) else {
            return Ok(());
        };
        let generic = template(TemplateId::P2S5).poly.map_ring(&f, |c| f.from_int(c));
        let staged = generic.evaluate(&[("delta", delta)]).evaluate(&[("q", q)]);
        prop_assert_eq!(UniPoly::from_multi(&staged, "u").unwrap(), one);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn reduction_matches_and_certifies(seed: u64) {
        let g = quintic(seed);
        prop_assume!(g.is_squarefree());
        let Ok(cert) = reduce_extension(&g) else { return Ok(()); };
        prop_assert!(cert.minpoly_match);
        prop_assert!(cert.recheck().unwrap());
        if certify_same_field(&g, &cert.specialized) {
            let f = RationalField;
            let dg = g.monic().discriminant().unwrap();
            let ds = cert.specialized.discriminant().unwrap();
            prop_assert_eq!(is_square(&f, &dg).is_some(), is_square(&f, &ds).is_some());
        }
    }

    #[test]
    fn squared_roots_numerically(seed: u64) {
        let g = quintic(seed).monic();
        prop_assume!(g.is_squarefree());
        let rs = roots(&to_f64(&g));
        let sq: Vec<C> = rs.iter().map(|&r| cmul(r, r)).collect();
        let mut expected = vec![(1.0, 0.0)];
        for s in &sq {
            let mut next = vec![(0.0, 0.0); expected.len() + 1];
            for (k, &e) in expected.iter().enumerate() {
                next[k + 1].0 += e.0;
                next[k + 1].1 += e.1;
                let t = cmul(e, *s);
                next[k].0 -= t.0;
                next[k].1 -= t.1;
            }
            expected = next;
        }
        let got = to_f64(&squared_roots(&g).unwrap());
        let scale = got.iter().fold(1.0f64, |m, c| m.max(c.abs()));
        for (k, e) in expected.iter().enumerate() {
            prop_assert!((e.0 - got[k]).abs() <= 1e-6 * scale, "coefficient {k}: {e:?} vs {}", got[k]);
            prop_assert!(e.1.abs() <= 1e-6 * scale);
        }
    }
}
