#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use quintic::formparse::{parse_element, parse_univariate};
use quintic::poly::UniPoly;
use quintic::rings::{Field, RationalField};
use quintic::transvect::BinaryForm;
use rand::Rng;

pub fn q(text: &str) -> UniPoly<RationalField> {
    parse_univariate(text, &RationalField, "x").unwrap()
}

pub fn qe(text: &str) -> BigRational {
    parse_element(text, &RationalField).unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Quintic with small integer coefficients and nonzero leading term.
pub fn random_integer_quintic(rng: &mut impl Rng, bound: i64) -> UniPoly<RationalField> {
    let mut cs: Vec<BigRational> = (0..5).map(|_| rat(rng.gen_range(-bound..=bound), 1)).collect();
    let lead = loop {
        let l = rng.gen_range(-3i64..=3);
        if l != 0 {
            break l;
        }
    };
    cs.push(rat(lead, 1));
    UniPoly::new(&RationalField, "x", cs)
}

/// Random matrix of determinant 1 with small entries.
pub fn random_sl2(rng: &mut impl Rng) -> [[i64; 2]; 2] {
    loop {
        let a = rng.gen_range(-3i64..=3);
        let b = rng.gen_range(-3i64..=3);
        if num_integer::Integer::gcd(&a, &b) != 1 {
            continue;
        }
        // Solve a d - b c = 1.
        let e = num_integer::Integer::extended_gcd(&a, &b);
        let (d, c) = (e.x * e.gcd, -e.y * e.gcd);
        let t = rng.gen_range(-2i64..=2);
        return [[a, b], [c + t * a, d + t * b]];
    }
}

/// `g` acted on by `m` as a binary quintic, dehomogenized again; `None`
/// when the leading coefficient vanishes.
pub fn act<F: Field>(g: &UniPoly<F>, m: [[F::Element; 2]; 2]) -> Option<UniPoly<F>> {
    let field = g.field();
    let coeffs: Vec<F::Element> = (0..=5).rev().map(|k| g.coeff(k)).collect();
    let form = BinaryForm::from_coefficients(field, &coeffs).act(m);
    let top: Vec<F::Element> = form
        .coefficients()
        .iter()
        .map(|c| c.as_constant().unwrap_or_else(|| field.zero()))
        .collect();
    let h = UniPoly::new(field, g.var(), top.into_iter().rev().collect());
    (h.degree() == Some(5)).then_some(h)
}

pub fn matrix(m: [[i64; 2]; 2]) -> [[BigRational; 2]; 2] {
    m.map(|row| row.map(|v| rat(v, 1)))
}
