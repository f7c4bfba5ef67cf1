//! Exact coefficient domains.
//!
//! Rings are values: a ring object carries whatever context its elements
//! need (the modulus of a prime field, the parameter name of a function
//! field) and performs arithmetic on plain element values. Polynomials hold
//! a clone of their coefficient ring.

pub mod dense;
mod descriptor;
mod integer;
mod prime;
mod ratfunc;
mod rational;

pub use descriptor::{RingDescriptor, RingKind};
pub use integer::IntegerRing;
pub use prime::{is_prime_u64, PrimeField};
pub use ratfunc::{RatFn, RationalFunctionField};
pub use rational::{rat, RationalField};

use num_bigint::BigInt;
use std::fmt::Debug;
use std::hash::Hash;

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    type Element: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn from_int(&self, n: &BigInt) -> Self::Element;

    fn from_i64(&self, n: i64) -> Self::Element {
        self.from_int(&BigInt::from(n))
    }

    fn is_zero(&self, a: &Self::Element) -> bool;

    fn is_one(&self, a: &Self::Element) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;

    fn pow(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of a unit; `None` for zero and for non-units.
    fn inv(&self, a: &Self::Element) -> Option<Self::Element>;

    /// `a / b` when `b` divides `a` exactly.
    fn div_exact(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element>;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Name of the transcendental parameter of a function field.
    fn parameter(&self) -> Option<&str> {
        None
    }

    /// The parameter itself as an element.
    fn parameter_element(&self) -> Option<Self::Element> {
        None
    }

    /// Text in the polynomial grammar that parses back to `a`.
    fn format(&self, a: &Self::Element) -> String;

    /// Like `format`, but safe to use as one factor of a product term.
    fn format_factor(&self, a: &Self::Element) -> String {
        self.format(a)
    }

    /// Whether division by nonzero constants is available to the parser.
    fn supports_division(&self) -> bool {
        true
    }

    /// Whether `format(a)` should be printed as a subtraction of `format(-a)`.
    fn is_negative(&self, _a: &Self::Element) -> bool {
        false
    }
}

/// A field: every nonzero element is a unit.
pub trait Field: Ring {
    fn div(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// A square root of `a` in the field, if one exists. The returned root
    /// is canonical (positive over Q, least residue over F_p).
    fn sqrt(&self, a: &Self::Element) -> Option<Self::Element>;

    fn descriptor(&self) -> RingDescriptor;
}

/// Square-root witness: `Some(s)` with `s*s == r`.
pub fn is_square<F: Field>(field: &F, r: &F::Element) -> Option<F::Element> {
    field.sqrt(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn pow_by_squaring() {
        let q = RationalField;
        let two = q.from_i64(2);
        assert_eq!(q.pow(&two, 10), q.from_i64(1024));
        assert_eq!(q.pow(&two, 0), q.one());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(q.pow(&half, 3), BigRational::new(1.into(), 8.into()));
    }
}
