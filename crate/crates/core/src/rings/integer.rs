use super::Ring;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The integers. Used for the universal covariant table, whose entries
/// have integral numerical coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Element = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn supports_division(&self) -> bool {
        false
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
}
