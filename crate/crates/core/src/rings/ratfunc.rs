use super::{dense, Field, Ring, RingDescriptor};
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// A rational function `num / den` in one parameter. Canonical form:
/// `gcd(num, den) = 1`, `den` monic, zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn<E> {
    num: Vec<E>,
    den: Vec<E>,
}

impl<E> RatFn<E> {
    pub fn numerator(&self) -> &[E] {
        &self.num
    }
    pub fn denominator(&self) -> &[E] {
        &self.den
    }
}

/// The field `K(c)` of rational functions in one parameter over Q or F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunctionField<K: Field> {
    base: K,
    param: String,
}

impl<K: Field> RationalFunctionField<K> {
    pub fn new(base: K, param: impl Into<String>) -> Self {
        RationalFunctionField { base, param: param.into() }
    }

    pub fn base(&self) -> &K {
        &self.base
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    /// Canonical form of `num / den`.
    pub fn normalize(&self, num: Vec<K::Element>, den: Vec<K::Element>) -> Result<RatFn<K::Element>> {
        let k = &self.base;
        let num = dense::trim(k, num);
        let den = dense::trim(k, den);
        if den.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if num.is_empty() {
            return Ok(RatFn { num, den: vec![k.one()] });
        }
        if den.len() == 1 {
            let inv = k.inv(&den[0]).expect("nonzero constant");
            return Ok(RatFn { num: dense::scale(k, &num, &inv), den: vec![k.one()] });
        }
        let g = dense::gcd(k, &num, &den);
        let (num, den) = if dense::is_one(k, &g) {
            (num, den)
        } else {
            (
                dense::div_exact(k, &num, &g).expect("gcd divides"),
                dense::div_exact(k, &den, &g).expect("gcd divides"),
            )
        };
        let inv = k.inv(dense::lead(&den).unwrap()).unwrap();
        Ok(RatFn { num: dense::scale(k, &num, &inv), den: dense::scale(k, &den, &inv) })
    }

    fn canon(&self, num: Vec<K::Element>, den: Vec<K::Element>) -> RatFn<K::Element> {
        self.normalize(num, den).expect("nonzero denominator")
    }

    pub fn from_poly(&self, num: Vec<K::Element>) -> RatFn<K::Element> {
        RatFn { num: dense::trim(&self.base, num), den: vec![self.base.one()] }
    }

    pub fn from_base(&self, c: K::Element) -> RatFn<K::Element> {
        self.from_poly(vec![c])
    }

    /// The value as a base-field constant, when it is one.
    pub fn as_constant(&self, r: &RatFn<K::Element>) -> Option<K::Element> {
        (r.den.len() == 1 && r.num.len() <= 1)
            .then(|| r.num.first().cloned().unwrap_or_else(|| self.base.zero()))
    }

    /// Evaluates at `c = c0`; `None` when the denominator vanishes there.
    pub fn eval_at(&self, r: &RatFn<K::Element>, c0: &K::Element) -> Option<K::Element> {
        let k = &self.base;
        let d = dense::eval(k, &r.den, c0);
        k.div(&dense::eval(k, &r.num, c0), &d)
    }

    fn is_poly(r: &RatFn<K::Element>, k: &K) -> bool {
        r.den.len() == 1 && k.is_one(&r.den[0])
    }
}

impl<K: Field> Ring for RationalFunctionField<K> {
    type Element = RatFn<K::Element>;

    fn zero(&self) -> Self::Element {
        RatFn { num: Vec::new(), den: vec![self.base.one()] }
    }
    fn one(&self) -> Self::Element {
        self.from_base(self.base.one())
    }
    fn from_int(&self, n: &BigInt) -> Self::Element {
        self.from_base(self.base.from_int(n))
    }
    fn is_zero(&self, a: &Self::Element) -> bool {
        a.num.is_empty()
    }
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let k = &self.base;
        if a.den == b.den {
            let num = dense::add(k, &a.num, &b.num);
            if Self::is_poly(a, k) {
                return RatFn { num, den: a.den.clone() };
            }
            return self.canon(num, a.den.clone());
        }
        let num = dense::add(k, &dense::mul(k, &a.num, &b.den), &dense::mul(k, &b.num, &a.den));
        self.canon(num, dense::mul(k, &a.den, &b.den))
    }
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let k = &self.base;
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        if Self::is_poly(a, k) && Self::is_poly(b, k) {
            return RatFn { num: dense::mul(k, &a.num, &b.num), den: a.den.clone() };
        }
        // Cross-cancel; both denominators stay monic.
        let g1 = dense::gcd(k, &a.num, &b.den);
        let g2 = dense::gcd(k, &b.num, &a.den);
        let an = dense::div_exact(k, &a.num, &g1).unwrap();
        let bd = dense::div_exact(k, &b.den, &g1).unwrap();
        let bn = dense::div_exact(k, &b.num, &g2).unwrap();
        let ad = dense::div_exact(k, &a.den, &g2).unwrap();
        RatFn { num: dense::mul(k, &an, &bn), den: dense::mul(k, &ad, &bd) }
    }
    fn neg(&self, a: &Self::Element) -> Self::Element {
        RatFn { num: dense::neg(&self.base, &a.num), den: a.den.clone() }
    }
    fn inv(&self, a: &Self::Element) -> Option<Self::Element> {
        if a.num.is_empty() {
            return None;
        }
        Some(self.canon(a.den.clone(), a.num.clone()))
    }
    fn div_exact(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn parameter(&self) -> Option<&str> {
        Some(&self.param)
    }
    fn parameter_element(&self) -> Option<Self::Element> {
        Some(self.from_poly(vec![self.base.zero(), self.base.one()]))
    }
    fn format(&self, a: &Self::Element) -> String {
        let k = &self.base;
        let wrap = |v: &[K::Element]| {
            let s = dense::format(k, v, &self.param);
            if dense::term_count(k, v) > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if Self::is_poly(a, k) {
            return dense::format(k, &a.num, &self.param);
        }
        format!("{}/{}", wrap(&a.num), wrap(&a.den))
    }
    fn format_factor(&self, a: &Self::Element) -> String {
        let s = self.format(a);
        if Self::is_poly(a, &self.base) && dense::term_count(&self.base, &a.num) > 1 {
            format!("({s})")
        } else {
            s
        }
    }
    fn is_negative(&self, a: &Self::Element) -> bool {
        // Only a single-term numerator prints with a bare sign; otherwise
        // the numerator is parenthesized and carries its own signs.
        dense::term_count(&self.base, &a.num) == 1
            && self.base.is_negative(dense::lead(&a.num).unwrap())
    }
}

impl<K: Field> Field for RationalFunctionField<K> {
    fn sqrt(&self, a: &Self::Element) -> Option<Self::Element> {
        // In lowest terms with monic denominator, num/den is a square iff
        // both are polynomial squares (unique factorization in K[c]).
        let k = &self.base;
        let n = dense::sqrt(k, &a.num)?;
        let d = dense::sqrt(k, &a.den)?;
        Some(RatFn { num: n, den: d })
    }

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::function_field(self.base.descriptor(), &self.param)
            .expect("base is a prime or rational field")
    }
}
