use super::sort_symbols;
use crate::error::{Error, Result};
use crate::rings::{IntegerRing, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in named variables with coefficients in `R`.
///
/// Variables are kept in the global symbol order and terms in
/// graded-lexicographic order; no stored coefficient is zero. Two
/// polynomials compare equal when they agree after aligning their
/// variable lists, so unused declared variables do not matter.
#[derive(Clone, Debug)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, R::Element>,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: &R, vars: &[&str]) -> Self {
        let mut v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        sort_symbols(&mut v);
        MultiPoly { ring: ring.clone(), vars: v, terms: BTreeMap::new() }
    }

    pub fn constant(ring: &R, c: R::Element) -> Self {
        let mut p = Self::zero(ring, &[]);
        if !ring.is_zero(&c) {
            p.terms.insert(Monomial::one(0), c);
        }
        p
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn var(ring: &R, name: &str) -> Self {
        let mut p = Self::zero(ring, &[name]);
        p.terms.insert(Monomial(vec![1]), ring.one());
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; exponents
    /// are given in the order of `vars` as passed.
    pub fn from_terms(ring: &R, vars: &[&str], terms: impl IntoIterator<Item = (R::Element, Vec<u32>)>) -> Self {
        let given: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let mut sorted = given.clone();
        sort_symbols(&mut sorted);
        let perm: Vec<usize> = sorted.iter().map(|v| given.iter().position(|g| g == v).unwrap()).collect();
        let mut p = MultiPoly { ring: ring.clone(), vars: sorted, terms: BTreeMap::new() };
        for (c, e) in terms {
            assert_eq!(e.len(), given.len(), "exponent vector length mismatch");
            let m = Monomial(perm.iter().map(|&i| e[i]).collect());
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Element)> {
        self.terms.iter().rev()
    }

    /// The constant value, if the polynomial involves no variable.
    pub fn as_constant(&self) -> Option<R::Element> {
        match self.terms.len() {
            0 => Some(self.ring.zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R::Element)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of the monomial with the given exponents (unlisted
    /// variables have exponent 0).
    pub fn coefficient(&self, exps: &[(&str, u32)]) -> R::Element {
        let mut e = vec![0u32; self.vars.len()];
        for (name, k) in exps {
            match self.var_index(name) {
                Some(i) => e[i] = *k,
                None if *k > 0 => return self.ring.zero(),
                None => {}
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Variables that actually occur in some term.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn add_term(&mut self, m: Monomial, c: R::Element) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = self.ring.add(existing, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Re-expresses the polynomial over a (sorted) superset of its variables.
    pub fn with_vars(&self, vars: &[String]) -> Self {
        let mut target = vars.to_vec();
        sort_symbols(&mut target);
        if target == self.vars {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| target.iter().position(|t| t == v)).collect();
        let mut out = MultiPoly { ring: self.ring.clone(), vars: target.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].expect("with_vars must not drop a used variable");
                e[j] = k;
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    fn merged_vars(&self, other: &Self) -> Vec<String> {
        let mut v = self.vars.clone();
        v.extend(other.vars.iter().cloned());
        sort_symbols(&mut v);
        v
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let v = self.merged_vars(other);
        (self.with_vars(&v), other.with_vars(&v))
    }

    /// Drops declared variables that do not occur.
    pub fn trimmed(&self) -> Self {
        let used = self.used_vars();
        let idx: Vec<usize> = used.iter().map(|u| self.var_index(u).unwrap()).collect();
        let terms =
            self.terms.iter().map(|(m, c)| (Monomial(idx.iter().map(|&i| m.0[i]).collect()), c.clone())).collect();
        MultiPoly { ring: self.ring.clone(), vars: used, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.ring.neg(c))).collect();
        MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Element) -> Self {
        if self.ring.is_zero(c) {
            return MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), self.ring.mul(x, c)))
            .filter(|(_, x)| !self.ring.is_zero(x))
            .collect();
        MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let ring = &self.ring;
        let mut acc: HashMap<Monomial, R::Element> = HashMap::with_capacity((a.terms.len() * b.terms.len()).min(1 << 16));
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.mul(mb);
                let prod = ring.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = ring.add(e, &prod),
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        MultiPoly { ring: ring.clone(), vars: a.vars, terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.ring).with_vars(&self.vars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative; zero when `var` does not occur.
    pub fn derivative(&self, var: &str) -> Self {
        let mut out = MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        let Some(i) = self.var_index(var) else {
            return out;
        };
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.clone();
            e.0[i] -= 1;
            out.add_term(e, self.ring.mul(c, &self.ring.from_i64(k as i64)));
        }
        out
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Common degree of every term in the given variables, or `None` if the
    /// polynomial is not homogeneous in them (or is zero).
    pub fn homogeneous_degree(&self, subset: &[&str]) -> Option<u32> {
        let idx: Vec<usize> = subset.iter().filter_map(|s| self.var_index(s)).collect();
        let mut degs = self.terms.keys().map(|m| idx.iter().map(|&i| m.0[i]).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Coefficients of `var^0, var^1, ...` as polynomials in the other variables.
    pub fn coefficients_in(&self, var: &str) -> Vec<Self> {
        let n = self.degree_in(var).map_or(0, |d| d as usize + 1);
        let mut out = vec![MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms: BTreeMap::new() }; n];
        let i = self.var_index(var);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = match i {
                Some(i) => std::mem::take(&mut e.0[i]) as usize,
                None => 0,
            };
            out[k].terms.insert(e, c.clone());
        }
        out
    }

    /// Replaces `var` by `replacement` (a homomorphism of polynomial rings).
    pub fn substitute(&self, var: &str, replacement: &Self) -> Self {
        let coeffs = self.coefficients_in(var);
        let mut result = MultiPoly { ring: self.ring.clone(), vars: self.merged_vars(replacement), terms: BTreeMap::new() };
        let mut rpow = Self::one(&self.ring);
        for (k, ck) in coeffs.iter().enumerate() {
            if k > 0 {
                rpow = rpow.mul(replacement);
            }
            if !ck.is_zero() {
                result = result.add(&ck.mul(&rpow));
            }
        }
        result
    }

    /// Substitution that first checks `var` is a declared variable.
    pub fn substitute_checked(&self, var: &str, replacement: &Self) -> Result<Self> {
        if self.var_index(var).is_none() {
            return Err(Error::UnknownSymbol(var.to_string()));
        }
        Ok(self.substitute(var, replacement))
    }

    /// Renames `from` to `to`, merging exponents if `to` is already present.
    pub fn rename(&self, from: &str, to: &str) -> Self {
        let Some(i) = self.var_index(from) else {
            return self.clone();
        };
        let mut vars = self.vars.clone();
        vars.push(to.to_string());
        let lifted = self.with_vars(&vars);
        let i = lifted.var_index(from).unwrap_or(i);
        let j = lifted.var_index(to).unwrap();
        let mut out = MultiPoly { ring: self.ring.clone(), vars: lifted.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &lifted.terms {
            let mut e = m.clone();
            let k = std::mem::take(&mut e.0[i]);
            e.0[j] += k;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Substitutes constant values for several variables at once.
    pub fn evaluate(&self, values: &[(&str, R::Element)]) -> Self {
        self.specialize_into(&self.ring, |c| c.clone(), values)
    }

    /// Maps coefficients into another ring and substitutes constants (in the
    /// target ring) for some variables. The result keeps the other variables.
    pub fn specialize_into<S: Ring>(
        &self,
        target: &S,
        map: impl Fn(&R::Element) -> S::Element,
        values: &[(&str, S::Element)],
    ) -> MultiPoly<S> {
        let assigned: Vec<Option<&S::Element>> =
            self.vars.iter().map(|v| values.iter().find(|(n, _)| *n == v.as_str()).map(|(_, x)| x)).collect();
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| assigned[i].is_none()).collect();
        let new_vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        // Power tables per assigned variable.
        let mut powers: Vec<Vec<S::Element>> = vec![Vec::new(); self.vars.len()];
        for (i, val) in assigned.iter().enumerate() {
            if let Some(val) = val {
                let maxe = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
                let mut tbl = Vec::with_capacity(maxe + 1);
                tbl.push(target.one());
                for k in 1..=maxe {
                    let next = target.mul(&tbl[k - 1], val);
                    tbl.push(next);
                }
                powers[i] = tbl;
            }
        }
        let mut acc: HashMap<Monomial, S::Element> = HashMap::new();
        for (m, c) in &self.terms {
            let mut coef = map(c);
            for (i, val) in assigned.iter().enumerate() {
                if val.is_some() && m.0[i] > 0 && !target.is_zero(&coef) {
                    coef = target.mul(&coef, &powers[i][m.0[i] as usize]);
                }
            }
            if target.is_zero(&coef) {
                continue;
            }
            let e = Monomial(keep.iter().map(|&i| m.0[i]).collect());
            match acc.get_mut(&e) {
                Some(x) => *x = target.add(x, &coef),
                None => {
                    acc.insert(e, coef);
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !target.is_zero(c)).collect();
        MultiPoly { ring: target.clone(), vars: new_vars, terms }
    }

    pub fn map_ring<S: Ring>(&self, target: &S, map: impl Fn(&R::Element) -> S::Element) -> MultiPoly<S> {
        self.specialize_into(target, map, &[])
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (or a coefficient division is inexact).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (mut rem, d) = self.aligned(divisor);
        let (lm_d, lc_d) = {
            let (m, c) = d.leading_term()?;
            (m.clone(), c.clone())
        };
        let mut quot = MultiPoly { ring: self.ring.clone(), vars: rem.vars.clone(), terms: BTreeMap::new() };
        while let Some((lm_r, lc_r)) = rem.leading_term() {
            if !lm_d.divides(lm_r) {
                return None;
            }
            let c = self.ring.div_exact(lc_r, &lc_d)?;
            let m = lm_r.div(&lm_d);
            for (md, cd) in &d.terms {
                let prod = self.ring.neg(&self.ring.mul(&c, cd));
                rem.add_term(m.mul(md), prod);
            }
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Divides every coefficient by `c`, requiring exactness.
    pub fn div_exact_scalar(&self, c: &R::Element) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            terms.insert(m.clone(), self.ring.div_exact(x, c)?);
        }
        Some(MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms })
    }
}

impl MultiPoly<IntegerRing> {
    /// Gcd of all integer coefficients; `content(0) = 0`.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Division by an integer constant that must be exact.
    pub fn div_integer(&self, d: i64) -> Result<Self> {
        self.div_exact_scalar(&BigInt::from(d)).ok_or_else(|| {
            Error::Construction(format!("division by {d} is not exact (content {})", self.content()))
        })
    }
}

impl MultiPoly<crate::rings::RationalField> {
    /// Content of a polynomial whose rational coefficients are all integers.
    pub fn integer_content(&self) -> Result<BigInt> {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            if !c.is_integer() {
                return Err(Error::WrongRing(format!("coefficient {c} is not an integer")));
            }
            g = g.gcd(c.numer());
        }
        Ok(g.abs())
    }
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl<R: Ring> Eq for MultiPoly<R> {}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::formparse::format_poly(self))
    }
}

impl<R: Ring> MultiPoly<R> {
    /// Text for one monomial, e.g. `x^2*a0`; empty for the unit monomial.
    pub(crate) fn monomial_text(&self, m: &Monomial) -> String {
        m.0.iter()
            .zip(&self.vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<R: Ring> $tr<&MultiPoly<R>> for &MultiPoly<R> {
            type Output = MultiPoly<R>;
            fn $method(self, rhs: &MultiPoly<R>) -> MultiPoly<R> {
                MultiPoly::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<R: Ring> Neg for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        MultiPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::IntegerRing;

    fn z(name: &str) -> MultiPoly<IntegerRing> {
        MultiPoly::var(&IntegerRing, name)
    }

    fn int(n: i64) -> MultiPoly<IntegerRing> {
        MultiPoly::constant(&IntegerRing, BigInt::from(n))
    }

    #[test]
    fn vars_follow_global_order() {
        let p = &z("a0") + &z("x");
        assert_eq!(p.vars(), &["x".to_string(), "a0".to_string()]);
        let q = &z("c") + &z("D");
        assert_eq!(q.vars(), &["D".to_string(), "c".to_string()]);
    }

    #[test]
    fn content_gcd() {
        let p = &(&int(6) * &z("x").pow(2)) + &(&int(10) * &(&z("x") * &z("y")));
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(MultiPoly::zero(&IntegerRing, &["x"]).content(), BigInt::from(0));
    }

    #[test]
    fn dehomogenize_by_substitution() {
        let (x, y) = (z("x"), z("y"));
        let mut f = MultiPoly::zero(&IntegerRing, &[]);
        for k in 0..6u32 {
            f = &f + &(&z(&format!("a{k}")) * &(&x.pow(5 - k) * &y.pow(k)));
        }
        let g = f.substitute("y", &int(1));
        let mut expect = MultiPoly::zero(&IntegerRing, &[]);
        for k in 0..6u32 {
            expect = &expect + &(&z(&format!("a{k}")) * &x.pow(5 - k));
        }
        assert_eq!(g, expect);
        assert_eq!(f.substitute("x", &x), f);
    }

    #[test]
    fn unknown_symbol_in_checked_substitution() {
        let p = z("x");
        assert!(matches!(p.substitute_checked("w", &int(1)), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn exact_multivariate_division() {
        let a = &(&z("x") + &z("y")) * &(&z("x") - &int(3));
        let b = &z("x") - &int(3);
        assert_eq!(a.div_exact(&b), Some(&z("x") + &z("y")));
        assert_eq!(z("x").div_exact(&z("y")), None);
        assert!(int(6).div_integer(4).is_err());
    }

    #[test]
    fn rename_merges() {
        let p = &z("x1") * &z("x2");
        let q = p.rename("x1", "x").rename("x2", "x");
        assert_eq!(q, z("x").pow(2));
    }

    #[test]
    fn homogeneity() {
        let p = &(&z("x") * &z("a0")) + &(&z("y") * &z("a1"));
        assert_eq!(p.homogeneous_degree(&["x", "y"]), Some(1));
        let q = &p + &int(1);
        assert_eq!(q.homogeneous_degree(&["x", "y"]), None);
    }
}
