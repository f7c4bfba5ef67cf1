use super::MultiPoly;
use crate::error::{Error, Result};
use crate::rings::{dense, Field, Ring};
use std::fmt;

/// Dense univariate polynomial over a field, tagged with its variable name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Ring> {
    field: F,
    var: String,
    coeffs: Vec<F::Element>,
}

impl<F: Field> UniPoly<F> {
    /// Coefficients in ascending degree order.
    pub fn new(field: &F, var: &str, coeffs: Vec<F::Element>) -> Self {
        UniPoly { coeffs: dense::trim(field, coeffs), field: field.clone(), var: var.to_string() }
    }

    pub fn from_i64(field: &F, var: &str, coeffs: &[i64]) -> Self {
        Self::new(field, var, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F, var: &str) -> Self {
        Self::new(field, var, Vec::new())
    }

    pub fn one(field: &F, var: &str) -> Self {
        Self::new(field, var, vec![field.one()])
    }

    /// The variable itself.
    pub fn x(field: &F, var: &str) -> Self {
        Self::new(field, var, vec![field.zero(), field.one()])
    }

    pub fn constant(field: &F, var: &str, c: F::Element) -> Self {
        Self::new(field, var, vec![c])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[F::Element] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F::Element {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        dense::degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&F::Element> {
        dense::lead(&self.coeffs)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| self.field.is_one(c))
    }

    fn wrap(&self, coeffs: Vec<F::Element>) -> Self {
        UniPoly { field: self.field.clone(), var: self.var.clone(), coeffs }
    }

    pub fn with_var(&self, var: &str) -> Self {
        UniPoly { field: self.field.clone(), var: var.to_string(), coeffs: self.coeffs.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.wrap(dense::add(&self.field, &self.coeffs, &o.coeffs))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.wrap(dense::sub(&self.field, &self.coeffs, &o.coeffs))
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.wrap(dense::mul(&self.field, &self.coeffs, &o.coeffs))
    }

    pub fn neg(&self) -> Self {
        self.wrap(dense::neg(&self.field, &self.coeffs))
    }

    pub fn scale(&self, c: &F::Element) -> Self {
        self.wrap(dense::scale(&self.field, &self.coeffs, c))
    }

    pub fn pow(&self, e: u32) -> Self {
        self.wrap(dense::pow(&self.field, &self.coeffs, e))
    }

    pub fn derivative(&self) -> Self {
        self.wrap(dense::derivative(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: &F::Element) -> F::Element {
        dense::eval(&self.field, &self.coeffs, x)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.wrap(dense::compose(&self.field, &self.coeffs, &inner.coeffs))
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let (q, r) = dense::divrem(&self.field, &self.coeffs, &d.coeffs);
        (self.wrap(q), self.wrap(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        dense::div_exact(&self.field, &self.coeffs, &d.coeffs).map(|q| self.wrap(q))
    }

    pub fn monic(&self) -> Self {
        self.wrap(dense::monic(&self.field, &self.coeffs))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        self.wrap(dense::gcd(&self.field, &self.coeffs, &o.coeffs))
    }

    /// Inverse of `self` modulo `m`, when `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = dense::xgcd(&self.field, &self.coeffs, &m.coeffs);
        dense::is_one(&self.field, &g).then(|| self.wrap(s).rem(m))
    }

    /// Square root in the polynomial ring (see [`dense::sqrt`]).
    pub fn sqrt(&self) -> Option<Self> {
        dense::sqrt(&self.field, &self.coeffs).map(|q| self.wrap(q))
    }

    pub fn is_squarefree(&self) -> bool {
        let g = self.gcd(&self.derivative());
        g.degree() == Some(0)
    }

    pub fn to_multi(&self) -> MultiPoly<F> {
        let var = self.var.as_str();
        MultiPoly::from_terms(
            &self.field,
            &[var],
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !self.field.is_zero(c))
                .map(|(k, c)| (c.clone(), vec![k as u32])),
        )
    }

    /// Converts a polynomial involving at most `var` into dense form.
    pub fn from_multi(p: &MultiPoly<F>, var: &str) -> Result<Self> {
        if let Some(other) = p.used_vars().into_iter().find(|v| v != var) {
            return Err(Error::WrongRing(format!("expected a polynomial in {var} only, found {other}")));
        }
        let coeffs = p
            .coefficients_in(var)
            .into_iter()
            .map(|c| c.as_constant().expect("only var occurs"))
            .collect();
        Ok(Self::new(p.ring(), var, coeffs))
    }

    /// Discriminant `(-1)^(n(n-1)/2) Res(g, g') / lc(g)`.
    pub fn discriminant(&self) -> Result<F::Element> {
        let d = super::discriminant(&self.to_multi(), &self.var)?;
        Ok(d.as_constant().expect("univariate discriminant is a constant"))
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&dense::format(&self.field, &self.coeffs, &self.var))
    }
}
