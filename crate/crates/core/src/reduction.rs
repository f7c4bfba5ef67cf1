//! Reduction of a quintic extension to a specialization of the generic
//! polynomials, with an exact certificate.

use crate::error::{Error, Result};
use crate::galois::GroupLabel;
use crate::invariants::{absolute_invariants, covariant_forms, invariants, QuinticInvariants};
use crate::poly::{resultant, MultiPoly, UniPoly};
use crate::rings::{is_square, Field, RingDescriptor};
use crate::templates::{specialize, TemplateId};
use serde::Serialize;

/// Monic polynomial whose roots are `num(α)/den(α)` over the roots α of
/// `g`, as `Res_x(g(x), z·den(x) − num(x))` made monic in z. The result is
/// in the variable of `g`.
pub fn tschirnhausen_minpoly<F: Field>(g: &UniPoly<F>, num: &UniPoly<F>, den: &UniPoly<F>) -> Result<UniPoly<F>> {
    let field = g.field();
    let n = g.degree().ok_or_else(|| Error::Undefined("zero polynomial".into()))?;
    if den.is_zero() || g.gcd(den).degree() != Some(0) {
        return Err(Error::NotInvertible);
    }
    if n == 0 {
        return Ok(UniPoly::one(field, g.var()));
    }
    let var = g.var().to_string();
    let g = g.with_var("x");
    let t = MultiPoly::var(field, "z");
    let h = t.mul(&den.with_var("x").to_multi()).sub(&num.with_var("x").to_multi());
    let r = resultant(&g.to_multi(), &h, "x")?;
    let r = UniPoly::from_multi(&r, "z")?;
    if r.degree() != Some(n) {
        return Err(Error::Internal(format!("Tschirnhausen resultant has degree {:?}, expected {n}", r.degree())));
    }
    Ok(r.monic().with_var(&var))
}

/// Polynomial whose roots are the squares of the roots of `g`.
pub fn squared_roots<F: Field>(g: &UniPoly<F>) -> Result<UniPoly<F>> {
    let f = g.field();
    let x2 = UniPoly::new(f, g.var(), vec![f.zero(), f.zero(), f.one()]);
    tschirnhausen_minpoly(&g.monic(), &x2, &UniPoly::one(f, g.var()))
}

/// A preliminary transformation `α -> t(α)` from the fixed search schedule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Preliminary {
    /// Position in the schedule (0 is the identity).
    pub candidate: usize,
    /// `t(x)` in the text grammar.
    pub t: String,
}

/// Default number of candidates tried by [`preliminary_search`].
pub const SEARCH_BOUND: usize = 100;

/// The search schedule: x, x^2, then x^2 + j x and x^3 + j x for
/// j = 1, 2, ... (the remaining budget split evenly between the two
/// families). Over F_p the shifts j stop at p - 1.
pub fn search_schedule(characteristic: u64, bound: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0, 1], vec![0, 0, 1]];
    let per_family = bound.saturating_sub(2) / 2;
    let cap = if characteristic == 0 { per_family as u64 } else { (characteristic - 1).min(per_family as u64) };
    out.extend((1..=cap as i64).map(|j| vec![0, j, 1]));
    out.extend((1..=cap as i64).map(|j| vec![0, j, 0, 1]));
    out.truncate(bound);
    out
}

/// Whether `g` can be fed to the reduction directly.
fn admissible<F: Field>(g: &UniPoly<F>) -> Result<bool> {
    let f = g.field();
    if f.is_zero(&g.discriminant()?) {
        return Ok(false);
    }
    let inv = invariants(g)?;
    if f.is_zero(&inv.a) || f.is_zero(&inv.m) {
        return Ok(false);
    }
    let i = covariant_forms(g)?.i;
    Ok(!i.is_zero() && g.gcd(&i).degree() == Some(0))
}

/// First transform `g̃` in the schedule with A, M, disc nonzero and
/// gcd(g̃, i(g̃)) = 1.
pub fn preliminary_search<F: Field>(g: &UniPoly<F>, bound: usize) -> Result<(UniPoly<F>, Preliminary)> {
    let f = g.field();
    let g = g.monic();
    if g.degree() != Some(5) {
        return Err(Error::Degree { expected: 5, found: g.degree().unwrap_or(0) });
    }
    if f.is_zero(&g.discriminant()?) {
        return Err(Error::RepeatedRoots);
    }
    let one = UniPoly::one(f, g.var());
    for (k, t) in search_schedule(f.characteristic(), bound).into_iter().enumerate() {
        let t = UniPoly::from_i64(f, g.var(), &t);
        let h = if k == 0 { g.clone() } else { tschirnhausen_minpoly(&g, &t, &one)? };
        if admissible(&h)? {
            return Ok((h, Preliminary { candidate: k, t: t.to_string() }));
        }
    }
    Err(Error::SearchFailed(bound))
}

/// The u-element `3k/i² + 1` as numerator and denominator.
pub fn u_element<F: Field>(g: &UniPoly<F>) -> Result<(UniPoly<F>, UniPoly<F>)> {
    let c = covariant_forms(g)?;
    let i2 = c.i.mul(&c.i);
    let three = g.field().from_i64(3);
    Ok((c.k.scale(&three).add(&i2), i2))
}

/// The z-element `k/i²`.
pub fn z_element<F: Field>(g: &UniPoly<F>) -> Result<(UniPoly<F>, UniPoly<F>)> {
    let c = covariant_forms(g)?;
    let i2 = c.i.mul(&c.i);
    Ok((c.k, i2))
}

/// Audit trail of one reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate<F: Field> {
    pub input: UniPoly<F>,
    pub preliminary: Option<Preliminary>,
    pub transformed: UniPoly<F>,
    pub invariants: QuinticInvariants<F>,
    pub delta: F::Element,
    pub q: F::Element,
    pub a5_mode: bool,
    /// Square root of δ when `a5_mode`.
    pub d: Option<F::Element>,
    /// P2_A5 at (d, q) in A5 mode, else P2_S5 at (δ, q); monic, in u.
    pub specialized: UniPoly<F>,
    /// Minimal polynomial of the u-element of `transformed`, in u.
    pub u_minpoly: UniPoly<F>,
    pub minpoly_match: bool,
    /// disc(specialized) is a square.
    pub disc_square: bool,
    pub galois: Option<GroupLabel>,
}

/// Runs the full pipeline on a quintic (monicized first).
pub fn reduce_extension<F: Field>(g: &UniPoly<F>) -> Result<ReductionCertificate<F>> {
    let field = g.field();
    if g.degree() != Some(5) {
        return Err(Error::Degree { expected: 5, found: g.degree().unwrap_or(0) });
    }
    let input = g.monic();
    let (transformed, pre) = preliminary_search(&input, SEARCH_BOUND)?;
    let inv = invariants(&transformed)?;
    let abs = absolute_invariants(&inv)?;
    let d = is_square(field, &abs.delta);
    let specialized = match &d {
        Some(d) => specialize(TemplateId::P2A5, field, &[("d", d.clone()), ("q", abs.q.clone())], true)?,
        None => specialize(TemplateId::P2S5, field, &[("delta", abs.delta.clone()), ("q", abs.q.clone())], true)?,
    };
    let (num, den) = u_element(&transformed)?;
    let u_minpoly = tschirnhausen_minpoly(&transformed, &num, &den)?.with_var("u");
    let disc = specialized.discriminant()?;
    Ok(ReductionCertificate {
        preliminary: (pre.candidate != 0).then_some(pre),
        input,
        invariants: inv,
        delta: abs.delta,
        q: abs.q,
        a5_mode: d.is_some(),
        d,
        minpoly_match: u_minpoly == specialized,
        u_minpoly,
        disc_square: is_square(field, &disc).is_some(),
        specialized,
        transformed,
        galois: None,
    })
}

impl<F: Field> ReductionCertificate<F> {
    /// Recomputes the minimal polynomial from `transformed` and compares.
    pub fn recheck(&self) -> Result<bool> {
        let (num, den) = u_element(&self.transformed)?;
        let u = tschirnhausen_minpoly(&self.transformed, &num, &den)?.with_var("u");
        let f = self.input.field();
        let square_ok = match &self.d {
            Some(d) => f.mul(d, d) == self.delta,
            None => true,
        };
        Ok(u == self.specialized && square_ok && self.minpoly_match)
    }

    pub fn to_json(&self) -> CertificateJson {
        let f = self.input.field();
        let s = |e: &F::Element| f.format(e);
        CertificateJson {
            ring: f.descriptor(),
            input: self.input.to_string(),
            preliminary: self.preliminary.clone(),
            transformed: self.transformed.to_string(),
            invariants: InvariantsJson::new(&self.invariants),
            absolutes: AbsolutesJson { delta: s(&self.delta), q: s(&self.q) },
            a5_mode: self.a5_mode,
            d: self.d.as_ref().map(s),
            specialized: self.specialized.to_string(),
            u_minpoly: self.u_minpoly.to_string(),
            minpoly_match: self.minpoly_match,
            disc_square: self.disc_square,
            galois: self.galois.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsJson {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "Delta")]
    pub delta: String,
    #[serde(rename = "M")]
    pub m: String,
    pub disc_ok: bool,
}

impl InvariantsJson {
    pub fn new<F: Field>(inv: &QuinticInvariants<F>) -> Self {
        let s = |e: &F::Element| inv.field.format(e);
        InvariantsJson { a: s(&inv.a), b: s(&inv.b), c: s(&inv.c), delta: s(&inv.delta), m: s(&inv.m), disc_ok: inv.disc_ok }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbsolutesJson {
    pub delta: String,
    pub q: String,
}

/// JSON form of a [`ReductionCertificate`]; polynomials and field
/// elements are strings in the text grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub ring: RingDescriptor,
    pub input: String,
    pub preliminary: Option<Preliminary>,
    pub transformed: String,
    pub invariants: InvariantsJson,
    pub absolutes: AbsolutesJson,
    pub a5_mode: bool,
    pub d: Option<String>,
    pub specialized: String,
    pub u_minpoly: String,
    pub minpoly_match: bool,
    pub disc_square: bool,
    pub galois: Option<GroupLabel>,
}

/// True when `h` is the minimal polynomial of a generator of the stem
/// field of `g`: the identity, or the u- or z-element of `g` or of its
/// preliminary transform. Such an element has a separable minimal
/// polynomial of degree 5, so it generates the same field.
pub fn certify_same_field<F: Field>(g: &UniPoly<F>, h: &UniPoly<F>) -> bool {
    let f = g.field();
    if g.degree() != Some(5) || h.degree() != Some(5) {
        return false;
    }
    let h = h.monic().with_var("x");
    match h.discriminant() {
        Ok(d) if !f.is_zero(&d) => {}
        _ => return false,
    }
    let g = g.monic();
    let mut bases = vec![g.clone()];
    if let Ok((t, pre)) = preliminary_search(&g, SEARCH_BOUND) {
        if pre.candidate != 0 {
            bases.push(t);
        }
    }
    for b in &bases {
        let b = b.with_var("x");
        if b == h {
            return true;
        }
        for element in [u_element(&b), z_element(&b)] {
            if let Ok((num, den)) = element {
                if let Ok(m) = tschirnhausen_minpoly(&b, &num.with_var("x"), &den.with_var("x")) {
                    if m.with_var("x") == h {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formparse::{parse_element, parse_univariate};
    use crate::rings::{rat, RationalField};

    fn q(text: &str) -> UniPoly<RationalField> {
        parse_univariate(text, &RationalField, "x").unwrap()
    }

    #[test]
    fn identity_transform() {
        let g = q("x^5-2*x^4-10*x^3+23*x^2-6*x-4");
        let one = UniPoly::one(&RationalField, "x");
        assert_eq!(tschirnhausen_minpoly(&g, &UniPoly::x(&RationalField, "x"), &one).unwrap(), g);
    }

    #[test]
    fn squares_of_plus_minus_i() {
        assert_eq!(squared_roots(&q("x^2+1")).unwrap(), q("(x+1)^2"));
        assert_eq!(squared_roots(&q("x^5")).unwrap(), q("x^5"));
        assert_eq!(squared_roots(&q("x^5+25*x^4-x-1")).unwrap(), q("x^5-625*x^4-2*x^3+50*x^2+x-1"));
    }

    #[test]
    fn not_invertible() {
        let g = q("x^2-1");
        assert_eq!(tschirnhausen_minpoly(&g, &q("1"), &q("x-1")), Err(Error::NotInvertible));
    }

    #[test]
    fn schedule() {
        let s = search_schedule(0, SEARCH_BOUND);
        assert_eq!(s.len(), 100);
        assert_eq!(s[2], vec![0, 1, 1]);
        assert_eq!(s[51], vec![0, 1, 0, 1]);
        assert_eq!(search_schedule(11, SEARCH_BOUND).len(), 22);
    }

    #[test]
    fn first_example_reduces_in_a5_mode() {
        let cert = reduce_extension(&q("x^5-2*x^4-10*x^3+23*x^2-6*x-4")).unwrap();
        assert!(cert.preliminary.is_none());
        assert!(cert.a5_mode && cert.disc_square && cert.minpoly_match);
        assert_eq!(cert.d, Some(rat(5, 13)));
        let target = parse_univariate(
            "u^5+53018481246319976950/9299417089766560969*u^4+118978291635920447500/9299417089766560969*u^3\
             +131644992415533125000/9299417089766560969*u^2+71941446489050000000/9299417089766560969*u\
             +15555687740000000000/9299417089766560969",
            &RationalField,
            "u",
        )
        .unwrap();
        assert_eq!(cert.specialized, target);
        assert!(cert.recheck().unwrap());
        assert!(certify_same_field(&cert.input, &target));
        assert!(!certify_same_field(&cert.input, &q("x^5-2")));
        assert!(certify_same_field(&cert.input, &cert.input));
    }

    #[test]
    fn vanishing_a_needs_squares() {
        let cert = reduce_extension(&q("x^5+25*x^4-x-1")).unwrap();
        let pre = cert.preliminary.clone().unwrap();
        assert_eq!((pre.candidate, pre.t.as_str()), (1, "x^2"));
        assert_eq!(cert.delta, parse_element("-2554525/190992984", &RationalField).unwrap());
        let inv = &cert.invariants;
        assert_eq!(inv.a, parse_element("1247920128", &RationalField).unwrap());
        assert_eq!(inv.delta, parse_element("-833155976134656", &RationalField).unwrap());
        // The value 78714822656850046410962239488 sometimes quoted for M does
        // not reproduce the z minimal polynomial; this one does.
        assert_eq!(inv.m, parse_element("78631645938561680014193983488", &RationalField).unwrap());
        assert_eq!(cert.q, parse_element("232757801797248/75340974219911521", &RationalField).unwrap());
        assert!(!cert.a5_mode && cert.minpoly_match);
    }

    #[test]
    fn repeated_roots_rejected() {
        assert_eq!(preliminary_search(&q("x^5"), SEARCH_BOUND).unwrap_err(), Error::RepeatedRoots);
    }
}
