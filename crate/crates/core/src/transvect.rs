//! Cayley's Ω-process and transvectants of binary forms.

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rings::Ring;

const XY: [&str; 2] = ["x", "y"];
const SPLIT: [&str; 4] = ["x1", "y1", "x2", "y2"];

/// A form homogeneous of degree `order` in `x, y`. The coefficients may
/// involve other symbols (a0..a5 for the universal quintic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<R: Ring> {
    order: u32,
    poly: MultiPoly<R>,
}

impl<R: Ring> BinaryForm<R> {
    /// Checks homogeneity in `x, y`. The zero polynomial has no intrinsic
    /// order; use [`BinaryForm::zero`] for it.
    pub fn new(poly: MultiPoly<R>) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::Undefined("the zero form has no order; use BinaryForm::zero".into()));
        }
        let order = poly
            .homogeneous_degree(&XY)
            .ok_or_else(|| Error::InvalidParameter(format!("{poly} is not homogeneous in x, y")))?;
        Ok(BinaryForm { order, poly })
    }

    /// Like [`BinaryForm::new`] but also checks the expected order.
    pub fn with_order(poly: MultiPoly<R>, order: u32) -> Result<Self> {
        if poly.is_zero() {
            return Ok(Self::zero(poly.ring(), order));
        }
        let f = Self::new(poly)?;
        if f.order != order {
            return Err(Error::Degree { expected: order as usize, found: f.order as usize });
        }
        Ok(f)
    }

    pub fn zero(ring: &R, order: u32) -> Self {
        BinaryForm { order, poly: MultiPoly::zero(ring, &XY) }
    }

    /// Homogenizes `c0 x^n + c1 x^(n-1) + ... + cn` (coefficients listed from
    /// the top) into `c0 x^n + c1 x^(n-1) y + ... + cn y^n`.
    pub fn from_coefficients(ring: &R, coeffs: &[R::Element]) -> Self {
        let n = coeffs.len().saturating_sub(1) as u32;
        let poly = MultiPoly::from_terms(
            ring,
            &XY,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !ring.is_zero(c))
                .map(|(k, c)| (c.clone(), vec![n - k as u32, k as u32])),
        );
        BinaryForm { order: n, poly }
    }

    /// The quintic with indeterminate coefficients a0..a5.
    pub fn generic(ring: &R, order: u32) -> Self {
        let mut poly = MultiPoly::zero(ring, &XY);
        for k in 0..=order {
            let a = MultiPoly::var(ring, &format!("a{k}"));
            let xy = MultiPoly::from_terms(ring, &XY, [(ring.one(), vec![order - k, k])]);
            poly = poly.add(&a.mul(&xy));
        }
        BinaryForm { order, poly }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn poly(&self) -> &MultiPoly<R> {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly<R> {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficients of `x^n, x^(n-1) y, ..., y^n`.
    pub fn coefficients(&self) -> Vec<MultiPoly<R>> {
        let by_y = self.poly.coefficients_in("y");
        (0..=self.order as usize)
            .map(|k| match by_y.get(k) {
                Some(c) => {
                    let cx = c.coefficients_in("x");
                    cx.get(self.order as usize - k).cloned().unwrap_or_else(|| MultiPoly::zero(self.poly.ring(), &[]))
                }
                None => MultiPoly::zero(self.poly.ring(), &[]),
            })
            .collect()
    }

    /// The polynomial in `x` obtained by setting `y = 1`.
    pub fn dehomogenize(&self) -> MultiPoly<R> {
        self.poly.substitute("y", &MultiPoly::one(self.poly.ring()))
    }

    /// `M(f)`: substitutes `x -> a x + b y`, `y -> c x + d y` simultaneously.
    pub fn act(&self, m: [[R::Element; 2]; 2]) -> Self {
        let ring = self.poly.ring();
        let lin = |p: &R::Element, q: &R::Element| {
            MultiPoly::from_terms(ring, &XY, [(p.clone(), vec![1, 0]), (q.clone(), vec![0, 1])])
        };
        let tmp = self.poly.rename("x", "x1").rename("y", "y1");
        let poly = tmp.substitute("x1", &lin(&m[0][0], &m[0][1])).substitute("y1", &lin(&m[1][0], &m[1][1]));
        BinaryForm { order: self.order, poly }
    }

    pub fn scale(&self, c: &R::Element) -> Self {
        BinaryForm { order: self.order, poly: self.poly.scale(c) }
    }

    pub fn neg(&self) -> Self {
        BinaryForm { order: self.order, poly: self.poly.neg() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::Degree { expected: self.order as usize, found: other.order as usize });
        }
        Ok(BinaryForm { order: self.order, poly: self.poly.add(&other.poly) })
    }
}

/// The product `f(x1, y1) g(x2, y2)` and its images under Ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaWorkspace<R: Ring> {
    w: MultiPoly<R>,
}

impl<R: Ring> OmegaWorkspace<R> {
    pub fn new(w: MultiPoly<R>) -> Result<Self> {
        if let Some(v) = w.used_vars().into_iter().find(|v| XY.contains(&v.as_str())) {
            return Err(Error::InvalidParameter(format!("Ω workspace must not contain {v}")));
        }
        Ok(OmegaWorkspace { w })
    }

    /// Steps 1 and 2: split the variables and multiply.
    pub fn split(f: &BinaryForm<R>, g: &BinaryForm<R>) -> Self {
        let f1 = f.poly.rename("x", "x1").rename("y", "y1");
        let g2 = g.poly.rename("x", "x2").rename("y", "y2");
        OmegaWorkspace { w: f1.mul(&g2) }
    }

    pub fn poly(&self) -> &MultiPoly<R> {
        &self.w
    }

    /// `w -> ∂²w/∂x1∂y2 − ∂²w/∂x2∂y1`.
    pub fn omega_apply(&self) -> Self {
        let a = self.w.derivative("x1").derivative("y2");
        let b = self.w.derivative("x2").derivative("y1");
        OmegaWorkspace { w: a.sub(&b) }
    }

    /// Step 4: `x1, x2 -> x` and `y1, y2 -> y`.
    pub fn collapse(&self) -> MultiPoly<R> {
        let p = self.w.rename("x1", "x").rename("x2", "x").rename("y1", "y").rename("y2", "y");
        let mut vars: Vec<String> = p.vars().iter().filter(|v| !SPLIT.contains(&v.as_str())).cloned().collect();
        vars.extend(XY.iter().map(|s| s.to_string()));
        p.with_vars(&vars)
    }
}

/// Result of [`transvectant`]; `exceeded` is set when `m` is larger than an
/// order, in which case the form is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvectant<R: Ring> {
    pub form: BinaryForm<R>,
    pub exceeded: bool,
}

/// `(f, g)^m` by the literal Ω-process.
pub fn transvectant<R: Ring>(f: &BinaryForm<R>, g: &BinaryForm<R>, m: u32) -> Transvectant<R> {
    let ring = f.poly.ring();
    let exceeded = m > f.order.min(g.order);
    if exceeded {
        return Transvectant { form: BinaryForm::zero(ring, 0), exceeded };
    }
    let order = f.order + g.order - 2 * m;
    let mut w = OmegaWorkspace::split(f, g);
    for _ in 0..m {
        if w.w.is_zero() {
            break;
        }
        w = w.omega_apply();
    }
    Transvectant { form: BinaryForm { order, poly: w.collapse() }, exceeded }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::rings::IntegerRing;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn v(name: &str) -> MultiPoly<IntegerRing> {
        MultiPoly::var(&IntegerRing, name)
    }
    fn int(n: i64) -> MultiPoly<IntegerRing> {
        MultiPoly::constant(&IntegerRing, BigInt::from(n))
    }
    fn xy(i: u32, j: u32) -> MultiPoly<IntegerRing> {
        MultiPoly::from_terms(&IntegerRing, &XY, [(BigInt::from(1), vec![i, j])])
    }

    fn binomial(n: u32, k: u32) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
    }

    /// Σ_k (-1)^k C(m,k) ∂^m f/∂x^(m-k)∂y^k · ∂^m g/∂x^k∂y^(m-k).
    fn closed_form(f: &BinaryForm<IntegerRing>, g: &BinaryForm<IntegerRing>, m: u32) -> MultiPoly<IntegerRing> {
        let d = |p: &MultiPoly<IntegerRing>, nx: u32, ny: u32| {
            let mut q = p.clone();
            for _ in 0..nx {
                q = q.derivative("x");
            }
            for _ in 0..ny {
                q = q.derivative("y");
            }
            q
        };
        let mut acc = MultiPoly::zero(&IntegerRing, &XY);
        for k in 0..=m {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let term = d(f.poly(), m - k, k).mul(&d(g.poly(), k, m - k));
            acc = acc.add(&term.scale(&BigInt::from(sign * binomial(m, k))));
        }
        acc
    }

    fn quadratic() -> BinaryForm<IntegerRing> {
        let p = &(&(&v("a") * &xy(2, 0)) + &(&v("b") * &xy(1, 1))) + &(&v("c") * &xy(0, 2));
        BinaryForm::new(p).unwrap()
    }

    #[test]
    fn omega_on_monomials() {
        let w = OmegaWorkspace::new(&v("x1") * &v("y2")).unwrap();
        assert_eq!(w.omega_apply().poly(), &int(1));
        let w = OmegaWorkspace::new(&v("y1") * &v("x2")).unwrap();
        assert_eq!(w.omega_apply().poly(), &int(-1));
        assert!(OmegaWorkspace::new(v("x")).is_err());
    }

    #[test]
    fn quadratic_discriminant_twice() {
        let q = quadratic();
        let w = OmegaWorkspace::split(&q, &q).omega_apply().omega_apply();
        let expect = (&(&int(4) * &(&v("a") * &v("c"))) - &v("b").pow(2)).scale(&BigInt::from(2));
        assert_eq!(w.poly(), &expect);
        let t = transvectant(&q, &q, 2);
        assert_eq!(t.form.order(), 0);
        assert_eq!(t.form.poly(), &expect);
        // The closed form has constant factor 1 relative to the Ω-process.
        assert_eq!(closed_form(&q, &q, 2), expect);
    }

    #[test]
    fn zeroth_transvectant_is_product() {
        let f = BinaryForm::generic(&IntegerRing, 5);
        let q = quadratic();
        assert_eq!(transvectant(&f, &q, 0).form.poly(), &f.poly().mul(q.poly()));
    }

    #[test]
    fn odd_self_transvectants_vanish() {
        let f = BinaryForm::generic(&IntegerRing, 5);
        for m in [1, 3, 5] {
            let t = transvectant(&f, &f, m);
            assert!(t.form.is_zero() && !t.exceeded);
            assert_eq!(t.form.order(), 10 - 2 * m);
        }
        let t = transvectant(&f, &quadratic(), 3);
        assert!(t.exceeded && t.form.is_zero());
    }

    #[test]
    fn generic_quintic_matches_closed_form() {
        let f = BinaryForm::generic(&IntegerRing, 5);
        for m in [2, 4] {
            assert_eq!(transvectant(&f, &f, m).form.poly(), &closed_form(&f, &f, m));
        }
    }

    #[test]
    fn act_is_simultaneous() {
        let f = BinaryForm::new(xy(1, 0)).unwrap();
        let one = BigInt::from(1);
        let zero = BigInt::from(0);
        // Swap-like unimodular map x -> y, y -> -x.
        let g = f.act([[zero.clone(), one.clone()], [-one.clone(), zero.clone()]]);
        assert_eq!(g.poly(), &xy(0, 1));
        let h = BinaryForm::new(&xy(1, 0) + &xy(0, 1)).unwrap().act([[zero.clone(), one.clone()], [-one, zero]]);
        assert_eq!(h.poly(), &(&xy(0, 1) - &xy(1, 0)));
    }

    fn int_form(order: u32) -> impl Strategy<Value = BinaryForm<IntegerRing>> {
        proptest::collection::vec(-9i64..=9, order as usize + 1).prop_map(|cs| {
            let cs: Vec<BigInt> = cs.into_iter().map(BigInt::from).collect();
            BinaryForm::from_coefficients(&IntegerRing, &cs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bilinear(f in int_form(4), g in int_form(4), h in int_form(3), a in -5i64..5, b in -5i64..5, m in 0u32..4) {
            let lhs_form = f.scale(&BigInt::from(a)).add(&g.scale(&BigInt::from(b))).unwrap();
            let lhs = transvectant(&lhs_form, &h, m).form;
            let rhs = transvectant(&f, &h, m).form.poly().scale(&BigInt::from(a))
                .add(&transvectant(&g, &h, m).form.poly().scale(&BigInt::from(b)));
            prop_assert_eq!(lhs.poly(), &rhs);
        }

        #[test]
        fn symmetry(f in int_form(5), g in int_form(4), m in 0u32..5) {
            let fg = transvectant(&f, &g, m).form;
            let gf = transvectant(&g, &f, m).form;
            let expect = if m % 2 == 0 { gf.poly().clone() } else { gf.poly().neg() };
            prop_assert_eq!(fg.poly(), &expect);
            prop_assert_eq!(fg.order(), 9 - 2 * m);
        }

        #[test]
        fn matches_closed_form(f in int_form(5), g in int_form(5), m in 0u32..6) {
            let t = transvectant(&f, &g, m).form;
            prop_assert_eq!(t.poly(), &closed_form(&f, &g, m));
        }

        #[test]
        fn equivariant(f in int_form(5), a in -4i64..=4, b in -4i64..=4, c in -4i64..=4) {
            // [[1, a], [0, 1]] · [[1, 0], [b, 1]] · [[1, c], [0, 1]] has determinant 1.
            let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
            let one = BigInt::from(1);
            let m = [[&one + &a * &b, &a + &c * (&one + &a * &b)], [b.clone(), &b * &c + &one]];
            let i = transvectant(&f, &f, 4).form;
            let lhs = transvectant(&f.act(m.clone()), &f.act(m.clone()), 4).form;
            let rhs = i.act(m);
            prop_assert_eq!(lhs.poly(), rhs.poly());
        }
    }
}
