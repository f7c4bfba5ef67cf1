use super::MultiPoly;
use crate::error::{Error, Result};
use crate::rings::Ring;

/// Fraction-free (Bareiss) determinant over a polynomial ring. Every
/// intermediate division is exact in an integral domain.
pub fn bareiss_determinant<R: Ring>(mut m: Vec<Vec<MultiPoly<R>>>, ring: &R) -> Result<MultiPoly<R>> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one(ring));
    }
    let mut negate = false;
    let mut prev = MultiPoly::one(ring);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(ring, &[]));
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = if num.is_zero() {
                    num
                } else {
                    num.div_exact(&prev)
                        .ok_or_else(|| Error::Internal("inexact Bareiss division".into()))?
                };
            }
        }
        prev = m[k][k].clone();
        // Column k below the pivot is eliminated.
        for row in m.iter_mut().skip(k + 1) {
            row[k] = MultiPoly::zero(ring, &[]);
        }
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Resultant from coefficient lists (ascending in the eliminated variable)
/// with explicit formal degrees.
fn sylvester_resultant<R: Ring>(
    ring: &R,
    f: &[MultiPoly<R>],
    df: usize,
    g: &[MultiPoly<R>],
    dg: usize,
) -> Result<MultiPoly<R>> {
    let zero = MultiPoly::zero(ring, &[]);
    let coeff = |v: &[MultiPoly<R>], k: usize| v.get(k).cloned().unwrap_or_else(|| zero.clone());
    if df == 0 {
        return Ok(coeff(f, 0).pow(dg as u32));
    }
    if dg == 0 {
        return Ok(coeff(g, 0).pow(df as u32));
    }
    let size = df + dg;
    let mut mat = vec![vec![zero.clone(); size]; size];
    for i in 0..dg {
        for k in 0..=df {
            mat[i][i + k] = coeff(f, df - k);
        }
    }
    for i in 0..df {
        for k in 0..=dg {
            mat[dg + i][i + k] = coeff(g, dg - k);
        }
    }
    bareiss_determinant(mat, ring)
}

/// Sylvester resultant `Res_var(f, g)`; the result lies in the ring of the
/// remaining variables. For `f` of degree m with roots α_i,
/// `Res(f, g) = lc(f)^deg(g) · ∏ g(α_i)`.
pub fn resultant<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>, var: &str) -> Result<MultiPoly<R>> {
    let ring = f.ring();
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::Undefined("resultant of two zero polynomials".into())),
        (true, false) | (false, true) => return Ok(MultiPoly::zero(ring, &[])),
        _ => {}
    }
    let df = f.degree_in(var).unwrap() as usize;
    let dg = g.degree_in(var).unwrap() as usize;
    sylvester_resultant(ring, &f.coefficients_in(var), df, &g.coefficients_in(var), dg)
}

/// `disc(g) = (-1)^(n(n-1)/2) · Res(g, g') / lc(g)`, with the derivative
/// taken at formal degree n-1 so the formula also holds when the
/// characteristic divides n.
pub fn discriminant<R: Ring>(g: &MultiPoly<R>, var: &str) -> Result<MultiPoly<R>> {
    let ring = g.ring();
    let n = g.degree_in(var).unwrap_or(0) as usize;
    if n < 2 {
        return Err(Error::Undefined(format!("discriminant needs degree >= 2 in {var}, found {n}")));
    }
    let coeffs = g.coefficients_in(var);
    let dcoeffs = g.derivative(var).coefficients_in(var);
    let res = sylvester_resultant(ring, &coeffs, n, &dcoeffs, n - 1)?;
    let lc = &coeffs[n];
    let q = res
        .div_exact(lc)
        .ok_or_else(|| Error::Internal("leading coefficient does not divide Res(g, g')".into()))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { q.neg() } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{rat, IntegerRing, RationalField};
    use num_bigint::BigInt;

    fn z(name: &str) -> MultiPoly<IntegerRing> {
        MultiPoly::var(&IntegerRing, name)
    }
    fn int(n: i64) -> MultiPoly<IntegerRing> {
        MultiPoly::constant(&IntegerRing, BigInt::from(n))
    }

    #[test]
    fn linear_pair() {
        // Sylvester matrix [[1,-1],[1,-2]] has determinant -1.
        let r = resultant(&(&z("x") - &int(1)), &(&z("x") - &int(2)), "x").unwrap();
        assert_eq!(r, int(-1));
    }

    #[test]
    fn constant_argument() {
        let f = &z("x").pow(3) + &int(2);
        assert_eq!(resultant(&f, &int(5), "x").unwrap(), int(125));
        assert!(resultant(&int(0), &int(0), "x").is_err());
    }

    #[test]
    fn quadratic_discriminant() {
        let g = &(&z("x").pow(2) + &(&z("a1") * &z("x"))) + &z("a2");
        let d = discriminant(&g, "x").unwrap();
        assert_eq!(d, &z("a1").pow(2) - &(&int(4) * &z("a2")));
        assert!(discriminant(&z("x"), "x").is_err());
    }

    #[test]
    fn cubic_discriminant_non_monic() {
        // disc(2x^3 - x) = -4*a^3*c... for a x^3 + c x: -4 a c^3 = -4*2*(-1)^3 = 8
        let f = RationalField;
        let g = MultiPoly::from_terms(&f, &["x"], [(rat(2, 1), vec![3]), (rat(-1, 1), vec![1])]);
        let d = discriminant(&g, "x").unwrap();
        assert_eq!(d.as_constant(), Some(rat(8, 1)));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(bareiss_determinant(m, &IntegerRing).unwrap(), int(-1));
    }
}
