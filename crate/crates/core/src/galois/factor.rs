//! Factorization over prime fields: squarefree decomposition, distinct-
//! degree and equal-degree (Cantor-Zassenhaus) splitting.

use crate::poly::UniPoly;
use crate::rings::{dense, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Poly = UniPoly<PrimeField>;

fn x_poly(f: &Poly) -> Poly {
    UniPoly::x(f.field(), f.var())
}

/// `a^p mod m`.
fn frobenius(a: &Poly, m: &Poly) -> Poly {
    let field = a.field();
    let p = field.modulus() as u128;
    UniPoly::new(field, a.var(), dense::powmod(field, a.coeffs(), p, m.coeffs()))
}

/// `f^(1/p)` for `f` with `f' = 0` (only exponents divisible by p occur).
fn pth_root(f: &Poly) -> Poly {
    let p = f.field().modulus() as usize;
    let coeffs = f.coeffs().iter().step_by(p).cloned().collect();
    UniPoly::new(f.field(), f.var(), coeffs)
}

/// Monic squarefree parts with multiplicities; the product of
/// `part^mult` is `monic(f)`.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    sff(&f.monic(), 1, &mut out);
    out.sort_by_key(|(g, m)| (*m, g.degree()));
    out
}

fn sff(f: &Poly, scale: u32, out: &mut Vec<(Poly, u32)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        sff(&pth_root(f), scale * f.field().modulus() as u32, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c).unwrap();
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).unwrap();
        if fac.degree() != Some(0) {
            out.push((fac.monic(), i * scale));
        }
        w = y;
        c = c.div_exact(&w).unwrap();
        i += 1;
    }
    if c.degree() != Some(0) {
        sff(&pth_root(&c), scale * f.field().modulus() as u32, out);
    }
}

pub fn is_squarefree(f: &Poly) -> bool {
    f.degree().is_some() && f.gcd(&f.derivative()).degree() == Some(0)
}

/// For monic squarefree `f`: pairs `(g_d, d)` where `g_d` is the product
/// of all irreducible factors of degree d.
pub fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = x_poly(f);
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = frobenius(&h, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() != Some(0) {
            rest = rest.div_exact(&g).unwrap();
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(k) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, k));
    }
    out
}

/// Splits `f`, a product of distinct monic irreducibles of degree `d`.
pub fn equal_degree(f: &Poly, d: usize, rng: &mut impl Rng) -> Vec<Poly> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return vec![f.monic()];
    }
    let field = f.field();
    let p = field.modulus();
    let one = UniPoly::one(field, f.var());
    let mut factors = vec![f.monic()];
    while factors.len() < n / d {
        let a = UniPoly::new(field, f.var(), (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // a^((p^d - 1)/2) = (a · a^p · ... · a^(p^(d-1)))^((p-1)/2)
        let mut norm = a.rem(f);
        let mut conj = norm.clone();
        for _ in 1..d {
            conj = frobenius(&conj, f);
            norm = norm.mul(&conj).rem(f);
        }
        let b = UniPoly::new(field, f.var(), dense::powmod(field, norm.coeffs(), ((p - 1) / 2) as u128, f.coeffs()));
        let b = b.sub(&one);
        let mut next = Vec::with_capacity(factors.len() + 1);
        for u in factors {
            if u.degree() == Some(d) {
                next.push(u);
                continue;
            }
            let g = u.gcd(&b);
            match g.degree() {
                Some(k) if k > 0 && Some(k) != u.degree() => {
                    next.push(u.div_exact(&g).unwrap().monic());
                    next.push(g);
                }
                _ => next.push(u),
            }
        }
        factors = next;
    }
    factors
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Deterministic.
pub fn factor(f: &Poly) -> Vec<(Poly, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for (g, d) in distinct_degree(&part) {
            for h in equal_degree(&g, d, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

/// Degrees of the irreducible factors of a squarefree polynomial,
/// descending; `None` if `f` is not squarefree.
pub fn degree_pattern(f: &Poly) -> Option<Vec<usize>> {
    if !is_squarefree(f) {
        return None;
    }
    let mut pat: Vec<usize> = distinct_degree(f)
        .into_iter()
        .flat_map(|(g, d)| std::iter::repeat(d).take(g.degree().unwrap() / d))
        .collect();
    pat.sort_unstable_by(|a, b| b.cmp(a));
    Some(pat)
}

pub fn is_irreducible(f: &Poly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(n) => degree_pattern(f).is_some_and(|p| p == [n]),
    }
}
