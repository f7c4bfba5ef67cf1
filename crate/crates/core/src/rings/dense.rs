//! Dense univariate polynomial kernels over a ring object.
//!
//! Coefficients are stored in ascending degree order. A vector is
//! canonical when it is empty (the zero polynomial) or its last entry is
//! nonzero; every function here returns canonical vectors.

use super::{Field, Ring};

pub fn trim<R: Ring>(ring: &R, mut v: Vec<R::Element>) -> Vec<R::Element> {
    while v.last().is_some_and(|c| ring.is_zero(c)) {
        v.pop();
    }
    v
}

pub fn degree<E>(v: &[E]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub fn lead<E>(v: &[E]) -> Option<&E> {
    v.last()
}

pub fn constant<R: Ring>(ring: &R, c: R::Element) -> Vec<R::Element> {
    trim(ring, vec![c])
}

/// `c * x^k`.
pub fn monomial<R: Ring>(ring: &R, c: R::Element, k: usize) -> Vec<R::Element> {
    if ring.is_zero(&c) {
        return Vec::new();
    }
    let mut v = vec![ring.zero(); k + 1];
    v[k] = c;
    v
}

pub fn is_one<R: Ring>(ring: &R, v: &[R::Element]) -> bool {
    v.len() == 1 && ring.is_one(&v[0])
}

pub fn add<R: Ring>(ring: &R, a: &[R::Element], b: &[R::Element]) -> Vec<R::Element> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => ring.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(ring, out)
}

pub fn neg<R: Ring>(ring: &R, a: &[R::Element]) -> Vec<R::Element> {
    a.iter().map(|c| ring.neg(c)).collect()
}

pub fn sub<R: Ring>(ring: &R, a: &[R::Element], b: &[R::Element]) -> Vec<R::Element> {
    add(ring, a, &neg(ring, b))
}

pub fn scale<R: Ring>(ring: &R, a: &[R::Element], c: &R::Element) -> Vec<R::Element> {
    if ring.is_zero(c) {
        return Vec::new();
    }
    trim(ring, a.iter().map(|x| ring.mul(x, c)).collect())
}

pub fn mul<R: Ring>(ring: &R, a: &[R::Element], b: &[R::Element]) -> Vec<R::Element> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if ring.is_zero(y) {
                continue;
            }
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    trim(ring, out)
}

pub fn pow<R: Ring>(ring: &R, a: &[R::Element], mut e: u32) -> Vec<R::Element> {
    let mut acc = vec![ring.one()];
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(ring, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(ring, &base, &base);
        }
    }
    trim(ring, acc)
}

pub fn derivative<R: Ring>(ring: &R, a: &[R::Element]) -> Vec<R::Element> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| ring.mul(c, &ring.from_i64(k as i64)))
        .collect();
    trim(ring, out)
}

pub fn eval<R: Ring>(ring: &R, a: &[R::Element], x: &R::Element) -> R::Element {
    a.iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

/// `a(b(x))`.
pub fn compose<R: Ring>(ring: &R, a: &[R::Element], b: &[R::Element]) -> Vec<R::Element> {
    a.iter().rev().fold(Vec::new(), |acc, c| {
        add(ring, &mul(ring, &acc, b), &constant(ring, c.clone()))
    })
}

/// Division with remainder over a field.
pub fn divrem<F: Field>(
    field: &F,
    a: &[F::Element],
    b: &[F::Element],
) -> (Vec<F::Element>, Vec<F::Element>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lc_inv = field.inv(&b[db]).expect("leading coefficient is a unit");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(field, r));
    }
    let mut q = vec![field.zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = field.mul(&r[k + db], &lc_inv);
        if field.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = field.sub(&r[k + j], &field.mul(&c, bj));
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(field, q), trim(field, r))
}

pub fn rem<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    divrem(field, a, b).1
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn div_exact<F: Field>(
    field: &F,
    a: &[F::Element],
    b: &[F::Element],
) -> Option<Vec<F::Element>> {
    let (q, r) = divrem(field, a, b);
    r.is_empty().then_some(q)
}

pub fn monic<F: Field>(field: &F, a: &[F::Element]) -> Vec<F::Element> {
    match lead(a) {
        None => Vec::new(),
        Some(lc) => {
            let inv = field.inv(lc).expect("nonzero leading coefficient");
            scale(field, a, &inv)
        }
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    let mut x = trim(field, a.to_vec());
    let mut y = trim(field, b.to_vec());
    while !y.is_empty() {
        let r = rem(field, &x, &y);
        x = y;
        y = r;
    }
    monic(field, &x)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn xgcd<F: Field>(
    field: &F,
    a: &[F::Element],
    b: &[F::Element],
) -> (Vec<F::Element>, Vec<F::Element>, Vec<F::Element>) {
    let (mut r0, mut r1) = (trim(field, a.to_vec()), trim(field, b.to_vec()));
    let (mut s0, mut s1) = (vec![field.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![field.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(field, &r0, &r1);
        let s2 = sub(field, &s0, &mul(field, &q, &s1));
        let t2 = sub(field, &t0, &mul(field, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    match lead(&r0) {
        None => (Vec::new(), Vec::new(), Vec::new()),
        Some(lc) => {
            let inv = field.inv(lc).unwrap();
            (
                scale(field, &r0, &inv),
                scale(field, &s0, &inv),
                scale(field, &t0, &inv),
            )
        }
    }
}

/// `a^e mod m`.
pub fn powmod<F: Field>(
    field: &F,
    a: &[F::Element],
    mut e: u128,
    m: &[F::Element],
) -> Vec<F::Element> {
    let mut acc = rem(field, &[field.one()], m);
    let mut base = rem(field, a, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(field, &mul(field, &acc, &base), m);
        }
        e >>= 1;
        if e > 0 {
            base = rem(field, &mul(field, &base, &base), m);
        }
    }
    acc
}

/// Polynomial square root: `Some(q)` with `q*q == a` when `a` is a perfect
/// square. The leading coefficient of `q` is the field's canonical square
/// root of the leading coefficient of `a`. Requires odd characteristic.
pub fn sqrt<F: Field>(field: &F, a: &[F::Element]) -> Option<Vec<F::Element>> {
    let a = trim(field, a.to_vec());
    let Some(d) = degree(&a) else {
        return Some(Vec::new());
    };
    if d % 2 == 1 {
        return None;
    }
    let m = d / 2;
    let top = field.sqrt(&a[d])?;
    let two_top_inv = field.inv(&field.add(&top, &top))?;
    let mut q = vec![field.zero(); m + 1];
    q[m] = top;
    for k in 1..=m {
        // Coefficient of x^(2m-k) in q^2 fixes q[m-k].
        let target = 2 * m - k;
        let mut acc = a[target].clone();
        for i in (m - k + 1)..m {
            let j = target - i;
            if j > m || j < m - k + 1 {
                continue;
            }
            acc = field.sub(&acc, &field.mul(&q[i], &q[j]));
        }
        q[m - k] = field.mul(&acc, &two_top_inv);
    }
    let q = trim(field, q);
    (mul(field, &q, &q) == a).then_some(q)
}

/// Renders `terms` (coefficient, monomial text) in descending order, as
/// `format_poly` does. An empty monomial text denotes the constant term.
pub fn join_terms<'a, R: Ring + 'a>(
    ring: &R,
    terms: impl IntoIterator<Item = (&'a R::Element, String)>,
) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let negative = ring.is_negative(c);
        let abs = if negative { ring.neg(c) } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        if mono.is_empty() {
            out.push_str(&ring.format_factor(&abs));
        } else if ring.is_one(&abs) {
            out.push_str(&mono);
        } else {
            out.push_str(&ring.format_factor(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format<R: Ring>(ring: &R, a: &[R::Element], var: &str) -> String {
    join_terms(
        ring,
        a.iter().enumerate().rev().filter(|(_, c)| !ring.is_zero(c)).map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            (c, mono)
        }),
    )
}

/// Number of nonzero coefficients.
pub fn term_count<R: Ring>(ring: &R, a: &[R::Element]) -> usize {
    a.iter().filter(|c| !ring.is_zero(c)).count()
}
