//! Galois-group evidence for quintics: discriminant square test, the
//! degree-10 resolvent of sums of two roots, and irreducibility probes.

pub mod factor;

use crate::error::{Error, Result};
use crate::poly::{resultant, MultiPoly, UniPoly};
use crate::rings::{is_prime_u64, is_square, Field, PrimeField, RationalField, RationalFunctionField, Ring};
use serde::Serialize;
use std::collections::BTreeSet;

/// Upper bound on the number of places probed per irreducibility test.
const MAX_REDUCTIONS: usize = 24;
/// Primes tried over Q before giving up.
const PRIME_SCAN: u64 = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Yes,
    No,
    Inconclusive,
}

/// Fields whose polynomials can be probed by reduction to prime fields.
pub trait Reducible: Field {
    /// The polynomial itself when the field is a prime field.
    fn as_prime_field(&self, _p: &UniPoly<Self>) -> Option<UniPoly<PrimeField>> {
        None
    }

    /// Squarefree images of the same degree at good places, at most `limit`.
    fn reductions(&self, p: &UniPoly<Self>, limit: usize) -> Vec<UniPoly<PrimeField>>;

    /// Whether `p` has a root among small "obvious" elements.
    fn has_small_root(&self, _p: &UniPoly<Self>) -> bool {
        false
    }
}

fn good_image(p: UniPoly<PrimeField>, n: usize) -> Option<UniPoly<PrimeField>> {
    (p.degree() == Some(n) && factor::is_squarefree(&p)).then_some(p)
}

impl Reducible for PrimeField {
    fn as_prime_field(&self, p: &UniPoly<Self>) -> Option<UniPoly<PrimeField>> {
        Some(p.clone())
    }
    fn reductions(&self, p: &UniPoly<Self>, _limit: usize) -> Vec<UniPoly<PrimeField>> {
        p.degree().and_then(|n| good_image(p.clone(), n)).into_iter().collect()
    }
}

impl Reducible for RationalField {
    fn reductions(&self, p: &UniPoly<Self>, limit: usize) -> Vec<UniPoly<PrimeField>> {
        let Some(n) = p.degree() else { return Vec::new() };
        let mut out = Vec::new();
        for l in (7..PRIME_SCAN).filter(|&l| is_prime_u64(l)) {
            if out.len() >= limit {
                break;
            }
            let fl = PrimeField::new(l).unwrap();
            let Some(cs) = p.coeffs().iter().map(|c| fl.reduce_rational(c)).collect::<Option<Vec<_>>>() else {
                continue;
            };
            if let Some(img) = good_image(UniPoly::new(&fl, p.var(), cs), n) {
                out.push(img);
            }
        }
        out
    }
    fn has_small_root(&self, p: &UniPoly<Self>) -> bool {
        (1..=12i64).any(|b| (-60..=60i64).any(|a| self.is_zero(&p.eval(&crate::rings::rat(a, b)))))
    }
}

impl Reducible for RationalFunctionField<PrimeField> {
    fn reductions(&self, p: &UniPoly<Self>, limit: usize) -> Vec<UniPoly<PrimeField>> {
        let Some(n) = p.degree() else { return Vec::new() };
        let k = self.base();
        let mut out = Vec::new();
        for c0 in 0..k.modulus() {
            if out.len() >= limit {
                break;
            }
            let Some(cs) = p.coeffs().iter().map(|c| self.eval_at(c, &c0)).collect::<Option<Vec<_>>>() else {
                continue;
            };
            if let Some(img) = good_image(UniPoly::new(k, p.var(), cs), n) {
                out.push(img);
            }
        }
        out
    }
    fn has_small_root(&self, p: &UniPoly<Self>) -> bool {
        let k = self.base();
        (0..k.modulus()).any(|a| self.is_zero(&p.eval(&self.from_base(a))))
    }
}

impl Reducible for RationalFunctionField<RationalField> {
    fn reductions(&self, p: &UniPoly<Self>, limit: usize) -> Vec<UniPoly<PrimeField>> {
        let Some(n) = p.degree() else { return Vec::new() };
        let q = RationalField;
        let mut out = Vec::new();
        for c0 in (0..40i64).map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -i / 2 }) {
            if out.len() >= limit {
                break;
            }
            let c0 = crate::rings::rat(c0, 1);
            let Some(cs) = p.coeffs().iter().map(|c| self.eval_at(c, &c0)).collect::<Option<Vec<_>>>() else {
                continue;
            };
            let spec = UniPoly::new(&q, p.var(), cs);
            if spec.degree() != Some(n) {
                continue;
            }
            out.extend(q.reductions(&spec, 2.min(limit - out.len())));
        }
        out
    }
    fn has_small_root(&self, p: &UniPoly<Self>) -> bool {
        (1..=6i64).any(|b| (-20..=20i64).any(|a| self.is_zero(&p.eval(&self.from_base(crate::rings::rat(a, b))))))
    }
}

/// Subset sums of a factorization pattern.
fn subset_sums(pattern: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &d in pattern {
        let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(next);
    }
    sums
}

/// Irreducibility test. Over a prime field the answer is exact; elsewhere
/// "yes" comes from reductions (an irreducible image, or degree patterns
/// whose possible factor degrees intersect to {0, n}) and "no" from an
/// explicit factor (a repeated factor or a small root).
pub fn irreducible<F: Reducible>(p: &UniPoly<F>) -> Irreducibility {
    let n = match p.degree() {
        None | Some(0) => return Irreducibility::No,
        Some(1) => return Irreducibility::Yes,
        Some(n) => n,
    };
    if let Some(img) = p.field().as_prime_field(p) {
        return if factor::is_irreducible(&img) { Irreducibility::Yes } else { Irreducibility::No };
    }
    if p.gcd(&p.derivative()).degree() != Some(0) || p.field().has_small_root(p) {
        return Irreducibility::No;
    }
    let mut allowed: BTreeSet<usize> = (0..=n).collect();
    for img in p.field().reductions(p, MAX_REDUCTIONS) {
        let Some(pattern) = factor::degree_pattern(&img) else { continue };
        if pattern.len() == 1 {
            return Irreducibility::Yes;
        }
        allowed = allowed.intersection(&subset_sums(&pattern)).copied().collect();
        if allowed.len() == 2 {
            return Irreducibility::Yes;
        }
    }
    Irreducibility::Inconclusive
}

/// Descending factor-degree patterns of `p` at good places.
pub fn cycle_types<F: Reducible>(p: &UniPoly<F>) -> Vec<Vec<usize>> {
    p.field().reductions(p, MAX_REDUCTIONS).iter().filter_map(factor::degree_pattern).collect()
}

/// Monic degree-10 polynomial whose roots are the sums α_i + α_j (i < j)
/// of the roots of the monic quintic `g`, obtained from
/// `Res_y(g(y), g(x − y)) = 32 · g(x/2) · h(x)^2`.
pub fn resolvent_two_roots<F: Field>(g: &UniPoly<F>) -> Result<UniPoly<F>> {
    if g.degree() != Some(5) {
        return Err(Error::Degree { expected: 5, found: g.degree().unwrap_or(0) });
    }
    let field = g.field();
    if field.is_zero(&g.discriminant()?) {
        return Err(Error::RepeatedRoots);
    }
    let var = g.var().to_string();
    let g = g.monic().with_var("x");
    let gy = g.with_var("y").to_multi();
    let shift = MultiPoly::var(field, "x").sub(&MultiPoly::var(field, "y"));
    let gxy = g.to_multi().substitute("x", &shift);
    let r = UniPoly::from_multi(&resultant(&gy, &gxy, "y")?, "x")?;
    // 32 g(x/2) = Σ g_k 2^(5-k) x^k
    let half: Vec<F::Element> =
        g.coeffs().iter().enumerate().map(|(k, c)| field.mul(c, &field.from_i64(1 << (5 - k)))).collect();
    let half = UniPoly::new(field, "x", half);
    let sq = r.div_exact(&half).ok_or_else(|| Error::Internal("resolvent quotient is not exact".into()))?;
    let h = sq.sqrt().ok_or_else(|| Error::Internal("resolvent cofactor is not a square".into()))?;
    if h.degree() != Some(10) {
        return Err(Error::Internal(format!("resolvent has degree {:?}", h.degree())));
    }
    Ok(h.monic().with_var(&var))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupName {
    S5,
    A5,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl std::fmt::Display for GroupName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GroupName::S5 => "S5",
            GroupName::A5 => "A5",
            GroupName::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub irreducible_deg5: Irreducibility,
    pub disc_square: bool,
    pub resolvent10_irreducible: Irreducibility,
    /// A factorization pattern of the quintic at some place that no
    /// element of the Frobenius group of order 20 has (a transposition or
    /// a 3-cycle). `None` when no such pattern was met.
    pub non_f20_cycle_type: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupLabel {
    pub value: GroupName,
    pub evidence: Evidence,
}

/// Cycle types of S5 absent from the Frobenius group F20.
fn outside_f20(pattern: &[usize]) -> bool {
    matches!(pattern, [2, 1, 1, 1] | [3, 1, 1] | [3, 2])
}

/// Evidence and label for the Galois group of a separable quintic.
///
/// A5 needs an irreducible quintic, a square discriminant and an
/// irreducible resolvent. S5 needs a non-square discriminant, irreducible
/// quintic and resolvent, and additionally a reduction with a cycle type
/// outside F20 (F20 also acts transitively on pairs of roots).
pub fn group_label<F: Reducible>(g: &UniPoly<F>) -> Result<GroupLabel> {
    let g = g.monic();
    let res = resolvent_two_roots(&g)?;
    let field = g.field();
    let disc_square = is_square(field, &g.discriminant()?).is_some();
    let irreducible_deg5 = irreducible(&g);
    let resolvent10_irreducible = irreducible(&res);
    let non_f20_cycle_type = if disc_square { None } else { cycle_types(&g).into_iter().find(|c| outside_f20(c)) };
    let certified = irreducible_deg5 == Irreducibility::Yes && resolvent10_irreducible == Irreducibility::Yes;
    let value = match (certified, disc_square, &non_f20_cycle_type) {
        (true, true, _) => GroupName::A5,
        (true, false, Some(_)) => GroupName::S5,
        _ => GroupName::Inconclusive,
    };
    Ok(GroupLabel { value, evidence: Evidence { irreducible_deg5, disc_square, resolvent10_irreducible, non_f20_cycle_type } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formparse::{parse_element, parse_univariate};
    use crate::rings::rat;
    use proptest::prelude::*;

    fn q(text: &str) -> UniPoly<RationalField> {
        parse_univariate(text, &RationalField, "x").unwrap()
    }

    fn f11c(text: &str) -> UniPoly<RationalFunctionField<PrimeField>> {
        let k = RationalFunctionField::new(PrimeField::new(11).unwrap(), "c");
        let var = if text.starts_with('u') { "u" } else { "x" };
        parse_univariate(text, &k, var).unwrap()
    }

    const BRIOSCHI_TARGET: &str = "u^5+(5*c^2+3*c+5)/(2*c+5)^2*u^4-(3*c^2+3*c+4)/(2*c+5)^2*u^3-(4*c+5)/(2*c+5)^2*u^2\
                       -2*(c-5)*(c-1)/(2*c+5)^2*u+(3+3*c^2+5*c)/(2*c+5)^2";

    #[test]
    fn resolvent_of_split_quintic() {
        let g = q("x*(x-1)*(x-2)*(x-3)*(x-4)");
        let expected = [1, 2, 3, 3, 4, 4, 5, 5, 6, 7]
            .iter()
            .fold(UniPoly::one(&RationalField, "x"), |acc, &r| acc.mul(&UniPoly::from_i64(&RationalField, "x", &[-r, 1])));
        assert_eq!(resolvent_two_roots(&g).unwrap(), expected);
    }

    #[test]
    fn resolvent_rejects_repeated_roots() {
        assert_eq!(resolvent_two_roots(&q("x^5")), Err(Error::RepeatedRoots));
    }

    #[test]
    fn irreducibility_over_q() {
        assert_eq!(irreducible(&q("x^5 - 2")), Irreducibility::Yes);
        let u = parse_univariate("u^2*(u+50)^3", &RationalField, "u").unwrap();
        assert_eq!(irreducible(&u), Irreducibility::No);
        assert_eq!(irreducible(&q("(x^2+1)*(x^3+x+1)")), Irreducibility::Inconclusive);
        // x^4 + 1 is reducible mod every prime but irreducible over Q.
        assert_ne!(irreducible(&q("x^4 + 1")), Irreducibility::No);
    }

    #[test]
    fn irreducibility_over_fp() {
        let f7 = PrimeField::new(7).unwrap();
        let f11 = PrimeField::new(11).unwrap();
        assert_eq!(irreducible(&UniPoly::from_i64(&f7, "x", &[-2, 0, 0, 0, 0, 1])), Irreducibility::No);
        assert_eq!(irreducible(&UniPoly::from_i64(&f11, "x", &[-2, 0, 0, 0, 0, 1])), Irreducibility::Yes);
    }

    #[test]
    fn examples_over_q() {
        let a5 = group_label(&q("x^5 - 2*x^4 - 10*x^3 + 23*x^2 - 6*x - 4")).unwrap();
        assert_eq!(a5.value, GroupName::A5, "{a5:?}");
        let s5 = group_label(&q("x^5 + 25*x^4 - x - 1")).unwrap();
        assert_eq!(s5.value, GroupName::S5, "{s5:?}");
        assert!(!s5.evidence.disc_square);
    }

    #[test]
    fn frobenius_group_is_not_s5() {
        // x^5 - 2 has group F20: non-square discriminant, resolvent irreducible.
        let l = group_label(&q("x^5 - 2")).unwrap();
        assert_eq!(l.evidence.irreducible_deg5, Irreducibility::Yes);
        assert!(!l.evidence.disc_square);
        assert_eq!(l.evidence.resolvent10_irreducible, Irreducibility::Yes);
        assert_eq!(l.value, GroupName::Inconclusive);
    }

    #[test]
    fn dihedral_is_inconclusive() {
        // x^5 - 5x + 12 has group D5.
        let l = group_label(&q("x^5 - 5*x + 12")).unwrap();
        assert!(l.evidence.disc_square);
        assert_ne!(l.evidence.resolvent10_irreducible, Irreducibility::Yes);
        assert_eq!(l.value, GroupName::Inconclusive);
    }

    #[test]
    fn brioschi_example_over_f11c() {
        let g = f11c("x^5 + c*x^3 + c^2*x - c^2");
        let k = g.field();
        assert_eq!(g.discriminant().unwrap(), parse_element("c^8*(c-1)^2", k).unwrap());
        let l = group_label(&g).unwrap();
        assert_eq!(l.value, GroupName::A5, "{l:?}");
        let h = f11c(BRIOSCHI_TARGET);
        // The printed value omits the denominator (2c+5)^16.
        let dh = parse_element("2^4*(c-1)^4*c^4*(c^3+c^2-5*c-1)^2/(2*c+5)^16", k).unwrap();
        assert_eq!(h.discriminant().unwrap(), dh);
        let l = group_label(&h).unwrap();
        assert_eq!(l.value, GroupName::A5, "{l:?}");
    }

    #[test]
    fn sqrt_square_factor_on_random_quintics() {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
        let mut done = 0;
        while done < 100 {
            let cs: Vec<i64> = (0..5).map(|_| rand::Rng::gen_range(&mut rng, -9..=9)).chain([1]).collect();
            let g = UniPoly::from_i64(&RationalField, "x", &cs);
            if g.discriminant().unwrap() == RationalField.zero() {
                continue;
            }
            let h = resolvent_two_roots(&g).unwrap();
            assert!(h.is_monic() && h.degree() == Some(10));
            done += 1;
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(6))]
        #[test]
        fn label_is_shift_invariant(r in -20i64..20, s in 1i64..5) {
            let g = q("x^5 - 2*x^4 - 10*x^3 + 23*x^2 - 6*x - 4");
            let shift = UniPoly::new(&RationalField, "x", vec![rat(r, s), rat(1, 1)]);
            let base = group_label(&g).unwrap().value;
            prop_assert_eq!(group_label(&g.compose(&shift)).unwrap().value, base);
        }
    }
}
