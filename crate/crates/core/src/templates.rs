//! The generic S5 and A5 polynomials and pointwise verification of the
//! identities that connect them to the covariants of a quintic.

use crate::error::{Error, Result};
use crate::formparse::parse_poly;
use crate::invariants::{absolute_invariants, covariant_forms, invariants, QuinticInvariants};
use crate::poly::{MultiPoly, UniPoly};
use crate::reduction::tschirnhausen_minpoly;
use crate::rings::{is_square, Field, IntegerRing, RationalField, Ring};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// P1: quintic in z with coefficients of weight 24 in A, Δ, M.
/// The three `Delta*A^4` terms in the z^4, z^3, z^2 coefficients are the
/// reading confirmed by [`fit_p1_coefficients`].
pub const P1_TEXT: &str = "288*M^2*z^5\
+(279890625*Delta^2*A^2+262154475*Delta*A^4-3666000*M*A*Delta-2041200*M*A^3+59541075*A^6+87890625*Delta^3+14880*M^2)*z^4\
+(3711849300*Delta*A^4+6170437500*Delta^2*A^2-83428000*M*A*Delta-23781600*M*A^3+538658100*A^6-351562500*Delta^3+259520*M^2)*z^3\
+(15376579650*Delta*A^4+22131843750*Delta^2*A^2-372984000*M*A*Delta-130420800*M*A^3+2685964050*A^6+527343750*Delta^3+1583040*M^2)*z^2\
+(9952607700*Delta*A^4+15161437500*Delta^2*A^2-243612000*M*A*Delta-79322400*M*A^3+1619910900*A^6-351562500*Delta^3+971040*M^2)*z\
-42806000*M*A*Delta+1743266475*Delta*A^4+2912390625*Delta^2*A^2+157216*M^2-12805200*M*A^3+260745075*A^6+87890625*Delta^3";

/// P2: quintic in u with parameters δ and q.
pub const P2_TEXT: &str = "u^2*(u+50)^3\
-20*(611*delta*u^3+8505*u^3+39270*delta*u^2+263250*u^2+4050000*u+438000*delta*u+100000*delta)*u*q\
+2*(25+3*delta)*(625*delta^2*u^4+44550*delta*u^4+793881*u^4+18370800*u^3+3175200*delta*u^3-10000*delta^2*u^3\
+262440000*u^2+60000*delta^2*u^2+25336800*delta*u^2-160000*delta^2*u+12960000*delta*u+160000*delta^2)*q^2";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TemplateId {
    #[serde(rename = "P1_S5")]
    P1S5,
    #[serde(rename = "P2_S5")]
    P2S5,
    #[serde(rename = "P1_A5")]
    P1A5,
    #[serde(rename = "P2_A5")]
    P2A5,
}

impl TemplateId {
    pub const ALL: [TemplateId; 4] = [TemplateId::P1S5, TemplateId::P2S5, TemplateId::P1A5, TemplateId::P2A5];

    /// The polynomial variable (z or u).
    pub fn main_var(self) -> &'static str {
        match self {
            TemplateId::P1S5 | TemplateId::P1A5 => "z",
            TemplateId::P2S5 | TemplateId::P2A5 => "u",
        }
    }

    /// Parameters that must be bound to specialize.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            TemplateId::P1S5 => &["A", "Delta", "M"],
            TemplateId::P1A5 => &["A", "D", "M"],
            TemplateId::P2S5 => &["delta", "q"],
            TemplateId::P2A5 => &["d", "q"],
        }
    }
}

impl fmt::Display for TemplateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TemplateId::P1S5 => "P1_S5",
            TemplateId::P2S5 => "P2_S5",
            TemplateId::P1A5 => "P1_A5",
            TemplateId::P2A5 => "P2_A5",
        })
    }
}

impl FromStr for TemplateId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TemplateId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown template '{s}' (expected P1_S5, P2_S5, P1_A5 or P2_A5)")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericTemplate {
    pub id: TemplateId,
    pub poly: MultiPoly<IntegerRing>,
}

fn build(id: TemplateId) -> GenericTemplate {
    let z = IntegerRing;
    let poly = match id {
        TemplateId::P1S5 => parse_poly(P1_TEXT, &z, &["z", "A", "Delta", "M"]).expect("P1 transcription parses"),
        TemplateId::P2S5 => parse_poly(P2_TEXT, &z, &["u", "delta", "q"]).expect("P2 transcription parses"),
        TemplateId::P1A5 => template(TemplateId::P1S5).poly.substitute("Delta", &MultiPoly::var(&z, "D").pow(2)),
        TemplateId::P2A5 => template(TemplateId::P2S5).poly.substitute("delta", &MultiPoly::var(&z, "d").pow(2)),
    };
    GenericTemplate { id, poly }
}

/// The stored template.
pub fn template(id: TemplateId) -> &'static GenericTemplate {
    static CELLS: [OnceLock<GenericTemplate>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let idx = TemplateId::ALL.iter().position(|t| *t == id).unwrap();
    CELLS[idx].get_or_init(|| build(id))
}

/// Substitutes values for every parameter of the template. The leading
/// coefficient must stay nonzero; with `monic` the result is divided by it.
pub fn specialize<F: Field>(id: TemplateId, field: &F, values: &[(&str, F::Element)], monic: bool) -> Result<UniPoly<F>> {
    let params = id.parameters();
    if let Some((name, _)) = values.iter().find(|(n, _)| !params.contains(n)) {
        return Err(Error::UnknownSymbol(name.to_string()));
    }
    if let Some(p) = params.iter().find(|p| !values.iter().any(|(n, _)| n == *p)) {
        return Err(Error::UnboundSymbol(p.to_string()));
    }
    let var = id.main_var();
    let p = template(id).poly.specialize_into(field, |c| field.from_int(c), values);
    let u = UniPoly::from_multi(&p, var)?;
    if u.degree() != Some(5) {
        return Err(Error::DegenerateSpecialization(format!(
            "{id}: leading coefficient vanishes (degree {})",
            u.degree().map_or("-inf".into(), |d| d.to_string())
        )));
    }
    Ok(if monic { u.monic() } else { u })
}

/// P1 at the invariants of a quintic.
pub fn specialize_p1<F: Field>(inv: &QuinticInvariants<F>, monic: bool) -> Result<UniPoly<F>> {
    specialize(
        TemplateId::P1S5,
        &inv.field,
        &[("A", inv.a.clone()), ("Delta", inv.delta.clone()), ("M", inv.m.clone())],
        monic,
    )
}

// ---------------------------------------------------------------------------
// Verification

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "reason")]
pub enum SampleStatus {
    Passed,
    Failed,
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub index: usize,
    pub quintic: String,
    pub status: SampleStatus,
    /// minpoly of z = k/i² is proportional to P1 at (A, Δ, M).
    pub minpoly_p1: bool,
    /// P1 at z = (u-1)/3 is proportional to P2 at (δ, q).
    pub p1_to_p2: bool,
    /// disc(P1) / Δ is a nonzero square.
    pub disc_square_times_delta: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TemplateReport {
    pub seed: u64,
    pub samples: Vec<SampleReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// The exact fit of the P1 coefficients from sampled quintics equals
    /// the stored transcription (every Δ⁴ coefficient zero).
    pub p1_fit_matches: bool,
}

impl TemplateReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.p1_fit_matches
    }
}

fn skipped(index: usize, g: &UniPoly<RationalField>, reason: &str) -> SampleReport {
    SampleReport {
        index,
        quintic: g.to_string(),
        status: SampleStatus::Skipped(reason.to_string()),
        minpoly_p1: false,
        p1_to_p2: false,
        disc_square_times_delta: false,
    }
}

/// Runs checks (a), (b), (c) on one quintic over Q.
pub fn verify_sample(index: usize, g: &UniPoly<RationalField>) -> Result<SampleReport> {
    let q = RationalField;
    if g.degree() != Some(5) {
        return Err(Error::Degree { expected: 5, found: g.degree().unwrap_or(0) });
    }
    if q.is_zero(&g.discriminant()?) {
        return Ok(skipped(index, g, "disc=0"));
    }
    let inv = invariants(g)?;
    if q.is_zero(&inv.a) || q.is_zero(&inv.m) {
        return Ok(skipped(index, g, "A*M=0"));
    }
    let cov = covariant_forms(g)?;
    if cov.i.is_zero() || g.gcd(&cov.i).degree() != Some(0) {
        return Ok(skipped(index, g, "gcd(g,i)!=1"));
    }
    let p1 = specialize_p1(&inv, true)?;
    // (a)
    let zpoly = tschirnhausen_minpoly(&g.monic(), &cov.k, &cov.i.mul(&cov.i))?;
    let a_ok = zpoly.coeffs() == p1.with_var("x").coeffs();
    // (b)
    let abs = absolute_invariants(&inv)?;
    let third = q.inv(&q.from_i64(3)).unwrap();
    let u_minus_one_over_3 = UniPoly::new(&q, "z", vec![q.neg(&third), third]);
    let p1_in_u = p1.compose(&u_minus_one_over_3).monic();
    let p2 = specialize(TemplateId::P2S5, &q, &[("delta", abs.delta.clone()), ("q", abs.q.clone())], true)?;
    let b_ok = p1_in_u.coeffs() == p2.coeffs();
    // (c)
    let disc = p1.discriminant()?;
    let ratio = q.div(&disc, &inv.delta).unwrap();
    let c_ok = !q.is_zero(&ratio) && is_square(&q, &ratio).is_some();
    let ok = a_ok && b_ok && c_ok;
    Ok(SampleReport {
        index,
        quintic: g.to_string(),
        status: if ok { SampleStatus::Passed } else { SampleStatus::Failed },
        minpoly_p1: a_ok,
        p1_to_p2: b_ok,
        disc_square_times_delta: c_ok,
    })
}

/// Per-sample generator derived from the run seed, so samples can be
/// produced in parallel and still be reproducible.
fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

/// A random quintic with small rational coefficients.
pub fn random_quintic(rng: &mut impl Rng) -> UniPoly<RationalField> {
    let mut coeffs: Vec<BigRational> = (0..5)
        .map(|_| {
            let n = rng.gen_range(-12i64..=12);
            let d = if rng.gen_bool(0.25) { rng.gen_range(1i64..=4) } else { 1 };
            BigRational::new(n.into(), d.into())
        })
        .collect();
    let lead = if rng.gen_bool(0.8) { 1 } else { rng.gen_range(2i64..=3) };
    coeffs.push(BigRational::from_integer(lead.into()));
    UniPoly::new(&RationalField, "x", coeffs)
}

/// `sample_count` seeded random quintics plus any forced ones (reported
/// first, with indices starting at 0).
pub fn verify_templates_with(sample_count: usize, seed: u64, forced: &[UniPoly<RationalField>]) -> Result<TemplateReport> {
    let mut inputs: Vec<UniPoly<RationalField>> = forced.to_vec();
    inputs.extend((0..sample_count).map(|k| random_quintic(&mut sample_rng(seed, k))));
    let samples: Vec<SampleReport> =
        inputs.par_iter().enumerate().map(|(k, g)| verify_sample(k, g)).collect::<Result<_>>()?;
    let count = |pred: fn(&SampleStatus) -> bool| samples.iter().filter(|s| pred(&s.status)).count();
    let fit = fit_p1_coefficients(seed)?;
    Ok(TemplateReport {
        seed,
        passed: count(|s| *s == SampleStatus::Passed),
        failed: count(|s| *s == SampleStatus::Failed),
        skipped: count(|s| matches!(s, SampleStatus::Skipped(_))),
        samples,
        p1_fit_matches: fit.matches_template(),
    })
}

pub fn verify_templates(sample_count: usize, seed: u64) -> Result<TemplateReport> {
    verify_templates_with(sample_count, seed, &[])
}

// ---------------------------------------------------------------------------
// Re-deriving the coefficients of P1

/// Monomials fitted for each z-coefficient: the weight-24 basis plus Δ⁴.
pub const P1_FIT_BASIS: [&str; 8] = ["A^6", "Delta*A^4", "Delta^2*A^2", "Delta^3", "M*A^3", "M*A*Delta", "M^2", "Delta^4"];

fn basis_values(a: &BigRational, d: &BigRational, m: &BigRational) -> [BigRational; 8] {
    let p = |x: &BigRational, e: i32| num_traits::pow(x.clone(), e as usize);
    [
        p(a, 6),
        d * p(a, 4),
        p(d, 2) * p(a, 2),
        p(d, 3),
        m * p(a, 3),
        m * a * d,
        p(m, 2),
        p(d, 4),
    ]
}

/// Exact coefficients of `288 M² · minpoly(k/i²)` in [`P1_FIT_BASIS`], one
/// row per power of z (z^0 first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1Fit {
    pub coefficients: Vec<[BigRational; 8]>,
}

impl P1Fit {
    /// The stored template expressed in the same basis.
    pub fn template_coefficients() -> Vec<[BigRational; 8]> {
        let t = &template(TemplateId::P1S5).poly;
        let exps: [(u32, u32, u32); 8] = [(6, 0, 0), (4, 1, 0), (2, 2, 0), (0, 3, 0), (3, 0, 1), (1, 1, 1), (0, 0, 2), (0, 4, 0)];
        let by_z = t.coefficients_in("z");
        (0..=5)
            .map(|k| {
                let ck = by_z.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(&IntegerRing, &[]));
                std::array::from_fn(|b| {
                    let (ea, ed, em) = exps[b];
                    BigRational::from_integer(ck.coefficient(&[("A", ea), ("Delta", ed), ("M", em)]))
                })
            })
            .collect()
    }

    pub fn matches_template(&self) -> bool {
        self.coefficients == Self::template_coefficients()
    }
}

/// Solves for every coefficient of P1 from the z-minimal polynomials of
/// seeded random quintics. Uses more samples than unknowns and requires
/// the overdetermined system to be consistent.
pub fn fit_p1_coefficients(seed: u64) -> Result<P1Fit> {
    let q = RationalField;
    let unknowns = P1_FIT_BASIS.len();
    let wanted = unknowns + 6;
    let mut rows: Vec<[BigRational; 8]> = Vec::new();
    let mut rhs: Vec<Vec<BigRational>> = Vec::new();
    let mut k = 0usize;
    while rows.len() < wanted {
        if k > 50 * wanted {
            return Err(Error::Internal("not enough usable samples for the P1 fit".into()));
        }
        let g = random_quintic(&mut sample_rng(seed ^ 0x5eed_f17, k)).monic();
        k += 1;
        if q.is_zero(&g.discriminant()?) {
            continue;
        }
        let inv = invariants(&g)?;
        if inv.a.is_zero() || inv.m.is_zero() {
            continue;
        }
        let cov = covariant_forms(&g)?;
        if cov.i.is_zero() || g.gcd(&cov.i).degree() != Some(0) {
            continue;
        }
        let zpoly = tschirnhausen_minpoly(&g, &cov.k, &cov.i.mul(&cov.i))?;
        let scale = BigRational::from_integer(288.into()) * &inv.m * &inv.m;
        rows.push(basis_values(&inv.a, &inv.delta, &inv.m));
        rhs.push((0..=5).map(|e| zpoly.coeff(e) * &scale).collect());
    }
    let solution = solve_consistent(&rows, &rhs)?;
    Ok(P1Fit { coefficients: (0..=5).map(|e| std::array::from_fn(|b| solution[b][e].clone())).collect() })
}

/// Exact solution of `rows · X = rhs` (several right-hand sides) for a
/// full-column-rank overdetermined system; errors if inconsistent.
fn solve_consistent(rows: &[[BigRational; 8]], rhs: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = 8;
    let width = rhs[0].len();
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().zip(rhs).map(|(r, b)| r.iter().cloned().chain(b.iter().cloned()).collect()).collect();
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::Internal("P1 fit: samples do not determine the coefficients".into()));
        };
        m.swap(pivot_row, p);
        let inv = BigRational::one() / &m[pivot_row][col];
        for v in m[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..n + width {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    if m[n..].iter().any(|row| row.iter().any(|v| !v.is_zero())) {
        return Err(Error::Internal("P1 fit: inconsistent system".into()));
    }
    Ok((0..n).map(|r| m[r][n..].to_vec()).collect())
}
