//! The covariant tower of the binary quintic.
//!
//! The universal covariants are built once over Z[a0..a5] by transvection
//! of the generic quintic, then evaluated at concrete coefficients in any
//! supported field.

use crate::error::{Error, Result};
use crate::formparse::{format_poly, parse_poly};
use crate::poly::{coefficient_symbols, MultiPoly, UniPoly};
use crate::rings::{Field, IntegerRing};
use crate::transvect::{transvectant, BinaryForm};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;
use std::sync::OnceLock;

/// Environment variable naming an optional JSON cache for the table.
pub const CACHE_ENV: &str = "QUINTIC_TABLE_CACHE";

/// Construction steps, hashed into the cache file. Bump the version when
/// the construction changes.
const RECIPE: &str = "quintic covariant table v1;\
    i=(f,f)^4/288;H=(f,f)^2/16;j=-(f,i)^2/12;A=(i,i)^2/32;k=(i,H)^2/12;\
    tau=(j,j)^2/16;B=(tau,i)^2/8;Delta=(A^2-4B)/125;C=(tau,tau)^2/6;\
    M=(-9C+2000A*Delta+1008A^3)/25";

/// One universal covariant with its bigrading and the divisor applied to
/// the raw transvectant (or combination) it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covariant {
    pub name: &'static str,
    pub order: u32,
    pub degree: u32,
    /// Signed divisor; -12 for j.
    pub divisor: i64,
    /// Content of the raw polynomial before division.
    pub raw_content: BigInt,
    pub poly: MultiPoly<IntegerRing>,
}

impl Covariant {
    pub fn form(&self) -> BinaryForm<IntegerRing> {
        BinaryForm::with_order(self.poly.clone(), self.order).expect("table entries are homogeneous")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovariantTable {
    pub f: Covariant,
    pub i: Covariant,
    pub h: Covariant,
    pub j: Covariant,
    pub a: Covariant,
    pub k: Covariant,
    pub tau: Covariant,
    pub b: Covariant,
    pub delta: Covariant,
    pub c: Covariant,
    pub m: Covariant,
}

/// (name, order, degree, divisor) in construction order.
pub const TABLE_SHAPE: [(&str, u32, u32, i64); 11] = [
    ("f", 5, 1, 1),
    ("i", 2, 2, 288),
    ("H", 6, 2, 16),
    ("j", 3, 3, -12),
    ("A", 0, 4, 32),
    ("k", 4, 4, 12),
    ("tau", 2, 6, 16),
    ("B", 0, 8, 8),
    ("Delta", 0, 8, 125),
    ("C", 0, 12, 6),
    ("M", 0, 12, 25),
];

fn shape(name: &str) -> (&'static str, u32, u32, i64) {
    *TABLE_SHAPE.iter().find(|s| s.0 == name).expect("known covariant")
}

fn check_grading(name: &str, poly: &MultiPoly<IntegerRing>) -> Result<()> {
    let (_, order, degree, _) = shape(name);
    let o = poly.homogeneous_degree(&["x", "y"]);
    let d = poly.homogeneous_degree(&coefficient_symbols());
    if o != Some(order) || d != Some(degree) {
        return Err(Error::Construction(format!(
            "{name}: expected (order, degree) = ({order}, {degree}), found ({o:?}, {d:?})"
        )));
    }
    Ok(())
}

fn finish(name: &str, raw: MultiPoly<IntegerRing>) -> Result<Covariant> {
    let (name, order, degree, divisor) = shape(name);
    let raw_content = raw.content();
    let poly = raw.div_integer(divisor)?;
    check_grading(name, &poly)?;
    let c = poly.content();
    if c != BigInt::from(1) {
        return Err(Error::Construction(format!("{name}: content after division is {c}")));
    }
    Ok(Covariant { name, order, degree, divisor, raw_content, poly })
}

fn tv(f: &Covariant, g: &Covariant, m: u32) -> MultiPoly<IntegerRing> {
    transvectant(&f.form(), &g.form(), m).form.into_poly()
}

/// Builds the whole tower from scratch, checking every division, content
/// and bigrading on the way.
pub fn build_universal_table() -> Result<CovariantTable> {
    let z = IntegerRing;
    let int = |n: i64| MultiPoly::constant(&z, BigInt::from(n));
    let generic = BinaryForm::generic(&z, 5);
    let f = Covariant {
        name: "f",
        order: 5,
        degree: 1,
        divisor: 1,
        raw_content: BigInt::from(1),
        poly: generic.poly().clone(),
    };
    let ff = |m| transvectant(&generic, &generic, m).form.into_poly();
    let (i_raw, h_raw) = rayon::join(|| ff(4), || ff(2));
    let i = finish("i", i_raw)?;
    let h = finish("H", h_raw)?;
    let j = finish("j", tv(&f, &i, 2))?;
    let (a_raw, k_raw) = rayon::join(|| tv(&i, &i, 2), || tv(&i, &h, 2));
    let a = finish("A", a_raw)?;
    let k = finish("k", k_raw)?;
    let tau = finish("tau", tv(&j, &j, 2))?;
    let (b_raw, c_raw) = rayon::join(|| tv(&tau, &i, 2), || tv(&tau, &tau, 2));
    let b = finish("B", b_raw)?;
    let a2 = a.poly.pow(2);
    let delta = finish("Delta", a2.sub(&int(4).mul(&b.poly)))?;
    let c = finish("C", c_raw)?;
    let m_raw = int(-9)
        .mul(&c.poly)
        .add(&int(2000).mul(&a.poly).mul(&delta.poly))
        .add(&int(1008).mul(&a.poly.pow(3)));
    let m = finish("M", m_raw)?;
    Ok(CovariantTable { f, i, h, j, a, k, tau, b, delta, c, m })
}

impl CovariantTable {
    pub fn entries(&self) -> [&Covariant; 11] {
        [&self.f, &self.i, &self.h, &self.j, &self.a, &self.k, &self.tau, &self.b, &self.delta, &self.c, &self.m]
    }

    pub fn get(&self, name: &str) -> Option<&Covariant> {
        self.entries().into_iter().find(|e| e.name == name)
    }

    /// `125Δ = A² − 4B` and `25M = −9C + 2000AΔ + 1008A³` in Z[a0..a5].
    pub fn check_identities(&self) -> bool {
        let int = |n: i64| MultiPoly::constant(&IntegerRing, BigInt::from(n));
        let (a, b, c, d, m) = (&self.a.poly, &self.b.poly, &self.c.poly, &self.delta.poly, &self.m.poly);
        let lhs1 = int(125).mul(d);
        let rhs1 = a.pow(2).sub(&int(4).mul(b));
        let lhs2 = int(25).mul(m);
        let rhs2 = int(-9).mul(c).add(&int(2000).mul(a).mul(d)).add(&int(1008).mul(&a.pow(3)));
        lhs1 == rhs1 && lhs2 == rhs2
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = CacheFile {
            recipe: recipe_hash(),
            entries: self
                .entries()
                .iter()
                .map(|e| CacheEntry { name: e.name.to_string(), raw_content: e.raw_content.to_string(), poly: format_poly(&e.poly) })
                .collect(),
        };
        let text = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;
        // Write then rename so concurrent readers never see a partial file.
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, text).map_err(|e| Error::Cache(e.to_string()))?;
        std::fs::rename(&tmp, path).map_err(|e| Error::Cache(e.to_string()))
    }

    /// Loads a cache file; fails on a recipe mismatch or malformed data.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Cache(e.to_string()))?;
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
        if file.recipe != recipe_hash() {
            return Err(Error::Cache("recipe hash mismatch".into()));
        }
        let mut vars: Vec<&str> = coefficient_symbols().to_vec();
        vars.extend(["x", "y"]);
        let load = |name: &str| -> Result<Covariant> {
            let e = file
                .entries
                .iter()
                .find(|e| e.name == name)
                .ok_or_else(|| Error::Cache(format!("missing entry {name}")))?;
            let (name, order, degree, divisor) = shape(name);
            let poly = parse_poly(&e.poly, &IntegerRing, &vars)?.trimmed();
            check_grading(name, &poly).map_err(|e| Error::Cache(e.to_string()))?;
            let raw_content = e.raw_content.parse().map_err(|_| Error::Cache("bad content".into()))?;
            Ok(Covariant { name, order, degree, divisor, raw_content, poly })
        };
        let t = CovariantTable {
            f: load("f")?,
            i: load("i")?,
            h: load("H")?,
            j: load("j")?,
            a: load("A")?,
            k: load("k")?,
            tau: load("tau")?,
            b: load("B")?,
            delta: load("Delta")?,
            c: load("C")?,
            m: load("M")?,
        };
        Ok(t)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    recipe: String,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    name: String,
    raw_content: String,
    poly: String,
}

/// Hex SHA-256 of the construction recipe.
pub fn recipe_hash() -> String {
    Sha256::digest(RECIPE.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

static TABLE: OnceLock<Result<CovariantTable>> = OnceLock::new();

fn load_or_build() -> Result<CovariantTable> {
    let path = std::env::var_os(CACHE_ENV).map(std::path::PathBuf::from);
    if let Some(p) = &path {
        if let Ok(t) = CovariantTable::load(p) {
            return Ok(t);
        }
    }
    let t = build_universal_table()?;
    if let Some(p) = &path {
        // A cache that cannot be written is not fatal.
        let _ = t.save(p);
    }
    Ok(t)
}

/// The process-wide table, built (or loaded from the cache) on first use.
pub fn table() -> Result<&'static CovariantTable> {
    TABLE.get_or_init(load_or_build).as_ref().map_err(Clone::clone)
}

/// Coefficients `(a0, ..., a5)` of the homogenization of a quintic.
pub fn quintic_coefficients<F: Field>(g: &UniPoly<F>) -> Result<[F::Element; 6]> {
    match g.degree() {
        Some(5) => Ok(std::array::from_fn(|k| g.coeff(5 - k))),
        d => Err(Error::Degree { expected: 5, found: d.unwrap_or(0) }),
    }
}

fn evaluate<F: Field>(field: &F, entry: &Covariant, a: &[F::Element; 6]) -> MultiPoly<F> {
    let names = coefficient_symbols();
    let values: Vec<(&str, F::Element)> = names.iter().zip(a.iter()).map(|(n, v)| (*n, v.clone())).collect();
    entry.poly.specialize_into(field, |c| field.from_int(c), &values)
}

fn evaluate_constant<F: Field>(field: &F, entry: &Covariant, a: &[F::Element; 6]) -> F::Element {
    evaluate(field, entry, a).as_constant().expect("order-0 entry evaluates to a constant")
}

/// Evaluates a named covariant at a quintic and sets `y = 1`.
pub fn covariant_at<F: Field>(table: &CovariantTable, name: &str, g: &UniPoly<F>) -> Result<UniPoly<F>> {
    let a = quintic_coefficients(g)?;
    let entry = table.get(name).ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
    let p = evaluate(g.field(), entry, &a).substitute("y", &MultiPoly::one(g.field()));
    UniPoly::from_multi(&p, "x").map(|u| u.with_var(g.var()))
}

/// Values of the invariants of one concrete quintic.
/// `disc(a0 x^5 + ... + a5) = DISC_OVER_DELTA · Δ` in Z[a0..a5].
pub const DISC_OVER_DELTA: i64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinticInvariants<F: Field> {
    pub field: F,
    pub a: F::Element,
    pub b: F::Element,
    pub c: F::Element,
    pub delta: F::Element,
    pub m: F::Element,
    /// Δ ≠ 0.
    pub disc_ok: bool,
}

/// δ = 25Δ/A², q = A³/(8M).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteInvariants<F: Field> {
    pub delta: F::Element,
    pub q: F::Element,
}

/// Invariants of `g`, homogenized as-is (a0 is the leading coefficient).
pub fn invariants<F: Field>(g: &UniPoly<F>) -> Result<QuinticInvariants<F>> {
    let t = table()?;
    invariants_with(t, g)
}

pub fn invariants_with<F: Field>(t: &CovariantTable, g: &UniPoly<F>) -> Result<QuinticInvariants<F>> {
    let field = g.field();
    let a = quintic_coefficients(g)?;
    let delta = evaluate_constant(field, &t.delta, &a);
    Ok(QuinticInvariants {
        field: field.clone(),
        a: evaluate_constant(field, &t.a, &a),
        b: evaluate_constant(field, &t.b, &a),
        c: evaluate_constant(field, &t.c, &a),
        disc_ok: !field.is_zero(&delta),
        delta,
        m: evaluate_constant(field, &t.m, &a),
    })
}

/// The covariants i, H, j, k, τ of `g` as polynomials in its variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovariantForms<F: Field> {
    pub i: UniPoly<F>,
    pub h: UniPoly<F>,
    pub j: UniPoly<F>,
    pub k: UniPoly<F>,
    pub tau: UniPoly<F>,
}

pub fn covariant_forms<F: Field>(g: &UniPoly<F>) -> Result<CovariantForms<F>> {
    let t = table()?;
    Ok(CovariantForms {
        i: covariant_at(t, "i", g)?,
        h: covariant_at(t, "H", g)?,
        j: covariant_at(t, "j", g)?,
        k: covariant_at(t, "k", g)?,
        tau: covariant_at(t, "tau", g)?,
    })
}

pub fn absolute_invariants<F: Field>(inv: &QuinticInvariants<F>) -> Result<AbsoluteInvariants<F>> {
    let f = &inv.field;
    if f.is_zero(&inv.a) {
        return Err(Error::NotDefined("A = 0".into()));
    }
    if f.is_zero(&inv.m) {
        return Err(Error::NotDefined("M = 0".into()));
    }
    let delta = f.div(&f.mul(&f.from_i64(25), &inv.delta), &f.mul(&inv.a, &inv.a)).unwrap();
    let q = f.div(&f.pow(&inv.a, 3), &f.mul(&f.from_i64(8), &inv.m)).unwrap();
    Ok(AbsoluteInvariants { delta, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formparse::{parse_element, parse_univariate};
    use crate::poly::discriminant;
    use crate::rings::{rat, PrimeField, RationalField, RationalFunctionField};

    fn q(text: &str) -> UniPoly<RationalField> {
        parse_univariate(text, &RationalField, "x").unwrap()
    }

    #[test]
    fn table_shape_and_contents() {
        let t = table().unwrap();
        for (e, (name, order, degree, divisor)) in t.entries().iter().zip(TABLE_SHAPE) {
            assert_eq!((e.name, e.order, e.degree, e.divisor), (name, order, degree, divisor));
            assert_eq!(e.poly.content(), BigInt::from(1), "{name}");
        }
        // The raw transvectants have exactly the stated divisors as content.
        for name in ["i", "H", "j", "A", "k", "tau", "B", "C"] {
            let e = t.get(name).unwrap();
            assert_eq!(e.raw_content, BigInt::from(e.divisor.abs()), "{name}");
        }
        assert!(t.check_identities());
        assert!(t.c.poly.num_terms() <= 6188);
    }

    #[test]
    fn odd_transvectant_vanishes() {
        let f = BinaryForm::generic(&IntegerRing, 5);
        assert!(transvectant(&f, &f, 1).form.is_zero());
    }

    #[test]
    fn discriminant_is_a_multiple_of_delta() {
        let t = table().unwrap();
        let g = t.f.poly.substitute("y", &MultiPoly::one(&IntegerRing));
        let d = discriminant(&g, "x").unwrap();
        let ratio = d.div_exact(&t.delta.poly).expect("Δ divides disc");
        assert_eq!(ratio.as_constant(), Some(BigInt::from(DISC_OVER_DELTA)));
    }

    #[test]
    fn first_example() {
        let inv = invariants(&q("x^5-2*x^4-10*x^3+23*x^2-6*x-4")).unwrap();
        assert_eq!(inv.a, rat(110578, 1));
        assert_eq!(inv.delta, rat(72352036, 1));
        assert_eq!(inv.m, parse_element("55159285100995067", &RationalField).unwrap());
        let abs = absolute_invariants(&inv).unwrap();
        assert_eq!(abs.delta, rat(25, 169));
        assert_eq!(abs.q, rat(9343841, 3049494563));
    }

    #[test]
    fn vanishing_a() {
        let inv = invariants(&q("x^5+25*x^4-x-1")).unwrap();
        assert_eq!(inv.a, rat(0, 1));
        assert!(matches!(absolute_invariants(&inv), Err(Error::NotDefined(_))));
        assert!(matches!(invariants(&q("x^4+1")), Err(Error::Degree { expected: 5, found: 4 })));
    }

    #[test]
    fn brioschi_over_f11() {
        let f = RationalFunctionField::new(PrimeField::new(11).unwrap(), "c");
        let g = parse_univariate("x^5+c*x^3+c^2*x-c^2", &f, "x").unwrap();
        let abs = absolute_invariants(&invariants(&g).unwrap()).unwrap();
        assert_eq!(abs.delta, f.from_base(9));
        assert_eq!(abs.q, parse_element("5*(c-1)/(2*c+5)", &f).unwrap());
    }

    #[test]
    fn covariants_of_example() {
        let g = q("x^5-2*x^4-10*x^3+23*x^2-6*x-4");
        let c = covariant_forms(&g).unwrap();
        assert_eq!(c.i.degree(), Some(2));
        assert_eq!(c.k.degree(), Some(4));
        assert_eq!(g.gcd(&c.i).degree(), Some(0));
        let x5 = q("x^5");
        assert!(covariant_forms(&x5).unwrap().i.is_zero());
    }

    #[test]
    fn cache_round_trip() {
        let t = table().unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.json");
        t.save(&path).unwrap();
        assert_eq!(&CovariantTable::load(&path).unwrap(), t);
        std::fs::write(&path, "{\"recipe\":\"stale\",\"entries\":[]}").unwrap();
        assert!(matches!(CovariantTable::load(&path), Err(Error::Cache(_))));
    }
}
