//! Command-line front end.
//!
//! Exit codes: 0 success, 1 mathematical failure (a check or certificate
//! did not hold, or the input is degenerate), 2 usage or parse error.

use crate::error::Error;
use crate::formparse::{parse_element, parse_poly, parse_univariate};
use crate::galois::{group_label, irreducible, resolvent_two_roots, GroupName, Reducible};
use crate::invariants::{absolute_invariants, covariant_forms, invariants};
use crate::poly::UniPoly;
use crate::reduction::{certify_same_field, reduce_extension, squared_roots, tschirnhausen_minpoly, z_element};
use crate::rings::{is_square, PrimeField, RationalField, RationalFunctionField, Ring, RingDescriptor};
use crate::templates::{specialize, verify_templates, TemplateId};
use crate::transvect::{transvectant, BinaryForm};
use crate::with_field;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "quintic", version, about = "Exact invariants, generic polynomials and Galois certificates for quintics")]
struct Cli {
    #[command(flatten)]
    ring: RingArgs,
    /// Emit a single JSON document.
    #[arg(long, global = true)]
    json: bool,
    /// Make input polynomials (and specialize output) monic.
    #[arg(long, global = true)]
    monic: bool,
    /// Variable of input polynomials (inferred when omitted).
    #[arg(long, global = true)]
    var: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RingArgs {
    /// Coefficient field: q (rationals) or fp (prime field, needs --p).
    #[arg(long, global = true, default_value = "q")]
    ring: String,
    /// Characteristic for --ring fp (prime, at least 7).
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Parameter of a rational function field over the base field.
    #[arg(long, global = true)]
    param: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// A, B, C, Delta, M and the absolute invariants delta, q.
    Invariants { poly: String },
    /// The covariants i, H, j, k, tau.
    Covariants { poly: String },
    /// A generic polynomial (P1_S5, P2_S5, P1_A5, P2_A5) at name=value bindings.
    Specialize { template: String, bindings: Vec<String> },
    /// Reduce a quintic extension to a specialization and print the certificate.
    Reduce {
        poly: String,
        /// Skip the Galois-group evidence.
        #[arg(long)]
        no_galois: bool,
    },
    /// Whether two quintics define the same stem field (by the pipeline's elements).
    Certify { g: String, h: String },
    /// Degree-10 resolvent of sums of two roots.
    Resolvent2 { poly: String },
    /// Discriminant with a square witness.
    Disc { poly: String },
    /// Transvectant (f, g)^m of binary forms in x, y.
    Transvect { f: String, g: String, m: u32 },
    /// Check the generic polynomials against sampled quintics over Q.
    VerifyTemplates {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Reproduce the worked examples.
    Selftest,
}

/// Outcome of a command: output text plus whether its checks held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::DivisionUnsupported { .. }
            | Error::UnknownSymbol(_)
            | Error::UnboundSymbol(_)
            | Error::Usage(_)
            | Error::NotPrime(_)
            | Error::ExcludedCharacteristic(_)
            | Error::NestedFunctionField
            | Error::InvalidParameter(_)
    )
}

pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_to(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`], writing to the given streams.
pub fn run_to(argv: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let desc = match RingDescriptor::from_flags(&cli.ring.ring, cli.ring.p, cli.ring.param.as_deref()) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match dispatch(&cli, &desc) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text.trim_end());
            if o.ok {
                0
            } else {
                1
            }
        }
        Err((e, input)) => {
            let _ = writeln!(err, "error: {e}");
            if let (Error::Syntax { pos, .. } | Error::DivisionUnsupported { pos }, Some(text)) = (&e, input) {
                let _ = writeln!(err, "  {text}\n  {}^", " ".repeat(*pos));
            }
            if usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

type CmdResult = std::result::Result<Outcome, (Error, Option<String>)>;

fn plain<T>(r: crate::Result<T>) -> std::result::Result<T, (Error, Option<String>)> {
    r.map_err(|e| (e, None))
}

fn dispatch(cli: &Cli, desc: &RingDescriptor) -> CmdResult {
    match &cli.command {
        Command::Selftest => Ok(selftest(cli.json)),
        Command::VerifyTemplates { samples, seed } => {
            if *desc != RingDescriptor::rational() {
                return Err((Error::Usage("verify-templates samples quintics over Q only".into()), None));
            }
            let rep = plain(verify_templates(*samples, *seed))?;
            let text = if cli.json {
                to_json(&rep)
            } else {
                format!(
                    "samples: {}\npassed: {}\nfailed: {}\nskipped: {}\np1 fit matches: {}\nresult: {}",
                    rep.samples.len(),
                    rep.passed,
                    rep.failed,
                    rep.skipped,
                    rep.p1_fit_matches,
                    if rep.all_passed() { "pass" } else { "FAIL" }
                )
            };
            Ok(Outcome { text, ok: rep.all_passed() })
        }
        _ => with_field!(desc, field => command_in(cli, &field)),
    }
}

/// Picks the polynomial variable: `--var`, else the single free symbol of
/// the text, else `x`.
fn infer_var(text: &str, param: Option<&str>) -> String {
    let mut syms = std::collections::BTreeSet::new();
    let mut cur = String::new();
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            if cur.is_empty() && ch.is_ascii_digit() {
                continue;
            }
            cur.push(ch);
        } else if !cur.is_empty() {
            if Some(cur.as_str()) != param {
                syms.insert(std::mem::take(&mut cur));
            }
            cur.clear();
        }
    }
    if syms.len() == 1 {
        syms.into_iter().next().unwrap()
    } else {
        "x".to_string()
    }
}

fn read_poly<F: Reducible>(cli: &Cli, field: &F, text: &str) -> std::result::Result<UniPoly<F>, (Error, Option<String>)> {
    let var = cli.var.clone().unwrap_or_else(|| infer_var(text, cli.ring.param.as_deref()));
    let p = parse_univariate(text, field, &var).map_err(|e| (e, Some(text.to_string())))?;
    Ok(if cli.monic { p.monic() } else { p })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn command_in<F: Reducible>(cli: &Cli, field: &F) -> CmdResult {
    let fmt = |e: &F::Element| field.format(e);
    match &cli.command {
        Command::Invariants { poly } => {
            let g = read_poly(cli, field, poly)?;
            let inv = plain(invariants(&g))?;
            let abs = absolute_invariants(&inv).ok();
            let delta = abs.as_ref().map(|a| fmt(&a.delta));
            let q = abs.as_ref().map(|a| fmt(&a.q));
            let text = if cli.json {
                to_json(&json!({
                    "A": fmt(&inv.a), "B": fmt(&inv.b), "C": fmt(&inv.c),
                    "Delta": fmt(&inv.delta), "M": fmt(&inv.m), "delta": delta, "q": q,
                }))
            } else {
                let undefined = || "undefined (A*M = 0)".to_string();
                format!(
                    "A = {}\nB = {}\nC = {}\nDelta = {}\nM = {}\ndelta = {}\nq = {}",
                    fmt(&inv.a),
                    fmt(&inv.b),
                    fmt(&inv.c),
                    fmt(&inv.delta),
                    fmt(&inv.m),
                    delta.unwrap_or_else(undefined),
                    q.unwrap_or_else(undefined)
                )
            };
            Ok(Outcome::ok(text))
        }
        Command::Covariants { poly } => {
            let g = read_poly(cli, field, poly)?;
            let c = plain(covariant_forms(&g))?;
            let rows = [("i", &c.i), ("H", &c.h), ("j", &c.j), ("k", &c.k), ("tau", &c.tau)];
            let text = if cli.json {
                to_json(&rows.iter().map(|(n, p)| (n.to_string(), p.to_string())).collect::<BTreeMap<_, _>>())
            } else {
                rows.iter().map(|(n, p)| format!("{n} = {p}")).collect::<Vec<_>>().join("\n")
            };
            Ok(Outcome::ok(text))
        }
        Command::Specialize { template, bindings } => {
            let id: TemplateId = template.parse().map_err(|e| (e, None))?;
            let mut values = Vec::new();
            for b in bindings {
                let (name, value) =
                    b.split_once('=').ok_or_else(|| (Error::Usage(format!("binding '{b}' is not name=value")), None))?;
                let v = parse_element(value.trim(), field).map_err(|e| (e, Some(value.trim().to_string())))?;
                values.push((name.trim().to_string(), v));
            }
            let refs: Vec<(&str, F::Element)> = values.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
            let p = plain(specialize(id, field, &refs, cli.monic))?;
            let text = if cli.json {
                to_json(&json!({ "template": id.to_string(), "ring": field.descriptor(), "polynomial": p.to_string() }))
            } else {
                p.to_string()
            };
            Ok(Outcome::ok(text))
        }
        Command::Reduce { poly, no_galois } => {
            let g = read_poly(cli, field, poly)?;
            let mut cert = plain(reduce_extension(&g))?;
            if !no_galois {
                cert.galois = group_label(&cert.input).ok();
            }
            let ok = cert.minpoly_match;
            let text = if cli.json {
                to_json(&cert.to_json())
            } else {
                let mut s = format!("input: {}\n", cert.input);
                match &cert.preliminary {
                    Some(p) => s += &format!("preliminary: x -> {} (candidate {})\ntransformed: {}\n", p.t, p.candidate, cert.transformed),
                    None => s += "preliminary: none\n",
                }
                let inv = &cert.invariants;
                s += &format!(
                    "A = {}\nDelta = {}\nM = {}\ndelta = {}\nq = {}\n",
                    fmt(&inv.a),
                    fmt(&inv.delta),
                    fmt(&inv.m),
                    fmt(&cert.delta),
                    fmt(&cert.q)
                );
                match &cert.d {
                    Some(d) => s += &format!("mode: A5 (d = {})\n", fmt(d)),
                    None => s += "mode: S5\n",
                }
                s += &format!("specialized: {}\nminpoly match: {}\ndisc square: {}\n", cert.specialized, cert.minpoly_match, cert.disc_square);
                if let Some(l) = &cert.galois {
                    s += &format!("galois: {}\n", l.value);
                }
                s
            };
            Ok(Outcome { text, ok })
        }
        Command::Certify { g, h } => {
            let g = read_poly(cli, field, g)?;
            let hp = read_poly(cli, field, h)?;
            let same = certify_same_field(&g, &hp);
            let text = if cli.json { to_json(&json!({ "same_field": same })) } else { format!("same field: {same}") };
            Ok(Outcome { text, ok: same })
        }
        Command::Resolvent2 { poly } => {
            let g = read_poly(cli, field, poly)?;
            let r = plain(resolvent_two_roots(&g))?;
            let irr = irreducible(&r);
            let text = if cli.json {
                to_json(&json!({ "resolvent": r.to_string(), "irreducible": irr }))
            } else {
                format!("{r}\nirreducible: {}", to_json(&irr).trim_matches('"'))
            };
            Ok(Outcome::ok(text))
        }
        Command::Disc { poly } => {
            let g = read_poly(cli, field, poly)?;
            let d = plain(g.discriminant())?;
            let w = is_square(field, &d);
            let text = if cli.json {
                to_json(&json!({ "disc": fmt(&d), "square_root": w.as_ref().map(fmt) }))
            } else {
                match &w {
                    Some(w) => format!("{}\nsquare: {}^2", fmt(&d), field.format_factor(w)),
                    None => format!("{}\nsquare: no", fmt(&d)),
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Transvect { f, g, m } => {
            let form = |t: &str| -> std::result::Result<BinaryForm<F>, (Error, Option<String>)> {
                let p = parse_poly(t, field, &["x", "y"]).map_err(|e| (e, Some(t.to_string())))?;
                BinaryForm::new(p).map_err(|e| (e, None))
            };
            let t = transvectant(&form(f)?, &form(g)?, *m);
            let text = if cli.json {
                to_json(&json!({
                    "order": t.form.order(),
                    "form": crate::formparse::format_poly(t.form.poly()),
                    "exceeded": t.exceeded
                }))
            } else {
                crate::formparse::format_poly(t.form.poly())
            };
            Ok(Outcome::ok(text))
        }
        Command::Selftest | Command::VerifyTemplates { .. } => unreachable!("dispatched before ring selection"),
    }
}

const EXAMPLE1: &str = "x^5-2*x^4-10*x^3+23*x^2-6*x-4";
const EXAMPLE2: &str = "x^5+25*x^4-x-1";
const EXAMPLE2_SQUARES: &str = "x^5-625*x^4-2*x^3+50*x^2+x-1";
const EXAMPLE1_TARGET: &str = "u^5+53018481246319976950/9299417089766560969*u^4+118978291635920447500/9299417089766560969*u^3\
                   +131644992415533125000/9299417089766560969*u^2+71941446489050000000/9299417089766560969*u\
                   +15555687740000000000/9299417089766560969";
const BRIOSCHI: &str = "x^5-10*c*x^3+45*c^2*x-c^2";
const BRIOSCHI_11: &str = "x^5+c*x^3+c^2*x-c^2";
const BRIOSCHI_TARGET: &str = "u^5+(5*c^2+3*c+5)/(2*c+5)^2*u^4-(3*c^2+3*c+4)/(2*c+5)^2*u^3-(4*c+5)/(2*c+5)^2*u^2\
                   -2*(c-5)*(c-1)/(2*c+5)^2*u+(3+3*c^2+5*c)/(2*c+5)^2";

#[derive(Clone, Debug, Serialize)]
pub struct SelftestCheck {
    pub example: &'static str,
    pub check: &'static str,
    pub pass: bool,
}

fn check(list: &mut Vec<SelftestCheck>, example: &'static str, check: &'static str, f: impl FnOnce() -> crate::Result<bool>) {
    let pass = f().unwrap_or(false);
    list.push(SelftestCheck { example, check, pass });
}

/// The worked examples as golden checks.
pub fn selftest_checks() -> Vec<SelftestCheck> {
    let q = RationalField;
    let qp = |t: &str, v: &str| parse_univariate(t, &q, v);
    let qe = |t: &str| parse_element(t, &q);
    let f11 = RationalFunctionField::new(PrimeField::new(11).unwrap(), "c");
    let qc = RationalFunctionField::new(RationalField, "c");
    let mut out = Vec::new();

    check(&mut out, "example1", "invariants", || {
        let inv = invariants(&qp(EXAMPLE1, "x")?)?;
        let abs = absolute_invariants(&inv)?;
        Ok(inv.a == qe("110578")?
            && inv.delta == qe("72352036")?
            && inv.m == qe("55159285100995067")?
            && abs.delta == qe("25/169")?
            && abs.q == qe("9343841/3049494563")?)
    });
    check(&mut out, "example1", "reduce to A5 target", || {
        let cert = reduce_extension(&qp(EXAMPLE1, "x")?)?;
        Ok(cert.minpoly_match && cert.d == Some(qe("5/13")?) && cert.specialized == qp(EXAMPLE1_TARGET, "u")?)
    });
    check(&mut out, "example1", "same field as target", || Ok(certify_same_field(&qp(EXAMPLE1, "x")?, &qp(EXAMPLE1_TARGET, "u")?)));
    check(&mut out, "example1", "galois A5", || Ok(group_label(&qp(EXAMPLE1, "x")?)?.value == GroupName::A5));

    check(&mut out, "example2", "A = 0", || Ok(invariants(&qp(EXAMPLE2, "x")?)?.a == q.zero()));
    check(&mut out, "example2", "squared roots", || Ok(squared_roots(&qp(EXAMPLE2, "x")?)? == qp(EXAMPLE2_SQUARES, "x")?));
    check(&mut out, "example2", "invariants of squares", || {
        let g = qp(EXAMPLE2_SQUARES, "x")?;
        let inv = invariants(&g)?;
        let abs = absolute_invariants(&inv)?;
        // M (and so q) is checked through the z minimal polynomial.
        let (n, d) = z_element(&g)?;
        let zmin = tschirnhausen_minpoly(&g, &n, &d)?.with_var("z");
        let p1 = crate::templates::specialize_p1(&inv, true)?;
        Ok(inv.a == qe("1247920128")?
            && inv.delta == qe("-833155976134656")?
            && abs.delta == qe("-2554525/190992984")?
            && zmin == p1)
    });
    check(&mut out, "example2", "reduce", || {
        let cert = reduce_extension(&qp(EXAMPLE2, "x")?)?;
        Ok(cert.minpoly_match && !cert.a5_mode && cert.preliminary.is_some_and(|p| p.t == "x^2"))
    });
    check(&mut out, "example2", "galois S5", || Ok(group_label(&qp(EXAMPLE2, "x")?)?.value == GroupName::S5));

    check(&mut out, "brioschi", "absolute invariants over Q(c)", || {
        let abs = absolute_invariants(&invariants(&parse_univariate(BRIOSCHI, &qc, "x")?)?)?;
        Ok(abs.delta == parse_element("1/5", &qc)? && abs.q == parse_element("25/8192*(1728*c-1)/(1764*c-1)", &qc)?)
    });
    check(&mut out, "brioschi", "absolute invariants over F11(c)", || {
        let abs = absolute_invariants(&invariants(&parse_univariate(BRIOSCHI_11, &f11, "x")?)?)?;
        Ok(abs.delta == f11.from_i64(9)
            && is_square(&f11, &abs.delta) == Some(f11.from_i64(3))
            && abs.q == parse_element("5*(c-1)/(2*c+5)", &f11)?)
    });
    check(&mut out, "brioschi", "A5 target", || {
        let q4 = parse_element("5*(c-1)/(2*c+5)", &f11)?;
        let p = specialize(TemplateId::P2A5, &f11, &[("d", f11.from_i64(3)), ("q", q4)], true)?;
        Ok(p == parse_univariate(BRIOSCHI_TARGET, &f11, "u")?)
    });
    check(&mut out, "brioschi", "discriminants", || {
        let b = parse_univariate(BRIOSCHI_11, &f11, "x")?;
        let e = parse_univariate(BRIOSCHI_TARGET, &f11, "u")?;
        let cleared = e.scale(&parse_element("(2*c+5)^2", &f11)?);
        Ok(b.discriminant()? == parse_element("c^8*(c-1)^2", &f11)?
            && cleared.discriminant()? == parse_element("2^4*(c-1)^4*c^4*(c^3+c^2-5*c-1)^2", &f11)?
            && is_square(&f11, &b.discriminant()?).is_some()
            && is_square(&f11, &e.discriminant()?).is_some())
    });
    check(&mut out, "brioschi", "galois A5", || {
        let b = parse_univariate(BRIOSCHI_11, &f11, "x")?;
        let e = parse_univariate(BRIOSCHI_TARGET, &f11, "u")?;
        Ok(group_label(&b)?.value == GroupName::A5 && group_label(&e)?.value == GroupName::A5)
    });
    out
}

fn selftest(json: bool) -> Outcome {
    let checks = selftest_checks();
    let ok = checks.iter().all(|c| c.pass);
    let text = if json {
        let mut table: BTreeMap<&str, BTreeMap<&str, bool>> = BTreeMap::new();
        for c in &checks {
            table.entry(c.example).or_default().insert(c.check, c.pass);
        }
        to_json(&json!({ "examples": table, "passed": ok }))
    } else {
        let mut s: String = checks
            .iter()
            .map(|c| format!("{:<5} {:<9} {}\n", if c.pass { "pass" } else { "FAIL" }, c.example, c.check))
            .collect();
        s += if ok { "all checks passed" } else { "some checks failed" };
        s
    };
    Outcome { text, ok }
}
