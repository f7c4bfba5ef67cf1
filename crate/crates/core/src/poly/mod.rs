//! Sparse multivariate polynomials, dense univariate wrappers, resultants.

mod multipoly;
mod resultant;
mod univariate;

pub use multipoly::{Monomial, MultiPoly};
pub use resultant::{bareiss_determinant, discriminant, resultant};
pub use univariate::UniPoly;

/// Global variable order. Polynomials keep their variables sorted by this
/// list so canonical forms are reproducible; symbols not listed (ring
/// parameters, ad-hoc names) sort after it, alphabetically.
pub const SYMBOL_ORDER: &[&str] = &[
    "x", "y", "x1", "y1", "x2", "y2", "a0", "a1", "a2", "a3", "a4", "a5", "z", "u", "A", "Delta",
    "M", "delta", "q", "d", "D",
];

pub fn is_reserved_symbol(s: &str) -> bool {
    SYMBOL_ORDER.contains(&s)
}

pub(crate) fn symbol_key(s: &str) -> (usize, &str) {
    match SYMBOL_ORDER.iter().position(|&k| k == s) {
        Some(i) => (i, ""),
        None => (SYMBOL_ORDER.len(), s),
    }
}

pub(crate) fn sort_symbols(vars: &mut Vec<String>) {
    vars.sort_by(|a, b| symbol_key(a).cmp(&symbol_key(b)));
    vars.dedup();
}

/// The coefficient symbols `a0..a5` of the generic quintic.
pub fn coefficient_symbols() -> [&'static str; 6] {
    ["a0", "a1", "a2", "a3", "a4", "a5"]
}
