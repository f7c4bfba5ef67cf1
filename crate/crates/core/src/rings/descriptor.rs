use crate::error::{Error, Result};
use crate::poly::is_reserved_symbol;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    RationalField,
    PrimeField,
    RationalFunctionField,
}

/// Selects a coefficient domain: Q, F_p (p prime, p not in {2,3,5}), or a
/// one-parameter rational function field over either. The characteristic
/// and nesting rules are checked here, once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingDescriptor {
    kind: RingKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<Box<RingDescriptor>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parameter: Option<String>,
}

impl RingDescriptor {
    pub fn rational() -> Self {
        RingDescriptor { kind: RingKind::RationalField, p: None, base: None, parameter: None }
    }

    pub fn prime(p: u64) -> Result<Self> {
        super::PrimeField::new(p)?;
        Ok(RingDescriptor { kind: RingKind::PrimeField, p: Some(p), base: None, parameter: None })
    }

    pub fn function_field(base: RingDescriptor, parameter: &str) -> Result<Self> {
        if base.kind == RingKind::RationalFunctionField {
            return Err(Error::NestedFunctionField);
        }
        let valid = parameter.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && parameter.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid || is_reserved_symbol(parameter) {
            return Err(Error::InvalidParameter(parameter.to_string()));
        }
        Ok(RingDescriptor {
            kind: RingKind::RationalFunctionField,
            p: base.p,
            base: Some(Box::new(base)),
            parameter: Some(parameter.to_string()),
        })
    }

    /// Builds a descriptor from CLI-style flags: `ring` is `q` or `fp`.
    pub fn from_flags(ring: &str, p: Option<u64>, param: Option<&str>) -> Result<Self> {
        let base = match (ring, p) {
            ("q", None) => Self::rational(),
            ("q", Some(_)) => return Err(Error::Usage("--p is only valid with --ring fp".into())),
            ("fp", Some(p)) => Self::prime(p)?,
            ("fp", None) => return Err(Error::Usage("--ring fp requires --p".into())),
            (other, _) => return Err(Error::Usage(format!("unknown ring '{other}' (expected q or fp)"))),
        };
        match param {
            Some(name) => Self::function_field(base, name),
            None => Ok(base),
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// The characteristic; 0 for Q and Q(c).
    pub fn characteristic(&self) -> u64 {
        self.p.unwrap_or(0)
    }

    pub fn base(&self) -> Option<&RingDescriptor> {
        self.base.as_deref()
    }

    pub fn parameter(&self) -> Option<&str> {
        self.parameter.as_deref()
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::RationalField => write!(f, "Q"),
            RingKind::PrimeField => write!(f, "F_{}", self.p.unwrap()),
            RingKind::RationalFunctionField => {
                write!(f, "{}({})", self.base.as_ref().unwrap(), self.parameter.as_ref().unwrap())
            }
        }
    }
}

/// Runs `$body` with `$field` bound to the concrete field type selected by
/// a [`RingDescriptor`]. The body is monomorphized once per field type.
#[macro_export]
macro_rules! with_field {
    ($desc:expr, $field:ident => $body:expr) => {{
        let desc: &$crate::rings::RingDescriptor = $desc;
        match (desc.kind(), desc.base().map(|b| b.kind())) {
            ($crate::rings::RingKind::RationalField, _) => {
                let $field = $crate::rings::RationalField;
                $body
            }
            ($crate::rings::RingKind::PrimeField, _) => {
                let $field = $crate::rings::PrimeField::new(desc.characteristic())
                    .expect("descriptor validated");
                $body
            }
            ($crate::rings::RingKind::RationalFunctionField, Some($crate::rings::RingKind::PrimeField)) => {
                let $field = $crate::rings::RationalFunctionField::new(
                    $crate::rings::PrimeField::new(desc.characteristic()).expect("descriptor validated"),
                    desc.parameter().unwrap(),
                );
                $body
            }
            ($crate::rings::RingKind::RationalFunctionField, _) => {
                let $field = $crate::rings::RationalFunctionField::new(
                    $crate::rings::RationalField,
                    desc.parameter().unwrap(),
                );
                $body
            }
        }
    }};
}
