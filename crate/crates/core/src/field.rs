//! Symbolic ground-field descriptors.
//!
//! No field arithmetic happens anywhere in the crate: every decision only
//! depends on which class of field the caller asks about.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldClass {
    Real,
    RationalQ,
    /// The `p`-adic numbers `Q_p`.
    Padic { p: u64 },
    /// The finite field with `q` elements.
    Finite { q: u64 },
    /// An algebraically closed field of characteristic zero.
    AlgClosedChar0,
    /// `C(a_1, ..., a_k, b_1, ..., b_k)`: rational functions in `k` pairs of variables.
    RationalFunctionOverC { pairs: u32 },
}

impl FieldClass {
    pub fn padic(p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidInput(format!("Q_p needs a prime p, got {p}")));
        }
        Ok(FieldClass::Padic { p })
    }

    pub fn finite(q: u64) -> Result<Self> {
        if q >= 2 && matches!(arith::prime_power(q), Ok(Some(_))) {
            Ok(FieldClass::Finite { q })
        } else {
            Err(Error::InvalidInput(format!(
                "a finite field needs a prime power order, got {q}"
            )))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldClass::Finite { q } => arith::prime_power(q)
                .ok()
                .flatten()
                .map(|w| w.p)
                .unwrap_or(q),
            _ => 0,
        }
    }

    /// Number fields and `R`, where every Brauer class of prime order `p` has index `p`.
    pub fn is_global_or_real(&self) -> bool {
        matches!(self, FieldClass::Real | FieldClass::RationalQ)
    }
}

impl fmt::Display for FieldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldClass::Real => write!(f, "real"),
            FieldClass::RationalQ => write!(f, "Q"),
            FieldClass::Padic { p } => write!(f, "Qp:{p}"),
            FieldClass::Finite { q } => write!(f, "Fq:{q}"),
            FieldClass::AlgClosedChar0 => write!(f, "algclosed0"),
            FieldClass::RationalFunctionOverC { pairs } => write!(f, "funcfield:{pairs}"),
        }
    }
}

impl FromStr for FieldClass {
    type Err = Error;

    /// Flat syntax: `real | Q | Qp:<p> | Fq:<q> | algclosed0 | funcfield:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unrecognised field class '{s}'"));
        let parse_num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match s.trim() {
            "real" | "R" => Ok(FieldClass::Real),
            "Q" | "rational" => Ok(FieldClass::RationalQ),
            "algclosed0" => Ok(FieldClass::AlgClosedChar0),
            other => {
                let (head, tail) = other.split_once(':').ok_or_else(bad)?;
                match head {
                    "Qp" => FieldClass::padic(parse_num(tail)?),
                    "Fq" => FieldClass::finite(parse_num(tail)?),
                    "funcfield" => {
                        let pairs = u32::try_from(parse_num(tail)?).map_err(|_| bad())?;
                        Ok(FieldClass::RationalFunctionOverC { pairs })
                    }
                    _ => Err(bad()),
                }
            }
        }
    }
}
