use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex of a graph, or equivalently a variable of the polynomial ring.
///
/// Identifiers are `(base, level)` pairs. Input graphs and ideals live at
/// level 1; the graphs `G_k` and polarized ideals spread each base index over
/// levels `1..=k`, so both share a single namespace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub base: u32,
    pub level: u32,
}

impl Var {
    pub fn new(base: u32, level: u32) -> Var {
        assert!(base > 0 && level > 0, "vertex ids are positive");
        Var { base, level }
    }

    /// Level-1 identifier, the common case for input graphs.
    pub fn plain(base: u32) -> Var {
        Var::new(base, 1)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}.{}", self.base, self.level)
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let bad = || Error::Input(format!("malformed vertex id `{s}`"));
        let (b, p) = match s.split_once('.') {
            Some((b, p)) => (b, p),
            None => (s, "1"),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
        if !digits(b) || !digits(p) {
            return Err(bad());
        }
        let base: u32 = b.parse().map_err(|_| bad())?;
        let level: u32 = p.parse().map_err(|_| bad())?;
        if base == 0 || level == 0 {
            return Err(bad());
        }
        Ok(Var { base, level })
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Var, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
