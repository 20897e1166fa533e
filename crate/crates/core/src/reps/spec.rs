use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Names one of the built-in representation families.
///
/// String form: `so:5`, `u:3`, `su:3`, `sp:2`, `sp:2+sp1`, `g2`, `spin7`,
/// `spin9`, `adjoint-so:4`, `adjoint-su:3`, `soxso:3,3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepSpec {
    So(usize),
    U(usize),
    Su(usize),
    Sp(usize),
    SpSp1(usize),
    G2,
    Spin7,
    Spin9,
    AdjointSo(usize),
    AdjointSu(usize),
    SoxSo(usize, usize),
}

impl RepSpec {
    /// Checks the family's parameter domain.
    pub fn validate(self) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidParameter(format!("{self}: {msg}")));
        match self {
            RepSpec::So(n) if n < 2 => bad("requires n >= 2"),
            RepSpec::U(m) if m < 1 => bad("requires m >= 1"),
            RepSpec::Su(m) if m < 2 => bad("requires m >= 2"),
            RepSpec::Sp(m) | RepSpec::SpSp1(m) if m < 1 => bad("requires m >= 1"),
            RepSpec::AdjointSo(k) if k < 3 => bad("requires k >= 3"),
            RepSpec::AdjointSu(k) if k < 2 => bad("requires k >= 2"),
            RepSpec::SoxSo(p, q) if p < 3 || q < 3 => bad("requires p, q >= 3"),
            _ => Ok(self),
        }
    }

    /// Dimension of the representation space.
    pub fn n(self) -> usize {
        match self {
            RepSpec::So(n) => n,
            RepSpec::U(m) | RepSpec::Su(m) => 2 * m,
            RepSpec::Sp(m) | RepSpec::SpSp1(m) => 4 * m,
            RepSpec::G2 => 7,
            RepSpec::Spin7 => 8,
            RepSpec::Spin9 => 16,
            RepSpec::AdjointSo(k) => k * (k - 1) / 2,
            RepSpec::AdjointSu(k) => k * k - 1,
            RepSpec::SoxSo(p, q) => p * q,
        }
    }

    /// Classical dimension of the algebra.
    pub fn expected_dim(self) -> usize {
        let so = |n: usize| n * (n - 1) / 2;
        match self {
            RepSpec::So(n) | RepSpec::AdjointSo(n) => so(n),
            RepSpec::U(m) => m * m,
            RepSpec::Su(m) | RepSpec::AdjointSu(m) => m * m - 1,
            RepSpec::Sp(m) => m * (2 * m + 1),
            RepSpec::SpSp1(m) => m * (2 * m + 1) + 3,
            RepSpec::G2 => 14,
            RepSpec::Spin7 => 21,
            RepSpec::Spin9 => 36,
            RepSpec::SoxSo(p, q) => so(p) + so(q),
        }
    }
}

fn parse_count(token: &str, whole: &str) -> Result<usize> {
    token.trim().parse().map_err(|_| Error::Parse(format!("bad parameter '{token}' in '{whole}'")))
}

impl FromStr for RepSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let spec = match s {
            "g2" => RepSpec::G2,
            "spin7" => RepSpec::Spin7,
            "spin9" => RepSpec::Spin9,
            _ => {
                let (family, arg) = s.split_once(':').ok_or_else(|| Error::Parse(format!("unknown algebra '{s}'")))?;
                match family {
                    "so" => RepSpec::So(parse_count(arg, s)?),
                    "u" => RepSpec::U(parse_count(arg, s)?),
                    "su" => RepSpec::Su(parse_count(arg, s)?),
                    "sp" => match arg.strip_suffix("+sp1") {
                        Some(m) => RepSpec::SpSp1(parse_count(m, s)?),
                        None => RepSpec::Sp(parse_count(arg, s)?),
                    },
                    "adjoint-so" => RepSpec::AdjointSo(parse_count(arg, s)?),
                    "adjoint-su" => RepSpec::AdjointSu(parse_count(arg, s)?),
                    "soxso" => {
                        let (p, q) = arg
                            .split_once(',')
                            .ok_or_else(|| Error::Parse(format!("expected 'soxso:p,q', got '{s}'")))?;
                        RepSpec::SoxSo(parse_count(p, s)?, parse_count(q, s)?)
                    }
                    other => return Err(Error::Parse(format!("unknown algebra family '{other}'"))),
                }
            }
        };
        spec.validate()
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::So(n) => write!(f, "so:{n}"),
            RepSpec::U(m) => write!(f, "u:{m}"),
            RepSpec::Su(m) => write!(f, "su:{m}"),
            RepSpec::Sp(m) => write!(f, "sp:{m}"),
            RepSpec::SpSp1(m) => write!(f, "sp:{m}+sp1"),
            RepSpec::G2 => write!(f, "g2"),
            RepSpec::Spin7 => write!(f, "spin7"),
            RepSpec::Spin9 => write!(f, "spin9"),
            RepSpec::AdjointSo(k) => write!(f, "adjoint-so:{k}"),
            RepSpec::AdjointSu(k) => write!(f, "adjoint-su:{k}"),
            RepSpec::SoxSo(p, q) => write!(f, "soxso:{p},{q}"),
        }
    }
}

impl Serialize for RepSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RepSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
