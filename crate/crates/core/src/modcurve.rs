//! Data about the modular curves `X_1(N)`: the 2- and 3-gonal levels, the
//! decomposition of `J_1(N)` with its `L(A, 1)` vanishing flags, and the
//! genus formula used to cross-check both.
//!
//! The decomposition table is shipped as `data/j1_decomposition.txt` and
//! parsed on first use; see `docs/formats.md` for the record layout.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weierstrass::prime_factors;

const GENUS_ZERO: &[u64] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12];
const GENUS_ONE: &[u64] = &[11, 14, 15];
const GENUS_TWO: &[u64] = &[13, 16, 18];
const TRIGONAL_ONLY: &[u64] = &[20];

const EMBEDDED_TABLE: &str = include_str!("../data/j1_decomposition.txt");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModCurveError {
    #[error("no gonality data for degree {0}; supported degrees are 1, 2, 3")]
    UnsupportedDegree(u32),
    #[error("genus formula requires N >= 5, got {0}")]
    LevelTooSmall(u64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("could not read table: {0}")]
    Io(String),
}

/// Levels `N` for which `X_1(N)` has gonality at most 1, 2 and 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GonalityTable {
    pub one_gonal: Vec<u64>,
    pub two_gonal: Vec<u64>,
    pub three_gonal: Vec<u64>,
}

impl GonalityTable {
    pub fn standard() -> Self {
        let one_gonal = GENUS_ZERO.to_vec();
        let mut two_gonal = one_gonal.clone();
        two_gonal.extend_from_slice(GENUS_ONE);
        two_gonal.extend_from_slice(GENUS_TWO);
        two_gonal.sort_unstable();
        let mut three_gonal = two_gonal.clone();
        three_gonal.extend_from_slice(TRIGONAL_ONLY);
        three_gonal.sort_unstable();
        GonalityTable {
            one_gonal,
            two_gonal,
            three_gonal,
        }
    }

    /// Levels whose curve admits a map of degree `d` to the line.
    pub fn list(&self, d: u32) -> Result<&[u64], ModCurveError> {
        match d {
            1 => Ok(&self.one_gonal),
            2 => Ok(&self.two_gonal),
            3 => Ok(&self.three_gonal),
            _ => Err(ModCurveError::UnsupportedDegree(d)),
        }
    }
}

/// `Gon(X_1(N)) > d`.
pub fn gonality_exceeds(level: u64, d: u32) -> Result<bool, ModCurveError> {
    let table = GonalityTable::standard();
    Ok(!table.list(d)?.contains(&level))
}

/// Genus of `X_1(N)` for `N >= 5`, where `-I` is not in `Gamma_1(N)` and there
/// are no elliptic points: `g = 1 + mu/12 - c/2` with `mu` the index of the
/// image in `PSL_2(Z)` and `c` the number of cusps.
pub fn genus_x1(level: u64) -> Result<u64, ModCurveError> {
    if level < 5 {
        return Err(ModCurveError::LevelTooSmall(level));
    }
    let n = level as i128;
    let mut mu = Ratio::from_integer(n * n) / 2;
    for p in prime_factors(level) {
        let p = p as i128;
        mu *= Ratio::from_integer(1) - Ratio::new(1, p * p);
    }
    let cusps = Ratio::new(
        divisors(level)
            .into_iter()
            .map(|d| (totient(d) * totient(level / d)) as i128)
            .sum::<i128>(),
        2,
    );
    let g = Ratio::from_integer(1) + mu / 12 - cusps / 2;
    assert!(
        g.is_integer() && g >= Ratio::from_integer(0),
        "genus {g} of X_1({level})"
    );
    Ok(g.to_integer() as u64)
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

fn totient(m: u64) -> u64 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
}

/// One simple factor `A_i^{m_i}` of `J_1(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFactor {
    pub dimension: u64,
    pub multiplicity: u64,
    /// `L(A_i, 1) = 0`.
    pub l_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub level: u64,
    pub factors: Vec<DecompositionFactor>,
}

impl DecompositionRow {
    /// `sum d_i m_i`, which must equal `dim J_1(N) = genus(X_1(N))`.
    pub fn total_dimension(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.dimension * f.multiplicity)
            .sum()
    }

    pub fn finiteness(&self) -> Finiteness {
        if self.factors.iter().any(|f| f.l_vanishes) {
            Finiteness::VanishingLValue
        } else {
            Finiteness::Finite
        }
    }
}

impl fmt::Display for DecompositionRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.level)?;
        for factor in &self.factors {
            write!(
                f,
                "  {},{},{}",
                factor.dimension,
                factor.multiplicity,
                if factor.l_vanishes { 'T' } else { 'F' }
            )?;
        }
        Ok(())
    }
}

/// Whether `J_1(N)(Q)` is known to be finite from the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Finiteness {
    /// Every factor has `L(A_i, 1) != 0`, so every `A_i(Q)` is finite.
    Finite,
    /// Some factor has `L(A_i, 1) = 0`; finiteness is not established.
    VanishingLValue,
    /// The level is not in the table.
    NoData,
}

impl Finiteness {
    pub fn is_finite(&self) -> bool {
        matches!(self, Finiteness::Finite)
    }
}

impl fmt::Display for Finiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Finiteness::Finite => "finite",
            Finiteness::VanishingLValue => "not established (some L(A,1) = 0)",
            Finiteness::NoData => "unknown (level not tabulated)",
        })
    }
}

/// Decomposition rows keyed by level.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionTable {
    rows: BTreeMap<u64, DecompositionRow>,
}

impl DecompositionTable {
    /// The table compiled into the crate.
    pub fn embedded() -> &'static DecompositionTable {
        static TABLE: OnceLock<DecompositionTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            DecompositionTable::parse(EMBEDDED_TABLE).expect("embedded table is well formed")
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ModCurveError> {
        let text = std::fs::read_to_string(path).map_err(|e| ModCurveError::Io(e.to_string()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ModCurveError> {
        let mut rows = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| ModCurveError::Parse { line, message };
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut fields = content.split_whitespace();
            let level: u64 = fields
                .next()
                .and_then(|s| s.parse().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| err("expected a positive level".into()))?;
            let mut factors = Vec::new();
            for triple in fields {
                let parts: Vec<&str> = triple.split(',').collect();
                let [d, m, flag] = parts[..] else {
                    return Err(err(format!("malformed factor `{triple}`")));
                };
                let dimension: u64 = d
                    .parse()
                    .ok()
                    .filter(|&d| d > 0)
                    .ok_or_else(|| err(format!("bad dimension in `{triple}`")))?;
                let multiplicity: u64 = m
                    .parse()
                    .ok()
                    .filter(|&m| m > 0)
                    .ok_or_else(|| err(format!("bad multiplicity in `{triple}`")))?;
                let l_vanishes = match flag {
                    "T" => true,
                    "F" => false,
                    _ => return Err(err(format!("flag must be T or F in `{triple}`"))),
                };
                factors.push(DecompositionFactor {
                    dimension,
                    multiplicity,
                    l_vanishes,
                });
            }
            if factors.is_empty() {
                return Err(err(format!("level {level} has no factors")));
            }
            if rows
                .insert(level, DecompositionRow { level, factors })
                .is_some()
            {
                return Err(err(format!("duplicate level {level}")));
            }
        }
        Ok(DecompositionTable { rows })
    }

    pub fn row(&self, level: u64) -> Option<&DecompositionRow> {
        self.rows.get(&level)
    }

    pub fn rows(&self) -> impl Iterator<Item = &DecompositionRow> {
        self.rows.values()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn finiteness(&self, level: u64) -> Finiteness {
        self.row(level)
            .map_or(Finiteness::NoData, DecompositionRow::finiteness)
    }
}

/// Finiteness of `J_1(N)(Q)` according to the embedded table.
pub fn j1_finite_over_q(level: u64) -> Finiteness {
    DecompositionTable::embedded().finiteness(level)
}
