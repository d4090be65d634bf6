//! The three continuous t-norms and their residua, computed exactly.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::truth::{Rational, TruthValue};

/// Łukasiewicz, Gödel or product conjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TNormKind {
    #[serde(rename = "L")]
    Lukasiewicz,
    #[serde(rename = "G")]
    Goedel,
    #[serde(rename = "P")]
    Product,
}

impl TNormKind {
    pub const ALL: [TNormKind; 3] = [TNormKind::Lukasiewicz, TNormKind::Goedel, TNormKind::Product];

    pub fn symbol(self) -> &'static str {
        match self {
            TNormKind::Lukasiewicz => "L",
            TNormKind::Goedel => "G",
            TNormKind::Product => "P",
        }
    }

    /// Strong conjunction `x * y`.
    pub fn tnorm(self, x: &TruthValue, y: &TruthValue) -> TruthValue {
        match self {
            TNormKind::Lukasiewicz => {
                let sum = x.as_rational() + y.as_rational() - Rational::one();
                if sum > Rational::zero() {
                    TruthValue::from_unit(sum)
                } else {
                    TruthValue::zero()
                }
            }
            TNormKind::Goedel => std::cmp::min(x, y).clone(),
            TNormKind::Product => TruthValue::from_unit(x.as_rational() * y.as_rational()),
        }
    }

    /// Residuum `x => y = max { z | x * z <= y }`.
    pub fn residuum(self, x: &TruthValue, y: &TruthValue) -> TruthValue {
        if x <= y {
            return TruthValue::one();
        }
        match self {
            TNormKind::Lukasiewicz => TruthValue::from_unit(Rational::one() - x.as_rational() + y.as_rational()),
            TNormKind::Goedel => y.clone(),
            TNormKind::Product => TruthValue::from_unit(y.as_rational() / x.as_rational()),
        }
    }

    /// Negation `x => 0`.
    pub fn negation(self, x: &TruthValue) -> TruthValue {
        self.residuum(x, &TruthValue::zero())
    }
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for TNormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L" | "Lukasiewicz" | "Ł" => Ok(TNormKind::Lukasiewicz),
            "G" | "Goedel" | "Godel" => Ok(TNormKind::Goedel),
            "P" | "Pi" | "Product" => Ok(TNormKind::Product),
            other => Err(format!("unknown t-norm `{other}` (expected L, G or P)")),
        }
    }
}

pub fn tnorm_apply(kind: TNormKind, x: &TruthValue, y: &TruthValue) -> TruthValue {
    kind.tnorm(x, y)
}

pub fn residuum_apply(kind: TNormKind, x: &TruthValue, y: &TruthValue) -> TruthValue {
    kind.residuum(x, y)
}

/// A triple breaking `x * z <= y  iff  z <= x => y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionViolation {
    pub x: TruthValue,
    pub y: TruthValue,
    pub z: TruthValue,
}

#[derive(Debug, Clone)]
pub struct AdjunctionReport {
    pub kind: TNormKind,
    pub denominator_bound: u64,
    pub triples_checked: usize,
    pub violations: Vec<AdjunctionViolation>,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AdjunctionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "adjunction {} (denominators <= {}): {} triples, {} violations",
            self.kind,
            self.denominator_bound,
            self.triples_checked,
            self.violations.len()
        )?;
        if !self.violations.is_empty() {
            writeln!(f, "{:>10} {:>10} {:>10}", "x", "y", "z")?;
            for v in &self.violations {
                writeln!(f, "{:>10} {:>10} {:>10}", v.x, v.y, v.z)?;
            }
        }
        Ok(())
    }
}

/// Exhaustively checks the residuation adjunction over every rational grid
/// point with denominator at most `denominator_bound`.
pub fn check_adjunction(kind: TNormKind, denominator_bound: u64) -> AdjunctionReport {
    let grid = TruthValue::grid(denominator_bound);
    let mut violations = Vec::new();
    let mut triples_checked = 0;
    for x in &grid {
        for y in &grid {
            let implication = kind.residuum(x, y);
            for z in &grid {
                triples_checked += 1;
                let left = kind.tnorm(x, z) <= *y;
                let right = *z <= implication;
                if left != right {
                    violations.push(AdjunctionViolation { x: x.clone(), y: y.clone(), z: z.clone() });
                }
            }
        }
    }
    AdjunctionReport { kind, denominator_bound, triples_checked, violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(n: i64, d: i64) -> TruthValue {
        TruthValue::ratio(n, d)
    }

    #[test]
    fn tnorm_examples() {
        // max(0, 3/5 + 7/10 - 1) = 3/10
        assert_eq!(tnorm_apply(TNormKind::Lukasiewicz, &tv(3, 5), &tv(7, 10)), tv(3, 10));
        assert_eq!(tnorm_apply(TNormKind::Goedel, &TruthValue::one(), &tv(2, 7)), tv(2, 7));
        assert_eq!(tnorm_apply(TNormKind::Product, &tv(1, 2), &tv(2, 3)), tv(1, 3));
        assert_eq!(tnorm_apply(TNormKind::Lukasiewicz, &tv(1, 3), &tv(1, 2)), TruthValue::zero());
    }

    #[test]
    fn residuum_examples() {
        // min(1, 1 - 4/5 + 1/2) = 7/10
        assert_eq!(residuum_apply(TNormKind::Lukasiewicz, &tv(4, 5), &tv(1, 2)), tv(7, 10));
        assert_eq!(residuum_apply(TNormKind::Goedel, &tv(3, 10), &tv(1, 2)), TruthValue::one());
        assert_eq!(residuum_apply(TNormKind::Goedel, &tv(1, 2), &tv(3, 10)), tv(3, 10));
        // (1/5) / (4/5)
        assert_eq!(residuum_apply(TNormKind::Product, &tv(4, 5), &tv(1, 5)), tv(1, 4));
    }

    #[test]
    fn residuum_is_one_exactly_on_order() {
        let grid = TruthValue::grid(6);
        for kind in TNormKind::ALL {
            for x in &grid {
                for y in &grid {
                    assert_eq!(kind.residuum(x, y).is_one(), x <= y, "{kind} {x} {y}");
                }
            }
        }
    }

    #[test]
    fn adjunction_small_grids() {
        for kind in TNormKind::ALL {
            let report = check_adjunction(kind, 6);
            assert!(report.passed(), "{report}");
            assert_eq!(report.triples_checked, 13 * 13 * 13);
        }
    }

    #[test]
    fn negations() {
        assert_eq!(TNormKind::Lukasiewicz.negation(&tv(1, 3)), tv(2, 3));
        assert_eq!(TNormKind::Goedel.negation(&tv(1, 3)), TruthValue::zero());
        assert_eq!(TNormKind::Product.negation(&TruthValue::zero()), TruthValue::one());
    }
}
