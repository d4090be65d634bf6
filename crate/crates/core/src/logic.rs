//! Logic selection: which axioms are active and which models are admissible.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::TNormKind;

/// Propositional base of a logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Bl,
    Lukasiewicz,
    Goedel,
    Product,
    /// Rational Pavelka logic: Łukasiewicz with rational truth constants.
    Pavelka,
}

impl Base {
    pub fn name(self) -> &'static str {
        match self {
            Base::Bl => "BL",
            Base::Lukasiewicz => "L",
            Base::Goedel => "G",
            Base::Product => "Pi",
            Base::Pavelka => "RPL",
        }
    }
}

/// Optional justification principles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extra {
    /// Factivity `t:A -> A`.
    JT,
    /// Consistency `~t:#0`.
    JD,
}

/// A concrete logic.
///
/// `crisp` selects the two-valued systems (classical propositional logic, or
/// J when `justified` is set). Classical logic is axiomatized as BL plus the
/// Łukasiewicz and Gödel axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LogicConfig {
    pub base: Base,
    pub justified: bool,
    pub jt: bool,
    pub jd: bool,
    pub crisp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicNameError {
    #[error(
        "unknown logic `{0}` (expected e.g. BL, L, G, Pi, RPL, BLJ, LJ, GJ, PiJ, RPLJ, J, optionally with +jT/+jD)"
    )]
    Unknown(String),
    #[error("unknown extra `{0}` (expected jT or jD)")]
    UnknownExtra(String),
}

impl LogicConfig {
    pub const fn new(base: Base, justified: bool) -> Self {
        LogicConfig { base, justified, jt: false, jd: false, crisp: false }
    }

    pub const fn bl() -> Self {
        Self::new(Base::Bl, false)
    }

    pub const fn blj() -> Self {
        Self::new(Base::Bl, true)
    }

    pub const fn lj() -> Self {
        Self::new(Base::Lukasiewicz, true)
    }

    pub const fn gj() -> Self {
        Self::new(Base::Goedel, true)
    }

    pub const fn pij() -> Self {
        Self::new(Base::Product, true)
    }

    pub const fn rpl() -> Self {
        Self::new(Base::Pavelka, false)
    }

    pub const fn rplj() -> Self {
        Self::new(Base::Pavelka, true)
    }

    /// The crisp justification logic J.
    pub const fn j() -> Self {
        LogicConfig { base: Base::Bl, justified: true, jt: false, jd: false, crisp: true }
    }

    pub const fn with_jt(mut self) -> Self {
        self.jt = true;
        self
    }

    pub const fn with_jd(mut self) -> Self {
        self.jd = true;
        self
    }

    /// The most liberal grammar: rational constants and justification terms.
    pub const fn permissive() -> Self {
        Self::rplj()
    }

    pub fn extras(&self) -> Vec<Extra> {
        let mut extras = Vec::new();
        if self.jt {
            extras.push(Extra::JT);
        }
        if self.jd {
            extras.push(Extra::JD);
        }
        extras
    }

    /// Truth constants other than `#0` and `#1` are part of the language.
    pub fn allows_rational_constants(&self) -> bool {
        self.base == Base::Pavelka
    }

    /// Necessitation produces `c<1>:A` (GIAN) rather than `c:A` (IAN).
    pub fn uses_graded_necessitation(&self) -> bool {
        self.justified && self.base == Base::Pavelka
    }

    /// T-norms whose models count as models of this logic.
    pub fn allowed_tnorms(&self) -> &'static [TNormKind] {
        if self.crisp {
            return &TNormKind::ALL;
        }
        match self.base {
            Base::Bl => &TNormKind::ALL,
            Base::Lukasiewicz | Base::Pavelka => &[TNormKind::Lukasiewicz],
            Base::Goedel => &[TNormKind::Goedel],
            Base::Product => &[TNormKind::Product],
        }
    }

    pub fn name(&self) -> String {
        let mut name = if self.crisp {
            if self.justified {
                "J".to_string()
            } else {
                "CPC".to_string()
            }
        } else {
            let mut n = self.base.name().to_string();
            if self.justified {
                n.push('J');
            }
            n
        };
        if self.jt {
            name.push_str("+jT");
        }
        if self.jd {
            name.push_str("+jD");
        }
        name
    }
}

impl fmt::Display for LogicConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for LogicConfig {
    type Err = LogicNameError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut parts = text.split('+');
        let head = parts.next().unwrap_or_default().trim();
        let mut config = match head {
            "BL" => Self::bl(),
            "L" | "Ł" => Self::new(Base::Lukasiewicz, false),
            "G" => Self::new(Base::Goedel, false),
            "Pi" | "P" | "Π" => Self::new(Base::Product, false),
            "RPL" => Self::rpl(),
            "BLJ" => Self::blj(),
            "LJ" | "ŁJ" => Self::lj(),
            "GJ" => Self::gj(),
            "PiJ" | "PJ" | "ΠJ" => Self::pij(),
            "RPLJ" => Self::rplj(),
            "J" => Self::j(),
            "CPC" | "PC" => LogicConfig { crisp: true, ..Self::bl() },
            _ => return Err(LogicNameError::Unknown(text.to_string())),
        };
        for extra in parts {
            match extra.trim() {
                "jT" | "JT" => config.jt = true,
                "jD" | "JD" => config.jd = true,
                other => return Err(LogicNameError::UnknownExtra(other.to_string())),
            }
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in ["BL", "L", "G", "Pi", "RPL", "BLJ", "LJ", "GJ", "PiJ", "RPLJ", "J", "RPLJ+jT", "GJ+jD", "CPC"] {
            let config: LogicConfig = name.parse().unwrap();
            assert_eq!(config.name(), name);
        }
        assert!("XJ".parse::<LogicConfig>().is_err());
        assert!("LJ+jK".parse::<LogicConfig>().is_err());
    }

    #[test]
    fn tnorm_restrictions() {
        assert_eq!(LogicConfig::rplj().allowed_tnorms(), &[TNormKind::Lukasiewicz]);
        assert_eq!(LogicConfig::blj().allowed_tnorms().len(), 3);
        assert!(LogicConfig::rplj().uses_graded_necessitation());
        assert!(!LogicConfig::lj().uses_graded_necessitation());
    }
}
