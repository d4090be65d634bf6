//! The axiom-scheme registry and per-logic activation.

use std::sync::OnceLock;

use crate::algebra::TNormKind;
use crate::logic::{Base, LogicConfig};
use crate::syntax::scheme::{Pattern, Scheme, SideComputation, Substitution};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomMatch {
    pub scheme: &'static str,
    pub substitution: Substitution,
}

const TEMPLATES: &[(&str, &str)] = &[
    ("BL1", "(A -> B) -> ((B -> C) -> (A -> C))"),
    ("BL2", "(A & B) -> A"),
    ("BL3", "(A & B) -> (B & A)"),
    ("BL4", "(A & (A -> B)) -> (B & (B -> A))"),
    ("BL5a", "(A -> (B -> C)) -> ((A & B) -> C)"),
    ("BL5b", "((A & B) -> C) -> (A -> (B -> C))"),
    ("BL6", "((A -> B) -> C) -> (((B -> A) -> C) -> C)"),
    ("BL7", "#0 -> A"),
    ("L", "~~A -> A"),
    ("G", "A -> (A & A)"),
    ("P", "~~A -> ((A -> (A & B)) -> (B & ~~B))"),
    ("Appl", "s:(A -> B) -> (t:A -> s.t:B)"),
    ("Sum1", "s:A -> s+t:A"),
    ("Sum2", "s:A -> t+s:A"),
    ("jT", "t:A -> A"),
    ("jD", "~t:#0"),
];

fn truth_constant_scheme(
    name: &str,
    connective: fn(Pattern, Pattern) -> Pattern,
    tnorm_op: fn(&crate::TruthValue, &crate::TruthValue) -> crate::TruthValue,
) -> Scheme {
    let pattern = Pattern::equiv(connective(Pattern::rational("r"), Pattern::rational("q")), Pattern::rational("s"));
    Scheme::new(name, pattern).with_side(SideComputation {
        target: "s".into(),
        inputs: ["r".into(), "q".into()],
        op: tnorm_op,
    })
}

/// Every scheme known to the kernel, in matching order.
pub fn registry() -> &'static [Scheme] {
    static REGISTRY: OnceLock<Vec<Scheme>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut out: Vec<Scheme> = TEMPLATES
            .iter()
            .map(|(name, text)| {
                let template: Formula = text.parse().expect("built-in scheme template parses");
                Scheme::new(name, Pattern::from_template(&template))
            })
            .collect();
        out.push(truth_constant_scheme("TC1", Pattern::imp, |x, y| TNormKind::Lukasiewicz.residuum(x, y)));
        out.push(truth_constant_scheme("TC2", Pattern::conj, |x, y| TNormKind::Lukasiewicz.tnorm(x, y)));
        out
    })
}

pub fn scheme(name: &str) -> Option<&'static Scheme> {
    registry().iter().find(|s| &*s.name == name)
}

/// Whether the named scheme belongs to the logic.
pub fn is_active(name: &str, config: &LogicConfig) -> bool {
    let lukasiewicz = config.crisp || matches!(config.base, Base::Lukasiewicz | Base::Pavelka);
    match name {
        "BL1" | "BL2" | "BL3" | "BL4" | "BL5a" | "BL5b" | "BL6" | "BL7" => true,
        "L" => lukasiewicz,
        "G" => config.crisp || config.base == Base::Goedel,
        "P" => !config.crisp && config.base == Base::Product,
        "TC1" | "TC2" => config.base == Base::Pavelka,
        "Appl" | "Sum1" | "Sum2" => config.justified,
        "jT" => config.justified && config.jt,
        "jD" => config.justified && config.jd,
        _ => false,
    }
}

pub fn active_schemes(config: &LogicConfig) -> Vec<&'static Scheme> {
    registry().iter().filter(|s| is_active(&s.name, config)).collect()
}

/// Concrete scheme names an axiom tag may refer to (`Sum` and `BL5` cover
/// both variants).
pub fn resolve_alias(tag: &str) -> Vec<&'static str> {
    let names: &[&'static str] = match tag {
        "Sum" => &["Sum1", "Sum2"],
        "BL5" => &["BL5a", "BL5b"],
        "Ł" | "Luk" => &["L"],
        "Pi" | "Π" => &["P"],
        _ => {
            return registry().iter().filter(|s| &*s.name == tag).map(|s| leak_name(s)).collect();
        }
    };
    names.to_vec()
}

fn leak_name(s: &'static Scheme) -> &'static str {
    &s.name
}

/// The first active scheme the formula is an instance of.
pub fn axiom_instance_of(f: &Formula, config: &LogicConfig) -> Option<AxiomMatch> {
    let f = f.expand();
    active_schemes(config)
        .into_iter()
        .find_map(|s| s.matches(&f).map(|substitution| AxiomMatch { scheme: leak_name(s), substitution }))
}

/// Instantiates a scheme by name; unknown names or unbound metavariables
/// are programming errors in the derived-rule library.
pub fn instance(name: &str, sigma: &Substitution) -> Formula {
    scheme(name)
        .unwrap_or_else(|| panic!("unknown scheme {name}"))
        .instantiate(sigma)
        .unwrap_or_else(|e| panic!("instantiating {name}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name_of(text: &str, config: LogicConfig) -> Option<&'static str> {
        axiom_instance_of(&text.parse().unwrap(), &config).map(|m| m.scheme)
    }

    #[test]
    fn recognizes_instances() {
        assert_eq!(name_of("(p & q) -> (q & p)", LogicConfig::bl()), Some("BL3"));
        assert_eq!(name_of("s:p -> s+t:p", LogicConfig::blj()), Some("Sum1"));
        assert_eq!(name_of("s:p -> t+s:p", LogicConfig::blj()), Some("Sum2"));
        assert_eq!(name_of("(#1/2 -> #3/4) == #1", LogicConfig::rpl()), Some("TC1"));
        assert_eq!(name_of("(#1/2 -> #3/4) == #3/4", LogicConfig::rpl()), None);
        assert_eq!(name_of("p -> p", LogicConfig::bl()), None);
    }

    #[test]
    fn activation_follows_the_logic() {
        assert_eq!(name_of("~~p -> p", LogicConfig::bl()), None);
        assert_eq!(name_of("~~p -> p", LogicConfig::lj()), Some("L"));
        assert_eq!(name_of("p -> p & p", LogicConfig::gj()), Some("G"));
        assert_eq!(name_of("s:p -> s+t:p", LogicConfig::bl()), None);
        assert_eq!(name_of("t:p -> p", LogicConfig::lj()), None);
        assert_eq!(name_of("t:p -> p", LogicConfig::lj().with_jt()), Some("jT"));
        assert_eq!(name_of("~t:#0", LogicConfig::gj().with_jd()), Some("jD"));
    }

    #[test]
    fn aliases() {
        assert_eq!(resolve_alias("Sum"), vec!["Sum1", "Sum2"]);
        assert_eq!(resolve_alias("BL1"), vec!["BL1"]);
        assert!(resolve_alias("nope").is_empty());
    }
}
