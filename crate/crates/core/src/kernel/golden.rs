//! Reference derivations of the standard propositional theorems of BL and
//! of the graded justification theorems of RPLJ.
//!
//! Each theorem has a statement builder, written independently of the
//! derivation, so tests can compare the checked conclusion against it.

use super::builder::{BuildError, ProofBuilder};
use super::derivation::Derivation;
use crate::logic::{Base, LogicConfig};
use crate::syntax::scheme::{Pattern, Scheme, Substitution};
use crate::syntax::{Formula, Term};
use crate::truth::TruthValue;

/// Names and statements of the propositional theorems, over metavariables
/// `A`..`D`. The first is `#0 -> #0` without truth constants and `#1` with.
pub const PROPOSITIONAL: [(&str, &str); 8] = [
    ("top", "#0 -> #0"),
    ("weakening", "A -> (B -> A)"),
    ("strong_to_weak_conj", "(A & B) -> (A /\\ B)"),
    ("weak_conj_elim", "(A /\\ B) -> A"),
    ("weak_conj_intro", "(A -> B) -> (A -> (A /\\ B))"),
    ("exchange", "(A -> (B -> C)) -> (B -> (A -> C))"),
    ("conj_imp", "((A -> B) & (C -> D)) -> ((A & C) -> (B & D))"),
    ("prelinearity", "(A -> B) \\/ (B -> A)"),
];

/// Names of the graded justification theorems.
pub const GRADED: [&str; 8] = [
    "upper_one",
    "lower_zero",
    "not_upper_to_lower",
    "not_lower_to_upper",
    "grade_weakening",
    "lower_one_iff_exact_one",
    "exact_one_elim",
    "lower_or_upper",
];

fn metas(fs: &[Formula; 4]) -> Substitution {
    ["A", "B", "C", "D"].iter().zip(fs).fold(Substitution::new(), |s, (name, f)| s.formula(name, f.clone()))
}

/// The statement of propositional theorem `item` (0-based).
pub fn propositional_statement(item: usize, config: &LogicConfig, fs: &[Formula; 4]) -> Formula {
    if item == 0 && config.base == Base::Pavelka {
        return Formula::top();
    }
    let (_, text) = PROPOSITIONAL[item];
    let template: Formula = text.parse().expect("statement template parses");
    Scheme::new("statement", Pattern::from_template(&template))
        .instantiate(&metas(fs))
        .expect("all metavariables are bound")
}

/// A derivation of propositional theorem `item` (0-based).
pub fn propositional_derivation(item: usize, config: LogicConfig, fs: &[Formula; 4]) -> Derivation {
    let [a, b, c, d] = fs.clone().map(|f| f.expand());
    let mut p = ProofBuilder::new(config);
    let line = match item {
        0 => p.top(),
        1 => p.weaken_thm(&a, &b),
        2 => {
            let k = p.weaken_thm(&b, &a);
            p.mono_right(k, &a).expect("weakening is an implication")
        }
        3 => p.bl2(&a, &Formula::imp(a.clone(), b.clone())),
        4 => p.weak_conj_intro_thm(&a, &b),
        5 => p.exchange_thm(&a, &b, &c),
        6 => p.conj_imp_thm(&a, &b, &c, &d),
        7 => p.prelinearity_thm(&a, &b),
        _ => panic!("no propositional theorem {item}"),
    };
    p.into_derivation(line)
}

/// The statement of graded theorem `item` (0-based) for term `t`, body `a`
/// and grades `r <= q`.
pub fn graded_statement(item: usize, t: &Term, a: &Formula, r: &TruthValue, q: &TruthValue) -> Formula {
    let one = TruthValue::one();
    let at_least = |g: &TruthValue| Formula::at_least(t.clone(), g.clone(), a.clone());
    let at_most = |g: &TruthValue| Formula::at_most(t.clone(), g.clone(), a.clone());
    match item {
        0 => at_most(&one),
        1 => at_least(&TruthValue::zero()),
        2 => Formula::imp(Formula::neg(at_most(r)), at_least(r)),
        3 => Formula::imp(Formula::neg(at_least(r)), at_most(r)),
        4 => Formula::imp(at_least(q), at_least(r)),
        5 => Formula::equiv(at_least(&one), Formula::exactly(t.clone(), one, a.clone())),
        6 => Formula::imp(Formula::exactly(t.clone(), one, a.clone()), Formula::just(t.clone(), a.clone())),
        7 => Formula::weak_disj(at_least(r), at_most(r)),
        _ => panic!("no graded theorem {item}"),
    }
}

/// A derivation in RPLJ of graded theorem `item` (0-based). The grade
/// weakening theorem requires `r <= q`.
pub fn graded_derivation(
    item: usize,
    t: &Term,
    a: &Formula,
    r: &TruthValue,
    q: &TruthValue,
) -> Result<Derivation, BuildError> {
    let a = a.expand();
    let ta = Formula::just(t.clone(), a.clone());
    let bar = |g: &TruthValue| Formula::Const(g.clone());
    let zero = bar(&TruthValue::zero());
    let one_bar = bar(&TruthValue::one());
    let mut p = ProofBuilder::new(LogicConfig::rplj());
    let line = match item {
        0 => {
            let one = p.one()?;
            p.weaken(one, &ta)
        }
        1 => p.bl7(&ta),
        2 | 3 => {
            let (x, y) = if item == 2 { (ta.clone(), bar(r)) } else { (bar(r), ta.clone()) };
            // BL6 with C = #0 gives ~(X -> Y) -> ~~(Y -> X); L removes ~~.
            let cases = p.bl6(&x, &y, &zero);
            let target = Formula::imp(y, x);
            let dn = p.axiom("L", &Substitution::new().formula("A", target));
            p.syllogism(cases, dn)?
        }
        4 => {
            let order = p.constant_order(r, q)?;
            let pre = p.bl1(&bar(r), &bar(q), &ta);
            p.mp(order, pre)?
        }
        5 | 6 => {
            let lower = Formula::imp(one_bar.clone(), ta.clone());
            let upper = Formula::imp(ta.clone(), one_bar.clone());
            let one = p.one()?;
            let up = p.weaken(one, &ta);
            let lifted = p.weaken(up, &lower);
            let intro = p.weak_conj_intro_thm(&lower, &upper);
            let forward = p.mp(lifted, intro)?;
            let backward = p.bl2(&lower, &Formula::imp(lower.clone(), upper.clone()));
            if item == 5 {
                p.conj_intro(forward, backward)
            } else {
                let swapped = p.exchange(backward)?;
                let one = p.one()?;
                p.mp(one, swapped)?
            }
        }
        7 => p.prelinearity_thm(&bar(r), &ta),
        _ => panic!("no graded theorem {item}"),
    };
    Ok(p.into_derivation(line))
}

/// A shipped reference proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenProof {
    /// File name, e.g. `bl-06-exchange.proof`.
    pub file: String,
    pub logic: LogicConfig,
    pub text: String,
}

/// The reference proofs over `p, q, r, s`, term `x` and grades `1/3 <= 2/3`.
pub fn golden_proofs() -> Vec<GoldenProof> {
    let fs = ["p", "q", "r", "s"].map(Formula::prop);
    let mut out = Vec::new();
    for (i, (name, _)) in PROPOSITIONAL.iter().enumerate() {
        let logic = LogicConfig::bl();
        let d = propositional_derivation(i, logic, &fs);
        out.push(GoldenProof {
            file: format!("bl-{:02}-{}.proof", i + 1, name.replace('_', "-")),
            logic,
            text: render(&d),
        });
    }
    let (t, a) = (Term::var("x"), Formula::prop("p"));
    let (r, q) = (TruthValue::ratio(1, 3), TruthValue::ratio(2, 3));
    for (i, name) in GRADED.iter().enumerate() {
        let d = graded_derivation(i, &t, &a, &r, &q).expect("golden graded derivations build");
        out.push(GoldenProof {
            file: format!("rplj-{:02}-{}.proof", i + 1, name.replace('_', "-")),
            logic: LogicConfig::rplj(),
            text: render(&d),
        });
    }
    out
}

fn render(d: &Derivation) -> String {
    let conclusion = d.conclusion().map(ToString::to_string).unwrap_or_default();
    format!("// conclusion: {conclusion}\n// steps: {}\n{d}", d.len())
}
