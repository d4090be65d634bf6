//! Finite fuzzy Fitting models and Mkrtychev models.
//!
//! A Fitting model has finitely many worlds, a crisp accessibility relation,
//! a valuation per world and an evidence function per world. Both tables are
//! finite and fall back to a default for unlisted entries. Justified
//! formulas evaluate as `V_w(t:A) = E_w(t, A) * min { V_v(A) | wRv }`, with
//! the minimum over no successors taken to be 1.

mod crisp;
mod generate;
mod json;
mod search;
mod validate;

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::TNormKind;
use crate::syntax::{Formula, Term};
use crate::truth::TruthValue;

pub use crisp::{crisp_eval, CrispError};
pub use generate::{random_model, repair_evidence, ModelParams, ValuePicker};
pub use json::ModelFileError;
pub use search::{find_countermodel, Budget, Countermodel};
pub use validate::{relevant_closure, validate_model, Closure, Constraint, FrameProperty, ValidationReport, Violation};

/// A `(term, formula)` key of an evidence table; the formula is expanded.
pub type EvidenceKey = (Term, Formula);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("a model needs at least one world")]
    NoWorlds,
    #[error("world `{0}` is declared twice")]
    DuplicateWorld(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingModel {
    worlds: Vec<Arc<str>>,
    successors: Vec<Vec<usize>>,
    tnorm: TNormKind,
    val: Vec<HashMap<Arc<str>, TruthValue>>,
    default_val: TruthValue,
    evid: Vec<HashMap<EvidenceKey, TruthValue>>,
    default_evid: TruthValue,
}

impl FittingModel {
    /// Worlds without accessibility, valuation 0 and evidence 1 by default.
    pub fn new<S: AsRef<str>>(worlds: &[S], tnorm: TNormKind) -> Result<Self, ModelError> {
        if worlds.is_empty() {
            return Err(ModelError::NoWorlds);
        }
        let mut names: Vec<Arc<str>> = Vec::with_capacity(worlds.len());
        for w in worlds {
            let w = w.as_ref();
            if names.iter().any(|n| &**n == w) {
                return Err(ModelError::DuplicateWorld(w.to_string()));
            }
            names.push(w.into());
        }
        let n = names.len();
        Ok(FittingModel {
            worlds: names,
            successors: vec![Vec::new(); n],
            tnorm,
            val: vec![HashMap::new(); n],
            default_val: TruthValue::zero(),
            evid: vec![HashMap::new(); n],
            default_evid: TruthValue::one(),
        })
    }

    /// Worlds named `w0`, `w1`, ...
    pub fn with_world_count(n: usize, tnorm: TNormKind) -> Result<Self, ModelError> {
        let names: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
        Self::new(&names, tnorm)
    }

    pub fn tnorm(&self) -> TNormKind {
        self.tnorm
    }

    pub fn world_count(&self) -> usize {
        self.worlds.len()
    }

    pub fn world_name(&self, w: usize) -> &str {
        &self.worlds[w]
    }

    pub fn world_names(&self) -> impl Iterator<Item = &str> {
        self.worlds.iter().map(|w| &**w)
    }

    pub fn world_index(&self, name: &str) -> Result<usize, ModelError> {
        self.worlds.iter().position(|w| &**w == name).ok_or_else(|| ModelError::UnknownWorld(name.to_string()))
    }

    pub fn add_access(&mut self, from: usize, to: usize) {
        let succ = &mut self.successors[from];
        if let Err(pos) = succ.binary_search(&to) {
            succ.insert(pos, to);
        }
    }

    pub fn remove_access(&mut self, from: usize, to: usize) {
        self.successors[from].retain(|&v| v != to);
    }

    pub fn has_access(&self, from: usize, to: usize) -> bool {
        self.successors[from].binary_search(&to).is_ok()
    }

    pub fn successors(&self, w: usize) -> &[usize] {
        &self.successors[w]
    }

    pub fn access_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.successors.iter().enumerate().flat_map(|(w, s)| s.iter().map(move |&v| (w, v)))
    }

    pub fn set_val(&mut self, w: usize, prop: &str, value: TruthValue) {
        self.val[w].insert(prop.into(), value);
    }

    pub fn val(&self, w: usize, prop: &str) -> TruthValue {
        self.val[w].get(prop).cloned().unwrap_or_else(|| self.default_val.clone())
    }

    pub fn val_entries(&self, w: usize) -> impl Iterator<Item = (&str, &TruthValue)> {
        self.val[w].iter().map(|(p, v)| (&**p, v))
    }

    pub fn default_val(&self) -> &TruthValue {
        &self.default_val
    }

    pub fn set_default_val(&mut self, value: TruthValue) {
        self.default_val = value;
    }

    pub fn set_evid(&mut self, w: usize, t: &Term, a: &Formula, value: TruthValue) {
        self.evid[w].insert((t.clone(), a.expand()), value);
    }

    /// Sets the entry for an already expanded key.
    pub(crate) fn set_evid_key(&mut self, w: usize, key: EvidenceKey, value: TruthValue) {
        self.evid[w].insert(key, value);
    }

    /// `E_w(t, a)` for an expanded `a`.
    pub fn evid(&self, w: usize, t: &Term, a: &Formula) -> TruthValue {
        self.evid[w].get(&(t.clone(), a.clone())).cloned().unwrap_or_else(|| self.default_evid.clone())
    }

    pub(crate) fn evid_key(&self, w: usize, key: &EvidenceKey) -> TruthValue {
        self.evid[w].get(key).cloned().unwrap_or_else(|| self.default_evid.clone())
    }

    pub(crate) fn evid_entry(&self, w: usize, key: &EvidenceKey) -> Option<&TruthValue> {
        self.evid[w].get(key)
    }

    pub fn has_evid_entry(&self, w: usize, key: &EvidenceKey) -> bool {
        self.evid[w].contains_key(key)
    }

    pub fn evid_entries(&self, w: usize) -> impl Iterator<Item = (&EvidenceKey, &TruthValue)> {
        self.evid[w].iter()
    }

    pub fn default_evid(&self) -> &TruthValue {
        &self.default_evid
    }

    pub fn set_default_evid(&mut self, value: TruthValue) {
        self.default_evid = value;
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.world_count()).all(|w| self.successors[w].contains(&w))
    }

    pub fn is_serial(&self) -> bool {
        self.successors.iter().all(|s| !s.is_empty())
    }

    /// Values of `f` at every world, in world order.
    pub fn eval_all(&self, f: &Formula) -> Vec<TruthValue> {
        self.eval_expanded(&f.expand())
    }

    fn eval_expanded(&self, f: &Formula) -> Vec<TruthValue> {
        let n = self.world_count();
        match f {
            Formula::Prop(p) => (0..n).map(|w| self.val(w, p)).collect(),
            Formula::Const(r) => vec![r.clone(); n],
            Formula::StrongConj(a, b) => {
                let (x, y) = (self.eval_expanded(a), self.eval_expanded(b));
                x.iter().zip(&y).map(|(x, y)| self.tnorm.tnorm(x, y)).collect()
            }
            Formula::Implies(a, b) => {
                let (x, y) = (self.eval_expanded(a), self.eval_expanded(b));
                x.iter().zip(&y).map(|(x, y)| self.tnorm.residuum(x, y)).collect()
            }
            Formula::Justified(t, a) => {
                let inner = self.eval_expanded(a);
                (0..n)
                    .map(|w| {
                        let evidence = self.evid(w, t, a);
                        self.tnorm.tnorm(&evidence, &self.box_of(w, &inner))
                    })
                    .collect()
            }
            other => self.eval_expanded(&other.expand()),
        }
    }

    fn box_of(&self, w: usize, values: &[TruthValue]) -> TruthValue {
        self.successors[w].iter().map(|&v| values[v].clone()).min().unwrap_or_else(TruthValue::one)
    }

    pub fn eval_at(&self, w: usize, f: &Formula) -> TruthValue {
        self.eval_all(f).swap_remove(w)
    }

    pub fn eval(&self, world: &str, f: &Formula) -> Result<TruthValue, ModelError> {
        let w = self.world_index(world)?;
        Ok(self.eval_at(w, f))
    }

    /// `min { V_v(f) | wRv }`, or 1 without successors.
    pub fn eval_box_at(&self, w: usize, f: &Formula) -> TruthValue {
        self.box_of(w, &self.eval_all(f))
    }

    pub fn eval_box(&self, world: &str, f: &Formula) -> Result<TruthValue, ModelError> {
        let w = self.world_index(world)?;
        Ok(self.eval_box_at(w, f))
    }

    /// Value 1 at every world.
    pub fn is_valid_in_model(&self, f: &Formula) -> bool {
        self.eval_all(f).iter().all(TruthValue::is_one)
    }

    pub fn is_boolean(&self) -> bool {
        self.default_val.is_boolean()
            && self.default_evid.is_boolean()
            && self.val.iter().all(|m| m.values().all(TruthValue::is_boolean))
            && self.evid.iter().all(|m| m.values().all(TruthValue::is_boolean))
    }
}

/// A single-point model evaluating `t:A` as `E(t, A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MkrtychevModel {
    pub tnorm: TNormKind,
    pub val: HashMap<Arc<str>, TruthValue>,
    pub default_val: TruthValue,
    pub evid: HashMap<EvidenceKey, TruthValue>,
    pub default_evid: TruthValue,
}

impl MkrtychevModel {
    pub fn new(tnorm: TNormKind) -> Self {
        MkrtychevModel {
            tnorm,
            val: HashMap::new(),
            default_val: TruthValue::zero(),
            evid: HashMap::new(),
            default_evid: TruthValue::one(),
        }
    }

    pub fn set_val(&mut self, prop: &str, value: TruthValue) {
        self.val.insert(prop.into(), value);
    }

    pub fn set_evid(&mut self, t: &Term, a: &Formula, value: TruthValue) {
        self.evid.insert((t.clone(), a.expand()), value);
    }

    pub fn eval(&self, f: &Formula) -> TruthValue {
        self.eval_expanded(&f.expand())
    }

    fn eval_expanded(&self, f: &Formula) -> TruthValue {
        match f {
            Formula::Prop(p) => self.val.get(p).cloned().unwrap_or_else(|| self.default_val.clone()),
            Formula::Const(r) => r.clone(),
            Formula::StrongConj(a, b) => self.tnorm.tnorm(&self.eval_expanded(a), &self.eval_expanded(b)),
            Formula::Implies(a, b) => self.tnorm.residuum(&self.eval_expanded(a), &self.eval_expanded(b)),
            Formula::Justified(t, a) => {
                self.evid.get(&(t.clone(), (**a).clone())).cloned().unwrap_or_else(|| self.default_evid.clone())
            }
            other => self.eval_expanded(&other.expand()),
        }
    }

    /// The same model as a one-world Fitting model with empty accessibility.
    pub fn as_fitting(&self) -> FittingModel {
        let mut m = FittingModel::new(&["w0"], self.tnorm).expect("one world");
        m.default_val = self.default_val.clone();
        m.default_evid = self.default_evid.clone();
        for (p, v) in &self.val {
            m.set_val(0, p, v.clone());
        }
        for (key, v) in &self.evid {
            m.set_evid_key(0, key.clone(), v.clone());
        }
        m
    }
}

/// `V(t:A)` for a Mkrtychev model.
pub fn eval_mkrtychev(m: &MkrtychevModel, f: &Formula) -> TruthValue {
    m.eval(f)
}

/// The single-point Łukasiewicz model with the given valuation, evidence 1
/// everywhere and no accessible worlds.
pub fn embed_rpl_valuation<'a>(valuation: impl IntoIterator<Item = (&'a str, TruthValue)>) -> MkrtychevModel {
    let mut m = MkrtychevModel::new(TNormKind::Lukasiewicz);
    for (p, v) in valuation {
        m.set_val(p, v);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> Formula {
        text.parse().unwrap()
    }

    #[test]
    fn justified_value_uses_the_box() {
        let mut m = FittingModel::new(&["w"], TNormKind::Lukasiewicz).unwrap();
        m.add_access(0, 0);
        m.set_val(0, "p", TruthValue::ratio(7, 10));
        m.set_evid(0, &Term::var("t"), &f("p"), TruthValue::ratio(9, 10));
        assert_eq!(m.eval("w", &f("t:p")).unwrap(), TruthValue::ratio(3, 5));
        assert_eq!(m.eval("w", &f("#1 -> p")).unwrap(), TruthValue::ratio(7, 10));
        assert!(m.eval("v", &f("p")).is_err());
    }

    #[test]
    fn box_over_successors() {
        let mut m = FittingModel::new(&["w", "u", "v"], TNormKind::Goedel).unwrap();
        m.add_access(0, 1);
        m.add_access(0, 2);
        m.set_val(1, "p", TruthValue::ratio(1, 2));
        m.set_val(2, "p", TruthValue::ratio(3, 4));
        assert_eq!(m.eval_box("w", &f("p")).unwrap(), TruthValue::ratio(1, 2));
        assert_eq!(m.eval_box("u", &f("p")).unwrap(), TruthValue::one());
        m.set_evid(1, &Term::var("t"), &f("p"), TruthValue::ratio(1, 3));
        assert_eq!(m.eval("u", &f("t:p")).unwrap(), TruthValue::ratio(1, 3));
    }

    #[test]
    fn factivity_fails_along_an_edge() {
        let mut m = FittingModel::new(&["w", "v"], TNormKind::Lukasiewicz).unwrap();
        m.add_access(0, 1);
        m.set_val(1, "p", TruthValue::one());
        m.set_evid(0, &Term::var("t"), &f("p"), TruthValue::one());
        assert!(!m.is_valid_in_model(&f("t:p -> p")));
        assert_eq!(m.eval("w", &f("t:p -> p")).unwrap(), TruthValue::zero());
        assert!(m.is_valid_in_model(&f("#0 -> p")));
    }

    #[test]
    fn mkrtychev_models() {
        let mut m = MkrtychevModel::new(TNormKind::Product);
        m.set_evid(&Term::var("t"), &f("p"), TruthValue::ratio(2, 5));
        assert_eq!(eval_mkrtychev(&m, &f("t:p")), TruthValue::ratio(2, 5));
        assert_eq!(eval_mkrtychev(&m, &f("#0")), TruthValue::zero());
        assert!(eval_mkrtychev(&m, &f("s:(p -> q) -> (t:p -> s.t:q)")).is_one());
        assert_eq!(m.as_fitting().eval_at(0, &f("t:p")), TruthValue::ratio(2, 5));
    }

    #[test]
    fn rpl_embedding() {
        let m = embed_rpl_valuation([("p", TruthValue::ratio(1, 3))]);
        assert_eq!(m.eval(&f("p")), TruthValue::ratio(1, 3));
        assert_eq!(m.eval(&f("x.c:(p & q)")), TruthValue::one());
        let m = embed_rpl_valuation([("p", TruthValue::ratio(1, 2))]);
        assert_eq!(m.eval(&f("p & p")), TruthValue::zero());
    }
}
