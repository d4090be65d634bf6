//! Seeded random generation of admissible models.
//!
//! Values are drawn for the propositions and justified pairs of the relevant
//! formulas, for the summands of their sum terms and for the one-step
//! consequences of their evidence conditions.
//! The evidence table is then repaired so that every condition of the
//! relevant closure holds: forced pairs become 1, and each conclusion is
//! raised to its lower bound in order of increasing term size. Untabled keys
//! use default evidence 1 and satisfy every condition automatically.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::validate::{closure_of, relevant_closure, Constraint, FrameProperty};
use super::{EvidenceKey, FittingModel};
use crate::algebra::TNormKind;
use crate::kernel::ConstantSpecification;
use crate::logic::LogicConfig;
use crate::syntax::Formula;
use crate::truth::TruthValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelParams {
    pub max_worlds: usize,
    pub max_denominator: u64,
    /// Frame conditions enforced on top of those the logic requires.
    pub frame: Vec<FrameProperty>,
    /// Fixes the t-norm instead of drawing one the logic allows.
    pub tnorm: Option<TNormKind>,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams { max_worlds: 3, max_denominator: 6, frame: Vec::new(), tnorm: None }
    }
}

/// Draws truth values: 0 and 1 with probability 1/4 each, otherwise uniform
/// over the fractions with bounded denominator.
#[derive(Debug, Clone)]
pub struct ValuePicker {
    grid: Vec<TruthValue>,
}

impl ValuePicker {
    pub fn new(max_denominator: u64, crisp: bool) -> Self {
        let grid =
            if crisp { vec![TruthValue::zero(), TruthValue::one()] } else { TruthValue::grid(max_denominator.max(1)) };
        ValuePicker { grid }
    }

    pub fn pick(&self, rng: &mut impl Rng) -> TruthValue {
        match rng.random_range(0..4) {
            0 => TruthValue::zero(),
            1 => TruthValue::one(),
            _ => self.grid[rng.random_range(0..self.grid.len())].clone(),
        }
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.grid
    }
}

pub fn random_model(
    seed: u64,
    params: &ModelParams,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    relevant: &[Formula],
) -> FittingModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=params.max_worlds.max(1));
    let tnorms = config.allowed_tnorms();
    let drawn = tnorms[rng.random_range(0..tnorms.len())];
    let tnorm = params.tnorm.unwrap_or(drawn);
    let mut m = FittingModel::with_world_count(n, tnorm).expect("at least one world");
    for w in 0..n {
        for v in 0..n {
            if rng.random_bool(0.5) {
                m.add_access(w, v);
            }
        }
    }
    let mut frame = FrameProperty::required_by(config);
    frame.extend(params.frame.iter().copied());
    for property in frame {
        match property {
            FrameProperty::Reflexive => (0..n).for_each(|w| m.add_access(w, w)),
            FrameProperty::Serial => {
                for w in 0..n {
                    if m.successors(w).is_empty() {
                        let v = rng.random_range(0..n);
                        m.add_access(w, v);
                    }
                }
            }
        }
    }

    let picker = ValuePicker::new(params.max_denominator, config.crisp);
    let props: BTreeSet<_> = relevant.iter().flat_map(|f| f.props()).collect();
    for w in 0..n {
        for p in &props {
            m.set_val(w, p, picker.pick(&mut rng));
        }
    }
    if config.justified {
        let cs_pairs = cs.pairs(config);
        let mut base: BTreeSet<EvidenceKey> = relevant.iter().flat_map(|f| f.justified_pairs()).collect();
        base.extend(cs_pairs.iter().cloned());
        let closure = closure_of(base, config, cs, &cs_pairs);
        let mut tabled = closure.pairs.clone();
        for c in &closure.constraints {
            tabled.insert(c.conclusion().clone());
            if let Constraint::Sum { part, .. } = c {
                tabled.insert(part.clone());
            }
        }
        for w in 0..n {
            for key in &tabled {
                m.set_evid_key(w, key.clone(), picker.pick(&mut rng));
            }
        }
        repair_evidence(&mut m, config, cs, relevant);
    }
    m
}

/// Raises tabled evidence until every condition of the relevant closure
/// holds, assuming default evidence 1.
pub fn repair_evidence(m: &mut FittingModel, config: &LogicConfig, cs: &ConstantSpecification, relevant: &[Formula]) {
    m.set_default_evid(TruthValue::one());
    let closure = relevant_closure(m, config, cs, relevant);
    let mut constraints = closure.constraints;
    constraints.sort_by_cached_key(|c| c.conclusion().0.size());
    for w in 0..m.world_count() {
        for pair in &closure.forced {
            if m.has_evid_entry(w, pair) {
                m.set_evid_key(w, pair.clone(), TruthValue::one());
            }
        }
        for c in &constraints {
            let target = c.conclusion();
            let Some(current) = m.evid_entry(w, target).filter(|v| !v.is_one()).cloned() else { continue };
            let lower = c.lower_bound(m, w);
            if lower > current {
                m.set_evid_key(w, target.clone(), lower);
            }
        }
    }
}
