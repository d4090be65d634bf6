//! Randomized search for admissible models refuting a formula.

use rayon::prelude::*;

use super::generate::{random_model, ModelParams};
use super::validate::validate_model;
use super::FittingModel;
use crate::kernel::ConstantSpecification;
use crate::logic::LogicConfig;
use crate::syntax::Formula;
use crate::truth::TruthValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_worlds: usize,
    pub max_denominator: u64,
    pub trials: u64,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_worlds: 3, max_denominator: 12, trials: 2000, seed: 0 }
    }
}

impl Budget {
    /// The generator seed of trial `i`.
    pub fn trial_seed(&self, i: u64) -> u64 {
        let mut z = self.seed.wrapping_add(i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub model: FittingModel,
    pub world: String,
    pub value: TruthValue,
    pub trial: u64,
}

/// The first trial (in trial order) producing an admissible model where `f`
/// evaluates below 1 at some world.
pub fn find_countermodel(
    f: &Formula,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    budget: &Budget,
) -> Option<Countermodel> {
    let params = ModelParams {
        max_worlds: budget.max_worlds,
        max_denominator: budget.max_denominator,
        ..ModelParams::default()
    };
    let relevant = std::slice::from_ref(f);
    (0..budget.trials).into_par_iter().find_map_first(|trial| {
        let m = random_model(budget.trial_seed(trial), &params, config, cs, relevant);
        let values = m.eval_all(f);
        let w = values.iter().position(|v| !v.is_one())?;
        if !validate_model(&m, config, cs, relevant).passed() {
            return None;
        }
        let value = values[w].clone();
        Some(Countermodel { world: m.world_name(w).to_string(), model: m, value, trial })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_refutations_of_non_theorems() {
        let cs = ConstantSpecification::empty();
        let budget = Budget { trials: 500, ..Budget::default() };
        let f: Formula = "t:p -> p".parse().unwrap();
        let found = find_countermodel(&f, &LogicConfig::lj(), &cs, &budget).unwrap();
        assert!(!found.model.eval(&found.world, &f).unwrap().is_one());
        assert_eq!(find_countermodel(&f, &LogicConfig::lj(), &cs, &budget), Some(found));
        assert!(find_countermodel(&f, &LogicConfig::lj().with_jt(), &cs, &budget).is_none());
        let theorem: Formula = "s:(p -> q) -> (t:p -> s.t:q)".parse().unwrap();
        assert!(find_countermodel(&theorem, &LogicConfig::gj(), &cs, &budget).is_none());
        let g: Formula = "p -> (p & p)".parse().unwrap();
        assert!(find_countermodel(&g, &LogicConfig::lj(), &cs, &budget).is_some());
        assert!(find_countermodel(&g, &LogicConfig::gj(), &cs, &budget).is_none());
    }
}
