//! Seeded sampling of formulas, terms, grades and axiom instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::axioms::active_schemes;
use crate::logic::LogicConfig;
use crate::syntax::scheme::{Scheme, Substitution};
use crate::syntax::{Formula, Term};
use crate::truth::TruthValue;

/// Formulas drawn for metavariables are at most this deep.
pub const MAX_DEPTH: usize = 3;

const PROPS: [&str; 3] = ["p", "q", "r"];
const VARIABLES: [&str; 3] = ["x", "y", "z"];
const CONSTANTS: [&str; 2] = ["c1", "c2"];

/// A random source for one suite case; equal seeds give equal draws.
pub struct Sampler {
    rng: ChaCha8Rng,
    config: LogicConfig,
    denominator: u64,
}

impl Sampler {
    pub fn new(seed: u64, config: &LogicConfig) -> Self {
        // Offset so the stream differs from the model generator fed `seed`.
        let rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED_F0A1_u64);
        Sampler { rng, config: *config, denominator: 6 }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// A grid value with denominator at most 6.
    pub fn value(&mut self) -> TruthValue {
        let grid = TruthValue::grid(self.denominator);
        grid[self.rng.random_range(0..grid.len())].clone()
    }

    /// Two grid values in increasing order.
    pub fn ordered_values(&mut self) -> (TruthValue, TruthValue) {
        let (a, b) = (self.value(), self.value());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn term(&mut self, depth: usize) -> Term {
        if depth == 0 || self.rng.random_bool(0.6) {
            return if self.rng.random_bool(0.75) {
                Term::var(VARIABLES[self.rng.random_range(0..VARIABLES.len())])
            } else {
                Term::constant(CONSTANTS[self.rng.random_range(0..CONSTANTS.len())])
            };
        }
        let (l, r) = (self.term(depth - 1), self.term(depth - 1));
        if self.rng.random_bool(0.5) {
            Term::app(l, r)
        } else {
            Term::sum(l, r)
        }
    }

    fn atom(&mut self) -> Formula {
        match self.rng.random_range(0..5) {
            0 if self.config.allows_rational_constants() => Formula::constant(self.value()),
            0 => Formula::bottom(),
            _ => Formula::prop(PROPS[self.rng.random_range(0..PROPS.len())]),
        }
    }

    /// A formula of depth at most `depth`, using justification and truth
    /// constants only where the logic has them.
    pub fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 || self.rng.random_bool(0.3) {
            return self.atom();
        }
        let justified = self.config.justified;
        match self.rng.random_range(0..if justified { 4 } else { 3 }) {
            0 => Formula::conj(self.formula(depth - 1), self.formula(depth - 1)),
            1 => Formula::imp(self.formula(depth - 1), self.formula(depth - 1)),
            2 => Formula::neg(self.formula(depth - 1)),
            _ => {
                let t = self.term(1);
                Formula::just(t, self.formula(depth - 1))
            }
        }
        .expand()
    }

    /// Binds every metavariable of `scheme` to a fresh draw.
    pub fn substitution(&mut self, scheme: &Scheme) -> Substitution {
        let (formulas, terms, rationals) = scheme.metavariables();
        let mut sigma = Substitution::new();
        for name in formulas {
            let depth = self.rng.random_range(0..MAX_DEPTH);
            let f = self.formula(depth);
            sigma = sigma.formula(&name, f);
        }
        for name in terms {
            let t = self.term(1);
            sigma = sigma.term(&name, t);
        }
        for name in rationals {
            let r = self.value();
            sigma = sigma.rational(&name, r);
        }
        sigma
    }

    /// One random instance of every axiom scheme of the logic.
    pub fn axiom_instances(&mut self) -> Vec<(&'static str, Formula)> {
        active_schemes(&self.config)
            .into_iter()
            .map(|s| {
                let sigma = self.substitution(s);
                let f = s.instantiate(&sigma).expect("every metavariable is bound");
                (&*s.name, f)
            })
            .collect()
    }
}
