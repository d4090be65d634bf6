//! A direct Łukasiewicz evaluator for justification-free formulas.
//!
//! It works on raw rationals with the closed forms of every connective,
//! including the defined ones, and shares no code with the model evaluator.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::syntax::Formula;
use crate::truth::Rational;

/// The value of `f` under `valuation` (missing propositions are 0), or
/// `None` if `f` mentions justifications.
pub fn lukasiewicz_value(f: &Formula, valuation: &BTreeMap<String, Rational>) -> Option<Rational> {
    let one = Rational::one();
    let zero = Rational::zero();
    let clamp = |x: Rational| x.max(Rational::zero()).min(Rational::one());
    Some(match f {
        Formula::Prop(p) => valuation.get(&**p).cloned().unwrap_or_else(Rational::zero),
        Formula::Const(r) => r.as_rational().clone(),
        Formula::StrongConj(a, b) => {
            let (x, y) = (lukasiewicz_value(a, valuation)?, lukasiewicz_value(b, valuation)?);
            (x + y - &one).max(zero)
        }
        Formula::Implies(a, b) => {
            let (x, y) = (lukasiewicz_value(a, valuation)?, lukasiewicz_value(b, valuation)?);
            clamp(one - x + y)
        }
        Formula::Neg(a) => one - lukasiewicz_value(a, valuation)?,
        Formula::WeakConj(a, b) => lukasiewicz_value(a, valuation)?.min(lukasiewicz_value(b, valuation)?),
        Formula::WeakDisj(a, b) => lukasiewicz_value(a, valuation)?.max(lukasiewicz_value(b, valuation)?),
        Formula::Equiv(a, b) | Formula::BiImpl(a, b) => {
            let (x, y) = (lukasiewicz_value(a, valuation)?, lukasiewicz_value(b, valuation)?);
            one - (x - y).abs()
        }
        Formula::Justified(..) | Formula::Graded { .. } => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn hand_computed_values() {
        let v: BTreeMap<String, Rational> = [("p".to_string(), q(1, 3)), ("q".to_string(), q(3, 4))].into();
        let value = |text: &str| lukasiewicz_value(&text.parse().unwrap(), &v);
        // 1 - 1/3 + 3/4 capped at 1
        assert_eq!(value("p -> q"), Some(q(1, 1)));
        // 1 - 3/4 + 1/3
        assert_eq!(value("q -> p"), Some(q(7, 12)));
        // 1/3 + 3/4 - 1
        assert_eq!(value("p & q"), Some(q(1, 12)));
        assert_eq!(value("~p \\/ #1/2"), Some(q(2, 3)));
        assert_eq!(value("p == q"), Some(q(7, 12)));
        assert_eq!(value("t:p"), None);
    }
}
