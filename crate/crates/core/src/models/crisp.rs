//! Two-valued evaluation, written directly with Boolean connectives so it can
//! serve as a cross-check of the fuzzy evaluator on {0,1}-valued models.

use thiserror::Error;

use super::FittingModel;
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrispError {
    #[error("`{0}` has a value other than 0 or 1")]
    NonBoolean(String),
    #[error(transparent)]
    UnknownWorld(#[from] super::ModelError),
}

pub fn crisp_eval(m: &FittingModel, world: &str, f: &Formula) -> Result<bool, CrispError> {
    let w = m.world_index(world)?;
    eval(m, w, f)
}

fn bit(value: &crate::truth::TruthValue, what: impl Fn() -> String) -> Result<bool, CrispError> {
    if value.is_one() {
        Ok(true)
    } else if value.is_zero() {
        Ok(false)
    } else {
        Err(CrispError::NonBoolean(what()))
    }
}

fn eval(m: &FittingModel, w: usize, f: &Formula) -> Result<bool, CrispError> {
    Ok(match f {
        Formula::Prop(p) => bit(&m.val(w, p), || p.to_string())?,
        Formula::Const(r) => bit(r, || format!("#{r}"))?,
        Formula::StrongConj(a, b) | Formula::WeakConj(a, b) => eval(m, w, a)? && eval(m, w, b)?,
        Formula::Implies(a, b) => !eval(m, w, a)? || eval(m, w, b)?,
        Formula::Neg(a) => !eval(m, w, a)?,
        Formula::WeakDisj(a, b) => eval(m, w, a)? || eval(m, w, b)?,
        Formula::Equiv(a, b) | Formula::BiImpl(a, b) => eval(m, w, a)? == eval(m, w, b)?,
        Formula::Justified(t, a) => {
            let body = a.expand();
            let evidence = bit(&m.evid(w, t, &body), || format!("E({t}, {body})"))?;
            let mut holds = evidence;
            for &v in m.successors(w) {
                holds &= eval(m, v, a)?;
            }
            holds
        }
        Formula::Graded { .. } => eval(m, w, &f.expand())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TNormKind;
    use crate::syntax::Term;
    use crate::truth::TruthValue;

    #[test]
    fn agrees_with_the_fuzzy_evaluator() {
        let mut m = FittingModel::new(&["w", "v"], TNormKind::Goedel).unwrap();
        m.add_access(0, 1);
        m.add_access(1, 1);
        m.set_val(1, "p", TruthValue::one());
        m.set_evid(0, &Term::var("t"), &"p".parse().unwrap(), TruthValue::one());
        m.set_evid(1, &Term::var("t"), &"p".parse().unwrap(), TruthValue::zero());
        for text in ["t:p", "t:p -> p", "~t:p \\/ p", "t:p == p", "p /\\ ~p", "t:{>=1}p"] {
            let f: Formula = text.parse().unwrap();
            for (i, w) in ["w", "v"].iter().enumerate() {
                assert_eq!(crisp_eval(&m, w, &f).unwrap(), m.eval_at(i, &f).is_one(), "{text} at {w}");
            }
        }
    }

    #[test]
    fn rejects_fractional_values() {
        let mut m = FittingModel::new(&["w"], TNormKind::Lukasiewicz).unwrap();
        m.set_val(0, "p", TruthValue::ratio(1, 2));
        assert!(matches!(crisp_eval(&m, "w", &"p".parse().unwrap()), Err(CrispError::NonBoolean(_))));
        assert!(crisp_eval(&m, "x", &"p".parse().unwrap()).is_err());
    }
}
