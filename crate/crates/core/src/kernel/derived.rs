//! Derived theorems and rules, macro-expanded into axiom instances and
//! modus ponens. Nothing here is trusted: every result is an ordinary
//! builder line that the checker replays.
//!
//! Theorem constructors (`*_thm`) take formulas and cannot fail. Rules take
//! lines and report a [`BuildError`] when a premise has the wrong shape.

use super::builder::{BuildError, Line, ProofBuilder};
use crate::algebra::TNormKind;
use crate::logic::Base;
use crate::syntax::scheme::Substitution;
use crate::syntax::{Formula, Term};
use crate::truth::TruthValue;

fn abc(a: &Formula, b: &Formula, c: &Formula) -> Substitution {
    Substitution::new().formula("A", a.clone()).formula("B", b.clone()).formula("C", c.clone())
}

fn ab(a: &Formula, b: &Formula) -> Substitution {
    Substitution::new().formula("A", a.clone()).formula("B", b.clone())
}

fn imp(a: &Formula, b: &Formula) -> Formula {
    Formula::imp(a.clone(), b.clone())
}

fn conj(a: &Formula, b: &Formula) -> Formula {
    Formula::conj(a.clone(), b.clone())
}

fn bar(r: &TruthValue) -> Formula {
    Formula::Const(r.clone())
}

/// Which side a new summand is added on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumSide {
    /// `s` becomes `s+t`.
    Right,
    /// `s` becomes `t+s`.
    Left,
}

impl ProofBuilder {
    pub fn bl1(&mut self, a: &Formula, b: &Formula, c: &Formula) -> Line {
        self.axiom("BL1", &abc(a, b, c))
    }

    pub fn bl2(&mut self, a: &Formula, b: &Formula) -> Line {
        self.axiom("BL2", &ab(a, b))
    }

    pub fn bl3(&mut self, a: &Formula, b: &Formula) -> Line {
        self.axiom("BL3", &ab(a, b))
    }

    pub fn bl4(&mut self, a: &Formula, b: &Formula) -> Line {
        self.axiom("BL4", &ab(a, b))
    }

    pub fn bl5a(&mut self, a: &Formula, b: &Formula, c: &Formula) -> Line {
        self.axiom("BL5a", &abc(a, b, c))
    }

    pub fn bl5b(&mut self, a: &Formula, b: &Formula, c: &Formula) -> Line {
        self.axiom("BL5b", &abc(a, b, c))
    }

    pub fn bl6(&mut self, a: &Formula, b: &Formula, c: &Formula) -> Line {
        self.axiom("BL6", &abc(a, b, c))
    }

    pub fn bl7(&mut self, a: &Formula) -> Line {
        self.axiom("BL7", &Substitution::new().formula("A", a.clone()))
    }

    pub fn tc1(&mut self, r: &TruthValue, q: &TruthValue) -> Line {
        self.axiom("TC1", &Substitution::new().rational("r", r.clone()).rational("q", q.clone()))
    }

    pub fn tc2(&mut self, r: &TruthValue, q: &TruthValue) -> Line {
        self.axiom("TC2", &Substitution::new().rational("r", r.clone()).rational("q", q.clone()))
    }

    pub fn appl(&mut self, s: &Term, t: &Term, a: &Formula, b: &Formula) -> Line {
        self.axiom("Appl", &ab(a, b).term("s", s.clone()).term("t", t.clone()))
    }

    fn require_pavelka(&self, what: &'static str) -> Result<(), BuildError> {
        if self.config().base == Base::Pavelka {
            Ok(())
        } else {
            Err(BuildError::Unavailable(what))
        }
    }

    /// From `A -> B` and `B -> C`, `A -> C` (BL1 and two MP).
    pub fn syllogism(&mut self, ab_line: Line, bc_line: Line) -> Result<Line, BuildError> {
        let (a, b) = self.implication(ab_line)?;
        let (b2, c) = self.implication(bc_line)?;
        if b != b2 {
            return Err(BuildError::Shape { expected: "a chain A -> B, B -> C", found: self.formula(bc_line).clone() });
        }
        let ax = self.bl1(&a, &b, &c);
        let step = self.mp_ok(ab_line, ax);
        Ok(self.mp_ok(bc_line, step))
    }

    fn chain(&mut self, first: Line, rest: &[Line]) -> Line {
        rest.iter().fold(first, |acc, &l| self.syllogism(acc, l).expect("derived chains are well-shaped"))
    }

    /// `A -> (B -> A)`.
    pub fn weaken_thm(&mut self, a: &Formula, b: &Formula) -> Line {
        let elim = self.bl2(a, b);
        let curry = self.bl5b(a, b, a);
        self.mp_ok(elim, curry)
    }

    /// From `A`, `B -> A`.
    pub fn weaken(&mut self, line: Line, b: &Formula) -> Line {
        let a = self.formula(line).clone();
        let k = self.weaken_thm(&a, b);
        self.mp_ok(line, k)
    }

    /// `(A -> (B -> C)) -> (B -> (A -> C))`.
    pub fn exchange_thm(&mut self, a: &Formula, b: &Formula, c: &Formula) -> Line {
        let uncurry = self.bl5a(a, b, c);
        let swap = self.bl3(b, a);
        let pre = self.bl1(&conj(b, a), &conj(a, b), c);
        let reorder = self.mp_ok(swap, pre);
        let curry = self.bl5b(b, a, c);
        self.chain(uncurry, &[reorder, curry])
    }

    /// From `A -> (B -> C)`, `B -> (A -> C)`.
    pub fn exchange(&mut self, line: Line) -> Result<Line, BuildError> {
        let (a, bc) = self.implication(line)?;
        let (b, c) = match bc.as_implication() {
            Some((b, c)) => (b.clone(), c.clone()),
            None => return Err(BuildError::Shape { expected: "A -> (B -> C)", found: self.formula(line).clone() }),
        };
        let thm = self.exchange_thm(&a, &b, &c);
        Ok(self.mp_ok(line, thm))
    }

    /// `#0 -> #0`, the provable top of the constant-free languages.
    pub fn verum(&mut self) -> Line {
        self.bl7(&Formula::bottom())
    }

    /// `A -> A`.
    pub fn identity(&mut self, a: &Formula) -> Line {
        let top = self.verum();
        let top_formula = self.formula(top).clone();
        let k = self.weaken_thm(a, &top_formula);
        let swapped = self.exchange(k).expect("weakening has the exchange shape");
        self.mp_ok(top, swapped)
    }

    /// `A -> (B -> (A & B))`.
    pub fn pairing(&mut self, a: &Formula, b: &Formula) -> Line {
        let ab = conj(a, b);
        let id = self.identity(&ab);
        let curry = self.bl5b(a, b, &ab);
        self.mp_ok(id, curry)
    }

    /// From `A` and `B`, `A & B`.
    pub fn conj_intro(&mut self, a_line: Line, b_line: Line) -> Line {
        let (a, b) = (self.formula(a_line).clone(), self.formula(b_line).clone());
        let pair = self.pairing(&a, &b);
        let half = self.mp_ok(a_line, pair);
        self.mp_ok(b_line, half)
    }

    /// From `A & B`, `A`.
    pub fn elim_left(&mut self, line: Line) -> Result<Line, BuildError> {
        let (a, b) = self.conjunction(line)?;
        let ax = self.bl2(&a, &b);
        Ok(self.mp_ok(line, ax))
    }

    /// From `A & B`, `B`.
    pub fn elim_right(&mut self, line: Line) -> Result<Line, BuildError> {
        let (a, b) = self.conjunction(line)?;
        let swap = self.bl3(&a, &b);
        let swapped = self.mp_ok(line, swap);
        self.elim_left(swapped)
    }

    /// From `X -> Y`, `(A & X) -> (A & Y)`.
    pub fn mono_right(&mut self, line: Line, a: &Formula) -> Result<Line, BuildError> {
        let (x, y) = self.implication(line)?;
        let ay = conj(a, &y);
        let pair = self.pairing(a, &y);
        let pre = self.bl1(&x, &y, &ay);
        let compose = self.mp_ok(line, pre);
        let nested = self.syllogism(pair, compose)?;
        let uncurry = self.bl5a(a, &x, &ay);
        Ok(self.mp_ok(nested, uncurry))
    }

    /// From `X -> Y`, `(X & B) -> (Y & B)`.
    pub fn mono_left(&mut self, line: Line, b: &Formula) -> Result<Line, BuildError> {
        let (x, y) = self.implication(line)?;
        let into = self.bl3(&x, b);
        let mid = self.mono_right(line, b)?;
        let out = self.bl3(b, &y);
        Ok(self.chain(into, &[mid, out]))
    }

    /// From `X -> Y` and `U -> V`, `(X & U) -> (Y & V)`.
    pub fn mono_both(&mut self, xy: Line, uv: Line) -> Result<Line, BuildError> {
        let (u, _) = self.implication(uv)?;
        let (_, y) = self.implication(xy)?;
        let left = self.mono_left(xy, &u)?;
        let right = self.mono_right(uv, &y)?;
        self.syllogism(left, right)
    }

    /// `((X & Y) & Z) -> (X & (Y & Z))`.
    pub fn assoc_right_thm(&mut self, x: &Formula, y: &Formula, z: &Formula) -> Line {
        let yz = conj(y, z);
        let w = conj(x, &yz);
        let outer = self.pairing(x, &yz);
        let curry = self.bl5b(y, z, &w);
        let nested = self.chain(outer, &[curry]);
        let first = self.bl5a(x, y, &imp(z, &w));
        let step = self.mp_ok(nested, first);
        let second = self.bl5a(&conj(x, y), z, &w);
        self.mp_ok(step, second)
    }

    /// `(X & (Y & Z)) -> ((X & Y) & Z)`.
    pub fn assoc_left_thm(&mut self, x: &Formula, y: &Formula, z: &Formula) -> Line {
        let xy = conj(x, y);
        let w = conj(&xy, z);
        let pair = self.pairing(&xy, z);
        let curry = self.bl5b(x, y, &imp(z, &w));
        let nested = self.mp_ok(pair, curry);
        let inner = self.bl5a(y, z, &w);
        let grouped = self.chain(nested, &[inner]);
        let uncurry = self.bl5a(x, &conj(y, z), &w);
        self.mp_ok(grouped, uncurry)
    }

    /// `((X -> Y) & X) -> Y`.
    pub fn apply_thm(&mut self, x: &Formula, y: &Formula) -> Line {
        let xy = imp(x, y);
        let id = self.identity(&xy);
        let uncurry = self.bl5a(&xy, x, y);
        self.mp_ok(id, uncurry)
    }

    /// `((A1 -> B1) & (A2 -> B2)) -> ((A1 & A2) -> (B1 & B2))`.
    pub fn conj_imp_thm(&mut self, a1: &Formula, b1: &Formula, a2: &Formula, b2: &Formula) -> Line {
        let p = imp(a1, b1);
        let q = imp(a2, b2);
        let pq = conj(&p, &q);
        let a12 = conj(a1, a2);
        // (P & Q) & (A1 & A2)  ->  P & (Q & (A1 & A2))
        let r1 = self.assoc_right_thm(&p, &q, &a12);
        // Q & (A1 & A2)  ->  A1 & (Q & A2)
        let s1 = self.assoc_left_thm(&q, a1, a2);
        let swap = self.bl3(&q, a1);
        let s2 = self.mono_left(swap, a2).expect("BL3 instance is an implication");
        let s3 = self.assoc_right_thm(a1, &q, a2);
        let inner = self.chain(s1, &[s2, s3]);
        let r2 = self.mono_right(inner, &p).expect("chain is an implication");
        // P & (A1 & (Q & A2))  ->  (P & A1) & (Q & A2)
        let r3 = self.assoc_left_thm(&p, a1, &conj(&q, a2));
        let rearranged = self.chain(r1, &[r2, r3]);
        let apply1 = self.apply_thm(a1, b1);
        let apply2 = self.apply_thm(a2, b2);
        let both = self.mono_both(apply1, apply2).expect("applications are implications");
        let combined = self.chain(rearranged, &[both]);
        let curry = self.bl5b(&pq, &a12, &conj(b1, b2));
        self.mp_ok(combined, curry)
    }

    /// From `P -> (Q -> R)` and `R -> S`, `P -> (Q -> S)`.
    pub fn post_compose_inner(&mut self, pqr: Line, rs: Line) -> Result<Line, BuildError> {
        let (_, qr) = self.implication(pqr)?;
        let (q, r) = match qr.as_implication() {
            Some((q, r)) => (q.clone(), r.clone()),
            None => return Err(BuildError::Shape { expected: "P -> (Q -> R)", found: self.formula(pqr).clone() }),
        };
        let (r2, s) = self.implication(rs)?;
        if r != r2 {
            return Err(BuildError::Shape {
                expected: "R -> S matching the inner consequent",
                found: self.formula(rs).clone(),
            });
        }
        let pre = self.bl1(&q, &r, &s);
        let swapped = self.exchange(pre)?;
        let lift = self.mp_ok(rs, swapped);
        self.syllogism(pqr, lift)
    }

    /// `(A -> B) -> (A -> (A /\ B))`.
    pub fn weak_conj_intro_thm(&mut self, a: &Formula, b: &Formula) -> Line {
        let pair = self.pairing(a, &imp(a, b));
        self.exchange(pair).expect("pairing has the exchange shape")
    }

    /// From `X -> U` and `X -> V`, `X -> (U /\ V)`, by cases on BL6.
    pub fn and_intro_under(&mut self, xu: Line, xv: Line) -> Result<Line, BuildError> {
        let (x, u) = self.implication(xu)?;
        let (x2, v) = self.implication(xv)?;
        if x != x2 {
            return Err(BuildError::Shape { expected: "a common antecedent", found: self.formula(xv).clone() });
        }
        let uv = Formula::weak_conj(u.clone(), v.clone()).expand();
        let goal = imp(&x, &uv);
        // Case U -> V.
        let intro = self.weak_conj_intro_thm(&u, &v);
        let pre = self.bl1(&x, &u, &uv);
        let through_u = self.mp_ok(xu, pre);
        let case1 = self.syllogism(intro, through_u)?;
        // Case V -> U: V -> (V /\ U), then BL4 turns V /\ U into U /\ V.
        let intro_vu = self.weak_conj_intro_thm(&v, &u);
        let swap = self.bl4(&v, &u);
        let to_uv = self.post_compose_inner(intro_vu, swap)?;
        let pre = self.bl1(&x, &v, &uv);
        let through_v = self.mp_ok(xv, pre);
        let case2 = self.syllogism(to_uv, through_v)?;
        let cases = self.bl6(&u, &v, &goal);
        let half = self.mp_ok(case1, cases);
        Ok(self.mp_ok(case2, half))
    }

    /// `X -> (X \/ Y)`.
    pub fn or_intro_left_thm(&mut self, x: &Formula, y: &Formula) -> Line {
        let id = self.identity(&imp(x, y));
        let first = self.exchange(id).expect("identity on an implication has the exchange shape");
        let second = self.weaken_thm(x, &imp(y, x));
        self.and_intro_under(first, second).expect("both halves share the antecedent")
    }

    /// `Y -> (X \/ Y)`.
    pub fn or_intro_right_thm(&mut self, x: &Formula, y: &Formula) -> Line {
        let first = self.weaken_thm(y, &imp(x, y));
        let id = self.identity(&imp(y, x));
        let second = self.exchange(id).expect("identity on an implication has the exchange shape");
        self.and_intro_under(first, second).expect("both halves share the antecedent")
    }

    /// `(A -> B) \/ (B -> A)`.
    pub fn prelinearity_thm(&mut self, a: &Formula, b: &Formula) -> Line {
        let x = imp(a, b);
        let y = imp(b, a);
        let disj = Formula::weak_disj(x.clone(), y.clone()).expand();
        let left = self.or_intro_left_thm(&x, &y);
        let right = self.or_intro_right_thm(&x, &y);
        let cases = self.bl6(a, b, &disj);
        let half = self.mp_ok(left, cases);
        self.mp_ok(right, half)
    }

    /// `#1` from TC1 with `r = r' = 0`.
    pub fn one(&mut self) -> Result<Line, BuildError> {
        self.require_pavelka("the truth constant #1")?;
        let zero = TruthValue::zero();
        let tc = self.tc1(&zero, &zero);
        let forward = self.elim_left(tc)?;
        let top = self.verum();
        Ok(self.mp_ok(top, forward))
    }

    /// The provable top: `#1` with truth constants, `#0 -> #0` without.
    pub fn top(&mut self) -> Line {
        if self.config().base == Base::Pavelka {
            self.one().expect("Pavelka logic proves #1")
        } else {
            self.verum()
        }
    }

    /// `#r -> #q` for `r <= q`.
    pub fn constant_order(&mut self, r: &TruthValue, q: &TruthValue) -> Result<Line, BuildError> {
        self.require_pavelka("truth-constant bookkeeping")?;
        if r > q {
            return Err(BuildError::Shape { expected: "r <= q", found: imp(&bar(r), &bar(q)) });
        }
        let tc = self.tc1(r, q);
        let back = self.elim_right(tc)?;
        let one = self.one()?;
        Ok(self.mp_ok(one, back))
    }

    /// From `A`, the graded form `#1 -> A`.
    pub fn graded_one(&mut self, line: Line) -> Result<Line, BuildError> {
        self.require_pavelka("graded formulas")?;
        Ok(self.weaken(line, &bar(&TruthValue::one())))
    }

    fn graded_parts(&self, line: Line) -> Result<(TruthValue, Formula), BuildError> {
        match self.formula(line).as_implication() {
            Some((Formula::Const(r), x)) => Ok((r.clone(), x.clone())),
            _ => Err(BuildError::Shape { expected: "a graded formula #r -> A", found: self.formula(line).clone() }),
        }
    }

    /// From `#r -> X`, `#q -> Y` and `(X & Y) -> Z`, `#(r *Ł q) -> Z`.
    fn graded_combine(&mut self, xl: Line, yl: Line, combine: Line) -> Result<Line, BuildError> {
        let (r, x) = self.graded_parts(xl)?;
        let (q, y) = self.graded_parts(yl)?;
        let both = self.conj_intro(xl, yl);
        let dist = self.conj_imp_thm(&bar(&r), &x, &bar(&q), &y);
        let inside = self.mp_ok(both, dist);
        let tc = self.tc2(&r, &q);
        let back = self.elim_right(tc)?;
        let graded = self.syllogism(back, inside)?;
        self.syllogism(graded, combine)
    }

    /// Graded modus ponens: from `#r -> (A -> B)` and `#q -> A`,
    /// `#(r *Ł q) -> B`.
    pub fn gmp(&mut self, major: Line, minor: Line) -> Result<Line, BuildError> {
        self.require_pavelka("graded modus ponens")?;
        let (_, ab) = self.graded_parts(major)?;
        let (_, a) = self.graded_parts(minor)?;
        let b = match ab.as_implication() {
            Some((a2, b)) if *a2 == a => b.clone(),
            _ => {
                return Err(BuildError::Shape {
                    expected: "#r -> (A -> B) with A matching",
                    found: self.formula(major).clone(),
                })
            }
        };
        let apply = self.apply_thm(&a, &b);
        self.graded_combine(major, minor, apply)
    }

    /// Justified graded modus ponens: from `#r -> s:(A -> B)` and
    /// `#q -> t:A`, `#(r *Ł q) -> s.t:B`.
    pub fn jgmp(&mut self, major: Line, minor: Line) -> Result<Line, BuildError> {
        self.require_pavelka("justified graded modus ponens")?;
        let (_, sab) = self.graded_parts(major)?;
        let (_, ta) = self.graded_parts(minor)?;
        let shape_error = || BuildError::Shape { expected: "#r -> s:(A -> B) and #q -> t:A", found: sab.clone() };
        let (s, ab) = sab.as_justified().ok_or_else(shape_error)?;
        let (t, a) = ta.as_justified().ok_or_else(shape_error)?;
        let (a2, b) = ab.as_implication().ok_or_else(shape_error)?;
        if a2 != a {
            return Err(shape_error());
        }
        let (s, t, a, b) = (s.clone(), t.clone(), a.clone(), b.clone());
        let appl = self.appl(&s, &t, &a, &b);
        let st_b = Formula::just(Term::app(s.clone(), t.clone()), b.clone());
        let uncurry = self.bl5a(&sab, &ta, &st_b);
        let combine = self.mp_ok(appl, uncurry);
        self.graded_combine(major, minor, combine)
    }

    /// Monotonicity: from `#r -> s:A`, `#r -> (s+t):A` or `#r -> (t+s):A`.
    pub fn mon(&mut self, line: Line, t: &Term, side: SumSide) -> Result<Line, BuildError> {
        let (_, sa) = self.graded_parts(line)?;
        let (s, a) = match sa.as_justified() {
            Some((s, a)) => (s.clone(), a.clone()),
            None => return Err(BuildError::Shape { expected: "#r -> s:A", found: self.formula(line).clone() }),
        };
        let sigma = Substitution::new().formula("A", a).term("s", s).term("t", t.clone());
        let name = match side {
            SumSide::Right => "Sum1",
            SumSide::Left => "Sum2",
        };
        let sum = self.axiom(name, &sigma);
        self.syllogism(line, sum)
    }

    /// From `#r -> A` and `#q -> B`, `#(r *Ł q) -> (A & B)`.
    pub fn graded_conj(&mut self, xl: Line, yl: Line) -> Result<Line, BuildError> {
        self.require_pavelka("graded conjunction")?;
        let (_, x) = self.graded_parts(xl)?;
        let (_, y) = self.graded_parts(yl)?;
        let id = self.identity(&conj(&x, &y));
        self.graded_combine(xl, yl, id)
    }

    /// From `#q -> A` with `r <= q`, `#r -> A`.
    pub fn lower_grade(&mut self, line: Line, r: &TruthValue) -> Result<Line, BuildError> {
        let (q, _) = self.graded_parts(line)?;
        if q == *r {
            return Ok(line);
        }
        let order = self.constant_order(r, &q)?;
        self.syllogism(order, line)
    }

    /// From `t<r>:A` (expanded), `#r -> t:A`.
    pub fn exact_to_at_least(&mut self, line: Line) -> Result<Line, BuildError> {
        self.elim_left(line)
    }

    /// From `#1 -> t:A`, `t<1>:A`.
    pub fn at_least_one_to_exact(&mut self, line: Line) -> Result<Line, BuildError> {
        let (r, ta) = self.graded_parts(line)?;
        if !r.is_one() || ta.as_justified().is_none() {
            return Err(BuildError::Shape { expected: "#1 -> t:A", found: self.formula(line).clone() });
        }
        let at_least = self.formula(line).clone();
        let one = self.one()?;
        let upper = self.weaken(one, &ta);
        let lifted = self.weaken(upper, &at_least);
        Ok(self.conj_intro(line, lifted))
    }

    /// The Łukasiewicz product used for grades.
    pub fn grade_product(r: &TruthValue, q: &TruthValue) -> TruthValue {
        TNormKind::Lukasiewicz.tnorm(r, q)
    }
}
