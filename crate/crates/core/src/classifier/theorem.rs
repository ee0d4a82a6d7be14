//! The seven ways a proper power `V^m` (m ≥ 2) can be a commutator.
//!
//! Searches work on the fully cyclically reduced representative `R` of `V` and
//! transport witnesses back to `V`. Clean-split searches run first over every rotation;
//! a bounded search over short torsion elements runs only if they find nothing.

use crate::conjugacy::{are_conjugate, classify_inverse_conjugate, InverseConjugacyCase};
use crate::error::{Error, Result};
use crate::factor::FactorElement;
use crate::harness::enumerate_words;
use crate::wicks::{is_commutator, CommutatorWitness, WicksConfig};
use crate::word::{CyclicReduction, GroupContext, Word};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassifierConfig {
    pub wicks: WicksConfig,
    /// Length bound on torsion candidates in the fallback search; `None` means
    /// `|V^m| + 2`.
    pub fallback_torsion_len: Option<usize>,
}

/// One clause of the classification, with witnesses for the original `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremCase {
    /// `V = W⁻¹·g·W` and `[x, y] = g^m` in the factor of `g`.
    Factor {
        w: Word,
        letter: FactorElement,
        x: FactorElement,
        y: FactorElement,
    },
    /// m even, `V = AB`, `A² = B² = 1`.
    EvenPair { a: Word, b: Word },
    /// m odd, `V = AC⁻¹AC`, `A² = 1`.
    OddPair { a: Word, c: Word },
    /// m = 6, `V = AB`, `A² = B³ = 1`.
    Six { a: Word, b: Word },
    /// m = 3, `V = AB`, `A³ = B³ = 1`.
    Three { a: Word, b: Word },
    /// m = 2, `V = AB`, `A² = 1`, `C⁻¹BC = B⁻¹`.
    Two { a: Word, b: Word, c: Word },
    /// m = 4, `V² = ABC`, `A² = B² = C² = 1`.
    Four { a: Word, b: Word, c: Word },
}

impl TheoremCase {
    pub fn tag(&self) -> &'static str {
        match self {
            TheoremCase::Factor { .. } => "Factor",
            TheoremCase::EvenPair { .. } => "EvenPair",
            TheoremCase::OddPair { .. } => "OddPair",
            TheoremCase::Six { .. } => "Six",
            TheoremCase::Three { .. } => "Three",
            TheoremCase::Two { .. } => "Two",
            TheoremCase::Four { .. } => "Four",
        }
    }

    /// Clause letter (a)–(g).
    pub fn clause(&self) -> char {
        match self {
            TheoremCase::Factor { .. } => 'a',
            TheoremCase::EvenPair { .. } => 'b',
            TheoremCase::OddPair { .. } => 'c',
            TheoremCase::Six { .. } => 'd',
            TheoremCase::Three { .. } => 'e',
            TheoremCase::Two { .. } => 'f',
            TheoremCase::Four { .. } => 'g',
        }
    }

    /// Named word witnesses in display order.
    pub fn words(&self) -> Vec<(&'static str, &Word)> {
        match self {
            TheoremCase::Factor { w, .. } => vec![("W", w)],
            TheoremCase::EvenPair { a, b }
            | TheoremCase::Six { a, b }
            | TheoremCase::Three { a, b } => vec![("A", a), ("B", b)],
            TheoremCase::OddPair { a, c } => vec![("A", a), ("C", c)],
            TheoremCase::Two { a, b, c } | TheoremCase::Four { a, b, c } => {
                vec![("A", a), ("B", b), ("C", c)]
            }
        }
    }

    /// The same case for `t·V·t⁻¹`.
    pub fn conjugated(&self, ctx: &GroupContext, t: &Word) -> Self {
        let tr = |w: &Word| ctx.conjugate_by(w, t);
        match self {
            TheoremCase::Factor { w, letter, x, y } => TheoremCase::Factor {
                w: ctx.mul(w, &ctx.inverse(t)),
                letter: *letter,
                x: *x,
                y: *y,
            },
            TheoremCase::EvenPair { a, b } => TheoremCase::EvenPair { a: tr(a), b: tr(b) },
            TheoremCase::OddPair { a, c } => TheoremCase::OddPair { a: tr(a), c: tr(c) },
            TheoremCase::Six { a, b } => TheoremCase::Six { a: tr(a), b: tr(b) },
            TheoremCase::Three { a, b } => TheoremCase::Three { a: tr(a), b: tr(b) },
            TheoremCase::Two { a, b, c } => TheoremCase::Two {
                a: tr(a),
                b: tr(b),
                c: tr(c),
            },
            TheoremCase::Four { a, b, c } => TheoremCase::Four {
                a: tr(a),
                b: tr(b),
                c: tr(c),
            },
        }
    }
}

fn violated(ctx: &GroupContext, invariant: &str, lhs: &Word, rhs: &Word) -> Error {
    Error::CaseInvariantViolated {
        invariant: invariant.to_string(),
        lhs: ctx.format_word(lhs),
        rhs: ctx.format_word(rhs),
    }
}

fn expect_eq(ctx: &GroupContext, invariant: &str, lhs: Word, rhs: &Word) -> Result<()> {
    if &lhs == rhs {
        Ok(())
    } else {
        Err(violated(ctx, invariant, &lhs, rhs))
    }
}

fn expect_m(ok: bool, clause: &str, m: i64) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::CaseInvariantViolated {
            invariant: format!("exponent condition of {clause}"),
            lhs: format!("m = {m}"),
            rhs: clause.to_string(),
        })
    }
}

/// Checks the case's invariants, evaluates its displayed commutator and compares it
/// with `V^m`. Returns the reproduced commutator.
pub fn verify_case(ctx: &GroupContext, v: &Word, m: i64, case: &TheoremCase) -> Result<Word> {
    let one = Word::identity();
    let inv = |w: &Word| ctx.inverse(w);
    let sq = |w: &Word| ctx.power(w, 2);
    let cube = |w: &Word| ctx.power(w, 3);
    let target = ctx.power(v, m);

    let reproduced = match case {
        TheoremCase::Factor { w, letter, x, y } => {
            let core = Word::from(*letter);
            expect_eq(ctx, "V = W⁻¹·g·W", ctx.product([&inv(w), &core, w]), v)?;
            if x.factor != letter.factor || y.factor != letter.factor {
                return Err(Error::MixedFactors(x.factor, letter.factor));
            }
            let f = ctx.factor(letter.factor);
            let comm = FactorElement::new(letter.factor, f.commutator(x.elem, y.elem));
            expect_eq(
                ctx,
                "[x, y] = g^m in the factor",
                Word::from(comm),
                &Word::from(ctx.factor_pow(*letter, m)),
            )?;
            ctx.product([&inv(w), &Word::from(comm), w])
        }
        TheoremCase::EvenPair { a, b } => {
            expect_m(m >= 2 && m % 2 == 0, "m even", m)?;
            expect_eq(ctx, "A² = 1", sq(a), &one)?;
            expect_eq(ctx, "B² = 1", sq(b), &one)?;
            expect_eq(ctx, "V = AB", ctx.mul(a, b), v)?;
            let ab = ctx.mul(a, b);
            ctx.commutator(a, &ctx.mul(b, &ctx.power(&ab, (m - 2) / 2)))
        }
        TheoremCase::OddPair { a, c } => {
            expect_m(m >= 1 && m % 2 == 1, "m odd", m)?;
            expect_eq(ctx, "A² = 1", sq(a), &one)?;
            let shape = ctx.product([a, &inv(c), a, c]);
            expect_eq(ctx, "V = AC⁻¹AC", shape.clone(), v)?;
            ctx.commutator(a, &ctx.mul(c, &ctx.power(&shape, (m - 1) / 2)))
        }
        TheoremCase::Six { a, b } => {
            expect_m(m == 6, "m = 6", m)?;
            expect_eq(ctx, "A² = 1", sq(a), &one)?;
            expect_eq(ctx, "B³ = 1", cube(b), &one)?;
            expect_eq(ctx, "V = AB", ctx.mul(a, b), v)?;
            let ab = ctx.mul(a, b);
            ctx.commutator(
                &ctx.product([&inv(b), a, b, a]),
                &ctx.mul(b, &ctx.power(&ab, 2)),
            )
        }
        TheoremCase::Three { a, b } => {
            expect_m(m == 3, "m = 3", m)?;
            expect_eq(ctx, "A³ = 1", cube(a), &one)?;
            expect_eq(ctx, "B³ = 1", cube(b), &one)?;
            expect_eq(ctx, "V = AB", ctx.mul(a, b), v)?;
            let bab = ctx.product([b, a, b]);
            let first = ctx.commutator(&ctx.mul(b, &inv(a)), &bab);
            let second = ctx.commutator(&ctx.mul(b, &sq(a)), &bab);
            expect_eq(ctx, "[BA⁻¹, BAB] = [BA², BAB]", second, &first)?;
            first
        }
        TheoremCase::Two { a, b, c } => {
            expect_m(m == 2, "m = 2", m)?;
            expect_eq(ctx, "A² = 1", sq(a), &one)?;
            expect_eq(ctx, "V = AB", ctx.mul(a, b), v)?;
            expect_eq(ctx, "C⁻¹BC = B⁻¹", ctx.product([&inv(c), b, c]), &inv(b))?;
            ctx.commutator(&ctx.mul(&inv(c), a), b)
        }
        TheoremCase::Four { a, b, c } => {
            expect_m(m == 4, "m = 4", m)?;
            expect_eq(ctx, "A² = 1", sq(a), &one)?;
            expect_eq(ctx, "B² = 1", sq(b), &one)?;
            expect_eq(ctx, "C² = 1", sq(c), &one)?;
            expect_eq(ctx, "V² = ABC", ctx.product([a, b, c]), &sq(v))?;
            ctx.commutator(&ctx.mul(b, a), &ctx.mul(b, c))
        }
    };
    expect_eq(ctx, "displayed commutator = V^m", reproduced, &target).map_err(|e| match e {
        Error::CaseInvariantViolated { lhs, rhs, .. } => Error::CaseInvariantViolated {
            invariant: format!("clause ({}) commutator formula", case.clause()),
            lhs,
            rhs,
        },
        e => e,
    })?;
    Ok(target)
}

/// Splits `q` as `D·E` with `D² = E² = 1`, if possible.
pub fn involution_pair(ctx: &GroupContext, q: &Word) -> Option<(Word, Word)> {
    if q.is_identity() {
        return Some((Word::identity(), Word::identity()));
    }
    are_conjugate(ctx, q, &ctx.inverse(q))?;
    match classify_inverse_conjugate(ctx, q).ok()? {
        InverseConjugacyCase::InvolutionPair { d, e } => Some((d, e)),
        InverseConjugacyCase::FactorCase { w, letter, .. } => {
            let (s, t) = ctx.factor(letter.factor).involution_pair(letter.elem)?;
            let lift = |k: usize| {
                ctx.product([
                    &ctx.inverse(&w),
                    &Word::from(FactorElement::new(letter.factor, k)),
                    &w,
                ])
            };
            Some((lift(s), lift(t)))
        }
    }
}

/// Torsion elements `W⁻¹·t·W` of length ≤ `max_len` whose core letter `t` satisfies
/// `keep(order of t)`, in enumeration order of `W`, then of `t`.
pub fn torsion_elements(
    ctx: &GroupContext,
    max_len: usize,
    keep: impl Fn(usize) -> bool,
) -> Vec<Word> {
    if max_len == 0 {
        return Vec::new();
    }
    let cores: Vec<FactorElement> = ctx
        .factors()
        .iter()
        .enumerate()
        .flat_map(|(i, f)| (1..f.order()).map(move |e| FactorElement::new(i, e)))
        .filter(|&t| keep(ctx.factor_order(t)))
        .collect();
    let mut out = Vec::new();
    for w in enumerate_words(ctx, (max_len - 1) / 2) {
        for &t in &cores {
            if w.first().is_some_and(|l| l.factor == t.factor) {
                continue;
            }
            out.push(ctx.product([&ctx.inverse(&w), &Word::from(t), &w]));
        }
    }
    out
}

fn push_unique(cases: &mut Vec<TheoremCase>, case: TheoremCase) {
    if !cases.contains(&case) {
        cases.push(case);
    }
}

/// Every clause search for `V^m`, each result verified. Requires `V^m` to be a
/// commutator.
pub fn classify_power_commutator(
    ctx: &GroupContext,
    v: &Word,
    m: i64,
    cfg: &ClassifierConfig,
) -> Result<Vec<TheoremCase>> {
    if m < 2 {
        return Err(Error::PreconditionViolated(format!("m = {m} is below 2")));
    }
    if v.is_identity() {
        return Err(Error::PreconditionViolated("V is trivial".into()));
    }
    let vm = ctx.power(v, m);
    if is_commutator(ctx, &vm, &cfg.wicks)?.is_none() {
        return Err(Error::NotACommutatorPower);
    }
    let CyclicReduction {
        representative: r,
        conjugator: u,
    } = ctx.cyclic_reduce(v);

    let mut cases = Vec::new();
    if r.len() == 1 {
        let g = r.letters()[0];
        if let Some((x, y)) = ctx.factor_commutator_test(ctx.factor_pow(g, m)) {
            cases.push(TheoremCase::Factor {
                w: ctx.inverse(&u),
                letter: g,
                x,
                y,
            });
        }
    } else {
        clean_split_search(ctx, &r, m, &mut cases);
        if cases.is_empty() {
            let bound = cfg.fallback_torsion_len.unwrap_or(vm.len() + 2);
            fallback_search(ctx, &r, m, bound, &mut cases);
        }
        cases = cases.iter().map(|c| c.conjugated(ctx, &u)).collect();
    }
    if cases.is_empty() {
        return Err(Error::SearchBoundExceeded(format!(
            "no clause found for V = {}, m = {m}",
            ctx.format_word(v)
        )));
    }
    for case in &cases {
        verify_case(ctx, v, m, case)?;
    }
    Ok(cases)
}

/// Clause searches over clean splits of every rotation of `R` (or of `R²` for m = 4).
/// Witnesses are for `R` itself.
fn clean_split_search(ctx: &GroupContext, r: &Word, m: i64, out: &mut Vec<TheoremCase>) {
    let n = r.len();
    let inv = |w: &Word| ctx.inverse(w);
    let order_divides = |w: &Word, k: i64| ctx.power(w, k).is_identity();

    let mut by_clause: [Vec<TheoremCase>; 5] = Default::default();
    for j in 0..n {
        let rot = r.rotation(j);
        // R = t·rot·t⁻¹
        let t = r.slice(0..j);
        let tr = |w: &Word| ctx.conjugate_by(w, &t);
        for s in 1..n {
            let (a0, b0) = (rot.slice(0..s), rot.slice(s..n));
            let a_inv = order_divides(&a0, 2);
            let b_inv = order_divides(&b0, 2);
            if m % 2 == 0 && a_inv && b_inv {
                by_clause[0].push(TheoremCase::EvenPair {
                    a: tr(&a0),
                    b: tr(&b0),
                });
            }
            if m % 2 == 1 && a_inv && b_inv {
                if let Some(c0) = are_conjugate(ctx, &a0, &b0) {
                    by_clause[1].push(TheoremCase::OddPair {
                        a: tr(&a0),
                        c: tr(&c0.witness),
                    });
                }
            }
            if m == 6 && a_inv && order_divides(&b0, 3) {
                by_clause[2].push(TheoremCase::Six {
                    a: tr(&a0),
                    b: tr(&b0),
                });
            }
            if m == 3 && order_divides(&a0, 3) && order_divides(&b0, 3) {
                by_clause[3].push(TheoremCase::Three {
                    a: tr(&a0),
                    b: tr(&b0),
                });
            }
            if m == 2 && a_inv {
                if let Some(c0) = are_conjugate(ctx, &b0, &inv(&b0)) {
                    by_clause[4].push(TheoremCase::Two {
                        a: tr(&a0),
                        b: tr(&b0),
                        c: tr(&c0.witness),
                    });
                }
            }
        }
    }
    for case in by_clause.into_iter().flatten() {
        push_unique(out, case);
    }

    if m == 4 {
        let r2 = ctx.mul(r, r);
        for j in 0..n {
            let rot = r2.rotation(j);
            let t = r2.slice(0..j);
            for s in 1..2 * n {
                let a0 = rot.slice(0..s);
                if !order_divides(&a0, 2) {
                    continue;
                }
                if let Some((b0, c0)) = involution_pair(ctx, &rot.slice(s..2 * n)) {
                    let tr = |w: &Word| ctx.conjugate_by(w, &t);
                    push_unique(
                        out,
                        TheoremCase::Four {
                            a: tr(&a0),
                            b: tr(&b0),
                            c: tr(&c0),
                        },
                    );
                }
            }
        }
    }
}

/// Clause searches with one witness drawn from torsion elements of bounded length.
fn fallback_search(ctx: &GroupContext, r: &Word, m: i64, bound: usize, out: &mut Vec<TheoremCase>) {
    let inv = |w: &Word| ctx.inverse(w);
    let order_divides = |w: &Word, k: i64| ctx.power(w, k).is_identity();
    let involutions = torsion_elements(ctx, bound, |k| k == 2);

    for a in &involutions {
        let b = ctx.mul(a, r);
        if m % 2 == 0 && order_divides(&b, 2) {
            push_unique(
                out,
                TheoremCase::EvenPair {
                    a: a.clone(),
                    b: b.clone(),
                },
            );
        }
        if m % 2 == 1 && order_divides(&b, 2) {
            if let Some(c) = are_conjugate(ctx, a, &b) {
                push_unique(
                    out,
                    TheoremCase::OddPair {
                        a: a.clone(),
                        c: c.witness,
                    },
                );
            }
        }
        if m == 6 && order_divides(&b, 3) {
            push_unique(
                out,
                TheoremCase::Six {
                    a: a.clone(),
                    b: b.clone(),
                },
            );
        }
        if m == 2 {
            if let Some(c) = are_conjugate(ctx, &b, &inv(&b)) {
                push_unique(
                    out,
                    TheoremCase::Two {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.witness,
                    },
                );
            }
        }
        if m == 4 {
            let q = ctx.product([a, r, r]);
            if let Some((b, c)) = involution_pair(ctx, &q) {
                push_unique(out, TheoremCase::Four { a: a.clone(), b, c });
            }
        }
    }
    if m == 3 {
        for a in torsion_elements(ctx, bound, |k| k == 3) {
            let b = ctx.mul(&inv(&a), r);
            if order_divides(&b, 3) {
                push_unique(out, TheoremCase::Three { a, b });
            }
        }
    }
}

/// An additional reading `w = root^exponent` for a divisor of the primitive exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeExponent {
    pub root: Word,
    pub exponent: usize,
    pub cases: Vec<TheoremCase>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub root: Word,
    pub exponent: usize,
    pub cases: Vec<TheoremCase>,
    pub witness: CommutatorWitness,
    pub alternatives: Vec<AlternativeExponent>,
}

/// Primitive root extraction, commutator check and classification in one step.
/// `None` when `w` is not a proper power or not a commutator.
pub fn full_pipeline(
    ctx: &GroupContext,
    w: &Word,
    cfg: &ClassifierConfig,
) -> Result<Option<PipelineResult>> {
    let (root, exponent) = ctx.primitive_root(w)?;
    if exponent < 2 {
        return Ok(None);
    }
    let Some(witness) = is_commutator(ctx, w, &cfg.wicks)? else {
        return Ok(None);
    };
    let cases = classify_power_commutator(ctx, &root, exponent as i64, cfg)?;
    let alternatives = (2..exponent)
        .filter(|d| exponent % d == 0)
        .map(|d| {
            let r = ctx.power(&root, (exponent / d) as i64);
            classify_power_commutator(ctx, &r, d as i64, cfg).map(|cases| AlternativeExponent {
                root: r,
                exponent: d,
                cases,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Some(PipelineResult {
        root,
        exponent,
        cases,
        witness,
        alternatives,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::FactorGroup;

    #[test]
    fn c2c2_square() {
        let g = GroupContext::cyclic(&[2, 2]).unwrap();
        let w = |s: &str| g.parse_word(s).unwrap();
        let cases = classify_power_commutator(&g, &w("0.1 1.1"), 2, &Default::default()).unwrap();
        assert!(cases.contains(&TheoremCase::EvenPair {
            a: w("0.1"),
            b: w("1.1")
        }));
        assert!(cases.contains(&TheoremCase::Two {
            a: w("0.1"),
            b: w("1.1"),
            c: Word::identity()
        }));
    }

    #[test]
    fn fallback_finds_verified_cases() {
        let cases_for = |g: &GroupContext, v: &Word, m: i64| {
            let mut cases = Vec::new();
            fallback_search(g, v, m, 7, &mut cases);
            for c in &cases {
                verify_case(g, v, m, c).unwrap();
            }
            cases.iter().map(TheoremCase::tag).collect::<Vec<_>>()
        };
        let g = GroupContext::cyclic(&[2, 2]).unwrap();
        let ab = g.parse_word("0.1 1.1").unwrap();
        for (m, tag) in [(2, "EvenPair"), (2, "Two"), (4, "Four")] {
            assert!(cases_for(&g, &ab, m).contains(&tag), "m = {m}: no {tag}");
        }
        // a·(bab) with a conjugate to bab
        let abab = g.parse_word("0.1 1.1 0.1 1.1").unwrap();
        assert!(cases_for(&g, &abab, 3).contains(&"OddPair"));
        let h = GroupContext::cyclic(&[3, 3]).unwrap();
        let ab = h.parse_word("0.1 1.1").unwrap();
        assert!(cases_for(&h, &ab, 3).contains(&"Three"));
        let k = GroupContext::cyclic(&[2, 3]).unwrap();
        let ab = k.parse_word("0.1 1.1").unwrap();
        assert!(cases_for(&k, &ab, 6).contains(&"Six"));
    }

    #[test]
    fn c3c3_cube() {
        let g = GroupContext::cyclic(&[3, 3]).unwrap();
        let w = |s: &str| g.parse_word(s).unwrap();
        let v = w("0.1 1.1");
        let cases = classify_power_commutator(&g, &v, 3, &Default::default()).unwrap();
        let three = TheoremCase::Three {
            a: w("0.1"),
            b: w("1.1"),
        };
        assert!(cases.contains(&three));
        assert!(cases.iter().all(|c| c.tag() == "Three"));
        // V³ = [BA², BAB]
        let (a, b) = (w("0.1"), w("1.1"));
        let lhs = g.commutator(&g.mul(&b, &g.power(&a, 2)), &g.product([&b, &a, &b]));
        assert_eq!(lhs, g.power(&v, 3));
    }

    #[test]
    fn verify_case_examples() {
        let g = GroupContext::cyclic(&[2, 2]).unwrap();
        let w = |s: &str| g.parse_word(s).unwrap();
        let ab = w("0.1 1.1");
        let got = verify_case(
            &g,
            &ab,
            4,
            &TheoremCase::EvenPair {
                a: w("0.1"),
                b: w("1.1"),
            },
        )
        .unwrap();
        assert_eq!(got, g.power(&ab, 4));
        let two = TheoremCase::Two {
            a: w("0.1"),
            b: w("1.1"),
            c: Word::identity(),
        };
        assert_eq!(verify_case(&g, &ab, 2, &two).unwrap(), w("0.1 1.1 0.1 1.1"));
        // wrong exponent for the clause
        assert!(verify_case(&g, &ab, 3, &two).is_err());

        let h = GroupContext::cyclic(&[2, 3]).unwrap();
        let v = h.parse_word("0.1 1.1").unwrap();
        let six = TheoremCase::Six {
            a: h.parse_word("0.1").unwrap(),
            b: h.parse_word("1.1").unwrap(),
        };
        assert_eq!(verify_case(&h, &v, 6, &six).unwrap(), h.power(&v, 6));
    }

    #[test]
    fn klein_four_fourth_power() {
        let g = GroupContext::new(vec![FactorGroup::klein4(), FactorGroup::cyclic(2).unwrap()])
            .unwrap();
        let w = |s: &str| g.parse_word(s).unwrap();
        let v = w("0.x 1.1 0.y 1.1 0.xy 1.1");
        let cases = classify_power_commutator(&g, &v, 4, &Default::default()).unwrap();
        assert!(cases.iter().any(|c| c.tag() == "Four"));
        let displayed = TheoremCase::Four {
            a: w("0.x 1.1 0.y 1.1 0.x"),
            b: w("0.y 1.1 0.x 1.1 0.y"),
            c: w("1.1 0.xy 1.1"),
        };
        assert_eq!(verify_case(&g, &v, 4, &displayed).unwrap(), g.power(&v, 4));
    }

    #[test]
    fn not_a_commutator_power() {
        let g = GroupContext::cyclic(&[3, 3]).unwrap();
        let v = g.parse_word("0.1 1.1").unwrap();
        assert_eq!(
            classify_power_commutator(&g, &v, 2, &Default::default()),
            Err(Error::NotACommutatorPower)
        );
    }

    #[test]
    fn pipeline_examples() {
        let g = GroupContext::cyclic(&[2, 2]).unwrap();
        let w = |s: &str| g.parse_word(s).unwrap();
        let res = full_pipeline(&g, &w("0.1 1.1 0.1 1.1"), &Default::default())
            .unwrap()
            .unwrap();
        assert_eq!((res.root.clone(), res.exponent), (w("0.1 1.1"), 2));
        assert_eq!(res.witness.commutator(&g), w("0.1 1.1 0.1 1.1"));
        assert!(res.cases.contains(&TheoremCase::EvenPair {
            a: w("0.1"),
            b: w("1.1")
        }));

        let h = GroupContext::cyclic(&[2, 3]).unwrap();
        let cfg = ClassifierConfig::default();
        assert_eq!(
            full_pipeline(&h, &h.parse_word("0.1 1.1").unwrap(), &cfg).unwrap(),
            None
        );
        assert_eq!(
            full_pipeline(&h, &h.parse_word("0.1 1.2 0.1 1.1").unwrap(), &cfg).unwrap(),
            None
        );

        // (ab)^4 is also read as ((ab)^2)^2
        let res = full_pipeline(&g, &g.power(&w("0.1 1.1"), 4), &cfg)
            .unwrap()
            .unwrap();
        assert_eq!(res.exponent, 4);
        assert_eq!(res.alternatives.len(), 1);
        assert_eq!(res.alternatives[0].exponent, 2);
        assert_eq!(res.alternatives[0].root, g.power(&w("0.1 1.1"), 2));
    }
}
