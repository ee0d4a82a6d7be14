//! Conjugacy in the free product, and elements conjugate to their own inverse.
//!
//! Two fully cyclically reduced words of length ≥ 2 are conjugate exactly when one
//! is a cyclic rotation of the other; shorter representatives reduce to conjugacy
//! inside a factor.

use crate::error::{Error, Result};
use crate::factor::FactorElement;
use crate::word::{CyclicReduction, GroupContext, Word};

/// `witness⁻¹ · u · witness = v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub witness: Word,
}

/// The two outcomes for an element `b` conjugate to `b⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseConjugacyCase {
    /// `b = w⁻¹ · letter · w` and `c⁻¹ · letter · c = letter⁻¹` inside the factor.
    FactorCase {
        w: Word,
        letter: FactorElement,
        c: FactorElement,
    },
    /// `b = d · e` with `d² = e² = 1`.
    InvolutionPair { d: Word, e: Word },
}

impl InverseConjugacyCase {
    /// Re-derives every defining equation by multiplication.
    pub fn verify(&self, ctx: &GroupContext, b: &Word) -> Result<()> {
        let check = |name: &str, lhs: Word, rhs: &Word| -> Result<()> {
            if &lhs == rhs {
                Ok(())
            } else {
                Err(Error::CaseInvariantViolated {
                    invariant: name.to_string(),
                    lhs: ctx.format_word(&lhs),
                    rhs: ctx.format_word(rhs),
                })
            }
        };
        match self {
            InverseConjugacyCase::FactorCase { w, letter, c } => {
                let core = Word::from(*letter);
                check("b = W⁻¹·g·W", ctx.product([&ctx.inverse(w), &core, w]), b)?;
                let conj = ctx.factor_mul(ctx.factor_mul(ctx.factor_inv(*c), *letter)?, *c)?;
                check(
                    "c⁻¹·g·c = g⁻¹",
                    Word::from(conj),
                    &Word::from(ctx.factor_inv(*letter)),
                )
            }
            InverseConjugacyCase::InvolutionPair { d, e } => {
                check("D² = 1", ctx.mul(d, d), &Word::identity())?;
                check("E² = 1", ctx.mul(e, e), &Word::identity())?;
                check("D·E = b", ctx.mul(d, e), b)
            }
        }
    }
}

/// Some `C` with `C⁻¹·u·C = v`, or `None` when `u` and `v` are not conjugate.
pub fn are_conjugate(ctx: &GroupContext, u: &Word, v: &Word) -> Option<ConjugacyWitness> {
    let CyclicReduction {
        representative: r,
        conjugator: uc,
    } = ctx.cyclic_reduce(u);
    let CyclicReduction {
        representative: s,
        conjugator: vc,
    } = ctx.cyclic_reduce(v);
    if r.len() != s.len() {
        return None;
    }
    // u = U·R·U⁻¹, v = V·S·V⁻¹, and α⁻¹·R·α = S gives C = U·α·V⁻¹.
    let inner = match r.len() {
        0 => Word::identity(),
        1 => {
            let (g, h) = (r.letters()[0], s.letters()[0]);
            if g.factor != h.factor {
                return None;
            }
            Word::from(ctx.factor_conjugate_test(g, h).ok()??)
        }
        n => {
            let start = (0..n).find(|&j| r.rotation(j) == s)?;
            r.slice(0..start)
        }
    };
    Some(ConjugacyWitness {
        witness: ctx.product([&uc, &inner, &ctx.inverse(&vc)]),
    })
}

/// Splits an element conjugate to its inverse into a factor-conjugate or a product of
/// two involutions.
pub fn classify_inverse_conjugate(ctx: &GroupContext, b: &Word) -> Result<InverseConjugacyCase> {
    if are_conjugate(ctx, b, &ctx.inverse(b)).is_none() {
        return Err(Error::NotInverseConjugate);
    }
    let CyclicReduction {
        representative: r,
        conjugator: u,
    } = ctx.cyclic_reduce(b);

    let case = match r.len() {
        0 => InverseConjugacyCase::FactorCase {
            w: Word::identity(),
            letter: FactorElement::identity(0),
            c: FactorElement::identity(0),
        },
        1 => {
            let g = r.letters()[0];
            let c = ctx
                .factor_conjugate_test(g, ctx.factor_inv(g))?
                .ok_or(Error::NotInverseConjugate)?;
            InverseConjugacyCase::FactorCase {
                w: ctx.inverse(&u),
                letter: g,
                c,
            }
        }
        n => {
            let (d, e) = (0..n)
                .flat_map(|j| (1..n).map(move |s| (j, s)))
                .find_map(|(j, s)| {
                    let rot = r.rotation(j);
                    let (d0, e0) = (rot.slice(0..s), rot.slice(s..n));
                    if ctx.is_involution_or_trivial(&d0) && ctx.is_involution_or_trivial(&e0) {
                        // R = α·rot·α⁻¹ with α the first j letters of R
                        let t = ctx.mul(&u, &r.slice(0..j));
                        Some((ctx.conjugate_by(&d0, &t), ctx.conjugate_by(&e0, &t)))
                    } else {
                        None
                    }
                })
                .ok_or_else(|| {
                    Error::SearchBoundExceeded(format!(
                        "no involution split of {}",
                        ctx.format_word(&r)
                    ))
                })?;
            InverseConjugacyCase::InvolutionPair { d, e }
        }
    };
    case.verify(ctx, b)?;
    Ok(case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::FactorGroup;

    #[test]
    fn conjugacy_examples() {
        let g = GroupContext::cyclic(&[2, 3]).unwrap();
        let w = |s: &str| g.parse_word(s).unwrap();
        let ab = w("0.1 1.1");
        assert_eq!(
            are_conjugate(&g, &ab, &ab).unwrap().witness,
            Word::identity()
        );
        let c = are_conjugate(&g, &ab, &w("1.1 0.1")).unwrap().witness;
        assert_eq!(c, w("0.1"));
        assert!(are_conjugate(&g, &ab, &w("0.1 1.2")).is_none());
        assert!(are_conjugate(&g, &w("1.1"), &w("1.2")).is_none());
        assert!(are_conjugate(&g, &w("0.1"), &w("1.1")).is_none());
    }

    #[test]
    fn nonabelian_factor_conjugacy() {
        let g = GroupContext::new(vec![
            FactorGroup::symmetric3(),
            FactorGroup::cyclic(2).unwrap(),
        ])
        .unwrap();
        let u = g.parse_word("1.1 0.(12) 1.1").unwrap();
        let v = g.parse_word("0.(13)").unwrap();
        let c = are_conjugate(&g, &u, &v).unwrap().witness;
        assert_eq!(g.product([&g.inverse(&c), &u, &c]), v);
    }

    #[test]
    fn inverse_conjugate_examples() {
        let c2c2 = GroupContext::cyclic(&[2, 2]).unwrap();
        let b = c2c2.parse_word("0.1 1.1").unwrap();
        match classify_inverse_conjugate(&c2c2, &b).unwrap() {
            InverseConjugacyCase::InvolutionPair { d, e } => {
                assert_eq!(c2c2.format_word(&d), "0.1");
                assert_eq!(c2c2.format_word(&e), "1.1");
            }
            other => panic!("unexpected {other:?}"),
        }

        let k = GroupContext::new(vec![FactorGroup::klein4(), FactorGroup::cyclic(2).unwrap()])
            .unwrap();
        let x = k.parse_word("0.x").unwrap();
        assert_eq!(
            classify_inverse_conjugate(&k, &x).unwrap(),
            InverseConjugacyCase::FactorCase {
                w: Word::identity(),
                letter: k.letter(0, "x").unwrap(),
                c: FactorElement::identity(0),
            }
        );
        let cxc = k.parse_word("1.1 0.x 1.1").unwrap();
        match classify_inverse_conjugate(&k, &cxc).unwrap() {
            InverseConjugacyCase::FactorCase { w, letter, c } => {
                assert_eq!(k.format_word(&w), "1.1");
                assert_eq!(letter, k.letter(0, "x").unwrap());
                assert!(c.is_identity());
            }
            other => panic!("unexpected {other:?}"),
        }

        let c2c3 = GroupContext::cyclic(&[2, 3]).unwrap();
        assert_eq!(
            classify_inverse_conjugate(&c2c3, &c2c3.parse_word("0.1 1.1").unwrap()),
            Err(Error::NotInverseConjugate)
        );
    }
}
