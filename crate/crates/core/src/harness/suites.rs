//! Randomized and exhaustive validation suites for the identities and splitting procedures.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{enumerate_words, fully_cyclically_reduced_words};
use super::oracle::commutator_oracle_batch;
use crate::classifier::classify_overlap;
use crate::conjugacy::{are_conjugate, classify_inverse_conjugate};
use crate::error::Error;
use crate::factor::FactorElement;
use crate::wicks::{is_commutator, WicksConfig};
use crate::word::{GroupContext, Word};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub total: usize,
    pub passed: usize,
    pub counts: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.total
    }

    fn record(&mut self, pass: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if pass {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn count(&mut self, tag: &str) {
        *self.counts.entry(tag.to_string()).or_insert(0) += 1;
    }
}

/// Uniformly random normal-form word of length exactly `len` (shorter if the context
/// has a single factor).
pub fn random_word(ctx: &GroupContext, rng: &mut impl Rng, len: usize) -> Word {
    random_word_avoiding(ctx, rng, len, None)
}

fn random_word_avoiding(
    ctx: &GroupContext,
    rng: &mut impl Rng,
    len: usize,
    first_not: Option<usize>,
) -> Word {
    let mut letters: Vec<FactorElement> = Vec::with_capacity(len);
    for _ in 0..len {
        let forbidden = letters.last().map(|l| l.factor).or(first_not);
        let choices: Vec<FactorElement> = ctx
            .factors()
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != forbidden)
            .flat_map(|(i, f)| (1..f.order()).map(move |e| FactorElement::new(i, e)))
            .collect();
        match choices.choose(rng) {
            Some(&l) => letters.push(l),
            None => break,
        }
    }
    ctx.normalize(&letters).expect("letters are valid")
}

/// A random conjugate `W⁻¹·t·W` of a factor letter of order exactly `order`, with
/// `|W| ≤ max_conj`. `None` when no factor has such elements.
pub fn random_torsion(
    ctx: &GroupContext,
    rng: &mut impl Rng,
    order: usize,
    max_conj: usize,
) -> Option<Word> {
    let cores: Vec<FactorElement> = ctx
        .factors()
        .iter()
        .enumerate()
        .flat_map(|(i, f)| (1..f.order()).map(move |e| FactorElement::new(i, e)))
        .filter(|&t| ctx.factor_order(t) == order)
        .collect();
    let t = *cores.choose(rng)?;
    let len = rng.gen_range(0..=max_conj);
    let w = random_word_avoiding(ctx, rng, len, Some(t.factor));
    Some(ctx.product([&ctx.inverse(&w), &Word::from(t), &w]))
}

/// Checks one displayed identity on `count` random witness tuples whose element orders
/// hold by construction. Clause letters `b`–`g`; `None` if the group lacks the
/// required torsion.
pub fn identity_suite(
    ctx: &GroupContext,
    clause: char,
    count: usize,
    seed: u64,
) -> Option<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (clause as u64) << 32);
    let mut res = SuiteResult::new(format!("identity ({clause}) over {}", ctx.name()));
    let inv = |w: &Word| ctx.inverse(w);
    let pw = |w: &Word, k: i64| ctx.power(w, k);
    let max_conj = 3;
    let inv_elem = |rng: &mut ChaCha8Rng| random_torsion(ctx, rng, 2, max_conj);
    let fmt = |w: &Word| ctx.format_word(w);

    for _ in 0..count {
        match clause {
            'b' => {
                let (a, b) = (inv_elem(&mut rng)?, inv_elem(&mut rng)?);
                let m = 2 * rng.gen_range(1..=4);
                let ab = ctx.mul(&a, &b);
                let lhs = pw(&ab, m);
                let rhs = ctx.commutator(&a, &ctx.mul(&b, &pw(&ab, (m - 2) / 2)));
                res.record(lhs == rhs, || format!("A={} B={} m={m}", fmt(&a), fmt(&b)));
            }
            'c' => {
                let a = inv_elem(&mut rng)?;
                let len = rng.gen_range(0..=4);
                let c = random_word(ctx, &mut rng, len);
                let m = 2 * rng.gen_range(0..=3) + 1;
                let v = ctx.product([&a, &inv(&c), &a, &c]);
                let lhs = pw(&v, m);
                let rhs = ctx.commutator(&a, &ctx.mul(&c, &pw(&v, (m - 1) / 2)));
                res.record(lhs == rhs, || format!("A={} C={} m={m}", fmt(&a), fmt(&c)));
            }
            'd' => {
                let a = inv_elem(&mut rng)?;
                let b = random_torsion(ctx, &mut rng, 3, max_conj)?;
                let ab = ctx.mul(&a, &b);
                let lhs = pw(&ab, 6);
                let rhs = ctx.commutator(
                    &ctx.product([&inv(&b), &a, &b, &a]),
                    &ctx.mul(&b, &pw(&ab, 2)),
                );
                res.record(lhs == rhs, || format!("A={} B={}", fmt(&a), fmt(&b)));
            }
            'e' => {
                let a = random_torsion(ctx, &mut rng, 3, max_conj)?;
                let b = random_torsion(ctx, &mut rng, 3, max_conj)?;
                let ab = ctx.mul(&a, &b);
                let bab = ctx.product([&b, &a, &b]);
                let lhs = pw(&ab, 3);
                let first = ctx.commutator(&ctx.mul(&b, &inv(&a)), &bab);
                let second = ctx.commutator(&ctx.mul(&b, &pw(&a, 2)), &bab);
                res.record(lhs == first && first == second, || {
                    format!("A={} B={}", fmt(&a), fmt(&b))
                });
            }
            'f' => {
                let a = inv_elem(&mut rng)?;
                // B = D·E with involutions D, E, so C = D inverts B by conjugation.
                let (d, e) = (inv_elem(&mut rng)?, inv_elem(&mut rng)?);
                let b = ctx.mul(&d, &e);
                let c = d;
                let inverts = ctx.product([&inv(&c), &b, &c]) == inv(&b);
                let lhs = pw(&ctx.mul(&a, &b), 2);
                let rhs = ctx.commutator(&ctx.mul(&inv(&c), &a), &b);
                res.record(inverts && lhs == rhs, || {
                    format!("A={} B={} C={}", fmt(&a), fmt(&b), fmt(&c))
                });
            }
            'g' => {
                let (a, b, c) = (
                    inv_elem(&mut rng)?,
                    inv_elem(&mut rng)?,
                    inv_elem(&mut rng)?,
                );
                let lhs = pw(&ctx.product([&a, &b, &c]), 2);
                let rhs = ctx.commutator(&ctx.mul(&b, &a), &ctx.mul(&b, &c));
                res.record(lhs == rhs, || {
                    format!("A={} B={} C={}", fmt(&a), fmt(&b), fmt(&c))
                });
            }
            other => panic!("no identity for clause ({other})"),
        }
    }
    Some(res)
}

/// Every valid overlap configuration with `2 ≤ |V| ≤ max_v_len` and `1 ≤ m ≤ max_m`:
/// each `X` with `X⁻¹` a prefix of `V^m`, at each position where `X` occurs.
pub fn overlap_suite(ctx: &GroupContext, max_v_len: usize, max_m: usize) -> SuiteResult {
    let mut res = SuiteResult::new(format!("overlap over {}", ctx.name()));
    for v in fully_cyclically_reduced_words(ctx, max_v_len).filter(|v| v.len() >= 2) {
        for m in 1..=max_m {
            let vm = ctx.power(&v, m as i64);
            for xl in 0..=vm.len() {
                let x = ctx.inverse(&vm.slice(0..xl));
                for pos in 0..=vm.len() - xl {
                    if vm.slice(pos..pos + xl) != x {
                        continue;
                    }
                    match classify_overlap(ctx, &v, m, &x, pos) {
                        Ok(case) => {
                            res.count(case.tag());
                            res.record(true, String::new);
                        }
                        Err(e) => {
                            if matches!(e, Error::ImpossibleConfiguration(_)) {
                                res.count("ImpossibleConfiguration");
                            }
                            res.record(false, || {
                                format!(
                                    "V={} m={m} X={} pos={pos}: {e}",
                                    ctx.format_word(&v),
                                    ctx.format_word(&x)
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    res
}

/// Every `b` with `|b| ≤ max_len` that is conjugate to its inverse is split into a
/// factor case or a product of two involutions, and the split is re-verified.
pub fn inverse_conjugacy_suite(ctx: &GroupContext, max_len: usize) -> SuiteResult {
    let mut res = SuiteResult::new(format!("inverse conjugacy over {}", ctx.name()));
    for b in enumerate_words(ctx, max_len) {
        if are_conjugate(ctx, &b, &ctx.inverse(&b)).is_none() {
            continue;
        }
        match classify_inverse_conjugate(ctx, &b).and_then(|c| c.verify(ctx, &b).map(|_| c)) {
            Ok(case) => {
                res.count(match case {
                    crate::conjugacy::InverseConjugacyCase::FactorCase { .. } => "FactorCase",
                    crate::conjugacy::InverseConjugacyCase::InvolutionPair { .. } => {
                        "InvolutionPair"
                    }
                });
                res.record(true, String::new);
            }
            Err(e) => res.record(false, || format!("b={}: {e}", ctx.format_word(&b))),
        }
    }
    res
}

/// Compares [`is_commutator`] with the exhaustive oracle on every fully cyclically
/// reduced word of length ≤ `max_len` (and the identity).
pub fn wicks_exactness_suite(
    ctx: &GroupContext,
    max_len: usize,
    witness_len: usize,
) -> SuiteResult {
    let mut res = SuiteResult::new(format!("wicks exactness over {}", ctx.name()));
    let targets: Vec<Word> = std::iter::once(Word::identity())
        .chain(fully_cyclically_reduced_words(ctx, max_len))
        .collect();
    let set: HashSet<Word> = targets.iter().cloned().collect();
    let oracle = commutator_oracle_batch(ctx, &set, witness_len);
    let cfg = WicksConfig::default();
    for u in &targets {
        let fmt = || ctx.format_word(u);
        match is_commutator(ctx, u, &cfg) {
            Ok(found) => {
                let agree = found.is_some() == oracle.contains_key(u);
                let sound = found.as_ref().is_none_or(|w| &w.commutator(ctx) == u);
                res.count(if found.is_some() {
                    "commutator"
                } else {
                    "not_commutator"
                });
                res.record(agree && sound, || {
                    format!(
                        "u={}: wicks={} oracle={}",
                        fmt(),
                        found.is_some(),
                        oracle.contains_key(u)
                    )
                });
            }
            Err(e) => res.record(false, || format!("u={}: {e}", fmt())),
        }
    }
    res
}
