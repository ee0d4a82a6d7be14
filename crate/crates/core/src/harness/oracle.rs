//! Exhaustive ground truth for "is this a commutator?".

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::enumerate::enumerate_words;
use crate::wicks::CommutatorWitness;
use crate::word::{GroupContext, Word};

/// Tries every `(X, Y)` with `|X|, |Y| ≤ witness_len` in enumeration order and returns
/// the first with `[X, Y] = target`.
pub fn commutator_oracle(
    ctx: &GroupContext,
    target: &Word,
    witness_len: usize,
) -> Option<CommutatorWitness> {
    let targets = HashSet::from([target.clone()]);
    commutator_oracle_batch(ctx, &targets, witness_len).remove(target)
}

/// [`commutator_oracle`] for many targets in one pass over the pairs. The witness
/// reported for each target is the first in `(X, Y)` enumeration order.
pub fn commutator_oracle_batch(
    ctx: &GroupContext,
    targets: &HashSet<Word>,
    witness_len: usize,
) -> HashMap<Word, CommutatorWitness> {
    if targets.is_empty() {
        return HashMap::new();
    }
    let max_target = targets.iter().map(Word::len).max().unwrap_or(0);
    let words: Vec<Word> = enumerate_words(ctx, witness_len).collect();
    let inverses: Vec<Word> = words.iter().map(|w| ctx.inverse(w)).collect();

    let found: HashMap<Word, (usize, usize)> = (0..words.len())
        .into_par_iter()
        .fold(
            HashMap::new,
            |mut acc: HashMap<Word, (usize, usize)>, ix| {
                let (x, x_inv) = (&words[ix], &inverses[ix]);
                for iy in 0..words.len() {
                    let c = ctx.product([x_inv, &inverses[iy], x, &words[iy]]);
                    if c.len() > max_target || !targets.contains(&c) {
                        continue;
                    }
                    acc.entry(c).or_insert((ix, iy));
                }
                acc
            },
        )
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k)
                    .and_modify(|cur| *cur = (*cur).min(v))
                    .or_insert(v);
            }
            a
        });

    found
        .into_iter()
        .map(|(t, (ix, iy))| {
            (
                t,
                CommutatorWitness {
                    x: words[ix].clone(),
                    y: words[iy].clone(),
                },
            )
        })
        .collect()
}
