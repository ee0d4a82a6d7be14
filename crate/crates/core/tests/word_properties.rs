use std::sync::OnceLock;

use freeprod::harness::enumerate_words;
use freeprod::harness::sweep::shipped_configs;
use freeprod::{ElementOrder, FactorElement, GroupContext, Word};
use proptest::prelude::*;

const CASES: u32 = 10_000;

fn groups() -> &'static [GroupContext] {
    static GROUPS: OnceLock<Vec<GroupContext>> = OnceLock::new();
    GROUPS.get_or_init(|| shipped_configs().into_iter().map(|c| c.group).collect())
}

fn raw_letters(ctx: &GroupContext, picks: &[(usize, usize)]) -> Vec<FactorElement> {
    picks
        .iter()
        .map(|&(f, e)| {
            let f = f % ctx.factors().len();
            FactorElement::new(f, e % ctx.factor(f).order())
        })
        .collect()
}

/// A group index and raw (unreduced, possibly trivial) letters.
fn raw_input(max_len: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (
        0..groups().len(),
        prop::collection::vec((0usize..8, 0usize..8), 0..=max_len),
    )
}

fn word(gi: usize, picks: &[(usize, usize)]) -> Word {
    let ctx = &groups()[gi];
    ctx.normalize(&raw_letters(ctx, picks)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn normalization_is_confluent(
        (gi, picks) in raw_input(16),
        cuts in prop::collection::vec(any::<prop::sample::Index>(), 0..6),
        order in prop::collection::vec(any::<prop::sample::Index>(), 0..6),
    ) {
        let ctx = &groups()[gi];
        let raw = raw_letters(ctx, &picks);
        let whole = ctx.normalize(&raw).unwrap();
        let mut bounds: Vec<usize> = cuts.iter().map(|c| c.index(raw.len() + 1)).collect();
        bounds.extend([0, raw.len()]);
        bounds.sort_unstable();
        bounds.dedup();
        let mut chunks: Vec<Word> = bounds
            .windows(2)
            .map(|w| ctx.normalize(&raw[w[0]..w[1]]).unwrap())
            .collect();
        let mut picks = order.iter().cycle();
        while chunks.len() > 1 {
            let k = picks.next().map_or(0, |i| i.index(chunks.len() - 1));
            let right = chunks.remove(k + 1);
            chunks[k] = ctx.mul(&chunks[k], &right);
        }
        prop_assert_eq!(chunks.pop().unwrap_or_default(), whole.clone());
        prop_assert!(whole.letters().windows(2).all(|w| w[0].factor != w[1].factor));
        prop_assert!(whole.letters().iter().all(|l| !l.is_identity()));
    }

    #[test]
    fn inverse_is_an_involution((gi, p) in raw_input(12), (_, q) in raw_input(12)) {
        let ctx = &groups()[gi];
        let (u, v) = (word(gi, &p), word(gi, &q));
        prop_assert_eq!(ctx.inverse(&ctx.inverse(&u)), u.clone());
        prop_assert!(ctx.mul(&u, &ctx.inverse(&u)).is_identity());
        prop_assert!(ctx.mul(&ctx.inverse(&u), &u).is_identity());
        prop_assert_eq!(ctx.inverse(&ctx.mul(&u, &v)), ctx.mul(&ctx.inverse(&v), &ctx.inverse(&u)));
        prop_assert_eq!(ctx.inverse(&u).len(), u.len());
    }

    #[test]
    fn power_is_a_homomorphism((gi, p) in raw_input(10), a in -7i64..=7, b in -7i64..=7) {
        let ctx = &groups()[gi];
        let u = word(gi, &p);
        prop_assert_eq!(ctx.power(&u, a + b), ctx.mul(&ctx.power(&u, a), &ctx.power(&u, b)));
        prop_assert_eq!(ctx.power(&u, a * b), ctx.power(&ctx.power(&u, a), b));
        prop_assert_eq!(ctx.power(&u, -a), ctx.inverse(&ctx.power(&u, a)));
        let naive = (0..a.unsigned_abs()).fold(Word::identity(), |acc, _| ctx.mul(&acc, &u));
        prop_assert_eq!(ctx.power(&u, a.abs()), naive);
    }

    #[test]
    fn cyclic_reduction_roundtrips((gi, p) in raw_input(12), (_, q) in raw_input(6)) {
        let ctx = &groups()[gi];
        let (r, w) = (word(gi, &p), word(gi, &q));
        let u = ctx.product([&w, &r, &ctx.inverse(&w)]);
        let red = ctx.cyclic_reduce(&u);
        prop_assert_eq!(ctx.conjugate_by(&red.representative, &red.conjugator), u.clone());
        let rep = &red.representative;
        prop_assert!(rep.len() <= 1 || rep.is_fully_cyclically_reduced());
        // the last peel may merge into the first letter instead of cancelling
        let peeled = rep.len() + 2 * red.conjugator.len();
        prop_assert!(peeled == u.len() || peeled == u.len() + 1);
        // the representative is fixed by a second reduction
        prop_assert_eq!(&ctx.cyclic_reduce(rep).representative, rep);
    }

    #[test]
    fn fully_reduced_words_stack((gi, p) in raw_input(10), k in 1i64..=6) {
        let ctx = &groups()[gi];
        let r = ctx.cyclic_reduce(&word(gi, &p)).representative;
        if r.len() < 2 {
            return Ok(());
        }
        let rk = ctx.power(&r, k);
        prop_assert_eq!(rk.len(), k as usize * r.len());
        prop_assert_eq!(rk.slice(0..r.len()), r.clone());
        prop_assert!(rk.is_fully_cyclically_reduced());
    }

    #[test]
    fn torsion_is_conjugate_into_a_factor((gi, p) in raw_input(10)) {
        let ctx = &groups()[gi];
        let u = word(gi, &p);
        let rep = ctx.cyclic_reduce(&u).representative;
        match ctx.order_of(&u) {
            ElementOrder::Finite(n) => {
                prop_assert!(rep.len() <= 1);
                prop_assert!(ctx.power(&u, n as i64).is_identity());
                for j in 1..n {
                    prop_assert!(!ctx.power(&u, j as i64).is_identity());
                }
            }
            ElementOrder::Infinite => {
                prop_assert!(rep.len() >= 2);
                for j in 1..=12 {
                    prop_assert!(!ctx.power(&u, j).is_identity());
                }
            }
        }
    }

    #[test]
    fn commutator_expands_letterwise((gi, p) in raw_input(8), (_, q) in raw_input(8)) {
        let ctx = &groups()[gi];
        let (x, y) = (word(gi, &p), word(gi, &q));
        let raw: Vec<FactorElement> = [ctx.inverse(&x), ctx.inverse(&y), x.clone(), y.clone()]
            .iter()
            .flat_map(|w| w.letters().to_vec())
            .collect();
        prop_assert_eq!(ctx.commutator(&x, &y), ctx.normalize(&raw).unwrap());
        prop_assert_eq!(ctx.inverse(&ctx.commutator(&x, &y)), ctx.commutator(&y, &x));
    }
}

fn small() -> &'static (GroupContext, Vec<Word>) {
    static SMALL: OnceLock<(GroupContext, Vec<Word>)> = OnceLock::new();
    SMALL.get_or_init(|| {
        let ctx = GroupContext::cyclic(&[2, 3]).unwrap();
        let words = enumerate_words(&ctx, 8).collect();
        (ctx, words)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn primitive_root_matches_enumeration(
        picks in prop::collection::vec((0usize..2, 0usize..3), 1..=4),
        k in 1i64..=3,
    ) {
        let (ctx, candidates) = small();
        let s = ctx.normalize(&raw_letters(ctx, &picks)).unwrap();
        let u = ctx.power(&s, k);
        if u.is_identity() {
            prop_assert!(ctx.primitive_root(&u).is_err());
            return Ok(());
        }
        let (root, e) = ctx.primitive_root(&u).unwrap();
        prop_assert_eq!(ctx.power(&root, e as i64), u.clone());
        if ctx.order_of(&u) == ElementOrder::Infinite {
            prop_assert_eq!(e as i64 % k, 0);
            if u.len() <= 8 {
                let better = candidates
                    .iter()
                    .filter(|c| c.len() <= u.len())
                    .any(|c| (e + 1..=u.len()).any(|j| ctx.power(c, j as i64) == u));
                prop_assert!(!better);
            }
        }
    }
}
