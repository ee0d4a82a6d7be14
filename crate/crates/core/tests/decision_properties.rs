use std::sync::OnceLock;

use freeprod::classifier::{classify_power_commutator, ClassifierConfig};
use freeprod::conjugacy::{are_conjugate, classify_inverse_conjugate};
use freeprod::harness::enumerate_words;
use freeprod::wicks::{is_commutator, WicksConfig};
use freeprod::{FactorElement, GroupContext, Word};
use proptest::prelude::*;

const CASES: u32 = 10_000;

struct Fixture {
    ctx: GroupContext,
    conjugators: Vec<Word>,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        [&[2, 3][..], &[2, 2, 2], &[3, 3]]
            .iter()
            .map(|o| {
                let ctx = GroupContext::cyclic(o).unwrap();
                let conjugators = enumerate_words(&ctx, 6).collect();
                Fixture { ctx, conjugators }
            })
            .collect()
    })
}

fn word(ctx: &GroupContext, picks: &[(usize, usize)]) -> Word {
    let raw: Vec<FactorElement> = picks
        .iter()
        .map(|&(f, e)| {
            let f = f % ctx.factors().len();
            FactorElement::new(f, e % ctx.factor(f).order())
        })
        .collect();
    ctx.normalize(&raw).unwrap()
}

fn picks(max: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..6, 0usize..6), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn conjugation_is_detected(fi in 0usize..3, u in picks(8), g in picks(6)) {
        let ctx = &fixtures()[fi].ctx;
        let (u, g) = (word(ctx, &u), word(ctx, &g));
        let v = ctx.product([&ctx.inverse(&g), &u, &g]);
        let w = are_conjugate(ctx, &u, &v).expect("conjugates are detected");
        prop_assert_eq!(ctx.product([&ctx.inverse(&w.witness), &u, &w.witness]), v.clone());
        prop_assert_eq!(ctx.order_of(&u), ctx.order_of(&v));
        // closure: conjugate of a conjugate
        let w2 = are_conjugate(ctx, &v, &u).expect("symmetric");
        prop_assert_eq!(ctx.product([&ctx.inverse(&w2.witness), &v, &w2.witness]), u);
    }

    #[test]
    fn conjugacy_matches_brute_force(fi in 0usize..3, u in picks(3), v in picks(3)) {
        let f = &fixtures()[fi];
        let ctx = &f.ctx;
        let (u, v) = (word(ctx, &u), word(ctx, &v));
        let brute = f
            .conjugators
            .iter()
            .any(|c| ctx.product([&ctx.inverse(c), &u, c]) == v);
        let found = are_conjugate(ctx, &u, &v);
        prop_assert_eq!(found.is_some(), brute);
        if let Some(w) = found {
            prop_assert_eq!(ctx.product([&ctx.inverse(&w.witness), &u, &w.witness]), v);
        }
    }

    #[test]
    fn inverse_conjugates_split(fi in 0usize..3, b in picks(10)) {
        let ctx = &fixtures()[fi].ctx;
        let b = word(ctx, &b);
        let inverse_conjugate = are_conjugate(ctx, &b, &ctx.inverse(&b)).is_some();
        match classify_inverse_conjugate(ctx, &b) {
            Ok(case) => {
                prop_assert!(inverse_conjugate);
                prop_assert!(case.verify(ctx, &b).is_ok());
            }
            Err(_) => prop_assert!(!inverse_conjugate),
        }
    }

    #[test]
    fn commutators_are_recognized(fi in 0usize..3, x in picks(5), y in picks(5)) {
        let ctx = &fixtures()[fi].ctx;
        let (x, y) = (word(ctx, &x), word(ctx, &y));
        let c = ctx.commutator(&x, &y);
        let w = is_commutator(ctx, &c, &WicksConfig::default()).unwrap();
        let w = w.expect("a commutator is recognized");
        prop_assert_eq!(w.commutator(ctx), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn commutator_powers_classify(fi in 0usize..3, v in picks(4), m in 2i64..=6) {
        let ctx = &fixtures()[fi].ctx;
        let v = ctx.cyclic_reduce(&word(ctx, &v)).representative;
        if v.is_identity() {
            return Ok(());
        }
        let vm = ctx.power(&v, m);
        let cfg = ClassifierConfig::default();
        match is_commutator(ctx, &vm, &cfg.wicks).unwrap() {
            Some(_) => {
                let cases = classify_power_commutator(ctx, &v, m, &cfg).unwrap();
                prop_assert!(!cases.is_empty());
            }
            None => prop_assert!(classify_power_commutator(ctx, &v, m, &cfg).is_err()),
        }
    }
}
