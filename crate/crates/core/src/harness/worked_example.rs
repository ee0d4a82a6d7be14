//! The worked example over `Klein4 ∗ C2` and the companion square identity.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::suites::random_torsion;
use super::sweep::worked_example_word;
use crate::classifier::torsion_elements;
use crate::error::{Error, Result};
use crate::word::{ElementOrder, GroupContext, Word};

/// Torsion elements up to this length are tried as the first factor in clause (iv).
pub const DECOMPOSITION_BOUND: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkedExampleReport {
    pub v: Word,
    pub v_squared: Word,
    pub factors: [Word; 3],
    pub torsion_candidates: usize,
    pub clauses: Vec<ClauseResult>,
}

impl WorkedExampleReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    /// The first failing clause as an error.
    pub fn into_result(self) -> Result<Self> {
        match self.clauses.iter().find(|c| !c.passed) {
            Some(c) => Err(Error::AssertionFailed {
                clause: c.clause.to_string(),
                detail: c.detail.clone(),
            }),
            None => Ok(self),
        }
    }

    pub fn to_json(&self, ctx: &GroupContext) -> Value {
        let w = |x: &Word| ctx.format_word(x);
        json!({
            "V": w(&self.v),
            "V^2": w(&self.v_squared),
            "factors": self.factors.iter().map(w).collect::<Vec<_>>(),
            "torsion_candidates": self.torsion_candidates,
            "clauses": self.clauses.iter().map(|c| json!({
                "clause": c.clause,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

/// Checks the five claims about `V = x c y c xy c` in `Klein4 ∗ C2` (factor 0 is
/// `Klein4` with `1, x, y, xy`; factor 1 is `C2` with `1, c`).
pub fn paper_example_check(ctx: &GroupContext) -> Result<WorkedExampleReport> {
    let names_ok = ctx.factors().len() == 2
        && ctx.factor(0).element_names() == ["1", "x", "y", "xy"]
        && ctx.factor(1).element_names() == ["1", "c"];
    if !names_ok {
        return Err(Error::PreconditionViolated(format!(
            "expected Klein4*C2 with elements (1 x y xy) and (1 c), got {}",
            ctx.name()
        )));
    }
    let p = |s: &str| ctx.parse_word(s);
    let v = worked_example_word(ctx);
    let a = p("0.x 1.c 0.y 1.c 0.x")?;
    let b = p("0.y 1.c 0.x 1.c 0.y")?;
    let c = p("1.c 0.xy 1.c")?;
    let mut clauses = Vec::new();

    // (i)
    let v2 = ctx.power(&v, 2);
    let triple = ctx.product([&a, &b, &c]);
    let expected = "0.x 1.c 0.y 1.c 0.xy 1.c 0.x 1.c 0.y 1.c 0.xy 1.c";
    let (f2, ft) = (ctx.format_word(&v2), ctx.format_word(&triple));
    clauses.push(ClauseResult {
        clause: "i",
        passed: f2 == expected && ft == expected && v2.len() == 12,
        detail: format!("V^2 = {f2}; ABC = {ft}"),
    });

    // (ii)
    let squares: Vec<bool> = [&a, &b, &c]
        .iter()
        .map(|w| ctx.power(w, 2).is_identity() && !w.is_identity())
        .collect();
    clauses.push(ClauseResult {
        clause: "ii",
        passed: squares.iter().all(|&s| s),
        detail: format!("A^2 = B^2 = C^2 = 1: {squares:?}"),
    });

    // (iii)
    let v4 = ctx.power(&v, 4);
    let comm = ctx.commutator(&ctx.mul(&b, &a), &ctx.mul(&b, &c));
    clauses.push(ClauseResult {
        clause: "iii",
        passed: v4 == comm,
        detail: format!(
            "V^4 = {}; [BA, BC] = {}",
            ctx.format_word(&v4),
            ctx.format_word(&comm)
        ),
    });

    // (iv)
    let candidates = torsion_elements(ctx, DECOMPOSITION_BOUND, |_| true);
    let hit = candidates.iter().find(|d| {
        let e = ctx.mul(&ctx.inverse(d), &v);
        matches!(ctx.order_of(&e), ElementOrder::Finite(_))
    });
    clauses.push(ClauseResult {
        clause: "iv",
        passed: hit.is_none(),
        detail: match hit {
            None => format!(
                "bounded verification: no torsion D with |D| <= {DECOMPOSITION_BOUND} \
                 ({} candidates) has D^-1 V of finite order",
                candidates.len()
            ),
            Some(d) => format!("D = {} gives a torsion decomposition", ctx.format_word(d)),
        },
    });

    // (v)
    let (ok, detail) = square_identity_check(0x5eed, 200)?;
    clauses.push(ClauseResult {
        clause: "v",
        passed: ok,
        detail,
    });

    Ok(WorkedExampleReport {
        v,
        v_squared: v2,
        factors: [a, b, c],
        torsion_candidates: candidates.len(),
        clauses,
    })
}

/// `D² = E⁴ = 1 ⇒ (DE)² = D·E²·(E⁻¹DE)` over `C2 ∗ C4`: at `D = a`, `E = b` and on
/// `count` random conjugates.
pub fn square_identity_check(seed: u64, count: usize) -> Result<(bool, String)> {
    let ctx = GroupContext::cyclic(&[2, 4])?;
    let holds = |d: &Word, e: &Word| {
        let lhs = ctx.power(&ctx.mul(d, e), 2);
        let conj = ctx.product([&ctx.inverse(e), d, e]);
        let rhs = ctx.product([d, &ctx.power(e, 2), &conj]);
        lhs == rhs
    };
    let a = ctx.parse_word("0.1")?;
    let b = ctx.parse_word("1.1")?;
    let base = holds(&a, &b);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_ok = 0;
    for _ in 0..count {
        let d = random_torsion(&ctx, &mut rng, 2, 3).expect("C2*C4 has involutions");
        let e = random_torsion(&ctx, &mut rng, 4, 3).expect("C2*C4 has order-4 elements");
        if holds(&d, &e) {
            random_ok += 1;
        }
    }
    Ok((
        base && random_ok == count,
        format!("C2*C4: D = a, E = b holds: {base}; random instances {random_ok}/{count}"),
    ))
}
