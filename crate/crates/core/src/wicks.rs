//! Commutators in a free product via Wicks forms.
//!
//! An element whose cyclic representative has length ≥ 2 is a commutator exactly when
//! some rotation of that representative reads, letter for letter, as one of
//!
//! ```text
//! one variable:    X⁻¹ a₁ X a₂                      a₁ ≠ 1, a₁ ~ a₂⁻¹ in Gᵢ
//! two variables:   X⁻¹ a₁ Y⁻¹ a₂ X a₃ Y a₄          a₄a₃a₂a₁ = 1 in Gᵢ
//! three variables: X⁻¹ a₁ Y⁻¹ b₁ Z⁻¹ a₂ X b₂ Y a₃ Z b₃
//!                                                   a₃a₂a₁ = 1 in Gᵢ, b₃b₂b₁ = 1 in Gⱼ
//! ```
//!
//! Constant slots may be empty (the identity). In the three-variable form either the
//! nontrivial constants do not all lie in one factor, or `X`, `Y`, `Z` are all
//! nonempty.
//!
//! Scan order: one-variable, then two-, then three-variable patterns; within a pattern,
//! rotations by increasing start index; within a rotation, cut positions in
//! lexicographic order.

use crate::error::{Error, Result};
use crate::factor::FactorElement;
use crate::word::{CyclicReduction, GroupContext, Word};

/// Default cap on the cyclic-representative length scanned by [`find_wicks_form`].
pub const DEFAULT_MAX_LEN: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WicksConfig {
    pub max_len: usize,
}

impl Default for WicksConfig {
    fn default() -> Self {
        Self {
            max_len: DEFAULT_MAX_LEN,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WicksPattern {
    /// `X⁻¹ a₁ X a₂` with `c⁻¹ a₁⁻¹ c = a₂`.
    OneVar {
        x: Word,
        a1: FactorElement,
        a2: FactorElement,
        c: FactorElement,
    },
    /// `X⁻¹ a₁ Y⁻¹ a₂ X a₃ Y a₄`. `i` is `None` when every constant is trivial.
    TwoVar {
        x: Word,
        y: Word,
        a: [Option<FactorElement>; 4],
        i: Option<usize>,
    },
    /// `X⁻¹ a₁ Y⁻¹ b₁ Z⁻¹ a₂ X b₂ Y a₃ Z b₃`.
    ThreeVar {
        x: Word,
        y: Word,
        z: Word,
        a: [Option<FactorElement>; 3],
        i: Option<usize>,
        b: [Option<FactorElement>; 3],
        j: Option<usize>,
    },
}

impl WicksPattern {
    pub fn tag(&self) -> &'static str {
        match self {
            WicksPattern::OneVar { .. } => "OneVar",
            WicksPattern::TwoVar { .. } => "TwoVar",
            WicksPattern::ThreeVar { .. } => "ThreeVar",
        }
    }

    /// The pattern's pieces, in order.
    pub fn pieces(&self, ctx: &GroupContext) -> Vec<Word> {
        let k = |c: &Option<FactorElement>| c.map(Word::from).unwrap_or_default();
        match self {
            WicksPattern::OneVar { x, a1, a2, .. } => {
                vec![ctx.inverse(x), Word::from(*a1), x.clone(), Word::from(*a2)]
            }
            WicksPattern::TwoVar { x, y, a, .. } => vec![
                ctx.inverse(x),
                k(&a[0]),
                ctx.inverse(y),
                k(&a[1]),
                x.clone(),
                k(&a[2]),
                y.clone(),
                k(&a[3]),
            ],
            WicksPattern::ThreeVar { x, y, z, a, b, .. } => vec![
                ctx.inverse(x),
                k(&a[0]),
                ctx.inverse(y),
                k(&b[0]),
                ctx.inverse(z),
                k(&a[1]),
                x.clone(),
                k(&b[1]),
                y.clone(),
                k(&a[2]),
                z.clone(),
                k(&b[2]),
            ],
        }
    }

    pub fn word(&self, ctx: &GroupContext) -> Word {
        ctx.product(self.pieces(ctx).iter())
    }
}

/// A Wicks pattern together with `locator`, where the input equals
/// `locator · pattern · locator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WicksForm {
    pub pattern: WicksPattern,
    pub locator: Word,
}

impl WicksForm {
    pub fn target(&self, ctx: &GroupContext) -> Word {
        ctx.conjugate_by(&self.pattern.word(ctx), &self.locator)
    }
}

/// `[x, y]` equals the word the witness was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub x: Word,
    pub y: Word,
}

impl CommutatorWitness {
    pub fn commutator(&self, ctx: &GroupContext) -> Word {
        ctx.commutator(&self.x, &self.y)
    }

    pub fn conjugated(&self, ctx: &GroupContext, by: &Word) -> Self {
        Self {
            x: ctx.conjugate_by(&self.x, by),
            y: ctx.conjugate_by(&self.y, by),
        }
    }
}

/// The pair `(x⁻¹p⁻¹x, x⁻¹c)`, whose commutator is `x⁻¹·p·x·c⁻¹·p⁻¹·c` for all inputs.
pub fn commutator_from_conjugation(
    ctx: &GroupContext,
    p: &Word,
    x: &Word,
    c: &Word,
) -> CommutatorWitness {
    let x_inv = ctx.inverse(x);
    CommutatorWitness {
        x: ctx.product([&x_inv, &ctx.inverse(p), x]),
        y: ctx.mul(&x_inv, c),
    }
}

/// Builds `[X, Y]` from a Wicks form and checks it reproduces the form's target.
pub fn witness_from_wicks(ctx: &GroupContext, form: &WicksForm) -> Result<CommutatorWitness> {
    let k = |c: &Option<FactorElement>| c.map(Word::from).unwrap_or_default();
    let ki =
        |c: &Option<FactorElement>| c.map(|l| Word::from(ctx.factor_inv(l))).unwrap_or_default();
    let (p, x, c) = match &form.pattern {
        WicksPattern::OneVar { x, a1, c, .. } => (Word::from(*a1), x, Word::from(*c)),
        WicksPattern::TwoVar { x, y, a, .. } => (
            ctx.product([&k(&a[0]), &ctx.inverse(y), &k(&a[1])]),
            x,
            ctx.mul(&ki(&a[1]), &ki(&a[2])),
        ),
        WicksPattern::ThreeVar { x, y, z, a, b, .. } => (
            ctx.product([
                &k(&a[0]),
                &ctx.inverse(y),
                &k(&b[0]),
                &ctx.inverse(z),
                &k(&a[1]),
            ]),
            x,
            ctx.product([&ki(&a[1]), z, &ki(&b[0]), &ki(&b[1])]),
        ),
    };
    let witness = commutator_from_conjugation(ctx, &p, x, &c).conjugated(ctx, &form.locator);
    let target = form.target(ctx);
    let got = witness.commutator(ctx);
    if got != target {
        return Err(Error::WitnessVerificationFailed(format!(
            "{} form: [X, Y] = {} but target is {}",
            form.pattern.tag(),
            ctx.format_word(&got),
            ctx.format_word(&target)
        )));
    }
    Ok(witness)
}

type Matcher = fn(&GroupContext, &[FactorElement]) -> Option<WicksPattern>;

/// Finds a Wicks form of `u`, or `None` when the cyclic representative has length ≤ 1
/// or no pattern matches.
pub fn find_wicks_form(
    ctx: &GroupContext,
    u: &Word,
    cfg: &WicksConfig,
) -> Result<Option<WicksForm>> {
    let CyclicReduction {
        representative: rep,
        conjugator,
    } = ctx.cyclic_reduce(u);
    let n = rep.len();
    if n <= 1 {
        return Ok(None);
    }
    if n > cfg.max_len {
        return Err(Error::TooLong {
            len: n,
            cap: cfg.max_len,
        });
    }
    let matchers: [Matcher; 3] = [match_one_var, match_two_var, match_three_var];
    for matcher in matchers {
        for start in 0..n {
            let rot = rep.rotation(start);
            if let Some(pattern) = matcher(ctx, rot.letters()) {
                debug_assert_eq!(pattern.word(ctx), rot);
                return Ok(Some(WicksForm {
                    pattern,
                    locator: ctx.mul(&conjugator, &rep.slice(0..start)),
                }));
            }
        }
    }
    Ok(None)
}

/// A verified `(X, Y)` with `[X, Y] = u`, or `None` when `u` is not a commutator.
pub fn is_commutator(
    ctx: &GroupContext,
    u: &Word,
    cfg: &WicksConfig,
) -> Result<Option<CommutatorWitness>> {
    let CyclicReduction {
        representative: rep,
        conjugator,
    } = ctx.cyclic_reduce(u);
    let witness = match rep.len() {
        0 => Some(CommutatorWitness {
            x: Word::identity(),
            y: Word::identity(),
        }),
        1 => ctx.factor_commutator_test(rep.letters()[0]).map(|(x, y)| {
            CommutatorWitness {
                x: Word::from(x),
                y: Word::from(y),
            }
            .conjugated(ctx, &conjugator)
        }),
        _ => match find_wicks_form(ctx, u, cfg)? {
            Some(form) => Some(witness_from_wicks(ctx, &form)?),
            None => None,
        },
    };
    if let Some(w) = &witness {
        let got = w.commutator(ctx);
        if &got != u {
            return Err(Error::WitnessVerificationFailed(format!(
                "[X, Y] = {} but u = {}",
                ctx.format_word(&got),
                ctx.format_word(u)
            )));
        }
    }
    Ok(witness)
}

// ---- pattern matching on a single rotation -------------------------------------------

/// `r[q..q+len]` is the inverse of `r[p..p+len]`.
fn inverse_segments(
    ctx: &GroupContext,
    r: &[FactorElement],
    p: usize,
    q: usize,
    len: usize,
) -> bool {
    (0..len).all(|k| r[q + k] == ctx.factor_inv(r[p + len - 1 - k]))
}

fn slot(r: &[FactorElement], pos: usize, present: usize) -> Option<FactorElement> {
    (present == 1).then(|| r[pos])
}

/// Common factor of the present constants; `Err(())` if they straddle factors.
fn common_factor(consts: &[Option<FactorElement>]) -> std::result::Result<Option<usize>, ()> {
    let mut factor = None;
    for c in consts.iter().flatten() {
        match factor {
            None => factor = Some(c.factor),
            Some(f) if f != c.factor => return Err(()),
            _ => {}
        }
    }
    Ok(factor)
}

/// Product `c₀·c₁⋯` in factor `i` (absent constants are the identity) is trivial.
fn product_trivial(ctx: &GroupContext, i: Option<usize>, consts: &[Option<FactorElement>]) -> bool {
    let Some(i) = i else { return true };
    let f = ctx.factor(i);
    consts
        .iter()
        .fold(0, |acc, c| f.mul(acc, c.map_or(0, |l| l.elem)))
        == 0
}

fn word_of(r: &[FactorElement], start: usize, len: usize) -> Word {
    Word::from_normal(r[start..start + len].to_vec())
}

fn match_one_var(ctx: &GroupContext, r: &[FactorElement]) -> Option<WicksPattern> {
    let n = r.len();
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let x = (n - 2) / 2;
    let (a1, a2) = (r[x], r[n - 1]);
    if a1.factor != a2.factor || !inverse_segments(ctx, r, 0, x + 1, x) {
        return None;
    }
    let c = ctx.factor_conjugate_test(ctx.factor_inv(a1), a2).ok()??;
    Some(WicksPattern::OneVar {
        x: word_of(r, x + 1, x),
        a1,
        a2,
        c,
    })
}

fn match_two_var(ctx: &GroupContext, r: &[FactorElement]) -> Option<WicksPattern> {
    let n = r.len();
    for x in 1..=n / 2 {
        for m1 in 0..2 {
            for y in 1..=(n - 2 * x) / 2 {
                for m2 in 0..2 {
                    // X⁻¹ a₁ Y⁻¹ a₂ | X a₃ Y a₄
                    let px = x + m1 + y + m2;
                    if px + x > n || !inverse_segments(ctx, r, 0, px, x) {
                        continue;
                    }
                    for m3 in 0..2 {
                        let base = 2 * x + 2 * y + m1 + m2 + m3;
                        if base > n || n - base > 1 {
                            continue;
                        }
                        let m4 = n - base;
                        let py = px + x + m3;
                        if !inverse_segments(ctx, r, x + m1, py, y) {
                            continue;
                        }
                        let a = [
                            slot(r, x, m1),
                            slot(r, x + m1 + y, m2),
                            slot(r, px + x, m3),
                            slot(r, n - 1, m4),
                        ];
                        let Ok(i) = common_factor(&a) else { continue };
                        // a₄a₃a₂a₁ = 1
                        if !product_trivial(ctx, i, &[a[3], a[2], a[1], a[0]]) {
                            continue;
                        }
                        return Some(WicksPattern::TwoVar {
                            x: word_of(r, px, x),
                            y: word_of(r, py, y),
                            a,
                            i,
                        });
                    }
                }
            }
        }
    }
    None
}

fn match_three_var(ctx: &GroupContext, r: &[FactorElement]) -> Option<WicksPattern> {
    let n = r.len();
    for x in 0..=n / 2 {
        for ma1 in 0..2 {
            for y in 0..=(n - 2 * x) / 2 {
                for mb1 in 0..2 {
                    for z in 0..=(n - 2 * x - 2 * y) / 2 {
                        for ma2 in 0..2 {
                            // X⁻¹ a₁ Y⁻¹ b₁ Z⁻¹ a₂ | X b₂ Y a₃ Z b₃
                            let py_inv = x + ma1;
                            let pz_inv = py_inv + y + mb1;
                            let px = pz_inv + z + ma2;
                            if px + x > n || !inverse_segments(ctx, r, 0, px, x) {
                                continue;
                            }
                            for mb2 in 0..2 {
                                let py = px + x + mb2;
                                if py + y > n || !inverse_segments(ctx, r, py_inv, py, y) {
                                    continue;
                                }
                                for ma3 in 0..2 {
                                    let pz = py + y + ma3;
                                    if pz + z > n {
                                        continue;
                                    }
                                    let mb3 = n - (pz + z);
                                    if mb3 > 1 || !inverse_segments(ctx, r, pz_inv, pz, z) {
                                        continue;
                                    }
                                    let a = [
                                        slot(r, x, ma1),
                                        slot(r, px.wrapping_sub(1), ma2),
                                        slot(r, py + y, ma3),
                                    ];
                                    let b = [
                                        slot(r, pz_inv.wrapping_sub(1), mb1),
                                        slot(r, px + x, mb2),
                                        slot(r, n - 1, mb3),
                                    ];
                                    let (Ok(i), Ok(j)) = (common_factor(&a), common_factor(&b))
                                    else {
                                        continue;
                                    };
                                    if !product_trivial(ctx, i, &[a[2], a[1], a[0]])
                                        || !product_trivial(ctx, j, &[b[2], b[1], b[0]])
                                    {
                                        continue;
                                    }
                                    let all: Vec<_> = a.iter().chain(&b).copied().collect();
                                    let one_factor = common_factor(&all).is_ok();
                                    if one_factor && (x == 0 || y == 0 || z == 0) {
                                        continue;
                                    }
                                    return Some(WicksPattern::ThreeVar {
                                        x: word_of(r, px, x),
                                        y: word_of(r, py, y),
                                        z: word_of(r, pz, z),
                                        a,
                                        i,
                                        b,
                                        j,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
