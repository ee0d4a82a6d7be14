//! How a word and its inverse can both sit inside a proper power.
//!
//! Given a fully cyclically reduced `V` with `|V| ≥ 2`, an exponent `m` and a word `X`
//! such that `X⁻¹` is a prefix of `V^m` and `X` occurs at letter offset `pos`
//! (`V^m = X⁻¹·R = S·X·T`), [`classify_overlap`] decides which of five shapes the
//! configuration takes and returns the factorization data.

use crate::error::{Error, Result};
use crate::word::{GroupContext, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverlapCase {
    /// `|X| ≥ |V|`: `V = A·B`, `X = X₁·B·A`, `SX = Vⁿ·A`, `A² = B² = 1`.
    VeryLong {
        x1: Word,
        a: Word,
        b: Word,
        n: usize,
    },
    /// `½|V| < |X| < |V|`: `X = X₁·X₂·X₃`, `V = X₃·X₂⁻¹·X₁·X₂`, `S = Vⁿ·X₃·X₂⁻¹`.
    Long {
        x1: Word,
        x2: Word,
        x3: Word,
        n: usize,
    },
    /// `X = X₁·X₂`, `V = X₂⁻¹·X₁·X₂·T₁`, `S = Vⁿ·X₂⁻¹`, `X₁² = 1`.
    Medium1 {
        x1: Word,
        x2: Word,
        t1: Word,
        n: usize,
    },
    /// `X = X₁·X₂`, `V = X₂·X₁⁻¹·S₂·X₁`, `S = Vⁿ·X₂·X₁⁻¹·S₃`, `X₂² = 1`.
    Medium2 {
        x1: Word,
        x2: Word,
        s2: Word,
        s3: Word,
        n: usize,
    },
    /// `|X| ≤ ½|V| − 1`: `V = X⁻¹·V₂·X·V₃`, `S = Vⁿ·X⁻¹·V₂`.
    Short { v2: Word, v3: Word, n: usize },
}

impl OverlapCase {
    pub fn tag(&self) -> &'static str {
        match self {
            OverlapCase::VeryLong { .. } => "VeryLong",
            OverlapCase::Long { .. } => "Long",
            OverlapCase::Medium1 { .. } => "Medium1",
            OverlapCase::Medium2 { .. } => "Medium2",
            OverlapCase::Short { .. } => "Short",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            OverlapCase::VeryLong { n, .. }
            | OverlapCase::Long { n, .. }
            | OverlapCase::Medium1 { n, .. }
            | OverlapCase::Medium2 { n, .. }
            | OverlapCase::Short { n, .. } => *n,
        }
    }

    /// Checks every equation of the case by multiplication, with fully reduced
    /// products checked by length.
    pub fn verify(
        &self,
        ctx: &GroupContext,
        v: &Word,
        m: usize,
        x: &Word,
        pos: usize,
    ) -> Result<()> {
        let s = ctx.power(v, m as i64).slice(0..pos);
        let vn = ctx.power(v, self.n() as i64);
        let inv = |w: &Word| ctx.inverse(w);
        let one = Word::identity();

        let mut eqs: Vec<(&str, Word, Word)> = Vec::new();
        let mut clean: Vec<(&str, Vec<Word>)> = Vec::new();
        let mut involutions: Vec<(&str, &Word)> = Vec::new();
        if self.n() >= m {
            return Err(Error::OverlapInvariantViolated(format!(
                "n = {} is not below m = {m}",
                self.n()
            )));
        }
        match self {
            OverlapCase::VeryLong { x1, a, b, .. } => {
                involutions.extend([("A² = 1", a), ("B² = 1", b)]);
                eqs.push(("V = A·B", ctx.mul(a, b), v.clone()));
                eqs.push(("X = X₁·B·A", ctx.product([x1, b, a]), x.clone()));
                eqs.push(("SX = Vⁿ·A", ctx.mul(&s, x), ctx.mul(&vn, a)));
                clean.push(("A·B", vec![a.clone(), b.clone()]));
                clean.push(("X₁·B·A", vec![x1.clone(), b.clone(), a.clone()]));
                clean.push(("Vⁿ·A", vec![vn.clone(), a.clone()]));
                if x.len() < v.len() {
                    return Err(Error::OverlapInvariantViolated(
                        "|X| < |V| in VeryLong".into(),
                    ));
                }
            }
            OverlapCase::Long { x1, x2, x3, .. } => {
                involutions.extend([("X₁² = 1", x1), ("X₃² = 1", x3)]);
                eqs.push(("X = X₁·X₂·X₃", ctx.product([x1, x2, x3]), x.clone()));
                eqs.push((
                    "V = X₃·X₂⁻¹·X₁·X₂",
                    ctx.product([x3, &inv(x2), x1, x2]),
                    v.clone(),
                ));
                eqs.push((
                    "S = Vⁿ·X₃·X₂⁻¹",
                    ctx.product([&vn, x3, &inv(x2)]),
                    s.clone(),
                ));
                clean.push(("X₁·X₂·X₃", vec![x1.clone(), x2.clone(), x3.clone()]));
                clean.push((
                    "X₃·X₂⁻¹·X₁·X₂",
                    vec![x3.clone(), inv(x2), x1.clone(), x2.clone()],
                ));
                clean.push(("Vⁿ·X₃·X₂⁻¹", vec![vn.clone(), x3.clone(), inv(x2)]));
                if !(v.len() < 2 * x.len() && x.len() < v.len()) {
                    return Err(Error::OverlapInvariantViolated(
                        "½|V| < |X| < |V| fails".into(),
                    ));
                }
            }
            OverlapCase::Medium1 { x1, x2, t1, .. } => {
                involutions.push(("X₁² = 1", x1));
                eqs.push(("X = X₁·X₂", ctx.mul(x1, x2), x.clone()));
                eqs.push((
                    "V = X₂⁻¹·X₁·X₂·T₁",
                    ctx.product([&inv(x2), x1, x2, t1]),
                    v.clone(),
                ));
                eqs.push(("S = Vⁿ·X₂⁻¹", ctx.mul(&vn, &inv(x2)), s.clone()));
                clean.push(("X₁·X₂", vec![x1.clone(), x2.clone()]));
                clean.push((
                    "X₂⁻¹·X₁·X₂·T₁",
                    vec![inv(x2), x1.clone(), x2.clone(), t1.clone()],
                ));
                clean.push(("Vⁿ·X₂⁻¹", vec![vn.clone(), inv(x2)]));
            }
            OverlapCase::Medium2 { x1, x2, s2, s3, .. } => {
                involutions.push(("X₂² = 1", x2));
                eqs.push(("X = X₁·X₂", ctx.mul(x1, x2), x.clone()));
                eqs.push((
                    "V = X₂·X₁⁻¹·S₂·X₁",
                    ctx.product([x2, &inv(x1), s2, x1]),
                    v.clone(),
                ));
                eqs.push((
                    "S = Vⁿ·X₂·X₁⁻¹·S₃",
                    ctx.product([&vn, x2, &inv(x1), s3]),
                    s.clone(),
                ));
                clean.push(("X₁·X₂", vec![x1.clone(), x2.clone()]));
                clean.push((
                    "X₂·X₁⁻¹·S₂·X₁",
                    vec![x2.clone(), inv(x1), s2.clone(), x1.clone()],
                ));
                clean.push((
                    "Vⁿ·X₂·X₁⁻¹·S₃",
                    vec![vn.clone(), x2.clone(), inv(x1), s3.clone()],
                ));
            }
            OverlapCase::Short { v2, v3, .. } => {
                eqs.push((
                    "V = X⁻¹·V₂·X·V₃",
                    ctx.product([&inv(x), v2, x, v3]),
                    v.clone(),
                ));
                eqs.push(("S = Vⁿ·X⁻¹·V₂", ctx.product([&vn, &inv(x), v2]), s.clone()));
                clean.push((
                    "X⁻¹·V₂·X·V₃",
                    vec![inv(x), v2.clone(), x.clone(), v3.clone()],
                ));
                clean.push(("Vⁿ·X⁻¹·V₂", vec![vn.clone(), inv(x), v2.clone()]));
                if !x.is_identity() {
                    if 2 * x.len() + 2 > v.len() {
                        return Err(Error::OverlapInvariantViolated(
                            "|X| ≤ ½|V| − 1 fails".into(),
                        ));
                    }
                    if v2.is_identity() || v3.is_identity() {
                        return Err(Error::OverlapInvariantViolated(
                            "V₂, V₃ must be nontrivial".into(),
                        ));
                    }
                }
            }
        }
        for (name, w) in involutions {
            let sq = ctx.mul(w, w);
            if sq != one {
                return Err(Error::OverlapInvariantViolated(format!(
                    "{name}: square is {}",
                    ctx.format_word(&sq)
                )));
            }
        }
        for (name, lhs, rhs) in eqs {
            if lhs != rhs {
                return Err(Error::OverlapInvariantViolated(format!(
                    "{name}: {} != {}",
                    ctx.format_word(&lhs),
                    ctx.format_word(&rhs)
                )));
            }
        }
        for (name, parts) in clean {
            let total: usize = parts.iter().map(Word::len).sum();
            if ctx.product(parts.iter()).len() != total {
                return Err(Error::OverlapInvariantViolated(format!(
                    "{name} is not fully reduced"
                )));
            }
        }
        Ok(())
    }
}

/// Checks that `(v, m, x, pos)` is a valid overlap configuration: `v` fully cyclically
/// reduced of length ≥ 2, `x⁻¹` a prefix of `v^m` and `x` the letters at `pos`.
pub fn check_overlap_configuration(
    ctx: &GroupContext,
    v: &Word,
    m: usize,
    x: &Word,
    pos: usize,
) -> Result<Word> {
    let bad = |msg: &str| Err(Error::PreconditionViolated(msg.to_string()));
    if v.len() < 2 || !v.is_fully_cyclically_reduced() {
        return bad("V must be fully cyclically reduced with |V| ≥ 2");
    }
    if m == 0 {
        return bad("m must be at least 1");
    }
    let vm = ctx.power(v, m as i64);
    let xl = x.len();
    if xl > vm.len() || pos + xl > vm.len() {
        return bad("X does not fit inside V^m");
    }
    if vm.slice(0..xl) != ctx.inverse(x) {
        return bad("X⁻¹ is not a prefix of V^m");
    }
    if vm.slice(pos..pos + xl) != *x {
        return bad("X does not occur at the given position");
    }
    Ok(vm)
}

/// Classifies an overlap configuration following the length comparisons of the
/// argument: `|X|` against `|V|`, then `|S₁|` against `|X|` and `|S₁| + |X|` against
/// `|V|`, where `S = Vⁿ·S₁` with `n` maximal.
pub fn classify_overlap(
    ctx: &GroupContext,
    v: &Word,
    m: usize,
    x: &Word,
    pos: usize,
) -> Result<OverlapCase> {
    let vm = check_overlap_configuration(ctx, v, m, x, pos)?;
    let (lv, lx) = (v.len(), x.len());
    let seg = |a: usize, b: usize| vm.slice(a..b);

    let case = if lx == 0 {
        // V = V₂·V₃ with S = Vⁿ·V₂; at the very end of V^m take n = m − 1, V₃ = 1.
        let n = (pos / lv).min(m - 1);
        let r = pos - n * lv;
        OverlapCase::Short {
            v2: v.slice(0..r),
            v3: v.slice(r..lv),
            n,
        }
    } else if lx >= lv {
        let end = pos + lx;
        let (n, r) = (end / lv, end % lv);
        if r == 0 || n >= m {
            return Err(Error::ImpossibleConfiguration(
                "X ends on a period boundary".into(),
            ));
        }
        OverlapCase::VeryLong {
            x1: x.slice(0..lx - lv),
            a: v.slice(0..r),
            b: v.slice(r..lv),
            n,
        }
    } else {
        let n = pos / lv;
        let s1 = pos % lv;
        if s1 == lx {
            return Err(Error::ImpossibleConfiguration("|S₁| = |X|".into()));
        }
        if s1 + lx == lv {
            return Err(Error::ImpossibleConfiguration("|S₁| + |X| = |V|".into()));
        }
        let start = n * lv;
        match (s1 < lx, s1 + lx > lv) {
            (true, true) => {
                let l1 = lx - s1;
                let l2 = lv - lx;
                OverlapCase::Long {
                    x1: x.slice(0..l1),
                    x2: x.slice(l1..l1 + l2),
                    x3: x.slice(l1 + l2..lx),
                    n,
                }
            }
            (true, false) => OverlapCase::Medium1 {
                x1: x.slice(0..lx - s1),
                x2: x.slice(lx - s1..lx),
                t1: seg(start + s1 + lx, start + lv),
                n,
            },
            (false, true) => {
                let l1 = lv - s1;
                let s3 = seg(start + lx, start + s1);
                OverlapCase::Medium2 {
                    x1: x.slice(0..l1),
                    x2: x.slice(l1..lx),
                    s2: s3.clone(),
                    s3,
                    n,
                }
            }
            (false, false) => OverlapCase::Short {
                v2: seg(start + lx, start + s1),
                v3: seg(start + s1 + lx, start + lv),
                n,
            },
        }
    };
    case.verify(ctx, v, m, x, pos)?;
    Ok(case)
}
