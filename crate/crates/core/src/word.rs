//! Normal-form words in a free product of finite groups.

use std::fmt;

use crate::error::{Error, Result};
use crate::factor::{FactorElement, FactorGroup};

/// Normal form of an element of the free product: a sequence of nontrivial letters
/// with adjacent letters in distinct factors. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<FactorElement>);

impl Word {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    /// Wraps letters that are already in normal form. Callers outside the crate go
    /// through [`GroupContext::normalize`].
    pub(crate) fn from_normal(letters: Vec<FactorElement>) -> Self {
        debug_assert!(letters.iter().all(|l| !l.is_identity()));
        debug_assert!(letters.windows(2).all(|w| w[0].factor != w[1].factor));
        Self(letters)
    }

    pub fn letters(&self) -> &[FactorElement] {
        &self.0
    }

    /// Free product length.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<FactorElement> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<FactorElement> {
        self.0.last().copied()
    }

    /// First and last letters lie in different factors (or length ≤ 1).
    pub fn is_fully_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.len() == 1 || f.factor != l.factor,
            _ => true,
        }
    }

    /// Letters `range` as a word. Any contiguous piece of a normal form is normal.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Rotation starting at letter `start`. Only a normal form when `self` is fully
    /// cyclically reduced.
    pub fn rotation(&self, start: usize) -> Word {
        let mut letters = self.0[start..].to_vec();
        letters.extend_from_slice(&self.0[..start]);
        Word(letters)
    }

    /// `self · other` is fully reduced: no letter merging at the boundary.
    pub fn joins_cleanly(&self, other: &Word) -> bool {
        match (self.last(), other.first()) {
            (Some(l), Some(f)) => l.factor != f.factor,
            _ => true,
        }
    }
}

impl From<FactorElement> for Word {
    /// A single letter; the factor identity becomes the empty word.
    fn from(letter: FactorElement) -> Self {
        if letter.is_identity() {
            Word::identity()
        } else {
            Word(vec![letter])
        }
    }
}

/// `original = conjugator · representative · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReduction {
    pub representative: Word,
    pub conjugator: Word,
}

/// Order of an element of the free product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ElementOrder {
    Finite(usize),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(k) => write!(f, "{k}"),
            ElementOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// The free product `G₀ ∗ G₁ ∗ …` of nontrivial finite factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupContext {
    factors: Vec<FactorGroup>,
}

impl GroupContext {
    pub fn new(factors: Vec<FactorGroup>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::NoFactors);
        }
        if let Some(f) = factors.iter().find(|f| f.order() < 2) {
            return Err(Error::InvalidFactor {
                group: f.name().to_string(),
                reason: "free factors must be nontrivial".into(),
            });
        }
        Ok(Self { factors })
    }

    /// Free product of cyclic groups of the given orders.
    pub fn cyclic(orders: &[usize]) -> Result<Self> {
        Self::new(
            orders
                .iter()
                .map(|&n| FactorGroup::cyclic(n))
                .collect::<Result<_>>()?,
        )
    }

    pub fn factors(&self) -> &[FactorGroup] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &FactorGroup {
        &self.factors[i]
    }

    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(FactorGroup::name)
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Exponent-style name lookup: `letter(1, "2")` is element `"2"` of factor 1.
    pub fn letter(&self, factor: usize, name: &str) -> Result<FactorElement> {
        let f = self
            .factors
            .get(factor)
            .ok_or_else(|| Error::BadLetter(format!("no factor {factor}")))?;
        let elem = f
            .element_index(name)
            .ok_or_else(|| Error::BadLetter(format!("factor {factor} has no element `{name}`")))?;
        Ok(FactorElement::new(factor, elem))
    }

    fn check_letter(&self, l: FactorElement) -> Result<()> {
        match self.factors.get(l.factor) {
            None => Err(Error::BadLetter(format!("no factor {}", l.factor))),
            Some(f) if l.elem >= f.order() => Err(Error::BadLetter(format!(
                "factor {} has no element index {}",
                l.factor, l.elem
            ))),
            Some(_) => Ok(()),
        }
    }

    // ---- factor-level arithmetic -------------------------------------------------

    pub fn factor_mul(&self, g: FactorElement, h: FactorElement) -> Result<FactorElement> {
        if g.factor != h.factor {
            return Err(Error::MixedFactors(g.factor, h.factor));
        }
        Ok(FactorElement::new(
            g.factor,
            self.factors[g.factor].mul(g.elem, h.elem),
        ))
    }

    pub fn factor_inv(&self, g: FactorElement) -> FactorElement {
        FactorElement::new(g.factor, self.factors[g.factor].inv(g.elem))
    }

    pub fn factor_pow(&self, g: FactorElement, k: i64) -> FactorElement {
        FactorElement::new(g.factor, self.factors[g.factor].pow(g.elem, k))
    }

    pub fn factor_order(&self, g: FactorElement) -> usize {
        self.factors[g.factor].element_order(g.elem)
    }

    /// Some `c` in the factor with `c⁻¹·g·c = h`.
    pub fn factor_conjugate_test(
        &self,
        g: FactorElement,
        h: FactorElement,
    ) -> Result<Option<FactorElement>> {
        if g.factor != h.factor {
            return Err(Error::MixedFactors(g.factor, h.factor));
        }
        Ok(self.factors[g.factor]
            .conjugate_test(g.elem, h.elem)
            .map(|c| FactorElement::new(g.factor, c)))
    }

    /// Some `(x, y)` in the factor with `x⁻¹y⁻¹xy = g`.
    pub fn factor_commutator_test(
        &self,
        g: FactorElement,
    ) -> Option<(FactorElement, FactorElement)> {
        self.factors[g.factor]
            .commutator_test(g.elem)
            .map(|(x, y)| {
                (
                    FactorElement::new(g.factor, x),
                    FactorElement::new(g.factor, y),
                )
            })
    }

    /// Some `x` in the factor with `x^m = g`.
    pub fn factor_root(&self, g: FactorElement, m: usize) -> Option<FactorElement> {
        self.factors[g.factor]
            .root(g.elem, m)
            .map(|x| FactorElement::new(g.factor, x))
    }

    // ---- words --------------------------------------------------------------------

    /// Appends `l` to a normal-form stack, merging with (and possibly cancelling) the top.
    fn push_letter(&self, stack: &mut Vec<FactorElement>, l: FactorElement) {
        if l.is_identity() {
            return;
        }
        match stack.last_mut() {
            Some(top) if top.factor == l.factor => {
                let merged = self.factors[l.factor].mul(top.elem, l.elem);
                if merged == 0 {
                    stack.pop();
                } else {
                    top.elem = merged;
                }
            }
            _ => stack.push(l),
        }
    }

    /// Reduces an arbitrary letter sequence to normal form.
    pub fn normalize(&self, raw: &[FactorElement]) -> Result<Word> {
        let mut stack = Vec::with_capacity(raw.len());
        for &l in raw {
            self.check_letter(l)?;
            self.push_letter(&mut stack, l);
        }
        Ok(Word(stack))
    }

    pub fn mul(&self, u: &Word, v: &Word) -> Word {
        let mut stack = Vec::with_capacity(u.len() + v.len());
        stack.extend_from_slice(&u.0);
        for &l in &v.0 {
            self.push_letter(&mut stack, l);
        }
        Word(stack)
    }

    /// Product of several words, left to right.
    pub fn product<'a>(&self, words: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut stack = Vec::new();
        for w in words {
            for &l in &w.0 {
                self.push_letter(&mut stack, l);
            }
        }
        Word(stack)
    }

    pub fn inverse(&self, u: &Word) -> Word {
        Word(u.0.iter().rev().map(|&l| self.factor_inv(l)).collect())
    }

    /// `u^m`; negative exponents are powers of the inverse.
    pub fn power(&self, u: &Word, m: i64) -> Word {
        let mut base = if m < 0 { self.inverse(u) } else { u.clone() };
        let mut k = m.unsigned_abs();
        let mut acc = Word::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `[x, y] = x⁻¹y⁻¹xy`.
    pub fn commutator(&self, x: &Word, y: &Word) -> Word {
        self.product([&self.inverse(x), &self.inverse(y), x, y])
    }

    /// `g·u·g⁻¹`.
    pub fn conjugate_by(&self, u: &Word, g: &Word) -> Word {
        self.product([g, u, &self.inverse(g)])
    }

    pub fn is_involution_or_trivial(&self, u: &Word) -> bool {
        self.mul(u, u).is_identity()
    }

    /// Peels letters off the right end until the first and last letters lie in
    /// different factors.
    pub fn cyclic_reduce(&self, u: &Word) -> CyclicReduction {
        let mut rep = u.0.clone();
        let mut conjugator: Vec<FactorElement> = Vec::new();
        while rep.len() >= 2 && rep[0].factor == rep[rep.len() - 1].factor {
            // u = t⁻¹ · (t·l₁ ⋯ lₖ₋₁) · t  with t = lₖ
            let t = rep.pop().unwrap();
            let t_inv = self.factor_inv(t);
            self.push_letter(&mut conjugator, t_inv);
            let merged = self.factors[t.factor].mul(t.elem, rep[0].elem);
            if merged == 0 {
                rep.remove(0);
            } else {
                rep[0].elem = merged;
            }
        }
        CyclicReduction {
            representative: Word(rep),
            conjugator: Word(conjugator),
        }
    }

    /// `(root, k)` with `u = root^k` and `k` maximal.
    ///
    /// When the cyclic representative is a single letter, `k` ranges over
    /// `1..=|G_i|` (larger exponents only repeat).
    pub fn primitive_root(&self, u: &Word) -> Result<(Word, usize)> {
        if u.is_identity() {
            return Err(Error::IdentityHasNoPrimitiveRoot);
        }
        let CyclicReduction {
            representative: rep,
            conjugator,
        } = self.cyclic_reduce(u);
        let (core, k) = if rep.len() == 1 {
            let g = rep.0[0];
            let (k, x) = (1..=self.factors[g.factor].order())
                .rev()
                .find_map(|k| self.factor_root(g, k).map(|x| (k, x)))
                .expect("k = 1 always has a root");
            (Word::from(x), k)
        } else {
            let p = smallest_period(&rep.0);
            (rep.slice(0..p), rep.len() / p)
        };
        Ok((self.conjugate_by(&core, &conjugator), k))
    }

    pub fn order_of(&self, u: &Word) -> ElementOrder {
        let rep = self.cyclic_reduce(u).representative;
        match rep.len() {
            0 => ElementOrder::Finite(1),
            1 => ElementOrder::Finite(self.factor_order(rep.0[0])),
            _ => ElementOrder::Infinite,
        }
    }

    // ---- text syntax --------------------------------------------------------------

    /// Tokens `<factorIndex>.<elementName>` separated by whitespace; `-` is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "-" {
            return Ok(Word::identity());
        }
        let raw = text
            .split_whitespace()
            .map(|tok| {
                let (idx, name) = tok.split_once('.').ok_or_else(|| {
                    Error::BadLetter(format!("token `{tok}` is not <factor>.<name>"))
                })?;
                let factor = idx
                    .parse::<usize>()
                    .map_err(|_| Error::BadLetter(format!("bad factor index in `{tok}`")))?;
                self.letter(factor, name)
            })
            .collect::<Result<Vec<_>>>()?;
        self.normalize(&raw)
    }

    pub fn format_letter(&self, l: FactorElement) -> String {
        format!(
            "{}.{}",
            l.factor,
            self.factors[l.factor].element_name(l.elem)
        )
    }

    pub fn format_word(&self, u: &Word) -> String {
        if u.is_identity() {
            return "-".to_string();
        }
        u.0.iter()
            .map(|&l| self.format_letter(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Smallest `p` dividing `letters.len()` with `letters[i] = letters[i - p]`.
fn smallest_period<T: PartialEq>(letters: &[T]) -> usize {
    let n = letters.len();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (p..n).all(|i| letters[i] == letters[i - p]))
        .unwrap_or(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2c3() -> GroupContext {
        GroupContext::cyclic(&[2, 3]).unwrap()
    }

    fn k4c2() -> GroupContext {
        GroupContext::new(vec![FactorGroup::klein4(), FactorGroup::cyclic(2).unwrap()]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let g = c2c3();
        assert_eq!(g.normalize(&[]).unwrap(), Word::identity());
        let full = g.parse_word("0.1 1.1 1.1 1.1 0.1").unwrap();
        assert!(full.is_identity());

        let k = k4c2();
        let v = k.parse_word("0.x 1.1 0.y 1.1 0.x 0.y 1.1").unwrap();
        assert_eq!(k.format_word(&v), "0.x 1.1 0.y 1.1 0.xy 1.1");
    }

    #[test]
    fn bad_letters() {
        let g = c2c3();
        assert!(matches!(
            g.normalize(&[FactorElement::new(2, 1)]),
            Err(Error::BadLetter(_))
        ));
        assert!(matches!(
            g.normalize(&[FactorElement::new(0, 2)]),
            Err(Error::BadLetter(_))
        ));
        assert!(g.parse_word("0.7").is_err());
        assert!(g.parse_word("x").is_err());
    }

    #[test]
    fn mul_inverse_power() {
        let g = c2c3();
        let w = |s: &str| g.parse_word(s).unwrap();
        assert_eq!(g.mul(&w("0.1 1.1"), &Word::identity()), w("0.1 1.1"));
        assert!(g.mul(&w("0.1 1.1"), &w("1.2 0.1")).is_identity());
        assert_eq!(g.mul(&w("0.1 1.1"), &w("1.1 0.1")), w("0.1 1.2 0.1"));
        assert_eq!(g.inverse(&w("0.1 1.1")), w("1.2 0.1"));
        assert!(g.power(&w("1.1"), 3).is_identity());
        assert!(g.power(&w("0.1 1.1"), 0).is_identity());
        assert_eq!(g.power(&w("0.1 1.1"), -1), w("1.2 0.1"));
        assert_eq!(g.commutator(&w("0.1"), &w("1.1")), w("0.1 1.2 0.1 1.1"));

        let c2c2 = GroupContext::cyclic(&[2, 2]).unwrap();
        let ab = c2c2.parse_word("0.1 1.1").unwrap();
        assert_eq!(c2c2.format_word(&c2c2.power(&ab, 2)), "0.1 1.1 0.1 1.1");

        let k = k4c2();
        let u = k.parse_word("0.x 1.1 0.y").unwrap();
        assert_eq!(k.format_word(&k.inverse(&u)), "0.y 1.1 0.x");
    }

    #[test]
    fn cyclic_reduce_examples() {
        let g = c2c3();
        let w = |s: &str| g.parse_word(s).unwrap();
        let r = g.cyclic_reduce(&Word::identity());
        assert!(r.representative.is_identity() && r.conjugator.is_identity());

        let r = g.cyclic_reduce(&w("1.1 0.1 1.2"));
        assert_eq!(r.representative, w("0.1"));
        assert_eq!(r.conjugator, w("1.1"));

        let r = g.cyclic_reduce(&w("0.1 1.1 0.1"));
        assert_eq!(r.representative, w("1.1"));
        assert_eq!(r.conjugator, w("0.1"));

        // merge without cancellation: b·a·b → conjugator b², representative b²·a? check roundtrip
        let u = w("1.1 0.1 1.1");
        let r = g.cyclic_reduce(&u);
        assert!(r.representative.is_fully_cyclically_reduced());
        assert_eq!(g.conjugate_by(&r.representative, &r.conjugator), u);
    }

    #[test]
    fn primitive_roots() {
        let c2c2 = GroupContext::cyclic(&[2, 2]).unwrap();
        let u = c2c2.parse_word("0.1 1.1 0.1 1.1").unwrap();
        let (r, k) = c2c2.primitive_root(&u).unwrap();
        assert_eq!((c2c2.format_word(&r), k), ("0.1 1.1".to_string(), 2));

        let g = c2c3();
        let (r, k) = g.primitive_root(&g.parse_word("0.1 1.1").unwrap()).unwrap();
        assert_eq!((g.format_word(&r), k), ("0.1 1.1".to_string(), 1));
        let (r, k) = g.primitive_root(&g.parse_word("1.2").unwrap()).unwrap();
        assert_eq!((g.format_word(&r), k), ("1.1".to_string(), 2));

        assert_eq!(
            g.primitive_root(&Word::identity()),
            Err(Error::IdentityHasNoPrimitiveRoot)
        );

        // conjugated power: (a b a b²)-conjugate of (ab)^3
        let ab = g.parse_word("0.1 1.1").unwrap();
        let c = g.parse_word("1.2 0.1").unwrap();
        let u = g.conjugate_by(&g.power(&ab, 3), &c);
        let (r, k) = g.primitive_root(&u).unwrap();
        assert_eq!(k, 3);
        assert_eq!(g.power(&r, 3), u);
    }

    #[test]
    fn orders() {
        let c2c2 = GroupContext::cyclic(&[2, 2]).unwrap();
        assert_eq!(c2c2.order_of(&Word::identity()), ElementOrder::Finite(1));
        assert_eq!(
            c2c2.order_of(&c2c2.parse_word("0.1 1.1").unwrap()),
            ElementOrder::Infinite
        );
        let k = k4c2();
        assert_eq!(
            k.order_of(&k.parse_word("1.1 0.xy 1.1").unwrap()),
            ElementOrder::Finite(2)
        );
    }

    #[test]
    fn context_validation() {
        assert_eq!(GroupContext::new(vec![]), Err(Error::NoFactors));
        assert!(GroupContext::cyclic(&[1, 2]).is_err());
    }
}
