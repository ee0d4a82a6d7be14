use crate::factor::FactorElement;
use crate::word::{GroupContext, Word};

/// Streams every normal-form word of length ≤ `max_len` exactly once, shortest first,
/// lexicographic by `(factor, element)` within a length.
pub fn enumerate_words(ctx: &GroupContext, max_len: usize) -> WordEnumerator<'_> {
    WordEnumerator {
        ctx,
        max_len,
        current: None,
    }
}

pub struct WordEnumerator<'a> {
    ctx: &'a GroupContext,
    max_len: usize,
    current: Option<Vec<FactorElement>>,
}

impl WordEnumerator<'_> {
    /// Smallest letter strictly after `after` (or the smallest overall) avoiding factor
    /// `forbidden`.
    fn next_letter(
        &self,
        after: Option<FactorElement>,
        forbidden: Option<usize>,
    ) -> Option<FactorElement> {
        let factors = self.ctx.factors();
        let (mut f, mut e) = match after {
            Some(l) => (l.factor, l.elem + 1),
            None => (0, 1),
        };
        while f < factors.len() {
            if Some(f) != forbidden && e < factors[f].order() {
                return Some(FactorElement::new(f, e));
            }
            f += 1;
            e = 1;
        }
        None
    }

    /// Fills `letters[from..len]` with the smallest valid continuation.
    fn fill_min(&self, letters: &mut Vec<FactorElement>, len: usize) -> bool {
        while letters.len() < len {
            let prev = letters.last().map(|l| l.factor);
            match self.next_letter(None, prev) {
                Some(l) => letters.push(l),
                None => return false,
            }
        }
        true
    }

    fn advance(&self, mut letters: Vec<FactorElement>) -> Option<Vec<FactorElement>> {
        let len = letters.len();
        while let Some(last) = letters.pop() {
            let prev = letters.last().map(|l| l.factor);
            if let Some(next) = self.next_letter(Some(last), prev) {
                letters.push(next);
                if self.fill_min(&mut letters, len) {
                    return Some(letters);
                }
                // cannot happen with ≥ 2 factors; with one factor only length ≤ 1 exists
                return None;
            }
        }
        // all words of this length are done
        let mut first = Vec::new();
        if len < self.max_len && self.fill_min(&mut first, len + 1) {
            Some(first)
        } else {
            None
        }
    }
}

impl Iterator for WordEnumerator<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let next = match self.current.take() {
            None => Some(Vec::new()),
            Some(cur) => self.advance(cur),
        }?;
        self.current = Some(next.clone());
        Some(Word::from_normal(next))
    }
}

/// Fully cyclically reduced words of length `1..=max_len`, in enumeration order.
pub fn fully_cyclically_reduced_words(
    ctx: &GroupContext,
    max_len: usize,
) -> impl Iterator<Item = Word> + '_ {
    enumerate_words(ctx, max_len).filter(|w| !w.is_identity() && w.is_fully_cyclically_reduced())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let g = GroupContext::cyclic(&[2, 2]).unwrap();
        let words: Vec<_> = enumerate_words(&g, 1).map(|w| g.format_word(&w)).collect();
        assert_eq!(words, ["-", "0.1", "1.1"]);

        let g = GroupContext::cyclic(&[2, 3]).unwrap();
        let words: Vec<_> = enumerate_words(&g, 2).map(|w| g.format_word(&w)).collect();
        assert_eq!(
            words,
            ["-", "0.1", "1.1", "1.2", "0.1 1.1", "0.1 1.2", "1.1 0.1", "1.2 0.1"]
        );
        assert_eq!(enumerate_words(&g, 0).count(), 1);
    }

    #[test]
    fn single_factor_stops() {
        let g = GroupContext::cyclic(&[3]).unwrap();
        assert_eq!(enumerate_words(&g, 5).count(), 3);
    }

    #[test]
    fn counts_match_formula() {
        // C2*C2*C2: length n ≥ 1 has 3·2^(n-1) words
        let g = GroupContext::cyclic(&[2, 2, 2]).unwrap();
        let mut counts = [0usize; 6];
        for w in enumerate_words(&g, 5) {
            counts[w.len()] += 1;
        }
        assert_eq!(counts, [1, 3, 6, 12, 24, 48]);
    }
}
