//! Exponent vectors and the three supported monomial orders.

use std::cmp::Ordering;
use std::sync::Arc;

use smallvec::SmallVec;

/// Exponent vector; its length is the variable count of the ambient ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono(pub SmallVec<[u16; 16]>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_slice(e: &[u16]) -> Self {
        Mono(SmallVec::from_slice(e))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        Mono(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Monomial order tag. `Elim` is a two-block order: the flagged block is
/// compared first (graded reverse lexicographic), the remaining variables break ties
/// (graded reverse lexicographic), so it eliminates the flagged block.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonoOrder {
    Lex,
    #[default]
    GrevLex,
    Elim(Arc<Vec<bool>>),
}

fn grevlex_masked(a: &Mono, b: &Mono, mask: Option<(&[bool], bool)>) -> Ordering {
    let take = |i: usize| match mask {
        None => true,
        Some((m, want)) => m[i] == want,
    };
    let (mut da, mut db) = (0u32, 0u32);
    for i in 0..a.0.len() {
        if take(i) {
            da += a.0[i] as u32;
            db += b.0[i] as u32;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.0.len()).rev() {
        if take(i) && a.0[i] != b.0[i] {
            // smaller exponent in the last variable wins
            return b.0[i].cmp(&a.0[i]);
        }
    }
    Ordering::Equal
}

impl MonoOrder {
    pub fn elim(mask: Vec<bool>) -> Self {
        MonoOrder::Elim(Arc::new(mask))
    }

    /// Elimination order for the variables `range` out of `nvars`.
    pub fn elim_range(nvars: usize, range: std::ops::Range<usize>) -> Self {
        MonoOrder::elim((0..nvars).map(|i| range.contains(&i)).collect())
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonoOrder::Lex => a.0.cmp(&b.0),
            MonoOrder::GrevLex => grevlex_masked(a, b, None),
            MonoOrder::Elim(mask) => grevlex_masked(a, b, Some((mask, true)))
                .then_with(|| grevlex_masked(a, b, Some((mask, false)))),
        }
    }

    pub fn tag(&self) -> String {
        match self {
            MonoOrder::Lex => "lex".into(),
            MonoOrder::GrevLex => "grevlex".into(),
            MonoOrder::Elim(m) => {
                let idx: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(i, _)| i.to_string())
                    .collect();
                format!("elim[{}]", idx.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Mono {
        Mono::from_slice(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonoOrder::GrevLex;
        // x^2 > xy > y^2 > x > y > 1
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        // x y^0 z^2 vs x^0 y^2 z^1 in 3 vars, degree 3 each: smaller z-exponent wins
        assert_eq!(o.cmp(&m(&[1, 0, 2]), &m(&[0, 2, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_dominates() {
        let o = MonoOrder::elim(vec![true, false]);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }
}
