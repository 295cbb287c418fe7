//! Finite permutations of positive integer labels.
//!
//! Products follow the right-action convention `(τσ)(x) = σ(τ(x))`: the left
//! factor acts first, so `v.τ.σ = v.(τσ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::LabelSet;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation {
    // Only moved points are stored.
    map: BTreeMap<u32, u32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn transposition(a: u32, b: u32) -> Self {
        Self::from_cycles(&[&[a, b]]).expect("a transposition is a permutation")
    }

    /// Builds a permutation from disjoint cycles, `(1 2 3)` sending 1→2→3→1.
    pub fn from_cycles(cycles: &[&[u32]]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if map.insert(x, y).is_some() {
                    return Err(Error::BadPermutation(format!("{cycles:?}")));
                }
            }
        }
        Ok(Self::normalized(map))
    }

    /// `images[i]` is the image of `domain[i]`.
    pub fn from_images(domain: &LabelSet, images: &[u32]) -> Result<Self> {
        let target: LabelSet = images.iter().copied().collect();
        if images.len() != domain.len() || target != *domain {
            return Err(Error::BadPermutation(format!("{images:?} on {domain}")));
        }
        Ok(Self::normalized(domain.iter().zip(images.iter().copied()).collect()))
    }

    fn normalized(mut map: BTreeMap<u32, u32>) -> Self {
        map.retain(|k, v| k != v);
        Permutation { map }
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.map.get(&x).copied().unwrap_or(x)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        let support: Vec<u32> = self.map.keys().chain(next.map.keys()).copied().collect();
        Self::normalized(support.into_iter().map(|x| (x, next.apply(self.apply(x)))).collect())
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { map: self.map.iter().map(|(&k, &v)| (v, k)).collect() }
    }

    pub fn moves_only(&self, labels: &LabelSet) -> bool {
        self.map.keys().all(|k| labels.contains(*k))
    }

    /// Cycle lengths on `labels`, sorted decreasingly (fixed points included).
    pub fn cycle_type(&self, labels: &LabelSet) -> Vec<usize> {
        let mut seen = std::collections::BTreeSet::new();
        let mut lengths = Vec::new();
        for x in labels.iter() {
            if seen.contains(&x) {
                continue;
            }
            let mut len = 0;
            let mut y = x;
            while seen.insert(y) {
                len += 1;
                y = self.apply(y);
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Every permutation of `labels`.
    pub fn all(labels: &LabelSet) -> impl Iterator<Item = Permutation> + '_ {
        let n = labels.len();
        labels
            .iter()
            .permutations(n)
            .map(move |images| Permutation::from_images(labels, &images).expect("permutation"))
    }

    /// One permutation per cycle type, cycles filled with consecutive labels.
    pub fn cycle_type_representatives(labels: &LabelSet) -> Vec<(Vec<usize>, Permutation)> {
        let items: Vec<u32> = labels.iter().collect();
        partitions(items.len())
            .into_iter()
            .map(|shape| {
                let mut cycles = Vec::new();
                let mut start = 0;
                for &len in &shape {
                    cycles.push(items[start..start + len].to_vec());
                    start += len;
                }
                let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
                (shape, Permutation::from_cycles(&refs).expect("disjoint cycles"))
            })
            .collect()
    }
}

/// Integer partitions of `n`, parts in decreasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl Mul for &Permutation {
    type Output = Permutation;
    /// `τ * σ` is the product `τσ`, acting as `σ ∘ τ`.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "()");
        }
        let mut seen = std::collections::BTreeSet::new();
        for &x in self.map.keys() {
            if seen.contains(&x) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut y = x;
            while seen.insert(y) {
                cycle.push(y.to_string());
                y = self.apply(y);
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_convention() {
        let tau = Permutation::transposition(1, 2);
        let sigma = Permutation::transposition(2, 3);
        let prod = &tau * &sigma;
        // 1 -τ-> 2 -σ-> 3
        assert_eq!(prod.apply(1), 3);
        assert_eq!(prod.apply(3), 2);
        assert_eq!(prod.apply(2), 1);
        assert_eq!(prod.to_string(), "(1 3 2)");
        assert!((&prod * &prod.inverse()).is_identity());
    }

    #[test]
    fn enumerates_and_classifies() {
        let labels = LabelSet::range(4);
        assert_eq!(Permutation::all(&labels).count(), 24);
        assert_eq!(partitions(5).len(), 7);
        let reps = Permutation::cycle_type_representatives(&labels);
        assert_eq!(reps.len(), 5);
        for (shape, p) in reps {
            assert_eq!(p.cycle_type(&labels), shape);
        }
        assert!(Permutation::from_cycles(&[&[1, 2], &[2, 3]]).is_err());
        assert!(Permutation::from_images(&labels, &[1, 1, 2, 3]).is_err());
    }
}
