//! The species `CL` of cyclic Lie elements: the right Lie-module generated by
//! one symmetric binary form `(a₁, a₂)` subject to `([a₁,a₂],a₃) = (a₁,[a₂,a₃])`.
//!
//! The ambient space has a basis of form symbols `(ℓ, ℓ′)`, with `ℓ`, `ℓ′`
//! left-normed basis words on the two blocks of a split. The relation is
//! trilinear in its three Lie arguments, so its instances on basis words over
//! all ordered three-block splits span every instance.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::{bracket_lie, lie_words, relabel_word, LieWord};
use crate::linalg::{LabelSet, SpeciesVector, Span};
use crate::perm::Permutation;
use crate::rational::Rational;

/// `(left, right)` with the least label in `left`, which builds in `(a,b) = (b,a)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormSymbol {
    left: LieWord,
    right: LieWord,
}

impl FormSymbol {
    pub fn new(a: LieWord, b: LieWord) -> Self {
        if a.letters()[0] < b.letters()[0] {
            FormSymbol { left: a, right: b }
        } else {
            FormSymbol { left: b, right: a }
        }
    }

    pub fn left(&self) -> &LieWord {
        &self.left
    }

    pub fn right(&self) -> &LieWord {
        &self.right
    }

    pub fn labels(&self) -> LabelSet {
        self.left.labels().union(&self.right.labels())
    }
}

impl fmt::Display for FormSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

impl fmt::Debug for FormSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Bilinear extension of the form to Lie combinations on disjoint blocks.
pub fn form(x: &SpeciesVector<LieWord>, y: &SpeciesVector<LieWord>) -> Result<SpeciesVector<FormSymbol>> {
    if !x.component().is_disjoint(y.component()) {
        return Err(Error::LabelClash(x.component().iter().find(|&a| y.component().contains(a)).expect("shared")));
    }
    let mut out = SpeciesVector::zero(x.component().union(y.component()));
    for (u, a) in x.terms() {
        for (v, b) in y.terms() {
            out.add_term(FormSymbol::new(u.clone(), v.clone()), a * b);
        }
    }
    Ok(out)
}

/// `σ` applied to a symbol, rewritten into the symbol basis.
pub fn act_form(sigma: &Permutation, s: &FormSymbol) -> Result<SpeciesVector<FormSymbol>> {
    let f = |x| sigma.apply(x);
    form(&relabel_word(&s.left, &f)?, &relabel_word(&s.right, &f)?)
}

/// Ordered splits of `labels` into three nonempty blocks.
fn ordered_three_block_splits(labels: &LabelSet) -> Vec<[LabelSet; 3]> {
    let mut out = Vec::new();
    for a in labels.subsets().filter(|a| !a.is_empty() && a.len() + 2 <= labels.len()) {
        let rest = labels.difference(&a);
        for b in rest.subsets().filter(|b| !b.is_empty() && b.len() < rest.len()) {
            let c = rest.difference(&b);
            out.push([a.clone(), b, c]);
        }
    }
    out
}

/// One arity of `CL`, on the labels `{1, …, n}`.
#[derive(Clone, Debug)]
pub struct ClComponent {
    pub arity: usize,
    pub symbols: Vec<FormSymbol>,
    pub relations: Span<FormSymbol>,
}

impl ClComponent {
    pub fn ambient_dim(&self) -> usize {
        self.symbols.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.relations.dim()
    }

    pub fn labels(&self) -> LabelSet {
        LabelSet::range(self.arity)
    }

    /// Trace of `σ` on the quotient: ambient trace minus trace on the relations.
    pub fn character(&self, sigma: &Permutation) -> Result<Rational> {
        let ambient: Rational = self
            .symbols
            .par_iter()
            .map(|s| Ok(act_form(sigma, s)?.coeff(s)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum();
        let relations = self.relations.character(|s| act_form(sigma, s))?;
        Ok(&ambient - &relations)
    }

    pub fn relations_are_stable(&self) -> Result<bool> {
        for i in 1..self.arity as u32 {
            let sigma = Permutation::transposition(i, i + 1);
            if !self.relations.is_stable_under(|s| act_form(&sigma, s))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn cl_component(n: usize) -> Result<ClComponent> {
    if n < 2 {
        return Err(Error::ArityTooSmall { minimum: 2, found: n });
    }
    let labels = LabelSet::range(n);
    let first = 1;
    let mut symbols = Vec::new();
    for a in labels.subsets().filter(|a| a.contains(first) && a.len() < n) {
        let b = labels.difference(&a);
        for u in lie_words(&a)? {
            for v in lie_words(&b)? {
                symbols.push(FormSymbol::new(u.clone(), v));
            }
        }
    }
    symbols.sort();
    let relations: Vec<SpeciesVector<FormSymbol>> = ordered_three_block_splits(&labels)
        .par_iter()
        .map(|[a, b, c]| {
            let mut out = Vec::new();
            for u in lie_words(a)? {
                for v in lie_words(b)? {
                    for w in lie_words(c)? {
                        let (u, v, w) = (u.to_vector(), v.to_vector(), w.to_vector());
                        let lhs = form(&bracket_lie(&u, &v)?, &w)?;
                        let rhs = form(&u, &bracket_lie(&v, &w)?)?;
                        out.push(lhs.minus(&rhs)?);
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let relations = Span::from_vectors(labels, &relations)?;
    Ok(ClComponent { arity: n, symbols, relations })
}

pub fn cl_character(component: &ClComponent, sigma: &Permutation) -> Result<Rational> {
    component.character(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let dims: Vec<(usize, usize)> = (2..=6).map(|n| {
            let c = cl_component(n).unwrap();
            (c.ambient_dim(), c.dim())
        }).collect();
        assert_eq!(dims, vec![(1, 1), (3, 1), (11, 2), (50, 6), (274, 24)]);
        assert!(cl_component(1).is_err());
    }

    #[test]
    fn arity_three_is_the_sign_representation() {
        let c = cl_component(3).unwrap();
        assert_eq!(c.character(&Permutation::identity()).unwrap(), Rational::from(1));
        assert_eq!(c.character(&Permutation::transposition(1, 2)).unwrap(), Rational::from(-1));
        assert_eq!(c.character(&Permutation::from_cycles(&[&[1, 2, 3]]).unwrap()).unwrap(), Rational::from(1));
    }

    #[test]
    fn relations_are_symmetric_group_stable() {
        for n in 3..=5 {
            assert!(cl_component(n).unwrap().relations_are_stable().unwrap());
        }
    }

    fn mobius(d: usize) -> i64 {
        let (mut m, mut x, mut p) = (1, d, 2);
        while x > 1 {
            if x % p == 0 {
                x /= p;
                if x % p == 0 {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        m
    }

    /// Character of `Lie(m)`: `μ(d)(k−1)! d^{k−1}` when all `k` cycles have
    /// length `d`, and zero otherwise.
    fn lie_character(cycle_type: &[usize]) -> i64 {
        let d = cycle_type[0];
        if cycle_type.iter().any(|&c| c != d) {
            return 0;
        }
        let k = cycle_type.len();
        mobius(d) * (1..k as i64).product::<i64>() * (d as i64).pow(k as u32 - 1)
    }

    /// Restricted to the stabilizer of one label, `CL(n)` is `Lie(n−1)`.
    #[test]
    fn restriction_is_the_lie_representation() {
        for n in 3..=6 {
            let c = cl_component(n).unwrap();
            for (shape, sigma) in Permutation::cycle_type_representatives(&LabelSet::range(n - 1)) {
                assert_eq!(c.character(&sigma).unwrap(), Rational::from(lie_character(&shape)), "n={n} {shape:?}");
            }
        }
    }

    #[test]
    fn symbols_are_symmetric() {
        let a = LieWord::new(vec![1, 3]).unwrap();
        let b = LieWord::letter(2);
        assert_eq!(FormSymbol::new(b.clone(), a.clone()), FormSymbol::new(a, b));
        let s = FormSymbol::new(LieWord::letter(2), LieWord::new(vec![1, 3]).unwrap());
        assert_eq!(s.to_string(), "([1,3],2)");
    }
}
