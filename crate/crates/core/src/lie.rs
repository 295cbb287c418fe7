//! Left-normed bases of Lie components and rewriting into them.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::free_operad::{Generator, Tree};
use crate::linalg::{LabelSet, SpeciesVector};
use crate::rational::Rational;

/// The left-normed bracketing `[[…[w₀,w₁],…],wₖ]` with `w₀` the least label.
///
/// These words form a basis of the Lie component on their label set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieWord(Vec<u32>);

impl LieWord {
    pub fn letter(a: u32) -> Self {
        LieWord(vec![a])
    }

    /// Accepts only words whose first letter is the least one.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let labels: LabelSet = letters.iter().copied().collect();
        if letters.is_empty() || labels.len() != letters.len() || LabelSet::min(&labels) != Some(letters[0]) {
            return Err(Error::MalformedTree(format!("{letters:?} is not a left-normed basis word")));
        }
        Ok(LieWord(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn labels(&self) -> LabelSet {
        self.0.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_tree(&self) -> Tree {
        let mut letters = self.0.iter();
        let first = Tree::Leaf(*letters.next().expect("nonempty word"));
        letters.fold(first, |acc, &a| Tree::node(Generator::Bracket, acc, Tree::Leaf(a)))
    }

    fn push(&self, a: u32) -> LieWord {
        let mut letters = self.0.clone();
        letters.push(a);
        LieWord(letters)
    }

    pub fn to_vector(&self) -> SpeciesVector<LieWord> {
        SpeciesVector::single(self.labels(), self.clone(), Rational::one())
    }
}

impl fmt::Display for LieWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tree())
    }
}

impl fmt::Debug for LieWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `(n−1)!` basis words on `labels`, in lexicographic order.
pub fn lie_words(labels: &LabelSet) -> Result<Vec<LieWord>> {
    let first = labels.min().ok_or(Error::EmptyLabelSet)?;
    let rest = labels.without(first);
    Ok(rest
        .iter()
        .permutations(rest.len())
        .map(|p| LieWord(std::iter::once(first).chain(p).collect()))
        .collect())
}

/// `[u, v]` in the left-normed basis.
///
/// With the least label in `u`, write `v = [v′, b]` and use
/// `[u, [v′, b]] = [[u, v′], b] − [[u, b], v′]`; both terms end in a word
/// still led by the least label, and `v′` is shorter.
pub fn bracket_words(u: &LieWord, v: &LieWord) -> Result<SpeciesVector<LieWord>> {
    let (a, b) = (u.labels(), v.labels());
    if !a.is_disjoint(&b) {
        return Err(Error::LabelClash(a.iter().find(|&x| b.contains(x)).expect("shared label")));
    }
    let component = a.union(&b);
    let mut out = SpeciesVector::zero(component.clone());
    if v.0[0] < u.0[0] {
        out.add_scaled(&bracket_words(v, u)?, &-Rational::one())?;
        return Ok(out);
    }
    if v.len() == 1 {
        out.add_term(u.push(v.0[0]), Rational::one());
        return Ok(out);
    }
    let last = *v.0.last().expect("nonempty");
    let prefix = LieWord(v.0[..v.len() - 1].to_vec());
    for (w, c) in bracket_words(u, &prefix)?.terms() {
        out.add_term(w.push(last), c.clone());
    }
    let shifted = bracket_words(&u.push(last), &prefix)?;
    out.add_scaled(&shifted, &-Rational::one())?;
    Ok(out)
}

/// Bilinear extension of [`bracket_words`].
pub fn bracket_lie(x: &SpeciesVector<LieWord>, y: &SpeciesVector<LieWord>) -> Result<SpeciesVector<LieWord>> {
    let mut out = SpeciesVector::zero(x.component().union(y.component()));
    for (u, a) in x.terms() {
        for (v, b) in y.terms() {
            out.add_scaled(&bracket_words(u, v)?, &(a * b))?;
        }
    }
    Ok(out)
}

/// Coordinates of a bracket-only tree in the left-normed basis.
pub fn lie_rewrite(tree: &Tree) -> Result<SpeciesVector<LieWord>> {
    match tree {
        Tree::Leaf(a) => Ok(LieWord::letter(*a).to_vector()),
        Tree::Node(Generator::Bracket, l, r) => bracket_lie(&lie_rewrite(l)?, &lie_rewrite(r)?),
        Tree::Node(g, _, _) => Err(Error::ForeignGenerator(g.name().into())),
    }
}

/// Linear extension of [`lie_rewrite`] to combinations of tree tensors.
pub fn lie_rewrite_vector(v: &SpeciesVector<crate::free_operad::TreeTensor>) -> Result<SpeciesVector<LieWord>> {
    v.map_linear(v.component().clone(), |t| lie_rewrite(t.tree()))
}

/// Relabels a basis word and rewrites the result back into the basis.
pub fn relabel_word(w: &LieWord, f: &impl Fn(u32) -> u32) -> Result<SpeciesVector<LieWord>> {
    let mut letters = w.0.iter().map(|&a| f(a));
    let first = LieWord::letter(letters.next().expect("nonempty"));
    letters.try_fold(first.to_vector(), |acc, a| bracket_lie(&acc, &LieWord::letter(a).to_vector()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_operad::{parse_combination, parse_tree, Signature};
    use crate::quotient::Presentation;

    fn rw(s: &str) -> String {
        lie_rewrite(&parse_tree(s, None).unwrap()).unwrap().to_string()
    }

    #[test]
    fn rewriting_examples() {
        assert_eq!(rw("[[1,2],3]"), "[[1,2],3]");
        assert_eq!(rw("[1,[2,3]]"), "[[1,2],3] - [[1,3],2]");
        assert_eq!(rw("[2,1]"), "-[1,2]");
        assert_eq!(rw("[[2,3],1]"), "-[[1,2],3] + [[1,3],2]");
        assert!(lie_rewrite(&parse_tree("{1,2}", None).unwrap()).is_err());
    }

    #[test]
    fn word_counts() {
        for n in 1..=6 {
            let words = lie_words(&LabelSet::range(n)).unwrap();
            assert_eq!(words.len(), (1..n).product::<usize>());
        }
        assert!(lie_words(&LabelSet::default()).is_err());
        assert!(LieWord::new(vec![2, 1]).is_err());
        assert!(LieWord::new(vec![1, 3, 2]).is_ok());
    }

    /// The rewrite agrees with reduction modulo the Jacobi ideal.
    #[test]
    fn rewriting_matches_jacobi_quotient() {
        let lie = Presentation::lie();
        let ideal = lie.ideal_component(4).unwrap();
        let labels = LabelSet::range(4);
        for t in crate::free_operad::enumerate_basis(&Signature::lie(), &labels).unwrap() {
            let coords = lie_rewrite(t.tree()).unwrap();
            let mut back = SpeciesVector::zero(labels.clone());
            for (w, c) in coords.terms() {
                let tv = parse_combination(&w.to_string(), None).unwrap();
                back.add_scaled(&tv, c).unwrap();
            }
            assert!(ideal.equal_in_quotient(&back, &t.to_vector()).unwrap(), "{t}");
        }
    }
}
