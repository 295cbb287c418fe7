//! Factorizations of tree tensors over `{[-,-], -•-}` and the weight statistic.

use crate::error::{Error, Result};
use crate::free_operad::{full_compose, partial_compose, Generator, Tree, TreeTensor};
use crate::linalg::SpeciesVector;
use crate::rational::Rational;

/// `T = γ(S; T₁, …, Tₚ)` with `S` the maximal bracket-only subtree at the root.
///
/// `outer` is labelled `1..=p`; part `k` is grafted at leaf `k` and the parts
/// are listed by increasing least label, so `outer` is already canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub outer: TreeTensor,
    pub parts: Vec<TreeTensor>,
}

impl Factorization {
    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    pub fn recompose(&self) -> Result<SpeciesVector<TreeTensor>> {
        let parts: Vec<_> = self.parts.iter().map(TreeTensor::to_vector).collect();
        full_compose(&self.outer, &parts)
    }
}

fn check_two_generator(t: &TreeTensor) -> Result<()> {
    match t.tree().generators().into_iter().find(|g| *g == Generator::Pre) {
        Some(g) => Err(Error::ForeignGenerator(g.name().into())),
        None => Ok(()),
    }
}

pub fn gamma_factorize(t: &TreeTensor) -> Result<Factorization> {
    check_two_generator(t)?;
    fn split(tree: &Tree, parts: &mut Vec<Tree>) -> Tree {
        match tree {
            Tree::Node(Generator::Bracket, l, r) => {
                let l = split(l, parts);
                let r = split(r, parts);
                Tree::node(Generator::Bracket, l, r)
            }
            other => {
                parts.push(other.clone());
                // Temporary slot name: the part's least label.
                Tree::Leaf(other.min_label())
            }
        }
    }
    let mut parts = Vec::new();
    let skeleton = split(t.tree(), &mut parts);
    parts.sort_by_key(Tree::min_label);
    let rank = |m: u32| parts.iter().position(|p| p.min_label() == m).expect("slot") as u32 + 1;
    fn rename(tree: &Tree, rank: &impl Fn(u32) -> u32) -> Tree {
        match tree {
            Tree::Leaf(m) => Tree::Leaf(rank(*m)),
            Tree::Node(g, l, r) => Tree::node(*g, rename(l, rank), rename(r, rank)),
        }
    }
    let outer = TreeTensor(rename(&skeleton, &rank));
    Ok(Factorization { outer, parts: parts.into_iter().map(TreeTensor).collect() })
}

/// Arity of the bracket-only root factor plus the number of bullet vertices.
pub fn weight(t: &TreeTensor) -> Result<usize> {
    Ok(gamma_factorize(t)?.arity() + t.count(Generator::Bullet))
}

/// Cuts a trivial or bullet-rooted tensor at its bullet vertices.
///
/// Pieces come in pre-order. A cut point is a leaf carrying the least label
/// of the subtree that was cut off, so every piece stays canonical; that
/// subtree's own piece is the next later piece with that least label.
pub fn bullet_cut_factorize(t: &TreeTensor) -> Result<Vec<TreeTensor>> {
    check_two_generator(t)?;
    match t.root_generator() {
        None => return Ok(Vec::new()),
        Some(Generator::Bullet) => {}
        Some(_) => return Err(Error::NotBulletRooted(t.to_string())),
    }
    fn body(tree: &Tree, cuts: &mut Vec<Tree>) -> Tree {
        match tree {
            Tree::Leaf(a) => Tree::Leaf(*a),
            Tree::Node(Generator::Bullet, _, _) => {
                cuts.push(tree.clone());
                Tree::Leaf(tree.min_label())
            }
            Tree::Node(g, l, r) => Tree::node(*g, body(l, cuts), body(r, cuts)),
        }
    }
    fn pieces(root: &Tree, out: &mut Vec<TreeTensor>) {
        let Tree::Node(g, l, r) = root else { unreachable!("pieces are bullet-rooted") };
        let mut cuts = Vec::new();
        let l = body(l, &mut cuts);
        let r = body(r, &mut cuts);
        out.push(TreeTensor(Tree::node(*g, l, r)));
        for cut in &cuts {
            pieces(cut, out);
        }
    }
    let mut out = Vec::new();
    pieces(t.tree(), &mut out);
    Ok(out)
}

/// Inverse of [`bullet_cut_factorize`], by iterated partial composition.
pub fn compose_cut_pieces(pieces: &[TreeTensor]) -> Result<SpeciesVector<TreeTensor>> {
    fn build(pieces: &[TreeTensor], idx: usize) -> Result<SpeciesVector<TreeTensor>> {
        let mut acc = pieces[idx].to_vector();
        for label in pieces[idx].labels().iter() {
            let child = (idx + 1..pieces.len()).find(|&j| pieces[j].min_label() == label);
            if let Some(j) = child {
                let inner = build(pieces, j)?;
                acc = compose_vectors(&acc, label, &inner)?;
            }
        }
        Ok(acc)
    }
    fn compose_vectors(
        outer: &SpeciesVector<TreeTensor>,
        label: u32,
        inner: &SpeciesVector<TreeTensor>,
    ) -> Result<SpeciesVector<TreeTensor>> {
        let component = outer.component().without(label).union(inner.component());
        let mut out = SpeciesVector::zero(component);
        for (t, a) in outer.terms() {
            for (s, b) in inner.terms() {
                out.add_scaled(&partial_compose(t, label, s)?, &(a * b))?;
            }
        }
        Ok(out)
    }
    if pieces.is_empty() {
        return Err(Error::MalformedTree("the empty composition has no label to return".into()));
    }
    let out = build(pieces, 0)?;
    debug_assert!(out.terms().all(|(_, c)| *c == Rational::one()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_operad::{canonicalize, enumerate_basis, parse_tree, Signature};
    use crate::linalg::LabelSet;

    fn c(s: &str) -> TreeTensor {
        canonicalize(&parse_tree(s, None).unwrap()).unwrap().0
    }

    #[test]
    fn gamma_examples() {
        let f = gamma_factorize(&c("[[1,2],3]")).unwrap();
        assert_eq!(f.outer, c("[[1,2],3]"));
        assert_eq!(f.parts, vec![TreeTensor::unit(1), TreeTensor::unit(2), TreeTensor::unit(3)]);

        let f = gamma_factorize(&c("{[1,2],3}")).unwrap();
        assert_eq!(f.outer, TreeTensor::unit(1));
        assert_eq!(f.parts, vec![c("{[1,2],3}")]);

        let f = gamma_factorize(&c("[{1,2},3]")).unwrap();
        assert_eq!(f.outer, c("[1,2]"));
        assert_eq!(f.parts, vec![c("{1,2}"), TreeTensor::unit(3)]);

        let f = gamma_factorize(&c("[3,[{1,4},2]]")).unwrap();
        assert_eq!(f.outer.to_string(), "[[1,2],3]");
        assert_eq!(f.parts, vec![c("{1,4}"), TreeTensor::unit(2), TreeTensor::unit(3)]);
        assert_eq!(f.recompose().unwrap(), c("[3,[{1,4},2]]").to_vector());

        assert!(gamma_factorize(&c("(1<2)")).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&c("{[1,2],3}")).unwrap(), 2);
        assert_eq!(weight(&c("{1,{2,3}}")).unwrap(), 3);
        assert_eq!(weight(&c("[[1,2],3]")).unwrap(), 3);
        assert_eq!(weight(&TreeTensor::unit(1)).unwrap(), 1);
    }

    #[test]
    fn bullet_cuts() {
        assert!(bullet_cut_factorize(&TreeTensor::unit(4)).unwrap().is_empty());
        assert_eq!(bullet_cut_factorize(&c("{[1,2],3}")).unwrap(), vec![c("{[1,2],3}")]);
        // {1,★} with ★ = {2,3}, the cut point carrying label 2.
        assert_eq!(bullet_cut_factorize(&c("{1,{2,3}}")).unwrap(), vec![c("{1,2}"), c("{2,3}")]);
        assert!(matches!(bullet_cut_factorize(&c("[1,{2,3}]")), Err(Error::NotBulletRooted(_))));
        let nested = c("{{{2,3},4},[{5,6},1]}");
        let pieces = bullet_cut_factorize(&nested).unwrap();
        assert_eq!(pieces.len(), 4);
        for p in &pieces {
            assert_eq!(p.root_generator(), Some(Generator::Bullet));
            assert_eq!(p.count(Generator::Bullet), 1);
        }
        assert_eq!(compose_cut_pieces(&pieces).unwrap(), nested.to_vector());
    }

    #[test]
    fn round_trips_through_both_factorizations() {
        for n in 1..=5 {
            for t in enumerate_basis(&Signature::bracket_bullet(), &LabelSet::range(n)).unwrap() {
                let f = gamma_factorize(&t).unwrap();
                assert!(f.outer.uses_only(&Signature::lie()));
                let mut parts = Vec::new();
                for part in &f.parts {
                    assert!(part.is_trivial() || part.root_generator() == Some(Generator::Bullet));
                    let pieces = bullet_cut_factorize(part).unwrap();
                    let rebuilt = if pieces.is_empty() { part.to_vector() } else { compose_cut_pieces(&pieces).unwrap() };
                    assert_eq!(rebuilt, part.to_vector());
                    parts.push(rebuilt);
                }
                assert_eq!(full_compose(&f.outer, &parts).unwrap(), t.to_vector());
            }
        }
    }
}
