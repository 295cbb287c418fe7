use crate::error::{Error, Result};
use crate::free_operad::{Generator, Tree, TreeTensor};
use crate::lie::LieWord;
use crate::linalg::SpeciesVector;
use crate::pl::rooted::RootedTree;
use crate::rational::Rational;

pub type PlVector = SpeciesVector<RootedTree>;

pub fn vertex(label: u32) -> PlVector {
    RootedTree::single(label).to_vector()
}

/// Bilinear `x ◁ y`.
pub fn pre(x: &PlVector, y: &PlVector) -> Result<PlVector> {
    if !x.component().is_disjoint(y.component()) {
        let clash = x.component().iter().find(|&a| y.component().contains(a)).expect("shared label");
        return Err(Error::LabelClash(clash));
    }
    let mut out = SpeciesVector::zero(x.component().union(y.component()));
    for (s, a) in x.terms() {
        for (t, b) in y.terms() {
            out.add_scaled(&s.pre_product(t)?, &(a * b))?;
        }
    }
    Ok(out)
}

/// `[x, y] = x ◁ y − y ◁ x`.
pub fn bracket(x: &PlVector, y: &PlVector) -> Result<PlVector> {
    let mut out = pre(x, y)?;
    out.add_scaled(&pre(y, x)?, &-Rational::one())?;
    Ok(out)
}

/// `x • y = x ◁ y + y ◁ x`.
pub fn bullet(x: &PlVector, y: &PlVector) -> Result<PlVector> {
    let mut out = pre(x, y)?;
    out.add_scaled(&pre(y, x)?, &Rational::one())?;
    Ok(out)
}

pub fn eval_tree(tree: &Tree) -> Result<PlVector> {
    match tree {
        Tree::Leaf(a) => Ok(vertex(*a)),
        Tree::Node(g, l, r) => {
            let (l, r) = (eval_tree(l)?, eval_tree(r)?);
            match g {
                Generator::Bracket => bracket(&l, &r),
                Generator::Bullet => bullet(&l, &r),
                Generator::Pre => pre(&l, &r),
            }
        }
    }
}

/// The morphism from any of the free operads onto the rooted-tree model.
pub fn eval(v: &SpeciesVector<TreeTensor>) -> Result<PlVector> {
    v.map_linear(v.component().clone(), |t| eval_tree(t.tree()))
}

pub fn eval_word(w: &LieWord) -> Result<PlVector> {
    let mut letters = w.letters().iter();
    let first = vertex(*letters.next().expect("nonempty word"));
    letters.try_fold(first, |acc, &a| bracket(&acc, &vertex(a)))
}

/// Linear extension of [`eval_word`].
pub fn eval_lie(v: &SpeciesVector<LieWord>) -> Result<PlVector> {
    v.map_linear(v.component().clone(), eval_word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_operad::parse_combination;
    use crate::quotient::{JACOBI_RELATOR, PRE_LIE_RELATOR, SYMMETRIZED_RELATOR};

    fn ev(s: &str) -> PlVector {
        eval(&parse_combination(s, None).unwrap()).unwrap()
    }

    #[test]
    fn generators_evaluate_to_two_vertex_trees() {
        assert_eq!(ev("(1<2)").to_string(), "1(2)");
        assert_eq!(ev("[1,2]").to_string(), "1(2) - 2(1)");
        assert_eq!(ev("{1,2}").to_string(), "1(2) + 2(1)");
    }

    #[test]
    fn relators_vanish() {
        for r in [PRE_LIE_RELATOR, JACOBI_RELATOR, SYMMETRIZED_RELATOR] {
            assert!(ev(r).is_zero(), "{r}");
        }
    }

    #[test]
    fn bracket_rejects_overlap() {
        assert!(matches!(bracket(&vertex(1), &vertex(1)), Err(Error::LabelClash(1))));
    }
}
