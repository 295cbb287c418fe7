//! Free operads on binary generators.
//!
//! A basis element is a [`TreeTensor`]: a rooted binary tree with leaves in
//! bijection with a label set and internal vertices labelled by generators,
//! taken modulo the generators' symmetries. The canonical representative
//! orders the two children of every (anti)symmetric vertex by their least
//! leaf label; each swap at an antisymmetric vertex flips the sign.

mod factor;
mod parse;

pub use factor::{bullet_cut_factorize, compose_cut_pieces, gamma_factorize, weight, Factorization};
pub use parse::{parse_combination, parse_tree};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{LabelSet, SpeciesVector};
use crate::perm::Permutation;
use crate::rational::Rational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    None,
}

/// A binary generating operation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `[a, b]`, antisymmetric.
    Bracket,
    /// `{a, b}`, the symmetric product `a • b`.
    Bullet,
    /// `(a < b)`, the pre-Lie product `a ◁ b`, no symmetry.
    Pre,
}

impl Generator {
    pub fn symmetry(self) -> Symmetry {
        match self {
            Generator::Bracket => Symmetry::Antisymmetric,
            Generator::Bullet => Symmetry::Symmetric,
            Generator::Pre => Symmetry::None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Bracket => "bracket",
            Generator::Bullet => "bullet",
            Generator::Pre => "pre",
        }
    }

    pub fn arity(self) -> usize {
        2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature(Vec<Generator>);

impl Signature {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        let distinct: BTreeSet<_> = generators.iter().collect();
        if distinct.len() != generators.len() {
            return Err(Error::MalformedTree("repeated generator in signature".into()));
        }
        Ok(Signature(generators))
    }

    /// `{◁}`
    pub fn pre_lie() -> Self {
        Signature(vec![Generator::Pre])
    }

    /// `{[-,-]}`
    pub fn lie() -> Self {
        Signature(vec![Generator::Bracket])
    }

    /// `{[-,-], -•-}`
    pub fn bracket_bullet() -> Self {
        Signature(vec![Generator::Bracket, Generator::Bullet])
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn contains(&self, g: Generator) -> bool {
        self.0.contains(&g)
    }
}

/// A raw, not necessarily canonical, labelled binary tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf(u32),
    Node(Generator, Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(g: Generator, left: Tree, right: Tree) -> Tree {
        Tree::Node(g, Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Tree::Leaf(a) => out.push(*a),
            Tree::Node(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn min_label(&self) -> u32 {
        match self {
            Tree::Leaf(a) => *a,
            Tree::Node(_, l, r) => l.min_label().min(r.min_label()),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        match self {
            Tree::Leaf(_) => Vec::new(),
            Tree::Node(g, l, r) => {
                let mut out = vec![*g];
                out.extend(l.generators());
                out.extend(r.generators());
                out
            }
        }
    }

    fn relabel(&self, f: &impl Fn(u32) -> u32) -> Tree {
        match self {
            Tree::Leaf(a) => Tree::Leaf(f(*a)),
            Tree::Node(g, l, r) => Tree::node(*g, l.relabel(f), r.relabel(f)),
        }
    }

    fn substitute(&self, subs: &HashMap<u32, Tree>) -> Tree {
        match self {
            Tree::Leaf(a) => subs.get(a).cloned().unwrap_or(Tree::Leaf(*a)),
            Tree::Node(g, l, r) => Tree::node(*g, l.substitute(subs), r.substitute(subs)),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(a) => write!(f, "{a}"),
            Tree::Node(Generator::Bracket, l, r) => write!(f, "[{l},{r}]"),
            Tree::Node(Generator::Bullet, l, r) => write!(f, "{{{l},{r}}}"),
            Tree::Node(Generator::Pre, l, r) => write!(f, "({l}<{r})"),
        }
    }
}

/// Canonical basis element of a free operad component.
///
/// The single-leaf tensor is the unit (trivial tree) of arity one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeTensor(Tree);

impl TreeTensor {
    pub fn unit(label: u32) -> Self {
        TreeTensor(Tree::Leaf(label))
    }

    pub fn tree(&self) -> &Tree {
        &self.0
    }

    pub fn labels(&self) -> LabelSet {
        self.0.leaves().into_iter().collect()
    }

    pub fn arity(&self) -> usize {
        self.0.leaves().len()
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.0, Tree::Leaf(_))
    }

    pub fn root_generator(&self) -> Option<Generator> {
        match &self.0 {
            Tree::Leaf(_) => None,
            Tree::Node(g, _, _) => Some(*g),
        }
    }

    pub fn min_label(&self) -> u32 {
        self.0.min_label()
    }

    pub fn count(&self, g: Generator) -> usize {
        self.0.generators().into_iter().filter(|&h| h == g).count()
    }

    pub fn uses_only(&self, signature: &Signature) -> bool {
        self.0.generators().into_iter().all(|g| signature.contains(g))
    }

    /// Relabels leaves and recanonicalizes.
    pub fn relabel(&self, f: &impl Fn(u32) -> u32) -> (TreeTensor, i32) {
        canonicalize(&self.0.relabel(f)).expect("relabelling by a bijection keeps leaves distinct")
    }

    /// This tensor as a vector with coefficient one.
    pub fn to_vector(&self) -> SpeciesVector<TreeTensor> {
        SpeciesVector::single(self.labels(), self.clone(), Rational::one())
    }
}

impl fmt::Display for TreeTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for TreeTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn canon(tree: &Tree) -> (Tree, u32, i32) {
    match tree {
        Tree::Leaf(a) => (Tree::Leaf(*a), *a, 1),
        Tree::Node(g, l, r) => {
            let (l, ml, sl) = canon(l);
            let (r, mr, sr) = canon(r);
            let mut sign = sl * sr;
            let swap = g.symmetry() != Symmetry::None && mr < ml;
            if swap && g.symmetry() == Symmetry::Antisymmetric {
                sign = -sign;
            }
            let node = if swap { Tree::node(*g, r, l) } else { Tree::node(*g, l, r) };
            (node, ml.min(mr), sign)
        }
    }
}

/// Canonical representative of a raw tree and the sign relating the two.
pub fn canonicalize(tree: &Tree) -> Result<(TreeTensor, i32)> {
    let leaves = tree.leaves();
    let distinct: BTreeSet<u32> = leaves.iter().copied().collect();
    if distinct.len() != leaves.len() {
        return Err(Error::MalformedTree(format!("duplicate leaf label in {tree}")));
    }
    if distinct.contains(&0) {
        return Err(Error::MalformedTree("leaf labels must be positive".into()));
    }
    let (t, _, sign) = canon(tree);
    Ok((TreeTensor(t), sign))
}

/// Canonicalizes a raw tree into a one-term vector carrying the sign.
pub fn tensor_vector(tree: &Tree) -> Result<SpeciesVector<TreeTensor>> {
    let (t, sign) = canonicalize(tree)?;
    Ok(SpeciesVector::single(t.labels(), t, Rational::from(sign)))
}

/// All canonical tree tensors of `signature` on `labels`.
pub fn enumerate_basis(signature: &Signature, labels: &LabelSet) -> Result<Vec<TreeTensor>> {
    if labels.is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    Ok(enumerate_trees(signature, labels.as_slice()).into_iter().map(TreeTensor).collect())
}

fn enumerate_trees(signature: &Signature, labels: &[u32]) -> Vec<Tree> {
    if labels.len() == 1 {
        return vec![Tree::Leaf(labels[0])];
    }
    let n = labels.len();
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) - 1 {
        let (left, right): (Vec<u32>, Vec<u32>) = {
            let (l, r): (Vec<_>, Vec<_>) = labels.iter().enumerate().partition(|(i, _)| mask >> i & 1 == 1);
            (l.into_iter().map(|(_, &x)| x).collect(), r.into_iter().map(|(_, &x)| x).collect())
        };
        let canonical_order = mask & 1 == 1;
        let lefts = enumerate_trees(signature, &left);
        let rights = enumerate_trees(signature, &right);
        for &g in signature.generators() {
            if g.symmetry() != Symmetry::None && !canonical_order {
                continue;
            }
            for (l, r) in lefts.iter().cartesian_product(rights.iter()) {
                out.push(Tree::node(g, l.clone(), r.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Grafts `inner` at leaf `label` of `outer`.
pub fn partial_compose(outer: &TreeTensor, label: u32, inner: &TreeTensor) -> Result<SpeciesVector<TreeTensor>> {
    let outer_labels = outer.labels();
    if !outer_labels.contains(label) {
        return Err(Error::NotALeaf(label));
    }
    let rest = outer_labels.without(label);
    if let Some(clash) = inner.labels().iter().find(|&x| rest.contains(x)) {
        return Err(Error::LabelClash(clash));
    }
    let subs = HashMap::from([(label, inner.0.clone())]);
    tensor_vector(&outer.0.substitute(&subs))
}

/// Bilinear extension of [`partial_compose`].
pub fn partial_compose_vectors(
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

/// Simultaneous grafting `γ(outer; parts…)`; the k-th part goes to the k-th
/// smallest leaf label of `outer`.
pub fn full_compose(outer: &TreeTensor, parts: &[SpeciesVector<TreeTensor>]) -> Result<SpeciesVector<TreeTensor>> {
    let slots = outer.labels();
    if slots.len() != parts.len() {
        return Err(Error::ArityMismatch { expected: slots.len(), found: parts.len() });
    }
    let mut component = LabelSet::default();
    for part in parts {
        if let Some(clash) = part.component().iter().find(|&x| component.contains(x)) {
            return Err(Error::LabelClash(clash));
        }
        component = component.union(part.component());
    }
    let mut out = SpeciesVector::zero(component.clone());
    let term_lists: Vec<Vec<(&TreeTensor, &Rational)>> = parts.iter().map(|p| p.terms().collect()).collect();
    for choice in term_lists.iter().map(|terms| terms.iter()).multi_cartesian_product() {
        let mut coeff = Rational::one();
        let mut subs = HashMap::new();
        for (slot, (t, c)) in slots.iter().zip(choice) {
            coeff = &coeff * *c;
            subs.insert(slot, t.0.clone());
        }
        let (t, sign) = canonicalize(&outer.0.substitute(&subs))?;
        out.add_term(t, &coeff * &Rational::from(sign));
    }
    Ok(out)
}

/// Relabels every term of `v` through the injection `f`.
pub fn relabel_vector(v: &SpeciesVector<TreeTensor>, f: &impl Fn(u32) -> u32) -> SpeciesVector<TreeTensor> {
    let component: LabelSet = v.component().iter().map(f).collect();
    let mut out = SpeciesVector::zero(component);
    for (t, c) in v.terms() {
        let (image, sign) = t.relabel(f);
        out.add_term(image, c * &Rational::from(sign));
    }
    out
}

/// Right action `v.σ`: leaf `x` becomes `σ(x)`.
pub fn act(sigma: &Permutation, v: &SpeciesVector<TreeTensor>) -> Result<SpeciesVector<TreeTensor>> {
    if !sigma.moves_only(v.component()) {
        return Err(Error::BadPermutation(format!("{sigma} on {}", v.component())));
    }
    v.map_linear(v.component().clone(), |t| {
        let (image, sign) = t.relabel(&|x| sigma.apply(x));
        Ok(SpeciesVector::single(v.component().clone(), image, Rational::from(sign)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        parse_tree(s, None).unwrap()
    }

    fn canonical(s: &str) -> (String, i32) {
        let (c, sign) = canonicalize(&t(s)).unwrap();
        (c.to_string(), sign)
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical("[2,1]"), ("[1,2]".into(), -1));
        assert_eq!(canonical("{2,1}"), ("{1,2}".into(), 1));
        assert_eq!(canonical("(2<1)"), ("(2<1)".into(), 1));
        // [2•1, 3] = [1•2, 3] = -[3, 1•2]
        assert_eq!(canonical("[{2,1},3]"), ("[{1,2},3]".into(), 1));
        assert_eq!(canonical("[3,{1,2}]"), ("[{1,2},3]".into(), -1));
        let (c, sign) = canonicalize(&t("[[3,1],{2,4}]")).unwrap();
        assert_eq!((c.to_string(), sign), ("[[1,3],{2,4}]".to_string(), -1));
        assert_eq!(canonicalize(c.tree()).unwrap(), (c, 1));
        assert!(matches!(canonicalize(&t("[1,1]")), Err(Error::MalformedTree(_))));
    }

    #[test]
    fn basis_counts() {
        let count = |sig: Signature, n| enumerate_basis(&sig, &LabelSet::range(n)).unwrap().len();
        assert_eq!(count(Signature::pre_lie(), 3), 12);
        assert_eq!(count(Signature::bracket_bullet(), 3), 12);
        assert_eq!(count(Signature::lie(), 2), 1);
        assert_eq!(enumerate_basis(&Signature::lie(), &LabelSet::range(2)).unwrap()[0].to_string(), "[1,2]");
        assert!(matches!(enumerate_basis(&Signature::lie(), &LabelSet::default()), Err(Error::EmptyLabelSet)));
    }

    #[test]
    fn basis_counts_match_closed_formulas() {
        let catalan = |m: u64| (1..=m).fold(1u64, |c, k| c * 2 * (2 * k - 1) / (k + 1));
        let fact = |m: u64| (1..=m).product::<u64>();
        let double_fact = |m: u64| (1..=m).filter(|k| k % 2 == 1).product::<u64>();
        for n in 1..=6u64 {
            let labels = LabelSet::range(n as usize);
            let pre = enumerate_basis(&Signature::pre_lie(), &labels).unwrap();
            assert_eq!(pre.len() as u64, catalan(n - 1) * fact(n));
            let two = enumerate_basis(&Signature::bracket_bullet(), &labels).unwrap();
            let expected = if n == 1 { 1 } else { double_fact(2 * n - 3) << (n - 1) };
            assert_eq!(two.len() as u64, expected);
            for b in pre.iter().chain(&two) {
                assert_eq!(canonicalize(b.tree()).unwrap(), (b.clone(), 1));
            }
            let distinct: BTreeSet<_> = two.iter().collect();
            assert_eq!(distinct.len(), two.len());
        }
    }

    #[test]
    fn partial_compositions() {
        let c = |s: &str| canonicalize(&t(s)).unwrap().0;
        let v = partial_compose(&c("[1,2]"), 2, &c("[3,4]")).unwrap();
        assert_eq!(v.to_string(), "[1,[3,4]]");
        // [{a,b},2] reorders to -[2,{a,b}]
        let v = partial_compose(&c("[1,2]"), 1, &c("{3,4}")).unwrap();
        assert_eq!(v.to_string(), "-[2,{3,4}]");
        let v = partial_compose(&c("[2,5]"), 2, &c("{1,4}")).unwrap();
        assert_eq!(v.to_string(), "[{1,4},5]");
        let v = partial_compose(&c("[1,5]"), 1, &c("{2,4}")).unwrap();
        assert_eq!(v.to_string(), "[{2,4},5]");
        assert_eq!(partial_compose(&TreeTensor::unit(1), 1, &c("[2,3]")).unwrap(), c("[2,3]").to_vector());
        assert!(matches!(partial_compose(&c("[1,2]"), 3, &c("[4,5]")), Err(Error::NotALeaf(3))));
        assert!(matches!(partial_compose(&c("[1,2]"), 1, &c("[2,5]")), Err(Error::LabelClash(2))));
    }

    #[test]
    fn full_composition_agrees_with_iterated_grafting() {
        let c = |s: &str| canonicalize(&t(s)).unwrap().0;
        let outer = c("[1,2]");
        let v = full_compose(&outer, &[c("{1,2}").to_vector(), TreeTensor::unit(3).to_vector()]).unwrap();
        assert_eq!(v.to_string(), "[{1,2},3]");
        assert!(matches!(
            full_compose(&outer, &[TreeTensor::unit(3).to_vector()]),
            Err(Error::ArityMismatch { .. })
        ));
        let unit = TreeTensor::unit(7);
        assert_eq!(full_compose(&unit, &[c("[1,3]").to_vector()]).unwrap(), c("[1,3]").to_vector());
        // [[1,2],3] with slots 1,2,3 replaced by {4,6}, [2,5], 1 — by hand and by iteration.
        let outer = c("[[1,2],3]");
        let parts = [c("{4,6}").to_vector(), c("[2,5]").to_vector(), TreeTensor::unit(1).to_vector()];
        let simultaneous = full_compose(&outer, &parts).unwrap();
        let relabelled = c("[[10,20],30]");
        let step1 = partial_compose_vectors(&relabelled.to_vector(), 10, &parts[0]).unwrap();
        let step2 = partial_compose_vectors(&step1, 20, &parts[1]).unwrap();
        let step3 = partial_compose_vectors(&step2, 30, &parts[2]).unwrap();
        assert_eq!(simultaneous, step3);
        assert_eq!(simultaneous.to_string(), "[1,[[2,5],{4,6}]]");
    }

    #[test]
    fn action_signs() {
        let v = canonicalize(&t("[1,2]")).unwrap().0.to_vector();
        assert_eq!(act(&Permutation::identity(), &v).unwrap(), v);
        assert_eq!(act(&Permutation::transposition(1, 2), &v).unwrap(), v.scaled(&Rational::from(-1)));
        assert!(act(&Permutation::transposition(1, 9), &v).is_err());
    }
}
