//! Spans inside the rooted-tree model: Lie elements, the subspecies `Y`, the
//! suboperad it generates, the left Lie-module generated by that, and the
//! weight filtration.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::free_operad::{canonicalize, enumerate_basis, partial_compose, weight, Generator, Signature, Tree, TreeTensor};
use crate::lie::lie_words;
use crate::linalg::{Echelon, LabelSet, ModularEchelon, SpeciesVector, Span, DEFAULT_PRIME};
use crate::perm::Permutation;
use crate::pl::eval::{bracket, bullet, eval, eval_word, vertex, PlVector};
use crate::pl::rooted::{enumerate_rooted_trees, graft_compose_vectors, relabel_trees, RootedTree};
use crate::rational::Rational;

/// Evaluations of the left-normed Lie words, checked to be independent.
pub fn lie_basis(labels: &LabelSet) -> Result<Vec<PlVector>> {
    let vectors: Vec<PlVector> = lie_words(labels)?.iter().map(eval_word).collect::<Result<_>>()?;
    let span = Span::from_vectors(labels.clone(), &vectors)?;
    if span.dim() != vectors.len() {
        return Err(Error::Inconsistent(format!(
            "Lie words on {labels} evaluate to rank {} < {}",
            span.dim(),
            vectors.len()
        )));
    }
    Ok(vectors)
}

/// Every unordered split of `labels` into two nonempty blocks, the block
/// holding the least label first.
pub fn two_block_splits(labels: &LabelSet) -> Vec<(LabelSet, LabelSet)> {
    let Some(first) = labels.min() else { return Vec::new() };
    labels
        .subsets()
        .filter(|a| a.contains(first) && a.len() < labels.len())
        .map(|a| {
            let b = labels.difference(&a);
            (a, b)
        })
        .collect()
}

/// The elements `ℓ ◁ ℓ′ + ℓ′ ◁ ℓ` over all splits and Lie-basis pairs.
pub fn y_generators(labels: &LabelSet) -> Result<Vec<PlVector>> {
    if labels.len() < 2 {
        return Err(Error::ArityTooSmall { minimum: 2, found: labels.len() });
    }
    let mut out = Vec::new();
    for (a, b) in two_block_splits(labels) {
        let (la, lb) = (lie_basis(&a)?, lie_basis(&b)?);
        for x in &la {
            for y in &lb {
                out.push(bullet(x, y)?);
            }
        }
    }
    Ok(out)
}

pub fn y_span(labels: &LabelSet) -> Result<Span<RootedTree>> {
    Span::from_vectors(labels.clone(), &y_generators(labels)?)
}

/// Right action `σ` on rooted trees: vertex `x` becomes `σ(x)`, no signs.
pub fn act_trees(sigma: &Permutation, v: &PlVector) -> PlVector {
    relabel_trees(v, &|x| sigma.apply(x))
}

/// Character of `σ` on `Y(labels)`.
pub fn y_character(span: &Span<RootedTree>, sigma: &Permutation) -> Result<Rational> {
    span.character(|t| Ok(act_trees(sigma, &t.to_vector())))
}

/// Closures above this arity rank their spanning sets modulo a prime.
pub const EXACT_RANK_MAX_ARITY: usize = 5;

/// How the rank of a closure level was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    Rational,
    /// Rank over `F_p`: a lower bound for the rational rank.
    Modular(u64),
}

/// One arity of a span closure, on the labels `{1, …, arity}`.
#[derive(Clone, Debug)]
pub struct ClosureLevel {
    pub arity: usize,
    /// Independent generators, kept in their original sparse form.
    pub basis: Vec<PlVector>,
    /// Number of spanning vectors produced before elimination.
    pub generated: usize,
    /// `dim PL(arity) = arityᵃʳⁱᵗʸ⁻¹`.
    pub ambient_dim: usize,
    pub method: RankMethod,
}

impl ClosureLevel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `dim` is the rational dimension: always for rational ranks,
    /// and for modular ones when the lower bound meets an upper bound.
    pub fn is_exact(&self) -> bool {
        self.method == RankMethod::Rational || self.dim() == self.generated || self.dim() == self.ambient_dim
    }

    /// The basis transported to `labels` by the order-preserving bijection.
    pub fn basis_on(&self, labels: &LabelSet) -> Vec<PlVector> {
        if labels.len() == 1 {
            return vec![vertex(labels.min().expect("one label"))];
        }
        let own = LabelSet::range(self.arity);
        let map = own.transport_to(labels);
        self.basis.iter().map(|v| relabel_trees(v, &map)).collect()
    }
}

fn rank_method(n: usize) -> RankMethod {
    if n <= EXACT_RANK_MAX_ARITY {
        RankMethod::Rational
    } else {
        RankMethod::Modular(DEFAULT_PRIME)
    }
}

/// A maximal independent subset, in order, stopping once it spans `PL`.
fn independent_subset(labels: &LabelSet, vectors: Vec<PlVector>, method: RankMethod) -> Result<Vec<PlVector>> {
    let trees = enumerate_rooted_trees(labels)?;
    let ambient = trees.len();
    let mut basis = Vec::new();
    match method {
        RankMethod::Rational => {
            let mut echelon = Echelon::new(labels.clone(), trees);
            for v in vectors {
                if echelon.insert(&v)? {
                    basis.push(v);
                    if basis.len() == ambient {
                        break;
                    }
                }
            }
        }
        RankMethod::Modular(p) => {
            let mut echelon = ModularEchelon::with_prime(labels.clone(), trees, p);
            for v in vectors {
                if echelon.insert(&v)? {
                    basis.push(v);
                    if basis.len() == ambient {
                        break;
                    }
                }
            }
        }
    }
    Ok(basis)
}

fn closure_level(n: usize, vectors: Vec<PlVector>) -> Result<ClosureLevel> {
    let labels = LabelSet::range(n);
    let generated = vectors.len();
    let method = rank_method(n);
    let basis = independent_subset(&labels, vectors, method)?;
    Ok(ClosureLevel { arity: n, basis, generated, ambient_dim: n.pow(n as u32 - 1), method })
}

fn level(levels: &[ClosureLevel], arity: usize) -> &ClosureLevel {
    levels.iter().find(|l| l.arity == arity).expect("lower arities are computed first")
}

/// Every way of picking one basis vector per block.
fn block_choices(levels: &[ClosureLevel], blocks: &[LabelSet]) -> Vec<Vec<PlVector>> {
    let per_block: Vec<Vec<PlVector>> = blocks
        .iter()
        .map(|b| if b.len() == 1 { vec![vertex(b.min().expect("nonempty"))] } else { level(levels, b.len()).basis_on(b) })
        .collect();
    let mut out: Vec<Vec<PlVector>> = vec![Vec::new()];
    for options in per_block {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// `γ(y; p₁, …, pₖ)` with `y` on `{1, …, k}` and `pⱼ` on the `j`-th block.
fn compose_into_blocks(y: &PlVector, blocks: &[LabelSet], parts: &[PlVector]) -> Result<PlVector> {
    let mins: Vec<u32> = blocks.iter().map(|b| b.min().expect("nonempty")).collect();
    let mut acc = relabel_trees(y, &|j| mins[j as usize - 1]);
    for (m, part) in mins.iter().zip(parts) {
        if part.len() == 1 && part.component().len() == 1 {
            continue;
        }
        acc = graft_compose_vectors(&acc, *m, part)?;
    }
    Ok(acc)
}

/// Spanning vectors of `P(n)`: trees of `Y`-operations, grouped by the root
/// vertex. The root uses a basis of `Y(k)` on the blocks of a partition into
/// `k ≥ 2` blocks; each block carries a basis vector of `P` (or a vertex).
fn suboperad_generators(levels: &[ClosureLevel], y_bases: &[(usize, Vec<PlVector>)], n: usize) -> Result<Vec<PlVector>> {
    let labels = LabelSet::range(n);
    let partitions: Vec<Vec<LabelSet>> = labels.set_partitions().into_iter().filter(|p| p.len() >= 2).collect();
    let chunks: Vec<Vec<PlVector>> = partitions
        .par_iter()
        .map(|blocks| {
            let y_basis = &y_bases.iter().find(|(k, _)| *k == blocks.len()).expect("Y basis computed").1;
            let mut out = Vec::new();
            for parts in block_choices(levels, blocks) {
                for y in y_basis {
                    out.push(compose_into_blocks(y, blocks, &parts)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// The suboperad `P` generated by `Y`, arities `2..=n_max`.
///
/// A suboperad generated by a species is spanned by the full compositions
/// along trees whose vertices carry generators, so the spanning set below is
/// exactly the closure of `Y` under partial compositions and relabelling.
pub fn suboperad_closure(n_max: usize) -> Result<Vec<ClosureLevel>> {
    if n_max < 2 {
        return Err(Error::ArityTooSmall { minimum: 2, found: n_max });
    }
    let mut y_bases = Vec::new();
    for k in 2..=n_max {
        let labels = LabelSet::range(k);
        y_bases.push((k, independent_subset(&labels, y_generators(&labels)?, rank_method(k))?));
    }
    let mut levels: Vec<ClosureLevel> = Vec::new();
    for n in 2..=n_max {
        let vectors = suboperad_generators(&levels, &y_bases, n)?;
        levels.push(closure_level(n, vectors)?);
    }
    Ok(levels)
}

/// `[[…[x₁, x_{σ(2)}], …], x_{σ(k)}]` evaluated on vectors.
fn bracket_word(vectors: &[PlVector], order: &[u32]) -> Result<PlVector> {
    let mut acc = vectors[order[0] as usize - 1].clone();
    for &j in &order[1..] {
        acc = bracket(&acc, &vectors[j as usize - 1])?;
    }
    Ok(acc)
}

/// The left Lie-module generated by `P`, arities `1..=n_max`.
///
/// It is spanned by left-normed brackets of elements of `P` (or vertices)
/// living on the blocks of a set partition, with the block holding the least
/// label first; by antisymmetry and Jacobi these span every iterated bracket.
pub fn lie_module_closure(p: &[ClosureLevel], n_max: usize) -> Result<Vec<ClosureLevel>> {
    let mut out =
        vec![ClosureLevel { arity: 1, basis: vec![vertex(1)], generated: 1, ambient_dim: 1, method: RankMethod::Rational }];
    for n in 2..=n_max {
        let labels = LabelSet::range(n);
        let chunks: Vec<Vec<PlVector>> = labels
            .set_partitions()
            .par_iter()
            .map(|blocks| {
                let k = blocks.len();
                if k == 1 {
                    return Ok(level(p, n).basis.clone());
                }
                let words = lie_words(&LabelSet::range(k))?;
                let mut vectors = Vec::new();
                for parts in block_choices(p, blocks) {
                    for w in &words {
                        vectors.push(bracket_word(&parts, w.letters())?);
                    }
                }
                Ok(vectors)
            })
            .collect::<Result<_>>()?;
        out.push(closure_level(n, chunks.into_iter().flatten().collect())?);
    }
    Ok(out)
}

/// `F^ℓ PL(n)`: the span of evaluations of two-generator tensors of weight ≥ ℓ.
#[derive(Clone, Debug)]
pub struct FiltrationLevel {
    pub arity: usize,
    pub level: usize,
    pub span: Span<RootedTree>,
}

impl FiltrationLevel {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn contains(&self, v: &PlVector) -> Result<bool> {
        self.span.contains(v)
    }
}

/// Weighted evaluations of the two-generator basis on `{1, …, n}`.
pub fn weighted_images(n: usize) -> Result<Vec<(usize, TreeTensor, PlVector)>> {
    let basis = enumerate_basis(&Signature::bracket_bullet(), &LabelSet::range(n))?;
    basis
        .into_par_iter()
        .map(|t| Ok((weight(&t)?, t.clone(), eval(&t.to_vector())?)))
        .collect()
}

pub fn filtration_span(n: usize, level: usize) -> Result<FiltrationLevel> {
    if n == 0 {
        return Err(Error::EmptyLabelSet);
    }
    let images = weighted_images(n)?;
    filtration_from_images(n, level, &images)
}

pub fn filtration_from_images(
    n: usize,
    level: usize,
    images: &[(usize, TreeTensor, PlVector)],
) -> Result<FiltrationLevel> {
    let span = Span::from_vectors(LabelSet::range(n), images.iter().filter(|(w, _, _)| *w >= level).map(|(_, _, v)| v))?;
    Ok(FiltrationLevel { arity: n, level, span })
}

/// Compatibility of the weight filtration with brackets on arity `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationCompatibility {
    pub arity: usize,
    /// Pairs `(α, β)` of basis tensors on complementary blocks.
    pub bracket_pairs: usize,
    /// `weight([α, β]) = weight(α) + weight(β)` failures.
    pub bracket_weight_failures: usize,
    /// `eval([α, β]) ∉ F^{weight(α)+weight(β)}` failures.
    pub bracket_filtration_failures: usize,
    /// Compositions `α ∘ᵢ [i, n]` with `α` a basis tensor on `{1, …, n−1}`.
    pub compositions: usize,
    /// `weight(α ∘ᵢ [i, n]) < weight(α)` failures.
    pub composition_weight_failures: usize,
    /// `eval(α ∘ᵢ [i, n]) ∉ F^{weight(α)}` failures.
    pub composition_filtration_failures: usize,
}

impl FiltrationCompatibility {
    pub fn holds(&self) -> bool {
        self.bracket_weight_failures == 0
            && self.bracket_filtration_failures == 0
            && self.composition_weight_failures == 0
            && self.composition_filtration_failures == 0
    }
}

/// Scans every basis tensor of the two-generator free operad that produces
/// an arity-`n` bracket or right composition with a bracket.
pub fn filtration_compatibility(n: usize) -> Result<FiltrationCompatibility> {
    if n < 2 {
        return Err(Error::ArityTooSmall { minimum: 2, found: n });
    }
    let signature = Signature::bracket_bullet();
    let images = weighted_images(n)?;
    let top = images.iter().map(|(w, _, _)| *w).max().unwrap_or(0);
    let levels: Vec<FiltrationLevel> =
        (0..=top + 1).map(|l| filtration_from_images(n, l, &images)).collect::<Result<_>>()?;
    let in_level = |v: &PlVector, l: usize| -> Result<bool> {
        match levels.get(l) {
            Some(f) => f.contains(v),
            None => Ok(v.is_zero()),
        }
    };
    let mut report = FiltrationCompatibility {
        arity: n,
        bracket_pairs: 0,
        bracket_weight_failures: 0,
        bracket_filtration_failures: 0,
        compositions: 0,
        composition_weight_failures: 0,
        composition_filtration_failures: 0,
    };
    for (a, b) in two_block_splits(&LabelSet::range(n)) {
        let (left, right) = (enumerate_basis(&signature, &a)?, enumerate_basis(&signature, &b)?);
        for x in &left {
            let wx = weight(x)?;
            for y in &right {
                let expected = wx + weight(y)?;
                let (t, _) = canonicalize(&Tree::node(Generator::Bracket, x.tree().clone(), y.tree().clone()))?;
                report.bracket_pairs += 1;
                if weight(&t)? != expected {
                    report.bracket_weight_failures += 1;
                }
                if !in_level(&eval(&t.to_vector())?, expected)? {
                    report.bracket_filtration_failures += 1;
                }
            }
        }
    }
    let last = n as u32;
    for alpha in enumerate_basis(&signature, &LabelSet::range(n - 1))? {
        let w = weight(&alpha)?;
        for i in alpha.labels().iter() {
            let (inner, _) = canonicalize(&Tree::node(Generator::Bracket, Tree::Leaf(i), Tree::Leaf(last)))?;
            let composed = partial_compose(&alpha, i, &inner)?;
            report.compositions += 1;
            if composed.keys().map(weight).collect::<Result<Vec<_>>>()?.into_iter().any(|v| v < w) {
                report.composition_weight_failures += 1;
            }
            if !in_level(&eval(&composed)?, w)? {
                report.composition_filtration_failures += 1;
            }
        }
    }
    Ok(report)
}

/// Outcome of the arity-three associated-graded check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRelation {
    pub difference_in_f3: bool,
    pub left_in_f3: bool,
    pub left_in_f2: bool,
}

impl GradedRelation {
    pub fn holds(&self) -> bool {
        self.difference_in_f3 && !self.left_in_f3 && self.left_in_f2
    }
}

/// `[a₁,a₂]•a₃ = a₁•[a₂,a₃]` modulo `F³`, while neither side lies in `F³`.
pub fn gr_relation_check() -> Result<GradedRelation> {
    let images = weighted_images(3)?;
    let f2 = filtration_from_images(3, 2, &images)?;
    let f3 = filtration_from_images(3, 3, &images)?;
    let left = eval(&crate::free_operad::parse_combination("{[1,2],3}", None)?)?;
    let right = eval(&crate::free_operad::parse_combination("{1,[2,3]}", None)?)?;
    Ok(GradedRelation {
        difference_in_f3: f3.contains(&left.minus(&right)?)?,
        left_in_f3: f3.contains(&left)?,
        left_in_f2: f2.contains(&left)?,
    })
}

/// The image of `Y(n)` in `F²PL(n) / F³PL(n)`, with its `S_n`-character.
#[derive(Clone, Debug)]
pub struct GradedY {
    pub arity: usize,
    /// `Y + F³` and `F³` inside `PL(n)`.
    pub sum: Span<RootedTree>,
    pub f3: Span<RootedTree>,
}

impl GradedY {
    pub fn new(n: usize) -> Result<Self> {
        let labels = LabelSet::range(n);
        let f3 = filtration_span(n, 3)?.span;
        let mut sum = f3.clone();
        for v in y_generators(&labels)? {
            sum.insert(&v)?;
        }
        Ok(GradedY { arity: n, sum, f3 })
    }

    pub fn dim(&self) -> usize {
        self.sum.dim() - self.f3.dim()
    }

    pub fn character(&self, sigma: &Permutation) -> Result<Rational> {
        let act = |t: &RootedTree| Ok(act_trees(sigma, &t.to_vector()));
        Ok(&self.sum.character(act)? - &self.f3.character(act)?)
    }
}

/// Convenience: a vector on `{1, …, n}` from trees in nested form.
pub fn pl_vector(n: usize, terms: &[(&str, i64)]) -> Result<PlVector> {
    let mut v = SpeciesVector::zero(LabelSet::range(n));
    for (s, c) in terms {
        v.add_term(RootedTree::parse(s)?, Rational::from(*c));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_basis_ranks() {
        assert_eq!(lie_basis(&LabelSet::range(2)).unwrap(), vec![pl_vector(2, &[("1(2)", 1), ("2(1)", -1)]).unwrap()]);
        assert_eq!(lie_basis(&LabelSet::range(3)).unwrap().len(), 2);
        assert_eq!(lie_basis(&LabelSet::range(5)).unwrap().len(), 24);
    }

    /// Every `ℓ • ℓ′` is independent: the dimension is the number of
    /// generators, `Σ (|A|−1)!(|B|−1)!` over splits, i.e. `|s(n, 2)|`.
    #[test]
    fn y_dimensions() {
        let dims: Vec<usize> = (2..=5).map(|n| y_span(&LabelSet::range(n)).unwrap().dim()).collect();
        assert_eq!(dims, vec![1, 3, 11, 50]);
        for n in 2..=5 {
            assert_eq!(y_generators(&LabelSet::range(n)).unwrap().len(), dims[n - 2]);
        }
        assert!(y_generators(&LabelSet::range(1)).is_err());
    }

    #[test]
    fn y_is_symmetric_group_stable() {
        let labels = LabelSet::range(4);
        let span = y_span(&labels).unwrap();
        for sigma in Permutation::all(&labels) {
            assert!(span.is_stable_under(|t| Ok(act_trees(&sigma, &t.to_vector()))).unwrap());
        }
        // The single class in arity three is the sign representation.
        let y3 = y_span(&LabelSet::range(3)).unwrap();
        assert_eq!(y_character(&y3, &Permutation::transposition(1, 2)).unwrap(), Rational::from(-1));
    }

    #[test]
    fn small_closures() {
        let p = suboperad_closure(4).unwrap();
        assert_eq!(p.iter().map(ClosureLevel::dim).collect::<Vec<_>>(), vec![1, 6, 46]);
        // Spanning counts equal dim T(Y) while P is still free.
        assert_eq!(p.iter().map(|l| l.generated).collect::<Vec<_>>(), vec![1, 6, 56]);
        let l = lie_module_closure(&p, 4).unwrap();
        assert_eq!(l.iter().map(ClosureLevel::dim).collect::<Vec<_>>(), vec![1, 2, 9, 64]);
    }

    #[test]
    fn filtration_is_compatible_with_brackets() {
        let two = filtration_compatibility(2).unwrap();
        // [1,2] from two vertices; [1,2] grafted into the single vertex.
        assert_eq!((two.bracket_pairs, two.compositions), (1, 1));
        for n in 2..=4 {
            let report = filtration_compatibility(n).unwrap();
            assert!(report.holds(), "{report:?}");
        }
        let three = filtration_compatibility(3).unwrap();
        // Splits {1}|{2,3}, {1,2}|{3}, {1,3}|{2}, each with two tensors on the pair.
        assert_eq!(three.bracket_pairs, 6);
        assert_eq!(three.compositions, 4);
        assert!(filtration_compatibility(1).is_err());
    }

    /// Literal closure under partial compositions and relabelling, as an
    /// oracle for the tree-shaped spanning set.
    #[test]
    fn closure_matches_partial_composition_fixed_point() {
        let n_max = 4;
        let mut spans: Vec<Span<RootedTree>> = (0..=n_max).map(|n| Span::new(LabelSet::range(n))).collect();
        for n in 2..=n_max {
            for v in y_generators(&LabelSet::range(n)).unwrap() {
                spans[n].insert(&v).unwrap();
            }
        }
        loop {
            let before: Vec<usize> = spans.iter().map(Span::dim).collect();
            for k in 2..=n_max {
                for m in 2..=n_max + 1 - k {
                    let n = k + m - 1;
                    let outer_rows = spans[k].rows();
                    let inner_rows = spans[m].rows();
                    let labels = LabelSet::range(n);
                    for i in 1..=k as u32 {
                        for block in labels.subsets().filter(|b| b.len() == m) {
                            let rest: LabelSet = labels.difference(&block);
                            for x in &outer_rows {
                                // slot i receives the block, the other slots the remaining labels
                                let slots: Vec<u32> = (1..=k as u32).filter(|&s| s != i).collect();
                                let map = |s: u32| {
                                    if s == i {
                                        10_000
                                    } else {
                                        rest.as_slice()[slots.iter().position(|&t| t == s).unwrap()]
                                    }
                                };
                                let outer = relabel_trees(x, &map);
                                for y in &inner_rows {
                                    let own = LabelSet::range(m);
                                    let inner = relabel_trees(y, &own.transport_to(&block));
                                    let v = graft_compose_vectors(&outer, 10_000, &inner).unwrap();
                                    spans[n].insert(&v).unwrap();
                                }
                            }
                        }
                    }
                }
            }
            if spans.iter().map(Span::dim).collect::<Vec<_>>() == before {
                break;
            }
        }
        let p = suboperad_closure(n_max).unwrap();
        for l in &p {
            assert_eq!(spans[l.arity].dim(), l.dim(), "arity {}", l.arity);
            for v in &l.basis {
                assert!(spans[l.arity].contains(v).unwrap());
            }
        }
    }

    #[test]
    fn graded_y_in_small_arities() {
        let g3 = GradedY::new(3).unwrap();
        assert_eq!(g3.dim(), 1);
        assert_eq!(g3.character(&Permutation::transposition(1, 2)).unwrap(), Rational::from(-1));
        // F³PL(4) is already all of PL(4), so nothing survives in arity four.
        assert_eq!(filtration_span(4, 3).unwrap().dim(), 64);
        assert_eq!(GradedY::new(4).unwrap().dim(), 0);
    }

    #[test]
    fn filtration_in_arity_three() {
        assert_eq!(filtration_span(3, 1).unwrap().dim(), 9);
        assert_eq!(filtration_span(3, 2).unwrap().dim(), 9);
        assert_eq!(filtration_span(3, 3).unwrap().dim(), 8);
        assert_eq!(filtration_span(3, 4).unwrap().dim(), 0);
        let g = gr_relation_check().unwrap();
        assert_eq!(g, GradedRelation { difference_in_f3: true, left_in_f3: false, left_in_f2: true });
        assert!(g.holds());
    }
}
