//! Operadic ideals generated by arity-three relators and the quotient operads
//! they present.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::free_operad::{
    act, canonicalize, enumerate_basis, full_compose, parse_combination, partial_compose_vectors, relabel_vector,
    tensor_vector, Generator, Signature, Symmetry, Tree, TreeTensor,
};
use crate::linalg::{LabelSet, SpeciesVector, Span};
use crate::perm::Permutation;

/// Right-symmetric associator identity of `◁`.
pub const PRE_LIE_RELATOR: &str = "((1<2)<3) - (1<(2<3)) - ((1<3)<2) + (1<(3<2))";

pub const JACOBI_RELATOR: &str = "[[1,2],3] + [[2,3],1] + [[3,1],2]";

/// The identity relating `[-,-]` and `-•-` inside the pre-Lie operad.
pub const SYMMETRIZED_RELATOR: &str =
    "{{1,2},3} - {1,{2,3}} - {1,[2,3]} - {[1,2],3} - 2{[1,3],2} + [1,{2,3}] + [{1,2},3] + [[1,3],2]";

/// `[a₁,a₂]•a₃ − a₁•[a₂,a₃]` minus its expression through heavier tensors.
pub const GRADED_EXCHANGE_RELATION: &str = "{[1,2],3} - {1,[2,3]} \
    + 1/3 {{1,2},3} + 1/3 {1,{2,3}} - 2/3 {{1,3},2} + 1/3 [{1,2},3] \
    - 1/3 [1,{2,3}] - 2/3 [{1,3},2] - 1/3 [1,[2,3]] - 1/3 [[1,2],3]";

/// A nonzero element of an arity-three free operad component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator(SpeciesVector<TreeTensor>);

impl Relator {
    pub fn new(element: SpeciesVector<TreeTensor>) -> Result<Self> {
        if element.is_zero() {
            return Err(Error::MalformedTree("a relator must be nonzero".into()));
        }
        if element.component().len() != 3 {
            return Err(Error::ArityMismatch { expected: 3, found: element.component().len() });
        }
        Ok(Relator(element))
    }

    pub fn parse(text: &str, signature: &Signature) -> Result<Self> {
        Self::new(parse_combination(text, Some(signature))?)
    }

    pub fn element(&self) -> &SpeciesVector<TreeTensor> {
        &self.0
    }
}

/// A free operad on binary generators together with arity-three relators.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: &'static str,
    pub signature: Signature,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn pre_lie() -> Self {
        let signature = Signature::pre_lie();
        let relators = vec![Relator::parse(PRE_LIE_RELATOR, &signature).expect("well-formed relator")];
        Presentation { name: "pre-Lie", signature, relators }
    }

    pub fn bracket_bullet() -> Self {
        let signature = Signature::bracket_bullet();
        let relators = [JACOBI_RELATOR, SYMMETRIZED_RELATOR]
            .iter()
            .map(|r| Relator::parse(r, &signature).expect("well-formed relator"))
            .collect();
        Presentation { name: "bracket-bullet", signature, relators }
    }

    pub fn lie() -> Self {
        let signature = Signature::lie();
        let relators = vec![Relator::parse(JACOBI_RELATOR, &signature).expect("well-formed relator")];
        Presentation { name: "Lie", signature, relators }
    }

    pub fn free_dim(&self, n: usize) -> Result<usize> {
        Ok(enumerate_basis(&self.signature, &LabelSet::range(n))?.len())
    }

    /// `I(3), I(4), …, I(n_max)` on the standard label sets.
    pub fn ideal_tower(&self, n_max: usize) -> Result<Vec<IdealComponent>> {
        if n_max < 3 {
            return Err(Error::ArityTooSmall { minimum: 3, found: n_max });
        }
        let mut tower = vec![self.base_ideal()?];
        while tower.len() + 2 < n_max {
            let next = self.extend_ideal(tower.last().expect("nonempty"))?;
            tower.push(next);
        }
        Ok(tower)
    }

    fn base_ideal(&self) -> Result<IdealComponent> {
        let labels = LabelSet::range(3);
        let mut span = Span::new(labels.clone());
        for r in &self.relators {
            for sigma in Permutation::all(&labels) {
                span.insert(&act(&sigma, r.element())?)?;
            }
        }
        Ok(IdealComponent { arity: 3, span })
    }

    /// Single-generator compositions on both sides of a basis of `I(n)`, for
    /// every choice of the new label; this set is already `S_{n+1}`-stable.
    fn extend_ideal(&self, prev: &IdealComponent) -> Result<IdealComponent> {
        let n = prev.arity;
        let labels = LabelSet::range(n + 1);
        let rows = prev.span.rows();
        let candidates: Vec<SpeciesVector<TreeTensor>> = labels
            .iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&x| -> Result<Vec<_>> {
                let old = LabelSet::range(n);
                let target = labels.without(x);
                let f = old.transport_to(&target);
                let mut out = Vec::new();
                for row in &rows {
                    let g = relabel_vector(row, &f);
                    for &e in self.signature.generators() {
                        for i in target.iter() {
                            for (a, b) in [(i, x), (x, i)] {
                                if e.symmetry() != Symmetry::None && a > b {
                                    continue;
                                }
                                let inner = tensor_vector(&Tree::node(e, Tree::Leaf(a), Tree::Leaf(b)))?;
                                out.push(partial_compose_vectors(&g, i, &inner)?);
                            }
                        }
                        let outer = generator_tensor(e);
                        let unit = TreeTensor::unit(x).to_vector();
                        out.push(full_compose(&outer, &[unit.clone(), g.clone()])?);
                        if e.symmetry() == Symmetry::None {
                            out.push(full_compose(&outer, &[g.clone(), unit])?);
                        }
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut span = Span::new(labels);
        for v in &candidates {
            span.insert(v)?;
        }
        Ok(IdealComponent { arity: n + 1, span })
    }

    pub fn ideal_component(&self, n: usize) -> Result<IdealComponent> {
        Ok(self.ideal_tower(n)?.pop().expect("nonempty tower"))
    }

    /// Dimension of the quotient operad in arity `n`.
    pub fn quotient_dim(&self, n: usize) -> Result<usize> {
        let free = self.free_dim(n)?;
        if n <= 2 {
            return Ok(free);
        }
        Ok(free - self.ideal_component(n)?.dim())
    }

    /// Quotient dimensions for arities `1..=n_max`, sharing one ideal tower.
    pub fn quotient_dims(&self, n_max: usize) -> Result<Vec<usize>> {
        let mut dims: Vec<usize> = (1..=n_max.min(2)).map(|n| self.free_dim(n)).collect::<Result<_>>()?;
        if n_max >= 3 {
            for ideal in self.ideal_tower(n_max)? {
                dims.push(self.free_dim(ideal.arity)? - ideal.dim());
            }
        }
        Ok(dims)
    }
}

fn generator_tensor(e: Generator) -> TreeTensor {
    canonicalize(&Tree::node(e, Tree::Leaf(1), Tree::Leaf(2))).expect("distinct leaves").0
}

/// The arity-`n` component of an operadic ideal, as a subspace of the free
/// operad component on `{1, …, n}`.
#[derive(Clone, Debug)]
pub struct IdealComponent {
    pub arity: usize,
    pub span: Span<TreeTensor>,
}

impl IdealComponent {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Canonical coset representative: the residue after reduction.
    pub fn reduce(&self, v: &SpeciesVector<TreeTensor>) -> Result<SpeciesVector<TreeTensor>> {
        self.span.reduce(v)
    }

    pub fn equal_in_quotient(&self, a: &SpeciesVector<TreeTensor>, b: &SpeciesVector<TreeTensor>) -> Result<bool> {
        Ok(self.reduce(a)? == self.reduce(b)?)
    }

    /// Checks stability under every transposition `(i i+1)`.
    pub fn is_symmetric_stable(&self) -> Result<bool> {
        for i in 1..self.arity as u32 {
            let sigma = Permutation::transposition(i, i + 1);
            let stable = self.span.is_stable_under(|t| act(&sigma, &t.to_vector()))?;
            if !stable {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn reduce_mod_ideal(v: &SpeciesVector<TreeTensor>, ideal: &IdealComponent) -> Result<SpeciesVector<TreeTensor>> {
    ideal.reduce(v)
}

fn orbit_span(relators: &[&Relator], labels: &LabelSet) -> Result<Span<TreeTensor>> {
    let mut span = Span::new(labels.clone());
    for r in relators {
        if r.element().component() != labels {
            return Err(Error::MixedComponents {
                expected: labels.to_string(),
                found: r.element().component().to_string(),
            });
        }
        for sigma in Permutation::all(labels) {
            span.insert(&act(&sigma, r.element())?)?;
        }
    }
    Ok(span)
}

/// Dimension of the `S₃`-module generated by a relator inside the free operad.
pub fn orbit_rank(r: &Relator) -> Result<usize> {
    Ok(orbit_span(&[r], r.element().component())?.dim())
}

/// Dimension of the image of the `S₃`-module generated by `r` in the
/// quotient of the free component by the `S₃`-modules generated by `base`.
pub fn orbit_rank_modulo(r: &Relator, base: &[Relator]) -> Result<usize> {
    let labels = r.element().component();
    let base: Vec<&Relator> = base.iter().collect();
    let below = orbit_span(&base, labels)?.dim();
    let mut all = base;
    all.push(r);
    Ok(orbit_span(&all, labels)?.dim() - below)
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
