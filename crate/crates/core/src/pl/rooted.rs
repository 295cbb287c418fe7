use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{LabelSet, SpeciesVector};
use crate::rational::Rational;

/// A rooted tree whose vertex set is a label set.
///
/// Stored as `(vertex, parent)` pairs sorted by vertex, with parent `0`
/// marking the root; children are unordered.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree(Box<[(u32, u32)]>);

impl RootedTree {
    pub fn single(label: u32) -> Self {
        RootedTree(Box::new([(label, 0)]))
    }

    /// Validates a parent map (`None` for the root).
    pub fn from_parents(parents: impl IntoIterator<Item = (u32, Option<u32>)>) -> Result<Self> {
        let mut nodes: Vec<(u32, u32)> = parents.into_iter().map(|(v, p)| (v, p.unwrap_or(0))).collect();
        nodes.sort_unstable();
        if nodes.is_empty() {
            return Err(Error::EmptyLabelSet);
        }
        if nodes.iter().any(|&(v, _)| v == 0) || nodes.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::MalformedTree("vertex labels must be distinct and positive".into()));
        }
        let tree = RootedTree(nodes.into_boxed_slice());
        if tree.0.iter().filter(|(_, p)| *p == 0).count() != 1 {
            return Err(Error::MalformedTree("a rooted tree has exactly one root".into()));
        }
        for &(v, _) in tree.0.iter() {
            let mut x = v;
            for _ in 0..=tree.0.len() {
                match tree.parent(x) {
                    Some(p) if tree.index(p).is_none() => {
                        return Err(Error::MalformedTree(format!("parent {p} is not a vertex")))
                    }
                    Some(p) => x = p,
                    None => break,
                }
            }
            if tree.parent(x).is_some() {
                return Err(Error::MalformedTree("parent map has a cycle".into()));
            }
        }
        Ok(tree)
    }

    fn index(&self, v: u32) -> Option<usize> {
        self.0.binary_search_by_key(&v, |(x, _)| *x).ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> LabelSet {
        self.0.iter().map(|(v, _)| *v).collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }

    pub fn root(&self) -> u32 {
        self.0.iter().find(|(_, p)| *p == 0).expect("a root").0
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        self.index(v).and_then(|i| (self.0[i].1 != 0).then_some(self.0[i].1))
    }

    pub fn children(&self, v: u32) -> Vec<u32> {
        self.0.iter().filter(|(_, p)| *p == v).map(|(c, _)| *c).collect()
    }

    pub fn relabel(&self, f: &impl Fn(u32) -> u32) -> RootedTree {
        let mut nodes: Vec<(u32, u32)> =
            self.0.iter().map(|&(v, p)| (f(v), if p == 0 { 0 } else { f(p) })).collect();
        nodes.sort_unstable();
        RootedTree(nodes.into_boxed_slice())
    }

    /// Hangs the root of `other` below `vertex`.
    fn graft_at(&self, vertex: u32, other: &RootedTree) -> RootedTree {
        let other_root = other.root();
        let mut nodes: Vec<(u32, u32)> = self
            .0
            .iter()
            .copied()
            .chain(other.0.iter().map(|&(v, p)| (v, if v == other_root { vertex } else { p })))
            .collect();
        nodes.sort_unstable();
        RootedTree(nodes.into_boxed_slice())
    }

    /// `self ◁ other`: the sum of all ways of grafting `other` onto a vertex of `self`.
    pub fn pre_product(&self, other: &RootedTree) -> Result<SpeciesVector<RootedTree>> {
        let (a, b) = (self.labels(), other.labels());
        if let Some(clash) = a.iter().find(|&x| b.contains(x)) {
            return Err(Error::LabelClash(clash));
        }
        Ok(SpeciesVector::from_terms(
            a.union(&b),
            self.vertices().map(|v| (self.graft_at(v, other), Rational::one())),
        ))
    }

    pub fn to_vector(&self) -> SpeciesVector<RootedTree> {
        SpeciesVector::single(self.labels(), self.clone(), Rational::one())
    }

    /// Parses the nested form `root(child,child(...))`.
    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let mut parents = Vec::new();
        fn node(chars: &[char], pos: &mut usize, parent: Option<u32>, out: &mut Vec<(u32, Option<u32>)>) -> Result<()> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let label: u32 = chars[start..*pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse { offset: start, message: "expected a vertex label".into() })?;
            out.push((label, parent));
            if chars.get(*pos) == Some(&'(') {
                *pos += 1;
                loop {
                    node(chars, pos, Some(label), out)?;
                    match chars.get(*pos) {
                        Some(',') => *pos += 1,
                        Some(')') => {
                            *pos += 1;
                            break;
                        }
                        _ => return Err(Error::Parse { offset: *pos, message: "expected `,` or `)`".into() }),
                    }
                }
            }
            Ok(())
        }
        node(&chars, &mut pos, None, &mut parents)?;
        if pos != chars.len() {
            return Err(Error::Parse { offset: pos, message: "trailing input".into() });
        }
        Self::from_parents(parents)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_node(t: &RootedTree, v: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{v}")?;
            let children = t.children(v);
            if !children.is_empty() {
                write!(f, "(")?;
                for (i, c) in children.into_iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write_node(t, c, f)?;
                }
                write!(f, ")")?;
            }
            Ok(())
        }
        write_node(self, self.root(), f)
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `n^{n-1}` rooted trees on `labels`, from Prüfer codes and a choice of root.
pub fn enumerate_rooted_trees(labels: &LabelSet) -> Result<Vec<RootedTree>> {
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptyLabelSet);
    }
    let items: Vec<u32> = labels.iter().collect();
    if n == 1 {
        return Ok(vec![RootedTree::single(items[0])]);
    }
    let mut out = Vec::with_capacity(n.pow(n as u32 - 1));
    for code in std::iter::repeat_n(0..n, n - 2).multi_cartesian_product() {
        let edges = prufer_edges(&code, n);
        for root in 0..n {
            let mut parent = vec![usize::MAX; n];
            let mut stack = vec![root];
            let mut seen = vec![false; n];
            seen[root] = true;
            while let Some(v) = stack.pop() {
                for &(a, b) in &edges {
                    let w = if a == v { b } else if b == v { a } else { continue };
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = v;
                        stack.push(w);
                    }
                }
            }
            let nodes: Vec<(u32, u32)> = (0..n)
                .map(|v| (items[v], if v == root { 0 } else { items[parent[v]] }))
                .collect();
            out.push(RootedTree(nodes.into_boxed_slice()));
        }
    }
    out.sort();
    Ok(out)
}

fn prufer_edges(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Operadic composition in the rooted-tree model: substitute `inner` for
/// vertex `label`, hang it from `label`'s former parent, and sum over all
/// ways of reattaching `label`'s former children to vertices of `inner`.
pub fn graft_compose(outer: &RootedTree, label: u32, inner: &RootedTree) -> Result<SpeciesVector<RootedTree>> {
    let outer_labels = outer.labels();
    if !outer_labels.contains(label) {
        return Err(Error::NotALeaf(label));
    }
    let rest = outer_labels.without(label);
    if let Some(clash) = inner.vertices().find(|&x| rest.contains(x)) {
        return Err(Error::LabelClash(clash));
    }
    let component = rest.union(&inner.labels());
    let children = outer.children(label);
    let up = outer.parent(label).unwrap_or(0);
    let inner_root = inner.root();
    let base: Vec<(u32, u32)> = outer
        .0
        .iter()
        .filter(|(v, p)| *v != label && *p != label)
        .copied()
        .chain(inner.0.iter().map(|&(v, p)| (v, if v == inner_root { up } else { p })))
        .collect();
    let targets: Vec<u32> = inner.vertices().collect();
    let mut out = SpeciesVector::zero(component);
    for choice in std::iter::repeat_n(targets.iter(), children.len()).multi_cartesian_product() {
        let mut nodes = base.clone();
        nodes.extend(children.iter().zip(choice).map(|(&c, &t)| (c, t)));
        nodes.sort_unstable();
        out.add_term(RootedTree(nodes.into_boxed_slice()), Rational::one());
    }
    Ok(out)
}

/// Bilinear extension of [`graft_compose`].
pub fn graft_compose_vectors(
    outer: &SpeciesVector<RootedTree>,
    label: u32,
    inner: &SpeciesVector<RootedTree>,
) -> Result<SpeciesVector<RootedTree>> {
    let component = outer.component().without(label).union(inner.component());
    let mut out = SpeciesVector::zero(component);
    for (t, a) in outer.terms() {
        for (s, b) in inner.terms() {
            out.add_scaled(&graft_compose(t, label, s)?, &(a * b))?;
        }
    }
    Ok(out)
}

pub fn relabel_trees(v: &SpeciesVector<RootedTree>, f: &impl Fn(u32) -> u32) -> SpeciesVector<RootedTree> {
    let component: LabelSet = v.component().iter().map(f).collect();
    SpeciesVector::from_terms(component, v.terms().map(|(t, c)| (t.relabel(f), c.clone())))
}
