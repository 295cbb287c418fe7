//! Sparse vectors over ordered basis keys and incrementally row-reduced spans.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Anything usable as a basis key of a species component.
pub trait BasisKey: Ord + Clone + Hash + Send + Sync + fmt::Display {}
impl<T: Ord + Clone + Hash + Send + Sync + fmt::Display> BasisKey for T {}

/// A finite set of positive integer labels, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LabelSet(Vec<u32>);

impl LabelSet {
    /// The standard set `{1, …, n}`.
    pub fn range(n: usize) -> Self {
        LabelSet((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + Clone + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn is_disjoint(&self, other: &LabelSet) -> bool {
        self.iter().all(|x| !other.contains(x))
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn without(&self, x: u32) -> LabelSet {
        LabelSet(self.iter().filter(|&y| y != x).collect())
    }

    pub fn difference(&self, other: &LabelSet) -> LabelSet {
        LabelSet(self.iter().filter(|&y| !other.contains(y)).collect())
    }

    /// Order-preserving bijection from `self` onto `target`.
    pub fn transport_to(&self, target: &LabelSet) -> impl Fn(u32) -> u32 + '_ {
        assert_eq!(self.len(), target.len(), "transport between sets of different size");
        let map: HashMap<u32, u32> = self.iter().zip(target.iter()).collect();
        move |x| map[&x]
    }

    /// All subsets, as bitmask-ordered label sets.
    pub fn subsets(&self) -> impl Iterator<Item = LabelSet> + '_ {
        (0u64..1 << self.len()).map(move |mask| {
            LabelSet(self.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x).collect())
        })
    }
    /// All set partitions, each with blocks listed by increasing least label.
    pub fn set_partitions(&self) -> Vec<Vec<LabelSet>> {
        let mut out = Vec::new();
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        fn grow(rest: &[u32], blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<LabelSet>>) {
            let Some((&x, rest)) = rest.split_first() else {
                out.push(blocks.iter().map(|b| LabelSet(b.clone())).collect());
                return;
            };
            for i in 0..blocks.len() {
                blocks[i].push(x);
                grow(rest, blocks, out);
                blocks[i].pop();
            }
            blocks.push(vec![x]);
            grow(rest, blocks, out);
            blocks.pop();
        }
        grow(&self.0, &mut blocks, &mut out);
        out
    }
}

impl FromIterator<u32> for LabelSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        LabelSet(v)
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite linear combination of basis keys living in one component.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpeciesVector<K> {
    component: LabelSet,
    terms: BTreeMap<K, Rational>,
}

impl<K: BasisKey> SpeciesVector<K> {
    pub fn zero(component: LabelSet) -> Self {
        SpeciesVector { component, terms: BTreeMap::new() }
    }

    pub fn single(component: LabelSet, key: K, coeff: Rational) -> Self {
        let mut v = Self::zero(component);
        v.add_term(key, coeff);
        v
    }

    pub fn from_terms(component: LabelSet, terms: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut v = Self::zero(component);
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn component(&self) -> &LabelSet {
        &self.component
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_key(&self) -> Option<&K> {
        self.terms.keys().next()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.component != other.component {
            return Err(Error::MixedComponents {
                expected: self.component.to_string(),
                found: other.component.to_string(),
            });
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Rational) -> Result<()> {
        self.check_same(other)?;
        if factor.is_zero() {
            return Ok(());
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one())?;
        Ok(out)
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one())?;
        Ok(out)
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.component.clone());
        }
        SpeciesVector {
            component: self.component.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect(),
        }
    }

    /// Linear extension of a map sending each key to a vector of `component`.
    pub fn map_linear<L: BasisKey>(
        &self,
        component: LabelSet,
        mut image: impl FnMut(&K) -> Result<SpeciesVector<L>>,
    ) -> Result<SpeciesVector<L>> {
        let mut out = SpeciesVector::zero(component);
        for (k, c) in &self.terms {
            out.add_scaled(&image(k)?, c)?;
        }
        Ok(out)
    }
}

impl<K: BasisKey> fmt::Display for SpeciesVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K: BasisKey> fmt::Debug for SpeciesVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.component, self)
    }
}

#[derive(Clone)]
struct Row {
    pivot: u32,
    // Non-pivot entries, sorted by key index. In reduced echelon form no
    // entry ever sits on another row's pivot.
    rest: Vec<(u32, Rational)>,
}

/// A subspace of one component, kept in reduced row echelon form.
///
/// Each row is pivoted on the least basis key of the residue that created
/// it; pivot coefficients are 1 and every other row vanishes on that pivot.
#[derive(Clone)]
pub struct Span<K> {
    ambient: LabelSet,
    keys: Vec<K>,
    index: HashMap<K, u32>,
    rows: Vec<Row>,
    pivot_row: HashMap<u32, usize>,
}

impl<K: BasisKey> Span<K> {
    pub fn new(ambient: LabelSet) -> Self {
        Span { ambient, keys: Vec::new(), index: HashMap::new(), rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn from_vectors<'a>(ambient: LabelSet, vectors: impl IntoIterator<Item = &'a SpeciesVector<K>>) -> Result<Self>
    where
        K: 'a,
    {
        let mut span = Self::new(ambient);
        for v in vectors {
            span.insert(v)?;
        }
        Ok(span)
    }

    pub fn ambient(&self) -> &LabelSet {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, v: &SpeciesVector<K>) -> Result<()> {
        if v.component != self.ambient {
            return Err(Error::MixedComponents {
                expected: self.ambient.to_string(),
                found: v.component.to_string(),
            });
        }
        Ok(())
    }

    fn intern(&mut self, key: &K) -> u32 {
        if let Some(&i) = self.index.get(key) {
            return i;
        }
        let i = self.keys.len() as u32;
        self.keys.push(key.clone());
        self.index.insert(key.clone(), i);
        i
    }

    /// Residue of `v` against the rows, as `(known key index → coeff, unseen keys)`.
    fn residue_parts(&self, v: &SpeciesVector<K>) -> (HashMap<u32, Rational>, Vec<(K, Rational)>) {
        let mut acc: HashMap<u32, Rational> = HashMap::new();
        let mut unseen = Vec::new();
        for (k, c) in &v.terms {
            let Some(&i) = self.index.get(k) else {
                unseen.push((k.clone(), c.clone()));
                continue;
            };
            match self.pivot_row.get(&i) {
                Some(&r) => {
                    for (j, a) in &self.rows[r].rest {
                        let e = acc.entry(*j).or_default();
                        *e -= &(c * a);
                    }
                }
                None => {
                    *acc.entry(i).or_default() += c;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        (acc, unseen)
    }

    /// Residue of `v` after reduction; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SpeciesVector<K>) -> Result<SpeciesVector<K>> {
        self.check(v)?;
        let (acc, unseen) = self.residue_parts(v);
        let mut out = SpeciesVector::zero(self.ambient.clone());
        out.terms.extend(acc.into_iter().map(|(i, c)| (self.keys[i as usize].clone(), c)));
        out.terms.extend(unseen);
        Ok(out)
    }

    pub fn contains(&self, v: &SpeciesVector<K>) -> Result<bool> {
        self.check(v)?;
        let (acc, unseen) = self.residue_parts(v);
        Ok(acc.is_empty() && unseen.is_empty())
    }

    /// Adds `v` to the span and returns its residue before normalization.
    pub fn insert(&mut self, v: &SpeciesVector<K>) -> Result<SpeciesVector<K>> {
        self.check(v)?;
        let residue = self.reduce(v)?;
        if residue.is_zero() {
            return Ok(residue);
        }
        let (pivot_key, pivot_coeff) = residue.terms.iter().next().expect("nonzero residue");
        let pivot = self.intern(pivot_key);
        let inv = pivot_coeff.recip().expect("nonzero pivot");
        let mut rest: Vec<(u32, Rational)> = residue
            .terms
            .iter()
            .skip(1)
            .map(|(k, c)| (self.intern(k), c * &inv))
            .collect();
        rest.sort_unstable_by_key(|(j, _)| *j);

        self.rows.par_iter_mut().for_each(|row| {
            let Ok(pos) = row.rest.binary_search_by_key(&pivot, |(j, _)| *j) else {
                return;
            };
            let factor = row.rest.remove(pos).1;
            row.rest = merge_scaled(&row.rest, &rest, &-factor);
        });
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(Row { pivot, rest });
        Ok(residue)
    }

    /// Value-style insertion: the enlarged span and the residue of `v`.
    pub fn with(&self, v: &SpeciesVector<K>) -> Result<(Span<K>, SpeciesVector<K>)> {
        let mut next = self.clone();
        let residue = next.insert(v)?;
        Ok((next, residue))
    }

    fn row_vector(&self, row: &Row) -> SpeciesVector<K> {
        let mut terms = BTreeMap::new();
        terms.insert(self.keys[row.pivot as usize].clone(), Rational::one());
        for (j, c) in &row.rest {
            terms.insert(self.keys[*j as usize].clone(), c.clone());
        }
        SpeciesVector { component: self.ambient.clone(), terms }
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> Vec<SpeciesVector<K>> {
        let mut rows: Vec<&Row> = self.rows.iter().collect();
        rows.sort_by(|a, b| self.keys[a.pivot as usize].cmp(&self.keys[b.pivot as usize]));
        rows.into_iter().map(|r| self.row_vector(r)).collect()
    }

    pub fn pivots(&self) -> Vec<K> {
        let mut p: Vec<K> = self.rows.iter().map(|r| self.keys[r.pivot as usize].clone()).collect();
        p.sort();
        p
    }

    /// Matrix `C` with `action(row_i) = Σ_j C[i][j] row_j`, rows in pivot order.
    ///
    /// Fails if some row is mapped outside the span.
    pub fn action_matrix<F>(&self, action: F) -> Result<Vec<Vec<Rational>>>
    where
        F: Fn(&K) -> Result<SpeciesVector<K>> + Sync,
    {
        let rows = self.rows();
        let pivots = self.pivots();
        rows.par_iter()
            .map(|row| {
                let image = row.map_linear(self.ambient.clone(), |k| action(k))?;
                if !self.contains(&image)? {
                    return Err(Error::UnstableSpan(row.leading_key().map(|k| k.to_string()).unwrap_or_default()));
                }
                Ok(pivots.iter().map(|p| image.coeff(p)).collect())
            })
            .collect()
    }

    /// Trace of a linear action restricted to the span.
    pub fn character<F>(&self, action: F) -> Result<Rational>
    where
        F: Fn(&K) -> Result<SpeciesVector<K>> + Sync,
    {
        let rows = self.rows();
        let traces: Result<Vec<Rational>> = rows
            .par_iter()
            .map(|row| {
                let image = row.map_linear(self.ambient.clone(), |k| action(k))?;
                if !self.contains(&image)? {
                    return Err(Error::UnstableSpan(row.leading_key().map(|k| k.to_string()).unwrap_or_default()));
                }
                Ok(image.coeff(row.leading_key().expect("nonzero row")))
            })
            .collect();
        Ok(traces?.into_iter().sum())
    }

    pub fn is_stable_under<F>(&self, action: F) -> Result<bool>
    where
        F: Fn(&K) -> Result<SpeciesVector<K>> + Sync,
    {
        match self.character(action) {
            Ok(_) => Ok(true),
            Err(Error::UnstableSpan(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// A subspace in (not reduced) row echelon form over a fixed ordered basis.
///
/// Reduction only ever moves to larger keys, so inserting never touches
/// existing rows. Suited to rank computations where back-substitution
/// would fill rows in.
pub struct Echelon<K> {
    ambient: LabelSet,
    keys: Vec<K>,
    index: HashMap<K, u32>,
    // rows[j]: the row pivoted on key j, without its unit pivot entry.
    rows: Vec<Option<Vec<(u32, Rational)>>>,
    dim: usize,
}

impl<K: BasisKey> Echelon<K> {
    pub fn new(ambient: LabelSet, basis: impl IntoIterator<Item = K>) -> Self {
        let mut keys: Vec<K> = basis.into_iter().collect();
        keys.sort();
        keys.dedup();
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i as u32)).collect();
        let rows = vec![None; keys.len()];
        Echelon { ambient, keys, index, rows, dim: 0 }
    }

    pub fn ambient(&self) -> &LabelSet {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.keys.len()
    }

    fn coordinates(&self, v: &SpeciesVector<K>) -> Result<Vec<(u32, Rational)>> {
        if v.component != self.ambient {
            return Err(Error::MixedComponents {
                expected: self.ambient.to_string(),
                found: v.component.to_string(),
            });
        }
        let mut out = Vec::with_capacity(v.len());
        for (k, c) in &v.terms {
            match self.index.get(k) {
                Some(&i) => out.push((i, c.clone())),
                None => return Err(Error::Inconsistent(format!("{k} is not a basis key of {}", self.ambient))),
            }
        }
        out.sort_unstable_by_key(|(i, _)| *i);
        Ok(out)
    }

    fn residue(&self, mut v: Vec<(u32, Rational)>) -> Vec<(u32, Rational)> {
        // Entries before `pos` sit on free columns and are final.
        let mut pos = 0;
        while pos < v.len() {
            let (j, c) = &v[pos];
            match &self.rows[*j as usize] {
                Some(row) => {
                    let tail = merge_scaled(&v[pos + 1..], row, &-c.clone());
                    v.truncate(pos);
                    v.extend(tail);
                }
                None => pos += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SpeciesVector<K>) -> Result<bool> {
        Ok(self.residue(self.coordinates(v)?).is_empty())
    }

    /// Inserts `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: &SpeciesVector<K>) -> Result<bool> {
        let residue = self.residue(self.coordinates(v)?);
        let Some((pivot, lead)) = residue.first().cloned() else {
            return Ok(false);
        };
        let inv = lead.recip().expect("nonzero pivot");
        let row = residue[1..].iter().map(|(j, c)| (*j, c * &inv)).collect();
        self.rows[pivot as usize] = Some(row);
        self.dim += 1;
        Ok(true)
    }
}

impl<K: BasisKey> fmt::Debug for Echelon<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Echelon").field("ambient", &self.ambient).field("dim", &self.dim).finish()
    }
}

/// Sparse row of `(column, residue)` pairs.
type SparseRow = Box<[(u32, u32)]>;

/// Forward-only echelon accumulator over `F_p`, for certified lower bounds.
///
/// Vectors with rational entries are reduced modulo `p`; any set independent
/// modulo `p` is independent over the rationals, so the rank found here never
/// exceeds the rational rank. It equals it whenever it meets an upper bound
/// such as the ambient dimension or the number of vectors inserted.
pub struct ModularEchelon<K> {
    ambient: LabelSet,
    prime: u64,
    index: HashMap<K, u32>,
    len: usize,
    // rows[j]: the row pivoted on column j, without its unit pivot entry.
    rows: Vec<Option<SparseRow>>,
    dim: usize,
    acc: Vec<u64>,
}

/// The prime used by [`ModularEchelon`] unless another is given.
pub const DEFAULT_PRIME: u64 = 2_147_483_629;

impl<K: BasisKey> ModularEchelon<K> {
    pub fn new(ambient: LabelSet, basis: impl IntoIterator<Item = K>) -> Self {
        Self::with_prime(ambient, basis, DEFAULT_PRIME)
    }

    /// `prime` must be a prime below `2³¹`.
    pub fn with_prime(ambient: LabelSet, basis: impl IntoIterator<Item = K>, prime: u64) -> Self {
        assert!(prime < 1 << 31, "the modulus must fit in 31 bits");
        let mut keys: Vec<K> = basis.into_iter().collect();
        keys.sort();
        keys.dedup();
        let len = keys.len();
        let index = keys.into_iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
        ModularEchelon { ambient, prime, index, len, rows: vec![None; len], dim: 0, acc: vec![0; len] }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    fn scatter(&mut self, v: &SpeciesVector<K>) -> Result<usize> {
        if v.component != self.ambient {
            return Err(Error::MixedComponents { expected: self.ambient.to_string(), found: v.component.to_string() });
        }
        let mut first = self.len;
        for (k, c) in &v.terms {
            let &i = self
                .index
                .get(k)
                .ok_or_else(|| Error::Inconsistent(format!("{k} is not a basis key of {}", self.ambient)))?;
            let r = c
                .mod_prime(self.prime)
                .ok_or_else(|| Error::Inconsistent(format!("a denominator of {c} vanishes modulo {}", self.prime)))?;
            self.acc[i as usize] = r;
            first = first.min(i as usize);
        }
        Ok(first)
    }

    /// Inserts `v`; returns whether it was independent modulo `p`.
    pub fn insert(&mut self, v: &SpeciesVector<K>) -> Result<bool> {
        let p = self.prime;
        let start = self.scatter(v)?;
        let mut pivot = None;
        for j in start..self.len {
            let c = self.acc[j];
            if c == 0 {
                continue;
            }
            match &self.rows[j] {
                Some(row) => {
                    let f = p - c;
                    for &(k, r) in row.iter() {
                        let slot = &mut self.acc[k as usize];
                        *slot = (*slot + f * r as u64) % p;
                    }
                    self.acc[j] = 0;
                }
                None if pivot.is_none() => pivot = Some(j),
                None => {}
            }
        }
        let Some(pivot) = pivot else { return Ok(false) };
        let inv = crate::modular::inv_mod(self.acc[pivot], p);
        self.acc[pivot] = 0;
        let mut row = Vec::new();
        for k in pivot + 1..self.len {
            let c = std::mem::take(&mut self.acc[k]);
            if c != 0 {
                row.push((k as u32, crate::modular::mul_mod(c, inv, p) as u32));
            }
        }
        self.rows[pivot] = Some(row.into_boxed_slice());
        self.dim += 1;
        Ok(true)
    }
}

impl<K: BasisKey> fmt::Debug for ModularEchelon<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModularEchelon").field("ambient", &self.ambient).field("prime", &self.prime).field("dim", &self.dim).finish()
    }
}

fn merge_scaled(a: &[(u32, Rational)], b: &[(u32, Rational)], factor: &Rational) -> Vec<(u32, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, &b[j].1 * factor));
            j += 1;
        } else {
            let c = &a[i].1 + &(&b[j].1 * factor);
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<K: BasisKey> fmt::Debug for Span<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Span").field("ambient", &self.ambient).field("dim", &self.dim()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp() -> LabelSet {
        LabelSet::range(2)
    }

    fn vec_of(terms: &[(&'static str, i64)]) -> SpeciesVector<&'static str> {
        SpeciesVector::from_terms(comp(), terms.iter().map(|&(k, c)| (k, Rational::from(c))))
    }

    #[test]
    fn insertion_is_idempotent() {
        let mut span = Span::new(comp());
        assert_eq!(span.dim(), 0);
        let a = vec_of(&[("a", 1)]);
        assert!(!span.insert(&a).unwrap().is_zero());
        assert_eq!(span.dim(), 1);
        assert!(span.insert(&a).unwrap().is_zero());
        assert_eq!(span.dim(), 1);
    }

    #[test]
    fn eliminates_one_pivot() {
        let mut span = Span::new(comp());
        span.insert(&vec_of(&[("a", 1)])).unwrap();
        let residue = span.insert(&vec_of(&[("a", 2), ("b", 3)])).unwrap();
        assert_eq!(residue, vec_of(&[("b", 3)]));
        assert_eq!(span.dim(), 2);
        assert_eq!(span.pivots(), vec!["a", "b"]);
    }

    #[test]
    fn rows_are_reduced() {
        let span = Span::from_vectors(
            comp(),
            &[vec_of(&[("b", 1), ("c", 1)]), vec_of(&[("a", 1), ("b", 1)]), vec_of(&[("c", 2)])],
        )
        .unwrap();
        assert_eq!(span.rows(), vec![vec_of(&[("a", 1)]), vec_of(&[("b", 1)]), vec_of(&[("c", 1)])]);
    }

    #[test]
    fn rejects_mixed_components() {
        let mut span = Span::new(comp());
        let other = SpeciesVector::single(LabelSet::range(3), "a", Rational::one());
        assert!(matches!(span.insert(&other), Err(Error::MixedComponents { .. })));
        assert!(vec_of(&[("a", 1)]).plus(&other).is_err());
    }

    #[test]
    fn character_of_swap() {
        // span{a + b, a - b} under a <-> b
        let span = Span::from_vectors(comp(), &[vec_of(&[("a", 1), ("b", 1)]), vec_of(&[("a", 1), ("b", -1)])]).unwrap();
        let swap = |k: &&'static str| -> Result<SpeciesVector<&'static str>> {
            Ok(SpeciesVector::single(comp(), if *k == "a" { "b" } else { "a" }, Rational::one()))
        };
        assert_eq!(span.character(swap).unwrap(), Rational::zero());
        let sym = Span::from_vectors(comp(), &[vec_of(&[("a", 1), ("b", 1)])]).unwrap();
        assert_eq!(sym.character(swap).unwrap(), Rational::one());
        let lone = Span::from_vectors(comp(), &[vec_of(&[("a", 1)])]).unwrap();
        assert!(matches!(lone.character(swap), Err(Error::UnstableSpan(_))));
        assert!(!lone.is_stable_under(swap).unwrap());
    }

    #[test]
    fn echelon_matches_reduced_span() {
        let vectors = [vec_of(&[("b", 1), ("c", 1)]), vec_of(&[("a", 1), ("b", 1)]), vec_of(&[("a", 1), ("c", -1)])];
        let mut e = Echelon::new(comp(), ["a", "b", "c", "d"]);
        assert!(e.insert(&vectors[0]).unwrap());
        assert!(e.insert(&vectors[1]).unwrap());
        assert!(!e.insert(&vectors[2]).unwrap());
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&vec_of(&[("a", 2), ("b", 1), ("c", -1)])).unwrap());
        assert!(!e.contains(&vec_of(&[("d", 1)])).unwrap());
        assert!(matches!(e.insert(&vec_of(&[("z", 1)])), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn modular_rank_is_a_lower_bound() {
        let v = vec_of(&[("a", 3), ("b", 6)]);
        let w = vec_of(&[("a", 1), ("b", 1)]);
        let mut small = ModularEchelon::with_prime(comp(), ["a", "b"], 3);
        assert!(!small.insert(&v).unwrap());
        assert!(small.insert(&w).unwrap());
        let mut big = ModularEchelon::new(comp(), ["a", "b"]);
        assert!(big.insert(&v).unwrap() && big.insert(&w).unwrap());
        assert!(!big.insert(&vec_of(&[("a", 5), ("b", 7)])).unwrap());
        let half = SpeciesVector::single(comp(), "a", Rational::new(1, 3));
        assert!(small.insert(&half).is_err());
    }

    #[test]
    fn set_partitions_are_bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| LabelSet::range(n).set_partitions().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
        for p in LabelSet::range(4).set_partitions() {
            let mins: Vec<u32> = p.iter().map(|b| b.min().unwrap()).collect();
            assert!(mins.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(p.iter().map(LabelSet::len).sum::<usize>(), 4);
        }
    }

    fn arb_vectors() -> impl Strategy<Value = Vec<Vec<(u8, i8)>>> {
        prop::collection::vec(prop::collection::vec((0u8..8, -3i8..=3), 0..5), 1..10)
    }

    fn build(raw: &[Vec<(u8, i8)>]) -> Vec<SpeciesVector<u8>> {
        raw.iter()
            .map(|terms| SpeciesVector::from_terms(comp(), terms.iter().map(|&(k, c)| (k, Rational::from(c as i64)))))
            .collect()
    }

    proptest! {
        #[test]
        fn echelon_rank_matches_span(raw in arb_vectors()) {
            let vectors = build(&raw);
            let span = Span::from_vectors(comp(), &vectors).unwrap();
            let mut e = Echelon::new(comp(), 0u8..8);
            for v in &vectors {
                e.insert(v).unwrap();
            }
            prop_assert_eq!(e.dim(), span.dim());
            for v in &vectors {
                prop_assert!(e.contains(v).unwrap());
            }
        }

        #[test]
        fn modular_rank_matches_small_integer_spans(raw in arb_vectors()) {
            let vectors = build(&raw);
            let span = Span::from_vectors(comp(), &vectors).unwrap();
            let mut e = ModularEchelon::new(comp(), 0u8..8);
            for v in &vectors {
                e.insert(v).unwrap();
            }
            prop_assert_eq!(e.dim(), span.dim());
        }

        #[test]
        fn dimension_is_order_independent(raw in arb_vectors(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let vectors = build(&raw);
            let mut shuffled = vectors.clone();
            shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            let a = Span::from_vectors(comp(), &vectors).unwrap();
            let b = Span::from_vectors(comp(), &shuffled).unwrap();
            prop_assert_eq!(a.dim(), b.dim());
            // Reduced echelon form is unique.
            prop_assert_eq!(a.rows(), b.rows());
        }

        #[test]
        fn residue_reduces_to_zero(raw in arb_vectors()) {
            let vectors = build(&raw);
            let mut span = Span::new(comp());
            for v in &vectors {
                let residue = span.insert(v).unwrap();
                prop_assert!(span.reduce(&residue).unwrap().is_zero());
                prop_assert!(span.contains(v).unwrap());
            }
        }
    }
}
