use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use prelie::free_operad::{canonicalize, partial_compose, Generator, Tree, TreeTensor};
use prelie::pl::{enumerate_rooted_trees, eval, graft_compose_vectors, PlVector, RootedTree};
use prelie::LabelSet;

fn labels(from: u32, len: u32) -> Vec<u32> {
    (from..from + len).collect()
}

/// Each label after the first in a random order hangs from an earlier one.
fn random_rooted(rng: &mut StdRng, labels: &[u32]) -> RootedTree {
    let mut order = labels.to_vec();
    order.shuffle(rng);
    let parents = order
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, if i == 0 { None } else { Some(order[rng.gen_range(0..i)]) }));
    RootedTree::from_parents(parents).expect("a tree")
}

fn random_tree(rng: &mut StdRng, labels: &[u32]) -> Tree {
    if labels.len() == 1 {
        return Tree::Leaf(labels[0]);
    }
    let mut shuffled = labels.to_vec();
    shuffled.shuffle(rng);
    let cut = rng.gen_range(1..labels.len());
    let g = [Generator::Bracket, Generator::Bullet, Generator::Pre][rng.gen_range(0..3)];
    Tree::node(g, random_tree(rng, &shuffled[..cut]), random_tree(rng, &shuffled[cut..]))
}

fn random_tensor(rng: &mut StdRng, labels: &[u32]) -> TreeTensor {
    canonicalize(&random_tree(rng, labels)).expect("distinct labels").0
}

fn graft(x: &PlVector, i: u32, y: &PlVector) -> PlVector {
    graft_compose_vectors(x, i, y).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn grafting_is_sequentially_associative(a in 1u32..=3, b in 1u32..=3, c in 1u32..=2, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (xl, yl, zl) = (labels(1, a), labels(a + 1, b), labels(a + b + 1, c));
        let x = random_rooted(&mut rng, &xl).to_vector();
        let y = random_rooted(&mut rng, &yl).to_vector();
        let z = random_rooted(&mut rng, &zl).to_vector();
        let i = *xl.choose(&mut rng).unwrap();
        let j = *yl.choose(&mut rng).unwrap();
        prop_assert_eq!(graft(&graft(&x, i, &y), j, &z), graft(&x, i, &graft(&y, j, &z)));
    }

    #[test]
    fn grafting_is_parallel_associative(a in 2u32..=3, b in 1u32..=2, c in 1u32..=2, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (xl, yl, zl) = (labels(1, a), labels(a + 1, b), labels(a + b + 1, c));
        let x = random_rooted(&mut rng, &xl).to_vector();
        let y = random_rooted(&mut rng, &yl).to_vector();
        let z = random_rooted(&mut rng, &zl).to_vector();
        let picked: Vec<u32> = xl.choose_multiple(&mut rng, 2).copied().collect();
        let (i, k) = (picked[0], picked[1]);
        prop_assert_eq!(graft(&graft(&x, i, &y), k, &z), graft(&graft(&x, k, &z), i, &y));
    }

    #[test]
    fn grafting_a_vertex_is_the_identity(a in 1u32..=5, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let xl = labels(1, a);
        let x = random_rooted(&mut rng, &xl).to_vector();
        let i = *xl.choose(&mut rng).unwrap();
        let unit = RootedTree::single(i).to_vector();
        prop_assert_eq!(graft(&x, i, &unit), x.clone());
        let v = RootedTree::single(9).to_vector();
        let moved = graft(&v, 9, &x);
        prop_assert_eq!(moved, x);
    }

    #[test]
    fn evaluation_is_an_operad_morphism(k in 1u32..=3, m in 1u32..=3, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (outer_labels, inner_labels) = (labels(1, k), labels(k + 1, m));
        let outer = random_tensor(&mut rng, &outer_labels);
        let inner = random_tensor(&mut rng, &inner_labels);
        let i = *outer_labels.choose(&mut rng).unwrap();
        let lhs = eval(&partial_compose(&outer, i, &inner).unwrap()).unwrap();
        let rhs = graft(&eval(&outer.to_vector()).unwrap(), i, &eval(&inner.to_vector()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn rooted_trees_are_counted_by_cayley() {
    for n in 1..=6u32 {
        let trees = enumerate_rooted_trees(&LabelSet::range(n as usize)).unwrap();
        assert_eq!(trees.len() as u64, (n as u64).pow(n - 1));
    }
}
