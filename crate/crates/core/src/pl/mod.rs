//! The pre-Lie operad as labelled rooted trees with grafting.

mod closure;
mod eval;
mod rooted;

pub use closure::*;
pub use eval::{bracket, bullet, eval, eval_lie, eval_tree, eval_word, pre, vertex, PlVector};
pub use rooted::{enumerate_rooted_trees, graft_compose, graft_compose_vectors, relabel_trees, RootedTree};
