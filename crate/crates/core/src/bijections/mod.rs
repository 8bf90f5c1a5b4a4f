//! Invertible maps between monomials and combinatorial models.
//!
//! | model | module | statistic carried |
//! |---|---|---|
//! | rooted ordered trees | [`OrderedTree`] | leaves = degree, labeled unary nodes = multiplicities |
//! | peakless lattice paths | [`LatticePath`] | span = length grading |
//! | right-edge-labeled binary trees | [`BinaryTree`] | vertices = half the length at `ell = 2` |
//! | restricted Dyck paths | [`dyck_transform`] | one operator only |
//!
//! Each model also has a generator that builds its objects directly, without
//! going through monomials, so that counts can be compared in both directions.

mod binary;
mod dyck;
mod path;
mod tree;

pub use binary::{
    binary_trees, from_binary_tree, right_chain_monotone, to_binary_tree, BinaryTree,
};
pub use dyck::{
    dyck_inverse, dyck_paths, dyck_transform, format_dyck, has_congruent_runs, DyckStep,
};
pub use path::{
    from_path, is_matched_ascent, matched_ascent_monotone, peakless_paths, to_path, LatticePath,
    Step,
};
pub use tree::{from_ordered_tree, ordered_trees, to_ordered_tree, OrderedTree};
