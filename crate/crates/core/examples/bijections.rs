//! The combinatorial models: ordered trees, peakless paths, binary trees and Dyck paths.

use opmono::bijections::{
    binary_trees, dyck_transform, format_dyck, matched_ascent_monotone, peakless_paths,
    right_chain_monotone, to_binary_tree, to_ordered_tree, to_path,
};
use opmono::Monomial;

fn main() -> opmono::Result<()> {
    let m: Monomial = "*P2(*)P2(P1(*P1(*)))".parse()?;
    println!("monomial      {m}");
    println!("ordered tree  {}", to_ordered_tree(&m));
    println!("path, ell=3   {}", to_path(&m, 3));
    if let Some(t) = to_binary_tree(m.atoms()) {
        println!("binary tree   {t}");
    }

    let paths = peakless_paths(2, 3, 10);
    let monotone: Vec<_> = paths
        .iter()
        .filter(|p| matched_ascent_monotone(p))
        .collect();
    println!(
        "\nspan-10 paths, d=2, ell=3: {} in all, {} monotone",
        paths.len(),
        monotone.len()
    );
    for p in monotone.iter().take(5) {
        println!("  {p}");
    }

    let trees = binary_trees(3, 3);
    let n = trees.iter().filter(|t| right_chain_monotone(t)).count();
    println!(
        "\nbinary trees with 3 vertices, d=3: {} in all, {n} monotone",
        trees.len()
    );

    let p: Monomial = "P1(*P1(*))".parse()?;
    println!(
        "\nDyck path of {p} at ell=2: {}",
        format_dyck(&dyck_transform(&p, 2)?)
    );
    Ok(())
}
