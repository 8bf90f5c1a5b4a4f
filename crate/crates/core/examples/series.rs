//! Generating functions as exact truncated series: fixpoint, closed form and
//! the exp-log construction for commutative products.

use opmono::series::{closed_form_free, solve};
use opmono::Regime;

fn main() -> opmono::Result<()> {
    let order = 16;
    let fixpoint = solve(Regime::Free, 2, 2, order)?;
    let closed = closed_form_free(2, 2, order)?;
    println!("free, d=2, ell=2:  {fixpoint}");
    println!("closed form agrees: {}", fixpoint == closed);

    for regime in [Regime::CommMult, Regime::CommBoth] {
        let s = solve(regime, 2, 2, order)?;
        let counts: Vec<String> = s
            .to_counts()?
            .iter()
            .step_by(2)
            .skip(1)
            .map(ToString::to_string)
            .collect();
        println!("{:<4} d=2, ell=2: {}", regime.tag(), counts.join(", "));
    }
    Ok(())
}
