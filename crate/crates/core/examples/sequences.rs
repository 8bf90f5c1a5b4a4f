//! Length-graded sequences and b-file lines.

use opmono::cli::length_terms;
use opmono::counting::length_sequence;
use opmono::Regime;

fn main() {
    for regime in Regime::ALL {
        for d in 1..=3 {
            let terms = length_sequence(regime, d, 2, 20).tabulated();
            let shown: Vec<String> = terms.iter().map(ToString::to_string).collect();
            println!("{:<4} d={d} ell=2: {}", regime.tag(), shown.join(", "));
        }
    }

    println!("\nb-file, commuting unary operators, d=4, ell=1, offset 0:");
    for (k, v) in length_terms(Regime::CommUnary, 4, 1, 0, 8)
        .iter()
        .enumerate()
    {
        println!("{k} {v}");
    }
}
