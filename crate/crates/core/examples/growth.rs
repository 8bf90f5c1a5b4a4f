//! Exponential growth rates: exact roots where available, ratio estimates otherwise.

use opmono::asymptotics::{growth, DEFAULT_TOL};
use opmono::Regime;

fn main() -> opmono::Result<()> {
    for regime in Regime::ALL {
        let row: Vec<String> = (1..=6)
            .map(|d| growth(regime, d, 2, DEFAULT_TOL, 100).map(|g| format!("{:.4}", g.g_f64())))
            .collect::<opmono::Result<_>>()?;
        println!("{:<4} ell=2, d=1..6: {}", regime.tag(), row.join("  "));
    }
    Ok(())
}
