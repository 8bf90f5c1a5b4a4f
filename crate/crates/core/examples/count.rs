//! Multigraded counts in the four regimes, checked against brute-force enumeration.

use opmono::counting::count;
use opmono::enumerate::{enumerate, EnumerationRequest};
use opmono::Regime;

fn main() -> opmono::Result<()> {
    let (r, s) = (2, vec![2, 1]);
    for regime in Regime::ALL {
        let n = count(regime, r, &s);
        let listed = enumerate(&EnumerationRequest::new(regime, r, s.clone()))?.len();
        println!(
            "{:<4} a(r={r}; s={s:?}) = {n:>3}  (enumerated {listed})",
            regime.tag()
        );
    }
    Ok(())
}
