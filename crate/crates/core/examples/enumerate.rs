//! Canonical representatives of one multigraded class, in key order.

use opmono::enumerate::{enumerate, EnumerationRequest};
use opmono::monomial::format_word;
use opmono::{encode_word, Regime};

fn main() -> opmono::Result<()> {
    let set = enumerate(&EnumerationRequest::new(Regime::CommBoth, 2, vec![2, 1]))?;
    for m in &set {
        println!("{m:<24} {}", format_word(&encode_word(m)));
    }
    println!("{} classes", set.len());
    Ok(())
}
