//! Recomputes every shipped fixture row and reports the first disagreement, if any.

use opmono::cli::{check, parse_fixtures, EMBEDDED};

fn main() -> opmono::Result<()> {
    let entries = parse_fixtures(EMBEDDED)?;
    let mut bad = 0;
    for e in &entries {
        match check(e) {
            None => println!("ok        {e}"),
            Some(m) => {
                bad += 1;
                println!(
                    "MISMATCH  {e}: term {} expected {}, got {}",
                    m.index + 1,
                    m.expected,
                    m.actual
                );
            }
        }
    }
    println!("{} rows, {bad} mismatches", entries.len());
    Ok(())
}
