//! The printed-versus-computed table for every catalog gadget.

use opcount::verify::{audit_gadgets, RunOptions, AUDIT_SEED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = audit_gadgets(AUDIT_SEED, &RunOptions::default())?;
    println!("pass={} counts={:?}", r.pass, r.counts);
    for f in &r.findings {
        let mark = match f.matches {
            Some(true) => "ok",
            Some(false) => "MISMATCH",
            None => "-",
        };
        println!(
            "{:8} {:26} {:9} printed {} | computed {}",
            f.id, f.kind, mark, f.printed, f.computed
        );
    }
    Ok(())
}
