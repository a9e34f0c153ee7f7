//! Reports are plain JSON: write one, read it back, replay its witness.

use opcount::verify::{check_theorem2, RunOptions};
use opcount::{count_on_tree, Mode, VerifyReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = check_theorem2(7, &RunOptions::with_workers(1))?;
    let text = r.stable_json();
    let back = VerifyReport::from_json(&text)?;
    assert_eq!(back.stable_json(), text);
    for v in &back.violations {
        let t = v.witness.graph()?;
        println!(
            "{} on {}: d2={} i={}",
            v.relation,
            v.witness.graph6,
            count_on_tree(&t, Mode::Kds(2))?,
            count_on_tree(&t, Mode::Is)?
        );
    }
    println!("{text}");
    Ok(())
}
