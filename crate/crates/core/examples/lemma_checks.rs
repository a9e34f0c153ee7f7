//! Random-partition checks of the boundary lemmas and the decomposition
//! identities.

use opcount::verify::{check_decomposition_identities, check_lemma1, check_lemma2_surgery, RunOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples: u64 = std::env::args().nth(1).map_or(Ok(2000), |s| s.parse())?;
    let opts = RunOptions::default();
    for r in [
        check_lemma1(samples, 42, &opts)?,
        check_decomposition_identities(samples, 42, &opts)?,
        check_lemma2_surgery(samples / 10, 42, &opts)?,
    ] {
        println!("{} pass={} {} ms", r.task_id, r.pass, r.wall_time_ms);
        for (k, v) in &r.counts {
            println!("  {k:32} {v}");
        }
        for f in &r.findings {
            println!("  finding {} {}: {} | {}", f.id, f.kind, f.printed, f.computed);
        }
    }
    Ok(())
}
