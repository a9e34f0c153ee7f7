//! Exhaustive sweeps for both theorems.
//!
//! cargo run --release --example theorem_sweeps -- 12 14

use opcount::verify::{check_theorem1, check_theorem2, RunOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n1: usize = args.next().map_or(Ok(12), |s| s.parse())?;
    let n2: usize = args.next().map_or(Ok(14), |s| s.parse())?;
    let opts = RunOptions::default();

    let t1 = check_theorem1(n1, 0, &opts)?;
    println!("theorem 1, n <= {n1}: pass={} in {} ms", t1.pass, t1.wall_time_ms);
    for (k, v) in &t1.counts {
        println!("  {k:28} {v}");
    }

    let t2 = check_theorem2(n2, &opts)?;
    println!("theorem 2, n <= {n2}: pass={} in {} ms", t2.pass, t2.wall_time_ms);
    for (k, v) in &t2.counts {
        println!("  {k:28} {v}");
    }
    for v in t2.violations.iter().take(5) {
        println!("  {} fails on {}: {:?}", v.relation, v.witness.graph6, v.values);
    }
    Ok(())
}
