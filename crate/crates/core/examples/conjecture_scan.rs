//! Random search for graphs with i(G) < d_k(G), plus the k-regular
//! equality cases.

use opcount::enumerate::{random_graph, Family, GenSpec};
use opcount::verify::{scan_conjecture, RunOptions};
use opcount::Oracle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let o = Oracle::default();
    let spec = GenSpec {
        family: Family::RandomRegular,
        n: 12,
        k: 3,
        seed: 5,
        sample_count: 3,
    };
    for idx in 0..3 {
        let g = random_graph(&spec, idx)?;
        println!(
            "cubic {}: i={} d3={}",
            g.to_graph6()?,
            o.count_is(&g)?,
            o.count_kds(&g, 3)?
        );
    }
    let r = scan_conjecture(4, 14, 1000, 1, &RunOptions::default())?;
    println!("{}", r.to_json());
    Ok(())
}
