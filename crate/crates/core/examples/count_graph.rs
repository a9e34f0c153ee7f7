//! Count independent sets and k-dominating sets of one graph, by brute
//! force and by the triangulation DP.
//!
//! cargo run --example count_graph -- "7;0-2,0-3,3-5,3-6"

use opcount::{count_is_fast, count_kds_fast, Mop, Oracle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "7;0-2,0-3,3-5,3-6".into());
    let m: Mop = text.parse()?;
    let g = m.graph()?;
    let o = Oracle::from_env()?;

    println!("{m}  graph6 {}", g.to_graph6()?);
    println!("i      oracle {:>6}  dp {:>6}", o.count_is(&g)?, count_is_fast(&m));
    for k in 1..=5 {
        println!(
            "d{k}     oracle {:>6}  dp {:>6}",
            o.count_kds(&g, k)?,
            count_kds_fast(&m, k)?
        );
    }
    Ok(())
}
