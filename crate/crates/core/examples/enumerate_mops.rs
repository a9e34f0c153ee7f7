//! Labeled and canonical triangulations of the n-gon.

use opcount::enumerate::catalan;
use opcount::{enumerate_mops, enumerate_mops_canonical};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(" n  labeled  catalan  classes");
    for n in 3..=12 {
        let labeled = enumerate_mops(n)?.count();
        let classes = enumerate_mops_canonical(n)?.count();
        println!("{n:>2} {labeled:>8} {:>8} {classes:>8}", catalan(n - 2));
    }
    for m in enumerate_mops_canonical(7)? {
        println!("{m}  orbit {}", m.orbit_size());
    }
    Ok(())
}
