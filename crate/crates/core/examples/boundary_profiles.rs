//! Split a triangulation at an edge and rebuild i(G) and d4(G) from the
//! boundary profiles of the two sides.

use opcount::profile::{convolve, side_dom_profile, side_is_profile};
use opcount::{count_is_fast, count_kds_fast, Mop, Oracle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: Mop = "9;0-2,0-3,3-5,3-6,6-8,0-6".parse()?;
    let o = Oracle::default();
    for (u, v) in [(0, 3), (3, 6), (0, 6)] {
        let p = m.split_at_edge(u, v)?;
        let (li, ri) = (side_is_profile(&o, &p.left)?, side_is_profile(&o, &p.right)?);
        let (ld, rd) = (side_dom_profile(&o, &p.left, 4)?, side_dom_profile(&o, &p.right, 4)?);
        println!("split at {u}-{v}: left {} vertices, right {}", p.left.n(), p.right.n());
        println!("  left  I = ({}, {}, {})", li.i00, li.i01, li.i10);
        println!("  right I = ({}, {}, {})", ri.i00, ri.i01, ri.i10);
        println!("  i  = {} (direct {})", ri.weigh(&li), count_is_fast(&m));
        println!("  d4 = {} (direct {})", convolve(&ld, &rd)?, count_kds_fast(&m, 4)?);
        let terms: Vec<String> = ld.expansion().iter().map(|(c, t)| format!("{c} {t}")).collect();
        println!("  d4 = {}", terms.join(" + "));
    }
    Ok(())
}
