//! The DP on long fans, where counts leave 128 bits behind.

use opcount::{count_is_fast, count_kds_fast, Mop};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [10, 50, 200, 500] {
        let m = Mop::fan(n)?;
        let t = std::time::Instant::now();
        let i = count_is_fast(&m);
        let d4 = count_kds_fast(&m, 4)?;
        println!("fan {n:>3}: {} bits, i > d4: {}, {:?}", i.bits(), i > d4, t.elapsed());
    }
    Ok(())
}
