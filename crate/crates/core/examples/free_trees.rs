//! Free trees up to isomorphism and their i / d2 counts.

use opcount::{count_on_tree, enumerate_free_trees, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=14 {
        println!("n={n:>2}: {} trees", enumerate_free_trees(n)?.count());
    }
    for t in enumerate_free_trees(6)? {
        let i = count_on_tree(&t, Mode::Is)?;
        let d2 = count_on_tree(&t, Mode::Kds(2))?;
        println!("{} degrees {:?}: i={i} d2={d2}", t.to_graph6()?, t.degrees());
    }
    Ok(())
}
