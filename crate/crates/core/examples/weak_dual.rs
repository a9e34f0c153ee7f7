//! Faces, weak dual and end faces of a triangulation.

use opcount::Mop;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: Mop = "8;0-2,0-3,3-5,3-6,0-6".parse()?;
    let d = m.weak_dual();
    for (i, f) in d.faces.iter().enumerate() {
        println!("face {i} {f:?} degree {}", d.degree(i));
    }
    for (a, b, chord) in &d.links {
        println!("{a} -- {b} across {chord:?}");
    }
    println!(
        "end faces {:?}, tree {}, max degree {}",
        d.end_faces(),
        d.is_tree(),
        d.max_degree()
    );
    Ok(())
}
