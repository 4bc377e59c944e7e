// Containment checks for every forbidden family, with witnesses.

use hypershadow::constructions::{fano_plane, star, turan};
use hypershadow::families::{is_free, verify_witness};
use hypershadow::{ForbiddenFamily, Hypergraph, Result};

pub fn run_example() -> Result<()> {
    let hosts = [
        ("fano", fano_plane()),
        ("K4 minus an edge", Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3], [0, 2, 3]])?),
        ("star(7,3)", star(7, 3)?),
        ("T_3(9,3)", turan(9, 3, 3)?),
    ];
    for family in ["T:3", "K:3:4", "H:3:4", "D"] {
        let family: ForbiddenFamily = family.parse()?;
        for (name, h) in &hosts {
            match is_free(h, &family)?.witness() {
                None => println!("{family:>6} {name}: free"),
                Some(w) => {
                    assert!(verify_witness(h, &family, w));
                    println!("{family:>6} {name}: contains, core {:?}, edges {:?}", w.vertices, w.edges);
                }
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
