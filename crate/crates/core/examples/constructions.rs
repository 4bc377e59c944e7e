// Generalized Turán hypergraphs, stars and cliques with their exact densities.

use hypershadow::constructions::{star, turan, ConstructionSpec};
use hypershadow::density::fraction;
use hypershadow::Result;

pub fn run_example() -> Result<()> {
    let t = turan(6, 3, 3)?;
    println!(
        "T_3(6,3): {} edges, x = {}, y = {}",
        t.len(),
        fraction(&t.shadow_density()?),
        fraction(&t.edge_density()?)
    );
    assert_eq!(t.len(), 8);

    let s = star(7, 3)?;
    println!("star(7,3): {} edges, shadow {}", s.len(), s.shadow_size());

    for spec in ["complete:5:3", "turan:9:3:3", "clique+iso:10:3:1/2"] {
        let h: ConstructionSpec = spec.parse()?;
        let h = h.build()?;
        println!("{spec}: n = {}, edges = {}", h.n(), h.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
