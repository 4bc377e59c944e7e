// Exhaustive enumeration of cancellative 3-graphs on 6 vertices, labelled
// and up to isomorphism.

use hypershadow::constructions::turan;
use hypershadow::explore::{enumerate_free, is_isomorphic, SearchConfig};
use hypershadow::{ForbiddenFamily, Result};

pub fn run_example() -> Result<()> {
    let family: ForbiddenFamily = "T:3".parse()?;
    let labelled = enumerate_free(6, 3, family, &SearchConfig::exact())?;
    let classes = enumerate_free(
        6,
        3,
        family,
        &SearchConfig {
            iso_reduction: true,
            ..SearchConfig::exact()
        },
    )?;
    println!(
        "{} labelled cancellative 3-graphs, {} up to isomorphism",
        labelled.stats.visited, classes.stats.visited
    );
    for (s, e) in &labelled.extremal {
        println!("shadow {s:>2}: at most {} edges", e.max_edges);
    }
    let best = labelled.overall_witness().expect("non-empty search");
    println!("extremal graph is T_3(6,3): {}", is_isomorphic(best, &turan(6, 3, 3)?)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
