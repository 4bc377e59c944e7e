// Dropping edges without shrinking the shadow until the edge density
// reaches a threshold.

use hypershadow::explore::{algorithm1_run, Reduction};
use hypershadow::{Hypergraph, Result};

pub fn run_example() -> Result<()> {
    let k6 = Hypergraph::complete(6, 3)?;
    for d in [0.9, 0.5, 0.2] {
        let out = algorithm1_run(&k6, d)?;
        let kept = out.hypergraph.len();
        let branch = match out.branch {
            Reduction::Unchanged { guard } => format!("unchanged ({guard:?})"),
            Reduction::Reduced { removed } => format!("removed {}", removed.len()),
            Reduction::Stuck { removed } => format!("stuck after {}", removed.len()),
        };
        assert_eq!(out.hypergraph.shadow_size(), k6.shadow_size());
        println!("d = {d}: {kept} edges kept, {branch}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
