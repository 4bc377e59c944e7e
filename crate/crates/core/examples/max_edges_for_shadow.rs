// Branch-and-bound: the largest 𝓕-free hypergraph with a prescribed shadow size.

use hypershadow::explore::{max_edges_given_shadow, SearchConfig, ShadowOutcome};
use hypershadow::{ForbiddenFamily, Result};

pub fn run_example() -> Result<()> {
    let family: ForbiddenFamily = "T:3".parse()?;
    for s in [0, 2, 9, 12, 15] {
        let run = max_edges_given_shadow(6, 3, family, s, &SearchConfig::exact())?;
        match run.outcome {
            ShadowOutcome::Feasible { max_edges, witness } => {
                println!("shadow {s:>2}: max {max_edges} edges, e.g. {:?}", witness.edge_lists())
            }
            ShadowOutcome::Infeasible => println!("shadow {s:>2}: not attainable"),
            ShadowOutcome::BudgetExhausted { .. } => println!("shadow {s:>2}: budget exhausted"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
