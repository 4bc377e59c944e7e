// Shadow chain of a covering-clique-free hypergraph, and the cancellative
// edge/shadow inequalities.

use hypershadow::bounds::{check_cancellative_inequalities, check_fisher_ryan_chain};
use hypershadow::constructions::turan;
use hypershadow::explore::{random_maximal_hypergraphs, Mode, SearchConfig};
use hypershadow::{ForbiddenFamily, Result};

pub fn run_example() -> Result<()> {
    let t = turan(9, 3, 3)?;
    let chain = check_fisher_ryan_chain(&t, 3)?;
    println!("T_3(9,3) chain {:?}", chain.values);

    let cfg = SearchConfig {
        samples: 5,
        seed: 11,
        ..SearchConfig::with_mode(Mode::RandomMaximal)
    };
    let k4: ForbiddenFamily = "K:3:4".parse()?;
    for h in random_maximal_hypergraphs(7, 3, k4, &cfg)? {
        let c = check_fisher_ryan_chain(&h, 3)?;
        println!("{} edges: {:?} non-decreasing = {}", h.len(), c.values, c.non_decreasing);
    }

    for b in check_cancellative_inequalities(&turan(6, 3, 3)?)? {
        println!("{:?}: {} <= {} ({})", b.bound, b.value, b.limit, b.satisfied);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
