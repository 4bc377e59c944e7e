// Seeded samplers for larger n: random maximal hypergraphs and annealing
// toward a target density point.

use hypershadow::explore::{anneal, random_maximal_free, Mode, SearchConfig};
use hypershadow::{ForbiddenFamily, Result};

pub fn run_example() -> Result<()> {
    let cfg = SearchConfig {
        samples: 10,
        seed: 2024,
        ..SearchConfig::with_mode(Mode::RandomMaximal)
    };
    let h4: ForbiddenFamily = "H:3:4".parse()?;
    for p in random_maximal_free(12, 3, h4, &cfg)? {
        println!("x = {:.3}, y = {:.3}", p.x, p.y);
    }
    let cfg = SearchConfig {
        anneal_steps: 5_000,
        seed: 7,
        ..SearchConfig::with_mode(Mode::Anneal)
    };
    let run = anneal(7, 3, "T:3".parse()?, (0.8, 0.3), &cfg)?;
    println!(
        "anneal reached ({:.3}, {:.3}), distance {:.4}",
        run.best_point.x, run.best_point.y, run.distance
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
