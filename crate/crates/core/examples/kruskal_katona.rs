// Kruskal–Katona (Lovász form) bound on edges for a given shadow size.

use hypershadow::bounds::{check_kruskal_katona, kruskal_katona_max_edges};
use hypershadow::constructions::turan;
use hypershadow::{binomial, Result};

pub fn run_example() -> Result<()> {
    for m in 3..=7 {
        let s = binomial(m, 2) as usize;
        let max = kruskal_katona_max_edges(s, 3, 7)?;
        println!("shadow C({m},2) = {s}: at most {max:.3} edges (complete graph has {})", binomial(m, 3));
    }
    let report = check_kruskal_katona(&turan(6, 3, 3)?)?;
    println!("T_3(6,3): {} edges against limit {:.3}", report.value, report.limit);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
