// Steiner triple systems and their balanced blow-ups, which approach the
// point (6/7, 6/49) for k = 7.

use hypershadow::constructions::{fano_blowup, steiner_triple_system, sts_blowup};
use hypershadow::families::is_cancellative;
use hypershadow::Result;

pub fn run_example() -> Result<()> {
    for k in [7, 9, 13, 15] {
        let sts = steiner_triple_system(k)?;
        println!("STS({k}): {} triples", sts.len());
    }
    let h = sts_blowup(21, 7)?;
    let (x, y) = hypershadow::bounds::densities_f64(&h)?;
    println!("STS(7) blown up to 21 vertices: x = {x:.4}, y = {y:.4}, target (0.8571, 0.1224)");
    assert!(is_cancellative(&h)?.is_free());

    let f = fano_blowup(35, 2.0 / 7.0)?;
    let (x, y) = hypershadow::bounds::densities_f64(&f)?;
    println!("Fano blow-up, alpha = 2/7, n = 35: x = {x:.4}, y = {y:.4}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
