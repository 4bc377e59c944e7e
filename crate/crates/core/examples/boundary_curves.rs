// Boundary curves of the feasible region, sampled and compared.

use hypershadow::bounds::CurveId;
use hypershadow::cli::plot::gnuplot_script;
use hypershadow::Result;

pub fn run_example() -> Result<()> {
    let upper = CurveId::CancellativeRightT3;
    for id in ["cancellative-left:3", "prior-cancellative", "fano-lower", "general-k:9"] {
        let curve: CurveId = id.parse()?;
        let d = curve.domain();
        let mid = 0.5 * (d.lo + d.hi);
        println!(
            "{id:<22} on [{:.4}, {:.4}]: g({mid:.4}) = {:.6}",
            d.lo,
            d.hi,
            curve.eval(mid)?
        );
    }
    // gap between the cancellative upper bound and the Fano lower bound
    for (x, y) in CurveId::FanoLower.sample(5)? {
        println!("x = {x:.4}: lower {y:.6}, upper {:.6}", upper.eval(x)?);
    }
    let script = gnuplot_script(CurveId::FanoLower, "fano.csv", "fano.png");
    println!("{}", script.lines().last().unwrap_or_default());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
