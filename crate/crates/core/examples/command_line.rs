// Driving the command-line front end in-process.

use hypershadow::cli::{run, RunManifest};
use hypershadow::Result;

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join(format!("hypershadow-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let graph = dir.join("turan.json");
    let g = graph.to_str().expect("utf-8 path");
    assert_eq!(run(["hypershadow", "construct", "turan:6:3:3", "--out", g]), 0);
    assert_eq!(run(["hypershadow", "check", g, "T:3", "--format", "text"]), 0);

    let out = dir.join("explore");
    let o = out.to_str().expect("utf-8 path");
    let code = run(["hypershadow", "explore", "--n", "5", "--r", "3", "--family", "K:3:4", "--out", o]);
    assert_eq!(code, 0);
    let manifest = RunManifest::read(&out.join("manifest.json"))?;
    println!("explore wrote {} files", manifest.outputs.len());
    print!("{}", std::fs::read_to_string(out.join("extremal.csv"))?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
