//! Command-line front end. [`run`] parses arguments, runs one subcommand,
//! writes a [`RunManifest`] and returns the process exit code.
//!
//! Exit codes: 0 success (or free, for `check`), 1 `check` found a family
//! member, 2 usage, parse or I/O error, 3 `explore` ran out of budget.

mod manifest;
pub mod plot;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{self, BoundReport, ChainReport, CurveId};
use crate::constructions::ConstructionSpec;
use crate::density::{exact_densities, fraction};
use crate::error::{Error, Result};
use crate::explore::{self, Mode, SearchConfig, ShadowOutcome};
use crate::families::{self, ForbiddenFamily, Witness};
use crate::hypergraph::Hypergraph;
use crate::io;

pub use manifest::{sha256_hex, OutputDigest, RunManifest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTAINS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "hypershadow", version, about = "Shadow and edge densities of uniform hypergraphs")]
pub struct Cli {
    /// Output file (directory for `explore`); standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Worker threads; 0 uses available parallelism.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    #[arg(long, global = true)]
    pub budget_secs: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a hypergraph from a spec such as `turan:6:3:3` or `sts:7`.
    Construct { spec: String },
    /// Test a hypergraph file for a forbidden family such as `T:3` or `K:3:4`.
    Check { file: PathBuf, family: String },
    /// Sample a boundary curve such as `cancellative-left:3` or `general-k:9`.
    Curve {
        curve: String,
        #[arg(long, default_value_t = 512)]
        grid: usize,
        /// Also write a gnuplot script next to `--out`.
        #[arg(long)]
        plot: bool,
    },
    /// Search 𝓕-free hypergraphs and write a report directory.
    Explore {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "exact-enumerate")]
        mode: String,
        /// Expand one canonical representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Branch-and-bound for this single shadow size.
        #[arg(long)]
        shadow: Option<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 100_000)]
        steps: usize,
        /// Annealing target `x,y`.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 2)]
        split_depth: usize,
    },
    /// Remove shadow-preserving edges down to edge density `d`.
    Reduce { file: PathBuf, d: f64 },
    /// Shadow chain of a 𝒦ʳ_{ℓ+1}-free hypergraph (`ell` defaults to `r`).
    Chain {
        file: PathBuf,
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Kruskal–Katona bound on edges for a given shadow size.
    Kk {
        shadow: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
}

impl Cli {
    /// Argument vector with every global flag in a fixed order.
    pub fn normalized(&self) -> Vec<String> {
        let mut v = vec!["hypershadow".to_string()];
        let mut flag = |name: &str, value: Option<String>| {
            if let Some(value) = value {
                v.push(format!("--{name}"));
                v.push(value);
            }
        };
        flag("out", self.out.as_ref().map(|p| p.display().to_string()));
        flag(
            "format",
            self.format.map(|f| f.to_possible_value().expect("no skipped variants").get_name().to_string()),
        );
        flag("threads", Some(self.threads.to_string()));
        flag("seed", Some(self.seed.to_string()));
        flag("budget-nodes", self.budget_nodes.map(|b| b.to_string()));
        flag("budget-secs", self.budget_secs.map(|b| b.to_string()));
        let s = |x: &dyn ToString| x.to_string();
        match &self.command {
            Command::Construct { spec } => v.extend(["construct".into(), spec.clone()]),
            Command::Check { file, family } => {
                v.extend(["check".into(), file.display().to_string(), family.clone()])
            }
            Command::Curve { curve, grid, plot } => {
                v.extend(["curve".into(), curve.clone(), "--grid".into(), s(grid)]);
                if *plot {
                    v.push("--plot".into());
                }
            }
            Command::Explore {
                n,
                r,
                family,
                mode,
                iso,
                shadow,
                samples,
                steps,
                target,
                split_depth,
            } => {
                v.extend([
                    "explore".into(),
                    "--n".into(),
                    s(n),
                    "--r".into(),
                    s(r),
                    "--family".into(),
                    family.clone(),
                    "--mode".into(),
                    mode.clone(),
                    "--samples".into(),
                    s(samples),
                    "--steps".into(),
                    s(steps),
                    "--split-depth".into(),
                    s(split_depth),
                ]);
                if *iso {
                    v.push("--iso".into());
                }
                if let Some(sh) = shadow {
                    v.extend(["--shadow".into(), s(sh)]);
                }
                if let Some(t) = target {
                    v.extend(["--target".into(), t.clone()]);
                }
            }
            Command::Reduce { file, d } => {
                v.extend(["reduce".into(), file.display().to_string(), s(d)])
            }
            Command::Chain { file, ell } => {
                v.extend(["chain".into(), file.display().to_string()]);
                if let Some(l) = ell {
                    v.extend(["--ell".into(), s(l)]);
                }
            }
            Command::Kk { shadow, r, n } => {
                v.extend(["kk".into(), s(shadow), "--r".into(), s(r), "--n".into(), s(n)])
            }
        }
        v
    }

    fn search_config(&self) -> SearchConfig {
        SearchConfig {
            seed: self.seed,
            budget_nodes: self.budget_nodes,
            budget_secs: self.budget_secs,
            threads: self.threads,
            ..SearchConfig::default()
        }
    }
}

/// Where a command's main output goes; collects what the manifest records.
struct Sink<'a> {
    out: Option<&'a Path>,
    manifest: RunManifest,
    stdout: Vec<u8>,
}

impl Sink<'_> {
    /// Main output: to `--out` if given, else to stdout.
    fn emit(&mut self, body: &str) -> Result<()> {
        match self.out {
            Some(path) => {
                std::fs::write(path, body)?;
                self.manifest.record_file(path)?;
            }
            None => self.say(body),
        }
        Ok(())
    }

    fn file(&mut self, path: &Path, body: &str) -> Result<()> {
        std::fs::write(path, body)?;
        self.manifest.record_file(path)
    }

    /// Human-readable line on stdout.
    fn say(&mut self, body: &str) {
        self.stdout.extend_from_slice(body.as_bytes());
        if !body.ends_with('\n') {
            self.stdout.push(b'\n');
        }
    }

    fn finish(mut self, manifest_path: Option<PathBuf>) -> Result<()> {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(&self.stdout)?;
        stdout.flush()?;
        if !self.stdout.is_empty() {
            self.manifest.record_stdout(&self.stdout);
        }
        match manifest_path {
            Some(p) => std::fs::write(p, self.manifest.to_json())?,
            None => eprint!("{}", self.manifest.to_json()),
        }
        Ok(())
    }
}

fn manifest_path_for(out: Option<&Path>) -> Option<PathBuf> {
    out.map(|p| {
        let mut s = p.as_os_str().to_owned();
        s.push(".manifest.json");
        PathBuf::from(s)
    })
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<i32> {
    let mut sink = Sink {
        out: cli.out.as_deref(),
        manifest: RunManifest::new(cli.normalized(), cli.seed),
        stdout: Vec::new(),
    };
    let mut manifest_path = manifest_path_for(cli.out.as_deref());
    let code = match &cli.command {
        Command::Construct { spec } => cmd_construct(cli, spec, &mut sink)?,
        Command::Check { file, family } => cmd_check(cli, file, family, &mut sink)?,
        Command::Curve { curve, grid, plot } => cmd_curve(cli, curve, *grid, *plot, &mut sink)?,
        Command::Explore { .. } => {
            let dir = cli.out.clone().ok_or_else(|| {
                Error::InvalidParameters("explore needs --out <directory>".into())
            })?;
            manifest_path = Some(dir.join("manifest.json"));
            cmd_explore(cli, &dir, &mut sink)?
        }
        Command::Reduce { file, d } => cmd_reduce(cli, file, *d, &mut sink)?,
        Command::Chain { file, ell } => cmd_chain(cli, file, *ell, &mut sink)?,
        Command::Kk { shadow, r, n } => cmd_kk(cli, *shadow, *r, *n, &mut sink)?,
    };
    sink.finish(manifest_path)?;
    Ok(code)
}

fn summary(h: &Hypergraph) -> Result<String> {
    Ok(format!(
        "n={} r={} edges={} shadow={} x={} y={}",
        h.n(),
        h.r(),
        h.len(),
        h.shadow_size(),
        fraction(&h.shadow_density()?),
        fraction(&h.edge_density()?)
    ))
}

fn hypergraph_format(cli: &Cli) -> Result<io::Format> {
    match cli.format {
        None => Ok(cli.out.as_deref().map_or(io::Format::Json, io::Format::from_path)),
        Some(OutputFormat::Json) => Ok(io::Format::Json),
        Some(OutputFormat::Text) => Ok(io::Format::Text),
        Some(OutputFormat::Csv) => Err(Error::InvalidParameters(
            "hypergraphs are written as json or text".into(),
        )),
    }
}

fn cmd_construct(cli: &Cli, spec: &str, sink: &mut Sink) -> Result<i32> {
    let h = spec.parse::<ConstructionSpec>()?.build()?;
    let body = io::to_string(&h, hypergraph_format(cli)?);
    if cli.out.is_some() {
        sink.emit(&body)?;
        sink.say(&summary(&h)?);
    } else {
        sink.emit(&body)?;
        eprintln!("{}", summary(&h)?);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckReport {
    family: ForbiddenFamily,
    free: bool,
    witness: Option<Witness>,
    bounds: Vec<BoundReport>,
    chain: Option<ChainReport>,
}

fn cmd_check(cli: &Cli, file: &Path, family: &str, sink: &mut Sink) -> Result<i32> {
    let h = io::read_file(file)?;
    let family: ForbiddenFamily = family.parse()?;
    let detection = families::is_free(&h, &family)?;
    let free = detection.is_free();
    let mut report = CheckReport {
        family,
        free,
        witness: detection.witness().cloned(),
        bounds: Vec::new(),
        chain: None,
    };
    if free {
        match family {
            ForbiddenFamily::Cancellative { .. } => {
                report.bounds = bounds::check_cancellative_inequalities(&h)?
            }
            ForbiddenFamily::CoveringClique { ell, .. } => {
                report.chain = Some(bounds::check_fisher_ryan_chain(&h, ell)?)
            }
            _ => {}
        }
    }
    let body = match cli.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => to_json_line(&report),
        OutputFormat::Text => {
            let mut s = format!("{}\nfamily={family} free={free}\n", summary(&h)?);
            if let Some(w) = &report.witness {
                let _ = writeln!(s, "witness vertices={:?} edges={:?}", w.vertices, w.edges);
            }
            for b in &report.bounds {
                let _ = writeln!(
                    s,
                    "bound {} value={} limit={} satisfied={}",
                    serde_json::to_string(&b.bound).expect("serializable"),
                    b.value,
                    b.limit,
                    b.satisfied
                );
            }
            if let Some(c) = &report.chain {
                let _ = writeln!(s, "chain {:?} non_decreasing={}", c.values, c.non_decreasing);
            }
            s
        }
        OutputFormat::Csv => {
            return Err(Error::InvalidParameters("check writes json or text".into()));
        }
    };
    sink.emit(&body)?;
    Ok(if free { EXIT_OK } else { EXIT_CONTAINS })
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_curve(cli: &Cli, curve: &str, grid: usize, plot: bool, sink: &mut Sink) -> Result<i32> {
    let id: CurveId = curve.parse()?;
    if grid < 2 {
        return Err(Error::InvalidParameters(format!("grid must be at least 2, got {grid}")));
    }
    let samples = id.sample(grid)?;
    let body = match cli.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["x", "y", "curve_id"])?;
            for (x, y) in &samples {
                w.write_record([x.to_string(), y.to_string(), id.to_string()])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?)
                .expect("csv output is utf-8")
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Sample {
                x: f64,
                y: f64,
            }
            #[derive(Serialize)]
            struct Curve {
                curve: CurveId,
                points: Vec<Sample>,
            }
            to_json_line(&Curve {
                curve: id,
                points: samples.iter().map(|&(x, y)| Sample { x, y }).collect(),
            })
        }
        OutputFormat::Text => samples.iter().map(|(x, y)| format!("{x} {y}\n")).collect(),
    };
    sink.emit(&body)?;
    if plot {
        let out = cli
            .out
            .as_deref()
            .ok_or_else(|| Error::InvalidParameters("--plot needs --out".into()))?;
        let name = out.file_name().map_or("curve.csv".into(), |n| n.to_string_lossy().into_owned());
        let stem = out.file_stem().map_or("curve".into(), |n| n.to_string_lossy().into_owned());
        let script = plot::gnuplot_script(id, &name, &format!("{stem}.png"));
        sink.file(&out.with_extension("gp"), &script)?;
    }
    Ok(EXIT_OK)
}

fn parse_target(t: &str) -> Result<(f64, f64)> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("target `{t}` is not `x,y`"),
    };
    let (x, y) = t.split_once(',').ok_or_else(bad)?;
    Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
}

fn cmd_explore(cli: &Cli, dir: &Path, sink: &mut Sink) -> Result<i32> {
    let Command::Explore {
        n,
        r,
        family,
        mode,
        iso,
        shadow,
        samples,
        steps,
        target,
        split_depth,
    } = &cli.command
    else {
        unreachable!("dispatched on explore");
    };
    let family: ForbiddenFamily = family.parse()?;
    let cfg = SearchConfig {
        mode: mode.parse()?,
        iso_reduction: *iso,
        samples: *samples,
        anneal_steps: *steps,
        target: target.as_deref().map(parse_target).transpose()?,
        split_depth: *split_depth,
        ..cli.search_config()
    };
    std::fs::create_dir_all(dir)?;
    if let Some(s) = shadow {
        let run = explore::max_edges_given_shadow(*n, *r, family, *s, &cfg)?;
        sink.file(&dir.join("shadow.json"), &to_json_line(&run))?;
        let line = match &run.outcome {
            ShadowOutcome::Feasible { max_edges, .. } => format!("shadow={s} max_edges={max_edges}"),
            ShadowOutcome::Infeasible => format!("shadow={s} infeasible"),
            ShadowOutcome::BudgetExhausted { best } => format!(
                "shadow={s} budget exhausted, best so far {}",
                best.as_ref().map_or("none".into(), |h| h.len().to_string())
            ),
        };
        sink.say(&line);
        return Ok(if run.stats.partial { EXIT_BUDGET } else { EXIT_OK });
    }
    if cfg.mode != Mode::ExactEnumerate && cfg.iso_reduction {
        return Err(Error::InvalidParameters("--iso applies to exact-enumerate only".into()));
    }
    let report = explore::point_cloud(*n, *r, family, &cfg)?;
    for path in report.write_dir(dir)? {
        sink.manifest.record_file(&path)?;
    }
    sink.say(&format!(
        "family={} n={n} r={r} mode={} points={} max_edges={} visited={} pruned={} partial={} secs={:.3}",
        report.family,
        report.mode,
        report.points.len(),
        report.max_edges().map_or("none".into(), |m| m.to_string()),
        report.stats.visited,
        report.stats.pruned,
        report.stats.partial,
        report.stats.wall_secs
    ));
    Ok(if report.stats.partial { EXIT_BUDGET } else { EXIT_OK })
}

fn cmd_reduce(cli: &Cli, file: &Path, d: f64, sink: &mut Sink) -> Result<i32> {
    let h = io::read_file(file)?;
    let out = explore::algorithm1_run(&h, d)?;
    let g = &out.hypergraph;
    if g.shadow(1)? != h.shadow(1)? {
        return Err(Error::InvalidHypergraph("reduction changed the shadow".into()));
    }
    let note = match &out.branch {
        explore::Reduction::Unchanged { guard: explore::Guard::Density } => "guard: density".into(),
        explore::Reduction::Unchanged { guard: explore::Guard::Size } => "guard: size".into(),
        explore::Reduction::Reduced { removed } => format!("removed {} edges", removed.len()),
        explore::Reduction::Stuck { removed } => format!(
            "stuck after removing {} edges: every edge owns an uncovered (r-1)-subset",
            removed.len()
        ),
    };
    let body = io::to_string(g, hypergraph_format(cli)?);
    let report = format!("before {}\nafter  {}\n{note}", summary(&h)?, summary(g)?);
    sink.emit(&body)?;
    if cli.out.is_some() {
        sink.say(&report);
    } else {
        eprintln!("{report}");
    }
    Ok(EXIT_OK)
}

fn cmd_chain(cli: &Cli, file: &Path, ell: Option<usize>, sink: &mut Sink) -> Result<i32> {
    let h = io::read_file(file)?;
    let report = bounds::check_fisher_ryan_chain(&h, ell.unwrap_or(h.r()))?;
    let body = match cli.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => to_json_line(&report),
        OutputFormat::Text => {
            let mut s = String::new();
            for ((i, size), v) in report.indices.iter().zip(&report.sizes).zip(&report.values) {
                let _ = writeln!(s, "i={i} size={size} value={v}");
            }
            let _ = writeln!(s, "non_decreasing={}", report.non_decreasing);
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["i", "size", "value"])?;
            for ((i, size), v) in report.indices.iter().zip(&report.sizes).zip(&report.values) {
                w.write_record([i.to_string(), size.to_string(), v.to_string()])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?)
                .expect("csv output is utf-8")
        }
    };
    sink.emit(&body)?;
    Ok(EXIT_OK)
}

fn cmd_kk(cli: &Cli, shadow: usize, r: usize, n: usize, sink: &mut Sink) -> Result<i32> {
    let z = bounds::kruskal_katona_z(shadow, r, n)?;
    let max = bounds::kruskal_katona_max_edges(shadow, r, n)?;
    let (x, _) = exact_densities(n, r, shadow, 0);
    let body = match cli.format.unwrap_or(OutputFormat::Text) {
        OutputFormat::Text => format!("shadow={shadow} r={r} n={n} x={} z={z} max_edges={max}\n", fraction(&x)),
        OutputFormat::Json => to_json_line(&serde_json::json!({
            "shadow_size": shadow,
            "r": r,
            "n": n,
            "x": fraction(&x),
            "z": z,
            "max_edges": max,
        })),
        OutputFormat::Csv => format!("shadow_size,r,n,x,z,max_edges\n{shadow},{r},{n},{},{z},{max}\n", fraction(&x)),
    };
    sink.emit(&body)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("hypershadow").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn normalized_vector_round_trips() {
        let cli = parse(&["explore", "--n", "6", "--r", "3", "--family", "T:3", "--threads", "4"]);
        let norm = cli.normalized();
        assert_eq!(&norm[..5], ["hypershadow", "--threads", "4", "--seed", "0"]);
        let again = Cli::try_parse_from(&norm).unwrap();
        assert_eq!(again.normalized(), norm);
    }

    #[test]
    fn targets() {
        assert_eq!(parse_target("0.8, 0.4").unwrap(), (0.8, 0.4));
        assert!(parse_target("0.8").is_err());
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(run(["hypershadow", "frobnicate"]), EXIT_ERROR);
        assert_eq!(run(["hypershadow", "curve", "nope"]), EXIT_ERROR);
        assert_eq!(run(["hypershadow", "--version"]), EXIT_OK);
    }
}
