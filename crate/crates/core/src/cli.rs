//! The `semimono` command line.
//!
//! Exit status: 0 when the checked property holds, 1 when it is violated,
//! 2 on usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::boolean::{is_regular, symmetry_orbit, BooleanFunction};
use crate::cubical::{closure_complex, frontier_complex, open_part_complex, CubicalComplex};
use crate::error::{Error, Result};
use crate::generate;
use crate::semimonotone::{check, CheckReport, Method, Witness};
use crate::simplicial::{build_counterexample_5, verify_acyclic_link};
use crate::vdd::{demo_vdd, write_slices, Outcome, Ratio};
use crate::verify::{self, SuiteResult};
use crate::voxel::VoxelSet;

/// Environment variable holding the number of worker threads.
pub const WORKERS_ENV: &str = "SEMIMONO_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "semimono",
    version,
    about = "Semi-monotone sets, regular Boolean functions and acyclic links"
)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Kv)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable `key: value` lines.
    Text,
    /// Line-oriented `key=value`.
    Kv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Definition,
    Inductive,
    Band,
    Octant,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Definition => vec![Method::Definition],
            MethodArg::Inductive => vec![Method::Inductive],
            MethodArg::Band => vec![Method::Band],
            MethodArg::Octant => vec![Method::Octant],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Part {
    /// The open set itself.
    Open,
    /// The union of the closed cells.
    Closure,
    /// Closure minus the open set.
    Frontier,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide semi-monotonicity of a voxel set.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// Replay a witness printed by an earlier run instead of checking.
        #[arg(long)]
        replay: Option<String>,
    },
    /// Reduced Z/2 Betti numbers of a voxel set or of a face-list complex.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Part::Open)]
        of: Part,
        /// Read the file as a cubical complex (one face per line).
        #[arg(long)]
        complex: bool,
        /// Report unreduced ranks.
        #[arg(long)]
        unreduced: bool,
    },
    /// Frontier of a voxel set: Betti numbers, optionally the faces.
    Frontier {
        file: PathBuf,
        #[arg(long)]
        faces: bool,
    },
    /// Run the checkers over every subset of a box.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long = "box")]
        side: usize,
        /// Run the agreement, projection, slice, acyclicity and octant suites.
        #[arg(long)]
        cross_check: bool,
    },
    /// Exhaustive Boolean-function suites, or suites over functions from a file.
    VerifyBoolean {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Truth tables, each starting with a `vars <n>` line.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Print the symmetry orbit of every input function.
        #[arg(long, requires = "input")]
        emit_orbit: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Four-way checker agreement: every subset of a small box, or random
    /// subsets of a box too large to exhaust.
    VerifyOctantEquivalence {
        #[arg(long)]
        dim: usize,
        #[arg(long = "box")]
        side: usize,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Every acyclic subcomplex of the n-simplex has a vertex with acyclic link.
    VerifyAcyclicLink {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// The six-vertex acyclic complex with no acyclic vertex link.
    #[command(name = "counterexample-5")]
    Counterexample5,
    /// Voxelize the level set {h > t} of (x/z)^2 + (y/z)^2.
    DemoVdd {
        #[arg(long, default_value_t = 32)]
        resolution: usize,
        #[arg(long, default_value = "3/4")]
        t: String,
        /// Directory for PGM slice images.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write random or exhaustive voxel sets in the voxel text format.
    Generate {
        #[arg(long)]
        dim: usize,
        #[arg(long = "box")]
        side: usize,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        /// Write one file per set into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    /// Number of random instances on top of the exhaustive ones.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub bias: f64,
}

/// Whether the property a command checks held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Violated,
}

impl Status {
    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Holds
        } else {
            Status::Violated
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Holds => 0,
            Status::Violated => 1,
        }
    }
}

/// Sizes the global thread pool from `SEMIMONO_WORKERS` when it is set.
pub fn configure_workers() -> Result<()> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("{WORKERS_ENV}={raw:?} is not a thread count")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::InvalidArgument(e.to_string()))
}

struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn field(&mut self, key: &str, value: impl std::fmt::Display) -> Result<()> {
        match self.format {
            Format::Kv => writeln!(self.w, "{key}={value}")?,
            Format::Text => writeln!(self.w, "{key}: {value}")?,
        }
        Ok(())
    }

    fn line(&mut self, text: impl std::fmt::Display) -> Result<()> {
        writeln!(self.w, "{text}")?;
        Ok(())
    }

    fn suite(&mut self, s: &SuiteResult) -> Result<()> {
        match self.format {
            Format::Kv => writeln!(self.w, "{s}")?,
            Format::Text => {
                let status = if s.passed() { "pass" } else { "FAIL" };
                writeln!(
                    self.w,
                    "{:<22} {:>7} checked {:>5} failures  {status}",
                    s.name, s.checked, s.failure_count
                )?;
                for f in &s.failures {
                    writeln!(self.w, "    {f}")?;
                }
            }
        }
        Ok(())
    }

    fn suites(&mut self, suites: &[SuiteResult]) -> Result<Status> {
        for s in suites {
            self.suite(s)?;
        }
        let ok = suites.iter().all(SuiteResult::passed);
        self.field("status", if ok { "pass" } else { "fail" })?;
        Ok(Status::from_bool(ok))
    }

    fn report(&mut self, r: &CheckReport) -> Result<()> {
        self.field("verdict", r.verdict)?;
        self.field("method", r.method)?;
        match &r.witness {
            Some(w) => self.field("witness", w),
            None => self.field("witness", "none"),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_voxels(path: &Path) -> Result<VoxelSet> {
    read(path)?.parse()
}

/// Splits a file of truth tables at each `vars` header.
fn read_functions(path: &Path) -> Result<Vec<BooleanFunction>> {
    let text = read(path)?;
    let mut chunks: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.trim_start().starts_with("vars") || chunks.is_empty() {
            chunks.push(String::new());
        }
        let chunk = chunks.last_mut().expect("pushed above");
        chunk.push_str(line);
        chunk.push('\n');
    }
    chunks
        .iter()
        .filter(|c| {
            c.lines()
                .any(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        })
        .map(|c| c.parse())
        .collect()
}

/// Runs one parsed command line, writing its report to `w`.
pub fn run(config: RunConfig, w: &mut dyn Write) -> Result<Status> {
    let mut out = Out {
        format: config.format,
        w,
    };
    match config.command {
        Command::Check { file, method, replay } => {
            let u = read_voxels(&file)?;
            if let Some(text) = replay {
                let witness: Witness = text.parse()?;
                let reproduced = witness.replay(&u)?;
                out.field("replay", reproduced)?;
                return Ok(Status::from_bool(reproduced));
            }
            let mut reports = Vec::new();
            for (i, m) in method.methods().into_iter().enumerate() {
                let r = check(&u, m)?;
                if i > 0 {
                    out.line("")?;
                }
                out.report(&r)?;
                reports.push(r);
            }
            let first = reports[0].verdict;
            if reports.iter().any(|r| r.verdict != first) {
                out.line("")?;
                out.field("agreement", false)?;
                return Ok(Status::Violated);
            }
            Ok(Status::from_bool(first))
        }
        Command::Betti {
            file,
            of,
            complex,
            unreduced,
        } => {
            let c = if complex {
                if of != Part::Open {
                    return Err(Error::InvalidArgument(
                        "--of applies to voxel sets, not to --complex input".into(),
                    ));
                }
                CubicalComplex::parse_faces(&read(&file)?)?
            } else {
                let u = read_voxels(&file)?;
                match of {
                    Part::Open => open_part_complex(&u)?,
                    Part::Closure => closure_complex(&u)?,
                    Part::Frontier => frontier_complex(&u)?,
                }
            };
            out.field("betti", c.betti_z2(!unreduced)?)?;
            Ok(Status::Holds)
        }
        Command::Frontier { file, faces } => {
            let fr = frontier_complex(&read_voxels(&file)?)?;
            out.field("betti", fr.betti_z2(true)?)?;
            out.field("faces", fr.len())?;
            if faces {
                write!(out.w, "{fr}")?;
            }
            Ok(Status::Holds)
        }
        Command::Enumerate { dim, side, cross_check } => {
            let sets: Vec<VoxelSet> = generate::exhaustive(dim, side)?.collect();
            if cross_check {
                return out.suites(&verify::voxel_suites(&sets));
            }
            let mut semi = 0;
            for u in &sets {
                if check(u, Method::Octant)?.verdict {
                    semi += 1;
                }
            }
            out.field("sets", sets.len())?;
            out.field("semi_monotone", semi)?;
            Ok(Status::Holds)
        }
        Command::VerifyBoolean {
            n,
            input,
            emit_orbit,
            seed,
        } => match input {
            None => out.suites(&verify::boolean_suites(n, seed)?),
            Some(path) => {
                let fs = read_functions(&path)?;
                if emit_orbit {
                    for psi in &fs {
                        let orbit = symmetry_orbit(psi)?;
                        out.line(format!("# orbit of size {} regular={}", orbit.len(), is_regular(psi)))?;
                        for g in orbit {
                            out.line(&g)?;
                        }
                    }
                    return Ok(Status::Holds);
                }
                out.suites(&verify::boolean_suites_for(&fs))
            }
        },
        Command::VerifyOctantEquivalence { dim, side, random } => {
            // boxes too large to exhaust are sampled only
            let cells = generate::box_cells(dim, side)?.len();
            let mut sets: Vec<VoxelSet> = if cells <= generate::MAX_EXHAUSTIVE_CELLS || random.random == 0 {
                generate::exhaustive(dim, side)?.collect()
            } else {
                Vec::new()
            };
            out.field("exhaustive", sets.len())?;
            sets.extend(generate::random(random.seed, dim, side, random.random, random.bias)?);
            out.field("random", random.random)?;
            out.suites(&[verify::four_way_suite(&sets)])
        }
        Command::VerifyAcyclicLink { n } => {
            let mut ok = true;
            for k in 1..=n {
                let r = verify_acyclic_link(k)?;
                ok &= r.passed();
                out.field(&format!("n{k}.families"), r.families)?;
                out.field(&format!("n{k}.expected_families"), r.expected_families)?;
                out.field(&format!("n{k}.acyclic"), r.acyclic)?;
                out.field(&format!("n{k}.single_vertices"), r.single_vertices)?;
                out.field(&format!("n{k}.violations"), r.violations.len())?;
                for v in r.violations.iter().take(10) {
                    out.field(&format!("n{k}.violation"), v)?;
                }
            }
            out.field("status", if ok { "pass" } else { "fail" })?;
            Ok(Status::from_bool(ok))
        }
        Command::Counterexample5 => {
            let x = build_counterexample_5();
            out.field("faces", x)?;
            out.field("betti", x.betti_z2(true)?)?;
            out.field("acyclic", x.is_acyclic())?;
            for v in 0..x.n_vertices() {
                let l = x.link(v)?;
                let girth = l.girth().map_or("none".to_string(), |g| g.to_string());
                out.line(format!(
                    "vertex={v} link={l} betti={} acyclic={} girth={girth}",
                    l.betti_z2(true)?,
                    l.is_acyclic()
                ))?;
            }
            let suite = verify::counterexample_suite();
            let expected = x.is_acyclic() && x.acyclic_link_vertices().is_empty();
            out.field("violation", if expected { "expected" } else { "missing" })?;
            Ok(Status::from_bool(suite.passed()))
        }
        Command::DemoVdd {
            resolution,
            t,
            out: dir,
        } => {
            let t: Ratio = t.parse()?;
            let demo = demo_vdd(resolution, t)?;
            out.field("resolution", demo.resolution)?;
            out.field("t", demo.t)?;
            out.field("cells", demo.region.len())?;
            out.field("components", demo.components)?;
            out.field("open_components", demo.open_components)?;
            out.field("expected_components", demo.expected_components)?;
            out.field("outcome", demo.outcome)?;
            let mut replayed = true;
            for r in &demo.reports {
                let shown = r.witness.as_ref().map_or("none".to_string(), |w| w.to_string());
                out.field(&format!("{}.verdict", r.method), r.verdict)?;
                out.field(&format!("{}.witness", r.method), shown)?;
                if let Some(w) = &r.witness {
                    replayed &= w.replay(&demo.region)?;
                }
            }
            if let Some(dir) = dir {
                for p in write_slices(&demo, &dir)? {
                    out.field("slice", p.display())?;
                }
            }
            let ok = match demo.outcome {
                Outcome::Inconclusive => true,
                Outcome::Unexpected => false,
                // a disconnected region must fail every checker
                Outcome::Confirmed if demo.components >= 2 => replayed && demo.reports.iter().all(|r| !r.verdict),
                Outcome::Confirmed => replayed,
            };
            Ok(Status::from_bool(ok))
        }
        Command::Generate {
            dim,
            side,
            exhaustive,
            count,
            seed,
            bias,
            out: dir,
        } => {
            let sets: Vec<VoxelSet> = if exhaustive {
                generate::exhaustive(dim, side)?.collect()
            } else {
                generate::random(seed, dim, side, count, bias)?
            };
            match dir {
                None => {
                    for u in &sets {
                        write!(out.w, "{u}")?;
                    }
                }
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    for (i, u) in sets.iter().enumerate() {
                        fs::write(dir.join(format!("set_{i:05}.vox")), u.to_string())?;
                    }
                    out.field("written", sets.len())?;
                }
            }
            Ok(Status::Holds)
        }
    }
}
