//! Command-line surface. `run` returns the process exit code: 0 on
//! success, 1 on domain errors, 2 on usage errors.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::actions;
use crate::corpus;
use crate::cubulation::{walls_from_graph, CubeComplex, Orientation, WalledSpace};
use crate::error::{CubistError, Result};
use crate::intervals::{self, HellyOutcome};
use crate::io;
use crate::lifting;
use crate::pocset::{Halfspace, HalfspaceSystem};
use crate::roller;
use crate::zdmodel::{self, OrbitResult, ThresholdDir};

#[derive(Parser)]
#[command(name = "cubist", version, about = "Halfspace calculus for finite CAT(0) cube complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct InputArg {
    /// Walled-space JSON (`{"points": ..., "walls": ...}`), pocset JSON
    /// (`{"walls": N, "order": ...}`), or a `u v` edge list.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Cubulate a walled space (or an edge-list graph) into its cube complex.
    Cubulate {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the pocset axioms of a halfspace system.
    Validate {
        #[command(flatten)]
        input: InputArg,
    },
    /// Maximum number of pairwise transverse walls.
    Dimension {
        #[command(flatten)]
        input: InputArg,
    },
    /// Irreducible factors: components of the non-transversality graph.
    Decompose {
        #[command(flatten)]
        input: InputArg,
    },
    /// Vertices between two endpoints.
    Interval {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// All endpoints of the interval generated by a pair.
    Endpoints {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Isometric chain embedding of an interval into Z^N.
    Embed {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Common vertex of a pairwise-intersecting halfspace family.
    Helly {
        #[command(flatten)]
        input: InputArg,
        /// Space-separated halfspace names, e.g. "w0+ w2-".
        #[arg(long)]
        halfspaces: String,
    },
    /// Embedded subcomplex of a consistent halfspace set.
    Lift {
        #[command(flatten)]
        input: InputArg,
        /// Space-separated halfspace names.
        #[arg(long)]
        set: String,
    },
    /// Interval lifted from a probability measure's majority halfspaces.
    MeasureInterval {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        measure: PathBuf,
    },
    /// Coordinatewise-majority median of three vertices.
    Median {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
    },
    /// Project onto a wall subset (1-Lipschitz restriction).
    Restrict {
        #[command(flatten)]
        input: InputArg,
        /// Space-separated wall indices to keep.
        #[arg(long)]
        keep: String,
    },
    /// Product of two halfspace systems.
    Product {
        #[arg(long = "in1")]
        input1: PathBuf,
        #[arg(long = "in2")]
        input2: PathBuf,
    },
    /// Full element list of a signed-permutation group.
    Closure {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Orbit of a 0/1 vector under signed permutations.
    Orbit {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        point: String,
    },
    /// Enumerate corner orbits and report a 2^N witness.
    TheoremCheck {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Diagnostic for the coset-representative construction.
    RecipeCheck {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Operations in the symbolic Z^D model.
    Zd {
        #[command(subcommand)]
        command: ZdCommand,
    },
    /// Run the built-in example corpus through the invariant suite.
    Corpus,
    /// DOT emission of a cubulated complex.
    Dot {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum ZdCommand {
    /// Threshold-halfspace membership of one coordinate.
    Member {
        #[arg(long)]
        point: String,
        /// 1-based coordinate.
        #[arg(long)]
        coord: usize,
        #[arg(long)]
        threshold: i64,
        /// ge for {n ≥ t}, lt for {n < t}.
        #[arg(long, default_value = "ge")]
        dir: String,
    },
    /// Coordinatewise median of three points.
    Median {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
    },
    /// Coordinate ranges and endpoint corners of an interval.
    Interval {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Orbit of a point under isometries from a file.
    Orbit {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        point: String,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Corner orbit of the all-+inf point under the N-fold dihedral action.
    DinftyOrbit {
        #[arg(long)]
        n: usize,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap distinguishes help/version (success) from usage errors
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Loaded input plus wall names for labeling, when the source had them.
struct Loaded {
    system: HalfspaceSystem,
    complex: CubeComplex,
    wall_names: Option<Vec<String>>,
}

fn load_input(path: &PathBuf) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)?;
    let trimmed = text.trim_start();
    let ws: Option<WalledSpace> = if trimmed.starts_with('{') {
        if trimmed.contains("\"points\"") {
            Some(io::load_walled_space(&text)?)
        } else {
            None
        }
    } else {
        Some(walls_from_graph(&io::parse_graph(&text)?)?)
    };
    match ws {
        Some(ws) => {
            let system = ws.derive_system()?;
            let complex = CubeComplex::median_closure(system.clone(), &ws.regions())?;
            let wall_names = Some(ws.walls.iter().map(|w| w.name.clone()).collect());
            Ok(Loaded { system, complex, wall_names })
        }
        None => {
            let system = io::load_pocset(&text)?;
            let complex = CubeComplex::full(system.clone())?;
            Ok(Loaded { system, complex, wall_names: None })
        }
    }
}

fn parse_halfspace_list(s: &str) -> Result<Vec<Halfspace>> {
    s.split_whitespace().map(io::parse_halfspace).collect()
}

fn vertex(l: &Loaded, s: &str) -> Result<Orientation> {
    let o = Orientation::parse(s)?;
    if o.wall_count() != l.system.wall_count() {
        return Err(CubistError::WallCountMismatch {
            got: o.wall_count(),
            want: l.system.wall_count(),
        });
    }
    if !l.complex.contains(&o) {
        return Err(CubistError::MissingVertex(s.to_string()));
    }
    Ok(o)
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Cubulate { input, format } => {
            let l = load_input(&input.input)?;
            match format {
                Format::Dot => {
                    print!("{}", io::complex_to_dot(&l.complex, l.wall_names.as_deref()))
                }
                Format::Json => {
                    let vertices: Vec<String> =
                        l.complex.vertices().iter().map(|v| v.to_string()).collect();
                    let edges: Vec<[String; 2]> = l
                        .complex
                        .edges()
                        .iter()
                        .map(|&(u, v, _)| {
                            [
                                l.complex.vertices()[u].to_string(),
                                l.complex.vertices()[v].to_string(),
                            ]
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"vertices": vertices, "edges": edges})
                    );
                }
                Format::Text => {
                    println!(
                        "{} vertices, {} edges, dimension {}",
                        l.complex.vertices().len(),
                        l.complex.edges().len(),
                        l.system.dimension()
                    );
                    for v in l.complex.vertices() {
                        println!("{v}");
                    }
                }
            }
        }
        Command::Validate { input } => {
            let l = load_input(&input.input)?;
            let violations = l.system.validate();
            if violations.is_empty() {
                println!("valid: {} walls", l.system.wall_count());
            } else {
                for v in &violations {
                    println!("violation: {v}");
                }
                return Err(CubistError::InvalidSystem(format!(
                    "{} violation(s)",
                    violations.len()
                )));
            }
        }
        Command::Dimension { input } => {
            println!("{}", load_input(&input.input)?.system.dimension());
        }
        Command::Decompose { input } => {
            let l = load_input(&input.input)?;
            for comp in l.system.irreducible_components() {
                let names: Vec<String> = comp
                    .iter()
                    .map(|&w| match &l.wall_names {
                        Some(n) => n[w].clone(),
                        None => format!("w{w}"),
                    })
                    .collect();
                println!("{}", names.join(" "));
            }
        }
        Command::Interval { input, x, y } => {
            let l = load_input(&input.input)?;
            let iv = intervals::interval(&l.complex, &vertex(&l, &x)?, &vertex(&l, &y)?)?;
            for m in &iv.members {
                println!("{m}");
            }
        }
        Command::Endpoints { input, x, y } => {
            let l = load_input(&input.input)?;
            let iv = intervals::interval(&l.complex, &vertex(&l, &x)?, &vertex(&l, &y)?)?;
            let eps = intervals::endpoints(&l.complex, &iv)?;
            println!("{} endpoints (2^{})", eps.len(), eps.len().trailing_zeros());
            for e in &eps {
                println!("{e}");
            }
        }
        Command::Embed { input, x, y } => {
            let l = load_input(&input.input)?;
            let iv = intervals::interval(&l.complex, &vertex(&l, &x)?, &vertex(&l, &y)?)?;
            let (n, coords) = intervals::dilworth_embed(&l.complex, &iv)?;
            let map: serde_json::Map<String, serde_json::Value> = coords
                .iter()
                .map(|(o, c)| (o.to_string(), serde_json::json!(c)))
                .collect();
            println!("{}", serde_json::json!({"chains": n, "coordinates": map}));
        }
        Command::Helly { input, halfspaces } => {
            let l = load_input(&input.input)?;
            match intervals::helly(&l.complex, &parse_halfspace_list(&halfspaces)?)? {
                HellyOutcome::Vertex(v) => println!("vertex {v}"),
                HellyOutcome::EmptyPair(h, k) => println!("empty pair {h} {k}"),
            }
        }
        Command::Lift { input, set } => {
            let l = load_input(&input.input)?;
            let lift = lifting::lift(&l.complex, &parse_halfspace_list(&set)?)?;
            println!(
                "kept walls: {}",
                lift.kept_walls.iter().map(|w| format!("w{w}")).collect::<Vec<_>>().join(" ")
            );
            for v in &lift.image {
                println!("{v}");
            }
        }
        Command::MeasureInterval { input, measure } => {
            let l = load_input(&input.input)?;
            let mu = io::load_measure(&std::fs::read_to_string(&measure)?)?;
            let iv = lifting::measure_interval(&l.complex, &mu)?;
            for m in &iv.members {
                println!("{m}");
            }
        }
        Command::Median { input, x, y, z } => {
            let l = load_input(&input.input)?;
            let m =
                lifting::median(&l.complex, &vertex(&l, &x)?, &vertex(&l, &y)?, &vertex(&l, &z)?)?;
            println!("{m}");
        }
        Command::Restrict { input, keep } => {
            let l = load_input(&input.input)?;
            let kept: Vec<usize> = keep
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| CubistError::Parse(format!("bad wall index {t:?}"))))
                .collect::<Result<_>>()?;
            let sel = roller::SubsystemSelection::new(&l.system, kept)?;
            let (sub, pts) = roller::restrict(&l.system, &sel, l.complex.vertices())?;
            println!("{}", io::pocset_to_json(&sub));
            for p in &pts {
                println!("{p}");
            }
        }
        Command::Product { input1, input2 } => {
            let a = load_input(&input1)?;
            let b = load_input(&input2)?;
            println!("{}", io::pocset_to_json(&a.system.product(&b.system)?));
        }
        Command::Closure { gens, dim } => {
            let g = io::parse_generators(&std::fs::read_to_string(&gens)?)?;
            let cl = actions::closure(dim, &g)?;
            println!("order {}", cl.len());
            for e in &cl {
                println!("{}", format_signed_perm(e));
            }
        }
        Command::Orbit { gens, dim, point } => {
            let g = io::parse_generators(&std::fs::read_to_string(&gens)?)?;
            for gen in &g {
                if gen.dim() != dim {
                    return Err(CubistError::LengthMismatch { got: gen.dim(), want: dim });
                }
            }
            let x: Vec<bool> = parse_bits(&point, dim)?;
            for p in actions::orbit(&g, &x)? {
                println!("{}", bits_string(&p));
            }
        }
        Command::TheoremCheck { gens, dim } => {
            let g = io::parse_generators(&std::fs::read_to_string(&gens)?)?;
            let rep = actions::main_theorem_check(dim, &g)?;
            println!(
                "orbit sizes: {}",
                rep.orbit_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
            );
            println!("witness orbit of size {} = 2^{}:", rep.witness.len(), rep.n);
            for p in &rep.witness {
                println!("{}", bits_string(p));
            }
        }
        Command::RecipeCheck { gens, dim } => {
            let g = io::parse_generators(&std::fs::read_to_string(&gens)?)?;
            let rep = actions::proof_recipe_check(dim, &g)?;
            println!("group order: {}", rep.group_order);
            println!("kernel order: {}", rep.kernel_order);
            println!("coset_reps_exist: {}", rep.coset_reps_exist);
            println!("orbit of O: {}", rep.orbit_of_zero);
            println!("kernel orbit of O: {}", rep.kernel_orbit_of_zero);
            if let Some(coset) = &rep.counter_coset {
                println!(
                    "counter-coset: {}",
                    coset.iter().map(format_signed_perm).collect::<Vec<_>>().join(", ")
                );
            }
        }
        Command::Zd { command } => dispatch_zd(command)?,
        Command::Corpus => run_corpus()?,
        Command::Dot { input } => {
            let l = load_input(&input.input)?;
            print!("{}", io::complex_to_dot(&l.complex, l.wall_names.as_deref()));
        }
    }
    Ok(())
}

fn dispatch_zd(cmd: ZdCommand) -> Result<()> {
    match cmd {
        ZdCommand::Member { point, coord, threshold, dir } => {
            let p = io::parse_zd_point(&point)?;
            if coord == 0 {
                return Err(CubistError::Parse("coordinates are 1-based".into()));
            }
            let dir = match dir.as_str() {
                "ge" => ThresholdDir::Ge,
                "lt" => ThresholdDir::Lt,
                other => return Err(CubistError::Parse(format!("bad --dir {other:?}"))),
            };
            println!("{}", zdmodel::halfspace_member(&p, coord - 1, threshold, dir)?);
        }
        ZdCommand::Median { x, y, z } => {
            let m = zdmodel::median_zd(
                &io::parse_zd_point(&x)?,
                &io::parse_zd_point(&y)?,
                &io::parse_zd_point(&z)?,
            )?;
            println!("{m}");
        }
        ZdCommand::Interval { x, y } => {
            let iv = zdmodel::interval_zd(&io::parse_zd_point(&x)?, &io::parse_zd_point(&y)?)?;
            let ranges: Vec<String> =
                iv.ranges.iter().map(|(a, b)| format!("[{a}, {b}]")).collect();
            println!("ranges: {}", ranges.join(" × "));
            match iv.lattice_points {
                Some(n) => println!("lattice points: {n}"),
                None => println!("lattice points: infinite"),
            }
            println!("{} endpoints:", iv.endpoints.len());
            for e in &iv.endpoints {
                println!("{e}");
            }
        }
        ZdCommand::Orbit { gens, point, radius } => {
            let p = io::parse_zd_point(&point)?;
            let g = io::parse_zd_isometries(&std::fs::read_to_string(&gens)?, p.dim())?;
            match zdmodel::corner_orbit(&g, &p, radius)? {
                OrbitResult::Finite(orbit) => {
                    println!("finite orbit of size {}", orbit.len());
                    for q in &orbit {
                        println!("{q}");
                    }
                }
                OrbitResult::Infinite => println!("infinite orbit"),
            }
        }
        ZdCommand::DinftyOrbit { n } => {
            let gens = zdmodel::dinfty_generators(n);
            let corner = zdmodel::ZBarPoint(vec![zdmodel::ExtInt::PosInf; n]);
            match zdmodel::corner_orbit(&gens, &corner, None)? {
                OrbitResult::Finite(orbit) => {
                    println!("finite orbit of size {}", orbit.len());
                    for q in &orbit {
                        println!("{q}");
                    }
                }
                OrbitResult::Infinite => println!("infinite orbit"),
            }
        }
    }
    Ok(())
}

fn format_signed_perm(g: &actions::SignedPermutation) -> String {
    let flips: String = g.flips.iter().map(|&f| if f { '1' } else { '0' }).collect();
    let perm: Vec<String> = g.perm.iter().map(|&p| (p + 1).to_string()).collect();
    format!("flips={flips} perm=({})", perm.join(" "))
}

fn parse_bits(s: &str, dim: usize) -> Result<Vec<bool>> {
    if s.len() != dim || !s.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(CubistError::Parse(format!("expected {dim} bits, got {s:?}")));
    }
    Ok(s.bytes().map(|b| b == b'1').collect())
}

fn bits_string(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Invariant suite over the built-in corpus, one pass line per check.
fn run_corpus() -> Result<()> {
    let complexes = corpus::complexes();
    let mut checks = 0usize;

    for cc in &complexes {
        assert!(cc.system.validate().is_empty());
        for x in cc.vertices() {
            for y in cc.vertices() {
                assert_eq!(x.distance(y).unwrap(), cc.bfs_distance(x, y).unwrap());
            }
        }
        checks += 1;
    }
    println!("pass: distance agrees with graph distance on {checks} complexes");

    for cc in &complexes {
        for x in cc.vertices().iter().step_by(2) {
            for y in cc.vertices().iter().step_by(3) {
                let iv = intervals::interval(cc, x, y)?;
                let eps = intervals::endpoints(cc, &iv)?;
                assert!(eps.len().is_power_of_two());
                assert!((eps.len().trailing_zeros() as usize) <= cc.system.dimension());
            }
        }
    }
    println!("pass: interval endpoint counts are powers of two");

    for cc in &complexes {
        let vs = cc.vertices();
        for x in vs.iter().step_by(2) {
            for y in vs.iter().step_by(3) {
                for z in vs.iter().step_by(4) {
                    let m = lifting::median(cc, x, y, z)?;
                    let total = |p: &Orientation| {
                        x.distance(p).unwrap() + y.distance(p).unwrap() + z.distance(p).unwrap()
                    };
                    assert!(vs.iter().all(|p| total(&m) <= total(p)));
                }
            }
        }
    }
    println!("pass: medians minimize distance sums");

    let all: BTreeSet<usize> = complexes.iter().map(|c| c.vertices().len()).collect();
    println!("pass: corpus of {} complexes, vertex counts {:?}", complexes.len(), all);
    Ok(())
}
