//! `cfgeo` — conflict-free coloring of geometric intersection graphs.
//!
//! One subcommand per library operation, wired to the plain-text formats.
//! Exit codes: 0 success, 1 negative decision (not colorable / coloring
//! invalid), 2 usage or input errors, 3 inconclusive (node budget hit).
//! Output is deterministic; all randomness is seeded.

use std::fmt::Display;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cfgeo::census::census_with_guard;
use cfgeo::coloring::{verify_cf, Mode};
use cfgeo::generators::{
    bull_graph, bull_interval_instance, c4_graph, gen_dk, gen_gn, path_graph, random_instance,
    star_graph,
};
use cfgeo::geometry::{build_intersection_graph, ShapeKind};
use cfgeo::io;
use cfgeo::recurrences::{
    gbar_closed_form, gbar_recurrence, recurrence_dk_one_copy, recurrence_gn,
};
use cfgeo::reduction::gen_reduction;
use cfgeo::solver::{cf_chromatic_number_with_budget, solve_cf_k, ChromaticOutcome, SolveOutcome};
use cfgeo::strips::{
    color_intervals, color_unit_disks, color_unit_squares, greedy_height2_experimental, StripError,
};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cfgeo",
    version,
    about = "Conflict-free coloring of geometric intersection graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the intersection graph of an instance file.
    BuildGraph {
        /// Instance file (`-` for stdin).
        instance: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Color a unit-disk or unit-square instance by strips (≤6 resp. ≤4 colors).
    ColorStrips {
        instance: String,
        /// Run the greedy two-coloring on unit-disk instances of height ≤ 2
        /// (beyond the proven √3 bound); the verifier decides per instance.
        #[arg(long)]
        experimental_height_2: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Two-color an interval instance greedily.
    ColorIntervals {
        instance: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Decide conflict-free k-colorability or compute the chromatic number.
    Solve {
        /// Graph file (`-` for stdin).
        graph: String,
        /// Decide colorability with exactly this palette size.
        #[arg(long, conflicts_with = "chromatic")]
        k: Option<usize>,
        /// Search for the smallest feasible palette.
        #[arg(long)]
        chromatic: bool,
        /// Use open neighborhoods N(v) instead of closed N[v].
        #[arg(long)]
        open: bool,
        /// Node-expansion budget (default: CFGEO_BUDGET env var, else unlimited).
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Minimum colors for a chain, read from a chain file.
    SolveChain {
        /// Chain file (default: stdin).
        #[arg(default_value = "-")]
        chain: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Check a coloring file against a graph file.
    Verify {
        graph: String,
        coloring: String,
        #[arg(long)]
        open: bool,
    },
    /// Emit generated graphs, instances and formula reductions.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Render an instance (optionally colored) as SVG.
    Render {
        instance: String,
        #[arg(long)]
        coloring: Option<String>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Evaluate the gadget size recurrences.
    Recurrence {
        family: RecurrenceFamily,
        n: usize,
        /// For `gbar`: print the closed-form value instead of the recurrence.
        #[arg(long)]
        closed: bool,
    },
    /// Maximum conflict-free chromatic number over all graphs on ≤ max-n vertices.
    Census {
        #[arg(long)]
        max_n: usize,
        /// Raise the exhaustive-enumeration guard (default 7).
        #[arg(long, default_value_t = cfgeo::census::DEFAULT_CENSUS_GUARD)]
        guard: usize,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// G_n gadget graph with role annotations.
    Gn {
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// D_k chain gadget graph with role annotations.
    Dk {
        k: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Chain descriptor for `solve-chain`.
    Chain {
        m: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// The Bull graph (or its unit-interval instance with --instance).
    Bull {
        #[arg(long)]
        instance: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// The four-cycle C_4.
    C4 {
        #[command(flatten)]
        out: OutputArg,
    },
    /// Star K_{1,n}.
    Star {
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Path on n vertices.
    Path {
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// G(φ) for a positive 1-in-3 formula file.
    Reduction {
        formula: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Seeded random instance with centers in [0,width] × [0,height].
    Random {
        kind: KindArg,
        n: usize,
        /// Horizontal bound (integer, p/q, or decimal).
        width: String,
        /// Vertical bound; for intervals, the maximum length.
        height: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    UnitDisk,
    Disk,
    UnitSquare,
    Square,
    Interval,
}

impl From<KindArg> for ShapeKind {
    fn from(k: KindArg) -> ShapeKind {
        match k {
            KindArg::UnitDisk => ShapeKind::UnitDisk,
            KindArg::Disk => ShapeKind::Disk,
            KindArg::UnitSquare => ShapeKind::UnitSquare,
            KindArg::Square => ShapeKind::Square,
            KindArg::Interval => ShapeKind::Interval,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RecurrenceFamily {
    Gn,
    Dk,
    Gbar,
}

#[derive(Args)]
struct OutputArg {
    /// Write output to a file instead of stdout.
    #[arg(short, long)]
    output: Option<String>,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(EXIT_ERROR, format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| fail(EXIT_ERROR, format!("reading {path}: {e}")))
    }
}

fn emit(out: &OutputArg, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| fail(EXIT_ERROR, format!("writing {path}: {e}")))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn mode_of(open: bool) -> Mode {
    if open {
        Mode::Open
    } else {
        Mode::Closed
    }
}

fn default_budget() -> Option<u64> {
    std::env::var("CFGEO_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn parse_bound(s: &str) -> Result<cfgeo::geometry::Rational, Failure> {
    io::parse_number(s).map_err(|e| fail(EXIT_ERROR, e))
}

fn strip_error(e: StripError) -> Failure {
    match e {
        StripError::NotConflictFree { .. } => fail(EXIT_NEGATIVE, e),
        _ => fail(EXIT_ERROR, e),
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::BuildGraph { instance, out } => {
            let inst =
                io::parse_instance(&read_input(&instance)?).map_err(|e| fail(EXIT_ERROR, e))?;
            let g = build_intersection_graph(&inst);
            emit(&out, &io::write_graph(&g))?;
            Ok(0)
        }
        Command::ColorStrips {
            instance,
            experimental_height_2,
            out,
        } => {
            let inst =
                io::parse_instance(&read_input(&instance)?).map_err(|e| fail(EXIT_ERROR, e))?;
            let coloring = if experimental_height_2 {
                greedy_height2_experimental(&inst, (1, 2))
                    .map(|(c, _)| c)
                    .map_err(strip_error)?
            } else {
                match inst.kind() {
                    ShapeKind::UnitDisk => color_unit_disks(&inst).map_err(strip_error)?,
                    ShapeKind::UnitSquare => color_unit_squares(&inst).map_err(strip_error)?,
                    other => {
                        return Err(fail(
                            EXIT_ERROR,
                            format!("color-strips expects unit disks or unit squares, got {other}"),
                        ))
                    }
                }
            };
            emit(&out, &io::write_coloring(&coloring))?;
            Ok(0)
        }
        Command::ColorIntervals { instance, out } => {
            let inst =
                io::parse_instance(&read_input(&instance)?).map_err(|e| fail(EXIT_ERROR, e))?;
            let coloring = color_intervals(&inst).map_err(strip_error)?;
            emit(&out, &io::write_coloring(&coloring))?;
            Ok(0)
        }
        Command::Solve {
            graph,
            k,
            chromatic,
            open,
            budget,
            out,
        } => {
            let g = io::parse_graph(&read_input(&graph)?).map_err(|e| fail(EXIT_ERROR, e))?;
            let mode = mode_of(open);
            let budget = budget.or_else(default_budget);
            if chromatic {
                match cf_chromatic_number_with_budget(&g, mode, budget) {
                    ChromaticOutcome::Found { k, witness } => {
                        emit(
                            &out,
                            &format!("chi_cf {k}\n{}", io::write_coloring(&witness)),
                        )?;
                        Ok(0)
                    }
                    ChromaticOutcome::NoneExists => {
                        emit(&out, "chi_cf none\n")?;
                        Ok(EXIT_NEGATIVE)
                    }
                    ChromaticOutcome::OutOfBudget => {
                        emit(&out, "inconclusive budget-exhausted\n")?;
                        Ok(EXIT_INCONCLUSIVE)
                    }
                }
            } else {
                let k = k.ok_or_else(|| {
                    fail(EXIT_ERROR, "solve requires either --k <K> or --chromatic")
                })?;
                match solve_cf_k(&g, k, mode, budget) {
                    SolveOutcome::Colorable(witness) => {
                        emit(
                            &out,
                            &format!("colorable {k}\n{}", io::write_coloring(&witness)),
                        )?;
                        Ok(0)
                    }
                    SolveOutcome::Infeasible => {
                        emit(&out, &format!("not-colorable {k}\n"))?;
                        Ok(EXIT_NEGATIVE)
                    }
                    SolveOutcome::OutOfBudget => {
                        emit(&out, "inconclusive budget-exhausted\n")?;
                        Ok(EXIT_INCONCLUSIVE)
                    }
                }
            }
        }
        Command::SolveChain { chain, out } => {
            let m = io::parse_chain(&read_input(&chain)?).map_err(|e| fail(EXIT_ERROR, e))?;
            if m == 0 {
                return Err(fail(EXIT_ERROR, "chain length must be at least 1"));
            }
            let (k, witness) = cfgeo::chains::chain_min_colors(m);
            let witness: Vec<String> = witness.iter().map(|c| c.to_string()).collect();
            emit(&out, &format!("k {k}\nwitness {}\n", witness.join(" ")))?;
            Ok(0)
        }
        Command::Verify {
            graph,
            coloring,
            open,
        } => {
            let g = io::parse_graph(&read_input(&graph)?).map_err(|e| fail(EXIT_ERROR, e))?;
            let coloring = io::parse_coloring(&read_input(&coloring)?)
                .map_err(|e| fail(EXIT_ERROR, e))?
                .into_partial_coloring(g.n())
                .map_err(|e| fail(EXIT_ERROR, e))?;
            let report =
                verify_cf(&g, &coloring, mode_of(open)).map_err(|e| fail(EXIT_ERROR, e))?;
            if report.valid {
                println!("valid");
                Ok(0)
            } else {
                println!("invalid");
                for v in report.violations {
                    println!("violation {v}");
                }
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Gen { what } => run_gen(what),
        Command::Render {
            instance,
            coloring,
            out,
        } => {
            let inst =
                io::parse_instance(&read_input(&instance)?).map_err(|e| fail(EXIT_ERROR, e))?;
            let coloring = match coloring {
                Some(path) => Some(
                    io::parse_coloring(&read_input(&path)?)
                        .map_err(|e| fail(EXIT_ERROR, e))?
                        .into_partial_coloring(inst.len())
                        .map_err(|e| fail(EXIT_ERROR, e))?,
                ),
                None => None,
            };
            let svg = cfgeo::svg::render_svg(&inst, coloring.as_ref())
                .map_err(|e| fail(EXIT_ERROR, e))?;
            emit(&out, &svg)?;
            Ok(0)
        }
        Command::Recurrence { family, n, closed } => {
            if n == 0 {
                return Err(fail(EXIT_ERROR, "recurrences are defined for n >= 1"));
            }
            match family {
                RecurrenceFamily::Gn => println!("{}", recurrence_gn(n)),
                RecurrenceFamily::Dk => println!("{}", recurrence_dk_one_copy(n)),
                RecurrenceFamily::Gbar => {
                    if closed {
                        let v = gbar_closed_form(n);
                        println!("{}", io::format_number(&v));
                    } else {
                        println!("{}", gbar_recurrence(n));
                    }
                }
            }
            Ok(0)
        }
        Command::Census { max_n, guard } => {
            let table = census_with_guard(max_n, guard).map_err(|e| fail(EXIT_ERROR, e))?;
            for (n, max_chi) in table {
                println!("n {n} max_chi_cf {max_chi}");
            }
            Ok(0)
        }
    }
}

fn run_gen(what: GenCommand) -> Result<u8, Failure> {
    match what {
        GenCommand::Gn { n, out } => {
            let gg = gen_gn(n).map_err(|e| fail(EXIT_ERROR, e))?;
            emit(&out, &io::write_gadget_graph(&gg))?;
            Ok(0)
        }
        GenCommand::Dk { k, out } => {
            let gg = gen_dk(k).map_err(|e| fail(EXIT_ERROR, e))?;
            emit(&out, &io::write_gadget_graph(&gg))?;
            Ok(0)
        }
        GenCommand::Chain { m, out } => {
            if m == 0 {
                return Err(fail(EXIT_ERROR, "chain length must be at least 1"));
            }
            emit(&out, &io::write_chain(m))?;
            Ok(0)
        }
        GenCommand::Bull { instance, out } => {
            if instance {
                emit(&out, &io::write_instance(&bull_interval_instance()))?;
            } else {
                emit(&out, &io::write_graph(&bull_graph()))?;
            }
            Ok(0)
        }
        GenCommand::C4 { out } => {
            emit(&out, &io::write_graph(&c4_graph()))?;
            Ok(0)
        }
        GenCommand::Star { n, out } => {
            emit(&out, &io::write_graph(&star_graph(n)))?;
            Ok(0)
        }
        GenCommand::Path { n, out } => {
            emit(&out, &io::write_graph(&path_graph(n)))?;
            Ok(0)
        }
        GenCommand::Reduction { formula, out } => {
            let phi = io::parse_formula(&read_input(&formula)?).map_err(|e| fail(EXIT_ERROR, e))?;
            let gg = gen_reduction(&phi).map_err(|e| fail(EXIT_ERROR, e))?;
            emit(&out, &io::write_gadget_graph(&gg))?;
            Ok(0)
        }
        GenCommand::Random {
            kind,
            n,
            width,
            height,
            seed,
            out,
        } => {
            let width = parse_bound(&width)?;
            let height = parse_bound(&height)?;
            let inst = random_instance(kind.into(), n, &width, &height, seed);
            emit(&out, &io::write_instance(&inst))?;
            Ok(0)
        }
    }
}
