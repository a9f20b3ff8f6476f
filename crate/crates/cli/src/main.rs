//! Command-line front end: plain-text graph/orientation/script files in,
//! plans, verifications and class tables out.
//!
//! Exit codes: 0 success, 1 input error, 2 not equivalent (or verification
//! failure), 3 unknown.

use clap::{Parser, Subcommand, ValueEnum};
use revmult::graph_core::{cycle_length_sets, find_score_automorphism, Automorphism, ScoreMode};
use revmult::io::{
    emit_mult_graph, emit_orientation, emit_script_steps, parse_mult_graph, parse_orientation,
    parse_script_steps,
};
use revmult::oracle::{f_classes, obstruction, ObstructionId};
use revmult::planner::{plan, verify_script, FamilyChoice, Outcome, PlanRequest, Strategy};
use revmult::{FamilySpec, MultGraph, Orientation};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "revmult", version, about = "cycle-reversal planning for orientations of vertex-multiplications", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    SameScore,
    Parity,
}

impl From<ModeArg> for ScoreMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::SameScore => ScoreMode::Exact,
            ModeArg::Parity => ScoreMode::Parity,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Auto,
    C3,
    C4,
    C3c4,
    Cc3,
    Cc4,
    Tt3,
    Base,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Ddg,
    Subdivision,
    Merge,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExampleArg {
    BipartiteLift,
    C4freePair,
    BridgeTree,
    Tt3freePair,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a parent graph file into the multiplication's vertex and edge
    /// lists.
    Mult {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print the score list of an orientation.
    Scores {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        orient: PathBuf,
    },
    /// Print the chordless cycle lengths and cycles of the parent graph.
    Chordless {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Emit the difference digraph of two orientations under the best
    /// score-matching automorphism.
    Ddg {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    /// Plan a reversal script transforming one orientation into (a relabeling
    /// of) the other.
    Plan {
        #[arg(long, value_enum, default_value = "same-score")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "auto")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "ddg")]
        strategy: StrategyArg,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        /// Write the script here in addition to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a script file and check it reaches the target exactly.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        script: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    /// Enumerate all orientations and print one line per reversal class.
    Classes {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "same-score")]
        mode: ModeArg,
        /// Directory for the class representative files.
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Write the graph and orientation files of a canned obstruction pair.
    Example {
        #[arg(value_enum)]
        id: ExampleArg,
        #[arg(long)]
        out_dir: PathBuf,
        /// Extra singleton partite sets for the bipartite lift.
        #[arg(long, default_value_t = 1)]
        extra: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are not input errors
            use clap::error::ErrorKind::*;
            let _ = e.print();
            return match e.kind() {
                DisplayHelp | DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<MultGraph, String> {
    parse_mult_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_orientation(m: &MultGraph, path: &Path) -> Result<Orientation, String> {
    parse_orientation(m, &read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn family_spec(m: &MultGraph, f: FamilyArg, mode: ScoreMode) -> Result<FamilySpec, String> {
    use revmult::FamilyKind::*;
    Ok(match f {
        FamilyArg::Auto => return Err("family `auto` is only valid for plan".into()),
        FamilyArg::C3 => FamilySpec::directed([3]),
        FamilyArg::C4 => FamilySpec::directed([4]),
        FamilyArg::C3c4 => FamilySpec::directed([3, 4]),
        FamilyArg::Cc3 => FamilySpec::any_orientation([3]),
        FamilyArg::Cc4 => FamilySpec::any_orientation([4]),
        FamilyArg::Tt3 => FamilySpec::new([(3, Tt3)]),
        FamilyArg::Base => match mode {
            ScoreMode::Exact => FamilySpec::directed_base(m.parent()),
            ScoreMode::Parity => FamilySpec::oriented_base(m.parent()),
        },
    })
}

fn family_choice(f: FamilyArg) -> Result<FamilyChoice, String> {
    Ok(match f {
        FamilyArg::Auto => FamilyChoice::Auto,
        FamilyArg::C3 => return Err("plan does not support the bare c3 family".into()),
        FamilyArg::C4 => FamilyChoice::C4,
        FamilyArg::C3c4 => FamilyChoice::C3C4,
        FamilyArg::Cc3 => FamilyChoice::Cc3,
        FamilyArg::Cc4 => FamilyChoice::Cc4,
        FamilyArg::Tt3 => FamilyChoice::Tt3,
        FamilyArg::Base => FamilyChoice::Base,
    })
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Mult { graph } => {
            let m = load_graph(&graph)?;
            println!("vertices {}", m.vertex_count());
            for v in m.vertices() {
                println!("{v}");
            }
            println!("edges {}", m.edge_count());
            for (u, v) in m.edges() {
                println!("{u} {v}");
            }
            Ok(0)
        }
        Command::Scores { graph, orient } => {
            let m = load_graph(&graph)?;
            let d = load_orientation(&m, &orient)?;
            println!("{}", d.scores(&m));
            Ok(0)
        }
        Command::Chordless { graph } => {
            let m = load_graph(&graph)?;
            let sets = cycle_length_sets(m.parent());
            let lens: Vec<String> =
                sets.chordless_lengths.iter().map(|l| l.to_string()).collect();
            println!("lengths {}", lens.join(" "));
            for cyc in &sets.chordless_cycles {
                let vs: Vec<String> = cyc.iter().map(|v| v.to_string()).collect();
                println!("{}", vs.join(" "));
            }
            Ok(0)
        }
        Command::Ddg { graph, from, to } => {
            let m = load_graph(&graph)?;
            let d = load_orientation(&m, &from)?;
            let d2 = load_orientation(&m, &to)?;
            let (f, label) =
                if let Some(f) = find_score_automorphism(&m, &d, &d2, ScoreMode::Exact) {
                    (f, "exact")
                } else if let Some(f) = find_score_automorphism(&m, &d, &d2, ScoreMode::Parity) {
                    (f, "parity")
                } else {
                    (Automorphism::identity(&m), "none")
                };
            let ddg = revmult::difference::build_ddg(&m, &d, &d2, &f);
            println!("# balanced: {label}");
            for a in ddg.arcs() {
                println!("{a}");
            }
            Ok(0)
        }
        Command::Plan { mode, family, strategy, graph, from, to, out } => {
            let m = load_graph(&graph)?;
            let d = load_orientation(&m, &from)?;
            let d2 = load_orientation(&m, &to)?;
            let req = PlanRequest {
                mode: mode.into(),
                family: family_choice(family)?,
                strategy: match strategy {
                    StrategyArg::Ddg => Strategy::DdgRefine,
                    StrategyArg::Subdivision => Strategy::Subdivision,
                    StrategyArg::Merge => Strategy::BipartiteMerge,
                },
            };
            let report = plan(&m, &d, &d2, req).map_err(|e| e.to_string())?;
            match report.outcome {
                Outcome::Script(script) => {
                    let text = emit_script_steps(&script.steps);
                    if let Some(path) = out {
                        write(&path, &text)?;
                    }
                    if let Some(f) = &report.automorphism {
                        for (a, b) in f.iter() {
                            println!("# map {a} -> {b}");
                        }
                    }
                    print!("{text}");
                    Ok(0)
                }
                Outcome::NotEquivalent(reason) => {
                    eprintln!("not equivalent: {reason}");
                    Ok(2)
                }
                Outcome::Unknown(reason) => {
                    eprintln!("unknown: {reason}");
                    Ok(3)
                }
            }
        }
        Command::Verify { graph, from, script, to } => {
            let m = load_graph(&graph)?;
            let d = load_orientation(&m, &from)?;
            let target = load_orientation(&m, &to)?;
            let steps = parse_script_steps(&read(&script)?)
                .map_err(|e| format!("{}: {e}", script.display()))?;
            match verify_script(&m, &d, &steps, &target, None) {
                Ok(()) => {
                    println!("ok: {} steps", steps.len());
                    Ok(0)
                }
                Err(v) => {
                    eprintln!("violation: {v}");
                    Ok(2)
                }
            }
        }
        Command::Classes { graph, family, mode, out_dir } => {
            let m = load_graph(&graph)?;
            let fam = family_spec(&m, family, mode.into())?;
            let part = f_classes(&m, &fam).map_err(|e| e.to_string())?;
            std::fs::create_dir_all(&out_dir).map_err(|e| format!("{}: {e}", out_dir.display()))?;
            for (id, members) in part.classes().iter().enumerate() {
                let rep = part.representative(&m, id);
                let path = out_dir.join(format!("class_{id}.or"));
                write(&path, &emit_orientation(&rep))?;
                println!("{id} {} {} {}", members.len(), rep.scores(&m), path.display());
            }
            Ok(0)
        }
        Command::Example { id, out_dir, extra } => {
            let oid = match id {
                ExampleArg::BipartiteLift => ObstructionId::BipartiteLift { extra },
                ExampleArg::C4freePair => ObstructionId::C4FreePair,
                ExampleArg::BridgeTree => ObstructionId::BridgeTree,
                ExampleArg::Tt3freePair => ObstructionId::Tt3FreePair,
            };
            let (m, d, d2) = obstruction(oid).map_err(|e| e.to_string())?;
            std::fs::create_dir_all(&out_dir).map_err(|e| format!("{}: {e}", out_dir.display()))?;
            write(&out_dir.join("graph.g"), &emit_mult_graph(&m))?;
            write(&out_dir.join("d.or"), &emit_orientation(&d))?;
            write(&out_dir.join("d2.or"), &emit_orientation(&d2))?;
            let mut summary = String::new();
            writeln!(summary, "scores {}", d.scores(&m)).unwrap();
            print!("{summary}");
            println!("wrote graph.g, d.or, d2.or to {}", out_dir.display());
            Ok(0)
        }
    }
}
