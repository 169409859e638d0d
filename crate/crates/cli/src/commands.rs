//! Subcommand dispatch. Exit codes: 0 success/valid, 1 invalid verdict,
//! 2 inconclusive or resource/budget exhaustion, 64 usage errors.

use std::collections::HashMap;
use std::io::Read;

use umcf::coloring::{verify_conflict_free, verify_proper, verify_unique_maximum, Verdict};
use umcf::game::{
    play_game, translated_maximizer, vcs_value, vp_value, GameKind, GreedyMax, GreedyMin,
    Maximizer, Minimizer, OptimalComponentMax, OptimalComponentMin, OptimalPathMax, OptimalPathMin,
    RandomMax, RandomMin, VpOutcome,
};
use umcf::generate::{complete_binary_tree, complete_graph, grid_graph, hedgehog, path_graph};
use umcf::graph::Graph;
use umcf::reduction::{build_reduction, check_reduction_equivalence};
use umcf::solve::{chi_cf_exact, chi_exact, chi_um_exact, grid_bounds, CfSolve};

use crate::experiments::{run_experiment, Level, Status};
use crate::format::{
    parse_coloring, parse_graph, serialize_coloring, serialize_graph, ColoringDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

const DEFAULT_BUDGET: u64 = 10_000_000;

const USAGE: &str = "\
usage: umcf <command> ...

commands:
  gen {path|grid|clique|btree|hedgehog} --param <x> [-o FILE]
  solve {chi|um|cf} GRAPH [--budget N] [-o CERT]
  verify {proper|um|cf} GRAPH COLORING [--budget N]
  game {vcs|vp|play} GRAPH [--game component|path] [--max STRAT] [--min STRAT]
       [--seed S] [--budget N]
  reduce GRAPH -o PREFIX
  bounds grid --m M
  experiment {paths|hedgehog|grid|reduction|games} [--level desk|stretch]
             [--seed S] [--budget N]

GRAPH and COLORING are file paths ('-' reads stdin). Strategies: optimal,
greedy, random, translated (maximizer on grids only).
";

pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(code) => code,
        Err(CommandError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprint!("{USAGE}");
            EXIT_USAGE
        }
        Err(CommandError::Failed(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INCONCLUSIVE
        }
    }
}

enum CommandError {
    Usage(String),
    Failed(String),
}

fn usage(msg: impl Into<String>) -> CommandError {
    CommandError::Usage(msg.into())
}

fn failed(msg: impl std::fmt::Display) -> CommandError {
    CommandError::Failed(msg.to_string())
}

/// Splits `args` into positionals and `--flag value` pairs.
fn parse_args(
    args: &[String],
    flags: &[&str],
) -> Result<(Vec<String>, HashMap<String, String>), CommandError> {
    let mut positional = Vec::new();
    let mut values = HashMap::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        if let Some(name) = arg
            .strip_prefix("--")
            .or_else(|| (arg == "-o").then_some("o"))
        {
            if !flags.contains(&name) {
                return Err(usage(format!("unknown option `{arg}`")));
            }
            let value = it
                .next()
                .ok_or_else(|| usage(format!("option `{arg}` needs a value")))?;
            values.insert(name.to_string(), value.clone());
        } else {
            positional.push(arg.clone());
        }
    }
    Ok((positional, values))
}

fn parse_u64(
    values: &HashMap<String, String>,
    key: &str,
    default: u64,
) -> Result<u64, CommandError> {
    match values.get(key) {
        None => Ok(default),
        Some(raw) => raw
            .parse()
            .map_err(|_| usage(format!("option --{key} needs an integer, got `{raw}`"))),
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, CommandError> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| failed(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| failed(format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<Graph, CommandError> {
    parse_graph(&read_input(path)?).map_err(|e| failed(format!("{path}: {e}")))
}

fn write_output(path: Option<&String>, bytes: &[u8]) -> Result<(), CommandError> {
    match path {
        Some(p) => {
            std::fs::write(p, bytes).map_err(|e| failed(format!("writing {p}: {e}")))?;
            println!("wrote {p}");
        }
        None => print!("{}", String::from_utf8_lossy(bytes)),
    }
    Ok(())
}

fn dispatch(args: &[String]) -> Result<i32, CommandError> {
    let Some(command) = args.first() else {
        return Err(usage("missing command"));
    };
    let rest = &args[1..];
    match command.as_str() {
        "gen" => cmd_gen(rest),
        "solve" => cmd_solve(rest),
        "verify" => cmd_verify(rest),
        "game" => cmd_game(rest),
        "reduce" => cmd_reduce(rest),
        "bounds" => cmd_bounds(rest),
        "experiment" => cmd_experiment(rest),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(EXIT_OK)
        }
        other => Err(usage(format!("unknown command `{other}`"))),
    }
}

fn cmd_gen(args: &[String]) -> Result<i32, CommandError> {
    let (positional, values) = parse_args(args, &["param", "o"])?;
    let [family] = positional.as_slice() else {
        return Err(usage("gen takes exactly one family"));
    };
    let param: usize = values
        .get("param")
        .ok_or_else(|| usage("gen requires --param"))?
        .parse()
        .map_err(|_| usage("--param needs a nonnegative integer"))?;
    let graph = match family.as_str() {
        "path" => path_graph(param),
        "grid" => {
            if param == 0 {
                return Err(usage("grid needs --param >= 1"));
            }
            grid_graph(param).0
        }
        "clique" => complete_graph(param),
        "btree" => {
            if param == 0 {
                return Err(usage("btree needs --param >= 1"));
            }
            complete_binary_tree(param as u32)
        }
        "hedgehog" => hedgehog(param as u32).map_err(failed)?.0,
        other => return Err(usage(format!("unknown family `{other}`"))),
    };
    write_output(values.get("o"), &serialize_graph(&graph))?;
    Ok(EXIT_OK)
}

fn cmd_solve(args: &[String]) -> Result<i32, CommandError> {
    let (positional, values) = parse_args(args, &["budget", "o"])?;
    let [which, graph_path] = positional.as_slice() else {
        return Err(usage("solve takes a problem and a graph file"));
    };
    let g = load_graph(graph_path)?;
    let budget = parse_u64(&values, "budget", DEFAULT_BUDGET)?;
    let (k, cert, family) = match which.as_str() {
        "chi" => {
            let (k, cert) = chi_exact(&g).map_err(failed)?;
            (k, cert, "chi")
        }
        "um" => {
            let (k, cert) = chi_um_exact(&g).map_err(failed)?;
            (k, cert, "um")
        }
        "cf" => match chi_cf_exact(&g, budget).map_err(failed)? {
            CfSolve::Exact { k, coloring, .. } => (k, coloring, "cf"),
            CfSolve::Inconclusive { lower, .. } => {
                println!("inconclusive: chi_cf >= {lower} (budget {budget} exhausted)");
                return Ok(EXIT_INCONCLUSIVE);
            }
        },
        other => return Err(usage(format!("unknown problem `{other}`"))),
    };
    println!("k {k}");
    let doc = ColoringDoc::new(cert).with_meta("method", family);
    write_output(values.get("o"), &serialize_coloring(&doc))?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &[String]) -> Result<i32, CommandError> {
    let (positional, values) = parse_args(args, &["budget"])?;
    let [kind, graph_path, coloring_path] = positional.as_slice() else {
        return Err(usage(
            "verify takes a kind, a graph file, and a coloring file",
        ));
    };
    let g = load_graph(graph_path)?;
    let doc = parse_coloring(&read_input(coloring_path)?)
        .map_err(|e| failed(format!("{coloring_path}: {e}")))?;
    let budget = parse_u64(&values, "budget", DEFAULT_BUDGET)?;
    let verdict = match kind.as_str() {
        "proper" => verify_proper(&g, &doc.coloring),
        "um" => verify_unique_maximum(&g, &doc.coloring),
        "cf" => verify_conflict_free(&g, &doc.coloring, budget),
        other => return Err(usage(format!("unknown verification kind `{other}`"))),
    }
    .map_err(failed)?;
    let stats = verdict.stats();
    match verdict {
        Verdict::Valid { .. } => {
            println!("valid (paths examined: {})", stats.paths_examined);
            Ok(EXIT_OK)
        }
        Verdict::Invalid { witness, .. } => {
            let ids: Vec<String> = witness.vertices().iter().map(|v| v.to_string()).collect();
            println!(
                "invalid witness={} (paths examined: {})",
                ids.join(","),
                stats.paths_examined
            );
            Ok(EXIT_INVALID)
        }
        Verdict::Inconclusive { .. } => {
            println!(
                "inconclusive: budget of {budget} exhausted after {} paths",
                stats.paths_examined
            );
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn make_maximizer(
    name: &str,
    seed: u64,
    side: Option<usize>,
) -> Result<Box<dyn Maximizer>, CommandError> {
    match name {
        "optimal-component" => Ok(Box::new(OptimalComponentMax)),
        "optimal-path" => Ok(Box::new(OptimalPathMax::default())),
        "greedy" => Ok(Box::new(GreedyMax::default())),
        "random" => Ok(Box::new(RandomMax::new(seed))),
        "translated" => {
            let side =
                side.ok_or_else(|| usage("the translated strategy needs a square grid graph"))?;
            Ok(Box::new(translated_maximizer(side).map_err(failed)?))
        }
        other => Err(usage(format!("unknown maximizer `{other}`"))),
    }
}

fn make_minimizer(name: &str, seed: u64) -> Result<Box<dyn Minimizer>, CommandError> {
    match name {
        "optimal-component" => Ok(Box::new(OptimalComponentMin)),
        "optimal-path" => Ok(Box::new(OptimalPathMin::default())),
        "greedy" => Ok(Box::new(GreedyMin)),
        "random" => Ok(Box::new(RandomMin::new(seed))),
        other => Err(usage(format!("unknown minimizer `{other}`"))),
    }
}

fn cmd_game(args: &[String]) -> Result<i32, CommandError> {
    let (positional, values) = parse_args(args, &["game", "max", "min", "seed", "budget"])?;
    let [which, graph_path] = positional.as_slice() else {
        return Err(usage("game takes a mode and a graph file"));
    };
    let g = load_graph(graph_path)?;
    let seed = parse_u64(&values, "seed", 1)?;
    let budget = parse_u64(&values, "budget", DEFAULT_BUDGET)?;
    match which.as_str() {
        "vcs" => {
            let v = vcs_value(&g).map_err(failed)?;
            println!("vcs {v}");
            Ok(EXIT_OK)
        }
        "vp" => match vp_value(&g, budget).map_err(failed)? {
            VpOutcome::Exact(v) => {
                println!("vp {v}");
                Ok(EXIT_OK)
            }
            VpOutcome::Inconclusive { lower, upper } => {
                println!("inconclusive: vp in [{lower}, {upper}] (budget {budget} exhausted)");
                Ok(EXIT_INCONCLUSIVE)
            }
        },
        "play" => {
            let kind = match values.get("game").map(String::as_str) {
                None | Some("component") => GameKind::Component,
                Some("path") => GameKind::Path,
                Some(other) => return Err(usage(format!("unknown game kind `{other}`"))),
            };
            let default_max = match kind {
                GameKind::Component => "optimal-component",
                GameKind::Path => "optimal-path",
            };
            let side = (0..=g.vertex_count())
                .find(|s| s * s == g.vertex_count())
                .filter(|_| g.vertex_count() > 0);
            let max_name = values.get("max").map_or(default_max, String::as_str);
            let min_name = values.get("min").map_or(default_max, String::as_str);
            let mut maximizer = make_maximizer(max_name, seed, side)?;
            let mut minimizer = make_minimizer(min_name, seed.wrapping_add(1))?;
            let transcript =
                play_game(&g, kind, maximizer.as_mut(), minimizer.as_mut()).map_err(failed)?;
            print!("{}", transcript.to_log());
            println!("length {}", transcript.length());
            Ok(EXIT_OK)
        }
        other => Err(usage(format!("unknown game mode `{other}`"))),
    }
}

fn cmd_reduce(args: &[String]) -> Result<i32, CommandError> {
    let (positional, values) = parse_args(args, &["o", "budget"])?;
    let [graph_path] = positional.as_slice() else {
        return Err(usage("reduce takes a graph file"));
    };
    let prefix = values
        .get("o")
        .ok_or_else(|| usage("reduce requires -o PREFIX"))?;
    let g = load_graph(graph_path)?;
    let art = build_reduction(&g).map_err(failed)?;
    let budget = parse_u64(&values, "budget", DEFAULT_BUDGET)?;

    let graph_file = format!("{prefix}.graph");
    std::fs::write(&graph_file, serialize_graph(&art.gstar))
        .map_err(|e| failed(format!("writing {graph_file}: {e}")))?;
    let mut doc = ColoringDoc::new(art.coloring.clone()).with_meta("family", "reduction");
    let n = art.base_n();
    doc = doc.with_meta("base_n", &n.to_string());
    for i in 1..=n {
        doc = doc.with_meta(&format!("role.{}", art.up[i - 1]), &format!("up:{i}"));
        doc = doc.with_meta(&format!("role.{}", art.down[i - 1]), &format!("down:{i}"));
    }
    for (&(i, j), &v) in &art.connectors {
        doc = doc.with_meta(&format!("role.{v}"), &format!("conn:{i},{j}"));
    }
    let coloring_file = format!("{prefix}.col");
    std::fs::write(&coloring_file, serialize_coloring(&doc))
        .map_err(|e| failed(format!("writing {coloring_file}: {e}")))?;
    println!("wrote {graph_file}");
    println!("wrote {coloring_file}");

    let report = check_reduction_equivalence(&g, budget).map_err(failed)?;
    match report.agreement {
        Some(agree) => {
            println!(
                "hamiltonian_path={} coloring_conflict_free={} equivalence={}",
                report.hamiltonian.is_some(),
                report.cf_verdict.is_valid(),
                if agree { "holds" } else { "VIOLATED" }
            );
            Ok(if agree { EXIT_OK } else { EXIT_INVALID })
        }
        None => {
            println!("equivalence check inconclusive at budget {budget}");
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn cmd_bounds(args: &[String]) -> Result<i32, CommandError> {
    let (positional, values) = parse_args(args, &["m"])?;
    let [target] = positional.as_slice() else {
        return Err(usage("bounds takes a target (grid)"));
    };
    if target != "grid" {
        return Err(usage(format!("unknown bounds target `{target}`")));
    }
    let m: usize = values
        .get("m")
        .ok_or_else(|| usage("bounds grid requires --m"))?
        .parse()
        .map_err(|_| usage("--m needs an integer"))?;
    if m < 2 {
        return Err(usage("bounds are stated for m >= 2"));
    }
    println!("bound | formula | value");
    for bound in grid_bounds(m) {
        println!(
            "{} | {} | {}",
            bound.id,
            bound.formula,
            bound.value.map_or("-".to_string(), |v| format!("{v:.6}"))
        );
    }
    Ok(EXIT_OK)
}

fn cmd_experiment(args: &[String]) -> Result<i32, CommandError> {
    let (positional, values) = parse_args(args, &["level", "seed", "budget"])?;
    let [name] = positional.as_slice() else {
        return Err(usage("experiment takes a name"));
    };
    let level = match values.get("level").map(String::as_str) {
        None | Some("desk") => Level::Desk,
        Some("stretch") => Level::Stretch,
        Some(other) => return Err(usage(format!("unknown level `{other}`"))),
    };
    let seed = parse_u64(&values, "seed", 1)?;
    let budget = parse_u64(&values, "budget", DEFAULT_BUDGET)?;
    let tables = run_experiment(name, level, seed, budget).map_err(usage)?;
    let mut worst = Status::Pass;
    for table in &tables {
        print!("{}", table.render());
        println!();
        match table.status() {
            Status::Fail => worst = Status::Fail,
            Status::Inconclusive if worst == Status::Pass => worst = Status::Inconclusive,
            _ => {}
        }
    }
    Ok(match worst {
        Status::Pass => EXIT_OK,
        Status::Fail => EXIT_INVALID,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    })
}
