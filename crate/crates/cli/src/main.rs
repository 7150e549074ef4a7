//! `diet`: build symmetric discrete interval exchanges, count their orbits,
//! walk the tree of circular compositions and sweep cyclic types.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diet_core::cyclictype::render_table;
use diet_core::recursion::StepTag;
use diet_core::tree::{export_tree, ExportFormat};
use diet_core::{
    brute_orbit_count, build_diet, conjecture_sweep, count_orbits, enumerate, trace, Composition,
    CompositionStream,
};
use serde::Serialize;

const USAGE_ERROR: u8 = 1;
const MISMATCH: u8 = 2;

#[derive(Parser)]
#[command(
    name = "diet",
    version,
    about = "Symmetric discrete interval exchanges"
)]
struct Cli {
    /// Output format; `dot` is accepted only by `tree`.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cycles and cyclic type of T for a composition like 3,5,4,2.
    Orbits { composition: String },
    /// Count orbits with the subtractive recursion.
    Count {
        composition: String,
        /// List every reduction step.
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate the tree of circular compositions up to a sum.
    Tree {
        #[arg(long)]
        max_sum: u64,
    },
    /// Compare the recursion with brute force on every composition up to a sum.
    Verify {
        #[arg(long)]
        max_sum: u64,
    },
    /// Count distinct cycle lengths over all compositions of given lengths.
    Conjecture {
        /// One or more part counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        length: Vec<usize>,
        #[arg(long)]
        max_sum: u64,
    },
}

/// A failure that ends the process with a given status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE_ERROR,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_ERROR } else { 0 });
        }
    };
    let mut stdout = io::stdout().lock();
    match run(cli, &mut stdout) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = stdout.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Tree { .. }) {
        return Err(usage("--format dot is only available for `tree`"));
    }
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Orbits { composition } => orbits(&parse(&composition)?, json, out),
        Command::Count { composition, trace } => count(&parse(&composition)?, trace, json, out),
        Command::Tree { max_sum } => tree(max_sum, cli.format, out),
        Command::Verify { max_sum } => verify(max_sum, json, out),
        Command::Conjecture { length, max_sum } => conjecture(&length, max_sum, json, out),
    }
}

fn parse(text: &str) -> Result<Composition, Failure> {
    text.parse()
        .map_err(|e: diet_core::Error| usage(e.to_string()))
}

fn emit(out: &mut impl Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("write failed: {e}")))?;
    Ok(0)
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct OrbitsDoc<'a> {
    composition: &'a [u64],
    cycles: &'a [Vec<u64>],
    cyclic_type: Vec<(u64, u64)>,
}

fn orbits(c: &Composition, json: bool, out: &mut impl Write) -> Outcome {
    let p = build_diet(c);
    let ty = p.cyclic_type();
    if json {
        let doc = OrbitsDoc {
            composition: c.parts(),
            cycles: p.cycles(),
            cyclic_type: ty.pairs().to_vec(),
        };
        emit(out, &to_json(&doc))
    } else {
        emit(out, &format!("{p}\ntype: {ty}\n"))
    }
}

#[derive(Serialize)]
struct StepRecord<'a> {
    composition: &'a [u64],
    t: Option<usize>,
    abs_s: Option<u64>,
    tag: StepTag,
    contribution: u64,
    successor: Option<&'a [u64]>,
}

fn count(c: &Composition, with_trace: bool, json: bool, out: &mut impl Write) -> Outcome {
    if !with_trace {
        let n = count_orbits(c);
        return emit(out, &if json { to_json(&n) } else { format!("{n}\n") });
    }
    let tr = trace(c);
    if !json {
        return emit(out, &format!("{tr}\n"));
    }
    let records: Vec<_> = tr
        .steps
        .iter()
        .map(|e| StepRecord {
            composition: e.composition.parts(),
            t: e.step.pivot.map(|p| p.t),
            abs_s: e.step.pivot.map(|p| p.abs_s),
            tag: e.step.tag,
            contribution: e.step.contribution,
            successor: e.step.successor.as_ref().map(Composition::parts),
        })
        .collect();
    emit(out, &to_json(&records))
}

fn tree(max_sum: u64, format: Format, out: &mut impl Write) -> Outcome {
    if max_sum < 2 {
        return Err(usage("tree needs --max-sum of at least 2"));
    }
    let nodes: Vec<_> = enumerate(max_sum).collect();
    eprintln!("{} nodes", nodes.len());
    let format = match format {
        Format::Text => ExportFormat::Text,
        Format::Json => ExportFormat::Json,
        Format::Dot => ExportFormat::Dot,
    };
    emit(out, &export_tree(&nodes, format))
}

#[derive(Serialize)]
struct VerifyDoc {
    max_sum: u64,
    checked: u64,
    mismatches: Vec<Vec<u64>>,
}

fn verify(max_sum: u64, json: bool, out: &mut impl Write) -> Outcome {
    if max_sum < 1 {
        return Err(usage("verify needs --max-sum of at least 1"));
    }
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for c in CompositionStream::up_to(max_sum) {
        checked += 1;
        let (fast, slow) = (count_orbits(&c), brute_orbit_count(&c));
        if fast != slow {
            eprintln!("mismatch at {c}: recursion {fast}, brute force {slow}");
            mismatches.push(c.parts().to_vec());
        }
    }
    let code = if mismatches.is_empty() { 0 } else { MISMATCH };
    if json {
        let doc = VerifyDoc {
            max_sum,
            checked,
            mismatches,
        };
        emit(out, &to_json(&doc))?;
    } else {
        emit(
            out,
            &format!(
                "checked {checked} compositions, {} mismatches\n",
                mismatches.len()
            ),
        )?;
    }
    Ok(code)
}

fn conjecture(lengths: &[usize], max_sum: u64, json: bool, out: &mut impl Write) -> Outcome {
    for &r in lengths {
        if r < 1 {
            return Err(usage("--length must be at least 1"));
        }
        if max_sum < r as u64 {
            return Err(usage(format!(
                "--max-sum {max_sum} is below the length {r}"
            )));
        }
    }
    let reports: Vec<_> = lengths
        .iter()
        .map(|&r| conjecture_sweep(r, max_sum))
        .collect();
    if json {
        emit(out, &to_json(&reports))
    } else {
        emit(out, &render_table(&reports))
    }
}
