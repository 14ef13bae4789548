use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kgraph::graph::ENUM_CAP_ENV;
use kgraph::ktheory::{k_groups_with, qualifies_rs, KOptions, Mode};
use kgraph::words::{check_rs, RsOptions};
use kgraph::{
    dual, iterated_dual_serializations, parse_kgraph, serialize_kgraph, Degree, Error, KGraph,
    Limits,
};

#[derive(Parser)]
#[command(name = "kgraph", version, about = "Inspect finite higher-rank graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a graph file.
    Validate { file: PathBuf },
    /// Structural report and coordinate matrices.
    Info { file: PathBuf },
    /// Write the dual graph `p Lambda`.
    Dual {
        #[arg(long)]
        p: Degree,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Coordinate matrices of the graph or of one of its duals.
    Matrices {
        file: PathBuf,
        #[arg(long, value_name = "P")]
        dual: Option<Degree>,
    },
    /// Conditions (H0)-(H3) on the {0,1} matrices of the graph, or of its
    /// dual when the graph's own matrices are not {0,1}.
    RsCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        h3_bound: u32,
        #[arg(long, default_value = "2,2")]
        h3_margin: Degree,
        /// Use `p Lambda` even when the graph's matrices are already {0,1}.
        #[arg(long, value_name = "P")]
        dual: Option<Degree>,
    },
    /// K-groups of the graph algebra.
    Ktheory {
        file: PathBuf,
        #[arg(long, default_value = "dual")]
        mode: Mode,
        #[arg(long)]
        p: Option<Degree>,
    },
    /// Every path of a given degree with range `--from`.
    Paths {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        degree: Degree,
    },
    /// Compare `q (p Lambda)` with `(p + q) Lambda`.
    CompareDuals {
        file: PathBuf,
        #[arg(long)]
        p: Degree,
        #[arg(long)]
        q: Degree,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RankMismatch(..)
            | Error::ColorOutOfRange { .. }
            | Error::UnknownVertex(_)
            | Error::UnknownEdge(_) => Failure::usage(e.to_string()),
            _ => Failure::failed(e.to_string()),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn limits() -> Result<Limits, Failure> {
    match std::env::var(ENUM_CAP_ENV) {
        Ok(v) if v.trim().parse::<u32>().is_err() => Err(Failure::usage(format!(
            "{ENUM_CAP_ENV} must be a non-negative integer, got {v:?}"
        ))),
        _ => Ok(Limits::from_env()),
    }
}

fn load(file: &FsPath) -> Result<KGraph, Failure> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(file)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", file.display())))?
    };
    let g = parse_kgraph(&text).map_err(|e| {
        Failure::failed(format!("{}: invalid graph\n{}", file.display(), e.to_string().trim_end()))
    })?;
    Ok(g.with_limits(limits()?))
}

fn matrices_text(g: &KGraph) -> String {
    let mut out = String::new();
    for (i, m) in g.coordinate_matrices().iter().enumerate() {
        let _ = write!(out, "M{} =\n{m}", i + 1);
    }
    out
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => {
            let g = load(&file)?;
            Ok((
                format!(
                    "ok: rank {}, {} vertices, {} edges, {} squares\n",
                    g.rank(),
                    g.vertex_count(),
                    g.edge_count(),
                    g.squares().len()
                ),
                0,
            ))
        }
        Command::Info { file } => {
            let g = load(&file)?;
            let s = g.structural_report();
            let mut out = String::new();
            let _ = writeln!(out, "rank = {}", g.rank());
            let _ = writeln!(out, "vertices = {}", g.vertex_count());
            let _ = writeln!(out, "edges = {}", g.edge_count());
            let _ = writeln!(out, "squares = {}", g.squares().len());
            let _ = writeln!(out, "finite = {}", s.finite);
            let _ = writeln!(out, "row_finite = {}", s.row_finite);
            let _ = writeln!(out, "no_sources = {}", s.no_sources);
            let _ = writeln!(out, "no_sinks = {}", s.no_sinks);
            let _ = writeln!(out, "strongly_connected = {}", s.strongly_connected);
            out.push_str(&matrices_text(&g));
            Ok((out, 0))
        }
        Command::Dual { p, file, output } => {
            let g = load(&file)?;
            let text = serialize_kgraph(&dual(&g, &p)?.graph);
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| Failure::failed(format!("cannot write {}: {e}", path.display())))?;
                    Ok((String::new(), 0))
                }
                None => Ok((text, 0)),
            }
        }
        Command::Matrices { file, dual: p } => {
            let g = load(&file)?;
            let target = match p {
                Some(p) => dual(&g, &p)?.graph,
                None => g,
            };
            Ok((matrices_text(&target), 0))
        }
        Command::RsCheck {
            file,
            h3_bound,
            h3_margin,
            dual: p,
        } => {
            let g = load(&file)?;
            if g.rank() != 2 {
                return Err(Error::NotRankTwo(g.rank()).into());
            }
            let zero_one = g.coordinate_matrices().iter().all(|m| m.is_zero_one());
            let p = match p {
                Some(p) => Some(p),
                None if zero_one => None,
                None => Some(Degree::ones(2)),
            };
            let target = match &p {
                Some(p) => dual(&g, p)?.graph,
                None => g,
            };
            let opts = RsOptions { h3_bound, h3_margin };
            let r = check_rs(&target, &opts)?;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "matrices = {}",
                p.map_or("graph".to_string(), |p| format!("dual {p}"))
            );
            for (key, value) in [("h0", r.h0), ("h1a", r.h1a), ("h1b", r.h1b), ("h2", r.h2)] {
                let _ = writeln!(out, "{key} = {value}");
            }
            let _ = writeln!(out, "h3 = {}", r.h3_verdict);
            let _ = writeln!(out, "h3.bound = {}", r.h3_bound);
            let _ = writeln!(out, "h3.margin = {}", r.h3_margin);
            let _ = writeln!(out, "h3.window = {}", r.h3_window.len());
            let failures: Vec<String> = r.h3_failures.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(out, "h3.failures = {}", failures.join(" "));
            for (m, w) in &r.h3_witnesses {
                let _ = writeln!(
                    out,
                    "h3.witness {m} = {} at {}",
                    target.render_path(&w.path),
                    w.position
                );
            }
            Ok((out, 0))
        }
        Command::Ktheory { file, mode, p } => {
            let g = load(&file)?;
            let opts = KOptions {
                p,
                ..KOptions::default()
            };
            let r = k_groups_with(&g, mode, &opts)?;
            let torsion = |t: &[kgraph::BigInt]| {
                t.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            };
            let h = &r.hypotheses;
            let mut out = String::new();
            let _ = writeln!(out, "K0 = {}", r.k0);
            let _ = writeln!(out, "K1 = {}", r.k1);
            let _ = writeln!(out);
            let _ = writeln!(out, "mode = {}", r.mode);
            let _ = writeln!(out, "p = {}", r.p);
            let _ = writeln!(out, "k0.rank = {}", r.k0_rank());
            let _ = writeln!(out, "k0.torsion = {}", torsion(&r.k0.torsion));
            let _ = writeln!(out, "k1.rank = {}", r.k1_rank());
            let _ = writeln!(out, "k1.torsion = {}", torsion(&r.k1.torsion));
            let _ = writeln!(out, "hyp.finite = {}", h.finite);
            let _ = writeln!(out, "hyp.no_sources = {}", h.no_sources);
            let _ = writeln!(out, "hyp.no_sinks = {}", h.no_sinks);
            let _ = writeln!(out, "hyp.strongly_connected = {}", h.strongly_connected);
            let _ = writeln!(
                out,
                "hyp.aperiodic_on_window = {}",
                h.aperiodic_on_window.map_or("unchecked".to_string(), |v| v.to_string())
            );
            if let Some(b) = h.h3_bound {
                let _ = writeln!(out, "hyp.h3_bound = {b}");
            }
            let applies = h.all_hold();
            let _ = writeln!(out, "hyp.conclusion = {}", if applies { "applies" } else { "not asserted" });
            if !applies {
                let q = qualifies_rs(&g, &RsOptions::default());
                for line in q.to_string().lines() {
                    let _ = writeln!(out, "# {line}");
                }
            }
            Ok((out, 0))
        }
        Command::Paths { file, from, degree } => {
            let g = load(&file)?;
            let v = g.vertex(&from)?;
            let mut out = String::new();
            for lam in g.paths_from(v, &degree)? {
                let _ = writeln!(
                    out,
                    "{} {} {}",
                    g.render_path(&lam),
                    g.vertex_name(lam.range()),
                    g.vertex_name(lam.source())
                );
            }
            Ok((out, 0))
        }
        Command::CompareDuals { file, p, q } => {
            let g = load(&file)?;
            let (iterated, direct) = iterated_dual_serializations(&g, &p, &q)?;
            if iterated == direct {
                Ok((format!("equal: q(p Lambda) = (p+q) Lambda for p = {p}, q = {q}\n"), 0))
            } else {
                Ok((
                    format!("differ: p = {p}, q = {q}\n--- iterated\n{iterated}--- direct\n{direct}"),
                    1,
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
