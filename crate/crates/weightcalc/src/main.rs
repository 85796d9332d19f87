use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use weightcalc::conditions::{
    genmg, growth_index, has_mg, matrix_quotient_root, mg_root_quotient, mixed_quotient_root, omega_conditions,
    strong_nonquasianalyticity, weak_separativity,
};
use weightcalc::config::{OutputFormat, RunConfig};
use weightcalc::io::{label, load_spec, sequence_csv, to_json};
use weightcalc::matrix::matrix_of;
use weightcalc::report::{Status, TheoremReport};
use weightcalc::seqcore::{check_lc, relate, LogSequence, RelationKind};
use weightcalc::theorems::{self, suite_status, verify_root_chain_random, TheoremId, TheoremParams};
use weightcalc::weightfun::{omega_of, young_conjugate};
use weightcalc::{Error, Result};

/// Weight sequences, associated weight functions, weight matrices and growth-condition checks.
#[derive(Parser)]
#[command(name = "weightcalc", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Truncation P used for family specs without an explicit truncation.
    #[arg(long = "P", global = true, default_value_t = 4096)]
    truncation: usize,
    /// Output directory; defaults to $WEIGHTCALC_OUT, then the current directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Format of the artifact written for commands that support both.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Upper bound of the growth-index scan.
    #[arg(long, global = true, default_value_t = 16)]
    d_max: usize,
    /// Density of the logarithmic evaluation grid.
    #[arg(long, global = true)]
    points_per_decade: Option<usize>,
    /// Relative plateau threshold between consecutive windows.
    #[arg(long, global = true)]
    eps_rel: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a sequence and export it.
    Seq {
        /// Inline family such as `gevrey:1`, or a JSON spec file.
        #[arg(long, alias = "seq")]
        spec: String,
        #[arg(long, value_enum)]
        export: Option<Format>,
    },
    /// Associated weight function of a sequence.
    Omega {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum)]
        export: Option<Format>,
    },
    /// Young conjugate of the associated weight function.
    Conjugate {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum)]
        export: Option<Format>,
    },
    /// Rows of the associated weight matrix, one CSV per index.
    Matrix {
        /// Sequence whose associated weight function generates the matrix.
        #[arg(long)]
        omega: String,
        /// Comma-separated row indices.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.5, 1.0, 2.0])]
        ell: Vec<f64>,
    },
    /// Evaluate one growth condition.
    Check {
        condition: Condition,
        #[arg(long)]
        seq: String,
        /// Exponent of the generalized moderate growth test.
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Integer parameter of mixed conditions.
        #[arg(long, default_value_t = 1)]
        a: usize,
        /// Second sequence for mixed conditions and relations.
        #[arg(long)]
        against: Option<String>,
    },
    /// Moderate growth index.
    Gindex {
        #[arg(long)]
        seq: String,
    },
    /// Run a theorem check, or the whole suite with `verify all`.
    Verify(VerifyArgs),
    /// Summary of conditions, growth index and the theorem suite for one sequence.
    Report {
        #[arg(long)]
        seq: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Condition {
    Lc,
    Mg,
    MgRootQuotient,
    Genmg,
    MixedQuotientRoot,
    Weaksep,
    Le,
    Preceq,
    Approx,
    Omega0,
    Omega1,
    Omega3,
    Omega4,
    Omega6,
    StrongNq,
    MatrixQuotientRoot,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id, or `all`.
    theorem: String,
    /// Input sequences in order; missing ones default to the first.
    #[arg(long, num_args = 1..)]
    inputs: Vec<String>,
    /// Sequence for `verify all`.
    #[arg(long)]
    family: Option<String>,
    /// Seed for random inputs; recorded in the output.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random sequences for `root-chain` without inputs.
    #[arg(long, default_value_t = 50)]
    count: usize,
    /// Integer dilation or shift parameter.
    #[arg(long)]
    a: Option<usize>,
    /// Exponent for `genmg-omega`.
    #[arg(long)]
    d: Option<usize>,
    /// Power for `doubling-power-transfer`.
    #[arg(long)]
    ell: Option<f64>,
    /// Base row index for `row-growth-index`.
    #[arg(long)]
    x: Option<f64>,
    /// Row multiplier for `row-growth-index`.
    #[arg(long)]
    c: Option<usize>,
    /// Comma-separated root orders for `root-chain`.
    #[arg(long, value_delimiter = ',')]
    ells: Option<Vec<usize>>,
}

/// Overall status of a command; decides the exit code.
struct Outcome {
    status: Status,
}

struct Ctx {
    cfg: RunConfig,
    out: PathBuf,
    format: Format,
}

impl Ctx {
    fn new(g: &Global) -> Result<Ctx> {
        let mut cfg = RunConfig::default().with_truncation(g.truncation);
        if g.truncation == 0 {
            return Err(Error::Parameter("--P must be positive".into()));
        }
        cfg.d_max = g.d_max.max(1);
        if let Some(n) = g.points_per_decade {
            cfg.grid.points_per_decade = n.max(1);
        }
        if let Some(e) = g.eps_rel {
            if e.is_nan() || e <= 0.0 {
                return Err(Error::Parameter(format!("--eps-rel must be positive, got {e}")));
            }
            cfg.ladder.eps_rel = e;
        }
        cfg.format = match g.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        };
        let out = g
            .out
            .clone()
            .or_else(|| std::env::var_os("WEIGHTCALC_OUT").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("."));
        Ok(Ctx {
            cfg,
            out,
            format: g.format,
        })
    }

    fn seq(&self, spec: &str) -> Result<LogSequence> {
        load_spec(spec, self.cfg.truncation)
    }

    /// Write an artifact and echo it to stdout.
    fn emit(&self, name: &str, body: &str) -> Result<()> {
        std::fs::create_dir_all(&self.out)
            .map_err(|e| Error::Parameter(format!("cannot create {}: {e}", self.out.display())))?;
        let path = self.out.join(name);
        std::fs::write(&path, body).map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))?;
        print!("{body}");
        eprintln!("wrote {}", path.display());
        Ok(())
    }

    fn emit_json<T: Serialize + ?Sized>(&self, name: &str, value: &T) -> Result<()> {
        self.emit(&format!("{name}.json"), &to_json(value))
    }

    /// Write an artifact without echoing it.
    fn side_file(&self, name: &str, body: &str) -> Result<()> {
        std::fs::create_dir_all(&self.out)
            .map_err(|e| Error::Parameter(format!("cannot create {}: {e}", self.out.display())))?;
        let path = self.out.join(name);
        std::fs::write(&path, body).map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))?;
        eprintln!("wrote {}", path.display());
        Ok(())
    }
}

fn ok() -> Result<Outcome> {
    Ok(Outcome {
        status: Status::Consistent,
    })
}

fn run(cli: Cli) -> Result<Outcome> {
    let ctx = Ctx::new(&cli.global)?;
    match cli.command {
        Command::Seq { spec, export } => {
            let m = ctx.seq(&spec)?;
            match export.unwrap_or(ctx.format) {
                Format::Csv => ctx.emit("seq.csv", &sequence_csv(&m))?,
                Format::Json => ctx.emit_json(
                    "seq",
                    &json!({
                        "sequence": label(&m),
                        "truncation": m.truncation(),
                        "lc": check_lc(&m, &ctx.cfg.ladder),
                        "log_m": m.log_m(),
                        "log_mu": m.log_mu(),
                    }),
                )?,
            }
            ok()
        }
        Command::Omega { seq, export } => {
            let m = ctx.seq(&seq)?;
            let w = omega_of(&m)?;
            match export.unwrap_or(ctx.format) {
                Format::Csv => ctx.emit("omega.csv", &w.to_csv())?,
                Format::Json => ctx.emit_json(
                    "omega",
                    &json!({
                        "sequence": label(&m),
                        "u_max": w.u_max(),
                        "breakpoints": w.breakpoints(),
                        "slopes": w.slopes(),
                        "conditions": omega_conditions(&w, &ctx.cfg),
                    }),
                )?,
            }
            ok()
        }
        Command::Conjugate { seq, export } => {
            let m = ctx.seq(&seq)?;
            let c = young_conjugate(&omega_of(&m)?);
            match export.unwrap_or(ctx.format) {
                Format::Csv => ctx.emit("conjugate.csv", &c.to_csv())?,
                Format::Json => ctx.emit_json(
                    "conjugate",
                    &json!({
                        "sequence": label(&m),
                        "x_max": c.x_max(),
                        "x": c.xs(),
                        "value": c.values(),
                    }),
                )?,
            }
            ok()
        }
        Command::Matrix { omega, ell } => {
            let m = ctx.seq(&omega)?;
            let view = matrix_of(&omega_of(&m)?);
            let mut rows = Vec::new();
            for &l in &ell {
                let row = view.row(l)?;
                let file = format!("matrix_ell_{l}.csv");
                ctx.side_file(&file, &sequence_csv(&row))?;
                rows.push(json!({ "ell": l, "truncation": row.truncation(), "file": file }));
            }
            ctx.emit_json("matrix", &json!({ "sequence": label(&m), "rows": rows }))?;
            ok()
        }
        Command::Check {
            condition,
            seq,
            d,
            a,
            against,
        } => {
            let m = ctx.seq(&seq)?;
            let other = || -> Result<LogSequence> {
                let spec = against
                    .as_deref()
                    .ok_or_else(|| Error::Parameter("this condition needs --against <spec>".into()))?;
                ctx.seq(spec)
            };
            let cfg = &ctx.cfg;
            let omega = || omega_of(&m);
            let doc = match condition {
                Condition::Lc => json!(check_lc(&m, &cfg.ladder)),
                Condition::Mg => json!(has_mg(&m, cfg)),
                Condition::MgRootQuotient => json!(mg_root_quotient(&m, cfg)),
                Condition::Genmg => json!(genmg(&m, d, cfg)?),
                Condition::MixedQuotientRoot => json!(mixed_quotient_root(&other()?, &m, a, cfg)?),
                Condition::Weaksep => json!(weak_separativity(&m, &other()?, cfg)),
                Condition::Le => json!(relate(&m, &other()?, RelationKind::Le, &cfg.ladder)),
                Condition::Preceq => json!(relate(&m, &other()?, RelationKind::Preceq, &cfg.ladder)),
                Condition::Approx => json!(relate(&m, &other()?, RelationKind::Approx, &cfg.ladder)),
                Condition::Omega0 => json!(omega_conditions(&omega()?, cfg).omega0),
                Condition::Omega1 => json!(omega_conditions(&omega()?, cfg).omega1),
                Condition::Omega3 => json!(omega_conditions(&omega()?, cfg).omega3),
                Condition::Omega4 => json!(omega_conditions(&omega()?, cfg).omega4),
                Condition::Omega6 => json!(omega_conditions(&omega()?, cfg).omega6),
                Condition::StrongNq => json!(strong_nonquasianalyticity(&omega()?, cfg)),
                Condition::MatrixQuotientRoot => json!(matrix_quotient_root(&omega()?, cfg)?),
            };
            let name = condition
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            ctx.emit_json(&format!("check-{name}"), &doc)?;
            ok()
        }
        Command::Gindex { seq } => {
            let m = ctx.seq(&seq)?;
            let g = growth_index(&m, ctx.cfg.d_max, &ctx.cfg);
            ctx.emit_json("gindex", &json!({ "sequence": label(&m), "result": g }))?;
            ok()
        }
        Command::Verify(args) => verify(&ctx, args),
        Command::Report { seq } => {
            let m = ctx.seq(&seq)?;
            let cfg = &ctx.cfg;
            let w = omega_of(&m)?;
            let suite = theorems::verify_all(&m, cfg);
            let status = suite_status(&suite);
            let summary: Vec<_> = suite
                .iter()
                .map(|r| json!({ "theorem": r.theorem, "inputs": r.inputs, "status": r.status }))
                .collect();
            ctx.emit_json(
                "report",
                &json!({
                    "sequence": label(&m),
                    "lc": check_lc(&m, &cfg.ladder),
                    "mg": has_mg(&m, cfg),
                    "growth_index": growth_index(&m, cfg.d_max, cfg),
                    "omega": omega_conditions(&w, cfg),
                    "suite": summary,
                    "status": status,
                }),
            )?;
            Ok(Outcome { status })
        }
    }
}

fn verify(ctx: &Ctx, args: VerifyArgs) -> Result<Outcome> {
    let mut cfg = ctx.cfg.clone();
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if args.theorem == "all" {
        let spec = args
            .family
            .as_deref()
            .or(args.inputs.first().map(String::as_str))
            .ok_or_else(|| Error::Parameter("`verify all` needs --family <spec>".into()))?;
        let m = ctx.seq(spec)?;
        let reports = theorems::verify_all(&m, &cfg);
        let status = suite_status(&reports);
        ctx.emit_json(
            "verify-all",
            &json!({ "family": label(&m), "seed": cfg.seed, "status": status, "reports": reports }),
        )?;
        return Ok(Outcome { status });
    }
    let id: TheoremId = args.theorem.parse()?;
    let d = TheoremParams::default();
    let params = TheoremParams {
        a: args.a.unwrap_or(d.a),
        d: args.d.unwrap_or(d.d),
        ell: args.ell.unwrap_or(d.ell),
        x: args.x.unwrap_or(d.x),
        c: args.c.unwrap_or(d.c),
        ells: args.ells.clone().unwrap_or(d.ells),
        probes: d.probes,
    };
    let report: TheoremReport = if id == TheoremId::RootChain && args.inputs.is_empty() {
        let p = cfg.truncation.min(512);
        verify_root_chain_random(cfg.seed, args.count, p, &params.ells)
    } else {
        let inputs = args
            .inputs
            .iter()
            .map(|s| ctx.seq(s))
            .collect::<Result<Vec<_>>>()?;
        let mut r = theorems::run(id, &inputs, &params, &cfg)?;
        if args.seed.is_some() {
            r.seed = Some(cfg.seed);
        }
        r
    };
    let status = report.status;
    ctx.emit_json(&format!("verify-{}", id.as_str()), &report)?;
    Ok(Outcome { status })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(o) if o.status == Status::ViolationFound => {
            eprintln!("status: violation-found");
            ExitCode::from(2)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
