//! `hopfmod`: command-line front end for workspaces of Hopf algebras and modules.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopfmod::hopf::validate_hopf;
use hopfmod::module::{iso_test_seeded, validate_module, IsoResult};
use hopfmod::projective::{complexity, is_projective, minimal_resolution, top, DEFAULT_STEPS};
use hopfmod::scenarios::{run_scenario, SCENARIO_IDS};
use hopfmod::variety::{
    count_points, rank_variety_ideal, rank_variety_membership, smash_variety_report, variety_dimension, VarietyHandle,
    VarietyMode, DEFAULT_SEED,
};
use hopfmod::workspace::{load_workspace, save_workspace, ModuleSpec, Workspace, WorkspaceFile};
use hopfmod::Module;

/// Text output truncates ideals after this many generators.
const TEXT_GENERATOR_LIMIT: usize = 200;

#[derive(Parser)]
#[command(
    name = "hopfmod",
    version,
    about = "Exact computations with Hopf algebras and their modules"
)]
struct Cli {
    /// Workspace file; defaults to the bundled Klein four workspace.
    #[arg(long, global = true, value_name = "PATH")]
    workspace: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized searches (overrides HOPFMOD_SEED and the workspace seed).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms.
    Validate { algebra: String },
    /// Module operations.
    #[command(subcommand)]
    Module(ModuleCommand),
    /// Tensor product of two modules.
    Tensor {
        m: String,
        n: String,
        /// Store the product in the workspace file under this name.
        #[arg(long, value_name = "NAME")]
        out: Option<String>,
    },
    /// Dual module.
    Dual { m: String },
    /// Whether a module is projective.
    Projective { m: String },
    /// Minimal projective resolution.
    Resolve {
        m: String,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
    },
    /// Complexity from the growth of a minimal resolution.
    Complexity {
        m: String,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
    },
    /// Rank variety of a module over an elementary abelian group algebra.
    Rankvar(RankvarArgs),
    /// Component varieties of a module over a smash coproduct.
    VarietyReport { m: String },
    /// Isomorphism test.
    Iso { m: String, n: String },
    /// Built-in scenarios.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
    /// Export a module as JSON (actions) or CSV (Betti table).
    Export {
        name: String,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ModuleCommand {
    /// Check that the action is an algebra homomorphism.
    Check { module: String },
}

#[derive(Args)]
struct RankvarArgs {
    m: String,
    /// Generators of the ideal of minors (default).
    #[arg(long, conflicts_with = "membership")]
    ideal: bool,
    /// Decide membership pointwise, without an ideal.
    #[arg(long)]
    membership: bool,
    /// Count points over F_{p^e}.
    #[arg(long, value_name = "E")]
    ext: Option<u32>,
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Run a scenario by id, by workspace name, or `all`.
    Run {
        id: String,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// List scenario ids.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Csv,
}

enum CliError {
    /// Bad input: unknown names, malformed files, unsupported requests.
    Input(String),
    /// A mathematical check did not hold.
    Claim(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Claim(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

fn input<E: Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

struct Ctx {
    ws: Workspace,
    path: Option<PathBuf>,
    json: bool,
    seed: u64,
}

impl Ctx {
    fn module(&self, name: &str) -> Result<Module, CliError> {
        self.ws.module(name).map_err(input)
    }

    /// Prints either the text or the JSON rendering.
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&value()).expect("json values serialize")
            );
        } else {
            print!("{}", ensure_newline(text()));
        }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn resolve_seed(flag: Option<u64>, file: &WorkspaceFile) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    if let Ok(v) = std::env::var("HOPFMOD_SEED") {
        return v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("HOPFMOD_SEED={v:?} is not an unsigned integer")));
    }
    Ok(file.seed.unwrap_or(DEFAULT_SEED))
}

fn actions_json(m: &Module) -> Value {
    let a = m.algebra();
    let mut actions = serde_json::Map::new();
    for (name, elem) in a.generators() {
        actions.insert(name, json!(m.act(&elem).to_strings()));
    }
    json!({
        "module": m.label(),
        "algebra": a.name(),
        "field": a.field().name(),
        "dim": m.dim(),
        "actions": actions,
    })
}

fn actions_text(m: &Module) -> String {
    let a = m.algebra();
    let mut out = format!(
        "module {} over {} ({}), dim {}\n",
        m.label(),
        a.name(),
        a.field().name(),
        m.dim()
    );
    if m.dim() == 0 {
        return out;
    }
    for (name, elem) in a.generators() {
        out.push_str(&format!("  {name}:\n"));
        for row in m.act(&elem).to_strings() {
            out.push_str(&format!("    [{}]\n", row.join(", ")));
        }
    }
    out
}

fn describe_mode(v: &VarietyHandle) -> &'static str {
    match v.mode {
        VarietyMode::Ideal if v.origin_only => "origin",
        VarietyMode::Ideal => "ideal",
        VarietyMode::Whole => "whole space",
        VarietyMode::Origin => "origin",
        VarietyMode::MembershipOnly => "membership only",
    }
}

fn cmd_validate(ctx: &Ctx, name: &str) -> Result<(), CliError> {
    let a = ctx.ws.algebra(name).map_err(input)?;
    let report = validate_hopf(&a);
    ctx.emit(
        || {
            let mut out = format!(
                "algebra {} (dim {}): {}\n",
                report.algebra,
                report.dim,
                if report.passed() { "valid" } else { "INVALID" }
            );
            for c in &report.checks {
                out.push_str(&format!("  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.axiom));
                if let Some(w) = &c.witness {
                    out.push_str(&format!(": {w}"));
                }
                out.push('\n');
            }
            out
        },
        || json!({ "passed": report.passed(), "report": report }),
    );
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(CliError::Claim(format!("axiom {} fails", c.axiom))),
    }
}

fn cmd_module_check(ctx: &Ctx, name: &str) -> Result<(), CliError> {
    let m = ctx.module(name)?;
    let report = validate_module(&m);
    ctx.emit(
        || {
            let mut out = format!(
                "module {} (dim {}): {}\n",
                report.module,
                m.dim(),
                if report.passed() { "valid" } else { "INVALID" }
            );
            for c in &report.checks {
                out.push_str(&format!(
                    "  [{}] {}",
                    if c.passed { "pass" } else { "FAIL" },
                    c.relation
                ));
                if let Some(w) = &c.witness {
                    out.push_str(&format!(": {w}"));
                }
                out.push('\n');
            }
            out
        },
        || json!({ "passed": report.passed(), "report": report }),
    );
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(CliError::Claim(format!("relation {} fails", c.relation))),
    }
}

fn cmd_tensor(ctx: &Ctx, m: &str, n: &str, out: Option<&str>) -> Result<(), CliError> {
    let label = out.map(str::to_string).unwrap_or_else(|| format!("{m}⊗{n}"));
    let t = ctx.module(m)?.tensor(&ctx.module(n)?).map_err(input)?.relabel(&label);
    if let Some(name) = out {
        let path = ctx
            .path
            .as_deref()
            .ok_or_else(|| CliError::Input("--out needs a --workspace file to store the product in".into()))?;
        store_module(&ctx.ws.file, path, name, ModuleSpec::Tensor(vec![m.into(), n.into()]))?;
    }
    ctx.emit(|| actions_text(&t), || actions_json(&t));
    Ok(())
}

fn store_module(file: &WorkspaceFile, path: &Path, name: &str, spec: ModuleSpec) -> Result<(), CliError> {
    if name.contains('@') {
        return Err(CliError::Input(format!("module name {name:?} must not contain '@'")));
    }
    if file.modules.contains_key(name) {
        return Err(CliError::Input(format!(
            "module {name:?} already exists in {}",
            path.display()
        )));
    }
    let mut file = file.clone();
    file.modules.insert(name.into(), spec);
    save_workspace(path, &file).map_err(input)
}

fn cmd_dual(ctx: &Ctx, m: &str) -> Result<(), CliError> {
    let d = ctx.module(m)?.dual().relabel(&format!("{m}*"));
    ctx.emit(|| actions_text(&d), || actions_json(&d));
    Ok(())
}

fn cmd_projective(ctx: &Ctx, name: &str) -> Result<(), CliError> {
    let m = ctx.module(name)?;
    let p = is_projective(&m).map_err(input)?;
    let t = top(&m).map_err(input)?;
    ctx.emit(
        || p.to_string(),
        || json!({ "module": name, "dim": m.dim(), "projective": p, "top": t }),
    );
    Ok(())
}

fn cmd_resolve(ctx: &Ctx, name: &str, steps: usize) -> Result<(), CliError> {
    let m = ctx.module(name)?;
    let profile = minimal_resolution(&m, steps).map_err(input)?;
    ctx.emit(|| profile.render_text(), || json!(profile));
    Ok(())
}

fn cmd_complexity(ctx: &Ctx, name: &str, steps: usize) -> Result<(), CliError> {
    let m = ctx.module(name)?;
    let profile = minimal_resolution(&m, steps).map_err(input)?;
    let cx = complexity(&profile).map_err(input)?;
    ctx.emit(
        || cx.to_string(),
        || json!({ "module": name, "steps": steps, "dims_p": profile.dims_p(), "complexity": cx }),
    );
    Ok(())
}

fn cmd_rankvar(ctx: &Ctx, args: &RankvarArgs) -> Result<(), CliError> {
    let m = ctx.module(&args.m)?;
    let mut v = if args.membership {
        rank_variety_membership(&m)
    } else {
        rank_variety_ideal(&m)
    }
    .map_err(input)?;
    if args.ext == Some(0) {
        return Err(CliError::Input("--ext must be at least 1".into()));
    }
    let points = match args.ext {
        Some(e) => Some((e, count_points(&v, e).map_err(input)?)),
        None => None,
    };
    let dimension = if v.characteristic > 0 {
        Some(variety_dimension(&mut v, args.ext.unwrap_or(2).max(2)).map_err(input)?)
    } else {
        None
    };
    let p = v.characteristic;
    ctx.emit(
        || {
            let mut out = format!(
                "rank variety of {} in {}^{} ({})\n",
                args.m,
                v.field,
                v.ambient,
                describe_mode(&v)
            );
            if v.mode == VarietyMode::Ideal {
                out.push_str(&format!("  generators ({}):\n", v.generators.len()));
                for g in v.generators.iter().take(TEXT_GENERATOR_LIMIT) {
                    out.push_str(&format!("    {}\n", g.format()));
                }
                if v.generators.len() > TEXT_GENERATOR_LIMIT {
                    out.push_str(&format!(
                        "    ... {} more (use --json)\n",
                        v.generators.len() - TEXT_GENERATOR_LIMIT
                    ));
                }
            }
            if let Some(note) = &v.note {
                out.push_str(&format!("  note: {note}\n"));
            }
            if let Some(ok) = v.self_check {
                out.push_str(&format!(
                    "  rank-criterion self-check: {}\n",
                    if ok { "agrees" } else { "DISAGREES" }
                ));
            }
            if let Some((e, n)) = points {
                out.push_str(&format!("  points over F_{p}^{e}: {n}\n"));
            }
            if let Some(d) = &dimension {
                let kind = if d.exact {
                    "exact"
                } else if d.heuristic {
                    "heuristic"
                } else {
                    "estimate"
                };
                out.push_str(&format!("  dimension: {} ({kind}, {})\n", d.dim, d.method));
            }
            out
        },
        || {
            json!({
                "module": args.m,
                "variety": v,
                "generators": v.generators.iter().map(|g| g.format()).collect::<Vec<_>>(),
                "points": points.map(|(e, n)| json!({ "ext": e, "count": n })),
                "dimension": dimension,
            })
        },
    );
    if v.self_check == Some(false) {
        return Err(CliError::Claim(
            "ideal membership disagrees with the rank criterion".into(),
        ));
    }
    Ok(())
}

fn cmd_variety_report(ctx: &Ctx, name: &str) -> Result<(), CliError> {
    let m = ctx.module(name)?;
    let report = smash_variety_report(&m).map_err(input)?;
    ctx.emit(|| report.render_text(), || json!(report));
    Ok(())
}

fn cmd_iso(ctx: &Ctx, m: &str, n: &str) -> Result<(), CliError> {
    let (a, b) = (ctx.module(m)?, ctx.module(n)?);
    let r = iso_test_seeded(&a, &b, ctx.seed).map_err(input)?;
    ctx.emit(
        || format!("{}: {}", r.verdict(), r.detail()),
        || {
            let witness = match &r {
                IsoResult::Isomorphic(w) => Some(json!({
                    "field": w.matrix.field().name(),
                    "over_extension": w.over_extension,
                    "matrix": w.matrix.to_strings(),
                })),
                _ => None,
            };
            json!({ "m": m, "n": n, "verdict": r.verdict(), "detail": r.detail(), "witness": witness })
        },
    );
    Ok(())
}

fn cmd_scenario_run(ctx: &Ctx, id: &str, out: Option<&Path>) -> Result<(), CliError> {
    let ids: Vec<String> = if id == "all" {
        SCENARIO_IDS.iter().map(|s| s.to_string()).collect()
    } else if let Some(cfg) = ctx.ws.file.scenarios.get(id) {
        vec![cfg.scenario.clone()]
    } else {
        vec![id.to_string()]
    };
    let mut results = Vec::new();
    for sid in &ids {
        results.push(run_scenario(sid).map_err(input)?);
    }
    let value = if results.len() == 1 {
        json!(results[0])
    } else {
        json!(results)
    };
    let report = serde_json::to_string_pretty(&value).expect("scenario results serialize") + "\n";
    if let Some(path) = out {
        std::fs::write(path, &report).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    if ctx.json {
        print!("{report}");
    } else {
        for r in &results {
            print!("{}", r.render_text());
        }
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Claim(format!(
            "scenario claims failed: {}",
            failed.join(", ")
        )))
    }
}

fn cmd_scenario_list(ctx: &Ctx) -> Result<(), CliError> {
    ctx.emit(
        || {
            let mut out = SCENARIO_IDS.join("\n");
            for (name, cfg) in &ctx.ws.file.scenarios {
                out.push_str(&format!("\n{name} -> {}", cfg.scenario));
            }
            out
        },
        || json!({ "scenarios": SCENARIO_IDS, "workspace": ctx.ws.file.scenarios }),
    );
    Ok(())
}

fn cmd_export(ctx: &Ctx, name: &str, format: ExportFormat, steps: usize, out: Option<&Path>) -> Result<(), CliError> {
    let m = ctx.module(name)?;
    let body = match format {
        ExportFormat::Json => serde_json::to_string_pretty(&actions_json(&m)).expect("json values serialize") + "\n",
        ExportFormat::Csv => minimal_resolution(&m, steps).map_err(input)?.to_csv(),
    };
    match out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match &cli.workspace {
        Some(p) => load_workspace(p).map_err(input)?,
        None => WorkspaceFile::klein_four(),
    };
    let seed = resolve_seed(cli.seed, &file)?;
    let ctx = Ctx {
        ws: Workspace::new(file),
        path: cli.workspace.clone(),
        json: cli.json,
        seed,
    };
    match &cli.command {
        Command::Validate { algebra } => cmd_validate(&ctx, algebra),
        Command::Module(ModuleCommand::Check { module }) => cmd_module_check(&ctx, module),
        Command::Tensor { m, n, out } => cmd_tensor(&ctx, m, n, out.as_deref()),
        Command::Dual { m } => cmd_dual(&ctx, m),
        Command::Projective { m } => cmd_projective(&ctx, m),
        Command::Resolve { m, steps } => cmd_resolve(&ctx, m, *steps),
        Command::Complexity { m, steps } => cmd_complexity(&ctx, m, *steps),
        Command::Rankvar(args) => cmd_rankvar(&ctx, args),
        Command::VarietyReport { m } => cmd_variety_report(&ctx, m),
        Command::Iso { m, n } => cmd_iso(&ctx, m, n),
        Command::Scenario(ScenarioCommand::Run { id, out }) => cmd_scenario_run(&ctx, id, out.as_deref()),
        Command::Scenario(ScenarioCommand::List) => cmd_scenario_list(&ctx),
        Command::Export {
            name,
            format,
            steps,
            out,
        } => cmd_export(&ctx, name, *format, *steps, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // internal failures surface as one line, not a backtrace
    std::panic::set_hook(Box::new(|info| {
        let msg = info
            .payload()
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| info.payload().downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown".into());
        eprintln!("error: internal failure: {msg}");
    }));
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            let (CliError::Input(msg) | CliError::Claim(msg)) = &e;
            eprintln!("error: {msg}");
            ExitCode::from(e.code())
        }
        Err(_) => ExitCode::from(3),
    }
}
