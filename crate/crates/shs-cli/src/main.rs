//! Command-line front end: type-A Du Val analysis, model verification,
//! Floer tables, symplectic cohomology bounds and cone presentations.
//!
//! Exit status contract: 0 = success / verdict ok, 1 = verification failed,
//! 2 = input or schema error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shs_core::cone::ConePresentation;
use shs_core::floer;
use shs_core::shbounds;
use shs_core::toric::{AnFan, Cocharacter, FixedComponentKind};

use shs_cli::model_file::{load_model, model_to_json};
use shs_cli::presentation_file::{load_presentation, load_quiver};
use shs_cli::{report, CliError};

#[derive(Parser)]
#[command(
    name = "shs",
    version,
    about = "Conical C*-action combinatorics: fixed loci, homology decompositions, Floer tables and symplectic cohomology bounds"
)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Suppress text output; the exit status still carries the verdict
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal resolution of the type-A_n Du Val singularity
    An {
        #[command(subcommand)]
        sub: AnCommand,
    },
    /// Run the Betti relation and structural checks on a model file
    Verify {
        model: PathBuf,
        /// Restrict the checks to one declared action
        #[arg(long)]
        action: Option<String>,
    },
    /// Graded Floer cohomology table of a weight-1 model
    Floer { model: PathBuf },
    /// Degree-wise lower bounds on symplectic cohomology
    Shbounds { model: PathBuf },
    /// Graded affine-cone presentations
    Cone {
        #[command(subcommand)]
        sub: ConeCommand,
    },
}

#[derive(Subcommand)]
enum AnCommand {
    /// List the weight-1 conical actions and their minimal spheres
    Enumerate {
        #[arg(long)]
        n: u32,
    },
    /// Classify one action: conicality, symplectic weight, fixed locus
    Analyze {
        #[arg(long)]
        n: u32,
        /// Cocharacter as "p,q"
        #[arg(long)]
        lambda: String,
    },
    /// Export the core model with per-action fixed data
    Export {
        #[arg(long)]
        n: u32,
        /// Extra conical actions to attach, each as "p,q"; the weight-1
        /// enumeration is always included
        #[arg(long = "lambda")]
        lambdas: Vec<String>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConeCommand {
    /// Check multi-homogeneity of the relations
    Check {
        #[command(flatten)]
        source: ConeSource,
    },
    /// Enumerate weight-1 conical characters inside a box
    Enumerate {
        #[command(flatten)]
        source: ConeSource,
        #[arg(long)]
        bound: u64,
    },
    /// Hamiltonian exponents w = lcm(w_i), 2w/w_i for one character
    Phi {
        #[command(flatten)]
        source: ConeSource,
        /// Character as comma-separated integers
        #[arg(long)]
        lambda: String,
    },
    /// Loop-edge admissibility of a quiver document
    Quiver {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args)]
struct ConeSource {
    /// Use the built-in A_n hypersurface presentation
    #[arg(long, conflicts_with = "file")]
    an: Option<u32>,
    /// Load a presentation file
    #[arg(long)]
    file: Option<PathBuf>,
}

impl ConeSource {
    fn load(&self) -> Result<ConePresentation, CliError> {
        match (&self.an, &self.file) {
            (Some(n), None) => {
                if *n == 0 {
                    return Err(CliError::input("--an requires n >= 1"));
                }
                Ok(ConePresentation::an(*n))
            }
            (None, Some(path)) => Ok(load_presentation(path)?.0),
            _ => Err(CliError::input("exactly one of --an N or --file PATH is required")),
        }
    }
}

struct Output {
    json: bool,
    quiet: bool,
}

impl Output {
    fn line(&self, text: impl AsRef<str>) {
        if !self.quiet && !self.json {
            println!("{}", text.as_ref());
        }
    }

    fn json<T: serde::Serialize>(&self, value: &T) -> Result<(), CliError> {
        if self.json {
            let text = serde_json::to_string_pretty(value)
                .map_err(|e| CliError::input(format!("serialisation failed: {e}")))?;
            println!("{text}");
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output { json: cli.json, quiet: cli.quiet };
    match run(cli.command, &out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &Output) -> Result<u8, CliError> {
    match command {
        Command::An { sub } => run_an(sub, out),
        Command::Verify { model, action } => cmd_verify(&model, action.as_deref(), out),
        Command::Floer { model } => cmd_floer(&model, out),
        Command::Shbounds { model } => cmd_shbounds(&model, out),
        Command::Cone { sub } => run_cone(sub, out),
    }
}

fn parse_lambda(raw: &str) -> Result<Cocharacter, CliError> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::input(format!("lambda must be \"p,q\", got {raw:?}")));
    }
    let p = parts[0]
        .trim()
        .parse::<i64>()
        .map_err(|_| CliError::input(format!("bad integer {:?} in lambda", parts[0])))?;
    let q = parts[1]
        .trim()
        .parse::<i64>()
        .map_err(|_| CliError::input(format!("bad integer {:?} in lambda", parts[1])))?;
    if (p, q) == (0, 0) {
        return Err(CliError::input("lambda must be a nonzero lattice vector"));
    }
    Ok(Cocharacter::new(p, q))
}

fn parse_vector(raw: &str) -> Result<Vec<i64>, CliError> {
    raw.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::input(format!("bad integer {part:?} in character")))
        })
        .collect()
}

fn run_an(sub: AnCommand, out: &Output) -> Result<u8, CliError> {
    match sub {
        AnCommand::Enumerate { n } => {
            let fan = AnFan::new(n).map_err(CliError::input)?;
            let actions = fan.enumerate_weight1();
            out.line(format!("A_{n}: {} weight-1 conical actions", actions.len()));
            let mut rows = Vec::new();
            for action in &actions {
                let minimal = fan.minimal_component(*action).map_err(CliError::input)?;
                out.line(format!("  lambda = {action}  minimal sphere {}", minimal.id));
                rows.push(report::EnumeratedAction {
                    lambda: (action.p, action.q),
                    minimal: minimal.id,
                });
            }
            out.json(&report::EnumerateReport { n, actions: rows })?;
            Ok(0)
        }
        AnCommand::Analyze { n, lambda } => {
            let fan = AnFan::new(n).map_err(CliError::input)?;
            let action = parse_lambda(&lambda)?;
            let (wx, wy, wz) = fan.character_weights(action);
            let conical = fan.is_conical(action);
            out.line(format!("A_{n}, lambda = {action}"));
            out.line(format!("conical: {}", if conical { "yes" } else { "no" }));
            out.line(format!("symplectic weight: {}", action.symplectic_weight()));
            out.line(format!("character weights: wX = {wx}, wY = {wy}, wZ = {wz}"));
            let mut rep = report::AnalyzeReport {
                n,
                lambda: (action.p, action.q),
                conical,
                symplectic_weight: action.symplectic_weight(),
                character_weights: (wx, wy, wz),
                fixed_components: None,
                minimal: None,
            };
            if conical {
                let fixed = fan.fixed_locus(action).map_err(CliError::input)?;
                out.line(format!("fixed locus ({} components):", fixed.len()));
                out.line("  id    kind    dim_C  betti      mu  owner  tangent weights");
                let mut fixed_rows = Vec::new();
                for c in &fixed {
                    let kind = match c.kind {
                        FixedComponentKind::IsolatedPoint => "point",
                        FixedComponentKind::FixedSphere => "sphere",
                    };
                    out.line(format!(
                        "  {:<4}  {:<6}  {:<5}  {:<9}  {:<2}  {:<5}  {:?}",
                        c.id,
                        kind,
                        c.complex_dim,
                        c.betti.poincare_string(),
                        c.mu,
                        c.owner,
                        c.tangent_weights
                    ));
                    fixed_rows.push(report::FixedReport {
                        id: c.id.clone(),
                        kind: kind.to_string(),
                        betti: report::dense(&c.betti)?,
                        complex_dim: c.complex_dim,
                        tangent_weights: c.tangent_weights.clone(),
                        mu: c.mu,
                        owner: c.owner.clone(),
                    });
                }
                let minimal = fan.minimal_component(action).map_err(CliError::input)?;
                if minimal.lagrangian {
                    out.line(format!("minimal component: {} (Lagrangian sphere)", minimal.id));
                } else {
                    out.line(format!(
                        "minimal component: {} (isolated point; minimum is not Lagrangian)",
                        minimal.id
                    ));
                }
                rep.fixed_components = Some(fixed_rows);
                rep.minimal =
                    Some(report::MinimalReport { id: minimal.id, lagrangian: minimal.lagrangian });
            } else {
                out.line("not a conical action: no fixed-locus analysis");
            }
            out.json(&rep)?;
            Ok(0)
        }
        AnCommand::Export { n, lambdas, out: out_path } => {
            let fan = AnFan::new(n).map_err(CliError::input)?;
            let mut actions = fan.enumerate_weight1();
            for raw in &lambdas {
                let extra = parse_lambda(raw)?;
                if !fan.is_conical(extra) {
                    return Err(CliError::input(format!(
                        "lambda {extra} is not conical on A_{n}; only conical actions carry fixed data"
                    )));
                }
                if !actions.contains(&extra) {
                    actions.push(extra);
                }
            }
            let model = fan.to_core_model(&actions).map_err(CliError::input)?;
            let text = model_to_json(&model)?;
            match out_path {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| {
                        CliError::input(format!("cannot write {}: {e}", path.display()))
                    })?;
                    out.line(format!("wrote {}", path.display()));
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn cmd_verify(path: &Path, action_filter: Option<&str>, out: &Output) -> Result<u8, CliError> {
    let (model, _) = load_model(path)?;
    out.line(format!("verify {} ({})", path.display(), model.name));

    let mut ok = true;
    let pure_ok = if model.is_weight1() {
        let pure = model.pure_dimension_ok();
        out.line(format!(
            "pure dimension: {}",
            if pure { "ok" } else { "FAILED (some component is not half-dimensional)" }
        ));
        pure
    } else {
        out.line("pure dimension: n/a (no weight-1 action declared)");
        true
    };
    ok &= pure_ok;

    if let Some(id) = action_filter {
        if model.action(id).is_none() {
            return Err(CliError::input(format!("model declares no action {id:?}")));
        }
    }

    let mut action_reports = Vec::new();
    for action in &model.actions {
        if let Some(filter) = action_filter {
            if action.id != filter {
                continue;
            }
        }
        let mut issues = Vec::new();
        let check = model.verify_betti_relation(&action.id).map_err(CliError::input)?;
        if check.ok {
            out.line(format!(
                "action {}: betti relation ok [{}]",
                action.id,
                check.lhs.poincare_string()
            ));
        } else {
            out.line(format!(
                "action {}: betti relation FAILED [lhs {} (total {}) != rhs {} (total {})]",
                action.id,
                check.lhs.poincare_string(),
                check.lhs.total_rank(),
                check.rhs.poincare_string(),
                check.rhs.total_rank()
            ));
            issues.push("betti relation failed".to_string());
        }
        let minimal_unique = match action.minimal() {
            Ok(_) => true,
            Err(e) => {
                out.line(format!("action {}: {e}", action.id));
                issues.push(e.to_string());
                false
            }
        };
        let owner_bijection = if action.weight1 {
            match model.owner_bijection_ok(action) {
                Ok(()) => Some(true),
                Err(reason) => {
                    out.line(format!("action {}: owner bijection FAILED: {reason}", action.id));
                    issues.push(reason);
                    Some(false)
                }
            }
        } else {
            None
        };
        ok &= check.ok && minimal_unique && owner_bijection.unwrap_or(true);
        action_reports.push(report::ActionCheck {
            action: action.id.clone(),
            betti_relation_ok: check.ok,
            lhs: report::dense(&check.lhs)?,
            rhs: report::dense(&check.rhs)?,
            minimal_unique,
            owner_bijection,
            issues,
        });
    }

    out.line(format!("result: {}", if ok { "OK" } else { "FAILED" }));
    out.json(&report::VerifyReport {
        model: model.name.clone(),
        pure_dimension_ok: pure_ok,
        actions: action_reports,
        ok,
    })?;
    Ok(if ok { 0 } else { 1 })
}

fn cmd_floer(path: &Path, out: &Output) -> Result<u8, CliError> {
    let (model, _) = load_model(path)?;
    let table = floer::floer_table(&model).map_err(CliError::input)?;
    out.line(format!("Floer table for {} ({} components)", model.name, table.component_ids.len()));
    if !table.shk_certified {
        out.line("note: model not marked SHK; the symmetric grading is applied but not certified");
    }
    if !out.json && !out.quiet {
        print!("{}", table.render_text());
    }

    let mut entries = Vec::new();
    for ((a, b), space) in &table.entries {
        entries.push(report::FloerEntry {
            pair: (a.clone(), b.clone()),
            ranks: report::dense(space)?,
            poincare: space.poincare_string(),
        });
    }
    let mut shifts = Vec::new();
    out.line("grading shifts (codimension route vs Maslov index route):");
    for a in &table.component_ids {
        for b in &table.component_ids {
            if a != b && model.intersection(a, b).is_none() {
                continue; // empty intersection: no shift defined
            }
            let shift = floer::grading_shift(&model, a, b).map_err(CliError::input)?;
            out.line(format!(
                "  ({a},{b}): d_codim = {}, d_index = {}, {}",
                shift.d_codim,
                shift.d_index,
                if shift.agree { "agree" } else { "DISAGREE" }
            ));
            shifts.push(report::GradingShiftReport {
                pair: (a.clone(), b.clone()),
                d_codim: shift.d_codim,
                d_index: shift.d_index.to_string(),
                agree: shift.agree,
            });
        }
    }
    out.json(&report::FloerReport {
        model: model.name.clone(),
        components: table.component_ids.clone(),
        shk_certified: table.shk_certified,
        entries,
        grading_shifts: shifts,
    })?;
    Ok(0)
}

fn cmd_shbounds(path: &Path, out: &Output) -> Result<u8, CliError> {
    let (model, _) = load_model(path)?;
    let rep = shbounds::report(&model).map_err(CliError::input)?;
    out.line(format!("SH bounds for {}", model.name));
    if rep.vanishing {
        out.line("SH == 0 (subcritical)");
    } else if rep.bounds.is_zero() {
        out.line("no weight-1 action declared: all bounds are zero");
    } else {
        let per_degree: Vec<String> =
            rep.bounds.iter().map(|(deg, rank)| format!("SH^{deg} >= {rank}")).collect();
        out.line(format!(
            "{}; top-degree bound {} (degree {})",
            per_degree.join(", "),
            rep.top_bound,
            rep.top_degree
        ));
        out.line(format!("all components minimal: {}", if rep.all_minimal { "yes" } else { "no" }));
    }
    for diag in &rep.diagnostics {
        out.line(format!("diagnostic: {diag}"));
    }
    out.json(&report::ShReport {
        model: model.name.clone(),
        bounds: report::dense(&rep.bounds)?,
        top_degree: rep.top_degree,
        top_bound: rep.top_bound,
        all_minimal: rep.all_minimal,
        vanishing: rep.vanishing,
        diagnostics: rep.diagnostics.clone(),
    })?;
    Ok(0)
}

fn run_cone(sub: ConeCommand, out: &Output) -> Result<u8, CliError> {
    match sub {
        ConeCommand::Check { source } => {
            let cone = source.load()?;
            let weights = cone.check_homogeneous().map_err(CliError::input)?;
            out.line(format!("{} relations, all multi-homogeneous", weights.len()));
            for (i, w) in weights.iter().enumerate() {
                out.line(format!("  relation {i}: weight {w:?}"));
            }
            out.json(&report::ConeCheckReport { homogeneous: true, relation_weights: weights })?;
            Ok(0)
        }
        ConeCommand::Enumerate { source, bound } => {
            let cone = source.load()?;
            let found = cone.enumerate_weight1(bound).map_err(CliError::input)?;
            out.line(format!(
                "{} weight-1 conical characters in the box |lambda| <= {bound} ({})",
                found.characters.len(),
                if found.bounded { "provably bounded" } else { "boundedness not certified" }
            ));
            for character in &found.characters {
                out.line(format!("  {character:?}"));
            }
            out.json(&report::ConeEnumerateReport {
                bound,
                characters: found.characters.clone(),
                bounded: found.bounded,
            })?;
            Ok(0)
        }
        ConeCommand::Phi { source, lambda } => {
            let cone = source.load()?;
            let character = parse_vector(&lambda)?;
            if character.len() != cone.rank() {
                return Err(CliError::input(format!(
                    "character has {} coordinates, presentation rank is {}",
                    character.len(),
                    cone.rank()
                )));
            }
            let weights: Vec<i64> = cone
                .variables()
                .iter()
                .map(|v| v.weights.iter().zip(&character).map(|(w, l)| w * l).sum())
                .collect();
            let phi = shs_core::cone::phi_exponents(&weights).map_err(CliError::input)?;
            out.line(format!("generator weights under lambda: {weights:?}"));
            out.line(format!("w = lcm = {}", phi.w));
            out.line(format!("exponents 2w/w_i: {:?}", phi.exponents));
            out.json(&report::PhiReport {
                lambda: character,
                generator_weights: weights,
                w: phi.w,
                exponents: phi.exponents.clone(),
            })?;
            Ok(0)
        }
        ConeCommand::Quiver { file } => {
            let quiver = load_quiver(&file)?;
            let verdict = quiver.weight1_admissible();
            out.line(format!(
                "quiver: {} vertices, {} edges",
                quiver.vertices().len(),
                quiver.edges().len()
            ));
            out.line(format!(
                "weight-1 admissible: {}  subcritical: {}",
                verdict.admissible, verdict.subcritical
            ));
            out.json(&report::QuiverReport {
                vertices: quiver.vertices().len(),
                edges: quiver.edges().len(),
                admissible: verdict.admissible,
                subcritical: verdict.subcritical,
            })?;
            Ok(0)
        }
    }
}
