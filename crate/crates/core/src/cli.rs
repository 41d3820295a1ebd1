//! Command-line front end. Every command prints a single document to stdout;
//! failures print a JSON object to stderr and map onto the exit codes of
//! [`Error::exit_code`].

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::automaton::{
    count_by_length, determinize_capped, enumerate, minimize, reverse, to_dot, Alphabet, Automaton, Word,
};
use crate::caps::Caps;
use crate::closed_forms::{
    affine_cone, bn_bound, dihedral_bound, f4_bound, spherical_nonneg, spherical_nonpos, AffineFamily,
    SphericalFormulaResult,
};
use crate::cone::{cone_from_circuits, extreme_rays, redundant_normals, remove_redundant, IntVec};
use crate::coxeter::{
    families, group_cell_in, hecke_onedim, probe_spherical, validate_weight, CoxeterSystem, GroupCellResult,
    Language, Sign,
};
use crate::error::{Error, Result};
use crate::field::{parse_rational, Rational};
use crate::weight::{CellAutomata, EngineConfig, WeightVector, WeightedLanguage};

#[derive(Debug, Parser)]
#[command(name = "weightcell", version, about = "Bounds and cells of weight functions on regular languages and Coxeter groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOptions,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Args)]
pub struct GlobalOptions {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Cap overrides such as `states=1000,cycles=50`.
    #[arg(long, global = true, env = "WEIGHTCELL_CAPS")]
    pub caps: Option<String>,
    #[arg(long, global = true)]
    pub max_states: Option<usize>,
    #[arg(long, global = true)]
    pub max_cycles: Option<usize>,
    #[arg(long, global = true)]
    pub max_rays: Option<usize>,
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,
    /// Also forbid circuit-free paths from revisiting the start state.
    #[arg(long, global = true)]
    pub strict_graph_sense: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect or normalize an automaton file.
    #[command(subcommand)]
    Automaton(AutomatonCommand),
    /// Boundedness cone of an automaton: raw and irredundant inequalities, rays.
    Cone { file: PathBuf },
    /// Bound of a weight function and the circuit-free words attaining it.
    Bound {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// Bound and cell automata of a weight function.
    Cell {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Also write `<PREFIX>.json` and `<PREFIX>.dot` for the cell DFA.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Coxeter group pipeline from a Coxeter matrix file or a family name.
    #[command(subcommand)]
    Coxeter(CoxeterCommand),
}

#[derive(Debug, Subcommand)]
pub enum AutomatonCommand {
    /// Sizes, determinism, emptiness and word counts per length.
    Info {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
    },
    /// Minimal DFA with canonical state numbering.
    Min { file: PathBuf },
    /// Accepted words up to a length, in shortlex order.
    Enum {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
    },
    /// Automaton for the reversed language.
    Reverse { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Coxeter system JSON file, or a family name such as `Delta(2,4,6)`, `B3`, `F4`, `Ct2`.
    pub system: String,
    /// Generator order, e.g. `s,t,u`.
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long, default_value = "lex")]
    pub lang: String,
}

#[derive(Debug, Subcommand)]
pub enum CoxeterCommand {
    /// Automaton for shortlex normal forms or for all reduced words.
    Build(SystemArgs),
    /// Boundedness cone of the group language.
    Cone(SystemArgs),
    Bound {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    Cell {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Closed forms: `I2(2m)`, `Bn`, `F4` bounds and cells; `Btn`, `Ctn`, `Ft4`, `Gt2` cones.
    ClosedForm {
        family: String,
        /// Parameters `a=..,b=..[,c=..]`, or generator weights for other finite systems.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
    },
    /// Whether bounds are attained in finite standard parabolic subgroups.
    ProbeSpherical {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampled weights are integers in `-range..=range`.
        #[arg(long, default_value_t = 3)]
        range: i64,
    },
    /// Weight function of a one-dimensional Hecke representation.
    Hecke {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
    },
}

/// Parses arguments, runs the command and writes to the given streams.
/// Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = writeln!(err, "{}", json!({"error": "usage", "message": e.to_string(), "exit_code": 2}));
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{}", error_json(&e));
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({"error": e.kind(), "message": e.to_string(), "exit_code": e.exit_code()});
    if let Error::Unbounded { circuit, weight } = e {
        v["circuit"] = json!(circuit);
        v["weight"] = json!(weight);
    }
    v
}

struct Context {
    format: Format,
    config: EngineConfig,
}

impl GlobalOptions {
    fn context(&self) -> Result<Context> {
        let mut caps = Caps::default();
        if let Some(spec) = &self.caps {
            caps = caps.with_overrides(spec)?;
        }
        for (flag, slot) in [
            (self.max_states, &mut caps.states),
            (self.max_cycles, &mut caps.cycles),
            (self.max_rays, &mut caps.rays),
            (self.max_elements, &mut caps.elements),
        ] {
            if let Some(v) = flag {
                if v == 0 {
                    return Err(Error::Invalid("caps must be positive".into()));
                }
                *slot = v;
            }
        }
        Ok(Context { format: self.format, config: EngineConfig { caps, strict_graph_sense: self.strict_graph_sense } })
    }
}

pub fn execute(cli: &Cli) -> Result<String> {
    let ctx = cli.global.context()?;
    match &cli.command {
        Command::Automaton(cmd) => automaton_command(&ctx, cmd),
        Command::Cone { file } => cone_output(&ctx, &read_automaton(file)?),
        Command::Bound { file, phi } => {
            let a = read_automaton(file)?;
            let phi = WeightVector::parse(phi, a.alphabet())?;
            bound_output(&ctx, &WeightedLanguage::new(&a, ctx.config)?, &phi)
        }
        Command::Cell { file, phi, emit } => {
            let a = read_automaton(file)?;
            let phi = WeightVector::parse(phi, a.alphabet())?;
            let lang = WeightedLanguage::new(&a, ctx.config)?;
            let result = lang.cell(&phi)?;
            let automata = result.automata.expect("cell fills the automata");
            if let Some(prefix) = emit {
                emit_files(prefix, &automata.dfa)?;
            }
            let body = json!({
                "phi": phi.to_string(),
                "bound": result.bound.to_string(),
                "witnesses": words_json(a.alphabet(), &result.witnesses),
            });
            cell_output(&ctx, body, &automata)
        }
        Command::Coxeter(cmd) => coxeter_command(&ctx, cmd),
    }
}

fn read_automaton(path: &Path) -> Result<Automaton> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Automaton::from_json(&text)
}

fn words_json(alphabet: &Alphabet, words: &[Word]) -> Value {
    Value::Array(words.iter().map(|w| json!(alphabet.format(w))).collect())
}

fn render_automaton(ctx: &Context, a: &Automaton, name: &str) -> String {
    match ctx.format {
        Format::Json => a.to_json(),
        Format::Dot => to_dot(a, name),
        Format::Text => a.to_string(),
    }
}

fn render_value(ctx: &Context, value: &Value) -> Result<String> {
    match ctx.format {
        Format::Json => Ok(serde_json::to_string_pretty(value)?),
        Format::Text => Ok(text_of(value, 0)),
        Format::Dot => Err(Error::Invalid("this command has no DOT rendering".into())),
    }
}

/// Indented `key: value` rendering of a JSON document.
fn text_of(value: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    let mut out = String::new();
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        out.push_str(&text_of(v, indent + 1));
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in items {
                            let _ = writeln!(out, "{pad}  -");
                            out.push_str(&text_of(item, indent + 2));
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_text(v));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other));
        }
    }
    out
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(inner) => format!("({})", inner.iter().map(scalar_text).collect::<Vec<_>>().join(",")),
                other => scalar_text(other),
            })
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}

fn automaton_command(ctx: &Context, cmd: &AutomatonCommand) -> Result<String> {
    match cmd {
        AutomatonCommand::Info { file, maxlen } => {
            let a = read_automaton(file)?;
            let counts: Vec<String> = count_by_length(&a, *maxlen)?.iter().map(ToString::to_string).collect();
            let doc = json!({
                "alphabet": a.alphabet().names(),
                "states": a.num_states(),
                "transitions": a.num_transitions(),
                "deterministic": a.is_deterministic(),
                "accepting": a.accept_states().len(),
                "empty_language": a.is_empty_language(),
                "words_by_length": counts,
            });
            render_value(ctx, &doc)
        }
        AutomatonCommand::Min { file } => {
            let a = read_automaton(file)?;
            let m = minimize(&determinize_capped(&a, ctx.config.caps.states)?)?;
            Ok(render_automaton(ctx, &m, "minimal"))
        }
        AutomatonCommand::Enum { file, maxlen } => {
            let a = read_automaton(file)?;
            let words = enumerate(&a, *maxlen, ctx.config.caps.words)?;
            match ctx.format {
                Format::Text => Ok(words.iter().map(|w| a.alphabet().format(w) + "\n").collect()),
                _ => render_value(ctx, &json!({"maxlen": maxlen, "words": words_json(a.alphabet(), &words)})),
            }
        }
        AutomatonCommand::Reverse { file } => {
            let a = read_automaton(file)?;
            Ok(render_automaton(ctx, &reverse(&a), "reversed"))
        }
    }
}

/// `2s+t-u <= 0`, with `*` between coefficient and name for multi-letter names.
fn format_inequality(names: &[String], normal: &[BigInt]) -> String {
    let mut out = String::new();
    for (c, name) in normal.iter().zip(names) {
        let sign = c.sign();
        if sign == num_bigint::Sign::NoSign {
            continue;
        }
        let magnitude = c.magnitude().to_string();
        match (out.is_empty(), sign == num_bigint::Sign::Minus) {
            (true, true) => out.push('-'),
            (false, true) => out.push('-'),
            (false, false) => out.push('+'),
            (true, false) => {}
        }
        if magnitude != "1" {
            out.push_str(&magnitude);
            if name.chars().count() > 1 {
                out.push('*');
            }
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out + " <= 0"
}

fn ints(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(|v| json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())).collect())
}

fn cone_document(ctx: &Context, lang: &WeightedLanguage) -> Result<Value> {
    let names = lang.automaton().alphabet().names().to_vec();
    let raw = cone_from_circuits(names.len(), &lang.inequalities())?;
    let irredundant = remove_redundant(&raw);
    let v = extreme_rays(&irredundant, &ctx.config.caps)?;
    let show = |h: &[IntVec]| -> Vec<String> { h.iter().map(|n| format_inequality(&names, n)).collect() };
    Ok(json!({
        "alphabet": names,
        "dim": raw.dim(),
        "raw": ints(raw.normals()),
        "normals": ints(irredundant.normals()),
        "redundant": ints(&redundant_normals(&raw)),
        "lineality": ints(&v.lineality),
        "rays": ints(&v.rays),
        "inequalities": show(irredundant.normals()),
    }))
}

fn cone_output(ctx: &Context, a: &Automaton) -> Result<String> {
    let lang = WeightedLanguage::new(a, ctx.config)?;
    render_value(ctx, &cone_document(ctx, &lang)?)
}

fn bound_output(ctx: &Context, lang: &WeightedLanguage, phi: &WeightVector) -> Result<String> {
    let result = lang.bound(phi)?;
    let alphabet = lang.automaton().alphabet();
    render_value(
        ctx,
        &json!({
            "phi": phi.to_string(),
            "bound": result.bound.to_string(),
            "witnesses": words_json(alphabet, &result.witnesses),
        }),
    )
}

fn cell_output(ctx: &Context, mut body: Value, automata: &CellAutomata) -> Result<String> {
    match ctx.format {
        Format::Dot => Ok(to_dot(&automata.dfa, "cell")),
        _ => {
            body["nfa_is_complete"] = json!(automata.nfa_is_complete);
            body["cell_dfa"] = automata.dfa.to_json_value();
            body["cell_nfa"] = automata.nfa.to_json_value();
            render_value(ctx, &body)
        }
    }
}

fn emit_files(prefix: &Path, dfa: &Automaton) -> Result<()> {
    let with_ext = |ext: &str| {
        let mut p = prefix.as_os_str().to_owned();
        p.push(ext);
        PathBuf::from(p)
    };
    std::fs::write(with_ext(".json"), dfa.to_json() + "\n")?;
    std::fs::write(with_ext(".dot"), to_dot(dfa, "cell"))?;
    Ok(())
}

/// A Coxeter system from a JSON file, or from a family name when no such file exists.
pub fn load_system(spec: &str, order: Option<&str>) -> Result<CoxeterSystem> {
    let sys = if Path::new(spec).is_file() {
        CoxeterSystem::from_json(&std::fs::read_to_string(spec)?)?
    } else {
        families::by_name(spec).map_err(|_| {
            Error::Invalid(format!("`{spec}` is neither a Coxeter system file nor a known family"))
        })?
    };
    match order {
        Some(o) => sys.with_order(&o.split(',').map(str::trim).collect::<Vec<_>>()),
        None => Ok(sys),
    }
}

struct GroupJob {
    sys: CoxeterSystem,
    language: Language,
    weighted: WeightedLanguage,
}

fn group_job(ctx: &Context, args: &SystemArgs) -> Result<GroupJob> {
    let sys = load_system(&args.system, args.order.as_deref())?;
    let language: Language = args.lang.parse()?;
    let automaton = language.automaton(&sys, &ctx.config.caps)?;
    let weighted = WeightedLanguage::new(&automaton, ctx.config)?;
    Ok(GroupJob { sys, language, weighted })
}

fn group_body(sys: &CoxeterSystem, phi: &WeightVector, r: &GroupCellResult) -> Value {
    let alphabet = sys.alphabet();
    json!({
        "phi": phi.to_string(),
        "language": r.language.to_string(),
        "bound": r.bound.to_string(),
        "witnesses": words_json(alphabet, &r.witnesses),
        "X": words_json(alphabet, &r.x),
        "Y": words_json(alphabet, &r.y),
    })
}

fn coxeter_command(ctx: &Context, cmd: &CoxeterCommand) -> Result<String> {
    match cmd {
        CoxeterCommand::Build(args) => {
            let sys = load_system(&args.system, args.order.as_deref())?;
            let language: Language = args.lang.parse()?;
            let a = language.automaton(&sys, &ctx.config.caps)?;
            Ok(render_automaton(ctx, &a, &format!("{language}")))
        }
        CoxeterCommand::Cone(args) => {
            let job = group_job(ctx, args)?;
            render_value(ctx, &cone_document(ctx, &job.weighted)?)
        }
        CoxeterCommand::Bound { sys, phi } => {
            let job = group_job(ctx, sys)?;
            let phi = WeightVector::parse(phi, job.sys.alphabet())?;
            let r = group_cell_in(&job.sys, &job.weighted, job.language, &phi)?;
            render_value(ctx, &group_body(&job.sys, &phi, &r))
        }
        CoxeterCommand::Cell { sys, phi, emit } => {
            let job = group_job(ctx, sys)?;
            let phi = WeightVector::parse(phi, job.sys.alphabet())?;
            let r = group_cell_in(&job.sys, &job.weighted, job.language, &phi)?;
            if let Some(prefix) = emit {
                emit_files(prefix, &r.cell.dfa)?;
            }
            cell_output(ctx, group_body(&job.sys, &phi, &r), &r.cell)
        }
        CoxeterCommand::ClosedForm { family, phi } => closed_form(ctx, family, phi.as_deref()),
        CoxeterCommand::ProbeSpherical { sys, phi, samples, seed, range } => {
            let job = group_job(ctx, sys)?;
            let phis = match phi {
                Some(p) => vec![WeightVector::parse(p, job.sys.alphabet())?],
                None => sample_weights(&job, *samples, *seed, *range)?,
            };
            let mut reports = Vec::new();
            for phi in &phis {
                let r = group_cell_in(&job.sys, &job.weighted, job.language, phi)?;
                let probe = probe_spherical(&job.sys, &r);
                let witnesses: Vec<Value> = probe
                    .witnesses
                    .iter()
                    .map(|(w, finite)| json!({"word": job.sys.alphabet().format(w), "spherical_support": finite}))
                    .collect();
                reports.push(json!({
                    "phi": phi.to_string(),
                    "bound": probe.bound.to_string(),
                    "attained_on_spherical": probe.attained_on_spherical,
                    "witnesses": witnesses,
                }));
            }
            let all = reports.iter().all(|r| r["attained_on_spherical"] == json!(true));
            render_value(ctx, &json!({"samples": reports.len(), "all_attained_on_spherical": all, "reports": reports}))
        }
        CoxeterCommand::Hecke { sys, psi, signs } => {
            let system = load_system(&sys.system, sys.order.as_deref())?;
            let psi: Vec<u64> = psi
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("`{p}` is not a positive integer"))))
                .collect::<Result<_>>()?;
            let signs = Sign::parse_list(signs)?;
            let (phi, r) = hecke_onedim(&system, &psi, &signs, ctx.config)?;
            cell_output(ctx, group_body(&system, &phi, &r), &r.cell)
        }
    }
}

/// Random integer weights that are valid on the group and bounded.
fn sample_weights(job: &GroupJob, samples: usize, seed: u64, range: i64) -> Result<Vec<WeightVector>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let comps = job.sys.odd_components();
    let n = job.sys.rank();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < samples && attempts < samples * 200 {
        attempts += 1;
        let mut values = vec![0i64; n];
        for comp in &comps {
            let v = rng.gen_range(-range..=range);
            for &s in comp {
                values[s] = v;
            }
        }
        let phi = WeightVector::from_ints(job.sys.alphabet(), &values)?;
        debug_assert!(validate_weight(&job.sys, &phi)?);
        if job.weighted.is_bounded(&phi)?.bounded {
            out.push(phi);
        }
    }
    Ok(out)
}

/// Parameter values from `a=1,b=-2` or `1,-2`, in the order of `names`.
fn parameters(text: &str, names: &[&str]) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
    if parts.len() != names.len() {
        return Err(Error::Invalid(format!("expected parameters {}", names.join(","))));
    }
    let mut values = vec![None; names.len()];
    for (i, part) in parts.iter().enumerate() {
        let (slot, value) = match part.split_once('=') {
            Some((k, v)) => {
                let k = k.trim();
                let slot = names
                    .iter()
                    .position(|n| *n == k)
                    .ok_or_else(|| Error::Invalid(format!("unknown parameter `{k}`")))?;
                (slot, v)
            }
            None => (i, *part),
        };
        values[slot] = Some(parse_rational(value)?);
    }
    values
        .into_iter()
        .zip(names)
        .map(|(v, n)| v.ok_or_else(|| Error::Invalid(format!("parameter `{n}` missing"))))
        .collect()
}

fn spherical_json(family: &str, r: &SphericalFormulaResult) -> Value {
    json!({
        "family": family,
        "generators": r.system.alphabet().names(),
        "bound": r.bound.to_string(),
        "cell": r.formatted_cell(),
    })
}

fn closed_form(ctx: &Context, family: &str, phi: Option<&str>) -> Result<String> {
    let need_phi = || phi.ok_or_else(|| Error::Invalid("--phi is required for this family".into()));
    if let Ok(aff) = family.parse::<AffineFamily>() {
        let spec = affine_cone(aff)?;
        let normals: Vec<String> = spec.normals.iter().map(|n| spec.format_normal(n)).collect();
        let mut doc = json!({
            "family": aff.to_string(),
            "parameters": spec.parameters,
            "generator_parameters": spec.generator_parameters,
            "inequalities": normals,
            "normals": spec.normals,
            "two_rho": spec.rho,
        });
        if let Some(p) = phi {
            let values = parameters(p, &spec.parameters)?;
            let bounded = spec.hrep()?.contains(&values)?;
            doc["bounded"] = json!(bounded);
        }
        return render_value(ctx, &doc);
    }
    let lower = family.trim().to_ascii_lowercase();
    if let Some(label) = lower.strip_prefix("i2(").and_then(|r| r.strip_suffix(')')) {
        let label: u32 = label.parse().map_err(|_| Error::Invalid(format!("bad dihedral label in `{family}`")))?;
        if label % 2 != 0 || label == 0 {
            return Err(Error::Invalid(
                "closed forms cover I2(2m); odd labels force equal weights, use a system file".into(),
            ));
        }
        let v = parameters(need_phi()?, &["a", "b"])?;
        return render_value(ctx, &spherical_json(family, &dihedral_bound(label / 2, &v[0], &v[1])?));
    }
    if lower == "f4" {
        let v = parameters(need_phi()?, &["a", "b"])?;
        return render_value(ctx, &spherical_json(family, &f4_bound(&v[0], &v[1])?));
    }
    if let Some(n) = lower.strip_prefix('b').and_then(|r| r.parse::<usize>().ok()) {
        let v = parameters(need_phi()?, &["a", "b"])?;
        return render_value(ctx, &spherical_json(family, &bn_bound(n, &v[0], &v[1])?));
    }
    // Any other finite system, for weights of one sign.
    let sys = load_system(family, None)?;
    let phi = WeightVector::parse(need_phi()?, sys.alphabet())?;
    if !validate_weight(&sys, &phi)? {
        return Err(Error::Invalid(format!("`{phi}` is not a weight function on {family}")));
    }
    let r = if phi.values().iter().all(|v| *v >= Rational::from_integer(0.into())) {
        spherical_nonneg(&sys, &phi, &ctx.config.caps)?
    } else {
        spherical_nonpos(&sys, &phi, &ctx.config.caps).map_err(|_| {
            Error::Invalid("mixed signs have closed forms only for I2(2m), Bn and F4".into())
        })?
    };
    render_value(ctx, &spherical_json(family, &r))
}
