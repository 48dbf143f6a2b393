use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skew_brace::catalog::{self, DigroupName, GroupName};
use skew_brace::enumerate::enumerate_digroups;
use skew_brace::format::{emit_action, emit_dgt, emit_solution, parse_action, parse_dgt};
use skew_brace::ideal_algebra::{center, center_elementwise, commutator_ideal, lattice_ops};
use skew_brace::semidirect::{idempotent_endomorphisms, BraceVerdict};
use skew_brace::ybe::solution_from_brace;
use skew_brace::{Digroup, Error, FiniteGroup, IdealSet, Limits};

/// Finite digroups and left skew braces.
///
/// Exit status: 0 when every check passes, 1 when a mathematical property
/// fails, 2 on malformed input or usage errors.
#[derive(Parser, Debug)]
#[command(name = "braces", version)]
struct Cli {
    /// Largest order accepted by the exhaustive searches.
    #[arg(long, global = true, default_value_t = 12)]
    max_order: usize,
    /// Print only the artifact, if any.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// Write the artifact (DGT, solution) to this file instead of stdout.
    #[arg(long, global = true)]
    emit: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a digroup and decide whether it is a left skew brace.
    Check { dgt: PathBuf },
    /// Print every λ_a as a permutation.
    Lambda { dgt: PathBuf },
    /// List all ideals.
    Ideals { dgt: PathBuf },
    /// List inner semidirect decompositions and rebuild each from its action.
    Decompose { dgt: PathBuf },
    /// Build the outer semidirect product of Y and K under an action.
    Outer {
        y: PathBuf,
        k: PathBuf,
        action: PathBuf,
    },
    /// Commutator, join and meet of two ideals.
    Commutator {
        dgt: PathBuf,
        /// Comma-separated elements of the first ideal.
        #[arg(long = "i", value_delimiter = ',', required = true)]
        i: Vec<usize>,
        /// Comma-separated elements of the second ideal.
        #[arg(long = "j", value_delimiter = ',', required = true)]
        j: Vec<usize>,
    },
    /// Center of a brace, computed from ideals and elementwise.
    Center { dgt: PathBuf },
    /// Yang–Baxter solution of a brace.
    Ybe { dgt: PathBuf },
    /// All digroups over a fixed star group.
    Enumerate {
        /// A catalog group name or a DGT file whose star table is used.
        #[arg(long)]
        star: String,
        #[arg(long)]
        braces_only: bool,
    },
    /// Emit a built-in example: a group name (as a trivial digroup),
    /// `s3c6` or `signed(m,n)`.
    Catalog { name: String },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() || matches!(e, Error::OrderBoundExceeded { .. }) {
            Failure::Input(e.to_string())
        } else {
            Failure::Property(e.to_string())
        }
    }
}

type CmdResult = Result<bool, Failure>;

struct Out {
    quiet: bool,
    emit: Option<PathBuf>,
    /// Prefix report lines with `# ` so stdout stays parseable.
    commented: bool,
    lines: Vec<String>,
}

impl Out {
    fn say(&mut self, line: impl Into<String>) {
        if !self.quiet {
            self.lines.push(line.into());
        }
    }

    fn flush_report(&mut self) -> io::Result<()> {
        let mut stdout = io::stdout().lock();
        for l in self.lines.drain(..) {
            if self.commented {
                writeln!(stdout, "# {l}")?;
            } else {
                writeln!(stdout, "{l}")?;
            }
        }
        Ok(())
    }

    fn artifact(&mut self, text: &str) -> Result<(), Failure> {
        match &self.emit {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
            None => {
                self.flush_report()
                    .map_err(|e| Failure::Input(e.to_string()))?;
                io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|e| Failure::Input(e.to_string()))
            }
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn load(path: &Path) -> Result<Digroup, Failure> {
    let text = read_input(path)?;
    parse_dgt(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn set(elements: &[usize]) -> String {
    let parts: Vec<String> = elements.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(" "))
}

fn check(d: &Digroup, limits: &Limits, out: &mut Out) -> CmdResult {
    out.say(format!("order: {}", d.order()));
    out.say("digroup: true");
    let axiom = d.is_skew_brace();
    let via_lambda = d.is_skew_brace_via_lambda(limits)?;
    out.say(format!("brace (axiom): {axiom}"));
    out.say(format!("brace (lambda): {via_lambda}"));
    if let Some((a, b, c)) = d.first_brace_violation() {
        out.say(format!("violation: a = {a}, b = {b}, c = {c}"));
    }
    if axiom != via_lambda {
        out.say("verdicts disagree");
        return Ok(false);
    }
    Ok(axiom)
}

fn lambda(d: &Digroup, out: &mut Out) -> CmdResult {
    for a in 0..d.order() {
        out.say(format!("lambda[{a}]: {}", d.lambda_map(a)?));
    }
    Ok(true)
}

fn ideals(d: &Digroup, limits: &Limits, out: &mut Out) -> CmdResult {
    let all = d.ideals(limits)?;
    out.say(format!("ideals: {}", all.len()));
    for i in &all {
        out.say(set(i.elements()));
    }
    Ok(true)
}

fn kind(maps: &[skew_brace::ElementMap]) -> &'static str {
    if maps.iter().all(|m| m.is_identity()) {
        "trivial"
    } else {
        "nontrivial"
    }
}

fn decompose(d: &Digroup, limits: &Limits, out: &mut Out) -> CmdResult {
    let all = idempotent_endomorphisms(d, limits)?;
    let nontrivial: Vec<_> = all.iter().filter(|x| !x.is_trivial()).collect();
    out.say(format!(
        "decompositions: {} ({} nontrivial)",
        all.len(),
        nontrivial.len()
    ));
    let mut ok = true;
    for dec in nontrivial {
        out.say(format!(
            "B = {}  I = {}  e = {}",
            set(dec.subdigroup()),
            set(dec.ideal().elements()),
            dec.idempotent()
        ));
        let act = dec.extract_action()?;
        out.say(format!(
            "  phi_star {}, phi_circ {}, lambda {}",
            kind(act.phi_star()),
            kind(act.phi_circ()),
            kind(act.lambda())
        ));
        for line in emit_action(&act).lines() {
            out.say(format!("  {line}"));
        }
        match dec.alpha_isomorphism() {
            Ok(alpha) => out.say(format!("  alpha: {alpha}")),
            Err(e) => {
                out.say(format!("  roundtrip failed: {e}"));
                ok = false;
            }
        }
    }
    Ok(ok)
}

fn outer(y: &Path, k: &Path, action: &Path, limits: &Limits, out: &mut Out) -> CmdResult {
    let (y, k) = (load(y)?, load(k)?);
    let text = read_input(action)?;
    let act = parse_action(&text, &y, &k)
        .map_err(|e| Failure::Input(format!("{}: {e}", action.display())))?;
    let d = act.outer_product()?;
    let oracle = d.is_skew_brace();
    let verdict = act.brace_condition(limits)?;
    let split = act.split_brace_condition(limits)?;
    out.say(format!("order: {}", d.order()));
    out.say("digroup: true");
    out.say(format!("brace (axiom): {oracle}"));
    match verdict {
        BraceVerdict::Brace => out.say("brace (action criterion): true"),
        BraceVerdict::NotBrace(reason) => {
            out.say(format!("brace (action criterion): false ({reason:?})"))
        }
    }
    out.say(format!(
        "split: hypotheses {}, first {}, second {}",
        split.hypotheses.is_ok(),
        split.first,
        split.second
    ));
    let agree = verdict.holds() == oracle && split.holds() == oracle;
    if !agree {
        out.say("verdicts disagree");
    }
    out.artifact(&emit_dgt(&d))?;
    Ok(agree && oracle)
}

fn ideal_arg(d: &Digroup, elements: &[usize], name: &str) -> Result<IdealSet, Failure> {
    d.ideal(elements)
        .map_err(|e| Failure::Property(format!("--{name} {}: {e}", set(elements))))
}

fn commutator(d: &Digroup, i: &[usize], j: &[usize], limits: &Limits, out: &mut Out) -> CmdResult {
    let (i, j) = (ideal_arg(d, i, "i")?, ideal_arg(d, j, "j")?);
    let ij = commutator_ideal(d, &i, &j, limits)?;
    let ji = commutator_ideal(d, &j, &i, limits)?;
    let ops = lattice_ops(d, &i, &j)?;
    out.say(format!("[I,J] = {}", set(ij.elements())));
    out.say(format!("I v J = {}", set(ops.join.elements())));
    out.say(format!("I ^ J = {}", set(ops.meet.elements())));
    if ij != ji {
        out.say(format!("[J,I] = {} differs", set(ji.elements())));
        return Ok(false);
    }
    Ok(true)
}

fn center_cmd(d: &Digroup, limits: &Limits, out: &mut Out) -> CmdResult {
    let z = center(d, limits)?;
    let elementwise = center_elementwise(d)?;
    out.say(format!("center: {}", set(z.elements())));
    out.say(format!("center (elementwise): {}", set(&elementwise)));
    Ok(z.elements() == elementwise.as_slice())
}

fn ybe(d: &Digroup, out: &mut Out) -> CmdResult {
    let r = solution_from_brace(d)?;
    let braid = r.braid_check();
    let nondegenerate = r.nondegeneracy_check();
    out.say(format!("braid: {braid}"));
    out.say(format!("nondegenerate: {nondegenerate}"));
    out.artifact(&emit_solution(&r))?;
    Ok(braid && nondegenerate)
}

fn star_group(arg: &str) -> Result<FiniteGroup, Failure> {
    match arg.parse::<GroupName>() {
        Ok(name) => Ok(catalog::group(&name)?),
        Err(_) if Path::new(arg).exists() || arg == "-" => {
            Ok(load(Path::new(arg))?.star().clone())
        }
        Err(e) => Err(e.into()),
    }
}

fn enumerate(star: &str, braces_only: bool, limits: &Limits, out: &mut Out) -> CmdResult {
    let g = star_group(star)?;
    let all = enumerate_digroups(&g, braces_only, limits)?;
    out.say(format!(
        "{} {} over a star group of order {}",
        all.len(),
        if braces_only { "braces" } else { "digroups" },
        g.order()
    ));
    let text: String = all.iter().map(emit_dgt).collect();
    out.artifact(&text)?;
    Ok(true)
}

fn catalog_cmd(name: &str, out: &mut Out) -> CmdResult {
    let name: DigroupName = name.parse()?;
    let d = catalog::digroup(&name)?;
    out.say(format!("{name}"));
    out.artifact(&emit_dgt(&d))?;
    Ok(true)
}

fn run(cli: Cli) -> CmdResult {
    let limits = Limits::with_max_order(cli.max_order);
    let commented = matches!(
        cli.command,
        Command::Outer { .. }
            | Command::Ybe { .. }
            | Command::Enumerate { .. }
            | Command::Catalog { .. }
    ) && cli.emit.is_none();
    let mut out = Out {
        quiet: cli.quiet,
        emit: cli.emit,
        commented,
        lines: Vec::new(),
    };
    let result = match &cli.command {
        Command::Check { dgt } => check(&load(dgt)?, &limits, &mut out),
        Command::Lambda { dgt } => lambda(&load(dgt)?, &mut out),
        Command::Ideals { dgt } => ideals(&load(dgt)?, &limits, &mut out),
        Command::Decompose { dgt } => decompose(&load(dgt)?, &limits, &mut out),
        Command::Outer { y, k, action } => outer(y, k, action, &limits, &mut out),
        Command::Commutator { dgt, i, j } => commutator(&load(dgt)?, i, j, &limits, &mut out),
        Command::Center { dgt } => center_cmd(&load(dgt)?, &limits, &mut out),
        Command::Ybe { dgt } => ybe(&load(dgt)?, &mut out),
        Command::Enumerate { star, braces_only } => {
            enumerate(star, *braces_only, &limits, &mut out)
        }
        Command::Catalog { name } => catalog_cmd(name, &mut out),
    };
    out.flush_report()
        .map_err(|e| Failure::Input(e.to_string()))?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Property(msg)) => {
            eprintln!("braces: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("braces: {msg}");
            ExitCode::from(2)
        }
    }
}
