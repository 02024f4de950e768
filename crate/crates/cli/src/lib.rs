//! Argument parsing, dispatch and rendering for the `walgebra` binary.

use std::fmt;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use walgebra::characters::{
    central_charge, conformal_weight, irreducible_character_minus, irreducible_character_plus,
    vacuum_algebra_character, verma_character,
};
use walgebra::integral::{domain_membership, is_antidominant, is_nondegenerate, satisfies_cond_plus};
use walgebra::rational::parse_rational;
use walgebra::{
    AffineWeight, CharacterResult, CoxeterSystem, Error, IntegralCoxeterContext, KlSession, LieType, QSeries,
    Rational, Reduction, RootSystem, Sign,
};

pub const DEFAULT_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CentralCharge,
    ConformalWeight,
    VermaChar,
    VacuumChar,
    IrrChar,
    IntegralWeyl,
    KlPoly,
    Check,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CentralCharge => "central-charge",
            Command::ConformalWeight => "conformal-weight",
            Command::VermaChar => "verma-char",
            Command::VacuumChar => "vacuum-char",
            Command::IrrChar => "irr-char",
            Command::IntegralWeyl => "integral-weyl",
            Command::KlPoly => "kl-poly",
            Command::Check => "check",
        }
    }

    fn needs_kappa(self) -> bool {
        self != Command::VacuumChar
    }

    fn needs_weight(self) -> bool {
        !matches!(self, Command::CentralCharge | Command::VacuumChar)
    }

    fn uses_order(self) -> bool {
        matches!(self, Command::VermaChar | Command::VacuumChar | Command::IrrChar)
    }

    fn uses_word(self) -> bool {
        matches!(self, Command::IrrChar | Command::IntegralWeyl | Command::KlPoly)
    }

    fn uses_delta_bound(self) -> bool {
        matches!(self, Command::IrrChar | Command::IntegralWeyl | Command::KlPoly)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReductionArg {
    Plus,
    Minus,
}

/// A validated invocation. Generator indices are stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandSpec {
    pub command: Command,
    pub algebra: LieType,
    pub kappa: Option<Rational>,
    pub weight: Option<Vec<Rational>>,
    /// `w` (`--w`), or the upper element for `kl-poly`.
    pub word: Option<Vec<usize>>,
    /// Lower element `x` for `kl-poly`.
    pub lower_word: Vec<usize>,
    pub order: usize,
    pub reduction: Reduction,
    pub format: Format,
    pub delta_bound: Option<i64>,
}

impl CommandSpec {
    /// Canonical argument vector; `parse_spec` maps it back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let c = self.command;
        let mut out = vec![c.name().to_string(), "--algebra".into(), self.algebra.to_string()];
        if let Some(k) = &self.kappa {
            out.extend(["--kappa".into(), k.to_string()]);
        }
        if let Some(w) = &self.weight {
            out.extend(["--weight".into(), join(w.iter().map(|x| x.to_string()), ",")]);
        }
        if let Some(w) = &self.word {
            out.extend(["--w".into(), format_word(w)]);
        }
        if c == Command::KlPoly {
            out.extend(["--x".into(), format_word(&self.lower_word)]);
        }
        if c.uses_order() {
            out.extend(["--order".into(), self.order.to_string()]);
        }
        if c == Command::IrrChar {
            out.extend(["--reduction".into(), self.reduction.to_string()]);
        }
        if let Some(b) = self.delta_bound {
            out.extend(["--delta-bound".into(), b.to_string()]);
        }
        if self.format == Format::Json {
            out.extend(["--format".into(), "json".into()]);
        }
        out
    }
}

#[derive(Debug)]
pub enum CliError {
    /// `--help` or `--version`; printed to stdout with exit code 0.
    Info(String),
    Usage(String),
    Precondition(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => 0,
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Info(s) => f.write_str(s.trim_end()),
            CliError::Usage(s) => write!(f, "error: {}", s.trim_end()),
            CliError::Precondition(e) => write!(f, "error: precondition violated: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            CliError::Precondition(e)
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "walgebra", version, about = "Exact characters of principal W-algebra modules")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Central charge c(κ)
    CentralCharge(Opts),
    /// Conformal weight of the highest weight γ_λ̄
    ConformalWeight(Opts),
    /// Character of the Verma module with highest weight γ_λ̄
    VermaChar(Opts),
    /// Graded dimension of the vacuum algebra
    VacuumChar(Opts),
    /// Character of the irreducible module L(γ_{overline{w∘Λ}})
    IrrChar(Opts),
    /// Simple roots, Coxeter matrix and word data of the integral Weyl group
    IntegralWeyl(Opts),
    /// Kazhdan–Lusztig polynomials P_{x,w} and Q_{x,w} in the integral Weyl group
    KlPoly(Opts),
    /// Domain predicates for Λ
    Check(Opts),
}

#[derive(Args, Debug)]
struct Opts {
    /// Lie type, e.g. A1, B2, E6
    #[arg(long)]
    algebra: String,
    /// Level shift κ = k + h∨ as p/q
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    /// λ̄ in the fundamental-weight basis, comma separated
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Word in the integral simple reflections, 1-based and space separated; "" is e
    #[arg(long = "w", allow_hyphen_values = true)]
    w: Option<String>,
    /// Lower element for kl-poly, same syntax as --w
    #[arg(long = "x", allow_hyphen_values = true)]
    x: Option<String>,
    /// Number of q-steps beyond the leading term
    #[arg(long, allow_hyphen_values = true)]
    order: Option<usize>,
    #[arg(long, value_enum)]
    reduction: Option<ReductionArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override for the δ-degree bound of the integral root slice
    #[arg(long, allow_hyphen_values = true)]
    delta_bound: Option<i64>,
}

fn join(items: impl IntoIterator<Item = String>, sep: &str) -> String {
    items.into_iter().collect::<Vec<_>>().join(sep)
}

fn format_word(word: &[usize]) -> String {
    join(word.iter().map(|i| (i + 1).to_string()), " ")
}

fn display_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        format_word(word)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_word(flag: &str, s: &str) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(usage(format!("--{flag}: `{t}` is not a generator index (indices start at 1)"))),
        })
        .collect()
}

/// Parses `argv` (without the program name) into a validated spec.
pub fn parse_spec<I, S>(argv: I) -> Result<CommandSpec, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("walgebra".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
        clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            CliError::Usage(format!("missing command\n\n{e}"))
        }
        _ => CliError::Usage(e.to_string().trim_start_matches("error: ").to_string()),
    })?;
    let (command, opts) = match cli.command {
        Sub::CentralCharge(o) => (Command::CentralCharge, o),
        Sub::ConformalWeight(o) => (Command::ConformalWeight, o),
        Sub::VermaChar(o) => (Command::VermaChar, o),
        Sub::VacuumChar(o) => (Command::VacuumChar, o),
        Sub::IrrChar(o) => (Command::IrrChar, o),
        Sub::IntegralWeyl(o) => (Command::IntegralWeyl, o),
        Sub::KlPoly(o) => (Command::KlPoly, o),
        Sub::Check(o) => (Command::Check, o),
    };
    let name = command.name();
    let algebra: LieType = opts.algebra.parse().map_err(|e: Error| usage(format!("--algebra: {e}")))?;
    let rank = algebra.rank();

    let kappa = match (&opts.kappa, command.needs_kappa()) {
        (Some(k), true) => Some(parse_rational(k).map_err(|e| usage(format!("--kappa: {e}")))?),
        (None, true) => return Err(usage(format!("{name} requires --kappa"))),
        (Some(_), false) => return Err(usage(format!("{name} does not take --kappa"))),
        (None, false) => None,
    };
    let weight = match (&opts.weight, command.needs_weight()) {
        (Some(w), true) => {
            let coords = w
                .split(',')
                .map(|t| parse_rational(t).map_err(|e| usage(format!("--weight: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != rank {
                return Err(usage(format!(
                    "--weight: {algebra} has rank {rank}, so the weight needs {rank} coordinates, found {}",
                    coords.len()
                )));
            }
            Some(coords)
        }
        (None, true) => return Err(usage(format!("{name} requires --weight"))),
        (Some(_), false) => return Err(usage(format!("{name} does not take --weight"))),
        (None, false) => None,
    };
    let word = match (&opts.w, command.uses_word()) {
        (Some(w), true) => Some(parse_word("w", w)?),
        (None, true) if command == Command::IrrChar => Some(Vec::new()),
        (None, true) if command == Command::KlPoly => return Err(usage("kl-poly requires --w")),
        (Some(_), false) => return Err(usage(format!("{name} does not take --w"))),
        (None, _) => None,
    };
    let lower_word = match (&opts.x, command) {
        (Some(x), Command::KlPoly) => parse_word("x", x)?,
        (None, Command::KlPoly) => Vec::new(),
        (Some(_), _) => return Err(usage(format!("{name} does not take --x"))),
        (None, _) => Vec::new(),
    };
    if opts.order.is_some() && !command.uses_order() {
        return Err(usage(format!("{name} does not take --order")));
    }
    if opts.reduction.is_some() && command != Command::IrrChar {
        return Err(usage(format!("{name} does not take --reduction")));
    }
    if let Some(b) = opts.delta_bound {
        if !command.uses_delta_bound() {
            return Err(usage(format!("{name} does not take --delta-bound")));
        }
        if b < 1 {
            return Err(usage(format!("--delta-bound: {}", Error::InvalidDegreeBound(b))));
        }
    }
    Ok(CommandSpec {
        command,
        algebra,
        kappa,
        weight,
        word,
        lower_word,
        order: opts.order.unwrap_or(DEFAULT_ORDER),
        reduction: match opts.reduction {
            Some(ReductionArg::Minus) => Reduction::Minus,
            _ => Reduction::Plus,
        },
        format: opts.format,
        delta_bound: opts.delta_bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub nondegenerate: bool,
    pub cond_plus: bool,
    pub antidominant: bool,
    pub dom_plus: bool,
    pub dom_minus: bool,
    pub dom_plus_nondeg: bool,
    pub dom_minus_nondeg: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleRootInfo {
    /// 1-based generator index.
    pub index: usize,
    /// Finite part in simple-root coordinates.
    pub finite: Vec<i64>,
    pub delta_degree: i64,
    /// `⟨Λ+ρ, β∨⟩`.
    pub pairing: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementInfo {
    pub word: Vec<usize>,
    pub length: usize,
    pub right_descents: Vec<usize>,
    pub reduced_word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralInfo {
    pub delta_bound: i64,
    pub simple_roots: Vec<SimpleRootInfo>,
    /// Entries are `m_ij` as strings, `"inf"` for ∞.
    pub coxeter_matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub element: Option<ElementInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlInfo {
    pub x: Vec<usize>,
    pub w: Vec<usize>,
    pub bruhat_leq: bool,
    /// Coefficients of `P_{x,w}` from degree 0.
    pub p: Vec<String>,
    /// Coefficients of `Q_{x,w}` from degree 0.
    pub q: Vec<String>,
    pub mu: String,
}

/// Result record shared by all commands. Every number is an exact string;
/// words are 1-based. Fields not produced by a command are omitted from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kappa: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub central_charge: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub offset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub step: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub highest_weight: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub word: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reduction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub checks: Option<Checks>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub integral: Option<IntegralInfo>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kl: Option<KlInfo>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub series_text: Option<String>,
}

impl Report {
    fn new(spec: &CommandSpec) -> Self {
        Report {
            command: spec.command.name().to_string(),
            algebra: spec.algebra.to_string(),
            kappa: spec.kappa.as_ref().map(|k| k.to_string()),
            central_charge: None,
            delta: None,
            offset: None,
            step: None,
            coefficients: None,
            weight: spec.weight.as_ref().map(|w| strings(w)),
            highest_weight: None,
            word: None,
            reduction: None,
            checks: None,
            integral: None,
            kl: None,
            warnings: Vec::new(),
            series_text: None,
        }
    }

    fn set_series(&mut self, s: &QSeries) {
        self.offset = Some(s.offset().to_string());
        self.step = Some(s.step().to_string());
        self.coefficients = Some(strings(s.coeffs()));
        self.series_text = Some(s.to_string());
    }

    fn set_character(&mut self, ch: &CharacterResult) {
        self.central_charge = Some(ch.central_charge.to_string());
        self.delta = Some(ch.conformal_weight.to_string());
        self.set_series(&ch.series);
        self.warnings = ch.warnings.clone();
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn affine_weight(rs: &RootSystem, spec: &CommandSpec) -> Result<AffineWeight, Error> {
    let lam_bar = spec.weight.clone().expect("validated weight");
    AffineWeight::at_kappa(rs, lam_bar, spec.kappa.as_ref().expect("validated kappa"))
}

fn context(rs: &RootSystem, spec: &CommandSpec) -> Result<IntegralCoxeterContext, Error> {
    let lam = affine_weight(rs, spec)?;
    match spec.delta_bound {
        Some(b) => IntegralCoxeterContext::with_bound(rs, &lam, b),
        None => IntegralCoxeterContext::new(rs, &lam),
    }
}

/// Runs the library operation named by `spec`.
pub fn execute(spec: &CommandSpec) -> Result<Report, CliError> {
    let rs = RootSystem::new(spec.algebra);
    let mut report = Report::new(spec);
    match spec.command {
        Command::CentralCharge => {
            let kappa = spec.kappa.as_ref().expect("validated kappa");
            report.central_charge = Some(central_charge(&rs, kappa)?.to_string());
        }
        Command::ConformalWeight => {
            let kappa = spec.kappa.as_ref().expect("validated kappa");
            let w = spec.weight.as_ref().expect("validated weight");
            report.central_charge = Some(central_charge(&rs, kappa)?.to_string());
            report.delta = Some(conformal_weight(&rs, w, kappa)?.to_string());
        }
        Command::VermaChar => {
            let kappa = spec.kappa.as_ref().expect("validated kappa");
            let w = spec.weight.as_ref().expect("validated weight");
            report.set_character(&verma_character(&rs, w, kappa, spec.order)?);
        }
        Command::VacuumChar => {
            report.set_series(&vacuum_algebra_character(&rs, spec.order));
        }
        Command::IrrChar => {
            let ctx = context(&rs, spec)?;
            let word = spec.word.as_deref().unwrap_or(&[]);
            let w = ctx.element_from_word(word)?;
            let ch = match spec.reduction {
                Reduction::Plus => irreducible_character_plus(&ctx, &w, spec.order)?,
                Reduction::Minus => irreducible_character_minus(&ctx, &w, spec.order)?,
            };
            report.set_character(&ch);
            report.highest_weight = Some(strings(&ch.metadata.highest_weight));
            report.word = Some(one_based(word));
            report.reduction = Some(spec.reduction.to_string());
        }
        Command::IntegralWeyl => {
            let ctx = context(&rs, spec)?;
            let pairings = ctx.simple_pairings();
            let simple_roots = ctx
                .simple_roots()
                .iter()
                .zip(&pairings)
                .enumerate()
                .map(|(i, (beta, pairing))| {
                    let id = rs.root_id(beta.finite()).expect("finite part is a root");
                    SimpleRootInfo {
                        index: i + 1,
                        finite: rs.root_coefficients(id).to_vec(),
                        delta_degree: beta.degree(),
                        pairing: pairing.to_string(),
                    }
                })
                .collect();
            let coxeter_matrix = ctx
                .coxeter_matrix()
                .iter()
                .map(|row| row.iter().map(|m| m.map_or("inf".to_string(), |m| m.to_string())).collect())
                .collect();
            let element = match &spec.word {
                Some(word) => {
                    let w = ctx.element_from_word(word)?;
                    let (length, descents) = ctx.length_and_descents(w.element())?;
                    Some(ElementInfo {
                        word: one_based(word),
                        length,
                        right_descents: one_based(&descents),
                        reduced_word: one_based(w.word()),
                    })
                }
                None => None,
            };
            report.integral = Some(IntegralInfo {
                delta_bound: ctx.slice_bound(),
                simple_roots,
                coxeter_matrix,
                element,
            });
        }
        Command::KlPoly => {
            let ctx = context(&rs, spec)?;
            let w = ctx.element_from_word(spec.word.as_deref().expect("validated word"))?;
            let x = ctx.element_from_word(&spec.lower_word)?;
            let mut session = KlSession::new(&ctx);
            let p = session.kl_polynomial(x.element(), w.element());
            let q = session.inverse_kl(x.element(), w.element());
            report.kl = Some(KlInfo {
                x: one_based(x.word()),
                w: one_based(w.word()),
                bruhat_leq: ctx.bruhat_leq(x.element(), w.element()),
                p: strings(p.coeffs()),
                q: strings(q.coeffs()),
                mu: session.mu_coefficient(x.element(), w.element()).to_string(),
            });
        }
        Command::Check => {
            let lam = affine_weight(&rs, spec)?;
            report.checks = Some(Checks {
                nondegenerate: is_nondegenerate(&rs, &lam),
                cond_plus: satisfies_cond_plus(&rs, &lam),
                antidominant: is_antidominant(&rs, &lam)?,
                dom_plus: domain_membership(&rs, &lam, Sign::Plus, false)?,
                dom_minus: domain_membership(&rs, &lam, Sign::Minus, false)?,
                dom_plus_nondeg: domain_membership(&rs, &lam, Sign::Plus, true)?,
                dom_minus_nondeg: domain_membership(&rs, &lam, Sign::Minus, true)?,
            });
        }
    }
    Ok(report)
}

fn poly_text(coeffs: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(i, c)| match i {
            0 => c.clone(),
            1 if c == "1" => "q".to_string(),
            1 => format!("{c}q"),
            _ if c == "1" => format!("q^{i}"),
            _ => format!("{c}q^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn text(r: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    let mut header = format!("algebra {}", r.algebra);
    if let Some(k) = &r.kappa {
        header += &format!(", kappa {k}");
    }
    if let Some(w) = &r.weight {
        header += &format!(", weight ({})", w.join(", "));
    }
    if let Some(w) = &r.word {
        header += &format!(", w = {}", display_word(&w.iter().map(|i| i - 1).collect::<Vec<_>>()));
    }
    if let Some(red) = &r.reduction {
        header += &format!(", reduction {red}");
    }
    line(header);
    if let Some(c) = &r.central_charge {
        line(format!("c = {c}"));
    }
    if let Some(d) = &r.delta {
        line(format!("Delta = {d}"));
    }
    if let Some(hw) = &r.highest_weight {
        line(format!("highest weight ({})", hw.join(", ")));
    }
    if let Some(s) = &r.series_text {
        line(format!("ch = {s}"));
    }
    if let Some(c) = &r.checks {
        for (name, v) in [
            ("nondegenerate", c.nondegenerate),
            ("cond_plus", c.cond_plus),
            ("antidominant", c.antidominant),
            ("dom_plus", c.dom_plus),
            ("dom_minus", c.dom_minus),
            ("dom_plus_nondeg", c.dom_plus_nondeg),
            ("dom_minus_nondeg", c.dom_minus_nondeg),
        ] {
            line(format!("{name} = {v}"));
        }
    }
    if let Some(info) = &r.integral {
        line(format!("simple roots (delta-degree bound {}):", info.delta_bound));
        for b in &info.simple_roots {
            let coords = join(b.finite.iter().map(|c| c.to_string()), ", ");
            line(format!(
                "  {}: finite ({coords}) + {} delta, <Lambda+rho, beta^vee> = {}",
                b.index, b.delta_degree, b.pairing
            ));
        }
        line("coxeter matrix:".to_string());
        for row in &info.coxeter_matrix {
            line(format!("  {}", row.join(" ")));
        }
        if let Some(e) = &info.element {
            let zero: Vec<usize> = e.word.iter().map(|i| i - 1).collect();
            let red: Vec<usize> = e.reduced_word.iter().map(|i| i - 1).collect();
            line(format!("w = {}", display_word(&zero)));
            line(format!("length = {}", e.length));
            line(format!("right descents = {{{}}}", join(e.right_descents.iter().map(|i| i.to_string()), ", ")));
            line(format!("reduced word = {}", display_word(&red)));
        }
    }
    if let Some(kl) = &r.kl {
        let x: Vec<usize> = kl.x.iter().map(|i| i - 1).collect();
        let w: Vec<usize> = kl.w.iter().map(|i| i - 1).collect();
        line(format!("x = {}, w = {}, x <= w: {}", display_word(&x), display_word(&w), kl.bruhat_leq));
        line(format!("P = {}", poly_text(&kl.p)));
        line(format!("Q = {}", poly_text(&kl.q)));
        line(format!("mu = {}", kl.mu));
    }
    out
}

/// Renders a report; JSON output is a single line.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => text(report),
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

/// Output of one invocation: exit code, stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let fail = |e: CliError| {
        let msg = format!("{e}\n");
        match e {
            CliError::Info(_) => Outcome {
                code: 0,
                stdout: msg,
                stderr: String::new(),
            },
            _ => Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: msg,
            },
        }
    };
    let spec = match parse_spec(argv) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match execute(&spec) {
        Ok(report) => {
            let mut stderr = String::new();
            for w in &report.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            Outcome {
                code: 0,
                stdout: render(&report, spec.format),
                stderr,
            }
        }
        Err(e) => fail(e),
    }
}
