//! Command-line front end: parses a command, computes the requested object
//! and writes it as text, JSON or LaTeX.

mod format;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use msym::bases::{convert, schur, schur_star, to_monomials, Basis, BasisCache, BasisExpansion};
use msym::combinatorics::parse_list;
use msym::kostka::{
    check_conjectures, expand_mod_Lm, kostka_composition, kostka_table, kostka_table_in, verify_identities,
    verify_kostka_relations, Bounds, ConjectureReport, KostkaTable, VerificationReport,
};
use msym::macdonald::hall_littlewood;
use msym::polyring::XPolynomial;
use msym::{Composition, Error, MPartition, QTPoly, QTScalar};
use num_rational::BigRational;
use serde_json::{json, Value};

use format::{latex_expansion, latex_label, latex_poly, latex_xpoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "msym", about = "m-symmetric Macdonald polynomials and generalized (q,t)-Kostka coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "latex")]
    json: bool,
    /// Emit LaTeX.
    #[arg(long, global = true)]
    latex: bool,
    /// Append exact evaluations at `q=Q t=T` (rationals such as 1/2).
    #[arg(long, global = true, num_args = 2, value_names = ["q=Q", "t=T"])]
    eval: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Non-symmetric Macdonald polynomial E_η.
    E {
        eta: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Hall-Littlewood polynomial: H_a for a composition, P_Λ(0,t) for `a|λ`.
    Hl {
        label: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// m-symmetric Macdonald polynomial P_Λ.
    #[command(name = "P")]
    MacP(PolyArgs),
    /// Integral form J_Λ.
    #[command(name = "J")]
    MacJ(PolyArgs),
    /// m-symmetric Schur function s_Λ.
    Schur(PolyArgs),
    /// Dual m-symmetric Schur function s*_Λ.
    SchurStar(PolyArgs),
    /// Table of K_{ΩΛ}(q,t) for fixed Λ.
    Kostka {
        label: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// K_{ωη}(q,t) for compositions ω, η.
    KostkaComp { omega: String, eta: String },
    /// ℘(J_η) modulo L_m as ω ↦ K_{ωη}.
    ModLm {
        eta: String,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum, default_value_t = Target::All)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        m_max: usize,
        #[arg(long, default_value_t = 4)]
        d_max: u32,
    },
}

#[derive(Args, Debug)]
struct PolyArgs {
    label: String,
    /// Number of variables (default m + |Λ|).
    #[arg(long)]
    n: Option<usize>,
    /// Print as an expansion in this basis (m, p, k, s, s*, P, J, HL) instead of in monomials.
    #[arg(long = "in")]
    basis: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    All,
    Identities,
    Kostka,
    Conjectures,
}

enum Format {
    Text,
    Json,
    Latex,
}

enum Outcome {
    Poly { name: String, poly: XPolynomial<QTScalar> },
    Expansion { name: String, expansion: BasisExpansion },
    Table(std::sync::Arc<KostkaTable>),
    Scalar { name: String, value: QTPoly },
    ModLm { eta: Composition, map: BTreeMap<Composition, QTPoly> },
    Verify(Verification),
}

struct Verification {
    reports: Vec<(&'static str, VerificationReport)>,
    conjectures: Option<ConjectureReport>,
}

/// Failure that maps to an exit code.
struct Fail {
    code: i32,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible(_) => EXIT_INFEASIBLE,
            Error::Internal(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Fail { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail { code: EXIT_USAGE, msg: msg.into() }
}

fn infeasible(msg: impl Into<String>) -> Fail {
    Fail { code: EXIT_INFEASIBLE, msg: msg.into() }
}

fn parse_label(s: &str) -> Result<MPartition, Fail> {
    Ok(s.parse::<MPartition>()?)
}

fn parse_comp(s: &str) -> Result<Composition, Fail> {
    if s.contains('|') {
        return Err(usage(format!("cannot parse `{s}`: expected a composition without `|`")));
    }
    Ok(parse_list(s)?)
}

fn parse_eval(v: &[String]) -> Result<Option<(BigRational, BigRational)>, Fail> {
    if v.is_empty() {
        return Ok(None);
    }
    let (mut q, mut t) = (None, None);
    for tok in v {
        let (k, val) = tok.split_once('=').ok_or_else(|| usage(format!("cannot parse `{tok}`: expected q=Q or t=T")))?;
        let r: BigRational =
            val.trim().parse().map_err(|_| usage(format!("cannot parse `{val}`: expected a rational number")))?;
        match k.trim() {
            "q" => q = Some(r),
            "t" => t = Some(r),
            _ => return Err(usage(format!("cannot parse `{tok}`: expected q=Q or t=T"))),
        }
    }
    match (q, t) {
        (Some(q), Some(t)) => Ok(Some((q, t))),
        _ => Err(usage("--eval needs both q=Q and t=T")),
    }
}

/// Variables for an object of `l`: `n` if given, else `m + |Λ|` (at least 1).
fn vars_for(l: &MPartition, n: Option<usize>, min: usize) -> Result<usize, Fail> {
    let need = min.max(1);
    let n = n.unwrap_or_else(|| (l.m() + l.degree() as usize).max(need));
    if n < need {
        return Err(infeasible(format!("N = {n} is too small for {l} (needs at least {need})")));
    }
    Ok(n)
}

fn padded(eta: &[u32], n: Option<usize>) -> Result<Composition, Fail> {
    let n = n.unwrap_or(eta.len()).max(1);
    if n < eta.len() {
        return Err(infeasible(format!("N = {n} is shorter than the composition of length {}", eta.len())));
    }
    let mut v = eta.to_vec();
    v.resize(n, 0);
    Ok(v)
}

fn poly_command(kind: Basis, name: &str, args: &PolyArgs) -> Result<Outcome, Fail> {
    let l = parse_label(&args.label)?;
    let name = format!("{name}[{l}]");
    let expansion = match kind {
        Basis::S => schur(&l)?,
        Basis::Sstar => schur_star(&l)?,
        _ => BasisExpansion::single(kind, &l),
    };
    if let Some(b) = &args.basis {
        let b: Basis = b.parse()?;
        return Ok(Outcome::Expansion { name, expansion: convert(&expansion, b)? });
    }
    let min = match kind {
        Basis::MacP | Basis::MacJ => l.len(),
        _ => l.m() + l.degree() as usize,
    };
    let n = vars_for(&l, args.n, min)?;
    let poly = match kind {
        Basis::MacP | Basis::MacJ => {
            let cache = BasisCache::global();
            if kind == Basis::MacP {
                cache.mac.msym_P(&l, n)?
            } else {
                cache.mac.integral_J(&l, n)?
            }
        }
        _ => to_monomials(&expansion, n)?,
    };
    Ok(Outcome::Poly { name, poly })
}

fn compute(cmd: &Command) -> Result<Outcome, Fail> {
    let cache = BasisCache::global();
    Ok(match cmd {
        Command::E { eta, n } => {
            let eta = padded(&parse_comp(eta)?, *n)?;
            let poly = (*cache.mac.nonsym_E(&eta)?).clone();
            Outcome::Poly { name: format!("E[{}]", join(&eta)), poly }
        }
        Command::Hl { label, n } if label.contains('|') => {
            let l = parse_label(label)?;
            let n = vars_for(&l, *n, l.m() + l.degree() as usize)?;
            Outcome::Poly { name: format!("HL[{l}]"), poly: cache.macdonald_poly(Basis::HL, &l, n)? }
        }
        Command::Hl { label, n } => {
            let a = padded(&parse_comp(label)?, *n)?;
            Outcome::Poly { name: format!("H[{}]", join(&a)), poly: hall_littlewood(cache.mac.params(), &a)? }
        }
        Command::MacP(a) => poly_command(Basis::MacP, "P", a)?,
        Command::MacJ(a) => poly_command(Basis::MacJ, "J", a)?,
        Command::Schur(a) => poly_command(Basis::S, "s", a)?,
        Command::SchurStar(a) => poly_command(Basis::Sstar, "s*", a)?,
        Command::Kostka { label, n } => {
            let l = parse_label(label)?;
            match n {
                None => Outcome::Table(kostka_table(&l)?),
                Some(n) => {
                    let need = l.m() + l.degree() as usize;
                    if *n < need {
                        return Err(infeasible(format!("N = {n} is too small for {l} (needs at least {need})")));
                    }
                    Outcome::Table(std::sync::Arc::new(kostka_table_in(&l, *n)?))
                }
            }
        }
        Command::KostkaComp { omega, eta } => {
            let (o, e) = (parse_comp(omega)?, parse_comp(eta)?);
            let value = kostka_composition(&o, &e)?;
            Outcome::Scalar { name: format!("K[{}, {}]", join(&o), join(&e)), value }
        }
        Command::ModLm { eta, m } => {
            let eta = parse_comp(eta)?;
            let m = m.unwrap_or(eta.len());
            Outcome::ModLm { map: expand_mod_Lm(&eta, m)?, eta }
        }
        Command::Verify { target, m_max, d_max } => {
            let b = Bounds { m_max: *m_max, d_max: *d_max };
            let mut reports = Vec::new();
            if matches!(target, Target::All | Target::Identities) {
                reports.push(("identities", verify_identities(b)?));
            }
            if matches!(target, Target::All | Target::Kostka) {
                reports.push(("kostka", verify_kostka_relations(b)?));
            }
            let conjectures = if matches!(target, Target::All | Target::Conjectures) {
                Some(check_conjectures(b)?)
            } else {
                None
            };
            Outcome::Verify(Verification { reports, conjectures })
        }
    })
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

type Eval<'a> = Option<&'a (BigRational, BigRational)>;

fn eval_poly(p: &QTPoly, ev: Eval) -> Option<String> {
    ev.map(|(q, t)| p.eval(q, t).to_string())
}

fn eval_xpoly(f: &XPolynomial<QTScalar>, ev: Eval) -> Result<Option<String>, Fail> {
    Ok(match ev {
        Some((q, t)) => Some(f.eval_qt(q, t)?.to_string()),
        None => None,
    })
}

fn eval_scalar(c: &QTScalar, ev: Eval) -> Result<Option<String>, Fail> {
    Ok(match ev {
        Some((q, t)) => Some(c.eval(q, t)?.to_string()),
        None => None,
    })
}

fn with_eval(s: String, e: Option<String>) -> String {
    match e {
        Some(v) => format!("{s}  [= {v}]"),
        None => s,
    }
}

fn render_text(o: &Outcome, ev: Eval) -> Result<String, Fail> {
    let mut out = String::new();
    match o {
        Outcome::Poly { name, poly } => {
            out.push_str(&format!("{name} = {poly}\n"));
            if let (Some(v), Some((q, t))) = (eval_xpoly(poly, ev)?, ev) {
                out.push_str(&format!("at q={q}, t={t}: {v}\n"));
            }
        }
        Outcome::Expansion { name, expansion } => {
            out.push_str(&format!("{name} =\n"));
            for (l, c) in expansion.terms() {
                let line = format!("  {c} * {}[{l}]", expansion.basis);
                out.push_str(&with_eval(line, eval_scalar(&c, ev)?));
                out.push('\n');
            }
        }
        Outcome::Table(tab) => {
            let w = tab.entries.iter().map(|e| e.label.to_string().len()).max().unwrap_or(0);
            for e in &tab.entries {
                let line = format!("{:<w$}  {}", e.label.to_string(), e.value);
                out.push_str(&with_eval(line, eval_poly(&e.value, ev)));
                out.push('\n');
            }
        }
        Outcome::Scalar { name, value } => {
            out.push_str(&with_eval(format!("{name} = {value}"), eval_poly(value, ev)));
            out.push('\n');
        }
        Outcome::ModLm { map, .. } => {
            let w = map.keys().map(|k| join(k).len()).max().unwrap_or(0);
            for (k, v) in map {
                out.push_str(&with_eval(format!("{:<w$}  {v}", join(k)), eval_poly(v, ev)));
                out.push('\n');
            }
        }
        Outcome::Verify(v) => out.push_str(&render_verify(v)),
    }
    Ok(out)
}

fn render_verify(v: &Verification) -> String {
    let mut out = String::new();
    let mut suite = |name: &str, instances: usize, failures: &[msym::kostka::Witness]| {
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {name}  ({instances} instances, {} failures)\n", failures.len()));
        for w in failures {
            out.push_str(&format!("  {}: {}\n    reproduce: {}\n", w.instance, w.detail, w.reproduce));
        }
    };
    for (_, r) in &v.reports {
        for s in &r.suites {
            suite(&s.name, s.instances, &s.failures);
        }
    }
    if let Some(c) = &v.conjectures {
        for s in &c.checks {
            suite(&s.name, s.instances, &s.failures);
        }
    }
    out.push_str(&format!("proved-statement failures: {}\n", v.proved_failures()));
    if let Some(c) = &v.conjectures {
        out.push_str(&format!("conjecture_violations: {}\n", c.conjecture_violations));
    }
    out
}

impl Verification {
    fn proved_failures(&self) -> usize {
        self.reports.iter().map(|(_, r)| r.failure_count()).sum()
    }
}

fn render_latex(o: &Outcome) -> String {
    match o {
        Outcome::Poly { name, poly } => format!("{} = {}\n", latex_name(name), latex_xpoly(poly)),
        Outcome::Expansion { name, expansion } => format!("{} = {}\n", latex_name(name), latex_expansion(expansion)),
        Outcome::Table(tab) => {
            let terms: Vec<String> = tab
                .entries
                .iter()
                .map(|e| {
                    let c = if e.value.is_one() {
                        String::new()
                    } else if e.value.is_monomial() {
                        latex_poly(&e.value)
                    } else {
                        format!("({})", latex_poly(&e.value))
                    };
                    format!("{c} s_{{{}}}", latex_label(&e.label)).trim().to_string()
                })
                .collect();
            format!("\\wp(J_{{{}}}) = {}\n", latex_label(&tab.source), terms.join(" + "))
        }
        Outcome::Scalar { name, value } => format!("{} = {}\n", latex_name(name), latex_poly(value)),
        Outcome::ModLm { eta, map } => {
            let terms: Vec<String> = map.iter().map(|(k, v)| format!("({}) H_{{{}}}", latex_poly(v), join(k))).collect();
            format!("\\wp(J_{{{}}}) \\equiv {} \\mod \\mathcal{{L}}_m\n", join(eta), terms.join(" + "))
        }
        Outcome::Verify(v) => render_verify(v),
    }
}

/// `P[1,0|2]` to `P_{1,0;2}`.
fn latex_name(name: &str) -> String {
    let Some((head, rest)) = name.split_once('[') else { return name.to_string() };
    let inner = rest.trim_end_matches(']');
    let inner = match inner.parse::<MPartition>() {
        Ok(l) => latex_label(&l),
        Err(_) => inner.to_string(),
    };
    let head = match head {
        "s*" => "s^*",
        "HL" => "P^{HL}",
        h => h,
    };
    format!("{head}_{{{inner}}}")
}

fn json_eval_poly(p: &QTPoly, ev: Eval) -> Value {
    eval_poly(p, ev).map_or(Value::Null, Value::String)
}

fn render_json(cmd: &str, o: &Outcome, ev: Eval) -> Result<Value, Fail> {
    let result = match o {
        Outcome::Poly { name, poly } => json!({
            "name": name,
            "text": poly.to_string(),
            "polynomial": val(poly),
            "eval": eval_xpoly(poly, ev)?,
        }),
        Outcome::Expansion { name, expansion } => {
            let evals: Vec<Value> = expansion
                .terms()
                .iter()
                .map(|(l, c)| Ok(json!({ "label": l, "eval": eval_scalar(c, ev)? })))
                .collect::<Result<_, Fail>>()?;
            json!({ "name": name, "expansion": val(expansion), "eval": if ev.is_some() { Value::Array(evals) } else { Value::Null } })
        }
        Outcome::Table(tab) => {
            let entries: Vec<Value> = tab
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "label": e.label,
                        "value": e.value,
                        "text": e.value.to_string(),
                        "nonnegative": e.nonnegative,
                        "eval": json_eval_poly(&e.value, ev),
                    })
                })
                .collect();
            json!({ "source": tab.source, "entries": entries })
        }
        Outcome::Scalar { name, value } => json!({
            "name": name, "value": value, "text": value.to_string(), "eval": json_eval_poly(value, ev),
        }),
        Outcome::ModLm { eta, map } => {
            let entries: Vec<Value> = map
                .iter()
                .map(|(k, v)| json!({ "omega": k, "value": v, "text": v.to_string(), "eval": json_eval_poly(v, ev) }))
                .collect();
            json!({ "eta": eta, "entries": entries })
        }
        Outcome::Verify(v) => {
            let mut reports = serde_json::Map::new();
            for (name, r) in &v.reports {
                reports.insert(name.to_string(), val(r));
            }
            if let Some(c) = &v.conjectures {
                reports.insert("conjectures".into(), val(c));
            }
            json!({
                "reports": reports,
                "proved_failures": v.proved_failures(),
                "conjecture_violations": v.conjectures.as_ref().map(|c| c.conjecture_violations),
            })
        }
    };
    Ok(json!({ "schema": 1, "command": cmd, "result": result }))
}

fn val<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::E { .. } => "e",
        Command::Hl { .. } => "hl",
        Command::MacP(_) => "P",
        Command::MacJ(_) => "J",
        Command::Schur(_) => "schur",
        Command::SchurStar(_) => "schur-star",
        Command::Kostka { .. } => "kostka",
        Command::KostkaComp { .. } => "kostka-comp",
        Command::ModLm { .. } => "mod-lm",
        Command::Verify { .. } => "verify",
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), Fail> {
    let ev = parse_eval(&cli.opts.eval)?;
    let fmt = if cli.opts.json {
        Format::Json
    } else if cli.opts.latex {
        Format::Latex
    } else {
        Format::Text
    };
    let outcome = compute(&cli.command)?;
    let code = match &outcome {
        Outcome::Verify(v) if v.proved_failures() > 0 => EXIT_FAILURE,
        _ => EXIT_OK,
    };
    let text = match fmt {
        Format::Text => render_text(&outcome, ev.as_ref())?,
        Format::Latex => render_latex(&outcome),
        Format::Json => {
            let v = render_json(command_name(&cli.command), &outcome, ev.as_ref())?;
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
    };
    Ok((text, code))
}

/// Runs `msym` with `args` (program name first), writing all output to `out`.
/// Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(r) => r,
        Err(f) => (format!("error: {}\n", f.msg), f.code),
    };
    let _ = out.write_all(text.as_bytes());
    code
}
