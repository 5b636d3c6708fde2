//! The `fdekit` command line. [`run`] parses arguments, dispatches and
//! returns the exit code: 0 on success or a positive verdict, 1 on a
//! negative verdict, 2 on usage, parse or input errors.

pub mod repro;

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bd::regular::{count_strongly_regular, sr_decode, sr_encode, SrIndex};
use crate::bd::{preset, PRESET_NAMES};
use crate::definability::{
    common_preset, definable, interdefinable, logic_definable_in, synonymous, LogicHandle,
};
use crate::laws::{filter_with_stats, law_by_name, table_laws, undetermined_entries, verify, FilterResult};
use crate::matrix::clone::{term_functions, CloneConfig};
use crate::matrix::eval::{countermodel, equivalence_countermodel, evaluate, Assignment};
use crate::matrix::Matrix;
use crate::proof::{check, derived_rule_check, prove, DerivationFile, RuleId, Sequent, System};
use crate::syntax::{names, parse, parse_sequent, print, Signature};

#[derive(Debug, Parser)]
#[command(name = "fdekit", version, about = "Belnap-Dunn logic workbench")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a formula and print it canonically.
    Parse {
        formula: String,
        /// Preset or matrix file whose connectives are recognised.
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Evaluate a formula under an assignment such as `p=b,q=t`.
    Eval {
        #[arg(long)]
        matrix: String,
        formula: String,
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// Decide `premises |- conclusions`.
    Entails {
        #[arg(long)]
        matrix: String,
        sequent: String,
    },
    /// Decide whether two formulas are equivalent.
    Equiv {
        #[arg(long)]
        matrix: String,
        a: String,
        b: String,
    },
    /// Decide whether two formulas are synonymous.
    Synonymous {
        #[arg(long)]
        matrix: String,
        a: String,
        b: String,
    },
    /// Decide whether a connective is definable from others.
    Definable {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        target: String,
        /// Comma-separated connective names.
        #[arg(long, value_delimiter = ',')]
        using: Vec<String>,
    },
    /// Decide interdefinability of two preset logics.
    Interdef {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Common expansion; defaults to the registered one.
        #[arg(long)]
        common: Option<String>,
        /// Only check that `a` is definable in `b`.
        #[arg(long)]
        one_way: bool,
    },
    /// Generate the term functions of a given arity.
    Clone {
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 1)]
        arity: usize,
        /// Generators; all connectives of the matrix when omitted.
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        /// Print at most this many functions.
        #[arg(long, default_value_t = 64)]
        limit: usize,
    },
    /// Search for a cut-free derivation.
    Prove {
        #[arg(long, default_value = "BD")]
        system: String,
        sequent: String,
    },
    /// Check a derivation stored as JSON.
    Check {
        /// Overrides the system tag of the file.
        #[arg(long)]
        system: Option<String>,
        file: String,
    },
    /// Test whether a rule is derivable from the remaining ones.
    DerivedRule {
        #[arg(long, default_value = "CL")]
        system: String,
        rule: String,
    },
    /// Number of strongly regular matrices.
    CountSr,
    /// The strongly regular matrix with a given index, as matrix JSON.
    SrDecode {
        index: u64,
        /// Print tables instead of JSON.
        #[arg(long)]
        tables: bool,
    },
    /// The index of a strongly regular matrix (file or preset).
    SrEncode { matrix: String },
    /// Strongly regular matrices satisfying the given laws.
    LawsFilter {
        #[arg(long = "law")]
        laws: Vec<String>,
        /// Add every law of the distinguishing table.
        #[arg(long)]
        table: bool,
        /// Print members when there are at most this many.
        #[arg(long, default_value_t = 128)]
        limit: u64,
    },
    /// Run the checklist of claims.
    Repro,
}

/// A failure that maps to exit code 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// Direction, connective, verdict and witness of one definability check.
type Row = (String, String, bool, Option<String>);

/// Runs the command line given by `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Fail(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Every canonical connective.
fn full_signature() -> Signature {
    let extra = [
        (names::IMPL, 2),
        (names::BOT, 0),
        (names::DELTA, 1),
        (names::CIRC, 1),
        (names::CONS, 1),
        (names::DET, 1),
        (names::CONFL, 1),
        (names::BOTH, 0),
        (names::NEITHER, 0),
    ];
    extra
        .into_iter()
        .fold(Signature::bd(), |s, (n, a)| s.with(n, a).expect("distinct names"))
}

/// A preset name or the path of a matrix JSON file.
fn load_matrix(name: &str) -> Result<Matrix, Fail> {
    if let Some(m) = preset(name) {
        return Ok(m);
    }
    if Path::new(name).exists() {
        let text = std::fs::read_to_string(name)?;
        return Ok(Matrix::from_json(&text)?);
    }
    Err(Fail(format!(
        "`{name}` is neither a preset ({}) nor a readable file",
        PRESET_NAMES.join(", ")
    )))
}

fn system(name: &str) -> Result<System, Fail> {
    System::from_name(name).ok_or_else(|| Fail(format!("unknown system `{name}` (BD or CL)")))
}

fn handle(name: &str) -> Result<LogicHandle, Fail> {
    LogicHandle::preset(name).ok_or_else(|| Fail(format!("unknown preset `{name}`")))
}

fn verdict(out: Out, json: bool, yes: bool, yes_word: &str, no_word: &str, extra: Value, lines: &[String]) -> Result<i32, Fail> {
    if json {
        let mut v = json!({ "verdict": yes });
        if let (Value::Object(obj), Value::Object(more)) = (&mut v, extra) {
            obj.extend(more);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        writeln!(out, "{}", if yes { yes_word } else { no_word })?;
        for l in lines {
            writeln!(out, "{l}")?;
        }
    }
    Ok(if yes { 0 } else { 1 })
}

fn assignment_json(a: &Assignment, m: &Matrix) -> Value {
    Value::Object(
        a.iter()
            .map(|(v, x)| (v.to_string(), Value::String(m.name_of(x).to_string())))
            .collect(),
    )
}

fn dispatch(cli: &Cli, out: Out) -> Result<i32, Fail> {
    let json = cli.json;
    let cfg = CloneConfig::from_env();
    match &cli.command {
        Command::Parse { formula, matrix } => {
            let sig = match matrix {
                Some(m) => load_matrix(m)?.signature().clone(),
                None => full_signature(),
            };
            let f = parse(formula, &sig)?;
            if json {
                let vars: Vec<String> = f.variables().into_iter().collect();
                let v = json!({ "formula": print(&f), "size": f.size(), "depth": f.depth(), "variables": vars });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                writeln!(out, "{}", print(&f))?;
            }
            Ok(0)
        }
        Command::Eval { matrix, formula, assign } => {
            let m = load_matrix(matrix)?;
            let f = parse(formula, m.signature())?;
            let mut pairs = Vec::new();
            for part in assign.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (var, val) = part
                    .split_once('=')
                    .ok_or_else(|| Fail(format!("bad assignment `{part}`, expected var=value")))?;
                pairs.push((var.trim(), val.trim()));
            }
            let a = Assignment::from_names(&m, pairs.iter().copied())
                .ok_or_else(|| Fail(format!("unknown value in `{assign}`")))?;
            let v = evaluate(&m, &f, &a)?;
            if json {
                let v = json!({ "value": m.name_of(v), "designated": m.is_designated(v) });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                writeln!(out, "{}", m.name_of(v))?;
            }
            Ok(0)
        }
        Command::Entails { matrix, sequent } => {
            let m = load_matrix(matrix)?;
            let (l, r) = parse_sequent(sequent, m.signature())?;
            let cm = countermodel(&m, &l, &r)?;
            let lines: Vec<String> = cm.iter().map(|a| format!("countermodel: {}", a.display(&m))).collect();
            let extra = json!({ "countermodel": cm.as_ref().map(|a| assignment_json(a, &m)) });
            verdict(out, json, cm.is_none(), "YES", "NO", extra, &lines)
        }
        Command::Equiv { matrix, a, b } => {
            let m = load_matrix(matrix)?;
            let (fa, fb) = (parse(a, m.signature())?, parse(b, m.signature())?);
            let cm = equivalence_countermodel(&m, &fa, &fb)?;
            let lines: Vec<String> = cm.iter().map(|x| format!("countermodel: {}", x.display(&m))).collect();
            let extra = json!({ "countermodel": cm.as_ref().map(|x| assignment_json(x, &m)) });
            verdict(out, json, cm.is_none(), "YES", "NO", extra, &lines)
        }
        Command::Synonymous { matrix, a, b } => {
            let m = load_matrix(matrix)?;
            let (fa, fb) = (parse(a, m.signature())?, parse(b, m.signature())?);
            let yes = synonymous(&m, &fa, &fb)?;
            verdict(out, json, yes, "YES", "NO", json!({}), &[])
        }
        Command::Definable { matrix, target, using } => {
            let m = load_matrix(matrix)?;
            let v = definable(&m, target, using, &cfg)?;
            let witness = v.witness.as_ref().map(print);
            let reason = v.reason.as_ref().map(|r| r.to_string());
            let mut lines = Vec::new();
            if let Some(w) = &witness {
                lines.push(format!("witness: {w}"));
            }
            if let Some(r) = &reason {
                lines.push(format!("reason: {r}"));
            }
            let extra = json!({ "witness": witness, "reason": reason });
            verdict(out, json, v.definable, "DEFINABLE", "NOT DEFINABLE", extra, &lines)
        }
        Command::Interdef { a, b, common, one_way } => {
            let common_name = match common {
                Some(c) => c.clone(),
                None => common_preset(a, b)
                    .ok_or_else(|| Fail(format!("no registered common expansion for `{a}` and `{b}`; pass --common")))?
                    .to_string(),
            };
            let cm = load_matrix(&common_name)?;
            let (ha, hb) = (handle(a)?, handle(b)?);
            let (holds, rows): (bool, Vec<Row>) = if *one_way {
                let r = logic_definable_in(&ha, &hb, &cm, &cfg)?;
                let rows = r
                    .verdicts
                    .iter()
                    .map(|(c, v)| ("a<-b".to_string(), c.clone(), v.definable, v.witness.as_ref().map(print)))
                    .collect();
                (r.holds, rows)
            } else {
                let r = interdefinable(&ha, &hb, &cm, &cfg)?;
                let rows = r
                    .verdicts
                    .iter()
                    .map(|(d, c, v)| (d.to_string(), c.clone(), v.definable, v.witness.as_ref().map(print)))
                    .collect();
                (r.holds, rows)
            };
            let lines: Vec<String> = rows
                .iter()
                .map(|(d, c, ok, w)| match w {
                    Some(w) => format!("{d} {c}: {w}"),
                    None => format!("{d} {c}: {}", if *ok { "definable" } else { "not definable" }),
                })
                .collect();
            let extra = json!({
                "common": common_name,
                "checks": rows.iter().map(|(d, c, ok, w)| json!({"direction": d, "connective": c, "definable": ok, "witness": w})).collect::<Vec<_>>(),
            });
            let (yes, no) = if *one_way {
                ("DEFINABLE", "NOT DEFINABLE")
            } else {
                ("INTERDEFINABLE", "NOT INTERDEFINABLE")
            };
            verdict(out, json, holds, yes, no, extra, &lines)
        }
        Command::Clone { matrix, arity, gens, limit } => {
            let m = load_matrix(matrix)?;
            let gens: Vec<String> = if gens.is_empty() {
                m.signature().names().map(str::to_string).collect()
            } else {
                gens.clone()
            };
            let c = term_functions(&m, *arity, &gens, &cfg)?;
            let show = |t: &[u8]| t.iter().map(|&v| m.value_names()[v as usize].as_str()).collect::<Vec<_>>().join(" ");
            if json {
                let fs: Vec<Value> = (0..c.len())
                    .take(*limit)
                    .map(|i| json!({ "table": show(c.table(i)), "witness": print(&c.witness(i)) }))
                    .collect();
                let v = json!({ "arity": arity, "count": c.len(), "functions": fs });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                writeln!(out, "{} term functions of arity {arity}", c.len())?;
                for i in (0..c.len()).take(*limit) {
                    writeln!(out, "  [{}]  {}", show(c.table(i)), print(&c.witness(i)))?;
                }
            }
            Ok(0)
        }
        Command::Prove { system: sys, sequent } => {
            let sys = system(sys)?;
            let s = Sequent::parse(sequent)?;
            let d = prove(&s, sys);
            if json {
                let v = match &d {
                    Some(d) => serde_json::from_str::<Value>(
                        &DerivationFile {
                            system: sys,
                            derivation: d.clone(),
                        }
                        .to_json(),
                    )?,
                    None => Value::Null,
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "proved": d.is_some(), "derivation": v }))?)?;
            } else if let Some(d) = &d {
                writeln!(out, "PROVED")?;
                write!(out, "{}", d.render())?;
            } else {
                writeln!(out, "NOT PROVED")?;
            }
            Ok(if d.is_some() { 0 } else { 1 })
        }
        Command::Check { system: sys, file } => {
            let text = std::fs::read_to_string(file)?;
            let f = DerivationFile::from_json(&text)?;
            let sys = match sys {
                Some(s) => system(s)?,
                None => f.system,
            };
            let r = check(&f.derivation, sys);
            let lines: Vec<String> = r.as_ref().err().map(|e| e.to_string()).into_iter().collect();
            let extra = json!({
                "system": sys.name(),
                "path": r.as_ref().err().map(|e| e.path.clone()),
                "reason": r.as_ref().err().map(|e| e.reason.clone()),
            });
            verdict(out, json, r.is_ok(), "VALID", "INVALID", extra, &lines)
        }
        Command::DerivedRule { system: sys, rule } => {
            let sys = system(sys)?;
            let r = RuleId::from_name(rule).ok_or_else(|| Fail(format!("unknown rule `{rule}`")))?;
            let d = derived_rule_check(r, sys)?;
            let lines: Vec<String> = d.derivation.iter().map(|x| x.render()).collect();
            let extra = json!({ "rule": r.name(), "system": sys.name(), "conclusion": d.conclusion.to_string() });
            verdict(out, json, d.derivable(), "DERIVED", "NOT DERIVED", extra, &lines)
        }
        Command::CountSr => {
            let n = count_strongly_regular();
            if json {
                writeln!(out, "{}", json!({ "count": n }))?;
            } else {
                writeln!(out, "{n}")?;
            }
            Ok(0)
        }
        Command::SrDecode { index, tables } => {
            let m = sr_decode(SrIndex::new(*index)?);
            if *tables && !json {
                write!(out, "{m}")?;
            } else {
                writeln!(out, "{}", m.to_json())?;
            }
            Ok(0)
        }
        Command::SrEncode { matrix } => {
            let i = sr_encode(&load_matrix(matrix)?)?;
            if json {
                writeln!(out, "{}", json!({ "index": i.get() }))?;
            } else {
                writeln!(out, "{i}")?;
            }
            Ok(0)
        }
        Command::LawsFilter { laws: names, table, limit } => {
            let mut laws = if *table { table_laws() } else { Vec::new() };
            for n in names {
                let law = law_by_name(n)?;
                if !laws.iter().any(|l| l.name == law.name) {
                    laws.push(law);
                }
            }
            let (r, stats) = filter_with_stats(&laws);
            let members = r.indices(*limit);
            let verified = verify(&r, &laws, *limit);
            if json {
                let v = json!({
                    "laws": laws.iter().map(|l| l.name.clone()).collect::<Vec<_>>(),
                    "count": r.count(),
                    "all": r == FilterResult::All,
                    "indices": members.as_ref().map(|m| m.iter().map(|i| i.get()).collect::<Vec<_>>()),
                    "undetermined": undetermined_entries(&r),
                    "verified": verified.as_ref().map(|v| v.failures.is_empty()),
                    "branches": stats.branches,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else if r == FilterResult::All {
                writeln!(out, "all")?;
            } else {
                writeln!(out, "{} survivors", r.count())?;
                match &members {
                    Some(ms) => {
                        for i in ms {
                            writeln!(out, "{i}")?;
                        }
                    }
                    None => writeln!(out, "(more than {limit}; not listed)")?,
                }
                if let [only] = members.as_deref().unwrap_or_default() {
                    write!(out, "{}", sr_decode(*only))?;
                } else {
                    let open = undetermined_entries(&r);
                    if !open.is_empty() && open.len() <= 38 {
                        writeln!(out, "entries left open: {}", open.join(", "))?;
                    }
                }
                if let Some(v) = &verified {
                    writeln!(out, "verified {} members, {} failures", v.checked, v.failures.len())?;
                }
            }
            Ok(0)
        }
        Command::Repro => {
            let claims = repro::claims();
            let failed = claims.iter().filter(|c| !c.pass).count();
            if json {
                let v: Vec<Value> = claims
                    .iter()
                    .map(|c| json!({ "id": c.id, "module": c.module, "criterion": c.criterion, "statement": c.statement, "pass": c.pass, "detail": c.detail }))
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                for c in &claims {
                    writeln!(out, "{}", c.line())?;
                }
                writeln!(out, "{} of {} claims pass", claims.len() - failed, claims.len())?;
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}
