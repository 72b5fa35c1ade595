//! The `eulerian` command line: JSON on standard input and output, one
//! subcommand per operation.
//!
//! Exit codes: 0 success or PASS, 1 FAIL on valid input, 2 invalid input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cd;
use crate::constructions as build;
use crate::cylinder::{self, JoinTriple, SfsSquare};
use crate::format::{self, Kind};
use crate::homology;
use crate::ncpoly::NCPoly;
use crate::poset::{self, RankedPoset};
use crate::subdivision::{self, PosetMap, SfsMethod};

#[derive(Parser, Debug)]
#[command(name = "eulerian", version, about = "Eulerian posets, strong formal subdivisions and cd-indices")]
pub struct Cli {
    /// Read input from FILE instead of standard input. Repeat for commands
    /// that take two inputs.
    #[arg(short = 'i', value_name = "FILE", global = true)]
    pub input: Vec<PathBuf>,
    /// Write output to FILE.
    #[arg(short = 'o', value_name = "FILE", global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Eq31,
    Eq32,
    Near,
}

impl From<Method> for SfsMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Eq31 => SfsMethod::Eq31,
            Method::Eq32 => SfsMethod::Eq32,
            Method::Near => SfsMethod::NearEulerian,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a poset: boolean N, chain K, polygon M, cube D, crosspolytope D,
    /// subdivided_interval S, square_minus_edge; pyramid, prism, bipyramid,
    /// dual, semisuspension, boundary on one input; star, product on two.
    Build { family: String, params: Vec<String> },
    /// Build a map: identity, to-b0, to-b1, collapse-to-b0, bipyramid on one
    /// poset; product on two maps; nonexample.
    BuildMap { kind: String },
    /// eulerian, lower-eulerian, near-eulerian, graded, gorenstein-star,
    /// near-gorenstein-star, lower-gorenstein-star, sfs, join-admissible q=LABEL.
    Check {
        what: String,
        args: Vec<String>,
        #[arg(long, value_enum, default_value = "eq31")]
        method: Method,
    },
    /// Mapping cylinder triple of an sfs.
    Cyl,
    /// The sfs of a triple, or of a poset with q=LABEL.
    Map { args: Vec<String> },
    /// cyl: square to morphism; map: morphism and two triples to square;
    /// involution; check.
    Square { action: String },
    /// cd-index of an Eulerian poset.
    Cdindex,
    /// Local cd-index of a near-Eulerian poset.
    Localcd,
    /// Both sides of the decomposition of Φ(Γ) along q=LABEL.
    VerifyFormula { args: Vec<String> },
    /// Hasse diagram in DOT.
    ExportDot,
}

/// Result of a command: text to print and an exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
    fn check(pass: Result<(), String>) -> Self {
        match pass {
            Ok(()) => Outcome {
                text: "PASS\n".into(),
                code: 0,
            },
            Err(w) => Outcome {
                text: format!("FAIL: {w}\n"),
                code: 1,
            },
        }
    }
}

/// Invalid input; exit code 2.
#[derive(Debug)]
struct Invalid(String);

impl<E: std::fmt::Display> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.to_string())
    }
}

type Res<T> = Result<T, Invalid>;

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &out.text).map_err(|e| e.to_string()),
                None => stdout.write_all(out.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    2
                }
            }
        }
        Err(Invalid(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read_documents(cli: &Cli, stdin: &mut dyn Read) -> Res<Vec<Value>> {
    let mut text = String::new();
    if cli.input.is_empty() {
        stdin.read_to_string(&mut text)?;
    } else {
        for path in &cli.input {
            text.push_str(&fs::read_to_string(path).map_err(|e| Invalid(format!("{}: {e}", path.display())))?);
            text.push('\n');
        }
    }
    Ok(format::documents(&text)?)
}

fn one(docs: &[Value]) -> Res<&Value> {
    match docs {
        [v] => Ok(v),
        [] => Err(Invalid("no input".into())),
        _ => Err(Invalid(format!("expected one JSON document, got {}", docs.len()))),
    }
}

fn two(docs: &[Value]) -> Res<(&Value, &Value)> {
    match docs {
        [a, b] => Ok((a, b)),
        [Value::Array(v)] if v.len() == 2 => Ok((&v[0], &v[1])),
        _ => Err(Invalid("expected two JSON documents".into())),
    }
}

fn as_poset(v: &Value) -> Res<RankedPoset> {
    match format::kind_of(v) {
        Kind::Poset => Ok(format::ranked_from_json(&serde_json::from_value(v.clone())?, None)?),
        Kind::Triple => Ok(as_triple(v, None)?.gamma),
        _ => Err(Invalid("expected a poset".into())),
    }
}

fn as_map(v: &Value) -> Res<PosetMap> {
    if format::kind_of(v) != Kind::Map {
        return Err(Invalid("expected a map".into()));
    }
    Ok(format::map_from_json(&serde_json::from_value(v.clone())?)?)
}

fn as_square(v: &Value) -> Res<SfsSquare> {
    if format::kind_of(v) != Kind::Square {
        return Err(Invalid("expected a square".into()));
    }
    Ok(format::square_from_json(&serde_json::from_value(v.clone())?)?)
}

/// A triple document, or a poset document together with `q=LABEL`.
fn as_triple(v: &Value, q: Option<&str>) -> Res<JoinTriple> {
    match (format::kind_of(v), q) {
        (Kind::Triple, None) => Ok(format::triple_from_json(&serde_json::from_value(v.clone())?)?),
        (Kind::Triple, Some(q)) => {
            let t = format::triple_from_json(&serde_json::from_value(v.clone())?)?;
            Ok(JoinTriple::with_label(t.gamma, q)?)
        }
        (Kind::Poset, Some(q)) => Ok(JoinTriple::with_label(as_poset(v)?, q)?),
        (Kind::Poset, None) => Err(Invalid("missing q=LABEL".into())),
        _ => Err(Invalid("expected a triple or a poset".into())),
    }
}

fn q_arg(args: &[String]) -> Res<Option<&str>> {
    let mut q = None;
    for a in args {
        match a.strip_prefix("q=") {
            Some(l) => q = Some(l),
            None => return Err(Invalid(format!("unexpected argument `{a}`"))),
        }
    }
    Ok(q)
}

fn number(params: &[String]) -> Res<usize> {
    match params {
        [n] => n.parse().map_err(|_| Invalid(format!("`{n}` is not a nonnegative integer"))),
        _ => Err(Invalid("expected exactly one numeric parameter".into())),
    }
}

fn emit_poset(b: &RankedPoset, fmt: Option<Format>) -> String {
    match fmt.unwrap_or(Format::Json) {
        Format::Json => format::to_string(&format::ranked_to_json(b)),
        Format::Dot => format::to_dot(b),
        Format::Text => {
            let j = format::ranked_to_json(b);
            let mut s = String::new();
            for (l, r) in j.labels.iter().zip(j.rank.unwrap()) {
                s.push_str(&format!("{l} {r}\n"));
            }
            for (a, c) in j.covers {
                s.push_str(&format!("{a} < {c}\n"));
            }
            s
        }
    }
}

fn emit_poly(name: &str, p: &NCPoly, fmt: Option<Format>) -> String {
    match fmt {
        Some(Format::Json) => format::to_string(&json!({ name: p.to_string() })),
        _ => format!("{p}\n"),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Res<Outcome> {
    let fmt = cli.format;
    let needs_input = !matches!(&cli.command, Command::Build { family, .. } if is_closed_family(family))
        && !matches!(&cli.command, Command::BuildMap { kind } if kind == "nonexample");
    let docs = if needs_input { read_documents(cli, stdin)? } else { Vec::new() };
    match &cli.command {
        Command::Build { family, params } => Ok(Outcome::ok(emit_poset(&cmd_build(family, params, &docs)?, fmt))),
        Command::BuildMap { kind } => {
            let m = cmd_build_map(kind, &docs)?;
            Ok(Outcome::ok(format::to_string(&format::map_to_json(&m))))
        }
        Command::Check { what, args, method } => cmd_check(what, args, *method, &docs),
        Command::Cyl => {
            let m = as_map(one(&docs)?)?;
            let t = cylinder::cyl(&m)?;
            Ok(Outcome::ok(format::to_string(&format::triple_to_json(&t))))
        }
        Command::Map { args } => {
            let t = as_triple(one(&docs)?, q_arg(args)?)?;
            let m = cylinder::map(&t)?;
            Ok(Outcome::ok(format::to_string(&format::map_to_json(&m))))
        }
        Command::Square { action } => cmd_square(action, &docs),
        Command::Cdindex => {
            let b = as_poset(one(&docs)?)?;
            Ok(Outcome::ok(emit_poly("cd_index", &cd::cd_index(&b)?, fmt)))
        }
        Command::Localcd => {
            let b = as_poset(one(&docs)?)?;
            Ok(Outcome::ok(emit_poly("local_cd_index", &cd::local_cd_index(&b)?, fmt)))
        }
        Command::VerifyFormula { args } => {
            let t = as_triple(one(&docs)?, q_arg(args)?)?;
            cmd_verify_formula(&t, fmt)
        }
        Command::ExportDot => {
            let b = as_poset(one(&docs)?)?;
            Ok(Outcome::ok(format::to_dot(&b)))
        }
    }
}

fn is_closed_family(f: &str) -> bool {
    matches!(
        f,
        "boolean" | "chain" | "polygon" | "cube" | "crosspolytope" | "subdivided_interval" | "square_minus_edge"
    )
}

fn cmd_build(family: &str, params: &[String], docs: &[Value]) -> Res<RankedPoset> {
    Ok(match family {
        "boolean" => {
            let n = number(params)?;
            if n >= 12 {
                return Err(Invalid("boolean algebras are limited to n < 12".into()));
            }
            build::boolean_algebra(n)
        }
        "chain" => {
            let k = number(params)?;
            if k == 0 {
                return Err(Invalid("a chain needs at least one element".into()));
            }
            build::chain(k)
        }
        "polygon" => build::face_lattice_polygon(number(params)?)?,
        "cube" => build::face_lattice_cube(number(params)?)?,
        "crosspolytope" => build::face_lattice_crosspolytope(number(params)?)?,
        "subdivided_interval" => build::subdivided_interval(number(params)?),
        "square_minus_edge" => build::square_minus_edge_and_top(),
        "pyramid" => build::pyramid(&as_poset(one(docs)?)?),
        "prism" => build::prism(&as_poset(one(docs)?)?)?,
        "bipyramid" => build::bipyramid(&as_poset(one(docs)?)?)?,
        "dual" => build::dual(&as_poset(one(docs)?)?)?,
        "semisuspension" => build::semisuspension(&as_poset(one(docs)?)?)?.0,
        "boundary" => build::fan_over_boundary(&as_poset(one(docs)?)?)?,
        "star" => {
            let (a, b) = two(docs)?;
            build::star_product(&as_poset(a)?, &as_poset(b)?)?
        }
        "product" => {
            let (a, b) = two(docs)?;
            build::direct_product(&as_poset(a)?, &as_poset(b)?)
        }
        other => return Err(Invalid(format!("unknown family `{other}`"))),
    })
}

fn cmd_build_map(kind: &str, docs: &[Value]) -> Res<PosetMap> {
    Ok(match kind {
        "identity" => subdivision::identity_sfs(&as_poset(one(docs)?)?),
        "to-b0" => subdivision::to_b0(&as_poset(one(docs)?)?)?,
        "to-b1" => subdivision::to_b1(&as_poset(one(docs)?)?)?,
        "collapse-to-b0" => subdivision::collapse_to_b0(&as_poset(one(docs)?)?)?,
        "bipyramid" => subdivision::bipyramid_sfs(&as_poset(one(docs)?)?)?,
        "product" => {
            let (a, b) = two(docs)?;
            subdivision::product_sfs(&as_map(a)?, &as_map(b)?)?
        }
        "nonexample" => subdivision::boundary_nonexample(),
        other => return Err(Invalid(format!("unknown map kind `{other}`"))),
    })
}

fn eulerian_witness(b: &RankedPoset, need_top: bool) -> Result<(), String> {
    let p = &b.poset;
    if p.bottom().is_none() {
        return Err("no unique minimum".into());
    }
    if need_top && (p.top().is_none() || p.len() < 2) {
        return Err("no unique maximum of positive rank".into());
    }
    match poset::first_non_eulerian_interval(p, &b.rank) {
        Some((z, z2, s)) => Err(format!("interval [{}, {}] has even-minus-odd count {s}", p.label(z), p.label(z2))),
        None => Ok(()),
    }
}

fn near_eulerian_witness(b: &RankedPoset) -> Result<(), String> {
    if b.is_near_eulerian() {
        return Ok(());
    }
    if b.poset.bottom().is_none() {
        return Err("no unique minimum".into());
    }
    let (s, _, _) = poset::raw_semisuspension(&b.poset);
    let Ok(rank) = poset::natural_rank(&s) else {
        return Err("semisuspension is not ranked".into());
    };
    match poset::first_non_eulerian_interval(&s, &rank) {
        Some((z, z2, k)) => Err(format!(
            "semisuspension interval [{}, {}] has even-minus-odd count {k}",
            s.label(z),
            s.label(z2)
        )),
        None if s.top().is_none() => Err("semisuspension has no unique maximum".into()),
        None => Err("rank function does not extend to the semisuspension".into()),
    }
}

fn graded_witness(b: &RankedPoset) -> Result<(), String> {
    if b.poset.is_graded() {
        return Ok(());
    }
    let chains = b.poset.maximal_chains();
    let longest = chains.iter().map(|c| c.len()).max().unwrap_or(0);
    let short = chains.iter().find(|c| c.len() < longest).unwrap();
    let labels: Vec<&str> = short.iter().map(|&i| b.poset.label(i)).collect();
    Err(format!("maximal chain {} has length {} < {}", labels.join(" < "), short.len() - 1, longest - 1))
}

fn sphere_witness(b: &RankedPoset) -> Result<(), String> {
    let pairs: Vec<(usize, usize)> = b
        .poset
        .elements()
        .flat_map(|x| b.poset.strictly_above(x).map(move |y| (x, y)))
        .collect();
    match homology::first_non_sphere_interval(b, pairs.into_iter()) {
        Some((x, y, betti)) => Err(format!(
            "open interval ({}, {}) has reduced Betti numbers {:?} starting in degree -1",
            b.poset.label(x),
            b.poset.label(y),
            betti
        )),
        None => Ok(()),
    }
}

fn cmd_check(what: &str, args: &[String], method: Method, docs: &[Value]) -> Res<Outcome> {
    let q = q_arg(args)?;
    if q.is_some() && what != "join-admissible" {
        return Err(Invalid("q=LABEL only applies to join-admissible".into()));
    }
    let doc = one(docs)?;
    let result = match what {
        "eulerian" => eulerian_witness(&as_poset(doc)?, true),
        "lower-eulerian" => eulerian_witness(&as_poset(doc)?, false),
        "near-eulerian" => near_eulerian_witness(&as_poset(doc)?),
        "graded" => graded_witness(&as_poset(doc)?),
        "gorenstein-star" => {
            let b = as_poset(doc)?;
            eulerian_witness(&b, true).and_then(|_| sphere_witness(&b))
        }
        "lower-gorenstein-star" => {
            let b = as_poset(doc)?;
            eulerian_witness(&b, false).and_then(|_| sphere_witness(&b))
        }
        "near-gorenstein-star" => {
            let b = as_poset(doc)?;
            near_eulerian_witness(&b).and_then(|_| {
                let (s, _) = poset::semisuspension(&b.poset, &b.rank).map_err(|e| e.to_string())?;
                sphere_witness(&s).map_err(|w| format!("semisuspension: {w}"))
            })
        }
        "sfs" => {
            let m = as_map(doc)?;
            match subdivision::sfs_violation(&m, method.into()) {
                Ok(None) => Ok(()),
                Ok(Some(v)) => Err(m.describe(&v)),
                Err(e) => Err(e.to_string()),
            }
        }
        "join-admissible" => {
            let t = as_triple(doc, q)?;
            let p = &t.gamma.poset;
            match p.elements().find(|&z| p.join(z, t.q).is_none()) {
                None => Ok(()),
                Some(z) => Err(format!("{} and {} have no least upper bound", p.label(z), t.q_label())),
            }
        }
        other => return Err(Invalid(format!("unknown check `{other}`"))),
    };
    Ok(Outcome::check(result))
}

fn cmd_square(action: &str, docs: &[Value]) -> Res<Outcome> {
    match action {
        "cyl" => {
            let sq = as_square(one(docs)?)?;
            let phi = cylinder::cyl_square(&sq)?;
            Ok(Outcome::ok(format::to_string(&format::map_to_json(&phi))))
        }
        "map" => {
            let (phi, t, t2) = match docs {
                [a, b, c] => (as_map(a)?, as_triple(b, None)?, as_triple(c, None)?),
                _ => return Err(Invalid("expected a map and two triples".into())),
            };
            let sq = cylinder::map_square(&phi, &t, &t2)?;
            Ok(Outcome::ok(format::to_string(&format::square_to_json(&sq))))
        }
        "involution" => {
            let sq = as_square(one(docs)?)?;
            Ok(Outcome::ok(format::to_string(&format::square_to_json(&sq.involution()))))
        }
        "check" => {
            let sq = as_square(one(docs)?)?;
            Ok(Outcome::check(sq.validate().map_err(|e| e.to_string())))
        }
        other => Err(Invalid(format!("unknown square action `{other}`"))),
    }
}

fn cmd_verify_formula(t: &JoinTriple, fmt: Option<Format>) -> Res<Outcome> {
    let lhs = cd::cd_index(&t.gamma)?;
    let terms = cd::cd_formula_terms(t)?;
    let rhs = terms.rhs();
    let pass = lhs == rhs && terms.is_integral();
    let code = if pass { 0 } else { 1 };
    let verdict = if pass { "PASS" } else { "FAIL" };
    let text = match fmt {
        Some(Format::Json) => format::to_string(&json!({
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "summands": terms.summands().iter().map(|(k, p)| json!([k, p.to_string()])).collect::<Vec<_>>(),
            "result": verdict,
        })),
        _ => {
            let mut s = format!("lhs: {lhs}\nrhs: {rhs}\n");
            for (k, p) in terms.summands() {
                s.push_str(&format!("  {k}: {p}\n"));
            }
            s.push_str(verdict);
            s.push('\n');
            s
        }
    };
    Ok(Outcome { text, code })
}

/// Entry point for the binary.
pub fn main_with_std() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
