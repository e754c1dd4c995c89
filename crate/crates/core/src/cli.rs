//! Command-line front end. Every verb writes one JSON document; errors are
//! reported as {"error": tag, "message": ...} on stderr.

use crate::abgroup::{parse_elements, parse_group_spec, AbGroup, Subgroup};
use crate::acceptance;
use crate::classify::{
    construct_gdr, construct_simple_galois, enumerate_gdr, enumerate_simple_galois, gdr_fingerprint, gdr_iso_classes,
    GaloisParams, GdrParams,
};
use crate::error::{Error, Result};
use crate::galois::{galois_criterion, induced_centralizer_check, is_galois_extension, psi_invariant};
use crate::gf::{parse_field_spec, Field};
use crate::io::{self, AlgebraDoc};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "gradalg", version, about = "Graded-division algebras and Galois extensions over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// All simple G-Galois extensions of F up to isomorphism
    EnumerateGalois(Common),
    /// All G-graded-division algebras over F with support T and graded center degrees H
    EnumerateGdr(Common),
    /// Build the first enumerated representative matching the filters
    Construct(Construct),
    /// Galois and graded-division checks on an algebra document
    Verify(Input),
    /// The complete invariant of a simple Galois extension
    Invariant(Input),
    /// Run the acceptance criteria
    Selftest(Output),
}

#[derive(Args, Debug)]
struct Output {
    /// write the JSON here instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct Common {
    /// field as p^e
    #[arg(long)]
    field: String,
    /// group as d1xd2x...
    #[arg(long)]
    group: String,
    /// largest algebra dimension to enumerate
    #[arg(long, default_value_t = 64)]
    dim_cap: usize,
    /// seed for idempotent and factorization choices
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// include structure constants for every representative
    #[arg(long)]
    emit_algebras: bool,
    /// run the structure-map check at every size, not only for dim * |G| <= 64
    #[arg(long)]
    all_checks: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Galois,
    Gdr,
}

#[derive(Args, Debug)]
struct Construct {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Kind::Galois)]
    kind: Kind,
    /// generators of K, e.g. "(1,0);(0,1)"
    #[arg(long)]
    subgroup: Option<String>,
    /// generators of the support T (graded-division only)
    #[arg(long)]
    support: Option<String>,
    /// generators of the graded center support H (graded-division only)
    #[arg(long)]
    center: Option<String>,
    /// any element of the generating coset
    #[arg(long)]
    coset: Option<String>,
    /// bicharacter values above the diagonal as dlogs of the field generator
    #[arg(long)]
    beta: Option<String>,
    /// s-vector, e.g. 1,0
    #[arg(long)]
    s: Option<String>,
    /// character values on the basis of K_[|F^x|] as dlogs
    #[arg(long)]
    chi: Option<String>,
}

#[derive(Args, Debug)]
struct Input {
    /// algebra document (JSON)
    #[arg(long)]
    input: String,
    #[command(flatten)]
    out: Output,
}

/// Parse argv (including the program name), run, and return the exit code.
pub fn run(argv: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = write!(stdout, "{}", e);
                return 0;
            }
            return report(stderr, &Error::Parse(e.to_string().trim().to_string()));
        }
    };
    let (doc, out, code) = match dispatch(&cli.cmd) {
        Ok(r) => r,
        Err(e) => return report(stderr, &e),
    };
    let text = serde_json::to_string_pretty(&doc).expect("json values always serialize") + "\n";
    let written = match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Invalid(format!("cannot write {}: {}", path, e))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Internal(e.to_string())),
    };
    match written {
        Ok(()) => code,
        Err(e) => report(stderr, &e),
    }
}

fn report(stderr: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(stderr, "{}", json!({ "error": e.tag(), "message": e.to_string() }));
    e.exit_code()
}

fn dispatch(cmd: &Cmd) -> Result<(Value, Option<&String>, i32)> {
    Ok(match cmd {
        Cmd::EnumerateGalois(c) => (enumerate_galois(c)?, c.out.out.as_ref(), 0),
        Cmd::EnumerateGdr(c) => (enumerate_gdr_cmd(c)?, c.out.out.as_ref(), 0),
        Cmd::Construct(c) => (construct(c)?, c.common.out.out.as_ref(), 0),
        Cmd::Verify(i) => (verify(&read_doc(&i.input)?)?, i.out.out.as_ref(), 0),
        Cmd::Invariant(i) => (invariant(&read_doc(&i.input)?)?, i.out.out.as_ref(), 0),
        Cmd::Selftest(o) => {
            let (v, all) = selftest();
            (v, o.out.as_ref(), if all { 0 } else { 1 })
        }
    })
}

fn setup(c: &Common) -> Result<(Field, AbGroup)> {
    Ok((parse_field_spec(&c.field)?, parse_group_spec(&c.group)?))
}

fn header(f: &Field, g: &AbGroup) -> Value {
    json!({ "field": crate::gf::FieldJson::from(f), "group": g.orders() })
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// The structure-map check builds an algebra of dimension dim^2 * |G|, so
/// reports run it on small cases unless asked.
const STRUCTURE_CHECK_LIMIT: usize = 64;

fn structure_check(a: &crate::algebra::GradedAlgebra, all: bool) -> Result<Value> {
    if !all && a.alg.dim() * a.group.size() > STRUCTURE_CHECK_LIMIT {
        return Ok(Value::Null);
    }
    Ok(json!(induced_centralizer_check(a)?.ok))
}

fn galois_report(p: &GaloisParams, emit: bool, all: bool) -> Result<Value> {
    let sg = construct_simple_galois(p)?;
    let psi = psi_invariant(&sg.galg)?;
    let mut v = json!({
        "params": io::galois_params_json(p),
        "dim": sg.galg.dim(),
        "psi": io::psi_json(&p.group, &psi),
        "verified": {
            "galois": is_galois_extension(&sg.galg).verdict,
            "graded_division": sg.graded.is_graded_division(),
            "induced_centralizer": structure_check(&sg.graded, all)?,
        },
    });
    if emit {
        v["algebra"] = to_value(&io::galgebra_doc(&sg.galg));
    }
    Ok(v)
}

fn gdr_report(p: &GdrParams, seed: u64, emit: bool, all: bool) -> Result<Value> {
    let d = construct_gdr(p, seed)?;
    let a = &d.graded;
    let mut v = json!({
        "params": io::gdr_params_json(p),
        "dim": a.alg.dim(),
        "fingerprint": to_value(&gdr_fingerprint(a)?),
        "verified": {
            "graded_division": a.is_graded_division(),
            "support": a.support() == p.t.elems().to_vec(),
            "center_support": a.center_support() == p.h.elems().to_vec(),
            "graded_central": a.is_graded_central(),
            "induced_centralizer": structure_check(a, all)?,
        },
    });
    if emit {
        v["algebra"] = to_value(&io::graded_doc(a));
    }
    Ok(v)
}

fn collect(vs: Vec<Result<Value>>) -> Result<Vec<Value>> {
    vs.into_iter().collect()
}

fn enumerate_galois(c: &Common) -> Result<Value> {
    let (f, g) = setup(c)?;
    let ps = enumerate_simple_galois(&f, &g)?;
    let classes = collect(crate::par::map(&ps, |p| galois_report(p, c.emit_algebras, c.all_checks)))?;
    let mut v = header(&f, &g);
    v["count"] = json!(classes.len());
    v["classes"] = Value::Array(classes);
    Ok(v)
}

fn enumerate_gdr_cmd(c: &Common) -> Result<Value> {
    let (f, g) = setup(c)?;
    let ps = enumerate_gdr(&f, &g, c.dim_cap)?;
    let quintuples = collect(crate::par::map(&ps, |p| gdr_report(p, c.seed, c.emit_algebras, c.all_checks)))?;
    let classes = gdr_iso_classes(&f, &g, c.dim_cap)?;
    let index = |q: &GdrParams| ps.iter().position(|p| p == q);
    let merged: Vec<Value> = classes
        .iter()
        .map(|cl| json!({ "members": cl.members.iter().map(index).collect::<Vec<_>>(), "f0_degree": cl.f0_degree }))
        .collect();
    let mut v = header(&f, &g);
    v["dim_cap"] = json!(c.dim_cap);
    v["count"] = json!(quintuples.len());
    v["quintuples"] = Value::Array(quintuples);
    v["iso_classes"] = Value::Array(merged);
    Ok(v)
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("expected a comma-separated list of integers, got {:?}", s))))
        .collect()
}

fn parse_sub(g: &AbGroup, s: &str) -> Result<Subgroup> {
    Subgroup::generated(g, &parse_elements(g, s)?)
}

fn parse_elem(g: &AbGroup, s: &str) -> Result<usize> {
    match parse_elements(g, s)?.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Parse(format!("expected one group element, got {:?}", s))),
    }
}

fn construct(c: &Construct) -> Result<Value> {
    let (f, g) = setup(&c.common)?;
    let k = c.subgroup.as_deref().map(|s| parse_sub(&g, s)).transpose()?;
    let coset = c.coset.as_deref().map(|s| parse_elem(&g, s)).transpose()?;
    let beta = c.beta.as_deref().map(parse_list).transpose()?;
    let emit = true;
    let (found, total) = match c.kind {
        Kind::Galois => {
            if c.support.is_some() || c.center.is_some() || c.chi.is_some() {
                return Err(Error::Invalid("--support, --center and --chi apply to --kind gdr".into()));
            }
            let s = c.s.as_deref().map(parse_list).transpose()?;
            let all = enumerate_simple_galois(&f, &g)?;
            let hits: Vec<&GaloisParams> = all
                .iter()
                .filter(|p| {
                    k.as_ref().is_none_or(|k| p.kernel == *k)
                        && coset.is_none_or(|x| p.coset.contains(x))
                        && beta.as_ref().is_none_or(|b| p.beta.upper() == *b)
                        && s.as_ref().is_none_or(|s| p.s == *s)
                })
                .collect();
            let v = match hits.first() {
                Some(p) => galois_report(p, emit, c.common.all_checks)?,
                None => Value::Null,
            };
            (v, hits.len())
        }
        Kind::Gdr => {
            if c.s.is_some() {
                return Err(Error::Invalid("--s applies to --kind galois".into()));
            }
            let t = c.support.as_deref().map(|s| parse_sub(&g, s)).transpose()?;
            let h = c.center.as_deref().map(|s| parse_sub(&g, s)).transpose()?;
            let chi = c.chi.as_deref().map(parse_list).transpose()?;
            let all = enumerate_gdr(&f, &g, c.common.dim_cap)?;
            let hits: Vec<&GdrParams> = all
                .iter()
                .filter(|p| {
                    t.as_ref().is_none_or(|t| p.t == *t)
                        && h.as_ref().is_none_or(|h| p.h == *h)
                        && k.as_ref().is_none_or(|k| p.kernel() == k)
                        && coset.is_none_or(|x| p.coset.contains(x))
                        && beta.as_ref().is_none_or(|b| p.beta_bar.upper() == *b)
                        && chi.as_ref().is_none_or(|x| p.chi.dlogs == *x)
                })
                .collect();
            let v = match hits.first() {
                Some(p) => gdr_report(p, c.common.seed, emit, c.common.all_checks)?,
                None => Value::Null,
            };
            (v, hits.len())
        }
    };
    if total == 0 {
        return Err(Error::Constraint("no enumerated representative matches the given parameters".into()));
    }
    let mut v = found;
    v["matches"] = json!(total);
    Ok(v)
}

fn read_doc(path: &str) -> Result<AlgebraDoc> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {}", path, e)))?;
    let mut v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {}", path, e)))?;
    // a construct report carries the document under "algebra"
    if v.get("algebra").and_then(|a| a.get("algebra")).is_some() {
        v = v["algebra"].take();
    }
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{}: {}", path, e)))
}

fn verify(doc: &AlgebraDoc) -> Result<Value> {
    let alg = doc.algebra()?;
    let mut v = json!({ "dim": alg.dim(), "group": doc.group });
    if let Some(c) = doc.galgebra()? {
        let cert = is_galois_extension(&c);
        v["galois"] = to_value(&cert);
        v["criterion"] = to_value(&galois_criterion(&c)?);
        v["verdict"] = json!(cert.verdict);
    }
    if let Some(a) = doc.graded()? {
        let gd = a.is_graded_division();
        v["graded"] = json!({
            "graded_division": gd,
            "support": a.support().iter().map(|&x| a.group.coords(x)).collect::<Vec<_>>(),
            "center_support": a.center_support().iter().map(|&x| a.group.coords(x)).collect::<Vec<_>>(),
            "graded_central": a.is_graded_central(),
        });
        if doc.action.is_none() {
            v["verdict"] = json!(gd);
        }
    }
    if doc.action.is_none() && doc.degrees.is_none() {
        return Err(Error::Invalid("document carries neither an action nor a grading".into()));
    }
    Ok(v)
}

fn invariant(doc: &AlgebraDoc) -> Result<Value> {
    let c = doc.galgebra()?.ok_or_else(|| Error::Invalid("the invariant needs a G-action".into()))?;
    if !is_galois_extension(&c).verdict {
        return Err(Error::Constraint("the algebra is not a G-Galois extension".into()));
    }
    Ok(to_value(&io::psi_json(&c.group, &psi_invariant(&c)?)))
}

fn selftest() -> (Value, bool) {
    let outcomes = acceptance::run_all();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let criteria: Vec<Value> =
        outcomes.iter().map(|o| json!({ "id": o.id, "name": o.name, "pass": o.pass, "detail": o.detail })).collect();
    (json!({ "passed": passed, "failed": outcomes.len() - passed, "criteria": criteria }), passed == outcomes.len())
}
