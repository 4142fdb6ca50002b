//! Command-line front end: the space file format, the argv contract, and
//! the report formats.
//!
//! # Space files
//!
//! Line-oriented UTF-8 text. Lines whose first non-blank character is `#`
//! and blank lines are ignored. An optional `minsize 1` (or `minsize 2`)
//! directive may precede the mandatory `elements <tok> ...` line; every
//! following `dep <tok> ...` line declares one Δ-member. Tokens are
//! nonempty, contain no whitespace and no `#`.
//!
//! # Exit codes
//!
//! 0 — success, or a checked property holds; 1 — a checked property is
//! violated or a query answers negatively (a witness is printed); 2 —
//! usage, parse, or precondition errors.
//!
//! # Porcelain
//!
//! With `--porcelain` every subcommand prints one `KEY<TAB>VALUE` record
//! per line. Sets are rendered as comma-joined element names in canonical
//! order; the output is byte-stable across runs for identical inputs.

use std::fmt;

use thiserror::Error;

use crate::axioms::{self, CheckMode};
use crate::exchange::ExchangeCertificate;
use crate::instances::{self, GraphSpec, Vector2};
use crate::set::ElementSet;
use crate::space::{DependenceSpace, MinCircuitSize};

/// A rejected space file, with the offending line when one can be named.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: {}", self.line, self.message)
        } else {
            write!(f, "{}", self.message)
        }
    }
}

fn err_at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Parses a space file into its canonical space.
pub fn parse_space_file(text: &str) -> Result<DependenceSpace, ParseError> {
    let mut min_size: Option<MinCircuitSize> = None;
    let mut elements: Option<(Vec<String>, usize)> = None;
    let mut members: Vec<(Vec<String>, usize)> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "minsize" => {
                if elements.is_some() {
                    return Err(err_at(line_no, "minsize must precede the elements line"));
                }
                if min_size.is_some() {
                    return Err(err_at(line_no, "duplicate minsize line"));
                }
                match tokens.as_slice() {
                    [_, "1"] => min_size = Some(MinCircuitSize::One),
                    [_, "2"] => min_size = Some(MinCircuitSize::Two),
                    _ => return Err(err_at(line_no, "minsize takes a single value, 1 or 2")),
                }
            }
            "elements" => {
                if elements.is_some() {
                    return Err(err_at(line_no, "duplicate elements line"));
                }
                let names: Vec<String> = tokens[1..].iter().map(|t| t.to_string()).collect();
                for name in &names {
                    if name.contains('#') {
                        return Err(err_at(line_no, format!("invalid token {name:?}")));
                    }
                }
                for (i, name) in names.iter().enumerate() {
                    if names[..i].contains(name) {
                        return Err(err_at(line_no, format!("duplicate element name {name:?}")));
                    }
                }
                elements = Some((names, line_no));
            }
            "dep" => {
                let Some((names, _)) = &elements else {
                    return Err(err_at(line_no, "dep line before the elements line"));
                };
                let member: Vec<String> = tokens[1..].iter().map(|t| t.to_string()).collect();
                for name in &member {
                    if !names.contains(name) {
                        return Err(err_at(line_no, format!("unknown element {name:?}")));
                    }
                }
                for (i, name) in member.iter().enumerate() {
                    if member[..i].contains(name) {
                        return Err(err_at(
                            line_no,
                            format!("element {name:?} listed twice in one dep line"),
                        ));
                    }
                }
                let min = min_size.unwrap_or_default().as_usize();
                if member.len() < min {
                    return Err(err_at(
                        line_no,
                        format!(
                            "dep member of size {} is below the minimum circuit size {}",
                            member.len(),
                            min
                        ),
                    ));
                }
                members.push((member, line_no));
            }
            other => {
                return Err(err_at(line_no, format!("unrecognized directive {other:?}")));
            }
        }
    }

    let Some((names, elements_line)) = elements else {
        return Err(err_at(0, "missing elements line"));
    };
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let member_vecs: Vec<Vec<&str>> = members
        .iter()
        .map(|(m, _)| m.iter().map(String::as_str).collect())
        .collect();
    let member_refs: Vec<&[&str]> = member_vecs.iter().map(Vec::as_slice).collect();
    DependenceSpace::build(&name_refs, &member_refs, min_size.unwrap_or_default())
        .map_err(|e| err_at(elements_line, e.to_string()))
}

/// Renders a space back into its canonical file form. Parsing the output
/// reproduces the space, and re-emitting reproduces the bytes.
pub fn emit_space_file(space: &DependenceSpace) -> String {
    let mut out = String::new();
    if space.min_circuit_size() == MinCircuitSize::One {
        out.push_str("minsize 1\n");
    }
    out.push_str("elements");
    for name in space.element_names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for member in space.delta() {
        out.push_str("dep");
        for id in member.set().iter() {
            out.push(' ');
            out.push_str(space.name(id));
        }
        out.push('\n');
    }
    out
}

/// Captured result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn violated(stdout: String) -> Self {
        Self {
            code: 1,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}

const USAGE: &str = "\
usage: depspace <command> [options]

commands:
  check FILE [--mode exhaustive|sampled] [--samples N] [--seed N]
                          check the transitivity axiom (exit 1 on failure)
  closure FILE --set a,b            one-step closure of a set
  iterated-closure FILE --set a,b   closure iterated to its fixpoint
  independent FILE --set a,b        independence test (exit 1 if dependent)
  basis FILE                        greedy basis of the space
  bases FILE                        enumerate all bases
  exchange FILE --basis a,b --independent c
                          exchange an independent set into a basis
  gen graph --vertices a,b --edges a-b[,...]
  gen vectors --vectors x:y,... [--allow-zero]
  gen repetition --alphabet N --length N
  gen random --elements N --circuits N [--max-size N] [--seed N]
                          emit a generated space file on stdout
  help                              print this message

common options:
  --porcelain     stable line-oriented KEY<TAB>VALUE output
";

struct Parsed<'a> {
    positional: Vec<&'a str>,
    values: Vec<(&'a str, &'a str)>,
    switches: Vec<&'a str>,
}

impl<'a> Parsed<'a> {
    fn value(&self, name: &str) -> Option<&'a str> {
        self.values
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| *v)
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.contains(&name)
    }
}

fn parse_args<'a>(
    args: &[&'a str],
    switches: &[&str],
    value_flags: &[&str],
) -> Result<Parsed<'a>, String> {
    let mut parsed = Parsed {
        positional: Vec::new(),
        values: Vec::new(),
        switches: Vec::new(),
    };
    let mut iter = args.iter();
    while let Some(&arg) = iter.next() {
        if let Some(stripped) = arg.strip_prefix("--") {
            if switches.contains(&stripped) {
                parsed.switches.push(stripped);
            } else if value_flags.contains(&stripped) {
                let Some(&value) = iter.next() else {
                    return Err(format!("flag --{stripped} expects a value"));
                };
                parsed.values.retain(|(k, _)| *k != stripped);
                parsed.values.push((stripped, value));
            } else {
                return Err(format!("unknown flag --{stripped}"));
            }
        } else {
            parsed.positional.push(arg);
        }
    }
    Ok(parsed)
}

/// Runs one CLI invocation. `argv` excludes the program name.
pub fn run(argv: &[&str]) -> CliOutput {
    let Some((&command, rest)) = argv.split_first() else {
        return CliOutput {
            code: 2,
            stdout: String::new(),
            stderr: USAGE.to_owned(),
        };
    };
    match command {
        "help" | "--help" => CliOutput::ok(USAGE.to_owned()),
        "check" => cmd_check(rest),
        "closure" => cmd_closure(rest, false),
        "iterated-closure" => cmd_closure(rest, true),
        "independent" => cmd_independent(rest),
        "basis" => cmd_basis(rest),
        "bases" => cmd_bases(rest),
        "exchange" => cmd_exchange(rest),
        "gen" => cmd_gen(rest),
        other => CliOutput::error(format!("unknown command {other:?} (try 'depspace help')")),
    }
}

fn load_space(parsed: &Parsed<'_>) -> Result<DependenceSpace, String> {
    let [path] = parsed.positional.as_slice() else {
        return Err("expected exactly one FILE argument".to_owned());
    };
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    parse_space_file(&text).map_err(|e| format!("{path}: {e}"))
}

fn parse_set_flag(
    space: &DependenceSpace,
    parsed: &Parsed<'_>,
    flag: &str,
) -> Result<ElementSet, String> {
    let Some(value) = parsed.value(flag) else {
        return Err(format!("missing required flag --{flag}"));
    };
    let names: Vec<&str> = if value.is_empty() {
        Vec::new()
    } else {
        value.split(',').collect()
    };
    space.set_from_names(&names).map_err(|e| e.to_string())
}

fn witness_record(space: &DependenceSpace, w: &axioms::CounterexampleWitness) -> (String, String) {
    let element = w.element.map(|id| space.name(id).to_owned()).unwrap_or_default();
    let first = space.format_set(&w.first);
    let second = w
        .second
        .as_ref()
        .map(|s| space.format_set(s))
        .unwrap_or_default();
    (
        format!("WITNESS\t{element}|{first}|{second}"),
        format!("WITNESS {element} | A={first} | B={second}"),
    )
}

fn cmd_check(args: &[&str]) -> CliOutput {
    let parsed = match parse_args(args, &["porcelain"], &["mode", "samples", "seed"]) {
        Ok(p) => p,
        Err(e) => return CliOutput::error(e),
    };
    let space = match load_space(&parsed) {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let samples = match parsed.value("samples").unwrap_or("1000").parse::<u64>() {
        Ok(v) => v,
        Err(_) => return CliOutput::error("--samples expects an unsigned integer"),
    };
    let seed = match parsed.value("seed").unwrap_or("0").parse::<u64>() {
        Ok(v) => v,
        Err(_) => return CliOutput::error("--seed expects an unsigned integer"),
    };
    let mode = match parsed.value("mode").unwrap_or("exhaustive") {
        "exhaustive" => CheckMode::Exhaustive,
        "sampled" => CheckMode::Sampled { samples, seed },
        other => return CliOutput::error(format!("unknown mode {other:?}")),
    };
    let report = match axioms::check_transitivity(&space, mode) {
        Ok(r) => r,
        Err(e) => return CliOutput::error(e.to_string()),
    };

    let mut out = String::new();
    let porcelain = parsed.switch("porcelain");
    if porcelain {
        out.push_str("AXIOM\ttransitivity\n");
        match mode {
            CheckMode::Exhaustive => out.push_str("MODE\texhaustive\n"),
            CheckMode::Sampled { samples, seed } => {
                out.push_str("MODE\tsampled\n");
                out.push_str(&format!("SAMPLES\t{samples}\n"));
                out.push_str(&format!("SEED\t{seed}\n"));
            }
        }
        out.push_str(&format!(
            "VERDICT\t{}\n",
            if report.passed() { "pass" } else { "fail" }
        ));
        for w in &report.witnesses {
            out.push_str(&witness_record(&space, w).0);
            out.push('\n');
        }
    } else {
        let mode_text = match mode {
            CheckMode::Exhaustive => "exhaustive".to_owned(),
            CheckMode::Sampled { samples, seed } => {
                format!("sampled n={samples} seed={seed}")
            }
        };
        out.push_str(&format!(
            "Transitivity: {} ({})\n",
            if report.passed() { "PASS" } else { "FAIL" },
            mode_text
        ));
        for w in &report.witnesses {
            out.push_str(&witness_record(&space, w).1);
            out.push('\n');
        }
    }
    if report.passed() {
        CliOutput::ok(out)
    } else {
        CliOutput::violated(out)
    }
}

fn cmd_closure(args: &[&str], iterated: bool) -> CliOutput {
    let parsed = match parse_args(args, &["porcelain"], &["set"]) {
        Ok(p) => p,
        Err(e) => return CliOutput::error(e),
    };
    let space = match load_space(&parsed) {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let set = match parse_set_flag(&space, &parsed, "set") {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let result = if iterated {
        space.iterated_closure(&set)
    } else {
        space.closure(&set)
    };
    let result = match result {
        Ok(r) => r,
        Err(e) => return CliOutput::error(e.to_string()),
    };
    let rendered = space.format_set(&result);
    if parsed.switch("porcelain") {
        let key = if iterated { "ITERATED_CLOSURE" } else { "CLOSURE" };
        CliOutput::ok(format!("{key}\t{rendered}\n"))
    } else {
        let label = if iterated { "iterated closure" } else { "closure" };
        CliOutput::ok(format!("{label}: {{{rendered}}}\n"))
    }
}

fn cmd_independent(args: &[&str]) -> CliOutput {
    let parsed = match parse_args(args, &["porcelain"], &["set"]) {
        Ok(p) => p,
        Err(e) => return CliOutput::error(e),
    };
    let space = match load_space(&parsed) {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let set = match parse_set_flag(&space, &parsed, "set") {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let witness = match space.is_dependent(&set) {
        Ok(w) => w,
        Err(e) => return CliOutput::error(e.to_string()),
    };
    let porcelain = parsed.switch("porcelain");
    match witness {
        None => {
            if porcelain {
                CliOutput::ok("INDEPENDENT\ttrue\n".to_owned())
            } else {
                CliOutput::ok("independent\n".to_owned())
            }
        }
        Some(w) => {
            let circuit = w
                .circuit()
                .map(|m| space.format_set(m.set()))
                .unwrap_or_default();
            if porcelain {
                CliOutput::violated(format!("INDEPENDENT\tfalse\nWITNESS\t{circuit}\n"))
            } else {
                CliOutput::violated(format!("dependent: contains circuit {{{circuit}}}\n"))
            }
        }
    }
}

fn cmd_basis(args: &[&str]) -> CliOutput {
    let parsed = match parse_args(args, &["porcelain"], &[]) {
        Ok(p) => p,
        Err(e) => return CliOutput::error(e),
    };
    let space = match load_space(&parsed) {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let basis = space.find_basis();
    let rendered = space.format_set(&basis);
    if parsed.switch("porcelain") {
        CliOutput::ok(format!("BASIS\t{rendered}\n"))
    } else {
        CliOutput::ok(format!("basis: {{{rendered}}}\n"))
    }
}

fn cmd_bases(args: &[&str]) -> CliOutput {
    let parsed = match parse_args(args, &["porcelain"], &[]) {
        Ok(p) => p,
        Err(e) => return CliOutput::error(e),
    };
    let space = match load_space(&parsed) {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let bases = match space.enumerate_bases() {
        Ok(b) => b,
        Err(e) => return CliOutput::error(e.to_string()),
    };
    let mut out = String::new();
    if parsed.switch("porcelain") {
        out.push_str(&format!("COUNT\t{}\n", bases.len()));
        for basis in bases.iter() {
            out.push_str(&format!("BASIS\t{}\n", space.format_set(basis)));
        }
    } else {
        out.push_str(&format!("{} bases\n", bases.len()));
        for basis in bases.iter() {
            out.push_str(&format!("basis: {{{}}}\n", space.format_set(basis)));
        }
    }
    CliOutput::ok(out)
}

fn cmd_exchange(args: &[&str]) -> CliOutput {
    let parsed = match parse_args(args, &["porcelain"], &["basis", "independent"]) {
        Ok(p) => p,
        Err(e) => return CliOutput::error(e),
    };
    let space = match load_space(&parsed) {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let basis = match parse_set_flag(&space, &parsed, "basis") {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let independent = match parse_set_flag(&space, &parsed, "independent") {
        Ok(s) => s,
        Err(e) => return CliOutput::error(e),
    };
    let cert: ExchangeCertificate = match space.steinitz_exchange(&basis, &independent) {
        Ok(c) => c,
        Err(e) => return CliOutput::error(e.to_string()),
    };
    let verified = match space.verify_exchange(&cert) {
        Ok(v) => v,
        Err(e) => return CliOutput::error(e.to_string()),
    };
    let removed = space.format_set(&cert.removed);
    let result = space.format_set(&cert.result);
    let out = if parsed.switch("porcelain") {
        format!("A_PRIME\t{removed}\nX\t{result}\nVERIFIED\t{verified}\n")
    } else {
        format!("A' = {{{removed}}}\nX = {{{result}}}\nverified: {verified}\n")
    };
    if verified {
        CliOutput::ok(out)
    } else {
        CliOutput::violated(out)
    }
}

fn cmd_gen(args: &[&str]) -> CliOutput {
    let Some((&family, rest)) = args.split_first() else {
        return CliOutput::error("gen expects a family: graph, vectors, repetition, or random");
    };
    let space = match family {
        "graph" => gen_graph(rest),
        "vectors" => gen_vectors(rest),
        "repetition" => gen_repetition(rest),
        "random" => gen_random(rest),
        other => Err(format!("unknown generator family {other:?}")),
    };
    match space {
        Ok(space) => CliOutput::ok(emit_space_file(&space)),
        Err(e) => CliOutput::error(e),
    }
}

fn gen_graph(args: &[&str]) -> Result<DependenceSpace, String> {
    let parsed = parse_args(args, &["porcelain"], &["vertices", "edges"])?;
    let Some(vertices) = parsed.value("vertices") else {
        return Err("missing required flag --vertices".to_owned());
    };
    let vertices: Vec<String> = if vertices.is_empty() {
        Vec::new()
    } else {
        vertices.split(',').map(|s| s.to_owned()).collect()
    };
    let mut edges = Vec::new();
    if let Some(edge_list) = parsed.value("edges") {
        for pair in edge_list.split(',').filter(|p| !p.is_empty()) {
            let Some((u, v)) = pair.split_once('-') else {
                return Err(format!("edge {pair:?} is not of the form u-v"));
            };
            edges.push((u.to_owned(), v.to_owned()));
        }
    }
    instances::graph_space(&GraphSpec { vertices, edges }).map_err(|e| e.to_string())
}

fn gen_vectors(args: &[&str]) -> Result<DependenceSpace, String> {
    let parsed = parse_args(args, &["porcelain", "allow-zero"], &["vectors"])?;
    let Some(list) = parsed.value("vectors") else {
        return Err("missing required flag --vectors".to_owned());
    };
    let mut vectors = Vec::new();
    for item in list.split(',').filter(|p| !p.is_empty()) {
        let Some((x, y)) = item.split_once(':') else {
            return Err(format!("vector {item:?} is not of the form x:y"));
        };
        let x: i64 = x.parse().map_err(|_| format!("bad coordinate in {item:?}"))?;
        let y: i64 = y.parse().map_err(|_| format!("bad coordinate in {item:?}"))?;
        vectors.push(Vector2::new(x, y));
    }
    instances::parallel_vector_space(&vectors, parsed.switch("allow-zero"))
        .map_err(|e| e.to_string())
}

fn gen_repetition(args: &[&str]) -> Result<DependenceSpace, String> {
    let parsed = parse_args(args, &["porcelain"], &["alphabet", "length"])?;
    let alphabet: usize = parsed
        .value("alphabet")
        .ok_or("missing required flag --alphabet")?
        .parse()
        .map_err(|_| "--alphabet expects an unsigned integer")?;
    let length: usize = parsed
        .value("length")
        .ok_or("missing required flag --length")?
        .parse()
        .map_err(|_| "--length expects an unsigned integer")?;
    instances::repetition_space(alphabet, length).map_err(|e| e.to_string())
}

fn gen_random(args: &[&str]) -> Result<DependenceSpace, String> {
    let parsed = parse_args(args, &["porcelain"], &["elements", "circuits", "max-size", "seed"])?;
    let elements: usize = parsed
        .value("elements")
        .ok_or("missing required flag --elements")?
        .parse()
        .map_err(|_| "--elements expects an unsigned integer")?;
    let circuits: usize = parsed
        .value("circuits")
        .ok_or("missing required flag --circuits")?
        .parse()
        .map_err(|_| "--circuits expects an unsigned integer")?;
    let max_size: usize = parsed
        .value("max-size")
        .unwrap_or("3")
        .parse()
        .map_err(|_| "--max-size expects an unsigned integer")?;
    let seed: u64 = parsed
        .value("seed")
        .unwrap_or("0")
        .parse()
        .map_err(|_| "--seed expects an unsigned integer")?;
    instances::random_space(elements, circuits, max_size, seed).map_err(|e| e.to_string())
}
