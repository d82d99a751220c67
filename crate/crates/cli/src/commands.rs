//! The four subcommands. Each returns its output instead of printing it.

use std::fmt::Write as _;
use std::path::Path;

use resmc::kformula::{exceeds_n4, isqrt, k_one, k_zero, thresholds};
use resmc::oracle::{graph_count, SearchSpec, MAX_VERTICES};
use resmc::resistance::{check_highly_am_resistant, Violation};
use resmc::{
    build_clique_realization, ColorSet, Graph, KValue, Multicoloring, Scenario, VertexSet,
};
use serde_json::{json, Value};

use crate::{dot, instance, search, CliError};

/// Process exit status: 0 success, 1 semantic failure, 2 input error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Failure = 1,
    InputError = 2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub exit: Exit,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { exit: Exit::Success, stdout, stderr: String::new() }
    }

    fn with_exit(self, exit: Exit) -> Self {
        Output { exit, ..self }
    }
}

impl From<CliError> for Output {
    fn from(e: CliError) -> Self {
        Output { exit: Exit::InputError, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

fn machine(value: Value) -> String {
    format!("{value}\n")
}

fn k_json(k: KValue) -> Value {
    match k {
        KValue::Finite(k) => json!(k),
        KValue::Infinite => json!("infinite"),
    }
}

/// `2+m+√(4m+1)` in closed form, e.g. `10+√33`, or an integer when exact.
pub fn n4_exact(m: u64) -> String {
    let radicand = 4 * m as u128 + 1;
    let root = isqrt(radicand);
    if root * root == radicand {
        format!("{}", 2 + m as u128 + root)
    } else {
        format!("{}+√{radicand}", 2 + m as u128)
    }
}

fn n4_line(m: u64) -> Result<String, CliError> {
    let approx = thresholds(m)?.n4;
    Ok(format!("n4({m}) = {} ≈ {approx:.3}", n4_exact(m)))
}

fn closed_form(a: usize, m: usize, n: usize) -> Result<Option<KValue>, CliError> {
    match a {
        0 => Ok(Some(k_zero(m as u64, n as u64))),
        1 if m >= 1 => Ok(Some(k_one(m as u64, n as u64)?)),
        _ => Ok(None),
    }
}

pub fn kvalue(a: usize, m: u64, n: u64, as_json: bool) -> Output {
    match kvalue_inner(a, m, n, as_json) {
        Ok(out) => out,
        Err(e) => e.into(),
    }
}

fn kvalue_inner(a: usize, m: u64, n: u64, as_json: bool) -> Result<Output, CliError> {
    match a {
        0 => {
            let k = k_zero(m, n);
            let text = if as_json {
                machine(json!({ "a": 0, "m": m, "n": n, "k": k_json(k) }))
            } else {
                format!("K(0,{m},{n}) = {k}\n")
            };
            Ok(Output::ok(text))
        }
        1 => {
            if m == 0 {
                return Err(CliError::Input("m must be at least 1 when a = 1".into()));
            }
            let k = k_one(m, n)?;
            let clears = exceeds_n4(m, n);
            let text = if as_json {
                machine(json!({
                    "a": 1, "m": m, "n": n, "k": k_json(k),
                    "n4": n4_exact(m), "n4_approx": thresholds(m)?.n4, "exceeds_n4": clears,
                }))
            } else {
                format!(
                    "K(1,{m},{n}) = {k}\n{}\nn = {n} exceeds n4({m}): {}\n",
                    n4_line(m)?,
                    if clears { "yes" } else { "no" }
                )
            };
            Ok(Output::ok(text))
        }
        _ => Err(CliError::Input("unsupported: closed forms are only known for a <= 1".into())),
    }
}

fn color_union(c: &Multicoloring, set: &VertexSet) -> ColorSet {
    let mut union = ColorSet::new();
    for v in set {
        union.union_with(c.colors(v));
    }
    union
}

fn surviving(g: &Graph, c: &Multicoloring, removed: &VertexSet) -> Vec<(VertexSet, ColorSet)> {
    let alive = g.vertices().difference(removed);
    g.induced_components(&alive)
        .into_iter()
        .map(|comp| {
            let colors = color_union(c, &comp);
            (comp, colors)
        })
        .collect()
}

pub fn verify(path: &Path, a: usize, m: usize, as_json: bool) -> Output {
    match verify_inner(path, a, m, as_json) {
        Ok(out) => out,
        Err(e) => e.into(),
    }
}

fn verify_inner(path: &Path, a: usize, m: usize, as_json: bool) -> Result<Output, CliError> {
    let inst = instance::read(path)?;
    let (g, c) = (&inst.graph, &inst.coloring);
    let (n, k) = (g.n(), c.k());
    let report = check_highly_am_resistant(g, c, Scenario::new(a, m))?;
    let exit = if report.passed() { Exit::Success } else { Exit::Failure };
    let list = |s: &VertexSet| s.to_vec();
    if as_json {
        let (kind, attackers, failures) = match report.violation() {
            None => (Value::Null, Value::Null, Value::Null),
            Some(Violation::Vacuous) => (json!("vacuous"), Value::Null, Value::Null),
            Some(Violation::AttackersHoldSecret { attackers }) => {
                (json!("attackers_hold_all_colors"), json!(list(attackers)), Value::Null)
            }
            Some(Violation::NoFullComponent { attackers, failures }) => {
                (json!("no_full_component"), json!(list(attackers)), json!(list(failures)))
            }
        };
        let value = json!({
            "passed": report.passed(), "a": a, "m": m, "n": n, "k": k,
            "violation": kind, "attackers": attackers, "failures": failures,
            "examined": report.examined(),
        });
        return Ok(Output::ok(machine(value)).with_exit(exit));
    }
    let mut text = String::new();
    match report.violation() {
        None => writeln!(
            text,
            "PASS: highly ({a},{m})-resistant (n = {n}, k = {k}, {} cases examined)",
            report.examined()
        )
        .unwrap(),
        Some(Violation::Vacuous) => {
            writeln!(text, "FAIL: a = {a} or m = {m} exceeds n = {n}; no sets of that size exist")
                .unwrap()
        }
        Some(Violation::AttackersHoldSecret { attackers }) => {
            writeln!(text, "FAIL: attackers A = {attackers} jointly hold all {k} colors").unwrap()
        }
        Some(Violation::NoFullComponent { attackers, failures }) => {
            writeln!(
                text,
                "FAIL: A = {attackers}, M = {failures}: no component of G - (N0(A) ∪ M) holds all {k} colors"
            )
            .unwrap();
            let removed = g.closed_neighborhood(attackers)?.union(failures);
            writeln!(text, "  removed: {removed}").unwrap();
            for (comp, colors) in surviving(g, c, &removed) {
                writeln!(text, "  component {comp} holds {colors}").unwrap();
            }
        }
    }
    Ok(Output::ok(text).with_exit(exit))
}

pub fn construct(m: u64, n: u64, format: Format, out: Option<&Path>) -> Output {
    match construct_inner(m, n, format, out) {
        Ok(out) => out,
        Err(e) => e.into(),
    }
}

fn construct_inner(m: u64, n: u64, format: Format, out: Option<&Path>) -> Result<Output, CliError> {
    if m == 0 {
        return Err(CliError::Input("m must be at least 1".into()));
    }
    if !exceeds_n4(m, n) {
        let stderr = format!(
            "infeasible: K(1,{m},{n}) is infinite because n = {n} does not exceed {}\n",
            n4_line(m)?
        );
        return Ok(Output { exit: Exit::Failure, stdout: String::new(), stderr });
    }
    let r = build_clique_realization(m, n)?;
    let report = r.verify()?;
    if !report.passed() {
        let stderr =
            format!("error: built realization failed verification: {:?}\n", report.violation());
        return Ok(Output { exit: Exit::Failure, stdout: String::new(), stderr });
    }
    let rendered = match format {
        Format::Json => instance::InstanceFile::from_instance(&r.graph, &r.coloring).to_json(),
        Format::Dot => dot::to_dot(&r.graph, &r.coloring),
    };
    let summary = format!(
        "realization of (1,{m},{n},{}): {} components, verified\n",
        r.k(),
        r.graph.components().len()
    );
    match out {
        Some(path) => {
            std::fs::write(path, rendered)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Output::ok(format!("wrote {}\n{summary}", path.display())))
        }
        None => Ok(Output { exit: Exit::Success, stdout: rendered, stderr: summary }),
    }
}

pub fn oracle(
    a: usize,
    m: usize,
    n: usize,
    k_max: Option<usize>,
    witness: Option<&Path>,
    as_json: bool,
) -> Output {
    match oracle_inner(a, m, n, k_max, witness, as_json) {
        Ok(out) => out,
        Err(e) => e.into(),
    }
}

fn oracle_inner(
    a: usize,
    m: usize,
    n: usize,
    k_max: Option<usize>,
    witness: Option<&Path>,
    as_json: bool,
) -> Result<Output, CliError> {
    if n > MAX_VERTICES {
        return Err(CliError::Input(format!(
            "n = {n} exceeds the oracle cap of {MAX_VERTICES} vertices (2^21 labeled graphs at n = 7)"
        )));
    }
    let mut spec = SearchSpec::new(a, m, n);
    if let Some(k_max) = k_max {
        spec = spec.with_k_max(k_max);
    }
    let (k, found) = search::brute_force(&spec)?;
    let formula = closed_form(a, m, n)?;
    let (verdict, exit) = match formula {
        None => ("no closed form".to_string(), Exit::Success),
        Some(f) if f == k => ("agrees".to_string(), Exit::Success),
        Some(KValue::Finite(f)) if k.is_infinite() && f > spec.k_max as u64 => {
            (format!("inconclusive: closed form exceeds k_max = {}", spec.k_max), Exit::Success)
        }
        Some(_) => ("DISAGREES".to_string(), Exit::Failure),
    };
    let mut notes = String::new();
    if let Some(path) = witness {
        match &found {
            Some(r) => {
                instance::write(path, &r.graph, &r.coloring)?;
                writeln!(notes, "witness written to {}", path.display()).unwrap();
            }
            None => writeln!(notes, "no witness to write").unwrap(),
        }
    }
    let text = if as_json {
        machine(json!({
            "a": a, "m": m, "n": n, "k_max": spec.k_max, "k": k_json(k),
            "closed_form": formula.map(k_json), "verdict": verdict,
            "graphs": graph_count(n),
        }))
    } else {
        let mut text = format!(
            "oracle K({a},{m},{n}) = {k} (k in {}..={} over {} labeled graphs)\n",
            spec.k_min(),
            spec.k_max,
            graph_count(n)
        );
        match formula {
            Some(f) => writeln!(text, "closed form K({a},{m},{n}) = {f}: {verdict}").unwrap(),
            None => writeln!(text, "{verdict} for a = {a}, m = {m}").unwrap(),
        }
        text
    };
    Ok(Output { exit, stdout: text, stderr: notes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n4_closed_forms() {
        assert_eq!(n4_exact(8), "10+√33");
        assert_eq!(n4_exact(2), "7");
        assert_eq!(n4_exact(6), "13");
        assert_eq!(n4_exact(1), "3+√5");
    }

    #[test]
    fn kvalue_reports() {
        let out = kvalue(1, 8, 16, false);
        assert!(out.stdout.starts_with("K(1,8,16) = 4\n"));
        assert!(out.stdout.contains("10+√33"));
        assert!(kvalue(1, 8, 15, false).stdout.starts_with("K(1,8,15) = infinite"));
        assert_eq!(kvalue(0, 3, 3, false).stdout, "K(0,3,3) = infinite\n");
        let bad = kvalue(2, 1, 10, false);
        assert_eq!(bad.exit, Exit::InputError);
        assert!(bad.stderr.contains("unsupported"));
        let v: Value = serde_json::from_str(&kvalue(1, 4, 11, true).stdout).unwrap();
        assert_eq!(v["k"], 3);
        assert_eq!(v["exceeds_n4"], true);
    }

    #[test]
    fn infeasible_construct_explains_threshold() {
        let out = construct(8, 15, Format::Json, None);
        assert_eq!(out.exit, Exit::Failure);
        assert!(out.stderr.contains("n4(8) = 10+√33"));
        assert_eq!(construct(0, 10, Format::Json, None).exit, Exit::InputError);
    }

    #[test]
    fn oracle_refuses_large_n() {
        let out = oracle(1, 1, 8, None, None, false);
        assert_eq!(out.exit, Exit::InputError);
        assert!(out.stderr.contains("cap of 7"));
    }
}
