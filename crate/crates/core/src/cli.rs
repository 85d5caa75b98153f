//! Command-line front end. `main.rs` only forwards to [`run`], so everything
//! here is testable in-process.
//!
//! Exit codes: 0 on success or a true verdict, 1 on a false verdict, 2 on errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::allocation::{format_rational, CostAllocation};
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{is_submodular_graph, Verdict, VertexCoverGame, DEFAULT_EXHAUSTIVE_CAP, SUBMODULAR_CAP};
use crate::graph::{self, Graph};
use crate::matching::{
    count_integral_pmas, enumerate_integral_pmas, gale_shapley, is_stable, scheme_from_preferences,
    PreferenceSystem, DEFAULT_ENUMERATION_CAP,
};
use crate::pmas::{
    classify_components, construct_pmas, recognize_population_monotonic, verify_pmas_with_cap,
    AllocationScheme, ComponentKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Decide population monotonicity and report the star/pisces taxonomy.
    Classify,
    /// Matching and cover numbers plus balancedness and submodularity.
    GameInfo,
    /// Evaluate the equal-split PMAS (or the integral PMAS of --prefs).
    Construct,
    /// Exhaustively verify a scheme (--scheme FILE, --prefs FILE, or the constructed one).
    Verify,
    /// Stream every integral PMAS.
    Enumerate,
    /// Count integral PMAS-es.
    Count,
    /// Gale-Shapley on one coalition under --prefs.
    StableMatch,
}

#[derive(Debug, Parser)]
#[command(name = "vcgame", version, about = "Population monotonic allocation schemes for vertex cover games")]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Edge-list graph file.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Comma-separated edge indices; defaults to the grand coalition.
    #[arg(long, global = true, value_name = "LIST")]
    coalition: Option<String>,
    /// Preference system JSON: vertex label -> ordered edge indices.
    #[arg(long, global = true, value_name = "FILE")]
    prefs: Option<PathBuf>,
    /// Scheme JSON to verify.
    #[arg(long, global = true, value_name = "FILE")]
    scheme: Option<PathBuf>,
    /// Emit full schemes instead of one coalition's vector.
    #[arg(long, global = true)]
    materialize: bool,
    /// Player cap for exhaustive work.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_EXHAUSTIVE_CAP,
          value_parser = positive)]
    max_edges: usize,
    /// Stop enumeration after N schemes.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ENUMERATION_CAP,
          value_parser = positive)]
    max_enumerate: usize,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

/// Everything a command needs, resolved from the arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub coalition: Option<String>,
    pub prefs: Option<PathBuf>,
    pub scheme: Option<PathBuf>,
    pub materialize: bool,
    pub max_edges: usize,
    pub max_enumerate: usize,
    pub format: Format,
}

impl RunConfig {
    fn from_args(a: Args) -> Result<RunConfig> {
        let input = a
            .input
            .ok_or_else(|| Error::Contract("--input FILE is required".into()))?;
        let default_format = match a.command {
            Command::Construct | Command::Enumerate | Command::StableMatch => Format::Json,
            _ => Format::Text,
        };
        Ok(RunConfig {
            command: a.command,
            input,
            output: a.output,
            coalition: a.coalition,
            prefs: a.prefs,
            scheme: a.scheme,
            materialize: a.materialize,
            max_edges: a.max_edges,
            max_enumerate: a.max_enumerate,
            format: a.format.unwrap_or(default_format),
        })
    }
}

/// A finished command: the report and whether its verdict was positive.
struct Outcome {
    report: String,
    verdict: bool,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, verdict: true }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = RunConfig::from_args(args).and_then(|cfg| {
        let out = execute(&cfg)?;
        Ok((cfg, out))
    });
    match outcome {
        Ok((cfg, out)) => {
            let written = match &cfg.output {
                Some(path) => fs::write(path, &out.report)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(out.report.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(stderr, "error: {msg}");
                return 2;
            }
            if out.verdict {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn positive(text: &str) -> std::result::Result<usize, String> {
    match text.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let graph = load_graph(&cfg.input)?;
    match cfg.command {
        Command::Classify => cmd_classify(&graph, cfg),
        Command::GameInfo => cmd_game_info(graph, cfg),
        Command::Construct => cmd_construct(&graph, cfg),
        Command::Verify => cmd_verify(graph, cfg),
        Command::Enumerate => cmd_enumerate(&graph, cfg),
        Command::Count => cmd_count(&graph, cfg),
        Command::StableMatch => cmd_stable_match(graph, cfg),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?).map_err(|e| match e {
        Error::Format { line, message } => Error::Format {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn coalition(g: &Graph, cfg: &RunConfig) -> Result<Coalition> {
    let s = match &cfg.coalition {
        None => g.players(),
        Some(text) => text.parse::<Coalition>()?,
    };
    if s.is_empty() {
        return Err(Error::Contract("--coalition must name at least one edge".into()));
    }
    g.check_coalition(&s)?;
    Ok(s)
}

fn load_prefs(g: &Graph, path: &Path) -> Result<PreferenceSystem> {
    PreferenceSystem::from_json(Arc::new(g.clone()), &read(path)?)
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("plain JSON values serialize");
    s.push('\n');
    s
}

fn labels(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn cmd_classify(g: &Graph, cfg: &RunConfig) -> Result<Outcome> {
    if let Verdict::Fails(w) = recognize_population_monotonic(g) {
        let report = match cfg.format {
            Format::Text => format!("population monotonic: no; witness {w}\n"),
            Format::Json => json_line(&json!({
                "population_monotonic": false,
                "witness": {"pattern": w.pattern.to_string(), "vertices": w.vertices},
            })),
        };
        return Ok(Outcome { report, verdict: false });
    }
    let c = classify_components(g)?;
    let riders: Vec<usize> = c.cover.free_riders().collect();
    let report = match cfg.format {
        Format::Text => {
            let mut parts = Vec::new();
            for (kind, one, many) in [
                (ComponentKind::Star, "star", "stars"),
                (ComponentKind::Pisces, "pisces", "pisceses"),
                (ComponentKind::SingleEdge, "single edge", "single edges"),
            ] {
                let k = c.count(kind);
                if k > 0 {
                    parts.push(plural(k, one, many));
                }
            }
            let mut head = format!("population monotonic: yes; {}", parts.join(", "));
            match riders.as_slice() {
                [] => {}
                [e] => head.push_str(&format!("; free rider = edge {e}")),
                many => head.push_str(&format!(
                    "; free riders = edges {}",
                    many.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                )),
            }
            let mut out = head + "\n";
            for (k, comp) in c.components.iter().enumerate() {
                let role = if comp.kind == ComponentKind::Pisces { "bases" } else { "center" };
                out.push_str(&format!(
                    "component {k} {{{}}}: {}, {role} {}",
                    comp.edges,
                    comp.kind,
                    labels(g, &comp.centers).join(",")
                ));
                if let Some(fr) = comp.free_rider {
                    out.push_str(&format!(", free rider {fr} ({})", g.edge_label(fr)));
                }
                out.push('\n');
            }
            out.push_str(&format!("cover C* = {{{}}}\n", labels(g, c.cover.vertices()).join(",")));
            out
        }
        Format::Json => {
            let comps: Vec<Value> = c
                .components
                .iter()
                .map(|comp| {
                    let mut pendant = serde_json::Map::new();
                    for (v, es) in &comp.pendant_edges {
                        pendant.insert(g.label(*v).to_string(), json!(es));
                    }
                    json!({
                        "edges": comp.edges.iter().collect::<Vec<_>>(),
                        "kind": comp.kind.to_string(),
                        "centers": labels(g, &comp.centers),
                        "free_rider": comp.free_rider,
                        "pendant_edges": pendant,
                    })
                })
                .collect();
            json_line(&json!({
                "population_monotonic": true,
                "components": comps,
                "free_riders": riders,
                "cover": labels(g, c.cover.vertices()),
            }))
        }
    };
    Ok(Outcome::ok(report))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_game_info(g: Graph, cfg: &RunConfig) -> Result<Outcome> {
    let game = VertexCoverGame::new(g);
    let all = game.players();
    let n = game.player_count();
    let nu = graph::matching_number(game.graph(), &all).map(|m| m.len());
    let tau = game.gamma(&all);
    let bipartite = game.is_totally_balanced();
    let submodular = is_submodular_graph(game.graph());
    let monotone_exh = if n <= cfg.max_edges {
        Some(game.is_monotone_game_with_cap(cfg.max_edges).map(|v| v.holds()))
    } else {
        None
    };
    let submodular_exh = if n <= SUBMODULAR_CAP.min(cfg.max_edges) {
        Some(game.is_submodular_game().map(|v| v.holds()))
    } else {
        None
    };
    let balanced = match (&nu, &tau) {
        (Ok(a), Ok(b)) => Ok(a == b),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    let report = match cfg.format {
        Format::Text => {
            let num = |r: &Result<usize>| match r {
                Ok(v) => v.to_string(),
                Err(e) => format!("unknown ({e})"),
            };
            let flag = |r: &Result<bool>| match r {
                Ok(b) => yes_no(*b).to_string(),
                Err(e) => format!("unknown ({e})"),
            };
            let exh = |r: &Option<Result<bool>>, cap: usize| match r {
                Some(r) => flag(r),
                None => format!("skipped (more than {cap} players)"),
            };
            format!(
                "players: {n}\n\
                 matching number: {}\n\
                 vertex cover number: {}\n\
                 bipartite: {}\n\
                 balanced: {} (criterion: matching number = vertex cover number)\n\
                 totally balanced: {} (criterion: bipartite)\n\
                 submodular: {} (criterion: (K3,P4)-free)\n\
                 submodular, exhaustive check: {}\n\
                 monotone, exhaustive check: {}\n",
                num(&nu),
                num(&tau),
                yes_no(bipartite),
                flag(&balanced),
                yes_no(bipartite),
                yes_no(submodular),
                exh(&submodular_exh, SUBMODULAR_CAP.min(cfg.max_edges)),
                exh(&monotone_exh, cfg.max_edges),
            )
        }
        Format::Json => {
            let opt = |r: &Result<usize>| r.as_ref().ok().copied();
            let optb = |r: &Option<Result<bool>>| r.as_ref().and_then(|r| r.as_ref().ok().copied());
            json_line(&json!({
                "players": n,
                "matching_number": opt(&nu),
                "vertex_cover_number": opt(&tau),
                "bipartite": bipartite,
                "balanced": balanced.as_ref().ok(),
                "totally_balanced": bipartite,
                "submodular": submodular,
                "submodular_exhaustive": optb(&submodular_exh),
                "monotone_exhaustive": optb(&monotone_exh),
            }))
        }
    };
    Ok(Outcome::ok(report))
}

fn scheme_for(g: &Graph, cfg: &RunConfig) -> Result<AllocationScheme> {
    match &cfg.prefs {
        Some(path) => scheme_from_preferences(&load_prefs(g, path)?),
        None => construct_pmas(g),
    }
}

fn allocation_text(g: &Graph, a: &CostAllocation) -> String {
    a.iter()
        .map(|(i, v)| format!("edge {i} ({}): {}\n", g.edge_label(i), format_rational(&v)))
        .collect()
}

fn cmd_construct(g: &Graph, cfg: &RunConfig) -> Result<Outcome> {
    let scheme = scheme_for(g, cfg)?;
    let report = if cfg.materialize {
        let mut text = scheme.to_json(cfg.max_edges)?;
        text.push('\n');
        if cfg.format == Format::Text {
            let table = scheme.materialize(cfg.max_edges)?;
            let AllocationScheme::Table { entries, .. } = table else {
                unreachable!("materialize returns a table");
            };
            entries
                .iter()
                .map(|(s, a)| {
                    let vals: Vec<String> = a.values().iter().map(format_rational).collect();
                    format!("{{{s}}}: {}\n", vals.join(" "))
                })
                .collect()
        } else {
            text
        }
    } else {
        let s = coalition(g, cfg)?;
        let a = scheme.allocation(&s)?;
        match cfg.format {
            Format::Json => json_line(&a.to_json_value()),
            Format::Text => allocation_text(g, &a),
        }
    };
    Ok(Outcome::ok(report))
}

fn cmd_verify(g: Graph, cfg: &RunConfig) -> Result<Outcome> {
    let scheme = match &cfg.scheme {
        Some(path) => AllocationScheme::from_json(&read(path)?, g.edge_count())?,
        None => scheme_for(&g, cfg)?,
    };
    let game = VertexCoverGame::new(g);
    let verdict = verify_pmas_with_cap(&game, &scheme, cfg.max_edges)?;
    let report = match (&verdict, cfg.format) {
        (Verdict::Holds, Format::Text) => "PMAS: yes\n".to_string(),
        (Verdict::Fails(v), Format::Text) => format!("PMAS: no; {v}\n"),
        (Verdict::Holds, Format::Json) => json_line(&json!({"pmas": true})),
        (Verdict::Fails(v), Format::Json) => json_line(&json!({"pmas": false, "violation": v.to_string()})),
    };
    Ok(Outcome {
        report,
        verdict: verdict.holds(),
    })
}

fn cmd_enumerate(g: &Graph, cfg: &RunConfig) -> Result<Outcome> {
    let s = coalition(g, cfg)?;
    let mut stream = enumerate_integral_pmas(g, cfg.max_enumerate)?;
    let mut out = String::new();
    for (k, item) in stream.by_ref().enumerate() {
        let item = item?;
        let prefs: Value = serde_json::from_str(&item.preferences.to_json())?;
        match cfg.format {
            Format::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("preferences".into(), prefs);
                if cfg.materialize {
                    let table: Value = serde_json::from_str(&item.scheme.to_json(cfg.max_edges)?)?;
                    obj.insert("scheme".into(), table);
                } else {
                    obj.insert("coalition".into(), json!(s.to_string()));
                    obj.insert("allocation".into(), item.scheme.allocation(&s)?.to_json_value());
                }
                out.push_str(&json_line(&Value::Object(obj)));
            }
            Format::Text => {
                let a = item.scheme.allocation(&s)?;
                let paying: Vec<String> = a
                    .iter()
                    .filter(|(_, v)| *v == crate::allocation::Rational::from_integer(1))
                    .map(|(i, _)| i.to_string())
                    .collect();
                out.push_str(&format!(
                    "#{} preferences {} pays {{{}}} in {{{s}}}\n",
                    k + 1,
                    item.preferences.to_json(),
                    paying.join(",")
                ));
            }
        }
    }
    if stream.is_truncated() {
        match cfg.format {
            Format::Json => out.push_str(&json_line(&json!({"truncated": true, "emitted": stream.emitted()}))),
            Format::Text => out.push_str(&format!("truncated after {} schemes\n", stream.emitted())),
        }
    }
    Ok(Outcome::ok(out))
}

fn cmd_count(g: &Graph, cfg: &RunConfig) -> Result<Outcome> {
    let n = count_integral_pmas(g)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Text => format!("{n}\n"),
        Format::Json => format!("{{\"count\":{n}}}\n"),
    }))
}

fn cmd_stable_match(g: Graph, cfg: &RunConfig) -> Result<Outcome> {
    let path = cfg
        .prefs
        .as_ref()
        .ok_or_else(|| Error::Contract("stable-match needs --prefs FILE".into()))?;
    let s = coalition(&g, cfg)?;
    let ps = load_prefs(&g, path)?;
    let m = gale_shapley(&ps, &s)?;
    let stable = is_stable(&ps, &s, m.edges()).holds();
    let report = match cfg.format {
        Format::Json => json_line(&json!({
            "coalition": s.to_string(),
            "matching": m.edges().iter().collect::<Vec<_>>(),
            "stable": stable,
            "allocation": CostAllocation::incidence(&s, m.edges()).to_json_value(),
        })),
        Format::Text => {
            let edges: Vec<String> = m.edges().iter().map(|e| format!("{e} ({})", g.edge_label(e))).collect();
            format!("stable matching of {{{s}}}: {}\n", edges.join(", "))
        }
    };
    Ok(Outcome { report, verdict: stable })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_must_be_positive() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(["vcgame", "count", "--input", "x", "--max-edges", "0"], &mut out, &mut err);
        assert_eq!(code, 2);
        let code = run(["vcgame", "bogus"], &mut out, &mut err);
        assert_eq!(code, 2);
    }

    #[test]
    fn missing_input_is_an_error() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["vcgame", "classify"], &mut out, &mut err), 2);
        assert!(String::from_utf8(err).unwrap().contains("--input"));
    }
}
