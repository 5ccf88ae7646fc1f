//! Command-line front end for the `endvertex` crate.
//!
//! Every subcommand renders to a string so the binary only prints it; with
//! `--json` the string is a single JSON document.

pub mod format;

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use endvertex::decide::{
    dispatch_endvertex, Answer, ClassHint, DispatchOptions, DispatchOutcome, Obstruction,
};
use endvertex::oracle::{default_guard, endvertex_set_exhaustive, is_endvertex_exhaustive};
use endvertex::recognize::{
    find_claw, find_net, is_weakly_chordal_desk, recognize_chordal, recognize_interval,
    recognize_split, recognize_unit_interval, Chordality, DEFAULT_WEAK_CHORDAL_GUARD,
};
use endvertex::reduction::{
    build_mcs_gadget, build_mns_gadget, sat_bruteforce, witness_order_mcs, witness_order_mns,
    CnfFormula, DEFAULT_SAT_GUARD,
};
use endvertex::{
    run_search, validate_order, Error, SearchKind, TieBreakPolicy, Validation, VertexOrdering,
};

use format::{read_graph, write_graph, NamedGraph};

#[derive(Debug, Parser)]
#[command(
    name = "endvertex",
    version,
    about = "Graph searches and their end-vertices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Graph file in edge-list format.
    pub file: PathBuf,
    /// Emit one JSON document instead of text.
    #[arg(long)]
    pub json: bool,
}

fn parse_kind(s: &str) -> std::result::Result<SearchKind, String> {
    s.parse()
}

fn parse_class(s: &str) -> std::result::Result<ClassHint, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PolicyArg {
    Lowest,
    Highest,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReductionKind {
    Mns,
    Mcs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a search and print its order.
    Search {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_kind)]
        kind: SearchKind,
        /// Start vertex; defaults to whatever the tie-break picks.
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum, default_value = "lowest")]
        policy: PolicyArg,
        /// Seed for `--policy random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check whether an order is a valid search order.
    Validate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_kind)]
        kind: SearchKind,
        /// Comma-separated vertices.
        #[arg(long)]
        order: String,
    },
    /// Decide whether a vertex can end a search.
    Endvertex {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_kind)]
        kind: SearchKind,
        #[arg(long)]
        target: String,
        /// auto, split, chordal, interval or unit-interval.
        #[arg(long, value_parser = parse_class, default_value = "auto")]
        class: ClassHint,
        /// Largest graph the exhaustive fallback may handle; 0 disables it.
        #[arg(long)]
        oracle_guard: Option<usize>,
    },
    /// Exhaustive end-vertex set, or membership of one target.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_kind)]
        kind: SearchKind,
        #[arg(long)]
        target: Option<String>,
        /// Fix the first vertex of every order.
        #[arg(long)]
        start: Option<String>,
        /// Largest vertex count to enumerate.
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Compile a 3-CNF formula into an end-vertex instance.
    Reduce {
        /// DIMACS CNF file.
        cnf: PathBuf,
        #[arg(long, value_enum)]
        search: ReductionKind,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the `id role` sidecar here.
        #[arg(long)]
        roles: Option<PathBuf>,
        /// Solve by brute force and emit a witness order when satisfiable.
        #[arg(long)]
        witness: bool,
        /// Largest variable count for the brute-force solver.
        #[arg(long, default_value_t = DEFAULT_SAT_GUARD)]
        sat_guard: usize,
        #[arg(long)]
        json: bool,
    },
    /// Report class memberships with certificates.
    Recognize {
        #[command(flatten)]
        common: Common,
    },
}

/// Adds the flag to raise when a guard was hit.
fn guarded<T>(r: std::result::Result<T, Error>, flag: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::GuardExceeded { .. } => anyhow::anyhow!("{e}; raise it with {flag}"),
        other => other.into(),
    })
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn joined(ng: &NamedGraph, vs: impl IntoIterator<Item = usize>) -> String {
    ng.labels(vs).join(",")
}

pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Search {
            common,
            kind,
            start,
            policy,
            seed,
        } => search(common, *kind, start.as_deref(), *policy, *seed),
        Command::Validate {
            common,
            kind,
            order,
        } => validate(common, *kind, order),
        Command::Endvertex {
            common,
            kind,
            target,
            class,
            oracle_guard,
        } => endvertex(common, *kind, target, *class, *oracle_guard),
        Command::Oracle {
            common,
            kind,
            target,
            start,
            guard,
        } => oracle(common, *kind, target.as_deref(), start.as_deref(), *guard),
        Command::Reduce {
            cnf,
            search,
            out,
            roles,
            witness,
            sat_guard,
            json,
        } => reduce(
            cnf,
            *search,
            out.as_deref(),
            roles.as_deref(),
            *witness,
            *sat_guard,
            *json,
        ),
        Command::Recognize { common } => recognize(common),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I) -> Result<String>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    execute(&cli)
}

fn search(
    common: &Common,
    kind: SearchKind,
    start: Option<&str>,
    policy: PolicyArg,
    seed: u64,
) -> Result<String> {
    let ng = read_graph(&common.file)?;
    let start = start.map(|s| ng.resolve(s)).transpose()?;
    let tie = match policy {
        PolicyArg::Lowest => TieBreakPolicy::LowestId,
        PolicyArg::Highest => TieBreakPolicy::HighestId,
        PolicyArg::Random => TieBreakPolicy::SeededRandom(seed),
    };
    let order = run_search(kind, &ng.graph, start, &tie)?;
    let labels = ng.labels(order.as_slice().iter().copied());
    let value = json!({
        "command": "search",
        "kind": kind.name(),
        "start": start.map(|v| ng.label(v)),
        "policy": format!("{policy:?}").to_lowercase(),
        "seed": seed,
        "order": labels,
    });
    Ok(render(
        common.json,
        value,
        format!("{}\n", labels.join(",")),
    ))
}

fn validate(common: &Common, kind: SearchKind, order: &str) -> Result<String> {
    let ng = read_graph(&common.file)?;
    let ids = ng.resolve_list(order)?;
    let ordering = VertexOrdering::new(ng.graph.vertex_count(), ids)?;
    let result = validate_order(kind, &ng.graph, &ordering)?;
    let (value, text) = match &result {
        Validation::Valid => (
            json!({"command": "validate", "kind": kind.name(), "valid": true, "violation": null}),
            format!("valid {} order\n", kind.name()),
        ),
        Validation::Invalid(v) => {
            let eligible = ng.labels(v.eligible.iter().copied());
            (
                json!({
                    "command": "validate",
                    "kind": kind.name(),
                    "valid": false,
                    "violation": {
                        "position": v.position,
                        "vertex": ng.label(v.vertex),
                        "eligible": eligible,
                    },
                }),
                format!(
                    "invalid {} order: position {} holds {}, eligible were {}\n",
                    kind.name(),
                    v.position,
                    ng.label(v.vertex),
                    eligible.join(",")
                ),
            )
        }
    };
    Ok(render(common.json, value, text))
}

fn obstruction_value(ng: &NamedGraph, o: &Obstruction) -> (Value, String) {
    match o {
        Obstruction::NotSimplicial { u, w } => (
            json!({"type": "not-simplicial", "u": ng.label(*u), "w": ng.label(*w)}),
            format!(
                "not simplicial: neighbors {} and {} are nonadjacent",
                ng.label(*u),
                ng.label(*w)
            ),
        ),
        Obstruction::SeparatorsNotChained { first, second } => (
            json!({
                "type": "separators-not-chained",
                "first": ng.labels(first.iter().copied()),
                "second": ng.labels(second.iter().copied()),
            }),
            format!(
                "minimal separators {{{}}} and {{{}}} in the neighborhood are incomparable",
                joined(ng, first.iter().copied()),
                joined(ng, second.iter().copied())
            ),
        ),
        Obstruction::IncomparableNeighborhoods { v, w } => (
            json!({
                "type": "incomparable-neighborhoods",
                "v": ng.label(*v),
                "w": ng.label(*w),
            }),
            format!(
                "neighborhoods of {} and {} are incomparable",
                ng.label(*v),
                ng.label(*w)
            ),
        ),
        Obstruction::RemainderDisconnected { components } => (
            json!({"type": "remainder-disconnected", "components": components}),
            format!("removing the closed neighborhood leaves {components} components"),
        ),
        Obstruction::CutVertex => (
            json!({"type": "cut-vertex"}),
            "target is a cut vertex".into(),
        ),
        Obstruction::NoHamiltonianPath => (
            json!({"type": "no-hamiltonian-path"}),
            "the neighborhood has no hamiltonian path".into(),
        ),
    }
}

fn option_bool(b: Option<bool>) -> Value {
    b.map_or(Value::Null, Value::Bool)
}

fn endvertex(
    common: &Common,
    kind: SearchKind,
    target: &str,
    class: ClassHint,
    oracle_guard: Option<usize>,
) -> Result<String> {
    let ng = read_graph(&common.file)?;
    let t = ng.resolve(target)?;
    let options = DispatchOptions {
        class_hint: class,
        oracle_guard,
    };
    let outcome: DispatchOutcome = guarded(
        dispatch_endvertex(&ng.graph, t, kind, &options),
        "--oracle-guard",
    )?;
    let (answer, reason) = match &outcome.answer {
        Answer::Yes => ("yes", None),
        Answer::No => ("no", None),
        Answer::Unknown(why) => ("unknown", Some(why.clone())),
    };
    let obstruction = outcome
        .verdict
        .as_ref()
        .and_then(|v| v.obstruction())
        .map(|o| obstruction_value(&ng, o));
    let witness = outcome
        .witness
        .as_ref()
        .map(|w| ng.labels(w.as_slice().iter().copied()));
    let c = &outcome.classes;
    let value = json!({
        "command": "endvertex",
        "kind": kind.name(),
        "target": ng.label(t),
        "answer": answer,
        "route": outcome.route.name(),
        "reason": reason,
        "obstruction": obstruction.as_ref().map(|o| o.0.clone()),
        "witness": witness,
        "decider_gap": outcome.decider_gap,
        "classes": {
            "chordal": option_bool(c.chordal),
            "split": option_bool(c.split),
            "interval": option_bool(c.interval),
            "unit_interval": option_bool(c.unit_interval),
            "claw_net_free": option_bool(c.claw_net_free),
        },
    });
    let mut text = format!(
        "{}\nroute: {}\n",
        match answer {
            "yes" => "Yes",
            "no" => "No",
            _ => "Unknown",
        },
        outcome.route.name()
    );
    if let Some((_, why)) = &obstruction {
        text.push_str(&format!("reason: {why}\n"));
    }
    if let Some(why) = &reason {
        text.push_str(&format!("reason: {why}\n"));
    }
    if let Some(gap) = &outcome.decider_gap {
        text.push_str(&format!("decider gap: {gap}\n"));
    }
    if let Some(w) = &witness {
        text.push_str(&format!("witness: {}\n", w.join(",")));
    }
    Ok(render(common.json, value, text))
}

fn oracle(
    common: &Common,
    kind: SearchKind,
    target: Option<&str>,
    start: Option<&str>,
    guard: Option<usize>,
) -> Result<String> {
    let ng = read_graph(&common.file)?;
    let start = start.map(|s| ng.resolve(s)).transpose()?;
    let guard = guard.unwrap_or_else(|| default_guard(kind));
    let g = &ng.graph;
    match target {
        Some(target) => {
            let t = ng.resolve(target)?;
            let found = guarded(is_endvertex_exhaustive(g, kind, t, start, guard), "--guard")?;
            let witness = found.map(|w| ng.labels(w.as_slice().iter().copied()));
            let value = json!({
                "command": "oracle",
                "kind": kind.name(),
                "start": start.map(|v| ng.label(v)),
                "target": ng.label(t),
                "answer": if witness.is_some() { "yes" } else { "no" },
                "witness": witness,
            });
            let text = match &witness {
                Some(w) => format!("Yes\nwitness: {}\n", w.join(",")),
                None => "No\n".to_string(),
            };
            Ok(render(common.json, value, text))
        }
        None => {
            let set = guarded(endvertex_set_exhaustive(g, kind, start, guard), "--guard")?;
            let labels = ng.labels(set.iter());
            let value = json!({
                "command": "oracle",
                "kind": kind.name(),
                "start": start.map(|v| ng.label(v)),
                "endvertices": labels,
            });
            Ok(render(
                common.json,
                value,
                format!("end-vertices: {}\n", labels.join(",")),
            ))
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn reduce(
    cnf_path: &Path,
    kind: ReductionKind,
    out: Option<&Path>,
    roles_path: Option<&Path>,
    witness: bool,
    sat_guard: usize,
    json_out: bool,
) -> Result<String> {
    let text = std::fs::read_to_string(cnf_path)
        .with_context(|| format!("cannot read {}", cnf_path.display()))?;
    let cnf =
        CnfFormula::parse_dimacs(&text).with_context(|| format!("in {}", cnf_path.display()))?;
    let artifact = match kind {
        ReductionKind::Mns => build_mns_gadget(&cnf)?,
        ReductionKind::Mcs => build_mcs_gadget(&cnf)?,
    };
    let names = artifact.vertex_names();
    let graph_text = write_graph(&artifact.graph, Some(&names));
    if let Some(path) = out {
        write_file(path, &graph_text)?;
    }
    if let Some(path) = roles_path {
        write_file(path, &artifact.role_sidecar())?;
    }

    let mut satisfiable = None;
    let mut assignment = None;
    let mut order = None;
    if witness {
        let solution = guarded(sat_bruteforce(&cnf, sat_guard), "--sat-guard")?;
        satisfiable = Some(solution.is_some());
        if let Some(a) = solution {
            let w = match kind {
                ReductionKind::Mns => witness_order_mns(&cnf, &a)?,
                ReductionKind::Mcs => witness_order_mcs(&cnf, &a)?,
            };
            order = Some(
                w.as_slice()
                    .iter()
                    .map(|&v| names[v].clone())
                    .collect::<Vec<_>>(),
            );
            assignment = Some(a.values().to_vec());
        }
    }

    let search_name = match kind {
        ReductionKind::Mns => "mns",
        ReductionKind::Mcs => "mcs",
    };
    let target = names[artifact.target].clone();
    if json_out {
        let roles: Vec<Value> = artifact
            .roles
            .iter()
            .enumerate()
            .map(|(v, r)| json!({"id": v, "name": names[v], "role": r.to_string()}))
            .collect();
        let value = json!({
            "command": "reduce",
            "search": search_name,
            "variables": cnf.variable_count(),
            "clauses": cnf.clause_count(),
            "vertex_count": artifact.graph.vertex_count(),
            "edge_count": artifact.graph.edge_count(),
            "target": target,
            "graph_file": out.map(|p| p.display().to_string()),
            "roles_file": roles_path.map(|p| p.display().to_string()),
            "graph": if out.is_none() { Value::String(graph_text) } else { Value::Null },
            "roles": roles,
            "satisfiable": satisfiable,
            "assignment": assignment,
            "witness": order,
        });
        return Ok(render(true, value, String::new()));
    }

    // Without --out the graph goes to stdout and the rest become comments,
    // so the output is itself a readable graph file.
    let mut report = Vec::new();
    report.push(format!("search: {search_name}"));
    report.push(format!(
        "vertices: {}, edges: {}",
        artifact.graph.vertex_count(),
        artifact.graph.edge_count()
    ));
    report.push(format!("target: {target}"));
    if let Some(sat) = satisfiable {
        report.push(format!("satisfiable: {}", if sat { "yes" } else { "no" }));
    }
    if let Some(w) = &order {
        report.push(format!("witness: {}", w.join(",")));
    }
    let mut text = String::new();
    if out.is_none() {
        text.push_str(&graph_text);
        for line in report {
            text.push_str(&format!("# {line}\n"));
        }
    } else {
        for line in report {
            text.push_str(&line);
            text.push('\n');
        }
    }
    Ok(text)
}

fn recognize(common: &Common) -> Result<String> {
    let ng = read_graph(&common.file)?;
    let g = &ng.graph;
    let connected = g.is_connected();
    let mut lines = vec![format!(
        "connected: {}",
        if connected { "yes" } else { "no" }
    )];
    let mut doc = serde_json::Map::new();
    doc.insert("command".into(), json!("recognize"));
    doc.insert("vertex_count".into(), json!(g.vertex_count()));
    doc.insert("edge_count".into(), json!(g.edge_count()));
    doc.insert("connected".into(), json!(connected));
    let yes_no = |b: bool| if b { "yes" } else { "no" };

    if connected {
        let (chordal, line) = match recognize_chordal(g)? {
            Chordality::Chordal(peo) => (
                json!({"member": true, "peo": ng.labels(peo.as_slice().iter().copied())}),
                format!(
                    "chordal: yes (peo {})",
                    joined(&ng, peo.as_slice().iter().copied())
                ),
            ),
            Chordality::Hole(cycle) => (
                json!({"member": false, "hole": ng.labels(cycle.iter().copied())}),
                format!("chordal: no (hole {})", joined(&ng, cycle.iter().copied())),
            ),
        };
        doc.insert("chordal".into(), chordal);
        lines.push(line);
    }

    let (split, line) = match recognize_split(g) {
        Some(p) => (
            json!({
                "member": true,
                "clique": ng.labels(p.clique.iter()),
                "independent": ng.labels(p.independent.iter()),
            }),
            format!(
                "split: yes (clique {}; independent {})",
                joined(&ng, p.clique.iter()),
                joined(&ng, p.independent.iter())
            ),
        ),
        None => (json!({"member": false}), "split: no".to_string()),
    };
    doc.insert("split".into(), split);
    lines.push(line);

    if connected {
        let (interval, line) = match recognize_interval(g)? {
            Some(order) => {
                let cliques: Vec<Vec<String>> = order
                    .cliques
                    .iter()
                    .map(|c| ng.labels(c.iter().copied()))
                    .collect();
                let shown: Vec<String> = cliques
                    .iter()
                    .map(|c| format!("{{{}}}", c.join(",")))
                    .collect();
                (
                    json!({"member": true, "clique_order": cliques}),
                    format!("interval: yes (clique order {})", shown.join(" ")),
                )
            }
            None => (json!({"member": false}), "interval: no".to_string()),
        };
        doc.insert("interval".into(), interval);
        lines.push(line);

        let (unit, line) = match recognize_unit_interval(g)? {
            Some(order) => (
                json!({"member": true, "order": ng.labels(order.as_slice().iter().copied())}),
                format!(
                    "unit-interval: yes (order {})",
                    joined(&ng, order.as_slice().iter().copied())
                ),
            ),
            None => (json!({"member": false}), "unit-interval: no".to_string()),
        };
        doc.insert("unit_interval".into(), unit);
        lines.push(line);
    } else {
        lines.push("chordal, interval, unit-interval: need a connected graph".into());
    }

    let claw = find_claw(g);
    let net = find_net(g);
    doc.insert(
        "claw".into(),
        claw.map_or(
            Value::Null,
            |(c, leaves)| json!({"center": ng.label(c), "leaves": ng.labels(leaves)}),
        ),
    );
    doc.insert(
        "net".into(),
        net.map_or(
            Value::Null,
            |(tri, pend)| json!({"triangle": ng.labels(tri), "pendants": ng.labels(pend)}),
        ),
    );
    doc.insert(
        "claw_net_free".into(),
        json!(claw.is_none() && net.is_none()),
    );
    lines.push(match claw {
        Some((c, leaves)) => format!(
            "claw-free: no (center {}, leaves {})",
            ng.label(c),
            joined(&ng, leaves)
        ),
        None => "claw-free: yes".into(),
    });
    lines.push(match net {
        Some((tri, pend)) => format!(
            "net-free: no (triangle {}, pendants {})",
            joined(&ng, tri),
            joined(&ng, pend)
        ),
        None => "net-free: yes".into(),
    });

    match is_weakly_chordal_desk(g, DEFAULT_WEAK_CHORDAL_GUARD) {
        Ok(b) => {
            doc.insert("weakly_chordal".into(), json!(b));
            lines.push(format!("weakly-chordal: {}", yes_no(b)));
        }
        Err(Error::GuardExceeded { .. }) => {
            doc.insert("weakly_chordal".into(), Value::Null);
            lines.push(format!(
                "weakly-chordal: not checked (more than {DEFAULT_WEAK_CHORDAL_GUARD} vertices)"
            ));
        }
        Err(e) => bail!(e),
    }

    if connected {
        let cuts = g.cut_vertices()?;
        doc.insert("cut_vertices".into(), json!(ng.labels(cuts.iter())));
        lines.push(format!("cut vertices: {}", joined(&ng, cuts.iter())));
    }

    let mut text = lines.join("\n");
    text.push('\n');
    Ok(render(common.json, Value::Object(doc), text))
}
