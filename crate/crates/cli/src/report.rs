//! The `analyze` report.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bei_core::clique::maximal_cliques;
use bei_core::decision::graph_cone_apexes;
use bei_core::{cm_verdict_with, cut_sets, free_vertices, Clutter, Result, Status, Step, Verdict, VerdictOptions};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Wraps a payload with the schema version as its first field.
#[derive(Serialize)]
pub struct Versioned<'a, T: Serialize> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: &'a T,
}

pub fn versioned<T: Serialize>(body: &T) -> String {
    let v = Versioned { schema: SCHEMA, body };
    format!("{}\n", serde_json::to_string(&v).expect("reports serialize"))
}

#[derive(Serialize)]
pub struct ClutterEcho {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct CutSetRow {
    pub set: Vec<String>,
    pub components: usize,
    pub height: usize,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct CutSetListing {
    pub total: usize,
    pub shown: Vec<CutSetRow>,
    pub truncated: bool,
}

#[derive(Serialize)]
pub struct ConeReport {
    pub apex: String,
    /// The clutter equals `cone(apex, base)` edge for edge.
    pub literal: bool,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub clutter: ClutterEcho,
    pub generator_count: usize,
    pub graph_edges: Vec<[String; 2]>,
    pub facets: Vec<Vec<String>>,
    pub free_vertices: Vec<String>,
    pub cut_points: Vec<String>,
    pub cut_sets: CutSetListing,
    pub minimal_prime_count: usize,
    /// Height of a minimal prime to the number of minimal primes with it.
    pub heights: BTreeMap<usize, usize>,
    pub dim: usize,
    pub unmixed: bool,
    pub cones: Vec<ConeReport>,
    pub verdict: Verdict,
}

pub fn analyze(c: &Clutter, opts: &VerdictOptions, display_cap: usize) -> Result<AnalysisReport> {
    let limits = &opts.limits;
    let records = cut_sets(c, limits)?;
    let mut heights = BTreeMap::new();
    for r in &records {
        *heights.entry(r.height).or_insert(0) += 1;
    }
    let g = c.associated_graph();
    let verdict = cm_verdict_with(c, opts)?;
    Ok(AnalysisReport {
        clutter: ClutterEcho {
            vertices: c.labels().to_vec(),
            edges: c.edges().iter().map(|e| c.labels_of(e)).collect(),
        },
        generator_count: g.edge_count(),
        graph_edges: g
            .edges()
            .into_iter()
            .map(|(i, j)| [c.label(i).to_string(), c.label(j).to_string()])
            .collect(),
        facets: maximal_cliques(c, limits)?.iter().map(|f| c.labels_of(&f.members)).collect(),
        free_vertices: c.labels_of(&free_vertices(c, limits)?),
        cut_points: c.labels_of(&c.cut_points()),
        cut_sets: CutSetListing {
            total: records.len(),
            truncated: records.len() > display_cap,
            shown: records
                .iter()
                .take(display_cap)
                .map(|r| CutSetRow {
                    set: c.labels_of(&r.set),
                    components: r.components,
                    height: r.height,
                    dim: r.dim,
                })
                .collect(),
        },
        minimal_prime_count: records.len(),
        heights,
        dim: verdict.dim,
        unmixed: verdict.unmixed,
        cones: graph_cone_apexes(c)
            .into_iter()
            .map(|a| ConeReport {
                apex: c.label(a.apex).to_string(),
                literal: a.literal,
            })
            .collect(),
        verdict,
    })
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::CohenMacaulay => "Cohen-Macaulay",
        Status::NotCohenMacaulay => "not Cohen-Macaulay",
        Status::Unknown => "unknown",
    }
}

pub fn render_verdict(v: &Verdict, out: &mut String) {
    let depth = v.depth.map_or("unknown".to_string(), |d| d.to_string());
    let _ = writeln!(out, "status: {}", status_word(v.status));
    let _ = writeln!(out, "unmixed: {}", v.unmixed);
    let _ = writeln!(out, "dim: {}", v.dim);
    let _ = writeln!(out, "depth: {depth}");
    let _ = writeln!(out, "certificate:");
    render_steps(&v.certificate, 1, out);
}

fn render_steps(steps: &[Step], indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for s in steps {
        let rule = serde_json::to_value(s.rule).unwrap();
        let _ = writeln!(
            out,
            "{pad}{} -> {} ({}) [{}]",
            rule.as_str().unwrap(),
            status_word(s.outcome),
            s.detail,
            s.paper_result
        );
        for ch in &s.children {
            let _ = writeln!(out, "{pad}  part {}: {}", braces(&ch.vertices), status_word(ch.status));
            render_steps(&ch.certificate, indent + 2, out);
        }
    }
}

pub fn render(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let edges: Vec<String> = r.clutter.edges.iter().map(|e| braces(e)).collect();
    let _ = writeln!(out, "vertices: {}", braces(&r.clutter.vertices));
    let _ = writeln!(out, "edges: {}", edges.join(" "));
    if r.generator_count == 0 {
        let _ = writeln!(out, "generators: 0 (J = 0)");
    } else {
        let _ = writeln!(out, "generators: {}", r.generator_count);
    }
    let pairs: Vec<String> = r.graph_edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
    let _ = writeln!(out, "graph edges: {}", pairs.join(" "));
    let facets: Vec<String> = r.facets.iter().map(|f| braces(f)).collect();
    let _ = writeln!(out, "maximal cliques: {}", facets.join(" "));
    let _ = writeln!(out, "free vertices: {}", braces(&r.free_vertices));
    let _ = writeln!(out, "cut points: {}", braces(&r.cut_points));
    let cones: Vec<String> = r
        .cones
        .iter()
        .map(|k| format!("{} ({})", k.apex, if k.literal { "literal cone" } else { "graph-level only" }))
        .collect();
    let _ = writeln!(out, "cone apexes: {}", if cones.is_empty() { "none".into() } else { cones.join(", ") });
    let _ = writeln!(
        out,
        "cut sets: {}{}",
        r.cut_sets.total,
        if r.cut_sets.truncated { format!(" (showing {})", r.cut_sets.shown.len()) } else { String::new() }
    );
    for row in &r.cut_sets.shown {
        let _ = writeln!(
            out,
            "  {} c={} height={} dim={}",
            braces(&row.set),
            row.components,
            row.height,
            row.dim
        );
    }
    let _ = writeln!(out, "minimal primes: {}", r.minimal_prime_count);
    let hist: Vec<String> = r.heights.iter().map(|(h, k)| format!("{h}:{k}")).collect();
    let _ = writeln!(out, "heights: {}", hist.join(" "));
    render_verdict(&r.verdict, &mut out);
    out
}
