//! Command-line interface: classification of single graphs, exhaustive
//! surveys over small labeled graphs, homology tables, degree complexes,
//! and the six-variable worked example.
//!
//! Machine-readable JSON goes to stdout, a human summary to stderr. Exit
//! codes: 0 success, 2 invalid input, 3 isolated vertices without
//! `--allow-isolated`, 4 route or survey disagreement.
//!
//! The survey checks compare classification verdicts against structural
//! graph matchers that are implemented here from degree sequences and
//! adjacency checks, deliberately independent of the classification code.

use crate::graph::{bipartite_edge_masks, from_edge_mask, Graph};
use crate::homology::reduced_homology;
use crate::ideals::{example_ideal_decision, MonomialIdeal};
use crate::power2::{
    classify, classify_unchecked, symbolic2_buchsbaum, symbolic2_cm, symbolic2_gcm,
    symbolic2_gcm_star_route, verify_main2_support, ClassificationReport, Power2Error, RouteSet,
};
use crate::ringprops::FieldSpec;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

/// Hard ceiling for survey sweeps unless `EDGEPOW_MAX_N` raises it.
const SURVEY_CAP: usize = 8;
/// Default ceiling for the checks that classify every labeled graph.
const DENSE_CHECK_CAP: usize = 6;

#[derive(Parser)]
#[command(
    name = "edgepow",
    version,
    about = "Classify second ordinary and symbolic powers of edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RoutesArg {
    /// Run every verification route and require agreement.
    All,
    /// Run only the localization criterion.
    Fast,
}

impl From<RoutesArg> for RouteSet {
    fn from(r: RoutesArg) -> RouteSet {
        match r {
            RoutesArg::All => RouteSet::All,
            RoutesArg::Fast => RouteSet::Fast,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    /// Symbolic CM on bipartite graphs happens exactly at edge unions.
    Ex1,
    /// Symbolic Buchsbaum adds only the four-vertex path.
    Ex2,
    /// Symbolic generalized CM adds the balanced complete bipartite graphs.
    Ex3,
    /// The three symbolic CM routes agree on every graph.
    Routes,
    /// Low-degree support of local cohomology on generalized CM instances.
    Main2,
    /// The star-union route to generalized CM agrees with localization.
    Cor16,
    /// Every check above, each at its own default cap.
    All,
}

impl CheckArg {
    fn name(self) -> &'static str {
        match self {
            CheckArg::Ex1 => "ex1",
            CheckArg::Ex2 => "ex2",
            CheckArg::Ex3 => "ex3",
            CheckArg::Routes => "routes",
            CheckArg::Main2 => "main2",
            CheckArg::Cor16 => "cor16",
            CheckArg::All => "all",
        }
    }

    fn default_cap(self) -> usize {
        match self {
            CheckArg::Routes | CheckArg::Main2 => DENSE_CHECK_CAP,
            _ => SURVEY_CAP,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify the second powers of the edge ideal of a graph file.
    Classify {
        /// Graph file: `n <count>` line then one `u v` edge per line.
        graph_file: PathBuf,
        /// Coefficient field: a prime, 0, or "all" for field independence.
        #[arg(long = "char", default_value = "all")]
        char_spec: String,
        #[arg(long, value_enum, default_value_t = RoutesArg::All)]
        routes: RoutesArg,
        /// Classify even when some vertex meets no edge.
        #[arg(long)]
        allow_isolated: bool,
    },
    /// Sweep all labeled graphs up to a size and cross-check classifications.
    Survey {
        /// Largest vertex count to include.
        #[arg(long)]
        max_n: usize,
        /// Restrict the corpus to bipartite graphs.
        #[arg(long)]
        bipartite: bool,
        #[arg(long, value_enum, default_value_t = CheckArg::All)]
        check: CheckArg,
        #[arg(long = "char", default_value = "all")]
        char_spec: String,
    },
    /// Reduced homology table of a simplicial complex file.
    Homology {
        /// Complex file: one facet per line, or `VOID` / `IRRELEVANT`.
        complex_file: PathBuf,
        #[arg(long = "char", default_value = "all")]
        char_spec: String,
    },
    /// Facets of the degree complex of a monomial ideal at a degree vector.
    DegreeComplex {
        /// Ideal file: JSON in component or generator form.
        ideal_file: PathBuf,
        /// Comma-separated integer degree vector, e.g. `1,1,0,0`.
        #[arg(long)]
        a: String,
    },
    /// Decide the worked six-variable example for one weight tuple.
    ExampleIdeal { a: u32, b: u32, c: u32, d: u32 },
}

enum CliError {
    Input(String),
    Isolated(usize),
    Disagreement(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Isolated(_) => 3,
            CliError::Disagreement(_) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Isolated(v) => format!(
                "vertex {v} is isolated; pass --allow-isolated to classify anyway"
            ),
            CliError::Disagreement(m) => m.clone(),
        }
    }
}

fn input_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_field(spec: &str) -> Result<FieldSpec, CliError> {
    FieldSpec::from_str(spec).map_err(input_err)
}

fn execute(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Classify {
            graph_file,
            char_spec,
            routes,
            allow_isolated,
        } => cmd_classify(&graph_file, &char_spec, routes.into(), allow_isolated),
        Command::Survey {
            max_n,
            bipartite,
            check,
            char_spec,
        } => cmd_survey(max_n, bipartite, check, &char_spec),
        Command::Homology {
            complex_file,
            char_spec,
        } => cmd_homology(&complex_file, &char_spec),
        Command::DegreeComplex { ideal_file, a } => cmd_degree_complex(&ideal_file, &a),
        Command::ExampleIdeal { a, b, c, d } => cmd_example_ideal([a, b, c, d]),
    }
}

fn cmd_classify(
    graph_file: &PathBuf,
    char_spec: &str,
    routes: RouteSet,
    allow_isolated: bool,
) -> Result<u8, CliError> {
    let field = parse_field(char_spec)?;
    let g = Graph::parse(&read_file(graph_file)?).map_err(input_err)?;
    let report = if allow_isolated {
        classify_unchecked(&g, field, routes)
    } else {
        classify(&g, field, routes)
    };
    let report = report.map_err(|e| match e {
        Power2Error::IsolatedVertex(v) => CliError::Isolated(v),
        Power2Error::RouteDisagreement { .. } => CliError::Disagreement(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    eprintln!("{}", summarize_report(&report));
    Ok(0)
}

fn summarize_report(r: &ClassificationReport) -> String {
    let mut line = format!(
        "n={} edges={} field={} alpha={}:",
        r.n,
        r.edges.len(),
        r.field,
        r.alpha
    );
    for (name, p) in [
        ("delta_cm", &r.delta_cm),
        ("unmixed", &r.unmixed),
        ("special_cm", &r.special_cm),
        ("symbolic2_cm", &r.symbolic2_cm),
        ("ordinary2_cm", &r.ordinary2_cm),
        ("symbolic2_buchsbaum", &r.symbolic2_buchsbaum),
        ("symbolic2_gcm", &r.symbolic2_gcm),
        ("ordinary2_gcm", &r.ordinary2_gcm),
    ] {
        let _ = write!(line, " {name}={}", p.holds);
    }
    line
}

/// Every vertex has degree exactly one: a perfect matching on its support.
pub fn is_disjoint_union_of_edges(g: &Graph) -> bool {
    g.vertices().iter().all(|&v| g.degree(v) == 1)
}

/// Isomorphic to the path on four vertices: degree sequence 1,1,2,2 and a
/// walk from one endpoint traverses all three edges.
pub fn is_path4(g: &Graph) -> bool {
    if g.vertex_count() != 4 || g.edges().len() != 3 {
        return false;
    }
    let mut degrees: Vec<usize> = g.vertices().iter().map(|&v| g.degree(v)).collect();
    degrees.sort_unstable();
    if degrees != [1, 1, 2, 2] {
        return false;
    }
    let &start = g
        .vertices()
        .iter()
        .find(|&&v| g.degree(v) == 1)
        .expect("degree sequence has a 1");
    let mut prev = start;
    let mut current = g.neighbors(start)[0];
    let mut steps = 1;
    while g.degree(current) == 2 && steps < 4 {
        let &next = g
            .neighbors(current)
            .iter()
            .find(|&&w| w != prev)
            .expect("degree two vertex has another neighbor");
        prev = current;
        current = next;
        steps += 1;
    }
    steps == 3 && g.degree(current) == 1
}

/// Complete bipartite with two equal sides of size at least two: the unique
/// two-coloring balances, and every cross pair is an edge.
pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 4 || !n.is_multiple_of(2) {
        return false;
    }
    let m = n / 2;
    let Some((x, y)) = g.bipartition() else {
        return false;
    };
    x.len() == m
        && y.len() == m
        && g.edges().len() == m * m
        && x.iter().all(|&u| y.iter().all(|&v| g.has_edge(u, v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDigest {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub detail: String,
}

/// Outcome of one survey check over one corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyResult {
    pub check: String,
    pub max_n: usize,
    pub bipartite: bool,
    pub field: String,
    pub graphs_seen: u64,
    /// Graphs on which the surveyed property held.
    pub positives: Vec<GraphDigest>,
    /// Empty on a correct build.
    pub discrepancies: Vec<Discrepancy>,
}

fn env_cap() -> Option<usize> {
    // Corpus generation enumerates edge masks with a 2^(n(n-1)/2)-bit
    // dedupe table, so the override cannot push past 8 vertices.
    std::env::var("EDGEPOW_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .map(|cap: usize| cap.min(SURVEY_CAP))
}

fn cmd_survey(
    max_n: usize,
    bipartite: bool,
    check: CheckArg,
    char_spec: &str,
) -> Result<u8, CliError> {
    let field = parse_field(char_spec)?;
    let cap_for = |c: CheckArg| env_cap().unwrap_or_else(|| c.default_cap());
    let mut results = Vec::new();
    let hint = |cap: usize| {
        if cap < SURVEY_CAP {
            " (set EDGEPOW_MAX_N to raise it)"
        } else {
            ""
        }
    };
    if check == CheckArg::All {
        let overall = env_cap().unwrap_or(SURVEY_CAP);
        if max_n > overall {
            return Err(CliError::Input(format!(
                "--max-n {max_n} exceeds the survey cap {overall}{}",
                hint(overall)
            )));
        }
        // Each check runs up to its own cap; the dense per-graph checks
        // stay at their smaller default instead of failing the whole run.
        for c in [
            CheckArg::Ex1,
            CheckArg::Ex2,
            CheckArg::Ex3,
            CheckArg::Routes,
            CheckArg::Main2,
            CheckArg::Cor16,
        ] {
            results.push(run_survey_check(c, max_n.min(cap_for(c)), bipartite, field));
        }
    } else {
        let cap = cap_for(check);
        if max_n > cap {
            return Err(CliError::Input(format!(
                "--max-n {max_n} exceeds the cap {cap} for check {}{}",
                check.name(),
                hint(cap)
            )));
        }
        results.push(run_survey_check(check, max_n, bipartite, field));
    }
    let disagreements: usize = results.iter().map(|r| r.discrepancies.len()).sum();
    println!("{}", serde_json::to_string(&results).expect("survey serializes"));
    for r in &results {
        eprintln!(
            "check {}: {} graphs, {} positives, {} discrepancies (max_n={}, bipartite={}, field={})",
            r.check,
            r.graphs_seen,
            r.positives.len(),
            r.discrepancies.len(),
            r.max_n,
            r.bipartite,
            r.field
        );
    }
    Ok(if disagreements == 0 { 0 } else { 4 })
}

/// Per-graph verdicts for one check: property value, whether it counts as a
/// positive, and an optional discrepancy description.
fn check_one(check: CheckArg, g: &Graph, field: FieldSpec) -> (bool, Option<String>) {
    match check {
        CheckArg::Ex1 => {
            let property = symbolic2_cm(g, field, RouteSet::Fast)
                .expect("fast route cannot disagree");
            let matcher = is_disjoint_union_of_edges(g);
            let detail = (property != matcher).then(|| {
                format!("symbolic2_cm={property} but disjoint-edge-union matcher says {matcher}")
            });
            (property, detail)
        }
        CheckArg::Ex2 => {
            let property = symbolic2_buchsbaum(g, field);
            let matcher = is_path4(g) || is_disjoint_union_of_edges(g);
            let detail = (property != matcher).then(|| {
                format!("symbolic2_buchsbaum={property} but structural matcher says {matcher}")
            });
            (property, detail)
        }
        CheckArg::Ex3 => {
            let property = symbolic2_gcm(g, field);
            let matcher = is_balanced_complete_bipartite(g)
                || is_path4(g)
                || is_disjoint_union_of_edges(g);
            let detail = (property != matcher).then(|| {
                format!("symbolic2_gcm={property} but structural matcher says {matcher}")
            });
            (property, detail)
        }
        CheckArg::Routes => match symbolic2_cm(g, field, RouteSet::All) {
            Ok(value) => (value, None),
            Err(e) => (false, Some(e.to_string())),
        },
        CheckArg::Main2 => {
            let fields = match field {
                FieldSpec::AllFields => vec![FieldSpec::Char(2), FieldSpec::Char0],
                concrete => vec![concrete],
            };
            let mut detail = None;
            let mut positive = false;
            for f in fields {
                if !symbolic2_gcm(g, f) {
                    continue;
                }
                positive = true;
                match verify_main2_support(g, f) {
                    Ok(report) if report.ok => {}
                    Ok(report) => {
                        detail = Some(format!(
                            "local cohomology supported outside the allowed degrees over {f}: {:?}",
                            report.violation
                        ));
                    }
                    Err(e) => detail = Some(e.to_string()),
                }
            }
            (positive, detail)
        }
        CheckArg::Cor16 => {
            let local = symbolic2_gcm(g, field);
            let star = symbolic2_gcm_star_route(g, field);
            let detail = (local != star).then(|| {
                format!("symbolic2_gcm: localization says {local}, star-union route says {star}")
            });
            (local, detail)
        }
        CheckArg::All => unreachable!("expanded before dispatch"),
    }
}

fn run_survey_check(check: CheckArg, max_n: usize, bipartite: bool, field: FieldSpec) -> SurveyResult {
    // The shape checks are statements about bipartite graphs; their corpus
    // is bipartite regardless of the flag. Only cor16 admits isolated
    // vertices, since its equivalence holds for arbitrary graphs.
    let force_bipartite =
        bipartite || matches!(check, CheckArg::Ex1 | CheckArg::Ex2 | CheckArg::Ex3);
    let keep_isolated = matches!(check, CheckArg::Cor16);
    let mut graphs_seen = 0u64;
    let mut positives = Vec::new();
    let mut discrepancies = Vec::new();
    for n in 0..=max_n {
        let masks: Vec<u64> = if force_bipartite {
            bipartite_edge_masks(n)
        } else {
            (0..1u64 << (n * n.saturating_sub(1) / 2)).collect()
        };
        let verdicts: Vec<(u64, bool, Option<String>)> = masks
            .par_iter()
            .filter_map(|&mask| {
                let g = from_edge_mask(n, mask);
                if !keep_isolated && g.has_isolated_vertex() {
                    return None;
                }
                let (positive, detail) = check_one(check, &g, field);
                Some((mask, positive, detail))
            })
            .collect();
        graphs_seen += verdicts.len() as u64;
        for (mask, positive, detail) in verdicts {
            let g = from_edge_mask(n, mask);
            if positive {
                positives.push(GraphDigest {
                    n,
                    edges: g.edges().to_vec(),
                });
            }
            if let Some(detail) = detail {
                discrepancies.push(Discrepancy {
                    n,
                    edges: g.edges().to_vec(),
                    detail,
                });
            }
        }
    }
    SurveyResult {
        check: check.name().into(),
        max_n,
        bipartite: force_bipartite,
        field: field.to_string(),
        graphs_seen,
        positives,
        discrepancies,
    }
}

#[derive(Debug, Clone, Serialize)]
struct HomologyRow {
    j: i64,
    free_rank: usize,
    torsion: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
struct HomologyTable {
    field: String,
    rows: Vec<HomologyRow>,
}

fn cmd_homology(complex_file: &PathBuf, char_spec: &str) -> Result<u8, CliError> {
    use crate::complex::SimplicialComplex;
    let field = parse_field(char_spec)?;
    let c = SimplicialComplex::parse(&read_file(complex_file)?).map_err(input_err)?;
    let profile = reduced_homology(&c);
    let rows: Vec<HomologyRow> = if c.is_void() {
        Vec::new()
    } else {
        (-1..=c.dim())
            .map(|j| {
                let group = profile.group(j);
                HomologyRow {
                    j,
                    free_rank: group.free_rank,
                    torsion: group.torsion.clone(),
                    betti: match field {
                        FieldSpec::AllFields => None,
                        concrete => Some(profile.betti(j, concrete)),
                    },
                }
            })
            .collect()
    };
    let table = HomologyTable {
        field: field.to_string(),
        rows,
    };
    println!("{}", serde_json::to_string(&table).expect("table serializes"));
    for row in &table.rows {
        eprintln!(
            "H_{}: free rank {}, torsion {:?}{}",
            row.j,
            row.free_rank,
            row.torsion,
            row.betti
                .map(|b| format!(", betti over {} = {b}", table.field))
                .unwrap_or_default()
        );
    }
    Ok(0)
}

#[derive(Debug, Clone, Serialize)]
struct DegreeComplexOutput {
    a: Vec<i64>,
    facets: Vec<Vec<usize>>,
    void: bool,
    irrelevant: bool,
}

fn cmd_degree_complex(ideal_file: &PathBuf, a: &str) -> Result<u8, CliError> {
    let ideal = MonomialIdeal::from_json(&read_file(ideal_file)?).map_err(input_err)?;
    let degrees: Vec<i64> = a
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Input(format!("invalid degree vector {a:?}: {e}")))?;
    if degrees.len() != ideal.n() {
        return Err(CliError::Input(format!(
            "degree vector has {} entries but the ideal lives in {} variables",
            degrees.len(),
            ideal.n()
        )));
    }
    let dc = ideal.degree_complex(&degrees);
    let out = DegreeComplexOutput {
        a: degrees,
        facets: dc.facets().to_vec(),
        void: dc.is_void(),
        irrelevant: dc.is_irrelevant(),
    };
    println!("{}", serde_json::to_string(&out).expect("facets serialize"));
    eprintln!("degree complex: {dc}");
    Ok(0)
}

fn cmd_example_ideal(weights: [u32; 4]) -> Result<u8, CliError> {
    let decision = example_ideal_decision(weights);
    println!("{}", serde_json::to_string(&decision).expect("decision serializes"));
    eprintln!(
        "weights {:?}: CM={} Buchsbaum={} gCM={} ({} nonempty regions{})",
        decision.weights,
        decision.cm,
        decision.buchsbaum,
        decision.gcm_by_systems,
        decision.nonempty_regions.len(),
        if decision.feasible_systems.is_empty() {
            String::new()
        } else {
            format!("; systems {}", decision.feasible_systems.join(", "))
        }
    );
    Ok(0)
}
