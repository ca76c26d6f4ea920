//! Acceptance sweep for the whole engine: exhaustive classification of small
//! corpora against independent structural matchers, cross-route agreement,
//! the worked examples, local cohomology support, and homology spot checks.
//! One verdict line per criterion is written straight to stdout so it stays
//! visible under the harness capture; the test fails if any criterion does.

use edgepow::cli::{is_balanced_complete_bipartite, is_disjoint_union_of_edges, is_path4};
use edgepow::complex::{independence_complex, SimplicialComplex};
use edgepow::graph::{bipartite_edge_masks, from_edge_mask, Graph};
use edgepow::homology::reduced_homology;
use edgepow::ideals::{example_ideal_decision, ordinary_equals_symbolic_square, symbolic_power};
use edgepow::power2::{
    symbolic2_buchsbaum, symbolic2_cm, symbolic2_gcm, symbolic2_gcm_star_route, takayama_table,
    verify_main2_support, RouteSet,
};
use edgepow::ringprops::FieldSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Write as _;
use std::time::Instant;

const ALL: FieldSpec = FieldSpec::AllFields;

struct Scorecard {
    failed: Vec<usize>,
}

impl Scorecard {
    fn new() -> Scorecard {
        Scorecard { failed: Vec::new() }
    }

    /// Prints one verdict line, bypassing the capture so the line shows up
    /// in plain `cargo test` output.
    fn record(&mut self, id: usize, label: &str, pass: bool, detail: &str, started: Instant) {
        let status = if pass { "pass" } else { "FAIL" };
        let line = format!(
            "criterion {id:2} [{status}] {label}: {detail} ({:.1}s)\n",
            started.elapsed().as_secs_f64()
        );
        let _ = std::io::stdout().write_all(line.as_bytes());
        if !pass {
            self.failed.push(id);
        }
    }
}

fn describe(g: &Graph) -> String {
    format!("n={} edges={:?}", g.vertex_count(), g.edges())
}

/// Labeled graphs on `1..=n` as edge masks, every graph once.
fn all_masks(n: usize) -> std::ops::Range<u64> {
    0..1u64 << (n * n.saturating_sub(1) / 2)
}

fn mismatch_note(kind: &str, count: usize, examples: &[String]) -> Option<String> {
    (count > 0).then(|| format!("{kind}: {count} mismatches, e.g. {:?}", examples))
}

/// Criteria 1-3 share one pass over every labeled bipartite graph without
/// isolated vertices on at most 8 vertices. Each symbolic-square property
/// must coincide with its structural matcher on every graph.
fn bipartite_classifications(card: &mut Scorecard) {
    let started = Instant::now();
    let mut graphs = 0u64;
    let mut positives = [0u64; 3];
    let mut bad: [Vec<String>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut bad_counts = [0usize; 3];
    for n in 0..=8 {
        for mask in bipartite_edge_masks(n) {
            let g = from_edge_mask(n, mask);
            if g.has_isolated_vertex() {
                continue;
            }
            graphs += 1;
            let matching = is_disjoint_union_of_edges(&g);
            let path = is_path4(&g);
            let balanced = is_balanced_complete_bipartite(&g);
            let verdicts = [
                (
                    symbolic2_cm(&g, ALL, RouteSet::Fast).expect("single route cannot disagree"),
                    matching,
                ),
                (symbolic2_buchsbaum(&g, ALL), path || matching),
                (symbolic2_gcm(&g, ALL), balanced || path || matching),
            ];
            for (k, &(computed, expected)) in verdicts.iter().enumerate() {
                if computed {
                    positives[k] += 1;
                }
                if computed != expected {
                    bad_counts[k] += 1;
                    if bad[k].len() < 3 {
                        bad[k].push(format!("{} computed={computed}", describe(&g)));
                    }
                }
            }
        }
    }
    let labels = [
        "bipartite symbolic-square CM is exactly the edge unions (n <= 8)",
        "bipartite symbolic-square Buchsbaum adds exactly the 4-path (n <= 8)",
        "bipartite symbolic-square gCM adds exactly balanced complete bipartite (n <= 8)",
    ];
    for k in 0..3 {
        let detail = match mismatch_note("matcher", bad_counts[k], &bad[k]) {
            Some(note) => format!("{graphs} graphs, {note}"),
            None => format!("{graphs} graphs, {} positives, 0 mismatches", positives[k]),
        };
        card.record(k + 1, labels[k], bad_counts[k] == 0, &detail, started);
    }
}

/// Criterion 4: the localization, star-union, and near-cover routes to
/// symbolic-square CM agree on every labeled graph without isolated
/// vertices on at most 6 vertices, over integral and characteristic-2
/// coefficients.
fn route_agreement(card: &mut Scorecard) {
    let started = Instant::now();
    let mut graphs = 0u64;
    let mut disagreements = 0usize;
    let mut examples: Vec<String> = Vec::new();
    for n in 0..=6 {
        for mask in all_masks(n) {
            let g = from_edge_mask(n, mask);
            if g.has_isolated_vertex() {
                continue;
            }
            graphs += 1;
            for field in [ALL, FieldSpec::Char(2)] {
                if let Err(e) = symbolic2_cm(&g, field, RouteSet::All) {
                    disagreements += 1;
                    if examples.len() < 3 {
                        examples.push(format!("{}: {e}", describe(&g)));
                    }
                }
            }
        }
    }
    let detail = match mismatch_note("route", disagreements, &examples) {
        Some(note) => format!("{graphs} graphs x 2 fields, {note}"),
        None => format!("{graphs} graphs x 2 fields, 0 disagreements"),
    };
    card.record(
        4,
        "symbolic-square CM routes agree pairwise (n <= 6)",
        disagreements == 0,
        &detail,
        started,
    );
}

/// Criterion 5: for the 4-cycle, the graded local cohomology table of the
/// symbolic square has one-dimensional degree-0 and degree-(e1+e2) pieces in
/// cohomological degree 1 over both characteristics, and the classification
/// places the graph strictly between Buchsbaum and generalized CM.
fn four_cycle_cohomology(card: &mut Scorecard) {
    let started = Instant::now();
    let g = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let ideal = symbolic_power(4, &independence_complex(&g), 2);
    let mut problems: Vec<String> = Vec::new();
    for field in [FieldSpec::Char(2), FieldSpec::Char0] {
        let table = takayama_table(&ideal, &[vec![0, 0, 0, 0], vec![1, 1, 0, 0]], 1..=1, field)
            .expect("concrete field");
        for entry in &table.entries {
            if entry.dim != 1 {
                problems.push(format!(
                    "dim H^1 at {:?} over {field} = {}, expected 1",
                    entry.a, entry.dim
                ));
            }
        }
    }
    if !symbolic2_gcm(&g, ALL) {
        problems.push("symbolic2_gcm = false, expected true".into());
    }
    if symbolic2_buchsbaum(&g, ALL) {
        problems.push("symbolic2_buchsbaum = true, expected false".into());
    }
    let pass = problems.is_empty();
    let detail = if pass {
        "dim H^1 = 1 at degrees 0 and e1+e2 over both fields; gCM without Buchsbaum".into()
    } else {
        problems.join("; ")
    };
    card.record(5, "4-cycle local cohomology and classification", pass, &detail, started);
}

/// Criterion 6: over every nonzero weight tuple in {0..3}^4, the closed-form
/// system route and the region-enumeration route to generalized CM agree,
/// and the Fourier-Motzkin cross-check never dissents.
fn worked_ideal_routes(card: &mut Scorecard) {
    let started = Instant::now();
    let mut tuples = 0u64;
    let mut problems: Vec<String> = Vec::new();
    for a in 0..4u32 {
        for b in 0..4u32 {
            for c in 0..4u32 {
                for d in 0..4u32 {
                    if [a, b, c, d] == [0, 0, 0, 0] {
                        continue;
                    }
                    tuples += 1;
                    let decision = example_ideal_decision([a, b, c, d]);
                    if decision.gcm_by_systems != decision.gcm_by_enumeration {
                        problems.push(format!(
                            "{:?}: systems={} enumeration={}",
                            [a, b, c, d],
                            decision.gcm_by_systems,
                            decision.gcm_by_enumeration
                        ));
                    }
                    if !decision.fm_agrees {
                        problems.push(format!("{:?}: Fourier-Motzkin dissents", [a, b, c, d]));
                    }
                }
            }
        }
    }
    let pass = problems.is_empty();
    let detail = if pass {
        format!("{tuples} weight tuples, routes agree, elimination cross-check clean")
    } else {
        format!("{:?}", &problems[..problems.len().min(3)])
    };
    card.record(6, "weighted six-variable ideal: systems vs enumeration", pass, &detail, started);
}

/// Criterion 7: over every labeled graph without isolated vertices on at
/// most 7 vertices, the ordinary square equals the symbolic square exactly
/// when the graph has no triangle.
fn ordinary_vs_symbolic(card: &mut Scorecard) {
    let started = Instant::now();
    let mut graphs = 0u64;
    let mut mismatches = 0usize;
    let mut examples: Vec<String> = Vec::new();
    for n in 0..=7 {
        for mask in all_masks(n) {
            let g = from_edge_mask(n, mask);
            if g.has_isolated_vertex() {
                continue;
            }
            graphs += 1;
            let equal = ordinary_equals_symbolic_square(&g).expect("small exponent box");
            if equal != !g.has_triangle() {
                mismatches += 1;
                if examples.len() < 3 {
                    examples.push(format!("{} equal={equal}", describe(&g)));
                }
            }
        }
    }
    let detail = match mismatch_note("equality", mismatches, &examples) {
        Some(note) => format!("{graphs} graphs, {note}"),
        None => format!("{graphs} graphs, equality iff triangle-free throughout"),
    };
    card.record(
        7,
        "ordinary square equals symbolic square iff triangle-free (n <= 7)",
        mismatches == 0,
        &detail,
        started,
    );
}

/// Criterion 8: every graph on at most 6 vertices whose symbolic square is
/// generalized CM has its low local cohomology supported inside the allowed
/// degrees, over characteristic 2 and characteristic 0.
fn gcm_support(card: &mut Scorecard) {
    let started = Instant::now();
    let mut instances = 0u64;
    let mut violations = 0usize;
    let mut examples: Vec<String> = Vec::new();
    for n in 0..=6 {
        for mask in all_masks(n) {
            let g = from_edge_mask(n, mask);
            for field in [FieldSpec::Char(2), FieldSpec::Char0] {
                if !symbolic2_gcm(&g, field) {
                    continue;
                }
                instances += 1;
                match verify_main2_support(&g, field) {
                    Ok(report) if report.ok => {}
                    Ok(report) => {
                        violations += 1;
                        if examples.len() < 3 {
                            examples.push(format!(
                                "{} over {field}: support at {:?}",
                                describe(&g),
                                report.violation
                            ));
                        }
                    }
                    Err(e) => {
                        violations += 1;
                        if examples.len() < 3 {
                            examples.push(format!("{} over {field}: {e}", describe(&g)));
                        }
                    }
                }
            }
        }
    }
    let detail = match mismatch_note("support", violations, &examples) {
        Some(note) => format!("{instances} gCM instances, {note}"),
        None => format!("{instances} gCM instances x field, all supported in allowed degrees"),
    };
    card.record(
        8,
        "gCM symbolic squares have low-degree cohomology support (n <= 6)",
        violations == 0,
        &detail,
        started,
    );
}

/// Criterion 9: over every graph on at most 6 vertices, isolated vertices
/// included, generalized CM of the symbolic square is equivalent to the
/// Buchsbaum conditions on the independence complex and all its vertex-set
/// star unions.
fn gcm_star_union_equivalence(card: &mut Scorecard) {
    let started = Instant::now();
    let mut graphs = 0u64;
    let mut disagreements = 0usize;
    let mut examples: Vec<String> = Vec::new();
    for n in 0..=6 {
        for mask in all_masks(n) {
            let g = from_edge_mask(n, mask);
            graphs += 1;
            let local = symbolic2_gcm(&g, ALL);
            let star = symbolic2_gcm_star_route(&g, ALL);
            if local != star {
                disagreements += 1;
                if examples.len() < 3 {
                    examples.push(format!("{} local={local} star={star}", describe(&g)));
                }
            }
        }
    }
    let detail = match mismatch_note("equivalence", disagreements, &examples) {
        Some(note) => format!("{graphs} graphs, {note}"),
        None => format!("{graphs} graphs, localization route = star-union route"),
    };
    card.record(
        9,
        "gCM equals Buchsbaum star-union conditions (n <= 6, isolated included)",
        disagreements == 0,
        &detail,
        started,
    );
}

fn hollow_triangle_is_a_circle() -> Result<(), String> {
    let c = SimplicialComplex::from_facets([vec![1, 2], vec![2, 3], vec![1, 3]]);
    let profile = reduced_homology(&c);
    let h1 = profile.group(1);
    if h1.free_rank != 1 || !h1.torsion.is_empty() {
        return Err(format!("hollow triangle H_1 rank {} torsion {:?}", h1.free_rank, h1.torsion));
    }
    let h0 = profile.group(0);
    if h0.free_rank != 0 || !h0.torsion.is_empty() {
        return Err("hollow triangle not connected".into());
    }
    Ok(())
}

fn projective_plane_betti_depends_on_char() -> Result<(), String> {
    let c = SimplicialComplex::from_facets([
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 5],
        vec![1, 4, 6],
        vec![1, 5, 6],
        vec![2, 3, 6],
        vec![2, 4, 5],
        vec![2, 5, 6],
        vec![3, 4, 5],
        vec![3, 4, 6],
    ]);
    let profile = reduced_homology(&c);
    let b2 = profile.betti(1, FieldSpec::Char(2));
    let b0 = profile.betti(1, FieldSpec::Char0);
    if b2 != 1 || b0 != 0 {
        return Err(format!("projective plane betti(1): char 2 gives {b2}, char 0 gives {b0}"));
    }
    Ok(())
}

/// Cone over `c` with a fresh apex: every facet gains the apex vertex.
fn cone(c: &SimplicialComplex) -> SimplicialComplex {
    let apex = c.vertices().last().copied().unwrap_or(0) + 1;
    SimplicialComplex::from_facets(c.facets().iter().map(|f| {
        let mut g = f.clone();
        g.push(apex);
        g
    }))
}

fn is_acyclic(c: &SimplicialComplex) -> bool {
    if c.is_void() {
        return false;
    }
    let profile = reduced_homology(c);
    (-1..=c.dim()).all(|j| {
        let g = profile.group(j);
        g.free_rank == 0 && g.torsion.is_empty()
    })
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n: usize = rng.gen_range(0..=10);
    let facet_count: usize = rng.gen_range(0..=6);
    let facets: Vec<Vec<usize>> = (0..facet_count)
        .map(|_| (1..=n).filter(|_| rng.gen_bool(0.4)).collect())
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// Reduced Euler characteristic by face counting, empty face included.
fn reduced_euler_by_faces(c: &SimplicialComplex) -> i64 {
    if c.is_void() {
        return 0;
    }
    let vertices = c.vertices();
    let mut chi = 0i64;
    for mask in 0..1u32 << vertices.len() {
        let face: Vec<usize> = vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if c.has_face(&face) {
            // dim = |face| - 1, so even-sized faces contribute -1.
            chi += if face.len().is_multiple_of(2) { -1 } else { 1 };
        }
    }
    chi
}

fn reduced_euler_by_homology(c: &SimplicialComplex) -> i64 {
    if c.is_void() {
        return 0;
    }
    let profile = reduced_homology(c);
    (-1..=c.dim())
        .map(|j| {
            let rank = profile.group(j).free_rank as i64;
            if j % 2 == 0 {
                rank
            } else {
                -rank
            }
        })
        .sum()
}

/// Criterion 10: fixed homology spot checks plus randomized cone and Euler
/// characteristic identities.
fn homology_spot_checks(card: &mut Scorecard) {
    let started = Instant::now();
    let mut problems: Vec<String> = Vec::new();
    if let Err(e) = hollow_triangle_is_a_circle() {
        problems.push(e);
    }
    if let Err(e) = projective_plane_betti_depends_on_char() {
        problems.push(e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ED6E);
    let mut cones_checked = 0u32;
    let mut euler_checked = 0u32;
    for index in 0..1000 {
        let c = random_complex(&mut rng);
        let by_faces = reduced_euler_by_faces(&c);
        let by_homology = reduced_euler_by_homology(&c);
        euler_checked += 1;
        if by_faces != by_homology && problems.len() < 5 {
            problems.push(format!(
                "complex #{index}: Euler by faces {by_faces} != by homology {by_homology}"
            ));
        }
        // Coning kills all reduced homology; check a slice of the stream.
        if index % 10 == 0 && !c.is_void() {
            cones_checked += 1;
            if !is_acyclic(&cone(&c)) && problems.len() < 5 {
                problems.push(format!("cone over complex #{index} is not acyclic"));
            }
        }
    }
    let pass = problems.is_empty();
    let detail = if pass {
        format!(
            "surface checks ok; {euler_checked} Euler identities, {cones_checked} acyclic cones"
        )
    } else {
        problems.join("; ")
    };
    card.record(10, "homology engine spot checks", pass, &detail, started);
}

#[test]
fn acceptance_criteria() {
    let mut card = Scorecard::new();
    bipartite_classifications(&mut card);
    route_agreement(&mut card);
    four_cycle_cohomology(&mut card);
    worked_ideal_routes(&mut card);
    ordinary_vs_symbolic(&mut card);
    gcm_support(&mut card);
    gcm_star_union_equivalence(&mut card);
    homology_spot_checks(&mut card);
    assert!(
        card.failed.is_empty(),
        "failed acceptance criteria: {:?}",
        card.failed
    );
}
