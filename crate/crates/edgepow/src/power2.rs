//! Classification of second ordinary and symbolic powers of edge ideals.
//!
//! Every property of `S/I(G)^{(2)}` or `S/I(G)^2` decided here reduces to
//! localization conditions on the graph: Cohen-Macaulayness of independence
//! complexes of edge and vertex localizations, independence-number drops,
//! and triangle freeness for the ordinary power. The symbolic CM decision
//! has three independent routes that must agree; a disagreement is reported
//! as an error, never reconciled silently. Takayama tables expose the graded
//! local cohomology dimensions behind the generalized CM statements.

use crate::complex::{independence_complex, SimplicialComplex};
use crate::graph::Graph;
use crate::homology::reduced_homology;
use crate::ideals::{symbolic_power, IdealError, MonomialIdeal};
use crate::ringprops::{is_buchsbaum, is_cm, FieldSpec};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Power2Error {
    #[error("vertex {0} is isolated; classification requires every vertex to meet an edge")]
    IsolatedVertex(usize),
    #[error("routes disagree on {property}: {details}")]
    RouteDisagreement { property: String, details: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Which verification routes a decision runs: `Fast` uses the localization
/// criterion alone, `All` adds the independent cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RouteSet {
    Fast,
    All,
}

/// Concrete failure locus attached to a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two maximal independent sets of different sizes.
    MixedSizes {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },
    /// A triangle in the graph itself.
    Triangle { vertices: [usize; 3] },
    /// A triangle inside a vertex localization.
    LocalTriangle { vertex: usize, triangle: [usize; 3] },
    /// The independence complex fails the Cohen-Macaulay check.
    DeltaNotCm,
    /// The independence complex fails the Buchsbaum check.
    DeltaNotBuchsbaum,
    /// The localization at the edge pq has a non-CM independence complex.
    EdgeComplexNotCm { p: usize, q: usize },
    /// The independence number fails to drop by one at the edge pq.
    EdgeAlphaKept {
        p: usize,
        q: usize,
        alpha: usize,
        alpha_local: usize,
    },
    /// The union of the two vertex stars over the edge pq is not CM.
    EdgeStarUnionNotCm { p: usize, q: usize },
    /// The near-cover subcomplex of a vertex subset is not CM.
    SubsetComplexNotCm { vertices: Vec<usize> },
    /// A vertex localization that is not special CM, with the inner reason.
    VertexNotSpecial {
        vertex: usize,
        inner: Box<Witness>,
    },
}

/// Per-edge half of the special CM condition: every edge localization has a
/// CM independence complex and drops the independence number by exactly one.
pub fn special_cm_edge_conditions(g: &Graph, field: FieldSpec) -> Result<(), Witness> {
    let alpha = g.alpha();
    for &(p, q) in g.edges() {
        let local = g.localize_edge(p, q);
        if !is_cm(&independence_complex(&local), field) {
            return Err(Witness::EdgeComplexNotCm { p, q });
        }
        let alpha_local = local.alpha();
        if alpha_local + 1 != alpha {
            return Err(Witness::EdgeAlphaKept {
                p,
                q,
                alpha,
                alpha_local,
            });
        }
    }
    Ok(())
}

/// Special CM check: the independence complex is CM and every edge satisfies
/// [`special_cm_edge_conditions`]. Graphs without edges pass when their
/// independence complex does.
pub fn special_cm_check(g: &Graph, field: FieldSpec) -> Result<(), Witness> {
    if !is_cm(&independence_complex(g), field) {
        return Err(Witness::DeltaNotCm);
    }
    special_cm_edge_conditions(g, field)
}

pub fn is_special_cm(g: &Graph, field: FieldSpec) -> bool {
    special_cm_check(g, field).is_ok()
}

/// Second route to symbolic CM: the independence complex and, for every
/// edge, the union of the stars of its endpoints must all be CM.
fn star_union_route(g: &Graph, field: FieldSpec) -> Result<(), Witness> {
    let delta = independence_complex(g);
    if !is_cm(&delta, field) {
        return Err(Witness::DeltaNotCm);
    }
    for &(p, q) in g.edges() {
        if !is_cm(&delta.star_union(&[p, q]), field) {
            return Err(Witness::EdgeStarUnionNotCm { p, q });
        }
    }
    Ok(())
}

/// Exhaustive oracle route: every near-cover subcomplex over a vertex subset
/// of size 2 through dim + 1 must be CM, on top of the complex itself.
fn near_cover_route(g: &Graph, field: FieldSpec) -> Result<(), Witness> {
    let delta = independence_complex(g);
    if !is_cm(&delta, field) {
        return Err(Witness::DeltaNotCm);
    }
    if delta.is_void() || delta.is_irrelevant() {
        return Ok(());
    }
    let upper = (delta.dim() + 1) as usize;
    for size in 2..=upper {
        for subset in g.vertices().iter().copied().combinations(size) {
            if !is_cm(&delta.delta_v(&subset), field) {
                return Err(Witness::SubsetComplexNotCm { vertices: subset });
            }
        }
    }
    Ok(())
}

fn symbolic2_cm_witnessed(
    g: &Graph,
    field: FieldSpec,
    routes: RouteSet,
) -> Result<Result<(), Witness>, Power2Error> {
    let special = special_cm_check(g, field);
    if routes == RouteSet::Fast {
        return Ok(special);
    }
    let star = star_union_route(g, field);
    let near = near_cover_route(g, field);
    if special.is_ok() != star.is_ok() || star.is_ok() != near.is_ok() {
        return Err(Power2Error::RouteDisagreement {
            property: "symbolic2_cm".into(),
            details: format!(
                "special={:?} star_union={:?} near_cover={:?} over {}",
                special.is_ok(),
                star.is_ok(),
                near.is_ok(),
                field
            ),
        });
    }
    Ok(special)
}

/// Whether `S/I(G)^{(2)}` is Cohen-Macaulay.
pub fn symbolic2_cm(g: &Graph, field: FieldSpec, routes: RouteSet) -> Result<bool, Power2Error> {
    symbolic2_cm_witnessed(g, field, routes).map(|r| r.is_ok())
}

fn ordinary2_cm_witnessed(
    g: &Graph,
    field: FieldSpec,
    routes: RouteSet,
) -> Result<Result<(), Witness>, Power2Error> {
    if let Err(w) = symbolic2_cm_witnessed(g, field, routes)? {
        return Ok(Err(w));
    }
    if let Some(t) = g.find_triangle() {
        return Ok(Err(Witness::Triangle { vertices: t }));
    }
    Ok(Ok(()))
}

/// Whether `S/I(G)^2` is Cohen-Macaulay: the symbolic condition plus
/// triangle freeness, which makes the two second powers coincide.
pub fn ordinary2_cm(g: &Graph, field: FieldSpec, routes: RouteSet) -> Result<bool, Power2Error> {
    ordinary2_cm_witnessed(g, field, routes).map(|r| r.is_ok())
}

/// Every vertex localization must be special CM, and triangle free when
/// `triangle_free` is set.
fn vertex_conditions(g: &Graph, field: FieldSpec, triangle_free: bool) -> Result<(), Witness> {
    for &v in g.vertices() {
        let local = g.localize_vertex(v);
        if let Err(inner) = special_cm_check(&local, field) {
            return Err(Witness::VertexNotSpecial {
                vertex: v,
                inner: Box::new(inner),
            });
        }
        if triangle_free {
            if let Some(t) = local.find_triangle() {
                return Err(Witness::LocalTriangle {
                    vertex: v,
                    triangle: t,
                });
            }
        }
    }
    Ok(())
}

fn unmixed_check(g: &Graph) -> Result<(), Witness> {
    let sets = g.maximal_independent_sets();
    let smaller = sets.iter().min_by_key(|s| s.len());
    let larger = sets.iter().max_by_key(|s| s.len());
    match (smaller, larger) {
        (Some(s), Some(l)) if s.len() != l.len() => Err(Witness::MixedSizes {
            smaller: s.clone(),
            larger: l.clone(),
        }),
        _ => Ok(()),
    }
}

fn buchsbaum_check(g: &Graph, field: FieldSpec, triangle_free: bool) -> Result<(), Witness> {
    if !is_cm(&independence_complex(g), field) {
        return Err(Witness::DeltaNotCm);
    }
    vertex_conditions(g, field, triangle_free)
}

fn gcm_check(g: &Graph, field: FieldSpec, triangle_free: bool) -> Result<(), Witness> {
    unmixed_check(g)?;
    vertex_conditions(g, field, triangle_free)
}

/// Whether `S/I(G)^{(2)}` is Buchsbaum.
pub fn symbolic2_buchsbaum(g: &Graph, field: FieldSpec) -> bool {
    buchsbaum_check(g, field, false).is_ok()
}

/// Whether `S/I(G)^2` is Buchsbaum.
pub fn ordinary2_buchsbaum(g: &Graph, field: FieldSpec) -> bool {
    buchsbaum_check(g, field, true).is_ok()
}

/// Whether `S/I(G)^{(2)}` is generalized Cohen-Macaulay.
pub fn symbolic2_gcm(g: &Graph, field: FieldSpec) -> bool {
    gcm_check(g, field, false).is_ok()
}

/// Whether `S/I(G)^2` is generalized Cohen-Macaulay.
pub fn ordinary2_gcm(g: &Graph, field: FieldSpec) -> bool {
    gcm_check(g, field, true).is_ok()
}

/// Independent route to [`symbolic2_gcm`]: the independence complex must be
/// Buchsbaum along with every star union over a nonempty vertex subset of
/// size at most dim + 1.
pub fn symbolic2_gcm_star_route(g: &Graph, field: FieldSpec) -> bool {
    let delta = independence_complex(g);
    if !is_buchsbaum(&delta, field) {
        return false;
    }
    if delta.is_void() || delta.is_irrelevant() {
        return true;
    }
    let upper = (delta.dim() + 1) as usize;
    for size in 1..=upper {
        for subset in g.vertices().iter().copied().combinations(size) {
            if !is_buchsbaum(&delta.star_union(&subset), field) {
                return false;
            }
        }
    }
    true
}

/// One graded dimension of local cohomology: `dim_k H^i_m(S/I)_a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TakayamaEntry {
    pub i: usize,
    pub a: Vec<i64>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TakayamaTable {
    pub field: String,
    /// Per-variable exponent bounds from the minimal generators.
    pub rho: Vec<u32>,
    pub entries: Vec<TakayamaEntry>,
}

/// Exponent bound `ρ_j`: the largest exponent of variable `j` over the
/// minimal generators.
fn exponent_bounds(n: usize, gens: &[Vec<u32>]) -> Vec<u32> {
    let mut rho = vec![0u32; n];
    for gen in gens {
        for (r, &e) in rho.iter_mut().zip(gen) {
            *r = (*r).max(e);
        }
    }
    rho
}

/// Stanley-Reisner complex of the radical: faces are the variable subsets
/// containing no generator support.
fn radical_complex(n: usize, gens: &[Vec<u32>]) -> SimplicialComplex {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return SimplicialComplex::from_facets(Vec::<Vec<usize>>::new());
    }
    let supports: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| (1..=n).filter(|&j| g[j - 1] > 0).collect())
        .collect();
    assert!(n <= 24, "radical complex enumeration limited to 24 variables");
    let faces = (0u32..1 << n).map(|mask| {
        (1..=n)
            .filter(|&j| mask >> (j - 1) & 1 == 1)
            .collect::<Vec<_>>()
    });
    SimplicialComplex::from_facets(
        faces.filter(|s| !supports.iter().any(|sup| sup.iter().all(|v| s.contains(v)))),
    )
}

/// The graded piece `dim_k H^i_m(S/I)_a` through the degree complex: zero
/// when some `a_j` reaches `ρ_j` or the negative support is not a face of
/// the radical complex, and otherwise the reduced Betti number of the degree
/// complex in dimension `i - |G_a| - 1`.
fn graded_dim(
    ideal: &MonomialIdeal,
    rho: &[u32],
    radical: &SimplicialComplex,
    i: usize,
    a: &[i64],
    field: FieldSpec,
) -> usize {
    let n = ideal.n();
    if (0..n).any(|j| a[j] >= i64::from(rho[j])) {
        return 0;
    }
    let ga: Vec<usize> = (1..=n).filter(|&j| a[j - 1] < 0).collect();
    if !radical.has_face(&ga) {
        return 0;
    }
    let j = i as i64 - ga.len() as i64 - 1;
    reduced_homology(&ideal.degree_complex(a)).betti(j, field)
}

/// Table of graded local cohomology dimensions of `S/I` over the requested
/// degrees and cohomological indices. Needs a concrete coefficient field.
pub fn takayama_table(
    ideal: &MonomialIdeal,
    degrees: &[Vec<i64>],
    i_range: std::ops::RangeInclusive<usize>,
    field: FieldSpec,
) -> Result<TakayamaTable, Power2Error> {
    if field == FieldSpec::AllFields {
        return Err(Power2Error::Precondition(
            "takayama_table needs a single coefficient field, not \"all\"".into(),
        ));
    }
    let n = ideal.n();
    let gens = ideal.minimal_generators()?;
    let rho = exponent_bounds(n, &gens);
    let radical = radical_complex(n, &gens);
    let mut entries = Vec::new();
    for a in degrees {
        assert_eq!(a.len(), n, "degree vector length mismatch");
        for i in i_range.clone() {
            let dim = graded_dim(ideal, &rho, &radical, i, a, field);
            entries.push(TakayamaEntry { i, a: a.clone(), dim });
        }
    }
    Ok(TakayamaTable {
        field: field.to_string(),
        rho,
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Main2Report {
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<TakayamaEntry>,
}

/// For a graph whose second symbolic power is generalized CM, checks that
/// every below-top local cohomology module is supported only in the degrees
/// 0, `e_u`, and `e_u + e_v` over the edges `uv`, scanning all of `{0,1}^n`.
///
/// Precondition: `symbolic2_gcm(g, field)` holds, else an error is returned.
pub fn verify_main2_support(g: &Graph, field: FieldSpec) -> Result<Main2Report, Power2Error> {
    if field == FieldSpec::AllFields {
        return Err(Power2Error::Precondition(
            "verify_main2_support needs a single coefficient field, not \"all\"".into(),
        ));
    }
    if !symbolic2_gcm(g, field) {
        return Err(Power2Error::Precondition(format!(
            "verify_main2_support needs symbolic2_gcm to hold over {field}"
        )));
    }
    let n = g.vertex_count();
    let delta = independence_complex(g);
    let ideal = symbolic_power(n, &delta, 2);
    let gens = ideal.minimal_generators()?;
    let rho = exponent_bounds(n, &gens);
    let radical = radical_complex(n, &gens);
    debug_assert_eq!(radical, delta);
    let mut allowed: BTreeSet<Vec<i64>> = BTreeSet::new();
    allowed.insert(vec![0; n]);
    for u in 1..=n {
        let mut e = vec![0; n];
        e[u - 1] = 1;
        allowed.insert(e);
    }
    for &(u, v) in g.edges() {
        let mut e = vec![0; n];
        e[u - 1] = 1;
        e[v - 1] = 1;
        allowed.insert(e);
    }
    // dim S/I^{(2)} = dim Δ + 1; entries with i below that must vanish
    // outside the allowed degrees.
    let top = if delta.is_void() { 0 } else { delta.dim() + 1 };
    for mask in 0u64..1 << n {
        let a: Vec<i64> = (0..n).map(|j| (mask >> j & 1) as i64).collect();
        if allowed.contains(&a) {
            continue;
        }
        for i in 0..top.max(0) as usize {
            let dim = graded_dim(&ideal, &rho, &radical, i, &a, field);
            if dim != 0 {
                return Ok(Main2Report {
                    ok: false,
                    violation: Some(TakayamaEntry { i, a, dim }),
                });
            }
        }
    }
    Ok(Main2Report {
        ok: true,
        violation: None,
    })
}

/// Verdict for one property: whether it holds, the failure locus when it
/// does not, and which route or routes produced the answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub routes: String,
}

impl PropertyReport {
    fn from_check(check: Result<(), Witness>, routes: &str) -> Self {
        match check {
            Ok(()) => PropertyReport {
                holds: true,
                witness: None,
                routes: routes.into(),
            },
            Err(w) => PropertyReport {
                holds: false,
                witness: Some(w),
                routes: routes.into(),
            },
        }
    }
}

/// Full classification of one graph over one coefficient choice. Field
/// names are stable and safe to consume downstream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub field: String,
    pub alpha: usize,
    pub dim: i64,
    pub delta_cm: PropertyReport,
    pub delta_buchsbaum: PropertyReport,
    pub unmixed: PropertyReport,
    pub special_cm: PropertyReport,
    pub special_cm_edge_only: PropertyReport,
    pub symbolic2_cm: PropertyReport,
    pub ordinary2_cm: PropertyReport,
    pub symbolic2_buchsbaum: PropertyReport,
    pub ordinary2_buchsbaum: PropertyReport,
    pub symbolic2_gcm: PropertyReport,
    pub ordinary2_gcm: PropertyReport,
}

/// Classifies all eleven tracked properties of `g` over `field`.
///
/// Headline classification refuses isolated vertices: every criterion here
/// is stated for graphs whose vertices all meet an edge. The individual
/// criterion functions stay callable on any graph and evaluate their
/// conditions literally.
pub fn classify(
    g: &Graph,
    field: FieldSpec,
    routes: RouteSet,
) -> Result<ClassificationReport, Power2Error> {
    if let Some(&v) = g.vertices().iter().find(|&&v| g.degree(v) == 0) {
        return Err(Power2Error::IsolatedVertex(v));
    }
    classify_unchecked(g, field, routes)
}

/// [`classify`] without the isolated-vertex refusal, for callers that opt
/// in to evaluating the literal criteria on arbitrary graphs.
pub fn classify_unchecked(
    g: &Graph,
    field: FieldSpec,
    routes: RouteSet,
) -> Result<ClassificationReport, Power2Error> {
    let delta = independence_complex(g);
    let delta_cm_check = if is_cm(&delta, field) {
        Ok(())
    } else {
        Err(Witness::DeltaNotCm)
    };
    let delta_buchsbaum_check = if is_buchsbaum(&delta, field) {
        Ok(())
    } else {
        Err(Witness::DeltaNotBuchsbaum)
    };
    let symbolic_routes = match routes {
        RouteSet::Fast => "special",
        RouteSet::All => "special, star union, near cover",
    };
    let symbolic2_cm = PropertyReport::from_check(
        symbolic2_cm_witnessed(g, field, routes)?,
        symbolic_routes,
    );
    let ordinary2_cm = PropertyReport::from_check(
        ordinary2_cm_witnessed(g, field, routes)?,
        &format!("{symbolic_routes}; triangle scan"),
    );
    Ok(ClassificationReport {
        n: g.vertex_count(),
        edges: g.edges().to_vec(),
        field: field.to_string(),
        alpha: g.alpha(),
        dim: if delta.is_void() { -1 } else { delta.dim() },
        delta_cm: PropertyReport::from_check(delta_cm_check, "link recursion"),
        delta_buchsbaum: PropertyReport::from_check(delta_buchsbaum_check, "link recursion"),
        unmixed: PropertyReport::from_check(unmixed_check(g), "facet sizes"),
        special_cm: PropertyReport::from_check(special_cm_check(g, field), "edge localization"),
        special_cm_edge_only: PropertyReport::from_check(
            special_cm_edge_conditions(g, field),
            "edge localization",
        ),
        symbolic2_cm,
        ordinary2_cm,
        symbolic2_buchsbaum: PropertyReport::from_check(
            buchsbaum_check(g, field, false),
            "vertex localization",
        ),
        ordinary2_buchsbaum: PropertyReport::from_check(
            buchsbaum_check(g, field, true),
            "vertex localization; triangle scan",
        ),
        symbolic2_gcm: PropertyReport::from_check(
            gcm_check(g, field, false),
            "vertex localization",
        ),
        ordinary2_gcm: PropertyReport::from_check(
            gcm_check(g, field, true),
            "vertex localization; triangle scan",
        ),
    })
}
