//! Monomial ideals for the power machinery, in two shapes: intersections of
//! face-complement prime powers (component form, `⋂ P_F^{m_F}` with
//! `P_F = (x_i : i ∉ F)`) and explicit exponent-vector generator lists.
//! Provides membership, minimal generators, degree complexes at a
//! multidegree, and emptiness certificates for the weight-region systems
//! with an independent Fourier-Motzkin cross-check.

use crate::complex::{independence_complex, SimplicialComplex};
use crate::graph::Graph;
use crate::ringprops::{is_buchsbaum, is_cm, FieldSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// Cap on exponent-box sizes for the enumeration-based operations.
const BOX_CAP: u128 = 1 << 24;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("invalid ideal JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("component {index}: {msg}")]
    InvalidComponent { index: usize, msg: String },
    #[error("two components share the face {face:?}")]
    DuplicateComponent { face: Vec<usize> },
    #[error("generator {index} has {got} exponents, expected {expected}")]
    GeneratorLength { index: usize, got: usize, expected: usize },
    #[error("operation requires an ideal in component form")]
    NotComponentForm,
    #[error("gamma face {face:?} is not a component of the ideal")]
    UnknownGamma { face: Vec<usize> },
    #[error("exponent box has {points} points, over the {cap} cap")]
    BoxTooLarge { points: u128, cap: u128 },
}

/// One primary component `P_F^m`: membership of `x^a` means
/// `Σ_{i ∉ F} a_i ≥ m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    #[serde(rename = "F")]
    pub f: Vec<usize>,
    pub m: u32,
}

/// A monomial ideal in `n` variables. JSON carries either a `components`
/// or a `generators` field next to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonomialIdeal {
    Components { n: usize, components: Vec<Component> },
    Generators { n: usize, generators: Vec<Vec<u32>> },
}

impl MonomialIdeal {
    pub fn n(&self) -> usize {
        match self {
            MonomialIdeal::Components { n, .. } | MonomialIdeal::Generators { n, .. } => *n,
        }
    }

    /// Parses and validates the JSON interchange format.
    pub fn from_json(text: &str) -> Result<MonomialIdeal, IdealError> {
        let mut ideal: MonomialIdeal = serde_json::from_str(text)?;
        ideal.validate_and_normalize()?;
        Ok(ideal)
    }

    fn validate_and_normalize(&mut self) -> Result<(), IdealError> {
        match self {
            MonomialIdeal::Components { n, components } => {
                let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
                for (index, c) in components.iter_mut().enumerate() {
                    c.f.sort_unstable();
                    if c.f.windows(2).any(|w| w[0] == w[1]) {
                        return Err(IdealError::InvalidComponent {
                            index,
                            msg: "repeated vertex in F".into(),
                        });
                    }
                    if c.f.iter().any(|&v| v < 1 || v > *n) {
                        return Err(IdealError::InvalidComponent {
                            index,
                            msg: format!("F contains a vertex outside 1..={n}"),
                        });
                    }
                    if !seen.insert(c.f.clone()) {
                        return Err(IdealError::DuplicateComponent { face: c.f.clone() });
                    }
                }
                Ok(())
            }
            MonomialIdeal::Generators { n, generators } => {
                for (index, g) in generators.iter().enumerate() {
                    if g.len() != *n {
                        return Err(IdealError::GeneratorLength {
                            index,
                            got: g.len(),
                            expected: *n,
                        });
                    }
                }
                Ok(())
            }
        }
    }

    /// Monomial membership: `x^a ∈ I`.
    pub fn contains(&self, a: &[u32]) -> bool {
        assert_eq!(a.len(), self.n(), "exponent vector length mismatch");
        match self {
            MonomialIdeal::Components { n, components } => components.iter().all(|c| {
                let sum: u64 = (1..=*n)
                    .filter(|i| !c.f.contains(i))
                    .map(|i| u64::from(a[i - 1]))
                    .sum();
                sum >= u64::from(c.m)
            }),
            MonomialIdeal::Generators { generators, .. } => generators
                .iter()
                .any(|b| b.iter().zip(a).all(|(bi, ai)| bi <= ai)),
        }
    }

    /// The unique minimal monomial generating set, lexicographically sorted.
    ///
    /// For component form this enumerates the box `{0..M}^n` with
    /// `M = max m_F`: a minimal generator cannot have an exponent above `M`,
    /// since dropping `x_i` from such a monomial keeps every component sum
    /// at or above its threshold.
    pub fn minimal_generators(&self) -> Result<Vec<Vec<u32>>, IdealError> {
        match self {
            MonomialIdeal::Generators { generators, .. } => Ok(minimalize(generators.clone())),
            MonomialIdeal::Components { n, components } => {
                let m = components.iter().filter(|c| c.m > 0).map(|c| c.m).max();
                let Some(m) = m else {
                    return Ok(vec![vec![0; *n]]); // unit ideal
                };
                check_box(*n, m)?;
                if *n == 0 {
                    return Ok(Vec::new()); // some m ≥ 1 is unreachable over no variables
                }
                let thresholds: Vec<u64> = components
                    .iter()
                    .filter(|c| c.m > 0)
                    .map(|c| u64::from(c.m))
                    .collect();
                // feeds[i]: thresholds whose complement the coordinate i+1 feeds.
                let feeds: Vec<Vec<usize>> = (1..=*n)
                    .map(|v| {
                        components
                            .iter()
                            .filter(|c| c.m > 0)
                            .enumerate()
                            .filter(|(_, c)| !c.f.contains(&v))
                            .map(|(k, _)| k)
                            .collect()
                    })
                    .collect();
                let side = m as usize + 1;
                let strides: Vec<usize> = (0..*n).map(|i| side.pow(i as u32)).collect();
                let mut table = vec![false; side.pow(*n as u32)];
                let mut sums = vec![0u64; thresholds.len()];
                fill_membership(
                    *n - 1,
                    0,
                    side,
                    &feeds,
                    &thresholds,
                    &mut sums,
                    &mut table,
                    &strides,
                );
                let mut gens = Vec::new();
                let mut digits = vec![0u32; *n];
                for idx in 0..table.len() {
                    if table[idx] {
                        let minimal = (0..*n)
                            .all(|i| digits[i] == 0 || !table[idx - strides[i]]);
                        if minimal {
                            gens.push(digits.clone());
                        }
                    }
                    for d in digits.iter_mut() {
                        if *d as usize + 1 == side {
                            *d = 0;
                        } else {
                            *d += 1;
                            break;
                        }
                    }
                }
                gens.sort_unstable();
                Ok(gens)
            }
        }
    }

    /// The degree complex at `a ∈ Z^n`: faces `S ∖ G_a` for the sets
    /// `S ⊇ G_a` whose localization fails to contain `x^a`, where
    /// `G_a = {j : a_j < 0}`.
    pub fn degree_complex(&self, a: &[i64]) -> SimplicialComplex {
        assert_eq!(a.len(), self.n(), "degree vector length mismatch");
        let n = self.n();
        let ga: Vec<usize> = (1..=n).filter(|&j| a[j - 1] < 0).collect();
        match self {
            MonomialIdeal::Components { components, .. } => {
                // x^a stays outside the localization at S exactly when some
                // component face contains S and its complement sum stays
                // under the threshold; maximal such S are component faces.
                let faces = components.iter().filter_map(|c| {
                    if !is_subset(&ga, &c.f) {
                        return None;
                    }
                    let sum: i64 = (1..=n).filter(|j| !c.f.contains(j)).map(|j| a[j - 1]).sum();
                    if sum < i64::from(c.m) {
                        Some(c.f.iter().copied().filter(|j| !ga.contains(j)).collect::<Vec<_>>())
                    } else {
                        None
                    }
                });
                SimplicialComplex::from_facets(faces)
            }
            MonomialIdeal::Generators { generators, .. } => {
                let rest: Vec<usize> = (1..=n).filter(|j| !ga.contains(j)).collect();
                assert!(rest.len() <= 24, "degree complex enumeration limited to 24 variables");
                let mut faces = Vec::new();
                for mask in 0u32..(1 << rest.len()) {
                    let face: Vec<usize> = rest
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect();
                    // S = G_a ∪ face; x^a ∉ I·R_S iff every generator keeps
                    // some exponent above a outside S.
                    let outside_s =
                        |j: usize| !ga.contains(&j) && !face.contains(&j);
                    if generators.iter().all(|b| {
                        (1..=n).any(|j| outside_s(j) && a[j - 1] < i64::from(b[j - 1]))
                    }) {
                        faces.push(face);
                    }
                }
                SimplicialComplex::from_facets(faces)
            }
        }
    }

    /// The degree complex computed through a generating set instead of the
    /// component data; agrees with `degree_complex` and exists as an
    /// independent route for cross-checking.
    pub fn degree_complex_via_generators(&self, a: &[i64]) -> Result<SimplicialComplex, IdealError> {
        match self {
            MonomialIdeal::Generators { .. } => Ok(self.degree_complex(a)),
            MonomialIdeal::Components { n, .. } => {
                let gens = MonomialIdeal::Generators {
                    n: *n,
                    generators: self.minimal_generators()?,
                };
                Ok(gens.degree_complex(a))
            }
        }
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.contains(v))
}

fn divides(b: &[u32], a: &[u32]) -> bool {
    b.iter().zip(a).all(|(x, y)| x <= y)
}

/// Drops duplicates and any vector dominating another; what remains is the
/// minimal generating set of the ideal the input generates.
fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_unstable();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .map(|g| !gens.iter().any(|h| h != g && divides(h, g)))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// Fills the box membership table for component form by walking coordinates
/// depth-first while keeping every complement sum incrementally updated.
/// Coordinate 0 varies fastest, matching mixed-radix indices over `strides`.
#[allow(clippy::too_many_arguments)]
fn fill_membership(
    coord: usize,
    base: usize,
    side: usize,
    feeds: &[Vec<usize>],
    thresholds: &[u64],
    sums: &mut Vec<u64>,
    table: &mut [bool],
    strides: &[usize],
) {
    for a in 0..side {
        if coord == 0 {
            table[base + a] =
                thresholds.iter().zip(sums.iter()).all(|(t, s)| s >= t);
        } else {
            fill_membership(
                coord - 1,
                base + a * strides[coord],
                side,
                feeds,
                thresholds,
                sums,
                table,
                strides,
            );
        }
        if a + 1 < side {
            for &k in &feeds[coord] {
                sums[k] += 1;
            }
        }
    }
    for &k in &feeds[coord] {
        sums[k] -= side as u64 - 1;
    }
}

fn check_box(n: usize, max: u32) -> Result<(), IdealError> {
    let points = u128::from(max + 1)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if points > BOX_CAP {
        return Err(IdealError::BoxTooLarge { points, cap: BOX_CAP });
    }
    Ok(())
}

/// Iterates `{0..=max}^n` in odometer order, first coordinate fastest.
fn box_points(n: usize, max: u32) -> BoxIter {
    BoxIter { current: Some(vec![0; n]), max }
}

struct BoxIter {
    current: Option<Vec<u32>>,
    max: u32,
}

impl Iterator for BoxIter {
    type Item = Vec<u32>;
    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        for i in 0..next.len() {
            if next[i] == self.max {
                next[i] = 0;
            } else {
                next[i] += 1;
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// The m-th symbolic power of the Stanley-Reisner ideal of `delta`,
/// as `⋂_F P_F^m` over the facets, inside `k[x_1..x_n]`.
pub fn symbolic_power(n: usize, delta: &SimplicialComplex, m: u32) -> MonomialIdeal {
    assert!(
        delta.is_void() || delta.vertices().iter().all(|&v| v >= 1 && v <= n),
        "complex vertices must lie in 1..=n"
    );
    let components = delta
        .facets()
        .iter()
        .map(|f| Component { f: f.clone(), m })
        .collect();
    MonomialIdeal::Components { n, components }
}

/// The square of the edge ideal of `g`, generated by all products of two
/// (not necessarily distinct) edge monomials, minimalized.
pub fn ordinary_square(g: &Graph) -> MonomialIdeal {
    let n = g.vertex_count();
    assert!(
        g.vertices().iter().all(|&v| v >= 1 && v <= n),
        "graph must be labeled 1..=n"
    );
    let edges = g.edges();
    let mut gens = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i..] {
            let mut e = vec![0u32; n];
            for v in [a, b, c, d] {
                e[v - 1] += 1;
            }
            gens.push(e);
        }
    }
    MonomialIdeal::Generators { n, generators: minimalize(gens) }
}

/// Whether `I(G)^2 = I(G)^{(2)}`, decided on generating sets.
///
/// The containment `I^2 ⊆ I^{(2)}` always holds: a facet of the independence
/// complex omits at least one endpoint of every edge, so each of the two edge
/// factors contributes at least 1 to every component sum. Equality therefore
/// reduces to every minimal generator of the symbolic square being divisible
/// by a product of two edges.
pub fn ordinary_equals_symbolic_square(g: &Graph) -> Result<bool, IdealError> {
    let symbolic = symbolic_power(g.vertex_count(), &independence_complex(g), 2);
    let edges = g.edges();
    'gens: for a in symbolic.minimal_generators()? {
        let fits: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(u, v)| a[u - 1] >= 1 && a[v - 1] >= 1)
            .collect();
        for (i, &(u1, v1)) in fits.iter().enumerate() {
            for &(u2, v2) in &fits[i..] {
                let mut remaining = a.clone();
                let mut ok = true;
                for w in [u1, v1, u2, v2] {
                    if remaining[w - 1] == 0 {
                        ok = false;
                        break;
                    }
                    remaining[w - 1] -= 1;
                }
                if ok {
                    continue 'gens;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// A component face, its threshold, and whether it sits on the strict side.
type FlaggedComponent = (Vec<usize>, u32, bool);

/// Linear constraint rows `(coefficients, bound)` encoding `c · y ≤ d`, with
/// the number of variables in front.
pub type LinearSystem = (usize, Vec<(Vec<i64>, i64)>);

/// Marks which components of a component-form ideal lie in `gamma`.
fn strict_flags(
    ideal: &MonomialIdeal,
    gamma: &[Vec<usize>],
) -> Result<(usize, Vec<FlaggedComponent>), IdealError> {
    let MonomialIdeal::Components { n, components } = ideal else {
        return Err(IdealError::NotComponentForm);
    };
    let mut flags: Vec<FlaggedComponent> = components
        .iter()
        .map(|c| (c.f.clone(), c.m, false))
        .collect();
    for g in gamma {
        let mut face = g.clone();
        face.sort_unstable();
        let slot = flags
            .iter_mut()
            .find(|(f, _, _)| *f == face)
            .ok_or(IdealError::UnknownGamma { face: face.clone() })?;
        slot.2 = true;
    }
    Ok((*n, flags))
}

/// Searches the region `L_Γ`: exponent vectors whose component sums fall
/// strictly under the threshold exactly on the `gamma` components and meet
/// it on all others. Returns the first member in odometer order (first
/// coordinate fastest), or None when the region is empty.
///
/// Members are capped coordinatewise by `M = max m_F` without loss: capping
/// preserves the strict inequalities, and a weak sum that contained a
/// coordinate ≥ M still clears its threshold after the cap.
pub fn l_gamma_witness(
    ideal: &MonomialIdeal,
    gamma: &[Vec<usize>],
) -> Result<Option<Vec<u32>>, IdealError> {
    let (n, flags) = strict_flags(ideal, gamma)?;
    let m = flags.iter().map(|&(_, m, _)| m).max().unwrap_or(0);
    check_box(n, m)?;
    let sums: Vec<(Vec<usize>, u32, bool)> = flags
        .iter()
        .map(|(f, m, strict)| {
            let complement: Vec<usize> = (1..=n).filter(|j| !f.contains(j)).collect();
            (complement, *m, *strict)
        })
        .collect();
    'outer: for a in box_points(n, m) {
        for (complement, m, strict) in &sums {
            let s: u64 = complement.iter().map(|&j| u64::from(a[j - 1])).sum();
            let ok = if *strict { s < u64::from(*m) } else { s >= u64::from(*m) };
            if !ok {
                continue 'outer;
            }
        }
        return Ok(Some(a));
    }
    Ok(None)
}

/// The linear system whose nonnegative integer solutions are exactly `L_Γ`,
/// as rows `c·y ≤ d` (strict thresholds already tightened by one).
pub fn l_gamma_system(
    ideal: &MonomialIdeal,
    gamma: &[Vec<usize>],
) -> Result<LinearSystem, IdealError> {
    let (n, flags) = strict_flags(ideal, gamma)?;
    let mut rows = Vec::new();
    for (f, m, strict) in flags {
        let mut c = vec![0i64; n];
        for j in (1..=n).filter(|j| !f.contains(j)) {
            c[j - 1] = if strict { 1 } else { -1 };
        }
        let d = if strict { i64::from(m) - 1 } else { -i64::from(m) };
        rows.push((c, d));
    }
    Ok((n, rows))
}

/// Decides whether `c·y ≤ d` rows admit a nonnegative integer solution by
/// Fourier-Motzkin elimination with coefficient-gcd rounding: every derived
/// row `c·y ≤ d` is divided by `g = gcd(c)` with `d` rounded down, which is
/// sound over the integers and catches parity-style infeasibility that the
/// rational relaxation misses.
pub fn fourier_motzkin_feasible(n_vars: usize, rows: &[(Vec<i64>, i64)]) -> bool {
    let mut sys: Vec<(Vec<i128>, i128)> = rows
        .iter()
        .map(|(c, d)| {
            assert_eq!(c.len(), n_vars, "row length mismatch");
            (c.iter().map(|&x| i128::from(x)).collect(), i128::from(*d))
        })
        .collect();
    for i in 0..n_vars {
        let mut c = vec![0i128; n_vars];
        c[i] = -1;
        sys.push((c, 0));
    }
    let mut live = Vec::new();
    for row in sys {
        match tighten(row) {
            Tightened::Infeasible => return false,
            Tightened::Trivial => {}
            Tightened::Row(r) => live.push(r),
        }
    }
    for k in 0..n_vars {
        let (pos, rest): (Vec<_>, Vec<_>) = live.into_iter().partition(|(c, _)| c[k] > 0);
        let (neg, keep): (Vec<_>, Vec<_>) = rest.into_iter().partition(|(c, _)| c[k] < 0);
        let mut next = keep;
        for (cp, dp) in &pos {
            for (cn, dn) in &neg {
                let g = gcd_i128(cp[k], -cn[k]);
                let (mp, mn) = (-cn[k] / g, cp[k] / g);
                let c: Vec<i128> = cp
                    .iter()
                    .zip(cn)
                    .map(|(x, y)| mp * x + mn * y)
                    .collect();
                let d = mp * dp + mn * dn;
                match tighten((c, d)) {
                    Tightened::Infeasible => return false,
                    Tightened::Trivial => {}
                    Tightened::Row(r) => next.push(r),
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        live = next;
    }
    // Every variable eliminated; surviving rows would be contradictions.
    live.is_empty()
}

enum Tightened {
    Infeasible,
    Trivial,
    Row((Vec<i128>, i128)),
}

fn tighten((c, d): (Vec<i128>, i128)) -> Tightened {
    let g = c.iter().fold(0i128, |acc, &x| gcd_i128(acc, x));
    if g == 0 {
        return if d >= 0 { Tightened::Trivial } else { Tightened::Infeasible };
    }
    let c: Vec<i128> = c.iter().map(|x| x / g).collect();
    Tightened::Row((c, d.div_euclid(g)))
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The four fixed facets of the six-variable worked example.
pub const EXAMPLE_FACETS: [[usize; 3]; 4] =
    [[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 6]];

/// A nonempty region certificate: the strict-side facet subset and the
/// first exponent vector found inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionWitness {
    pub gamma: Vec<Vec<usize>>,
    pub witness: Vec<u32>,
}

/// Classification of `⋂ P_{F_i}^{w_i}` for the worked example, through two
/// independent routes plus the Fourier-Motzkin cross-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleDecision {
    pub weights: [u32; 4],
    pub cm: bool,
    pub buchsbaum: bool,
    pub gcm_by_systems: bool,
    pub gcm_by_enumeration: bool,
    pub feasible_systems: Vec<String>,
    pub fm_agrees: bool,
    pub nonempty_regions: Vec<RegionWitness>,
}

/// Decides the ring properties of the worked-example ideal for one weight
/// tuple. Region route: the ideal fails a property iff some `L_Γ` is
/// nonempty for a facet subset `Γ` whose generated subcomplex fails the
/// matching complex property. System route: closed-form feasibility of the
/// three disconnection patterns. The two routes must agree; `fm_agrees`
/// reports whether the Fourier-Motzkin check matched enumeration on every
/// region it saw.
pub fn example_ideal_decision(weights: [u32; 4]) -> ExampleDecision {
    let n = 6;
    let components: Vec<Component> = EXAMPLE_FACETS
        .iter()
        .zip(weights)
        .map(|(f, m)| Component { f: f.to_vec(), m })
        .collect();
    let ideal = MonomialIdeal::Components { n, components };

    let mut fm_agrees = true;
    let mut nonempty_regions = Vec::new();
    let mut cm = true;
    let mut buchsbaum = true;
    for mask in 0u32..16 {
        let gamma: Vec<Vec<usize>> = EXAMPLE_FACETS
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, f)| f.to_vec())
            .collect();
        let sub = SimplicialComplex::from_facets(gamma.clone());
        let sub_cm = is_cm(&sub, FieldSpec::AllFields);
        let sub_bbm = is_buchsbaum(&sub, FieldSpec::AllFields);
        if sub_cm && sub_bbm {
            continue; // a region with a well-behaved subcomplex certifies nothing
        }
        let witness = l_gamma_witness(&ideal, &gamma).expect("example box is small");
        let fm = {
            let (vars, rows) = l_gamma_system(&ideal, &gamma).expect("component form");
            fourier_motzkin_feasible(vars, &rows)
        };
        if fm != witness.is_some() {
            fm_agrees = false;
        }
        if let Some(w) = witness {
            if !sub_cm {
                cm = false;
            }
            if !sub_bbm {
                buchsbaum = false;
            }
            nonempty_regions.push(RegionWitness { gamma, witness: w });
        }
    }

    // Closed forms for the three ways a unit-vertex degree complex can
    // disconnect: facets 1 and 3 split at vertex 3, facets 2 and 4 split at
    // vertex 4, and the disjoint pair {1,4} splitting globally.
    let [a, b, c, d] = weights.map(i64::from);
    let d1 = a >= 1 && c >= 1 && a - b + c - 2 >= 0;
    let d2 = a >= 1 && d >= 1 && a - b + d - 2 >= 0 && a - c + d - 2 >= 0;
    let d3 = b >= 1 && d >= 1 && b - c + d - 2 >= 0;
    let gcm_by_systems = !d1 && !d2 && !d3;
    let feasible_systems = [d1, d2, d3]
        .iter()
        .enumerate()
        .filter(|(_, &fired)| fired)
        .map(|(i, _)| format!("D{}", i + 1))
        .collect();

    ExampleDecision {
        weights,
        cm,
        buchsbaum,
        gcm_by_systems,
        gcm_by_enumeration: cm,
        feasible_systems,
        fm_agrees,
        nonempty_regions,
    }
}
