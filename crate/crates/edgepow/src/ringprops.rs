//! Cohen-Macaulay and Buchsbaum tests for Stanley-Reisner rings of
//! simplicial complexes, through the homological link criteria.
//!
//! Each property ships in two forms: a reference implementation quantifying
//! over every face literally (`*_direct`), and an optimized recursion over
//! vertex links used in production. Their equivalence is exercised by the
//! test suite rather than assumed.
//!
//! Conventions for the degenerate complexes: VOID and IRRELEVANT are both
//! Cohen-Macaulay and Buchsbaum. The criteria that quantify over subcomplexes
//! (which may legitimately come out empty) rely on this.

use crate::complex::SimplicialComplex;
use crate::homology::reduced_homology;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("unrecognized field spec {0:?}; use \"all\", \"0\", or a prime")]
    Unrecognized(String),
}

/// Which coefficient fields a homological statement quantifies over:
/// every field at once (decided integrally), the rationals, or one prime
/// characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    AllFields,
    Char0,
    Char(u64),
}

impl FieldSpec {
    pub fn char_p(p: u64) -> Result<FieldSpec, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::Char(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<FieldSpec, FieldError> {
        match s.trim() {
            "all" => Ok(FieldSpec::AllFields),
            "0" => Ok(FieldSpec::Char0),
            other => match other.parse::<u64>() {
                Ok(p) => FieldSpec::char_p(p),
                Err(_) => Err(FieldError::Unrecognized(s.to_string())),
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::AllFields => write!(f, "all"),
            FieldSpec::Char0 => write!(f, "0"),
            FieldSpec::Char(p) => write!(f, "{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Cohen-Macaulay over the given field(s): purity plus vanishing of the
/// reduced homology of every link strictly below its dimension.
///
/// Decided by the vertex-link recursion: a complex of dimension ≥ 1 is CM
/// iff it is pure, its own homology vanishes below the top dimension, and
/// every vertex link is CM. Links repeat across the recursion, so results
/// are memoized per top-level call.
pub fn is_cm(c: &SimplicialComplex, field: FieldSpec) -> bool {
    let mut memo: HashMap<SimplicialComplex, bool> = HashMap::new();
    is_cm_memo(c, field, &mut memo)
}

fn is_cm_memo(
    c: &SimplicialComplex,
    field: FieldSpec,
    memo: &mut HashMap<SimplicialComplex, bool>,
) -> bool {
    if c.is_void() || c.is_irrelevant() {
        return true;
    }
    if let Some(&hit) = memo.get(c) {
        return hit;
    }
    let d = c.dim();
    let verdict = d == 0
        || (c.is_pure()
            && reduced_homology(c).vanishes_below(d, field)
            && c
                .vertices()
                .into_iter()
                .all(|v| is_cm_memo(&c.link(&[v]), field, memo)));
    memo.insert(c.clone(), verdict);
    verdict
}

/// Reference Cohen-Macaulay test: for every face F (the empty face
/// included), the homology of its link vanishes below dim Δ − |F|. The
/// |F| = dim Δ faces detect impurity through H̃_{−1} of IRRELEVANT links,
/// so no separate purity clause is needed.
pub fn is_cm_direct(c: &SimplicialComplex, field: FieldSpec) -> bool {
    if c.is_void() {
        return true;
    }
    let d = c.dim();
    c.faces()
        .iter()
        .all(|f| reduced_homology(&c.link(f)).vanishes_below(d - f.len() as i64, field))
}

/// Buchsbaum over the given field(s): pure, and every vertex link is
/// Cohen-Macaulay. (The global homology clause of the CM test is dropped;
/// that is the only difference.)
pub fn is_buchsbaum(c: &SimplicialComplex, field: FieldSpec) -> bool {
    if c.is_void() || c.is_irrelevant() {
        return true;
    }
    if !c.is_pure() {
        return false;
    }
    let mut memo: HashMap<SimplicialComplex, bool> = HashMap::new();
    c.vertices()
        .into_iter()
        .all(|v| is_cm_memo(&c.link(&[v]), field, &mut memo))
}

/// Reference Buchsbaum test: purity plus the link-vanishing condition for
/// every nonempty face.
pub fn is_buchsbaum_direct(c: &SimplicialComplex, field: FieldSpec) -> bool {
    if c.is_void() {
        return true;
    }
    let d = c.dim();
    c.is_pure()
        && c.faces()
            .iter()
            .filter(|f| !f.is_empty())
            .all(|f| reduced_homology(&c.link(f)).vanishes_below(d - f.len() as i64, field))
}

/// For Stanley-Reisner rings, generalized Cohen-Macaulay coincides with
/// Buchsbaum, so the complex-level test is the same.
pub fn is_gcm_complex(c: &SimplicialComplex, field: FieldSpec) -> bool {
    is_buchsbaum(c, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::independence_complex;
    use crate::graph::{enumerate_graphs, Graph};

    fn delta_c4() -> SimplicialComplex {
        SimplicialComplex::from_facets([vec![1, 3], vec![2, 4]])
    }

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::from_facets([
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
        ])
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("all".parse::<FieldSpec>(), Ok(FieldSpec::AllFields));
        assert_eq!("0".parse::<FieldSpec>(), Ok(FieldSpec::Char0));
        assert_eq!("7".parse::<FieldSpec>(), Ok(FieldSpec::Char(7)));
        assert_eq!("4".parse::<FieldSpec>(), Err(FieldError::NotPrime(4)));
        assert_eq!("1".parse::<FieldSpec>(), Err(FieldError::NotPrime(1)));
        assert!(matches!(
            "banana".parse::<FieldSpec>(),
            Err(FieldError::Unrecognized(_))
        ));
        assert_eq!(FieldSpec::Char(2).to_string(), "2");
    }

    #[test]
    fn cm_basics() {
        assert!(is_cm(&SimplicialComplex::simplex(&[1, 2, 3]), FieldSpec::AllFields));
        assert!(!is_cm(&delta_c4(), FieldSpec::AllFields));
        assert!(!is_cm(&delta_c4(), FieldSpec::Char0));
        let p4 = SimplicialComplex::from_facets([vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert!(is_cm(&p4, FieldSpec::AllFields));
        assert!(is_cm(&SimplicialComplex::void(), FieldSpec::AllFields));
        assert!(is_cm(&SimplicialComplex::irrelevant(), FieldSpec::AllFields));
        // Any set of points is CM; any non-pure complex is not.
        assert!(is_cm(
            &SimplicialComplex::from_facets([vec![1], vec![2], vec![3]]),
            FieldSpec::AllFields
        ));
        assert!(!is_cm(
            &SimplicialComplex::from_facets([vec![1], vec![2, 3]]),
            FieldSpec::AllFields
        ));
    }

    #[test]
    fn buchsbaum_basics() {
        assert!(is_buchsbaum(&delta_c4(), FieldSpec::AllFields));
        assert!(!is_cm(&delta_c4(), FieldSpec::AllFields));
        assert!(!is_buchsbaum(
            &SimplicialComplex::from_facets([vec![1], vec![2, 3]]),
            FieldSpec::AllFields
        ));
        // Two disjoint edges: pure, links are points, but disconnected in
        // dimension 1, so Buchsbaum without being CM.
        let two_edges = SimplicialComplex::from_facets([vec![1, 2], vec![3, 4]]);
        assert!(is_buchsbaum(&two_edges, FieldSpec::AllFields));
        assert!(!is_cm(&two_edges, FieldSpec::AllFields));
        assert!(is_buchsbaum(&SimplicialComplex::void(), FieldSpec::AllFields));
        assert!(is_buchsbaum(&SimplicialComplex::irrelevant(), FieldSpec::AllFields));
    }

    #[test]
    fn projective_plane_field_dependence() {
        let p = rp2();
        assert!(is_cm(&p, FieldSpec::Char0));
        assert!(is_cm(&p, FieldSpec::Char(3)));
        assert!(!is_cm(&p, FieldSpec::Char(2)));
        assert!(!is_cm(&p, FieldSpec::AllFields));
        // Vertex links are circles, which are CM over every field, so the
        // plane is Buchsbaum over every field; only its global H_1 torsion
        // obstructs CM-ness in characteristic 2.
        assert!(is_buchsbaum(&p, FieldSpec::AllFields));
        assert!(is_buchsbaum(&p, FieldSpec::Char(2)));
        assert!(is_gcm_complex(&p, FieldSpec::AllFields));
    }

    #[test]
    fn optimized_matches_direct_on_independence_complexes() {
        for n in 0..=5 {
            for g in enumerate_graphs(n, false).unwrap() {
                let c = independence_complex(&g);
                for field in [FieldSpec::AllFields, FieldSpec::Char(2)] {
                    assert_eq!(is_cm(&c, field), is_cm_direct(&c, field), "G={g} {field}");
                    assert_eq!(
                        is_buchsbaum(&c, field),
                        is_buchsbaum_direct(&c, field),
                        "G={g} {field}"
                    );
                }
            }
        }
    }

    #[test]
    fn optimized_matches_direct_on_links_and_small_complexes() {
        let samples = vec![
            rp2(),
            SimplicialComplex::from_facets([vec![1, 2], vec![2, 3], vec![1, 3]]),
            SimplicialComplex::from_facets([vec![1, 2], vec![3, 4]]),
            SimplicialComplex::from_facets([vec![1, 2, 3], vec![3, 4, 5], vec![4, 5, 6]]),
            SimplicialComplex::from_facets([vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]]),
            SimplicialComplex::from_facets([vec![1], vec![2, 3], vec![3, 4, 5]]),
        ];
        for c in samples {
            for field in [FieldSpec::AllFields, FieldSpec::Char(2), FieldSpec::Char0] {
                assert_eq!(is_cm(&c, field), is_cm_direct(&c, field), "{c} {field}");
                assert_eq!(
                    is_buchsbaum(&c, field),
                    is_buchsbaum_direct(&c, field),
                    "{c} {field}"
                );
            }
            for v in c.vertices() {
                let lk = c.link(&[v]);
                assert_eq!(
                    is_cm(&lk, FieldSpec::AllFields),
                    is_cm_direct(&lk, FieldSpec::AllFields)
                );
            }
        }
    }

    #[test]
    fn implication_chain() {
        // CM ⟹ Buchsbaum ⟹ pure, and AllFields ⟹ any fixed characteristic.
        for g in enumerate_graphs(5, false).unwrap() {
            let c = independence_complex(&g);
            if is_cm(&c, FieldSpec::AllFields) {
                assert!(is_buchsbaum(&c, FieldSpec::AllFields));
            }
            if is_buchsbaum(&c, FieldSpec::AllFields) {
                assert!(c.is_pure());
                for field in [FieldSpec::Char0, FieldSpec::Char(2), FieldSpec::Char(5)] {
                    assert!(is_buchsbaum(&c, field));
                }
            }
            if is_cm(&c, FieldSpec::AllFields) {
                for field in [FieldSpec::Char0, FieldSpec::Char(2), FieldSpec::Char(5)] {
                    assert!(is_cm(&c, field));
                }
            }
        }
    }

    #[test]
    fn cm_union_lemma_spot_checks() {
        // For CM complexes of equal dimension d with d−1 dimensional
        // intersection, the union is CM iff the intersection is.
        let a = SimplicialComplex::simplex(&[1, 2, 3]);
        let b = SimplicialComplex::simplex(&[2, 3, 4]);
        let inter = a.intersection(&b);
        assert_eq!(inter.dim(), a.dim() - 1);
        assert!(is_cm(&inter, FieldSpec::AllFields));
        assert!(is_cm(&a.union(&b), FieldSpec::AllFields));

        // Two triangles glued at a vertex: intersection is a point of
        // dimension 0 ≠ d−1, so the lemma does not apply; the union is
        // indeed not CM (the shared-vertex link is disconnected).
        let c = SimplicialComplex::simplex(&[3, 4, 5]);
        let glued = a.union(&c);
        assert!(!is_cm(&glued, FieldSpec::AllFields));
    }

    #[test]
    fn graph_level_examples() {
        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(!is_cm(&independence_complex(&c4), FieldSpec::AllFields));
        let p4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(is_cm(&independence_complex(&p4), FieldSpec::AllFields));
    }
}
