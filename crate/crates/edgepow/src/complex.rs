//! Facet-represented simplicial complexes and the link/star/join/union
//! calculus the classification criteria are written in.
//!
//! Two degenerate complexes are distinguished throughout: VOID has no faces
//! at all (empty facet list), while IRRELEVANT has exactly the empty face
//! (facet list `[[]]`). They behave differently under homology and the
//! Cohen-Macaulay conventions, so no operation may conflate them.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Simplicial complex stored as its facet antichain.
///
/// Canonical form: every facet is a strictly increasing vertex list, no facet
/// contains another, and the facet list is sorted. The vertex set is the
/// union of the facets; there are no "ghost" vertices outside every face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplicialComplex {
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> SimplicialComplex {
        SimplicialComplex { facets: Vec::new() }
    }

    /// The complex whose only face is the empty set.
    pub fn irrelevant() -> SimplicialComplex {
        SimplicialComplex {
            facets: vec![Vec::new()],
        }
    }

    /// One simplex and all its faces.
    pub fn simplex(face: &[usize]) -> SimplicialComplex {
        SimplicialComplex::from_facets([face.to_vec()])
    }

    /// Builds the complex generated by the given faces: duplicates and faces
    /// contained in other faces are dropped, leaving the facet antichain.
    pub fn from_facets<I>(faces: I) -> SimplicialComplex
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut cleaned: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|f| {
                let set: BTreeSet<usize> = f.into_iter().collect();
                set.into_iter().collect()
            })
            .collect();
        cleaned.sort();
        cleaned.dedup();
        // Keep only inclusion-maximal members.
        let maximal: Vec<Vec<usize>> = cleaned
            .iter()
            .filter(|f| {
                !cleaned
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();
        SimplicialComplex { facets: maximal }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Dimension: max facet size minus one; IRRELEVANT has dimension −1.
    /// Panics on VOID, which has no faces and no dimension.
    pub fn dim(&self) -> i64 {
        let largest = self
            .facets
            .iter()
            .map(|f| f.len())
            .max()
            .expect("dimension of the VOID complex is undefined");
        largest as i64 - 1
    }

    /// All facets share one cardinality. VOID and IRRELEVANT are pure.
    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.len());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Sorted union of the facets.
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// Face test: `f` (in any order) is contained in some facet. The empty
    /// set is a face of everything except VOID.
    pub fn has_face(&self, f: &[usize]) -> bool {
        let mut sorted = f.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.facets.iter().any(|facet| is_subset(&sorted, facet))
    }

    /// Every face, the empty face included; empty set for VOID.
    pub fn faces(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for facet in &self.facets {
            let k = facet.len();
            assert!(k < 26, "face enumeration limited to facets of < 26 vertices");
            for mask in 0u64..(1 << k) {
                let sub: Vec<usize> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| facet[i])
                    .collect();
                out.insert(sub);
            }
        }
        out
    }

    /// `lk_Δ F`: faces disjoint from `F` whose union with `F` is a face.
    /// VOID when `F` is not a face; its facets are `T ∖ F` over facets
    /// `T ⊇ F`.
    pub fn link(&self, f: &[usize]) -> SimplicialComplex {
        let mut sorted = f.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .filter(|t| is_subset(&sorted, t))
                .map(|t| t.iter().copied().filter(|v| !sorted.contains(v)).collect()),
        )
    }

    /// `st_Δ F`: faces whose union with `F` is a face. VOID when `F` is not
    /// a face; its facets are the facets containing `F`.
    pub fn star(&self, f: &[usize]) -> SimplicialComplex {
        let mut sorted = f.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .filter(|t| is_subset(&sorted, t))
                .cloned(),
        )
    }

    /// Simplicial join: faces are unions of a face of each factor.
    /// IRRELEVANT is the identity; VOID joined with anything is VOID.
    /// Panics when the vertex supports overlap.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mine = self.vertices();
        let theirs = other.vertices();
        if let Some(v) = mine.iter().find(|v| theirs.binary_search(v).is_ok()) {
            panic!("join requires disjoint vertex supports, both contain {v}");
        }
        SimplicialComplex::from_facets(self.facets.iter().flat_map(|a| {
            other.facets.iter().map(move |b| {
                let mut f = a.clone();
                f.extend_from_slice(b);
                f
            })
        }))
    }

    /// Face-set union, as a facet antichain.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            self.facets.iter().chain(other.facets.iter()).cloned(),
        )
    }

    /// Face-set intersection: every common face lies in some pairwise facet
    /// intersection, so those generate it.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().flat_map(|a| {
            other
                .facets
                .iter()
                .map(move |b| a.iter().copied().filter(|v| b.contains(v)).collect())
        }))
    }

    /// Subcomplex generated by the facets having at least `|V| − 1` vertices
    /// in `V`; VOID when none qualify. Meaningful for pure complexes (the
    /// degree-complex construction this mirrors assumes purity).
    pub fn delta_v(&self, v: &[usize]) -> SimplicialComplex {
        let vset: BTreeSet<usize> = v.iter().copied().collect();
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .filter(|f| f.iter().filter(|x| vset.contains(x)).count() + 1 >= vset.len())
                .cloned(),
        )
    }

    /// `⋃_{i∈V} st_Δ(V∖{i})`; VOID for empty `V` (an empty union).
    pub fn star_union(&self, v: &[usize]) -> SimplicialComplex {
        let vset: BTreeSet<usize> = v.iter().copied().collect();
        let mut acc = SimplicialComplex::void();
        for &i in &vset {
            let rest: Vec<usize> = vset.iter().copied().filter(|&x| x != i).collect();
            acc = acc.union(&self.star(&rest));
        }
        acc
    }

    /// Some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        self.vertices()
            .into_iter()
            .any(|v| self.facets.iter().all(|f| f.binary_search(&v).is_ok()))
    }

    /// Every edge `{u,v}` of the complex is contractible: any face extendable
    /// by `u` and by `v` separately is extendable by both at once.
    pub fn is_contractible_complex(&self) -> bool {
        let faces = self.faces();
        let edges: Vec<&Vec<usize>> = faces.iter().filter(|f| f.len() == 2).collect();
        for edge in edges {
            let (u, v) = (edge[0], edge[1]);
            for f in &faces {
                if f.contains(&u) || f.contains(&v) {
                    continue;
                }
                let with = |extra: &[usize]| {
                    let mut g = f.clone();
                    g.extend_from_slice(extra);
                    g.sort_unstable();
                    g
                };
                if faces.contains(&with(&[u]))
                    && faces.contains(&with(&[v]))
                    && !faces.contains(&with(&[u, v]))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Applies an injective vertex relabeling.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> SimplicialComplex {
        let out = SimplicialComplex::from_facets(
            self.facets
                .iter()
                .map(|f| f.iter().map(|&v| map(v)).collect()),
        );
        assert_eq!(
            out.facets.len(),
            self.facets.len(),
            "relabeling must be injective"
        );
        out
    }

    /// Parses the complex text format: one facet per line (whitespace-
    /// separated vertices), or a single literal line `VOID` / `IRRELEVANT`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<SimplicialComplex, ComplexError> {
        let mut facets: Vec<Vec<usize>> = Vec::new();
        let mut literal: Option<SimplicialComplex> = None;
        let mut content_lines = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            content_lines += 1;
            match line {
                "VOID" => literal = Some(SimplicialComplex::void()),
                "IRRELEVANT" => literal = Some(SimplicialComplex::irrelevant()),
                _ => {
                    let facet: Result<Vec<usize>, _> = line
                        .split_whitespace()
                        .map(|t| t.parse::<usize>())
                        .collect();
                    match facet {
                        Ok(f) if f.iter().all(|&v| v >= 1) => facets.push(f),
                        _ => {
                            return Err(ComplexError::Parse {
                                line: idx + 1,
                                msg: "expected positive vertex labels".into(),
                            })
                        }
                    }
                }
            }
        }
        match (literal, facets.is_empty()) {
            (Some(c), true) if content_lines == 1 => Ok(c),
            (Some(_), _) => Err(ComplexError::Parse {
                line: 0,
                msg: "VOID/IRRELEVANT must be the only content line".into(),
            }),
            (None, true) => Err(ComplexError::Parse {
                line: 0,
                msg: "empty input; write facets or the literal VOID/IRRELEVANT".into(),
            }),
            (None, false) => Ok(SimplicialComplex::from_facets(facets)),
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return writeln!(f, "VOID");
        }
        if self.is_irrelevant() {
            return writeln!(f, "IRRELEVANT");
        }
        for facet in &self.facets {
            let words: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", words.join(" "))?;
        }
        Ok(())
    }
}

/// Faces of the independence complex are the independent sets of `G`; its
/// facets are the maximal independent sets. The empty graph gives IRRELEVANT.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_facets(g.maximal_independent_sets())
}

/// Both slices sorted ascending.
fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut i = 0;
    for &x in small {
        while i < big.len() && big[i] < x {
            i += 1;
        }
        if i >= big.len() || big[i] != x {
            return false;
        }
        i += 1;
    }
    true
}
