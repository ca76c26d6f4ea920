//! Exact combinatorial classification of second ordinary and symbolic powers
//! of edge ideals.
//!
//! The library decides whether `S/I(G)^2` and `S/I(G)^(2)` are
//! Cohen-Macaulay, Buchsbaum, or generalized Cohen-Macaulay purely from the
//! combinatorics of the graph `G`: independence complexes, links and stars,
//! reduced simplicial homology over `Z` (Smith normal form), and degree
//! complexes of monomial ideals given by intersections of powers of face
//! primes. Every classification criterion is computed by at least two
//! independent routes and the routes are required to agree.
//!
//! Modules follow the pipeline order: [`graph`] and [`complex`] build the
//! combinatorial objects, [`homology`] and [`ringprops`] decide homological
//! properties, [`ideals`] handles monomial ideals and degree complexes,
//! [`power2`] assembles the actual classification criteria, and [`cli`]
//! exposes everything as commands.

pub mod cli;
pub mod complex;
pub mod graph;
pub mod homology;
pub mod ideals;
pub mod power2;
pub mod ringprops;

pub use complex::SimplicialComplex;
pub use graph::Graph;
pub use ringprops::FieldSpec;
