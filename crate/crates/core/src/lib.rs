//! Exact combinatorial commutative algebra for graphs: cover ideals,
//! symbolic powers and polarization, the `G_k` construction, graded Betti
//! numbers via simplicial homology, and checkers for the structural results
//! relating them.

pub mod error;
mod format;
pub mod graph;
mod homology;
mod linalg;
pub mod monomial;
mod quotients;
pub mod resolutions;
pub mod search;
pub mod simplicial;
pub mod theorems;
pub mod var;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph, VwcLabeling};
pub use monomial::{cover_ideal, edge_ideal, Monomial, MonomialIdeal};
pub use quotients::is_linear_quotient_order;
pub use resolutions::{BettiTable, FieldSpec, Subject};
pub use search::{Search, DEFAULT_BUDGET};
pub use simplicial::SimplicialComplex;
pub use var::Var;
