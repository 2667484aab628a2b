//! Exact matroid and graph polynomials.
//!
//! Matroids are rank oracles ([`matroid::Matroid`]); the Tutte polynomial is
//! computed exactly ([`tutte`]) and every other polynomial is a substitution
//! into it ([`invariants`]). Coefficient sequences are tested for
//! log-concavity ([`logconcave`]), and the Tutte evaluations attached to
//! vector configurations are checked against zonotopal P-spaces built by
//! exact linear algebra ([`zonotopal`]).
//!
//! ```
//! use matroidal::{invariants::MatroidInvariants, matroid::Matroid};
//!
//! let u26 = Matroid::uniform(2, 6).unwrap();
//! let inv = MatroidInvariants::new(&u26).unwrap();
//! assert_eq!(inv.f_polynomial().pretty("q"), "q^2 + 6q + 15");
//! ```

pub mod corpus;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod logconcave;
pub mod matroid;
pub mod poly;
pub mod spec;
pub mod tutte;
pub mod zonotopal;

pub use error::{Error, Result};
