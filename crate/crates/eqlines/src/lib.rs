//! Exact computations with equiangular line systems.
//!
//! Everything is done in exact arithmetic: Gram matrices live over ℚ or a
//! real quadratic field ℚ(√d), positive semidefiniteness is decided by
//! symmetric elimination with certificates, and combinatorial searches
//! (clique, graph enumeration, integer scans) are exhaustive.
//!
//! Sign convention used throughout: `G = I + αA` where `A` is the Seidel
//! matrix, and two vertices of the Seidel graph are adjacent exactly when
//! their inner product is `−α` (`A[i][j] = −1`).

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod exactnum;
pub mod linalg;
pub mod par;
pub mod pillars;
pub mod saturate;
pub mod seidel;
