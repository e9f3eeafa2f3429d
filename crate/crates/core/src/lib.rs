//! Exact construction, decomposition and verification of the Voronoi cell of
//! the `A_n` root lattice.
//!
//! Everything is computed over arbitrary-precision rationals (and `Q(√(n+1))`
//! for the isometric projection to `R^n`), so every identity is checked by
//! exact equality. Coordinate indices are 0-based in the API; serialized and
//! printed index sets are 1-based.

pub mod error;
pub mod exact_linalg;
pub mod export;
pub mod lattice;
mod limits;
pub mod sample;
pub mod section;
pub mod verify;
pub mod voronoi;
pub mod zonotope;

pub use error::{Error, Result};
pub use exact_linalg::{
    format_rat, gram_volume_sq, int, parse_rat, rat, shift_matrix, Perm, QuadExt, QuadMat, Rat,
    RatMat, RatVec, Simplex, Solution,
};
pub use export::{CellReport, Frame, Listing};
pub use lattice::{LatticeFamily, LatticePoint, LatticeSpec, ProjectionBundle};
pub use limits::Limits;
pub use voronoi::{Facet, FundamentalSimplex, LocationReport, Rhombus};
pub use section::{HalfSpace, Polytope};
pub use zonotope::Zonotope;
