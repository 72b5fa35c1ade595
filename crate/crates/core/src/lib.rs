//! Strong formal subdivisions of Eulerian posets, non-Hausdorff mapping
//! cylinders and the cd-index, in exact arithmetic.

mod bits;
pub mod constructions;
pub mod corpus;
pub mod cd;
pub mod cli;
pub mod cylinder;
pub mod format;
pub mod homology;
pub mod linalg;
pub mod ncpoly;
pub mod poset;
pub mod subdivision;

pub use cylinder::{CylinderError, JoinTriple, SfsSquare};
pub use ncpoly::{Alphabet, NCPoly};
pub use poset::{Direction, IntervalKind, Poset, PosetError, RankFunction, RankedPoset};
pub use subdivision::{PosetMap, SfsError, SfsMethod};
