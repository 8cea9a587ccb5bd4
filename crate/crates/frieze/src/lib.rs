//! Exact-arithmetic friezes of plane polygon measurements.
//!
//! A configuration of `n` points on the plane is described, up to
//! orientation-preserving rigid motions, by the squared distances between
//! pairs of points and the signed areas of oriented triples. Arranged on a
//! half-integer strip, those measurements form a *Heronian frieze*: an array
//! in which every local diamond of ten entries satisfies Heron's formula and
//! its companion quadrilateral identities, so that the whole array is
//! governed by rational recurrences. Dropping the signed areas leaves a
//! *Cayley-Menger frieze* of squared distances, where each diamond of six
//! entries has a vanishing Cayley-Menger determinant and unambiguous
//! propagation needs an extra degree-one *coherence* condition.
//!
//! Everything here is computed over exact rationals: propagation,
//! verification (diamond, boundary, coherence, glide and periodicity checks),
//! conversion between the two frieze kinds, polygon reconstruction, and the
//! symbolic Laurent expansion of an arbitrary measurement in terms of the
//! measurement data of a polygon triangulation, with certification that
//! denominators only involve squared lengths of crossing diagonals.
//!
//! The `frieze` binary exposes the same operations over JSON files for
//! scripted use; see the crate README.

pub mod diamonds;
mod error;
pub mod exact;
pub mod frieze;
pub mod geometry;
pub mod laurent;
pub mod render;
pub mod triangulation;

pub use error::{Error, Pos};
pub use exact::{node_in_strip, rat_sqrt, LineIdx, NodeIdx, Orientation, Rat};
pub use frieze::{CMFrieze, CMPath, HTraversingPath, HeronianFrieze, Window};
pub use geometry::{MeasurementSet, Point, Polygon};
pub use laurent::{LaurentPoly, MeasSym};
pub use triangulation::{Relabel, TreeOrder, TriCycle};
