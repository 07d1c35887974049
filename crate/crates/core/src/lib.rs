//! Noncrossing partitions of regular polygons and their Dyck-path codes.
//!
//! A noncrossing partition of `P_n` together with its Kreweras complement
//! labels the `2n`-th roots of unity; reading the labels around the circle
//! gives a Dyck path, and this is a bijection. The two local path moves
//! (peak insertion and sub-path lift) translate into partition moves
//! (vertex insertion and slicing), and random application of them grows a
//! coupled sequence of uniform partitions. Pair partitions get the same
//! treatment through a halved path.
//!
//! The [`lamination`] module realises partitions as chord sets of the unit
//! disk and measures sampled Hausdorff distances between them.

pub mod dyck;
pub mod encoding;
pub mod enumerate;
pub mod error;
pub mod experiment;
pub mod growth;
pub mod lamination;
pub mod moves;
pub mod partition;
pub mod svg;

pub use dyck::DyckPath;
pub use encoding::{decode, decode_pair, encode, encode_pair, pair_to_ncp, CombinedLabeling};
pub use error::{Error, Result};
pub use growth::{grow_ncp, grow_pair, replay, GrowthMove, GrowthRng, GrowthTrajectory, Model, MoveKind};
pub use lamination::{directed_hausdorff, hausdorff, lamination_of, Chord, Lamination, Turn};
pub use moves::{insert_long_chord, insert_short_chord, insert_vertex, slice};
pub use partition::{Frame, NoncrossingPartition, PairPartition};
