//! Strict static expansion, shortest strict paths, and reachability.

mod expansion;
mod reach;
mod ssstp;
mod traversal;

pub use expansion::{ArcKind, ExpansionArc, ExpansionNode, NodeId, StrictStaticExpansion};
pub use reach::{find_path, is_reachable, is_separator, nonstrict_reachable, strict_earliest_arrival};
pub(crate) use reach::{find_path_masked, reachable_masked};
pub use ssstp::{shortest_strict_path, ssstp, ssstp_explicit, ssstp_to_sink, time_reversed, DistanceTable};
pub use traversal::{ssstp_traversal, DirectedTemporalGraph, TraversalArc};
