//! Shortest paths in directed temporal graphs whose arcs carry traversal times.
//!
//! An arc `(v -> w, t, phi)` leaves `v` at `t` and reaches `w` at label
//! `t + phi - 1`; a following arc must carry a strictly larger label. Arcs
//! with `phi > 1` are split through a fresh connector vertex: the original
//! arc `v -> x` keeps label `t` and weight `phi`, the connector arc `x -> w`
//! gets label `t + phi - 1` and weight 0. Connector arcs wait in per-label
//! buckets until the scan reaches their label, so the split arc list stays
//! sorted without a second sort.

use super::expansion::{RawArc, StrictStaticExpansion};
use super::ssstp::node_distances;
use crate::error::GraphError;
use crate::graph::{Time, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraversalArc {
    pub from: Vertex,
    pub to: Vertex,
    pub t: Time,
    pub traversal: Time,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedTemporalGraph {
    n: usize,
    tau: Time,
    arcs: Vec<TraversalArc>,
}

impl DirectedTemporalGraph {
    pub fn new(
        n: usize,
        tau: Time,
        arcs: impl IntoIterator<Item = TraversalArc>,
    ) -> Result<Self, GraphError> {
        let mut arcs: Vec<TraversalArc> = arcs.into_iter().collect();
        for a in &arcs {
            for x in [a.from, a.to] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a.from == a.to {
                return Err(GraphError::SelfLoop { vertex: a.from });
            }
            if a.t == 0 || a.t > tau {
                return Err(GraphError::LabelOutOfRange { label: a.t, tau });
            }
            if a.traversal == 0 {
                return Err(GraphError::ZeroTraversal);
            }
        }
        arcs.sort_unstable_by_key(|a| (a.t, a.from, a.to, a.traversal));
        arcs.dedup();
        Ok(DirectedTemporalGraph { n, tau, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> Time {
        self.tau
    }

    /// Arcs sorted by label.
    pub fn arcs(&self) -> &[TraversalArc] {
        &self.arcs
    }
}

/// The split arc list: vertices `n..` are connectors, one per arc with
/// `traversal > 1`. Sorted by label.
pub(crate) fn split_arcs(d: &DirectedTemporalGraph) -> (usize, Vec<RawArc>) {
    let mut out = Vec::with_capacity(2 * d.arcs.len());
    let mut next_vertex = d.n;
    // Connector labels can exceed tau; buckets cover the full range.
    let horizon = d
        .arcs
        .iter()
        .map(|a| a.t + a.traversal - 1)
        .max()
        .unwrap_or(0) as usize;
    let mut buckets: Vec<Vec<RawArc>> = vec![Vec::new(); horizon + 1];
    let mut flushed = 0usize;
    let mut flush_upto = |out: &mut Vec<RawArc>, buckets: &mut Vec<Vec<RawArc>>, upto: usize| {
        while flushed < upto {
            flushed += 1;
            out.append(&mut buckets[flushed]);
        }
    };
    for a in &d.arcs {
        // First arc with label t: release connector arcs up to t.
        flush_upto(&mut out, &mut buckets, a.t as usize);
        if a.traversal == 1 {
            out.push(RawArc { from: a.from, to: a.to, t: a.t, weight: 1 });
        } else {
            let x = next_vertex;
            next_vertex += 1;
            out.push(RawArc { from: a.from, to: x, t: a.t, weight: a.traversal });
            let t2 = a.t + a.traversal - 1;
            buckets[t2 as usize].push(RawArc { from: x, to: a.to, t: t2, weight: 0 });
        }
    }
    flush_upto(&mut out, &mut buckets, horizon);
    (next_vertex, out)
}

/// Minimum total traversal time of a path from `s` to each vertex.
pub fn ssstp_traversal(d: &DirectedTemporalGraph, s: Vertex) -> Vec<Option<u64>> {
    let (n_split, raw) = split_arcs(d);
    let h = StrictStaticExpansion::from_raw(n_split, s, None, &raw);
    let (node_dist, _) = node_distances(&h);
    (0..d.n)
        .map(|v| {
            if v == s {
                return Some(0);
            }
            h.column(v)
                .iter()
                .map(|&(_, id)| node_dist[id])
                .min()
                .filter(|&x| x != u64::MAX)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TemporalGraph;
    use crate::pathfinding::ssstp;

    fn arc(from: Vertex, to: Vertex, t: Time, traversal: Time) -> TraversalArc {
        TraversalArc { from, to, t, traversal }
    }

    #[test]
    fn single_slow_arc() {
        let d = DirectedTemporalGraph::new(2, 3, [arc(0, 1, 1, 3)]).unwrap();
        assert_eq!(ssstp_traversal(&d, 0), vec![Some(0), Some(3)]);
    }

    #[test]
    fn slow_arc_delays_continuation() {
        // 0 -> 1 at 1 with phi 2 reaches 1 at label 2; 1 -> 2 at 2 is too early.
        let d = DirectedTemporalGraph::new(3, 3, [arc(0, 1, 1, 2), arc(1, 2, 2, 1)]).unwrap();
        assert_eq!(ssstp_traversal(&d, 0), vec![Some(0), Some(2), None]);
        let d = DirectedTemporalGraph::new(3, 3, [arc(0, 1, 1, 2), arc(1, 2, 3, 1)]).unwrap();
        assert_eq!(ssstp_traversal(&d, 0), vec![Some(0), Some(2), Some(3)]);
    }

    #[test]
    fn direction_matters() {
        let d = DirectedTemporalGraph::new(2, 1, [arc(1, 0, 1, 1)]).unwrap();
        assert_eq!(ssstp_traversal(&d, 0), vec![Some(0), None]);
    }

    #[test]
    fn unit_times_match_hop_counts() {
        let tg = TemporalGraph::from_triples(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 2)]).unwrap();
        let arcs = tg.edges().iter().flat_map(|e| [arc(e.u, e.v, e.t, 1), arc(e.v, e.u, e.t, 1)]);
        let d = DirectedTemporalGraph::new(4, tg.tau(), arcs).unwrap();
        let hops = ssstp(&tg, 0);
        let times = ssstp_traversal(&d, 0);
        for v in 0..4 {
            assert_eq!(times[v], hops.get(v).map(|x| x as u64));
        }
    }

    #[test]
    fn split_list_is_sorted() {
        let d = DirectedTemporalGraph::new(
            4,
            4,
            [arc(0, 1, 1, 4), arc(1, 2, 2, 2), arc(2, 3, 4, 1), arc(0, 2, 1, 2)],
        )
        .unwrap();
        let (n_split, raw) = split_arcs(&d);
        assert_eq!(n_split, 4 + 3);
        assert!(raw.windows(2).all(|w| w[0].t <= w[1].t));
        assert_eq!(raw.len(), 4 + 3);
    }

    #[test]
    fn rejects_zero_traversal() {
        assert_eq!(
            DirectedTemporalGraph::new(2, 1, [arc(0, 1, 1, 0)]).unwrap_err(),
            GraphError::ZeroTraversal
        );
    }
}
