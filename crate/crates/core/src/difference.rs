//! Difference digraph of two orientations under a vertex bijection, and its
//! Eulerian-style decompositions into dicycles or undirected cycles.

use crate::graph_core::{Automorphism, MultGraph, VertexId};
use crate::orientation::{Arc, Orientation, OrientedCycle};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// The digraph on the vertices of the multiplication whose arcs are exactly
/// the arcs `u -> v` of `D` with `f(v) -> f(u)` in `D2`. Reversing all of its
/// arcs in `D` yields an orientation that agrees with `D2` pulled back along
/// `f`; it therefore carries every disagreement between the two orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffDigraph {
    arcs: BTreeSet<Arc>,
}

impl DiffDigraph {
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn outdegree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.tail == v).count()
    }

    pub fn indegree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.head == v).count()
    }

    /// Vertices incident with at least one arc.
    pub fn support(&self) -> BTreeSet<VertexId> {
        self.arcs.iter().flat_map(|a| [a.tail, a.head]).collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.support().iter().all(|&v| self.outdegree(v) == self.indegree(v))
    }

    /// Partitions the arc set into dicycles. Every extracted cycle runs along
    /// its stored order, so replaying the reversals on `D` is well defined.
    /// Errors with `NotBalanced` if some vertex has unequal in- and outdegree.
    pub fn dicycle_decomposition(&self) -> Result<Vec<OrientedCycle>> {
        for v in self.support() {
            let (od, id) = (self.outdegree(v), self.indegree(v));
            if od != id {
                return Err(Error::NotBalanced(v, od, id));
            }
        }
        let mut out_adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
        for a in &self.arcs {
            out_adj.entry(a.tail).or_default().insert(a.head);
        }
        let mut cycles = Vec::new();
        loop {
            let Some((&start, _)) = out_adj.iter().find(|(_, hs)| !hs.is_empty()) else {
                break;
            };
            // walk by smallest head until a vertex repeats, then cut the loop
            let mut walk = vec![start];
            let mut pos: BTreeMap<VertexId, usize> = BTreeMap::from([(start, 0)]);
            let cycle = loop {
                let cur = *walk.last().unwrap();
                let next = *out_adj[&cur].iter().next().expect("balanced walk cannot stall");
                if let Some(&i) = pos.get(&next) {
                    break walk[i..].to_vec();
                }
                pos.insert(next, walk.len());
                walk.push(next);
            };
            let k = cycle.len();
            for t in 0..k {
                out_adj.get_mut(&cycle[t]).unwrap().remove(&cycle[(t + 1) % k]);
            }
            cycles.push(OrientedCycle::new(cycle, vec![true; k])?);
        }
        cycles.sort();
        Ok(cycles)
    }

    /// Partitions the arc set into cycles of the underlying graph, keeping the
    /// arc directions as recorded (i.e. as in `D`). Errors with `OddDegree` if
    /// some vertex is incident with an odd number of arcs.
    pub fn cycle_decomposition_undirected(&self) -> Result<Vec<OrientedCycle>> {
        for v in self.support() {
            if (self.outdegree(v) + self.indegree(v)) % 2 != 0 {
                return Err(Error::OddDegree(v));
            }
        }
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
        for a in &self.arcs {
            adj.entry(a.tail).or_default().insert(a.head);
            adj.entry(a.head).or_default().insert(a.tail);
        }
        let mut cycles = Vec::new();
        loop {
            let Some((&start, _)) = adj.iter().find(|(_, ns)| !ns.is_empty()) else {
                break;
            };
            let mut walk = vec![start];
            let mut pos: BTreeMap<VertexId, usize> = BTreeMap::from([(start, 0)]);
            let mut prev: Option<VertexId> = None;
            let cycle = loop {
                let cur = *walk.last().unwrap();
                // never backtrack over the edge just used; even degrees
                // guarantee another exit exists
                let next = adj[&cur]
                    .iter()
                    .copied()
                    .find(|&n| Some(n) != prev)
                    .expect("even-degree walk cannot stall");
                if let Some(&i) = pos.get(&next) {
                    break walk[i..].to_vec();
                }
                pos.insert(next, walk.len());
                walk.push(next);
                prev = Some(cur);
            };
            let k = cycle.len();
            let mut forward = Vec::with_capacity(k);
            for t in 0..k {
                let (u, v) = (cycle[t], cycle[(t + 1) % k]);
                adj.get_mut(&u).unwrap().remove(&v);
                adj.get_mut(&v).unwrap().remove(&u);
                forward.push(self.arcs.contains(&Arc::new(u, v)));
            }
            cycles.push(OrientedCycle::new(cycle, forward)?);
        }
        cycles.sort();
        Ok(cycles)
    }
}

/// Builds the difference digraph of `D` and `D2` under the bijection `f`:
/// `u -> v` is an arc iff `u -> v` in `D` and `f(v) -> f(u)` in `D2`.
///
/// The result never contains a digon, and at every vertex `v` it satisfies
/// `od(v) - id(v) = od_D(v) - od_D2(f(v))`; the latter is checked.
pub fn build_ddg(
    m: &MultGraph,
    d: &Orientation,
    d2: &Orientation,
    f: &Automorphism,
) -> DiffDigraph {
    let mut arcs = BTreeSet::new();
    for a in d.arcs() {
        if d2.has_arc(f.apply(a.head), f.apply(a.tail)) {
            arcs.insert(a);
        }
    }
    let ddg = DiffDigraph { arcs };
    for &v in m.vertices() {
        let lhs = ddg.outdegree(v) as i64 - ddg.indegree(v) as i64;
        let rhs = d.outdegree(v) as i64 - d2.outdegree(f.apply(v)) as i64;
        debug_assert_eq!(lhs, rhs, "degree identity fails at {v}");
    }
    ddg
}

/// Replays a decomposition: reverses each cycle's recorded arcs in `d`. With
/// the identity bijection this must land exactly on `d2`; callers use it as a
/// self-check before emitting scripts.
pub fn apply_decomposition(d: &Orientation, cycles: &[OrientedCycle]) -> Result<Orientation> {
    let mut cur = d.clone();
    for c in cycles {
        cur = cur.flip_edges_of(c.vertices())?;
    }
    Ok(cur)
}
