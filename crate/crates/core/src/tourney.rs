//! Multipartite-tournament specializations: transitive-triangle refinements of
//! 3- and 4-cycle reversals, and the tripartite triangle refinement.

use crate::graph_core::{MultGraph, VertexId};
use crate::orientation::{Orientation, OrientedCycle};
use crate::refine::{FamilyTag, Script, Step};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A transitive triangle given by its roles. Arcs source -> middle,
/// middle -> sink and source -> sink; the three vertices lie in three
/// distinct partite sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tt3Pattern {
    pub source: VertexId,
    pub middle: VertexId,
    pub sink: VertexId,
}

impl Tt3Pattern {
    pub fn new(d: &Orientation, source: VertexId, middle: VertexId, sink: VertexId) -> Result<Self> {
        let p = Tt3Pattern { source, middle, sink };
        p.to_step().check(d)?;
        Ok(p)
    }

    pub fn to_step(self) -> Step {
        Step { vertices: vec![self.source, self.middle, self.sink], tag: FamilyTag::Tt3 }
    }
}

fn tt3_step(source: VertexId, middle: VertexId, sink: VertexId) -> Step {
    Step { vertices: vec![source, middle, sink], tag: FamilyTag::Tt3 }
}

fn partite_count(m: &MultGraph) -> usize {
    m.multiplicities().len()
}

fn require_tournament(m: &MultGraph) -> Result<()> {
    if m.parent().is_complete() {
        Ok(())
    } else {
        Err(Error::BaseFamilyMismatch)
    }
}

/// Bounded breadth-first search for a TT3-reversal sequence inside `window`
/// flipping exactly `flip` (edges as normalized pairs) and nothing else.
fn tt3_search(
    m: &MultGraph,
    d: &Orientation,
    window: &[VertexId],
    flip: &BTreeSet<(VertexId, VertexId)>,
    cap: usize,
) -> Option<Vec<Step>> {
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (i, &a) in window.iter().enumerate() {
        for &b in window.iter().skip(i + 1) {
            if m.adjacent(a, b) {
                edges.push(if a < b { (a, b) } else { (b, a) });
            }
        }
    }
    if edges.len() > 20 {
        return None;
    }
    let eidx: BTreeMap<(VertexId, VertexId), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut target = 0u32;
    for e in flip {
        target |= 1 << *eidx.get(e)?;
    }
    let has_arc = |state: u32, a: VertexId, b: VertexId| -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        let i = eidx[&e];
        d.has_arc(a, b) != (state >> i & 1 == 1)
    };
    // all ordered triples that can host a TT3
    let mut triples = Vec::new();
    for &a in window {
        for &b in window {
            for &c in window {
                if a != b
                    && b != c
                    && a != c
                    && m.adjacent(a, b)
                    && m.adjacent(b, c)
                    && m.adjacent(a, c)
                {
                    triples.push((a, b, c));
                }
            }
        }
    }
    let mask_of = |a: VertexId, b: VertexId| -> u32 {
        let e = if a < b { (a, b) } else { (b, a) };
        1 << eidx[&e]
    };
    let mut prev: BTreeMap<u32, (u32, (VertexId, VertexId, VertexId))> = BTreeMap::new();
    let mut dist: BTreeMap<u32, usize> = BTreeMap::from([(0, 0)]);
    let mut queue = VecDeque::from([0u32]);
    while let Some(state) = queue.pop_front() {
        if state == target && state != 0 {
            break;
        }
        if dist[&state] == cap {
            continue;
        }
        for &(a, b, c) in &triples {
            if has_arc(state, a, b) && has_arc(state, b, c) && has_arc(state, a, c) {
                let next = state ^ mask_of(a, b) ^ mask_of(b, c) ^ mask_of(a, c);
                if !dist.contains_key(&next) {
                    dist.insert(next, dist[&state] + 1);
                    prev.insert(next, (state, (a, b, c)));
                    queue.push_back(next);
                }
            }
        }
    }
    if !dist.contains_key(&target) || target == 0 {
        return None;
    }
    let mut steps = Vec::new();
    let mut cur = target;
    while cur != 0 {
        let (p, (a, b, c)) = prev[&cur];
        steps.push(tt3_step(a, b, c));
        cur = p;
    }
    steps.reverse();
    Some(steps)
}

fn cycle_edge_set(verts: &[VertexId]) -> BTreeSet<(VertexId, VertexId)> {
    let k = verts.len();
    (0..k)
        .map(|t| {
            let (a, b) = (verts[t], verts[(t + 1) % k]);
            if a < b { (a, b) } else { (b, a) }
        })
        .collect()
}

/// Reverses a 3-dicycle of a multipartite tournament by transitive-triangle
/// reversals, via bounded certificate search over the cycle plus one
/// auxiliary vertex.
pub fn tt3_refine_c3(m: &MultGraph, t: &Orientation, z: &OrientedCycle) -> Result<Script> {
    require_tournament(m)?;
    if z.len() != 3 || !z.is_directed() {
        return Err(Error::BaseFamilyMismatch);
    }
    let on: BTreeSet<VertexId> = z.vertices().iter().copied().collect();
    let aux: Vec<VertexId> = m
        .vertices()
        .iter()
        .copied()
        .filter(|v| !on.contains(v))
        .collect();
    if aux.is_empty() {
        return Err(Error::NoAuxiliaryVertex);
    }
    let flip = cycle_edge_set(z.vertices());
    const CAP: usize = 12;
    for a in aux {
        let mut window = z.vertices().to_vec();
        window.push(a);
        if let Some(steps) = tt3_search(m, t, &window, &flip, CAP) {
            let end = replay(t, &steps)?;
            debug_assert_eq!(end, t.flip_edges_of(z.vertices())?);
            return Ok(Script::new(steps, t, &end));
        }
    }
    Err(Error::SearchExhausted(CAP))
}

fn replay(d: &Orientation, steps: &[Step]) -> Result<Orientation> {
    let mut cur = d.clone();
    for s in steps {
        cur = s.apply(&cur)?;
    }
    Ok(cur)
}

/// The four tabulated 4-step scripts for reversing a 4-dicycle `u1 u2 u3 u4`
/// through an outside vertex `v`, keyed by the arc pattern of `v` against the
/// cycle. Triples are (source, middle, sink) at application time.
fn case_script(pattern: [bool; 4], u: &[VertexId], v: VertexId) -> Vec<Step> {
    let (u1, u2, u3, u4) = (u[0], u[1], u[2], u[3]);
    match pattern {
        // v -> {u1, u2, u3, u4}
        [true, true, true, true] => vec![
            tt3_step(v, u2, u3),
            tt3_step(v, u4, u1),
            tt3_step(u1, u2, v),
            tt3_step(u3, u4, v),
        ],
        // {u1, u3} -> v -> {u2, u4}
        [false, true, false, true] => vec![
            tt3_step(u3, v, u4),
            tt3_step(u4, u1, v),
            tt3_step(v, u1, u2),
            tt3_step(u2, v, u3),
        ],
        // u4 -> v -> {u1, u2, u3}
        [true, true, true, false] => vec![
            tt3_step(v, u2, u3),
            tt3_step(u3, u4, v),
            tt3_step(v, u4, u1),
            tt3_step(u1, u2, v),
        ],
        // {u1, u2} -> v -> {u3, u4}
        [false, false, true, true] => vec![
            tt3_step(v, u3, u4),
            tt3_step(u4, u1, v),
            tt3_step(u2, u3, v),
            tt3_step(v, u1, u2),
        ],
        _ => unreachable!("pattern not normalized: {pattern:?}"),
    }
}

/// Maps a script found on the converse tournament back: reversing the
/// converse of a transitive triangle flips the same three edges, with source
/// and sink swapped.
fn converse_map(steps: Vec<Step>) -> Vec<Step> {
    steps
        .into_iter()
        .map(|s| {
            assert_eq!(s.tag, FamilyTag::Tt3);
            tt3_step(s.vertices[2], s.vertices[1], s.vertices[0])
        })
        .collect()
}

/// Reverses a 4-dicycle of an n-partite tournament, n >= 3, by transitive
/// triangle reversals. Uses the 2-step script when some opposite pair of the
/// cycle spans two partite sets, else one of the four tabulated scripts
/// through a third-partite vertex (after rotation, and duality when the
/// vertex beats at most one cycle vertex).
pub fn tt3_refine_c4(m: &MultGraph, t: &Orientation, z: &OrientedCycle) -> Result<Script> {
    require_tournament(m)?;
    if z.len() != 4 || !z.is_directed() {
        return Err(Error::BaseFamilyMismatch);
    }
    if partite_count(m) < 3 {
        return Err(Error::TooFewPartiteSets(3, partite_count(m)));
    }
    let steps = tt3_c4_steps(m, t, z.vertices())?;
    let end = replay(t, &steps)?;
    debug_assert_eq!(end, t.flip_edges_of(z.vertices())?);
    Ok(Script::new(steps, t, &end))
}

fn tt3_c4_steps(m: &MultGraph, t: &Orientation, verts: &[VertexId]) -> Result<Vec<Step>> {
    // run along the dicycle
    let u: Vec<VertexId> = if t.has_arc(verts[0], verts[1]) {
        verts.to_vec()
    } else {
        vec![verts[0], verts[3], verts[2], verts[1]]
    };
    debug_assert!((0..4).all(|i| t.has_arc(u[i], u[(i + 1) % 4])));
    // 2-step script at a cross-partite opposite pair, rotated so the chord
    // leaves the first vertex
    for r in 0..4 {
        let w: Vec<VertexId> = (0..4).map(|i| u[(r + i) % 4]).collect();
        if w[0].partite != w[2].partite && t.has_arc(w[0], w[2]) {
            return Ok(vec![tt3_step(w[0], w[1], w[2]), tt3_step(w[2], w[3], w[0])]);
        }
    }
    // both opposite pairs are same-partite: go through a third partite set
    let on: BTreeSet<usize> = u.iter().map(|x| x.partite).collect();
    debug_assert_eq!(on.len(), 2);
    let v = m
        .vertices()
        .iter()
        .copied()
        .find(|x| !on.contains(&x.partite))
        .ok_or(Error::TooFewPartiteSets(3, partite_count(m)))?;
    let pattern: Vec<bool> = (0..4).map(|i| t.has_arc(v, u[i])).collect();
    let weight = pattern.iter().filter(|&&b| b).count();
    if weight <= 1 {
        // duality: solve on the converse, traverse the cycle backwards there
        let tc = t.converse();
        let rev: Vec<VertexId> = vec![u[0], u[3], u[2], u[1]];
        return Ok(converse_map(tt3_c4_steps(m, &tc, &rev)?));
    }
    // rotate the labels so the pattern is one of the tabulated ones
    let rot = |r: usize| -> ([bool; 4], Vec<VertexId>) {
        let p: Vec<bool> = (0..4).map(|i| pattern[(r + i) % 4]).collect();
        let w: Vec<VertexId> = (0..4).map(|i| u[(r + i) % 4]).collect();
        ([p[0], p[1], p[2], p[3]], w)
    };
    let canonical: &[[bool; 4]] = &[
        [true, true, true, true],
        [false, true, false, true],
        [true, true, true, false],
        [false, false, true, true],
    ];
    for r in 0..4 {
        let (p, w) = rot(r);
        if canonical.contains(&p) {
            return Ok(case_script(p, &w, v));
        }
    }
    unreachable!("every weight >= 2 pattern rotates into the table")
}

/// Reverses an orientation of a 3- or 4-cycle in an n-partite tournament,
/// n >= 4, by transitive triangle reversals: induction on the number of
/// backward arcs, correcting one backward arc through an outside vertex
/// before and after reversing the straightened cycle.
pub fn tt3_refine_oriented(m: &MultGraph, t: &Orientation, f: &OrientedCycle) -> Result<Script> {
    require_tournament(m)?;
    let n = partite_count(m);
    if n < 4 {
        return Err(Error::TooFewPartiteSets(4, n));
    }
    let steps = match f.len() {
        3 => {
            if f.is_directed() {
                tt3_refine_c3(m, t, f)?.steps
            } else {
                // a non-directed triangle is itself a transitive triangle
                let (s, mid, k) = f.tt3_roles().expect("non-directed 3-cycle is a TT3");
                vec![tt3_step(s, mid, k)]
            }
        }
        4 => oriented4(m, t, f.vertices())?,
        k => return Err(Error::FamilyInfeasible(k)),
    };
    let end = replay(t, &steps)?;
    debug_assert_eq!(end, t.flip_edges_of(f.vertices())?);
    Ok(Script::new(steps, t, &end))
}

fn oriented4(m: &MultGraph, t: &Orientation, verts: &[VertexId]) -> Result<Vec<Step>> {
    let k = verts.len();
    let backward: Vec<usize> = (0..k)
        .filter(|&i| t.has_arc(verts[(i + 1) % k], verts[i]))
        .collect();
    if backward.is_empty() || backward.len() == k {
        return Ok(tt3_c4_steps(m, t, verts)?);
    }
    let i = backward[0];
    let (u1, u2) = (verts[i], verts[(i + 1) % k]);
    let on: BTreeSet<VertexId> = verts.iter().copied().collect();
    let v = m
        .vertices()
        .iter()
        .copied()
        .find(|x| !on.contains(x) && x.partite != u1.partite && x.partite != u2.partite);
    let Some(v) = v else {
        // every third-partite vertex lies on the cycle (e.g. a tournament on
        // exactly four vertices): certificate search over a small window
        let mut window = verts.to_vec();
        for &x in m.vertices() {
            if window.len() >= 6 {
                break;
            }
            if !on.contains(&x) {
                window.push(x);
            }
        }
        const CAP: usize = 12;
        let steps = tt3_search(m, t, &window, &cycle_edge_set(verts), CAP)
            .ok_or(Error::SearchExhausted(CAP))?;
        return Ok(steps);
    };
    // arcs of v against the backward arc u2 -> u1 select the correction pair
    let (pre, post): (Vec<Step>, CorrectionKind) = match (t.has_arc(v, u2), t.has_arc(v, u1)) {
        (true, true) => (vec![tt3_step(v, u2, u1)], CorrectionKind::Tt3([u2, u1, v])),
        (false, false) => (vec![tt3_step(u2, u1, v)], CorrectionKind::Tt3([v, u2, u1])),
        (false, true) => (vec![tt3_step(u2, v, u1)], CorrectionKind::C3([u2, u1, v])),
        (true, false) => (
            tt3_refine_c3(m, t, &t.cycle_on(&[u2, u1, v])?)?.steps,
            CorrectionKind::Tt3([u2, v, u1]),
        ),
    };
    let mut cur = replay(t, &pre)?;
    debug_assert!({
        let nb = (0..k)
            .filter(|&j| cur.has_arc(verts[(j + 1) % k], verts[j]))
            .count();
        nb < backward.len()
    });
    let mut steps = pre;
    let mid = oriented4(m, &cur, verts)?;
    cur = replay(&cur, &mid)?;
    steps.extend(mid);
    match post {
        CorrectionKind::Tt3([a, b, c]) => steps.push(tt3_step(a, b, c)),
        CorrectionKind::C3([a, b, c]) => {
            steps.extend(tt3_refine_c3(m, &cur, &cur.cycle_on(&[a, b, c])?)?.steps);
        }
    }
    Ok(steps)
}

enum CorrectionKind {
    Tt3([VertexId; 3]),
    C3([VertexId; 3]),
}

/// Reverses an orientation of a 3- or 4-cycle in a tripartite tournament by
/// reversals of (arbitrarily oriented) triangles. A 4-cycle across two
/// partite sets walks around a third-partite vertex in four triangle steps;
/// a 4-cycle with a cross-partite opposite pair splits into two triangles at
/// the chord.
pub fn tripartite_c3_refine(m: &MultGraph, t: &Orientation, f: &OrientedCycle) -> Result<Script> {
    require_tournament(m)?;
    let n = partite_count(m);
    if n < 3 {
        return Err(Error::TooFewPartiteSets(3, n));
    }
    let steps = tripartite_steps(m, t, f.vertices())?;
    let end = replay(t, &steps)?;
    debug_assert_eq!(end, t.flip_edges_of(f.vertices())?);
    Ok(Script::new(steps, t, &end))
}

fn triangle_step(d: &Orientation, a: VertexId, b: VertexId, c: VertexId) -> Result<Step> {
    let cyc = d.cycle_on(&[a, b, c])?;
    if cyc.is_directed() {
        // rotate the dicycle to start at its smallest vertex
        let vs = cyc.vertices().to_vec();
        let order = if d.has_arc(vs[0], vs[1]) {
            vs
        } else {
            vec![vs[0], vs[2], vs[1]]
        };
        Ok(Step { vertices: order, tag: FamilyTag::Directed })
    } else {
        let (s, mid, k) = cyc.tt3_roles().expect("non-directed triangle");
        Ok(Step { vertices: vec![s, mid, k], tag: FamilyTag::Tt3 })
    }
}

fn tripartite_steps(m: &MultGraph, t: &Orientation, verts: &[VertexId]) -> Result<Vec<Step>> {
    match verts.len() {
        3 => Ok(vec![triangle_step(t, verts[0], verts[1], verts[2])?]),
        4 => {
            // a cross-partite opposite pair admits a chord split into two
            // triangles, reversed in sequence
            for r in [0usize, 1] {
                let (a, b) = (verts[r], verts[r + 2]);
                if a.partite != b.partite {
                    let s1 = triangle_step(t, verts[r], verts[r + 1], verts[r + 2])?;
                    let mid = s1.apply(t)?;
                    let s2 = triangle_step(
                        &mid,
                        verts[r + 2],
                        verts[(r + 3) % 4],
                        verts[r],
                    )?;
                    return Ok(vec![s1, s2]);
                }
            }
            // {u1, u3} and {u2, u4} each share a partite set: walk around a
            // vertex of the third one
            let on: BTreeSet<usize> = verts.iter().map(|x| x.partite).collect();
            let w = m
                .vertices()
                .iter()
                .copied()
                .find(|x| !on.contains(&x.partite))
                .ok_or(Error::NoAuxiliaryVertex)?;
            let mut steps = Vec::new();
            let mut cur = t.clone();
            for i in 0..4 {
                let s = triangle_step(&cur, verts[i], verts[(i + 1) % 4], w)?;
                cur = s.apply(&cur)?;
                steps.push(s);
            }
            Ok(steps)
        }
        k => Err(Error::FamilyInfeasible(k)),
    }
}
