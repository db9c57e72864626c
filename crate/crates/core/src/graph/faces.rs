use super::EmbeddedGraph;
use crate::error::GraphError;
use alloc::vec;
use alloc::vec::Vec;

/// Faces of an embedded graph. Each face is the cyclic sequence of dart tails
/// `u0, u1, ..`, meaning the darts `u0->u1, u1->u2, ..` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<usize>>,
    pub outer_face_id: usize,
}

impl FaceSet {
    pub fn total_length(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn outer(&self) -> &[usize] {
        &self.faces[self.outer_face_id]
    }
}

/// Traces all faces with `next(u->v) = v -> succ_v(u)` and checks
/// `V - E + F = 2` for every connected component.
///
/// With this rule a face boundary `.., u0, u1, u2, ..` has `u2` immediately
/// after `u0` in the counterclockwise rotation at `u1`, so the face occupies
/// the angle from `u0` to `u2` and everything else at `u1` lies on the far
/// side of the boundary.
pub fn trace_faces(g: &EmbeddedGraph) -> Result<FaceSet, GraphError> {
    let n = g.n();
    let offset: Vec<usize> = core::iter::once(0)
        .chain(g.rotations().iter().scan(0, |acc, r| {
            *acc += r.len();
            Some(*acc)
        }))
        .collect();
    let mut used = vec![false; offset[n]];
    let mut faces = Vec::new();
    for s in 0..n {
        for (i, _) in g.rotation(s).iter().enumerate() {
            if used[offset[s] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut slot) = (s, i);
            while !used[offset[u] + slot] {
                used[offset[u] + slot] = true;
                face.push(u);
                let v = g.rotation(u)[slot];
                let back = g.slot(v, u).expect("asymmetric rotation");
                let next_slot = (back + 1) % g.degree(v);
                u = v;
                slot = next_slot;
            }
            faces.push(face);
        }
    }

    let (comp, count) = g.components();
    let mut verts = vec![0i64; count];
    let mut darts = vec![0i64; count];
    let mut fcount = vec![0i64; count];
    let mut root = vec![usize::MAX; count];
    for v in 0..n {
        verts[comp[v]] += 1;
        darts[comp[v]] += g.degree(v) as i64;
        if root[comp[v]] == usize::MAX {
            root[comp[v]] = v;
        }
    }
    for f in &faces {
        fcount[comp[f[0]]] += 1;
    }
    for c in 0..count {
        // An isolated vertex bounds a single face without darts.
        let f = if darts[c] == 0 { 1 } else { fcount[c] };
        let euler = verts[c] - darts[c] / 2 + f;
        if euler != 2 {
            return Err(GraphError::NotGenusZero {
                component_root: root[c],
                euler,
            });
        }
    }
    Ok(FaceSet {
        faces,
        outer_face_id: 0,
    })
}

/// Result of [`choose_outer_face`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OuterFace {
    pub face: usize,
    /// True when the face boundary is a simple cycle without chords. When
    /// false the embedder has to split the instance along chords.
    pub chordless: bool,
}

/// Picks the outer face: the shortest chordless simple face (lowest id on
/// ties); failing that the shortest simple face; failing that face 0.
pub fn choose_outer_face(g: &EmbeddedGraph, faces: &FaceSet) -> OuterFace {
    let mut ids: Vec<usize> = (0..faces.faces.len()).collect();
    ids.sort_by_key(|&i| (faces.faces[i].len(), i));
    let mut fallback = None;
    for &i in &ids {
        let f = &faces.faces[i];
        if !is_simple_cycle(f) {
            continue;
        }
        if fallback.is_none() {
            fallback = Some(i);
        }
        if chord_count(g, f) == 0 {
            return OuterFace {
                face: i,
                chordless: true,
            };
        }
    }
    OuterFace {
        face: fallback.unwrap_or(0),
        chordless: false,
    }
}

pub(crate) fn is_simple_cycle(f: &[usize]) -> bool {
    if f.len() < 3 {
        return false;
    }
    let mut s = f.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Number of edges joining two non-consecutive vertices of cycle `c`.
pub(crate) fn chord_count(g: &EmbeddedGraph, c: &[usize]) -> usize {
    let k = c.len();
    let mut pos = alloc::collections::BTreeMap::new();
    for (i, &v) in c.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut count = 0;
    for (i, &v) in c.iter().enumerate() {
        for u in g.rotation(v) {
            if let Some(&j) = pos.get(u) {
                let d = (i + k - j) % k;
                if i < j && d != 1 && d != k - 1 {
                    count += 1;
                }
            }
        }
    }
    count
}
