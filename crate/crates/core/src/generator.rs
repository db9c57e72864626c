//! Seeded test instances.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`; bounded draws are `next_u64() % bound`. Any
//! implementation that follows the same steps reproduces the same corpus.

use crate::graph::{trace_faces, EmbeddedGraph, MAX_DEGREE};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Random,
    Grid,
    Platonic,
    CycleWithChords,
}

impl core::str::FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        match s {
            "random" => Ok(Family::Random),
            "grid" => Ok(Family::Grid),
            "platonic" => Ok(Family::Platonic),
            "cycle-with-chords" => Ok(Family::CycleWithChords),
            other => Err(GenError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    /// Target vertex count. Grids use the largest `r x c <= n` with
    /// `r = floor(sqrt(n))`; platonic solids pick the solid with `n`
    /// vertices.
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    Infeasible(String),
    UnknownFamily(String),
    UnknownName(String),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::Infeasible(why) => write!(f, "infeasible generator spec: {why}"),
            GenError::UnknownFamily(s) => write!(f, "unknown family {s:?}"),
            GenError::UnknownName(s) => write!(f, "unknown canned instance {s:?}"),
        }
    }
}

struct Rng(ChaCha8Rng);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.0.next_u64() % bound as u64) as usize
    }
}

/// Generates one instance. The result always passes validation and has
/// maximum degree at most 5.
pub fn gen(spec: GenSpec) -> Result<EmbeddedGraph, GenError> {
    let g = match spec.family {
        Family::Random => {
            if spec.n < 3 {
                return Err(GenError::Infeasible("random family needs n >= 3".into()));
            }
            random_capped(spec.n, spec.seed)
        }
        Family::Grid => {
            if spec.n < 1 {
                return Err(GenError::Infeasible("grid needs n >= 1".into()));
            }
            let r = isqrt(spec.n);
            grid(r, spec.n / r)
        }
        Family::Platonic => match spec.n {
            4 => canned("k4"),
            6 => canned("octahedron"),
            8 => canned("cube"),
            12 => canned("icosahedron"),
            20 => canned("dodecahedron"),
            n => {
                return Err(GenError::Infeasible(alloc::format!(
                    "no platonic solid with {n} vertices"
                )))
            }
        }?,
        Family::CycleWithChords => {
            if spec.n < 3 {
                return Err(GenError::Infeasible("cycle family needs n >= 3".into()));
            }
            cycle_with_chords(spec.n, spec.seed)
        }
    };
    debug_assert!(g.max_degree() <= MAX_DEGREE);
    debug_assert!(trace_faces(&g).is_ok());
    Ok(g)
}

fn isqrt(n: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Builds the rotation system from consistently oriented faces: a face
/// `.., a, v, b, ..` means `b` follows `a` counterclockwise around `v`.
pub(crate) fn from_faces(n: usize, faces: &[&[usize]]) -> EmbeddedGraph {
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (a, v, b) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            succ[v].push((a, b));
        }
    }
    let rotation = succ
        .iter()
        .map(|pairs| {
            let mut rot = Vec::with_capacity(pairs.len());
            if let Some(&(start, _)) = pairs.first() {
                let mut cur = start;
                loop {
                    rot.push(cur);
                    cur = pairs.iter().find(|p| p.0 == cur).expect("broken face list").1;
                    if cur == start {
                        break;
                    }
                }
            }
            rot
        })
        .collect();
    EmbeddedGraph::new(rotation).expect("face list is not a sphere")
}

fn cycle(n: usize) -> EmbeddedGraph {
    let rotation = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    EmbeddedGraph::new(rotation).expect("cycle")
}

fn grid(rows: usize, cols: usize) -> EmbeddedGraph {
    let id = |i: usize, j: usize| i * cols + j;
    let mut rotation = vec![Vec::new(); rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            let r = &mut rotation[id(i, j)];
            // counterclockwise: right, up, left, down
            if j + 1 < cols {
                r.push(id(i, j + 1));
            }
            if i + 1 < rows {
                r.push(id(i + 1, j));
            }
            if j > 0 {
                r.push(id(i, j - 1));
            }
            if i > 0 {
                r.push(id(i - 1, j));
            }
        }
    }
    EmbeddedGraph::new(rotation).expect("grid")
}

/// Convex polygon with random non-crossing chords, degrees capped at 5.
fn cycle_with_chords(n: usize, seed: u64) -> EmbeddedGraph {
    let mut rng = Rng::new(seed);
    let mut adj: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    if n == 3 {
        adj = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    }
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for _ in 0..n {
        let (a, b) = (rng.below(n), rng.below(n));
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if b - a < 2 || (a == 0 && b == n - 1) {
            continue;
        }
        if adj[a].len() >= MAX_DEGREE || adj[b].len() >= MAX_DEGREE || adj[a].contains(&b) {
            continue;
        }
        let crosses = chords
            .iter()
            .any(|&(c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b));
        if crosses {
            continue;
        }
        chords.push((a, b));
        adj[a].push(b);
        adj[b].push(a);
    }
    // Around a convex polygon vertex i the others appear counterclockwise in
    // the order i+1, i+2, ...
    for (i, r) in adj.iter_mut().enumerate() {
        r.sort_by_key(|&j| (j + n - i) % n);
    }
    EmbeddedGraph::new(adj).expect("outerplanar")
}

/// Random triangulation by face insertion and edge flips, then degrees capped
/// at 5 by repeatedly deleting, at the highest-degree vertex, the edge to its
/// highest-degree neighbour.
fn random_capped(n: usize, seed: u64) -> EmbeddedGraph {
    let mut rng = Rng::new(seed);
    let mut rot: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // inner faces (a, b, c): c follows a around b
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    let outer = [0usize, 2, 1];

    fn insert_after(r: &mut Vec<usize>, after: usize, x: usize) {
        let i = r.iter().position(|&y| y == after).expect("rotation");
        r.insert(i + 1, x);
    }

    while rot.len() < n {
        let fi = rng.below(faces.len());
        let [a, b, c] = faces[fi];
        let x = rot.len();
        insert_after(&mut rot[b], a, x);
        insert_after(&mut rot[c], b, x);
        insert_after(&mut rot[a], c, x);
        rot.push(vec![a, c, b]);
        faces[fi] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);

        // a couple of random flips keep the triangulation from being stacked
        for _ in 0..2 {
            let fi = rng.below(faces.len());
            let side = rng.below(3);
            let f = faces[fi];
            let (u, v, x) = (f[side], f[(side + 1) % 3], f[(side + 2) % 3]);
            // the other face containing the dart v -> u
            let Some(gi) = faces
                .iter()
                .position(|g| (0..3).any(|s| g[s] == v && g[(s + 1) % 3] == u))
            else {
                continue; // u-v lies on the outer face
            };
            let g = faces[gi];
            let s = (0..3).find(|&s| g[s] == v).unwrap();
            let y = g[(s + 2) % 3];
            if x == y || rot[x].contains(&y) || rot[u].len() <= 3 || rot[v].len() <= 3 {
                continue;
            }
            if outer.contains(&u) && outer.contains(&v) {
                continue;
            }
            rot[u].retain(|&w| w != v);
            rot[v].retain(|&w| w != u);
            insert_after(&mut rot[x], v, y);
            insert_after(&mut rot[y], u, x);
            faces[fi] = [x, u, y];
            faces[gi] = [y, v, x];
        }
    }

    let mut g = EmbeddedGraph::from_raw(rot);
    loop {
        let v = (0..g.n())
            .max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v)))
            .unwrap();
        if g.degree(v) <= MAX_DEGREE {
            break;
        }
        let u = *g
            .rotation(v)
            .iter()
            .max_by_key(|&&u| (g.degree(u), core::cmp::Reverse(u)))
            .unwrap();
        g.remove_edge(v, u);
    }
    g
}

fn icosahedron() -> EmbeddedGraph {
    let next = |i: usize| i % 5 + 1;
    let low = |i: usize| 5 + i;
    let mut faces: Vec<[usize; 3]> = Vec::new();
    for i in 1..=5 {
        let j = next(i);
        faces.push([0, i, j]);
        faces.push([j, i, low(i)]);
        faces.push([low(i), low(j), j]);
        faces.push([11, low(j), low(i)]);
    }
    let refs: Vec<&[usize]> = faces.iter().map(|f| &f[..]).collect();
    from_faces(12, &refs)
}

/// Planar dual, vertices numbered by face index of [`trace_faces`].
fn dual(g: &EmbeddedGraph) -> EmbeddedGraph {
    let fs = trace_faces(g).expect("planar");
    let mut face_of = alloc::collections::BTreeMap::new();
    for (fi, f) in fs.faces.iter().enumerate() {
        for i in 0..f.len() {
            face_of.insert((f[i], f[(i + 1) % f.len()]), fi);
        }
    }
    // Walking a face forwards, the faces across its darts appear in clockwise
    // order around the dual vertex; reverse for counterclockwise.
    let rotation = fs
        .faces
        .iter()
        .map(|f| {
            let k = f.len();
            let mut r: Vec<usize> = (0..k).map(|i| face_of[&(f[(i + 1) % k], f[i])]).collect();
            r.reverse();
            r
        })
        .collect();
    EmbeddedGraph::new(rotation).expect("dual")
}

/// Names accepted by [`canned`].
pub const CANNED_NAMES: &[&str] = &[
    "triangle",
    "k4",
    "c4",
    "c6",
    "cube",
    "octahedron",
    "icosahedron",
    "dodecahedron",
    "w5",
    "bowtie",
    "ip5-trigger",
    "ip4-trigger",
];

/// Fixed instances with known rotation systems.
pub fn canned(name: &str) -> Result<EmbeddedGraph, GenError> {
    let g = match name {
        "triangle" => cycle(3),
        "c4" => cycle(4),
        "c6" => cycle(6),
        "k4" => from_faces(4, &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 1], &[1, 3, 2]]),
        "cube" => from_faces(
            8,
            &[
                &[0, 3, 2, 1],
                &[4, 5, 6, 7],
                &[0, 1, 5, 4],
                &[1, 2, 6, 5],
                &[2, 3, 7, 6],
                &[3, 0, 4, 7],
            ],
        ),
        "octahedron" => from_faces(
            6,
            &[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 1],
                &[5, 2, 1],
                &[5, 3, 2],
                &[5, 4, 3],
                &[5, 1, 4],
            ],
        ),
        "icosahedron" | "ip4-trigger" => icosahedron(),
        "dodecahedron" => dual(&icosahedron()),
        // rim 0..4, hub 5
        "w5" => from_faces(
            6,
            &[
                &[5, 0, 1],
                &[5, 1, 2],
                &[5, 2, 3],
                &[5, 3, 4],
                &[5, 4, 0],
                &[0, 4, 3, 2, 1],
            ],
        ),
        "bowtie" => from_faces(5, &[&[0, 1, 2], &[0, 3, 4], &[0, 2, 1, 0, 4, 3]]),
        "ip5-trigger" => ip5_trigger(),
        other => return Err(GenError::UnknownName(other.to_string())),
    };
    Ok(g)
}

/// Eight-vertex instance whose outer face is a triangle; the inner cycle
/// left after peeling it starts at a vertex of closure degree 4 carrying
/// exactly one chord.
fn ip5_trigger() -> EmbeddedGraph {
    EmbeddedGraph::new(vec![
        vec![1, 2, 4, 6],
        vec![2, 0, 6, 3, 5],
        vec![0, 1, 5, 4],
        vec![4, 7, 5, 1, 6],
        vec![3, 0, 2, 5, 7],
        vec![1, 3, 7, 4, 2],
        vec![0, 3, 1],
        vec![5, 3, 4],
    ])
    .expect("valid rotation system")
}
