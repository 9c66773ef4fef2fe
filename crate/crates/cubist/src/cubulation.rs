//! Functorial constructions: walled space → halfspace system → cube
//! complex (median closure), and recovery of walls from a cube-complex
//! skeleton via square parallelism.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{CubistError, Result};
use crate::pocset::{max_walls, Halfspace, HalfspaceSystem};

/// A choice of one side of every wall; bit w set means the positive
/// side of wall w.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Orientation {
    bits: u64,
    walls: u8,
}

impl Orientation {
    pub fn new(bits: u64, walls: usize) -> Self {
        debug_assert!(walls <= 64);
        let mask = if walls == 64 { u64::MAX } else { (1u64 << walls) - 1 };
        Orientation { bits: bits & mask, walls: walls as u8 }
    }

    pub fn from_sides(sides: &[bool]) -> Self {
        let mut bits = 0u64;
        for (i, &s) in sides.iter().enumerate() {
            if s {
                bits |= 1 << i;
            }
        }
        Orientation { bits, walls: sides.len() as u8 }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.len() > 64 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(CubistError::Parse(format!("bad orientation string {s:?}")));
        }
        let mut bits = 0u64;
        for (i, b) in s.bytes().enumerate() {
            if b == b'1' {
                bits |= 1 << i;
            }
        }
        Ok(Orientation { bits, walls: s.len() as u8 })
    }

    pub fn wall_count(&self) -> usize {
        self.walls as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn side(&self, wall: usize) -> bool {
        (self.bits >> wall) & 1 == 1
    }

    /// Does this orientation choose halfspace h?
    pub fn selects(&self, h: Halfspace) -> bool {
        self.side(h.wall) == h.side
    }

    pub fn with_side(&self, wall: usize, side: bool) -> Self {
        let mut bits = self.bits & !(1u64 << wall);
        if side {
            bits |= 1 << wall;
        }
        Orientation { bits, walls: self.walls }
    }

    /// The halfspaces this orientation selects, one per wall.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        (0..self.wall_count()).map(|w| Halfspace::new(w, self.side(w))).collect()
    }

    /// Number of walls on which the two orientations differ; half the
    /// symmetric difference of their halfspace sets.
    pub fn distance(&self, other: &Orientation) -> Result<usize> {
        if self.walls != other.walls {
            return Err(CubistError::WallCountMismatch {
                got: other.wall_count(),
                want: self.wall_count(),
            });
        }
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    /// Coordinatewise majority of three orientations.
    pub fn majority(a: Orientation, b: Orientation, c: Orientation) -> Orientation {
        debug_assert!(a.walls == b.walls && b.walls == c.walls);
        Orientation { bits: (a.bits & b.bits) | (b.bits & c.bits) | (a.bits & c.bits), walls: a.walls }
    }

    /// Upward closed under the order and never both sides of a wall
    /// (one side per wall is structural here, so only closure matters).
    pub fn is_consistent(&self, sys: &HalfspaceSystem) -> bool {
        if self.wall_count() != sys.wall_count() {
            return false;
        }
        for h in self.halfspaces() {
            for k in sys.halfspaces() {
                if sys.le(h, k) && !self.selects(k) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for w in 0..self.wall_count() {
            write!(f, "{}", if self.side(w) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A finite set of named points with two-sided partitions. Each wall is
/// recorded by its positive side; the complement is the other side.
#[derive(Clone, Debug)]
pub struct WalledSpace {
    pub points: Vec<String>,
    pub walls: Vec<Wall>,
}

#[derive(Clone, Debug)]
pub struct Wall {
    pub name: String,
    /// Indices into `points`.
    pub positive: BTreeSet<usize>,
}

impl WalledSpace {
    pub fn validate(&self) -> Result<()> {
        let cap = max_walls();
        if self.walls.len() > cap {
            return Err(CubistError::TooManyWalls { requested: self.walls.len(), cap });
        }
        let mut names = BTreeSet::new();
        for w in &self.walls {
            if !names.insert(&w.name) {
                return Err(CubistError::InvalidWalledSpace(format!("duplicate wall name {:?}", w.name)));
            }
            if w.positive.is_empty() || w.positive.len() == self.points.len() {
                return Err(CubistError::InvalidWalledSpace(format!(
                    "wall {:?} must have two nonempty sides",
                    w.name
                )));
            }
            if let Some(&i) = w.positive.iter().find(|&&i| i >= self.points.len()) {
                return Err(CubistError::InvalidWalledSpace(format!(
                    "wall {:?} references point index {i} out of range",
                    w.name
                )));
            }
        }
        Ok(())
    }

    fn side_points(&self, h: Halfspace) -> BTreeSet<usize> {
        let pos = &self.walls[h.wall].positive;
        if h.side {
            pos.clone()
        } else {
            (0..self.points.len()).filter(|i| !pos.contains(i)).collect()
        }
    }

    /// One wall per input wall, ordered by point-set containment of the
    /// sides.
    pub fn derive_system(&self) -> Result<HalfspaceSystem> {
        self.validate()?;
        let w = self.walls.len();
        let sides: Vec<BTreeSet<usize>> =
            (0..2 * w).map(|i| self.side_points(Halfspace::from_index(i))).collect();
        let mut rels = Vec::new();
        for a in 0..2 * w {
            for b in 0..2 * w {
                if a != b && sides[a].is_subset(&sides[b]) {
                    rels.push((Halfspace::from_index(a), Halfspace::from_index(b)));
                }
            }
        }
        HalfspaceSystem::from_relations(w, &rels)
    }

    /// The realized side-signatures: one orientation per nonempty
    /// intersection of chosen sides.
    pub fn regions(&self) -> Vec<Orientation> {
        let mut seen = BTreeSet::new();
        for p in 0..self.points.len() {
            let sides: Vec<bool> = self.walls.iter().map(|w| w.positive.contains(&p)).collect();
            seen.insert(Orientation::from_sides(&sides));
        }
        seen.into_iter().collect()
    }
}

/// Vertices (consistent orientations) plus differ-in-one-wall edges.
#[derive(Clone, Debug)]
pub struct CubeComplex {
    pub system: HalfspaceSystem,
    vertices: Vec<Orientation>,
    index: HashMap<Orientation, usize>,
    /// (u, v, wall) with u < v as vertex indices.
    edges: Vec<(usize, usize, usize)>,
}

impl CubeComplex {
    /// Smallest superset of `seed` closed under coordinatewise majority.
    /// Finite, since everything lives in 2^W.
    pub fn median_closure(system: HalfspaceSystem, seed: &[Orientation]) -> Result<CubeComplex> {
        for o in seed {
            if o.wall_count() != system.wall_count() {
                return Err(CubistError::WallCountMismatch {
                    got: o.wall_count(),
                    want: system.wall_count(),
                });
            }
            if !o.is_consistent(&system) {
                return Err(CubistError::InconsistentOrientation(o.to_string()));
            }
        }
        let mut set: BTreeSet<Orientation> = seed.iter().copied().collect();
        let mut work: Vec<Orientation> = set.iter().copied().collect();
        while let Some(c) = work.pop() {
            let members: Vec<Orientation> = set.iter().copied().collect();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i..] {
                    let m = Orientation::majority(a, b, c);
                    if set.insert(m) {
                        work.push(m);
                    }
                }
            }
        }
        let vertices: Vec<Orientation> = set.into_iter().collect();
        Ok(Self::assemble(system, vertices))
    }

    /// All consistent orientations of the system; the full cubulation.
    pub fn full(system: HalfspaceSystem) -> Result<CubeComplex> {
        let w = system.wall_count();
        let mut vertices = Vec::new();
        for bits in 0..(1u64 << w) {
            let o = Orientation::new(bits, w);
            if o.is_consistent(&system) {
                vertices.push(o);
            }
        }
        Ok(Self::assemble(system, vertices))
    }

    fn assemble(system: HalfspaceSystem, vertices: Vec<Orientation>) -> CubeComplex {
        let index: HashMap<Orientation, usize> =
            vertices.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            for w in 0..system.wall_count() {
                let u = v.with_side(w, !v.side(w));
                if let Some(&j) = index.get(&u) {
                    if i < j {
                        edges.push((i, j, w));
                    }
                }
            }
        }
        CubeComplex { system, vertices, index, edges }
    }

    pub fn vertices(&self) -> &[Orientation] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, o: &Orientation) -> bool {
        self.index.contains_key(o)
    }

    pub fn vertex_index(&self, o: &Orientation) -> Option<usize> {
        self.index.get(o).copied()
    }

    /// Graph distance by BFS over the edge graph. Returns None when
    /// disconnected.
    pub fn bfs_distance(&self, x: &Orientation, y: &Orientation) -> Option<usize> {
        let (sx, sy) = (self.index.get(x)?, self.index.get(y)?);
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[*sx] = 0;
        let mut queue = std::collections::VecDeque::from([*sx]);
        while let Some(u) = queue.pop_front() {
            if u == *sy {
                return Some(dist[u]);
            }
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        None
    }
}

/// Undirected graph with string-named vertices; input for wall
/// recovery.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    pub names: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn from_edge_pairs(pairs: &[(String, String)]) -> Graph {
        let mut names: Vec<String> = Vec::new();
        let mut idx: BTreeMap<String, usize> = BTreeMap::new();
        let mut edges = Vec::new();
        for (a, b) in pairs {
            let get = |s: &String, names: &mut Vec<String>, idx: &mut BTreeMap<String, usize>| {
                *idx.entry(s.clone()).or_insert_with(|| {
                    names.push(s.clone());
                    names.len() - 1
                })
            };
            let (ia, ib) = (get(a, &mut names, &mut idx), get(b, &mut names, &mut idx));
            if ia != ib {
                edges.push((ia.min(ib), ia.max(ib)));
            }
        }
        edges.sort();
        edges.dedup();
        Graph { names, edges }
    }
}

/// Recover the wall structure of a cube-complex skeleton: edge classes
/// under "parallel across a square", each of which must cut the graph
/// into exactly two sides.
pub fn walls_from_graph(g: &Graph) -> Result<WalledSpace> {
    let n = g.names.len();
    let edge_set: BTreeSet<(usize, usize)> = g.edges.iter().copied().collect();
    let has = |a: usize, b: usize| edge_set.contains(&(a.min(b), a.max(b)));
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }

    // union-find on edges; join opposite sides of every 4-cycle
    let mut parent: Vec<usize> = (0..g.edges.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let eidx: BTreeMap<(usize, usize), usize> =
        g.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        for &c in &adj[a] {
            if c == b {
                continue;
            }
            for &d in &adj[b] {
                if d == a || d == c {
                    continue;
                }
                if has(c, d) && !has(a, d) && !has(b, c) {
                    let j = eidx[&(c.min(d), c.max(d))];
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
    }

    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..g.edges.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }

    let mut walls = Vec::new();
    for (wi, class) in classes.values().enumerate() {
        let cut: BTreeSet<usize> = class.iter().copied().collect();
        // components of the graph minus the class
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = ncomp;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    let e = eidx[&(u.min(v), u.max(v))];
                    if cut.contains(&e) || comp[v] != usize::MAX {
                        continue;
                    }
                    comp[v] = ncomp;
                    queue.push_back(v);
                }
            }
            ncomp += 1;
        }
        if ncomp != 2 {
            return Err(CubistError::BadSkeleton(format!(
                "edge class {{{}}} splits the graph into {ncomp} sides, expected 2",
                class
                    .iter()
                    .map(|&e| format!("{}-{}", g.names[g.edges[e].0], g.names[g.edges[e].1]))
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        // positive side: the one not containing the lexicographically
        // smallest vertex name
        let base = (0..n).min_by_key(|&i| &g.names[i]).unwrap();
        let positive: BTreeSet<usize> = (0..n).filter(|&i| comp[i] != comp[base]).collect();
        walls.push(Wall { name: format!("w{wi}"), positive });
    }
    let ws = WalledSpace { points: g.names.clone(), walls };
    ws.validate()?;
    Ok(ws)
}
