//! Finite pocsets: halfspace systems with an order-reversing involution,
//! pair classification, facing triples, dimension, and product structure.

use crate::error::{CubistError, Result};

/// Hard limit imposed by the u64 orientation representation.
pub const HARD_MAX_WALLS: usize = 64;

/// Wall cap for exhaustive algorithms. `CUBIST_MAX_WALLS` lowers (or
/// restores) it; values above 64 are clamped to the hard limit.
pub fn max_walls() -> usize {
    match std::env::var("CUBIST_MAX_WALLS") {
        Ok(s) => s.parse::<usize>().unwrap_or(HARD_MAX_WALLS).min(HARD_MAX_WALLS),
        Err(_) => HARD_MAX_WALLS,
    }
}

/// One side of a wall. The complement flips `side` and keeps `wall`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Halfspace {
    pub wall: usize,
    pub side: bool,
}

impl Halfspace {
    pub fn new(wall: usize, side: bool) -> Self {
        Halfspace { wall, side }
    }

    pub fn complement(self) -> Self {
        Halfspace { wall: self.wall, side: !self.side }
    }

    /// Dense index in [0, 2W): wall*2 + side.
    pub fn index(self) -> usize {
        self.wall * 2 + self.side as usize
    }

    pub fn from_index(i: usize) -> Self {
        Halfspace { wall: i / 2, side: i % 2 == 1 }
    }
}

impl std::fmt::Display for Halfspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{}{}", self.wall, if self.side { '+' } else { '-' })
    }
}

/// How two halfspaces of a valid system sit relative to each other.
/// Exactly one variant holds for every ordered pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairRelation {
    Equal,
    Complementary,
    /// h ⊇ k, i.e. k ≤ h.
    FirstContainsSecond,
    /// h ⊆ k, i.e. h ≤ k.
    SecondContainsFirst,
    /// h ∩ k = ∅, i.e. h ≤ k*.
    Disjoint,
    /// h* ∩ k* = ∅, i.e. k* ≤ h.
    Facing,
    /// All four quadrants nonempty.
    Transverse,
}

/// A finite pocset presented as the containment order on its 2W
/// halfspaces. `le[a*n + b]` means halfspace a ⊆ halfspace b.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfspaceSystem {
    walls: usize,
    le: Vec<bool>,
}

impl HalfspaceSystem {
    /// System with the trivial order (only h ≤ h).
    pub fn trivial(walls: usize) -> Result<Self> {
        let cap = max_walls();
        if walls > cap {
            return Err(CubistError::TooManyWalls { requested: walls, cap });
        }
        let n = 2 * walls;
        let mut le = vec![false; n * n];
        for a in 0..n {
            le[a * n + a] = true;
        }
        Ok(HalfspaceSystem { walls, le })
    }

    /// Build from generating relations h ⊆ k; the reflexive, transitive
    /// and involution-dual closure is computed here.
    pub fn from_relations(walls: usize, relations: &[(Halfspace, Halfspace)]) -> Result<Self> {
        let mut sys = Self::trivial(walls)?;
        let n = 2 * walls;
        for &(h, k) in relations {
            sys.check_halfspace(h)?;
            sys.check_halfspace(k)?;
            sys.le[h.index() * n + k.index()] = true;
            // dual relation k* ≤ h*
            sys.le[k.complement().index() * n + h.complement().index()] = true;
        }
        sys.transitive_close();
        Ok(sys)
    }

    /// Raw matrix constructor, no closure. Used to exercise validation
    /// on deliberately broken systems.
    pub fn from_raw(walls: usize, le: Vec<bool>) -> Result<Self> {
        let cap = max_walls();
        if walls > cap {
            return Err(CubistError::TooManyWalls { requested: walls, cap });
        }
        let n = 2 * walls;
        if le.len() != n * n {
            return Err(CubistError::InvalidSystem(format!(
                "order matrix has {} entries, expected {}",
                le.len(),
                n * n
            )));
        }
        Ok(HalfspaceSystem { walls, le })
    }

    fn transitive_close(&mut self) {
        let n = 2 * self.walls;
        for b in 0..n {
            for a in 0..n {
                if self.le[a * n + b] {
                    for c in 0..n {
                        if self.le[b * n + c] {
                            self.le[a * n + c] = true;
                        }
                    }
                }
            }
        }
    }

    pub fn wall_count(&self) -> usize {
        self.walls
    }

    pub fn halfspaces(&self) -> impl Iterator<Item = Halfspace> {
        (0..2 * self.walls).map(Halfspace::from_index)
    }

    fn check_halfspace(&self, h: Halfspace) -> Result<()> {
        if h.wall >= self.walls {
            return Err(CubistError::UnknownWall { index: h.wall, walls: self.walls });
        }
        Ok(())
    }

    /// h ⊆ k. Panics on out-of-range walls; use `classify_pair` for
    /// checked access.
    pub fn le(&self, h: Halfspace, k: Halfspace) -> bool {
        let n = 2 * self.walls;
        self.le[h.index() * n + k.index()]
    }

    /// Pocset axiom check. Returns human-readable violations; empty
    /// means the system is valid.
    pub fn validate(&self) -> Vec<String> {
        let n = 2 * self.walls;
        let mut out = Vec::new();
        for a in 0..n {
            let ha = Halfspace::from_index(a);
            if !self.le[a * n + a] {
                out.push(format!("order is not reflexive at {ha}"));
            }
            if self.le[a * n + ha.complement().index()] {
                out.push(format!("{ha} ≤ {} (a halfspace below its complement)", ha.complement()));
            }
            for b in 0..n {
                if a == b || !self.le[a * n + b] {
                    continue;
                }
                let hb = Halfspace::from_index(b);
                if self.le[b * n + a] {
                    if a < b {
                        out.push(format!("antisymmetry fails: {ha} ≤ {hb} and {hb} ≤ {ha}"));
                    }
                    continue;
                }
                let (ca, cb) = (ha.complement().index(), hb.complement().index());
                if !self.le[cb * n + ca] {
                    out.push(format!(
                        "involution not order-reversing: {ha} ≤ {hb} but not {} ≤ {}",
                        hb.complement(),
                        ha.complement()
                    ));
                }
                for c in 0..n {
                    if self.le[b * n + c] && !self.le[a * n + c] {
                        out.push(format!(
                            "transitivity fails: {ha} ≤ {hb} ≤ {} but not {ha} ≤ {}",
                            Halfspace::from_index(c),
                            Halfspace::from_index(c)
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn classify_pair(&self, h: Halfspace, k: Halfspace) -> Result<PairRelation> {
        self.check_halfspace(h)?;
        self.check_halfspace(k)?;
        Ok(if h == k {
            PairRelation::Equal
        } else if h == k.complement() {
            PairRelation::Complementary
        } else if self.le(k, h) {
            PairRelation::FirstContainsSecond
        } else if self.le(h, k) {
            PairRelation::SecondContainsFirst
        } else if self.le(h, k.complement()) {
            PairRelation::Disjoint
        } else if self.le(k.complement(), h) {
            PairRelation::Facing
        } else {
            PairRelation::Transverse
        })
    }

    /// Pairwise facing, per the definition requiring h ≠ k*. A triple
    /// touching the same wall twice is rejected.
    pub fn is_facing_triple(&self, h: Halfspace, k: Halfspace, l: Halfspace) -> Result<bool> {
        if h.wall == k.wall || h.wall == l.wall || k.wall == l.wall {
            return Err(CubistError::RepeatedWall);
        }
        Ok(self.classify_pair(h, k)? == PairRelation::Facing
            && self.classify_pair(h, l)? == PairRelation::Facing
            && self.classify_pair(k, l)? == PairRelation::Facing)
    }

    /// Exhaustive scan over 3-subsets of `set`.
    pub fn has_facing_triple(&self, set: &[Halfspace]) -> bool {
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                for k in j + 1..set.len() {
                    if let Ok(true) = self.is_facing_triple(set[i], set[j], set[k]) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Walls w, v are transverse when all four of their quadrants are
    /// nonempty; independent of the chosen sides.
    pub fn walls_transverse(&self, w: usize, v: usize) -> bool {
        w != v
            && self
                .classify_pair(Halfspace::new(w, true), Halfspace::new(v, true))
                .map(|r| r == PairRelation::Transverse)
                .unwrap_or(false)
    }

    /// Maximum cardinality of a pairwise-transverse wall set, by exact
    /// branch and bound on the transversality graph.
    pub fn dimension(&self) -> usize {
        let w = self.walls;
        if w == 0 {
            return 0;
        }
        let mut adj = vec![0u64; w];
        for a in 0..w {
            for b in 0..w {
                if self.walls_transverse(a, b) {
                    adj[a] |= 1 << b;
                }
            }
        }
        let all = if w == 64 { u64::MAX } else { (1u64 << w) - 1 };
        let mut best = 0;
        max_clique(&adj, all, 0, &mut best);
        best
    }

    /// Connected components of the non-transversality graph on walls,
    /// each sorted, ordered by smallest member.
    pub fn irreducible_components(&self) -> Vec<Vec<usize>> {
        let w = self.walls;
        let mut parent: Vec<usize> = (0..w).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for a in 0..w {
            for b in a + 1..w {
                if !self.walls_transverse(a, b) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; w];
        for x in 0..w {
            let r = find(&mut parent, x);
            match root_of[r] {
                Some(i) => comps[i].push(x),
                None => {
                    root_of[r] = Some(comps.len());
                    comps.push(vec![x]);
                }
            }
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Disjoint union of walls; cross-factor pairs are incomparable and
    /// therefore transverse.
    pub fn product(&self, other: &HalfspaceSystem) -> Result<HalfspaceSystem> {
        let walls = self.walls + other.walls;
        let mut sys = Self::trivial(walls)?;
        let n = 2 * walls;
        let off = 2 * self.walls;
        for a in 0..2 * self.walls {
            for b in 0..2 * self.walls {
                if self.le[a * 2 * self.walls + b] {
                    sys.le[a * n + b] = true;
                }
            }
        }
        for a in 0..2 * other.walls {
            for b in 0..2 * other.walls {
                if other.le[a * 2 * other.walls + b] {
                    sys.le[(a + off) * n + (b + off)] = true;
                }
            }
        }
        Ok(sys)
    }
}

fn max_clique(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut cand = cand;
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= !(1u64 << v);
        max_clique(adj, cand & adj[v], size + 1, best);
    }
    *best = (*best).max(size);
}
