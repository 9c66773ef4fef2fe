//! Intervals: trichotomy of halfspaces, endpoint enumeration, the
//! Dilworth chain embedding into Z^N, and the Helly property.

use std::collections::BTreeMap;

use crate::cubulation::{CubeComplex, Orientation};
use crate::error::{CubistError, Result};
use crate::pocset::{Halfspace, HalfspaceSystem, PairRelation};

/// The three-way split of halfspaces relative to a point set:
/// separating (both sides met), containing, avoiding.
#[derive(Clone, Debug)]
pub struct Trichotomy {
    pub separating: Vec<Halfspace>,
    pub containing: Vec<Halfspace>,
    pub avoiding: Vec<Halfspace>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub x: Orientation,
    pub y: Orientation,
    /// Sorted.
    pub members: Vec<Orientation>,
}

pub fn trichotomy(sys: &HalfspaceSystem, pts: &[Orientation]) -> Result<Trichotomy> {
    if pts.is_empty() {
        return Err(CubistError::Parse("trichotomy of an empty point set".into()));
    }
    let mut t = Trichotomy { separating: vec![], containing: vec![], avoiding: vec![] };
    for h in sys.halfspaces() {
        let some_in = pts.iter().any(|p| p.selects(h));
        let some_out = pts.iter().any(|p| !p.selects(h));
        match (some_in, some_out) {
            (true, true) => t.separating.push(h),
            (true, false) => t.containing.push(h),
            (false, true) => t.avoiding.push(h),
            (false, false) => unreachable!(),
        }
    }
    Ok(t)
}

/// Is `z` on a geodesic between `x` and `y`? Equivalent to selecting
/// every halfspace that contains both.
pub fn between(x: &Orientation, y: &Orientation, z: &Orientation) -> bool {
    (z.bits() ^ x.bits()) & !(x.bits() ^ y.bits()) == 0
}

/// The interval between two vertices: the complex vertices inside every
/// halfspace containing both endpoints; identical to the set of
/// geodesically-between vertices.
pub fn interval(cc: &CubeComplex, x: &Orientation, y: &Orientation) -> Result<Interval> {
    for p in [x, y] {
        if !cc.contains(p) {
            return Err(CubistError::MissingVertex(p.to_string()));
        }
    }
    let members: Vec<Orientation> =
        cc.vertices().iter().copied().filter(|z| between(x, y, z)).collect();
    debug_assert!(members.iter().all(|z| {
        let dx = x.distance(z).unwrap();
        let dy = z.distance(y).unwrap();
        dx + dy == x.distance(y).unwrap()
    }));
    Ok(Interval { x: *x, y: *y, members })
}

/// Exhaustive over pairs: does some pair of `pts` generate exactly this
/// set?
pub fn is_interval(cc: &CubeComplex, pts: &[Orientation]) -> Result<bool> {
    let mut sorted = pts.to_vec();
    sorted.sort();
    sorted.dedup();
    for x in &sorted {
        for y in &sorted {
            if interval(cc, x, y)?.members == sorted {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All points occurring in a generating pair of the interval. Their
/// count is a power of two bounded by 2^dimension.
pub fn endpoints(cc: &CubeComplex, iv: &Interval) -> Result<Vec<Orientation>> {
    let mut out = Vec::new();
    for x in &iv.members {
        for y in &iv.members {
            if interval(cc, x, y)?.members == iv.members {
                if !out.contains(x) {
                    out.push(*x);
                }
                if !out.contains(y) {
                    out.push(*y);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Isometric embedding into Z^N: the separating walls, oriented toward
/// `y`, split into N chains of the containment order; each member maps
/// to its per-chain crossing counts.
pub fn dilworth_embed(
    cc: &CubeComplex,
    iv: &Interval,
) -> Result<(usize, BTreeMap<Orientation, Vec<i64>>)> {
    let sys = &cc.system;
    let diff = iv.x.bits() ^ iv.y.bits();
    let toward_y: Vec<Halfspace> = (0..sys.wall_count())
        .filter(|w| (diff >> w) & 1 == 1)
        .map(|w| Halfspace::new(w, iv.y.side(w)))
        .collect();

    let mut chains = greedy_chains(sys, &toward_y);
    if chains.len() > sys.dimension() {
        chains = exact_chains(sys, &toward_y);
    }
    debug_assert!(chains.len() <= sys.dimension().max(if toward_y.is_empty() { 0 } else { 1 }));

    let mut coords = BTreeMap::new();
    for z in &iv.members {
        let v: Vec<i64> = chains
            .iter()
            .map(|c| c.iter().filter(|&&h| z.selects(h)).count() as i64)
            .collect();
        coords.insert(*z, v);
    }
    Ok((chains.len(), coords))
}

/// Repeatedly peel a longest chain of the containment order.
fn greedy_chains(sys: &HalfspaceSystem, items: &[Halfspace]) -> Vec<Vec<Halfspace>> {
    let mut remaining: Vec<Halfspace> = items.to_vec();
    let mut chains = Vec::new();
    while !remaining.is_empty() {
        let n = remaining.len();
        // longest path in the strict-containment DAG, by DP over a
        // topological order (sorting by number of dominated elements)
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| {
            remaining
                .iter()
                .filter(|&&k| k != remaining[i] && sys.le(k, remaining[i]))
                .count()
        });
        let mut best_len = vec![1usize; n];
        let mut prev = vec![usize::MAX; n];
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                if sys.le(remaining[j], remaining[i]) && best_len[j] + 1 > best_len[i] {
                    best_len[i] = best_len[j] + 1;
                    prev[i] = j;
                }
            }
        }
        let mut i = (0..n).max_by_key(|&i| best_len[i]).unwrap();
        let mut chain = Vec::new();
        loop {
            chain.push(remaining[i]);
            if prev[i] == usize::MAX {
                break;
            }
            i = prev[i];
        }
        chain.reverse();
        remaining.retain(|h| !chain.contains(h));
        chains.push(chain);
    }
    chains
}

/// Minimum chain cover via bipartite matching on the strict order
/// (Dilworth / min path cover on the transitive DAG).
fn exact_chains(sys: &HalfspaceSystem, items: &[Halfspace]) -> Vec<Vec<Halfspace>> {
    let n = items.len();
    let lt = |a: usize, b: usize| items[a] != items[b] && sys.le(items[a], items[b]);
    let mut match_right = vec![usize::MAX; n];
    let mut match_left = vec![usize::MAX; n];
    fn augment(
        a: usize,
        lt: &dyn Fn(usize, usize) -> bool,
        n: usize,
        seen: &mut [bool],
        match_right: &mut [usize],
        match_left: &mut [usize],
    ) -> bool {
        for b in 0..n {
            if lt(a, b) && !seen[b] {
                seen[b] = true;
                if match_right[b] == usize::MAX
                    || augment(match_right[b], lt, n, seen, match_right, match_left)
                {
                    match_right[b] = a;
                    match_left[a] = b;
                    return true;
                }
            }
        }
        false
    }
    for a in 0..n {
        let mut seen = vec![false; n];
        augment(a, &lt, n, &mut seen, &mut match_right, &mut match_left);
    }
    // successors chain elements together
    let mut is_head = vec![true; n];
    for b in 0..n {
        if match_right[b] != usize::MAX {
            is_head[b] = false;
        }
    }
    let mut chains = Vec::new();
    for h in 0..n {
        if is_head[h] {
            let mut chain = vec![items[h]];
            let mut cur = h;
            while match_left[cur] != usize::MAX {
                cur = match_left[cur];
                chain.push(items[cur]);
            }
            chains.push(chain);
        }
    }
    chains
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HellyOutcome {
    /// A vertex inside every member of the family.
    Vertex(Orientation),
    /// Two members with empty intersection.
    EmptyPair(Halfspace, Halfspace),
}

/// Finite Helly property: a pairwise-intersecting family of halfspaces
/// has a common vertex.
pub fn helly(cc: &CubeComplex, family: &[Halfspace]) -> Result<HellyOutcome> {
    for (i, &h) in family.iter().enumerate() {
        for &k in &family[i + 1..] {
            match cc.system.classify_pair(h, k)? {
                PairRelation::Disjoint | PairRelation::Complementary => {
                    return Ok(HellyOutcome::EmptyPair(h, k));
                }
                _ => {}
            }
        }
    }
    for v in cc.vertices() {
        if family.iter().all(|&h| v.selects(h)) {
            return Ok(HellyOutcome::Vertex(*v));
        }
    }
    Err(CubistError::InvalidSystem(
        "pairwise-intersecting family with no common vertex; complex is not a full cubulation"
            .into(),
    ))
}
