//! Lifting decompositions: consistent halfspace sets and their
//! isometric embedded subcomplexes, probability measures with their
//! majority halfspaces, and medians.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::actions::WallAutomorphism;
use crate::cubulation::{CubeComplex, Orientation};
use crate::error::{CubistError, Result};
use crate::intervals::{interval, Interval};
use crate::pocset::{Halfspace, HalfspaceSystem};
use crate::roller::{project, SubsystemSelection};

/// (1) never both h and h*; (2) upward closed under the order.
pub fn is_consistent(sys: &HalfspaceSystem, set: &[Halfspace]) -> bool {
    let s: BTreeSet<Halfspace> = set.iter().copied().collect();
    for &h in &s {
        if s.contains(&h.complement()) {
            return false;
        }
        for k in sys.halfspaces() {
            if sys.le(h, k) && !s.contains(&k) {
                return false;
            }
        }
    }
    true
}

/// The lifted subcomplex of a consistent set: the untouched walls form
/// the restricted system, and E ↦ E ⊔ S embeds its points as the
/// vertices containing S.
#[derive(Clone, Debug)]
pub struct Lift {
    pub set: Vec<Halfspace>,
    pub subsystem: HalfspaceSystem,
    /// Walls not touched by S ⊔ S*, ascending; wall i of the subsystem
    /// is kept_walls[i] of the ambient system.
    pub kept_walls: Vec<usize>,
    /// Vertices of the ambient complex containing S, sorted.
    pub image: Vec<Orientation>,
    selection: SubsystemSelection,
    walls: usize,
    fixed_sides: Vec<(usize, bool)>,
}

impl Lift {
    /// Project an image vertex to the restricted system.
    pub fn project(&self, v: &Orientation) -> Orientation {
        project(&self.selection, v)
    }

    /// The injection E ↦ E ⊔ S.
    pub fn embed(&self, e: &Orientation) -> Result<Orientation> {
        if e.wall_count() != self.kept_walls.len() {
            return Err(CubistError::WallCountMismatch {
                got: e.wall_count(),
                want: self.kept_walls.len(),
            });
        }
        let mut sides = vec![false; self.walls];
        for (i, &w) in self.kept_walls.iter().enumerate() {
            sides[w] = e.side(i);
        }
        for &(w, s) in &self.fixed_sides {
            sides[w] = s;
        }
        Ok(Orientation::from_sides(&sides))
    }
}

pub fn lift(cc: &CubeComplex, set: &[Halfspace]) -> Result<Lift> {
    let sys = &cc.system;
    if !is_consistent(sys, set) {
        return Err(CubistError::NotConsistent(
            set.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" "),
        ));
    }
    let touched: BTreeSet<usize> = set.iter().map(|h| h.wall).collect();
    let kept_walls: Vec<usize> =
        (0..sys.wall_count()).filter(|w| !touched.contains(w)).collect();
    let selection = SubsystemSelection::new(sys, kept_walls.iter().copied())?;
    let subsystem = crate::roller::restrict_system(sys, &selection)?;
    let image: Vec<Orientation> = cc
        .vertices()
        .iter()
        .copied()
        .filter(|v| set.iter().all(|&h| v.selects(h)))
        .collect();
    let fixed_sides = set.iter().map(|h| (h.wall, h.side)).collect();
    Ok(Lift {
        set: set.to_vec(),
        subsystem,
        kept_walls,
        image,
        selection,
        walls: sys.wall_count(),
        fixed_sides,
    })
}

/// Does the lifting commute with each generator, on both sides? The
/// set must be invariant under every generator.
pub fn equivariance_check(
    cc: &CubeComplex,
    set: &[Halfspace],
    generators: &[WallAutomorphism],
) -> Result<bool> {
    let s: BTreeSet<Halfspace> = set.iter().copied().collect();
    for (i, g) in generators.iter().enumerate() {
        let gs: BTreeSet<Halfspace> = s.iter().map(|&h| g.apply(h)).collect();
        if gs != s {
            return Err(CubistError::NotInvariant(i));
        }
    }
    let l = lift(cc, set)?;
    for g in generators {
        // the image is setwise preserved
        let moved: BTreeSet<Orientation> = l.image.iter().map(|v| g.act(v)).collect();
        if moved != l.image.iter().copied().collect() {
            return Ok(false);
        }
        // embedding after the induced restricted action = action after embedding
        for v in &l.image {
            let e = l.project(v);
            let lhs = g.act(&l.embed(&e)?);
            let rhs = l.embed(&l.project(&g.act(v)))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Finitely supported rational probability measure on orientations.
#[derive(Clone, Debug)]
pub struct Measure {
    atoms: Vec<(Orientation, BigRational)>,
}

impl Measure {
    pub fn new(atoms: Vec<(Orientation, BigRational)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(CubistError::InvalidMeasure("empty support".into()));
        }
        let mut sum = BigRational::zero();
        for (_, w) in &atoms {
            if *w <= BigRational::zero() {
                return Err(CubistError::InvalidMeasure(format!("nonpositive weight {w}")));
            }
            sum += w;
        }
        if !sum.is_one() {
            return Err(CubistError::InvalidMeasure(format!("weights sum to {sum}, expected 1")));
        }
        Ok(Measure { atoms })
    }

    pub fn dirac(x: Orientation) -> Self {
        Measure { atoms: vec![(x, BigRational::one())] }
    }

    /// Uniform measure on a finite orbit; the averaging step of the
    /// finite-scale amenable branch.
    pub fn uniform(orbit: &[Orientation]) -> Result<Self> {
        if orbit.is_empty() {
            return Err(CubistError::EmptyOrbit);
        }
        let w = BigRational::new(BigInt::from(1), BigInt::from(orbit.len()));
        Ok(Measure { atoms: orbit.iter().map(|&o| (o, w.clone())).collect() })
    }

    pub fn atoms(&self) -> &[(Orientation, BigRational)] {
        &self.atoms
    }

    /// μ(h), an exact rational.
    pub fn mass(&self, h: Halfspace) -> BigRational {
        self.atoms
            .iter()
            .filter(|(o, _)| o.selects(h))
            .map(|(_, w)| w.clone())
            .sum()
    }
}

/// (𝔥_μ^+, 𝔥_μ): halfspaces of measure > 1/2 and exactly 1/2. The first
/// is consistent; the second contains no facing triple.
pub fn majority_halfspaces(
    sys: &HalfspaceSystem,
    mu: &Measure,
) -> Result<(Vec<Halfspace>, Vec<Halfspace>)> {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut plus = Vec::new();
    let mut balanced = Vec::new();
    for h in sys.halfspaces() {
        let m = mu.mass(h);
        if m > half {
            plus.push(h);
        } else if m == half {
            balanced.push(h);
        }
    }
    assert!(is_consistent(sys, &plus), "majority halfspaces must be consistent");
    assert!(!sys.has_facing_triple(&balanced), "balanced halfspaces contain a facing triple");
    Ok((plus, balanced))
}

/// The interval lifted from a measure's majority set.
pub fn measure_interval(cc: &CubeComplex, mu: &Measure) -> Result<Interval> {
    let (plus, _) = majority_halfspaces(&cc.system, mu)?;
    let l = lift(cc, &plus)?;
    find_interval(cc, &l.image)?.ok_or_else(|| {
        CubistError::InvalidSystem("measure lift is not an interval in this complex".into())
    })
}

/// Search for a generating pair; Some(interval) iff the set is one.
pub fn find_interval(cc: &CubeComplex, pts: &[Orientation]) -> Result<Option<Interval>> {
    let mut sorted = pts.to_vec();
    sorted.sort();
    sorted.dedup();
    for x in &sorted {
        for y in &sorted {
            let iv = interval(cc, x, y)?;
            if iv.members == sorted {
                return Ok(Some(iv));
            }
        }
    }
    Ok(None)
}

/// The unique vertex on the majority side of every wall.
pub fn median(
    cc: &CubeComplex,
    x: &Orientation,
    y: &Orientation,
    z: &Orientation,
) -> Result<Orientation> {
    for p in [x, y, z] {
        if !cc.contains(p) {
            return Err(CubistError::MissingVertex(p.to_string()));
        }
    }
    let m = Orientation::majority(*x, *y, *z);
    if !cc.contains(&m) {
        return Err(CubistError::MissingVertex(format!("{m} (complex is not median-closed)")));
    }
    Ok(m)
}
