//! Orientation-level operations on the compactified point set: the
//! forgetful restriction to a wall subset and the product rule.

use std::collections::BTreeSet;

use crate::cubulation::Orientation;
use crate::error::{CubistError, Result};
use crate::pocset::{Halfspace, HalfspaceSystem};

/// A wall-level subsystem choice; automatically involution invariant.
#[derive(Clone, Debug)]
pub struct SubsystemSelection {
    kept: Vec<usize>,
}

impl SubsystemSelection {
    pub fn new(sys: &HalfspaceSystem, kept: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = kept.into_iter().collect();
        if let Some(&w) = set.iter().find(|&&w| w >= sys.wall_count()) {
            return Err(CubistError::UnknownWall { index: w, walls: sys.wall_count() });
        }
        Ok(SubsystemSelection { kept: set.into_iter().collect() })
    }

    pub fn kept(&self) -> &[usize] {
        &self.kept
    }
}

/// Restricted system (order induced on the kept walls) together with
/// the coordinate projection of the given points. The projection is
/// 1-Lipschitz; distinct points may collapse.
pub fn restrict(
    sys: &HalfspaceSystem,
    sel: &SubsystemSelection,
    pts: &[Orientation],
) -> Result<(HalfspaceSystem, Vec<Orientation>)> {
    let sub = restrict_system(sys, sel)?;
    let mut out: BTreeSet<Orientation> = BTreeSet::new();
    for p in pts {
        if p.wall_count() != sys.wall_count() {
            return Err(CubistError::WallCountMismatch {
                got: p.wall_count(),
                want: sys.wall_count(),
            });
        }
        out.insert(project(sel, p));
    }
    Ok((sub, out.into_iter().collect()))
}

pub fn restrict_system(sys: &HalfspaceSystem, sel: &SubsystemSelection) -> Result<HalfspaceSystem> {
    let kept = &sel.kept;
    let mut rels = Vec::new();
    for (a, &wa) in kept.iter().enumerate() {
        for (b, &wb) in kept.iter().enumerate() {
            for sa in [false, true] {
                for sb in [false, true] {
                    if (wa, sa) != (wb, sb)
                        && sys.le(Halfspace::new(wa, sa), Halfspace::new(wb, sb))
                    {
                        rels.push((Halfspace::new(a, sa), Halfspace::new(b, sb)));
                    }
                }
            }
        }
    }
    HalfspaceSystem::from_relations(kept.len(), &rels)
}

pub fn project(sel: &SubsystemSelection, p: &Orientation) -> Orientation {
    let sides: Vec<bool> = sel.kept.iter().map(|&w| p.side(w)).collect();
    Orientation::from_sides(&sides)
}

/// Concatenated orientation, a point of the product system.
pub fn product_points(p1: &Orientation, p2: &Orientation) -> Orientation {
    let bits = p1.bits() | (p2.bits() << p1.wall_count());
    Orientation::new(bits, p1.wall_count() + p2.wall_count())
}

/// Inverse of `product_points`: split at the first factor's wall count.
pub fn split_point(p: &Orientation, first_walls: usize) -> Result<(Orientation, Orientation)> {
    if first_walls > p.wall_count() {
        return Err(CubistError::WallCountMismatch { got: first_walls, want: p.wall_count() });
    }
    let p1 = Orientation::new(p.bits(), first_walls);
    let p2 = Orientation::new(p.bits() >> first_walls, p.wall_count() - first_walls);
    Ok((p1, p2))
}
