//! Symbolic model of Z^D with its boundary: extended integers, medians
//! and intervals computed coordinatewise, and dihedral-type isometries
//! with corner-orbit enumeration.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{CubistError, Result};

/// An integer or a signed infinity, totally ordered.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn negate(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::Fin(n) => ExtInt::Fin(-n),
            ExtInt::PosInf => ExtInt::NegInf,
        }
    }

    pub fn shift(self, c: i64) -> ExtInt {
        match self {
            ExtInt::Fin(n) => ExtInt::Fin(n + c),
            inf => inf,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Fin(_))
    }
}

impl std::fmt::Display for ExtInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(n) => write!(f, "{n}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ZBarPoint(pub Vec<ExtInt>);

impl ZBarPoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_corner(&self) -> bool {
        self.0.iter().all(|c| !c.is_finite())
    }
}

impl std::fmt::Display for ZBarPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThresholdDir {
    /// {n ≥ t}
    Ge,
    /// {n < t}
    Lt,
}

/// Membership of coordinate `i` of `p` in the threshold halfspace, with
/// infinities resolved by the order.
pub fn halfspace_member(p: &ZBarPoint, i: usize, t: i64, dir: ThresholdDir) -> Result<bool> {
    if i >= p.dim() {
        return Err(CubistError::LengthMismatch { got: i + 1, want: p.dim() });
    }
    let ge = p.0[i] >= ExtInt::Fin(t);
    Ok(match dir {
        ThresholdDir::Ge => ge,
        ThresholdDir::Lt => !ge,
    })
}

/// Coordinatewise median under the extended order.
pub fn median_zd(x: &ZBarPoint, y: &ZBarPoint, z: &ZBarPoint) -> Result<ZBarPoint> {
    if x.dim() != y.dim() || y.dim() != z.dim() {
        return Err(CubistError::LengthMismatch { got: y.dim().max(z.dim()), want: x.dim() });
    }
    let coords = (0..x.dim())
        .map(|i| {
            let mut t = [x.0[i], y.0[i], z.0[i]];
            t.sort();
            t[1]
        })
        .collect();
    Ok(ZBarPoint(coords))
}

#[derive(Clone, Debug)]
pub struct ZdInterval {
    /// Per-coordinate [min, max].
    pub ranges: Vec<(ExtInt, ExtInt)>,
    /// Corner tuples built from the endpoint coordinates; 2^N of them
    /// where N counts the differing coordinates.
    pub endpoints: Vec<ZBarPoint>,
    /// Number of lattice points, when every range is finite.
    pub lattice_points: Option<u128>,
}

pub fn interval_zd(x: &ZBarPoint, y: &ZBarPoint) -> Result<ZdInterval> {
    if x.dim() != y.dim() {
        return Err(CubistError::LengthMismatch { got: y.dim(), want: x.dim() });
    }
    let ranges: Vec<(ExtInt, ExtInt)> =
        (0..x.dim()).map(|i| (x.0[i].min(y.0[i]), x.0[i].max(y.0[i]))).collect();
    let differing: Vec<usize> = (0..x.dim()).filter(|&i| x.0[i] != y.0[i]).collect();
    let mut endpoints = Vec::new();
    for mask in 0u64..1u64 << differing.len() {
        let mut p = x.clone();
        for (bit, &i) in differing.iter().enumerate() {
            if (mask >> bit) & 1 == 1 {
                p.0[i] = y.0[i];
            }
        }
        endpoints.push(p);
    }
    endpoints.sort();
    let lattice_points = ranges
        .iter()
        .map(|&(lo, hi)| match (lo, hi) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => Some((b - a + 1) as u128),
            _ => None,
        })
        .try_fold(1u128, |acc, c| c.map(|c| acc * c));
    Ok(ZdInterval { ranges, endpoints, lattice_points })
}

/// Coordinate permutation followed by per-coordinate maps n ↦ ±n + c;
/// extends to the boundary by ±∞ ↦ ±ε∞.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZdIsometry {
    /// Input coordinate i lands in output coordinate perm[i].
    pub perm: Vec<usize>,
    /// (negate, offset) applied at each output coordinate.
    pub maps: Vec<(bool, i64)>,
}

impl ZdIsometry {
    pub fn new(perm: Vec<usize>, maps: Vec<(bool, i64)>) -> Result<Self> {
        let d = maps.len();
        if perm.len() != d {
            return Err(CubistError::LengthMismatch { got: perm.len(), want: d });
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || seen[p] {
                return Err(CubistError::Parse("not a permutation".into()));
            }
            seen[p] = true;
        }
        Ok(ZdIsometry { perm, maps })
    }

    pub fn translation(d: usize, coord: usize, by: i64) -> Self {
        let mut maps = vec![(false, 0); d];
        maps[coord] = (false, by);
        ZdIsometry { perm: (0..d).collect(), maps }
    }

    pub fn reflection(d: usize, coord: usize) -> Self {
        let mut maps = vec![(false, 0); d];
        maps[coord] = (true, 0);
        ZdIsometry { perm: (0..d).collect(), maps }
    }

    pub fn apply(&self, p: &ZBarPoint) -> Result<ZBarPoint> {
        if p.dim() != self.perm.len() {
            return Err(CubistError::LengthMismatch { got: p.dim(), want: self.perm.len() });
        }
        let mut out = vec![ExtInt::Fin(0); p.dim()];
        for (i, &c) in p.0.iter().enumerate() {
            let j = self.perm[i];
            let (neg, off) = self.maps[j];
            out[j] = if neg { c.negate() } else { c }.shift(off);
        }
        Ok(ZBarPoint(out))
    }

    pub fn inverse(&self) -> ZdIsometry {
        let d = self.perm.len();
        let mut perm = vec![0; d];
        let mut maps = vec![(false, 0i64); d];
        for i in 0..d {
            let j = self.perm[i];
            perm[j] = i;
            let (neg, off) = self.maps[j];
            maps[i] = (neg, if neg { off } else { -off });
        }
        ZdIsometry { perm, maps }
    }
}

/// Reflection and unit translation in every coordinate: the standard
/// generating set for the N-fold dihedral action on Z^N.
pub fn dinfty_generators(n: usize) -> Vec<ZdIsometry> {
    (0..n)
        .flat_map(|c| [ZdIsometry::reflection(n, c), ZdIsometry::translation(n, c, 1)])
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitResult {
    Finite(Vec<ZBarPoint>),
    /// The orbit escaped the bounded search radius; some element keeps
    /// translating a finite coordinate.
    Infinite,
}

/// BFS orbit with a depth cap (default 10·D applications). Corners
/// close within the 2^D corner set; points with a translated finite
/// coordinate are reported as infinite rather than enumerated.
pub fn corner_orbit(
    gens: &[ZdIsometry],
    p: &ZBarPoint,
    radius: Option<usize>,
) -> Result<OrbitResult> {
    let radius = radius.unwrap_or(10 * p.dim().max(1));
    let mut all: Vec<ZdIsometry> = gens.to_vec();
    all.extend(gens.iter().map(|g| g.inverse()));
    let mut seen: BTreeSet<ZBarPoint> = BTreeSet::from([p.clone()]);
    let mut frontier = VecDeque::from([(p.clone(), 0usize)]);
    while let Some((q, depth)) = frontier.pop_front() {
        if depth == radius {
            return Ok(OrbitResult::Infinite);
        }
        for g in &all {
            let r = g.apply(&q)?;
            if seen.insert(r.clone()) {
                frontier.push_back((r, depth + 1));
            }
        }
    }
    Ok(OrbitResult::Finite(seen.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtInt::{Fin, NegInf, PosInf};

    fn pt(coords: &[ExtInt]) -> ZBarPoint {
        ZBarPoint(coords.to_vec())
    }

    #[test]
    fn threshold_membership() {
        let p = pt(&[Fin(3), NegInf]);
        assert!(halfspace_member(&pt(&[PosInf]), 0, 100, ThresholdDir::Ge).unwrap());
        assert!(!halfspace_member(&pt(&[NegInf]), 0, 0, ThresholdDir::Ge).unwrap());
        assert!(halfspace_member(&p, 0, 2, ThresholdDir::Ge).unwrap());
        assert!(!halfspace_member(&p, 1, 0, ThresholdDir::Ge).unwrap());
        assert!(halfspace_member(&p, 1, 0, ThresholdDir::Lt).unwrap());
        assert!(halfspace_member(&p, 5, 0, ThresholdDir::Ge).is_err());
    }

    #[test]
    fn median_examples() {
        let x = pt(&[NegInf, Fin(2)]);
        let y = pt(&[Fin(0), Fin(5)]);
        let z = pt(&[PosInf, Fin(3)]);
        assert_eq!(median_zd(&x, &y, &z).unwrap(), pt(&[Fin(0), Fin(3)]));
        // m(x, x, y) = x
        assert_eq!(median_zd(&x, &x, &y).unwrap(), x);
        assert!(median_zd(&x, &y, &pt(&[Fin(0)])).is_err());
    }

    #[test]
    fn interval_examples() {
        let p = pt(&[Fin(1), Fin(2)]);
        let iv = interval_zd(&p, &p).unwrap();
        assert_eq!(iv.endpoints, vec![p.clone()]);
        assert_eq!(iv.lattice_points, Some(1));

        let iv = interval_zd(&pt(&[NegInf, NegInf]), &pt(&[PosInf, PosInf])).unwrap();
        assert_eq!(iv.endpoints.len(), 4);
        assert_eq!(iv.lattice_points, None);

        let iv = interval_zd(&pt(&[Fin(0), Fin(0)]), &pt(&[Fin(2), Fin(3)])).unwrap();
        assert_eq!(iv.lattice_points, Some(12));
        assert_eq!(iv.endpoints.len(), 4);
        assert_eq!(iv.ranges, vec![(Fin(0), Fin(2)), (Fin(0), Fin(3))]);
    }

    #[test]
    fn isometries_compose_and_invert() {
        let g = ZdIsometry::new(vec![1, 0], vec![(true, 5), (false, -2)]).unwrap();
        let p = pt(&[Fin(3), PosInf]);
        let q = g.apply(&p).unwrap();
        // coordinate 0 → output 1 via n ↦ n − 2; coordinate 1 → output 0 via n ↦ −n + 5
        assert_eq!(q, pt(&[NegInf, Fin(1)]));
        assert_eq!(g.inverse().apply(&q).unwrap(), p);
    }

    #[test]
    fn isometries_preserve_medians() {
        let g = ZdIsometry::new(vec![1, 0], vec![(true, 3), (false, 7)]).unwrap();
        let pts = [
            pt(&[Fin(0), Fin(1)]),
            pt(&[Fin(4), NegInf]),
            pt(&[PosInf, Fin(-2)]),
            pt(&[Fin(-3), Fin(9)]),
        ];
        for x in &pts {
            for y in &pts {
                for z in &pts {
                    let lhs = g.apply(&median_zd(x, y, z).unwrap()).unwrap();
                    let rhs = median_zd(
                        &g.apply(x).unwrap(),
                        &g.apply(y).unwrap(),
                        &g.apply(z).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn dihedral_corner_orbits() {
        // D_∞ on Z: {±∞}
        let gens = dinfty_generators(1);
        let res = corner_orbit(&gens, &pt(&[PosInf]), None).unwrap();
        assert_eq!(res, OrbitResult::Finite(vec![pt(&[NegInf]), pt(&[PosInf])]));

        for n in 1..=6 {
            let gens = dinfty_generators(n);
            let corner = ZBarPoint(vec![PosInf; n]);
            match corner_orbit(&gens, &corner, None).unwrap() {
                OrbitResult::Finite(orbit) => assert_eq!(orbit.len(), 1 << n),
                OrbitResult::Infinite => panic!("corner orbit must be finite"),
            }
        }
    }

    #[test]
    fn translations_fix_corners_but_move_lattice_points() {
        let gens = vec![ZdIsometry::translation(2, 0, 1), ZdIsometry::translation(2, 1, 1)];
        let corner = pt(&[PosInf, NegInf]);
        assert_eq!(corner_orbit(&gens, &corner, None).unwrap(), OrbitResult::Finite(vec![corner.clone()]));
        assert_eq!(
            corner_orbit(&gens, &pt(&[Fin(0), NegInf]), None).unwrap(),
            OrbitResult::Infinite
        );
    }

    #[test]
    fn dihedral_action_has_no_finite_lattice_orbit() {
        let gens = dinfty_generators(1);
        assert_eq!(corner_orbit(&gens, &pt(&[Fin(0)]), None).unwrap(), OrbitResult::Infinite);
    }

    #[test]
    fn agrees_with_finite_grid_median() {
        use crate::corpus;
        use crate::cubulation::{CubeComplex, Orientation};
        let ws = corpus::grid_space(3, 4);
        let cc = CubeComplex::median_closure(ws.derive_system().unwrap(), &ws.regions()).unwrap();
        let to_orientation = |p: &ZBarPoint| {
            let (i, j) = match (p.0[0], p.0[1]) {
                (Fin(i), Fin(j)) => (i, j),
                _ => unreachable!(),
            };
            Orientation::from_sides(&[i >= 1, i >= 2, j >= 1, j >= 2, j >= 3])
        };
        let lattice: Vec<ZBarPoint> =
            (0..3).flat_map(|i| (0..4).map(move |j| pt(&[Fin(i), Fin(j)]))).collect();
        for x in &lattice {
            for y in &lattice {
                for z in &lattice {
                    let m = median_zd(x, y, z).unwrap();
                    let finite = crate::lifting::median(
                        &cc,
                        &to_orientation(x),
                        &to_orientation(y),
                        &to_orientation(z),
                    )
                    .unwrap();
                    assert_eq!(to_orientation(&m), finite);
                }
            }
        }
    }
}
