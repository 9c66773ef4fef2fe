//! Automorphisms of halfspace systems and the signed-permutation
//! action {0,1}^D ⋊ Sym(D) on interval endpoints: closures, orbits,
//! and the power-of-two orbit checks.

use std::collections::{BTreeSet, VecDeque};

use crate::cubulation::{CubeComplex, Orientation};
use crate::error::{CubistError, Result};
use crate::pocset::{Halfspace, HalfspaceSystem};

/// Default cap on the coordinate count for exhaustive group methods
/// (group order up to 2^7 · 7!).
pub const DEFAULT_DIM_CAP: usize = 7;

/// An order- and involution-preserving bijection of the halfspaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WallAutomorphism {
    /// image[h.index()] = index of the image halfspace.
    image: Vec<usize>,
}

impl WallAutomorphism {
    pub fn new(sys: &HalfspaceSystem, image: Vec<usize>) -> Result<Self> {
        let n = 2 * sys.wall_count();
        if image.len() != n {
            return Err(CubistError::InvalidAutomorphism(format!(
                "image has {} entries, expected {n}",
                image.len()
            )));
        }
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || seen[i] {
                return Err(CubistError::InvalidAutomorphism("not a bijection".into()));
            }
            seen[i] = true;
        }
        let g = WallAutomorphism { image };
        for h in sys.halfspaces() {
            if g.apply(h.complement()) != g.apply(h).complement() {
                return Err(CubistError::InvalidAutomorphism(format!(
                    "does not commute with complementation at {h}"
                )));
            }
            for k in sys.halfspaces() {
                if sys.le(h, k) != sys.le(g.apply(h), g.apply(k)) {
                    return Err(CubistError::InvalidAutomorphism(format!(
                        "does not preserve the order at ({h}, {k})"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Automorphism induced by a permutation of walls (wall w goes to
    /// perm[w], sides preserved).
    pub fn from_wall_permutation(sys: &HalfspaceSystem, perm: &[usize]) -> Result<Self> {
        if perm.len() != sys.wall_count() {
            return Err(CubistError::InvalidAutomorphism("wall permutation length".into()));
        }
        let mut image = vec![0; 2 * sys.wall_count()];
        for w in 0..perm.len() {
            for side in [false, true] {
                image[Halfspace::new(w, side).index()] = Halfspace::new(perm[w], side).index();
            }
        }
        Self::new(sys, image)
    }

    pub fn identity(sys: &HalfspaceSystem) -> Self {
        WallAutomorphism { image: (0..2 * sys.wall_count()).collect() }
    }

    pub fn apply(&self, h: Halfspace) -> Halfspace {
        Halfspace::from_index(self.image[h.index()])
    }

    pub fn inverse(&self) -> WallAutomorphism {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        WallAutomorphism { image: inv }
    }

    /// Induced action on orientations: g·x selects g(h) exactly when x
    /// selects h.
    pub fn act(&self, x: &Orientation) -> Orientation {
        let walls = x.wall_count();
        let mut sides = vec![false; walls];
        for h in x.halfspaces() {
            let gh = self.apply(h);
            sides[gh.wall] = gh.side;
        }
        Orientation::from_sides(&sides)
    }
}

/// Orbit of an orientation under the group generated by wall
/// automorphisms, in sorted order.
pub fn automorphism_orbit(
    sys: &HalfspaceSystem,
    generators: &[WallAutomorphism],
    x: &Orientation,
) -> Result<Vec<Orientation>> {
    if x.wall_count() != sys.wall_count() {
        return Err(CubistError::WallCountMismatch { got: x.wall_count(), want: sys.wall_count() });
    }
    let mut gens: Vec<WallAutomorphism> = generators.to_vec();
    gens.extend(generators.iter().map(|g| g.inverse()));
    let mut seen = BTreeSet::from([*x]);
    let mut queue = VecDeque::from([*x]);
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let q = g.act(&p);
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Element of {0,1}^D ⋊ Sym(D): x ↦ flips ⊕ σ·x, where (σ·x)_{σ(i)} = x_i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    pub flips: Vec<bool>,
    /// One-line form: coordinate i maps to perm[i].
    pub perm: Vec<usize>,
}

impl SignedPermutation {
    pub fn new(flips: Vec<bool>, perm: Vec<usize>) -> Result<Self> {
        let d = flips.len();
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
        Ok(SignedPermutation { flips, perm })
    }

    pub fn identity(d: usize) -> Self {
        SignedPermutation { flips: vec![false; d], perm: (0..d).collect() }
    }

    pub fn dim(&self) -> usize {
        self.flips.len()
    }

    /// Apply to a 0/1 vector.
    pub fn act(&self, x: &[bool]) -> Result<Vec<bool>> {
        if x.len() != self.dim() {
            return Err(CubistError::LengthMismatch { got: x.len(), want: self.dim() });
        }
        let mut out = vec![false; x.len()];
        for (i, &xi) in x.iter().enumerate() {
            out[self.perm[i]] = xi;
        }
        for (o, &f) in out.iter_mut().zip(&self.flips) {
            *o ^= f;
        }
        Ok(out)
    }

    /// (v,σ)(w,τ) = (v ⊕ σ·w, στ): self after `other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let d = self.dim();
        debug_assert_eq!(d, other.dim());
        let mut flips = self.flips.clone();
        for i in 0..d {
            if other.flips[i] {
                flips[self.perm[i]] ^= true;
            }
        }
        let perm = (0..d).map(|i| self.perm[other.perm[i]]).collect();
        SignedPermutation { flips, perm }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let d = self.dim();
        let mut perm = vec![0; d];
        for i in 0..d {
            perm[self.perm[i]] = i;
        }
        let mut flips = vec![false; d];
        for i in 0..d {
            flips[i] = self.flips[self.perm[i]];
        }
        SignedPermutation { flips, perm }
    }

    pub fn is_pure_flip(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

fn check_cap(d: usize) -> Result<()> {
    if d > DEFAULT_DIM_CAP {
        return Err(CubistError::DimensionCap { requested: d, cap: DEFAULT_DIM_CAP });
    }
    Ok(())
}

/// Full element set of the generated group, sorted by (flips, perm).
pub fn closure(d: usize, generators: &[SignedPermutation]) -> Result<Vec<SignedPermutation>> {
    check_cap(d)?;
    for g in generators {
        if g.dim() != d {
            return Err(CubistError::LengthMismatch { got: g.dim(), want: d });
        }
    }
    let mut set = BTreeSet::from([SignedPermutation::identity(d)]);
    let mut queue: VecDeque<SignedPermutation> = set.iter().cloned().collect();
    while let Some(g) = queue.pop_front() {
        for h in generators {
            for next in [h.compose(&g), h.inverse().compose(&g)] {
                if !set.contains(&next) {
                    set.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Γ₀ = Γ ∩ {0,1}^D: the pure-flip elements. Its cardinality is a power
/// of two and it is normal in the closure.
pub fn sign_kernel(group: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let kernel: Vec<SignedPermutation> =
        group.iter().filter(|g| g.is_pure_flip()).cloned().collect();
    debug_assert!(kernel.len().is_power_of_two());
    kernel
}

/// BFS orbit of a 0/1 vector, sorted.
pub fn orbit(generators: &[SignedPermutation], x: &[bool]) -> Result<Vec<Vec<bool>>> {
    let mut gens: Vec<SignedPermutation> = generators.to_vec();
    gens.extend(generators.iter().map(|g| g.inverse()));
    let mut seen = BTreeSet::from([x.to_vec()]);
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let q = g.act(&p)?;
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    /// Orbit sizes over all 2^D corner points, ascending.
    pub orbit_sizes: Vec<usize>,
    /// Smallest orbit of power-of-two cardinality.
    pub witness: Vec<Vec<bool>>,
    pub n: u32,
}

/// Enumerate the orbits of every corner of {0,1}^D and find one of
/// cardinality exactly 2^N.
pub fn main_theorem_check(d: usize, generators: &[SignedPermutation]) -> Result<TheoremReport> {
    check_cap(d)?;
    let mut unassigned: BTreeSet<Vec<bool>> = (0..1u32 << d)
        .map(|b| (0..d).map(|i| (b >> i) & 1 == 1).collect())
        .collect();
    let mut orbits: Vec<Vec<Vec<bool>>> = Vec::new();
    while let Some(x) = unassigned.iter().next().cloned() {
        let o = orbit(generators, &x)?;
        for p in &o {
            unassigned.remove(p);
        }
        orbits.push(o);
    }
    let mut orbit_sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    orbit_sizes.sort();
    let witness = orbits
        .iter()
        .filter(|o| o.len().is_power_of_two())
        .min_by_key(|o| (o.len(), o[0].clone()))
        .cloned()
        .ok_or_else(|| CubistError::Parse("no power-of-two orbit found".into()))?;
    let n = witness.len().trailing_zeros();
    Ok(TheoremReport { orbit_sizes, witness, n })
}

#[derive(Clone, Debug)]
pub struct RecipeReport {
    /// Does every right Γ₀-coset contain a representative with zero
    /// flip vector?
    pub coset_reps_exist: bool,
    /// A coset with no such representative, if any (element list).
    pub counter_coset: Option<Vec<SignedPermutation>>,
    pub group_order: usize,
    pub kernel_order: usize,
    pub orbit_of_zero: usize,
    pub kernel_orbit_of_zero: usize,
}

/// The proof's coset construction, run as a diagnostic: zero-flip coset
/// representatives need not exist, and when they do, |Γ.Ō| = |Γ₀.Ō| = |Γ₀|.
pub fn proof_recipe_check(d: usize, generators: &[SignedPermutation]) -> Result<RecipeReport> {
    let group = closure(d, generators)?;
    let kernel = sign_kernel(&group);
    let kernel_set: BTreeSet<&SignedPermutation> = kernel.iter().collect();

    // right cosets Γ₀g
    let mut assigned: BTreeSet<&SignedPermutation> = BTreeSet::new();
    let mut counter_coset = None;
    let mut coset_reps_exist = true;
    for g in &group {
        if assigned.contains(g) {
            continue;
        }
        let coset: Vec<SignedPermutation> = kernel.iter().map(|k| k.compose(g)).collect();
        for e in &coset {
            assigned.insert(group.iter().find(|x| *x == e).unwrap());
        }
        if !coset.iter().any(|e| e.flips.iter().all(|&f| !f)) {
            coset_reps_exist = false;
            if counter_coset.is_none() {
                let mut c = coset.clone();
                c.sort();
                counter_coset = Some(c);
            }
        }
    }

    let zero = vec![false; d];
    let orbit_of_zero = orbit(generators, &zero)?.len();
    let kernel_orbit_of_zero = orbit(&kernel, &zero)?.len();
    if coset_reps_exist {
        debug_assert_eq!(orbit_of_zero, kernel.len());
        debug_assert_eq!(kernel_orbit_of_zero, kernel.len());
    }
    let _ = kernel_set;
    Ok(RecipeReport {
        coset_reps_exist,
        counter_coset,
        group_order: group.len(),
        kernel_order: kernel.len(),
        orbit_of_zero,
        kernel_orbit_of_zero,
    })
}

/// Orbit of an orientation inside a complex under wall automorphisms,
/// with membership checked along the way.
pub fn automorphism_orbits_in_complex(
    cc: &CubeComplex,
    generators: &[WallAutomorphism],
    x: &Orientation,
) -> Result<Vec<Orientation>> {
    let orbit = automorphism_orbit(&cc.system, generators, x)?;
    for p in &orbit {
        if !cc.contains(p) {
            return Err(CubistError::MissingVertex(p.to_string()));
        }
    }
    Ok(orbit)
}

/// Elements with identity permutation acting on {0,1}^D as translations:
/// convenience map from a coset table to a lookup set.
pub fn group_order_divides_hyperoctahedral(d: usize, order: usize) -> bool {
    let full: usize = (1usize << d) * (1..=d).product::<usize>().max(1);
    full % order == 0
}
