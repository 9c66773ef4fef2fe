//! Acceptance gate: each test covers one criterion and prints a single
//! pass line (visible with `--nocapture`); a failed assertion is the
//! corresponding fail.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubist::actions::{self, SignedPermutation};
use cubist::cubulation::{CubeComplex, Orientation, Wall, WalledSpace};
use cubist::intervals::{self, HellyOutcome};
use cubist::lifting::{self, Measure};
use cubist::pocset::Halfspace;
use cubist::{corpus, roller, zdmodel};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random walled space: 4-10 points, 2-8 walls with pairwise distinct
/// underlying partitions.
fn random_walled_space(rng: &mut ChaCha8Rng) -> WalledSpace {
    loop {
        let n = rng.random_range(4..=10usize);
        let target = rng.random_range(2..=8usize);
        let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let mut partitions: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut walls = Vec::new();
        for _ in 0..6 * target {
            if walls.len() == target {
                break;
            }
            let positive: BTreeSet<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            if positive.is_empty() || positive.len() == n {
                continue;
            }
            let complement: BTreeSet<usize> =
                (0..n).filter(|i| !positive.contains(i)).collect();
            if !partitions.insert(positive.clone().min(complement)) {
                continue;
            }
            walls.push(Wall { name: format!("w{}", walls.len()), positive });
        }
        if walls.len() < 2 {
            continue;
        }
        let ws = WalledSpace { points, walls };
        if ws.validate().is_ok() {
            return ws;
        }
    }
}

fn random_complex(rng: &mut ChaCha8Rng) -> CubeComplex {
    let ws = random_walled_space(rng);
    let sys = ws.derive_system().unwrap();
    CubeComplex::median_closure(sys, &ws.regions()).unwrap()
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    &xs[rng.random_range(0..xs.len())]
}

#[test]
fn criterion_01_dinfty_corner_orbits() {
    let start = std::time::Instant::now();
    for n in 1..=6 {
        let gens = zdmodel::dinfty_generators(n);
        let corner = zdmodel::ZBarPoint(vec![zdmodel::ExtInt::PosInf; n]);
        match zdmodel::corner_orbit(&gens, &corner, None).unwrap() {
            zdmodel::OrbitResult::Finite(orbit) => assert_eq!(orbit.len(), 1 << n),
            zdmodel::OrbitResult::Infinite => panic!("corner orbit must be finite"),
        }
    }
    assert!(start.elapsed().as_secs() < 1);
    println!("pass: criterion 1 — D_inf^N corner orbits have cardinality 2^N for N=1..6");
}

#[test]
fn criterion_02_main_theorem_sweep() {
    let start = std::time::Instant::now();
    let mut rng = rng(0xC2);
    let mut trials = 0usize;
    for (d, count) in [(2usize, 800usize), (3, 600), (4, 400), (5, 300)] {
        for _ in 0..count {
            let k = rng.random_range(1..=3usize);
            let gens: Vec<SignedPermutation> = (0..k)
                .map(|_| {
                    let flips: Vec<bool> = (0..d).map(|_| rng.random_bool(0.5)).collect();
                    let mut perm: Vec<usize> = (0..d).collect();
                    perm.shuffle(&mut rng);
                    SignedPermutation::new(flips, perm).unwrap()
                })
                .collect();
            let rep = actions::main_theorem_check(d, &gens).unwrap();
            assert!(rep.witness.len().is_power_of_two());
            assert_eq!(rep.witness.len(), 1 << rep.n);
            assert!((rep.n as usize) <= d);
            trials += 1;
        }
    }
    assert!(trials >= 2000);
    assert!(start.elapsed().as_secs() < 60);
    println!("pass: criterion 2 — {trials} random generator sets all admit a 2^N corner orbit");
}

#[test]
fn criterion_03_proof_recipe_diagnostic() {
    let g = SignedPermutation::new(vec![true, false], vec![1, 0]).unwrap();
    let rep = actions::proof_recipe_check(2, &[g]).unwrap();
    assert!(!rep.coset_reps_exist);
    assert_eq!(rep.orbit_of_zero, 4);
    assert_eq!(rep.kernel_orbit_of_zero, 2);
    println!("pass: criterion 3 — recipe diagnostic: reps_exist=false, |G.O|=4, |G0.O|=2");
}

#[test]
fn criterion_04_cubical_completion() {
    let ws = corpus::seven_octants();
    let cc = CubeComplex::median_closure(ws.derive_system().unwrap(), &ws.regions()).unwrap();
    assert_eq!(cc.vertices().len(), 8);
    assert!(cc.contains(&Orientation::parse("111").unwrap()));
    println!("pass: criterion 4 — seven octants complete to 8 vertices including the back corner");
}

#[test]
fn criterion_05_median_triple_oracle() {
    let start = std::time::Instant::now();
    let mut rng = rng(0xC5);
    for _ in 0..100 {
        let cc = random_complex(&mut rng);
        let vs = cc.vertices();
        for _ in 0..5 {
            let (x, y, z) = (pick(&mut rng, vs), pick(&mut rng, vs), pick(&mut rng, vs));
            let m = lifting::median(&cc, x, y, z).unwrap();
            assert_eq!(m, Orientation::majority(*x, *y, *z));

            // the three pairwise intervals meet exactly in the median
            let common: Vec<Orientation> = intervals::interval(&cc, x, y)
                .unwrap()
                .members
                .into_iter()
                .filter(|p| intervals::between(y, z, p) && intervals::between(x, z, p))
                .collect();
            assert_eq!(common, vec![m]);

            // unique distance-sum minimizer
            let total = |p: &Orientation| {
                x.distance(p).unwrap() + y.distance(p).unwrap() + z.distance(p).unwrap()
            };
            let best = total(&m);
            for p in vs {
                if *p != m {
                    assert!(total(p) > best);
                }
            }
        }
    }
    assert!(start.elapsed().as_secs() < 30);
    println!("pass: criterion 5 — 100 complexes: majority = triple-interval point = unique minimizer");
}

#[test]
fn criterion_06_helly() {
    let mut rng = rng(0xC6);
    let complexes = corpus::complexes();
    let mut found = 0usize;
    while found < 500 {
        let cc = pick(&mut rng, &complexes);
        let hs: Vec<Halfspace> = cc.system.halfspaces().collect();
        let k = rng.random_range(2..=4usize);
        let family: Vec<Halfspace> = (0..k).map(|_| *pick(&mut rng, &hs)).collect();
        let intersecting = family.iter().enumerate().all(|(i, &h)| {
            family[..i].iter().all(|&g| {
                cc.vertices().iter().any(|v| v.selects(h) && v.selects(g))
            })
        });
        if !intersecting {
            continue;
        }
        match intervals::helly(cc, &family).unwrap() {
            HellyOutcome::Vertex(v) => {
                assert!(family.iter().all(|&h| v.selects(h)));
            }
            HellyOutcome::EmptyPair(h, k) => {
                panic!("family reported empty pair {h} {k} despite pairwise intersection")
            }
        }
        found += 1;
    }
    println!("pass: criterion 6 — 500 pairwise-intersecting families all have a common vertex");
}

#[test]
fn criterion_07_interval_endpoints_and_embedding() {
    let mut rng = rng(0xC7);
    for t in 0..200 {
        let cc = if t % 2 == 0 {
            random_complex(&mut rng)
        } else {
            let complexes = corpus::complexes();
            pick(&mut rng, &complexes).clone()
        };
        let vs = cc.vertices();
        let (x, y) = (pick(&mut rng, vs), pick(&mut rng, vs));
        let iv = intervals::interval(&cc, x, y).unwrap();

        let eps = intervals::endpoints(&cc, &iv).unwrap();
        assert!(eps.len().is_power_of_two());
        assert!((eps.len().trailing_zeros() as usize) <= cc.system.dimension());

        let (_, coords) = intervals::dilworth_embed(&cc, &iv).unwrap();
        for a in &iv.members {
            for b in &iv.members {
                let l1: i64 = coords[a]
                    .iter()
                    .zip(&coords[b])
                    .map(|(p, q)| (p - q).abs())
                    .sum();
                assert_eq!(l1 as usize, a.distance(b).unwrap());
            }
        }
    }
    println!("pass: criterion 7 — 200 intervals: 2^N endpoints (N ≤ dim), embedding isometric");
}

#[test]
fn criterion_08_lifting() {
    let mut rng = rng(0xC8);
    for _ in 0..200 {
        let cc = random_complex(&mut rng);
        let vs = cc.vertices();
        let v = pick(&mut rng, vs);
        let chosen: Vec<Halfspace> =
            v.halfspaces().into_iter().filter(|_| rng.random_bool(0.4)).collect();
        // upward closure stays inside v's (upward-closed) halfspace set
        let set: Vec<Halfspace> = cc
            .system
            .halfspaces()
            .into_iter()
            .filter(|&k| chosen.iter().any(|&h| cc.system.le(h, k)))
            .collect();

        let lift = lifting::lift(&cc, &set).unwrap();
        let expected: Vec<&Orientation> =
            vs.iter().filter(|u| set.iter().all(|&h| u.selects(h))).collect();
        assert_eq!(lift.image.len(), expected.len());
        for u in &expected {
            assert!(lift.image.contains(*u));
        }
        for a in &lift.image {
            for b in &lift.image {
                let (pa, pb) = (lift.project(a), lift.project(b));
                assert_eq!(pa.distance(&pb).unwrap(), a.distance(b).unwrap());
                assert_eq!(&lift.embed(&pa).unwrap(), a);
            }
        }
    }
    println!("pass: criterion 8 — 200 consistent sets lift isometrically onto exactly ∩ h");
}

#[test]
fn criterion_09_measure_lemma() {
    let mut rng = rng(0xC9);
    for _ in 0..200 {
        let cc = random_complex(&mut rng);
        let vs = cc.vertices();
        let k = rng.random_range(1..=4usize.min(vs.len()));
        let mut support: Vec<Orientation> = Vec::new();
        while support.len() < k {
            let v = *pick(&mut rng, vs);
            if !support.contains(&v) {
                support.push(v);
            }
        }
        let weights: Vec<i64> = (0..k).map(|_| rng.random_range(1..=5i64)).collect();
        let total: i64 = weights.iter().sum();
        let atoms: Vec<(Orientation, BigRational)> = support
            .into_iter()
            .zip(&weights)
            .map(|(v, &w)| (v, BigRational::new(BigInt::from(w), BigInt::from(total))))
            .collect();
        let mu = Measure::new(atoms).unwrap();

        let (plus, balanced) = lifting::majority_halfspaces(&cc.system, &mu).unwrap();
        assert!(lifting::is_consistent(&cc.system, &plus));
        assert!(!cc.system.has_facing_triple(&balanced));

        let lift = lifting::lift(&cc, &plus).unwrap();
        assert!(intervals::is_interval(&cc, &lift.image).unwrap());
        let iv = lifting::measure_interval(&cc, &mu).unwrap();
        let mut image = lift.image.clone();
        image.sort();
        assert_eq!(iv.members, image);
    }
    println!("pass: criterion 9 — 200 measures: majority set consistent, lift is an interval");
}

#[test]
fn criterion_10_restriction_is_1_lipschitz() {
    let mut rng = rng(0xCA);
    for _ in 0..200 {
        let cc = random_complex(&mut rng);
        let kept: Vec<usize> =
            (0..cc.system.wall_count()).filter(|_| rng.random_bool(0.5)).collect();
        let sel = roller::SubsystemSelection::new(&cc.system, kept).unwrap();
        let vs = cc.vertices();
        for _ in 0..20 {
            let (u, v) = (pick(&mut rng, vs), pick(&mut rng, vs));
            let (pu, pv) = (roller::project(&sel, u), roller::project(&sel, v));
            assert!(pu.distance(&pv).unwrap() <= u.distance(v).unwrap());
        }
    }
    println!("pass: criterion 10 — 200 restrictions: projected distances never increase");
}

#[test]
fn criterion_11_product_laws() {
    let complexes = corpus::complexes();
    let mut checked = 0usize;
    for a in &complexes {
        for b in &complexes {
            let (s1, s2) = (&a.system, &b.system);
            if s1.wall_count() + s2.wall_count() > 12 || s1.wall_count() == 0 || s2.wall_count() == 0
            {
                continue;
            }
            let prod = s1.product(s2).unwrap();
            assert_eq!(prod.dimension(), s1.dimension() + s2.dimension());
            assert_eq!(
                prod.irreducible_components().len(),
                s1.irreducible_components().len() + s2.irreducible_components().len()
            );
            let (v1, v2, vp) = (
                CubeComplex::full(s1.clone()).unwrap().vertices().len(),
                CubeComplex::full(s2.clone()).unwrap().vertices().len(),
                CubeComplex::full(prod).unwrap().vertices().len(),
            );
            assert_eq!(vp, v1 * v2);
            checked += 1;
        }
    }
    assert!(checked >= 10);
    println!("pass: criterion 11 — product laws hold on {checked} corpus pairs");
}
