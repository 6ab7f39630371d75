//! Acceptance suite: one test per criterion, exact arithmetic throughout.
//!
//! Each test prints a `PASS` line on success; run with `--nocapture` to
//! see them.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cutpoint::circle::{
    apply_circle_homeo, circle_coordinates, cut_at_basepoint, from_circle_coordinates,
    uncut_basepoint, CircleHomeo, CyclicPoint,
};
use cutpoint::cyclic::{cyclic_nerve, ord_to_cyc, representable_cyclic};
use cutpoint::lambda::{
    check_zplus, double_dual_embedding, dualize, enumerate_zfunctors, find_zplus_iso,
    CycMorphism, ZPlusCategory, ZPlusVerdict,
};
use cutpoint::rational::{int, ratio, Rational};
use cutpoint::realize::{
    apply_homeo, distance, distance_with_refinement, from_coordinates, merge_product,
    split_product, to_coordinates, IntervalHomeo, Measure, RealizationPoint,
    DISTANCE_COMPONENT_CAP,
};
use cutpoint::sset::{subsets, FiniteCategory, ProductSpace, SimplexRef, SimplicialSet};

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den: i64 = rng.gen_range(2..=64);
    let num: i64 = rng.gen_range(1..den);
    ratio(num, den)
}

fn distinct_cuts(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < count {
        set.insert(rand_rational(rng));
    }
    set.into_iter().collect()
}

fn random_point(n: usize, rng: &mut ChaCha8Rng) -> RealizationPoint {
    let dim = rng.gen_range(0..=n);
    let cuts = distinct_cuts(rng, dim);
    let count = subsets(n + 1, dim + 1).len();
    let index = rng.gen_range(0..count);
    RealizationPoint::from_parts(
        &SimplicialSet::representable(n),
        cuts,
        SimplexRef { dim, index },
    )
    .expect("random point is a normal form")
}

fn random_point_of(space: &SimplicialSet, rng: &mut ChaCha8Rng) -> RealizationPoint {
    loop {
        let dim = rng.gen_range(0..=space.dim_bound());
        let count = space.nondegenerate_count(dim);
        if count == 0 {
            continue;
        }
        let cuts = distinct_cuts(rng, dim);
        let index = rng.gen_range(0..count);
        return RealizationPoint::from_parts(space, cuts, SimplexRef { dim, index })
            .expect("random point is a normal form");
    }
}

fn random_homeo(rng: &mut ChaCha8Rng) -> IntervalHomeo {
    let pieces = rng.gen_range(0..=2);
    let interior = distinct_cuts(rng, pieces);
    let values = distinct_cuts(rng, interior.len());
    let mut breakpoints = vec![(int(0), int(0))];
    breakpoints.extend(interior.into_iter().zip(values));
    breakpoints.push((int(1), int(1)));
    IntervalHomeo::new(breakpoints).expect("random breakpoints are monotone")
}

/// Criterion 1: the product bijection is exact both ways on seeded random
/// points over every product of representables with total dimension at
/// most five, in under ten seconds.
#[test]
fn acceptance_1_product_bijection() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in 0..=5usize {
        for q in 0..=5usize {
            if p + q > 5 {
                continue;
            }
            let x = SimplicialSet::representable(p);
            let y = SimplicialSet::representable(q);
            let prod = ProductSpace::new(&x, &y).unwrap();
            for _ in 0..500 {
                // split then merge on a random product point
                let w = random_point_of(prod.presentation(), &mut rng);
                let (l, r) = split_product(&prod, &w).unwrap();
                assert_eq!(merge_product(&prod, &l, &r).unwrap(), w, "({p},{q})");
                // merge then split on a random factor pair
                let l = random_point(p, &mut rng);
                let r = random_point(q, &mut rng);
                let w = merge_product(&prod, &l, &r).unwrap();
                assert_eq!(split_product(&prod, &w).unwrap(), (l, r), "({p},{q})");
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("acceptance 1 (product bijection): PASS ({elapsed:?})");
}

/// Criterion 2: nondegenerate top cells of products of representables are
/// counted by binomial coefficients.
#[test]
fn acceptance_2_shuffle_counts() {
    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
    }
    for p in 0..=5usize {
        for q in 0..=5usize {
            if p + q > 5 {
                continue;
            }
            let x = SimplicialSet::representable(p);
            let y = SimplicialSet::representable(q);
            let prod = ProductSpace::new(&x, &y).unwrap();
            let count = prod.presentation().nondegenerate_count(p + q);
            assert_eq!(count, binomial(p + q, p), "({p},{q})");
        }
    }
    // the two named instances
    let d1 = SimplicialSet::representable(1);
    let d2 = SimplicialSet::representable(2);
    assert_eq!(
        ProductSpace::new(&d1, &d1)
            .unwrap()
            .presentation()
            .nondegenerate_count(2),
        2
    );
    assert_eq!(
        ProductSpace::new(&d2, &d1)
            .unwrap()
            .presentation()
            .nondegenerate_count(3),
        3
    );
    println!("acceptance 2 (shuffle counts): PASS");
}

/// Criterion 3: on the realization of the representable interval with
/// Lebesgue measure, the metric is the coordinate distance, exactly;
/// it is invariant under refinement and satisfies the triangle
/// inequality.
#[test]
fn acceptance_3_metric() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let d1 = SimplicialSet::representable(1);
    let mu = Measure::lebesgue();
    for _ in 0..100 {
        let u = random_point(1, &mut rng);
        let v = random_point(1, &mut rng);
        let d = distance(&d1, &mu, &u, &v).unwrap();
        let cu = to_coordinates(&d1, &u).unwrap();
        let cv = to_coordinates(&d1, &v).unwrap();
        let gap = if cu[0] >= cv[0] {
            &cu[0] - &cv[0]
        } else {
            &cv[0] - &cu[0]
        };
        assert_eq!(d, gap);
        // refinement invariance under five extra cuts
        let extra = distinct_cuts(&mut rng, 5);
        let refined =
            distance_with_refinement(&d1, &mu, &u, &v, &extra, DISTANCE_COMPONENT_CAP).unwrap();
        assert_eq!(d, refined);
    }
    for _ in 0..100 {
        let u = random_point(1, &mut rng);
        let v = random_point(1, &mut rng);
        let w = random_point(1, &mut rng);
        let duv = distance(&d1, &mu, &u, &v).unwrap();
        let duw = distance(&d1, &mu, &u, &w).unwrap();
        let dwv = distance(&d1, &mu, &w, &v).unwrap();
        assert!(duv <= duw + dwv);
    }
    println!("acceptance 3 (metric): PASS");
}

/// Criterion 4: the interval homeomorphisms act exactly, composition and
/// inverses included, and the action commutes with the product bijection.
#[test]
fn acceptance_4_interval_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let x = SimplicialSet::representable(2);
    let y = SimplicialSet::representable(1);
    let prod = ProductSpace::new(&x, &y).unwrap();
    for _ in 0..100 {
        let phi = random_homeo(&mut rng);
        let psi = random_homeo(&mut rng);
        let composed = phi.after(&psi);
        // group laws on points
        let p = random_point_of(prod.presentation(), &mut rng);
        let space = prod.presentation();
        assert_eq!(
            apply_homeo(space, &composed, &p).unwrap(),
            apply_homeo(space, &phi, &apply_homeo(space, &psi, &p).unwrap()).unwrap()
        );
        assert_eq!(apply_homeo(space, &IntervalHomeo::identity(), &p).unwrap(), p);
        assert_eq!(phi.after(&phi.inverse()), IntervalHomeo::identity());
        // equivariance with the product bijection
        let (l, r) = split_product(&prod, &p).unwrap();
        let moved = apply_homeo(space, &phi, &p).unwrap();
        let (ml, mr) = split_product(&prod, &moved).unwrap();
        assert_eq!(ml, apply_homeo(&x, &phi, &l).unwrap());
        assert_eq!(mr, apply_homeo(&y, &phi, &r).unwrap());
    }
    println!("acceptance 4 (interval action): PASS");
}

/// Criterion 5: the dual of each small cyclic object is isomorphic to it
/// and the evaluation into the double dual is an isomorphism, verified
/// morphism by morphism at winding bound three.
#[test]
fn acceptance_5_duality() {
    let w = 3;
    for n in 0..=4usize {
        let cat = ZPlusCategory::cyclic_object(n, w);
        let dual = dualize(&cat, w).unwrap();
        let iso = find_zplus_iso(dual.category(), &cat)
            .unwrap()
            .unwrap_or_else(|| panic!("dual of [{n}] is not isomorphic to it"));
        iso.check(dual.category(), &cat).unwrap();

        let double = dualize(dual.category(), w).unwrap();
        let ev = double_dual_embedding(&cat, &dual, &double).unwrap();
        ev.check(&cat, double.category()).unwrap();
        // bijective on objects
        let mut objects = ev.object_map.clone();
        objects.sort();
        objects.dedup();
        assert_eq!(objects.len(), n + 1, "[{n}]: objects");
        // total and bijective on morphisms
        let mut images: Vec<usize> = ev
            .morphism_map
            .iter()
            .map(|m| m.expect("evaluation is total"))
            .collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), cat.morphism_count(), "[{n}]: morphisms");
        assert_eq!(double.category().morphism_count(), cat.morphism_count());
    }
    println!("acceptance 5 (duality): PASS");
}

/// Criterion 6: the two morphism models agree in count, including the
/// named hom sets and automorphism groups.
#[test]
fn acceptance_6_dual_oracle_counts() {
    for m in 0..=3usize {
        for n in 0..=3usize {
            let homs = CycMorphism::enumerate(m, n);
            let functors = enumerate_zfunctors(
                &ZPlusCategory::cyclic_object(m, 3),
                &ZPlusCategory::cyclic_object(n, 3),
            )
            .unwrap();
            assert_eq!(homs.len(), functors.len(), "({m},{n})");
        }
    }
    assert_eq!(CycMorphism::enumerate(0, 0).len(), 1);
    assert_eq!(CycMorphism::enumerate(1, 0).len(), 2);
    assert_eq!(CycMorphism::enumerate(0, 1).len(), 2);
    for n in 0..=3usize {
        let autos = CycMorphism::enumerate(n, n)
            .into_iter()
            .filter(|f| f.is_automorphism())
            .count();
        assert_eq!(autos, n + 1, "[{n}]");
    }
    println!("acceptance 6 (dual-oracle counts): PASS");
}

/// Criterion 7: the recovery procedure accepts the cyclic completion of
/// every short linear order and rejects every single-entry mutation of
/// the three-element fixture's composition table.
#[test]
fn acceptance_7_recovery_and_mutations() {
    for size in 1..=6usize {
        let labels: Vec<String> = (0..size).map(|i| format!("x{i}")).collect();
        let cat = ord_to_cyc(&labels, 3).unwrap();
        let verdict = check_zplus(&cat).unwrap();
        match verdict {
            ZPlusVerdict::Pass { ref order, .. } => {
                assert_eq!(order.len(), size, "|A| = {size}");
                assert_eq!(order, &(0..size).collect::<Vec<_>>());
            }
            ZPlusVerdict::Fail { witness } => panic!("|A| = {size} rejected: {witness}"),
        }
    }

    let labels: Vec<String> = (0..3).map(|i| format!("x{i}")).collect();
    let fixture = ord_to_cyc(&labels, 3).unwrap();
    let entries: Vec<((usize, usize), usize)> = fixture.composition_entries().collect();
    let mut mutations = 0usize;
    for &(key, value) in &entries {
        let target = fixture.morphism(value);
        for alternative in 0..fixture.morphism_count() {
            if alternative == value {
                continue;
            }
            let alt = fixture.morphism(alternative);
            if alt.src != target.src || alt.dst != target.dst {
                continue;
            }
            let mutated = fixture.with_composition_entry(key, alternative).unwrap();
            let rejected = match check_zplus(&mutated) {
                Ok(v) => !v.is_pass(),
                Err(_) => true,
            };
            assert!(rejected, "mutation at {key:?} -> {alternative} was accepted");
            mutations += 1;
        }
    }
    assert!(mutations > 0);
    println!("acceptance 7 (recovery and mutations): PASS ({mutations} mutations rejected)");
}

/// Criterion 8: the realization of the cyclic point is the circle: the
/// coordinate map is a bijection on a 64-point grid, rotations act
/// compatibly, and the basepoint cut is a bijection onto the realization
/// of the one-vertex/one-edge circle with exact round trips.
#[test]
fn acceptance_8_circle_realization() {
    let space = representable_cyclic(0, 2).unwrap();
    let base = space.underlying();
    // underlying: one vertex, one edge
    assert_eq!(base.nondegenerate_count(0), 1);
    assert_eq!(base.nondegenerate_count(1), 1);

    let vertex = SimplexRef { dim: 0, index: 0 };
    let grid: Vec<Rational> = (0..64).map(|k| ratio(k, 64)).collect();
    let mut coords_seen = BTreeSet::new();
    let mut images = Vec::new();
    for theta in &grid {
        let p = CyclicPoint::from_parts(&space, vec![theta.clone()], vertex).unwrap();
        let coords = circle_coordinates(&space, &p).unwrap();
        assert_eq!(coords, vec![theta.clone()]);
        assert_eq!(from_circle_coordinates(0, &coords).unwrap(), p);
        coords_seen.insert(coords[0].clone());
        // rotations act on coordinates by addition modulo one
        let quarter = CircleHomeo::rotation(&ratio(1, 4));
        let q = apply_circle_homeo(&space, &quarter, &p).unwrap();
        let sum = theta + ratio(1, 4);
        let wrapped = &sum - sum.floor();
        assert_eq!(circle_coordinates(&space, &q).unwrap(), vec![wrapped]);
        // basepoint cut and exact round trip
        let interval = cut_at_basepoint(&space, &p).unwrap();
        assert_eq!(uncut_basepoint(&space, &interval).unwrap(), p);
        if theta == &int(0) {
            assert!(interval.cuts().is_empty());
            assert_eq!(interval.simplex().dim, 0);
        } else {
            assert_eq!(interval.cuts(), &[theta.clone()]);
            assert_eq!(interval.simplex().dim, 1);
        }
        images.push(interval);
    }
    // bijection on the grid
    assert_eq!(coords_seen.len(), 64);
    let mut keys: Vec<String> = images.iter().map(|p| format!("{p:?}")).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), 64);
    // surjectivity onto the grid's interval points: every interval point
    // wraps back to a circle point that cuts to it
    for theta in &grid {
        let interval = if theta == &int(0) {
            RealizationPoint::from_parts(base, vec![], vertex).unwrap()
        } else {
            RealizationPoint::from_parts(
                base,
                vec![theta.clone()],
                SimplexRef { dim: 1, index: 0 },
            )
            .unwrap()
        };
        let wrapped = uncut_basepoint(&space, &interval).unwrap();
        assert_eq!(cut_at_basepoint(&space, &wrapped).unwrap(), interval);
    }
    println!("acceptance 8 (circle realization): PASS");
}

/// Criterion 9: nerve semantics. The nerve of the arrow category has
/// counts (2, 1, 0, ..) and realizes as the unit interval; the cyclic
/// nerve of the two-element group has the stated counts with a rotation
/// of the right order.
#[test]
fn acceptance_9_nerve_semantics() {
    let arrow = FiniteCategory::poset_chain(1);
    let nerve = arrow.nerve(3);
    assert_eq!(nerve.nondegenerate_count(0), 2);
    assert_eq!(nerve.nondegenerate_count(1), 1);
    assert_eq!(nerve.nondegenerate_count(2), 0);
    assert_eq!(nerve.nondegenerate_count(3), 0);
    assert_eq!(nerve.representable_dimension(), Some(1));

    // realization points biject with rational coordinates in [0, 1]
    let grid: Vec<Rational> = (0..=64).map(|k| ratio(k, 64)).collect();
    let mut seen = Vec::new();
    for t in &grid {
        let p = from_coordinates(1, std::slice::from_ref(t)).unwrap();
        assert_eq!(to_coordinates(&nerve, &p).unwrap(), vec![t.clone()]);
        seen.push(p);
    }
    let mut keys: Vec<String> = seen.iter().map(|p| format!("{p:?}")).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), grid.len());

    // cyclic nerve of the two-element group
    let z2 = FiniteCategory::cyclic_group(2);
    let cyclic = cyclic_nerve(&z2, 3).unwrap();
    assert_eq!(cyclic.underlying().all_simplices(0).len(), 2);
    assert_eq!(cyclic.underlying().all_simplices(1).len(), 4);
    // rotation order n + 1 in every dimension
    for n in 0..=cyclic.underlying().dim_bound() {
        for s in cyclic.underlying().all_simplices(n) {
            assert_eq!(cyclic.rotate_power(&s, n + 1).unwrap(), s);
        }
    }
    let report = cyclic.validate();
    assert!(report.is_valid(), "{:?}", report.violations);
    println!("acceptance 9 (nerve semantics): PASS");
}
