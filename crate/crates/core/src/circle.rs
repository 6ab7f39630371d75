//! Cut-point realization on the circle.
//!
//! A point of the realization of a cyclic set is a non-empty finite set of
//! cuts in `[0, 1)` and a nondegenerate simplex over the complementary
//! arcs, with the canonical indexing that component `i` is the arc
//! beginning at the `i`-th smallest cut. Rotating the labels corresponds
//! to the rotation operator, so each orbit stores exactly one
//! representative; normality additionally requires that dropping the
//! smallest cut is impossible, which happens exactly when the rotation of
//! the simplex carries the top degeneracy letter.

use num_traits::Zero;

use crate::rational::{self, Rational};
use crate::realize::{normalize_point, RealizationPoint};
use crate::cyclic::{representable_cyclic, representable_cyclic_morphism, CyclicSet};
use crate::lambda::CycMorphism;
use crate::sset::{NormalizedSimplex, SimplexRef};
use crate::{Error, Result};

/// A normal-form point of the circle realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPoint {
    cuts: Vec<Rational>,
    simplex: SimplexRef,
}

impl CyclicPoint {
    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn simplex(&self) -> SimplexRef {
        self.simplex
    }

    pub fn from_parts(space: &CyclicSet, cuts: Vec<Rational>, simplex: SimplexRef) -> Result<Self> {
        let p = CyclicPoint { cuts, simplex };
        validate_cyclic_point(space, &p)?;
        Ok(p)
    }
}

fn in_half_open_unit(c: &Rational) -> bool {
    !c.is_negative() && c < &rational::int(1)
}

use num_traits::Signed;

/// Checks normality: sorted distinct cuts in `[0, 1)`, at least one, a
/// nondegenerate simplex of matching dimension, and irreducibility at the
/// smallest cut.
pub fn validate_cyclic_point(space: &CyclicSet, p: &CyclicPoint) -> Result<()> {
    if p.cuts.is_empty() {
        return Err(Error::InvalidValue(
            "a circle point needs at least one cut".into(),
        ));
    }
    if p.cuts.iter().any(|c| !in_half_open_unit(c)) {
        return Err(Error::OutOfRange("circle cuts live in [0,1)".into()));
    }
    for w in p.cuts.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidValue("cuts must be strictly increasing".into()));
        }
    }
    let s = NormalizedSimplex::nondegenerate(p.simplex);
    space.underlying().check_simplex(&s)?;
    if p.simplex.dim + 1 != p.cuts.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} cuts need a simplex of dimension {}",
            p.cuts.len(),
            p.cuts.len() - 1
        )));
    }
    let n = p.simplex.dim;
    if n >= 1 {
        let rotated = space.rotate(&s)?;
        if rotated.word.contains(&(n - 1)) {
            return Err(Error::InvalidValue(
                "point is reducible at the smallest cut".into(),
            ));
        }
    }
    Ok(())
}

/// Normalizes a raw circle configuration.
///
/// `offset` rotates the indexing: component `i` of the given simplex is
/// the arc beginning at cut `(i + offset) mod count` in sorted order. The
/// normal form strips degeneracy letters (deleting the cuts they
/// straddle), reduces across the smallest cut while possible, and stores
/// the canonical indexing.
pub fn normalize_cyclic_point(
    space: &CyclicSet,
    cuts: &[Rational],
    simplex: &NormalizedSimplex,
    offset: usize,
) -> Result<CyclicPoint> {
    if cuts.is_empty() {
        return Err(Error::InvalidValue(
            "the circle realization runs over non-empty cut sets".into(),
        ));
    }
    if cuts.iter().any(|c| !in_half_open_unit(c)) {
        return Err(Error::OutOfRange("circle cuts live in [0,1)".into()));
    }
    let mut sorted = cuts.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidValue("duplicate cut".into()));
        }
    }
    space.underlying().check_simplex(simplex)?;
    if simplex.dim() + 1 != sorted.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} cuts need a simplex of dimension {}, found {}",
            sorted.len(),
            sorted.len() - 1,
            simplex.dim()
        )));
    }

    // canonical indexing: undo the offset with a rotation power
    let period = sorted.len();
    let mut current = space.rotate_power(simplex, (period - offset % period) % period)?;
    let mut cuts = sorted;

    loop {
        // strip degeneracy letters: letter w merges components w and w+1,
        // deleting the cut that starts component w+1
        if !current.word.is_empty() {
            let word = current.word.clone();
            cuts = cuts
                .into_iter()
                .enumerate()
                .filter(|(i, _)| *i == 0 || !word.contains(&(i - 1)))
                .map(|(_, c)| c)
                .collect();
            current = NormalizedSimplex::nondegenerate(current.base);
            continue;
        }
        let n = current.dim();
        if n == 0 {
            break;
        }
        // reduction at the smallest cut: possible exactly when the rotated
        // simplex carries the top degeneracy letter
        let rotated = space.rotate(&current)?;
        if rotated.word.contains(&(n - 1)) {
            let mut word = rotated.word.clone();
            word.retain(|&w| w != n - 1);
            current = NormalizedSimplex { base: rotated.base, word };
            cuts.remove(0);
            continue;
        }
        break;
    }
    debug_assert!(current.is_nondegenerate());
    Ok(CyclicPoint { cuts, simplex: current.base })
}

/// An orientation-preserving homeomorphism of the circle with rational
/// breakpoints, stored as a degree-one lift on `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleHomeo {
    lift: Vec<(Rational, Rational)>,
}

impl CircleHomeo {
    pub fn new(lift: Vec<(Rational, Rational)>) -> Result<Self> {
        if lift.len() < 2 {
            return Err(Error::InvalidValue("need at least the two endpoints".into()));
        }
        if lift.first().unwrap().0 != rational::int(0)
            || lift.last().unwrap().0 != rational::int(1)
        {
            return Err(Error::InvalidValue("lift breakpoints must run from 0 to 1".into()));
        }
        if lift.last().unwrap().1 != &lift.first().unwrap().1 + rational::int(1) {
            return Err(Error::InvalidValue("lift must have degree one".into()));
        }
        for w in lift.windows(2) {
            if w[0].0 >= w[1].0 || w[0].1 >= w[1].1 {
                return Err(Error::InvalidValue(
                    "lift must increase strictly in both coordinates".into(),
                ));
            }
        }
        Ok(CircleHomeo { lift: canonical_lift(lift) })
    }

    /// The rotation by `theta`.
    pub fn rotation(theta: &Rational) -> CircleHomeo {
        CircleHomeo {
            lift: vec![
                (rational::int(0), theta.clone()),
                (rational::int(1), theta + rational::int(1)),
            ],
        }
    }

    pub fn identity() -> CircleHomeo {
        Self::rotation(&rational::int(0))
    }

    pub fn lift(&self) -> &[(Rational, Rational)] {
        &self.lift
    }

    /// The lift evaluated at any real argument, by periodicity.
    pub fn eval_lift(&self, x: &Rational) -> Rational {
        let k = x.floor();
        let base = x - &k;
        let y = interp(&self.lift, &base);
        y + k
    }

    /// The circle map: evaluation modulo one.
    pub fn eval_mod1(&self, x: &Rational) -> Rational {
        let y = self.eval_lift(x);
        &y - y.floor()
    }

    pub fn eval_lift_inverse(&self, y: &Rational) -> Rational {
        let y0 = &self.lift[0].1;
        let k = (y - y0).floor();
        let swapped: Vec<(Rational, Rational)> =
            self.lift.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        let x = interp(&swapped, &(y - &k));
        x + k
    }

    /// Standard composition `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &CircleHomeo) -> CircleHomeo {
        let mut xs: Vec<Rational> = other.lift.iter().map(|p| p.0.clone()).collect();
        // pull the outer breakpoints back through the inner map
        for (b, _) in &self.lift {
            let c = other.lift[0].1.clone();
            // solve other_lift(x) = b + k with x in [0, 1]
            let k_min = (&c - b).ceil();
            let k_max = (&c + rational::int(1) - b).floor();
            let mut k = k_min;
            while k <= k_max {
                let x = other.eval_lift_inverse(&(b + &k));
                if x >= rational::int(0) && x <= rational::int(1) {
                    xs.push(x);
                }
                k += rational::int(1);
            }
        }
        xs.sort();
        xs.dedup();
        let lift = xs
            .into_iter()
            .map(|x| {
                let y = self.eval_lift(&other.eval_lift(&x));
                (x, y)
            })
            .collect();
        CircleHomeo { lift: canonical_lift(lift) }
    }

    pub fn inverse(&self) -> CircleHomeo {
        let x0 = self.eval_lift_inverse(&rational::int(0));
        let mut points = vec![(rational::int(0), x0.clone())];
        for (x, y) in &self.lift {
            let k = (-y).ceil();
            let shifted = y + &k;
            if shifted > rational::int(0) && shifted < rational::int(1) {
                points.push((shifted, x + k));
            }
        }
        points.push((rational::int(1), &x0 + rational::int(1)));
        points.sort_by(|a, b| a.0.cmp(&b.0));
        points.dedup();
        CircleHomeo { lift: canonical_lift(points) }
    }
}

fn interp(points: &[(Rational, Rational)], x: &Rational) -> Rational {
    let last = points.last().unwrap();
    assert!(x >= &points[0].0 && x <= &last.0, "lift argument outside its window");
    if x == &last.0 {
        return last.1.clone();
    }
    let i = points.iter().position(|p| &p.0 > x).unwrap();
    let (ax, ay) = &points[i - 1];
    let (bx, by) = &points[i];
    ay + (by - ay) * (x - ax) / (bx - ax)
}

fn canonical_lift(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for p in points {
        while out.len() >= 2 {
            let a = &out[out.len() - 2];
            let b = &out[out.len() - 1];
            let lhs = (&b.1 - &a.1) * (&p.0 - &a.0);
            let rhs = (&p.1 - &a.1) * (&b.0 - &a.0);
            if lhs == rhs {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    out
}

/// Acts on a circle point: map the cuts, find which one became smallest,
/// and re-canonicalize the indexing with the matching rotation power.
pub fn apply_circle_homeo(
    space: &CyclicSet,
    phi: &CircleHomeo,
    p: &CyclicPoint,
) -> Result<CyclicPoint> {
    validate_cyclic_point(space, p)?;
    let images: Vec<Rational> = p.cuts.iter().map(|c| phi.eval_mod1(c)).collect();
    // the index of the cut whose image is smallest
    let t = (0..images.len())
        .min_by(|&a, &b| images[a].cmp(&images[b]))
        .expect("non-empty cut set");
    let mut new_cuts = images;
    new_cuts.rotate_left(t);
    let simplex = NormalizedSimplex::nondegenerate(p.simplex);
    // new component i starts at the image of old cut (i + t): offset t
    let q = normalize_cyclic_point(
        space,
        &new_cuts,
        &simplex,
        new_cuts.len() - t % new_cuts.len(),
    )?;
    // a homeomorphism is a bijection of the circle: it cannot change the
    // cut count of a normal form
    if q.cuts().len() != p.cuts().len() {
        return Err(Error::InvalidValue(
            "homeomorphism action produced a reducible point".into(),
        ));
    }
    Ok(q)
}

/// Identifies a cyclic presentation as the representable of some `[n]`.
pub fn representable_cyclic_dimension(space: &CyclicSet) -> Option<usize> {
    let count0 = space.underlying().nondegenerate_count(0);
    if count0 == 0 {
        return None;
    }
    let n = count0 - 1;
    let model = representable_cyclic(n, space.underlying().dim_bound()).ok()?;
    if !space.underlying().structurally_equal(model.underlying()) {
        return None;
    }
    for d in 0..=space.underlying().dim_bound() {
        if space.rotation_table(d) != model.rotation_table(d) {
            return None;
        }
    }
    Some(n)
}

/// Circle coordinates of a point of the representable cyclic set of
/// `[n]`: position `x_k` is the cut where the underlying step functor
/// passes the marked point `k`.
pub fn circle_coordinates(space: &CyclicSet, p: &CyclicPoint) -> Result<Vec<Rational>> {
    let n = representable_cyclic_dimension(space).ok_or_else(|| {
        Error::UnsupportedSpace("circle coordinates need a representable cyclic set".into())
    })?;
    validate_cyclic_point(space, p)?;
    let phi = representable_cyclic_morphism(
        n,
        &NormalizedSimplex::nondegenerate(p.simplex),
    )?;
    let m = p.simplex.dim;
    let period = (n + 1) as i64;
    let mut coords = vec![Rational::zero(); n + 1];
    for i in 0..=m {
        // residues crossed entering component i
        let low = phi.value(i as i64 - 1);
        let high = phi.value(i as i64);
        for value in low + 1..=high {
            let k = value.rem_euclid(period) as usize;
            coords[k] = p.cuts[i].clone();
        }
    }
    Ok(coords)
}

/// Inverse of [`circle_coordinates`]: coordinates must be in correct
/// cyclic order (repetitions allowed; when all coincide the anchoring
/// residue is taken to be zero).
pub fn from_circle_coordinates(n: usize, coords: &[Rational]) -> Result<CyclicPoint> {
    if coords.len() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected {} coordinates, got {}",
            n + 1,
            coords.len()
        )));
    }
    if coords.iter().any(|c| !in_half_open_unit(c)) {
        return Err(Error::OutOfRange("circle coordinates live in [0,1)".into()));
    }
    let mut cuts: Vec<Rational> = coords.to_vec();
    cuts.sort();
    cuts.dedup();
    let m = cuts.len() - 1;
    let period = n + 1;
    // batch of residues sitting at each cut
    let batches: Vec<Vec<usize>> = cuts
        .iter()
        .map(|c| (0..period).filter(|&k| &coords[k] == c).collect())
        .collect();
    // each batch must be a consecutive cyclic run; find its last element
    let run_end = |batch: &[usize]| -> Result<usize> {
        if batch.len() == period {
            return Ok(period - 1);
        }
        let ends: Vec<usize> = batch
            .iter()
            .copied()
            .filter(|&b| !batch.contains(&((b + 1) % period)))
            .collect();
        match ends.as_slice() {
            [e] => Ok(*e),
            _ => Err(Error::InvalidValue(
                "coordinates are not in correct cyclic order".into(),
            )),
        }
    };
    let end0 = run_end(&batches[0])?;
    // lift: phi(i) increases by the batch size entering each component
    let mut values = vec![end0 as i64];
    for batch in batches.iter().skip(1) {
        run_end(batch)?;
        let prev = *values.last().unwrap();
        values.push(prev + batch.len() as i64);
    }
    let phi = CycMorphism::new(n, values)?;
    // consistency: the crossings of phi must reproduce the batches
    for (i, batch) in batches.iter().enumerate() {
        let low = phi.value(i as i64 - 1);
        let high = phi.value(i as i64);
        let crossed: Vec<usize> = (low + 1..=high)
            .map(|v| v.rem_euclid(period as i64) as usize)
            .collect();
        let mut sorted = crossed.clone();
        sorted.sort();
        let mut expected = batch.clone();
        expected.sort();
        if sorted != expected {
            return Err(Error::InvalidValue(
                "coordinates are not in correct cyclic order".into(),
            ));
        }
    }
    if !phi.is_strictly_increasing() {
        return Err(Error::InvalidValue("coordinate batches cannot be empty".into()));
    }
    let nondeg: Vec<CycMorphism> = CycMorphism::enumerate(m, n)
        .into_iter()
        .filter(|f| f.is_strictly_increasing())
        .collect();
    let index = nondeg
        .iter()
        .position(|f| f == &phi)
        .ok_or_else(|| Error::InvalidValue("reconstructed simplex not found".into()))?;
    Ok(CyclicPoint { cuts, simplex: SimplexRef { dim: m, index } })
}

/// Reads a circle point as an interval point of the underlying simplicial
/// set by cutting at the basepoint: a cut at position `0` is added when
/// absent (refining the simplex across the wrap), and the circle cuts
/// become interior interval cuts.
pub fn cut_at_basepoint(space: &CyclicSet, p: &CyclicPoint) -> Result<RealizationPoint> {
    validate_cyclic_point(space, p)?;
    let n = p.simplex.dim;
    let simplex = NormalizedSimplex::nondegenerate(p.simplex);
    if p.cuts[0] == Rational::zero() {
        // pure reindexing: component i becomes interval component i
        let interior = p.cuts[1..].to_vec();
        return normalize_point(space.underlying(), &interior, &simplex);
    }
    if n + 1 > space.underlying().dim_bound() {
        return Err(Error::OutOfRange(format!(
            "refining past dimension {} exceeds the presentation bound {}",
            n + 1,
            space.underlying().dim_bound()
        )));
    }
    // refine across the wrap: the collapse dropping the basepoint is the
    // top degeneracy followed by the inverse rotation
    let degenerate = NormalizedSimplex { base: p.simplex, word: vec![n] };
    let refined = space.rotate_power(&degenerate, n + 1)?;
    normalize_point(space.underlying(), &p.cuts, &refined)
}

/// Inverse of [`cut_at_basepoint`]: wrap an interval point around the
/// circle, cutting at the basepoint, then normalize away the basepoint
/// cut when it is redundant.
pub fn uncut_basepoint(space: &CyclicSet, p: &RealizationPoint) -> Result<CyclicPoint> {
    let mut cuts = vec![Rational::zero()];
    cuts.extend_from_slice(p.cuts());
    let simplex = NormalizedSimplex::nondegenerate(p.simplex());
    normalize_cyclic_point(space, &cuts, &simplex, 0)
}
