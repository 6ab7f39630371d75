//! Cut-point realization on the unit interval.
//!
//! A point of the realization of a presentation is a finite set of cuts in
//! `(0, 1)` together with a nondegenerate simplex over the components of
//! the complement, one dimension per interior cut. The normal form is the
//! unique minimal representative: endpoint cuts create no components and
//! are dropped, and every degeneracy letter of the simplex deletes the cut
//! it straddles.
//!
//! Coordinates for representables read a point as a nondecreasing step
//! function; the boundary conventions are `x_0 = 0` and `x_{n+1} = 1`.
//! Note the upper convention: it is the one forced by the requirement
//! that a sorted coordinate tuple and its step function determine each
//! other (any other value for `x_{n+1}` breaks the correspondence at the
//! top vertex), and [`to_coordinates`]/[`from_coordinates`] are exact
//! mutual inverses under it.

use num_traits::Zero;

use crate::delta::MonotoneMap;
use crate::rational::{self, Rational};
use crate::sset::{NormalizedSimplex, ProductSpace, SimplexRef, SimplicialSet};
use crate::{Error, Result};

/// A normal-form point of the interval realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationPoint {
    cuts: Vec<Rational>,
    simplex: SimplexRef,
}

impl RealizationPoint {
    /// Strictly increasing interior cuts.
    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    /// The nondegenerate simplex over the complement components.
    pub fn simplex(&self) -> SimplexRef {
        self.simplex
    }

    /// Assembles a point that is already in normal form.
    pub fn from_parts(
        space: &SimplicialSet,
        cuts: Vec<Rational>,
        simplex: SimplexRef,
    ) -> Result<Self> {
        let p = RealizationPoint { cuts, simplex };
        validate_point(space, &p)?;
        Ok(p)
    }
}

/// Checks that a point is a valid normal form over the space.
pub fn validate_point(space: &SimplicialSet, p: &RealizationPoint) -> Result<()> {
    space.check_simplex(&NormalizedSimplex::nondegenerate(p.simplex))?;
    if p.cuts.len() != p.simplex.dim {
        return Err(Error::DimensionMismatch(format!(
            "{} cuts need a simplex of dimension {}, found {}",
            p.cuts.len(),
            p.cuts.len(),
            p.simplex.dim
        )));
    }
    for w in p.cuts.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidValue("cuts must be strictly increasing".into()));
        }
    }
    if let (Some(first), Some(last)) = (p.cuts.first(), p.cuts.last()) {
        if !rational::is_strictly_between_zero_and_one(first)
            || !rational::is_strictly_between_zero_and_one(last)
        {
            return Err(Error::InvalidValue("cuts must lie strictly inside (0,1)".into()));
        }
    }
    Ok(())
}

/// Normalizes a raw cut configuration.
///
/// Cuts may include `0` and `1` (dropped: they create no components) and
/// arrive in any order; duplicates are rejected. The simplex may be
/// degenerate: each word letter deletes the cut between the two components
/// it merges.
pub fn normalize_point(
    space: &SimplicialSet,
    cuts: &[Rational],
    simplex: &NormalizedSimplex,
) -> Result<RealizationPoint> {
    space.check_simplex(simplex)?;
    let mut sorted = cuts.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidValue("duplicate cut".into()));
        }
    }
    if sorted.iter().any(|c| !rational::in_unit_interval(c)) {
        return Err(Error::OutOfRange("cut outside [0,1]".into()));
    }
    let interior: Vec<Rational> = sorted
        .into_iter()
        .filter(rational::is_strictly_between_zero_and_one)
        .collect();
    if simplex.dim() != interior.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} interior cuts need a simplex of dimension {}, found {}",
            interior.len(),
            interior.len(),
            simplex.dim()
        )));
    }
    let cuts = interior
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !simplex.word.contains(i))
        .map(|(_, c)| c)
        .collect();
    Ok(RealizationPoint { cuts, simplex: simplex.base })
}

/// The collapse surjection from the components of a refinement onto the
/// components of the coarser cut set. Both lists must be sorted and the
/// coarse cuts a subset of the fine ones.
pub fn collapse_map(fine: &[Rational], coarse: &[Rational]) -> MonotoneMap {
    let values = (0..=fine.len())
        .map(|i| {
            if i == 0 {
                0
            } else {
                coarse.iter().filter(|c| **c <= fine[i - 1]).count()
            }
        })
        .collect();
    MonotoneMap::new(values, coarse.len()).expect("collapse of a refinement is monotone")
}

/// Re-expresses a point over a finer cut set, returning the (degenerate)
/// normal form of its image there.
pub fn refine_point(
    space: &SimplicialSet,
    p: &RealizationPoint,
    fine: &[Rational],
) -> Result<NormalizedSimplex> {
    if !p.cuts.iter().all(|c| fine.contains(c)) {
        return Err(Error::InvalidValue("refinement must contain the point's cuts".into()));
    }
    let rho = collapse_map(fine, &p.cuts);
    space.act(&NormalizedSimplex::nondegenerate(p.simplex), &rho)
}

/// Coordinates of a point of the representable on `[n]`.
///
/// The point is read as the nondecreasing step function jumping at its
/// cuts; `x_i` is where the function first reaches `i`, with `x_i = 0` for
/// values attained from the start and `x_i = 1` for values never attained.
pub fn to_coordinates(space: &SimplicialSet, p: &RealizationPoint) -> Result<Vec<Rational>> {
    let n = space
        .representable_dimension()
        .ok_or_else(|| Error::UnsupportedSpace("coordinates need a representable space".into()))?;
    validate_point(space, p)?;
    let values = SimplicialSet::representable_values(n, p.simplex)?;
    let coords = (1..=n)
        .map(|i| {
            if i <= values[0] {
                rational::int(0)
            } else if i > *values.last().unwrap() {
                rational::int(1)
            } else {
                let j = values.iter().position(|&v| i <= v).unwrap();
                p.cuts[j - 1].clone()
            }
        })
        .collect();
    Ok(coords)
}

/// Inverse of [`to_coordinates`]: builds the normal-form point of the
/// representable on `[n]` from sorted coordinates in the unit interval.
pub fn from_coordinates(n: usize, coords: &[Rational]) -> Result<RealizationPoint> {
    if coords.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected {n} coordinates, got {}",
            coords.len()
        )));
    }
    if coords.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidValue("coordinates must be sorted".into()));
    }
    if coords.iter().any(|c| !rational::in_unit_interval(c)) {
        return Err(Error::OutOfRange("coordinate outside [0,1]".into()));
    }
    // boundary conventions x_0 = 0, x_{n+1} = 1
    let zero = Rational::zero();
    let one = rational::int(1);
    let at = |i: usize| -> &Rational {
        if i == 0 {
            &zero
        } else if i == n + 1 {
            &one
        } else {
            &coords[i - 1]
        }
    };
    let attained: Vec<usize> = (0..=n).filter(|&i| at(i) < at(i + 1)).collect();
    let mut cuts: Vec<Rational> = coords
        .iter()
        .filter(|c| rational::is_strictly_between_zero_and_one(c))
        .cloned()
        .collect();
    cuts.dedup();
    let simplex = SimplicialSet::representable_index(n, &attained)?;
    Ok(RealizationPoint { cuts, simplex })
}

/// The canonical bijection from a point of `|X x Y|` to `|X| x |Y|`:
/// project the pair simplex to each factor and normalize.
pub fn split_product(
    prod: &ProductSpace,
    p: &RealizationPoint,
) -> Result<(RealizationPoint, RealizationPoint)> {
    validate_point(prod.presentation(), p)?;
    let (s, t) = prod.components(p.simplex)?;
    let left = normalize_point(prod.left(), &p.cuts, &s.clone())?;
    let right = normalize_point(prod.right(), &p.cuts, &t.clone())?;
    Ok((left, right))
}

/// Inverse of [`split_product`]: refine both factors over the union of the
/// cut sets and pair them. The pair is jointly nondegenerate because every
/// cut belongs to at least one factor.
pub fn merge_product(
    prod: &ProductSpace,
    left: &RealizationPoint,
    right: &RealizationPoint,
) -> Result<RealizationPoint> {
    validate_point(prod.left(), left)?;
    validate_point(prod.right(), right)?;
    let mut union: Vec<Rational> = left.cuts.iter().chain(right.cuts.iter()).cloned().collect();
    union.sort();
    union.dedup();
    let s = refine_point(prod.left(), left, &union)?;
    let t = refine_point(prod.right(), right, &union)?;
    let pair = prod.pair(&s, &t)?;
    debug_assert!(pair.is_nondegenerate());
    Ok(RealizationPoint { cuts: union, simplex: pair.base })
}

/// An orientation-preserving piecewise-linear homeomorphism of `[0, 1]`
/// with rational breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalHomeo {
    breakpoints: Vec<(Rational, Rational)>,
}

impl IntervalHomeo {
    pub fn new(breakpoints: Vec<(Rational, Rational)>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidValue("need at least the two endpoints".into()));
        }
        let first = breakpoints.first().unwrap();
        let last = breakpoints.last().unwrap();
        if first.0 != rational::int(0)
            || first.1 != rational::int(0)
            || last.0 != rational::int(1)
            || last.1 != rational::int(1)
        {
            return Err(Error::InvalidValue("breakpoints must run from (0,0) to (1,1)".into()));
        }
        for w in breakpoints.windows(2) {
            if w[0].0 >= w[1].0 || w[0].1 >= w[1].1 {
                return Err(Error::InvalidValue(
                    "breakpoints must increase strictly in both coordinates".into(),
                ));
            }
        }
        Ok(IntervalHomeo { breakpoints: canonical(breakpoints) })
    }

    pub fn identity() -> Self {
        IntervalHomeo {
            breakpoints: vec![
                (rational::int(0), rational::int(0)),
                (rational::int(1), rational::int(1)),
            ],
        }
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        interpolate(&self.breakpoints, x, |p| (&p.0, &p.1))
    }

    pub fn eval_inverse(&self, y: &Rational) -> Rational {
        interpolate(&self.breakpoints, y, |p| (&p.1, &p.0))
    }

    pub fn inverse(&self) -> IntervalHomeo {
        IntervalHomeo {
            breakpoints: self.breakpoints.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
        }
    }

    /// Standard composition `self ∘ other` (apply `other` first), computed
    /// exactly by merging breakpoints.
    pub fn after(&self, other: &IntervalHomeo) -> IntervalHomeo {
        let mut xs: Vec<Rational> = other.breakpoints.iter().map(|p| p.0.clone()).collect();
        xs.extend(self.breakpoints.iter().map(|p| other.eval_inverse(&p.0)));
        xs.sort();
        xs.dedup();
        let breakpoints = xs
            .into_iter()
            .map(|x| {
                let y = self.eval(&other.eval(&x));
                (x, y)
            })
            .collect();
        IntervalHomeo { breakpoints: canonical(breakpoints) }
    }
}

/// Drops interior breakpoints collinear with their neighbors, so equal
/// homeomorphisms have equal breakpoint lists.
fn canonical(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
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

fn interpolate<'a, T>(
    points: &'a [T],
    x: &Rational,
    project: impl Fn(&'a T) -> (&'a Rational, &'a Rational),
) -> Rational {
    let (x0, _) = project(&points[0]);
    let (xn, yn) = project(points.last().unwrap());
    assert!(x >= x0 && x <= xn, "argument outside [0,1]");
    if x == xn {
        return yn.clone();
    }
    let i = points
        .iter()
        .position(|p| project(p).0 > x)
        .expect("interior argument has a right neighbor");
    let (ax, ay) = project(&points[i - 1]);
    let (bx, by) = project(&points[i]);
    ay + (by - ay) * (x - ax) / (bx - ax)
}

/// Acts on a point by mapping its cuts; the simplex is untouched because
/// the homeomorphism relabels components without merging any.
pub fn apply_homeo(
    space: &SimplicialSet,
    phi: &IntervalHomeo,
    p: &RealizationPoint,
) -> Result<RealizationPoint> {
    validate_point(space, p)?;
    Ok(RealizationPoint {
        cuts: p.cuts.iter().map(|c| phi.eval(c)).collect(),
        simplex: p.simplex,
    })
}

/// A measure on `[0, 1]` with piecewise-constant positive rational density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    breakpoints: Vec<Rational>,
    densities: Vec<Rational>,
}

impl Measure {
    pub fn new(breakpoints: Vec<Rational>, densities: Vec<Rational>) -> Result<Self> {
        if breakpoints.len() < 2
            || breakpoints.first() != Some(&rational::int(0))
            || breakpoints.last() != Some(&rational::int(1))
        {
            return Err(Error::InvalidValue("breakpoints must run from 0 to 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidValue("breakpoints must increase strictly".into()));
        }
        if densities.len() != breakpoints.len() - 1 {
            return Err(Error::InvalidValue("one density per piece required".into()));
        }
        if densities.iter().any(|d| *d <= rational::int(0)) {
            return Err(Error::InvalidValue("densities must be positive".into()));
        }
        Ok(Measure { breakpoints, densities })
    }

    /// Lebesgue measure: density one.
    pub fn lebesgue() -> Measure {
        Measure {
            breakpoints: vec![rational::int(0), rational::int(1)],
            densities: vec![rational::int(1)],
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn densities(&self) -> &[Rational] {
        &self.densities
    }

    /// Measure of the interval `(a, b)`.
    pub fn interval(&self, a: &Rational, b: &Rational) -> Rational {
        assert!(a <= b);
        let mut total = Rational::zero();
        for (i, d) in self.densities.iter().enumerate() {
            let lo = (&self.breakpoints[i]).max(a);
            let hi = (&self.breakpoints[i + 1]).min(b);
            if lo < hi {
                total += d * (hi - lo);
            }
        }
        total
    }

    pub fn total(&self) -> Rational {
        self.interval(&rational::int(0), &rational::int(1))
    }

    /// Pushforward along an interval homeomorphism: on each piece where
    /// both the density and the map are constant-slope, the new density is
    /// the old one divided by the slope.
    pub fn pushforward(&self, phi: &IntervalHomeo) -> Measure {
        let mut xs: Vec<Rational> = self.breakpoints.clone();
        xs.extend(phi.breakpoints().iter().map(|p| p.0.clone()));
        xs.sort();
        xs.dedup();
        let mut breakpoints = Vec::with_capacity(xs.len());
        let mut densities = Vec::with_capacity(xs.len() - 1);
        for (i, x) in xs.iter().enumerate() {
            breakpoints.push(phi.eval(x));
            if i + 1 < xs.len() {
                let slope = (phi.eval(&xs[i + 1]) - phi.eval(x)) / (&xs[i + 1] - x);
                let density = self.density_on(x, &xs[i + 1]);
                densities.push(density / slope);
            }
        }
        Measure { breakpoints, densities }
    }

    fn density_on(&self, lo: &Rational, hi: &Rational) -> Rational {
        let i = self
            .breakpoints
            .windows(2)
            .position(|w| &w[0] <= lo && hi <= &w[1])
            .expect("piece lies inside one density segment");
        self.densities[i].clone()
    }
}

/// Default cap on the component count of the exhaustive metric search.
pub const DISTANCE_COMPONENT_CAP: usize = 20;

/// The measure metric between two points over the same space.
///
/// Both points are re-expressed over the union of their cut sets; the
/// distance is the measure of the complement of a maximal-measure
/// component subset on which the two restrictions agree. The search is
/// exhaustive over subsets, capped at `cap` components.
pub fn distance(
    space: &SimplicialSet,
    mu: &Measure,
    u: &RealizationPoint,
    v: &RealizationPoint,
) -> Result<Rational> {
    distance_with_refinement(space, mu, u, v, &[], DISTANCE_COMPONENT_CAP)
}

/// [`distance`] computed over an explicitly refined cut set; the result
/// does not depend on the extra cuts.
pub fn distance_with_refinement(
    space: &SimplicialSet,
    mu: &Measure,
    u: &RealizationPoint,
    v: &RealizationPoint,
    extra_cuts: &[Rational],
    cap: usize,
) -> Result<Rational> {
    validate_point(space, u)?;
    validate_point(space, v)?;
    if extra_cuts.iter().any(|c| !rational::is_strictly_between_zero_and_one(c)) {
        return Err(Error::OutOfRange("refinement cuts must lie in (0,1)".into()));
    }
    let mut cuts: Vec<Rational> = u
        .cuts
        .iter()
        .chain(v.cuts.iter())
        .chain(extra_cuts.iter())
        .cloned()
        .collect();
    cuts.sort();
    cuts.dedup();
    let n = cuts.len() + 1;
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "{n} components exceed the configured cap {cap}"
        )));
    }
    let u_fine = refine_point(space, u, &cuts)?;
    let v_fine = refine_point(space, v, &cuts)?;

    let mut weights = Vec::with_capacity(n);
    let zero = rational::int(0);
    let one = rational::int(1);
    for i in 0..n {
        let lo = if i == 0 { &zero } else { &cuts[i - 1] };
        let hi = if i == n - 1 { &one } else { &cuts[i] };
        weights.push(mu.interval(lo, hi));
    }
    let total: Rational = weights.iter().fold(Rational::zero(), |a, b| a + b);

    let mut best = Rational::zero();
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let weight: Rational = members.iter().map(|&i| weights[i].clone()).sum();
        if weight <= best {
            continue;
        }
        let inclusion =
            MonotoneMap::new(members.clone(), n - 1).expect("subset inclusion is monotone");
        let ru = space.act(&u_fine, &inclusion)?;
        let rv = space.act(&v_fine, &inclusion)?;
        if ru == rv {
            best = weight;
        }
    }
    Ok(total - best)
}
