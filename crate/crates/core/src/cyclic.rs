//! Cyclic sets: simplicial presentations with a rotation action.
//!
//! The rotation operator is stored per dimension as a map on the canonical
//! enumeration of *all* simplices (the rotation of a nondegenerate simplex
//! can be degenerate, and conversely: the simplicial circle's edge
//! rotates onto the degenerate loop at its vertex, so a table on
//! nondegenerate simplices alone cannot represent the action).
//!
//! The rotation convention is the action of the cyclic-category
//! automorphism sending each component to the next one: on cyclic nerve
//! words it shifts links one step to the left. The relation set checked by
//! [`CyclicSet::validate`] is, per dimension `n`:
//!
//! - `tau^(n+1) = id`, and `tau` is a bijection;
//! - `d_i . tau = tau . d_(i+1)` for `i < n`, and `d_n . tau = d_0`;
//! - `tau . s_j = s_(j-1) . tau` for `1 <= j <= n-1`, and
//!   `tau^2 . s_0 = s_(n-1) . tau`.
//!
//! These are cross-validated against the representable model, which is
//! built purely from cyclic-category composition.

use std::collections::HashMap;

use crate::delta::MonotoneMap;
use crate::lambda::{CycMorphism, GradedMorphism, ZPlusCategory};
use crate::sset::{
    FiniteCategory, FiniteFunctor, NormalizedSimplex, SimplexRef, SimplicialSet,
    ValidationReport,
};
use crate::{Error, Result};

/// A finite cyclic-set presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSet {
    base: SimplicialSet,
    tau: Vec<Vec<NormalizedSimplex>>,
    positions: Vec<HashMap<NormalizedSimplex, usize>>,
}

impl CyclicSet {
    /// Wraps a simplicial presentation with rotation tables, one entry per
    /// simplex in the canonical all-simplex enumeration of each dimension.
    pub fn new(base: SimplicialSet, tau: Vec<Vec<NormalizedSimplex>>) -> Result<Self> {
        if tau.len() != base.dim_bound() + 1 {
            return Err(Error::InvalidValue(format!(
                "expected {} rotation tables, got {}",
                base.dim_bound() + 1,
                tau.len()
            )));
        }
        let mut positions = Vec::new();
        for (n, table) in tau.iter().enumerate() {
            let all = base.all_simplices(n);
            if table.len() != all.len() {
                return Err(Error::InvalidValue(format!(
                    "rotation table in dimension {n} has {} entries, expected {}",
                    table.len(),
                    all.len()
                )));
            }
            for entry in table {
                base.check_simplex(entry)?;
                if entry.dim() != n {
                    return Err(Error::InvalidValue(format!(
                        "rotation image {entry:?} has the wrong dimension"
                    )));
                }
            }
            let mut map = HashMap::new();
            for (i, s) in all.into_iter().enumerate() {
                map.insert(s, i);
            }
            positions.push(map);
        }
        Ok(CyclicSet { base, tau, positions })
    }

    /// The underlying simplicial set, forgetting the rotation.
    pub fn underlying(&self) -> &SimplicialSet {
        &self.base
    }

    pub fn rotation_table(&self, n: usize) -> &[NormalizedSimplex] {
        &self.tau[n]
    }

    fn position(&self, s: &NormalizedSimplex) -> Result<usize> {
        let n = s.dim();
        self.positions
            .get(n)
            .and_then(|m| m.get(s))
            .copied()
            .ok_or_else(|| Error::OutOfRange(format!("simplex {s:?} not in dimension {n}")))
    }

    /// One application of the rotation operator.
    pub fn rotate(&self, s: &NormalizedSimplex) -> Result<NormalizedSimplex> {
        let i = self.position(s)?;
        Ok(self.tau[s.dim()][i].clone())
    }

    pub fn rotate_power(&self, s: &NormalizedSimplex, k: usize) -> Result<NormalizedSimplex> {
        let period = s.dim() + 1;
        let mut out = s.clone();
        for _ in 0..(k % period) {
            out = self.rotate(&out)?;
        }
        Ok(out)
    }

    /// The full cyclic action `X(f)` through the source factorization of
    /// `f` into an embedded monotone map after a rotation power.
    pub fn act_cyclic(&self, s: &NormalizedSimplex, f: &CycMorphism) -> Result<NormalizedSimplex> {
        if f.target().0 != s.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cyclic map targets [{}] but simplex has dimension {}",
                f.target().0,
                s.dim()
            )));
        }
        let (g, k) = f.source_factor();
        let stepped = self.base.act(s, &g)?;
        self.rotate_power(&stepped, k)
    }

    /// Checks the rotation tables against the relation set in the module
    /// docs.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.base.validate();
        for n in 0..=self.base.dim_bound() {
            let all = self.base.all_simplices(n);
            // bijection
            let mut seen = vec![false; all.len()];
            for s in &all {
                match self.rotate(s).and_then(|t| self.position(&t)) {
                    Ok(i) => {
                        if seen[i] {
                            report
                                .violations
                                .push(format!("rotation is not injective in dimension {n}"));
                        }
                        seen[i] = true;
                    }
                    Err(e) => report.violations.push(format!("rotation lookup failed: {e}")),
                }
            }
            for s in &all {
                // order n + 1
                match self.rotate_power(s, n + 1) {
                    Ok(t) if &t == s => {}
                    Ok(t) => report.violations.push(format!(
                        "rotation order: tau^{} of {s:?} is {t:?} in dimension {n}",
                        n + 1
                    )),
                    Err(e) => report.violations.push(format!("rotation order check: {e}")),
                }
                if n == 0 {
                    continue;
                }
                // face relations
                let rotated = match self.rotate(s) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                for i in 0..n {
                    let lhs = self.base.act(&rotated, &MonotoneMap::coface(i, n));
                    let rhs = self
                        .base
                        .act(s, &MonotoneMap::coface(i + 1, n))
                        .and_then(|t| self.rotate(&t));
                    if lhs.as_ref().ok() != rhs.as_ref().ok() || lhs.is_err() {
                        report.violations.push(format!(
                            "face relation d_{i} tau = tau d_{} fails at {s:?}",
                            i + 1
                        ));
                    }
                }
                let lhs = self.base.act(&rotated, &MonotoneMap::coface(n, n));
                let rhs = self.base.act(s, &MonotoneMap::coface(0, n));
                if lhs.ok() != rhs.ok() {
                    report
                        .violations
                        .push(format!("face relation d_{n} tau = d_0 fails at {s:?}"));
                }
            }
            // degeneracy relations into dimension n
            if n >= 1 {
                for u in self.base.all_simplices(n - 1) {
                    let rotated_u = match self.rotate(&u) {
                        Ok(t) => t,
                        Err(_) => continue,
                    };
                    for j in 1..n {
                        let lhs = self
                            .base
                            .act(&u, &MonotoneMap::codegeneracy(j, n - 1))
                            .and_then(|t| self.rotate(&t));
                        let rhs =
                            self.base.act(&rotated_u, &MonotoneMap::codegeneracy(j - 1, n - 1));
                        if lhs.ok() != rhs.ok() {
                            report.violations.push(format!(
                                "degeneracy relation tau s_{j} = s_{} tau fails at {u:?}",
                                j - 1
                            ));
                        }
                    }
                    let lhs = self
                        .base
                        .act(&u, &MonotoneMap::codegeneracy(0, n - 1))
                        .and_then(|t| self.rotate(&t))
                        .and_then(|t| self.rotate(&t));
                    let rhs =
                        self.base.act(&rotated_u, &MonotoneMap::codegeneracy(n - 1, n - 1));
                    if lhs.ok() != rhs.ok() {
                        report.violations.push(format!(
                            "degeneracy relation tau^2 s_0 = s_{} tau fails at {u:?}",
                            n - 1
                        ));
                    }
                }
            }
        }
        report
    }
}

/// A cyclic word over a finite category: objects around the circle and a
/// link from each one to the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicWord {
    pub objects: Vec<usize>,
    pub links: Vec<usize>,
}

impl CyclicWord {
    pub fn new(cat: &FiniteCategory, objects: Vec<usize>, links: Vec<usize>) -> Result<Self> {
        if objects.is_empty() || objects.len() != links.len() {
            return Err(Error::InvalidValue(
                "a cyclic word needs one link per object".into(),
            ));
        }
        let n1 = objects.len();
        for (i, &l) in links.iter().enumerate() {
            let m = cat.morphism(l);
            if m.src != objects[i] || m.dst != objects[(i + 1) % n1] {
                return Err(Error::InvalidValue(format!(
                    "link {i} does not match its endpoints"
                )));
            }
        }
        Ok(CyclicWord { objects, links })
    }

    /// Dimension of the simplex the word presents.
    pub fn dim(&self) -> usize {
        self.objects.len() - 1
    }

    /// The action of a cyclic-category morphism by reindexing components
    /// and composing the links along each step.
    pub fn act(&self, cat: &FiniteCategory, f: &CycMorphism) -> Result<CyclicWord> {
        if f.target().0 != self.dim() {
            return Err(Error::DimensionMismatch("word action dimension".into()));
        }
        let n1 = self.objects.len();
        let m1 = f.source().0 + 1;
        let objects: Vec<usize> = (0..m1)
            .map(|x| self.objects[f.value(x as i64).rem_euclid(n1 as i64) as usize])
            .collect();
        let mut links = Vec::with_capacity(m1);
        for x in 0..m1 {
            let from = f.value(x as i64);
            let to = f.value(x as i64 + 1);
            let mut acc = cat.identity(objects[x]);
            for t in from..to {
                let link = self.links[t.rem_euclid(n1 as i64) as usize];
                acc = cat.compose(link, acc)?;
            }
            links.push(acc);
        }
        CyclicWord::new(cat, objects, links)
    }

    /// Simplicial normal form: strip identity links away from the wrap
    /// position; the stripped positions are the degeneracy word.
    fn normal_form(
        &self,
        cat: &FiniteCategory,
        index: &[HashMap<CyclicWord, usize>],
    ) -> NormalizedSimplex {
        let n = self.dim();
        let mut word = Vec::new();
        let mut objects = Vec::new();
        let mut links = Vec::new();
        for i in 0..=n {
            if i < n && cat.is_identity(self.links[i]) {
                word.push(i);
            } else {
                objects.push(self.objects[i]);
                links.push(self.links[i]);
            }
        }
        // the wrap link always survives; objects rotate with it
        let core = CyclicWord { objects, links };
        let d = core.dim();
        let base_index = index[d][&core];
        NormalizedSimplex { base: SimplexRef { dim: d, index: base_index }, word }
    }
}

/// The cyclic nerve of a finite category: `n`-simplices are functors from
/// the cyclic object `[n]`, i.e. cyclic words of `n + 1` composable links;
/// the rotation shifts the word.
pub fn cyclic_nerve(cat: &FiniteCategory, dim_bound: usize) -> Result<CyclicSet> {
    // enumerate all words per dimension
    let mut words_by_dim: Vec<Vec<CyclicWord>> = Vec::new();
    for n in 0..=dim_bound {
        let mut words = Vec::new();
        // chains of n+1 links with cyclically matching endpoints
        let mut stack: Vec<(Vec<usize>, Vec<usize>)> = (0..cat.object_count())
            .map(|o| (vec![o], Vec::new()))
            .collect();
        stack.reverse();
        while let Some((objects, links)) = stack.pop() {
            if links.len() == n + 1 {
                if objects[0] == *objects.last().unwrap() {
                    let objects = objects[..objects.len() - 1].to_vec();
                    words.push(CyclicWord { objects, links });
                }
                continue;
            }
            let last = *objects.last().unwrap();
            for m in (0..cat.morphism_count()).rev() {
                if cat.morphism(m).src == last {
                    let mut objects = objects.clone();
                    let mut links = links.clone();
                    objects.push(cat.morphism(m).dst);
                    links.push(m);
                    stack.push((objects, links));
                }
            }
        }
        words_by_dim.push(words);
    }

    // nondegenerate words: no identity link before the wrap position
    let mut nondeg_by_dim: Vec<Vec<CyclicWord>> = Vec::new();
    let mut index: Vec<HashMap<CyclicWord, usize>> = Vec::new();
    for (n, words) in words_by_dim.iter().enumerate() {
        let nondeg: Vec<CyclicWord> = words
            .iter()
            .filter(|w| !(0..n).any(|i| cat.is_identity(w.links[i])))
            .cloned()
            .collect();
        let mut map = HashMap::new();
        for (i, w) in nondeg.iter().enumerate() {
            map.insert(w.clone(), i);
        }
        nondeg_by_dim.push(nondeg);
        index.push(map);
    }

    let label = |w: &CyclicWord| -> String {
        w.links
            .iter()
            .map(|&l| cat.morphism(l).label.clone())
            .collect::<Vec<_>>()
            .join(";")
    };

    let mut labels = Vec::new();
    let mut faces = Vec::new();
    for (n, nondeg) in nondeg_by_dim.iter().enumerate() {
        labels.push(nondeg.iter().map(&label).collect::<Vec<_>>());
        let mut dim_faces = Vec::new();
        for w in nondeg {
            let mut entry = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    let face = w.act(
                        cat,
                        &CycMorphism::from_monotone(&MonotoneMap::coface(i, n)),
                    )?;
                    entry.push(face.normal_form(cat, &index));
                }
            }
            dim_faces.push(entry);
        }
        faces.push(dim_faces);
    }
    let base = SimplicialSet::new(dim_bound, labels, faces)?;

    // rotation tables over the all-simplex enumeration
    let mut tau = Vec::new();
    for n in 0..=dim_bound {
        let mut table = Vec::new();
        for s in base.all_simplices(n) {
            let core = &nondeg_by_dim[s.base.dim][s.base.index];
            let word = core.act(
                cat,
                &CycMorphism::from_monotone(&s.surjection()),
            )?;
            let rotated = word.act(cat, &CycMorphism::rotation(n))?;
            table.push(rotated.normal_form(cat, &index));
        }
        tau.push(table);
    }
    CyclicSet::new(base, tau)
}

/// A map of cyclic nerves induced by a functor: relabel objects and links.
pub fn cyclic_nerve_map(
    functor: &FiniteFunctor,
    word: &CyclicWord,
) -> CyclicWord {
    CyclicWord {
        objects: word.objects.iter().map(|&o| functor.object_map[o]).collect(),
        links: word.links.iter().map(|&l| functor.morphism_map[l]).collect(),
    }
}

/// The representable cyclic set of the cyclic object `[n]`: `m`-simplices
/// are cyclic-category morphisms `[m] -> [n]`, faces and rotation act by
/// composition.
pub fn representable_cyclic(n: usize, dim_bound: usize) -> Result<CyclicSet> {
    let homs: Vec<Vec<CycMorphism>> =
        (0..=dim_bound).map(|m| CycMorphism::enumerate(m, n)).collect();
    let nondeg: Vec<Vec<CycMorphism>> = homs
        .iter()
        .map(|level| {
            level
                .iter()
                .filter(|f| f.is_strictly_increasing())
                .cloned()
                .collect()
        })
        .collect();
    let mut index: Vec<HashMap<CycMorphism, usize>> = Vec::new();
    for level in &nondeg {
        let mut map = HashMap::new();
        for (i, f) in level.iter().enumerate() {
            map.insert(f.clone(), i);
        }
        index.push(map);
    }

    let normal_form = |f: &CycMorphism| -> NormalizedSimplex {
        let word = f.adjacent_repeats();
        let mut core_values = f.values().to_vec();
        core_values.dedup();
        let core = CycMorphism::new(n, core_values).expect("core of a morphism");
        let d = core.source().0;
        NormalizedSimplex { base: SimplexRef { dim: d, index: index[d][&core] }, word }
    };

    let mut labels = Vec::new();
    let mut faces = Vec::new();
    for (m, level) in nondeg.iter().enumerate() {
        labels.push(
            level
                .iter()
                .map(|f| {
                    f.values()
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect::<Vec<_>>(),
        );
        let mut dim_faces = Vec::new();
        for f in level {
            let mut entry = Vec::new();
            if m > 0 {
                for i in 0..=m {
                    let face = CycMorphism::from_monotone(&MonotoneMap::coface(i, m))
                        .then(f)
                        .expect("face composition");
                    entry.push(normal_form(&face));
                }
            }
            dim_faces.push(entry);
        }
        faces.push(dim_faces);
    }
    let base = SimplicialSet::new(dim_bound, labels, faces)?;

    let mut tau = Vec::new();
    for m in 0..=dim_bound {
        let mut table = Vec::new();
        for s in base.all_simplices(m) {
            let core = &nondeg[s.base.dim][s.base.index];
            let as_morphism = CycMorphism::from_monotone(&s.surjection())
                .then(core)
                .expect("degeneracy composition");
            let rotated = CycMorphism::rotation(m).then(&as_morphism).expect("rotation");
            table.push(normal_form(&rotated));
        }
        tau.push(table);
    }
    CyclicSet::new(base, tau)
}

/// The element of the representable cyclic set named by a normal form.
pub fn representable_cyclic_morphism(
    n: usize,
    s: &NormalizedSimplex,
) -> Result<CycMorphism> {
    let nondeg: Vec<CycMorphism> = CycMorphism::enumerate(s.base.dim, n)
        .into_iter()
        .filter(|f| f.is_strictly_increasing())
        .collect();
    let core = nondeg
        .get(s.base.index)
        .ok_or_else(|| Error::OutOfRange(format!("no representable simplex {}", s.base)))?;
    CycMorphism::from_monotone(&s.surjection()).then(core)
}

/// The cyclic completion of a finite linear order, presented as a
/// `Z₊`-category: forward arcs are the order's morphisms, backward arcs
/// their formal duals, and the unit of each object is the dual of its
/// identity (the full loop).
pub fn ord_to_cyc(labels: &[String], w: usize) -> Result<ZPlusCategory> {
    if labels.is_empty() {
        return Err(Error::InvalidValue("the order must be non-empty".into()));
    }
    let period = labels.len();
    let mut morphisms = Vec::new();
    let mut key = std::collections::BTreeMap::new();
    for src in 0..period {
        for dst in 0..period {
            for grade in 0..=w {
                let stem = if src == dst {
                    if grade == 0 {
                        format!("id[{}]", labels[src])
                    } else {
                        format!("unit[{}]^{grade}", labels[src])
                    }
                } else if src < dst {
                    format!("f[{}->{}]^{grade}", labels[src], labels[dst])
                } else {
                    format!("f[{}->{}]*^{grade}", labels[dst], labels[src])
                };
                key.insert((src, dst, grade), morphisms.len());
                morphisms.push(GradedMorphism { label: stem, src, dst, grade });
            }
        }
    }
    let min_len = |x: usize, y: usize| -> usize {
        if x == y {
            0
        } else {
            (y + period - x) % period
        }
    };
    let mut composition = std::collections::BTreeMap::new();
    for (&(i, j, a), &f) in &key {
        for (&(j2, k, b), &g) in &key {
            if j != j2 {
                continue;
            }
            let carry = (min_len(i, j) + min_len(j, k) - min_len(i, k)) / period;
            let grade = a + b + carry;
            if grade <= w {
                composition.insert((g, f), key[&(i, k, grade)]);
            }
        }
    }
    let identities = (0..period).map(|i| key[&(i, i, 0)]).collect();
    let units = (0..period).map(|i| key[&(i, i, 1)]).collect();
    ZPlusCategory::new(
        labels.to_vec(),
        w,
        morphisms,
        composition,
        identities,
        units,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::{check_zplus, find_zplus_iso};

    #[test]
    fn cyclic_nerve_of_z2_counts() {
        let z2 = FiniteCategory::cyclic_group(2);
        let nerve = cyclic_nerve(&z2, 3).unwrap();
        // all simplices: |G|^(n+1)
        assert_eq!(nerve.underlying().all_simplices(0).len(), 2);
        assert_eq!(nerve.underlying().all_simplices(1).len(), 4);
        // nondegenerate: first link forced away from the identity
        assert_eq!(nerve.underlying().nondegenerate_count(0), 2);
        assert_eq!(nerve.underlying().nondegenerate_count(1), 2);
        let report = nerve.validate();
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn cyclic_nerve_of_discrete_category() {
        let c = FiniteCategory::discrete(2);
        let nerve = cyclic_nerve(&c, 2).unwrap();
        assert_eq!(nerve.underlying().nondegenerate_count(0), 2);
        assert_eq!(nerve.underlying().nondegenerate_count(1), 0);
        assert_eq!(nerve.underlying().nondegenerate_count(2), 0);
    }

    #[test]
    fn cyclic_nerve_of_trivial_group() {
        let c = FiniteCategory::cyclic_group(1);
        let nerve = cyclic_nerve(&c, 2).unwrap();
        assert_eq!(nerve.underlying().nondegenerate_count(0), 1);
        assert_eq!(nerve.underlying().nondegenerate_count(1), 0);
        assert!(nerve.validate().is_valid());
    }

    #[test]
    fn rotation_shifts_words() {
        let z2 = FiniteCategory::cyclic_group(2);
        let nerve = cyclic_nerve(&z2, 2).unwrap();
        // the nondegenerate 1-simplices are (g1, g0) and (g1, g1); rotation
        // sends (g1, g1) to itself and (g1, g0) to the degenerate (g0, g1)
        let labels: Vec<&str> = (0..2)
            .map(|i| nerve.underlying().label(SimplexRef { dim: 1, index: i }))
            .collect();
        let swap = NormalizedSimplex::nondegenerate(SimplexRef {
            dim: 1,
            index: labels.iter().position(|l| *l == "g1;g0").unwrap(),
        });
        let double = NormalizedSimplex::nondegenerate(SimplexRef {
            dim: 1,
            index: labels.iter().position(|l| *l == "g1;g1").unwrap(),
        });
        assert_eq!(nerve.rotate(&double).unwrap(), double);
        let rotated = nerve.rotate(&swap).unwrap();
        // (g0, g1) = the degeneracy of the loop g1 at the vertex
        assert_eq!(rotated.word, vec![0]);
        assert_eq!(rotated.base.dim, 0);
        // order two on dimension one
        assert_eq!(nerve.rotate(&rotated).unwrap(), swap);
    }

    #[test]
    fn representable_cyclic_point_is_the_circle() {
        let circle = representable_cyclic(0, 2).unwrap();
        assert_eq!(circle.underlying().nondegenerate_count(0), 1);
        assert_eq!(circle.underlying().nondegenerate_count(1), 1);
        assert_eq!(circle.underlying().nondegenerate_count(2), 0);
        let report = circle.validate();
        assert!(report.is_valid(), "{:?}", report.violations);
        // the edge and the degenerate loop swap under rotation
        let edge = NormalizedSimplex::nondegenerate(SimplexRef { dim: 1, index: 0 });
        let rotated = circle.rotate(&edge).unwrap();
        assert_eq!(rotated.word, vec![0]);
        assert_eq!(circle.rotate(&rotated).unwrap(), edge);
    }

    #[test]
    fn representable_cyclic_validates() {
        for n in 0..=2 {
            let x = representable_cyclic(n, n + 2).unwrap();
            let report = x.validate();
            assert!(report.is_valid(), "[{n}]: {:?}", report.violations);
        }
    }

    #[test]
    fn representable_action_is_composition() {
        let n = 1;
        let x = representable_cyclic(n, n + 2).unwrap();
        for m in 0..=n + 1 {
            for s in x.underlying().all_simplices(m) {
                let as_morphism = representable_cyclic_morphism(n, &s).unwrap();
                for k in 0..=n + 1 {
                    for f in CycMorphism::enumerate(k, m) {
                        let acted = x.act_cyclic(&s, &f).unwrap();
                        let composed = f.then(&as_morphism).unwrap();
                        assert_eq!(
                            representable_cyclic_morphism(n, &acted).unwrap(),
                            composed
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ord_to_cyc_single_object() {
        let cat = ord_to_cyc(&["a".into()], 3).unwrap();
        let verdict = check_zplus(&cat).unwrap();
        assert!(verdict.is_pass());
        let model = ZPlusCategory::cyclic_object(0, 3);
        assert!(find_zplus_iso(&cat, &model).unwrap().is_some());
    }

    #[test]
    fn ord_to_cyc_chain_round_trip() {
        let labels: Vec<String> = (0..3).map(|i| format!("x{i}")).collect();
        let cat = ord_to_cyc(&labels, 3).unwrap();
        let verdict = check_zplus(&cat).unwrap();
        assert!(verdict.is_pass());
        assert_eq!(verdict.order().unwrap().len(), 3);
        assert_eq!(verdict.order().unwrap(), &[0, 1, 2]);
        let model = ZPlusCategory::cyclic_object(2, 3);
        assert!(find_zplus_iso(&cat, &model).unwrap().is_some());
    }

    #[test]
    fn ord_to_cyc_dual_generators_compose_to_units() {
        // the two-element chain: f and its dual compose to the units
        let cat = ord_to_cyc(&["a".into(), "b".into()], 3).unwrap();
        let f = cat.hom(0, 1, 0).unwrap();
        let f_dual = cat.hom(1, 0, 0).unwrap();
        assert_eq!(cat.compose(f_dual, f), Some(cat.unit(0)));
        assert_eq!(cat.compose(f, f_dual), Some(cat.unit(1)));
    }

    #[test]
    fn empty_order_rejected() {
        assert!(ord_to_cyc(&[], 3).is_err());
    }

    #[test]
    fn cyclic_nerve_functoriality() {
        // the quotient of Z/4 onto Z/2, and the inclusion of the trivial
        // group into Z/2
        let z1 = FiniteCategory::cyclic_group(1);
        let z2 = FiniteCategory::cyclic_group(2);
        let z4 = FiniteCategory::cyclic_group(4);
        let fixtures: Vec<(FiniteCategory, FiniteCategory, FiniteFunctor)> = vec![
            (
                z1.clone(),
                z2.clone(),
                FiniteFunctor::new(&z1, &z2, vec![0], vec![0]).unwrap(),
            ),
            (
                z4.clone(),
                z2.clone(),
                FiniteFunctor::new(&z4, &z2, vec![0], vec![0, 1, 0, 1]).unwrap(),
            ),
        ];
        for (src, dst, functor) in &fixtures {
            for n in 0..=2usize {
                // enumerate every word over the one-object source
                let mut words = vec![Vec::new()];
                for _ in 0..=n {
                    words = words
                        .into_iter()
                        .flat_map(|w: Vec<usize>| {
                            (0..src.morphism_count()).map(move |m| {
                                let mut w = w.clone();
                                w.push(m);
                                w
                            })
                        })
                        .collect();
                }
                for links in words {
                    let word = CyclicWord::new(src, vec![0; n + 1], links).unwrap();
                    let mapped = cyclic_nerve_map(functor, &word);
                    // commutes with rotation
                    let rot = CycMorphism::rotation(n);
                    assert_eq!(
                        cyclic_nerve_map(functor, &word.act(src, &rot).unwrap()),
                        mapped.act(dst, &rot).unwrap()
                    );
                    // with faces, and with degeneracies
                    if n > 0 {
                        for i in 0..=n {
                            let face = CycMorphism::from_monotone(&MonotoneMap::coface(i, n));
                            assert_eq!(
                                cyclic_nerve_map(functor, &word.act(src, &face).unwrap()),
                                mapped.act(dst, &face).unwrap()
                            );
                        }
                    }
                    for i in 0..=n {
                        let degeneracy =
                            CycMorphism::from_monotone(&MonotoneMap::codegeneracy(i, n));
                        assert_eq!(
                            cyclic_nerve_map(functor, &word.act(src, &degeneracy).unwrap()),
                            mapped.act(dst, &degeneracy).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn broken_rotation_detected() {
        let z2 = FiniteCategory::cyclic_group(2);
        let nerve = cyclic_nerve(&z2, 2).unwrap();
        let mut tables: Vec<Vec<NormalizedSimplex>> = (0..=2)
            .map(|n| nerve.rotation_table(n).to_vec())
            .collect();
        // swap two entries of the dimension-1 table
        tables[1].swap(0, 1);
        let broken = CyclicSet::new(nerve.underlying().clone(), tables).unwrap();
        let report = broken.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("rotation") || v.contains("relation")));
    }
}
