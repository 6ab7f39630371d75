//! Finite simplicial-set presentations.
//!
//! A presentation stores only the nondegenerate simplices, one list per
//! dimension up to a bound, together with a face table whose entries are
//! degeneracy normal forms. Every simplex of the simplicial set is then a
//! unique [`NormalizedSimplex`]: a nondegenerate base plus a canonical
//! degeneracy word.
//!
//! The degeneracy word of a simplex of dimension `m` over a base of
//! dimension `d` is the strictly increasing set of repeat positions of the
//! encoded surjection `[m] -> [d]`; subsets of `{0, .., m-1}` of size
//! `m - d` correspond bijectively to such surjections.

use std::collections::HashMap;
use std::fmt;

use crate::delta::MonotoneMap;
use crate::{Error, Result};

/// Position of a nondegenerate simplex inside a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub dim: usize,
    pub index: usize,
}

impl fmt::Display for SimplexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dim, self.index)
    }
}

/// Degeneracy normal form: a nondegenerate base and a canonical word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalizedSimplex {
    pub base: SimplexRef,
    pub word: Vec<usize>,
}

impl NormalizedSimplex {
    pub fn nondegenerate(base: SimplexRef) -> Self {
        NormalizedSimplex { base, word: Vec::new() }
    }

    /// Total dimension: base dimension plus word length.
    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.word.is_empty()
    }

    /// The encoded surjection `[dim] -> [base.dim]`.
    pub fn surjection(&self) -> MonotoneMap {
        word_to_surjection(&self.word, self.base.dim)
    }
}

/// Builds the surjection whose repeat positions are `word`.
pub fn word_to_surjection(word: &[usize], base_dim: usize) -> MonotoneMap {
    let m = base_dim + word.len();
    let values = (0..=m)
        .map(|x| x - word.iter().filter(|&&w| w < x).count())
        .collect();
    MonotoneMap::new(values, base_dim).expect("word encodes a surjection")
}

/// Reads off the repeat positions of a surjective monotone map.
pub fn surjection_to_word(f: &MonotoneMap) -> Vec<usize> {
    f.values()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == w[1])
        .map(|(i, _)| i)
        .collect()
}

/// All `k`-element subsets of `{0, .., m-1}` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < m - (k - i) {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Outcome of a structural validation pass.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite simplicial-set presentation.
///
/// `labels[n]` names the nondegenerate `n`-simplices; `faces[n][i][k]` is
/// the normal form of the `k`-th face of the `i`-th nondegenerate
/// `n`-simplex. Dimensions above the top nondegenerate dimension are
/// implicitly all-degenerate. Labels are display-only: identity is by
/// `(dim, index)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    dim_bound: usize,
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<NormalizedSimplex>>>,
}

impl SimplicialSet {
    pub fn new(
        dim_bound: usize,
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<NormalizedSimplex>>>,
    ) -> Result<Self> {
        if labels.len() != dim_bound + 1 || faces.len() != dim_bound + 1 {
            return Err(Error::InvalidValue(format!(
                "expected {} dimension slots, got labels {} / faces {}",
                dim_bound + 1,
                labels.len(),
                faces.len()
            )));
        }
        let set = SimplicialSet { dim_bound, labels, faces };
        set.check_well_formed()?;
        Ok(set)
    }

    fn check_well_formed(&self) -> Result<()> {
        if !self.faces[0].iter().all(|f| f.is_empty()) {
            return Err(Error::InvalidValue("vertices cannot carry faces".into()));
        }
        if self.faces[0].len() != self.labels[0].len() {
            return Err(Error::InvalidValue("face table size mismatch in dim 0".into()));
        }
        for n in 1..=self.dim_bound {
            if self.faces[n].len() != self.labels[n].len() {
                return Err(Error::InvalidValue(format!(
                    "face table size mismatch in dim {n}"
                )));
            }
            for (i, entry) in self.faces[n].iter().enumerate() {
                if entry.len() != n + 1 {
                    return Err(Error::InvalidValue(format!(
                        "simplex ({n},{i}) needs {} faces, has {}",
                        n + 1,
                        entry.len()
                    )));
                }
                for (k, face) in entry.iter().enumerate() {
                    self.check_simplex(face).map_err(|e| {
                        Error::InvalidValue(format!("face {k} of ({n},{i}): {e}"))
                    })?;
                    if face.dim() + 1 != n {
                        return Err(Error::InvalidValue(format!(
                            "face {k} of ({n},{i}) has dimension {}, expected {}",
                            face.dim(),
                            n - 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Validates a normal form against this presentation.
    pub fn check_simplex(&self, s: &NormalizedSimplex) -> Result<()> {
        if s.base.dim >= self.labels.len() || s.base.index >= self.labels[s.base.dim].len() {
            return Err(Error::OutOfRange(format!(
                "no nondegenerate simplex at {}",
                s.base
            )));
        }
        let m = s.dim();
        if !s.word.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidValue(format!(
                "degeneracy word {:?} is not strictly increasing",
                s.word
            )));
        }
        if s.word.iter().any(|&w| m == 0 || w >= m) {
            return Err(Error::OutOfRange(format!(
                "degeneracy word {:?} out of range for dimension {m}",
                s.word
            )));
        }
        Ok(())
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    /// Number of nondegenerate `n`-simplices. Dimensions above the top
    /// nondegenerate one are implicitly all-degenerate, so the count above
    /// the bound is zero.
    pub fn nondegenerate_count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    pub fn label(&self, r: SimplexRef) -> &str {
        &self.labels[r.dim][r.index]
    }

    /// Largest dimension carrying a nondegenerate simplex, if any simplex
    /// exists at all.
    pub fn top_dimension(&self) -> Option<usize> {
        (0..=self.dim_bound).rev().find(|&n| !self.labels[n].is_empty())
    }

    pub fn face(&self, r: SimplexRef, i: usize) -> Result<&NormalizedSimplex> {
        if r.dim == 0 {
            return Err(Error::OutOfRange("vertices have no faces".into()));
        }
        self.faces
            .get(r.dim)
            .and_then(|d| d.get(r.index))
            .and_then(|fs| fs.get(i))
            .ok_or_else(|| Error::OutOfRange(format!("face {i} of {r}")))
    }

    /// The functorial action `X(f)` on a simplex in normal form.
    ///
    /// `f` must target the dimension of `s`; the result is the normal form
    /// of the image, of dimension `f.source()`.
    pub fn act(&self, s: &NormalizedSimplex, f: &MonotoneMap) -> Result<NormalizedSimplex> {
        self.check_simplex(s)?;
        if f.target().0 != s.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map targets [{}] but simplex has dimension {}",
                f.target().0,
                s.dim()
            )));
        }
        let composite = f.then(&s.surjection())?;
        let (pi, iota) = composite.epi_mono();
        let y = self.act_injective(s.base, &iota)?;
        let total = pi.then(&y.surjection())?;
        Ok(NormalizedSimplex { base: y.base, word: surjection_to_word(&total) })
    }

    /// Applies face operators for an injection to a nondegenerate base,
    /// peeling the largest missing value through the face table.
    fn act_injective(&self, x: SimplexRef, iota: &MonotoneMap) -> Result<NormalizedSimplex> {
        if iota.is_identity() {
            return Ok(NormalizedSimplex::nondegenerate(x));
        }
        let missing = (0..=x.dim)
            .rev()
            .find(|v| !iota.values().contains(v))
            .expect("non-identity injection misses a value");
        let face = self.face(x, missing)?.clone();
        let residual = MonotoneMap::new(
            iota.values()
                .iter()
                .map(|&v| if v < missing { v } else { v - 1 })
                .collect(),
            x.dim - 1,
        )?;
        self.act(&face, &residual)
    }

    /// Normal form of a base simplex hit by a sequence of face and
    /// degeneracy operators, applied left to right.
    pub fn normalize(&self, base: SimplexRef, ops: &[SimplicialOp]) -> Result<NormalizedSimplex> {
        let start = NormalizedSimplex::nondegenerate(base);
        self.check_simplex(&start)?;
        let mut map = MonotoneMap::identity(base.dim);
        for op in ops {
            let next = match *op {
                SimplicialOp::Face(i) => {
                    let m = map.source().0;
                    if m == 0 || i > m {
                        return Err(Error::OutOfRange(format!(
                            "face {i} undefined in dimension {m}"
                        )));
                    }
                    MonotoneMap::coface(i, m)
                }
                SimplicialOp::Degeneracy(i) => {
                    let m = map.source().0;
                    if i > m {
                        return Err(Error::OutOfRange(format!(
                            "degeneracy {i} undefined in dimension {m}"
                        )));
                    }
                    MonotoneMap::codegeneracy(i, m)
                }
            };
            map = next.then(&map)?;
        }
        self.act(&start, &map)
    }

    /// All simplices of dimension `n` in canonical enumeration order:
    /// nondegenerate first, then by base index and word.
    pub fn all_simplices(&self, n: usize) -> Vec<NormalizedSimplex> {
        let mut out = Vec::new();
        for k in 0..=n {
            let d = n - k;
            if d >= self.labels.len() {
                continue;
            }
            let words = if n == 0 { vec![Vec::new()] } else { subsets(n, k) };
            for index in 0..self.labels[d].len() {
                for word in &words {
                    out.push(NormalizedSimplex {
                        base: SimplexRef { dim: d, index },
                        word: word.clone(),
                    });
                }
            }
        }
        out
    }

    /// Checks the simplicial identities `d_i d_j = d_{j-1} d_i` (`i < j`)
    /// on every nondegenerate simplex up to the bound.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if let Err(e) = self.check_well_formed() {
            report.violations.push(e.to_string());
            return report;
        }
        for n in 2..=self.dim_bound {
            for index in 0..self.labels[n].len() {
                let r = SimplexRef { dim: n, index };
                let s = NormalizedSimplex::nondegenerate(r);
                for j in 1..=n {
                    for i in 0..j {
                        let di = MonotoneMap::coface(i, n);
                        let dj = MonotoneMap::coface(j, n);
                        let left = self
                            .act(&s, &dj)
                            .and_then(|t| self.act(&t, &MonotoneMap::coface(i, n - 1)));
                        let right = self
                            .act(&s, &di)
                            .and_then(|t| self.act(&t, &MonotoneMap::coface(j - 1, n - 1)));
                        // equivalently: act along the composed cofaces
                        let _ = (&di, &dj);
                        match (left, right) {
                            (Ok(a), Ok(b)) if a == b => {}
                            (Ok(a), Ok(b)) => report.violations.push(format!(
                                "d_{i} d_{j} != d_{} d_{i} on {} ({:?} vs {:?})",
                                j - 1,
                                r,
                                a,
                                b
                            )),
                            (Err(e), _) | (_, Err(e)) => report
                                .violations
                                .push(format!("face identity on {r} failed to evaluate: {e}")),
                        }
                    }
                }
            }
        }
        report
    }

    /// The representable simplicial set on `[n]`: nondegenerate
    /// `k`-simplices are the strictly increasing maps `[k] -> [n]`.
    pub fn representable(n: usize) -> SimplicialSet {
        let mut labels = Vec::new();
        let mut faces: Vec<Vec<Vec<NormalizedSimplex>>> = Vec::new();
        for k in 0..=n {
            let injections = subsets(n + 1, k + 1);
            labels.push(
                injections
                    .iter()
                    .map(|v| {
                        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
                    })
                    .collect(),
            );
            let mut dim_faces = Vec::new();
            if k > 0 {
                let lower = subsets(n + 1, k);
                for inj in &injections {
                    let mut entry = Vec::new();
                    for i in 0..=k {
                        let mut vals = inj.clone();
                        vals.remove(i);
                        let index = lower.binary_search(&vals).unwrap();
                        entry.push(NormalizedSimplex::nondegenerate(SimplexRef {
                            dim: k - 1,
                            index,
                        }));
                    }
                    dim_faces.push(entry);
                }
            } else {
                dim_faces = vec![Vec::new(); injections.len()];
            }
            faces.push(dim_faces);
        }
        SimplicialSet { dim_bound: n, labels, faces }
    }

    /// The terminal presentation: a single vertex.
    pub fn point() -> SimplicialSet {
        SimplicialSet::representable(0)
    }

    /// The strictly increasing value sequence of a representable simplex.
    pub fn representable_values(n: usize, r: SimplexRef) -> Result<Vec<usize>> {
        let list = subsets(n + 1, r.dim + 1);
        list.get(r.index)
            .cloned()
            .ok_or_else(|| Error::OutOfRange(format!("no simplex {r} in the representable [{n}]")))
    }

    /// Index of a strictly increasing value sequence in the representable.
    pub fn representable_index(n: usize, values: &[usize]) -> Result<SimplexRef> {
        if values.is_empty() || values.iter().any(|&v| v > n) {
            return Err(Error::OutOfRange(format!("values {values:?} not in [{n}]")));
        }
        let list = subsets(n + 1, values.len());
        let index = list
            .binary_search(&values.to_vec())
            .map_err(|_| Error::InvalidValue(format!("values {values:?} not increasing")))?;
        Ok(SimplexRef { dim: values.len() - 1, index })
    }

    /// Structural comparison ignoring labels.
    pub fn structurally_equal(&self, other: &SimplicialSet) -> bool {
        let counts = |s: &SimplicialSet| -> Vec<usize> {
            (0..=s.dim_bound).map(|n| s.labels[n].len()).collect()
        };
        let trim = |mut v: Vec<usize>| -> Vec<usize> {
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        trim(counts(self)) == trim(counts(other))
            && {
                let top = self.top_dimension();
                top == other.top_dimension()
                    && (0..=top.unwrap_or(0))
                        .all(|n| n == 0 || self.faces.get(n) == other.faces.get(n))
            }
    }

    /// Identifies the presentation as the representable on `[n]`, if it is
    /// one (labels ignored).
    pub fn representable_dimension(&self) -> Option<usize> {
        let n = self.top_dimension()?;
        let model = SimplicialSet::representable(n);
        self.structurally_equal(&model).then_some(n)
    }
}

/// An elementary face or degeneracy operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicialOp {
    Face(usize),
    Degeneracy(usize),
}

/// A finite category given by explicit object, morphism, and composition
/// tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identities: Vec<usize>,
    composition: HashMap<(usize, usize), usize>,
}

/// Source/target data of a morphism in a [`FiniteCategory`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismData {
    pub label: String,
    pub src: usize,
    pub dst: usize,
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismData>,
        identities: Vec<usize>,
        composition: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let cat = FiniteCategory { objects, morphisms, identities, composition };
        cat.check()?;
        Ok(cat)
    }

    fn check(&self) -> Result<()> {
        if self.identities.len() != self.objects.len() {
            return Err(Error::InvalidValue("one identity per object required".into()));
        }
        for (o, &id) in self.identities.iter().enumerate() {
            let m = self
                .morphisms
                .get(id)
                .ok_or_else(|| Error::OutOfRange(format!("identity of object {o}")))?;
            if m.src != o || m.dst != o {
                return Err(Error::InvalidValue(format!(
                    "identity of object {o} is not an endomorphism of it"
                )));
            }
        }
        for m in &self.morphisms {
            if m.src >= self.objects.len() || m.dst >= self.objects.len() {
                return Err(Error::OutOfRange(format!("morphism {} endpoints", m.label)));
            }
        }
        // closure: composition total on composable pairs
        for (f, fd) in self.morphisms.iter().enumerate() {
            for (g, gd) in self.morphisms.iter().enumerate() {
                if fd.dst == gd.src {
                    let &gf = self.composition.get(&(g, f)).ok_or_else(|| {
                        Error::InvalidValue(format!(
                            "composition {} . {} missing",
                            gd.label, fd.label
                        ))
                    })?;
                    let c = &self.morphisms[gf];
                    if c.src != fd.src || c.dst != gd.dst {
                        return Err(Error::InvalidValue(format!(
                            "composition {} . {} has wrong endpoints",
                            gd.label, fd.label
                        )));
                    }
                }
            }
        }
        // identity laws
        for (f, fd) in self.morphisms.iter().enumerate() {
            if self.composition[&(f, self.identities[fd.src])] != f
                || self.composition[&(self.identities[fd.dst], f)] != f
            {
                return Err(Error::InvalidValue(format!(
                    "identity laws fail at {}",
                    fd.label
                )));
            }
        }
        // associativity
        for (f, fd) in self.morphisms.iter().enumerate() {
            for (g, gd) in self.morphisms.iter().enumerate() {
                if fd.dst != gd.src {
                    continue;
                }
                for (h, hd) in self.morphisms.iter().enumerate() {
                    if gd.dst != hd.src {
                        continue;
                    }
                    let left = self.composition[&(h, self.composition[&(g, f)])];
                    let right = self.composition[&(self.composition[&(h, g)], f)];
                    if left != right {
                        return Err(Error::InvalidValue(format!(
                            "associativity fails at {} . {} . {}",
                            hd.label, gd.label, fd.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_label(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, m: usize) -> &MorphismData {
        &self.morphisms[m]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].src] == m && self.morphisms[m].src == self.morphisms[m].dst
    }

    /// `g ∘ f`, for `f: a -> b` and `g: b -> c`.
    pub fn compose(&self, g: usize, f: usize) -> Result<usize> {
        self.composition
            .get(&(g, f))
            .copied()
            .ok_or_else(|| Error::DimensionMismatch("morphisms not composable".into()))
    }

    pub fn morphisms_from_to(&self, src: usize, dst: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].src == src && self.morphisms[m].dst == dst)
            .collect()
    }

    /// The poset `0 < 1 < .. < n` as a category.
    pub fn poset_chain(n: usize) -> FiniteCategory {
        let objects: Vec<String> = (0..=n).map(|i| format!("o{i}")).collect();
        let mut morphisms = Vec::new();
        let mut key = HashMap::new();
        for i in 0..=n {
            for j in i..=n {
                key.insert((i, j), morphisms.len());
                morphisms.push(MorphismData { label: format!("{i}to{j}"), src: i, dst: j });
            }
        }
        let identities = (0..=n).map(|i| key[&(i, i)]).collect();
        let mut composition = HashMap::new();
        for (&(a, b), &f) in &key {
            for (&(b2, c), &g) in &key {
                if b == b2 {
                    composition.insert((g, f), key[&(a, c)]);
                }
            }
        }
        FiniteCategory { objects, morphisms, identities, composition }
    }

    /// A discrete category on `n` objects.
    pub fn discrete(n: usize) -> FiniteCategory {
        let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
        let morphisms = (0..n)
            .map(|i| MorphismData { label: format!("id{i}"), src: i, dst: i })
            .collect();
        let identities = (0..n).collect();
        let composition = (0..n).map(|i| ((i, i), i)).collect();
        FiniteCategory { objects, morphisms, identities, composition }
    }

    /// The cyclic group of order `k` as a one-object category.
    pub fn cyclic_group(k: usize) -> FiniteCategory {
        assert!(k >= 1);
        let objects = vec!["*".to_string()];
        let morphisms = (0..k)
            .map(|i| MorphismData { label: format!("g{i}"), src: 0, dst: 0 })
            .collect();
        let identities = vec![0];
        let mut composition = HashMap::new();
        for a in 0..k {
            for b in 0..k {
                composition.insert((a, b), (a + b) % k);
            }
        }
        FiniteCategory { objects, morphisms, identities, composition }
    }

    /// The nerve: `n`-simplices are composable chains, nondegenerate ones
    /// the identity-free chains.
    pub fn nerve(&self, dim_bound: usize) -> SimplicialSet {
        let mut chains_by_dim: Vec<Vec<Chain>> = Vec::new();
        let dim0: Vec<Chain> = (0..self.objects.len())
            .map(|o| Chain { objects: vec![o], links: Vec::new() })
            .collect();
        chains_by_dim.push(dim0);
        for n in 1..=dim_bound {
            let mut chains = Vec::new();
            for prev in &chains_by_dim[n - 1] {
                let last = *prev.objects.last().unwrap();
                for m in 0..self.morphisms.len() {
                    let md = &self.morphisms[m];
                    if md.src == last && !self.is_identity(m) {
                        let mut objects = prev.objects.clone();
                        objects.push(md.dst);
                        let mut links = prev.links.clone();
                        links.push(m);
                        chains.push(Chain { objects, links });
                    }
                }
            }
            chains_by_dim.push(chains);
        }

        let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
        for chains in &chains_by_dim {
            let mut map = HashMap::new();
            for (i, c) in chains.iter().enumerate() {
                let key = chain_key(c);
                map.insert(key, i);
            }
            index.push(map);
        }

        let mut labels = Vec::new();
        let mut faces = Vec::new();
        for (n, chains) in chains_by_dim.iter().enumerate() {
            labels.push(chains.iter().map(|c| self.chain_label(c)).collect::<Vec<_>>());
            let mut dim_faces = Vec::new();
            for chain in chains {
                let mut entry = Vec::new();
                if n > 0 {
                    for i in 0..=n {
                        let dropped = self.chain_face(chain, i);
                        entry.push(self.normalize_chain(&dropped, &index));
                    }
                }
                dim_faces.push(entry);
            }
            faces.push(dim_faces);
        }
        SimplicialSet { dim_bound, labels, faces }
    }

    fn chain_label(&self, c: &Chain) -> String {
        if c.links.is_empty() {
            self.objects[c.objects[0]].clone()
        } else {
            c.links
                .iter()
                .map(|&m| self.morphisms[m].label.clone())
                .collect::<Vec<_>>()
                .join(";")
        }
    }

    /// Face `i` of a chain: drop an end or compose at an inner object.
    fn chain_face(&self, c: &Chain, i: usize) -> Chain {
        let n = c.links.len();
        let mut objects = c.objects.clone();
        let mut links = c.links.clone();
        if i == 0 {
            objects.remove(0);
            links.remove(0);
        } else if i == n {
            objects.pop();
            links.pop();
        } else {
            let merged = self.composition[&(c.links[i], c.links[i - 1])];
            links[i - 1] = merged;
            links.remove(i);
            objects.remove(i);
        }
        Chain { objects, links }
    }

    /// Normal form of a possibly-identity-bearing chain.
    fn normalize_chain(
        &self,
        c: &Chain,
        index: &[HashMap<Vec<usize>, usize>],
    ) -> NormalizedSimplex {
        let mut word = Vec::new();
        let mut objects = Vec::new();
        let mut links = Vec::new();
        objects.push(c.objects[0]);
        for (t, &m) in c.links.iter().enumerate() {
            if self.is_identity(m) {
                word.push(t);
            } else {
                links.push(m);
                objects.push(c.objects[t + 1]);
            }
        }
        let core = Chain { objects, links };
        let d = core.links.len();
        let base_index = index[d][&chain_key(&core)];
        NormalizedSimplex { base: SimplexRef { dim: d, index: base_index }, word }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Chain {
    objects: Vec<usize>,
    links: Vec<usize>,
}

fn chain_key(c: &Chain) -> Vec<usize> {
    let mut key = c.objects.clone();
    key.push(usize::MAX);
    key.extend_from_slice(&c.links);
    key
}

/// A functor between finite categories, given by object and morphism
/// tables and validated against both composition tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFunctor {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl FiniteFunctor {
    pub fn new(
        source: &FiniteCategory,
        target: &FiniteCategory,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count()
            || morphism_map.len() != source.morphism_count()
        {
            return Err(Error::InvalidValue("functor table sizes".into()));
        }
        for (m, &im) in morphism_map.iter().enumerate() {
            let md = source.morphism(m);
            let td = target.morphism(im);
            if td.src != object_map[md.src] || td.dst != object_map[md.dst] {
                return Err(Error::InvalidValue(format!(
                    "functor breaks endpoints at {}",
                    md.label
                )));
            }
        }
        for o in 0..source.object_count() {
            if morphism_map[source.identity(o)] != target.identity(object_map[o]) {
                return Err(Error::InvalidValue(format!("functor breaks identity at {o}")));
            }
        }
        for f in 0..source.morphism_count() {
            for g in 0..source.morphism_count() {
                if source.morphism(f).dst == source.morphism(g).src {
                    let gf = source.compose(g, f)?;
                    let im = target.compose(morphism_map[g], morphism_map[f])?;
                    if morphism_map[gf] != im {
                        return Err(Error::InvalidValue("functor breaks composition".into()));
                    }
                }
            }
        }
        Ok(FiniteFunctor { object_map, morphism_map })
    }
}

/// The levelwise product of two presentations, remembering how each
/// nondegenerate pair projects to the factors.
#[derive(Debug, Clone)]
pub struct ProductSpace {
    presentation: SimplicialSet,
    left: SimplicialSet,
    right: SimplicialSet,
    pairs: Vec<Vec<(NormalizedSimplex, NormalizedSimplex)>>,
    index: HashMap<(usize, NormalizedSimplex, NormalizedSimplex), usize>,
}

impl ProductSpace {
    /// Builds `X x Y`: nondegenerate `n`-simplices are jointly
    /// nondegenerate pairs (degeneracy words sharing no letter), faces act
    /// componentwise and renormalize.
    pub fn new(x: &SimplicialSet, y: &SimplicialSet) -> Result<ProductSpace> {
        let top_x = x.top_dimension();
        let top_y = y.top_dimension();
        let dim_bound = match (top_x, top_y) {
            (Some(a), Some(b)) => a + b,
            _ => 0,
        };
        let mut pairs: Vec<Vec<(NormalizedSimplex, NormalizedSimplex)>> = Vec::new();
        let mut index = HashMap::new();
        for n in 0..=dim_bound {
            let mut level = Vec::new();
            for s in x.all_simplices(n) {
                for t in y.all_simplices(n) {
                    if words_disjoint(&s.word, &t.word) {
                        index.insert((n, s.clone(), t.clone()), level.len());
                        level.push((s.clone(), t.clone()));
                    }
                }
            }
            pairs.push(level);
        }

        let norm_label = |space: &SimplicialSet, s: &NormalizedSimplex| -> String {
            let mut l = space.label(s.base).to_string();
            for w in &s.word {
                l.push_str(&format!(".s{w}"));
            }
            l
        };

        let mut labels = Vec::new();
        let mut faces: Vec<Vec<Vec<NormalizedSimplex>>> = Vec::new();
        for n in 0..=dim_bound {
            labels.push(
                pairs[n]
                    .iter()
                    .map(|(s, t)| format!("{}|{}", norm_label(x, s), norm_label(y, t)))
                    .collect::<Vec<_>>(),
            );
            let mut dim_faces = Vec::new();
            for (s, t) in &pairs[n] {
                let mut entry = Vec::new();
                if n > 0 {
                    for i in 0..=n {
                        let coface = MonotoneMap::coface(i, n);
                        let fs = x.act(s, &coface)?;
                        let ft = y.act(t, &coface)?;
                        entry.push(pair_normal_form(&index, &fs, &ft)?);
                    }
                }
                dim_faces.push(entry);
            }
            faces.push(dim_faces);
        }
        let presentation = SimplicialSet::new(dim_bound, labels, faces)?;
        Ok(ProductSpace {
            presentation,
            left: x.clone(),
            right: y.clone(),
            pairs,
            index,
        })
    }

    pub fn presentation(&self) -> &SimplicialSet {
        &self.presentation
    }

    pub fn left(&self) -> &SimplicialSet {
        &self.left
    }

    pub fn right(&self) -> &SimplicialSet {
        &self.right
    }

    /// The factor components of a nondegenerate pair simplex.
    pub fn components(&self, r: SimplexRef) -> Result<(&NormalizedSimplex, &NormalizedSimplex)> {
        self.pairs
            .get(r.dim)
            .and_then(|level| level.get(r.index))
            .map(|(a, b)| (a, b))
            .ok_or_else(|| Error::OutOfRange(format!("no pair simplex at {r}")))
    }

    /// Normal form of an arbitrary pair of equal-dimensional simplices.
    pub fn pair(&self, s: &NormalizedSimplex, t: &NormalizedSimplex) -> Result<NormalizedSimplex> {
        if s.dim() != t.dim() {
            return Err(Error::DimensionMismatch(format!(
                "pair components have dimensions {} and {}",
                s.dim(),
                t.dim()
            )));
        }
        pair_normal_form(&self.index, s, t)
    }
}

fn words_disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// Removes the common letters from both words and re-expresses the pair
/// over the jointly nondegenerate core.
fn pair_normal_form(
    index: &HashMap<(usize, NormalizedSimplex, NormalizedSimplex), usize>,
    s: &NormalizedSimplex,
    t: &NormalizedSimplex,
) -> Result<NormalizedSimplex> {
    let common: Vec<usize> = s.word.iter().copied().filter(|w| t.word.contains(w)).collect();
    let strip = |word: &[usize]| -> Vec<usize> {
        word.iter()
            .filter(|w| !common.contains(w))
            .map(|&w| w - common.iter().filter(|&&c| c < w).count())
            .collect()
    };
    let core_s = NormalizedSimplex { base: s.base, word: strip(&s.word) };
    let core_t = NormalizedSimplex { base: t.base, word: strip(&t.word) };
    let d = core_s.dim();
    let i = *index
        .get(&(d, core_s.clone(), core_t.clone()))
        .ok_or_else(|| Error::OutOfRange("pair outside the product enumeration".into()))?;
    Ok(NormalizedSimplex { base: SimplexRef { dim: d, index: i }, word: common })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_surjections_are_inverse() {
        for m in 1..=6 {
            for k in 0..=m {
                for word in subsets(m, k) {
                    let f = word_to_surjection(&word, m - k);
                    assert!(f.is_surjective());
                    assert_eq!(surjection_to_word(&f), word);
                }
            }
        }
    }

    #[test]
    fn representable_counts() {
        let d2 = SimplicialSet::representable(2);
        assert_eq!(d2.nondegenerate_count(0), 3);
        assert_eq!(d2.nondegenerate_count(1), 3);
        assert_eq!(d2.nondegenerate_count(2), 1);
        assert!(d2.validate().is_valid());
        let d1 = SimplicialSet::representable(1);
        assert_eq!(d1.nondegenerate_count(5), 0);
    }

    #[test]
    fn act_identity_fixes_simplices() {
        let d2 = SimplicialSet::representable(2);
        let top = NormalizedSimplex::nondegenerate(SimplexRef { dim: 2, index: 0 });
        let out = d2.act(&top, &MonotoneMap::identity(2)).unwrap();
        assert_eq!(out, top);
    }

    #[test]
    fn act_degeneracy_on_edge() {
        // acting by (0,0,1) on the edge of the representable [1]
        let d1 = SimplicialSet::representable(1);
        let edge = NormalizedSimplex::nondegenerate(SimplexRef { dim: 1, index: 0 });
        let f = MonotoneMap::new(vec![0, 0, 1], 1).unwrap();
        let out = d1.act(&edge, &f).unwrap();
        assert_eq!(out.base, edge.base);
        assert_eq!(out.word, vec![0]);
    }

    #[test]
    fn act_vertex_inclusion() {
        let d1 = SimplicialSet::representable(1);
        let edge = NormalizedSimplex::nondegenerate(SimplexRef { dim: 1, index: 0 });
        let f = MonotoneMap::new(vec![1], 1).unwrap();
        let out = d1.act(&edge, &f).unwrap();
        assert_eq!(out, NormalizedSimplex::nondegenerate(SimplexRef { dim: 0, index: 1 }));
    }

    #[test]
    fn act_dimension_mismatch_rejected() {
        let d1 = SimplicialSet::representable(1);
        let edge = NormalizedSimplex::nondegenerate(SimplexRef { dim: 1, index: 0 });
        assert!(d1.act(&edge, &MonotoneMap::identity(2)).is_err());
    }

    #[test]
    fn functoriality_on_representable() {
        let d2 = SimplicialSet::representable(2);
        for n in 0..=2usize {
            let count = d2.nondegenerate_count(n);
            for index in 0..count {
                let s = NormalizedSimplex::nondegenerate(SimplexRef { dim: n, index });
                for a in 0..=3usize {
                    for f in MonotoneMap::enumerate(a, n) {
                        for b in 0..=3usize {
                            for g in MonotoneMap::enumerate(b, a) {
                                let step = d2.act(&s, &f).unwrap();
                                let two = d2.act(&step, &g).unwrap();
                                let composed = d2.act(&s, &g.then(&f).unwrap()).unwrap();
                                assert_eq!(two, composed);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normalize_words() {
        let d1 = SimplicialSet::representable(1);
        let edge = SimplexRef { dim: 1, index: 0 };
        // already nondegenerate
        let out = d1.normalize(edge, &[]).unwrap();
        assert_eq!(out, NormalizedSimplex::nondegenerate(edge));
        // s_0 then s_2 lands in canonical word [0, 2]
        let out = d1
            .normalize(edge, &[SimplicialOp::Degeneracy(0), SimplicialOp::Degeneracy(2)])
            .unwrap();
        assert_eq!(out.base, edge);
        assert_eq!(out.word, vec![0, 2]);
        // out of range rejected
        assert!(d1.normalize(edge, &[SimplicialOp::Face(5)]).is_err());
    }

    #[test]
    fn normalize_is_idempotent_canonical() {
        let d1 = SimplicialSet::representable(1);
        let edge = SimplexRef { dim: 1, index: 0 };
        for ops in [
            vec![SimplicialOp::Degeneracy(0), SimplicialOp::Degeneracy(0)],
            vec![SimplicialOp::Degeneracy(1), SimplicialOp::Degeneracy(0)],
            vec![SimplicialOp::Degeneracy(0), SimplicialOp::Degeneracy(1)],
        ] {
            let out = d1.normalize(edge, &ops).unwrap();
            assert!(out.word.windows(2).all(|w| w[0] < w[1]));
            // re-normalizing the canonical form is the identity
            let again = d1.act(&out, &MonotoneMap::identity(out.dim())).unwrap();
            assert_eq!(again, out);
        }
    }

    #[test]
    fn validate_flags_broken_identity() {
        // swap two faces of the 2-cell of the representable [2]
        let d2 = SimplicialSet::representable(2);
        let mut labels = Vec::new();
        let mut faces = Vec::new();
        for n in 0..=2 {
            labels.push(
                (0..d2.nondegenerate_count(n))
                    .map(|i| d2.label(SimplexRef { dim: n, index: i }).to_string())
                    .collect::<Vec<_>>(),
            );
            let mut dim = Vec::new();
            for i in 0..d2.nondegenerate_count(n) {
                let mut entry = Vec::new();
                if n > 0 {
                    for k in 0..=n {
                        entry.push(d2.face(SimplexRef { dim: n, index: i }, k).unwrap().clone());
                    }
                }
                dim.push(entry);
            }
            faces.push(dim);
        }
        faces[2][0].swap(0, 2);
        let broken = SimplicialSet::new(2, labels, faces).unwrap();
        let report = broken.validate();
        assert!(!report.is_valid());
        assert!(report.violations[0].contains("d_"));
    }

    #[test]
    fn nerve_of_poset_chain() {
        let c = FiniteCategory::poset_chain(1);
        let n = c.nerve(3);
        assert_eq!(n.nondegenerate_count(0), 2);
        assert_eq!(n.nondegenerate_count(1), 1);
        assert_eq!(n.nondegenerate_count(2), 0);
        assert!(n.validate().is_valid());

        // a three-object chain: built via the nerve, then validated
        let chain = FiniteCategory::poset_chain(2);
        let nerve = chain.nerve(3);
        assert!(nerve.validate().is_valid());

        let chain3 = FiniteCategory::poset_chain(3);
        let nerve = chain3.nerve(4);
        assert!(nerve.validate().is_valid());
    }

    #[test]
    fn nerve_of_discrete_category() {
        let c = FiniteCategory::discrete(3);
        let n = c.nerve(2);
        assert_eq!(n.nondegenerate_count(0), 3);
        assert_eq!(n.nondegenerate_count(1), 0);
        assert_eq!(n.nondegenerate_count(2), 0);
    }

    #[test]
    fn nerve_free_chain_two_simplex() {
        // 0 -> 1 -> 2: a single identity-free 2-chain
        let c = FiniteCategory::poset_chain(2);
        let n = c.nerve(3);
        assert_eq!(n.nondegenerate_count(2), 1);
        assert_eq!(n.nondegenerate_count(3), 0);
    }

    #[test]
    fn nerve_matches_identity_free_chain_count() {
        let c = FiniteCategory::cyclic_group(2);
        let n = c.nerve(3);
        // identity-free chains over Z/2: one choice (the nontrivial element)
        // per link
        for d in 0..=3 {
            assert_eq!(n.nondegenerate_count(d), 1);
        }
        assert!(n.validate().is_valid());
    }

    #[test]
    fn product_shuffle_counts() {
        let d1 = SimplicialSet::representable(1);
        let p = ProductSpace::new(&d1, &d1).unwrap();
        assert_eq!(p.presentation().nondegenerate_count(2), 2);
        assert!(p.presentation().validate().is_valid());

        let d2 = SimplicialSet::representable(2);
        let p = ProductSpace::new(&d2, &d1).unwrap();
        assert_eq!(p.presentation().nondegenerate_count(3), 3);
        assert!(p.presentation().validate().is_valid());
    }

    #[test]
    fn product_with_point_is_the_space() {
        let d2 = SimplicialSet::representable(2);
        let p = ProductSpace::new(&d2, &SimplicialSet::point()).unwrap();
        assert!(p.presentation().structurally_equal(&d2));
    }

    #[test]
    fn product_projections_are_simplicial() {
        let d1 = SimplicialSet::representable(1);
        let p = ProductSpace::new(&d1, &d1).unwrap();
        for n in 1..=p.presentation().dim_bound() {
            for index in 0..p.presentation().nondegenerate_count(n) {
                let r = SimplexRef { dim: n, index };
                let s = NormalizedSimplex::nondegenerate(r);
                for i in 0..=n {
                    let coface = MonotoneMap::coface(i, n);
                    // act in the product, then project each factor
                    let acted = p.presentation().act(&s, &coface).unwrap();
                    let (pa, pb) = p.components(acted.base).unwrap();
                    let (pa, pb) = (pa.clone(), pb.clone());
                    let sigma = word_to_surjection(&acted.word, acted.base.dim);
                    let left_of_acted = p.left().act(&pa, &sigma).unwrap();
                    let right_of_acted = p.right().act(&pb, &sigma).unwrap();
                    // project first, then act in each factor
                    let (a, b) = p.components(r).unwrap();
                    let fa = p.left().act(a, &coface).unwrap();
                    let fb = p.right().act(b, &coface).unwrap();
                    assert_eq!(left_of_acted, fa);
                    assert_eq!(right_of_acted, fb);
                    // and the acted pair is the normal form of (fa, fb)
                    assert_eq!(p.pair(&fa, &fb).unwrap(), acted);
                }
            }
        }
    }

    #[test]
    fn representable_detection_ignores_labels() {
        let c = FiniteCategory::poset_chain(1);
        let n = c.nerve(1);
        assert_eq!(n.representable_dimension(), Some(1));
        let d1 = SimplicialSet::representable(1);
        let p = ProductSpace::new(&d1, &d1).unwrap();
        assert_eq!(p.presentation().representable_dimension(), None);
    }
}
