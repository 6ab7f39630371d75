//! Finite ordinals, monotone maps, and the duality with bi-pointed orders.
//!
//! Objects are represented positionally: the ordinal `[n]` is `{0, .., n}`
//! and a bi-pointed order of size `k` is `{0, .., k-1}` with `0` bottom and
//! `k-1` top. Morphism equality is value-sequence equality, so both
//! categories are skeletal in this encoding.

use crate::{Error, Result};

/// The finite ordinal `[n] = {0, .., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteOrdinal(pub usize);

impl FiniteOrdinal {
    /// Number of elements, `n + 1`.
    pub fn len(&self) -> usize {
        self.0 + 1
    }

    /// Never: `[n]` always contains `0`.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A nondecreasing map `[m] -> [n]`, stored by its value sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    values: Vec<usize>,
    target: usize,
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidValue("monotone map needs a nonempty source".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidValue(format!("values {values:?} are not nondecreasing")));
        }
        if let Some(&max) = values.last() {
            if max > target {
                return Err(Error::OutOfRange(format!(
                    "value {max} exceeds target ordinal [{target}]"
                )));
            }
        }
        Ok(MonotoneMap { values, target })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap { values: (0..=n).collect(), target: n }
    }

    /// The coface `[n-1] -> [n]` skipping `i`.
    pub fn coface(i: usize, n: usize) -> Self {
        assert!(n >= 1 && i <= n);
        let values = (0..n).map(|x| if x < i { x } else { x + 1 }).collect();
        MonotoneMap { values, target: n }
    }

    /// The codegeneracy `[n+1] -> [n]` repeating `i`.
    pub fn codegeneracy(i: usize, n: usize) -> Self {
        assert!(i <= n);
        let values = (0..=n + 1).map(|x| if x <= i { x } else { x - 1 }).collect();
        MonotoneMap { values, target: n }
    }

    pub fn source(&self) -> FiniteOrdinal {
        FiniteOrdinal(self.values.len() - 1)
    }

    pub fn target(&self) -> FiniteOrdinal {
        FiniteOrdinal(self.target)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// Diagrammatic composition: `self` then `other`.
    pub fn then(&self, other: &MonotoneMap) -> Result<MonotoneMap> {
        if self.target() != other.source() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {:?} -> {:?} with {:?} -> {:?}",
                self.source(),
                self.target(),
                other.source(),
                other.target()
            )));
        }
        Ok(MonotoneMap {
            values: self.values.iter().map(|&v| other.values[v]).collect(),
            target: other.target,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.values.len() - 1 && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Unique epi-mono factorization `self = injection ∘ surjection`.
    pub fn epi_mono(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let k = image.len() - 1;
        let surjection = MonotoneMap {
            values: self
                .values
                .iter()
                .map(|v| image.binary_search(v).unwrap())
                .collect(),
            target: k,
        };
        let injection = MonotoneMap { values: image, target: self.target };
        (surjection, injection)
    }

    /// All monotone maps `[m] -> [n]` in lexicographic order.
    pub fn enumerate(m: usize, n: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut values = vec![0usize; m + 1];
        loop {
            out.push(MonotoneMap { values: values.clone(), target: n });
            // advance to the next nondecreasing sequence
            let mut i = m + 1;
            while i > 0 {
                i -= 1;
                if values[i] < n {
                    let v = values[i] + 1;
                    for slot in values.iter_mut().skip(i) {
                        *slot = v;
                    }
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
        }
    }
}

/// A finite linear order of size at least two, with bottom `0` and top
/// `size - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BiPointedOrder {
    size: usize,
}

impl BiPointedOrder {
    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::InvalidValue(format!(
                "bi-pointed order needs size >= 2, got {size}"
            )));
        }
        Ok(BiPointedOrder { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// An endpoint-preserving nondecreasing map between bi-pointed orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalMap {
    values: Vec<usize>,
    target_size: usize,
}

impl IntervalMap {
    pub fn new(values: Vec<usize>, target_size: usize) -> Result<Self> {
        if values.len() < 2 || target_size < 2 {
            return Err(Error::InvalidValue("interval map needs sizes >= 2".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidValue(format!("values {values:?} are not nondecreasing")));
        }
        if values[0] != 0 || *values.last().unwrap() != target_size - 1 {
            return Err(Error::InvalidValue(
                "interval map must send bottom to bottom and top to top".into(),
            ));
        }
        Ok(IntervalMap { values, target_size })
    }

    pub fn identity(size: usize) -> Self {
        IntervalMap { values: (0..size).collect(), target_size: size }
    }

    pub fn source(&self) -> BiPointedOrder {
        BiPointedOrder { size: self.values.len() }
    }

    pub fn target(&self) -> BiPointedOrder {
        BiPointedOrder { size: self.target_size }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn then(&self, other: &IntervalMap) -> Result<IntervalMap> {
        if self.target() != other.source() {
            return Err(Error::DimensionMismatch("interval map composition".into()));
        }
        Ok(IntervalMap {
            values: self.values.iter().map(|&v| other.values[v]).collect(),
            target_size: other.target_size,
        })
    }
}

/// Dual of `[n]`: the monotone maps `[n] -> {0, 1}` under pointwise order.
///
/// Such maps are thresholds, so the dual is a bi-pointed order of size
/// `n + 2` whose position `j` corresponds to the threshold `n + 1 - j`
/// (position 0 is the constant-0 map, position `n + 1` the constant-1 map).
pub fn ordinal_dual(x: FiniteOrdinal) -> BiPointedOrder {
    BiPointedOrder { size: x.0 + 2 }
}

/// Dual of a bi-pointed order: the endpoint-preserving maps to `{0, 1}`.
///
/// Thresholds `1, .., size - 1` in decreasing order, giving `[size - 2]`.
pub fn interval_dual(j: &BiPointedOrder) -> FiniteOrdinal {
    FiniteOrdinal(j.size - 2)
}

/// The contravariant dual of a monotone map `f: [m] -> [n]`, an interval
/// map `dual([n]) -> dual([m])` given by precomposition with `f`.
pub fn monotone_dual(f: &MonotoneMap) -> IntervalMap {
    let m = f.source().0;
    let n = f.target().0;
    let values = (0..=n + 1)
        .map(|j| {
            let threshold = n + 1 - j;
            // least i with f(i) >= threshold, or m + 1 when none exists
            let pulled = f
                .values
                .iter()
                .position(|&v| v >= threshold)
                .unwrap_or(m + 1);
            m + 1 - pulled
        })
        .collect();
    IntervalMap { values, target_size: m + 2 }
}

/// The contravariant dual of an interval map `g: J -> J'`, a monotone map
/// `dual(J') -> dual(J)` given by precomposition with `g`.
pub fn interval_map_dual(g: &IntervalMap) -> MonotoneMap {
    let k = g.source().size;
    let k2 = g.target().size;
    let values = (0..=k2 - 2)
        .map(|j| {
            let threshold = k2 - 1 - j;
            let pulled = g.values.iter().position(|&v| v >= threshold).unwrap();
            k - 1 - pulled
        })
        .collect();
    MonotoneMap { values, target: k - 2 }
}
