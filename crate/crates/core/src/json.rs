//! JSON wire formats for every model the command line reads and writes.
//!
//! Rationals travel as `"p/q"` strings (or `"p"` for integers). Simplex
//! references inside face tables are `{"base": [dim, index], "word":
//! [letters]}`; standalone references use `{"dim": .., "index": ..}`.
//! Semantic validation errors name the offending field with an index,
//! e.g. `cuts[1]`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::circle::{CircleHomeo, CyclicPoint};
use crate::cyclic::CyclicSet;
use crate::lambda::{GradedMorphism, ZPlusCategory};
use crate::rational::{self, Rational};
use crate::realize::{IntervalHomeo, Measure, RealizationPoint};
use crate::sset::{
    FiniteCategory, MorphismData, NormalizedSimplex, SimplexRef, SimplicialSet,
};
use crate::{Error, Result};

fn parse_rational_at(s: &str, field: &str, i: usize) -> Result<Rational> {
    rational::parse(s).map_err(|e| Error::InvalidValue(format!("{field}[{i}]: {e}")))
}

fn parse_rationals(xs: &[String], field: &str) -> Result<Vec<Rational>> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| parse_rational_at(s, field, i))
        .collect()
}

fn format_rationals(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(rational::format).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormalizedSimplexWire {
    pub base: (usize, usize),
    #[serde(default)]
    pub word: Vec<usize>,
}

impl From<&NormalizedSimplex> for NormalizedSimplexWire {
    fn from(s: &NormalizedSimplex) -> Self {
        NormalizedSimplexWire { base: (s.base.dim, s.base.index), word: s.word.clone() }
    }
}

impl From<&NormalizedSimplexWire> for NormalizedSimplex {
    fn from(w: &NormalizedSimplexWire) -> Self {
        NormalizedSimplex {
            base: SimplexRef { dim: w.base.0, index: w.base.1 },
            word: w.word.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimplexRefWire {
    pub dim: usize,
    pub index: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimplicialSetWire {
    pub dim_bound: usize,
    pub simplices: Vec<Vec<String>>,
    pub faces: Vec<Vec<Vec<NormalizedSimplexWire>>>,
}

pub fn simplicial_set_to_wire(x: &SimplicialSet) -> SimplicialSetWire {
    let mut simplices = Vec::new();
    let mut faces = Vec::new();
    for n in 0..=x.dim_bound() {
        let count = x.nondegenerate_count(n);
        simplices.push(
            (0..count)
                .map(|i| x.label(SimplexRef { dim: n, index: i }).to_string())
                .collect::<Vec<_>>(),
        );
        let mut level = Vec::new();
        for i in 0..count {
            let mut entry = Vec::new();
            if n > 0 {
                for k in 0..=n {
                    entry.push(NormalizedSimplexWire::from(
                        x.face(SimplexRef { dim: n, index: i }, k).unwrap(),
                    ));
                }
            }
            level.push(entry);
        }
        faces.push(level);
    }
    SimplicialSetWire { dim_bound: x.dim_bound(), simplices, faces }
}

pub fn simplicial_set_from_wire(w: &SimplicialSetWire) -> Result<SimplicialSet> {
    let faces = w
        .faces
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|entry| entry.iter().map(NormalizedSimplex::from).collect())
                .collect()
        })
        .collect();
    SimplicialSet::new(w.dim_bound, w.simplices.clone(), faces)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismWire {
    pub label: String,
    pub src: String,
    pub dst: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategoryWire {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismWire>,
    pub identities: Vec<String>,
    pub composition: Vec<(String, String, String)>,
}

pub fn category_to_wire(c: &FiniteCategory) -> CategoryWire {
    let objects: Vec<String> = (0..c.object_count())
        .map(|o| c.object_label(o).to_string())
        .collect();
    let morphisms = (0..c.morphism_count())
        .map(|m| {
            let d = c.morphism(m);
            MorphismWire {
                label: d.label.clone(),
                src: objects[d.src].clone(),
                dst: objects[d.dst].clone(),
            }
        })
        .collect();
    let identities = (0..c.object_count())
        .map(|o| c.morphism(c.identity(o)).label.clone())
        .collect();
    let mut composition = Vec::new();
    for g in 0..c.morphism_count() {
        for f in 0..c.morphism_count() {
            if c.morphism(f).dst == c.morphism(g).src {
                let gf = c.compose(g, f).unwrap();
                composition.push((
                    c.morphism(g).label.clone(),
                    c.morphism(f).label.clone(),
                    c.morphism(gf).label.clone(),
                ));
            }
        }
    }
    CategoryWire { objects, morphisms, identities, composition }
}

pub fn category_from_wire(w: &CategoryWire) -> Result<FiniteCategory> {
    let object_index: HashMap<&str, usize> = w
        .objects
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    if object_index.len() != w.objects.len() {
        return Err(Error::InvalidValue("objects: duplicate labels".into()));
    }
    let mut morphisms = Vec::new();
    let mut morphism_index = HashMap::new();
    for (i, m) in w.morphisms.iter().enumerate() {
        let src = *object_index
            .get(m.src.as_str())
            .ok_or_else(|| Error::InvalidValue(format!("morphisms[{i}].src: unknown object")))?;
        let dst = *object_index
            .get(m.dst.as_str())
            .ok_or_else(|| Error::InvalidValue(format!("morphisms[{i}].dst: unknown object")))?;
        if morphism_index.insert(m.label.clone(), i).is_some() {
            return Err(Error::InvalidValue(format!(
                "morphisms[{i}].label: duplicate label"
            )));
        }
        morphisms.push(MorphismData { label: m.label.clone(), src, dst });
    }
    let identities = w
        .identities
        .iter()
        .enumerate()
        .map(|(i, l)| {
            morphism_index
                .get(l)
                .copied()
                .ok_or_else(|| Error::InvalidValue(format!("identities[{i}]: unknown morphism")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut composition = HashMap::new();
    for (i, (g, f, gf)) in w.composition.iter().enumerate() {
        let lookup = |label: &str, part: &str| {
            morphism_index.get(label).copied().ok_or_else(|| {
                Error::InvalidValue(format!("composition[{i}].{part}: unknown morphism"))
            })
        };
        composition.insert((lookup(g, "0")?, lookup(f, "1")?), lookup(gf, "2")?);
    }
    FiniteCategory::new(w.objects.clone(), morphisms, identities, composition)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointWire {
    pub cuts: Vec<String>,
    pub simplex: SimplexRefWire,
}

pub fn point_to_wire(p: &RealizationPoint) -> PointWire {
    PointWire {
        cuts: format_rationals(p.cuts()),
        simplex: SimplexRefWire { dim: p.simplex().dim, index: p.simplex().index },
    }
}

pub fn point_from_wire(space: &SimplicialSet, w: &PointWire) -> Result<RealizationPoint> {
    let cuts = parse_rationals(&w.cuts, "cuts")?;
    for i in 1..cuts.len() {
        if cuts[i - 1] >= cuts[i] {
            return Err(Error::InvalidValue(format!("cuts[{i}]: not increasing")));
        }
    }
    RealizationPoint::from_parts(
        space,
        cuts,
        SimplexRef { dim: w.simplex.dim, index: w.simplex.index },
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CyclicPointWire {
    pub cuts: Vec<String>,
    pub simplex: SimplexRefWire,
}

pub fn cyclic_point_to_wire(p: &CyclicPoint) -> CyclicPointWire {
    CyclicPointWire {
        cuts: format_rationals(p.cuts()),
        simplex: SimplexRefWire { dim: p.simplex().dim, index: p.simplex().index },
    }
}

pub fn cyclic_point_from_wire(space: &CyclicSet, w: &CyclicPointWire) -> Result<CyclicPoint> {
    let cuts = parse_rationals(&w.cuts, "cuts")?;
    for i in 1..cuts.len() {
        if cuts[i - 1] >= cuts[i] {
            return Err(Error::InvalidValue(format!("cuts[{i}]: not increasing")));
        }
    }
    CyclicPoint::from_parts(
        space,
        cuts,
        SimplexRef { dim: w.simplex.dim, index: w.simplex.index },
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntervalHomeoWire {
    pub breakpoints: Vec<(String, String)>,
}

pub fn interval_homeo_to_wire(h: &IntervalHomeo) -> IntervalHomeoWire {
    IntervalHomeoWire {
        breakpoints: h
            .breakpoints()
            .iter()
            .map(|(x, y)| (rational::format(x), rational::format(y)))
            .collect(),
    }
}

pub fn interval_homeo_from_wire(w: &IntervalHomeoWire) -> Result<IntervalHomeo> {
    let breakpoints = w
        .breakpoints
        .iter()
        .enumerate()
        .map(|(i, (x, y))| {
            Ok((
                parse_rational_at(x, "breakpoints", i)?,
                parse_rational_at(y, "breakpoints", i)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    IntervalHomeo::new(breakpoints)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CircleHomeoWire {
    pub lift: Vec<(String, String)>,
}

pub fn circle_homeo_to_wire(h: &CircleHomeo) -> CircleHomeoWire {
    CircleHomeoWire {
        lift: h
            .lift()
            .iter()
            .map(|(x, y)| (rational::format(x), rational::format(y)))
            .collect(),
    }
}

pub fn circle_homeo_from_wire(w: &CircleHomeoWire) -> Result<CircleHomeo> {
    let lift = w
        .lift
        .iter()
        .enumerate()
        .map(|(i, (x, y))| {
            Ok((parse_rational_at(x, "lift", i)?, parse_rational_at(y, "lift", i)?))
        })
        .collect::<Result<Vec<_>>>()?;
    CircleHomeo::new(lift)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureWire {
    pub breakpoints: Vec<String>,
    pub densities: Vec<String>,
}

pub fn measure_to_wire(m: &Measure) -> MeasureWire {
    MeasureWire {
        breakpoints: format_rationals(m.breakpoints()),
        densities: format_rationals(m.densities()),
    }
}

pub fn measure_from_wire(w: &MeasureWire) -> Result<Measure> {
    Measure::new(
        parse_rationals(&w.breakpoints, "breakpoints")?,
        parse_rationals(&w.densities, "densities")?,
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GradedMorphismWire {
    pub label: String,
    pub src: String,
    pub dst: String,
    pub grade: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZPlusCategoryWire {
    pub objects: Vec<String>,
    pub winding_bound: usize,
    pub morphisms: Vec<GradedMorphismWire>,
    pub composition: Vec<(String, String, String)>,
    pub identities: Vec<String>,
    pub units: Vec<String>,
}

pub fn zplus_to_wire(c: &ZPlusCategory) -> ZPlusCategoryWire {
    let objects: Vec<String> = (0..c.object_count())
        .map(|o| c.object_label(o).to_string())
        .collect();
    let morphisms = (0..c.morphism_count())
        .map(|m| {
            let d = c.morphism(m);
            GradedMorphismWire {
                label: d.label.clone(),
                src: objects[d.src].clone(),
                dst: objects[d.dst].clone(),
                grade: d.grade,
            }
        })
        .collect();
    let composition = c
        .composition_entries()
        .map(|((g, f), gf)| {
            (
                c.morphism(g).label.clone(),
                c.morphism(f).label.clone(),
                c.morphism(gf).label.clone(),
            )
        })
        .collect();
    let identities = (0..c.object_count())
        .map(|o| c.morphism(c.identity(o)).label.clone())
        .collect();
    let units = (0..c.object_count())
        .map(|o| c.morphism(c.unit(o)).label.clone())
        .collect();
    ZPlusCategoryWire {
        objects,
        winding_bound: c.winding_bound(),
        morphisms,
        composition,
        identities,
        units,
    }
}

pub fn zplus_from_wire(w: &ZPlusCategoryWire) -> Result<ZPlusCategory> {
    let object_index: HashMap<&str, usize> = w
        .objects
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    if object_index.len() != w.objects.len() {
        return Err(Error::InvalidValue("objects: duplicate labels".into()));
    }
    let mut morphisms = Vec::new();
    let mut morphism_index = HashMap::new();
    for (i, m) in w.morphisms.iter().enumerate() {
        let src = *object_index
            .get(m.src.as_str())
            .ok_or_else(|| Error::InvalidValue(format!("morphisms[{i}].src: unknown object")))?;
        let dst = *object_index
            .get(m.dst.as_str())
            .ok_or_else(|| Error::InvalidValue(format!("morphisms[{i}].dst: unknown object")))?;
        if morphism_index.insert(m.label.clone(), i).is_some() {
            return Err(Error::InvalidValue(format!(
                "morphisms[{i}].label: duplicate label"
            )));
        }
        morphisms.push(GradedMorphism { label: m.label.clone(), src, dst, grade: m.grade });
    }
    let lookup_all = |labels: &[String], field: &str| -> Result<Vec<usize>> {
        labels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                morphism_index
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::InvalidValue(format!("{field}[{i}]: unknown morphism")))
            })
            .collect()
    };
    let identities = lookup_all(&w.identities, "identities")?;
    let units = lookup_all(&w.units, "units")?;
    let mut composition = BTreeMap::new();
    for (i, (g, f, gf)) in w.composition.iter().enumerate() {
        let lookup = |label: &str, part: &str| {
            morphism_index.get(label).copied().ok_or_else(|| {
                Error::InvalidValue(format!("composition[{i}].{part}: unknown morphism"))
            })
        };
        composition.insert((lookup(g, "0")?, lookup(f, "1")?), lookup(gf, "2")?);
    }
    ZPlusCategory::new(
        w.objects.clone(),
        w.winding_bound,
        morphisms,
        composition,
        identities,
        units,
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CyclicSetWire {
    pub base: SimplicialSetWire,
    pub tau: Vec<Vec<NormalizedSimplexWire>>,
}

pub fn cyclic_set_to_wire(x: &CyclicSet) -> CyclicSetWire {
    CyclicSetWire {
        base: simplicial_set_to_wire(x.underlying()),
        tau: (0..=x.underlying().dim_bound())
            .map(|n| {
                x.rotation_table(n)
                    .iter()
                    .map(NormalizedSimplexWire::from)
                    .collect()
            })
            .collect(),
    }
}

pub fn cyclic_set_from_wire(w: &CyclicSetWire) -> Result<CyclicSet> {
    let base = simplicial_set_from_wire(&w.base)?;
    let tau = w
        .tau
        .iter()
        .map(|level| level.iter().map(NormalizedSimplex::from).collect())
        .collect();
    CyclicSet::new(base, tau)
}
