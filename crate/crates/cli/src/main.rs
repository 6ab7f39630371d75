//! Command-line front end for the cut-point realization engine.
//!
//! Every subcommand loads its inputs, runs the corresponding library
//! operation, and writes a JSON report to standard output; diagnostics go
//! to standard error. The exit code is zero exactly when every check in
//! the report passed.

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use cutpoint::circle::{cut_at_basepoint, from_circle_coordinates, uncut_basepoint};
use cutpoint::cyclic::{cyclic_nerve, representable_cyclic, CyclicSet};
use cutpoint::json;
use cutpoint::lambda::{check_zplus, double_dual_embedding, dualize, find_zplus_iso, ZPlusVerdict};
use cutpoint::rational::{self, Rational};
use cutpoint::realize::{
    distance_with_refinement, from_coordinates, merge_product, split_product, to_coordinates,
    Measure, RealizationPoint, DISTANCE_COMPONENT_CAP,
};
use cutpoint::sset::{ProductSpace, SimplexRef, SimplicialSet};

#[derive(Parser)]
#[command(name = "cutpoint", version, about = "Cut-point realization engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and validate the nerve of a finite category.
    Nerve {
        /// Path of a category file.
        #[arg(long)]
        category: String,
        #[arg(long, default_value_t = 3)]
        dim_bound: usize,
    },
    /// Build and validate the cyclic nerve of a finite category.
    CyclicNerve {
        #[arg(long)]
        category: String,
        #[arg(long, default_value_t = 3)]
        dim_bound: usize,
    },
    /// Round-trip the product bijection on seeded random points.
    ProductCheck {
        /// Left factor: a presentation file or `rep:N`.
        #[arg(long)]
        left: String,
        /// Right factor: a presentation file or `rep:N`.
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The measure metric between two points of a space.
    Metric {
        /// Presentation file or `rep:N`.
        #[arg(long)]
        space: String,
        /// Point JSON, inline or `@file`.
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        /// Measure JSON file; Lebesgue when omitted.
        #[arg(long)]
        mu: Option<String>,
        /// Extra refinement cuts, comma separated; the distance must not
        /// change.
        #[arg(long)]
        extra_cuts: Option<String>,
        /// Interval homeomorphism JSON file: transport both points and
        /// push the measure forward; the distance must not change.
        #[arg(long)]
        homeo: Option<String>,
    },
    /// Apply a monotone map to a simplex in normal form.
    Act {
        #[arg(long)]
        space: String,
        /// Normal form JSON, inline or `@file`.
        #[arg(long)]
        simplex: String,
        /// Comma-separated nondecreasing values of the map.
        #[arg(long)]
        map: String,
        /// Target ordinal of the map.
        #[arg(long)]
        map_target: usize,
    },
    /// Dualize a certified presentation and verify both dualities.
    Dualize {
        #[arg(long)]
        input: String,
        /// Winding bound; defaults to CUTPOINT_WINDING_BOUND or 3.
        #[arg(long)]
        winding: Option<usize>,
    },
    /// Run the linear-order recovery procedure on a presentation.
    CheckZplus {
        #[arg(long)]
        input: String,
    },
    /// Convert between normal-form points and coordinates.
    Coords {
        /// Presentation file, `rep:N`, or (with --circle) `cyc:N`.
        #[arg(long)]
        space: Option<String>,
        /// Point JSON, inline or `@file`.
        #[arg(long)]
        point: Option<String>,
        /// Build a point of the representable on `[n]` from coordinates.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated coordinates.
        #[arg(long)]
        from: Option<String>,
        /// Use the circle realization.
        #[arg(long, default_value_t = false)]
        circle: bool,
    },
    /// Cut a circle point at the basepoint, producing an interval point.
    CutBasepoint {
        /// Cyclic presentation file or `cyc:N`.
        #[arg(long)]
        space: String,
        #[arg(long)]
        point: String,
    },
    /// Validate model files.
    Validate {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        cyclic: Option<String>,
        #[arg(long)]
        zplus: Option<String>,
        #[arg(long)]
        category: Option<String>,
    },
}

#[derive(Serialize)]
struct CheckResult {
    check: String,
    pass: bool,
    witness: String,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: BTreeMap<String, String>,
    results: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<serde_json::Value>,
    exit_code: i32,
}

struct ReportBuilder {
    command: String,
    inputs: BTreeMap<String, String>,
    results: Vec<CheckResult>,
    output: Option<serde_json::Value>,
}

impl ReportBuilder {
    fn new(command: &str) -> Self {
        ReportBuilder {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            output: None,
        }
    }

    fn input(&mut self, name: &str, content: &str) {
        let mut hasher = Sha256::new();
        hasher.update(content.as_bytes());
        self.inputs
            .insert(name.to_string(), format!("sha256:{:x}", hasher.finalize()));
    }

    fn check(&mut self, name: &str, pass: bool, witness: impl Into<String>) {
        self.results.push(CheckResult { check: name.to_string(), pass, witness: witness.into() });
    }

    fn finish(self) -> RunReport {
        let exit_code = i32::from(!self.results.iter().all(|r| r.pass));
        RunReport {
            command: self.command,
            inputs: self.inputs,
            results: self.results,
            output: self.output,
            exit_code,
        }
    }
}

fn winding_default(explicit: Option<usize>) -> usize {
    explicit.unwrap_or_else(|| {
        std::env::var("CUTPOINT_WINDING_BOUND")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(3)
    })
}

/// Resolves an argument that is either inline JSON or `@path`.
fn inline_or_file(arg: &str) -> Result<String> {
    if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    } else {
        Ok(arg.to_string())
    }
}

fn load_simplicial(spec: &str, report: &mut ReportBuilder, name: &str) -> Result<SimplicialSet> {
    if let Some(n) = spec.strip_prefix("rep:") {
        let n: usize = n.parse().with_context(|| format!("{name}: malformed `rep:` spec"))?;
        report.input(name, spec);
        return Ok(SimplicialSet::representable(n));
    }
    let text = fs::read_to_string(spec).with_context(|| format!("{name}: reading {spec}"))?;
    report.input(name, &text);
    let wire: json::SimplicialSetWire =
        serde_json::from_str(&text).with_context(|| format!("{name}: parsing {spec}"))?;
    json::simplicial_set_from_wire(&wire).map_err(|e| anyhow!("{name}: {e}"))
}

fn load_cyclic(spec: &str, report: &mut ReportBuilder, name: &str) -> Result<CyclicSet> {
    if let Some(n) = spec.strip_prefix("cyc:") {
        let n: usize = n.parse().with_context(|| format!("{name}: malformed `cyc:` spec"))?;
        report.input(name, spec);
        return representable_cyclic(n, n + 2).map_err(|e| anyhow!("{name}: {e}"));
    }
    let text = fs::read_to_string(spec).with_context(|| format!("{name}: reading {spec}"))?;
    report.input(name, &text);
    let wire: json::CyclicSetWire =
        serde_json::from_str(&text).with_context(|| format!("{name}: parsing {spec}"))?;
    json::cyclic_set_from_wire(&wire).map_err(|e| anyhow!("{name}: {e}"))
}

fn parse_rational_list(arg: &str, field: &str) -> Result<Vec<Rational>> {
    arg.split(',')
        .filter(|s| !s.trim().is_empty())
        .enumerate()
        .map(|(i, s)| rational::parse(s).map_err(|e| anyhow!("{field}[{i}]: {e}")))
        .collect()
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den: i64 = rng.gen_range(2..=64);
    let num: i64 = rng.gen_range(1..den);
    rational::ratio(num, den)
}

fn random_point_of(space: &SimplicialSet, rng: &mut ChaCha8Rng) -> Result<RealizationPoint> {
    for _ in 0..10_000 {
        let dim = rng.gen_range(0..=space.dim_bound());
        let count = space.nondegenerate_count(dim);
        if count == 0 {
            continue;
        }
        let mut cuts = std::collections::BTreeSet::new();
        while cuts.len() < dim {
            cuts.insert(rand_rational(rng));
        }
        let index = rng.gen_range(0..count);
        return RealizationPoint::from_parts(
            space,
            cuts.into_iter().collect(),
            SimplexRef { dim, index },
        )
        .map_err(|e| anyhow!("{e}"));
    }
    bail!("the space has no simplices to sample")
}

fn run(cli: Cli) -> Result<RunReport> {
    match cli.command {
        Command::Nerve { category, dim_bound } => {
            let mut report = ReportBuilder::new("nerve");
            let text =
                fs::read_to_string(&category).with_context(|| format!("reading {category}"))?;
            report.input("category", &text);
            let wire: json::CategoryWire =
                serde_json::from_str(&text).with_context(|| format!("parsing {category}"))?;
            let cat = json::category_from_wire(&wire).map_err(|e| anyhow!("category: {e}"))?;
            let nerve = cat.nerve(dim_bound);
            let validation = nerve.validate();
            report.check(
                "nerve validates",
                validation.is_valid(),
                validation.violations.join("; "),
            );
            report.output = Some(serde_json::to_value(json::simplicial_set_to_wire(&nerve))?);
            Ok(report.finish())
        }
        Command::CyclicNerve { category, dim_bound } => {
            let mut report = ReportBuilder::new("cyclic-nerve");
            let text =
                fs::read_to_string(&category).with_context(|| format!("reading {category}"))?;
            report.input("category", &text);
            let wire: json::CategoryWire =
                serde_json::from_str(&text).with_context(|| format!("parsing {category}"))?;
            let cat = json::category_from_wire(&wire).map_err(|e| anyhow!("category: {e}"))?;
            let nerve = cyclic_nerve(&cat, dim_bound).map_err(|e| anyhow!("{e}"))?;
            let validation = nerve.validate();
            report.check(
                "cyclic nerve validates",
                validation.is_valid(),
                validation.violations.join("; "),
            );
            report.output = Some(serde_json::to_value(json::cyclic_set_to_wire(&nerve))?);
            Ok(report.finish())
        }
        Command::ProductCheck { left, right, samples, seed } => {
            let mut report = ReportBuilder::new("product-check");
            let x = load_simplicial(&left, &mut report, "left")?;
            let y = load_simplicial(&right, &mut report, "right")?;
            let prod = ProductSpace::new(&x, &y).map_err(|e| anyhow!("{e}"))?;
            let validation = prod.presentation().validate();
            report.check(
                "product validates",
                validation.is_valid(),
                validation.violations.join("; "),
            );
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut split_merge_ok = 0usize;
            let mut merge_split_ok = 0usize;
            for _ in 0..samples {
                let w = random_point_of(prod.presentation(), &mut rng)?;
                let (l, r) = split_product(&prod, &w).map_err(|e| anyhow!("{e}"))?;
                if merge_product(&prod, &l, &r).map_err(|e| anyhow!("{e}"))? == w {
                    split_merge_ok += 1;
                }
                let l = random_point_of(&x, &mut rng)?;
                let r = random_point_of(&y, &mut rng)?;
                let w = merge_product(&prod, &l, &r).map_err(|e| anyhow!("{e}"))?;
                if split_product(&prod, &w).map_err(|e| anyhow!("{e}"))? == (l, r) {
                    merge_split_ok += 1;
                }
            }
            report.check(
                "split then merge is the identity",
                split_merge_ok == samples,
                format!("{split_merge_ok}/{samples}"),
            );
            report.check(
                "merge then split is the identity",
                merge_split_ok == samples,
                format!("{merge_split_ok}/{samples}"),
            );
            let counts: Vec<usize> = (0..=prod.presentation().dim_bound())
                .map(|n| prod.presentation().nondegenerate_count(n))
                .collect();
            report.output = Some(serde_json::json!({ "nondegenerate_counts": counts }));
            Ok(report.finish())
        }
        Command::Metric { space, u, v, mu, extra_cuts, homeo } => {
            let mut report = ReportBuilder::new("metric");
            let x = load_simplicial(&space, &mut report, "space")?;
            let u_text = inline_or_file(&u)?;
            report.input("u", &u_text);
            let v_text = inline_or_file(&v)?;
            report.input("v", &v_text);
            let u_wire: json::PointWire =
                serde_json::from_str(&u_text).context("parsing u")?;
            let v_wire: json::PointWire =
                serde_json::from_str(&v_text).context("parsing v")?;
            let pu = json::point_from_wire(&x, &u_wire).map_err(|e| anyhow!("u: {e}"))?;
            let pv = json::point_from_wire(&x, &v_wire).map_err(|e| anyhow!("v: {e}"))?;
            let measure = match mu {
                Some(path) => {
                    let text =
                        fs::read_to_string(&path).with_context(|| format!("reading {path}"))?;
                    report.input("mu", &text);
                    let wire: json::MeasureWire =
                        serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
                    json::measure_from_wire(&wire).map_err(|e| anyhow!("mu: {e}"))?
                }
                None => Measure::lebesgue(),
            };
            let d = distance_with_refinement(&x, &measure, &pu, &pv, &[], DISTANCE_COMPONENT_CAP)
                .map_err(|e| anyhow!("{e}"))?;
            report.check("distance computed", true, rational::format(&d));
            if let Some(extra) = extra_cuts {
                let cuts = parse_rational_list(&extra, "extra_cuts")?;
                let refined = distance_with_refinement(
                    &x,
                    &measure,
                    &pu,
                    &pv,
                    &cuts,
                    DISTANCE_COMPONENT_CAP,
                )
                .map_err(|e| anyhow!("{e}"))?;
                report.check(
                    "refinement invariance",
                    refined == d,
                    format!("{} over the refinement", rational::format(&refined)),
                );
            }
            if let Some(path) = homeo {
                let text =
                    fs::read_to_string(&path).with_context(|| format!("reading {path}"))?;
                report.input("homeo", &text);
                let wire: json::IntervalHomeoWire =
                    serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
                let phi =
                    json::interval_homeo_from_wire(&wire).map_err(|e| anyhow!("homeo: {e}"))?;
                let moved = distance_with_refinement(
                    &x,
                    &measure.pushforward(&phi),
                    &cutpoint::realize::apply_homeo(&x, &phi, &pu).map_err(|e| anyhow!("{e}"))?,
                    &cutpoint::realize::apply_homeo(&x, &phi, &pv).map_err(|e| anyhow!("{e}"))?,
                    &[],
                    DISTANCE_COMPONENT_CAP,
                )
                .map_err(|e| anyhow!("{e}"))?;
                report.check(
                    "isometry onto the pushforward",
                    moved == d,
                    format!("{} after transport", rational::format(&moved)),
                );
            }
            report.output = Some(serde_json::json!({ "distance": rational::format(&d) }));
            Ok(report.finish())
        }
        Command::Act { space, simplex, map, map_target } => {
            let mut report = ReportBuilder::new("act");
            let x = load_simplicial(&space, &mut report, "space")?;
            let s_text = inline_or_file(&simplex)?;
            report.input("simplex", &s_text);
            let wire: json::NormalizedSimplexWire =
                serde_json::from_str(&s_text).context("parsing simplex")?;
            let s = cutpoint::sset::NormalizedSimplex::from(&wire);
            let values: Vec<usize> = map
                .split(',')
                .enumerate()
                .map(|(i, t)| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| anyhow!("map[{i}]: not an integer"))
                })
                .collect::<Result<_>>()?;
            report.input("map", &map);
            let f = cutpoint::delta::MonotoneMap::new(values, map_target)
                .map_err(|e| anyhow!("map: {e}"))?;
            let out = x.act(&s, &f).map_err(|e| anyhow!("{e}"))?;
            report.check("action computed", true, format!("{out:?}"));
            report.output =
                Some(serde_json::to_value(json::NormalizedSimplexWire::from(&out))?);
            Ok(report.finish())
        }
        Command::Dualize { input, winding } => {
            let mut report = ReportBuilder::new("dualize");
            let w = winding_default(winding);
            let text = fs::read_to_string(&input).with_context(|| format!("reading {input}"))?;
            report.input("input", &text);
            let wire: json::ZPlusCategoryWire =
                serde_json::from_str(&text).with_context(|| format!("parsing {input}"))?;
            let cat = json::zplus_from_wire(&wire).map_err(|e| anyhow!("input: {e}"))?;
            let dual = dualize(&cat, w).map_err(|e| anyhow!("{e}"))?;
            let dual_verdict = check_zplus(dual.category()).map_err(|e| anyhow!("{e}"))?;
            report.check(
                "dual is certified",
                dual_verdict.is_pass(),
                format!("{dual_verdict:?}"),
            );
            let iso = find_zplus_iso(dual.category(), &cat).map_err(|e| anyhow!("{e}"))?;
            report.check(
                "dual is isomorphic to the input",
                iso.is_some(),
                iso.as_ref()
                    .map(|f| format!("object map {:?}", f.object_map))
                    .unwrap_or_else(|| "no isomorphism found".into()),
            );
            let double = dualize(dual.category(), w).map_err(|e| anyhow!("{e}"))?;
            let ev = double_dual_embedding(&cat, &dual, &double).map_err(|e| anyhow!("{e}"))?;
            let total = ev.morphism_map.iter().all(|m| m.is_some());
            let mut images: Vec<usize> = ev.morphism_map.iter().flatten().copied().collect();
            images.sort();
            images.dedup();
            report.check(
                "evaluation into the double dual is an isomorphism",
                total
                    && images.len() == cat.morphism_count()
                    && double.category().morphism_count() == cat.morphism_count()
                    && ev.check(&cat, double.category()).is_ok(),
                format!("object map {:?}", ev.object_map),
            );
            report.output = Some(serde_json::to_value(json::zplus_to_wire(dual.category()))?);
            Ok(report.finish())
        }
        Command::CheckZplus { input } => {
            let mut report = ReportBuilder::new("check-zplus");
            let text = fs::read_to_string(&input).with_context(|| format!("reading {input}"))?;
            report.input("input", &text);
            let wire: json::ZPlusCategoryWire =
                serde_json::from_str(&text).with_context(|| format!("parsing {input}"))?;
            let cat = json::zplus_from_wire(&wire).map_err(|e| anyhow!("input: {e}"))?;
            match check_zplus(&cat).map_err(|e| anyhow!("{e}"))? {
                ZPlusVerdict::Pass { order, .. } => {
                    let labels: Vec<String> = order
                        .iter()
                        .map(|&o| cat.object_label(o).to_string())
                        .collect();
                    report.check("recovery", true, format!("order {labels:?}"));
                    report.output = Some(serde_json::json!({ "order": labels }));
                }
                ZPlusVerdict::Fail { witness } => {
                    report.check("recovery", false, witness);
                }
            }
            Ok(report.finish())
        }
        Command::Coords { space, point, n, from, circle } => {
            let mut report = ReportBuilder::new("coords");
            match (space, point, n, from) {
                (Some(space), Some(point), None, None) => {
                    let p_text = inline_or_file(&point)?;
                    report.input("point", &p_text);
                    if circle {
                        let x = load_cyclic(&space, &mut report, "space")?;
                        let wire: json::CyclicPointWire =
                            serde_json::from_str(&p_text).context("parsing point")?;
                        let p = json::cyclic_point_from_wire(&x, &wire)
                            .map_err(|e| anyhow!("point: {e}"))?;
                        let coords = cutpoint::circle::circle_coordinates(&x, &p)
                            .map_err(|e| anyhow!("{e}"))?;
                        let out: Vec<String> = coords.iter().map(rational::format).collect();
                        report.check("coordinates computed", true, out.join(","));
                        report.output = Some(serde_json::json!({ "coordinates": out }));
                    } else {
                        let x = load_simplicial(&space, &mut report, "space")?;
                        let wire: json::PointWire =
                            serde_json::from_str(&p_text).context("parsing point")?;
                        let p = json::point_from_wire(&x, &wire)
                            .map_err(|e| anyhow!("point: {e}"))?;
                        let coords = to_coordinates(&x, &p).map_err(|e| anyhow!("{e}"))?;
                        let out: Vec<String> = coords.iter().map(rational::format).collect();
                        report.check("coordinates computed", true, out.join(","));
                        report.output = Some(serde_json::json!({ "coordinates": out }));
                    }
                }
                (None, None, Some(n), Some(from)) => {
                    let coords = parse_rational_list(&from, "from")?;
                    report.input("from", &from);
                    if circle {
                        let p = from_circle_coordinates(n, &coords)
                            .map_err(|e| anyhow!("from: {e}"))?;
                        report.check("point computed", true, format!("{p:?}"));
                        report.output =
                            Some(serde_json::to_value(json::cyclic_point_to_wire(&p))?);
                    } else {
                        let p = from_coordinates(n, &coords).map_err(|e| anyhow!("from: {e}"))?;
                        report.check("point computed", true, format!("{p:?}"));
                        report.output = Some(serde_json::to_value(json::point_to_wire(&p))?);
                    }
                }
                _ => bail!("coords needs either --space and --point, or --n and --from"),
            }
            Ok(report.finish())
        }
        Command::CutBasepoint { space, point } => {
            let mut report = ReportBuilder::new("cut-basepoint");
            let x = load_cyclic(&space, &mut report, "space")?;
            let p_text = inline_or_file(&point)?;
            report.input("point", &p_text);
            let wire: json::CyclicPointWire =
                serde_json::from_str(&p_text).context("parsing point")?;
            let p = json::cyclic_point_from_wire(&x, &wire).map_err(|e| anyhow!("point: {e}"))?;
            let interval = cut_at_basepoint(&x, &p).map_err(|e| anyhow!("{e}"))?;
            let round_trip = uncut_basepoint(&x, &interval).map_err(|e| anyhow!("{e}"))?;
            report.check(
                "round trip recovers the point",
                round_trip == p,
                format!("{round_trip:?}"),
            );
            report.output = Some(serde_json::to_value(json::point_to_wire(&interval))?);
            Ok(report.finish())
        }
        Command::Validate { space, cyclic, zplus, category } => {
            let mut report = ReportBuilder::new("validate");
            let mut ran = false;
            if let Some(spec) = space {
                let x = load_simplicial(&spec, &mut report, "space")?;
                let validation = x.validate();
                report.check(
                    "simplicial identities",
                    validation.is_valid(),
                    validation.violations.join("; "),
                );
                ran = true;
            }
            if let Some(spec) = cyclic {
                let x = load_cyclic(&spec, &mut report, "cyclic")?;
                let validation = x.validate();
                report.check(
                    "cyclic relations",
                    validation.is_valid(),
                    validation.violations.join("; "),
                );
                ran = true;
            }
            if let Some(path) = zplus {
                let text =
                    fs::read_to_string(&path).with_context(|| format!("reading {path}"))?;
                report.input("zplus", &text);
                let wire: json::ZPlusCategoryWire =
                    serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
                let cat = json::zplus_from_wire(&wire).map_err(|e| anyhow!("zplus: {e}"))?;
                match check_zplus(&cat).map_err(|e| anyhow!("{e}"))? {
                    ZPlusVerdict::Pass { .. } => report.check("certified", true, ""),
                    ZPlusVerdict::Fail { witness } => report.check("certified", false, witness),
                }
                ran = true;
            }
            if let Some(path) = category {
                let text =
                    fs::read_to_string(&path).with_context(|| format!("reading {path}"))?;
                report.input("category", &text);
                let wire: json::CategoryWire =
                    serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
                match json::category_from_wire(&wire) {
                    Ok(_) => report.check("category laws", true, ""),
                    Err(e) => report.check("category laws", false, e.to_string()),
                }
                ran = true;
            }
            if !ran {
                bail!("validate needs at least one of --space, --cyclic, --zplus, --category");
            }
            Ok(report.finish())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            println!("{text}");
            if report.exit_code == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
