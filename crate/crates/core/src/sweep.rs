//! Seeded random sweeps over homogeneous simplicial semigroups.
//!
//! Every instance has the frame `D·e_1, …, D·e_m` plus distinct random points
//! of coordinate sum `D`, so it is simplicial and homogeneous by
//! construction. Instances are drawn sequentially from one ChaCha stream and
//! analysed in parallel; results are merged in instance order.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::decomposition::{decompose, hilbert_verify};
use crate::error::{Error, Result};
use crate::homology::{analyze, Characteristic, RegularityReport};
use crate::properties::{report_for, PropertyReport};
use crate::report::{properties_json, PROPERTY_NAMES};
use crate::semigroup::{AffineSemigroup, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub ambient_dim: usize,
    /// Total number of generators, frame included.
    pub num_generators: usize,
    /// The common degree `D`; it bounds every entry.
    pub max_entry: i64,
    pub count: usize,
    pub seed: u64,
    pub char: Characteristic,
    /// Depth of the Hilbert function check, if any.
    pub t_max: Option<usize>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.ambient_dim == 0 {
            return bad("ambient dimension must be positive".into());
        }
        if self.max_entry < 1 {
            return bad("degree must be positive".into());
        }
        if self.num_generators < self.ambient_dim {
            return bad(format!(
                "need at least {} generators for the frame, got {}",
                self.ambient_dim, self.num_generators
            ));
        }
        let extra = (self.num_generators - self.ambient_dim) as u128;
        let pool = interior_count(self.ambient_dim, self.max_entry);
        if extra > pool {
            return bad(format!(
                "only {pool} non-frame points of degree {} exist in dimension {}",
                self.max_entry, self.ambient_dim
            ));
        }
        Ok(())
    }
}

/// Number of points of coordinate sum `d` in `N^m` other than the `d·e_i`.
fn interior_count(m: usize, d: i64) -> u128 {
    let n = d as u128 + m as u128 - 1;
    let k = (m as u128 - 1).min(d as u128);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul(n - i) / (i + 1);
    }
    c.saturating_sub(m as u128)
}

fn frame(m: usize, d: i64) -> Vec<Point> {
    (0..m)
        .map(|i| {
            let mut e = vec![0; m];
            e[i] = d;
            e
        })
        .collect()
}

/// A uniform composition of `d` into `m` nonnegative parts (stars and bars).
fn random_composition(rng: &mut ChaCha8Rng, m: usize, d: i64) -> Point {
    let slots = d as usize + m - 1;
    let mut bars = sample(rng, slots, m - 1).into_vec();
    bars.sort_unstable();
    let mut parts = Vec::with_capacity(m);
    let mut prev = 0usize;
    for b in bars {
        parts.push((b - prev) as i64);
        prev = b + 1;
    }
    parts.push((slots - prev) as i64);
    parts
}

/// Draws the generator lists of a sweep.
pub fn generate(cfg: &SweepConfig) -> Result<Vec<Vec<Point>>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (m, d) = (cfg.ambient_dim, cfg.max_entry);
    let extra = cfg.num_generators - m;
    let mut out = Vec::with_capacity(cfg.count);
    for _ in 0..cfg.count {
        let mut gens = frame(m, d);
        while gens.len() < m + extra {
            let p = random_composition(&mut rng, m, d);
            let on_axis = p.iter().filter(|&&x| x != 0).count() == 1;
            if !on_axis && !gens.contains(&p) {
                gens.push(p);
            }
        }
        out.push(gens);
    }
    Ok(out)
}

/// All semigroups generated by `D·e_1, …, D·e_m` and one further point of
/// coordinate sum `D`.
pub fn one_extra_point_family(m: usize, d: i64) -> Vec<Vec<Point>> {
    fn compositions(m: usize, d: i64, prefix: &mut Point, out: &mut Vec<Point>) {
        if prefix.len() == m - 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in (0..=d).rev() {
            prefix.push(x);
            compositions(m, d - x, prefix, out);
            prefix.pop();
        }
    }
    let mut points = Vec::new();
    if m > 0 && d > 0 {
        compositions(m, d, &mut Vec::new(), &mut points);
    }
    points
        .into_iter()
        .filter(|p| p.iter().filter(|&&x| x != 0).count() > 1)
        .map(|p| {
            let mut gens = frame(m, d);
            gens.push(p);
            gens
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub properties: PropertyReport,
    pub regularity: RegularityReport,
    pub hilbert: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub index: usize,
    pub generators: Vec<Point>,
    pub outcome: Result<Analysis>,
}

/// Decomposition, property report, regularity report and optional Hilbert
/// check for one generator list.
pub fn analyze_instance(generators: Vec<Point>, char: Characteristic, t_max: Option<usize>) -> Result<Analysis> {
    let b = AffineSemigroup::new(generators)?;
    let regularity = analyze(&b, char)?;
    let dec = decompose(&b)?;
    let properties = report_for(&b, &dec);
    let hilbert = match t_max {
        Some(t) => {
            let f = b.degree_functional().ok_or(Error::NotHomogeneous)?;
            Some(hilbert_verify(&b, &dec, &f, t)?)
        }
        None => None,
    };
    Ok(Analysis {
        properties,
        regularity,
        hilbert,
    })
}

/// Implications between the properties, plus the regularity bound for
/// instances with at least one property; returns the violated ones.
pub fn implication_violations(p: &PropertyReport, r: &RegularityReport) -> Vec<&'static str> {
    let [sn, n, cm, bb, gor] = p.flags();
    let mut out = Vec::new();
    if n && !sn {
        out.push("normal => seminormal");
    }
    if n && !cm {
        out.push("normal => cohenMacaulay");
    }
    if gor && !cm {
        out.push("gorenstein => cohenMacaulay");
    }
    if cm && !bb {
        out.push("cohenMacaulay => buchsbaum");
    }
    if p.any() && !r.eg_holds {
        out.push("property => egHolds");
    }
    out
}

pub fn run_family(family: Vec<Vec<Point>>, char: Characteristic, t_max: Option<usize>) -> Vec<Instance> {
    family
        .into_par_iter()
        .enumerate()
        .map(|(index, generators)| Instance {
            index,
            outcome: analyze_instance(generators.clone(), char, t_max),
            generators,
        })
        .collect()
}

/// Runs `f` on a pool of at most `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepSummary> {
    let family = generate(cfg)?;
    Ok(SweepSummary::from_instances(&run_family(family, cfg.char, cfg.t_max)))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub generated: usize,
    pub accepted: usize,
    pub rejected: usize,
    /// How many accepted instances have each property, in report order.
    pub property_counts: [usize; 5],
    pub min_reg: Option<i64>,
    pub max_reg: Option<i64>,
    pub eg_violations: Vec<Value>,
    pub implication_violations: Vec<Value>,
    pub hilbert_failures: Vec<Value>,
}

impl SweepSummary {
    pub fn from_instances(instances: &[Instance]) -> Self {
        let mut s = SweepSummary {
            generated: instances.len(),
            ..Default::default()
        };
        for inst in instances {
            let a = match &inst.outcome {
                Ok(a) => a,
                Err(_) => {
                    s.rejected += 1;
                    continue;
                }
            };
            s.accepted += 1;
            for (count, flag) in s.property_counts.iter_mut().zip(a.properties.flags()) {
                *count += usize::from(flag);
            }
            let reg = a.regularity.regularity;
            s.min_reg = Some(s.min_reg.map_or(reg, |m| m.min(reg)));
            s.max_reg = Some(s.max_reg.map_or(reg, |m| m.max(reg)));
            if !a.regularity.eg_holds {
                s.eg_violations.push(json!({
                    "index": inst.index,
                    "generators": inst.generators,
                    "reg": reg,
                    "degree": a.regularity.degree,
                    "codim": a.regularity.codim,
                    "bound": a.regularity.eg_bound,
                    "properties": properties_json(&a.properties),
                }));
            }
            let broken = implication_violations(&a.properties, &a.regularity);
            if !broken.is_empty() {
                s.implication_violations.push(json!({
                    "index": inst.index,
                    "generators": inst.generators,
                    "violated": broken,
                }));
            }
            if a.hilbert == Some(false) {
                s.hilbert_failures.push(json!({
                    "index": inst.index,
                    "generators": inst.generators,
                }));
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let counts: serde_json::Map<String, Value> = PROPERTY_NAMES
            .iter()
            .zip(self.property_counts)
            .map(|(name, c)| ((*name).to_string(), json!(c)))
            .collect();
        json!({
            "generated": self.generated,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "properties": counts,
            "minReg": self.min_reg,
            "maxReg": self.max_reg,
            "egViolations": self.eg_violations,
            "implicationViolations": self.implication_violations,
            "hilbertFailures": self.hilbert_failures,
        })
    }

    pub fn to_text(&self) -> String {
        let opt = |x: Option<i64>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
        let mut out = format!(
            "generated: {}\naccepted: {}\nrejected: {}\n",
            self.generated, self.accepted, self.rejected
        );
        for (name, c) in PROPERTY_NAMES.iter().zip(self.property_counts) {
            out.push_str(&format!("{name}: {c}\n"));
        }
        out.push_str(&format!(
            "minReg: {}\nmaxReg: {}\n",
            opt(self.min_reg),
            opt(self.max_reg)
        ));
        out.push_str(&format!(
            "egViolations: {}\nimplicationViolations: {}\nhilbertFailures: {}\n",
            self.eg_violations.len(),
            self.implication_violations.len(),
            self.hilbert_failures.len()
        ));
        for v in self
            .eg_violations
            .iter()
            .chain(&self.implication_violations)
            .chain(&self.hilbert_failures)
        {
            out.push_str(&format!("  {v}\n"));
        }
        out
    }
}
