//! Graded Betti numbers of monomial ideals and the regularity of `K[B]`.
//!
//! For a monomial ideal `I ⊆ K[x_1, ..., x_d]` and a multidegree `b`, the
//! upper Koszul complex is
//!
//! ```text
//! K^b(I) = { σ ⊆ {1..d} : x^{b - σ} ∈ I }
//! ```
//!
//! and `β_{i,b}(I) = dim H̃_{i-1}(K^b(I); K)`. Only multidegrees in the lcm
//! lattice of the generators carry nonzero Betti numbers, so those are the
//! only ones visited.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{decompose, MonomialIdeal};
use crate::error::{Error, Result};
use crate::lattice::{CosetLabel, IntMatrix};
use crate::semigroup::AffineSemigroup;

/// Characteristic of the coefficient field: 0 (rationals) or a prime.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

/// Graded Betti numbers `β_{i,j}`; absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sorted `(i, j, β_{i,j})` triples.
    pub fn triples(&self) -> Vec<(usize, i64, u64)> {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r)).collect()
    }

    /// `Σ_j β_{i,j}` per homological degree `i`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.projective_dimension().map_or(0, |p| p + 1);
        let mut out = vec![0; len];
        for (&(i, _), &r) in &self.entries {
            out[i] += r;
        }
        out
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    fn add(&mut self, i: usize, j: i64, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_default() += rank;
        }
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(serializer)
    }
}

/// Multigraded Betti numbers `β_{i,b}` keyed by `(i, b)`.
pub fn multigraded_betti(ideal: &MonomialIdeal, char: Characteristic) -> BTreeMap<(usize, Vec<u32>), u64> {
    let lcms = lcm_lattice(ideal.generators());
    lcms.into_par_iter()
        .flat_map_iter(|b| {
            reduced_homology(ideal, &b, char)
                .into_iter()
                .enumerate()
                .filter(|&(_, r)| r > 0)
                .map(move |(i, r)| ((i, b.clone()), r))
        })
        .collect()
}

pub fn betti_ideal(ideal: &MonomialIdeal, char: Characteristic) -> BettiTable {
    let mut table = BettiTable::default();
    if ideal.is_unit() {
        table.add(0, 0, 1);
        return table;
    }
    for ((i, b), r) in multigraded_betti(ideal, char) {
        table.add(i, b.iter().map(|&e| i64::from(e)).sum(), r);
    }
    table
}

fn lcm_lattice(gens: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut lattice: BTreeSet<Vec<u32>> = BTreeSet::new();
    for g in gens {
        let joins: Vec<Vec<u32>> = lattice
            .iter()
            .map(|l| l.iter().zip(g).map(|(a, b)| *a.max(b)).collect())
            .collect();
        lattice.insert(g.clone());
        lattice.extend(joins);
    }
    lattice
}

/// `dim H̃_{i-1}(K^b(I))` for `i = 0..=d`.
fn reduced_homology(ideal: &MonomialIdeal, b: &[u32], char: Characteristic) -> Vec<u64> {
    let d = b.len();
    // faces grouped by size; a face is a bitmask over the variables
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); d + 1];
    let mut exp = vec![0u32; d];
    for mask in 0u32..(1 << d) {
        let mut ok = true;
        for (k, e) in exp.iter_mut().enumerate() {
            let bit = (mask >> k) & 1;
            if b[k] < bit {
                ok = false;
                break;
            }
            *e = b[k] - bit;
        }
        if ok && ideal.contains(&exp) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of ∂_s : C(faces of size s) -> C(faces of size s - 1), s >= 1
    let ranks: Vec<usize> = (0..=d + 1)
        .map(|s| {
            if s == 0 || s > d || faces[s].is_empty() || faces[s - 1].is_empty() {
                return 0;
            }
            let rows: Vec<Vec<i64>> = faces[s]
                .iter()
                .map(|&face| {
                    let mut row = vec![0i64; faces[s - 1].len()];
                    for (pos, k) in (0..d).filter(|&k| face & (1 << k) != 0).enumerate() {
                        let sub = face & !(1 << k);
                        let col = faces[s - 1]
                            .binary_search(&sub)
                            .expect("complex is closed under subsets");
                        row[col] = if pos % 2 == 0 { 1 } else { -1 };
                    }
                    row
                })
                .collect();
            let m = IntMatrix::from_rows(&rows, faces[s - 1].len());
            match char.get() {
                0 => m.rank(),
                p => m.rank_mod(p),
            }
        })
        .collect();
    (0..=d)
        .map(|s| (faces[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

/// `max { j - i : β_{i,j} ≠ 0 }`.
pub fn reg_of(table: &BettiTable) -> i64 {
    table
        .entries
        .keys()
        .map(|&(i, j)| j - i as i64)
        .max()
        .expect("regularity of an empty Betti table")
}

/// Depth over a polynomial ring in `d` variables, by Auslander-Buchsbaum.
pub fn depth_of(table: &BettiTable, d: usize) -> usize {
    d - table.projective_dimension().expect("depth of an empty Betti table")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummandRegularity {
    pub coset: CosetLabel,
    pub ideal_regularity: i64,
    pub shift_degree: i64,
    pub depth: usize,
}

impl SummandRegularity {
    pub fn total(&self) -> i64 {
        self.ideal_regularity + self.shift_degree
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub regularity: i64,
    /// Summands attaining the maximum.
    pub witnesses: Vec<SummandRegularity>,
    pub summands: Vec<SummandRegularity>,
    pub degree: u64,
    pub codim: i64,
    pub eg_bound: i64,
    pub eg_holds: bool,
    pub depth: usize,
}

/// `reg K[B] = max { reg I_g + deg h_g }`, `deg K[B] = #G`,
/// `codim K[B] = n - d`, `depth K[B] = min depth I_g`.
pub fn analyze(b: &AffineSemigroup, char: Characteristic) -> Result<RegularityReport> {
    let frame = b.frame()?;
    let degree = b.degree_functional().ok_or(Error::NotHomogeneous)?;
    if !b.generators().iter().all(|g| degree.degree(g) == Some(1)) {
        return Err(Error::NotHomogeneous);
    }
    for (index, e) in frame.elements().iter().enumerate() {
        if degree.degree(e) != Some(1) {
            return Err(Error::FrameDegree {
                index,
                degree: degree.eval(e).to_string(),
            });
        }
    }
    let redundant = b.redundant_generators();
    if !redundant.is_empty() {
        return Err(Error::NonMinimalGenerators(redundant));
    }

    let dec = decompose(b)?;
    let d = dec.num_vars();
    let summands = dec
        .summands
        .iter()
        .map(|s| {
            let table = betti_ideal(&s.ideal, char);
            Ok(SummandRegularity {
                coset: s.coset.clone(),
                ideal_regularity: reg_of(&table),
                shift_degree: s.shift_degree.ok_or(Error::NotHomogeneous)?,
                depth: depth_of(&table, d),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let regularity = summands.iter().map(SummandRegularity::total).max().unwrap_or(0);
    let witnesses = summands.iter().filter(|s| s.total() == regularity).cloned().collect();
    let depth = summands.iter().map(|s| s.depth).min().unwrap_or(d);
    let codim = b.generators().len() as i64 - d as i64;
    let eg_bound = dec.group_order as i64 - codim;
    Ok(RegularityReport {
        regularity,
        witnesses,
        summands,
        degree: dec.group_order,
        codim,
        eg_bound,
        eg_holds: regularity <= eg_bound,
        depth,
    })
}
