//! Ring-theoretic properties of simplicial semigroup rings, decided from the
//! decomposition over the frame ring. None of them depends on the field.
//!
//! * seminormal: every `x ∈ B_A` has `‖λ(x)‖∞ ≤ 1`
//! * normal: every `x ∈ B_A` has `‖λ(x)‖∞ < 1`
//! * Cohen-Macaulay: every `I_g` is the unit ideal
//! * Buchsbaum: every `I_g` is `K[A]` or the maximal ideal `K[A]_+`, and with
//!   `H` the shifts of the maximal-ideal summands and `C` the non-frame
//!   generators, `(H + C) ∩ H = ∅`
//! * Gorenstein: Cohen-Macaulay, the shift `h` of maximal coordinate sum is
//!   unique, and `H = {h_g}` pairs up as `h_g ↔ h - h_g`

use std::collections::BTreeSet;
use std::fmt;

use crate::decomposition::{decompose, Decomposition, MonomialIdeal};
use crate::error::Result;
use crate::lattice::{CosetLabel, RatVector};
use crate::semigroup::{canonical_order, AffineSemigroup, Point};

/// Why a property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An element of `B_A` whose frame coordinates are too large.
    Lambda { element: Point, lambda: RatVector },
    /// A summand whose ideal is not the unit ideal.
    NonUnitIdeal {
        coset: CosetLabel,
        shift: Point,
        ideal: MonomialIdeal,
    },
    /// A summand whose ideal is neither the unit nor the maximal ideal.
    NotUnitOrMaximal {
        coset: CosetLabel,
        shift: Point,
        ideal: MonomialIdeal,
    },
    /// `shift + generator` is again the shift of a maximal-ideal summand.
    ShiftCollision { shift: Point, generator: Point, sum: Point },
    /// Several shifts share the maximal coordinate sum.
    NonUniqueTop { candidates: Vec<Point> },
    /// `top - shift` is not a shift.
    Unpaired { top: Point, shift: Point },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Lambda { element, lambda } => write!(f, "x = {} has lambda = {lambda}", show(element)),
            Witness::NonUnitIdeal { coset, shift, ideal } => {
                write!(f, "coset {coset} at shift {} carries {ideal}", show(shift))
            }
            Witness::NotUnitOrMaximal { coset, shift, ideal } => {
                write!(f, "coset {coset} at shift {} carries {ideal}", show(shift))
            }
            Witness::ShiftCollision { shift, generator, sum } => write!(
                f,
                "{} + {} = {} is again a shift of a maximal-ideal summand",
                show(shift),
                show(generator),
                show(sum)
            ),
            Witness::NonUniqueTop { candidates } => {
                let c: Vec<String> = candidates.iter().map(|p| show(p)).collect();
                write!(f, "shifts {} share the maximal coordinate sum", c.join(", "))
            }
            Witness::Unpaired { top, shift } => {
                write!(f, "{} - {} is not a shift", show(top), show(shift))
            }
        }
    }
}

pub(crate) fn show(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Outcome of one property test; failures always carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub seminormal: Verdict,
    pub normal: Verdict,
    pub cohen_macaulay: Verdict,
    pub buchsbaum: Verdict,
    pub gorenstein: Verdict,
}

impl PropertyReport {
    /// `(seminormal, normal, cohen_macaulay, buchsbaum, gorenstein)`.
    pub fn flags(&self) -> [bool; 5] {
        [
            self.seminormal.holds,
            self.normal.holds,
            self.cohen_macaulay.holds,
            self.buchsbaum.holds,
            self.gorenstein.holds,
        ]
    }

    pub fn any(&self) -> bool {
        self.flags().iter().any(|&b| b)
    }
}

/// First element of `B_A` in canonical order whose scaled frame coordinates
/// violate the bound, as a witness.
fn lambda_test(dec: &Decomposition, violates: impl Fn(i128, i128) -> bool) -> Verdict {
    let den = dec.frame.denominator();
    let mut all: Vec<&Point> = dec.summands.iter().flat_map(|s| s.gamma.iter()).collect();
    all.sort_by(|a, b| canonical_order(a, b));
    let witness = all.into_iter().find(|x| {
        let num = dec.frame.scaled_lambda(x).expect("B_A lies in the frame span");
        violates(num.iter().map(|n| n.abs()).max().unwrap_or(0), den)
    });
    match witness {
        None => Verdict::pass(),
        Some(x) => Verdict::fail(Witness::Lambda {
            element: x.clone(),
            lambda: dec.frame.lambda(x).expect("B_A lies in the frame span"),
        }),
    }
}

pub fn seminormal_in(dec: &Decomposition) -> Verdict {
    lambda_test(dec, |norm, den| norm > den)
}

pub fn normal_in(dec: &Decomposition) -> Verdict {
    lambda_test(dec, |norm, den| norm >= den)
}

pub fn cohen_macaulay_in(dec: &Decomposition) -> Verdict {
    match dec.summands.iter().find(|s| !s.ideal.is_unit()) {
        Some(s) => Verdict::fail(Witness::NonUnitIdeal {
            coset: s.coset.clone(),
            shift: s.shift.clone(),
            ideal: s.ideal.clone(),
        }),
        None => Verdict::pass(),
    }
}

pub fn buchsbaum_in(b: &AffineSemigroup, dec: &Decomposition) -> Verdict {
    if let Some(s) = dec
        .summands
        .iter()
        .find(|s| !s.ideal.is_unit() && !s.ideal.is_maximal())
    {
        return Verdict::fail(Witness::NotUnitOrMaximal {
            coset: s.coset.clone(),
            shift: s.shift.clone(),
            ideal: s.ideal.clone(),
        });
    }
    let mut h: Vec<Point> = dec
        .summands
        .iter()
        .filter(|s| s.ideal.is_maximal())
        .map(|s| s.shift.clone())
        .collect();
    h.sort_by(canonical_order);
    let h_set: BTreeSet<&Point> = h.iter().collect();
    let frame = dec.frame.elements();
    let mut c: Vec<Point> = b
        .generators()
        .iter()
        .filter(|g| !frame.contains(g) && g.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    c.sort_by(canonical_order);
    for shift in &h {
        for generator in &c {
            let sum: Point = shift.iter().zip(generator).map(|(a, g)| a + g).collect();
            if h_set.contains(&sum) {
                return Verdict::fail(Witness::ShiftCollision {
                    shift: shift.clone(),
                    generator: generator.clone(),
                    sum,
                });
            }
        }
    }
    Verdict::pass()
}

pub fn gorenstein_in(dec: &Decomposition) -> Verdict {
    let cm = cohen_macaulay_in(dec);
    if !cm.holds {
        return cm;
    }
    let mut h: Vec<Point> = dec.summands.iter().map(|s| s.shift.clone()).collect();
    h.sort_by(canonical_order);
    let coord_sum = |p: &Point| p.iter().sum::<i64>();
    let Some(max_sum) = h.iter().map(coord_sum).max() else {
        return Verdict::pass();
    };
    let tops: Vec<Point> = h.iter().filter(|p| coord_sum(p) == max_sum).cloned().collect();
    if tops.len() > 1 {
        return Verdict::fail(Witness::NonUniqueTop { candidates: tops });
    }
    let top = tops.into_iter().next().expect("H is nonempty");
    let mut remaining: BTreeSet<Point> = h.iter().cloned().collect();
    for hg in &h {
        if !remaining.contains(hg) {
            continue;
        }
        let partner: Point = top.iter().zip(hg).map(|(a, b)| a - b).collect();
        if !remaining.contains(&partner) {
            return Verdict::fail(Witness::Unpaired { top, shift: hg.clone() });
        }
        remaining.remove(hg);
        remaining.remove(&partner);
    }
    Verdict::pass()
}

pub fn is_seminormal(b: &AffineSemigroup) -> Result<Verdict> {
    Ok(seminormal_in(&decompose(b)?))
}

pub fn is_normal(b: &AffineSemigroup) -> Result<Verdict> {
    Ok(normal_in(&decompose(b)?))
}

pub fn is_cohen_macaulay(b: &AffineSemigroup) -> Result<Verdict> {
    Ok(cohen_macaulay_in(&decompose(b)?))
}

pub fn is_buchsbaum(b: &AffineSemigroup) -> Result<Verdict> {
    Ok(buchsbaum_in(b, &decompose(b)?))
}

pub fn is_gorenstein(b: &AffineSemigroup) -> Result<Verdict> {
    Ok(gorenstein_in(&decompose(b)?))
}

/// All five tests over one shared decomposition.
pub fn full_report(b: &AffineSemigroup) -> Result<PropertyReport> {
    Ok(report_for(b, &decompose(b)?))
}

pub fn report_for(b: &AffineSemigroup, dec: &Decomposition) -> PropertyReport {
    let report = PropertyReport {
        seminormal: seminormal_in(dec),
        normal: normal_in(dec),
        cohen_macaulay: cohen_macaulay_in(dec),
        buchsbaum: buchsbaum_in(b, dec),
        gorenstein: gorenstein_in(dec),
    };
    let [sn, n, cm, bb, g] = report.flags();
    assert!(!n || sn, "normal without seminormal for {b:?}");
    assert!(!n || cm, "normal without Cohen-Macaulay for {b:?}");
    assert!(!g || cm, "Gorenstein without Cohen-Macaulay for {b:?}");
    assert!(!cm || bb, "Cohen-Macaulay without Buchsbaum for {b:?}");
    report
}
