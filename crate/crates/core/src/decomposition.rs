//! `K[B] ≅ ⊕_{g ∈ G} I_g(-h_g)` as `Z^m`-graded modules over the polynomial
//! ring `K[A] = K[x_1, ..., x_d]` of a simplicial frame.
//!
//! For a coset `g` of `G(B)/G(A)` let `Γ_g` be the elements of `B_A` in `g`.
//! The shift is `h_g = Σ_k min{λ_k(v) : v ∈ Γ_g} e_k` and `I_g` is generated
//! by the monomials `x^{λ(v) - λ(h_g)}`, `v ∈ Γ_g`. Ideals are stored in
//! frame coordinates, so `K[A]` really is a polynomial ring in `d` variables.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{CosetLabel, RatVector};
use crate::semigroup::{AffineSemigroup, DegreeFunctional, Frame, Point};

/// A monomial ideal of `K[x_1, ..., x_d]` given by its minimal generators.
///
/// The unit ideal is `{0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    /// Ideal generated by the given exponent vectors, reduced to its
    /// minimal generators (sorted).
    pub fn new(num_vars: usize, gens: Vec<Vec<u32>>) -> Self {
        assert!(!gens.is_empty(), "an ideal needs at least one generator");
        assert!(gens.iter().all(|g| g.len() == num_vars), "exponent length mismatch");
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal {
            num_vars,
            gens: minimal,
        }
    }

    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            gens: vec![vec![0; num_vars]],
        }
    }

    /// `⟨x_1, ..., x_d⟩`.
    pub fn maximal(num_vars: usize) -> Self {
        let gens = (0..num_vars)
            .map(|k| (0..num_vars).map(|j| u32::from(j == k)).collect())
            .collect();
        MonomialIdeal::new(num_vars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    /// Whether the generators are exactly the `d` variables.
    pub fn is_maximal(&self) -> bool {
        self.num_vars > 0 && *self == MonomialIdeal::maximal(self.num_vars)
    }

    pub fn contains(&self, exponent: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, exponent))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "ideal 1");
        }
        let terms: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                let factors: Vec<String> = g
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e > 0)
                    .map(|(k, &e)| match e {
                        1 => format!("x_{}", k + 1),
                        _ => format!("x_{}^{}", k + 1, e),
                    })
                    .collect();
                factors.join("*")
            })
            .collect();
        write!(f, "ideal ({})", terms.join(", "))
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// One summand `I_g(-h_g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub coset: CosetLabel,
    /// Element of `g` with frame coordinates in `(-1/2, 1/2]`.
    pub representative: Point,
    /// `Γ_g`, in canonical order.
    pub gamma: Vec<Point>,
    pub shift: Point,
    pub shift_lambda: RatVector,
    pub ideal: MonomialIdeal,
    /// `deg h_g` when the semigroup is homogeneous.
    pub shift_degree: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub frame: Frame,
    pub invariant_factors: Vec<u64>,
    pub group_order: u64,
    /// Ordered by coset label.
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Number of variables of the frame ring.
    pub fn num_vars(&self) -> usize {
        self.frame.len()
    }

    pub fn summand(&self, coset: &CosetLabel) -> Option<&Summand> {
        self.summands.iter().find(|s| &s.coset == coset)
    }
}

pub fn decompose(b: &AffineSemigroup) -> Result<Decomposition> {
    let frame = b.frame()?.clone();
    let group = b.coset_group()?;
    let degree = b.degree_functional();
    let d = frame.len();
    let den = frame.denominator();

    // Two lattice points share a coset iff their frame coordinates differ by
    // an integral vector, i.e. iff the scaled coordinates agree modulo `den`.
    let mut classes: BTreeMap<Vec<i128>, Vec<(Point, Vec<i128>)>> = BTreeMap::new();
    for x in b.module_generators()? {
        let num = frame.scaled_lambda(x)?;
        let residue = num.iter().map(|n| n.rem_euclid(den)).collect();
        classes.entry(residue).or_default().push((x.clone(), num));
    }

    let mut summands = Vec::with_capacity(classes.len());
    for members in classes.into_values() {
        let coset = group.project_i64(&members[0].0)?;
        let shift_num: Vec<i128> = (0..d)
            .map(|k| members.iter().map(|(_, n)| n[k]).min().expect("Γ_g is nonempty"))
            .collect();
        let shift = frame
            .scaled_point(&shift_num)
            .expect("shift differs from an element of Γ_g by an integral frame vector");
        let gens = members
            .iter()
            .map(|(_, n)| {
                n.iter()
                    .zip(&shift_num)
                    .map(|(a, m)| {
                        debug_assert_eq!((a - m) % den, 0);
                        u32::try_from((a - m) / den).expect("exponent fits in u32")
                    })
                    .collect()
            })
            .collect();
        let ideal = MonomialIdeal::new(d, gens);
        debug_assert_eq!(ideal.generators().len(), members.len(), "Γ_g yields minimal generators");
        let representative = reduce_representative(&frame, &shift_num);
        let shift_degree = degree.as_ref().and_then(|f| f.degree(&shift));
        summands.push(Summand {
            coset,
            representative,
            gamma: members.into_iter().map(|(x, _)| x).collect(),
            shift,
            shift_lambda: scaled_to_rational(&shift_num, den),
            ideal,
            shift_degree,
        });
    }
    summands.sort_by(|a, b| a.coset.cmp(&b.coset));

    Ok(Decomposition {
        frame,
        invariant_factors: group
            .invariant_factors()
            .iter()
            .map(|f| f.to_u64().expect("invariant factor fits in u64"))
            .collect(),
        group_order: group.order().to_u64().expect("group order fits in u64"),
        summands,
    })
}

fn scaled_to_rational(num: &[i128], den: i128) -> RatVector {
    RatVector(num.iter().map(|&n| BigRational::new(n.into(), den.into())).collect())
}

/// Subtracts the frame vector that brings every coordinate into `(-1/2, 1/2]`.
fn reduce_representative(frame: &Frame, scaled: &[i128]) -> Point {
    let den = frame.denominator();
    let reduced: Vec<i128> = scaled
        .iter()
        .map(|n| {
            let r = n.rem_euclid(den);
            if 2 * r > den {
                r - den
            } else {
                r
            }
        })
        .collect();
    frame.scaled_point(&reduced).expect("representative stays in the coset")
}

/// `deg h_g` for every summand.
pub fn shift_degrees(dec: &Decomposition, f: &DegreeFunctional) -> Result<BTreeMap<CosetLabel, i64>> {
    dec.summands
        .iter()
        .map(|s| Ok((s.coset.clone(), f.degree(&s.shift).ok_or(Error::NotHomogeneous)?)))
        .collect()
}

fn homogeneous_functional(b: &AffineSemigroup, f: &DegreeFunctional) -> Result<()> {
    if b.generators().iter().all(|g| f.degree(g) == Some(1)) {
        Ok(())
    } else {
        Err(Error::NotHomogeneous)
    }
}

/// `#{b ∈ B : deg b = t}` for `t = 0..=t_max`, by enumerating sums of `t`
/// generators.
pub fn hilbert_function(b: &AffineSemigroup, f: &DegreeFunctional, t_max: usize) -> Result<Vec<u64>> {
    homogeneous_functional(b, f)?;
    let mut level: std::collections::HashSet<Point> = [vec![0; b.ambient_dim()]].into();
    let mut out = vec![1];
    for _ in 0..t_max {
        let mut next = std::collections::HashSet::with_capacity(level.len() * b.generators().len());
        for x in &level {
            for g in b.generators() {
                next.insert(x.iter().zip(g).map(|(a, c)| a + c).collect::<Point>());
            }
        }
        out.push(next.len() as u64);
        level = next;
    }
    Ok(out)
}

/// `Σ_g #{monomials of I_g of degree t - deg h_g}` for `t = 0..=t_max`.
pub fn decomposition_hilbert_function(dec: &Decomposition, t_max: usize) -> Result<Vec<u64>> {
    let d = dec.num_vars();
    let mut out = vec![0u64; t_max + 1];
    for s in &dec.summands {
        let shift = s.shift_degree.ok_or(Error::NotHomogeneous)?;
        for (t, slot) in out.iter_mut().enumerate() {
            let local = t as i64 - shift;
            if local < 0 {
                continue;
            }
            *slot += count_ideal_monomials(&s.ideal, d, local as u32);
        }
    }
    Ok(out)
}

fn count_ideal_monomials(ideal: &MonomialIdeal, d: usize, degree: u32) -> u64 {
    let mut count = 0;
    let mut exps = vec![0u32; d];
    for_each_composition(&mut exps, 0, degree, &mut |e| {
        if ideal.contains(e) {
            count += 1;
        }
    });
    count
}

fn for_each_composition(exps: &mut [u32], pos: usize, rest: u32, f: &mut impl FnMut(&[u32])) {
    if pos + 1 >= exps.len() {
        if let Some(last) = exps.last_mut() {
            *last = rest;
            f(exps);
        } else if rest == 0 {
            f(exps);
        }
        return;
    }
    for e in 0..=rest {
        exps[pos] = e;
        for_each_composition(exps, pos + 1, rest - e, f);
    }
}

/// Compares the Hilbert function of `K[B]` with the one predicted by the
/// decomposition in every degree up to `t_max`.
pub fn hilbert_verify(b: &AffineSemigroup, dec: &Decomposition, f: &DegreeFunctional, t_max: usize) -> Result<bool> {
    homogeneous_functional(b, f)?;
    let degrees = shift_degrees(dec, f)?;
    let mut dec = dec.clone();
    for s in &mut dec.summands {
        s.shift_degree = Some(degrees[&s.coset]);
    }
    Ok(hilbert_function(b, f, t_max)? == decomposition_hilbert_function(&dec, t_max)?)
}

#[cfg(test)]
fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
