//! Positive affine semigroups `B ⊆ N^m` given by generators.
//!
//! Besides validation this module provides the membership oracle, the cone
//! geometry (extreme rays, simpliciality), the frame `e_1, ..., e_d` spanning
//! the free subsemigroup `A`, the degree functional of homogeneous
//! semigroups, and the set `B_A` of module generators of `K[B]` over `K[A]`.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use parking_lot::Mutex;

use crate::cone::in_cone;
use crate::error::{Error, Result};
use crate::lattice::{self, FiniteAbelianGroup, IntMatrix, RatVector};

/// A lattice point in ambient coordinates.
pub type Point = Vec<i64>;

pub struct AffineSemigroup {
    dim: usize,
    generators: Vec<Point>,
    group_basis: OnceLock<IntMatrix>,
    rays: OnceLock<Vec<usize>>,
    frame: OnceLock<Result<Frame>>,
    coset_group: OnceLock<Result<FiniteAbelianGroup>>,
    module_generators: OnceLock<Result<Vec<Point>>>,
    membership: Mutex<HashMap<Point, bool>>,
}

impl Clone for AffineSemigroup {
    fn clone(&self) -> Self {
        AffineSemigroup::from_parts(self.dim, self.generators.clone())
    }
}

impl std::fmt::Debug for AffineSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AffineSemigroup")
            .field("dim", &self.dim)
            .field("generators", &self.generators)
            .finish()
    }
}

impl AffineSemigroup {
    /// Validates the generators: nonempty, equal lengths, entries in `N`,
    /// no zero vector, no duplicates.
    pub fn new(generators: Vec<Point>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyInput)?;
        let dim = first.len();
        let mut seen: HashMap<&[i64], usize> = HashMap::new();
        for (index, g) in generators.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
            if g.iter().any(|&x| x < 0) {
                return Err(Error::NegativeEntry { index });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::ZeroGenerator { index });
            }
            if let Some(&first) = seen.get(g.as_slice()) {
                return Err(Error::DuplicateGenerator { first, second: index });
            }
            seen.insert(g, index);
        }
        Ok(Self::from_parts(dim, generators))
    }

    fn from_parts(dim: usize, generators: Vec<Point>) -> Self {
        AffineSemigroup {
            dim,
            generators,
            group_basis: OnceLock::new(),
            rays: OnceLock::new(),
            frame: OnceLock::new(),
            coset_group: OnceLock::new(),
            module_generators: OnceLock::new(),
            membership: Mutex::new(HashMap::new()),
        }
    }

    /// Ambient dimension `m`.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Hermite basis of the group `G(B)`.
    pub fn group_basis(&self) -> &IntMatrix {
        self.group_basis
            .get_or_init(|| lattice::lattice_basis(&self.generators, self.dim))
    }

    /// Rank of `G(B)`, i.e. the Krull dimension of `K[B]`.
    pub fn rank(&self) -> usize {
        self.group_basis().nrows()
    }

    /// Whether `x` is a sum of generators.
    ///
    /// Memoized descent: `x ∈ B` iff `x = 0` or `x - b_i ∈ B` for some
    /// generator with `x - b_i ∈ N^m`. The coordinate sum strictly drops
    /// along every step, so the search is finite.
    pub fn member(&self, x: &[i64]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(self.contains(x))
    }

    pub(crate) fn contains(&self, x: &[i64]) -> bool {
        if x.iter().any(|&v| v < 0) {
            return false;
        }
        let mut memo = self.membership.lock();
        descend(&self.generators, &mut memo, x.to_vec())
    }

    /// Indices of one representative generator per extreme ray of `C(B)`.
    ///
    /// Parallel generators collapse to the one with the smallest coordinate
    /// sum (lexicographically smallest on ties). A direction is extreme iff
    /// it is not in the cone spanned by the other directions. The result is
    /// ordered by primitive ray direction, lexicographically descending, so
    /// that the first coordinate axis comes first.
    pub fn extreme_rays(&self) -> &[usize] {
        self.rays.get_or_init(|| {
            let mut by_direction: BTreeMap<Point, usize> = BTreeMap::new();
            for (i, g) in self.generators.iter().enumerate() {
                let dir = primitive(g);
                match by_direction.get(&dir) {
                    Some(&j) if frame_preference(&self.generators[j], g) != Ordering::Greater => {}
                    _ => {
                        by_direction.insert(dir, i);
                    }
                }
            }
            let directions: Vec<&Point> = by_direction.keys().collect();
            let mut rays: Vec<(Point, usize)> = Vec::new();
            for (k, (dir, &idx)) in by_direction.iter().enumerate() {
                // all vectors are nonnegative, so only directions supported
                // inside supp(dir) can combine to dir
                let others: Vec<&[i64]> = directions
                    .iter()
                    .enumerate()
                    .filter(|&(j, d)| j != k && d.iter().zip(dir.iter()).all(|(&a, &b)| a == 0 || b != 0))
                    .map(|(_, d)| d.as_slice())
                    .collect();
                if !spanned_by(dir, &others) {
                    rays.push((dir.clone(), idx));
                }
            }
            rays.sort_by(|a, b| b.0.cmp(&a.0));
            rays.into_iter().map(|(_, i)| i).collect()
        })
    }

    pub fn is_simplicial(&self) -> bool {
        self.extreme_rays().len() == self.rank()
    }

    /// The frame: per extreme ray the generator of minimal coordinate sum.
    pub fn frame(&self) -> Result<&Frame> {
        self.frame
            .get_or_init(|| {
                let rays = self.extreme_rays();
                if rays.len() != self.rank() {
                    return Err(Error::NotSimplicial {
                        rays: rays.len(),
                        rank: self.rank(),
                    });
                }
                Frame::new(
                    rays.to_vec(),
                    rays.iter().map(|&i| self.generators[i].clone()).collect(),
                    self.dim,
                )
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The group `G = G(B)/G(A)` for the frame `A`.
    pub fn coset_group(&self) -> Result<&FiniteAbelianGroup> {
        self.coset_group
            .get_or_init(|| {
                let frame = self.frame()?;
                Ok(lattice::quotient_group(self.group_basis(), frame.elements())?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// A functional with value 1 on every generator, when one exists.
    ///
    /// When the solution space is positive-dimensional the free variables
    /// are set to zero; all solutions agree on `G(B)`.
    pub fn degree_functional(&self) -> Option<DegreeFunctional> {
        // a functional valuing 1 on the frame sends x to the sum of λ(x)
        if let Ok(frame) = self.frame() {
            let den = frame.denominator();
            for g in &self.generators {
                if frame.scaled_lambda(g).ok()?.iter().sum::<i128>() != den {
                    return None;
                }
            }
            if frame.len() == self.dim {
                let den = BigInt::from(den);
                let coefficients = (0..self.dim)
                    .map(|i| {
                        let col: i128 = frame.adjugate.iter().map(|row| row[i]).sum();
                        BigRational::new(col.into(), den.clone())
                    })
                    .collect();
                return Some(DegreeFunctional {
                    coefficients: RatVector(coefficients),
                });
            }
        }
        self.solved_degree_functional()
    }

    fn solved_degree_functional(&self) -> Option<DegreeFunctional> {
        let m = IntMatrix::from_rows(&self.generators, self.dim);
        let ones = vec![1i64; self.generators.len()];
        let (coefficients, _) = lattice::solve_canonical(&m, &ones).ok()??;
        Some(DegreeFunctional { coefficients })
    }

    /// Indices of generators that are sums of the other generators.
    pub fn redundant_generators(&self) -> Vec<usize> {
        (0..self.generators.len())
            .filter(|&i| {
                let others: Vec<Point> = self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                !others.is_empty() && AffineSemigroup::from_parts(self.dim, others).contains(&self.generators[i])
            })
            .collect()
    }

    /// `B_A = { x ∈ B : x - e_k ∉ B for every k }`, in canonical order.
    ///
    /// Box. Let `D_i` be the order of the class of `b_i` in
    /// `G = G(B)/G(A)`. Then `D_i b_i` lies in `G(A)` and in the simplicial
    /// cone, so its frame coordinates are nonnegative integers and
    /// `D_i b_i ∈ A`. If `x = Σ n_i b_i ∈ B_A` had some `n_j ≥ D_j`, then
    /// `x - D_j b_j ∈ B` with `D_j b_j ∈ A \ {0}`; picking `e_k` with positive
    /// coefficient in `D_j b_j` gives `x - e_k ∈ B`, a contradiction. Hence
    /// `B_A` lies in the box `{Σ n_i b_i : 0 ≤ n_i < D_i}`, and generators
    /// with `D_i = 1` (frame elements among them) never occur.
    ///
    /// Minimality. Write `y ≼ x` when `x - y` has nonnegative integral frame
    /// coordinates, i.e. `x ∈ y + A`. Since `B = B_A + A` and `B_A` is an
    /// antichain for `≼`, `B_A` is exactly the set of `≼`-minimal elements of
    /// any subset of `B` containing it, in particular of the box.
    ///
    /// Pruning. The box is built one generator at a time. If a partial sum
    /// `x` is dominated by another partial sum `y ≺ x`, then every extension
    /// `x + z` is dominated by the box element `y + z`, so `x` can be dropped
    /// at once. No membership tests are needed.
    pub fn module_generators(&self) -> Result<&[Point]> {
        self.module_generators
            .get_or_init(|| {
                let frame = self.frame()?;
                let den = frame.denominator();
                let zero = vec![0; self.dim];
                let mut layer: Vec<(Point, Vec<i128>)> = vec![(zero.clone(), frame.scaled_lambda(&zero)?)];
                for g in &self.generators {
                    let step = frame.scaled_lambda(g)?;
                    // c·g ∈ G(A) iff c·λ(g) is integral
                    let content = step.iter().fold(den, |acc, n| acc.gcd(n));
                    let order = den / content;
                    if order <= 1 {
                        continue;
                    }
                    let mut candidates = Vec::with_capacity(layer.len() * order as usize);
                    for (x, lambda) in &layer {
                        let (mut x, mut lambda) = (x.clone(), lambda.clone());
                        candidates.push((x.clone(), lambda.clone()));
                        for _ in 1..order {
                            add_assign(&mut x, g);
                            for (l, s) in lambda.iter_mut().zip(&step) {
                                *l += s;
                            }
                            candidates.push((x.clone(), lambda.clone()));
                        }
                    }
                    layer = minimal_per_coset(candidates, den);
                }
                let mut out: Vec<Point> = layer.into_iter().map(|(x, _)| x).collect();
                out.sort_by(canonical_order);
                Ok(out)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }
}

type Adjugate = (Vec<usize>, Vec<Vec<i128>>, i128);

/// Independent coordinate rows, `|det S| · S⁻¹` and `|det S|` for the square
/// matrix `S` of those rows, in checked `i128`; `None` on overflow.
fn small_adjugate(elements: &[Point]) -> Option<Adjugate> {
    let d = elements.len();
    let wide: Vec<Vec<i128>> = elements
        .iter()
        .map(|e| e.iter().map(|&v| v as i128).collect())
        .collect();
    let (rows, _) = bareiss(wide)?;
    let square: Vec<Vec<i128>> = rows
        .iter()
        .map(|&r| elements.iter().map(|e| e[r] as i128).collect())
        .collect();
    let (_, det) = bareiss(square.clone())?;
    let minor = |skip_row: usize, skip_col: usize| -> Option<i128> {
        let m: Vec<Vec<i128>> = (0..d)
            .filter(|&i| i != skip_row)
            .map(|i| (0..d).filter(|&j| j != skip_col).map(|j| square[i][j]).collect())
            .collect();
        if m.is_empty() {
            return Some(1);
        }
        let (pivots, det) = bareiss(m)?;
        Some(if pivots.len() == d - 1 { det } else { 0 })
    };
    let mut adjugate = vec![vec![0i128; d]; d];
    for (k, row) in adjugate.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let cofactor = if (j + k) % 2 == 0 {
                minor(j, k)?
            } else {
                minor(j, k)?.checked_neg()?
            };
            *entry = cofactor.checked_mul(det.signum())?;
        }
    }
    Some((rows, adjugate, det.checked_abs()?))
}

/// Fraction-free row echelon form: pivot columns and the last pivot, which
/// is the determinant (up to sign fixed here) when the matrix is square and
/// nonsingular. `None` on overflow.
fn bareiss(mut a: Vec<Vec<i128>>) -> Option<(Vec<usize>, i128)> {
    let (n, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let (mut prev, mut r, mut sign) = (1i128, 0usize, 1i128);
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..n {
            for j in c + 1..cols {
                let t = a[r][c]
                    .checked_mul(a[i][j])?
                    .checked_sub(a[i][c].checked_mul(a[r][j])?)?;
                if t % prev != 0 {
                    return None;
                }
                a[i][j] = t / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push(c);
        r += 1;
    }
    Some((pivots, prev.checked_mul(sign)?))
}

fn exact_adjugate(elements: &[Point], dim: usize) -> Result<Adjugate> {
    let d = elements.len();
    let columns = IntMatrix::from_columns(elements, dim);
    let mut rows: Vec<usize> = Vec::with_capacity(d);
    for i in 0..dim {
        let mut trial: Vec<Vec<BigInt>> = rows.iter().map(|&r| columns.row(r).to_vec()).collect();
        trial.push(columns.row(i).to_vec());
        if IntMatrix::from_rows(&trial, d).rank() == trial.len() {
            rows.push(i);
        }
    }
    debug_assert_eq!(rows.len(), d, "frame elements are linearly independent");
    let square = IntMatrix::from_rows(&rows.iter().map(|&r| columns.row(r).to_vec()).collect::<Vec<_>>(), d);
    let det = square.determinant();
    let too_large = || Error::TooLarge;
    let denominator = det.abs().to_i128().ok_or_else(too_large)?;
    let mut adjugate = vec![vec![0i128; d]; d];
    for j in 0..d {
        let mut unit = vec![0i64; d];
        unit[j] = 1;
        let column = lattice::solve_rational(&square, &unit)?.ok_or(Error::OutsideSpan)?;
        for (k, v) in column.0.iter().enumerate() {
            let scaled = v * BigRational::from_integer(det.abs());
            debug_assert!(scaled.is_integer());
            adjugate[k][j] = scaled.to_integer().to_i128().ok_or_else(too_large)?;
        }
    }
    Ok((rows, adjugate, denominator))
}

/// Keeps the points whose scaled frame coordinates are minimal within their
/// residue class modulo `den`.
fn minimal_per_coset(points: Vec<(Point, Vec<i128>)>, den: i128) -> Vec<(Point, Vec<i128>)> {
    let mut classes: HashMap<Vec<i128>, Vec<(Point, Vec<i128>)>> = HashMap::new();
    for p in points {
        let key = p.1.iter().map(|n| n.rem_euclid(den)).collect();
        classes.entry(key).or_default().push(p);
    }
    let mut out = Vec::new();
    for mut class in classes.into_values() {
        // a dominating point has a smaller coordinate sum, so it comes first
        class.sort_by_key(|(_, l)| l.iter().sum::<i128>());
        let mut kept: Vec<(Point, Vec<i128>)> = Vec::new();
        for p in class {
            let dominated = kept.iter().any(|(_, l)| l.iter().zip(&p.1).all(|(a, b)| a <= b));
            if !dominated {
                kept.push(p);
            }
        }
        out.extend(kept);
    }
    out
}

fn descend(gens: &[Point], memo: &mut HashMap<Point, bool>, x: Point) -> bool {
    if x.iter().all(|&v| v == 0) {
        return true;
    }
    if let Some(&known) = memo.get(&x) {
        return known;
    }
    // explicit stack: (point, index of the next generator to try)
    let mut stack: Vec<(Point, usize)> = vec![(x, 0)];
    let mut child_result: Option<bool> = None;
    while let Some((point, next)) = stack.last_mut() {
        if child_result.take() == Some(true) {
            let (p, _) = stack.pop().unwrap();
            memo.insert(p, true);
            child_result = Some(true);
            continue;
        }
        let mut pushed = None;
        let mut found = false;
        while *next < gens.len() {
            let g = &gens[*next];
            *next += 1;
            if point.iter().zip(g).any(|(a, b)| a < b) {
                continue;
            }
            let child: Point = point.iter().zip(g).map(|(a, b)| a - b).collect();
            if child.iter().all(|&v| v == 0) {
                found = true;
                break;
            }
            match memo.get(&child) {
                Some(true) => {
                    found = true;
                    break;
                }
                Some(false) => {}
                None => {
                    pushed = Some(child);
                    break;
                }
            }
        }
        if found {
            let (p, _) = stack.pop().unwrap();
            memo.insert(p, true);
            child_result = Some(true);
        } else if let Some(child) = pushed {
            stack.push((child, 0));
        } else {
            let (p, _) = stack.pop().unwrap();
            memo.insert(p, false);
            child_result = Some(false);
        }
    }
    child_result.unwrap_or(false)
}

/// Whether the nonnegative vector `dir` is in the cone of `others`, all of
/// whose supports lie inside the support of `dir` and none of which is
/// parallel to it.
fn spanned_by(dir: &[i64], others: &[&[i64]]) -> bool {
    if others.is_empty() {
        return false;
    }
    let support: Vec<usize> = (0..dir.len()).filter(|&i| dir[i] != 0).collect();
    if let [a, b] = support[..] {
        let cross = |u: &[i64], v: &[i64]| u[a] as i128 * v[b] as i128 - u[b] as i128 * v[a] as i128;
        let before = others.iter().any(|u| cross(u, dir) > 0);
        let after = others.iter().any(|w| cross(dir, w) > 0);
        return before && after;
    }
    in_cone(dir, others)
}

fn add_assign(x: &mut [i64], y: &[i64]) {
    for (a, b) in x.iter_mut().zip(y) {
        *a += b;
    }
}

fn primitive(v: &[i64]) -> Point {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    v.iter().map(|&x| x / g).collect()
}

/// Smaller coordinate sum first, then lexicographically smaller.
fn frame_preference(a: &[i64], b: &[i64]) -> Ordering {
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    sa.cmp(&sb).then_with(|| a.cmp(b))
}

/// Canonical order on points: ascending coordinate sum, then descending
/// lexicographic order.
pub fn canonical_order(a: &Point, b: &Point) -> Ordering {
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    (sa, Reverse(a)).cmp(&(sb, Reverse(b)))
}

/// The linearly independent generators `e_1, ..., e_d` spanning `A`.
///
/// Frame coordinates are computed from a fixed `d × d` minor `S` of the
/// matrix with columns `e_k`: `λ(x) = adj(S) · x_R / det(S)` where `x_R`
/// are the coordinates of `x` in the rows of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    indices: Vec<usize>,
    elements: Vec<Point>,
    rows: Vec<usize>,
    /// `sign(det S) · adj(S)`.
    adjugate: Vec<Vec<i128>>,
    /// `|det S|`.
    denominator: i128,
}

impl Frame {
    fn new(indices: Vec<usize>, elements: Vec<Point>, dim: usize) -> Result<Self> {
        let (rows, adjugate, denominator) = match small_adjugate(&elements) {
            Some(found) => found,
            None => exact_adjugate(&elements, dim)?,
        };
        Ok(Frame {
            indices,
            elements,
            rows,
            adjugate,
            denominator,
        })
    }

    /// Indices of the frame elements among the semigroup generators.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn elements(&self) -> &[Point] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Common denominator of all frame coordinates of lattice points.
    pub fn denominator(&self) -> i128 {
        self.denominator
    }

    /// `denominator() · λ(x)`, an integer vector.
    pub fn scaled_lambda(&self, x: &[i64]) -> Result<Vec<i128>> {
        let dim = self.elements.first().map_or(0, Vec::len);
        if x.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: x.len(),
            });
        }
        let mut num = Vec::with_capacity(self.len());
        for row in &self.adjugate {
            let mut acc: i128 = 0;
            for (a, &r) in row.iter().zip(&self.rows) {
                acc = a
                    .checked_mul(x[r] as i128)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or(Error::TooLarge)?;
            }
            num.push(acc);
        }
        for (i, &xi) in x.iter().enumerate() {
            let mut acc: i128 = 0;
            for (e, n) in self.elements.iter().zip(&num) {
                acc = (e[i] as i128)
                    .checked_mul(*n)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or(Error::TooLarge)?;
            }
            if Some(acc) != (xi as i128).checked_mul(self.denominator) {
                return Err(Error::OutsideSpan);
            }
        }
        Ok(num)
    }

    /// The unique `λ` with `Σ λ_k e_k = x`.
    pub fn lambda(&self, x: &[i64]) -> Result<RatVector> {
        let den = BigInt::from(self.denominator);
        Ok(RatVector(
            self.scaled_lambda(x)?
                .into_iter()
                .map(|n| BigRational::new(n.into(), den.clone()))
                .collect(),
        ))
    }

    /// `Σ n_k e_k / denominator()`; `None` unless the result is integral.
    pub fn scaled_point(&self, num: &[i128]) -> Option<Point> {
        let dim = self.elements.first().map_or(0, Vec::len);
        (0..dim)
            .map(|i| {
                let mut acc: i128 = 0;
                for (e, n) in self.elements.iter().zip(num) {
                    acc = acc.checked_add((e[i] as i128).checked_mul(*n)?)?;
                }
                (acc % self.denominator == 0)
                    .then(|| i64::try_from(acc / self.denominator).ok())
                    .flatten()
            })
            .collect()
    }

    /// `Σ λ_k e_k`; `None` unless the result is integral.
    pub fn point(&self, lambda: &RatVector) -> Option<Point> {
        let den = BigInt::from(self.denominator);
        let num: Option<Vec<i128>> = lambda
            .0
            .iter()
            .map(|l| {
                let scaled = l * BigRational::from_integer(den.clone());
                scaled.is_integer().then(|| scaled.to_integer().to_i128()).flatten()
            })
            .collect();
        self.scaled_point(&num?)
    }
}

/// A linear functional `u ↦ c · u` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFunctional {
    coefficients: RatVector,
}

impl DegreeFunctional {
    pub fn coefficients(&self) -> &RatVector {
        &self.coefficients
    }

    pub fn eval(&self, x: &[i64]) -> BigRational {
        self.coefficients
            .0
            .iter()
            .zip(x)
            .map(|(c, &v)| c * BigRational::from_integer(v.into()))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Degree of `x`, if it is an integer.
    pub fn degree(&self, x: &[i64]) -> Option<i64> {
        let v = self.eval(x);
        v.is_integer().then(|| v.to_integer().to_i64()).flatten()
    }
}

impl From<DegreeFunctional> for RatVector {
    fn from(f: DegreeFunctional) -> Self {
        f.coefficients
    }
}
