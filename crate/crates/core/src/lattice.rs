//! Exact integer and rational linear algebra.
//!
//! Everything in here works over arbitrary-precision integers: Smith and
//! Hermite normal forms, bases of integer lattices, finite quotients of
//! lattices and exact rational solves. There is no floating point anywhere.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("sublattice has rank {sub} but the lattice has rank {sup}; the quotient is infinite")]
    InfiniteQuotient { sub: usize, sup: usize },
    #[error("vector {0} is not in the lattice")]
    NotInLattice(String),
    #[error("linear system has more than one solution")]
    AmbiguousSolution,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length. `cols` is only used when
    /// `rows` is empty.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>], cols: usize) -> Self {
        let cols = rows.first().map_or(cols, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns<T: Clone + Into<BigInt>>(columns: &[Vec<T>], rows: usize) -> Self {
        Self::from_rows(columns, rows).transpose()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(<[BigInt]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            for i in rank + 1..a.rows {
                for j in c + 1..a.cols {
                    let v = (&a[(i, j)] * &a[(rank, c)] - &a[(i, c)] * &a[(rank, j)]) / &prev;
                    a[(i, j)] = v;
                }
                a[(i, c)] = BigInt::zero();
            }
            prev = a[(rank, c)].clone();
            rank += 1;
        }
        rank
    }

    /// Rank over the prime field F_p.
    pub fn rank_mod(&self, p: u64) -> usize {
        let p = p as i128;
        let mut a: Vec<Vec<i128>> = self
            .rows()
            .map(|r| {
                r.iter()
                    .map(|x| x.mod_floor(&BigInt::from(p)).to_i128().unwrap())
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(piv, rank);
            let inv = mod_inverse(a[rank][c], p);
            let (top, below) = a.split_at_mut(rank + 1);
            let pivot = &top[rank];
            for row in below.iter_mut().filter(|row| row[c] != 0) {
                let f = row[c] * inv % p;
                for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = f * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = f * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Replaces rows (a, b) by (x*a + y*b, u*a + v*b).
    fn combine_rows(&mut self, a: usize, b: usize, [x, y, u, v]: [&BigInt; 4]) {
        for j in 0..self.cols {
            let ra = self[(a, j)].clone();
            let rb = self[(b, j)].clone();
            self[(a, j)] = x * &ra + y * &rb;
            self[(b, j)] = u * &ra + v * &rb;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows())
    }
}

fn mod_inverse(a: i128, p: i128) -> i128 {
    let (mut t, mut new_t, mut r, mut new_r) = (0i128, 1i128, p, a.rem_euclid(p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p)
}

/// Exact rational vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(pub Vec<BigRational>);

impl RatVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Maximum norm; zero for the empty vector.
    pub fn max_norm(&self) -> BigRational {
        self.0.iter().map(Signed::abs).max().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(BigRational::is_integer)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn from_integers(v: &[i64]) -> Self {
        RatVector(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Smith normal form `U * M * V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `D` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, d, v };
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);
            if d[(k, k)].is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }

            let mut dirty = false;
            for i in k + 1..rows {
                let q = d[(i, k)].div_floor(&d[(k, k)]);
                if !q.is_zero() {
                    let f = -q;
                    d.add_row(i, k, &f);
                    u.add_row(i, k, &f);
                }
                dirty |= !d[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                let q = d[(k, j)].div_floor(&d[(k, k)]);
                if !q.is_zero() {
                    let f = -q;
                    d.add_col(j, k, &f);
                    v.add_col(j, k, &f);
                }
                dirty |= !d[(k, j)].is_zero();
            }
            if dirty {
                continue;
            }

            // pivot must divide the whole trailing block
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&d[(k, k)]));
            match offender {
                Some((i, _)) => {
                    d.add_row(k, i, &BigInt::one());
                    u.add_row(k, i, &BigInt::one());
                }
                None => break,
            }
        }
    }
    SmithForm { u, d, v }
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
///
/// Returns only the nonzero rows. They are in echelon form with strictly
/// increasing pivot columns, positive pivots, and every entry above a pivot
/// reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.ncols() {
        if r == a.nrows() {
            break;
        }
        for i in r + 1..a.nrows() {
            if a[(i, c)].is_zero() {
                continue;
            }
            if a[(r, c)].is_zero() {
                a.swap_rows(r, i);
                continue;
            }
            let ext = a[(r, c)].extended_gcd(&a[(i, c)]);
            let p = &a[(r, c)] / &ext.gcd;
            let q = &a[(i, c)] / &ext.gcd;
            // [[x, y], [-q, p]] has determinant x*p + y*q = 1
            let neg_q = -q;
            a.combine_rows(r, i, [&ext.x, &ext.y, &neg_q, &p]);
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            if !q.is_zero() {
                a.add_row(i, r, &-q);
            }
        }
        r += 1;
    }
    let kept: Vec<Vec<BigInt>> = a.rows().take(r).map(<[BigInt]>::to_vec).collect();
    IntMatrix::from_rows(&kept, a.ncols())
}

/// Basis (in Hermite normal form) of the lattice generated by `vectors`.
pub fn lattice_basis<T: Clone + Into<BigInt>>(vectors: &[Vec<T>], dim: usize) -> IntMatrix {
    hermite_normal_form(&IntMatrix::from_rows(vectors, dim))
}

/// Integer coordinates of `x` with respect to a basis in Hermite normal form,
/// or `None` when `x` is not in the lattice.
fn hnf_coordinates(hnf: &IntMatrix, x: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = x.to_vec();
    let mut coords = Vec::with_capacity(hnf.nrows());
    for row in hnf.rows() {
        let pivot = row.iter().position(|e| !e.is_zero())?;
        let (q, rem) = rest[pivot].div_rem(&row[pivot]);
        if !rem.is_zero() {
            return None;
        }
        for (r, e) in rest.iter_mut().zip(row) {
            *r -= &q * e;
        }
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

/// Residue tuple labelling a coset of a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetLabel(pub Vec<BigInt>);

impl CosetLabel {
    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl serde::Serialize for CosetLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for r in &self.0 {
            match r.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&r.to_string())?,
            }
        }
        seq.end()
    }
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite quotient `L / L'` of integer lattices, with a projection from
/// ambient coordinates onto residue tuples.
#[derive(Clone, Debug)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    /// Hermite basis of `L`.
    basis: IntMatrix,
    /// Columns of the Smith transform that carry the nontrivial factors.
    transform: IntMatrix,
}

impl FiniteAbelianGroup {
    /// Invariant factors `d_1 | d_2 | ...`, all at least 2.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn identity(&self) -> CosetLabel {
        CosetLabel(vec![BigInt::zero(); self.invariant_factors.len()])
    }

    /// Coset of an ambient vector of `L`.
    pub fn project(&self, x: &[BigInt]) -> Result<CosetLabel, LatticeError> {
        if x.len() != self.basis.ncols() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.basis.ncols(),
                found: x.len(),
            });
        }
        let coords = hnf_coordinates(&self.basis, x).ok_or_else(|| not_in_lattice(x))?;
        let row = IntMatrix::from_rows(&[coords], self.basis.nrows());
        let image = row.mul(&self.transform);
        Ok(CosetLabel(
            image
                .row(0)
                .iter()
                .zip(&self.invariant_factors)
                .map(|(c, d)| c.mod_floor(d))
                .collect(),
        ))
    }

    pub fn project_i64(&self, x: &[i64]) -> Result<CosetLabel, LatticeError> {
        let big: Vec<BigInt> = x.iter().map(|&v| v.into()).collect();
        self.project(&big)
    }

    /// Order of a group element.
    pub fn element_order(&self, g: &CosetLabel) -> BigInt {
        g.0.iter()
            .zip(&self.invariant_factors)
            .fold(BigInt::one(), |acc, (r, d)| acc.lcm(&(d / r.gcd(d))))
    }

    pub fn add(&self, a: &CosetLabel, b: &CosetLabel) -> CosetLabel {
        CosetLabel(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.invariant_factors)
                .map(|((x, y), d)| (x + y).mod_floor(d))
                .collect(),
        )
    }
}

fn not_in_lattice(x: &[BigInt]) -> LatticeError {
    let parts: Vec<String> = x.iter().map(ToString::to_string).collect();
    LatticeError::NotInLattice(format!("({})", parts.join(",")))
}

/// `L / L'` where `sup` spans `L` and `sub` generates `L'`.
pub fn quotient_group<T: Clone + Into<BigInt>>(
    sup: &IntMatrix,
    sub: &[Vec<T>],
) -> Result<FiniteAbelianGroup, LatticeError> {
    let basis = hermite_normal_form(sup);
    let rank = basis.nrows();
    let mut rel_rows = Vec::with_capacity(sub.len());
    for v in sub {
        let v: Vec<BigInt> = v.iter().cloned().map(Into::into).collect();
        if v.len() != basis.ncols() {
            return Err(LatticeError::DimensionMismatch {
                expected: basis.ncols(),
                found: v.len(),
            });
        }
        rel_rows.push(hnf_coordinates(&basis, &v).ok_or_else(|| not_in_lattice(&v))?);
    }
    let relations = IntMatrix::from_rows(&rel_rows, rank);
    let sub_rank = relations.rank();
    if sub_rank < rank {
        return Err(LatticeError::InfiniteQuotient {
            sub: sub_rank,
            sup: rank,
        });
    }
    // Rows of `relations` span L' in L-coordinates. With U*R*V = D the map
    // c -> c*V identifies L/L' with the product of Z/d_i.
    let snf = smith_normal_form(&relations);
    let diag = snf.diagonal();
    let nontrivial: Vec<usize> = (0..rank).filter(|&i| !diag[i].is_one()).collect();
    let mut transform = IntMatrix::zeros(rank, nontrivial.len());
    for (k, &j) in nontrivial.iter().enumerate() {
        for i in 0..rank {
            transform[(i, k)] = snf.v[(i, j)].clone();
        }
    }
    Ok(FiniteAbelianGroup {
        invariant_factors: nontrivial.iter().map(|&i| diag[i].clone()).collect(),
        basis,
        transform,
    })
}

/// Unique rational solution of `M * x = b`, `None` if the system is
/// inconsistent.
pub fn solve_rational<T: Clone + Into<BigInt>>(m: &IntMatrix, b: &[T]) -> Result<Option<RatVector>, LatticeError> {
    match solve_canonical(m, b)? {
        None => Ok(None),
        Some((x, 0)) => Ok(Some(x)),
        Some(_) => Err(LatticeError::AmbiguousSolution),
    }
}

/// Solves `M * x = b` over Q, setting free variables to zero. Returns the
/// solution together with the number of free variables.
pub fn solve_canonical<T: Clone + Into<BigInt>>(
    m: &IntMatrix,
    b: &[T],
) -> Result<Option<(RatVector, usize)>, LatticeError> {
    if b.len() != m.nrows() {
        return Err(LatticeError::DimensionMismatch {
            expected: m.nrows(),
            found: b.len(),
        });
    }
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<BigRational> = m.row(i).iter().cloned().map(BigRational::from_integer).collect();
            r.push(BigRational::from_integer(b[i].clone().into()));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot = a[r].clone();
            for (x, y) in a[i][c..=cols].iter_mut().zip(&pivot[c..=cols]) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Ok(Some((RatVector(x), cols - pivots.len())))
}
