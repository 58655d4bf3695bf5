//! Exact linear algebra over Q and K, and integer-lattice algorithms.
//!
//! Everything here is plain dense arithmetic with arbitrary-precision
//! scalars: Euclidean elimination for the Hermite and Smith normal forms,
//! Gaussian elimination over the ambient number field, and the lattice
//! routines (kernels, saturation, indices) built on top of them. Row-style
//! HNF with positive pivots and reduced entries above each pivot is the one
//! canonical lattice form used throughout; lattice equality is equality of
//! HNF bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numfield::{FieldElement, NumberField};
use crate::rational::{denominator_lcm, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("first lattice is not contained in the second")]
    NotASublattice,
}

/// Dense row-major matrix storage shared by the three scalar domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatZ = Mat<BigInt>;
pub type MatQ = Mat<Rational>;

impl<T: Clone> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Mat { rows: r, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, x: T) -> Self {
        Mat { rows, cols, data: vec![x; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: T) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.at(r, c).clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl MatZ {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::filled(rows, cols, BigInt::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatZ::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]], cols: usize) -> Self {
        Mat::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            cols,
        )
    }

    pub fn to_q(&self) -> MatQ {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| Rational::from_integer(x.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &MatZ) -> MatZ {
        assert_eq!(self.cols, other.rows);
        let mut out = MatZ::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let t = a * other.at(k, c);
                    let cur = out.at(r, c) + t;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let x = -self.at(r, c);
            self.set(r, c, x);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_submul(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = q * self.at(src, c);
            let x = self.at(dst, c) - t;
            self.set(dst, c, x);
        }
    }
}

impl MatQ {
    pub fn zero_q(rows: usize, cols: usize) -> Self {
        Mat::filled(rows, cols, Rational::zero())
    }

    pub fn mul_q(&self, other: &MatQ) -> MatQ {
        assert_eq!(self.cols, other.rows);
        let mut out = MatQ::zero_q(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let t = a * other.at(k, c);
                    let cur = out.at(r, c) + t;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }
}

// ---- Hermite normal form ----

/// Row-style Hermite normal form. Returns `(h, u)` with `u * m = h`, `u`
/// unimodular, pivots positive, pivot columns strictly increasing, entries
/// above each pivot reduced into `[0, pivot)`, zero rows at the bottom.
pub fn hnf(m: &MatZ) -> (MatZ, MatZ) {
    let mut h = m.clone();
    let mut u = MatZ::identity(m.rows());
    let mut pivot_row = 0usize;
    for col in 0..h.cols() {
        if pivot_row == h.rows() {
            break;
        }
        // Euclidean reduction below the current pivot row.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..h.rows() {
                if h.at(r, col).is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(r),
                    Some(b) => {
                        if h.at(r, col).magnitude() < h.at(b, col).magnitude() {
                            best = Some(r);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut again = false;
            for r in pivot_row + 1..h.rows() {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let q = h.at(r, col).div_floor(h.at(pivot_row, col));
                h.row_submul(r, pivot_row, &q);
                u.row_submul(r, pivot_row, &q);
                if !h.at(r, col).is_zero() {
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue;
        }
        if h.at(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        // Reduce entries above the pivot into [0, pivot).
        for r in 0..pivot_row {
            let q = h.at(r, col).div_floor(h.at(pivot_row, col));
            h.row_submul(r, pivot_row, &q);
            u.row_submul(r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Nonzero rows of the HNF of `m`: the canonical basis of its row lattice.
pub fn hnf_basis(m: &MatZ) -> MatZ {
    let (h, _) = hnf(m);
    let rows: Vec<Vec<BigInt>> = (0..h.rows())
        .map(|r| h.row(r).to_vec())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    Mat::from_rows(rows, m.cols())
}

// ---- Smith normal form ----

pub struct Snf {
    pub d: MatZ,
    pub u: MatZ,
    pub v: MatZ,
    pub v_inv: MatZ,
}

struct SnfState {
    d: MatZ,
    u: MatZ,
    v: MatZ,
    v_inv: MatZ,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    /// row[dst] -= q * row[src]
    fn row_submul(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.row_submul(dst, src, q);
        self.u.row_submul(dst, src, q);
    }

    fn negate_row(&mut self, r: usize) {
        self.d.negate_row(r);
        self.u.negate_row(r);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.d.rows() {
            let x = self.d.at(r, a).clone();
            self.d.set(r, a, self.d.at(r, b).clone());
            self.d.set(r, b, x);
        }
        for r in 0..self.v.rows() {
            let x = self.v.at(r, a).clone();
            self.v.set(r, a, self.v.at(r, b).clone());
            self.v.set(r, b, x);
        }
        self.v_inv.swap_rows(a, b);
    }

    /// col[dst] -= q * col[src]; the inverse op adds q * row[dst] to
    /// row[src] of `v_inv`.
    fn col_submul(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.d.rows() {
            let t = q * self.d.at(r, src);
            let x = self.d.at(r, dst) - t;
            self.d.set(r, dst, x);
        }
        for r in 0..self.v.rows() {
            let t = q * self.v.at(r, src);
            let x = self.v.at(r, dst) - t;
            self.v.set(r, dst, x);
        }
        for c in 0..self.v_inv.cols() {
            let t = q * self.v_inv.at(dst, c);
            let x = self.v_inv.at(src, c) + t;
            self.v_inv.set(src, c, x);
        }
    }

    /// Alternating row/column Euclid bringing the matrix to (unsorted,
    /// nonnegative) diagonal form.
    fn diagonalize(&mut self) {
        let n = self.d.rows().min(self.d.cols());
        for t in 0..n {
            let mut found = None;
            'search: for r in t..self.d.rows() {
                for c in t..self.d.cols() {
                    if !self.d.at(r, c).is_zero() {
                        found = Some((r, c));
                        break 'search;
                    }
                }
            }
            let Some((r, c)) = found else { break };
            self.swap_rows(t, r);
            self.swap_cols(t, c);
            loop {
                let mut dirty = false;
                for r in t + 1..self.d.rows() {
                    if self.d.at(r, t).is_zero() {
                        continue;
                    }
                    let q = self.d.at(r, t).div_floor(self.d.at(t, t));
                    self.row_submul(r, t, &q);
                    if !self.d.at(r, t).is_zero() {
                        self.swap_rows(t, r);
                        dirty = true;
                    }
                }
                for c in t + 1..self.d.cols() {
                    if self.d.at(t, c).is_zero() {
                        continue;
                    }
                    let q = self.d.at(t, c).div_floor(self.d.at(t, t));
                    self.col_submul(c, t, &q);
                    if !self.d.at(t, c).is_zero() {
                        self.swap_cols(t, c);
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
            }
            if self.d.at(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Smith normal form: `u * m * v = d` with `u`, `v` unimodular and the
/// diagonal nonnegative with `d_1 | d_2 | ...`. `v_inv` is maintained
/// alongside `v` so callers can change basis in both directions.
pub fn snf(m: &MatZ) -> Snf {
    let mut st = SnfState {
        d: m.clone(),
        u: MatZ::identity(m.rows()),
        v: MatZ::identity(m.cols()),
        v_inv: MatZ::identity(m.cols()),
    };
    let n = m.rows().min(m.cols());
    loop {
        st.diagonalize();
        // Find a divisibility violation; fold the offending column into the
        // earlier one (which makes position (t+1, t) nonzero) and repeat.
        // Each pass replaces (d_t, d_{t+1}) by (gcd, lcm), so the chain
        // strictly improves and the loop terminates.
        let mut violation = None;
        for t in 0..n.saturating_sub(1) {
            let a = st.d.at(t, t);
            let b = st.d.at(t + 1, t + 1);
            if a.is_zero() && !b.is_zero() {
                violation = Some(t);
                break;
            }
            if !a.is_zero() && !b.is_zero() && !(b % a).is_zero() {
                violation = Some(t);
                break;
            }
        }
        match violation {
            Some(t) => {
                let minus_one = BigInt::from(-1);
                st.col_submul(t, t + 1, &minus_one);
            }
            None => break,
        }
    }
    Snf { d: st.d, u: st.u, v: st.v, v_inv: st.v_inv }
}

/// Diagonal of the SNF without the transform bookkeeping.
pub fn snf_diagonal(m: &MatZ) -> Vec<BigInt> {
    let s = snf(m);
    let n = m.rows().min(m.cols());
    (0..n).map(|i| s.d.at(i, i).clone()).collect()
}

// ---- Integer kernels ----

/// Basis (rows) of `{ v : m * v = 0, v integral }`. The result is saturated
/// and in HNF.
pub fn kernel_z(m: &MatZ) -> MatZ {
    let t = m.transpose();
    let (h, u) = hnf(&t);
    let mut rows = Vec::new();
    for r in 0..h.rows() {
        if h.row(r).iter().all(|x| x.is_zero()) {
            rows.push(u.row(r).to_vec());
        }
    }
    hnf_basis(&Mat::from_rows(rows, m.cols()))
}

/// Integer kernel of a rational matrix (row scaling preserves the kernel).
pub fn kernel_z_of_q(m: &MatQ) -> MatZ {
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let l = denominator_lcm(m.row(r));
        rows.push(
            m.row(r)
                .iter()
                .map(|x| {
                    let scaled = x * Rational::from_integer(l.clone());
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect(),
        );
    }
    kernel_z(&Mat::from_rows(rows, m.cols()))
}

// ---- Lattices ----

/// A sublattice of Z^d, stored by its canonical HNF basis (independent rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient_dim: usize,
    basis: MatZ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl Lattice {
    pub fn from_generators(gens: &MatZ) -> Self {
        Lattice { ambient_dim: gens.cols(), basis: hnf_basis(gens) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: MatZ::zero(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: MatZ::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatZ {
        &self.basis
    }

    /// Integer coordinates of `v` in the HNF basis, when `v` is a member.
    pub fn member_coeffs(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rem: Vec<BigInt> = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.rows());
        for r in 0..self.basis.rows() {
            let pivot_col = self.basis.row(r).iter().position(|x| !x.is_zero()).unwrap();
            let p = self.basis.at(r, pivot_col);
            let (q, rest) = rem[pivot_col].div_rem(p);
            if !rest.is_zero() {
                return None;
            }
            for c in 0..self.ambient_dim {
                let t = &q * self.basis.at(r, c);
                rem[c] -= t;
            }
            coeffs.push(q);
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn member(&self, v: &[BigInt]) -> bool {
        self.member_coeffs(v).is_some()
    }

    /// Saturation: (Q-span of self) intersected with Z^d. A vector lies in
    /// the Q-span of the basis iff it is orthogonal to the basis' null
    /// space, so saturating is a double integer-kernel computation.
    pub fn saturate(&self) -> Lattice {
        if self.basis.rows() == 0 {
            return self.clone();
        }
        let null = kernel_z(&self.basis);
        if null.rows() == 0 {
            return Lattice::full(self.ambient_dim);
        }
        Lattice { ambient_dim: self.ambient_dim, basis: kernel_z(&null) }
    }

    /// Index `[sup : sub]` as the product of the SNF invariant factors of
    /// the inclusion matrix.
    pub fn index_in(&self, sup: &Lattice) -> Result<LatticeIndex, LinError> {
        assert_eq!(self.ambient_dim, sup.ambient_dim);
        let mut rows = Vec::with_capacity(self.basis.rows());
        for r in 0..self.basis.rows() {
            match sup.member_coeffs(self.basis.row(r)) {
                Some(c) => rows.push(c),
                None => return Err(LinError::NotASublattice),
            }
        }
        if self.rank() < sup.rank() {
            return Ok(LatticeIndex::Infinite);
        }
        let inclusion = Mat::from_rows(rows, sup.rank());
        let diag = snf_diagonal(&inclusion);
        let mut idx = BigInt::one();
        for d in diag {
            if d.is_zero() {
                return Ok(LatticeIndex::Infinite);
            }
            idx *= d;
        }
        Ok(LatticeIndex::Finite(idx))
    }
}

/// The lattice `{ m in Z^d : b * m is integral }`, always of full rank `d`.
/// Realized by clearing denominators: with `l` the lcm of all denominators
/// of `b`, solve `(l*b) m + l y = 0` over the integers and project.
pub fn integral_preimage_lattice(b: &MatQ, d: usize) -> Lattice {
    assert_eq!(b.cols(), d);
    let k = b.rows();
    if k == 0 {
        return Lattice::full(d);
    }
    let mut all: Vec<Rational> = Vec::new();
    for r in 0..k {
        all.extend(b.row(r).iter().cloned());
    }
    let l = denominator_lcm(&all);
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let mut row: Vec<BigInt> = b
            .row(r)
            .iter()
            .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let mut aug = vec![BigInt::zero(); k];
        aug[r] = l.clone();
        row.append(&mut aug);
        rows.push(row);
    }
    let system = Mat::from_rows(rows, d + k);
    let ker = kernel_z(&system);
    let proj_rows: Vec<Vec<BigInt>> = (0..ker.rows()).map(|r| ker.row(r)[..d].to_vec()).collect();
    Lattice::from_generators(&Mat::from_rows(proj_rows, d))
}

// ---- Linear algebra over the number field K ----

/// Matrix with entries in one fixed number field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatK {
    field: NumberField,
    inner: Mat<FieldElement>,
}

impl MatK {
    pub fn from_rows(field: &NumberField, rows: Vec<Vec<FieldElement>>, cols: usize) -> Self {
        for row in &rows {
            for x in row {
                assert!(x.field() == field, "matrix entry from a different field");
            }
        }
        MatK { field: field.clone(), inner: Mat::from_rows(rows, cols) }
    }

    pub fn zero(field: &NumberField, rows: usize, cols: usize) -> Self {
        MatK { field: field.clone(), inner: Mat::filled(rows, cols, field.zero()) }
    }

    pub fn identity(field: &NumberField, n: usize) -> Self {
        let mut m = MatK::zero(field, n, n);
        for i in 0..n {
            m.inner.set(i, i, field.one());
        }
        m
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.inner.rows()
    }

    pub fn cols(&self) -> usize {
        self.inner.cols()
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        self.inner.at(r, c)
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElement) {
        assert!(x.field() == &self.field);
        self.inner.set(r, c, x);
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        self.inner.row(r)
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        self.inner.row_vecs()
    }

    pub fn transpose(&self) -> Self {
        MatK { field: self.field.clone(), inner: self.inner.transpose() }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert!(self.field == other.field);
        MatK { field: self.field.clone(), inner: self.inner.vstack(&other.inner) }
    }

    pub fn mul(&self, other: &MatK) -> MatK {
        assert!(self.field == other.field);
        assert_eq!(self.cols(), other.rows());
        let mut out = MatK::zero(&self.field, self.rows(), other.cols());
        for r in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols() {
                    let t = a.mul(other.at(k, c));
                    let cur = out.at(r, c).add(&t);
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols(), v.len());
        (0..self.rows())
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Power-basis coefficient components: component `t` is the rational
    /// matrix of `alpha^t`-coefficients. A rational vector is killed by the
    /// matrix over K iff it is killed by every component.
    pub fn coeff_expand(&self) -> Vec<MatQ> {
        let deg = self.field.degree();
        (0..deg)
            .map(|t| {
                let rows: Vec<Vec<Rational>> = (0..self.rows())
                    .map(|r| self.row(r).iter().map(|x| x.coeffs()[t].clone()).collect())
                    .collect();
                Mat::from_rows(rows, self.cols())
            })
            .collect()
    }
}

/// Row echelon elimination over K. Returns the echelon matrix, the pivot
/// columns, and the row transform applied to an optional augmented matrix.
fn eliminate_k(m: &MatK, mut aug: Option<&mut Vec<FieldElement>>) -> (MatK, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prow = 0usize;
    for col in 0..a.cols() {
        let Some(sel) = (prow..a.rows()).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        // Swap into place.
        if sel != prow {
            for c in 0..a.cols() {
                let x = a.at(prow, c).clone();
                let y = a.at(sel, c).clone();
                a.set(prow, c, y);
                a.set(sel, c, x);
            }
            if let Some(b) = aug.as_deref_mut() {
                b.swap(prow, sel);
            }
        }
        let inv = a
            .at(prow, col)
            .invert()
            .expect("pivot must be invertible; reducible minimal polynomial");
        for c in 0..a.cols() {
            let x = a.at(prow, c).mul(&inv);
            a.set(prow, c, x);
        }
        if let Some(b) = aug.as_deref_mut() {
            b[prow] = b[prow].mul(&inv);
        }
        for r in 0..a.rows() {
            if r == prow || a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).clone();
            for c in 0..a.cols() {
                let t = f.mul(a.at(prow, c));
                let x = a.at(r, c).sub(&t);
                a.set(r, c, x);
            }
            if let Some(b) = aug.as_deref_mut() {
                let t = f.mul(&b[prow]);
                b[r] = b[r].sub(&t);
            }
        }
        pivots.push(col);
        prow += 1;
        if prow == a.rows() {
            break;
        }
    }
    (a, pivots)
}

pub fn rank_k(m: &MatK) -> usize {
    eliminate_k(m, None).1.len()
}

/// Reduced row echelon form over K: the canonical basis of the row space.
pub fn rref_k(m: &MatK) -> MatK {
    let (a, pivots) = eliminate_k(m, None);
    let rows: Vec<Vec<FieldElement>> = (0..pivots.len()).map(|r| a.row(r).to_vec()).collect();
    MatK::from_rows(m.field(), rows, m.cols())
}

/// Basis (rows) of `{ x : m * x = 0 }` over K.
pub fn kernel_k(m: &MatK) -> MatK {
    let field = m.field().clone();
    let (a, pivots) = eliminate_k(m, None);
    let mut rows = Vec::new();
    let mut pivot_of_col = vec![None; m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = Some(r);
    }
    for free in 0..m.cols() {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); m.cols()];
        v[free] = field.one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = a.at(r, free).neg();
        }
        rows.push(v);
    }
    MatK::from_rows(&field, rows, m.cols())
}

/// One solution of `m * x = b` over K, or `None` when inconsistent.
pub fn solve_k(m: &MatK, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
    assert_eq!(m.rows(), b.len());
    let field = m.field().clone();
    let mut rhs = b.to_vec();
    let (_a, pivots) = eliminate_k(m, Some(&mut rhs));
    for r in pivots.len()..m.rows() {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    let mut x = vec![field.zero(); m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rhs[r].clone();
    }
    Some(x)
}

pub fn inverse_k(m: &MatK) -> Result<MatK, LinError> {
    if m.rows() != m.cols() || rank_k(m) != m.rows() {
        return Err(LinError::SingularMatrix);
    }
    let n = m.rows();
    let field = m.field().clone();
    let mut out = MatK::zero(&field, n, n);
    for j in 0..n {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        let x = solve_k(m, &e).expect("full-rank square system is solvable");
        for i in 0..n {
            out.set(i, j, x[i].clone());
        }
    }
    Ok(out)
}

/// Determinant over K (by elimination), used for exact nonzero tests.
pub fn det_k(m: &MatK) -> FieldElement {
    assert_eq!(m.rows(), m.cols());
    let field = m.field().clone();
    let n = m.rows();
    if n == 0 {
        return field.one();
    }
    let mut a = m.clone();
    let mut det = field.one();
    for col in 0..n {
        let Some(sel) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
            return field.zero();
        };
        if sel != col {
            for c in 0..n {
                let x = a.at(col, c).clone();
                let y = a.at(sel, c).clone();
                a.set(col, c, y);
                a.set(sel, c, x);
            }
            det = det.neg();
        }
        let p = a.at(col, col).clone();
        det = det.mul(&p);
        let inv = p.invert().expect("nonzero pivot");
        for r in col + 1..n {
            if a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).mul(&inv);
            for c in col..n {
                let t = f.mul(a.at(col, c));
                let x = a.at(r, c).sub(&t);
                a.set(r, c, x);
            }
        }
    }
    det
}

/// Lift a rational matrix into K (rationals sit in the power-basis origin).
pub fn matq_to_k(field: &NumberField, m: &MatQ) -> MatK {
    let rows: Vec<Vec<FieldElement>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| field.from_rational(x.clone())).collect())
        .collect();
    MatK::from_rows(field, rows, m.cols())
}
