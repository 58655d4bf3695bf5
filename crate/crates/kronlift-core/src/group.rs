//! The ambient group model `G = R^n x T^m`.
//!
//! Elements carry coordinates in one fixed number field; torus coordinates
//! are kept canonically reduced (rational part in `[0, 1)`, irrational
//! power-basis coefficients untouched), so equality of elements is plain
//! coordinate equality.
//!
//! Closed subgroups are presented by their annihilator in the dual group
//! `R^n x Z^m`: a K-subspace of covectors that must vanish on the subgroup
//! plus finitely many K-covectors whose pairings must be integers. Both
//! kinds of rows pair against canonical lifts to the cover `R^(n+m)`; the
//! descriptor invariant (every row sees the deck lattice integrally) makes
//! that well defined.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::linalg::{
    hnf_basis, inverse_k, kernel_k, kernel_z, kernel_z_of_q, rank_k, rref_k, snf, solve_k, Mat,
    MatK, MatZ,
};
use crate::numfield::{FieldElement, NumberField};
use crate::rational::{denominator_lcm, fract, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element shape does not match the ambient group shape")]
    ShapeMismatch,
    #[error("the given elements do not project to a basis of the free part")]
    NotABasis,
    #[error("subgroup is not connected")]
    NotConnected,
    #[error("subgroup descriptor carries non-rational torus characters")]
    NotRationallyDefined,
    #[error("invalid subgroup descriptor: {0}")]
    InvalidDescriptor(&'static str),
    #[error("invalid quotient chart: {0}")]
    InvalidChart(&'static str),
}

/// Shape of `R^n x T^m`: coordinates `0..n` are free, `n..n+m` wrap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupShape {
    pub n_free: usize,
    pub m_torus: usize,
}

impl GroupShape {
    pub fn new(n_free: usize, m_torus: usize) -> Self {
        GroupShape { n_free, m_torus }
    }

    pub fn dim(&self) -> usize {
        self.n_free + self.m_torus
    }

    pub fn is_pure_torus(&self) -> bool {
        self.n_free == 0
    }

    pub fn torus(m: usize) -> Self {
        GroupShape { n_free: 0, m_torus: m }
    }
}

/// A point of `R^n x T^m` with coordinates in a fixed number field,
/// canonically reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    shape: GroupShape,
    field: NumberField,
    coords: Vec<FieldElement>,
}

impl GroupElement {
    pub fn new(
        shape: GroupShape,
        field: &NumberField,
        coords: Vec<FieldElement>,
    ) -> Result<Self, GroupError> {
        if coords.len() != shape.dim() {
            return Err(GroupError::ShapeMismatch);
        }
        for c in &coords {
            if c.field() != field {
                return Err(GroupError::ShapeMismatch);
            }
        }
        Ok(GroupElement { shape, field: field.clone(), coords }.reduced())
    }

    /// Element from per-coordinate rational coefficient vectors (test and
    /// front-end convenience).
    pub fn from_coeffs(
        shape: GroupShape,
        field: &NumberField,
        coeffs: Vec<Vec<Rational>>,
    ) -> Result<Self, GroupError> {
        let coords = coeffs
            .into_iter()
            .map(|c| field.element(c).map_err(|_| GroupError::ShapeMismatch))
            .collect::<Result<Vec<_>, _>>()?;
        GroupElement::new(shape, field, coords)
    }

    pub fn zero(shape: GroupShape, field: &NumberField) -> Self {
        GroupElement {
            shape,
            field: field.clone(),
            coords: vec![field.zero(); shape.dim()],
        }
    }

    fn reduced(mut self) -> Self {
        let n = self.shape.n_free;
        for i in n..self.shape.dim() {
            let mut coeffs = self.coords[i].coeffs().to_vec();
            coeffs[0] = fract(&coeffs[0]);
            self.coords[i] = self.field.element(coeffs).unwrap();
        }
        self
    }

    /// Canonical torus reduction; idempotent (elements are stored reduced).
    pub fn reduce(&self) -> Self {
        self.clone().reduced()
    }

    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Canonical lift to the cover `R^(n+m)`.
    pub fn lift(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.shape, other.shape, "shape mismatch in group addition");
        assert!(self.field == other.field, "field mismatch in group addition");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b))
            .collect();
        GroupElement { shape: self.shape, field: self.field.clone(), coords }.reduced()
    }

    pub fn neg(&self) -> GroupElement {
        let coords = self.coords.iter().map(|c| c.neg()).collect();
        GroupElement { shape: self.shape, field: self.field.clone(), coords }.reduced()
    }

    pub fn int_scale(&self, k: &BigInt) -> GroupElement {
        let s = Rational::from_integer(k.clone());
        let coords = self.coords.iter().map(|c| c.scale(&s)).collect();
        GroupElement { shape: self.shape, field: self.field.clone(), coords }.reduced()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Projection onto the `R^n` factor.
    pub fn p1(&self) -> &[FieldElement] {
        &self.coords[..self.shape.n_free]
    }
}

/// An invertible change of cover coordinates realizing a quotient of the
/// source as the standard group of the target shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientChart {
    source: GroupShape,
    target: GroupShape,
    psi_inverse: MatK,
}

impl QuotientChart {
    pub fn new(
        source: GroupShape,
        target: GroupShape,
        psi_inverse: MatK,
    ) -> Result<Self, GroupError> {
        let d = source.dim();
        if target.dim() != d || psi_inverse.rows() != d || psi_inverse.cols() != d {
            return Err(GroupError::InvalidChart("cover dimensions disagree"));
        }
        if d > 0 && rank_k(&psi_inverse) != d {
            return Err(GroupError::InvalidChart("matrix is singular"));
        }
        // The source deck lattice must land in the target deck lattice, so
        // that the induced map is independent of the choice of lifts.
        for j in source.n_free..d {
            for i in 0..d {
                let x = psi_inverse.at(i, j);
                if i < target.n_free {
                    if !x.is_zero() {
                        return Err(GroupError::InvalidChart(
                            "deck lattice leaks into the free part of the target",
                        ));
                    }
                } else if !x.is_integer() {
                    return Err(GroupError::InvalidChart(
                        "deck lattice does not map into the target deck lattice",
                    ));
                }
            }
        }
        Ok(QuotientChart { source, target, psi_inverse })
    }

    pub fn identity(shape: GroupShape, field: &NumberField) -> Self {
        QuotientChart {
            source: shape,
            target: shape,
            psi_inverse: MatK::identity(field, shape.dim()),
        }
    }

    pub fn source(&self) -> GroupShape {
        self.source
    }

    pub fn target(&self) -> GroupShape {
        self.target
    }

    pub fn psi_inverse(&self) -> &MatK {
        &self.psi_inverse
    }

    pub fn apply(&self, e: &GroupElement) -> GroupElement {
        assert_eq!(e.shape(), self.source, "shape mismatch in chart application");
        let coords = self.psi_inverse.mul_vec(e.lift());
        GroupElement::new(self.target, self.psi_inverse.field(), coords).unwrap()
    }
}

/// Chart onto the pure torus `T^(n+m)` realizing `G / <E>` for a tuple `E`
/// of `n` elements whose free projections form a basis. The matrix sends
/// the lattice generated by `E` and the deck directions onto `Z^(n+m)`.
pub fn chart_from_lattice(
    es: &[GroupElement],
    shape: GroupShape,
    field: &NumberField,
) -> Result<QuotientChart, GroupError> {
    let n = shape.n_free;
    let d = shape.dim();
    if es.len() != n {
        return Err(GroupError::NotABasis);
    }
    for e in es {
        if e.shape() != shape {
            return Err(GroupError::ShapeMismatch);
        }
    }
    let mut psi = MatK::zero(field, d, d);
    for (j, e) in es.iter().enumerate() {
        for i in 0..d {
            psi.set(i, j, e.lift()[i].clone());
        }
    }
    for j in n..d {
        psi.set(j, j, field.one());
    }
    let psi_inverse = inverse_k(&psi).map_err(|_| GroupError::NotABasis)?;
    QuotientChart::new(shape, GroupShape::torus(d), psi_inverse)
}

/// A closed subgroup of `R^n x T^m`, presented by annihilating covectors.
///
/// The subgroup is `{ x : <w, x~> = 0 for all vanishing rows w, and
/// <l, x~> integral for all integral rows l }`, pairing against canonical
/// lifts. Vanishing rows have zero torus components and integral rows have
/// integer torus components, so both conditions descend from the cover.
#[derive(Debug, Clone)]
pub struct ClosedSubgroupDescriptor {
    shape: GroupShape,
    field: NumberField,
    vanishing: MatK,
    integral: MatK,
    dim: usize,
    components: BigInt,
}

impl ClosedSubgroupDescriptor {
    pub fn new(
        shape: GroupShape,
        field: &NumberField,
        vanishing: MatK,
        integral: MatK,
    ) -> Result<Self, GroupError> {
        let d = shape.dim();
        let n = shape.n_free;
        if vanishing.cols() != d || integral.cols() != d {
            return Err(GroupError::InvalidDescriptor("row length differs from dim"));
        }
        for r in 0..vanishing.rows() {
            for c in n..d {
                if !vanishing.at(r, c).is_zero() {
                    return Err(GroupError::InvalidDescriptor(
                        "vanishing row pairs nontrivially with a deck direction",
                    ));
                }
            }
        }
        for r in 0..integral.rows() {
            for c in n..d {
                if !integral.at(r, c).is_integer() {
                    return Err(GroupError::InvalidDescriptor(
                        "integral row pairs non-integrally with a deck direction",
                    ));
                }
            }
        }
        let stacked = vanishing.vstack(&integral);
        let dim = d - rank_k(&stacked);
        let components = component_index(shape, &integral);
        Ok(ClosedSubgroupDescriptor {
            shape,
            field: field.clone(),
            vanishing,
            integral,
            dim,
            components,
        })
    }

    /// The whole group (no constraints).
    pub fn full(shape: GroupShape, field: &NumberField) -> Self {
        ClosedSubgroupDescriptor::new(
            shape,
            field,
            MatK::zero(field, 0, shape.dim()),
            MatK::zero(field, 0, shape.dim()),
        )
        .unwrap()
    }

    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn vanishing(&self) -> &MatK {
        &self.vanishing
    }

    pub fn integral(&self) -> &MatK {
        &self.integral
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of connected components of the compact part: the torsion of
    /// the component group. Always finite, even for subgroups with a free
    /// discrete factor.
    pub fn component_count(&self) -> &BigInt {
        &self.components
    }

    /// Free rank of the quotient `G / A`: the dimension of the vector part
    /// of the annihilator, i.e. the span of the vanishing rows.
    pub fn quotient_free_rank(&self) -> usize {
        rank_k(&self.vanishing)
    }

    pub fn is_full_group(&self) -> bool {
        self.dim == self.shape.dim() && self.components.is_one()
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        assert_eq!(e.shape(), self.shape, "shape mismatch in descriptor query");
        let lift = e.lift();
        for r in 0..self.vanishing.rows() {
            if !pair(self.vanishing.row(r), lift).is_zero() {
                return false;
            }
        }
        for r in 0..self.integral.rows() {
            if !pair(self.integral.row(r), lift).is_integer() {
                return false;
            }
        }
        true
    }

    /// Descriptor of the connected component of the identity.
    pub fn connected_component(&self) -> ClosedSubgroupDescriptor {
        let stacked = self.vanishing.vstack(&self.integral);
        let tangent = kernel_k(&stacked);
        annihilator_descriptor(self.shape, &self.field, &[], &tangent.row_vecs())
    }

    /// Structural equality: equal vanishing spans and equal integral
    /// character groups modulo the span. Both sides are canonicalized (RREF
    /// for the span, scaled HNF for the character lattice), so this decides
    /// equality of the described subgroups for descriptors whose character
    /// data forms a genuine lattice — which all descriptors produced by
    /// this crate do.
    pub fn equal(&self, other: &ClosedSubgroupDescriptor) -> bool {
        if self.shape != other.shape || self.field != other.field {
            return false;
        }
        let a = rref_k(&self.vanishing);
        let b = rref_k(&other.vanishing);
        if a != b {
            return false;
        }
        let ra = reduced_character_rows(&a, &self.integral);
        let rb = reduced_character_rows(&b, &other.integral);
        let mut all: Vec<Rational> = Vec::new();
        for row in ra.iter().chain(rb.iter()) {
            all.extend(row.iter().cloned());
        }
        let l = denominator_lcm(&all);
        let cols = self.shape.dim() * self.field.degree();
        let scale = |rows: &[Vec<Rational>]| -> MatZ {
            let int_rows: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                        .collect()
                })
                .collect();
            hnf_basis(&Mat::from_rows(int_rows, cols))
        };
        scale(&ra) == scale(&rb)
    }
}

fn pair(row: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    let mut acc = row[0].field().zero();
    for (a, b) in row.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc.add(&a.mul(b));
        }
    }
    acc
}

/// Torsion index of the component group: the index of the lattice spanned
/// by the deck-direction columns of the integral rows inside its
/// saturation.
fn component_index(shape: GroupShape, integral: &MatK) -> BigInt {
    let s = integral.rows();
    let m = shape.m_torus;
    let mut gens = Vec::with_capacity(m);
    for j in 0..m {
        let col: Vec<BigInt> = (0..s)
            .map(|r| {
                let x = integral.at(r, shape.n_free + j);
                debug_assert!(x.is_integer());
                x.rational_part().to_integer()
            })
            .collect();
        gens.push(col);
    }
    let r = crate::linalg::Lattice::from_generators(&Mat::from_rows(gens, s));
    let sat = r.saturate();
    match r.index_in(&sat).expect("lattice is contained in its saturation") {
        crate::linalg::LatticeIndex::Finite(k) => k,
        crate::linalg::LatticeIndex::Infinite => unreachable!("equal ranks by construction"),
    }
}

/// Integral rows reduced modulo the (RREF) vanishing span and flattened to
/// rational coordinate vectors.
fn reduced_character_rows(rref_vanishing: &MatK, integral: &MatK) -> Vec<Vec<Rational>> {
    let field = integral.field();
    let deg = field.degree();
    let mut pivots = Vec::new();
    for r in 0..rref_vanishing.rows() {
        let p = (0..rref_vanishing.cols())
            .find(|&c| !rref_vanishing.at(r, c).is_zero())
            .expect("rref keeps only nonzero rows");
        pivots.push((r, p));
    }
    let mut out = Vec::with_capacity(integral.rows());
    for r in 0..integral.rows() {
        let mut row: Vec<FieldElement> = integral.row(r).to_vec();
        for &(wr, p) in &pivots {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for c in 0..row.len() {
                let t = f.mul(rref_vanishing.at(wr, c));
                row[c] = row[c].sub(&t);
            }
        }
        let mut flat = Vec::with_capacity(row.len() * deg);
        for x in &row {
            flat.extend(x.coeffs().iter().cloned());
        }
        out.push(flat);
    }
    out
}

/// Core duality computation: the descriptor of the smallest closed subgroup
/// containing the deck lattice, the given integer-pairing generators
/// (closures of cyclic subgroups) and the given zero-pairing generators
/// (connected directions).
///
/// A character is a pair `(u, c)` with `u` real on the free part and `c`
/// integral on the deck directions. It annihilates iff `u . p_j + c . q_j`
/// is an integer `k_j` for each integer-pairing generator `(p_j, q_j)` and
/// zero for each zero-pairing generator. The connected part of the
/// annihilator is the K-kernel of the free-part pairing matrix; the
/// discrete part is enumerated by the integer lattice of `(c, k)` tuples
/// for which the linear system in `u` is solvable, each solved exactly
/// over K.
pub(crate) fn annihilator_descriptor(
    shape: GroupShape,
    field: &NumberField,
    int_gens: &[Vec<FieldElement>],
    zero_gens: &[Vec<FieldElement>],
) -> ClosedSubgroupDescriptor {
    let n = shape.n_free;
    let m = shape.m_torus;
    let d = shape.dim();
    let r = int_gens.len();
    for g in int_gens.iter().chain(zero_gens) {
        assert_eq!(g.len(), d, "generator length differs from cover dimension");
    }

    // Free-part pairing matrix P and the rhs template T over the integer
    // unknowns (c_1..c_m, k_1..k_r).
    let mut p_rows = Vec::with_capacity(r + zero_gens.len());
    let mut t_rows = Vec::with_capacity(r + zero_gens.len());
    for (j, g) in int_gens.iter().enumerate() {
        p_rows.push(g[..n].to_vec());
        let mut row = vec![field.zero(); m + r];
        for c in 0..m {
            row[c] = g[n + c].neg();
        }
        row[m + j] = field.one();
        t_rows.push(row);
    }
    for g in zero_gens.iter() {
        p_rows.push(g[..n].to_vec());
        let mut row = vec![field.zero(); m + r];
        for c in 0..m {
            row[c] = g[n + c].neg();
        }
        t_rows.push(row);
    }
    let p = MatK::from_rows(field, p_rows, n);
    let t_mat = MatK::from_rows(field, t_rows, m + r);

    // Vanishing rows: the K-kernel of P, padded with zero deck components.
    let w = kernel_k(&p);
    let mut vanishing_rows = Vec::with_capacity(w.rows());
    for i in 0..w.rows() {
        let mut row = w.row(i).to_vec();
        row.extend(std::iter::repeat(field.zero()).take(m));
        vanishing_rows.push(row);
    }

    // Solvability conditions: z . (T (c,k)) = 0 for z spanning the left
    // kernel of P, split into power-basis components.
    let z = kernel_k(&p.transpose());
    let cond = z.mul(&t_mat);
    let comps = cond.coeff_expand();
    let mut stacked = comps[0].clone();
    for comp in &comps[1..] {
        stacked = stacked.vstack(comp);
    }
    let ck_lattice: MatZ = if m + r == 0 {
        MatZ::zero(0, 0)
    } else {
        kernel_z_of_q(&stacked)
    };

    let mut integral_rows = Vec::with_capacity(ck_lattice.rows());
    for i in 0..ck_lattice.rows() {
        let v: Vec<FieldElement> = ck_lattice
            .row(i)
            .iter()
            .map(|x| field.from_rational(Rational::from_integer(x.clone())))
            .collect();
        let rhs = t_mat.mul_vec(&v);
        let u0 = solve_k(&p, &rhs)
            .expect("rhs lies in the column space by the solvability condition");
        let mut row = u0;
        for c in 0..m {
            row.push(v[c].clone());
        }
        integral_rows.push(row);
    }

    ClosedSubgroupDescriptor::new(
        shape,
        field,
        MatK::from_rows(field, vanishing_rows, d),
        MatK::from_rows(field, integral_rows, d),
    )
    .expect("constructed descriptor rows satisfy the deck invariants")
}

/// Chart splitting a pure torus as (connected subtorus) x (complement): the
/// first `dim(d)` target coordinates parametrize the subtorus, the rest a
/// complementary subtorus. The change of basis is unimodular on the deck
/// lattice.
pub fn complement_subtorus(
    desc: &ClosedSubgroupDescriptor,
) -> Result<QuotientChart, GroupError> {
    let shape = desc.shape();
    if !shape.is_pure_torus() {
        return Err(GroupError::NotConnected);
    }
    if !desc.component_count().is_one() || desc.dim() > shape.dim() {
        return Err(GroupError::NotConnected);
    }
    let m = shape.m_torus;
    let field = desc.field().clone();
    let s = desc.integral().rows();
    let mut char_rows = Vec::with_capacity(s);
    for rix in 0..s {
        let mut row = Vec::with_capacity(m);
        for c in 0..m {
            let x = desc.integral().at(rix, c);
            if !x.is_integer() {
                return Err(GroupError::NotRationallyDefined);
            }
            row.push(x.rational_part().to_integer());
        }
        char_rows.push(row);
    }
    // Point lattice of the subtorus on the cover, then a unimodular basis
    // of Z^m whose first dim(d) vectors span it.
    let char_mat = Mat::from_rows(char_rows, m);
    let tangent = kernel_z(&char_mat);
    debug_assert_eq!(tangent.rows(), desc.dim());
    let s = snf(&tangent);
    // The first dim(d) rows of v_inv span the (saturated) tangent lattice;
    // psi's columns are those rows, so psi_inverse = v^T.
    let psi_inverse_z = s.v.transpose();
    let rows: Vec<Vec<FieldElement>> = (0..m)
        .map(|r| {
            psi_inverse_z
                .row(r)
                .iter()
                .map(|x| field.from_rational(Rational::from_integer(x.clone())))
                .collect()
        })
        .collect();
    let psi_inverse = MatK::from_rows(&field, rows, m);
    QuotientChart::new(shape, shape, psi_inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn sqrt2() -> NumberField {
        NumberField::sqrt2()
    }

    /// Element of shape `(n, m)` over Q(sqrt2) from (rational, sqrt2) pairs.
    fn el(shape: GroupShape, pairs: &[(Rational, Rational)]) -> GroupElement {
        let k = sqrt2();
        GroupElement::from_coeffs(
            shape,
            &k,
            pairs.iter().map(|(a, b)| vec![a.clone(), b.clone()]).collect(),
        )
        .unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d)
    }

    #[test]
    fn torus_reduction() {
        let t1 = GroupShape::torus(1);
        // 3/2 + sqrt2 reduces to 1/2 + sqrt2.
        let x = el(t1, &[(q(3, 2), q(1, 1))]);
        assert_eq!(x, el(t1, &[(q(1, 2), q(1, 1))]));
        // Only the rational part wraps.
        let y = el(t1, &[(q(0, 1), q(1, 1))]);
        assert_eq!(y.int_scale(&BigInt::from(2)), el(t1, &[(q(0, 1), q(2, 1))]));
        assert!(x.add(&x.neg()).is_zero());
        assert_eq!(x.reduce(), x);
    }

    #[test]
    fn p1_projection() {
        let shape = GroupShape::new(1, 1);
        let x = el(shape, &[(q(1, 1), q(0, 1)), (q(0, 1), q(1, 1))]);
        assert_eq!(x.p1(), &[sqrt2().one()]);
        let t = GroupShape::torus(2);
        let y = el(t, &[(q(1, 2), q(0, 1)), (q(0, 1), q(0, 1))]);
        assert!(y.p1().is_empty());
    }

    #[test]
    #[should_panic(expected = "shape mismatch")]
    fn mixed_shape_addition_panics() {
        let a = el(GroupShape::torus(1), &[(q(0, 1), q(1, 1))]);
        let b = el(GroupShape::new(1, 0), &[(q(0, 1), q(1, 1))]);
        let _ = a.add(&b);
    }

    #[test]
    fn chart_on_the_line() {
        let k = sqrt2();
        let shape = GroupShape::new(1, 0);
        let e = el(shape, &[(q(1, 1), q(0, 1))]);
        let chart = chart_from_lattice(&[e.clone()], shape, &k).unwrap();
        assert_eq!(chart.target(), GroupShape::torus(1));
        assert_eq!(chart.psi_inverse().at(0, 0), &k.one());
        // Defining property: lattice elements map to the identity.
        assert!(chart.apply(&e).is_zero());
    }

    #[test]
    fn chart_inverse_matches_known_formula() {
        // E = { sqrt2 + k0 } in R^1: psi_inverse = [ 1/(sqrt2+k0) ].
        let k = sqrt2();
        let shape = GroupShape::new(1, 0);
        for k0 in [0i64, 1, 3, -2] {
            let e = el(shape, &[(q(k0, 1), q(1, 1))]);
            let chart = chart_from_lattice(&[e.clone()], shape, &k).unwrap();
            let expect = k
                .element(vec![q(k0, 1), q(1, 1)])
                .unwrap()
                .invert()
                .unwrap();
            assert_eq!(chart.psi_inverse().at(0, 0), &expect);
            assert!(chart.apply(&e).is_zero());
        }
    }

    #[test]
    fn chart_in_the_plane() {
        let k = sqrt2();
        let shape = GroupShape::new(2, 0);
        let e1 = el(shape, &[(q(1, 1), q(0, 1)), (q(0, 1), q(0, 1))]);
        let e2 = el(shape, &[(q(0, 1), q(1, 1)), (q(0, 1), q(1, 1))]);
        let chart = chart_from_lattice(&[e1.clone(), e2.clone()], shape, &k).unwrap();
        assert!(chart.apply(&e1).is_zero());
        assert!(chart.apply(&e2).is_zero());

        // A dependent pair is not a basis.
        let dep = chart_from_lattice(&[e1.clone(), e1.clone()], shape, &k);
        assert_eq!(dep.unwrap_err(), GroupError::NotABasis);
    }

    #[test]
    fn descriptor_basics() {
        let k = sqrt2();
        let t1 = GroupShape::torus(1);
        let full = ClosedSubgroupDescriptor::full(t1, &k);
        assert_eq!(full.dim(), 1);
        assert!(full.component_count().is_one());
        assert!(full.is_full_group());

        // { x in T^1 : 2x integral } has dimension 0 and 2 components.
        let two = MatK::from_rows(&k, vec![vec![k.from_int(2)]], 1);
        let d = ClosedSubgroupDescriptor::new(t1, &k, MatK::zero(&k, 0, 1), two).unwrap();
        assert_eq!(d.dim(), 0);
        assert_eq!(d.component_count(), &BigInt::from(2));
        assert!(d.contains(&el(t1, &[(q(1, 2), q(0, 1))])));
        assert!(!d.contains(&el(t1, &[(q(1, 3), q(0, 1))])));

        // Its connected component is the trivial subgroup.
        let c = d.connected_component();
        assert_eq!(c.dim(), 0);
        assert!(c.component_count().is_one());
        assert!(c.contains(&GroupElement::zero(t1, &k)));
        assert!(!c.contains(&el(t1, &[(q(1, 2), q(0, 1))])));
    }

    #[test]
    fn diagonal_subtorus_descriptor() {
        let k = sqrt2();
        let t2 = GroupShape::torus(2);
        // Characters (1, -1): the diagonal subtorus.
        let rows = MatK::from_rows(&k, vec![vec![k.one(), k.from_int(-1)]], 2);
        let d = ClosedSubgroupDescriptor::new(t2, &k, MatK::zero(&k, 0, 2), rows).unwrap();
        assert_eq!(d.dim(), 1);
        assert!(d.component_count().is_one());
        assert!(d.contains(&el(t2, &[(q(0, 1), q(1, 1)), (q(0, 1), q(1, 1))])));
        assert!(!d.contains(&el(t2, &[(q(0, 1), q(1, 1)), (q(0, 1), q(0, 1))])));

        // Complement chart: the diagonal goes to the first coordinate, the
        // complement part of its image vanishes.
        let chart = complement_subtorus(&d).unwrap();
        let diag = el(t2, &[(q(0, 1), q(1, 1)), (q(0, 1), q(1, 1))]);
        let img = chart.apply(&diag);
        assert!(img.lift()[1].is_zero());

        // Trivial subgroup: still a valid chart; full torus: dim 2.
        let full = ClosedSubgroupDescriptor::full(t2, &k);
        let chart = complement_subtorus(&full).unwrap();
        assert_eq!(chart.target(), t2);
    }

    #[test]
    fn descriptor_equality_is_presentation_independent() {
        let k = sqrt2();
        let t2 = GroupShape::torus(2);
        let a = ClosedSubgroupDescriptor::new(
            t2,
            &k,
            MatK::zero(&k, 0, 2),
            MatK::from_rows(&k, vec![vec![k.one(), k.from_int(-1)]], 2),
        )
        .unwrap();
        // Same subgroup, redundant presentation.
        let b = ClosedSubgroupDescriptor::new(
            t2,
            &k,
            MatK::zero(&k, 0, 2),
            MatK::from_rows(
                &k,
                vec![
                    vec![k.from_int(-1), k.one()],
                    vec![k.from_int(2), k.from_int(-2)],
                ],
                2,
            ),
        )
        .unwrap();
        assert!(a.equal(&b));
        let c = ClosedSubgroupDescriptor::new(
            t2,
            &k,
            MatK::zero(&k, 0, 2),
            MatK::from_rows(&k, vec![vec![k.from_int(2), k.from_int(-2)]], 2),
        )
        .unwrap();
        assert!(!a.equal(&c));
        assert_eq!(c.component_count(), &BigInt::from(2));
    }

    #[test]
    fn invalid_descriptors_rejected() {
        let k = sqrt2();
        let t1 = GroupShape::torus(1);
        // A vanishing row with a nonzero deck pairing is corrupt.
        let bad = ClosedSubgroupDescriptor::new(
            t1,
            &k,
            MatK::from_rows(&k, vec![vec![k.one()]], 1),
            MatK::zero(&k, 0, 1),
        );
        assert!(matches!(bad, Err(GroupError::InvalidDescriptor(_))));
        // An integral row with irrational deck pairing too.
        let bad = ClosedSubgroupDescriptor::new(
            t1,
            &k,
            MatK::zero(&k, 0, 1),
            MatK::from_rows(&k, vec![vec![k.generator()]], 1),
        );
        assert!(matches!(bad, Err(GroupError::InvalidDescriptor(_))));
    }
}
