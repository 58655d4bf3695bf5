//! Decision procedures for topological generation.
//!
//! The torus case is the Kronecker criterion: a tuple generates `T^d` iff
//! the only integer character whose pairings with every element are all
//! rational is zero. With coordinates in a number field that is a pure
//! rational kernel computation over the irrational power-basis components.
//! The mixed case reduces to the torus case by quotienting out a sub-tuple
//! that projects to a basis of the free part; all candidate sub-tuples are
//! tried in index order.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::group::{
    annihilator_descriptor, chart_from_lattice, ClosedSubgroupDescriptor, GroupElement,
    GroupShape,
};
use crate::linalg::{kernel_z_of_q, rank_k, Mat, MatK, MatQ};
use crate::numfield::{FieldElement, NumberField};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("elements do not match the expected shape")]
    ShapeMismatch,
    #[error("the input set does not topologically generate the group")]
    NotGenerating,
    #[error("field degree too small to host the witness construction")]
    FieldTooSmall,
}

/// Outcome of a generation test, with a checkable witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenerationVerdict {
    /// The tuple generates; in a mixed shape, `basis_subset` lists the
    /// indices of the sub-tuple whose free projections form the basis used.
    Generates { basis_subset: Vec<usize> },
    /// Torus failure: a nonzero integer character pairing rationally with
    /// every element.
    FailsTorus { character: Vec<BigInt> },
    /// Mixed failure: every size-n sub-tuple was tried; `full_rank_subsets`
    /// of them projected to a basis and all of those failed downstream.
    FailsMixed { full_rank_subsets: usize },
}

impl GenerationVerdict {
    pub fn generates(&self) -> bool {
        matches!(self, GenerationVerdict::Generates { .. })
    }
}

fn check_shapes(xs: &[GroupElement], shape: GroupShape) -> Result<(), GenError> {
    if xs.iter().any(|x| x.shape() != shape) {
        return Err(GenError::ShapeMismatch);
    }
    Ok(())
}

/// Kronecker test in `T^d`: generates iff the only rational character with
/// all pairings rational is zero. The returned failure character is an
/// integer vector from the kernel of the stacked irrational coefficient
/// components, so its pairings are rational by construction.
pub fn generates_torus(xs: &[GroupElement], d: usize) -> Result<GenerationVerdict, GenError> {
    let shape = GroupShape::torus(d);
    check_shapes(xs, shape)?;
    let kernel = torus_character_kernel(xs, d);
    if kernel.rows() == 0 {
        Ok(GenerationVerdict::Generates { basis_subset: vec![] })
    } else {
        Ok(GenerationVerdict::FailsTorus { character: kernel.row(0).to_vec() })
    }
}

/// Lattice of integer characters pairing rationally with every element.
fn torus_character_kernel(xs: &[GroupElement], d: usize) -> crate::linalg::MatZ {
    if d == 0 {
        return crate::linalg::MatZ::zero(0, 0);
    }
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for x in xs {
        let deg = x.field().degree();
        for t in 1..deg {
            rows.push(x.lift().iter().map(|c| c.coeffs()[t].clone()).collect());
        }
    }
    let mat: MatQ = Mat::from_rows(rows, d);
    kernel_z_of_q(&mat)
}

/// Generation test in `R^n x T^m`: true iff some size-n sub-tuple projects
/// to a basis of `R^n` and the remaining elements generate the quotient
/// torus through the corresponding chart. Sub-tuples are enumerated in
/// lexicographic index order and the first success is reported.
pub fn generates(
    xs: &[GroupElement],
    shape: GroupShape,
    field: &NumberField,
) -> GenerationVerdict {
    assert!(xs.iter().all(|x| x.shape() == shape), "element shape mismatch");
    let n = shape.n_free;
    if shape.dim() == 0 {
        return GenerationVerdict::Generates { basis_subset: vec![] };
    }
    if n == 0 {
        return generates_torus(xs, shape.m_torus).expect("shapes checked");
    }
    let mut full_rank_subsets = 0usize;
    for subset in combinations(xs.len(), n) {
        let es: Vec<GroupElement> = subset.iter().map(|&i| xs[i].clone()).collect();
        let p1_rows: Vec<Vec<FieldElement>> = es.iter().map(|e| e.p1().to_vec()).collect();
        let p1_mat = MatK::from_rows(field, p1_rows, n);
        if rank_k(&p1_mat) != n {
            continue;
        }
        full_rank_subsets += 1;
        let chart = chart_from_lattice(&es, shape, field).expect("full-rank projections");
        let rest: Vec<GroupElement> = (0..xs.len())
            .filter(|i| !subset.contains(i))
            .map(|i| chart.apply(&xs[i]))
            .collect();
        if generates_torus(&rest, shape.dim()).expect("chart target is a torus").generates() {
            return GenerationVerdict::Generates { basis_subset: subset };
        }
    }
    GenerationVerdict::FailsMixed { full_rank_subsets }
}

/// All size-k index subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(vec![]);
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Find the rightmost index that can still advance.
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

/// Descriptor of the closure of the subgroup generated by `xs`.
pub fn closure(
    xs: &[GroupElement],
    shape: GroupShape,
    field: &NumberField,
) -> ClosedSubgroupDescriptor {
    assert!(xs.iter().all(|x| x.shape() == shape), "element shape mismatch");
    let lifts: Vec<Vec<FieldElement>> = xs.iter().map(|x| x.lift().to_vec()).collect();
    annihilator_descriptor(shape, field, &lifts, &[])
}

/// Is `<xs> Delta` dense? In an abelian group that subgroup is just the one
/// generated by the union.
pub fn is_dense_with(
    xs: &[GroupElement],
    delta_gens: &[GroupElement],
    shape: GroupShape,
    field: &NumberField,
) -> bool {
    let mut all = xs.to_vec();
    all.extend(delta_gens.iter().cloned());
    generates(&all, shape, field).generates()
}

/// Maximal size of an irredundant generating set of `R^n x T^m`.
pub fn redundancy_rank(shape: GroupShape) -> usize {
    2 * shape.n_free + shape.m_torus
}

/// Greedy removal until no single element can be dropped. The result still
/// generates and is irredundant by construction.
pub fn extract_irredundant(
    xs: &[GroupElement],
    shape: GroupShape,
    field: &NumberField,
) -> Result<Vec<GroupElement>, GenError> {
    if !generates(xs, shape, field).generates() {
        return Err(GenError::NotGenerating);
    }
    let mut kept: Vec<GroupElement> = xs.to_vec();
    loop {
        let mut removed = false;
        for i in 0..kept.len() {
            let mut candidate = kept.clone();
            candidate.remove(i);
            if generates(&candidate, shape, field).generates() {
                kept = candidate;
                removed = true;
                break;
            }
        }
        if !removed {
            return Ok(kept);
        }
    }
}

/// An irredundant generating set of the maximal size `2n + m`: `{a_t, 1}`
/// per free factor and `{a_t}` per torus factor, with the `a_t` distinct
/// powers of the field generator. The construction is verified exactly
/// before being returned.
pub fn irredundant_witness(
    shape: GroupShape,
    field: &NumberField,
) -> Result<Vec<GroupElement>, GenError> {
    if shape.dim() == 0 {
        return Ok(vec![]);
    }
    if field.degree() < shape.dim() + 1 {
        return Err(GenError::FieldTooSmall);
    }
    let n = shape.n_free;
    let d = shape.dim();
    let mut out = Vec::with_capacity(redundancy_rank(shape));
    let unit = |coord: usize, value: FieldElement| {
        let mut coords = vec![field.zero(); d];
        coords[coord] = value;
        GroupElement::new(shape, field, coords).unwrap()
    };
    for i in 0..n {
        out.push(unit(i, field.monomial(i + 1)));
        out.push(unit(i, field.one()));
    }
    for j in 0..shape.m_torus {
        out.push(unit(n + j, field.monomial(n + j + 1)));
    }
    // Verify: the set generates and every single removal breaks generation.
    if !generates(&out, shape, field).generates() {
        return Err(GenError::FieldTooSmall);
    }
    for i in 0..out.len() {
        let mut fewer = out.clone();
        fewer.remove(i);
        if generates(&fewer, shape, field).generates() {
            return Err(GenError::FieldTooSmall);
        }
    }
    Ok(out)
}

/// Statistical cross-check of the exact procedures; never authoritative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityReport {
    pub coverage: f64,
    pub cells_hit: usize,
    pub cells_total: usize,
}

/// Samples random integer words in `xs` and reports the fraction of grid
/// cells hit. `grid` is a total cell budget: each dimension is split into
/// `round(grid^(1/dim))` intervals. Free coordinates require a box bound
/// and are truncated to `[-box, box]`.
pub fn density_oracle(
    xs: &[GroupElement],
    shape: GroupShape,
    samples: usize,
    grid: usize,
    seed: u64,
    box_bound: Option<f64>,
) -> DensityReport {
    assert!(
        shape.is_pure_torus() || box_bound.is_some(),
        "free directions require a box truncation bound"
    );
    let d = shape.dim();
    if d == 0 || xs.is_empty() {
        return DensityReport { coverage: 0.0, cells_hit: 0, cells_total: 1 };
    }
    let per_dim = ((grid as f64).powf(1.0 / d as f64).round() as usize).max(1);
    let cells_total = per_dim.pow(d as u32);
    let coords: Vec<Vec<f64>> = xs
        .iter()
        .map(|x| x.lift().iter().map(|c| c.to_f64()).collect())
        .collect();
    let bound = box_bound.unwrap_or(1.0);
    let coeff_range = (samples as i64 / 10).max(10);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hit = vec![false; cells_total];
    let mut cells_hit = 0usize;
    for _ in 0..samples {
        let mut point = vec![0.0f64; d];
        for xc in &coords {
            let c = rng.gen_range(-coeff_range..=coeff_range) as f64;
            for (p, v) in point.iter_mut().zip(xc) {
                *p += c * v;
            }
        }
        let mut cell = 0usize;
        let mut in_box = true;
        for (i, p) in point.iter().enumerate() {
            let unit = if i < shape.n_free {
                let scaled = (p + bound) / (2.0 * bound);
                if !(0.0..1.0).contains(&scaled) {
                    in_box = false;
                    break;
                }
                scaled
            } else {
                p.rem_euclid(1.0)
            };
            let idx = ((unit * per_dim as f64) as usize).min(per_dim - 1);
            cell = cell * per_dim + idx;
        }
        if in_box && !hit[cell] {
            hit[cell] = true;
            cells_hit += 1;
        }
    }
    DensityReport {
        coverage: cells_hit as f64 / cells_total as f64,
        cells_hit,
        cells_total,
    }
}

/// Exact soundness check for a torus failure character: nonzero and all
/// pairings rational.
pub fn character_annihilates(character: &[BigInt], xs: &[GroupElement]) -> bool {
    if character.iter().all(|c| c.is_zero()) {
        return false;
    }
    xs.iter().all(|x| {
        let mut acc = x.field().zero();
        for (c, coord) in character.iter().zip(x.lift()) {
            if !c.is_zero() {
                acc = acc.add(&coord.scale(&Rational::from_integer(c.clone())));
            }
        }
        acc.is_rational()
    })
}

/// Brute-force Kronecker oracle: search integer characters of height up to
/// `bound` for one annihilating all of `xs`. Independent of the kernel
/// computation inside `generates_torus`.
pub fn brute_force_character(xs: &[GroupElement], d: usize, bound: i64) -> Option<Vec<BigInt>> {
    // Integer-scaled irrational component vectors; a character annihilates
    // iff it is orthogonal to all of them.
    let mut comps: Vec<Vec<BigInt>> = Vec::new();
    for x in xs {
        let deg = x.field().degree();
        for t in 1..deg {
            let row: Vec<Rational> = x.lift().iter().map(|c| c.coeffs()[t].clone()).collect();
            let l = crate::rational::denominator_lcm(&row);
            comps.push(
                row.iter()
                    .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                    .collect(),
            );
        }
    }
    fn rec(
        character: &mut Vec<i64>,
        pos: usize,
        bound: i64,
        comps: &[Vec<BigInt>],
    ) -> Option<Vec<BigInt>> {
        if pos == character.len() {
            if character.iter().all(|&c| c == 0) {
                return None;
            }
            let cand: Vec<BigInt> = character.iter().map(|&c| BigInt::from(c)).collect();
            if comps.iter().all(|row| {
                row.iter().zip(&cand).map(|(a, b)| a * b).sum::<BigInt>().is_zero()
            }) {
                return Some(cand);
            }
            return None;
        }
        for c in -bound..=bound {
            character[pos] = c;
            if let Some(w) = rec(character, pos + 1, bound, comps) {
                return Some(w);
            }
        }
        character[pos] = 0;
        None
    }
    let mut character = vec![0i64; d];
    rec(&mut character, 0, bound, &comps)
}
