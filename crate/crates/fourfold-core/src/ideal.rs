//! Ideal-level operations: elimination, ring-map kernels, determinantal
//! ideals, projective dimension/degree, Jacobian smoothness, and random
//! forms inside an ideal.

use alloc::vec;
use alloc::vec::Vec;

use crate::groebner::{groebner, GroebnerBasis};
use crate::hilbert::{dimension_by_independent_sets, hilbert_data, HilbertData};
use crate::poly::{Ideal, Monomial, MonomialOrder, Poly, PolyError, RingSpec};
use crate::rng::SplitMix64;

/// A ring map `k[source] -> k[target]`, one image per source variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    pub source: RingSpec,
    pub target: RingSpec,
    pub images: Vec<Poly>,
}

impl RingMap {
    pub fn new(source: RingSpec, target: RingSpec, images: Vec<Poly>) -> Result<Self, PolyError> {
        if images.len() != source.nvars {
            return Err(PolyError::WrongVariableCount {
                expected: source.nvars,
                got: images.len(),
            });
        }
        for im in &images {
            if im.ring != target {
                return Err(PolyError::RingMismatch);
            }
        }
        Ok(RingMap {
            source,
            target,
            images,
        })
    }

    /// Kernel of the map, computed by eliminating the target variables from
    /// the graph ideal `(x_i - φ_i(t))` in the joined ring `k[t, x]`. The
    /// result lives in the source-variable ring.
    pub fn kernel(&self) -> Result<Ideal, PolyError> {
        let m = self.target.nvars;
        let n = self.source.nvars;
        let mask: u64 = (1u64 << m) - 1;
        let joined = RingSpec {
            prime: self.source.prime,
            nvars: m + n,
            order: MonomialOrder::Elim { mask },
        };
        let t_map: Vec<usize> = (0..m).collect();
        let mut graph = Vec::with_capacity(n);
        for (i, image) in self.images.iter().enumerate() {
            let x = Poly::variable(joined, m + i);
            let phi = image.inject(joined, &t_map);
            graph.push(x.sub(&phi).expect("same ring"));
        }
        let ideal = Ideal::new(joined, graph)?;
        let gb = groebner(&ideal, joined.order)?;
        let mut gens = Vec::new();
        for p in &gb.polys {
            if p.supported_outside_mask(mask) {
                gens.push(project_tail(p, self.source, m));
            }
        }
        Ideal::new(self.source, gens)
    }
}

/// Rebuild a joined-ring polynomial (supported only on the trailing block)
/// inside the `target` ring whose variables start at `offset`.
fn project_tail(p: &Poly, target: RingSpec, offset: usize) -> Poly {
    let terms = p
        .terms
        .iter()
        .map(|(mono, c)| {
            let exps: Vec<u16> = mono.exps[offset..].to_vec();
            (Monomial { exps }, *c)
        })
        .collect();
    Poly::from_terms(target, terms)
}

/// Generators of `I` involving only the kept variables, after a Gröbner
/// basis in the block order that eliminates the others. The result lives in
/// the same ring.
pub fn elimination_ideal(ideal: &Ideal, keep_mask: u64) -> Result<Ideal, PolyError> {
    let all: u64 = if ideal.ring.nvars >= 64 {
        u64::MAX
    } else {
        (1u64 << ideal.ring.nvars) - 1
    };
    let elim_mask = all & !keep_mask;
    let gb = groebner(ideal, MonomialOrder::Elim { mask: elim_mask })?;
    let gens: Vec<Poly> = gb
        .polys
        .iter()
        .filter(|p| p.supported_outside_mask(elim_mask))
        .map(|p| p.with_order(ideal.ring.order))
        .collect();
    Ideal::new(ideal.ring, gens)
}

/// All `k × k` minors of a polynomial matrix, as an ideal.
///
/// Generators are ordered by the lexicographic enumeration of (row set,
/// column set) index combinations.
pub fn minors_ideal(ring: RingSpec, matrix: &[Vec<Poly>], k: usize) -> Result<Ideal, PolyError> {
    let rows = matrix.len();
    if rows == 0 {
        return Ideal::new(ring, Vec::new());
    }
    let cols = matrix[0].len();
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(PolyError::BadMatrixShape);
    }
    for row in matrix {
        for entry in row {
            if entry.ring != ring {
                return Err(PolyError::RingMismatch);
            }
        }
    }
    if k == 0 || k > rows || k > cols {
        return Err(PolyError::MinorsTooLarge { k, rows, cols });
    }
    let row_sets = combinations(rows, k);
    let col_sets = combinations(cols, k);
    let mut gens = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            gens.push(poly_determinant(ring, matrix, rs, cs)?);
        }
    }
    Ideal::new(ring, gens)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

fn poly_determinant(
    ring: RingSpec,
    matrix: &[Vec<Poly>],
    rows: &[usize],
    cols: &[usize],
) -> Result<Poly, PolyError> {
    if rows.len() == 1 {
        return Ok(matrix[rows[0]][cols[0]].clone());
    }
    // Laplace expansion along the first selected row.
    let mut acc = Poly::zero(ring);
    let sub_rows: Vec<usize> = rows[1..].to_vec();
    for (pos, &c) in cols.iter().enumerate() {
        let sub_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&cc| cc != c)
            .collect();
        let minor = poly_determinant(ring, matrix, &sub_rows, &sub_cols)?;
        let signed = matrix[rows[0]][c].mul(&minor)?;
        acc = if pos % 2 == 0 {
            acc.add(&signed)?
        } else {
            acc.sub(&signed)?
        };
    }
    Ok(acc)
}

/// Dimension/degree of `Proj(R/I)` from the grevlex leading-term ideal.
pub fn dimension_degree(ideal: &Ideal) -> Result<HilbertData, PolyError> {
    if ideal.ring.nvars == 0 {
        return Err(PolyError::EmptyRing);
    }
    let gb = groebner(ideal, MonomialOrder::Grevlex)?;
    Ok(data_from_basis(&gb))
}

fn data_from_basis(gb: &GroebnerBasis) -> HilbertData {
    let lts = gb.leading_monomials();
    let mut data = hilbert_data(&lts, gb.ring.nvars);
    // dimension by the combinatorial route; the series is the cross-check
    let indep = dimension_by_independent_sets(&lts, gb.ring.nvars);
    debug_assert_eq!(indep, data.affine_dimension);
    data.affine_dimension = indep;
    data.dimension = indep as i64 - 1;
    data
}

/// Projective dimension of `V(I)`; `-1` for the empty scheme.
pub fn krull_dimension(ideal: &Ideal) -> Result<i64, PolyError> {
    Ok(dimension_degree(ideal)?.dimension)
}

/// Degree of `V(I)` via the Hilbert polynomial's leading term.
pub fn hilbert_degree(ideal: &Ideal) -> Result<i64, PolyError> {
    Ok(dimension_degree(ideal)?.degree)
}

/// Jacobian criterion over the coefficient field: `V(F, ∂F/∂x_i)` is
/// projectively empty. With `p` not dividing `deg F`, the Euler relation
/// makes `F` itself redundant; it is included anyway.
pub fn is_projectively_smooth(f: &Poly) -> Result<bool, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    let ring = f.ring;
    let mut gens = vec![f.clone()];
    for i in 0..ring.nvars {
        gens.push(f.partial_derivative(i));
    }
    let jacobian = Ideal::new(ring, gens)?;
    Ok(dimension_degree(&jacobian)?.dimension == -1)
}

/// All monomials of total degree `d` in `nvars` variables, descending under
/// grevlex (a fixed enumeration order shared by every caller).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(i: usize, remaining: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = remaining as u16;
            out.push(Monomial { exps: exps.clone() });
            return;
        }
        for e in (0..=remaining).rev() {
            exps[i] = e as u16;
            rec(i + 1, remaining - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    let order = MonomialOrder::Grevlex;
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// A random homogeneous element of `I` of the requested degree:
/// `sum_g g · r_g` with `r_g` a random form of degree `degree - deg g`,
/// every coefficient drawn uniformly from the field. Deterministic per seed.
pub fn random_form_in_ideal(
    ideal: &Ideal,
    degree: u32,
    rng: &mut SplitMix64,
) -> Result<Poly, PolyError> {
    let ring = ideal.ring;
    let p = ring.prime as u64;
    let usable: Vec<&Poly> = ideal
        .gens
        .iter()
        .filter(|g| g.total_degree().map(|d| d <= degree).unwrap_or(false))
        .collect();
    if usable.is_empty() {
        return Err(PolyError::NoGeneratorOfLowDegree {
            requested: degree as i64,
        });
    }
    let mut acc = Poly::zero(ring);
    for g in usable {
        let complement = degree - g.total_degree().expect("nonzero generator");
        for mono in monomials_of_degree(ring.nvars, complement) {
            let c = rng.below(p) as u32;
            if c != 0 {
                acc = acc.add(&g.mul_term(&mono, c))?;
            }
        }
    }
    Ok(acc)
}

/// Row-reduced basis (over `F_p`) of the degree-`d` slice of `I` as a
/// subspace of the forms of degree `d`. Rows are coefficient vectors against
/// `monomials_of_degree(nvars, d)`.
pub fn graded_piece(ideal: &Ideal, degree: u32) -> GradedPiece {
    let ring = ideal.ring;
    let monos = monomials_of_degree(ring.nvars, degree);
    let index_of = |m: &Monomial| monos.iter().position(|x| x == m).expect("degree matches");
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for g in &ideal.gens {
        let gd = match g.total_degree() {
            Some(d) if d <= degree => d,
            _ => continue,
        };
        for mono in monomials_of_degree(ring.nvars, degree - gd) {
            let prod = g.mul_term(&mono, 1);
            let mut row = vec![0u32; monos.len()];
            for (m, c) in &prod.terms {
                row[index_of(m)] = *c;
            }
            rows.push(row);
        }
    }
    let rows = row_reduce(ring.prime, rows);
    GradedPiece {
        ring,
        degree,
        monomials: monos,
        rows,
    }
}

/// A linear subspace of the degree-`d` forms, in row-echelon basis.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    pub ring: RingSpec,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    pub rows: Vec<Vec<u32>>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn poly_from_row(&self, row: &[u32]) -> Poly {
        let terms = self
            .monomials
            .iter()
            .zip(row)
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| (m.clone(), c))
            .collect();
        Poly::from_terms(self.ring, terms)
    }

    /// Intersection with another subspace of the same slice.
    pub fn intersect(&self, other: &GradedPiece) -> GradedPiece {
        // Solve a·U + b·W = 0; the U-parts of the kernel span U ∩ W.
        let p = self.ring.prime;
        let width = self.monomials.len();
        let stacked: Vec<Vec<u32>> = self
            .rows
            .iter()
            .chain(other.rows.iter())
            .cloned()
            .collect();
        let kernel = nullspace(p, &stacked, width);
        let field = self.ring.field();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for combo in kernel {
            let mut vec_row = vec![0u32; width];
            for (i, &c) in combo.iter().take(self.rows.len()).enumerate() {
                if c != 0 {
                    for j in 0..width {
                        vec_row[j] = field.add(vec_row[j], field.mul(c, self.rows[i][j]));
                    }
                }
            }
            if vec_row.iter().any(|&c| c != 0) {
                rows.push(vec_row);
            }
        }
        GradedPiece {
            ring: self.ring,
            degree: self.degree,
            monomials: self.monomials.clone(),
            rows: row_reduce(p, rows),
        }
    }

    /// A random element of the subspace, via random coordinates in the basis.
    pub fn random_element(&self, rng: &mut SplitMix64) -> Poly {
        let p = self.ring.prime as u64;
        let field = self.ring.field();
        let width = self.monomials.len();
        let mut acc = vec![0u32; width];
        for row in &self.rows {
            let c = rng.below(p) as u32;
            if c != 0 {
                for j in 0..width {
                    acc[j] = field.add(acc[j], field.mul(c, row[j]));
                }
            }
        }
        self.poly_from_row(&acc)
    }
}

/// Gaussian elimination over `F_p` to reduced row echelon form; zero rows
/// dropped. Deterministic.
pub fn row_reduce(prime: u32, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let field = crate::field::PrimeField::new(prime).expect("valid prime");
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0usize;
    for col in 0..width {
        let pivot = (rank..rows.len()).find(|&r| rows[r][col] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("pivot nonzero");
        for j in 0..width {
            rows[rank][j] = field.mul(rows[rank][j], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for j in 0..width {
                    let sub = field.mul(factor, rows[rank][j]);
                    rows[r][j] = field.sub(rows[r][j], sub);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Basis of `{v : A v = 0}` where the rows of `A` are given. Used to
/// parametrize linear subspaces (e.g. a plane from its three forms).
pub fn right_kernel(prime: u32, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let transpose: Vec<Vec<u32>> = (0..width)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect();
    nullspace(prime, &transpose, rows.len())
}

/// Basis of `{c : c · rows = 0}` for the row span of `rows` (coefficient
/// vectors of length `rows.len()`).
fn nullspace(prime: u32, rows: &[Vec<u32>], width: usize) -> Vec<Vec<u32>> {
    let field = crate::field::PrimeField::new(prime).expect("valid prime");
    let n = rows.len();
    // Transpose-and-solve: we need combinations of rows summing to zero,
    // i.e. the kernel of the width×n matrix A with A[j][i] = rows[i][j].
    let mut m: Vec<Vec<u32>> = (0..width)
        .map(|j| (0..n).map(|i| rows[i][j]).collect())
        .collect();
    // Row-reduce m, tracking pivot columns.
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let pivot = (rank..m.len()).find(|&r| m[r][col] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]).expect("nonzero");
        for j in 0..n {
            m[rank][j] = field.mul(m[rank][j], inv);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for j in 0..n {
                    let sub = field.mul(factor, m[rank][j]);
                    m[r][j] = field.sub(m[r][j], sub);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u32; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(m[r][free]);
        }
        basis.push(v);
    }
    basis
}
