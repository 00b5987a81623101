//! Exact arithmetic on integral symmetric bilinear forms.
//!
//! Everything a component verdict rests on lives here: determinants,
//! Sylvester positive-definiteness, norms, complete short-vector
//! enumeration, saturated orthogonal complements, evenness, and brute-force
//! isometry testing in small rank. Emptiness claims reduce to the *absence*
//! of vectors of norm 2, so the enumeration must be provably complete: all
//! pruning bounds are computed in exact rational arithmetic, never floats.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Entries do not form a symmetric matrix.
    NotSymmetric,
    /// Rank zero or inconsistent entry count.
    BadShape,
    /// Vector length does not match the Gram rank.
    RankMismatch { expected: usize, got: usize },
    /// Enumeration requires a positive definite form.
    NotPositiveDefinite,
    /// Short-vector target must be a positive integer.
    NonPositiveTarget,
    /// The orthogonal complement of the zero vector is not defined.
    ZeroVector,
    /// Brute-force isometry search is only supported up to this rank.
    RankTooLarge { max: usize },
    /// A fixed-width intermediate overflowed; inputs are outside the scale
    /// this fast path supports.
    Overflow,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotSymmetric => write!(f, "matrix is not symmetric"),
            LatticeError::BadShape => write!(f, "matrix shape is invalid"),
            LatticeError::RankMismatch { expected, got } => {
                write!(f, "vector length {got} does not match rank {expected}")
            }
            LatticeError::NotPositiveDefinite => write!(f, "form is not positive definite"),
            LatticeError::NonPositiveTarget => write!(f, "target norm must be positive"),
            LatticeError::ZeroVector => write!(f, "zero vector has no orthogonal complement"),
            LatticeError::RankTooLarge { max } => {
                write!(f, "isometry search supports rank at most {max}")
            }
            LatticeError::Overflow => write!(f, "integer overflow in fixed-width fast path"),
        }
    }
}

/// An integer vector in a fixed-rank lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Negate in place so the first nonzero coordinate is positive.
    pub fn sign_normalized(mut self) -> Self {
        if let Some(first) = self.0.iter().find(|&&c| c != 0) {
            if *first < 0 {
                for c in &mut self.0 {
                    *c = -*c;
                }
            }
        }
        self
    }

    pub fn negated(&self) -> Self {
        LatticeVector(self.0.iter().map(|&c| -c).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A symmetric integer intersection matrix.
///
/// Entries stay exact `i64`; every product runs through checked `i128`
/// arithmetic, and determinant-like quantities are computed in arbitrary
/// precision so no input can silently wrap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    rank: usize,
    entries: Vec<i64>, // row-major, rank*rank
}

impl GramMatrix {
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        let rank = rows.len();
        if rank == 0 || rows.iter().any(|r| r.len() != rank) {
            return Err(LatticeError::BadShape);
        }
        for i in 0..rank {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        Ok(GramMatrix {
            rank,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self, LatticeError> {
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::new(&owned)
    }

    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0i64; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        GramMatrix { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| self.entries[i * self.rank..(i + 1) * self.rank].to_vec())
            .collect()
    }

    fn check_rank(&self, v: &LatticeVector) -> Result<(), LatticeError> {
        if v.rank() != self.rank {
            return Err(LatticeError::RankMismatch {
                expected: self.rank,
                got: v.rank(),
            });
        }
        Ok(())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination over `BigInt`.
    pub fn determinant(&self) -> BigInt {
        let m: Vec<Vec<BigInt>> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| BigInt::from(self.entry(i, j))).collect())
            .collect();
        bareiss_determinant(m)
    }

    /// Sylvester criterion: every leading principal minor is positive.
    pub fn is_positive_definite(&self) -> bool {
        // Fraction-free elimination without pivoting: the k-th pivot equals
        // the k-th leading principal minor. A zero pivot already refutes
        // positive definiteness.
        let n = self.rank;
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entry(i, j))).collect())
            .collect();
        let mut prev = BigInt::one();
        for k in 0..n {
            if !m[k][k].is_positive() {
                return false;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        true
    }

    /// The pairing `u^T G v` through checked 128-bit arithmetic.
    pub fn inner(&self, u: &LatticeVector, v: &LatticeVector) -> Result<i64, LatticeError> {
        self.check_rank(u)?;
        self.check_rank(v)?;
        let mut acc: i128 = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                let term = (u.0[i] as i128)
                    .checked_mul(self.entry(i, j) as i128)
                    .and_then(|t| t.checked_mul(v.0[j] as i128))
                    .ok_or(LatticeError::Overflow)?;
                acc = acc.checked_add(term).ok_or(LatticeError::Overflow)?;
            }
        }
        i64::try_from(acc).map_err(|_| LatticeError::Overflow)
    }

    /// `v^T G v`.
    pub fn vector_norm(&self, v: &LatticeVector) -> Result<i64, LatticeError> {
        self.inner(v, v)
    }

    /// `G v` as an integer vector.
    pub fn apply(&self, v: &LatticeVector) -> Result<Vec<i64>, LatticeError> {
        self.check_rank(v)?;
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut acc: i128 = 0;
            for j in 0..self.rank {
                let term = (self.entry(i, j) as i128)
                    .checked_mul(v.0[j] as i128)
                    .ok_or(LatticeError::Overflow)?;
                acc = acc.checked_add(term).ok_or(LatticeError::Overflow)?;
            }
            out.push(i64::try_from(acc).map_err(|_| LatticeError::Overflow)?);
        }
        Ok(out)
    }

    /// All diagonal self-intersections even?
    pub fn is_even(&self) -> bool {
        (0..self.rank).all(|i| self.entry(i, i) % 2 == 0)
    }

    /// Complete list of `v != 0` with `v^T G v == target`, one representative
    /// per `±` pair (first nonzero coordinate positive), in lexicographic
    /// order of coordinates, largest first.
    ///
    /// The enumeration walks an exact rational `L D L^T` decomposition with
    /// Fincke–Pohst coordinate bounds, so the returned list is provably
    /// complete; an empty result is a proof of absence.
    pub fn short_vectors(&self, target: i64) -> Result<Vec<LatticeVector>, LatticeError> {
        if target <= 0 {
            return Err(LatticeError::NonPositiveTarget);
        }
        if !self.is_positive_definite() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        let n = self.rank;
        let (diag, lower) = self.ldlt();
        // Q(x) = sum_i d_i (x_i + sum_{j>i} L[j][i] x_j)^2, enumerated from
        // the last coordinate down.
        let mut out: Vec<LatticeVector> = Vec::new();
        let mut coords = vec![0i64; n];
        let target_rat = BigRational::from(BigInt::from(target));
        enumerate_level(
            n,
            &diag,
            &lower,
            &target_rat,
            &BigRational::zero(),
            &mut coords,
            n,
            &mut |v| {
                let vec = LatticeVector(v.to_vec());
                if vec.is_zero() {
                    return;
                }
                let norm = self.vector_norm(&vec).expect("enumerated norms stay small");
                if norm == target {
                    let norm_vec = vec.sign_normalized();
                    if norm_vec.0 == v {
                        out.push(norm_vec);
                    }
                }
            },
        );
        out.sort_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// One vector of norm 2, if any. Absence is exhaustive.
    pub fn short_root(&self) -> Result<Option<LatticeVector>, LatticeError> {
        Ok(self.short_vectors(2)?.into_iter().next())
    }

    /// Exact rational `G = L D L^T`; requires positive definiteness.
    fn ldlt(&self) -> (Vec<BigRational>, Vec<Vec<BigRational>>) {
        let n = self.rank;
        let mut d = vec![BigRational::zero(); n];
        let mut l = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            l[i][i] = BigRational::one();
        }
        for i in 0..n {
            let mut di = BigRational::from(BigInt::from(self.entry(i, i)));
            for k in 0..i {
                di -= &d[k] * &l[i][k] * &l[i][k];
            }
            d[i] = di;
            for j in (i + 1)..n {
                let mut val = BigRational::from(BigInt::from(self.entry(j, i)));
                for k in 0..i {
                    val -= &d[k] * &l[j][k] * &l[i][k];
                }
                l[j][i] = val / &d[i];
            }
        }
        (d, l)
    }

    /// Basis and restricted Gram matrix of the saturated sublattice
    /// orthogonal to `v`, i.e. `{u : u^T G v = 0}`.
    ///
    /// The basis is the deterministic output of integer elimination on the
    /// linear form `G v` (pivot at the smallest-magnitude entry, ties to the
    /// smallest index), ordered by ascending non-pivot coordinate.
    pub fn orthogonal_complement(
        &self,
        v: &LatticeVector,
    ) -> Result<(Vec<LatticeVector>, GramMatrix), LatticeError> {
        self.check_rank(v)?;
        if v.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        let w = self.apply(v)?;
        let basis = kernel_of_form(&w)?;
        let k = basis.len();
        let mut rows = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in 0..k {
                rows[i][j] = self.inner(&basis[i], &basis[j])?;
            }
        }
        Ok((basis, GramMatrix::new(&rows)?))
    }

    /// Search for `T` with `T^T G1 T = G2` by matching, for each basis
    /// vector of `G2`, enumerated vectors of the same norm in `G1` and
    /// checking pairwise inner products. Exhaustive, so `None` is a proof.
    pub fn isometry_to(&self, other: &GramMatrix) -> Result<Option<IsometryWitness>, LatticeError> {
        const MAX_RANK: usize = 4;
        if self.rank != other.rank {
            return Err(LatticeError::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        if self.rank > MAX_RANK {
            return Err(LatticeError::RankTooLarge { max: MAX_RANK });
        }
        if !self.is_positive_definite() || !other.is_positive_definite() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        // Isometric lattices have equal determinants: a cheap complete reject.
        if self.determinant() != other.determinant() {
            return Ok(None);
        }
        let n = self.rank;
        // Candidate images of the j-th basis vector: every vector of G1 of
        // norm G2[j][j], both signs.
        let mut candidates: Vec<Vec<LatticeVector>> = Vec::with_capacity(n);
        for j in 0..n {
            let norm = other.entry(j, j);
            let reps = self.short_vectors(norm)?;
            let mut all = Vec::with_capacity(reps.len() * 2);
            for r in reps {
                all.push(r.negated());
                all.push(r);
            }
            all.sort();
            candidates.push(all);
        }
        let mut chosen: Vec<LatticeVector> = Vec::with_capacity(n);
        if self.isometry_search(other, &candidates, &mut chosen)? {
            let witness = IsometryWitness {
                columns: chosen.clone(),
            };
            debug_assert!(witness.certifies(self, other));
            return Ok(Some(witness));
        }
        Ok(None)
    }

    fn isometry_search(
        &self,
        other: &GramMatrix,
        candidates: &[Vec<LatticeVector>],
        chosen: &mut Vec<LatticeVector>,
    ) -> Result<bool, LatticeError> {
        let j = chosen.len();
        if j == other.rank {
            // Pairwise products already match; injectivity (det ±1) follows
            // from equal nonzero determinants, verified by the caller.
            return Ok(true);
        }
        'next: for cand in &candidates[j] {
            for (i, prev) in chosen.iter().enumerate() {
                if self.inner(prev, cand)? != other.entry(i, j) {
                    continue 'next;
                }
            }
            chosen.push(cand.clone());
            if self.isometry_search(other, candidates, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rank {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.rank {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// An integer change of basis certifying `T^T G1 T = G2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryWitness {
    /// Column `j` is the image in `G1`-coordinates of the `j`-th basis
    /// vector of `G2`.
    pub columns: Vec<LatticeVector>,
}

impl IsometryWitness {
    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn determinant(&self) -> BigInt {
        let n = self.rank();
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.columns[j].0[i])).collect())
            .collect();
        bareiss_determinant(m)
    }

    /// Re-verify the witness against the pair it claims to relate.
    pub fn certifies(&self, g1: &GramMatrix, g2: &GramMatrix) -> bool {
        if self.rank() != g1.rank() || g1.rank() != g2.rank() {
            return false;
        }
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                match g1.inner(&self.columns[i], &self.columns[j]) {
                    Ok(v) if v == g2.entry(i, j) => {}
                    _ => return false,
                }
            }
        }
        let det = self.determinant();
        det == BigInt::one() || det == -BigInt::one()
    }
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let pivot = ((k + 1)..n).find(|&r| !m[r][k].is_zero());
            match pivot {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Integer kernel of the linear form `w`, as a deterministic basis of
/// `{u : u·w = 0}` (a saturated sublattice of corank 1).
fn kernel_of_form(w: &[i64]) -> Result<Vec<LatticeVector>, LatticeError> {
    let n = w.len();
    let mut w: Vec<i128> = w.iter().map(|&c| c as i128).collect();
    // Columns of the accumulated unimodular transform.
    let mut cols: Vec<Vec<i128>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1 } else { 0 }).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&i| w[i] != 0).collect();
        if nonzero.is_empty() {
            return Err(LatticeError::ZeroVector);
        }
        if nonzero.len() == 1 {
            let pivot = nonzero[0];
            let mut basis = Vec::with_capacity(n - 1);
            for j in 0..n {
                if j == pivot {
                    continue;
                }
                let mut coords = Vec::with_capacity(n);
                for i in 0..n {
                    coords.push(i64::try_from(cols[j][i]).map_err(|_| LatticeError::Overflow)?);
                }
                basis.push(LatticeVector(coords));
            }
            return Ok(basis);
        }
        let pivot = *nonzero
            .iter()
            .min_by_key(|&&i| (w[i].unsigned_abs(), i))
            .expect("nonempty");
        for j in nonzero {
            if j == pivot {
                continue;
            }
            let q = w[j].div_euclid(w[pivot]);
            if q != 0 {
                w[j] -= q * w[pivot];
                for i in 0..n {
                    let delta = q.checked_mul(cols[pivot][i]).ok_or(LatticeError::Overflow)?;
                    cols[j][i] = cols[j][i].checked_sub(delta).ok_or(LatticeError::Overflow)?;
                }
            }
        }
    }
}

/// Largest integer `t >= 0` with `t^2 <= bound` for a nonnegative rational bound.
fn rational_isqrt_floor(bound: &BigRational) -> BigInt {
    if bound.is_negative() {
        return -BigInt::one(); // caller treats as "empty range"
    }
    let (num, den) = (bound.numer(), bound.denom());
    let mut t = (num / den).sqrt();
    while (&t + 1u32) * (&t + 1u32) * den <= *num {
        t += 1u32;
    }
    while &t * &t * den > *num {
        t -= 1u32;
    }
    t
}

/// Depth-first enumeration of all integer points with Q(x) <= target, where
/// Q is given by the LDL^T data. `level` counts remaining coordinates, so
/// coordinate `level-1` is being chosen; `partial` is the exact quadratic
/// contribution of the already-fixed coordinates `level..n`.
#[allow(clippy::too_many_arguments)]
fn enumerate_level(
    n: usize,
    diag: &[BigRational],
    lower: &[Vec<BigRational>],
    target: &BigRational,
    partial: &BigRational,
    coords: &mut [i64],
    level: usize,
    visit: &mut dyn FnMut(&[i64]),
) {
    if level == 0 {
        visit(coords);
        return;
    }
    let i = level - 1;
    // center c_i = sum_{j>i} L[j][i] x_j
    let mut center = BigRational::zero();
    for j in (i + 1)..n {
        center += &lower[j][i] * BigRational::from(BigInt::from(coords[j]));
    }
    let budget = target - partial;
    // d_i (x_i + c)^2 <= budget  <=>  (x_i + c)^2 <= budget / d_i
    let radius_sq = &budget / &diag[i];
    let (c_num, c_den) = (center.numer().clone(), center.denom().clone());
    // |x*den + num| <= t  with t = floor(sqrt(radius_sq * den^2))
    let scaled = &radius_sq * BigRational::from(&c_den * &c_den);
    let t = rational_isqrt_floor(&scaled);
    if t.is_negative() {
        return;
    }
    let lo = ceil_div(&(-&t - &c_num), &c_den);
    let hi = floor_div(&(&t - &c_num), &c_den);
    let mut x = lo.clone();
    while x <= hi {
        let xv = i64::try_from(&x).expect("coordinate bounds stay in i64");
        coords[i] = xv;
        let offset = BigRational::from(BigInt::from(xv)) + &center;
        let contribution = &diag[i] * &offset * &offset;
        let new_partial = partial + &contribution;
        enumerate_level(n, diag, lower, target, &new_partial, coords, i, visit);
        x += 1u32;
    }
    coords[i] = 0;
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_ceil(b)
}
