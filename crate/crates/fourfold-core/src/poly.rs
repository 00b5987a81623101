//! Sparse multivariate polynomials over small prime fields.
//!
//! A [`Poly`] is a canonical term list: strictly descending under the ring's
//! monomial order, no zero coefficients, coefficients reduced to `0..p`.
//! Rings are lightweight value descriptors (prime, variable count, order);
//! variable *names* are an IO concern and live in the CLI crate.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::field::{FieldElem, PrimeField};

/// Monomial order tag. `Elim` orders the masked block strictly above the
/// rest, graded reverse lexicographic inside each block; it is the block
/// order used for elimination and ring-map kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Elim { mask: u64 },
}

/// Ambient ring descriptor: coefficients mod `prime`, `nvars` variables,
/// terms compared by `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub prime: u32,
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl RingSpec {
    pub fn grevlex(prime: u32, nvars: usize) -> Self {
        RingSpec {
            prime,
            nvars,
            order: MonomialOrder::Grevlex,
        }
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime).expect("ring primes are validated at construction")
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        RingSpec { order, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    RingMismatch,
    WrongVariableCount { expected: usize, got: usize },
    NotHomogeneous,
    ZeroPolynomial,
    BadMatrixShape,
    MinorsTooLarge { k: usize, rows: usize, cols: usize },
    NoGeneratorOfLowDegree { requested: i64 },
    EmptyRing,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::RingMismatch => write!(f, "polynomials live in different rings"),
            PolyError::WrongVariableCount { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            PolyError::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            PolyError::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            PolyError::BadMatrixShape => write!(f, "matrix rows have unequal lengths"),
            PolyError::MinorsTooLarge { k, rows, cols } => {
                write!(f, "{k}x{k} minors of a {rows}x{cols} matrix do not exist")
            }
            PolyError::NoGeneratorOfLowDegree { requested } => {
                write!(f, "no generator of degree at most {requested}")
            }
            PolyError::EmptyRing => write!(f, "ring with zero variables"),
        }
    }
}

/// Exponent vector over the ambient variable set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Support avoids the masked variables?
    pub fn supported_outside_mask(&self, mask: u64) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || mask & (1 << i) == 0)
    }
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        non_eq => return non_eq,
    }
    // ties: the last variable where they differ decides, smaller exponent wins
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_cmp(&a.exps, &b.exps),
            MonomialOrder::Elim { mask } => {
                let pick = |m: &Monomial, inside: bool| -> Vec<u16> {
                    m.exps
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| (mask & (1 << i) != 0) == inside)
                        .map(|(_, &e)| e)
                        .collect()
                };
                grevlex_cmp(&pick(a, true), &pick(b, true))
                    .then_with(|| grevlex_cmp(&pick(a, false), &pick(b, false)))
            }
        }
    }
}

/// A sparse polynomial in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub ring: RingSpec,
    /// Descending under `ring.order`; coefficients in `1..prime`.
    pub terms: Vec<(Monomial, u32)>,
}

impl Poly {
    pub fn zero(ring: RingSpec) -> Self {
        Poly {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: RingSpec, c: i64) -> Self {
        let c = ring.field().reduce_i64(c);
        if c == 0 {
            return Self::zero(ring);
        }
        Poly {
            ring,
            terms: vec![(Monomial::one(ring.nvars), c)],
        }
    }

    pub fn variable(ring: RingSpec, index: usize) -> Self {
        Poly {
            ring,
            terms: vec![(Monomial::var(ring.nvars, index), 1)],
        }
    }

    pub fn term(ring: RingSpec, coeff: i64, mono: Monomial) -> Self {
        Self::from_terms(ring, vec![(mono, ring.field().reduce_i64(coeff))])
    }

    /// Normalize an arbitrary term list: sort, merge, drop zeros.
    pub fn from_terms(ring: RingSpec, mut terms: Vec<(Monomial, u32)>) -> Self {
        let field = ring.field();
        terms.sort_by(|(a, _), (b, _)| ring.order.cmp(b, a));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % ring.prime;
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = field.add(last.1, c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|&(_, c)| c != 0);
        Poly { ring, terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, u32)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merged(other, false))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merged(other, true))
    }

    fn merged(&self, other: &Poly, negate_other: bool) -> Poly {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            let cb = if negate_other { field.neg(*cb) } else { *cb };
            match self.ring.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(*ca, cb);
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &other.terms[j..] {
            let c = if negate_other { field.neg(*c) } else { *c };
            out.push((m.clone(), c));
        }
        Poly {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn neg(&self) -> Poly {
        let field = self.ring.field();
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(*c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Poly {
        let field = self.ring.field();
        let c = field.reduce_i64(c);
        if c == 0 {
            return Poly::zero(self.ring);
        }
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(*k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term `coeff · mono`.
    pub fn mul_term(&self, mono: &Monomial, coeff: u32) -> Poly {
        let field = self.ring.field();
        let coeff = coeff % self.ring.prime;
        if coeff == 0 {
            return Poly::zero(self.ring);
        }
        // multiplying by a fixed monomial preserves the term order
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), field.mul(*c, coeff)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut acc = Poly::zero(self.ring);
        for (m, c) in &other.terms {
            acc = acc.merged(&self.mul_term(m, *c), false);
        }
        Ok(acc)
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c).expect("leading coefficient nonzero");
                self.scale(inv as i64)
            }
        }
    }

    /// Evaluate at a point, coordinates as residues mod p.
    pub fn evaluate(&self, point: &[u32]) -> Result<FieldElem, PolyError> {
        if point.len() != self.ring.nvars {
            return Err(PolyError::WrongVariableCount {
                expected: self.ring.nvars,
                got: point.len(),
            });
        }
        let field = self.ring.field();
        let mut acc = 0u32;
        for (m, c) in &self.terms {
            let mut term = *c;
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    term = field.mul(term, field.pow(point[i], e as u64));
                }
            }
            acc = field.add(acc, term);
        }
        Ok(field.elem(acc as i64))
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Poly {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps[index];
            if e == 0 {
                continue;
            }
            let c = field.mul(*c, (e as u32) % self.ring.prime);
            if c == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[index] = e - 1;
            terms.push((Monomial { exps }, c));
        }
        Poly::from_terms(self.ring, terms)
    }

    /// Re-sort the term list under a different order on the same variables.
    pub fn with_order(&self, order: MonomialOrder) -> Poly {
        let ring = self.ring.with_order(order);
        Poly::from_terms(ring, self.terms.clone())
    }

    /// Transport into `target` (same prime), sending variable `i` of this
    /// ring to variable `var_map[i]` of the target.
    pub fn inject(&self, target: RingSpec, var_map: &[usize]) -> Poly {
        debug_assert_eq!(var_map.len(), self.ring.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; target.nvars];
                for (i, &e) in m.exps.iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial { exps }, *c)
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Does every term avoid the masked variables?
    pub fn supported_outside_mask(&self, mask: u64) -> bool {
        self.terms.iter().all(|(m, _)| m.supported_outside_mask(mask))
    }
}

/// A generator list in one ring. Zero generators are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub ring: RingSpec,
    pub gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: RingSpec, gens: Vec<Poly>) -> Result<Self, PolyError> {
        for g in &gens {
            if g.ring != ring {
                return Err(PolyError::RingMismatch);
            }
        }
        Ok(Ideal {
            ring,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: RingSpec) -> Self {
        Ideal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Concatenate generator lists (the ideal sum).
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring, gens)
    }
}
