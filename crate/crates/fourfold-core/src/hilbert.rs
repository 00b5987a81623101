//! Hilbert series of monomial quotients: dimension and degree data.
//!
//! For a monomial ideal `M ⊂ k[x_1..x_n]` the Hilbert series of `R/M` is
//! `N(t)/(1-t)^n` with a polynomial numerator `N` computed by the classical
//! pivot recursion `N(M) = N(M + (x)) + t·N(M : x)`. Writing
//! `N(t) = (1-t)^(n-D) Q(t)` with `Q(1) != 0` gives the affine Krull
//! dimension `D` of the quotient and its multiplicity `Q(1)`, which for a
//! projective scheme of dimension `D - 1 >= 0` is exactly its degree — and,
//! because it comes from the Hilbert *polynomial*, it is insensitive to
//! whether the input ideal was saturated.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::Monomial;

/// Dimension/degree summary of `Proj(R/M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertData {
    /// Projective dimension; `-1` for the empty scheme.
    pub dimension: i64,
    /// Degree (multiplicity). For the empty scheme this is the affine
    /// length of the quotient.
    pub degree: i64,
    /// Affine Krull dimension of the quotient ring.
    pub affine_dimension: usize,
}

/// Drop generators divisible by another generator.
fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    'outer: for (i, m) in gens.iter().enumerate() {
        for (j, other) in gens.iter().enumerate() {
            if i == j {
                continue;
            }
            if other.divides(m) && (other.exps != m.exps || j < i) {
                continue 'outer;
            }
        }
        out.push(m.clone());
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// Numerator of the Hilbert series of `R/(gens)` over `(1-t)^n`.
fn numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // Base case: pairwise coprime generators (in particular pure powers):
    // N = prod (1 - t^deg).
    let pairwise_coprime = (0..gens.len()).all(|i| {
        ((i + 1)..gens.len()).all(|j| gens[i].coprime_with(&gens[j]))
    });
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let d = m.total_degree() as usize;
            // acc *= (1 - t^d)
            let mut next = vec![0i64; acc.len() + d];
            for (i, &c) in acc.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            while next.last() == Some(&0) {
                next.pop();
            }
            acc = next;
        }
        return acc;
    }
    // Pivot: the most frequently occurring variable among non-pure-power
    // generators, ties to the smallest index.
    let nvars = gens[0].exps.len();
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (i, &e) in m.exps.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| (counts[i], usize::MAX - i)).expect("nonempty");

    // M + (x_pivot): kill generators with positive pivot exponent, add x_pivot.
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exps[pivot] == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(nvars, pivot));
    // M : x_pivot: reduce pivot exponents by one.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut exps = m.exps.clone();
            if exps[pivot] > 0 {
                exps[pivot] -= 1;
            }
            Monomial { exps }
        })
        .collect();

    let n_plus = numerator(&plus);
    let n_colon = numerator(&colon);
    let mut acc = n_plus;
    poly_add_shifted(&mut acc, &n_colon, 1);
    while acc.last() == Some(&0) {
        acc.pop();
    }
    acc
}

fn eval_at_one(p: &[i64]) -> i64 {
    p.iter().sum()
}

/// Divide by `(1 - t)` exactly (caller guarantees `p(1) == 0`).
fn divide_by_one_minus_t(p: &[i64]) -> Vec<i64> {
    // p(t) = (1-t) q(t): q_0 = p_0, q_i = p_i + q_{i-1}
    let mut q = vec![0i64; p.len().saturating_sub(1)];
    let mut carry = 0i64;
    for i in 0..q.len() {
        carry += p[i];
        q[i] = carry;
    }
    debug_assert_eq!(carry + p.last().copied().unwrap_or(0), 0);
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

/// Full Hilbert data of `Proj` of the quotient by a monomial ideal in
/// `nvars` variables.
pub fn hilbert_data(gens: &[Monomial], nvars: usize) -> HilbertData {
    let mut num = numerator(gens);
    if num.is_empty() {
        num = vec![0];
    }
    if eval_at_one(&num) == 0 && num.iter().all(|&c| c == 0) {
        // quotient is zero (ideal contains 1): empty, length 0
        return HilbertData {
            dimension: -1,
            degree: 0,
            affine_dimension: 0,
        };
    }
    let mut cancelled = 0usize;
    while eval_at_one(&num) == 0 {
        num = divide_by_one_minus_t(&num);
        cancelled += 1;
    }
    let affine_dimension = nvars - cancelled;
    let degree = eval_at_one(&num);
    HilbertData {
        dimension: affine_dimension as i64 - 1,
        degree,
        affine_dimension,
    }
}

/// Affine Krull dimension by maximal independent variable sets: the largest
/// `S` such that no generator is supported inside `S`. Exponential in the
/// variable count, which stays at most eleven here; kept as an independent
/// route to the same number the series computes.
pub fn dimension_by_independent_sets(gens: &[Monomial], nvars: usize) -> usize {
    let gens = minimalize(gens);
    if gens.iter().any(|m| m.is_one()) {
        return 0;
    }
    let mut best = 0usize;
    for mask in 0u64..(1 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = gens.iter().all(|m| {
            m.exps
                .iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
        });
        if independent {
            best = size;
        }
    }
    best
}

/// Values of the Hilbert polynomial of `R/M` for `d = from..=to`, read off
/// the series numerator: `HP(d) = sum_i num_i * C(d - i + n - 1, n - 1)`.
pub fn hilbert_polynomial_values(gens: &[Monomial], nvars: usize, from: i64, to: i64) -> Vec<i64> {
    let num = numerator(gens);
    let mut out = Vec::new();
    for d in from..=to {
        let mut acc = 0i64;
        for (i, &c) in num.iter().enumerate() {
            acc += c * binomial_poly(d - i as i64 + nvars as i64 - 1, nvars as i64 - 1);
        }
        out.push(acc);
    }
    out
}

/// `C(a, k)` as the polynomial `a(a-1)...(a-k+1)/k!` in `a` (so defined for
/// negative `a` as well), with `k >= 0`.
fn binomial_poly(a: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..k {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}
