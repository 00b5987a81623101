//! Buchberger's algorithm, multivariate division, and reduced Gröbner bases.
//!
//! Plain Buchberger with the two classical pair-pruning criteria (coprime
//! leading monomials; the chain criterion) and normal degree-first pair
//! selection. The ideals in this workbench are tiny — at most eleven
//! variables, generators of degree at most three — so no F4/F5 machinery is
//! warranted. The returned basis is fully interreduced and monic, hence
//! canonical for the monomial order regardless of the selection strategy.

use alloc::vec::Vec;

use crate::poly::{Ideal, Monomial, MonomialOrder, Poly, PolyError, RingSpec};
use crate::rng::SplitMix64;

/// A reduced Gröbner basis, tagged with the order that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: RingSpec,
    pub order: MonomialOrder,
    pub polys: Vec<Poly>,
}

/// Pair selection strategy. `Normal` picks the pending pair with the
/// smallest lcm degree (deterministic tie-breaks); `Shuffled` permutes
/// choices with a seeded generator and exists so tests can show verdicts do
/// not depend on selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Normal,
    Shuffled { seed: u64 },
}

impl GroebnerBasis {
    pub fn contains_one(&self) -> bool {
        self.polys
            .iter()
            .any(|p| p.leading().map(|(m, _)| m.is_one()).unwrap_or(false))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .filter_map(|p| p.leading().map(|(m, _)| m.clone()))
            .collect()
    }
}

/// Remainder of `f` under multivariate division by `divisors`.
///
/// Every reduction step cancels the leading reducible term against the first
/// divisor (in list order) whose leading monomial divides it, so the result
/// is deterministic; against a Gröbner basis it is the canonical normal form.
pub fn normal_form(f: &Poly, divisors: &[Poly]) -> Poly {
    let ring = f.ring;
    let field = ring.field();
    let mut remainder = Poly::zero(ring);
    let mut work = f.clone();
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c)) {
        for g in divisors {
            let (gm, gc) = match g.leading() {
                Some(t) => t,
                None => continue,
            };
            if gm.divides(&lm) {
                let q_mono = gm.quotient_into(&lm);
                let q_coeff = field.mul(lc, field.inv(gc).expect("leading coeff nonzero"));
                work = work
                    .sub(&g.mul_term(&q_mono, q_coeff))
                    .expect("same ring");
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        let head = Poly {
            ring,
            terms: alloc::vec![(lm, lc)],
        };
        remainder = remainder.add(&head).expect("same ring");
        work = work.sub(&head).expect("same ring");
    }
    remainder
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let field = f.ring.field();
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm);
    let f_part = f.mul_term(&fm.quotient_into(&lcm), field.inv(fc).expect("nonzero"));
    let g_part = g.mul_term(&gm.quotient_into(&lcm), field.inv(gc).expect("nonzero"));
    f_part.sub(&g_part).expect("same ring")
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn groebner(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    groebner_with_selection(ideal, order, Selection::Normal)
}

pub fn groebner_with_selection(
    ideal: &Ideal,
    order: MonomialOrder,
    selection: Selection,
) -> Result<GroebnerBasis, PolyError> {
    let ring = ideal.ring.with_order(order);
    let mut basis: Vec<Poly> = Vec::new();
    for g in &ideal.gens {
        let g = g.with_order(order);
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    let mut rng = match selection {
        Selection::Normal => None,
        Selection::Shuffled { seed } => Some(SplitMix64::new(seed)),
    };

    let mut pairs: Vec<Pair> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push(make_pair(&basis, i, j));
        }
    }
    let mut processed: Vec<(usize, usize)> = Vec::new();

    while !pairs.is_empty() {
        let idx = match rng.as_mut() {
            None => {
                let mut best = 0;
                for k in 1..pairs.len() {
                    let (a, b) = (&pairs[k], &pairs[best]);
                    if (a.degree, a.i, a.j) < (b.degree, b.i, b.j) {
                        best = k;
                    }
                }
                best
            }
            Some(rng) => rng.below(pairs.len() as u64) as usize,
        };
        let pair = pairs.swap_remove(idx);
        processed.push((pair.i, pair.j));

        // Buchberger's first criterion: coprime leading monomials.
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (mi, _) = fi.leading().expect("basis polys nonzero");
        let (mj, _) = fj.leading().expect("basis polys nonzero");
        if mi.coprime_with(mj) {
            continue;
        }
        // Chain criterion: some k with LM(k) | lcm(i,j) and both flanking
        // pairs already handled.
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == pair.i || k == pair.j {
                continue;
            }
            let (mk, _) = g.leading().expect("nonzero");
            if mk.divides(&pair.lcm)
                && done(&processed, &pairs, pair.i, k)
                && done(&processed, &pairs, pair.j, k)
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        let s = s_poly(fi, fj);
        let reduced = normal_form(&s, &basis);
        if !reduced.is_zero() {
            let new_index = basis.len();
            basis.push(reduced.monic());
            for i in 0..new_index {
                pairs.push(make_pair(&basis, i, new_index));
            }
        }
    }

    Ok(GroebnerBasis {
        ring,
        order,
        polys: interreduce(basis),
    })
}

fn make_pair(basis: &[Poly], i: usize, j: usize) -> Pair {
    let (mi, _) = basis[i].leading().expect("nonzero");
    let (mj, _) = basis[j].leading().expect("nonzero");
    let lcm = mi.lcm(mj);
    Pair {
        i,
        j,
        degree: lcm.total_degree(),
        lcm,
    }
}

/// Has the pair `{a, b}` been processed (it is neither pending nor unseen)?
fn done(processed: &[(usize, usize)], pending: &[Pair], a: usize, b: usize) -> bool {
    let key = (a.min(b), a.max(b));
    processed.iter().any(|&p| p == key)
        && !pending.iter().any(|p| (p.i.min(p.j), p.i.max(p.j)) == key)
}

/// Minimalize and tail-reduce: the canonical reduced basis.
fn interreduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    // drop members whose leading monomial another member's divides
    let mut keep: Vec<Poly> = Vec::new();
    basis.retain(|p| !p.is_zero());
    for i in 0..basis.len() {
        let (mi, _) = basis[i].leading().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if i == j {
                return false;
            }
            let (mj, _) = g.leading().expect("nonzero");
            mj.divides(mi) && (mj != mi || j < i)
        });
        if !redundant {
            keep.push(basis[i].clone());
        }
    }
    // tail-reduce each against the others until stable
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Poly> = keep
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = normal_form(&keep[i], &others).monic();
            if reduced != keep[i] {
                keep[i] = reduced;
                changed = true;
            }
        }
        keep.retain(|p| !p.is_zero());
        if !changed {
            break;
        }
    }
    let order = keep
        .first()
        .map(|p| p.ring.order)
        .unwrap_or(MonomialOrder::Grevlex);
    keep.sort_by(|a, b| {
        let (ma, _) = a.leading().expect("nonzero");
        let (mb, _) = b.leading().expect("nonzero");
        order.cmp(ma, mb)
    });
    keep
}

/// Is `f` in the ideal with the given (Gröbner) basis?
pub fn ideal_member(f: &Poly, basis: &GroebnerBasis) -> bool {
    normal_form(&f.with_order(basis.order), &basis.polys).is_zero()
}

/// Do the two ideals have identical Gröbner bases / mutual membership?
pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool, PolyError> {
    if a.ring.prime != b.ring.prime || a.ring.nvars != b.ring.nvars {
        return Err(PolyError::RingMismatch);
    }
    let ga = groebner(a, MonomialOrder::Grevlex)?;
    let gb = groebner(b, MonomialOrder::Grevlex)?;
    Ok(a.gens.iter().all(|f| ideal_member(f, &gb)) && b.gens.iter().all(|f| ideal_member(f, &ga)))
}

/// Buchberger's postcondition, re-checked from scratch: every S-polynomial
/// of the basis reduces to zero. Used by the verification suites.
pub fn spolys_reduce_to_zero(basis: &GroebnerBasis) -> bool {
    for i in 0..basis.polys.len() {
        for j in (i + 1)..basis.polys.len() {
            let s = s_poly(&basis.polys[i], &basis.polys[j]);
            if !normal_form(&s, &basis.polys).is_zero() {
                return false;
            }
        }
    }
    true
}
