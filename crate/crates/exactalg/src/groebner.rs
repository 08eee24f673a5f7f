//! Buchberger's algorithm with Gebauer–Möller pair elimination and sugar selection.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{AlgError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{sub_mul_term, Polynomial, Ring, Term};

/// Resource caps for a Gröbner computation. Exceeding either yields `BudgetExhausted`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum sugar degree of a selected S-pair.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 200_000, max_degree: 64 }
    }
}

struct Elem<F: Field> {
    terms: Vec<Term<F>>,
    sugar: u32,
}

impl<F: Field> Elem<F> {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Statistics of a completed run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub max_sugar: u32,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`, sorted by increasing
/// leading monomial. Zero generators are ignored; the basis of the zero ideal is empty.
pub fn reduced_groebner<F: Field>(
    ring: &Arc<Ring<F>>,
    gens: &[Polynomial<F>],
    budget: Budget,
) -> Result<(Vec<Polynomial<F>>, GbStats)> {
    let order = ring.order;
    let field = &ring.field;
    let mut store: Vec<Elem<F>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut stats = GbStats::default();

    // Seed with inter-reduced generators, processed by increasing leading monomial.
    let mut input: Vec<Elem<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Elem { terms: monic(g.terms().to_vec(), field), sugar: g.total_degree().unwrap() })
        .collect();
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for e in input {
        let reducers: Vec<&Elem<F>> = active.iter().map(|&k| &store[k]).collect();
        let terms = full_reduce(e.terms, &reducers, order, field);
        if terms.is_empty() {
            continue;
        }
        let h = Elem { terms: monic(terms, field), sugar: e.sugar };
        if h.lm().is_one() {
            return Ok((vec![Polynomial::one(ring)], stats));
        }
        store.push(h);
        update(&store, &mut active, &mut pairs, store.len() - 1);
    }

    while !pairs.is_empty() {
        let k = select(&pairs, order);
        let pair = pairs.swap_remove(k);
        if pair.sugar > budget.max_degree {
            return Err(AlgError::BudgetExhausted(format!(
                "S-pair sugar degree {} exceeds cap {}",
                pair.sugar, budget.max_degree
            )));
        }
        stats.pairs_reduced += 1;
        if stats.pairs_reduced > budget.max_pairs {
            return Err(AlgError::BudgetExhausted(format!(
                "more than {} S-pairs reduced",
                budget.max_pairs
            )));
        }
        stats.max_sugar = stats.max_sugar.max(pair.sugar);
        let s = spoly(&store[pair.i], &store[pair.j], &pair.lcm, order, field);
        let reducers: Vec<&Elem<F>> = active.iter().map(|&k| &store[k]).collect();
        let terms = full_reduce(s, &reducers, order, field);
        if terms.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        let h = Elem { terms: monic(terms, field), sugar: pair.sugar };
        if h.lm().is_one() {
            return Ok((vec![Polynomial::one(ring)], stats));
        }
        store.push(h);
        update(&store, &mut active, &mut pairs, store.len() - 1);
    }

    // Inter-reduce the minimal basis.
    let mut minimal: Vec<usize> = active.clone();
    minimal.sort_by(|&a, &b| order.cmp(store[a].lm(), store[b].lm()));
    let mut out: Vec<Polynomial<F>> = Vec::with_capacity(minimal.len());
    for (pos, &k) in minimal.iter().enumerate() {
        let others: Vec<&Elem<F>> =
            minimal.iter().enumerate().filter(|&(q, _)| q != pos).map(|(_, &o)| &store[o]).collect();
        let lead = store[k].terms[0].clone();
        let tail = full_reduce(store[k].terms[1..].to_vec(), &others, order, field);
        let mut terms = Vec::with_capacity(tail.len() + 1);
        terms.push(lead);
        terms.extend(tail);
        out.push(Polynomial::from_sorted(ring, terms));
    }
    Ok((out, stats))
}

fn monic<F: Field>(mut terms: Vec<Term<F>>, field: &F) -> Vec<Term<F>> {
    if let Some((_, lc)) = terms.first() {
        if !field.is_one(lc) {
            let inv = field.inv(lc).expect("nonzero leading coefficient");
            for t in terms.iter_mut() {
                t.1 = field.mul(&t.1, &inv);
            }
        }
    }
    terms
}

fn select(pairs: &[Pair], order: MonomialOrder) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let better = match a.sugar.cmp(&b.sugar) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match order.cmp(&a.lcm, &b.lcm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (a.i, a.j) < (b.i, b.j),
            },
        };
        if better {
            best = k;
        }
    }
    best
}

fn spoly<F: Field>(
    f: &Elem<F>,
    g: &Elem<F>,
    lcm: &Monomial,
    order: MonomialOrder,
    field: &F,
) -> Vec<Term<F>> {
    // Both are monic: S = (lcm/lm f) f - (lcm/lm g) g; the leading terms cancel.
    let mf = f.lm().quotient_of(lcm);
    let mg = g.lm().quotient_of(lcm);
    let ft: Vec<Term<F>> = f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul_term(&ft, &field.one(), &mg, &g.terms[1..], order, field)
}

/// Fully reduces `p` modulo the monic `reducers`.
fn full_reduce<F: Field>(
    mut p: Vec<Term<F>>,
    reducers: &[&Elem<F>],
    order: MonomialOrder,
    field: &F,
) -> Vec<Term<F>> {
    let mut pos = 0;
    while pos < p.len() {
        let m = &p[pos].0;
        match reducers.iter().find(|r| r.lm().divides(m)) {
            Some(r) => {
                let q = r.lm().quotient_of(m);
                let c = p[pos].1.clone();
                let rest = sub_mul_term(&p[pos + 1..], &c, &q, &r.terms[1..], order, field);
                p.truncate(pos);
                p.extend(rest);
            }
            None => pos += 1,
        }
    }
    p
}

/// Reduces `f` modulo a reduced Gröbner basis (monic, as produced by `reduced_groebner`).
pub fn normal_form_terms<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
) -> Polynomial<F> {
    let ring = f.ring();
    let elems: Vec<Elem<F>> =
        basis.iter().map(|g| Elem { terms: g.terms().to_vec(), sugar: 0 }).collect();
    let refs: Vec<&Elem<F>> = elems.iter().collect();
    Polynomial::from_sorted(ring, full_reduce(f.terms().to_vec(), &refs, ring.order, &ring.field))
}

/// Gebauer–Möller update: adds element `h` to the active basis and prunes the pair set.
fn update<F: Field>(store: &[Elem<F>], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let hm = store[h].lm().clone();
    let hs = store[h].sugar;
    let hdeg = hm.degree();
    let new_pair = |g: usize| {
        let gm = store[g].lm();
        let lcm = hm.lcm(gm);
        let sugar =
            (hs + lcm.degree() - hdeg).max(store[g].sugar + lcm.degree() - gm.degree());
        Pair { i: g, j: h, lcm, sugar }
    };
    let mut cands: Vec<(Pair, bool)> = active
        .iter()
        .map(|&g| {
            let coprime = hm.gcd_is_one(store[g].lm());
            (new_pair(g), coprime)
        })
        .collect();

    // Chain criterion among new pairs: drop (h,g1) if some other new lcm divides it.
    let mut kept: Vec<(Pair, bool)> = Vec::new();
    while let Some((p, coprime)) = cands.pop() {
        let dominated = cands.iter().chain(kept.iter()).any(|(q, _)| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push((p, coprime));
        }
    }
    // Product criterion: coprime leading monomials reduce to zero.
    let fresh: Vec<Pair> = kept.into_iter().filter(|(_, c)| !c).map(|(p, _)| p).collect();

    // Old pairs made redundant by h.
    pairs.retain(|p| {
        if !hm.divides(&p.lcm) {
            return true;
        }
        let l1 = hm.lcm(store[p.i].lm());
        let l2 = hm.lcm(store[p.j].lm());
        l1 == p.lcm || l2 == p.lcm
    });
    pairs.extend(fresh);

    active.retain(|&g| !hm.divides(store[g].lm()));
    active.push(h);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn univariate_gcd() {
        let r = Ring::new(Rationals, &["x"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let one = Polynomial::one(&r);
        let (gb, _) =
            reduced_groebner(&r, &[x.mul(&x).sub(&one), x.sub(&one)], Budget::default()).unwrap();
        assert_eq!(gb, vec![x.sub(&one)]);
    }

    #[test]
    fn unit_ideal_detected() {
        let r = Ring::new(PrimeField::new(5).unwrap(), &["x", "y"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        let (gb, _) =
            reduced_groebner(&r, &[x.mul(&y).sub(&one), x.clone()], Budget::default()).unwrap();
        assert_eq!(gb, vec![one]);
    }

    #[test]
    fn budget_is_reported() {
        let r = Ring::new(PrimeField::new(7).unwrap(), &["x", "y", "z"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let one = Polynomial::one(&r);
        let gens = [x.mul(&y).sub(&one), x.mul(&x).sub(&y.mul(&z))];
        assert!(reduced_groebner(&r, &gens, Budget::default()).is_ok());
        let tight = Budget { max_pairs: 0, max_degree: 64 };
        assert!(matches!(reduced_groebner(&r, &gens, tight), Err(AlgError::BudgetExhausted(_))));
    }
}
