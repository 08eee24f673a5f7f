//! Polynomial rings and sparse polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial ring: coefficient field, ordered variable names and a monomial order.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring<F: Field> {
    pub field: F,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, vars: &[&str], order: MonomialOrder) -> Arc<Self> {
        Arc::new(Ring { field, vars: vars.iter().map(|s| s.to_string()).collect(), order })
    }

    pub fn from_names(field: F, vars: Vec<String>, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Ring { field, vars, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgError::UnknownVariable(name.to_string()))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Ring { field: self.field.clone(), vars: self.vars.clone(), order })
    }
}

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// Sparse polynomial; terms are kept sorted strictly descending in the ring order, with no
/// zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.ring == *other.ring
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn from_int(ring: &Arc<Ring<F>>, n: i64) -> Self {
        Self::constant(ring, ring.field.from_i64(n))
    }

    pub fn var(ring: &Arc<Ring<F>>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i, 1), ring.field.one())],
        }
    }

    pub fn var_named(ring: &Arc<Ring<F>>, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Arc<Ring<F>>, m: Monomial, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring<F>>, mut terms: Vec<Term<F>>) -> Self {
        let order = ring.order;
        let field = &ring.field;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wraps terms that are already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<Ring<F>>, terms: Vec<Term<F>>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Homogeneous for the grading with the given positive variable weights.
    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.weighted_degree(weights);
                self.terms.iter().all(|(m, _)| m.weighted_degree(weights) == d)
            }
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &Self) {
        debug_assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring,
            "polynomials from different rings"
        );
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let field = &self.ring.field;
        Polynomial::from_sorted(
            &self.ring,
            merge(&self.terms, &other.terms, self.ring.order, |c| c.clone(), field),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ring(other);
        let field = &self.ring.field;
        Polynomial::from_sorted(
            &self.ring,
            merge(&self.terms, &other.terms, self.ring.order, |c| field.neg(c), field),
        )
    }

    pub fn neg(&self) -> Self {
        let field = &self.ring.field;
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        )
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        )
    }

    /// Multiplication by the term `c * m`; order is preserved since orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(a, b)| (a.mul(m), field.mul(b, c))).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) =
            if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let field = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                let k = e[i];
                e[i] -= 1;
                (Monomial::from_exps(&e), field.mul(c, &field.from_i64(k as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let field = &self.ring.field;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitutes polynomials (in `target` ring) for every variable of `self`'s ring.
    pub fn substitute(&self, target: &Arc<Ring<F>>, images: &[Polynomial<F>]) -> Polynomial<F> {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = Polynomial::zero(target);
        let mut power_cache: Vec<Vec<Polynomial<F>>> =
            images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&cache[1]);
                    cache.push(next);
                }
                t = t.mul(&cache[e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Moves the polynomial into a ring over the same field whose variables are a superset
    /// (matched by name) of the variables actually used.
    pub fn to_ring(&self, target: &Arc<Ring<F>>) -> Result<Polynomial<F>> {
        let map: Vec<Option<usize>> =
            self.ring.vars.iter().map(|v| target.vars.iter().position(|w| w == v)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u16; target.nvars()];
            for (i, &k) in m.exps().iter().enumerate() {
                if k > 0 {
                    let j = map[i].ok_or_else(|| {
                        AlgError::RingMismatch(format!(
                            "variable `{}` missing from target ring",
                            self.ring.vars[i]
                        ))
                    })?;
                    e[j] = k;
                }
            }
            terms.push((Monomial::from_exps(&e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Sets variable `i` to the constant `value`.
    pub fn specialize(&self, i: usize, value: &F::Elem) -> Polynomial<F> {
        let field = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                let k = e[i];
                e[i] = 0;
                (Monomial::from_exps(&e), field.mul(c, &field.pow(value, k as u64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact division by a polynomial; `None` if not divisible.
    pub fn exact_div(&self, d: &Polynomial<F>) -> Option<Polynomial<F>> {
        let field = &self.ring.field;
        let (dm, dc) = d.lead()?;
        let dinv = field.inv(dc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.lead().cloned() {
            if !dm.divides(&m) {
                return None;
            }
            let qm = dm.quotient_of(&m);
            let qc = field.mul(&c, &dinv);
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }
}

/// Merges two sorted term lists, applying `g` to coefficients of the second list.
fn merge<F: Field>(
    a: &[Term<F>],
    b: &[Term<F>],
    order: MonomialOrder,
    g: impl Fn(&F::Elem) -> F::Elem,
    field: &F,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), g(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].1, &g(&b[j].1));
                if !field.is_zero(&c) {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), g(c))));
    out
}

/// `f - c * m * g` on raw term lists.
pub(crate) fn sub_mul_term<F: Field>(
    f: &[Term<F>],
    c: &F::Elem,
    m: &Monomial,
    g: &[Term<F>],
    order: MonomialOrder,
    field: &F,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let next_g = |j: usize| (g[j].0.mul(m), field.neg(&field.mul(&g[j].1, c)));
    let mut pending = if g.is_empty() { None } else { Some(next_g(0)) };
    while i < f.len() {
        let Some((gm, gc)) = pending.take() else { break };
        match order.cmp(&f[i].0, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
                pending = Some((gm, gc));
            }
            Ordering::Less => {
                out.push((gm, gc));
                j += 1;
                pending = if j < g.len() { Some(next_g(j)) } else { None };
            }
            Ordering::Equal => {
                let s = field.add(&f[i].1, &gc);
                if !field.is_zero(&s) {
                    out.push((gm, s));
                }
                i += 1;
                j += 1;
                pending = if j < g.len() { Some(next_g(j)) } else { None };
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    if let Some(t) = pending {
        out.push(t);
        j += 1;
        while j < g.len() {
            out.push(next_g(j));
            j += 1;
        }
    }
    out
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let cs = field.format(c);
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.ring.vars[i].clone()
                    } else {
                        format!("{}^{}", self.ring.vars[i], e)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", body, mono.join("*"))?;
            }
        }
        Ok(())
    }
}
