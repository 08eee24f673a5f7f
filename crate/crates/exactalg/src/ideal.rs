//! Ideals with cached reduced Gröbner bases and the decision procedures built on them.

use std::sync::{Arc, OnceLock};

use crate::error::{AlgError, Result};
use crate::field::Field;
use crate::groebner::{normal_form_terms, reduced_groebner, Budget, GbStats};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// A nonempty list of nonzero generators in one ring, with a lazily computed reduced basis.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
    budget: Budget,
    basis: OnceLock<(Vec<Polynomial<F>>, GbStats)>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ideal").field("vars", &self.ring.vars).field("gens", &self.gens).finish()
    }
}

/// Outcome of a flatness test: on failure, `witness` satisfies `u * witness ∈ I`, `witness ∉ I`.
#[derive(Debug, Clone)]
pub struct Flatness<F: Field> {
    pub flat: bool,
    pub witness: Option<Polynomial<F>>,
}

fn fresh_name<F: Field>(ring: &Ring<F>, base: &str) -> String {
    let mut name = base.to_string();
    while ring.vars.contains(&name) {
        name.push('_');
    }
    name
}

impl<F: Field> Ideal<F> {
    /// Rejects empty generator lists, zero generators and mixed rings.
    pub fn new(gens: Vec<Polynomial<F>>) -> Result<Self> {
        let first = gens.first().ok_or(AlgError::EmptyIdeal)?;
        let ring = first.ring().clone();
        for g in &gens {
            if g.is_zero() {
                return Err(AlgError::ZeroGenerator);
            }
            if !g.same_ring(first) {
                return Err(AlgError::RingMismatch("generators live in different rings".into()));
            }
        }
        Ok(Ideal { ring, gens, budget: Budget::default(), basis: OnceLock::new() })
    }

    /// Like `new`, but silently drops zero generators; `None` if nothing is left.
    pub fn from_nonzero(ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Option<Self> {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return None;
        }
        Some(Ideal { ring: ring.clone(), gens, budget: Budget::default(), basis: OnceLock::new() })
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    fn derived(&self, ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Option<Self> {
        Self::from_nonzero(ring, gens).map(|i| i.with_budget(self.budget))
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn var(&self, name: &str) -> Result<Polynomial<F>> {
        Polynomial::var_named(&self.ring, name)
    }

    /// The reduced Gröbner basis (monic, sorted by increasing leading monomial).
    pub fn groebner_basis(&self) -> Result<&[Polynomial<F>]> {
        if let Some((b, _)) = self.basis.get() {
            return Ok(b);
        }
        let computed = reduced_groebner(&self.ring, &self.gens, self.budget)?;
        Ok(&self.basis.get_or_init(|| computed).0)
    }

    pub fn stats(&self) -> Option<GbStats> {
        self.basis.get().map(|(_, s)| *s)
    }

    fn check_ring(&self, f: &Polynomial<F>) -> Result<()> {
        if Arc::ptr_eq(f.ring(), &self.ring) || **f.ring() == *self.ring {
            Ok(())
        } else {
            Err(AlgError::RingMismatch(format!(
                "polynomial over {:?}, ideal over {:?}",
                f.ring().vars,
                self.ring.vars
            )))
        }
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check_ring(f)?;
        Ok(normal_form_terms(f, self.groebner_basis()?))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_constant()))
    }

    /// Ideal equality via reduced bases (orders must agree).
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        if *self.ring != *other.ring {
            return Err(AlgError::RingMismatch("cannot compare ideals of different rings".into()));
        }
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.groebner_basis()?.iter().map(|g| g.lead_monomial().unwrap().clone()).collect())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn add_generators(&self, extra: Vec<Polynomial<F>>) -> Result<Ideal<F>> {
        for g in &extra {
            self.check_ring(g)?;
        }
        let mut gens = self.gens.clone();
        gens.extend(extra.into_iter().filter(|g| !g.is_zero()));
        Ok(Ideal::new(gens)?.with_budget(self.budget))
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.add_generators(other.gens.clone())
    }

    /// The same ideal in the same variables under another monomial order.
    pub fn reorder(&self, order: MonomialOrder) -> Ideal<F> {
        let ring = self.ring.with_order(order);
        let gens = self.gens.iter().map(|g| g.to_ring(&ring).expect("same variables")).collect();
        Ideal { ring, gens, budget: self.budget, basis: OnceLock::new() }
    }

    /// Moves the ideal into a ring with the given variables (a superset of the used ones).
    pub fn to_ring(&self, ring: &Arc<Ring<F>>) -> Result<Ideal<F>> {
        let gens = self.gens.iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(gens)?.with_budget(self.budget))
    }

    /// Substitutes a constant for a variable and drops that variable from the ring.
    /// Returns `None` when every generator vanishes.
    pub fn specialize(&self, name: &str, value: &F::Elem) -> Result<Option<Ideal<F>>> {
        let i = self.ring.var_index(name)?;
        let vars: Vec<String> =
            self.ring.vars.iter().filter(|v| v.as_str() != name).cloned().collect();
        let ring = Ring::from_names(self.ring.field.clone(), vars, self.ring.order);
        let gens = self
            .gens
            .iter()
            .map(|g| g.specialize(i, value).to_ring(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.derived(&ring, gens))
    }

    /// Eliminates the named variables; the result lives in the ring of the remaining
    /// variables (original relative order and monomial order). `None` is the zero ideal.
    pub fn eliminate(&self, names: &[&str]) -> Result<Option<Ideal<F>>> {
        let mut elim: Vec<String> = Vec::new();
        for n in names {
            self.ring.var_index(n)?;
            if !elim.iter().any(|e| e == n) {
                elim.push(n.to_string());
            }
        }
        if elim.len() >= self.ring.nvars() {
            return Err(AlgError::Invalid("cannot eliminate every variable".into()));
        }
        let rest: Vec<String> =
            self.ring.vars.iter().filter(|v| !elim.contains(v)).cloned().collect();
        let k = elim.len();
        let mut all = elim.clone();
        all.extend(rest.iter().cloned());
        let big = Ring::from_names(self.ring.field.clone(), all, MonomialOrder::Block { elim: k });
        let lifted = self.to_ring(&big)?;
        let small = Ring::from_names(self.ring.field.clone(), rest, self.ring.order);
        let mut kept = Vec::new();
        for g in lifted.groebner_basis()? {
            if (0..k).all(|i| !g.uses_var(i)) {
                kept.push(g.to_ring(&small)?);
            }
        }
        Ok(self.derived(&small, kept))
    }

    /// Adjoins a fresh variable in front and returns (extended ring, the new variable).
    fn extend_front(&self, base: &str) -> (Arc<Ring<F>>, String) {
        let t = fresh_name(&self.ring, base);
        let mut vars = vec![t.clone()];
        vars.extend(self.ring.vars.iter().cloned());
        (Ring::from_names(self.ring.field.clone(), vars, MonomialOrder::Block { elim: 1 }), t)
    }

    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        if *self.ring != *other.ring {
            return Err(AlgError::RingMismatch("intersection of ideals in different rings".into()));
        }
        let (big, t) = self.extend_front("_t");
        let tv = Polynomial::var(&big, 0);
        let one_minus_t = Polynomial::one(&big).sub(&tv);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(tv.mul(&g.to_ring(&big)?));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.to_ring(&big)?));
        }
        let joint = Ideal::new(gens)?.with_budget(self.budget);
        let out = joint
            .eliminate(&[&t])?
            .ok_or_else(|| AlgError::Invalid("intersection of nonzero ideals is nonzero".into()))?;
        out.to_ring(&self.ring)
    }

    /// (I : f) = {g : g f ∈ I}, via I ∩ (f) divided by f.
    pub fn quotient(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(AlgError::ZeroGenerator);
        }
        let principal = Ideal::new(vec![f.clone()])?.with_budget(self.budget);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::new();
        for g in meet.groebner_basis()? {
            gens.push(g.exact_div(f).ok_or_else(|| {
                AlgError::Invalid("element of I ∩ (f) not divisible by f".into())
            })?);
        }
        Ok(Ideal::new(gens)?.with_budget(self.budget))
    }

    /// (I : f^∞) via elimination of w from I + (1 - w f).
    pub fn saturate(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(AlgError::ZeroGenerator);
        }
        let (big, w) = self.extend_front("_w");
        let wv = Polynomial::var(&big, 0);
        let mut gens = self.gens.iter().map(|g| g.to_ring(&big)).collect::<Result<Vec<_>>>()?;
        gens.push(Polynomial::one(&big).sub(&wv.mul(&f.to_ring(&big)?)));
        let joint = Ideal::new(gens)?.with_budget(self.budget);
        let out = joint
            .eliminate(&[&w])?
            .ok_or_else(|| AlgError::Invalid("saturation of a nonzero ideal is nonzero".into()))?;
        out.to_ring(&self.ring)
    }

    /// Saturation by iterated quotients, stopping at the first stable step.
    pub fn saturate_iterated(&self, f: &Polynomial<F>, max_steps: usize) -> Result<(Ideal<F>, usize)> {
        let mut cur = self.clone();
        for step in 0..max_steps {
            let next = cur.quotient(f)?;
            if next.equals(&cur)? {
                return Ok((cur, step));
            }
            cur = next;
        }
        Err(AlgError::BudgetExhausted(format!("saturation not stable after {max_steps} quotients")))
    }

    /// True iff 1 ∈ I + (1 - w f), i.e. f ∈ √I.
    pub fn radical_contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let w = fresh_name(&self.ring, "_w");
        let mut vars = self.ring.vars.clone();
        vars.push(w);
        let big = Ring::from_names(self.ring.field.clone(), vars, MonomialOrder::Grevlex);
        let wv = Polynomial::var(&big, big.nvars() - 1);
        let mut gens = self.gens.iter().map(|g| g.to_ring(&big)).collect::<Result<Vec<_>>>()?;
        gens.push(Polynomial::one(&big).sub(&wv.mul(&f.to_ring(&big)?)));
        Ideal::new(gens)?.with_budget(self.budget).is_unit()
    }

    /// Krull dimension of k[x]/I; `None` for the unit ideal (empty scheme).
    pub fn krull_dim(&self) -> Result<Option<usize>> {
        if self.is_unit()? {
            return Ok(None);
        }
        let n = self.ring.nvars();
        let mut supports: Vec<Vec<usize>> = self
            .leading_monomials()?
            .iter()
            .map(|m| (0..n).filter(|&i| m.exp(i) > 0).collect())
            .collect();
        supports.sort_by_key(|s| s.len());
        let mut best = n;
        let mut chosen = vec![false; n];
        min_hitting_set(&supports, &mut chosen, 0, &mut best);
        Ok(Some(n - best))
    }

    /// Dimension of the degree-`d` part of k[x]/I for homogeneous I. With `affine` set and a
    /// non-homogeneous I, returns the affine Hilbert function: the dimension of the
    /// polynomials of degree ≤ d modulo I (the Hilbert function of the homogenization).
    pub fn hilbert_function(&self, d: u32, affine: bool) -> Result<u64> {
        let homogeneous = self.is_homogeneous();
        if !homogeneous && !affine {
            return Err(AlgError::NotHomogeneous);
        }
        let grev = if self.ring.order == MonomialOrder::Grevlex {
            self.clone()
        } else {
            self.reorder(MonomialOrder::Grevlex)
        };
        let lms = grev.leading_monomials()?;
        let n = self.ring.nvars();
        if homogeneous {
            Ok(count_standard(&lms, n, d))
        } else {
            Ok((0..=d).map(|e| count_standard(&lms, n, e)).sum())
        }
    }

    /// Flatness over the DVR generated by the variable `u`: true iff (I : u) = I.
    pub fn is_flat_over_dvr(&self, u: &str) -> Result<Flatness<F>> {
        let ui = self.ring.var_index(u)?;
        let uvar = Polynomial::var(&self.ring, ui);
        if self.contains(&uvar)? {
            return Err(AlgError::SpecialFiberEverything);
        }
        if self.is_homogeneous() {
            return self.flat_homogeneous(u);
        }
        let q = self.quotient(&uvar)?;
        for g in q.groebner_basis()? {
            if !self.contains(g)? {
                return Ok(Flatness { flat: false, witness: Some(g.clone()) });
            }
        }
        Ok(Flatness { flat: true, witness: None })
    }

    /// Reverse-lex trick for homogeneous ideals: with `u` the last variable of a grevlex
    /// order, in(I : u) = in(I) : u, so I is u-torsion-free iff no reduced basis element is
    /// divisible by u; such an element g yields the witness g / u.
    fn flat_homogeneous(&self, u: &str) -> Result<Flatness<F>> {
        let g = self.u_last_grevlex(u)?;
        let last = g.ring.nvars() - 1;
        for b in g.groebner_basis()? {
            if b.lead_monomial().unwrap().exp(last) > 0 {
                let uvar = Polynomial::var(&g.ring, last);
                let w = b.exact_div(&uvar).ok_or_else(|| {
                    AlgError::Invalid("reverse-lex divisibility failed on a homogeneous ideal".into())
                })?;
                return Ok(Flatness { flat: false, witness: Some(w.to_ring(&self.ring)?) });
            }
        }
        Ok(Flatness { flat: true, witness: None })
    }

    fn u_last_grevlex(&self, u: &str) -> Result<Ideal<F>> {
        let mut vars: Vec<String> = self.ring.vars.iter().filter(|v| *v != u).cloned().collect();
        vars.push(u.to_string());
        let ring = Ring::from_names(self.ring.field.clone(), vars, MonomialOrder::Grevlex);
        self.to_ring(&ring)
    }

    /// Flatness via the general quotient computation, regardless of homogeneity.
    pub fn is_flat_over_dvr_general(&self, u: &str) -> Result<bool> {
        let uvar = self.var(u)?;
        if self.contains(&uvar)? {
            return Err(AlgError::SpecialFiberEverything);
        }
        self.quotient(&uvar)?.equals(self)
    }

    /// True iff the locus where `u` is invertible is empty: 1 ∈ I + (1 - w u).
    pub fn is_generically_empty(&self, u: &str) -> Result<bool> {
        let uvar = self.var(u)?;
        if self.is_homogeneous() {
            // For homogeneous I: u ∈ √I iff the u-last grevlex basis contains a pure u-power.
            let g = self.u_last_grevlex(u)?;
            let last = g.ring.nvars() - 1;
            return Ok(g.groebner_basis()?.iter().any(|b| {
                let m = b.lead_monomial().unwrap();
                m.degree() == m.exp(last) as u32
            }));
        }
        self.radical_contains(&uvar)
    }

    /// The special fiber I + (u) as an ideal in the ring without `u`.
    pub fn special_fiber(&self, u: &str) -> Result<Option<Ideal<F>>> {
        self.specialize(u, &self.ring.field.zero())
    }

    /// Each generator of `other` lies in √self and vice versa.
    pub fn same_radical(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &other.gens {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.gens {
            if !other.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn min_hitting_set(sets: &[Vec<usize>], chosen: &mut Vec<bool>, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    let open = sets.iter().find(|s| !s.iter().any(|&i| chosen[i]));
    match open {
        None => *best = count,
        Some(s) => {
            for &i in s {
                chosen[i] = true;
                min_hitting_set(sets, chosen, count + 1, best);
                chosen[i] = false;
            }
        }
    }
}

/// Number of degree-`d` monomials in `n` variables divisible by none of `lms`.
pub fn count_standard(lms: &[Monomial], n: usize, d: u32) -> u64 {
    fn rec(lms: &[Monomial], exps: &mut Vec<u16>, i: usize, left: u32) -> u64 {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left as u16;
            let m = Monomial::from_exps(exps);
            let hit = lms.iter().any(|l| l.divides(&m));
            exps[i] = 0;
            return u64::from(!hit);
        }
        let mut total = 0;
        for e in 0..=left {
            exps[i] = e as u16;
            // Prune: if the partial monomial is already in the ideal, every completion is too.
            let partial = Monomial::from_exps(exps);
            if lms.iter().any(|l| l.divides(&partial)) {
                exps[i] = 0;
                break;
            }
            total += rec(lms, exps, i + 1, left - e);
        }
        exps[i] = 0;
        total
    }
    if n == 0 {
        return u64::from(d == 0 && lms.iter().all(|l| !l.is_one()));
    }
    let mut exps = vec![0u16; n];
    rec(lms, &mut exps, 0, d)
}
