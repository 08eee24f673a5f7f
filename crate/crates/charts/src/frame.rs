//! Chart frames: an O_{F₀}-basis of a standard lattice written symbolically as ±π^a e_k,
//! together with the graph parameterization of ℱ by an n×n matrix X.
//!
//! Over the DVR model O = k[u]_(u) with π₀ = u², the F₀-bilinear forms
//! (x, y) = ½Tr φ(x, y) and ⟨x, y⟩ = ½Tr(π⁻¹φ(x, y)) have values ±π₀^j on basis vectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use exactalg::{Field, PolyMatrix, Polynomial, Ring};
use spin::lattice::lattice_pm_basis;
use spin::unitary::{reference_basis, unitary_lattice, RefVector};
use spin::wedge::WedgeIndex;
use spin::Label;

use crate::error::{ChartError, Result};

/// The vector sign · π^pi · e_k (k 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EVec {
    pub sign: i64,
    pub pi: i32,
    pub k: usize,
}

impl EVec {
    pub const fn new(sign: i64, pi: i32, k: usize) -> Self {
        EVec { sign, pi, k }
    }

    /// f_k of Λ_i: −π⁻¹e_k for k ≤ i, e_k otherwise.
    pub fn f(i: usize, k: usize) -> Self {
        if k <= i {
            EVec::new(-1, -1, k)
        } else {
            EVec::new(1, 0, k)
        }
    }

    pub fn times_pi(self) -> Self {
        EVec { pi: self.pi + 1, ..self }
    }

    pub fn neg(self) -> Self {
        EVec { sign: -self.sign, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// (x, y) = ½Tr φ(x, y).
    Symmetric,
    /// ⟨x, y⟩ = ½Tr(π⁻¹φ(x, y)).
    Alternating,
}

/// Value of the form on two basis vectors as coefficient · π₀^exponent, `None` for zero.
pub fn pair_evec(n: usize, form: FormKind, x: EVec, y: EVec) -> Option<(i64, i32)> {
    if x.k + y.k != n + 1 {
        return None;
    }
    // φ(σπ^a e_i, τπ^b e_j) = στ π^a (−π)^b; the π⁻¹ of ⟨,⟩ lowers the exponent.
    let c = x.sign * y.sign * if y.pi.rem_euclid(2) == 1 { -1 } else { 1 };
    let mut e = x.pi + y.pi;
    if form == FormKind::Alternating {
        e -= 1;
    }
    // ½Tr(π^e) = π₀^{e/2} for even e, 0 for odd e.
    if e.rem_euclid(2) == 1 {
        return None;
    }
    Some((c, e.div_euclid(2)))
}

/// A chart basis and graph parameterization: ℱ is the column span of the 2n×n matrix M with
/// M[xrows] = X and M[prows] = diag(psigns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub n: usize,
    pub basis: Vec<EVec>,
    pub form: FormKind,
    /// Index i of the standard lattice Λ_i spanned by `basis`.
    pub lattice: usize,
    pub xrows: Vec<usize>,
    pub prows: Vec<usize>,
    pub psigns: Vec<i64>,
}

impl Frame {
    /// n odd, Λ_0 with basis (e_1, …, e_n, πe_1, …, πe_n), ℱ = {πv + Xv}.
    pub fn case_a(n: usize) -> Self {
        let mut basis: Vec<EVec> = (1..=n).map(|k| EVec::new(1, 0, k)).collect();
        basis.extend((1..=n).map(|k| EVec::new(1, 1, k)));
        Frame {
            n,
            basis,
            form: FormKind::Alternating,
            lattice: 0,
            xrows: (0..n).collect(),
            prows: (n..2 * n).collect(),
            psigns: vec![1; n],
        }
    }

    /// n = 2m, Λ_m with basis (f_1, …, f_n, −πf_1, …, −πf_m, πf_{m+1}, …, πf_n),
    /// ℱ = {πv + Xv : v ∈ ⟨f_1, …, f_n⟩}.
    pub fn case_b(n: usize) -> Self {
        let m = n / 2;
        let mut basis: Vec<EVec> = (1..=n).map(|k| EVec::f(m, k)).collect();
        basis.extend((1..=n).map(|k| {
            let v = EVec::f(m, k).times_pi();
            if k <= m {
                v.neg()
            } else {
                v
            }
        }));
        let psigns = (1..=n).map(|k| if k <= m { -1 } else { 1 }).collect();
        Frame {
            n,
            basis,
            form: FormKind::Symmetric,
            lattice: m,
            xrows: (0..n).collect(),
            prows: (n..2 * n).collect(),
            psigns,
        }
    }

    /// n = 2m, Λ_m with basis (f_1, πf_1, πf_2, …, πf_{n−1}, f_n, πf_n, f_2, …, f_{n−1}),
    /// ℱ = {v + Xv : v ∈ Λ'} for Λ' spanned by the first n vectors.
    pub fn case_b1(n: usize) -> Self {
        let m = n / 2;
        let f = |k| EVec::f(m, k);
        let mut basis = vec![f(1), f(1).times_pi()];
        basis.extend((2..n).map(|k| f(k).times_pi()));
        basis.push(f(n));
        basis.push(f(n).times_pi());
        basis.extend((2..n).map(f));
        Frame {
            n,
            basis,
            form: FormKind::Symmetric,
            lattice: m,
            xrows: (n..2 * n).collect(),
            prows: (0..n).collect(),
            psigns: vec![1; n],
        }
    }

    /// n = 3, Λ_1 with basis (e_3, π⁻¹e_1, e_2, πe_3, e_1, πe_2), ℱ = column span of [X; I].
    pub fn picard_i1() -> Self {
        let basis = vec![
            EVec::new(1, 0, 3),
            EVec::new(1, -1, 1),
            EVec::new(1, 0, 2),
            EVec::new(1, 1, 3),
            EVec::new(1, 0, 1),
            EVec::new(1, 1, 2),
        ];
        Frame {
            n: 3,
            basis,
            form: FormKind::Symmetric,
            lattice: 1,
            xrows: vec![0, 1, 2],
            prows: vec![3, 4, 5],
            psigns: vec![1; 3],
        }
    }

    /// Gram matrix entries as (coefficient, π₀-exponent).
    pub fn gram_entries(&self) -> Vec<Vec<Option<(i64, i32)>>> {
        self.basis
            .iter()
            .map(|&x| self.basis.iter().map(|&y| pair_evec(self.n, self.form, x, y)).collect())
            .collect()
    }

    /// Gram matrix over k[u] (π₀ = u²); fails if some entry has a negative π₀-power.
    pub fn gram<F: Field>(&self, ring: &Arc<Ring<F>>, u: usize) -> Result<PolyMatrix<F>> {
        let entries = self.gram_entries();
        let k = 2 * self.n;
        let mut g = PolyMatrix::zeros(ring, k, k);
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if let Some((c, p)) = *e {
                    if p < 0 {
                        return Err(ChartError::Spec("form is not integral on the chart lattice".into()));
                    }
                    let uv = Polynomial::var(ring, u).pow(2 * p as u32);
                    g.set(i, j, uv.scale(&ring.field.from_i64(c)));
                }
            }
        }
        Ok(g)
    }

    /// Matrix of π: column j holds the coordinates of π·b_j (π² = u²).
    pub fn pi_matrix<F: Field>(&self, ring: &Arc<Ring<F>>, u: usize) -> Result<PolyMatrix<F>> {
        let k = 2 * self.n;
        let mut p = PolyMatrix::zeros(ring, k, k);
        for (j, &b) in self.basis.iter().enumerate() {
            let img = b.times_pi();
            let (i, t) = self
                .basis
                .iter()
                .enumerate()
                .find(|(_, t)| t.k == img.k && (t.pi - img.pi).rem_euclid(2) == 0)
                .ok_or_else(|| ChartError::Spec("basis is not π-closed".into()))?;
            // π·b_j = ±π₀^e b_i
            let e = (img.pi - t.pi) / 2;
            if e < 0 {
                return Err(ChartError::Spec("basis does not span a π-stable lattice".into()));
            }
            let c = ring.field.from_i64(img.sign * t.sign);
            p.set(i, j, Polynomial::var(ring, u).pow(2 * e as u32).scale(&c));
        }
        Ok(p)
    }

    /// For each chart basis vector, its index (1-based) and sign in the lattice basis
    /// {u^{a_k} f_k} of Λ_lattice used by the spin condition.
    pub fn lattice_map(&self) -> Result<Vec<(usize, i64)>> {
        let spec = unitary_lattice(self.n, self.lattice)?;
        let refs: Vec<EVec> = reference_basis(self.n)
            .into_iter()
            .zip(&spec.exps)
            .map(|(r, &a)| {
                let v = match r {
                    RefVector::MinusPiInv(i) => EVec::new(-1, -1, i),
                    RefVector::E(i) => EVec::new(1, 0, i),
                    RefVector::PiE(i) => EVec::new(1, 1, i),
                };
                // u^a = π₀^{a/2} = π^a as a scalar of F₀.
                EVec { pi: v.pi + a, ..v }
            })
            .collect();
        self.basis
            .iter()
            .map(|b| {
                refs.iter()
                    .position(|r| r.k == b.k && r.pi == b.pi)
                    .map(|i| (i + 1, b.sign * refs[i].sign))
                    .ok_or_else(|| ChartError::Spec(format!("{b:?} is not a lattice basis vector")))
            })
            .collect()
    }

    /// The 2n×n matrix M whose columns span ℱ.
    pub fn chart_matrix<F: Field>(&self, ring: &Arc<Ring<F>>, x: &PolyMatrix<F>) -> PolyMatrix<F> {
        let n = self.n;
        let mut m = PolyMatrix::zeros(ring, 2 * n, n);
        for (a, &row) in self.xrows.iter().enumerate() {
            for j in 0..n {
                m.set(row, j, x.get(a, j).clone());
            }
        }
        for (a, (&row, &sg)) in self.prows.iter().zip(&self.psigns).enumerate() {
            m.set(row, a, Polynomial::from_int(ring, sg));
        }
        m
    }

    /// Matrix of π on ℱ in the basis given by the columns of M: A = D⁻¹ (πM)[prows].
    pub fn action_on_f<F: Field>(&self, pim: &PolyMatrix<F>) -> PolyMatrix<F> {
        let n = self.n;
        PolyMatrix::from_fn(pim.ring(), n, n, |a, j| {
            let v = pim.get(self.prows[a], j);
            if self.psigns[a] < 0 {
                v.neg()
            } else {
                v.clone()
            }
        })
    }
}

/// Variables x{i}{j} (1-based, row-major) followed by `u`.
pub fn matrix_vars(n: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..=n).flat_map(|i| (1..=n).map(move |j| format!("x{i}{j}"))).collect();
    v.push("u".into());
    v
}

/// The n×n matrix of the first n² ring variables.
pub fn var_matrix<F: Field>(ring: &Arc<Ring<F>>, n: usize) -> PolyMatrix<F> {
    PolyMatrix::from_fn(ring, n, n, |i, j| Polynomial::var(ring, i * n + j))
}

/// Coefficients c_0..c_n of (T − u)^s (T + u)^r, highest power first.
pub fn target_char_poly<F: Field>(ring: &Arc<Ring<F>>, u: usize, r: usize, s: usize) -> Vec<Polynomial<F>> {
    let uv = Polynomial::var(ring, u);
    let mut c = vec![Polynomial::one(ring)];
    let factors = std::iter::repeat_n(uv.neg(), s).chain(std::iter::repeat_n(uv, r));
    for a in factors {
        // (Σ c_k T^{d−k}) (T + a)
        let mut next = c.clone();
        next.push(Polynomial::zero(ring));
        for k in 0..c.len() {
            next[k + 1] = next[k + 1].add(&c[k].mul(&a));
        }
        c = next;
    }
    c
}

/// Entries of char_A(T) − (T − u)^s (T + u)^r.
pub fn char_poly_conditions<F: Field>(a: &PolyMatrix<F>, u: usize, r: usize, s: usize) -> Vec<Polynomial<F>> {
    let target = target_char_poly(a.ring(), u, r, s);
    a.char_poly().iter().zip(&target).skip(1).map(|(x, y)| x.sub(y)).collect()
}

/// (r+1)-minors of A − uI and (s+1)-minors of A + uI, when r ≠ s.
pub fn wedge_conditions<F: Field>(a: &PolyMatrix<F>, u: usize, r: usize, s: usize) -> Vec<Polynomial<F>> {
    if r == s {
        return Vec::new();
    }
    let ring = a.ring();
    let n = a.rows();
    let uid = PolyMatrix::identity(ring, n).scale(&Polynomial::var(ring, u));
    let mut out = Vec::new();
    if r < n {
        out.extend(a.sub(&uid).minors(r + 1));
    }
    if s < n {
        out.extend(a.add(&uid).minors(s + 1));
    }
    out
}

/// Generic graph-chart conditions: isotropy MᵗGM = 0, π-stability πM = M·A, the
/// characteristic polynomial of A, and (from level wedge on) the minor conditions on A.
pub fn graph_conditions<F: Field>(
    frame: &Frame,
    ring: &Arc<Ring<F>>,
    x: &PolyMatrix<F>,
    u: usize,
    r: usize,
    s: usize,
    wedge: bool,
) -> Result<Vec<Polynomial<F>>> {
    let n = frame.n;
    let m = frame.chart_matrix(ring, x);
    let g = frame.gram(ring, u)?;
    let iso = m.transpose().mul(&g).mul(&m);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            out.push(iso.get(i, j).clone());
        }
    }
    let pim = frame.pi_matrix(ring, u)?.mul(&m);
    let a = frame.action_on_f(&pim);
    let ma = m.mul(&a);
    for &row in &frame.xrows {
        for j in 0..n {
            out.push(pim.get(row, j).sub(ma.get(row, j)));
        }
    }
    out.extend(char_poly_conditions(&a, u, r, s));
    if wedge {
        out.extend(wedge_conditions(&a, u, r, s));
    }
    Ok(out)
}

/// Plücker coordinates of the column span of a 2n×n matrix, indexed by 1-based sorted row
/// subsets.
pub fn plucker_map<F: Field>(m: &PolyMatrix<F>) -> BTreeMap<WedgeIndex, Polynomial<F>> {
    m.maximal_minors().into_iter().map(|(rows, p)| (rows.iter().map(|r| r + 1).collect(), p)).collect()
}

/// Linear spin conditions on ℱ = column span of `m` (chart coordinates): ∧ⁿℱ lies in the
/// `label` part of ∧ⁿΛ ⊗ O. Each condition is Σ_R φ_R(u) p_R for a saturated form φ.
pub fn spin_constraints_for<F: Field>(
    frame: &Frame,
    m: &PolyMatrix<F>,
    u: usize,
    label: Label,
) -> Result<Vec<Polynomial<F>>> {
    let ring = m.ring();
    let field = &ring.field;
    let n = frame.n;
    let map = frame.lattice_map()?;
    // Rows of M rewritten in lattice coordinates.
    let mut ml = PolyMatrix::zeros(ring, 2 * n, n);
    for (row, &(idx, sg)) in map.iter().enumerate() {
        for j in 0..n {
            let v = m.get(row, j);
            ml.set(idx - 1, j, if sg < 0 { v.neg() } else { v.clone() });
        }
    }
    let plucker = plucker_map(&ml);
    let spec = unitary_lattice(n, frame.lattice)?;
    let pm = lattice_pm_basis(field, &spec, label);
    forms_to_polys(ring, u, &pm.indices, &pm.forms, &plucker)
}

/// Turns Laurent forms on ∧ⁿ into polynomial conditions Σ_R φ_R(u) p_R.
pub fn forms_to_polys<F: Field>(
    ring: &Arc<Ring<F>>,
    u: usize,
    indices: &[WedgeIndex],
    forms: &[spin::laurent::LVec<F::Elem>],
    plucker: &BTreeMap<WedgeIndex, Polynomial<F>>,
) -> Result<Vec<Polynomial<F>>> {
    let uv = Polynomial::var(ring, u);
    let mut out = Vec::new();
    for phi in forms {
        let mut acc = Polynomial::zero(ring);
        for (idx, c) in indices.iter().zip(phi) {
            if c.is_zero() {
                continue;
            }
            let p = &plucker[idx];
            if p.is_zero() {
                continue;
            }
            let mut coeff = Polynomial::zero(ring);
            for (&e, a) in &c.terms {
                if e < 0 {
                    return Err(ChartError::Spec("spin form has a pole at u = 0".into()));
                }
                coeff = coeff.add(&uv.pow(e as u32).scale(a));
            }
            acc = acc.add(&coeff.mul(p));
        }
        if !acc.is_zero() {
            out.push(acc);
        }
    }
    Ok(out)
}
