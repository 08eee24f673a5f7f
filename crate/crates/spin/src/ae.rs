//! Discriminant, the operator a_e on ∧ⁿV, its ± eigenspaces, and the parity rule for
//! isotropic subspaces.

use serde::Serialize;

use exactalg::Field;

use crate::error::{Result, SpinError};
use crate::wedge::{complement, det, eta, partner, rank, sigma_sign, wedge_indices, WedgeIndex, WedgeVector};

/// Eigenspace label. `Plus` is the eigenspace containing e_1 ∧ … ∧ e_n of a split basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    Plus,
    Minus,
}

impl Label {
    /// The label (−1)^s used by the spin condition.
    pub fn for_signature_s(s: usize) -> Label {
        if s % 2 == 0 { Label::Plus } else { Label::Minus }
    }

    pub fn flip(self) -> Label {
        match self {
            Label::Plus => Label::Minus,
            Label::Minus => Label::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Same,
    Opposite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminantData<F: Field> {
    pub d: F::Elem,
    /// The discriminant algebra F[x]/(x² − D) is F × F.
    pub split: bool,
}

fn check_gram<F: Field>(gram: &[Vec<F::Elem>]) -> Result<usize> {
    let k = gram.len();
    if k == 0 || k % 2 == 1 || gram.iter().any(|r| r.len() != k) {
        return Err(SpinError::GramShape(k));
    }
    Ok(k / 2)
}

/// D = (−1)^n det(h(e_i, e_j)) and whether it is a square.
pub fn discriminant<F: Field>(field: &F, gram: &[Vec<F::Elem>]) -> Result<DiscriminantData<F>> {
    let n = check_gram::<F>(gram)?;
    let dt = det(field, gram);
    if field.is_zero(&dt) {
        return Err(SpinError::SingularGram);
    }
    let d = if n % 2 == 1 { field.neg(&dt) } else { dt };
    let split = field.is_square(&d);
    Ok(DiscriminantData { d, split })
}

/// The split gram matrix h(e_i, e_{2n+1−j}) = δ_ij.
pub fn split_gram<F: Field>(field: &F, n: usize) -> Vec<Vec<F::Elem>> {
    (0..2 * n)
        .map(|i| (0..2 * n).map(|j| if i + j == 2 * n - 1 { field.one() } else { field.zero() }).collect())
        .collect()
}

/// a_e(e_S) for e = e_1 ∧ … ∧ e_{2n}, from the definition: ∧ⁿb sends e_S to
/// Σ_T det(h(e_s, e_t))_{s∈S, t∈T} e_T^*, and e_T^* ↦ η_T e_{T^c}.
pub fn ae_image<F: Field>(field: &F, gram: &[Vec<F::Elem>], s: &[usize]) -> Result<WedgeVector<F>> {
    let n = check_gram::<F>(gram)?;
    let mut out = WedgeVector::zero(n);
    for t in wedge_indices(n) {
        let minor: Vec<Vec<F::Elem>> =
            s.iter().map(|&i| t.iter().map(|&j| gram[i - 1][j - 1].clone()).collect()).collect();
        let d = det(field, &minor);
        if !field.is_zero(&d) {
            let c = if eta(&t, n) == 1 { d } else { field.neg(&d) };
            out.add_term(field, complement(&t, n), c);
        }
    }
    Ok(out)
}

/// a_e applied to a vector, for an arbitrary gram matrix.
pub fn apply_ae_gram<F: Field>(field: &F, gram: &[Vec<F::Elem>], v: &WedgeVector<F>) -> Result<WedgeVector<F>> {
    let mut out = WedgeVector::zero(v.n);
    for (s, c) in &v.terms {
        out = out.add(field, &ae_image(field, gram, s)?.scale(field, c));
    }
    Ok(out)
}

/// a_e in a split basis: e_S ↦ sign(σ_S) e_{S*}.
pub fn apply_ae<F: Field>(field: &F, v: &WedgeVector<F>) -> WedgeVector<F> {
    let n = v.n;
    let mut out = WedgeVector::zero(n);
    for (s, c) in &v.terms {
        let sg = sigma_sign(s, n).expect("valid index");
        out.add_term(field, partner(s, n), if sg == 1 { c.clone() } else { field.neg(c) });
    }
    out
}

/// Raw eigenvalue of a_e on e_1 ∧ … ∧ e_n (split basis); the `Plus` eigenvalue.
pub fn plus_eigenvalue(n: usize) -> i8 {
    let id: Vec<usize> = (1..=n).collect();
    sigma_sign(&id, n).expect("valid index")
}

pub fn eigenvalue(n: usize, label: Label) -> i8 {
    match label {
        Label::Plus => plus_eigenvalue(n),
        Label::Minus => -plus_eigenvalue(n),
    }
}

/// Integer generators e_S + λ sign(σ_S) e_{S*} of the eigenspace with label `label`, one per
/// pair {S, S*} (and e_S alone when S = S* has the right eigenvalue). They form a basis.
pub fn eigen_basis_int(n: usize, label: Label) -> Vec<Vec<(WedgeIndex, i64)>> {
    let lam = eigenvalue(n, label) as i64;
    let mut out = Vec::new();
    for s in wedge_indices(n) {
        let p = partner(&s, n);
        let sg = sigma_sign(&s, n).expect("valid index") as i64;
        if p == s {
            if sg == lam {
                out.push(vec![(s, 1)]);
            }
        } else if s < p {
            out.push(vec![(s, 1), (p, lam * sg)]);
        }
    }
    out
}

pub fn eigen_basis<F: Field>(field: &F, n: usize, label: Label) -> Vec<WedgeVector<F>> {
    eigen_basis_int(n, label)
        .into_iter()
        .map(|terms| {
            let mut v = WedgeVector::zero(n);
            for (s, c) in terms {
                v.add_term(field, s, field.from_i64(c));
            }
            v
        })
        .collect()
}

/// The eigenspace containing `v` (split basis), or `None` if `v` is zero or mixed.
pub fn eigenspace_of<F: Field>(field: &F, v: &WedgeVector<F>) -> Option<Label> {
    if v.is_zero() {
        return None;
    }
    let av = apply_ae(field, v);
    let lam = plus_eigenvalue(v.n);
    let plus = if lam == 1 { v.clone() } else { v.scale(field, &field.from_i64(-1)) };
    if av == plus {
        Some(Label::Plus)
    } else if av == plus.scale(field, &field.from_i64(-1)) {
        Some(Label::Minus)
    } else {
        None
    }
}

/// The scalar by which a_e² acts, computed from the definition of a_e for the given gram
/// matrix; errors if a_e² is not scalar (it always is when the gram matrix is invertible).
pub fn ae_square_check<F: Field>(field: &F, gram: &[Vec<F::Elem>]) -> Result<F::Elem> {
    let n = check_gram::<F>(gram)?;
    if field.is_zero(&det(field, gram)) {
        return Err(SpinError::SingularGram);
    }
    let mut scalar: Option<F::Elem> = None;
    for s in wedge_indices(n) {
        let img = ae_image(field, gram, &s)?;
        let img2 = apply_ae_gram(field, gram, &img)?;
        let c = img2.terms.get(&s).cloned().unwrap_or_else(|| field.zero());
        if img2.terms.len() > 1 || (img2.terms.len() == 1 && field.is_zero(&c)) {
            return Err(SpinError::Dimension("a_e^2 is not diagonal".into()));
        }
        match &scalar {
            None => scalar = Some(c),
            Some(x) if *x == c => {}
            Some(_) => return Err(SpinError::Dimension("a_e^2 is not scalar".into())),
        }
    }
    Ok(scalar.expect("nonempty basis"))
}

/// Diagonalizes a symmetric gram matrix by congruence: returns (P, diag) with rows of P the
/// new basis vectors (so P G Pᵗ = diag(diag)).
pub fn orthogonalize<F: Field>(field: &F, gram: &[Vec<F::Elem>]) -> Result<(Vec<Vec<F::Elem>>, Vec<F::Elem>)> {
    let k = gram.len();
    let mut basis: Vec<Vec<F::Elem>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect();
    let form = |x: &[F::Elem], y: &[F::Elem]| -> F::Elem {
        let mut acc = field.zero();
        for i in 0..k {
            if field.is_zero(&x[i]) {
                continue;
            }
            for j in 0..k {
                let t = field.mul(&field.mul(&x[i], &gram[i][j]), &y[j]);
                acc = field.add(&acc, &t);
            }
        }
        acc
    };
    let mut done: Vec<Vec<F::Elem>> = Vec::new();
    let mut diag = Vec::new();
    while !basis.is_empty() {
        // Find an anisotropic vector among the basis vectors or pairwise sums.
        let mut pick: Option<Vec<F::Elem>> = None;
        'outer: for i in 0..basis.len() {
            if !field.is_zero(&form(&basis[i], &basis[i])) {
                pick = Some(basis[i].clone());
                break;
            }
            for j in i + 1..basis.len() {
                let s: Vec<F::Elem> = basis[i].iter().zip(&basis[j]).map(|(a, b)| field.add(a, b)).collect();
                if !field.is_zero(&form(&s, &s)) {
                    pick = Some(s);
                    break 'outer;
                }
            }
        }
        let v = pick.ok_or(SpinError::SingularGram)?;
        let hv = form(&v, &v);
        let inv = field.inv(&hv).unwrap();
        // Project the remaining vectors to v^⊥, keeping an independent spanning set.
        let mut rest: Vec<Vec<F::Elem>> = Vec::new();
        for b in &basis {
            let c = field.mul(&form(b, &v), &inv);
            let w: Vec<F::Elem> = b.iter().zip(&v).map(|(x, y)| field.sub(x, &field.mul(&c, y))).collect();
            let mut trial = rest.clone();
            trial.push(w.clone());
            let mut with_done = trial.clone();
            with_done.extend(done.iter().cloned());
            with_done.push(v.clone());
            if rank(field, &with_done) == with_done.len() {
                rest.push(w);
            }
        }
        done.push(v);
        diag.push(hv);
        basis = rest;
    }
    if done.len() != k {
        return Err(SpinError::SingularGram);
    }
    Ok((done, diag))
}

/// a_e² in an orthogonal basis: e_S ↦ D_S η_S e_{S^c}, squared, gives
/// D_S D_{S^c} η_S η_{S^c}; returns that common scalar (which equals D for the new basis).
pub fn ae_square_orthogonal<F: Field>(field: &F, diag: &[F::Elem]) -> Result<F::Elem> {
    let n = diag.len() / 2;
    let mut out: Option<F::Elem> = None;
    for s in wedge_indices(n) {
        let c = complement(&s, n);
        let ds = s.iter().fold(field.one(), |a, &i| field.mul(&a, &diag[i - 1]));
        let dc = c.iter().fold(field.one(), |a, &i| field.mul(&a, &diag[i - 1]));
        let mut v = field.mul(&ds, &dc);
        if eta(&s, n) * eta(&c, n) == -1 {
            v = field.neg(&v);
        }
        match &out {
            None => out = Some(v),
            Some(x) if *x == v => {}
            Some(_) => return Err(SpinError::Dimension("a_e^2 is not scalar".into())),
        }
    }
    out.ok_or(SpinError::GramShape(0))
}

/// Whether W and W' (row spaces of n × 2n matrices, totally isotropic for `gram`) have
/// ∧ⁿ in the same eigenspace: dim(W ∩ W') ≡ n mod 2.
pub fn isotropic_parity<F: Field>(
    field: &F,
    gram: &[Vec<F::Elem>],
    w: &[Vec<F::Elem>],
    w2: &[Vec<F::Elem>],
) -> Result<Parity> {
    let n = check_gram::<F>(gram)?;
    for m in [w, w2] {
        if m.len() != n || m.iter().any(|r| r.len() != 2 * n) || rank(field, m) != n {
            return Err(SpinError::Dimension("expected n independent vectors of length 2n".into()));
        }
        for a in m {
            for b in m {
                let mut acc = field.zero();
                for i in 0..2 * n {
                    for j in 0..2 * n {
                        acc = field.add(&acc, &field.mul(&field.mul(&a[i], &gram[i][j]), &b[j]));
                    }
                }
                if !field.is_zero(&acc) {
                    return Err(SpinError::NotIsotropic);
                }
            }
        }
    }
    let mut both = w.to_vec();
    both.extend(w2.iter().cloned());
    let inter = 2 * n - rank(field, &both);
    Ok(if inter % 2 == n % 2 { Parity::Same } else { Parity::Opposite })
}
