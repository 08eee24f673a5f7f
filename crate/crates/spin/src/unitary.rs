//! The standard lattices of the unitary and split orthogonal settings as diagonal lattices in
//! a split reference basis.
//!
//! Unitary: V = F^n with φ(e_i, e_{n+1−j}) = δ_ij, π̄ = −π, π² = π₀. Viewed over F₀ with
//! h = ½ Tr φ, the reference basis is
//! f = (−π⁻¹e_1, …, −π⁻¹e_m, e_{m+1}, …, e_n, e_1, …, e_m, πe_{m+1}, …, πe_n), spanning Λ_m.
//! Over the DVR model π₀ = u², so π₀-exponents are doubled.

use exactalg::Field;

use crate::error::{Result, SpinError};
use crate::lattice::{LatticeSpec, SplitBasis};

/// Which multiple of which e_i the reference vector f_k (1-based) is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefVector {
    /// −π⁻¹ e_i
    MinusPiInv(usize),
    /// e_i
    E(usize),
    /// π e_i
    PiE(usize),
}

pub fn reference_basis(n: usize) -> Vec<RefVector> {
    let m = n / 2;
    let mut out = Vec::with_capacity(2 * n);
    out.extend((1..=m).map(RefVector::MinusPiInv));
    out.extend((m + 1..=n).map(RefVector::E));
    out.extend((1..=m).map(RefVector::E));
    out.extend((m + 1..=n).map(RefVector::PiE));
    out
}

/// The split-basis data: standard for n even; for n = 2m+1 the pair (e_{m+1}, πe_{m+1}) at
/// positions (m+1, n+m+1) is replaced as in [`SplitBasis::OddMiddle`].
pub fn unitary_split(n: usize) -> SplitBasis {
    let m = n / 2;
    if n % 2 == 0 {
        SplitBasis::Standard
    } else {
        SplitBasis::OddMiddle { alpha: m + 1, beta: n + m + 1 }
    }
}

/// Λ_i = span_{O_F}{π⁻¹e_1, …, π⁻¹e_i, e_{i+1}, …, e_n} for 0 ≤ i < n, diagonal in f with
/// u-exponents (π₀ = u²).
pub fn unitary_lattice(n: usize, i: usize) -> Result<LatticeSpec> {
    if n < 1 || i >= n {
        return Err(SpinError::Lattice(format!("lattice index {i} out of range for n = {n}")));
    }
    let m = n / 2;
    let mut exps = vec![0i32; 2 * n];
    for k in 1..=n {
        if k <= m {
            // ⟨π⁻¹e_k, e_k⟩ if k ≤ i, else ⟨e_k, πe_k⟩ with πe_k = −π₀ f_k.
            if k > i {
                exps[k - 1] = 2;
            }
        } else if k <= i {
            // ⟨π⁻¹e_k, e_k⟩ with π⁻¹e_k = π₀⁻¹ πe_k = π₀⁻¹ f_{n+k}.
            exps[n + k - 1] = -2;
        }
    }
    LatticeSpec::new(n, exps, unitary_split(n))
}

/// Split orthogonal setting: Λ_{−i} = Π^i Λ_0 = ⟨e_1, …, e_{2n−i}, πe_{2n−i+1}, …, πe_{2n}⟩ and
/// Λ_i = ⟨π⁻¹e_1, …, π⁻¹e_i, e_{i+1}, …, e_{2n}⟩ with π = u; `j` ranges over −n..=n.
pub fn orthogonal_lattice(n: usize, j: i64) -> Result<LatticeSpec> {
    if j.unsigned_abs() as usize > n {
        return Err(SpinError::Lattice(format!("lattice index {j} out of range for n = {n}")));
    }
    let mut exps = vec![0i32; 2 * n];
    let k = j.unsigned_abs() as usize;
    if j < 0 {
        for e in exps.iter_mut().skip(2 * n - k) {
            *e = 1;
        }
    } else {
        for e in exps.iter_mut().take(k) {
            *e = -1;
        }
    }
    LatticeSpec::new(n, exps, SplitBasis::Standard)
}

/// Elements a + bπ of F = F₀[π]/(π² − π₀), over an exact field F₀.
fn fmul<F: Field>(field: &F, pi0: &F::Elem, x: &(F::Elem, F::Elem), y: &(F::Elem, F::Elem)) -> (F::Elem, F::Elem) {
    let a = field.add(&field.mul(&x.0, &y.0), &field.mul(pi0, &field.mul(&x.1, &y.1)));
    let b = field.add(&field.mul(&x.0, &y.1), &field.mul(&x.1, &y.0));
    (a, b)
}

/// Gram matrix of h = ½ Tr_{F/F₀} φ in the reference basis f, over F₀ with π² = `pi0`
/// (φ linear in the first and conjugate-linear in the second variable).
pub fn hermitian_trace_gram<F: Field>(field: &F, n: usize, pi0: &F::Elem) -> Vec<Vec<F::Elem>> {
    let pi0_inv = field.inv(pi0).expect("π₀ ≠ 0");
    let coeff = |v: RefVector| -> ((F::Elem, F::Elem), usize) {
        match v {
            // −π⁻¹ = −π / π₀
            RefVector::MinusPiInv(i) => ((field.zero(), field.neg(&pi0_inv)), i),
            RefVector::E(i) => ((field.one(), field.zero()), i),
            RefVector::PiE(i) => ((field.zero(), field.one()), i),
        }
    };
    let basis = reference_basis(n);
    basis
        .iter()
        .map(|&v| {
            basis
                .iter()
                .map(|&w| {
                    let (a, i) = coeff(v);
                    let (b, j) = coeff(w);
                    if i + j != n + 1 {
                        return field.zero();
                    }
                    let conj_b = (b.0.clone(), field.neg(&b.1));
                    // ½ Tr(a + bπ) = a.
                    fmul(field, pi0, &a, &conj_b).0
                })
                .collect()
        })
        .collect()
}

/// The same gram matrix in the split basis g (n odd), given a square root of π₀ in the field.
pub fn odd_split_gram<F: Field>(field: &F, n: usize, pi0: &F::Elem, sqrt_pi0: &F::Elem) -> Vec<Vec<F::Elem>> {
    let g = hermitian_trace_gram(field, n, pi0);
    let SplitBasis::OddMiddle { alpha, beta } = unitary_split(n) else {
        return g;
    };
    let (a, b) = (alpha - 1, beta - 1);
    let half = field.inv(&field.from_i64(2)).unwrap();
    let sinv = field.inv(sqrt_pi0).expect("nonzero square root");
    let k = 2 * n;
    // Rows of the change of basis: g_k = Σ_l p[k][l] f_l.
    let mut p: Vec<Vec<F::Elem>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect();
    p[a][a] = field.one();
    p[a][b] = field.neg(&sinv);
    p[b][a] = half.clone();
    p[b][b] = field.mul(&half, &sinv);
    let mut out = vec![vec![field.zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = field.zero();
            for x in 0..k {
                for y in 0..k {
                    let t = field.mul(&field.mul(&p[i][x], &g[x][y]), &p[j][y]);
                    acc = field.add(&acc, &t);
                }
            }
            out[i][j] = acc;
        }
    }
    out
}
