//! Lifts of extreme points of the special fiber: ℱ^Λ_S = ⟨f_{S*}, πf_{S*}, (π − u)f_{R∖S}⟩ over
//! O = k[u]_(u) with π² = u², and relative positions of diagonal lattice chains.
//!
//! Vectors of Λ_i ⊗ O are written in the basis (f_1, …, f_n, πf_1, …, πf_n); vectors of V in
//! the basis (e_1, …, e_n, πe_1, …, πe_n).

use exactalg::Field;
use serde::Serialize;
use spin::laurent::{self, k_rank, monomial, mul, saturate, LVec, Laurent};
use weyl::{Elem, SignedPerm};

use crate::error::{ChartError, Result};

/// Default u-adic precision bound 2n + 2 for relative positions.
pub fn default_precision(n: usize) -> i32 {
    2 * n as i32 + 2
}

/// Validates S ⊆ {1..n} with |S| = s and S ∩ S* = ∅; returns S sorted.
pub fn check_subset(n: usize, s: usize, set: &[usize]) -> Result<Vec<usize>> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let bad = |msg: &str| Err(ChartError::Subset(set.to_vec(), msg.into()));
    if sorted.len() != set.len() || sorted.len() != s {
        return bad("need s distinct elements");
    }
    if sorted.iter().any(|&a| a == 0 || a > n) {
        return bad("elements must lie in 1..=n");
    }
    if sorted.iter().any(|&a| sorted.contains(&(n + 1 - a))) {
        return bad("S meets S*");
    }
    Ok(sorted)
}

/// All valid S of size s, in lexicographic order.
pub fn valid_subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, s: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for a in start..=n {
            if !cur.contains(&(n + 1 - a)) && a != n + 1 - a {
                cur.push(a);
                rec(n, s, a + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, s, 1, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftChecks {
    pub pi_stable: bool,
    pub rank_n: bool,
    pub isotropic: bool,
    pub char_poly: bool,
}

impl LiftChecks {
    pub fn all(&self) -> bool {
        self.pi_stable && self.rank_n && self.isotropic && self.char_poly
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LiftPoint<E> {
    pub n: usize,
    pub lattice: usize,
    pub subset: Vec<usize>,
    /// Generators of ℱ in the lattice basis (f, πf).
    pub gens: Vec<LVec<E>>,
    pub checks: LiftChecks,
    /// Exponents c_k with (ℱ mod u) ↔ L = ⟨π^{c_k} f_k⟩, t²Λ ⊂ L ⊂ Λ.
    pub reduction: Vec<i32>,
}

impl<E> LiftPoint<E> {
    /// Exponents of L in the basis e: L = ⟨π^{d_k} e_k⟩.
    pub fn reduction_e(&self) -> Vec<i32> {
        self.reduction.iter().enumerate().map(|(k, &c)| c - i32::from(k < self.lattice)).collect()
    }
}

fn unit<F: Field>(field: &F, len: usize, i: usize, c: i64, e: i32) -> LVec<F::Elem> {
    let mut v = vec![Laurent::zero(); len];
    v[i] = monomial(field, field.from_i64(c), e);
    v
}

/// π on (f, πf)- or (e, πe)-coordinates: π(x, y) = (u²y, x).
fn apply_pi<E: Clone + PartialEq>(v: &[Laurent<E>]) -> LVec<E> {
    let n = v.len() / 2;
    let mut w: LVec<E> = v[n..].iter().map(|x| x.shift(2)).collect();
    w.extend(v[..n].iter().cloned());
    w
}

fn lin<F: Field>(field: &F, a: &[Laurent<F::Elem>], b: &[Laurent<F::Elem>], c: &Laurent<F::Elem>) -> LVec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| laurent::add(field, x, &mul(field, c, y))).collect()
}

/// Lattice coordinates → e-coordinates for Λ_i: f_k = −π⁻¹e_k = −u⁻²πe_k and πf_k = −e_k
/// for k ≤ i, f_k = e_k otherwise.
fn to_e<F: Field>(field: &F, i: usize, v: &[Laurent<F::Elem>]) -> LVec<F::Elem> {
    let n = v.len() / 2;
    let mut w = vec![Laurent::zero(); 2 * n];
    for k in 0..n {
        if k < i {
            w[n + k] = laurent::neg(field, &v[k].shift(-2));
            w[k] = laurent::neg(field, &v[n + k]);
        } else {
            w[k] = v[k].clone();
            w[n + k] = v[n + k].clone();
        }
    }
    w
}

/// ⟨v, w⟩ = ½Tr(π⁻¹φ(v, w)) on e-coordinates, φ(e_i, e_j) = δ_{i+j,n+1}, π̄ = −π.
pub fn alt_form<F: Field>(field: &F, v: &[Laurent<F::Elem>], w: &[Laurent<F::Elem>]) -> Laurent<F::Elem> {
    let n = v.len() / 2;
    let mut acc = Laurent::zero();
    for i in 0..n {
        let j = n - 1 - i;
        // (α + βπ)(γ − δπ) has π-part βγ − αδ.
        let t = laurent::sub(field, &mul(field, &v[n + i], &w[j]), &mul(field, &v[i], &w[n + j]));
        acc = laurent::add(field, &acc, &t);
    }
    acc
}

/// Builds ℱ^{Λ_i}_S and runs the four validity checks.
pub fn lift_point<F: Field>(field: &F, subset: &[usize], r: usize, s: usize, lattice: usize) -> Result<LiftPoint<F::Elem>> {
    let n = r + s;
    if s > r {
        return Err(ChartError::Spec(format!("need s ≤ r, got ({r}, {s})")));
    }
    if lattice >= n {
        return Err(ChartError::Spec(format!("lattice index {lattice} out of range for n = {n}")));
    }
    let set = check_subset(n, s, subset)?;
    let star: Vec<usize> = set.iter().map(|&a| n + 1 - a).collect();
    let len = 2 * n;
    let mut gens = Vec::new();
    for &a in &star {
        gens.push(unit(field, len, a - 1, 1, 0));
        gens.push(unit(field, len, n + a - 1, 1, 0));
    }
    let minus_u = monomial(field, field.from_i64(-1), 1);
    for k in (1..=n).filter(|k| !set.contains(k)) {
        // (π − u) f_k
        gens.push(lin(field, &unit(field, len, n + k - 1, 1, 0), &unit(field, len, k - 1, 1, 0), &minus_u));
    }
    let basis = saturate(field, &gens);
    let rank_n = basis.len() == n && k_rank(field, &gens) == n;
    let mut with_pi = basis.clone();
    with_pi.extend(basis.iter().map(|v| apply_pi(v)));
    let pi_stable = k_rank(field, &with_pi) == basis.len();
    let e_basis: Vec<LVec<F::Elem>> = basis.iter().map(|v| to_e(field, lattice, v)).collect();
    let isotropic = e_basis.iter().all(|v| e_basis.iter().all(|w| alt_form(field, v, w).is_zero()));
    // π is semisimple on ℱ ⊗ K with eigenvalues ±u, so the characteristic polynomial is
    // (T − u)^s (T + u)^r iff rank(π − u) = n − s and rank(π + u) = n − r.
    let shifted = |c: i64| -> Vec<LVec<F::Elem>> {
        let cu = monomial(field, field.from_i64(c), 1);
        basis.iter().map(|v| lin(field, &apply_pi(v), v, &cu)).collect()
    };
    let char_poly = k_rank(field, &shifted(-1)) == n - s && k_rank(field, &shifted(1)) == n - r;
    let reduction = reduction_exponents(field, &basis)?;
    Ok(LiftPoint {
        n,
        lattice,
        subset: set,
        gens,
        checks: LiftChecks { pi_stable, rank_n, isotropic, char_poly },
        reduction,
    })
}

/// Reduced row echelon form over k.
fn rref<F: Field>(field: &F, mut a: Vec<Vec<F::Elem>>) -> Vec<Vec<F::Elem>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !field.is_zero(&a[i][c])) else { continue };
        a.swap(p, r);
        let inv = field.inv(&a[r][c]).expect("nonzero pivot");
        a[r] = a[r].iter().map(|x| field.mul(x, &inv)).collect();
        for i in 0..a.len() {
            if i != r && !field.is_zero(&a[i][c]) {
                let f = a[i][c].clone();
                a[i] = a[i].iter().zip(&a[r]).map(|(x, y)| field.sub(x, &field.mul(&f, y))).collect();
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// For a saturated ℱ whose reduction mod u is a π-stable coordinate subspace, the exponents
/// c_k ∈ {0, 1, 2}: 0 if f_k, πf_k ∈ ℱ̄, 1 if only πf_k ∈ ℱ̄, 2 otherwise.
pub fn reduction_exponents<F: Field>(field: &F, basis: &[LVec<F::Elem>]) -> Result<Vec<i32>> {
    let rows: Vec<Vec<F::Elem>> =
        basis.iter().map(|v| v.iter().map(|x| laurent::constant_term(field, x)).collect()).collect();
    let n = rows.first().map_or(0, |r| r.len() / 2);
    let red = rref(field, rows);
    let mut present = vec![false; 2 * n];
    for row in &red {
        let nz: Vec<usize> = (0..row.len()).filter(|&j| !field.is_zero(&row[j])).collect();
        if nz.len() != 1 {
            return Err(ChartError::NotDiagonal("reduction is not a coordinate subspace".into()));
        }
        present[nz[0]] = true;
    }
    (0..n)
        .map(|k| match (present[k], present[n + k]) {
            (true, true) => Ok(0),
            (false, true) => Ok(1),
            (false, false) => Ok(2),
            (true, false) => Err(ChartError::NotDiagonal("reduction is not π-stable".into())),
        })
        .collect()
}

/// The lift of S at every Λ_i, i = 0..n−1, as a chain of diagonal e-exponent vectors.
pub fn lift_chain<F: Field>(field: &F, subset: &[usize], r: usize, s: usize) -> Result<Vec<Vec<i32>>> {
    (0..r + s).map(|i| Ok(lift_point(field, subset, r, s, i)?.reduction_e())).collect()
}

/// The standard chain λ_i = Λ_i, i = 0..n−1, as e-exponent vectors.
pub fn standard_chain(n: usize) -> Vec<Vec<i32>> {
    (0..n).map(|i| (0..n).map(|k| -i32::from(k < i)).collect()).collect()
}

/// The element w with L_• = w·λ_• for a chain of diagonal lattices L_i = ⟨π^{c_{i,k}} e_k⟩:
/// the translation part is c_0 − d (d the common value of (c_k + c_{n+1−k})/2) and the finite
/// part sends the coordinate dropped by λ at step j to the coordinate dropped by L.
fn from_standard(chain: &[Vec<i32>], precision: i32) -> Result<Elem> {
    let n = chain.len();
    if n == 0 || chain.iter().any(|c| c.len() != n) {
        return Err(ChartError::NotDiagonal("a chain needs n lattices in dimension n".into()));
    }
    if chain.iter().flatten().any(|&c| c.abs() >= precision) {
        return Err(ChartError::Precision(format!("an exponent reaches the precision bound {precision}")));
    }
    let mut sigma = vec![0usize; n];
    let mut used = vec![false; n];
    for j in 1..=n {
        let (prev, next): (&[i32], Vec<i32>) = if j < n {
            (&chain[j - 1], chain[j].clone())
        } else {
            (&chain[n - 1], chain[0].iter().map(|c| c - 1).collect())
        };
        let diff: Vec<i32> = prev.iter().zip(&next).map(|(a, b)| a - b).collect();
        let drops: Vec<usize> = (0..n).filter(|&k| diff[k] != 0).collect();
        if drops.len() != 1 || diff[drops[0]] != 1 || used[drops[0]] {
            return Err(ChartError::NotDiagonal(format!("step {j} is not an elementary step of a periodic chain")));
        }
        used[drops[0]] = true;
        sigma[j - 1] = drops[0];
    }
    if (0..n).any(|j| sigma[n - 1 - j] != n - 1 - sigma[j]) {
        return Err(ChartError::NotDiagonal("chain is not self-dual".into()));
    }
    let c = &chain[0];
    let twice_d = c[0] + c[n - 1];
    if twice_d % 2 != 0 || (0..n).any(|k| c[k] + c[n - 1 - k] != twice_d) {
        return Err(ChartError::NotDiagonal("lattice is not self-dual up to scaling".into()));
    }
    let d = twice_d / 2;
    let m = n / 2;
    let mut inv = vec![0usize; n];
    for (j, &k) in sigma.iter().enumerate() {
        inv[k] = j;
    }
    let mut perm = Vec::with_capacity(m);
    let mut signs = Vec::with_capacity(m);
    for &j in inv.iter().take(m) {
        if j < m {
            perm.push(j as u8);
            signs.push(1);
        } else {
            perm.push((n - 1 - j) as u8);
            signs.push(-1);
        }
    }
    let t = (0..m).map(|k| i64::from(c[k] - d)).collect();
    Ok(Elem { t, sigma: SignedPerm { perm, signs } })
}

fn compose(a: &Elem, b: &Elem) -> Elem {
    // (σ₁, t₁)(σ₂, t₂) = (σ₁σ₂, σ₁t₂ + t₁)
    let t = a.sigma.apply(&b.t).iter().zip(&a.t).map(|(x, y)| x + y).collect();
    Elem { t, sigma: a.sigma.compose(&b.sigma) }
}

fn invert(a: &Elem) -> Elem {
    let si = a.sigma.inverse();
    let t = si.apply(&a.t).iter().map(|x| -x).collect();
    Elem { t, sigma: si }
}

/// Relative position inv(L, L′) = w_L⁻¹ w_{L′} of two periodic self-dual chains in the standard
/// apartment, each given by its lattices L_0, …, L_{n−1} as e-exponent vectors.
pub fn relative_position(a: &[Vec<i32>], b: &[Vec<i32>], precision: i32) -> Result<Elem> {
    let wa = from_standard(a, precision)?;
    let wb = from_standard(b, precision)?;
    Ok(compose(&invert(&wa), &wb))
}
