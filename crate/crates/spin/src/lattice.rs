//! ± parts of ∧ⁿ of a lattice over the DVR O = k[u]_(u): (∧ⁿΛ ⊗ O)_± = ∧ⁿΛ ∩ (∧ⁿV ⊗ K)_±.
//!
//! A lattice is diagonal in a reference basis f_1, …, f_{2n}: Λ = ⟨u^{a_k} f_k⟩. The ±
//! decomposition is taken for a split basis g, equal to f or obtained from f by the
//! substitution of one hyperbolic pair (odd unitary case).

use std::collections::BTreeMap;

use exactalg::Field;

use crate::ae::{eigen_basis_int, Label};
use crate::error::{Result, SpinError};
use crate::laurent::{self, add, constant, monomial, mul, saturate, LVec, Laurent};
use crate::wedge::{insert_sign, wedge_indices, WedgeIndex};

/// How the split basis g is obtained from the reference basis f.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitBasis {
    /// g = f.
    Standard,
    /// g_α = f_α − u⁻¹ f_β, g_β = ½ (f_α + u⁻¹ f_β) (1-based α < β), other g_k = f_k.
    OddMiddle { alpha: usize, beta: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    pub n: usize,
    /// Λ = ⟨u^{exps[k]} f_{k+1}⟩.
    pub exps: Vec<i32>,
    pub basis: SplitBasis,
}

impl LatticeSpec {
    pub fn new(n: usize, exps: Vec<i32>, basis: SplitBasis) -> Result<Self> {
        if exps.len() != 2 * n || n == 0 {
            return Err(SpinError::Lattice(format!("need 2n = {} exponents", 2 * n)));
        }
        if let SplitBasis::OddMiddle { alpha, beta } = basis {
            if !(1 <= alpha && alpha < beta && beta <= 2 * n) {
                return Err(SpinError::Lattice("bad hyperbolic pair".into()));
            }
        }
        Ok(LatticeSpec { n, exps, basis })
    }

    /// Exponent of the lattice basis vector u^{a_R} f_R of ∧ⁿΛ.
    pub fn wedge_exp(&self, r: &[usize]) -> i32 {
        r.iter().map(|&k| self.exps[k - 1]).sum()
    }
}

type Column<E> = Vec<(usize, Laurent<E>)>;

/// g_k in terms of f (forward) or f_k in terms of g (inverse), as sparse columns.
fn basis_column<F: Field>(field: &F, basis: SplitBasis, k: usize, inverse: bool) -> Column<F::Elem> {
    let half = field.inv(&field.from_i64(2)).expect("characteristic is not 2");
    let c = |x: F::Elem, e: i32| monomial(field, x, e);
    match basis {
        SplitBasis::OddMiddle { alpha, beta } if k == alpha || k == beta => match (inverse, k == alpha) {
            // g_α = f_α − u⁻¹ f_β
            (false, true) => vec![(alpha, c(field.one(), 0)), (beta, c(field.from_i64(-1), -1))],
            // g_β = ½ f_α + ½ u⁻¹ f_β
            (false, false) => vec![(alpha, c(half.clone(), 0)), (beta, c(half, -1))],
            // f_α = ½ g_α + g_β
            (true, true) => vec![(alpha, c(half, 0)), (beta, c(field.one(), 0))],
            // f_β = −(u/2) g_α + u g_β
            (true, false) => vec![(alpha, c(field.neg(&half), 1)), (beta, c(field.one(), 1))],
        },
        _ => vec![(k, constant(field, 1))],
    }
}

/// ∧ⁿ of a change of basis applied to the wedge basis vector with index `s`.
fn wedge_transform<F: Field>(
    field: &F,
    basis: SplitBasis,
    s: &[usize],
    inverse: bool,
) -> BTreeMap<WedgeIndex, Laurent<F::Elem>> {
    let mut cur: BTreeMap<WedgeIndex, Laurent<F::Elem>> = BTreeMap::new();
    cur.insert(Vec::new(), constant(field, 1));
    for &k in s {
        let col = basis_column(field, basis, k, inverse);
        let mut next: BTreeMap<WedgeIndex, Laurent<F::Elem>> = BTreeMap::new();
        for (r, c) in &cur {
            for (l, a) in &col {
                if let Some((sg, idx)) = insert_sign(r, *l) {
                    let mut term = mul(field, c, a);
                    if sg == -1 {
                        term = laurent::neg(field, &term);
                    }
                    let e = next.entry(idx).or_insert_with(Laurent::zero);
                    *e = add(field, e, &term);
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        cur = next;
    }
    cur
}

/// An O-basis of (∧ⁿΛ ⊗ O)_label and an O-basis of linear forms cutting it out, both in the
/// coordinates of the lattice basis {u^{a_R} f_R} (indices in `wedge_indices(n)` order).
#[derive(Debug, Clone)]
pub struct PmLattice<E> {
    pub indices: Vec<WedgeIndex>,
    pub basis: Vec<LVec<E>>,
    /// Forms φ with (∧ⁿΛ ⊗ O)_label = {x : φ(x) = 0}; the quotient is torsion-free, so
    /// ∧ⁿF ⊂ (∧ⁿΛ ⊗ O)_label ⊗ O_S iff φ(∧ⁿF) = 0 for all φ.
    pub forms: Vec<LVec<E>>,
}

pub fn lattice_pm_basis<F: Field>(field: &F, spec: &LatticeSpec, label: Label) -> PmLattice<F::Elem> {
    let n = spec.n;
    let indices = wedge_indices(n);
    // Eigenvectors in g-coordinates → f-coordinates → lattice coordinates.
    let gens: Vec<LVec<F::Elem>> = eigen_basis_int(n, label)
        .into_iter()
        .map(|terms| {
            let t: Vec<(WedgeIndex, Laurent<F::Elem>)> =
                terms.into_iter().map(|(s, c)| (s, constant(field, c))).collect();
            split_to_lattice_coords(field, spec, &t)
        })
        .collect();
    // Annihilating forms: the opposite eigenvectors, read in dual coordinates g*_S. On the
    // lattice vector u^{a_R} f_R such a form takes u^{a_R} Σ_S φ_S [g_S-coefficient of f_R].
    let mut forms: Vec<LVec<F::Elem>> = Vec::new();
    let inverse: Vec<BTreeMap<WedgeIndex, Laurent<F::Elem>>> =
        indices.iter().map(|r| wedge_transform(field, spec.basis, r, true)).collect();
    for terms in eigen_basis_int(n, label.flip()) {
        let phi: BTreeMap<WedgeIndex, i64> = terms.into_iter().collect();
        let row: LVec<F::Elem> = indices
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut acc = Laurent::zero();
                for (s, a) in &inverse[i] {
                    if let Some(&c) = phi.get(s) {
                        acc = add(field, &acc, &laurent::scale(field, a, &field.from_i64(c)));
                    }
                }
                acc.shift(spec.wedge_exp(r))
            })
            .collect();
        forms.push(row);
    }
    PmLattice { indices, basis: saturate(field, &gens), forms: saturate(field, &forms) }
}

/// Applies a form to a vector: Σ φ_i x_i.
pub fn pair<F: Field>(field: &F, phi: &[Laurent<F::Elem>], x: &[Laurent<F::Elem>]) -> Laurent<F::Elem> {
    phi.iter().zip(x).fold(Laurent::zero(), |acc, (a, b)| add(field, &acc, &mul(field, a, b)))
}

/// Lattice coordinates (basis u^{a_R} f_R) of a wedge vector given in split coordinates g_S.
pub fn split_to_lattice_coords<F: Field>(
    field: &F,
    spec: &LatticeSpec,
    terms: &[(WedgeIndex, Laurent<F::Elem>)],
) -> LVec<F::Elem> {
    let indices = wedge_indices(spec.n);
    let pos: BTreeMap<&WedgeIndex, usize> = indices.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut row: LVec<F::Elem> = vec![Laurent::zero(); indices.len()];
    for (s, c) in terms {
        for (r, a) in wedge_transform(field, spec.basis, s, false) {
            let i = pos[&r];
            let v = mul(field, &a, c).shift(-spec.wedge_exp(&r));
            row[i] = add(field, &row[i], &v);
        }
    }
    row
}

/// JSON form {"n": …, "terms": [[[subset…], "coeff"], …]} with Laurent coefficient strings.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct WedgeVectorJson {
    pub n: usize,
    pub terms: Vec<(WedgeIndex, String)>,
}

pub fn lattice_vector_json<F: Field>(field: &F, n: usize, indices: &[WedgeIndex], v: &[Laurent<F::Elem>]) -> WedgeVectorJson {
    WedgeVectorJson {
        n,
        terms: indices
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| (s.clone(), laurent::format(field, c)))
            .collect(),
    }
}
