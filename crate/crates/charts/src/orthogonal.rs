//! Two split orthogonal local models over O = k[u]_(u) with uniformizer p = u².
//!
//! Example 1 (n = 1, I = {0, 1}) in homogeneous coordinates: ℱ_0 = [a : b] ⊂ Λ_0 = ⟨e_1, e_2⟩
//! and ℱ_1 = [c : d] ⊂ Λ_1 = ⟨p⁻¹e_1, e_2⟩. Example 2 (n = 2, I = {1}) in the affine chart
//! ℱ_{−1} = ⟨e_1 + x_2e_2 + x_3e_3, y_2e_2 + y_3e_3 + pe_4⟩ and
//! ℱ_1 = ⟨−y_3p⁻¹e_1 + e_2 − x_3e_4, −y_2p⁻¹e_1 + e_3 − x_2e_4⟩.

use std::sync::Arc;

use exactalg::{Field, Ideal, MonomialOrder, PolyMatrix, Polynomial, Ring};
use spin::lattice::lattice_pm_basis;
use spin::unitary::orthogonal_lattice;
use spin::{Label, LatticeSpec, SplitBasis};

use crate::error::Result;
use crate::frame::{forms_to_polys, plucker_map};
use crate::spec::{Level, OrthExample};

pub const EXAMPLE1_VARS: [&str; 5] = ["a", "b", "c", "d", "u"];
pub const EXAMPLE2_VARS: [&str; 5] = ["x2", "x3", "y2", "y3", "u"];

/// Projective coordinate groups of Example 1 (indices of a, b and of c, d).
pub fn example1_groups() -> Vec<Vec<usize>> {
    vec![vec![0, 1], vec![2, 3]]
}

pub fn orthogonal_ring<F: Field>(field: &F, which: OrthExample) -> Arc<Ring<F>> {
    let vars = match which {
        OrthExample::Example1 => EXAMPLE1_VARS,
        OrthExample::Example2 => EXAMPLE2_VARS,
    };
    Ring::new(field.clone(), &vars, MonomialOrder::Grevlex)
}

/// Λ_j over k[u]: the lattice over k[p] with exponents doubled.
fn lattice(n: usize, j: i64) -> Result<LatticeSpec> {
    let base = orthogonal_lattice(n, j)?;
    Ok(LatticeSpec::new(n, base.exps.iter().map(|e| 2 * e).collect(), SplitBasis::Standard)?)
}

/// Each lattice of the chain with the matrix whose columns give ℱ in its lattice basis.
fn filtrations<F: Field>(ring: &Arc<Ring<F>>, which: OrthExample) -> Result<Vec<(LatticeSpec, PolyMatrix<F>)>> {
    let v = |i: usize| Polynomial::var(ring, i);
    let c = |k: i64| Polynomial::from_int(ring, k);
    let col = |entries: Vec<Polynomial<F>>| {
        let n = entries.len();
        let mut m = PolyMatrix::zeros(ring, n, 1);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, 0, e);
        }
        m
    };
    match which {
        OrthExample::Example1 => Ok(vec![
            (lattice(1, 0)?, col(vec![v(0), v(1)])),
            (lattice(1, 1)?, col(vec![v(2), v(3)])),
        ]),
        OrthExample::Example2 => {
            let (x2, x3, y2, y3) = (v(0), v(1), v(2), v(3));
            let fm = col(vec![c(1), x2.clone(), x3.clone(), c(0)]).hstack(&col(vec![
                c(0),
                y2.clone(),
                y3.clone(),
                c(1),
            ]));
            let fp = col(vec![y3.neg(), c(1), c(0), x3.neg()]).hstack(&col(vec![y2.neg(), c(0), c(1), x2.neg()]));
            Ok(vec![(lattice(2, -1)?, fm), (lattice(2, 1)?, fp)])
        }
    }
}

/// Isotropy and chain conditions of the naive model.
pub fn orthogonal_naive_gens<F: Field>(ring: &Arc<Ring<F>>, which: OrthExample) -> Vec<Polynomial<F>> {
    let v = |i: usize| Polynomial::var(ring, i);
    let u2 = v(4).pow(2);
    match which {
        // ab, cd, bc − u²ad
        OrthExample::Example1 => vec![v(0).mul(&v(1)), v(2).mul(&v(3)), v(1).mul(&v(2)).sub(&u2.mul(&v(0)).mul(&v(3)))],
        OrthExample::Example2 => {
            let (x2, x3, y2, y3) = (v(0), v(1), v(2), v(3));
            let mixed = x2.mul(&y3).add(&x3.mul(&y2)).add(&u2);
            vec![x2.mul(&x3), y2.mul(&y3), mixed, x2.mul(&y2), x3.mul(&y3)]
        }
    }
}

/// Spin conditions of the given label on every ℱ_j.
pub fn orthogonal_spin_constraints<F: Field>(
    ring: &Arc<Ring<F>>,
    which: OrthExample,
    label: Label,
) -> Result<Vec<Polynomial<F>>> {
    let u = ring.nvars() - 1;
    let mut out = Vec::new();
    for (spec, m) in filtrations(ring, which)? {
        let pm = lattice_pm_basis(&ring.field, &spec, label);
        out.extend(forms_to_polys(ring, u, &pm.indices, &pm.forms, &plucker_map(&m))?);
    }
    Ok(out)
}

/// The naive ideal plus the spin conditions of one label.
pub fn orthogonal_label_ideal<F: Field>(field: &F, which: OrthExample, label: Label) -> Result<Ideal<F>> {
    let ring = orthogonal_ring(field, which);
    let mut gens = orthogonal_naive_gens(&ring, which);
    gens.extend(orthogonal_spin_constraints(&ring, which, label)?);
    Ok(Ideal::new(gens)?)
}

/// Chart ideal at a level. The wedge condition is vacuous here, so wedge = naive. At level spin,
/// Example 1 is the union of the + and − components and Example 2 the + component.
pub fn orthogonal_chart_ideal<F: Field>(field: &F, which: OrthExample, level: Level) -> Result<Ideal<F>> {
    let ring = orthogonal_ring(field, which);
    match level {
        Level::Naive | Level::Wedge => Ok(Ideal::new(orthogonal_naive_gens(&ring, which))?),
        Level::Spin => match which {
            OrthExample::Example1 => {
                let plus = orthogonal_label_ideal(field, which, Label::Plus)?;
                let minus = orthogonal_label_ideal(field, which, Label::Minus)?;
                Ok(plus.intersect(&minus)?)
            }
            OrthExample::Example2 => orthogonal_label_ideal(field, which, Label::Plus),
        },
    }
}
