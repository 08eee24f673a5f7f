//! Affine charts of the unitary naive, wedge and spin local models at special and Picard
//! parahoric levels, as ideals in k[x_ij, u] with π₀ = u².

use std::sync::Arc;

use exactalg::{Field, Ideal, MonomialOrder, PolyMatrix, Polynomial, Ring};
use spin::Label;

use crate::error::{ChartError, Result};
use crate::frame::{
    char_poly_conditions, graph_conditions, matrix_vars, spin_constraints_for, var_matrix, wedge_conditions, Frame,
};
use crate::orthogonal::orthogonal_chart_ideal;
use crate::spec::{Case, ChartSpec, Level};

/// Unit antidiagonal matrix H_n.
pub fn antidiagonal(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i + j + 1 == n)).collect()).collect()
}

/// J_n = [[0, H_m], [−H_m, 0]] for n = 2m.
pub fn symplectic_j(n: usize) -> Vec<Vec<i64>> {
    let m = n / 2;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < m && j >= m && i + (j - m) + 1 == m {
                        1
                    } else if i >= m && j < m && (i - m) + j + 1 == m {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// Variable names of the Picard chart, row-major: X = [[a, b, p], [c, d, q], [x, y, w]].
pub const PICARD_VARS: [&str; 9] = ["a", "b", "p", "c", "d", "q", "x", "y", "w"];

/// The chart ring for a spec: matrix variables followed by `u`.
pub fn chart_ring<F: Field>(field: &F, spec: &ChartSpec) -> Arc<Ring<F>> {
    let vars = match spec.case {
        Case::PicardI1 => {
            let mut v: Vec<String> = PICARD_VARS.iter().map(|s| s.to_string()).collect();
            v.push("u".into());
            v
        }
        _ => matrix_vars(spec.n),
    };
    Ring::from_names(field.clone(), vars, MonomialOrder::Grevlex)
}

pub fn frame_for(spec: &ChartSpec) -> Result<Frame> {
    match spec.case {
        Case::A => Ok(Frame::case_a(spec.n)),
        Case::B => Ok(Frame::case_b(spec.n)),
        Case::B1 => Ok(Frame::case_b1(spec.n)),
        Case::PicardI1 => Ok(Frame::picard_i1()),
        Case::Orth(_) => Err(ChartError::Spec("orthogonal examples have no unitary frame".into())),
    }
}

/// Generators of the chart ideal, grouped in the documented order.
pub fn chart_generators<F: Field>(field: &F, spec: &ChartSpec) -> Result<(Arc<Ring<F>>, Vec<Polynomial<F>>)> {
    spec.validate()?;
    if let Case::Orth(which) = spec.case {
        let ideal = orthogonal_chart_ideal(field, which, spec.level)?;
        return Ok((ideal.ring().clone(), ideal.gens().to_vec()));
    }
    let ring = chart_ring(field, spec);
    let n = spec.n;
    let u = ring.nvars() - 1;
    let x = var_matrix(&ring, n);
    let (r, s) = (spec.r, spec.s);
    let wedge = spec.level >= Level::Wedge;
    let mut gens = match spec.case {
        Case::A | Case::B => {
            let uv = Polynomial::var(&ring, u);
            let mut g = Vec::new();
            // X² − u²·I
            let sq = x.mul(&x).sub(&PolyMatrix::identity(&ring, n).scale(&uv.mul(&uv)));
            g.extend(sq.entries().iter().cloned());
            // Xᵗ − HXH, resp. Xᵗ + JXJ
            let sym = if spec.case == Case::A {
                let h = PolyMatrix::from_ints(&ring, &antidiagonal(n));
                x.transpose().sub(&h.mul(&x).mul(&h))
            } else {
                let j = PolyMatrix::from_ints(&ring, &symplectic_j(n));
                x.transpose().add(&j.mul(&x).mul(&j))
            };
            g.extend(sym.entries().iter().cloned());
            g.extend(char_poly_conditions(&x, u, r, s));
            if wedge {
                g.extend(wedge_conditions(&x, u, r, s));
            }
            g
        }
        _ => graph_conditions(&frame_for(spec)?, &ring, &x, u, r, s, wedge)?,
    };
    if spec.level == Level::Spin {
        gens.extend(spin_constraints(field, spec)?.1);
    }
    Ok((ring, gens))
}

/// The chart ideal of a spec (zero generators dropped, order otherwise preserved).
pub fn chart_ideal<F: Field>(field: &F, spec: &ChartSpec) -> Result<Ideal<F>> {
    let (ring, gens) = chart_generators(field, spec)?;
    Ideal::from_nonzero(&ring, gens).ok_or_else(|| ChartError::Spec("chart ideal is zero".into()))
}

/// The linear Plücker conditions expressing ∧ⁿℱ ⊂ (∧ⁿΛ ⊗ O)_± with ± = (−1)^s, for the
/// graph parameterization of the chart.
pub fn spin_constraints<F: Field>(field: &F, spec: &ChartSpec) -> Result<(Arc<Ring<F>>, Vec<Polynomial<F>>)> {
    spec.validate()?;
    if let Case::Orth(which) = spec.case {
        let ring_ideal = orthogonal_chart_ideal(field, which, Level::Naive)?;
        let ring = ring_ideal.ring().clone();
        let cons = crate::orthogonal::orthogonal_spin_constraints(&ring, which, Label::Plus)?;
        return Ok((ring, cons));
    }
    let ring = chart_ring(field, spec);
    let u = ring.nvars() - 1;
    let frame = frame_for(spec)?;
    let x = var_matrix(&ring, spec.n);
    let m = frame.chart_matrix(&ring, &x);
    let cons = spin_constraints_for(&frame, &m, u, Label::for_signature_s(spec.s))?;
    Ok((ring, cons))
}
