//! The chart around ℱ₁ for n even and s odd: after solving the linear relations it is the chart
//! U_{r−1,s−1} of rank n − 2 in the block Y times an affine space of dimension n − 1.

use exactalg::presolve::eliminate_linear;
use exactalg::{Field, Ideal, Polynomial};

use crate::error::{ChartError, Result};
use crate::spec::{Case, ChartSpec, Level};
use crate::unitary::chart_ideal;

/// In the chart matrix X (rows: f_n, πf_n, f_2, …, f_{n−1}; columns: f_1, πf_1, πf_2, …,
/// πf_{n−1}) the free coordinates are x = x11 and B₂ = (x23, …, x2n), and Y = (x_ij)_{i,j ≥ 3}.
pub fn free_vars(n: usize) -> Vec<String> {
    let mut v = vec!["x11".to_string()];
    v.extend((3..=n).map(|j| format!("x2{j}")));
    v
}

pub fn y_vars(n: usize) -> Vec<String> {
    (3..=n).flat_map(|i| (3..=n).map(move |j| format!("x{i}{j}"))).collect()
}

#[derive(Debug, Clone)]
pub struct Reduction<F: Field> {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    /// The B1 chart ideal.
    pub chart: Ideal<F>,
    /// Variables left after linear elimination.
    pub remaining: Vec<String>,
    /// The reduced ideal (`None` if zero).
    pub reduced: Option<Ideal<F>>,
    /// Substitutions for the eliminated variables.
    pub substitutions: Vec<(String, Polynomial<F>)>,
    /// The remaining variables are exactly x, B₂, Y and u.
    pub variables_match: bool,
    /// The reduced ideal equals the case-B chart of rank n − 2 in Y.
    pub ideal_matches: bool,
}

pub fn chart_even_sodd_reduction<F: Field>(field: &F, n: usize, r: usize, s: usize) -> Result<Reduction<F>> {
    if n % 2 == 1 || s % 2 == 0 || n < 4 {
        return Err(ChartError::Parity(format!("need n ≥ 4 even and s odd, got n = {n}, s = {s}")));
    }
    let chart = chart_ideal(field, &ChartSpec::new(Case::B1, n, r, s, Level::Naive)?)?;
    let mut protect = free_vars(n);
    protect.extend(y_vars(n));
    protect.push("u".into());
    let protect_refs: Vec<&str> = protect.iter().map(String::as_str).collect();
    let pre = eliminate_linear(&chart, &protect_refs)?;
    let remaining = pre.ring.vars.clone();
    let variables_match = {
        let mut a = remaining.clone();
        let mut b = protect.clone();
        a.sort();
        b.sort();
        a == b
    };
    let target = chart_ideal(field, &ChartSpec::new(Case::B, n - 2, r - 1, s - 1, Level::Naive)?)?;
    let ideal_matches = match (&pre.ideal, variables_match) {
        (Some(reduced), true) => {
            // x_ij of the small chart ↦ x_{i+2, j+2}; u ↦ u.
            let small = target.ring();
            let images: Vec<Polynomial<F>> = small
                .vars
                .iter()
                .map(|v| {
                    let name = if v == "u" {
                        "u".to_string()
                    } else {
                        let i: usize = v[1..2].parse().expect("index");
                        let j: usize = v[2..3].parse().expect("index");
                        format!("x{}{}", i + 2, j + 2)
                    };
                    Polynomial::var_named(&pre.ring, &name)
                })
                .collect::<exactalg::Result<_>>()?;
            let mapped: Vec<Polynomial<F>> = target.gens().iter().map(|g| g.substitute(&pre.ring, &images)).collect();
            match Ideal::from_nonzero(&pre.ring, mapped) {
                Some(m) => m.equals(reduced)?,
                None => false,
            }
        }
        _ => false,
    };
    Ok(Reduction {
        n,
        r,
        s,
        chart,
        remaining,
        reduced: pre.ideal,
        substitutions: pre.substitutions,
        variables_match,
        ideal_matches,
    })
}
