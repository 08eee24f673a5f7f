//! Candidate equations of the closure of the orbit of (2^s, 1^r) in 𝔭 for the symmetric pairs,
//! and their comparison with special fibers of wedge charts.

use std::sync::Arc;

use charts::unitary::{antidiagonal, symplectic_j};
use charts::{chart_ideal, Case, ChartSpec, Level};
use exactalg::{Field, Ideal, MonomialOrder, PolyMatrix, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::error::{OrbitError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetricPair {
    /// Xᵗ = HXH.
    Orthogonal,
    /// Xᵗ = −JXJ, n even.
    Symplectic,
}

/// Dimension rs of the fixed points of the orbit of (2^s, 1^r).
pub fn orbit_dim(r: usize, s: usize) -> usize {
    r * s
}

fn check(n: usize, s: usize, pair: SymmetricPair) -> Result<()> {
    if s > n {
        return Err(OrbitError::Parity(format!("s = {s} exceeds n = {n}")));
    }
    if pair == SymmetricPair::Symplectic && (n % 2 == 1 || s % 2 == 1) {
        return Err(OrbitError::Parity(format!("the symplectic pair needs n and s even, got n = {n}, s = {s}")));
    }
    Ok(())
}

/// Ring k[x_11, …, x_nn].
pub fn matrix_ring<F: Field>(field: &F, n: usize) -> Arc<Ring<F>> {
    let vars = (1..=n).flat_map(|i| (1..=n).map(move |j| format!("x{i}{j}"))).collect();
    Ring::from_names(field.clone(), vars, MonomialOrder::Grevlex)
}

/// X² = 0, the symmetry of the pair, char_X(T) = Tⁿ, ∧^{s+1}X = 0 and ∧^{r+1}X = 0.
pub fn orbit_closure_ideal<F: Field>(field: &F, n: usize, s: usize, pair: SymmetricPair) -> Result<Ideal<F>> {
    check(n, s, pair)?;
    let r = n - s;
    let ring = matrix_ring(field, n);
    let x = PolyMatrix::from_fn(&ring, n, n, |i, j| Polynomial::var(&ring, i * n + j));
    let mut gens: Vec<Polynomial<F>> = x.mul(&x).entries().to_vec();
    let sym = match pair {
        SymmetricPair::Orthogonal => {
            let h = PolyMatrix::from_ints(&ring, &antidiagonal(n));
            x.transpose().sub(&h.mul(&x).mul(&h))
        }
        SymmetricPair::Symplectic => {
            let j = PolyMatrix::from_ints(&ring, &symplectic_j(n));
            x.transpose().add(&j.mul(&x).mul(&j))
        }
    };
    gens.extend(sym.entries().iter().cloned());
    gens.extend(x.char_poly().into_iter().skip(1));
    gens.extend(x.minors(s + 1));
    if r + 1 <= n {
        gens.extend(x.minors(r + 1));
    }
    Ideal::from_nonzero(&ring, gens).ok_or_else(|| OrbitError::Parity("empty system".into()))
}

/// Comparison of the special fiber of the wedge chart with the orbit-closure candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberComparison {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub pair: SymmetricPair,
    pub expected_dim: usize,
    pub fiber_dim: Option<usize>,
    pub orbit_dim: Option<usize>,
    /// Every orbit generator lies in the radical of the fiber ideal.
    pub orbit_in_fiber_radical: bool,
    /// Every fiber generator lies in the radical of the orbit ideal.
    pub fiber_in_orbit_radical: bool,
    /// The two ideals coincide (not only their radicals).
    pub ideals_equal: bool,
}

impl FiberComparison {
    /// Equal dimensions rs and equal radicals.
    pub fn consistent(&self) -> bool {
        self.fiber_dim == Some(self.expected_dim)
            && self.orbit_dim == Some(self.expected_dim)
            && self.orbit_in_fiber_radical
            && self.fiber_in_orbit_radical
    }
}

fn all_in_radical<F: Field>(ideal: &Ideal<F>, gens: &[Polynomial<F>]) -> Result<bool> {
    for g in gens {
        if !ideal.radical_contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The orthogonal pair is compared with the case-A chart (n odd), the symplectic pair with the
/// case-B chart (n and s even).
pub fn special_fiber_vs_orbit<F: Field>(field: &F, n: usize, r: usize, s: usize, pair: SymmetricPair) -> Result<FiberComparison> {
    check(n, s, pair)?;
    let case = match pair {
        SymmetricPair::Orthogonal if n % 2 == 1 => Case::A,
        SymmetricPair::Orthogonal => {
            return Err(OrbitError::Parity(format!("the orthogonal pair is compared with odd-n charts, got n = {n}")))
        }
        SymmetricPair::Symplectic => Case::B,
    };
    let chart = chart_ideal(field, &ChartSpec::new(case, n, r, s, Level::Wedge)?)?;
    let orbit = orbit_closure_ideal(field, n, s, pair)?;
    let fiber = match chart.special_fiber("u")? {
        Some(f) => f.to_ring(orbit.ring())?,
        None => return Err(OrbitError::Parity("the special fiber is the whole space".into())),
    };
    Ok(FiberComparison {
        n,
        r,
        s,
        pair,
        expected_dim: orbit_dim(r, s),
        fiber_dim: fiber.krull_dim()?,
        orbit_dim: orbit.krull_dim()?,
        orbit_in_fiber_radical: all_in_radical(&fiber, orbit.gens())?,
        fiber_in_orbit_radical: all_in_radical(&orbit, fiber.gens())?,
        ideals_equal: fiber.equals(&orbit)?,
    })
}
