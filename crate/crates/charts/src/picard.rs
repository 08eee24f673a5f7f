//! The Picard chart at I = {1}: n = 3, (r, s) = (2, 1), ℱ = column span of [X; I] in the basis
//! (e_3, π⁻¹e_1, e_2, πe_3, e_1, πe_2) of Λ_1.

use std::sync::Arc;

use exactalg::matrix::{jacobian, rank};
use exactalg::{Field, Ideal, MonomialOrder, PolyMatrix, Polynomial, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{ChartError, Result};
use crate::frame::{var_matrix, Frame};
use crate::unitary::PICARD_VARS;

#[derive(Debug, Clone)]
pub struct PicardChart<F: Field> {
    pub ring: Arc<Ring<F>>,
    /// Isotropy ᵗM·G·M = 0, X² = u²·I and a + d + w = u.
    pub ideal: Ideal<F>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PicardReport {
    /// Imposing w = −u and eliminating everything but x, y, u leaves the zero ideal.
    pub eliminated_is_zero: bool,
    /// After w = −u the remaining variables are polynomial functions of (x, y, u).
    pub graph_over_xy: bool,
    /// 2c − x², d − a − xy, −2b − y² lie in the ideal with w = −u.
    pub lu_identity: bool,
    /// w + u lies in the u-saturation.
    pub w_persists: bool,
    /// Points sampled on the w = −u locus, and those lying on it with Jacobian corank 2.
    pub jacobian_points: usize,
    pub jacobian_corank2: usize,
}

impl PicardReport {
    pub fn all_pass(&self) -> bool {
        self.eliminated_is_zero
            && self.graph_over_xy
            && self.lu_identity
            && self.w_persists
            && self.jacobian_points > 0
            && self.jacobian_corank2 == self.jacobian_points
    }
}

fn var<F: Field>(ring: &Arc<Ring<F>>, name: &str) -> Polynomial<F> {
    Polynomial::var_named(ring, name).expect("Picard variable")
}

pub fn picard_i1_chart<F: Field>(field: &F) -> Result<PicardChart<F>> {
    let mut names: Vec<&str> = PICARD_VARS.to_vec();
    names.push("u");
    let ring = Ring::new(field.clone(), &names, MonomialOrder::Grevlex);
    let frame = Frame::picard_i1();
    let u = 9;
    let x = var_matrix(&ring, 3);
    let m = frame.chart_matrix(&ring, &x);
    let iso = m.transpose().mul(&frame.gram(&ring, u)?).mul(&m);
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            gens.push(iso.get(i, j).clone());
        }
    }
    let uv = Polynomial::var(&ring, u);
    let sq = x.mul(&x).sub(&PolyMatrix::identity(&ring, 3).scale(&uv.mul(&uv)));
    gens.extend(sq.entries().iter().cloned());
    // Trace condition in the convention char_X = (T − u)^r (T + u)^s, under which the identity
    // w = −u persists; the chart convention (T − u)^s (T + u)^r differs by u ↦ −u.
    gens.push(var(&ring, "a").add(&var(&ring, "d")).add(&var(&ring, "w")).sub(&uv));
    let ideal = Ideal::from_nonzero(&ring, gens).ok_or_else(|| ChartError::Spec("empty Picard system".into()))?;
    Ok(PicardChart { ring, ideal })
}

impl<F: Field> PicardChart<F> {
    /// The ideal with w = −u imposed.
    pub fn with_w_fixed(&self) -> Result<Ideal<F>> {
        let w_plus_u = var(&self.ring, "w").add(&var(&self.ring, "u"));
        Ok(self.ideal.add_generators(vec![w_plus_u])?)
    }

    /// Values of all ten variables at the point of the w = −u locus over (x, y, u), computed
    /// from a lex basis in which every other variable is a polynomial in (x, y, u).
    fn graph(&self) -> Result<Option<Vec<Polynomial<F>>>> {
        let order = ["a", "b", "p", "c", "d", "q", "w", "x", "y", "u"];
        let ring = Ring::new(self.ring.field.clone(), &order, MonomialOrder::Lex);
        let j = self.with_w_fixed()?.to_ring(&ring)?;
        let mut out = Vec::new();
        for i in 0..order.len() {
            if i >= 7 {
                out.push(Polynomial::var(&ring, i));
                continue;
            }
            let nf = j.normal_form(&Polynomial::var(&ring, i))?;
            if (0..7).any(|k| nf.uses_var(k)) {
                return Ok(None);
            }
            out.push(nf);
        }
        // Reorder to the chart ring's variable order.
        let res = self
            .ring
            .vars
            .iter()
            .map(|name| out[order.iter().position(|o| o == name).expect("variable")].clone())
            .collect();
        Ok(Some(res))
    }

    pub fn report(&self, samples: usize, seed: u64) -> Result<PicardReport> {
        let field = &self.ring.field;
        let fixed = self.with_w_fixed()?;
        let eliminated_is_zero =
            fixed.eliminate(&["a", "b", "p", "c", "d", "q", "w"])?.is_none();
        let v = |s: &str| var(&self.ring, s);
        let two = Polynomial::from_int(&self.ring, 2);
        let lu = [
            two.mul(&v("c")).sub(&v("x").pow(2)),
            v("d").sub(&v("a")).sub(&v("x").mul(&v("y"))),
            two.mul(&v("b")).neg().sub(&v("y").pow(2)),
        ];
        let mut lu_identity = true;
        for g in &lu {
            lu_identity &= fixed.contains(g)?;
        }
        let w_persists = self.ideal.saturate(&v("u"))?.contains(&v("w").add(&v("u")))?;
        let graph = self.graph()?;
        let graph_over_xy = graph.is_some();
        let mut corank2 = 0;
        let mut points = 0;
        if let Some(graph) = graph {
            let lex_ring = graph[0].ring().clone();
            let idx = |s: &str| lex_ring.var_index(s).expect("variable");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let gens = fixed.gens().to_vec();
            let jac = jacobian(&gens, &(0..9).collect::<Vec<_>>());
            for _ in 0..samples {
                let mut pt = vec![field.zero(); lex_ring.nvars()];
                for s in ["x", "y", "u"] {
                    pt[idx(s)] = field.from_i64(rng.gen_range(-1000..1000));
                }
                let values: Vec<F::Elem> = graph.iter().map(|g| g.evaluate(&pt)).collect();
                points += 1;
                if !gens.iter().all(|g| field.is_zero(&g.evaluate(&values))) {
                    continue;
                }
                let jm: Vec<Vec<F::Elem>> =
                    jac.iter().map(|row| row.iter().map(|p| p.evaluate(&values)).collect()).collect();
                if 9 - rank(field, &jm) == 2 {
                    corank2 += 1;
                }
            }
        }
        Ok(PicardReport {
            eliminated_is_zero,
            graph_over_xy,
            lu_identity,
            w_persists,
            jacobian_points: points,
            jacobian_corank2: corank2,
        })
    }
}
