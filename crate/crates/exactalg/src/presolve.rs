//! Removal of variables that some generator expresses linearly in the others.

use std::sync::Arc;

use crate::error::Result;
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

/// Result of eliminating linearly determined variables. `substitutions` records, for each
/// removed variable, its expression in the remaining ones.
#[derive(Debug, Clone)]
pub struct Presolved<F: Field> {
    pub ideal: Option<Ideal<F>>,
    pub ring: Arc<Ring<F>>,
    pub substitutions: Vec<(String, Polynomial<F>)>,
}

/// Repeatedly picks a generator of the form c·x + g where x is unprotected and occurs
/// nowhere in g, substitutes x = −g/c everywhere, and drops x. The quotient rings before and
/// after are isomorphic as algebras over the protected variables.
pub fn eliminate_linear<F: Field>(ideal: &Ideal<F>, protect: &[&str]) -> Result<Presolved<F>> {
    let ring = ideal.ring().clone();
    let field = &ring.field;
    let n = ring.nvars();
    let mut gens: Vec<Polynomial<F>> = ideal.gens().to_vec();
    let mut removed = vec![false; n];
    let mut subs: Vec<(usize, Polynomial<F>)> = Vec::new();
    loop {
        let mut pick = None;
        'search: for (gi, g) in gens.iter().enumerate() {
            for (m, c) in g.terms() {
                if m.degree() != 1 {
                    continue;
                }
                let v = (0..n).find(|&i| m.exp(i) == 1).unwrap();
                if protect.contains(&ring.vars[v].as_str()) || g.degree_in(v) != 1 {
                    continue;
                }
                // x must occur only in this linear term.
                if g.terms().iter().filter(|(t, _)| t.exp(v) > 0).count() == 1 {
                    pick = Some((gi, v, c.clone()));
                    break 'search;
                }
            }
        }
        let Some((gi, v, c)) = pick else { break };
        let g = gens.remove(gi);
        let inv = field.inv(&c).unwrap();
        let xv = Polynomial::var(&ring, v);
        // x = x - g / c.
        let expr = xv.sub(&g.scale(&inv));
        let images: Vec<Polynomial<F>> =
            (0..n).map(|i| if i == v { expr.clone() } else { Polynomial::var(&ring, i) }).collect();
        gens = gens
            .iter()
            .map(|h| if h.uses_var(v) { h.substitute(&ring, &images) } else { h.clone() })
            .filter(|h| !h.is_zero())
            .collect();
        for (_, e) in subs.iter_mut() {
            if e.uses_var(v) {
                *e = e.substitute(&ring, &images);
            }
        }
        subs.push((v, expr));
        removed[v] = true;
    }
    let vars: Vec<String> =
        (0..n).filter(|&i| !removed[i]).map(|i| ring.vars[i].clone()).collect();
    let small = Ring::from_names(field.clone(), vars, ring.order);
    let gens = gens.iter().map(|g| g.to_ring(&small)).collect::<Result<Vec<_>>>()?;
    let substitutions = subs
        .into_iter()
        .map(|(v, e)| Ok((ring.vars[v].clone(), e.to_ring(&small)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Presolved {
        ideal: Ideal::from_nonzero(&small, gens).map(|i| i.with_budget(ideal.budget())),
        ring: small,
        substitutions,
    })
}
