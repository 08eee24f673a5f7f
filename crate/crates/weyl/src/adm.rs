//! Admissible sets, their double-coset images, and the vertex-wise admissibility check.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::bruhat::downward_closure;
use crate::error::{Result, WeylError};
use crate::group::{AffineGroup, Elem, Family, SignedPerm};

/// Hard cap on the size of enumerated admissible sets.
pub const ADM_CAP: usize = 2_000_000;

pub fn check_signature(n: usize, r: usize, s: usize) -> Result<()> {
    if r + s != n || s > r {
        return Err(WeylError::Signature { n, r, s });
    }
    Ok(())
}

/// λ_s = (1^(s), 0^(m−s)).
pub fn coweight_image(n: usize, r: usize, s: usize) -> Result<Vec<i64>> {
    check_signature(n, r, s)?;
    let m = n / 2;
    if s > m {
        return Err(WeylError::Signature { n, r, s });
    }
    Ok((0..m).map(|i| i64::from(i < s)).collect())
}

/// The W_0-orbit of a coweight, sorted.
pub fn weyl_orbit(g: &AffineGroup, lambda: &[i64]) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> =
        SignedPerm::all(g.m).iter().map(|s| s.apply(lambda)).collect();
    set.into_iter().collect()
}

/// The extreme elements t_{w_0 λ_s}.
pub fn extreme_elements(g: &AffineGroup, r: usize, s: usize) -> Result<Vec<Elem>> {
    let lambda = coweight_image(g.n, r, s)?;
    Ok(weyl_orbit(g, &lambda).into_iter().map(Elem::translation).collect())
}

/// Adm(μ_{r,s}): the downward Bruhat closure of the extreme elements, sorted by length
/// descending.
pub fn admissible_set(g: &AffineGroup, r: usize, s: usize) -> Result<Vec<Elem>> {
    let tops = extreme_elements(g, r, s)?;
    downward_closure(g, &tops, ADM_CAP)
        .ok_or_else(|| WeylError::BudgetExhausted(format!("more than {ADM_CAP} admissible elements")))
}

/// Histogram length → count.
pub fn length_histogram(g: &AffineGroup, set: &[Elem]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for w in set {
        *h.entry(g.length(w)).or_insert(0) += 1;
    }
    h
}

/// Dominant representative of W_0 · x: absolute values sorted decreasingly.
pub fn dominant(x: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = x.iter().map(|a| a.abs()).collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// Dominance order on dominant coweights: `a ≤ b` iff b − a is a nonnegative integer
/// combination of positive coroots.
pub fn dominance_leq(g: &AffineGroup, a: &[i64], b: &[i64]) -> bool {
    let d: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
    let partial: Vec<i64> = d.iter().scan(0, |acc, x| {
        *acc += x;
        Some(*acc)
    }).collect();
    if partial.iter().any(|&p| p < 0) {
        return false;
    }
    // Coroots e_i − e_j, e_i + e_j and 2e_i (n even) resp. e_i (n odd). With nonnegative
    // partial sums, n odd always works; n even needs an even total.
    match g.family {
        Family::Odd => true,
        Family::Even => partial.last().copied().unwrap_or(0) % 2 == 0,
    }
}

/// Adm_0(μ): the descending chain of dominant coweights given by the closed forms
/// (λ_s > λ_{s−1} > … > λ_0 for n odd; λ_s > λ_{s−2} > … for n even).
pub fn adm0(n: usize, r: usize, s: usize) -> Result<Vec<Vec<i64>>> {
    coweight_image(n, r, s)?;
    let m = n / 2;
    let step = if n % 2 == 0 { 2 } else { 1 };
    let mut out = Vec::new();
    let mut k = s as i64;
    while k >= 0 {
        out.push((0..m).map(|i| i64::from((i as i64) < k)).collect());
        k -= step;
    }
    Ok(out)
}

/// Adm_0 by a route independent of the closed form: all dominant coweights ≤ λ_s in the
/// dominance order, searched in the box [0, 2]^m (entries above 1 never qualify).
pub fn adm0_by_dominance(g: &AffineGroup, r: usize, s: usize) -> Result<Vec<Vec<i64>>> {
    let lambda = coweight_image(g.n, r, s)?;
    let mut out = Vec::new();
    let m = g.m;
    let mut x = vec![0i64; m];
    loop {
        let dominant_x = x.windows(2).all(|w| w[0] >= w[1]);
        if dominant_x && dominance_leq(g, &x, &lambda) {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == m {
                out.sort_by(|a, b| b.cmp(a));
                return Ok(out);
            }
            x[k] += 1;
            if x[k] <= 2 {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// Adm_0 as the image of Adm(μ) in W_0\W̃/W_0 (dominant translation parts).
pub fn adm0_by_projection(g: &AffineGroup, r: usize, s: usize) -> Result<Vec<Vec<i64>>> {
    let adm = admissible_set(g, r, s)?;
    let set: BTreeSet<Vec<i64>> = adm.iter().map(|w| dominant(&w.t)).collect();
    Ok(set.into_iter().rev().collect())
}

/// Generators `s_k`, `k ∉ vertices`, of the parabolic subgroup W^Y fixing the facet `vertices`.
pub fn facet_generators(g: &AffineGroup, vertices: &BTreeSet<usize>) -> Vec<usize> {
    (0..=g.m).filter(|k| !vertices.contains(k)).collect()
}

/// Minimal-length representative of W^Y w W^Y, where Y is a nonempty vertex set.
pub fn project_double_coset(g: &AffineGroup, w: &Elem, vertices: &BTreeSet<usize>) -> Elem {
    let gens = facet_generators(g, vertices);
    let mut cur = w.clone();
    let mut len = g.length(&cur);
    loop {
        let mut moved = false;
        for &k in &gens {
            let s = g.simple(k);
            for cand in [g.mul(&s, &cur), g.mul(&cur, &s)] {
                let l = g.length(&cand);
                if l < len {
                    cur = cand;
                    len = l;
                    moved = true;
                }
            }
        }
        if !moved {
            return cur;
        }
    }
}

/// Adm^Y(μ) = W^Y Adm(μ) W^Y as a set of minimal double-coset representatives.
pub fn admissible_cosets(g: &AffineGroup, adm: &[Elem], vertices: &BTreeSet<usize>) -> BTreeSet<Elem> {
    adm.iter().map(|w| project_double_coset(g, w, vertices)).collect()
}

/// A failure of the vertex-wise identity: a double coset in every pullback but not in Adm^I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexwiseReport {
    pub holds: bool,
    /// Number of double cosets W^I w W^I lying in all the pullbacks.
    pub intersection_size: usize,
    pub adm_size: usize,
    pub counterexample: Option<Elem>,
}

/// Decides Adm^I(μ) = ⋂_{i∈I} π^{-1}(Adm^{{i}}(μ)) in W^I\W̃/W^I by enumeration: candidates
/// are the double cosets meeting W^{i0} Adm W^{i0} for one i0 ∈ I.
pub fn vertexwise_check(
    g: &AffineGroup,
    r: usize,
    s: usize,
    vertices: &BTreeSet<usize>,
) -> Result<VertexwiseReport> {
    if vertices.is_empty() || vertices.iter().any(|&v| v > g.m) {
        return Err(WeylError::Parahoric(format!("{vertices:?} is not a nonempty vertex set")));
    }
    let adm = admissible_set(g, r, s)?;
    let adm_i = admissible_cosets(g, &adm, vertices);
    let singles: Vec<(BTreeSet<usize>, BTreeSet<Elem>)> = vertices
        .iter()
        .map(|&v| {
            let y: BTreeSet<usize> = [v].into();
            let cos = admissible_cosets(g, &adm, &y);
            (y, cos)
        })
        .collect();
    // Candidates: W^{i0} Adm W^{i0}, projected to W^I double cosets.
    let (y0, _) = &singles[0];
    let w0 = g.parabolic_subgroup(&facet_generators(g, y0));
    let mut candidates: HashSet<Elem> = HashSet::new();
    for a in &adm {
        for x in &w0 {
            let xa = g.mul(x, a);
            for y in &w0 {
                candidates.insert(project_double_coset(g, &g.mul(&xa, y), vertices));
            }
        }
    }
    let mut inter: Vec<Elem> = candidates
        .into_iter()
        .filter(|c| singles.iter().all(|(y, cos)| cos.contains(&project_double_coset(g, c, y))))
        .collect();
    inter.sort();
    let counterexample = inter.iter().find(|c| !adm_i.contains(c)).cloned();
    Ok(VertexwiseReport {
        holds: counterexample.is_none(),
        intersection_size: inter.len(),
        adm_size: adm_i.len(),
        counterexample,
    })
}
