//! Index combinatorics of ∧ⁿ of a 2n-dimensional space and wedge vectors.

use std::collections::BTreeMap;

use exactalg::Field;

use crate::error::{Result, SpinError};

/// A strictly increasing n-subset of {1, …, 2n}.
pub type WedgeIndex = Vec<usize>;

/// All n-subsets of {1, …, 2n} in lexicographic order.
pub fn wedge_indices(n: usize) -> Vec<WedgeIndex> {
    fn rec(start: usize, total: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<WedgeIndex>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=total {
            if total - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, total, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, 2 * n, n, &mut Vec::new(), &mut out);
    out
}

pub fn check_index(s: &[usize], n: usize) -> Result<()> {
    let ok = s.len() == n && s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&x| (1..=2 * n).contains(&x));
    if ok {
        Ok(())
    } else {
        Err(SpinError::BadIndex(s.to_vec(), n))
    }
}

/// Complement in {1, …, 2n}.
pub fn complement(s: &[usize], n: usize) -> WedgeIndex {
    (1..=2 * n).filter(|x| !s.contains(x)).collect()
}

/// 2n + 1 − S, sorted.
pub fn reflect(s: &[usize], n: usize) -> WedgeIndex {
    let mut r: Vec<usize> = s.iter().map(|x| 2 * n + 1 - x).collect();
    r.sort_unstable();
    r
}

/// S* = (2n + 1 − S)^c, the partner of S under a_e in a split basis.
pub fn partner(s: &[usize], n: usize) -> WedgeIndex {
    complement(&reflect(s, n), n)
}

/// Sign of a permutation given in one-line notation, by inversion count.
pub fn perm_sign(p: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

/// sign(σ_S), where σ_S sends 1..n to the elements of 2n+1−S in decreasing order and
/// n+1..2n to the elements of (2n+1−S)^c in increasing order.
pub fn sigma_sign(s: &[usize], n: usize) -> Result<i8> {
    check_index(s, n)?;
    let mut r = reflect(s, n);
    r.reverse();
    let mut one_line = r;
    one_line.extend(partner(s, n));
    Ok(perm_sign(&one_line))
}

/// η_S with e_S ∧ e_{S^c} = η_S · e_1 ∧ … ∧ e_{2n}.
pub fn eta(s: &[usize], n: usize) -> i8 {
    let mut p = s.to_vec();
    p.extend(complement(s, n));
    perm_sign(&p)
}

/// Sign of e_R ∧ e_l against e_{R ∪ {l}} (sorted), or `None` if l ∈ R.
pub fn insert_sign(r: &[usize], l: usize) -> Option<(i8, WedgeIndex)> {
    if r.contains(&l) {
        return None;
    }
    let greater = r.iter().filter(|&&x| x > l).count();
    let mut out = r.to_vec();
    out.push(l);
    out.sort_unstable();
    Some((if greater % 2 == 0 { 1 } else { -1 }, out))
}

/// A vector of ∧ⁿF^{2n} in the basis e_S.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeVector<F: Field> {
    pub n: usize,
    pub terms: BTreeMap<WedgeIndex, F::Elem>,
}

impl<F: Field> WedgeVector<F> {
    pub fn zero(n: usize) -> Self {
        WedgeVector { n, terms: BTreeMap::new() }
    }

    pub fn basis(field: &F, n: usize, s: &[usize]) -> Result<Self> {
        check_index(s, n)?;
        let mut terms = BTreeMap::new();
        terms.insert(s.to_vec(), field.one());
        Ok(WedgeVector { n, terms })
    }

    pub fn from_ints(field: &F, n: usize, terms: &[(&[usize], i64)]) -> Result<Self> {
        let mut v = WedgeVector::zero(n);
        for (s, c) in terms {
            check_index(s, n)?;
            v.add_term(field, s.to_vec(), field.from_i64(*c));
        }
        Ok(v)
    }

    pub fn add_term(&mut self, field: &F, s: WedgeIndex, c: F::Elem) {
        let e = self.terms.entry(s.clone()).or_insert_with(|| field.zero());
        *e = field.add(e, &c);
        if field.is_zero(e) {
            self.terms.remove(&s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        let mut out = WedgeVector::zero(self.n);
        for (s, a) in &self.terms {
            out.add_term(field, s.clone(), field.mul(a, c));
        }
        out
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, a) in &other.terms {
            out.add_term(field, s.clone(), a.clone());
        }
        out
    }

    /// Coordinates in the lexicographic basis of `wedge_indices(n)`.
    pub fn to_dense(&self, field: &F) -> Vec<F::Elem> {
        wedge_indices(self.n)
            .iter()
            .map(|s| self.terms.get(s).cloned().unwrap_or_else(|| field.zero()))
            .collect()
    }
}

/// Determinant by Gaussian elimination.
pub fn det<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let k = m.len();
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let mut d = field.one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !field.is_zero(&a[r][c])) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            d = field.neg(&d);
        }
        d = field.mul(&d, &a[c][c]);
        let inv = field.inv(&a[c][c]).unwrap();
        for r in c + 1..k {
            if field.is_zero(&a[r][c]) {
                continue;
            }
            let f = field.mul(&a[r][c], &inv);
            for j in c..k {
                let t = field.mul(&f, &a[c][j]);
                a[r][j] = field.sub(&a[r][j], &t);
            }
        }
    }
    d
}

/// Rank by Gaussian elimination.
pub fn rank<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else { continue };
        a.swap(p, r);
        let inv = field.inv(&a[r][c]).unwrap();
        for i in 0..rows {
            if i != r && !field.is_zero(&a[i][c]) {
                let f = field.mul(&a[i][c], &inv);
                for j in c..cols {
                    let t = field.mul(&f, &a[r][j]);
                    a[i][j] = field.sub(&a[i][j], &t);
                }
            }
        }
        r += 1;
    }
    r
}

/// Plücker vector ∧ⁿW of the row space of an n × 2n matrix.
pub fn plucker<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> Result<WedgeVector<F>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != 2 * n) {
        return Err(SpinError::Dimension("expected an n x 2n matrix".into()));
    }
    let mut v = WedgeVector::zero(n);
    for s in wedge_indices(n) {
        let minor: Vec<Vec<F::Elem>> =
            rows.iter().map(|r| s.iter().map(|&c| r[c - 1].clone()).collect()).collect();
        v.add_term(field, s, det(field, &minor));
    }
    Ok(v)
}
