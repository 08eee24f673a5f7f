//! Laurent polynomials in the uniformizer u over an exact field, and O-lattices in K^N for
//! the DVR O = k[u]_(u) with fraction field K = k(u).

use std::collections::BTreeMap;

use exactalg::Field;

/// Σ c_e u^e with finitely many nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent<E> {
    pub terms: BTreeMap<i32, E>,
}

impl<E: Clone + PartialEq> Laurent<E> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// u-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, k: i32) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }
}

pub fn monomial<F: Field>(field: &F, c: F::Elem, e: i32) -> Laurent<F::Elem> {
    let mut terms = BTreeMap::new();
    if !field.is_zero(&c) {
        terms.insert(e, c);
    }
    Laurent { terms }
}

pub fn constant<F: Field>(field: &F, c: i64) -> Laurent<F::Elem> {
    monomial(field, field.from_i64(c), 0)
}

pub fn add<F: Field>(field: &F, a: &Laurent<F::Elem>, b: &Laurent<F::Elem>) -> Laurent<F::Elem> {
    let mut out = a.clone();
    for (e, c) in &b.terms {
        let v = out.terms.entry(*e).or_insert_with(|| field.zero());
        *v = field.add(v, c);
        if field.is_zero(v) {
            out.terms.remove(e);
        }
    }
    out
}

pub fn neg<F: Field>(field: &F, a: &Laurent<F::Elem>) -> Laurent<F::Elem> {
    Laurent { terms: a.terms.iter().map(|(e, c)| (*e, field.neg(c))).collect() }
}

pub fn sub<F: Field>(field: &F, a: &Laurent<F::Elem>, b: &Laurent<F::Elem>) -> Laurent<F::Elem> {
    add(field, a, &neg(field, b))
}

pub fn scale<F: Field>(field: &F, a: &Laurent<F::Elem>, c: &F::Elem) -> Laurent<F::Elem> {
    if field.is_zero(c) {
        return Laurent::zero();
    }
    Laurent { terms: a.terms.iter().map(|(e, x)| (*e, field.mul(x, c))).collect() }
}

pub fn mul<F: Field>(field: &F, a: &Laurent<F::Elem>, b: &Laurent<F::Elem>) -> Laurent<F::Elem> {
    let mut out = Laurent::zero();
    for (e1, c1) in &a.terms {
        for (e2, c2) in &b.terms {
            out = add(field, &out, &monomial(field, field.mul(c1, c2), e1 + e2));
        }
    }
    out
}

/// Coefficient of u^0.
pub fn constant_term<F: Field>(field: &F, a: &Laurent<F::Elem>) -> F::Elem {
    a.terms.get(&0).cloned().unwrap_or_else(|| field.zero())
}

pub fn format<F: Field>(field: &F, a: &Laurent<F::Elem>) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (e, c) in &a.terms {
        let cs = field.format(c);
        let p = match *e {
            0 => cs,
            1 if field.is_one(c) => "u".into(),
            _ if field.is_one(c) => format!("u^{e}"),
            1 => format!("{cs}*u"),
            _ => format!("{cs}*u^{e}"),
        };
        parts.push(p);
    }
    parts.join(" + ").replace("+ -", "- ")
}

pub type LVec<E> = Vec<Laurent<E>>;

/// Minimal valuation of a vector (`None` for the zero vector).
pub fn vec_valuation<E: Clone + PartialEq>(v: &[Laurent<E>]) -> Option<i32> {
    v.iter().filter_map(|x| x.valuation()).min()
}

fn is_zero_vec<E: Clone + PartialEq>(v: &[Laurent<E>]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Fraction-free row echelon over k[u, u⁻¹]: K-independent rows with the same K-span.
pub fn k_basis<F: Field>(field: &F, rows: &[LVec<F::Elem>]) -> Vec<LVec<F::Elem>> {
    let mut a: Vec<LVec<F::Elem>> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        // Pivot: the entry with fewest terms, to limit growth.
        let Some(p) = (r..a.len())
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].terms.len())
        else {
            continue;
        };
        a.swap(p, r);
        let piv = a[r][c].clone();
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let new: LVec<F::Elem> = (0..cols)
                .map(|j| sub(field, &mul(field, &piv, &a[i][j]), &mul(field, &f, &a[r][j])))
                .collect();
            a[i] = normalize_row(&new);
        }
        r += 1;
        a.retain(|row| !is_zero_vec(row));
        if r >= a.len() {
            break;
        }
    }
    a.truncate(r.min(a.len()));
    a.into_iter().filter(|row| !is_zero_vec(row)).collect()
}

/// Multiplies by a power of u so the minimal valuation is 0.
pub fn normalize_row<E: Clone + PartialEq>(v: &[Laurent<E>]) -> LVec<E> {
    match vec_valuation(v) {
        None => v.to_vec(),
        Some(k) => v.iter().map(|x| x.shift(-k)).collect(),
    }
}

/// Rank over K.
pub fn k_rank<F: Field>(field: &F, rows: &[LVec<F::Elem>]) -> usize {
    k_basis(field, rows).len()
}

/// Rank of the reduction mod u of rows with nonnegative valuations.
pub fn mod_u_rank<F: Field>(field: &F, rows: &[LVec<F::Elem>]) -> usize {
    let m: Vec<Vec<F::Elem>> = rows.iter().map(|r| r.iter().map(|x| constant_term(field, x)).collect()).collect();
    crate::wedge::rank(field, &m)
}

/// A nonzero c ∈ k^d with Σ c_i (row_i mod u) = 0, if one exists.
fn mod_u_dependency<F: Field>(field: &F, rows: &[LVec<F::Elem>]) -> Option<Vec<F::Elem>> {
    let d = rows.len();
    let cols = rows.first().map_or(0, |r| r.len());
    // Row-reduce [M | I] and look for a zero row in the M part.
    let mut a: Vec<Vec<F::Elem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v: Vec<F::Elem> = r.iter().map(|x| constant_term(field, x)).collect();
            v.extend((0..d).map(|j| if i == j { field.one() } else { field.zero() }));
            v
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..d).find(|&i| !field.is_zero(&a[i][c])) else { continue };
        a.swap(p, r);
        let inv = field.inv(&a[r][c]).unwrap();
        for i in 0..d {
            if i != r && !field.is_zero(&a[i][c]) {
                let f = field.mul(&a[i][c], &inv);
                for j in 0..cols + d {
                    let t = field.mul(&f, &a[r][j]);
                    a[i][j] = field.sub(&a[i][j], &t);
                }
            }
        }
        r += 1;
    }
    (r < d).then(|| a[r][cols..].to_vec())
}

/// The saturation (K-span of `rows`) ∩ O^N, as a basis whose reduction mod u is independent.
/// Entries of the output are polynomials in u.
pub fn saturate<F: Field>(field: &F, rows: &[LVec<F::Elem>]) -> Vec<LVec<F::Elem>> {
    // Rows with disjoint supports do not interact: saturate each connected block separately.
    let mut out = Vec::new();
    let cols = rows.first().map_or(0, |r| r.len());
    for block in row_blocks(rows) {
        let support: Vec<usize> =
            (0..cols).filter(|&c| block.iter().any(|&i| !rows[i][c].is_zero())).collect();
        let sub: Vec<LVec<F::Elem>> =
            block.iter().map(|&i| support.iter().map(|&c| rows[i][c].clone()).collect()).collect();
        for r in saturate_block(field, &sub) {
            let mut full: LVec<F::Elem> = vec![Laurent::zero(); cols];
            for (x, &c) in r.into_iter().zip(&support) {
                full[c] = x;
            }
            out.push(full);
        }
    }
    out
}

/// Groups row indices into classes connected through shared nonzero columns.
fn row_blocks<E: Clone + PartialEq>(rows: &[LVec<E>]) -> Vec<Vec<usize>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut parent: Vec<usize> = (0..rows.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut owner: Vec<Option<usize>> = vec![None; cols];
    for (i, row) in rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match owner[c] {
                None => owner[c] = Some(i),
                Some(j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for i in 0..rows.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

fn saturate_block<F: Field>(field: &F, rows: &[LVec<F::Elem>]) -> Vec<LVec<F::Elem>> {
    let mut b: Vec<LVec<F::Elem>> = k_basis(field, rows).iter().map(|r| normalize_row(r)).collect();
    while let Some(c) = mod_u_dependency(field, &b) {
        let i = c.iter().rposition(|x| !field.is_zero(x)).expect("nonzero dependency");
        let cols = b[i].len();
        let mut combo: LVec<F::Elem> = vec![Laurent::zero(); cols];
        for (j, cj) in c.iter().enumerate() {
            if field.is_zero(cj) {
                continue;
            }
            for k in 0..cols {
                combo[k] = add(field, &combo[k], &scale(field, &b[j][k], cj));
            }
        }
        b[i] = normalize_row(&combo);
    }
    b
}

/// Whether the rows have entries in O and independent reductions mod u.
pub fn is_saturated<F: Field>(field: &F, rows: &[LVec<F::Elem>]) -> bool {
    rows.iter().all(|r| vec_valuation(r).is_none_or(|v| v >= 0) && r.iter().all(|x| x.valuation().is_none_or(|v| v >= 0)))
        && mod_u_rank(field, rows) == rows.len()
}

/// Equality of two saturated lattices: same K-span.
pub fn same_lattice<F: Field>(field: &F, a: &[LVec<F::Elem>], b: &[LVec<F::Elem>]) -> bool {
    if !is_saturated(field, a) || !is_saturated(field, b) {
        return false;
    }
    let ra = k_rank(field, a);
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    ra == k_rank(field, b) && ra == k_rank(field, &both)
}
