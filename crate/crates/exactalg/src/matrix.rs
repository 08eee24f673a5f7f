//! Dense matrices of polynomials: products, minors, characteristic polynomials, and
//! rank computations of constant matrices over a field.

use std::collections::HashMap;
use std::sync::Arc;

use crate::field::Field;
use crate::poly::{Polynomial, Ring};

/// Row-major matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<F: Field> {
    ring: Arc<Ring<F>>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(ring: &Arc<Ring<F>>, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, data: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Arc<Ring<F>>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_fn(
        ring: &Arc<Ring<F>>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial<F>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, data }
    }

    /// Embeds an integer matrix.
    pub fn from_ints(ring: &Arc<Ring<F>>, m: &[Vec<i64>]) -> Self {
        let cols = m.first().map_or(0, |r| r.len());
        Self::from_fn(ring, m.len(), cols, |i, j| Polynomial::from_int(ring, m[i][j]))
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        self.data[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn scale(&self, c: &Polynomial<F>) -> Self {
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        })
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        PolyMatrix { ring: self.ring.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn determinant(&self) -> Polynomial<F> {
        assert_eq!(self.rows, self.cols);
        let rows: Vec<usize> = (0..self.rows).collect();
        let mut cache = MinorCache::new(self);
        cache.minor(&rows, (1u64 << self.cols) - 1)
    }

    /// All `k`-minors, rows and columns in colexicographic subset order.
    pub fn minors(&self, k: usize) -> Vec<Polynomial<F>> {
        let mut cache = MinorCache::new(self);
        let mut out = Vec::new();
        for rs in subsets_colex(self.rows, k) {
            for cs in subsets_colex(self.cols, k) {
                let mask = cs.iter().fold(0u64, |m, &c| m | 1 << c);
                out.push(cache.minor(&rs, mask));
            }
        }
        out
    }

    /// Maximal minors of a tall `rows × cols` matrix (cols ≤ rows), indexed by row subsets
    /// in colexicographic order: the Plücker coordinates of its column span.
    pub fn maximal_minors(&self) -> Vec<(Vec<usize>, Polynomial<F>)> {
        assert!(self.cols <= self.rows);
        let t = self.transpose();
        let mut cache = MinorCache::new(&t);
        let rows: Vec<usize> = (0..t.rows).collect();
        subsets_colex(self.rows, self.cols)
            .into_iter()
            .map(|s| {
                let mask = s.iter().fold(0u64, |m, &c| m | 1 << c);
                let v = cache.minor(&rows, mask);
                (s, v)
            })
            .collect()
    }

    /// Coefficients c_0..c_n of det(T·I − M) = Σ c_k T^{n−k}, with c_0 = 1.
    pub fn char_poly(&self) -> Vec<Polynomial<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut cache = MinorCache::new(self);
        let mut coeffs = vec![Polynomial::one(&self.ring)];
        for k in 1..=n {
            let mut e = Polynomial::zero(&self.ring);
            for s in subsets_colex(n, k) {
                let mask = s.iter().fold(0u64, |m, &c| m | 1 << c);
                e = e.add(&cache.minor(&s, mask));
            }
            coeffs.push(if k % 2 == 1 { e.neg() } else { e });
        }
        coeffs
    }

    /// Evaluates every entry at a point, giving a constant matrix.
    pub fn evaluate(&self, point: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).evaluate(point)).collect()).collect()
    }
}

/// Laplace-expansion minors memoized on (row prefix length, column mask).
struct MinorCache<'a, F: Field> {
    m: &'a PolyMatrix<F>,
    memo: HashMap<(Vec<usize>, u64), Polynomial<F>>,
}

impl<'a, F: Field> MinorCache<'a, F> {
    fn new(m: &'a PolyMatrix<F>) -> Self {
        MinorCache { m, memo: HashMap::new() }
    }

    /// Determinant of rows `rows` (in order) against the columns in `cols` (increasing).
    fn minor(&mut self, rows: &[usize], cols: u64) -> Polynomial<F> {
        if rows.is_empty() {
            return Polynomial::one(&self.m.ring);
        }
        let key = (rows.to_vec(), cols);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        // Expand along the last row so that row prefixes are shared between minors.
        let (last, prefix) = rows.split_last().unwrap();
        let mut acc = Polynomial::zero(&self.m.ring);
        let colv: Vec<usize> = (0..64).filter(|c| cols >> c & 1 == 1).collect();
        let k = colv.len();
        for (pos, &c) in colv.iter().enumerate() {
            let a = self.m.get(*last, c);
            if a.is_zero() {
                continue;
            }
            let sub = self.minor(prefix, cols & !(1 << c));
            if sub.is_zero() {
                continue;
            }
            let term = a.mul(&sub);
            acc = if (k - 1 + pos) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// All `k`-subsets of `0..n` in colexicographic order.
pub fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        out.push(s.clone());
        // Colex successor: find the smallest i with s[i] + 1 not in s.
        let mut i = 0;
        while i < k && (if i + 1 < k { s[i] + 1 == s[i + 1] } else { s[i] + 1 == n }) {
            i += 1;
        }
        if i == k {
            return out;
        }
        s[i] += 1;
        for (j, v) in s.iter_mut().enumerate().take(i) {
            *v = j;
        }
    }
}

/// Rank of a constant matrix over a field, by Gaussian elimination.
pub fn rank<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else { continue };
        a.swap(r, p);
        let inv = field.inv(&a[r][c]).unwrap();
        for i in 0..rows {
            if i != r && !field.is_zero(&a[i][c]) {
                let f = field.mul(&a[i][c], &inv);
                for j in c..cols {
                    let v = field.mul(&f, &a[r][j]);
                    a[i][j] = field.sub(&a[i][j], &v);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Jacobian matrix of `polys` with respect to the variables `vars` (indices).
pub fn jacobian<F: Field>(polys: &[Polynomial<F>], vars: &[usize]) -> Vec<Vec<Polynomial<F>>> {
    polys.iter().map(|p| vars.iter().map(|&v| p.derivative(v)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;

    #[test]
    fn colex_order() {
        let s = subsets_colex(4, 2);
        assert_eq!(s, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_colex(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn char_poly_of_companion() {
        let r = Ring::new(Rationals, &["a", "b"], MonomialOrder::Grevlex);
        let a = Polynomial::var(&r, 0);
        let b = Polynomial::var(&r, 1);
        // Companion of T^2 - a T - b.
        let mut m = PolyMatrix::zeros(&r, 2, 2);
        m.set(0, 1, b.clone());
        m.set(1, 0, Polynomial::one(&r));
        m.set(1, 1, a.clone());
        let cp = m.char_poly();
        assert_eq!(cp[1], a.neg());
        assert_eq!(cp[2], b.neg());
        assert_eq!(m.determinant(), b.neg());
    }

    #[test]
    fn determinant_3x3() {
        let r = Ring::new(Rationals, &["x"], MonomialOrder::Grevlex);
        let m = PolyMatrix::from_ints(&r, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]);
        assert_eq!(m.determinant(), Polynomial::from_int(&r, 6));
        assert_eq!(m.minors(2).len(), 9);
    }
}
