//! Point counts of zero-dimensional schemes over the algebraic closure, via radicals of
//! zero-dimensional ideals (adjoin square-free parts of the minimal polynomials of the
//! coordinate functions) and the number of standard monomials.

use crate::error::{AlgError, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Standard monomials of a zero-dimensional ideal (those outside the leading-term ideal).
pub fn standard_monomials<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Monomial>> {
    let lms = ideal.leading_monomials()?;
    let n = ideal.ring().nvars();
    let mut bounds = vec![None; n];
    for m in &lms {
        if let Some(i) = (0..n).find(|&i| m.exp(i) as u32 == m.degree()) {
            let e = m.exp(i);
            bounds[i] = Some(bounds[i].map_or(e, |b: u16| b.min(e)));
        }
    }
    if bounds.iter().any(|b| b.is_none()) {
        return Err(AlgError::NotZeroDimensional);
    }
    let bounds: Vec<u16> = bounds.into_iter().map(|b| b.unwrap()).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    loop {
        let m = Monomial::from_exps(&exps);
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Number of points over the algebraic closure of the zero set of a zero-dimensional ideal.
/// The unit ideal has zero points.
pub fn count_points<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    if ideal.is_unit()? {
        return Ok(0);
    }
    let radical = zero_dim_radical(ideal)?;
    Ok(standard_monomials(&radical)?.len())
}

/// Radical of a zero-dimensional ideal over a perfect field.
pub fn zero_dim_radical<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = ideal.ring().clone();
    let mut extra = Vec::new();
    for i in 0..ring.nvars() {
        let minpoly = minimal_polynomial(ideal, i)?;
        let sf = squarefree(&ring.field, &minpoly);
        // Univariate dense coefficients (low to high) back to a ring polynomial.
        let x = Polynomial::var(&ring, i);
        let mut p = Polynomial::zero(&ring);
        for c in sf.iter().rev() {
            p = p.mul(&x).add(&Polynomial::constant(&ring, c.clone()));
        }
        extra.push(p);
    }
    ideal.add_generators(extra)
}

/// Minimal polynomial of variable `i` modulo a zero-dimensional ideal, dense low-to-high, monic.
pub fn minimal_polynomial<F: Field>(ideal: &Ideal<F>, i: usize) -> Result<Vec<F::Elem>> {
    let basis = standard_monomials(ideal)?;
    let ring = ideal.ring();
    let field = &ring.field;
    let index = |m: &Monomial| basis.iter().position(|b| b == m);
    let x = Polynomial::var(ring, i);
    // Echelon rows: (pivot column, vector, combination of powers producing it).
    let mut rows: Vec<(usize, Vec<F::Elem>, Vec<F::Elem>)> = Vec::new();
    let mut power = Polynomial::one(ring);
    for k in 0..=basis.len() {
        let nf = ideal.normal_form(&power)?;
        let mut v = vec![field.zero(); basis.len()];
        for (m, c) in nf.terms() {
            let j = index(m).ok_or_else(|| AlgError::Invalid("normal form outside basis".into()))?;
            v[j] = c.clone();
        }
        let mut comb = vec![field.zero(); k + 1];
        comb[k] = field.one();
        for (piv, rv, rc) in &rows {
            if !field.is_zero(&v[*piv]) {
                let f = v[*piv].clone();
                for (a, b) in v.iter_mut().zip(rv) {
                    *a = field.sub(a, &field.mul(&f, b));
                }
                for (a, b) in comb.iter_mut().zip(rc) {
                    *a = field.sub(a, &field.mul(&f, b));
                }
            }
        }
        match v.iter().position(|c| !field.is_zero(c)) {
            None => return Ok(comb),
            Some(piv) => {
                let inv = field.inv(&v[piv]).unwrap();
                let v: Vec<_> = v.iter().map(|c| field.mul(c, &inv)).collect();
                let comb: Vec<_> = comb.iter().map(|c| field.mul(c, &inv)).collect();
                rows.push((piv, v, comb));
            }
        }
        power = power.mul(&x);
    }
    Err(AlgError::Invalid("no linear dependence among powers".into()))
}

// Dense univariate helpers, coefficients low to high with no trailing zeros.

fn trim<F: Field>(field: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
    while a.last().is_some_and(|c| field.is_zero(c)) {
        a.pop();
    }
    a
}

fn deriv<F: Field>(field: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let d = a.iter().enumerate().skip(1).map(|(k, c)| field.mul(c, &field.from_i64(k as i64)));
    trim(field, d.collect())
}

fn divrem<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = field.inv(&b[db]).unwrap();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![field.zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = field.mul(&r[k + db], &inv);
        if !field.is_zero(&c) {
            for (j, bc) in b.iter().enumerate() {
                r[k + j] = field.sub(&r[k + j], &field.mul(&c, bc));
            }
        }
        q[k] = c;
    }
    (trim(field, q), trim(field, r))
}

fn monic_dense<F: Field>(field: &F, a: Vec<F::Elem>) -> Vec<F::Elem> {
    match a.last() {
        None => a,
        Some(l) => {
            let inv = field.inv(l).unwrap();
            a.iter().map(|c| field.mul(c, &inv)).collect()
        }
    }
}

fn gcd<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let (mut a, mut b) = (trim(field, a.to_vec()), trim(field, b.to_vec()));
    while !b.is_empty() {
        let (_, r) = divrem(field, &a, &b);
        a = b;
        b = r;
    }
    monic_dense(field, a)
}

fn mul_dense<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    trim(field, out)
}

/// Product of the distinct irreducible factors (monic). Over F_p a polynomial with zero
/// derivative is a p-th power, and p-th roots of prime-field coefficients are themselves.
pub fn squarefree<F: Field>(field: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let a = monic_dense(field, trim(field, a.to_vec()));
    if a.len() <= 1 {
        return vec![field.one()];
    }
    let d = deriv(field, &a);
    let p = field.characteristic() as usize;
    if d.is_empty() {
        let root: Vec<_> = a.iter().step_by(p).cloned().collect();
        return squarefree(field, &root);
    }
    let c = gcd(field, &a, &d);
    let (w, _) = divrem(field, &a, &c);
    let mut c = c;
    loop {
        let g = gcd(field, &c, &w);
        if g.len() <= 1 {
            break;
        }
        c = divrem(field, &c, &g).0;
    }
    if c.len() <= 1 {
        return monic_dense(field, w);
    }
    let root: Vec<_> = c.iter().step_by(p.max(1)).cloned().collect();
    monic_dense(field, mul_dense(field, &w, &squarefree(field, &root)))
}

/// Points of a multi-projective zero-dimensional scheme. `groups` lists, for each projective
/// factor, the indices of its homogeneous coordinates; every generator must be
/// multi-homogeneous. Points are counted by stratifying each factor according to its first
/// nonzero coordinate.
pub fn count_points_multiprojective<F: Field>(
    ideal: &Ideal<F>,
    groups: &[Vec<usize>],
) -> Result<usize> {
    let ring = ideal.ring();
    let field = &ring.field;
    let mut total = 0;
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut extra = Vec::new();
        for (g, &j) in groups.iter().zip(&choice) {
            for &k in &g[..j] {
                extra.push(Polynomial::var(ring, k));
            }
            extra.push(Polynomial::var(ring, g[j]).sub(&Polynomial::constant(ring, field.one())));
        }
        total += count_points(&ideal.add_generators(extra)?)?;
        let mut k = 0;
        loop {
            if k == groups.len() {
                return Ok(total);
            }
            choice[k] += 1;
            if choice[k] < groups[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::MonomialOrder;
    use crate::poly::Ring;

    #[test]
    fn squarefree_handles_pth_powers() {
        let f = PrimeField::new(3).unwrap();
        // (x+1)^3 (x+2)^2 x over F_3
        let lin = |c: u64| vec![c, 1u64];
        let mut a = vec![1u64];
        for p in [lin(1), lin(1), lin(1), lin(2), lin(2), lin(0)] {
            a = mul_dense(&f, &a, &p);
        }
        let expected = mul_dense(&f, &mul_dense(&f, &lin(1), &lin(2)), &lin(0));
        assert_eq!(squarefree(&f, &a), expected);
    }

    #[test]
    fn counts_fat_points_once() {
        let r = Ring::new(PrimeField::new(5).unwrap(), &["x", "y"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        // x^2 (x-1) = 0, y^2 = 0: two points, one of them fat.
        let i = Ideal::new(vec![x.pow(2).mul(&x.sub(&one)), y.pow(2)]).unwrap();
        assert_eq!(count_points(&i).unwrap(), 2);
    }

    #[test]
    fn counts_conjugate_points() {
        // x^2 + 1 over F_3 is irreducible: still two points over the closure.
        let r = Ring::new(PrimeField::new(3).unwrap(), &["x"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let i = Ideal::new(vec![x.pow(2).add(&Polynomial::one(&r))]).unwrap();
        assert_eq!(count_points(&i).unwrap(), 2);
    }
}
