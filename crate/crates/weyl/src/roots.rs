//! Affine root sets Φ_a from relative roots with multiplicity data.

use num::rational::Ratio;
use serde::Serialize;

use crate::group::Family;

/// A relative root β (coefficients in the x-basis), its l_β, and whether β/2 is a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelativeRoot {
    pub beta: Vec<i64>,
    pub l: i64,
    pub half_is_root: bool,
}

/// The shift set R_β = offset + step·Z.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftSet {
    pub offset: Ratio<i64>,
    pub step: Ratio<i64>,
}

impl ShiftSet {
    pub fn contains(&self, q: Ratio<i64>) -> bool {
        ((q - self.offset) / self.step).is_integer()
    }
}

/// R_β = (1/l_β)Z when β/2 ∉ Φ, else 1/(2 l_β) + (1/l_β)Z.
pub fn shift_set(root: &RelativeRoot) -> ShiftSet {
    let step = Ratio::new(1, root.l);
    let offset = if root.half_is_root { Ratio::new(1, 2 * root.l) } else { Ratio::from_integer(0) };
    ShiftSet { offset, step }
}

pub fn affine_root_set(roots: &[RelativeRoot]) -> Vec<(RelativeRoot, ShiftSet)> {
    roots.iter().map(|r| (r.clone(), shift_set(r))).collect()
}

/// Relative roots of the ramified unitary group in n variables (positive ones only).
pub fn unitary_relative_roots(n: usize) -> Vec<RelativeRoot> {
    let m = n / 2;
    let family = if n % 2 == 0 { Family::Even } else { Family::Odd };
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for sign in [-1, 1] {
                let mut b = vec![0; m];
                b[i] = 1;
                b[j] = sign;
                out.push(RelativeRoot { beta: b, l: 2, half_is_root: false });
            }
        }
    }
    for i in 0..m {
        let mut b = vec![0; m];
        if family == Family::Odd {
            b[i] = 1;
            out.push(RelativeRoot { beta: b.clone(), l: 2, half_is_root: false });
        }
        b[i] = 2;
        out.push(RelativeRoot { beta: b, l: 1, half_is_root: family == Family::Odd });
    }
    out
}

/// Root hyperplanes {β = −c : c ∈ R_β} in the coordinates y = 2x used by the group model,
/// as (primitive integer normal, set of integer levels modulo the normal's period): returns
/// pairs (normal a, level offset o, period p) meaning a·y ∈ o + pZ.
pub fn hyperplanes_scaled(roots: &[RelativeRoot]) -> Vec<(Vec<i64>, Ratio<i64>, Ratio<i64>)> {
    roots
        .iter()
        .map(|r| {
            let ss = shift_set(r);
            // β(x) + c = 0 with x = y/2: β(y) = −2c ∈ −2 R_β.
            let g = r.beta.iter().fold(0i64, |acc, &b| num::integer::gcd(acc, b));
            let normal: Vec<i64> = r.beta.iter().map(|b| b / g).collect();
            let scale = Ratio::new(2, g);
            let off = (-ss.offset * scale).reduced();
            let per = (ss.step * scale).reduced();
            // Normalize the offset into [0, period).
            let k = (off / per).floor();
            (normal, off - k * per, per)
        })
        .collect()
}
