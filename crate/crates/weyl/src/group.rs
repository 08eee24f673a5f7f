//! The Iwahori–Weyl groups of ramified unitary groups as groups of affine maps of R^m.
//!
//! Coordinates are scaled so that the affine root hyperplanes are
//! `y_i ± y_j ∈ Z` together with `y_i ∈ Z` (n = 2m, finite root system of type B_m) or
//! `2 y_i ∈ Z` (n = 2m + 1, type C_m). An element `(t, σ)` acts by `y ↦ σ y + t`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, WeylError};

/// Which of the two ramified unitary families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// n = 2m: Σ of type B_m, W_a of index 2 in the Iwahori–Weyl group.
    Even,
    /// n = 2m + 1: Σ of type C_m, W_a equals the Iwahori–Weyl group.
    Odd,
}

/// A signed permutation of {0..m}: `(σ y)_i = signs[i] * y[perm[i]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    pub perm: Vec<u8>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(m: usize) -> Self {
        SignedPerm { perm: (0..m as u8).collect(), signs: vec![1; m] }
    }

    pub fn apply(&self, y: &[i64]) -> Vec<i64> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| s as i64 * y[p as usize]).collect()
    }

    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        // (σ1 σ2 y)_i = s1_i * s2_{π1 i} * y[π2(π1 i)]
        let perm = self.perm.iter().map(|&p| other.perm[p as usize]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * other.signs[p as usize])
            .collect();
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let m = self.perm.len();
        let mut perm = vec![0u8; m];
        let mut signs = vec![1i8; m];
        for i in 0..m {
            let p = self.perm[i] as usize;
            perm[p] = i as u8;
            signs[p] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i) && self.signs.iter().all(|&s| s == 1)
    }

    /// All 2^m m! signed permutations, in a fixed order.
    pub fn all(m: usize) -> Vec<SignedPerm> {
        let mut perms: Vec<Vec<u8>> = vec![Vec::new()];
        for k in 0..m as u8 {
            let mut next = Vec::new();
            for p in &perms {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    next.push(q);
                }
            }
            perms = next;
        }
        perms.sort();
        let mut out = Vec::new();
        for p in perms {
            for mask in 0..(1u32 << m) {
                let signs = (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPerm { perm: p.clone(), signs });
            }
        }
        out
    }
}

/// An element `y ↦ σ y + t` of the Iwahori–Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub t: Vec<i64>,
    pub sigma: SignedPerm,
}

impl Elem {
    pub fn translation(t: Vec<i64>) -> Self {
        let m = t.len();
        Elem { t, sigma: SignedPerm::identity(m) }
    }

    pub fn finite(sigma: SignedPerm) -> Self {
        Elem { t: vec![0; sigma.perm.len()], sigma }
    }

    pub fn is_translation(&self) -> bool {
        self.sigma.is_identity()
    }

    pub fn apply(&self, y: &[i64]) -> Vec<i64> {
        self.sigma.apply(y).iter().zip(&self.t).map(|(a, b)| a + b).collect()
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let img: Vec<String> = self
            .sigma
            .perm
            .iter()
            .zip(&self.sigma.signs)
            .map(|(&p, &s)| format!("{}{}", if s < 0 { "-" } else { "" }, p + 1))
            .collect();
        write!(f, "t{:?}·[{}]", self.t, img.join(" "))
    }
}

/// JSON form of an element: 1-based permutation, signs, translation and Ω-component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemJson {
    pub t: Vec<i64>,
    pub perm: Vec<u8>,
    pub signs: Vec<i8>,
    pub omega: u8,
}

/// The group attached to n ≥ 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineGroup {
    pub n: usize,
    pub m: usize,
    pub family: Family,
    /// Positive roots of Σ as integer coefficient vectors.
    roots: Vec<Vec<i64>>,
    /// Denominator of the base-alcove reference point `(m, m-1, …, 1) / denom`.
    denom: i64,
}

/// Summary of the finite and affine root data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineData {
    pub n: usize,
    pub m: usize,
    /// "B_m" or "C_m" (the type of Σ).
    pub sigma_type: String,
    /// Positive coroots, as integer vectors.
    pub positive_coroots: Vec<Vec<i64>>,
    /// Description of Q∨ inside P∨ = Z^m.
    pub coroot_lattice: String,
    pub omega_order: usize,
    pub simple_reflections: Vec<ElemJson>,
}

impl AffineGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(WeylError::RankTooSmall(n));
        }
        let m = n / 2;
        let family = if n % 2 == 0 { Family::Even } else { Family::Odd };
        let mut roots = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let mut a = vec![0; m];
                a[i] = 1;
                a[j] = -1;
                roots.push(a.clone());
                a[j] = 1;
                roots.push(a);
            }
        }
        for i in 0..m {
            let mut a = vec![0; m];
            a[i] = if family == Family::Even { 1 } else { 2 };
            roots.push(a);
        }
        let denom = if family == Family::Even { 2 * m as i64 } else { 2 * m as i64 + 1 };
        Ok(AffineGroup { n, m, family, roots, denom })
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Positive coroots α∨ = 2α/(α,α).
    pub fn positive_coroots(&self) -> Vec<Vec<i64>> {
        self.roots
            .iter()
            .map(|a| {
                let norm: i64 = a.iter().map(|x| x * x).sum();
                a.iter().map(|x| 2 * x / norm).collect()
            })
            .collect()
    }

    pub fn data(&self) -> AffineData {
        AffineData {
            n: self.n,
            m: self.m,
            sigma_type: match self.family {
                Family::Even => format!("B_{}", self.m),
                Family::Odd => format!("C_{}", self.m),
            },
            positive_coroots: self.positive_coroots(),
            coroot_lattice: match self.family {
                Family::Even => "{x in Z^m : sum(x) even}".into(),
                Family::Odd => "Z^m".into(),
            },
            omega_order: if self.family == Family::Even { 2 } else { 1 },
            simple_reflections: (0..=self.m).map(|k| self.to_json(&self.simple(k))).collect(),
        }
    }

    pub fn identity(&self) -> Elem {
        Elem::translation(vec![0; self.m])
    }

    /// Simple affine reflection `s_k`, k ∈ 0..=m. `s_0` is the affine one; `s_i` (1 ≤ i < m)
    /// swaps y_i and y_{i+1}; `s_m` negates y_m.
    pub fn simple(&self, k: usize) -> Elem {
        let m = self.m;
        assert!(k <= m);
        let mut sigma = SignedPerm::identity(m);
        let mut t = vec![0; m];
        if k == 0 {
            match self.family {
                Family::Odd => {
                    // Reflection in 2 y_1 = 1.
                    sigma.signs[0] = -1;
                    t[0] = 1;
                }
                Family::Even => {
                    // Reflection in y_1 + y_2 = 1.
                    sigma.perm.swap(0, 1);
                    sigma.signs[0] = -1;
                    sigma.signs[1] = -1;
                    t[0] = 1;
                    t[1] = 1;
                }
            }
        } else if k < m {
            sigma.perm.swap(k - 1, k);
        } else {
            sigma.signs[m - 1] = -1;
        }
        Elem { t, sigma }
    }

    /// The length-zero element generating Ω (n even): y ↦ (1 − y_1, y_2, …).
    pub fn tau(&self) -> Option<Elem> {
        if self.family == Family::Odd {
            return None;
        }
        let mut sigma = SignedPerm::identity(self.m);
        sigma.signs[0] = -1;
        let mut t = vec![0; self.m];
        t[0] = 1;
        Some(Elem { t, sigma })
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let st = a.sigma.apply(&b.t);
        Elem {
            t: st.iter().zip(&a.t).map(|(x, y)| x + y).collect(),
            sigma: a.sigma.compose(&b.sigma),
        }
    }

    pub fn inverse(&self, a: &Elem) -> Elem {
        let inv = a.sigma.inverse();
        let t = inv.apply(&a.t).into_iter().map(|x| -x).collect();
        Elem { t, sigma: inv }
    }

    /// Image in Ω = W̃ / W_a: Σ t mod 2 for n even, trivial for n odd.
    pub fn omega(&self, w: &Elem) -> u8 {
        match self.family {
            Family::Even => w.t.iter().sum::<i64>().rem_euclid(2) as u8,
            Family::Odd => 0,
        }
    }

    /// Number of affine root hyperplanes separating the base alcove from its image.
    pub fn length(&self, w: &Elem) -> usize {
        let p: Vec<i64> = (0..self.m).map(|i| (self.m - i) as i64).collect();
        let sp = w.sigma.apply(&p);
        let wp: Vec<i64> = sp.iter().zip(&w.t).map(|(a, t)| a + t * self.denom).collect();
        self.roots
            .iter()
            .map(|a| {
                let v: i64 = a.iter().zip(&wp).map(|(x, y)| x * y).sum();
                v.div_euclid(self.denom).unsigned_abs() as usize
            })
            .sum()
    }

    /// Whether `w · s_k` is shorter than `w`.
    pub fn is_right_descent(&self, w: &Elem, k: usize) -> bool {
        self.length(&self.mul(w, &self.simple(k))) < self.length(w)
    }

    pub fn is_left_descent(&self, w: &Elem, k: usize) -> bool {
        self.length(&self.mul(&self.simple(k), w)) < self.length(w)
    }

    /// `w = ω · s_{word[0]} ⋯ s_{word[k-1]}` with ω of length zero; letters chosen by peeling the
    /// smallest right descent.
    pub fn reduced_word(&self, w: &Elem) -> (Elem, Vec<usize>) {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        let mut len = self.length(&cur);
        while len > 0 {
            let k = (0..=self.m)
                .find(|&k| self.length(&self.mul(&cur, &self.simple(k))) < len)
                .expect("an element of positive length has a right descent");
            cur = self.mul(&cur, &self.simple(k));
            rev.push(k);
            len -= 1;
        }
        rev.reverse();
        (cur, rev)
    }

    pub fn from_word(&self, omega: &Elem, word: &[usize]) -> Elem {
        word.iter().fold(omega.clone(), |acc, &k| self.mul(&acc, &self.simple(k)))
    }

    pub fn to_json(&self, w: &Elem) -> ElemJson {
        ElemJson {
            t: w.t.clone(),
            perm: w.sigma.perm.iter().map(|p| p + 1).collect(),
            signs: w.sigma.signs.clone(),
            omega: self.omega(w),
        }
    }

    pub fn from_json(&self, j: &ElemJson) -> Result<Elem> {
        let m = self.m;
        if j.t.len() != m || j.perm.len() != m || j.signs.len() != m {
            return Err(WeylError::Invalid(format!("element data must have length {m}")));
        }
        let mut seen = vec![false; m];
        for &p in &j.perm {
            if p == 0 || p as usize > m || seen[p as usize - 1] {
                return Err(WeylError::Invalid("perm is not a permutation of 1..m".into()));
            }
            seen[p as usize - 1] = true;
        }
        if j.signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(WeylError::Invalid("signs must be ±1".into()));
        }
        let w = Elem {
            t: j.t.clone(),
            sigma: SignedPerm { perm: j.perm.iter().map(|p| p - 1).collect(), signs: j.signs.clone() },
        };
        if self.omega(&w) != j.omega {
            return Err(WeylError::Invalid("omega does not match the translation part".into()));
        }
        Ok(w)
    }

    /// The finite Weyl group W_0 as elements of W̃.
    pub fn finite_weyl_group(&self) -> Vec<Elem> {
        SignedPerm::all(self.m).into_iter().map(Elem::finite).collect()
    }

    /// The parabolic subgroup generated by `s_k` for `k` in `gens` (must be finite).
    pub fn parabolic_subgroup(&self, gens: &[usize]) -> Vec<Elem> {
        let mut seen = std::collections::HashSet::new();
        let mut order = vec![self.identity()];
        seen.insert(self.identity());
        let mut i = 0;
        while i < order.len() {
            for &k in gens {
                let x = self.mul(&order[i], &self.simple(k));
                if seen.insert(x.clone()) {
                    order.push(x);
                }
            }
            i += 1;
            assert!(order.len() <= 1 << 20, "parabolic subgroup is not finite");
        }
        order
    }
}
