//! Parahoric index sets, their normalization, and the Kottwitz invariant for n even.
//!
//! Lattice indices are mapped to vertices of the base alcove (vertex k is the one not on the
//! wall of `s_k`): for n odd, index i is vertex i; for n = 2m, index j ≤ m − 2 is vertex
//! m − j, index m is vertex 0 and m′ is vertex 1 (Ω swaps vertices 0 and 1).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Result, WeylError};

/// A raw lattice label: an index in 0..=m, or m′ (n even only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Idx(usize),
    MPrime,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Idx(i) => write!(f, "{i}"),
            Label::MPrime => write!(f, "m'"),
        }
    }
}

/// Parses labels such as `0`, `3`, `3'` or `m'`.
pub fn parse_label(s: &str, m: usize) -> Result<Label> {
    let t = s.trim();
    if t == "m'" {
        return Ok(Label::MPrime);
    }
    if let Some(num) = t.strip_suffix('\'') {
        let v: usize = num.parse().map_err(|_| WeylError::Parahoric(format!("bad label `{s}`")))?;
        if v != m {
            return Err(WeylError::Parahoric(format!("only m' = {m}' is primed, got `{s}`")));
        }
        return Ok(Label::MPrime);
    }
    t.parse().map(Label::Idx).map_err(|_| WeylError::Parahoric(format!("bad label `{s}`")))
}

/// A normalized parahoric index set I ⊆ {0..m}; for n even, m − 1 ∈ I implies m ∈ I.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ParahoricIndex {
    pub n: usize,
    pub set: BTreeSet<usize>,
}

/// Normalization outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classified {
    pub index: ParahoricIndex,
    /// Whether the raw set had to be conjugated by τ (J ↦ J*).
    pub conjugated_by_tau: bool,
    pub note: String,
}

impl ParahoricIndex {
    pub fn new(n: usize, set: BTreeSet<usize>) -> Result<Self> {
        let m = n / 2;
        if n < 3 {
            return Err(WeylError::RankTooSmall(n));
        }
        if set.is_empty() {
            return Err(WeylError::Parahoric("empty index set".into()));
        }
        if let Some(&big) = set.iter().find(|&&i| i > m) {
            return Err(WeylError::Parahoric(format!("index {big} exceeds m = {m}")));
        }
        if n % 2 == 0 && set.contains(&(m - 1)) && !set.contains(&m) {
            return Err(WeylError::Parahoric(format!(
                "for n even, {} in I requires {m} in I",
                m - 1
            )));
        }
        Ok(ParahoricIndex { n, set })
    }

    pub fn iwahori(n: usize) -> Self {
        ParahoricIndex { n, set: (0..=n / 2).collect() }
    }

    /// Vertices of the base alcove spanned by the facet.
    pub fn vertices(&self) -> BTreeSet<usize> {
        let m = self.n / 2;
        if self.n % 2 == 1 {
            return self.set.clone();
        }
        self.set
            .iter()
            .map(|&j| if j == m { 0 } else if j == m - 1 { 1 } else { m - j })
            .collect()
    }

    /// All valid normalized index sets for `n`.
    pub fn all(n: usize) -> Vec<ParahoricIndex> {
        let m = n / 2;
        (1u32..(1 << (m + 1)))
            .filter_map(|mask| {
                let set: BTreeSet<usize> = (0..=m).filter(|i| mask >> i & 1 == 1).collect();
                ParahoricIndex::new(n, set).ok()
            })
            .collect()
    }
}

impl fmt::Display for ParahoricIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.set.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// Normalizes a raw label set. For n odd the set is returned unchanged (primes are errors).
/// For n = 2m: m, m′ ∈ J → replace m′ by m − 1; m′ ∉ J → J; m′ ∈ J, m ∉ J → J* (swap).
pub fn parahoric_classify(n: usize, raw: &[Label]) -> Result<Classified> {
    if n < 3 {
        return Err(WeylError::RankTooSmall(n));
    }
    if raw.is_empty() {
        return Err(WeylError::Parahoric("empty index set".into()));
    }
    let m = n / 2;
    let has_prime = raw.contains(&Label::MPrime);
    let idx: BTreeSet<usize> = raw
        .iter()
        .filter_map(|l| if let Label::Idx(i) = l { Some(*i) } else { None })
        .collect();
    if n % 2 == 1 {
        if has_prime {
            return Err(WeylError::Parahoric("m' only exists for n even".into()));
        }
        let index = ParahoricIndex::new(n, idx)?;
        return Ok(Classified { index, conjugated_by_tau: false, note: "n odd: no normalization".into() });
    }
    if idx.contains(&(m - 1)) {
        return Err(WeylError::Parahoric(format!(
            "raw sets for n even use labels 0..{}, {m}, {m}'",
            m - 1
        )));
    }
    let (set, conj, note) = match (idx.contains(&m), has_prime) {
        (true, true) => {
            let mut s = idx.clone();
            s.insert(m - 1);
            (s, false, format!("both {m} and {m}' present: {m}' replaced by {}", m - 1))
        }
        (_, false) => (idx.clone(), false, format!("{m}' absent: unchanged")),
        (false, true) => {
            let mut s = idx.clone();
            s.insert(m);
            (s, true, format!("{m}' without {m}: conjugated by τ (swap {m} and {m}')"))
        }
    };
    Ok(Classified { index: ParahoricIndex::new(n, set)?, conjugated_by_tau: conj, note })
}

/// Kottwitz invariant (val(c), val(a_1⋯a_m) mod 2) of a diagonal torus element, n even.
pub fn kottwitz_even(n: usize, val_c: i64, vals: &[i64]) -> Result<(i64, u8)> {
    if n % 2 == 1 {
        return Err(WeylError::OddRank);
    }
    if vals.len() != n / 2 {
        return Err(WeylError::Invalid(format!("expected {} valuations", n / 2)));
    }
    Ok((val_c, vals.iter().sum::<i64>().rem_euclid(2) as u8))
}

/// Kottwitz invariant of a unitary permutation matrix (similitude factor 1), n even: write
/// d(g) = det(g) = ±1 as x / x̄ with x = 1 or x = π (since π̄ = −π), and return val(x) mod 2.
pub fn kottwitz_permutation(n: usize, perm: &[usize]) -> Result<(i64, u8)> {
    if n % 2 == 1 {
        return Err(WeylError::OddRank);
    }
    if perm.len() != n {
        return Err(WeylError::Invalid("permutation length must be n".into()));
    }
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    Ok((0, (inversions % 2) as u8))
}

/// The element τ swapping e_m and e_{m+1} (0-based permutation of 0..n).
pub fn tau_permutation(n: usize) -> Vec<usize> {
    let m = n / 2;
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(m - 1, m);
    p
}
