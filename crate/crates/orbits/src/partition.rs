//! Integer partitions and the dominance order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{OrbitError, Result};

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(OrbitError::Partition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(OrbitError::Partition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// (2^s, 1^r).
    pub fn two_one(s: usize, r: usize) -> Self {
        let mut parts = vec![2; s];
        parts.extend(std::iter::repeat_n(1, r));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first).map(|k| self.parts.iter().filter(|&&p| p >= k).count()).collect();
        Partition { parts }
    }

    /// All partitions of n, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions covered by `self` in the dominance order.
    pub fn lower_covers(&self) -> Vec<Partition> {
        let all = Partition::all(self.size());
        let below: Vec<&Partition> =
            all.iter().filter(|q| *q != self && dominance_leq(q, self).unwrap_or(false)).collect();
        below
            .iter()
            .filter(|q| !below.iter().any(|t| t != *q && dominance_leq(q, t).unwrap_or(false)))
            .map(|q| (*q).clone())
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// λ^(2): every part repeated twice.
pub fn double_partition(lambda: &Partition) -> Partition {
    Partition { parts: lambda.parts.iter().flat_map(|&p| [p, p]).collect() }
}

/// ρ ≤ ρ′ in the dominance order: every partial sum of ρ is at most that of ρ′.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(OrbitError::SizeMismatch(a.size(), b.size()));
    }
    let len = a.parts.len().max(b.parts.len());
    let (mut sa, mut sb) = (0, 0);
    for k in 0..len {
        sa += a.parts.get(k).copied().unwrap_or(0);
        sb += b.parts.get(k).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}
