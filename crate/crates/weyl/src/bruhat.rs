//! Bruhat order: Deodhar's recursion, subword intervals, and downward closures.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::group::{AffineGroup, Elem};

/// Memoizing Bruhat comparator for one group.
pub struct Bruhat<'g> {
    g: &'g AffineGroup,
    memo: HashMap<(Elem, Elem), bool>,
}

impl<'g> Bruhat<'g> {
    pub fn new(g: &'g AffineGroup) -> Self {
        Bruhat { g, memo: HashMap::new() }
    }

    /// `u ≤ w`. Elements in different Ω-components are incomparable.
    pub fn leq(&mut self, u: &Elem, w: &Elem) -> bool {
        if self.g.omega(u) != self.g.omega(w) {
            return false;
        }
        self.leq_same(u, w, self.g.length(u), self.g.length(w))
    }

    fn leq_same(&mut self, u: &Elem, w: &Elem, lu: usize, lw: usize) -> bool {
        if lu > lw {
            return false;
        }
        if lw == 0 {
            return u == w;
        }
        if lu == lw {
            return u == w;
        }
        let key = (u.clone(), w.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // Pick a right descent s of w; then u ≤ w iff min(u, us) ≤ ws.
        let g = self.g;
        let k = (0..=g.m).find(|&k| g.is_right_descent(w, k)).unwrap();
        let s = g.simple(k);
        let ws = g.mul(w, &s);
        let us = g.mul(u, &s);
        let lus = g.length(&us);
        let res = if lus < lu { self.leq_same(&us, &ws, lus, lw - 1) } else { self.leq_same(u, &ws, lu, lw - 1) };
        self.memo.insert(key, res);
        res
    }
}

/// The lower interval [·, w]: all products of subwords of a reduced word of `w`.
pub fn lower_interval_subwords(g: &AffineGroup, w: &Elem) -> HashSet<Elem> {
    let (omega, word) = g.reduced_word(w);
    let mut set: HashSet<Elem> = HashSet::new();
    set.insert(omega);
    for &k in &word {
        let s = g.simple(k);
        let extra: Vec<Elem> = set.iter().map(|x| g.mul(x, &s)).collect();
        set.extend(extra);
    }
    set
}

/// Elements covered by `w` in Bruhat order: one-letter deletions from a reduced word that
/// drop the length by exactly one.
pub fn covers_below(g: &AffineGroup, w: &Elem) -> Vec<Elem> {
    let (omega, word) = g.reduced_word(w);
    let l = word.len();
    let mut out: Vec<Elem> = Vec::new();
    for skip in 0..l {
        let mut x = omega.clone();
        for (i, &k) in word.iter().enumerate() {
            if i != skip {
                x = g.mul(&x, &g.simple(k));
            }
        }
        if g.length(&x) + 1 == l && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Downward Bruhat closure of `tops`, by breadth-first search through covers. Returns the
/// elements sorted by (length descending, element) for determinism.
pub fn downward_closure(g: &AffineGroup, tops: &[Elem], cap: usize) -> Option<Vec<Elem>> {
    let mut seen: HashSet<Elem> = tops.iter().cloned().collect();
    let mut queue: VecDeque<Elem> = tops.iter().cloned().collect();
    while let Some(w) = queue.pop_front() {
        for c in covers_below(g, &w) {
            if seen.insert(c.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(c);
            }
        }
    }
    let mut out: Vec<(usize, Elem)> = seen.into_iter().map(|w| (g.length(&w), w)).collect();
    out.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    Some(out.into_iter().map(|(_, w)| w).collect())
}
