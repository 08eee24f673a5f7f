use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use weyl::adm::{admissible_set, extreme_elements, length_histogram};
use weyl::bruhat::{covers_below, lower_interval_subwords, Bruhat};
use weyl::{AffineGroup, Elem};

fn random_elem(g: &AffineGroup, word: &[usize], with_tau: bool) -> Elem {
    let start = if with_tau { g.tau().unwrap_or_else(|| g.identity()) } else { g.identity() };
    word.iter().fold(start, |acc, &k| g.mul(&acc, &g.simple(k % (g.m + 1))))
}

/// ℓ(t_λ) = Σ_{α>0} |⟨α, λ⟩| for translations.
fn translation_length(g: &AffineGroup, lambda: &[i64]) -> usize {
    g.positive_roots()
        .iter()
        .map(|a| a.iter().zip(lambda).map(|(x, y)| x * y).sum::<i64>().unsigned_abs() as usize)
        .sum()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_laws(n in 3usize..9, a in prop::collection::vec(0usize..5, 0..12),
                  b in prop::collection::vec(0usize..5, 0..12),
                  c in prop::collection::vec(0usize..5, 0..6), ta: bool) {
        let g = AffineGroup::new(n).unwrap();
        let (x, y, z) = (random_elem(&g, &a, ta), random_elem(&g, &b, false), random_elem(&g, &c, false));
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        prop_assert!(g.mul(&x, &g.inverse(&x)) == g.identity());
        prop_assert_eq!(g.length(&g.inverse(&x)), g.length(&x));
        for k in 0..=g.m {
            let lx = g.length(&x) as i64;
            let ls = g.length(&g.mul(&x, &g.simple(k))) as i64;
            prop_assert_eq!((lx - ls).abs(), 1);
        }
        let (om, word) = g.reduced_word(&x);
        prop_assert_eq!(g.length(&om), 0);
        prop_assert_eq!(word.len(), g.length(&x));
        prop_assert_eq!(g.from_word(&om, &word), x.clone());
        prop_assert_eq!(g.omega(&g.mul(&x, &y)), (g.omega(&x) + g.omega(&y)) % 2);
        let json = g.to_json(&x);
        prop_assert_eq!(g.from_json(&json).unwrap(), x);
    }

    #[test]
    fn translation_lengths(n in 3usize..10, lam in prop::collection::vec(-3i64..4, 4)) {
        let g = AffineGroup::new(n).unwrap();
        let lam: Vec<i64> = lam.into_iter().take(g.m).chain(std::iter::repeat(0)).take(g.m).collect();
        prop_assert_eq!(g.length(&Elem::translation(lam.clone())), translation_length(&g, &lam));
    }

    #[test]
    fn bruhat_matches_subwords(n in 3usize..6, a in prop::collection::vec(0usize..4, 0..7),
                               b in prop::collection::vec(0usize..4, 0..5)) {
        let g = AffineGroup::new(n).unwrap();
        let w = random_elem(&g, &a, false);
        let below = lower_interval_subwords(&g, &w);
        let u = random_elem(&g, &b, false);
        let mut br = Bruhat::new(&g);
        prop_assert_eq!(br.leq(&u, &w), below.contains(&u));
        for v in below.iter().take(20) {
            prop_assert!(br.leq(v, &w));
        }
    }
}

#[test]
fn simple_reflections_are_involutions_of_length_one() {
    for n in 3..10 {
        let g = AffineGroup::new(n).unwrap();
        for k in 0..=g.m {
            let s = g.simple(k);
            assert_eq!(g.length(&s), 1);
            assert_eq!(g.mul(&s, &s), g.identity());
        }
        if let Some(t) = g.tau() {
            assert_eq!(g.length(&t), 0);
            assert_eq!(g.omega(&t), 1);
            // τ normalizes the simple reflections, swapping s_0 and s_1.
            assert_eq!(g.mul(&g.mul(&t, &g.simple(0)), &t), g.simple(1));
            for k in 2..=g.m {
                assert_eq!(g.mul(&g.mul(&t, &g.simple(k)), &t), g.simple(k));
            }
        }
    }
}

#[test]
fn finite_weyl_group_has_expected_longest_element() {
    for n in 3..10 {
        let g = AffineGroup::new(n).unwrap();
        let w0 = g.finite_weyl_group();
        let fact: usize = (1..=g.m).product();
        assert_eq!(w0.len(), (1 << g.m) * fact);
        let max = w0.iter().map(|w| g.length(w)).max().unwrap();
        assert_eq!(max, g.m * g.m);
        assert_eq!(g.positive_roots().len(), g.m * g.m);
    }
}

#[test]
fn admissible_set_small_cases() {
    let g = AffineGroup::new(3).unwrap();
    let adm = admissible_set(&g, 2, 1).unwrap();
    let h = length_histogram(&g, &adm);
    assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 2)]);
    let adm = admissible_set(&g, 3, 0).unwrap();
    assert_eq!(adm, vec![g.identity()]);
    assert!(admissible_set(&g, 1, 2).is_err());
    assert!(admissible_set(&g, 2, 2).is_err());
}

#[test]
fn admissible_sets_structure() {
    for n in 3..=7 {
        let g = AffineGroup::new(n).unwrap();
        for s in 0..=n / 2 {
            let r = n - s;
            let adm = admissible_set(&g, r, s).unwrap();
            let set: HashSet<Elem> = adm.iter().cloned().collect();
            let extremes = extreme_elements(&g, r, s).unwrap();
            assert_eq!(extremes.len(), (1 << s) * binom(g.m, s), "n={n} s={s}");
            // Extremes are exactly the elements of maximal length, all of length ℓ(t_λ).
            let top = g.length(&extremes[0]);
            let maximal: BTreeSet<Elem> = adm.iter().filter(|w| g.length(w) == top).cloned().collect();
            assert_eq!(maximal, extremes.iter().cloned().collect());
            assert!(adm.iter().all(|w| g.length(w) <= top));
            // One Ω component.
            let omegas: BTreeSet<u8> = adm.iter().map(|w| g.omega(w)).collect();
            assert_eq!(omegas.len(), 1);
            // Downward closed.
            for w in &adm {
                for c in covers_below(&g, w) {
                    assert!(set.contains(&c));
                }
            }
            // Independent oracle: union of subword intervals below the extremes.
            if adm.len() < 5000 {
                let mut oracle: HashSet<Elem> = HashSet::new();
                for e in &extremes {
                    oracle.extend(lower_interval_subwords(&g, e));
                }
                assert_eq!(oracle, set, "n={n} s={s}");
            }
        }
    }
}
