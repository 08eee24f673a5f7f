//! Cross-checks the Gröbner engine against a deliberately naive Buchberger implementation
//! written on its own dense-map representation over F_p.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use exactalg::{parse_poly, Ideal, MonomialOrder, Polynomial, PrimeField, Ring};
use proptest::prelude::*;

type Exps = Vec<u16>;
type NPoly = BTreeMap<Exps, u64>;

fn grevlex(a: &Exps, b: &Exps) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // Smaller exponent in the last differing variable means larger monomial.
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lead(f: &NPoly) -> Option<(Exps, u64)> {
    f.iter().max_by(|x, y| grevlex(x.0, y.0)).map(|(e, c)| (e.clone(), *c))
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1;
    for _ in 0..p - 2 {
        r = r * a % p;
    }
    r
}

fn add_scaled(f: &mut NPoly, g: &NPoly, c: u64, shift: &Exps, p: u64) {
    for (e, v) in g {
        let e2: Exps = e.iter().zip(shift).map(|(a, b)| a + b).collect();
        let entry = f.entry(e2.clone()).or_insert(0);
        *entry = (*entry + c * v) % p;
        if *entry == 0 {
            f.remove(&e2);
        }
    }
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn reduce(mut f: NPoly, g: &[NPoly], p: u64) -> NPoly {
    let mut rem = NPoly::new();
    while let Some((e, c)) = lead(&f) {
        let hit = g.iter().find(|h| divides(&lead(h).unwrap().0, &e));
        match hit {
            Some(h) => {
                let (he, hc) = lead(h).unwrap();
                let shift: Exps = e.iter().zip(&he).map(|(a, b)| a - b).collect();
                let coef = (p - c * inv(hc, p) % p) % p;
                add_scaled(&mut f, h, coef, &shift, p);
            }
            None => {
                f.remove(&e);
                rem.insert(e, c);
            }
        }
    }
    rem
}

fn naive_reduced_gb(gens: Vec<NPoly>, p: u64) -> Vec<NPoly> {
    let mut g: Vec<NPoly> = gens.into_iter().filter(|f| !f.is_empty()).collect();
    loop {
        let mut added = false;
        let len = g.len();
        'outer: for i in 0..len {
            for j in i + 1..len {
                let (ei, ci) = lead(&g[i]).unwrap();
                let (ej, cj) = lead(&g[j]).unwrap();
                let l: Exps = ei.iter().zip(&ej).map(|(a, b)| *a.max(b)).collect();
                let si: Exps = l.iter().zip(&ei).map(|(a, b)| a - b).collect();
                let sj: Exps = l.iter().zip(&ej).map(|(a, b)| a - b).collect();
                let mut s = NPoly::new();
                add_scaled(&mut s, &g[i], inv(ci, p), &si, p);
                add_scaled(&mut s, &g[j], (p - inv(cj, p)) % p, &sj, p);
                let r = reduce(s, &g, p);
                if !r.is_empty() {
                    g.push(r);
                    added = true;
                    break 'outer;
                }
            }
        }
        if !added {
            break;
        }
    }
    // Minimalize, then tail-reduce and normalize.
    let mut minimal: Vec<NPoly> = Vec::new();
    for (k, f) in g.iter().enumerate() {
        let e = lead(f).unwrap().0;
        let redundant = g.iter().enumerate().any(|(k2, h)| {
            let e2 = lead(h).unwrap().0;
            k2 != k && divides(&e2, &e) && (e2 != e || k2 < k)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut out = Vec::new();
    for (k, f) in minimal.iter().enumerate() {
        let others: Vec<NPoly> =
            minimal.iter().enumerate().filter(|(k2, _)| *k2 != k).map(|(_, h)| h.clone()).collect();
        let r = reduce(f.clone(), &others, p);
        let c = inv(lead(&r).unwrap().1, p);
        out.push(r.into_iter().map(|(e, v)| (e, v * c % p)).collect::<NPoly>());
    }
    out.sort_by(|a, b| grevlex(&lead(a).unwrap().0, &lead(b).unwrap().0));
    out
}

fn to_naive(f: &Polynomial<PrimeField>) -> NPoly {
    f.terms().iter().map(|(m, c)| (m.exps().to_vec(), *c)).collect()
}

fn check_against_oracle(ideal: &Ideal<PrimeField>, p: u64) {
    let ours: Vec<NPoly> = ideal.groebner_basis().unwrap().iter().map(to_naive).collect();
    let theirs = naive_reduced_gb(ideal.gens().iter().map(to_naive).collect(), p);
    assert_eq!(ours, theirs);
}

#[test]
fn example_two_naive_ideal_matches_hand_buchberger() {
    let r = Ring::new(PrimeField::new(5).unwrap(), &["x2", "x3", "y2", "y3"], MonomialOrder::Grevlex);
    let gens = ["x2*x3", "y2*y3", "x2*y2", "x3*y3", "x2*y3 + x3*y2"]
        .iter()
        .map(|s| parse_poly(&r, s).unwrap())
        .collect();
    let ideal = Ideal::new(gens).unwrap();
    check_against_oracle(&ideal, 5);
    // Every generator reduces to zero.
    for g in ideal.gens() {
        assert!(ideal.normal_form(g).unwrap().is_zero());
    }
    // The Plücker-type combination is not in the ideal.
    let f = parse_poly(&r, "x2*y3 - y2*x3").unwrap();
    assert!(!ideal.normal_form(&f).unwrap().is_zero());
}

fn small_poly() -> impl Strategy<Value = Vec<(u64, Vec<u16>)>> {
    prop::collection::vec((1u64..7, prop::collection::vec(0u16..3, 3)), 1..4)
}

fn build(r: &std::sync::Arc<Ring<PrimeField>>, spec: &[(u64, Vec<u16>)]) -> Polynomial<PrimeField> {
    Polynomial::from_terms(
        r,
        spec.iter().map(|(c, e)| (exactalg::Monomial::from_exps(e), *c)).collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_ideals_match_oracle(gens in prop::collection::vec(small_poly(), 1..4)) {
        let r = Ring::new(PrimeField::new(7).unwrap(), &["x", "y", "z"], MonomialOrder::Grevlex);
        let polys: Vec<_> = gens.iter().map(|g| build(&r, g)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let ideal = Ideal::new(polys).unwrap();
        check_against_oracle(&ideal, 7);
    }

    #[test]
    fn reduced_basis_is_canonical_under_shuffles(
        gens in prop::collection::vec(small_poly(), 2..4),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let r = Ring::new(PrimeField::new(7).unwrap(), &["x", "y", "z"], MonomialOrder::Grevlex);
        let polys: Vec<_> = gens.iter().map(|g| build(&r, g)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let mut shuffled = polys.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        // Add a redundant combination as well.
        shuffled.push(polys[0].mul(&Polynomial::var(&r, 1)).add(&polys[polys.len() - 1]));
        let a = Ideal::new(polys).unwrap();
        let b = Ideal::new(shuffled.into_iter().filter(|p| !p.is_zero()).collect()).unwrap();
        let ga = a.groebner_basis().unwrap().to_vec();
        let gb = b.groebner_basis().unwrap().to_vec();
        // `b` may be strictly larger only if the extra element was not in `a`; it is in `a`.
        prop_assert_eq!(ga, gb);
    }

    #[test]
    fn normal_form_is_linear(
        gens in prop::collection::vec(small_poly(), 1..3),
        f in small_poly(),
        g in small_poly(),
    ) {
        let r = Ring::new(PrimeField::new(7).unwrap(), &["x", "y", "z"], MonomialOrder::Grevlex);
        let polys: Vec<_> = gens.iter().map(|g| build(&r, g)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let ideal = Ideal::new(polys).unwrap();
        let (f, g) = (build(&r, &f), build(&r, &g));
        let lhs = ideal.normal_form(&f.add(&g)).unwrap();
        let nf = ideal.normal_form(&f).unwrap().add(&ideal.normal_form(&g).unwrap());
        prop_assert_eq!(lhs, ideal.normal_form(&nf).unwrap());
    }
}
