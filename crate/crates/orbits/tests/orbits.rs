use exactalg::{Polynomial, PrimeField};
use orbits::*;
use proptest::prelude::*;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn doubling() {
    assert_eq!(double_partition(&p(&[2, 1])), p(&[2, 2, 1, 1]));
    assert_eq!(double_partition(&p(&[])), p(&[]));
    assert_eq!(double_partition(&p(&[3])), p(&[3, 3]));
}

#[test]
fn dominance_examples() {
    assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap());
    assert!(!dominance_leq(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap());
    assert!(matches!(dominance_leq(&p(&[2]), &p(&[2, 1])), Err(OrbitError::SizeMismatch(2, 3))));
    for (r, s) in [(2, 1), (3, 2), (2, 2), (4, 3)] {
        let top = Partition::two_one(s, r);
        assert_eq!(top.lower_covers(), vec![Partition::two_one(s - 1, r + 2)]);
    }
}

#[test]
fn invalid_partitions() {
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
}

#[test]
fn orbit_dimension_formula() {
    assert_eq!(orbit_dim(2, 1), 2);
    assert_eq!(orbit_dim(5, 0), 0);
    assert_eq!(orbit_dim(2, 2), 4);
}

#[test]
fn zero_signature_forces_zero() {
    let f = PrimeField::new(5).unwrap();
    let i = orbit_closure_ideal(&f, 3, 0, SymmetricPair::Orthogonal).unwrap();
    for k in 0..9 {
        assert!(i.contains(&Polynomial::var(i.ring(), k)).unwrap());
    }
}

#[test]
fn orbit_closure_dimensions_are_rs() {
    let f = PrimeField::new(5).unwrap();
    for (n, s, pair) in [
        (3, 1, SymmetricPair::Orthogonal),
        (4, 1, SymmetricPair::Orthogonal),
        (4, 2, SymmetricPair::Orthogonal),
        (5, 2, SymmetricPair::Orthogonal),
        (4, 2, SymmetricPair::Symplectic),
        (2, 0, SymmetricPair::Symplectic),
    ] {
        let i = orbit_closure_ideal(&f, n, s, pair).unwrap();
        assert_eq!(i.krull_dim().unwrap(), Some(orbit_dim(n - s, s)), "n={n} s={s} {pair:?}");
    }
    assert!(matches!(orbit_closure_ideal(&f, 4, 1, SymmetricPair::Symplectic), Err(OrbitError::Parity(_))));
    assert!(matches!(orbit_closure_ideal(&f, 3, 2, SymmetricPair::Symplectic), Err(OrbitError::Parity(_))));
}

#[test]
fn orbit_closure_contains_square_and_rank_conditions() {
    let f = PrimeField::new(7).unwrap();
    let i = orbit_closure_ideal(&f, 4, 2, SymmetricPair::Symplectic).unwrap();
    let x = exactalg::PolyMatrix::from_fn(i.ring(), 4, 4, |a, b| Polynomial::var(i.ring(), 4 * a + b));
    for g in x.mul(&x).entries().iter().chain(x.minors(3).iter()) {
        assert!(i.contains(g).unwrap());
    }
}

#[test]
fn special_fibers_match_orbit_closures() {
    let f = PrimeField::new(3).unwrap();
    let c = special_fiber_vs_orbit(&f, 3, 2, 1, SymmetricPair::Orthogonal).unwrap();
    assert!(c.consistent(), "{c:?}");
    assert_eq!(c.fiber_dim, Some(2));
    let c = special_fiber_vs_orbit(&f, 4, 2, 2, SymmetricPair::Symplectic).unwrap();
    assert!(c.consistent(), "{c:?}");
    assert_eq!(c.fiber_dim, Some(4));
    assert!(matches!(special_fiber_vs_orbit(&f, 4, 3, 1, SymmetricPair::Symplectic), Err(OrbitError::Parity(_))));
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn dominance_is_a_partial_order((a, b, c) in (1usize..9).prop_flat_map(|n| (partition_of(n), partition_of(n), partition_of(n)))) {
        prop_assert!(dominance_leq(&a, &a).unwrap());
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn doubling_doubles_the_conjugate(a in (0usize..10).prop_flat_map(partition_of)) {
        let d = double_partition(&a);
        prop_assert_eq!(d.size(), 2 * a.size());
        let conj: Vec<usize> = a.transpose().parts().iter().map(|x| 2 * x).collect();
        prop_assert_eq!(d.transpose().parts().to_vec(), conj);
        prop_assert_eq!(a.transpose().transpose(), a);
    }
}
