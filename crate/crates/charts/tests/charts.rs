use std::collections::BTreeSet;

use charts::frame::{graph_conditions, var_matrix};
use charts::lift::{check_subset, default_precision, valid_subsets};
use charts::orthogonal::{example1_groups, orthogonal_label_ideal, orthogonal_ring, orthogonal_spin_constraints};
use charts::unitary::{chart_ring, frame_for};
use charts::*;
use exactalg::points::count_points_multiprojective;
use exactalg::{Field, Ideal, Polynomial, PrimeField};
use proptest::prelude::*;
use spin::Label;
use weyl::adm::extreme_elements;
use weyl::AffineGroup;

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn small_specs() -> Vec<(Case, usize, usize, usize)> {
    let mut v = Vec::new();
    for (r, s) in [(3, 0), (2, 1)] {
        v.push((Case::A, 3, r, s));
    }
    for (r, s) in [(2, 0), (1, 1), (4, 0), (3, 1), (2, 2)] {
        v.push((Case::B, r + s, r, s));
    }
    for (r, s) in [(1, 1), (3, 1)] {
        v.push((Case::B1, r + s, r, s));
    }
    v
}

fn ideal(f: &PrimeField, case: Case, n: usize, r: usize, s: usize, level: Level) -> Ideal<PrimeField> {
    chart_ideal(f, &ChartSpec::new(case, n, r, s, level).unwrap()).unwrap()
}

fn saturate_u(i: &Ideal<PrimeField>) -> Ideal<PrimeField> {
    i.saturate(&i.var("u").unwrap()).unwrap()
}

#[test]
fn explicit_generators_equal_the_graph_conditions() {
    let f = fp(32003);
    for (case, n, r, s) in small_specs().into_iter().filter(|t| t.0 != Case::B1) {
        for level in [Level::Naive, Level::Wedge] {
            let spec = ChartSpec::new(case, n, r, s, level).unwrap();
            let explicit = chart_ideal(&f, &spec).unwrap();
            let ring = chart_ring(&f, &spec);
            let x = var_matrix(&ring, n);
            let gens = graph_conditions(&frame_for(&spec).unwrap(), &ring, &x, n * n, r, s, level == Level::Wedge).unwrap();
            let oracle = Ideal::from_nonzero(&ring, gens).unwrap();
            assert!(explicit.equals(&oracle).unwrap(), "{spec:?}");
        }
    }
}

#[test]
fn levels_form_a_chain_of_ideals() {
    let f = fp(32003);
    for (case, n, r, s) in small_specs() {
        let naive = ideal(&f, case, n, r, s, Level::Naive);
        let wedge = ideal(&f, case, n, r, s, Level::Wedge);
        let spin = ideal(&f, case, n, r, s, Level::Spin);
        assert!(wedge.contains_ideal(&naive).unwrap(), "{case:?} {n} {r} {s}");
        assert!(spin.contains_ideal(&wedge).unwrap(), "{case:?} {n} {r} {s}");
    }
}

#[test]
fn levels_agree_on_the_generic_fiber() {
    let f = fp(32003);
    for (case, n, r, s) in small_specs() {
        let naive = saturate_u(&ideal(&f, case, n, r, s, Level::Naive));
        let wedge = saturate_u(&ideal(&f, case, n, r, s, Level::Wedge));
        let spin = saturate_u(&ideal(&f, case, n, r, s, Level::Spin));
        assert!(naive.equals(&wedge).unwrap(), "{case:?} {n} {r} {s}");
        assert!(wedge.equals(&spin).unwrap(), "{case:?} {n} {r} {s}");
    }
}

#[test]
fn spin_condition_at_the_worst_point_depends_on_the_parity_of_s() {
    let f = fp(32003);
    for (n, r, s) in [(2, 2, 0), (2, 1, 1), (4, 4, 0), (4, 3, 1), (4, 2, 2)] {
        let spec = ChartSpec::new(Case::B, n, r, s, Level::Spin).unwrap();
        let (ring, cons) = spin_constraints(&f, &spec).unwrap();
        // X = 0, u = 1: ℱ = πΛ_m.
        let mut pt = vec![f.zero(); ring.nvars()];
        pt[n * n] = f.one();
        let satisfied = cons.iter().all(|g| f.is_zero(&g.evaluate(&pt)));
        assert_eq!(satisfied, s % 2 == 0, "(n, r, s) = ({n}, {r}, {s})");
    }
}

#[test]
fn zero_signature_forces_the_scalar_matrix() {
    let f = fp(32003);
    let wedge = ideal(&f, Case::A, 3, 3, 0, Level::Wedge);
    let ring = wedge.ring().clone();
    let u = Polynomial::var(&ring, 9);
    for i in 0..3 {
        for j in 0..3 {
            let mut g = Polynomial::var(&ring, 3 * i + j);
            if i == j {
                g = g.add(&u);
            }
            assert!(wedge.contains(&g).unwrap());
        }
    }
}

#[test]
fn dimensions_and_generic_emptiness() {
    let f = fp(3);
    for (case, n, r, s) in [(Case::A, 3, 2, 1), (Case::B, 4, 2, 2), (Case::B, 2, 1, 1)] {
        let sf = ideal(&f, case, n, r, s, Level::Wedge).special_fiber("u").unwrap().unwrap();
        if s % 2 == 0 || n % 2 == 1 {
            assert_eq!(sf.krull_dim().unwrap(), Some(r * s));
        }
    }
    assert!(ideal(&f, Case::B, 2, 1, 1, Level::Wedge).is_generically_empty("u").unwrap());
    assert!(ideal(&f, Case::B, 4, 3, 1, Level::Wedge).is_generically_empty("u").unwrap());
    assert!(!ideal(&f, Case::B, 4, 2, 2, Level::Wedge).is_generically_empty("u").unwrap());
}

#[test]
fn picard_wedge_chart_at_the_special_vertex_is_flat() {
    for p in [3, 5] {
        let f = fp(p);
        assert!(ideal(&f, Case::A, 3, 2, 1, Level::Wedge).is_flat_over_dvr("u").unwrap().flat);
    }
}

#[test]
fn orthogonal_example_1() {
    let f = fp(32003);
    let naive = orthogonal_chart_ideal(&f, OrthExample::Example1, Level::Naive).unwrap();
    let special = naive.special_fiber("u").unwrap().unwrap();
    assert_eq!(count_points_multiprojective(&special, &example1_groups()).unwrap(), 3);
    let generic = naive.specialize("u", &f.from_i64(7)).unwrap().unwrap();
    assert_eq!(count_points_multiprojective(&generic, &example1_groups()).unwrap(), 2);
    let flat = naive.is_flat_over_dvr("u").unwrap();
    assert!(!flat.flat);
    let w = flat.witness.unwrap();
    assert!(!naive.contains(&w).unwrap());
    assert!(naive.contains(&w.mul(&naive.var("u").unwrap())).unwrap());

    let ring = orthogonal_ring(&f, OrthExample::Example1);
    let v = |i| Polynomial::var(&ring, i);
    let plus = orthogonal_spin_constraints(&ring, OrthExample::Example1, Label::Plus).unwrap();
    let minus = orthogonal_spin_constraints(&ring, OrthExample::Example1, Label::Minus).unwrap();
    let plus = Ideal::new(plus).unwrap();
    let minus = Ideal::new(minus).unwrap();
    assert!(plus.equals(&Ideal::new(vec![v(1), v(3)]).unwrap()).unwrap());
    assert!(minus.equals(&Ideal::new(vec![v(0), v(2)]).unwrap()).unwrap());

    let spin = orthogonal_chart_ideal(&f, OrthExample::Example1, Level::Spin).unwrap();
    assert!(spin.is_flat_over_dvr("u").unwrap().flat);
    let special = spin.special_fiber("u").unwrap().unwrap();
    assert_eq!(count_points_multiprojective(&special, &example1_groups()).unwrap(), 2);
}

#[test]
fn orthogonal_example_2() {
    let f = fp(32003);
    let ring = orthogonal_ring(&f, OrthExample::Example2);
    let v = |i| Polynomial::var(&ring, i);
    let (x2, x3, y2, y3, u) = (v(0), v(1), v(2), v(3), v(4));
    let cons = Ideal::new(orthogonal_spin_constraints(&ring, OrthExample::Example2, Label::Plus).unwrap()).unwrap();
    let expected = Ideal::new(vec![x2.clone(), y3.clone(), x2.mul(&y3).sub(&x3.mul(&y2)).sub(&u.mul(&u))]).unwrap();
    assert!(cons.equals(&expected).unwrap());

    let spin = orthogonal_chart_ideal(&f, OrthExample::Example2, Level::Spin).unwrap();
    let special = spin.special_fiber("u").unwrap().unwrap();
    let sring = special.ring().clone();
    let w = |name: &str| Polynomial::var_named(&sring, name).unwrap();
    let lines = Ideal::new(vec![w("x2"), w("y3"), w("y2").mul(&w("x3"))]).unwrap();
    assert!(special.same_radical(&lines).unwrap());
    assert_eq!(special.krull_dim().unwrap(), Some(1));
    assert!(spin.is_flat_over_dvr("u").unwrap().flat);

    let naive = orthogonal_chart_ideal(&f, OrthExample::Example2, Level::Naive).unwrap();
    assert!(spin.contains_ideal(&naive).unwrap());
    let minus = orthogonal_label_ideal(&f, OrthExample::Example2, Label::Minus).unwrap();
    assert!(minus.contains(&x3).unwrap() && minus.contains(&y2).unwrap());
}

#[test]
fn picard_chart_report() {
    let f = fp(32003);
    let chart = picard_i1_chart(&f).unwrap();
    let report = chart.report(50, 7).unwrap();
    assert!(report.all_pass(), "{report:?}");
    assert_eq!(report.jacobian_points, 50);
}

#[test]
fn picard_gram_has_the_block_shape() {
    // D = [[K, H], [Hᵗ, −π₀K]] with K = E₃₃ and H = [[0, 1, 0], [−1, 0, 0], [0, 0, 0]].
    let f = fp(32003);
    let chart = picard_i1_chart(&f).unwrap();
    let ring = &chart.ring;
    let g = charts::frame::Frame::picard_i1().gram(ring, 9).unwrap();
    let u2 = Polynomial::var(ring, 9).pow(2);
    let k = [[0, 0, 0], [0, 0, 0], [0, 0, 1]];
    let h = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(*g.get(i, j), Polynomial::from_int(ring, k[i][j]));
            assert_eq!(*g.get(i, j + 3), Polynomial::from_int(ring, h[i][j]));
            assert_eq!(*g.get(i + 3, j), Polynomial::from_int(ring, h[j][i]));
            assert_eq!(*g.get(i + 3, j + 3), u2.scale(&f.from_i64(-k[i][j])));
        }
    }
}

#[test]
fn even_sodd_reduction() {
    let f = fp(32003);
    let red = chart_even_sodd_reduction(&f, 4, 3, 1).unwrap();
    assert!(red.variables_match && red.ideal_matches);
    let free: BTreeSet<String> = charts::reduction::free_vars(4).into_iter().collect();
    assert_eq!(free, ["x11", "x23", "x24"].iter().map(|s| s.to_string()).collect());
    let red = chart_even_sodd_reduction(&f, 6, 3, 3).unwrap();
    assert!(red.variables_match && red.ideal_matches);
    assert!(matches!(chart_even_sodd_reduction(&f, 4, 2, 2), Err(ChartError::Parity(_))));
    assert!(matches!(chart_even_sodd_reduction(&f, 5, 4, 1), Err(ChartError::Parity(_))));
}

#[test]
fn lifts_pass_all_checks_and_exhaust_the_extreme_elements() {
    let f = fp(32003);
    for n in 2..=4 {
        for s in 0..=n / 2 {
            let r = n - s;
            let mut seen = BTreeSet::new();
            for set in valid_subsets(n, s) {
                for i in 0..n {
                    let lift = lift_point(&f, &set, r, s, i).unwrap();
                    assert!(lift.checks.all(), "n={n} S={set:?} i={i}: {:?}", lift.checks);
                }
                let chain = lift_chain(&f, &set, r, s).unwrap();
                let w = relative_position(&standard_chain(n), &chain, default_precision(n)).unwrap();
                assert!(w.is_translation());
                assert!(seen.insert(w), "duplicate relative position");
            }
            if n >= 3 {
                let g = AffineGroup::new(n).unwrap();
                let extremes: BTreeSet<_> = extreme_elements(&g, r, s).unwrap().into_iter().collect();
                assert_eq!(seen, extremes, "n={n} s={s}");
            } else {
                assert_eq!(seen.len(), if s == 0 { 1 } else { 2 });
            }
        }
    }
}

#[test]
fn standard_lift_is_the_translation_by_lambda() {
    let f = fp(32003);
    for (n, r, s) in [(3, 2, 1), (4, 3, 1), (4, 2, 2), (5, 3, 2)] {
        let set: Vec<usize> = (1..=s).collect();
        let chain = lift_chain(&f, &set, r, s).unwrap();
        let w = relative_position(&standard_chain(n), &chain, default_precision(n)).unwrap();
        assert_eq!(w, weyl::Elem::translation(weyl::coweight_image(n, r, s).unwrap()));
    }
}

#[test]
fn relative_position_edge_cases() {
    let chain = standard_chain(4);
    let w = relative_position(&chain, &chain, default_precision(4)).unwrap();
    assert!(w.is_translation() && w.t.iter().all(|&t| t == 0));
    let f = fp(32003);
    let lifted = lift_chain(&f, &[1, 2], 2, 2).unwrap();
    assert!(matches!(relative_position(&chain, &lifted, 2), Err(ChartError::Precision(_))));
    let broken = vec![vec![0; 4]; 4];
    assert!(matches!(relative_position(&chain, &broken, 10), Err(ChartError::NotDiagonal(_))));
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(ChartSpec::new(Case::A, 4, 2, 2, Level::Naive).is_err());
    assert!(ChartSpec::new(Case::B, 4, 1, 3, Level::Naive).is_err());
    assert!(ChartSpec::new(Case::B1, 4, 4, 0, Level::Naive).is_err());
    assert!(ChartSpec::new(Case::PicardI1, 3, 3, 0, Level::Naive).is_err());
    assert!(matches!(check_subset(4, 2, &[1, 4]), Err(ChartError::Subset(..))));
    assert!(matches!(check_subset(4, 1, &[5]), Err(ChartError::Subset(..))));
    let f = fp(32003);
    assert!(lift_point(&f, &[2], 2, 1, 0).is_err());
}

#[test]
fn chart_spec_json_round_trip() {
    let spec = ChartSpec::new(Case::Orth(OrthExample::Example2), 2, 1, 1, Level::Spin).unwrap();
    let s = serde_json::to_string(&spec).unwrap();
    assert_eq!(serde_json::from_str::<ChartSpec>(&s).unwrap(), spec);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn every_valid_lift_is_admissible(n in 2usize..=5, pick in 0usize..64, i in 0usize..5) {
        let f = fp(101);
        let i = i % n;
        let s = pick % (n / 2 + 1);
        let sets = valid_subsets(n, s);
        let set = &sets[pick % sets.len()];
        let lift = lift_point(&f, set, n - s, s, i).unwrap();
        prop_assert!(lift.checks.all());
        let w = relative_position(&standard_chain(n), &lift_chain(&f, set, n - s, s).unwrap(), default_precision(n)).unwrap();
        prop_assert_eq!(w.t.iter().filter(|&&t| t != 0).count(), s);
    }
}
