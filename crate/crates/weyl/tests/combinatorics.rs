use std::collections::BTreeSet;
use std::sync::Arc;

use exactalg::{parse_poly, Ideal, MonomialOrder, PrimeField, Ring};
use num::rational::Ratio;
use num::BigUint;
use weyl::adm::{
    adm0, adm0_by_dominance, adm0_by_projection, admissible_set, coweight_image, project_double_coset,
    vertexwise_check,
};
use weyl::coherence::coherence_rhs;
use weyl::parahoric::{kottwitz_even, kottwitz_permutation, parse_label, tau_permutation};
use weyl::roots::{affine_root_set, hyperplanes_scaled, unitary_relative_roots, RelativeRoot};
use weyl::svg::emit_alcove_svg;
use weyl::{parahoric_classify, AffineGroup, Elem, Label, ParahoricIndex, WeylError};

#[test]
fn affine_data() {
    let g4 = AffineGroup::new(4).unwrap();
    let d = g4.data();
    assert_eq!(d.sigma_type, "B_2");
    let co: BTreeSet<Vec<i64>> = d.positive_coroots.into_iter().collect();
    let want: BTreeSet<Vec<i64>> = [vec![1, -1], vec![1, 1], vec![2, 0], vec![0, 2]].into();
    assert_eq!(co, want);
    assert_eq!(d.omega_order, 2);
    let g5 = AffineGroup::new(5).unwrap();
    let d = g5.data();
    assert_eq!(d.sigma_type, "C_2");
    let co: BTreeSet<Vec<i64>> = d.positive_coroots.into_iter().collect();
    let want: BTreeSet<Vec<i64>> = [vec![1, -1], vec![1, 1], vec![1, 0], vec![0, 1]].into();
    assert_eq!(co, want);
    assert_eq!(d.omega_order, 1);
    assert_eq!(AffineGroup::new(3).unwrap().data().sigma_type, "C_1");
    assert!(matches!(AffineGroup::new(2), Err(WeylError::RankTooSmall(2))));
}

#[test]
fn affine_roots() {
    let half = Ratio::new(1, 2);
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    // n = 4: ±x_i ± x_j + ½Z and ±2x_i + Z.
    for (root, set) in affine_root_set(&unitary_relative_roots(4)) {
        if root.beta.iter().any(|&b| b == 2) {
            assert_eq!((set.offset, set.step), (zero, one));
        } else {
            assert_eq!((set.offset, set.step), (zero, half));
        }
    }
    // n = 3: 2x_1 + ½ + Z.
    let r3 = affine_root_set(&unitary_relative_roots(3));
    let two_x = r3.iter().find(|(r, _)| r.beta == vec![2]).unwrap();
    assert_eq!((two_x.1.offset, two_x.1.step), (half, one));
    assert!(two_x.1.contains(Ratio::new(3, 2)) && !two_x.1.contains(one));
    let trivial = weyl::roots::shift_set(&RelativeRoot { beta: vec![1], l: 1, half_is_root: false });
    assert_eq!((trivial.offset, trivial.step), (zero, one));
}

/// The scaled hyperplanes coincide with the walls used by the group model.
#[test]
fn root_hyperplanes_match_group_walls() {
    for n in 3..=7 {
        let g = AffineGroup::new(n).unwrap();
        let mut from_roots: BTreeSet<(Vec<i64>, Ratio<i64>, Ratio<i64>)> = BTreeSet::new();
        for (normal, off, per) in hyperplanes_scaled(&unitary_relative_roots(n)) {
            from_roots.insert((normal, off, per));
        }
        // Group walls: α(y) ∈ Z for the positive roots α (2e_i for n odd means y_i ∈ ½Z).
        let mut walls: BTreeSet<Vec<i64>> = BTreeSet::new();
        for a in g.positive_roots() {
            walls.insert(a.clone());
        }
        for a in &walls {
            let gcd = a.iter().fold(0, |acc: i64, &x| num::integer::gcd(acc, x));
            let normal: Vec<i64> = a.iter().map(|x| x / gcd).collect();
            let levels: BTreeSet<Ratio<i64>> = (0..4 * gcd).map(|k| Ratio::new(k, gcd)).collect();
            // Union of root hyperplane families with this normal, sampled on [0, 4).
            let mut got: BTreeSet<Ratio<i64>> = BTreeSet::new();
            for (nn, off, per) in &from_roots {
                if *nn == normal {
                    let mut x = *off;
                    while x < Ratio::from_integer(4) {
                        got.insert(x);
                        x += per;
                    }
                }
            }
            assert_eq!(got, levels, "n={n} normal={normal:?}");
        }
    }
}

#[test]
fn coweights_and_adm0() {
    assert_eq!(coweight_image(4, 2, 2).unwrap(), vec![1, 1]);
    assert_eq!(coweight_image(5, 4, 1).unwrap(), vec![1, 0]);
    assert_eq!(coweight_image(6, 6, 0).unwrap(), vec![0, 0, 0]);
    assert!(coweight_image(5, 2, 3).is_err());
    assert_eq!(adm0(5, 3, 2).unwrap(), vec![vec![1, 1], vec![1, 0], vec![0, 0]]);
    assert_eq!(adm0(4, 2, 2).unwrap(), vec![vec![1, 1], vec![0, 0]]);
    assert_eq!(adm0(4, 3, 1).unwrap(), vec![vec![1, 0]]);
    for n in 3..=9 {
        let g = AffineGroup::new(n).unwrap();
        for s in 0..=n / 2 {
            let chain = adm0(n, n - s, s).unwrap();
            assert_eq!(chain, adm0_by_dominance(&g, n - s, s).unwrap(), "n={n} s={s}");
            if n <= 7 {
                assert_eq!(chain, adm0_by_projection(&g, n - s, s).unwrap(), "n={n} s={s}");
            }
            if n % 2 == 0 {
                for w in chain.windows(2) {
                    let d: Vec<i64> = w[0].iter().zip(&w[1]).map(|(a, b)| a - b).collect();
                    let k = w[0].iter().filter(|&&x| x == 1).count();
                    let mut step = vec![0; g.m];
                    step[k - 2] = 1;
                    step[k - 1] = 1;
                    assert_eq!(d, step);
                }
            }
        }
    }
}

#[test]
fn double_coset_projection() {
    let g = AffineGroup::new(5).unwrap();
    let special: BTreeSet<usize> = [0].into();
    let t = Elem::translation(vec![0, -1]);
    let p = project_double_coset(&g, &t, &special);
    assert_eq!(weyl::adm::dominant(&p.t), vec![1, 0]);
    let iw: BTreeSet<usize> = [0, 1, 2].into();
    let s1 = g.simple(1);
    assert_eq!(project_double_coset(&g, &s1, &iw), s1);
    assert_eq!(project_double_coset(&g, &s1, &special), g.identity());
    assert_eq!(project_double_coset(&g, &g.identity(), &special), g.identity());
}

#[test]
fn vertexwise_identity_small_rank() {
    for n in 3..=5 {
        let g = AffineGroup::new(n).unwrap();
        for s in 0..=n / 2 {
            for idx in ParahoricIndex::all(n) {
                let rep = vertexwise_check(&g, n - s, s, &idx.vertices()).unwrap();
                assert!(rep.holds, "n={n} s={s} I={idx}: {:?}", rep.counterexample);
                assert_eq!(rep.intersection_size, rep.adm_size);
            }
        }
    }
}

#[test]
fn parahoric_normalization() {
    let lab = |s: &str| parse_label(s, 3).unwrap();
    let c = parahoric_classify(6, &[lab("0"), lab("3"), lab("3'")]).unwrap();
    assert_eq!(c.index.set, [0, 2, 3].into());
    assert!(!c.conjugated_by_tau);
    let c = parahoric_classify(6, &[lab("3'")]).unwrap();
    assert_eq!(c.index.set, [3].into());
    assert!(c.conjugated_by_tau);
    let c = parahoric_classify(5, &[Label::Idx(0)]).unwrap();
    assert_eq!(c.index.set, [0].into());
    assert!(parahoric_classify(6, &[]).is_err());
    assert!(parahoric_classify(5, &[Label::MPrime]).is_err());
    assert!(ParahoricIndex::new(6, [2].into()).is_err());
    // Every valid normalized set maps to a distinct nonempty vertex set.
    for n in 3..=9 {
        let all = ParahoricIndex::all(n);
        let vs: BTreeSet<BTreeSet<usize>> = all.iter().map(|i| i.vertices()).collect();
        assert_eq!(vs.len(), all.len());
        let m = n / 2;
        let expected = if n % 2 == 1 { (1 << (m + 1)) - 1 } else { (1 << (m + 1)) - 1 - (1 << (m - 1)) };
        assert_eq!(all.len(), expected, "n={n}");
    }
}

#[test]
fn kottwitz_invariant() {
    assert_eq!(kottwitz_even(4, 0, &[0, 0]).unwrap(), (0, 0));
    assert_eq!(kottwitz_even(4, 1, &[1, 0]).unwrap(), (1, 1));
    assert!(kottwitz_even(5, 0, &[0, 0]).is_err());
    for n in [4, 6, 8] {
        assert_eq!(kottwitz_permutation(n, &tau_permutation(n)).unwrap().1, 1);
        let id: Vec<usize> = (0..n).collect();
        assert_eq!(kottwitz_permutation(n, &id).unwrap(), (0, 0));
    }
}

/// Number of semistandard tableaux of rectangular shape (rows × cols) with entries ≤ n.
fn ssyt_rectangle(rows: usize, cols: usize, n: usize) -> u64 {
    fn fill(t: &mut Vec<Vec<usize>>, pos: usize, rows: usize, cols: usize, n: usize) -> u64 {
        if pos == rows * cols {
            return 1;
        }
        let (r, c) = (pos / cols, pos % cols);
        let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            t[r][c] = v;
            total += fill(t, pos + 1, rows, cols, n);
        }
        t[r][c] = 0;
        total
    }
    let mut t = vec![vec![0; cols]; rows];
    fill(&mut t, 0, rows, cols, n)
}

fn plucker_ideal_gr2(n: usize) -> Ideal<PrimeField> {
    let mut names = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            names.push(format!("p{i}{j}"));
        }
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring: Arc<Ring<PrimeField>> = Ring::new(PrimeField::new(32003).unwrap(), &refs, MonomialOrder::Grevlex);
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let src = format!("p{i}{j}*p{k}{l} - p{i}{k}*p{j}{l} + p{i}{l}*p{j}{k}");
                    gens.push(parse_poly(&ring, &src).unwrap());
                }
            }
        }
    }
    Ideal::new(gens).unwrap()
}

#[test]
fn coherence_rhs_against_oracles() {
    assert_eq!(coherence_rhs(2, 1, 1).unwrap(), BigUint::from(3u32));
    assert_eq!(coherence_rhs(4, 2, 1).unwrap(), BigUint::from(20u32));
    for n in 2..=6 {
        for s in 1..n {
            assert_eq!(coherence_rhs(n, s, 0).unwrap(), BigUint::from(1u32));
            for k in 1..=2 {
                let want = ssyt_rectangle(s, 2 * k as usize, n);
                assert_eq!(coherence_rhs(n, s, k).unwrap(), BigUint::from(want), "n={n} s={s} k={k}");
            }
        }
    }
    for n in [4, 5] {
        let ideal = plucker_ideal_gr2(n);
        for k in 1..=2u64 {
            let hf = ideal.hilbert_function(2 * k as u32, false).unwrap();
            assert_eq!(coherence_rhs(n, 2, k).unwrap(), BigUint::from(hf), "n={n} k={k}");
        }
    }
    assert!(coherence_rhs(4, 0, 1).is_err());
    assert!(coherence_rhs(4, 4, 1).is_err());
}

fn count_fill(svg: &str, color: &str) -> usize {
    svg.matches(&format!("fill=\"{color}\"")).count()
}

#[test]
fn alcove_pictures() {
    let g3 = AffineGroup::new(3).unwrap();
    let iw3: BTreeSet<usize> = [0, 1].into();
    let svg = emit_alcove_svg(&g3, 2, 1, &iw3).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(count_fill(&svg, "#555555") + count_fill(&svg, "#cccccc"), 5);
    assert_eq!(count_fill(&svg, "#555555"), 2);
    let svg = emit_alcove_svg(&g3, 3, 0, &iw3).unwrap();
    assert_eq!(count_fill(&svg, "#555555") + count_fill(&svg, "#cccccc"), 1);
    for (n, s) in [(4, 2), (4, 1), (5, 2), (5, 1)] {
        let g = AffineGroup::new(n).unwrap();
        let iw: BTreeSet<usize> = (0..=g.m).collect();
        let svg = emit_alcove_svg(&g, n - s, s, &iw).unwrap();
        let adm = admissible_set(&g, n - s, s).unwrap();
        assert_eq!(count_fill(&svg, "#555555") + count_fill(&svg, "#cccccc"), adm.len());
        assert!(!svg.contains("<script"));
    }
    let g6 = AffineGroup::new(6).unwrap();
    assert!(matches!(emit_alcove_svg(&g6, 3, 3, &[0].into()), Err(WeylError::RankTooLarge(6))));
}

#[test]
fn admissible_set_sizes_rank_two() {
    // Regression values from the BFS closure, itself cross-checked against the subword oracle.
    let sizes: Vec<(usize, usize, usize)> = [(4, 2), (4, 1), (5, 2), (5, 1)]
        .iter()
        .map(|&(n, s)| (n, s, admissible_set(&AffineGroup::new(n).unwrap(), n - s, s).unwrap().len()))
        .collect();
    assert_eq!(sizes, vec![(4, 2, 19), (4, 1, 13), (5, 2, 41), (5, 1, 19)]);
}
