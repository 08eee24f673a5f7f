//! Named verification suites. Each claim is a pure computation; claims run in parallel and
//! are reported in declaration order.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use charts::lift::{default_precision, valid_subsets};
use charts::orthogonal::{example1_groups, orthogonal_ring, orthogonal_spin_constraints};
use charts::{
    chart_even_sodd_reduction, chart_ideal, lift_chain, lift_point, orthogonal_chart_ideal, picard_i1_chart,
    relative_position, standard_chain, Case, ChartSpec, Level, OrthExample,
};
use exactalg::points::{count_points, count_points_multiprojective};
use exactalg::{AlgError, Field, Ideal, Polynomial, PrimeField, Rationals};
use orbits::{special_fiber_vs_orbit, SymmetricPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use spin::ae::{eigen_basis_int, eigenspace_of, split_gram};
use spin::laurent::{self, monomial, same_lattice, LVec, Laurent};
use spin::unitary::orthogonal_lattice;
use spin::wedge::{plucker, wedge_indices};
use spin::{ae_square_check, discriminant, eigen_basis, isotropic_parity, lattice_pm_basis, Label, Parity};
use weyl::adm::{
    adm0, adm0_by_dominance, adm0_by_projection, admissible_set, coweight_image, extreme_elements,
    length_histogram, vertexwise_check, weyl_orbit,
};
use weyl::{AffineGroup, ParahoricIndex};

use crate::config::{FieldChoice, RunConfig};
use crate::error::{CheckError, CliError};
use crate::report::{Bundle, ClaimReport, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Picard,
    Orthogonal,
    SpecialParahoric,
    Spin,
    Weyl,
    Conjectures,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Picard, Suite::Orthogonal, Suite::SpecialParahoric, Suite::Spin, Suite::Weyl, Suite::Conjectures];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Picard => "picard",
            Suite::Orthogonal => "orthogonal",
            Suite::SpecialParahoric => "special-parahoric",
            Suite::Spin => "spin",
            Suite::Weyl => "weyl",
            Suite::Conjectures => "conjectures",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s.is_empty() {
            return Err(CliError::usage("empty suite name"));
        }
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            CliError::usage(format!("unknown suite `{s}`; expected one of {}", names.join(", ")))
        })
    }
}

type Check = Result<(bool, Value), CheckError>;

pub struct Claim<F: Field> {
    pub id: String,
    pub statement: String,
    run: Box<dyn Fn(&Ctx<F>) -> Check + Send + Sync>,
}

fn claim<F: Field>(
    id: impl Into<String>,
    statement: impl Into<String>,
    run: impl Fn(&Ctx<F>) -> Check + Send + Sync + 'static,
) -> Claim<F> {
    Claim { id: id.into(), statement: statement.into(), run: Box::new(run) }
}

pub struct Ctx<F: Field> {
    pub field: F,
    pub cfg: RunConfig,
}

impl<F: Field> Ctx<F> {
    pub fn chart(&self, case: Case, n: usize, r: usize, s: usize, level: Level) -> Result<Ideal<F>, CheckError> {
        Ok(chart_ideal(&self.field, &ChartSpec::new(case, n, r, s, level)?)?.with_budget(self.cfg.budget))
    }

    fn orth(&self, which: OrthExample, level: Level) -> Result<Ideal<F>, CheckError> {
        Ok(orthogonal_chart_ideal(&self.field, which, level)?.with_budget(self.cfg.budget))
    }
}

/// Runs a suite under `cfg`; the coefficient field comes from the configuration.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Bundle {
    match cfg.field {
        FieldChoice::Prime(p) => run_claims(suite, PrimeField::new(p).expect("supported prime"), cfg),
        FieldChoice::Rationals => run_claims(suite, Rationals, cfg),
    }
}

fn run_claims<F: Field>(suite: Suite, field: F, cfg: &RunConfig) -> Bundle {
    let ctx = Ctx { field, cfg: cfg.clone() };
    let reports = claims::<F>(suite, cfg).par_iter().map(|c| evaluate(c, &ctx)).collect();
    Bundle::new(suite.name(), reports)
}

pub fn evaluate<F: Field>(c: &Claim<F>, ctx: &Ctx<F>) -> ClaimReport {
    let (status, witness) = match (c.run)(ctx) {
        Ok((true, w)) => (Status::Pass, w),
        Ok((false, w)) => (Status::Fail, w),
        Err(e) if e.is_budget() => (Status::Inconclusive, json!({ "error": e.to_string() })),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    ClaimReport { claim: c.id.clone(), statement: c.statement.clone(), status, witness, setting: ctx.cfg.setting() }
}

pub fn claims<F: Field>(suite: Suite, cfg: &RunConfig) -> Vec<Claim<F>> {
    match suite {
        Suite::Picard => picard(cfg),
        Suite::Orthogonal => orthogonal(),
        Suite::SpecialParahoric => special_parahoric(),
        Suite::Spin => spin_algebra(cfg),
        Suite::Weyl => weyl_claims(cfg),
        Suite::Conjectures => conjectures(),
    }
}

/// The signatures checked for spin-level flatness: all of n = 3, 4 with the applicable case.
/// For n even and s odd the chart around π·Λ_m is empty at spin level; the chart around
/// ⟨f_1, πf_1, …⟩ carries that signature.
pub const SPIN_FLAT_SPECS: [(Case, usize, usize, usize); 6] = [
    (Case::A, 3, 3, 0),
    (Case::A, 3, 2, 1),
    (Case::B, 4, 4, 0),
    (Case::B, 4, 3, 1),
    (Case::B, 4, 2, 2),
    (Case::B1, 4, 3, 1),
];

/// Charts with nonempty generic fiber on which the three levels are compared.
const LEVEL_SPECS: [(Case, usize, usize, usize); 5] =
    [(Case::A, 3, 3, 0), (Case::A, 3, 2, 1), (Case::B, 4, 4, 0), (Case::B, 4, 2, 2), (Case::B1, 4, 3, 1)];

/// Flatness over k[u]_(u); a chart with u in its ideal is flat only if it is empty.
pub fn flatness<F: Field>(ideal: &Ideal<F>, u: &str) -> Result<(bool, Value), CheckError> {
    match ideal.is_flat_over_dvr(u) {
        Ok(f) => Ok((f.flat, json!({ "flat": f.flat, "witness": f.witness.map(|w| w.to_string()) }))),
        Err(AlgError::SpecialFiberEverything) => {
            let empty = ideal.is_unit()?;
            Ok((empty, json!({ "flat": empty, "empty_chart": empty })))
        }
        Err(e) => Err(e.into()),
    }
}

fn picard<F: Field>(cfg: &RunConfig) -> Vec<Claim<F>> {
    let seed = cfg.seed;
    vec![
        claim(
            "picard-i1-graph",
            "At I = {1} with w = −u imposed, eliminating the other matrix entries leaves the zero ideal in (x, y, u) and every entry is a polynomial in (x, y, u).",
            |c: &Ctx<F>| {
                let r = picard_i1_chart(&c.field)?.report(0, 0)?;
                Ok((r.eliminated_is_zero && r.graph_over_xy, json!(r)))
            },
        ),
        claim(
            "picard-i1-lu",
            "On the w = −u locus, 2c = x², d − a = xy and −2b = y².",
            |c: &Ctx<F>| {
                let r = picard_i1_chart(&c.field)?.report(0, 0)?;
                Ok((r.lu_identity, json!(r)))
            },
        ),
        claim(
            "picard-i1-w-persists",
            "w + u lies in the u-saturation of the I = {1} chart ideal.",
            |c: &Ctx<F>| {
                let r = picard_i1_chart(&c.field)?.report(0, 0)?;
                Ok((r.w_persists, json!(r)))
            },
        ),
        claim(
            "picard-i1-jacobian",
            "At 50 random points of the w = −u locus the Jacobian in the nine matrix entries has corank 2.",
            move |c: &Ctx<F>| {
                let r = picard_i1_chart(&c.field)?.report(50, seed)?;
                Ok((r.jacobian_points == 50 && r.jacobian_corank2 == 50, json!(r)))
            },
        ),
        claim("picard-i0-flat", "The wedge chart at I = {0}, (n, r, s) = (3, 2, 1), is flat over the DVR.", |c: &Ctx<F>| {
            flatness(&c.chart(Case::A, 3, 2, 1, Level::Wedge)?, "u")
        }),
        claim(
            "picard-i0-orbit",
            "The special fiber of the I = {0} wedge chart has dimension 2 and the radical of the closure of the orthogonal orbit of type (2, 1).",
            |c: &Ctx<F>| {
                let cmp = special_fiber_vs_orbit(&c.field, 3, 2, 1, SymmetricPair::Orthogonal)?;
                Ok((cmp.consistent(), json!(cmp)))
            },
        ),
    ]
}

/// Points of the Example 1 fiber with u = `u`; `None` for the special fiber.
fn example1_points<F: Field>(ideal: &Ideal<F>, u: Option<i64>) -> Result<usize, CheckError> {
    let fiber = match u {
        None => ideal.special_fiber("u")?,
        Some(v) => ideal.specialize("u", &ideal.ring().field.from_i64(v))?,
    };
    match fiber {
        Some(f) => Ok(count_points_multiprojective(&f, &example1_groups())?),
        None => Err(AlgError::Invalid("fiber is the whole space".into()).into()),
    }
}

fn named<F: Field>(ideal: &Ideal<F>, names: &[&str]) -> Result<Vec<Polynomial<F>>, CheckError> {
    Ok(names.iter().map(|n| ideal.var(n)).collect::<exactalg::Result<_>>()?)
}

fn orthogonal<F: Field>() -> Vec<Claim<F>> {
    vec![
        claim(
            "example1-naive-points",
            "The naive special fiber of the O_2 example has 3 points while the generic fiber has 2.",
            |c: &Ctx<F>| {
                let naive = c.orth(OrthExample::Example1, Level::Naive)?;
                let special = example1_points(&naive, None)?;
                let generic = example1_points(&naive, Some(1))?;
                Ok((special == 3 && generic == 2, json!({ "special": special, "generic": generic })))
            },
        ),
        claim("example1-naive-not-flat", "The naive O_2 local model is not flat.", |c: &Ctx<F>| {
            let (flat, w) = flatness(&c.orth(OrthExample::Example1, Level::Naive)?, "u")?;
            Ok((!flat, w))
        }),
        claim(
            "example1-spin-points",
            "The spin condition removes the extra point: the special fiber has 2 points.",
            |c: &Ctx<F>| {
                let spin = c.orth(OrthExample::Example1, Level::Spin)?;
                let special = example1_points(&spin, None)?;
                Ok((special == 2, json!({ "special": special })))
            },
        ),
        claim("example1-spin-flat", "The spin O_2 local model is flat.", |c: &Ctx<F>| {
            flatness(&c.orth(OrthExample::Example1, Level::Spin)?, "u")
        }),
        claim(
            "example2-spin-fiber",
            "For O_4 at I = {1}, the spin conditions contain x2 and y3, the spin model is flat, and its special fiber has dimension 1 and the radical of (x2, y3, x3·y2).",
            |c: &Ctx<F>| {
                let ring = orthogonal_ring(&c.field, OrthExample::Example2);
                let cons = Ideal::new(orthogonal_spin_constraints(&ring, OrthExample::Example2, Label::Plus)?)?
                    .with_budget(c.cfg.budget);
                let v = |i| Polynomial::var(&ring, i);
                let has_lines = cons.contains(&v(0))? && cons.contains(&v(3))?;
                let spin = c.orth(OrthExample::Example2, Level::Spin)?;
                let (flat, _) = flatness(&spin, "u")?;
                let special = spin.special_fiber("u")?.ok_or(AlgError::SpecialFiberEverything)?;
                let v = named(&special, &["x2", "x3", "y2", "y3"])?;
                let lines = Ideal::new(vec![v[0].clone(), v[3].clone(), v[1].mul(&v[2])])?.with_budget(c.cfg.budget);
                let same = special.same_radical(&lines)?;
                let dim = special.krull_dim()?;
                Ok((
                    has_lines && flat && same && dim == Some(1),
                    json!({ "constraints_contain_x2_y3": has_lines, "flat": flat, "same_radical": same, "dim": dim }),
                ))
            },
        ),
        claim(
            "example2-naive-fiber",
            "The naive special fiber for O_4 at I = {1} is one-dimensional with four components: the coordinate axes.",
            |c: &Ctx<F>| {
                let evidence = naive_four_lines(&c.orth(OrthExample::Example2, Level::Naive)?)?;
                Ok((evidence.pass(), json!(evidence)))
            },
        ),
    ]
}

/// Minimal-prime evidence for the naive Example 2 special fiber: dimension 1, the slice
/// v = 1 is a single reduced point on the v-axis for each coordinate v, and the radical
/// is that of the four coordinate axes.
#[derive(Debug, Clone, serde::Serialize)]
pub struct LineEvidence {
    pub dim: Option<usize>,
    pub slice_points: BTreeMap<String, usize>,
    pub slices_on_axes: bool,
    pub radical_is_axes: bool,
}

impl LineEvidence {
    pub fn pass(&self) -> bool {
        self.dim == Some(1)
            && self.slice_points.len() == 4
            && self.slice_points.values().all(|&k| k == 1)
            && self.slices_on_axes
            && self.radical_is_axes
    }
}

pub fn naive_four_lines<F: Field>(naive: &Ideal<F>) -> Result<LineEvidence, CheckError> {
    let special = naive.special_fiber("u")?.ok_or(AlgError::SpecialFiberEverything)?;
    let names = ["x2", "x3", "y2", "y3"];
    let vars = named(&special, &names)?;
    let one = Polynomial::one(special.ring());
    let mut slice_points = BTreeMap::new();
    let mut slices_on_axes = true;
    for (i, v) in vars.iter().enumerate() {
        let slice = special.add_generators(vec![v.sub(&one)])?;
        slice_points.insert(names[i].to_string(), count_points(&slice)?);
        for (j, w) in vars.iter().enumerate() {
            if i != j {
                slices_on_axes &= slice.radical_contains(w)?;
            }
        }
    }
    let mut products = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            products.push(vars[i].mul(&vars[j]));
        }
    }
    let radical_is_axes = special.same_radical(&Ideal::new(products)?.with_budget(special.budget()))?;
    Ok(LineEvidence { dim: special.krull_dim()?, slice_points, slices_on_axes, radical_is_axes })
}

/// Wedge charts whose special fibers are compared with dimension rs.
pub const DIMENSION_SPECS: [(Case, usize, usize, usize); 4] =
    [(Case::A, 3, 2, 1), (Case::B, 4, 2, 2), (Case::A, 5, 3, 2), (Case::A, 5, 4, 1)];

/// Wedge charts with n even and s odd, whose generic fiber is empty.
pub const EMPTY_SPECS: [(usize, usize, usize); 2] = [(4, 3, 1), (6, 5, 1)];

fn special_parahoric<F: Field>() -> Vec<Claim<F>> {
    vec![
        claim(
            "wedge-dimensions",
            "Special fibers of the wedge charts at the special vertex have dimension rs.",
            |c: &Ctx<F>| {
                let mut ok = true;
                let mut w = Vec::new();
                for (case, n, r, s) in DIMENSION_SPECS {
                    let sf = c.chart(case, n, r, s, Level::Wedge)?.special_fiber("u")?;
                    let dim = match sf {
                        Some(sf) => sf.krull_dim()?,
                        None => None,
                    };
                    ok &= dim == Some(r * s);
                    w.push(json!({ "n": n, "r": r, "s": s, "dim": dim }));
                }
                Ok((ok, Value::Array(w)))
            },
        ),
        claim(
            "generic-emptiness",
            "For n even and s odd the wedge chart around π·Λ_m has empty generic fiber.",
            |c: &Ctx<F>| {
                let mut ok = true;
                let mut w = Vec::new();
                for (n, r, s) in EMPTY_SPECS {
                    let empty = c.chart(Case::B, n, r, s, Level::Wedge)?.is_generically_empty("u")?;
                    ok &= empty;
                    w.push(json!({ "n": n, "r": r, "s": s, "generically_empty": empty }));
                }
                Ok((ok, Value::Array(w)))
            },
        ),
        claim(
            "even-sodd-reduction",
            "For n even and s odd the chart around ⟨f_1, πf_1, …⟩ is the rank n − 2 chart of signature (r − 1, s − 1) times an affine space of dimension n − 1.",
            |c: &Ctx<F>| {
                let mut ok = true;
                let mut w = Vec::new();
                for (n, r, s) in [(4, 3, 1), (6, 3, 3)] {
                    let red = chart_even_sodd_reduction(&c.field, n, r, s)?;
                    ok &= red.variables_match && red.ideal_matches;
                    w.push(json!({ "n": n, "r": r, "s": s, "variables_match": red.variables_match, "ideal_matches": red.ideal_matches }));
                }
                Ok((ok, Value::Array(w)))
            },
        ),
        claim(
            "orbit-closures",
            "Wedge special fibers at the special vertex have the radical of the closures of the nilpotent orbits of type (2^s, 1^r).",
            |c: &Ctx<F>| {
                let a = special_fiber_vs_orbit(&c.field, 3, 2, 1, SymmetricPair::Orthogonal)?;
                let b = special_fiber_vs_orbit(&c.field, 4, 2, 2, SymmetricPair::Symplectic)?;
                Ok((a.consistent() && b.consistent(), json!([a, b])))
            },
        ),
        claim(
            "levels-agree-generically",
            "Naive, wedge and spin charts have the same generic fiber.",
            |c: &Ctx<F>| {
                let mut ok = true;
                let mut w = Vec::new();
                for (case, n, r, s) in LEVEL_SPECS {
                    let sat = |level| -> Result<Ideal<F>, CheckError> {
                        let i = c.chart(case, n, r, s, level)?;
                        let u = i.var("u")?;
                        Ok(i.saturate(&u)?)
                    };
                    let naive = sat(Level::Naive)?;
                    let same = naive.equals(&sat(Level::Wedge)?)? && naive.equals(&sat(Level::Spin)?)?;
                    ok &= same;
                    w.push(json!({ "case": case, "n": n, "r": r, "s": s, "equal": same }));
                }
                Ok((ok, Value::Array(w)))
            },
        ),
    ]
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn random_diag<G: Field>(field: &G, rng: &mut ChaCha8Rng, k: usize) -> Vec<Vec<G::Elem>> {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i != j {
                        return field.zero();
                    }
                    loop {
                        let v = field.from_i64(rng.gen_range(-9..10));
                        if !field.is_zero(&v) {
                            return v;
                        }
                    }
                })
                .collect()
        })
        .collect()
}

fn coordinate_subspace(n: usize, s: &[usize]) -> Vec<Vec<u64>> {
    s.iter().map(|&i| (1..=2 * n).map(|j| u64::from(i == j)).collect()).collect()
}

/// The parity rule on coordinate Lagrangians of the split form of rank 2n: two of them are in
/// the same family iff their top wedges lie in the same eigenspace of a_e.
pub fn parity_rule_coordinate(n: usize) -> Result<bool, CheckError> {
    let f = PrimeField::new(13)?;
    let g = split_gram(&f, n);
    let lagrangians: Vec<Vec<usize>> =
        wedge_indices(n).into_iter().filter(|s| s.iter().all(|&i| !s.contains(&(2 * n + 1 - i)))).collect();
    let mut ok = lagrangians.len() == 1 << n;
    for a in &lagrangians {
        let wa = coordinate_subspace(n, a);
        let la = eigenspace_of(&f, &plucker(&f, &wa)?);
        for b in &lagrangians {
            let wb = coordinate_subspace(n, b);
            let par = isotropic_parity(&f, &g, &wa, &wb)?;
            let lb = eigenspace_of(&f, &plucker(&f, &wb)?);
            ok &= la.is_some() && lb.is_some() && (par == Parity::Same) == (la == lb);
        }
    }
    Ok(ok)
}

/// The (∧²Λ₋₁)_+ lattice for the O_4 example in lattice coordinates:
/// ⟨e1∧e2, e3∧pe4, e1∧pe4 + p·e2∧e3⟩.
pub fn example2_plus_basis_matches() -> Result<bool, CheckError> {
    let f = PrimeField::new(32003)?;
    let idx = wedge_indices(2);
    let pos = |s: &[usize]| idx.iter().position(|x| x == s).expect("wedge index");
    let lv = |terms: &[(usize, i64, i32)]| -> LVec<u64> {
        let mut v: LVec<u64> = vec![Laurent::zero(); 6];
        for &(i, c, e) in terms {
            v[i] = laurent::add(&f, &v[i], &monomial(&f, f.from_i64(c), e));
        }
        v
    };
    let pm = lattice_pm_basis(&f, &orthogonal_lattice(2, -1)?, Label::Plus);
    let expected =
        vec![lv(&[(pos(&[1, 2]), 1, 0)]), lv(&[(pos(&[3, 4]), 1, 0)]), lv(&[(pos(&[1, 4]), 1, 0), (pos(&[2, 3]), 1, 1)])];
    Ok(same_lattice(&f, &pm.basis, &expected))
}

fn spin_algebra<F: Field>(cfg: &RunConfig) -> Vec<Claim<F>> {
    let seed = cfg.seed;
    vec![
        claim(
            "ae-square",
            "a_e² is multiplication by the discriminant, on 100 random diagonal forms of rank ≤ 6 over F_5 and Q.",
            move |_: &Ctx<F>| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let f5 = PrimeField::new(5)?;
                let mut bad = 0;
                for _ in 0..100 {
                    let n = rng.gen_range(1..=3);
                    let g = random_diag(&f5, &mut rng, 2 * n);
                    bad += usize::from(ae_square_check(&f5, &g)? != discriminant(&f5, &g)?.d);
                    let gq = random_diag(&Rationals, &mut rng, 2 * n);
                    bad += usize::from(ae_square_check(&Rationals, &gq)? != discriminant(&Rationals, &gq)?.d);
                }
                Ok((bad == 0, json!({ "forms": 200, "mismatches": bad })))
            },
        ),
        claim(
            "eigen-bases",
            "The explicit bases of the ± eigenspaces of a_e on ∧ⁿ of a split space of rank 2n each have C(2n, n)/2 elements, lie in their eigenspaces and together span.",
            |_: &Ctx<F>| {
                let q = Rationals;
                let mut ok = true;
                let mut w = Vec::new();
                for n in 1..=4 {
                    let p = eigen_basis(&q, n, Label::Plus);
                    let m = eigen_basis(&q, n, Label::Minus);
                    let mut all: Vec<Vec<_>> = p.iter().map(|v| v.to_dense(&q)).collect();
                    all.extend(m.iter().map(|v| v.to_dense(&q)));
                    let rank = spin::wedge::rank(&q, &all);
                    let sides = p.iter().all(|v| eigenspace_of(&q, v) == Some(Label::Plus))
                        && m.iter().all(|v| eigenspace_of(&q, v) == Some(Label::Minus));
                    ok &= p.len() == binom(2 * n, n) / 2 && m.len() == p.len() && rank == binom(2 * n, n) && sides;
                    w.push(json!({ "n": n, "plus": p.len(), "minus": m.len(), "rank": rank }));
                }
                ok &= eigen_basis_int(2, Label::Plus).len() == 3;
                Ok((ok, Value::Array(w)))
            },
        ),
        claim(
            "example2-plus-lattice",
            "For Λ_{−1} = ⟨e1, e2, e3, πe4⟩ the lattice (∧²Λ)_+ is spanned by e1∧e2, e3∧πe4 and e1∧πe4 + π·e2∧e3.",
            |_: &Ctx<F>| {
                let ok = example2_plus_basis_matches()?;
                Ok((ok, json!({ "matches": ok })))
            },
        ),
        claim(
            "parity-rule",
            "Two coordinate Lagrangians meet in even codimension iff their top wedges lie in the same eigenspace of a_e.",
            |_: &Ctx<F>| {
                let mut ok = true;
                let mut w = Vec::new();
                for n in 1..=3 {
                    let holds = parity_rule_coordinate(n)?;
                    ok &= holds;
                    w.push(json!({ "n": n, "holds": holds }));
                }
                Ok((ok, Value::Array(w)))
            },
        ),
    ]
}

/// Lifts of all extreme points for rank `n`: every check passes and the relative positions are
/// exactly the extreme elements (or, for n = 2, the expected count).
pub fn lifts_exhaust<F: Field>(field: &F, n: usize, precision: Option<usize>) -> Result<(bool, Value), CheckError> {
    let prec = precision.map_or_else(|| default_precision(n), |p| i32::try_from(p).unwrap_or(i32::MAX));
    let mut ok = true;
    let mut w = Vec::new();
    for s in 0..=n / 2 {
        let r = n - s;
        let mut seen = BTreeSet::new();
        let mut checks = true;
        for set in valid_subsets(n, s) {
            for i in 0..n {
                checks &= lift_point(field, &set, r, s, i)?.checks.all();
            }
            let chain = lift_chain(field, &set, r, s)?;
            let pos = relative_position(&standard_chain(n), &chain, prec)?;
            checks &= pos.is_translation();
            seen.insert(pos);
        }
        let exhausts = if n >= 3 {
            let g = AffineGroup::new(n)?;
            let extremes: BTreeSet<_> = extreme_elements(&g, r, s)?.into_iter().collect();
            seen == extremes
        } else {
            seen.len() == if s == 0 { 1 } else { 2 }
        };
        ok &= checks && exhausts;
        w.push(json!({ "n": n, "s": s, "lifts": seen.len(), "checks": checks, "exhausts": exhausts }));
    }
    Ok((ok, Value::Array(w)))
}

fn weyl_claims<F: Field>(cfg: &RunConfig) -> Vec<Claim<F>> {
    let precision = cfg.precision;
    vec![
        claim(
            "adm0-closed-form",
            "The translation part Adm₀ of the admissible set is the closed-form chain, for n ≤ 9 and every signature.",
            |_: &Ctx<F>| {
                let mut ok = true;
                for n in 3..=9 {
                    let g = AffineGroup::new(n)?;
                    for s in 0..=n / 2 {
                        let chain = adm0(n, n - s, s)?;
                        ok &= chain == adm0_by_dominance(&g, n - s, s)?;
                        if n <= 7 {
                            ok &= chain == adm0_by_projection(&g, n - s, s)?;
                        }
                    }
                }
                Ok((ok, json!({ "max_n": 9 })))
            },
        ),
        claim(
            "extreme-count",
            "The extreme elements of Adm(μ) are the translations by W₀·λ, 2^s·C(m, s) of them.",
            |_: &Ctx<F>| {
                let mut ok = true;
                let mut w = Vec::new();
                for n in 3..=7 {
                    let g = AffineGroup::new(n)?;
                    for s in 0..=n / 2 {
                        let count = extreme_elements(&g, n - s, s)?.len();
                        let orbit = weyl_orbit(&g, &coweight_image(n, n - s, s)?).len();
                        let closed = (1 << s) * binom(g.m, s);
                        ok &= count == orbit && count == closed;
                        w.push(json!({ "n": n, "s": s, "extremes": count }));
                    }
                }
                Ok((ok, Value::Array(w)))
            },
        ),
        claim(
            "iwahori-n3",
            "For n = 3 and (r, s) = (2, 1) the Iwahori admissible set has 5 elements, with length histogram {2: 2, 1: 2, 0: 1}.",
            |_: &Ctx<F>| {
                let g = AffineGroup::new(3)?;
                let adm = admissible_set(&g, 2, 1)?;
                let hist = length_histogram(&g, &adm);
                let want: BTreeMap<usize, usize> = [(0, 1), (1, 2), (2, 2)].into();
                Ok((adm.len() == 5 && hist == want, json!({ "size": adm.len(), "histogram": hist })))
            },
        ),
        claim(
            "vertexwise-small-rank",
            "Adm^I(μ) is the intersection of the pullbacks of Adm^{i}(μ), i ∈ I, for n = 3, 4, 5, every signature and every I.",
            |_: &Ctx<F>| vertexwise(3..=5),
        ),
        claim(
            "lifts",
            "For n ≤ 4 the lift of every extreme point is an isotropic, π-stable lattice chain with the right characteristic polynomial, and the relative positions are exactly the extreme elements.",
            move |c: &Ctx<F>| {
                let mut ok = true;
                let mut w = Vec::new();
                for n in 2..=4 {
                    let (pass, v) = lifts_exhaust(&c.field, n, precision)?;
                    ok &= pass;
                    w.push(v);
                }
                Ok((ok, Value::Array(w)))
            },
        ),
    ]
}

/// Vertex-wise admissibility for every signature and every parahoric index set.
pub fn vertexwise(ranks: std::ops::RangeInclusive<usize>) -> Result<(bool, Value), CheckError> {
    let mut ok = true;
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in ranks {
        let g = AffineGroup::new(n)?;
        for s in 0..=n / 2 {
            for idx in ParahoricIndex::all(n) {
                let rep = vertexwise_check(&g, n - s, s, &idx.vertices())?;
                checked += 1;
                if !rep.holds {
                    ok = false;
                    failures.push(json!({ "n": n, "s": s, "I": idx.to_string() }));
                }
            }
        }
    }
    Ok((ok, json!({ "cases": checked, "failures": failures })))
}

fn conjectures<F: Field>() -> Vec<Claim<F>> {
    let mut v = vec![claim(
        "vertexwise-n6",
        "The vertex-wise admissibility identity holds for n = 6, every signature and every I.",
        |_: &Ctx<F>| vertexwise(6..=6),
    )];
    for (case, n, r, s) in SPIN_FLAT_SPECS {
        v.push(claim(
            format!("spin-flat-{}-{n}-{r}-{s}", case_name(case)),
            format!("The spin-level chart of case {} with (n, r, s) = ({n}, {r}, {s}) is flat over the DVR.", case_name(case)),
            move |c: &Ctx<F>| flatness(&c.chart(case, n, r, s, Level::Spin)?, "u"),
        ));
    }
    v
}

pub fn case_name(case: Case) -> &'static str {
    match case {
        Case::A => "a",
        Case::B => "b",
        Case::B1 => "b1",
        Case::PicardI1 => "picard-i1",
        Case::Orth(OrthExample::Example1) => "orth1",
        Case::Orth(OrthExample::Example2) => "orth2",
    }
}
