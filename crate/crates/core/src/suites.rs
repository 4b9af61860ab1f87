//! Seeded property suites behind the CLI `verify` command and the acceptance
//! tests: core reduction-number identities, the linear-growth corpus, the
//! generalized-regularity axioms, and the Koszul checks.

use crate::asymptotics::{
    quotient_reduction_series, verify_grf_linearity, verify_linear_growth, Check, GrfKind,
    SeriesParams,
};
use crate::error::Error;
use crate::koszul;
use crate::linalg::PrimeField;
use crate::module::{BasisElement, Component, GradedModule};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::reduction::{
    generic_reduction_number, r_with_respect_to, reduction_matrix, ReductionIdeal,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Random monomial ideal with small generators; may come out zero.
pub fn random_ideal(rng: &mut ChaCha8Rng, m: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let count = rng.gen_range(0..=max_gens);
    let gens = (0..count)
        .map(|_| {
            Monomial::new(
                (0..m)
                    .map(|_| rng.gen_range(0..=max_deg))
                    .collect::<Vec<u32>>(),
            )
        })
        .collect();
    MonomialIdeal::from_gens(m, gens).expect("uniform ambient")
}

/// Random nonzero graded module: <= 3 components, <= 3 variables, generator
/// degrees <= 4, shifts in [-2, 2].
pub fn random_module(rng: &mut ChaCha8Rng, field: PrimeField, m: usize) -> GradedModule {
    loop {
        let count = rng.gen_range(1..=3);
        let components = (0..count)
            .map(|_| {
                let numerator = {
                    let i = random_ideal(rng, m, 3, 2);
                    if i.is_zero() {
                        MonomialIdeal::unit(m)
                    } else {
                        i
                    }
                };
                Component {
                    shift: rng.gen_range(-2..=2),
                    numerator,
                    denominator: random_ideal(rng, m, 3, 4),
                }
            })
            .collect();
        let module = GradedModule::new(field, m, components).expect("uniform ambient");
        if !module.is_zero() {
            return module;
        }
    }
}

/// A random nonzero ideal inside R_+, for series experiments.
pub fn random_positive_ideal(rng: &mut ChaCha8Rng, m: usize) -> MonomialIdeal {
    loop {
        let i = random_ideal(rng, m, 3, 3);
        if !i.is_zero() && !i.contains(&Monomial::one(m)) {
            return i;
        }
    }
}

fn sample_reduction(
    module: &GradedModule,
    rng: &mut ChaCha8Rng,
) -> Option<(ReductionIdeal, i64)> {
    let dim = module.krull_dim().finite()?;
    let j = if dim == 0 {
        ReductionIdeal::empty()
    } else {
        ReductionIdeal::random(module.field(), dim, module.ambient(), rng)
    };
    let r = r_with_respect_to(module, &j, 100).ok()?;
    Some((j, r))
}

/// Core reduction-number identities (degree lower bound, shift additivity,
/// truncation behavior, the min-characterization, underdetermined form
/// counts) and the rank-monotonicity sanity check, over `count` random
/// instances.
pub fn basic_suite(seed: u64, count: usize) -> SuiteReport {
    let field = PrimeField::default_field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a_fail = 0;
    let mut c_fail = 0;
    let mut d_fail = 0;
    let mut e_fail = 0;
    let mut short_fail = 0;
    let mut done = 0;
    let mut resampled = 0;
    while done < count {
        let m = rng.gen_range(2..=3);
        let module = random_module(&mut rng, field, m);
        let Some((j, r)) = sample_reduction(&module, &mut rng) else {
            resampled += 1;
            continue;
        };
        done += 1;
        let dim = module.krull_dim().finite().expect("nonzero");

        // (a) r_J(M) >= D(M)
        if r < module.largest_gen_degree().expect("nonzero") {
            a_fail += 1;
        }

        // (c) r_J(M(-p)) = r_J(M) + p, same coefficient matrix
        for p in -2i64..=3 {
            match r_with_respect_to(&module.shifted(p), &j, 100) {
                Ok(rp) if rp == r + p => {}
                _ => c_fail += 1,
            }
        }

        if dim > 0 {
            // (d) r_J(M_{>=n}) = n for n >= r_J(M)
            for n in r..=(r + 2) {
                match r_with_respect_to(&module.truncate_at(n), &j, 100) {
                    Ok(rn) if rn == n => {}
                    _ => d_fail += 1,
                }
            }
            // (e) r_J(M) = min{n : r_J(M_{>=n}) = n}, scanning from d(M)
            let d_of_m = module.least_degree().expect("nonzero");
            let min_n = (d_of_m..=r).find(|&n| {
                r_with_respect_to(&module.truncate_at(n), &j, 100).ok() == Some(n)
            });
            if min_n != Some(r) {
                e_fail += 1;
            }
            // fewer than dim(M) forms never reach full rank
            let short = ReductionIdeal::random(field, dim - 1, m, &mut rng);
            if r_with_respect_to(&module, &short, 30).is_ok() {
                short_fail += 1;
            }
        }
    }

    // rank monotonicity: per-degree ranks of the coefficient matrix agree
    // across independent specializations
    let mut rank_fail = 0;
    for _ in 0..10 {
        let m = rng.gen_range(2..=3);
        let module = random_module(&mut rng, field, m);
        let Some(dim) = module.krull_dim().finite().filter(|&d| d > 0) else {
            continue;
        };
        let top = module.largest_gen_degree().expect("nonzero") + 4;
        let low = module.least_degree().expect("nonzero");
        let ranks: Vec<Vec<usize>> = (0..5)
            .map(|s| {
                let mut srng = ChaCha8Rng::seed_from_u64(seed ^ 0xABCD);
                srng.set_stream(s);
                let j = ReductionIdeal::random(field, dim, m, &mut srng);
                (low..=top)
                    .map(|e| reduction_matrix(&module, &j, e).rank())
                    .collect()
            })
            .collect();
        if !ranks.windows(2).all(|w| w[0] == w[1]) {
            rank_fail += 1;
        }
    }

    SuiteReport {
        name: "basic".into(),
        checks: vec![
            Check::new(
                "r_J(M) >= D(M)",
                a_fail == 0,
                format!("{done} instances, {a_fail} failures, {resampled} resampled"),
            ),
            Check::new(
                "shift additivity: r_J(M(-p)) = r_J(M) + p",
                c_fail == 0,
                format!("{done} instances, {c_fail} failures"),
            ),
            Check::new(
                "truncation: r_J(M_{>=n}) = n for n >= r_J(M)",
                d_fail == 0,
                format!("{d_fail} failures"),
            ),
            Check::new(
                "min-characterization: r_J(M) = min{n : r_J(M_{>=n}) = n}",
                e_fail == 0,
                format!("{e_fail} failures"),
            ),
            Check::new(
                "fewer than dim(M) forms never reduce",
                short_fail == 0,
                format!("{short_fail} failures"),
            ),
            Check::new(
                "rank of the coefficient matrix is specialization-independent",
                rank_fail == 0,
                format!("{rank_fail} failures"),
            ),
        ],
    }
}

/// One pair outcome from the corollary suite, for cross-seed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryOutcome {
    pub sum_rule: Vec<(i64, i64, i64)>,
    pub surjection: Vec<(i64, i64)>,
}

/// Direct-sum and surjection rules for r on `pairs` same-dimension random
/// pairs.
/// `mc_seed` feeds only the Monte Carlo reduction sampling, so runs with
/// different `mc_seed` but the same `instance_seed` must agree.
pub fn corollary_suite(
    instance_seed: u64,
    mc_seed: u64,
    pairs: usize,
) -> (SuiteReport, CorollaryOutcome) {
    let field = PrimeField::default_field();
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed);
    let mut sum_fail = 0;
    let mut surj_fail = 0;
    let mut outcome = CorollaryOutcome {
        sum_rule: Vec::new(),
        surjection: Vec::new(),
    };
    let mut done = 0;
    let mut trial = 0u64;
    while done < pairs {
        trial += 1;
        let m = rng.gen_range(2..=3);
        let a = random_module(&mut rng, field, m);
        let b = random_module(&mut rng, field, m);
        if a.krull_dim() != b.krull_dim() {
            continue;
        }
        let seed_a = crate::asymptotics::derive_seed(mc_seed, trial * 3);
        let seed_b = crate::asymptotics::derive_seed(mc_seed, trial * 3 + 1);
        let seed_s = crate::asymptotics::derive_seed(mc_seed, trial * 3 + 2);
        let (Ok(ra), Ok(rb)) = (
            generic_reduction_number(&a, 5, seed_a, 100),
            generic_reduction_number(&b, 5, seed_b, 100),
        ) else {
            continue;
        };
        let sum = a.direct_sum(&b).expect("same ambient");
        let Ok(rs) = generic_reduction_number(&sum, 5, seed_s, 100) else {
            continue;
        };
        done += 1;
        outcome.sum_rule.push((ra.value, rb.value, rs.value));
        if rs.value != ra.value.max(rb.value) {
            sum_fail += 1;
        }

        // surjection: quotient a by a few basis elements, keep only
        // dimension-preserving quotients
        if let Some((_, rq)) = random_same_dim_quotient(&a, &mut rng, seed_a ^ 0x55) {
            outcome.surjection.push((ra.value, rq));
            if ra.value < rq {
                surj_fail += 1;
            }
        }
    }
    let report = SuiteReport {
        name: "corollary".into(),
        checks: vec![
            Check::new(
                "direct-sum rule: r(M (+) N) = max{r(M), r(N)}",
                sum_fail == 0,
                format!("{done} pairs, {sum_fail} failures"),
            ),
            Check::new(
                "surjection rule: r(M) >= r(M/N) for same-dimension quotients",
                surj_fail == 0,
                format!("{} quotients, {surj_fail} failures", outcome.surjection.len()),
            ),
        ],
    };
    (report, outcome)
}

fn random_same_dim_quotient(
    module: &GradedModule,
    rng: &mut ChaCha8Rng,
    mc_seed: u64,
) -> Option<(GradedModule, i64)> {
    let elems = pick_basis_elements(module, rng)?;
    let q = module.quotient_by_elements(&elems).ok()?;
    if q.is_zero() || q.krull_dim() != module.krull_dim() {
        return None;
    }
    let r = generic_reduction_number(&q, 5, mc_seed, 100).ok()?;
    Some((q, r.value))
}

fn pick_basis_elements(
    module: &GradedModule,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<BasisElement>> {
    let low = module.least_degree().ok()?;
    let high = module.largest_gen_degree().ok()? + 2;
    let mut pool = Vec::new();
    for e in low..=high {
        pool.extend(module.basis(e));
    }
    if pool.is_empty() {
        return None;
    }
    let count = rng.gen_range(1..=2.min(pool.len()));
    let mut chosen = Vec::new();
    for _ in 0..count {
        chosen.push(pool[rng.gen_range(0..pool.len())].clone());
    }
    Some(chosen)
}

/// The named instance corpus used by the linear-growth and regularity checks.
pub fn corpus() -> Vec<(String, MonomialIdeal, GradedModule)> {
    let field = PrimeField::default_field();
    let mono2 = |exps: &[u32]| Monomial::new(exps.to_vec());
    let ideal2 = |gens: &[&[u32]]| {
        MonomialIdeal::from_gens(2, gens.iter().map(|g| mono2(g)).collect()).unwrap()
    };
    let s2 = GradedModule::free(field, 2);
    let s3 = GradedModule::free(field, 3);
    let m2 = ideal2(&[&[1, 0], &[0, 1]]).power(2);
    let m3_sq = MonomialIdeal::from_gens(
        3,
        vec![
            Monomial::new(vec![1, 0, 0]),
            Monomial::new(vec![0, 1, 0]),
            Monomial::new(vec![0, 0, 1]),
        ],
    )
    .unwrap()
    .power(2);
    vec![
        ("m^2 on S".into(), m2.clone(), s2.clone()),
        (
            "(x^2, y^3) on S".into(),
            ideal2(&[&[2, 0], &[0, 3]]),
            s2.clone(),
        ),
        (
            "(x^2, xy, y^3) on S".into(),
            ideal2(&[&[2, 0], &[1, 1], &[0, 3]]),
            s2.clone(),
        ),
        (
            "m^2 on S/(xy)".into(),
            m2.clone(),
            GradedModule::quotient_ring(field, ideal2(&[&[1, 1]])),
        ),
        ("m^2 on S, three variables".into(), m3_sq, s3),
        (
            "m^2 on S (+) S(-1)".into(),
            m2,
            GradedModule::shift_and_sum(&[(s2.clone(), 0), (s2, 1)]).unwrap(),
        ),
    ]
}

/// Linear-growth checks over the corpus, plus the quotient-series
/// monotonicity observation.
pub fn main_suite(seed: u64, n_max: usize) -> SuiteReport {
    let params = SeriesParams {
        seed,
        ..Default::default()
    };
    let mut checks = Vec::new();
    for (name, ideal, module) in corpus() {
        match verify_linear_growth(&ideal, &module, n_max, &params) {
            Ok(rep) => {
                checks.push(Check::new(
                    format!("asymptotic linearity of r and D: {name}"),
                    rep.pass,
                    format!(
                        "rho {}, eps1 {:?}, eps2 {:?}, r {:?}, D {:?}",
                        rep.rho, rep.epsilon1, rep.epsilon2, rep.r_series.values,
                        rep.d_series.values
                    ),
                ));
            }
            Err(e) => checks.push(Check::new(
                format!("asymptotic linearity of r and D: {name}"),
                false,
                format!("error: {e}"),
            )),
        }
        match quotient_reduction_series(&ideal, &module, n_max.min(6), &params) {
            Ok(rep) => checks.push(Check::new(
                format!("r(M/I^nM) non-decreasing: {name}"),
                rep.non_decreasing,
                format!("values {:?}", rep.values),
            )),
            Err(e) => checks.push(Check::new(
                format!("r(M/I^nM) non-decreasing: {name}"),
                false,
                format!("error: {e}"),
            )),
        }
    }
    SuiteReport {
        name: "main".into(),
        checks,
    }
}

/// Regularity-function axioms (1)-(5) for one generalized regularity
/// function on `trials` random instances.
pub fn grf_axiom_suite(kind: GrfKind, seed: u64, trials: usize) -> SuiteReport {
    let field = PrimeField::default_field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails = [0usize; 5];
    let mut axiom5_checked = 0;
    let mut done = 0;
    while done < trials {
        // 2 variables keeps the regularity computations quick
        let module = random_module(&mut rng, field, 2);
        let Ok(gamma) = kind.eval(&module) else {
            continue;
        };
        done += 1;

        // (1) value is invariant under component permutation
        let mut components = module.components().to_vec();
        components.reverse();
        let permuted = GradedModule::new(field, 2, components).expect("same ambient");
        if kind.eval(&permuted).ok() != Some(gamma) {
            fails[0] += 1;
        }

        // (2) shift additivity
        for p in -2i64..=3 {
            if kind.eval(&module.shifted(p)).ok() != Some(gamma + p) {
                fails[1] += 1;
            }
        }

        // (3) Gamma(M) >= D(M)
        if gamma < module.largest_gen_degree().expect("nonzero") {
            fails[2] += 1;
        }

        // (4) max rule on direct sums
        let other = random_module(&mut rng, field, 2);
        let Ok(gamma_other) = kind.eval(&other) else {
            continue;
        };
        let sum = module.direct_sum(&other).expect("same ambient");
        if kind.eval(&sum).ok() != Some(gamma.max(gamma_other)) {
            fails[3] += 1;
        }

        // (5) subadditivity on 0 -> N -> M -> M/N -> 0
        if let Some(elems) = pick_basis_elements(&module, &mut rng) {
            let submodule = submodule_generated_by(&module, &elems);
            if let Ok(quotient) = module.quotient_by_elements(&elems) {
                if !submodule.is_zero() && !quotient.is_zero() {
                    let (Ok(gn), Ok(gp)) = (kind.eval(&submodule), kind.eval(&quotient)) else {
                        continue;
                    };
                    axiom5_checked += 1;
                    if gp > gamma.max(gn - 1) {
                        fails[4] += 1;
                    }
                }
            }
        }
    }
    let names = [
        "(1) isomorphism invariance (component permutation)",
        "(2) Gamma(M(-p)) = Gamma(M) + p",
        "(3) Gamma(M) >= D(M)",
        "(4) Gamma(M (+) N) = max{Gamma(M), Gamma(N)}",
        "(5) Gamma(M/N) <= max{Gamma(M), Gamma(N) - 1}",
    ];
    SuiteReport {
        name: format!("grf axioms (Gamma = {})", kind.name()),
        checks: names
            .iter()
            .enumerate()
            .map(|(i, n)| {
                let extra = if i == 4 {
                    format!(" ({axiom5_checked} sequences)")
                } else {
                    String::new()
                };
                Check::new(
                    format!("axiom {n}"),
                    fails[i] == 0,
                    format!("{done} instances{extra}, {} failures", fails[i]),
                )
            })
            .collect(),
    }
}

/// The submodule of M generated by the listed basis elements, represented
/// inside the module class by numerator restriction.
pub fn submodule_generated_by(module: &GradedModule, elems: &[BasisElement]) -> GradedModule {
    let components = module
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let gens: Vec<Monomial> = elems
                .iter()
                .filter(|e| e.component == i)
                .map(|e| e.monomial.clone())
                .collect();
            Component {
                shift: c.shift,
                numerator: MonomialIdeal::minimalize_unchecked(module.ambient(), gens),
                denominator: c.denominator.clone(),
            }
        })
        .collect();
    GradedModule::new(module.field(), module.ambient(), components).expect("same ambient")
}

/// Gamma-linearity over the corpus for both kinds. The regularity series is
/// run with a reduced n_max on the three-variable instance, where Betti
/// tables grow quickly.
pub fn grf_suite(seed: u64, trials: usize, n_max: usize) -> SuiteReport {
    let mut checks = Vec::new();
    for kind in [GrfKind::GenDegree, GrfKind::Regularity] {
        let axioms = grf_axiom_suite(kind, seed, trials);
        checks.extend(axioms.checks);
    }
    let params = SeriesParams {
        seed,
        ..Default::default()
    };
    for (name, ideal, module) in corpus() {
        for kind in [GrfKind::GenDegree, GrfKind::Regularity] {
            let n = if kind == GrfKind::Regularity && module.ambient() > 2 {
                n_max.min(3).max(params.window)
            } else {
                n_max
            };
            match verify_grf_linearity(kind, &ideal, &module, n, &params) {
                Ok(rep) => checks.push(Check::new(
                    format!("Gamma = {} linear on {name}", kind.name()),
                    rep.pass,
                    format!("rho {}, values {:?}", rep.rho, rep.series.values),
                )),
                Err(e) => checks.push(Check::new(
                    format!("Gamma = {} linear on {name}", kind.name()),
                    false,
                    format!("error: {e}"),
                )),
            }
        }
    }
    SuiteReport {
        name: "grf".into(),
        checks,
    }
}

/// Euler-characteristic / Hilbert-series identity:
/// sum_i (-1)^i beta_{i,j} = [T^j] (sum_e t_e T^e) (1 - T)^m for all j up to
/// the degree support bound.
pub fn euler_characteristic_holds(module: &GradedModule) -> Result<bool, Error> {
    let betti = koszul::betti_table(module)?;
    let m = module.ambient();
    let low = module.least_degree()?;
    let high = koszul::degree_support_bound(module);
    let binom: Vec<i64> = {
        let mut row = vec![1i64];
        for _ in 0..m {
            let mut next = vec![1i64];
            for w in row.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            row = next;
        }
        row
    };
    for j in (low - m as i64)..=high {
        let alternating: i64 = (0..=m)
            .map(|i| {
                let b = betti.get(i, j) as i64;
                if i % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum();
        let numerator: i64 = (0..=m)
            .map(|k| {
                let t = module.hilbert_value(j - k as i64) as i64;
                let c = binom[k] * t;
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum();
        if alternating != numerator {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Koszul subcomplex exactness and Betti checks.
pub fn koszul_suite(seed: u64) -> SuiteReport {
    let field = PrimeField::default_field();
    let mut checks = Vec::new();

    // I = J = (x, y), M = S, n = 3, degrees <= 8
    let m_ideal = MonomialIdeal::from_gens(
        2,
        vec![Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1])],
    )
    .unwrap();
    let s2 = GradedModule::free(field, 2);
    match koszul::subcomplex_exactness(&m_ideal, &s2, m_ideal.gens(), 3, 0..=8, 20) {
        Ok(rep) => {
            checks.push(Check::new(
                "K.^{(3)} exact for I = J = (x, y) on S, degrees <= 8",
                rep.all_exact && rep.dd_zero,
                format!("per-degree {:?}", rep.per_degree),
            ));
        }
        Err(e) => checks.push(Check::new(
            "K.^{(3)} exact for I = J = (x, y) on S, degrees <= 8",
            false,
            format!("error: {e}"),
        )),
    }

    // I = (x^2, y^3): scan for the threshold
    let i = MonomialIdeal::from_gens(
        2,
        vec![Monomial::new(vec![2, 0]), Monomial::new(vec![0, 3])],
    )
    .unwrap();
    match koszul::exactness_threshold(&i, &s2, i.gens(), 8, 4, 20) {
        Ok(rep) => {
            let ok = rep
                .threshold
                .is_some_and(|thr| rep.per_n.iter().all(|&(n, pass)| n < thr || pass));
            checks.push(Check::new(
                "K.^{(n)} threshold finite for I = (x^2, y^3) on S",
                ok,
                format!("threshold {:?}, per-n {:?}", rep.threshold, rep.per_n),
            ));
        }
        Err(e) => checks.push(Check::new(
            "K.^{(n)} threshold finite for I = (x^2, y^3) on S",
            false,
            format!("error: {e}"),
        )),
    }

    // Euler characteristic on random modules
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut euler_fail = 0;
    for _ in 0..50 {
        let module = random_module(&mut rng, field, 2);
        if !euler_characteristic_holds(&module).unwrap_or(false) {
            euler_fail += 1;
        }
    }
    checks.push(Check::new(
        "Euler characteristic matches the Hilbert series numerator",
        euler_fail == 0,
        format!("50 modules, {euler_fail} failures"),
    ));

    // beta_{0,j} agrees with the generator listing
    let mut gen_fail = 0;
    for _ in 0..20 {
        let module = random_module(&mut rng, field, 2);
        let Ok(betti) = koszul::betti_table(&module) else {
            continue;
        };
        let gens = module.min_generators();
        let low = module.least_degree().expect("nonzero");
        let high = module.largest_gen_degree().expect("nonzero");
        for j in low..=high {
            let count = gens
                .iter()
                .filter(|g| {
                    g.monomial.degree() as i64 + module.components()[g.component].shift == j
                })
                .count();
            if betti.get(0, j) != count {
                gen_fail += 1;
            }
        }
    }
    checks.push(Check::new(
        "beta_{0,j} equals the minimal-generator count per degree",
        gen_fail == 0,
        format!("{gen_fail} failures"),
    ));

    // r(M) <= reg(M) across random modules of positive depth of interest
    let mut bound_fail = 0;
    let mut bound_checked = 0;
    for _ in 0..30 {
        let module = random_module(&mut rng, field, 2);
        let Ok(reg) = koszul::regularity(&module) else {
            continue;
        };
        let Ok(rep) = generic_reduction_number(&module, 5, seed ^ 0x9C, 100) else {
            continue;
        };
        bound_checked += 1;
        if rep.value > reg {
            bound_fail += 1;
        }
    }
    checks.push(Check::new(
        "r(M) <= reg(M)",
        bound_fail == 0,
        format!("{bound_checked} modules, {bound_fail} failures"),
    ));

    SuiteReport {
        name: "koszul".into(),
        checks,
    }
}

/// Detect-linearity consistency helper used by reports: stabilized series
/// step by exactly rho beyond the stabilization index.
pub fn stabilized_steps_are_rho(values: &[i64], rho: i64, n0: usize) -> bool {
    values
        .windows(2)
        .enumerate()
        .filter(|(idx, _)| idx + 2 > n0)
        .all(|(_, w)| w[1] - w[0] == rho)
}

/// Run a named suite set for the CLI.
pub fn run_suite(name: &str, seed: u64) -> Option<Vec<SuiteReport>> {
    match name {
        "basic" => {
            let mut reports = vec![basic_suite(seed, 200)];
            let (cor, _) = corollary_suite(seed, seed, 100);
            reports.push(cor);
            Some(reports)
        }
        "main" => Some(vec![main_suite(seed, 10)]),
        "grf" => Some(vec![grf_suite(seed, 100, 10)]),
        "koszul" => Some(vec![koszul_suite(seed)]),
        "all" => {
            let mut reports = run_suite("basic", seed)?;
            reports.extend(run_suite("main", seed)?);
            reports.extend(run_suite("grf", seed)?);
            reports.extend(run_suite("koszul", seed)?);
            Some(reports)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_has_six_instances() {
        assert_eq!(corpus().len(), 6);
        for (_, ideal, module) in corpus() {
            assert!(!ideal.is_zero());
            assert!(!module.is_zero());
        }
    }

    #[test]
    fn random_module_is_nonzero() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert!(!random_module(&mut rng, PrimeField::default_field(), 2).is_zero());
        }
    }

    #[test]
    fn basic_suite_smoke() {
        let rep = basic_suite(2024, 25);
        assert!(rep.pass(), "checks: {:?}", rep.checks);
    }

    #[test]
    fn corollary_suite_smoke() {
        let (rep, _) = corollary_suite(2024, 7, 15);
        assert!(rep.pass(), "checks: {:?}", rep.checks);
    }

    #[test]
    fn grf_axioms_smoke() {
        let rep = grf_axiom_suite(GrfKind::GenDegree, 5, 25);
        assert!(rep.pass(), "checks: {:?}", rep.checks);
    }
}
