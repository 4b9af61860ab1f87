//! Series experiments over n: invariants of I^n M, eventual-linearity
//! detection, the linear-growth and generalized-regularity checks, and the
//! exploratory r(M/I^n M) series.

use crate::error::Error;
use crate::koszul;
use crate::module::{Component, GradedModule, KrullDim};
use crate::monomial::MonomialIdeal;
use crate::reduction::{generic_reduction_number, rho};
use serde::Serialize;

/// Which invariant of I^n M to track.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    ReductionNumber,
    LargestGenDegree,
    LeastDegree,
    KrullDim,
    Regularity,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Quantity::ReductionNumber => "r",
            Quantity::LargestGenDegree => "D",
            Quantity::LeastDegree => "d",
            Quantity::KrullDim => "dim",
            Quantity::Regularity => "reg",
        }
    }

    pub fn parse(s: &str) -> Option<Quantity> {
        match s {
            "r" => Some(Quantity::ReductionNumber),
            "D" => Some(Quantity::LargestGenDegree),
            "d" => Some(Quantity::LeastDegree),
            "dim" => Some(Quantity::KrullDim),
            "reg" => Some(Quantity::Regularity),
            _ => None,
        }
    }
}

/// Knobs shared by every series computation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesParams {
    pub trials: usize,
    pub seed: u64,
    pub n_cap: usize,
    pub k_max: usize,
    pub window: usize,
}

impl Default for SeriesParams {
    fn default() -> Self {
        SeriesParams {
            trials: 5,
            seed: 1,
            n_cap: 200,
            k_max: 20,
            window: 3,
        }
    }
}

/// splitmix64 finalizer; derives independent per-n seeds from a master seed.
pub fn derive_seed(master: u64, n: u64) -> u64 {
    let mut z = master.wrapping_add(n.wrapping_mul(0x9E3779B97F4A7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// v_n = quantity(I^n M) for n = 1..n_max.
pub fn compute_series(
    ideal: &MonomialIdeal,
    module: &GradedModule,
    quantity: Quantity,
    n_max: usize,
    params: &SeriesParams,
) -> Result<Vec<i64>, Error> {
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let m_n = module.ideal_power(ideal, n)?;
        if m_n.is_zero() {
            return Err(Error::ModuleAnnihilated { n });
        }
        let v = match quantity {
            Quantity::ReductionNumber => {
                let seed = derive_seed(params.seed, n as u64);
                generic_reduction_number(&m_n, params.trials, seed, params.n_cap)?.value
            }
            Quantity::LargestGenDegree => m_n.largest_gen_degree()?,
            Quantity::LeastDegree => m_n.least_degree()?,
            Quantity::KrullDim => match m_n.krull_dim() {
                KrullDim::NegInf => return Err(Error::ModuleAnnihilated { n }),
                KrullDim::Dim(d) => d as i64,
            },
            Quantity::Regularity => koszul::regularity(&m_n)?,
        };
        values.push(v);
    }
    Ok(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesStatus {
    Stabilized,
    Inconclusive,
}

/// Per-n values with the detected intercept sequence e_n = v_n - rho n.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub quantity: String,
    pub values: Vec<i64>,
    pub rho: i64,
    pub intercepts: Vec<i64>,
    pub stabilization_index: Option<usize>,
    pub epsilon: Option<i64>,
    pub status: SeriesStatus,
}

/// Detect eventual linearity v_n = rho n + epsilon. The slope is supplied
/// from rho_I(M), never fitted, so the check is not circular. Stabilized iff
/// the last `window` intercepts agree; n0 is the start of the final constant
/// run (n is 1-based).
pub fn detect_linearity(
    quantity: &str,
    values: &[i64],
    rho: i64,
    window: usize,
) -> SeriesReport {
    let intercepts: Vec<i64> = values
        .iter()
        .enumerate()
        .map(|(idx, &v)| v - rho * (idx as i64 + 1))
        .collect();
    let n = intercepts.len();
    let stabilized = window >= 2
        && n >= window
        && intercepts[n - window..].windows(2).all(|w| w[0] == w[1]);
    if !stabilized {
        return SeriesReport {
            quantity: quantity.to_string(),
            values: values.to_vec(),
            rho,
            intercepts,
            stabilization_index: None,
            epsilon: None,
            status: SeriesStatus::Inconclusive,
        };
    }
    let epsilon = intercepts[n - 1];
    let mut n0 = n; // 1-based
    while n0 > 1 && intercepts[n0 - 2] == epsilon {
        n0 -= 1;
    }
    SeriesReport {
        quantity: quantity.to_string(),
        values: values.to_vec(),
        rho,
        intercepts,
        stabilization_index: Some(n0),
        epsilon: Some(epsilon),
        status: SeriesStatus::Stabilized,
    }
}

/// One named check with its verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LinearGrowthReport {
    pub rho: i64,
    pub d_of_m: i64,
    pub r_series: SeriesReport,
    pub d_series: SeriesReport,
    pub epsilon1: Option<i64>,
    pub epsilon2: Option<i64>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Verify r(I^n M) = rho n + eps1 and D(I^n M) = rho n + eps2 with
/// eps1 >= eps2 >= d(M), plus the unconditional bound
/// D(I^n M) >= rho n + d(M) for every computed n.
pub fn verify_linear_growth(
    ideal: &MonomialIdeal,
    module: &GradedModule,
    n_max: usize,
    params: &SeriesParams,
) -> Result<LinearGrowthReport, Error> {
    let rho_val = rho(ideal, module, params.k_max)?;
    let d_of_m = module.least_degree()?;
    let r_values = compute_series(ideal, module, Quantity::ReductionNumber, n_max, params)?;
    let d_values = compute_series(ideal, module, Quantity::LargestGenDegree, n_max, params)?;
    let r_series = detect_linearity("r", &r_values, rho_val, params.window);
    let d_series = detect_linearity("D", &d_values, rho_val, params.window);

    let mut checks = Vec::new();
    checks.push(Check::new(
        "r-series stabilizes with slope rho",
        r_series.status == SeriesStatus::Stabilized,
        format!("values {:?}, rho {rho_val}", r_series.values),
    ));
    checks.push(Check::new(
        "D-series stabilizes with slope rho",
        d_series.status == SeriesStatus::Stabilized,
        format!("values {:?}, rho {rho_val}", d_series.values),
    ));
    let eps_ok = match (r_series.epsilon, d_series.epsilon) {
        (Some(e1), Some(e2)) => e1 >= e2 && e2 >= d_of_m,
        _ => false,
    };
    checks.push(Check::new(
        "eps1 >= eps2 >= d(M)",
        eps_ok,
        format!(
            "eps1 {:?}, eps2 {:?}, d(M) {d_of_m}",
            r_series.epsilon, d_series.epsilon
        ),
    ));
    let lower_bound_ok = d_values
        .iter()
        .enumerate()
        .all(|(idx, &v)| v >= rho_val * (idx as i64 + 1) + d_of_m);
    checks.push(Check::new(
        "D(I^nM) >= rho n + d(M) for all computed n",
        lower_bound_ok,
        format!("D values {d_values:?}"),
    ));

    let pass = checks.iter().all(|c| c.pass);
    Ok(LinearGrowthReport {
        rho: rho_val,
        d_of_m,
        epsilon1: r_series.epsilon,
        epsilon2: d_series.epsilon,
        r_series,
        d_series,
        checks,
        pass,
    })
}

/// The two generalized regularity functions the artifact instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrfKind {
    GenDegree,
    Regularity,
}

impl GrfKind {
    pub fn name(&self) -> &'static str {
        match self {
            GrfKind::GenDegree => "D",
            GrfKind::Regularity => "reg",
        }
    }

    pub fn eval(&self, module: &GradedModule) -> Result<i64, Error> {
        match self {
            GrfKind::GenDegree => module.largest_gen_degree(),
            GrfKind::Regularity => koszul::regularity(module),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GrfLinearityReport {
    pub kind: String,
    pub rho: i64,
    pub d_of_m: i64,
    pub series: SeriesReport,
    pub pass: bool,
}

/// Linearity check for a generalized regularity function: Gamma(I^n M)
/// stabilizes with slope rho_I(M) and intercept e >= d(M).
pub fn verify_grf_linearity(
    kind: GrfKind,
    ideal: &MonomialIdeal,
    module: &GradedModule,
    n_max: usize,
    params: &SeriesParams,
) -> Result<GrfLinearityReport, Error> {
    let rho_val = rho(ideal, module, params.k_max)?;
    let d_of_m = module.least_degree()?;
    let quantity = match kind {
        GrfKind::GenDegree => Quantity::LargestGenDegree,
        GrfKind::Regularity => Quantity::Regularity,
    };
    let values = compute_series(ideal, module, quantity, n_max, params)?;
    let series = detect_linearity(kind.name(), &values, rho_val, params.window);
    let pass = series.status == SeriesStatus::Stabilized
        && series.epsilon.is_some_and(|e| e >= d_of_m);
    Ok(GrfLinearityReport {
        kind: kind.name().to_string(),
        rho: rho_val,
        d_of_m,
        series,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientSeriesReport {
    pub values: Vec<i64>,
    pub non_decreasing: bool,
    pub series: SeriesReport,
}

/// M/I^n M inside the module class: component denominators enlarged by
/// I^n * g_i.
pub fn quotient_module(
    ideal: &MonomialIdeal,
    module: &GradedModule,
    n: usize,
) -> Result<GradedModule, Error> {
    let power = ideal.power(n);
    let components: Vec<Component> = module
        .components()
        .iter()
        .map(|c| {
            let mut gens = c.denominator.gens().to_vec();
            gens.extend(power.product(&c.numerator).gens().iter().cloned());
            Component {
                shift: c.shift,
                numerator: c.numerator.clone(),
                denominator: MonomialIdeal::minimalize_unchecked(module.ambient(), gens),
            }
        })
        .collect();
    GradedModule::new(module.field(), module.ambient(), components)
}

/// The exploratory series r(M/I^n M): reports monotonicity and a slope
/// detection, without asserting any theorem.
pub fn quotient_reduction_series(
    ideal: &MonomialIdeal,
    module: &GradedModule,
    n_max: usize,
    params: &SeriesParams,
) -> Result<QuotientSeriesReport, Error> {
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let q = quotient_module(ideal, module, n)?;
        if q.is_zero() {
            return Err(Error::ModuleAnnihilated { n });
        }
        let seed = derive_seed(params.seed ^ 0x71_u64, n as u64);
        values.push(generic_reduction_number(&q, params.trials, seed, params.n_cap)?.value);
    }
    let non_decreasing = values.windows(2).all(|w| w[0] <= w[1]);
    // exploratory slope: last difference, if the tail looks linear
    let slope = if values.len() >= 2 {
        values[values.len() - 1] - values[values.len() - 2]
    } else {
        0
    };
    let series = detect_linearity("r(M/I^nM)", &values, slope, params.window);
    Ok(QuotientSeriesReport {
        values,
        non_decreasing,
        series,
    })
}

/// Render series reports as the CSV the CLI emits: header
/// `n,quantity,value,rho,intercept,status`, one row per (n, quantity),
/// LF line endings.
pub fn series_to_csv(reports: &[SeriesReport]) -> String {
    let mut out = String::from("n,quantity,value,rho,intercept,status\n");
    for rep in reports {
        let status = match rep.status {
            SeriesStatus::Stabilized => "stabilized",
            SeriesStatus::Inconclusive => "inconclusive",
        };
        for (idx, (&v, &e)) in rep.values.iter().zip(&rep.intercepts).enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                idx + 1,
                rep.quantity,
                v,
                rep.rho,
                e,
                status
            ));
        }
    }
    out
}
