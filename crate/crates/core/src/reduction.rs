//! Reductions by linear forms and by monomial subideals.
//!
//! The central object is the coefficient matrix of J_1 * M_{e-1} inside a
//! fixed monomial basis of M_e: the ideal of linear forms J satisfies
//! (JM)_e = M_e exactly when that matrix has full column rank. Generic
//! reduction numbers are obtained by Monte Carlo sampling of the coefficient
//! matrix over GF(p); every sampled value is an upper bound for r(M), so the
//! best of several trials converges from above.

use crate::error::Error;
use crate::linalg::{FieldMatrix, PrimeField};
use crate::module::{index_basis, GradedModule, KrullDim};
use crate::monomial::MonomialIdeal;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A linear form sum(coeffs[j] * x_j), not all coefficients zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<u64>,
}

/// An ideal generated by linear forms; the coefficient rows are the
/// parameterized matrix of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionIdeal {
    pub forms: Vec<LinearForm>,
}

impl ReductionIdeal {
    pub fn new(forms: Vec<LinearForm>) -> Self {
        ReductionIdeal { forms }
    }

    pub fn empty() -> Self {
        ReductionIdeal { forms: vec![] }
    }

    /// Sample `count` forms with uniform coefficients, rejecting all-zero rows.
    pub fn random(field: PrimeField, count: usize, ambient: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut forms = Vec::with_capacity(count);
        while forms.len() < count {
            let coeffs: Vec<u64> = (0..ambient).map(|_| rng.gen_range(0..field.modulus())).collect();
            if coeffs.iter().any(|&c| c != 0) {
                forms.push(LinearForm { coeffs });
            }
        }
        ReductionIdeal { forms }
    }
}

/// Outcome of a Monte Carlo reduction-number computation.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReductionReport {
    pub value: i64,
    pub trials_used: usize,
    pub failed_trials: usize,
    pub seed: u64,
}

/// The coefficient matrix of J_1 * M_{e-1} in the basis of M_e: one row per
/// (form, basis element of M_{e-1}).
pub fn reduction_matrix(module: &GradedModule, j: &ReductionIdeal, e: i64) -> FieldMatrix {
    let field = module.field();
    let domain = module.basis(e - 1);
    let codomain = module.basis(e);
    let index = index_basis(&codomain);
    let mut mat = FieldMatrix::zeros(field, j.forms.len() * domain.len(), codomain.len());
    for (fi, form) in j.forms.iter().enumerate() {
        for (bi, b) in domain.iter().enumerate() {
            let row = fi * domain.len() + bi;
            for (v, &c) in form.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let image = b.monomial.mul_var(v);
                if module.components()[b.component].denominator.contains(&image) {
                    continue;
                }
                if let Some(&col) = index.get(&(b.component, image.exps().to_vec())) {
                    let cur = mat.get(row, col);
                    mat.set(row, col, field.add(cur, c));
                }
            }
        }
    }
    mat
}

/// r_J(M): the least n >= D(M) with (JM)_{n+1} = M_{n+1}, found by a rank
/// scan. Errors if no such n appears within D(M) + n_cap.
pub fn r_with_respect_to(
    module: &GradedModule,
    j: &ReductionIdeal,
    n_cap: usize,
) -> Result<i64, Error> {
    let start = module.largest_gen_degree()?;
    for n in start..=(start + n_cap as i64) {
        let t = module.hilbert_value(n + 1);
        if reduction_matrix(module, j, n + 1).rank() == t {
            return Ok(n);
        }
    }
    Err(Error::NotReduction { cap: n_cap })
}

/// Generic reduction number r(M) by Monte Carlo: dim(M) random forms per
/// trial, best (minimum) value over trials. Zero-dimensional modules take
/// the empty reduction directly.
pub fn generic_reduction_number(
    module: &GradedModule,
    trials: usize,
    seed: u64,
    n_cap: usize,
) -> Result<ReductionReport, Error> {
    let dim = match module.krull_dim() {
        KrullDim::NegInf => return Err(Error::ZeroModule("r(M)")),
        KrullDim::Dim(d) => d,
    };
    if dim == 0 {
        return Ok(ReductionReport {
            value: module.top_nonzero_degree()?,
            trials_used: 0,
            failed_trials: 0,
            seed,
        });
    }
    let field = module.field();
    let mut best: Option<i64> = None;
    let mut used = 0;
    let mut failed = 0;
    for trial in 0..trials {
        // independent per-trial substream: identical results whether trials
        // run sequentially or concurrently
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let j = ReductionIdeal::random(field, dim, module.ambient(), &mut rng);
        match r_with_respect_to(module, &j, n_cap) {
            Ok(r) => {
                used += 1;
                best = Some(best.map_or(r, |b| b.min(r)));
            }
            Err(Error::NotReduction { .. }) => failed += 1,
            Err(e) => return Err(e),
        }
    }
    match best {
        Some(value) => Ok(ReductionReport {
            value,
            trials_used: used,
            failed_trials: failed,
            seed,
        }),
        None => Err(Error::TrialsExhausted { trials }),
    }
}

/// Whether Jm is an M-reduction of I: Jm * I^k M = I^{k+1} M for some
/// k <= k_max. Containment holds automatically, so it suffices that every
/// minimal generator of I^{k+1}M lies in the corresponding piece of
/// Jm * I^k M. A false return means "no equality witnessed up to k_max".
pub fn is_reduction_of_ideal(
    jm: &MonomialIdeal,
    ideal: &MonomialIdeal,
    module: &GradedModule,
    k_max: usize,
) -> Result<bool, Error> {
    if !ideal.contains_ideal(jm) {
        return Err(Error::NotSubideal);
    }
    for k in 1..=k_max {
        let target = module.ideal_power(ideal, k + 1)?;
        let lhs = jm.product(&ideal.power(k));
        let ok = target.min_generators().iter().all(|b| {
            let c = &module.components()[b.component];
            lhs.product(&c.numerator).contains(&b.monomial) || c.denominator.contains(&b.monomial)
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// rho_I(M): least D(J) over monomial M-reductions J of I. For monomial I the
/// degree-truncated subideals generated_upto(I, d) exhaust the candidates, so
/// the scan over d terminates at d = D(I) where the candidate is I itself.
pub fn rho(
    ideal: &MonomialIdeal,
    module: &GradedModule,
    k_max: usize,
) -> Result<i64, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroModule("rho"));
    }
    if module.is_zero() {
        return Err(Error::ZeroModule("rho"));
    }
    for n in 1..=k_max {
        if module.ideal_power(ideal, n)?.is_zero() {
            return Err(Error::ModuleAnnihilated { n });
        }
    }
    let dmin = ideal.min_gen_degree().expect("nonzero ideal");
    let dmax = ideal.max_gen_degree().expect("nonzero ideal");
    for d in dmin..=dmax {
        let candidate = ideal.generated_upto(d);
        if candidate.is_zero() {
            continue;
        }
        if is_reduction_of_ideal(&candidate, ideal, module, k_max)? {
            return Ok(candidate.max_gen_degree().expect("nonzero candidate") as i64);
        }
    }
    // unreachable: at d = D(I) the candidate is I itself, a reduction at k=1
    unreachable!("generated_upto(I, D(I)) = I is always an M-reduction of I");
}
