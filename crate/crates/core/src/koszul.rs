//! Graded Koszul machinery: the truncated subcomplex built from the
//! generators of a reduction of I, and Betti numbers / regularity via Koszul
//! homology of the variable sequence.
//!
//! Both uses share one construction: a complex whose stage-i term is a direct
//! sum of graded modules indexed by i-subsets T of the multiplier list, with
//! the usual signed Koszul differential. Everything is evaluated one internal
//! degree at a time, so all maps are finite matrices over GF(p).

use crate::error::Error;
use crate::linalg::{FieldMatrix, PrimeField};
use crate::module::{index_basis, BasisElement, GradedModule};
use crate::monomial::{Monomial, MonomialIdeal};
use std::collections::BTreeMap;
use std::collections::HashMap;

/// Graded Betti numbers beta_{i,j} from Koszul homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.entries
    }

    /// reg(M) = max{j - i : beta_{i,j} != 0}.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .expect("a nonzero module has beta_{0,*} != 0")
    }

    /// JSON-friendly map "i,j" -> count.
    pub fn to_json_map(&self) -> BTreeMap<String, usize> {
        self.entries
            .iter()
            .map(|(&(i, j), &c)| (format!("{i},{j}"), c))
            .collect()
    }
}

fn combinations(t: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, t: usize, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..t {
            cur.push(i);
            rec(out, cur, i + 1, t, k);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 0, t, k);
    out
}

/// One internal degree of a Koszul-type complex: stage dimensions and the
/// differentials d_k: stage k -> stage k-1, stored with rows indexed by the
/// domain basis.
pub struct DegreeComplex {
    pub stage_dims: Vec<usize>,
    /// diffs[k] is d_{k+1}: stage k+1 -> stage k.
    pub diffs: Vec<FieldMatrix>,
}

impl DegreeComplex {
    pub fn stages(&self) -> usize {
        self.stage_dims.len()
    }

    /// d compose d = 0 for every consecutive pair.
    pub fn dd_is_zero(&self) -> bool {
        for k in 0..self.diffs.len().saturating_sub(1) {
            let prod = self.diffs[k + 1].mul_mat(&self.diffs[k]).expect("chain shapes");
            if !prod.is_zero() {
                return false;
            }
        }
        true
    }

    /// Dimension of the homology at stage s: dim ker(d_s) - rank(d_{s+1}).
    pub fn homology_dim(&self, s: usize) -> usize {
        let dim = self.stage_dims[s];
        let rank_out = if s >= 1 { self.diffs[s - 1].rank() } else { 0 };
        let rank_in = if s < self.diffs.len() {
            self.diffs[s].rank()
        } else {
            0
        };
        dim - rank_out - rank_in
    }

    pub fn exact_everywhere(&self) -> bool {
        (0..self.stages()).all(|s| self.homology_dim(s) == 0)
    }
}

/// Build the degree-e part of the complex with stage-i term
/// (+)_{|T|=i} stage_modules[i] (-sum_{j in T} p_j), where p_j is the degree
/// of the j-th multiplier and the differential sends e_T (x) v to
/// sum_{j in T} (+/-) u_j v in the T-minus-j summand.
pub fn build_degree_complex(
    field: PrimeField,
    stage_modules: &[GradedModule],
    multipliers: &[Monomial],
    e: i64,
) -> DegreeComplex {
    let t = multipliers.len();
    assert_eq!(stage_modules.len(), t + 1);
    let degrees: Vec<i64> = multipliers.iter().map(|u| u.degree() as i64).collect();

    // per-stage: list of (subset, per-summand basis), flattened
    struct Stage {
        summands: Vec<Vec<usize>>,
        bases: Vec<Vec<BasisElement>>,
        offsets: Vec<usize>,
        dim: usize,
        subset_index: HashMap<Vec<usize>, usize>,
    }

    let mut stages = Vec::with_capacity(t + 1);
    for i in 0..=t {
        let summands = combinations(t, i);
        let mut bases = Vec::with_capacity(summands.len());
        let mut offsets = Vec::with_capacity(summands.len());
        let mut dim = 0;
        for subset in &summands {
            let shift: i64 = subset.iter().map(|&j| degrees[j]).sum();
            let b = stage_modules[i].basis(e - shift);
            offsets.push(dim);
            dim += b.len();
            bases.push(b);
        }
        let subset_index = summands
            .iter()
            .enumerate()
            .map(|(k, s)| (s.clone(), k))
            .collect();
        stages.push(Stage {
            summands,
            bases,
            offsets,
            dim,
            subset_index,
        });
    }

    let mut diffs = Vec::with_capacity(t);
    for i in 1..=t {
        let (lower, upper) = {
            let (a, b) = stages.split_at(i);
            (&a[i - 1], &b[0])
        };
        // column lookup per target summand
        let target_index: Vec<HashMap<(usize, Vec<u32>), usize>> =
            lower.bases.iter().map(|b| index_basis(b)).collect();
        let target_module = &stage_modules[i - 1];
        let mut mat = FieldMatrix::zeros(field, upper.dim, lower.dim);
        for (si, subset) in upper.summands.iter().enumerate() {
            for (bi, b) in upper.bases[si].iter().enumerate() {
                let row = upper.offsets[si] + bi;
                for (pos, &j) in subset.iter().enumerate() {
                    let mut smaller = subset.clone();
                    smaller.remove(pos);
                    let ti = lower.subset_index[&smaller];
                    let image = b.monomial.mul(&multipliers[j]);
                    if target_module.components()[b.component]
                        .denominator
                        .contains(&image)
                    {
                        continue;
                    }
                    if let Some(&col) =
                        target_index[ti].get(&(b.component, image.exps().to_vec()))
                    {
                        let sign = if pos % 2 == 0 { 1 } else { field.modulus() - 1 };
                        let cur = mat.get(row, lower.offsets[ti] + col);
                        mat.set(row, lower.offsets[ti] + col, field.add(cur, sign));
                    }
                }
            }
        }
        diffs.push(mat);
    }
    // diffs currently ordered d_1, d_2, ..., d_t with diffs[k] = d_{k+1}
    DegreeComplex {
        stage_dims: stages.iter().map(|s| s.dim).collect(),
        diffs,
    }
}

/// Per-degree verdicts for the truncated Koszul subcomplex K.^{(n)} on the
/// reduction generators u, with stage-i term (+)_{|T|=i} I^{n-i}M(-sum p_j).
#[derive(Debug, Clone)]
pub struct ExactnessReport {
    pub n: usize,
    pub per_degree: Vec<(i64, bool)>,
    pub dd_zero: bool,
    pub all_exact: bool,
}

pub fn subcomplex_exactness(
    ideal: &MonomialIdeal,
    module: &GradedModule,
    multipliers: &[Monomial],
    n: usize,
    degree_window: std::ops::RangeInclusive<i64>,
    k_max: usize,
) -> Result<ExactnessReport, Error> {
    let t = multipliers.len();
    if n < t {
        return Err(Error::InvalidElement(format!(
            "subcomplex needs n >= {t}, got {n}"
        )));
    }
    let j_ideal = MonomialIdeal::from_gens(ideal.ambient(), multipliers.to_vec())?;
    if j_ideal.gens().len() != t {
        return Err(Error::InvalidElement(
            "multipliers must be a minimal generating set".into(),
        ));
    }
    if !crate::reduction::is_reduction_of_ideal(&j_ideal, ideal, module, k_max)? {
        return Err(Error::InvalidElement(
            "multipliers do not generate an M-reduction of I".into(),
        ));
    }

    let stage_modules: Vec<GradedModule> = (0..=t)
        .map(|i| module.ideal_power(ideal, n - i))
        .collect::<Result<_, _>>()?;

    let mut per_degree = Vec::new();
    let mut dd_zero = true;
    let mut all_exact = true;
    for e in degree_window {
        let complex = build_degree_complex(module.field(), &stage_modules, multipliers, e);
        if !complex.dd_is_zero() {
            dd_zero = false;
        }
        let exact = complex.exact_everywhere();
        all_exact &= exact;
        per_degree.push((e, exact));
    }
    Ok(ExactnessReport {
        n,
        per_degree,
        dd_zero,
        all_exact,
    })
}

/// Scan n over a range and report the least n from which the window passes
/// for every tested n.
#[derive(Debug, Clone)]
pub struct ThresholdReport {
    pub per_n: Vec<(usize, bool)>,
    pub threshold: Option<usize>,
}

pub fn exactness_threshold(
    ideal: &MonomialIdeal,
    module: &GradedModule,
    multipliers: &[Monomial],
    n_max: usize,
    degree_margin: i64,
    k_max: usize,
) -> Result<ThresholdReport, Error> {
    let t = multipliers.len();
    let mut per_n = Vec::new();
    for n in t..=n_max {
        // window wide enough to cover every degree where the complex has
        // nonzero terms of interest
        let top = module.ideal_power(ideal, n)?.largest_gen_degree().unwrap_or(0) + degree_margin;
        let rep = subcomplex_exactness(ideal, module, multipliers, n, 0..=top, k_max)?;
        per_n.push((n, rep.all_exact && rep.dd_zero));
    }
    let threshold = per_n
        .iter()
        .rev()
        .take_while(|(_, ok)| *ok)
        .map(|(n, _)| *n)
        .last();
    Ok(ThresholdReport { per_n, threshold })
}

/// beta_{i,j} via Koszul homology of the variable sequence with coefficients
/// in M. The internal-degree scan is bounded by the lcm of all component
/// generators, beyond which the homology vanishes.
pub fn betti_table(module: &GradedModule) -> Result<BettiTable, Error> {
    if module.is_zero() {
        return Err(Error::ZeroModule("betti_table"));
    }
    let m = module.ambient();
    let field = module.field();
    let vars: Vec<Monomial> = (0..m).map(|i| Monomial::var(i, m)).collect();
    let stage_modules: Vec<GradedModule> = vec![module.clone(); m + 1];

    let low = module.least_degree()?;
    let high = degree_support_bound(module);

    let mut entries = BTreeMap::new();
    for j in low..=high {
        let complex = build_degree_complex(field, &stage_modules, &vars, j);
        debug_assert!(complex.dd_is_zero());
        for i in 0..=m {
            let h = complex.homology_dim(i);
            if h > 0 {
                entries.insert((i, j), h);
            }
        }
    }
    Ok(BettiTable { entries })
}

/// Max over nonzero components of shift + deg lcm(all numerator and
/// denominator generators): the Taylor-complex support bound.
pub fn degree_support_bound(module: &GradedModule) -> i64 {
    module
        .components()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| {
            let mut l = Monomial::one(module.ambient());
            for g in c.numerator.gens().iter().chain(c.denominator.gens()) {
                l = l.lcm(g);
            }
            c.shift + l.degree() as i64
        })
        .max()
        .unwrap_or(0)
}

/// reg(M) = max{j - i : beta_{i,j} != 0}.
pub fn regularity(module: &GradedModule) -> Result<i64, Error> {
    Ok(betti_table(module)?.regularity())
}
