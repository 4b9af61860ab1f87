//! Graded modules as finite direct sums of shifted monomial subquotients
//! ((g+q)/q)(-a), together with their degree-wise invariants.
//!
//! This class is closed under every construction performed here: I^n M,
//! truncation M_{>=n}, shifts, direct sums and monomial quotients, and every
//! graded piece has an explicit monomial basis.

use crate::error::Error;
use crate::linalg::{FieldMatrix, PrimeField};
use crate::monomial::{degree_slice, Monomial, MonomialIdeal};
use std::fmt;

/// One summand ((g+q)/q)(-a).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub shift: i64,
    pub numerator: MonomialIdeal,
    pub denominator: MonomialIdeal,
}

impl Component {
    pub fn is_zero(&self) -> bool {
        self.denominator.contains_ideal(&self.numerator)
    }

    pub fn ambient(&self) -> usize {
        self.numerator.ambient()
    }

    /// Minimal generators of g not lying in q; these minimally generate the
    /// subquotient as a module (any other generator is a proper multiple).
    pub fn min_generators(&self) -> Vec<Monomial> {
        self.numerator
            .gens()
            .iter()
            .filter(|g| !self.denominator.contains(g))
            .cloned()
            .collect()
    }
}

/// A basis element of a graded piece: the image of `monomial` in component
/// `component`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub component: usize,
    pub monomial: Monomial,
}

/// Krull dimension with a sentinel for the zero module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrullDim {
    NegInf,
    Dim(usize),
}

impl KrullDim {
    pub fn finite(&self) -> Option<usize> {
        match self {
            KrullDim::NegInf => None,
            KrullDim::Dim(d) => Some(*d),
        }
    }
}

impl fmt::Display for KrullDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullDim::NegInf => write!(f, "-inf"),
            KrullDim::Dim(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    field: PrimeField,
    ambient: usize,
    components: Vec<Component>,
}

impl GradedModule {
    pub fn new(
        field: PrimeField,
        ambient: usize,
        components: Vec<Component>,
    ) -> Result<Self, Error> {
        for c in &components {
            if c.numerator.ambient() != ambient || c.denominator.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    got: c.numerator.ambient(),
                });
            }
        }
        Ok(GradedModule {
            field,
            ambient,
            components,
        })
    }

    /// The free module S itself.
    pub fn free(field: PrimeField, ambient: usize) -> Self {
        GradedModule {
            field,
            ambient,
            components: vec![Component {
                shift: 0,
                numerator: MonomialIdeal::unit(ambient),
                denominator: MonomialIdeal::zero(ambient),
            }],
        }
    }

    /// S/q.
    pub fn quotient_ring(field: PrimeField, q: MonomialIdeal) -> Self {
        let ambient = q.ambient();
        GradedModule {
            field,
            ambient,
            components: vec![Component {
                shift: 0,
                numerator: MonomialIdeal::unit(ambient),
                denominator: q,
            }],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// t_e = dim_K M_e.
    pub fn hilbert_value(&self, e: i64) -> usize {
        self.components
            .iter()
            .map(|c| {
                let d = e - c.shift;
                if d < 0 {
                    0
                } else {
                    degree_slice(&c.numerator, &c.denominator, d as u32).len()
                }
            })
            .sum()
    }

    /// Deterministic ordered monomial basis of M_e: component order, then
    /// descending lex within a component.
    pub fn basis(&self, e: i64) -> Vec<BasisElement> {
        let mut out = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let d = e - c.shift;
            if d < 0 {
                continue;
            }
            for mu in degree_slice(&c.numerator, &c.denominator, d as u32) {
                out.push(BasisElement {
                    component: i,
                    monomial: mu,
                });
            }
        }
        out
    }

    /// I^n M: each numerator replaced by I^n * g.
    pub fn ideal_power(&self, ideal: &MonomialIdeal, n: usize) -> Result<GradedModule, Error> {
        if ideal.ambient() != self.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                got: ideal.ambient(),
            });
        }
        if n == 0 {
            return Ok(self.clone());
        }
        let power = ideal.power(n);
        let components = self
            .components
            .iter()
            .map(|c| Component {
                shift: c.shift,
                numerator: power.product(&c.numerator),
                denominator: c.denominator.clone(),
            })
            .collect();
        Ok(GradedModule {
            field: self.field,
            ambient: self.ambient,
            components,
        })
    }

    /// The minimal monomial generating set of M, as basis elements.
    pub fn min_generators(&self) -> Vec<BasisElement> {
        let mut out = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            for mu in c.min_generators() {
                out.push(BasisElement {
                    component: i,
                    monomial: mu,
                });
            }
        }
        out
    }

    /// D(M): largest degree of a minimal generator.
    pub fn largest_gen_degree(&self) -> Result<i64, Error> {
        self.min_generators()
            .iter()
            .map(|b| b.monomial.degree() as i64 + self.components[b.component].shift)
            .max()
            .ok_or(Error::ZeroModule("D(M)"))
    }

    /// d(M): least degree of a minimal generator, which equals the least
    /// nonzero degree of M.
    pub fn least_degree(&self) -> Result<i64, Error> {
        self.min_generators()
            .iter()
            .map(|b| b.monomial.degree() as i64 + self.components[b.component].shift)
            .min()
            .ok_or(Error::ZeroModule("d(M)"))
    }

    /// Krull dimension: max over nonzero components of dim S/(q : g).
    pub fn krull_dim(&self) -> KrullDim {
        let mut best: Option<usize> = None;
        for c in &self.components {
            if c.is_zero() {
                continue;
            }
            let ann = c.denominator.colon(&c.numerator);
            let d = dim_of_quotient(self.ambient, &ann);
            best = Some(best.map_or(d, |b| b.max(d)));
        }
        match best {
            None => KrullDim::NegInf,
            Some(d) => KrullDim::Dim(d),
        }
    }

    /// M_{>=n}: intersect each numerator with the appropriate power of the
    /// maximal ideal.
    pub fn truncate_at(&self, n: i64) -> GradedModule {
        let components = self
            .components
            .iter()
            .map(|c| {
                let k = (n - c.shift).max(0) as u32;
                Component {
                    shift: c.shift,
                    numerator: c
                        .numerator
                        .intersect(&MonomialIdeal::maximal_power(self.ambient, k)),
                    denominator: c.denominator.clone(),
                }
            })
            .collect();
        GradedModule {
            field: self.field,
            ambient: self.ambient,
            components,
        }
    }

    /// M(-p): raise all degrees by p.
    pub fn shifted(&self, p: i64) -> GradedModule {
        let components = self
            .components
            .iter()
            .map(|c| Component {
                shift: c.shift + p,
                numerator: c.numerator.clone(),
                denominator: c.denominator.clone(),
            })
            .collect();
        GradedModule {
            field: self.field,
            ambient: self.ambient,
            components,
        }
    }

    /// Direct sum of shifted copies: concatenates components of each
    /// M_i(-p_i).
    pub fn shift_and_sum(parts: &[(GradedModule, i64)]) -> Result<GradedModule, Error> {
        let Some((first, _)) = parts.first() else {
            return Err(Error::InvalidElement("empty direct sum".into()));
        };
        let field = first.field;
        let ambient = first.ambient;
        let mut components = Vec::new();
        for (m, p) in parts {
            if m.ambient != ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    got: m.ambient,
                });
            }
            components.extend(m.shifted(*p).components);
        }
        Ok(GradedModule {
            field,
            ambient,
            components,
        })
    }

    pub fn direct_sum(&self, other: &GradedModule) -> Result<GradedModule, Error> {
        Self::shift_and_sum(&[(self.clone(), 0), (other.clone(), 0)])
    }

    /// Quotient by the submodule generated by the listed basis elements:
    /// enlarges the indicated component denominators.
    pub fn quotient_by_elements(&self, elems: &[BasisElement]) -> Result<GradedModule, Error> {
        let mut components = self.components.clone();
        for e in elems {
            let Some(c) = components.get_mut(e.component) else {
                return Err(Error::InvalidElement(format!(
                    "component index {} out of range",
                    e.component
                )));
            };
            if e.monomial.ambient() != self.ambient {
                return Err(Error::InvalidElement(format!(
                    "monomial {} has wrong ambient size",
                    e.monomial
                )));
            }
            if !c.numerator.contains(&e.monomial) {
                return Err(Error::InvalidElement(format!(
                    "monomial {} does not lie in the component numerator",
                    e.monomial
                )));
            }
            let mut gens = c.denominator.gens().to_vec();
            gens.push(e.monomial.clone());
            c.denominator = MonomialIdeal::minimalize_unchecked(self.ambient, gens);
        }
        Ok(GradedModule {
            field: self.field,
            ambient: self.ambient,
            components,
        })
    }

    /// The largest e with M_e != 0, for modules of finite length. Relies on
    /// the fact that M_{e+1} = R_1 M_e for e >= D(M), so a single zero piece
    /// past D(M) certifies vanishing beyond it.
    pub fn top_nonzero_degree(&self) -> Result<i64, Error> {
        if self.is_zero() {
            return Err(Error::ZeroModule("top degree"));
        }
        let dmax = self.largest_gen_degree()?;
        let mut e = self.least_degree()?;
        let mut last = None;
        loop {
            if self.hilbert_value(e) > 0 {
                last = Some(e);
            } else if e >= dmax {
                return last.ok_or(Error::ZeroModule("top degree"));
            }
            e += 1;
        }
    }

    /// Coordinate row of a monomial within the basis of M_e; None if the
    /// monomial maps to zero in its component.
    pub fn coordinates(&self, e: i64, elem: &BasisElement) -> Option<Vec<u64>> {
        let basis = self.basis(e);
        let idx = basis.iter().position(|b| b == elem)?;
        let mut row = vec![0u64; basis.len()];
        row[idx] = 1;
        Some(row)
    }

    /// Matrix of the multiplication map R_1 (x) M_{e-1} -> M_e: one row per
    /// (variable, basis element of M_{e-1}), written in the basis of M_e.
    pub fn variable_multiplication_matrix(&self, e: i64) -> FieldMatrix {
        let domain = self.basis(e - 1);
        let codomain = self.basis(e);
        let index = index_basis(&codomain);
        let mut mat = FieldMatrix::zeros(self.field, self.ambient * domain.len(), codomain.len());
        for (bi, b) in domain.iter().enumerate() {
            for v in 0..self.ambient {
                let image = b.monomial.mul_var(v);
                if self.components[b.component].denominator.contains(&image) {
                    continue;
                }
                if let Some(&col) = index.get(&(b.component, image.exps().to_vec())) {
                    mat.set(v * domain.len() + bi, col, 1);
                }
            }
        }
        mat
    }
}

/// Map (component, exponent vector) -> column index for a basis listing.
pub(crate) fn index_basis(
    basis: &[BasisElement],
) -> std::collections::HashMap<(usize, Vec<u32>), usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, b)| ((b.component, b.monomial.exps().to_vec()), i))
        .collect()
}

/// dim S/ann for a monomial ideal ann: the largest subset Z of the variables
/// such that no minimal generator of ann has support inside Z.
fn dim_of_quotient(m: usize, ann: &MonomialIdeal) -> usize {
    if ann.is_unit() {
        // only reachable from zero components, which callers skip
        return 0;
    }
    let supports: Vec<u16> = ann
        .gens()
        .iter()
        .map(|g| {
            let mut mask = 0u16;
            for i in g.support() {
                mask |= 1 << i;
            }
            mask
        })
        .collect();
    let mut best = 0usize;
    for z in 0u32..(1u32 << m) {
        let z = z as u16;
        if supports.iter().any(|&s| s & !z == 0) {
            continue;
        }
        best = best.max(z.count_ones() as usize);
    }
    best
}
