//! Monomials and monomial ideals in S = K[x_1..x_m] with the standard grading.
//!
//! Ideals are stored by their unique minimal generating set. All deterministic
//! listings use lexicographic order with x_1 > x_2 > ... > x_m.

use crate::error::Error;
use std::cmp::Ordering;
use std::fmt;

/// Hard cap on the ambient variable count (Krull dimension enumerates
/// variable subsets, which is 2^m).
pub const MAX_VARS: usize = 16;

/// A monomial as a vector of non-negative exponents, one per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1 in `m` variables.
    pub fn one(m: usize) -> Self {
        Monomial { exps: vec![0; m] }
    }

    /// The variable x_i (0-based).
    pub fn var(i: usize, m: usize) -> Self {
        let mut exps = vec![0; m];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// self / other, assuming other divides self.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Indices of variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Lexicographic comparison with x_1 > x_2 > ... > x_m.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `m` variables, in descending lex
/// order (x_1^d first).
pub fn monomials_of_degree(m: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    let mut current = vec![0u32; m];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, idx: usize, remaining: u32) {
    let m = current.len();
    if idx == m - 1 {
        current[idx] = remaining;
        out.push(Monomial::new(current.clone()));
        current[idx] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[idx] = e;
        fill(out, current, idx + 1, remaining - e);
    }
    current[idx] = 0;
}

/// A monomial ideal stored by its minimal generators. The zero ideal has no
/// generators; the unit ideal is generated by 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize an arbitrary generating list. Errors on mixed ambient sizes.
    pub fn from_gens(ambient: usize, gens: Vec<Monomial>) -> Result<Self, Error> {
        if ambient > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: ambient,
            });
        }
        for g in &gens {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    got: g.ambient(),
                });
            }
        }
        Ok(Self::minimalize_unchecked(ambient, gens))
    }

    pub(crate) fn minimalize_unchecked(ambient: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp_lex(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort_by(|a, b| b.cmp_lex(a));
        MonomialIdeal {
            ambient,
            gens: minimal,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: vec![],
        }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: vec![Monomial::one(ambient)],
        }
    }

    /// m^k: the ideal of all monomials of degree >= k.
    pub fn maximal_power(ambient: usize, k: u32) -> Self {
        MonomialIdeal {
            ambient,
            gens: monomials_of_degree(ambient, k),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, mono: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(mono))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Largest generator degree D(I). None for the zero ideal.
    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// Least generator degree d(I). None for the zero ideal.
    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Self::minimalize_unchecked(self.ambient, gens)
    }

    /// I^n, with I^0 the unit ideal.
    pub fn power(&self, n: usize) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    /// Colon ideal (self : g) = {mu : mu * g in self}.
    pub fn colon(&self, g: &MonomialIdeal) -> MonomialIdeal {
        let mut result = MonomialIdeal::unit(self.ambient);
        for gamma in &g.gens {
            let per_gen: Vec<Monomial> = self
                .gens
                .iter()
                .map(|q| q.div_exact(&q.gcd(gamma)))
                .collect();
            let per_gen = Self::minimalize_unchecked(self.ambient, per_gen);
            result = result.intersect(&per_gen);
        }
        result
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::minimalize_unchecked(self.ambient, gens)
    }

    /// Subideal generated by the minimal generators of degree <= d.
    pub fn generated_upto(&self, d: u32) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| g.degree() <= d)
            .cloned()
            .collect();
        MonomialIdeal {
            ambient: self.ambient,
            gens,
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// All monomials mu of degree `e` with mu in g and mu not in q, in
/// descending lex order.
pub fn degree_slice(g: &MonomialIdeal, q: &MonomialIdeal, e: u32) -> Vec<Monomial> {
    monomials_of_degree(g.ambient(), e)
        .into_iter()
        .filter(|mu| g.contains(mu) && !q.contains(mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(m: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_gens(m, gens.iter().map(|g| mono(g)).collect()).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        // {x^2, x^2 y} -> {x^2}
        let i = ideal(2, &[&[2, 0], &[2, 1]]);
        assert_eq!(i.gens(), &[mono(&[2, 0])]);
        // {x, y, xy} -> {x, y}
        let i = ideal(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(i.gens(), &[mono(&[1, 0]), mono(&[0, 1])]);
        // {} -> zero ideal
        let i = MonomialIdeal::from_gens(2, vec![]).unwrap();
        assert!(i.is_zero());
    }

    #[test]
    fn minimalize_rejects_mixed_ambient() {
        let res = MonomialIdeal::from_gens(2, vec![mono(&[1, 0]), mono(&[1, 0, 0])]);
        assert!(res.is_err());
    }

    #[test]
    fn power_examples() {
        // (x,y)^2 = (x^2, xy, y^2)
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let sq = m.power(2);
        assert_eq!(sq.gens(), &[mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]);
        // (x^2, y^3)^2 = (x^4, x^2 y^3, y^6)
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let sq = i.power(2);
        assert_eq!(sq.gens(), &[mono(&[4, 0]), mono(&[2, 3]), mono(&[0, 6])]);
        // I^0 = (1)
        assert!(i.power(0).is_unit());
    }

    #[test]
    fn colon_examples() {
        // (x^2 y, y^3) : (y) = (x^2, y^2)
        let q = ideal(2, &[&[2, 1], &[0, 3]]);
        let g = ideal(2, &[&[0, 1]]);
        assert_eq!(q.colon(&g), ideal(2, &[&[2, 0], &[0, 2]]));
        // q : (1) = q
        assert_eq!(q.colon(&MonomialIdeal::unit(2)), q);
        // (x) : (x) = (1)
        let x = ideal(2, &[&[1, 0]]);
        assert!(x.colon(&x).is_unit());
    }

    #[test]
    fn intersect_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y), ideal(2, &[&[1, 1]]));
        let x2 = ideal(2, &[&[2, 0]]);
        assert_eq!(x2.intersect(&x), x2);
        // containment collapses the intersection
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let sq = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(m.intersect(&sq), sq);
        // incomparable generators produce a mixed lcm
        let xa = ideal(2, &[&[2, 0], &[0, 1]]);
        let yb = ideal(2, &[&[1, 0], &[0, 2]]);
        assert_eq!(xa.intersect(&yb), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    #[test]
    fn generated_upto_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(i.generated_upto(2), ideal(2, &[&[2, 0], &[1, 1]]));
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(i.generated_upto(1).is_zero());
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.generated_upto(1), m);
    }

    #[test]
    fn degree_slice_examples() {
        let one = MonomialIdeal::unit(2);
        let q = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(degree_slice(&one, &q, 1), vec![mono(&[1, 0]), mono(&[0, 1])]);
        assert!(degree_slice(&one, &q, 2).is_empty());
        let g = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[2, 0]]);
        assert_eq!(degree_slice(&g, &x2, 3), vec![mono(&[1, 2])]);
    }

    #[test]
    fn monomial_enumeration_is_lex_descending() {
        let ms = monomials_of_degree(2, 2);
        assert_eq!(ms, vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]);
        assert_eq!(monomials_of_degree(3, 1).len(), 3);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 0), vec![mono(&[0, 0])]);
    }

    fn arb_monomial(m: usize, maxdeg: u32) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0..=maxdeg, m).prop_map(Monomial::new)
    }

    fn arb_ideal(m: usize) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(arb_monomial(m, 3), 0..=4)
            .prop_map(move |gens| MonomialIdeal::from_gens(m, gens).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // Membership law: mu in I iff some minimal generator divides mu,
        // checked against brute-force scan of the generating list.
        #[test]
        fn membership_matches_divisibility(
            gens in prop::collection::vec(arb_monomial(3, 3), 0..=4),
            mu in arb_monomial(3, 8),
        ) {
            let i = MonomialIdeal::from_gens(3, gens.clone()).unwrap();
            let brute = gens.iter().any(|g| {
                // mu in (g) iff mu = g * something
                g.divides(&mu)
            });
            prop_assert_eq!(i.contains(&mu), brute);
        }

        #[test]
        fn power_is_additive(i in arb_ideal(3), a in 0usize..=3, b in 0usize..=3) {
            let lhs = i.power(a + b);
            let rhs = i.power(a).product(&i.power(b));
            prop_assert_eq!(lhs, rhs);
        }

        // mu in (q : g) iff mu*gamma in q for every generator gamma of g.
        #[test]
        fn colon_oracle(q in arb_ideal(2), g in arb_ideal(2)) {
            let c = q.colon(&g);
            for d in 0..=6u32 {
                for mu in monomials_of_degree(2, d) {
                    let brute = g.gens().iter().all(|gamma| q.contains(&mu.mul(gamma)));
                    prop_assert_eq!(c.contains(&mu), brute, "mu = {}", mu);
                }
            }
        }

        #[test]
        fn intersect_oracle(a in arb_ideal(2), b in arb_ideal(2)) {
            let c = a.intersect(&b);
            for d in 0..=6u32 {
                for mu in monomials_of_degree(2, d) {
                    prop_assert_eq!(c.contains(&mu), a.contains(&mu) && b.contains(&mu));
                }
            }
        }

        #[test]
        fn minimal_generators_generate(gens in prop::collection::vec(arb_monomial(3, 3), 0..=5)) {
            let i = MonomialIdeal::from_gens(3, gens.clone()).unwrap();
            for g in &gens {
                prop_assert!(i.contains(g));
            }
            // no minimal generator divides another
            for (a, ga) in i.gens().iter().enumerate() {
                for (b, gb) in i.gens().iter().enumerate() {
                    if a != b {
                        prop_assert!(!ga.divides(gb));
                    }
                }
            }
        }
    }
}
