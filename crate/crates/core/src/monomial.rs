//! Exponent-vector monomials and graded reverse lexicographic orders.
//!
//! A monomial lives in `K[x_1, ..., x_n]` or, in homogenized contexts, in
//! `K[x_1, ..., x_n, x_0]` where the homogenizing variable occupies the last
//! slot of the exponent vector.

use std::cmp::{Ordering, Reverse};
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    /// The monomial `x_var^exp` in a ring with `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, exp: u64) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Self { exps }
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, var: usize) -> u64 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    /// `sum r_i w_i` with overflow checking.
    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        if weights.len() != self.exps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.exps.len(),
                got: weights.len(),
            });
        }
        self.exps.iter().zip(weights).try_fold(0u64, |acc, (&e, &w)| {
            e.checked_mul(w)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("weighted degree"))
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    /// Appends a homogenizing slot with exponent `e`.
    pub fn with_appended(&self, e: u64) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(e);
        Monomial { exps }
    }

    /// Drops the last slot; used to move between `S[x_0]` and `S`.
    pub fn without_last(&self) -> Monomial {
        Monomial {
            exps: self.exps[..self.exps.len() - 1].to_vec(),
        }
    }
}

/// A graded reverse lexicographic order.
///
/// `ranking` lists the variables from largest to smallest. `weights` is the
/// degree used for the first comparison (total degree when absent). When
/// `homogenized` is set the last slot is `x_0` and must be ranked last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    ranking: Vec<usize>,
    weights: Option<Vec<u64>>,
    homogenized: bool,
}

impl OrderSpec {
    /// Revlex on `K[x_1..x_n]` with `x_1 > ... > x_n`.
    pub fn revlex(nvars: usize) -> Self {
        Self {
            ranking: (0..nvars).collect(),
            weights: None,
            homogenized: false,
        }
    }

    /// The order `<_0` on `K[x_1..x_n, x_0]`: extends [`OrderSpec::revlex`]
    /// with `x_0` (slot `n`) as the least variable.
    pub fn homogenized(n: usize) -> Self {
        Self {
            ranking: (0..=n).collect(),
            weights: None,
            homogenized: true,
        }
    }

    /// Builds an order from an explicit ranking (largest variable first).
    pub fn with_ranking(ranking: Vec<usize>, homogenized: bool) -> Result<Self> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &v in &ranking {
            if v >= n || seen[v] {
                return Err(Error::Parse {
                    input: format!("{ranking:?}"),
                    reason: "ranking is not a permutation".into(),
                });
            }
            seen[v] = true;
        }
        if homogenized && ranking.last() != Some(&(n - 1)) {
            return Err(Error::Parse {
                input: format!("{ranking:?}"),
                reason: "x0 must be the least variable".into(),
            });
        }
        Ok(Self {
            ranking,
            weights: None,
            homogenized,
        })
    }

    /// Weighted revlex with `var` the least variable; the remaining variables
    /// keep their natural order.
    pub fn weighted_with_smallest(weights: &[u64], var: usize) -> Self {
        let mut ranking: Vec<usize> = (0..weights.len()).filter(|&v| v != var).collect();
        ranking.push(var);
        Self {
            ranking,
            weights: Some(weights.to_vec()),
            homogenized: false,
        }
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    pub fn is_homogenized(&self) -> bool {
        self.homogenized
    }

    pub fn smallest_variable(&self) -> usize {
        *self.ranking.last().expect("order over zero variables")
    }

    /// Number of ordinary variables `n` (excluding `x_0`).
    pub fn base_nvars(&self) -> usize {
        self.nvars() - usize::from(self.homogenized)
    }

    fn order_degree(&self, m: &Monomial) -> u64 {
        match &self.weights {
            None => m.degree(),
            Some(w) => m.exps.iter().zip(w).map(|(e, w)| e * w).sum(),
        }
    }

    /// Compares two monomials of matching dimension.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        let by_degree = self.order_degree(a).cmp(&self.order_degree(b));
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        for &v in self.ranking.iter().rev() {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                // more of the smallest variable means smaller
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }

    /// A key whose natural ordering agrees with [`OrderSpec::cmp`].
    pub fn sort_key(&self, m: &Monomial) -> (u64, Vec<Reverse<u64>>) {
        (
            self.order_degree(m),
            self.ranking.iter().rev().map(|&v| Reverse(m.exps[v])).collect(),
        )
    }
}

/// Revlex comparison with dimension checking.
pub fn revlex_cmp(m1: &Monomial, m2: &Monomial, order: &OrderSpec) -> Result<Ordering> {
    for m in [m1, m2] {
        if m.nvars() != order.nvars() {
            return Err(Error::DimensionMismatch {
                expected: order.nvars(),
                got: m.nvars(),
            });
        }
    }
    Ok(order.cmp(m1, m2))
}

/// `deg_a(m) = sum r_i a_i`.
pub fn deg_weighted(m: &Monomial, weights: &[u64]) -> Result<u64> {
    m.weighted_degree(weights)
}

/// Variable names used by the text format.
///
/// Rings with at most three ordinary variables use `x, y, z`; larger rings
/// use `x1, ..., xn`. The homogenizing variable is always `x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    pub fn new(n: usize, homogenized: bool) -> Self {
        let mut names: Vec<String> = if n <= 3 {
            ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        if homogenized {
            names.push("x0".into());
        }
        Self { names }
    }

    pub fn for_order(order: &OrderSpec) -> Self {
        Self::new(order.base_nvars(), order.is_homogenized())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn format(&self, m: &Monomial) -> String {
        let mut out = String::new();
        for (name, &e) in self.names.iter().zip(m.exps()) {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(name);
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Some(i);
        }
        // x1..xn are accepted even when x,y,z are the display names
        let base = self.names.len() - usize::from(self.names.last().is_some_and(|n| n == "x0"));
        let idx: usize = name.strip_prefix('x')?.parse().ok()?;
        if idx == 0 {
            return (base < self.names.len()).then_some(base);
        }
        (idx <= base).then(|| idx - 1)
    }

    /// Parses `x^3*z^2`, `x1^3*x3^2` or `1`.
    pub fn parse(&self, input: &str) -> Result<Monomial> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        let mut exps = vec![0u64; self.names.len()];
        if s == "1" {
            return Ok(Monomial::new(exps));
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<u64>().map_err(|_| err("bad exponent"))?),
                None => (factor, 1),
            };
            let var = self.index_of(name).ok_or_else(|| err("unknown variable"))?;
            exps[var] = exps[var]
                .checked_add(exp)
                .ok_or(Error::Overflow("monomial parse"))?;
        }
        Ok(Monomial::new(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn known_leads_are_greater() {
        let o = OrderSpec::revlex(3);
        assert_eq!(o.cmp(&m(&[0, 5, 0]), &m(&[2, 0, 3])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[8, 0, 0]), &m(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ordering::Equal);
    }

    #[test]
    fn weighted_degrees() {
        assert_eq!(deg_weighted(&m(&[3, 0, 0]), &[3, 4, 5]).unwrap(), 9);
        assert_eq!(deg_weighted(&m(&[1, 1, 0]), &[3, 4, 5]).unwrap(), 7);
        assert_eq!(deg_weighted(&m(&[0, 5, 0]), &[4, 13, 19]).unwrap(), 65);
        assert!(matches!(
            deg_weighted(&m(&[u64::MAX, 0]), &[2, 1]),
            Err(Error::Overflow(_))
        ));
        assert!(deg_weighted(&m(&[1, 0]), &[1, 2, 3]).is_err());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let o = OrderSpec::revlex(3);
        assert!(matches!(
            revlex_cmp(&m(&[1, 0]), &m(&[1, 0, 0]), &o),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn x0_is_least_in_homogenized_order() {
        let o = OrderSpec::homogenized(3);
        // z > x0, both degree one
        assert_eq!(o.cmp(&m(&[0, 0, 1, 0]), &m(&[0, 0, 0, 1])), Ordering::Greater);
        assert!(OrderSpec::with_ranking(vec![3, 0, 1, 2], true).is_err());
        assert!(OrderSpec::with_ranking(vec![0, 0, 1], false).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let names = VarNames::new(3, false);
        assert_eq!(names.format(&m(&[3, 0, 2])), "x^3*z^2");
        assert_eq!(names.format(&m(&[0, 1, 0])), "y");
        assert_eq!(names.format(&m(&[0, 0, 0])), "1");
        assert_eq!(names.parse("x1^3*x3^2").unwrap(), m(&[3, 0, 2]));
        let big = VarNames::new(4, true);
        assert_eq!(big.format(&m(&[1, 0, 0, 2, 3])), "x1*x4^2*x0^3");
        assert_eq!(big.parse("x1*x4^2*x0^3").unwrap(), m(&[1, 0, 0, 2, 3]));
        assert!(names.parse("w^2").is_err());
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u64..6, n).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_is_total_and_multiplicative(a in mono(4), b in mono(4), c in mono(4)) {
            let o = OrderSpec::revlex(4);
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_eq!(o.sort_key(&a).cmp(&o.sort_key(&b)), ab);
            prop_assert!(o.cmp(&Monomial::one(4), &a) != Ordering::Greater);
        }

        #[test]
        fn homogenized_block_behaviour(a in mono(3), b in mono(3)) {
            // m < m' in S and deg(m x0^eps) = deg(m') imply m x0^eps <_0 m'
            let o = OrderSpec::revlex(3);
            let o0 = OrderSpec::homogenized(3);
            let (a, b) = if o.cmp(&a, &b) == Ordering::Greater { (b, a) } else { (a, b) };
            prop_assume!(a != b);
            let eps = b.degree() - a.degree();
            prop_assert_eq!(o0.cmp(&a.with_appended(eps), &b.with_appended(0)), Ordering::Less);
        }
    }
}
