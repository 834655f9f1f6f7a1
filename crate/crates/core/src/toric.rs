//! Toric ideals `I(a)`, `I(a)^h` and `(x_n, I(a))`, their initial ideals and
//! standard monomials.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::binomial::PureDifference;
use crate::error::{Error, Result};
use crate::groebner::{reduced_basis, saturate_with_cap, BasisJson, GroebnerBasis, DEFAULT_BASIS_CAP};
use crate::lattice::integer_kernel;
use crate::monomial::{Monomial, OrderSpec, VarNames};
use crate::sequences::{lattice_kernel_basis, Sequence};

pub const DEFAULT_MONOMIAL_BOUND: usize = 1_000_000;

/// Caps shared by every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub basis_cap: usize,
    pub monomial_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            basis_cap: DEFAULT_BASIS_CAP,
            monomial_bound: DEFAULT_MONOMIAL_BOUND,
        }
    }
}

/// A monomial ideal stored by its minimal generators, sorted by `revlex`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`. All generators must share one dimension.
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(|m| (m.degree(), m.clone()));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for m in all {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        if let Some(n) = kept.first().map(Monomial::nvars) {
            let o = OrderSpec::revlex(n);
            kept.sort_by(|a, b| o.cmp(a, b));
        }
        Self { gens: kept }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `J + (extra)`.
    pub fn with(&self, extra: Monomial) -> Self {
        Self::new(self.gens.iter().cloned().chain(std::iter::once(extra)))
    }

    /// `m^k` in `nvars` variables.
    pub fn maximal_power(nvars: usize, k: u64) -> Self {
        Self::new(monomials_of_degree(nvars, k))
    }

    pub fn format(&self, names: &VarNames) -> Vec<String> {
        self.gens.iter().map(|m| names.format(m)).collect()
    }
}

/// All monomials of total degree `k` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, k: u64) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u64>, left: usize, k: u64, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(k);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=k {
            prefix.push(e);
            rec(prefix, left - 1, k - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(&mut Vec::new(), nvars, k, &mut out);
    }
    out
}

/// Monomials outside a zero-dimensional monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomials {
    monos: Vec<Monomial>,
}

impl StandardMonomials {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn as_set(&self) -> HashSet<&Monomial> {
        self.monos.iter().collect()
    }
}

/// Breadth-first enumeration of the order ideal of standard monomials.
pub fn standard_monomials(j: &MonomialIdeal, nvars: usize, bound: usize) -> Result<StandardMonomials> {
    for v in 0..nvars {
        let has_power = j
            .gens()
            .iter()
            .any(|g| g.exps().iter().enumerate().all(|(i, &e)| i == v || e == 0));
        if !has_power {
            return Err(Error::InfiniteStaircase);
        }
    }
    let one = Monomial::one(nvars);
    if j.contains(&one) {
        return Ok(StandardMonomials { monos: Vec::new() });
    }
    let mut seen: HashSet<Monomial> = HashSet::from([one.clone()]);
    let mut queue = VecDeque::from([one]);
    let mut monos = Vec::new();
    while let Some(m) = queue.pop_front() {
        for v in 0..nvars {
            let next = m.mul(&Monomial::var_power(nvars, v, 1));
            if !j.contains(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        monos.push(m);
        if monos.len() > bound {
            return Err(Error::BoundExceeded(bound));
        }
    }
    let o = OrderSpec::revlex(nvars);
    monos.sort_by(|a, b| o.cmp(a, b));
    Ok(StandardMonomials { monos })
}

/// Minimal generators of the initial ideal of a reduced basis.
pub fn initial_ideal(g: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(g.leads().cloned())
}

/// Toric computations under a fixed set of [`Limits`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Engine {
    pub limits: Limits,
}

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Self { limits }
    }

    /// Reduced basis of `I(a)` under revlex with `x_n` smallest.
    pub fn toric_gb(&self, a: &Sequence) -> Result<GroebnerBasis> {
        let n = a.len();
        let order = OrderSpec::revlex(n);
        let seeds: Vec<PureDifference> = lattice_kernel_basis(a)?
            .iter()
            .filter_map(|w| PureDifference::from_lattice_vector(&w.0, &order))
            .collect();
        let grading = a.entries();
        let sat = saturate_with_cap(&seeds, grading, self.limits.basis_cap)?;
        let oriented: Vec<PureDifference> = sat.iter().filter_map(|f| f.reoriented(&order)).collect();
        reduced_basis(&oriented, &order, Some(grading), self.limits.basis_cap)
    }

    /// Reduced basis of the toric ideal of a `2 x (n+1)` matrix whose first
    /// column belongs to `x_0`, under `<_0`. Slot `n` of the result is `x_0`.
    pub fn toric_gb_from_matrix(&self, matrix: &[Vec<i64>]) -> Result<GroebnerBasis> {
        let ncols = matrix.first().map_or(0, Vec::len);
        if matrix.len() != 2 || ncols < 3 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: matrix.len(),
            });
        }
        let n = ncols - 1;
        // column 0 is x0, which lives in the last slot
        let permuted: Vec<Vec<i64>> = matrix
            .iter()
            .map(|row| row[1..].iter().copied().chain(std::iter::once(row[0])).collect())
            .collect();
        let grading: Vec<u64> = (0..ncols)
            .map(|c| {
                let s = permuted[0][c] + permuted[1][c];
                u64::try_from(s).ok().filter(|&s| s > 0).ok_or(Error::NotHomogeneous(format!(
                    "matrix column {c} has non-positive sum"
                )))
            })
            .collect::<Result<_>>()?;
        let order = OrderSpec::homogenized(n);
        let seeds: Vec<PureDifference> = integer_kernel(&permuted, ncols)?
            .iter()
            .filter_map(|w| PureDifference::from_lattice_vector(w, &order))
            .collect();
        let sat = saturate_with_cap(&seeds, &grading, self.limits.basis_cap)?;
        let oriented: Vec<PureDifference> = sat.iter().filter_map(|f| f.reoriented(&order)).collect();
        reduced_basis(&oriented, &order, Some(&grading), self.limits.basis_cap)
    }

    /// Reduced basis of `(x_n) + I(a)`.
    pub fn gb_with_last_variable(&self, a: &Sequence) -> Result<GroebnerBasis> {
        let g = self.toric_gb(a)?;
        self.gb_with_last_variable_from(a, &g)
    }

    /// As [`Engine::gb_with_last_variable`], reusing a computed basis of `I(a)`.
    pub fn gb_with_last_variable_from(&self, a: &Sequence, toric: &GroebnerBasis) -> Result<GroebnerBasis> {
        let n = a.len();
        let mut gens = vec![PureDifference::monomial(Monomial::var_power(n, n - 1, 1))];
        gens.extend(toric.elements().iter().cloned());
        reduced_basis(&gens, toric.order(), Some(a.entries()), self.limits.basis_cap)
    }

    pub fn standard_monomials(&self, j: &MonomialIdeal, nvars: usize) -> Result<StandardMonomials> {
        standard_monomials(j, nvars, self.limits.monomial_bound)
    }
}

pub fn toric_gb(a: &Sequence) -> Result<GroebnerBasis> {
    Engine::default().toric_gb(a)
}

pub fn toric_gb_from_matrix(matrix: &[Vec<i64>]) -> Result<GroebnerBasis> {
    Engine::default().toric_gb_from_matrix(matrix)
}

pub fn gb_with_last_variable(a: &Sequence) -> Result<GroebnerBasis> {
    Engine::default().gb_with_last_variable(a)
}

/// The `{"gb", "ini_gens", "std_monomials_count"}` report fragment.
#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub gb: BasisJson,
    pub ini_gens: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub std_monomials_count: Option<usize>,
}

impl IdealReport {
    pub fn new(g: &GroebnerBasis, std_monomials_count: Option<usize>) -> Self {
        Self {
            gb: g.to_json(),
            ini_gens: initial_ideal(g).format(&g.var_names()),
            std_monomials_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequence {
        Sequence::parse(s).unwrap()
    }

    fn m(e: &[u64]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn golden_bases() {
        let g = toric_gb(&seq("4,13,19")).unwrap();
        assert_eq!(
            g.format_lines(),
            ["y^5 - x^2*z^3", "x^3*y^2 - z^2", "x^5*z - y^3", "x^8 - y*z"]
        );
        let g = toric_gb(&seq("15,6,19")).unwrap();
        assert_eq!(
            g.format_lines(),
            ["y^5 - x^2", "x^3*y^2 - z^3", "y^3*z^3 - x^5", "x^8 - y*z^6"]
        );
    }

    #[test]
    fn small_bases() {
        assert_eq!(toric_gb(&seq("2,3")).unwrap().format_lines(), ["x^3 - y^2"]);
        assert_eq!(
            toric_gb(&seq("3,4,5")).unwrap().format_lines(),
            ["y^2 - x*z", "x^2*y - z^2", "x^3 - y*z"]
        );
    }

    #[test]
    fn matrix_bases() {
        let a = seq("2,3");
        let g = toric_gb_from_matrix(&a.homogenizing_matrix()).unwrap();
        assert_eq!(g.format_lines(), ["x^3 - y^2*x0"]);
        let g = toric_gb_from_matrix(&seq("3,4,5").homogenizing_matrix()).unwrap();
        let leads: Vec<_> = g.leads().cloned().collect();
        assert_eq!(leads, [m(&[0, 2, 0, 0]), m(&[2, 1, 0, 0]), m(&[3, 0, 0, 0])]);
    }

    #[test]
    fn last_variable_bases() {
        let g = gb_with_last_variable(&seq("3,4,5")).unwrap();
        let ini = initial_ideal(&g);
        assert_eq!(ini.gens(), [m(&[0, 0, 1]), m(&[0, 2, 0]), m(&[2, 1, 0]), m(&[3, 0, 0])]);
        let g = gb_with_last_variable(&seq("2,3")).unwrap();
        assert_eq!(g.format_lines(), ["y", "x^3"]);
        let a = seq("4,13,19");
        let ini = initial_ideal(&gb_with_last_variable(&a).unwrap());
        let plain = initial_ideal(&toric_gb(&a).unwrap()).with(m(&[0, 0, 1]));
        assert_ne!(ini, plain);
        assert!(ini.contains(&m(&[0, 3, 0])) && !plain.contains(&m(&[0, 3, 0])));
    }

    #[test]
    fn staircases() {
        let j = MonomialIdeal::new([m(&[0, 0, 1]), m(&[0, 2, 0]), m(&[2, 1, 0]), m(&[3, 0, 0])]);
        let s = standard_monomials(&j, 3, 100).unwrap();
        let mut got: Vec<_> = s.monomials().to_vec();
        got.sort();
        let mut want = vec![m(&[0, 0, 0]), m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[1, 1, 0]), m(&[2, 0, 0])];
        want.sort();
        assert_eq!(got, want);
        let max = MonomialIdeal::maximal_power(3, 1);
        assert_eq!(standard_monomials(&max, 3, 10).unwrap().monomials(), [m(&[0, 0, 0])]);
        let open = MonomialIdeal::new([m(&[0, 0, 1]), m(&[2, 0, 0])]);
        assert_eq!(standard_monomials(&open, 3, 10), Err(Error::InfiniteStaircase));
        assert_eq!(standard_monomials(&j, 3, 3), Err(Error::BoundExceeded(3)));
        let a = seq("4,13,19");
        let ini = initial_ideal(&gb_with_last_variable(&a).unwrap());
        assert_eq!(standard_monomials(&ini, 3, 1000).unwrap().len(), 19);
    }

    #[test]
    fn minimalization() {
        let j = MonomialIdeal::new([m(&[2, 0]), m(&[3, 1]), m(&[0, 3]), m(&[2, 0])]);
        assert_eq!(j.gens(), [m(&[2, 0]), m(&[0, 3])]);
        assert_eq!(MonomialIdeal::maximal_power(3, 3).len(), 10);
    }
}
