//! Decision procedures for the arithmetically Cohen-Macaulay property of the
//! projective closure of `t -> (t^{a_1}, ..., t^{a_n})`.
//!
//! The verdict is defined by criterion `d`: `x_n` divides no minimal
//! generator of `ini(I(a))`. Nine further criteria are evaluated on
//! independently computed objects and must agree with it:
//!
//! | field        | test                                                        |
//! |--------------|-------------------------------------------------------------|
//! | `e`          | neither `x_n` nor `x_0` divides a generator of `ini(I(a)^h)` |
//! | `f`          | `x_n` divides no generator of `ini(I(a)^h)`                  |
//! | `g`          | `ini(x_n, I(a)) = (x_n, ini(I(a)))`                          |
//! | `duality_b`  | `ini(f_sigma(w)) = ini(f_w)` for every `f_w` in the basis    |
//! | `duality_c`  | `sigma` maps the reduced basis of `I(a)` onto that of `I(a')`|
//! | `apery_b`    | `ini(x_n, I(a)) = ini(x_n, I(a'))`                           |
//! | `apery_c`    | the two ideals above have the same standard monomials        |
//! | `apery_d`    | `deg_a'(phi_a(h))` lies in `Ap(H', a_n)` for all `h`         |
//! | `cn`         | `{mu_i} = Ap(H', a_n)`                                        |
//!
//! `I(a)^h` is computed directly from the homogenizing matrix, not by
//! homogenizing the basis of `I(a)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::apery::{cn_good, AperyTable, PhiIndex};
use crate::binomial::PureDifference;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::monomial::{Monomial, VarNames};
use crate::sequences::{sigma, Sequence};
use crate::toric::{initial_ideal, Engine, Limits, MonomialIdeal, StandardMonomials};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Criteria {
    pub d: bool,
    pub e: bool,
    pub f: bool,
    pub g: bool,
    pub duality_b: bool,
    pub duality_c: bool,
    pub apery_b: bool,
    pub apery_c: bool,
    pub apery_d: bool,
    pub cn: bool,
}

impl Criteria {
    pub const NAMES: [&'static str; 10] = [
        "d", "e", "f", "g", "duality_b", "duality_c", "apery_b", "apery_c", "apery_d", "cn",
    ];

    pub fn as_array(&self) -> [(&'static str, bool); 10] {
        let values = [
            self.d,
            self.e,
            self.f,
            self.g,
            self.duality_b,
            self.duality_c,
            self.apery_b,
            self.apery_c,
            self.apery_d,
            self.cn,
        ];
        std::array::from_fn(|i| (Self::NAMES[i], values[i]))
    }

    pub fn all_agree(&self) -> bool {
        self.as_array().iter().all(|&(_, v)| v == self.d)
    }

    /// Names of criteria that differ from `d`.
    pub fn dissenters(&self) -> Vec<&'static str> {
        self.as_array()
            .iter()
            .filter(|&&(_, v)| v != self.d)
            .map(|&(n, _)| n)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcmReport {
    pub sequence: Sequence,
    pub verdict: bool,
    pub criteria: Criteria,
    /// First minimal generator of `ini(I(a))` divisible by `x_n`.
    pub witness: Option<String>,
    /// Number of minimal generators of `ini(I(a))`.
    pub mu_ini: usize,
    /// `binomial(a_n, n - 2)`.
    pub bound_binom: u128,
}

impl AcmReport {
    /// Whether `mu_ini <= binomial(a_n, n-2)`; guaranteed when ACM.
    pub fn initial_bound_holds(&self) -> bool {
        self.mu_ini as u128 <= self.bound_binom
    }
}

pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

/// Every object the criteria need for one sequence, computed once.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub sequence: Sequence,
    pub dual: Sequence,
    /// Reduced basis of `I(a)`.
    pub gb: GroebnerBasis,
    /// Reduced basis of `I(a')`.
    pub dual_gb: GroebnerBasis,
    /// Reduced basis of `I(a)^h` from the homogenizing matrix.
    pub homogenized_gb: GroebnerBasis,
    /// Reduced basis of `(x_n, I(a))`.
    pub last_var_gb: GroebnerBasis,
    /// Reduced basis of `(x_n, I(a'))`.
    pub dual_last_var_gb: GroebnerBasis,
    pub standard: StandardMonomials,
    pub dual_standard: StandardMonomials,
    pub apery: AperyTable,
}

impl Analysis {
    pub fn new(a: &Sequence) -> Result<Self> {
        Self::with_engine(a, &Engine::default())
    }

    pub fn with_limits(a: &Sequence, limits: Limits) -> Result<Self> {
        Self::with_engine(a, &Engine::new(limits))
    }

    pub fn with_engine(a: &Sequence, engine: &Engine) -> Result<Self> {
        let n = a.len();
        let dual = a.dual();
        let gb = engine.toric_gb(a)?;
        let dual_gb = engine.toric_gb(&dual)?;
        let homogenized_gb = engine.toric_gb_from_matrix(&a.homogenizing_matrix())?;
        let last_var_gb = engine.gb_with_last_variable_from(a, &gb)?;
        let dual_last_var_gb = engine.gb_with_last_variable_from(&dual, &dual_gb)?;
        let standard = engine.standard_monomials(&initial_ideal(&last_var_gb), n)?;
        let dual_standard = engine.standard_monomials(&initial_ideal(&dual_last_var_gb), n)?;
        let apery = AperyTable::build(a, &PhiIndex::new(a, &standard)?)?;
        Ok(Self {
            sequence: a.clone(),
            dual,
            gb,
            dual_gb,
            homogenized_gb,
            last_var_gb,
            dual_last_var_gb,
            standard,
            dual_standard,
            apery,
        })
    }

    fn last(&self) -> usize {
        self.sequence.len() - 1
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(&self.gb)
    }

    pub fn d_witness(&self) -> Option<&Monomial> {
        let xn = self.last();
        self.gb.leads().find(|m| m.exponent(xn) > 0)
    }

    pub fn d(&self) -> bool {
        self.d_witness().is_none()
    }

    pub fn e(&self) -> bool {
        let (xn, x0) = (self.last(), self.sequence.len());
        initial_ideal(&self.homogenized_gb)
            .gens()
            .iter()
            .all(|m| m.exponent(xn) == 0 && m.exponent(x0) == 0)
    }

    pub fn f(&self) -> bool {
        let xn = self.last();
        initial_ideal(&self.homogenized_gb)
            .gens()
            .iter()
            .all(|m| m.exponent(xn) == 0)
    }

    pub fn g(&self) -> bool {
        let n = self.sequence.len();
        let xn = Monomial::var_power(n, n - 1, 1);
        initial_ideal(&self.last_var_gb) == self.initial_ideal().with(xn)
    }

    pub fn duality_b(&self) -> Result<bool> {
        let order = self.gb.order();
        for f in self.gb.elements() {
            let Some(w) = f.exponent_vector() else { continue };
            let image = PureDifference::from_lattice_vector(&sigma(&w)?, order);
            if image.as_ref().map(PureDifference::lead) != Some(f.lead()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `f_w` is identified with `w = lead - tail`, so the sign of `f_sigma(w)`
    /// matters: `-f_sigma(w)` in the dual basis does not count as a match.
    pub fn duality_c(&self) -> Result<bool> {
        let image: BTreeSet<Vec<i64>> = self
            .gb
            .elements()
            .iter()
            .filter_map(PureDifference::exponent_vector)
            .map(|w| sigma(&w))
            .collect::<Result<_>>()?;
        let dual: BTreeSet<Vec<i64>> = self
            .dual_gb
            .elements()
            .iter()
            .filter_map(PureDifference::exponent_vector)
            .collect();
        Ok(image == dual)
    }

    pub fn apery_b(&self) -> bool {
        initial_ideal(&self.last_var_gb) == initial_ideal(&self.dual_last_var_gb)
    }

    pub fn apery_c(&self) -> bool {
        self.standard.as_set() == self.dual_standard.as_set()
    }

    pub fn apery_d(&self) -> bool {
        self.apery.rows().iter().all(|r| r.in_dual_apery)
    }

    pub fn cn(&self) -> bool {
        cn_good(&self.sequence)
    }

    pub fn criteria(&self) -> Result<Criteria> {
        Ok(Criteria {
            d: self.d(),
            e: self.e(),
            f: self.f(),
            g: self.g(),
            duality_b: self.duality_b()?,
            duality_c: self.duality_c()?,
            apery_b: self.apery_b(),
            apery_c: self.apery_c(),
            apery_d: self.apery_d(),
            cn: self.cn(),
        })
    }

    /// Evaluates all criteria without requiring agreement.
    pub fn report(&self) -> Result<AcmReport> {
        let criteria = self.criteria()?;
        let n = self.sequence.len() as u64;
        let names = VarNames::new(self.sequence.len(), false);
        Ok(AcmReport {
            sequence: self.sequence.clone(),
            verdict: criteria.d,
            criteria,
            witness: self.d_witness().map(|m| names.format(m)),
            mu_ini: self.initial_ideal().len(),
            bound_binom: binomial(self.sequence.modulus(), n.saturating_sub(2))?,
        })
    }
}

/// Runs every criterion and insists that they agree.
pub fn is_acm(a: &Sequence) -> Result<AcmReport> {
    is_acm_with(a, Limits::default())
}

pub fn is_acm_with(a: &Sequence, limits: Limits) -> Result<AcmReport> {
    let report = Analysis::with_limits(a, limits)?.report()?;
    if !report.criteria.all_agree() {
        return Err(Error::InternalInconsistency(format!(
            "{}: criteria {:?} disagree with d = {}",
            a,
            report.criteria.dissenters(),
            report.criteria.d
        )));
    }
    Ok(report)
}

pub fn acm_d(a: &Sequence) -> Result<(bool, Option<Monomial>)> {
    let an = Analysis::new(a)?;
    Ok((an.d(), an.d_witness().cloned()))
}

pub fn acm_e(a: &Sequence) -> Result<bool> {
    Ok(Analysis::new(a)?.e())
}

pub fn acm_f(a: &Sequence) -> Result<bool> {
    Ok(Analysis::new(a)?.f())
}

pub fn acm_g(a: &Sequence) -> Result<bool> {
    Ok(Analysis::new(a)?.g())
}

pub fn acm_duality_b(a: &Sequence) -> Result<bool> {
    Analysis::new(a)?.duality_b()
}

pub fn acm_duality_c(a: &Sequence) -> Result<bool> {
    Analysis::new(a)?.duality_c()
}

pub fn acm_apery_b(a: &Sequence) -> Result<bool> {
    Ok(Analysis::new(a)?.apery_b())
}

pub fn acm_apery_c(a: &Sequence) -> Result<bool> {
    Ok(Analysis::new(a)?.apery_c())
}

pub fn acm_apery_d(a: &Sequence) -> Result<bool> {
    Ok(Analysis::new(a)?.apery_d())
}

/// For `J` containing `m^k` in `nvars >= 2` variables:
/// `mu(J) <= binomial(n+k-1, n-1)` with equality exactly when `J = m^k`.
pub fn check_mk_bound(j: &MonomialIdeal, nvars: usize, k: u64) -> Result<bool> {
    if nvars < 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: nvars });
    }
    let power = MonomialIdeal::maximal_power(nvars, k);
    if !power.gens().iter().all(|m| j.contains(m)) {
        return Err(Error::PowerNotContained(k));
    }
    let bound = binomial(nvars as u64 + k - 1, nvars as u64 - 1)?;
    let mu = j.len() as u128;
    Ok(mu <= bound && ((mu == bound) == (*j == power)))
}

/// `mu(ini(I(a))) <= binomial(a_n, n - 2)`.
pub fn check_initial_bound(a: &Sequence) -> Result<bool> {
    let ini = initial_ideal(&Engine::default().toric_gb(a)?);
    let bound = binomial(a.modulus(), a.len() as u64 - 2)?;
    Ok(ini.len() as u128 <= bound)
}
