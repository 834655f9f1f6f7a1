//! Pure differences `lead - tail` with coefficients `+1` and `-1`.
//!
//! Every polynomial the engine touches has this shape: the S-polynomial of
//! two pure differences and the result of reducing one by another are again
//! pure differences (or zero). A monomial is the special case with no tail.
//! Functions returning `Option<PureDifference>` use `None` for zero.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, OrderSpec, VarNames};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PureDifference {
    lead: Monomial,
    tail: Option<Monomial>,
}

impl PureDifference {
    /// `p - q` (or `q - p`) oriented so that the larger monomial leads.
    /// Returns `None` when the two monomials cancel.
    pub fn oriented(p: Monomial, q: Option<Monomial>, order: &OrderSpec) -> Option<Self> {
        match q {
            None => Some(Self { lead: p, tail: None }),
            Some(q) => match order.cmp(&p, &q) {
                Ordering::Equal => None,
                Ordering::Greater => Some(Self { lead: p, tail: Some(q) }),
                Ordering::Less => Some(Self { lead: q, tail: Some(p) }),
            },
        }
    }

    /// Difference of two optional monomials, `None` meaning zero.
    fn difference(p: Option<Monomial>, q: Option<Monomial>, order: &OrderSpec) -> Option<Self> {
        match (p, q) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(Self::monomial(m)),
            (Some(p), Some(q)) => Self::oriented(p, Some(q), order),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self { lead: m, tail: None }
    }

    /// `f_w = x^{w+} - x^{w-}`, replaced by `f_{-w}` when `x^{w-}` is larger.
    pub fn from_lattice_vector(w: &[i64], order: &OrderSpec) -> Option<Self> {
        let plus = Monomial::new(w.iter().map(|&x| x.max(0) as u64).collect());
        let minus = Monomial::new(w.iter().map(|&x| (-x).max(0) as u64).collect());
        Self::oriented(plus, Some(minus), order)
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> Option<&Monomial> {
        self.tail.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.tail.is_none()
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    /// The exponent vector `lead - tail`; for a monomial element, `None`.
    pub fn exponent_vector(&self) -> Option<Vec<i64>> {
        let tail = self.tail.as_ref()?;
        Some(
            self.lead
                .exps()
                .iter()
                .zip(tail.exps())
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect(),
        )
    }

    /// True when lead and tail have the same weighted degree.
    pub fn is_homogeneous(&self, weights: &[u64]) -> Result<bool> {
        match &self.tail {
            None => Ok(true),
            Some(t) => Ok(self.lead.weighted_degree(weights)? == t.weighted_degree(weights)?),
        }
    }

    /// Divides both monomials by their common factor.
    pub fn cancel_common_factor(&self) -> Self {
        match &self.tail {
            None => self.clone(),
            Some(t) => {
                let g = self.lead.gcd(t);
                Self {
                    lead: self.lead.div(&g).unwrap(),
                    tail: Some(t.div(&g).unwrap()),
                }
            }
        }
    }

    /// Divides by the largest power of `var` dividing both terms.
    pub fn divide_out_variable(&self, var: usize) -> Self {
        let e = match &self.tail {
            None => self.lead.exponent(var),
            Some(t) => self.lead.exponent(var).min(t.exponent(var)),
        };
        if e == 0 {
            return self.clone();
        }
        let d = Monomial::var_power(self.nvars(), var, e);
        Self {
            lead: self.lead.div(&d).unwrap(),
            tail: self.tail.as_ref().map(|t| t.div(&d).unwrap()),
        }
    }

    /// Re-orients under another order.
    pub fn reoriented(&self, order: &OrderSpec) -> Option<Self> {
        Self::oriented(self.lead.clone(), self.tail.clone(), order)
    }

    /// `self - m g`, given that `lead(g) * m = lead(self)`.
    fn reduce_lead(&self, m: &Monomial, g: &PureDifference, order: &OrderSpec) -> Option<Self> {
        // (L - T) - m (Lg - Tg) = m Tg - T
        let p = g.tail.as_ref().map(|t| t.mul(m));
        Self::difference(p, self.tail.clone(), order)
    }

    pub fn format(&self, names: &VarNames) -> String {
        match &self.tail {
            None => names.format(&self.lead),
            Some(t) => format!("{} - {}", names.format(&self.lead), names.format(t)),
        }
    }

    /// Parses `lead - tail` or a single monomial, then orients.
    pub fn parse(s: &str, names: &VarNames, order: &OrderSpec) -> Result<Option<Self>> {
        match s.split_once('-') {
            None => Ok(Some(Self::monomial(names.parse(s)?))),
            Some((a, b)) => Ok(Self::oriented(names.parse(a)?, Some(names.parse(b)?), order)),
        }
    }

    pub fn to_json(&self, names: &VarNames) -> ElementJson {
        ElementJson {
            lead: names.format(&self.lead),
            tail: self.tail.as_ref().map(|t| names.format(t)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementJson {
    pub lead: String,
    pub tail: Option<String>,
}

/// `(lcm/lead_f) f - (lcm/lead_g) g`.
pub fn s_pair(f: &PureDifference, g: &PureDifference, order: &OrderSpec) -> Option<PureDifference> {
    let l = f.lead.lcm(&g.lead);
    let mf = l.div(&f.lead).unwrap();
    let mg = l.div(&g.lead).unwrap();
    // the leading terms cancel: mg Tg - mf Tf
    let p = g.tail.as_ref().map(|t| t.mul(&mg));
    let q = f.tail.as_ref().map(|t| t.mul(&mf));
    PureDifference::difference(p, q, order)
}

fn find_reducer<'a>(m: &Monomial, basis: &'a [PureDifference]) -> Option<(&'a PureDifference, Monomial)> {
    basis
        .iter()
        .find_map(|g| m.div(&g.lead).map(|q| (g, q)))
}

/// Reduces the lead until no element of `basis` divides it.
pub fn top_reduce(f: &PureDifference, basis: &[PureDifference], order: &OrderSpec) -> Option<PureDifference> {
    let mut cur = f.clone();
    while let Some((g, q)) = find_reducer(&cur.lead, basis) {
        cur = cur.reduce_lead(&q, g, order)?;
    }
    Some(cur)
}

/// Reduces the tail of an element whose lead is already fixed.
pub fn reduce_tail(f: &PureDifference, basis: &[PureDifference]) -> PureDifference {
    let mut tail = f.tail.clone();
    while let Some(t) = &tail {
        match find_reducer(t, basis) {
            // L - q Lg  ==  L - q Tg  modulo g
            Some((g, q)) => tail = g.tail.as_ref().map(|gt| gt.mul(&q)),
            None => break,
        }
    }
    PureDifference {
        lead: f.lead.clone(),
        tail,
    }
}

/// Full normal form: no monomial of the result is divisible by a lead of
/// `basis`. The first divisor in `basis` order is always used.
pub fn normal_form(f: &PureDifference, basis: &[PureDifference], order: &OrderSpec) -> Option<PureDifference> {
    top_reduce(f, basis, order).map(|r| reduce_tail(&r, basis))
}

/// Multiplies the tail by `x_0^{deg lead - deg tail}`, appending the `x_0`
/// slot to both monomials.
pub fn homogenize(f: &PureDifference) -> Result<PureDifference> {
    let lead = f.lead.with_appended(0);
    let tail = match &f.tail {
        None => None,
        Some(t) => {
            let (dl, dt) = (f.lead.degree(), t.degree());
            if dt > dl {
                return Err(Error::TailLarger(format!("{:?}", f)));
            }
            Some(t.with_appended(dl - dt))
        }
    };
    Ok(PureDifference { lead, tail })
}
