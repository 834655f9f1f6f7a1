//! Buchberger completion, inter-reduction and lattice saturation for ideals
//! generated by pure differences.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use serde::Serialize;

use crate::binomial::{normal_form, reduce_tail, s_pair, ElementJson, PureDifference};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, OrderSpec, VarNames};

pub const DEFAULT_BASIS_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<PureDifference>,
    order: OrderSpec,
    reduced: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderJson {
    pub kind: &'static str,
    pub variables: Vec<String>,
    pub homogenized: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisJson {
    pub order: OrderJson,
    pub elements: Vec<ElementJson>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[PureDifference] {
        &self.elements
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(PureDifference::lead)
    }

    /// Normal form of `f` against this basis; `None` means `f` is in the ideal.
    pub fn reduce(&self, f: &PureDifference) -> Option<PureDifference> {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &PureDifference) -> bool {
        self.reduce(f).is_none()
    }

    pub fn var_names(&self) -> VarNames {
        VarNames::for_order(&self.order)
    }

    /// One line per element, in basis order.
    pub fn format_lines(&self) -> Vec<String> {
        let names = self.var_names();
        self.elements.iter().map(|f| f.format(&names)).collect()
    }

    pub fn to_json(&self) -> BasisJson {
        let names = self.var_names();
        let variables = self
            .order
            .ranking()
            .iter()
            .map(|&v| names.format(&Monomial::var_power(names.nvars(), v, 1)))
            .collect();
        BasisJson {
            order: OrderJson {
                kind: "revlex",
                variables,
                homogenized: self.order.is_homogenized(),
            },
            elements: self.elements.iter().map(|f| f.to_json(&names)).collect(),
        }
    }
}

struct Pair {
    i: usize,
    j: usize,
}

/// Completes `gens` to a Gröbner basis.
///
/// Pairs are processed by increasing `grading` degree of their lcm (total
/// degree when `grading` is absent), then by the lcm under `order`, then by
/// creation index. The product criterion and Buchberger's chain criterion
/// discard pairs.
pub fn buchberger(gens: &[PureDifference], order: &OrderSpec, grading: Option<&[u64]>) -> Result<GroebnerBasis> {
    buchberger_with_cap(gens, order, grading, DEFAULT_BASIS_CAP)
}

pub fn buchberger_with_cap(
    gens: &[PureDifference],
    order: &OrderSpec,
    grading: Option<&[u64]>,
    cap: usize,
) -> Result<GroebnerBasis> {
    let nvars = order.nvars();
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: g.nvars(),
            });
        }
        if let Some(w) = grading {
            if !g.is_homogeneous(w)? {
                return Err(Error::NotHomogeneous(g.format(&VarNames::for_order(order))));
            }
        }
    }
    let grade = |m: &Monomial| -> Result<u64> {
        match grading {
            Some(w) => m.weighted_degree(w),
            None => Ok(m.degree()),
        }
    };

    let mut basis: Vec<PureDifference> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut queue = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |f: PureDifference,
                   basis: &mut Vec<PureDifference>,
                   pairs: &mut Vec<Pair>,
                   queue: &mut BinaryHeap<_>,
                   pending: &mut HashSet<(usize, usize)>|
     -> Result<()> {
        if basis.len() >= cap {
            return Err(Error::BasisCapExceeded(cap));
        }
        let j = basis.len();
        for (i, b) in basis.iter().enumerate() {
            let lcm = b.lead().lcm(f.lead());
            let key = (grade(&lcm)?, order.sort_key(&lcm), pairs.len());
            queue.push(Reverse(key));
            pairs.push(Pair { i, j });
            pending.insert((i, j));
        }
        basis.push(f);
        Ok(())
    };

    for g in gens {
        if let Some(r) = normal_form(g, &basis, order) {
            add(r, &mut basis, &mut pairs, &mut queue, &mut pending)?;
        }
    }

    while let Some(Reverse((_, _, idx))) = queue.pop() {
        let Pair { i, j } = pairs[idx];
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lead().is_coprime(fj.lead()) {
            continue;
        }
        let lcm = fi.lead().lcm(fj.lead());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let Some(s) = s_pair(fi, fj, order) else { continue };
        if let Some(r) = normal_form(&s, &basis, order) {
            add(r, &mut basis, &mut pairs, &mut queue, &mut pending)?;
        }
    }

    Ok(GroebnerBasis {
        elements: basis,
        order: order.clone(),
        reduced: false,
    })
}

/// The unique reduced Gröbner basis: minimal monic leads, no lead dividing
/// any other monomial, sorted by increasing lead.
pub fn interreduce(g: &GroebnerBasis) -> GroebnerBasis {
    let order = &g.order;
    let mut sorted: Vec<&PureDifference> = g.elements.iter().collect();
    sorted.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    let mut minimal: Vec<PureDifference> = Vec::new();
    for f in sorted {
        if !minimal.iter().any(|m| m.lead().divides(f.lead())) {
            minimal.push(f.clone());
        }
    }
    let elements = minimal.iter().map(|f| reduce_tail(f, &minimal)).collect();
    GroebnerBasis {
        elements,
        order: order.clone(),
        reduced: true,
    }
}

/// Reduced Gröbner basis in one call.
pub fn reduced_basis(gens: &[PureDifference], order: &OrderSpec, grading: Option<&[u64]>, cap: usize) -> Result<GroebnerBasis> {
    Ok(interreduce(&buchberger_with_cap(gens, order, grading, cap)?))
}

/// Generators of `(gens) : (x_1 ... x_n)^inf`.
///
/// For each variable in turn a Gröbner basis is computed for the weighted
/// revlex order with that variable last; dividing every element by its
/// largest power of the variable saturates with respect to it. Finally the
/// common factor of each binomial is cancelled.
pub fn saturate_all_variables(gens: &[PureDifference], grading: &[u64]) -> Result<Vec<PureDifference>> {
    saturate_with_cap(gens, grading, DEFAULT_BASIS_CAP)
}

pub fn saturate_with_cap(gens: &[PureDifference], grading: &[u64], cap: usize) -> Result<Vec<PureDifference>> {
    let n = grading.len();
    let mut current: Vec<PureDifference> = gens.to_vec();
    for var in 0..n {
        let order = OrderSpec::weighted_with_smallest(grading, var);
        let oriented: Vec<PureDifference> = current.iter().filter_map(|f| f.reoriented(&order)).collect();
        let gb = reduced_basis(&oriented, &order, Some(grading), cap)?;
        current = gb
            .elements()
            .iter()
            .map(|f| f.divide_out_variable(var))
            .collect();
    }
    let mut out: Vec<PureDifference> = Vec::new();
    for f in current.iter().map(PureDifference::cancel_common_factor) {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}
