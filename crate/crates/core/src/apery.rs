//! Apéry sets of `H = <a_1, ..., a_n>` with respect to `a_n`, the map
//! `phi_a`, and the goodness test for `Ap(H, a_n)`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarNames};
use crate::sequences::Sequence;
use crate::toric::{initial_ideal, Engine, StandardMonomials};

/// Per-residue minima over representations by `a_1..a_{n-1}`: the smallest
/// value `nu_i` in each class mod `a_n`, together with the least number of
/// summands among representations of `nu_i`.
///
/// Dijkstra over `Z/a_n` with lexicographic `(value, parts)` distances.
fn residue_minima(a: &Sequence) -> Vec<(u64, u64)> {
    let an = a.modulus();
    let m = an as usize;
    let steps = &a.entries()[..a.len() - 1];
    let mut best: Vec<Option<(u64, u64)>> = vec![None; m];
    best[0] = Some((0, 0));
    let mut heap = BinaryHeap::from([Reverse((0u64, 0u64, 0usize))]);
    while let Some(Reverse((value, parts, r))) = heap.pop() {
        if best[r] != Some((value, parts)) {
            continue;
        }
        for &s in steps {
            let cand = (value + s, parts + 1);
            let next = ((r as u64 + s) % an) as usize;
            if best[next].is_none_or(|b| cand < b) {
                best[next] = Some(cand);
                heap.push(Reverse((cand.0, cand.1, next)));
            }
        }
    }
    best.into_iter()
        .map(|b| b.expect("gcd one makes every residue reachable"))
        .collect()
}

/// `Ap(H, a_n)` indexed by residue.
pub fn apery_set(a: &Sequence) -> Vec<u64> {
    residue_minima(a).into_iter().map(|(v, _)| v).collect()
}

/// `mu_i = min sum r_j (a_n - a_j)` over `sum r_j a_j = nu_i`, by residue.
pub fn mu_values(a: &Sequence) -> Vec<u64> {
    let an = a.modulus();
    residue_minima(a)
        .into_iter()
        .map(|(v, parts)| parts * an - v)
        .collect()
}

/// Whether `{mu_i}` equals `Ap(H', a_n)`.
pub fn cn_good(a: &Sequence) -> bool {
    let mut mu = mu_values(a);
    let mut dual = apery_set(&a.dual());
    mu.sort_unstable();
    dual.sort_unstable();
    mu == dual
}

/// The bijection `Ap(H, a_n) -> Mon(S / ini(x_n, I(a)))`, looked up by
/// `a`-degree.
#[derive(Clone, Debug)]
pub struct PhiIndex {
    by_degree: HashMap<u64, Monomial>,
}

impl PhiIndex {
    /// Indexes standard monomials of `ini(x_n, I(a))` by `a`-degree. Fails
    /// if two standard monomials share a degree.
    pub fn new(a: &Sequence, standard: &StandardMonomials) -> Result<Self> {
        let mut by_degree = HashMap::with_capacity(standard.len());
        for m in standard.monomials() {
            let d = m.weighted_degree(a.entries())?;
            if by_degree.insert(d, m.clone()).is_some() {
                return Err(Error::InternalInconsistency(format!(
                    "two standard monomials of a-degree {d}"
                )));
            }
        }
        Ok(Self { by_degree })
    }

    pub fn phi(&self, h: u64) -> Result<&Monomial> {
        self.by_degree.get(&h).ok_or(Error::NotInAperySet(h))
    }

    pub fn len(&self) -> usize {
        self.by_degree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_degree.is_empty()
    }
}

/// `phi_a(h)`: the revlex-smallest monomial of `a`-degree `h`.
pub fn phi(a: &Sequence, h: u64) -> Result<Monomial> {
    let engine = Engine::default();
    let gx = engine.gb_with_last_variable(a)?;
    let std = engine.standard_monomials(&initial_ideal(&gx), a.len())?;
    Ok(PhiIndex::new(a, &std)?.phi(h)?.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyRow {
    pub residue: u64,
    pub nu: u64,
    pub mu: u64,
    pub phi: Monomial,
    pub dual_deg: u64,
    pub in_dual_apery: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTable {
    modulus: u64,
    rows: Vec<AperyRow>,
    frobenius: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AperyRowJson {
    pub residue: u64,
    pub nu: u64,
    pub mu: u64,
    pub phi: String,
    pub dual_deg: u64,
    pub in_dual_apery: bool,
}

impl AperyTable {
    pub fn build(a: &Sequence, phi: &PhiIndex) -> Result<Self> {
        let modulus = a.modulus();
        let dual = a.dual();
        let dual_apery: HashSet<u64> = apery_set(&dual).into_iter().collect();
        let nu = apery_set(a);
        let mu = mu_values(a);
        let rows = (0..modulus as usize)
            .map(|i| {
                let m = phi.phi(nu[i])?.clone();
                let dual_deg = m.weighted_degree(dual.entries())?;
                Ok(AperyRow {
                    residue: i as u64,
                    nu: nu[i],
                    mu: mu[i],
                    phi: m,
                    dual_deg,
                    in_dual_apery: dual_apery.contains(&dual_deg),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let frobenius = *nu.iter().max().unwrap() as i64 - modulus as i64;
        Ok(Self { modulus, rows, frobenius })
    }

    pub fn compute(a: &Sequence) -> Result<Self> {
        let engine = Engine::default();
        let gx = engine.gb_with_last_variable(a)?;
        let std = engine.standard_monomials(&initial_ideal(&gx), a.len())?;
        Self::build(a, &PhiIndex::new(a, &std)?)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> &[AperyRow] {
        &self.rows
    }

    /// `max Ap(H, a_n) - a_n`.
    pub fn frobenius_number(&self) -> i64 {
        self.frobenius
    }

    pub fn to_json(&self, names: &VarNames) -> Vec<AperyRowJson> {
        self.rows
            .iter()
            .map(|r| AperyRowJson {
                residue: r.residue,
                nu: r.nu,
                mu: r.mu,
                phi: names.format(&r.phi),
                dual_deg: r.dual_deg,
                in_dual_apery: r.in_dual_apery,
            })
            .collect()
    }

    /// Header plus one tab-separated line per residue.
    pub fn to_tsv(&self, names: &VarNames) -> String {
        let mut out = String::from("residue\tnu\tmu\tphi\tdual_deg\tin_dual_apery\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                r.residue,
                r.nu,
                r.mu,
                names.format(&r.phi),
                r.dual_deg,
                r.in_dual_apery
            ));
        }
        out
    }
}
