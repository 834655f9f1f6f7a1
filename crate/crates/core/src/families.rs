//! Named families of sequences with known bases and verdicts.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::binomial::PureDifference;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, OrderSpec};
use crate::sequences::Sequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Bresinsky,
    Arslan,
    Prop31,
    Shifted,
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyName::Bresinsky => "bresinsky",
            FamilyName::Arslan => "arslan",
            FamilyName::Prop31 => "prop31",
            FamilyName::Shifted => "shifted",
        })
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bresinsky" => Ok(FamilyName::Bresinsky),
            "arslan" => Ok(FamilyName::Arslan),
            "prop31" => Ok(FamilyName::Prop31),
            "shifted" => Ok(FamilyName::Shifted),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "unknown family (bresinsky, arslan, prop31, shifted)".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub name: FamilyName,
    /// `h` for the named families, the shift `k` for `shifted`.
    pub parameter: u64,
    pub sequence: Sequence,
    /// The reduced basis of `I(a)`, sorted like the engine's output.
    pub expected_gb: Option<Vec<PureDifference>>,
    pub expected_verdict: Option<bool>,
    /// A published generating set of `I(a)`.
    pub known_generators: Vec<PureDifference>,
    /// An element known to lie in `I(a)`.
    pub member: Option<PureDifference>,
    /// Generators of `I(a')` when known.
    pub dual_generators: Option<Vec<PureDifference>>,
}

fn mono(e: &[u64]) -> Monomial {
    Monomial::new(e.to_vec())
}

fn binom(p: &[u64], q: &[u64], order: &OrderSpec) -> PureDifference {
    PureDifference::oriented(mono(p), Some(mono(q)), order).expect("distinct monomials")
}

fn sorted(mut gens: Vec<PureDifference>, order: &OrderSpec) -> Vec<PureDifference> {
    gens.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    gens
}

fn check_h(h: u64) -> Result<()> {
    if h < 2 {
        return Err(Error::Parse {
            input: h.to_string(),
            reason: "family parameter h must be at least 2".into(),
        });
    }
    Ok(())
}

fn sequence_of(entries: [u64; 4]) -> Result<Sequence> {
    let raw = entries
        .iter()
        .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow("family")))
        .collect::<Result<Vec<_>>>()?;
    Sequence::validate(&raw)
}

/// `B_h = <(2h-1)2h, (2h-1)(2h+1), 2h(2h+1), 2h(2h+1)+2h-1>`; never ACM.
pub fn bresinsky(h: u64) -> Result<FamilyInstance> {
    check_h(h)?;
    let sequence = sequence_of([
        (2 * h - 1) * 2 * h,
        (2 * h - 1) * (2 * h + 1),
        2 * h * (2 * h + 1),
        2 * h * (2 * h + 1) + 2 * h - 1,
    ])?;
    let o = OrderSpec::revlex(4);
    let mut known = vec![binom(&[1, 0, 0, 1], &[0, 1, 1, 0], &o)];
    for i in 1..=2 * h {
        known.push(binom(&[0, 0, i - 1, 2 * h - i], &[i + 1, 2 * h - i, 0, 0], &o));
    }
    for j in 0..=2 * h - 2 {
        known.push(binom(&[2 * h + 1 - j, 0, j, 0], &[0, 2 * h - j, 0, j], &o));
    }
    let member = binom(&[1, 2 * h - 1, 0, 1], &[0, 0, 2 * h, 0], &o);
    Ok(FamilyInstance {
        name: FamilyName::Bresinsky,
        parameter: h,
        sequence,
        expected_gb: None,
        expected_verdict: Some(false),
        known_generators: known,
        member: Some(member),
        dual_generators: None,
    })
}

/// `A_h = <h(h+1), h(h+1)+1, (h+1)^2, (h+1)^2+1>`; always ACM, with a
/// reduced basis of `2h + 3` binomials.
pub fn arslan(h: u64) -> Result<FamilyInstance> {
    check_h(h)?;
    let sequence = sequence_of([h * (h + 1), h * (h + 1) + 1, (h + 1) * (h + 1), (h + 1) * (h + 1) + 1])?;
    let o = OrderSpec::revlex(4);
    let mut gb = Vec::new();
    for i in 0..=h {
        // g_i = x^{h-i} z^{i+1} - y^{h-i+1} t^i
        gb.push(binom(&[h - i, 0, i + 1, 0], &[0, h - i + 1, 0, i], &o));
    }
    for i in 0..=h {
        // f_i = x^{i+1} y^{h-i} - z^i t^{h-i}
        gb.push(binom(&[i + 1, h - i, 0, 0], &[0, 0, i, h - i], &o));
    }
    gb.push(binom(&[1, 0, 0, 1], &[0, 1, 1, 0], &o));
    let mut known: Vec<PureDifference> = gb[..h as usize].to_vec();
    known.extend(gb[h as usize + 1..].iter().cloned());
    Ok(FamilyInstance {
        name: FamilyName::Arslan,
        parameter: h,
        sequence,
        expected_gb: Some(sorted(gb, &o)),
        expected_verdict: Some(true),
        known_generators: known,
        member: None,
        dual_generators: None,
    })
}

/// `a = 4, 6h+1, 6h+7`, whose initial ideal needs `h + 2` generators.
pub fn prop31(h: u64) -> Result<FamilyInstance> {
    check_h(h)?;
    let raw = [4, 6 * h as i64 + 1, 6 * h as i64 + 7];
    let sequence = Sequence::validate(&raw)?;
    let o = OrderSpec::revlex(3);
    let f1 = binom(&[3 * h + 2, 0, 0], &[0, 1, 1], &o);
    let f3 = binom(&[3, 2, 0], &[0, 0, 2], &o);
    let mut gb = vec![f1.clone()];
    for i in 1..=h {
        gb.push(binom(&[3 * (h - i) + 2, 0, 2 * i - 1], &[0, 2 * i + 1, 0], &o));
    }
    gb.push(f3.clone());
    let g1 = gb[1].clone();
    let dual = vec![
        binom(&[0, 2 * h + 1, 0], &[2, 0, 0], &o),
        binom(&[3, 2, 0], &[0, 0, 3], &o),
    ];
    Ok(FamilyInstance {
        name: FamilyName::Prop31,
        parameter: h,
        sequence,
        expected_gb: Some(sorted(gb, &o)),
        expected_verdict: Some(false),
        known_generators: vec![f1, f3, g1],
        member: None,
        dual_generators: Some(dual),
    })
}

/// `(a_1 + k, ..., a_n + k)`; `k = 0` gives the input back.
pub fn shifted(a: &Sequence, k: u64) -> Result<FamilyInstance> {
    Ok(FamilyInstance {
        name: FamilyName::Shifted,
        parameter: k,
        sequence: a.shifted(k)?,
        expected_gb: None,
        expected_verdict: None,
        known_generators: Vec::new(),
        member: None,
        dual_generators: None,
    })
}

/// Instance of a named family; `shifted` needs a base sequence.
pub fn instance(name: FamilyName, parameter: u64, base: Option<&Sequence>) -> Result<FamilyInstance> {
    match name {
        FamilyName::Bresinsky => bresinsky(parameter),
        FamilyName::Arslan => arslan(parameter),
        FamilyName::Prop31 => prop31(parameter),
        FamilyName::Shifted => {
            let base = base.ok_or_else(|| Error::Parse {
                input: "shifted".into(),
                reason: "the shifted family needs a base sequence".into(),
            })?;
            shifted(base, parameter)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::interreduce;
    use crate::monomial::VarNames;
    use crate::toric::toric_gb;

    #[test]
    fn sequences() {
        assert_eq!(bresinsky(2).unwrap().sequence.entries(), &[12, 15, 20, 23]);
        assert_eq!(bresinsky(3).unwrap().sequence.entries(), &[30, 35, 42, 47]);
        assert_eq!(arslan(2).unwrap().sequence.entries(), &[6, 7, 9, 10]);
        assert_eq!(arslan(3).unwrap().sequence.entries(), &[12, 13, 16, 17]);
        assert_eq!(prop31(2).unwrap().sequence.entries(), &[4, 13, 19]);
        assert!(bresinsky(1).is_err());
    }

    #[test]
    fn expected_sizes() {
        assert_eq!(arslan(2).unwrap().expected_gb.unwrap().len(), 7);
        assert_eq!(arslan(3).unwrap().expected_gb.unwrap().len(), 9);
        assert_eq!(prop31(2).unwrap().expected_gb.unwrap().len(), 4);
        assert_eq!(prop31(5).unwrap().expected_gb.unwrap().len(), 7);
        assert_eq!(bresinsky(2).unwrap().known_generators.len(), 1 + 4 + 3);
    }

    #[test]
    fn prop31_expected_basis_for_h2() {
        let inst = prop31(2).unwrap();
        let names = VarNames::new(3, false);
        let got: Vec<String> = inst.expected_gb.unwrap().iter().map(|f| f.format(&names)).collect();
        assert_eq!(got, ["y^5 - x^2*z^3", "x^3*y^2 - z^2", "x^5*z - y^3", "x^8 - y*z"]);
    }

    #[test]
    fn known_generators_lie_in_the_ideal() {
        for inst in [bresinsky(2).unwrap(), arslan(2).unwrap(), prop31(3).unwrap()] {
            let gb = toric_gb(&inst.sequence).unwrap();
            for f in &inst.known_generators {
                assert!(f.is_homogeneous(inst.sequence.entries()).unwrap());
                assert!(gb.contains(f));
            }
        }
    }

    #[test]
    fn expected_gb_is_already_reduced() {
        let inst = arslan(3).unwrap();
        let gb = toric_gb(&inst.sequence).unwrap();
        let again = interreduce(&gb);
        assert_eq!(again.elements(), inst.expected_gb.unwrap().as_slice());
    }

    #[test]
    fn shifts() {
        let a = Sequence::parse("4,13,19").unwrap();
        assert_eq!(shifted(&a, 0).unwrap().sequence, a);
        assert_eq!(shifted(&a, 1).unwrap().sequence.entries(), &[5, 14, 20]);
        assert!(shifted(&a, 2).is_err()); // 6, 15, 21 share the factor 3
        assert!(instance(FamilyName::Shifted, 1, None).is_err());
        assert_eq!("arslan".parse::<FamilyName>().unwrap(), FamilyName::Arslan);
        assert!("nope".parse::<FamilyName>().is_err());
    }
}
