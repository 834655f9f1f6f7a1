//! Input sequences, their duals, the involution `sigma`, and the lattice
//! `L(a) = { w : <w, a> = 0 }`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::integer_kernel;

/// A sequence `a_1, ..., a_n` of distinct positive integers with gcd one and
/// `a_n` the strict maximum, stored in the given order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    entries: Vec<u64>,
}

impl Serialize for Sequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Sequence {
    pub fn validate(raw: &[i64]) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::TooShort(raw.len()));
        }
        let mut entries = Vec::with_capacity(raw.len());
        for (index, &value) in raw.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositive { index, value });
            }
            entries.push(value as u64);
        }
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotDistinct(w[0]));
        }
        let last = *entries.last().unwrap();
        let max = *sorted.last().unwrap();
        if last != max {
            return Err(Error::MaxNotLast { last, max });
        }
        let g = entries.iter().fold(0, |g, &x| gcd(g, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        Ok(Self { entries })
    }

    /// Parses a comma-separated list such as `4,13,19`.
    pub fn parse(s: &str) -> Result<Self> {
        let raw = s
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{t:?} is not an integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::validate(&raw)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The largest entry `a_n`.
    pub fn modulus(&self) -> u64 {
        *self.entries.last().unwrap()
    }

    /// `(a_n - a_1, ..., a_n - a_{n-1}, a_n)`.
    pub fn dual(&self) -> Sequence {
        let an = self.modulus();
        let mut entries: Vec<u64> = self.entries[..self.len() - 1].iter().map(|&a| an - a).collect();
        entries.push(an);
        Sequence { entries }
    }

    /// `<w, a>` with overflow checking.
    pub fn pairing(&self, w: &[i64]) -> Result<i64> {
        if w.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: w.len(),
            });
        }
        w.iter().zip(&self.entries).try_fold(0i64, |acc, (&wi, &ai)| {
            i64::try_from(ai)
                .ok()
                .and_then(|ai| wi.checked_mul(ai))
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("pairing"))
        })
    }

    /// Shifts every entry by `k`; the result is revalidated.
    pub fn shifted(&self, k: u64) -> Result<Sequence> {
        let raw = self
            .entries
            .iter()
            .map(|&a| {
                a.checked_add(k)
                    .and_then(|v| i64::try_from(v).ok())
                    .ok_or(Error::Overflow("shift"))
            })
            .collect::<Result<Vec<_>>>()?;
        Sequence::validate(&raw)
    }

    /// The `2 x (n+1)` matrix whose columns are the exponents of
    /// `x_0 -> s^{a_n}` and `x_i -> t^{a_i} s^{a_n - a_i}`.
    pub fn homogenizing_matrix(&self) -> [Vec<i64>; 2] {
        let an = self.modulus() as i64;
        let mut top = vec![0];
        let mut bottom = vec![an];
        for &a in &self.entries {
            top.push(a as i64);
            bottom.push(an - a as i64);
        }
        [top, bottom]
    }
}

/// A vector in `Z^n`, typically a member of `L(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn positive_part(&self) -> Vec<u64> {
        self.0.iter().map(|&x| x.max(0) as u64).collect()
    }

    pub fn negative_part(&self) -> Vec<u64> {
        self.0.iter().map(|&x| (-x).max(0) as u64).collect()
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| -x).collect())
    }
}

/// `sigma(w) = (w_1, ..., w_{n-1}, -sum w_i)`; an involution on `Z^n`.
pub fn sigma(w: &[i64]) -> Result<Vec<i64>> {
    let total = w
        .iter()
        .try_fold(0i64, |acc, &x| acc.checked_add(x))
        .and_then(i64::checked_neg)
        .ok_or(Error::Overflow("sigma"))?;
    let mut out = w.to_vec();
    if let Some(last) = out.last_mut() {
        *last = total;
    }
    Ok(out)
}

/// A basis of `L(a)` (rank `n - 1`).
pub fn lattice_kernel_basis(a: &Sequence) -> Result<Vec<LatticeVector>> {
    let row: Vec<i64> = a
        .entries()
        .iter()
        .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow("kernel")))
        .collect::<Result<_>>()?;
    Ok(integer_kernel(&[row], a.len())?
        .into_iter()
        .map(LatticeVector)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn validation() {
        assert!(Sequence::validate(&[4, 13, 19]).is_ok());
        assert!(Sequence::validate(&[12, 15, 20, 23]).is_ok());
        assert_eq!(Sequence::validate(&[2, 4]), Err(Error::GcdNotOne(2)));
        assert_eq!(Sequence::validate(&[3]), Err(Error::TooShort(1)));
        assert_eq!(Sequence::validate(&[3, 3, 5]), Err(Error::NotDistinct(3)));
        assert!(matches!(Sequence::validate(&[5, 3]), Err(Error::MaxNotLast { .. })));
        assert!(matches!(Sequence::validate(&[0, 3]), Err(Error::NonPositive { .. })));
        assert!(matches!(Sequence::validate(&[-1, 3]), Err(Error::NonPositive { .. })));
        // non-increasing prefix is allowed
        assert!(Sequence::validate(&[15, 6, 19]).is_ok());
        assert!(Sequence::parse("4, 13,19").is_ok());
        assert!(Sequence::parse("4,a").is_err());
    }

    #[test]
    fn duals() {
        let a = Sequence::parse("4,13,19").unwrap();
        assert_eq!(a.dual().entries(), &[15, 6, 19]);
        let b = Sequence::parse("3,4,5").unwrap();
        assert_eq!(b.dual().dual(), b);
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(&[-2, 5, -3]).unwrap(), vec![-2, 5, 0]);
        assert_eq!(sigma(&[8, -1, -1]).unwrap(), vec![8, -1, -6]);
        assert_eq!(sigma(&[0, 0, 0]).unwrap(), vec![0, 0, 0]);
        assert!(sigma(&[i64::MAX, 1]).is_err());
    }

    /// All w with entries in [-r, r] orthogonal to a.
    fn enumerate_lattice(a: &[u64], r: i64) -> Vec<Vec<i64>> {
        let n = a.len();
        let mut out = Vec::new();
        let mut w = vec![-r; n];
        loop {
            let s: i64 = w.iter().zip(a).map(|(x, &y)| x * y as i64).sum();
            if s == 0 {
                out.push(w.clone());
            }
            let mut i = 0;
            while i < n && w[i] == r {
                w[i] = -r;
                i += 1;
            }
            if i == n {
                return out;
            }
            w[i] += 1;
        }
    }

    /// Searches integer coefficients `c` with `w = sum c_j b_j`.
    fn in_integer_span(basis: &[Vec<i64>], w: &[i64]) -> bool {
        let k = basis.len();
        let bound = 12i64;
        let mut c = vec![-bound; k];
        loop {
            let v: Vec<i64> = (0..w.len())
                .map(|i| (0..k).map(|j| c[j] * basis[j][i]).sum())
                .collect();
            if v == w {
                return true;
            }
            let mut i = 0;
            while i < k && c[i] == bound {
                c[i] = -bound;
                i += 1;
            }
            if i == k {
                return false;
            }
            c[i] += 1;
        }
    }

    #[test]
    fn kernel_bases_span_small_lattice_vectors() {
        for s in ["2,3", "3,4,5", "4,13,19"] {
            let a = Sequence::parse(s).unwrap();
            let basis: Vec<Vec<i64>> = lattice_kernel_basis(&a).unwrap().into_iter().map(|v| v.0).collect();
            assert_eq!(basis.len(), a.len() - 1);
            for b in &basis {
                assert_eq!(a.pairing(b).unwrap(), 0);
            }
            for w in enumerate_lattice(a.entries(), 6) {
                assert!(in_integer_span(&basis, &w), "{s}: {w:?} not in span");
            }
        }
        let k = lattice_kernel_basis(&Sequence::parse("2,3").unwrap()).unwrap();
        assert!(k[0].0 == vec![3, -2] || k[0].0 == vec![-3, 2]);
    }

    #[test]
    fn sigma_maps_lattice_to_dual_lattice() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.gen_range(2..6);
            let an = rng.gen_range(n as i64 + 1..60);
            let mut raw: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(1..an)).collect();
            raw.push(an);
            let Ok(a) = Sequence::validate(&raw) else { continue };
            let basis = lattice_kernel_basis(&a).unwrap();
            let coeffs: Vec<i64> = basis.iter().map(|_| rng.gen_range(-5i64..=5)).collect();
            let w: Vec<i64> = (0..n)
                .map(|i| basis.iter().zip(&coeffs).map(|(b, c)| c * b.0[i]).sum())
                .collect();
            assert_eq!(a.pairing(&w).unwrap(), 0);
            let sw = sigma(&w).unwrap();
            assert_eq!(a.dual().pairing(&sw).unwrap(), 0);
            assert_eq!(sigma(&sw).unwrap(), w);
        }
    }

    proptest! {
        #[test]
        fn dual_is_valid_involution(raw in proptest::collection::vec(1i64..200, 1..6), top in 200i64..400) {
            let mut raw = raw;
            raw.push(top);
            if let Ok(a) = Sequence::validate(&raw) {
                let d = a.dual();
                let revalidated = Sequence::validate(&d.entries().iter().map(|&x| x as i64).collect::<Vec<_>>());
                prop_assert!(revalidated.is_ok());
                prop_assert_eq!(d.dual(), a);
            }
        }

        #[test]
        fn sigma_is_involution(w in proptest::collection::vec(-1000i64..1000, 1..7)) {
            prop_assert_eq!(sigma(&sigma(&w).unwrap()).unwrap(), w);
        }
    }
}
