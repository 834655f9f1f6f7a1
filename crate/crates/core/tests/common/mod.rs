#![allow(dead_code)]

use monocurve::sequences::gcd;
use monocurve::Sequence;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seq(entries: &[u64]) -> Sequence {
    let raw: Vec<i64> = entries.iter().map(|&x| x as i64).collect();
    Sequence::validate(&raw).unwrap()
}

/// All valid sequences with increasing entries and `a_n <= an_max`.
pub fn all_sequences(n: usize, an_max: u64) -> Vec<Sequence> {
    fn rec(prefix: &mut Vec<u64>, n: usize, an_max: u64, out: &mut Vec<Sequence>) {
        if prefix.len() == n {
            if prefix.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
                out.push(seq(prefix));
            }
            return;
        }
        let start = prefix.last().map_or(1, |&x| x + 1);
        for x in start..=an_max - (n - prefix.len() - 1) as u64 {
            prefix.push(x);
            rec(prefix, n, an_max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, an_max, &mut out);
    out
}

pub fn random_sequences(n: usize, an_max: u64, count: usize, seed: u64) -> Vec<Sequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let an = rng.gen_range(n as u64..=an_max);
        let mut e: Vec<u64> = sample(&mut rng, an as usize - 1, n - 1)
            .into_iter()
            .map(|i| i as u64 + 1)
            .collect();
        e.sort_unstable();
        e.push(an);
        if e.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            out.push(seq(&e));
        }
    }
    out
}

pub fn env_or(name: &str, default: u64) -> u64 {
    std::env::var(name).ok().and_then(|v| v.parse().ok()).unwrap_or(default)
}
