#![allow(dead_code)]

use std::collections::BTreeSet;

use hgt_core::scalar::rat;
use hgt_core::{GaussianRational, SpinorIndex, SpinorPolynomial};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(k: u32) -> u64 {
    (1..=k as u64).product()
}

/// All exponent vectors of length `n` with entry sum `d`, by recursion on the first entry.
pub fn compositions(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn inv_multi_factorial(alpha: &[u32]) -> GaussianRational {
    let den: u64 = alpha.iter().map(|&e| factorial(e)).product();
    GaussianRational::from_ratio(1, den as i64)
}

/// `z̄^α/α! I` for `|α| = b`.
pub fn antiholomorphic_display(n: usize, b: u32) -> Vec<SpinorPolynomial> {
    compositions(n, b)
        .into_iter()
        .map(|alpha| {
            let c = inv_multi_factorial(&alpha);
            SpinorPolynomial::monomial(vec![0; n], alpha, SpinorIndex::vacuum(n), c).unwrap()
        })
        .collect()
}

/// `z^α/α! f†_1 ⋯ f†_n I` for `|α| = a`.
pub fn holomorphic_display(n: usize, a: u32) -> Vec<SpinorPolynomial> {
    let top: Vec<usize> = (1..=n).collect();
    compositions(n, a)
        .into_iter()
        .map(|alpha| {
            let c = inv_multi_factorial(&alpha);
            SpinorPolynomial::monomial(alpha, vec![0; n], SpinorIndex::from_list(n, &top).unwrap(), c).unwrap()
        })
        .collect()
}

/// Every `μ` with `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{m-1} ≥ λ_m`.
pub fn interlacing(lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut current = Vec::new();
    fn go(lambda: &[i64], idx: usize, current: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
        if idx + 1 == lambda.len() {
            out.insert(current.clone());
            return;
        }
        for v in lambda[idx + 1]..=lambda[idx] {
            current.push(v);
            go(lambda, idx + 1, current, out);
            current.pop();
        }
    }
    go(lambda, 0, &mut current, &mut out);
    out
}

fn random_coeff(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re = rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    let im = rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    GaussianRational::new(re, im)
}

/// Random polynomial in `n` variables with every monomial of total degree
/// at most `max_deg` in `z` and in `z̄` separately.
pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> SpinorPolynomial {
    let mut p = SpinorPolynomial::zero(n);
    let terms = rng.gen_range(1..=6);
    for _ in 0..terms {
        let dz = rng.gen_range(0..=max_deg);
        let dzb = rng.gen_range(0..=max_deg);
        let zs = compositions(n, dz);
        let zbs = compositions(n, dzb);
        let z = zs[rng.gen_range(0..zs.len())].clone();
        let zb = zbs[rng.gen_range(0..zbs.len())].clone();
        let state: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        let m = SpinorPolynomial::monomial(z, zb, SpinorIndex::from_list(n, &state).unwrap(), random_coeff(rng)).unwrap();
        p = p.add(&m).unwrap();
    }
    p
}
