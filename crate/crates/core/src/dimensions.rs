//! Closed-form dimensions and brute-force kernel oracles.

use std::collections::HashMap;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::{apply_dirac, apply_upz, apply_upzd};
use crate::poly::{monomial_basis, monomial_count, exponent_vectors, Monomial, SpaceDescriptor, SpinorPolynomial};
use crate::scalar::{binomial, exact_rank, rational_to_u64, GaussianRational, Matrix, Rational};
use crate::fock::SpinorIndex;

/// Default monomial budget for the brute-force oracles.
pub const DEFAULT_BUDGET: usize = 5000;

fn binom_q(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as u64, k as u64).into())
}

fn frac(num: usize, den: usize) -> Rational {
    Rational::new((num as i64).into(), (den as i64).into())
}

fn to_u64(r: Rational) -> u64 {
    rational_to_u64(&r).expect("dimension formulas yield nonnegative integers")
}

/// `dim M^{(r)}_{a,b}(C^n)`.
pub fn dim_m(d: &SpaceDescriptor) -> u64 {
    let SpaceDescriptor { n, a, b, r } = *d;
    if r == 0 {
        return if a == 0 { binomial((n + b - 1) as u64, b as u64).to_u64().unwrap_or(u64::MAX) } else { 0 };
    }
    if r == n {
        return if b == 0 { binomial((n + a - 1) as u64, a as u64).to_u64().unwrap_or(u64::MAX) } else { 0 };
    }
    let v = frac(r * (a + b + n), (a + r) * (b + n - r))
        * binom_q(n - 1, r)
        * binom_q(a + n - 1, a)
        * binom_q(b + n - 1, b);
    to_u64(v)
}

/// `dim A^{(r)}_{a,b}`: initial data of the first kind for target dimension `n`.
pub fn dim_a(d: &SpaceDescriptor) -> u64 {
    let SpaceDescriptor { n, a, b, r } = *d;
    if n < 2 {
        return 0;
    }
    if r == 0 {
        return dim_m(&SpaceDescriptor { n: n - 1, a, b, r: 0 });
    }
    if r == n {
        return 0;
    }
    let v = frac(r, a + r) * binom_q(n - 1, r) * binom_q(a + n - 1, a) * binom_q(b + n - 2, b);
    to_u64(v)
}

/// `dim B^{(r)}_{a,b}`: initial data of the second kind for target dimension `n`.
pub fn dim_b(d: &SpaceDescriptor) -> u64 {
    let SpaceDescriptor { n, a, b, r } = *d;
    if n < 2 || r == 0 {
        return 0;
    }
    if r == n {
        return dim_m(&SpaceDescriptor { n: n - 1, a, b, r: n - 1 });
    }
    let v = frac(r, b + n - r) * binom_q(n - 1, r) * binom_q(a + n - 2, a) * binom_q(b + n - 1, b);
    to_u64(v)
}

/// `Σ_j dim A_{a,b-j} + Σ_i dim B_{a-i,b}`.
pub fn initial_data_total(d: &SpaceDescriptor) -> u64 {
    let a_sum: u64 = (0..=d.b).map(|j| dim_a(&SpaceDescriptor { b: d.b - j, ..*d })).sum();
    let b_sum: u64 = (0..=d.a).map(|i| dim_b(&SpaceDescriptor { a: d.a - i, ..*d })).sum();
    a_sum + b_sum
}

/// `dim M_k(R^{2n}, S_n) = 2^n C(k+2n-2, 2n-2)`.
pub fn dim_monogenic(n: usize, k: usize) -> u64 {
    let c = binomial((k + 2 * n - 2) as u64, (2 * n - 2) as u64).to_u64().unwrap_or(u64::MAX);
    c.saturating_mul(1u64 << n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub descriptor: SpaceDescriptor,
    pub formula_dim: u64,
    pub oracle_dim: Option<u64>,
    pub initial_data_total: Option<u64>,
}

impl DimReport {
    pub fn new(d: SpaceDescriptor, oracle_budget: Option<usize>) -> Result<Self> {
        let oracle_dim = match oracle_budget {
            Some(budget) => Some(kernel_dim_oracle(&d, budget)?),
            None => None,
        };
        let initial_data_total = (d.n >= 2 && d.r > 0 && d.r < d.n).then(|| initial_data_total(&d));
        Ok(Self { descriptor: d, formula_dim: dim_m(&d), oracle_dim, initial_data_total })
    }

    pub fn consistent(&self) -> bool {
        self.oracle_dim.is_none_or(|o| o == self.formula_dim)
            && self.initial_data_total.is_none_or(|t| t == self.formula_dim)
    }
}

/// Dimension of the joint kernel of `ops` on the span of `basis`.
fn kernel_dim(
    basis: &[Monomial],
    n: usize,
    ops: &[fn(&SpinorPolynomial) -> Result<SpinorPolynomial>],
) -> Result<u64> {
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, GaussianRational)>> = Vec::with_capacity(basis.len());
    for m in basis {
        let p = SpinorPolynomial::from_terms(n, [(m.clone(), GaussianRational::from_int(1))])?;
        let mut row = Vec::new();
        for (k, op) in ops.iter().enumerate() {
            for (m2, c) in op(&p)?.terms() {
                let next = index.len();
                let col = *index.entry((k, m2.clone())).or_insert(next);
                row.push((col, c.clone()));
            }
        }
        rows.push(row);
    }
    let width = index.len();
    let matrix: Matrix = rows
        .into_iter()
        .map(|entries| {
            let mut row = vec![GaussianRational::zero(); width];
            for (col, c) in entries {
                row[col] = c;
            }
            row
        })
        .collect();
    let rank = if width == 0 { 0 } else { exact_rank(&matrix) };
    Ok((basis.len() - rank) as u64)
}

/// Joint kernel of `upz` and `upzd` on `P^{(r)}_{a,b}(C^n)`, by exact rank.
pub fn kernel_dim_oracle(d: &SpaceDescriptor, budget: usize) -> Result<u64> {
    let needed = monomial_count(d);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    kernel_dim(&monomial_basis(d), d.n, &[apply_upz, apply_upzd])
}

/// Kernel of the Euclidean Dirac operator on `S_n`-valued polynomials of
/// total degree `k`.
pub fn dirac_kernel_dim_oracle(n: usize, k: usize, budget: usize) -> Result<u64> {
    let states = SpinorIndex::all(n);
    let mut basis = Vec::new();
    for a in 0..=k {
        let zs = exponent_vectors(n, a as u32);
        let zbs = exponent_vectors(n, (k - a) as u32);
        for z in &zs {
            for zb in &zbs {
                for s in &states {
                    basis.push(Monomial { zexp: z.clone(), zbarexp: zb.clone(), spinor: *s });
                    if basis.len() > budget {
                        return Err(Error::BudgetExceeded { needed: basis.len(), budget });
                    }
                }
            }
        }
    }
    kernel_dim(&basis, n, &[apply_dirac])
}
