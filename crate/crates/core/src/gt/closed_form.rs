//! Explicit basis of `M^{(1)}_{a,b}(C^2)`.

use crate::ck::initial_data_decomposition;
use crate::error::Result;
use crate::fock::SpinorIndex;
use crate::gt::build::{BasisFamily, BasisMember};
use crate::gt::labels::{descriptor_weight, GtLabel, PathStep};
use crate::poly::{Monomial, SpaceDescriptor, SpinorPolynomial};
use crate::scalar::{inv_factorial, GaussianRational};

fn push(p: &mut SpinorPolynomial, negative: bool, z2: i64, zb2: i64, z1: i64, zb1: i64, state: usize) {
    let w = [z2, zb2, z1, zb1].iter().fold(inv_factorial(0), |acc, &e| acc * inv_factorial(e as u64));
    let c = GaussianRational::real(if negative { -w } else { w });
    let m = Monomial {
        zexp: vec![z1 as u32, z2 as u32],
        zbarexp: vec![zb1 as u32, zb2 as u32],
        spinor: SpinorIndex::from_list(2, &[state]).expect("state in range"),
    };
    p.add_term(m, c);
}

/// `P_{(a+1,-b),(μ)}`; zero when `a < 0`, `b < 0` or `μ ∉ [-b, a+1]`.
pub fn closed_form_n2(a: i64, b: i64, mu: i64) -> SpinorPolynomial {
    let mut p = SpinorPolynomial::zero(2);
    if a < 0 || b < 0 || mu < -b || mu > a + 1 {
        return p;
    }
    if mu >= a + 1 - b {
        let j = mu - (a + 1 - b);
        for k in 0..=a.min(b - j) {
            push(&mut p, (b - j - k) % 2 == 1, k, k + j, a - k, b - j - k, 1);
        }
        for k in 0..=a.min(b - j - 1) {
            push(&mut p, (b - j - k - 1) % 2 == 1, k, k + j + 1, a - k, b - j - k - 1, 2);
        }
    } else {
        let i = a - b - mu;
        for k in 0..=(a - i).min(b) {
            push(&mut p, (b - k) % 2 == 1, k + i, k, a - i - k, b - k, 2);
        }
        for k in 0..=(a - i - 1).min(b) {
            push(&mut p, (b - k) % 2 == 1, k + i + 1, k, a - i - k - 1, b - k, 1);
        }
    }
    p
}

/// The closed forms for one `(a, b)`, labelled by the structural step whose
/// source weight is `(μ)` and ordered like the recursive family.
pub fn closed_form_family(a: usize, b: usize) -> Result<BasisFamily> {
    let d = SpaceDescriptor::new(2, a, b, 1)?;
    let mut members = Vec::new();
    for c in initial_data_decomposition(2, a, b, 1)? {
        let Some(source) = c.source.filter(|_| !c.is_empty()) else {
            continue;
        };
        let mu = descriptor_weight(&source).components()[0];
        let label = GtLabel::from_path(&d, vec![PathStep { slot: c.slot, kind: c.kind }])?;
        members.push(BasisMember { label, poly: closed_form_n2(a as i64, b as i64, mu) });
    }
    Ok(BasisFamily { descriptor: d, members })
}
