//! Orthogonal bases of spinor-valued spherical monogenics of degree `k`.

use serde::Serialize;

use crate::dimensions::dim_monogenic;
use crate::error::Result;
use crate::fischer::gram_entries;
use crate::gt::build::GtBuilder;
use crate::gt::labels::GtLabel;
use crate::operators::{is_hermitean_monogenic, is_monogenic, mul_zdvec, mul_zvec};
use crate::poly::{SpaceDescriptor, SpinorPolynomial};
use crate::scalar::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Origin {
    /// A member of a GT basis of `M^{(r)}_{a,k-a}`.
    Direct(SpaceDescriptor),
    /// `(z/(a+n-r) + z†/(k-1-a+r))` applied to a member of `M^{(r)}_{a,k-1-a}`.
    Embedded(SpaceDescriptor),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonogenicMember {
    pub origin: Origin,
    pub label: GtLabel,
    pub poly: SpinorPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonogenicBasis {
    pub n: usize,
    pub k: usize,
    pub members: Vec<MonogenicMember>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonogenicVerdict {
    pub count: usize,
    pub expected_count: u64,
    pub non_monogenic: usize,
    pub off_diagonal: usize,
    pub diagonal_positive: bool,
    /// Direct members that fail, or embedded members that pass, the
    /// Hermitean monogenicity test.
    pub hermitean_mismatch: usize,
}

impl MonogenicVerdict {
    pub fn passed(&self) -> bool {
        self.count as u64 == self.expected_count
            && self.non_monogenic == 0
            && self.off_diagonal == 0
            && self.diagonal_positive
            && self.hermitean_mismatch == 0
    }
}

fn frac(den: usize) -> GaussianRational {
    GaussianRational::from_ratio(1, den as i64)
}

pub fn monogenic_basis(n: usize, k: usize) -> Result<MonogenicBasis> {
    monogenic_basis_with(&mut GtBuilder::default(), n, k)
}

pub fn monogenic_basis_with(builder: &mut GtBuilder, n: usize, k: usize) -> Result<MonogenicBasis> {
    let mut members = Vec::new();
    for a in 0..=k {
        for r in 0..=n {
            let d = SpaceDescriptor::new(n, a, k - a, r)?;
            for m in builder.basis(&d)?.members {
                members.push(MonogenicMember { origin: Origin::Direct(d), label: m.label, poly: m.poly });
            }
        }
    }
    if k >= 1 {
        for a in 0..k {
            for r in 1..n {
                let d = SpaceDescriptor::new(n, a, k - 1 - a, r)?;
                let cz = frac(a + n - r);
                let czd = frac(k - 1 - a + r);
                for m in builder.basis(&d)?.members {
                    let poly = mul_zvec(&m.poly)?.scale(&cz).add(&mul_zdvec(&m.poly)?.scale(&czd))?;
                    members.push(MonogenicMember { origin: Origin::Embedded(d), label: m.label, poly });
                }
            }
        }
    }
    Ok(MonogenicBasis { n, k, members })
}

impl MonogenicBasis {
    pub fn polys(&self) -> Vec<SpinorPolynomial> {
        self.members.iter().map(|m| m.poly.clone()).collect()
    }

    pub fn verify(&self) -> Result<MonogenicVerdict> {
        let mut non_monogenic = 0;
        let mut hermitean_mismatch = 0;
        for m in &self.members {
            if m.poly.is_zero() || !is_monogenic(&m.poly)? {
                non_monogenic += 1;
            }
            let h = is_hermitean_monogenic(&m.poly)?;
            if h != matches!(m.origin, Origin::Direct(_)) {
                hermitean_mismatch += 1;
            }
        }
        let gram = gram_entries(&self.polys())?;
        let off_diagonal = gram
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().filter(|(j, v)| *j != i && !num_traits::Zero::is_zero(*v)).count())
            .sum::<usize>()
            / 2;
        let diagonal_positive = gram
            .iter()
            .enumerate()
            .all(|(i, row)| row[i].is_real() && num_traits::Signed::is_positive(&row[i].re));
        Ok(MonogenicVerdict {
            count: self.members.len(),
            expected_count: dim_monogenic(self.n, self.k),
            non_monogenic,
            off_diagonal,
            diagonal_positive,
            hermitean_mismatch,
        })
    }
}
