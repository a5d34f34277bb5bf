//! Restriction checks for CK extensions of complete initial data built
//! from lower-dimensional GT bases.

use serde::Serialize;

use crate::ck::{ck_extend, decomposition_unchecked, DataSlot, InitialDataSet, InitialDatum};
use crate::error::Result;
use crate::gt::build::GtBuilder;
use crate::operators::is_hermitean_monogenic;
use crate::poly::{SpaceDescriptor, SpinorPolynomial};
use crate::scalar::{exact_rank, rat_int, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub descriptor: SpaceDescriptor,
    /// Number of basis data across all slots.
    pub data_count: usize,
    /// Exact rank of their CK images.
    pub image_rank: usize,
    pub hermitean_monogenic: bool,
    pub failures: Vec<String>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.hermitean_monogenic && self.image_rank == self.data_count
    }
}

/// Deterministic nonzero Gaussian weight for the `t`-th datum.
fn weight(t: usize) -> GaussianRational {
    GaussianRational::new(rat_int((t % 5) as i64 + 1), rat_int((t % 3) as i64 - 1))
}

/// Basis data of every slot, and one generic complete data set assembled
/// from them.
pub fn ck_roundtrip_with(builder: &mut GtBuilder, d: &SpaceDescriptor) -> Result<RoundtripReport> {
    let n = d.n;
    let lower = n - 1;
    let mut set = InitialDataSet {
        target: *d,
        p0: vec![SpinorPolynomial::zero(lower); d.b + 1],
        p1: vec![SpinorPolynomial::zero(lower); d.a + 1],
    };
    let mut images = Vec::new();
    let mut t = 0;
    for comp in decomposition_unchecked(d) {
        let Some(source) = comp.source.filter(|_| !comp.is_empty()) else {
            continue;
        };
        for m in builder.basis(&source)?.members {
            let payload = comp.factor.apply(&m.poly)?;
            if payload.is_zero() {
                continue;
            }
            let datum = InitialDatum::new(comp.slot, *d, payload.clone())?;
            images.push(ck_extend(&datum)?);
            let w = weight(t);
            t += 1;
            match comp.slot {
                DataSlot::A { j } => set.p0[j].add_scaled(&payload, &w)?,
                DataSlot::B { i } => set.p1[i].add_scaled(&payload, &w)?,
            }
        }
    }
    let m = set.extend()?;
    let failures = set.restriction_failures(&m)?;
    Ok(RoundtripReport {
        descriptor: *d,
        data_count: images.len(),
        image_rank: rank_of(&images),
        hermitean_monogenic: is_hermitean_monogenic(&m)?,
        failures,
    })
}

pub fn ck_roundtrip(n: usize, a: usize, b: usize, r: usize) -> Result<RoundtripReport> {
    ck_roundtrip_with(&mut GtBuilder::default(), &SpaceDescriptor::new(n, a, b, r)?)
}

/// Exact rank of a list of polynomials viewed as coefficient vectors.
pub fn rank_of(polys: &[SpinorPolynomial]) -> usize {
    let mut index = std::collections::HashMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    if index.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<GaussianRational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![GaussianRational::from_int(0); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    exact_rank(&rows)
}
