//! Branching check: component weights versus direct interlacing enumeration.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::ck::initial_data_decomposition;
use crate::error::Result;
use crate::gt::labels::{descriptor_weight, WeightVector};
use crate::poly::SpaceDescriptor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub descriptor: SpaceDescriptor,
    pub top_weight: WeightVector,
    /// Weights of nonzero components, in construction order.
    pub component_weights: Vec<WeightVector>,
    pub interlacing: Vec<WeightVector>,
    pub missing: Vec<WeightVector>,
    pub extra: Vec<WeightVector>,
    pub repeated: Vec<WeightVector>,
    /// `2 ≤ r ≤ n - 2`.
    pub generic: bool,
    pub grid_count: usize,
}

impl LatticeReport {
    pub fn sets_match(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.repeated.is_empty()
    }

    /// The grid count differs from the component count outside generic
    /// position; that is reported, not failed.
    pub fn grid_count_matches(&self) -> bool {
        self.component_weights.len() == self.grid_count
    }

    pub fn passed(&self) -> bool {
        self.sets_match() && (!self.generic || self.grid_count_matches())
    }
}

pub fn lattice_check(n: usize, a: usize, b: usize, r: usize) -> Result<LatticeReport> {
    let comps = initial_data_decomposition(n, a, b, r)?;
    let d = SpaceDescriptor::new(n, a, b, r)?;
    let top_weight = descriptor_weight(&d);
    let component_weights: Vec<WeightVector> = comps
        .iter()
        .filter(|c| !c.is_empty())
        .filter_map(|c| c.source.as_ref().map(descriptor_weight))
        .collect();
    let interlacing = top_weight.interlacing_below();

    let mut counts: BTreeMap<&WeightVector, usize> = BTreeMap::new();
    for w in &component_weights {
        *counts.entry(w).or_default() += 1;
    }
    let repeated = counts.iter().filter(|(_, &c)| c > 1).map(|(w, _)| (*w).clone()).collect();
    let missing = interlacing.iter().filter(|w| !counts.contains_key(w)).cloned().collect();
    let extra = counts.keys().filter(|w| !interlacing.contains(w)).map(|w| (*w).clone()).collect();

    Ok(LatticeReport {
        descriptor: d,
        top_weight,
        component_weights,
        interlacing,
        missing,
        extra,
        repeated,
        generic: r >= 2 && r + 2 <= n,
        grid_count: 2 * (a + 1) * (b + 1),
    })
}
