//! Highest weights, interlacing and Gel'fand-Tsetlin labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ck::{decomposition_unchecked, ComponentKind, DataSlot};
use crate::error::{Error, Result};
use crate::poly::SpaceDescriptor;

/// Weakly decreasing integer vector, a highest weight for `U(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(components: Vec<i64>) -> Result<Self> {
        if components.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDescriptor(format!("weight {components:?} is not weakly decreasing")));
        }
        Ok(Self(components))
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `μ ≺ λ`: `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{m-1} ≥ λ_m`.
    pub fn interlaces(&self, lambda: &WeightVector) -> bool {
        let (mu, la) = (&self.0, &lambda.0);
        mu.len() + 1 == la.len() && mu.iter().enumerate().all(|(i, &m)| la[i] >= m && m >= la[i + 1])
    }

    /// Every `μ` with `μ ≺ self`, in lexicographically descending order.
    pub fn interlacing_below(&self) -> Vec<WeightVector> {
        let la = &self.0;
        if la.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Vec::new()];
        for i in 0..la.len() - 1 {
            let mut next = Vec::new();
            for prefix in &out {
                for v in (la[i + 1]..=la[i]).rev() {
                    let mut p: Vec<i64> = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(WeightVector).collect()
    }

    /// Copy with `delta` added to entry `index`, if the result is still
    /// weakly decreasing.
    pub fn shifted(&self, index: usize, delta: i64) -> Option<WeightVector> {
        let mut v = self.0.clone();
        *v.get_mut(index)? += delta;
        WeightVector::new(v).ok()
    }
}

impl TryFrom<Vec<i64>> for WeightVector {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<i64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Highest weight of `M^{(s)}_{a,b}(C^m)`.
pub fn weight_of(a: usize, b: usize, s: usize, m: usize) -> Result<WeightVector> {
    if m == 0 || s > m {
        return Err(Error::InvalidDescriptor(format!("grade {s} invalid for U({m})")));
    }
    let (a, b) = (a as i64, b as i64);
    let v = if s == 0 {
        let mut v = vec![0; m];
        v[m - 1] = -b;
        v
    } else if s == m {
        let mut v = vec![1; m];
        v[0] = a + 1;
        v
    } else {
        let mut v = Vec::with_capacity(m);
        v.push(a + 1);
        v.extend(std::iter::repeat_n(1, s - 1));
        v.extend(std::iter::repeat_n(0, m - s - 1));
        v.push(-b);
        v
    };
    WeightVector::new(v)
}

pub fn descriptor_weight(d: &SpaceDescriptor) -> WeightVector {
    weight_of(d.a, d.b, d.r, d.n).expect("validated descriptor")
}

/// Which data space and which component a member came from at one level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathStep {
    pub slot: DataSlot,
    pub kind: ComponentKind,
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.slot, self.kind)
    }
}

/// Descriptor of the space one level down reached through `step`.
pub fn step_source(target: &SpaceDescriptor, step: &PathStep) -> Option<SpaceDescriptor> {
    decomposition_unchecked(target)
        .into_iter()
        .find(|c| c.slot == step.slot && c.kind == step.kind)
        .and_then(|c| c.source)
}

/// Weight chain `λ^(n) ≻ … ≻ λ^(1)` plus the structural path (top level
/// first) that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GtLabel {
    pub chain: Vec<WeightVector>,
    pub path: Vec<PathStep>,
}

impl GtLabel {
    /// Label derived from a path; the chain is recomputed level by level.
    pub fn from_path(d: &SpaceDescriptor, path: Vec<PathStep>) -> Result<Self> {
        let chain = chain_from_path(d, &path)?;
        Ok(Self { chain, path })
    }

    /// Chain entries interlace and agree with the path.
    pub fn is_consistent(&self, d: &SpaceDescriptor) -> bool {
        let interlaced = self.chain.windows(2).all(|w| w[1].interlaces(&w[0]));
        interlaced && chain_from_path(d, &self.path).is_ok_and(|c| c == self.chain)
    }

    /// The level-`m` weight (`m = 1` is the bottom).
    pub fn level(&self, m: usize) -> Option<&WeightVector> {
        let n = self.chain.len();
        (1..=n).contains(&m).then(|| &self.chain[n - m])
    }

    pub fn path_string(&self) -> String {
        self.path.iter().map(PathStep::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for GtLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.chain {
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

pub fn chain_from_path(d: &SpaceDescriptor, path: &[PathStep]) -> Result<Vec<WeightVector>> {
    if path.len() + 1 != d.n {
        return Err(Error::InvalidDescriptor(format!("path of length {} for n = {}", path.len(), d.n)));
    }
    let mut chain = vec![descriptor_weight(d)];
    let mut current = *d;
    for step in path {
        current = step_source(&current, step)
            .ok_or_else(|| Error::InvalidDescriptor(format!("step {step} has no source below {current}")))?;
        chain.push(descriptor_weight(&current));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_of(2, 3, 1, 2).unwrap(), w(&[3, -3]));
        assert_eq!(weight_of(0, 4, 0, 3).unwrap(), w(&[0, 0, -4]));
        assert_eq!(weight_of(2, 0, 3, 3).unwrap(), w(&[3, 1, 1]));
        assert_eq!(weight_of(1, 1, 2, 4).unwrap(), w(&[2, 1, 0, -1]));
        assert_eq!(weight_of(3, 0, 1, 1).unwrap(), w(&[4]));
        assert!(weight_of(0, 0, 3, 2).is_err());
        assert!(WeightVector::new(vec![0, 1]).is_err());
    }

    #[test]
    fn interlacing() {
        let la = w(&[2, 0, -1]);
        let below = la.interlacing_below();
        assert_eq!(below.len(), 6);
        assert!(below.iter().all(|m| m.interlaces(&la)));
        assert!(!w(&[3, 0]).interlaces(&la));
        assert_eq!(w(&[2, -1]).interlacing_below().len(), 4);
    }

    #[test]
    fn chain_from_path_n2() {
        let d = SpaceDescriptor::new(2, 1, 1, 1).unwrap();
        let label =
            GtLabel::from_path(&d, vec![PathStep { slot: DataSlot::A { j: 0 }, kind: ComponentKind::Mixed { k: 0 } }]).unwrap();
        assert_eq!(label.chain, vec![w(&[2, -1]), w(&[1])]);
        assert!(label.is_consistent(&d));
        assert_eq!(label.to_string(), "(2,-1)(1)");
        assert_eq!(label.level(1), Some(&w(&[1])));
        assert_eq!(label.level(2), Some(&w(&[2, -1])));
        let bad = GtLabel::from_path(&d, vec![PathStep { slot: DataSlot::A { j: 5 }, kind: ComponentKind::Direct }]);
        assert!(bad.is_err());
    }
}
