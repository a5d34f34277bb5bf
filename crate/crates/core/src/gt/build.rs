//! Recursive construction of Gel'fand-Tsetlin bases.

use std::collections::HashMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::ck::{decomposition_unchecked, ck_extend, ComponentKind, DataSlot, InitialDatum};
use crate::dimensions::dim_m;
use crate::error::{Error, Result};
use crate::fischer::GramMatrix;
use crate::fock::{self, SpinorIndex};
use crate::gt::labels::{GtLabel, PathStep};
use crate::operators::is_hermitean_monogenic;
use crate::poly::{monomial_count, Monomial, SpaceDescriptor, SpinorPolynomial};
use crate::scalar::{inv_factorial, GaussianRational};

/// Default cap on the monomial count of a target space.
pub const DEFAULT_BASIS_BUDGET: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMember {
    pub label: GtLabel,
    pub poly: SpinorPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFamily {
    pub descriptor: SpaceDescriptor,
    pub members: Vec<BasisMember>,
}

/// Outcome of the structural checks on one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub count: usize,
    pub expected_count: u64,
    pub non_monogenic: Vec<String>,
    pub off_diagonal: Option<(String, String)>,
    pub diagonal_positive: bool,
    pub bad_labels: Vec<String>,
    pub duplicate_labels: bool,
}

impl FamilyVerdict {
    pub fn count_ok(&self) -> bool {
        self.count as u64 == self.expected_count
    }

    pub fn monogenic_ok(&self) -> bool {
        self.non_monogenic.is_empty()
    }

    pub fn gram_ok(&self) -> bool {
        self.off_diagonal.is_none() && self.diagonal_positive
    }

    pub fn labels_ok(&self) -> bool {
        self.bad_labels.is_empty() && !self.duplicate_labels
    }

    pub fn passed(&self) -> bool {
        self.count_ok() && self.monogenic_ok() && self.gram_ok() && self.labels_ok()
    }
}

impl BasisFamily {
    pub fn empty(descriptor: SpaceDescriptor) -> Self {
        Self { descriptor, members: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn polys(&self) -> Vec<SpinorPolynomial> {
        self.members.iter().map(|m| m.poly.clone()).collect()
    }

    pub fn find(&self, label: &GtLabel) -> Option<&SpinorPolynomial> {
        self.members.iter().find(|m| &m.label == label).map(|m| &m.poly)
    }

    /// Member whose weight chain equals `chain`.
    pub fn find_chain(&self, chain: &[crate::gt::WeightVector]) -> Option<&SpinorPolynomial> {
        self.members.iter().find(|m| m.label.chain == chain).map(|m| &m.poly)
    }

    pub fn gram(&self) -> Result<GramMatrix> {
        let labels = self.members.iter().map(|m| m.label.to_string()).collect();
        GramMatrix::new(labels, &self.polys())
    }

    pub fn verify(&self) -> Result<FamilyVerdict> {
        let d = self.descriptor;
        let mut non_monogenic = Vec::new();
        let mut bad_labels = Vec::new();
        for m in &self.members {
            let in_space = m.poly.check_in_space(&d).is_ok() && !m.poly.is_zero();
            if !in_space || !is_hermitean_monogenic(&m.poly)? {
                non_monogenic.push(m.label.to_string());
            }
            if !m.label.is_consistent(&d) {
                bad_labels.push(m.label.to_string());
            }
        }
        let mut labels: Vec<&GtLabel> = self.members.iter().map(|m| &m.label).collect();
        labels.sort();
        let duplicate_labels = labels.windows(2).any(|w| w[0] == w[1]);
        let gram = self.gram()?;
        let off_diagonal = gram.first_off_diagonal().map(|(i, j)| (gram.labels[i].clone(), gram.labels[j].clone()));
        Ok(FamilyVerdict {
            count: self.len(),
            expected_count: dim_m(&d),
            non_monogenic,
            off_diagonal,
            diagonal_positive: gram.diagonal_positive(),
            bad_labels,
            duplicate_labels,
        })
    }
}

/// How the edge grades `r = 0` and `r = n` are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRoute {
    /// The normalized monomial products.
    Display,
    /// Plain CK extension of the lower-dimensional basis.
    Extension,
}

/// Memoizing builder; lower-dimensional families are computed once.
#[derive(Debug)]
pub struct GtBuilder {
    budget: usize,
    route: EdgeRoute,
    cache: HashMap<SpaceDescriptor, BasisFamily>,
}

impl Default for GtBuilder {
    fn default() -> Self {
        Self::new(DEFAULT_BASIS_BUDGET)
    }
}

impl GtBuilder {
    pub fn new(budget: usize) -> Self {
        Self { budget, route: EdgeRoute::Display, cache: HashMap::new() }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn with_route(mut self, route: EdgeRoute) -> Self {
        self.route = route;
        self
    }

    pub fn basis(&mut self, d: &SpaceDescriptor) -> Result<BasisFamily> {
        if let Some(f) = self.cache.get(d) {
            return Ok(f.clone());
        }
        let family = self.build(d)?;
        self.cache.insert(*d, family.clone());
        Ok(family)
    }

    fn build(&mut self, d: &SpaceDescriptor) -> Result<BasisFamily> {
        if dim_m(d) == 0 {
            return Ok(BasisFamily::empty(*d));
        }
        let needed = monomial_count(d);
        if needed > self.budget {
            return Err(Error::BudgetExceeded { needed, budget: self.budget });
        }
        if d.n == 1 {
            return Ok(line_basis(d));
        }
        if (d.r == 0 || d.r == d.n) && self.route == EdgeRoute::Display {
            return self.edge_basis(d);
        }
        let mut members = Vec::new();
        for comp in decomposition_unchecked(d) {
            let Some(source) = comp.source.filter(|_| !comp.is_empty()) else {
                continue;
            };
            let lower = self.basis(&source)?;
            let step = PathStep { slot: comp.slot, kind: comp.kind };
            for m in &lower.members {
                let payload = comp.factor.apply(&m.poly)?;
                let datum = InitialDatum::new(comp.slot, *d, payload)?;
                let poly = ck_extend(&datum)?;
                let mut path = vec![step];
                path.extend(m.label.path.iter().copied());
                let mut chain = vec![crate::gt::descriptor_weight(d)];
                chain.extend(m.label.chain.iter().cloned());
                members.push(BasisMember { label: GtLabel { chain, path }, poly });
            }
        }
        Ok(BasisFamily { descriptor: *d, members })
    }

    /// `r = 0`: `z̄_n^j / j!` times the lower basis; `r = n`: `z_n^i / i!`
    /// times the lower basis with `f†_n` appended to the top state.
    fn edge_basis(&mut self, d: &SpaceDescriptor) -> Result<BasisFamily> {
        let n = d.n;
        let mut members = Vec::new();
        let steps: Vec<(DataSlot, usize, SpaceDescriptor)> = if d.r == 0 {
            (0..=d.b).rev().map(|j| (DataSlot::A { j }, j, SpaceDescriptor { n: n - 1, a: 0, b: d.b - j, r: 0 })).collect()
        } else {
            (0..=d.a).map(|i| (DataSlot::B { i }, i, SpaceDescriptor { n: n - 1, a: d.a - i, b: 0, r: n - 1 })).collect()
        };
        for (slot, power, source) in steps {
            let lower = self.basis(&source)?;
            let conj = d.r == 0;
            let scale = GaussianRational::real(inv_factorial(power as u64));
            for m in &lower.members {
                let mut poly = m.poly.embed_lower(n)?.mul_var_pow(n, conj, power as u32)?.scale(&scale);
                if !conj {
                    poly = poly.map_spinor(|k| Ok(Some((false, append_top(k)?))))?;
                }
                let mut path = vec![PathStep { slot, kind: ComponentKind::Direct }];
                path.extend(m.label.path.iter().copied());
                members.push(BasisMember { label: GtLabel::from_path(d, path)?, poly });
            }
        }
        Ok(BasisFamily { descriptor: *d, members })
    }
}

fn append_top(k: SpinorIndex) -> Result<SpinorIndex> {
    let mut elements = k.elements();
    elements.push(k.n());
    SpinorIndex::from_list(k.n(), &elements)
}

/// `M^{(0)}_{0,b}(C)` and `M^{(1)}_{a,0}(C)`.
fn line_basis(d: &SpaceDescriptor) -> BasisFamily {
    let (zexp, zbarexp, state, power) = if d.r == 0 {
        (vec![0], vec![d.b as u32], SpinorIndex::vacuum(1), d.b)
    } else {
        (vec![d.a as u32], vec![0], SpinorIndex::full(1), d.a)
    };
    let c = GaussianRational::real(inv_factorial(power as u64));
    let poly = SpinorPolynomial::from_terms(1, [(Monomial { zexp, zbarexp, spinor: state }, c)]).expect("n = 1");
    let label = GtLabel::from_path(d, Vec::new()).expect("n = 1 label");
    BasisFamily { descriptor: *d, members: vec![BasisMember { label, poly }] }
}

/// Orthogonal GT basis of `M^{(r)}_{a,b}(C^n)`; empty when the space is zero.
pub fn gt_basis(n: usize, a: usize, b: usize, r: usize) -> Result<BasisFamily> {
    GtBuilder::default().basis(&SpaceDescriptor::new(n, a, b, r)?)
}

/// Same recursion, but edge grades are produced by CK extension instead of
/// the monomial products.
pub fn gt_basis_via_extension(n: usize, a: usize, b: usize, r: usize) -> Result<BasisFamily> {
    GtBuilder::default().with_route(EdgeRoute::Extension).basis(&SpaceDescriptor::new(n, a, b, r)?)
}

/// Pairs members of two families by label and returns, for each, the scalar
/// `c` with `left = c · right`; `None` if some member has no scalar partner.
pub fn scalar_matches(left: &BasisFamily, right: &BasisFamily) -> Option<Vec<(GtLabel, GaussianRational)>> {
    if left.len() != right.len() {
        return None;
    }
    left.members
        .iter()
        .map(|m| {
            let other = right.find(&m.label)?;
            Some((m.label.clone(), m.poly.ratio_to(other)?))
        })
        .collect()
}

/// True when all scalars in a match list equal one.
pub fn all_exact(matches: &[(GtLabel, GaussianRational)]) -> bool {
    matches.iter().all(|(_, c)| c.is_one())
}

/// `f†_n` applied to a lower state, as used by the edge routes.
pub fn top_state_sign(n: usize) -> Result<GaussianRational> {
    let below = SpinorIndex::full(n - 1).with_n(n)?;
    match fock::create_state(n, below)? {
        Some((negative, _)) => Ok(GaussianRational::from_int(if negative { -1 } else { 1 })),
        None => Err(Error::InvalidDescriptor("top state already occupied".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::WeightVector;

    fn mono(z: &[u32], zb: &[u32], k: &[usize], c: GaussianRational) -> SpinorPolynomial {
        let n = z.len();
        SpinorPolynomial::monomial(z.to_vec(), zb.to_vec(), SpinorIndex::from_list(n, k).unwrap(), c).unwrap()
    }

    #[test]
    fn line_cases() {
        let f = gt_basis(1, 0, 3, 0).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.members[0].poly, mono(&[0], &[3], &[], GaussianRational::from_ratio(1, 6)));
        assert_eq!(f.members[0].label.chain, vec![WeightVector::new(vec![-3]).unwrap()]);
        let g = gt_basis(1, 3, 0, 1).unwrap();
        assert_eq!(g.members[0].poly, mono(&[3], &[0], &[1], GaussianRational::from_ratio(1, 6)));
        assert!(gt_basis(1, 1, 1, 1).unwrap().is_empty());
    }

    #[test]
    fn antiholomorphic_n2() {
        let b = 2u32;
        let f = gt_basis(2, 0, b as usize, 0).unwrap();
        assert_eq!(f.len(), 3);
        for j in 0..=b {
            let c = GaussianRational::real(inv_factorial(j as u64) * inv_factorial((b - j) as u64));
            let expected = mono(&[0, 0], &[b - j, j], &[], c);
            assert!(f.members.iter().any(|m| m.poly == expected));
        }
        assert!(f.verify().unwrap().passed());
    }

    #[test]
    fn small_generic_family() {
        let f = gt_basis(2, 1, 1, 1).unwrap();
        assert_eq!(f.len(), 4);
        let v = f.verify().unwrap();
        assert!(v.passed(), "{v:?}");
        let mus: Vec<i64> = f.members.iter().map(|m| m.label.chain[1].components()[0]).collect();
        assert_eq!(mus, vec![2, 1, 0, -1]);
    }

    #[test]
    fn edge_routes_agree_up_to_sign() {
        let display = gt_basis(2, 2, 0, 2).unwrap();
        let ck = gt_basis_via_extension(2, 2, 0, 2).unwrap();
        let matches = scalar_matches(&ck, &display).unwrap();
        let sign = top_state_sign(2).unwrap();
        assert!(matches.iter().all(|(_, c)| *c == sign));
        let display = gt_basis(2, 0, 2, 0).unwrap();
        let ck = gt_basis_via_extension(2, 0, 2, 0).unwrap();
        assert!(all_exact(&scalar_matches(&ck, &display).unwrap()));
    }
}
