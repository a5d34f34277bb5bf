//! Cauchy-Kovalevskaya extension of initial data from `C^{n-1}` to `C^n`, and
//! the Fischer-decomposition embeddings that produce the initial data.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dimensions::dim_m;
use crate::error::{Error, Result};
use crate::operators::{apply_upz, apply_upzd, mul_zdvec, mul_zvec, HermOperator, Primitive};
use crate::poly::{SpaceDescriptor, SpinorPolynomial};
use crate::scalar::{inv_factorial, GaussianRational, Rational};

/// Which initial-data space a datum belongs to: `A_{a,b-j}` or `B_{a-i,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DataSlot {
    A { j: usize },
    B { i: usize },
}

impl fmt::Display for DataSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataSlot::A { j } => write!(f, "A{j}"),
            DataSlot::B { i } => write!(f, "B{i}"),
        }
    }
}

/// Position of a component inside the decomposition of one data space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    Direct,
    Shifted { k: usize },
    Mixed { k: usize },
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Direct => write!(f, "D"),
            ComponentKind::Shifted { k } => write!(f, "S{k}"),
            ComponentKind::Mixed { k } => write!(f, "X{k}"),
        }
    }
}

/// Operator mapping a lower-dimensional h-monogenic space into a data space.
/// All products act in `n - 1` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingFactor {
    Identity,
    /// `|z|^{2k} z†`
    ConjVec { k: usize },
    /// `|z|^{2k} z`
    Vec { k: usize },
    /// `|z|^{2k} (z† z + c z z†)`
    MixedA { k: usize, c: Rational },
    /// `|z|^{2k} (z z† + d z† z)`
    MixedB { k: usize, d: Rational },
}

impl EmbeddingFactor {
    pub fn apply(&self, p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        let (k, q) = match self {
            EmbeddingFactor::Identity => return Ok(p.clone()),
            EmbeddingFactor::ConjVec { k } => (*k, mul_zdvec(p)?),
            EmbeddingFactor::Vec { k } => (*k, mul_zvec(p)?),
            EmbeddingFactor::MixedA { k, c } => {
                let first = mul_zdvec(&mul_zvec(p)?)?;
                let second = mul_zvec(&mul_zdvec(p)?)?.scale_rational(c);
                (*k, first.add(&second)?)
            }
            EmbeddingFactor::MixedB { k, d } => {
                let first = mul_zvec(&mul_zdvec(p)?)?;
                let second = mul_zdvec(&mul_zvec(p)?)?.scale_rational(d);
                (*k, first.add(&second)?)
            }
        };
        Ok((0..k).fold(q, |acc, _| acc.mul_norm_sqr()))
    }

    /// The rational coefficient of a mixed factor.
    pub fn coefficient(&self) -> Option<&Rational> {
        match self {
            EmbeddingFactor::MixedA { c, .. } => Some(c),
            EmbeddingFactor::MixedB { d, .. } => Some(d),
            _ => None,
        }
    }
}

/// One summand of the decomposition of a data space into shifted copies of
/// lower-dimensional h-monogenic spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub slot: DataSlot,
    pub kind: ComponentKind,
    pub factor: EmbeddingFactor,
    /// `None` when a degree or grade index falls outside its range.
    pub source: Option<SpaceDescriptor>,
    pub source_dim: u64,
}

impl Component {
    pub fn is_empty(&self) -> bool {
        self.source_dim == 0
    }
}

fn lower(n: usize, a: i64, b: i64, r: i64) -> Option<SpaceDescriptor> {
    SpaceDescriptor::from_signed(n as i64 - 1, a, b, r)
}

fn component(slot: DataSlot, kind: ComponentKind, factor: EmbeddingFactor, source: Option<SpaceDescriptor>) -> Component {
    let source_dim = source.map_or(0, |d| dim_m(&d));
    Component { slot, kind, factor, source, source_dim }
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new((num as i64).into(), (den as i64).into())
}

/// Components of `A^{(r)}_{a,b'}` with `b' = b - j`, in print order.
fn a_components(n: usize, a: usize, bp: usize, r: usize, j: usize) -> Vec<Component> {
    let slot = DataSlot::A { j };
    let (ai, bi, ri) = (a as i64, bp as i64, r as i64);
    let mut out = vec![component(slot, ComponentKind::Direct, EmbeddingFactor::Identity, lower(n, ai, bi, ri))];
    if bp >= 1 {
        for k in 0..=a.min(bp - 1) {
            let ki = k as i64;
            out.push(component(
                slot,
                ComponentKind::Shifted { k },
                EmbeddingFactor::ConjVec { k },
                lower(n, ai - ki, bi - ki - 1, ri - 1),
            ));
        }
    }
    if a >= 1 && bp >= 1 {
        for k in 0..=(a - 1).min(bp - 1) {
            let ki = k as i64;
            let c = ratio(a - k - 1 + r, a + r);
            out.push(component(
                slot,
                ComponentKind::Mixed { k },
                EmbeddingFactor::MixedA { k, c },
                lower(n, ai - ki - 1, bi - ki - 1, ri),
            ));
        }
    }
    out
}

/// Components of the payload space of `B^{(r)}_{a',b}` with `a' = a - i`.
fn b_components(n: usize, ap: usize, b: usize, r: usize, i: usize) -> Vec<Component> {
    let slot = DataSlot::B { i };
    let (ai, bi, ri) = (ap as i64, b as i64, r as i64);
    let mut out = vec![component(slot, ComponentKind::Direct, EmbeddingFactor::Identity, lower(n, ai, bi, ri - 1))];
    if ap >= 1 {
        for k in 0..=(ap - 1).min(b) {
            let ki = k as i64;
            out.push(component(
                slot,
                ComponentKind::Shifted { k },
                EmbeddingFactor::Vec { k },
                lower(n, ai - ki - 1, bi - ki, ri),
            ));
        }
    }
    if ap >= 1 && b >= 1 {
        for k in 0..=(ap - 1).min(b - 1) {
            let ki = k as i64;
            let d = ratio(b - k - 1 + n - r, b + n - r);
            out.push(component(
                slot,
                ComponentKind::Mixed { k },
                EmbeddingFactor::MixedB { k, d },
                lower(n, ai - ki - 1, bi - ki - 1, ri - 1),
            ));
        }
    }
    out
}

/// All components for the target `M^{(r)}_{a,b}(C^n)`, ordered as
/// A-slots by descending `j`, then B-slots by ascending `i`.
pub fn initial_data_decomposition(n: usize, a: usize, b: usize, r: usize) -> Result<Vec<Component>> {
    let d = SpaceDescriptor::new(n, a, b, r)?;
    if n < 2 || r == 0 || r >= n {
        return Err(Error::InvalidDescriptor(format!("decomposition needs 0 < r < n, got r = {r}, n = {n}")));
    }
    Ok(decomposition_unchecked(&d))
}

/// Same enumeration without the grade restriction; at `r = 0` or `r = n`
/// the out-of-range sources come back flagged empty.
pub fn decomposition_unchecked(d: &SpaceDescriptor) -> Vec<Component> {
    let SpaceDescriptor { n, a, b, r } = *d;
    let mut out = Vec::new();
    for j in (0..=b).rev() {
        out.extend(a_components(n, a, b - j, r, j));
    }
    if r >= 1 {
        for i in 0..=a {
            out.extend(b_components(n, a - i, b, r, i));
        }
    }
    out
}

/// A single initial polynomial together with its slot and target space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialDatum {
    pub slot: DataSlot,
    pub target: SpaceDescriptor,
    /// `p⁰` for A-slots; `p¹` (without the `f†_n` prefix) for B-slots.
    pub payload: SpinorPolynomial,
}

impl InitialDatum {
    pub fn new(slot: DataSlot, target: SpaceDescriptor, payload: SpinorPolynomial) -> Result<Self> {
        let datum = Self { slot, target, payload };
        datum.validate()?;
        Ok(datum)
    }

    /// Bidegree and grade the payload must have.
    pub fn payload_shape(&self) -> Result<(usize, usize, i64)> {
        let SpaceDescriptor { a, b, r, .. } = self.target;
        match self.slot {
            DataSlot::A { j } if j <= b => Ok((a, b - j, r as i64)),
            DataSlot::B { i } if i <= a => Ok((a - i, b, r as i64 - 1)),
            _ => Err(Error::InvalidDatum(format!("offset of {} exceeds the target degrees", self.slot))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.target.n;
        if n < 2 {
            return Err(Error::InvalidDatum("target dimension must be at least 2".into()));
        }
        if self.payload.n() != n - 1 {
            return Err(Error::DimensionMismatch { expected: n - 1, found: self.payload.n() });
        }
        let (pa, pb, pr) = self.payload_shape()?;
        if !self.payload.bidegree().admits((pa, pb)) {
            return Err(Error::InvalidDatum(format!("payload must have bidegree ({pa}, {pb})")));
        }
        if pr < 0 || pr as usize > n - 1 {
            if !self.payload.is_zero() {
                return Err(Error::InvalidDatum(format!("grade {pr} is empty in dimension {}", n - 1)));
            }
        } else if !self.payload.grade().admits(pr as usize) {
            return Err(Error::InvalidDatum(format!("payload must have grade {pr}")));
        }
        match self.slot {
            DataSlot::A { .. } => {
                if !apply_upz(&self.payload)?.is_zero() {
                    return Err(Error::InvalidDatum("A-payload is not annihilated by upz".into()));
                }
            }
            DataSlot::B { .. } => {
                if !apply_upzd(&self.payload)?.is_zero() {
                    return Err(Error::InvalidDatum("B-payload is not annihilated by upzd".into()));
                }
            }
        }
        Ok(())
    }
}

/// `T = z_n ∘ upz~ ∘ f_n + z̄_n ∘ upzd~ ∘ f†_n`, with `upz~`, `upzd~` over
/// the first `n - 1` variables.
pub fn ck_step_operator(n: usize) -> HermOperator {
    let head = HermOperator::primitive(n, Primitive::MulZ(n)).expect("index in range");
    let tail = HermOperator::primitive(n, Primitive::Annihilate(n)).expect("index in range");
    let first = head.compose(&HermOperator::upz(n - 1)).compose(&tail);
    let head = HermOperator::primitive(n, Primitive::MulZbar(n)).expect("index in range");
    let tail = HermOperator::primitive(n, Primitive::Create(n)).expect("index in range");
    let second = head.compose(&HermOperator::upzd(n - 1)).compose(&tail);
    first.plus(&second)
}

/// CK extension of one datum; summing over all slots gives the full
/// extension of a complete set of initial data.
pub fn ck_extend(datum: &InitialDatum) -> Result<SpinorPolynomial> {
    datum.validate()?;
    let SpaceDescriptor { n, a, b, .. } = datum.target;
    let lifted = datum.payload.embed_lower(n)?;
    let (start, offset, kmax, outer_conj) = match datum.slot {
        DataSlot::A { j } => (lifted, j, (2 * a + 1).min(2 * b - 2 * j), true),
        DataSlot::B { i } => (lifted.create(n)?, i, (2 * a - 2 * i).min(2 * b + 1), false),
    };
    let t = ck_step_operator(n);
    let mut term = start;
    let mut sum = SpinorPolynomial::zero(n);
    for k in 0..=kmax {
        if term.is_zero() {
            break;
        }
        let w = inv_factorial((k / 2) as u64) * inv_factorial(((k + 1) / 2 + offset) as u64);
        sum.add_scaled(&term, &GaussianRational::real(w))?;
        if k < kmax {
            term = t.apply(&term)?;
        }
    }
    sum.mul_var_pow(n, outer_conj, offset as u32)
}

/// Complete initial data for one target: `p⁰_{a,b-j}` indexed by `j` and
/// `p¹_{a-i,b}` indexed by `i`.
#[derive(Clone, Debug)]
pub struct InitialDataSet {
    pub target: SpaceDescriptor,
    pub p0: Vec<SpinorPolynomial>,
    pub p1: Vec<SpinorPolynomial>,
}

impl InitialDataSet {
    pub fn extend(&self) -> Result<SpinorPolynomial> {
        let mut m = SpinorPolynomial::zero(self.target.n);
        for (j, p) in self.p0.iter().enumerate() {
            m = m.add(&ck_extend(&InitialDatum::new(DataSlot::A { j }, self.target, p.clone())?)?)?;
        }
        for (i, p) in self.p1.iter().enumerate() {
            m = m.add(&ck_extend(&InitialDatum::new(DataSlot::B { i }, self.target, p.clone())?)?)?;
        }
        Ok(m)
    }

    /// Checks the restriction identities of the extension `m`, returning a
    /// description of every violated identity.
    pub fn restriction_failures(&self, m: &SpinorPolynomial) -> Result<Vec<String>> {
        let SpaceDescriptor { n, a, b, .. } = self.target;
        let mut failures = Vec::new();
        let (r0, r1) = m.restrict_last()?;
        if r0 != self.p0[0] || r1 != self.p1[0] {
            failures.push("restriction of M differs from (p0_{a,b}, p1_{a,b})".to_string());
        }
        for j in 1..=b {
            let (r0, r1) = m.partial_pow(n, true, j)?.restrict_last()?;
            let expected1 = apply_upzd(&self.p0[j - 1])?.neg();
            if r0 != self.p0[j] || r1 != expected1 {
                failures.push(format!("z̄_n-derivative of order {j} restricts incorrectly"));
            }
        }
        for i in 1..=a {
            let (r0, r1) = m.partial_pow(n, false, i)?.restrict_last()?;
            let expected0 = apply_upz(&self.p1[i - 1])?;
            if r0 != expected0 || r1 != self.p1[i] {
                failures.push(format!("z_n-derivative of order {i} restricts incorrectly"));
            }
        }
        Ok(failures)
    }

    pub fn is_zero(&self) -> bool {
        self.p0.iter().chain(self.p1.iter()).all(SpinorPolynomial::is_zero)
    }
}

/// Checks that an embedded component lands in its data space.
pub fn component_image_ok(c: &Component, image: &SpinorPolynomial) -> Result<bool> {
    Ok(match c.slot {
        DataSlot::A { .. } => apply_upz(image)?.is_zero(),
        DataSlot::B { .. } => apply_upzd(image)?.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::SpinorIndex;
    use crate::operators::is_hermitean_monogenic;

    fn mono(z: &[u32], zb: &[u32], k: &[usize], c: GaussianRational) -> SpinorPolynomial {
        let n = z.len();
        SpinorPolynomial::monomial(z.to_vec(), zb.to_vec(), SpinorIndex::from_list(n, k).unwrap(), c).unwrap()
    }

    fn int(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    fn sum(ps: &[SpinorPolynomial]) -> SpinorPolynomial {
        ps.iter().fold(SpinorPolynomial::zero(ps[0].n()), |acc, p| acc.add(p).unwrap())
    }

    fn target(n: usize, a: usize, b: usize, r: usize) -> SpaceDescriptor {
        SpaceDescriptor::new(n, a, b, r).unwrap()
    }

    #[test]
    fn antiholomorphic_datum_truncates() {
        let datum = InitialDatum::new(DataSlot::A { j: 0 }, target(2, 0, 1, 0), mono(&[0], &[1], &[], int(1))).unwrap();
        assert_eq!(ck_extend(&datum).unwrap(), mono(&[0, 0], &[1, 0], &[], int(1)));
    }

    #[test]
    fn hand_checked_extension() {
        let datum = InitialDatum::new(DataSlot::A { j: 0 }, target(2, 1, 1, 1), mono(&[1], &[1], &[1], int(1))).unwrap();
        let m = ck_extend(&datum).unwrap();
        let expected = sum(&[
            mono(&[1, 0], &[1, 0], &[1], int(1)),
            mono(&[0, 1], &[0, 1], &[1], int(-1)),
            mono(&[1, 0], &[0, 1], &[2], int(-1)),
        ]);
        assert_eq!(m, expected);
        assert!(is_hermitean_monogenic(&m).unwrap());
    }

    #[test]
    fn b_datum_truncates() {
        let b = 3;
        let c = GaussianRational::real(inv_factorial(b as u64));
        let datum = InitialDatum::new(DataSlot::B { i: 0 }, target(2, 0, b, 1), mono(&[0], &[b as u32], &[], c.clone())).unwrap();
        assert_eq!(ck_extend(&datum).unwrap(), mono(&[0, 0], &[b as u32, 0], &[2], c));
    }

    #[test]
    fn datum_validation() {
        // z1 I is not annihilated by upz
        let bad = InitialDatum::new(DataSlot::A { j: 0 }, target(2, 1, 0, 0), mono(&[1], &[0], &[], int(1)));
        assert!(matches!(bad, Err(Error::InvalidDatum(_))));
        let wrong_degree = InitialDatum::new(DataSlot::A { j: 0 }, target(2, 1, 1, 1), mono(&[1], &[0], &[1], int(1)));
        assert!(wrong_degree.is_err());
        let wrong_n = InitialDatum::new(DataSlot::A { j: 0 }, target(3, 0, 1, 0), mono(&[0], &[1], &[], int(1)));
        assert!(wrong_n.is_err());
    }

    #[test]
    fn decomposition_n3() {
        let comps = initial_data_decomposition(3, 1, 1, 1).unwrap();
        let a0: Vec<_> = comps.iter().filter(|c| c.slot == DataSlot::A { j: 0 }).collect();
        assert_eq!(a0.len(), 3);
        assert_eq!(a0[0].source_dim, 4);
        assert!(a0[1].is_empty());
        assert_eq!(a0[2].source_dim, 2);
        assert_eq!(a0[2].factor.coefficient(), Some(&ratio(1, 2)));
        assert_eq!(a0.iter().map(|c| c.source_dim).sum::<u64>(), 6);
        let total: u64 = comps.iter().map(|c| c.source_dim).sum();
        assert_eq!(total, 15);
        assert!(initial_data_decomposition(3, 1, 1, 0).is_err());
        assert!(initial_data_decomposition(3, 1, 1, 3).is_err());
    }

    #[test]
    fn decomposition_n2_is_one_per_slot() {
        for a in 0..4 {
            for b in 0..4 {
                let comps = initial_data_decomposition(2, a, b, 1).unwrap();
                for j in 0..=b {
                    let s: u64 = comps.iter().filter(|c| c.slot == DataSlot::A { j }).map(|c| c.source_dim).sum();
                    assert_eq!(s, 1);
                }
                for i in 0..=a {
                    let s: u64 = comps.iter().filter(|c| c.slot == DataSlot::B { i }).map(|c| c.source_dim).sum();
                    assert_eq!(s, 1);
                }
            }
        }
    }
}
