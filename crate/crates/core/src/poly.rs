//! Sparse spinor-valued polynomials in `z_1..z_n, z̄_1..z̄_n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fock::{self, SpinorIndex};
use crate::scalar::{GaussianRational, Rational};

/// `z^zexp · z̄^zbarexp · (spinor state)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub zexp: Vec<u32>,
    pub zbarexp: Vec<u32>,
    pub spinor: SpinorIndex,
}

impl Monomial {
    pub fn new(zexp: Vec<u32>, zbarexp: Vec<u32>, spinor: SpinorIndex) -> Result<Self> {
        let n = zexp.len();
        if zbarexp.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: zbarexp.len() });
        }
        if spinor.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: spinor.n() });
        }
        Ok(Self { zexp, zbarexp, spinor })
    }

    pub fn n(&self) -> usize {
        self.zexp.len()
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (
            self.zexp.iter().map(|&e| e as usize).sum(),
            self.zbarexp.iter().map(|&e| e as usize).sum(),
        )
    }

    fn total_degree(&self) -> usize {
        let (a, b) = self.bidegree();
        a + b
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.zexp.cmp(&self.zexp))
            .then_with(|| other.zbarexp.cmp(&self.zbarexp))
            .then_with(|| self.spinor.cmp(&other.spinor))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of a homogeneity query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity<T> {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    Exact(T),
    Mixed,
}

impl<T: Copy + PartialEq> Homogeneity<T> {
    /// True when the polynomial is compatible with `value` (zero always is).
    pub fn admits(&self, value: T) -> bool {
        match self {
            Homogeneity::Any => true,
            Homogeneity::Exact(v) => *v == value,
            Homogeneity::Mixed => false,
        }
    }

    pub fn exact(&self) -> Option<T> {
        match self {
            Homogeneity::Exact(v) => Some(*v),
            _ => None,
        }
    }
}

/// Identifies the space `M^{(r)}_{a,b}(C^n)` (or `P^{(r)}_{a,b}(C^n)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub r: usize,
}

impl SpaceDescriptor {
    pub fn new(n: usize, a: usize, b: usize, r: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescriptor("n must be at least 1".into()));
        }
        if n > fock::MAX_N {
            return Err(Error::InvalidDescriptor(format!("n = {n} exceeds {}", fock::MAX_N)));
        }
        if r > n {
            return Err(Error::InvalidDescriptor(format!("grade r = {r} exceeds n = {n}")));
        }
        Ok(Self { n, a, b, r })
    }

    /// Like [`SpaceDescriptor::new`] but with signed inputs; negative
    /// components yield `None` (the space is zero by convention).
    pub fn from_signed(n: i64, a: i64, b: i64, r: i64) -> Option<Self> {
        if n < 1 || a < 0 || b < 0 || r < 0 || r > n {
            return None;
        }
        Some(Self { n: n as usize, a: a as usize, b: b as usize, r: r as usize })
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^({})_({},{})(C^{})", self.r, self.a, self.b, self.n)
    }
}

/// Finitely supported map from monomials to Gaussian rationals, with no
/// stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl SpinorPolynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// The constant polynomial `c · (state)`.
    pub fn constant(spinor: SpinorIndex, c: GaussianRational) -> Self {
        let n = spinor.n();
        let mut p = Self::zero(n);
        p.add_term(Monomial { zexp: vec![0; n], zbarexp: vec![0; n], spinor }, c);
        p
    }

    pub fn monomial(zexp: Vec<u32>, zbarexp: Vec<u32>, spinor: SpinorIndex, c: GaussianRational) -> Result<Self> {
        let m = Monomial::new(zexp, zbarexp, spinor)?;
        let mut p = Self::zero(m.n());
        p.add_term(m, c);
        Ok(p)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.n() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        debug_assert_eq!(m.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// In-place `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &GaussianRational) -> Result<()> {
        self.check_same_n(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (m, v) in other.terms() {
            self.add_term(m.clone(), v * c);
        }
        Ok(())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (m, v) in self.terms() {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::real(r.clone()))
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussianRational::from_int(-1))
    }

    pub fn bidegree(&self) -> Homogeneity<(usize, usize)> {
        homogeneity(self.terms.keys().map(Monomial::bidegree))
    }

    pub fn grade(&self) -> Homogeneity<usize> {
        homogeneity(self.terms.keys().map(|m| m.spinor.grade()))
    }

    /// Checks that `self` is a member of `P^{(r)}_{a,b}(C^n)`.
    pub fn check_in_space(&self, d: &SpaceDescriptor) -> Result<()> {
        if self.n != d.n {
            return Err(Error::DimensionMismatch { expected: d.n, found: self.n });
        }
        if !self.bidegree().admits((d.a, d.b)) {
            return Err(Error::NotHomogeneous(format!("expected bidegree ({}, {})", d.a, d.b)));
        }
        if !self.grade().admits(d.r) {
            return Err(Error::NotHomogeneous(format!("expected spinor grade {}", d.r)));
        }
        Ok(())
    }

    fn check_var(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.n {
            return Err(Error::IndexOutOfRange { index: j, max: self.n });
        }
        Ok(())
    }

    /// `∂/∂z_j`, or `∂/∂z̄_j` when `conjugated`.
    pub fn partial(&self, j: usize, conjugated: bool) -> Result<Self> {
        self.check_var(j)?;
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            let e = if conjugated { m.zbarexp[j - 1] } else { m.zexp[j - 1] };
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            if conjugated {
                m2.zbarexp[j - 1] -= 1;
            } else {
                m2.zexp[j - 1] -= 1;
            }
            out.add_term(m2, c * &GaussianRational::from_int(e as i64));
        }
        Ok(out)
    }

    /// Repeated partial derivative.
    pub fn partial_pow(&self, j: usize, conjugated: bool, times: usize) -> Result<Self> {
        let mut p = self.clone();
        for _ in 0..times {
            p = p.partial(j, conjugated)?;
        }
        Ok(p)
    }

    /// Multiplication by `z_j`, or by `z̄_j` when `conjugated`.
    pub fn mul_var(&self, j: usize, conjugated: bool) -> Result<Self> {
        self.mul_var_pow(j, conjugated, 1)
    }

    pub fn mul_var_pow(&self, j: usize, conjugated: bool, power: u32) -> Result<Self> {
        self.check_var(j)?;
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            let mut m2 = m.clone();
            if conjugated {
                m2.zbarexp[j - 1] += power;
            } else {
                m2.zexp[j - 1] += power;
            }
            out.terms.insert(m2, c.clone());
        }
        Ok(out)
    }

    /// Multiplication by `|z|² = Σ_j z_j z̄_j`.
    pub fn mul_norm_sqr(&self) -> Self {
        let mut out = Self::zero(self.n);
        for j in 1..=self.n {
            for (m, c) in self.terms() {
                let mut m2 = m.clone();
                m2.zexp[j - 1] += 1;
                m2.zbarexp[j - 1] += 1;
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    /// Apply a map on spinor basis states termwise (a signed partial
    /// permutation such as `f_j` or `f†_j`).
    pub fn map_spinor(&self, op: impl Fn(SpinorIndex) -> Result<Option<(bool, SpinorIndex)>>) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            if let Some((negative, k)) = op(m.spinor)? {
                let m2 = Monomial { zexp: m.zexp.clone(), zbarexp: m.zbarexp.clone(), spinor: k };
                out.add_term(m2, if negative { -c } else { c.clone() });
            }
        }
        Ok(out)
    }

    /// Left multiplication of the values by `f†_j`.
    pub fn create(&self, j: usize) -> Result<Self> {
        self.check_var(j)?;
        self.map_spinor(|k| fock::create_state(j, k))
    }

    /// Left multiplication of the values by `f_j`.
    pub fn annihilate(&self, j: usize) -> Result<Self> {
        self.check_var(j)?;
        self.map_spinor(|k| fock::annihilate_state(j, k))
    }

    /// Restriction to `z_n = 0 = z̄_n`, split as `P0 + f†_n P1` with
    /// `P0, P1` over `n - 1`.
    pub fn restrict_last(&self) -> Result<(Self, Self)> {
        let n = self.n;
        if n < 2 {
            return Err(Error::InvalidDescriptor("restriction needs n >= 2".into()));
        }
        let mut p0 = Self::zero(n - 1);
        let mut p1 = Self::zero(n - 1);
        for (m, c) in self.terms() {
            if m.zexp[n - 1] != 0 || m.zbarexp[n - 1] != 0 {
                continue;
            }
            let (s0, s1) = fock::split_last(&fock::SpinorVector::basis(m.spinor).scale(c))?;
            let zexp = m.zexp[..n - 1].to_vec();
            let zbarexp = m.zbarexp[..n - 1].to_vec();
            for (k, v) in s0.terms() {
                p0.add_term(Monomial { zexp: zexp.clone(), zbarexp: zbarexp.clone(), spinor: *k }, v.clone());
            }
            for (k, v) in s1.terms() {
                p1.add_term(Monomial { zexp: zexp.clone(), zbarexp: zbarexp.clone(), spinor: *k }, v.clone());
            }
        }
        Ok((p0, p1))
    }

    /// Natural inclusion into a larger ambient dimension.
    pub fn embed_lower(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: n });
        }
        let mut out = Self::zero(n);
        for (m, c) in self.terms() {
            let mut zexp = m.zexp.clone();
            zexp.resize(n, 0);
            let mut zbarexp = m.zbarexp.clone();
            zbarexp.resize(n, 0);
            out.terms.insert(Monomial { zexp, zbarexp, spinor: m.spinor.with_n(n)? }, c.clone());
        }
        Ok(out)
    }

    /// Substitute `z_j → u z_j`, `z̄_j → conj(u) z̄_j` for all `j`.
    pub fn rotate_phase(&self, u: &GaussianRational) -> Self {
        let ubar = u.conj();
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            let (a, b) = m.bidegree();
            let factor = &u.pow(a as u32) * &ubar.pow(b as u32);
            out.add_term(m.clone(), c * &factor);
        }
        out
    }

    /// The scalar `c` with `self = c · other`, if one exists and is nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<GaussianRational> {
        if self.n != other.n || self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (m0, c0) = other.terms().next()?;
        let ratio = self.coeff(m0).checked_div(c0).ok()?;
        if ratio.is_zero() {
            return None;
        }
        for (m, c) in other.terms() {
            if self.coeff(m) != c * &ratio {
                return None;
            }
        }
        Some(ratio)
    }
}

/// All exponent vectors of length `n` with entries summing to `degree`, in
/// descending lexicographic order.
pub fn exponent_vectors(n: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(n, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, degree, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Number of monomials spanning `P^{(r)}_{a,b}(C^n)`, saturating.
pub fn monomial_count(d: &SpaceDescriptor) -> usize {
    use num_traits::ToPrimitive;
    let c = crate::scalar::binomial((d.a + d.n - 1) as u64, d.a as u64)
        * crate::scalar::binomial((d.b + d.n - 1) as u64, d.b as u64)
        * crate::scalar::binomial(d.n as u64, d.r as u64);
    c.to_usize().unwrap_or(usize::MAX)
}

/// Monomial basis of `P^{(r)}_{a,b}(C^n)`.
pub fn monomial_basis(d: &SpaceDescriptor) -> Vec<Monomial> {
    let zs = exponent_vectors(d.n, d.a as u32);
    let zbs = exponent_vectors(d.n, d.b as u32);
    let states = SpinorIndex::of_grade(d.n, d.r);
    let mut out = Vec::with_capacity(zs.len() * zbs.len() * states.len());
    for z in &zs {
        for zb in &zbs {
            for k in &states {
                out.push(Monomial { zexp: z.clone(), zbarexp: zb.clone(), spinor: *k });
            }
        }
    }
    out
}

fn homogeneity<T: PartialEq>(mut values: impl Iterator<Item = T>) -> Homogeneity<T> {
    let Some(first) = values.next() else {
        return Homogeneity::Any;
    };
    if values.all(|v| v == first) {
        Homogeneity::Exact(first)
    } else {
        Homogeneity::Mixed
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, j: usize, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, " {name}{j}"),
        _ => write!(f, " {name}{j}^{e}"),
    }
}

impl fmt::Display for SpinorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "1")?;
            }
            for j in 1..=self.n {
                fmt_var(f, "z", j, m.zexp[j - 1])?;
                fmt_var(f, "zb", j, m.zbarexp[j - 1])?;
            }
            write!(f, " {}", m.spinor)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    z: Vec<u32>,
    zbar: Vec<u32>,
    spinor: Vec<usize>,
    coeff: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SpinorPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(m, c)| TermRepr {
                z: m.zexp.clone(),
                zbar: m.zbarexp.clone(),
                spinor: m.spinor.elements(),
                coeff: c.clone(),
            })
            .collect();
        PolyRepr { n: self.n, terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpinorPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut p = SpinorPolynomial::zero(repr.n);
        for t in repr.terms {
            let spinor = SpinorIndex::from_list(repr.n, &t.spinor).map_err(D::Error::custom)?;
            let m = Monomial::new(t.z, t.zbar, spinor).map_err(D::Error::custom)?;
            p.add_term(m, t.coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(n: usize, k: &[usize]) -> SpinorIndex {
        SpinorIndex::from_list(n, k).unwrap()
    }

    fn mono(z: &[u32], zb: &[u32], k: &[usize], c: i64) -> SpinorPolynomial {
        SpinorPolynomial::monomial(z.to_vec(), zb.to_vec(), state(z.len(), k), GaussianRational::from_int(c)).unwrap()
    }

    fn sum(ps: &[SpinorPolynomial]) -> SpinorPolynomial {
        ps.iter().fold(SpinorPolynomial::zero(ps[0].n()), |acc, p| acc.add(p).unwrap())
    }

    #[test]
    fn bidegree_and_grade() {
        let p = mono(&[1, 0], &[0, 1], &[1], 1);
        assert_eq!(p.bidegree(), Homogeneity::Exact((1, 1)));
        assert_eq!(p.grade(), Homogeneity::Exact(1));
        let q = sum(&[mono(&[1], &[0], &[1], 1), mono(&[0], &[1], &[1], 1)]);
        assert_eq!(q.bidegree(), Homogeneity::Mixed);
        assert_eq!(q.grade(), Homogeneity::Exact(1));
        assert_eq!(SpinorPolynomial::zero(2).bidegree(), Homogeneity::Any);
        assert_eq!(SpinorPolynomial::zero(2).grade(), Homogeneity::Any);
    }

    #[test]
    fn partial_examples() {
        // ∂_{z̄1}(z̄1²/2 I) = z̄1 I
        let p = mono(&[0], &[2], &[], 1).scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(p.partial(1, true).unwrap(), mono(&[0], &[1], &[], 1));
        assert!(mono(&[0], &[3], &[], 1).partial(1, false).unwrap().is_zero());

        let p = sum(&[mono(&[0, 1], &[0, 1], &[1], 1), mono(&[1, 0], &[1, 0], &[1], -1), mono(&[1, 0], &[0, 1], &[2], 1)]);
        let expected = sum(&[mono(&[0, 1], &[0, 0], &[1], 1), mono(&[1, 0], &[0, 0], &[2], 1)]);
        assert_eq!(p.partial(2, true).unwrap(), expected);
        assert!(p.partial(3, true).is_err());
    }

    #[test]
    fn restrict_examples() {
        let p = sum(&[mono(&[1, 0], &[1, 0], &[1], 1), mono(&[0, 1], &[0, 1], &[1], -1), mono(&[1, 0], &[0, 1], &[2], -1)]);
        let (p0, p1) = p.restrict_last().unwrap();
        assert_eq!(p0, mono(&[1], &[1], &[1], 1));
        assert!(p1.is_zero());

        let p = mono(&[0, 0], &[4, 0], &[], 1);
        let (p0, p1) = p.restrict_last().unwrap();
        assert_eq!(p0, mono(&[0], &[4], &[], 1));
        assert!(p1.is_zero());

        let (p0, p1) = mono(&[1, 0], &[0, 0], &[2], 1).restrict_last().unwrap();
        assert!(p0.is_zero());
        assert_eq!(p1, mono(&[1], &[0], &[], 1));
    }

    #[test]
    fn embed_examples() {
        let p = mono(&[0], &[1], &[], 1);
        assert_eq!(p.embed_lower(2).unwrap(), mono(&[0, 0], &[1, 0], &[], 1));
        let q = mono(&[0, 0], &[0, 0], &[1], 1);
        let e = q.embed_lower(3).unwrap();
        assert_eq!(e, mono(&[0, 0, 0], &[0, 0, 0], &[1], 1));
        assert_eq!(e.restrict_last().unwrap(), (q, SpinorPolynomial::zero(2)));
        assert!(e.embed_lower(2).is_err());
    }

    #[test]
    fn check_in_space_rejects_mixed_input() {
        let d = SpaceDescriptor::new(1, 1, 0, 1).unwrap();
        assert!(mono(&[1], &[0], &[1], 1).check_in_space(&d).is_ok());
        let mixed = sum(&[mono(&[1], &[0], &[1], 1), mono(&[0], &[1], &[1], 1)]);
        assert!(mixed.check_in_space(&d).is_err());
        assert!(SpinorPolynomial::zero(1).check_in_space(&d).is_ok());
        assert!(SpaceDescriptor::new(2, 0, 0, 3).is_err());
        assert!(SpaceDescriptor::new(0, 0, 0, 0).is_err());
    }

    #[test]
    fn ratio() {
        let p = sum(&[mono(&[1, 0], &[0, 0], &[2], 2), mono(&[0, 1], &[0, 0], &[1], 2)]);
        let q = sum(&[mono(&[1, 0], &[0, 0], &[2], -1), mono(&[0, 1], &[0, 0], &[1], -1)]);
        assert_eq!(p.ratio_to(&q), Some(GaussianRational::from_int(-2)));
        assert_eq!(p.ratio_to(&mono(&[1, 0], &[0, 0], &[2], 1)), None);
    }

    #[test]
    fn json_schema() {
        let p = mono(&[1, 0], &[0, 2], &[1, 2], 3);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"n": 2, "terms": [{"z": [1, 0], "zbar": [0, 2], "spinor": [1, 2], "coeff": {"re": "3", "im": "0"}}]})
        );
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(exponent_vectors(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(exponent_vectors(1, 3), vec![vec![3]]);
        let d = SpaceDescriptor::new(3, 1, 2, 1).unwrap();
        assert_eq!(monomial_basis(&d).len(), 3 * 6 * 3);
        assert_eq!(monomial_count(&d), 54);
    }

    #[test]
    fn text_rendering() {
        let p = mono(&[2, 0], &[0, 1], &[1, 2], 1).scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(p.to_string(), "1/2 z1^2 zb2 f†1 f†2 I");
        assert_eq!(SpinorPolynomial::zero(1).to_string(), "0");
    }
}
