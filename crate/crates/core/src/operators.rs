//! Hermitean Dirac operators, vector-variable multiplications and the
//! Euclidean Dirac operator and Laplacian on spinor-valued polynomials.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::SpinorPolynomial;
use crate::scalar::GaussianRational;

/// `Σ_j f†_j ∂_{z_j}`.
pub fn apply_upz(p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    let mut out = SpinorPolynomial::zero(p.n());
    for j in 1..=p.n() {
        let term = p.partial(j, false)?.create(j)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `Σ_j f_j ∂_{z̄_j}`.
pub fn apply_upzd(p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    let mut out = SpinorPolynomial::zero(p.n());
    for j in 1..=p.n() {
        let term = p.partial(j, true)?.annihilate(j)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Left multiplication by `Σ_j z_j f_j`.
pub fn mul_zvec(p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    let mut out = SpinorPolynomial::zero(p.n());
    for j in 1..=p.n() {
        out = out.add(&p.annihilate(j)?.mul_var(j, false)?)?;
    }
    Ok(out)
}

/// Left multiplication by `Σ_j z̄_j f†_j`.
pub fn mul_zdvec(p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    let mut out = SpinorPolynomial::zero(p.n());
    for j in 1..=p.n() {
        out = out.add(&p.create(j)?.mul_var(j, true)?)?;
    }
    Ok(out)
}

/// Euclidean Dirac operator in complex coordinates, `2(upzd - upz)`.
pub fn apply_dirac(p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    let d = apply_upzd(p)?.sub(&apply_upz(p)?)?;
    Ok(d.scale(&GaussianRational::from_int(2)))
}

/// `4 Σ_j ∂_{z_j} ∂_{z̄_j}` acting on each spinor coefficient.
pub fn laplacian(p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
    let mut out = SpinorPolynomial::zero(p.n());
    for j in 1..=p.n() {
        out = out.add(&p.partial(j, true)?.partial(j, false)?)?;
    }
    Ok(out.scale(&GaussianRational::from_int(4)))
}

pub fn is_hermitean_monogenic(p: &SpinorPolynomial) -> Result<bool> {
    Ok(apply_upz(p)?.is_zero() && apply_upzd(p)?.is_zero())
}

pub fn is_monogenic(p: &SpinorPolynomial) -> Result<bool> {
    Ok(apply_dirac(p)?.is_zero())
}

/// Building blocks of [`HermOperator`]. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Primitive {
    DZ(usize),
    DZbar(usize),
    MulZ(usize),
    MulZbar(usize),
    Create(usize),
    Annihilate(usize),
}

impl Primitive {
    fn index(&self) -> usize {
        match *self {
            Primitive::DZ(j)
            | Primitive::DZbar(j)
            | Primitive::MulZ(j)
            | Primitive::MulZbar(j)
            | Primitive::Create(j)
            | Primitive::Annihilate(j) => j,
        }
    }

    fn apply(&self, p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        match *self {
            Primitive::DZ(j) => p.partial(j, false),
            Primitive::DZbar(j) => p.partial(j, true),
            Primitive::MulZ(j) => p.mul_var(j, false),
            Primitive::MulZbar(j) => p.mul_var(j, true),
            Primitive::Create(j) => p.create(j),
            Primitive::Annihilate(j) => p.annihilate(j),
        }
    }
}

/// Linear combination of words in [`Primitive`]s. A word acts right to
/// left, so `[A, B]` means `A ∘ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermOperator {
    n: usize,
    terms: Vec<(GaussianRational, Vec<Primitive>)>,
}

impl HermOperator {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, GaussianRational::one())
    }

    pub fn scalar(n: usize, c: GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(n);
        }
        Self { n, terms: vec![(c, Vec::new())] }
    }

    pub fn primitive(n: usize, p: Primitive) -> Result<Self> {
        let j = p.index();
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        Ok(Self { n, terms: vec![(GaussianRational::one(), vec![p])] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn sum_of(n: usize, word: impl Fn(usize) -> [Primitive; 2]) -> Self {
        let terms = (1..=n).map(|j| (GaussianRational::one(), word(j).to_vec())).collect();
        Self { n, terms }
    }

    pub fn upz(n: usize) -> Self {
        Self::sum_of(n, |j| [Primitive::Create(j), Primitive::DZ(j)])
    }

    pub fn upzd(n: usize) -> Self {
        Self::sum_of(n, |j| [Primitive::Annihilate(j), Primitive::DZbar(j)])
    }

    pub fn zvec(n: usize) -> Self {
        Self::sum_of(n, |j| [Primitive::MulZ(j), Primitive::Annihilate(j)])
    }

    pub fn zdvec(n: usize) -> Self {
        Self::sum_of(n, |j| [Primitive::MulZbar(j), Primitive::Create(j)])
    }

    /// Multiplication by `Σ_j z_j z̄_j`.
    pub fn norm_sqr(n: usize) -> Self {
        Self::sum_of(n, |j| [Primitive::MulZ(j), Primitive::MulZbar(j)])
    }

    pub fn dirac(n: usize) -> Self {
        Self::upzd(n).plus(&Self::upz(n).scaled(&GaussianRational::from_int(-1))).scaled(&GaussianRational::from_int(2))
    }

    pub fn laplacian(n: usize) -> Self {
        let mut op = Self::sum_of(n, |j| [Primitive::DZ(j), Primitive::DZbar(j)]);
        op = op.scaled(&GaussianRational::from_int(4));
        op
    }

    pub fn scaled(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self.terms.iter().map(|(k, w)| (k * c, w.clone())).collect();
        Self { n: self.n, terms }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { n: self.n.max(other.n), terms }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().copied());
                terms.push((c1 * c2, w));
            }
        }
        Self { n: self.n.max(other.n), terms }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| acc.compose(self))
    }

    pub fn apply(&self, p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        if p.n() < self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: p.n() });
        }
        let mut out = SpinorPolynomial::zero(p.n());
        for (c, word) in &self.terms {
            let mut q = p.clone();
            for prim in word.iter().rev() {
                if q.is_zero() {
                    break;
                }
                q = prim.apply(&q)?;
            }
            out.add_scaled(&q, c)?;
        }
        Ok(out)
    }
}
