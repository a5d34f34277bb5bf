//! Spinor space as a fermionic Fock space.
//!
//! A basis state is a subset `K = {k1 < ... < kr}` of `{1..n}` and stands for
//! the wedge monomial `f†_{k1} ... f†_{kr} I`, where `I` is the vacuum
//! (the primitive idempotent, annihilated by every `f_j`). The Witt generators
//! act as creation and annihilation operators; signs count the occupied slots
//! below the acted-on index. The states are orthonormal for the spinor
//! Hermitean pairing.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Largest ambient dimension supported by the bitmask representation.
pub const MAX_N: usize = 30;

/// A basis state of `S_n`, stored as a bitmask (bit `j-1` set iff `j ∈ K`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinorIndex {
    n: usize,
    mask: u32,
}

impl SpinorIndex {
    pub fn vacuum(n: usize) -> Self {
        assert!(n <= MAX_N, "spinor dimension {n} exceeds {MAX_N}");
        Self { n, mask: 0 }
    }

    pub fn from_list(n: usize, elements: &[usize]) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::InvalidDescriptor(format!("n = {n} exceeds {MAX_N}")));
        }
        let mut mask = 0u32;
        for &k in elements {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange { index: k, max: n });
            }
            let bit = 1u32 << (k - 1);
            if mask & bit != 0 {
                return Err(Error::Parse(format!("repeated spinor index {k}")));
            }
            mask |= bit;
        }
        Ok(Self { n, mask })
    }

    /// All indices `1..=n`, the top-grade state.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_N, "spinor dimension {n} exceeds {MAX_N}");
        Self { n, mask: if n == 0 { 0 } else { u32::MAX >> (32 - n) } }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn grade(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, j: usize) -> bool {
        j >= 1 && j <= self.n && self.mask & (1 << (j - 1)) != 0
    }

    /// Sorted element list.
    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.contains(j)).collect()
    }

    /// Number of occupied slots strictly below `j`.
    fn crossings(&self, j: usize) -> u32 {
        (self.mask & ((1u32 << (j - 1)) - 1)).count_ones()
    }

    /// Same subset seen inside a different ambient dimension.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        if n < 32 && self.mask >> n != 0 {
            return Err(Error::DimensionMismatch { expected: self.n, found: n });
        }
        Ok(Self { n, mask: self.mask })
    }

    /// Every basis state of `S_n`, in canonical order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut v: Vec<Self> = (0..(1u32 << n)).map(|mask| Self { n, mask }).collect();
        v.sort();
        v
    }

    /// Every basis state of grade `r`.
    pub fn of_grade(n: usize, r: usize) -> Vec<Self> {
        Self::all(n).into_iter().filter(|k| k.grade() == r).collect()
    }
}

impl Ord for SpinorIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.grade().cmp(&other.grade()))
            .then_with(|| self.elements().cmp(&other.elements()))
    }
}

impl PartialOrd for SpinorIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SpinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in self.elements() {
            write!(f, "f†{k} ")?;
        }
        write!(f, "I")
    }
}

fn check_index(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n {
        Err(Error::IndexOutOfRange { index: j, max: n })
    } else {
        Ok(())
    }
}

/// `f†_j` on a basis state: `None` when `j ∈ K`, otherwise the sign
/// `(-1)^{#{k ∈ K : k < j}}` and the state `K ∪ {j}`.
pub fn create_state(j: usize, k: SpinorIndex) -> Result<Option<(bool, SpinorIndex)>> {
    check_index(j, k.n)?;
    if k.contains(j) {
        return Ok(None);
    }
    let negative = k.crossings(j) % 2 == 1;
    Ok(Some((negative, SpinorIndex { n: k.n, mask: k.mask | (1 << (j - 1)) })))
}

/// `f_j` on a basis state: `None` when `j ∉ K`, otherwise the sign
/// `(-1)^{#{k ∈ K : k < j}}` and the state `K ∖ {j}`.
pub fn annihilate_state(j: usize, k: SpinorIndex) -> Result<Option<(bool, SpinorIndex)>> {
    check_index(j, k.n)?;
    if !k.contains(j) {
        return Ok(None);
    }
    let negative = k.crossings(j) % 2 == 1;
    Ok(Some((negative, SpinorIndex { n: k.n, mask: k.mask & !(1 << (j - 1)) })))
}

/// Element of `S_n` with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorVector {
    n: usize,
    coeffs: BTreeMap<SpinorIndex, GaussianRational>,
}

impl SpinorVector {
    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn vacuum(n: usize) -> Self {
        Self::basis(SpinorIndex::vacuum(n))
    }

    pub fn basis(k: SpinorIndex) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, GaussianRational::one());
        Self { n: k.n, coeffs }
    }

    pub fn state(n: usize, elements: &[usize]) -> Result<Self> {
        Ok(Self::basis(SpinorIndex::from_list(n, elements)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: &SpinorIndex) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SpinorIndex, &GaussianRational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, k: SpinorIndex, c: &GaussianRational) {
        debug_assert_eq!(k.n, self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(GaussianRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(*k, c);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in self.terms() {
            out.add_term(*k, &(v * c));
        }
        out
    }

    fn map_states(&self, op: impl Fn(SpinorIndex) -> Result<Option<(bool, SpinorIndex)>>) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (k, c) in self.terms() {
            if let Some((negative, k2)) = op(*k)? {
                if negative {
                    out.add_term(k2, &-c);
                } else {
                    out.add_term(k2, c);
                }
            }
        }
        Ok(out)
    }
}

/// Left multiplication by `f†_j`.
pub fn create(j: usize, v: &SpinorVector) -> Result<SpinorVector> {
    check_index(j, v.n)?;
    v.map_states(|k| create_state(j, k))
}

/// Left multiplication by `f_j`.
pub fn annihilate(j: usize, v: &SpinorVector) -> Result<SpinorVector> {
    check_index(j, v.n)?;
    v.map_states(|k| annihilate_state(j, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    Create(usize),
    Annihilate(usize),
}

/// Linear combination of words in ladder operators. Each word is written
/// left to right as in a product and acts right to left.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorOperator {
    n: usize,
    terms: Vec<(GaussianRational, Vec<Ladder>)>,
}

impl SpinorOperator {
    pub fn identity(n: usize) -> Self {
        Self { n, terms: vec![(GaussianRational::one(), Vec::new())] }
    }

    pub fn zero(n: usize) -> Self {
        Self { n, terms: Vec::new() }
    }

    pub fn ladder(n: usize, op: Ladder) -> Result<Self> {
        let (Ladder::Create(j) | Ladder::Annihilate(j)) = op;
        check_index(j, n)?;
        Ok(Self { n, terms: vec![(GaussianRational::one(), vec![op])] })
    }

    pub fn scaled(&self, c: &GaussianRational) -> Self {
        Self { n: self.n, terms: self.terms.iter().map(|(a, w)| (a * c, w.clone())).collect() }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { n: self.n, terms }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, w1) in &self.terms {
            for (b, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                terms.push((a * b, w));
            }
        }
        Self { n: self.n, terms }
    }

    pub fn apply(&self, v: &SpinorVector) -> Result<SpinorVector> {
        if v.n != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: v.n });
        }
        let mut out = SpinorVector::zero(self.n);
        for (c, word) in &self.terms {
            let mut cur = v.clone();
            for op in word.iter().rev() {
                cur = match *op {
                    Ladder::Create(j) => create(j, &cur)?,
                    Ladder::Annihilate(j) => annihilate(j, &cur)?,
                };
                if cur.is_zero() {
                    break;
                }
            }
            out = out.add(&cur.scale(c));
        }
        Ok(out)
    }

    /// Operator equality tested on every basis state.
    pub fn equals_on_all_states(&self, other: &Self) -> Result<bool> {
        for k in SpinorIndex::all(self.n) {
            let v = SpinorVector::basis(k);
            if self.apply(&v)? != other.apply(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Euclidean generator: `e_j = f_j - f†_j` for `j ≤ n` and
/// `e_{n+j} = i (f_j + f†_j)`.
pub fn euclid_generator(n: usize, alpha: usize) -> Result<SpinorOperator> {
    if alpha == 0 || alpha > 2 * n {
        return Err(Error::IndexOutOfRange { index: alpha, max: 2 * n });
    }
    let minus_one = GaussianRational::from_int(-1);
    if alpha <= n {
        let f = SpinorOperator::ladder(n, Ladder::Annihilate(alpha))?;
        let fd = SpinorOperator::ladder(n, Ladder::Create(alpha))?;
        Ok(f.plus(&fd.scaled(&minus_one)))
    } else {
        let j = alpha - n;
        let f = SpinorOperator::ladder(n, Ladder::Annihilate(j))?;
        let fd = SpinorOperator::ladder(n, Ladder::Create(j))?;
        Ok(f.plus(&fd).scaled(&GaussianRational::i()))
    }
}

/// Split a spinor over `n` as `v = F0 + f†_n F1` with `F0, F1` over `n - 1`.
pub fn split_last(v: &SpinorVector) -> Result<(SpinorVector, SpinorVector)> {
    let n = v.n;
    if n == 0 {
        return Err(Error::InvalidDescriptor("cannot split S_0".into()));
    }
    let mut f0 = SpinorVector::zero(n - 1);
    let mut f1 = SpinorVector::zero(n - 1);
    for (k, c) in v.terms() {
        if k.contains(n) {
            // f†_n (K ∖ {n}) = (-1)^{|K|-1} K
            let rest = SpinorIndex { n: n - 1, mask: k.mask & !(1 << (n - 1)) };
            if rest.grade() % 2 == 1 {
                f1.add_term(rest, &-c);
            } else {
                f1.add_term(rest, c);
            }
        } else {
            f0.add_term(k.with_n(n - 1)?, c);
        }
    }
    Ok((f0, f1))
}

/// Inverse of [`split_last`].
pub fn join_last(f0: &SpinorVector, f1: &SpinorVector) -> Result<SpinorVector> {
    if f0.n != f1.n {
        return Err(Error::DimensionMismatch { expected: f0.n, found: f1.n });
    }
    let n = f0.n + 1;
    let lift = |v: &SpinorVector| -> Result<SpinorVector> {
        let mut out = SpinorVector::zero(n);
        for (k, c) in v.terms() {
            out.add_term(k.with_n(n)?, c);
        }
        Ok(out)
    };
    Ok(lift(f0)?.add(&create(n, &lift(f1)?)?))
}
