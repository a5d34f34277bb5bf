//! Fischer inner product and Gram matrices.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Homogeneity, SpinorPolynomial};
use crate::scalar::{factorial, GaussianRational, Matrix, Rational};

/// `⟨z^α z̄^β v, z^γ z̄^δ w⟩ = α! β! δ_{αγ} δ_{βδ} (v, w)`, conjugate-linear
/// in the first argument; Fock states are orthonormal.
pub fn fischer(p: &SpinorPolynomial, q: &SpinorPolynomial) -> Result<GaussianRational> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch { expected: p.n(), found: q.n() });
    }
    let (small, large, swap) = if p.len() <= q.len() { (p, q, false) } else { (q, p, true) };
    let mut acc = GaussianRational::zero();
    for (m, c) in small.terms() {
        let d = large.coeff(m);
        if d.is_zero() {
            continue;
        }
        let weight: Rational = m
            .zexp
            .iter()
            .chain(m.zbarexp.iter())
            .map(|&e| Rational::from_integer(factorial(e as u64).into()))
            .product();
        let pair = if swap { &d.conj() * c } else { &c.conj() * &d };
        acc += &pair.scale(&weight);
    }
    Ok(acc)
}

/// Exact Gram matrix of a labelled family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramMatrix {
    pub labels: Vec<String>,
    pub entries: Matrix,
}

impl GramMatrix {
    /// Every member must share one bidegree and grade (zero members are
    /// compatible with anything).
    pub fn new(labels: Vec<String>, members: &[SpinorPolynomial]) -> Result<Self> {
        if labels.len() != members.len() {
            return Err(Error::DimensionMismatch { expected: members.len(), found: labels.len() });
        }
        check_shared_descriptor(members)?;
        Ok(Self { labels, entries: gram_entries(members)? })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.first_off_diagonal().is_none()
    }

    /// First nonzero off-diagonal position, if any.
    pub fn first_off_diagonal(&self) -> Option<(usize, usize)> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i != j && !v.is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_hermitean(&self) -> bool {
        let k = self.size();
        (0..k).all(|i| (0..k).all(|j| self.entries[i][j] == self.entries[j][i].conj()))
    }

    /// Diagonal entries are real and strictly positive.
    pub fn diagonal_positive(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row[i].is_real() && row[i].re.is_positive())
    }

    pub fn diagonal(&self) -> Vec<GaussianRational> {
        self.entries.iter().enumerate().map(|(i, row)| row[i].clone()).collect()
    }

    /// Entries as a JSON array of arrays of strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|row| serde_json::Value::Array(row.iter().map(|v| serde_json::Value::String(v.to_string())).collect()))
                .collect(),
        )
    }
}

fn check_shared_descriptor(members: &[SpinorPolynomial]) -> Result<()> {
    let mut n = None;
    let mut bideg = None;
    let mut grade = None;
    for p in members {
        if *n.get_or_insert(p.n()) != p.n() {
            return Err(Error::MixedDescriptors);
        }
        match p.bidegree() {
            Homogeneity::Any => {}
            Homogeneity::Mixed => return Err(Error::MixedDescriptors),
            Homogeneity::Exact(d) => {
                if *bideg.get_or_insert(d) != d {
                    return Err(Error::MixedDescriptors);
                }
            }
        }
        match p.grade() {
            Homogeneity::Any => {}
            Homogeneity::Mixed => return Err(Error::MixedDescriptors),
            Homogeneity::Exact(r) => {
                if *grade.get_or_insert(r) != r {
                    return Err(Error::MixedDescriptors);
                }
            }
        }
    }
    Ok(())
}

/// Gram matrix without label bookkeeping or descriptor checks, for
/// families that span several graded pieces.
pub fn gram_entries(members: &[SpinorPolynomial]) -> Result<Matrix> {
    let k = members.len();
    let mut entries = vec![vec![GaussianRational::zero(); k]; k];
    for i in 0..k {
        for j in i..k {
            let v = fischer(&members[i], &members[j])?;
            entries[j][i] = v.conj();
            entries[i][j] = v;
        }
    }
    Ok(entries)
}

pub fn is_orthogonal(members: &[SpinorPolynomial]) -> Result<bool> {
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if !fischer(&members[i], &members[j])?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::SpinorIndex;

    fn mono(z: &[u32], zb: &[u32], k: &[usize], c: GaussianRational) -> SpinorPolynomial {
        let n = z.len();
        SpinorPolynomial::monomial(z.to_vec(), zb.to_vec(), SpinorIndex::from_list(n, k).unwrap(), c).unwrap()
    }

    fn one() -> GaussianRational {
        GaussianRational::from_int(1)
    }

    #[test]
    fn monomial_rule() {
        let p = mono(&[0], &[1], &[], one());
        assert_eq!(fischer(&p, &p).unwrap(), one());
        let q = mono(&[2], &[0], &[1], one());
        assert_eq!(fischer(&q, &q).unwrap(), GaussianRational::from_int(2));
        assert!(fischer(&p, &q).unwrap().is_zero());
    }

    #[test]
    fn conjugate_linear_first_slot() {
        let p = mono(&[1], &[0], &[], GaussianRational::i());
        let q = mono(&[1], &[0], &[], one());
        assert_eq!(fischer(&p, &q).unwrap(), -GaussianRational::i());
        assert_eq!(fischer(&q, &p).unwrap(), GaussianRational::i());
    }

    #[test]
    fn eq7_family_norms() {
        // z̄2^j/j! z̄1^(b-j)/(b-j)! I has norm 1/(j!(b-j)!)
        let b = 3u32;
        for j in 0..=b {
            let c = GaussianRational::real(crate::scalar::inv_factorial(j as u64) * crate::scalar::inv_factorial((b - j) as u64));
            let p = mono(&[0, 0], &[b - j, j], &[], c.clone());
            assert_eq!(fischer(&p, &p).unwrap(), c);
        }
    }

    #[test]
    fn gram_examples() {
        let f1 = mono(&[0, 0], &[0, 0], &[1], one());
        let f2 = mono(&[0, 0], &[0, 0], &[2], one());
        let g = GramMatrix::new(vec!["a".into(), "b".into()], &[f1.clone(), f2]).unwrap();
        assert!(g.is_diagonal() && g.diagonal_positive() && g.is_hermitean());
        assert_eq!(g.diagonal(), vec![one(), one()]);

        let g1 = GramMatrix::new(vec!["a".into()], &[f1.clone()]).unwrap();
        assert!(g1.diagonal_positive());

        let other = mono(&[1, 0], &[0, 0], &[1], one());
        assert_eq!(GramMatrix::new(vec!["a".into(), "b".into()], &[f1, other]), Err(Error::MixedDescriptors));
    }
}
