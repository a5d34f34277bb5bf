//! Appell-type differentiation identities and derivative matrices.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fischer::fischer;
use crate::gt::build::{gt_basis, BasisFamily};
use crate::gt::closed_form::closed_form_n2;
use crate::gt::labels::WeightVector;
use crate::poly::{SpaceDescriptor, SpinorPolynomial};
use crate::scalar::{GaussianRational, Matrix};

/// `z_j` or `z̄_j` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variable {
    Z(usize),
    Zbar(usize),
}

impl Variable {
    pub fn index(&self) -> usize {
        match *self {
            Variable::Z(j) | Variable::Zbar(j) => j,
        }
    }

    pub fn is_conjugate(&self) -> bool {
        matches!(self, Variable::Zbar(_))
    }

    pub fn differentiate(&self, p: &SpinorPolynomial) -> Result<SpinorPolynomial> {
        p.partial(self.index(), self.is_conjugate())
    }

    /// Descriptor of the space the derivative lands in, if any.
    pub fn target(&self, d: &SpaceDescriptor) -> Option<SpaceDescriptor> {
        match self {
            Variable::Z(_) => d.a.checked_sub(1).map(|a| SpaceDescriptor { a, ..*d }),
            Variable::Zbar(_) => d.b.checked_sub(1).map(|b| SpaceDescriptor { b, ..*d }),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Z(j) => write!(f, "z{j}"),
            Variable::Zbar(j) => write!(f, "zb{j}"),
        }
    }
}

impl FromStr for Variable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| t.parse::<usize>().ok().filter(|&j| j >= 1);
        if let Some(j) = s.strip_prefix("zb").and_then(parse) {
            return Ok(Variable::Zbar(j));
        }
        if let Some(j) = s.strip_prefix('z').and_then(parse) {
            return Ok(Variable::Z(j));
        }
        Err(Error::Parse(format!("unknown variable {s:?}; expected z<j> or zb<j>")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AppellReport {
    pub identities_checked: usize,
    pub elements_checked: usize,
    pub failures: Vec<String>,
}

impl AppellReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.identities_checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: AppellReport) {
        self.identities_checked += other.identities_checked;
        self.elements_checked += other.elements_checked;
        self.failures.extend(other.failures);
    }
}

/// The four identities for the closed forms with `a ≤ a_max`, `b ≤ b_max`.
pub fn appell_closed_forms(a_max: usize, b_max: usize) -> Result<AppellReport> {
    let mut rep = AppellReport::default();
    for a in 0..=a_max as i64 {
        for b in 0..=b_max as i64 {
            for mu in -b..=a + 1 {
                let p = closed_form_n2(a, b, mu);
                rep.elements_checked += 1;
                let cases = [
                    ("i", p.partial(2, true)?, closed_form_n2(a, b - 1, mu)),
                    ("ii", p.partial(2, false)?, closed_form_n2(a - 1, b, mu)),
                    ("iii", p.partial(1, true)?, closed_form_n2(a, b - 1, mu + 1).neg()),
                    ("iv", p.partial(1, false)?, closed_form_n2(a - 1, b, mu - 1)),
                ];
                for (name, lhs, rhs) in cases {
                    rep.record(lhs == rhs, || format!("identity ({name}) fails at a={a}, b={b}, mu={mu}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Chain after differentiating an edge-grade element in variable `k`:
/// levels `m ≥ k` have their last (`r = 0`) or first (`r = n`) entry
/// raised or lowered by one.
fn shifted_chain(chain: &[WeightVector], k: usize, holomorphic_top: bool) -> Option<Vec<WeightVector>> {
    let n = chain.len();
    let mut out = Vec::with_capacity(n);
    for (idx, w) in chain.iter().enumerate() {
        let level = n - idx;
        if level >= k {
            out.push(if holomorphic_top { w.shifted(0, -1)? } else { w.shifted(level - 1, 1)? });
        } else {
            out.push(w.clone());
        }
    }
    let interlaced = out.windows(2).all(|p| p[1].interlaces(&p[0]));
    interlaced.then_some(out)
}

/// Differentiation rules for `M^{(0)}_{0,b}(C^n)` and `M^{(n)}_{a,0}(C^n)`.
pub fn appell_edge_grades(n: usize, a_max: usize, b_max: usize) -> Result<AppellReport> {
    let mut rep = AppellReport::default();
    for (top, deg_max) in [(false, b_max), (true, a_max)] {
        for deg in 0..=deg_max {
            let (src, tgt) = if top {
                (gt_basis(n, deg, 0, n)?, deg.checked_sub(1).map(|a| gt_basis(n, a, 0, n)).transpose()?)
            } else {
                (gt_basis(n, 0, deg, 0)?, deg.checked_sub(1).map(|b| gt_basis(n, 0, b, 0)).transpose()?)
            };
            for m in &src.members {
                rep.elements_checked += 1;
                for k in 1..=n {
                    let moving = m.poly.partial(k, !top)?;
                    let expected = shifted_chain(&m.label.chain, k, top)
                        .and_then(|c| tgt.as_ref().and_then(|t| t.find_chain(&c).cloned()))
                        .unwrap_or_else(|| SpinorPolynomial::zero(n));
                    rep.record(moving == expected, || {
                        format!("edge rule fails: d/d{}{k} of {} (n={n})", if top { "z" } else { "zb" }, m.label)
                    });
                    let still = m.poly.partial(k, top)?;
                    rep.record(still.is_zero(), || format!("edge element {} not annihilated (n={n})", m.label));
                }
            }
        }
    }
    Ok(rep)
}

/// Closed-form identities plus the edge-grade rules for `n = 1, 2, 3`.
pub fn appell_check(a_max: usize, b_max: usize) -> Result<AppellReport> {
    let mut rep = appell_closed_forms(a_max, b_max)?;
    for n in 1..=3 {
        rep.merge(appell_edge_grades(n, a_max, b_max)?);
    }
    Ok(rep)
}

/// Matrix of a partial derivative between two orthogonal families; rows
/// index the target family, columns the source family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivativeMatrix {
    pub variable: Variable,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Matrix,
    /// Every derivative lies in the span of the target family.
    pub in_span: bool,
}

impl DerivativeMatrix {
    /// At most one nonzero entry per column, each in `{0, ±1}`.
    pub fn is_appell_sparse(&self) -> bool {
        let unit = |v: &GaussianRational| v.is_one() || (-v).is_one();
        (0..self.cols.len()).all(|c| {
            let nonzero: Vec<&GaussianRational> = self.entries.iter().map(|row| &row[c]).filter(|v| !v.is_zero()).collect();
            nonzero.len() <= 1 && nonzero.iter().all(|v| unit(v))
        })
    }
}

/// Coordinates of the derivative of each source member in the target family.
pub fn derivative_matrix(variable: Variable, source: &BasisFamily, target: &BasisFamily) -> Result<DerivativeMatrix> {
    let expected = variable.target(&source.descriptor);
    if expected.is_some_and(|e| e != target.descriptor) || (expected.is_none() && !target.is_empty()) {
        return Err(Error::DescriptorMismatch(format!(
            "d/d{variable} maps {} elsewhere than {}",
            source.descriptor, target.descriptor
        )));
    }
    let n = source.descriptor.n;
    let norms: Vec<GaussianRational> =
        target.members.iter().map(|t| fischer(&t.poly, &t.poly)).collect::<Result<_>>()?;
    let mut entries = vec![vec![GaussianRational::zero(); source.len()]; target.len()];
    let mut in_span = true;
    for (c, s) in source.members.iter().enumerate() {
        let dp = variable.differentiate(&s.poly)?;
        let mut rebuilt = SpinorPolynomial::zero(n);
        for (r, t) in target.members.iter().enumerate() {
            let coeff = fischer(&t.poly, &dp)?.checked_div(&norms[r])?;
            rebuilt.add_scaled(&t.poly, &coeff)?;
            entries[r][c] = coeff;
        }
        in_span &= rebuilt == dp;
    }
    Ok(DerivativeMatrix {
        variable,
        rows: target.members.iter().map(|m| m.label.to_string()).collect(),
        cols: source.members.iter().map(|m| m.label.to_string()).collect(),
        entries,
        in_span,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::closed_form::closed_form_family;

    #[test]
    fn variable_parsing() {
        assert_eq!("z2".parse::<Variable>().unwrap(), Variable::Z(2));
        assert_eq!("zb1".parse::<Variable>().unwrap(), Variable::Zbar(1));
        assert!("x1".parse::<Variable>().is_err());
        assert!("z0".parse::<Variable>().is_err());
    }

    #[test]
    fn hand_checked_identities() {
        let p = closed_form_n2(1, 1, 1);
        assert_eq!(p.partial(2, true).unwrap(), closed_form_n2(1, 0, 1));
        assert_eq!(p.partial(1, true).unwrap(), closed_form_n2(1, 0, 2).neg());
        assert!(closed_form_n2(0, 0, 1).partial(1, false).unwrap().is_zero());
    }

    #[test]
    fn small_sweep() {
        let rep = appell_check(2, 2).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.identities_checked > 0);
    }

    #[test]
    fn matrix_shapes() {
        let src = closed_form_family(1, 1).unwrap();
        let tgt = closed_form_family(1, 0).unwrap();
        let m = derivative_matrix(Variable::Zbar(2), &src, &tgt).unwrap();
        assert_eq!((m.entries.len(), m.entries[0].len()), (3, 4));
        assert!(m.in_span && m.is_appell_sparse());
        let zero_cols = (0..4).filter(|&c| m.entries.iter().all(|row| row[c].is_zero())).count();
        assert_eq!(zero_cols, 1);

        let m = derivative_matrix(Variable::Zbar(1), &src, &tgt).unwrap();
        assert!(m.in_span && m.is_appell_sparse());
        assert!(m.entries.iter().flatten().all(|v| v.is_zero() || *v == GaussianRational::from_int(-1)));

        let empty = BasisFamily::empty(SpaceDescriptor::new(2, 0, 0, 1).unwrap());
        let src = closed_form_family(0, 0).unwrap();
        let m = derivative_matrix(Variable::Z(1), &src, &empty).unwrap();
        assert!(m.entries.is_empty() && m.in_span);
        assert!(derivative_matrix(Variable::Z(1), &closed_form_family(1, 1).unwrap(), &tgt).is_err());
    }
}
