//! Text, LaTeX and JSON renderings of basis families.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gt::BasisFamily;
use crate::poly::SpinorPolynomial;
use crate::scalar::{GaussianRational, Rational};

/// One line per member: weight chain, structural path, polynomial.
pub fn family_to_text(family: &BasisFamily) -> String {
    let mut out = String::new();
    for m in &family.members {
        out.push_str(&format!("{} [{}]: {}\n", m.label, m.label.path_string(), m.poly));
    }
    out
}

pub fn family_to_json(family: &BasisFamily) -> Result<String> {
    serde_json::to_string_pretty(family).map_err(|e| Error::Parse(e.to_string()))
}

pub fn family_from_json(s: &str) -> Result<BasisFamily> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Coefficient with its sign pulled out; `None` body means a bare unit.
fn latex_coeff(c: &GaussianRational) -> (bool, Option<String>) {
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let abs = c.re.abs();
        return (neg, (!abs.is_one()).then(|| latex_rational(&abs)));
    }
    if c.re.is_zero() {
        let neg = c.im.is_negative();
        let abs = c.im.abs();
        let body = if abs.is_one() { "i".to_string() } else { format!("{} i", latex_rational(&abs)) };
        return (neg, Some(body));
    }
    let sign = if c.im.is_negative() { "-" } else { "+" };
    (false, Some(format!("\\left({} {sign} {} i\\right)", latex_rational(&c.re), latex_rational(&c.im.abs()))))
}

fn latex_var(out: &mut Vec<String>, sym: &str, j: usize, e: u32) {
    match e {
        0 => {}
        1 => out.push(format!("{sym}_{{{j}}}")),
        _ => out.push(format!("{sym}_{{{j}}}^{{{e}}}")),
    }
}

pub fn poly_to_latex(p: &SpinorPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let (neg, body) = latex_coeff(c);
        match (idx, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let mut factors: Vec<String> = body.into_iter().collect();
        for j in 1..=p.n() {
            latex_var(&mut factors, "z", j, m.zexp[j - 1]);
            latex_var(&mut factors, "\\bar{z}", j, m.zbarexp[j - 1]);
        }
        for k in m.spinor.elements() {
            factors.push(format!("\\mathfrak{{f}}^\\dagger_{{{k}}}"));
        }
        factors.push("I".into());
        s.push_str(&factors.join(" "));
    }
    s
}

pub fn family_to_latex(family: &BasisFamily) -> String {
    let d = &family.descriptor;
    let mut out = format!(
        "% M^{{({})}}_{{{},{}}}(\\mathbb{{C}}^{{{}}}), {} elements\n\\begin{{align*}}\n",
        d.r,
        d.a,
        d.b,
        d.n,
        family.len()
    );
    for (idx, m) in family.members.iter().enumerate() {
        let chain: Vec<String> = m.label.chain.iter().map(|w| w.to_string()).collect();
        let end = if idx + 1 < family.len() { " \\\\" } else { "" };
        out.push_str(&format!("P_{{{}}} &= {}{end}\n", chain.join(""), poly_to_latex(&m.poly)));
    }
    out.push_str("\\end{align*}\n");
    out
}
