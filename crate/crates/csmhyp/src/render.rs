//! Plain-text rendering of classes and reports.

use std::fmt::Write;

use csmhyp_core::charclasses::ClassReport;
use csmhyp_core::ChowClass;
use num_rational::BigRational;

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// `2[P¹] + 3[P⁰]`: the codimension-`c` term is a multiple of the class of a
/// linear `P^{n-c}`.
pub fn linear_subspace_form(c: &ChowClass) -> String {
    let n = c.n();
    let mut out = String::new();
    for (codim, a) in c.coeffs().iter().enumerate() {
        if *a == BigRational::from_integer(0.into()) {
            continue;
        }
        let neg = *a < BigRational::from_integer(0.into());
        let abs = if neg { -a.clone() } else { a.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs != BigRational::from_integer(1.into()) {
            if abs.is_integer() {
                write!(out, "{abs}").unwrap();
            } else {
                write!(out, "({abs})").unwrap();
            }
        }
        write!(out, "[P{}]", superscript(n - codim)).unwrap();
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn line(out: &mut String, label: &str, c: &ChowClass) {
    writeln!(out, "{label:<10} = {:<28} = {}", c.to_string_or_zero(), linear_subspace_form(c)).unwrap();
}

trait OrZero {
    fn to_string_or_zero(&self) -> String;
}

impl OrZero for ChowClass {
    fn to_string_or_zero(&self) -> String {
        if self.is_zero() {
            "0".into()
        } else {
            self.to_string()
        }
    }
}

pub const LEGEND: &str = "\
legend:
  s(Y)      Segre class of the singular scheme Y = V(dF) in P^n
  s(X∖Y)    s(X) + c(L)^-1 (s(Y)^∨ ⊗ L), also checked by the binomial sum
  c_SM(X)   c(TP^n) s(X∖Y); also checked as Fulton's class of the thickening X(-1)
            and as c_F(X) + c(L)^(n-1) (μ(Y)^∨ ⊗ L)
  c_F(X)    Fulton's class c(TP^n) s(X)
  μ(Y)      c(T*P^n ⊗ L) s(Y); its degree is the total Milnor number
  h is the hyperplane class, [P^k] the class of a linear subspace";

pub fn render_report(r: &ClassReport, label: &str, legend: bool) -> String {
    let mut out = String::new();
    writeln!(out, "X = V({label}) in P^{}, degree {}", r.n(), r.d()).unwrap();
    if let Some(g) = &r.projective_degrees {
        let g: Vec<String> = g.iter().map(ToString::to_string).collect();
        writeln!(out, "projective degrees g = ({})", g.join(", ")).unwrap();
    }
    let c = &r.classes;
    line(&mut out, "s(Y)", &c.segre_singular);
    line(&mut out, "s(X∖Y)", &c.s_x_minus_y);
    line(&mut out, "c_SM(X)", &c.csm);
    line(&mut out, "c_F(X)", &c.fulton);
    line(&mut out, "μ(Y)", &c.mu);
    writeln!(out, "χ(X) = {}   total Milnor number = {}", r.euler, r.milnor_total).unwrap();
    let checks: Vec<String> =
        r.verification.iter().map(|v| format!("{} {}", v.name, if v.pass { "ok" } else { "FAILED" })).collect();
    writeln!(out, "checks: {}", checks.join(", ")).unwrap();
    for v in r.failures() {
        if let Some(d) = &v.difference {
            writeln!(out, "  {}: difference {}", v.name, d).unwrap();
        }
        if let Some(d) = &v.detail {
            writeln!(out, "  {}: {}", v.name, d).unwrap();
        }
    }
    let accepted = r.trials.iter().filter(|t| t.accepted).count();
    if !r.trials.is_empty() {
        writeln!(out, "trials: {} run, {} accepted", r.trials.len(), accepted).unwrap();
    }
    if legend {
        writeln!(out, "{LEGEND}").unwrap();
    }
    out
}

pub fn render_class(label: &str, c: &ChowClass) -> String {
    let mut out = String::new();
    line(&mut out, label, c);
    out
}
