use crate::algebra::{Coeff, Monomial, Polynomial, Ring, Variable};
use crate::cli::problem::{FactorDecl, PolyDecl, TermDecl};
use crate::order::OrderSpec;

/// Renders a variable, short form when every index is a single digit
/// (`y43`, `x13`), bracketed otherwise (`y[12,3]`). Fixed indices come
/// before N-indices.
fn render_variable(ring: &Ring, v: &Variable) -> String {
    let name = &ring.schema(v.schema()).name;
    let idx: Vec<u32> = v.fixed().iter().chain(v.free()).copied().collect();
    if idx.is_empty() {
        return name.clone();
    }
    if idx.iter().all(|&i| i <= 9) {
        let digits: String = idx.iter().map(|i| i.to_string()).collect();
        format!("{name}{digits}")
    } else {
        let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("{name}[{}]", list.join(","))
    }
}

/// `x1^2*y32` style; factors in decreasing variable order.
fn render_monomial(ring: &Ring, order: &OrderSpec, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut factors: Vec<&(Variable, u32)> = m.factors().iter().collect();
    factors.sort_by(|(a, _), (b, _)| order.var_cmp(b, a));
    factors
        .iter()
        .map(|(v, e)| {
            let base = render_variable(ring, v);
            if *e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// `x1*x2 - y21` style, terms in decreasing order.
pub fn render_poly(ring: &Ring, order: &OrderSpec, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in order.terms_desc(f).into_iter().enumerate() {
        let (sign, magnitude) = if c.is_negative() {
            ("-", c.neg())
        } else {
            ("+", c.clone())
        };
        if i == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let coeff_str = magnitude.to_input_string();
        let mono = render_monomial(ring, order, m);
        if coeff_str == "1" {
            out.push_str(&mono);
        } else if m.is_one() {
            out.push_str(&coeff_str);
        } else {
            out.push_str(&format!("{coeff_str}*{mono}"));
        }
    }
    out
}

fn coeff_to_string(c: &Coeff) -> String {
    c.to_input_string()
}

/// Converts back to the input term-list form, terms in decreasing order.
pub fn poly_to_decl(ring: &Ring, order: &OrderSpec, f: &Polynomial) -> PolyDecl {
    order
        .terms_desc(f)
        .into_iter()
        .map(|(m, c)| TermDecl {
            coeff: coeff_to_string(c),
            factors: m
                .factors()
                .iter()
                .map(|(v, e)| FactorDecl {
                    symbol: ring.schema(v.schema()).name.clone(),
                    fixed: v.fixed().to_vec(),
                    free: v.free().to_vec(),
                    exp: *e,
                })
                .collect(),
        })
        .collect()
}

pub(crate) fn render_monomial_pub(ring: &Ring, order: &OrderSpec, m: &Monomial) -> String {
    render_monomial(ring, order, m)
}
