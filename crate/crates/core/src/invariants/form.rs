use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::monomial::{cubic_from_quad, cubic_index, cubic_monomials, quad_index, Monomial, NCUBICS, NQUADRICS, NVARS};
use crate::exact::{parse_expr, Cyclotomic, ExactError, Expr};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// A homogeneous cubic in `x0..x4`, stored densely in monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicForm {
    coeffs: Vec<Cyclotomic>,
}

impl CubicForm {
    pub fn zero() -> CubicForm {
        CubicForm { coeffs: vec![Cyclotomic::zero(); NCUBICS] }
    }

    pub fn from_vector(coeffs: Vec<Cyclotomic>) -> CubicForm {
        assert_eq!(coeffs.len(), NCUBICS, "a cubic form has 35 coefficients");
        CubicForm { coeffs }
    }

    pub fn monomial(m: &Monomial) -> Result<CubicForm> {
        let i = cubic_index(m).ok_or_else(|| Error::Input(format!("{m} is not a cubic monomial")))?;
        let mut f = CubicForm::zero();
        f.coeffs[i] = Cyclotomic::one();
        Ok(f)
    }

    pub fn as_vector(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclotomic {
        cubic_index(m).map(|i| self.coeffs[i].clone()).unwrap_or_else(Cyclotomic::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Cyclotomic)> {
        cubic_monomials().iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c))
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> [bool; NVARS] {
        let mut s = [false; NVARS];
        for (m, _) in self.terms() {
            for (v, &e) in m.0.iter().enumerate() {
                s[v] |= e > 0;
            }
        }
        s
    }

    pub fn add(&self, other: &CubicForm) -> CubicForm {
        CubicForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Cyclotomic) -> CubicForm {
        CubicForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `F(h x)`: substitutes `x_i ↦ Σ_j h_ij x_j`.
    pub fn substitute(&self, h: &Matrix) -> CubicForm {
        let sub = substitution_matrix(h);
        CubicForm { coeffs: apply(&sub, &self.coeffs) }
    }

    /// The action `(g·F)(x) = F(g⁻¹x)`.
    pub fn act(&self, g: &Matrix) -> Result<CubicForm> {
        Ok(self.substitute(&g.inverse()?))
    }

    /// The Klein cubic `x0*x1^2 + x1*x2^2 + x2*x3^2 + x3*x4^2 + x4*x0^2`.
    pub fn klein() -> CubicForm {
        "x0*x1^2 + x1*x2^2 + x2*x3^2 + x3*x4^2 + x4*x0^2".parse().expect("valid form")
    }

    /// The Fermat cubic `x0^3 + … + x4^3`.
    pub fn fermat() -> CubicForm {
        "x0^3 + x1^3 + x2^3 + x3^3 + x4^3".parse().expect("valid form")
    }
}

/// The 35×35 matrix of `F ↦ F(h x)` on coefficient vectors: column `m` holds
/// the expansion of `m(h x)`.
pub fn substitution_matrix(h: &Matrix) -> Matrix {
    assert!(h.rows() == NVARS && h.cols() == NVARS, "substitution needs a 5×5 matrix");
    let lin = |i: usize| h.row(i);
    // quad[q] = coefficients of (h x)_a (h x)_b over quadrics, for q = x_a x_b
    let mut quads: Vec<Option<Vec<Cyclotomic>>> = vec![None; NQUADRICS];
    let mut out = Matrix::zeros(NCUBICS, NCUBICS);
    for (col, m) in cubic_monomials().iter().enumerate() {
        let f = m.factors();
        let (a, b, c) = (f[0], f[1], f[2]);
        let q = quad_index(a, b);
        if quads[q].is_none() {
            let mut terms: Vec<Vec<(&Cyclotomic, &Cyclotomic)>> = vec![Vec::new(); NQUADRICS];
            for (i, x) in lin(a).iter().enumerate() {
                for (j, y) in lin(b).iter().enumerate() {
                    if !x.is_zero() && !y.is_zero() {
                        terms[quad_index(i, j)].push((x, y));
                    }
                }
            }
            quads[q] = Some(terms.into_iter().map(Cyclotomic::sum_of_products).collect());
        }
        let quad = quads[q].as_ref().expect("filled above");
        let mut terms: Vec<Vec<(&Cyclotomic, &Cyclotomic)>> = vec![Vec::new(); NCUBICS];
        for (qi, x) in quad.iter().enumerate() {
            for (k, y) in lin(c).iter().enumerate() {
                if !x.is_zero() && !y.is_zero() {
                    terms[cubic_from_quad(qi, k)].push((x, y));
                }
            }
        }
        for (row, t) in terms.into_iter().enumerate() {
            if !t.is_empty() {
                out[(row, col)] = Cyclotomic::sum_of_products(t);
            }
        }
    }
    out
}

fn apply(m: &Matrix, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    (0..m.rows())
        .map(|i| Cyclotomic::sum_of_products(m.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero())))
        .collect()
}

fn coefficient_text(c: &Cyclotomic) -> String {
    let s = c.to_string();
    if !s.contains(' ') {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            let term = if c.is_one() {
                m.to_string()
            } else if (-c).is_one() {
                format!("-{m}")
            } else {
                format!("{}*{m}", coefficient_text(c))
            };
            match (first, term.strip_prefix('-')) {
                (true, _) => write!(f, "{term}")?,
                (false, Some(rest)) => write!(f, " - {rest}")?,
                (false, None) => write!(f, " + {term}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

type Poly = BTreeMap<[u32; NVARS], Cyclotomic>;

fn poly_const(c: Cyclotomic) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert([0; NVARS], c);
    }
    p
}

fn poly_add(mut a: Poly, b: Poly, sign: i64) -> Poly {
    for (m, c) in b {
        let c = if sign < 0 { -c } else { c };
        let v = match a.remove(&m) {
            Some(x) => x + c,
            None => c,
        };
        if !v.is_zero() {
            a.insert(m, v);
        }
    }
    a
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = *ma;
            for (x, y) in m.iter_mut().zip(mb) {
                *x += y;
            }
            out = poly_add(out, poly_const(ca * cb).into_values().map(|c| (m, c)).collect(), 1);
        }
    }
    out
}

fn eval_poly(e: &Expr) -> Result<Poly, ExactError> {
    Ok(match e {
        Expr::Int(_) | Expr::Root(_) => poly_const(crate::exact::eval_cyclotomic(e)?),
        Expr::Var(i) => {
            if *i >= NVARS {
                return Err(ExactError::Parse(format!("variable x{i} out of range x0..x4")));
            }
            let mut m = [0; NVARS];
            m[*i] = 1;
            Poly::from([(m, Cyclotomic::one())])
        }
        Expr::Add(a, b) => poly_add(eval_poly(a)?, eval_poly(b)?, 1),
        Expr::Sub(a, b) => poly_add(eval_poly(a)?, eval_poly(b)?, -1),
        Expr::Mul(a, b) => poly_mul(&eval_poly(a)?, &eval_poly(b)?),
        Expr::Div(a, b) => {
            let d = eval_poly(b)?;
            let c = match d.iter().next() {
                None => return Err(ExactError::ZeroDivision),
                Some((m, c)) if d.len() == 1 && *m == [0; NVARS] => c.inv()?,
                _ => return Err(ExactError::Parse("division by a non-constant polynomial".into())),
            };
            poly_mul(&eval_poly(a)?, &poly_const(c))
        }
        Expr::Neg(a) => poly_add(Poly::new(), eval_poly(a)?, -1),
        Expr::Pow(a, k) => {
            let base = eval_poly(a)?;
            let mut acc = poly_const(Cyclotomic::one());
            for _ in 0..*k {
                acc = poly_mul(&acc, &base);
            }
            acc
        }
    })
}

impl FromStr for CubicForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<CubicForm> {
        let poly = eval_poly(&parse_expr(s)?)?;
        let mut f = CubicForm::zero();
        for (e, c) in poly {
            let m = Monomial(e.map(|x| x.min(255) as u8));
            if e.iter().sum::<u32>() != 3 {
                return Err(Error::Input(format!("`{s}` is not homogeneous of degree 3 (term {m})")));
            }
            f.coeffs[cubic_index(&m).expect("degree-3 monomial")] = c;
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str) -> CubicForm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let f = form("x4*x0^2 + x0*x1^2 - 2*x2*x3*x4 + E(3)*x1^3 + (1+E(3))*x2^3");
        assert_eq!(
            f.to_string(),
            "x0^2*x4 + x0*x1^2 + E(3)^1*x1^3 + (1 + E(3)^1)*x2^3 - 2*x2*x3*x4"
        );
        assert_eq!(form(&f.to_string()), f);
        assert_eq!(form("(x0+x1)^3 - x0^3 - x1^3"), form("3*x0^2*x1 + 3*x0*x1^2"));
        assert!("x0^2".parse::<CubicForm>().is_err());
        assert!("x0^3 + x1".parse::<CubicForm>().is_err());
        assert!("x5^3".parse::<CubicForm>().is_err());
        assert_eq!(CubicForm::zero().to_string(), "0");
    }

    #[test]
    fn action_conventions() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let one = Cyclotomic::one;
        let g = Matrix::diag(&[z3.clone(), one(), one(), one(), one()]);
        let x03 = form("x0^3");
        assert_eq!(x03.act(&g).unwrap(), x03);
        assert_eq!(form("x0^2*x1").act(&g).unwrap(), form("E(3)*x0^2*x1"));
        assert_eq!(CubicForm::klein().act(&Matrix::identity(5)).unwrap(), CubicForm::klein());
        let p = Matrix::permutation(&[4, 0, 1, 2, 3]);
        assert_eq!(form("x0*x1^2").act(&p).unwrap(), form("x4*x0^2"));
        assert_eq!(CubicForm::klein().act(&p).unwrap(), CubicForm::klein());
    }

    #[test]
    fn substitution_is_multiplicative() {
        let h = crate::linalg::rational_matrix(&[
            &[1, 2, 0, 0, 0],
            &[0, 1, 0, 0, -1],
            &[3, 0, 1, 0, 0],
            &[0, 0, 0, 1, 1],
            &[0, 1, 0, 0, 1],
        ]);
        let k = Matrix::permutation(&[1, 2, 0, 4, 3]);
        let f = form("x0*x1*x2 + 2*x3^3 - x4*x0^2");
        // F(hk x) = (F∘h)(k x)
        assert_eq!(f.substitute(&h.mul(&k)), f.substitute(&h).substitute(&k));
        assert_eq!(form("(x0 + 2*x1)^2*(3*x0 + x2)"), form("x0^2*x2").substitute(&h));
    }
}
