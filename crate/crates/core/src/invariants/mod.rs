//! Invariant cubic forms of a finite subgroup of GL(5).
//!
//! The action on polynomials is `(g·F)(x) = F(g⁻¹x)`. The invariant space
//! is read off from the group average of the substitution matrices.

mod form;
mod monomial;

use rayon::prelude::*;

pub use form::{substitution_matrix, CubicForm};
pub use monomial::{
    cubic_index, cubic_monomials, monomials_of_degree, quadric_monomials, Monomial, NCUBICS, NVARS,
};

use crate::exact::{Cyclotomic, Rational};
use crate::groups::MatrixGroup;
use crate::linalg::{rank, rref, Matrix};
use crate::{Error, Result};

/// `R = (1/|G|) Σ_g Sub(g)`, the projector onto invariant cubics.
pub fn reynolds_matrix(g: &MatrixGroup) -> Result<Matrix> {
    if g.dim() != NVARS {
        return Err(Error::Input(format!("invariant cubics need 5×5 matrices, got {0}×{0}", g.dim())));
    }
    // Exact sums do not depend on the reduction order.
    let total = g
        .elements()
        .par_iter()
        .map(substitution_matrix)
        .reduce(|| Matrix::zeros(NCUBICS, NCUBICS), |a, b| a.add(&b));
    let inv = Cyclotomic::from_rational(&Rational::new(1, g.order() as i64)?);
    Ok(total.scale(&inv))
}

/// A basis of the invariant cubics, in reduced echelon form with respect
/// to the monomial order.
#[derive(Clone, Debug)]
pub struct InvariantSpace {
    generators: Vec<Matrix>,
    basis: Vec<CubicForm>,
    /// A labelled spanning set whose denominators come only from the group
    /// entries and order (for averaging: the images of pivot monomials).
    spanning: Vec<(String, CubicForm)>,
}

impl InvariantSpace {
    pub fn basis(&self) -> &[CubicForm] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Spanning set used for sampling members, labelled for reports.
    pub fn spanning_set(&self) -> &[(String, CubicForm)] {
        &self.spanning
    }

    /// Builds a space from explicit forms (reduced to echelon form).
    pub fn from_forms(generators: Vec<Matrix>, forms: &[CubicForm]) -> InvariantSpace {
        let basis = echelon_basis(forms.iter().map(|f| f.as_vector().to_vec()).collect());
        let spanning = basis.iter().enumerate().map(|(i, f)| (format!("b{i}"), f.clone())).collect();
        InvariantSpace { generators, basis, spanning }
    }

    /// Whether `f` lies in the span of the basis.
    pub fn contains(&self, f: &CubicForm) -> bool {
        let mut rows: Vec<Vec<Cyclotomic>> = self.basis.iter().map(|b| b.as_vector().to_vec()).collect();
        rows.push(f.as_vector().to_vec());
        rank(&Matrix::from_rows(rows)) == self.dim()
    }

    /// Rechecks `g·F = F` for every generator and basis element.
    pub fn check_invariance(&self) -> Result<()> {
        for (gi, g) in self.generators.iter().enumerate() {
            let sub = substitution_matrix(&g.inverse()?);
            for f in &self.basis {
                if CubicForm::from_vector(apply(&sub, f.as_vector())) != *f {
                    return Err(Error::Inconsistent(format!("generator {gi} moves invariant {f}")));
                }
            }
        }
        Ok(())
    }

    /// Variables occurring in some basis element.
    pub fn variable_support(&self) -> Vec<usize> {
        let mut s = [false; NVARS];
        for f in &self.basis {
            for (a, b) in s.iter_mut().zip(f.support()) {
                *a |= b;
            }
        }
        (0..NVARS).filter(|&i| s[i]).collect()
    }

    /// A coordinate point singular on every member, present when some
    /// variable occurs in no invariant: then each member is a cone over it.
    pub fn cone_point(&self) -> Option<usize> {
        let support = self.variable_support();
        (0..NVARS).find(|i| !support.contains(i))
    }

    /// A variable `x_i` that occurs in the basis only through `x_i^3`.
    ///
    /// A general member is then `c·x_i^3 + G(other variables)`, which carries
    /// the automorphism `x_i ↦ ζ3·x_i`.
    pub fn split_variable(&self) -> Option<usize> {
        (0..NVARS).find(|&i| {
            let mut cube = false;
            for f in &self.basis {
                for (m, _) in f.terms() {
                    match m.exponent(i) {
                        0 => {}
                        3 => cube = true,
                        _ => return false,
                    }
                }
            }
            cube
        })
    }
}

fn apply(m: &Matrix, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    (0..m.rows())
        .map(|i| Cyclotomic::sum_of_products(m.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero())))
        .collect()
}

fn echelon_basis(rows: Vec<Vec<Cyclotomic>>) -> Vec<CubicForm> {
    if rows.is_empty() {
        return Vec::new();
    }
    let e = rref(&Matrix::from_rows(rows));
    (0..e.rank).map(|i| CubicForm::from_vector(e.echelon.row(i).to_vec())).collect()
}

/// The invariant cubics of `g`: the column space of the Reynolds matrix,
/// found from the pivot columns of its echelon form.
pub fn reynolds_basis(g: &MatrixGroup) -> Result<InvariantSpace> {
    let r = reynolds_matrix(g)?;
    let e = rref(&r);
    let cols: Vec<Vec<Cyclotomic>> =
        e.pivots.iter().map(|&j| (0..NCUBICS).map(|i| r[(i, j)].clone()).collect()).collect();
    let spanning = e
        .pivots
        .iter()
        .zip(&cols)
        .map(|(&j, c)| (format!("R({})", cubic_monomials()[j]), CubicForm::from_vector(c.clone())))
        .collect();
    Ok(InvariantSpace { generators: g.generators().to_vec(), basis: echelon_basis(cols), spanning })
}
