use std::fmt;

use crate::exact::{cyclotomic::gcd_u32, Cyclotomic, Rational};
use crate::linalg::Matrix;
use crate::{Error, Result};

use super::matrix_order;

/// Eigenvalue multiset of a finite-order matrix, as exponents of `ζ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigenProfile {
    order: u32,
    multiplicity: Vec<u32>,
}

impl EigenProfile {
    /// Recovers multiplicities from `traces[j] = trace(g^j)`, `0 ≤ j < n`, via
    /// `m_k = (1/n) Σ_j trace(g^j) ζ_n^{-jk}`.
    pub fn from_power_traces(traces: &[Cyclotomic], dim: usize) -> Result<EigenProfile> {
        let n = traces.len() as u32;
        let inv_n = Cyclotomic::from_rational(&Rational::new(1, n as i64)?);
        let mut multiplicity = Vec::with_capacity(n as usize);
        for k in 0..n as i64 {
            let roots: Vec<Cyclotomic> =
                (0..n as i64).map(|j| Cyclotomic::root_of_unity(n, -j * k)).collect();
            let m = &Cyclotomic::sum_of_products(traces.iter().zip(&roots)) * &inv_n;
            let v = m
                .to_rational()
                .and_then(|r| r.to_i64())
                .filter(|&v| v >= 0)
                .ok_or_else(|| Error::Inconsistent(format!("eigenvalue multiplicity {m} at order {n}")))?;
            multiplicity.push(v as u32);
        }
        let total: u32 = multiplicity.iter().sum();
        if total as usize != dim {
            return Err(Error::Inconsistent(format!(
                "eigenvalue multiplicities sum to {total}, expected {dim}"
            )));
        }
        Ok(EigenProfile { order: n, multiplicity })
    }

    /// Builds a profile from explicit exponents of `ζ_n`.
    pub fn from_exponents(order: u32, exponents: &[u32]) -> EigenProfile {
        let mut multiplicity = vec![0; order as usize];
        for &k in exponents {
            multiplicity[(k % order) as usize] += 1;
        }
        EigenProfile { order, multiplicity }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn multiplicity(&self, k: u32) -> u32 {
        self.multiplicity[(k % self.order) as usize]
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicity
    }

    pub fn dim(&self) -> u32 {
        self.multiplicity.iter().sum()
    }

    /// Eigenvalues as reduced fractions `a/b` (meaning `exp(2πi a/b)`), sorted,
    /// so profiles of different stated orders compare meaningfully.
    pub fn fractions(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (k, &m) in self.multiplicity.iter().enumerate() {
            let g = gcd_u32(k as u32, self.order);
            let frac = if k == 0 { (0, 1) } else { (k as u32 / g, self.order / g) };
            out.extend(std::iter::repeat_n(frac, m as usize));
        }
        out.sort_unstable();
        out
    }

    /// The profile of `g^j`, for `j` coprime to the order.
    pub fn galois_twist(&self, j: i64) -> EigenProfile {
        let n = self.order as i64;
        let mut multiplicity = vec![0; self.order as usize];
        for (k, &m) in self.multiplicity.iter().enumerate() {
            multiplicity[(k as i64 * j).rem_euclid(n) as usize] += m;
        }
        EigenProfile { order: self.order, multiplicity }
    }

    pub fn eigenvalues(&self) -> Vec<Cyclotomic> {
        let mut out = Vec::new();
        for (k, &m) in self.multiplicity.iter().enumerate() {
            for _ in 0..m {
                out.push(Cyclotomic::root_of_unity(self.order, k as i64));
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        Cyclotomic::sum(&self.eigenvalues())
    }

    /// Product of the eigenvalues.
    pub fn determinant(&self) -> Cyclotomic {
        let e: u64 = self.multiplicity.iter().enumerate().map(|(k, &m)| k as u64 * m as u64).sum();
        Cyclotomic::root_of_unity(self.order, (e % self.order as u64) as i64)
    }

    /// One eigenvalue of multiplicity `dim - 1`, the remaining one differing
    /// from it by a primitive cube root of unity. Up to a scalar this is
    /// `Diag(ζ3, 1, …, 1)`.
    pub fn is_cyclic_cubic_type(&self) -> bool {
        let n = self.order;
        if !n.is_multiple_of(3) {
            return false;
        }
        let dim = self.dim();
        let Some(big) = self.multiplicity.iter().position(|&m| m == dim - 1) else {
            return false;
        };
        let third = n / 3;
        [third, 2 * third]
            .iter()
            .any(|&d| self.multiplicity[((big as u32 + d) % n) as usize] == 1)
    }
}

impl fmt::Display for EigenProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .fractions()
            .iter()
            .map(|&(a, b)| if a == 0 { "1".to_string() } else { format!("E({b})^{a}") })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Eigenvalue profile of a single matrix of finite order at most `bound`.
pub fn eigen_profile_of_matrix(g: &Matrix, bound: u32) -> Result<EigenProfile> {
    let n = matrix_order(g, bound).ok_or(Error::NotFinite { index: 0, bound })?;
    let mut traces = Vec::with_capacity(n as usize);
    let mut x = Matrix::identity(g.rows());
    for _ in 0..n {
        traces.push(x.trace());
        x = x.mul(g);
    }
    EigenProfile::from_power_traces(&traces, g.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn diagonal_profiles() {
        let one = Cyclotomic::one;
        let m = one();
        let g = Matrix::diag(&[-&m, -&m, one(), one(), one()]);
        let p = eigen_profile_of_matrix(&g, 100).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p.multiplicities(), &[3, 2]);
        let g = Matrix::diag(&[one(), z(5, 1), z(5, 2), z(5, 3), z(5, 4)]);
        let p = eigen_profile_of_matrix(&g, 100).unwrap();
        assert_eq!(p.multiplicities(), &[1, 1, 1, 1, 1]);
        assert_eq!(p.determinant(), one());
        assert_eq!(p.trace(), g.trace());
    }

    #[test]
    fn order_three_profile() {
        let one = Cyclotomic::one;
        let g = Matrix::diag(&[one(), z(3, 1), z(3, 1), z(3, 2), z(3, 2)]);
        let p = eigen_profile_of_matrix(&g, 100).unwrap();
        assert_eq!(p.multiplicities(), &[1, 2, 2]);
        assert_eq!(p.trace(), Cyclotomic::from_int(-1));
        assert_eq!(p.galois_twist(2), p);
    }

    #[test]
    fn cyclic_type_detection() {
        assert!(EigenProfile::from_exponents(3, &[1, 0, 0, 0, 0]).is_cyclic_cubic_type());
        // ζ3·Diag(ζ3, 1, 1, 1, 1) = Diag(ζ3², ζ3, ζ3, ζ3, ζ3)
        assert!(EigenProfile::from_exponents(3, &[2, 1, 1, 1, 1]).is_cyclic_cubic_type());
        // Diag(-1, ζ6, ζ6, ζ6, ζ6) = ζ6·Diag(ζ3, 1, 1, 1, 1)
        assert!(EigenProfile::from_exponents(6, &[3, 1, 1, 1, 1]).is_cyclic_cubic_type());
        assert!(!EigenProfile::from_exponents(6, &[2, 1, 1, 1, 1]).is_cyclic_cubic_type());
        assert!(!EigenProfile::from_exponents(3, &[1, 1, 0, 0, 0]).is_cyclic_cubic_type());
        assert!(!EigenProfile::from_exponents(2, &[1, 0, 0, 0, 0]).is_cyclic_cubic_type());
    }
}
