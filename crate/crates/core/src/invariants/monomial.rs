use std::fmt;
use std::sync::OnceLock;

pub const NVARS: usize = 5;
pub const NCUBICS: usize = 35;
pub const NQUADRICS: usize = 15;

/// A monomial in `x0..x4`, stored as its exponent vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u8; NVARS]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exponent(&self, var: usize) -> u8 {
        self.0[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    /// Variables with multiplicity, ascending: `x0 x1^2` gives `[0, 1, 1]`.
    pub fn factors(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(i, e as usize));
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials of degree `d`, in graded-lex order (x0 > x1 > … , so `x0^d` first).
pub fn monomials_of_degree(d: u8) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = [0u8; NVARS];
    fn rec(i: usize, left: u8, e: &mut [u8; NVARS], out: &mut Vec<Monomial>) {
        if i == NVARS - 1 {
            e[i] = left;
            out.push(Monomial(*e));
            return;
        }
        for k in (0..=left).rev() {
            e[i] = k;
            rec(i + 1, left - k, e, out);
        }
    }
    rec(0, d, &mut e, &mut out);
    out
}

struct Tables {
    cubics: Vec<Monomial>,
    quadrics: Vec<Monomial>,
    /// `quad_of[i][j]` is the index of `x_i x_j`.
    quad_of: [[usize; NVARS]; NVARS],
    /// `cubic_of[q][k]` is the index of `quadric q · x_k`.
    cubic_of: [[usize; NVARS]; NQUADRICS],
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let cubics = monomials_of_degree(3);
        let quadrics = monomials_of_degree(2);
        let pos = |list: &[Monomial], m: Monomial| list.iter().position(|x| *x == m).expect("monomial");
        let mut quad_of = [[0; NVARS]; NVARS];
        for i in 0..NVARS {
            for j in 0..NVARS {
                quad_of[i][j] = pos(&quadrics, Monomial::var(i).mul(&Monomial::var(j)));
            }
        }
        let mut cubic_of = [[0; NVARS]; NQUADRICS];
        for (q, m) in quadrics.iter().enumerate() {
            for k in 0..NVARS {
                cubic_of[q][k] = pos(&cubics, m.mul(&Monomial::var(k)));
            }
        }
        Tables { cubics, quadrics, quad_of, cubic_of }
    })
}

/// The 35 cubic monomials; index 0 is `x0^3`, index 34 is `x4^3`.
pub fn cubic_monomials() -> &'static [Monomial] {
    &tables().cubics
}

pub fn quadric_monomials() -> &'static [Monomial] {
    &tables().quadrics
}

pub fn cubic_index(m: &Monomial) -> Option<usize> {
    tables().cubics.iter().position(|x| x == m)
}

pub fn quad_index(i: usize, j: usize) -> usize {
    tables().quad_of[i][j]
}

pub fn cubic_from_quad(q: usize, k: usize) -> usize {
    tables().cubic_of[q][k]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let c = cubic_monomials();
        assert_eq!(c.len(), NCUBICS);
        assert_eq!(quadric_monomials().len(), NQUADRICS);
        assert_eq!(c[0].to_string(), "x0^3");
        assert_eq!(c[1].to_string(), "x0^2*x1");
        assert_eq!(c[34].to_string(), "x4^3");
        assert!(c.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(c[cubic_from_quad(quad_index(2, 3), 4)].to_string(), "x2*x3*x4");
    }
}
