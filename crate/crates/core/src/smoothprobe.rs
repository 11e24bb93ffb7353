//! Smoothness of invariant cubics by reduction to a prime field.
//!
//! A member reduced mod `p` that is smooth over the algebraic closure of
//! `F_p` lifts to a smooth member in characteristic zero, so a smooth sample
//! proves the family is nonempty. Failure to find one proves nothing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::cyclotomic::lcm_u32;
use crate::exact::{Cyclotomic, Int, Rational};
use crate::invariants::{cubic_monomials, quadric_monomials, monomials_of_degree, CubicForm, InvariantSpace, Monomial, NCUBICS, NVARS};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 20_250_611;
pub const DEFAULT_TRIALS: usize = 16;
/// Largest prime tried when choosing one automatically.
pub const DEFAULT_PRIME_CAP: u64 = 31;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn multiplicative_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

/// A ring homomorphism `Z[ζ_n][1/d] → F_p` sending `ζ_n` to an element of
/// order exactly `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReduction {
    pub prime: u64,
    pub conductor: u32,
    pub zeta_image: u64,
}

impl PrimeReduction {
    /// Uses the smallest primitive root mod `p` to pick the image of `ζ_n`.
    pub fn new(prime: u64, conductor: u32) -> Result<PrimeReduction> {
        let bad = |reason: &str| Error::BadPrime { p: prime, reason: reason.into() };
        if !is_prime(prime) {
            return Err(bad("not prime"));
        }
        if prime == 3 || prime < 5 {
            return Err(bad("the singularity test needs p > 3"));
        }
        if prime > 1 << 20 {
            return Err(bad("too large for an exhaustive point scan"));
        }
        let n = conductor as u64;
        if !(prime - 1).is_multiple_of(n) {
            return Err(bad(&format!("no element of order {n} in F_{prime}")));
        }
        let root = (2..prime)
            .find(|&g| multiplicative_order(g, prime) == prime - 1)
            .expect("a prime field has a primitive root");
        let zeta_image = pow_mod(root, (prime - 1) / n, prime);
        debug_assert_eq!(multiplicative_order(zeta_image, prime), n.max(1));
        Ok(PrimeReduction { prime, conductor, zeta_image })
    }

    /// Smallest prime `p ≥ 7` up to the cap with `n | p - 1`.
    pub fn default_for(conductor: u32) -> Result<PrimeReduction> {
        (7..=DEFAULT_PRIME_CAP)
            .filter(|&p| is_prime(p) && (p - 1) % conductor as u64 == 0)
            .map(|p| PrimeReduction::new(p, conductor))
            .next()
            .unwrap_or_else(|| {
                Err(Error::BadPrime {
                    p: 0,
                    reason: format!("no prime up to {DEFAULT_PRIME_CAP} is 1 mod {conductor}"),
                })
            })
    }

    pub fn reduce_number(&self, x: &Cyclotomic) -> Result<u64> {
        let (m, den, num) = x.raw_parts();
        let p = self.prime;
        if !self.conductor.is_multiple_of(m) {
            return Err(Error::BadPrime {
                p,
                reason: format!("E({m}) is not in the field of E({})", self.conductor),
            });
        }
        let d = den.rem_u64(p);
        if d == 0 {
            return Err(Error::BadPrime { p, reason: format!("denominator of {x} vanishes") });
        }
        let z = pow_mod(self.zeta_image, (self.conductor / m) as u64, p);
        let mut acc = 0;
        let mut zk = 1;
        for c in num {
            acc = (acc + c.rem_u64(p) * zk) % p;
            zk = zk * z % p;
        }
        Ok(acc * inv_mod(d, p) % p)
    }

    /// `f` itself, or `d·f` with `d` the common denominator of its
    /// coefficients when `p` divides that denominator. Either way the
    /// result stays in the span of `f` and has a reduction mod `p`.
    pub fn integral_multiple(&self, f: &CubicForm) -> CubicForm {
        let mut d = Int::ONE;
        for c in f.as_vector() {
            let (_, den, _) = c.raw_parts();
            d = (&d * den).div_exact(&d.gcd(den));
        }
        if d.rem_u64(self.prime) == 0 {
            f.scale(&Cyclotomic::from_rational(&Rational::from_int(d)))
        } else {
            f.clone()
        }
    }

    pub fn reduce(&self, f: &CubicForm) -> Result<ReducedCubic> {
        let mut coeffs = [0; NCUBICS];
        for (c, x) in coeffs.iter_mut().zip(f.as_vector()) {
            *c = self.reduce_number(x)?;
        }
        Ok(ReducedCubic { prime: self.prime, coeffs })
    }
}

/// Smallest common field for all coefficients of the given forms.
pub fn conductor_of(forms: &[CubicForm]) -> u32 {
    forms.iter().flat_map(|f| f.as_vector()).fold(1, |n, c| lcm_u32(n, c.conductor()))
}

/// A cubic form over `F_p`, coefficients in monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCubic {
    pub prime: u64,
    pub coeffs: [u64; NCUBICS],
}

fn index_of(list: &[Monomial], m: &Monomial) -> usize {
    list.iter().position(|x| x == m).expect("monomial present")
}

impl ReducedCubic {
    /// The five partial derivatives, as quadrics in monomial order.
    pub fn gradient(&self) -> [[u64; 15]; NVARS] {
        let p = self.prime;
        let quads = quadric_monomials();
        let mut out = [[0; 15]; NVARS];
        for (m, &c) in cubic_monomials().iter().zip(&self.coeffs) {
            for i in 0..NVARS {
                let e = m.exponent(i) as u64;
                if e > 0 && c != 0 {
                    let mut q = *m;
                    q.0[i] -= 1;
                    let k = index_of(quads, &q);
                    out[i][k] = (out[i][k] + c * e) % p;
                }
            }
        }
        out
    }

    /// Whether all partial derivatives vanish at `x`.
    pub fn is_singular_at(&self, x: &[u64; NVARS]) -> bool {
        let p = self.prime;
        let mut grad = [0u64; NVARS];
        for (m, &c) in FACTORS.get_or_init(factor_table).iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let [a, b, d] = *m;
            let (xa, xb, xd) = (x[a], x[b], x[d]);
            grad[a] = (grad[a] + c * (xb * xd % p)) % p;
            grad[b] = (grad[b] + c * (xa * xd % p)) % p;
            grad[d] = (grad[d] + c * (xa * xb % p)) % p;
        }
        grad.iter().all(|&g| g == 0)
    }

    /// Exhaustive search of `P^4(F_p)` for a singular point; the one with
    /// the lowest enumeration index is returned.
    pub fn singular_scan(&self) -> Option<[u64; NVARS]> {
        let n = point_count(self.prime);
        (0..n)
            .into_par_iter()
            .map(|i| point(self.prime, i))
            .find_first(|x| self.is_singular_at(x))
    }

    /// Smoothness over the algebraic closure: the partials have no common
    /// zero iff together they span all sextics (350 products onto 210
    /// monomials).
    pub fn is_geometrically_smooth(&self) -> bool {
        let p = self.prime;
        let quads = quadric_monomials();
        let quartics = monomials_of_degree(4);
        let sextics = monomials_of_degree(6);
        let mut rows = Vec::with_capacity(NVARS * quartics.len());
        for q in self.gradient() {
            for m in &quartics {
                let mut row = vec![0u64; sextics.len()];
                for (k, &c) in q.iter().enumerate() {
                    if c != 0 {
                        row[index_of(&sextics, &quads[k].mul(m))] = c;
                    }
                }
                rows.push(row);
            }
        }
        rank_mod_p(rows, p) == sextics.len()
    }
}

static FACTORS: std::sync::OnceLock<Vec<[usize; 3]>> = std::sync::OnceLock::new();

fn factor_table() -> Vec<[usize; 3]> {
    cubic_monomials()
        .iter()
        .map(|m| {
            let f = m.factors();
            [f[0], f[1], f[2]]
        })
        .collect()
}

/// Number of points of `P^4(F_p)`.
pub fn point_count(p: u64) -> u64 {
    (p.pow(5) - 1) / (p - 1)
}

/// The `i`-th normalized point: points whose first nonzero coordinate is
/// `x_0 = 1` come first, then `x_1`, and so on.
pub fn point(p: u64, mut i: u64) -> [u64; NVARS] {
    let mut x = [0; NVARS];
    for lead in 0..NVARS {
        let free = (NVARS - lead - 1) as u32;
        let block = p.pow(free);
        if i < block {
            x[lead] = 1;
            for v in x[lead + 1..].iter_mut().rev() {
                *v = i % p;
                i /= p;
            }
            return x;
        }
        i -= block;
    }
    panic!("point index out of range");
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = inv_mod(rows[rank][c], p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (v, &q) in row.iter_mut().zip(&pivot) {
                    *v = (*v + p - f * q % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A smooth member found by sampling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub prime: u64,
    pub zeta_image: u64,
    pub seed: u64,
    /// 1-based index of the certifying sample.
    pub trial: usize,
    /// Coefficients in `0..p` of the spanning forms named in `forms`.
    pub coefficients: Vec<u64>,
    pub forms: Vec<String>,
    pub points_scanned: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ProbeOutcome {
    NonEmptyCertified(Certificate),
    Inconclusive { primes: Vec<u64>, seed: u64, trials: usize },
}

#[derive(Clone, Debug)]
pub struct ProbeConfig {
    pub trials: usize,
    pub seed: u64,
    /// Empty means: choose the default prime for the basis conductor.
    pub primes: Vec<u64>,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { trials: DEFAULT_TRIALS, seed: DEFAULT_SEED, primes: Vec::new() }
    }
}

/// Samples random members of the invariant family over `F_p` and looks for
/// one that is smooth over the algebraic closure. Members are combinations
/// of the space's spanning set, which avoids the extra denominators that
/// echelon normalization can introduce.
pub fn probe_nonempty(space: &InvariantSpace, config: &ProbeConfig) -> Result<ProbeOutcome> {
    if space.dim() == 0 {
        return Err(Error::Input("cannot probe an empty invariant space".into()));
    }
    let spanning: Vec<CubicForm> = space.spanning_set().iter().map(|(_, f)| f.clone()).collect();
    let n = conductor_of(&spanning);
    let reductions = if config.primes.is_empty() {
        vec![PrimeReduction::default_for(n)?]
    } else {
        config.primes.iter().map(|&p| PrimeReduction::new(p, n)).collect::<Result<Vec<_>>>()?
    };
    for r in &reductions {
        let p = r.prime;
        let basis = spanning
            .iter()
            .map(|f| r.reduce(&r.integral_multiple(f)))
            .collect::<Result<Vec<_>>>()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for trial in 1..=config.trials {
            let coefficients: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
            let mut member = ReducedCubic { prime: p, coeffs: [0; NCUBICS] };
            for (b, &c) in basis.iter().zip(&coefficients) {
                for (m, &x) in member.coeffs.iter_mut().zip(&b.coeffs) {
                    *m = (*m + c * x) % p;
                }
            }
            if !member.is_geometrically_smooth() {
                continue;
            }
            if let Some(x) = member.singular_scan() {
                return Err(Error::Inconsistent(format!(
                    "member with nonvanishing resultant is singular at {x:?} over F_{p}"
                )));
            }
            return Ok(ProbeOutcome::NonEmptyCertified(Certificate {
                prime: p,
                zeta_image: r.zeta_image,
                seed: config.seed,
                trial,
                coefficients,
                forms: space.spanning_set().iter().map(|(l, _)| l.clone()).collect(),
                points_scanned: point_count(p),
            }));
        }
    }
    Ok(ProbeOutcome::Inconclusive {
        primes: reductions.iter().map(|r| r.prime).collect(),
        seed: config.seed,
        trials: config.trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(PrimeReduction::default_for(1).unwrap().prime, 7);
        let r = PrimeReduction::default_for(3).unwrap();
        assert_eq!((r.prime, r.zeta_image), (7, 2));
        assert_eq!(PrimeReduction::default_for(11).unwrap().prime, 23);
        assert_eq!(PrimeReduction::default_for(4).unwrap().prime, 13);
        assert!(PrimeReduction::default_for(20).is_err());
        assert!(PrimeReduction::new(13, 5).is_err());
        assert!(PrimeReduction::new(3, 1).is_err());
    }

    #[test]
    fn reduction_is_a_homomorphism() {
        let r = PrimeReduction::new(31, 15).unwrap();
        let a: Cyclotomic = "1/2 + E(5)^2 - 3*E(3)".parse().unwrap();
        let b: Cyclotomic = "E(15)^7 + 2/7".parse().unwrap();
        let red = |x: &Cyclotomic| r.reduce_number(x).unwrap();
        assert_eq!(red(&(&a * &b)), red(&a) * red(&b) % 31);
        assert_eq!(red(&(&a + &b)), (red(&a) + red(&b)) % 31);
        assert!(r.reduce_number(&"1/31".parse().unwrap()).is_err());
    }

    #[test]
    fn point_enumeration() {
        let p = 5;
        let pts: Vec<_> = (0..point_count(p)).map(|i| point(p, i)).collect();
        assert_eq!(pts.len(), 781);
        assert_eq!(pts[0], [1, 0, 0, 0, 0]);
        assert_eq!(pts[780], [0, 0, 0, 0, 1]);
        let distinct: std::collections::HashSet<_> = pts.iter().collect();
        assert_eq!(distinct.len(), 781);
    }

    #[test]
    fn fermat_and_cone() {
        let r = PrimeReduction::new(7, 1).unwrap();
        let f = r.reduce(&CubicForm::fermat()).unwrap();
        assert_eq!(f.singular_scan(), None);
        assert!(f.is_geometrically_smooth());
        let cone = r.reduce(&"x0^3 + x1^3 + x3*x4^2 + x0*x1*x3".parse().unwrap()).unwrap();
        assert!(cone.is_singular_at(&[0, 0, 1, 0, 0]));
        assert!(cone.singular_scan().is_some());
        assert!(!cone.is_geometrically_smooth());
    }

    #[test]
    fn singular_only_over_an_extension() {
        let r = PrimeReduction::new(7, 1).unwrap();
        // Singular where x2 = x3 = x4 = 0 and x0^2 = 3*x1^2; 3 is not a
        // square mod 7, so the singular points live over F_49.
        let f = r.reduce(&"x0^2*x2 - 3*x1^2*x2 + x2^3 + x3^3 + x4^3".parse().unwrap()).unwrap();
        assert_eq!(f.singular_scan(), None);
        assert!(!f.is_geometrically_smooth());
    }
}
