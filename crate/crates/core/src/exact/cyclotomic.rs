//! Elements of cyclotomic fields `Q(ζ_n)` in the power basis modulo `Φ_n`.
//!
//! Every value carries its own conductor. Mixed operations promote to the
//! least common multiple, and results descend to the smallest conductor whose
//! field contains them, so equal values always have identical representations.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use super::int::Int;
use super::rational::Rational;
use super::ExactError;

/// Per-conductor data: `Φ_n` and the reductions of `x^k` for `0 ≤ k < n`.
#[derive(Debug)]
pub(crate) struct FieldData {
    pub n: u32,
    pub phi: usize,
    pub primes: Vec<u32>,
    pub cyclo_poly: Vec<i64>,
    /// `powers[k]` is `x^k mod Φ_n` as a length-`phi` coefficient vector.
    powers: Vec<Vec<i64>>,
}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<FieldData>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn field(n: u32) -> Arc<FieldData> {
    if let Some(f) = field_cache().read().expect("field cache poisoned").get(&n) {
        return f.clone();
    }
    let data = Arc::new(FieldData::build(n));
    field_cache()
        .write()
        .expect("field cache poisoned")
        .entry(n)
        .or_insert(data)
        .clone()
}

pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u32) -> u32 {
    prime_factors(n).iter().fold(n, |acc, p| acc / p * (p - 1))
}

pub fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

/// Divides integer polynomial `num` by monic `den` (exactly), low degree first.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = poly_div_exact(&poly, &field(d).cyclo_poly);
        }
    }
    poly
}

impl FieldData {
    fn build(n: u32) -> FieldData {
        assert!(n >= 1, "conductor must be positive");
        let cyclo_poly = if n == 1 { vec![-1, 1] } else { cyclotomic_polynomial(n) };
        let phi = cyclo_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow into lower terms
            let lead = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if lead != 0 {
                for j in 0..phi {
                    cur[j] -= lead * cyclo_poly[j];
                }
            }
        }
        FieldData { n, phi, primes: prime_factors(n), cyclo_poly, powers }
    }

    /// Reduces a vector indexed by exponents (taken mod `n`) to the power basis.
    fn reduce(&self, v: &[Int]) -> Vec<Int> {
        let n = self.n as usize;
        let mut out = vec![Int::ZERO; self.phi];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = k % n;
            if k < self.phi {
                out[k] += c;
            } else {
                for (o, &p) in out.iter_mut().zip(&self.powers[k]) {
                    if p != 0 {
                        o.add_mul(c, &Int::from(p));
                    }
                }
            }
        }
        out
    }
}

/// An exact element of `Q(ζ_n)`, stored as `num / den` over the power basis
/// `1, ζ_n, …, ζ_n^{φ(n)-1}` with the smallest possible conductor `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    den: Int,
    num: Vec<Int>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, den: Int::ONE, num: vec![Int::ZERO] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Cyclotomic { conductor: 1, den: Int::ONE, num: vec![Int::from(v)] }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Cyclotomic { conductor: 1, den: r.denom().clone(), num: vec![r.numer().clone()] }
    }

    /// `ζ_n^k`, reduced to its minimal conductor.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity requires n >= 1");
        let f = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Int::ZERO; n as usize];
        v[e] = Int::ONE;
        Self::canonical(n, Int::ONE, f.reduce(&v))
    }

    /// Builds a value from rational coefficients in the power basis of `Q(ζ_n)`.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> Result<Self, ExactError> {
        let f = field(n);
        if coeffs.len() > n as usize {
            return Err(ExactError::Parse(format!(
                "{} coefficients given for conductor {n}",
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(Int::ONE, |acc, c| {
            let g = acc.gcd(c.denom());
            (&acc * c.denom()).div_exact(&g)
        });
        let v: Vec<Int> = coeffs
            .iter()
            .map(|c| c.numer() * &den.div_exact(c.denom()))
            .collect();
        Ok(Self::canonical(n, den, f.reduce(&v)))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients over `Q(ζ_conductor)`, length `φ(conductor)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::reduce(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::reduce(self.num[0].clone(), self.den.clone()))
    }

    /// Whether all power-basis coefficients are integers.
    pub fn has_integral_coeffs(&self) -> bool {
        self.den.is_one()
    }

    pub(crate) fn raw_parts(&self) -> (u32, &Int, &[Int]) {
        (self.conductor, &self.den, &self.num)
    }

    /// Normalizes sign and content, then descends to the minimal conductor.
    fn canonical(n: u32, den: Int, num: Vec<Int>) -> Self {
        let mut x = Self::normalized(n, den, num);
        x.descend();
        x
    }

    fn normalized(n: u32, mut den: Int, mut num: Vec<Int>) -> Self {
        if num.iter().all(Int::is_zero) {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            den = den.div_exact(&g);
            for c in num.iter_mut() {
                *c = c.div_exact(&g);
            }
        }
        Cyclotomic { conductor: n, den, num }
    }

    fn descend(&mut self) {
        'outer: loop {
            if self.conductor == 1 {
                return;
            }
            let f = field(self.conductor);
            for &p in &f.primes {
                if let Some(y) = self.try_descend(&f, p) {
                    *self = y;
                    continue 'outer;
                }
            }
            return;
        }
    }

    /// Tries to express `self` in `Q(ζ_{n/p})`.
    fn try_descend(&self, f: &FieldData, p: u32) -> Option<Cyclotomic> {
        let n = f.n;
        let m = n / p;
        if m.is_multiple_of(p) {
            // Φ_n(x) = Φ_m(x^p): the subfield is spanned by the powers divisible by p.
            if self.num.iter().enumerate().any(|(i, c)| !(i as u32).is_multiple_of(p) && !c.is_zero()) {
                return None;
            }
            let num: Vec<Int> = self.num.iter().step_by(p as usize).cloned().collect();
            return Some(Cyclotomic::normalized(m, self.den.clone(), num));
        }
        if m == 1 {
            if self.num[1..].iter().any(|c| !c.is_zero()) {
                return None;
            }
            return Some(Cyclotomic::normalized(1, self.den.clone(), vec![self.num[0].clone()]));
        }
        // p exactly divides n: project with the relative trace, then check.
        let (alpha, beta) = bezout(p, m);
        let mut v = vec![Int::ZERO; m as usize];
        let pm1 = Int::from((p - 1) as i64);
        let minus_one = Int::from(-1i64);
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = i as i64;
            let u = (i * alpha).rem_euclid(m as i64) as usize;
            let vexp = (i * beta).rem_euclid(p as i64);
            let w = if vexp == 0 { &pm1 } else { &minus_one };
            v[u].add_mul(c, w);
        }
        let g = field(m);
        let y = Cyclotomic::normalized(m, &self.den * &pm1, g.reduce(&v));
        if p == 2 {
            // Q(ζ_{2m}) = Q(ζ_m) for odd m.
            return Some(y);
        }
        let (den, lifted) = y.lift(n);
        let same = den == self.den && lifted == self.num;
        same.then_some(y)
    }

    /// Representation of `self` over the power basis of `Q(ζ_n)` for a multiple `n`
    /// of the conductor (not normalized).
    fn lift(&self, n: u32) -> (Int, Vec<Int>) {
        if n == self.conductor {
            return (self.den.clone(), self.num.clone());
        }
        debug_assert_eq!(n % self.conductor, 0);
        let f = field(n);
        if self.conductor == 1 {
            let mut num = vec![Int::ZERO; f.phi];
            num[0] = self.num[0].clone();
            return (self.den.clone(), num);
        }
        let step = (n / self.conductor) as usize;
        let mut v = vec![Int::ZERO; n as usize];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        (self.den.clone(), f.reduce(&v))
    }

    /// Applies the Galois automorphism `ζ ↦ ζ^k` of `Q(ζ_N)` for any `N`
    /// divisible by the conductor; `k` must be coprime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        let kk = k.rem_euclid(n as i64) as u32;
        assert_eq!(gcd_u32(kk, n), 1, "Galois exponent {k} not coprime to conductor {n}");
        let f = field(n);
        let mut v = vec![Int::ZERO; n as usize];
        for (i, c) in self.num.iter().enumerate() {
            v[(i * kk as usize) % n as usize] = c.clone();
        }
        Cyclotomic::normalized(n, self.den.clone(), f.reduce(&v))
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Cyclotomic {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<Cyclotomic, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDivision);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Cyclotomic::from_rational(&r.recip()?));
        }
        // x^{-1} = (Π_{σ≠1} σ(x)) / N(x)
        let n = self.conductor;
        let mut others = Cyclotomic::one();
        for k in 2..n {
            if gcd_u32(k, n) == 1 {
                others = &others * &self.galois(k as i64);
            }
        }
        let norm = (&others * self)
            .to_rational()
            .expect("field norm of a cyclotomic number is rational");
        Ok(&others * &Cyclotomic::from_rational(&norm.recip()?))
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Cyclotomic::normalized(self.conductor, &self.den * r.denom(), num)
    }

    /// Numerical value in the embedding `ζ_n ↦ exp(2πi/n)`; for display only.
    pub fn approx(&self) -> (f64, f64) {
        let den = int_to_f64(&self.den);
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            let t = std::f64::consts::TAU * k as f64 / self.conductor as f64;
            let c = int_to_f64(c) / den;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    /// `Σ aᵢ·bᵢ` with a single normalization at the end.
    pub fn sum_of_products<'a, I>(terms: I) -> Cyclotomic
    where
        I: IntoIterator<Item = (&'a Cyclotomic, &'a Cyclotomic)>,
    {
        let terms: Vec<_> = terms
            .into_iter()
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .collect();
        if terms.is_empty() {
            return Cyclotomic::zero();
        }
        let n = terms
            .iter()
            .fold(1, |acc, (a, b)| lcm_u32(acc, lcm_u32(a.conductor, b.conductor)));
        let f = field(n);
        let mut acc = Accumulator::new(f.phi);
        for (a, b) in terms {
            let (den, prod) = raw_mul(&f, a, b);
            acc.add(&den, &prod);
        }
        acc.finish(n)
    }

    pub fn sum<'a, I>(terms: I) -> Cyclotomic
    where
        I: IntoIterator<Item = &'a Cyclotomic>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|a| !a.is_zero()).collect();
        if terms.is_empty() {
            return Cyclotomic::zero();
        }
        let n = terms.iter().fold(1, |acc, a| lcm_u32(acc, a.conductor));
        let f = field(n);
        let mut acc = Accumulator::new(f.phi);
        for a in terms {
            let (den, num) = a.lift(n);
            acc.add(&den, &num);
        }
        acc.finish(n)
    }
}

fn int_to_f64(v: &Int) -> f64 {
    match v {
        Int::Small(s) => *s as f64,
        Int::Big(b) => num_traits::ToPrimitive::to_f64(b).unwrap_or(f64::NAN),
    }
}

/// Returns `(α, β)` with `α·p + β·m = 1`.
fn bezout(p: u32, m: u32) -> (i64, i64) {
    let (mut old_r, mut r) = (p as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    debug_assert_eq!(old_r, 1);
    (old_s, old_t)
}

/// Product in `Q(ζ_n)` (with `n` a multiple of both conductors), unnormalized.
fn raw_mul(f: &FieldData, a: &Cyclotomic, b: &Cyclotomic) -> (Int, Vec<Int>) {
    let den = &a.den * &b.den;
    if a.conductor == 1 || b.conductor == 1 {
        let (s, x) = if a.conductor == 1 { (&a.num[0], b) } else { (&b.num[0], a) };
        let (_, lifted) = x.lift(f.n);
        return (den, lifted.iter().map(|c| c * s).collect());
    }
    let (_, an) = a.lift(f.n);
    let (_, bn) = b.lift(f.n);
    let mut prod = vec![Int::ZERO; 2 * f.phi - 1];
    for (i, x) in an.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in bn.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j].add_mul(x, y);
            }
        }
    }
    (den, f.reduce(&prod))
}

/// Running sum of fractions over a fixed power basis.
struct Accumulator {
    den: Int,
    num: Vec<Int>,
}

impl Accumulator {
    fn new(phi: usize) -> Self {
        Accumulator { den: Int::ONE, num: vec![Int::ZERO; phi] }
    }

    fn add(&mut self, den: &Int, num: &[Int]) {
        if *den == self.den {
            for (a, b) in self.num.iter_mut().zip(num) {
                *a += b;
            }
            return;
        }
        let g = self.den.gcd(den);
        let mine = den.div_exact(&g);
        let theirs = self.den.div_exact(&g);
        for (a, b) in self.num.iter_mut().zip(num) {
            *a = &(&*a * &mine) + &(b * &theirs);
        }
        self.den = &self.den * &mine;
    }

    fn finish(self, n: u32) -> Cyclotomic {
        Cyclotomic::canonical(n, self.den, self.num)
    }
}

fn combine(a: &Cyclotomic, b: &Cyclotomic, sign: i64) -> Cyclotomic {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign > 0 { b.clone() } else { -b };
    }
    let n = lcm_u32(a.conductor, b.conductor);
    let (da, na) = a.lift(n);
    let (db, nb) = b.lift(n);
    let s = Int::from(sign);
    let mut acc = Accumulator { den: da, num: na };
    let nb: Vec<Int> = nb.iter().map(|c| c * &s).collect();
    acc.add(&db, &nb);
    acc.finish(n)
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        combine(self, rhs, 1)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        combine(self, rhs, -1)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let n = lcm_u32(self.conductor, rhs.conductor);
        let f = field(n);
        let (den, num) = raw_mul(&f, self, rhs);
        if self.conductor == 1 || rhs.conductor == 1 {
            // scaling cannot change the conductor
            return Cyclotomic::normalized(n, den, num);
        }
        Cyclotomic::canonical(n, den, num)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            den: self.den.clone(),
            num: self.num.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_int(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(&r)
    }
}

impl fmt::Display for Cyclotomic {
    /// Prints the canonical `E(n)^k` encoding, lowest power first,
    /// e.g. `2 - 1/2*E(11)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag == Rational::one() {
                write!(f, "E({})^{k}", self.conductor)?;
            } else {
                write!(f, "{mag}*E({})^{k}", self.conductor)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(field(1).cyclo_poly, vec![-1, 1]);
        assert_eq!(field(3).cyclo_poly, vec![1, 1, 1]);
        assert_eq!(field(4).cyclo_poly, vec![1, 0, 1]);
        assert_eq!(field(6).cyclo_poly, vec![1, -1, 1]);
        assert_eq!(field(12).cyclo_poly, vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(field(105).cyclo_poly.contains(&-2));
        assert_eq!(euler_phi(264), 80);
    }

    #[test]
    fn roots_of_unity_reduce() {
        assert_eq!(z(1, 0), Cyclotomic::one());
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(-1));
        assert_eq!(z(4, 1).pow(2), Cyclotomic::from_int(-1));
        assert_eq!(z(4, 2), Cyclotomic::from_int(-1));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(15, 5), z(3, 1));
        assert_eq!(z(15, 3), z(5, 1));
    }

    #[test]
    fn mixed_conductors() {
        let w = &z(3, 1) * &z(4, 1);
        assert_eq!(w.conductor(), 12);
        assert_eq!(w, z(12, 7));
        let s = Cyclotomic::sum(&[z(5, 1), z(5, 2), z(5, 3), z(5, 4)]);
        assert_eq!(s, Cyclotomic::from_int(-1));
    }

    #[test]
    fn gauss_sum_squares_to_minus_eleven() {
        let mut g = Cyclotomic::one();
        for r in [1, 3, 4, 5, 9] {
            g = &g + &(&z(11, r) * &Cyclotomic::from_int(2));
        }
        assert_eq!(&g * &g, Cyclotomic::from_int(-11));
    }

    #[test]
    fn inverses() {
        assert_eq!(Cyclotomic::from_int(2).inv().unwrap().to_string(), "1/2");
        assert_eq!(z(11, 1).inv().unwrap(), z(11, 10));
        let x = &Cyclotomic::one() + &z(3, 1);
        assert_eq!(x.inv().unwrap(), -z(3, 1));
        assert!(Cyclotomic::zero().inv().is_err());
        let y = &z(15, 2) + &Cyclotomic::from_int(3);
        assert!((&y * &y.inv().unwrap()).is_one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(11, 2).conjugate(), z(11, 9));
        let r = Cyclotomic::from_rational(&Rational::new(3, 7).unwrap());
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn descent_through_prime_square() {
        // ζ_9^3 = ζ_3
        assert_eq!(z(9, 3), z(3, 1));
        let x = &z(9, 3) + &z(9, 6);
        assert_eq!(x, Cyclotomic::from_int(-1));
    }

    #[test]
    fn root_sums_vanish() {
        for n in 2..=66u32 {
            let all: Vec<_> = (0..n as i64).map(|k| z(n, k)).collect();
            assert!(Cyclotomic::sum(&all).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn display_format() {
        let x = &Cyclotomic::from_int(2) - &(&z(11, 3) * &Cyclotomic::from_rational(&Rational::new(1, 2).unwrap()));
        assert_eq!(x.to_string(), "2 - 1/2*E(11)^3");
        assert_eq!(z(3, 2).to_string(), "-1 - E(3)^1");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn element() -> impl Strategy<Value = Cyclotomic> {
            let conductors = prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 9, 11, 12, 15, 20]);
            (conductors, prop::collection::vec((-6i64..=6, 1i64..=4), 1..8)).prop_map(|(n, cs)| {
                let coeffs: Vec<Rational> =
                    cs.into_iter().map(|(a, b)| Rational::new(a, b).unwrap()).collect();
                Cyclotomic::from_coeffs(n, &coeffs[..coeffs.len().min(n as usize)]).unwrap()
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(a in element(), b in element(), c in element()) {
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert!((&a - &a).is_zero());
            }

            #[test]
            fn inverse_and_conjugate(a in element()) {
                prop_assert_eq!(a.conjugate().conjugate(), a.clone());
                if !a.is_zero() {
                    prop_assert!((&a * &a.inv().unwrap()).is_one());
                }
                // x * conj(x) is real
                let n = &a * &a.conjugate();
                prop_assert_eq!(n.conjugate(), n);
            }

            #[test]
            fn canonical_round_trip(a in element()) {
                let back: Cyclotomic = a.to_string().parse().unwrap();
                prop_assert_eq!(back, a.clone());
                prop_assert!(a.conductor() % 4 != 2);
                // passing through a larger field descends back to the same value
                let w = Cyclotomic::root_of_unity(7, 1);
                let lifted = &(&a + &w) - &w;
                prop_assert_eq!(lifted.conductor(), a.conductor());
                prop_assert_eq!(lifted, a);
            }
        }
    }
}
