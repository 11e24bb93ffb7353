//! Class functions, symmetric powers and inner products.

mod datum;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use datum::{CharacterTable, CharacterTableFile, ClassSpec};

use crate::exact::{Cyclotomic, Rational};
use crate::groups::{EigenProfile, MatrixGroup};
use crate::{Error, Result};

/// Conjugacy-class data needed to evaluate character formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassStructure {
    pub group_order: usize,
    pub labels: Vec<String>,
    pub sizes: Vec<usize>,
    pub orders: Vec<u32>,
    /// `power_maps[p][c]` is the class of `g^p` for `g` in class `c`.
    pub power_maps: BTreeMap<u32, Vec<usize>>,
}

impl ClassStructure {
    pub fn of_group(g: &MatrixGroup) -> ClassStructure {
        let classes = g.classes();
        let mut power_maps = BTreeMap::new();
        for p in [2u32, 3, 5] {
            power_maps.insert(p, classes.iter().map(|c| c.power(p).expect("power class")).collect());
        }
        ClassStructure {
            group_order: g.order(),
            labels: classes.iter().map(|c| c.label.clone()).collect(),
            sizes: classes.iter().map(|c| c.size()).collect(),
            orders: classes.iter().map(|c| c.element_order).collect(),
            power_maps,
        }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn identity_class(&self) -> usize {
        self.orders.iter().position(|&o| o == 1).expect("identity class present")
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Checks sizes against the group order and power maps against orders.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        if self.labels.len() != n || self.orders.len() != n {
            return Err(Error::Input("class data of unequal lengths".into()));
        }
        let total: usize = self.sizes.iter().sum();
        if total != self.group_order {
            return Err(Error::Inconsistent(format!(
                "class sizes sum to {total}, group order is {}",
                self.group_order
            )));
        }
        if let Some(c) = self.sizes.iter().position(|&s| s == 0 || !self.group_order.is_multiple_of(s)) {
            return Err(Error::Inconsistent(format!("class {} size does not divide the order", self.labels[c])));
        }
        let id = self.identity_class();
        for (&p, map) in &self.power_maps {
            if map.len() != n || map.iter().any(|&c| c >= n) {
                return Err(Error::Input(format!("power map {p} has wrong shape")));
            }
            if map[id] != id {
                return Err(Error::Inconsistent(format!("power map {p} moves the identity class")));
            }
            for c in 0..n {
                let o = self.orders[c];
                let expected = o / crate::exact::cyclotomic::gcd_u32(o, p);
                if self.orders[map[c]] != expected {
                    return Err(Error::Inconsistent(format!(
                        "power map {p} sends {} (order {o}) to order {}",
                        self.labels[c], self.orders[map[c]]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The class of `g^j` for `g` in class `c`, together with a Galois exponent
    /// `u`: the value of a character on `g^j` is `σ_u` applied to its value on
    /// the returned class. Primes without a stored power map are handled by
    /// Galois action when they are coprime to the element order.
    pub fn power_class(&self, mut c: usize, mut j: u64) -> Result<(usize, i64)> {
        let mut u: i64 = 1;
        loop {
            let ord = self.orders[c] as u64;
            j %= ord;
            if j == 0 {
                return Ok((self.identity_class(), 1));
            }
            if j == 1 {
                return Ok((c, u.rem_euclid(ord as i64)));
            }
            let p = smallest_prime_factor(j) as u32;
            if let Some(map) = self.power_maps.get(&p) {
                c = map[c];
            } else if !ord.is_multiple_of(p as u64) {
                u = (u * p as i64) % ord as i64;
            } else {
                return Err(Error::MissingPowerMap(p));
            }
            j /= p as u64;
        }
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..).take_while(|d| d * d <= n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

/// A class-indexed vector of cyclotomic values.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    structure: Arc<ClassStructure>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(structure: Arc<ClassStructure>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != structure.len() {
            return Err(Error::Input(format!(
                "{} values for {} classes",
                values.len(),
                structure.len()
            )));
        }
        Ok(ClassFunction { structure, values })
    }

    pub fn trivial(structure: Arc<ClassStructure>) -> Self {
        let values = vec![Cyclotomic::one(); structure.len()];
        ClassFunction { structure, values }
    }

    pub fn structure(&self) -> &Arc<ClassStructure> {
        &self.structure
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[self.structure.identity_class()]
    }

    fn same_group(&self, other: &ClassFunction) -> bool {
        Arc::ptr_eq(&self.structure, &other.structure) || self.structure == other.structure
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.same_group(other) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Value on `g^j` for `g` in class `c`.
    pub fn value_at_power(&self, c: usize, j: u64) -> Result<Cyclotomic> {
        let (d, u) = self.structure.power_class(c, j)?;
        Ok(self.values[d].galois(u))
    }

    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { structure: self.structure.clone(), values })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { structure: self.structure.clone(), values })
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        let k = Cyclotomic::from_int(k);
        ClassFunction {
            structure: self.structure.clone(),
            values: self.values.iter().map(|v| v * &k).collect(),
        }
    }

    /// Character of the second or third symmetric power.
    pub fn sym_power(&self, k: u32) -> Result<ClassFunction> {
        let mut values = Vec::with_capacity(self.values.len());
        for (c, x) in self.values.iter().enumerate() {
            let x2 = self.value_at_power(c, 2)?;
            let v = match k {
                2 => &(&(x * x) + &x2) * &half(),
                3 => {
                    let x3 = self.value_at_power(c, 3)?;
                    let terms = [
                        &(x * x) * x,
                        &(x * &x2) * &Cyclotomic::from_int(3),
                        &x3 * &Cyclotomic::from_int(2),
                    ];
                    &Cyclotomic::sum(&terms) * &Cyclotomic::from_rational(&Rational::new(1, 6)?)
                }
                _ => return Err(Error::Input(format!("symmetric power {k} is not supported"))),
            };
            values.push(v);
        }
        Ok(ClassFunction { structure: self.structure.clone(), values })
    }

    /// Determinant character of a genuine character, from the eigenvalue
    /// profile that the character values of powers determine.
    pub fn determinant_from_values(&self) -> Result<ClassFunction> {
        let dim = self
            .degree()
            .to_rational()
            .and_then(|r| r.to_i64())
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::NonIntegral(format!("degree {}", self.degree())))?;
        let mut values = Vec::with_capacity(self.values.len());
        for c in 0..self.values.len() {
            let n = self.structure.orders[c];
            let traces: Vec<Cyclotomic> =
                (0..n as u64).map(|j| self.value_at_power(c, j)).collect::<Result<_>>()?;
            values.push(EigenProfile::from_power_traces(&traces, dim as usize)?.determinant());
        }
        Ok(ClassFunction { structure: self.structure.clone(), values })
    }

    /// `(1/|G|) Σ_C |C| a(C) conj(b(C))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<InnerProduct> {
        self.check_same(other)?;
        let weights: Vec<Cyclotomic> =
            self.structure.sizes.iter().map(|&s| Cyclotomic::from_int(s as i64)).collect();
        let terms: Vec<Cyclotomic> = self
            .values
            .iter()
            .zip(&other.values)
            .zip(&weights)
            .map(|((a, b), w)| &(a * &b.conjugate()) * w)
            .collect();
        let order = Rational::new(1, self.structure.group_order as i64)?;
        Ok(InnerProduct { value: &Cyclotomic::sum(&terms) * &Cyclotomic::from_rational(&order) })
    }

    pub fn norm(&self) -> Result<InnerProduct> {
        self.inner_product(self)
    }
}

fn half() -> Cyclotomic {
    Cyclotomic::from_rational(&Rational::new(1, 2).expect("nonzero"))
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .structure
            .labels
            .iter()
            .zip(&self.values)
            .map(|(l, v)| format!("{l}: {v}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Result of an inner product of class functions. For two characters this is
/// a nonnegative integer; anything else signals corrupted class data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProduct {
    pub value: Cyclotomic,
}

impl InnerProduct {
    pub fn as_rational(&self) -> Option<Rational> {
        self.value.to_rational()
    }

    pub fn is_count(&self) -> bool {
        self.count().is_ok()
    }

    pub fn count(&self) -> Result<u64> {
        self.as_rational()
            .and_then(|r| r.to_i64())
            .and_then(|v| u64::try_from(v).ok())
            .ok_or_else(|| Error::NonIntegral(self.value.to_string()))
    }
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `values[c]` is the trace of the representative of class `c`.
pub fn character_of(g: &MatrixGroup) -> ClassFunction {
    let structure = Arc::new(ClassStructure::of_group(g));
    ClassFunction { structure, values: g.class_traces().to_vec() }
}

/// Determinants of class representatives, cross-checked against the
/// determinant derived from eigenvalue profiles.
pub fn det_character(g: &MatrixGroup, chi: &ClassFunction) -> Result<ClassFunction> {
    let mut values = Vec::with_capacity(g.classes().len());
    for class in g.classes() {
        let direct = g.element(class.representative).determinant();
        let via_profile = g.eigen_profile(class.representative)?.determinant();
        if direct != via_profile {
            return Err(Error::Inconsistent(format!(
                "determinant of class {}: {direct} directly, {via_profile} from eigenvalues",
                class.label
            )));
        }
        values.push(direct);
    }
    ClassFunction::new(chi.structure.clone(), values)
}

/// `⟨S³χ, 1⟩`, the dimension of the invariant cubic forms.
pub fn dim_invariant_cubics(chi: &ClassFunction) -> Result<u64> {
    let triv = ClassFunction::trivial(chi.structure.clone());
    chi.sym_power(3)?.inner_product(&triv)?.count()
}

/// `⟨S²(det χ ⊗ χ), 1⟩`.
pub fn dim_special_subvariety(chi: &ClassFunction, det: &ClassFunction) -> Result<u64> {
    let triv = ClassFunction::trivial(chi.structure.clone());
    det.tensor(chi)?.sym_power(2)?.inner_product(&triv)?.count()
}

/// Finds a bijection from the classes of `a` to those of `b` that preserves
/// element orders, class sizes, the given values and common power maps.
pub fn match_classes(a: &ClassFunction, b: &ClassFunction) -> Option<Vec<usize>> {
    let (sa, sb) = (&a.structure, &b.structure);
    if sa.len() != sb.len() || sa.group_order != sb.group_order {
        return None;
    }
    let n = sa.len();
    let ok = |i: usize, j: usize| {
        sa.orders[i] == sb.orders[j] && sa.sizes[i] == sb.sizes[j] && a.values[i] == b.values[j]
    };
    let power_ok = |assign: &[usize]| {
        sa.power_maps.iter().all(|(p, ma)| match sb.power_maps.get(p) {
            Some(mb) => (0..n).all(|i| assign[ma[i]] == mb[assign[i]]),
            None => true,
        })
    };
    let mut found = None;
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    bijections(n, &ok, &mut cur, &mut used, &mut |p| {
        if power_ok(p) {
            found = Some(p.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Depth-first enumeration of bijections allowed by `ok`; stops when `visit`
/// returns true.
fn bijections(
    n: usize,
    ok: &dyn Fn(usize, usize) -> bool,
    cur: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let i = cur.len();
    if i == n {
        return visit(cur);
    }
    for j in 0..n {
        if !used[j] && ok(i, j) {
            used[j] = true;
            cur.push(j);
            if bijections(n, ok, cur, used, visit) {
                return true;
            }
            cur.pop();
            used[j] = false;
        }
    }
    false
}
