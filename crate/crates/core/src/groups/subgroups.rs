use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::MatrixGroup;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Cheap isomorphism-type invariant: order, commutativity and the multiset
/// of element orders.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub element_orders: BTreeMap<u32, usize>,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Fingerprint {
    pub fn count(&self, order: u32) -> usize {
        self.element_orders.get(&order).copied().unwrap_or(0)
    }

    /// A conventional name for the types that occur in small subgroup lattices.
    pub fn type_name(&self) -> String {
        let n = self.order;
        if n == 1 {
            return "1".into();
        }
        if self.count(n as u32) > 0 {
            return format!("Z/{n}");
        }
        if self.abelian {
            let nontrivial: Vec<u32> = self.element_orders.keys().copied().filter(|&o| o > 1).collect();
            if let [p] = nontrivial[..] {
                let mut k = 0;
                let mut m = n;
                while m > 1 && m.is_multiple_of(p as usize) {
                    m /= p as usize;
                    k += 1;
                }
                if m == 1 {
                    return format!("(Z/{p})^{k}");
                }
            }
            return format!("abelian of order {n}");
        }
        let half = n / 2;
        let involutions = self.count(2);
        if n.is_multiple_of(2) && self.count(half as u32) > 0 && involutions == half + usize::from(half.is_multiple_of(2)) {
            return if n == 6 { "Sym(3)".into() } else { format!("D{n}") };
        }
        let orders = |pairs: &[(u32, usize)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        if n == 12 && self.element_orders == orders(&[(1, 1), (2, 3), (3, 8)]) {
            return "Alt(4)".into();
        }
        if n == 60 && self.element_orders == orders(&[(1, 1), (2, 15), (3, 20), (5, 24)]) {
            return "Alt(5)".into();
        }
        if n == 660 && self.element_orders.keys().copied().eq([1, 2, 3, 5, 6, 11]) {
            return "PSL(2,11)".into();
        }
        for p in 2..n {
            if n.is_multiple_of(p) && is_prime(p) && is_prime(n / p) && p < n / p {
                return format!("Z/{}:Z/{p}", n / p);
            }
        }
        format!("group of order {n}")
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.type_name())
    }
}

/// A subgroup of a [`MatrixGroup`], given by element indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub members: Vec<usize>,
    pub generators: Vec<usize>,
    pub fingerprint: Fingerprint,
    /// Number of distinct conjugates in the ambient group.
    pub conjugates: usize,
}

impl Subgroup {
    pub fn generator_matrices(&self, g: &MatrixGroup) -> Vec<Matrix> {
        if self.generators.is_empty() {
            return vec![g.element(g.identity_index()).clone()];
        }
        self.generators.iter().map(|&i| g.element(i).clone()).collect()
    }

    /// Builds the subgroup as a matrix group in its own right.
    pub fn to_group(&self, g: &MatrixGroup) -> Result<MatrixGroup> {
        MatrixGroup::generate(&self.generator_matrices(g), g.limits())
    }
}

impl MatrixGroup {
    pub fn fingerprint_of(&self, members: &[usize], generators: &[usize]) -> Fingerprint {
        let mut element_orders = BTreeMap::new();
        for &m in members {
            *element_orders.entry(self.element_order(m)).or_insert(0) += 1;
        }
        let abelian = generators
            .iter()
            .all(|&a| generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)));
        Fingerprint { order: members.len(), abelian, element_orders }
    }

    /// Every subgroup generated by at most two elements, one per conjugacy
    /// class, sorted by fingerprint and then by member indices.
    ///
    /// The first generator ranges over class representatives (any pair is
    /// conjugate to one of this form) and the second over all elements.
    pub fn subgroups_two_generated(&self) -> Result<Vec<Subgroup>> {
        if self.order() > 1000 {
            return Err(Error::Input(format!(
                "subgroup scan is limited to groups of order at most 1000, got {}",
                self.order()
            )));
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut found = Vec::new();
        let trivial = vec![self.identity_index()];
        seen.insert(trivial.clone());
        found.push(Subgroup {
            members: trivial,
            generators: Vec::new(),
            fingerprint: self.fingerprint_of(&[self.identity_index()], &[]),
            conjugates: 1,
        });
        for class in self.classes() {
            let a = class.representative;
            for b in 0..self.order() {
                let gens: Vec<usize> = if b == a || b == self.identity_index() {
                    vec![a]
                } else {
                    vec![a, b]
                };
                let members = self.closure_of(&gens);
                if seen.contains(&members) {
                    continue;
                }
                let mut conjugates = 0;
                for x in 0..self.order() {
                    if seen.insert(self.conjugate_set(&members, x)) {
                        conjugates += 1;
                    }
                }
                let gens = if members.len() == 1 { Vec::new() } else { gens };
                let fingerprint = self.fingerprint_of(&members, &gens);
                found.push(Subgroup { members, generators: gens, fingerprint, conjugates });
            }
        }
        found.sort_by(|x, y| x.fingerprint.cmp(&y.fingerprint).then_with(|| x.members.cmp(&y.members)));
        Ok(found)
    }
}
