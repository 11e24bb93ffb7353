//! Finite matrix groups: closure, conjugacy classes, power maps, eigenvalue
//! profiles and subgroup scanning.

mod profile;
mod subgroups;

use std::collections::HashMap;
use std::fmt;

pub use profile::{eigen_profile_of_matrix, EigenProfile};
pub use subgroups::{Fingerprint, Subgroup};

use crate::exact::{cyclotomic::lcm_u32, Cyclotomic};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Size limits for group enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements before closure gives up.
    pub cap: usize,
    /// Elements whose order exceeds this are declared of infinite order.
    pub order_bound: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cap: 20_000, order_bound: 1000 }
    }
}

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: u32,
    pub label: String,
    /// `(k, class index of g^k)` for `k` in 2, 3, 5.
    pub power_class: Vec<(u32, usize)>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn power(&self, k: u32) -> Option<usize> {
        self.power_class.iter().find(|(p, _)| *p == k).map(|(_, c)| *c)
    }
}

#[derive(Clone)]
pub struct MatrixGroup {
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    identity: usize,
    generator_indices: Vec<usize>,
    /// `right[g][s]` is the index of `g · generators[s]`.
    right: Vec<Vec<u32>>,
    /// BFS spanning tree: `parent[g] = (h, s)` with `g = h · generators[s]`.
    parent: Vec<Option<(u32, u16)>>,
    /// Indices in breadth-first order, identity first.
    bfs_order: Vec<u32>,
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    class_traces: Vec<Cyclotomic>,
    limits: Limits,
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixGroup")
            .field("order", &self.order())
            .field("generators", &self.generators.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

/// Order of a matrix, found by repeated multiplication up to `bound`.
pub fn matrix_order(m: &Matrix, bound: u32) -> Option<u32> {
    let mut x = m.clone();
    for k in 1..=bound {
        if x.is_identity() {
            return Some(k);
        }
        x = x.mul(m);
    }
    None
}

impl MatrixGroup {
    /// Enumerates the group generated by `generators` by breadth-first closure,
    /// then sorts elements canonically and computes conjugacy classes.
    pub fn generate(generators: &[Matrix], limits: Limits) -> Result<MatrixGroup> {
        let Some(first) = generators.first() else {
            return Err(Error::Input("a group needs at least one generator".into()));
        };
        let dim = first.rows();
        for (index, g) in generators.iter().enumerate() {
            if !g.is_square() || g.rows() != dim {
                return Err(Error::BadGenerator { index });
            }
            if matrix_order(g, limits.order_bound).is_none() {
                return Err(if g.determinant().is_zero() {
                    Error::BadGenerator { index }
                } else {
                    Error::NotFinite { index, bound: limits.order_bound }
                });
            }
        }

        let mut elements = vec![Matrix::identity(dim)];
        let mut lookup: HashMap<Matrix, u32> = HashMap::new();
        lookup.insert(elements[0].clone(), 0);
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut parent = vec![None];
        let mut idx = 0;
        while idx < elements.len() {
            let mut row = Vec::with_capacity(generators.len());
            for (s, g) in generators.iter().enumerate() {
                let prod = elements[idx].mul(g);
                let j = match lookup.get(&prod) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len() as u32;
                        if elements.len() >= limits.cap {
                            return Err(Error::CapExceeded { cap: limits.cap });
                        }
                        lookup.insert(prod.clone(), j);
                        elements.push(prod);
                        parent.push(Some((idx as u32, s as u16)));
                        j
                    }
                };
                row.push(j);
            }
            right.push(row);
            idx += 1;
        }

        // canonical order: lexicographic on printed entries
        let keys: Vec<Vec<String>> = elements
            .iter()
            .map(|m| m.entries().iter().map(ToString::to_string).collect())
            .collect();
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut new_of_old = vec![0u32; elements.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new as u32;
        }
        let remap = |i: u32| new_of_old[i as usize];
        let mut slots: Vec<Option<Matrix>> = elements.into_iter().map(Some).collect();
        let elements: Vec<Matrix> =
            order.iter().map(|&old| slots[old].take().expect("each element moved once")).collect();
        let right: Vec<Vec<u32>> =
            order.iter().map(|&old| right[old].iter().map(|&j| remap(j)).collect()).collect();
        let parent: Vec<Option<(u32, u16)>> =
            order.iter().map(|&old| parent[old].map(|(h, s)| (remap(h), s))).collect();
        // discovery order was breadth-first, so it is a valid walk order
        let bfs_order: Vec<u32> = (0..order.len() as u32).map(remap).collect();
        let identity = remap(0) as usize;
        let generator_indices = (0..generators.len()).map(|s| right[identity][s] as usize).collect();

        let mut group = MatrixGroup {
            generators: generators.to_vec(),
            elements,
            identity,
            generator_indices,
            right,
            parent,
            bfs_order,
            table: None,
            inverse: Vec::new(),
            orders: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            class_traces: Vec::new(),
            limits,
        };
        group.build_table();
        group.compute_orders()?;
        group.compute_inverses();
        group.compute_classes();
        Ok(group)
    }

    fn build_table(&mut self) {
        let n = self.elements.len();
        if n > TABLE_LIMIT {
            return;
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            for &b in &self.bfs_order {
                let b = b as usize;
                row[b] = match self.parent[b] {
                    None => a as u32,
                    Some((h, s)) => self.right[row[h as usize] as usize][s as usize],
                };
            }
        }
        self.table = Some(table);
    }

    fn walk(&self, a: usize, b: usize) -> usize {
        let mut path = Vec::new();
        let mut cur = b;
        while let Some((h, s)) = self.parent[cur] {
            path.push(s);
            cur = h as usize;
        }
        let mut x = a;
        for &s in path.iter().rev() {
            x = self.right[x][s as usize] as usize;
        }
        x
    }

    fn compute_orders(&mut self) -> Result<()> {
        let bound = self.limits.order_bound;
        let mut orders = vec![0u32; self.elements.len()];
        for g in 0..self.elements.len() {
            if orders[g] != 0 {
                continue;
            }
            let mut x = g;
            let mut k = 1;
            while x != self.identity {
                x = self.mul(x, g);
                k += 1;
                if k > bound {
                    return Err(Error::NotFinite { index: g, bound });
                }
            }
            orders[g] = k;
        }
        self.orders = orders;
        Ok(())
    }

    fn compute_inverses(&mut self) {
        self.inverse = (0..self.elements.len())
            .map(|g| self.power(g, self.orders[g] as i64 - 1) as u32)
            .collect();
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut members = vec![g];
            class_of[g] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &s in &self.generator_indices {
                    let y = self.mul(self.mul(self.inverse[s] as usize, x), s);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            raw.push(members);
        }
        // classes sorted by (element order, representative index)
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by_key(|&c| (self.orders[raw[c][0]], raw[c][0]));
        let mut new_of_old = vec![0; raw.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_of_old[old] = new;
        }
        let class_of: Vec<usize> = class_of.iter().map(|&c| new_of_old[c]).collect();
        let mut classes = Vec::with_capacity(raw.len());
        let mut letters: HashMap<u32, usize> = HashMap::new();
        for &old in &perm {
            let members = std::mem::take(&mut raw[old]);
            let rep = members[0];
            let ord = self.orders[rep];
            let count = letters.entry(ord).or_insert(0);
            let label = format!("{ord}{}", class_letter(*count));
            *count += 1;
            let power_class = [2u32, 3, 5]
                .iter()
                .map(|&k| (k, class_of[self.power(rep, k as i64)]))
                .collect();
            classes.push(ConjClass { representative: rep, members, element_order: ord, label, power_class });
        }
        self.class_traces = classes.iter().map(|c| self.elements[c.representative].trace()).collect();
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.walk(a, b),
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g^k` for any integer `k` (negative powers use the inverse).
    pub fn power(&self, g: usize, k: i64) -> usize {
        let (mut base, mut e) = if k < 0 && !self.inverse.is_empty() {
            (self.inverse(g), k.unsigned_abs())
        } else {
            (g, k.unsigned_abs())
        };
        if !self.orders.is_empty() {
            e %= self.orders[base] as u64;
        }
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> u32 {
        self.orders[g]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Trace of the representative of each class.
    pub fn class_traces(&self) -> &[Cyclotomic] {
        &self.class_traces
    }

    pub fn trace_of(&self, g: usize) -> &Cyclotomic {
        &self.class_traces[self.class_of[g]]
    }

    /// Least common multiple of the conductors of all generator entries.
    pub fn conductor(&self) -> u32 {
        self.generators
            .iter()
            .flat_map(|g| g.entries().iter())
            .fold(1, |acc, e| lcm_u32(acc, e.conductor()))
    }

    pub fn exponent(&self) -> u32 {
        self.classes.iter().fold(1, |acc, c| lcm_u32(acc, c.element_order))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_indices;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True iff the only scalar matrix in the group is the identity.
    pub fn is_projectively_faithful(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, m)| i == self.identity || !m.is_scalar())
    }

    /// The group generated by this one and `ζ3·I`.
    pub fn scalar_saturate(&self) -> Result<MatrixGroup> {
        let mut gens = self.generators.clone();
        gens.push(Matrix::scalar(self.dim(), Cyclotomic::root_of_unity(3, 1)));
        MatrixGroup::generate(&gens, self.limits)
    }

    /// Eigenvalue profile of element `g`, from the traces of its powers.
    pub fn eigen_profile(&self, g: usize) -> Result<EigenProfile> {
        let n = self.orders[g];
        let traces: Vec<Cyclotomic> =
            (0..n).map(|j| self.trace_of(self.power(g, j as i64)).clone()).collect();
        EigenProfile::from_power_traces(&traces, self.dim())
    }

    /// Conjugates the element set `members` by `x`: `{x⁻¹ h x}`.
    pub fn conjugate_set(&self, members: &[usize], x: usize) -> Vec<usize> {
        let xi = self.inverse(x);
        let mut out: Vec<usize> = members.iter().map(|&h| self.mul(self.mul(xi, h), x)).collect();
        out.sort_unstable();
        out
    }

    /// Closure of `gens` inside the group, in index space.
    pub fn closure_of(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.elements.len();
        let mut seen = vec![false; n];
        seen[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }
}

fn class_letter(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if i < LETTERS.len() {
        (LETTERS[i] as char).to_string()
    } else {
        format!("{}{}", LETTERS[i % LETTERS.len()] as char, i / LETTERS.len())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn one() -> Cyclotomic {
        Cyclotomic::one()
    }

    pub(crate) fn klein_core() -> Vec<Matrix> {
        let d = Matrix::diag(&[z(11, 1), z(11, 5), z(11, 3), z(11, 4), z(11, 9)]);
        let p = Matrix::permutation(&[4, 0, 1, 2, 3]);
        vec![d, p]
    }

    #[test]
    fn cyclic_and_scalars() {
        let g = MatrixGroup::generate(&[Matrix::diag(&[z(3, 1), one(), one(), one(), one()])], Limits::default())
            .unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_projectively_faithful());
        assert_eq!(g.scalar_saturate().unwrap().order(), 9);
        let s = MatrixGroup::generate(&[Matrix::scalar(5, z(3, 1))], Limits::default()).unwrap();
        assert!(!s.is_projectively_faithful());
        let t = MatrixGroup::generate(&[Matrix::identity(5)], Limits::default()).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.scalar_saturate().unwrap().order(), 3);
    }

    #[test]
    fn order_55_group() {
        let g = MatrixGroup::generate(&klein_core(), Limits::default()).unwrap();
        assert_eq!(g.order(), 55);
        let sizes: usize = g.classes().iter().map(ConjClass::size).sum();
        assert_eq!(sizes, 55);
        // 1 + 4 classes of order 5 (size 11) + 2 classes of order 11 (size 5)
        assert_eq!(g.classes().len(), 7);
        for c in g.classes() {
            let rep = c.representative;
            assert_eq!(c.power(2), Some(g.class_of(g.power(rep, 2))));
        }
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inverse(x)), g.identity_index());
            assert_eq!(g.element(x).mul(g.element(g.inverse(x))), Matrix::identity(5));
        }
    }

    #[test]
    fn deterministic_ordering() {
        let a = MatrixGroup::generate(&klein_core(), Limits::default()).unwrap();
        let mut rev = klein_core();
        rev.reverse();
        let b = MatrixGroup::generate(&rev, Limits::default()).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn table_agrees_with_matrices() {
        let g = MatrixGroup::generate(&klein_core(), Limits::default()).unwrap();
        for a in (0..55).step_by(7) {
            for b in (0..55).step_by(5) {
                assert_eq!(g.element(a).mul(g.element(b)), *g.element(g.mul(a, b)));
                assert_eq!(g.walk(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn caps_and_infinite_order() {
        let gens = klein_core();
        let err = MatrixGroup::generate(&gens, Limits { cap: 20, order_bound: 1000 }).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 20 });
        let shear = crate::linalg::rational_matrix(&[&[1, 1], &[0, 1]]);
        let err = MatrixGroup::generate(&[shear], Limits::default()).unwrap_err();
        assert!(matches!(err, Error::NotFinite { .. }));
    }
}
