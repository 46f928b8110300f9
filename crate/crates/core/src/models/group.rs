//! Groups viewed as gyrogroups with trivial gyrations.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use super::cayley::CayleyTable;
use crate::error::Result;
use crate::gyro::{Gyrogroup, SampleRng};

pub trait Group {
    type Elem: Clone + fmt::Debug + PartialEq;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Elements in a fixed order; the identity comes first.
    fn elements(&self) -> Vec<Self::Elem>;
    fn label(&self, a: &Self::Elem) -> String;
}

/// `Z_n` under addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cyclic(pub usize);

impl Group for Cyclic {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        (a + b) % self.0
    }
    fn inv(&self, a: &usize) -> usize {
        (self.0 - a) % self.0
    }
    fn elements(&self) -> Vec<usize> {
        (0..self.0).collect()
    }
    fn label(&self, a: &usize) -> String {
        a.to_string()
    }
}

/// A permutation of `0..degree`, composed right to left: `(p*q)(i) = p(q(i))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    pub fn compose(&self, q: &Perm) -> Perm {
        Perm(q.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v] = i;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Disjoint-cycle notation on points `1..=degree`; `"e"` for the identity.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.0.len()];
        let mut out = String::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.0[i];
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            "e".into()
        } else {
            out
        }
    }
}

/// The permutation group generated by a set of permutations. Elements are
/// kept sorted, so the identity is always first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elems: Vec<Perm>,
}

impl PermGroup {
    pub fn generate(degree: usize, gens: &[Perm]) -> Self {
        let mut set = BTreeSet::new();
        set.insert(Perm::identity(degree));
        let mut frontier = vec![Perm::identity(degree)];
        while let Some(a) = frontier.pop() {
            for g in gens {
                let c = a.compose(g);
                if set.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        PermGroup {
            degree,
            elems: set.into_iter().collect(),
        }
    }

    /// `S_3` on points `{1,2,3}`.
    pub fn symmetric3() -> Self {
        PermGroup::generate(3, &[Perm(vec![1, 0, 2]), Perm(vec![1, 2, 0])])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elems.binary_search(p).ok()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.elems
    }
}

impl Group for PermGroup {
    type Elem = Perm;

    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }
    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.compose(b)
    }
    fn inv(&self, a: &Perm) -> Perm {
        a.inverse()
    }
    fn elements(&self) -> Vec<Perm> {
        self.elems.clone()
    }
    fn label(&self, a: &Perm) -> String {
        a.cycle_notation()
    }
}

/// Adapter exposing a group as a gyrogroup whose gyrations are declared to
/// be the identity.
#[derive(Debug, Clone)]
pub struct GroupAdapter<G: Group> {
    group: G,
    elems: Vec<G::Elem>,
}

impl<G: Group> GroupAdapter<G> {
    pub fn new(group: G) -> Self {
        let elems = group.elements();
        GroupAdapter { group, elems }
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    fn index_of(&self, a: &G::Elem) -> usize {
        self.elems
            .iter()
            .position(|e| e == a)
            .expect("group operation closed over its element list")
    }

    /// The Cayley table in element-list order.
    pub fn to_table(&self) -> Result<CayleyTable> {
        let labels = self.elems.iter().map(|e| self.group.label(e)).collect();
        let rows = self
            .elems
            .iter()
            .map(|a| self.elems.iter().map(|b| self.index_of(&self.group.mul(a, b))).collect())
            .collect();
        CayleyTable::new(labels, rows)
    }
}

impl<G: Group> Gyrogroup for GroupAdapter<G> {
    type Elem = G::Elem;

    fn zero(&self) -> G::Elem {
        self.group.identity()
    }
    fn oplus(&self, a: &G::Elem, b: &G::Elem) -> G::Elem {
        self.group.mul(a, b)
    }
    fn ominus(&self, a: &G::Elem) -> G::Elem {
        self.group.inv(a)
    }
    fn gyr(&self, _x: &G::Elem, _y: &G::Elem, z: &G::Elem) -> G::Elem {
        z.clone()
    }
    fn discrepancy(&self, a: &G::Elem, b: &G::Elem) -> f64 {
        if a == b {
            0.0
        } else {
            1.0
        }
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn elements(&self) -> Option<Vec<G::Elem>> {
        Some(self.elems.clone())
    }
    fn sample(&self, rng: &mut SampleRng) -> G::Elem {
        self.elems[rng.random_range(0..self.elems.len())].clone()
    }
    fn label(&self, a: &G::Elem) -> String {
        self.group.label(a)
    }
}
