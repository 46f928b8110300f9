//! Finite gyrogroups given by their Cayley table.
//!
//! [`CayleyTable`] is an arbitrary finite groupoid: it only guarantees that the
//! table is square with in-range entries, so the axiom checker can run on
//! tables that are not gyrogroups. [`CayleyGyro`] is a validated model with
//! inverse and gyration tables derived from `⊕`.

use crate::error::{Error, Result};
use crate::gyro::{Gyrogroup, SampleRng};
use rand::Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    labels: Vec<String>,
    op: Vec<usize>,
}

impl CayleyTable {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("carrier must be nonempty".into()));
        }
        if rows.len() != n {
            return Err(Error::Malformed(format!("expected {n} rows, found {}", rows.len())));
        }
        let mut op = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index: bad, order: n });
            }
            op.extend(row);
        }
        Ok(CayleyTable { labels, op })
    }

    /// Table with numeric labels `"0".."n-1"` built from `f(a, b)`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        CayleyTable::new(numeric_labels(n), rows)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order() + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    /// Copy of the table with one entry replaced.
    pub fn with_entry(&self, a: usize, b: usize, value: usize) -> Result<Self> {
        let n = self.order();
        for i in [a, b, value] {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, order: n });
            }
        }
        let mut t = self.clone();
        t.op[a * n + b] = value;
        Ok(t)
    }

    pub fn two_sided_identities(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&e| (0..n).all(|a| self.op(e, a) == a && self.op(a, e) == a))
            .collect()
    }

    pub fn inverses(&self, x: usize, identity: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&y| self.op(y, x) == identity && self.op(x, y) == identity)
            .collect()
    }

    /// Every `w` with `(x⊕y)⊕w = x⊕(y⊕z)`.
    pub fn gyr_solutions(&self, x: usize, y: usize, z: usize) -> Vec<usize> {
        let xy = self.op(x, y);
        let target = self.op(x, self.op(y, z));
        (0..self.order()).filter(|&w| self.op(xy, w) == target).collect()
    }

    /// `gyr[x,y](z)` by solving the gyroassociative equation; fails unless the
    /// solution is unique.
    pub fn solve_gyr(&self, x: usize, y: usize, z: usize) -> Result<usize> {
        match self.gyr_solutions(x, y, z).as_slice() {
            [w] => Ok(*w),
            other => Err(Error::GyrationUnsolvable { x, y, z, count: other.len() }),
        }
    }

    /// First repeated entry in a row, if any row is not a permutation.
    pub fn latin_row_violation(&self) -> Option<(usize, usize)> {
        let n = self.order();
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let v = self.op(a, b);
                if seen[v] {
                    return Some((a, v));
                }
                seen[v] = true;
            }
        }
        None
    }
}

pub(crate) fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// A validated finite gyrogroup candidate.
///
/// Construction checks the structural invariants (rows are permutations,
/// unique identity, unique inverses) and derives every gyration by solving.
/// The full axiom set is checked by [`check_table_axioms`](crate::gyro::check_table_axioms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGyro {
    table: CayleyTable,
    zero: usize,
    neg: Vec<usize>,
    gyr: Vec<usize>,
}

impl CayleyGyro {
    pub fn new(table: CayleyTable) -> Result<Self> {
        let n = table.order();
        if let Some((row, entry)) = table.latin_row_violation() {
            return Err(Error::LatinSquare { row, entry });
        }
        let zero = match table.two_sided_identities().as_slice() {
            [e] => *e,
            _ => return Err(Error::MissingIdentity),
        };
        let mut neg = Vec::with_capacity(n);
        for x in 0..n {
            match table.inverses(x, zero).as_slice() {
                [y] => neg.push(*y),
                other => return Err(Error::NoUniqueInverse { element: x, count: other.len() }),
            }
        }
        let mut gyr = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    gyr.push(table.solve_gyr(x, y, z)?);
                }
            }
        }
        Ok(CayleyGyro { table, zero, neg, gyr })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        CayleyGyro::new(CayleyTable::from_fn(n, f)?)
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: usize) -> Self {
        CayleyGyro::from_fn(n, |a, b| (a + b) % n).expect("Z_n is a group")
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn labels(&self) -> &[String] {
        self.table.labels()
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table.op(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn gyr_at(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.order();
        self.gyr[(x * n + y) * n + z]
    }

    /// `gyr[x,y]` as a permutation of the carrier.
    pub fn gyr_perm(&self, x: usize, y: usize) -> &[usize] {
        let n = self.order();
        let start = (x * n + y) * n;
        &self.gyr[start..start + n]
    }

    pub fn is_identity_gyration(&self, x: usize, y: usize) -> bool {
        self.gyr_perm(x, y).iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn has_nontrivial_gyration(&self) -> bool {
        let n = self.order();
        (0..n).any(|x| (0..n).any(|y| !self.is_identity_gyration(x, y)))
    }

    /// Distinct gyrations, sorted, each as a permutation.
    pub fn distinct_gyrations(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out: Vec<Vec<usize>> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| self.gyr_perm(x, y).to_vec())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn label_of(&self, a: usize) -> &str {
        &self.table.labels()[a]
    }
}

impl Gyrogroup for CayleyGyro {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn oplus(&self, a: &usize, b: &usize) -> usize {
        self.add(*a, *b)
    }

    fn ominus(&self, a: &usize) -> usize {
        self.neg(*a)
    }

    fn gyr(&self, x: &usize, y: &usize, z: &usize) -> usize {
        self.gyr_at(*x, *y, *z)
    }

    fn gyr_derived(&self, x: &usize, y: &usize, z: &usize) -> usize {
        self.gyr_at(*x, *y, *z)
    }

    fn discrepancy(&self, a: &usize, b: &usize) -> f64 {
        if a == b {
            0.0
        } else {
            1.0
        }
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.order()).collect())
    }

    fn sample(&self, rng: &mut SampleRng) -> usize {
        rng.random_range(0..self.order())
    }

    fn label(&self, a: &usize) -> String {
        self.label_of(*a).to_owned()
    }
}
