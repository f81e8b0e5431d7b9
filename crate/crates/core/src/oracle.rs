//! Brute-force ground truth: every group of a small order, as Cayley
//! tables, one per isomorphism class.
//!
//! Tables are found by backtracking over the cells of an `n × n` table with
//! element `0` as identity. Each assignment is propagated: once three of the
//! four cells read by `(ab)c = a(bc)` are known the fourth is forced, and any
//! clash with a known value or with the Latin-square property prunes. Isomorphic tables
//! are merged through [`CayleyTable::canonical_form`], the lexicographically
//! smallest relabeling that keeps `0` as identity.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::group::FiniteGroup;
use crate::numtheory::is_cyclic_number;
use crate::perm::Permutation;
use crate::{Error, Result};

/// Orders above this need an explicit larger cap.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// No cap can go beyond this order.
pub const MAX_ENUMERATION_ORDER: usize = 10;

const UNSET: u8 = u8::MAX;

/// Multiplication table on labels `0..n`, `0` the identity. Entry
/// `(i, j)` is `i·j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<u8>,
}

impl CayleyTable {
    /// Checks every group axiom on a row-major table.
    pub fn new(n: usize, cells: Vec<usize>) -> Result<Self> {
        if n == 0 || n > u8::MAX as usize - 1 {
            return Err(Error::InvalidTable("order out of range"));
        }
        if cells.len() != n * n || cells.iter().any(|&c| c >= n) {
            return Err(Error::InvalidTable("table shape"));
        }
        let table = CayleyTable {
            n,
            cells: cells.into_iter().map(|c| c as u8).collect(),
        };
        table.validate()?;
        Ok(table)
    }

    /// `i·j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0 && n < u8::MAX as usize);
        CayleyTable {
            n,
            cells: (0..n * n).map(|c| ((c / n + c % n) % n) as u8).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.n + j] as usize
    }

    pub fn rows(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.cells
            .chunks(self.n)
            .map(|row| row.iter().map(|&c| c as usize).collect())
    }

    /// Full re-check of identity, Latin property, associativity and
    /// inverses, independent of how the table was produced.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvalidTable("0 is not the identity"));
            }
        }
        for i in 0..n {
            let mut row = alloc::vec![false; n];
            let mut col = alloc::vec![false; n];
            for j in 0..n {
                if core::mem::replace(&mut row[self.mul(i, j)], true)
                    || core::mem::replace(&mut col[self.mul(j, i)], true)
                {
                    return Err(Error::InvalidTable("not a Latin square"));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable("not associative"));
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| self.mul(a, b) == 0 && self.mul(b, a) == 0) {
                return Err(Error::InvalidTable("missing inverse"));
            }
        }
        Ok(())
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn order_multiset(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = (0..self.n).map(|x| self.element_order(x) as u64).collect();
        orders.sort_unstable();
        orders
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.n).any(|x| self.element_order(x) == self.n)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// The table after renaming each label `x` to `sigma[x]`.
    ///
    /// # Panics
    ///
    /// If `sigma` is not a permutation of `0..n` fixing `0`.
    pub fn relabel(&self, sigma: &[usize]) -> Self {
        let n = self.n;
        assert_eq!(sigma.len(), n);
        assert_eq!(sigma[0], 0, "relabeling must fix the identity");
        let mut cells = alloc::vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                cells[sigma[i] * n + sigma[j]] = sigma[self.mul(i, j)] as u8;
            }
        }
        CayleyTable { n, cells }
    }

    /// Lexicographically least relabeling over all `(n-1)!` bijections that
    /// fix `0`. Two tables are isomorphic iff their canonical forms agree.
    pub fn canonical_form(&self) -> Self {
        let mut best = self.clone();
        for_each_relabeling(self.n, |sigma, inverse| {
            if relabeled_less(self, sigma, inverse, &best) {
                best = self.relabel(sigma);
            }
        });
        best
    }

    /// Left-multiplication permutations `x ↦ g·x`, closed into a group.
    pub fn regular_representation(&self) -> FiniteGroup {
        let gens: Vec<Permutation> = (0..self.n)
            .map(|g| {
                Permutation::from_images((0..self.n).map(|x| self.mul(g, x)))
                    .expect("rows of a Cayley table are permutations")
            })
            .collect();
        FiniteGroup::closure(&gens).expect("regular representation has n elements")
    }
}

/// Compares `table.relabel(sigma)` against `best` cell by cell, stopping
/// at the first difference.
fn relabeled_less(
    table: &CayleyTable,
    sigma: &[usize],
    inverse: &[usize],
    best: &CayleyTable,
) -> bool {
    let n = table.n;
    for r in 0..n {
        for c in 0..n {
            let v = sigma[table.mul(inverse[r], inverse[c])] as u8;
            let b = best.cells[r * n + c];
            if v != b {
                return v < b;
            }
        }
    }
    false
}

/// Calls `f(sigma, sigma⁻¹)` for every bijection of `0..n` fixing `0`, in
/// lexicographic order.
fn for_each_relabeling(n: usize, mut f: impl FnMut(&[usize], &[usize])) {
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut inverse = sigma.clone();
    loop {
        for (i, &s) in sigma.iter().enumerate() {
            inverse[s] = i;
        }
        f(&sigma, &inverse);
        // next permutation of sigma[1..]
        let tail = &mut sigma[1..];
        let Some(i) = (1..tail.len()).rev().find(|&i| tail[i - 1] < tail[i]) else {
            return;
        };
        let j = (i..tail.len())
            .rev()
            .find(|&j| tail[j] > tail[i - 1])
            .unwrap();
        tail.swap(i - 1, j);
        tail[i..].reverse();
    }
}

struct Search {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    /// Cells assigned so far, in order, for undoing.
    trail: Vec<usize>,
    pending: Vec<usize>,
    found: Vec<CayleyTable>,
}

impl Search {
    fn new(n: usize) -> Self {
        let mut s = Search {
            n,
            cells: alloc::vec![UNSET; n * n],
            row_used: alloc::vec![0; n],
            col_used: alloc::vec![0; n],
            trail: Vec::new(),
            pending: Vec::new(),
            found: Vec::new(),
        };
        for x in 0..n {
            s.place(0, x, x);
            if x > 0 {
                s.place(x, 0, x);
            }
        }
        s.trail.clear();
        s
    }

    fn get(&self, i: usize, j: usize) -> Option<usize> {
        match self.cells[i * self.n + j] {
            UNSET => None,
            v => Some(v as usize),
        }
    }

    fn place(&mut self, i: usize, j: usize, v: usize) {
        self.cells[i * self.n + j] = v as u8;
        self.row_used[i] |= 1 << v;
        self.col_used[j] |= 1 << v;
        self.trail.push(i * self.n + j);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap();
            let (i, j) = (cell / self.n, cell % self.n);
            let v = self.cells[cell] as usize;
            self.cells[cell] = UNSET;
            self.row_used[i] &= !(1 << v);
            self.col_used[j] &= !(1 << v);
        }
    }

    /// Requires `i·j = v`: assigns it when unset (Latin property
    /// permitting), otherwise compares.
    fn force(&mut self, i: usize, j: usize, v: usize) -> bool {
        match self.get(i, j) {
            Some(w) => w == v,
            None => {
                if (self.row_used[i] | self.col_used[j]) & (1 << v) != 0 {
                    return false;
                }
                self.place(i, j, v);
                self.pending.push(i * self.n + j);
                true
            }
        }
    }

    /// For the triple `(a, b, c)` with `ab` and `bc` known: if one side of
    /// `(ab)c = a(bc)` is known, the other is forced.
    fn settle(&mut self, a: usize, b: usize, c: usize) -> bool {
        let (Some(ab), Some(bc)) = (self.get(a, b), self.get(b, c)) else {
            return true;
        };
        match (self.get(ab, c), self.get(a, bc)) {
            (Some(l), Some(r)) => l == r,
            (Some(l), None) => self.force(a, bc, l),
            (None, Some(r)) => self.force(ab, c, r),
            (None, None) => true,
        }
    }

    /// Assigns `i·j = v` and everything associativity then forces. Every
    /// triple that reads a newly assigned cell is revisited.
    fn assign(&mut self, i: usize, j: usize, v: usize) -> bool {
        self.pending.clear();
        if !self.force(i, j, v) {
            return false;
        }
        let n = self.n;
        while let Some(cell) = self.pending.pop() {
            let (i, j) = (cell / n, cell % n);
            for x in 0..n {
                // (i, j) as the cell ab or as the cell bc
                if !self.settle(i, j, x) || !self.settle(x, i, j) {
                    return false;
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let ab = self.get(a, b);
                    // (i, j) as (ab, c) with ab = i, c = j
                    if ab == Some(i) && !self.settle(a, b, j) {
                        return false;
                    }
                    // (i, j) as (a, bc) with a = i, bc = j
                    if ab == Some(j) && !self.settle(i, a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self) {
        let n = self.n;
        let Some(cell) = (n..n * n).find(|&c| c % n != 0 && self.cells[c] == UNSET) else {
            self.found.push(CayleyTable {
                n,
                cells: self.cells.clone(),
            });
            return;
        };
        let (i, j) = (cell / n, cell % n);
        let used = self.row_used[i] | self.col_used[j];
        for v in 0..n {
            if used & (1 << v) != 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(i, j, v) {
                self.run();
            }
            self.undo_to(mark);
        }
    }
}

/// Every group table of order `n` with identity `0`, isomorphic copies
/// included.
pub fn enumerate_labeled_tables(n: usize, cap: usize) -> Result<Vec<CayleyTable>> {
    check_cap(n, cap)?;
    if n == 1 {
        return Ok(alloc::vec![CayleyTable {
            n: 1,
            cells: alloc::vec![0]
        }]);
    }
    let mut search = Search::new(n);
    search.run();
    Ok(search.found)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let cap = cap.min(MAX_ENUMERATION_ORDER);
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    Ok(())
}

pub fn enumerate_groups(n: usize) -> Result<Vec<CayleyTable>> {
    enumerate_groups_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// One canonical table per isomorphism class of groups of order `n`,
/// sorted. Each table is validated again after the search.
pub fn enumerate_groups_with_cap(n: usize, cap: usize) -> Result<Vec<CayleyTable>> {
    let labeled = enumerate_labeled_tables(n, cap)?;
    // Tables already reached as a relabeling of an earlier class.
    let mut seen: BTreeSet<CayleyTable> = BTreeSet::new();
    let mut classes = Vec::new();
    for table in labeled {
        table.validate()?;
        if seen.contains(&table) {
            continue;
        }
        let mut orbit = Vec::new();
        for_each_relabeling(n, |sigma, _| orbit.push(table.relabel(sigma)));
        let canonical = orbit.iter().min().cloned().unwrap_or(table);
        seen.extend(orbit);
        classes.push(canonical);
    }
    classes.sort();
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub n: usize,
    pub classes: usize,
    pub cyclic_classes: usize,
    /// `gcd(n, φ(n)) = 1`
    pub cyclic_number: bool,
    /// Element-order multiset of every class.
    pub order_multisets: Vec<Vec<u64>>,
}

impl TheoremRow {
    pub fn all_cyclic(&self) -> bool {
        self.classes == self.cyclic_classes
    }

    pub fn agrees(&self) -> bool {
        self.all_cyclic() == self.cyclic_number
    }
}

pub fn theorem_row(n: usize, cap: usize) -> Result<TheoremRow> {
    let classes = enumerate_groups_with_cap(n, cap)?;
    Ok(TheoremRow {
        n,
        classes: classes.len(),
        cyclic_classes: classes.iter().filter(|t| t.is_cyclic()).count(),
        cyclic_number: is_cyclic_number(n as u64)?,
        order_multisets: classes.iter().map(CayleyTable::order_multiset).collect(),
    })
}

/// Compares "every group of order `n` is cyclic", decided by enumeration,
/// with `gcd(n, φ(n)) = 1` for each `n` in `1..=n_max`.
pub fn verify_theorem_small(n_max: usize) -> Result<Vec<TheoremRow>> {
    verify_theorem_small_with_cap(n_max, DEFAULT_ENUMERATION_CAP)
}

pub fn verify_theorem_small_with_cap(n_max: usize, cap: usize) -> Result<Vec<TheoremRow>> {
    check_cap(n_max.max(1), cap)?;
    (1..=n_max).map(|n| theorem_row(n, cap)).collect()
}
