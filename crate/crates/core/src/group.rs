//! Finite permutation groups generated by a list of permutations.
//!
//! A [`FiniteGroup`] keeps its elements sorted by image table, so each
//! element has a stable index. A [`Subgroup`] is a sorted list of such
//! indices and is only meaningful next to the group it was taken from.
//!
//! Products follow [`Permutation::compose`]: the product `xy` is `x ∘ y`,
//! and conjugation of `f` by `b` is `b⁻¹ f b`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::{Error, Result};

/// Closure refuses to grow a group past this many elements by default.
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

/// Default largest group order accepted by subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// A subgroup, stored as sorted element indices into its parent group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Checks that `members` is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let sub = Subgroup { members };
        group.check_subgroup(&sub)?;
        Ok(sub)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&i| other.contains(i))
                .collect(),
        }
    }

    /// Member permutations, in the parent's canonical order.
    pub fn elements<'g>(
        &'g self,
        group: &'g FiniteGroup,
    ) -> impl ExactSizeIterator<Item = &'g Permutation> + 'g {
        self.members.iter().map(move |&i| &group.elements[i])
    }
}

impl FiniteGroup {
    pub fn closure(generators: &[Permutation]) -> Result<Self> {
        Self::closure_with_cap(generators, DEFAULT_CLOSURE_CAP)
    }

    /// Breadth-first closure: multiply every known element by every
    /// generator until nothing new appears.
    pub fn closure_with_cap(generators: &[Permutation], cap: usize) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let identity = Permutation::identity(degree);
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.compose_unchecked(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::ClosureOverflow { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(FiniteGroup {
            degree,
            generators: generators.to_vec(),
            elements: seen.into_iter().collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image table.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index_of(g).is_some()
    }

    fn require(&self, g: &Permutation) -> Result<usize> {
        self.index_of(g).ok_or(Error::NotAMember)
    }

    pub fn identity_index(&self) -> usize {
        // The identity table is the lexicographically smallest permutation.
        0
    }

    fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].compose_unchecked(&self.elements[j]);
        self.index_of(&p)
            .expect("group is closed under composition")
    }

    fn inv(&self, i: usize) -> usize {
        self.index_of(&self.elements[i].inverse())
            .expect("group is closed under inversion")
    }

    fn check_subgroup(&self, sub: &Subgroup) -> Result<()> {
        let n = self.order();
        if sub.members.is_empty()
            || sub.members.iter().any(|&i| i >= n)
            || !sub.contains(self.identity_index())
        {
            return Err(Error::NotASubgroup);
        }
        // Finite and closed under products is enough.
        for &a in &sub.members {
            for &b in &sub.members {
                if !sub.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            members: alloc::vec![self.identity_index()],
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.center().order() == self.order()
    }

    /// Order of `g`; always divides `|G|`.
    pub fn element_order(&self, g: &Permutation) -> Result<u64> {
        self.require(g)?;
        Ok(g.order())
    }

    /// Element orders, ascending (the order multiset).
    pub fn order_multiset(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self.elements.iter().map(Permutation::order).collect();
        orders.sort_unstable();
        orders
    }

    pub fn max_element_order(&self) -> u64 {
        self.elements
            .iter()
            .map(Permutation::order)
            .max()
            .unwrap_or(1)
    }

    /// `⟨f⟩`, the set of all powers of `f`.
    pub fn generated_subgroup(&self, f: &Permutation) -> Result<Subgroup> {
        let start = self.require(f)?;
        Ok(self.cyclic_from_index(start))
    }

    fn cyclic_from_index(&self, start: usize) -> Subgroup {
        let mut members = alloc::vec![self.identity_index()];
        let mut x = start;
        while x != self.identity_index() {
            members.push(x);
            x = self.mul(x, start);
        }
        members.sort_unstable();
        Subgroup { members }
    }

    /// A generator of the whole group, if it is cyclic. The smallest such
    /// element in canonical order is returned.
    pub fn is_cyclic(&self) -> Option<&Permutation> {
        let n = self.order() as u64;
        self.elements.iter().find(|g| g.order() == n)
    }

    /// Left cosets `xH`, each sorted, listed by smallest member.
    pub fn left_cosets(&self, h: &Subgroup) -> Result<Vec<Vec<usize>>> {
        self.check_subgroup(h)?;
        let mut covered = alloc::vec![false; self.order()];
        let mut blocks = Vec::new();
        for x in 0..self.order() {
            if covered[x] {
                continue;
            }
            let mut block: Vec<usize> = h.members.iter().map(|&m| self.mul(x, m)).collect();
            block.sort_unstable();
            for &y in &block {
                covered[y] = true;
            }
            blocks.push(block);
        }
        Ok(blocks)
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> Subgroup {
        let members = (0..self.order())
            .filter(|&a| {
                let pa = &self.elements[a];
                self.elements
                    .iter()
                    .all(|g| g.compose_unchecked(pa) == pa.compose_unchecked(g))
            })
            .collect();
        Subgroup { members }
    }

    /// `XY = {xy}` for index sets `X`, `Y`. Sorted, without repeats.
    pub fn subset_product(&self, xs: &[usize], ys: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = xs
            .iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul(x, y))
            .collect();
        set.into_iter().collect()
    }

    /// `b⁻¹ f b`.
    pub fn conjugate_element(&self, f: &Permutation, b: &Permutation) -> Result<Permutation> {
        self.require(f)?;
        self.require(b)?;
        Ok(b.inverse().compose_unchecked(f).compose_unchecked(b))
    }

    fn conjugate_index(&self, f: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), f), b)
    }

    pub fn conjugacy_class(&self, g: &Permutation) -> Result<Vec<usize>> {
        let gi = self.require(g)?;
        Ok(self.class_of_index(gi))
    }

    fn class_of_index(&self, gi: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = (0..self.order())
            .map(|b| self.conjugate_index(gi, b))
            .collect();
        set.into_iter().collect()
    }

    /// All conjugacy classes, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut covered = alloc::vec![false; self.order()];
        let mut classes = Vec::new();
        for g in 0..self.order() {
            if covered[g] {
                continue;
            }
            let class = self.class_of_index(g);
            for &x in &class {
                covered[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// `b⁻¹ F b`.
    pub fn conjugate_subgroup(&self, f: &Subgroup, b: &Permutation) -> Result<Subgroup> {
        self.check_subgroup(f)?;
        let bi = self.require(b)?;
        Ok(self.conjugate_subgroup_index(f, bi))
    }

    fn conjugate_subgroup_index(&self, f: &Subgroup, b: usize) -> Subgroup {
        let binv = self.inv(b);
        let mut members: Vec<usize> = f
            .members
            .iter()
            .map(|&x| self.mul(self.mul(binv, x), b))
            .collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// `N(F) = {a : Fa = aF}`.
    pub fn normalizer(&self, f: &Subgroup) -> Subgroup {
        let members = (0..self.order())
            .filter(|&a| {
                self.subset_product(&f.members, &[a]) == self.subset_product(&[a], &f.members)
            })
            .collect();
        Subgroup { members }
    }

    /// Distinct conjugates `b⁻¹ F b`, sorted.
    pub fn conjugates_of(&self, f: &Subgroup) -> Vec<Subgroup> {
        let set: BTreeSet<Subgroup> = (0..self.order())
            .map(|b| self.conjugate_subgroup_index(f, b))
            .collect();
        set.into_iter().collect()
    }

    /// Number of distinct conjugates of `F`, counted directly.
    pub fn count_conjugate_subgroups(&self, f: &Subgroup) -> usize {
        self.conjugates_of(f).len()
    }

    /// Least `q ≥ 1` with `h^q ∈ F`.
    pub fn minimal_power_in_subgroup(&self, h: &Permutation, f: &Subgroup) -> Result<u64> {
        let hi = self.require(h)?;
        self.check_subgroup(f)?;
        let mut x = hi;
        let mut q = 1;
        while !f.contains(x) {
            x = self.mul(x, hi);
            q += 1;
        }
        Ok(q)
    }

    /// Number of non-central elements lying in some conjugate of `F`.
    pub fn fhat(&self, f: &Subgroup) -> usize {
        let center = self.center();
        let union: BTreeSet<usize> = self
            .conjugates_of(f)
            .iter()
            .flat_map(|c| c.members.iter().copied())
            .filter(|&x| !center.contains(x))
            .collect();
        union.len()
    }

    /// True iff every conjugate of `f` is a power of `f`.
    pub fn conjugate_only_to_powers(&self, f: &Permutation) -> Result<bool> {
        let fi = self.require(f)?;
        let powers = self.cyclic_from_index(fi);
        Ok((0..self.order()).all(|b| powers.contains(self.conjugate_index(fi, b))))
    }

    /// Every subgroup, sorted by order and then by members.
    ///
    /// Cyclic subgroups seed the search; every known subgroup is then joined
    /// with every seed until no new subgroup appears. Every subgroup is the
    /// join of its cyclic subgroups, so this reaches all of them.
    pub fn all_subgroups(&self, bound: usize) -> Result<Vec<Subgroup>> {
        let n = self.order();
        if n > bound {
            return Err(Error::SubgroupBoundExceeded { order: n, bound });
        }
        let table = IndexTable::new(self);

        let mut seeds: Vec<(usize, BitSet)> = Vec::new();
        let mut seen_seeds = BTreeSet::new();
        for g in 0..n {
            let set = BitSet::from_iter(n, self.cyclic_from_index(g).members);
            if seen_seeds.insert(set.clone()) {
                seeds.push((g, set));
            }
        }

        // Each known subgroup carries the seed generators it was built from.
        let mut known: BTreeSet<BitSet> = BTreeSet::new();
        let mut work: Vec<(BitSet, Vec<usize>)> = Vec::new();
        for (g, set) in &seeds {
            known.insert(set.clone());
            work.push((set.clone(), alloc::vec![*g]));
        }
        while let Some((set, gens)) = work.pop() {
            for (g, _) in &seeds {
                if set.contains(*g) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(*g);
                let joined = table.generate(&joined_gens);
                if known.insert(joined.clone()) {
                    work.push((joined, joined_gens));
                }
            }
        }

        let mut subgroups: Vec<Subgroup> = known
            .into_iter()
            .map(|s| Subgroup {
                members: s.iter().collect(),
            })
            .collect();
        subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        Ok(subgroups)
    }

    /// Proper subgroups with more than one element that sit inside no
    /// larger proper subgroup. The trivial subgroup never counts, so a group
    /// of prime order has none.
    pub fn maximal_subgroups(&self, bound: usize) -> Result<Vec<Subgroup>> {
        let n = self.order();
        let proper: Vec<Subgroup> = self
            .all_subgroups(bound)?
            .into_iter()
            .filter(|s| s.order() >= 2 && s.order() < n)
            .collect();
        Ok(proper
            .iter()
            .filter(|s| {
                !proper
                    .iter()
                    .any(|t| t.order() > s.order() && s.is_subset_of(t))
            })
            .cloned()
            .collect())
    }
}

/// Index multiplication table, used where a search needs many products.
struct IndexTable {
    n: usize,
    mul: Vec<u32>,
}

impl IndexTable {
    fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mul.push(group.mul(i, j) as u32);
            }
        }
        IndexTable { n, mul }
    }

    fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j] as usize
    }

    fn generate(&self, gens: &[usize]) -> BitSet {
        let mut set = BitSet::new(self.n);
        let mut queue = alloc::vec![0usize];
        set.insert(0);
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet {
            words: alloc::vec![0; n.div_ceil(64)],
        }
    }

    fn from_iter(n: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::new(n);
        for i in items {
            set.insert(i);
        }
        set
    }

    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word & (1u64 << b) != 0)
                .map(move |b| w * 64 + b)
        })
    }
}
