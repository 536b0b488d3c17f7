//! Finite permutation groups by explicit enumeration.
//!
//! Permutations act on the right: `a * b` applies `a` first, then `b`, and
//! the conjugate of `H` by `g` is `g^-1 H g`. Groups keep every element in a
//! canonical order (lexicographic on image vectors), so the identity is
//! always element 0 and subgroups are sorted index lists.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

/// Default cap on the order of an enumerated group.
pub const DEFAULT_ORDER_BOUND: usize = 20_000;

/// Largest order for which a full multiplication table is cached.
const TABLE_LIMIT: usize = 2048;

/// A bijection of `{0, .., n-1}`, interpreted over some named point set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return input(format!("images {images:?} do not form a bijection"));
            }
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u32).collect() })
    }

    /// Builds a permutation of `n` points from disjoint cycles of indices.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return input(format!("point index {a} out of range"));
                }
                if std::mem::replace(&mut moved[a], true) {
                    return input(format!("point index {a} appears twice in the cycles"));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Nontrivial cycles, each starting at its least point, in order of
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation over the given point names, `()` for the identity.
    pub fn to_cycle_string(&self, points: &[String]) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|&i| points[i].as_str()).collect::<Vec<_>>().join(" ")))
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.degree()).map(|i| i.to_string()).collect();
        write!(f, "{}", self.to_cycle_string(&names))
    }
}

/// A subgroup as a sorted list of element indices of its parent group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

/// A conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Least member in the sorted-element-list order.
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

/// A permutation group with every element enumerated.
#[derive(Clone)]
pub struct FiniteGroup {
    points: Vec<String>,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("generators", &self.generators.iter().map(|g| g.to_cycle_string(&self.points)).collect::<Vec<_>>())
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` on `points`, with the
    /// default order bound.
    pub fn from_generators(points: Vec<String>, generators: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_bounded(points, generators, DEFAULT_ORDER_BOUND)
    }

    pub fn from_generators_bounded(points: Vec<String>, generators: Vec<Permutation>, bound: usize) -> Result<Self> {
        let n = points.len();
        let distinct: BTreeSet<&String> = points.iter().collect();
        if distinct.len() != n {
            return input("duplicate point names");
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return input(format!("generator {g:?} acts on {} points, expected {n}", g.degree()));
        }
        let id = Permutation::identity(n);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= bound {
                        return Err(Error::Resource(format!("group order exceeds bound {bound}")));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        Ok(Self::assemble(points, generators, elements))
    }

    fn assemble(points: Vec<String>, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let lookup: HashMap<Permutation, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverses = elements.iter().map(|p| lookup[&p.inverse()]).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(lookup[&a.then(b)] as u32);
                }
            }
            t
        });
        FiniteGroup { points, generators, elements, lookup, inverses, table }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.lookup[&self.elements[a].then(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^-1 h g`
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != Self::IDENTITY {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn element_to_string(&self, g: usize) -> String {
        self.elements[g].to_cycle_string(&self.points)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order()).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(vec![Self::IDENTITY])
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order()];
        inside[Self::IDENTITY] = true;
        let mut queue = VecDeque::from([Self::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_sorted((0..self.order()).filter(|&i| inside[i]).collect())
    }

    /// Checks that `elements` is a subgroup and wraps it.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        if e.last().is_some_and(|&x| x >= self.order()) {
            return input("element index out of range");
        }
        let s = Subgroup::from_sorted(e);
        if !self.is_subgroup(&s) {
            return input("element set is not closed under products and inverses");
        }
        Ok(s)
    }

    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        h.contains(Self::IDENTITY)
            && h.elements.iter().all(|&a| a < self.order() && h.contains(self.inv(a)))
            && h.elements.iter().all(|&a| h.elements.iter().all(|&b| h.contains(self.mul(a, b))))
    }

    fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if self.is_subgroup(h) {
            Ok(())
        } else {
            input("not a subgroup of the given group")
        }
    }

    /// A small generating set, chosen greedily in canonical element order.
    pub fn generators_of(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial();
        // prefer elements of large order so cyclic groups get one generator
        let mut candidates: Vec<usize> = h.elements.clone();
        candidates.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        for g in candidates {
            if !current.contains(g) {
                gens.push(g);
                let mut all = gens.clone();
                all.sort_unstable();
                current = self.closure(&all);
            }
        }
        gens.sort_unstable();
        gens
    }

    /// `<g1, g2>` in cycle notation, or `1` for the trivial subgroup.
    pub fn subgroup_to_string(&self, h: &Subgroup) -> String {
        let gens = self.generators_of(h);
        if gens.is_empty() {
            return "1".into();
        }
        format!("⟨{}⟩", gens.iter().map(|&g| self.element_to_string(g)).collect::<Vec<_>>().join(", "))
    }

    /// Every subgroup exactly once, sorted by order and then by element list.
    ///
    /// Built in layers: the cyclic subgroups first, then repeated joins with
    /// cyclic subgroups until nothing new appears.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut cyclic: BTreeSet<Subgroup> = BTreeSet::new();
        let mut cyclic_gen: Vec<(Subgroup, usize)> = Vec::new();
        for g in 0..self.order() {
            let c = self.closure(&[g]);
            if cyclic.insert(c.clone()) {
                cyclic_gen.push((c, g));
            }
        }
        let mut all: BTreeSet<Subgroup> = cyclic.clone();
        let mut gens_of: HashMap<Subgroup, Vec<usize>> =
            cyclic_gen.iter().map(|(c, g)| (c.clone(), vec![*g])).collect();
        let mut frontier: Vec<Subgroup> = cyclic.into_iter().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                for (c, g) in &cyclic_gen {
                    if c.is_subset_of(s) {
                        continue;
                    }
                    let mut gens = gens_of[s].clone();
                    gens.push(*g);
                    let j = self.closure(&gens);
                    if all.insert(j.clone()) {
                        gens_of.insert(j.clone(), gens);
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Subgroup> = all.into_iter().collect();
        out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        out
    }

    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut e: Vec<usize> = h.elements.iter().map(|&x| self.conj(x, g)).collect();
        e.sort_unstable();
        Subgroup::from_sorted(e)
    }

    pub fn are_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.order() == b.order() && (0..self.order()).any(|g| &self.conjugate(a, g) == b)
    }

    /// Partition of all subgroups into conjugacy classes, ordered like
    /// [`Self::all_subgroups`] by representative.
    pub fn conjugacy_classes_of_subgroups(&self) -> Vec<SubgroupClass> {
        self.classes_among(self.all_subgroups())
    }

    /// Groups the given conjugation-closed family of subgroups into classes.
    pub fn classes_among(&self, subgroups: Vec<Subgroup>) -> Vec<SubgroupClass> {
        let index: HashMap<&Subgroup, usize> = subgroups.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, s) in subgroups.iter().enumerate() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = BTreeSet::new();
            for g in 0..self.order() {
                let conj = self.conjugate(s, g);
                if let Some(&j) = index.get(&conj) {
                    class_of[j] = c;
                    members.insert(j);
                }
            }
            classes.push(members.into_iter().collect());
        }
        classes
            .into_iter()
            .map(|m| {
                let mut members: Vec<Subgroup> = m.into_iter().map(|j| subgroups[j].clone()).collect();
                members.sort();
                SubgroupClass { representative: members[0].clone(), members }
            })
            .collect()
    }

    /// `N_G(H) = {g : g^-1 H g = H}`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.normalizer_in(&self.whole(), h)
    }

    /// Normalizer of `h` inside the subgroup `within`.
    pub fn normalizer_in(&self, within: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
        self.check_subgroup(h)?;
        self.check_subgroup(within)?;
        let e = within.elements.iter().copied().filter(|&g| &self.conjugate(h, g) == h).collect();
        Ok(Subgroup::from_sorted(e))
    }

    /// `C_G(H) = {g : gh = hg for all h in H}`.
    pub fn centralizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_subgroup(h)?;
        let e = (0..self.order())
            .filter(|&g| h.elements.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Ok(Subgroup::from_sorted(e))
    }

    pub fn center(&self, h: &Subgroup) -> Subgroup {
        let e = h
            .elements
            .iter()
            .copied()
            .filter(|&g| h.elements.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup::from_sorted(e)
    }

    /// Whether `h` is normal in `n` (both subgroups of this group, `h <= n`).
    pub fn is_normal_in(&self, h: &Subgroup, n: &Subgroup) -> bool {
        h.is_subset_of(n) && n.elements.iter().all(|&g| &self.conjugate(h, g) == h)
    }

    /// The subgroup `h` as a group in its own right, on the same points.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let elements: Vec<Permutation> = h.elements.iter().map(|&i| self.elements[i].clone()).collect();
        let gens = self.generators_of(h).into_iter().map(|i| self.elements[i].clone()).collect();
        // sorted because the parent's element list is sorted
        Self::assemble(self.points.clone(), gens, elements)
    }

    /// Quotient `n / h` for `h` normal in `n`.
    pub fn quotient(&self, n: &Subgroup, h: &Subgroup) -> Result<QuotientGroup> {
        self.check_subgroup(n)?;
        self.check_subgroup(h)?;
        if !self.is_normal_in(h, n) {
            return input("subgroup is not normal in the given overgroup");
        }
        QuotientGroup::build(self, n, h)
    }

    pub fn is_abelian(&self, h: &Subgroup) -> bool {
        h.elements.iter().all(|&a| h.elements.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_p_group(&self, h: &Subgroup, p: u64) -> bool {
        is_power_of(h.order() as u64, p)
    }

    /// The prime `p` with `|h| = p^n`; `None` for the trivial subgroup or
    /// orders that are not prime powers.
    pub fn p_group_prime(&self, h: &Subgroup) -> Option<u64> {
        let n = h.order() as u64;
        if n < 2 {
            return None;
        }
        let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
        is_power_of(n, p).then_some(p)
    }

    pub fn is_cyclic(&self, h: &Subgroup) -> bool {
        h.elements.iter().any(|&g| self.element_order(g) == h.order())
    }

    pub fn is_elementary_abelian(&self, h: &Subgroup, p: u64) -> bool {
        self.is_abelian(h)
            && h.elements
                .iter()
                .all(|&g| g == Self::IDENTITY || self.element_order(g) as u64 == p)
    }

    /// Decided by the upper central series reaching `h`.
    pub fn is_nilpotent(&self, h: &Subgroup) -> bool {
        let mut z: Vec<usize> = vec![Self::IDENTITY];
        loop {
            let zs = Subgroup::from_sorted(z.clone());
            let next: Vec<usize> = h
                .elements
                .iter()
                .copied()
                .filter(|&g| {
                    h.elements.iter().all(|&x| {
                        // [g, x] = g^-1 x^-1 g x
                        let c = self.mul(self.mul(self.inv(g), self.inv(x)), self.mul(g, x));
                        zs.contains(c)
                    })
                })
                .collect();
            if next.len() == h.order() {
                return true;
            }
            if next.len() == z.len() {
                return false;
            }
            z = next;
        }
    }

    /// `n` with `|h| = p^n`, for `h` elementary abelian.
    pub fn elementary_abelian_rank(&self, h: &Subgroup, p: u64) -> Result<u32> {
        if !self.is_elementary_abelian(h, p) {
            return input(format!("subgroup of order {} is not elementary abelian for p = {p}", h.order()));
        }
        Ok(log_p(h.order() as u64, p))
    }
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    if p < 2 || n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub(crate) fn log_p(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

/// The Weyl-type quotient `N / H`, with a faithful copy of it as a
/// permutation group acting regularly on the cosets.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    /// Cosets of `H` in `N`, as sorted element indices of the parent group.
    pub cosets: Vec<Vec<usize>>,
    /// `table[a][b]` is the coset of a product of representatives.
    pub table: Vec<Vec<usize>>,
    /// The quotient as a permutation group on points `c0, c1, ...`.
    pub group: FiniteGroup,
    coset_of: HashMap<usize, usize>,
    coset_to_element: Vec<usize>,
    element_to_coset: Vec<usize>,
}

impl QuotientGroup {
    fn build(parent: &FiniteGroup, n: &Subgroup, h: &Subgroup) -> Result<Self> {
        let mut coset_of = HashMap::new();
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for &g in &n.elements {
            if coset_of.contains_key(&g) {
                continue;
            }
            let mut c: Vec<usize> = h.elements.iter().map(|&x| parent.mul(g, x)).collect();
            c.sort_unstable();
            for &x in &c {
                coset_of.insert(x, cosets.len());
            }
            cosets.push(c);
        }
        let k = cosets.len();
        let mut table = vec![vec![0; k]; k];
        for a in 0..k {
            for b in 0..k {
                let prod = parent.mul(cosets[a][0], cosets[b][0]);
                table[a][b] = *coset_of
                    .get(&prod)
                    .ok_or_else(|| Error::Internal("product left the normalizer".into()))?;
            }
        }
        let points: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
        let perms: Vec<Permutation> = (0..k)
            .map(|b| Permutation::from_images((0..k).map(|a| table[a][b]).collect()))
            .collect::<Result<_>>()?;
        let group = FiniteGroup::from_generators(points, perms.clone())?;
        if group.order() != k {
            return Err(Error::Internal("regular representation has wrong order".into()));
        }
        let coset_to_element: Vec<usize> = perms.iter().map(|p| group.lookup[p]).collect();
        let mut element_to_coset = vec![0; k];
        for (c, &e) in coset_to_element.iter().enumerate() {
            element_to_coset[e] = c;
        }
        Ok(QuotientGroup { cosets, table, group, coset_of, coset_to_element, element_to_coset })
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    /// Image in [`Self::group`] of a parent element of `N`.
    pub fn project(&self, parent_element: usize) -> Option<usize> {
        self.coset_of.get(&parent_element).map(|&c| self.coset_to_element[c])
    }

    /// The coset (parent element indices) of a quotient-group element.
    pub fn coset_of_element(&self, element: usize) -> &[usize] {
        &self.cosets[self.element_to_coset[element]]
    }

    /// Full preimage in the parent group of a subgroup of the quotient.
    pub fn preimage(&self, s: &Subgroup) -> Subgroup {
        let mut e: Vec<usize> = s.elements.iter().flat_map(|&x| self.coset_of_element(x).iter().copied()).collect();
        e.sort_unstable();
        Subgroup::from_sorted(e)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn numbered(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    /// Group on points `1..=n` from 1-based cycles.
    pub fn group(n: usize, gens: &[&[&[usize]]]) -> FiniteGroup {
        let perms = gens
            .iter()
            .map(|cycles| {
                let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
                Permutation::from_cycles(n, &c).unwrap()
            })
            .collect();
        FiniteGroup::from_generators(numbered(n), perms).unwrap()
    }

    pub fn d8() -> FiniteGroup {
        group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]])
    }

    pub fn klein() -> FiniteGroup {
        group(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]])
    }

    pub fn s3() -> FiniteGroup {
        group(3, &[&[&[1, 2]], &[&[1, 2, 3]]])
    }

    pub fn s4() -> FiniteGroup {
        group(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]])
    }

    /// `(C_p)^n` as disjoint `p`-cycles on `n * p` points.
    pub fn elementary_abelian(p: usize, n: usize) -> FiniteGroup {
        let gens = (0..n)
            .map(|i| Permutation::from_cycles(n * p, &[(i * p..(i + 1) * p).collect()]).unwrap())
            .collect();
        FiniteGroup::from_generators(numbered(n * p), gens).unwrap()
    }

    /// Brute force: every element subset closed under products.
    fn brute_force_subgroup_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 12);
        (0u32..1 << n)
            .filter(|mask| {
                let e: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                !e.is_empty() && e.iter().all(|&a| e.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1))
            })
            .count()
    }

    #[test]
    fn generated_orders() {
        assert_eq!(group(2, &[&[&[1, 2]]]).order(), 2);
        assert_eq!(d8().order(), 8);
        let k = klein();
        assert_eq!(k.order(), 4);
        assert!(k.is_elementary_abelian(&k.whole(), 2));
    }

    #[test]
    fn identity_is_first() {
        let g = s4();
        assert!(g.element(FiniteGroup::IDENTITY).is_identity());
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        let bad = FiniteGroup::from_generators(numbered(3), vec![Permutation::identity(2)]);
        assert!(matches!(bad, Err(Error::Input(_))));
    }

    #[test]
    fn order_bound() {
        let r = FiniteGroup::from_generators_bounded(
            numbered(4),
            vec![Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(), Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()],
            10,
        );
        assert!(matches!(r, Err(Error::Resource(_))));
    }

    #[test]
    fn subgroup_counts_against_brute_force() {
        let c2 = group(2, &[&[&[1, 2]]]);
        assert_eq!(c2.all_subgroups().len(), 2);
        assert_eq!(klein().all_subgroups().len(), 5);
        assert_eq!(d8().all_subgroups().len(), 10);
        for g in [c2, klein(), d8(), s3()] {
            assert_eq!(g.all_subgroups().len(), brute_force_subgroup_count(&g));
        }
        assert_eq!(s4().all_subgroups().len(), 30);
    }

    #[test]
    fn class_counts() {
        assert_eq!(d8().conjugacy_classes_of_subgroups().len(), 8);
        assert_eq!(klein().conjugacy_classes_of_subgroups().len(), 5);
        assert_eq!(s4().conjugacy_classes_of_subgroups().len(), 11);
    }

    #[test]
    fn class_sizes_match_normalizer_index() {
        for g in [d8(), s4(), s3()] {
            let classes = g.conjugacy_classes_of_subgroups();
            let total: usize = classes.iter().map(|c| c.members.len()).sum();
            assert_eq!(total, g.all_subgroups().len());
            for c in &classes {
                let n = g.normalizer(&c.representative).unwrap();
                assert_eq!(c.members.len() * n.order(), g.order());
                assert_eq!(c.representative, c.members[0]);
            }
        }
    }

    #[test]
    fn normalizers_and_centralizers() {
        let g = d8();
        let refl = g.closure(&[g.index_of(&Permutation::from_cycles(4, &[vec![0, 2]]).unwrap()).unwrap()]);
        let n = g.normalizer(&refl).unwrap();
        assert_eq!(n.order(), 4);
        assert!(g.is_elementary_abelian(&n, 2));
        assert_eq!(g.centralizer(&g.trivial()).unwrap(), g.whole());
        let k = klein();
        for h in k.all_subgroups() {
            assert_eq!(k.normalizer(&h).unwrap(), k.whole());
        }
        let not_sub = Subgroup::from_sorted(vec![0, 1]);
        if !g.is_subgroup(&not_sub) {
            assert!(g.normalizer(&not_sub).is_err());
        }
    }

    #[test]
    fn lagrange_and_containments() {
        for g in [d8(), s4()] {
            for h in g.all_subgroups() {
                assert_eq!(g.order() % h.order(), 0);
                let n = g.normalizer(&h).unwrap();
                let c = g.centralizer(&h).unwrap();
                assert!(h.is_subset_of(&n));
                assert!(c.is_subset_of(&n));
            }
        }
    }

    #[test]
    fn quotients() {
        let g = d8();
        let z = g.center(&g.whole());
        assert_eq!(z.order(), 2);
        let q = g.quotient(&g.whole(), &z).unwrap();
        assert_eq!(q.order(), 4);
        let qg = &q.group;
        assert!(qg.is_elementary_abelian(&qg.whole(), 2));
        assert_eq!(g.quotient(&g.whole(), &g.whole()).unwrap().order(), 1);
        let c4 = group(4, &[&[&[1, 2, 3, 4]]]);
        let c2 = c4.closure(&[c4.index_of(&Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap()).unwrap()]);
        let q = c4.quotient(&c4.whole(), &c2).unwrap();
        assert_eq!(q.order(), 2);
        // projection is a homomorphism
        for a in 0..c4.order() {
            for b in 0..c4.order() {
                let pa = q.project(a).unwrap();
                let pb = q.project(b).unwrap();
                assert_eq!(q.project(c4.mul(a, b)).unwrap(), q.group.mul(pa, pb));
            }
        }
        let s = s3();
        let refl = s.closure(&[1]);
        if !s.is_normal_in(&refl, &s.whole()) {
            assert!(s.quotient(&s.whole(), &refl).is_err());
        }
    }

    #[test]
    fn quotient_orders_over_corpus() {
        for g in [d8(), s4()] {
            for h in g.all_subgroups() {
                let n = g.normalizer(&h).unwrap();
                let q = g.quotient(&n, &h).unwrap();
                assert_eq!(q.order() * h.order(), n.order());
            }
        }
    }

    #[test]
    fn predicates() {
        let g = d8();
        assert!(g.is_nilpotent(&g.whole()));
        assert!(!g.is_elementary_abelian(&g.whole(), 2));
        let s = s3();
        assert!(!s.is_nilpotent(&s.whole()));
        let k = klein();
        assert!(k.is_elementary_abelian(&k.whole(), 2));
        assert!(!k.is_cyclic(&k.whole()));
        assert!(group(4, &[&[&[1, 2, 3, 4]]]).is_cyclic(&group(4, &[&[&[1, 2, 3, 4]]]).whole()));
        assert!(!s4().is_nilpotent(&s4().whole()));
    }

    #[test]
    fn elementary_abelian_ranks() {
        let k = klein();
        assert_eq!(k.elementary_abelian_rank(&k.trivial(), 2).unwrap(), 0);
        assert_eq!(k.elementary_abelian_rank(&k.closure(&[1]), 2).unwrap(), 1);
        assert_eq!(k.elementary_abelian_rank(&k.whole(), 2).unwrap(), 2);
        let g = d8();
        assert!(g.elementary_abelian_rank(&g.whole(), 2).is_err());
    }

    #[test]
    fn maximal_subgroups_of_p_groups_have_index_p() {
        for g in [d8(), klein(), group(8, &[&[&[1, 2, 3, 4, 5, 6, 7, 8]]])] {
            let subs = g.all_subgroups();
            for m in &subs {
                if m.order() == g.order() {
                    continue;
                }
                let maximal = !subs.iter().any(|s| s.order() > m.order() && s.order() < g.order() && m.is_subset_of(s));
                if maximal {
                    assert_eq!(g.order() / m.order(), 2);
                }
            }
        }
    }

    #[test]
    fn cycle_strings() {
        let p = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(p.to_cycle_string(&numbered(4)), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_cycle_string(&numbered(3)), "()");
    }
}
