//! Finite posets, chiefly posets of subgroups, with their order complexes
//! and Euler characteristics.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{input, precondition, Result};
use crate::exactlin::HomologyGroup;
use crate::permgrp::{FiniteGroup, Subgroup};
use crate::simp::{validate_vertex_name, SimplicialComplex};

/// A finite poset given by its strict order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    less: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// `less[i][j]` means `i < j`. The relation must be irreflexive and
    /// transitive, and labels must be usable as vertex names.
    pub fn new(labels: Vec<String>, less: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if less.len() != n || less.iter().any(|r| r.len() != n) {
            return input("order matrix shape does not match the labels");
        }
        for l in &labels {
            validate_vertex_name(l)?;
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return input("duplicate poset label");
        }
        for i in 0..n {
            if less[i][i] {
                return input(format!("order is not irreflexive at {}", labels[i]));
            }
            for j in 0..n {
                if less[i][j] {
                    if let Some(k) = (0..n).find(|&k| less[j][k] && !less[i][k]) {
                        return input(format!("order is not transitive: {} < {} < {}", labels[i], labels[j], labels[k]));
                    }
                }
            }
        }
        Ok(FinitePoset { labels, less })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    /// Pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.less[i][j] && !(0..n).any(|k| self.less[i][k] && self.less[k][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Vertices are the elements, simplices the chains.
    pub fn order_complex(&self) -> SimplicialComplex {
        let mut edges = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.less[i][j] {
                    edges.push((self.labels[i].as_str(), self.labels[j].as_str()));
                }
            }
        }
        SimplicialComplex::flag_complex_from_graph(&self.labels, &edges).expect("comparability graph is simple")
    }

    /// `Σ_{i ≥ -1} (-1)^i c_i` where `c_i` counts chains with `i + 1`
    /// elements and the empty chain sits in degree `-1`.
    pub fn augmented_euler(&self) -> i64 {
        // signed count of chains with a given minimum, filled from the top down
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse((0..n).filter(|&j| self.less[i][j]).count()));
        order.reverse();
        let mut from: Vec<Option<i64>> = vec![None; n];
        for &x in &order {
            let above: i64 = (0..n).filter(|&y| self.less[x][y]).map(|y| from[y].expect("larger elements come first")).sum();
            from[x] = Some(1 - above);
        }
        -1 + from.iter().map(|v| v.expect("filled")).sum::<i64>()
    }

    /// Number of chains with `k + 1` elements, for each `k`.
    pub fn chain_counts(&self) -> Vec<u64> {
        let n = self.len();
        let mut counts = Vec::new();
        let mut stack: Vec<(usize, usize)> = (0..n).map(|i| (i, 0)).collect();
        while let Some((x, k)) = stack.pop() {
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
            stack.extend((0..n).filter(|&y| self.less[x][y]).map(|y| (y, k + 1)));
        }
        counts
    }
}

/// Which subgroups enter a subgroup poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupFilter {
    /// `F₁`: nontrivial subgroups.
    Nontrivial,
    /// `N₁`: nontrivial nilpotent subgroups.
    NilpotentNontrivial,
    /// `A₁`: nontrivial elementary abelian `p`-subgroups for the given
    /// prime. Without a prime, the nontrivial abelian subgroups of
    /// squarefree exponent, i.e. products of elementary abelian subgroups
    /// for distinct primes.
    ElementaryAbelianNontrivial(Option<u64>),
    /// `S(H)`: nontrivial proper subgroups of `H`.
    ProperNontrivialOf(Subgroup),
}

/// A poset of subgroups under strict inclusion.
#[derive(Clone, Debug)]
pub struct SubgroupPoset {
    pub subgroups: Vec<Subgroup>,
    pub poset: FinitePoset,
}

fn is_squarefree(mut n: usize) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        if n.is_multiple_of(d) {
            n /= d;
        }
        d += 1;
    }
    true
}

fn is_elementary_abelian_any(g: &FiniteGroup, h: &Subgroup) -> bool {
    g.is_abelian(h) && h.elements().iter().all(|&x| is_squarefree(g.element_order(x)))
}

pub fn subgroup_poset(g: &FiniteGroup, filter: &SubgroupFilter) -> SubgroupPoset {
    let subgroups: Vec<Subgroup> = g
        .all_subgroups()
        .into_iter()
        .filter(|h| !h.is_trivial())
        .filter(|h| match filter {
            SubgroupFilter::Nontrivial => true,
            SubgroupFilter::NilpotentNontrivial => g.is_nilpotent(h),
            SubgroupFilter::ElementaryAbelianNontrivial(Some(p)) => g.is_elementary_abelian(h, *p),
            SubgroupFilter::ElementaryAbelianNontrivial(None) => is_elementary_abelian_any(g, h),
            SubgroupFilter::ProperNontrivialOf(top) => h.is_subset_of(top) && h.order() < top.order(),
        })
        .collect();
    let width = subgroups.len().to_string().len().max(4);
    let labels = (0..subgroups.len()).map(|i| format!("S{i:0width$}")).collect();
    let less = subgroups
        .iter()
        .map(|a| subgroups.iter().map(|b| a.order() < b.order() && a.is_subset_of(b)).collect())
        .collect();
    let poset = FinitePoset::new(labels, less).expect("inclusion is a strict order");
    SubgroupPoset { subgroups, poset }
}

/// `(-1)^n p^(n choose 2)`.
pub fn elementary_abelian_euler_formula(p: u64, n: u32) -> Result<i64> {
    if !crate::exactlin::is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    let e = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let magnitude = i64::try_from(p)
        .ok()
        .and_then(|p| p.checked_pow(e))
        .ok_or_else(|| crate::Error::Overflow(format!("{p}^{e} does not fit in 64 bits")))?;
    Ok(if n.is_multiple_of(2) { magnitude } else { -magnitude })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuillenReport {
    pub nilpotent_count: usize,
    pub elementary_abelian_count: usize,
    pub nilpotent_homology: BTreeMap<i64, HomologyGroup>,
    pub elementary_abelian_homology: BTreeMap<i64, HomologyGroup>,
    pub equal: bool,
}

/// Compares the reduced homology of `|N₁(G)|` and `|A₁(G)|`, with `A₁`
/// taken over all primes.
pub fn quillen_thevenaz_check(g: &FiniteGroup) -> QuillenReport {
    let n1 = subgroup_poset(g, &SubgroupFilter::NilpotentNontrivial);
    let a1 = subgroup_poset(g, &SubgroupFilter::ElementaryAbelianNontrivial(None));
    let nh = n1.poset.order_complex().reduced_homology();
    let ah = a1.poset.order_complex().reduced_homology();
    QuillenReport {
        nilpotent_count: n1.subgroups.len(),
        elementary_abelian_count: a1.subgroups.len(),
        equal: same_homology(&nh, &ah),
        nilpotent_homology: nh,
        elementary_abelian_homology: ah,
    }
}

/// Degreewise equality, treating missing degrees as zero.
pub fn same_homology(a: &BTreeMap<i64, HomologyGroup>, b: &BTreeMap<i64, HomologyGroup>) -> bool {
    let zero = HomologyGroup::zero();
    a.keys().chain(b.keys()).all(|d| a.get(d).unwrap_or(&zero) == b.get(d).unwrap_or(&zero))
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylReport {
    pub overgroups_count: usize,
    pub weyl_order: usize,
    pub overgroups_homology: BTreeMap<i64, HomologyGroup>,
    pub weyl_homology: BTreeMap<i64, HomologyGroup>,
    pub equal: bool,
}

/// Compares `{K : H < K ≤ G}` with `F₁(N_G(H)/H)` for a `p`-group `G`.
pub fn weyl_poset_check(g: &FiniteGroup, h: &Subgroup) -> Result<WeylReport> {
    if g.p_group_prime(&g.whole()).is_none() && g.order() > 1 {
        return precondition("the group is not a p-group");
    }
    if !g.is_subgroup(h) {
        return input("not a subgroup");
    }
    let over: Vec<Subgroup> = g.all_subgroups().into_iter().filter(|k| k.order() > h.order() && h.is_subset_of(k)).collect();
    let labels = (0..over.len()).map(|i| format!("K{i:04}")).collect();
    let less = over.iter().map(|a| over.iter().map(|b| a.order() < b.order() && a.is_subset_of(b)).collect()).collect();
    let over_poset = FinitePoset::new(labels, less).expect("inclusion is a strict order");
    let n = g.normalizer(h)?;
    let q = g.quotient(&n, h)?;
    let weyl = subgroup_poset(&q.group, &SubgroupFilter::Nontrivial);
    let oh = over_poset.order_complex().reduced_homology();
    let wh = weyl.poset.order_complex().reduced_homology();
    Ok(WeylReport {
        overgroups_count: over.len(),
        weyl_order: q.order(),
        equal: same_homology(&oh, &wh),
        overgroups_homology: oh,
        weyl_homology: wh,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::tests::{d8, elementary_abelian, group, klein, s3, s4};
    use proptest::prelude::*;

    fn a4() -> FiniteGroup {
        group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]])
    }

    fn d12() -> FiniteGroup {
        group(6, &[&[&[1, 2, 3, 4, 5, 6]], &[&[1, 6], &[2, 5], &[3, 4]]])
    }

    fn oracle_euler(p: &FinitePoset) -> i64 {
        // alternating count of simplices of the order complex, minus the empty chain
        -1 + p.order_complex().euler_characteristic()
    }

    #[test]
    fn elementary_abelian_poset_of_klein() {
        let sp = subgroup_poset(&klein(), &SubgroupFilter::ElementaryAbelianNontrivial(Some(2)));
        assert_eq!(sp.poset.len(), 4);
        assert_eq!(sp.poset.cover_relations().len(), 3);
        let oc = sp.poset.order_complex();
        assert_eq!(oc.f_vector(), vec![4, 3]);
        assert!(oc.reduced_homology().values().all(HomologyGroup::is_trivial));
    }

    #[test]
    fn proper_subgroups_of_prime_cyclic() {
        let g = elementary_abelian(3, 1);
        let sp = subgroup_poset(&g, &SubgroupFilter::ProperNontrivialOf(g.whole()));
        assert!(sp.poset.is_empty());
        assert_eq!(sp.poset.augmented_euler(), -1);
    }

    #[test]
    fn symmetric_group_three() {
        let g = s3();
        let n1 = subgroup_poset(&g, &SubgroupFilter::NilpotentNontrivial);
        let a1 = subgroup_poset(&g, &SubgroupFilter::ElementaryAbelianNontrivial(None));
        assert_eq!(n1.subgroups, a1.subgroups);
        assert_eq!(n1.poset.len(), 4);
        assert!(n1.poset.cover_relations().is_empty());
    }

    #[test]
    fn order_complex_shapes() {
        let anti = FinitePoset::new(vec!["a".into(), "b".into(), "c".into()], vec![vec![false; 3]; 3]).unwrap();
        assert_eq!(anti.order_complex().f_vector(), vec![3]);
        let chain = FinitePoset::new(vec!["a".into(), "b".into()], vec![vec![false, true], vec![false, false]]).unwrap();
        assert_eq!(chain.order_complex().f_vector(), vec![2, 1]);
    }

    #[test]
    fn rejects_non_orders() {
        let bad = FinitePoset::new(vec!["a".into()], vec![vec![true]]);
        assert!(bad.is_err());
        let l: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
        let intrans = vec![vec![false, true, false], vec![false, false, true], vec![false, false, false]];
        assert!(FinitePoset::new(l, intrans).is_err());
    }

    #[test]
    fn augmented_euler_values() {
        let v = elementary_abelian(2, 2);
        let s = subgroup_poset(&v, &SubgroupFilter::ProperNontrivialOf(v.whole()));
        assert_eq!(s.poset.augmented_euler(), 2);
        let c = elementary_abelian(2, 3);
        let s = subgroup_poset(&c, &SubgroupFilter::ProperNontrivialOf(c.whole()));
        assert_eq!(s.poset.len(), 14);
        assert_eq!(s.poset.chain_counts(), vec![14, 21]);
        assert_eq!(s.poset.augmented_euler(), -8);
    }

    #[test]
    fn closed_form_matches_chain_count() {
        assert_eq!(elementary_abelian_euler_formula(2, 1).unwrap(), -1);
        assert_eq!(elementary_abelian_euler_formula(2, 2).unwrap(), 2);
        assert_eq!(elementary_abelian_euler_formula(3, 3).unwrap(), -27);
        assert_eq!(elementary_abelian_euler_formula(5, 0).unwrap(), 1);
        assert!(elementary_abelian_euler_formula(4, 2).is_err());
        for p in [2usize, 3] {
            for n in 1..=3 {
                let g = elementary_abelian(p, n);
                let s = subgroup_poset(&g, &SubgroupFilter::ProperNontrivialOf(g.whole()));
                let formula = elementary_abelian_euler_formula(p as u64, n as u32).unwrap();
                assert_eq!(s.poset.augmented_euler(), formula, "p={p} n={n}");
                assert_eq!(oracle_euler(&s.poset), formula);
            }
        }
        let g = elementary_abelian(3, 3);
        let s = subgroup_poset(&g, &SubgroupFilter::ProperNontrivialOf(g.whole()));
        assert_eq!(s.poset.chain_counts(), vec![26, 52]);
    }

    #[test]
    fn augmented_euler_matches_homology() {
        for g in [s3(), s4(), d8(), a4(), d12()] {
            for f in [SubgroupFilter::Nontrivial, SubgroupFilter::NilpotentNontrivial, SubgroupFilter::ElementaryAbelianNontrivial(None)] {
                let sp = subgroup_poset(&g, &f);
                let h = sp.poset.order_complex().reduced_homology();
                if h.values().all(HomologyGroup::is_torsion_free) {
                    let alt: i64 = h.iter().map(|(d, x)| if d % 2 == 0 { x.betti as i64 } else { -(x.betti as i64) }).sum();
                    assert_eq!(sp.poset.augmented_euler(), alt);
                }
                assert_eq!(sp.poset.augmented_euler(), oracle_euler(&sp.poset));
            }
        }
    }

    #[test]
    fn quillen_equalities() {
        for g in [s3(), s4(), a4(), d8(), d12()] {
            let r = quillen_thevenaz_check(&g);
            assert!(r.equal, "{g:?}");
        }
        let r = quillen_thevenaz_check(&d8());
        assert!(r.nilpotent_homology.values().all(HomologyGroup::is_trivial));
        let s4r = quillen_thevenaz_check(&s4());
        assert!(s4r.nilpotent_count > s4r.elementary_abelian_count);
        // the cyclic subgroup of order 6 joins the order-3 subgroup to the rest
        let d = d12();
        let a1 = subgroup_poset(&d, &SubgroupFilter::ElementaryAbelianNontrivial(None));
        assert!(a1.subgroups.iter().any(|h| h.order() == 6 && d.is_cyclic(h)));
        let per_prime = subgroup_poset(&d, &SubgroupFilter::ElementaryAbelianNontrivial(Some(3)));
        assert_eq!(per_prime.subgroups.len(), 1);
    }

    #[test]
    fn elementary_abelian_posets_of_p_groups_contract() {
        for g in [d8(), klein(), elementary_abelian(2, 3), elementary_abelian(3, 2), group(4, &[&[&[1, 2, 3, 4]]])] {
            let sp = subgroup_poset(&g, &SubgroupFilter::ElementaryAbelianNontrivial(None));
            assert!(sp.poset.order_complex().reduced_homology().values().all(HomologyGroup::is_trivial));
        }
    }

    #[test]
    fn weyl_checks() {
        let g = d8();
        let refl = g.all_subgroups().into_iter().find(|h| h.order() == 2 && !g.is_normal_in(h, &g.whole())).unwrap();
        let r = weyl_poset_check(&g, &refl).unwrap();
        assert!(r.equal);
        assert!(r.overgroups_homology.values().all(HomologyGroup::is_trivial));
        assert!(weyl_poset_check(&g, &g.trivial()).unwrap().equal);
        let c = elementary_abelian(2, 3);
        for h in c.all_subgroups().into_iter().filter(|h| h.order() == 2) {
            assert!(weyl_poset_check(&c, &h).unwrap().equal);
        }
        assert!(weyl_poset_check(&g, &g.whole()).unwrap().equal);
        assert!(matches!(weyl_poset_check(&s3(), &s3().trivial()), Err(crate::Error::Precondition(_))));
    }

    proptest! {
        #[test]
        fn random_posets_euler(pairs in proptest::collection::vec((0usize..6, 0usize..6), 0..12)) {
            // an order generated by i < j edges with i < j as integers, closed transitively
            let n = 6;
            let mut less = vec![vec![false; n]; n];
            for (a, b) in pairs {
                if a < b { less[a][b] = true; }
            }
            for k in 0..n { for i in 0..n { for j in 0..n {
                if less[i][k] && less[k][j] { less[i][j] = true; }
            }}}
            let p = FinitePoset::new((0..n).map(|i| format!("x{i}")).collect(), less).unwrap();
            let counts = p.chain_counts();
            let direct = -1 + counts.iter().enumerate().map(|(k, c)| if k % 2 == 0 { *c as i64 } else { -(*c as i64) }).sum::<i64>();
            prop_assert_eq!(p.augmented_euler(), direct);
            prop_assert_eq!(p.augmented_euler(), oracle_euler(&p));
        }
    }
}
