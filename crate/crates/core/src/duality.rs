//! Cohen–Macaulay checks, duality of right-angled Artin groups, the
//! Jensen–Meier cohomology profile, doubling a complex along a full
//! subcomplex, and the per-class Bredon duality obstruction scan.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{input, precondition, Result};
use crate::exactlin::HomologyGroup;
use crate::permgrp::{FiniteGroup, Permutation};
use crate::simp::{GroupAction, Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CMFailure {
    /// Vertex names; empty for the empty simplex.
    pub simplex: Vec<String>,
    pub degree: i64,
    pub group: HomologyGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CMReport {
    pub is_cm: bool,
    pub dimension: i64,
    pub failures: Vec<CMFailure>,
}

/// Simplices in canonical order, starting with the empty simplex.
fn all_simplices_with_empty(x: &SimplicialComplex) -> Vec<Simplex> {
    let mut out = vec![Vec::new()];
    out.extend(x.simplices().into_iter().cloned());
    out
}

fn cm_report(x: &SimplicialComplex) -> CMReport {
    let n = x.dimension();
    let mut failures = Vec::new();
    for s in all_simplices_with_empty(x) {
        let allowed = n - (s.len() as i64 - 1) - 1;
        let link = x.link(&s).expect("simplex of the complex");
        for (d, g) in link.reduced_homology() {
            if d != allowed && !g.is_trivial() {
                failures.push(CMFailure { simplex: x.simplex_names(&s), degree: d, group: g });
            }
        }
    }
    CMReport { is_cm: failures.is_empty(), dimension: n, failures }
}

/// Checks that for every simplex `σ`, including the empty one, the reduced
/// homology of `Lk σ` vanishes outside degree `dim X - dim σ - 1`.
pub fn cohen_macaulay(x: &SimplicialComplex) -> Result<CMReport> {
    if x.is_empty() {
        return input("the complex is empty");
    }
    Ok(cm_report(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub is_duality: bool,
    pub report: CMReport,
}

/// `A_X` is a duality group exactly when the flag complex `X` is
/// Cohen–Macaulay.
pub fn raag_duality(x: &SimplicialComplex) -> Result<DualityReport> {
    if !x.is_flag() {
        return precondition("the complex is not flag");
    }
    let report = cohen_macaulay(x)?;
    Ok(DualityReport { is_duality: report.is_cm, report })
}

/// How many copies of a summand occur in the cohomology of the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Multiplicity {
    One,
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JMEntry {
    pub simplex: Vec<String>,
    /// Degree of the reduced link cohomology, `k - dim σ - 2`.
    pub link_degree: i64,
    pub group: HomologyGroup,
    pub multiplicity: Multiplicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JMProfile {
    /// Nonzero contributions to `H^k(A_X, Z A_X)`, keyed by `k`; every
    /// degree `0..=max_degree` is present, possibly with no entries.
    pub degrees: BTreeMap<i64, Vec<JMEntry>>,
    pub torsion_free: bool,
}

impl JMProfile {
    /// All entries sit in one degree and are torsion-free.
    pub fn is_concentrated(&self) -> bool {
        self.torsion_free && self.degrees.values().filter(|e| !e.is_empty()).count() <= 1
    }
}

/// Reduced cohomology in degree `j` from reduced homology, by universal
/// coefficients: the free part of `H̃_j` plus the torsion of `H̃_{j-1}`.
pub fn reduced_cohomology(homology: &BTreeMap<i64, HomologyGroup>, j: i64) -> HomologyGroup {
    HomologyGroup {
        betti: homology.get(&j).map_or(0, |g| g.betti),
        torsion: homology.get(&(j - 1)).map_or(Vec::new(), |g| g.torsion.clone()),
    }
}

/// The summands `H̃^{k - dim σ - 2}(Lk σ)` of `H^k(A_X, Z A_X)`. The empty
/// simplex contributes once, every other simplex with infinite
/// multiplicity.
pub fn jensen_meier_profile(x: &SimplicialComplex, max_degree: i64) -> Result<JMProfile> {
    if !x.is_flag() {
        return precondition("the complex is not flag");
    }
    let mut degrees: BTreeMap<i64, Vec<JMEntry>> = (0..=max_degree).map(|k| (k, Vec::new())).collect();
    let mut torsion_free = true;
    for s in all_simplices_with_empty(x) {
        let dim = s.len() as i64 - 1;
        let homology = x.link(&s).expect("simplex of the complex").reduced_homology();
        for k in 0..=max_degree {
            let j = k - dim - 2;
            let group = reduced_cohomology(&homology, j);
            if group.is_trivial() {
                continue;
            }
            torsion_free &= group.is_torsion_free();
            let multiplicity = if s.is_empty() { Multiplicity::One } else { Multiplicity::Infinite };
            degrees.get_mut(&k).expect("degree present").push(JMEntry { simplex: x.simplex_names(&s), link_degree: j, group, multiplicity });
        }
    }
    Ok(JMProfile { degrees, torsion_free })
}

/// Two copies of `x` glued along the full subcomplex `a`, with the swap of
/// the copies as an action of the group of order two (trivial when `a` is
/// all of `x`). Vertices of the second copy get a `'` suffix.
pub fn double_along(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<(SimplicialComplex, GroupAction)> {
    let a_idx = x.simplex_from_names(a.vertices())?;
    if a.simplices().iter().any(|s| !x.contains(&x.simplex_from_names(&a.simplex_names(s)).expect("known vertices"))) {
        return input("the gluing complex is not a subcomplex");
    }
    let full = x.full_subcomplex(a.vertices())?;
    if &full != a {
        return precondition("the gluing complex is not a full subcomplex");
    }
    let mut names: Vec<String> = x.vertices().to_vec();
    let mut twin: Vec<String> = Vec::with_capacity(names.len());
    for (v, name) in x.vertices().iter().enumerate() {
        if a_idx.binary_search(&v).is_ok() {
            twin.push(name.clone());
        } else {
            let mut t = format!("{name}'");
            while names.contains(&t) {
                t.push('\'');
            }
            names.push(t.clone());
            twin.push(t);
        }
    }
    let mut facets: Vec<Vec<String>> = Vec::new();
    for s in x.simplices() {
        facets.push(x.simplex_names(s));
        facets.push(s.iter().map(|&v| twin[v].clone()).collect());
    }
    let doubled = SimplicialComplex::from_maximal_simplices(&names, &facets)?;
    let mut images: Vec<usize> = (0..doubled.vertices().len()).collect();
    for (v, t) in twin.iter().enumerate() {
        let i = doubled.vertex_index(&x.vertices()[v]).expect("first copy");
        let j = doubled.vertex_index(t).expect("second copy");
        images[i] = j;
        images[j] = i;
    }
    let swap = Permutation::from_images(images)?;
    let group = FiniteGroup::from_generators(doubled.vertices().to_vec(), vec![swap.clone()])?;
    let action = GroupAction::new(doubled.clone(), group, vec![swap])?;
    Ok((doubled, action))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionClass {
    pub label: String,
    pub order: usize,
    pub fixed_vertices: Vec<String>,
    pub fixed_f_vector: Vec<usize>,
    pub report: CMReport,
    /// Whether `A_{L^H}` is a duality group.
    pub duality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub classes: Vec<ObstructionClass>,
    pub obstructed_at: Vec<String>,
    pub verdict: String,
}

/// For each class `H ≤ K`, whether `A_{L^H}` is a duality group. A failure
/// anywhere obstructs Bredon duality of `K ⋉ A_L`; passing everywhere
/// proves nothing, and the verdict says so.
pub fn bredon_duality_obstruction(a: &GroupAction) -> Result<ObstructionReport> {
    if !a.complex().is_flag() {
        return precondition("the complex is not flag");
    }
    let k = a.group();
    let mut classes = Vec::new();
    let mut obstructed_at = Vec::new();
    for class in k.conjugacy_classes_of_subgroups() {
        let h = class.representative;
        let fixed = a.fixed_subcomplex(&h)?;
        // the empty complex is Cohen–Macaulay of dimension -1
        let report = cm_report(&fixed);
        let label = k.subgroup_to_string(&h);
        if !report.is_cm {
            obstructed_at.push(label.clone());
        }
        classes.push(ObstructionClass {
            label,
            order: h.order(),
            fixed_vertices: fixed.vertices().to_vec(),
            fixed_f_vector: fixed.f_vector(),
            duality: report.is_cm,
            report,
        });
    }
    let verdict = if obstructed_at.is_empty() {
        "no obstruction found (this does not prove Bredon duality)".to_string()
    } else {
        format!("obstructed at {}", obstructed_at.join(", "))
    };
    Ok(ObstructionReport { classes, obstructed_at, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::tests::group;
    use crate::simp::tests::{boundary_tetrahedron, octahedron, rp2_6, star, t_complex, two_edges};
    use crate::simp::{are_isomorphic, find_full_subcomplex_isomorphic};

    fn point() -> SimplicialComplex {
        SimplicialComplex::from_maximal_simplices(&["a"], &[vec!["a"]]).unwrap()
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::from_maximal_simplices(&["a", "b"], &[vec!["a", "b"]]).unwrap()
    }

    fn simpler_pipeline() -> (SimplicialComplex, GroupAction) {
        let s = boundary_tetrahedron().barycentric_subdivision();
        let e = find_full_subcomplex_isomorphic(&s, &t_complex()).unwrap();
        let a = s.full_subcomplex(&e.image()).unwrap();
        double_along(&s, &a).unwrap()
    }

    #[test]
    fn cm_examples() {
        assert!(cohen_macaulay(&octahedron()).unwrap().is_cm);
        assert!(cohen_macaulay(&point()).unwrap().is_cm);
        assert!(cohen_macaulay(&boundary_tetrahedron().barycentric_subdivision()).unwrap().is_cm);
        let t = cohen_macaulay(&t_complex()).unwrap();
        assert!(!t.is_cm);
        assert_eq!(t.failures, vec![CMFailure { simplex: vec!["u".into()], degree: 0, group: HomologyGroup::free(1) }]);
        assert!(cohen_macaulay(&SimplicialComplex::empty()).is_err());
    }

    #[test]
    fn cm_failure_for_non_pure() {
        let x = SimplicialComplex::from_maximal_simplices(&["a", "b", "c"], &[vec!["a", "b"], vec!["c"]]).unwrap();
        assert!(!cohen_macaulay(&x).unwrap().is_cm);
    }

    #[test]
    fn raag_duality_examples() {
        assert!(raag_duality(&octahedron()).unwrap().is_duality);
        assert!(!raag_duality(&t_complex()).unwrap().is_duality);
        assert!(raag_duality(&edge()).unwrap().is_duality);
        assert!(matches!(raag_duality(&boundary_tetrahedron()), Err(crate::Error::Precondition(_))));
    }

    #[test]
    fn jensen_meier_of_t() {
        let p = jensen_meier_profile(&t_complex(), 4).unwrap();
        assert!(p.degrees[&0].is_empty());
        assert!(p.degrees[&1].is_empty());
        assert_eq!(p.degrees[&2].len(), 1);
        assert_eq!(p.degrees[&2][0].simplex, vec!["u"]);
        assert_eq!(p.degrees[&2][0].group, HomologyGroup::free(1));
        assert_eq!(p.degrees[&3].len(), 2);
        assert!(p.degrees[&3].iter().all(|e| e.simplex.len() == 3 && e.group == HomologyGroup::free(1) && e.link_degree == -1));
        assert!(p.degrees[&4].is_empty());
        assert!(p.torsion_free);
        assert!(!p.is_concentrated());
    }

    #[test]
    fn cohomology_from_homology() {
        let h = rp2_6().reduced_homology();
        assert!(reduced_cohomology(&h, 1).is_trivial());
        assert_eq!(reduced_cohomology(&h, 2), HomologyGroup { betti: 0, torsion: vec![2] });
    }

    #[test]
    fn duality_agrees_with_profile() {
        let corpus = [
            octahedron(),
            t_complex(),
            edge(),
            point(),
            star(),
            two_edges(),
            boundary_tetrahedron().barycentric_subdivision(),
            rp2_6().barycentric_subdivision(),
            simpler_pipeline().0,
        ];
        for x in corpus {
            let d = raag_duality(&x).unwrap().is_duality;
            let p = jensen_meier_profile(&x, x.dimension() + 2).unwrap();
            assert_eq!(d, p.is_concentrated(), "{:?}", x.f_vector());
        }
    }

    #[test]
    fn doubling_small() {
        let (l, a) = double_along(&point(), &SimplicialComplex::empty()).unwrap();
        assert_eq!(l.vertices(), &["a".to_string(), "a'".to_string()]);
        assert_eq!(a.group().order(), 2);
        assert!(a.fixed_subcomplex(&a.group().whole()).unwrap().is_empty());
        let just_a = edge().full_subcomplex(&["a"]).unwrap();
        let (l, a) = double_along(&edge(), &just_a).unwrap();
        assert_eq!(l.f_vector(), vec![3, 2]);
        assert!(l.adjacent(l.vertex_index("a").unwrap(), l.vertex_index("b'").unwrap()));
        assert_eq!(a.fixed_subcomplex(&a.group().whole()).unwrap(), just_a);
        assert!(a.is_admissible());
        let hollow = SimplicialComplex::from_maximal_simplices(&["a", "b"], &[vec!["a"], vec!["b"]]).unwrap();
        assert!(matches!(double_along(&edge(), &hollow), Err(crate::Error::Precondition(_))));
    }

    #[test]
    fn doubling_keeps_flagness() {
        for x in [octahedron(), star(), t_complex(), boundary_tetrahedron().barycentric_subdivision()] {
            for v in x.vertices() {
                let nbrs: Vec<String> = x.neighbors(x.vertex_index(v).unwrap()).iter().map(|&u| x.vertices()[u].clone()).collect();
                let a = x.full_subcomplex(&nbrs).unwrap();
                let (l, act) = double_along(&x, &a).unwrap();
                assert!(l.is_flag());
                assert!(act.is_admissible());
                assert_eq!(act.fixed_subcomplex(&act.group().whole()).unwrap(), a);
            }
        }
    }

    #[test]
    fn simpler_example() {
        let (l, a) = simpler_pipeline();
        assert_eq!(l.f_vector(), vec![23, 66, 46]);
        assert!(l.is_flag());
        assert!(cohen_macaulay(&l).unwrap().is_cm);
        let fixed = a.fixed_subcomplex(&a.group().whole()).unwrap();
        assert!(are_isomorphic(&fixed, &t_complex()));
        assert!(!cohen_macaulay(&fixed).unwrap().is_cm);
        let r = bredon_duality_obstruction(&a).unwrap();
        assert_eq!(r.obstructed_at.len(), 1);
        assert_eq!(r.classes[0].order, 1);
        assert!(r.classes[0].duality);
        assert_eq!(r.obstructed_at[0], r.classes[1].label);
    }

    #[test]
    fn obstruction_scans() {
        let trivial = GroupAction::by_permuting_vertices(octahedron(), FiniteGroup::from_generators(octahedron().vertices().to_vec(), vec![]).unwrap()).unwrap();
        let r = bredon_duality_obstruction(&trivial).unwrap();
        assert!(r.obstructed_at.is_empty());
        assert!(r.verdict.starts_with("no obstruction found"));
        let k2 = GroupAction::by_permuting_vertices(star(), group(5, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]])).unwrap();
        let r = bredon_duality_obstruction(&k2).unwrap();
        for c in r.classes.iter().filter(|c| c.fixed_vertices.len() == 1) {
            assert!(c.duality);
        }
    }
}
