//! Finite abstract simplicial complexes with named vertices, flag complexes,
//! group actions on them and the constructions built from those.
//!
//! Vertex lists are kept sorted by name, and a simplex is a sorted tuple of
//! vertex indices, so two complexes are equal exactly when they have the
//! same vertex names and the same simplices. The empty simplex is implicit.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{input, precondition, Error, Result};
use crate::exactlin::{self, ChainComplexZ, HomologyGroup, IntegerMatrix};
use crate::permgrp::{FiniteGroup, Permutation, QuotientGroup, Subgroup};

pub type Simplex = Vec<usize>;

/// Largest number of simplices the fallible constructors will build.
pub const MAX_SIMPLICES: usize = 1 << 20;

fn too_many() -> Error {
    Error::Resource(format!("complex would exceed {MAX_SIMPLICES} simplices"))
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: BTreeSet<Simplex>,
}

pub(crate) fn validate_vertex_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',')) {
        return input(format!("invalid vertex name {name:?}"));
    }
    Ok(())
}

fn sorted_names<S: AsRef<str>>(vertices: &[S]) -> Result<Vec<String>> {
    let mut names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
    for n in &names {
        validate_vertex_name(n)?;
    }
    names.sort();
    if names.windows(2).any(|w| w[0] == w[1]) {
        return input("duplicate vertex name");
    }
    Ok(names)
}

fn all_faces(s: &[usize], out: &mut BTreeSet<Simplex>) {
    let n = s.len();
    for mask in 1u64..(1 << n) {
        out.insert((0..n).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect());
    }
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Face closure of the given facets; declared vertices that lie in no
    /// facet become isolated points.
    pub fn from_maximal_simplices<S: AsRef<str>, T: AsRef<str>>(vertices: &[S], facets: &[Vec<T>]) -> Result<Self> {
        let names = sorted_names(vertices)?;
        let mut simplices = BTreeSet::new();
        for i in 0..names.len() {
            simplices.insert(vec![i]);
        }
        for facet in facets {
            let mut idx = Vec::with_capacity(facet.len());
            for v in facet {
                let v = v.as_ref();
                idx.push(names.binary_search_by(|n| n.as_str().cmp(v)).map_err(|_| {
                    Error::Input(format!("facet mentions unknown vertex {v:?}"))
                })?);
            }
            idx.sort_unstable();
            if idx.windows(2).any(|w| w[0] == w[1]) {
                return input(format!("facet repeats a vertex: {:?}", facet.iter().map(|v| v.as_ref()).collect::<Vec<_>>()));
            }
            if idx.len() > 20 {
                return Err(too_many());
            }
            all_faces(&idx, &mut simplices);
            if simplices.len() > MAX_SIMPLICES {
                return Err(too_many());
            }
        }
        Ok(SimplicialComplex { vertices: names, simplices })
    }

    /// The clique complex of a simple graph.
    pub fn flag_complex_from_graph<S: AsRef<str>, T: AsRef<str>>(vertices: &[S], edges: &[(T, T)]) -> Result<Self> {
        let names = sorted_names(vertices)?;
        let find = |v: &str| {
            names
                .binary_search_by(|n| n.as_str().cmp(v))
                .map_err(|_| Error::Input(format!("edge mentions unknown vertex {v:?}")))
        };
        let mut adj = vec![BTreeSet::new(); names.len()];
        for (a, b) in edges {
            let (a, b) = (find(a.as_ref())?, find(b.as_ref())?);
            if a == b {
                return input(format!("self-loop at {}", names[a]));
            }
            if !adj[a].insert(b) {
                return input(format!("duplicate edge {} {}", names[a], names[b]));
            }
            adj[b].insert(a);
        }
        Self::clique_complex(names, &adj, MAX_SIMPLICES).ok_or_else(too_many)
    }

    fn clique_complex(names: Vec<String>, adj: &[BTreeSet<usize>], limit: usize) -> Option<Self> {
        let mut simplices = BTreeSet::new();
        let mut stack: Vec<Simplex> = (0..names.len()).map(|i| vec![i]).collect();
        while let Some(s) = stack.pop() {
            let last = *s.last().expect("nonempty");
            for &v in adj[last].range(last + 1..) {
                if s.iter().all(|u| adj[*u].contains(&v)) {
                    let mut t = s.clone();
                    t.push(v);
                    stack.push(t);
                }
            }
            simplices.insert(s);
            if simplices.len() > limit {
                return None;
            }
        }
        Some(SimplicialComplex { vertices: names, simplices })
    }

    /// Keeps the named vertices of `self` and the given index simplices;
    /// `simplices` must be face-closed and use indices into `vertices`.
    fn from_parts(vertices: Vec<String>, simplices: BTreeSet<Simplex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { vertices, simplices }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn simplex_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Simplex> {
        let mut s = names
            .iter()
            .map(|n| {
                self.vertex_index(n.as_ref())
                    .ok_or_else(|| Error::Input(format!("unknown vertex {:?}", n.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        s.sort_unstable();
        s.dedup();
        Ok(s)
    }

    pub fn simplex_names(&self, s: &[usize]) -> Vec<String> {
        s.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Simplices in (size, lexicographic) order, excluding the empty simplex.
    pub fn simplices(&self) -> Vec<&Simplex> {
        let mut v: Vec<&Simplex> = self.simplices.iter().collect();
        v.sort_by(|a, b| (a.len(), *a).cmp(&(b.len(), *b)));
        v
    }

    pub fn simplices_of_dim(&self, d: usize) -> Vec<&Simplex> {
        self.simplices.iter().filter(|s| s.len() == d + 1).collect()
    }

    /// Maximal simplices, each as a list of vertex names.
    pub fn facets(&self) -> Vec<Vec<String>> {
        let mut out: Vec<&Simplex> = self
            .simplices
            .iter()
            .filter(|s| !self.vertices.iter().enumerate().any(|(v, _)| !s.contains(&v) && self.simplices.contains(&insert_sorted(s, v))))
            .collect();
        out.sort_by(|a, b| (a.len(), *a).cmp(&(b.len(), *b)));
        out.into_iter().map(|s| self.simplex_names(s)).collect()
    }

    pub fn num_simplices(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.simplices.iter().map(|s| s.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Number of simplices in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dimension() + 1) as usize];
        for s in &self.simplices {
            f[s.len() - 1] += 1;
        }
        f
    }

    /// Whether `s` is a simplex; the empty simplex always is.
    pub fn contains(&self, s: &[usize]) -> bool {
        s.is_empty() || self.simplices.contains(s)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let s = if a < b { vec![a, b] } else { vec![b, a] };
        a != b && self.simplices.contains(&s)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&u| self.adjacent(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.simplices.iter().filter(|s| s.len() == 2 && s.contains(&v)).count()
    }

    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertices.len()];
        for s in self.simplices.iter().filter(|s| s.len() == 2) {
            adj[s[0]].insert(s[1]);
            adj[s[1]].insert(s[0]);
        }
        adj
    }

    /// Every clique of the 1-skeleton is a simplex.
    pub fn is_flag(&self) -> bool {
        let adj = self.adjacency();
        self.simplices.iter().all(|s| {
            let last = *s.last().expect("nonempty");
            adj[last]
                .range(last + 1..)
                .filter(|&&v| s.iter().all(|u| adj[*u].contains(&v)))
                .all(|&v| {
                    let mut t = s.clone();
                    t.push(v);
                    self.simplices.contains(&t)
                })
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(|s| if s.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`. The link of the empty simplex is `X`.
    pub fn link(&self, sigma: &[usize]) -> Result<SimplicialComplex> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        if !self.contains(&sigma) {
            return input(format!("{:?} is not a simplex", self.simplex_names(&sigma)));
        }
        let kept: BTreeSet<Simplex> = self
            .simplices
            .iter()
            .filter(|t| t.iter().all(|v| !sigma.contains(v)) && self.contains(&union_sorted(t, &sigma)))
            .cloned()
            .collect();
        Ok(self.restrict(kept))
    }

    /// Re-indexes a face-closed set of simplices onto the vertices it uses.
    fn restrict(&self, kept: BTreeSet<Simplex>) -> SimplicialComplex {
        let used: BTreeSet<usize> = kept.iter().flatten().copied().collect();
        self.reindexed(&used, kept)
    }

    fn reindexed(&self, used: &BTreeSet<usize>, kept: BTreeSet<Simplex>) -> SimplicialComplex {
        let new_index: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let vertices = used.iter().map(|&v| self.vertices[v].clone()).collect();
        let simplices = kept.into_iter().map(|s| s.iter().map(|v| new_index[v]).collect()).collect();
        SimplicialComplex::from_parts(vertices, simplices)
    }

    /// All simplices with every vertex in `subset`.
    pub fn full_subcomplex_indices(&self, subset: &BTreeSet<usize>) -> SimplicialComplex {
        let kept = self.simplices.iter().filter(|s| s.iter().all(|v| subset.contains(v))).cloned().collect();
        self.reindexed(subset, kept)
    }

    /// Full subcomplex on named vertices.
    pub fn full_subcomplex<S: AsRef<str>>(&self, subset: &[S]) -> Result<SimplicialComplex> {
        let idx: BTreeSet<usize> = self.simplex_from_names(subset)?.into_iter().collect();
        Ok(self.full_subcomplex_indices(&idx))
    }

    /// Augmented simplicial chain complex (degree `-1` holds the empty simplex).
    pub fn augmented_chain_complex(&self) -> ChainComplexZ {
        let dim = self.dimension();
        let mut by_dim: Vec<Vec<&Simplex>> = vec![Vec::new(); (dim + 1).max(0) as usize];
        for s in &self.simplices {
            by_dim[s.len() - 1].push(s);
        }
        let mut ranks = vec![1];
        ranks.extend(by_dim.iter().map(Vec::len));
        let mut labels = vec![vec!["∅".to_string()]];
        labels.extend(by_dim.iter().map(|ss| ss.iter().map(|s| self.simplex_names(s).join(" ")).collect()));
        let mut boundaries = Vec::new();
        for d in 0..by_dim.len() {
            let rows = if d == 0 { 1 } else { by_dim[d - 1].len() };
            let mut m = IntegerMatrix::zeros(rows, by_dim[d].len());
            if d == 0 {
                for j in 0..by_dim[0].len() {
                    m.set(0, j, 1);
                }
            } else {
                let index: HashMap<&Simplex, usize> = by_dim[d - 1].iter().enumerate().map(|(i, s)| (*s, i)).collect();
                for (j, s) in by_dim[d].iter().enumerate() {
                    for k in 0..s.len() {
                        let mut face = (*s).clone();
                        face.remove(k);
                        m.set(index[&face], j, if k % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
            boundaries.push(m);
        }
        ChainComplexZ::with_labels(-1, ranks, boundaries, labels).expect("simplicial boundary is valid")
    }

    /// Reduced integral homology in degrees `-1..=dim`. The empty complex
    /// has `Z` in degree `-1`; every other complex is zero there.
    pub fn reduced_homology(&self) -> BTreeMap<i64, HomologyGroup> {
        exactlin::homology(&self.augmented_chain_complex()).expect("unit boundary entries cannot overflow at desk scale")
    }

    /// Reduced Betti numbers mod `p`.
    pub fn reduced_homology_mod_p(&self, p: u64) -> Result<BTreeMap<i64, usize>> {
        exactlin::homology_mod_p(&self.augmented_chain_complex(), p)
    }

    /// Order complex of the face poset. A vertex of the subdivision is named
    /// by joining the names of the simplex it subdivides with `+`.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let faces: Vec<&Simplex> = self.simplices();
        let mut used: BTreeSet<String> = BTreeSet::new();
        let names: Vec<String> = faces
            .iter()
            .map(|s| {
                let mut n = self.simplex_names(s).join("+");
                while !used.insert(n.clone()) {
                    n.push('\'');
                }
                n
            })
            .collect();
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut position = vec![0; names.len()];
        for (k, &i) in order.iter().enumerate() {
            position[i] = k;
        }
        let mut adj = vec![BTreeSet::new(); names.len()];
        for i in 0..faces.len() {
            for j in 0..faces.len() {
                if faces[i].len() < faces[j].len() && faces[i].iter().all(|v| faces[j].contains(v)) {
                    adj[position[i]].insert(position[j]);
                    adj[position[j]].insert(position[i]);
                }
            }
        }
        let sorted: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        Self::clique_complex(sorted, &adj, usize::MAX).expect("unbounded")
    }

    pub fn apply(&self, p: &Permutation, s: &[usize]) -> Simplex {
        let mut t: Simplex = s.iter().map(|&v| p.apply(v)).collect();
        t.sort_unstable();
        t
    }

    /// Same complex with the vertex names replaced through `rename`.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<SimplicialComplex> {
        let new: Vec<String> = self.vertices.iter().map(|v| rename(v)).collect();
        let facets: Vec<Vec<String>> = self
            .simplices
            .iter()
            .map(|s| s.iter().map(|&v| new[v].clone()).collect())
            .collect();
        Self::from_maximal_simplices(&new, &facets)
    }
}

fn insert_sorted(s: &[usize], v: usize) -> Simplex {
    let mut t = s.to_vec();
    let pos = t.binary_search(&v).unwrap_or_else(|e| e);
    t.insert(pos, v);
    t
}

fn union_sorted(a: &[usize], b: &[usize]) -> Simplex {
    let mut t: Vec<usize> = a.iter().chain(b).copied().collect();
    t.sort_unstable();
    t.dedup();
    t
}

/// A finite group acting simplicially on a complex by vertex permutations.
#[derive(Clone, Debug)]
pub struct GroupAction {
    complex: SimplicialComplex,
    group: FiniteGroup,
    /// Vertex permutation of each group element, indexed like the group.
    vertex_maps: Vec<Permutation>,
}

/// Why an action is not admissible: `element` fixes `simplex` setwise but
/// moves one of its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityWitness {
    pub element: String,
    pub simplex: Vec<String>,
}

impl GroupAction {
    /// An action given by the vertex permutations that the group's
    /// generators induce. The assignment is extended to every element and
    /// checked to be a homomorphism.
    pub fn new(complex: SimplicialComplex, group: FiniteGroup, generator_images: Vec<Permutation>) -> Result<Self> {
        let n = complex.vertices().len();
        if generator_images.len() != group.generators().len() {
            return input("one vertex permutation per generator is required");
        }
        if let Some(p) = generator_images.iter().find(|p| p.degree() != n) {
            return input(format!("vertex permutation {p:?} has wrong degree"));
        }
        for (gi, p) in generator_images.iter().enumerate() {
            if let Some(s) = complex.simplices.iter().find(|s| !complex.contains(&complex.apply(p, s))) {
                return input(format!(
                    "generator {} maps simplex {:?} outside the complex",
                    group.generators()[gi].to_cycle_string(group.points()),
                    complex.simplex_names(s)
                ));
            }
        }
        let gens: Vec<usize> = group
            .generators()
            .iter()
            .map(|g| group.index_of(g).expect("generator is an element"))
            .collect();
        let mut maps: Vec<Option<Permutation>> = vec![None; group.order()];
        maps[FiniteGroup::IDENTITY] = Some(Permutation::identity(n));
        let mut queue = VecDeque::from([FiniteGroup::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            let mx = maps[x].clone().expect("assigned");
            for (k, &g) in gens.iter().enumerate() {
                let y = group.mul(x, g);
                let my = mx.then(&generator_images[k]);
                match &maps[y] {
                    Some(existing) if *existing != my => {
                        return input("vertex permutations do not define a homomorphism");
                    }
                    Some(_) => {}
                    None => {
                        maps[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let vertex_maps = maps.into_iter().map(|m| m.expect("generators reach every element")).collect();
        Ok(GroupAction { complex, group, vertex_maps })
    }

    /// The action of a permutation group whose points are the complex's
    /// vertex names.
    pub fn by_permuting_vertices(complex: SimplicialComplex, group: FiniteGroup) -> Result<Self> {
        let translate: Vec<usize> = group
            .points()
            .iter()
            .map(|p| complex.vertex_index(p).ok_or_else(|| Error::Input(format!("group point {p:?} is not a vertex"))))
            .collect::<Result<_>>()?;
        if translate.len() != complex.vertices().len() {
            return input("group points and complex vertices differ");
        }
        let images = group
            .generators()
            .iter()
            .map(|g| {
                let mut img = vec![0; translate.len()];
                for (i, &v) in translate.iter().enumerate() {
                    img[v] = translate[g.apply(i)];
                }
                Permutation::from_images(img)
            })
            .collect::<Result<_>>()?;
        Self::new(complex, group, images)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertex_map(&self, g: usize) -> &Permutation {
        &self.vertex_maps[g]
    }

    /// First `(g, σ)` with `σ^g = σ` setwise but not pointwise, in canonical
    /// order of elements and simplices.
    pub fn admissibility_witness(&self) -> Option<AdmissibilityWitness> {
        for g in 0..self.group.order() {
            let p = &self.vertex_maps[g];
            for s in self.complex.simplices() {
                if self.complex.apply(p, s) == *s && s.iter().any(|&v| p.apply(v) != v) {
                    return Some(AdmissibilityWitness {
                        element: self.group.element_to_string(g),
                        simplex: self.complex.simplex_names(s),
                    });
                }
            }
        }
        None
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility_witness().is_none()
    }

    fn require_admissible(&self) -> Result<()> {
        match self.admissibility_witness() {
            None => Ok(()),
            Some(w) => precondition(format!("action is not admissible: {} fixes {:?} but moves its vertices", w.element, w.simplex)),
        }
    }

    /// Vertices fixed by every element of `h`.
    pub fn fixed_vertices(&self, h: &Subgroup) -> BTreeSet<usize> {
        (0..self.complex.vertices().len())
            .filter(|&v| h.elements().iter().all(|&g| self.vertex_maps[g].apply(v) == v))
            .collect()
    }

    /// `X^H`: the full subcomplex on the `H`-fixed vertices. Requires an
    /// admissible action, where this is also the set of `H`-fixed simplices.
    pub fn fixed_subcomplex(&self, h: &Subgroup) -> Result<SimplicialComplex> {
        if !self.group.is_subgroup(h) {
            return input("not a subgroup of the acting group");
        }
        self.require_admissible()?;
        Ok(self.complex.full_subcomplex_indices(&self.fixed_vertices(h)))
    }

    /// The action of `N(H)/H` on `X^H`.
    pub fn induced_quotient_action(&self, h: &Subgroup) -> Result<(QuotientGroup, GroupAction)> {
        let fixed = self.fixed_subcomplex(h)?;
        let n = self.group.normalizer(h)?;
        let q = self.group.quotient(&n, h)?;
        let fixed_idx: Vec<usize> = self.fixed_vertices(h).into_iter().collect();
        let position: HashMap<usize, usize> = fixed_idx.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let images = q
            .group
            .generators()
            .iter()
            .map(|g| {
                let e = q.group.index_of(g).expect("generator is an element");
                let rep = q.coset_of_element(e)[0];
                let p = &self.vertex_maps[rep];
                let img = fixed_idx
                    .iter()
                    .map(|&v| position.get(&p.apply(v)).copied().ok_or_else(|| Error::Internal("normalizer left the fixed set".into())))
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_images(img)
            })
            .collect::<Result<_>>()?;
        let action = GroupAction::new(fixed, q.group.clone(), images)?;
        Ok((q, action))
    }
}

/// An injective vertex map whose image spans a full subcomplex isomorphic
/// to the pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// `(pattern vertex, host vertex)` pairs in pattern-vertex order.
    pub map: Vec<(String, String)>,
}

impl Embedding {
    pub fn image(&self) -> Vec<String> {
        self.map.iter().map(|(_, h)| h.clone()).collect()
    }

    pub fn host_of(&self, pattern_vertex: &str) -> Option<&str> {
        self.map.iter().find(|(p, _)| p == pattern_vertex).map(|(_, h)| h.as_str())
    }
}

/// Backtracking search for a full subcomplex of `host` isomorphic to
/// `pattern`, pruning on degrees and on adjacency/non-adjacency.
pub fn find_full_subcomplex_isomorphic(host: &SimplicialComplex, pattern: &SimplicialComplex) -> Option<Embedding> {
    let np = pattern.vertices().len();
    let nh = host.vertices().len();
    if np > nh {
        return None;
    }
    let padj = pattern.adjacency();
    let hadj = host.adjacency();
    // place vertices with many already-placed neighbours first
    let mut order: Vec<usize> = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    for _ in 0..np {
        let next = (0..np)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = padj[v].iter().filter(|u| placed[**u]).count();
                (links, padj[v].len(), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut assignment = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    if search(host, pattern, &padj, &hadj, &order, 0, &mut assignment, &mut used) {
        Some(Embedding {
            map: (0..np).map(|p| (pattern.vertices()[p].clone(), host.vertices()[assignment[p]].clone())).collect(),
        })
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    host: &SimplicialComplex,
    pattern: &SimplicialComplex,
    padj: &[BTreeSet<usize>],
    hadj: &[BTreeSet<usize>],
    order: &[usize],
    k: usize,
    assignment: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return full_image_matches(host, pattern, assignment);
    }
    let p = order[k];
    for h in 0..host.vertices().len() {
        if used[h] || hadj[h].len() < padj[p].len() {
            continue;
        }
        let consistent = order[..k].iter().all(|&q| padj[p].contains(&q) == hadj[h].contains(&assignment[q]));
        if !consistent {
            continue;
        }
        assignment[p] = h;
        used[h] = true;
        if search(host, pattern, padj, hadj, order, k + 1, assignment, used) {
            return true;
        }
        used[h] = false;
        assignment[p] = usize::MAX;
    }
    false
}

fn full_image_matches(host: &SimplicialComplex, pattern: &SimplicialComplex, assignment: &[usize]) -> bool {
    let image: BTreeSet<usize> = assignment.iter().copied().collect();
    let full: BTreeSet<Simplex> = host.simplices.iter().filter(|s| s.iter().all(|v| image.contains(v))).cloned().collect();
    let mapped: BTreeSet<Simplex> = pattern
        .simplices
        .iter()
        .map(|s| {
            let mut t: Simplex = s.iter().map(|&v| assignment[v]).collect();
            t.sort_unstable();
            t
        })
        .collect();
    full == mapped
}

/// Whether the two complexes are isomorphic (up to renaming vertices).
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    a.vertices().len() == b.vertices().len()
        && a.f_vector() == b.f_vector()
        && find_full_subcomplex_isomorphic(a, b).is_some()
}
