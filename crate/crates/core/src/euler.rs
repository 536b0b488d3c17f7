//! Equivariant Euler classes of `Γ = K ⋉ A_L` for a finite `p`-group `K`
//! acting admissibly on a flag complex `L`, the cyclic specialisation and
//! the acyclicity criterion for rank-two elementary abelian `K`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, precondition, Error, Result};
use crate::permgrp::{log_p, FiniteGroup, Subgroup};
use crate::rational::Rational;
use crate::simp::GroupAction;

fn overflow(what: &str) -> Error {
    Error::Overflow(format!("rational overflow while computing {what}"))
}

fn add(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_add(b).ok_or_else(|| overflow("a sum"))
}

fn mul(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or_else(|| overflow("a product"))
}

/// One value per conjugacy class of subgroups of the acting group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiTable {
    pub entries: Vec<ChiEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiEntry {
    #[serde(skip)]
    pub representative: Subgroup,
    #[serde(skip)]
    pub members: Vec<Subgroup>,
    pub label: String,
    pub order: usize,
    pub value: i64,
}

impl ChiTable {
    /// Value on the class of `h`.
    pub fn get(&self, h: &Subgroup) -> Option<i64> {
        self.entries.iter().find(|e| e.members.contains(h)).map(|e| e.value)
    }

    pub fn get_by_label(&self, label: &str) -> Option<i64> {
        self.entries.iter().find(|e| e.label == label).map(|e| e.value)
    }
}

/// `χ(L^H)` for each class representative `H`.
pub fn chi_fixed_table(a: &GroupAction) -> Result<ChiTable> {
    let g = a.group();
    let mut entries = Vec::new();
    for class in g.conjugacy_classes_of_subgroups() {
        let h = class.representative;
        let value = a.fixed_subcomplex(&h)?.euler_characteristic();
        entries.push(ChiEntry { label: g.subgroup_to_string(&h), order: h.order(), value, representative: h, members: class.members });
    }
    Ok(ChiTable { entries })
}

/// Prime of a nontrivial `p`-group, `None` for the trivial group.
fn prime_of(k: &FiniteGroup) -> Result<Option<u64>> {
    if k.order() == 1 {
        return Ok(None);
    }
    match k.p_group_prime(&k.whole()) {
        Some(p) => Ok(Some(p)),
        None => precondition(format!("group of order {} is not a p-group", k.order())),
    }
}

/// `(-1)^n p^(n choose 2)` as a rational, with the binomial taken as 0
/// for `n < 2`.
fn sign_power(p: u64, n: u32) -> Result<Rational> {
    let e = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let m = (p as i128).checked_pow(e).ok_or_else(|| overflow("a prime power"))?;
    Ok(Rational::integer(if n.is_multiple_of(2) { m } else { -m }))
}

/// `Σ_{H ∈ A(K)/K} (-1)^n p^(n choose 2) / |N_K(H)| · chi(H)`, where `H`
/// runs over classes of elementary abelian subgroups (including `1`) and
/// `|H| = p^n`.
pub fn free_coefficient(k: &FiniteGroup, mut chi: impl FnMut(&Subgroup) -> Result<Rational>) -> Result<Rational> {
    let Some(p) = prime_of(k)? else {
        return chi(&k.trivial());
    };
    let mut total = Rational::ZERO;
    for class in k.conjugacy_classes_of_subgroups() {
        let h = &class.representative;
        if !k.is_elementary_abelian(h, p) {
            continue;
        }
        let n = log_p(h.order() as u64, p);
        let weight = mul(sign_power(p, n)?, Rational::new(1, k.normalizer(h)?.order() as i128))?;
        total = add(total, mul(weight, chi(h)?)?)?;
    }
    Ok(total)
}

/// [`free_coefficient`] with values looked up in a table.
pub fn free_coefficient_from_table(k: &FiniteGroup, table: &ChiTable) -> Result<Rational> {
    free_coefficient(k, |h| {
        table
            .get(h)
            .map(Rational::from)
            .ok_or_else(|| Error::Input(format!("no value for the class of {}", k.subgroup_to_string(h))))
    })
}

/// [`free_coefficient`] with every value 1; zero for every nontrivial `p`-group.
pub fn vanishing_identity(k: &FiniteGroup) -> Result<Rational> {
    if k.order() == 1 {
        return precondition("the identity needs a nontrivial group");
    }
    free_coefficient(k, |_| Ok(Rational::ONE))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerTerm {
    /// Display form, `1` or `⟨...⟩` in cycle notation.
    pub label: String,
    /// Generators of the representative in cycle notation.
    pub generators: Vec<String>,
    pub order: usize,
    pub coefficient: Rational,
    #[serde(skip)]
    pub representative: Option<Subgroup>,
}

/// The formal sum `Σ c_H [Γ/H]`, one term per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerClass {
    pub terms: Vec<EulerTerm>,
}

impl EulerClass {
    pub fn coefficient_of(&self, h: &Subgroup) -> Option<Rational> {
        self.terms.iter().find(|t| t.representative.as_ref() == Some(h)).map(|t| t.coefficient)
    }

    pub fn coefficient_by_label(&self, label: &str) -> Option<Rational> {
        self.terms.iter().find(|t| t.label == label).map(|t| t.coefficient)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coefficient.is_zero())
    }
}

impl fmt::Display for EulerClass {
    /// Nonzero terms only, `0` for the zero class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .filter(|t| !t.coefficient.is_zero())
            .map(|t| format!("{}·[Γ/{}]", t.coefficient, t.label))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn term(g: &FiniteGroup, h: &Subgroup, coefficient: Rational) -> EulerTerm {
    EulerTerm {
        label: g.subgroup_to_string(h),
        generators: g.generators_of(h).into_iter().map(|x| g.element_to_string(x)).collect(),
        order: h.order(),
        coefficient,
        representative: Some(h.clone()),
    }
}

fn require_admissible(a: &GroupAction) -> Result<()> {
    match a.admissibility_witness() {
        None => Ok(()),
        Some(w) => precondition(format!("action is not admissible: {} fixes {:?} but moves its vertices", w.element, w.simplex)),
    }
}

/// Coefficient of `[Γ/H]`: the free coefficient of the Weyl group
/// `(N_K(H)/H) ⋉ A_{L^H}`, fed with `χ(A_{L^{H'}}) = 1 - χ(L^{H'})`.
pub fn raag_coefficient(a: &GroupAction, h: &Subgroup) -> Result<Rational> {
    let (q, qa) = a.induced_quotient_action(h)?;
    free_coefficient(&q.group, |hb| Ok(Rational::from(1 - qa.fixed_subcomplex(hb)?.euler_characteristic())))
}

pub fn euler_class_raag(a: &GroupAction) -> Result<EulerClass> {
    let k = a.group();
    prime_of(k)?;
    require_admissible(a)?;
    let mut terms = Vec::new();
    for class in k.conjugacy_classes_of_subgroups() {
        let h = class.representative;
        terms.push(term(k, &h, raag_coefficient(a, &h)?));
    }
    Ok(EulerClass { terms })
}

/// `(1-χ(L^K))[Γ/K] + Σ_{i=1}^n p^{-i} (χ(L^{K_{i-1}}) - χ(L^{K_i})) [Γ/K_i]`
/// with `K_i = ⟨x^{p^i}⟩`.
pub fn euler_class_cyclic(a: &GroupAction) -> Result<EulerClass> {
    let k = a.group();
    if !k.is_cyclic(&k.whole()) {
        return precondition("the acting group is not cyclic");
    }
    let p = prime_of(k)?;
    require_admissible(a)?;
    let x = (0..k.order()).find(|&g| k.element_order(g) == k.order()).expect("cyclic group has a generator");
    let chain = cyclic_chain(k, x, p);
    let chi = |h: &Subgroup| a.fixed_subcomplex(h).map(|c| c.euler_characteristic());
    let mut coeff: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    coeff.insert(chain[0].elements().to_vec(), Rational::from(1 - chi(&chain[0])?));
    for i in 1..chain.len() {
        let scale = Rational::new(1, (chain[0].order() / chain[i - 1].order() * p.unwrap_or(1) as usize) as i128);
        let c = mul(scale, Rational::from(chi(&chain[i - 1])? - chi(&chain[i])?))?;
        coeff.insert(chain[i].elements().to_vec(), c);
    }
    let terms = k
        .all_subgroups()
        .into_iter()
        .map(|h| {
            let c = coeff[h.elements()];
            term(k, &h, c)
        })
        .collect();
    Ok(EulerClass { terms })
}

/// `K = K_0 > K_1 > ... > K_n = 1` with `K_i = ⟨x^{p^i}⟩`.
fn cyclic_chain(k: &FiniteGroup, x: usize, p: Option<u64>) -> Vec<Subgroup> {
    let mut chain = vec![k.closure(&[x])];
    let mut y = x;
    if let Some(p) = p {
        while chain.last().expect("nonempty").order() > 1 {
            let mut z = FiniteGroup::IDENTITY;
            for _ in 0..p {
                z = k.mul(z, y);
            }
            y = z;
            chain.push(k.closure(&[y]));
        }
    }
    chain
}

/// Per-class data for the abstract cyclic formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbstractCyclicEntry {
    pub label: String,
    /// `χ(WH)`.
    pub chi_weyl: Option<Rational>,
    /// Labels of the classes `Q ∈ A₁(WH)/WH`.
    pub q_classes: Vec<String>,
    /// `χ(N_Γ(Q)/H)` keyed by the labels in `q_classes`.
    pub chi_normalizer_quotients: BTreeMap<String, Rational>,
}

/// Coefficient `χ(WH) - Σ_Q χ(N_Γ(Q)/H)` for each supplied class.
pub fn euler_class_cyclic_abstract(entries: &[AbstractCyclicEntry]) -> Result<EulerClass> {
    let mut terms = Vec::new();
    for e in entries {
        let Some(mut c) = e.chi_weyl else {
            return input(format!("missing χ(WH) for {}", e.label));
        };
        for q in &e.q_classes {
            let v = e
                .chi_normalizer_quotients
                .get(q)
                .ok_or_else(|| Error::Input(format!("missing χ(N(Q)/H) for Q = {q} at {}", e.label)))?;
            c = c.checked_sub(*v).ok_or_else(|| overflow("a difference"))?;
        }
        terms.push(EulerTerm { label: e.label.clone(), generators: Vec::new(), order: 0, coefficient: c, representative: None });
    }
    Ok(EulerClass { terms })
}

/// The data of the abstract cyclic formula for `K ⋉ A_L` with `K` cyclic:
/// `χ(WH) = (1 - χ(L^H)) / |K/H|`, and the single class `Q` is the
/// preimage of the order-`p` subgroup of `K/H` with
/// `χ(N_Γ(Q)/H) = (1 - χ(L^Q)) / |K/H|`.
pub fn abstract_cyclic_data(a: &GroupAction) -> Result<Vec<AbstractCyclicEntry>> {
    let k = a.group();
    if !k.is_cyclic(&k.whole()) {
        return precondition("the acting group is not cyclic");
    }
    let p = prime_of(k)?;
    let subgroups = k.all_subgroups();
    let mut out = Vec::new();
    for h in &subgroups {
        let index = (k.order() / h.order()) as i128;
        let chi_h = a.fixed_subcomplex(h)?.euler_characteristic();
        let mut entry = AbstractCyclicEntry {
            label: k.subgroup_to_string(h),
            chi_weyl: Some(Rational::new((1 - chi_h) as i128, index)),
            q_classes: Vec::new(),
            chi_normalizer_quotients: BTreeMap::new(),
        };
        if let Some(p) = p {
            if let Some(q) = subgroups.iter().find(|q| q.order() == h.order() * p as usize) {
                let label = k.subgroup_to_string(q);
                let chi_q = a.fixed_subcomplex(q)?.euler_characteristic();
                entry.chi_normalizer_quotients.insert(label.clone(), Rational::new((1 - chi_q) as i128, index));
                entry.q_classes.push(label);
            }
        }
        out.push(entry);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicityReport {
    pub holds: bool,
    pub uncovered_vertices: Vec<String>,
    /// `H1-criterion`, or `H1-criterion (remark scope)` for forced runs
    /// outside rank two.
    pub scope: String,
}

/// Every vertex of `L` is fixed by some nontrivial proper subgroup of `K`.
/// Requires `K ≅ C_p × C_p` unless `force` is set, in which case any
/// `p`-group is accepted.
pub fn acyclicity_condition(a: &GroupAction, force: bool) -> Result<AcyclicityReport> {
    let k = a.group();
    let rank_two = k.p_group_prime(&k.whole()).is_some_and(|p| k.is_elementary_abelian(&k.whole(), p) && k.order() as u64 == p * p);
    let scope = if rank_two {
        "H1-criterion"
    } else if force && prime_of(k)?.is_some() {
        "H1-criterion (remark scope)"
    } else {
        return precondition("the acting group is not C_p × C_p (use force for other p-groups)");
    };
    require_admissible(a)?;
    let mut covered = BTreeSet::new();
    for q in k.all_subgroups() {
        if q.is_trivial() || q.order() == k.order() {
            continue;
        }
        covered.extend(a.fixed_vertices(&q));
    }
    let uncovered_vertices: Vec<String> = (0..a.complex().vertices().len())
        .filter(|v| !covered.contains(v))
        .map(|v| a.complex().vertices()[v].clone())
        .collect();
    Ok(AcyclicityReport { holds: uncovered_vertices.is_empty(), uncovered_vertices, scope: scope.to_string() })
}
