//! Moore-space chain complexes and their extension by free `C_p`-cells to
//! an acyclic equivariant complex whose fixed part is the original complex.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::exactlin::{self, ChainComplexZ, HomologyGroup, IntegerMatrix};
use crate::rational::gcd;

/// Cells `pt` (degree 0), `c` (degree `m`) and `l` (degree `m + 1`) with
/// `∂l = q·c`, so that `H_m = Z/q`.
pub fn moore_complex(m: usize, q: i64) -> Result<ChainComplexZ> {
    if m < 1 || q < 2 {
        return precondition("a Moore complex needs m >= 1 and q >= 2");
    }
    let mut ranks = vec![0; m + 2];
    ranks[0] = 1;
    ranks[m] = 1;
    ranks[m + 1] = 1;
    let mut labels: Vec<Vec<String>> = vec![Vec::new(); m + 2];
    labels[0] = vec!["pt".into()];
    labels[m] = vec!["c".into()];
    labels[m + 1] = vec!["l".into()];
    let mut boundaries: Vec<IntegerMatrix> = (0..m + 1).map(|k| IntegerMatrix::zeros(ranks[k], ranks[k + 1])).collect();
    boundaries[m].set(0, 0, q);
    ChainComplexZ::with_labels(0, ranks, boundaries, labels)
}

/// The projective plane's cellular chain complex: `∂l = 2c`, `∂c = 0`.
pub fn rp2_complex() -> ChainComplexZ {
    moore_complex(1, 2).expect("valid parameters")
}

/// A chain complex with a `C_p`-action permuting the basis cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivChainComplex {
    complex: ChainComplexZ,
    p: usize,
    /// Image of each basis cell under the generator, per degree.
    action: Vec<Vec<usize>>,
}

impl EquivChainComplex {
    /// Checks that the generator permutes cells in orbits of size 1 or `p`,
    /// has order dividing `p`, and commutes with the boundary.
    pub fn new(complex: ChainComplexZ, p: usize, action: Vec<Vec<usize>>) -> Result<Self> {
        let degrees: Vec<i64> = complex.degrees().collect();
        if action.len() != degrees.len() {
            return Err(Error::Input("one cell permutation per degree is required".into()));
        }
        for (k, &d) in degrees.iter().enumerate() {
            let perm = &action[k];
            let n = complex.rank(d);
            let mut seen = vec![false; n];
            if perm.len() != n || perm.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::Input(format!("cell action in degree {d} is not a permutation")));
            }
            for start in 0..n {
                let mut len = 1;
                let mut i = perm[start];
                while i != start {
                    i = perm[i];
                    len += 1;
                }
                if len != 1 && len != p {
                    return Err(Error::Input(format!("orbit of size {len} in degree {d}")));
                }
            }
            if let Some(b) = complex.boundary(d) {
                let below = &action[k - 1];
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        if b.get(below[i], perm[j]) != b.get(i, j) {
                            return Err(Error::Input(format!("boundary out of degree {d} is not equivariant")));
                        }
                    }
                }
            }
        }
        Ok(EquivChainComplex { complex, p, action })
    }

    /// The complex with the trivial action.
    pub fn trivial(complex: ChainComplexZ, p: usize) -> Self {
        let action = complex.degrees().map(|d| (0..complex.rank(d)).collect()).collect();
        EquivChainComplex { complex, p, action }
    }

    pub fn complex(&self) -> &ChainComplexZ {
        &self.complex
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn cell_image(&self, d: i64, i: usize) -> usize {
        self.action[(d - self.complex.lo()) as usize][i]
    }

    pub fn is_fixed(&self, d: i64, i: usize) -> bool {
        self.cell_image(d, i) == i
    }

    /// Reduced homology vanishes: `H_0 = Z` and nothing else.
    pub fn verify_acyclic(&self) -> Result<bool> {
        is_acyclic(&self.complex)
    }

    /// Subcomplex spanned by the fixed cells.
    pub fn fixed_part(&self) -> Result<ChainComplexZ> {
        let c = &self.complex;
        let fixed: Vec<Vec<usize>> = c.degrees().map(|d| (0..c.rank(d)).filter(|&i| self.is_fixed(d, i)).collect()).collect();
        let mut ranks: Vec<usize> = fixed.iter().map(Vec::len).collect();
        let mut labels: Vec<Vec<String>> = c.degrees().zip(&fixed).map(|(d, f)| f.iter().map(|&i| c.labels(d)[i].clone()).collect()).collect();
        let mut boundaries = Vec::new();
        for (k, d) in c.degrees().enumerate().skip(1) {
            let b = c.boundary(d).expect("not the lowest degree");
            for &j in &fixed[k] {
                if let Some(i) = (0..b.rows()).find(|&i| b.get(i, j) != 0 && !self.is_fixed(d - 1, i)) {
                    return Err(Error::Internal(format!(
                        "boundary of fixed cell {} meets free cell {}",
                        c.labels(d)[j],
                        c.labels(d - 1)[i]
                    )));
                }
            }
            let mut m = IntegerMatrix::zeros(fixed[k - 1].len(), fixed[k].len());
            for (r, &i) in fixed[k - 1].iter().enumerate() {
                for (s, &j) in fixed[k].iter().enumerate() {
                    m.set(r, s, b.get(i, j));
                }
            }
            boundaries.push(m);
        }
        // drop empty top degrees left behind by the free orbits
        while ranks.len() > 1 && ranks.last() == Some(&0) {
            ranks.pop();
            labels.pop();
            boundaries.pop();
        }
        ChainComplexZ::with_labels(c.lo(), ranks, boundaries, labels)
    }
}

pub fn is_acyclic(c: &ChainComplexZ) -> Result<bool> {
    let h = exactlin::homology(c)?;
    Ok(h.iter().all(|(&d, g)| if d == 0 { *g == HomologyGroup::free(1) } else { g.is_trivial() }) && h.contains_key(&0))
}

/// The Moore complex `M(Z/q, m)` with free orbits `s_0..s_{p-1}` in degree
/// `m + 1` (`∂s_i = c`) and `t_0..t_{p-1}` in degree `m + 2`
/// (`∂t_i = l - s_i - ... - s_{i+q-1}`, indices mod `p`). The generator
/// shifts both orbits. Acyclicity is not checked here.
pub fn jones_cells(m: usize, q: i64, p: usize) -> Result<EquivChainComplex> {
    if p < 2 {
        return precondition("p must be at least 2");
    }
    if gcd(p as i128, q as i128) != 1 {
        return precondition(format!("p = {p} and q = {q} are not coprime"));
    }
    let moore = moore_complex(m, q)?;
    let mut ranks: Vec<usize> = moore.degrees().map(|d| moore.rank(d)).collect();
    let mut labels: Vec<Vec<String>> = moore.degrees().map(|d| moore.labels(d).to_vec()).collect();
    ranks[m + 1] = 1 + p;
    labels[m + 1].extend((0..p).map(|i| format!("s{i}")));
    ranks.push(p);
    labels.push((0..p).map(|i| format!("t{i}")).collect());
    let mut boundaries: Vec<IntegerMatrix> = (1..=m).map(|d| moore.boundary(d as i64).expect("present").clone()).collect();
    let mut top = IntegerMatrix::zeros(1, 1 + p);
    top.set(0, 0, q);
    for i in 0..p {
        top.set(0, 1 + i, 1);
    }
    boundaries.push(top);
    let mut attach = IntegerMatrix::zeros(1 + p, p);
    for i in 0..p {
        attach.set(0, i, 1);
        for j in 0..q as usize {
            let row = 1 + (i + j) % p;
            attach.set(row, i, attach.get(row, i) - 1);
        }
    }
    boundaries.push(attach);
    let complex = ChainComplexZ::with_labels(0, ranks.clone(), boundaries, labels)?;
    let shift = |n: usize| -> Vec<usize> { (0..n).map(|i| (i + 1) % n).collect() };
    let mut action: Vec<Vec<usize>> = ranks.iter().map(|&r| (0..r).collect()).collect();
    action[m + 1] = std::iter::once(0).chain(shift(p).into_iter().map(|i| i + 1)).collect();
    action[m + 2] = shift(p);
    EquivChainComplex::new(complex, p, action)
}

/// [`jones_cells`], checked to be acyclic.
pub fn jones_extension(m: usize, q: i64, p: usize) -> Result<EquivChainComplex> {
    let c = jones_cells(m, q, p)?;
    if !c.verify_acyclic()? {
        let h = exactlin::homology(c.complex())?;
        let witness: Vec<String> = h.iter().filter(|(_, g)| !g.is_trivial()).map(|(d, g)| format!("H_{d} = {g}")).collect();
        return Err(Error::ConstructionFailed(format!("extension (m={m}, q={q}, p={p}) is not acyclic: {}", witness.join(", "))));
    }
    Ok(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct JonesReport {
    pub m: usize,
    pub q: i64,
    pub p: usize,
    pub acyclic: bool,
    pub total_homology: BTreeMap<i64, HomologyGroup>,
    pub fixed_homology: BTreeMap<i64, HomologyGroup>,
    pub fixed_is_moore: bool,
    /// `dim H_m(fixed; F_r)` for each prime `r` dividing `q`.
    pub fixed_mod_homology: BTreeMap<u64, usize>,
    pub verified: bool,
}

/// Everything the verification subcommand prints: acyclicity of the
/// extension, the fixed part and its homology, integrally and mod the
/// primes of `q`.
pub fn jones_report(m: usize, q: i64, p: usize) -> Result<JonesReport> {
    let c = jones_cells(m, q, p)?;
    let acyclic = c.verify_acyclic()?;
    let fixed = c.fixed_part()?;
    let fixed_is_moore = fixed == moore_complex(m, q)?;
    let fixed_homology = exactlin::homology(&fixed)?;
    let mut fixed_mod_homology = BTreeMap::new();
    for r in 2..=q as u64 {
        if (q as u64).is_multiple_of(r) && exactlin::is_prime(r) {
            fixed_mod_homology.insert(r, exactlin::homology_mod_p(&fixed, r)?.get(&(m as i64)).copied().unwrap_or(0));
        }
    }
    let torsion_ok = fixed_homology.get(&(m as i64)) == Some(&HomologyGroup { betti: 0, torsion: vec![q] });
    let verified = acyclic && fixed_is_moore && torsion_ok && fixed_mod_homology.values().all(|&d| d > 0);
    Ok(JonesReport { m, q, p, acyclic, total_homology: exactlin::homology(c.complex())?, fixed_homology, fixed_is_moore, fixed_mod_homology, verified })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rp2() {
        let c = rp2_complex();
        let h = exactlin::homology(&c).unwrap();
        assert_eq!(h[&0], HomologyGroup::free(1));
        assert_eq!(h[&1], HomologyGroup { betti: 0, torsion: vec![2] });
        assert!(h[&2].is_trivial());
        let m2 = exactlin::homology_mod_p(&c, 2).unwrap();
        assert_eq!(m2.values().copied().collect::<Vec<_>>(), vec![1, 1, 1]);
        let m3 = exactlin::homology_mod_p(&c, 3).unwrap();
        assert_eq!(m3.values().copied().collect::<Vec<_>>(), vec![1, 0, 0]);
        assert!(!is_acyclic(&c).unwrap());
    }

    #[test]
    fn moore_complexes() {
        assert_eq!(moore_complex(1, 2).unwrap(), rp2_complex());
        let h = exactlin::homology(&moore_complex(2, 3).unwrap()).unwrap();
        assert_eq!(h[&2], HomologyGroup { betti: 0, torsion: vec![3] });
        assert!(h[&1].is_trivial());
        let h = exactlin::homology(&moore_complex(1, 5).unwrap()).unwrap();
        assert_eq!(h[&1], HomologyGroup { betti: 0, torsion: vec![5] });
        assert!(moore_complex(0, 2).is_err());
    }

    #[test]
    fn extensions_are_acyclic() {
        for (m, q, p) in [(1, 2, 3), (1, 2, 5), (2, 2, 3), (2, 2, 7), (3, 2, 9)] {
            let c = jones_extension(m, q, p).unwrap();
            assert!(c.verify_acyclic().unwrap());
            let f = c.fixed_part().unwrap();
            assert_eq!(f, moore_complex(m, q).unwrap());
            let h = exactlin::homology(&f).unwrap();
            assert_eq!(h[&(m as i64)], HomologyGroup { betti: 0, torsion: vec![2] });
            assert!(exactlin::homology_mod_p(&f, 2).unwrap()[&(m as i64)] > 0);
            let total = exactlin::homology_mod_p(c.complex(), 2).unwrap();
            assert!(total.iter().all(|(&d, &r)| if d == 0 { r == 1 } else { r == 0 }));
        }
    }

    #[test]
    fn shared_primes_rejected() {
        assert!(matches!(jones_extension(1, 2, 2), Err(Error::Precondition(_))));
        assert!(matches!(jones_extension(1, 3, 3), Err(Error::Precondition(_))));
        assert!(matches!(jones_extension(1, 2, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn corpus_cells_are_equivariant() {
        // construction through `EquivChainComplex::new` checks ∂∂ = 0 and equivariance
        for q in [2i64, 3] {
            for p in [2usize, 3, 5] {
                if gcd(p as i128, q as i128) == 1 {
                    let c = jones_cells(1, q, p).unwrap();
                    assert_eq!(c.p(), p);
                }
            }
        }
    }

    #[test]
    fn general_q_is_checked_not_assumed() {
        for (q, p) in [(3i64, 2usize), (3, 5), (5, 2), (5, 3)] {
            let cells = jones_cells(1, q, p).unwrap();
            match jones_extension(1, q, p) {
                Ok(c) => assert!(c.verify_acyclic().unwrap()),
                Err(Error::ConstructionFailed(msg)) => assert!(!cells.verify_acyclic().unwrap() && msg.contains("H_")),
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn trivial_action_fixed_part() {
        let m = moore_complex(2, 3).unwrap();
        let e = EquivChainComplex::trivial(m.clone(), 5);
        assert_eq!(e.fixed_part().unwrap(), m);
        let point = ChainComplexZ::new(0, vec![1], vec![]).unwrap();
        assert!(EquivChainComplex::trivial(point, 3).verify_acyclic().unwrap());
    }

    #[test]
    fn bad_actions_rejected() {
        let m = rp2_complex();
        let c = ChainComplexZ::new(0, vec![1, 2], vec![IntegerMatrix::from_rows(&[vec![0, 0]]).unwrap()]).unwrap();
        assert!(EquivChainComplex::new(c.clone(), 3, vec![vec![0], vec![1, 0]]).is_err());
        assert!(EquivChainComplex::new(m, 3, vec![vec![0]]).is_err());
        let ok = EquivChainComplex::new(c, 2, vec![vec![0], vec![1, 0]]);
        assert!(ok.is_ok());
    }

    #[test]
    fn reports() {
        let r = jones_report(2, 2, 3).unwrap();
        assert!(r.verified);
        assert_eq!(r.fixed_mod_homology[&2], 1);
    }
}
