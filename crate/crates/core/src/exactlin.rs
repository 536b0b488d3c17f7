//! Exact integer linear algebra: Smith normal form and homology of chain
//! complexes over the integers and over prime fields.
//!
//! Matrices are dense `i64`; every arithmetic step is checked and an
//! overflow surfaces as [`Error::Overflow`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return input(format!("matrix data has {} entries, expected {}x{}", data.len(), rows, cols));
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    /// Builds a matrix from its rows. An empty slice gives the 0x0 matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return input("ragged matrix rows");
        }
        Ok(IntegerMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != rhs.rows {
            return input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            ));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a
                        .checked_mul(rhs.get(k, j))
                        .and_then(|x| x.checked_add(out.get(i, j)))
                        .ok_or_else(|| Error::Overflow("matrix product".into()))?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Reorders rows and columns: entry `(i, j)` moves to `(row_perm[i], col_perm[j])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(row_perm[i], col_perm[j], self.get(i, j));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] -= q * row[source]
    fn row_axpy(&mut self, target: usize, source: usize, q: i64) -> Result<()> {
        for j in 0..self.cols {
            let v = sub_mul(self.get(target, j), q, self.get(source, j))?;
            self.set(target, j, v);
        }
        Ok(())
    }

    /// col[target] -= q * col[source]
    fn col_axpy(&mut self, target: usize, source: usize, q: i64) -> Result<()> {
        for i in 0..self.rows {
            let v = sub_mul(self.get(i, target), q, self.get(i, source))?;
            self.set(i, target, v);
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for j in 0..self.cols {
            let v = self.get(i, j).checked_neg().ok_or_else(|| Error::Overflow("row negation".into()))?;
            self.set(i, j, v);
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

fn sub_mul(x: i64, q: i64, y: i64) -> Result<i64> {
    q.checked_mul(y)
        .and_then(|qy| x.checked_sub(qy))
        .ok_or_else(|| Error::Overflow(format!("elimination step {x} - {q}*{y}")))
}

/// Diagonal of the Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    /// `min(rows, cols)` entries: positive invariant factors `d1 | d2 | ...`
    /// followed by zeros.
    pub diagonal: Vec<i64>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }
}

/// Smith normal form of `m`.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<SmithForm> {
    Ok(reduce(m.clone(), None)?.0)
}

/// Smith normal form together with unimodular `U`, `V` such that `U * m * V`
/// is the diagonal matrix.
pub fn smith_normal_form_with_transforms(
    m: &IntegerMatrix,
) -> Result<(SmithForm, IntegerMatrix, IntegerMatrix)> {
    let transforms = (IntegerMatrix::identity(m.rows), IntegerMatrix::identity(m.cols));
    let (form, t) = reduce(m.clone(), Some(transforms))?;
    let (u, v) = t.expect("transforms requested");
    Ok((form, u, v))
}

type Transforms = Option<(IntegerMatrix, IntegerMatrix)>;

fn reduce(mut a: IntegerMatrix, mut tr: Transforms) -> Result<(SmithForm, Transforms)> {
    let n = a.rows.min(a.cols);
    let mut t = 0;
    while t < n {
        // pivot = smallest nonzero magnitude in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                let v = a.get(i, j);
                if v != 0 && best.is_none_or(|(bi, bj)| v.unsigned_abs() < a.get(bi, bj).unsigned_abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut a, &mut tr, t, pi);
        swap_cols(&mut a, &mut tr, t, pj);

        loop {
            let p = a.get(t, t);
            let mut clean = true;
            for i in t + 1..a.rows {
                let v = a.get(i, t);
                if v != 0 {
                    row_axpy(&mut a, &mut tr, i, t, v / p)?;
                    clean &= a.get(i, t) == 0;
                }
            }
            for j in t + 1..a.cols {
                let v = a.get(t, j);
                if v != 0 {
                    col_axpy(&mut a, &mut tr, j, t, v / p)?;
                    clean &= a.get(t, j) == 0;
                }
            }
            if !clean {
                // a remainder smaller than the pivot survived; make it the pivot
                let mut best = (t, t);
                for i in t + 1..a.rows {
                    let v = a.get(i, t);
                    if v != 0 && v.unsigned_abs() < a.get(best.0, best.1).unsigned_abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..a.cols {
                    let v = a.get(t, j);
                    if v != 0 && v.unsigned_abs() < a.get(best.0, best.1).unsigned_abs() {
                        best = (t, j);
                    }
                }
                swap_rows(&mut a, &mut tr, t, best.0);
                swap_cols(&mut a, &mut tr, t, best.1);
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let bad_row = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| a.get(i, j) % p != 0));
            match bad_row {
                Some(i) => row_axpy(&mut a, &mut tr, t, i, -1)?,
                None => break,
            }
        }
        if a.get(t, t) < 0 {
            a.negate_row(t)?;
            if let Some((u, _)) = tr.as_mut() {
                u.negate_row(t)?;
            }
        }
        t += 1;
    }
    let diagonal: Vec<i64> = (0..n).map(|i| a.get(i, i)).collect();
    let rank = diagonal.iter().filter(|&&d| d != 0).count();
    Ok((SmithForm { diagonal, rank }, tr))
}

fn swap_rows(a: &mut IntegerMatrix, tr: &mut Transforms, i: usize, j: usize) {
    a.swap_rows(i, j);
    if let Some((u, _)) = tr.as_mut() {
        u.swap_rows(i, j);
    }
}

fn swap_cols(a: &mut IntegerMatrix, tr: &mut Transforms, i: usize, j: usize) {
    a.swap_cols(i, j);
    if let Some((_, v)) = tr.as_mut() {
        v.swap_cols(i, j);
    }
}

fn row_axpy(a: &mut IntegerMatrix, tr: &mut Transforms, target: usize, source: usize, q: i64) -> Result<()> {
    a.row_axpy(target, source, q)?;
    if let Some((u, _)) = tr.as_mut() {
        u.row_axpy(target, source, q)?;
    }
    Ok(())
}

fn col_axpy(a: &mut IntegerMatrix, tr: &mut Transforms, target: usize, source: usize, q: i64) -> Result<()> {
    a.col_axpy(target, source, q)?;
    if let Some((_, v)) = tr.as_mut() {
        v.col_axpy(target, source, q)?;
    }
    Ok(())
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Shares no code with the Smith reduction so the two can cross-check.
pub fn rank_over_rationals(m: &IntegerMatrix) -> Result<usize> {
    let mut a: Vec<Vec<i128>> = (0..m.rows).map(|i| m.row(i).iter().map(|&x| x as i128).collect()).collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, piv);
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let v = a[i][j]
                    .checked_mul(a[rank][col])
                    .zip(a[i][col].checked_mul(a[rank][j]))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or_else(|| Error::Overflow("fraction-free elimination".into()))?;
                a[i][j] = v / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    Ok(rank)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of `m` reduced modulo the prime `p`.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    let pi = p as i128;
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|&x| (x as i128).rem_euclid(pi) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][col], p - 2, p);
        for j in col..m.cols {
            a[rank][j] = mul_mod(a[rank][j], inv, p);
        }
        for i in 0..m.rows {
            if i != rank && a[i][col] != 0 {
                let f = a[i][col];
                for j in col..m.cols {
                    let s = mul_mod(f, a[rank][j], p);
                    a[i][j] = (a[i][j] + p - s) % p;
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// A finitely generated abelian group `Z^betti + Z/t1 + ... + Z/tk`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors `>= 2`, each dividing the next.
    pub torsion: Vec<i64>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { betti: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A bounded chain complex of finitely generated free abelian groups.
///
/// Degrees run over `lo..=hi`. The boundary stored for degree `d` maps
/// degree `d` to degree `d - 1`; the boundary out of degree `lo` is zero.
/// An augmented complex simply starts at degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainComplexZ {
    lo: i64,
    ranks: Vec<usize>,
    boundaries: Vec<IntegerMatrix>,
    labels: Vec<Vec<String>>,
}

impl ChainComplexZ {
    /// `boundaries[k]` is the map from degree `lo + k + 1` to `lo + k`.
    pub fn new(lo: i64, ranks: Vec<usize>, boundaries: Vec<IntegerMatrix>) -> Result<Self> {
        let labels = ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| (0..r).map(|i| format!("e{}_{}", lo + k as i64, i)).collect())
            .collect();
        Self::with_labels(lo, ranks, boundaries, labels)
    }

    pub fn with_labels(
        lo: i64,
        ranks: Vec<usize>,
        boundaries: Vec<IntegerMatrix>,
        labels: Vec<Vec<String>>,
    ) -> Result<Self> {
        if boundaries.len() != ranks.len().saturating_sub(1) {
            return input(format!(
                "{} degrees need {} boundary maps, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            ));
        }
        if labels.len() != ranks.len() || labels.iter().zip(&ranks).any(|(l, &r)| l.len() != r) {
            return input("basis labels do not match ranks");
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.rows() != ranks[k] || b.cols() != ranks[k + 1] {
                return input(format!(
                    "boundary out of degree {} is {}x{}, expected {}x{}",
                    lo + k as i64 + 1,
                    b.rows(),
                    b.cols(),
                    ranks[k],
                    ranks[k + 1]
                ));
            }
        }
        for k in 1..boundaries.len() {
            let comp = boundaries[k - 1].checked_mul(&boundaries[k])?;
            if !comp.is_zero() {
                return input(format!("boundary squares to nonzero at degree {}", lo + k as i64 + 1));
            }
        }
        Ok(ChainComplexZ { lo, ranks, boundaries, labels })
    }

    /// The complex with no degrees at all.
    pub fn zero() -> Self {
        ChainComplexZ { lo: 0, ranks: Vec::new(), boundaries: Vec::new(), labels: Vec::new() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }

    pub fn rank(&self, d: i64) -> usize {
        self.index(d).map_or(0, |k| self.ranks[k])
    }

    pub fn labels(&self, d: i64) -> &[String] {
        self.index(d).map_or(&[], |k| &self.labels[k])
    }

    /// The boundary out of degree `d`, if it is not the zero map to a
    /// missing degree.
    pub fn boundary(&self, d: i64) -> Option<&IntegerMatrix> {
        let k = self.index(d)?;
        if k == 0 {
            None
        } else {
            Some(&self.boundaries[k - 1])
        }
    }

    fn index(&self, d: i64) -> Option<usize> {
        if d < self.lo || d > self.hi() {
            None
        } else {
            Some((d - self.lo) as usize)
        }
    }

    /// Relabels and reorders the basis of degree `d`: old basis element `i`
    /// becomes new element `perm[i]`.
    pub fn permute_basis(&self, d: i64, perm: &[usize]) -> Result<Self> {
        let Some(k) = self.index(d) else { return input(format!("no degree {d}")) };
        let n = self.ranks[k];
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return input("not a permutation of the basis");
        }
        let mut out = self.clone();
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[k][i].clone();
        }
        out.labels[k] = labels;
        if k > 0 {
            let b = &self.boundaries[k - 1];
            let id: Vec<usize> = (0..b.rows()).collect();
            out.boundaries[k - 1] = b.permuted(&id, perm);
        }
        if k < self.boundaries.len() {
            let b = &self.boundaries[k];
            let id: Vec<usize> = (0..b.cols()).collect();
            out.boundaries[k] = b.permuted(perm, &id);
        }
        Ok(out)
    }
}

/// Integral homology `H_d = ker d_d / im d_{d+1}` in every degree of `c`.
pub fn homology(c: &ChainComplexZ) -> Result<BTreeMap<i64, HomologyGroup>> {
    let forms: Vec<Option<SmithForm>> = c
        .degrees()
        .map(|d| c.boundary(d).map(smith_normal_form).transpose())
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (k, d) in c.degrees().enumerate() {
        let rank_out = forms[k].as_ref().map_or(0, |f| f.rank);
        let incoming = forms.get(k + 1).and_then(Option::as_ref);
        let rank_in = incoming.map_or(0, |f| f.rank);
        let torsion = incoming.map(SmithForm::torsion).unwrap_or_default();
        out.insert(d, HomologyGroup { betti: c.rank(d) - rank_out - rank_in, torsion });
    }
    Ok(out)
}

/// Dimensions of homology with coefficients in the prime field `F_p`.
pub fn homology_mod_p(c: &ChainComplexZ, p: u64) -> Result<BTreeMap<i64, usize>> {
    if !is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    let ranks: Vec<usize> = c
        .degrees()
        .map(|d| c.boundary(d).map_or(Ok(0), |b| rank_mod_p(b, p)))
        .collect::<Result<_>>()?;
    Ok(c.degrees()
        .enumerate()
        .map(|(k, d)| (d, c.rank(d) - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rp2() -> ChainComplexZ {
        ChainComplexZ::new(
            0,
            vec![1, 1, 1],
            vec![IntegerMatrix::from_rows(&[vec![0]]).unwrap(), IntegerMatrix::from_rows(&[vec![2]]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn snf_examples() {
        let f = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2]]).unwrap()).unwrap();
        assert_eq!((f.diagonal, f.rank), (vec![2], 1));
        let f = smith_normal_form(&IntegerMatrix::zeros(0, 0)).unwrap();
        assert_eq!((f.diagonal, f.rank), (vec![], 0));
        let f = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap()).unwrap();
        assert_eq!((f.diagonal, f.rank), (vec![1, 6], 2));
    }

    #[test]
    fn snf_zero_rows_and_cols() {
        let f = smith_normal_form(&IntegerMatrix::zeros(3, 0)).unwrap();
        assert_eq!(f.rank, 0);
        let f = smith_normal_form(&IntegerMatrix::zeros(2, 3)).unwrap();
        assert_eq!(f.diagonal, vec![0, 0]);
    }

    #[test]
    fn snf_overflow_is_reported() {
        let m = IntegerMatrix::from_rows(&[vec![i64::MAX, i64::MAX - 1], vec![i64::MAX - 1, i64::MIN + 3]]).unwrap();
        // either completes exactly or reports overflow; never wraps silently
        match smith_normal_form(&m) {
            Ok(f) => assert!(f.diagonal.iter().all(|&d| d >= 0)),
            Err(e) => assert!(matches!(e, Error::Overflow(_))),
        }
    }

    #[test]
    fn rp2_homology() {
        let h = homology(&rp2()).unwrap();
        assert_eq!(h[&0], HomologyGroup::free(1));
        assert_eq!(h[&1], HomologyGroup { betti: 0, torsion: vec![2] });
        assert!(h[&2].is_trivial());
        let m2 = homology_mod_p(&rp2(), 2).unwrap();
        assert_eq!(m2.values().copied().collect::<Vec<_>>(), vec![1, 1, 1]);
        let m3 = homology_mod_p(&rp2(), 3).unwrap();
        assert_eq!(m3.values().copied().collect::<Vec<_>>(), vec![1, 0, 0]);
    }

    #[test]
    fn zero_complex() {
        assert!(homology(&ChainComplexZ::zero()).unwrap().is_empty());
        assert!(homology_mod_p(&ChainComplexZ::zero(), 5).unwrap().is_empty());
        let c = ChainComplexZ::new(0, vec![0, 0], vec![IntegerMatrix::zeros(0, 0)]).unwrap();
        assert!(homology(&c).unwrap().values().all(HomologyGroup::is_trivial));
    }

    #[test]
    fn mod_p_rejects_composite() {
        assert!(matches!(homology_mod_p(&rp2(), 4), Err(Error::Input(_))));
    }

    #[test]
    fn construction_rejects_bad_complexes() {
        let one = |v| IntegerMatrix::from_rows(&[vec![v]]).unwrap();
        assert!(ChainComplexZ::new(0, vec![1, 1, 1], vec![one(1), one(1)]).is_err());
        assert!(ChainComplexZ::new(0, vec![1, 2], vec![one(1)]).is_err());
        assert!(ChainComplexZ::new(0, vec![1, 1], vec![]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = IntegerMatrix> {
        (0usize..5, 0usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..7, r * c).prop_map(move |d| IntegerMatrix::new(r, c, d).unwrap())
        })
    }

    proptest! {
        #[test]
        fn snf_invariants(m in small_matrix()) {
            let (f, u, v) = smith_normal_form_with_transforms(&m).unwrap();
            let nz: Vec<i64> = f.diagonal.iter().copied().take_while(|&d| d != 0).collect();
            prop_assert_eq!(nz.len(), f.rank);
            prop_assert!(f.diagonal[f.rank..].iter().all(|&d| d == 0));
            prop_assert!(nz.iter().all(|&d| d > 0));
            prop_assert!(nz.windows(2).all(|w| w[1] % w[0] == 0));
            prop_assert_eq!(f.rank, rank_over_rationals(&m).unwrap());
            let d = u.checked_mul(&m).unwrap().checked_mul(&v).unwrap();
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    let expect = if i == j { f.diagonal[i] } else { 0 };
                    prop_assert_eq!(d.get(i, j), expect);
                }
            }
        }

        #[test]
        fn rank_mod_p_bounded_by_rational_rank(m in small_matrix(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
            prop_assert!(rank_mod_p(&m, p).unwrap() <= rank_over_rationals(&m).unwrap());
        }
    }
}
