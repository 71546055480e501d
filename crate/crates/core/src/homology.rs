//! Exact integral homology of finite graded chain complexes.
//!
//! [`smith_normal_form`] is the general dense algorithm with transforms.
//! Homology itself only needs invariant factors, which [`invariant_factors`]
//! computes by sparse elimination on unit pivots (machine integers, redone
//! with big integers on overflow) before handing the small remainder to the
//! dense algorithm.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::combinatorics::{basis_is_nonempty, enumerate_basis, Surjection};
use crate::error::{Error, Result};
use crate::operad::basis_differential;

/// A sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_dense<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed("ragged matrix".into()));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone().into());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.data[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.data[i].iter().map(|(&j, v)| (j, v))
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    fn from_dense_big(d: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let mut m = Self::zeros(d.len(), cols);
        for (i, row) in d.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (l, a) in &self.data[i] {
                for (j, b) in &other.data[*l] {
                    *acc.entry(*j).or_default() += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[i] = acc;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, v) in row {
                out.data[j].insert(i, v.clone());
            }
        }
        out
    }

    /// Determinant of a square matrix, by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Malformed("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for t in 0..n {
            let Some(p) = (t..n).find(|&i| !a[i][t].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != t {
                a.swap(p, t);
                sign = -sign;
            }
            for i in t + 1..n {
                for j in t + 1..n {
                    let v = &a[t][t] * &a[i][j] - &a[i][t] * &a[t][j];
                    a[i][j] = v / &prev;
                }
                a[i][t] = BigInt::zero();
            }
            prev = a[t][t].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }
}

/// `U M V = D` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries, positive and in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i))
            .filter(|v| !v.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (d, u, v) = dense_smith(m.to_dense(), m.rows(), m.cols(), true);
    SmithForm {
        d: IntegerMatrix::from_dense_big(d, m.cols()),
        u: IntegerMatrix::from_dense_big(u.expect("tracked"), m.rows()),
        v: IntegerMatrix::from_dense_big(v.expect("tracked"), m.cols()),
    }
}

type Dense = Vec<Vec<BigInt>>;

fn identity_dense(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Dense Smith reduction: minimal-absolute-value pivoting with gcd steps.
fn dense_smith(mut a: Dense, rows: usize, cols: usize, track: bool) -> (Dense, Option<Dense>, Option<Dense>) {
    let mut u = track.then(|| identity_dense(rows));
    let mut v = track.then(|| identity_dense(cols));
    let swap_cols = |a: &mut Dense, v: &mut Option<Dense>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        if let Some(v) = v {
            for row in v.iter_mut() {
                row.swap(x, y);
            }
        }
    };
    // row_i -= q row_t, applied to a and u
    let row_op = |a: &mut Dense, u: &mut Option<Dense>, i: usize, t: usize, q: &BigInt| {
        let (src, dst) = if i < t {
            let (lo, hi) = a.split_at_mut(t);
            (&hi[0], &mut lo[i])
        } else {
            let (lo, hi) = a.split_at_mut(i);
            (&lo[t], &mut hi[0])
        };
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            if !s.is_zero() {
                *d -= q * s;
            }
        }
        if let Some(u) = u {
            let src = u[t].clone();
            for (d, s) in u[i].iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d -= q * s;
                }
            }
        }
    };
    // col_j -= q col_t, applied to a and v
    let col_op = |a: &mut Dense, v: &mut Option<Dense>, j: usize, t: usize, q: &BigInt| {
        for row in a.iter_mut() {
            if !row[t].is_zero() {
                let s = row[t].clone();
                row[j] -= q * s;
            }
        }
        if let Some(v) = v {
            for row in v.iter_mut() {
                if !row[t].is_zero() {
                    let s = row[t].clone();
                    row[j] -= q * s;
                }
            }
        }
    };
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        if let Some(u) = &mut u {
            u.swap(t, bi);
        }
        swap_cols(&mut a, &mut v, t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_op(&mut a, &mut u, i, t, &q);
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_op(&mut a, &mut v, j, t, &q);
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // move the smallest remaining entry of row t / column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                    if let Some(u) = &mut u {
                        u.swap(t, best.0);
                    }
                } else if best.1 != t {
                    swap_cols(&mut a, &mut v, t, best.1);
                }
                continue;
            }
            // divisibility of the rest of the block by the pivot
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => row_op(&mut a, &mut u, t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            if let Some(u) = &mut u {
                for x in u[t].iter_mut() {
                    *x = -x.clone();
                }
            }
        }
    }
    (a, u, v)
}


/// Entry arithmetic for sparse elimination; `None` signals overflow.
trait Entry: Clone + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn product(&self, b: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn product(&self, b: &Self) -> Option<Self> {
        self.checked_mul(*b)
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn product(&self, b: &Self) -> Option<Self> {
        Some(self * b)
    }
}

type SparseRow<T> = Vec<(usize, T)>;

/// `dst - q * src` on rows sorted by column.
fn combine<T: Entry>(dst: &SparseRow<T>, q: &T, src: &SparseRow<T>) -> Option<SparseRow<T>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        if j == src.len() || (i < dst.len() && dst[i].0 < src[j].0) {
            out.push(dst[i].clone());
            i += 1;
        } else if i == dst.len() || src[j].0 < dst[i].0 {
            out.push((src[j].0, zero.sub_mul(q, &src[j].1)?));
            j += 1;
        } else {
            let v = dst[i].1.sub_mul(q, &src[j].1)?;
            if !v.vanishes() {
                out.push((dst[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Eliminates unit pivots, Markowitz-style: the shortest row first, and
/// within it the unit entry whose column is sparsest. Returns the number of
/// pivots and the rows left without unit entries, or `None` on overflow.
fn eliminate_units<T: Entry>(mut rows: Vec<SparseRow<T>>, cols: usize) -> Option<(usize, Vec<SparseRow<T>>)> {
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].push(r);
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        rows.iter().enumerate().map(|(r, row)| Reverse((row.len(), r))).collect();
    let mut visited = vec![0usize; rows.len()];
    let mut epoch = 0;
    let mut rank = 0;
    while let Some(Reverse((len, r))) = heap.pop() {
        if !alive[r] || rows[r].len() != len {
            continue;
        }
        if len == 0 {
            alive[r] = false;
            continue;
        }
        let pivot = rows[r]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(c, _)| col_rows[*c].len())
            .map(|(c, v)| (*c, v.clone()));
        let Some((c, a)) = pivot else {
            // stays alive; revisited if a later elimination changes it
            continue;
        };
        alive[r] = false;
        rank += 1;
        epoch += 1;
        let pivot_row = std::mem::take(&mut rows[r]);
        let targets = std::mem::take(&mut col_rows[c]);
        for r2 in targets {
            if r2 == r || !alive[r2] || visited[r2] == epoch {
                continue;
            }
            visited[r2] = epoch;
            let Ok(pos) = rows[r2].binary_search_by_key(&c, |e| e.0) else {
                continue;
            };
            // a is ±1, so b / a = b * a
            let q = rows[r2][pos].1.product(&a)?;
            let updated = combine(&rows[r2], &q, &pivot_row)?;
            for &(c2, _) in &pivot_row {
                if c2 != c {
                    col_rows[c2].push(r2);
                }
            }
            rows[r2] = updated;
            heap.push(Reverse((rows[r2].len(), r2)));
        }
    }
    let rest = rows
        .into_iter()
        .zip(alive)
        .filter(|(row, a)| *a && !row.is_empty())
        .map(|(row, _)| row)
        .collect();
    Some((rank, rest))
}

/// Nonzero invariant factors of `m`, in divisibility order.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let small: Option<Vec<SparseRow<i64>>> = m
        .data
        .iter()
        .map(|row| row.iter().map(|(&c, v)| v.to_i64().map(|v| (c, v))).collect())
        .collect();
    let reduced = small
        .and_then(|rows| eliminate_units(rows, m.cols))
        .map(|(rank, rest)| (rank, to_big_rows(rest)));
    let (units, rest) = reduced.unwrap_or_else(|| {
        let rows = m
            .data
            .iter()
            .map(|row| row.iter().map(|(&c, v)| (c, v.clone())).collect())
            .collect();
        eliminate_units(rows, m.cols).expect("big integers do not overflow")
    });
    let mut out = vec![BigInt::one(); units];
    if !rest.is_empty() {
        // compress the columns that still occur
        let mut used: Vec<usize> = rest.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
        used.sort_unstable();
        used.dedup();
        let position: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let dense: Dense = rest
            .iter()
            .map(|row| {
                let mut d = vec![BigInt::zero(); used.len()];
                for (c, v) in row {
                    d[position[c]] = v.clone();
                }
                d
            })
            .collect();
        let n = dense.len();
        let (d, _, _) = dense_smith(dense, n, used.len(), false);
        let mut tail: Vec<BigInt> = (0..n.min(used.len()))
            .map(|i| d[i][i].clone())
            .filter(|v| !v.is_zero())
            .collect();
        // a unit left by the dense pass sorts before the others
        tail.sort();
        out.extend(tail);
    }
    out
}

fn to_big_rows(rows: Vec<SparseRow<i64>>) -> Vec<SparseRow<BigInt>> {
    rows.into_iter()
        .map(|row| row.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
        .collect()
}

/// A bounded chain complex `C_0 <- C_1 <- ... <- C_top` of free abelian groups.
///
/// `boundary(q)` is the matrix of `∂_q: C_q -> C_{q-1}` with one row per
/// generator of `C_q`. When `truncated_above` is set, `C_{top+1}` is nonzero
/// but not part of the complex, so homology in the top degree is not final.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    labels: Vec<Vec<String>>,
    boundaries: Vec<IntegerMatrix>,
    truncated_above: bool,
}

impl GradedComplex {
    /// Validates the shapes and `∂_q ∘ ∂_{q+1} = 0`.
    pub fn new(labels: Vec<Vec<String>>, boundaries: Vec<IntegerMatrix>, truncated_above: bool) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Integrity("a complex needs at least degree 0".into()));
        }
        if boundaries.len() + 1 != labels.len() {
            return Err(Error::Integrity(format!(
                "{} degrees need {} boundary matrices, got {}",
                labels.len(),
                labels.len() - 1,
                boundaries.len()
            )));
        }
        for (q, b) in boundaries.iter().enumerate() {
            let q = q + 1;
            if b.rows() != labels[q].len() || b.cols() != labels[q - 1].len() {
                return Err(Error::Integrity(format!("boundary in degree {q} has the wrong shape")));
            }
        }
        for q in 1..boundaries.len() {
            // ∂_{q+1} then ∂_q
            if !boundaries[q].mul(&boundaries[q - 1])?.is_zero() {
                return Err(Error::Integrity(format!(
                    "∂∘∂ is nonzero from degree {}",
                    q + 1
                )));
            }
        }
        Ok(GradedComplex {
            labels,
            boundaries,
            truncated_above,
        })
    }

    pub fn top_degree(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn rank(&self, q: usize) -> usize {
        self.labels.get(q).map_or(0, Vec::len)
    }

    pub fn labels(&self, q: usize) -> &[String] {
        self.labels.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `∂_q` for `1 <= q <= top`.
    pub fn boundary(&self, q: usize) -> Option<&IntegerMatrix> {
        q.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn truncated_above(&self) -> bool {
        self.truncated_above
    }
}

/// `H_q` as a free rank and torsion coefficients.
///
/// `exact` is false only in the top degree of a truncated complex, where the
/// rank is that of the cycles and so an upper bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub rank: usize,
    #[serde(with = "crate::json::int_vec")]
    pub torsion: Vec<BigInt>,
    pub exact: bool,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Homology in the requested degrees (clamped to the complex).
pub fn homology(c: &GradedComplex, degrees: RangeInclusive<usize>) -> Vec<HomologyGroup> {
    let top = c.top_degree();
    let lo = *degrees.start();
    let hi = (*degrees.end()).min(top);
    let mut factors: HashMap<usize, Vec<BigInt>> = HashMap::new();
    let mut factors_of = |q: usize| -> Vec<BigInt> {
        factors
            .entry(q)
            .or_insert_with(|| c.boundary(q).map(invariant_factors).unwrap_or_default())
            .clone()
    };
    let mut out = Vec::new();
    for q in lo..=hi {
        let outgoing = factors_of(q).len();
        let (incoming, torsion) = if q < top {
            let f = factors_of(q + 1);
            let torsion = f.iter().filter(|v| !v.is_one()).cloned().collect();
            (f.len(), torsion)
        } else {
            (0, Vec::new())
        };
        out.push(HomologyGroup {
            degree: q,
            rank: c.rank(q) - outgoing - incoming,
            torsion,
            exact: q < top || !c.truncated_above,
        });
    }
    out
}

/// The complex spanned by the given bases of nondegenerate surjections of
/// one arity, with the sequence differential. Fails if the span is not
/// closed under the differential.
pub fn complex_from_bases(bases: Vec<Vec<Surjection>>, truncated_above: bool) -> Result<GradedComplex> {
    let mut boundaries = Vec::new();
    for q in 1..bases.len() {
        let index: HashMap<&Surjection, usize> = bases[q - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = IntegerMatrix::zeros(bases[q].len(), bases[q - 1].len());
        for (i, f) in bases[q].iter().enumerate() {
            for (face, sign) in basis_differential(f) {
                let Some(&j) = index.get(&face) else {
                    return Err(Error::Integrity(format!("∂⟨{f}⟩ leaves the span at ⟨{face}⟩")));
                };
                let v = m.get(i, j) + BigInt::from(sign);
                m.set(i, j, v);
            }
        }
        boundaries.push(m);
    }
    let labels = bases
        .iter()
        .map(|b| b.iter().map(|f| f.to_string()).collect())
        .collect();
    GradedComplex::new(labels, boundaries, truncated_above)
}

/// `S(k)`, or `S_n(k)` when `max_complexity` is given, in degrees `0..=max_degree`.
pub fn build_s_complex(k: usize, max_complexity: Option<usize>, max_degree: usize) -> Result<GradedComplex> {
    let bases = (0..=max_degree)
        .map(|d| enumerate_basis(k, d, max_complexity))
        .collect();
    let truncated = basis_is_nonempty(k, max_degree + 1, max_complexity);
    complex_from_bases(bases, truncated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_dense(rows).unwrap()
    }

    fn check_smith(a: &IntegerMatrix) -> Vec<BigInt> {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert_eq!(invariant_factors(a), f);
        f
    }

    #[test]
    fn smith_examples() {
        assert_eq!(check_smith(&m(&[vec![2]])), vec![BigInt::from(2)]);
        assert_eq!(
            check_smith(&m(&[vec![2, 4], vec![6, 8]])),
            vec![BigInt::from(2), BigInt::from(4)]
        );
        assert!(check_smith(&IntegerMatrix::zeros(3, 2)).is_empty());
        let f = check_smith(&m(&[vec![6, 0, 0], vec![0, 10, 0], vec![0, 0, 15]]));
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(30), BigInt::from(30)]);
        let f = check_smith(&m(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]));
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn sparse_path_overflow_falls_back() {
        let big = i64::MAX / 2;
        let a = m(&[vec![1, big], vec![-1, big], vec![0, 3]]);
        check_smith(&a);
    }

    #[test]
    fn two_term_complex() {
        let c = GradedComplex::new(
            vec![vec!["a".into()], vec!["b".into()]],
            vec![m(&[vec![2]])],
            false,
        )
        .unwrap();
        let h = homology(&c, 0..=1);
        assert_eq!(h[0].rank, 0);
        assert_eq!(h[0].torsion, vec![BigInt::from(2)]);
        assert!(h[1].is_trivial());
    }

    #[test]
    fn nonzero_square_is_refused() {
        let labels = vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]];
        let err = GradedComplex::new(labels, vec![m(&[vec![1]]), m(&[vec![1]])], false);
        assert!(matches!(err, Err(Error::Integrity(_))));
    }

    #[test]
    fn surjection_complexes() {
        let c = build_s_complex(2, None, 3).unwrap();
        let ranks: Vec<usize> = (0..=3).map(|q| c.rank(q)).collect();
        assert_eq!(ranks, vec![2, 2, 2, 2]);
        assert!(c.truncated_above());
        assert_eq!(build_s_complex(3, None, 0).unwrap().rank(0), 6);
        let c0 = build_s_complex(0, None, 2).unwrap();
        assert_eq!((0..=2).map(|q| c0.rank(q)).collect::<Vec<_>>(), vec![1, 0, 0]);
        assert!(!c0.truncated_above());

        let h = homology(&build_s_complex(2, None, 6).unwrap(), 0..=5);
        assert_eq!(h[0].rank, 1);
        assert!(h.iter().all(|g| g.exact && g.torsion.is_empty()));
        assert!(h[1..].iter().all(HomologyGroup::is_trivial));

        let s2 = build_s_complex(2, Some(2), 3).unwrap();
        assert!(!s2.truncated_above());
        let h = homology(&s2, 0..=3);
        let ranks: Vec<usize> = h.iter().map(|g| g.rank).collect();
        assert_eq!(ranks, vec![1, 1, 0, 0]);
    }
}
