use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported arity. Entries are stored as bytes.
pub const MAX_ARITY: usize = 255;

/// A nondegenerate surjection `f: {1..m} -> {1..k}`, written as the sequence
/// of its values. These are the basis elements of the operad in arity `k`
/// and degree `m - k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SurjectionRepr", into = "SurjectionRepr")]
pub struct Surjection {
    arity: usize,
    entries: Vec<u8>,
}

/// Outcome of checking a sequence against the basis conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validated {
    Basis(Surjection),
    /// Adjacent equal entries or a missing value: the sequence operation is zero.
    Degenerate,
}

impl Validated {
    pub fn basis(self) -> Option<Surjection> {
        match self {
            Validated::Basis(s) => Some(s),
            Validated::Degenerate => None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, Validated::Degenerate)
    }
}

impl Surjection {
    /// Checks `entries` against arity `k`. Out-of-range entries are malformed
    /// input; degeneracy is reported as [`Validated::Degenerate`].
    pub fn validate(entries: &[usize], arity: usize) -> Result<Validated> {
        if arity > MAX_ARITY {
            return Err(Error::ArityTooLarge(arity));
        }
        for (position, &entry) in entries.iter().enumerate() {
            if entry == 0 || entry > arity {
                return Err(Error::EntryOutOfRange {
                    entry,
                    position: position + 1,
                    arity,
                });
            }
        }
        let bytes: Vec<u8> = entries.iter().map(|&e| e as u8).collect();
        Ok(Self::from_bytes(bytes, arity))
    }

    /// Like [`Surjection::validate`] for entries already known to lie in `1..=arity`.
    pub(crate) fn from_bytes(entries: Vec<u8>, arity: usize) -> Validated {
        if is_nondegenerate(&entries, arity) {
            Validated::Basis(Surjection { arity, entries })
        } else {
            Validated::Degenerate
        }
    }

    /// Builds a surjection from entries the caller guarantees nondegenerate.
    pub(crate) fn from_bytes_unchecked(entries: Vec<u8>, arity: usize) -> Surjection {
        debug_assert!(is_nondegenerate(&entries, arity), "{entries:?} / {arity}");
        Surjection { arity, entries }
    }

    /// Parses a nondegenerate sequence, treating degeneracy as an error.
    pub fn parse(entries: &[usize], arity: usize) -> Result<Surjection> {
        Self::validate(entries, arity)?
            .basis()
            .ok_or_else(|| Error::Malformed(format!("{entries:?} is degenerate in arity {arity}")))
    }

    /// The sequence `1 2 ... k`; `⟨1⟩` is the operad unit and `k = 0` gives the
    /// identity of the empty set.
    pub fn identity(arity: usize) -> Surjection {
        assert!(arity <= MAX_ARITY);
        Surjection {
            arity,
            entries: (1..=arity as u8).collect(),
        }
    }

    /// The alternating word `1 2 1 2 ...` with `len` entries (`len >= 2`), the
    /// operation behind the cup-(len-2) product.
    pub fn alternating(len: usize) -> Surjection {
        assert!(len >= 2, "alternating words need at least two entries");
        Surjection {
            arity: 2,
            entries: (0..len).map(|j| if j % 2 == 0 { 1 } else { 2 }).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.entries.len() - self.arity
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Value at the 1-based position `j`.
    pub fn at(&self, j: usize) -> usize {
        self.entries[j - 1] as usize
    }

    /// 1-based positions of `f⁻¹(value)`, increasing.
    pub fn fiber(&self, value: usize) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e as usize == value)
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// `|f⁻¹(i)|` for `i = 1..=k`, indexed from 0.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        fiber_sizes(&self.entries, self.arity)
    }

    pub fn tau(&self) -> Vec<usize> {
        tau(&self.entries)
    }

    /// Entries at the given 1-based positions, in increasing position order.
    /// The result may be degenerate; revalidate before use as a basis element.
    pub fn restrict(&self, positions: &[usize]) -> Vec<u8> {
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted
            .into_iter()
            .filter(|&j| j >= 1 && j <= self.entries.len())
            .map(|j| self.entries[j - 1])
            .collect()
    }

    /// The sequence with the entry at 1-based position `j` removed.
    pub fn delete(&self, j: usize) -> Vec<u8> {
        let mut out = self.entries.clone();
        out.remove(j - 1);
        out
    }

    pub fn complexity(&self) -> usize {
        complexity(&self.entries)
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity < 10 {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(u8::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SurjectionRepr {
    arity: usize,
    seq: Vec<usize>,
}

impl TryFrom<SurjectionRepr> for Surjection {
    type Error = Error;

    fn try_from(repr: SurjectionRepr) -> Result<Self> {
        Surjection::parse(&repr.seq, repr.arity)
    }
}

impl From<Surjection> for SurjectionRepr {
    fn from(s: Surjection) -> Self {
        SurjectionRepr {
            arity: s.arity,
            seq: s.entries.iter().map(|&e| e as usize).collect(),
        }
    }
}

/// Surjective onto `1..=arity` with no two equal adjacent entries.
pub fn is_nondegenerate(entries: &[u8], arity: usize) -> bool {
    if entries.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut seen = vec![false; arity + 1];
    for &e in entries {
        let e = e as usize;
        if e == 0 || e > arity {
            return false;
        }
        seen[e] = true;
    }
    seen[1..].iter().all(|&s| s)
}

pub(crate) fn fiber_sizes(entries: &[u8], arity: usize) -> Vec<usize> {
    let mut sizes = vec![0; arity];
    for &e in entries {
        sizes[e as usize - 1] += 1;
    }
    sizes
}

/// `τ_f(j)`: the number of `j'` with `f(j') < f(j)`, or `f(j') = f(j)` and
/// `j' <= j`. Returned 1-based, indexed by `j - 1`.
pub fn tau(entries: &[u8]) -> Vec<usize> {
    let max = entries.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max + 2];
    for &e in entries {
        counts[e as usize] += 1;
    }
    // below[v] = number of entries with value < v
    let mut below = vec![0usize; max + 2];
    for v in 1..=max + 1 {
        below[v] = below[v - 1] + counts[v - 1];
    }
    let mut seen = vec![0usize; max + 2];
    entries
        .iter()
        .map(|&e| {
            let e = e as usize;
            seen[e] += 1;
            below[e] + seen[e]
        })
        .collect()
}

/// Complexity of a map from a finite ordered set, given as its sequence of
/// values: the maximum over pairs of values `{i, j}` of the number of maximal
/// constant runs of the restriction to `f⁻¹({i, j})`, minus one. Zero when
/// fewer than two values occur.
pub fn complexity(entries: &[u8]) -> usize {
    let mut values: Vec<u8> = entries.to_vec();
    values.sort_unstable();
    values.dedup();
    let mut best = 0;
    for (a, &i) in values.iter().enumerate() {
        for &j in &values[a + 1..] {
            best = best.max(pair_runs(entries, i, j) - 1);
        }
    }
    best
}

/// Number of maximal constant runs of the restriction to `f⁻¹({i, j})`.
pub(crate) fn pair_runs(entries: &[u8], i: u8, j: u8) -> usize {
    let mut runs = 0;
    let mut last = None;
    for &e in entries {
        if e == i || e == j {
            if last != Some(e) {
                runs += 1;
            }
            last = Some(e);
        }
    }
    runs
}

/// All nondegenerate surjections onto `1..=k` of degree `d`, in lexicographic
/// order, optionally restricted to complexity at most `max_complexity`.
pub fn enumerate_basis(k: usize, d: usize, max_complexity: Option<usize>) -> Vec<Surjection> {
    enumerate_up_to(k, d, max_complexity, usize::MAX)
}

/// Whether [`enumerate_basis`] would return anything, without listing it all.
pub fn basis_is_nonempty(k: usize, d: usize, max_complexity: Option<usize>) -> bool {
    !enumerate_up_to(k, d, max_complexity, 1).is_empty()
}

fn enumerate_up_to(k: usize, d: usize, max_complexity: Option<usize>, limit: usize) -> Vec<Surjection> {
    assert!(k <= MAX_ARITY);
    let len = k + d;
    let mut out = Vec::new();
    if k == 0 {
        if d == 0 {
            out.push(Surjection::identity(0));
        }
        return out;
    }
    if k == 1 {
        if d == 0 {
            out.push(Surjection::identity(1));
        }
        return out;
    }
    let mut state = Enumerator {
        k,
        len,
        bound: max_complexity,
        prefix: Vec::with_capacity(len),
        counts: vec![0; k + 1],
        missing: k,
        // runs[i][j] / last[i][j] for i < j track the restriction to {i, j}
        runs: vec![vec![0; k + 1]; k + 1],
        last: vec![vec![0u8; k + 1]; k + 1],
        limit,
        out: &mut out,
    };
    state.extend();
    out
}

struct Enumerator<'a> {
    k: usize,
    len: usize,
    bound: Option<usize>,
    prefix: Vec<u8>,
    counts: Vec<usize>,
    missing: usize,
    runs: Vec<Vec<usize>>,
    last: Vec<Vec<u8>>,
    limit: usize,
    out: &'a mut Vec<Surjection>,
}

impl Enumerator<'_> {
    fn extend(&mut self) {
        if self.out.len() >= self.limit {
            return;
        }
        if self.prefix.len() == self.len {
            if self.missing == 0 {
                self.out
                    .push(Surjection::from_bytes_unchecked(self.prefix.clone(), self.k));
            }
            return;
        }
        if self.len - self.prefix.len() < self.missing {
            return;
        }
        let prev = self.prefix.last().copied();
        for v in 1..=self.k as u8 {
            if Some(v) == prev {
                continue;
            }
            // Update pair run counts, checking the complexity bound as we go.
            let mut changed = Vec::new();
            let mut ok = true;
            for w in 1..=self.k as u8 {
                if w == v {
                    continue;
                }
                let (a, b) = (v.min(w) as usize, v.max(w) as usize);
                if self.last[a][b] != v {
                    changed.push((a, b, self.last[a][b]));
                    self.runs[a][b] += 1;
                    self.last[a][b] = v;
                    if let Some(n) = self.bound {
                        if self.runs[a][b] > n + 1 {
                            ok = false;
                        }
                    }
                }
            }
            if ok {
                self.prefix.push(v);
                self.counts[v as usize] += 1;
                if self.counts[v as usize] == 1 {
                    self.missing -= 1;
                }
                self.extend();
                if self.counts[v as usize] == 1 {
                    self.missing += 1;
                }
                self.counts[v as usize] -= 1;
                self.prefix.pop();
            }
            for (a, b, old) in changed {
                self.runs[a][b] -= 1;
                self.last[a][b] = old;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn validate_examples() {
        let v = Surjection::validate(&[1, 2, 1, 2], 2).unwrap();
        let s = v.basis().unwrap();
        assert_eq!(s.degree(), 2);
        assert!(Surjection::validate(&[1, 1, 2], 2).unwrap().is_degenerate());
        assert!(Surjection::validate(&[1, 1], 2).unwrap().is_degenerate());
        assert!(Surjection::validate(&[1], 2).unwrap().is_degenerate());
        assert_eq!(
            Surjection::validate(&[1, 3], 2),
            Err(Error::EntryOutOfRange {
                entry: 3,
                position: 2,
                arity: 2
            })
        );
        assert!(Surjection::validate(&[0, 1], 2).is_err());
        assert!(Surjection::validate(&[], 0).unwrap().basis().is_some());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&seq("12312")), vec![1, 3, 5, 2, 4]);
        assert_eq!(tau(&seq("1234")), vec![1, 2, 3, 4]);
        assert_eq!(tau(&seq("21")), vec![2, 1]);
    }

    #[test]
    fn restrict_examples() {
        let f = Surjection::parse(&[1, 2, 3, 1, 2], 3).unwrap();
        assert_eq!(f.restrict(&[2, 3, 4, 5]), seq("2312"));
        let r = f.restrict(&[1, 2, 4, 5]);
        assert_eq!(r, seq("1212"));
        assert!(!is_nondegenerate(&r, 3));
        assert_eq!(f.restrict(&[1, 2, 3, 4, 5]), f.entries());
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity(&seq("12")), 1);
        for i in 0..6 {
            let alt: Vec<u8> = (0..i + 2).map(|j| if j % 2 == 0 { 1 } else { 2 }).collect();
            assert_eq!(complexity(&alt), i + 1);
        }
        assert_eq!(complexity(&seq("1")), 0);
        assert_eq!(complexity(&[]), 0);
        assert_eq!(complexity(&seq("1212")), 3);
        // pairs {1,2}: 1 2 1 2 -> 3; {1,3}: 1 3 1 -> 2; {2,3}: 2 3 2 -> 2
        assert_eq!(complexity(&seq("123212")), 3);
        assert_eq!(complexity(&seq("1231")), 2);
    }

    #[test]
    fn enumerate_examples() {
        let b = enumerate_basis(2, 0, None);
        assert_eq!(
            b.iter().map(|s| s.entries().to_vec()).collect::<Vec<_>>(),
            vec![seq("12"), seq("21")]
        );
        let b = enumerate_basis(2, 1, Some(2));
        assert_eq!(
            b.iter().map(|s| s.entries().to_vec()).collect::<Vec<_>>(),
            vec![seq("121"), seq("212")]
        );
        let b = enumerate_basis(0, 0, None);
        assert_eq!(b.len(), 1);
        assert!(b[0].is_empty());
        assert!(enumerate_basis(0, 1, None).is_empty());
        assert_eq!(enumerate_basis(3, 0, None).len(), 6);
    }

    /// Brute force over all sequences, independent of the pruned enumerator.
    fn brute_basis(k: usize, d: usize, bound: Option<usize>) -> Vec<Vec<u8>> {
        let len = k + d;
        let mut out = Vec::new();
        let total = k.pow(len as u32);
        for code in 0..total {
            let mut c = code;
            let mut s = vec![0u8; len];
            for slot in s.iter_mut().rev() {
                *slot = (c % k) as u8 + 1;
                c /= k;
            }
            if is_nondegenerate(&s, k) && bound.map_or(true, |n| complexity(&s) <= n) {
                out.push(s);
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for k in 1..=4 {
            for d in 0..=(7 - k) {
                for bound in [None, Some(1), Some(2), Some(3)] {
                    let fast: Vec<Vec<u8>> = enumerate_basis(k, d, bound)
                        .into_iter()
                        .map(|s| s.entries().to_vec())
                        .collect();
                    assert_eq!(fast, brute_basis(k, d, bound), "k={k} d={d} n={bound:?}");
                }
            }
        }
    }

    #[test]
    fn serde_shape() {
        let f = Surjection::parse(&[1, 2, 1, 2], 2).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"arity":2,"seq":[1,2,1,2]}"#);
        let back: Surjection = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Surjection>(r#"{"arity":2,"seq":[1,1,2]}"#).is_err());
    }
}
