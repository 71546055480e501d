use std::ops::RangeInclusive;

use crate::error::{Error, Result};

use super::surjection::{tau, Surjection};

/// An overlapping partition of the interval `{first..=last}` into `m`
/// consecutive pieces, adjacent pieces sharing exactly one element.
///
/// Stored by its `m - 1` overlap points, which determine it completely.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverlappingPartition {
    first: usize,
    last: usize,
    overlaps: Vec<usize>,
}

impl OverlappingPartition {
    /// From overlap points, which must be weakly increasing inside the ground set.
    pub fn from_overlaps(first: usize, last: usize, overlaps: Vec<usize>) -> Result<Self> {
        if first > last {
            return Err(Error::InvalidPartition("empty ground set".into()));
        }
        if overlaps.iter().any(|&o| o < first || o > last) {
            return Err(Error::InvalidPartition(format!(
                "overlap points {overlaps:?} leave {first}..={last}"
            )));
        }
        if overlaps.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "overlap points {overlaps:?} are not weakly increasing"
            )));
        }
        Ok(OverlappingPartition {
            first,
            last,
            overlaps,
        })
    }

    /// From explicit pieces, checking the defining conditions: each piece a
    /// nonempty interval, pieces ordered, consecutive pieces meeting in one
    /// point, and the union the whole ground set.
    pub fn from_pieces(first: usize, last: usize, pieces: &[Vec<usize>]) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidPartition("no pieces".into()));
        }
        for piece in pieces {
            let ok = !piece.is_empty() && piece.windows(2).all(|w| w[1] == w[0] + 1);
            if !ok {
                return Err(Error::InvalidPartition(format!(
                    "piece {piece:?} is not a nonempty interval"
                )));
            }
        }
        if pieces[0][0] != first || *pieces.last().unwrap().last().unwrap() != last {
            return Err(Error::InvalidPartition("pieces do not cover the ground set".into()));
        }
        let mut overlaps = Vec::with_capacity(pieces.len() - 1);
        for w in pieces.windows(2) {
            let end = *w[0].last().unwrap();
            if w[1][0] != end {
                return Err(Error::InvalidPartition(format!(
                    "pieces {:?} and {:?} do not share exactly one point",
                    w[0], w[1]
                )));
            }
            overlaps.push(end);
        }
        Self::from_overlaps(first, last, overlaps)
    }

    pub fn ground(&self) -> RangeInclusive<usize> {
        self.first..=self.last
    }

    pub fn piece_count(&self) -> usize {
        self.overlaps.len() + 1
    }

    pub fn overlaps(&self) -> &[usize] {
        &self.overlaps
    }

    /// The `j`-th piece, 1-based.
    pub fn piece(&self, j: usize) -> RangeInclusive<usize> {
        let start = if j == 1 { self.first } else { self.overlaps[j - 2] };
        let end = if j == self.piece_count() {
            self.last
        } else {
            self.overlaps[j - 1]
        };
        start..=end
    }

    pub fn pieces(&self) -> Vec<RangeInclusive<usize>> {
        (1..=self.piece_count()).map(|j| self.piece(j)).collect()
    }

    /// `‖A_j‖ = |A_j| - 1` for each piece.
    pub fn norms(&self) -> Vec<usize> {
        self.pieces().into_iter().map(|p| p.end() - p.start()).collect()
    }

    /// Sign `(-1)^ε(f, 𝒜)` used by the coaction.
    pub fn epsilon_sign(&self, f: &Surjection) -> Result<i32> {
        if f.len() != self.piece_count() {
            return Err(Error::PieceCountMismatch {
                pieces: self.piece_count(),
                entries: f.len(),
            });
        }
        Ok(parity_sign(epsilon_parity(f.entries(), &self.norms())))
    }
}

/// All overlapping partitions of `{first..=last}` with `m` pieces, in
/// lexicographic order of overlap points. There are `C(|T| + m - 2, m - 1)`.
pub fn enumerate_partitions(
    first: usize,
    last: usize,
    m: usize,
) -> Result<Vec<OverlappingPartition>> {
    if m == 0 {
        return Err(Error::InvalidPartition("a partition needs at least one piece".into()));
    }
    if first > last {
        return Err(Error::InvalidPartition("empty ground set".into()));
    }
    let mut out = Vec::new();
    for_each_overlap_tuple(first, last, m - 1, |overlaps| {
        out.push(OverlappingPartition {
            first,
            last,
            overlaps: overlaps.to_vec(),
        })
    });
    Ok(out)
}

/// Visits every weakly increasing tuple of `len` points in `first..=last`.
pub(crate) fn for_each_overlap_tuple(
    first: usize,
    last: usize,
    len: usize,
    mut visit: impl FnMut(&[usize]),
) {
    fn rec(
        lo: usize,
        last: usize,
        len: usize,
        buf: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if buf.len() == len {
            visit(buf);
            return;
        }
        for o in lo..=last {
            buf.push(o);
            rec(o, last, len, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(len);
    rec(first, last, len, &mut buf, &mut visit);
}

/// Parity of `ε(f, 𝒜)` from the piece norms `‖A_j‖`:
/// `Σ_{j<j', f(j)>f(j')} ‖A_j‖‖A_j'‖ + Σ_j ‖A_j‖(τ_f(j) - f(j))`.
pub(crate) fn epsilon_parity(f: &[u8], norms: &[usize]) -> usize {
    debug_assert_eq!(f.len(), norms.len());
    let t = tau(f);
    let mut total = 0usize;
    for j in 0..f.len() {
        if norms[j] % 2 == 0 {
            continue;
        }
        for j2 in j + 1..f.len() {
            if f[j] > f[j2] {
                total += norms[j2];
            }
        }
        total += (t[j] as i64 - f[j] as i64).rem_euclid(2) as usize;
    }
    total % 2
}

pub(crate) fn parity_sign(parity: usize) -> i32 {
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}
