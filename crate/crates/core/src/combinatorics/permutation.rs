use std::fmt;

use crate::error::{Error, Result};

use super::surjection::Surjection;

/// A permutation of `{1..k}`.
///
/// Composition follows maps: `rho.compose(&sigma)` is `rho ∘ sigma`, applying
/// `sigma` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = rho(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    /// From the 1-based image list `[rho(1), ..., rho(k)]`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in images {
            if i == 0 || i > k || seen[i - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i - 1).collect(),
        })
    }

    pub fn identity(k: usize) -> Permutation {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// The transposition exchanging `a` and `b` (1-based); identity if equal.
    pub fn transposition(k: usize, a: usize, b: usize) -> Permutation {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `rho(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// All permutations of `{1..k}` in lexicographic order of image lists.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

/// Parity of `ζ(f, ρ) = Σ ‖f⁻¹(i)‖‖f⁻¹(i')‖` over pairs `i < i'` with
/// `ρ⁻¹(i) > ρ⁻¹(i')`.
pub fn zeta_parity(f: &Surjection, rho: &Permutation) -> usize {
    let norms: Vec<usize> = f.fiber_sizes().iter().map(|&n| n - 1).collect();
    let inv = rho.inverse();
    let k = f.arity();
    let mut total = 0;
    for i in 1..=k {
        for i2 in i + 1..=k {
            if inv.apply(i) > inv.apply(i2) {
                total += norms[i - 1] * norms[i2 - 1];
            }
        }
    }
    total % 2
}

pub fn zeta_sign(f: &Surjection, rho: &Permutation) -> Result<i32> {
    if f.arity() != rho.len() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: rho.len(),
        });
    }
    Ok(if zeta_parity(f, rho) == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_laws() {
        for k in 0..=4 {
            let all = Permutation::all(k);
            assert_eq!(all.len(), (1..=k).product::<usize>());
            for p in &all {
                assert!(p.compose(&p.inverse()).is_identity());
                for q in &all {
                    let pq = p.compose(q);
                    for i in 1..=k {
                        assert_eq!(pq.apply(i), p.apply(q.apply(i)));
                    }
                }
            }
        }
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
    }

    #[test]
    fn zeta_examples() {
        let f = Surjection::parse(&[1, 2, 1, 2], 2).unwrap();
        assert_eq!(zeta_sign(&f, &Permutation::identity(2)).unwrap(), 1);
        let swap = Permutation::transposition(2, 1, 2);
        assert_eq!(zeta_sign(&Surjection::identity(2), &swap).unwrap(), 1);
        assert_eq!(zeta_sign(&f, &swap).unwrap(), -1);
        assert!(zeta_sign(&f, &Permutation::identity(3)).is_err());
    }
}
