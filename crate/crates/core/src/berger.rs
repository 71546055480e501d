//! Berger's poset operad and the subcomplexes of the surjection operad it indexes.
//!
//! An element of `I(k)` is a pair `(b, T)`: `b` assigns a nonnegative integer
//! to each 2-element subset of `{1..k}` and `T` is a total order of `{1..k}`,
//! stored as its increasing listing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_basis, Permutation, Surjection};
use crate::error::{Error, Result};
use crate::homology::{complex_from_bases, GradedComplex};
use crate::operad::OperadElement;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetElement {
    k: usize,
    // b({i, j}) for i < j, in lexicographic order of pairs
    b: Vec<usize>,
    // T-increasing listing of 1..=k
    order: Vec<usize>,
    // rank[i - 1] = position of i in the listing
    rank: Vec<usize>,
}

fn pair_index(k: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    // pairs (1,2),...,(1,k),(2,3),... ; rows before i hold Σ_{r<i} (k - r)
    (i - 1) * (2 * k - i) / 2 + (j - i - 1)
}

fn pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=k).flat_map(move |i| (i + 1..=k).map(move |j| (i, j)))
}

#[derive(Serialize, Deserialize)]
struct PairValue {
    pair: [usize; 2],
    val: usize,
}

#[derive(Serialize, Deserialize)]
struct PosetRepr {
    k: usize,
    b: Vec<PairValue>,
    order: Vec<usize>,
}

impl PosetElement {
    /// From `b` listed over pairs `{i, j}`, `i < j`, in lexicographic order,
    /// and the increasing listing of `T`.
    pub fn new(k: usize, b: Vec<usize>, order: Vec<usize>) -> Result<Self> {
        if b.len() != k * k.saturating_sub(1) / 2 {
            return Err(Error::InvalidPosetElement(format!(
                "{} pair values given for arity {k}",
                b.len()
            )));
        }
        if order.len() != k {
            return Err(Error::InvalidPosetElement(format!("order {order:?} does not list 1..={k}")));
        }
        let perm = Permutation::from_images(&order)
            .map_err(|_| Error::InvalidPosetElement(format!("order {order:?} does not list 1..={k}")))?;
        let rank = perm.inverse().images().iter().map(|r| r - 1).collect();
        Ok(PosetElement { k, b, order, rank })
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn b(&self, i: usize, j: usize) -> usize {
        self.b[pair_index(self.k, i, j)]
    }

    pub fn b_values(&self) -> &[usize] {
        &self.b
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Whether `i` precedes `j` in `T`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.rank[i - 1] < self.rank[j - 1]
    }

    /// The first element of `T`.
    pub fn minimum(&self) -> Option<usize> {
        self.order.first().copied()
    }

    /// Membership in `I_n(k)`: every value of `b` is below `n`.
    pub fn in_level(&self, n: usize) -> bool {
        self.b.iter().all(|&v| v < n)
    }

    /// `(a, S) <= (b, T)`: `a <= b` on every pair, strictly on every pair
    /// ordered differently by `S` and `T`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_arity(other.k)?;
        Ok(pairs(self.k).all(|(i, j)| {
            let (a, b) = (self.b(i, j), other.b(i, j));
            if self.precedes(i, j) == other.precedes(i, j) {
                a <= b
            } else {
                a < b
            }
        }))
    }

    fn check_arity(&self, k: usize) -> Result<()> {
        if self.k != k {
            return Err(Error::ArityMismatch {
                expected: self.k,
                found: k,
            });
        }
        Ok(())
    }

    /// `(b, T)ρ = (b ∘ ρ_2, Tρ)`, where `i < j` in `Tρ` iff `ρ(i) < ρ(j)` in `T`.
    pub fn act(&self, rho: &Permutation) -> Result<Self> {
        self.check_arity(rho.len())?;
        let b = pairs(self.k).map(|(i, j)| self.b(rho.apply(i), rho.apply(j))).collect();
        let inv = rho.inverse();
        let order = self.order.iter().map(|&t| inv.apply(t)).collect();
        PosetElement::new(self.k, b, order)
    }

    /// Operad composition: within block `i` the values and order come from
    /// the `i`-th argument; across blocks `i ≠ j` the value is `b({i, j})` and
    /// blocks are ordered among themselves by `T`.
    pub fn compose(&self, inner: &[PosetElement]) -> Result<Self> {
        self.check_arity(inner.len())?;
        let sizes: Vec<usize> = inner.iter().map(|x| x.k).collect();
        let a: usize = sizes.iter().sum();
        let mut block = Vec::with_capacity(a);
        let mut local = Vec::with_capacity(a);
        let mut offsets = Vec::with_capacity(self.k);
        for (i, &size) in sizes.iter().enumerate() {
            offsets.push(block.len());
            for r in 1..=size {
                block.push(i + 1);
                local.push(r);
            }
        }
        let b = pairs(a)
            .map(|(r, s)| {
                let (i, j) = (block[r - 1], block[s - 1]);
                if i == j {
                    inner[i - 1].b(local[r - 1], local[s - 1])
                } else {
                    self.b(i, j)
                }
            })
            .collect();
        let offsets = &offsets;
        let order = self
            .order
            .iter()
            .flat_map(|&i| inner[i - 1].order.iter().map(move |&t| offsets[i - 1] + t))
            .collect();
        PosetElement::new(a, b, order)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let repr: PosetRepr = serde_json::from_value(value.clone())
            .map_err(|e| Error::Malformed(format!("poset element: {e}")))?;
        let k = repr.k;
        let mut b = vec![None; k * k.saturating_sub(1) / 2];
        for pv in &repr.b {
            let [i, j] = pv.pair;
            if i == j || i == 0 || j == 0 || i > k || j > k {
                return Err(Error::InvalidPosetElement(format!("pair {:?} is not in 1..={k}", pv.pair)));
            }
            let slot = &mut b[pair_index(k, i, j)];
            if slot.is_some() {
                return Err(Error::InvalidPosetElement(format!("pair {:?} given twice", pv.pair)));
            }
            *slot = Some(pv.val);
        }
        let b = b
            .into_iter()
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::InvalidPosetElement("b must be given on every pair".into()))?;
        PosetElement::new(k, b, repr.order)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let repr = PosetRepr {
            k: self.k,
            b: pairs(self.k)
                .map(|(i, j)| PairValue {
                    pair: [i, j],
                    val: self.b(i, j),
                })
                .collect(),
            order: self.order.clone(),
        };
        serde_json::to_value(repr).expect("serializable")
    }
}

impl fmt::Debug for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b={:?}, T={:?})", self.b, self.order)
    }
}

/// `(b_f, T_f)`: `b_f({i, j})` is one less than the complexity of `f`
/// restricted to `f⁻¹({i, j})`, and `i < j` in `T_f` when the first
/// occurrence of `i` precedes that of `j`.
pub fn bt_of(f: &Surjection) -> PosetElement {
    let k = f.arity();
    let entries = f.entries();
    let b = pairs(k)
        .map(|(i, j)| {
            let restricted: Vec<u8> = entries
                .iter()
                .copied()
                .filter(|&e| e as usize == i || e as usize == j)
                .collect();
            crate::combinatorics::complexity(&restricted).saturating_sub(1)
        })
        .collect();
    let mut order = Vec::with_capacity(k);
    for &e in entries {
        if !order.contains(&(e as usize)) {
            order.push(e as usize);
        }
    }
    PosetElement::new(k, b, order).expect("a surjection determines a valid pair")
}

/// All of `I_n(k)`: every `b` with values below `n` and every total order.
pub fn enumerate_level(k: usize, n: usize) -> Vec<PosetElement> {
    let npairs = k * k.saturating_sub(1) / 2;
    let orders = Permutation::all(k);
    let mut out = Vec::new();
    if n == 0 && npairs > 0 {
        return out;
    }
    let mut b = vec![0usize; npairs];
    loop {
        for o in &orders {
            out.push(PosetElement::new(k, b.clone(), o.images()).expect("valid"));
        }
        // odometer in base n
        let mut pos = npairs;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            b[pos] += 1;
            if b[pos] < n {
                break;
            }
            b[pos] = 0;
        }
    }
}

/// The basis of `S(b, T)` in degree `d`: the nondegenerate `f` with `(b_f, T_f) <= (b, T)`.
pub fn subcomplex_degree_basis(x: &PosetElement, d: usize) -> Vec<Surjection> {
    // b_f <= b bounds the complexity by max b + 1
    let bound = x.b.iter().copied().max().map_or(1, |m| m + 1);
    enumerate_basis(x.k, d, Some(bound))
        .into_iter()
        .filter(|f| bt_of(f).leq(x).expect("same arity"))
        .collect()
}

/// `S(b, T)` in degrees `0..=max_degree`, checked to be closed under the differential.
pub fn subcomplex(x: &PosetElement, max_degree: usize) -> Result<GradedComplex> {
    let bases = (0..=max_degree).map(|d| subcomplex_degree_basis(x, d)).collect();
    let truncated = !subcomplex_degree_basis(x, max_degree + 1).is_empty();
    complex_from_bases(bases, truncated)
}

/// `s_i`: the homotopy `s` conjugated by the transposition `ρ_i = (1 i)`,
/// `e ↦ (s(eρ_i))ρ_i`; it prepends `i` instead of `1`.
pub fn s_i_homotopy(e: &OperadElement, i: usize) -> Result<OperadElement> {
    let rho = transposition_one(e.arity(), i)?;
    e.act(&rho)?.benson_homotopy().act(&rho)
}

/// The retraction `P_i = id - (∂s_i + s_i∂)`, conjugate of
/// [`OperadElement::benson_projection`].
pub fn s_i_projection(e: &OperadElement, i: usize) -> Result<OperadElement> {
    let rho = transposition_one(e.arity(), i)?;
    e.act(&rho)?.benson_projection().act(&rho)
}

fn transposition_one(k: usize, i: usize) -> Result<Permutation> {
    if i == 0 || i > k {
        return Err(Error::PositionOutOfRange { position: i, len: k });
    }
    Ok(Permutation::transposition(k, 1, i))
}
