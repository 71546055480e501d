//! Normalized Hochschild cochains of a ring that is free of finite rank over
//! the integers, and the action of the complexity-2 suboperad on them.
//!
//! The ring basis has the unit as element `0`. A normalized `p`-cochain then
//! vanishes whenever an argument is the unit, so it is stored only on
//! `p`-tuples of indices in `1..rank`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{epsilon_parity, for_each_overlap_tuple, Permutation, Surjection};
use crate::error::{Error, Result};
use crate::operad::OperadElement;

/// A ring element by its coordinates in the basis.
pub type RingElement = Vec<BigInt>;

/// An associative unital ring with a finite `Z`-basis whose first element is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    rank: usize,
    names: Vec<String>,
    // table[a][b] = coordinates of e_a e_b
    table: Vec<Vec<RingElement>>,
}

#[derive(Serialize, Deserialize)]
struct RingRepr {
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    unit: Vec<i64>,
    table: Vec<Vec<Vec<i64>>>,
}

impl FiniteRing {
    /// Validates the table: correct shape, `e_0` a two-sided unit, associativity on basis triples.
    pub fn new(names: Vec<String>, table: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let rank = names.len();
        if rank == 0 {
            return Err(Error::InvalidRing("rank must be positive".into()));
        }
        let shaped = table.len() == rank
            && table
                .iter()
                .all(|row| row.len() == rank && row.iter().all(|v| v.len() == rank));
        if !shaped {
            return Err(Error::InvalidRing(format!("table must be {rank}x{rank}x{rank}")));
        }
        let table: Vec<Vec<RingElement>> = table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.into_iter().map(BigInt::from).collect())
                    .collect()
            })
            .collect();
        let ring = FiniteRing { rank, names, table };
        for a in 0..rank {
            let e = ring.basis(a);
            if ring.table[0][a] != e || ring.table[a][0] != e {
                return Err(Error::InvalidRing(format!(
                    "basis element 0 is not a two-sided unit (fails against {})",
                    ring.names[a]
                )));
            }
        }
        for a in 0..rank {
            for b in 0..rank {
                for c in 0..rank {
                    let left = ring.mul(&ring.table[a][b], &ring.basis(c));
                    let right = ring.mul(&ring.basis(a), &ring.table[b][c]);
                    if left != right {
                        return Err(Error::InvalidRing(format!(
                            "not associative on ({}, {}, {})",
                            ring.names[a], ring.names[b], ring.names[c]
                        )));
                    }
                }
            }
        }
        Ok(ring)
    }

    /// `Z[x]/(x^2)` with basis `1, x`.
    pub fn dual_numbers() -> Self {
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
        FiniteRing::new(vec!["1".into(), "x".into()], table).expect("valid")
    }

    /// Upper triangular 2x2 integer matrices with basis `1, E12, E22`.
    pub fn upper_triangular() -> Self {
        // E12 E22 = E12, E22 E12 = 0, E22 E22 = E22, E12 E12 = 0
        let table = vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 1, 0]],
            vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 1]],
        ];
        FiniteRing::new(vec!["1".into(), "E12".into(), "E22".into()], table).expect("valid")
    }

    /// The group ring `Z[C_2]` with basis `1, g`.
    pub fn group_ring_c2() -> Self {
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
        FiniteRing::new(vec!["1".into(), "g".into()], table).expect("valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis(&self, a: usize) -> RingElement {
        let mut v = vec![BigInt::zero(); self.rank];
        v[a] = BigInt::one();
        v
    }

    pub fn zero(&self) -> RingElement {
        vec![BigInt::zero(); self.rank]
    }

    pub fn one(&self) -> RingElement {
        self.basis(0)
    }

    pub fn mul(&self, x: &[BigInt], y: &[BigInt]) -> RingElement {
        let mut out = self.zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (o, t) in out.iter_mut().zip(&self.table[a][b]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let repr: RingRepr =
            serde_json::from_value(value.clone()).map_err(|e| Error::Malformed(format!("ring: {e}")))?;
        if repr.table.len() != repr.rank {
            return Err(Error::InvalidRing(format!("table must have {} rows", repr.rank)));
        }
        let mut unit = vec![0i64; repr.rank];
        if repr.rank > 0 {
            unit[0] = 1;
        }
        if repr.unit != unit {
            return Err(Error::InvalidRing(
                "the unit must be the first basis vector [1, 0, ...]".into(),
            ));
        }
        let names = repr
            .names
            .unwrap_or_else(|| (0..repr.rank).map(|a| format!("e{a}")).collect());
        if names.len() != repr.rank {
            return Err(Error::InvalidRing(format!("{} names for rank {}", names.len(), repr.rank)));
        }
        FiniteRing::new(names, repr.table)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut unit = vec![0i64; self.rank];
        unit[0] = 1;
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|c| i64::try_from(c).expect("table entries fit")).collect())
                    .collect()
            })
            .collect();
        serde_json::to_value(RingRepr {
            rank: self.rank,
            names: Some(self.names.clone()),
            unit,
            table,
        })
        .expect("serializable")
    }
}

/// A normalized Hochschild `p`-cochain.
#[derive(Clone, PartialEq, Eq)]
pub struct HochschildCochain {
    degree: usize,
    rank: usize,
    // values on tuples (a_1, ..., a_p) with a_i in 1..rank, first slot most significant
    values: Vec<RingElement>,
}

#[derive(Serialize, Deserialize)]
struct CochainEntry {
    args: Vec<usize>,
    #[serde(with = "crate::json::int_vec")]
    value: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct CochainRepr {
    degree: usize,
    values: Vec<CochainEntry>,
}

fn tuple_count(rank: usize, p: usize) -> usize {
    (rank - 1).pow(p as u32)
}

fn tuple_of(rank: usize, p: usize, mut index: usize) -> Vec<usize> {
    let base = rank - 1;
    let mut out = vec![0; p];
    for slot in out.iter_mut().rev() {
        *slot = index % base + 1;
        index /= base;
    }
    out
}

fn index_of(rank: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &a| acc * (rank - 1) + (a - 1))
}

impl HochschildCochain {
    pub fn zero(ring: &FiniteRing, degree: usize) -> Self {
        HochschildCochain {
            degree,
            rank: ring.rank,
            values: vec![ring.zero(); tuple_count(ring.rank, degree)],
        }
    }

    /// The cochain with the given values on non-unit basis tuples.
    pub fn from_fn(ring: &FiniteRing, degree: usize, mut value: impl FnMut(&[usize]) -> RingElement) -> Self {
        let values = (0..tuple_count(ring.rank, degree))
            .map(|i| {
                let v = value(&tuple_of(ring.rank, degree, i));
                assert_eq!(v.len(), ring.rank, "ring element of the wrong rank");
                v
            })
            .collect();
        HochschildCochain {
            degree,
            rank: ring.rank,
            values,
        }
    }

    /// The 0-cochain with value `r`.
    pub fn constant(ring: &FiniteRing, r: RingElement) -> Self {
        HochschildCochain::from_fn(ring, 0, |_| r.clone())
    }

    /// Uniformly random entries in `-bound..=bound`.
    pub fn random(ring: &FiniteRing, degree: usize, bound: i64, rng: &mut impl rand::Rng) -> Self {
        HochschildCochain::from_fn(ring, degree, |_| {
            (0..ring.rank).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// The value on basis elements; zero when any argument is the unit.
    pub fn value(&self, args: &[usize]) -> RingElement {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        if args.contains(&0) {
            return vec![BigInt::zero(); self.rank];
        }
        self.values[index_of(self.rank, args)].clone()
    }

    /// The multilinear extension to arbitrary ring elements.
    pub fn apply(&self, args: &[RingElement]) -> RingElement {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut out = vec![BigInt::zero(); self.rank];
        'tuple: for (i, v) in self.values.iter().enumerate() {
            let tuple = tuple_of(self.rank, self.degree, i);
            let mut c = BigInt::one();
            for (a, arg) in tuple.iter().zip(args) {
                if arg[*a].is_zero() {
                    continue 'tuple;
                }
                c *= &arg[*a];
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o += &c * x;
            }
        }
        out
    }

    fn check_ring(&self, ring: &FiniteRing) -> Result<()> {
        if self.rank != ring.rank {
            return Err(Error::InvalidRing(format!(
                "cochain over a ring of rank {}, given rank {}",
                self.rank, ring.rank
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(HochschildCochain {
            values,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| v.iter().map(|x| x * c).collect())
            .collect();
        HochschildCochain {
            values,
            ..self.clone()
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::InvalidRing("cochains over different rings".into()));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn from_json(ring: &FiniteRing, value: &serde_json::Value) -> Result<Self> {
        let repr: CochainRepr =
            serde_json::from_value(value.clone()).map_err(|e| Error::Malformed(format!("cochain: {e}")))?;
        let mut out = HochschildCochain::zero(ring, repr.degree);
        for entry in repr.values {
            if entry.args.len() != repr.degree {
                return Err(Error::Malformed(format!(
                    "arguments {:?} for a cochain of degree {}",
                    entry.args, repr.degree
                )));
            }
            if entry.value.len() != ring.rank {
                return Err(Error::Malformed(format!("value {:?} has the wrong rank", entry.value)));
            }
            if let Some(&a) = entry.args.iter().find(|&&a| a >= ring.rank) {
                return Err(Error::Malformed(format!("basis index {a} is out of range")));
            }
            if entry.args.contains(&0) {
                if entry.value.iter().all(Zero::is_zero) {
                    continue;
                }
                return Err(Error::Integrity(format!(
                    "cochain is not normalized: nonzero on {:?}, which contains the unit",
                    entry.args
                )));
            }
            let slot = &mut out.values[index_of(ring.rank, &entry.args)];
            for (o, v) in slot.iter_mut().zip(entry.value) {
                *o += v;
            }
        }
        Ok(out)
    }

    /// Nonzero values only, in lexicographic order of arguments.
    pub fn to_json(&self) -> serde_json::Value {
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .map(|(i, v)| CochainEntry {
                args: tuple_of(self.rank, self.degree, i),
                value: v.clone(),
            })
            .collect();
        serde_json::to_value(CochainRepr {
            degree: self.degree,
            values,
        })
        .expect("serializable")
    }
}

impl fmt::Debug for HochschildCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{}", self.degree)?;
        let mut map = BTreeMap::new();
        for (i, v) in self.values.iter().enumerate() {
            if v.iter().any(|x| !x.is_zero()) {
                map.insert(tuple_of(self.rank, self.degree, i), v.clone());
            }
        }
        write!(f, "{map:?}")
    }
}

/// The Hochschild coboundary
/// `(∂x)(r_1..r_{p+1}) = r_1 x(r_2..) + Σ_{i=1}^{p} (-1)^i x(.., r_i r_{i+1}, ..) + (-1)^{p+1} x(..r_p) r_{p+1}`.
pub fn hochschild_d(ring: &FiniteRing, x: &HochschildCochain) -> Result<HochschildCochain> {
    x.check_ring(ring)?;
    let p = x.degree;
    Ok(HochschildCochain::from_fn(ring, p + 1, |args| {
        let r: Vec<RingElement> = args.iter().map(|&a| ring.basis(a)).collect();
        let mut out = ring.mul(&r[0], &x.value(&args[1..]));
        for i in 1..=p {
            let mut merged: Vec<RingElement> = r[..i - 1].to_vec();
            merged.push(ring.mul(&r[i - 1], &r[i]));
            merged.extend_from_slice(&r[i + 1..]);
            let term = x.apply(&merged);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for (o, t) in out.iter_mut().zip(term) {
                *o += t * sign;
            }
        }
        let last = ring.mul(&x.value(&args[..p]), &r[p]);
        let sign = if (p + 1) % 2 == 0 { 1 } else { -1 };
        for (o, t) in out.iter_mut().zip(last) {
            *o += t * sign;
        }
        out
    }))
}

/// `(x ⌣ y)(r_1..r_{p+q}) = x(r_1..r_p) · y(r_{p+1}..r_{p+q})`.
pub fn cup(ring: &FiniteRing, x: &HochschildCochain, y: &HochschildCochain) -> Result<HochschildCochain> {
    x.check_ring(ring)?;
    y.check_ring(ring)?;
    let p = x.degree;
    Ok(HochschildCochain::from_fn(ring, p + y.degree, |args| {
        ring.mul(&x.value(&args[..p]), &y.value(&args[p..]))
    }))
}

/// The substitution `x(x_1, ..., x_k)`: `x` applied to the values of the
/// `x_i` on consecutive blocks of arguments. Requires `|x| = k`.
pub fn brace(ring: &FiniteRing, x: &HochschildCochain, xs: &[HochschildCochain]) -> Result<HochschildCochain> {
    x.check_ring(ring)?;
    if xs.len() != x.degree {
        return Err(Error::ArityMismatch {
            expected: x.degree,
            found: xs.len(),
        });
    }
    for c in xs {
        c.check_ring(ring)?;
    }
    let children = (1..=xs.len()).map(|l| Node::Brace(l, Vec::new())).collect();
    let mut inputs: Vec<&HochschildCochain> = vec![x];
    inputs.extend(xs);
    Ok(Node::Brace(0, children).table(ring, &inputs))
}

/// The cochain built from a labeled tree: `Identity` is the identity
/// 1-cochain, `Cup` multiplies the values of its children on consecutive
/// argument blocks, and `Brace(i, children)` feeds the children into input
/// `i`, or is input `i` itself when there are no children.
#[derive(Clone, Debug)]
enum Node {
    Identity,
    Cup(Vec<Node>),
    Brace(usize, Vec<Node>),
}

impl Node {

    fn degree(&self, inputs: &[&HochschildCochain]) -> usize {
        match self {
            Node::Identity => 1,
            Node::Cup(children) => children.iter().map(|c| c.degree(inputs)).sum(),
            Node::Brace(i, children) => {
                if children.is_empty() {
                    inputs[*i].degree
                } else {
                    children.iter().map(|c| c.degree(inputs)).sum()
                }
            }
        }
    }

    fn eval(&self, ring: &FiniteRing, inputs: &[&HochschildCochain], args: &[usize]) -> RingElement {
        match self {
            Node::Identity => ring.basis(args[0]),
            Node::Cup(children) => {
                let mut out = ring.one();
                let mut start = 0;
                for c in children {
                    let d = c.degree(inputs);
                    out = ring.mul(&out, &c.eval(ring, inputs, &args[start..start + d]));
                    start += d;
                }
                out
            }
            Node::Brace(i, children) => {
                let x = inputs[*i];
                if children.is_empty() {
                    return x.value(args);
                }
                let mut start = 0;
                let mut vals = Vec::with_capacity(children.len());
                for c in children {
                    let d = c.degree(inputs);
                    vals.push(c.eval(ring, inputs, &args[start..start + d]));
                    start += d;
                }
                x.apply(&vals)
            }
        }
    }

    fn table(&self, ring: &FiniteRing, inputs: &[&HochschildCochain]) -> HochschildCochain {
        let d = self.degree(inputs);
        HochschildCochain::from_fn(ring, d, |args| self.eval(ring, inputs, args))
    }
}

/// The tree of `g(x)` for a map `g` of complexity at most 2, by the
/// recursive clauses: empty gives the identity cochain, a single point `t`
/// gives `x_{g(t)}`, several maximal segments give the cup product of the
/// restrictions, and a single segment with end value `i` gives `x_i`
/// applied to the restrictions to the gaps between consecutive occurrences of `i`.
fn g_tree(g: &[u8]) -> Result<Node> {
    if g.is_empty() {
        return Ok(Node::Identity);
    }
    if g.len() == 1 {
        return Ok(Node::Brace(g[0] as usize, Vec::new()));
    }
    let segments = maximal_segments(g)?;
    if segments.len() > 1 {
        let children = segments
            .into_iter()
            .map(|(s, e)| g_tree(&g[s..e]))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Node::Cup(children));
    }
    let i = g[0];
    let hits: Vec<usize> = (0..g.len()).filter(|&t| g[t] == i).collect();
    let children = hits
        .windows(2)
        .map(|w| g_tree(&g[w[0] + 1..w[1]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Node::Brace(i as usize, children))
}

/// The maximal segments as half-open intervals, erroring when they overlap.
fn maximal_segments(g: &[u8]) -> Result<Vec<(usize, usize)>> {
    let mut last = BTreeMap::new();
    for (t, &v) in g.iter().enumerate() {
        last.insert(v, t);
    }
    let mut out = Vec::new();
    let mut start = 0;
    while start < g.len() {
        let mut end = last[&g[start]];
        let mut t = start;
        while t <= end {
            end = end.max(last[&g[t]]);
            t += 1;
        }
        if g[end] != g[start] {
            return Err(Error::ComplexityTooHigh {
                found: crate::combinatorics::complexity(g),
                bound: 2,
            });
        }
        out.push((start, end + 1));
        start = end + 1;
    }
    Ok(out)
}

/// `g(x)` for `g: {1..q} -> {1..k}` of complexity at most 2 with
/// `|g⁻¹(i)| = |x_i| + 1` for every `i`.
pub fn eval_g(ring: &FiniteRing, g: &[usize], xs: &[HochschildCochain]) -> Result<HochschildCochain> {
    let k = xs.len();
    for x in xs {
        x.check_ring(ring)?;
    }
    let mut counts = vec![0usize; k];
    let mut entries = Vec::with_capacity(g.len());
    for (t, &v) in g.iter().enumerate() {
        if v == 0 || v > k {
            return Err(Error::EntryOutOfRange {
                entry: v,
                position: t + 1,
                arity: k,
            });
        }
        counts[v - 1] += 1;
        entries.push(v as u8);
    }
    for (i, (&c, x)) in counts.iter().zip(xs).enumerate() {
        if c != x.degree + 1 {
            return Err(Error::FiberSizeMismatch {
                value: i + 1,
                expected: x.degree + 1,
                found: c,
            });
        }
    }
    let found = crate::combinatorics::complexity(&entries);
    if found > 2 {
        return Err(Error::ComplexityTooHigh { found, bound: 2 });
    }
    let tree = g_tree(&entries)?;
    Ok(tree.table(ring, &padded(xs)))
}

// tree inputs are indexed from 1; slot 0 is never read
fn padded(xs: &[HochschildCochain]) -> Vec<&HochschildCochain> {
    let mut v: Vec<&HochschildCochain> = Vec::with_capacity(xs.len() + 1);
    if let Some(first) = xs.first() {
        v.push(first);
    }
    v.extend(xs);
    v
}

/// The sign attached to each special diagram in [`theta_signed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignRule {
    /// `ε(f,𝒜) + Σ_{i<j} |x_i||x_j|`. With this sign `θ` is compatible with
    /// composition, the symmetric action, and the differential
    /// [`differential`] on inputs of positive degree.
    Koszul,
    /// The printed `ε'(f,𝒜) = ε(f,𝒜) + (m-k)Σ|x_i| + |{(j,j') : f(j) = f(j')}|`,
    /// with the pairs counted as chosen. Kept for comparison; it is not a
    /// chain map for either reading of the pair set.
    Printed(PairSet),
}

/// Which pairs `(j, j')` the printed sign counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSet {
    /// `j < j'`.
    Increasing,
    /// All ordered pairs, `j = j'` included.
    Ordered,
}

/// The differential under which `θ` is a chain map: `(-1)^p` times the
/// Hochschild coboundary on `C^p`.
pub fn differential(ring: &FiniteRing, x: &HochschildCochain) -> Result<HochschildCochain> {
    let d = hochschild_d(ring, x)?;
    Ok(if x.degree % 2 == 1 { d.neg() } else { d })
}

/// `θ(f; x_1, ..., x_k)` with the [`SignRule::Koszul`] sign.
pub fn theta(ring: &FiniteRing, f: &Surjection, xs: &[HochschildCochain]) -> Result<HochschildCochain> {
    theta_signed(ring, f, xs, SignRule::Koszul)
}

/// `θ(f; x_1, ..., x_k) = Σ_E ± (f∘β)(x)` for nondegenerate `f` of
/// complexity at most 2. The special diagrams `E` correspond to
/// overlapping partitions `𝒜` of `{0..N}`, `N = Σ|x_i| + k - m`, into `m`
/// pieces whose union over each fiber of `f` has no repeated point and
/// `|x_i| + 1` points; `f∘β` repeats `f(j)` once per point of `A_j`.
pub fn theta_signed(
    ring: &FiniteRing,
    f: &Surjection,
    xs: &[HochschildCochain],
    rule: SignRule,
) -> Result<HochschildCochain> {
    let k = f.arity();
    if xs.len() != k {
        return Err(Error::ArityMismatch {
            expected: k,
            found: xs.len(),
        });
    }
    for x in xs {
        x.check_ring(ring)?;
    }
    let c = f.complexity();
    if c > 2 {
        return Err(Error::ComplexityTooHigh { found: c, bound: 2 });
    }
    let m = f.len();
    let total: usize = xs.iter().map(|x| x.degree).sum();
    let Some(n) = (total + k).checked_sub(m) else {
        return Ok(HochschildCochain::zero(ring, 0));
    };
    let mut out = HochschildCochain::zero(ring, n);
    if m == 0 {
        return Ok(out);
    }
    let entries = f.entries();
    let inputs = padded(xs);
    let base_parity = match rule {
        SignRule::Koszul => {
            let mut before = 0;
            let mut parity = 0;
            for x in xs {
                parity += before * x.degree;
                before += x.degree;
            }
            parity
        }
        SignRule::Printed(pairs) => {
            let count = match pairs {
                PairSet::Increasing => (0..m)
                    .map(|j| (j + 1..m).filter(|&j2| entries[j] == entries[j2]).count())
                    .sum(),
                // each unordered pair twice, plus the diagonal
                PairSet::Ordered => m,
            };
            (m - k) * total + count
        }
    };
    let mut failure = None;
    for_each_overlap_tuple(0, n, m - 1, |overlaps| {
        if failure.is_some() {
            return;
        }
        let mut used = vec![0u64; k];
        let mut sizes = vec![0usize; k];
        let mut norms = vec![0usize; m];
        let mut g = Vec::with_capacity(total + k);
        let mut start = 0;
        for j in 0..m {
            let end = if j + 1 == m { n } else { overlaps[j] };
            let value = entries[j] as usize - 1;
            for point in start..=end {
                if used[value] >> point & 1 == 1 {
                    return;
                }
                used[value] |= 1 << point;
            }
            sizes[value] += end - start + 1;
            norms[j] = end - start;
            g.extend(std::iter::repeat_n(entries[j], end - start + 1));
            start = end;
        }
        if sizes.iter().zip(xs).any(|(&s, x)| s != x.degree + 1) {
            return;
        }
        let parity = base_parity + epsilon_parity(entries, &norms);
        match g_tree(&g) {
            Ok(tree) => {
                let term = tree.table(ring, &inputs);
                let term = if parity % 2 == 1 { term.neg() } else { term };
                out = out.add(&term).expect("same shape");
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Linear extension of [`theta`] to an element of the complexity-2 suboperad.
pub fn theta_element(ring: &FiniteRing, e: &OperadElement, xs: &[HochschildCochain]) -> Result<HochschildCochain> {
    theta_element_signed(ring, e, xs, SignRule::Koszul)
}

pub fn theta_element_signed(
    ring: &FiniteRing,
    e: &OperadElement,
    xs: &[HochschildCochain],
    rule: SignRule,
) -> Result<HochschildCochain> {
    if xs.len() != e.arity() {
        return Err(Error::ArityMismatch {
            expected: e.arity(),
            found: xs.len(),
        });
    }
    let total: usize = xs.iter().map(|x| x.degree).sum();
    let n = total.saturating_sub(e.degree());
    let mut out = HochschildCochain::zero(ring, n);
    for (f, c) in e.terms() {
        let term = theta_signed(ring, f, xs, rule)?;
        if term.degree != n {
            // only possible when every term is zero
            continue;
        }
        out = out.add(&term.scale(c))?;
    }
    Ok(out)
}

/// The defect of the chain-map identity
/// `θ(∂f; x) = Dθ(f; x) - (-1)^{|f|} Σ_i (-1)^{Σ_{l<i}|x_l|} θ(f; .., Dx_i, ..)`
/// with `D` = [`differential`]; zero when the identity holds.
pub fn chain_map_defect(
    ring: &FiniteRing,
    e: &OperadElement,
    xs: &[HochschildCochain],
    rule: SignRule,
) -> Result<HochschildCochain> {
    let total: usize = xs.iter().map(|x| x.degree).sum();
    let Some(n) = (total + 1).checked_sub(e.degree()) else {
        return Ok(HochschildCochain::zero(ring, 0));
    };
    let lhs = theta_element_signed(ring, &e.differential(), xs, rule)?;
    let inner = theta_element_signed(ring, e, xs, rule)?;
    let mut rhs = if inner.degree + 1 == n {
        differential(ring, &inner)?
    } else {
        HochschildCochain::zero(ring, n)
    };
    let mut before = 0;
    for i in 0..xs.len() {
        let mut ys = xs.to_vec();
        ys[i] = differential(ring, &xs[i])?;
        let term = theta_element_signed(ring, e, &ys, rule)?;
        if term.degree == n {
            rhs = if (e.degree() + before) % 2 == 0 {
                rhs.sub(&term)?
            } else {
                rhs.add(&term)?
            };
        }
        before += xs[i].degree;
    }
    let lhs = if lhs.degree == n { lhs } else { HochschildCochain::zero(ring, n) };
    lhs.sub(&rhs)
}

/// Parity of the Koszul sign of permuting inputs: slot `ρ(l)` receives `x_l`.
pub fn permutation_parity(rho: &Permutation, degrees: &[usize]) -> usize {
    let k = rho.len();
    let mut parity = 0;
    for l in 1..=k {
        for l2 in l + 1..=k {
            if rho.apply(l) > rho.apply(l2) {
                parity += degrees[l - 1] * degrees[l2 - 1];
            }
        }
    }
    parity % 2
}
