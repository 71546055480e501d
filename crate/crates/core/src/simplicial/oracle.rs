//! Independent evaluation of operad formulas through their action on cochains.
//!
//! An element `ν` of arity `k` is recorded by its values
//! `ν(c_1*, ..., c_k*)(σ)` on dual basis cochains, for `σ` the standard
//! simplex `Δ^p`, `p ≤ p_max`, and all tuples of faces `c_i ⊆ σ`. By
//! naturality these values determine evaluation on every face of
//! `Δ^{p_max}`, and for `p_max` at least the sequence length they determine
//! the element itself.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::coaction::{coaction_element, koszul_parity};
use super::complex::Simplex;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::operad::OperadElement;

/// Values of an operation on dual basis cochains, keyed by `(σ, (c_1, ..., c_k))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvaluationTable {
    entries: BTreeMap<(Simplex, Vec<Simplex>), BigInt>,
}

impl EvaluationTable {
    fn add(&mut self, sigma: Simplex, tuple: Vec<Simplex>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (sigma, tuple);
        let entry = self.entries.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, sigma: Simplex, tuple: &[Simplex]) -> BigInt {
        self.entries
            .get(&(sigma, tuple.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// The first key on which the two tables disagree, with both values.
    pub fn first_difference(&self, other: &Self) -> Option<(Simplex, Vec<Simplex>, BigInt, BigInt)> {
        for (key, v) in &self.entries {
            let w = other.entries.get(key).cloned().unwrap_or_default();
            if *v != w {
                return Some((key.0, key.1.clone(), v.clone(), w));
            }
        }
        for (key, w) in &other.entries {
            if !self.entries.contains_key(key) {
                return Some((key.0, key.1.clone(), BigInt::zero(), w.clone()));
            }
        }
        None
    }
}

fn sign(parity: usize) -> BigInt {
    BigInt::from(if parity % 2 == 0 { 1 } else { -1 })
}

/// `ν(c_1*, ..., c_k*)(σ)` for all tuples, on one simplex `σ`:
/// `(-1)^{|ν|} (-1)^{Σ_{i<j}|c_i||c_j|}` times the coefficient in `σ[ν]`.
fn values_on(e: &OperadElement, sigma: Simplex) -> Vec<(Vec<Simplex>, BigInt)> {
    coaction_element(sigma, e)
        .terms()
        .map(|(tuple, c)| {
            let parity = e.degree() + koszul_parity(tuple.iter().map(|s| s.dim()));
            (tuple.clone(), c * sign(parity))
        })
        .collect()
}

/// The evaluation table of `e` through dimension `p_max`.
pub fn evaluation_table(e: &OperadElement, p_max: usize) -> EvaluationTable {
    let mut table = EvaluationTable::default();
    for p in 0..=p_max {
        let sigma = Simplex::standard(p);
        for (tuple, v) in values_on(e, sigma) {
            table.add(sigma, tuple, v);
        }
    }
    table
}

/// Whether `e1` and `e2` agree on all dual basis cochains through `p_max`.
pub fn oracle_equal(e1: &OperadElement, e2: &OperadElement, p_max: usize) -> bool {
    e1.arity() == e2.arity() && evaluation_table(e1, p_max) == evaluation_table(e2, p_max)
}

/// The table of the operator differential `∂ν = d∘ν - (-1)^{|ν|} ν∘d` of
/// the endomorphism operad, computed from the evaluations of `ν` alone: the
/// coboundary `d(x) = -(-1)^{|x|} x∘∂` is applied to the output and, with
/// Koszul signs, to each input.
pub fn operator_differential_table(e: &OperadElement, p_max: usize) -> EvaluationTable {
    let mut table = EvaluationTable::default();
    let nu_parity = e.degree() % 2;
    for p in 0..=p_max {
        let sigma = Simplex::standard(p);
        // (d ∘ ν)(x)(σ) = -(-1)^{p-1} Σ_t (-1)^t ν(x)(σ_t)
        if p > 0 {
            for (t, face) in sigma.faces() {
                let s = sign(1 + (p - 1) + t);
                for (tuple, v) in values_on(e, face) {
                    table.add(sigma, tuple, &s * v);
                }
            }
        }
        // -(-1)^{|ν|} Σ_i (-1)^{Σ_{l<i}|x_l|} ν(..., d x_i, ...)(σ), with
        // d(c*) = -(-1)^{|c|} Σ_{τ ⊃ c} [τ : c] τ*
        for (tuple, v) in values_on(e, sigma) {
            let mut before = 0;
            for i in 0..tuple.len() {
                let tau = tuple[i];
                for (t, c) in tau.faces() {
                    let parity = 1 + nu_parity + before + 1 + c.dim() + t;
                    let mut shifted = tuple.clone();
                    shifted[i] = c;
                    table.add(sigma, shifted, sign(parity) * &v);
                }
                before += tau.dim();
            }
        }
    }
    table
}

/// The table of `x ↦ ν(x_{ρ⁻¹(1)}, ..., x_{ρ⁻¹(k)})`, with the Koszul sign of
/// permuting the inputs; this is the right action of `ρ` on operations.
pub fn permuted_table(e: &OperadElement, rho: &Permutation, p_max: usize) -> Result<EvaluationTable> {
    let k = e.arity();
    if rho.len() != k {
        return Err(Error::ArityMismatch {
            expected: k,
            found: rho.len(),
        });
    }
    let mut table = EvaluationTable::default();
    for p in 0..=p_max {
        let sigma = Simplex::standard(p);
        for (tuple, v) in values_on(e, sigma) {
            // slot i of ν receives x_l with l = ρ⁻¹(i), i.e. x_l sits in slot ρ(l)
            let xs: Vec<Simplex> = (1..=k).map(|l| tuple[rho.apply(l) - 1]).collect();
            let mut parity = 0;
            for l in 1..=k {
                for l2 in l + 1..=k {
                    if rho.apply(l) > rho.apply(l2) {
                        parity += xs[l - 1].dim() * xs[l2 - 1].dim();
                    }
                }
            }
            table.add(sigma, xs, sign(parity) * v);
        }
    }
    Ok(table)
}

/// The table of the nested operation
/// `x ↦ (-1)^{Σ_{i<i'} |g_{i'}||x_{B_i}|} f(g_1(x_{B_1}), ..., g_k(x_{B_k}))`,
/// where `B_i` is the block of inputs fed to `g_i`.
pub fn nested_table(f: &OperadElement, gs: &[OperadElement], p_max: usize) -> Result<EvaluationTable> {
    if gs.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: gs.len(),
        });
    }
    let mut table = EvaluationTable::default();
    let mut inner_cache: BTreeMap<(usize, Simplex), Vec<(Vec<Simplex>, BigInt)>> = BTreeMap::new();
    for p in 0..=p_max {
        let sigma = Simplex::standard(p);
        for (outer, v) in values_on(f, sigma) {
            // expand each outer factor d_i through g_i
            let mut partial: Vec<(Vec<Simplex>, BigInt, usize)> = vec![(Vec::new(), v, 0)];
            for (i, &d) in outer.iter().enumerate() {
                let inner = inner_cache
                    .entry((i, d))
                    .or_insert_with(|| values_on(&gs[i], d));
                let g_parity = gs[i].degree() % 2;
                let mut next = Vec::new();
                for (prefix, c, dims_before) in &partial {
                    for (tuple, w) in inner.iter() {
                        let mut joined = prefix.clone();
                        joined.extend_from_slice(tuple);
                        let block_dims: usize = tuple.iter().map(|s| s.dim()).sum();
                        let s = sign(g_parity * dims_before);
                        next.push((joined, c * w * s, dims_before + block_dims));
                    }
                }
                partial = next;
            }
            for (tuple, c, _) in partial {
                table.add(sigma, tuple, c);
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_basis, Surjection};

    fn e(entries: &[usize], k: usize) -> OperadElement {
        OperadElement::from_sequence(entries, k).unwrap()
    }

    #[test]
    fn distinguishes_and_identifies() {
        assert!(!oracle_equal(&e(&[1, 2], 2), &e(&[2, 1], 2), 2));
        let composite = e(&[1, 2], 2).compose(&[e(&[1, 2], 2), OperadElement::unit()]).unwrap();
        assert!(oracle_equal(&e(&[1, 2, 3], 3), &composite, 3));
    }

    #[test]
    fn differential_matches_operator_differential() {
        for k in 1..=3 {
            for d in 0..=3 {
                for f in enumerate_basis(k, d, None) {
                    let x = OperadElement::basis(f.clone());
                    let n = f.len();
                    let direct = evaluation_table(&x.differential(), n);
                    let operator = operator_differential_table(&x, n);
                    assert_eq!(direct.first_difference(&operator), None, "{f:?}");
                }
            }
        }
    }

    #[test]
    fn action_matches_permuted_inputs() {
        for k in 1..=3 {
            for d in 0..=2 {
                for f in enumerate_basis(k, d, None) {
                    let x = OperadElement::basis(f.clone());
                    for rho in Permutation::all(k) {
                        let direct = evaluation_table(&x.act(&rho).unwrap(), f.len());
                        let permuted = permuted_table(&x, &rho, f.len()).unwrap();
                        assert_eq!(direct.first_difference(&permuted), None, "{f:?} {rho:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn composition_matches_nested_evaluation() {
        let samples = [
            (vec![1, 2], 2),
            (vec![2, 1], 2),
            (vec![1, 2, 1], 2),
            (vec![2, 1, 2], 2),
            (vec![1, 2, 1, 2], 2),
        ];
        let inner = [
            (vec![1], 1),
            (vec![1, 2], 2),
            (vec![2, 1], 2),
            (vec![1, 2, 1], 2),
            (vec![2, 1, 2], 2),
        ];
        for (fs, fk) in &samples {
            let f = e(fs, *fk);
            for (a, ak) in &inner {
                for (b, bk) in &inner {
                    let gs = [e(a, *ak), e(b, *bk)];
                    let composite = f.compose(&gs).unwrap();
                    let n = fs.len() + a.len() + b.len() - 2;
                    let direct = evaluation_table(&composite, n);
                    let nested = nested_table(&f, &gs, n).unwrap();
                    assert_eq!(
                        direct.first_difference(&nested),
                        None,
                        "{f} ∘ ({}, {})",
                        gs[0],
                        gs[1]
                    );
                }
            }
        }
        let _ = Surjection::identity(1);
    }
}
