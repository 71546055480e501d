use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::coaction::evaluate;
use super::cochain::Cochain;
use super::complex::{Simplex, SimplicialComplex};
use crate::combinatorics::Surjection;
use crate::error::{Error, Result};
use crate::operad::OperadElement;

/// `x ⌣_i y`: the operation of the alternating sequence `1212...` with `i + 2`
/// entries. Its degree is `|x| + |y| - i`.
pub fn cup_i(x: &Cochain, y: &Cochain, i: usize, complex: &SimplicialComplex) -> Result<Cochain> {
    let op = OperadElement::basis(Surjection::alternating(i + 2));
    evaluate(&op, &[x.clone(), y.clone()], complex)
}

/// `Sq^i x = x ⌣_{p-i} x` reduced mod 2, for a mod-2 cocycle `x` of degree `p`.
/// Zero (of degree `p + i`) when `i > p`.
pub fn steenrod_sq(x: &Cochain, i: usize, complex: &SimplicialComplex) -> Result<Cochain> {
    let x = x.mod2();
    if !is_cocycle_mod2(&x, complex) {
        return Err(Error::NotACocycle);
    }
    let p = x.dim();
    if i > p {
        return Ok(Cochain::zero(p + i));
    }
    Ok(cup_i(&x, &x, p - i, complex)?.mod2())
}

pub fn is_cocycle_mod2(x: &Cochain, complex: &SimplicialComplex) -> bool {
    x.mod2().coboundary(complex).mod2().is_zero()
}

/// Whether `x` is `d` of some cochain, mod 2.
pub fn is_coboundary_mod2(x: &Cochain, complex: &SimplicialComplex) -> bool {
    let p = x.dim();
    if p == 0 {
        return x.mod2().is_zero();
    }
    let mut image = Echelon::new();
    for &s in complex.simplices(p - 1) {
        image.insert(to_bits(&Cochain::dual(s).coboundary(complex), complex));
    }
    image.reduce(to_bits(x, complex)).iter().all(|&w| w == 0)
}

pub fn cohomologous_mod2(x: &Cochain, y: &Cochain, complex: &SimplicialComplex) -> Result<bool> {
    if x.dim() != y.dim() {
        return Err(Error::DegreeMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(is_coboundary_mod2(&x.add(y)?, complex))
}

/// Cocycle representatives of a basis of `H^p(complex; F_2)`.
pub fn cohomology_basis_mod2(complex: &SimplicialComplex, p: usize) -> Vec<Cochain> {
    let simplices = complex.simplices(p);
    let n = simplices.len();
    let mut span = Echelon::new();
    if p > 0 {
        for &s in complex.simplices(p - 1) {
            span.insert(to_bits(&Cochain::dual(s).coboundary(complex), complex));
        }
    }
    // kernel of d_p: solve by elimination over the columns d(s*) for s in C_p
    let mut rows: Vec<(Vec<u64>, Vec<u64>)> = simplices
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let mut tag = vec![0u64; words(n)];
            tag[i / 64] |= 1 << (i % 64);
            (to_bits(&Cochain::dual(s).coboundary(complex), complex), tag)
        })
        .collect();
    let mut kernel = Vec::new();
    let mut pivot_rows: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    for (mut v, mut tag) in rows.drain(..) {
        for (bit, pv, pt) in &pivot_rows {
            if v[bit / 64] >> (bit % 64) & 1 == 1 {
                xor(&mut v, pv);
                xor(&mut tag, pt);
            }
        }
        match first_bit(&v) {
            Some(bit) => pivot_rows.push((bit, v, tag)),
            None => kernel.push(tag),
        }
    }
    let mut out = Vec::new();
    for z in kernel {
        if span.insert(z.clone()) {
            let mut c = Cochain::zero(p);
            for (i, &s) in simplices.iter().enumerate() {
                if z[i / 64] >> (i % 64) & 1 == 1 {
                    c.add_value_unchecked(s, BigInt::one());
                }
            }
            out.push(c);
        }
    }
    out
}

fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

fn to_bits(x: &Cochain, complex: &SimplicialComplex) -> Vec<u64> {
    let n = complex.simplices(x.dim()).len();
    let mut out = vec![0u64; words(n)];
    for (s, v) in x.values() {
        if v.is_odd() {
            let i = index(complex, *s);
            out[i / 64] ^= 1 << (i % 64);
        }
    }
    out
}

fn index(complex: &SimplicialComplex, s: Simplex) -> usize {
    complex
        .index_of(s)
        .expect("cochain supported on the complex")
}

fn xor(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn first_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// A reduced echelon basis of a subspace of `F_2^n`.
struct Echelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (bit, row) in &self.rows {
            if v[bit / 64] >> (bit % 64) & 1 == 1 {
                xor(&mut v, row);
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent.
    fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        match first_bit(&v) {
            Some(bit) => {
                self.rows.push((bit, v));
                true
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_mod2_cohomology() {
        let rp2 = SimplicialComplex::projective_plane();
        let dims: Vec<usize> = (0..=2).map(|p| cohomology_basis_mod2(&rp2, p).len()).collect();
        assert_eq!(dims, vec![1, 1, 1]);
    }

    #[test]
    fn squares_on_projective_plane() {
        let rp2 = SimplicialComplex::projective_plane();
        let a = cohomology_basis_mod2(&rp2, 1).remove(0);
        let sq0 = steenrod_sq(&a, 0, &rp2).unwrap();
        assert!(cohomologous_mod2(&sq0, &a, &rp2).unwrap());
        let sq1 = steenrod_sq(&a, 1, &rp2).unwrap();
        assert_eq!(sq1.dim(), 2);
        assert!(is_cocycle_mod2(&sq1, &rp2));
        assert!(!is_coboundary_mod2(&sq1, &rp2));
        assert!(steenrod_sq(&a, 2, &rp2).unwrap().is_zero());
    }

    #[test]
    fn non_cocycle_is_refused() {
        let rp2 = SimplicialComplex::projective_plane();
        let edge = rp2.simplices(1)[0];
        assert_eq!(steenrod_sq(&Cochain::dual(edge), 1, &rp2), Err(Error::NotACocycle));
    }

    #[test]
    fn cup_i_vanishes_above_the_degrees() {
        let d4 = SimplicialComplex::full_simplex(4).unwrap();
        let x = Cochain::dual(d4.simplices(1)[0]);
        let y = Cochain::dual(d4.simplices(2)[3]);
        assert!(cup_i(&x, &y, 2, &d4).unwrap().is_zero());
        assert!(cup_i(&x, &y, 3, &d4).unwrap().is_zero());
    }
}
