use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::cochain::{Cochain, TensorChain};
use super::complex::{Simplex, SimplicialComplex};
use crate::combinatorics::{epsilon_parity, for_each_overlap_tuple, Surjection};
use crate::error::{Error, Result};
use crate::operad::OperadElement;

/// One nonzero term of `σ[f]` on a `p`-simplex, by vertex positions: the
/// factor masks select positions in `{0..=p}`.
#[derive(Clone, Debug)]
pub(crate) struct Pattern {
    pub factors: Vec<u64>,
    pub negative: bool,
}

/// The nondegenerate terms of the coaction of `f` on a `p`-simplex.
pub(crate) fn patterns(f: &Surjection, p: usize) -> Vec<Pattern> {
    let m = f.len();
    let k = f.arity();
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let entries = f.entries();
    let mut norms = vec![0usize; m];
    for_each_overlap_tuple(0, p, m - 1, |overlaps| {
        let mut factors = vec![0u64; k];
        let mut start = 0;
        for j in 0..m {
            let end = if j + 1 == m { p } else { overlaps[j] };
            // positions start..=end
            let piece = interval_mask(start, end);
            let slot = &mut factors[entries[j] as usize - 1];
            if *slot & piece != 0 {
                return;
            }
            *slot |= piece;
            norms[j] = end - start;
            start = end;
        }
        out.push(Pattern {
            factors,
            negative: epsilon_parity(entries, &norms) == 1,
        });
    });
    out
}

fn interval_mask(start: usize, end: usize) -> u64 {
    let width = end - start + 1;
    let ones = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
    ones << start
}

/// Caches coaction patterns by `(f, p)`.
#[derive(Default)]
pub(crate) struct PatternCache {
    map: HashMap<(Surjection, usize), std::rc::Rc<Vec<Pattern>>>,
}

impl PatternCache {
    pub fn get(&mut self, f: &Surjection, p: usize) -> std::rc::Rc<Vec<Pattern>> {
        self.map
            .entry((f.clone(), p))
            .or_insert_with(|| std::rc::Rc::new(patterns(f, p)))
            .clone()
    }
}

/// `σ[f] = Σ_𝒜 (-1)^{ε(f,𝒜)} σ(⊔_{f(j)=1} A_j) ⊗ ... ⊗ σ(⊔_{f(j)=k} A_j)`,
/// terms with a repeated vertex in some factor being zero.
pub fn coaction(sigma: Simplex, f: &Surjection) -> TensorChain {
    let mut out = TensorChain::zero(f.arity());
    for pattern in patterns(f, sigma.dim()) {
        let tuple = pattern
            .factors
            .iter()
            .map(|&m| Simplex::from_mask(sigma.select(m)).expect("nonempty factor"))
            .collect();
        let c = BigInt::from(if pattern.negative { -1 } else { 1 });
        out.add_term(tuple, c).expect("arity matches");
    }
    out
}

/// Linear extension of [`coaction`] to an operad element.
pub fn coaction_element(sigma: Simplex, e: &OperadElement) -> TensorChain {
    let mut out = TensorChain::zero(e.arity());
    for (f, c) in e.terms() {
        for (tuple, a) in coaction(sigma, f).terms() {
            out.add_term(tuple.clone(), a * c).expect("arity matches");
        }
    }
    out
}

/// Parity of the Koszul sign `Σ_{i<j} |c_i||c_j|` of applying a tensor of
/// cochains to a tensor of chains of matching dimensions.
pub(crate) fn koszul_parity(dims: impl IntoIterator<Item = usize>) -> usize {
    let mut before = 0;
    let mut total = 0;
    for d in dims {
        total += before * d;
        before += d;
    }
    total % 2
}

/// `⟨f⟩(x_1, ..., x_k)(σ) = (-1)^{m-k} (x_1 ⊗ ... ⊗ x_k)(σ[f])`, on every
/// simplex of `complex` of dimension `Σ|x_i| - (m - k)`. When that number is
/// negative the result is the zero cochain of dimension 0.
pub fn evaluate(e: &OperadElement, xs: &[Cochain], complex: &SimplicialComplex) -> Result<Cochain> {
    if xs.len() != e.arity() {
        return Err(Error::ArityMismatch {
            expected: e.arity(),
            found: xs.len(),
        });
    }
    let total: usize = xs.iter().map(Cochain::dim).sum();
    let Some(p) = total.checked_sub(e.degree()) else {
        return Ok(Cochain::zero(0));
    };
    let mut out = Cochain::zero(p);
    if e.arity() == 0 {
        // ⟨⟩ has no terms on any simplex: every overlapping partition needs a piece.
        return Ok(out);
    }
    let dims: Vec<usize> = xs.iter().map(Cochain::dim).collect();
    let koszul = koszul_parity(dims.iter().copied());
    let global = (e.degree() + koszul) % 2 == 1;
    let mut cache = PatternCache::default();
    for &sigma in complex.simplices(p) {
        let mut value = BigInt::zero();
        for (f, c) in e.terms() {
            let pats = cache.get(f, p);
            'pattern: for pattern in pats.iter() {
                let mut product = c.clone();
                for (i, &m) in pattern.factors.iter().enumerate() {
                    if m.count_ones() as usize != dims[i] + 1 {
                        continue 'pattern;
                    }
                    let face = Simplex::from_mask(sigma.select(m)).expect("nonempty");
                    match xs[i].value_ref(face) {
                        Some(v) => product *= v,
                        None => continue 'pattern,
                    }
                }
                if pattern.negative {
                    value -= product;
                } else {
                    value += product;
                }
            }
        }
        if global {
            value = -value;
        }
        out.add_value_unchecked(sigma, value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn s(v: &[usize]) -> Simplex {
        Simplex::from_vertices(v).unwrap()
    }

    fn surj(e: &[usize], k: usize) -> Surjection {
        Surjection::parse(e, k).unwrap()
    }

    #[test]
    fn unit_coaction() {
        let sigma = s(&[0, 1, 2]);
        let c = coaction(sigma, &Surjection::identity(1));
        assert_eq!(c.len(), 1);
        assert_eq!(c.coeff(&[sigma]), BigInt::one());
    }

    #[test]
    fn alexander_whitney() {
        let c = coaction(s(&[0, 1]), &surj(&[1, 2], 2));
        assert_eq!(c.len(), 2);
        assert_eq!(c.coeff(&[s(&[0]), s(&[0, 1])]), BigInt::one());
        assert_eq!(c.coeff(&[s(&[0, 1]), s(&[1])]), BigInt::one());
    }

    #[test]
    fn cup_one_on_an_edge() {
        let c = coaction(s(&[0, 1]), &surj(&[1, 2, 1], 2));
        assert_eq!(c.len(), 1);
        assert_eq!(c.coeff(&[s(&[0, 1]), s(&[0, 1])]), BigInt::from(-1));
    }

    #[test]
    fn cup_matches_front_back_faces_up_to_koszul_sign() {
        let d3 = SimplicialComplex::full_simplex(3).unwrap();
        let cup = OperadElement::basis(surj(&[1, 2], 2));
        for &a in d3.simplices(1) {
            for &b in d3.simplices(2) {
                let (x, y) = (Cochain::dual(a), Cochain::dual(b));
                let z = evaluate(&cup, &[x.clone(), y.clone()], &d3).unwrap();
                assert_eq!(z.dim(), 3);
                let sigma = d3.simplices(3)[0];
                let front = Simplex::from_mask(sigma.mask() & 0b0011).unwrap();
                let back = Simplex::from_mask(sigma.mask() & 0b1110).unwrap();
                // |x||y| = 2 is even
                let classical = x.value(front) * y.value(back);
                assert_eq!(z.value(sigma), classical);
            }
        }
        let x = Cochain::dual(s(&[0, 1]));
        let y = Cochain::dual(s(&[1, 2]));
        let z = evaluate(&cup, &[x, y], &d3).unwrap();
        // |x||y| = 1 is odd
        assert_eq!(z.value(s(&[0, 1, 2])), BigInt::from(-1));
    }

    #[test]
    fn degree_mismatch_gives_zero() {
        let d2 = SimplicialComplex::full_simplex(2).unwrap();
        let cup1 = OperadElement::basis(surj(&[1, 2, 1], 2));
        let x = Cochain::dual(s(&[0]));
        let z = evaluate(&cup1, &[x.clone(), x], &d2).unwrap();
        assert!(z.is_zero());
        assert!(evaluate(&cup1, &[Cochain::dual(s(&[0]))], &d2).is_err());
    }

    #[test]
    fn unit_evaluation_is_identity() {
        let d2 = SimplicialComplex::full_simplex(2).unwrap();
        let x = Cochain::from_values(1, [(s(&[0, 2]), BigInt::from(7)), (s(&[1, 2]), BigInt::from(-2))]).unwrap();
        assert_eq!(evaluate(&OperadElement::unit(), std::slice::from_ref(&x), &d2).unwrap(), x);
    }
}
