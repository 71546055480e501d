//! Elements of the surjection operad and its structure maps.
//!
//! An [`OperadElement`] is a homogeneous integer combination of
//! nondegenerate surjections of fixed arity and degree. Mixed-degree values
//! are lists of homogeneous elements.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{
    enumerate_diagrams, is_nondegenerate, parity_sign, zeta_parity, CompositionDiagram,
    Permutation, Surjection, Validated, MAX_ARITY,
};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperadElement {
    arity: usize,
    degree: usize,
    terms: BTreeMap<Surjection, BigInt>,
}

impl OperadElement {
    pub fn zero(arity: usize, degree: usize) -> Self {
        OperadElement {
            arity,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(f: Surjection) -> Self {
        let mut terms = BTreeMap::new();
        let (arity, degree) = (f.arity(), f.degree());
        terms.insert(f, BigInt::one());
        OperadElement {
            arity,
            degree,
            terms,
        }
    }

    /// `⟨1⟩`.
    pub fn unit() -> Self {
        Self::basis(Surjection::identity(1))
    }

    /// The element of a sequence; degenerate sequences give zero.
    pub fn from_sequence(entries: &[usize], arity: usize) -> Result<Self> {
        if entries.len() < arity {
            return Err(Error::Malformed(format!(
                "sequence of length {} cannot be onto {} values",
                entries.len(),
                arity
            )));
        }
        Ok(match Surjection::validate(entries, arity)? {
            Validated::Basis(f) => Self::basis(f),
            Validated::Degenerate => Self::zero(arity, entries.len() - arity),
        })
    }

    pub fn from_terms(
        arity: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Surjection, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(arity, degree);
        for (f, c) in terms {
            out.check_basis(&f)?;
            out.add_term(f, c);
        }
        Ok(out)
    }

    fn check_basis(&self, f: &Surjection) -> Result<()> {
        if f.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: f.arity(),
            });
        }
        if f.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: f.degree(),
            });
        }
        Ok(())
    }

    // Caller guarantees matching arity and degree.
    fn add_term(&mut self, f: Surjection, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(f) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c · ⟨entries⟩`, dropping degenerate sequences.
    fn add_sequence(&mut self, entries: Vec<u8>, c: BigInt) {
        if is_nondegenerate(&entries, self.arity) {
            self.add_term(Surjection::from_bytes_unchecked(entries, self.arity), c);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Surjection, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, f: &Surjection) -> BigInt {
        self.terms.get(f).cloned().unwrap_or_default()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        // The zero element is allowed to carry any degree.
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (f, c) in &other.terms {
                out.add_term(f.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.arity, self.degree);
        for (f, a) in &self.terms {
            out.add_term(f.clone(), a * c);
        }
        out
    }

    /// `∂⟨f⟩ = Σ_{j=1}^m (-1)^{τ_f(j) - f(j)} ⟨f with position j deleted⟩`,
    /// extended linearly. Vanishes in degree 0.
    pub fn differential(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(self.arity, 0);
        }
        let mut out = Self::zero(self.arity, self.degree - 1);
        for (f, c) in &self.terms {
            for (face, sign) in basis_differential(f) {
                out.add_term(face, if sign > 0 { c.clone() } else { -c });
            }
        }
        out
    }

    /// The right action `⟨f⟩ρ = (-1)^{ζ(f,ρ)} ⟨ρ⁻¹ ∘ f⟩`.
    pub fn act(&self, rho: &Permutation) -> Result<Self> {
        if rho.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: rho.len(),
            });
        }
        let inv = rho.inverse();
        let mut out = Self::zero(self.arity, self.degree);
        for (f, c) in &self.terms {
            let relabeled: Vec<u8> = f
                .entries()
                .iter()
                .map(|&e| inv.apply(e as usize) as u8)
                .collect();
            let sign = parity_sign(zeta_parity(f, rho));
            out.add_term(
                Surjection::from_bytes_unchecked(relabeled, self.arity),
                c * sign,
            );
        }
        Ok(out)
    }

    /// Multivariable composition `⟨f⟩(⟨g_1⟩, ..., ⟨g_k⟩) = Σ_D (-1)^{η(D)} ⟨h_D⟩`
    /// over diagrams of type `(f, |g_1|, ..., |g_k|)`, extended multilinearly.
    pub fn compose(&self, inner: &[OperadElement]) -> Result<Self> {
        if inner.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: inner.len(),
            });
        }
        let arity: usize = inner.iter().map(|g| g.arity).sum();
        if arity > MAX_ARITY {
            return Err(Error::ArityTooLarge(arity));
        }
        let degree = self.degree + inner.iter().map(|g| g.degree).sum::<usize>();
        let mut out = Self::zero(arity, degree);
        if inner.iter().any(|g| g.is_zero()) {
            return Ok(out);
        }
        let inner_terms: Vec<Vec<(&Surjection, &BigInt)>> =
            inner.iter().map(|g| g.terms().collect()).collect();
        let mut diagram_cache: HashMap<(Surjection, Vec<usize>), Vec<CompositionDiagram>> =
            HashMap::new();
        for (f, c) in &self.terms {
            let mut choice = vec![0usize; inner.len()];
            loop {
                let gs: Vec<Surjection> = choice
                    .iter()
                    .enumerate()
                    .map(|(i, &t)| inner_terms[i][t].0.clone())
                    .collect();
                let mut coeff = c.clone();
                for (i, &t) in choice.iter().enumerate() {
                    coeff *= inner_terms[i][t].1;
                }
                let sizes: Vec<usize> = gs.iter().map(Surjection::len).collect();
                let diagrams = diagram_cache
                    .entry((f.clone(), sizes.clone()))
                    .or_insert_with(|| enumerate_diagrams(f, &sizes).expect("arity checked"));
                for d in diagrams.iter() {
                    let h = d.h(&gs);
                    let sign = parity_sign(d.eta_parity(&gs));
                    out.add_sequence(h, if sign > 0 { coeff.clone() } else { -&coeff });
                }
                if !advance(&mut choice, &inner_terms) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// `e ∘_i g`: composition with `g` in slot `i` (1-based) and units elsewhere.
    pub fn partial_compose(&self, position: usize, g: &OperadElement) -> Result<Self> {
        if position == 0 || position > self.arity {
            return Err(Error::PositionOutOfRange {
                position,
                len: self.arity,
            });
        }
        let inner: Vec<OperadElement> = (1..=self.arity)
            .map(|i| if i == position { g.clone() } else { Self::unit() })
            .collect();
        self.compose(&inner)
    }

    /// Benson's homotopy `s`: prepend a 1; sequences already starting with 1 go to 0.
    pub fn benson_homotopy(&self) -> Self {
        let mut out = Self::zero(self.arity, self.degree + 1);
        for (f, c) in &self.terms {
            let mut entries = Vec::with_capacity(f.len() + 1);
            entries.push(1u8);
            entries.extend_from_slice(f.entries());
            out.add_sequence(entries, c.clone());
        }
        out
    }

    /// `ι: S(k-1) -> S(k)`: shift every entry up by one and prepend a 1.
    pub fn iota(&self) -> Result<Self> {
        if self.arity + 1 > MAX_ARITY {
            return Err(Error::ArityTooLarge(self.arity + 1));
        }
        let mut out = Self::zero(self.arity + 1, self.degree);
        for (f, c) in &self.terms {
            let mut entries = Vec::with_capacity(f.len() + 1);
            entries.push(1u8);
            entries.extend(f.entries().iter().map(|&e| e + 1));
            out.add_term(Surjection::from_bytes_unchecked(entries, self.arity + 1), c.clone());
        }
        Ok(out)
    }

    /// `r: S(k) -> S(k-1)`: zero unless the sequence begins with its only 1,
    /// in which case that 1 is removed and the remaining entries shifted down.
    pub fn r(&self) -> Result<Self> {
        if self.arity == 0 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut out = Self::zero(self.arity - 1, self.degree);
        for (f, c) in &self.terms {
            let e = f.entries();
            if e[0] == 1 && e[1..].iter().all(|&v| v != 1) {
                let rest = e[1..].iter().map(|&v| v - 1).collect();
                out.add_term(Surjection::from_bytes_unchecked(rest, self.arity - 1), c.clone());
            }
        }
        Ok(out)
    }

    /// The chain map `P = id - (∂s + s∂)` onto the sequences that begin with
    /// their only 1: a sequence with a unique 1 has that 1 moved to the front
    /// (zero if the result is degenerate); every other sequence goes to 0.
    pub fn benson_projection(&self) -> Self {
        let mut out = Self::zero(self.arity, self.degree);
        for (f, c) in &self.terms {
            let e = f.entries();
            let ones: Vec<usize> = (0..e.len()).filter(|&j| e[j] == 1).collect();
            if ones.len() == 1 {
                let mut entries = Vec::with_capacity(e.len());
                entries.push(1u8);
                entries.extend(e.iter().enumerate().filter(|&(j, _)| j != ones[0]).map(|(_, &v)| v));
                out.add_sequence(entries, c.clone());
            }
        }
        out
    }

    /// Largest complexity among the basis terms; 0 for the zero element.
    pub fn complexity_bound(&self) -> usize {
        self.terms.keys().map(Surjection::complexity).max().unwrap_or(0)
    }

    /// Membership in the complexity-`n` suboperad.
    pub fn in_sn(&self, n: usize) -> bool {
        self.complexity_bound() <= n
    }

    /// Sum of absolute values of the coefficients.
    pub fn weight(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }
}

fn advance(choice: &mut [usize], terms: &[Vec<(&Surjection, &BigInt)>]) -> bool {
    for pos in (0..choice.len()).rev() {
        choice[pos] += 1;
        if choice[pos] < terms[pos].len() {
            return true;
        }
        choice[pos] = 0;
    }
    false
}

/// Nonzero terms of `∂⟨f⟩` with their signs, before collecting.
pub fn basis_differential(f: &Surjection) -> Vec<(Surjection, i32)> {
    let tau = f.tau();
    let mut out = Vec::new();
    for j in 1..=f.len() {
        let face = f.delete(j);
        if is_nondegenerate(&face, f.arity()) {
            let exponent = tau[j - 1] - f.at(j);
            out.push((
                Surjection::from_bytes_unchecked(face, f.arity()),
                parity_sign(exponent),
            ));
        }
    }
    out
}

impl fmt::Debug for OperadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OperadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (s, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "⟨{s}⟩")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(entries: &[usize], k: usize) -> OperadElement {
        OperadElement::from_sequence(entries, k).unwrap()
    }

    fn digits(s: &str) -> Vec<usize> {
        s.bytes().map(|b| (b - b'0') as usize).collect()
    }

    fn parse(expr: &[(i64, &str)], k: usize) -> OperadElement {
        let mut out: Option<OperadElement> = None;
        for &(c, s) in expr {
            let term = e(&digits(s), k).scale(&BigInt::from(c));
            out = Some(match out {
                None => term,
                Some(acc) => acc.add(&term).unwrap(),
            });
        }
        out.unwrap()
    }

    #[test]
    fn differential_reproduces_displays() {
        let d = e(&digits("12312"), 3).differential();
        let expected = parse(&[(1, "2312"), (-1, "1232"), (-1, "1312"), (1, "1231")], 3);
        assert_eq!(d, expected);

        let d = e(&digits("123121"), 3).differential();
        let expected = parse(&[(1, "23121"), (-1, "12321"), (1, "12312"), (1, "13121")], 3);
        assert_eq!(d, expected);

        assert!(e(&[1, 2], 2).differential().is_zero());
    }

    #[test]
    fn action_examples() {
        let swap = Permutation::transposition(2, 1, 2);
        assert_eq!(e(&[1, 2], 2).act(&swap).unwrap(), e(&[2, 1], 2));
        assert_eq!(e(&[1, 2, 1, 2], 2).act(&swap).unwrap(), e(&[2, 1, 2, 1], 2).neg());
        let x = e(&[1, 2, 3, 1, 2], 3);
        assert_eq!(x.act(&Permutation::identity(3)).unwrap(), x);
        assert!(x.act(&swap).is_err());
    }

    #[test]
    fn composition_examples() {
        let cup = e(&[1, 2], 2);
        let unit = OperadElement::unit();
        let cup3 = e(&[1, 2, 3], 3);
        assert_eq!(cup.compose(&[cup.clone(), unit.clone()]).unwrap(), cup3);
        assert_eq!(cup.compose(&[unit.clone(), cup.clone()]).unwrap(), cup3);
        let f = e(&[1, 2, 3, 1, 2], 3);
        assert_eq!(f.compose(&[unit.clone(), unit.clone(), unit.clone()]).unwrap(), f);
        assert_eq!(unit.compose(std::slice::from_ref(&f)).unwrap(), f);
        assert!(cup.compose(std::slice::from_ref(&unit)).is_err());
    }

    #[test]
    fn partial_composition() {
        let cup = e(&[1, 2], 2);
        assert_eq!(cup.partial_compose(1, &cup).unwrap(), e(&[1, 2, 3], 3));
        let f = e(&[1, 2, 1, 3], 3);
        assert_eq!(f.partial_compose(2, &OperadElement::unit()).unwrap(), f);
        let swapped = e(&[2, 1], 2);
        assert_eq!(
            swapped.partial_compose(2, &cup).unwrap(),
            swapped
                .compose(&[OperadElement::unit(), cup.clone()])
                .unwrap()
        );
        assert!(cup.partial_compose(3, &cup).is_err());
    }

    #[test]
    fn composition_into_nullary_slot_vanishes() {
        let cup = e(&[1, 2], 2);
        let empty = OperadElement::basis(Surjection::identity(0));
        let out = cup.compose(&[OperadElement::unit(), empty]).unwrap();
        assert_eq!(out.arity(), 1);
        assert!(out.is_zero());
    }

    #[test]
    fn benson_maps() {
        assert_eq!(e(&[2, 1], 2).benson_homotopy(), e(&[1, 2, 1], 2));
        assert!(e(&[1, 2, 1], 2).benson_homotopy().is_zero());
        assert_eq!(OperadElement::unit().iota().unwrap(), e(&[1, 2], 2));
        assert_eq!(e(&[1, 2], 2).r().unwrap(), OperadElement::unit());
        assert!(e(&[2, 1], 2).r().unwrap().is_zero());
        assert_eq!(e(&[2, 1], 2).benson_projection(), e(&[1, 2], 2));
        assert!(e(&[2, 1, 2], 2).benson_projection().is_zero());
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(e(&[1, 2], 2).complexity_bound(), 1);
        let x = e(&[1, 2, 1, 2], 2);
        assert_eq!(x.complexity_bound(), 3);
        assert!(x.in_sn(3) && !x.in_sn(2));
        let zero = OperadElement::zero(3, 2);
        assert_eq!(zero.complexity_bound(), 0);
        assert!(zero.in_sn(1));
    }

    #[test]
    fn display() {
        let d = e(&digits("12312"), 3).differential();
        assert_eq!(d.to_string(), "⟨1231⟩ - ⟨1232⟩ - ⟨1312⟩ + ⟨2312⟩");
    }
}
