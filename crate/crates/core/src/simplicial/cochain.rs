use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

fn accumulate(map: &mut BTreeMap<Simplex, BigInt>, s: Simplex, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(s).or_default();
    *entry += c;
    if entry.is_zero() {
        map.remove(&s);
    }
}

/// A normalized integer chain of fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    dim: usize,
    coeffs: BTreeMap<Simplex, BigInt>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn simplex(s: Simplex) -> Self {
        let mut out = Self::zero(s.dim());
        out.coeffs.insert(s, BigInt::one());
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, s: Simplex, c: BigInt) -> Result<()> {
        if s.dim() != self.dim {
            return Err(Error::DegreeMismatch {
                expected: self.dim,
                found: s.dim(),
            });
        }
        accumulate(&mut self.coeffs, s, c);
        Ok(())
    }

    pub fn coeff(&self, s: Simplex) -> BigInt {
        self.coeffs.get(&s).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The alternating-sum boundary; zero in dimension 0.
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.dim.saturating_sub(1));
        if self.dim == 0 {
            return out;
        }
        for (&s, c) in &self.coeffs {
            for (t, face) in s.faces() {
                let c = if t % 2 == 0 { c.clone() } else { -c };
                accumulate(&mut out.coeffs, face, c);
            }
        }
        out
    }
}

/// A normalized integer cochain of fixed dimension, stored by its values on
/// simplices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    dim: usize,
    values: BTreeMap<Simplex, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct CochainRepr {
    dim: usize,
    values: Vec<CochainValue>,
}

#[derive(Serialize, Deserialize)]
struct CochainValue {
    simplex: Simplex,
    #[serde(with = "crate::json::int")]
    coeff: BigInt,
}

impl Cochain {
    pub fn zero(dim: usize) -> Self {
        Cochain {
            dim,
            values: BTreeMap::new(),
        }
    }

    /// The dual basis cochain: 1 on `s`, 0 elsewhere.
    pub fn dual(s: Simplex) -> Self {
        let mut out = Self::zero(s.dim());
        out.values.insert(s, BigInt::one());
        out
    }

    pub fn from_values(dim: usize, values: impl IntoIterator<Item = (Simplex, BigInt)>) -> Result<Self> {
        let mut out = Self::zero(dim);
        for (s, c) in values {
            out.add_value(s, c)?;
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_value(&mut self, s: Simplex, c: BigInt) -> Result<()> {
        if s.dim() != self.dim {
            return Err(Error::DegreeMismatch {
                expected: self.dim,
                found: s.dim(),
            });
        }
        accumulate(&mut self.values, s, c);
        Ok(())
    }

    pub(crate) fn add_value_unchecked(&mut self, s: Simplex, c: BigInt) {
        accumulate(&mut self.values, s, c);
    }

    pub fn value(&self, s: Simplex) -> BigInt {
        self.values.get(&s).cloned().unwrap_or_default()
    }

    pub(crate) fn value_ref(&self, s: Simplex) -> Option<&BigInt> {
        self.values.get(&s)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Simplex, &BigInt)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether every simplex in the support lies in `complex`.
    pub fn is_supported_on(&self, complex: &SimplicialComplex) -> bool {
        self.values.keys().all(|&s| complex.contains(s))
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.dim != other.dim && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (&s, c) in &other.values {
                accumulate(&mut out.values, s, c.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Cochain {
        let mut out = Self::zero(self.dim);
        for (&s, v) in &self.values {
            accumulate(&mut out.values, s, v * c);
        }
        out
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&BigInt::from(-1))
    }

    /// Value on a chain of the same dimension.
    pub fn pair(&self, c: &Chain) -> BigInt {
        if c.dim() != self.dim {
            return BigInt::zero();
        }
        c.terms().map(|(s, a)| a * self.value(*s)).sum()
    }

    /// `d(x) = -(-1)^{|x|} x ∘ ∂`, evaluated on the `(p+1)`-simplices of `complex`.
    pub fn coboundary(&self, complex: &SimplicialComplex) -> Cochain {
        let mut out = Cochain::zero(self.dim + 1);
        let outer_negative = self.dim % 2 == 0;
        for &s in complex.simplices(self.dim + 1) {
            let mut total = BigInt::zero();
            for (t, face) in s.faces() {
                if let Some(v) = self.values.get(&face) {
                    if t % 2 == 0 {
                        total += v;
                    } else {
                        total -= v;
                    }
                }
            }
            accumulate(&mut out.values, s, if outer_negative { -total } else { total });
        }
        out
    }

    /// Coefficients reduced into `{0, 1}`.
    pub fn mod2(&self) -> Cochain {
        let mut out = Self::zero(self.dim);
        for (&s, v) in &self.values {
            if v.is_odd() {
                out.values.insert(s, BigInt::one());
            }
        }
        out
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let repr: CochainRepr = serde_json::from_value(value.clone())
            .map_err(|e| Error::Malformed(format!("cochain: {e}")))?;
        Self::from_values(repr.dim, repr.values.into_iter().map(|v| (v.simplex, v.coeff)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let repr = CochainRepr {
            dim: self.dim,
            values: self
                .values
                .iter()
                .map(|(&simplex, coeff)| CochainValue {
                    simplex,
                    coeff: coeff.clone(),
                })
                .collect(),
        };
        serde_json::to_value(repr).expect("serializable")
    }
}

/// An element of the `k`-fold tensor power of the chains: integer
/// coefficients on `k`-tuples of simplices of mixed dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorChain {
    factors: usize,
    terms: BTreeMap<Vec<Simplex>, BigInt>,
}

impl TensorChain {
    pub fn zero(factors: usize) -> Self {
        TensorChain {
            factors,
            terms: BTreeMap::new(),
        }
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn add_term(&mut self, tuple: Vec<Simplex>, c: BigInt) -> Result<()> {
        if tuple.len() != self.factors {
            return Err(Error::ArityMismatch {
                expected: self.factors,
                found: tuple.len(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(tuple.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&tuple);
        }
        Ok(())
    }

    pub fn coeff(&self, tuple: &[Simplex]) -> BigInt {
        self.terms.get(tuple).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Simplex>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(tuple, c)| {
                serde_json::json!({
                    "coeff": crate::json::int_to_json(c),
                    "factors": tuple.iter().map(|s| s.vertices()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "factors": self.factors, "terms": terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::from_vertices(v).unwrap()
    }

    #[test]
    fn boundary_of_edge() {
        let b = Chain::simplex(s(&[0, 1])).boundary();
        assert_eq!(b.coeff(s(&[1])), BigInt::one());
        assert_eq!(b.coeff(s(&[0])), BigInt::from(-1));
        let tri = Chain::simplex(s(&[0, 1, 2]));
        assert!(tri.boundary().boundary().is_zero());
    }

    #[test]
    fn coboundary_sign() {
        let d1 = SimplicialComplex::full_simplex(1).unwrap();
        let x = Cochain::from_values(0, [(s(&[0]), BigInt::from(3)), (s(&[1]), BigInt::from(5))]).unwrap();
        // -(x[1] - x[0])
        assert_eq!(x.coboundary(&d1).value(s(&[0, 1])), BigInt::from(-2));
        let y = Cochain::dual(s(&[0, 1]));
        let d2 = SimplicialComplex::full_simplex(2).unwrap();
        // a 1-cochain picks up no extra sign
        assert_eq!(y.coboundary(&d2).value(s(&[0, 1, 2])), BigInt::one());
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let d4 = SimplicialComplex::full_simplex(4).unwrap();
        for p in 0..3 {
            for (n, &t) in d4.simplices(p).iter().enumerate() {
                let x = Cochain::from_values(p, [(t, BigInt::from(n as i64 + 1))]).unwrap();
                assert!(x.coboundary(&d4).coboundary(&d4).is_zero());
            }
        }
    }

    #[test]
    fn cochain_json_round_trip() {
        let x = Cochain::from_values(1, [(s(&[0, 2]), BigInt::from(-4))]).unwrap();
        assert_eq!(Cochain::from_json(&x.to_json()).unwrap(), x);
        let bad = serde_json::json!({"dim": 1, "values": [{"simplex": [0], "coeff": 1}]});
        assert!(Cochain::from_json(&bad).is_err());
    }
}
