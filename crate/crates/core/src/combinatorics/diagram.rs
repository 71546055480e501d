use crate::error::{Error, Result};

use super::partition::{enumerate_partitions, epsilon_parity, OverlappingPartition};
use super::surjection::Surjection;

/// A diagram of type `(f, m_1, ..., m_k)`: for each color `i` an overlapping
/// partition `𝒜ⁱ` of the fiber `f⁻¹(i)` into `m_i` pieces, together with the
/// maps `a: {1..L} -> {1..m}` and `b: {1..L} -> ⊔{1..m_i}` it determines,
/// where `L = m - k + Σ m_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionDiagram {
    outer: Surjection,
    inner_sizes: Vec<usize>,
    // Partition of fiber i, on fiber indices 0..|f⁻¹(i)|.
    color_partitions: Vec<OverlappingPartition>,
    a: Vec<usize>,
    b: Vec<(usize, usize)>,
}

impl CompositionDiagram {
    fn build(outer: &Surjection, inner_sizes: &[usize], color_partitions: Vec<OverlappingPartition>) -> Self {
        let k = outer.arity();
        let mut fiber_index = vec![0usize; k + 1];
        let mut a = Vec::new();
        let mut b = Vec::new();
        for j in 1..=outer.len() {
            let color = outer.at(j);
            let t = fiber_index[color];
            fiber_index[color] += 1;
            let partition = &color_partitions[color - 1];
            for r in 1..=partition.piece_count() {
                if partition.piece(r).contains(&t) {
                    a.push(j);
                    b.push((color, r));
                }
            }
        }
        CompositionDiagram {
            outer: outer.clone(),
            inner_sizes: inner_sizes.to_vec(),
            color_partitions,
            a,
            b,
        }
    }

    pub fn outer(&self) -> &Surjection {
        &self.outer
    }

    pub fn inner_sizes(&self) -> &[usize] {
        &self.inner_sizes
    }

    /// `L = m - k + Σ m_i`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The order-preserving map to `{1..m}`, as a sequence.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// The map to `⊔{1..m_i}`, as `(i, r)` pairs with `r` in `1..=m_i`.
    pub fn b(&self) -> &[(usize, usize)] {
        &self.b
    }

    /// `𝒜ⁱ` as subsets of `{1..m}`: `𝒜ⁱ_r = a(b⁻¹(r))`.
    pub fn color_pieces(&self, color: usize) -> Vec<Vec<usize>> {
        let fiber = self.outer.fiber(color);
        self.color_partitions[color - 1]
            .pieces()
            .into_iter()
            .map(|piece| piece.map(|t| fiber[t]).collect())
            .collect()
    }

    pub fn color_partition(&self, color: usize) -> &OverlappingPartition {
        &self.color_partitions[color - 1]
    }

    /// Checks that for `color` the span `f⁻¹(i) <- b⁻¹({1..m_i}) -> {1..m_i}` is
    /// special: both legs order-preserving epimorphisms, and each adjacent pair
    /// advancing under exactly one leg.
    pub fn is_special(&self, color: usize) -> bool {
        let fiber = self.outer.fiber(color);
        let positions: Vec<usize> = (0..self.len()).filter(|&l| self.b[l].0 == color).collect();
        let left: Vec<usize> = positions.iter().map(|&l| self.a[l]).collect();
        let right: Vec<usize> = positions.iter().map(|&l| self.b[l].1).collect();
        let m_i = self.inner_sizes[color - 1];
        let onto = |image: &[usize], target: &[usize]| {
            let mut v = image.to_vec();
            v.dedup();
            v == target
        };
        let monotone = |v: &[usize]| v.windows(2).all(|w| w[0] <= w[1]);
        let targets: Vec<usize> = (1..=m_i).collect();
        monotone(&left)
            && monotone(&right)
            && onto(&left, &fiber)
            && onto(&right, &targets)
            && (1..positions.len()).all(|q| {
                let up_left = left[q - 1] < left[q];
                let up_right = right[q - 1] < right[q];
                up_left != up_right
            })
            && positions.len() == fiber.len() + m_i - 1
    }

    /// `h_D = ω ∘ (⊔ g_i) ∘ b`, with `ω` shifting the values of `g_i` past
    /// those of `g_1, ..., g_{i-1}`.
    pub fn h(&self, inner: &[Surjection]) -> Vec<u8> {
        let offsets = block_offsets(inner);
        self.b
            .iter()
            .map(|&(i, r)| (offsets[i - 1] + inner[i - 1].at(r)) as u8)
            .collect()
    }

    /// Parity of `η(D) = Σ_{i<i'} (m_i - j_i)‖f⁻¹(i')‖ + Σ_i ε(g_i, 𝒜ⁱ)`.
    pub fn eta_parity(&self, inner: &[Surjection]) -> usize {
        let fiber_norms: Vec<usize> = self.outer.fiber_sizes().iter().map(|n| n - 1).collect();
        let mut total = 0;
        let mut degree_so_far = 0;
        for (i, g) in inner.iter().enumerate() {
            total += degree_so_far * fiber_norms[i];
            degree_so_far += g.degree();
            total += epsilon_parity(g.entries(), &self.color_partitions[i].norms());
        }
        total % 2
    }
}

pub(crate) fn block_offsets(inner: &[Surjection]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(inner.len());
    let mut acc = 0;
    for g in inner {
        offsets.push(acc);
        acc += g.arity();
    }
    offsets
}

/// All diagrams of type `(f, m_1, ..., m_k)`. A color with `m_i = 0` admits
/// no partition of its (nonempty) fiber, so the list is then empty.
pub fn enumerate_diagrams(f: &Surjection, inner_sizes: &[usize]) -> Result<Vec<CompositionDiagram>> {
    let k = f.arity();
    if inner_sizes.len() != k {
        return Err(Error::ArityMismatch {
            expected: k,
            found: inner_sizes.len(),
        });
    }
    let mut per_color = Vec::with_capacity(k);
    for (i, &m_i) in inner_sizes.iter().enumerate() {
        let fiber_len = f.fiber(i + 1).len();
        if m_i == 0 {
            return Ok(Vec::new());
        }
        per_color.push(enumerate_partitions(0, fiber_len - 1, m_i)?);
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        let partitions = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| per_color[i][c].clone())
            .collect();
        out.push(CompositionDiagram::build(f, inner_sizes, partitions));
        // odometer over the per-color choices
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < per_color[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(entries: &[usize], k: usize) -> Surjection {
        Surjection::parse(entries, k).unwrap()
    }

    #[test]
    fn single_diagram_for_cup_into_first_slot() {
        let f = s(&[1, 2], 2);
        let d = enumerate_diagrams(&f, &[2, 1]).unwrap();
        assert_eq!(d.len(), 1);
        let gs = [s(&[1, 2], 2), s(&[1], 1)];
        assert_eq!(d[0].h(&gs), vec![1, 2, 3]);
        assert_eq!(d[0].eta_parity(&gs), 0);
        assert_eq!(d[0].a(), &[1, 1, 2]);
        assert_eq!(d[0].b(), &[(1, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn unit_outer() {
        let f = Surjection::identity(1);
        let g = s(&[1, 2, 1, 3], 3);
        let d = enumerate_diagrams(&f, &[4]).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].h(std::slice::from_ref(&g)), g.entries());
    }

    #[test]
    fn counts() {
        let f = s(&[1, 2, 1], 2);
        assert_eq!(enumerate_diagrams(&f, &[1, 1]).unwrap().len(), 1);
        // fiber of 1 has two points: C(2 + 2 - 2, 1) = 2 partitions into 2 pieces
        assert_eq!(enumerate_diagrams(&f, &[2, 1]).unwrap().len(), 2);
        assert!(enumerate_diagrams(&f, &[0, 1]).unwrap().is_empty());
        assert!(enumerate_diagrams(&f, &[1]).is_err());
    }

    #[test]
    fn every_diagram_is_special() {
        let f = s(&[1, 2, 3, 1, 2], 3);
        for sizes in [[1, 1, 1], [2, 1, 3], [3, 2, 2], [1, 4, 1]] {
            let diagrams = enumerate_diagrams(&f, &sizes).unwrap();
            assert!(!diagrams.is_empty());
            for d in diagrams {
                let expected_len = f.len() - 3 + sizes.iter().sum::<usize>();
                assert_eq!(d.len(), expected_len);
                assert!(d.a().windows(2).all(|w| w[0] <= w[1]));
                for color in 1..=3 {
                    assert!(d.is_special(color), "{d:?} color {color}");
                    assert_eq!(d.color_pieces(color).len(), sizes[color - 1]);
                }
            }
        }
    }
}
