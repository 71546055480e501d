use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use surjection::homology::{homology, smith_normal_form, GradedComplex, IntegerMatrix};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

/// Laplace expansion; fine for the 5×5 sizes used here.
fn det(m: &[Vec<i128>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    (r - 1..n)
        .flat_map(|last| {
            subsets(last, r - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Determinantal divisors: gcd of all r×r minors, for r = 1, 2, ....
fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let (rows, cols) = (m.len(), m[0].len());
    let mut out = Vec::new();
    for r in 1..=rows.min(cols) {
        let mut g = 0;
        for rs in subsets(rows, r) {
            for cs in subsets(cols, r) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect()).collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g);
    }
    out
}

proptest! {
    #[test]
    fn smith_form_is_a_unimodular_diagonalization(rows in matrix()) {
        let m = IntegerMatrix::from_dense(&rows).unwrap();
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap().to_dense(), s.d.to_dense());
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        let factors = s.invariant_factors();
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j || i >= factors.len() {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        // d_1 ⋯ d_r is the gcd of the r×r minors
        let divisors = determinantal_divisors(&rows);
        prop_assert_eq!(divisors.len(), factors.len());
        let mut product = BigInt::one();
        for (f, g) in factors.iter().zip(&divisors) {
            product *= f;
            prop_assert_eq!(&product, &BigInt::from(*g));
        }
    }

    #[test]
    fn two_term_homology_is_kernel_and_cokernel(rows in matrix()) {
        let (n1, n0) = (rows.len(), rows[0].len());
        let labels = |n: usize, p: &str| (0..n).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
        let m = IntegerMatrix::from_dense(&rows).unwrap();
        let c = GradedComplex::new(vec![labels(n0, "a"), labels(n1, "b")], vec![m], false).unwrap();
        let h = homology(&c, 0..=1);
        let divisors = determinantal_divisors(&rows);
        let rank = divisors.len();
        prop_assert_eq!(h[0].rank, n0 - rank);
        prop_assert_eq!(h[1].rank, n1 - rank);
        prop_assert!(h[1].torsion.is_empty());
        let torsion_order: BigInt = h[0].torsion.iter().product();
        let expected = BigInt::from(divisors.last().copied().unwrap_or(1));
        prop_assert_eq!(torsion_order, expected);
        prop_assert!(h[0].torsion.iter().all(|t| t > &BigInt::one()));
    }
}
