use proptest::prelude::*;
use surjection::combinatorics::{
    complexity, enumerate_basis, enumerate_diagrams, enumerate_partitions, OverlappingPartition, Surjection,
};

fn basis_element() -> impl Strategy<Value = Surjection> {
    (1usize..=4, 0usize..=4, any::<prop::sample::Index>()).prop_map(|(k, d, i)| {
        // arity 1 has only ⟨1⟩
        let d = if k == 1 { 0 } else { d };
        let basis = enumerate_basis(k, d, None);
        basis[i.index(basis.len())].clone()
    })
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn tau_is_the_fiberwise_order_preserving_bijection(f in basis_element()) {
        let tau = f.tau();
        let mut sorted = tau.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=f.len()).collect::<Vec<_>>());
        for a in 1..=f.len() {
            for b in a + 1..=f.len() {
                let (fa, fb) = (f.at(a), f.at(b));
                // values first, then positions within a fiber
                prop_assert_eq!(tau[a - 1] < tau[b - 1], fa <= fb);
            }
        }
    }

    #[test]
    fn partition_counts_and_round_trips(first in 0usize..3, len in 1usize..5, m in 1usize..5) {
        let last = first + len - 1;
        let all = enumerate_partitions(first, last, m).unwrap();
        prop_assert_eq!(all.len(), binomial(len + m - 2, m - 1));
        for p in &all {
            prop_assert_eq!(p.piece_count(), m);
            let pieces = p.pieces();
            prop_assert_eq!(*pieces[0].start(), first);
            prop_assert_eq!(*pieces[m - 1].end(), last);
            for w in pieces.windows(2) {
                prop_assert_eq!(w[0].end(), w[1].start());
            }
            let again = OverlappingPartition::from_overlaps(first, last, p.overlaps().to_vec()).unwrap();
            prop_assert_eq!(&again, p);
            let explicit: Vec<Vec<usize>> = pieces.iter().map(|r| r.clone().collect()).collect();
            prop_assert_eq!(&OverlappingPartition::from_pieces(first, last, &explicit).unwrap(), p);
        }
    }

    #[test]
    fn complexity_does_not_grow_under_ordered_maps(
        f in basis_element(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..8),
    ) {
        // an order-preserving g into the positions of f
        let mut g: Vec<usize> = picks.iter().map(|i| i.index(f.len()) + 1).collect();
        g.sort_unstable();
        let fg: Vec<u8> = g.iter().map(|&j| f.at(j) as u8).collect();
        prop_assert!(complexity(&fg) <= f.complexity());
        // making g onto gives equality
        let mut onto = g.clone();
        onto.extend(1..=f.len());
        onto.sort_unstable();
        let fg: Vec<u8> = onto.iter().map(|&j| f.at(j) as u8).collect();
        prop_assert_eq!(complexity(&fg), f.complexity());
    }

    #[test]
    fn diagrams_are_special(f in basis_element(), sizes in prop::collection::vec(1usize..4, 4)) {
        let sizes = &sizes[..f.arity()];
        for d in enumerate_diagrams(&f, sizes).unwrap() {
            for color in 1..=f.arity() {
                prop_assert!(d.is_special(color));
            }
        }
    }
}
