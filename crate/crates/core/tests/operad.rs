use num_bigint::BigInt;
use proptest::prelude::*;
use surjection::combinatorics::{enumerate_basis, Permutation};
use surjection::operad::OperadElement;

/// A homogeneous combination of up to three basis elements.
fn element(arities: std::ops::RangeInclusive<usize>, max_degree: usize) -> impl Strategy<Value = OperadElement> {
    (arities, 0..=max_degree)
        .prop_flat_map(|(k, d)| {
            let n = enumerate_basis(k, d, None).len();
            (Just((k, d)), prop::collection::vec((0..n.max(1), -3i64..=3), 1..=3))
        })
        .prop_map(|((k, d), picks)| {
            let basis = enumerate_basis(k, d, None);
            let mut e = OperadElement::zero(k, d);
            for (i, c) in picks {
                if let Some(f) = basis.get(i) {
                    e = e.add(&OperadElement::basis(f.clone()).scale(&BigInt::from(c))).unwrap();
                }
            }
            e
        })
}

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn same(a: &OperadElement, b: &OperadElement) -> bool {
    match a.sub(b) {
        Ok(d) => d.is_zero(),
        Err(_) => a.is_zero() && b.is_zero(),
    }
}

fn sign(parity: usize) -> BigInt {
    BigInt::from(if parity % 2 == 0 { 1 } else { -1 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn differential_squares_to_zero(e in element(1..=4, 4)) {
        prop_assert!(e.differential().differential().is_zero());
    }

    #[test]
    fn differential_is_equivariant(
        (e, rho) in element(1..=4, 4).prop_flat_map(|e| { let k = e.arity(); (Just(e), permutation(k)) })
    ) {
        prop_assert!(same(&e.act(&rho).unwrap().differential(), &e.differential().act(&rho).unwrap()));
    }

    #[test]
    fn action_is_a_right_action(
        (e, rho, sigma) in element(1..=4, 3)
            .prop_flat_map(|e| { let k = e.arity(); (Just(e), permutation(k), permutation(k)) })
    ) {
        let k = e.arity();
        prop_assert!(same(&e.act(&Permutation::identity(k)).unwrap(), &e));
        let stepwise = e.act(&rho).unwrap().act(&sigma).unwrap();
        prop_assert!(same(&stepwise, &e.act(&rho.compose(&sigma)).unwrap()));
    }

    #[test]
    fn unit_laws(e in element(1..=3, 3)) {
        let units = vec![OperadElement::unit(); e.arity()];
        prop_assert!(same(&e.compose(&units).unwrap(), &e));
        prop_assert!(same(&OperadElement::unit().compose(&[e.clone()]).unwrap(), &e));
    }

    #[test]
    fn composition_is_associative(
        f in element(1..=2, 2),
        gs in prop::collection::vec(element(1..=2, 1), 2),
        hs in prop::collection::vec(element(1..=2, 1), 4),
    ) {
        let gs = &gs[..f.arity()];
        let inner_arity: usize = gs.iter().map(OperadElement::arity).sum();
        let hs = &hs[..inner_arity];
        let left = f.compose(gs).unwrap().compose(hs).unwrap();
        // the h's of block i move past g_{i+1}, ..., g_k
        let mut start = 0;
        let mut inner = Vec::new();
        let mut parity = 0;
        for (i, g) in gs.iter().enumerate() {
            let block = &hs[start..start + g.arity()];
            let block_degree: usize = block.iter().map(OperadElement::degree).sum();
            parity += block_degree * gs[i + 1..].iter().map(OperadElement::degree).sum::<usize>();
            inner.push(g.compose(block).unwrap());
            start += g.arity();
        }
        let right = f.compose(&inner).unwrap().scale(&sign(parity));
        prop_assert!(same(&left, &right));
    }

    #[test]
    fn leibniz_rule(f in element(1..=3, 2), gs in prop::collection::vec(element(1..=2, 2), 3)) {
        let gs = &gs[..f.arity()];
        let left = f.compose(gs).unwrap().differential();
        let mut right = f.differential().compose(gs).unwrap();
        let mut before = f.degree();
        for i in 0..gs.len() {
            let mut varied = gs.to_vec();
            varied[i] = gs[i].differential();
            let term = f.compose(&varied).unwrap().scale(&sign(before));
            right = right.add(&term).unwrap();
            before += gs[i].degree();
        }
        prop_assert!(same(&left, &right));
    }

    #[test]
    fn composition_is_equivariant_in_blocks(
        (f, rho) in element(2..=3, 2).prop_flat_map(|f| { let k = f.arity(); (Just(f), permutation(k)) }),
        gs in prop::collection::vec(element(1..=2, 2), 3),
    ) {
        let k = f.arity();
        let gs = &gs[..k];
        let inv = rho.inverse();
        let left = f.act(&rho).unwrap().compose(gs).unwrap();
        let permuted: Vec<OperadElement> = (1..=k).map(|s| gs[inv.apply(s) - 1].clone()).collect();
        // block i moves to slot ρ(i)
        let mut slot_offset = vec![0; k + 2];
        for s in 1..=k {
            slot_offset[s + 1] = slot_offset[s] + permuted[s - 1].arity();
        }
        let mut images = Vec::new();
        for (i, g) in gs.iter().enumerate() {
            for t in 1..=g.arity() {
                images.push(slot_offset[rho.apply(i + 1)] + t);
            }
        }
        let block = Permutation::from_images(&images).unwrap();
        let mut parity = 0;
        for a in 1..=k {
            for b in a + 1..=k {
                if rho.apply(a) > rho.apply(b) {
                    parity += gs[a - 1].degree() * gs[b - 1].degree();
                }
            }
        }
        let right = f.compose(&permuted).unwrap().act(&block).unwrap().scale(&sign(parity));
        prop_assert!(same(&left, &right));
    }

    #[test]
    fn complexity_filtration_is_closed(e in element(1..=3, 4), gs in prop::collection::vec(element(1..=2, 2), 3)) {
        let n = e.complexity_bound().max(1);
        prop_assert!(e.differential().in_sn(n));
        let gs: Vec<OperadElement> = gs[..e.arity()].iter().filter(|g| g.in_sn(n)).cloned().collect();
        if gs.len() == e.arity() {
            prop_assert!(e.compose(&gs).unwrap().in_sn(n));
        }
    }
}
