use surjection::berger::*;
use surjection::combinatorics::{enumerate_basis, Permutation};
use surjection::homology::homology;
use surjection::operad::OperadElement;

#[test]
fn partial_order_axioms() {
    for k in 0..=3 {
        for n in 1..=3 {
            let all = enumerate_level(k, n);
            for x in &all {
                assert!(x.leq(x).unwrap());
                for y in &all {
                    let xy = x.leq(y).unwrap();
                    if xy && y.leq(x).unwrap() {
                        assert_eq!(x, y);
                    }
                    if !xy {
                        continue;
                    }
                    for z in &all {
                        if y.leq(z).unwrap() {
                            assert!(x.leq(z).unwrap(), "{x:?} {y:?} {z:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn action_is_monotone_and_a_right_action() {
    for k in 1..=3 {
        let all = enumerate_level(k, 3);
        let perms = Permutation::all(k);
        for x in &all {
            for rho in &perms {
                let xr = x.act(rho).unwrap();
                for sigma in &perms {
                    assert_eq!(xr.act(sigma).unwrap(), x.act(&rho.compose(sigma)).unwrap());
                }
                for y in &all {
                    if x.leq(y).unwrap() {
                        assert!(xr.leq(&y.act(rho).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn composition_is_monotone() {
    let outer2 = enumerate_level(2, 3);
    let inner2 = enumerate_level(2, 3);
    let unit = enumerate_level(1, 1).remove(0);
    for x in &outer2 {
        for x2 in outer2.iter().filter(|x2| x.leq(x2).unwrap()) {
            for y in &inner2 {
                for y2 in inner2.iter().filter(|y2| y.leq(y2).unwrap()) {
                    for slots in [[y, &unit], [&unit, y]] {
                        let slots2 = if std::ptr::eq(slots[0], y) { [y2, &unit] } else { [&unit, y2] };
                        let a = x.compose(&[slots[0].clone(), slots[1].clone()]).unwrap();
                        let b = x2.compose(&[slots2[0].clone(), slots2[1].clone()]).unwrap();
                        assert!(a.leq(&b).unwrap(), "{a:?} {b:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn complexity_matches_levels() {
    for k in 1..=3 {
        for d in 0..=4 {
            for f in enumerate_basis(k, d, None) {
                let x = bt_of(&f);
                for n in 1..=4 {
                    assert_eq!(f.complexity() <= n, x.in_level(n), "{f:?}");
                }
            }
        }
    }
}

#[test]
fn structure_maps_respect_the_invariant() {
    // the terms of ⟨f⟩ρ and of f∘(g_1, ..., g_k) lie below the images of (b_f, T_f)
    for k in 1..=3 {
        for d in 0..=2 {
            for f in enumerate_basis(k, d, None) {
                let x = bt_of(&f);
                for rho in Permutation::all(k) {
                    let moved = OperadElement::basis(f.clone()).act(&rho).unwrap();
                    for (g, _) in moved.terms() {
                        assert_eq!(bt_of(g), x.act(&rho).unwrap());
                    }
                }
            }
        }
    }
    let gs: Vec<_> = (0..=2).flat_map(|d| enumerate_basis(2, d, None)).collect();
    for f in &gs {
        for g in &gs {
            for h in &gs {
                let c = OperadElement::basis(f.clone())
                    .compose(&[OperadElement::basis(g.clone()), OperadElement::basis(h.clone())])
                    .unwrap();
                let bound = bt_of(f).compose(&[bt_of(g), bt_of(h)]).unwrap();
                for (t, _) in c.terms() {
                    assert!(bt_of(t).leq(&bound).unwrap(), "{f:?}({g:?},{h:?}) has {t:?}");
                }
            }
        }
    }
}

#[test]
fn subcomplexes_are_contractible() {
    for k in 1..=3 {
        for n in 1..=3 {
            for x in enumerate_level(k, n) {
                // degree 5 is built so that degree 4 is computed exactly
                let c = subcomplex(&x, 5).unwrap();
                let h = homology(&c, 0..=4);
                assert!(h.iter().all(|g| g.exact));
                assert_eq!(h[0].rank, 1, "{x:?}");
                assert!(h[0].torsion.is_empty());
                assert!(h[1..].iter().all(|g| g.is_trivial()), "{x:?}: {h:?}");
            }
        }
    }
}

#[test]
fn subcomplexes_are_invariant_under_s_i_and_contract() {
    for k in 1..=3 {
        for x in enumerate_level(k, 3) {
            let i = x.minimum().unwrap();
            for d in 0..=3 {
                for f in subcomplex_degree_basis(&x, d) {
                    let e = OperadElement::basis(f.clone());
                    let s = s_i_homotopy(&e, i).unwrap();
                    for (g, _) in s.terms() {
                        assert!(bt_of(g).leq(&x).unwrap(), "s_{i}{f:?} leaves {x:?}");
                    }
                    let lhs = s.differential().add(&s_i_homotopy(&e.differential(), i).unwrap()).unwrap();
                    let rhs = e.sub(&s_i_projection(&e, i).unwrap()).unwrap();
                    assert!(lhs.sub(&rhs).unwrap().is_zero(), "{f:?}: {lhs} vs {rhs}");
                }
            }
        }
    }
}
