use cotor::polygon::{crossing, rotate, Arc, PolygonCat};
use cotor::subcat::{enumerate_subcats, is_rigid, right_perp};
use cotor::{Backend, Obj, Subcat};
use proptest::prelude::*;

fn arcs(p: &PolygonCat, list: &[(usize, usize)]) -> Subcat {
    list.iter().map(|&(i, j)| p.arc_id(Arc::new(i, j)).unwrap()).collect()
}

#[test]
fn small_counts() {
    let p4 = PolygonCat::new(4).unwrap();
    assert_eq!(p4.enumerate_rigid().len(), 3);
    let p5 = PolygonCat::new(5).unwrap();
    assert_eq!(p5.enumerate_rigid().len(), 11);
    assert_eq!(p5.triangulations().len(), 5);
    // Catalan numbers
    for (n, c) in [(6, 14), (7, 42), (8, 132)] {
        assert_eq!(PolygonCat::new(n).unwrap().triangulations().len(), c);
    }
}

#[test]
fn rigid_enumeration_matches_brute_force() {
    for n in 4..=7 {
        let p = PolygonCat::new(n).unwrap();
        let brute = enumerate_subcats(p.num_indecs(), |s| is_rigid(&p, s), false).unwrap();
        assert_eq!(p.enumerate_rigid(), brute);
    }
}

#[test]
fn ptolemy_matches_perp_closed() {
    let expected = [(4, 4), (5, 17), (6, 82)];
    for (n, count) in expected {
        let p = PolygonCat::new(n).unwrap();
        let pt = p.enumerate_ptolemy();
        assert_eq!(pt.len(), count, "N={n}");
        assert_eq!(pt, p.enumerate_perp_closed(), "N={n}");
        let full = Subcat::full(p.num_indecs());
        assert!(pt.contains(&Subcat::EMPTY) && pt.contains(&full));
        for r in p.enumerate_rigid() {
            assert!(pt.contains(&r));
        }
    }
}

#[test]
fn shift_examples() {
    let p5 = PolygonCat::new(5).unwrap();
    let a = Obj::indec(p5.arc_id(Arc::new(0, 2)).unwrap());
    assert_eq!(p5.shift_obj(&a, 5), a);
    let p4 = PolygonCat::new(4).unwrap();
    let d1 = p4.arc_id(Arc::new(0, 2)).unwrap();
    assert_eq!(p4.label(p4.shift_indec(d1, 1)), "arc(1,3)");
    assert_eq!(p4.parse_label(" arc(2, 0) "), Some(d1));
}

#[test]
fn cut_reduction_examples() {
    let p = PolygonCat::new(5).unwrap();
    let red = p.cut_reduction(Subcat::EMPTY).unwrap();
    assert_eq!(red.pieces, vec![vec![0, 1, 2, 3, 4]]);
    assert_eq!(red.z, Subcat::full(5));
    assert!(red.dictionary.iter().all(|d| d.arc == d.local));

    let i = arcs(&p, &[(0, 2)]);
    let red = p.cut_reduction(i).unwrap();
    assert_eq!(red.z, arcs(&p, &[(0, 2), (0, 3), (2, 4)]));
    assert_eq!(red.pieces, vec![vec![0, 1, 2], vec![0, 2, 3, 4]]);
    assert_eq!(red.dictionary.len(), 2);
    let a03 = p.arc_id(Arc::new(0, 3)).unwrap();
    let a24 = p.arc_id(Arc::new(2, 4)).unwrap();
    assert_eq!(red.reduced_shift(a03), Some(a24));
    assert_eq!(red.reduced_shift(a24), Some(a03));

    let tri = arcs(&p, &[(0, 2), (0, 3)]);
    let red = p.cut_reduction(tri).unwrap();
    assert!(red.pieces.iter().all(|q| q.len() == 3));
    assert!(red.dictionary.is_empty());

    assert!(p.cut_reduction(arcs(&p, &[(0, 2), (1, 3)])).is_err());
}

#[test]
fn dictionary_respects_crossings() {
    for n in 5..=8 {
        let p = PolygonCat::new(n).unwrap();
        for i in p.enumerate_rigid() {
            let red = p.cut_reduction(i).unwrap();
            for d in &red.dictionary {
                for e in &red.dictionary {
                    let same_piece = d.piece == e.piece;
                    assert_eq!(crossing(d.arc, e.arc), same_piece && crossing(d.local, e.local));
                }
            }
        }
    }
}

#[test]
fn zz_flip() {
    let p = PolygonCat::new(5).unwrap();
    let i = arcs(&p, &[(0, 2)]);
    let a = arcs(&p, &[(0, 2), (0, 3)]);
    assert_eq!(p.zz_mutate(i, a, 0).unwrap(), a);
    let b = p.zz_mutate(i, a, 1).unwrap();
    assert_eq!(b, arcs(&p, &[(0, 2), (2, 4)]));
    assert_eq!(p.zz_mutate(i, b, 1).unwrap(), a);
    assert_eq!(p.zz_mutate(i, a, -1).unwrap(), b);
    assert!(p.zz_mutate(i, arcs(&p, &[(0, 3)]), 1).is_err());
}

#[test]
fn polygon_cotorsion_pairs_are_dual() {
    let p = PolygonCat::new(6).unwrap();
    for (u, v) in p.cotorsion_pairs() {
        assert_eq!(v, right_perp(&p, u, -1));
        assert_eq!(u, cotor::subcat::left_perp(&p, v, 1));
    }
}

proptest! {
    #[test]
    fn crossing_is_symmetric_and_rotation_invariant(n in 4usize..=12, a in 0usize..64, b in 0usize..64, k in -12i64..12) {
        let p = PolygonCat::new(n).unwrap();
        let (a, b) = (p.arc(a % p.num_indecs()), p.arc(b % p.num_indecs()));
        prop_assert_eq!(crossing(a, b), crossing(b, a));
        prop_assert!(!crossing(a, a));
        prop_assert_eq!(crossing(a, b), crossing(rotate(a, k, n), rotate(b, k, n)));
        prop_assert_eq!(rotate(rotate(a, k, n), -k, n), a);
        prop_assert_eq!(rotate(a, n as i64, n), a);
    }
}

#[test]
fn zz_class_is_closed_under_flips() {
    for n in 5..=8 {
        let p = PolygonCat::new(n).unwrap();
        let i = Subcat::single(p.arc_id(Arc::new(0, 2)).unwrap());
        let class = p.zz_class(i).unwrap();
        assert!(!class.is_empty());
        let set: Vec<Subcat> = class.iter().map(|c| c.0).collect();
        for (a, _) in &class {
            for k in -2..=2 {
                assert!(set.contains(&p.zz_mutate(i, *a, k).unwrap()), "N={n} k={k}");
            }
        }
    }
}
