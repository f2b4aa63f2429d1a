use cotor::nakayama::raw::{decompose, RawModule};
use cotor::{Backend, Nakayama, Obj};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INSTANCES: [(usize, usize); 7] = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4)];

/// Stable Hom dimension from the explicit description of maps between
/// uniserials: `b_0 ↦ b'_k` with `max(0, lb - la) <= k < min(lb, n - la)` and
/// `k ≡ ta - tb (mod m)`.
fn hom_dim_by_hand(m: usize, n: usize, (ta, la): (usize, usize), (tb, lb): (usize, usize)) -> usize {
    let lo = lb.saturating_sub(la);
    let hi = lb.min(n - la);
    (lo..hi.max(lo)).filter(|k| (tb + k) % m == ta % m).count()
}

#[test]
fn stable_hom_matches_closed_forms() {
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        for a in 0..cat.k() {
            for b in 0..cat.k() {
                let (ua, ub) = (cat.uniserial(a), cat.uniserial(b));
                assert_eq!(cat.dim(a, b), hom_dim_by_hand(m, n, ua, ub), "Λ({m},{n}) {ua:?} {ub:?}");
                if m == 1 {
                    let (i, j) = (ua.1, ub.1);
                    assert_eq!(cat.dim(a, b), i.min(j).min(n - i).min(n - j));
                }
            }
        }
    }
}

#[test]
fn documented_small_values() {
    let l13 = Nakayama::build(1, 3).unwrap();
    let (m1, m2) = (l13.parse_label("M1").unwrap(), l13.parse_label("M2").unwrap());
    assert_eq!(l13.shift_obj(&Obj::indec(m1), 1), Obj::indec(m2));
    for (a, b) in [(m1, m1), (m1, m2), (m2, m2), (m2, m1)] {
        assert_eq!(l13.dim(a, b), 1);
    }
    // Ext¹(M1, M1) = Hom(M1, M1[1])
    assert_eq!(
        l13.hom_dim(&Obj::indec(m1), &l13.shift_obj(&Obj::indec(m1), 1))
            .unwrap(),
        1
    );

    let l12 = Nakayama::build(1, 2).unwrap();
    assert_eq!(l12.dim(0, 0), 1);
    assert_eq!(l12.shift_indec(0, 1), 0);

    let l22 = Nakayama::build(2, 2).unwrap();
    let (s0, s1) = (l22.parse_label("S0").unwrap(), l22.parse_label("S1").unwrap());
    assert_eq!(l22.shift_indec(s0, 1), s1);
    assert!(l22.ext_nonzero(s0, s1) && l22.ext_nonzero(s1, s0));
    assert!(!l22.ext_nonzero(s0, s0) && !l22.ext_nonzero(s1, s1));
}

#[test]
fn shift_has_finite_order_and_round_trips() {
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let perm = cat.shift_permutation();
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(!seen[p], "shift is a permutation");
            seen[p] = true;
        }
        // Ω^{-2} sends M(i, ℓ) to M(i - n, ℓ), so the order divides 2m
        for a in 0..cat.k() {
            assert_eq!(cat.shift_indec(a, 2 * m as i64), a);
            for k in -3..=3 {
                assert_eq!(cat.shift_indec(cat.shift_indec(a, k), -k), a);
            }
        }
    }
}

#[test]
fn composition_is_associative_with_identities() {
    for (m, n) in [(1, 4), (2, 3), (2, 4)] {
        let cat = Nakayama::build(m, n).unwrap();
        let k = cat.k();
        for a in 0..k {
            let xa = Obj::indec(a);
            for b in 0..k {
                let xb = Obj::indec(b);
                for f in cat.hom_basis(&xa, &xb) {
                    let left = cat.compose(&cat.identity(&xa), &f).unwrap();
                    let right = cat.compose(&f, &cat.identity(&xb)).unwrap();
                    assert_eq!(left, f);
                    assert_eq!(right, f);
                    for c in 0..k {
                        let xc = Obj::indec(c);
                        for g in cat.hom_basis(&xb, &xc) {
                            let gf = cat.compose(&f, &g).unwrap();
                            for d in 0..k {
                                for h in cat.hom_basis(&xc, &Obj::indec(d)) {
                                    let l = cat.compose(&gf, &h).unwrap();
                                    let r = cat.compose(&f, &cat.compose(&g, &h).unwrap()).unwrap();
                                    assert_eq!(l, r);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn shift_is_a_functor() {
    for (m, n) in [(1, 4), (2, 3), (3, 2), (2, 4)] {
        let cat = Nakayama::build(m, n).unwrap();
        for a in 0..cat.k() {
            let xa = Obj::indec(a);
            assert_eq!(
                cat.shift_mor(&cat.identity(&xa), 1),
                cat.identity(&cat.shift_obj(&xa, 1))
            );
            for b in 0..cat.k() {
                let xb = Obj::indec(b);
                for f in cat.hom_basis(&xa, &xb) {
                    assert_eq!(cat.shift_mor(&cat.shift_mor(&f, 1), -1), f);
                    for c in 0..cat.k() {
                        for g in cat.hom_basis(&xb, &Obj::indec(c)) {
                            let lhs = cat.shift_mor(&cat.compose(&f, &g).unwrap(), 1);
                            let rhs = cat.compose(&cat.shift_mor(&f, 1), &cat.shift_mor(&g, 1)).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn cone_of_identity_and_zero() {
    for (m, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let cat = Nakayama::build(m, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = random_obj(&cat, &mut rng, 3);
            let y = random_obj(&cat, &mut rng, 3);
            let w = cat.cone(&cat.identity(&x));
            assert!(w.tri.c.is_zero());
            let w = cat.cone(&cat.zero_mor(&x, &y));
            assert_eq!(w.tri.c, y.sum(&cat.shift_obj(&x, 1)));
            assert!(cat.triangle_is_exact(&w.tri));
        }
    }
}

#[test]
fn cone_of_the_surjection_onto_the_simple() {
    let cat = Nakayama::build(1, 3).unwrap();
    let (m1, m2) = (Obj::indec(0), Obj::indec(1));
    // the surjection M2 -> M1 is the map sending the top to the top
    let surj = cat
        .hom_basis(&m2, &m1)
        .into_iter()
        .find(|f| {
            let raw = cat.raw_lift(f);
            raw.get(0, 0)
        })
        .unwrap();
    let w = cat.cone(&surj);
    assert_eq!(w.tri.c, m2);
    assert!(cat.triangle_is_exact(&w.tri));
}

#[test]
fn random_cones_are_exact_and_rotate() {
    for (m, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4)] {
        let cat = Nakayama::build(m, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11 + m as u64 * 10 + n as u64);
        for _ in 0..40 {
            let x = random_obj(&cat, &mut rng, 3);
            let y = random_obj(&cat, &mut rng, 3);
            let d = cat.hom_dim_obj(&x, &y);
            let coords = cotor::f2linalg::BitVec::from_bools(&(0..d).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let f = cat.mor_from_coords(&x, &y, coords);
            let t = cat.cone(&f).tri;
            assert!(cat.triangle_is_exact(&t));
            // rotation: the cone of g is X[1]
            let t2 = cat.cone(&t.g).tri;
            assert_eq!(t2.c, cat.shift_obj(&x, 1));
            assert!(cat.triangle_is_exact(&t2));
        }
    }
}

#[test]
fn decomposition_round_trips() {
    for (m, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let summands: Vec<(usize, usize)> = (0..3).map(|_| (rng.gen_range(0..m), rng.gen_range(1..=n))).collect();
            let module = RawModule::from_summands(m, &summands);
            let d = module.dim();
            // scramble with a random homogeneous unitriangular change of basis
            let bits: Vec<bool> = (0..d * d).map(|_| rng.gen_bool(0.5)).collect();
            let q = cotor::f2linalg::F2Matrix::from_fn(d, d, |r, c| {
                r == c || (r < c && module.vert[r] == module.vert[c] && bits[r * d + c])
            });
            let chains = decompose(&module.rebase(&q), n);
            let mut got: Vec<_> = chains.iter().map(|c| (c.top, c.len)).collect();
            let mut want = summands.clone();
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want);
        }
    }
    assert!(decompose(&RawModule::zero(2), 3).is_empty());
}

fn random_obj(cat: &Nakayama, rng: &mut ChaCha8Rng, max: usize) -> Obj {
    let len = rng.gen_range(0..=max);
    Obj::from_ids((0..len).map(|_| rng.gen_range(0..cat.k())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_dim_is_additive(a in 0usize..6, b in 0usize..6, c in 0usize..6) {
        let cat = Nakayama::build(2, 4).unwrap();
        let x = Obj::from_ids(vec![a, b]);
        let y = Obj::indec(c);
        prop_assert_eq!(
            cat.hom_dim(&x, &y).unwrap(),
            cat.hom_dim(&Obj::indec(a), &y).unwrap() + cat.hom_dim(&Obj::indec(b), &y).unwrap()
        );
    }

    #[test]
    fn isomorphisms_need_equal_multisets(a in 0usize..6, b in 0usize..6) {
        let cat = Nakayama::build(2, 4).unwrap();
        let (x, y) = (Obj::indec(a), Obj::indec(b));
        for f in cat.hom_basis(&x, &y) {
            prop_assert_eq!(cat.is_isomorphism(&f), a == b && cat.inverse(&f).is_some());
        }
        prop_assert!(cat.is_isomorphism(&cat.identity(&x)));
        prop_assert!(!cat.is_isomorphism(&cat.zero_mor(&x, &x)));
    }
}

/// `Hom(T, -)` turns every triangle into a long exact sequence.
#[test]
fn triangles_give_long_exact_hom_sequences() {
    use cotor::f2linalg::{F2Matrix, Span};
    for (m, n) in [(1, 4), (2, 3), (3, 2), (2, 4)] {
        let cat = Nakayama::build(m, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..25 {
            let x = random_obj(&cat, &mut rng, 2);
            let y = random_obj(&cat, &mut rng, 2);
            let d = cat.hom_dim_obj(&x, &y);
            let coords = cotor::f2linalg::BitVec::from_bools(&(0..d).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let t = cat.cone(&cat.mor_from_coords(&x, &y, coords)).tri;
            let maps = [&t.f, &t.g, &t.h];
            for probe in 0..cat.k() {
                let p = Obj::indec(probe);
                // exactness at the source of maps[i + 1]
                for i in 0..2 {
                    let (u, v) = (maps[i], maps[i + 1]);
                    let mut image = Span::new(cat.hom_dim_obj(&p, &u.dst));
                    for s in cat.hom_basis(&p, &u.src) {
                        image.insert(&cat.compose(&s, u).unwrap().coords);
                    }
                    let cols: Vec<_> = cat
                        .hom_basis(&p, &v.src)
                        .iter()
                        .map(|s| cat.compose(s, v).unwrap().coords)
                        .collect();
                    let kernel_dim = if cols.is_empty() {
                        0
                    } else {
                        let mat = F2Matrix::from_cols(cat.hom_dim_obj(&p, &v.dst), &cols);
                        mat.cols() - mat.rank()
                    };
                    assert_eq!(image.dim(), kernel_dim, "Λ({m},{n}) probe {probe} position {i}");
                }
            }
        }
    }
}
