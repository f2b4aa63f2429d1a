use std::collections::BTreeSet;

use cotor::pairs::{CotorsionPair, Engine, Tcp};
use cotor::{match_backends, Nakayama, PolygonCat, Subcat, ZIQuotient, ZiPair};

const INSTANCES: [(usize, usize); 5] = [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)];

#[test]
fn bijection_on_every_good_tcp() {
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let e = Engine::new(&cat);
        let cps = e.enumerate_cotorsion().unwrap().pairs;
        for p in e.enumerate_tcps(&cps).into_iter().filter(Tcp::is_concentric) {
            let q = ZIQuotient::build(e, p).unwrap();
            if !(q.condition_i().unwrap().is_yes() && e.condition_ii(&p, &q.d).is_yes()) {
                continue;
            }
            let r = q.verify_bijection(&cps).unwrap();
            assert!(r.passed(), "Λ({m},{n}) {p:?}: {:?}", r.failures);
            assert!(r.mutable > 0);
        }
    }
}

#[test]
fn trivial_hovey_mutation_is_shift() {
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let e = Engine::new(&cat);
        let cps = e.enumerate_cotorsion().unwrap().pairs;
        let q = ZIQuotient::build(e, Tcp::trivial_hovey(cat.k())).unwrap();
        let r = q.verify_bijection(&cps).unwrap();
        assert!(r.passed());
        assert_eq!(r.mutable, cps.len());
        for ab in &cps {
            assert_eq!(q.i_map(q.r_map(*ab)).unwrap(), *ab);
            for k in -2..=2 {
                let shifted = CotorsionPair::new(e.shift(ab.u, k), e.shift(ab.v, k));
                assert_eq!(q.mutate(*ab, k).unwrap(), shifted);
            }
        }
    }
}

#[test]
fn mutate_example_on_two_simples() {
    let cat = Nakayama::build(2, 2).unwrap();
    let e = Engine::new(&cat);
    let q = ZIQuotient::build(e, Tcp::trivial_hovey(cat.k())).unwrap();
    let s0 = Subcat::parse(&cat, "S0").unwrap();
    let s1 = Subcat::parse(&cat, "S1").unwrap();
    assert_eq!(
        q.mutate(CotorsionPair::new(s0, s0), 1).unwrap(),
        CotorsionPair::new(s1, s1)
    );
}

#[test]
fn inverse_image_extremes() {
    let cat = Nakayama::build(2, 3).unwrap();
    let e = Engine::new(&cat);
    let cps = e.enumerate_cotorsion().unwrap().pairs;
    for p in e.enumerate_tcps(&cps).into_iter().filter(Tcp::is_concentric) {
        let q = ZIQuotient::build(e, p).unwrap();
        if !(q.condition_i().unwrap().is_yes() && e.condition_ii(&p, &q.d).is_yes()) {
            continue;
        }
        let all = q.obj_set();
        let none = Subcat::default();
        assert_eq!(q.i_map(ZiPair { l: all, r: none }).unwrap(), p.outer());
        assert_eq!(q.i_map(ZiPair { l: none, r: all }).unwrap(), p.inner());
    }
}

#[test]
fn degenerate_tcps_have_singleton_classes() {
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let e = Engine::new(&cat);
        let cps = e.enumerate_cotorsion().unwrap().pairs;
        for ab in &cps {
            let q = ZIQuotient::build(e, Tcp::degenerate(*ab)).unwrap();
            let r = q.verify_bijection(&cps).unwrap();
            assert!(r.passed());
            assert_eq!((r.mutable, r.zi_pairs), (1, 1));
            let g = q.orbit_graph(&cps).unwrap();
            assert_eq!(g.edges, vec![(0, 0)]);
        }
    }
}

#[test]
fn orbit_graph_of_two_simples() {
    let cat = Nakayama::build(2, 2).unwrap();
    let e = Engine::new(&cat);
    let cps = e.enumerate_cotorsion().unwrap().pairs;
    let q = ZIQuotient::build(e, Tcp::trivial_hovey(cat.k())).unwrap();
    let g = q.orbit_graph(&cps).unwrap();
    assert_eq!(g.cycle_lengths(), vec![1, 1, 2]);
    let dot = g.to_dot(&cat);
    assert!(dot.starts_with("digraph mutation {"));
    assert_eq!(dot.matches("->").count(), 4);
}

#[test]
fn zz_class_is_sandwich() {
    let mut seen = 0;
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let e = Engine::new(&cat);
        let cps = e.enumerate_cotorsion().unwrap().pairs;
        for p in e.enumerate_tcps(&cps) {
            if !p.is_concentric() || !e.classify(&p).zz_setting {
                continue;
            }
            seen += 1;
            let q = ZIQuotient::build(e, p).unwrap();
            let r = q.verify_bijection(&cps).unwrap();
            assert_eq!(r.zz_class_agrees, Some(true));
        }
    }
    assert!(seen > 0);
}

/// Over `S0` the ZZ pair has `Z = I`, so the only mutable pair is `(S0, S0)`
/// and it is fixed; the matched arc of the square is fixed by the flip too.
#[test]
fn zz_over_a_simple_matches_square() {
    let cat = Nakayama::build(2, 2).unwrap();
    let e = Engine::new(&cat);
    let cps = e.enumerate_cotorsion().unwrap().pairs;
    let s0 = Subcat::parse(&cat, "S0").unwrap();
    let p = Tcp::degenerate(CotorsionPair::new(s0, s0));
    assert!(e.classify(&p).zz_setting);
    let q = ZIQuotient::build(e, p).unwrap();
    assert_eq!(q.d.z, s0);
    let mp: BTreeSet<_> = q.mutable_class(&cps).into_iter().collect();
    assert_eq!(mp.len(), 1);
    assert_eq!(
        q.mutate(CotorsionPair::new(s0, s0), 1).unwrap(),
        CotorsionPair::new(s0, s0)
    );

    let square = PolygonCat::new(4).unwrap();
    let phi = match_backends(&cat, &square).unwrap();
    let arc = Subcat::single(phi[s0.iter().next().unwrap()]);
    assert_eq!(square.zz_mutate(arc, arc, 1).unwrap(), arc);
}

#[test]
fn pentagon_zz_flip_is_a_two_cycle() {
    let p = PolygonCat::new(5).unwrap();
    let i = Subcat::parse(&p, "arc(0,2)").unwrap();
    let red = p.cut_reduction(i).unwrap();
    let tri: Vec<Subcat> = p
        .triangulations()
        .into_iter()
        .filter(|t| i.is_subset(*t) && t.is_subset(red.z))
        .collect();
    assert_eq!(tri.len(), 2);
    assert_eq!(p.zz_mutate(i, tri[0], 1).unwrap(), tri[1]);
    assert_eq!(p.zz_mutate(i, tri[1], 1).unwrap(), tri[0]);
    assert_eq!(p.zz_mutate(i, tri[0], 2).unwrap(), tri[0]);
}
