use cotor::pairs::{CotorsionPair, Engine, Tcp};
use cotor::subcat::Verdict;
use cotor::{Backend, Nakayama, Obj, Subcat};

const INSTANCES: [(usize, usize); 5] = [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)];

fn s(cat: &Nakayama, labels: &str) -> Subcat {
    Subcat::parse(cat, labels).unwrap()
}

#[test]
fn cotorsion_counts() {
    let l13 = Nakayama::build(1, 3).unwrap();
    let e = Engine::new(&l13);
    let cps = e.enumerate_cotorsion().unwrap();
    assert!(cps.complete());
    assert_eq!(cps.pairs.len(), 2);

    let l22 = Nakayama::build(2, 2).unwrap();
    let e = Engine::new(&l22);
    let cps = e.enumerate_cotorsion().unwrap().pairs;
    assert_eq!(cps.len(), 4);
    let ct: Vec<_> = cps.iter().filter(|p| e.classify_pair(**p).cluster_tilting).collect();
    assert_eq!(ct.len(), 2);
    let s0 = s(&l22, "S0");
    assert!(cps.contains(&CotorsionPair::new(s0, s0)));
}

#[test]
fn enumeration_matches_brute_force() {
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let e = Engine::new(&cat);
        let fast = e.enumerate_cotorsion().unwrap();
        let brute = e.enumerate_cotorsion_brute().unwrap();
        assert!(fast.complete() && brute.complete());
        assert_eq!(fast.pairs, brute.pairs, "Λ({m},{n})");
        for p in &fast.pairs {
            assert!(e.duality_holds(*p));
        }
        let full = e.full();
        assert!(fast.pairs.contains(&CotorsionPair::new(full, Subcat::EMPTY)));
        assert!(fast.pairs.contains(&CotorsionPair::new(Subcat::EMPTY, full)));
    }
}

#[test]
fn perp_examples() {
    let l13 = Nakayama::build(1, 3).unwrap();
    let m2 = l13.parse_label("M2").unwrap();
    assert_eq!(cotor::subcat::right_perp(&l13, Subcat::single(m2), 0), Subcat::EMPTY);
    let l22 = Nakayama::build(2, 2).unwrap();
    let s0 = s(&l22, "S0");
    assert_eq!(cotor::subcat::right_perp(&l22, s0, -1), s0);
    let e = Engine::new(&l22);
    assert_eq!(cotor::subcat::ext_closure(&l22, s0, &e.cfg).0, s0);
}

#[test]
fn tcp_examples() {
    let l13 = Nakayama::build(1, 3).unwrap();
    let e = Engine::new(&l13);
    let cps = e.enumerate_cotorsion().unwrap().pairs;
    let full = e.full();
    let swapped = Tcp {
        s: full,
        t: Subcat::EMPTY,
        u: Subcat::EMPTY,
        v: full,
    };
    assert!(!e.is_tcp(&swapped, &cps).unwrap());
    let triv = Tcp::trivial_hovey(e.k());
    assert!(e.is_tcp(&triv, &cps).unwrap());
    let d = e.derived_sets(&triv);
    assert_eq!(
        (d.i, d.z, d.ni, d.nf),
        (Subcat::EMPTY, full, Subcat::EMPTY, Subcat::EMPTY)
    );
    assert!(e.is_tcp(&Tcp::degenerate(cps[0]), &cps).unwrap());
    let bogus = Tcp::degenerate(CotorsionPair::new(Subcat::single(0), Subcat::EMPTY));
    assert!(e.is_tcp(&bogus, &cps).is_err());

    let flags = e.classify_pair(CotorsionPair::new(full, Subcat::EMPTY));
    assert!(flags.t_structure && flags.co_t_structure);
}

#[test]
fn derived_sets_and_conditions() {
    let l22 = Nakayama::build(2, 2).unwrap();
    let e = Engine::new(&l22);
    let s0 = s(&l22, "S0");
    let p = Tcp::degenerate(CotorsionPair::new(s0, s0));
    let d = e.derived_sets(&p);
    assert_eq!((d.i, d.z), (s0, s0));
    assert_eq!((d.ni, d.nf), (e.full(), e.full()));
    assert!(d.identities_hold);
    assert_eq!(e.condition_ii(&p, &d), Verdict::Yes);
    let h = e.is_hovey(&p, &d);
    assert_eq!(h.verdict, Verdict::Yes);
    assert_eq!(h.n, e.full());
    assert!(e.classify(&p).zz_setting);
}

#[test]
fn h_vanishing_trivial_cases() {
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let e = Engine::new(&cat);
        for p in e.enumerate_cotorsion().unwrap().pairs {
            for x in p.u.iter().chain(p.v.iter()) {
                assert_eq!(e.h_vanishes(&Obj::indec(x), p), Verdict::Yes);
            }
        }
    }
}

#[test]
fn parsing_pairs_and_tcps() {
    let cat = Nakayama::build(2, 2).unwrap();
    let s0 = s(&cat, "S0");
    assert_eq!(
        CotorsionPair::parse(&cat, "U=[S0];V=[S0]").unwrap(),
        CotorsionPair::new(s0, s0)
    );
    assert_eq!(
        CotorsionPair::parse(&cat, "V=C; U=0").unwrap(),
        CotorsionPair::new(Subcat::EMPTY, Subcat::full(2))
    );
    assert_eq!(Tcp::parse(&cat, "trivial-hovey").unwrap(), Tcp::trivial_hovey(2));
    assert_eq!(
        Tcp::parse(&cat, "degenerate:U=[S0];V=[S0]").unwrap(),
        Tcp::degenerate(CotorsionPair::new(s0, s0))
    );
    assert_eq!(Tcp::parse(&cat, "S=0;T=C;U=C;V=0").unwrap(), Tcp::trivial_hovey(2));
    assert!(CotorsionPair::parse(&cat, "U=[S0]").is_err());
    assert!(CotorsionPair::parse(&cat, "U=[S7];V=0").is_err());
    assert!(Tcp::parse(&cat, "X=0").is_err());
}
