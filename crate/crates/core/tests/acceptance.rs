//! One PASS/FAIL line per acceptance criterion.
//!
//! Runs without the libtest harness. Exits nonzero only when a criterion that
//! is expected to hold fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cotor::suites::{Outcome, Suite, Workbench};
use cotor::{match_backends, CotorsionPair, Engine, Nakayama, Obj, PolygonCat, StarConfig, Subcat, Tcp, ZIQuotient};

const INSTANCES: [(usize, usize); 5] = [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)];
const SEED: u64 = 2024;

/// Criteria known not to hold as stated; see the README.
const EXPECTED_FAIL: [u32; 1] = [12];

struct Line {
    id: u32,
    ok: bool,
    detail: String,
}

fn suite_line(id: u32, suite: Suite, wbs: &[(String, Workbench)]) -> Line {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, wb) in wbs {
        match wb.run(suite, SEED) {
            Ok(r) => {
                checked += r.checked;
                if r.outcome != Outcome::Pass {
                    bad.push(format!(
                        "{name}: {:?} {:?}",
                        r.violations.first(),
                        r.inconclusive.first()
                    ));
                }
            }
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    Line {
        id,
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{suite}: {checked} checks")
        } else {
            format!("{suite}: {}", bad.join("; "))
        },
    }
}

fn counts() -> Line {
    let mut got = Vec::new();
    let l13 = Nakayama::build(1, 3).unwrap();
    got.push(Engine::new(&l13).enumerate_cotorsion().unwrap().pairs.len());
    let l22 = Nakayama::build(2, 2).unwrap();
    let cps = Engine::new(&l22).enumerate_cotorsion().unwrap().pairs;
    got.push(cps.len());
    got.push(cps.iter().filter(|p| p.u == p.v).count());
    let pent = PolygonCat::new(5).unwrap();
    got.push(pent.triangulations().len());
    got.push(pent.enumerate_rigid().len());
    let want = vec![2, 4, 2, 5, 11];
    Line {
        id: 3,
        ok: got == want,
        detail: format!("Λ(1,3) cp, Λ(2,2) cp, cluster tilting, N=5 triangulations, rigid = {got:?} (want {want:?})"),
    }
}

fn zz_showcase() -> Line {
    let cat = Nakayama::build(2, 2).unwrap();
    let e = Engine::new(&cat);
    let cps = e.enumerate_cotorsion().unwrap().pairs;
    let s0 = Subcat::parse(&cat, "S0").unwrap();
    let ct: Vec<CotorsionPair> = cps.iter().copied().filter(|p| p.u == p.v).collect();
    let mut notes = Vec::new();

    // The twin pair with I = {S0} in the ZZ setting.
    let p = Tcp::degenerate(CotorsionPair::new(s0, s0));
    let q = ZIQuotient::build(e, p).unwrap();
    let through_s0: Vec<CotorsionPair> = ct.iter().copied().filter(|c| s0.is_subset(c.u)).collect();
    notes.push(format!(
        "{} cluster tilting pairs, {} through S0, Z = [{}]",
        ct.len(),
        through_s0.len(),
        q.d.z.labels(&cat).join(",")
    ));
    let mut swap = through_s0.len() == 2;
    for &c in &through_s0 {
        match q.mutate(c, 1) {
            Ok(m) => {
                swap &= m != c && through_s0.contains(&m);
                notes.push(format!(
                    "μ₁[{}] = [{}]",
                    c.u.labels(&cat).join(","),
                    m.u.labels(&cat).join(",")
                ));
            }
            Err(err) => {
                swap = false;
                notes.push(format!("μ₁ failed: {err}"));
            }
        }
    }

    // Same question on the square through the dictionary.
    let square = PolygonCat::new(4).unwrap();
    let agree = match match_backends(&cat, &square) {
        Some(phi) => {
            let image = |s: Subcat| Subcat::from_ids(s.iter().map(|i| phi[i]));
            through_s0.iter().all(|c| {
                let m = q.mutate(*c, 1).unwrap();
                square.zz_mutate(image(s0), image(c.u), 1).ok() == Some(image(m.u))
            })
        }
        None => false,
    };
    notes.push(format!("polygon flip agrees: {agree}"));

    // Σ agrees with ⟨1⟩ in every ZZ setting found.
    let mut shift_ok = true;
    for (m, n) in INSTANCES {
        let cat = Nakayama::build(m, n).unwrap();
        let e = Engine::new(&cat);
        let cps = e.enumerate_cotorsion().unwrap().pairs;
        for p in e
            .enumerate_tcps(&cps)
            .into_iter()
            .filter(|p| p.is_concentric() && e.classify(p).zz_setting)
        {
            let Ok(q) = ZIQuotient::build(e, p) else {
                shift_ok = false;
                continue;
            };
            for &z in q.objects() {
                let z = Obj::indec(z);
                shift_ok &= q.Sigma_obj(&z) == q.strip(&q.bracket_obj(&z, 1));
            }
        }
    }
    notes.push(format!("Σ ≅ ⟨1⟩: {shift_ok}"));
    Line {
        id: 12,
        ok: swap && agree && shift_ok,
        detail: notes.join("; "),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn performance() -> Line {
    let (ok1, t1) = timed(|| {
        let cat = Nakayama::build(2, 2).unwrap();
        let wb = Workbench::new(&cat, StarConfig::default()).unwrap();
        wb.run(Suite::Bijection, SEED)
            .map(|r| r.outcome == Outcome::Pass)
            .unwrap_or(false)
    });
    let (ok2, t2) = timed(|| {
        let hex = PolygonCat::new(6).unwrap();
        (
            hex.enumerate_rigid().len(),
            hex.triangulations().len(),
            hex.enumerate_ptolemy().len(),
        )
    });
    let (ok3, t3) = timed(|| {
        let cat = Nakayama::build(2, 3).unwrap();
        let wb = Workbench::new(&cat, StarConfig::default()).unwrap();
        Suite::ALL
            .into_iter()
            .all(|s| wb.run(s, SEED).map(|r| r.outcome == Outcome::Pass).unwrap_or(false))
    });
    let ok = ok1
        && ok2.1 == 14
        && ok3
        && t1 < Duration::from_secs(5)
        && t2 < Duration::from_secs(10)
        && t3 < Duration::from_secs(600);
    Line {
        id: 14,
        ok,
        detail: format!(
            "Λ(2,2) pipeline {:.2?}; N=6 rigid/triangulations/Ptolemy {:?} in {:.2?}; Λ(2,3) all suites {:.2?}",
            t1, ok2, t2, t3
        ),
    }
}

fn main() -> ExitCode {
    let wbs: Vec<(String, Workbench)> = INSTANCES
        .iter()
        .map(|&(m, n)| {
            // Leaked so the workbenches can borrow their categories for the whole run.
            let cat: &'static Nakayama = Box::leak(Box::new(Nakayama::build(m, n).unwrap()));
            (
                format!("Λ({m},{n})"),
                Workbench::new(cat, StarConfig::default()).unwrap(),
            )
        })
        .collect();

    let lines = vec![
        suite_line(1, Suite::Exactness, &wbs),
        suite_line(2, Suite::Duality, &wbs),
        counts(),
        suite_line(4, Suite::TcpIdentities, &wbs),
        suite_line(5, Suite::Concentric, &wbs),
        suite_line(6, Suite::Adjunction, &wbs),
        suite_line(7, Suite::Triangulation, &wbs),
        suite_line(8, Suite::Bijection, &wbs),
        suite_line(9, Suite::Monomorphism, &wbs),
        suite_line(10, Suite::Hovey, &wbs),
        suite_line(11, Suite::ConditionIii, &wbs),
        zz_showcase(),
        suite_line(13, Suite::Mu, &wbs),
        performance(),
    ];

    let mut unexpected = 0;
    for l in &lines {
        let expected = EXPECTED_FAIL.contains(&l.id);
        let tag = match (l.ok, expected) {
            (true, _) => "PASS",
            (false, true) => "FAIL (expected)",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!("criterion {:>2}: {tag}  {}", l.id, l.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
