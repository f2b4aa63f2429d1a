//! Property suites over all pairs of one Nakayama category.
//!
//! A [`Workbench`] enumerates cotorsion pairs and twin cotorsion pairs once,
//! builds `Z/I` for every concentric one and caches conditions (I)-(III);
//! [`Workbench::run`] then checks one named suite against that data.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::category::{Backend, CatError, CatResult, Obj};
use crate::f2linalg::BitVec;
use crate::nakayama::{Nakayama, StarConfig, StarVerdict};
use crate::pairs::{CpList, Engine, HoveyReport, Tcp};
use crate::subcat::{Subcat, Verdict};
use crate::zi::ZIQuotient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Exactness,
    Duality,
    TcpIdentities,
    Concentric,
    Adjunction,
    Triangulation,
    Bijection,
    Monomorphism,
    Hovey,
    ConditionIii,
    Mu,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Exactness,
        Suite::Duality,
        Suite::TcpIdentities,
        Suite::Concentric,
        Suite::Adjunction,
        Suite::Triangulation,
        Suite::Bijection,
        Suite::Monomorphism,
        Suite::Hovey,
        Suite::ConditionIii,
        Suite::Mu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exactness => "exactness",
            Suite::Duality => "duality",
            Suite::TcpIdentities => "tcp-identities",
            Suite::Concentric => "concentric",
            Suite::Adjunction => "adjunction",
            Suite::Triangulation => "triangulation",
            Suite::Bijection => "bijection",
            Suite::Monomorphism => "monomorphism",
            Suite::Hovey => "hovey",
            Suite::ConditionIii => "condition-iii",
            Suite::Mu => "mu",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CatError::Invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Violation,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub claim: String,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub outcome: Outcome,
    pub checked: usize,
    pub violations: Vec<Counterexample>,
    pub inconclusive: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            outcome: Outcome::Pass,
            checked: 0,
            violations: Vec::new(),
            inconclusive: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, claim: &str, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(Counterexample {
                claim: claim.to_string(),
                witness: witness(),
            });
        }
    }

    fn verdict(&mut self, v: Verdict, claim: &str, witness: impl FnOnce() -> String) {
        match v {
            Verdict::Inconclusive => {
                self.checked += 1;
                self.inconclusive.push(format!("{claim}: {}", witness()));
            }
            v => self.check(v.is_yes(), claim, witness),
        }
    }

    fn finish(mut self) -> Self {
        self.outcome = if !self.violations.is_empty() {
            Outcome::Violation
        } else if !self.inconclusive.is_empty() {
            Outcome::Inconclusive
        } else {
            Outcome::Pass
        };
        self
    }
}

/// One concentric twin cotorsion pair with its quotient and cached conditions.
pub struct Analyzed<'a> {
    pub q: ZIQuotient<'a>,
    pub cond_i: Verdict,
    pub cond_ii: Verdict,
    pub cond_iii: Verdict,
    pub hovey: HoveyReport,
}

impl Analyzed<'_> {
    /// (I) and (II).
    pub fn good(&self) -> Verdict {
        self.cond_i.and(self.cond_ii)
    }
}

pub struct Workbench<'a> {
    pub e: Engine<'a>,
    pub cps: CpList,
    pub tcps: Vec<Tcp>,
    pub concentric: Vec<Analyzed<'a>>,
    /// Concentric pairs whose quotient could not be built within budget.
    pub unbuilt: Vec<(Tcp, String)>,
}

impl<'a> Workbench<'a> {
    pub fn new(cat: &'a Nakayama, cfg: StarConfig) -> CatResult<Self> {
        let e = Engine::with_config(cat, cfg);
        let cps = e.enumerate_cotorsion()?;
        let tcps = e.enumerate_tcps(&cps.pairs);
        let mut concentric = Vec::new();
        let mut unbuilt = Vec::new();
        for p in tcps.iter().copied().filter(Tcp::is_concentric) {
            match Self::analyze(e, p) {
                Ok(a) => concentric.push(a),
                Err(CatError::Inconclusive(why)) => unbuilt.push((p, why)),
                Err(err) => return Err(err),
            }
        }
        Ok(Workbench {
            e,
            cps,
            tcps,
            concentric,
            unbuilt,
        })
    }

    fn analyze(e: Engine<'a>, p: Tcp) -> CatResult<Analyzed<'a>> {
        let q = ZIQuotient::build(e, p)?;
        let cond_i = q.condition_i()?;
        let cond_ii = e.condition_ii(&p, &q.d);
        let cond_iii = e.condition_iii(&p);
        let hovey = e.is_hovey(&p, &q.d);
        Ok(Analyzed {
            q,
            cond_i,
            cond_ii,
            cond_iii,
            hovey,
        })
    }

    pub fn cat(&self) -> &'a Nakayama {
        self.e.cat
    }

    pub fn find(&self, p: &Tcp) -> Option<&Analyzed<'a>> {
        self.concentric.iter().find(|a| a.q.p == *p)
    }

    pub fn show_set(&self, s: Subcat) -> String {
        format!("[{}]", s.labels(self.cat()).join(","))
    }

    pub fn show_tcp(&self, p: &Tcp) -> String {
        format!(
            "S={};T={};U={};V={}",
            self.show_set(p.s),
            self.show_set(p.t),
            self.show_set(p.u),
            self.show_set(p.v)
        )
    }

    fn show_obj(&self, x: &Obj) -> String {
        format!("[{}]", self.cat().obj_labels(x).join(","))
    }

    pub fn run(&self, suite: Suite, seed: u64) -> CatResult<SuiteReport> {
        let mut r = SuiteReport::new(suite);
        for (p, why) in &self.unbuilt {
            r.inconclusive
                .push(format!("quotient of {} not built: {why}", self.show_tcp(p)));
        }
        match suite {
            Suite::Exactness => self.exactness(&mut r, seed),
            Suite::Duality => self.duality(&mut r),
            Suite::TcpIdentities => self.tcp_identities(&mut r, seed),
            Suite::Concentric => self.concentric_claim(&mut r),
            Suite::Adjunction => self.adjunction(&mut r),
            Suite::Triangulation => self.triangulation(&mut r),
            Suite::Bijection => self.bijection(&mut r)?,
            Suite::Monomorphism => self.monomorphism(&mut r),
            Suite::Hovey => self.hovey(&mut r, seed),
            Suite::ConditionIii => self.condition_iii(&mut r),
            Suite::Mu => self.mu(&mut r)?,
        }
        Ok(r.finish())
    }

    fn exactness(&self, r: &mut SuiteReport, seed: u64) {
        let cat = self.cat();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = cat.k();
        let random_obj =
            |rng: &mut ChaCha8Rng| -> Obj { (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..k)).collect() };
        for _ in 0..30 {
            let x = random_obj(&mut rng);
            let y = random_obj(&mut rng);
            let w = cat.cone(&cat.identity(&x)).tri;
            r.check(w.c.is_zero(), "cone(id) = 0", || self.show_obj(&x));
            let w = cat.cone(&cat.zero_mor(&x, &y)).tri;
            r.check(
                w.c == y.sum(&cat.shift_obj(&x, 1)),
                "cone(0: X -> Y) = Y ⊕ X[1]",
                || format!("X={} Y={}", self.show_obj(&x), self.show_obj(&y)),
            );
            let d = cat.hom_dim_obj(&x, &y);
            let coords = BitVec::from_bools(&(0..d).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let f = cat.mor_from_coords(&x, &y, coords);
            let t = cat.cone(&f).tri;
            r.check(cat.triangle_is_exact(&t), "consecutive composites vanish", || {
                format!("{f:?}")
            });
        }
        // star witnesses are emitted triangles too
        for p in &self.cps.pairs {
            for c in 0..k {
                if let StarVerdict::Yes(t) = self.e.star(p.u, self.e.shift(p.v, 1), &Obj::indec(c)) {
                    r.check(cat.triangle_is_exact(&t), "decomposition triangle is exact", || {
                        cat.label(c)
                    });
                }
            }
        }
        if cat.m() == 1 {
            let n = cat.n();
            for a in 0..k {
                for b in 0..k {
                    let (i, j) = (cat.uniserial(a).1, cat.uniserial(b).1);
                    let expect = i.min(j).min(n - i).min(n - j);
                    r.check(
                        cat.dim(a, b) == expect,
                        "dim Hom(M_i, M_j) = min(i, j, n-i, n-j)",
                        || format!("{} {}", cat.label(a), cat.label(b)),
                    );
                }
            }
        }
    }

    fn duality(&self, r: &mut SuiteReport) {
        for p in &self.cps.undecided {
            r.inconclusive
                .push(format!("cover undecided for U={}", self.show_set(p.u)));
        }
        for p in &self.cps.pairs {
            r.check(self.e.duality_holds(*p), "V = U[-1]⊥ and U = ⊥V[1]", || {
                format!("U={} V={}", self.show_set(p.u), self.show_set(p.v))
            });
        }
    }

    fn tcp_identities(&self, r: &mut SuiteReport, seed: u64) {
        let mut samples = Vec::new();
        for p in &self.tcps {
            let d = self.e.derived_sets(p);
            let v = match (d.identities_hold, d.complete) {
                (true, true) => Verdict::Yes,
                (false, true) => Verdict::No,
                _ => Verdict::Inconclusive,
            };
            r.verdict(v, "U ∩ N^i = S and T ∩ N^f = V", || self.show_tcp(p));
            for u in p.u.iter() {
                for t in p.t.iter() {
                    samples.push((*p, d.ni, u, t));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100.min(samples.len().max(1) * 4) {
            if samples.is_empty() {
                break;
            }
            let (p, ni, u, t) = samples[rng.gen_range(0..samples.len())];
            let ok = self.e.factoring_through_is_zero(&Obj::indec(u), &Obj::indec(t), ni);
            r.check(ok, "maps U -> T[1] through N^i vanish", || {
                format!(
                    "{} u={} t={}",
                    self.show_tcp(&p),
                    self.cat().label(u),
                    self.cat().label(t)
                )
            });
        }
    }

    fn concentric_claim(&self, r: &mut SuiteReport) {
        for a in &self.concentric {
            let p = &a.q.p;
            let t = self.e.classify(p).t_structure;
            r.check(t == p.i().is_empty(), "I = 0 ⇔ both pairs are t-structures", || {
                self.show_tcp(p)
            });
        }
    }

    fn adjunction(&self, r: &mut SuiteReport) {
        for a in &self.concentric {
            let q = &a.q;
            for &x in q.objects() {
                for &y in q.objects() {
                    let (x, y) = (Obj::indec(x), Obj::indec(y));
                    let ok = q.hom_dim(&q.Sigma_obj(&x), &y) == q.hom_dim(&x, &q.Omega_obj(&y));
                    r.check(ok, "dim Hom(ΣX, Y) = dim Hom(X, ΩY)", || {
                        format!(
                            "{} X={} Y={}",
                            self.show_tcp(&q.p),
                            self.show_obj(&x),
                            self.show_obj(&y)
                        )
                    });
                }
            }
        }
    }

    fn triangulation(&self, r: &mut SuiteReport) {
        for a in &self.concentric {
            if a.good() == Verdict::Inconclusive {
                r.inconclusive
                    .push(format!("(I)+(II) undecided on {}", self.show_tcp(&a.q.p)));
            }
            if !a.good().is_yes() {
                continue;
            }
            let q = &a.q;
            for &x in q.objects() {
                let x = Obj::indec(x);
                let ok = q.Sigma_obj(&q.Omega_obj(&x)) == x && q.Omega_obj(&q.Sigma_obj(&x)) == x;
                r.check(ok, "ΣΩ ≅ id ≅ ΩΣ", || {
                    format!("{} X={}", self.show_tcp(&q.p), self.show_obj(&x))
                });
            }
        }
    }

    fn bijection(&self, r: &mut SuiteReport) -> CatResult<()> {
        let cps = &self.cps.pairs;
        for a in &self.concentric {
            let p = &a.q.p;
            let flags = self.e.classify(p);
            let required = p.is_degenerate() || *p == Tcp::trivial_hovey(self.e.k()) || flags.zz_setting;
            if required {
                r.verdict(a.good(), "(I)+(II) hold", || self.show_tcp(p));
            }
            if !a.good().is_yes() {
                continue;
            }
            let rep = a.q.verify_bijection(cps)?;
            r.check(
                rep.passed(),
                "𝕀ℝ = id, ℝ𝕀 = id, membership tests agree, μ is a ℤ-action",
                || format!("{}: {}", self.show_tcp(p), rep.failures.join("; ")),
            );
            r.check(
                rep.mutable > 0 || a.q.is_zero_category(),
                "mutable class is nonempty",
                || self.show_tcp(p),
            );
        }
        Ok(())
    }

    fn monomorphism(&self, r: &mut SuiteReport) {
        let cat = self.cat();
        for a in self.concentric.iter().filter(|a| a.good().is_yes()) {
            let q = &a.q;
            for u in q.p.u.iter() {
                for t in q.p.t.iter() {
                    let (u, t) = (Obj::indec(u), Obj::indec(t));
                    let ext = cat.hom_dim_obj(&u, &cat.shift_obj(&t, 1));
                    let zi = q.ext1_zi(&q.sigma_obj(&u), &q.omega_obj(&t));
                    r.check(ext <= zi, "dim Ext¹(U, T) ≤ dim Ext¹(σU, ωT)", || {
                        format!(
                            "{} U={} T={} ({ext} > {zi})",
                            self.show_tcp(&q.p),
                            self.show_obj(&u),
                            self.show_obj(&t)
                        )
                    });
                }
            }
        }
    }

    fn hovey(&self, r: &mut SuiteReport, seed: u64) {
        let k = self.e.k();
        let full = Subcat::full(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for a in &self.concentric {
            let p = &a.q.p;
            let h = &a.hovey;
            if p.is_degenerate() {
                r.check(
                    h.verdict.is_yes() && h.n == full,
                    "degenerate pairs are Hovey with N = C",
                    || self.show_tcp(p),
                );
            }
            if *p == Tcp::trivial_hovey(k) {
                r.check(
                    h.verdict.is_yes() && h.n.is_empty(),
                    "((0,C),(C,0)) is Hovey with N = 0",
                    || self.show_tcp(p),
                );
            }
            if !h.verdict.is_yes() {
                continue;
            }
            r.check(h.shift_closed, "N is closed under shift", || self.show_tcp(p));
            r.verdict(h.extension_closed, "N is closed under extensions", || self.show_tcp(p));
            r.check(h.perp_identities, "U = ⊥V[1] and T = S[-1]⊥", || self.show_tcp(p));
            // summand closure: a sum lies in S ∗ V[1] exactly when its summands do
            for _ in 0..5 {
                let x: Obj = (0..2).map(|_| rng.gen_range(0..k)).collect();
                let inside = h.n.contains_obj(&x);
                let v = match self.e.star(p.s, self.e.shift(p.v, 1), &x) {
                    StarVerdict::Yes(_) => Verdict::from_bool(inside),
                    StarVerdict::No => Verdict::from_bool(!inside),
                    StarVerdict::Inconclusive => Verdict::Inconclusive,
                };
                r.verdict(v, "N is closed under summands", || {
                    format!("{} X={}", self.show_tcp(p), self.show_obj(&x))
                });
            }
        }
    }

    fn condition_iii(&self, r: &mut SuiteReport) {
        for a in &self.concentric {
            if a.cond_iii.is_yes() {
                r.verdict(a.good(), "(III) implies (I) and (II)", || self.show_tcp(&a.q.p));
            } else if a.cond_iii == Verdict::Inconclusive {
                r.inconclusive
                    .push(format!("(III) undecided on {}", self.show_tcp(&a.q.p)));
            }
        }
    }

    fn mu(&self, r: &mut SuiteReport) -> CatResult<()> {
        for a in &self.concentric {
            let q = &a.q;
            for x in q.p.t.union(q.p.u).iter() {
                let x = Obj::indec(x);
                match q.mu(&x) {
                    Ok(m) => r.check(m.iso.iso, "μ_X is an isomorphism for X ∈ T ∪ U", || {
                        format!("{} X={}", self.show_tcp(&q.p), self.show_obj(&x))
                    }),
                    Err(CatError::Inconclusive(why)) => r.inconclusive.push(why),
                    Err(err) => return Err(err),
                }
            }
        }
        Ok(())
    }
}
