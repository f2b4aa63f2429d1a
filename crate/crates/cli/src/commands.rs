use cotor::backend::{AnyBackend, BackendSpec};
use cotor::pairs::Engine;
use cotor::subcat::{left_perp, right_perp};
use cotor::suites::{Outcome, Suite, Workbench};
use cotor::{
    match_backends, Backend, CatError, CatResult, CotorsionPair, Nakayama, Obj, StarConfig, Subcat, Tcp, Verdict,
    ZIQuotient,
};
use serde_json::{json, Value};

use crate::report::{pair, set, tcp, worst, Body, Output};

#[derive(Debug, Clone, Copy, Default)]
pub struct TcpFilters {
    pub concentric: bool,
    pub hovey: bool,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
}

fn undecided_is_inconclusive(v: Verdict) -> Outcome {
    if v == Verdict::Inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Pass
    }
}

fn nakayama_only(b: &AnyBackend) -> CatResult<&Nakayama> {
    match b {
        AnyBackend::Nakayama(c) => Ok(c),
        AnyBackend::Polygon(_) => Err(CatError::Unsupported("this command needs morphism calculus")),
    }
}

fn required<'s>(v: &'s Option<String>, flag: &str) -> CatResult<&'s str> {
    v.as_deref()
        .ok_or_else(|| CatError::Invalid(format!("--{flag} is required for this backend")))
}

pub fn enumerate_cp(b: &AnyBackend, cfg: StarConfig) -> CatResult<Output> {
    match b {
        AnyBackend::Nakayama(cat) => {
            let e = Engine::with_config(cat, cfg);
            let list = e.enumerate_cotorsion()?;
            let pairs: Vec<Value> = list
                .pairs
                .iter()
                .map(|p| {
                    let f = e.classify_pair(*p);
                    json!({
                        "U": set(cat, p.u),
                        "V": set(cat, p.v),
                        "t_structure": f.t_structure,
                        "co_t_structure": f.co_t_structure,
                        "cluster_tilting": f.cluster_tilting,
                    })
                })
                .collect();
            let undecided: Vec<Value> = list.undecided.iter().map(|p| pair(cat, *p)).collect();
            let outcome = if list.complete() {
                Outcome::Pass
            } else {
                Outcome::Inconclusive
            };
            Ok(Output::json(
                outcome,
                json!({ "count": pairs.len(), "pairs": pairs, "undecided": undecided }),
            ))
        }
        AnyBackend::Polygon(p) => {
            let pairs: Vec<Value> = p
                .cotorsion_pairs()
                .into_iter()
                .map(|(u, v)| json!({ "U": set(p, u), "V": set(p, v), "cluster_tilting": u == v }))
                .collect();
            Ok(Output::pass(json!({
                "count": pairs.len(),
                "pairs": pairs,
                "rigid": p.enumerate_rigid().len(),
                "triangulations": p.triangulations().len(),
            })))
        }
    }
}

pub fn enumerate_tcp(b: &AnyBackend, cfg: StarConfig, f: TcpFilters) -> CatResult<Output> {
    let cat = nakayama_only(b)?;
    let wb = Workbench::new(cat, cfg)?;
    let needs_concentric = f.concentric || f.hovey || f.cond_i || f.cond_ii || f.cond_iii;
    let mut outcome = if wb.cps.complete() {
        Outcome::Pass
    } else {
        Outcome::Inconclusive
    };
    let mut rows = Vec::new();
    for p in &wb.tcps {
        let flags = wb.e.classify(p);
        let Some(a) = wb.find(p) else {
            if !needs_concentric {
                rows.push(json!({ "pair": tcp(cat, p), "concentric": p.is_concentric(), "flags": flags }));
            }
            continue;
        };
        let keep = (!f.hovey || a.hovey.verdict.is_yes())
            && (!f.cond_i || a.cond_i.is_yes())
            && (!f.cond_ii || a.cond_ii.is_yes())
            && (!f.cond_iii || a.cond_iii.is_yes());
        if !keep {
            continue;
        }
        for v in [a.cond_i, a.cond_ii, a.cond_iii, a.hovey.verdict] {
            outcome = worst(outcome, undecided_is_inconclusive(v));
        }
        rows.push(json!({
            "pair": tcp(cat, p),
            "concentric": true,
            "flags": flags,
            "I": set(cat, a.q.d.i),
            "Z": set(cat, a.q.d.z),
            "cond_I": a.cond_i,
            "cond_II": a.cond_ii,
            "cond_III": a.cond_iii,
            "hovey": a.hovey.verdict,
        }));
    }
    if !wb.unbuilt.is_empty() {
        outcome = worst(outcome, Outcome::Inconclusive);
    }
    Ok(Output::json(outcome, json!({ "count": rows.len(), "tcps": rows })))
}

pub fn inspect_pair(
    b: &AnyBackend,
    cfg: StarConfig,
    pair_arg: Option<&str>,
    tcp_arg: Option<&str>,
) -> CatResult<Output> {
    match (b, pair_arg, tcp_arg) {
        (AnyBackend::Nakayama(cat), Some(s), None) => {
            let p = CotorsionPair::parse(cat, s)?;
            let e = Engine::with_config(cat, cfg);
            let v = e.is_cotorsion_pair(p.u, p.v);
            let f = e.classify_pair(p);
            Ok(Output::json(
                undecided_is_inconclusive(v),
                json!({
                    "pair": pair(cat, p),
                    "is_cotorsion_pair": v,
                    "right_perp_of_U_shifted_down": set(cat, right_perp(cat, p.u, -1)),
                    "left_perp_of_V_shifted_up": set(cat, left_perp(cat, p.v, 1)),
                    "t_structure": f.t_structure,
                    "co_t_structure": f.co_t_structure,
                    "cluster_tilting": f.cluster_tilting,
                }),
            ))
        }
        (AnyBackend::Polygon(poly), Some(s), None) => {
            let p = CotorsionPair::parse(poly, s)?;
            let v_expected = right_perp(poly, p.u, -1);
            let ok = poly.is_ptolemy(p.u) && p.v == v_expected;
            Ok(Output::pass(json!({
                "pair": pair(poly, p),
                "is_cotorsion_pair": Verdict::from_bool(ok),
                "ptolemy": poly.is_ptolemy(p.u),
                "right_perp_of_U_shifted_down": set(poly, v_expected),
                "rigid": poly.is_rigid(p.u),
            })))
        }
        (AnyBackend::Nakayama(cat), None, Some(s)) => inspect_tcp(cat, cfg, s),
        (AnyBackend::Polygon(_), None, Some(_)) => Err(CatError::Unsupported("twin pairs need morphism calculus")),
        _ => Err(CatError::Invalid("give exactly one of --pair and --tcp".into())),
    }
}

fn inspect_tcp(cat: &Nakayama, cfg: StarConfig, s: &str) -> CatResult<Output> {
    let p = Tcp::parse(cat, s)?;
    let e = Engine::with_config(cat, cfg);
    let cps = e.enumerate_cotorsion()?;
    let is_tcp = e.is_tcp(&p, &cps.pairs)?;
    let d = e.derived_sets(&p);
    let mut body = json!({
        "pair": tcp(cat, &p),
        "is_tcp": is_tcp,
        "concentric": p.is_concentric(),
        "flags": e.classify(&p),
        "N_i": set(cat, d.ni),
        "N_f": set(cat, d.nf),
        "identities_hold": d.identities_hold,
    });
    let mut outcome = if d.complete {
        Outcome::Pass
    } else {
        Outcome::Inconclusive
    };
    if is_tcp && p.is_concentric() {
        let q = ZIQuotient::build(e, p)?;
        let cond_i = q.condition_i()?;
        let cond_ii = e.condition_ii(&p, &q.d);
        let cond_iii = e.condition_iii(&p);
        let h = e.is_hovey(&p, &q.d);
        for v in [cond_i, cond_ii, cond_iii, h.verdict] {
            outcome = worst(outcome, undecided_is_inconclusive(v));
        }
        body["I"] = json!(set(cat, q.d.i));
        body["Z"] = json!(set(cat, q.d.z));
        body["cond_I"] = json!(cond_i);
        body["cond_II"] = json!(cond_ii);
        body["cond_III"] = json!(cond_iii);
        body["hovey"] = json!({
            "verdict": h.verdict,
            "N": set(cat, h.n),
            "shift_closed": h.shift_closed,
            "extension_closed": h.extension_closed,
            "perp_identities": h.perp_identities,
        });
    }
    Ok(Output::json(outcome, body))
}

pub fn reduce(b: &AnyBackend, cfg: StarConfig, tcp_arg: &Option<String>, i_arg: &Option<String>) -> CatResult<Output> {
    match b {
        AnyBackend::Polygon(poly) => {
            let i = Subcat::parse(poly, required(i_arg, "i")?)?;
            let red = poly.cut_reduction(i)?;
            let dictionary: Vec<Value> = red
                .dictionary
                .iter()
                .map(|d| json!({ "arc": d.arc.to_string(), "piece": d.piece, "local": d.local.to_string() }))
                .collect();
            let shift: Vec<Value> = red
                .z
                .minus(i)
                .iter()
                .filter_map(|a| red.reduced_shift(a).map(|s| json!([poly.label(a), poly.label(s)])))
                .collect();
            Ok(Output::pass(json!({
                "I": set(poly, i),
                "Z": set(poly, red.z),
                "pieces": red.pieces,
                "dictionary": dictionary,
                "reduced_shift": shift,
            })))
        }
        AnyBackend::Nakayama(cat) => {
            let p = Tcp::parse(cat, required(tcp_arg, "tcp")?)?;
            let e = Engine::with_config(cat, cfg);
            let q = ZIQuotient::build(e, p)?;
            let cond = q.condition_i()?.and(e.condition_ii(&p, &q.d));
            let objects: Vec<Value> = q
                .objects()
                .iter()
                .map(|&z| {
                    let o = Obj::indec(z);
                    json!({
                        "object": cat.label(z),
                        "Sigma": cat.obj_labels(&q.Sigma_obj(&o)),
                        "Omega": cat.obj_labels(&q.Omega_obj(&o)),
                        "end_dim": q.hom_dim(&o, &o),
                    })
                })
                .collect();
            Ok(Output::json(
                undecided_is_inconclusive(cond),
                json!({
                    "pair": tcp(cat, &p),
                    "I": set(cat, q.d.i),
                    "Z": set(cat, q.d.z),
                    "triangulated": cond,
                    "objects": objects,
                }),
            ))
        }
    }
}

pub fn mutate(
    b: &AnyBackend,
    cfg: StarConfig,
    tcp_arg: &Option<String>,
    i_arg: &Option<String>,
    pair_arg: &str,
    k: i64,
) -> CatResult<Output> {
    match b {
        AnyBackend::Nakayama(cat) => {
            let p = Tcp::parse(cat, required(tcp_arg, "tcp")?)?;
            let ab = CotorsionPair::parse(cat, pair_arg)?;
            let e = Engine::with_config(cat, cfg);
            let q = ZIQuotient::build(e, p)?;
            if !q.in_mp(ab) {
                return Err(CatError::Invalid(
                    "the pair is not mutable with respect to this twin pair".into(),
                ));
            }
            let applies = q.condition_i()?.and(e.condition_ii(&p, &q.d));
            let out = q.mutate(ab, k)?;
            let still = q.in_mp(out);
            let outcome = if still {
                undecided_is_inconclusive(applies)
            } else {
                Outcome::Violation
            };
            Ok(Output::json(
                outcome,
                json!({
                    "tcp": tcp(cat, &p),
                    "pair": pair(cat, ab),
                    "k": k,
                    "result": pair(cat, out),
                    "result_mutable": still,
                    "conditions_I_II": applies,
                }),
            ))
        }
        AnyBackend::Polygon(poly) => {
            let i = Subcat::parse(poly, required(i_arg, "i")?)?;
            let ab = CotorsionPair::parse(poly, pair_arg)?;
            let class = poly.zz_class(i)?;
            if !class.contains(&(ab.u, ab.v)) {
                return Err(CatError::Invalid("need a cotorsion pair (A, B) with I ⊆ A ⊆ Z".into()));
            }
            let a = poly.zz_mutate(i, ab.u, k)?;
            let out = CotorsionPair::new(a, right_perp(poly, a, -1));
            let still = class.contains(&(out.u, out.v));
            Ok(Output::json(
                if still { Outcome::Pass } else { Outcome::Violation },
                json!({ "I": set(poly, i), "pair": pair(poly, ab), "k": k, "result": pair(poly, out), "result_mutable": still }),
            ))
        }
    }
}

pub fn verify(b: &AnyBackend, cfg: StarConfig, suite: &str, seed: u64) -> CatResult<Output> {
    let cat = nakayama_only(b)?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite.split(',').map(|s| s.trim().parse()).collect::<CatResult<_>>()?
    };
    let wb = Workbench::new(cat, cfg)?;
    let mut outcome = Outcome::Pass;
    let mut reports = Vec::new();
    for s in suites {
        let r = wb.run(s, seed)?;
        outcome = worst(outcome, r.outcome);
        reports.push(r);
    }
    Ok(Output::json(
        outcome,
        json!({
            "cotorsion_pairs": wb.cps.pairs.len(),
            "twin_pairs": wb.tcps.len(),
            "concentric": wb.concentric.len(),
            "suites": reports,
        }),
    ))
}

pub fn orbit_graph(
    b: &AnyBackend,
    cfg: StarConfig,
    tcp_arg: &Option<String>,
    i_arg: &Option<String>,
) -> CatResult<Output> {
    let dot = match b {
        AnyBackend::Nakayama(cat) => {
            let p = Tcp::parse(cat, required(tcp_arg, "tcp")?)?;
            let e = Engine::with_config(cat, cfg);
            let cps = e.enumerate_cotorsion()?;
            let q = ZIQuotient::build(e, p)?;
            q.orbit_graph(&cps.pairs)?.to_dot(cat)
        }
        AnyBackend::Polygon(poly) => {
            let i = Subcat::parse(poly, required(i_arg, "i")?)?;
            poly.zz_orbit_graph(i)?.to_dot(poly)
        }
    };
    Ok(Output {
        outcome: Outcome::Pass,
        body: Body::Text(dot),
    })
}

pub fn match_cmd(b: &AnyBackend, other: &str) -> CatResult<Output> {
    let spec: BackendSpec = other.parse()?;
    let o = spec.build()?;
    let (x, y) = (b.as_dyn(), o.as_dyn());
    let dict = match_backends(x, y).map(|phi| {
        phi.iter()
            .enumerate()
            .map(|(a, &c)| json!({ "from": x.label(a), "to": y.label(c) }))
            .collect::<Vec<_>>()
    });
    Ok(Output::pass(json!({ "other": spec.to_string(), "dictionary": dict })))
}

pub fn census(cfg: StarConfig, instances: &str, seed: u64) -> CatResult<Output> {
    let mut rows = Vec::new();
    let mut outcome = Outcome::Pass;
    for item in instances.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (m, n) = item
            .split_once('x')
            .and_then(|(m, n)| Some((m.trim().parse().ok()?, n.trim().parse().ok()?)))
            .ok_or_else(|| CatError::Invalid(format!("instances are written MxN, got {item:?}")))?;
        let cat = Nakayama::build(m, n)?;
        let wb = Workbench::new(&cat, cfg)?;
        let count = |f: &dyn Fn(&cotor::suites::Analyzed) -> bool| wb.concentric.iter().filter(|a| f(a)).count();
        let mut suites = serde_json::Map::new();
        for s in Suite::ALL {
            let r = wb.run(s, seed)?;
            outcome = worst(outcome, r.outcome);
            suites.insert(s.name().into(), json!(r.outcome));
        }
        rows.push(json!({
            "backend": cat.spec(),
            "indecomposables": cat.k(),
            "cotorsion_pairs": wb.cps.pairs.len(),
            "twin_pairs": wb.tcps.len(),
            "concentric": wb.concentric.len(),
            "cond_I": count(&|a| a.cond_i.is_yes()),
            "cond_II": count(&|a| a.cond_ii.is_yes()),
            "cond_III": count(&|a| a.cond_iii.is_yes()),
            "hovey": count(&|a| a.hovey.verdict.is_yes()),
            "suites": suites,
        }));
    }
    Ok(Output::json(outcome, json!({ "instances": rows })))
}
