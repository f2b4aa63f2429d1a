//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function takes a backend spec plus plain strings and returns
//! a JSON string; errors come back as a message. The `*_json` functions hold
//! the logic so they also run (and are tested) off the browser.

use cotor::backend::{AnyBackend, BackendSpec};
use cotor::mutation::OrbitGraph;
use cotor::subcat::right_perp;
use cotor::{Backend, CatError, CatResult, CotorsionPair, Engine, Subcat, Tcp, ZIQuotient};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest Nakayama category the page will enumerate.
const MAX_INDECS: usize = 10;

fn build(spec: &str) -> CatResult<AnyBackend> {
    let b = spec.parse::<BackendSpec>()?.build()?;
    if b.as_dyn().num_indecs() > MAX_INDECS {
        return Err(CatError::Invalid(format!(
            "at most {MAX_INDECS} indecomposables in the browser"
        )));
    }
    Ok(b)
}

fn labels(b: &dyn Backend, s: Subcat) -> Vec<String> {
    s.iter().map(|i| b.label(i)).collect()
}

fn pair_json(b: &dyn Backend, p: CotorsionPair) -> Value {
    json!({ "U": labels(b, p.u), "V": labels(b, p.v) })
}

/// Polygon vertices of each arc, so the page can draw them.
fn geometry(b: &AnyBackend) -> Value {
    match b {
        AnyBackend::Polygon(p) => json!({
            "n": p.n(),
            "arcs": p.arcs().iter().map(|a| json!([a.i, a.j])).collect::<Vec<_>>(),
        }),
        AnyBackend::Nakayama(_) => Value::Null,
    }
}

fn cotorsion_pairs(b: &AnyBackend) -> CatResult<Vec<CotorsionPair>> {
    Ok(match b {
        AnyBackend::Nakayama(cat) => Engine::new(cat).enumerate_cotorsion()?.pairs,
        AnyBackend::Polygon(p) => p
            .cotorsion_pairs()
            .into_iter()
            .map(|(u, v)| CotorsionPair::new(u, v))
            .collect(),
    })
}

pub fn pairs_json(spec: &str) -> CatResult<String> {
    let b = build(spec)?;
    let d = b.as_dyn();
    let pairs: Vec<Value> = cotorsion_pairs(&b)?
        .into_iter()
        .map(|p| {
            let mut v = pair_json(d, p);
            v["cluster_tilting"] = json!(p.u == p.v);
            v
        })
        .collect();
    Ok(json!({
        "backend": d.spec(),
        "objects": (0..d.num_indecs()).map(|i| d.label(i)).collect::<Vec<_>>(),
        "geometry": geometry(&b),
        "pairs": pairs,
    })
    .to_string())
}

/// `context` is a twin pair for Nakayama backends and the cut set `I` for polygons.
pub fn mutate_json(spec: &str, context: &str, pair: &str, k: i64) -> CatResult<String> {
    let b = build(spec)?;
    let d = b.as_dyn();
    let ab = CotorsionPair::parse(d, pair)?;
    let out = match &b {
        AnyBackend::Nakayama(cat) => {
            let q = ZIQuotient::build(Engine::new(cat), Tcp::parse(cat, context)?)?;
            if !q.in_mp(ab) {
                return Err(CatError::Invalid("pair is not mutable for this twin pair".into()));
            }
            q.mutate(ab, k)?
        }
        AnyBackend::Polygon(p) => {
            let i = Subcat::parse(p, context)?;
            if !p.zz_class(i)?.contains(&(ab.u, ab.v)) {
                return Err(CatError::Invalid("need I ⊆ U ⊆ Z".into()));
            }
            let a = p.zz_mutate(i, ab.u, k)?;
            CotorsionPair::new(a, right_perp(p, a, -1))
        }
    };
    Ok(json!({ "pair": pair_json(d, ab), "k": k, "result": pair_json(d, out) }).to_string())
}

pub fn orbits_json(spec: &str, context: &str) -> CatResult<String> {
    let b = build(spec)?;
    let d = b.as_dyn();
    let g: OrbitGraph = match &b {
        AnyBackend::Nakayama(cat) => {
            let e = Engine::new(cat);
            let cps = e.enumerate_cotorsion()?.pairs;
            ZIQuotient::build(e, Tcp::parse(cat, context)?)?.orbit_graph(&cps)?
        }
        AnyBackend::Polygon(p) => p.zz_orbit_graph(Subcat::parse(p, context)?)?,
    };
    Ok(json!({
        "nodes": g.nodes.iter().map(|p| pair_json(d, *p)).collect::<Vec<_>>(),
        "edges": g.edges,
        "cycles": g.cycle_lengths(),
        "dot": g.to_dot(d),
    })
    .to_string())
}

fn js<T>(r: CatResult<T>) -> Result<T, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn pairs(spec: &str) -> Result<String, JsValue> {
    js(pairs_json(spec))
}

#[wasm_bindgen]
pub fn mutate(spec: &str, context: &str, pair: &str, k: i32) -> Result<String, JsValue> {
    js(mutate_json(spec, context, pair, k.into()))
}

#[wasm_bindgen]
pub fn orbits(spec: &str, context: &str) -> Result<String, JsValue> {
    js(orbits_json(spec, context))
}
