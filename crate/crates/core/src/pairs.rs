//! Cotorsion pairs, twin cotorsion pairs and their derived subcategories.

use serde::Serialize;

use crate::category::{Backend, CatError, CatResult, Obj};
use crate::nakayama::{Nakayama, StarConfig, StarVerdict};
use crate::subcat::{enumerate_subcats, ext_vanishes, left_perp, right_perp, Subcat, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CotorsionPair {
    pub u: Subcat,
    pub v: Subcat,
}

impl CotorsionPair {
    pub fn new(u: Subcat, v: Subcat) -> Self {
        CotorsionPair { u, v }
    }

    /// Parses `U=[S0];V=[S0]`. A class may also be written `0` or `C`.
    pub fn parse(b: &(impl Backend + ?Sized), s: &str) -> CatResult<Self> {
        let f = fields(b, s, &["U", "V"])?;
        Ok(CotorsionPair::new(f[0], f[1]))
    }
}

/// `K=value` fields separated by `;`, returned in the order of `keys`.
fn fields(b: &(impl Backend + ?Sized), s: &str, keys: &[&str]) -> CatResult<Vec<Subcat>> {
    let mut out = vec![None; keys.len()];
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| CatError::Invalid(format!("expected KEY=[...], got {part:?}")))?;
        let idx = keys
            .iter()
            .position(|k| k.eq_ignore_ascii_case(key.trim()))
            .ok_or_else(|| CatError::Invalid(format!("unknown class {key:?}")))?;
        out[idx] = Some(match val.trim() {
            "0" => Subcat::EMPTY,
            "C" => Subcat::full(b.num_indecs()),
            v => Subcat::parse(b, v)?,
        });
    }
    out.into_iter()
        .zip(keys)
        .map(|(v, k)| v.ok_or_else(|| CatError::Invalid(format!("missing class {k}"))))
        .collect()
}

/// A pair `((S, T), (U, V))` of cotorsion pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tcp {
    pub s: Subcat,
    pub t: Subcat,
    pub u: Subcat,
    pub v: Subcat,
}

impl Tcp {
    pub fn new(inner: CotorsionPair, outer: CotorsionPair) -> Self {
        Tcp {
            s: inner.u,
            t: inner.v,
            u: outer.u,
            v: outer.v,
        }
    }

    pub fn inner(&self) -> CotorsionPair {
        CotorsionPair::new(self.s, self.t)
    }

    pub fn outer(&self) -> CotorsionPair {
        CotorsionPair::new(self.u, self.v)
    }

    /// `((U, V), (U, V))`.
    pub fn degenerate(p: CotorsionPair) -> Self {
        Tcp::new(p, p)
    }

    /// `((0, C), (C, 0))` on a category with `k` indecomposables.
    pub fn trivial_hovey(k: usize) -> Self {
        let full = Subcat::full(k);
        Tcp {
            s: Subcat::EMPTY,
            t: full,
            u: full,
            v: Subcat::EMPTY,
        }
    }

    /// Parses `trivial-hovey`, `degenerate:U=[..];V=[..]` or `S=[..];T=[..];U=[..];V=[..]`.
    pub fn parse(b: &(impl Backend + ?Sized), s: &str) -> CatResult<Self> {
        let s = s.trim();
        if s == "trivial-hovey" {
            return Ok(Tcp::trivial_hovey(b.num_indecs()));
        }
        if let Some(rest) = s.strip_prefix("degenerate:") {
            return Ok(Tcp::degenerate(CotorsionPair::parse(b, rest)?));
        }
        let f = fields(b, s, &["S", "T", "U", "V"])?;
        Ok(Tcp::new(CotorsionPair::new(f[0], f[1]), CotorsionPair::new(f[2], f[3])))
    }

    pub fn is_degenerate(&self) -> bool {
        self.s == self.u
    }

    pub fn is_concentric(&self) -> bool {
        self.s.intersect(self.t) == self.u.intersect(self.v)
    }

    pub fn i(&self) -> Subcat {
        self.s.intersect(self.t)
    }

    pub fn z(&self) -> Subcat {
        self.t.intersect(self.u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairFlags {
    pub t_structure: bool,
    pub co_t_structure: bool,
    pub cluster_tilting: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TcpFlags {
    pub t_structure: bool,
    pub co_t_structure: bool,
    pub cluster_tilting: bool,
    pub rigid_pair: bool,
    pub zz_setting: bool,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedSets {
    pub i: Subcat,
    pub z: Subcat,
    pub ni: Subcat,
    pub nf: Subcat,
    /// Every star verdict behind `ni` and `nf` was decisive.
    pub complete: bool,
    /// `U ∩ N^i = S` and `T ∩ N^f = V`.
    pub identities_hold: bool,
}

#[derive(Debug, Clone)]
pub struct CpList {
    pub pairs: Vec<CotorsionPair>,
    /// Candidates whose cover check was inconclusive.
    pub undecided: Vec<CotorsionPair>,
}

impl CpList {
    pub fn complete(&self) -> bool {
        self.undecided.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoveyReport {
    pub verdict: Verdict,
    pub n: Subcat,
    pub shift_closed: bool,
    pub extension_closed: Verdict,
    /// `U = ⊥(V[1])` and `T = (S[-1])⊥`.
    pub perp_identities: bool,
}

/// Pair-level queries over a Nakayama category with a fixed star configuration.
#[derive(Clone, Copy)]
pub struct Engine<'a> {
    pub cat: &'a Nakayama,
    pub cfg: StarConfig,
}

impl<'a> Engine<'a> {
    pub fn new(cat: &'a Nakayama) -> Self {
        Engine {
            cat,
            cfg: StarConfig::default(),
        }
    }

    pub fn with_config(cat: &'a Nakayama, cfg: StarConfig) -> Self {
        Engine { cat, cfg }
    }

    pub fn k(&self) -> usize {
        self.cat.k()
    }

    pub fn full(&self) -> Subcat {
        Subcat::full(self.k())
    }

    pub fn star(&self, x: Subcat, y: Subcat, c: &Obj) -> StarVerdict {
        self.cat.star_contains_with(x, y, c, &self.cfg)
    }

    pub fn star_set(&self, x: Subcat, y: Subcat) -> (Subcat, bool) {
        crate::subcat::star_indecs(self.cat, x, y, &self.cfg)
    }

    pub fn shift(&self, x: Subcat, k: i64) -> Subcat {
        x.shift(self.cat, k)
    }

    /// Whether every indecomposable lies in `U ∗ V[1]`.
    pub fn covers(&self, u: Subcat, v: Subcat) -> Verdict {
        let v1 = self.shift(v, 1);
        Verdict::all((0..self.k()).map(|c| self.star(u, v1, &Obj::indec(c)).verdict()))
    }

    pub fn is_cotorsion_pair(&self, u: Subcat, v: Subcat) -> Verdict {
        if !ext_vanishes(self.cat, u, v) {
            return Verdict::No;
        }
        self.covers(u, v)
    }

    /// `V = U[-1]^⊥` and `U = ^⊥V[1]`.
    pub fn duality_holds(&self, p: CotorsionPair) -> bool {
        p.v == right_perp(self.cat, p.u, -1) && p.u == left_perp(self.cat, p.v, 1)
    }

    /// Runs through the `U` with `U = ^⊥((U[-1])^⊥[1])` and tests the forced `V`.
    pub fn enumerate_cotorsion(&self) -> CatResult<CpList> {
        let cat = self.cat;
        let closed = enumerate_subcats(self.k(), |u| left_perp(cat, right_perp(cat, u, -1), 1) == u, true)?;
        let mut out = CpList {
            pairs: Vec::new(),
            undecided: Vec::new(),
        };
        for u in closed {
            let v = right_perp(cat, u, -1);
            match self.covers(u, v) {
                Verdict::Yes => out.pairs.push(CotorsionPair::new(u, v)),
                Verdict::No => {}
                Verdict::Inconclusive => out.undecided.push(CotorsionPair::new(u, v)),
            }
        }
        Ok(out)
    }

    /// Every `(U, V)` over all pairs of subsets, with no use of perpendiculars.
    pub fn enumerate_cotorsion_brute(&self) -> CatResult<CpList> {
        let k = self.k();
        if 2 * k > crate::subcat::ENUMERATION_GUARD {
            return Err(CatError::Invalid(format!(
                "brute force over {k} indecomposables is too large"
            )));
        }
        let mut out = CpList {
            pairs: Vec::new(),
            undecided: Vec::new(),
        };
        let full = self.full();
        for ub in 0..1u64 << k {
            let u = Subcat(ub);
            for vb in 0..1u64 << k {
                let v = Subcat(vb);
                if !ext_vanishes(self.cat, u, v) {
                    continue;
                }
                let (cover, complete) = self.star_set(u, self.shift(v, 1));
                if cover == full {
                    out.pairs.push(CotorsionPair::new(u, v));
                } else if !complete {
                    out.undecided.push(CotorsionPair::new(u, v));
                }
            }
        }
        Ok(out)
    }

    /// `Ext¹(S, V) = 0`, given verified constituents.
    pub fn is_tcp(&self, p: &Tcp, verified: &[CotorsionPair]) -> CatResult<bool> {
        for c in [p.inner(), p.outer()] {
            if !verified.contains(&c) {
                return Err(CatError::Invalid(format!(
                    "{:?} is not a verified cotorsion pair",
                    (c.u.labels(self.cat), c.v.labels(self.cat))
                )));
            }
        }
        Ok(ext_vanishes(self.cat, p.s, p.v))
    }

    pub fn enumerate_tcps(&self, cps: &[CotorsionPair]) -> Vec<Tcp> {
        let mut out = Vec::new();
        for &inner in cps {
            for &outer in cps {
                if ext_vanishes(self.cat, inner.u, outer.v) {
                    out.push(Tcp::new(inner, outer));
                }
            }
        }
        out
    }

    pub fn classify_pair(&self, p: CotorsionPair) -> PairFlags {
        PairFlags {
            t_structure: self.shift(p.u, 1).is_subset(p.u),
            co_t_structure: self.shift(p.u, -1).is_subset(p.u),
            cluster_tilting: p.u == p.v,
        }
    }

    pub fn classify(&self, p: &Tcp) -> TcpFlags {
        let (a, b) = (self.classify_pair(p.inner()), self.classify_pair(p.outer()));
        TcpFlags {
            t_structure: a.t_structure && b.t_structure,
            co_t_structure: a.co_t_structure && b.co_t_structure,
            cluster_tilting: a.cluster_tilting || b.cluster_tilting,
            rigid_pair: p.s == p.v,
            zz_setting: p.s == p.v && p.u == p.t,
            degenerate: p.is_degenerate(),
        }
    }

    /// `I = S ∩ T` and `Z = T ∩ U` are only meaningful for concentric pairs.
    pub fn derived_sets(&self, p: &Tcp) -> DerivedSets {
        let (ni, c1) = self.star_set(p.s, self.shift(p.v, 1));
        let (nf, c2) = self.star_set(self.shift(p.s, -1), p.v);
        DerivedSets {
            i: p.i(),
            z: p.z(),
            ni,
            nf,
            complete: c1 && c2,
            identities_hold: p.u.intersect(ni) == p.s && p.t.intersect(nf) == p.v,
        }
    }

    /// Whether `H_{(U,V)}(X) = 0`: in one decomposition triangle
    /// `U_X -> X --v--> V_X[1] -> U_X[1]`, `v` factors through `add V`.
    pub fn h_vanishes(&self, x: &Obj, pair: CotorsionPair) -> Verdict {
        let StarVerdict::Yes(tri) = self.star(pair.u, self.shift(pair.v, 1), x) else {
            return Verdict::Inconclusive;
        };
        let span = self.cat.factoring_span(&tri.b, &tri.c, pair.v);
        Verdict::from_bool(span.contains(&tri.g.coords))
    }

    /// `U ∩ N^f = S` and `T ∩ N^i = V`.
    pub fn condition_ii(&self, p: &Tcp, d: &DerivedSets) -> Verdict {
        let ok = p.u.intersect(d.nf) == p.s && p.t.intersect(d.ni) == p.v;
        match (ok, d.complete) {
            (true, true) => Verdict::Yes,
            (false, true) => Verdict::No,
            _ => Verdict::Inconclusive,
        }
    }

    /// `H_{(S,T)}(U) = 0` and `H_{(U,V)}(T) = 0`.
    pub fn condition_iii(&self, p: &Tcp) -> Verdict {
        let a = p.u.iter().map(|u| self.h_vanishes(&Obj::indec(u), p.inner()));
        let b = p.t.iter().map(|t| self.h_vanishes(&Obj::indec(t), p.outer()));
        Verdict::all(a.chain(b))
    }

    pub fn is_hovey(&self, p: &Tcp, d: &DerivedSets) -> HoveyReport {
        let verdict = match (d.ni == d.nf, d.complete) {
            (true, true) => Verdict::Yes,
            (false, true) => Verdict::No,
            _ => Verdict::Inconclusive,
        };
        let n = d.ni;
        let shift_closed = self.shift(n, 1) == n;
        let (ext, complete) = self.star_set(n, n);
        let extension_closed = match (ext.is_subset(n), complete) {
            (true, true) => Verdict::Yes,
            (false, _) => Verdict::No,
            _ => Verdict::Inconclusive,
        };
        HoveyReport {
            verdict,
            n,
            shift_closed,
            extension_closed,
            perp_identities: p.u == left_perp(self.cat, p.v, 1) && p.t == right_perp(self.cat, p.s, -1),
        }
    }

    /// Coordinates of maps `U -> T[1]` factoring through `add N`, for checking they vanish.
    pub fn factoring_through_is_zero(&self, u: &Obj, t: &Obj, n: Subcat) -> bool {
        let t1 = self.cat.shift_obj(t, 1);
        self.cat.factoring_span(u, &t1, n).dim() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_tcp_shapes() {
        let p = Tcp::trivial_hovey(3);
        assert!(p.is_concentric());
        assert_eq!(p.i(), Subcat::EMPTY);
        assert_eq!(p.z(), Subcat::full(3));
        let d = Tcp::degenerate(CotorsionPair::new(Subcat::single(0), Subcat::single(0)));
        assert!(d.is_degenerate() && d.is_concentric());
    }
}
