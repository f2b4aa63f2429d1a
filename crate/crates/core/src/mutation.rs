//! Mutable cotorsion pairs, the bijections `ℝ`/`𝕀` and the mutation action.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::category::{Backend, CatError, CatResult, IndecId, Mor, Obj};
use crate::f2linalg::{subspaces_up_to, BitVec};
use crate::pairs::CotorsionPair;
use crate::subcat::{enumerate_subcats, Subcat, Verdict};
use crate::zi::ZIQuotient;

/// A pair of subcategories of `Z/I`, as sets of indecomposables of `Z` outside `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZiPair {
    pub l: Subcat,
    pub r: Subcat,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BijectionReport {
    pub mutable: usize,
    pub zi_pairs: usize,
    pub r_lands_in_cp: bool,
    pub i_after_r: bool,
    pub r_after_i: bool,
    pub characterization_agrees: bool,
    pub action_laws: bool,
    /// `None` unless the pair is of the form `S = V`, `U = T`.
    pub zz_class_agrees: Option<bool>,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Nodes are mutable pairs, edges `μ₁`.
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    pub nodes: Vec<CotorsionPair>,
    pub edges: Vec<(usize, usize)>,
}

impl OrbitGraph {
    pub fn to_dot(&self, b: &(impl Backend + ?Sized)) -> String {
        let mut s = String::from("digraph mutation {\n");
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                s,
                "  n{i} [label=\"U=[{}]\\nV=[{}]\"];",
                p.u.labels(b).join(","),
                p.v.labels(b).join(",")
            );
        }
        for (a, c) in &self.edges {
            let _ = writeln!(s, "  n{a} -> n{c};");
        }
        s.push_str("}\n");
        s
    }

    /// Lengths of the cycles of `μ₁`, sorted.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let next: Vec<usize> = {
            let mut v = vec![0; self.nodes.len()];
            for &(a, c) in &self.edges {
                v[a] = c;
            }
            v
        };
        let mut seen = vec![false; next.len()];
        let mut out = Vec::new();
        for start in 0..next.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = next[cur];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }
}

impl<'a> ZIQuotient<'a> {
    /// All indecomposables of `Z/I`.
    pub fn obj_set(&self) -> Subcat {
        self.objects().iter().copied().collect()
    }

    fn image(&self, x: Subcat, f: impl Fn(&Obj) -> Obj) -> Subcat {
        x.iter().flat_map(|a| f(&Obj::indec(a)).summands().to_vec()).collect()
    }

    pub fn sigma_image(&self, a: Subcat) -> Subcat {
        self.image(a, |x| self.sigma_obj(x))
    }

    pub fn omega_image(&self, b: Subcat) -> Subcat {
        self.image(b, |x| self.omega_obj(x))
    }

    /// `{u ∈ U : σ(u) ∈ add L}`.
    pub fn sigma_preimage(&self, l: Subcat) -> Subcat {
        self.p
            .u
            .iter()
            .filter(|&u| l.contains_obj(&self.sigma_obj(&Obj::indec(u))))
            .collect()
    }

    pub fn omega_preimage(&self, r: Subcat) -> Subcat {
        self.p
            .t
            .iter()
            .filter(|&t| r.contains_obj(&self.omega_obj(&Obj::indec(t))))
            .collect()
    }

    /// `Σ^k` (or `Ω^{-k}`) applied to each member.
    pub fn shift_set(&self, x: Subcat, k: i64) -> Subcat {
        self.image(x, |o| self.shift_power(o, k))
    }

    /// Membership by definition: sandwich and vanishing `Ext¹_{Z/I}(σA, ωB)`.
    pub fn in_mp(&self, ab: CotorsionPair) -> bool {
        let p = &self.p;
        if !(p.s.is_subset(ab.u) && ab.u.is_subset(p.u) && p.v.is_subset(ab.v) && ab.v.is_subset(p.t)) {
            return false;
        }
        let sa: Vec<Obj> = ab.u.iter().map(|a| self.sigma_obj(&Obj::indec(a))).collect();
        let wb: Vec<Obj> = ab.v.iter().map(|b| self.omega_obj(&Obj::indec(b))).collect();
        sa.iter().all(|x| wb.iter().all(|y| self.ext1_zi(x, y) == 0))
    }

    /// Membership through `A = U ∩ (S[-1] ∗ A)` and `B = T ∩ (B ∗ V[1])`.
    pub fn in_mp_fixed_point(&self, ab: CotorsionPair) -> Verdict {
        let e = &self.e;
        let (sa, c1) = e.star_set(e.shift(self.p.s, -1), ab.u);
        let (bv, c2) = e.star_set(ab.v, e.shift(self.p.v, 1));
        let ok = self.p.u.intersect(sa) == ab.u && self.p.t.intersect(bv) == ab.v;
        match (ok, c1 && c2) {
            (true, true) => Verdict::Yes,
            (false, true) => Verdict::No,
            _ => Verdict::Inconclusive,
        }
    }

    pub fn r_map(&self, ab: CotorsionPair) -> ZiPair {
        ZiPair {
            l: self.sigma_image(ab.u),
            r: self.omega_image(ab.v),
        }
    }

    /// `(σ̄⁻¹L, ω̄⁻¹R)`, cross-checked against `U ∩ (S[-1] ∗ L̃)` and `T ∩ (R̃ ∗ V[1])`.
    pub fn i_map(&self, lr: ZiPair) -> CatResult<CotorsionPair> {
        let direct = CotorsionPair::new(self.sigma_preimage(lr.l), self.omega_preimage(lr.r));
        let (via_star, complete) = self.i_map_star(lr);
        if complete && via_star != direct {
            return Err(CatError::Internal(format!(
                "inverse images disagree: {:?} vs {:?}",
                direct, via_star
            )));
        }
        Ok(direct)
    }

    pub fn i_map_star(&self, lr: ZiPair) -> (CotorsionPair, bool) {
        let e = &self.e;
        let i = self.d.i;
        let (a, c1) = e.star_set(e.shift(self.p.s, -1), lr.l.union(i));
        let (b, c2) = e.star_set(lr.r.union(i), e.shift(self.p.v, 1));
        (
            CotorsionPair::new(self.p.u.intersect(a), self.p.t.intersect(b)),
            c1 && c2,
        )
    }

    /// `μ_k = 𝕀 ∘ Σ^k ∘ ℝ`.
    pub fn mutate(&self, ab: CotorsionPair, k: i64) -> CatResult<CotorsionPair> {
        let lr = self.r_map(ab);
        let shifted = ZiPair {
            l: self.shift_set(lr.l, k),
            r: self.shift_set(lr.r, k),
        };
        self.i_map(shifted)
    }

    /// Whether `z ∈ L ∗ ΣR` in `Z/I`, read off standard right triangles `l -> z -> σ(C_f) -> Σl`.
    pub fn zi_star_contains(&self, l: Subcat, sigma_r: Subcat, z: IndecId) -> CatResult<bool> {
        if sigma_r.contains(z) {
            return Ok(true);
        }
        let zo = Obj::indec(z);
        let cands: Vec<(IndecId, Vec<BitVec>)> = l
            .iter()
            .map(|a| (a, self.hom_mod_i(&Obj::indec(a), &zo).reps))
            .filter(|(_, reps)| !reps.is_empty())
            .collect();
        let lists: Vec<Vec<Vec<BitVec>>> = cands
            .iter()
            .map(|(_, reps)| subspaces_up_to(reps.len(), reps.len()))
            .collect();
        let mut choice = vec![0usize; cands.len()];
        loop {
            let mut ids = Vec::new();
            let mut coords = BitVec::zeros(0);
            for (idx, (a, reps)) in cands.iter().enumerate() {
                for w in &lists[idx][choice[idx]] {
                    let mut v = BitVec::zeros(reps[0].len());
                    for t in w.iter_ones() {
                        v.xor_assign(&reps[t]);
                    }
                    ids.push(*a);
                    coords = coords.concat(&v);
                }
            }
            if !ids.is_empty() {
                let f = Mor {
                    src: Obj::from_ids(ids),
                    dst: zo.clone(),
                    coords,
                };
                if sigma_r.contains_obj(&self.right_third(&f)?) {
                    return Ok(true);
                }
            }
            // odometer over subspace choices
            let mut idx = 0;
            loop {
                if idx == cands.len() {
                    return Ok(false);
                }
                choice[idx] += 1;
                if choice[idx] < lists[idx].len() {
                    break;
                }
                choice[idx] = 0;
                idx += 1;
            }
        }
    }

    /// Cotorsion pairs of `Z/I`, computed inside the quotient.
    pub fn cp_zi(&self) -> CatResult<Vec<ZiPair>> {
        let objs = self.objects().to_vec();
        let local = enumerate_subcats(objs.len(), |_| true, false)?;
        let sigma: Vec<Subcat> = objs.iter().map(|&r| self.shift_set(Subcat::single(r), 1)).collect();
        let mut out = Vec::new();
        for bits in local {
            let l: Subcat = bits.iter().map(|t| objs[t]).collect();
            let r: Subcat = objs
                .iter()
                .enumerate()
                .filter(|&(t, _)| {
                    l.iter().all(|a| {
                        let target = Obj::from_ids(sigma[t].iter().collect());
                        self.hom_dim(&Obj::indec(a), &target) == 0
                    })
                })
                .map(|(_, &r)| r)
                .collect();
            let sigma_r = self.shift_set(r, 1);
            let mut covered = true;
            for &z in &objs {
                if !self.zi_star_contains(l, sigma_r, z)? {
                    covered = false;
                    break;
                }
            }
            if covered {
                out.push(ZiPair { l, r });
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn mutable_class(&self, cps: &[CotorsionPair]) -> Vec<CotorsionPair> {
        cps.iter().copied().filter(|&p| self.in_mp(p)).collect()
    }

    pub fn verify_bijection(&self, cps: &[CotorsionPair]) -> CatResult<BijectionReport> {
        let mp = self.mutable_class(cps);
        let cpzi = self.cp_zi()?;
        let cpzi_set: BTreeSet<ZiPair> = cpzi.iter().copied().collect();
        let mp_set: BTreeSet<CotorsionPair> = mp.iter().copied().collect();
        let mut rep = BijectionReport {
            mutable: mp.len(),
            zi_pairs: cpzi.len(),
            r_lands_in_cp: true,
            i_after_r: true,
            r_after_i: true,
            characterization_agrees: true,
            action_laws: true,
            zz_class_agrees: None,
            failures: Vec::new(),
        };
        let b = self.cat();
        let show = |p: &CotorsionPair| format!("(U=[{}], V=[{}])", p.u.labels(b).join(","), p.v.labels(b).join(","));
        if mp.len() != cpzi.len() {
            rep.failures
                .push(format!("class sizes differ: {} vs {}", mp.len(), cpzi.len()));
        }
        for ab in &mp {
            let lr = self.r_map(*ab);
            if !cpzi_set.contains(&lr) {
                rep.r_lands_in_cp = false;
                rep.failures
                    .push(format!("ℝ{} is not a cotorsion pair of Z/I", show(ab)));
            }
            if self.i_map(lr)? != *ab {
                rep.i_after_r = false;
                rep.failures.push(format!("𝕀ℝ{} differs", show(ab)));
            }
        }
        for lr in &cpzi {
            let ab = self.i_map(*lr)?;
            if !mp_set.contains(&ab) {
                rep.r_after_i = false;
                rep.failures.push(format!("𝕀{lr:?} = {} is not mutable", show(&ab)));
            } else if self.r_map(ab) != *lr {
                rep.r_after_i = false;
                rep.failures.push(format!("ℝ𝕀{lr:?} differs"));
            }
        }
        for ab in cps {
            if !(self.p.s.is_subset(ab.u) && self.p.v.is_subset(ab.v)) {
                continue;
            }
            let by_def = self.in_mp(*ab);
            match self.in_mp_fixed_point(*ab) {
                Verdict::Inconclusive => rep
                    .failures
                    .push(format!("fixed-point test inconclusive on {}", show(ab))),
                v if v.is_yes() != by_def => {
                    rep.characterization_agrees = false;
                    rep.failures.push(format!("membership tests disagree on {}", show(ab)));
                }
                _ => {}
            }
        }
        for ab in &mp {
            if self.mutate(*ab, 0)? != *ab {
                rep.action_laws = false;
                rep.failures.push(format!("μ₀ moves {}", show(ab)));
            }
            for s in [-1i64, 0, 1, 2] {
                let inner = self.mutate(*ab, s)?;
                for t in [-1i64, 0, 1, 2] {
                    if self.mutate(inner, t)? != self.mutate(*ab, s + t)? {
                        rep.action_laws = false;
                        rep.failures.push(format!("μ{t}∘μ{s} ≠ μ{} on {}", s + t, show(ab)));
                    }
                }
            }
        }
        if self.p.s == self.p.v && self.p.u == self.p.t {
            let expected: BTreeSet<CotorsionPair> = cps
                .iter()
                .copied()
                .filter(|ab| self.d.i.is_subset(ab.u) && ab.u.is_subset(self.d.z))
                .collect();
            let ok = expected == mp_set;
            rep.zz_class_agrees = Some(ok);
            if !ok {
                rep.failures.push("mutable class differs from {I ⊆ A ⊆ Z}".into());
            }
        }
        Ok(rep)
    }

    pub fn orbit_graph(&self, cps: &[CotorsionPair]) -> CatResult<OrbitGraph> {
        let nodes = self.mutable_class(cps);
        let mut edges = Vec::with_capacity(nodes.len());
        for (i, ab) in nodes.iter().enumerate() {
            let next = self.mutate(*ab, 1)?;
            let j = nodes
                .iter()
                .position(|x| *x == next)
                .ok_or_else(|| CatError::Internal("μ₁ left the mutable class".into()))?;
            edges.push((i, j));
        }
        Ok(OrbitGraph { nodes, edges })
    }
}
