//! The subquotient `Z/I` of a concentric twin cotorsion pair.
//!
//! Objects of `Z/I` are the indecomposables of `Z` outside `I`; a summand in
//! `I` is zero in the quotient and no two remaining indecomposables become
//! isomorphic, so object-level isomorphism in `Z/I` is equality of multisets
//! after deleting `I`-summands. Every functor value carries the triangle it
//! was read off from:
//!
//! * `σ(U)`: `S[-1] -> U --η--> σU -> S`, found as a member of `S[-1] ∗ Z`;
//! * `ω(T)`: `ωT --ε--> T -> V[1] -> ωT[1]`, a member of `Z ∗ V[1]`;
//! * `⟨1⟩Z`: `U[-1] -> Z --ι--> I_Z --℘--> U`, a member of `U[-1] ∗ I`;
//! * `⟨-1⟩Z`: `I_Z -> Z -> T[1] -> I_Z[1]`, a member of `I ∗ T[1]`.
//!
//! Witnesses for decomposable objects are direct sums of the witnesses of
//! their summands.

use std::sync::Arc;

use crate::category::{Backend, CatError, CatResult, IndecId, Mor, Obj, Tri};
use crate::f2linalg::{BitVec, Span};
use crate::nakayama::{solve_linear, Nakayama, StarVerdict};
use crate::pairs::{DerivedSets, Engine, Tcp};
use crate::subcat::{Subcat, Verdict};

/// `Hom_{Z/I}(X, Y)`.
#[derive(Debug, Clone)]
pub struct QuotientHom {
    pub ambient_dim: usize,
    /// Maps factoring through `add I`.
    pub factoring: Span,
    /// Representatives of a basis of the quotient.
    pub reps: Vec<BitVec>,
}

impl QuotientHom {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

#[derive(Debug, Clone)]
pub struct IsoReport {
    /// Two-sided inverse modulo `I` exists.
    pub iso: bool,
    /// `Cone(f) ∈ I ∗ I[1]`.
    pub cone_test: Verdict,
}

/// The morphism `μ_X: σ(ω_U X) -> ω(σ_T X)`.
#[derive(Debug, Clone)]
pub struct MuReport {
    pub z: Mor,
    pub iso: IsoReport,
}

/// `X --f--> Y --g--> third --h--> ΣX` (standard right triangle) or
/// `ΩY --h--> third --g--> X --f--> Y` (standard left triangle).
#[derive(Debug, Clone)]
pub struct ZiTriangle {
    pub f: Mor,
    pub g: Mor,
    pub h: Mor,
    /// The cone (or cocone) formed in the ambient category.
    pub ambient: Obj,
}

pub struct ZIQuotient<'a> {
    pub e: Engine<'a>,
    pub p: Tcp,
    pub d: DerivedSets,
    objs: Vec<IndecId>,
    sigma: Vec<Option<Obj>>,
    omega: Vec<Option<Obj>>,
    plus: Vec<Option<Obj>>,
    minus: Vec<Option<Obj>>,
    big_sigma: Vec<Option<Obj>>,
    big_omega: Vec<Option<Obj>>,
}

fn zero_tri(cat: &Nakayama) -> Tri {
    let z = Obj::zero();
    Tri {
        a: z.clone(),
        b: z.clone(),
        c: z.clone(),
        f: cat.zero_mor(&z, &z),
        g: cat.zero_mor(&z, &z),
        h: cat.zero_mor(&z, &z),
        morphism_data: true,
    }
}

fn tri_sum(cat: &Nakayama, s: &Tri, t: &Tri) -> Tri {
    Tri {
        a: s.a.sum(&t.a),
        b: s.b.sum(&t.b),
        c: s.c.sum(&t.c),
        f: cat.direct_sum_mor(&s.f, &t.f),
        g: cat.direct_sum_mor(&s.g, &t.g),
        h: cat.direct_sum_mor(&s.h, &t.h),
        morphism_data: true,
    }
}

impl<'a> ZIQuotient<'a> {
    pub fn build(e: Engine<'a>, p: Tcp) -> CatResult<Self> {
        if !p.is_concentric() {
            return Err(CatError::Invalid("twin cotorsion pair is not concentric".into()));
        }
        let d = e.derived_sets(&p);
        if !d.complete {
            return Err(CatError::Inconclusive("derived star sets".into()));
        }
        let k = e.k();
        let objs: Vec<IndecId> = d.z.minus(d.i).iter().collect();
        let mut q = ZIQuotient {
            e,
            p,
            d,
            objs,
            sigma: vec![None; k],
            omega: vec![None; k],
            plus: vec![None; k],
            minus: vec![None; k],
            big_sigma: vec![None; k],
            big_omega: vec![None; k],
        };
        for u in p.u.iter() {
            q.sigma[u] = Some(q.strip(&q.sigma_witness_indec(u)?.c));
        }
        for t in p.t.iter() {
            q.omega[t] = Some(q.strip(&q.omega_witness_indec(t)?.a));
        }
        for z in q.objs.clone() {
            let up = q.e.cat.shift_obj_by(&q.bracket_witness_indec(z, 1)?.a, 1);
            let dn = q.e.cat.shift_obj_by(&q.bracket_witness_indec(z, -1)?.c, -1);
            if !p.u.contains_obj(&up) || !p.t.contains_obj(&dn) {
                return Err(CatError::Internal("shifted object left U or T".into()));
            }
            q.big_sigma[z] = Some(q.sigma_obj(&up));
            q.big_omega[z] = Some(q.omega_obj(&dn));
            q.plus[z] = Some(up);
            q.minus[z] = Some(dn);
        }
        Ok(q)
    }

    pub fn cat(&self) -> &'a Nakayama {
        self.e.cat
    }

    /// Indecomposable objects of `Z/I`.
    pub fn objects(&self) -> &[IndecId] {
        &self.objs
    }

    pub fn is_zero_category(&self) -> bool {
        self.objs.is_empty()
    }

    /// Deletes summands lying in `I`.
    pub fn strip(&self, x: &Obj) -> Obj {
        x.filter(|a| !self.d.i.contains(a)).0
    }

    fn witness(&self, x: Subcat, y: Subcat, c: IndecId, what: &str) -> CatResult<Arc<Tri>> {
        match self.e.star(x, y, &Obj::indec(c)) {
            StarVerdict::Yes(t) => Ok(t),
            StarVerdict::No => Err(CatError::Internal(format!(
                "decomposition missing: {what} of {}",
                self.cat().label(c)
            ))),
            StarVerdict::Inconclusive => Err(CatError::Inconclusive(format!("{what} of {}", self.cat().label(c)))),
        }
    }

    fn witness_sum(&self, x: &Obj, each: impl Fn(IndecId) -> CatResult<Arc<Tri>>) -> CatResult<Tri> {
        let cat = self.cat();
        let mut acc = zero_tri(cat);
        for &a in x.summands() {
            acc = tri_sum(cat, &acc, each(a)?.as_ref());
        }
        Ok(acc)
    }

    fn sigma_witness_indec(&self, u: IndecId) -> CatResult<Arc<Tri>> {
        self.witness(self.e.shift(self.p.s, -1), self.d.z, u, "σ")
    }

    fn omega_witness_indec(&self, t: IndecId) -> CatResult<Arc<Tri>> {
        self.witness(self.d.z, self.e.shift(self.p.v, 1), t, "ω")
    }

    fn bracket_witness_indec(&self, z: IndecId, sign: i64) -> CatResult<Arc<Tri>> {
        if sign > 0 {
            self.witness(self.e.shift(self.p.u, -1), self.d.i, z, "⟨1⟩")
        } else {
            self.witness(self.d.i, self.e.shift(self.p.t, 1), z, "⟨-1⟩")
        }
    }

    /// `S[-1] -> U --η--> σU -> S` for `U ∈ add U`.
    pub fn sigma_witness(&self, u: &Obj) -> CatResult<Tri> {
        self.witness_sum(u, |a| self.sigma_witness_indec(a))
    }

    /// `ωT --ε--> T -> V[1] -> ωT[1]` for `T ∈ add T`.
    pub fn omega_witness(&self, t: &Obj) -> CatResult<Tri> {
        self.witness_sum(t, |a| self.omega_witness_indec(a))
    }

    /// The defining triangle of `⟨sign⟩Z`.
    pub fn bracket_witness(&self, z: &Obj, sign: i64) -> CatResult<Tri> {
        self.witness_sum(z, |a| self.bracket_witness_indec(a, sign))
    }

    fn lookup(&self, table: &[Option<Obj>], x: &Obj, what: &str) -> Obj {
        let mut out = Obj::zero();
        for &a in x.summands() {
            if self.d.i.contains(a) && table[a].is_none() {
                continue;
            }
            let v = table[a]
                .as_ref()
                .unwrap_or_else(|| panic!("{what} is undefined on {}", self.cat().label(a)));
            out = out.sum(v);
        }
        out
    }

    /// `σ(U)` up to isomorphism in `Z/I`, with `I`-summands deleted.
    pub fn sigma_obj(&self, u: &Obj) -> Obj {
        self.lookup(&self.sigma, u, "σ")
    }

    pub fn omega_obj(&self, t: &Obj) -> Obj {
        self.lookup(&self.omega, t, "ω")
    }

    /// `⟨1⟩Z ∈ U` or `⟨-1⟩Z ∈ T`.
    pub fn bracket_obj(&self, z: &Obj, sign: i64) -> Obj {
        let z = self.strip(z);
        if sign > 0 {
            self.lookup(&self.plus, &z, "⟨1⟩")
        } else {
            self.lookup(&self.minus, &z, "⟨-1⟩")
        }
    }

    #[allow(non_snake_case)]
    pub fn Sigma_obj(&self, z: &Obj) -> Obj {
        self.lookup(&self.big_sigma, &self.strip(z), "Σ")
    }

    #[allow(non_snake_case)]
    pub fn Omega_obj(&self, z: &Obj) -> Obj {
        self.lookup(&self.big_omega, &self.strip(z), "Ω")
    }

    /// `Σ^k` for `k ≥ 0`, `Ω^{-k}` otherwise.
    pub fn shift_power(&self, z: &Obj, k: i64) -> Obj {
        let mut cur = self.strip(z);
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 {
                self.Sigma_obj(&cur)
            } else {
                self.Omega_obj(&cur)
            };
        }
        cur
    }

    pub fn hom_mod_i(&self, x: &Obj, y: &Obj) -> QuotientHom {
        let factoring = self.cat().factoring_span(x, y, self.d.i);
        let reps = factoring.complement_units();
        QuotientHom {
            ambient_dim: factoring.ambient_dim(),
            factoring,
            reps,
        }
    }

    pub fn hom_dim(&self, x: &Obj, y: &Obj) -> usize {
        self.hom_mod_i(x, y).dim()
    }

    pub fn is_zero_mod_i(&self, f: &Mor) -> bool {
        self.cat().factoring_span(&f.src, &f.dst, self.d.i).contains(&f.coords)
    }

    pub fn equal_mod_i(&self, f: &Mor, g: &Mor) -> bool {
        self.is_zero_mod_i(&self.cat().add(f, g))
    }

    /// `dim Hom_{Z/I}(X, ΣY)`.
    pub fn ext1_zi(&self, x: &Obj, y: &Obj) -> usize {
        self.hom_dim(&self.strip(x), &self.Sigma_obj(y))
    }

    /// Some `s: src -> dst` with `post(s) ≡ target` modulo `modulo`.
    fn solve_for(&self, src: &Obj, dst: &Obj, target: &Mor, modulo: Subcat, post: impl Fn(&Mor) -> Mor) -> Option<Mor> {
        let cat = self.cat();
        let basis = cat.hom_basis(src, dst);
        let modspan = if modulo.is_empty() {
            Vec::new()
        } else {
            cat.factoring_span(&target.src, &target.dst, modulo).basis()
        };
        let out_len = target.coords.len();
        let sol = solve_linear(basis.len(), out_len, &target.coords, &modspan, |i| {
            post(&basis[i]).coords
        })?;
        Some(cat.mor_from_coords(src, dst, sol))
    }

    /// `σ(u)` for `u: U1 -> U2` in `add U`, between the chosen `σ`-witnesses.
    pub fn sigma_mor(&self, u: &Mor) -> CatResult<Mor> {
        let cat = self.cat();
        let w1 = self.sigma_witness(&u.src)?;
        let w2 = self.sigma_witness(&u.dst)?;
        let target = cat.compose(u, &w2.g)?;
        self.solve_for(&w1.c, &w2.c, &target, self.d.i, |s| cat.compose_unchecked(&w1.g, s))
            .ok_or_else(|| CatError::Internal("σ does not extend along the unit".into()))
    }

    /// `ω(t)` for `t: T1 -> T2` in `add T`.
    pub fn omega_mor(&self, t: &Mor) -> CatResult<Mor> {
        let cat = self.cat();
        let w1 = self.omega_witness(&t.src)?;
        let w2 = self.omega_witness(&t.dst)?;
        let target = cat.compose(&w1.f, t)?;
        self.solve_for(&w1.a, &w2.a, &target, self.d.i, |s| cat.compose_unchecked(s, &w2.f))
            .ok_or_else(|| CatError::Internal("ω does not extend along the counit".into()))
    }

    /// `⟨1⟩f: ⟨1⟩Z -> ⟨1⟩Z'`, completing `f` to a morphism of the defining triangles.
    pub fn bracket_mor(&self, f: &Mor) -> CatResult<Mor> {
        let cat = self.cat();
        let w1 = self.bracket_witness(&f.src, 1)?;
        let w2 = self.bracket_witness(&f.dst, 1)?;
        let gamma1 = cat.shift_mor(&w1.f, 1);
        let gamma2 = cat.shift_mor(&w2.f, 1);
        let target = cat.compose(&gamma1, &cat.shift_mor(f, 1))?;
        self.solve_for(&gamma1.src, &gamma2.src, &target, Subcat::EMPTY, |u| {
            cat.compose_unchecked(u, &gamma2)
        })
        .ok_or_else(|| CatError::Internal("triangle morphism has no completion".into()))
    }

    /// `Σf = σ(⟨1⟩f)` for `f` in `add Z`.
    #[allow(non_snake_case)]
    pub fn Sigma_mor(&self, f: &Mor) -> CatResult<Mor> {
        self.sigma_mor(&self.bracket_mor(f)?)
    }

    /// The object `Σf` starts from, `I`-summands included.
    pub fn sigma_target(&self, z: &Obj) -> CatResult<Obj> {
        let up = self.cat().shift_obj_by(&self.bracket_witness(z, 1)?.a, 1);
        Ok(self.sigma_witness(&up)?.c)
    }

    pub fn iso_in_quotient(&self, f: &Mor) -> IsoReport {
        let cat = self.cat();
        let (x, y) = (&f.src, &f.dst);
        let right = self.solve_for(y, x, &cat.identity(y), self.d.i, |w| cat.compose_unchecked(w, f));
        let left = self.solve_for(y, x, &cat.identity(x), self.d.i, |w| cat.compose_unchecked(f, w));
        let cone = cat.cone(f).tri.c;
        let cone_test = self.e.star(self.d.i, self.e.shift(self.d.i, 1), &cone).verdict();
        IsoReport {
            iso: right.is_some() && left.is_some(),
            cone_test,
        }
    }

    /// Realizes `μ_X` by a map `z: Z_U -> Z_T` with `z_T ∘ z ∘ z_U = t_X ∘ u_X` modulo `I`.
    pub fn mu(&self, x: &Obj) -> CatResult<MuReport> {
        let cat = self.cat();
        let e = &self.e;
        let star = |a: Subcat, b: Subcat, what: &str| -> CatResult<Arc<Tri>> {
            match e.star(a, b, x) {
                StarVerdict::Yes(t) => Ok(t),
                StarVerdict::No => Err(CatError::Internal(format!("decomposition missing: {what}"))),
                StarVerdict::Inconclusive => Err(CatError::Inconclusive(what.into())),
            }
        };
        let wu = star(self.p.u, e.shift(self.p.v, 1), "U ∗ V[1]")?;
        let wt = star(e.shift(self.p.s, -1), self.p.t, "S[-1] ∗ T")?;
        let ws = self.sigma_witness(&wu.a)?;
        let wo = self.omega_witness(&wt.c)?;
        let target = cat.compose(&wu.f, &wt.g)?;
        let z = self
            .solve_for(&ws.c, &wo.a, &target, self.d.i, |z| {
                cat.compose_unchecked(&cat.compose_unchecked(&ws.g, z), &wo.f)
            })
            .ok_or_else(|| CatError::Internal("μ has no realization".into()))?;
        let iso = self.iso_in_quotient(&z);
        Ok(MuReport { z, iso })
    }

    /// Condition (I) on the indecomposables of `T ∗ U`.
    pub fn condition_i(&self) -> CatResult<Verdict> {
        let (tu, complete) = self.e.star_set(self.p.t, self.p.u);
        let mut v = if complete { Verdict::Yes } else { Verdict::Inconclusive };
        for x in tu.iter() {
            match self.mu(&Obj::indec(x)) {
                Ok(r) if !r.iso.iso => return Ok(Verdict::No),
                Ok(_) => {}
                Err(CatError::Inconclusive(_)) => v = Verdict::Inconclusive,
                Err(err) => return Err(err),
            }
        }
        Ok(v)
    }

    /// `X --f--> Y -> σ(C_f) -> ΣX` with `C_f` the cone of `[f; ι_X]: X -> Y ⊕ I_X`.
    pub fn standard_right_triangle(&self, f: &Mor) -> CatResult<ZiTriangle> {
        let cat = self.cat();
        let wb = self.bracket_witness(&f.src, 1)?;
        let gamma = cat.shift_mor(&wb.f, 1);
        let (st, pos_y, _) = cat.stack(f, &wb.g);
        let cw = cat.cone(&st).tri;
        if !self.p.u.contains_obj(&cw.c) {
            return Err(CatError::Internal("cone of a standard right triangle left U".into()));
        }
        let ws = self.sigma_witness(&cw.c)?;
        let incl = cat.inclusion(&st.dst, &pos_y);
        let g = cat.compose(&cat.compose(&incl, &cw.g)?, &ws.g)?;
        let q = self
            .solve_for(&cw.c, &gamma.src, &cw.h, Subcat::EMPTY, |q| {
                cat.compose_unchecked(q, &gamma)
            })
            .ok_or_else(|| CatError::Internal("cone map does not lift to ⟨1⟩X".into()))?;
        let h = self.sigma_mor(&q)?;
        Ok(ZiTriangle {
            f: f.clone(),
            g,
            h,
            ambient: cw.c.clone(),
        })
    }

    /// `ΩY -> ω(K_f) -> X --f--> Y` with `K_f` the cocone of `(f, κ_Y): X ⊕ I_Y -> Y`.
    pub fn standard_left_triangle(&self, f: &Mor) -> CatResult<ZiTriangle> {
        let cat = self.cat();
        let wb = self.bracket_witness(&f.dst, -1)?;
        let (co, pos_x, _) = cat.costack(f, &wb.f);
        let cw = cat.cone(&co).tri;
        let k = cat.shift_obj_by(&cw.c, -1);
        if !self.p.t.contains_obj(&k) {
            return Err(CatError::Internal("cocone of a standard left triangle left T".into()));
        }
        let wo = self.omega_witness(&k)?;
        let to_src = cat.shift_mor(&cw.h, -1);
        let proj = cat.projection(&co.src, &pos_x);
        let g = cat.compose(&cat.compose(&wo.f, &to_src)?, &proj)?;
        let p = self
            .solve_for(&wb.c, &cw.c, &cw.g, Subcat::EMPTY, |p| cat.compose_unchecked(&wb.g, p))
            .ok_or_else(|| CatError::Internal("cocone map does not lift from ⟨-1⟩Y".into()))?;
        let h = self.omega_mor(&cat.shift_mor(&p, -1))?;
        Ok(ZiTriangle {
            f: f.clone(),
            g,
            h,
            ambient: k,
        })
    }

    /// The third object `σ(C_f)` of the standard right triangle, `I`-summands deleted.
    pub fn right_third(&self, f: &Mor) -> CatResult<Obj> {
        let cat = self.cat();
        let wb = self.bracket_witness(&f.src, 1)?;
        let (st, _, _) = cat.stack(f, &wb.g);
        let c = cat.cone(&st).tri.c;
        if !self.p.u.contains_obj(&c) {
            return Err(CatError::Internal("cone of a standard right triangle left U".into()));
        }
        Ok(self.sigma_obj(&c))
    }
}
