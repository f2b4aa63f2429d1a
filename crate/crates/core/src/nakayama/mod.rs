//! The stable module category of the self-injective Nakayama algebra
//! `Λ(m, n)` over F2: the cyclic quiver on `m` vertices with all paths of
//! length `n` set to zero.
//!
//! The nonprojective indecomposables are the uniserials `M(i, ℓ)` with top
//! at vertex `i` and length `1 <= ℓ <= n - 1`. Every Hom space is computed
//! from raw module maps modulo the maps factoring through the projective
//! cover of the target; nothing is taken from closed formulas.

mod cone;
pub use cone::TriangleWitness;
pub mod raw;
mod star;

use std::collections::HashMap;
use std::sync::Mutex;

use crate::category::{Backend, BackendCaps, BlockLayout, CatError, CatResult, IndecId, Mor, Obj};
use crate::f2linalg::{BitVec, F2Matrix, Span};
use crate::subcat::Subcat;
use raw::{hom_basis, RawModule};

pub use star::{StarConfig, StarStats, StarVerdict};

/// Largest number of indecomposables a backend may have.
pub const DEFAULT_SIZE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NakayamaParams {
    pub m: usize,
    pub n: usize,
}

/// Stable Hom data for an ordered pair of indecomposables.
#[derive(Debug, Clone)]
pub(crate) struct HomEntry {
    pub dim: usize,
    /// Raw representatives of the stable basis, `len(b) x len(a)` matrices.
    pub reps: Vec<F2Matrix>,
    /// Reads stable coordinates off a flattened raw map.
    pub extract: F2Matrix,
    pub raw_dim: usize,
    pub factoring_dim: usize,
}

impl HomEntry {
    pub fn coords_of(&self, raw: &F2Matrix) -> BitVec {
        self.extract.mul_vec(&raw.flatten())
    }
}

pub struct Nakayama {
    params: NakayamaParams,
    /// `(top, length)` of each indecomposable.
    indecs: Vec<(usize, usize)>,
    labels: Vec<String>,
    shift: Vec<usize>,
    unshift: Vec<usize>,
    hom: Vec<HomEntry>,
    /// Structure constants, indexed by `(a, b, c)` then `p * dim(b, c) + q`.
    comp: Vec<Vec<BitVec>>,
    shift_mor: Vec<F2Matrix>,
    unshift_mor: Vec<F2Matrix>,
    id_coords: Vec<BitVec>,
    pub(crate) star_memo: Mutex<HashMap<star::MemoKey, StarVerdict>>,
    pub(crate) stats: Mutex<StarStats>,
}

impl std::fmt::Debug for Nakayama {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Nakayama")
            .field("m", &self.params.m)
            .field("n", &self.params.n)
            .finish()
    }
}

impl Nakayama {
    pub fn build(m: usize, n: usize) -> CatResult<Self> {
        Self::build_with_cap(m, n, DEFAULT_SIZE_CAP)
    }

    pub fn build_with_cap(m: usize, n: usize, size_cap: usize) -> CatResult<Self> {
        if m < 1 || n < 2 {
            return Err(CatError::Invalid(format!("need m >= 1 and n >= 2, got m={m}, n={n}")));
        }
        let k = m * (n - 1);
        if k > size_cap {
            return Err(CatError::Invalid(format!(
                "Λ({m},{n}) has {k} indecomposables, above the cap of {size_cap}"
            )));
        }
        let mut indecs = Vec::with_capacity(k);
        for len in 1..n {
            for top in 0..m {
                indecs.push((top, len));
            }
        }
        let id_of = |top: usize, len: usize| (len - 1) * m + top;
        let labels = indecs.iter().map(|&(t, l)| format!("M({t},{l})")).collect();
        let shift: Vec<usize> = indecs
            .iter()
            .map(|&(t, l)| id_of((t + m * n + l - n) % m, n - l))
            .collect();
        let mut unshift = vec![0; k];
        for (a, &b) in shift.iter().enumerate() {
            unshift[b] = a;
        }

        let modules: Vec<RawModule> = indecs.iter().map(|&(t, l)| RawModule::uniserial(m, t, l)).collect();
        let mut hom = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                hom.push(stable_hom(m, n, &modules[a], &modules[b], indecs[b]));
            }
        }

        let mut cat = Nakayama {
            params: NakayamaParams { m, n },
            indecs,
            labels,
            shift,
            unshift,
            hom,
            comp: Vec::new(),
            shift_mor: Vec::new(),
            unshift_mor: Vec::new(),
            id_coords: Vec::new(),
            star_memo: Mutex::new(HashMap::new()),
            stats: Mutex::new(StarStats::default()),
        };
        cat.id_coords = (0..k)
            .map(|a| {
                let l = cat.indecs[a].1;
                cat.entry(a, a).coords_of(&F2Matrix::identity(l))
            })
            .collect();
        cat.build_composition();
        cat.build_shift_tables();
        Ok(cat)
    }

    pub fn params(&self) -> NakayamaParams {
        self.params
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn k(&self) -> usize {
        self.indecs.len()
    }

    /// `(top, length)` of an indecomposable.
    pub fn uniserial(&self, id: IndecId) -> (usize, usize) {
        self.indecs[id]
    }

    pub fn id_of(&self, top: usize, len: usize) -> Option<IndecId> {
        let (m, n) = (self.params.m, self.params.n);
        (len >= 1 && len < n).then(|| (len - 1) * m + top % m)
    }

    #[inline]
    pub(crate) fn entry(&self, a: IndecId, b: IndecId) -> &HomEntry {
        &self.hom[a * self.k() + b]
    }

    #[inline]
    pub fn dim(&self, a: IndecId, b: IndecId) -> usize {
        self.entry(a, b).dim
    }

    /// Dimensions of raw Hom, of the projective-factoring part, and of stable Hom.
    pub fn hom_table_entry(&self, a: IndecId, b: IndecId) -> (usize, usize, usize) {
        let e = self.entry(a, b);
        (e.raw_dim, e.factoring_dim, e.dim)
    }

    fn build_composition(&mut self) {
        let k = self.k();
        let mut comp = Vec::with_capacity(k * k * k);
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let (ab, bc, ac) = (self.entry(a, b), self.entry(b, c), self.entry(a, c));
                    let mut table = Vec::with_capacity(ab.dim * bc.dim);
                    for p in 0..ab.dim {
                        for q in 0..bc.dim {
                            let raw = bc.reps[q].mul(&ab.reps[p]);
                            table.push(ac.coords_of(&raw));
                        }
                    }
                    comp.push(table);
                }
            }
        }
        self.comp = comp;
    }

    fn build_shift_tables(&mut self) {
        let (m, n) = (self.params.m, self.params.n);
        let k = self.k();
        let hulls: Vec<(RawModule, F2Matrix)> = self.indecs.iter().map(|&(t, l)| injective_hull(m, n, t, l)).collect();
        let mut shift_mor = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                let (a1, b1) = (self.shift[a], self.shift[b]);
                let target = self.entry(a1, b1);
                let mut mat = F2Matrix::zeros(target.dim, self.dim(a, b));
                let lifts = hom_basis(&hulls[a].0, &hulls[b].0);
                for (p, rep) in self.entry(a, b).reps.iter().enumerate() {
                    let shifted = shift_raw(rep, &hulls[a], &hulls[b], &lifts, n);
                    let coords = target.coords_of(&shifted);
                    for i in coords.iter_ones() {
                        mat.set(i, p, true);
                    }
                }
                shift_mor.push(mat);
            }
        }
        let mut unshift_mor = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                let (a0, b0) = (self.unshift[a], self.unshift[b]);
                let fwd = &shift_mor[a0 * k + b0];
                let inv = if fwd.rows() == 0 {
                    F2Matrix::zeros(0, 0)
                } else {
                    fwd.inverse().expect("shift must act bijectively on stable Hom spaces")
                };
                unshift_mor.push(inv);
            }
        }
        self.shift_mor = shift_mor;
        self.unshift_mor = unshift_mor;
    }

    // ---- morphisms ----

    pub fn layout(&self, src: &Obj, dst: &Obj) -> BlockLayout {
        BlockLayout::new(src, dst, |a, b| self.dim(a, b))
    }

    pub fn hom_dim_obj(&self, x: &Obj, y: &Obj) -> usize {
        let mut d = 0;
        for &a in x.summands() {
            for &b in y.summands() {
                d += self.dim(a, b);
            }
        }
        d
    }

    pub fn zero_mor(&self, src: &Obj, dst: &Obj) -> Mor {
        Mor {
            src: src.clone(),
            dst: dst.clone(),
            coords: BitVec::zeros(self.hom_dim_obj(src, dst)),
        }
    }

    pub fn identity(&self, x: &Obj) -> Mor {
        let lay = self.layout(x, x);
        let mut coords = BitVec::zeros(lay.total);
        for (i, &a) in x.summands().iter().enumerate() {
            let (off, _) = lay.block(i, i);
            coords.write_at(off, &self.id_coords[a]);
        }
        Mor {
            src: x.clone(),
            dst: x.clone(),
            coords,
        }
    }

    /// Basis morphisms of `Hom(src, dst)`.
    pub fn hom_basis(&self, src: &Obj, dst: &Obj) -> Vec<Mor> {
        let d = self.hom_dim_obj(src, dst);
        (0..d)
            .map(|i| Mor {
                src: src.clone(),
                dst: dst.clone(),
                coords: BitVec::unit(d, i),
            })
            .collect()
    }

    pub fn mor_from_coords(&self, src: &Obj, dst: &Obj, coords: BitVec) -> Mor {
        debug_assert_eq!(coords.len(), self.hom_dim_obj(src, dst));
        Mor {
            src: src.clone(),
            dst: dst.clone(),
            coords,
        }
    }

    /// Builds a morphism block by block; `block(i, j)` gives the coordinates
    /// from source summand `i` to target summand `j`.
    pub fn mor_from_blocks(&self, src: &Obj, dst: &Obj, mut block: impl FnMut(usize, usize) -> Option<BitVec>) -> Mor {
        let lay = self.layout(src, dst);
        let mut coords = BitVec::zeros(lay.total);
        for i in 0..src.len() {
            for j in 0..dst.len() {
                if let Some(v) = block(i, j) {
                    let (off, w) = lay.block(i, j);
                    debug_assert_eq!(v.len(), w);
                    coords.write_at(off, &v);
                }
            }
        }
        Mor {
            src: src.clone(),
            dst: dst.clone(),
            coords,
        }
    }

    pub fn block(&self, f: &Mor, i: usize, j: usize) -> BitVec {
        let lay = self.layout(&f.src, &f.dst);
        let (off, w) = lay.block(i, j);
        f.coords.slice(off, w)
    }

    /// `g ∘ f`.
    pub fn compose(&self, f: &Mor, g: &Mor) -> CatResult<Mor> {
        if f.dst != g.src {
            return Err(CatError::Invalid(format!(
                "cannot compose {:?} -> {:?} with {:?} -> {:?}",
                f.src, f.dst, g.src, g.dst
            )));
        }
        Ok(self.compose_unchecked(f, g))
    }

    pub(crate) fn compose_unchecked(&self, f: &Mor, g: &Mor) -> Mor {
        let (x, y, z) = (&f.src, &f.dst, &g.dst);
        let lf = self.layout(x, y);
        let lg = self.layout(y, z);
        let lo = self.layout(x, z);
        let mut out = BitVec::zeros(lo.total);
        if f.coords.is_zero() || g.coords.is_zero() {
            return Mor {
                src: x.clone(),
                dst: z.clone(),
                coords: out,
            };
        }
        let k = self.k();
        for (i, &a) in x.summands().iter().enumerate() {
            for (j, &b) in y.summands().iter().enumerate() {
                let (fo, fw) = lf.block(i, j);
                if fw == 0 {
                    continue;
                }
                let fbits: Vec<usize> = (0..fw).filter(|&p| f.coords.get(fo + p)).collect();
                if fbits.is_empty() {
                    continue;
                }
                for (l, &c) in z.summands().iter().enumerate() {
                    let (go, gw) = lg.block(j, l);
                    if gw == 0 {
                        continue;
                    }
                    let (oo, ow) = lo.block(i, l);
                    if ow == 0 {
                        continue;
                    }
                    let table = &self.comp[(a * k + b) * k + c];
                    for &p in &fbits {
                        for q in 0..gw {
                            if g.coords.get(go + q) {
                                let v = &table[p * gw + q];
                                for t in v.iter_ones() {
                                    out.flip(oo + t);
                                }
                            }
                        }
                    }
                }
            }
        }
        Mor {
            src: x.clone(),
            dst: z.clone(),
            coords: out,
        }
    }

    pub fn add(&self, f: &Mor, g: &Mor) -> Mor {
        assert_eq!(
            (&f.src, &f.dst),
            (&g.src, &g.dst),
            "adding morphisms with different endpoints"
        );
        Mor {
            src: f.src.clone(),
            dst: f.dst.clone(),
            coords: f.coords.xor(&g.coords),
        }
    }

    /// `f[k]`.
    pub fn shift_mor(&self, f: &Mor, k: i64) -> Mor {
        let mut cur = f.clone();
        for _ in 0..k.unsigned_abs() {
            cur = self.shift_once(&cur, k > 0);
        }
        cur
    }

    fn shift_once(&self, f: &Mor, forward: bool) -> Mor {
        let (perm, tables) = if forward {
            (&self.shift, &self.shift_mor)
        } else {
            (&self.unshift, &self.unshift_mor)
        };
        let k = self.k();
        let src: Vec<usize> = f.src.summands().iter().map(|&a| perm[a]).collect();
        let dst: Vec<usize> = f.dst.summands().iter().map(|&a| perm[a]).collect();
        // the image of a sorted object need not be sorted
        let src_obj = Obj::from_ids(src.clone());
        let dst_obj = Obj::from_ids(dst.clone());
        let src_pos = positions(&src, &src_obj);
        let dst_pos = positions(&dst, &dst_obj);
        let lin = self.layout(&f.src, &f.dst);
        let lout = self.layout(&src_obj, &dst_obj);
        let mut coords = BitVec::zeros(lout.total);
        for (i, &a) in f.src.summands().iter().enumerate() {
            for (j, &b) in f.dst.summands().iter().enumerate() {
                let (off, w) = lin.block(i, j);
                if w == 0 {
                    continue;
                }
                let v = f.coords.slice(off, w);
                let img = tables[a * k + b].mul_vec(&v);
                let (o2, _) = lout.block(src_pos[i], dst_pos[j]);
                coords.write_at(o2, &img);
            }
        }
        Mor {
            src: src_obj,
            dst: dst_obj,
            coords,
        }
    }

    /// Some `g` with `g ∘ f = id` and `f ∘ g = id`.
    pub fn inverse(&self, f: &Mor) -> Option<Mor> {
        if f.src != f.dst {
            return None;
        }
        let basis = self.hom_basis(&f.dst, &f.src);
        let id_x = self.identity(&f.src);
        let id_y = self.identity(&f.dst);
        let target = id_x.coords.concat(&id_y.coords);
        let sol = solve_linear(basis.len(), target.len(), &target, &[], |i| {
            let g = &basis[i];
            self.compose_unchecked(f, g)
                .coords
                .concat(&self.compose_unchecked(g, f).coords)
        })?;
        Some(self.mor_from_coords(&f.dst, &f.src, sol))
    }

    pub fn is_isomorphism(&self, f: &Mor) -> bool {
        f.src == f.dst && self.inverse(f).is_some()
    }

    /// `[f; g]: X -> Y ⊕ Z`.
    pub fn stack(&self, f: &Mor, g: &Mor) -> (Mor, Vec<usize>, Vec<usize>) {
        assert_eq!(f.src, g.src);
        let (dst, pf, pg) = f.dst.direct_sum(&g.dst);
        let mut which = vec![(0usize, 0usize); dst.len()];
        for (j, &p) in pf.iter().enumerate() {
            which[p] = (0, j);
        }
        for (j, &p) in pg.iter().enumerate() {
            which[p] = (1, j);
        }
        let m = self.mor_from_blocks(&f.src, &dst, |i, j| {
            let (side, jj) = which[j];
            Some(if side == 0 {
                self.block(f, i, jj)
            } else {
                self.block(g, i, jj)
            })
        });
        (m, pf, pg)
    }

    /// `(f, g): X ⊕ Y -> Z`.
    pub fn costack(&self, f: &Mor, g: &Mor) -> (Mor, Vec<usize>, Vec<usize>) {
        assert_eq!(f.dst, g.dst);
        let (src, pf, pg) = f.src.direct_sum(&g.src);
        let mut which = vec![(0usize, 0usize); src.len()];
        for (i, &p) in pf.iter().enumerate() {
            which[p] = (0, i);
        }
        for (i, &p) in pg.iter().enumerate() {
            which[p] = (1, i);
        }
        let m = self.mor_from_blocks(&src, &f.dst, |i, j| {
            let (side, ii) = which[i];
            Some(if side == 0 {
                self.block(f, ii, j)
            } else {
                self.block(g, ii, j)
            })
        });
        (m, pf, pg)
    }

    /// `f ⊕ g`.
    pub fn direct_sum_mor(&self, f: &Mor, g: &Mor) -> Mor {
        let (src, sf, sg) = f.src.direct_sum(&g.src);
        let (dst, df, dg) = f.dst.direct_sum(&g.dst);
        let mut src_side = vec![(0usize, 0usize); src.len()];
        for (i, &p) in sf.iter().enumerate() {
            src_side[p] = (0, i);
        }
        for (i, &p) in sg.iter().enumerate() {
            src_side[p] = (1, i);
        }
        let mut dst_side = vec![(0usize, 0usize); dst.len()];
        for (j, &p) in df.iter().enumerate() {
            dst_side[p] = (0, j);
        }
        for (j, &p) in dg.iter().enumerate() {
            dst_side[p] = (1, j);
        }
        self.mor_from_blocks(&src, &dst, |i, j| {
            let (si, ii) = src_side[i];
            let (sj, jj) = dst_side[j];
            match (si, sj) {
                (0, 0) => Some(self.block(f, ii, jj)),
                (1, 1) => Some(self.block(g, ii, jj)),
                _ => None,
            }
        })
    }

    /// The inclusion of the summands at `pos` into `x`.
    pub fn inclusion(&self, x: &Obj, pos: &[usize]) -> Mor {
        let sub = Obj::from_ids(pos.iter().map(|&p| x.summands()[p]).collect());
        debug_assert!(sub.summands().iter().eq(pos.iter().map(|&p| &x.summands()[p])));
        self.mor_from_blocks(&sub, x, |i, j| {
            (pos[i] == j).then(|| self.id_coords[sub.summands()[i]].clone())
        })
    }

    /// The projection of `x` onto the summands at `pos`.
    pub fn projection(&self, x: &Obj, pos: &[usize]) -> Mor {
        let sub = Obj::from_ids(pos.iter().map(|&p| x.summands()[p]).collect());
        self.mor_from_blocks(x, &sub, |i, j| {
            (pos[j] == i).then(|| self.id_coords[sub.summands()[j]].clone())
        })
    }

    /// Lifts a stable morphism to a raw module map between standard sums of uniserials.
    pub fn raw_lift(&self, f: &Mor) -> F2Matrix {
        let (so, sd) = (self.offsets(&f.src), self.offsets(&f.dst));
        let lay = self.layout(&f.src, &f.dst);
        let mut phi = F2Matrix::zeros(sd.1, so.1);
        for (i, &a) in f.src.summands().iter().enumerate() {
            for (j, &b) in f.dst.summands().iter().enumerate() {
                let (off, w) = lay.block(i, j);
                let e = self.entry(a, b);
                for p in 0..w {
                    if f.coords.get(off + p) {
                        let rep = &e.reps[p];
                        for r in 0..rep.rows() {
                            for c in rep.row(r).iter_ones() {
                                phi.flip(sd.0[j] + r, so.0[i] + c);
                            }
                        }
                    }
                }
            }
        }
        phi
    }

    /// Start offsets of each summand in the standard raw module of `x`, and its dimension.
    pub(crate) fn offsets(&self, x: &Obj) -> (Vec<usize>, usize) {
        let mut offs = Vec::with_capacity(x.len());
        let mut d = 0;
        for &a in x.summands() {
            offs.push(d);
            d += self.indecs[a].1;
        }
        (offs, d)
    }

    pub fn raw_module(&self, x: &Obj) -> RawModule {
        let parts: Vec<(usize, usize)> = x.summands().iter().map(|&a| self.indecs[a]).collect();
        RawModule::from_summands(self.params.m, &parts)
    }

    /// The stable class of a raw map between standard sums of uniserials.
    pub fn stable_class(&self, src: &Obj, dst: &Obj, phi: &F2Matrix) -> Mor {
        let (so, _) = self.offsets(src);
        let (sd, _) = self.offsets(dst);
        self.mor_from_blocks(src, dst, |i, j| {
            let (a, b) = (src.summands()[i], dst.summands()[j]);
            let e = self.entry(a, b);
            if e.dim == 0 {
                return None;
            }
            let (la, lb) = (self.indecs[a].1, self.indecs[b].1);
            Some(e.coords_of(&phi.block(sd[j], so[i], lb, la)))
        })
    }

    pub fn shift_indec_by(&self, id: IndecId, k: i64) -> IndecId {
        let mut cur = id;
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 { self.shift[cur] } else { self.unshift[cur] };
        }
        cur
    }

    pub fn shift_permutation(&self) -> &[usize] {
        &self.shift
    }

    /// Label aliases accepted on input: `S{i}` for simples, and `M{ℓ}` when `m = 1`.
    fn alias(&self, s: &str) -> Option<IndecId> {
        if let Some(rest) = s.strip_prefix('S') {
            let i: usize = rest.parse().ok()?;
            return (i < self.params.m).then(|| self.id_of(i, 1)).flatten();
        }
        if self.params.m == 1 {
            if let Some(rest) = s.strip_prefix('M') {
                if let Ok(l) = rest.parse::<usize>() {
                    return self.id_of(0, l);
                }
            }
        }
        None
    }
}

impl Backend for Nakayama {
    fn spec(&self) -> String {
        format!("nakayama:m={},n={}", self.params.m, self.params.n)
    }

    fn caps(&self) -> BackendCaps {
        BackendCaps {
            morphism_calculus: true,
            exact_triangles: true,
        }
    }

    fn num_indecs(&self) -> usize {
        self.k()
    }

    fn label(&self, id: IndecId) -> String {
        self.labels[id].clone()
    }

    fn shift_indec(&self, id: IndecId, k: i64) -> IndecId {
        self.shift_indec_by(id, k)
    }

    fn hom_nonzero(&self, a: IndecId, b: IndecId) -> bool {
        self.dim(a, b) > 0
    }

    fn hom_dim_indec(&self, a: IndecId, b: IndecId) -> CatResult<usize> {
        Ok(self.dim(a, b))
    }

    fn parse_label(&self, s: &str) -> Option<IndecId> {
        let s = s.trim();
        self.labels.iter().position(|l| l == s).or_else(|| self.alias(s))
    }
}

fn positions(order: &[usize], sorted: &Obj) -> Vec<usize> {
    let mut used = vec![false; order.len()];
    order
        .iter()
        .map(|&x| {
            let p = (0..sorted.len())
                .find(|&p| !used[p] && sorted.summands()[p] == x)
                .expect("element present");
            used[p] = true;
            p
        })
        .collect()
}

/// Stable Hom from `a` to `b` where `b = M(top, len)`.
fn stable_hom(m: usize, n: usize, a: &RawModule, b: &RawModule, b_id: (usize, usize)) -> HomEntry {
    let (la, lb) = (a.dim(), b.dim());
    let raw = hom_basis(a, b);
    // maps factoring through a projective factor through the projective cover of b
    let cover = RawModule::uniserial(m, b_id.0, n);
    let proj = F2Matrix::from_fn(lb, n, |r, c| r == c);
    let mut factoring = Span::new(la * lb);
    for psi in hom_basis(a, &cover) {
        factoring.insert(&proj.mul(&psi).flatten());
    }
    let mut probe = factoring.clone();
    let mut reps = Vec::new();
    for phi in &raw {
        if probe.insert(&phi.flatten()) {
            reps.push(phi.clone());
        }
    }
    let dim = reps.len();
    let mut cols: Vec<BitVec> = reps.iter().map(F2Matrix::flatten).collect();
    cols.extend(factoring.basis());
    let r = cols.len();
    let extract = if r == 0 {
        F2Matrix::zeros(0, la * lb)
    } else {
        let b_mat = F2Matrix::from_cols(la * lb, &cols);
        let pivots = b_mat.transpose().rref();
        debug_assert_eq!(pivots.len(), r);
        let square = F2Matrix::from_fn(r, r, |i, j| b_mat.get(pivots[i], j));
        let inv = square.inverse().expect("pivot rows are independent");
        let mut e = F2Matrix::zeros(dim, la * lb);
        for k in 0..dim {
            for (t, &piv) in pivots.iter().enumerate().take(r) {
                if inv.get(k, t) {
                    e.set(k, piv, true);
                }
            }
        }
        e
    };
    HomEntry {
        dim,
        reps,
        extract,
        raw_dim: raw.len(),
        factoring_dim: factoring.dim(),
    }
}

/// The injective hull `M(top + len - n, n)` of `M(top, len)` with its embedding.
pub(crate) fn injective_hull(m: usize, n: usize, top: usize, len: usize) -> (RawModule, F2Matrix) {
    let hull_top = (top + m * n + len - n) % m;
    let hull = RawModule::uniserial(m, hull_top, n);
    let iota = F2Matrix::from_fn(n, len, |r, c| r == c + n - len);
    (hull, iota)
}

/// Induced map on cokernels of injective hulls, in the standard bases of the shifts.
fn shift_raw(
    phi: &F2Matrix,
    ha: &(RawModule, F2Matrix),
    hb: &(RawModule, F2Matrix),
    lifts: &[F2Matrix],
    n: usize,
) -> F2Matrix {
    let (la, lb) = (ha.1.cols(), hb.1.cols());
    let target = hb.1.mul(phi).flatten();
    let cols: Vec<BitVec> = lifts.iter().map(|psi| psi.mul(&ha.1).flatten()).collect();
    let m = F2Matrix::from_cols(target.len(), &cols);
    let sol = m
        .solve(&target)
        .expect("dimensions agree")
        .expect("maps extend to injective hulls");
    let mut ext = F2Matrix::zeros(n, n);
    for i in sol.iter_ones() {
        ext = ext.add(&lifts[i]);
    }
    ext.block(0, 0, n - lb, n - la)
}

impl Nakayama {
    /// Coordinates in `Hom(x, y)` of the maps factoring through `add` of `through`.
    pub fn factoring_span(&self, x: &Obj, y: &Obj, through: Subcat) -> Span {
        let mut span = Span::new(self.hom_dim_obj(x, y));
        for t in through.iter() {
            let t = Obj::indec(t);
            let left = self.hom_basis(x, &t);
            if left.is_empty() {
                continue;
            }
            let right = self.hom_basis(&t, y);
            for a in &left {
                for b in &right {
                    span.insert(&self.compose_unchecked(a, b).coords);
                }
            }
        }
        span
    }
}

/// Solves `sum_i x_i A(e_i) = target` modulo the span of `modulo`.
pub fn solve_linear(
    dim: usize,
    out_len: usize,
    target: &BitVec,
    modulo: &[BitVec],
    apply: impl Fn(usize) -> BitVec,
) -> Option<BitVec> {
    let mut cols: Vec<BitVec> = (0..dim).map(apply).collect();
    cols.extend(modulo.iter().cloned());
    let m = F2Matrix::from_cols(out_len, &cols);
    let sol = m.solve(target).expect("dimensions agree")?;
    Some(sol.slice(0, dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        let l13 = Nakayama::build(1, 3).unwrap();
        assert_eq!(l13.k(), 2);
        assert_eq!(l13.shift_permutation(), &[1, 0]);
        let l22 = Nakayama::build(2, 2).unwrap();
        assert_eq!(l22.shift_permutation(), &[1, 0]);
        let l12 = Nakayama::build(1, 2).unwrap();
        assert_eq!(l12.shift_permutation(), &[0]);
        assert!(Nakayama::build(5, 6).is_err());
        assert!(Nakayama::build(1, 1).is_err());
    }

    #[test]
    fn extraction_is_left_inverse() {
        let cat = Nakayama::build(2, 4).unwrap();
        for a in 0..cat.k() {
            for b in 0..cat.k() {
                let e = cat.entry(a, b);
                for (p, rep) in e.reps.iter().enumerate() {
                    assert_eq!(e.coords_of(rep), BitVec::unit(e.dim, p));
                }
            }
        }
    }

    #[test]
    fn aliases() {
        let cat = Nakayama::build(2, 2).unwrap();
        assert_eq!(cat.parse_label("S1"), Some(1));
        assert_eq!(cat.parse_label("M(1,1)"), Some(1));
        let cat = Nakayama::build(1, 3).unwrap();
        assert_eq!(cat.parse_label("M2"), Some(1));
    }
}
