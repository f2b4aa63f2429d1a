//! Cones by pushout along an injective hull.
//!
//! For `f: X -> Y` with raw lift `φ` and injective hull `ι: X -> I(X)`, the
//! pushout `C = (Y ⊕ I(X)) / {(φx, ιx)}` sits in a short exact sequence
//! `0 -> Y -> C -> I(X)/X -> 0`, giving the triangle `X -> Y -> C -> X[1]`.

use super::raw::{decompose, RawModule};
use super::{injective_hull, Nakayama};
use crate::category::{Mor, Obj, Tri};
use crate::f2linalg::{BitVec, F2Matrix, Span};

/// A distinguished triangle together with the size of the module computation behind it.
#[derive(Debug, Clone)]
pub struct TriangleWitness {
    pub tri: Tri,
    /// Dimension of the pushout module before projective summands were removed.
    pub pushout_dim: usize,
    pub projective_summands: usize,
}

impl Nakayama {
    /// The triangle `X --f--> Y --g--> C --h--> X[1]`.
    pub fn cone(&self, f: &Mor) -> TriangleWitness {
        let (m, n) = (self.m(), self.n());
        let (x, y) = (&f.src, &f.dst);
        let phi = self.raw_lift(f);
        let (_, dx) = self.offsets(x);
        let (_, dy) = self.offsets(y);

        let mut parts = vec![self.raw_module(y)];
        let mut iota_pos = Vec::with_capacity(dx);
        for (i, &a) in x.summands().iter().enumerate() {
            let (top, len) = self.uniserial(a);
            parts.push(injective_hull(m, n, top, len).0);
            for k in 0..len {
                iota_pos.push(dy + i * n + k + n - len);
            }
        }
        let w = RawModule::direct_sum(m, &parts);
        let dw = w.dim();

        let mut rel = Span::new(dw);
        for (c, &pos) in iota_pos.iter().enumerate().take(dx) {
            let mut v = BitVec::zeros(dw);
            v.write_at(0, &phi.col(c));
            v.set(pos, true);
            rel.insert(&v);
        }
        let mut is_pivot = vec![false; dw];
        for p in rel.pivots() {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..dw).filter(|&j| !is_pivot[j]).collect();
        let dc = keep.len();
        let quotient = |v: &BitVec| -> BitVec {
            let r = rel.reduce(v);
            let mut out = BitVec::zeros(dc);
            for (t, &j) in keep.iter().enumerate() {
                if r.get(j) {
                    out.set(t, true);
                }
            }
            out
        };
        let lift = |c: &BitVec| -> BitVec {
            let mut out = BitVec::zeros(dw);
            for t in c.iter_ones() {
                out.set(keep[t], true);
            }
            out
        };

        let xc_cols: Vec<BitVec> = keep.iter().map(|&j| quotient(&w.x.col(j))).collect();
        let cmod = RawModule {
            m,
            vert: keep.iter().map(|&j| w.vert[j]).collect(),
            x: F2Matrix::from_cols(dc, &xc_cols),
        };

        let mut chains = decompose(&cmod, n);
        let projective_summands = chains.iter().filter(|c| c.len == n).count();
        chains.sort_by_key(|c| {
            if c.len == n {
                (1, 0)
            } else {
                (0, self.id_of(c.top, c.len).unwrap())
            }
        });
        let basis: Vec<BitVec> = chains.iter().flat_map(|c| c.vectors.clone()).collect();
        let q = F2Matrix::from_cols(dc, &basis);
        let qinv = q.inverse().expect("chains form a basis");
        let nonproj: Vec<_> = chains.iter().filter(|c| c.len < n).collect();
        let cobj = Obj::from_ids(nonproj.iter().map(|c| self.id_of(c.top, c.len).unwrap()).collect());
        let dnp: usize = nonproj.iter().map(|c| c.len).sum();

        // g: Y -> C, then onto the nonprojective summands
        let mut g_raw = F2Matrix::zeros(dnp, dy);
        for c in 0..dy {
            let coords = qinv.mul_vec(&quotient(&BitVec::unit(dw, c)));
            for r in coords.iter_ones().filter(|&r| r < dnp) {
                g_raw.set(r, c, true);
            }
        }
        let g = self.stable_class(y, &cobj, &g_raw);

        // h: C -> I(X)/X, restricted to the nonprojective summands
        let shifted: Vec<usize> = x.summands().iter().map(|&a| self.shift_indec_by(a, 1)).collect();
        let x1 = Obj::from_ids(shifted.clone());
        let (x1o, dx1) = self.offsets(&x1);
        let mut taken = vec![false; x1.len()];
        let x1_pos: Vec<usize> = shifted
            .iter()
            .map(|&s| {
                let p = (0..x1.len()).find(|&p| !taken[p] && x1.summands()[p] == s).unwrap();
                taken[p] = true;
                p
            })
            .collect();
        let mut h_raw = F2Matrix::zeros(dx1, dnp);
        for (col, b) in basis.iter().enumerate().take(dnp) {
            let wv = lift(b);
            for (i, &a) in x.summands().iter().enumerate() {
                let len = self.uniserial(a).1;
                for k in 0..n - len {
                    if wv.get(dy + i * n + k) {
                        h_raw.set(x1o[x1_pos[i]] + k, col, true);
                    }
                }
            }
        }
        let h = self.stable_class(&cobj, &x1, &h_raw);

        TriangleWitness {
            tri: Tri {
                a: x.clone(),
                b: y.clone(),
                c: cobj,
                f: f.clone(),
                g,
                h,
                morphism_data: true,
            },
            pushout_dim: dc,
            projective_summands,
        }
    }

    /// Checks `g ∘ f = 0` and `h ∘ g = 0`, and that the ends have the right shape.
    pub fn triangle_is_exact(&self, t: &Tri) -> bool {
        if t.f.src != t.a || t.f.dst != t.b || t.g.src != t.b || t.g.dst != t.c {
            return false;
        }
        if t.h.src != t.c || t.h.dst != self.shift_obj_by(&t.a, 1) {
            return false;
        }
        self.compose_unchecked(&t.f, &t.g).coords.is_zero() && self.compose_unchecked(&t.g, &t.h).coords.is_zero()
    }

    pub fn shift_obj_by(&self, x: &Obj, k: i64) -> Obj {
        x.map(|a| self.shift_indec_by(a, k))
    }
}
