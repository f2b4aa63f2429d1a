//! Graded representations of the cyclic quiver with relations.
//!
//! A module is a graded vector space (one vertex label per basis vector)
//! with a single nilpotent operator `x` for the total arrow action. Arrows
//! go from vertex `v` to `v + 1`, so `x` raises the vertex label by one.
//! Matrices act on columns: column `k` of `x` is the image of basis vector `k`.

use crate::f2linalg::{BitVec, F2Matrix, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawModule {
    pub m: usize,
    pub vert: Vec<usize>,
    pub x: F2Matrix,
}

/// A uniserial summand found by [`decompose`]: top vertex, length, and the
/// chain `g, xg, x^2 g, ...` spanning it.
#[derive(Clone, Debug)]
pub struct Chain {
    pub top: usize,
    pub len: usize,
    pub vectors: Vec<BitVec>,
}

impl RawModule {
    pub fn zero(m: usize) -> Self {
        RawModule {
            m,
            vert: Vec::new(),
            x: F2Matrix::zeros(0, 0),
        }
    }

    /// `M(top, len)` in its standard basis `b_0, ..., b_{len-1}` with `x b_k = b_{k+1}`.
    pub fn uniserial(m: usize, top: usize, len: usize) -> Self {
        let vert = (0..len).map(|k| (top + k) % m).collect();
        let x = F2Matrix::from_fn(len, len, |r, c| r == c + 1);
        RawModule { m, vert, x }
    }

    pub fn direct_sum(m: usize, parts: &[RawModule]) -> Self {
        let d: usize = parts.iter().map(RawModule::dim).sum();
        let mut x = F2Matrix::zeros(d, d);
        let mut vert = Vec::with_capacity(d);
        let mut off = 0;
        for p in parts {
            x.set_block(off, off, &p.x);
            vert.extend_from_slice(&p.vert);
            off += p.dim();
        }
        RawModule { m, vert, x }
    }

    pub fn from_summands(m: usize, summands: &[(usize, usize)]) -> Self {
        let parts: Vec<RawModule> = summands.iter().map(|&(t, l)| RawModule::uniserial(m, t, l)).collect();
        RawModule::direct_sum(m, &parts)
    }

    pub fn dim(&self) -> usize {
        self.vert.len()
    }

    /// Graded and annihilated by paths of length `n`.
    pub fn is_valid(&self, n: usize) -> bool {
        for c in 0..self.dim() {
            for r in self.x.col(c).iter_ones() {
                if self.vert[r] != (self.vert[c] + 1) % self.m {
                    return false;
                }
            }
        }
        let mut p = F2Matrix::identity(self.dim());
        for _ in 0..n {
            p = self.x.mul(&p);
        }
        p.is_zero()
    }

    /// The same module in the basis given by the columns of `q`.
    ///
    /// Columns of `q` must be homogeneous; the new vertex labels are read off them.
    pub fn rebase(&self, q: &F2Matrix) -> RawModule {
        let qi = q.inverse().expect("change of basis must be invertible");
        let x = qi.mul(&self.x).mul(q);
        let vert = (0..q.cols())
            .map(|c| {
                let i = q.col(c).first_one().expect("basis vectors are nonzero");
                self.vert[i]
            })
            .collect();
        RawModule { m: self.m, vert, x }
    }
}

/// A basis of module homomorphisms `a -> b`, as `b.dim() x a.dim()` matrices.
pub fn hom_basis(a: &RawModule, b: &RawModule) -> Vec<F2Matrix> {
    let (da, db) = (a.dim(), b.dim());
    let mut unknowns = Vec::new();
    let mut index = vec![usize::MAX; da * db];
    for r in 0..db {
        for c in 0..da {
            if b.vert[r] == a.vert[c] {
                index[r * da + c] = unknowns.len();
                unknowns.push((r, c));
            }
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    // equation (r, c): sum_k phi[r][k] xa[k][c] + sum_k xb[r][k] phi[k][c] = 0
    let mut eqs = F2Matrix::zeros(db * da, unknowns.len());
    for r in 0..db {
        for c in 0..da {
            let row = r * da + c;
            for k in a.x.col(c).iter_ones() {
                let u = index[r * da + k];
                if u != usize::MAX {
                    eqs.flip(row, u);
                }
            }
            for k in b.x.row(r).iter_ones() {
                let u = index[k * da + c];
                if u != usize::MAX {
                    eqs.flip(row, u);
                }
            }
        }
    }
    eqs.kernel_basis()
        .into_iter()
        .map(|v| {
            let mut phi = F2Matrix::zeros(db, da);
            for u in v.iter_ones() {
                let (r, c) = unknowns[u];
                phi.set(r, c, true);
            }
            phi
        })
        .collect()
}

/// Whether `phi` is a module map `a -> b`.
pub fn is_hom(a: &RawModule, b: &RawModule, phi: &F2Matrix) -> bool {
    for r in 0..b.dim() {
        for c in phi.row(r).iter_ones() {
            if a.vert[c] != b.vert[r] {
                return false;
            }
        }
    }
    phi.mul(&a.x) == b.x.mul(phi)
}

/// Splits a module into uniserial summands.
///
/// For each length `L` from `n` down to 1 and each vertex `v`, chain tops of
/// length exactly `L` are chosen as a homogeneous complement of
/// `ker x^{L-1} + x(ker x^{L+1})` inside `ker x^L`, all restricted to vertex `v`.
pub fn decompose(module: &RawModule, n: usize) -> Vec<Chain> {
    let d = module.dim();
    let m = module.m;
    if d == 0 {
        return Vec::new();
    }
    let mut powers = vec![F2Matrix::identity(d)];
    for _ in 0..=n {
        let next = module.x.mul(powers.last().unwrap());
        powers.push(next);
    }
    assert!(powers[n].is_zero(), "module is not annihilated by paths of length n");

    let by_vertex: Vec<Vec<usize>> = (0..m)
        .map(|v| (0..d).filter(|&i| module.vert[i] == v).collect())
        .collect();
    // kernel of x^L restricted to vertex v, embedded in F2^d
    let kernel_at = |l: usize, v: usize| -> Vec<BitVec> {
        let cols = &by_vertex[v];
        if cols.is_empty() {
            return Vec::new();
        }
        let sub = F2Matrix::from_fn(d, cols.len(), |r, c| powers[l].get(r, cols[c]));
        sub.kernel_basis()
            .into_iter()
            .map(|k| {
                let mut e = BitVec::zeros(d);
                for c in k.iter_ones() {
                    e.set(cols[c], true);
                }
                e
            })
            .collect()
    };

    let mut chains = Vec::new();
    for l in (1..=n).rev() {
        for v in 0..m {
            let mut w = Span::new(d);
            for k in kernel_at(l - 1, v) {
                w.insert(&k);
            }
            let prev = (v + m - 1) % m;
            for k in kernel_at(l + 1, prev) {
                w.insert(&module.x.mul_vec(&k));
            }
            for g in kernel_at(l, v) {
                if w.insert(&g) {
                    let mut vectors = vec![g];
                    for _ in 1..l {
                        let nx = module.x.mul_vec(vectors.last().unwrap());
                        vectors.push(nx);
                    }
                    chains.push(Chain {
                        top: v,
                        len: l,
                        vectors,
                    });
                }
            }
        }
    }
    chains
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniserial_is_valid() {
        for len in 1..=4 {
            assert!(RawModule::uniserial(2, 1, len).is_valid(4));
        }
        assert!(!RawModule::uniserial(1, 0, 3).is_valid(2));
    }

    #[test]
    fn hom_between_uniserials_over_one_vertex() {
        // Hom(k[x]/x^a, k[x]/x^b) has dimension min(a, b)
        for a in 1..=4 {
            for b in 1..=4 {
                let ma = RawModule::uniserial(1, 0, a);
                let mb = RawModule::uniserial(1, 0, b);
                let basis = hom_basis(&ma, &mb);
                assert_eq!(basis.len(), a.min(b));
                for phi in &basis {
                    assert!(is_hom(&ma, &mb, phi));
                }
            }
        }
    }

    #[test]
    fn decompose_round_trip_with_scrambled_basis() {
        let summands = [(0usize, 2usize), (1, 3), (0, 1), (1, 1)];
        let module = RawModule::from_summands(2, &summands);
        // a homogeneous unitriangular change of basis within each vertex
        let d = module.dim();
        let q = F2Matrix::from_fn(d, d, |r, c| {
            r == c || (r < c && module.vert[r] == module.vert[c] && (r + c) % 3 == 0)
        });
        let scrambled = module.rebase(&q);
        assert!(scrambled.is_valid(4));
        let chains = decompose(&scrambled, 4);
        let mut found: Vec<(usize, usize)> = chains.iter().map(|c| (c.top, c.len)).collect();
        found.sort_unstable();
        let mut want = summands.to_vec();
        want.sort_unstable();
        assert_eq!(found, want);
        let total: usize = chains.iter().map(|c| c.len).sum();
        assert_eq!(total, d);
    }
}
