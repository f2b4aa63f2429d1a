//! Matching two backends by Ext¹ incidence and shift.

use crate::category::{Backend, IndecId};

pub const MAX_MATCH: usize = 24;

/// A bijection `φ` from the indecomposables of `a` to those of `b` with
/// `Ext¹(x, y) ≠ 0 ⇔ Ext¹(φx, φy) ≠ 0` and `φ(x[1]) = φ(x)[1]`, if one exists.
pub fn match_backends(a: &dyn Backend, b: &dyn Backend) -> Option<Vec<IndecId>> {
    let n = a.num_indecs();
    if n != b.num_indecs() || n > MAX_MATCH {
        return None;
    }
    let ext_a = table(a);
    let ext_b = table(b);
    let sh_a: Vec<IndecId> = (0..n).map(|x| a.shift_indec(x, 1)).collect();
    let sh_b: Vec<IndecId> = (0..n).map(|x| b.shift_indec(x, 1)).collect();
    // cheap invariants first: self-extension and shift orbit length
    let sig = |ext: &[Vec<bool>], sh: &[IndecId], x: usize| {
        let mut len = 1;
        let mut y = sh[x];
        while y != x {
            y = sh[y];
            len += 1;
        }
        (ext[x][x], len, ext[x].iter().filter(|&&e| e).count())
    };
    let sig_a: Vec<_> = (0..n).map(|x| sig(&ext_a, &sh_a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| sig(&ext_b, &sh_b, x)).collect();

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let ctx = Ctx {
        ext_a: &ext_a,
        ext_b: &ext_b,
        sh_a: &sh_a,
        sh_b: &sh_b,
        sig_a: &sig_a,
        sig_b: &sig_b,
    };
    if ctx.extend(0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

fn table(b: &dyn Backend) -> Vec<Vec<bool>> {
    let n = b.num_indecs();
    (0..n).map(|x| (0..n).map(|y| b.ext_nonzero(x, y)).collect()).collect()
}

type Sig = (bool, usize, usize);

struct Ctx<'a> {
    ext_a: &'a [Vec<bool>],
    ext_b: &'a [Vec<bool>],
    sh_a: &'a [IndecId],
    sh_b: &'a [IndecId],
    sig_a: &'a [Sig],
    sig_b: &'a [Sig],
}

impl Ctx<'_> {
    fn extend(&self, x: usize, phi: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = phi.len();
        if x == n {
            return true;
        }
        if phi[x] != usize::MAX {
            return self.extend(x + 1, phi, used);
        }
        for y in 0..n {
            if used[y] || self.sig_a[x] != self.sig_b[y] {
                continue;
            }
            // assigning x forces its whole shift orbit
            let mut assigned = Vec::new();
            let (mut cx, mut cy) = (x, y);
            let ok = loop {
                if phi[cx] != usize::MAX {
                    break phi[cx] == cy;
                }
                if used[cy] || !self.consistent(cx, cy, phi) {
                    break false;
                }
                phi[cx] = cy;
                used[cy] = true;
                assigned.push(cx);
                cx = self.sh_a[cx];
                cy = self.sh_b[cy];
            };
            if ok && self.extend(x + 1, phi, used) {
                return true;
            }
            for cx in assigned {
                used[phi[cx]] = false;
                phi[cx] = usize::MAX;
            }
        }
        false
    }

    fn consistent(&self, x: usize, y: usize, phi: &[usize]) -> bool {
        if self.ext_a[x][x] != self.ext_b[y][y] {
            return false;
        }
        phi.iter().enumerate().all(|(z, &w)| {
            w == usize::MAX || (self.ext_a[x][z] == self.ext_b[y][w] && self.ext_a[z][x] == self.ext_b[w][y])
        })
    }
}
