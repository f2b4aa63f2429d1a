//! Exact search for triangles `X0 -> C -> Y0 -> X0[1]`.
//!
//! A witness exists iff some `a: X0 -> C` with `X0 ∈ add X` has its cone in
//! `add Y`. If the components of `a` on copies of an indecomposable `x` are
//! linearly dependent, a change of basis on `x^k` splits off a copy of `x`
//! mapping to zero, and the smaller map still works because `add Y` is closed
//! under summands. So it suffices to let `a` range over tuples of subspaces
//! `W_x ⊆ Hom(x, C)`, one map per subspace, and the search is complete once the
//! total dimension bound reaches `Σ_x dim Hom(x, C)`.

use std::sync::Arc;

use super::Nakayama;
use crate::category::{Mor, Obj, Tri};
use crate::f2linalg::{subspaces_up_to, BitVec};
use crate::subcat::Subcat;

#[derive(Debug, Clone)]
pub enum StarVerdict {
    Yes(Arc<Tri>),
    No,
    Inconclusive,
}

impl StarVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, StarVerdict::Yes(_))
    }

    pub fn witness(&self) -> Option<&Tri> {
        match self {
            StarVerdict::Yes(t) => Some(t),
            _ => None,
        }
    }

    pub fn verdict(&self) -> crate::subcat::Verdict {
        use crate::subcat::Verdict;
        match self {
            StarVerdict::Yes(_) => Verdict::Yes,
            StarVerdict::No => Verdict::No,
            StarVerdict::Inconclusive => Verdict::Inconclusive,
        }
    }
}

/// Search limits for star membership.
///
/// `cap` bounds the number of summands of `X0`. When `Σ dim Hom(x, C)` exceeds
/// `cap`, the search runs to `cap + 1` and a negative answer is accepted only
/// because the two bounds agree. `budget` bounds the number of cones per
/// query; running out of it is the only source of inconclusive verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarConfig {
    pub cap: usize,
    pub budget: usize,
}

impl Default for StarConfig {
    fn default() -> Self {
        StarConfig {
            cap: 4,
            budget: 200_000,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct StarStats {
    pub queries: u64,
    pub memo_hits: u64,
    pub cones: u64,
    pub exhaustive_no: u64,
    pub stabilized_no: u64,
    pub inconclusive: u64,
}

pub(crate) type MemoKey = (u64, u64, Obj, StarConfig);

enum Outcome {
    Stopped,
    Exhausted,
    OutOfBudget,
}

impl Nakayama {
    pub fn star_contains_with(&self, x: Subcat, y: Subcat, c: &Obj, cfg: &StarConfig) -> StarVerdict {
        let key = (x.0, y.0, c.clone(), *cfg);
        {
            let memo = self.star_memo.lock().unwrap();
            if let Some(v) = memo.get(&key) {
                let mut st = self.stats.lock().unwrap();
                st.queries += 1;
                st.memo_hits += 1;
                return v.clone();
            }
        }
        let (verdict, cones, kind) = self.star_search(x, y, c, cfg);
        {
            let mut st = self.stats.lock().unwrap();
            st.queries += 1;
            st.cones += cones;
            match kind {
                0 => {}
                1 => st.exhaustive_no += 1,
                2 => st.stabilized_no += 1,
                _ => st.inconclusive += 1,
            }
        }
        self.star_memo.lock().unwrap().insert(key, verdict.clone());
        verdict
    }

    fn star_search(&self, x: Subcat, y: Subcat, c: &Obj, cfg: &StarConfig) -> (StarVerdict, u64, u8) {
        if y.contains_obj(c) {
            let zero = Obj::zero();
            let tri = Tri {
                a: zero.clone(),
                b: c.clone(),
                c: c.clone(),
                f: self.zero_mor(&zero, c),
                g: self.identity(c),
                h: self.zero_mor(c, &zero),
                morphism_data: true,
            };
            return (StarVerdict::Yes(Arc::new(tri)), 0, 0);
        }
        let total: usize = x.iter().map(|a| self.hom_dim_obj(&Obj::indec(a), c)).sum();
        let exhaustive = total <= cfg.cap;
        let bound = if exhaustive { total } else { cfg.cap + 1 };
        let mut found = None;
        let mut cones = 0u64;
        let outcome = self.search(x, y, c, bound, cfg.budget, &mut cones, |t| {
            found = Some(t);
            true
        });
        match (found, outcome) {
            (Some(t), _) => (StarVerdict::Yes(Arc::new(t)), cones, 0),
            (None, Outcome::OutOfBudget) => (StarVerdict::Inconclusive, cones, 3),
            (None, _) if exhaustive => (StarVerdict::No, cones, 1),
            (None, _) => (StarVerdict::No, cones, 2),
        }
    }

    /// Every witness triangle `X0 -> C -> Y0 -> X0[1]` found with at most
    /// `cap` summands in `X0`, one per tuple of subspaces.
    pub fn triangle_enumerate(&self, x: Subcat, y: Subcat, c: &Obj, cap: usize) -> impl Iterator<Item = Tri> {
        let mut out = Vec::new();
        let mut cones = 0;
        self.search(x, y, c, cap, usize::MAX, &mut cones, |t| {
            out.push(t);
            false
        });
        out.into_iter()
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        x: Subcat,
        y: Subcat,
        c: &Obj,
        bound: usize,
        budget: usize,
        cones: &mut u64,
        mut on_found: impl FnMut(Tri) -> bool,
    ) -> Outcome {
        let cands: Vec<(usize, usize)> = x
            .iter()
            .map(|a| (a, self.hom_dim_obj(&Obj::indec(a), c)))
            .filter(|&(_, h)| h > 0)
            .collect();
        let lists: Vec<Vec<Vec<BitVec>>> = cands.iter().map(|&(_, h)| subspaces_up_to(h, bound)).collect();
        let mut choice = vec![0usize; cands.len()];
        for t in 0..=bound {
            let mut state = Dfs {
                cat: self,
                y,
                c,
                cands: &cands,
                lists: &lists,
                budget,
                cones,
                on_found: &mut on_found,
            };
            match state.run(0, t, &mut choice) {
                Some(Outcome::Stopped) => return Outcome::Stopped,
                Some(Outcome::OutOfBudget) => return Outcome::OutOfBudget,
                _ => {}
            }
        }
        Outcome::Exhausted
    }
}

struct Dfs<'a, F> {
    cat: &'a Nakayama,
    y: Subcat,
    c: &'a Obj,
    cands: &'a [(usize, usize)],
    lists: &'a [Vec<Vec<BitVec>>],
    budget: usize,
    cones: &'a mut u64,
    on_found: &'a mut F,
}

impl<F: FnMut(Tri) -> bool> Dfs<'_, F> {
    fn run(&mut self, idx: usize, remaining: usize, choice: &mut [usize]) -> Option<Outcome> {
        if idx == self.cands.len() {
            if remaining != 0 {
                return None;
            }
            return self.try_choice(choice);
        }
        for (s, sub) in self.lists[idx].iter().enumerate() {
            if sub.len() > remaining {
                break;
            }
            choice[idx] = s;
            if let Some(o) = self.run(idx + 1, remaining - sub.len(), choice) {
                return Some(o);
            }
        }
        None
    }

    fn try_choice(&mut self, choice: &[usize]) -> Option<Outcome> {
        if *self.cones as usize >= self.budget {
            return Some(Outcome::OutOfBudget);
        }
        let mut ids = Vec::new();
        let mut coords = Vec::new();
        for (idx, &(a, _)) in self.cands.iter().enumerate() {
            for v in &self.lists[idx][choice[idx]] {
                ids.push(a);
                coords.push(v.clone());
            }
        }
        let x0 = Obj::from_ids(ids);
        let mut flat = BitVec::zeros(0);
        for v in &coords {
            flat = flat.concat(v);
        }
        let a = Mor {
            src: x0,
            dst: self.c.clone(),
            coords: flat,
        };
        *self.cones += 1;
        let w = self.cat.cone(&a);
        if self.y.contains_obj(&w.tri.c) && (self.on_found)(w.tri) {
            return Some(Outcome::Stopped);
        }
        None
    }
}
