//! The arc model of the cluster category of type A on an `N`-gon.
//!
//! Indecomposables are the diagonals `arc(i, j)`, `Ext¹` between two arcs is
//! nonzero exactly when they cross, and the shift rotates every endpoint by
//! `-1`. The model has no morphism calculus: only the zero pattern of Hom
//! (`Hom(a, b) ≠ 0` iff `a` crosses `b[-1]`) is published.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::category::{Backend, BackendCaps, CatError, CatResult, IndecId};
use crate::mutation::OrbitGraph;
use crate::pairs::CotorsionPair;
use crate::subcat::{left_perp, right_perp, Subcat};

/// Largest supported polygon; its arcs must fit in a 64-bit set.
pub const MAX_N: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub i: usize,
    pub j: usize,
}

impl Arc {
    /// The arc with endpoints `a`, `b` in either order.
    pub fn new(a: usize, b: usize) -> Arc {
        Arc {
            i: a.min(b),
            j: a.max(b),
        }
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arc({},{})", self.i, self.j)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arc({},{})", self.i, self.j)
    }
}

/// Whether the endpoints of two arcs strictly interleave.
pub fn crossing(a: Arc, b: Arc) -> bool {
    (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j)
}

/// Endpoints shifted by `-k` modulo `n`.
pub fn rotate(a: Arc, k: i64, n: usize) -> Arc {
    let nn = n as i64;
    let f = |v: usize| ((v as i64 - k).rem_euclid(nn)) as usize;
    Arc::new(f(a.i), f(a.j))
}

#[derive(Debug, Clone)]
pub struct PolygonCat {
    n: usize,
    arcs: Vec<Arc>,
    index: HashMap<Arc, IndecId>,
    cross: Vec<u64>,
    rot: Vec<IndecId>,
    unrot: Vec<IndecId>,
}

impl PolygonCat {
    pub fn new(n: usize) -> CatResult<Self> {
        if !(4..=MAX_N).contains(&n) {
            return Err(CatError::Invalid(format!(
                "polygon size must lie in 4..={MAX_N}, got {n}"
            )));
        }
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in i + 2..n {
                if !(i == 0 && j == n - 1) {
                    arcs.push(Arc { i, j });
                }
            }
        }
        let index: HashMap<Arc, IndecId> = arcs.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let cross = arcs
            .iter()
            .map(|&a| {
                arcs.iter()
                    .enumerate()
                    .filter(|&(_, &b)| crossing(a, b))
                    .fold(0u64, |acc, (k, _)| acc | (1 << k))
            })
            .collect();
        let rot: Vec<IndecId> = arcs.iter().map(|&a| index[&rotate(a, 1, n)]).collect();
        let mut unrot = vec![0; arcs.len()];
        for (a, &b) in rot.iter().enumerate() {
            unrot[b] = a;
        }
        Ok(PolygonCat {
            n,
            arcs,
            index,
            cross,
            rot,
            unrot,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: IndecId) -> Arc {
        self.arcs[id]
    }

    pub fn arc_id(&self, a: Arc) -> Option<IndecId> {
        self.index.get(&a).copied()
    }

    pub fn crosses(&self, a: IndecId, b: IndecId) -> bool {
        (self.cross[a] >> b) & 1 == 1
    }

    pub fn is_rigid(&self, x: Subcat) -> bool {
        x.iter().all(|a| self.cross[a] & x.0 == 0)
    }

    /// All pairwise non-crossing arc sets, including the empty one.
    pub fn enumerate_rigid(&self) -> Vec<Subcat> {
        let mut out = Vec::new();
        self.rigid_dfs(0, Subcat::EMPTY, &mut out);
        out.sort_unstable();
        out
    }

    fn rigid_dfs(&self, next: usize, cur: Subcat, out: &mut Vec<Subcat>) {
        out.push(cur);
        for a in next..self.arcs.len() {
            if self.cross[a] & cur.0 == 0 {
                let mut s = cur;
                s.insert(a);
                self.rigid_dfs(a + 1, s, out);
            }
        }
    }

    /// Maximal rigid sets.
    pub fn triangulations(&self) -> Vec<Subcat> {
        self.enumerate_rigid()
            .into_iter()
            .filter(|&s| (0..self.arcs.len()).all(|a| s.contains(a) || self.cross[a] & s.0 != 0))
            .collect()
    }

    /// The arcs among the four sides of the quadrilateral spanned by two crossing arcs.
    pub fn connecting_arcs(&self, a: IndecId, b: IndecId) -> Vec<IndecId> {
        let (x, y) = (self.arcs[a], self.arcs[b]);
        let mut ends = [x.i, x.j, y.i, y.j];
        ends.sort_unstable();
        (0..4)
            .filter_map(|t| self.arc_id(Arc::new(ends[t], ends[(t + 1) % 4])))
            .collect()
    }

    /// Whether `x` contains every connecting arc of each crossing pair of its members.
    pub fn is_ptolemy(&self, x: Subcat) -> bool {
        for a in x.iter() {
            for b in Subcat(self.cross[a] & x.0).iter() {
                if b > a && !self.connecting_arcs(a, b).iter().all(|&c| x.contains(c)) {
                    return false;
                }
            }
        }
        true
    }

    /// All crossing-closed arc sets.
    pub fn enumerate_ptolemy(&self) -> Vec<Subcat> {
        let k = self.arcs.len();
        crate::subcat::enumerate_subcats(k, |s| self.is_ptolemy(s), true)
            .expect("polygon sizes stay below the enumeration guard")
    }

    /// Sets `X` with `X = ⊥(X^⊥)`, computed from the Hom zero pattern alone.
    pub fn enumerate_perp_closed(&self) -> Vec<Subcat> {
        let k = self.arcs.len();
        crate::subcat::enumerate_subcats(k, |s| left_perp(self, right_perp(self, s, 0), 0) == s, true)
            .expect("polygon sizes stay below the enumeration guard")
    }

    /// Cuts the polygon along a rigid set.
    pub fn cut_reduction(&self, i_set: Subcat) -> CatResult<CutReduction> {
        if !self.is_rigid(i_set) {
            return Err(CatError::Invalid("cut set is not rigid".into()));
        }
        let z: Subcat = (0..self.arcs.len()).filter(|&a| self.cross[a] & i_set.0 == 0).collect();
        let mut pieces: Vec<Vec<usize>> = vec![(0..self.n).collect()];
        for a in i_set.iter() {
            let Arc { i, j } = self.arcs[a];
            let idx = pieces
                .iter()
                .position(|p| p.contains(&i) && p.contains(&j))
                .expect("a non-crossing arc lies inside one piece");
            let piece = pieces.swap_remove(idx);
            let (p, q) = (
                piece.iter().position(|&v| v == i).unwrap(),
                piece.iter().position(|&v| v == j).unwrap(),
            );
            let inner: Vec<usize> = piece[p..=q].to_vec();
            let mut outer: Vec<usize> = piece[q..].iter().chain(&piece[..=p]).copied().collect();
            outer.sort_unstable();
            pieces.push(inner);
            pieces.push(outer);
        }
        pieces.sort();

        let mut dictionary = Vec::new();
        let mut local_of = HashMap::new();
        for a in z.minus(i_set).iter() {
            let Arc { i, j } = self.arcs[a];
            let (pi, p, q) = pieces
                .iter()
                .enumerate()
                .find_map(|(pi, piece)| {
                    let p = piece.iter().position(|&v| v == i)?;
                    let q = piece.iter().position(|&v| v == j)?;
                    let s = piece.len();
                    (q - p >= 2 && !(p == 0 && q == s - 1)).then_some((pi, p, q))
                })
                .expect("every arc of Z outside I is a diagonal of a piece");
            local_of.insert(a, (pi, p, q));
            dictionary.push(DictEntry {
                arc: self.arcs[a],
                piece: pi,
                local: Arc::new(p, q),
            });
        }
        let mut shift = HashMap::new();
        for (&a, &(pi, p, q)) in &local_of {
            let piece = &pieces[pi];
            let l = rotate(Arc::new(p, q), 1, piece.len());
            let target = self.index[&Arc::new(piece[l.i], piece[l.j])];
            shift.insert(a, target);
        }
        Ok(CutReduction {
            i: i_set,
            z,
            pieces,
            dictionary,
            shift,
        })
    }

    /// Transports `A \ I` to the cut pieces, applies the reduced shift `k`
    /// times, and re-adjoins `I`.
    pub fn zz_mutate(&self, i_set: Subcat, a: Subcat, k: i64) -> CatResult<Subcat> {
        let red = self.cut_reduction(i_set)?;
        if !i_set.is_subset(a) || !a.is_subset(red.z) {
            return Err(CatError::Invalid("need I ⊆ A ⊆ Z".into()));
        }
        Ok(red.apply_shift(a.minus(i_set), k).union(i_set))
    }

    /// Cotorsion pairs `(A, B)` with `I ⊆ A ⊆ Z`, `Z` the arcs crossing nothing in `I`.
    pub fn zz_class(&self, i_set: Subcat) -> CatResult<Vec<(Subcat, Subcat)>> {
        let z = self.cut_reduction(i_set)?.z;
        Ok(self
            .cotorsion_pairs()
            .into_iter()
            .filter(|(a, _)| i_set.is_subset(*a) && a.is_subset(z))
            .collect())
    }

    /// The class from [`PolygonCat::zz_class`] with the flip `k = 1` as edges.
    pub fn zz_orbit_graph(&self, i_set: Subcat) -> CatResult<OrbitGraph> {
        let nodes: Vec<CotorsionPair> = self
            .zz_class(i_set)?
            .into_iter()
            .map(|(u, v)| CotorsionPair::new(u, v))
            .collect();
        let mut edges = Vec::with_capacity(nodes.len());
        for (n, p) in nodes.iter().enumerate() {
            let a = self.zz_mutate(i_set, p.u, 1)?;
            let m = nodes
                .iter()
                .position(|x| x.u == a)
                .ok_or_else(|| CatError::Internal("flip left the class".into()))?;
            edges.push((n, m));
        }
        Ok(OrbitGraph { nodes, edges })
    }

    /// Cotorsion pairs `(U, V)`: `U` crossing-closed and `V` the arcs crossing no member of `U`.
    pub fn cotorsion_pairs(&self) -> Vec<(Subcat, Subcat)> {
        self.enumerate_ptolemy()
            .into_iter()
            .map(|u| (u, right_perp(self, u, -1)))
            .collect()
    }
}

impl Backend for PolygonCat {
    fn spec(&self) -> String {
        format!("polygon:N={}", self.n)
    }

    fn caps(&self) -> BackendCaps {
        BackendCaps {
            morphism_calculus: false,
            exact_triangles: false,
        }
    }

    fn num_indecs(&self) -> usize {
        self.arcs.len()
    }

    fn label(&self, id: IndecId) -> String {
        self.arcs[id].to_string()
    }

    fn shift_indec(&self, id: IndecId, k: i64) -> IndecId {
        let mut cur = id;
        for _ in 0..k.rem_euclid(self.n as i64) {
            cur = self.rot[cur];
        }
        cur
    }

    fn hom_nonzero(&self, a: IndecId, b: IndecId) -> bool {
        self.crosses(a, self.unrot[b])
    }

    fn ext_nonzero(&self, a: IndecId, b: IndecId) -> bool {
        self.crosses(a, b)
    }

    fn parse_label(&self, s: &str) -> Option<IndecId> {
        let inner = s.trim().strip_prefix("arc(")?.strip_suffix(')')?;
        let (a, b) = inner.split_once(',')?;
        let arc = Arc::new(a.trim().parse().ok()?, b.trim().parse().ok()?);
        self.arc_id(arc)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DictEntry {
    pub arc: Arc,
    pub piece: usize,
    /// The arc in the piece's own vertex numbering `0..piece.len()`.
    pub local: Arc,
}

/// The polygon cut along a rigid set `I`.
#[derive(Debug, Clone)]
pub struct CutReduction {
    pub i: Subcat,
    /// Arcs crossing no arc of `I`.
    pub z: Subcat,
    /// Vertex lists of the pieces, each in increasing order.
    pub pieces: Vec<Vec<usize>>,
    pub dictionary: Vec<DictEntry>,
    shift: HashMap<IndecId, IndecId>,
}

impl CutReduction {
    /// The reduced shift on an arc of `Z \ I`.
    pub fn reduced_shift(&self, a: IndecId) -> Option<IndecId> {
        self.shift.get(&a).copied()
    }

    pub fn apply_shift(&self, x: Subcat, k: i64) -> Subcat {
        let mut cur = x;
        for _ in 0..k.unsigned_abs() {
            cur = cur
                .iter()
                .map(|a| {
                    if k > 0 {
                        self.shift[&a]
                    } else {
                        *self.shift.iter().find(|(_, &v)| v == a).unwrap().0
                    }
                })
                .collect();
        }
        cur
    }
}
