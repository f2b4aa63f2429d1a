//! Objects, morphisms and the backend contract.
//!
//! Objects are formal direct sums of indecomposables kept in sorted order, so
//! isomorphism of objects is equality of multisets. A morphism `X -> Y` is a
//! coordinate vector over the block basis of `Hom(X, Y)`: for every source
//! summand (outer loop) and every target summand (inner loop) the basis of
//! the corresponding indecomposable Hom space.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::BitVec;

pub type IndecId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatError {
    #[error("unsupported by this backend: {0}")]
    Unsupported(&'static str),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("search budget exhausted: {0}")]
    Inconclusive(String),
}

pub type CatResult<T> = Result<T, CatError>;

/// What a backend can compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackendCaps {
    pub morphism_calculus: bool,
    pub exact_triangles: bool,
}

/// An indecomposable object of a backend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Indec {
    pub id: IndecId,
    pub label: String,
}

/// A finite direct sum of indecomposables, in canonical sorted order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Obj(Vec<IndecId>);

impl Obj {
    pub fn zero() -> Self {
        Obj(Vec::new())
    }

    pub fn indec(id: IndecId) -> Self {
        Obj(vec![id])
    }

    pub fn from_ids(mut ids: Vec<IndecId>) -> Self {
        ids.sort_unstable();
        Obj(ids)
    }

    pub fn summands(&self) -> &[IndecId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, id: IndecId) -> usize {
        self.0.iter().filter(|&&x| x == id).count()
    }

    /// `self ⊕ other`, together with the positions of the summands of each
    /// argument inside the sum.
    pub fn direct_sum(&self, other: &Obj) -> (Obj, Vec<usize>, Vec<usize>) {
        let tagged: Vec<(IndecId, usize, usize)> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, 0, i))
            .chain(other.0.iter().enumerate().map(|(i, &x)| (x, 1, i)))
            .collect();
        let mut order: Vec<usize> = (0..tagged.len()).collect();
        order.sort_by_key(|&k| tagged[k]);
        let mut pos_a = vec![0; self.0.len()];
        let mut pos_b = vec![0; other.0.len()];
        let mut ids = Vec::with_capacity(tagged.len());
        for (p, &k) in order.iter().enumerate() {
            let (x, side, i) = tagged[k];
            ids.push(x);
            if side == 0 {
                pos_a[i] = p;
            } else {
                pos_b[i] = p;
            }
        }
        (Obj(ids), pos_a, pos_b)
    }

    pub fn sum(&self, other: &Obj) -> Obj {
        self.direct_sum(other).0
    }

    /// Summands satisfying `keep`, with their original positions.
    pub fn filter(&self, keep: impl Fn(IndecId) -> bool) -> (Obj, Vec<usize>) {
        let pos: Vec<usize> = (0..self.0.len()).filter(|&i| keep(self.0[i])).collect();
        (Obj(pos.iter().map(|&i| self.0[i]).collect()), pos)
    }

    /// `self` repeated `k` times.
    pub fn power(id: IndecId, k: usize) -> Obj {
        Obj(vec![id; k])
    }

    pub fn map(&self, f: impl Fn(IndecId) -> IndecId) -> Obj {
        Obj::from_ids(self.0.iter().map(|&x| f(x)).collect())
    }

    /// Distinct summands.
    pub fn support(&self) -> Vec<IndecId> {
        let mut s = self.0.clone();
        s.dedup();
        s
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Obj{:?}", self.0)
    }
}

impl FromIterator<IndecId> for Obj {
    fn from_iter<T: IntoIterator<Item = IndecId>>(iter: T) -> Self {
        Obj::from_ids(iter.into_iter().collect())
    }
}

/// A morphism `src -> dst` in block coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mor {
    pub src: Obj,
    pub dst: Obj,
    pub coords: BitVec,
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor({:?} -> {:?}, {:?})", self.src, self.dst, self.coords)
    }
}

/// Offsets of the blocks of `Hom(src, dst)` in the flat coordinate vector.
#[derive(Debug, Clone)]
pub struct BlockLayout {
    pub rows: usize,
    pub cols: usize,
    offsets: Vec<usize>,
    dims: Vec<usize>,
    pub total: usize,
}

impl BlockLayout {
    pub fn new(src: &Obj, dst: &Obj, hom_dim: impl Fn(IndecId, IndecId) -> usize) -> Self {
        let (rows, cols) = (src.len(), dst.len());
        let mut offsets = Vec::with_capacity(rows * cols);
        let mut dims = Vec::with_capacity(rows * cols);
        let mut total = 0;
        for &x in src.summands() {
            for &y in dst.summands() {
                let d = hom_dim(x, y);
                offsets.push(total);
                dims.push(d);
                total += d;
            }
        }
        BlockLayout {
            rows,
            cols,
            offsets,
            dims,
            total,
        }
    }

    /// Offset and width of the block from source summand `i` to target summand `j`.
    #[inline]
    pub fn block(&self, i: usize, j: usize) -> (usize, usize) {
        let k = i * self.cols + j;
        (self.offsets[k], self.dims[k])
    }
}

/// A distinguished triangle `a -> b -> c -> a[1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tri {
    pub a: Obj,
    pub b: Obj,
    pub c: Obj,
    pub f: Mor,
    pub g: Mor,
    pub h: Mor,
    pub morphism_data: bool,
}

/// The part of a backend contract shared by every model: indecomposables,
/// the shift permutation, and the zero/nonzero pattern of Hom spaces.
pub trait Backend: Send + Sync {
    fn spec(&self) -> String;

    fn caps(&self) -> BackendCaps;

    fn num_indecs(&self) -> usize;

    fn label(&self, id: IndecId) -> String;

    /// The shift applied `k` times to an indecomposable.
    fn shift_indec(&self, id: IndecId, k: i64) -> IndecId;

    fn hom_nonzero(&self, a: IndecId, b: IndecId) -> bool;

    fn ext_nonzero(&self, a: IndecId, b: IndecId) -> bool {
        self.hom_nonzero(a, self.shift_indec(b, 1))
    }

    fn hom_dim_indec(&self, _a: IndecId, _b: IndecId) -> CatResult<usize> {
        Err(CatError::Unsupported("hom_dim"))
    }

    fn indecs(&self) -> Vec<Indec> {
        (0..self.num_indecs())
            .map(|id| Indec {
                id,
                label: self.label(id),
            })
            .collect()
    }

    fn parse_label(&self, s: &str) -> Option<IndecId> {
        let s = s.trim();
        (0..self.num_indecs()).find(|&i| self.label(i) == s)
    }

    fn shift_obj(&self, x: &Obj, k: i64) -> Obj {
        x.map(|id| self.shift_indec(id, k))
    }

    fn hom_dim(&self, x: &Obj, y: &Obj) -> CatResult<usize> {
        let mut d = 0;
        for &a in x.summands() {
            for &b in y.summands() {
                d += self.hom_dim_indec(a, b)?;
            }
        }
        Ok(d)
    }

    fn obj_labels(&self, x: &Obj) -> Vec<String> {
        x.summands().iter().map(|&i| self.label(i)).collect()
    }

    /// Parses `["M(0,1)", "S1"]`-style label lists; brackets and quotes optional.
    fn parse_obj(&self, s: &str) -> CatResult<Obj> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut ids = Vec::new();
        for tok in split_labels(inner) {
            let tok = tok.trim().trim_matches('"');
            if tok.is_empty() {
                continue;
            }
            let id = self
                .parse_label(tok)
                .ok_or_else(|| CatError::Invalid(format!("unknown object label {tok:?}")))?;
            ids.push(id);
        }
        Ok(Obj::from_ids(ids))
    }
}

/// Splits on commas that are not inside parentheses.
pub(crate) fn split_labels(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
