//! Full additive subcategories as bitsets over indecomposables.
//!
//! A bitset stands for `add` of its members, so closure under sums,
//! summands and isomorphisms holds by construction.

use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::category::{Backend, CatError, CatResult, IndecId, Obj};
use crate::nakayama::{Nakayama, StarConfig, StarVerdict};

/// Largest number of indecomposables `enumerate_subcats` accepts.
pub const ENUMERATION_GUARD: usize = 27;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subcat(pub u64);

impl Subcat {
    pub const EMPTY: Subcat = Subcat(0);

    pub fn full(k: usize) -> Subcat {
        if k == 64 {
            Subcat(u64::MAX)
        } else {
            Subcat((1u64 << k) - 1)
        }
    }

    pub fn from_ids(ids: impl IntoIterator<Item = IndecId>) -> Subcat {
        Subcat(ids.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn single(id: IndecId) -> Subcat {
        Subcat(1u64 << id)
    }

    #[inline]
    pub fn contains(self, id: IndecId) -> bool {
        (self.0 >> id) & 1 == 1
    }

    /// Whether every summand of `x` is a member.
    pub fn contains_obj(self, x: &Obj) -> bool {
        x.summands().iter().all(|&i| self.contains(i))
    }

    pub fn insert(&mut self, id: IndecId) {
        self.0 |= 1u64 << id;
    }

    pub fn union(self, o: Subcat) -> Subcat {
        Subcat(self.0 | o.0)
    }

    pub fn intersect(self, o: Subcat) -> Subcat {
        Subcat(self.0 & o.0)
    }

    pub fn minus(self, o: Subcat) -> Subcat {
        Subcat(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Subcat) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = IndecId> {
        let mut w = self.0;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(t)
            }
        })
    }

    /// The image under the `k`-fold shift.
    pub fn shift(self, b: &(impl Backend + ?Sized), k: i64) -> Subcat {
        Subcat::from_ids(self.iter().map(|i| b.shift_indec(i, k)))
    }

    pub fn labels(self, b: &(impl Backend + ?Sized)) -> Vec<String> {
        self.iter().map(|i| b.label(i)).collect()
    }

    pub fn parse(b: &(impl Backend + ?Sized), s: &str) -> CatResult<Subcat> {
        let obj = b.parse_obj(s)?;
        Ok(Subcat::from_ids(obj.summands().iter().copied()))
    }
}

impl fmt::Debug for Subcat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<IndecId> for Subcat {
    fn from_iter<T: IntoIterator<Item = IndecId>>(iter: T) -> Self {
        Subcat::from_ids(iter)
    }
}

/// Tri-valued answer for predicates built on star membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }

    /// Three-valued conjunction.
    pub fn and(self, o: Verdict) -> Verdict {
        match (self, o) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Yes, Verdict::Yes) => Verdict::Yes,
            _ => Verdict::Inconclusive,
        }
    }

    pub fn all(it: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut acc = Verdict::Yes;
        for v in it {
            acc = acc.and(v);
            if acc == Verdict::No {
                break;
            }
        }
        acc
    }
}

impl std::ops::Not for Verdict {
    type Output = Verdict;

    fn not(self) -> Verdict {
        match self {
            Verdict::Yes => Verdict::No,
            Verdict::No => Verdict::Yes,
            Verdict::Inconclusive => Verdict::Inconclusive,
        }
    }
}

/// `{c : Hom(x[shift], c) = 0 for all x in X}`.
pub fn right_perp(b: &(impl Backend + ?Sized), x: Subcat, shift: i64) -> Subcat {
    let shifted: Vec<IndecId> = x.iter().map(|i| b.shift_indec(i, shift)).collect();
    (0..b.num_indecs())
        .filter(|&c| shifted.iter().all(|&s| !b.hom_nonzero(s, c)))
        .collect()
}

/// `{c : Hom(c, y[shift]) = 0 for all y in Y}`.
pub fn left_perp(b: &(impl Backend + ?Sized), y: Subcat, shift: i64) -> Subcat {
    let shifted: Vec<IndecId> = y.iter().map(|i| b.shift_indec(i, shift)).collect();
    (0..b.num_indecs())
        .filter(|&c| shifted.iter().all(|&s| !b.hom_nonzero(c, s)))
        .collect()
}

/// `Ext¹(X, Y) = 0` on indecomposables.
pub fn ext_vanishes(b: &(impl Backend + ?Sized), x: Subcat, y: Subcat) -> bool {
    x.iter().all(|a| y.iter().all(|c| !b.ext_nonzero(a, c)))
}

/// Membership of `c` in `X ∗ Y`.
pub fn star_contains(cat: &Nakayama, x: Subcat, y: Subcat, c: &Obj, cfg: &StarConfig) -> StarVerdict {
    cat.star_contains_with(x, y, c, cfg)
}

/// Indecomposables in `X ∗ Y`, and whether every verdict was decisive.
pub fn star_indecs(cat: &Nakayama, x: Subcat, y: Subcat, cfg: &StarConfig) -> (Subcat, bool) {
    let mut out = Subcat::EMPTY;
    let mut complete = true;
    for c in 0..cat.k() {
        match cat.star_contains_with(x, y, &Obj::indec(c), cfg) {
            StarVerdict::Yes(_) => out.insert(c),
            StarVerdict::No => {}
            StarVerdict::Inconclusive => complete = false,
        }
    }
    (out, complete)
}

/// Smallest extension-closed subcategory containing `x`.
pub fn ext_closure(cat: &Nakayama, x: Subcat, cfg: &StarConfig) -> (Subcat, bool) {
    let mut cur = x;
    let mut complete = true;
    loop {
        let (next, ok) = star_indecs(cat, cur, cur, cfg);
        complete &= ok;
        let next = next.union(cur);
        if next == cur {
            return (cur, complete);
        }
        cur = next;
    }
}

/// All subsets of the `k` indecomposables satisfying `pred`, in increasing bit order.
pub fn enumerate_subcats(k: usize, pred: impl Fn(Subcat) -> bool + Sync, parallel: bool) -> CatResult<Vec<Subcat>> {
    if k > ENUMERATION_GUARD {
        return Err(CatError::Invalid(format!(
            "{k} indecomposables exceed the enumeration guard of {ENUMERATION_GUARD}"
        )));
    }
    let total = 1u64 << k;
    #[cfg(feature = "parallel")]
    if parallel {
        let mut v: Vec<Subcat> = (0..total).into_par_iter().map(Subcat).filter(|&s| pred(s)).collect();
        v.sort_unstable();
        return Ok(v);
    }
    let _ = parallel;
    Ok((0..total).map(Subcat).filter(|&s| pred(s)).collect())
}

/// Whether no two members have nonzero `Ext¹` between them.
pub fn is_rigid(b: &(impl Backend + ?Sized), x: Subcat) -> bool {
    ext_vanishes(b, x, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_operations() {
        let a = Subcat::from_ids([0, 2]);
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(a.is_subset(Subcat::full(3)));
        assert_eq!(Subcat::full(3).minus(a), Subcat::single(1));
    }

    #[test]
    fn always_true_enumeration() {
        assert_eq!(enumerate_subcats(3, |_| true, false).unwrap().len(), 8);
        assert_eq!(enumerate_subcats(3, |_| true, true).unwrap().len(), 8);
        assert!(enumerate_subcats(28, |_| true, false).is_err());
    }

    #[test]
    fn verdict_logic() {
        use Verdict::*;
        assert_eq!(Yes.and(Inconclusive), Inconclusive);
        assert_eq!(No.and(Inconclusive), No);
        assert_eq!(Verdict::all([Yes, Yes]), Yes);
    }
}
