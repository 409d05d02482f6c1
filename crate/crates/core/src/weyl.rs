//! Weyl group elements as integer matrices on the coroot lattice.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::lattice::{Coroot, IVec, Root, MAX_RANK};
use crate::rootsys::RootSystem;

/// Default cap on the size of an enumerated (parabolic) Weyl group.
pub const DEFAULT_MAX_WEYL: usize = 2000;

/// A Weyl group element. `m[i][j]` is the coefficient of `alpha_i^vee` in
/// `w(alpha_j^vee)`; the length is cached.
#[derive(Clone, Copy)]
pub struct WeylElt {
    rank: u8,
    len: u16,
    m: [[i8; MAX_RANK]; MAX_RANK],
}

impl PartialEq for WeylElt {
    fn eq(&self, o: &Self) -> bool {
        self.rank == o.rank && self.m == o.m
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.rank.hash(h);
        self.m.hash(h);
    }
}

/// Length first, then the matrix entries.
impl Ord for WeylElt {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.len, self.rank, &self.m).cmp(&(o.len, o.rank, &o.m))
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt(len={}, m=[", self.len)?;
        let n = self.rank as usize;
        for i in 0..n {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}", &self.m[i][..n])?;
        }
        write!(f, "])")
    }
}

impl WeylElt {
    pub fn identity(rank: usize) -> Self {
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        for (i, row) in m.iter_mut().enumerate().take(rank) {
            row[i] = 1;
        }
        WeylElt { rank: rank as u8, len: 0, m }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn length(&self) -> usize {
        self.len as usize
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.m[i][j] as i32
    }

    /// Apply to a coroot lattice vector.
    pub fn apply(&self, lambda: &Coroot) -> Coroot {
        let n = self.rank as usize;
        let mut out = IVec::zero(n);
        for j in 0..n {
            let x = lambda.0[j];
            if x == 0 {
                continue;
            }
            for i in 0..n {
                out[i] += self.m[i][j] as i32 * x;
            }
        }
        Coroot(out)
    }

    fn from_matrix(rs: &RootSystem, m: [[i32; MAX_RANK]; MAX_RANK]) -> Self {
        let mut w = WeylElt { rank: rs.rank() as u8, len: 0, m: [[0; MAX_RANK]; MAX_RANK] };
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                w.m[i][j] = i8::try_from(m[i][j]).expect("Weyl matrix entry out of range");
            }
        }
        w.len = rs.positive_coroots().iter().filter(|c| !w.apply(c).0.is_nonneg()).count() as u16;
        w
    }
}

/// The simple reflection `s_i` (0-based index).
pub fn simple(rs: &RootSystem, i: usize) -> WeylElt {
    let n = rs.rank();
    let mut m = [[0i32; MAX_RANK]; MAX_RANK];
    for j in 0..n {
        m[j][j] = 1;
        // s_i(alpha_j^vee) = alpha_j^vee - <alpha_i, alpha_j^vee> alpha_i^vee
        m[i][j] -= rs.cartan()[j][i];
    }
    WeylElt::from_matrix(rs, m)
}

/// Group law, `(a b)(x) = a(b(x))`.
pub fn multiply(rs: &RootSystem, a: &WeylElt, b: &WeylElt) -> WeylElt {
    let n = rs.rank();
    assert!(a.rank() == n && b.rank() == n, "Weyl elements from a different system");
    let mut m = [[0i32; MAX_RANK]; MAX_RANK];
    for i in 0..n {
        for k in 0..n {
            let x = a.m[i][k] as i32;
            if x == 0 {
                continue;
            }
            for j in 0..n {
                m[i][j] += x * b.m[k][j] as i32;
            }
        }
    }
    WeylElt::from_matrix(rs, m)
}

/// Checked version of [`multiply`].
pub fn try_multiply(rs: &RootSystem, a: &WeylElt, b: &WeylElt) -> Result<WeylElt> {
    if a.rank() != rs.rank() || b.rank() != rs.rank() {
        return Err(Error::InvalidInput("Weyl elements belong to a different root system".into()));
    }
    Ok(multiply(rs, a, b))
}

/// `w s_j`.
pub fn mul_simple(rs: &RootSystem, w: &WeylElt, j: usize) -> WeylElt {
    let r = multiply(rs, w, &simple(rs, j));
    debug_assert_eq!((r.length() as i64 - w.length() as i64).abs(), 1);
    r
}

pub fn inverse(rs: &RootSystem, w: &WeylElt) -> WeylElt {
    let word = reduced_word(rs, w);
    from_word(rs, &word.iter().rev().copied().collect::<Vec<_>>())
}

/// Product of simple reflections (0-based indices), left to right.
pub fn from_word(rs: &RootSystem, word: &[usize]) -> WeylElt {
    let mut w = WeylElt::identity(rs.rank());
    for &j in word {
        w = multiply(rs, &w, &simple(rs, j));
    }
    w
}

/// Reflection in a positive root.
pub fn reflection(rs: &RootSystem, gamma: &Root) -> Result<WeylElt> {
    if rs.root_index(gamma).is_none() {
        return Err(Error::InvalidInput(format!("{} is not a positive root of {}", gamma.0, rs)));
    }
    let gv = rs.coroot_of(gamma)?;
    let n = rs.rank();
    let mut m = [[0i32; MAX_RANK]; MAX_RANK];
    for j in 0..n {
        m[j][j] = 1;
        let c = rs.pairing(gamma, &rs.simple_coroot(j));
        for i in 0..n {
            m[i][j] -= c * gv.0[i];
        }
    }
    Ok(WeylElt::from_matrix(rs, m))
}

/// Whether `w` maps the k-th positive root to a positive root.
pub fn keeps_positive(rs: &RootSystem, w: &WeylElt, k: usize) -> bool {
    w.apply(&rs.positive_coroots()[k]).0.is_nonneg()
}

/// `w(alpha_j)` is negative, equivalently `l(w s_j) < l(w)`.
pub fn is_right_descent(rs: &RootSystem, w: &WeylElt, j: usize) -> bool {
    let c = w.apply(&rs.simple_coroot(j));
    !c.0.is_nonneg()
}

/// Indices (into `rs.positive_roots()`) of the inversion set.
pub fn inversion_indices(rs: &RootSystem, w: &WeylElt) -> Vec<usize> {
    (0..rs.positive_roots().len()).filter(|&k| !keeps_positive(rs, w, k)).collect()
}

pub fn inversion_set(rs: &RootSystem, w: &WeylElt) -> Vec<Root> {
    inversion_indices(rs, w).into_iter().map(|k| rs.positive_roots()[k]).collect()
}

/// Reduced word (0-based), built from the right by always removing the
/// smallest right descent.
pub fn reduced_word(rs: &RootSystem, w: &WeylElt) -> Vec<usize> {
    let mut word = Vec::with_capacity(w.length());
    let mut cur = *w;
    while !cur.is_identity() {
        let j = (0..rs.rank()).find(|&j| is_right_descent(rs, &cur, j)).expect("nonidentity has a descent");
        word.push(j);
        cur = multiply(rs, &cur, &simple(rs, j));
    }
    word.reverse();
    word
}

/// Minimal length representative test: `w(alpha) > 0` for all `alpha` in `sub`.
pub fn is_min_rep(rs: &RootSystem, w: &WeylElt, sub: &[usize]) -> bool {
    sub.iter().all(|&j| !is_right_descent(rs, w, j))
}

/// Whether `w` lies in the parabolic subgroup generated by `sub`.
pub fn in_parabolic(rs: &RootSystem, w: &WeylElt, sub: &[usize]) -> bool {
    parabolic_decompose(rs, w, sub).0.is_identity()
}

/// `w = v u` with `u` in `W_sub` and `v` a minimal representative.
pub fn parabolic_decompose(rs: &RootSystem, w: &WeylElt, sub: &[usize]) -> (WeylElt, WeylElt) {
    let mut v = *w;
    let mut u_word = Vec::new();
    while let Some(&j) = sub.iter().find(|&&j| is_right_descent(rs, &v, j)) {
        v = multiply(rs, &v, &simple(rs, j));
        u_word.push(j);
    }
    u_word.reverse();
    (v, from_word(rs, &u_word))
}

/// Longest element of `W_sub`.
pub fn longest_element(rs: &RootSystem, sub: &[usize]) -> WeylElt {
    let mut w = WeylElt::identity(rs.rank());
    while let Some(&j) = sub.iter().find(|&&j| !is_right_descent(rs, &w, j)) {
        w = multiply(rs, &w, &simple(rs, j));
    }
    w
}

/// All elements of `W_sub`, sorted by the total order on `WeylElt`.
pub fn enumerate(rs: &RootSystem, sub: &[usize], cap: usize) -> Result<Vec<WeylElt>> {
    let id = WeylElt::identity(rs.rank());
    let mut seen: HashSet<WeylElt> = HashSet::from([id]);
    let mut frontier = vec![id];
    let gens: Vec<WeylElt> = sub.iter().map(|&j| simple(rs, j)).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let x = multiply(rs, w, g);
                if x.length() > w.length() && seen.insert(x) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<WeylElt> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}

/// Minimal representatives `W^sub` inside `W`, sorted.
pub fn min_reps(rs: &RootSystem, sub: &[usize], cap: usize) -> Result<Vec<WeylElt>> {
    let all: Vec<usize> = (0..rs.rank()).collect();
    Ok(enumerate(rs, &all, cap)?.into_iter().filter(|w| is_min_rep(rs, w, sub)).collect())
}

/// Decomposition `w = v_{r+1} ... v_1` along the chain given by `order`
/// (prefixes of `order`); returns `[v_1, ..., v_{r+1}]`.
pub fn full_decomposition(rs: &RootSystem, w: &WeylElt, order: &[usize]) -> Vec<WeylElt> {
    let r = order.len();
    let mut parts = vec![WeylElt::identity(rs.rank()); r + 1];
    let mut rest = *w;
    for j in (1..=r).rev() {
        let (v, u) = parabolic_decompose(rs, &rest, &order[..j]);
        parts[j] = v;
        rest = u;
    }
    parts[0] = rest;
    parts
}

/// Indexed enumeration of a finite Weyl group.
#[derive(Clone, Debug)]
pub struct WeylTable {
    elems: Vec<WeylElt>,
    index: HashMap<WeylElt, usize>,
}

impl WeylTable {
    pub fn new(rs: &RootSystem, cap: usize) -> Result<Self> {
        let all: Vec<usize> = (0..rs.rank()).collect();
        let elems = enumerate(rs, &all, cap)?;
        let index = elems.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        Ok(WeylTable { elems, index })
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index_of(&self, w: &WeylElt) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn of_length(&self, l: usize) -> impl Iterator<Item = &WeylElt> {
        self.elems.iter().filter(move |w| w.length() == l)
    }

    pub fn max_length(&self) -> usize {
        self.elems.last().map_or(0, |w| w.length())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(id: &str) -> RootSystem {
        RootSystem::parse(id).unwrap()
    }

    #[test]
    fn a2_basics() {
        let a2 = rs("A2");
        let s1 = simple(&a2, 0);
        let s2 = simple(&a2, 1);
        assert!(multiply(&a2, &s1, &s1).is_identity());
        let w0 = from_word(&a2, &[0, 1, 0]);
        assert_eq!(w0, from_word(&a2, &[1, 0, 1]));
        assert_eq!(w0.length(), 3);
        assert_eq!(reduced_word(&a2, &w0), vec![0, 1, 0]);
        assert_eq!(reduced_word(&a2, &s1), vec![0]);
        assert!(reduced_word(&a2, &WeylElt::identity(2)).is_empty());
        let g = Root(IVec::from_slice(&[1, 1]));
        assert_eq!(reflection(&a2, &g).unwrap(), w0);
        assert_eq!(reflection(&a2, &a2.simple_root(0)).unwrap(), s1);
        assert_eq!(inversion_set(&a2, &s1), vec![a2.simple_root(0)]);
        let s1s2 = multiply(&a2, &s1, &s2);
        assert_eq!(inversion_set(&a2, &s1s2), vec![a2.simple_root(1), g]);
        assert!(inversion_set(&a2, &WeylElt::identity(2)).is_empty());
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate(&rs("A2"), &[0, 1], 2000).unwrap().len(), 6);
        assert_eq!(enumerate(&rs("B3"), &[0, 1, 2], 2000).unwrap().len(), 48);
        assert_eq!(enumerate(&rs("G2"), &[0, 1], 2000).unwrap().len(), 12);
        let a2 = rs("A2");
        assert_eq!(enumerate(&a2, &[0], 2000).unwrap(), vec![WeylElt::identity(2), simple(&a2, 0)]);
        assert_eq!(enumerate(&rs("A4"), &[0, 1, 2, 3], 100), Err(Error::CapExceeded { cap: 100 }));
    }

    #[test]
    fn decompositions() {
        let a2 = rs("A2");
        let s1s2 = from_word(&a2, &[0, 1]);
        assert_eq!(parabolic_decompose(&a2, &s1s2, &[0]), (s1s2, WeylElt::identity(2)));
        let s2s1 = from_word(&a2, &[1, 0]);
        assert_eq!(parabolic_decompose(&a2, &s2s1, &[0]), (simple(&a2, 1), simple(&a2, 0)));
        assert_eq!(parabolic_decompose(&a2, &s2s1, &[]), (s2s1, WeylElt::identity(2)));
        let w0 = from_word(&a2, &[0, 1, 0]);
        assert_eq!(full_decomposition(&a2, &w0, &[0]), vec![simple(&a2, 0), s1s2]);
    }

    #[test]
    fn b2_reflection_length() {
        let b2 = rs("B2");
        let g = Root(IVec::from_slice(&[1, 1]));
        assert_eq!(reflection(&b2, &g).unwrap().length(), 3);
    }

    #[test]
    fn longest_elements() {
        let a2 = rs("A2");
        assert_eq!(longest_element(&a2, &[0]), simple(&a2, 0));
        assert_eq!(longest_element(&a2, &[0, 1]), from_word(&a2, &[0, 1, 0]));
        let f4 = rs("F4");
        assert_eq!(longest_element(&f4, &[0, 1, 2, 3]).length(), 24);
    }
}
