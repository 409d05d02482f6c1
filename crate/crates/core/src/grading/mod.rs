//! The grading map `gr: W x Q^vee -> Z^{r+1}` attached to an ordered parabolic.

mod order;
mod reducible;

pub use order::{canonical_case, canonical_order, OrderedParabolic};
pub use reducible::ReducibleGrader;

use std::fmt;
use std::ops::{Add, Index, Sub};

use crate::error::{Error, Result};
use crate::lattice::Coroot;
use crate::pwlift;
use crate::rootsys::RootSystem;
use crate::weyl::{self, WeylElt};

/// Integer vector compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Grading(pub Vec<i32>);

impl Grading {
    pub fn zero(len: usize) -> Self {
        Grading(vec![0; len])
    }

    pub fn unit(len: usize, k: usize) -> Self {
        let mut g = Self::zero(len);
        g.0[k] = 1;
        g
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|gr|`, the sum of the coordinates.
    pub fn total(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn scale(&self, a: i32) -> Self {
        Grading(self.0.iter().map(|x| a * x).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Coordinates `k..=m`, 1-based.
    pub fn window(&self, k: usize, m: usize) -> Grading {
        Grading(self.0[k - 1..m].to_vec())
    }
}

impl Add for &Grading {
    type Output = Grading;
    fn add(self, o: &Grading) -> Grading {
        assert_eq!(self.len(), o.len());
        Grading(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Grading {
    type Output = Grading;
    fn sub(self, o: &Grading) -> Grading {
        assert_eq!(self.len(), o.len());
        Grading(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Index<usize> for Grading {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Grading data for one ordered parabolic: caches `gr(q_i)` for every
/// simple root and the inversion layers.
#[derive(Clone, Debug)]
pub struct Grader {
    rs: RootSystem,
    op: OrderedParabolic,
    q: Vec<Grading>,
    /// layer (0-based) of each positive root: smallest k with the root in `R_{P_{k+1}}`
    layer: Vec<usize>,
}

impl Grader {
    pub fn new(rs: &RootSystem, op: &OrderedParabolic) -> Result<Self> {
        let r = op.r();
        let layer = rs
            .positive_roots()
            .iter()
            .map(|b| {
                (1..=r)
                    .find(|&j| b.0.support().all(|i| op.prefix(j).contains(&i)))
                    .map_or(r, |j| j - 1)
            })
            .collect();
        let mut g = Grader { rs: rs.clone(), op: op.clone(), q: vec![Grading::default(); rs.rank()], layer };
        g.q[op.order()[0]] = Grading::unit(r + 1, 0).scale(2);
        for j in 1..=r {
            let new: Vec<usize> = if j < r {
                vec![op.order()[j]]
            } else {
                (0..rs.rank()).filter(|i| op.position(*i).is_none()).collect()
            };
            for alpha in new {
                g.q[alpha] = g.recursive_q(j, alpha)?;
            }
        }
        Ok(g)
    }

    /// `gr(q_alpha)` for `alpha` in `Delta_{j+1} \ Delta_j` from the lift in
    /// the subsystem `(Delta_{j+1}, Delta_j)`.
    fn recursive_q(&self, j: usize, alpha: usize) -> Result<Grading> {
        let pre = self.op.prefix(j);
        let lift = pwlift::pw_lift(&self.rs, pre, &self.rs.simple_coroot(alpha))?;
        let om = lift.omega_factor;
        let g_om = self.gr_weyl(&om)?;
        let r1 = self.op.r() + 1;
        let asum: i32 = pre.iter().map(|&i| lift.lambda_b.0[i]).sum();
        let mut out = Grading::unit(r1, j).scale(om.length() as i32 + 2 + 2 * asum);
        out = &out - &g_om;
        for &i in pre {
            out = &out - &self.q[i].scale(lift.lambda_b.0[i]);
        }
        Ok(out)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn ordered_parabolic(&self) -> &OrderedParabolic {
        &self.op
    }

    /// Length of grading vectors, `r + 1`.
    pub fn dim(&self) -> usize {
        self.op.r() + 1
    }

    /// `gr(w)` from the decomposition `w = v_{r+1} ... v_1`.
    pub fn gr_weyl_decomposition(&self, w: &WeylElt) -> Grading {
        Grading(weyl::full_decomposition(&self.rs, w, self.op.order()).iter().map(|v| v.length() as i32).collect())
    }

    /// `gr(w)` from inversion sets split by the chain.
    pub fn gr_weyl_inversions(&self, w: &WeylElt) -> Grading {
        let mut g = Grading::zero(self.dim());
        for k in weyl::inversion_indices(&self.rs, w) {
            g.0[self.layer[k]] += 1;
        }
        g
    }

    /// `gr(w)`; both computations must agree.
    pub fn gr_weyl(&self, w: &WeylElt) -> Result<Grading> {
        let a = self.gr_weyl_decomposition(w);
        let b = self.gr_weyl_inversions(w);
        if a != b {
            return Err(Error::Internal(format!("gr({w:?}): decomposition {a} but inversions {b}")));
        }
        Ok(a)
    }

    /// Cached `gr(q_i)`.
    pub fn gr_q(&self, i: usize) -> &Grading {
        &self.q[i]
    }

    /// `gr(q_lambda)`; `lambda` may have negative entries.
    pub fn gr_lambda(&self, lambda: &Coroot) -> Grading {
        let mut g = Grading::zero(self.dim());
        for (i, &b) in lambda.coeffs().iter().enumerate() {
            if b != 0 {
                g = &g + &self.q[i].scale(b);
            }
        }
        g
    }

    /// `gr(q_lambda w)`.
    pub fn gr(&self, w: &WeylElt, lambda: &Coroot) -> Result<Grading> {
        Ok(&self.gr_weyl(w)? + &self.gr_lambda(lambda))
    }

    /// `gr_{[k,m]}`, 1-based inclusive window.
    pub fn gr_window(&self, k: usize, m: usize, w: &WeylElt, lambda: &Coroot) -> Result<Grading> {
        if k == 0 || k > m || m > self.dim() {
            return Err(Error::InvalidInput(format!("bad window [{k},{m}] for dimension {}", self.dim())));
        }
        Ok(self.gr(w, lambda)?.window(k, m))
    }

    /// `u_i^{(m)} = s_{m-i+1} ... s_m` in the labels of the order.
    pub fn u_elem(&self, i: usize, m: usize) -> WeylElt {
        let word: Vec<usize> = (m - i + 1..=m).map(|k| self.op.order()[k - 1]).collect();
        weyl::from_word(&self.rs, &word)
    }

    /// The unique `(w, lambda)` in `W_{P_sigma} x Q_sigma^vee` with grading
    /// `d` (padded with zeros to length `r + 1`).
    pub fn unique_basis_element(&self, d: &[i32]) -> Result<(WeylElt, Coroot)> {
        let s = self.op.sigma();
        if d.len() != s {
            return Err(Error::InvalidInput(format!("expected a vector of length {s}, got {}", d.len())));
        }
        let ord = self.op.order();
        for i in 0..s {
            let g = &self.q[ord[i]];
            if g[i] != i as i32 + 2 || g.0[i + 1..].iter().any(|&x| x != 0) {
                return Err(Error::Internal(format!("gr(q_{}) = {g} is not lower triangular", ord[i] + 1)));
            }
        }
        let mut a = vec![0i32; s];
        let mut b = vec![0i32; s];
        for i in (0..s).rev() {
            let t = d[i] - (i + 1..s).map(|k| a[k] * self.q[ord[k]][i]).sum::<i32>();
            let m = i as i32 + 2;
            a[i] = t.div_euclid(m);
            b[i] = t.rem_euclid(m);
        }
        let mut w = WeylElt::identity(self.rs.rank());
        for j in (1..=s).rev() {
            w = weyl::multiply(&self.rs, &w, &self.u_elem(b[j - 1] as usize, j));
        }
        let mut lambda = Coroot::zero(self.rs.rank());
        for i in 0..s {
            lambda.0[ord[i]] = a[i];
        }
        let mut want = Grading::zero(self.dim());
        want.0[..s].copy_from_slice(d);
        let got = self.gr(&w, &lambda)?;
        if got != want {
            return Err(Error::Internal(format!("unique basis element has grading {got}, wanted {want}")));
        }
        Ok((w, lambda))
    }

    /// A basis element of grading `x` (all coordinates nonnegative), built
    /// level by level from the top.
    pub fn semigroup_witness(&self, x: &Grading) -> Result<(WeylElt, Coroot)> {
        let r = self.op.r();
        let s = self.op.sigma();
        if x.len() != r + 1 || x.0.iter().any(|&c| c < 0) {
            return Err(Error::InvalidInput(format!("expected a nonnegative vector of length {}", r + 1)));
        }
        let mut rest = x.clone();
        let mut lambda = Coroot::zero(self.rs.rank());
        let mut top = WeylElt::identity(self.rs.rank());
        for k in (s + 1..=r + 1).rev() {
            let inner = self.op.prefix(k - 1);
            let outer: Vec<usize> = if k == r + 1 { (0..self.rs.rank()).collect() } else { self.op.prefix(k).to_vec() };
            let reps: Vec<WeylElt> = weyl::enumerate(&self.rs, &outer, weyl::DEFAULT_MAX_WEYL.max(1 << 20))?
                .into_iter()
                .filter(|w| weyl::is_min_rep(&self.rs, w, inner))
                .collect();
            let lmax = reps.iter().map(|w| w.length() as i32).max().unwrap_or(0);
            let alpha = outer
                .iter()
                .copied()
                .filter(|i| !inner.contains(i))
                .find(|&i| {
                    let d = &self.q[i];
                    d.0[k..].iter().all(|&c| c == 0)
                        && d[k - 1] >= 2
                        && d.0[..k - 1].iter().all(|&c| c <= 0)
                        && d[k - 1] - 1 <= lmax
                })
                .ok_or_else(|| Error::Internal(format!("no quantum parameter suitable at level {k}")))?;
            let d = self.q[alpha].clone();
            let a = rest[k - 1] / d[k - 1];
            let b = rest[k - 1] % d[k - 1];
            rest = &rest - &d.scale(a);
            rest.0[k - 1] -= b;
            lambda.0[alpha] += a;
            let v = reps.iter().find(|w| w.length() as i32 == b).expect("lengths are contiguous");
            top = weyl::multiply(&self.rs, &top, v);
        }
        let (w0, l0) = self.unique_basis_element(&rest.0[..s])?;
        let w = weyl::multiply(&self.rs, &top, &w0);
        let lambda = lambda + l0;
        let got = self.gr(&w, &lambda)?;
        if &got != x {
            return Err(Error::Internal(format!("semigroup witness has grading {got}, wanted {x}")));
        }
        Ok((w, lambda))
    }

    /// The sum over positive roots of each layer paired with `gamma^vee`.
    pub fn referee_rhs(&self, gamma_vee: &Coroot) -> Grading {
        let mut g = Grading::zero(self.dim());
        for (k, b) in self.rs.positive_roots().iter().enumerate() {
            g.0[self.layer[k]] += self.rs.pairing(b, gamma_vee);
        }
        g
    }
}
