//! Peterson-Woodward comparison between `QH*(G/P)` and `QH*(G/B)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::{Coroot, Root};
use crate::linalg;
use crate::qchev::{IClass, QuantumRing};
use crate::rootsys::RootSystem;
use crate::scalar::Field;
use crate::weyl::{self, WeylElt};
use crate::Rational;

/// Result of lifting a degree `lambda_P` in `Q^vee / Q_P^vee`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PWLift {
    pub lambda_b: Coroot,
    pub delta_p_prime: Vec<usize>,
    /// `omega_P omega_{P'}`
    pub omega_factor: WeylElt,
}

fn check_parabolic(rs: &RootSystem, delta_p: &[usize]) -> Result<()> {
    if delta_p.iter().any(|&i| i >= rs.rank()) {
        return Err(Error::InvalidInput(format!("parabolic index out of range 1..={}", rs.rank())));
    }
    let mut s = delta_p.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != delta_p.len() {
        return Err(Error::InvalidInput("repeated parabolic index".into()));
    }
    if s.len() >= rs.rank() {
        return Err(Error::InvalidInput("parabolic subset must be proper".into()));
    }
    Ok(())
}

/// Zero out parabolic coordinates, giving the standard coset representative.
pub fn normalize_lambda_p(delta_p: &[usize], lambda: &Coroot) -> Coroot {
    let mut out = *lambda;
    for &i in delta_p {
        out.0[i] = 0;
    }
    out
}

/// All `lambda` in `lambda_p + Q_P^vee` with `<alpha, lambda>` in `{0, -1}`
/// for every positive root of `R_P`.
pub fn lift_candidates(rs: &RootSystem, delta_p: &[usize], lambda_p: &Coroot) -> Vec<Coroot> {
    let p = delta_p.len();
    let roots_p: Vec<Root> = rs.positive_roots_in(delta_p).into_iter().map(|k| rs.positive_roots()[k]).collect();
    let base = normalize_lambda_p(delta_p, lambda_p);
    let mat: Vec<Vec<Rational>> = (0..p)
        .map(|i| (0..p).map(|k| Rational::from_integer(rs.cartan()[delta_p[k]][delta_p[i]] as i64)).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << p) {
        let rhs: Vec<Rational> = (0..p)
            .map(|i| {
                let eps = if mask >> i & 1 == 1 { -1 } else { 0 };
                Rational::from_integer((eps - rs.pairing(&rs.simple_root(delta_p[i]), &base)) as i64)
            })
            .collect();
        let Some(sol) = linalg::solve(&mat, &rhs) else { continue };
        if !sol.iter().all(|x| x.is_integral()) {
            continue;
        }
        let mut lam = base;
        for (k, x) in sol.iter().enumerate() {
            lam.0[delta_p[k]] += x.to_i64().unwrap() as i32;
        }
        if roots_p.iter().all(|b| matches!(rs.pairing(b, &lam), 0 | -1)) && !out.contains(&lam) {
            out.push(lam);
        }
    }
    out
}

pub fn pw_lift(rs: &RootSystem, delta_p: &[usize], lambda_p: &Coroot) -> Result<PWLift> {
    check_parabolic(rs, delta_p)?;
    let cands = lift_candidates(rs, delta_p, lambda_p);
    if cands.len() != 1 {
        return Err(Error::Internal(format!(
            "expected exactly one lift of {}, found {}",
            lambda_p.0,
            cands.len()
        )));
    }
    let lambda_b = cands[0];
    let delta_p_prime: Vec<usize> =
        delta_p.iter().copied().filter(|&i| rs.pairing(&rs.simple_root(i), &lambda_b) == 0).collect();
    let omega_factor =
        weyl::multiply(rs, &weyl::longest_element(rs, delta_p), &weyl::longest_element(rs, &delta_p_prime));
    Ok(PWLift { lambda_b, delta_p_prime, omega_factor })
}

/// `q_{lambda_P} sigma^v  |->  q_{lambda_B} sigma^{v omega_P omega'}`.
pub fn psi_map(rs: &RootSystem, delta_p: &[usize], v: &WeylElt, lambda_p: &Coroot) -> Result<(WeylElt, Coroot)> {
    if !weyl::is_min_rep(rs, v, delta_p) {
        return Err(Error::InvalidInput("element is not a minimal coset representative".into()));
    }
    let lift = pw_lift(rs, delta_p, lambda_p)?;
    Ok((weyl::multiply(rs, v, &lift.omega_factor), lift.lambda_b))
}

/// `QH*(G/P)` computed through its comparison with `QH*(G/B)`.
pub struct QhpRing<'a> {
    ring: &'a QuantumRing,
    delta_p: Vec<usize>,
    degrees: Vec<i32>,
    lifts: std::sync::RwLock<HashMap<Coroot, PWLift>>,
}

impl<'a> QhpRing<'a> {
    pub fn new(ring: &'a QuantumRing, delta_p: &[usize]) -> Result<Self> {
        let rs = ring.root_system();
        check_parabolic(rs, delta_p)?;
        let mut two_rho_p = crate::lattice::IVec::zero(rs.rank());
        for k in rs.positive_roots_in(delta_p) {
            two_rho_p = two_rho_p + rs.positive_roots()[k].0;
        }
        let degrees = (0..rs.rank())
            .map(|j| {
                let cj = rs.simple_coroot(j);
                2 - rs.pairing(&Root(two_rho_p), &cj)
            })
            .collect();
        Ok(QhpRing { ring, delta_p: delta_p.to_vec(), degrees, lifts: Default::default() })
    }

    pub fn delta_p(&self) -> &[usize] {
        &self.delta_p
    }

    /// Degree of `q_j` in `QH*(G/P)`, `<2 rho - 2 rho_P, alpha_j^vee>`.
    pub fn q_degree(&self, j: usize) -> i32 {
        self.degrees[j]
    }

    pub fn lift(&self, lambda_p: &Coroot) -> Result<PWLift> {
        let key = normalize_lambda_p(&self.delta_p, lambda_p);
        if let Some(l) = self.lifts.read().unwrap().get(&key) {
            return Ok(l.clone());
        }
        let l = pw_lift(self.ring.root_system(), &self.delta_p, &key)?;
        self.lifts.write().unwrap().insert(key, l.clone());
        Ok(l)
    }

    pub fn min_reps(&self) -> Vec<WeylElt> {
        let rs = self.ring.root_system();
        self.ring.elements().iter().copied().filter(|w| weyl::is_min_rep(rs, w, &self.delta_p)).collect()
    }

    pub fn psi(&self, v: &WeylElt, lambda_p: &Coroot) -> Result<(WeylElt, Coroot)> {
        let rs = self.ring.root_system();
        if !weyl::is_min_rep(rs, v, &self.delta_p) {
            return Err(Error::InvalidInput("element is not a minimal coset representative".into()));
        }
        let l = self.lift(lambda_p)?;
        Ok((weyl::multiply(rs, v, &l.omega_factor), l.lambda_b))
    }

    /// `N_{u,v}^{w, lambda_P}` for `G/P`.
    pub fn structure_constant(&self, u: &WeylElt, v: &WeylElt, w: &WeylElt, lambda_p: &Coroot) -> Result<i64> {
        let rs = self.ring.root_system();
        for x in [u, v, w] {
            if !weyl::is_min_rep(rs, x, &self.delta_p) {
                return Err(Error::InvalidInput("element is not a minimal coset representative".into()));
            }
        }
        let (w2, lb) = self.psi(w, lambda_p)?;
        if !lb.0.is_nonneg() {
            return Ok(0);
        }
        self.ring.structure_constant(u, v, &w2, &lb)
    }

    /// `sigma^u * sigma^v` in `QH*(G/P)`; q-degrees are coset representatives.
    pub fn product(&self, u: &WeylElt, v: &WeylElt) -> Result<IClass> {
        let rs = self.ring.root_system();
        let total = (u.length() + v.length()) as i32;
        let free: Vec<usize> = (0..rs.rank()).filter(|i| !self.delta_p.contains(i)).collect();
        let reps = self.min_reps();
        let mut out = IClass::zero();
        let mut lam = Coroot::zero(rs.rank());
        self.sweep(&free, 0, total, &mut lam, &mut |lam, rest| {
            for w in reps.iter().filter(|w| w.length() as i32 == rest) {
                let c = self.structure_constant(u, v, w, lam)?;
                out.add_term(*w, *lam, c);
            }
            Ok(())
        })?;
        Ok(out)
    }

    fn sweep(
        &self,
        free: &[usize],
        k: usize,
        budget: i32,
        lam: &mut Coroot,
        f: &mut dyn FnMut(&Coroot, i32) -> Result<()>,
    ) -> Result<()> {
        if k == free.len() {
            return f(lam, budget);
        }
        let d = self.degrees[free[k]];
        let mut a = 0;
        while a * d <= budget {
            lam.0[free[k]] = a;
            self.sweep(free, k + 1, budget - a * d, lam, f)?;
            a += 1;
        }
        lam.0[free[k]] = 0;
        Ok(())
    }

    /// Bilinear extension of [`product`](Self::product).
    pub fn multiply(&self, a: &IClass, b: &IClass) -> Result<IClass> {
        let mut out = IClass::zero();
        for (w, q, c) in a.iter() {
            for (x, mu, d) in b.iter() {
                let p = self.product(w, x)?;
                out.add_scaled(&p, &(c * d), Some(&(*q + *mu)));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::from_word;

    #[test]
    fn a2_lifts() {
        let rs = RootSystem::parse("A2").unwrap();
        let l = pw_lift(&rs, &[0], &Coroot::zero(2)).unwrap();
        assert_eq!(l.lambda_b, Coroot::zero(2));
        assert!(l.omega_factor.is_identity());
        let l = pw_lift(&rs, &[0], &Coroot::simple(2, 1)).unwrap();
        assert_eq!(l.lambda_b, Coroot::simple(2, 1));
        assert!(l.delta_p_prime.is_empty());
        assert_eq!(l.omega_factor, from_word(&rs, &[0]));
        assert!(pw_lift(&rs, &[0, 1], &Coroot::zero(2)).is_err());
    }

    #[test]
    fn p2_products() {
        let ring = QuantumRing::for_system("A2").unwrap();
        let rs = ring.root_system();
        let qhp = QhpRing::new(&ring, &[0]).unwrap();
        assert_eq!(qhp.q_degree(1), 3);
        let h = from_word(rs, &[1]);
        let h2 = from_word(rs, &[0, 1]);
        assert_eq!(qhp.structure_constant(&h, &h, &h2, &Coroot::zero(2)).unwrap(), 1);
        assert_eq!(
            qhp.structure_constant(&h, &h2, &WeylElt::identity(2), &Coroot::simple(2, 1)).unwrap(),
            1
        );
        let hh = qhp.product(&h, &h).unwrap();
        let hhh = qhp.multiply(&hh, &IClass::schubert(h)).unwrap();
        assert_eq!(hhh, IClass::basis(WeylElt::identity(2), Coroot::simple(2, 1)));
    }
}
