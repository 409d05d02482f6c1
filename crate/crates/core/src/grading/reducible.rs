//! Grading for a disconnected `Delta_P`, one block per component.

use crate::error::{Error, Result};
use crate::lattice::Coroot;
use crate::pwlift;
use crate::rootsys::RootSystem;
use crate::weyl::{self, WeylElt};

use super::{Grader, Grading, OrderedParabolic};

#[derive(Clone, Debug)]
pub struct ReducibleGrader {
    rs: RootSystem,
    delta_p: Vec<usize>,
    parts: Vec<Grader>,
    offsets: Vec<usize>,
    dim: usize,
    q: Vec<Grading>,
}

impl ReducibleGrader {
    /// `orders` holds one ordered parabolic per connected component; at most
    /// one may be non-A and it must come last.
    pub fn new(rs: &RootSystem, orders: &[OrderedParabolic]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidInput("no components".into()));
        }
        let mut delta_p: Vec<usize> = orders.iter().flat_map(|o| o.order().iter().copied()).collect();
        delta_p.sort_unstable();
        let comps = rs.components(&delta_p);
        if comps.len() != orders.len() || delta_p.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("component orders do not match the components of the parabolic".into()));
        }
        if orders[..orders.len() - 1].iter().any(|o| !o.is_a_type()) {
            return Err(Error::InvalidInput("a non-A component must come last".into()));
        }
        if delta_p.len() >= rs.rank() {
            return Err(Error::InvalidInput("parabolic subset must be proper".into()));
        }
        let parts = orders.iter().map(|o| Grader::new(rs, o)).collect::<Result<Vec<_>>>()?;
        let mut offsets = Vec::new();
        let mut off = 0;
        for o in orders {
            offsets.push(off);
            off += o.r();
        }
        let mut g = ReducibleGrader { rs: rs.clone(), delta_p, parts, offsets, dim: off + 1, q: Vec::new() };
        g.q = (0..rs.rank()).map(|i| g.compute_q(i)).collect::<Result<_>>()?;
        Ok(g)
    }

    /// Components in canonical order: A-type ones by smallest index, then
    /// the non-A one.
    pub fn canonical(rs: &RootSystem, delta_p: &[usize]) -> Result<Self> {
        let mut comps = rs.components(delta_p);
        comps.sort_by_key(|c| (!rs.is_a_type(c), c[0]));
        let orders = comps.iter().map(|c| super::canonical_order(rs, c)).collect::<Result<Vec<_>>>()?;
        Self::new(rs, &orders)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn component_of(&self, i: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.ordered_parabolic().position(i).is_some())
    }

    fn embed(&self, k: usize, g: &Grading) -> Grading {
        let r = self.parts[k].ordered_parabolic().r();
        let mut out = Grading::zero(self.dim);
        out.0[self.offsets[k]..self.offsets[k] + r].copy_from_slice(&g.0[..r]);
        out
    }

    fn compute_q(&self, i: usize) -> Result<Grading> {
        if let Some(k) = self.component_of(i) {
            return Ok(self.embed(k, self.parts[k].gr_q(i)));
        }
        let lift = pwlift::pw_lift(&self.rs, &self.delta_p, &self.rs.simple_coroot(i))?;
        let asum: i32 = self.delta_p.iter().map(|&j| lift.lambda_b.0[j]).sum();
        let mut out = Grading::unit(self.dim, self.dim - 1).scale(lift.omega_factor.length() as i32 + 2 + 2 * asum);
        out = &out - &self.gr_weyl(&lift.omega_factor)?;
        for &j in &self.delta_p {
            let k = self.component_of(j).unwrap();
            out = &out - &self.embed(k, self.parts[k].gr_q(j)).scale(lift.lambda_b.0[j]);
        }
        Ok(out)
    }

    /// `gr(w) = l(v_{m+1}) e_{m+1,1} + sum_k gr_k(v_k)`.
    pub fn gr_weyl(&self, w: &WeylElt) -> Result<Grading> {
        let (top, u) = weyl::parabolic_decompose(&self.rs, w, &self.delta_p);
        let word = weyl::reduced_word(&self.rs, &u);
        let mut g = Grading::unit(self.dim, self.dim - 1).scale(top.length() as i32);
        for (k, part) in self.parts.iter().enumerate() {
            let sub: Vec<usize> = word.iter().copied().filter(|&j| self.component_of(j) == Some(k)).collect();
            let vk = weyl::from_word(&self.rs, &sub);
            g = &g + &self.embed(k, &part.gr_weyl(&vk)?);
        }
        Ok(g)
    }

    pub fn gr_q(&self, i: usize) -> &Grading {
        &self.q[i]
    }

    pub fn gr(&self, w: &WeylElt, lambda: &Coroot) -> Result<Grading> {
        let mut g = self.gr_weyl(w)?;
        for (i, &b) in lambda.coeffs().iter().enumerate() {
            if b != 0 {
                g = &g + &self.q[i].scale(b);
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_two_components() {
        let rs = RootSystem::parse("A3").unwrap();
        let g = ReducibleGrader::canonical(&rs, &[0, 2]).unwrap();
        assert_eq!(g.dim(), 3);
        let w = weyl::from_word(&rs, &[0, 2]);
        assert_eq!(g.gr_weyl(&w).unwrap(), Grading(vec![1, 1, 0]));
    }
}
