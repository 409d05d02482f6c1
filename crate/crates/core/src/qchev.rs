//! The quantum cohomology ring `QH*(G/B)` in the Schubert basis.
//!
//! Products are computed from the quantum Chevalley formula. Each Schubert
//! class of length `d >= 2` is first written classically as a rational
//! combination of products `sigma^{v'} . sigma^{s_i}` with `l(v') = d - 1`;
//! the quantum evaluation of that combination is `sigma^v` plus quantum
//! corrections of smaller length, which are subtracted recursively.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::Coroot;
use crate::linalg::Echelon;
use crate::qclass::QClass;
use crate::rootsys::RootSystem;
use crate::scalar::Field;
use crate::weyl::{self, WeylElt, WeylTable};
use crate::Rational;

/// Class with integer coefficients (products of Schubert classes).
pub type IClass = QClass<i64>;
/// Class with rational coefficients.
pub type RClass = QClass<Rational>;

/// One classical expression step: `c * sigma^{v'} . sigma^{s_i}`.
#[derive(Clone, Debug)]
struct Step {
    c: Rational,
    prev: usize,
    i: usize,
}

pub struct QuantumRing {
    rs: RootSystem,
    table: WeylTable,
    reflections: Vec<WeylElt>,
    /// classical expression of each element of length >= 2
    exprs: Vec<Vec<Step>>,
    /// quantum part of the evaluated expression
    corrections: Vec<RClass>,
    chevalley_memo: RwLock<HashMap<(usize, usize), Arc<IClass>>>,
    product_memo: RwLock<HashMap<(usize, usize), Arc<IClass>>>,
}

impl QuantumRing {
    pub fn new(rs: &RootSystem, max_weyl: usize) -> Result<Self> {
        let table = WeylTable::new(rs, max_weyl)?;
        let reflections =
            rs.positive_roots().iter().map(|g| weyl::reflection(rs, g)).collect::<Result<Vec<_>>>()?;
        let mut ring = QuantumRing {
            rs: rs.clone(),
            table,
            reflections,
            exprs: Vec::new(),
            corrections: Vec::new(),
            chevalley_memo: RwLock::new(HashMap::new()),
            product_memo: RwLock::new(HashMap::new()),
        };
        ring.build_expressions()?;
        Ok(ring)
    }

    /// Convenience constructor from a system id like `"A3"`.
    pub fn for_system(id: &str) -> Result<Self> {
        Self::new(&RootSystem::parse(id)?, weyl::DEFAULT_MAX_WEYL)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn table(&self) -> &WeylTable {
        &self.table
    }

    pub fn elements(&self) -> &[WeylElt] {
        self.table.elements()
    }

    fn idx(&self, w: &WeylElt) -> Result<usize> {
        self.table
            .index_of(w)
            .ok_or_else(|| Error::InvalidInput("Weyl element from a different root system".into()))
    }

    /// Quantum Chevalley formula for `sigma^u * sigma^{s_i}`.
    pub fn chevalley_product(&self, u: &WeylElt, i: usize) -> Result<IClass> {
        if i >= self.rs.rank() {
            return Err(Error::InvalidInput(format!("simple index {} out of range", i + 1)));
        }
        Ok((*self.chevalley_idx(self.idx(u)?, i)).clone())
    }

    fn chevalley_idx(&self, u: usize, i: usize) -> Arc<IClass> {
        if let Some(c) = self.chevalley_memo.read().unwrap().get(&(u, i)) {
            return c.clone();
        }
        let uw = self.table.elements()[u];
        let lu = uw.length() as i64;
        let mut out = IClass::zero();
        for (k, gv) in self.rs.positive_coroots().iter().enumerate() {
            let c = gv.0[i];
            if c == 0 {
                continue;
            }
            let x = weyl::multiply(&self.rs, &uw, &self.reflections[k]);
            let lx = x.length() as i64;
            if lx == lu + 1 {
                out.add_term(x, Coroot::zero(self.rs.rank()), c as i64);
            } else if lx == lu + 1 - self.rs.two_rho(gv) as i64 {
                out.add_term(x, *gv, c as i64);
            }
        }
        let out = Arc::new(out);
        self.chevalley_memo.write().unwrap().insert((u, i), out.clone());
        out
    }

    fn build_expressions(&mut self) -> Result<()> {
        let n = self.rs.rank();
        let elems = self.table.elements().to_vec();
        self.exprs = vec![Vec::new(); elems.len()];
        self.corrections = vec![RClass::zero(); elems.len()];
        let max = self.table.max_length();
        for d in 2..=max {
            let layer: Vec<usize> = (0..elems.len()).filter(|&k| elems[k].length() == d).collect();
            let pos: HashMap<usize, usize> = layer.iter().enumerate().map(|(p, &k)| (k, p)).collect();
            let mut cands: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
            for k in (0..elems.len()).filter(|&k| elems[k].length() == d - 1) {
                for i in 0..n {
                    let ch = self.chevalley_idx(k, i);
                    let mut row = vec![Rational::zero(); layer.len()];
                    for (w, q, c) in ch.iter() {
                        if q.0.is_zero() {
                            let p = pos[&self.table.index_of(w).unwrap()];
                            row[p] = Rational::from_integer(*c);
                        }
                    }
                    cands.push((k, i, row));
                }
            }
            // sparse rows first keeps denominators small
            cands.sort_by_key(|(k, i, row)| (row.iter().filter(|x| !x.is_zero()).count(), *k, *i));
            let mut ech = Echelon::new(layer.len());
            let mut kept = Vec::new();
            for (k, i, row) in &cands {
                if ech.insert(row.clone()).is_some() {
                    kept.push((*k, *i));
                }
                if ech.rank() == layer.len() {
                    break;
                }
            }
            if ech.rank() != layer.len() {
                return Err(Error::Internal(format!("degree {d} is not generated by divisors")));
            }
            for (p, &v) in layer.iter().enumerate() {
                let comb = ech.unit_combination(p).expect("full rank");
                let steps: Vec<Step> = comb
                    .into_iter()
                    .zip(&kept)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, &(prev, i))| Step { c, prev, i })
                    .collect();
                let mut corr = RClass::zero();
                let mut classical = RClass::zero();
                for s in &steps {
                    let ch = self.chevalley_idx(s.prev, s.i).map_coeffs(|&x| Rational::from_integer(x));
                    corr.add_scaled(&ch.filter(|_, q| !q.0.is_zero()), &s.c, None);
                    classical.add_scaled(&ch.classical_part(), &s.c, None);
                }
                if classical != RClass::schubert(elems[v]) {
                    return Err(Error::Internal(format!("classical expression for element {v} is wrong")));
                }
                self.exprs[v] = steps;
                self.corrections[v] = corr;
            }
        }
        Ok(())
    }

    /// `sigma^u * sigma^v`.
    pub fn quantum_product(&self, u: &WeylElt, v: &WeylElt) -> Result<IClass> {
        Ok((*self.product_idx(self.idx(u)?, self.idx(v)?)?).clone())
    }

    /// Shared handle to a memoized product.
    pub fn product_arc(&self, u: &WeylElt, v: &WeylElt) -> Result<Arc<IClass>> {
        self.product_idx(self.idx(u)?, self.idx(v)?)
    }

    fn product_idx(&self, a: usize, b: usize) -> Result<Arc<IClass>> {
        // table indices follow the total order on WeylElt
        let (short, long) = if a <= b { (a, b) } else { (b, a) };
        if let Some(c) = self.product_memo.read().unwrap().get(&(short, long)) {
            return Ok(c.clone());
        }
        let elems = self.table.elements();
        let sw = elems[short];
        let res: IClass = match sw.length() {
            0 => IClass::schubert(elems[long]),
            1 => {
                let i = weyl::reduced_word(&self.rs, &sw)[0];
                (*self.chevalley_idx(long, i)).clone()
            }
            _ => {
                let mut acc = RClass::zero();
                for s in &self.exprs[short] {
                    let p = self.product_idx(long, s.prev)?;
                    for (w, q, c) in p.iter() {
                        let ch = self.chevalley_idx(self.table.index_of(w).unwrap(), s.i);
                        let f = s.c * Rational::from_integer(*c);
                        for (x, q2, c2) in ch.iter() {
                            acc.add_term(*x, *q + *q2, f * Rational::from_integer(*c2));
                        }
                    }
                }
                for (x, mu, c) in self.corrections[short].iter() {
                    let p = self.product_idx(long, self.table.index_of(x).unwrap())?;
                    for (w, q, c2) in p.iter() {
                        acc.add_term(*w, *q + *mu, -*c * Rational::from_integer(*c2));
                    }
                }
                to_integer_class(&acc, "quantum product")?
            }
        };
        let target = (sw.length() + elems[long].length()) as i64;
        for (w, q, c) in res.iter() {
            if *c < 0 || !q.0.is_nonneg() {
                return Err(Error::Internal(format!("negative term in product {short} x {long}")));
            }
            if w.length() as i64 + self.rs.two_rho(q) as i64 != target {
                return Err(Error::Internal(format!("inhomogeneous term in product {short} x {long}")));
            }
        }
        let res = Arc::new(res);
        self.product_memo.write().unwrap().insert((short, long), res.clone());
        Ok(res)
    }

    /// `N_{u,v}^{w,lambda}`.
    pub fn structure_constant(&self, u: &WeylElt, v: &WeylElt, w: &WeylElt, lambda: &Coroot) -> Result<i64> {
        Ok(self.product_arc(u, v)?.coeff(w, lambda))
    }

    /// Bilinear extension of the product to arbitrary classes.
    pub fn multiply(&self, a: &IClass, b: &IClass) -> Result<IClass> {
        let mut out = IClass::zero();
        for (w, q, c) in a.iter() {
            for (x, mu, d) in b.iter() {
                let p = self.product_arc(w, x)?;
                let shift = *q + *mu;
                out.add_scaled(&p, &(c * d), Some(&shift));
            }
        }
        Ok(out)
    }

    /// Classical cup product (the `q = 0` part).
    pub fn classical_product(&self, u: &WeylElt, v: &WeylElt) -> Result<IClass> {
        Ok(self.product_arc(u, v)?.classical_part())
    }

    /// All ordered pairs `(u, v)` with both lengths at most `max_len`.
    pub fn multiplication_table(&self, max_len: usize) -> Result<Vec<(WeylElt, WeylElt, IClass)>> {
        let els: Vec<WeylElt> = self.elements().iter().copied().filter(|w| w.length() <= max_len).collect();
        let mut out = Vec::with_capacity(els.len() * els.len());
        for u in &els {
            for v in &els {
                out.push((*u, *v, self.quantum_product(u, v)?));
            }
        }
        Ok(out)
    }

    /// Largest denominator appearing in the classical expressions.
    pub fn max_denominator(&self) -> i64 {
        self.exprs.iter().flatten().map(|s| *s.c.denom()).max().unwrap_or(1)
    }
}

/// Convert a rational class to integer coefficients, failing on fractions.
pub fn to_integer_class(c: &RClass, what: &str) -> Result<IClass> {
    let mut out = IClass::zero();
    for (w, q, x) in c.iter() {
        let v = x
            .to_i64()
            .ok_or_else(|| Error::Internal(format!("non-integral coefficient {x} in {what}")))?;
        out.add_term(*w, *q, v);
    }
    Ok(out)
}

/// `q^lambda` as a class.
pub fn q_power(rank: usize, lambda: Coroot) -> IClass {
    IClass::basis(WeylElt::identity(rank), lambda)
}

pub fn one(rank: usize) -> IClass {
    IClass::basis(WeylElt::identity(rank), Coroot::zero(rank))
}
