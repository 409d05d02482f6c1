use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::format::{class_string, term_string};
use crate::grading::Grading;
use crate::lattice::{Coroot, Root};
use crate::pwlift::{self, normalize_lambda_p};
use crate::qchev::IClass;
use crate::weyl::{self, WeylElt};

use super::context::Context;

/// One replayable check. Words are 1-based; vectors are full length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Case {
    Filtration { u: Vec<usize>, v: Vec<usize> },
    Classical { u: Vec<usize>, v: Vec<usize> },
    KeyLemma { u: Vec<usize>, gamma: Vec<i32>, i: usize },
    IdealMember { w: Vec<usize>, lambda: Vec<i32>, v: Vec<usize> },
    Quotient { u: Vec<usize>, v: Vec<usize> },
    UniqueBasis { d: Vec<i32> },
    Leading { a: Vec<i32>, b: Vec<i32> },
    PsiProduct { u: Vec<usize>, lu: Vec<i32>, v: Vec<usize>, lv: Vec<i32> },
    AOverJ { u: Vec<usize>, v: Vec<usize> },
    PsiGrading { lambda_p: Vec<i32> },
    PwLift { lambda_p: Vec<i32> },
    Referee { gamma: Vec<i32> },
    LengthBound { gamma: Vec<i32> },
    LeadingTerm { u: Vec<usize>, j: usize },
    Ring { u: Vec<usize>, v: Vec<usize> },
    Associative { u: Vec<usize>, v: Vec<usize>, w: Vec<usize> },
    Semigroup { u: Vec<usize>, v: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub vacuous: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Outcome {
    fn new(pass: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Outcome { pass, vacuous: false, lhs: lhs.into(), rhs: rhs.into() }
    }

    fn vacuous() -> Self {
        Outcome { pass: true, vacuous: true, lhs: String::new(), rhs: String::new() }
    }
}

fn shifted(c: &IClass, q: &Coroot) -> IClass {
    let mut out = IClass::zero();
    out.add_scaled(c, &1, Some(q));
    out
}

/// Largest grading among the terms, with the term.
fn worst(ctx: &Context, c: &IClass) -> Result<Option<(Grading, String)>> {
    let mut best: Option<(Grading, String)> = None;
    for (w, q, _) in c.iter() {
        let g = ctx.grader.gr(w, q)?;
        if best.as_ref().is_none_or(|(b, _)| g > *b) {
            best = Some((g, term_string(&ctx.rs, w, q)));
        }
    }
    Ok(best)
}

fn filtration_outcome(ctx: &Context, c: &IClass, bound: &Grading) -> Result<Outcome> {
    Ok(match worst(ctx, c)? {
        None => Outcome::new(true, "0", bound.to_string()),
        Some((g, t)) => Outcome::new(g <= *bound, format!("gr({t}) = {g}"), bound.to_string()),
    })
}

pub fn check_case(ctx: &Context, case: &Case) -> Result<Outcome> {
    let rs = &ctx.rs;
    let n = rs.rank();
    match case {
        Case::Filtration { u, v } | Case::Classical { u, v } => {
            let (u, v) = (ctx.elem(u)?, ctx.elem(v)?);
            let mut p = (*ctx.ring.product_arc(&u, &v)?).clone();
            if matches!(case, Case::Classical { .. }) {
                p = p.classical_part();
            }
            let bound = &ctx.grader.gr_weyl(&u)? + &ctx.grader.gr_weyl(&v)?;
            filtration_outcome(ctx, &p, &bound)
        }
        Case::KeyLemma { u, gamma, i } => {
            let u = ctx.elem(u)?;
            let g = Root(crate::lattice::IVec::from_slice(gamma));
            let gv = rs.coroot_of(&g)?;
            let x = weyl::multiply(rs, &u, &weyl::reflection(rs, &g)?);
            let bound = &ctx.grader.gr_weyl(&u)? + &ctx.grader.gr_weyl(&weyl::simple(rs, *i))?;
            let (lu, lx) = (u.length() as i32, x.length() as i32);
            let lhs = if lx == lu + 1 {
                ctx.grader.gr(&x, &Coroot::zero(n))?
            } else if lx == lu + 1 - rs.two_rho(&gv) {
                ctx.grader.gr(&x, &gv)?
            } else {
                return Ok(Outcome::vacuous());
            };
            Ok(Outcome::new(lhs <= bound, lhs.to_string(), bound.to_string()))
        }
        Case::IdealMember { w, lambda, v } => {
            let (w, v, lam) = (ctx.elem(w)?, ctx.elem(v)?, ctx.coroot(lambda)?);
            let top = ctx.grader.dim() - 1;
            let p = shifted(&*ctx.ring.product_arc(&w, &v)?, &lam);
            let mut bad = None;
            for (x, q, _) in p.iter() {
                let g = ctx.grader.gr(x, q)?;
                if g[top] <= 0 {
                    bad = Some(format!("gr({}) = {g}", term_string(rs, x, q)));
                    break;
                }
            }
            Ok(match bad {
                None => Outcome::new(true, class_string(rs, &p), "in I"),
                Some(t) => Outcome::new(false, t, "last coordinate > 0"),
            })
        }
        Case::Quotient { u, v } => {
            let (u, v) = (ctx.elem(u)?, ctx.elem(v)?);
            let dp = &ctx.delta_p;
            let p = ctx.ring.product_arc(&u, &v)?;
            let top = ctx.grader.dim() - 1;
            let mut kept = IClass::zero();
            for (w, q, c) in p.iter() {
                let inside = weyl::in_parabolic(rs, w, dp) && q.0.support().all(|i| dp.contains(&i));
                let g = ctx.grader.gr(w, q)?;
                if inside != (g[top] == 0) {
                    return Ok(Outcome::new(false, format!("gr({}) = {g}", term_string(rs, w, q)), "ideal criterion"));
                }
                if inside {
                    kept.add_term(*w, *q, *c);
                }
            }
            let sub = rs.subsystem(dp)?;
            let sub_ring = crate::qchev::QuantumRing::new(&sub, ctx.setup.max_weyl)?;
            let to_sub = |w: &WeylElt| {
                let word: Vec<usize> = weyl::reduced_word(rs, w).iter().map(|i| dp.iter().position(|x| x == i).unwrap()).collect();
                weyl::from_word(&sub, &word)
            };
            let sp = sub_ring.quantum_product(&to_sub(&u), &to_sub(&v))?;
            let mut mapped = IClass::zero();
            for (w, q, c) in sp.iter() {
                let word: Vec<usize> = weyl::reduced_word(&sub, w).iter().map(|&k| dp[k]).collect();
                let mut lam = Coroot::zero(n);
                for (k, &i) in dp.iter().enumerate() {
                    lam.0[i] = q.0[k];
                }
                mapped.add_term(weyl::from_word(rs, &word), lam, *c);
            }
            Ok(Outcome::new(kept == mapped, class_string(rs, &kept), class_string(rs, &mapped)))
        }
        Case::UniqueBasis { d } => {
            let g = ctx.connected()?;
            let (w, lam) = g.unique_basis_element(d)?;
            let mut key = d.clone();
            key.resize(g.dim(), 0);
            let count = ctx.uniqueness_table()?.get(&key).copied().unwrap_or(0);
            let nonneg_ok = !d.iter().all(|&x| x >= 0) || lam.0.is_nonneg();
            Ok(Outcome::new(
                count == 1 && nonneg_ok,
                format!("{} ({count} with this grading)", term_string(rs, &w, &lam)),
                "exactly one, nonnegative q-degree",
            ))
        }
        Case::Leading { a, b } => {
            let g = ctx.connected()?;
            let (wa, la) = g.unique_basis_element(a)?;
            let (wb, lb) = g.unique_basis_element(b)?;
            let ab: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            let (wt, lt) = g.unique_basis_element(&ab)?;
            let mut target = Grading(ab.clone());
            target.0.resize(g.dim(), 0);
            let p = shifted(&*ctx.ring.product_arc(&wa, &wb)?, &(la + lb));
            let mut top = IClass::zero();
            let mut above = None;
            for (w, q, c) in p.iter() {
                let gg = g.gr(w, q)?;
                if gg == target {
                    top.add_term(*w, *q, *c);
                } else if gg > target {
                    above = Some(gg);
                }
            }
            let want = IClass::basis(wt, lt);
            Ok(Outcome::new(
                above.is_none() && top == want,
                class_string(rs, &top),
                class_string(rs, &want),
            ))
        }
        Case::PsiProduct { u, lu, v, lv } => {
            let g = ctx.connected()?;
            let r = g.ordered_parabolic().r();
            let qhp = ctx.qhp()?;
            let (u, v, lu, lv) = (ctx.elem(u)?, ctx.elem(v)?, ctx.coroot(lu)?, ctx.coroot(lv)?);
            let (xw, xl) = qhp.psi(&u, &lu)?;
            let (yw, yl) = qhp.psi(&v, &lv)?;
            let (gx, gy) = (g.gr(&xw, &xl)?, g.gr(&yw, &yl)?);
            if !gx.window(1, r).is_zero() || !gy.window(1, r).is_zero() {
                return Ok(Outcome::new(false, format!("{gx}, {gy}"), "zero lower window"));
            }
            let target = &gx + &gy;
            let p = shifted(&*ctx.ring.product_arc(&xw, &yw)?, &(xl + yl));
            let mut lead = IClass::zero();
            for (w, q, c) in p.iter() {
                let gg = g.gr(w, q)?;
                if gg == target {
                    lead.add_term(*w, *q, *c);
                } else if gg > target {
                    return Ok(Outcome::new(false, format!("gr({}) = {gg}", term_string(rs, w, q)), target.to_string()));
                }
            }
            let gp = shifted(&qhp.product(&u, &v)?, &(lu + lv));
            let mut lifted = IClass::zero();
            for (w, q, c) in gp.iter() {
                let (a, b) = qhp.psi(w, q)?;
                lifted.add_term(a, b, *c);
            }
            Ok(Outcome::new(lead == lifted, class_string(rs, &lead), class_string(rs, &lifted)))
        }
        Case::AOverJ { u, v } => {
            let g = ctx.connected()?;
            let r = g.ordered_parabolic().r();
            let qhp = ctx.qhp()?;
            let (u, v) = (ctx.elem(u)?, ctx.elem(v)?);
            let zero = Grading::zero(g.dim());
            let p = ctx.ring.product_arc(&u, &v)?;
            let mut aj = IClass::zero();
            for (w, q, c) in p.iter() {
                let gg = g.gr(w, q)?;
                let on_axis = gg.window(1, r).is_zero() && gg[r] >= 0;
                if on_axis {
                    let lp = normalize_lambda_p(&ctx.delta_p, q);
                    let lift = qhp.lift(&lp)?;
                    let back = weyl::multiply(rs, w, &weyl::inverse(rs, &lift.omega_factor));
                    if lift.lambda_b != *q || !weyl::is_min_rep(rs, &back, &ctx.delta_p) {
                        return Ok(Outcome::new(false, format!("{} not in the image of psi", term_string(rs, w, q)), ""));
                    }
                    aj.add_term(back, lp, *c);
                } else if gg >= zero {
                    return Ok(Outcome::new(false, format!("gr({}) = {gg}", term_string(rs, w, q)), "outside A"));
                }
            }
            let gp = qhp.product(&u, &v)?;
            let mut pass = aj == gp;
            let mut rhs = class_string(rs, &gp);
            if let Some((m, reps)) = ctx.projective() {
                let (a, b) = (u.length(), v.length());
                let free = ctx.free()[0];
                let want = if a + b <= *m {
                    IClass::schubert(reps[a + b])
                } else {
                    IClass::basis(reps[a + b - m - 1], Coroot::simple(n, free))
                };
                pass &= gp == want;
                rhs = format!("{rhs} (P^{m}: {})", class_string(rs, &want));
            }
            Ok(Outcome::new(pass, class_string(rs, &aj), rhs))
        }
        Case::PsiGrading { lambda_p } => {
            let g = ctx.connected()?;
            let r = g.ordered_parabolic().r();
            let lam = ctx.coroot(lambda_p)?;
            let (w, lb) = ctx.qhp()?.psi(&WeylElt::identity(n), &lam)?;
            let gg = g.gr(&w, &lb)?;
            Ok(Outcome::new(
                gg.window(1, r).is_zero() && lb.0.is_nonneg(),
                format!("gr({}) = {gg}", term_string(rs, &w, &lb)),
                "zero lower window, nonnegative lift",
            ))
        }
        Case::PwLift { lambda_p } => {
            let dp = &ctx.delta_p;
            let lam = ctx.coroot(lambda_p)?;
            let lift = pwlift::pw_lift(rs, dp, &lam)?;
            let p = dp.len();
            let mut k = 6i32;
            while k > 1 && ((2 * k + 1) as f64).powi(p as i32) > 2_000_000.0 {
                k -= 1;
            }
            let roots_p: Vec<Root> = rs.positive_roots_in(dp).into_iter().map(|i| rs.positive_roots()[i]).collect();
            let base = normalize_lambda_p(dp, &lam);
            let mut found = Vec::new();
            let mut a = vec![-k; p];
            loop {
                let mut l = base;
                for (j, &x) in a.iter().enumerate() {
                    l.0[dp[j]] += x;
                }
                if roots_p.iter().all(|b| matches!(rs.pairing(b, &l), 0 | -1)) {
                    found.push(l);
                }
                let mut j = 0;
                while j < p && a[j] == k {
                    a[j] = -k;
                    j += 1;
                }
                if j == p {
                    break;
                }
                a[j] += 1;
            }
            let pp: Vec<usize> = lift.delta_p_prime.clone();
            let want_pp: Vec<usize> = dp.iter().copied().filter(|&i| rs.pairing(&rs.simple_root(i), &lift.lambda_b) == 0).collect();
            let len_ok = lift.omega_factor.length() == rs.positive_roots_in(dp).len() - rs.positive_roots_in(&pp).len();
            let rep_ok = weyl::in_parabolic(rs, &lift.omega_factor, dp);
            Ok(Outcome::new(
                found == vec![lift.lambda_b] && pp == want_pp && len_ok && rep_ok,
                format!("{:?} by box search", found.iter().map(|c| c.coeffs().to_vec()).collect::<Vec<_>>()),
                format!("{:?}", lift.lambda_b.coeffs()),
            ))
        }
        Case::Referee { gamma } => {
            let g = ctx.connected()?;
            let gv = rs.coroot_of(&Root(crate::lattice::IVec::from_slice(gamma)))?;
            let lhs = g.gr_lambda(&gv);
            let rhs = g.referee_rhs(&gv);
            Ok(Outcome::new(lhs == rhs, lhs.to_string(), rhs.to_string()))
        }
        Case::LengthBound { gamma } => {
            let g = Root(crate::lattice::IVec::from_slice(gamma));
            let l = weyl::reflection(rs, &g)?.length() as i32;
            let b = rs.two_rho(&rs.coroot_of(&g)?) - 1;
            Ok(Outcome::new(l <= b, l.to_string(), b.to_string()))
        }
        Case::LeadingTerm { u, j } => {
            let g = ctx.connected()?;
            let u = ctx.elem(u)?;
            let alpha = g.ordered_parabolic().order()[j - 1];
            let x = weyl::mul_simple(rs, &u, alpha);
            let p = ctx.ring.chevalley_product(&u, alpha)?;
            let gx = g.gr_weyl(&x)?;
            let rest = p.filter(|w, q| !(*w == x && q.0.is_zero()));
            let ok_rest = match worst(ctx, &rest)? {
                None => true,
                Some((gg, _)) => gg < gx,
            };
            Ok(Outcome::new(
                p.coeff(&x, &Coroot::zero(n)) == 1 && ok_rest,
                class_string(rs, &p),
                format!("{} + lower than {gx}", term_string(rs, &x, &Coroot::zero(n))),
            ))
        }
        Case::Ring { u, v } => {
            let (u, v) = (ctx.elem(u)?, ctx.elem(v)?);
            let a = ctx.ring.quantum_product(&u, &v)?;
            let b = ctx.ring.quantum_product(&v, &u)?;
            let deg = (u.length() + v.length()) as i32;
            let good = a.iter().all(|(w, q, c)| *c > 0 && q.0.is_nonneg() && w.length() as i32 + rs.two_rho(q) == deg);
            Ok(Outcome::new(a == b && good, class_string(rs, &a), class_string(rs, &b)))
        }
        Case::Associative { u, v, w } => {
            let (u, v, w) = (ctx.elem(u)?, ctx.elem(v)?, ctx.elem(w)?);
            let l = ctx.ring.multiply(&ctx.ring.quantum_product(&u, &v)?, &IClass::schubert(w))?;
            let r = ctx.ring.multiply(&IClass::schubert(u), &ctx.ring.quantum_product(&v, &w)?)?;
            Ok(Outcome::new(l == r, class_string(rs, &l), class_string(rs, &r)))
        }
        Case::Semigroup { u, v } => {
            let g = ctx.connected()?;
            let (u, v) = (ctx.elem(u)?, ctx.elem(v)?);
            let x = &g.gr_weyl(&u)? + &g.gr_weyl(&v)?;
            Ok(match g.semigroup_witness(&x) {
                Ok((w, lam)) => Outcome::new(true, term_string(rs, &w, &lam), x.to_string()),
                Err(e) => Outcome::new(false, e.to_string(), x.to_string()),
            })
        }
    }
}
