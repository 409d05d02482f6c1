use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::weyl::{self, WeylElt};

use super::checks::{check_case, Case};
use super::context::{AnyGrader, Context, Setup};
use super::{Failure, Report, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Filtration,
    KeyLemma,
    IdealQuotient,
    GradedIso,
    PsiGrading,
    PwLift,
    Referee,
    Basics,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Filtration,
        Suite::KeyLemma,
        Suite::IdealQuotient,
        Suite::GradedIso,
        Suite::PsiGrading,
        Suite::PwLift,
        Suite::Referee,
        Suite::Basics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Filtration => "filtration",
            Suite::KeyLemma => "key-lemma",
            Suite::IdealQuotient => "ideal-quotient",
            Suite::GradedIso => "graded-iso",
            Suite::PsiGrading => "psi-grading",
            Suite::PwLift => "pw-lift",
            Suite::Referee => "referee",
            Suite::Basics => "basics",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::InvalidInput(format!("unknown suite '{s}' (expected one of {}, or all)", names.join(", ")))
            })
    }

    /// Parse a comma list; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(Suite::parse(part)?);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidInput("no suites given".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Conjecture suites report verdicts but never fail.
    pub fn informational(self) -> bool {
        self == Suite::Referee
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn sample<T: Clone>(all: Vec<T>, n: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    if all.len() <= n {
        return all;
    }
    (0..n).map(|_| all[rng.gen_range(0..all.len())].clone()).collect()
}

fn box_points(dims: usize, lo: i32, hi: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dims {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

fn lambda_p_box(ctx: &Context) -> Vec<Vec<i32>> {
    let free = ctx.free();
    box_points(free.len(), 0, ctx.setup.max_q)
        .into_iter()
        .map(|p| {
            let mut v = vec![0; ctx.rs.rank()];
            for (k, &i) in free.iter().enumerate() {
                v[i] = p[k];
            }
            v
        })
        .collect()
}

fn is_exhaustive(ctx: &Context) -> bool {
    ctx.ring.elements().len() <= ctx.setup.exhaustive_limit
}

/// The cases a suite runs on this context, in a fixed order.
pub fn cases_for(ctx: &Context, suite: Suite) -> Result<Vec<Case>> {
    let rs = &ctx.rs;
    let n = rs.rank();
    let els = ctx.ring.elements();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.setup.seed);
    let exhaustive = is_exhaustive(ctx);
    let limit = ctx.setup.samples;
    let w = |x: &WeylElt| ctx.word(x);
    let pairs = |rng: &mut ChaCha8Rng| -> Vec<(WeylElt, WeylElt)> {
        if exhaustive {
            els.iter().flat_map(|u| els.iter().map(move |v| (*u, *v))).collect()
        } else {
            (0..limit).map(|_| (els[rng.gen_range(0..els.len())], els[rng.gen_range(0..els.len())])).collect()
        }
    };
    let connected = matches!(ctx.grader, AnyGrader::Connected(_));
    let a_type = connected && rs.is_a_type(&ctx.delta_p);
    let mut out = Vec::new();
    match suite {
        Suite::Filtration => {
            for (u, v) in pairs(&mut rng) {
                out.push(Case::Filtration { u: w(&u), v: w(&v) });
            }
        }
        Suite::KeyLemma => {
            let us: Vec<WeylElt> = if exhaustive { els.to_vec() } else { sample(els.to_vec(), limit, &mut rng) };
            for u in &us {
                for g in rs.positive_roots() {
                    let gv = rs.coroot_of(g)?;
                    for i in 0..n {
                        if gv.0[i] != 0 {
                            out.push(Case::KeyLemma { u: w(u), gamma: g.coeffs().to_vec(), i });
                        }
                    }
                }
            }
        }
        Suite::IdealQuotient => {
            if !connected {
                return Ok(out);
            }
            let g = ctx.connected()?;
            let top = g.dim() - 1;
            let free = ctx.free();
            let mut members = Vec::new();
            for x in els {
                for q in box_points(free.len(), 0, 1) {
                    let mut lam = crate::Coroot::zero(n);
                    for (k, &i) in free.iter().enumerate() {
                        lam.0[i] = q[k];
                    }
                    if g.gr(x, &lam)?[top] > 0 {
                        members.push((*x, lam));
                    }
                }
            }
            let members = sample(members, limit, &mut rng);
            let vs: Vec<WeylElt> = els.iter().copied().filter(|v| v.length() <= 2).collect();
            for (x, lam) in &members {
                for v in &vs {
                    out.push(Case::IdealMember { w: w(x), lambda: lam.coeffs().to_vec(), v: w(v) });
                }
            }
            let sub: Vec<WeylElt> = els.iter().copied().filter(|x| weyl::in_parabolic(rs, x, &ctx.delta_p)).collect();
            for u in &sub {
                for v in &sub {
                    out.push(Case::Quotient { u: w(u), v: w(v) });
                }
            }
        }
        Suite::GradedIso => {
            if !connected {
                return Ok(out);
            }
            let g = ctx.connected()?;
            let s = g.ordered_parabolic().sigma();
            let k = ctx.setup.grading_box;
            let pts = box_points(s, 0, k);
            for d in &pts {
                out.push(Case::UniqueBasis { d: d.clone() });
            }
            let mut lead = Vec::new();
            for a in &pts {
                for b in &pts {
                    if a.iter().zip(b).all(|(x, y)| x + y <= k) {
                        lead.push(Case::Leading { a: a.clone(), b: b.clone() });
                    }
                }
            }
            out.extend(if exhaustive { lead } else { sample(lead, limit, &mut rng) });
            for _ in 0..limit.min(els.len() * els.len()) {
                let (u, v) = (els[rng.gen_range(0..els.len())], els[rng.gen_range(0..els.len())]);
                out.push(Case::Semigroup { u: w(&u), v: w(&v) });
            }
            if a_type {
                let reps = ctx.min_reps();
                let lp = lambda_p_box(ctx);
                let items: Vec<(&WeylElt, &Vec<i32>)> = reps.iter().flat_map(|u| lp.iter().map(move |l| (u, l))).collect();
                let m = items.len();
                let want = limit.max(100);
                let idx: Vec<(usize, usize)> = if m * m <= want {
                    (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect()
                } else {
                    (0..want).map(|_| (rng.gen_range(0..m), rng.gen_range(0..m))).collect()
                };
                for (a, b) in idx {
                    let ((u, lu), (v, lv)) = (items[a], items[b]);
                    out.push(Case::PsiProduct { u: w(u), lu: lu.clone(), v: w(v), lv: lv.clone() });
                }
                for u in &reps {
                    for v in &reps {
                        out.push(Case::AOverJ { u: w(u), v: w(v) });
                    }
                }
            }
        }
        Suite::PsiGrading => {
            if a_type {
                for lp in lambda_p_box(ctx) {
                    out.push(Case::PsiGrading { lambda_p: lp });
                }
            }
        }
        Suite::PwLift => {
            for lp in lambda_p_box(ctx) {
                out.push(Case::PwLift { lambda_p: lp });
            }
        }
        Suite::Referee => {
            if connected {
                for g in rs.positive_roots() {
                    out.push(Case::Referee { gamma: g.coeffs().to_vec() });
                }
            }
        }
        Suite::Basics => {
            for g in rs.positive_roots() {
                out.push(Case::LengthBound { gamma: g.coeffs().to_vec() });
            }
            if connected {
                let r = ctx.connected()?.ordered_parabolic().r();
                for u in ctx.min_reps() {
                    for j in 1..=r {
                        out.push(Case::LeadingTerm { u: w(&u), j });
                    }
                }
            }
            for (u, v) in pairs(&mut rng) {
                out.push(Case::Classical { u: w(&u), v: w(&v) });
            }
            let ring: Vec<Case> = if n <= 3 || exhaustive {
                els.iter().flat_map(|u| els.iter().map(move |v| (*u, *v))).map(|(u, v)| Case::Ring { u: w(&u), v: w(&v) }).collect()
            } else {
                sample(pairs(&mut rng), limit, &mut rng).into_iter().map(|(u, v)| Case::Ring { u: w(&u), v: w(&v) }).collect()
            };
            out.extend(ring);
            for _ in 0..limit {
                let pick = |rng: &mut ChaCha8Rng| els[rng.gen_range(0..els.len())];
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                out.push(Case::Associative { u: w(&a), v: w(&b), w: w(&c) });
            }
        }
    }
    Ok(out)
}

/// Run one suite against freshly built modules.
pub fn run_suite(setup: &Setup, suite: Suite) -> Result<Report> {
    let start = Instant::now();
    let ctx = Context::new(setup)?;
    let cases = cases_for(&ctx, suite)?;
    let regime = if cases.is_empty() {
        "not-applicable"
    } else if is_exhaustive(&ctx) {
        "exhaustive"
    } else {
        "sampled"
    };
    let mut report = Report {
        suite: suite.name().into(),
        system: ctx.rs.name().into(),
        parabolic: ctx.delta_p.iter().map(|i| i + 1).collect(),
        order: ctx.order().iter().map(|i| i + 1).collect(),
        regime: regime.into(),
        informational: suite.informational(),
        total: cases.len(),
        passes: 0,
        vacuous: 0,
        failures: Vec::new(),
        verdicts: Vec::new(),
        elapsed_ms: 0,
    };
    for case in cases {
        let o = check_case(&ctx, &case)?;
        if o.pass {
            report.passes += 1;
        } else {
            report.failures.push(Failure { case: case.clone(), lhs: o.lhs.clone(), rhs: o.rhs.clone() });
        }
        if o.vacuous {
            report.vacuous += 1;
        }
        if suite.informational() {
            report.verdicts.push(Verdict { case, lhs: o.lhs, rhs: o.rhs, holds: o.pass });
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}
