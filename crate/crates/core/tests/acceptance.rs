//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Uses its own `main` so the lines are always printed under `cargo test`.

use std::time::{Duration, Instant};

use qhgr::grading::{Grader, OrderedParabolic};
use qhgr::qchev::{IClass, QuantumRing};
use qhgr::verify::{cases_for, run_suite, Case, Context, Report, Setup, Suite};
use qhgr::weyl::{self, from_word};
use qhgr::{Coroot, RootSystem, WeylElt};

struct Line {
    pass: bool,
    detail: String,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line { pass, detail: detail.into() }
}

/// Nonempty proper subsets of `0..n`.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    (1..(1u32 << n) - 1).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

fn elem(rs: &RootSystem, word: &[usize]) -> WeylElt {
    let w: Vec<usize> = word.iter().map(|i| i - 1).collect();
    from_word(rs, &w)
}

/// Terms given as (coefficient, q exponents, 1-based word).
fn class(rs: &RootSystem, terms: &[(i64, [i32; 2], &[usize])]) -> IClass {
    let mut c = IClass::zero();
    for (k, q, w) in terms {
        c.add_term(elem(rs, w), Coroot::from_slice(q), *k);
    }
    c
}

fn suite(system: &str, dp: &[usize], s: Suite) -> Report {
    run_suite(&Setup::new(system, dp), s).unwrap_or_else(|e| panic!("{system} {dp:?} {s}: {e}"))
}

fn summarize(reports: &[Report]) -> (bool, String) {
    let total: usize = reports.iter().map(|r| r.total).sum();
    let passes: usize = reports.iter().map(|r| r.passes).sum();
    let vacuous: usize = reports.iter().map(|r| r.vacuous).sum();
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.failures.is_empty())
        .map(|r| format!("{} {:?}: {:?}", r.system, r.parabolic, r.failures[0]))
        .collect();
    (bad.is_empty(), format!("{passes}/{total} pass, {vacuous} vacuous{}", if bad.is_empty() { String::new() } else { format!("; first failure {}", bad[0]) }))
}

fn timed(limit: Duration, f: impl FnOnce() -> Line) -> Line {
    let t = Instant::now();
    let mut l = f();
    let dt = t.elapsed();
    if dt > limit {
        l.pass = false;
        l.detail = format!("{} (too slow: {dt:.2?} > {limit:?})", l.detail);
    } else {
        l.detail = format!("{} ({dt:.2?})", l.detail);
    }
    l
}

fn example_products() -> Line {
    let rs = RootSystem::parse("A2").unwrap();
    let ring = QuantumRing::new(&rs, 100).unwrap();
    let s1: &[usize] = &[1];
    let s2: &[usize] = &[2];
    let s12: &[usize] = &[1, 2];
    let s21: &[usize] = &[2, 1];
    let s121: &[usize] = &[1, 2, 1];
    let e: &[usize] = &[];
    let expected: Vec<(&[usize], &[usize], Vec<(i64, [i32; 2], &[usize])>)> = vec![
        (s1, s1, vec![(1, [0, 0], s21), (1, [1, 0], e)]),
        (s1, s12, vec![(1, [0, 0], s121)]),
        (s1, s21, vec![(1, [1, 0], s2)]),
        (s2, s2, vec![(1, [0, 0], s12), (1, [0, 1], e)]),
        (s2, s21, vec![(1, [0, 0], s121)]),
        (s2, s12, vec![(1, [0, 1], s1)]),
        (s12, s121, vec![(1, [1, 1], s2)]),
        (s12, s12, vec![(1, [0, 1], s21)]),
        (s1, s121, vec![(1, [1, 0], s12), (1, [1, 1], e)]),
        (s21, s121, vec![(1, [1, 1], s1)]),
        (s21, s21, vec![(1, [1, 0], s12)]),
        (s2, s121, vec![(1, [0, 1], s21), (1, [1, 1], e)]),
        (s1, s2, vec![(1, [0, 0], s12), (1, [0, 0], s21)]),
        (s12, s21, vec![(1, [1, 1], e)]),
        (s121, s121, vec![(1, [1, 1], s12), (1, [1, 1], s21)]),
    ];
    let mut bad = Vec::new();
    for (u, v, want) in &expected {
        let got = ring.quantum_product(&elem(&rs, u), &elem(&rs, v)).unwrap();
        if got != class(&rs, want) {
            bad.push(format!("{u:?}*{v:?} = {}", qhgr::format::class_string(&rs, &got)));
        }
    }
    line(bad.is_empty(), format!("{} of {} listed products match{}", expected.len() - bad.len(), expected.len(), bad.first().map(|b| format!("; {b}")).unwrap_or_default()))
}

/// Table cell: (q1 exponent, q2 exponent, word), or None for an empty cell.
type Cell = Option<(i32, i32, &'static [usize])>;

fn grading_table() -> Line {
    const E: &[usize] = &[];
    const S1: &[usize] = &[1];
    const S2: &[usize] = &[2];
    const S12: &[usize] = &[1, 2];
    const S21: &[usize] = &[2, 1];
    const S121: &[usize] = &[1, 2, 1];
    // rows i = 4 down to -2, columns j = 0..6
    let table: [[Cell; 7]; 7] = [
        [Some((2, 0, E)), Some((2, 0, S2)), Some((2, 0, S12)), Some((2, 1, S1)), Some((2, 1, S21)), Some((2, 1, S121)), Some((3, 2, E))],
        [Some((1, 0, S1)), Some((1, 0, S21)), Some((1, 0, S121)), Some((2, 1, E)), Some((2, 1, S2)), Some((2, 1, S12)), Some((2, 2, S1))],
        [Some((1, 0, E)), Some((1, 0, S2)), Some((1, 0, S12)), Some((1, 1, S1)), Some((1, 1, S21)), Some((1, 1, S121)), Some((2, 2, E))],
        [Some((0, 0, S1)), Some((0, 0, S21)), Some((0, 0, S121)), Some((1, 1, E)), Some((1, 1, S2)), Some((1, 1, S12)), Some((1, 2, S1))],
        [Some((0, 0, E)), Some((0, 0, S2)), Some((0, 0, S12)), Some((0, 1, S1)), Some((0, 1, S21)), Some((0, 1, S121)), Some((1, 2, E))],
        [None, None, None, Some((0, 1, E)), Some((0, 1, S2)), Some((0, 1, S12)), Some((0, 2, S1))],
        [None, None, None, None, None, None, Some((0, 2, E))],
    ];
    let rs = RootSystem::parse("A2").unwrap();
    let g = Grader::new(&rs, &OrderedParabolic::new(&rs, &[0]).unwrap()).unwrap();
    let els = weyl::enumerate(&rs, &[0, 1], 100).unwrap();
    // every element of the q-box, by grading
    let mut found: std::collections::HashMap<(i32, i32), Vec<(i32, i32, WeylElt)>> = Default::default();
    for a in 0..=8 {
        for b in 0..=8 {
            for w in &els {
                let x = g.gr(w, &Coroot::from_slice(&[a, b])).unwrap();
                found.entry((x[0], x[1])).or_default().push((a, b, *w));
            }
        }
    }
    let mut bad = Vec::new();
    for (row, cells) in table.iter().enumerate() {
        let i = 4 - row as i32;
        for (j, cell) in cells.iter().enumerate() {
            let j = j as i32;
            let got = found.get(&(i, j)).cloned().unwrap_or_default();
            let ok = match cell {
                None => got.is_empty(),
                Some((a, b, word)) => got.len() == 1 && got[0] == (*a, *b, elem(&rs, word)),
            };
            if !ok {
                bad.push((i, j));
            }
        }
    }
    line(bad.is_empty(), format!("{} of 49 cells match{}", 49 - bad.len(), bad.first().map(|b| format!("; first mismatch at {b:?}")).unwrap_or_default()))
}

fn key_lemma() -> Line {
    let mut reports = Vec::new();
    for id in ["A2", "A3", "B2", "B3", "C3", "G2"] {
        let n = RootSystem::parse(id).unwrap().rank();
        for dp in subsets(n) {
            reports.push(suite(id, &dp, Suite::KeyLemma));
        }
    }
    let (ok, d) = summarize(&reports);
    line(ok, format!("every parabolic of A2 A3 B2 B3 C3 G2: {d}"))
}

fn filtration() -> Line {
    let mut reports = Vec::new();
    let mut counts = true;
    for (id, pairs) in [("A2", 36), ("A3", 576), ("B3", 2304), ("G2", 144)] {
        let n = RootSystem::parse(id).unwrap().rank();
        for dp in subsets(n) {
            let r = suite(id, &dp, Suite::Filtration);
            counts &= r.total == pairs && r.regime == "exhaustive";
            reports.push(r);
        }
    }
    let (ok, d) = summarize(&reports);
    line(ok && counts, format!("all pairs for A2 (36) A3 (576) B3 (2304) G2 (144), every parabolic: {d}"))
}

fn quotient() -> Line {
    let mut reports = Vec::new();
    let mut quotient_cases = Vec::new();
    for id in ["A3", "B3"] {
        let ctx = Context::new(&Setup::new(id, &[0, 1])).unwrap();
        let n = cases_for(&ctx, Suite::IdealQuotient).unwrap().iter().filter(|c| matches!(c, Case::Quotient { .. })).count();
        quotient_cases.push(n);
        reports.push(suite(id, &[0, 1], Suite::IdealQuotient));
    }
    let (ok, d) = summarize(&reports);
    line(ok && quotient_cases == [36, 36], format!("A3 and B3 over (1,2), 36 quotient pairs each plus ideal membership: {d}"))
}

fn pw_lift() -> Line {
    let reports: Vec<Report> = ["A3", "B3"].iter().map(|id| suite(id, &[0, 1], Suite::PwLift)).collect();
    let (ok, d) = summarize(&reports);
    line(ok && reports.iter().all(|r| r.total == 4), format!("degrees 0..3 on A3 and B3 over (1,2), box search |a| <= 6: {d}"))
}

fn psi_grading() -> Line {
    let reports: Vec<Report> = ["A3", "B3"].iter().map(|id| suite(id, &[0, 1], Suite::PsiGrading)).collect();
    let (ok, d) = summarize(&reports);
    line(ok && reports.iter().all(|r| r.total == 4), format!("lower window vanishes on A3 and B3 over (1,2): {d}"))
}

fn graded_iso() -> Line {
    let mut reports = Vec::new();
    let mut shape = Vec::new();
    for (id, dp) in [("A3", vec![0, 1]), ("A2", vec![0])] {
        let ctx = Context::new(&Setup::new(id, &dp)).unwrap();
        let cases = cases_for(&ctx, Suite::GradedIso).unwrap();
        let count = |f: fn(&Case) -> bool| cases.iter().filter(|c| f(c)).count();
        let s = ctx.connected().unwrap().ordered_parabolic().sigma() as u32;
        shape.push((
            count(|c| matches!(c, Case::UniqueBasis { .. })) == 7usize.pow(s),
            count(|c| matches!(c, Case::PsiProduct { .. })) >= 100,
            count(|c| matches!(c, Case::AOverJ { .. })) > 0 && ctx.projective().is_some(),
        ));
        reports.push(suite(id, &dp, Suite::GradedIso));
    }
    let shape_ok = shape.iter().all(|&(a, b, c)| a && b && c);
    let (ok, d) = summarize(&reports);
    line(ok && shape_ok, format!("uniqueness on [0..6], leading products, psi on >= 100 pairs, P^3 and P^2 constants: {d}"))
}

fn properties() -> Line {
    let mut reports = Vec::new();
    for id in ["A2", "A3", "B2", "B3", "C3", "G2"] {
        let mut s = Setup::new(id, &[0]);
        s.samples = 200;
        reports.push(run_suite(&s, Suite::Basics).unwrap());
    }
    // length bound on every positive root up to rank 4
    for id in ["A4", "B4", "C4", "D4", "F4"] {
        let mut s = Setup::new(id, &[0]);
        s.allow_exceptional = true;
        s.max_weyl = 1200;
        let ctx = Context::new(&s).unwrap();
        let mut r = Report {
            suite: "length-bound".into(),
            system: id.into(),
            parabolic: vec![1],
            order: vec![1],
            regime: "exhaustive".into(),
            informational: false,
            total: 0,
            passes: 0,
            vacuous: 0,
            failures: Vec::new(),
            verdicts: Vec::new(),
            elapsed_ms: 0,
        };
        for g in ctx.rs.positive_roots() {
            let c = Case::LengthBound { gamma: g.coeffs().to_vec() };
            r.total += 1;
            if qhgr::verify::check_case(&ctx, &c).unwrap().pass {
                r.passes += 1;
            }
        }
        reports.push(r);
    }
    let (ok, d) = summarize(&reports);
    line(ok, format!("ring axioms, classical filtration, leading terms, length bound through rank 4: {d}"))
}

fn referee() -> Line {
    let mut produced = true;
    let mut total = 0;
    let mut holds = 0;
    for id in ["A2", "A3", "B2", "B3", "G2"] {
        let rs = RootSystem::parse(id).unwrap();
        for dp in subsets(rs.rank()).into_iter().filter(|dp| rs.is_connected(dp)) {
            let r = suite(id, &dp, Suite::Referee);
            produced &= r.verdicts.len() == rs.positive_roots().len() && r.ok();
            total += r.verdicts.len();
            holds += r.verdicts.iter().filter(|v| v.holds).count();
        }
    }
    line(produced, format!("verdicts for every positive root, connected parabolics of A2 A3 B2 B3 G2: {holds}/{total} hold (informational)"))
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Line)> = vec![
        ("Fl3 quantum products", Duration::from_secs(1), example_products),
        ("A2 grading table", Duration::from_secs(1), grading_table),
        ("key lemma", Duration::from_secs(120), key_lemma),
        ("filtration", Duration::from_secs(600), filtration),
        ("quotient isomorphism", Duration::from_secs(60), quotient),
        ("Peterson-Woodward lift", Duration::from_secs(60), pw_lift),
        ("psi grading", Duration::from_secs(60), psi_grading),
        ("graded isomorphism", Duration::from_secs(300), graded_iso),
        ("property suite", Duration::from_secs(300), properties),
        ("referee conjecture report", Duration::from_secs(60), referee),
    ];
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.into_iter().enumerate() {
        let l = timed(limit, f);
        println!("criterion {:>2} {}: {} - {}", k + 1, if l.pass { "PASS" } else { "FAIL" }, name, l.detail);
        if !l.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
