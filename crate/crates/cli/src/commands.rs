//! Subcommand implementations. Each returns the text to print.

use std::collections::BTreeMap;

use serde::Serialize;

use qhgr::format::{class_csv, class_json, class_string, elem_from_word, parse_word, term_string, word_of, word_string, JsonTerm};
use qhgr::grading::{canonical_order, Grader, Grading, OrderedParabolic, ReducibleGrader};
use qhgr::pwlift::{self, QhpRing};
use qhgr::qchev::{IClass, QuantumRing};
use qhgr::verify::{run_suite, Report, Setup, Suite};
use qhgr::weyl::{self, WeylElt};
use qhgr::{Coroot, RootSystem};

use crate::config::{ConfigError, Format, RunConfig};

/// Failure modes, each with its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Internal(m) => write!(f, "internal consistency failure: {m}"),
        }
    }
}

impl From<qhgr::Error> for CliError {
    fn from(e: qhgr::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Output of a command: text for stdout, warnings for stderr, and whether a
/// theorem check failed.
#[derive(Debug, Default)]
pub struct Output {
    pub text: String,
    pub warnings: Vec<String>,
    pub failed: bool,
}

struct Session {
    cfg: RunConfig,
    rs: RootSystem,
    warnings: Vec<String>,
}

impl Session {
    fn new(cfg: &RunConfig) -> CliResult<Self> {
        if cfg.system.is_empty() {
            return Err(CliError::Usage("no root system given (e.g. A2, B3)".into()));
        }
        cfg.validate()?;
        let rs = RootSystem::parse(&cfg.system)?;
        if rs.series().is_some_and(|s| s.is_exceptional()) && !cfg.exceptional {
            return Err(CliError::Usage(format!("{} is exceptional; pass --exceptional to enumerate its Weyl group", rs)));
        }
        Ok(Session { cfg: cfg.clone(), rs, warnings: Vec::new() })
    }

    fn ring(&self) -> CliResult<QuantumRing> {
        Ok(QuantumRing::new(&self.rs, self.cfg.max_weyl)?)
    }

    fn parabolic(&self) -> Vec<usize> {
        let mut v: Vec<usize> = match &self.cfg.order {
            Some(o) if self.cfg.parabolic.is_empty() => o.clone(),
            _ => self.cfg.parabolic.clone(),
        };
        v.sort_unstable();
        v.dedup();
        v.into_iter().map(|i| i - 1).collect()
    }

    fn proper_parabolic(&self) -> CliResult<Vec<usize>> {
        let dp = self.parabolic();
        if dp.is_empty() || dp.len() >= self.rs.rank() {
            return Err(CliError::Usage("--parabolic must be a nonempty proper subset of the simple roots".into()));
        }
        Ok(dp)
    }

    /// Parse a word, reducing it with a warning when needed.
    fn elem(&mut self, what: &str, s: &str) -> CliResult<WeylElt> {
        let word = parse_word(s)?;
        let (w, reduced) = elem_from_word(&self.rs, &word)?;
        if !reduced {
            self.warnings.push(format!(
                "warning: --{what} {s} is not a reduced word; using {}",
                if w.is_identity() { "the identity".to_string() } else { word_string(&word_of(&self.rs, &w)) }
            ));
        }
        Ok(w)
    }

    fn grader(&self) -> CliResult<Gr> {
        let dp = self.proper_parabolic()?;
        if let Some(o) = &self.cfg.order {
            let o: Vec<usize> = o.iter().map(|i| i - 1).collect();
            return Ok(Gr::Connected(Grader::new(&self.rs, &OrderedParabolic::new(&self.rs, &o)?)?));
        }
        if self.rs.is_connected(&dp) {
            Ok(Gr::Connected(Grader::new(&self.rs, &canonical_order(&self.rs, &dp)?)?))
        } else {
            Ok(Gr::Reducible(ReducibleGrader::canonical(&self.rs, &dp)?))
        }
    }

    fn finish(self, text: String) -> Output {
        Output { text, warnings: self.warnings, failed: false }
    }
}

enum Gr {
    Connected(Grader),
    Reducible(ReducibleGrader),
}

impl Gr {
    fn gr(&self, w: &WeylElt, l: &Coroot) -> qhgr::Result<Grading> {
        match self {
            Gr::Connected(g) => g.gr(w, l),
            Gr::Reducible(g) => g.gr(w, l),
        }
    }

    fn dim(&self) -> usize {
        match self {
            Gr::Connected(g) => g.dim(),
            Gr::Reducible(g) => g.dim(),
        }
    }

    fn order(&self) -> Vec<usize> {
        match self {
            Gr::Connected(g) => g.ordered_parabolic().order().iter().map(|i| i + 1).collect(),
            Gr::Reducible(_) => Vec::new(),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn render_class(s: &Session, c: &IClass) -> String {
    match s.cfg.format {
        Format::Markdown => class_string(&s.rs, c) + "\n",
        Format::Json => to_json(&class_json(&s.rs, c)),
        Format::Csv => class_csv(&s.rs, c),
    }
}

#[derive(Serialize)]
struct ProductJson {
    system: String,
    u: Vec<usize>,
    v: Vec<usize>,
    product: Vec<JsonTerm>,
    text: String,
}

/// `sigma^u * sigma^v` in QH^*(G/B).
pub fn qprod(cfg: &RunConfig, u: &str, v: &str) -> CliResult<Output> {
    let mut s = Session::new(cfg)?;
    let (u, v) = (s.elem("u", u)?, s.elem("v", v)?);
    let ring = s.ring()?;
    let p = ring.quantum_product(&u, &v)?;
    let text = match cfg.format {
        Format::Json => to_json(&ProductJson {
            system: s.rs.name().into(),
            u: word_of(&s.rs, &u),
            v: word_of(&s.rs, &v),
            product: class_json(&s.rs, &p),
            text: class_string(&s.rs, &p),
        }),
        _ => render_class(&s, &p),
    };
    Ok(s.finish(text))
}

/// `lo..hi` per coordinate, comma separated.
pub fn parse_box(text: &str, dim: usize) -> CliResult<Vec<(i32, i32)>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != dim {
        return Err(CliError::Usage(format!("--box needs {dim} ranges lo..hi, got '{text}'")));
    }
    parts
        .iter()
        .map(|p| {
            let (a, b) = p.split_once("..").ok_or_else(|| CliError::Usage(format!("bad range '{p}' (expected lo..hi)")))?;
            let a: i32 = a.trim().parse().map_err(|_| CliError::Usage(format!("bad range '{p}'")))?;
            let b: i32 = b.trim().parse().map_err(|_| CliError::Usage(format!("bad range '{p}'")))?;
            Ok((a, b))
        })
        .collect()
}

/// Default window: `-2..4` on every coordinate but the last, `0..6` there.
pub fn default_box(dim: usize) -> Vec<(i32, i32)> {
    let mut b = vec![(-2, 4); dim];
    if let Some(l) = b.last_mut() {
        *l = (0, 6);
    }
    b
}

const MAX_CELLS: i64 = 20_000;
const MAX_ENUMERATION: usize = 5_000_000;

/// All `lambda >= 0` with `sum lambda <= t`.
fn q_degrees(n: usize, t: i32) -> Vec<Coroot> {
    let mut out = vec![Coroot::zero(n)];
    for i in 0..n {
        let mut next = Vec::new();
        for c in out {
            let used: i32 = c.coeffs().iter().sum();
            for a in 0..=(t - used) {
                let mut d = c;
                d.0[i] = a;
                next.push(d);
            }
        }
        out = next;
    }
    out
}

#[derive(Serialize)]
struct CellJson {
    gr: Vec<i32>,
    terms: Vec<String>,
}

#[derive(Serialize)]
struct TableJson {
    system: String,
    parabolic: Vec<usize>,
    order: Vec<usize>,
    #[serde(rename = "box")]
    window: Vec<(i32, i32)>,
    cells: Vec<CellJson>,
}

/// Every basis element `q_lambda sigma^w` whose grading lies in the box.
pub fn grading_table(cfg: &RunConfig, window_arg: Option<&str>) -> CliResult<Output> {
    let s = Session::new(cfg)?;
    let g = s.grader()?;
    let dim = g.dim();
    let window = match window_arg {
        Some(b) => parse_box(b, dim)?,
        None => default_box(dim),
    };
    let cells: i64 = window.iter().map(|&(a, b)| (b - a + 1).max(0) as i64).product();
    if cells > MAX_CELLS {
        return Err(CliError::Usage(format!("box has {cells} cells; the limit is {MAX_CELLS}")));
    }
    let mut found: BTreeMap<Vec<i32>, Vec<String>> = BTreeMap::new();
    if cells > 0 {
        // total degree l(w) + 2|lambda| is bounded by the sum of the upper ends
        let top: i32 = window.iter().map(|w| w.1).sum();
        let els = weyl::enumerate(&s.rs, &(0..s.rs.rank()).collect::<Vec<_>>(), cfg.max_weyl)?;
        let qs = if top >= 0 { q_degrees(s.rs.rank(), top / 2) } else { Vec::new() };
        if qs.len().saturating_mul(els.len()) > MAX_ENUMERATION {
            return Err(CliError::Usage(format!("box needs {} candidate elements; the limit is {MAX_ENUMERATION}", qs.len() * els.len())));
        }
        for q in &qs {
            for w in &els {
                let x = g.gr(w, q)?;
                if x.0.iter().zip(&window).all(|(c, &(a, b))| a <= *c && *c <= b) {
                    found.entry(x.0).or_default().push(term_string(&s.rs, w, q));
                }
            }
        }
    }
    let text = match cfg.format {
        Format::Json => to_json(&TableJson {
            system: s.rs.name().into(),
            parabolic: s.parabolic().iter().map(|i| i + 1).collect(),
            order: g.order(),
            window: window.clone(),
            cells: found.into_iter().map(|(gr, terms)| CellJson { gr, terms }).collect(),
        }),
        Format::Csv => {
            let mut out = String::from("gr,term\n");
            for (gr, terms) in &found {
                let g: Vec<String> = gr.iter().map(|x| x.to_string()).collect();
                for t in terms {
                    out.push_str(&format!("{},{t}\n", g.join(";")));
                }
            }
            out
        }
        Format::Markdown if dim == 2 => {
            let (ilo, ihi) = window[0];
            let (jlo, jhi) = window[1];
            let mut out = String::new();
            if ilo <= ihi && jlo <= jhi {
                out.push_str("| i \\ j |");
                for j in jlo..=jhi {
                    out.push_str(&format!(" {j} |"));
                }
                out.push_str("\n|---|");
                for _ in jlo..=jhi {
                    out.push_str("---|");
                }
                out.push('\n');
                for i in (ilo..=ihi).rev() {
                    out.push_str(&format!("| {i} |"));
                    for j in jlo..=jhi {
                        let cell = found.get(&vec![i, j]).map(|t| t.join(" / ")).unwrap_or_else(|| "0".into());
                        out.push_str(&format!(" {cell} |"));
                    }
                    out.push('\n');
                }
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| gr | element |\n|---|---|\n");
            for (gr, terms) in &found {
                out.push_str(&format!("| {} | {} |\n", Grading(gr.clone()), terms.join(" / ")));
            }
            out
        }
    };
    Ok(s.finish(text))
}

#[derive(Serialize)]
struct MultRow {
    u: Vec<usize>,
    v: Vec<usize>,
    product: Vec<JsonTerm>,
}

/// All products with both factors of length at most `max_len`.
pub fn mult_table(cfg: &RunConfig, max_len: Option<usize>) -> CliResult<Output> {
    let s = Session::new(cfg)?;
    let ring = s.ring()?;
    let rows = ring.multiplication_table(max_len.unwrap_or(usize::MAX))?;
    let text = match cfg.format {
        Format::Json => to_json(
            &rows
                .iter()
                .map(|(u, v, p)| MultRow { u: word_of(&s.rs, u), v: word_of(&s.rs, v), product: class_json(&s.rs, p) })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut out = String::from("u,v,product\n");
            for (u, v, p) in &rows {
                out.push_str(&format!("{},{},{}\n", word_string(&word_of(&s.rs, u)), word_string(&word_of(&s.rs, v)), class_string(&s.rs, p)));
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| u | v | u * v |\n|---|---|---|\n");
            for (u, v, p) in &rows {
                out.push_str(&format!("| {} | {} | {} |\n", word_string(&word_of(&s.rs, u)), word_string(&word_of(&s.rs, v)), class_string(&s.rs, p)));
            }
            out
        }
    };
    Ok(s.finish(text))
}

/// `2:1,3:2` (index:coefficient) or a full comma list of coefficients.
pub fn parse_degree(text: &str, n: usize) -> CliResult<Coroot> {
    let text = text.trim();
    let mut c = Coroot::zero(n);
    if text.is_empty() || text == "0" {
        return Ok(c);
    }
    let bad = || CliError::Usage(format!("bad degree '{text}' (use i:a,j:b or {n} comma separated coefficients)"));
    if text.contains(':') {
        for part in text.split(',') {
            let (i, a) = part.split_once(':').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let a: i32 = a.trim().parse().map_err(|_| bad())?;
            if i == 0 || i > n {
                return Err(CliError::Usage(format!("degree index {i} out of range 1..={n}")));
            }
            c.0[i - 1] += a;
        }
    } else {
        let v: Vec<i32> = text.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<CliResult<_>>()?;
        if v.len() != n {
            return Err(bad());
        }
        c = Coroot::from_slice(&v);
    }
    Ok(c)
}

#[derive(Serialize)]
struct PwJson {
    system: String,
    parabolic: Vec<usize>,
    lambda_p: Vec<i32>,
    lambda_b: Vec<i32>,
    parabolic_prime: Vec<usize>,
    omega_word: Vec<usize>,
}

/// The Peterson-Woodward lift of a degree of `G/P`.
pub fn pw(cfg: &RunConfig, degree: &str) -> CliResult<Output> {
    let s = Session::new(cfg)?;
    let dp = s.proper_parabolic()?;
    let lam = parse_degree(degree, s.rs.rank())?;
    let lam = pwlift::normalize_lambda_p(&dp, &lam);
    let lift = pwlift::pw_lift(&s.rs, &dp, &lam)?;
    let j = PwJson {
        system: s.rs.name().into(),
        parabolic: dp.iter().map(|i| i + 1).collect(),
        lambda_p: lam.coeffs().to_vec(),
        lambda_b: lift.lambda_b.coeffs().to_vec(),
        parabolic_prime: lift.delta_p_prime.iter().map(|i| i + 1).collect(),
        omega_word: word_of(&s.rs, &lift.omega_factor),
    };
    let qb = term_string(&s.rs, &WeylElt::identity(s.rs.rank()), &lift.lambda_b);
    let text = match cfg.format {
        Format::Json => to_json(&j),
        Format::Csv => format!(
            "lambda_p,lambda_b,parabolic_prime,omega_word\n{},{},{},{}\n",
            join_i(&j.lambda_p),
            join_i(&j.lambda_b),
            join_u(&j.parabolic_prime),
            join_u(&j.omega_word)
        ),
        Format::Markdown => format!(
            "lambda_B = {:?} ({qb})\nDelta_P' = {:?}\nomega_P omega_P' = {}\n",
            j.lambda_b,
            j.parabolic_prime,
            if j.omega_word.is_empty() { "1".into() } else { word_string(&j.omega_word) }
        ),
    };
    Ok(s.finish(text))
}

fn join_i(v: &[i32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

fn join_u(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

/// `sigma^u * sigma^v` in QH^*(G/P); `u`, `v` must be minimal coset representatives.
pub fn qhp(cfg: &RunConfig, u: &str, v: &str) -> CliResult<Output> {
    let mut s = Session::new(cfg)?;
    let dp = s.proper_parabolic()?;
    let (u, v) = (s.elem("u", u)?, s.elem("v", v)?);
    for (name, w) in [("u", &u), ("v", &v)] {
        if !weyl::is_min_rep(&s.rs, w, &dp) {
            return Err(CliError::Usage(format!("--{name} is not a minimal coset representative for the parabolic")));
        }
    }
    let ring = s.ring()?;
    let q = QhpRing::new(&ring, &dp)?;
    let p = q.product(&u, &v)?;
    let text = render_class(&s, &p);
    Ok(s.finish(text))
}

/// Run suites; the JSON report list goes to `out` (or stdout in JSON mode).
pub fn verify(cfg: &RunConfig, suites: &str, out: Option<&std::path::Path>) -> CliResult<Output> {
    let s = Session::new(cfg)?;
    let suites = Suite::parse_list(suites)?;
    let dp = s.proper_parabolic()?;
    let mut setup = Setup::new(s.rs.name(), &dp);
    setup.order = cfg.order.as_ref().map(|o| o.iter().map(|i| i - 1).collect());
    setup.max_weyl = cfg.max_weyl;
    setup.max_q = cfg.max_q;
    setup.seed = cfg.seed;
    setup.samples = cfg.samples;
    setup.allow_exceptional = cfg.exceptional;
    let reports: Vec<Report> = suites.iter().map(|&x| run_suite(&setup, x)).collect::<qhgr::Result<_>>()?;
    let failed = reports.iter().any(|r| !r.ok());
    let json = to_json(&reports);
    if let Some(path) = out {
        std::fs::write(path, &json).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = if cfg.format == Format::Json && out.is_none() {
        json
    } else {
        let mut t = String::from("| suite | regime | total | passes | vacuous | failures | ms |\n|---|---|---|---|---|---|---|\n");
        for r in &reports {
            let fails = if r.informational {
                format!("{} (informational)", r.total - r.passes)
            } else {
                r.failures.len().to_string()
            };
            t.push_str(&format!("| {} | {} | {} | {} | {} | {} | {} |\n", r.suite, r.regime, r.total, r.passes, r.vacuous, fails, r.elapsed_ms));
        }
        for r in reports.iter().filter(|r| !r.ok()) {
            for f in r.failures.iter().take(5) {
                t.push_str(&format!("FAIL {}: {} | lhs {} | rhs {}\n", r.suite, serde_json::to_string(&f.case).unwrap_or_default(), f.lhs, f.rhs));
            }
        }
        t
    };
    let mut o = s.finish(text);
    o.failed = failed;
    Ok(o)
}
