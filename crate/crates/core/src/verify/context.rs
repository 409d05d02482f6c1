use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::grading::{canonical_order, Grader, Grading, OrderedParabolic, ReducibleGrader};
use crate::lattice::Coroot;
use crate::pwlift::QhpRing;
use crate::qchev::QuantumRing;
use crate::rootsys::RootSystem;
use crate::weyl::{self, WeylElt};

/// Inputs of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Setup {
    pub system: String,
    /// 0-based parabolic indices
    pub parabolic: Vec<usize>,
    /// explicit 0-based order; canonical when absent
    pub order: Option<Vec<usize>>,
    pub max_weyl: usize,
    /// q-box `[0..max_q]` for lambda_P sweeps
    pub max_q: i32,
    /// grading box `[0..grading_box]^sigma`
    pub grading_box: i32,
    pub seed: u64,
    /// sampled cases for associativity and the sampled regime
    pub samples: usize,
    /// exhaustive over pairs when `|W|` is at most this
    pub exhaustive_limit: usize,
    pub allow_exceptional: bool,
}

impl Setup {
    pub fn new(system: &str, parabolic: &[usize]) -> Self {
        Setup {
            system: system.to_string(),
            parabolic: parabolic.to_vec(),
            order: None,
            max_weyl: weyl::DEFAULT_MAX_WEYL,
            max_q: 3,
            grading_box: 6,
            seed: 0,
            samples: 200,
            exhaustive_limit: 1200,
            allow_exceptional: false,
        }
    }
}

pub enum AnyGrader {
    Connected(Grader),
    Reducible(ReducibleGrader),
}

impl AnyGrader {
    pub fn gr(&self, w: &WeylElt, lambda: &Coroot) -> Result<Grading> {
        match self {
            AnyGrader::Connected(g) => g.gr(w, lambda),
            AnyGrader::Reducible(g) => g.gr(w, lambda),
        }
    }

    pub fn gr_weyl(&self, w: &WeylElt) -> Result<Grading> {
        match self {
            AnyGrader::Connected(g) => g.gr_weyl(w),
            AnyGrader::Reducible(g) => g.gr_weyl(w),
        }
    }

    pub fn gr_q(&self, i: usize) -> &Grading {
        match self {
            AnyGrader::Connected(g) => g.gr_q(i),
            AnyGrader::Reducible(g) => g.gr_q(i),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyGrader::Connected(g) => g.dim(),
            AnyGrader::Reducible(g) => g.dim(),
        }
    }
}

/// Freshly built modules for one run.
pub struct Context {
    pub setup: Setup,
    pub rs: RootSystem,
    pub ring: QuantumRing,
    pub grader: AnyGrader,
    pub delta_p: Vec<usize>,
    uniqueness: OnceLock<HashMap<Vec<i32>, usize>>,
    projective: OnceLock<Option<(usize, Vec<WeylElt>)>>,
}

impl Context {
    pub fn new(setup: &Setup) -> Result<Self> {
        let rs = RootSystem::parse(&setup.system)?;
        if rs.series().is_some_and(|s| s.is_exceptional()) && !setup.allow_exceptional {
            return Err(Error::InvalidInput(format!(
                "{} needs the exceptional flag: full Weyl group enumeration is large",
                rs
            )));
        }
        let ring = QuantumRing::new(&rs, setup.max_weyl)?;
        let mut delta_p = setup.parabolic.clone();
        delta_p.sort_unstable();
        if let Some(o) = &setup.order {
            let mut s = o.clone();
            s.sort_unstable();
            if !delta_p.is_empty() && s != delta_p {
                return Err(Error::InvalidInput("order does not list the parabolic subset".into()));
            }
            delta_p = s;
        }
        if delta_p.is_empty() || delta_p.len() >= rs.rank() {
            return Err(Error::InvalidInput("parabolic subset must be proper and nonempty".into()));
        }
        let grader = if let Some(o) = &setup.order {
            AnyGrader::Connected(Grader::new(&rs, &OrderedParabolic::new(&rs, o)?)?)
        } else if rs.is_connected(&delta_p) {
            AnyGrader::Connected(Grader::new(&rs, &canonical_order(&rs, &delta_p)?)?)
        } else {
            AnyGrader::Reducible(ReducibleGrader::canonical(&rs, &delta_p)?)
        };
        Ok(Context {
            setup: setup.clone(),
            rs,
            ring,
            grader,
            delta_p,
            uniqueness: OnceLock::new(),
            projective: OnceLock::new(),
        })
    }

    pub fn connected(&self) -> Result<&Grader> {
        match &self.grader {
            AnyGrader::Connected(g) => Ok(g),
            AnyGrader::Reducible(_) => Err(Error::InvalidInput("this check needs a connected parabolic".into())),
        }
    }

    /// 0-based order, empty when reducible.
    pub fn order(&self) -> Vec<usize> {
        match &self.grader {
            AnyGrader::Connected(g) => g.ordered_parabolic().order().to_vec(),
            AnyGrader::Reducible(_) => Vec::new(),
        }
    }

    pub fn elem(&self, word: &[usize]) -> Result<WeylElt> {
        Ok(crate::format::elem_from_word(&self.rs, word)?.0)
    }

    pub fn word(&self, w: &WeylElt) -> Vec<usize> {
        crate::format::word_of(&self.rs, w)
    }

    pub fn coroot(&self, v: &[i32]) -> Result<Coroot> {
        if v.len() != self.rs.rank() {
            return Err(Error::InvalidInput("coroot of wrong length".into()));
        }
        Ok(Coroot::from_slice(v))
    }

    pub fn qhp(&self) -> Result<QhpRing<'_>> {
        QhpRing::new(&self.ring, &self.delta_p)
    }

    pub fn min_reps(&self) -> Vec<WeylElt> {
        self.ring.elements().iter().copied().filter(|w| weyl::is_min_rep(&self.rs, w, &self.delta_p)).collect()
    }

    /// Non-parabolic indices.
    pub fn free(&self) -> Vec<usize> {
        (0..self.rs.rank()).filter(|i| !self.delta_p.contains(i)).collect()
    }

    /// Count of elements of `W_{P_sigma} x Q_sigma^vee` (coefficients in a
    /// symmetric box) per grading.
    pub fn uniqueness_table(&self) -> Result<&HashMap<Vec<i32>, usize>> {
        if let Some(t) = self.uniqueness.get() {
            return Ok(t);
        }
        let g = self.connected()?;
        let op = g.ordered_parabolic();
        let s = op.sigma();
        let pre = op.prefix(s);
        let mut k = 8i32;
        while k > 1 && ((2 * k + 1) as f64).powi(s as i32) > 200_000.0 {
            k -= 1;
        }
        let ws = weyl::enumerate(&self.rs, pre, self.setup.max_weyl)?;
        let mut table: HashMap<Vec<i32>, usize> = HashMap::new();
        let mut a = vec![-k; s];
        loop {
            let mut lam = Coroot::zero(self.rs.rank());
            for (i, &x) in a.iter().enumerate() {
                lam.0[pre[i]] = x;
            }
            for w in &ws {
                *table.entry(g.gr(w, &lam)?.0).or_default() += 1;
            }
            let mut i = 0;
            while i < s && a[i] == k {
                a[i] = -k;
                i += 1;
            }
            if i == s {
                break;
            }
            a[i] += 1;
        }
        Ok(self.uniqueness.get_or_init(|| table))
    }

    /// When `G/P` is a projective space `P^m`: `m` and the Schubert
    /// representatives by length.
    pub fn projective(&self) -> &Option<(usize, Vec<WeylElt>)> {
        self.projective.get_or_init(|| {
            let free = self.free();
            if free.len() != 1 {
                return None;
            }
            let mut reps = self.min_reps();
            reps.sort();
            let m = reps.len() - 1;
            if reps.iter().enumerate().any(|(k, w)| w.length() != k) {
                return None;
            }
            let qhp = self.qhp().ok()?;
            (qhp.q_degree(free[0]) == m as i32 + 1).then_some((m, reps))
        })
    }
}
