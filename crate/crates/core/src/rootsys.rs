//! Finite crystallographic root systems with Bourbaki numbering.
//!
//! Cartan convention: `cartan[i][j] = <alpha_j, alpha_i^vee>`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{Coroot, IVec, Root, MAX_RANK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, Series::E | Series::F)
    }
}

/// Check that (series, rank) names a finite type.
pub fn validate_type(series: Series, rank: usize) -> Result<()> {
    let ok = match series {
        Series::A => rank >= 1,
        Series::B | Series::C => rank >= 2,
        Series::D => rank >= 4,
        Series::E => (6..=8).contains(&rank),
        Series::F => rank == 4,
        Series::G => rank == 2,
    };
    if !ok {
        let need = match series {
            Series::A => "rank >= 1",
            Series::B | Series::C => "rank >= 2",
            Series::D => "rank >= 4",
            Series::E => "rank in 6..=8",
            Series::F => "rank = 4",
            Series::G => "rank = 2",
        };
        return Err(Error::InvalidSystem(format!("{}{rank}: type {} needs {need}", series.letter(), series.letter())));
    }
    if rank > MAX_RANK {
        return Err(Error::InvalidSystem(format!(
            "{}{rank}: rank above the cap of {MAX_RANK}",
            series.letter()
        )));
    }
    Ok(())
}

/// Bourbaki Cartan matrix, `m[i][j] = <alpha_j, alpha_i^vee>`.
pub fn cartan_matrix(series: Series, n: usize) -> Result<Vec<Vec<i32>>> {
    validate_type(series, n)?;
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match series {
        Series::A | Series::B | Series::C | Series::F | Series::G => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
        }
        Series::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        Series::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
        }
    }
    match series {
        // alpha_n short
        Series::B => m[n - 1][n - 2] = -2,
        // alpha_n long
        Series::C => m[n - 2][n - 1] = -2,
        // alpha_3, alpha_4 short
        Series::F => m[2][1] = -2,
        // alpha_1 short
        Series::G => m[0][1] = -3,
        _ => {}
    }
    Ok(m)
}

/// Number of positive roots of a finite type.
pub fn positive_root_count(series: Series, n: usize) -> usize {
    match series {
        Series::A => n * (n + 1) / 2,
        Series::B | Series::C => n * n,
        Series::D => n * (n - 1),
        Series::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Series::F => 24,
        Series::G => 6,
    }
}

/// Order of the Weyl group of a finite type.
pub fn weyl_order(series: Series, n: usize) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    match series {
        Series::A => fact(n + 1),
        Series::B | Series::C => (1u64 << n) * fact(n),
        Series::D => (1u64 << (n - 1)) * fact(n),
        Series::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Series::F => 1152,
        Series::G => 12,
    }
}

/// Highest root coefficients (Bourbaki plates).
pub fn highest_root(series: Series, n: usize) -> Vec<i32> {
    match series {
        Series::A => vec![1; n],
        Series::B => {
            let mut v = vec![2; n];
            v[0] = 1;
            v
        }
        Series::C => {
            let mut v = vec![2; n];
            v[n - 1] = 1;
            v
        }
        Series::D => {
            let mut v = vec![2; n];
            v[0] = 1;
            v[n - 2] = 1;
            v[n - 1] = 1;
            v
        }
        Series::E => match n {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        Series::F => vec![2, 3, 4, 2],
        Series::G => vec![3, 2],
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    name: String,
    series: Option<Series>,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    /// (alpha_i, alpha_i)/2 up to a common factor; short roots get 1.
    symmetrizer: Vec<i32>,
    positive_roots: Vec<Root>,
    positive_coroots: Vec<Coroot>,
    index: HashMap<Root, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl RootSystem {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(series, rank)?;
        let mut rs = Self::from_cartan(&cartan)?;
        rs.series = Some(series);
        rs.name = format!("{}{rank}", series.letter());
        if rs.positive_roots.len() != positive_root_count(series, rank) {
            return Err(Error::Internal(format!("{}: wrong number of positive roots", rs.name)));
        }
        Ok(rs)
    }

    /// Build from an arbitrary finite-type Cartan matrix (used for
    /// sub-root-systems spanned by a parabolic subset).
    pub fn from_cartan(cartan: &[Vec<i32>]) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || n > MAX_RANK {
            return Err(Error::InvalidSystem(format!("rank {n} outside 1..={MAX_RANK}")));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n || row[i] != 2 {
                return Err(Error::InvalidSystem("Cartan matrix must be square with 2 on the diagonal".into()));
            }
            for (j, &x) in row.iter().enumerate() {
                if i != j && !(-3..=0).contains(&x) {
                    return Err(Error::InvalidSystem(format!("off-diagonal entry {x} at ({i},{j})")));
                }
                if (x == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidSystem("Cartan matrix zero pattern not symmetric".into()));
                }
            }
        }
        let symmetrizer = symmetrize(cartan)?;
        let mut rs = RootSystem {
            name: format!("rank{n}"),
            series: None,
            rank: n,
            cartan: cartan.to_vec(),
            symmetrizer,
            positive_roots: Vec::new(),
            positive_coroots: Vec::new(),
            index: HashMap::new(),
        };
        rs.generate_roots()?;
        Ok(rs)
    }

    fn generate_roots(&mut self) -> Result<()> {
        let n = self.rank;
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut roots = Vec::new();
        while let Some(b) = queue.pop_front() {
            if seen.insert(b, ()).is_some() {
                continue;
            }
            roots.push(b);
            if roots.len() > 200 {
                return Err(Error::InvalidSystem("root closure does not terminate; not of finite type".into()));
            }
            for i in 0..n {
                let s = self.reflect_root(i, &b);
                if s.0.is_positive() && !seen.contains_key(&s) {
                    queue.push_back(s);
                }
            }
        }
        roots.sort_by_key(|r| (r.0.sum(), std::cmp::Reverse(*r)));
        self.index = roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
        self.positive_coroots = roots.iter().map(|r| self.symmetrizer_coroot(r)).collect::<Result<_>>()?;
        self.positive_roots = roots;
        Ok(())
    }

    pub fn parse(id: &str) -> Result<Self> {
        let (series, rank) = parse_id(id)?;
        Self::new(series, rank)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn series(&self) -> Option<Series> {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Coroots of the positive roots, in the same order.
    pub fn positive_coroots(&self) -> &[Coroot] {
        &self.positive_coroots
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&Root(-r.0))
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    pub fn simple_coroot(&self, i: usize) -> Coroot {
        Coroot::simple(self.rank, i)
    }

    /// `<beta, lambda>`.
    pub fn pairing(&self, beta: &Root, lambda: &Coroot) -> i32 {
        assert_eq!(beta.rank(), self.rank, "root of wrong rank");
        assert_eq!(lambda.rank(), self.rank, "coroot of wrong rank");
        let mut s = 0;
        for i in 0..self.rank {
            if lambda.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += lambda.0[i] * beta.0[j] * self.cartan[i][j];
            }
        }
        s
    }

    /// Checked version of [`pairing`](Self::pairing).
    pub fn try_pairing(&self, beta: &Root, lambda: &Coroot) -> Result<i32> {
        if beta.rank() != self.rank || lambda.rank() != self.rank {
            return Err(Error::InvalidInput(format!(
                "dimension mismatch: root of rank {}, coroot of rank {}, system of rank {}",
                beta.rank(),
                lambda.rank(),
                self.rank
            )));
        }
        Ok(self.pairing(beta, lambda))
    }

    /// `<chi_i, lambda>`: the i-th coefficient.
    pub fn fundamental_weight_pairing(&self, i: usize, lambda: &Coroot) -> Result<i32> {
        if i >= self.rank || lambda.rank() != self.rank {
            return Err(Error::InvalidInput(format!("index {} out of range 1..={}", i + 1, self.rank)));
        }
        Ok(lambda.0[i])
    }

    /// `<2 rho, lambda>`; every simple coroot pairs to 2.
    pub fn two_rho(&self, lambda: &Coroot) -> i32 {
        2 * lambda.0.sum()
    }

    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        let c: i32 = (0..self.rank).map(|j| beta.0[j] * self.cartan[i][j]).sum();
        let mut out = *beta;
        out.0[i] -= c;
        out
    }

    pub fn reflect_coroot(&self, i: usize, lambda: &Coroot) -> Coroot {
        let c = self.pairing(&self.simple_root(i), lambda);
        let mut out = *lambda;
        out.0[i] -= c;
        out
    }

    fn symmetrizer_coroot(&self, g: &Root) -> Result<Coroot> {
        let n = self.rank;
        let mut norm2 = 0;
        for i in 0..n {
            for j in 0..n {
                norm2 += g.0[i] * g.0[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        // norm2 = (g, g) with (alpha_i, alpha_i) = 2 d_i
        if norm2 <= 0 || norm2 % 2 != 0 {
            return Err(Error::Internal(format!("bad norm for {g:?}")));
        }
        let dg = norm2 / 2;
        let mut c = IVec::zero(n);
        for i in 0..n {
            let x = g.0[i] * self.symmetrizer[i];
            if x % dg != 0 {
                return Err(Error::Internal(format!("non-integral coroot for {g:?}")));
            }
            c[i] = x / dg;
        }
        Ok(Coroot(c))
    }

    /// `gamma^vee` for any root (positive or negative).
    pub fn coroot_of(&self, g: &Root) -> Result<Coroot> {
        if g.rank() != self.rank {
            return Err(Error::InvalidInput("root of wrong rank".into()));
        }
        if let Some(k) = self.root_index(g) {
            return Ok(self.positive_coroots[k]);
        }
        if let Some(k) = self.root_index(&Root(-g.0)) {
            return Ok(Coroot(-self.positive_coroots[k].0));
        }
        Err(Error::InvalidInput(format!("{} is not a root of {}", g.0, self.name)))
    }

    pub fn highest_root(&self) -> Root {
        *self.positive_roots.last().expect("nonempty")
    }

    /// Cartan submatrix on the given indices (in the given order).
    pub fn sub_cartan(&self, idx: &[usize]) -> Vec<Vec<i32>> {
        idx.iter().map(|&i| idx.iter().map(|&j| self.cartan[i][j]).collect()).collect()
    }

    /// The root system spanned by a subset of simple roots.
    pub fn subsystem(&self, idx: &[usize]) -> Result<RootSystem> {
        let mut rs = RootSystem::from_cartan(&self.sub_cartan(idx))?;
        let labels: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
        rs.name = format!("{}[{}]", self.name, labels.join(","));
        Ok(rs)
    }

    /// Whether the Dynkin diagram on `idx` is connected.
    pub fn is_connected(&self, idx: &[usize]) -> bool {
        if idx.is_empty() {
            return false;
        }
        let mut seen = vec![idx[0]];
        let mut k = 0;
        while k < seen.len() {
            let a = seen[k];
            for &b in idx {
                if !seen.contains(&b) && self.cartan[a][b] != 0 {
                    seen.push(b);
                }
            }
            k += 1;
        }
        seen.len() == idx.len()
    }

    /// Connected components of the Dynkin diagram on `idx`, each sorted,
    /// ordered by smallest index.
    pub fn components(&self, idx: &[usize]) -> Vec<Vec<usize>> {
        let mut left: Vec<usize> = idx.to_vec();
        left.sort_unstable();
        let mut out = Vec::new();
        while let Some(&start) = left.first() {
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let a = comp[k];
                for &b in &left {
                    if !comp.contains(&b) && self.cartan[a][b] != 0 {
                        comp.push(b);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            left.retain(|x| !comp.contains(x));
            out.push(comp);
        }
        out
    }

    /// Whether `idx` spans a connected simply-laced chain (type A).
    pub fn is_a_type(&self, idx: &[usize]) -> bool {
        if !self.is_connected(idx) {
            return false;
        }
        for &a in idx {
            let mut deg = 0;
            for &b in idx {
                if a != b && self.cartan[a][b] != 0 {
                    if self.cartan[a][b] != -1 || self.cartan[b][a] != -1 {
                        return false;
                    }
                    deg += 1;
                }
            }
            if deg > 2 {
                return false;
            }
        }
        true
    }

    /// Dynkin neighbours of `i` inside `idx`.
    pub fn neighbours(&self, i: usize, idx: &[usize]) -> Vec<usize> {
        idx.iter().copied().filter(|&j| j != i && self.cartan[i][j] != 0).collect()
    }

    /// Positive roots supported on `idx`.
    pub fn positive_roots_in(&self, idx: &[usize]) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&k| self.positive_roots[k].0.support().all(|i| idx.contains(&i)))
            .collect()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn symmetrize(cartan: &[Vec<i32>]) -> Result<Vec<i32>> {
    // d_i C[i][j] = d_j C[j][i]; propagate as fractions num/den then clear
    let n = cartan.len();
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (p, q) = d[i].unwrap();
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let (np, nq) = (p * cartan[i][j] as i64, q * cartan[j][i] as i64);
                let g = num_integer::gcd(np, nq);
                let val = (np / g * nq.signum(), (nq / g).abs());
                match d[j] {
                    None => {
                        d[j] = Some(val);
                        stack.push(j);
                    }
                    Some(old) => {
                        if old.0 * val.1 != old.1 * val.0 {
                            return Err(Error::InvalidSystem("Cartan matrix is not symmetrizable".into()));
                        }
                    }
                }
            }
        }
    }
    let den = d.iter().map(|x| x.unwrap().1).fold(1, num_integer::lcm);
    let mut out: Vec<i64> = d.iter().map(|x| x.unwrap().0 * den / x.unwrap().1).collect();
    let g = out.iter().copied().fold(0, num_integer::gcd);
    for x in out.iter_mut() {
        *x /= g;
    }
    Ok(out.into_iter().map(|x| x as i32).collect())
}

/// Parse a system id like `B3`.
pub fn parse_id(id: &str) -> Result<(Series, usize)> {
    let id = id.trim();
    let mut chars = id.chars();
    let letter = chars.next().ok_or_else(|| Error::InvalidSystem("empty system id".into()))?;
    let series = match letter.to_ascii_uppercase() {
        'A' => Series::A,
        'B' => Series::B,
        'C' => Series::C,
        'D' => Series::D,
        'E' => Series::E,
        'F' => Series::F,
        'G' => Series::G,
        _ => return Err(Error::InvalidSystem(format!("unknown series '{letter}' in '{id}'"))),
    };
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::InvalidSystem(format!("bad rank in '{id}'")))?;
    validate_type(series, rank)?;
    Ok((series, rank))
}

impl FromStr for RootSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RootSystem::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(v: &[i32]) -> Root {
        Root(IVec::from_slice(v))
    }

    #[test]
    fn a2_roots_and_pairings() {
        let rs = RootSystem::parse("A2").unwrap();
        assert_eq!(rs.positive_roots(), &[root(&[1, 0]), root(&[0, 1]), root(&[1, 1])]);
        assert_eq!(rs.pairing(&root(&[1, 0]), &Coroot::simple(2, 1)), -1);
        let g = root(&[1, 1]);
        let gv = rs.coroot_of(&g).unwrap();
        assert_eq!(gv, Coroot::from_slice(&[1, 1]));
        assert_eq!(rs.two_rho(&gv), 4);
        assert_eq!(rs.fundamental_weight_pairing(0, &gv).unwrap(), 1);
        assert_eq!(rs.fundamental_weight_pairing(1, &Coroot::simple(2, 0)).unwrap(), 0);
    }

    #[test]
    fn reference_counts() {
        for (s, n) in [
            (Series::A, 1),
            (Series::A, 5),
            (Series::B, 2),
            (Series::B, 4),
            (Series::C, 3),
            (Series::D, 4),
            (Series::D, 6),
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let rs = RootSystem::new(s, n).unwrap();
            assert_eq!(rs.positive_roots().len(), positive_root_count(s, n), "{rs}");
            assert_eq!(rs.highest_root().coeffs(), highest_root(s, n).as_slice(), "{rs}");
            assert_eq!(rs.cartan(), cartan_matrix(s, n).unwrap().as_slice());
            for (r, c) in rs.positive_roots().iter().zip(rs.positive_coroots()) {
                assert_eq!(rs.pairing(r, c), 2);
            }
        }
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(RootSystem::parse("D3").is_err());
        assert!(RootSystem::parse("E9").is_err());
        assert!(RootSystem::parse("G3").is_err());
        assert!(RootSystem::parse("A9").is_err());
        assert!(RootSystem::parse("X2").is_err());
        let msg = RootSystem::parse("F5").unwrap_err().to_string();
        assert!(msg.contains("rank = 4"), "{msg}");
    }

    #[test]
    fn non_simply_laced_cartan_entries() {
        let b3 = RootSystem::parse("B3").unwrap();
        // alpha_3 short: <alpha_2, alpha_3^vee> = -2
        assert_eq!(b3.cartan()[2][1], -2);
        assert_eq!(b3.cartan()[1][2], -1);
        let g2 = RootSystem::parse("G2").unwrap();
        assert_eq!(g2.cartan()[0][1], -3);
        assert_eq!(g2.symmetrizer(), &[1, 3]);
        assert_eq!(b3.symmetrizer(), &[2, 2, 1]);
    }

    #[test]
    fn subsystem_of_b3() {
        let b3 = RootSystem::parse("B3").unwrap();
        let sub = b3.subsystem(&[0, 1]).unwrap();
        assert_eq!(sub.cartan(), RootSystem::parse("A2").unwrap().cartan());
        assert!(b3.is_a_type(&[0, 1]));
        assert!(!b3.is_a_type(&[1, 2]));
        assert_eq!(b3.components(&[0, 2]), vec![vec![0], vec![2]]);
    }
}
