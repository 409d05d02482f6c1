//! Ordered parabolic subsets and the canonical order of a connected `Delta_P`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Series};

/// `Delta_P` with an order `(alpha_1, ..., alpha_r)`; prefixes give the chain
/// `Delta_1 c ... c Delta_r c Delta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedParabolic {
    order: Vec<usize>,
    sigma: usize,
    a_type: bool,
}

impl OrderedParabolic {
    /// Validate an explicit order (0-based simple indices).
    pub fn new(rs: &RootSystem, order: &[usize]) -> Result<Self> {
        let n = rs.rank();
        let r = order.len();
        if r == 0 || r >= n {
            return Err(Error::InvalidInput(format!("need 1 <= r < n, got r = {r}, n = {n}")));
        }
        if let Some(&i) = order.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidInput(format!("index {} out of range 1..={n}", i + 1)));
        }
        let mut s = order.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != r {
            return Err(Error::InvalidInput("repeated index in order".into()));
        }
        if !rs.is_connected(order) {
            return Err(Error::InvalidInput(
                "parabolic subset is disconnected; use the reducible grading".into(),
            ));
        }
        let a_type = rs.is_a_type(order);
        let sigma = if a_type { r } else { r - 1 };
        for j in 1..=sigma {
            let pre = &order[..j];
            if !rs.is_a_type(pre) {
                return Err(Error::InvalidInput(format!("prefix of length {j} is not a connected A-type chain")));
            }
            if rs.neighbours(order[j - 1], pre).len() > 1 {
                return Err(Error::InvalidInput(format!(
                    "alpha_{} is not an end node of its prefix",
                    order[j - 1] + 1
                )));
            }
        }
        Ok(OrderedParabolic { order: order.to_vec(), sigma, a_type })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn r(&self) -> usize {
        self.order.len()
    }

    /// `sigma = r` for A-type `Delta_P`, else `r - 1`.
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn is_a_type(&self) -> bool {
        self.a_type
    }

    /// `Delta_j` (first `j` roots).
    pub fn prefix(&self, j: usize) -> &[usize] {
        &self.order[..j]
    }

    /// Sorted `Delta_P`.
    pub fn delta_p(&self) -> Vec<usize> {
        let mut s = self.order.clone();
        s.sort_unstable();
        s
    }

    /// Position (0-based) of a simple index in the order.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.order.iter().position(|&x| x == i)
    }
}

impl fmt::Display for OrderedParabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.order.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

type Cond = fn(usize, usize, usize) -> bool;

/// A labeled diagram: `beta[k]` is the Bourbaki index of `beta_{k+1}`.
struct Case {
    name: &'static str,
    labelings: Vec<Vec<Option<usize>>>,
    /// condition on (kappa, r, n)
    cond: Cond,
}

fn perms3(a: [usize; 3]) -> Vec<[usize; 3]> {
    let [x, y, z] = a;
    vec![[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]
}

fn e8_labeling(n: usize, one_based: [usize; 8]) -> Vec<Option<usize>> {
    one_based.iter().map(|&a| if a <= n { Some(a - 1) } else { None }).collect()
}

fn cases(series: Series, n: usize) -> Vec<Case> {
    let id: Vec<Option<usize>> = (0..n).map(Some).collect();
    let rev: Vec<Option<usize>> = (0..n).rev().map(Some).collect();
    match series {
        Series::A => vec![Case { name: "C1", labelings: vec![id, rev], cond: |k, _, n| k < n }],
        Series::B | Series::C => vec![Case { name: "C1", labelings: vec![id], cond: |k, _, n| k < n }],
        Series::D => {
            let mut c2 = Vec::new();
            let mut c3 = Vec::new();
            if n == 4 {
                for [a, b, c] in perms3([0, 2, 3]) {
                    c2.push(vec![Some(a), Some(1), Some(b), Some(c)]);
                    c3.push(vec![Some(a), Some(1), Some(b), Some(c)]);
                }
            } else {
                let mut l = id.clone();
                c2.push(l.clone());
                l.swap(n - 2, n - 1);
                c2.push(l);
                for (x, y) in [(n - 2, n - 1), (n - 1, n - 2)] {
                    let mut l = vec![Some(x), Some(n - 3), Some(y)];
                    l.extend((4..=n).map(|k| Some(n - k)));
                    c3.push(l);
                }
            }
            vec![
                Case {
                    name: "C2",
                    labelings: c2,
                    cond: |k, r, n| k + 2 <= n || (r >= 3 && k + 1 == n),
                },
                Case { name: "C3", labelings: c3, cond: |k, r, _| k == r && r <= 3 },
            ]
        }
        Series::E => vec![
            Case {
                name: "C4",
                labelings: vec![e8_labeling(n, [8, 7, 6, 5, 4, 3, 1, 2])],
                cond: |k, r, _| k <= 5 || (r >= 3 && k == 6) || (r >= 5 && k == 7),
            },
            Case {
                name: "C5",
                labelings: vec![e8_labeling(n, [1, 3, 4, 2, 5, 6, 7, 8])],
                cond: |k, r, _| k <= 3 || (r >= 3 && k == 4),
            },
            Case {
                name: "C6",
                labelings: vec![e8_labeling(n, [1, 3, 4, 5, 6, 7, 8, 2])],
                cond: |k, r, _| k == 4 && r == 4,
            },
            Case {
                name: "C7",
                labelings: vec![e8_labeling(n, [8, 7, 6, 5, 4, 2, 3, 1])],
                cond: |k, r, _| k == 6 && r >= 3,
            },
            Case {
                name: "C8",
                labelings: vec![e8_labeling(n, [2, 4, 5, 6, 7, 8, 3, 1])],
                cond: |k, _, _| k == 2,
            },
        ],
        Series::F => vec![
            Case { name: "C9", labelings: vec![id], cond: |k, _, _| k == 2 },
            Case { name: "C10", labelings: vec![rev], cond: |k, _, _| k == 2 },
        ],
        Series::G => vec![],
    }
}

fn same_set(a: &[usize], b: &[usize]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

/// Orders `(beta_{o+1}, ..., beta_{o+s})` (plus `beta_{o+s+1}` when `extra`)
/// covering `delta_p`, with the case name, for every case whose condition
/// holds with `kappa = o + s` and `r = s`.
fn matches(series: Series, n: usize, delta_p: &[usize], s: usize, extra: bool) -> Vec<(&'static str, Vec<usize>)> {
    let mut out = Vec::new();
    for case in cases(series, n) {
        for lab in &case.labelings {
            let need = s + usize::from(extra);
            for o in 0..lab.len() {
                if o + need > lab.len() {
                    break;
                }
                let seq: Option<Vec<usize>> = lab[o..o + need].iter().copied().collect();
                let Some(seq) = seq else { continue };
                if same_set(&seq, delta_p) && (case.cond)(o + s, s, n) {
                    out.push((case.name, seq));
                }
            }
        }
    }
    out
}

/// Name of the matching table case for an A-type `delta_p`, with its order.
pub fn canonical_case(rs: &RootSystem, delta_p: &[usize]) -> Result<(&'static str, OrderedParabolic)> {
    let n = rs.rank();
    let r = delta_p.len();
    if r == 0 || r >= n {
        return Err(Error::InvalidInput(format!("need a proper nonempty parabolic subset, got r = {r}")));
    }
    if !rs.is_connected(delta_p) {
        return Err(Error::InvalidInput("parabolic subset is disconnected".into()));
    }
    if r == 1 {
        return Ok(("r=1", OrderedParabolic::new(rs, delta_p)?));
    }
    let series = rs
        .series()
        .ok_or_else(|| Error::InvalidInput("canonical orders need a named root system".into()))?;
    let found = if rs.is_a_type(delta_p) {
        matches(series, n, delta_p, r, false).into_iter().next()
    } else if r == 2 {
        match series {
            Series::B | Series::C => Some(("r=2", vec![n - 2, n - 1])),
            Series::F => Some(("r=2", vec![2, 1])),
            _ => None,
        }
        .filter(|(_, o)| same_set(o, delta_p))
    } else {
        let m = matches(series, n, delta_p, r - 1, true);
        m.iter().find(|(c, _)| *c == "C7").or(m.first()).cloned()
    };
    let (name, order) = found.ok_or_else(|| {
        Error::Internal(format!("no canonical order for {:?} in {}", delta_p.iter().map(|i| i + 1).collect::<Vec<_>>(), rs))
    })?;
    Ok((name, OrderedParabolic::new(rs, &order)?))
}

/// The canonical order of a connected proper `delta_p`.
pub fn canonical_order(rs: &RootSystem, delta_p: &[usize]) -> Result<OrderedParabolic> {
    canonical_case(rs, delta_p).map(|(_, op)| op)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(id: &str, dp: &[usize]) -> Vec<usize> {
        canonical_order(&RootSystem::parse(id).unwrap(), dp).unwrap().order().to_vec()
    }

    #[test]
    fn small_cases() {
        assert_eq!(ord("A3", &[0, 1]), vec![0, 1]);
        assert_eq!(ord("A3", &[1, 2]), vec![2, 1]);
        assert_eq!(ord("A2", &[1]), vec![1]);
        assert_eq!(ord("B3", &[1, 2]), vec![1, 2]);
        assert_eq!(ord("B3", &[0, 1]), vec![0, 1]);
        assert_eq!(ord("C4", &[1, 2, 3]), vec![1, 2, 3]);
        assert_eq!(ord("D5", &[1, 2, 3, 4]), vec![1, 2, 3, 4]);
        assert_eq!(ord("F4", &[1, 2]), vec![2, 1]);
        assert_eq!(ord("F4", &[0, 1, 2]), vec![0, 1, 2]);
        assert_eq!(ord("F4", &[1, 2, 3]), vec![3, 2, 1]);
        assert_eq!(ord("E8", &[0, 1, 2, 3, 4, 5, 6]), vec![6, 5, 4, 3, 2, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        let a3 = RootSystem::parse("A3").unwrap();
        assert!(canonical_order(&a3, &[0, 2]).is_err());
        assert!(canonical_order(&a3, &[]).is_err());
        assert!(canonical_order(&a3, &[0, 1, 2]).is_err());
        assert!(OrderedParabolic::new(&a3, &[1, 0, 2]).is_err());
        let a4 = RootSystem::parse("A4").unwrap();
        assert!(OrderedParabolic::new(&a4, &[0, 2, 1]).is_err());
        assert!(OrderedParabolic::new(&a4, &[1, 0, 2]).is_ok());
        assert!(OrderedParabolic::new(&a4, &[0, 1, 2]).is_ok());
    }

    #[test]
    fn every_connected_subset_has_an_order() {
        for id in ["A5", "B4", "C4", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2", "A8", "D8", "B8"] {
            let rs = RootSystem::parse(id).unwrap();
            let n = rs.rank();
            for mask in 1u32..(1 << n) - 1 {
                let dp: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                if !rs.is_connected(&dp) {
                    continue;
                }
                let op = canonical_order(&rs, &dp).unwrap_or_else(|e| panic!("{id} {dp:?}: {e}"));
                assert!(same_set(op.order(), &dp));
            }
        }
    }
}
