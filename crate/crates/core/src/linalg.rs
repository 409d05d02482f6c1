//! Exact Gaussian elimination over a field.

use crate::scalar::Field;

/// Solve the square system `a x = b`; `None` when `a` is singular.
pub fn solve<T: Field>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = x.clone() / p.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let d = f.clone() * m[col][c].clone();
                    m[r][c] = m[r][c].clone() - d;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Rank of a matrix given by rows.
pub fn rank<T: Field>(rows: &[Vec<T>]) -> usize {
    let mut basis = Echelon::new(rows.first().map_or(0, |r| r.len()));
    rows.iter().filter(|r| basis.insert((*r).clone()).is_some()).count()
}

/// Incremental row echelon basis that tracks, for every stored row, which
/// inserted rows it is a combination of.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    width: usize,
    /// (pivot column, reduced row, combination over accepted inputs)
    rows: Vec<(usize, Vec<T>, Vec<T>)>,
    accepted: usize,
}

impl<T: Field> Echelon<T> {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), accepted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a row; returns its index among accepted rows when it was
    /// independent of the ones before.
    pub fn insert(&mut self, mut row: Vec<T>) -> Option<usize> {
        assert_eq!(row.len(), self.width);
        let mut comb: Vec<T> = vec![T::zero(); self.accepted + 1];
        comb[self.accepted] = T::one();
        for (p, r, c) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let f = row[*p].clone();
            for k in 0..self.width {
                let d = f.clone() * r[k].clone();
                row[k] = row[k].clone() - d;
            }
            for k in 0..c.len() {
                let d = f.clone() * c[k].clone();
                comb[k] = comb[k].clone() - d;
            }
        }
        let p = row.iter().position(|x| !x.is_zero())?;
        let pv = row[p].clone();
        for x in row.iter_mut() {
            *x = x.clone() / pv.clone();
        }
        for x in comb.iter_mut() {
            *x = x.clone() / pv.clone();
        }
        // keep earlier rows reduced against the new pivot
        for (_, r, c) in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for k in 0..self.width {
                let d = f.clone() * row[k].clone();
                r[k] = r[k].clone() - d;
            }
            c.resize(comb.len(), T::zero());
            for k in 0..comb.len() {
                let d = f.clone() * comb[k].clone();
                c[k] = c[k].clone() - d;
            }
        }
        self.rows.push((p, row, comb));
        self.accepted += 1;
        Some(self.accepted - 1)
    }

    /// When the basis has full rank, express the unit vector `e_col` as a
    /// combination of accepted rows.
    pub fn unit_combination(&self, col: usize) -> Option<Vec<T>> {
        if self.rows.len() < self.width {
            return None;
        }
        let (_, _, c) = self.rows.iter().find(|(p, _, _)| *p == col)?;
        let mut c = c.clone();
        c.resize(self.accepted, T::zero());
        Some(c)
    }
}
