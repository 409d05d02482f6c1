//! Small fixed-capacity integer vectors used for roots, coroots and q-degrees.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Largest supported rank.
pub const MAX_RANK: usize = 8;

/// Integer vector of length `rank <= MAX_RANK`, stored inline so it is `Copy`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IVec {
    rank: u8,
    c: [i32; MAX_RANK],
}

impl IVec {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} above {MAX_RANK}");
        IVec { rank: rank as u8, c: [0; MAX_RANK] }
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.c[i] = 1;
        v
    }

    pub fn from_slice(s: &[i32]) -> Self {
        let mut v = Self::zero(s.len());
        v.c[..s.len()].copy_from_slice(s);
        v
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.c[..self.rank as usize]
    }

    pub fn to_vec(&self) -> Vec<i32> {
        self.as_slice().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.as_slice().iter().all(|&x| x == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.as_slice().iter().all(|&x| x >= 0)
    }

    pub fn is_nonpos(&self) -> bool {
        self.as_slice().iter().all(|&x| x <= 0)
    }

    pub fn sum(&self) -> i32 {
        self.as_slice().iter().sum()
    }

    /// Nonzero coordinates all of one sign.
    pub fn is_positive(&self) -> bool {
        self.is_nonneg() && !self.is_zero()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.as_slice().iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i)
    }
}

impl Index<usize> for IVec {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.as_slice()[i]
    }
}

impl IndexMut<usize> for IVec {
    fn index_mut(&mut self, i: usize) -> &mut i32 {
        let r = self.rank as usize;
        &mut self.c[..r][i]
    }
}

impl Add for IVec {
    type Output = IVec;
    fn add(mut self, o: IVec) -> IVec {
        debug_assert_eq!(self.rank, o.rank);
        for i in 0..self.rank as usize {
            self.c[i] += o.c[i];
        }
        self
    }
}

impl Sub for IVec {
    type Output = IVec;
    fn sub(mut self, o: IVec) -> IVec {
        debug_assert_eq!(self.rank, o.rank);
        for i in 0..self.rank as usize {
            self.c[i] -= o.c[i];
        }
        self
    }
}

impl Neg for IVec {
    type Output = IVec;
    fn neg(mut self) -> IVec {
        for i in 0..self.rank as usize {
            self.c[i] = -self.c[i];
        }
        self
    }
}

impl Mul<IVec> for i32 {
    type Output = IVec;
    fn mul(self, mut v: IVec) -> IVec {
        for i in 0..v.rank as usize {
            v.c[i] *= self;
        }
        v
    }
}

impl fmt::Debug for IVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_slice())
    }
}

impl fmt::Display for IVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.as_slice().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Root written in the basis of simple roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root(pub IVec);

/// Coroot lattice element written in the basis of simple coroots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Coroot(pub IVec);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        Root(IVec::unit(rank, i))
    }
    pub fn coeffs(&self) -> &[i32] {
        self.0.as_slice()
    }
    pub fn rank(&self) -> usize {
        self.0.rank()
    }
}

impl Coroot {
    pub fn zero(rank: usize) -> Self {
        Coroot(IVec::zero(rank))
    }
    pub fn simple(rank: usize, i: usize) -> Self {
        Coroot(IVec::unit(rank, i))
    }
    pub fn from_slice(s: &[i32]) -> Self {
        Coroot(IVec::from_slice(s))
    }
    pub fn coeffs(&self) -> &[i32] {
        self.0.as_slice()
    }
    pub fn rank(&self) -> usize {
        self.0.rank()
    }
}

impl Add for Coroot {
    type Output = Coroot;
    fn add(self, o: Coroot) -> Coroot {
        Coroot(self.0 + o.0)
    }
}

impl Sub for Coroot {
    type Output = Coroot;
    fn sub(self, o: Coroot) -> Coroot {
        Coroot(self.0 - o.0)
    }
}

impl Add for Root {
    type Output = Root;
    fn add(self, o: Root) -> Root {
        Root(self.0 + o.0)
    }
}
