//! Elements of the monoid `N^k` and integer displacements in `Z^2`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index};
use std::str::FromStr;

/// A degree in `N^k`, ordered coordinate-wise.
///
/// `PartialOrd` is the product order, so incomparable degrees compare as `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn new(coords: Vec<u32>) -> Self {
        Degree(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Degree(vec![0; rank])
    }

    /// The all-ones degree `(1, ..., 1)`.
    pub fn ones(rank: usize) -> Self {
        Degree(vec![1; rank])
    }

    /// The generator `e_color`; colors are 1-based.
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[color - 1] = 1;
        Degree(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Sum of the coordinates: the number of edges in a path of this degree.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn max_coord(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn join(&self, other: &Degree) -> Degree {
        self.zip(other, u32::max)
    }

    pub fn meet(&self, other: &Degree) -> Degree {
        self.zip(other, u32::min)
    }

    /// `self - other`, or `None` unless `other <= self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        debug_assert_eq!(self.rank(), other.rank());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    /// Coordinate-wise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Degree) -> Degree {
        self.zip(other, u32::saturating_sub)
    }

    /// The colors of a normal-form path of this degree: `coords[0]` copies of 1,
    /// then `coords[1]` copies of 2, and so on.
    pub fn color_sequence(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c as usize))
            .collect()
    }

    /// Every degree `l` with `0 <= l <= self`, in lexicographic order.
    pub fn interval(&self) -> Vec<Degree> {
        let mut out = vec![Degree::zero(self.rank())];
        for (axis, &bound) in self.0.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|d| {
                    (0..=bound).map(move |x| {
                        let mut d = d.clone();
                        d.0[axis] = x;
                        d
                    })
                })
                .collect();
        }
        out.sort_by(Degree::lex_cmp);
        out
    }

    /// Lexicographic total order on coordinates, for deterministic sorting.
    pub fn lex_cmp(&self, other: &Degree) -> Ordering {
        self.0.cmp(&other.0)
    }

    fn zip(&self, other: &Degree, f: impl Fn(u32, u32) -> u32) -> Degree {
        debug_assert_eq!(self.rank(), other.rank());
        Degree(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect())
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.rank() != other.rank() {
            return None;
        }
        let le = self.0.iter().zip(&other.0).all(|(a, b)| a <= b);
        let ge = self.0.iter().zip(&other.0).all(|(a, b)| a >= b);
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl Add for &Degree {
    type Output = Degree;

    fn add(self, rhs: &Degree) -> Degree {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        &self + &rhs
    }
}

impl Index<usize> for Degree {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDegreeError(pub String);

impl fmt::Display for ParseDegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid degree {:?}: expected comma-separated non-negative integers", self.0)
    }
}

impl std::error::Error for ParseDegreeError {}

/// Parses `1,2`, `(1,2)` or `1 2`.
impl FromStr for Degree {
    type Err = ParseDegreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ParseDegreeError(s.to_string()))?;
        if coords.is_empty() {
            return Err(ParseDegreeError(s.to_string()));
        }
        Ok(Degree(coords))
    }
}

/// An element `m` of `Z^2`, written `m = m_plus - m_minus` with both parts in `N^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Displacement(pub i64, pub i64);

impl Displacement {
    pub fn is_zero(&self) -> bool {
        self.0 == 0 && self.1 == 0
    }

    pub fn sup_norm(&self) -> u64 {
        self.0.unsigned_abs().max(self.1.unsigned_abs())
    }

    pub fn positive_part(&self) -> Degree {
        Degree(vec![self.0.max(0) as u32, self.1.max(0) as u32])
    }

    pub fn negative_part(&self) -> Degree {
        Degree(vec![(-self.0).max(0) as u32, (-self.1).max(0) as u32])
    }

    /// `|m| = m_plus v m_minus`, the smallest shape that can hold two lattice
    /// points differing by `m`.
    pub fn magnitude(&self) -> Degree {
        self.positive_part().join(&self.negative_part())
    }

    /// `t - s` for degrees of rank 2.
    pub fn between(s: &Degree, t: &Degree) -> Displacement {
        Displacement(
            i64::from(t[0]) - i64::from(s[0]),
            i64::from(t[1]) - i64::from(s[1]),
        )
    }

    /// `base + self`, if it stays in `N^2`.
    pub fn offset(&self, base: &Degree) -> Option<Degree> {
        let x = i64::from(base[0]) + self.0;
        let y = i64::from(base[1]) + self.1;
        (x >= 0 && y >= 0).then(|| Degree(vec![x as u32, y as u32]))
    }

    /// All nonzero displacements with `||m||_inf <= bound`, ring by ring
    /// outward from the origin and lexicographically within each ring.
    pub fn window(bound: u32) -> Vec<Displacement> {
        let b = i64::from(bound);
        let mut out: Vec<Displacement> = (-b..=b)
            .flat_map(|x| (-b..=b).map(move |y| Displacement(x, y)))
            .filter(|m| !m.is_zero())
            .collect();
        out.sort_by_key(|m| (m.sup_norm(), m.0, m.1));
        out
    }
}

impl fmt::Display for Displacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}
