//! Smith normal form over the integers and cokernels of integer matrices.
//!
//! `smith_normal_form` returns unimodular `U`, `V` and a diagonal `S` with
//! `A = U * S * V`. The invariant factors on the diagonal are non-negative,
//! each divides the next, and zeros come last. `minor_gcd_invariants` computes
//! the same list independently from determinantal divisors and exists to
//! cross-check the elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    /// `min(rows, cols)` diagonal entries of `s`.
    pub diag: Vec<BigInt>,
}

/// `Z^free_rank (+) Z/t_1 (+) ... (+) Z/t_r` with `1 < t_1 | t_2 | ... | t_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// Cokernel of `A`, viewed as the map `Z^cols -> Z^rows` on column vectors.
pub type CokernelResult = AbelianGroup;

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    // Invariant throughout: a == u * s * v.
    let steps = rows.min(cols);
    for t in 0..steps {
        let Some((pi, pj)) = smallest_nonzero(&s, t) else {
            break;
        };
        move_pivot(&mut s, &mut u, &mut v, t, pi, pj);
        loop {
            let mut dirty = false;

            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                row_add(&mut s, &mut u, i, t, &-q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                col_add(&mut s, &mut v, j, t, &-q);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }

            if !dirty {
                // Row and column are clear; enforce divisibility of the rest.
                let pivot = s[(t, t)].clone();
                let bad_row = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
                match bad_row {
                    Some(i) => row_add(&mut s, &mut u, t, i, &BigInt::one()),
                    None => break,
                }
            }

            // A remainder smaller than the pivot has appeared; pivot on it.
            let (pi, pj) = smallest_nonzero_cross(&s, t);
            move_pivot(&mut s, &mut u, &mut v, t, pi, pj);
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_col(t);
        }
    }

    let diag = (0..steps).map(|i| s[(i, i)].clone()).collect();
    SnfResult { u, s, v, diag }
}

/// Smallest nonzero |entry| in the block `[t.., t..]`, ties to the lowest row
/// and then the lowest column.
fn smallest_nonzero(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = s[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(b, _, _)| x < *b) {
                best = Some((x, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Like `smallest_nonzero`, restricted to row `t` and column `t`. The pivot
/// `(t, t)` itself is nonzero so this always finds something.
fn smallest_nonzero_cross(s: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (s[(t, t)].abs(), t, t);
    for i in t + 1..s.rows() {
        let x = s[(i, t)].abs();
        if !x.is_zero() && x < best.0 {
            best = (x, i, t);
        }
    }
    for j in t + 1..s.cols() {
        let x = s[(t, j)].abs();
        if !x.is_zero() && x < best.0 {
            best = (x, t, j);
        }
    }
    (best.1, best.2)
}

fn move_pivot(
    s: &mut IntMatrix,
    u: &mut IntMatrix,
    v: &mut IntMatrix,
    t: usize,
    i: usize,
    j: usize,
) {
    if i != t {
        s.swap_rows(i, t);
        u.swap_cols(i, t);
    }
    if j != t {
        s.swap_cols(j, t);
        v.swap_rows(j, t);
    }
}

/// `s.row[target] += c * s.row[src]`, compensated in `u`.
fn row_add(s: &mut IntMatrix, u: &mut IntMatrix, target: usize, src: usize, c: &BigInt) {
    s.add_row_multiple(target, src, c);
    u.add_col_multiple(src, target, &-c);
}

/// `s.col[target] += c * s.col[src]`, compensated in `v`.
fn col_add(s: &mut IntMatrix, v: &mut IntMatrix, target: usize, src: usize, c: &BigInt) {
    s.add_col_multiple(target, src, c);
    v.add_row_multiple(src, target, &-c);
}

pub fn cokernel(a: &IntMatrix) -> CokernelResult {
    let snf = smith_normal_form(a);
    group_from_invariants(a.rows(), &snf.diag)
}

pub(crate) fn group_from_invariants(rows: usize, diag: &[BigInt]) -> AbelianGroup {
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianGroup {
        free_rank: rows - nonzero,
        torsion: diag.iter().filter(|d| **d > BigInt::one()).cloned().collect(),
    }
}

/// Invariant factors from determinantal divisors: `D_k` is the gcd of all
/// `k x k` minors and `d_k = D_k / D_{k-1}`, with `d_k = 0` once `D_k` vanishes.
///
/// Only for matrices whose smaller dimension is at most 6.
pub fn minor_gcd_invariants(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = a.rows().min(a.cols());
    if n > 6 {
        return Err(Error::MinorLimit(n));
    }
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 1..=n {
        let mut g = BigInt::zero();
        for rows in combinations(a.rows(), k) {
            for cols in combinations(a.cols(), k) {
                g = g.gcd(&a.submatrix(&rows, &cols).determinant());
            }
        }
        if g.is_zero() {
            out.resize(n, BigInt::zero());
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
