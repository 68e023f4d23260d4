//! Smith normal form over the integers.
//!
//! The reduction runs on `i64` with checked arithmetic; any overflow
//! restarts the computation on arbitrary-precision integers, so results
//! are exact for every input. `D = U M V` with `U`, `V` unimodular and the
//! diagonal entries nonnegative, each dividing the next.

use super::{HomologyError, IntMat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Minimal integer interface for the elimination; `checked_*` lets the
/// `i64` instance report overflow where `BigInt` never fails.
trait SnfInt: Clone + Ord + Zero + One + Signed {
    fn from_i64(v: i64) -> Self;
    fn checked_add(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_div(&self, o: &Self) -> Option<Self>;
}

impl SnfInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        i64::checked_add(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i64::checked_sub(*self, *o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i64::checked_mul(*self, *o)
    }
    fn checked_div(&self, o: &Self) -> Option<Self> {
        i64::checked_div(*self, *o)
    }
}

impl SnfInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            None
        } else {
            Some(self / o)
        }
    }
}

struct Overflow;

struct State<T> {
    rows: usize,
    cols: usize,
    d: Vec<Vec<T>>,
    u: Vec<Vec<T>>,
    v: Vec<Vec<T>>,
}

impl<T: SnfInt> State<T> {
    fn new(m: &IntMat) -> Self {
        let (rows, cols) = (m.rows(), m.cols());
        let d = (0..rows)
            .map(|r| (0..cols).map(|c| T::from_i64(m.get(r, c))).collect())
            .collect();
        let ident = |n: usize| -> Vec<Vec<T>> {
            (0..n)
                .map(|r| (0..n).map(|c| if r == c { T::one() } else { T::zero() }).collect())
                .collect()
        };
        State { rows, cols, d, u: ident(rows), v: ident(cols) }
    }

    fn add_row(&mut self, src: usize, dst: usize, factor: &T) -> Result<(), Overflow> {
        for c in 0..self.cols {
            let t = self.d[src][c].checked_mul(factor).ok_or(Overflow)?;
            self.d[dst][c] = self.d[dst][c].checked_add(&t).ok_or(Overflow)?;
        }
        for c in 0..self.rows {
            let t = self.u[src][c].checked_mul(factor).ok_or(Overflow)?;
            self.u[dst][c] = self.u[dst][c].checked_add(&t).ok_or(Overflow)?;
        }
        Ok(())
    }

    fn add_col(&mut self, src: usize, dst: usize, factor: &T) -> Result<(), Overflow> {
        for r in 0..self.rows {
            let t = self.d[r][src].checked_mul(factor).ok_or(Overflow)?;
            self.d[r][dst] = self.d[r][dst].checked_add(&t).ok_or(Overflow)?;
        }
        for r in 0..self.cols {
            let t = self.v[r][src].checked_mul(factor).ok_or(Overflow)?;
            self.v[r][dst] = self.v[r][dst].checked_add(&t).ok_or(Overflow)?;
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap(a, b);
        self.u.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.d[r].swap(a, b);
        }
        for r in 0..self.cols {
            self.v[r].swap(a, b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            self.d[r][c] = -self.d[r][c].clone();
        }
        for c in 0..self.rows {
            self.u[r][c] = -self.u[r][c].clone();
        }
    }

    /// Smallest nonzero entry (by magnitude) of the trailing submatrix.
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in k..self.rows {
            for c in k..self.cols {
                if self.d[r][c].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((br, bc)) => self.d[r][c].abs() < self.d[br][bc].abs(),
                };
                if better {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    fn reduce(&mut self) -> Result<(), Overflow> {
        let steps = self.rows.min(self.cols);
        for k in 0..steps {
            loop {
                let Some((pr, pc)) = self.pivot(k) else {
                    return Ok(());
                };
                if pr != k {
                    self.swap_rows(k, pr);
                }
                if pc != k {
                    self.swap_cols(k, pc);
                }
                let mut dirty = false;
                for r in (k + 1)..self.rows {
                    if !self.d[r][k].is_zero() {
                        let q = self.d[r][k].checked_div(&self.d[k][k]).ok_or(Overflow)?;
                        if !q.is_zero() {
                            self.add_row(k, r, &(-q))?;
                        }
                        if !self.d[r][k].is_zero() {
                            dirty = true;
                        }
                    }
                }
                for c in (k + 1)..self.cols {
                    if !self.d[k][c].is_zero() {
                        let q = self.d[k][c].checked_div(&self.d[k][k]).ok_or(Overflow)?;
                        if !q.is_zero() {
                            self.add_col(k, c, &(-q))?;
                        }
                        if !self.d[k][c].is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue;
                }
                // divisibility: fold any non-multiple into row k and retry
                let mut fixed = true;
                'outer: for r in (k + 1)..self.rows {
                    for c in (k + 1)..self.cols {
                        let rem = self.d[r][c]
                            .checked_sub(
                                &self.d[r][c]
                                    .checked_div(&self.d[k][k])
                                    .ok_or(Overflow)?
                                    .checked_mul(&self.d[k][k])
                                    .ok_or(Overflow)?,
                            )
                            .ok_or(Overflow)?;
                        if !rem.is_zero() {
                            self.add_row(r, k, &T::one())?;
                            fixed = false;
                            break 'outer;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
            if self.d[k][k] < T::zero() {
                self.negate_row(k);
            }
        }
        Ok(())
    }
}

/// Smith normal form `D = U M V` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub d: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

impl Snf {
    /// Nonzero diagonal entries `d1 | d2 | ...`.
    pub fn invariant_factors(&self) -> Vec<i64> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.get(i, i))
            .filter(|&v| v != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn run<T: SnfInt>(m: &IntMat) -> Result<State<T>, Overflow> {
    let mut st = State::<T>::new(m);
    st.reduce()?;
    Ok(st)
}

fn to_intmat_i64(v: &[Vec<i64>], rows: usize, cols: usize) -> IntMat {
    IntMat::from_fn(rows, cols, |r, c| v[r][c])
}

fn to_intmat_big(v: &[Vec<BigInt>], rows: usize, cols: usize) -> Result<IntMat, HomologyError> {
    let mut data = Vec::with_capacity(rows * cols);
    for row in v {
        for x in row {
            let as64: i64 = x.try_into().map_err(|_| HomologyError::EntryOverflow)?;
            data.push(as64);
        }
    }
    Ok(IntMat::from_rows_vec(rows, cols, data))
}

pub fn smith_normal_form(m: &IntMat) -> Result<Snf, HomologyError> {
    match run::<i64>(m) {
        Ok(st) => Ok(Snf {
            d: to_intmat_i64(&st.d, st.rows, st.cols),
            u: to_intmat_i64(&st.u, st.rows, st.rows),
            v: to_intmat_i64(&st.v, st.cols, st.cols),
        }),
        Err(Overflow) => {
            let st = run::<BigInt>(m).map_err(|_| HomologyError::EntryOverflow)?;
            Ok(Snf {
                d: to_intmat_big(&st.d, st.rows, st.cols)?,
                u: to_intmat_big(&st.u, st.rows, st.rows)?,
                v: to_intmat_big(&st.v, st.cols, st.cols)?,
            })
        }
    }
}

/// The nonzero diagonal alone. The unimodular transforms can outgrow the
/// 64-bit range on inputs where the invariant factors themselves stay
/// small, so rank and torsion extraction go through this entry point.
pub fn invariant_factors_of(m: &IntMat) -> Result<Vec<i64>, HomologyError> {
    let diag_i64 = |d: &[Vec<i64>]| -> Vec<i64> {
        (0..m.rows().min(m.cols()))
            .map(|i| d[i][i])
            .filter(|&v| v != 0)
            .collect()
    };
    match run::<i64>(m) {
        Ok(st) => Ok(diag_i64(&st.d)),
        Err(Overflow) => {
            let st = run::<BigInt>(m).map_err(|_| HomologyError::EntryOverflow)?;
            (0..m.rows().min(m.cols()))
                .map(|i| &st.d[i][i])
                .filter(|v| !v.is_zero())
                .map(|v| v.try_into().map_err(|_| HomologyError::EntryOverflow))
                .collect()
        }
    }
}
