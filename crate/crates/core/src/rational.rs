//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"4/3"`, `"-1/5"` or `"2"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::MalformedRational(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let numer: BigInt = n.parse().map_err(|_| bad())?;
    let denom: BigInt = d.parse().map_err(|_| bad())?;
    if denom.is_zero() || d.starts_with('-') || d.starts_with('+') {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Quadratic form `x^T g y`.
pub fn bilinear(g: &[Vec<Rational>], x: &[Rational], y: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                acc += xi * &g[i][j] * yj;
            }
        }
    }
    acc
}

pub fn vec_add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(c: &Rational, x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|a| c * a).collect()
}

pub fn ints_to_rationals(x: &[i64]) -> Vec<Rational> {
    x.iter().map(|&a| int(a)).collect()
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert_matrix(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Integers `n` with `a + n t` integral, as `n ≡ first (mod period)`.
///
/// Returns `None` when no such `n` exists. `t` must be nonzero.
pub fn integral_progression(a: &Rational, t: &Rational) -> Option<(i64, i64)> {
    debug_assert!(!t.is_zero());
    let l = a.denom().lcm(t.denom());
    let coeff = t.numer() * (&l / t.denom());
    let rhs = -(a.numer() * (&l / a.denom()));
    // coeff * n ≡ rhs (mod l)
    let g = coeff.gcd(&l);
    if !rhs.is_multiple_of(&g) {
        return None;
    }
    let m = &l / &g;
    let c = (&coeff / &g).mod_floor(&m);
    let r = (&rhs / &g).mod_floor(&m);
    let n0 = if m.is_one() {
        BigInt::zero()
    } else {
        let e = c.extended_gcd(&m);
        (e.x * r).mod_floor(&m)
    };
    Some((n0.to_i64()?, m.to_i64()?))
}

/// Smallest `n >= lower` with `n ≡ first (mod period)`.
pub fn first_at_least(first: i64, period: i64, lower: i64) -> i64 {
    lower + (first - lower).rem_euclid(period)
}

/// Number of `n` in `[lo, hi]` with `n ≡ first (mod period)`.
pub fn count_in_range(first: i64, period: i64, lo: i64, hi: i64) -> i64 {
    if hi < lo {
        return 0;
    }
    let start = first_at_least(first, period, lo);
    if start > hi {
        0
    } else {
        (hi - start) / period + 1
    }
}

pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
