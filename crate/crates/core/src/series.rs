//! Truncated q-series `Σ_{n=0}^{N} a_n q^{h₀ + n·step}` with exact rational
//! offset, step and coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    offset: Rational,
    step: Rational,
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Series with `coeffs[n]` at `q^{offset + n·step}`; `step` must be positive.
    pub fn new(offset: Rational, step: Rational, coeffs: Vec<Rational>) -> Self {
        assert!(step.is_positive(), "q-series step must be positive");
        QSeries { offset, step, coeffs }
    }

    pub fn from_integers(offset: Rational, step: Rational, coeffs: &[i64]) -> Self {
        Self::new(offset, step, coeffs.iter().map(|&c| int(c)).collect())
    }

    /// The zero series known through `N = len - 1` steps.
    pub fn zeros(offset: Rational, step: Rational, len: usize) -> Self {
        Self::new(offset, step, vec![Rational::zero(); len])
    }

    /// `1 + O(q^{order+1})`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zeros(Rational::zero(), Rational::one(), order + 1);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn step(&self) -> &Rational {
        &self.step
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of retained coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the last retained term relative to the offset.
    pub fn span(&self) -> Rational {
        &self.step * int(self.coeffs.len() as i64 - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Self::new(self.offset.clone(), self.step.clone(), coeffs)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        Self::new(&self.offset + e, self.step.clone(), self.coeffs.clone())
    }

    /// Keeps the first `len` coefficients.
    pub fn truncate(&self, len: usize) -> Self {
        let mut s = self.clone();
        s.coeffs.truncate(len);
        s
    }

    /// Re-expresses the series on the finer step `new_step`, which must divide
    /// the current step.
    pub fn refine(&self, new_step: &Rational) -> Result<Self> {
        let ratio = &self.step / new_step;
        let k = ratio
            .is_integer()
            .then(|| ratio.to_integer().to_usize())
            .flatten()
            .filter(|&k| k > 0)
            .ok_or(Error::IncompatibleSeries)?;
        if self.coeffs.is_empty() {
            return Ok(Self::new(self.offset.clone(), new_step.clone(), Vec::new()));
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n * k] = c.clone();
        }
        Ok(Self::new(self.offset.clone(), new_step.clone(), coeffs))
    }

    /// Index of `q^{e}` on this series' lattice, if `e` lies on it.
    fn lattice_index(&self, e: &Rational) -> Option<i64> {
        let idx = (e - &self.offset) / &self.step;
        idx.is_integer().then(|| idx.to_integer().to_i64()).flatten()
    }

    /// Sum, exact through the smaller of the two retained ranges.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.step != other.step {
            return Err(Error::IncompatibleSeries);
        }
        let d = self.lattice_index(&other.offset).ok_or(Error::IncompatibleSeries)?;
        let (lo, hi, shift) = if d >= 0 {
            (self, other, d as usize)
        } else {
            (other, self, (-d) as usize)
        };
        let end = lo.coeffs.len().min(shift + hi.coeffs.len());
        let mut coeffs: Vec<Rational> = lo.coeffs[..end].to_vec();
        for (n, c) in hi.coeffs.iter().enumerate() {
            if n + shift < end {
                coeffs[n + shift] += c;
            }
        }
        Ok(Self::new(lo.offset.clone(), lo.step.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Product, exact through the smaller of the two retained ranges.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.step != other.step {
            return Err(Error::IncompatibleSeries);
        }
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::new(
            &self.offset + &other.offset,
            self.step.clone(),
            coeffs,
        ))
    }
}

/// `∏_{m ∈ parts} (1 − q^m)^{−1}` through `q^order`, as integers.
pub(crate) fn inverse_product(parts: impl IntoIterator<Item = usize>, order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for m in parts {
        if m == 0 || m > order {
            continue;
        }
        for n in m..=order {
            let prev = c[n - m].clone();
            c[n] += prev;
        }
    }
    c
}

/// `η(τ)^{−l} = q^{−l/24} ∏_{n≥1} (1 − q^n)^{−l}` through `q^{order}` above the offset.
pub fn eta_inverse_power(l: usize, order: usize) -> QSeries {
    let parts = (1..=order).flat_map(|m| std::iter::repeat_n(m, l));
    let coeffs = inverse_product(parts, order)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    QSeries::new(-int(l as i64) / int(24), Rational::one(), coeffs)
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, e: &Rational) -> fmt::Result {
    if e.is_one() {
        write!(f, "q")
    } else if e.is_integer() && e.is_positive() {
        write!(f, "q^{}", e.numer())
    } else {
        write!(f, "q^{{")?;
        write_rational(f, e)?;
        write!(f, "}}")
    }
}

/// `q^{1/24}(1 + q + 2q^3 + …)`; the zero series renders as `0`.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let wrap = !self.offset.is_zero();
        if wrap {
            write_power(f, &self.offset)?;
            write!(f, "(")?;
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = &self.step * int(n as i64);
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if e.is_zero() {
                write_rational(f, &mag)?;
                continue;
            }
            if !mag.is_one() {
                write_rational(f, &mag)?;
            }
            write_power(f, &e)?;
        }
        write!(f, " + …")?;
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}
