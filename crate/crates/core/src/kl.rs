//! Kazhdan–Lusztig polynomials `P_{x,y}` and inverse polynomials `Q_{x,y}` over
//! any Coxeter system exposing lengths, descents and generator multiplication.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The operations the KL engine needs from a Coxeter group.
///
/// Generators are indexed `0..num_generators()`. Implementations must satisfy
/// the exchange condition: if `s` is a right descent of `w` then
/// `length(w s) = length(w) − 1`.
pub trait CoxeterSystem {
    type Element: Clone + Eq + Hash + fmt::Debug;

    fn num_generators(&self) -> usize;
    fn identity(&self) -> Self::Element;
    fn length(&self, w: &Self::Element) -> usize;
    fn is_right_descent(&self, w: &Self::Element, s: usize) -> bool;
    fn is_left_descent(&self, w: &Self::Element, s: usize) -> bool;
    fn mul_right(&self, w: &Self::Element, s: usize) -> Self::Element;
    fn mul_left(&self, s: usize, w: &Self::Element) -> Self::Element;

    fn right_descents(&self, w: &Self::Element) -> Vec<usize> {
        (0..self.num_generators())
            .filter(|&s| self.is_right_descent(w, s))
            .collect()
    }

    fn from_word(&self, word: &[usize]) -> Self::Element {
        word.iter()
            .fold(self.identity(), |w, &s| self.mul_right(&w, s))
    }

    /// Lexicographically smallest reduced word, peeling the smallest left
    /// descent at each step.
    fn reduced_word(&self, w: &Self::Element) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w.clone();
        while let Some(s) = (0..self.num_generators()).find(|&s| self.is_left_descent(&cur, s)) {
            word.push(s);
            cur = self.mul_left(s, &cur);
        }
        word
    }

    /// Bruhat order: with `s` a right descent of `y`, `x ≤ y` iff
    /// `min(x, xs) ≤ ys`.
    fn bruhat_leq(&self, x: &Self::Element, y: &Self::Element) -> bool {
        let (lx, ly) = (self.length(x), self.length(y));
        if lx > ly {
            return false;
        }
        if lx == ly {
            return x == y;
        }
        let s = (0..self.num_generators())
            .find(|&s| self.is_right_descent(y, s))
            .expect("nonidentity element has a descent");
        let ys = self.mul_right(y, s);
        if self.is_right_descent(x, s) {
            self.bruhat_leq(&self.mul_right(x, s), &ys)
        } else {
            self.bruhat_leq(x, &ys)
        }
    }

    /// All `z ≤ w`, generated from subwords of a reduced word of `w`.
    fn lower_set(&self, w: &Self::Element) -> Vec<Self::Element> {
        let mut seen: HashSet<Self::Element> = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity());
        for s in self.reduced_word(w) {
            let grown: Vec<Self::Element> = out
                .iter()
                .map(|z| self.mul_right(z, s))
                .filter(|z| !seen.contains(z))
                .collect();
            for z in grown {
                if seen.insert(z.clone()) {
                    out.push(z);
                }
            }
        }
        out
    }
}

/// A polynomial in `q` with integer coefficients; `coeffs[i]` multiplies `q^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct KlPolynomial {
    coeffs: Vec<BigInt>,
}

impl KlPolynomial {
    pub fn zero() -> Self {
        KlPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KlPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        let mut p = KlPolynomial {
            coeffs: coeffs.into_iter().map(BigInt::from).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `P(1)`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `self · q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        KlPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = KlPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.trim();
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut p = KlPolynomial {
            coeffs: (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        };
        p.trim();
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return KlPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = KlPolynomial { coeffs };
        p.trim();
        p
    }
}

impl fmt::Display for KlPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Memoized KL computations over one Coxeter system.
///
/// A session is single-owner; separate sessions over the same system give
/// identical results.
pub struct KlSession<'a, S: CoxeterSystem> {
    sys: &'a S,
    p_cache: HashMap<(S::Element, S::Element), KlPolynomial>,
    q_cache: HashMap<(S::Element, S::Element), KlPolynomial>,
    lower_cache: HashMap<S::Element, Vec<S::Element>>,
    leq_cache: HashMap<(S::Element, S::Element), bool>,
}

impl<'a, S: CoxeterSystem> KlSession<'a, S> {
    pub fn new(sys: &'a S) -> Self {
        KlSession {
            sys,
            p_cache: HashMap::new(),
            q_cache: HashMap::new(),
            lower_cache: HashMap::new(),
            leq_cache: HashMap::new(),
        }
    }

    pub fn system(&self) -> &'a S {
        self.sys
    }

    pub fn leq(&mut self, x: &S::Element, y: &S::Element) -> bool {
        if let Some(&b) = self.leq_cache.get(&(x.clone(), y.clone())) {
            return b;
        }
        let b = self.sys.bruhat_leq(x, y);
        self.leq_cache.insert((x.clone(), y.clone()), b);
        b
    }

    fn lower(&mut self, w: &S::Element) -> Vec<S::Element> {
        if let Some(v) = self.lower_cache.get(w) {
            return v.clone();
        }
        let v = self.sys.lower_set(w);
        self.lower_cache.insert(w.clone(), v.clone());
        v
    }

    /// All `z` with `x ≤ z ≤ y`, sorted by length then reduced word.
    pub fn bruhat_interval(&mut self, x: &S::Element, y: &S::Element) -> Vec<S::Element> {
        if !self.leq(x, y) {
            return Vec::new();
        }
        let below = self.lower(y);
        let mut out: Vec<S::Element> = below.into_iter().filter(|z| self.leq(x, z)).collect();
        let sys = self.sys;
        let mut keyed: Vec<((usize, Vec<usize>), S::Element)> = out
            .drain(..)
            .map(|z| ((sys.length(&z), sys.reduced_word(&z)), z))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|(_, z)| z).collect()
    }

    /// `P_{x,y}`, zero unless `x ≤ y`.
    pub fn kl_polynomial(&mut self, x: &S::Element, y: &S::Element) -> KlPolynomial {
        let s = (0..self.sys.num_generators()).find(|&s| self.sys.is_right_descent(y, s));
        match s {
            None => self.kl_with_descent(x, y, 0),
            Some(s) => self.kl_with_descent(x, y, s),
        }
    }

    /// `P_{x,y}` computed through the recursion at right descent `s` of `y`.
    /// Every descent yields the same polynomial.
    pub fn kl_with_descent(&mut self, x: &S::Element, y: &S::Element, s: usize) -> KlPolynomial {
        if x == y {
            return KlPolynomial::one();
        }
        if !self.leq(x, y) {
            return KlPolynomial::zero();
        }
        let key = (x.clone(), y.clone());
        if let Some(p) = self.p_cache.get(&key) {
            return p.clone();
        }
        let sys = self.sys;
        debug_assert!(sys.is_right_descent(y, s));
        let ly = sys.length(y);
        let v = sys.mul_right(y, s);
        let xs = sys.mul_right(x, s);
        let c = usize::from(sys.is_right_descent(x, s));
        let mut p = self
            .kl_polynomial(&xs, &v)
            .shift(1 - c)
            .add(&self.kl_polynomial(x, &v).shift(c));
        for z in self.bruhat_interval(x, &v) {
            if z == v || !sys.is_right_descent(&z, s) {
                continue;
            }
            let mu = self.mu_coefficient(&z, &v);
            if mu.is_zero() {
                continue;
            }
            let lz = sys.length(&z);
            let pxz = self.kl_polynomial(x, &z);
            p = p.sub(&pxz.scale(&mu).shift((ly - lz) / 2));
        }
        self.p_cache.insert(key, p.clone());
        p
    }

    /// Coefficient of `q^{(ℓ(y)−ℓ(x)−1)/2}` in `P_{x,y}`; zero when the
    /// exponent is not a nonnegative integer.
    pub fn mu_coefficient(&mut self, x: &S::Element, y: &S::Element) -> BigInt {
        let (lx, ly) = (self.sys.length(x), self.sys.length(y));
        if ly <= lx || (ly - lx) % 2 == 0 {
            return BigInt::zero();
        }
        self.kl_polynomial(x, y).coeff((ly - lx - 1) / 2)
    }

    /// `Q_{w,y}`, defined by
    /// `Σ_{w≤z≤y} (−1)^{ℓ(z)−ℓ(w)} P_{w,z} Q_{z,y} = δ_{w,y}`.
    pub fn inverse_kl(&mut self, w: &S::Element, y: &S::Element) -> KlPolynomial {
        if w == y {
            return KlPolynomial::one();
        }
        if !self.leq(w, y) {
            return KlPolynomial::zero();
        }
        if let Some(q) = self.q_cache.get(&(w.clone(), y.clone())) {
            return q.clone();
        }
        let interval = self.bruhat_interval(w, y);
        let sys = self.sys;
        // Longest first so every Q_{u,y} with u > z is ready.
        for z in interval.iter().rev() {
            if z == y || self.q_cache.contains_key(&(z.clone(), y.clone())) {
                continue;
            }
            let lz = sys.length(z);
            let mut acc = KlPolynomial::zero();
            for u in interval.iter() {
                if u == z || sys.length(u) <= lz || !self.leq(z, u) {
                    continue;
                }
                let q_uy = if u == y {
                    KlPolynomial::one()
                } else {
                    self.q_cache[&(u.clone(), y.clone())].clone()
                };
                let term = self.kl_polynomial(z, u).mul(&q_uy);
                acc = if (sys.length(u) - lz) % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            self.q_cache
                .insert((z.clone(), y.clone()), acc.scale(&BigInt::from(-1)));
        }
        self.q_cache[&(w.clone(), y.clone())].clone()
    }
}
