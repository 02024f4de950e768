//! Oracles and fixtures shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use walgebra::rational::{int, rat};
use walgebra::{AffineWeight, CoxeterSystem, IntegralCoxeterContext, Rational, RootSystem};

/// Symmetric group `S_n` on one-line notation; `s_i` swaps positions `i, i+1`.
pub struct Sym(pub usize);

impl Sym {
    pub fn elements(&self) -> Vec<Vec<usize>> {
        fn permute(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                prefix.push(v);
                permute(prefix, rest, out);
                prefix.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        permute(&mut Vec::new(), &mut (0..self.0).collect(), &mut out);
        out
    }

    pub fn longest(&self) -> Vec<usize> {
        (0..self.0).rev().collect()
    }

    pub fn compose(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        y.iter().map(|&i| x[i]).collect()
    }
}

impl CoxeterSystem for Sym {
    type Element = Vec<usize>;

    fn num_generators(&self) -> usize {
        self.0 - 1
    }

    fn identity(&self) -> Vec<usize> {
        (0..self.0).collect()
    }

    fn length(&self, w: &Vec<usize>) -> usize {
        let mut n = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                n += usize::from(w[i] > w[j]);
            }
        }
        n
    }

    fn is_right_descent(&self, w: &Vec<usize>, s: usize) -> bool {
        w[s] > w[s + 1]
    }

    fn is_left_descent(&self, w: &Vec<usize>, s: usize) -> bool {
        let pos = |v: usize| w.iter().position(|&x| x == v).unwrap();
        pos(s) > pos(s + 1)
    }

    fn mul_right(&self, w: &Vec<usize>, s: usize) -> Vec<usize> {
        let mut v = w.clone();
        v.swap(s, s + 1);
        v
    }

    fn mul_left(&self, s: usize, w: &Vec<usize>) -> Vec<usize> {
        w.iter()
            .map(|&x| if x == s { s + 1 } else if x == s + 1 { s } else { x })
            .collect()
    }
}

/// Tableau criterion: `x ≤ y` iff every prefix of `x`, sorted, is dominated
/// entrywise by the same prefix of `y`.
pub fn tableau_leq(x: &[usize], y: &[usize]) -> bool {
    (1..=x.len()).all(|i| {
        let mut a = x[..i].to_vec();
        let mut b = y[..i].to_vec();
        a.sort();
        b.sort();
        a.iter().zip(&b).all(|(p, q)| p <= q)
    })
}

type Poly = Vec<i64>;

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// KL polynomials of `S_n` from R-polynomials: `q^{ℓ(y)−ℓ(x)} P̄_{x,y} − P_{x,y}
/// = Σ_{x<z≤y} R_{x,z} P_{z,y}`, whose low-degree part determines `P_{x,y}`.
pub struct RPolyOracle {
    sys: Sym,
    elems: Vec<Vec<usize>>,
    r: HashMap<(Vec<usize>, Vec<usize>), Poly>,
    p: HashMap<(Vec<usize>, Vec<usize>), Poly>,
}

impl RPolyOracle {
    pub fn new(n: usize) -> Self {
        let sys = Sym(n);
        let elems = sys.elements();
        RPolyOracle {
            sys,
            elems,
            r: HashMap::new(),
            p: HashMap::new(),
        }
    }

    fn r_poly(&mut self, x: &Vec<usize>, y: &Vec<usize>) -> Poly {
        if !tableau_leq(x, y) {
            return Vec::new();
        }
        if x == y {
            return vec![1];
        }
        if let Some(r) = self.r.get(&(x.clone(), y.clone())) {
            return r.clone();
        }
        let s = (0..self.sys.num_generators())
            .find(|&s| y[s] > y[s + 1])
            .unwrap();
        let ys = self.sys.mul_right(y, s);
        let xs = self.sys.mul_right(x, s);
        let r = if x[s] > x[s + 1] {
            self.r_poly(&xs, &ys)
        } else {
            padd(&pmul(&vec![-1, 1], &self.r_poly(x, &ys)), &pmul(&vec![0, 1], &self.r_poly(&xs, &ys)))
        };
        let r = trim(r);
        self.r.insert((x.clone(), y.clone()), r.clone());
        r
    }

    pub fn p_poly(&mut self, x: &Vec<usize>, y: &Vec<usize>) -> Poly {
        if !tableau_leq(x, y) {
            return Vec::new();
        }
        if x == y {
            return vec![1];
        }
        if let Some(p) = self.p.get(&(x.clone(), y.clone())) {
            return p.clone();
        }
        let d = self.sys.length(y) - self.sys.length(x);
        let mut rhs: Poly = Vec::new();
        let zs: Vec<Vec<usize>> = self
            .elems
            .iter()
            .filter(|z| *z != x && tableau_leq(x, z) && tableau_leq(z, y))
            .cloned()
            .collect();
        for z in zs {
            let term = pmul(&self.r_poly(x, &z), &self.p_poly(&z, y));
            rhs = padd(&rhs, &term);
        }
        let p: Poly = (0..=(d - 1) / 2).map(|i| -rhs.get(i).copied().unwrap_or(0)).collect();
        let p = trim(p);
        self.p.insert((x.clone(), y.clone()), p.clone());
        p
    }
}

pub fn big_to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|c| c.to_i64().unwrap()).collect()
}

/// Partition numbers by the pentagonal recurrence.
pub fn partition_numbers(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

/// Virasoro minimal-model character for central charge `1 − 6(p−q)²/pq`:
/// `η^{−1} Σ_{k∈ℤ} (q^{(2pqk + qr − ps)²/4pq} − q^{(2pqk + qr + ps)²/4pq})`.
/// Returns the leading exponent and integer coefficients through `order`.
pub fn minimal_model_character(p: i64, q: i64, r: i64, s: i64, order: usize) -> (Rational, Vec<i64>) {
    let four_pq = int(4 * p * q);
    let mut terms: Vec<(Rational, i64)> = Vec::new();
    for k in -20..=20 {
        let a = 2 * p * q * k + q * r - p * s;
        let b = 2 * p * q * k + q * r + p * s;
        terms.push((int(a * a) / &four_pq, 1));
        terms.push((int(b * b) / &four_pq, -1));
    }
    let lead = terms.iter().map(|(e, _)| e.clone()).min().unwrap();
    let mut theta = vec![0i64; order + 1];
    for (e, c) in terms {
        let d = &e - &lead;
        assert!(d.is_integer(), "theta exponents share a lattice");
        if let Some(i) = d.to_integer().to_usize().filter(|&i| i <= order) {
            theta[i] += c;
        }
    }
    let parts = partition_numbers(order);
    let coeffs = (0..=order)
        .map(|n| (0..=n).map(|i| theta[i] * parts[n - i]).sum())
        .collect();
    (lead - rat(1, 24), coeffs)
}

pub fn a1() -> RootSystem {
    RootSystem::from_type_str("A1").unwrap()
}

/// A1 weight at level `κ` with `⟨Λ+ρ, ᾱ∨⟩ = b`.
pub fn a1_weight(kappa: &Rational, b: &Rational) -> AffineWeight {
    AffineWeight::at_kappa(&a1(), vec![b - int(1)], kappa).unwrap()
}

pub fn a1_ctx(kappa: &Rational, b: &Rational) -> IntegralCoxeterContext {
    IntegralCoxeterContext::new(&a1(), &a1_weight(kappa, b)).unwrap()
}

pub fn is_nonneg_integer_series(coeffs: &[Rational]) -> bool {
    coeffs.iter().all(|c| c.is_integer() && c >= &Rational::zero())
}
