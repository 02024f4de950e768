//! Finite simple root systems and their Weyl groups.
//!
//! Weights live in the fundamental-weight basis `ϖ_1..ϖ_l`, so the pairing
//! `⟨λ, α_i∨⟩` is the `i`-th coordinate. Roots are stored in the same basis and
//! always have integer coordinates. The invariant form is normalized so that
//! long roots have squared length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{bilinear, int, invert_matrix, rat, to_i64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidLieType(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLieType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        LieType::new(family, rank).map_err(|_| bad())
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// A finite root in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteRoot {
    coords: Vec<i64>,
}

impl FiniteRoot {
    pub fn new(coords: Vec<i64>) -> Self {
        FiniteRoot { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn to_weight(&self) -> Vec<Rational> {
        self.coords.iter().map(|&c| int(c)).collect()
    }

    pub fn neg(&self) -> FiniteRoot {
        FiniteRoot {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// A finite Weyl group element as an integer matrix on fundamental-weight
/// coordinates, carried together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylMatrix {
    dim: usize,
    entries: Vec<i64>,
    inverse: Vec<i64>,
}

impl WeylMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        WeylMatrix {
            dim,
            inverse: entries.clone(),
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| self.entry(i, j) == i64::from(i == j))
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylMatrix) -> WeylMatrix {
        WeylMatrix {
            dim: self.dim,
            entries: mat_mul(self.dim, &self.entries, &other.entries),
            inverse: mat_mul(self.dim, &other.inverse, &self.inverse),
        }
    }

    pub fn inverse(&self) -> WeylMatrix {
        WeylMatrix {
            dim: self.dim,
            entries: self.inverse.clone(),
            inverse: self.entries.clone(),
        }
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(self.dim, &self.entries, x)
    }

    pub fn apply_inverse_int(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(self.dim, &self.inverse, x)
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, xj) in x.iter().enumerate() {
                    let e = self.entries[i * self.dim + j];
                    if e != 0 {
                        acc += xj * int(e);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn apply_root(&self, root: &FiniteRoot) -> FiniteRoot {
        FiniteRoot::new(self.apply_int(root.coords()))
    }
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn mat_vec(n: usize, a: &[i64], x: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| a[i * n + j] * x[j]).sum())
        .collect()
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Rational>>,
    /// `gram · gram_denom`, integral.
    gram_scaled: Vec<Vec<i64>>,
    gram_denom: i64,
    simple_roots: Vec<FiniteRoot>,
    /// Positive roots first (ordered by height), then their negatives.
    roots: Vec<FiniteRoot>,
    root_index: HashMap<Vec<i64>, usize>,
    /// Simple-root coefficients of each root.
    root_coefficients: Vec<Vec<i64>>,
    /// Simple-coroot coefficients of each coroot `α∨`.
    coroot_coefficients: Vec<Vec<i64>>,
    /// `2/(α,α)` for each root.
    coroot_scale: Vec<Rational>,
    root_norms: Vec<Rational>,
    rho: Vec<Rational>,
    rho_check: Vec<Rational>,
    dual_coxeter: i64,
    exponents: Vec<i64>,
    highest_root: FiniteRoot,
    w0: WeylMatrix,
    w0_word: Vec<usize>,
}

/// Inner products `(α_i, α_j)` of simple roots, long roots of squared length 2
/// (Bourbaki numbering).
fn simple_root_form(t: LieType) -> Vec<Vec<Rational>> {
    let n = t.rank;
    let mut f = vec![vec![Rational::zero(); n]; n];
    let link = |f: &mut Vec<Vec<Rational>>, i: usize, j: usize, v: Rational| {
        f[i][j] = v.clone();
        f[j][i] = v;
    };
    match t.family {
        Family::A => {
            for i in 0..n {
                f[i][i] = int(2);
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut f, i, i + 1, int(-1));
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                f[i][i] = int(2);
                link(&mut f, i, i + 1, int(-1));
            }
            f[n - 1][n - 1] = int(1);
        }
        Family::C => {
            for i in 0..n - 1 {
                f[i][i] = int(1);
            }
            f[n - 1][n - 1] = int(2);
            for i in 0..n - 2 {
                link(&mut f, i, i + 1, rat(-1, 2));
            }
            link(&mut f, n - 2, n - 1, int(-1));
        }
        Family::D => {
            for i in 0..n {
                f[i][i] = int(2);
            }
            for i in 0..n - 2 {
                link(&mut f, i, i + 1, int(-1));
            }
            link(&mut f, n - 3, n - 1, int(-1));
        }
        Family::E => {
            for i in 0..n {
                f[i][i] = int(2);
            }
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            link(&mut f, 0, 2, int(-1));
            link(&mut f, 1, 3, int(-1));
            for i in 2..n - 1 {
                link(&mut f, i, i + 1, int(-1));
            }
        }
        Family::F => {
            f[0][0] = int(2);
            f[1][1] = int(2);
            f[2][2] = int(1);
            f[3][3] = int(1);
            link(&mut f, 0, 1, int(-1));
            link(&mut f, 1, 2, int(-1));
            link(&mut f, 2, 3, rat(-1, 2));
        }
        Family::G => {
            f[0][0] = rat(2, 3);
            f[1][1] = int(2);
            link(&mut f, 0, 1, int(-1));
        }
    }
    f
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank;
        let form = simple_root_form(lie_type);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        to_i64(&(int(2) * &form[i][j] / &form[j][j]))
                            .expect("Cartan entries are integers")
                    })
                    .collect()
            })
            .collect();
        let half_norm: Vec<Rational> = (0..n).map(|i| &form[i][i] / int(2)).collect();

        // (ϖ_i, α_j) = δ_ij (α_j,α_j)/2 and α_j = Σ_k cartan[j][k] ϖ_k, so
        // G · Cᵀ = diag((α,α)/2).
        let cartan_t: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| int(cartan[j][i])).collect())
            .collect();
        let ct_inv = invert_matrix(&cartan_t).expect("Cartan matrix is invertible");
        let gram: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| &half_norm[i] * &ct_inv[i][j]).collect())
            .collect();

        let gram_denom = gram
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, g| acc.lcm(g.denom()));
        let gram_scaled = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|g| to_i64(&(g * Rational::from_integer(gram_denom.clone()))).unwrap())
                    .collect()
            })
            .collect();
        let gram_denom = gram_denom.to_i64().unwrap();

        let positive_coeffs = positive_root_coefficients(&cartan);
        let to_weight_coords = |c: &[i64]| -> Vec<i64> {
            (0..n).map(|k| (0..n).map(|j| c[j] * cartan[j][k]).sum()).collect()
        };

        let mut roots = Vec::new();
        let mut root_coefficients = Vec::new();
        for c in &positive_coeffs {
            roots.push(FiniteRoot::new(to_weight_coords(c)));
            root_coefficients.push(c.clone());
        }
        for c in &positive_coeffs {
            let neg: Vec<i64> = c.iter().map(|x| -x).collect();
            roots.push(FiniteRoot::new(to_weight_coords(&neg)));
            root_coefficients.push(neg);
        }
        let root_index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();
        let root_norms: Vec<Rational> = roots
            .iter()
            .map(|r| {
                let w = r.to_weight();
                bilinear(&gram, &w, &w)
            })
            .collect();
        let coroot_scale = root_norms.iter().map(|nrm| int(2) / nrm).collect();
        let coroot_coefficients = root_coefficients
            .iter()
            .zip(&root_norms)
            .map(|(c, nrm)| {
                c.iter()
                    .zip(&half_norm)
                    .map(|(ci, h)| to_i64(&(int(2 * ci) * h / nrm)).expect("coroot lattice"))
                    .collect()
            })
            .collect();

        let rho = vec![Rational::one(); n];
        let rho_check: Vec<Rational> = half_norm.iter().map(|h| Rational::one() / h).collect();
        let highest_root = roots[positive_coeffs.len() - 1].clone();
        let theta_pair = bilinear(&gram, &rho, &highest_root.to_weight());
        let dual_coxeter = to_i64(&(theta_pair + int(1))).expect("h∨ is an integer");

        // #{i : d_i >= k} equals the number of positive roots of height k.
        let max_height = positive_coeffs.iter().map(|c| c.iter().sum::<i64>()).max().unwrap();
        let count_at = |h: i64| {
            positive_coeffs
                .iter()
                .filter(|c| c.iter().sum::<i64>() == h)
                .count()
        };
        let mut exponents = Vec::new();
        for k in 1..=max_height {
            for _ in count_at(k + 1)..count_at(k) {
                exponents.push(k);
            }
        }

        let simple_roots = (0..n).map(|i| FiniteRoot::new(cartan[i].clone())).collect();
        let mut rs = RootSystem {
            lie_type,
            cartan,
            gram,
            gram_scaled,
            gram_denom,
            simple_roots,
            roots,
            root_index,
            root_coefficients,
            coroot_coefficients,
            coroot_scale,
            root_norms,
            rho,
            rho_check,
            dual_coxeter,
            exponents,
            highest_root,
            w0: WeylMatrix::identity(n),
            w0_word: Vec::new(),
        };

        let mut v = rs.rho.clone();
        let mut pushed = Vec::new();
        while let Some(i) = (0..n).find(|&i| v[i].is_positive()) {
            v = rs.simple_reflect(i, &v);
            pushed.push(i);
        }
        pushed.reverse();
        rs.w0 = rs.word_matrix(&pushed).expect("indices in range");
        rs.w0_word = pushed;
        rs
    }

    pub fn from_type_str(s: &str) -> Result<Self> {
        Ok(RootSystem::new(s.parse()?))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn simple_roots(&self) -> &[FiniteRoot] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[FiniteRoot] {
        &self.roots[..self.roots.len() / 2]
    }

    /// All roots, positives first; index `i` and `i + N` are negatives.
    pub fn roots(&self) -> &[FiniteRoot] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root_id(&self, root: &FiniteRoot) -> Option<usize> {
        self.root_index.get(root.coords()).copied()
    }

    /// `(x, y)` for integer vectors known to pair integrally, such as a root
    /// and a coweight.
    pub fn inner_int_exact(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0i64;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc += xi * self.gram_scaled[i][j] * yj;
            }
        }
        debug_assert_eq!(acc % self.gram_denom, 0);
        acc / self.gram_denom
    }

    pub(crate) fn root_id_of_coords(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    pub fn is_positive_id(&self, id: usize) -> bool {
        id < self.num_positive_roots()
    }

    pub fn negate_id(&self, id: usize) -> usize {
        let n = self.num_positive_roots();
        if id < n {
            id + n
        } else {
            id - n
        }
    }

    pub fn root_coefficients(&self, id: usize) -> &[i64] {
        &self.root_coefficients[id]
    }

    pub fn root_norm_id(&self, id: usize) -> &Rational {
        &self.root_norms[id]
    }

    /// `2/(α,α)` for the root with the given id.
    pub fn coroot_scale_id(&self, id: usize) -> &Rational {
        &self.coroot_scale[id]
    }

    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    pub fn rho_check(&self) -> &[Rational] {
        &self.rho_check
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn highest_root(&self) -> &FiniteRoot {
        &self.highest_root
    }

    pub fn w0(&self) -> &WeylMatrix {
        &self.w0
    }

    pub fn w0_word(&self) -> &[usize] {
        &self.w0_word
    }

    pub fn dimension(&self) -> usize {
        self.rank() + self.roots.len()
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        bilinear(&self.gram, x, y)
    }

    pub fn norm_sq(&self, x: &[Rational]) -> Rational {
        self.inner(x, x)
    }

    /// `(x, y)` for integer coordinate vectors.
    pub fn inner_int(&self, x: &[i64], y: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc += &self.gram[i][j] * int(xi * yj);
                }
            }
        }
        acc
    }

    pub fn fundamental_weight(&self, i: usize) -> Vec<Rational> {
        (0..self.rank()).map(|j| int(i64::from(i == j))).collect()
    }

    pub fn check_dim(&self, x: &[Rational]) -> Result<()> {
        if x.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: x.len(),
            })
        }
    }

    fn checked_id(&self, root: &FiniteRoot) -> Result<usize> {
        self.root_id(root)
            .ok_or_else(|| Error::NotARoot(self.lie_type.to_string()))
    }

    /// `⟨α, ρ∨⟩`.
    pub fn height(&self, root: &FiniteRoot) -> Result<i64> {
        let id = self.checked_id(root)?;
        Ok(self.height_id(id))
    }

    pub fn height_id(&self, id: usize) -> i64 {
        self.root_coefficients[id].iter().sum()
    }

    /// `⟨λ, α∨⟩ = 2(λ, α)/(α, α)`.
    pub fn pairing_finite(&self, weight: &[Rational], root: &FiniteRoot) -> Result<Rational> {
        self.check_dim(weight)?;
        let id = self.checked_id(root)?;
        Ok(self.coroot_pairing_id(weight, id))
    }

    pub fn coroot_pairing_id(&self, weight: &[Rational], id: usize) -> Rational {
        weight
            .iter()
            .zip(&self.coroot_coefficients[id])
            .filter(|(_, &c)| c != 0)
            .map(|(x, &c)| x * int(c))
            .sum()
    }

    /// `⟨x, α∨⟩` for `x` with integer fundamental-weight coordinates.
    pub fn coroot_pairing_int(&self, x: &[i64], id: usize) -> i64 {
        x.iter().zip(&self.coroot_coefficients[id]).map(|(a, c)| a * c).sum()
    }

    /// `α∨ = 2α/(α,α)` in fundamental-weight coordinates; always integral.
    pub fn coroot_coords(&self, id: usize) -> Vec<i64> {
        let s = to_i64(&self.coroot_scale[id]).expect("2/(α,α) ∈ {1,2,3}");
        self.roots[id].coords.iter().map(|c| c * s).collect()
    }

    pub fn simple_reflect(&self, i: usize, x: &[Rational]) -> Vec<Rational> {
        let c = x[i].clone();
        x.iter()
            .zip(&self.simple_roots[i].coords)
            .map(|(xj, &aj)| xj - &c * int(aj))
            .collect()
    }

    /// Matrix of `s_{i_1} ∘ … ∘ s_{i_k}` for a 0-based word.
    pub fn word_matrix(&self, word: &[usize]) -> Result<WeylMatrix> {
        let mut m = WeylMatrix::identity(self.rank());
        for &i in word {
            m = m.compose(&self.reflection_matrix(self.simple_root_id(i)?));
        }
        Ok(m)
    }

    pub fn simple_root_id(&self, i: usize) -> Result<usize> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(self.root_id(&self.simple_roots[i]).expect("simple roots are roots"))
    }

    /// Matrix of the reflection `x ↦ x − ⟨x, α∨⟩ α`.
    pub fn reflection_matrix(&self, id: usize) -> WeylMatrix {
        let n = self.rank();
        let alpha = &self.roots[id].coords;
        let check = self.coroot_coords(id);
        // ⟨ϖ_j, α∨⟩ = (ϖ_j, α∨)
        let functional: Vec<i64> = (0..n)
            .map(|j| {
                let unit: Vec<i64> = (0..n).map(|k| i64::from(j == k)).collect();
                to_i64(&self.inner_int(&unit, &check)).expect("integral coroot pairing")
            })
            .collect();
        let mut entries = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[r * n + c] = i64::from(r == c) - alpha[r] * functional[c];
            }
        }
        WeylMatrix {
            dim: n,
            inverse: entries.clone(),
            entries,
        }
    }

    /// Applies `s_{i_1} ∘ … ∘ s_{i_k}` (0-based indices) to a weight.
    pub fn finite_weyl_apply(&self, word: &[usize], weight: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(weight)?;
        let mut v = weight.to_vec();
        for &i in word.iter().rev() {
            if i >= self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: self.rank(),
                });
            }
            v = self.simple_reflect(i, &v);
        }
        Ok(v)
    }

    /// The dominant element of the Weyl orbit of `x`.
    pub fn dominant_representative(&self, x: &[Rational]) -> Vec<Rational> {
        let mut v = x.to_vec();
        while let Some(i) = (0..self.rank()).find(|&i| v[i].is_negative()) {
            v = self.simple_reflect(i, &v);
        }
        v
    }

    /// Whether `μ + ρ ∈ W(λ + ρ)`.
    pub fn same_infinitesimal_character(&self, lam: &[Rational], mu: &[Rational]) -> Result<bool> {
        self.check_dim(lam)?;
        self.check_dim(mu)?;
        let a: Vec<Rational> = lam.iter().zip(&self.rho).map(|(x, r)| x + r).collect();
        let b: Vec<Rational> = mu.iter().zip(&self.rho).map(|(x, r)| x + r).collect();
        Ok(self.dominant_representative(&a) == self.dominant_representative(&b))
    }
}

/// Positive roots in simple-root coefficients, ordered by height, built by
/// root strings: `β + α_i` is a root iff `p − ⟨β, α_i∨⟩ > 0`, where `p` is the
/// largest `k` with `β − kα_i` a root.
fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
    let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type_str(s).unwrap()
    }

    #[test]
    fn type_parsing() {
        assert_eq!("A1".parse::<LieType>().unwrap().rank(), 1);
        assert_eq!("e6".parse::<LieType>().unwrap().family(), Family::E);
        for bad in ["E5", "E9", "G3", "F2", "D3", "B1", "A0", "X2", "A", "A-1", "A1x"] {
            assert!(bad.parse::<LieType>().is_err(), "{bad}");
        }
        assert_eq!("G2".parse::<LieType>().unwrap().to_string(), "G2");
    }

    #[test]
    fn root_counts_and_invariants() {
        let table: [(&str, usize, i64, &[i64]); 12] = [
            ("A1", 1, 2, &[1]),
            ("A2", 3, 3, &[1, 2]),
            ("A3", 6, 4, &[1, 2, 3]),
            ("B2", 4, 3, &[1, 3]),
            ("B3", 9, 5, &[1, 3, 5]),
            ("C3", 9, 4, &[1, 3, 5]),
            ("D4", 12, 6, &[1, 3, 3, 5]),
            ("G2", 6, 4, &[1, 5]),
            ("F4", 24, 9, &[1, 5, 7, 11]),
            ("E6", 36, 12, &[1, 4, 5, 7, 8, 11]),
            ("E7", 63, 18, &[1, 5, 7, 9, 11, 13, 17]),
            ("E8", 120, 30, &[1, 7, 11, 13, 17, 19, 23, 29]),
        ];
        for (name, npos, hv, exps) in table {
            let r = rs(name);
            assert_eq!(r.num_positive_roots(), npos, "{name}");
            assert_eq!(r.dual_coxeter(), hv, "{name}");
            assert_eq!(r.exponents(), exps, "{name}");
            let theta = r.highest_root().to_weight();
            assert_eq!(r.norm_sq(&theta), int(2), "{name}");
            let dim: i64 = r.exponents().iter().map(|d| 2 * d + 1).sum();
            assert_eq!(r.dimension() as i64, dim, "{name}");
            for i in 0..r.rank() {
                let a = r.simple_roots()[i].to_weight();
                let id = r.simple_root_id(i).unwrap();
                assert_eq!(r.coroot_pairing_id(r.rho(), id), int(1));
                assert_eq!(r.inner(&a, r.rho_check()), int(1));
            }
            assert_eq!(r.w0_word().len(), npos, "{name}");
            assert!(r.w0().compose(r.w0()).is_identity());
            for p in r.positive_roots() {
                let img = r.w0().apply_root(p);
                let id = r.root_id(&img).unwrap();
                assert!(!r.is_positive_id(id));
            }
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    assert_eq!(r.gram()[i][j], r.gram()[j][i]);
                }
            }
        }
    }

    #[test]
    fn heights() {
        let a2 = rs("A2");
        assert_eq!(a2.height(&a2.simple_roots()[0]).unwrap(), 1);
        assert_eq!(a2.height(a2.highest_root()).unwrap(), 2);
        let g2 = rs("G2");
        assert_eq!(g2.height(g2.highest_root()).unwrap(), 5);
        assert_eq!(g2.height(&g2.highest_root().neg()).unwrap(), -5);
        assert!(g2.height(&FiniteRoot::new(vec![1, 1])).is_err());
    }

    #[test]
    fn finite_pairings() {
        let a1 = rs("A1");
        assert_eq!(a1.pairing_finite(a1.rho(), &a1.simple_roots()[0]).unwrap(), int(1));
        let a2 = rs("A2");
        let w1 = a2.fundamental_weight(0);
        assert_eq!(a2.pairing_finite(&w1, &a2.simple_roots()[1]).unwrap(), int(0));
        let b2 = rs("B2");
        // α_2 is the short simple root of B2.
        assert_eq!(b2.root_norm_id(b2.simple_root_id(1).unwrap()), &int(1));
        assert_eq!(b2.pairing_finite(b2.rho(), &b2.simple_roots()[1]).unwrap(), int(1));
    }

    #[test]
    fn weyl_words() {
        let a1 = rs("A1");
        let w = a1.fundamental_weight(0);
        assert_eq!(a1.finite_weyl_apply(&[0], &w).unwrap(), vec![int(-1)]);
        let a2 = rs("A2");
        let img = a2.finite_weyl_apply(a2.w0_word(), &a2.fundamental_weight(0)).unwrap();
        assert_eq!(img, vec![int(0), int(-1)]);
        assert_eq!(a2.finite_weyl_apply(&[], &[rat(1, 3), rat(2, 7)]).unwrap(), vec![rat(1, 3), rat(2, 7)]);
        assert!(a2.finite_weyl_apply(&[2], &[int(0), int(0)]).is_err());
        let m = a2.word_matrix(&[0, 1]).unwrap();
        let x = vec![rat(1, 2), rat(-3, 5)];
        assert_eq!(m.apply(&x), a2.finite_weyl_apply(&[0, 1], &x).unwrap());
    }

    #[test]
    fn infinitesimal_characters() {
        let a1 = rs("A1");
        let lam = vec![rat(2, 7)];
        let dot: Vec<Rational> = {
            let shifted = vec![&lam[0] + int(1)];
            let r = a1.finite_weyl_apply(&[0], &shifted).unwrap();
            vec![&r[0] - int(1)]
        };
        assert!(a1.same_infinitesimal_character(&lam, &dot).unwrap());
        assert!(a1.same_infinitesimal_character(&[int(0)], &[int(-2)]).unwrap());
        let a2 = rs("A2");
        assert!(!a2
            .same_infinitesimal_character(&a2.fundamental_weight(0), &a2.fundamental_weight(1))
            .unwrap());
    }
}
