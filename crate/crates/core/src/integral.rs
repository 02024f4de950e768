//! The integral root system `R^Λ = {α ∈ Δ^re : ⟨Λ+ρ, α∨⟩ ∈ ℤ}`, the integral
//! Weyl group `W^Λ` as a Coxeter system, and the domain predicates used by the
//! character formulas.
//!
//! Along a finite root direction `ᾱ` the pairing `⟨Λ+ρ, (ᾱ+nδ)∨⟩ = a + n·t`
//! with `t = 2κ/(ᾱ,ᾱ)` is affine in `n`, so the integral degrees form an
//! arithmetic progression ([`RootProgression`]). Every membership, length and
//! domain question reduces to counting or searching such progressions.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::affine::{affine_pairing, AffineRealRoot, AffineWeight, ExtendedWeylElement};
use crate::error::{Error, Result};
use crate::kl::CoxeterSystem;
use crate::rational::{count_in_range, first_at_least, int, integral_progression, to_i64, Rational};
use crate::rootdata::RootSystem;

/// Upper bound on the size of `W^Λ_0` enumerations.
const STABILIZER_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The pairing `a + n·t` of `Λ+ρ` with the coroots of `ᾱ + nδ`, `n ∈ ℤ`.
#[derive(Clone, Debug)]
pub struct RootProgression {
    pub root_id: usize,
    pub base: Rational,
    pub step: Rational,
    /// Integral degrees as `(first, period)` with `0 <= first < period`.
    pub integral: Option<(i64, i64)>,
}

impl RootProgression {
    pub fn value(&self, n: i64) -> Rational {
        &self.base + &self.step * int(n)
    }

    pub fn contains(&self, n: i64) -> bool {
        self.integral
            .is_some_and(|(first, period)| (n - first).rem_euclid(period) == 0)
    }

    /// Whether some positive real root in this direction pairs to a positive
    /// (`positive = true`) or negative integer.
    fn hits(&self, rs: &RootSystem, positive: bool) -> bool {
        let Some((first, period)) = self.integral else {
            return false;
        };
        let lo = if rs.is_positive_id(self.root_id) { 0 } else { 1 };
        let n = first_at_least(first, period, lo);
        let v0 = self.value(n);
        let diff = &self.step * int(period);
        if positive {
            diff.is_positive() || v0 >= int(1)
        } else {
            diff.is_negative() || v0 <= int(-1)
        }
    }

    /// The degree at which the pairing vanishes, if it is an integer.
    fn zero_degree(&self) -> Option<i64> {
        to_i64(&(-&self.base / &self.step))
    }
}

/// One progression per finite root (indexed like [`RootSystem::roots`]).
pub fn root_progressions(rs: &RootSystem, lambda: &AffineWeight) -> Result<Vec<RootProgression>> {
    rs.check_dim(lambda.finite())?;
    let kappa = lambda.kappa(rs);
    if kappa.is_zero() {
        return Err(Error::CriticalLevel);
    }
    let shifted = lambda.plus_rho(rs);
    Ok((0..rs.roots().len())
        .map(|id| {
            let base = rs.coroot_pairing_id(shifted.finite(), id);
            let step = &kappa * rs.coroot_scale_id(id);
            let integral = integral_progression(&base, &step);
            RootProgression {
                root_id: id,
                base,
                step,
                integral,
            }
        })
        .collect())
}

fn positive_slice(rs: &RootSystem, progs: &[RootProgression], bound: i64) -> Vec<AffineRealRoot> {
    let mut keyed: Vec<(i64, usize)> = Vec::new();
    for p in progs {
        let Some((first, period)) = p.integral else {
            continue;
        };
        let lo = if rs.is_positive_id(p.root_id) { 0 } else { 1 };
        let mut n = first_at_least(first, period, lo);
        while n <= bound {
            keyed.push((n, p.root_id));
            n += period;
        }
    }
    keyed.sort();
    keyed
        .into_iter()
        .map(|(n, id)| AffineRealRoot::new(rs.roots()[id].clone(), n))
        .collect()
}

/// All roots of `R^Λ` with `|n| <= degree_bound`: the positive ones sorted by
/// (degree, finite root), followed by their negatives in the same order.
pub fn integral_root_slice(
    rs: &RootSystem,
    lambda: &AffineWeight,
    degree_bound: i64,
) -> Result<Vec<AffineRealRoot>> {
    if degree_bound < 1 {
        return Err(Error::InvalidDegreeBound(degree_bound));
    }
    let progs = root_progressions(rs, lambda)?;
    let pos = positive_slice(rs, &progs, degree_bound);
    let neg: Vec<AffineRealRoot> = pos.iter().map(|r| r.neg()).collect();
    Ok(pos.into_iter().chain(neg).collect())
}

/// `⟨Λ, ᾱ∨⟩ ∉ ℤ` for every finite root, i.e. `R^Λ ∩ Δ = ∅`.
pub fn is_nondegenerate(rs: &RootSystem, lambda: &AffineWeight) -> bool {
    (0..rs.num_positive_roots()).all(|id| !rs.coroot_pairing_id(lambda.finite(), id).is_integer())
}

/// `⟨Λ, α∨⟩ ∉ ℤ` for `α = −ᾱ + nδ`, `ᾱ ∈ Δ₊`, `1 <= n <= ht ᾱ`.
pub fn satisfies_cond_plus(rs: &RootSystem, lambda: &AffineWeight) -> bool {
    (0..rs.num_positive_roots()).all(|id| {
        let neg = rs.roots()[id].neg();
        (1..=rs.height_id(id)).all(|n| {
            let alpha = AffineRealRoot::new(neg.clone(), n);
            !affine_pairing(rs, lambda, &alpha)
                .expect("finite root")
                .is_integer()
        })
    })
}

/// `Δ₊^re ∩ t_{ρ∨}(Δ₋^re)`, enumerated through the root action of `t_{−ρ∨}`.
pub fn cond_plus_region(rs: &RootSystem) -> Vec<AffineRealRoot> {
    let neg_rho_check: Vec<Rational> = rs.rho_check().iter().map(|r| -r).collect();
    let t = ExtendedWeylElement::translation(rs, &neg_rho_check).expect("ρ∨ is a coweight");
    // t_{−ρ∨}(ᾱ + nδ) = ᾱ + (n + ht ᾱ)δ, so no n beyond ht θ can qualify.
    let max_n = rs.height(rs.highest_root()).expect("θ is a root") + 1;
    let mut out = Vec::new();
    for root in rs.roots() {
        for n in 0..=max_n {
            let alpha = AffineRealRoot::new(root.clone(), n);
            if alpha.is_positive(rs) && !t.root_action(rs, &alpha).is_positive(rs) {
                out.push(alpha);
            }
        }
    }
    out.sort();
    out
}

/// `R^Λ ∩ Δ₊^re ∩ t_{ρ∨}(Δ₋^re)`; empty exactly when [`satisfies_cond_plus`].
pub fn cond_plus_violations(rs: &RootSystem, lambda: &AffineWeight) -> Vec<AffineRealRoot> {
    let shifted = lambda.plus_rho(rs);
    cond_plus_region(rs)
        .into_iter()
        .filter(|a| affine_pairing(rs, &shifted, a).expect("finite root").is_integer())
        .collect()
}

/// `⟨Λ+ρ, α∨⟩ ∉ {1, 2, …}` for all `α ∈ Δ₊^re`.
pub fn is_antidominant(rs: &RootSystem, lambda: &AffineWeight) -> Result<bool> {
    domain_membership(rs, lambda, Sign::Minus, false)
}

/// Membership in `Dom_±^κ` (or `Dom_{±,nondeg}^κ` when `nondeg`): no pairing
/// of `Λ+ρ` with a positive real coroot lies in `{∓1, ∓2, …}`.
pub fn domain_membership(
    rs: &RootSystem,
    lambda: &AffineWeight,
    sign: Sign,
    nondeg: bool,
) -> Result<bool> {
    let progs = root_progressions(rs, lambda)?;
    let forbid_positive = sign == Sign::Minus;
    let inside = progs.iter().all(|p| !p.hits(rs, forbid_positive));
    Ok(inside && (!nondeg || is_nondegenerate(rs, lambda)))
}

/// An element of `W^Λ` with its canonical reduced word over the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralWeylElement {
    element: ExtendedWeylElement,
    word: Vec<usize>,
}

impl IntegralWeylElement {
    pub fn element(&self) -> &ExtendedWeylElement {
        &self.element
    }

    /// Lexicographically smallest reduced word (0-based generator indices).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    fn sort_key(&self) -> (usize, &[usize]) {
        (self.word.len(), &self.word)
    }
}

/// The stabilizer `W^Λ_0 = ⟨s_α : ⟨Λ+ρ, α∨⟩ = 0⟩` and the position of `w` in
/// its coset `w W^Λ_0`.
#[derive(Clone, Debug)]
pub struct CosetInfo {
    pub stabilizer_roots: Vec<AffineRealRoot>,
    pub stabilizer_generators: Vec<ExtendedWeylElement>,
    pub stabilizer_order: usize,
    pub is_longest: bool,
    pub is_shortest: bool,
}

/// `R^Λ` and `W^Λ` for a fixed non-critical `Λ`.
///
/// Simple roots are ordered by δ-degree, then by finite root (positive roots by
/// height first). Bruhat answers are memoized behind a mutex, so a context
/// can be shared between threads.
pub struct IntegralCoxeterContext {
    rs: RootSystem,
    lambda: AffineWeight,
    shifted: AffineWeight,
    kappa: Rational,
    progressions: Vec<RootProgression>,
    simple_roots: Vec<AffineRealRoot>,
    generators: Vec<ExtendedWeylElement>,
    cartan: Vec<Vec<i64>>,
    coxeter: Vec<Vec<Option<u32>>>,
    slice_bound: i64,
    bruhat_memo: Mutex<HashMap<(ExtendedWeylElement, ExtendedWeylElement), bool>>,
}

impl std::fmt::Debug for IntegralCoxeterContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IntegralCoxeterContext")
            .field("lie_type", &self.rs.lie_type())
            .field("lambda", &self.lambda)
            .field("simple_roots", &self.simple_roots)
            .field("slice_bound", &self.slice_bound)
            .finish()
    }
}

/// Reflection of a level-zero root `γ` in `β`: `γ − ⟨γ, β∨⟩β`.
fn reflect_root(rs: &RootSystem, beta: &AffineRealRoot, gamma: &AffineRealRoot) -> AffineRealRoot {
    let c = level_zero_pairing(rs, gamma, beta);
    let coords: Vec<i64> = gamma
        .finite()
        .coords()
        .iter()
        .zip(beta.finite().coords())
        .map(|(g, b)| g - c * b)
        .collect();
    AffineRealRoot::new(crate::rootdata::FiniteRoot::new(coords), gamma.degree() - c * beta.degree())
}

fn level_zero_pairing(rs: &RootSystem, gamma: &AffineRealRoot, beta: &AffineRealRoot) -> i64 {
    let bid = rs.root_id(beta.finite()).expect("root");
    rs.coroot_pairing_int(gamma.finite().coords(), bid)
}

/// Writes `γ` as a nonnegative combination of `simple` by repeatedly
/// reflecting in a simple root it pairs positively with.
fn decomposes(rs: &RootSystem, simple: &[AffineRealRoot], gamma: &AffineRealRoot) -> bool {
    let mut cur = gamma.clone();
    for _ in 0..100_000 {
        if simple.contains(&cur) {
            return true;
        }
        let Some((beta, c)) = simple
            .iter()
            .map(|b| (b, level_zero_pairing(rs, &cur, b)))
            .find(|(_, c)| *c > 0)
        else {
            return false;
        };
        let coords: Vec<i64> = cur
            .finite()
            .coords()
            .iter()
            .zip(beta.finite().coords())
            .map(|(g, b)| g - c * b)
            .collect();
        if coords.iter().all(|&x| x == 0) {
            return false;
        }
        cur = AffineRealRoot::new(crate::rootdata::FiniteRoot::new(coords), cur.degree() - c * beta.degree());
        if !cur.is_positive(rs) {
            return false;
        }
    }
    false
}

impl IntegralCoxeterContext {
    /// Builds `W^Λ` with the default δ-degree bound
    /// `4 · denominator(κ) · ht(θ)`.
    pub fn new(rs: &RootSystem, lambda: &AffineWeight) -> Result<Self> {
        let kappa = lambda.kappa(rs);
        if kappa.is_zero() {
            return Err(Error::CriticalLevel);
        }
        let den = kappa.denom().to_i64().unwrap_or(i64::MAX / 64);
        let ht = rs.height(rs.highest_root()).expect("θ is a root");
        Self::with_bound(rs, lambda, 4 * den * ht)
    }

    /// Builds `W^Λ` from the slice `|n| <= bound`, doubling the bound up to
    /// twice if the closure check fails.
    pub fn with_bound(rs: &RootSystem, lambda: &AffineWeight, bound: i64) -> Result<Self> {
        if bound < 1 {
            return Err(Error::InvalidDegreeBound(bound));
        }
        let progressions = root_progressions(rs, lambda)?;
        let kappa = lambda.kappa(rs);
        let mut b = bound;
        for attempt in 0..3 {
            if attempt > 0 {
                b *= 2;
            }
            if let Some(simple_roots) = Self::simple_system(rs, &progressions, b) {
                return Ok(Self::assemble(rs, lambda, kappa, progressions, simple_roots, b));
            }
        }
        Err(Error::ClosureFailure { bound: b })
    }

    /// `β ∈ R^Λ₊` is simple iff `s_β` maps `R^Λ₊ ∖ {β}` into `R^Λ₊`. Since
    /// `|⟨γ, β∨⟩| <= 3` for `γ ≠ ±β`, only `γ` of degree at most `3·deg β`
    /// can leave the positive roots, so the test is exact for `3·deg β <= bound`.
    ///
    /// Along a direction `ᾱ`, a non-minimal root `ᾱ + (n + k·p)δ` is the
    /// minimal one plus `k` copies of `(ᾱ + nδ) + (−ᾱ + (p − n)δ)`, so only the
    /// minimal root of each direction can be simple, and closure needs checking
    /// on those alone.
    fn simple_system(
        rs: &RootSystem,
        progs: &[RootProgression],
        bound: i64,
    ) -> Option<Vec<AffineRealRoot>> {
        let pos = positive_slice(rs, progs, bound);
        let mut minimal: Vec<AffineRealRoot> = Vec::new();
        let mut seen_dirs = HashSet::new();
        for r in &pos {
            if seen_dirs.insert(r.finite().clone()) {
                minimal.push(r.clone());
            }
        }
        let simple: Vec<AffineRealRoot> = minimal
            .iter()
            .filter(|b| 3 * b.degree() <= bound)
            .filter(|b| {
                pos.iter()
                    .take_while(|g| g.degree() <= 3 * b.degree())
                    .all(|g| g == *b || reflect_root(rs, b, g).is_positive(rs))
            })
            .cloned()
            .collect();
        minimal
            .iter()
            .all(|g| decomposes(rs, &simple, g))
            .then_some(simple)
    }

    fn assemble(
        rs: &RootSystem,
        lambda: &AffineWeight,
        kappa: Rational,
        progressions: Vec<RootProgression>,
        simple_roots: Vec<AffineRealRoot>,
        slice_bound: i64,
    ) -> Self {
        let generators: Vec<ExtendedWeylElement> = simple_roots
            .iter()
            .map(|b| ExtendedWeylElement::reflection(rs, b).expect("root"))
            .collect();
        let r = simple_roots.len();
        let cartan = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| level_zero_pairing(rs, &simple_roots[j], &simple_roots[i]))
                    .collect()
            })
            .collect();
        let coxeter = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let prod = generators[i].compose(&generators[j]);
                        let mut p = prod.clone();
                        for k in 1..=6u32 {
                            if p.is_identity() {
                                return Some(k);
                            }
                            p = p.compose(&prod);
                        }
                        None
                    })
                    .collect()
            })
            .collect();
        IntegralCoxeterContext {
            rs: rs.clone(),
            lambda: lambda.clone(),
            shifted: lambda.plus_rho(rs),
            kappa,
            progressions,
            simple_roots,
            generators,
            cartan,
            coxeter,
            slice_bound,
            bruhat_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lambda(&self) -> &AffineWeight {
        &self.lambda
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn progressions(&self) -> &[RootProgression] {
        &self.progressions
    }

    pub fn simple_roots(&self) -> &[AffineRealRoot] {
        &self.simple_roots
    }

    pub fn generator_reflections(&self) -> &[ExtendedWeylElement] {
        &self.generators
    }

    /// `⟨β_j, β_i∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Orders `m(i, j)` of `s_i s_j`; `None` is infinite order.
    pub fn coxeter_matrix(&self) -> &[Vec<Option<u32>>] {
        &self.coxeter
    }

    pub fn slice_bound(&self) -> i64 {
        self.slice_bound
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// `⟨Λ+ρ, β_i∨⟩` for each simple root.
    pub fn simple_pairings(&self) -> Vec<Rational> {
        self.simple_roots
            .iter()
            .map(|b| affine_pairing(&self.rs, &self.shifted, b).expect("root"))
            .collect()
    }

    fn is_negative(&self, alpha: &AffineRealRoot) -> bool {
        !alpha.is_positive(&self.rs)
    }

    /// `#{α ∈ R^Λ₊ : w(α) < 0}` counted directly on the progressions.
    fn inversion_count(&self, w: &ExtendedWeylElement) -> usize {
        let rs = &self.rs;
        let mut total = 0i64;
        for p in &self.progressions {
            let Some((first, period)) = p.integral else {
                continue;
            };
            let root = &rs.roots()[p.root_id];
            let img = w.finite_part().apply_int(root.coords());
            let img_id = rs.root_id_of_coords(&img).expect("Weyl group permutes roots");
            let c = rs.inner_int_exact(&img, w.translation_part());
            let lo = if rs.is_positive_id(p.root_id) { 0 } else { 1 };
            let hi = if rs.is_positive_id(img_id) { c - 1 } else { c };
            total += count_in_range(first, period, lo, hi);
        }
        total as usize
    }

    /// Whether `w` maps `R^Λ` onto itself.
    fn preserves_integral_roots(&self, w: &ExtendedWeylElement) -> bool {
        let rs = &self.rs;
        self.progressions.iter().all(|p| {
            let root = &rs.roots()[p.root_id];
            let img = w.finite_part().apply_int(root.coords());
            let img_id = rs.root_id_of_coords(&img).expect("Weyl group permutes roots");
            let c = rs.inner_int_exact(&img, w.translation_part());
            match (p.integral, self.progressions[img_id].integral) {
                (None, None) => true,
                (Some((f1, p1)), Some((f2, p2))) => p1 == p2 && (f1 - c - f2).rem_euclid(p1) == 0,
                _ => false,
            }
        })
    }

    fn check_generator(&self, s: usize) -> Result<()> {
        if s < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: s,
                rank: self.rank(),
            })
        }
    }

    /// The element `s_{i_1} ⋯ s_{i_k}` (0-based indices).
    pub fn element_from_word(&self, word: &[usize]) -> Result<IntegralWeylElement> {
        for &s in word {
            self.check_generator(s)?;
        }
        let w = self.from_word(word);
        let canonical = self.reduced_word(&w);
        Ok(IntegralWeylElement {
            element: w,
            word: canonical,
        })
    }

    /// Validates membership in `W^Λ` by greedy descent and round trip.
    pub fn element(&self, w: &ExtendedWeylElement) -> Result<IntegralWeylElement> {
        if w.finite_part().dim() != self.rs.rank() || !self.preserves_integral_roots(w) {
            return Err(Error::NotInIntegralWeylGroup);
        }
        let word = self.reduced_word(w);
        if &self.from_word(&word) != w {
            return Err(Error::NotInIntegralWeylGroup);
        }
        Ok(IntegralWeylElement {
            element: w.clone(),
            word,
        })
    }

    pub fn identity_element(&self) -> IntegralWeylElement {
        IntegralWeylElement {
            element: self.identity(),
            word: Vec::new(),
        }
    }

    /// `ℓ_Λ(w)` and the right descent set `{i : w(β_i) < 0}`.
    pub fn length_and_descents(&self, w: &ExtendedWeylElement) -> Result<(usize, Vec<usize>)> {
        let w = self.element(w)?;
        Ok((w.length(), self.right_descents(&w.element)))
    }

    pub fn reduced_word_checked(&self, w: &ExtendedWeylElement) -> Result<Vec<usize>> {
        Ok(self.element(w)?.word)
    }

    pub fn bruhat_leq_checked(&self, x: &ExtendedWeylElement, y: &ExtendedWeylElement) -> Result<bool> {
        self.element(x)?;
        self.element(y)?;
        Ok(self.bruhat_leq(x, y))
    }

    fn wrap(&self, w: ExtendedWeylElement) -> IntegralWeylElement {
        let word = self.reduced_word(&w);
        IntegralWeylElement { element: w, word }
    }

    fn sorted(&self, elems: impl IntoIterator<Item = ExtendedWeylElement>) -> Vec<IntegralWeylElement> {
        let mut out: Vec<IntegralWeylElement> = elems.into_iter().map(|w| self.wrap(w)).collect();
        out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        out
    }

    /// All elements of length at most `max_len`, by breadth-first search.
    pub fn ball(&self, max_len: usize) -> Vec<IntegralWeylElement> {
        let mut seen: HashSet<ExtendedWeylElement> = HashSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut all = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.rank() {
                    if self.is_right_descent(w, s) {
                        continue;
                    }
                    let ws = self.mul_right(w, s);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        self.sorted(all)
    }

    /// `{y : y ≤_Λ w}` sorted by length, then reduced word.
    pub fn interval_below(&self, w: &IntegralWeylElement) -> Vec<IntegralWeylElement> {
        self.sorted(self.lower_set(&w.element))
    }

    /// `|overline{y(Λ+ρ)}|²`.
    pub fn finite_norm_sq(&self, y: &ExtendedWeylElement) -> Rational {
        let x = y.apply_finite(self.shifted.finite(), &self.kappa);
        self.rs.norm_sq(&x)
    }

    /// `{y ≥_Λ w : |overline{y(Λ+ρ)}|² <= norm_bound}`, for `κ > 0`.
    ///
    /// When `Λ+ρ` pairs nonnegatively with every simple root the norm is
    /// monotone along the weak order, so a pruned search from the identity is
    /// complete. Otherwise the search depth is capped by
    /// `Σ_{ᾱ>0} (|⟨μ, ᾱ⟩| + 1)` with `κ|μ| <= √bound + |λ̄+ρ̄|`.
    pub fn above_norm_bounded(
        &self,
        w: &IntegralWeylElement,
        norm_bound: &Rational,
    ) -> Result<Vec<IntegralWeylElement>> {
        if !self.kappa.is_positive() {
            return Err(Error::NonPositiveLevel);
        }
        let dominant = self.simple_pairings().iter().all(|p| !p.is_negative());
        let depth_cap = if dominant { usize::MAX } else { self.length_cap(norm_bound) };
        let mut found = Vec::new();
        let e = self.identity();
        let mut seen: HashSet<ExtendedWeylElement> = HashSet::new();
        let mut queue: VecDeque<(ExtendedWeylElement, usize)> = VecDeque::new();
        seen.insert(e.clone());
        queue.push_back((e, 0));
        while let Some((y, depth)) = queue.pop_front() {
            let within = &self.finite_norm_sq(&y) <= norm_bound;
            if within {
                found.push(y.clone());
            } else if dominant {
                continue;
            }
            if depth >= depth_cap {
                continue;
            }
            for s in 0..self.rank() {
                if self.is_right_descent(&y, s) {
                    continue;
                }
                let ys = self.mul_right(&y, s);
                if seen.insert(ys.clone()) {
                    queue.push_back((ys, depth + 1));
                }
            }
        }
        let above = found.into_iter().filter(|y| self.bruhat_leq(&w.element, y));
        Ok(self.sorted(above))
    }

    fn length_cap(&self, norm_bound: &Rational) -> usize {
        // Integer upper bounds for square roots keep the cap exact-safe.
        let sqrt_up = |r: &Rational| -> BigInt {
            let c = r.ceil().to_integer().max(BigInt::zero());
            c.sqrt() + 1
        };
        let x_norm = self.rs.norm_sq(self.shifted.finite());
        let numer = sqrt_up(norm_bound) + sqrt_up(&x_norm);
        let mu_bound = Rational::from_integer(numer) / &self.kappa;
        // |⟨μ, ᾱ⟩| <= |μ||ᾱ| <= |μ|·√2 < 3|μ|/2
        let per_root: BigInt = (mu_bound * crate::rational::rat(3, 2)).ceil().to_integer() + 1;
        let cap: BigInt = per_root * BigInt::from(self.rs.num_positive_roots());
        cap.to_usize().unwrap_or(usize::MAX)
    }

    /// Roots `α > 0` with `⟨Λ+ρ, α∨⟩ = 0`; at most one degree per finite root.
    pub fn stabilizer_roots(&self) -> Vec<AffineRealRoot> {
        let mut out: Vec<AffineRealRoot> = self
            .progressions
            .iter()
            .filter_map(|p| {
                let n = p.zero_degree()?;
                let alpha = AffineRealRoot::new(self.rs.roots()[p.root_id].clone(), n);
                alpha.is_positive(&self.rs).then_some(alpha)
            })
            .collect();
        out.sort();
        out
    }

    /// All elements of the finite group `W^Λ_0`.
    pub fn stabilizer_elements(&self) -> Result<Vec<ExtendedWeylElement>> {
        let gens: Vec<ExtendedWeylElement> = self
            .stabilizer_roots()
            .iter()
            .map(|a| ExtendedWeylElement::reflection(&self.rs, a))
            .collect::<Result<_>>()?;
        let e = self.identity();
        let mut seen: HashSet<ExtendedWeylElement> = HashSet::from([e.clone()]);
        let mut order = vec![e.clone()];
        let mut queue = VecDeque::from([e]);
        while let Some(u) = queue.pop_front() {
            for g in &gens {
                let v = g.compose(&u);
                if seen.insert(v.clone()) {
                    if seen.len() > STABILIZER_CAP {
                        return Err(Error::Internal("W^Lambda_0 enumeration exceeded cap".into()));
                    }
                    order.push(v.clone());
                    queue.push_back(v);
                }
            }
        }
        Ok(order)
    }

    /// Generators of `W^Λ_0` and whether `w` is longest / shortest in `w W^Λ_0`.
    pub fn stabilizer_and_coset(&self, w: &IntegralWeylElement) -> Result<CosetInfo> {
        let roots = self.stabilizer_roots();
        let generators = roots
            .iter()
            .map(|a| ExtendedWeylElement::reflection(&self.rs, a))
            .collect::<Result<Vec<_>>>()?;
        let elems = self.stabilizer_elements()?;
        let lw = w.length();
        let lengths: Vec<usize> = elems
            .iter()
            .map(|u| self.inversion_count(&w.element.compose(u)))
            .collect();
        Ok(CosetInfo {
            stabilizer_roots: roots,
            stabilizer_generators: generators,
            stabilizer_order: elems.len(),
            is_longest: lengths.iter().all(|&l| l <= lw),
            is_shortest: lengths.iter().all(|&l| l >= lw),
        })
    }

    /// `y ∘ Λ`.
    pub fn dot_image(&self, y: &ExtendedWeylElement) -> AffineWeight {
        y.dot_apply(&self.rs, &self.lambda)
    }
}

impl CoxeterSystem for IntegralCoxeterContext {
    type Element = ExtendedWeylElement;

    fn num_generators(&self) -> usize {
        self.simple_roots.len()
    }

    fn identity(&self) -> ExtendedWeylElement {
        ExtendedWeylElement::identity(self.rs.rank())
    }

    fn length(&self, w: &ExtendedWeylElement) -> usize {
        self.inversion_count(w)
    }

    fn is_right_descent(&self, w: &ExtendedWeylElement, s: usize) -> bool {
        self.is_negative(&w.root_action(&self.rs, &self.simple_roots[s]))
    }

    fn is_left_descent(&self, w: &ExtendedWeylElement, s: usize) -> bool {
        self.is_negative(&w.inverse().root_action(&self.rs, &self.simple_roots[s]))
    }

    fn mul_right(&self, w: &ExtendedWeylElement, s: usize) -> ExtendedWeylElement {
        w.compose(&self.generators[s])
    }

    fn mul_left(&self, s: usize, w: &ExtendedWeylElement) -> ExtendedWeylElement {
        self.generators[s].compose(w)
    }

    fn bruhat_leq(&self, x: &ExtendedWeylElement, y: &ExtendedWeylElement) -> bool {
        let key = (x.clone(), y.clone());
        if let Some(&b) = self.bruhat_memo.lock().expect("memo lock").get(&key) {
            return b;
        }
        let (lx, ly) = (self.length(x), self.length(y));
        let b = if lx > ly {
            false
        } else if lx == ly {
            x == y
        } else {
            let s = (0..self.rank())
                .find(|&s| self.is_right_descent(y, s))
                .expect("nonidentity element has a descent");
            let ys = self.mul_right(y, s);
            if self.is_right_descent(x, s) {
                self.bruhat_leq(&self.mul_right(x, s), &ys)
            } else {
                self.bruhat_leq(x, &ys)
            }
        };
        self.bruhat_memo.lock().expect("memo lock").insert(key, b);
        b
    }
}
