//! Central charge, conformal weights and normalized characters of the
//! W-algebra `W_κ(g)`: Verma modules, the vacuum algebra and the two
//! Kazhdan–Lusztig type formulas for irreducible modules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::affine::AffineWeight;
use crate::error::{Error, Result};
use crate::integral::{domain_membership, is_nondegenerate, IntegralCoxeterContext, IntegralWeylElement, Sign};
use crate::kl::KlSession;
use crate::rational::{int, vec_add, Rational};
use crate::rootdata::{LieType, RootSystem};
use crate::series::{eta_inverse_power, inverse_product, QSeries};

/// Extra q-units enumerated beyond the requested order in the "+" formula.
pub const DEFAULT_NORM_MARGIN: i64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    Plus,
    Minus,
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reduction::Plus => "plus",
            Reduction::Minus => "minus",
        })
    }
}

impl FromStr for Reduction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plus" | "+" => Ok(Reduction::Plus),
            "minus" | "-" => Ok(Reduction::Minus),
            _ => Err(format!("unknown reduction `{s}` (expected plus or minus)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterMetadata {
    pub algebra: LieType,
    pub kappa: Rational,
    /// `Λ̄` (or `λ̄` for Verma characters), fundamental-weight coordinates.
    pub weight: Vec<Rational>,
    /// Highest weight of the module, `overline{w∘Λ}`.
    pub highest_weight: Vec<Rational>,
    pub word: Vec<usize>,
    pub reduction: Option<Reduction>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterResult {
    pub series: QSeries,
    pub central_charge: Rational,
    pub conformal_weight: Rational,
    pub metadata: CharacterMetadata,
    pub warnings: Vec<String>,
}

fn nonzero_kappa(kappa: &Rational) -> Result<()> {
    if kappa.is_zero() {
        Err(Error::CriticalLevel)
    } else {
        Ok(())
    }
}

/// `c(κ) = l − 12(κ|ρ∨|² − 2(ρ, ρ∨) + |ρ|²/κ)`.
pub fn central_charge(rs: &RootSystem, kappa: &Rational) -> Result<Rational> {
    nonzero_kappa(kappa)?;
    let rho = rs.rho();
    let rho_check = rs.rho_check();
    let bracket = kappa * rs.norm_sq(rho_check) - int(2) * rs.inner(rho, rho_check)
        + rs.norm_sq(rho) / kappa;
    Ok(int(rs.rank() as i64) - int(12) * bracket)
}

/// `Δ_λ = |λ+ρ|²/2κ − l/24 + c(κ)/24`.
pub fn conformal_weight(rs: &RootSystem, lam_bar: &[Rational], kappa: &Rational) -> Result<Rational> {
    rs.check_dim(lam_bar)?;
    let c = central_charge(rs, kappa)?;
    let shifted = vec_add(lam_bar, rs.rho());
    Ok(rs.norm_sq(&shifted) / (int(2) * kappa) - int(rs.rank() as i64) / int(24) + c / int(24))
}

/// `q^{|λ+ρ|²/2κ} / η^l` through `q^order` above the offset.
pub fn verma_character(
    rs: &RootSystem,
    lam_bar: &[Rational],
    kappa: &Rational,
    order: usize,
) -> Result<CharacterResult> {
    let delta = conformal_weight(rs, lam_bar, kappa)?;
    let c = central_charge(rs, kappa)?;
    let shifted = vec_add(lam_bar, rs.rho());
    let exponent = rs.norm_sq(&shifted) / (int(2) * kappa);
    let series = eta_inverse_power(rs.rank(), order).shift(&exponent);
    Ok(CharacterResult {
        series,
        central_charge: c,
        conformal_weight: delta,
        metadata: CharacterMetadata {
            algebra: rs.lie_type(),
            kappa: kappa.clone(),
            weight: lam_bar.to_vec(),
            highest_weight: lam_bar.to_vec(),
            word: Vec::new(),
            reduction: None,
        },
        warnings: Vec::new(),
    })
}

/// Graded dimension `∏_i ∏_{m ≥ d_i+1} (1 − q^m)^{−1}` of `W_κ(g)`.
pub fn vacuum_algebra_character(rs: &RootSystem, order: usize) -> QSeries {
    let parts = rs
        .exponents()
        .iter()
        .flat_map(|&d| (d as usize + 1)..=order);
    let coeffs = inverse_product(parts, order)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    QSeries::new(Rational::zero(), Rational::one(), coeffs)
}

/// `|overline{y(Λ+ρ)}|² / 2κ`.
fn orbit_exponent(ctx: &IntegralCoxeterContext, y: &IntegralWeylElement) -> Rational {
    ctx.finite_norm_sq(y.element()) / (int(2) * ctx.kappa())
}

/// `η^{−l} Σ_y c_y q^{e_y}` through `q^order` above `e_w`.
fn assemble(
    ctx: &IntegralCoxeterContext,
    w: &IntegralWeylElement,
    terms: Vec<(IntegralWeylElement, BigInt)>,
    order: usize,
    reduction: Reduction,
    warnings: Vec<String>,
) -> Result<CharacterResult> {
    let rs = ctx.root_system();
    let kappa = ctx.kappa();
    let e_w = orbit_exponent(ctx, w);
    let shifts: Vec<(Rational, BigInt)> = terms
        .iter()
        .map(|(y, c)| (orbit_exponent(ctx, y) - &e_w, c.clone()))
        .collect();
    if shifts.iter().any(|(d, _)| d.is_negative()) {
        return Err(Error::Internal("a summand lies below the leading exponent".into()));
    }
    let den = shifts
        .iter()
        .fold(BigInt::one(), |acc, (d, _)| acc.lcm(d.denom()));
    let den = den
        .to_usize()
        .ok_or_else(|| Error::Internal("exponent denominator too large".into()))?;
    let len = order * den + 1;
    let mut coeffs = vec![Rational::zero(); len];
    for (d, c) in &shifts {
        let idx = (d * int(den as i64)).to_integer();
        if let Some(i) = idx.to_usize().filter(|&i| i < len) {
            coeffs[i] += Rational::from_integer(c.clone());
        }
    }
    let step = Rational::new(BigInt::one(), BigInt::from(den));
    let sum = QSeries::new(e_w.clone(), step.clone(), coeffs);
    let series = sum.mul(&eta_inverse_power(rs.rank(), order).refine(&step)?)?;
    let highest_weight = ctx.dot_image(w.element()).finite().to_vec();
    let delta = conformal_weight(rs, &highest_weight, kappa)?;
    Ok(CharacterResult {
        series,
        central_charge: central_charge(rs, kappa)?,
        conformal_weight: delta,
        metadata: CharacterMetadata {
            algebra: rs.lie_type(),
            kappa: kappa.clone(),
            weight: ctx.lambda().finite().to_vec(),
            highest_weight,
            word: w.word().to_vec(),
            reduction: Some(reduction),
        },
        warnings,
    })
}

fn sign(ly: usize, lw: usize) -> BigInt {
    if (ly + lw) % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `ch L(γ_{overline{w∘Λ}}) = η^{−l} Σ_{y ≤ w} (−1)^{ℓ(y)−ℓ(w)} P_{y,w}(1) q^{|overline{y(Λ+ρ)}|²/2κ}`
/// for `Λ` antidominant and non-degenerate, `w` shortest in `w W^Λ_0`.
pub fn irreducible_character_minus(
    ctx: &IntegralCoxeterContext,
    w: &IntegralWeylElement,
    order: usize,
) -> Result<CharacterResult> {
    let rs = ctx.root_system();
    let lambda: &AffineWeight = ctx.lambda();
    if !is_nondegenerate(rs, lambda) {
        return Err(Error::Degenerate);
    }
    if !domain_membership(rs, lambda, Sign::Minus, false)? {
        return Err(Error::NotInDomain {
            sign: '-',
            forbidden: "{1, 2, ...}",
        });
    }
    if !ctx.stabilizer_and_coset(w)?.is_shortest {
        return Err(Error::NotShortestInCoset);
    }
    let mut warnings = Vec::new();
    if ctx.kappa().is_positive() {
        warnings.push(
            "kappa > 0: an antidominant weight has trivial W^Lambda, so the sum has the single term y = w"
                .to_string(),
        );
    }
    let mut session = KlSession::new(ctx);
    let lw = w.length();
    let terms = ctx
        .interval_below(w)
        .into_iter()
        .map(|y| {
            let p = session.kl_polynomial(y.element(), w.element()).eval_at_one();
            let c = sign(y.length(), lw) * p;
            (y, c)
        })
        .collect();
    assemble(ctx, w, terms, order, Reduction::Minus, warnings)
}

/// `ch L(γ_{overline{w∘Λ}}) = η^{−l} Σ_{y ≥ w} (−1)^{ℓ(y)−ℓ(w)} Q_{w,y}(1) q^{|overline{y(Λ+ρ)}|²/2κ}`
/// for `κ > 0`, `Λ` in `Dom_+` and non-degenerate, `w` longest in `w W^Λ_0`.
pub fn irreducible_character_plus(
    ctx: &IntegralCoxeterContext,
    w: &IntegralWeylElement,
    order: usize,
) -> Result<CharacterResult> {
    irreducible_character_plus_with_margin(ctx, w, order, DEFAULT_NORM_MARGIN)
}

/// As [`irreducible_character_plus`], enumerating `y` up to `margin` q-units
/// past the requested order.
pub fn irreducible_character_plus_with_margin(
    ctx: &IntegralCoxeterContext,
    w: &IntegralWeylElement,
    order: usize,
    margin: i64,
) -> Result<CharacterResult> {
    let rs = ctx.root_system();
    let lambda = ctx.lambda();
    if !ctx.kappa().is_positive() {
        return Err(Error::NonPositiveLevel);
    }
    if !is_nondegenerate(rs, lambda) {
        return Err(Error::Degenerate);
    }
    if !domain_membership(rs, lambda, Sign::Plus, false)? {
        return Err(Error::NotInDomain {
            sign: '+',
            forbidden: "{-1, -2, ...}",
        });
    }
    if !ctx.stabilizer_and_coset(w)?.is_longest {
        return Err(Error::NotLongestInCoset);
    }
    let e_w = orbit_exponent(ctx, w);
    let reach = &e_w + int(order as i64 + margin.max(0));
    let bound = int(2) * ctx.kappa() * reach;
    let ys = ctx.above_norm_bounded(w, &bound)?;
    let mut session = KlSession::new(ctx);
    let lw = w.length();
    let terms = ys
        .into_iter()
        .map(|y| {
            let q = session.inverse_kl(w.element(), y.element()).eval_at_one();
            let c = sign(y.length(), lw) * q;
            (y, c)
        })
        .collect();
    assemble(ctx, w, terms, order, Reduction::Plus, Vec::new())
}
