//! Affine weights `λ = λ̄ + kΛ_0 + mδ`, real affine roots `ᾱ + nδ` and the
//! extended affine Weyl group.
//!
//! An [`ExtendedWeylElement`] `(v, μ)` acts as `t_μ ∘ v`, where
//!
//! ```text
//! t_μ(λ) = λ + ⟨λ,K⟩μ − (⟨λ,μ⟩ + ½|μ|²⟨λ,K⟩)δ
//! ```
//!
//! and so `(v₁, μ₁)(v₂, μ₂) = (v₁v₂, μ₁ + v₁μ₂)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, ints_to_rationals, to_i64, vec_add, vec_scale, vec_sub, Rational};
use crate::rootdata::{FiniteRoot, RootSystem, WeylMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    finite: Vec<Rational>,
    level: Rational,
    delta: Rational,
}

impl AffineWeight {
    pub fn new(finite: Vec<Rational>, level: Rational, delta: Rational) -> Self {
        AffineWeight {
            finite,
            level,
            delta,
        }
    }

    /// `λ̄ + (κ − h∨)Λ_0`, the weight of `ĥ*_κ` with finite part `λ̄`.
    pub fn at_kappa(rs: &RootSystem, finite: Vec<Rational>, kappa: &Rational) -> Result<Self> {
        rs.check_dim(&finite)?;
        Ok(AffineWeight {
            finite,
            level: kappa - int(rs.dual_coxeter()),
            delta: Rational::zero(),
        })
    }

    pub fn finite(&self) -> &[Rational] {
        &self.finite
    }

    pub fn level(&self) -> &Rational {
        &self.level
    }

    pub fn delta_coeff(&self) -> &Rational {
        &self.delta
    }

    /// `κ = ⟨λ + ρ, K⟩`.
    pub fn kappa(&self, rs: &RootSystem) -> Rational {
        &self.level + int(rs.dual_coxeter())
    }

    /// `λ + ρ` with `ρ = ρ̄ + h∨Λ_0`.
    pub fn plus_rho(&self, rs: &RootSystem) -> AffineWeight {
        AffineWeight {
            finite: vec_add(&self.finite, rs.rho()),
            level: self.kappa(rs),
            delta: self.delta.clone(),
        }
    }

    pub fn minus_rho(&self, rs: &RootSystem) -> AffineWeight {
        AffineWeight {
            finite: vec_sub(&self.finite, rs.rho()),
            level: &self.level - int(rs.dual_coxeter()),
            delta: self.delta.clone(),
        }
    }

    pub fn norm_sq_finite(&self, rs: &RootSystem) -> Rational {
        rs.norm_sq(&self.finite)
    }

    /// `|λ̄|² + 2·level·δ-coefficient`, using `(Λ_0, δ) = 1`.
    pub fn norm_sq_affine(&self, rs: &RootSystem) -> Rational {
        self.norm_sq_finite(rs) + int(2) * &self.level * &self.delta
    }
}

/// A real affine root `ᾱ + nδ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRealRoot {
    finite: FiniteRoot,
    degree: i64,
}

impl AffineRealRoot {
    pub fn new(finite: FiniteRoot, degree: i64) -> Self {
        AffineRealRoot { finite, degree }
    }

    pub fn finite(&self) -> &FiniteRoot {
        &self.finite
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn neg(&self) -> Self {
        AffineRealRoot {
            finite: self.finite.neg(),
            degree: -self.degree,
        }
    }

    pub fn is_positive(&self, rs: &RootSystem) -> bool {
        self.degree > 0
            || (self.degree == 0
                && rs
                    .root_id(&self.finite)
                    .is_some_and(|id| rs.is_positive_id(id)))
    }
}

/// `⟨λ, α∨⟩ = ⟨λ̄, ᾱ∨⟩ + n·(2/(ᾱ,ᾱ))·level(λ)`.
pub fn affine_pairing(rs: &RootSystem, lam: &AffineWeight, alpha: &AffineRealRoot) -> Result<Rational> {
    let id = rs
        .root_id(alpha.finite())
        .ok_or_else(|| Error::NotARoot(rs.lie_type().to_string()))?;
    rs.check_dim(lam.finite())?;
    Ok(rs.coroot_pairing_id(lam.finite(), id)
        + int(alpha.degree) * rs.coroot_scale_id(id) * lam.level())
}

/// An element `t_μ v` of `W̃ = W ⋉ P∨`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedWeylElement {
    finite: WeylMatrix,
    translation: Vec<i64>,
}

impl ExtendedWeylElement {
    pub fn identity(rank: usize) -> Self {
        ExtendedWeylElement {
            finite: WeylMatrix::identity(rank),
            translation: vec![0; rank],
        }
    }

    pub fn from_finite(finite: WeylMatrix) -> Self {
        let rank = finite.dim();
        ExtendedWeylElement {
            finite,
            translation: vec![0; rank],
        }
    }

    /// `t_μ`; `μ` must lie in the coweight lattice, i.e. `⟨α_i, μ⟩ ∈ ℤ`.
    pub fn translation(rs: &RootSystem, mu: &[Rational]) -> Result<Self> {
        Self::new(rs, WeylMatrix::identity(rs.rank()), mu)
    }

    /// `t_μ ∘ v`.
    pub fn new(rs: &RootSystem, finite: WeylMatrix, mu: &[Rational]) -> Result<Self> {
        rs.check_dim(mu)?;
        for i in 0..rs.rank() {
            let a = rs.simple_roots()[i].to_weight();
            if !rs.inner(&a, mu).is_integer() {
                return Err(Error::NotInCoweightLattice);
            }
        }
        let translation = mu
            .iter()
            .map(|m| to_i64(m).ok_or(Error::NotInCoweightLattice))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtendedWeylElement {
            finite,
            translation,
        })
    }

    pub fn finite_part(&self) -> &WeylMatrix {
        &self.finite
    }

    pub fn translation_part(&self) -> &[i64] {
        &self.translation
    }

    pub fn translation_weight(&self) -> Vec<Rational> {
        ints_to_rationals(&self.translation)
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.translation.iter().all(|&m| m == 0)
    }

    /// `self · other`.
    pub fn compose(&self, other: &ExtendedWeylElement) -> ExtendedWeylElement {
        let moved = self.finite.apply_int(&other.translation);
        ExtendedWeylElement {
            finite: self.finite.compose(&other.finite),
            translation: self.translation.iter().zip(&moved).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> ExtendedWeylElement {
        let inv = self.finite.inverse();
        let moved = inv.apply_int(&self.translation);
        ExtendedWeylElement {
            finite: inv,
            translation: moved.into_iter().map(|m| -m).collect(),
        }
    }

    pub fn apply(&self, rs: &RootSystem, lam: &AffineWeight) -> AffineWeight {
        let moved = self.finite.apply(lam.finite());
        let mu = self.translation_weight();
        let k = lam.level();
        let pair = rs.inner(&moved, &mu);
        let half_norm = rs.norm_sq(&mu) / int(2);
        AffineWeight {
            finite: vec_add(&moved, &vec_scale(k, &mu)),
            level: k.clone(),
            delta: lam.delta_coeff() - (pair + half_norm * k),
        }
    }

    /// Finite part of `w(λ)` only; skips the δ bookkeeping.
    pub fn apply_finite(&self, finite: &[Rational], level: &Rational) -> Vec<Rational> {
        let moved = self.finite.apply(finite);
        moved
            .iter()
            .zip(&self.translation)
            .map(|(x, &m)| x + level * int(m))
            .collect()
    }

    /// `w ∘ λ = w(λ + ρ) − ρ`.
    pub fn dot_apply(&self, rs: &RootSystem, lam: &AffineWeight) -> AffineWeight {
        self.apply(rs, &lam.plus_rho(rs)).minus_rho(rs)
    }

    /// `(t_μ v)(ᾱ + nδ) = vᾱ + (n − ⟨vᾱ, μ⟩)δ`.
    pub fn root_action(&self, rs: &RootSystem, alpha: &AffineRealRoot) -> AffineRealRoot {
        let moved = self.finite.apply_root(alpha.finite());
        let shift = rs.inner_int_exact(moved.coords(), &self.translation);
        AffineRealRoot::new(moved, alpha.degree() - shift)
    }

    /// The reflection `s_{ᾱ+nδ} = t_{−nᾱ∨} s_ᾱ`.
    pub fn reflection(rs: &RootSystem, alpha: &AffineRealRoot) -> Result<Self> {
        let id = rs
            .root_id(alpha.finite())
            .ok_or_else(|| Error::NotARoot(rs.lie_type().to_string()))?;
        let check = rs.coroot_coords(id);
        Ok(ExtendedWeylElement {
            finite: rs.reflection_matrix(id),
            translation: check.iter().map(|c| -alpha.degree() * c).collect(),
        })
    }
}

/// The highest weight `λ̄` of the image of `M(λ)` under the "−" reduction.
pub fn minus_reduction_hw(lam: &AffineWeight) -> Vec<Rational> {
    lam.finite().to_vec()
}

/// The finite part of `t_{−ρ∨} ∘ λ`, the highest weight of the "+" reduction.
pub fn plus_reduction_hw(rs: &RootSystem, lam: &AffineWeight) -> Vec<Rational> {
    let neg_rho_check: Vec<Rational> = rs.rho_check().iter().map(|r| -r).collect();
    let t = ExtendedWeylElement::translation(rs, &neg_rho_check).expect("ρ∨ is a coweight");
    t.dot_apply(rs, lam).finite().to_vec()
}

/// `λ̄ ↦ −w_0(λ̄)`.
pub fn dual_hw_map(rs: &RootSystem, lam_bar: &[Rational]) -> Result<Vec<Rational>> {
    rs.check_dim(lam_bar)?;
    Ok(rs.w0().apply(lam_bar).into_iter().map(|x| -x).collect())
}

/// `−κρ̄∨`, the highest weight of the vacuum module of the W-algebra.
pub fn vacuum_weight(rs: &RootSystem, kappa: &Rational) -> Vec<Rational> {
    rs.rho_check().iter().map(|r| -(kappa * r)).collect()
}
