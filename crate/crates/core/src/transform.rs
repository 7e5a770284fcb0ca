//! Closed-form cohomological Fourier–Mukai transform on a reflexive K3
//! surface and its inverse.
//!
//! For `u = (ρ, c₁, σ)` with `d = c₁·H`:
//!
//! ```text
//! ρ̂  = -3ρ + 2σ + ℓ·c₁
//! ĉ₁ = (ℓ·c₁ + 2d) Ĥ + (ρ + d - σ) ℓ̂ - Ψ*c₁
//! σ̂  = 2ρ - 3σ - ℓ·c₁
//! ```
//!
//! `Ψ*` is the identity on coordinates (`X` and `X̂` share one lattice). The
//! backward transform, with kernel `Q*`, is the same formula with the roles of
//! `(H, ℓ)` and `(Ĥ, ℓ̂)` exchanged; it was obtained from the GRR oracle in
//! [`crate::kunneth`] and is cross-checked against it in the tests.
//!
//! Outputs are Mukai vectors of the whole transform complex (alternating sum);
//! a sheaf-level vector always requires an explicit WIT index.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::lattice::{DivisorClass, MukaiVector, WitIndex};
use crate::reflexive::ReflexiveSurface;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `X → X̂`, kernel `Q`.
    Forward,
    /// `X̂ → X`, kernel `Q*`.
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FmContext {
    surface: ReflexiveSurface,
    direction: Direction,
}

impl FmContext {
    pub fn new(surface: ReflexiveSurface, direction: Direction) -> Self {
        FmContext { surface, direction }
    }

    pub fn forward(surface: ReflexiveSurface) -> Self {
        Self::new(surface, Direction::Forward)
    }

    pub fn surface(&self) -> &ReflexiveSurface {
        &self.surface
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// `(polarization, ℓ)` of the source surface in this direction.
    pub fn source(&self) -> (&DivisorClass, &DivisorClass) {
        match self.direction {
            Direction::Forward => (self.surface.h(), self.surface.ell()),
            Direction::Backward => (self.surface.h_hat(), self.surface.ell_hat()),
        }
    }

    /// `(polarization, ℓ)` of the target surface in this direction.
    pub fn target(&self) -> (&DivisorClass, &DivisorClass) {
        match self.direction {
            Direction::Forward => (self.surface.h_hat(), self.surface.ell_hat()),
            Direction::Backward => (self.surface.h(), self.surface.ell()),
        }
    }

    pub fn reversed(&self) -> FmContext {
        FmContext::new(self.surface.clone(), self.direction.reversed())
    }
}

fn closed_form(
    source: (&DivisorClass, &DivisorClass),
    target: (&DivisorClass, &DivisorClass),
    u: &MukaiVector,
) -> Result<MukaiVector> {
    let (h, ell) = source;
    let (h_hat, ell_hat) = target;
    let c = &u.c1;
    let d = c.intersect(h)?;
    let lc = c.intersect(ell)?;
    let two = BigInt::from(2);
    let three = BigInt::from(3);

    let r_hat = -&three * &u.r + &two * &u.s + &lc;
    let c_hat = &(&h_hat.scale(&(&lc + &two * &d)) + &ell_hat.scale(&(&u.r + &d - &u.s))) - c;
    let s_hat = &two * &u.r - &three * &u.s - &lc;
    Ok(MukaiVector::new(r_hat, c_hat, s_hat))
}

/// Mukai vector `û` of the transform complex of `u`.
pub fn fm_vector(ctx: &FmContext, u: &MukaiVector) -> Result<MukaiVector> {
    closed_form(ctx.source(), ctx.target(), u)
}

/// The unique `u` with `fm_vector(ctx, u) = w`. The composite of the two
/// transforms is a shift by `[-2]`, which carries no sign.
pub fn inverse_fm_vector(ctx: &FmContext, w: &MukaiVector) -> Result<MukaiVector> {
    let back = ctx.reversed();
    closed_form(back.source(), back.target(), w)
}

/// Sheaf-level vector `(-1)^i û` of the transform of a WIT_i sheaf, together
/// with the WIT index `2 - i` of the transform.
pub fn wit_sheaf_vector(u_hat: &MukaiVector, i: WitIndex) -> (MukaiVector, WitIndex) {
    (u_hat.scale(&i.sign()), i.flipped())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub u_hat: MukaiVector,
}

impl TransformResult {
    pub fn new(ctx: &FmContext, u: &MukaiVector) -> Result<Self> {
        Ok(TransformResult {
            u_hat: fm_vector(ctx, u)?,
        })
    }

    pub fn wit_vector(&self, i: WitIndex) -> MukaiVector {
        wit_sheaf_vector(&self.u_hat, i).0
    }
}

pub fn degree(u: &MukaiVector, polarization: &DivisorClass) -> Result<BigInt> {
    u.c1.intersect(polarization)
}

/// Euler characteristics and degrees on both sides of the transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationReport {
    pub chi: BigInt,
    pub chi_hat: BigInt,
    pub degree: BigInt,
    pub degree_hat: BigInt,
    /// Values for the sheaf-level transform of a WIT₁ sheaf.
    pub chi_wit1: BigInt,
    pub degree_wit1: BigInt,
}

impl PreservationReport {
    pub fn chi_preserved(&self) -> bool {
        self.chi_wit1 == self.chi
    }

    pub fn degree_preserved(&self) -> bool {
        self.degree_wit1 == self.degree
    }
}

pub fn preservation_report(ctx: &FmContext, u: &MukaiVector) -> Result<PreservationReport> {
    let u_hat = fm_vector(ctx, u)?;
    let (h, _) = ctx.source();
    let (h_hat, _) = ctx.target();
    let (wit1, _) = wit_sheaf_vector(&u_hat, WitIndex::ONE);
    Ok(PreservationReport {
        chi: u.euler_char(),
        chi_hat: u_hat.euler_char(),
        degree: degree(u, h)?,
        degree_hat: degree(&u_hat, h_hat)?,
        chi_wit1: wit1.euler_char(),
        degree_wit1: degree(&wit1, h_hat)?,
    })
}

/// The lattice-checkable hypotheses for a μ-stable bundle with Mukai vector
/// `u` to be IT₁: degree zero and `v(F*) ≠ (2, ℓ, -3)`. μ-stability itself is
/// taken as given.
pub fn it1_hypotheses(ctx: &FmContext, u: &MukaiVector) -> Result<bool> {
    let (h, ell) = ctx.source();
    let v = MukaiVector::new(2.into(), ell.clone(), (-3).into());
    Ok(degree(u, h)?.is_zero() && u.dual() != v)
}

/// Writes `c = a·pol + b·ell` when `c` lies in the integral span of an
/// orthogonal pair with `pol² = 2`, `ell² = -12`.
pub fn span_coefficients(
    c: &DivisorClass,
    pol: &DivisorClass,
    ell: &DivisorClass,
) -> Result<Option<(BigInt, BigInt)>> {
    let cp = c.intersect(pol)?;
    let cl = c.intersect(ell)?;
    let pp = pol.square();
    let ll = ell.square();
    if pp.is_zero() || ll.is_zero() || !(&cp % &pp).is_zero() || !(&cl % &ll).is_zero() {
        return Ok(None);
    }
    let a = cp / pp;
    let b = cl / ll;
    let rebuilt = &pol.scale(&a) + &ell.scale(&b);
    Ok((rebuilt == *c).then_some((a, b)))
}
