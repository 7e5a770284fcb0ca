//! Algebraic cohomology of `X × X̂` in Künneth form, the Chern character of the
//! kernel `Q`, and a Grothendieck–Riemann–Roch recomputation of the transform.
//!
//! `X̂` is identified with `X` through `Ψ`, so both factors use the basis of the
//! one shared Picard lattice. A class on the product is stored as a dense
//! matrix of coefficients on pure tensors `x_a ⊗ x̂_b`, where each factor's
//! basis is `1, e_1, ..., e_ρ, [pt]`, plus the coefficient of `ι`, the
//! `H² ⊗ H²` component of the graph of `Ψ`. The transcendental part of `H²` is
//! never enumerated; `ι` only enters through its products with algebraic
//! classes:
//!
//! * `ι ∪ π*D = [pt] ⊗ Ψ*D`
//! * `ι ∪ π̂*D̂ = Ψ_*D̂ ⊗ [pt]`
//! * `ι ∪ (D ⊗ D̂) = (Ψ*D · D̂) [pt ⊗ pt]`
//! * `ι ∪ ι` is rejected.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Rat};
use crate::lattice::{DivisorClass, MukaiVector, PicardLattice};
use crate::reflexive::ReflexiveSurface;

/// A class in `H⁰ ⊕ NS ⊗ ℚ ⊕ H⁴` of one surface factor. Rational coefficients
/// only appear transiently (`D²/2` on odd intermediate sums); Mukai vectors
/// extracted from it are checked to be integral.
#[derive(Clone, PartialEq, Eq)]
pub struct SurfaceClass {
    lattice: PicardLattice,
    pub h0: Rat,
    pub h2: Vec<Rat>,
    pub h4: Rat,
}

impl SurfaceClass {
    pub fn new(lattice: &PicardLattice, h0: Rat, h2: Vec<Rat>, h4: Rat) -> Result<Self> {
        if h2.len() != lattice.rank() {
            return Err(Error::Dimension {
                expected: lattice.rank(),
                found: h2.len(),
            });
        }
        Ok(SurfaceClass {
            lattice: lattice.clone(),
            h0,
            h2,
            h4,
        })
    }

    pub fn zero(lattice: &PicardLattice) -> Self {
        SurfaceClass {
            lattice: lattice.clone(),
            h0: Rat::zero(),
            h2: vec![Rat::zero(); lattice.rank()],
            h4: Rat::zero(),
        }
    }

    pub fn one(lattice: &PicardLattice) -> Self {
        let mut c = Self::zero(lattice);
        c.h0 = Rat::one();
        c
    }

    pub fn divisor(d: &DivisorClass) -> Self {
        let mut c = Self::zero(d.lattice());
        c.h2 = d.coords().iter().map(rat).collect();
        c
    }

    pub fn point(lattice: &PicardLattice) -> Self {
        let mut c = Self::zero(lattice);
        c.h4 = Rat::one();
        c
    }

    /// `ch(O(D)) = exp(D) = (1, D, D²/2)`.
    pub fn exp(d: &DivisorClass) -> Self {
        let mut c = Self::divisor(d);
        c.h0 = Rat::one();
        c.h4 = Rat::new(d.square(), BigInt::from(2));
        c
    }

    /// Todd class of a K3 surface, `(1, 0, 2)`.
    pub fn todd(lattice: &PicardLattice) -> Self {
        let mut c = Self::one(lattice);
        c.h4 = Rat::from_integer(2.into());
        c
    }

    /// `√td = (1, 0, 1)`.
    pub fn sqrt_todd(lattice: &PicardLattice) -> Self {
        let mut c = Self::one(lattice);
        c.h4 = Rat::one();
        c
    }

    pub fn from_mukai(u: &MukaiVector) -> Self {
        SurfaceClass {
            lattice: u.lattice().clone(),
            h0: rat(&u.r),
            h2: u.c1.coords().iter().map(rat).collect(),
            h4: rat(&u.s),
        }
    }

    pub fn lattice(&self) -> &PicardLattice {
        &self.lattice
    }

    pub fn to_mukai(&self) -> Result<MukaiVector> {
        let int = |q: &Rat, what: &str| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::NonIntegral(format!("{what} = {q}")))
            }
        };
        let coords = self
            .h2
            .iter()
            .map(|q| int(q, "H^2 coordinate"))
            .collect::<Result<Vec<_>>>()?;
        Ok(MukaiVector::new(
            int(&self.h0, "H^0")?,
            DivisorClass::new(&self.lattice, coords)?,
            int(&self.h4, "H^4")?,
        ))
    }

    fn pair_h2(&self, other: &SurfaceClass) -> Rat {
        let g = self.lattice.gram();
        let mut acc = Rat::zero();
        for (i, a) in self.h2.iter().enumerate() {
            for (j, b) in other.h2.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() && !g[i][j].is_zero() {
                    acc += a * b * rat(&g[i][j]);
                }
            }
        }
        acc
    }

    /// Cup product in the cohomology ring of the surface.
    pub fn cup(&self, other: &SurfaceClass) -> Result<SurfaceClass> {
        if !self.lattice.same_as(&other.lattice) {
            return Err(Error::LatticeMismatch);
        }
        Ok(SurfaceClass {
            lattice: self.lattice.clone(),
            h0: &self.h0 * &other.h0,
            h2: self
                .h2
                .iter()
                .zip(&other.h2)
                .map(|(a, b)| &self.h0 * b + &other.h0 * a)
                .collect(),
            h4: &self.h0 * &other.h4 + &self.h4 * &other.h0 + self.pair_h2(other),
        })
    }

    /// Multiplicative inverse; needs a non-zero `H⁰` part.
    pub fn inverse(&self) -> Result<SurfaceClass> {
        if self.h0.is_zero() {
            return Err(Error::InvalidArgument(
                "class with zero H^0 component is not invertible".into(),
            ));
        }
        // (a, b, c)⁻¹ = (1/a, -b/a², (b² - a c)/a³)
        let a = &self.h0;
        let inv_a = a.recip();
        let inv_a2 = &inv_a * &inv_a;
        Ok(SurfaceClass {
            lattice: self.lattice.clone(),
            h0: inv_a.clone(),
            h2: self.h2.iter().map(|b| -(b * &inv_a2)).collect(),
            h4: (self.pair_h2(self) - a * &self.h4) * &inv_a2 * &inv_a,
        })
    }
}

impl fmt::Debug for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h2: Vec<String> = self.h2.iter().map(ToString::to_string).collect();
        write!(f, "({}; {}; {})", self.h0, h2.join(","), self.h4)
    }
}

/// Cohomological degree (0, 2 or 4) of a basis index on one factor.
fn basis_degree(rank: usize, a: usize) -> usize {
    if a == 0 {
        0
    } else if a <= rank {
        2
    } else {
        4
    }
}

/// A class on `X × X̂`; see the module docs for the layout.
#[derive(Clone, PartialEq, Eq)]
pub struct ProductClass {
    lattice: PicardLattice,
    coeffs: Vec<Vec<Rat>>,
    iota: Rat,
}

impl ProductClass {
    pub fn zero(lattice: &PicardLattice) -> Self {
        let n = lattice.rank() + 2;
        ProductClass {
            lattice: lattice.clone(),
            coeffs: vec![vec![Rat::zero(); n]; n],
            iota: Rat::zero(),
        }
    }

    pub fn one(lattice: &PicardLattice) -> Self {
        let mut c = Self::zero(lattice);
        c.coeffs[0][0] = Rat::one();
        c
    }

    /// The distinguished class `ι`.
    pub fn iota(lattice: &PicardLattice) -> Self {
        let mut c = Self::zero(lattice);
        c.iota = Rat::one();
        c
    }

    /// `[pt ⊗ pt]`.
    pub fn point_point(lattice: &PicardLattice) -> Self {
        let mut c = Self::zero(lattice);
        let p = lattice.rank() + 1;
        c.coeffs[p][p] = Rat::one();
        c
    }

    pub fn lattice(&self) -> &PicardLattice {
        &self.lattice
    }

    fn pt(&self) -> usize {
        self.lattice.rank() + 1
    }

    fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn coefficient(&self, x: usize, xhat: usize) -> &Rat {
        &self.coeffs[x][xhat]
    }

    pub fn block00(&self) -> Rat {
        self.coeffs[0][0].clone()
    }

    /// `(2,0)`: a class on `X` times `1`.
    pub fn block20(&self) -> Vec<Rat> {
        (1..=self.rank()).map(|i| self.coeffs[i][0].clone()).collect()
    }

    /// `(0,2)`: `1` times a class on `X̂`.
    pub fn block02(&self) -> Vec<Rat> {
        (1..=self.rank()).map(|j| self.coeffs[0][j].clone()).collect()
    }

    pub fn block40(&self) -> Rat {
        self.coeffs[self.pt()][0].clone()
    }

    pub fn block04(&self) -> Rat {
        self.coeffs[0][self.pt()].clone()
    }

    /// `(2,2)`: the matrix part `Σ m_ij e_i ⊗ ê_j` and the `ι` coefficient.
    pub fn block22(&self) -> (Vec<Vec<Rat>>, Rat) {
        let m = (1..=self.rank())
            .map(|i| (1..=self.rank()).map(|j| self.coeffs[i][j].clone()).collect())
            .collect();
        (m, self.iota.clone())
    }

    /// `(4,2)`: `[pt] ⊗` a class on `X̂`.
    pub fn block42(&self) -> Vec<Rat> {
        let p = self.pt();
        (1..=self.rank()).map(|j| self.coeffs[p][j].clone()).collect()
    }

    /// `(2,4)`: a class on `X` `⊗ [pt]`.
    pub fn block24(&self) -> Vec<Rat> {
        let p = self.pt();
        (1..=self.rank()).map(|i| self.coeffs[i][p].clone()).collect()
    }

    pub fn block44(&self) -> Rat {
        let p = self.pt();
        self.coeffs[p][p].clone()
    }

    /// The Künneth component of bidegree `(p, q)` alone (`ι` belongs to `(2,2)`).
    pub fn bidegree_part(&self, p: usize, q: usize) -> ProductClass {
        let n = self.rank() + 2;
        let mut out = ProductClass::zero(&self.lattice);
        for a in 0..n {
            for b in 0..n {
                if basis_degree(self.rank(), a) == p && basis_degree(self.rank(), b) == q {
                    out.coeffs[a][b] = self.coeffs[a][b].clone();
                }
            }
        }
        if (p, q) == (2, 2) {
            out.iota = self.iota.clone();
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> ProductClass {
        ProductClass {
            lattice: self.lattice.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c * k).collect())
                .collect(),
            iota: &self.iota * k,
        }
    }

    pub fn checked_add(&self, other: &ProductClass) -> Result<ProductClass> {
        if !self.lattice.same_as(&other.lattice) {
            return Err(Error::LatticeMismatch);
        }
        Ok(ProductClass {
            lattice: self.lattice.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
            iota: &self.iota + &other.iota,
        })
    }

    // Product of basis elements a, b of one surface factor.
    fn basis_product(&self, a: usize, b: usize) -> Option<(usize, Rat)> {
        let pt = self.pt();
        match (a, b) {
            (0, b) => Some((b, Rat::one())),
            (a, 0) => Some((a, Rat::one())),
            (a, b) if a < pt && b < pt => {
                let g = &self.lattice.gram()[a - 1][b - 1];
                Some((pt, rat(g)))
            }
            _ => None,
        }
    }

    // ι ∪ (x_a ⊗ x̂_b), accumulated into `out` with weight `w`.
    fn add_iota_times(&self, a: usize, b: usize, w: &Rat, out: &mut ProductClass) {
        let pt = self.pt();
        match (a, b) {
            (0, 0) => out.iota += w,
            (a, 0) if a < pt => out.coeffs[pt][a] += w,
            (0, b) if b < pt => out.coeffs[b][pt] += w,
            (a, b) if a < pt && b < pt => {
                out.coeffs[pt][pt] += w * rat(&self.lattice.gram()[a - 1][b - 1]);
            }
            _ => {}
        }
    }

    /// Cup product. All classes are of even degree, so the product is
    /// commutative and no Koszul signs appear.
    pub fn cup(&self, other: &ProductClass) -> Result<ProductClass> {
        if !self.lattice.same_as(&other.lattice) {
            return Err(Error::LatticeMismatch);
        }
        if !self.iota.is_zero() && !other.iota.is_zero() {
            return Err(Error::UnsupportedProduct);
        }
        let n = self.rank() + 2;
        let mut out = ProductClass::zero(&self.lattice);
        for a in 0..n {
            for b in 0..n {
                let ab = &self.coeffs[a][b];
                if ab.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let Some((x, gx)) = self.basis_product(a, c) else {
                        continue;
                    };
                    for d in 0..n {
                        let cd = &other.coeffs[c][d];
                        if cd.is_zero() {
                            continue;
                        }
                        if let Some((y, gy)) = self.basis_product(b, d) {
                            out.coeffs[x][y] += ab * cd * &gx * gy;
                        }
                    }
                }
            }
        }
        for (iota, rest) in [(&self.iota, other), (&other.iota, self)] {
            if iota.is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    let c = &rest.coeffs[a][b];
                    if !c.is_zero() {
                        self.add_iota_times(a, b, &(iota * c), &mut out);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The kernel of the adjoint transform: `ch_k` is negated for odd `k`.
    pub fn dual(&self) -> ProductClass {
        let n = self.rank() + 2;
        let mut out = self.clone();
        for a in 0..n {
            for b in 0..n {
                let deg = basis_degree(self.rank(), a) + basis_degree(self.rank(), b);
                if (deg / 2) % 2 == 1 {
                    out.coeffs[a][b] = -&out.coeffs[a][b];
                }
            }
        }
        out
    }
}

impl Add for &ProductClass {
    type Output = ProductClass;
    fn add(self, rhs: &ProductClass) -> ProductClass {
        self.checked_add(rhs).expect("lattice mismatch in product class addition")
    }
}

impl Neg for &ProductClass {
    type Output = ProductClass;
    fn neg(self) -> ProductClass {
        self.scale(&-Rat::one())
    }
}

impl Sub for &ProductClass {
    type Output = ProductClass;
    fn sub(self, rhs: &ProductClass) -> ProductClass {
        self + &-rhs
    }
}

impl fmt::Debug for ProductClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProductClass")
            .field("coeffs", &self.coeffs.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
            .field("iota", &self.iota.to_string())
            .finish()
    }
}

/// `π*α`.
pub fn pullback_x(alpha: &SurfaceClass) -> ProductClass {
    let mut c = ProductClass::zero(alpha.lattice());
    let pt = c.pt();
    c.coeffs[0][0] = alpha.h0.clone();
    for (i, v) in alpha.h2.iter().enumerate() {
        c.coeffs[i + 1][0] = v.clone();
    }
    c.coeffs[pt][0] = alpha.h4.clone();
    c
}

/// `π̂*β`.
pub fn pullback_xhat(beta: &SurfaceClass) -> ProductClass {
    let mut c = ProductClass::zero(beta.lattice());
    let pt = c.pt();
    c.coeffs[0][0] = beta.h0.clone();
    for (j, v) in beta.h2.iter().enumerate() {
        c.coeffs[0][j + 1] = v.clone();
    }
    c.coeffs[0][pt] = beta.h4.clone();
    c
}

/// `π̂_*`: integrate over the `X` factor, keeping blocks `(4, q)`.
pub fn pushforward_xhat(a: &ProductClass) -> SurfaceClass {
    let pt = a.pt();
    SurfaceClass {
        lattice: a.lattice.clone(),
        h0: a.coeffs[pt][0].clone(),
        h2: (1..pt).map(|j| a.coeffs[pt][j].clone()).collect(),
        h4: a.coeffs[pt][pt].clone(),
    }
}

/// `π_*`: integrate over the `X̂` factor, keeping blocks `(p, 4)`.
pub fn pushforward_x(a: &ProductClass) -> SurfaceClass {
    let pt = a.pt();
    SurfaceClass {
        lattice: a.lattice.clone(),
        h0: a.coeffs[0][pt].clone(),
        h2: (1..pt).map(|i| a.coeffs[i][pt].clone()).collect(),
        h4: a.coeffs[pt][pt].clone(),
    }
}

pub fn sqrt_td(lattice: &PicardLattice) -> SurfaceClass {
    SurfaceClass::sqrt_todd(lattice)
}

/// `[Γ_Ψ] = [pt] ⊗ 1 + 1 ⊗ [pt] + ι`.
pub fn graph_class(lattice: &PicardLattice) -> ProductClass {
    let mut c = ProductClass::iota(lattice);
    let pt = c.pt();
    c.coeffs[pt][0] = Rat::one();
    c.coeffs[0][pt] = Rat::one();
    c
}

/// `ch(O_Γ) = Γ_*(td(N)⁻¹) = [Γ] ∪ π̂*(td(X̂)⁻¹)`, the normal bundle of the graph
/// being `T_X̂`.
pub fn ch_graph_structure(lattice: &PicardLattice) -> ProductClass {
    let td_inv = SurfaceClass::todd(lattice)
        .inverse()
        .expect("Todd class is invertible");
    graph_class(lattice)
        .cup(&pullback_xhat(&td_inv))
        .expect("graph class has no iota-iota term")
}

/// Künneth blocks of `γ = ch(Q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelReport {
    pub gamma: ProductClass,
}

impl KernelReport {
    pub fn gamma00(&self) -> Rat {
        self.gamma.block00()
    }

    pub fn gamma20(&self) -> Vec<Rat> {
        self.gamma.block20()
    }

    pub fn gamma02(&self) -> Vec<Rat> {
        self.gamma.block02()
    }

    pub fn gamma22(&self) -> (Vec<Vec<Rat>>, Rat) {
        self.gamma.block22()
    }
}

/// `ch(Q)` assembled from the exact sequence
/// `0 → π̂*O(-ℓ̂-2Ĥ) → Q ⊗ π̂*O(-Ĥ) ⊗ π*O(H) → I_Γ ⊗ π*O(ℓ+2H) → 0`:
///
/// `ch(Q) = [π̂*e^{-ℓ̂-2Ĥ} + (1 - ch O_Γ) π*e^{ℓ+2H}] · π̂*e^{Ĥ} · π*e^{-H}`.
pub fn ch_kernel_q(surface: &ReflexiveSurface) -> Result<KernelReport> {
    let lattice = surface.lattice();
    let sub = pullback_xhat(&SurfaceClass::exp(
        &(&-surface.ell_hat() - &(2 * surface.h_hat())),
    ));
    let ideal = &ProductClass::one(lattice) - &ch_graph_structure(lattice);
    let quotient = ideal.cup(&pullback_x(&SurfaceClass::exp(&surface.e_class())))?;
    let gamma = (&sub + &quotient)
        .cup(&pullback_xhat(&SurfaceClass::exp(surface.h_hat())))?
        .cup(&pullback_x(&SurfaceClass::exp(&-surface.h())))?;
    Ok(KernelReport { gamma })
}

/// `(ℓ + 2H) ⊗ Ĥ + H ⊗ ℓ̂ - ι`, the expected `(2,2)` block of `ch(Q)`.
pub fn expected_gamma22(surface: &ReflexiveSurface) -> ProductClass {
    let tensor = |a: &DivisorClass, b: &DivisorClass| {
        pullback_x(&SurfaceClass::divisor(a))
            .cup(&pullback_xhat(&SurfaceClass::divisor(b)))
            .expect("no iota")
    };
    let lattice = surface.lattice();
    &(&tensor(&surface.e_class(), surface.h_hat()) + &tensor(surface.h(), surface.ell_hat()))
        - &ProductClass::iota(lattice)
}

/// Cohomological transform computed by GRR:
/// `v(S(F)) = π̂_*(π*v(F) ∪ v(Q))` with `v(Q) = ch(Q) · π*√td · π̂*√td`, and the
/// adjoint with `Q*` in place of `Q`.
#[derive(Clone, Debug)]
pub struct GrrOracle {
    kernel: KernelReport,
    forward_kernel: ProductClass,
    backward_kernel: ProductClass,
}

impl GrrOracle {
    pub fn new(surface: &ReflexiveSurface) -> Result<Self> {
        let lattice = surface.lattice();
        let kernel = ch_kernel_q(surface)?;
        let root = pullback_x(&sqrt_td(lattice)).cup(&pullback_xhat(&sqrt_td(lattice)))?;
        let forward_kernel = kernel.gamma.cup(&root)?;
        let backward_kernel = kernel.gamma.dual().cup(&root)?;
        Ok(GrrOracle {
            kernel,
            forward_kernel,
            backward_kernel,
        })
    }

    pub fn kernel(&self) -> &KernelReport {
        &self.kernel
    }

    /// Mukai vector of the full transform complex `Rπ̂_*(π*F ⊗ Q)`.
    pub fn forward(&self, u: &MukaiVector) -> Result<MukaiVector> {
        if !u.lattice().same_as(self.forward_kernel.lattice()) {
            return Err(Error::LatticeMismatch);
        }
        let integrand = pullback_x(&SurfaceClass::from_mukai(u)).cup(&self.forward_kernel)?;
        pushforward_xhat(&integrand).to_mukai()
    }

    /// Mukai vector of `Rπ_*(π̂*G ⊗ Q*)`.
    pub fn backward(&self, w: &MukaiVector) -> Result<MukaiVector> {
        if !w.lattice().same_as(self.backward_kernel.lattice()) {
            return Err(Error::LatticeMismatch);
        }
        let integrand = pullback_xhat(&SurfaceClass::from_mukai(w)).cup(&self.backward_kernel)?;
        pushforward_x(&integrand).to_mukai()
    }
}

/// One-shot GRR transform; build a [`GrrOracle`] to amortize the kernel.
pub fn grr_transform(surface: &ReflexiveSurface, u: &MukaiVector) -> Result<MukaiVector> {
    GrrOracle::new(surface)?.forward(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn qs(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn generic() -> ReflexiveSurface {
        ReflexiveSurface::generic()
    }

    fn sc(l: &PicardLattice, a: i64, b: &[i64], c: i64) -> SurfaceClass {
        SurfaceClass::new(l, q(a), qs(b), q(c)).unwrap()
    }

    #[test]
    fn pullback_blocks() {
        let s = generic();
        let l = s.lattice();
        let a = pullback_x(&sc(l, 1, &[0, 0], 1));
        assert_eq!(a.block00(), q(1));
        assert_eq!(a.block40(), q(1));
        assert_eq!(a.block04(), q(0));
        let b = pullback_x(&sc(l, 0, &[1, 0], 0));
        assert_eq!(b.block20(), qs(&[1, 0]));
        let h_hat = SurfaceClass::divisor(s.h_hat());
        assert_eq!(pullback_xhat(&h_hat).block02(), qs(&[5, 2]));
    }

    #[test]
    fn cup_examples() {
        let s = generic();
        let l = s.lattice();
        let h = pullback_x(&SurfaceClass::divisor(s.h()));
        let iota_h = ProductClass::iota(l).cup(&h).unwrap();
        assert_eq!(iota_h.block42(), qs(&[1, 0]));
        assert_eq!(pushforward_xhat(&iota_h), sc(l, 0, &[1, 0], 0));

        let hh = h.cup(&pullback_xhat(&SurfaceClass::divisor(s.h_hat()))).unwrap();
        let (m, iota) = hh.block22();
        assert_eq!(m, vec![qs(&[5, 2]), qs(&[0, 0])]);
        assert_eq!(iota, q(0));

        let p = pullback_x(&SurfaceClass::point(l));
        assert_eq!(p.cup(&p).unwrap(), ProductClass::zero(l));
        assert_eq!(
            ProductClass::iota(l).cup(&p).unwrap(),
            ProductClass::zero(l)
        );
        assert_eq!(
            ProductClass::iota(l).cup(&ProductClass::iota(l)),
            Err(Error::UnsupportedProduct)
        );
    }

    #[test]
    fn iota_against_pure_tensor() {
        let s = generic();
        let l = s.lattice();
        // ι ∪ (H ⊗ Ĥ) = (H·Ĥ) [pt⊗pt] = 10 [pt⊗pt]
        let t = pullback_x(&SurfaceClass::divisor(s.h()))
            .cup(&pullback_xhat(&SurfaceClass::divisor(s.h_hat())))
            .unwrap();
        let c = ProductClass::iota(l).cup(&t).unwrap();
        assert_eq!(c, ProductClass::point_point(l).scale(&q(10)));
        // and the same by associativity
        let c2 = ProductClass::iota(l)
            .cup(&pullback_x(&SurfaceClass::divisor(s.h())))
            .unwrap()
            .cup(&pullback_xhat(&SurfaceClass::divisor(s.h_hat())))
            .unwrap();
        assert_eq!(c, c2);
    }

    #[test]
    fn pushforward_examples() {
        let s = generic();
        let l = s.lattice();
        let p = pullback_x(&SurfaceClass::point(l));
        assert_eq!(pushforward_xhat(&p), sc(l, 1, &[0, 0], 0));
        let anything = pullback_xhat(&sc(l, 3, &[1, -2], 5));
        assert_eq!(pushforward_xhat(&anything), SurfaceClass::zero(l));
    }

    #[test]
    fn sqrt_td_squares_to_td() {
        let l = generic().lattice().clone();
        let r = sqrt_td(&l);
        assert_eq!(r.cup(&r).unwrap(), SurfaceClass::todd(&l));
        assert_eq!(
            r.cup(&r).unwrap().cup(&SurfaceClass::one(&l)).unwrap(),
            SurfaceClass::todd(&l)
        );
        let v_o = SurfaceClass::exp(&DivisorClass::zero(&l)).cup(&r).unwrap();
        assert_eq!(v_o.to_mukai().unwrap(), MukaiVector::structure_sheaf(&l));
    }

    #[test]
    fn surface_inverse() {
        let l = generic().lattice().clone();
        let a = sc(&l, 2, &[1, 1], 3);
        let inv = a.inverse().unwrap();
        assert_eq!(a.cup(&inv).unwrap(), SurfaceClass::one(&l));
        assert!(sc(&l, 0, &[1, 0], 0).inverse().is_err());
    }

    #[test]
    fn graph_structure_blocks() {
        let l = generic().lattice().clone();
        let g = ch_graph_structure(&l);
        assert_eq!(g.block22().1, q(1));
        assert_eq!(g.block44(), q(-2));
        assert_eq!(g.block40(), q(1));
        assert_eq!(g.block04(), q(1));
        assert_eq!(g.block00(), q(0));
    }

    #[test]
    fn kernel_blocks() {
        let s = generic();
        let k = ch_kernel_q(&s).unwrap();
        assert_eq!(k.gamma00(), q(2));
        assert_eq!(k.gamma20(), qs(&[0, 1]));
        // -ℓ̂ = 12H + 5ℓ
        assert_eq!(k.gamma02(), qs(&[12, 5]));
        assert_eq!(
            k.gamma.block22(),
            expected_gamma22(&s).block22()
        );
        assert_eq!(k.gamma22().1, q(-1));
        // restriction to a fibre has the invariants of E, ch₂ = -5
        assert_eq!(k.gamma.block40(), q(-5));
        assert_eq!(k.gamma.block04(), q(-5));
    }

    #[test]
    fn grr_examples() {
        let s = generic();
        let l = s.lattice();
        let o = GrrOracle::new(&s).unwrap();
        let mv = |r, c: &[i64], s| MukaiVector::from_i64(l, r, c, s).unwrap();
        assert_eq!(o.forward(&mv(1, &[0, 0], 1)).unwrap(), mv(-1, &[0, 0], -1));
        assert_eq!(o.forward(&mv(1, &[1, 0], 2)).unwrap(), mv(1, &[7, 3], -4));
        assert_eq!(o.forward(&mv(0, &[0, 0], 1)).unwrap(), mv(2, &[12, 5], -3));
        // ĉ₁ of the point transform is -ℓ̂
        assert_eq!(
            o.forward(&mv(0, &[0, 0], 1)).unwrap().c1,
            -s.ell_hat()
        );
    }

    #[test]
    fn oracle_rejects_foreign_lattice() {
        let o = GrrOracle::new(&generic()).unwrap();
        let other = generic();
        let u = MukaiVector::structure_sheaf(other.lattice());
        assert_eq!(o.forward(&u), Err(Error::LatticeMismatch));
    }

    #[test]
    fn non_integral_is_reported() {
        let l = generic().lattice().clone();
        let half = SurfaceClass::new(&l, q(1), qs(&[0, 0]), Rat::new(1.into(), 2.into())).unwrap();
        assert!(matches!(half.to_mukai(), Err(Error::NonIntegral(_))));
    }
}
