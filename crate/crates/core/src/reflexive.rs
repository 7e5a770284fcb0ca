//! Reflexive K3 surfaces: recognition, the A1/A2 assumptions on Mukai vectors,
//! enumeration of low-degree (-2)-classes, and the non-effectivity certificate
//! for `E = ℓ + 2H`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, Rat};
use crate::lattice::{DivisorClass, MukaiVector, PicardLattice};

/// Outcome of [`is_reflexive`]: `holds` plus one line per failed relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflexivityCheck {
    pub holds: bool,
    pub diagnostics: Vec<String>,
}

/// Checks `H² = 2`, `H·ℓ = 0`, `ℓ² = -12` and primitivity of `H`.
pub fn is_reflexive(h: &DivisorClass, ell: &DivisorClass) -> Result<ReflexivityCheck> {
    let hl = h.intersect(ell)?;
    let mut diagnostics = Vec::new();
    if h.lattice().rank() < 2 {
        diagnostics.push(format!(
            "Picard rank {} is too small: a reflexive surface needs rank >= 2 to carry l",
            h.lattice().rank()
        ));
    }
    let hh = h.square();
    if hh != BigInt::from(2) {
        diagnostics.push(format!("H^2 = {hh}, expected 2"));
    }
    if !hl.is_zero() {
        diagnostics.push(format!("H.l = {hl}, expected 0"));
    }
    let ll = ell.square();
    if ll != BigInt::from(-12) {
        diagnostics.push(format!("l^2 = {ll}, expected -12"));
    }
    let content = h.coords().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_one() {
        diagnostics.push(format!("H is not primitive (content {content})"));
    }
    Ok(ReflexivityCheck {
        holds: diagnostics.is_empty(),
        diagnostics,
    })
}

/// A K3 surface with polarization `H` and a class `ℓ` satisfying
/// `H² = 2, H·ℓ = 0, ℓ² = -12`, together with the classes `Ĥ = 2ℓ + 5H` and
/// `ℓ̂ = -5ℓ - 12H` of the dual surface, written in the same basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflexiveSurface {
    h: DivisorClass,
    ell: DivisorClass,
    h_hat: DivisorClass,
    ell_hat: DivisorClass,
}

impl ReflexiveSurface {
    pub fn new(h: DivisorClass, ell: DivisorClass) -> Result<Self> {
        let check = is_reflexive(&h, &ell)?;
        if !check.holds {
            return Err(Error::NotReflexive(check.diagnostics));
        }
        let h_hat = &(2 * &ell) + &(5 * &h);
        let ell_hat = &(-5 * &ell) - &(12 * &h);
        Ok(ReflexiveSurface {
            h,
            ell,
            h_hat,
            ell_hat,
        })
    }

    /// The rank-2 lattice `[[2, 0], [0, -12]]` with `H = e1`, `ℓ = e2`.
    pub fn generic() -> Self {
        let lattice = PicardLattice::with_labels(
            vec![
                vec![2.into(), 0.into()],
                vec![0.into(), (-12).into()],
            ],
            vec!["H".into(), "l".into()],
        )
        .expect("generic reflexive lattice is valid");
        let h = DivisorClass::basis(&lattice, 0);
        let ell = DivisorClass::basis(&lattice, 1);
        ReflexiveSurface::new(h, ell).expect("generic lattice is reflexive")
    }

    pub fn lattice(&self) -> &PicardLattice {
        self.h.lattice()
    }

    pub fn h(&self) -> &DivisorClass {
        &self.h
    }

    pub fn ell(&self) -> &DivisorClass {
        &self.ell
    }

    pub fn h_hat(&self) -> &DivisorClass {
        &self.h_hat
    }

    pub fn ell_hat(&self) -> &DivisorClass {
        &self.ell_hat
    }

    /// The dual surface `(X̂, Ĥ, ℓ̂)`; applying this twice returns `self`.
    pub fn dual(&self) -> ReflexiveSurface {
        ReflexiveSurface::new(self.h_hat.clone(), self.ell_hat.clone())
            .expect("the dual of a reflexive surface is reflexive")
    }

    /// `E = ℓ + 2H`.
    pub fn e_class(&self) -> DivisorClass {
        &self.ell + &(2 * &self.h)
    }

    /// `v = (2, ℓ, -3)`, the isotropic vector whose moduli space is `X̂`.
    pub fn isotropic_vector(&self) -> MukaiVector {
        MukaiVector::new(2.into(), self.ell.clone(), (-3).into())
    }

    pub fn nodal_classes(&self, dmax: u32) -> Result<NodalReport> {
        nodal_classes(&self.h, dmax)
    }
}

/// A1: `v` primitive, isotropic, and `gcd(r, c1·H, s) = 1`.
pub fn check_a1(v: &MukaiVector, h: &DivisorClass) -> Result<bool> {
    let deg = v.c1.intersect(h)?;
    let g = v.r.gcd(&deg).gcd(&v.s);
    Ok(v.is_primitive() && v.is_isotropic() && g.is_one())
}

/// A2: degree zero and rank greater than one.
pub fn check_a2(v: &MukaiVector, h: &DivisorClass) -> Result<bool> {
    Ok(v.c1.intersect(h)?.is_zero() && v.r > BigInt::one())
}

/// Riemann–Roch on a K3: `χ(O(D)) = 2 + D²/2`.
pub fn line_bundle_chi(d: &DivisorClass) -> BigInt {
    BigInt::from(2) + d.half_square()
}

/// `dim M(v) = v² + 2`.
pub fn moduli_dim(v: &MukaiVector) -> BigInt {
    v.square() + 2
}

/// All `(-2)`-classes `D` with `1 ≤ D·H ≤ dmax`, found by exhaustive search.
///
/// The search runs over the positive definite form `P(x) = 2(x·H)² - H²·x²`;
/// every such `D` has `P(D) = 2d² + 2H² ≤ norm_bound`, so the enumeration is
/// finite and certifiably complete. `box_bounds[i]` is the resulting bound on
/// `|x_i|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodalReport {
    pub polarization: DivisorClass,
    pub classes: Vec<DivisorClass>,
    pub dmax: u32,
    pub exhaustive: bool,
    pub norm_bound: BigInt,
    pub box_bounds: Vec<BigInt>,
}

impl NodalReport {
    pub fn degree(&self, d: &DivisorClass) -> BigInt {
        self.polarization.lattice().pair_coords(self.polarization.coords(), d.coords())
    }
}

pub fn nodal_classes(h: &DivisorClass, dmax: u32) -> Result<NodalReport> {
    if dmax == 0 {
        return Err(Error::InvalidArgument("nodal search needs dmax >= 1".into()));
    }
    let lattice = h.lattice();
    let n = lattice.rank();
    let g = lattice.gram();
    let hh = h.square();
    if !hh.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "polarization must have positive square, H^2 = {hh}"
        )));
    }
    let hv: Vec<BigInt> = (0..n)
        .map(|i| (0..n).map(|j| &g[i][j] * &h.coords()[j]).sum())
        .collect();
    let form: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(2) * &hv[i] * &hv[j] - &hh * &g[i][j])
                .collect()
        })
        .collect();
    let form_q = exact::to_rational_matrix(&form);
    let (l, d) = exact::ldl_positive(&form_q).ok_or(Error::IndefiniteComplement)?;
    let inv = exact::inverse(&form_q).ok_or(Error::IndefiniteComplement)?;

    let dmax_big = BigInt::from(dmax);
    let norm_bound = BigInt::from(2) * &dmax_big * &dmax_big + BigInt::from(2) * &hh;
    let bound_q = exact::rat(&norm_bound);
    let box_bounds = (0..n)
        .map(|i| exact::floor_sqrt(&(&bound_q * &inv[i][i])))
        .collect();

    let mut found = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    fincke_pohst(&l, &d, n, bound_q, &mut x, &mut |x| {
        let dh: BigInt = x.iter().zip(&hv).map(|(a, b)| a * b).sum();
        if dh < BigInt::one() || dh > dmax_big {
            return;
        }
        if lattice.pair_coords(x, x) == BigInt::from(-2) {
            found.push((dh, x.to_vec()));
        }
    });
    found.sort();
    let classes = found
        .into_iter()
        .map(|(_, c)| DivisorClass::new(lattice, c).expect("rank matches"))
        .collect();

    Ok(NodalReport {
        polarization: h.clone(),
        classes,
        dmax,
        exhaustive: true,
        norm_bound,
        box_bounds,
    })
}

// Visits every integer x with Σ_i d_i (x_i + Σ_{j>i} l_ji x_j)² ≤ budget,
// fixing coordinates from the last one down.
fn fincke_pohst(
    l: &[Vec<Rat>],
    d: &[Rat],
    level: usize,
    budget: Rat,
    x: &mut Vec<BigInt>,
    visit: &mut dyn FnMut(&[BigInt]),
) {
    if level == 0 {
        visit(x);
        return;
    }
    let i = level - 1;
    let n = x.len();
    let mut center = Rat::zero();
    for j in i + 1..n {
        center -= &l[j][i] * exact::rat(&x[j]);
    }
    let radius = &budget / &d[i];
    let lo = exact::ceil_sub_sqrt(&center, &radius);
    let hi = exact::floor_add_sqrt(&center, &radius);
    let mut xi = lo;
    while xi <= hi {
        let t = exact::rat(&xi) - &center;
        let rest = &budget - &d[i] * &t * &t;
        if !rest.is_negative() {
            x[i] = xi.clone();
            fincke_pohst(l, d, i, rest, x, visit);
        }
        xi += 1;
    }
    x[i] = BigInt::zero();
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma1Verdict {
    /// `ℓ + 2H` is not effective, so all its cohomology vanishes.
    Holds,
    /// A low-degree (-2)-class prevents the argument from going through.
    BlockedByNodal(DivisorClass),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Certificate {
    pub e: DivisorClass,
    pub e_square: BigInt,
    pub e_chi: BigInt,
    /// Degree-3 `(-2)`-classes `D` for which the residual `E - D` was checked.
    pub degree3_checked: usize,
    pub verdict: Lemma1Verdict,
}

impl Lemma1Certificate {
    pub fn holds(&self) -> bool {
        self.verdict == Lemma1Verdict::Holds
    }
}

/// Replays the non-effectivity argument for `E = ℓ + 2H` against an exhaustive
/// nodal report. Only certifies the sufficient condition (no (-2)-class of
/// degree 1 or 2); it never asserts that `E` is effective.
pub fn lemma1_certificate(
    surface: &ReflexiveSurface,
    nodal: &NodalReport,
) -> Result<Lemma1Certificate> {
    if !nodal.exhaustive || nodal.dmax < 3 {
        return Err(Error::InvalidArgument(format!(
            "certificate needs an exhaustive nodal report with dmax >= 3 (got dmax = {}, exhaustive = {})",
            nodal.dmax, nodal.exhaustive
        )));
    }
    if nodal.polarization != *surface.h() {
        return Err(Error::InvalidArgument(
            "nodal report was computed for a different polarization".into(),
        ));
    }
    let e = surface.e_class();
    let e_square = e.square();
    let e_chi = line_bundle_chi(&e);
    debug_assert_eq!(e_square, BigInt::from(-4));
    debug_assert!(e_chi.is_zero());

    let mut verdict = Lemma1Verdict::Holds;
    if let Some(d) = nodal
        .classes
        .iter()
        .find(|d| nodal.degree(d) <= BigInt::from(2))
    {
        verdict = Lemma1Verdict::BlockedByNodal(d.clone());
    }

    // E = D + F with D of degree 3 forces F of degree 1; F is then a
    // (-2)-class of degree 1 unless F² ≥ 0, which the argument rules out.
    let mut degree3_checked = 0;
    for d in nodal.classes.iter().filter(|d| nodal.degree(d) == BigInt::from(3)) {
        degree3_checked += 1;
        let f = &e - d;
        if f.square() == BigInt::from(-2) && nodal.degree(&f).is_one() {
            debug_assert!(nodal.classes.contains(&f));
            if verdict == Lemma1Verdict::Holds {
                verdict = Lemma1Verdict::BlockedByNodal(f);
            }
        }
    }

    Ok(Lemma1Certificate {
        e,
        e_square,
        e_chi,
        degree3_checked,
        verdict,
    })
}

/// Assumption A3 (nonempty moduli, every point μ-stable) is never computed:
/// it is granted by the nonemptiness theorem for reflexive surfaces on which
/// `ℓ + 2H` is not effective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum A3Status {
    Granted,
    NotGranted,
}

pub fn a3_status(reflexive: bool, certificate: &Lemma1Certificate) -> A3Status {
    if reflexive && certificate.holds() {
        A3Status::Granted
    } else {
        A3Status::NotGranted
    }
}

/// Mukai-vector accounting for `0 → O → E(H) → I_p(ℓ+2H) → 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionAccounting {
    pub v_structure: MukaiVector,
    pub v_ideal_point: MukaiVector,
    pub v_ideal_twisted: MukaiVector,
    pub v_twisted: MukaiVector,
    pub chi_twisted: BigInt,
    pub v: MukaiVector,
}

/// Reconstructs `v(E) = (2, ℓ, -3)` from the extension: `v(E(H)) = v(O) +
/// v(I_p(ℓ+2H))`, then untwist by `-H`.
pub fn corollary2_vector(surface: &ReflexiveSurface) -> ExtensionAccounting {
    let lattice = surface.lattice();
    let v_structure = MukaiVector::structure_sheaf(lattice);
    // v(I_p) = v(O) - v(O_p) = (1, 0, 0)
    let v_ideal_point = MukaiVector::new(
        BigInt::one(),
        DivisorClass::zero(lattice),
        BigInt::zero(),
    );
    let v_ideal_twisted = v_ideal_point
        .twist(&surface.e_class())
        .expect("same lattice");
    let v_twisted = &v_structure + &v_ideal_twisted;
    let chi_twisted = v_twisted.euler_char();
    let v = v_twisted.twist(&-surface.h()).expect("same lattice");
    ExtensionAccounting {
        v_structure,
        v_ideal_point,
        v_ideal_twisted,
        v_twisted,
        chi_twisted,
        v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(g: &[&[i64]]) -> PicardLattice {
        PicardLattice::from_i64(g).unwrap()
    }

    fn class(l: &PicardLattice, c: &[i64]) -> DivisorClass {
        DivisorClass::from_i64(l, c).unwrap()
    }

    fn mv(l: &PicardLattice, r: i64, c: &[i64], s: i64) -> MukaiVector {
        MukaiVector::from_i64(l, r, c, s).unwrap()
    }

    /// H, l, N with N a degree-1 (-2)-class.
    fn nodal_fixture() -> ReflexiveSurface {
        let l = lattice(&[&[2, 0, 1], &[0, -12, 0], &[1, 0, -2]]);
        ReflexiveSurface::new(class(&l, &[1, 0, 0]), class(&l, &[0, 1, 0])).unwrap()
    }

    #[test]
    fn reflexive_examples() {
        let l = lattice(&[&[2, 0], &[0, -12]]);
        let h = class(&l, &[1, 0]);
        assert!(is_reflexive(&h, &class(&l, &[0, 1])).unwrap().holds);
        let bad = is_reflexive(&h, &class(&l, &[0, 2])).unwrap();
        assert!(!bad.holds);
        assert_eq!(bad.diagnostics, vec!["l^2 = -48, expected -12".to_string()]);

        let l4 = lattice(&[&[4, 0], &[0, -12]]);
        let check = is_reflexive(&class(&l4, &[1, 0]), &class(&l4, &[0, 1])).unwrap();
        assert!(!check.holds);
        assert!(check.diagnostics[0].contains("H^2 = 4"));
    }

    #[test]
    fn rank_one_is_rejected_with_reason() {
        let l = lattice(&[&[2]]);
        let check = is_reflexive(&class(&l, &[1]), &class(&l, &[0])).unwrap();
        assert!(!check.holds);
        assert!(check.diagnostics[0].contains("rank"));
    }

    #[test]
    fn non_primitive_polarization() {
        // 2H also fails H² = 2; only the primitivity line is checked here.
        let l = lattice(&[&[2, 0], &[0, -12]]);
        let check = is_reflexive(&class(&l, &[2, 0]), &class(&l, &[0, 1])).unwrap();
        assert!(check.diagnostics.iter().any(|d| d.contains("not primitive")));
    }

    #[test]
    fn dual_classes_are_reflexive_and_involutive() {
        let s = ReflexiveSurface::generic();
        assert_eq!(s.h_hat().square(), 2.into());
        assert_eq!(s.ell_hat().square(), (-12).into());
        assert_eq!(s.h_hat().intersect(s.ell_hat()).unwrap(), 0.into());
        let dd = s.dual().dual();
        assert_eq!(dd.h(), s.h());
        assert_eq!(dd.ell(), s.ell());
    }

    #[test]
    fn a1_examples() {
        let s = ReflexiveSurface::generic();
        let l = s.lattice();
        let h = s.h();
        assert!(check_a1(&mv(l, 2, &[0, 1], -3), h).unwrap());
        assert!(!check_a1(&mv(l, 2, &[0, 0], -4), h).unwrap());
        let bad = mv(l, 2, &[1, 0], -3);
        assert_eq!(bad.square(), 14.into());
        assert!(!check_a1(&bad, h).unwrap());
    }

    #[test]
    fn a2_examples() {
        let s = ReflexiveSurface::generic();
        let l = s.lattice();
        let h = s.h();
        assert!(check_a2(&mv(l, 2, &[0, 1], -3), h).unwrap());
        assert!(!check_a2(&mv(l, 1, &[0, 1], -3), h).unwrap());
        assert!(!check_a2(&mv(l, 2, &[1, 0], -3), h).unwrap());
    }

    #[test]
    fn nodal_generic_is_empty() {
        let s = ReflexiveSurface::generic();
        let report = s.nodal_classes(3).unwrap();
        assert!(report.classes.is_empty());
        assert!(report.exhaustive);
        assert_eq!(report.norm_bound, 22.into());
        // P = [[4,0],[0,24]]: |a| <= sqrt(22/4), |b| <= sqrt(22/24)
        assert_eq!(report.box_bounds, vec![BigInt::from(2), BigInt::from(0)]);
    }

    #[test]
    fn nodal_fixture_rank_two() {
        let l = lattice(&[&[2, 1], &[1, -2]]);
        let report = nodal_classes(&class(&l, &[1, 0]), 2).unwrap();
        assert_eq!(report.classes, vec![class(&l, &[0, 1]), class(&l, &[1, -1])]);
        for d in &report.classes {
            assert_eq!(d.square(), (-2).into());
        }
    }

    #[test]
    fn nodal_rejects_zero_degree() {
        let s = ReflexiveSurface::generic();
        assert!(matches!(s.nodal_classes(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn nodal_rejects_nonpositive_polarization() {
        let l = lattice(&[&[2, 0], &[0, -12]]);
        assert!(matches!(
            nodal_classes(&class(&l, &[0, 1]), 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn line_bundle_chi_examples() {
        let s = ReflexiveSurface::generic();
        let e = s.e_class();
        assert_eq!(e.square(), (-4).into());
        assert_eq!(line_bundle_chi(&e), 0.into());
        assert_eq!(line_bundle_chi(&DivisorClass::zero(s.lattice())), 2.into());
        assert_eq!(line_bundle_chi(s.h()), 3.into());
    }

    #[test]
    fn lemma1_generic_holds() {
        let s = ReflexiveSurface::generic();
        let cert = lemma1_certificate(&s, &s.nodal_classes(3).unwrap()).unwrap();
        assert!(cert.holds());
        assert_eq!(cert.e_square, (-4).into());
        assert_eq!(cert.e_chi, 0.into());
        assert_eq!(a3_status(true, &cert), A3Status::Granted);
    }

    #[test]
    fn lemma1_blocked_by_degree_one_class() {
        let s = nodal_fixture();
        let report = s.nodal_classes(3).unwrap();
        let cert = lemma1_certificate(&s, &report).unwrap();
        match &cert.verdict {
            Lemma1Verdict::BlockedByNodal(d) => {
                assert_eq!(d.square(), (-2).into());
                assert_eq!(report.degree(d), 1.into());
            }
            v => panic!("expected a blocking class, got {v:?}"),
        }
        assert_eq!(a3_status(true, &cert), A3Status::NotGranted);
    }

    #[test]
    fn lemma1_needs_degree_three_report() {
        let s = ReflexiveSurface::generic();
        let report = s.nodal_classes(1).unwrap();
        assert!(matches!(
            lemma1_certificate(&s, &report),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn moduli_dim_examples() {
        let s = ReflexiveSurface::generic();
        let l = s.lattice();
        assert_eq!(moduli_dim(&s.isotropic_vector()), 2.into());
        assert_eq!(moduli_dim(&mv(l, 1, &[0, 0], 1)), 0.into());
        for n in 1..6 {
            assert_eq!(moduli_dim(&mv(l, 1, &[0, 0], 1 - n)), (2 * n).into());
        }
    }

    #[test]
    fn extension_accounting() {
        let s = ReflexiveSurface::generic();
        let l = s.lattice();
        let acc = corollary2_vector(&s);
        assert_eq!(acc.v_ideal_point, mv(l, 1, &[0, 0], 0));
        assert_eq!(acc.v_ideal_point.euler_char(), 1.into());
        assert_eq!(acc.v_ideal_twisted, mv(l, 1, &[2, 1], -2));
        assert_eq!(acc.v_twisted, mv(l, 2, &[2, 1], -1));
        assert_eq!(acc.chi_twisted, 1.into());
        assert_eq!(acc.v, mv(l, 2, &[0, 1], -3));
    }
}
