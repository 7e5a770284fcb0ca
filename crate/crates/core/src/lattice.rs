//! Picard lattices, divisor classes and Mukai vectors on a K3 surface.
//!
//! Everything is exact: coordinates are `BigInt`, and the only division is
//! `d²/2`, which is integral because K3 Picard lattices are even.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact;

struct LatticeData {
    gram: Vec<Vec<BigInt>>,
    labels: Vec<String>,
}

/// An even integral lattice of signature `(1, rank-1)`, modeling the algebraic
/// part of `H²` of a K3 surface.
///
/// Cloning is cheap and yields the *same* lattice: two classes are compatible
/// only when they carry the same handle, never when their Gram matrices merely
/// agree.
#[derive(Clone)]
pub struct PicardLattice(Arc<LatticeData>);

impl PicardLattice {
    pub fn new(gram: Vec<Vec<BigInt>>) -> Result<Self> {
        let labels = (1..=gram.len()).map(|i| format!("e{i}")).collect();
        Self::with_labels(gram, labels)
    }

    pub fn with_labels(gram: Vec<Vec<BigInt>>, labels: Vec<String>) -> Result<Self> {
        let rank = gram.len();
        if rank == 0 {
            return Err(Error::EmptyLattice);
        }
        for (row, entries) in gram.iter().enumerate() {
            if entries.len() != rank {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    rank,
                });
            }
        }
        if labels.len() != rank {
            return Err(Error::Dimension {
                expected: rank,
                found: labels.len(),
            });
        }
        for i in 0..rank {
            for j in i + 1..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
            if gram[i][i].is_odd() {
                return Err(Error::OddDiagonal { i });
            }
        }
        let (positive, negative, zero) = exact::inertia(&gram);
        if positive != 1 || zero != 0 {
            return Err(Error::Signature {
                positive,
                negative,
                zero,
            });
        }
        Ok(PicardLattice(Arc::new(LatticeData { gram, labels })))
    }

    pub fn from_i64(gram: &[&[i64]]) -> Result<Self> {
        Self::new(
            gram.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.0.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    /// `(positive, negative)` inertia; always `(1, rank-1)` once constructed.
    pub fn signature(&self) -> (usize, usize) {
        let (p, n, _) = exact::inertia(&self.0.gram);
        (p, n)
    }

    pub fn same_as(&self, other: &PicardLattice) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn pair_coords(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let g = &self.0.gram[i][j];
                if !g.is_zero() && !bj.is_zero() {
                    acc += ai * g * bj;
                }
            }
        }
        acc
    }

    fn ensure_same(&self, other: &PicardLattice) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }
}

impl PartialEq for PicardLattice {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for PicardLattice {}

impl fmt::Debug for PicardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PicardLattice")
            .field("gram", &self.0.gram)
            .finish()
    }
}

/// Integer coordinates of a divisor class in a fixed Picard-lattice basis.
#[derive(Clone, PartialEq, Eq)]
pub struct DivisorClass {
    lattice: PicardLattice,
    coords: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(lattice: &PicardLattice, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != lattice.rank() {
            return Err(Error::Dimension {
                expected: lattice.rank(),
                found: coords.len(),
            });
        }
        Ok(DivisorClass {
            lattice: lattice.clone(),
            coords,
        })
    }

    pub fn from_i64(lattice: &PicardLattice, coords: &[i64]) -> Result<Self> {
        Self::new(lattice, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(lattice: &PicardLattice) -> Self {
        DivisorClass {
            lattice: lattice.clone(),
            coords: vec![BigInt::zero(); lattice.rank()],
        }
    }

    /// The `i`-th basis vector.
    pub fn basis(lattice: &PicardLattice, i: usize) -> Self {
        let mut d = Self::zero(lattice);
        d.coords[i] = BigInt::one();
        d
    }

    pub fn lattice(&self) -> &PicardLattice {
        &self.lattice
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn intersect(&self, other: &DivisorClass) -> Result<BigInt> {
        self.lattice.ensure_same(&other.lattice)?;
        Ok(self.lattice.pair_coords(&self.coords, &other.coords))
    }

    pub fn square(&self) -> BigInt {
        self.lattice.pair_coords(&self.coords, &self.coords)
    }

    /// `D²/2`, exact on an even lattice.
    pub fn half_square(&self) -> BigInt {
        let sq = self.square();
        debug_assert!(sq.is_even());
        sq / 2
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.lattice.ensure_same(&other.lattice)?;
        Ok(DivisorClass {
            lattice: self.lattice.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, k: &BigInt) -> DivisorClass {
        DivisorClass {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Render as an integer combination of the lattice's basis labels.
    pub fn to_combination(&self) -> String {
        combination(&self.coords, self.lattice.labels())
    }
}

pub(crate) fn combination(coords: &[BigInt], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// Operator forms are for classes already known to share a lattice; they
// panic on mismatch. Use the `checked_*` methods at API boundaries.
impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_add(rhs).expect("lattice mismatch in divisor addition")
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_sub(rhs)
            .expect("lattice mismatch in divisor subtraction")
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.scale(&BigInt::from(self))
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords.iter().map(ToString::to_string).collect::<Vec<_>>())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Intersection number `d1 · d2 = d1ᵀ G d2`.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<BigInt> {
    d1.intersect(d2)
}

/// Mukai vector `(r, c1, s)` in `H⁰ ⊕ NS ⊕ H⁴`. For a sheaf, `s = χ - r`.
#[derive(Clone, PartialEq, Eq)]
pub struct MukaiVector {
    pub r: BigInt,
    pub c1: DivisorClass,
    pub s: BigInt,
}

impl MukaiVector {
    pub fn new(r: BigInt, c1: DivisorClass, s: BigInt) -> Self {
        MukaiVector { r, c1, s }
    }

    pub fn from_i64(lattice: &PicardLattice, r: i64, c1: &[i64], s: i64) -> Result<Self> {
        Ok(MukaiVector {
            r: r.into(),
            c1: DivisorClass::from_i64(lattice, c1)?,
            s: s.into(),
        })
    }

    pub fn zero(lattice: &PicardLattice) -> Self {
        MukaiVector::new(BigInt::zero(), DivisorClass::zero(lattice), BigInt::zero())
    }

    /// `v(O_X) = (1, 0, 1)`.
    pub fn structure_sheaf(lattice: &PicardLattice) -> Self {
        MukaiVector::new(BigInt::one(), DivisorClass::zero(lattice), BigInt::one())
    }

    /// `v(O_p) = (0, 0, 1)`.
    pub fn point(lattice: &PicardLattice) -> Self {
        MukaiVector::new(BigInt::zero(), DivisorClass::zero(lattice), BigInt::one())
    }

    /// `v(O_X(D)) = exp(D)·√td = (1, D, 1 + D²/2)`.
    pub fn line_bundle(d: &DivisorClass) -> Self {
        MukaiVector::new(BigInt::one(), d.clone(), BigInt::one() + d.half_square())
    }

    pub fn lattice(&self) -> &PicardLattice {
        self.c1.lattice()
    }

    pub fn mukai_pair(&self, other: &MukaiVector) -> Result<BigInt> {
        let cc = self.c1.intersect(&other.c1)?;
        Ok(cc - &self.r * &other.s - &self.s * &other.r)
    }

    pub fn square(&self) -> BigInt {
        self.c1.square() - BigInt::from(2) * &self.r * &self.s
    }

    pub fn euler_char(&self) -> BigInt {
        &self.r + &self.s
    }

    pub fn euler_pairing(&self, other: &MukaiVector) -> Result<BigInt> {
        Ok(-self.mukai_pair(other)?)
    }

    /// Multiplication by `exp(d)`.
    pub fn twist(&self, d: &DivisorClass) -> Result<MukaiVector> {
        let c1d = self.c1.intersect(d)?;
        Ok(MukaiVector {
            r: self.r.clone(),
            c1: &self.c1 + &d.scale(&self.r),
            s: &self.s + c1d + &self.r * d.half_square(),
        })
    }

    pub fn dual(&self) -> MukaiVector {
        MukaiVector {
            r: self.r.clone(),
            c1: -&self.c1,
            s: self.s.clone(),
        }
    }

    pub fn is_isotropic(&self) -> bool {
        self.square().is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// gcd of all coordinates (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.c1
            .coords()
            .iter()
            .fold(self.r.gcd(&self.s), |g, c| g.gcd(c))
    }

    pub fn checked_add(&self, other: &MukaiVector) -> Result<MukaiVector> {
        Ok(MukaiVector {
            r: &self.r + &other.r,
            c1: self.c1.checked_add(&other.c1)?,
            s: &self.s + &other.s,
        })
    }

    pub fn scale(&self, k: &BigInt) -> MukaiVector {
        MukaiVector {
            r: &self.r * k,
            c1: self.c1.scale(k),
            s: &self.s * k,
        }
    }
}

impl Add for &MukaiVector {
    type Output = MukaiVector;
    fn add(self, rhs: &MukaiVector) -> MukaiVector {
        self.checked_add(rhs).expect("lattice mismatch in Mukai vector addition")
    }
}

impl Neg for &MukaiVector {
    type Output = MukaiVector;
    fn neg(self) -> MukaiVector {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Debug for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.c1.coords().iter().map(ToString::to_string).collect();
        write!(f, "({}; {}; {})", self.r, c.join(","), self.s)
    }
}

pub fn mukai_pair(u: &MukaiVector, v: &MukaiVector) -> Result<BigInt> {
    u.mukai_pair(v)
}

/// `χ = r + s`.
pub fn euler_char(u: &MukaiVector) -> BigInt {
    u.euler_char()
}

/// `χ(u, v) = -⟨u, v⟩`.
pub fn euler_pairing(u: &MukaiVector, v: &MukaiVector) -> Result<BigInt> {
    u.euler_pairing(v)
}

pub fn twist(u: &MukaiVector, d: &DivisorClass) -> Result<MukaiVector> {
    u.twist(d)
}

pub fn dual_vector(u: &MukaiVector) -> MukaiVector {
    u.dual()
}

pub fn is_isotropic(u: &MukaiVector) -> bool {
    u.is_isotropic()
}

pub fn is_primitive(u: &MukaiVector) -> bool {
    u.is_primitive()
}

/// WIT index `i ∈ {0, 1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WitIndex(u8);

impl WitIndex {
    pub const ZERO: WitIndex = WitIndex(0);
    pub const ONE: WitIndex = WitIndex(1);
    pub const TWO: WitIndex = WitIndex(2);

    pub fn new(i: i64) -> Result<Self> {
        match i {
            0..=2 => Ok(WitIndex(i as u8)),
            _ => Err(Error::WitIndex(i)),
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// `(-1)^i`.
    pub fn sign(self) -> BigInt {
        if self.0.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }

    /// Index of the transform: a WIT_i sheaf transforms to a WIT_{2-i} sheaf.
    pub fn flipped(self) -> WitIndex {
        WitIndex(2 - self.0)
    }
}

impl TryFrom<i64> for WitIndex {
    type Error = Error;
    fn try_from(i: i64) -> Result<Self> {
        WitIndex::new(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reflexive() -> PicardLattice {
        PicardLattice::from_i64(&[&[2, 0], &[0, -12]]).unwrap()
    }

    fn mv(l: &PicardLattice, r: i64, c: &[i64], s: i64) -> MukaiVector {
        MukaiVector::from_i64(l, r, c, s).unwrap()
    }

    #[test]
    fn rejects_malformed_grams() {
        assert_eq!(PicardLattice::new(vec![]).unwrap_err(), Error::EmptyLattice);
        assert_eq!(
            PicardLattice::from_i64(&[&[2, 1], &[0, -2]]).unwrap_err(),
            Error::NotSymmetric { i: 0, j: 1 }
        );
        assert_eq!(
            PicardLattice::from_i64(&[&[3, 0], &[0, -2]]).unwrap_err(),
            Error::OddDiagonal { i: 0 }
        );
        assert!(matches!(
            PicardLattice::from_i64(&[&[2, 0], &[0, 2]]).unwrap_err(),
            Error::Signature { positive: 2, .. }
        ));
        assert!(matches!(
            PicardLattice::from_i64(&[&[-2, 0], &[0, -2]]).unwrap_err(),
            Error::Signature { positive: 0, .. }
        ));
        assert!(matches!(
            PicardLattice::from_i64(&[&[2, 0], &[0, 0]]).unwrap_err(),
            Error::Signature { zero: 1, .. }
        ));
        assert!(matches!(
            PicardLattice::from_i64(&[&[2, 0], &[0]]).unwrap_err(),
            Error::NotSquare { row: 1, .. }
        ));
        assert_eq!(reflexive().signature(), (1, 1));
    }

    #[test]
    fn intersect_examples() {
        let l = reflexive();
        let h = DivisorClass::from_i64(&l, &[1, 0]).unwrap();
        let ell = DivisorClass::from_i64(&l, &[0, 1]).unwrap();
        let both = DivisorClass::from_i64(&l, &[1, 1]).unwrap();
        assert_eq!(intersect(&h, &h).unwrap(), 2.into());
        assert_eq!(intersect(&h, &ell).unwrap(), 0.into());
        assert_eq!(intersect(&both, &both).unwrap(), (-10).into());
    }

    #[test]
    fn lattice_identity_is_by_handle() {
        let a = reflexive();
        let b = reflexive();
        let x = DivisorClass::from_i64(&a, &[1, 0]).unwrap();
        let y = DivisorClass::from_i64(&b, &[1, 0]).unwrap();
        assert_eq!(intersect(&x, &y), Err(Error::LatticeMismatch));
        assert_eq!(
            mukai_pair(&mv(&a, 1, &[0, 0], 1), &mv(&b, 1, &[0, 0], 1)),
            Err(Error::LatticeMismatch)
        );
        assert_eq!(
            twist(&mv(&a, 1, &[0, 0], 1), &y),
            Err(Error::LatticeMismatch)
        );
        assert_eq!(
            DivisorClass::from_i64(&a, &[1]).unwrap_err(),
            Error::Dimension {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn mukai_pair_examples() {
        let l = reflexive();
        let v = mv(&l, 2, &[0, 1], -3);
        assert_eq!(mukai_pair(&v, &v).unwrap(), 0.into());
        let o = mv(&l, 1, &[0, 0], 1);
        assert_eq!(mukai_pair(&o, &o).unwrap(), (-2).into());
        let p = mv(&l, 0, &[0, 0], 1);
        assert_eq!(mukai_pair(&p, &o).unwrap(), (-1).into());
    }

    #[test]
    fn euler_examples() {
        let l = reflexive();
        assert_eq!(euler_char(&mv(&l, 1, &[0, 0], 1)), 2.into());
        // E(H) with v = (2, l + 2H, -1)
        assert_eq!(euler_char(&mv(&l, 2, &[2, 1], -1)), 1.into());
        assert_eq!(euler_char(&mv(&l, 2, &[0, 1], -3)), (-1).into());

        let o = mv(&l, 1, &[0, 0], 1);
        let v = mv(&l, 2, &[0, 1], -3);
        let p = mv(&l, 0, &[0, 0], 1);
        assert_eq!(euler_pairing(&o, &o).unwrap(), 2.into());
        assert_eq!(euler_pairing(&v, &v).unwrap(), 0.into());
        assert_eq!(euler_pairing(&p, &p).unwrap(), 0.into());
    }

    #[test]
    fn twist_examples() {
        let l = reflexive();
        let h = DivisorClass::from_i64(&l, &[1, 0]).unwrap();
        let v = mv(&l, 2, &[0, 1], -3);
        let vh = twist(&v, &h).unwrap();
        assert_eq!(vh, mv(&l, 2, &[2, 1], -1));
        assert_eq!(euler_char(&vh), 1.into());
        assert_eq!(twist(&vh, &-&h).unwrap(), v);
        assert_eq!(twist(&v, &DivisorClass::zero(&l)).unwrap(), v);
    }

    #[test]
    fn dual_examples() {
        let l = reflexive();
        assert_eq!(
            dual_vector(&mv(&l, 2, &[0, 1], -3)),
            mv(&l, 2, &[0, -1], -3)
        );
        let o = mv(&l, 1, &[0, 0], 1);
        assert_eq!(dual_vector(&o), o);
        let w = mv(&l, 5, &[3, -1], 7);
        assert_eq!(dual_vector(&dual_vector(&w)), w);
    }

    #[test]
    fn isotropy_and_primitivity() {
        let l = reflexive();
        let v = mv(&l, 2, &[0, 1], -3);
        assert!(is_isotropic(&v) && is_primitive(&v));
        assert!(!is_primitive(&mv(&l, 2, &[0, 0], 2)));
        let z = MukaiVector::zero(&l);
        assert!(is_isotropic(&z));
        assert!(!is_primitive(&z));
    }

    #[test]
    fn line_bundle_vectors() {
        let l = reflexive();
        let h = DivisorClass::from_i64(&l, &[1, 0]).unwrap();
        assert_eq!(MukaiVector::line_bundle(&h), mv(&l, 1, &[1, 0], 2));
        assert_eq!(
            MukaiVector::line_bundle(&DivisorClass::zero(&l)),
            MukaiVector::structure_sheaf(&l)
        );
    }

    #[test]
    fn wit_index() {
        assert_eq!(WitIndex::new(3), Err(Error::WitIndex(3)));
        assert_eq!(WitIndex::new(-1), Err(Error::WitIndex(-1)));
        assert_eq!(WitIndex::ONE.flipped(), WitIndex::ONE);
        assert_eq!(WitIndex::ZERO.flipped(), WitIndex::TWO);
        assert_eq!(WitIndex::TWO.sign(), WitIndex::ZERO.sign());
    }

    #[test]
    fn combination_rendering() {
        let l = PicardLattice::with_labels(
            vec![vec![2.into(), 0.into()], vec![0.into(), (-12).into()]],
            vec!["H".into(), "l".into()],
        )
        .unwrap();
        let d = DivisorClass::from_i64(&l, &[7, 3]).unwrap();
        assert_eq!(d.to_combination(), "7*H + 3*l");
        assert_eq!((-&d).to_combination(), "-7*H - 3*l");
        assert_eq!(DivisorClass::zero(&l).to_combination(), "0");
        assert_eq!(DivisorClass::from_i64(&l, &[0, -1]).unwrap().to_combination(), "-l");
    }
}
