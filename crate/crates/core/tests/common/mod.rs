#![allow(dead_code)]

use k3fm::{DivisorClass, MukaiVector, PicardLattice, ReflexiveSurface};
use num_bigint::BigInt;
use rand::Rng;
use std::sync::OnceLock;

/// One shared generic surface: classes only combine within the same lattice
/// handle.
pub fn generic() -> ReflexiveSurface {
    static SURFACE: OnceLock<ReflexiveSurface> = OnceLock::new();
    SURFACE.get_or_init(ReflexiveSurface::generic).clone()
}

pub fn vector(lattice: &PicardLattice, r: i64, c: &[i64], s: i64) -> MukaiVector {
    MukaiVector::from_i64(lattice, r, c, s).unwrap()
}

pub fn random_vector<R: Rng>(rng: &mut R, lattice: &PicardLattice, bound: i64) -> MukaiVector {
    let c: Vec<i64> = (0..lattice.rank())
        .map(|_| rng.gen_range(-bound..=bound))
        .collect();
    vector(
        lattice,
        rng.gen_range(-bound..=bound),
        &c,
        rng.gen_range(-bound..=bound),
    )
}

/// Every vector with all entries in `[-b, b]` on a rank-2 lattice.
pub fn sweep(lattice: &PicardLattice, b: i64) -> impl Iterator<Item = MukaiVector> + '_ {
    let range = move || -b..=b;
    range().flat_map(move |r| {
        range().flat_map(move |x| {
            range().flat_map(move |y| range().map(move |s| vector(lattice, r, &[x, y], s)))
        })
    })
}

/// Independent nodal scan: every coordinate vector in `[-radius, radius]^n`.
pub fn brute_force_nodal(h: &DivisorClass, dmax: i64, radius: i64) -> Vec<Vec<BigInt>> {
    let lattice = h.lattice();
    let n = lattice.rank();
    let mut found = Vec::new();
    let mut x = vec![-radius; n];
    loop {
        let d = DivisorClass::from_i64(lattice, &x).unwrap();
        let deg = d.intersect(h).unwrap();
        if d.square() == BigInt::from(-2) && deg >= BigInt::from(1) && deg <= BigInt::from(dmax) {
            found.push(d.coords().to_vec());
        }
        let mut i = 0;
        while i < n && x[i] == radius {
            x[i] = -radius;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    found.sort();
    found
}
