//! Homology dimensions H_p(Gamma; F^q Gamma) for p <= 2.
//!
//! For Gamma = T x H with T torsion-free and H finite, the finite-order
//! elements all sit in 1 x H and the centralizer decomposition collapses to
//!
//!   dim H_p(Gamma; F^q Gamma) = b_p(T) * d_q(H),
//!
//! where b_p are rational Betti numbers of T and d_q counts class orbits of
//! the inversion involution. F^0_0 (functions vanishing at the identity)
//! removes the identity-class summand, replacing d0 by d0 - 1.

pub mod classfile;

use crate::classdata::{class_summary, conjugacy_classes};
use crate::error::{Error, Result};
use crate::group::{GroupExpr, NormalForm};

/// Rational Betti numbers (b0, b1, b2) of a torsion-free factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiVector(pub [u64; 3]);

impl BettiVector {
    pub fn new(b0: u64, b1: u64, b2: u64) -> BettiVector {
        BettiVector([b0, b1, b2])
    }

    /// The unit for `kunneth`: the Betti numbers of a point.
    pub fn point() -> BettiVector {
        BettiVector([1, 0, 0])
    }

    pub fn b(&self, p: usize) -> u64 {
        self.0[p]
    }
}

/// Betti numbers of a single torsion-free atom.
pub fn betti_vector(atom: &GroupExpr) -> Result<BettiVector> {
    match atom {
        GroupExpr::Trivial => Ok(BettiVector([1, 0, 0])),
        GroupExpr::Z => Ok(BettiVector([1, 1, 0])),
        GroupExpr::Free(k) => Ok(BettiVector([1, *k, 0])),
        GroupExpr::Surface(g) => {
            if *g == 0 {
                return Err(Error::domain("surface genus must be at least 1"));
            }
            let b1 = g
                .checked_mul(2)
                .ok_or_else(|| Error::Overflow("2g".into()))?;
            Ok(BettiVector([1, b1, 1]))
        }
        other => Err(Error::domain(format!("not a torsion-free atom: {other}"))),
    }
}

/// Degree-truncated convolution: c_p = sum over i+j=p of a_i * b_j.
pub fn kunneth(a: &BettiVector, b: &BettiVector) -> Result<BettiVector> {
    let mut c = [0u64; 3];
    for p in 0..3 {
        let mut acc: u64 = 0;
        for i in 0..=p {
            let term = a.0[i]
                .checked_mul(b.0[p - i])
                .ok_or_else(|| Error::Overflow("Kunneth term".into()))?;
            acc = acc
                .checked_add(term)
                .ok_or_else(|| Error::Overflow("Kunneth sum".into()))?;
        }
        c[p] = acc;
    }
    Ok(BettiVector(c))
}

/// Betti numbers of the whole torsion-free part of a normal form.
pub fn torsion_free_betti(nf: &NormalForm) -> Result<BettiVector> {
    let mut acc = BettiVector::point();
    for atom in &nf.torsion_free {
        acc = kunneth(&acc, &betti_vector(atom)?)?;
    }
    Ok(acc)
}

fn check_pq(p: u8, q: u8, zero_at_identity: bool) -> Result<()> {
    if p > 2 {
        return Err(Error::domain(format!("p must be 0, 1, or 2 (got {p})")));
    }
    if q > 1 {
        return Err(Error::domain(format!("q must be 0 or 1 (got {q})")));
    }
    if zero_at_identity && q == 1 {
        return Err(Error::domain(
            "zero_at_identity applies only to q = 0; for q = 1 the two modules coincide",
        ));
    }
    Ok(())
}

/// dim H_p(Gamma; F^q Gamma), with the coefficient module cut down to
/// functions vanishing at the identity when `zero_at_identity` is set
/// (q = 0 only).
pub fn homology_dim(nf: &NormalForm, p: u8, q: u8, zero_at_identity: bool) -> Result<u64> {
    check_pq(p, q, zero_at_identity)?;
    let b = torsion_free_betti(nf)?.b(p as usize);
    let s = class_summary(&conjugacy_classes(&nf.finite));
    let d = match (q, zero_at_identity) {
        (0, false) => s.d0,
        (0, true) => s.d0_zero,
        _ => s.d1,
    };
    b.checked_mul(d)
        .ok_or_else(|| Error::Overflow("homology dimension".into()))
}
