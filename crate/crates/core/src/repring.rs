//! Exact model of the rational representation ring of a cyclic group and its
//! real companions.
//!
//! R(Z/m) tensor Q is Q[x]/(x^m - 1) with x the class of the character
//! sending the generator to the primitive m-th root of unity w. The basis is
//! [w^0], ..., [w^{m-1}]. The conjugation involution tau sends [w^l] to
//! [w^{m-l}]; RO sits inside as the tau-fixed subspace via complexification,
//! and R/(1+tau) is carried in antisymmetric normal form, the image of
//! (1-tau)/2. All scalars are exact rationals.

use num::{BigRational, One, Zero};

use crate::classdata::ClassSummary;
use crate::error::{Error, Result};

/// Element of Q[x]/(x^m - 1); `coeffs[l]` is the coefficient of [w^l].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycRingElt {
    m: usize,
    coeffs: Vec<BigRational>,
}

impl CycRingElt {
    pub fn zero(m: usize) -> CycRingElt {
        assert!(m >= 1, "modulus must be at least 1");
        CycRingElt {
            m,
            coeffs: vec![BigRational::zero(); m],
        }
    }

    /// The basis element [w^l] (l taken mod m).
    pub fn basis(m: usize, l: usize) -> CycRingElt {
        let mut e = CycRingElt::zero(m);
        e.coeffs[l % m] = BigRational::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> CycRingElt {
        assert!(!coeffs.is_empty(), "modulus must be at least 1");
        CycRingElt {
            m: coeffs.len(),
            coeffs,
        }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, l: usize) -> &BigRational {
        &self.coeffs[l % self.m]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &CycRingElt) -> CycRingElt {
        assert_eq!(self.m, rhs.m, "modulus mismatch");
        CycRingElt {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &CycRingElt) -> CycRingElt {
        assert_eq!(self.m, rhs.m, "modulus mismatch");
        CycRingElt {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> CycRingElt {
        CycRingElt {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Ring product: convolution of exponents mod m.
    pub fn mul(&self, rhs: &CycRingElt) -> CycRingElt {
        assert_eq!(self.m, rhs.m, "modulus mismatch");
        let mut out = CycRingElt::zero(self.m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % self.m;
                out.coeffs[k] = &out.coeffs[k] + a * b;
            }
        }
        out
    }
}

/// tau, induced by complex conjugation: [w^l] -> [w^{m-l}].
pub fn tau(x: &CycRingElt) -> CycRingElt {
    let m = x.m;
    CycRingElt {
        m,
        coeffs: (0..m).map(|l| x.coeffs[(m - l) % m].clone()).collect(),
    }
}

/// Element of RO(Z/m) tensor Q, embedded as the tau-fixed subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ROElt(CycRingElt);

impl ROElt {
    /// Accepts only tau-symmetric vectors.
    pub fn new(x: CycRingElt) -> Result<ROElt> {
        if tau(&x) != x {
            return Err(Error::domain("not tau-symmetric"));
        }
        Ok(ROElt(x))
    }

    pub fn as_elt(&self) -> &CycRingElt {
        &self.0
    }
}

/// Element of R(Z/m)/(1+tau) tensor Q in antisymmetric normal form, the
/// image of (1-tau)/2. In particular coeff 0 vanishes, and coeff m/2
/// vanishes for even m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RQuotElt(CycRingElt);

impl RQuotElt {
    /// Accepts only tau-antisymmetric vectors.
    pub fn new(x: CycRingElt) -> Result<RQuotElt> {
        if tau(&x) != x.scale(&-BigRational::one()) {
            return Err(Error::domain("not tau-antisymmetric"));
        }
        Ok(RQuotElt(x))
    }

    pub fn as_elt(&self) -> &CycRingElt {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// r: restriction of scalars. realify(x) = x + tau(x), so that
/// complexify(realify(x)) = (1+tau)(x) and realify(complexify(y)) = 2y.
pub fn realify(x: &CycRingElt) -> ROElt {
    ROElt(x.add(&tau(x)))
}

/// c: complexification, the identity embedding of the tau-fixed subspace.
pub fn complexify(x: &ROElt) -> CycRingElt {
    x.0.clone()
}

/// The i=2 comparison map R/(1+tau) -> R, y -> (1-tau)(y-hat) for any
/// representative; on normal forms this is multiplication by 2.
pub fn complexify_quot(y: &RQuotElt) -> CycRingElt {
    y.0.scale(&BigRational::from_integer(2.into()))
}

/// Re x := r(x)/2 in the tau-fixed subspace.
pub fn re_part(x: &CycRingElt) -> ROElt {
    let half = BigRational::new(1.into(), 2.into());
    ROElt(x.add(&tau(x)).scale(&half))
}

/// Im x: the class of x in R/(1+tau), in normal form (x - tau(x))/2.
pub fn im_part(x: &CycRingElt) -> RQuotElt {
    let half = BigRational::new(1.into(), 2.into());
    RQuotElt(x.sub(&tau(x)).scale(&half))
}

/// The degree-0 isomorphism RO (+) R/(1+tau) -> R in normal-form
/// coordinates. Inverse of `prop21_inverse`, exactly.
pub fn prop21_forward(x: &ROElt, y: &RQuotElt) -> CycRingElt {
    x.0.add(&y.0)
}

/// Splits z into its tau-symmetric and antisymmetric parts.
pub fn prop21_inverse(z: &CycRingElt) -> (ROElt, RQuotElt) {
    (re_part(z), im_part(z))
}

/// Rank of KO_i of the (rationalized) group C*-algebra of a finite group
/// with the given class summary: d0 for i = 0 mod 4, d1 for i = 2 mod 4,
/// zero in odd degrees.
pub fn ko_coeff_rank(s: &ClassSummary, i: i64) -> u64 {
    match i.rem_euclid(4) {
        0 => s.d0,
        2 => s.d1,
        _ => 0,
    }
}

/// Rank of K_i: the class count in even degrees, zero in odd ones.
pub fn ku_coeff_rank(s: &ClassSummary, i: i64) -> u64 {
    if i.rem_euclid(2) == 0 {
        s.num_classes
    } else {
        0
    }
}
