//! Fundamental-class coefficient expansions over a cyclic group and their
//! cosine/sine collapse, verified by exact regrouping.
//!
//! The degree-(p+2q) classes in question expand as a sum over l = 0..m-1 of
//!
//!   (geometric factor) x (Re[w^l] or Im[w^l]) (x) w^{-l},
//!
//! with w the primitive m-th root of unity. Since Re and Im are invariant
//! (resp. anti-invariant) under l -> m-l, the sum regroups into one term per
//! inversion orbit: scalars w^l + w^{-l} (cosine form) or w^{-l} - w^l (sine
//! form) on the paired indices. The self-paired indices l = 0 and l = m/2
//! keep scalar coefficient 1; doubling them, as a literal reading of the
//! cosine formula suggests, breaks the equality, and `verify_expansion_equality`
//! detects exactly that. Everything stays in Q[x]/(x^m - 1), so equality here
//! implies equality of the complex evaluations.

use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::repring::{im_part, re_part, CycRingElt, ROElt, RQuotElt};

/// The symbolic factor `[G^(p)]_KO`: the KO fundamental class of a point, a
/// circle, or a genus-g surface. Never evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeomFactor {
    Point,
    Circle,
    Surface,
}

impl GeomFactor {
    fn for_p(p: u8) -> GeomFactor {
        match p {
            0 => GeomFactor::Point,
            1 => GeomFactor::Circle,
            _ => GeomFactor::Surface,
        }
    }
}

impl fmt::Display for GeomFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomFactor::Point => write!(f, "[point]_KO"),
            GeomFactor::Circle => write!(f, "[circle]_KO"),
            GeomFactor::Surface => write!(f, "[surface]_KO"),
        }
    }
}

/// Coefficient class of one term: symmetric (Re) for q=0, antisymmetric (Im)
/// for q=1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffClass {
    Re(ROElt),
    Im(RQuotElt),
}

impl CoeffClass {
    pub fn as_elt(&self) -> &CycRingElt {
        match self {
            CoeffClass::Re(x) => x.as_elt(),
            CoeffClass::Im(y) => y.as_elt(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_elt().is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundClassTerm {
    /// Index l of the term (orbit representative after collapsing).
    pub l: usize,
    pub coefficient: CoeffClass,
    /// Scalar tensor factor in Q[x]/(x^m - 1).
    pub scalar: CycRingElt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundClassExpansion {
    pub p: u8,
    pub m: usize,
    pub q: u8,
    /// The class lives in KO_{p+2q} of the classifying object.
    pub ko_degree: u8,
    pub geometric_factor: GeomFactor,
    pub terms: Vec<FundClassTerm>,
}

/// The raw m-term expansion at (p, m, q).
pub fn fundamental_class_expansion(p: u8, m: u64, q: u8) -> Result<FundClassExpansion> {
    if p > 2 {
        return Err(Error::domain(format!("p must be 0, 1, or 2 (got {p})")));
    }
    if q > 1 {
        return Err(Error::domain(format!("q must be 0 or 1 (got {q})")));
    }
    if m == 0 {
        return Err(Error::domain("modulus must be at least 1"));
    }
    let m = usize::try_from(m).map_err(|_| Error::resource("modulus too large"))?;
    let terms = (0..m)
        .map(|l| {
            let basis = CycRingElt::basis(m, l);
            let coefficient = if q == 0 {
                CoeffClass::Re(re_part(&basis))
            } else {
                CoeffClass::Im(im_part(&basis))
            };
            FundClassTerm {
                l,
                coefficient,
                scalar: CycRingElt::basis(m, (m - l) % m),
            }
        })
        .collect();
    Ok(FundClassExpansion {
        p,
        m,
        q,
        ko_degree: p + 2 * q,
        geometric_factor: GeomFactor::for_p(p),
        terms,
    })
}

/// Groups indices l and m-l. Paired indices 1 <= l < m/2 get scalar
/// w^l + w^{-l} (q=0) or w^{-l} - w^l (q=1); self-paired indices keep scalar
/// coefficient 1 for q=0 and drop out for q=1 (zero coefficient class).
pub fn collapse_expansion(e: &FundClassExpansion) -> FundClassExpansion {
    let m = e.m;
    let mut terms = Vec::new();
    for l in 0..=m / 2 {
        let self_paired = l == 0 || 2 * l == m;
        let basis = CycRingElt::basis(m, l);
        let minus = CycRingElt::basis(m, (m - l) % m);
        if e.q == 0 {
            let scalar = if self_paired { minus } else { basis.add(&minus) };
            terms.push(FundClassTerm {
                l,
                coefficient: CoeffClass::Re(re_part(&basis)),
                scalar,
            });
        } else {
            if self_paired {
                continue;
            }
            terms.push(FundClassTerm {
                l,
                coefficient: CoeffClass::Im(im_part(&basis)),
                scalar: minus.sub(&basis),
            });
        }
    }
    FundClassExpansion {
        p: e.p,
        m,
        q: e.q,
        ko_degree: e.ko_degree,
        geometric_factor: e.geometric_factor,
        terms,
    }
}

/// Total tensor of an expansion in (Q[x]/(x^m-1)) (x) (Q[x]/(x^m-1)):
/// entry (j, k) collects coefficient-basis index j against scalar-basis
/// index k.
fn expansion_tensor(e: &FundClassExpansion) -> Vec<Vec<BigRational>> {
    let m = e.m;
    let mut t = vec![vec![BigRational::zero(); m]; m];
    for term in &e.terms {
        for (j, c) in term.coefficient.as_elt().coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, s) in term.scalar.coeffs().iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                t[j][k] = &t[j][k] + c * s;
            }
        }
    }
    t
}

/// Exact equality of two expansions as tensors. Expansions over different
/// (p, m, q) are never equal.
pub fn verify_expansion_equality(a: &FundClassExpansion, b: &FundClassExpansion) -> bool {
    if (a.p, a.m, a.q) != (b.p, b.m, b.q) {
        return false;
    }
    expansion_tensor(a) == expansion_tensor(b)
}

/// Renders a ring element as a signed sum of `[w^l]` basis terms.
pub fn render_ring_elt(x: &CycRingElt) -> String {
    let mut out = String::new();
    for (l, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign_negative = c < &BigRational::zero();
        if out.is_empty() {
            if sign_negative {
                out.push('-');
            }
        } else {
            out.push_str(if sign_negative { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("({mag})"));
        }
        out.push_str(&format!("[w^{l}]"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Human-readable printout, one line per term.
pub fn render_expansion(e: &FundClassExpansion) -> String {
    let part = if e.q == 0 { "Re" } else { "Im" };
    let mut out = format!(
        "{} (x) sum over Z/{} orbits, {} part, KO-degree {} (p={}, q={}):\n",
        e.geometric_factor, e.m, part, e.ko_degree, e.p, e.q
    );
    if e.terms.is_empty() {
        out.push_str("  (no terms)\n");
    }
    for term in &e.terms {
        out.push_str(&format!(
            "  l={}: {}  (x)  {}\n",
            term.l,
            render_ring_elt(term.coefficient.as_elt()),
            render_ring_elt(&term.scalar)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::RatMatrix;

    fn exp(p: u8, m: u64, q: u8) -> FundClassExpansion {
        fundamental_class_expansion(p, m, q).unwrap()
    }

    #[test]
    fn raw_expansion_has_m_terms() {
        for m in 1..=12u64 {
            for q in 0..=1u8 {
                let e = exp(1, m, q);
                assert_eq!(e.terms.len(), m as usize);
                for (l, term) in e.terms.iter().enumerate() {
                    assert_eq!(term.l, l);
                    assert_eq!(term.scalar, CycRingElt::basis(m as usize, (m as usize - l) % m as usize));
                }
            }
        }
    }

    #[test]
    fn degenerate_moduli_cases() {
        // p=0, m=2, q=1: both Im coefficients vanish.
        let e = exp(0, 2, 1);
        assert!(e.terms.iter().all(|t| t.coefficient.is_zero()));
        // p=0, m=1, q=0: a single (Re[1], 1) term.
        let e = exp(0, 1, 0);
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].coefficient.as_elt(), &CycRingElt::basis(1, 0));
        assert_eq!(e.terms[0].scalar, CycRingElt::basis(1, 0));
        // Collapse of m=1 is the same single term.
        let c = collapse_expansion(&e);
        assert_eq!(c.terms, e.terms);
    }

    #[test]
    fn collapse_m4_q0_matches_expected_scalars() {
        let c = collapse_expansion(&exp(0, 4, 0));
        assert_eq!(c.terms.len(), 3);
        assert_eq!(c.terms[0].scalar, CycRingElt::basis(4, 0));
        assert_eq!(
            c.terms[1].scalar,
            CycRingElt::basis(4, 1).add(&CycRingElt::basis(4, 3))
        );
        assert_eq!(c.terms[2].scalar, CycRingElt::basis(4, 2));
    }

    #[test]
    fn collapse_m4_q1_single_sine_term() {
        let c = collapse_expansion(&exp(0, 4, 1));
        assert_eq!(c.terms.len(), 1);
        assert_eq!(c.terms[0].l, 1);
        assert_eq!(
            c.terms[0].scalar,
            CycRingElt::basis(4, 3).sub(&CycRingElt::basis(4, 1))
        );
    }

    #[test]
    fn collapse_is_exact_up_to_16() {
        for m in 1..=16u64 {
            for p in 0..=2u8 {
                for q in 0..=1u8 {
                    let raw = exp(p, m, q);
                    let collapsed = collapse_expansion(&raw);
                    assert!(
                        verify_expansion_equality(&raw, &collapsed),
                        "m={m} p={p} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn nonzero_term_counts_match_class_counts() {
        for m in 1..=16u64 {
            let c0 = collapse_expansion(&exp(0, m, 0));
            let nonzero0 = c0.terms.iter().filter(|t| !t.coefficient.is_zero()).count() as u64;
            assert_eq!(nonzero0, m / 2 + 1, "q=0 m={m}");
            let c1 = collapse_expansion(&exp(0, m, 1));
            let nonzero1 = c1.terms.iter().filter(|t| !t.coefficient.is_zero()).count() as u64;
            assert_eq!(nonzero1, m.div_ceil(2) - 1, "q=1 m={m}");
        }
    }

    #[test]
    fn doubling_a_boundary_term_is_detected() {
        let raw = exp(0, 6, 0);
        let mut tampered = collapse_expansion(&raw);
        assert!(verify_expansion_equality(&raw, &tampered));
        let two = BigRational::from_integer(2.into());
        tampered.terms[0].scalar = tampered.terms[0].scalar.scale(&two);
        assert!(!verify_expansion_equality(&raw, &tampered));
        // Same at the other self-paired index m/2.
        let mut tampered = collapse_expansion(&raw);
        let last = tampered.terms.len() - 1;
        assert_eq!(tampered.terms[last].l, 3);
        tampered.terms[last].scalar = tampered.terms[last].scalar.scale(&two);
        assert!(!verify_expansion_equality(&raw, &tampered));
    }

    #[test]
    fn mismatched_headers_are_not_equal() {
        assert!(!verify_expansion_equality(&exp(0, 4, 0), &exp(0, 4, 1)));
        assert!(!verify_expansion_equality(&exp(0, 4, 0), &exp(1, 4, 0)));
    }

    #[test]
    fn raw_coefficients_span_dq_dimensions() {
        for m in 1..=16usize {
            for q in 0..=1u8 {
                let e = exp(0, m as u64, q);
                let rows: Vec<Vec<BigRational>> = e
                    .terms
                    .iter()
                    .map(|t| t.coefficient.as_elt().coeffs().to_vec())
                    .collect();
                let rank = RatMatrix::from_rows(rows).rank() as u64;
                let expected = if q == 0 {
                    m as u64 / 2 + 1
                } else {
                    (m as u64).div_ceil(2) - 1
                };
                assert_eq!(rank, expected, "m={m} q={q}");
            }
        }
    }

    #[test]
    fn renderer_mentions_each_term() {
        let text = render_expansion(&collapse_expansion(&exp(1, 3, 0)));
        assert!(text.contains("[circle]_KO"), "{text}");
        assert!(text.contains("l=0"), "{text}");
        assert!(text.contains("l=1"), "{text}");
        assert!(text.contains("(1/2)[w^1] + (1/2)[w^2]"), "{text}");
        let empty = render_expansion(&collapse_expansion(&exp(0, 1, 1)));
        assert!(empty.contains("(no terms)"), "{empty}");
    }
}
