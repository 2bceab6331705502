//! Self-verification suites: exact identities run on demand, reported as
//! pass/fail counts. The CLI surfaces them; the acceptance tests run them at
//! full size.

use num::BigRational;

use crate::classdata::{class_summary, conjugacy_classes, dq_bruteforce_oracle};
use crate::error::Result;
use crate::group::{normalize, parse_group_expr, FiniteGroup};
use crate::homology::classfile::{generate_class_data, homology_from_class_data};
use crate::homology::homology_dim;
use crate::matthey::{collapse_expansion, fundamental_class_expansion, verify_expansion_equality};
use crate::ratmat::RatMatrix;
use crate::repring::{
    complexify, im_part, prop21_forward, prop21_inverse, re_part, realify, tau, CycRingElt,
};

const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    /// First few failure descriptions; the counter above is complete.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            passed: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, desc: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(desc());
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Linear-map identities of the representation-ring model, full basis, every
/// modulus up to `max_modulus`.
pub fn repring_suite(max_modulus: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("repring");
    for m in 1..=max_modulus.max(1) as usize {
        for l in 0..m {
            let x = CycRingElt::basis(m, l);
            // c(r(x)) = x + tau(x).
            rep.check(
                complexify(&realify(&x)) == x.add(&tau(&x)),
                || format!("c(r(.)) = 1 + tau at m={m} l={l}"),
            );
            // r(c(y)) = 2y on the tau-fixed subspace.
            let y = realify(&x);
            let two = BigRational::from_integer(2.into());
            rep.check(
                complexify(&realify(&complexify(&y))) == complexify(&y).scale(&two),
                || format!("r(c(.)) = 2 at m={m} l={l}"),
            );
            // Reconstruction: x = c(Re x) + (1 - tau)(x)/2.
            rep.check(
                complexify(&re_part(&x)).add(im_part(&x).as_elt()) == x,
                || format!("x = c(Re x) + Im-part at m={m} l={l}"),
            );
            // Degree-0 splitting roundtrip.
            let (re, im) = prop21_inverse(&x);
            rep.check(
                prop21_forward(&re, &im) == x,
                || format!("splitting roundtrip at m={m} l={l}"),
            );
        }
        // Subspace ranks match the class counts of the cyclic group.
        let re_rows: Vec<Vec<BigRational>> = (0..m)
            .map(|l| complexify(&re_part(&CycRingElt::basis(m, l))).coeffs().to_vec())
            .collect();
        let im_rows: Vec<Vec<BigRational>> = (0..m)
            .map(|l| im_part(&CycRingElt::basis(m, l)).as_elt().coeffs().to_vec())
            .collect();
        rep.check(
            RatMatrix::from_rows(re_rows).rank() == m / 2 + 1,
            || format!("symmetric subspace rank at m={m}"),
        );
        rep.check(
            RatMatrix::from_rows(im_rows).rank() == m.div_ceil(2) - 1,
            || format!("antisymmetric subspace rank at m={m}"),
        );
    }
    rep
}

/// Expansion/collapse equality and term counts for every p, q, and modulus
/// up to `max_modulus`.
pub fn matthey_suite(max_modulus: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("matthey");
    for m in 1..=max_modulus.max(1) {
        for p in 0..=2u8 {
            for q in 0..=1u8 {
                let raw = match fundamental_class_expansion(p, m, q) {
                    Ok(e) => e,
                    Err(err) => {
                        rep.check(false, || format!("expansion p={p} m={m} q={q}: {err}"));
                        continue;
                    }
                };
                let collapsed = collapse_expansion(&raw);
                rep.check(
                    verify_expansion_equality(&raw, &collapsed),
                    || format!("collapse equality at p={p} m={m} q={q}"),
                );
                if p == 0 {
                    let nonzero =
                        collapsed.terms.iter().filter(|t| !t.coefficient.is_zero()).count() as u64;
                    let expected = if q == 0 { m / 2 + 1 } else { m.div_ceil(2) - 1 };
                    rep.check(
                        nonzero == expected,
                        || format!("term count at m={m} q={q}: {nonzero} != {expected}"),
                    );
                    let rows: Vec<Vec<BigRational>> = raw
                        .terms
                        .iter()
                        .map(|t| t.coefficient.as_elt().coeffs().to_vec())
                        .collect();
                    rep.check(
                        RatMatrix::from_rows(rows).rank() as u64 == expected,
                        || format!("coefficient span rank at m={m} q={q}"),
                    );
                }
            }
        }
    }
    rep
}

/// Class counts against the rank oracle, and the class-data round-trip.
pub fn classdata_suite(max_modulus: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("classdata");
    let cap = crate::group::DEFAULT_ELEMENT_CAP;
    for m in 1..=max_modulus.max(1) {
        let h = FiniteGroup::cyclic(m, cap)?;
        let s = class_summary(&conjugacy_classes(&h));
        rep.check(
            s.d0 == m / 2 + 1 && s.d1 == m.div_ceil(2) - 1,
            || format!("cyclic({m}) class formulas"),
        );
        rep.check(
            dq_bruteforce_oracle(&h, 0) == s.d0 && dq_bruteforce_oracle(&h, 1) == s.d1,
            || format!("cyclic({m}) oracle"),
        );
    }
    let named = [
        "abelian(2, 2)",
        "abelian(2, 4)",
        "abelian(4, 4)",
        "perm(\"(1 2 3)\", \"(1 2)\")",
        "perm(\"(1 2 3 4)\", \"(1 3)\")",
        "perm(\"(1 3 2 4)(5 7 6 8)\", \"(1 5 2 6)(3 8 4 7)\")",
    ];
    for text in named {
        let h = normalize(&parse_group_expr(text)?)?.finite;
        let s = class_summary(&conjugacy_classes(&h));
        rep.check(
            dq_bruteforce_oracle(&h, 0) == s.d0 && dq_bruteforce_oracle(&h, 1) == s.d1,
            || format!("{text} oracle"),
        );
    }
    for text in ["trivial", "surface(1) * cyclic(3)", "Z * cyclic(4)", "free(2) * abelian(2, 2)"] {
        let e = parse_group_expr(text)?;
        let nf = normalize(&e)?;
        let cdf = generate_class_data(&e, cap)?;
        for p in 0..=2u8 {
            for (q, zai) in [(0u8, false), (0, true), (1, false)] {
                rep.check(
                    homology_from_class_data(&cdf, p, q, zai)? == homology_dim(&nf, p, q, zai)?,
                    || format!("{text} round-trip p={p} q={q} zero_at_identity={zai}"),
                );
            }
        }
    }
    Ok(rep)
}

/// All suites at the given modulus bound, in a fixed order.
pub fn run_all_suites(max_modulus: u64) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        repring_suite(max_modulus),
        matthey_suite(max_modulus),
        classdata_suite(max_modulus)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_modulus_sixteen() {
        for rep in run_all_suites(16).unwrap() {
            assert!(
                rep.all_passed(),
                "{} failed: {:?}",
                rep.name,
                rep.failures
            );
            assert!(rep.passed > 0);
        }
    }
}
