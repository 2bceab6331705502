//! Conjugacy classes, the inversion involution on them, and the counts
//! r_real, r_pairs, d0, d1 they determine.
//!
//! The coinvariants of the functions on a finite group H under conjugation
//! have the class indicators as a basis. Inversion permutes classes; d0 and
//! d1 are the ranks of its +1 and -1 eigenspaces:
//!   d0 = r_real + r_pairs,  d1 = r_pairs,  r_real + 2 r_pairs = num_classes.
//! No characters are needed anywhere.

use num::{BigRational, One};

use crate::group::FiniteGroup;
use crate::ratmat::RatMatrix;

/// Conjugacy classes of a finite group together with the class-level
/// inversion involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassData {
    /// Per class: (representative index, members in ascending index order).
    /// The representative is the smallest member. Classes are ordered by
    /// representative, so the identity class is class 0.
    pub classes: Vec<(usize, Vec<usize>)>,
    /// Element index -> class index.
    pub class_of: Vec<usize>,
    /// Class index -> class of the inverses of its members. An involution.
    pub inv_class: Vec<usize>,
    /// Class containing the identity. Always 0 with this ordering.
    pub identity_class: usize,
}

/// Counts derived from `ConjClassData`; these are the dimensions
/// dim H_0(H; F^0 H) = d0, dim H_0(H; F^1 H) = d1, dim H_0(H; F^0_0 H) = d0_zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSummary {
    pub num_classes: u64,
    /// Classes equal to their inverse class.
    pub r_real: u64,
    /// Unordered pairs {C, C^-1} with C != C^-1.
    pub r_pairs: u64,
    pub d0: u64,
    pub d1: u64,
    pub d0_zero: u64,
}

/// Computes conjugation orbits and the inversion involution on them.
pub fn conjugacy_classes(h: &FiniteGroup) -> ConjClassData {
    let n = h.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        // Orbit of `start` under conjugation by every group element.
        let mut members = Vec::new();
        let mut stack = vec![start];
        class_of[start] = idx;
        while let Some(x) = stack.pop() {
            members.push(x);
            for g in 0..n {
                let y = h.mul(h.mul(g, x), h.inv(g));
                if class_of[y] == usize::MAX {
                    class_of[y] = idx;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push((members[0], members));
    }
    let inv_class = classes
        .iter()
        .map(|(rep, _)| class_of[h.inv(*rep)])
        .collect();
    ConjClassData {
        classes,
        class_of,
        inv_class,
        identity_class: 0,
    }
}

/// Counts real classes and class pairs, and the derived d-values.
pub fn class_summary(cd: &ConjClassData) -> ClassSummary {
    let num_classes = cd.classes.len() as u64;
    let r_real = cd
        .inv_class
        .iter()
        .enumerate()
        .filter(|&(c, &ic)| c == ic)
        .count() as u64;
    let r_pairs = (num_classes - r_real) / 2;
    let d0 = r_real + r_pairs;
    ClassSummary {
        num_classes,
        r_real,
        r_pairs,
        d0,
        d1: r_pairs,
        d0_zero: d0 - 1,
    }
}

/// Independent oracle for d0/d1: the rank of (1 + (-1)^q sigma)/2 over exact
/// rationals, where sigma is the permutation matrix of the inversion
/// involution on the class basis.
pub fn dq_bruteforce_oracle(h: &FiniteGroup, q: u8) -> u64 {
    assert!(q <= 1, "q must be 0 or 1");
    let cd = conjugacy_classes(h);
    let k = cd.classes.len();
    let half = BigRational::new(1.into(), 2.into());
    let sign = if q == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    let mut m = RatMatrix::zeros(k, k);
    for c in 0..k {
        let v = m.get(c, c) + &half;
        m.set(c, c, v);
        let t = cd.inv_class[c];
        let v = m.get(t, c) + &half * &sign;
        m.set(t, c, v);
    }
    m.rank() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{normalize, parse_group_expr};

    const CAP: usize = 100_000;

    fn group(text: &str) -> FiniteGroup {
        normalize(&parse_group_expr(text).unwrap()).unwrap().finite
    }

    #[test]
    fn cyclic_three_classes_and_involution() {
        let cd = conjugacy_classes(&group("cyclic(3)"));
        assert_eq!(cd.classes.len(), 3);
        assert_eq!(cd.identity_class, 0);
        assert_eq!(cd.inv_class, vec![0, 2, 1]);
        let s = class_summary(&cd);
        assert_eq!((s.r_real, s.r_pairs, s.d0, s.d1, s.d0_zero), (1, 1, 2, 1, 1));
    }

    #[test]
    fn s3_has_three_real_classes() {
        let cd = conjugacy_classes(&group("perm(\"(1 2 3)\", \"(1 2)\")"));
        assert_eq!(cd.classes.len(), 3);
        assert!(cd.inv_class.iter().enumerate().all(|(c, &ic)| c == ic));
        let s = class_summary(&cd);
        assert_eq!((s.d0, s.d1, s.d0_zero), (3, 0, 2));
        // Class sizes of S3: 1, 3, 2.
        let mut sizes: Vec<usize> = cd.classes.iter().map(|(_, m)| m.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn trivial_group_single_class() {
        let cd = conjugacy_classes(&FiniteGroup::trivial());
        assert_eq!(cd.classes.len(), 1);
        let s = class_summary(&cd);
        assert_eq!((s.d0, s.d1, s.d0_zero), (1, 0, 0));
    }

    #[test]
    fn classes_partition_the_group() {
        for text in ["cyclic(12)", "abelian(2, 4)", "perm(\"(1 2 3 4)\", \"(1 3)\")"] {
            let h = group(text);
            let cd = conjugacy_classes(&h);
            let total: usize = cd.classes.iter().map(|(_, m)| m.len()).sum();
            assert_eq!(total, h.order(), "{text}");
            for (c, &ic) in cd.inv_class.iter().enumerate() {
                assert_eq!(cd.inv_class[ic], c, "{text}: involution");
                assert_eq!(
                    cd.classes[ic].1.len(),
                    cd.classes[c].1.len(),
                    "{text}: inverse class size"
                );
            }
            assert_eq!(cd.inv_class[cd.identity_class], cd.identity_class);
        }
    }

    #[test]
    fn cyclic_formulas_up_to_200() {
        for m in 1..=200u64 {
            let h = FiniteGroup::cyclic(m, CAP).unwrap();
            let s = class_summary(&conjugacy_classes(&h));
            assert_eq!(s.d0, m / 2 + 1, "d0 of cyclic({m})");
            assert_eq!(s.d1, m.div_ceil(2) - 1, "d1 of cyclic({m})");
            assert_eq!(s.d0_zero, m / 2, "d0_zero of cyclic({m})");
        }
    }

    #[test]
    fn oracle_matches_counts_on_sample() {
        for text in [
            "cyclic(4)",
            "cyclic(7)",
            "abelian(2, 3)",
            "abelian(4, 4)",
            "perm(\"(1 2 3)\", \"(1 2)\") * cyclic(2)",
        ] {
            let h = group(text);
            let s = class_summary(&conjugacy_classes(&h));
            assert_eq!(dq_bruteforce_oracle(&h, 0), s.d0, "{text} q=0");
            assert_eq!(dq_bruteforce_oracle(&h, 1), s.d1, "{text} q=1");
        }
    }

    #[test]
    fn oracle_examples() {
        let z4 = group("cyclic(4)");
        assert_eq!(dq_bruteforce_oracle(&z4, 0), 3);
        assert_eq!(dq_bruteforce_oracle(&z4, 1), 1);
        assert_eq!(dq_bruteforce_oracle(&FiniteGroup::trivial(), 1), 0);
    }

    #[test]
    fn quaternion_group_summary() {
        let q8 = group("perm(\"(1 3 2 4)(5 7 6 8)\", \"(1 5 2 6)(3 8 4 7)\")");
        assert_eq!(q8.order(), 8);
        let s = class_summary(&conjugacy_classes(&q8));
        assert_eq!((s.num_classes, s.d0, s.d1), (5, 5, 0));
    }

    // The product rule for self-inverse classes: a product class (C, D) is
    // self-inverse exactly when both C and D are, so r_real multiplies. A
    // pair {C, C^-1} crossed with a pair {D, D^-1} yields two new pairs and
    // no self-inverse classes.
    #[test]
    fn real_class_count_multiplies_under_products() {
        let cases = [
            ("abelian(2, 3)", "cyclic(2)", "cyclic(3)"),
            ("abelian(4, 4)", "cyclic(4)", "cyclic(4)"),
            (
                "perm(\"(1 2 3)\", \"(1 2)\") * cyclic(2)",
                "perm(\"(1 2 3)\", \"(1 2)\")",
                "cyclic(2)",
            ),
        ];
        for (prod, a, b) in cases {
            let sp = class_summary(&conjugacy_classes(&group(prod)));
            let sa = class_summary(&conjugacy_classes(&group(a)));
            let sb = class_summary(&conjugacy_classes(&group(b)));
            assert_eq!(sp.num_classes, sa.num_classes * sb.num_classes, "{prod}");
            assert_eq!(sp.r_real, sa.r_real * sb.r_real, "{prod}");
            // Cross-check r_real against the oracle: r_real = 2 d0 - classes.
            let d0 = dq_bruteforce_oracle(&group(prod), 0);
            assert_eq!(sp.r_real, 2 * d0 - sp.num_classes, "{prod} via oracle");
        }
    }

    #[test]
    fn abelian_self_inverse_classes_count_involutions() {
        // For abelian groups, classes are elements and a class is
        // self-inverse exactly when the element squares to the identity.
        let tuples: &[&[u64]] = &[
            &[2],
            &[3],
            &[4],
            &[64],
            &[2, 2],
            &[2, 4],
            &[4, 4],
            &[2, 3],
            &[2, 2, 2],
            &[2, 2, 2, 2, 2, 2],
            &[3, 3, 7],
            &[8, 8],
            &[2, 32],
            &[5, 5],
        ];
        for orders in tuples {
            let h = FiniteGroup::abelian(orders, CAP).unwrap();
            let involutions = (0..h.order()).filter(|&x| h.mul(x, x) == 0).count() as u64;
            let s = class_summary(&conjugacy_classes(&h));
            assert_eq!(s.r_real, involutions, "{orders:?}");
        }
    }
}
