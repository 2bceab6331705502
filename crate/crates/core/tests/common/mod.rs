//! Shared corpus for the acceptance suite: group expressions spanning every
//! grammar atom, plus an enumerator of all abelian isomorphism classes up to
//! a given order.

use pscbound::{normalize, parse_group_expr, NormalForm};

pub const S3: &str = "perm(\"(1 2 3)\", \"(1 2)\")";
pub const S4: &str = "perm(\"(1 2 3 4)\", \"(1 2)\")";
pub const D4: &str = "perm(\"(1 2 3 4)\", \"(1 3)\")";
pub const Q8: &str = "perm(\"(1 3 2 4)(5 7 6 8)\", \"(1 5 2 6)(3 8 4 7)\")";

pub fn normal_form(expr: &str) -> NormalForm {
    let parsed = parse_group_expr(expr).unwrap_or_else(|e| panic!("{expr}: {e}"));
    normalize(&parsed).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

/// Cyclic factor lists of every abelian group of order 2..=max_order, one
/// list per isomorphism class: multisets of prime powers, by primary
/// decomposition.
pub fn abelian_factor_lists(max_order: u64) -> Vec<Vec<u64>> {
    fn is_prime_power(n: u64) -> bool {
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                while rest % p == 0 {
                    rest /= p;
                }
                return rest == 1;
            }
            p += 1;
        }
        n > 1
    }
    fn extend(n: u64, min: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            out.push(prefix.clone());
            return;
        }
        for d in min..=n {
            if n % d == 0 && is_prime_power(d) {
                prefix.push(d);
                extend(n / d, d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    for order in 2..=max_order {
        extend(order, 2, &mut Vec::new(), &mut out);
    }
    out
}

pub fn abelian_expr(factors: &[u64]) -> String {
    let list = factors
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    format!("abelian({list})")
}

/// Finite groups: cyclic, abelian, and the standard small nonabelian ones.
pub fn finite_corpus() -> Vec<String> {
    let mut v: Vec<String> = [1, 2, 3, 4, 5, 6, 8, 9, 12]
        .iter()
        .map(|m| format!("cyclic({m})"))
        .collect();
    for factors in [&[2, 2][..], &[2, 4], &[3, 3], &[2, 2, 2]] {
        v.push(abelian_expr(factors));
    }
    v.extend([S3, S4, D4, Q8].map(str::to_string));
    v
}

/// Full corpus: the finite groups plus torsion-free and mixed products.
pub fn corpus() -> Vec<String> {
    let mut v = finite_corpus();
    v.extend(
        [
            "trivial",
            "Z",
            "free(2)",
            "surface(1)",
            "surface(2)",
            "surface(1) * cyclic(3)",
            "surface(1) * cyclic(4)",
            "Z * abelian(2, 4)",
            "free(2) * cyclic(6)",
            "Z * Z * cyclic(4)",
        ]
        .map(str::to_string),
    );
    v.push(format!("surface(1) * {S3}"));
    v.push(format!("free(3) * {Q8}"));
    v
}
