//! Finite groups as dense multiplication tables.
//!
//! Every group is a set of indices 0..order with index 0 the identity, a
//! row-major order*order multiplication table, and an inverse permutation.
//! Element ordering is canonical: cyclic groups list residues ascending,
//! abelian products use mixed-radix order on the factors, permutation groups
//! use discovery order of the breadth-first closure. Reports built on top are
//! therefore deterministic.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
}

/// Allocates an index table, turning allocation failure into a resource
/// error instead of an abort.
fn alloc_table(len: usize, what: &str) -> Result<Vec<u32>> {
    let mut v: Vec<u32> = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|_| Error::resource(format!("cannot allocate {what} of {len} entries")))?;
    Ok(v)
}

fn check_order(order: u128, cap: usize) -> Result<usize> {
    if order == 0 {
        return Err(Error::domain("group order must be at least 1"));
    }
    if order > cap as u128 {
        return Err(Error::resource(format!(
            "group order {order} exceeds the element cap {cap}"
        )));
    }
    if order > u128::from(u32::MAX) {
        return Err(Error::resource(format!(
            "group order {order} exceeds the index-table limit"
        )));
    }
    Ok(order as usize)
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of the identity element. Always 0.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Order of a single element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup {
            order: 1,
            mult: vec![0],
            inv: vec![0],
        }
    }

    /// Cyclic group of order m; element i is the residue i.
    pub fn cyclic(m: u64, cap: usize) -> Result<FiniteGroup> {
        let order = check_order(u128::from(m), cap)?;
        let mut mult = alloc_table(order * order, "multiplication table")?;
        for i in 0..order {
            for j in 0..order {
                mult.push(((i + j) % order) as u32);
            }
        }
        let inv = (0..order).map(|i| ((order - i) % order) as u32).collect();
        Ok(FiniteGroup { order, mult, inv })
    }

    /// Direct product of cyclic groups of the given orders, in mixed-radix
    /// element order (last factor varies fastest).
    pub fn abelian(orders: &[u64], cap: usize) -> Result<FiniteGroup> {
        if orders.is_empty() {
            return Err(Error::domain("abelian group needs at least one order"));
        }
        if orders.contains(&0) {
            return Err(Error::domain("abelian orders must be at least 1"));
        }
        let mut total: u128 = 1;
        for &m in orders {
            total = total
                .checked_mul(u128::from(m))
                .ok_or_else(|| Error::resource("abelian group order overflows"))?;
            check_order(total, cap)?;
        }
        let order = check_order(total, cap)?;
        let radices: Vec<usize> = orders.iter().map(|&m| m as usize).collect();
        // Digit decomposition of every index, computed once.
        let digits: Vec<Vec<usize>> = (0..order)
            .map(|mut i| {
                let mut d = vec![0; radices.len()];
                for (slot, &m) in radices.iter().enumerate().rev() {
                    d[slot] = i % m;
                    i /= m;
                }
                d
            })
            .collect();
        let encode = |d: &[usize]| -> usize {
            let mut i = 0;
            for (slot, &m) in radices.iter().enumerate() {
                i = i * m + d[slot];
            }
            i
        };
        let mut mult = alloc_table(order * order, "multiplication table")?;
        let mut sum = vec![0; radices.len()];
        for a in 0..order {
            for b in 0..order {
                for (slot, &m) in radices.iter().enumerate() {
                    sum[slot] = (digits[a][slot] + digits[b][slot]) % m;
                }
                mult.push(encode(&sum) as u32);
            }
        }
        let inv = (0..order)
            .map(|a| {
                let d: Vec<usize> = digits[a]
                    .iter()
                    .zip(&radices)
                    .map(|(&x, &m)| (m - x) % m)
                    .collect();
                encode(&d) as u32
            })
            .collect();
        Ok(FiniteGroup { order, mult, inv })
    }

    /// Group generated by permutations in cycle notation, e.g.
    /// `["(1 2 3)", "(1 2)"]`. Acts on points 1..=n where n is the largest
    /// point mentioned. Elements are enumerated by breadth-first closure of
    /// the generator set, identity first.
    pub fn from_permutations(cycles: &[String], cap: usize) -> Result<FiniteGroup> {
        if cycles.is_empty() {
            return Err(Error::domain("perm atom needs at least one generator"));
        }
        let parsed: Vec<Vec<Vec<u32>>> = cycles
            .iter()
            .map(|s| parse_cycles(s))
            .collect::<Result<_>>()?;
        let degree = parsed
            .iter()
            .flatten()
            .flatten()
            .copied()
            .max()
            .unwrap_or(1) as usize;
        let gens: Vec<Vec<u32>> = parsed
            .iter()
            .zip(cycles)
            .map(|(cs, text)| cycles_to_perm(cs, degree, text))
            .collect::<Result<_>>()?;

        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut next = 0;
        while next < elements.len() {
            for g in &gens {
                let prod = compose(&elements[next], g);
                if !index.contains_key(&prod) {
                    if elements.len() >= cap {
                        return Err(Error::resource(format!(
                            "permutation group closure exceeds the element cap {cap}"
                        )));
                    }
                    index.insert(prod.clone(), elements.len() as u32);
                    elements.push(prod);
                }
            }
            next += 1;
        }

        let order = elements.len();
        check_order(order as u128, cap)?;
        let mut mult = alloc_table(order * order, "multiplication table")?;
        for a in &elements {
            for b in &elements {
                mult.push(index[&compose(a, b)]);
            }
        }
        let inv = elements
            .iter()
            .map(|a| {
                let mut ia = vec![0u32; degree];
                for (x, &ax) in a.iter().enumerate() {
                    ia[ax as usize] = x as u32;
                }
                index[&ia]
            })
            .collect();
        Ok(FiniteGroup { order, mult, inv })
    }

    /// Direct product on index pairs; element (a, b) has index a*|B| + b.
    pub fn direct_product(&self, other: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
        let order = check_order(self.order as u128 * other.order as u128, cap)?;
        let mut mult = alloc_table(order * order, "multiplication table")?;
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        mult.push((self.mul(a1, a2) * other.order + other.mul(b1, b2)) as u32);
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(order);
        for a in 0..self.order {
            for b in 0..other.order {
                inv.push((self.inv(a) * other.order + other.inv(b)) as u32);
            }
        }
        Ok(FiniteGroup { order, mult, inv })
    }

    /// Checks the group axioms: identity and inverses always, associativity
    /// exhaustively for order <= 512 (cubic cost).
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::domain(format!("identity axiom fails at {a}")));
            }
            let ia = self.inv(a);
            if self.mul(a, ia) != 0 || self.mul(ia, a) != 0 {
                return Err(Error::domain(format!("inverse axiom fails at {a}")));
            }
            if self.inv(ia) != a {
                return Err(Error::domain(format!("inverse is not an involution at {a}")));
            }
        }
        if n <= 512 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::domain(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// (a . b)(x) = a(b(x)).
fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

/// Parses cycle notation: one or more parenthesized cycles of positive
/// integers, e.g. "(1 2 3)(4 5)". Points are 1-based in the notation.
fn parse_cycles(text: &str) -> Result<Vec<Vec<u32>>> {
    let err = |msg: &str| Error::domain(format!("in cycle notation {text:?}: {msg}"));
    let mut cycles = Vec::new();
    let mut chars = text.chars().peekable();
    loop {
        while chars.peek().is_some_and(|c| c.is_whitespace()) {
            chars.next();
        }
        match chars.next() {
            None => break,
            Some('(') => {}
            Some(c) => return Err(err(&format!("expected '(' but found {c:?}"))),
        }
        let mut cycle = Vec::new();
        loop {
            while chars.peek().is_some_and(|c| c.is_whitespace() || *c == ',') {
                chars.next();
            }
            match chars.peek() {
                Some(')') => {
                    chars.next();
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let mut value: u64 = 0;
                    while let Some(c) = chars.peek() {
                        let Some(d) = c.to_digit(10) else { break };
                        value = value
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(u64::from(d)))
                            .ok_or_else(|| err("point too large"))?;
                        chars.next();
                    }
                    if value == 0 {
                        return Err(err("points must be positive"));
                    }
                    if value > u64::from(u32::MAX) {
                        return Err(err("point too large"));
                    }
                    cycle.push(value as u32);
                }
                Some(c) => return Err(err(&format!("unexpected character {c:?}"))),
                None => return Err(err("unterminated cycle")),
            }
        }
        if cycle.is_empty() {
            return Err(err("empty cycle"));
        }
        cycles.push(cycle);
    }
    if cycles.is_empty() {
        return Err(err("no cycles"));
    }
    Ok(cycles)
}

/// Turns disjoint cycles into a permutation of 0..degree. Cycles of one
/// generator must be disjoint, else the notation is ambiguous.
fn cycles_to_perm(cycles: &[Vec<u32>], degree: usize, text: &str) -> Result<Vec<u32>> {
    let mut image: Vec<u32> = (0..degree as u32).collect();
    let mut seen = vec![false; degree];
    for cycle in cycles {
        for (i, &pt) in cycle.iter().enumerate() {
            let from = (pt - 1) as usize;
            if seen[from] {
                return Err(Error::domain(format!(
                    "in cycle notation {text:?}: point {pt} appears twice"
                )));
            }
            seen[from] = true;
            let to = cycle[(i + 1) % cycle.len()] - 1;
            image[from] = to;
        }
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 100_000;

    #[test]
    fn cyclic_matches_modular_addition() {
        let g = FiniteGroup::cyclic(4, CAP).unwrap();
        assert_eq!(g.order(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g.mul(i, j), (i + j) % 4);
            }
        }
        g.check_axioms().unwrap();
    }

    #[test]
    fn abelian_two_two_is_elementary() {
        let g = FiniteGroup::abelian(&[2, 2], CAP).unwrap();
        assert_eq!(g.order(), 4);
        for a in 0..4 {
            assert_eq!(g.inv(a), a);
        }
        g.check_axioms().unwrap();
    }

    #[test]
    fn perm_generators_close_to_s3() {
        let g =
            FiniteGroup::from_permutations(&["(1 2 3)".into(), "(1 2)".into()], CAP).unwrap();
        assert_eq!(g.order(), 6);
        g.check_axioms().unwrap();
    }

    #[test]
    fn product_of_coprime_cyclics_is_cyclic() {
        let a = FiniteGroup::cyclic(2, CAP).unwrap();
        let b = FiniteGroup::cyclic(3, CAP).unwrap();
        let p = a.direct_product(&b, CAP).unwrap();
        assert_eq!(p.order(), 6);
        p.check_axioms().unwrap();
        let orders: Vec<usize> = (0..6).map(|x| p.element_order(x)).collect();
        assert!(orders.contains(&6), "no generator found in {orders:?}");
    }

    #[test]
    fn product_with_trivial_is_same_table() {
        let h = FiniteGroup::cyclic(5, CAP).unwrap();
        let p = h.direct_product(&FiniteGroup::trivial(), CAP).unwrap();
        assert_eq!(p, h);
    }

    #[test]
    fn s3_times_z2_has_order_12() {
        let s3 =
            FiniteGroup::from_permutations(&["(1 2 3)".into(), "(1 2)".into()], CAP).unwrap();
        let p = s3.direct_product(&FiniteGroup::cyclic(2, CAP).unwrap(), CAP).unwrap();
        assert_eq!(p.order(), 12);
        p.check_axioms().unwrap();
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            FiniteGroup::cyclic(10, 9),
            Err(Error::Resource(_))
        ));
        let a = FiniteGroup::cyclic(4, CAP).unwrap();
        assert!(a.direct_product(&a, 15).is_err());
        assert!(
            FiniteGroup::from_permutations(&["(1 2 3 4 5 6 7)".into()], 6).is_err()
        );
    }

    #[test]
    fn bad_cycle_notation_is_rejected() {
        for bad in ["", "1 2", "(1 2", "(1 1)", "(1 2)(2 3)", "(0 1)", "(a b)"] {
            assert!(
                FiniteGroup::from_permutations(&[bad.to_string()], CAP).is_err(),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn quaternion_group_from_degree_eight_action() {
        let q8 = FiniteGroup::from_permutations(
            &["(1 3 2 4)(5 7 6 8)".into(), "(1 5 2 6)(3 8 4 7)".into()],
            CAP,
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        q8.check_axioms().unwrap();
        // One element of order 2 (the center's nonidentity element), six of
        // order 4: the quaternion signature, distinguishing it from D4.
        let mut of_order_2 = 0;
        let mut of_order_4 = 0;
        for x in 1..8 {
            match q8.element_order(x) {
                2 => of_order_2 += 1,
                4 => of_order_4 += 1,
                o => panic!("unexpected element order {o}"),
            }
        }
        assert_eq!((of_order_2, of_order_4), (1, 6));
    }
}
