//! Group expressions and their normal form: torsion-free part x finite part.

pub mod expr;
pub mod finite;

use crate::error::{Error, Result};
pub use expr::{parse_group_expr, GroupExpr};
pub use finite::FiniteGroup;

/// Default bound on the number of elements of the finite part. Keeps the
/// dense-table realization within reason; configurable at the CLI.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// A group expression split into a torsion-free part (a list of atoms whose
/// Betti numbers are known) and a single finite group collecting all finite
/// atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    /// Torsion-free atoms in input order; only `Z`, `free(k)`, `surface(g)`
    /// appear (`trivial` atoms are dropped).
    pub torsion_free: Vec<GroupExpr>,
    /// Direct product of all finite atoms; the order-1 group if there are
    /// none.
    pub finite: FiniteGroup,
}

/// Realizes a single finite atom as an enumerated group.
pub fn build_finite_group(atom: &GroupExpr, cap: usize) -> Result<FiniteGroup> {
    match atom {
        GroupExpr::Cyclic(m) => FiniteGroup::cyclic(*m, cap),
        GroupExpr::Abelian(ms) => FiniteGroup::abelian(ms, cap),
        GroupExpr::Perm(cycles) => FiniteGroup::from_permutations(cycles, cap),
        other => Err(Error::domain(format!(
            "not a finite atom: {other}"
        ))),
    }
}

/// Splits an expression into torsion-free atoms and the direct product of
/// its finite atoms, with the default element cap.
pub fn normalize(expr: &GroupExpr) -> Result<NormalForm> {
    normalize_with_cap(expr, DEFAULT_ELEMENT_CAP)
}

pub fn normalize_with_cap(expr: &GroupExpr, cap: usize) -> Result<NormalForm> {
    let mut torsion_free = Vec::new();
    let mut finite: Option<FiniteGroup> = None;
    for atom in expr.factors() {
        match atom {
            GroupExpr::Trivial => {}
            GroupExpr::Z | GroupExpr::Free(_) | GroupExpr::Surface(_) => {
                validate_torsion_free(atom)?;
                torsion_free.push(atom.clone());
            }
            GroupExpr::Cyclic(_) | GroupExpr::Abelian(_) | GroupExpr::Perm(_) => {
                let h = build_finite_group(atom, cap)?;
                finite = Some(match finite {
                    None => h,
                    Some(prev) => prev.direct_product(&h, cap)?,
                });
            }
            GroupExpr::Product(_) => {
                return Err(Error::domain("nested products are not part of the grammar"))
            }
        }
    }
    Ok(NormalForm {
        torsion_free,
        finite: finite.unwrap_or_else(FiniteGroup::trivial),
    })
}

fn validate_torsion_free(atom: &GroupExpr) -> Result<()> {
    if let GroupExpr::Surface(0) = atom {
        return Err(Error::domain(
            "surface genus must be at least 1; write `trivial` for the trivial group",
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(text: &str) -> NormalForm {
        normalize(&parse_group_expr(text).unwrap()).unwrap()
    }

    #[test]
    fn splits_surface_times_cyclic() {
        let n = nf("surface(1)*cyclic(3)");
        assert_eq!(n.torsion_free, vec![GroupExpr::Surface(1)]);
        assert_eq!(n.finite.order(), 3);
    }

    #[test]
    fn multiplies_finite_atoms_across_the_product() {
        let n = nf("cyclic(2)*surface(2)*cyclic(3)");
        assert_eq!(n.torsion_free, vec![GroupExpr::Surface(2)]);
        assert_eq!(n.finite.order(), 6);
        n.finite.check_axioms().unwrap();
    }

    #[test]
    fn trivial_expression_gives_order_one_group() {
        let n = nf("trivial");
        assert!(n.torsion_free.is_empty());
        assert_eq!(n.finite.order(), 1);
    }

    #[test]
    fn trivial_atoms_are_dropped() {
        let n = nf("trivial * Z * trivial * free(2)");
        assert_eq!(n.torsion_free, vec![GroupExpr::Z, GroupExpr::Free(2)]);
        assert_eq!(n.finite.order(), 1);
    }

    #[test]
    fn finite_order_is_product_of_atom_orders() {
        let n = nf("cyclic(4) * abelian(2, 3) * perm(\"(1 2)\")");
        assert_eq!(n.finite.order(), 4 * 6 * 2);
    }

    #[test]
    fn cap_propagates() {
        let e = parse_group_expr("cyclic(30) * cyclic(30)").unwrap();
        assert!(matches!(
            normalize_with_cap(&e, 100),
            Err(Error::Resource(_))
        ));
    }
}
