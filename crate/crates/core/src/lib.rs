//! Exact calculator for low-degree group homology with coefficients in the
//! functions on torsion elements, and the rank lower bounds it yields for
//! positive-scalar-curvature bordism groups.
//!
//! Groups are direct products of torsion-free atoms (free and surface
//! groups) with finite atoms (cyclic, abelian, permutation). For such a
//! product the homology H_p(Gamma; F^q Gamma), p <= 2, factors as
//! b_p(torsion-free part) times a class count of the finite part, and
//! everything downstream (KO/K coefficient ranks, fundamental-class
//! expansions, bordism rank bounds) is assembled from those numbers with
//! exact rational arithmetic throughout. Groups outside the grammar enter
//! through class-data files carrying per-class centralizer homology.

pub mod bounds;
pub mod classdata;
pub mod error;
pub mod group;
pub mod homology;
pub mod matthey;
pub mod ratmat;
pub mod repring;
pub mod verify;

pub use bounds::{
    bg_baseline, bound_pos, bound_pos_from_class_data, bound_r, bound_r_from_class_data,
    bound_report, bound_report_from_class_data, rational_homological_dimension,
    surjectivity_report, BcStatus, Bound, BoundReport, BoundTerm, BC_INJECTIVITY_ASSUMED,
};
pub use classdata::{
    class_summary, conjugacy_classes, dq_bruteforce_oracle, ClassSummary, ConjClassData,
};
pub use error::{Error, Result};
pub use group::{
    build_finite_group, normalize, normalize_with_cap, parse_group_expr, FiniteGroup, GroupExpr,
    NormalForm, DEFAULT_ELEMENT_CAP,
};
pub use homology::classfile::{
    generate_class_data, homology_from_class_data, parse_class_data, write_class_data,
    ClassDataFile, ClassEntry,
};
pub use homology::{betti_vector, homology_dim, kunneth, torsion_free_betti, BettiVector};
pub use matthey::{
    collapse_expansion, fundamental_class_expansion, render_expansion, render_ring_elt,
    verify_expansion_equality, CoeffClass, FundClassExpansion, FundClassTerm, GeomFactor,
};
pub use repring::{
    complexify, complexify_quot, im_part, ko_coeff_rank, ku_coeff_rank, prop21_forward,
    prop21_inverse, re_part, realify, tau, CycRingElt, ROElt, RQuotElt,
};
pub use verify::{classdata_suite, matthey_suite, repring_suite, run_all_suites, SuiteReport};
