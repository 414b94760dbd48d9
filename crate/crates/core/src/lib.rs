//! Finite dimonoids: sets with two associative operations `⊣` and `⊢`
//! linked by three mixed associativity axioms.
//!
//! The crate builds the standard semigroup families as Cayley tables,
//! pairs them into dimonoids, checks the axioms with reproducible
//! witnesses, computes halos and automorphism groups, decides isomorphism
//! through canonical forms, and classifies all dimonoids of small order.
//!
//! ```
//! use dimonoid::{families, DiTable};
//!
//! let lo = families::left_zero_sg(3).unwrap();
//! let ro = families::right_zero_sg(3).unwrap();
//! let d = DiTable::pair(lo, ro).unwrap();
//! assert!(d.is_dimonoid());
//! assert_eq!(d.halo().unwrap(), vec![0, 1, 2]);
//! ```

pub mod catalog;
pub mod constructions;
pub mod ditable;
pub mod error;
pub mod families;
pub mod morphisms;
pub mod suite;
pub mod table;

pub use catalog::{classify, CatalogEntry, Quotient};
pub use constructions::{Construction, ConstructionKind};
pub use ditable::{check_axioms, from_right_commutative, AxiomReport, DiFlags, DiTable};
pub use error::{Error, Result};
pub use families::{Family, FamilyParams};
pub use morphisms::{
    are_isomorphic, automorphisms, canonical_form, check_morphism, matches_symmetric_product,
    AutSet, MorphismCheck, Permutation, SymmetricProductSpec,
};
pub use suite::{run_theorem_suite, SuiteReport, TheoremRecord};
pub use table::{ClassFlags, Element, OpTable, RoleReport, Triple, Verdict};
