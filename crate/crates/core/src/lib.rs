//! Matroids realized over `Z`, `Z[i]` and `Z[w]`: torsion-refined Tutte polynomials,
//! f-vectors, the poset of torsions and its face ring, in exact arithmetic.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod elliptic;
pub mod error;
pub mod face;
pub mod groth;
pub mod matrix;
pub mod matroid;
pub mod module;
pub mod poly;
pub mod poset;
pub mod report;
pub mod ring;
pub mod snf;
pub mod subset;
pub mod tutte;

pub use elliptic::{bibby_series, elliptic_tutte, euler_characteristic, EllipticArrangement};
pub use error::{Error, Result};
pub use face::{face_ideal, face_module_hilbert, hilbert_series_face_ring, verify_hilbert_tutte, HilbertSeries};
pub use groth::{phi, phi_tilde, GTPoly, GrothElement, IntPoly2};
pub use matrix::RMatrix;
pub use matroid::{ElementKind, Limits, RealizedMatroid, SubsetTable};
pub use module::{cokernel_class, enumerate_torsion, ModuleClass, TorsionPresentation};
pub use poly::{IntPoly, LaurentPoly};
pub use poset::{build_poset, dual_pushforward, poset_components, poset_f_vector, verify_simplicial, TorsionPoset};
pub use report::{CheckItem, CheckReport, Outcome};
pub use ring::{ResidueSystem, RingElement, RingFraction, RingKind};
pub use snf::{smith_normal_form, SnfDecomposition};
pub use subset::Subset;
pub use tutte::{
    check_deletion_contraction, check_tutte_f_identity, grothendieck_tutte, numeric_f_h, tutte_numeric, GrothFVector,
};
