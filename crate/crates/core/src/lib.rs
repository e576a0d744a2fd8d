//! qrlab — a finite-structure laboratory for effect algebras, pseudoeffect
//! algebras, and (commutative) quasiresiduated lattices.
//!
//! Algebras are explicit operation tables over a finite carrier. The
//! library verifies the axiom systems of each kind, translates between the
//! kinds with four table-level constructions, checks the round-trip
//! identities exactly, and enumerates all models of small sizes.
//!
//! # Checking an algebra
//!
//! ```
//! use qrlab::effect::{check_effect_axioms, detect_lattice_effect};
//! use qrlab::enumerate::catalog_effect;
//!
//! let mv3 = catalog_effect("mv3");
//! let report = check_effect_axioms(&mv3, 10).unwrap();
//! assert!(report.all_pass());
//!
//! // the induced order of the 3-chain is a lattice
//! let le = detect_lattice_effect(&mv3).unwrap();
//! assert!(le.lattice.order.leq(1, 2));
//! ```
//!
//! # Translating and round-tripping
//!
//! ```
//! use qrlab::effect::detect_lattice_effect;
//! use qrlab::enumerate::catalog_effect;
//! use qrlab::quasires::check_cqrl_axioms;
//! use qrlab::transform::{cqrl_of_effect, roundtrip_effect};
//!
//! let le = detect_lattice_effect(&catalog_effect("diamond")).unwrap();
//! let c = cqrl_of_effect(&le).unwrap();
//! // the construction does not self-validate; the checker is the proof
//! assert!(check_cqrl_axioms(&c, 10).unwrap().all_pass());
//! // rebuilding the effect algebra reproduces its tables exactly
//! assert!(roundtrip_effect(&le).unwrap().all_pass());
//! ```
//!
//! # Enumerating models
//!
//! ```
//! use qrlab::enumerate::{enumerate_models, EnumerationTask, ModelKind};
//!
//! let task = EnumerationTask {
//!     kind: ModelKind::Effect,
//!     size: 3,
//!     up_to_iso: false,
//!     limit: None,
//! };
//! // a+0=a forces the complement, and 1+a is barred, so a+a=1 is the
//! // only completion: exactly one 3-element model exists
//! assert_eq!(enumerate_models(&task).unwrap().models.len(), 1);
//! ```

pub mod cli;
pub mod effect;
pub mod enumerate;
pub mod finite;
pub mod model;
pub mod pseudoeffect;
pub mod quasires;
pub mod report;
pub mod textfmt;
pub mod transform;
