//! Exhaustive model generation for small sizes.
//!
//! Models are produced with zero at index 0 and one at index `n-1`
//! (canonical labels from [`Carrier::canonical`]); up-to-isomorphism
//! reduction therefore only permutes interior elements. Output order is
//! deterministic: the depth-first order of the underlying search.

mod catalog;
mod iso;
mod oracle;
mod search;

pub use catalog::{catalog, catalog_effect, catalog_lookup, CatalogEntry};
pub use iso::{are_isomorphic, automorphism_count, permutations_fixing_ends, KindMismatch};
pub use oracle::{oracle_cqrl, oracle_effect, oracle_pseudoeffect, oracle_qrl, ORACLE_MAX_SIZE};
pub use search::{
    bounded_lattices, search_cqrl, search_effect, search_pseudoeffect, search_qrl,
};

use crate::effect::detect_lattice_effect;
use crate::finite::lattice_from_poset;
use crate::model::Algebra;
use crate::pseudoeffect::{
    check_goodness, derive_induced_order_pseudo, GoodLatticePseudoeffectAlgebra,
};
use crate::quasires::{check_cqrl_divisibility, check_qrl_divisibility};

#[allow(unused_imports)]
use crate::finite::Carrier;

/// What to enumerate. The lattice / good / divisible variants are the base
/// kind with a post-filter; the underlying model is stored unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Effect,
    LatticeEffect,
    Pseudoeffect,
    GoodLatticePseudoeffect,
    Cqrl,
    CqrlDivisible,
    Qrl,
    QrlDivisible,
}

impl ModelKind {
    pub const ALL: [ModelKind; 8] = [
        ModelKind::Effect,
        ModelKind::LatticeEffect,
        ModelKind::Pseudoeffect,
        ModelKind::GoodLatticePseudoeffect,
        ModelKind::Cqrl,
        ModelKind::CqrlDivisible,
        ModelKind::Qrl,
        ModelKind::QrlDivisible,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ModelKind::Effect => "effect",
            ModelKind::LatticeEffect => "lattice-effect",
            ModelKind::Pseudoeffect => "pseudoeffect",
            ModelKind::GoodLatticePseudoeffect => "good-lattice-pseudoeffect",
            ModelKind::Cqrl => "cqrl",
            ModelKind::CqrlDivisible => "cqrl-divisible",
            ModelKind::Qrl => "qrl",
            ModelKind::QrlDivisible => "qrl-divisible",
        }
    }

    pub fn parse(s: &str) -> Option<ModelKind> {
        ModelKind::ALL.into_iter().find(|k| k.token() == s)
    }

    /// Addition-based kinds stay tractable a bit longer than the
    /// residuated ones, whose search iterates over all bounded lattices.
    pub fn max_size(self) -> usize {
        match self {
            ModelKind::Effect
            | ModelKind::LatticeEffect
            | ModelKind::Pseudoeffect
            | ModelKind::GoodLatticePseudoeffect => 6,
            _ => 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationTask {
    pub kind: ModelKind,
    pub size: usize,
    pub up_to_iso: bool,
    /// Stop after this many emitted models (post-filtering, post-reduction).
    pub limit: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub models: Vec<Algebra>,
    /// Models seen before isomorphism reduction (equals `models.len()`
    /// when `up_to_iso` is off). Not meaningful when truncated.
    pub raw_count: usize,
    pub truncated: bool,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("size {size} out of range for kind {kind} (supported: 2..={max})")]
    SizeOutOfRange { kind: &'static str, size: usize, max: usize },
}

pub fn enumerate_models(task: &EnumerationTask) -> Result<EnumerationResult, EnumerateError> {
    if task.size < 2 || task.size > task.kind.max_size() {
        return Err(EnumerateError::SizeOutOfRange {
            kind: task.kind.token(),
            size: task.size,
            max: task.kind.max_size(),
        });
    }
    let mut models: Vec<Algebra> = Vec::new();
    let mut raw_count = 0usize;
    let mut truncated = false;
    {
        let mut take = |a: Algebra| -> bool {
            raw_count += 1;
            if task.up_to_iso
                && models.iter().any(|m| {
                    are_isomorphic(m, &a).map(|w| w.is_some()).unwrap_or(false)
                })
            {
                return true;
            }
            models.push(a);
            if let Some(limit) = task.limit {
                if models.len() >= limit {
                    truncated = true;
                    return false;
                }
            }
            true
        };
        match task.kind {
            ModelKind::Effect => search_effect(task.size, &mut |e| take(Algebra::Effect(e))),
            ModelKind::LatticeEffect => search_effect(task.size, &mut |e| {
                if detect_lattice_effect(&e).is_ok() {
                    take(Algebra::Effect(e))
                } else {
                    true
                }
            }),
            ModelKind::Pseudoeffect => {
                search_pseudoeffect(task.size, &mut |p| take(Algebra::Pseudo(p)))
            }
            ModelKind::GoodLatticePseudoeffect => search_pseudoeffect(task.size, &mut |p| {
                if is_good_lattice_pseudo(&p).is_some() {
                    take(Algebra::Pseudo(p))
                } else {
                    true
                }
            }),
            ModelKind::Cqrl => search_cqrl(task.size, &mut |c| take(Algebra::Cqrl(c))),
            ModelKind::CqrlDivisible => search_cqrl(task.size, &mut |c| {
                if check_cqrl_divisibility(&c, 1).all_pass() {
                    take(Algebra::Cqrl(c))
                } else {
                    true
                }
            }),
            ModelKind::Qrl => search_qrl(task.size, &mut |q| take(Algebra::Qrl(q))),
            ModelKind::QrlDivisible => search_qrl(task.size, &mut |q| {
                if check_qrl_divisibility(&q, 1).all_pass() {
                    take(Algebra::Qrl(q))
                } else {
                    true
                }
            }),
        }
    }
    Ok(EnumerationResult { models, raw_count, truncated })
}

/// Upgrade a pseudoeffect algebra when its induced order is a lattice and
/// the goodness identity holds.
pub fn is_good_lattice_pseudo(
    p: &crate::pseudoeffect::PseudoeffectAlgebra,
) -> Option<GoodLatticePseudoeffectAlgebra> {
    let order = derive_induced_order_pseudo(p).ok()?;
    let lattice = lattice_from_poset(&order).ok()?;
    if !check_goodness(p, &order, 1).all_pass() {
        return None;
    }
    Some(GoodLatticePseudoeffectAlgebra { base: p.clone(), lattice })
}
