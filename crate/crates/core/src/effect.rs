//! Effect algebras as explicit tables: the (E1)-(E4) axiom checker, the
//! induced order, lattice detection, and the derived-property suite.
//!
//! An effect algebra is a partial algebra `(E, +, ', 0, 1)` where `+` is a
//! partial commutative associative operation, `x'` is the unique `u` with
//! `x + u = 1`, and `1 + x` is defined only for `x = 0`. The induced order
//! `x ≤ y iff some z has x + z = y` is always a bounded poset; when it is a
//! lattice the algebra is a lattice effect algebra.

use crate::finite::{
    lattice_from_poset, validate_poset, BoundedPoset, Carrier, LatticeTables, NotALattice,
    PartialBinaryTable, PosetError, ShapeError, UnaryTable,
};
use crate::report::{CheckReport, LawCheck};
use thiserror::Error;

/// An effect algebra candidate. Construction does not validate the axioms;
/// run [`check_effect_axioms`] to get a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffectAlgebra {
    pub carrier: Carrier,
    pub plus: PartialBinaryTable,
    /// The complement map `x ↦ x'`, stored redundantly and checked against
    /// (E3) so transcription errors surface as violations.
    pub comp: UnaryTable,
    pub zero: usize,
    pub one: usize,
}

/// An effect algebra whose induced order is a lattice, together with the
/// join/meet tables over that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEffectAlgebra {
    pub base: EffectAlgebra,
    pub lattice: LatticeTables,
}

fn check_shape(e: &EffectAlgebra) -> Result<usize, ShapeError> {
    let n = e.carrier.size();
    if e.plus.size() != n {
        return Err(ShapeError::new("plus table", n, e.plus.size()));
    }
    if e.comp.size() != n {
        return Err(ShapeError::new("comp map", n, e.comp.size()));
    }
    if e.zero >= n || e.one >= n {
        return Err(ShapeError::new("constants", n - 1, e.zero.max(e.one)));
    }
    Ok(n)
}

/// Check (E1)-(E4) and agreement of the stored complement map with (E3).
///
/// E1: commutativity with definedness. E2: associativity with bidirectional
/// definedness. E3: existence and uniqueness of `u` with `x+u=1`, and
/// `comp(x)` equal to that `u`. E4: `1+x` defined implies `x=0`.
pub fn check_effect_axioms(e: &EffectAlgebra, cap: usize) -> Result<CheckReport, ShapeError> {
    let n = check_shape(e)?;
    let plus = &e.plus;

    let mut e1 = LawCheck::new("E1", cap);
    for x in 0..n {
        for y in 0..n {
            match (plus.get(x, y), plus.get(y, x)) {
                (None, None) => {}
                (Some(a), Some(b)) if a == b => {}
                (Some(_), None) | (None, Some(_)) => e1.fail_note(&[x, y], "definedness"),
                _ => e1.fail_note(&[x, y], "value"),
            }
        }
    }

    let mut e2 = LawCheck::new("E2", cap);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = plus.get(x, y).and_then(|s| plus.get(s, z));
                let rhs = plus.get(y, z).and_then(|s| plus.get(x, s));
                match (lhs, rhs) {
                    (None, None) => {}
                    (Some(a), Some(b)) if a == b => {}
                    (Some(_), None) | (None, Some(_)) => {
                        e2.fail_note(&[x, y, z], "definedness")
                    }
                    _ => e2.fail_note(&[x, y, z], "value"),
                }
            }
        }
    }

    let mut e3 = LawCheck::new("E3", cap);
    for x in 0..n {
        let complements: Vec<usize> =
            (0..n).filter(|&u| plus.get(x, u) == Some(e.one)).collect();
        match complements.as_slice() {
            [] => e3.fail_note(&[x], "no u with x+u=1"),
            [u] if *u == e.comp.get(x) => {}
            [_] => e3.fail_note(&[x], "comp map disagrees with the unique complement"),
            _ => e3.fail_note(&[x], "complement is not unique"),
        }
    }

    let mut e4 = LawCheck::new("E4", cap);
    for x in 0..n {
        if plus.is_defined(e.one, x) && x != e.zero {
            e4.fail(&[x]);
        }
    }

    Ok(CheckReport { laws: vec![e1.done(), e2.done(), e3.done(), e4.done()] })
}

/// Derive the induced order `x ≤ y iff ∃z: x+z=y` and validate it as a
/// bounded poset with bottom `zero` and top `one`. A law failure here is a
/// diagnostic for a candidate that does not pass the axioms.
pub fn derive_induced_order(e: &EffectAlgebra) -> Result<BoundedPoset, PosetError> {
    let n = e.carrier.size();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            rel[x * n + y] = (0..n).any(|z| e.plus.get(x, z) == Some(y));
        }
    }
    validate_poset(n, &rel, e.zero, e.one)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeDetectError {
    #[error("induced order is not a valid bounded poset: {0}")]
    Order(#[from] PosetError),
    #[error(transparent)]
    NotALattice(#[from] NotALattice),
}

/// Compose [`derive_induced_order`] with [`lattice_from_poset`].
pub fn detect_lattice_effect(
    e: &EffectAlgebra,
) -> Result<LatticeEffectAlgebra, LatticeDetectError> {
    let order = derive_induced_order(e)?;
    let lattice = lattice_from_poset(&order)?;
    Ok(LatticeEffectAlgebra { base: e.clone(), lattice })
}

/// Derived-property suite for lattice effect algebras, scanned over all
/// element tuples:
///
/// (i) `a'' = a`; (ii) `a ≤ b` implies `b' ≤ a'`; (iii) `a+b` defined iff
/// `a ≤ b'`; (iv) `a ≤ b` and `b+c` defined imply `a+c` defined and
/// `a+c ≤ b+c`; (v) `a ≤ b` implies `a + (a+b')' = b`; (vi) `a+0 = 0+a = a`;
/// (vii) `0' = 1` and `1' = 0`.
pub fn check_effect_lemma_properties(le: &LatticeEffectAlgebra, cap: usize) -> CheckReport {
    let e = &le.base;
    let n = e.carrier.size();
    let ord = &le.lattice.order;
    let plus = &e.plus;
    let comp = |x: usize| e.comp.get(x);

    let mut l1 = LawCheck::new("L1.i", cap);
    for a in 0..n {
        if comp(comp(a)) != a {
            l1.fail(&[a]);
        }
    }

    let mut l2 = LawCheck::new("L1.ii", cap);
    for a in 0..n {
        for b in 0..n {
            if ord.leq(a, b) && !ord.leq(comp(b), comp(a)) {
                l2.fail(&[a, b]);
            }
        }
    }

    let mut l3 = LawCheck::new("L1.iii", cap);
    for a in 0..n {
        for b in 0..n {
            if plus.is_defined(a, b) != ord.leq(a, comp(b)) {
                l3.fail(&[a, b]);
            }
        }
    }

    let mut l4 = LawCheck::new("L1.iv", cap);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !ord.leq(a, b) {
                    continue;
                }
                if let Some(bc) = plus.get(b, c) {
                    match plus.get(a, c) {
                        Some(ac) if ord.leq(ac, bc) => {}
                        Some(_) => l4.fail_note(&[a, b, c], "monotonicity"),
                        None => l4.fail_note(&[a, b, c], "a+c undefined"),
                    }
                }
            }
        }
    }

    let mut l5 = LawCheck::new("L1.v", cap);
    for a in 0..n {
        for b in 0..n {
            if !ord.leq(a, b) {
                continue;
            }
            let ok = plus
                .get(a, comp(b))
                .and_then(|t| plus.get(a, comp(t)))
                .map(|v| v == b)
                .unwrap_or(false);
            if !ok {
                l5.fail(&[a, b]);
            }
        }
    }

    let mut l6 = LawCheck::new("L1.vi", cap);
    for a in 0..n {
        if plus.get(a, e.zero) != Some(a) || plus.get(e.zero, a) != Some(a) {
            l6.fail(&[a]);
        }
    }

    let mut l7 = LawCheck::new("L1.vii", cap);
    if comp(e.zero) != e.one || comp(e.one) != e.zero {
        l7.fail(&[]);
    }

    CheckReport {
        laws: vec![l1.done(), l2.done(), l3.done(), l4.done(), l5.done(), l6.done(), l7.done()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::catalog_effect;
    use crate::report::DEFAULT_WITNESS_CAP;

    fn bool2() -> EffectAlgebra {
        catalog_effect("bool2")
    }

    fn mv3() -> EffectAlgebra {
        catalog_effect("mv3")
    }

    #[test]
    fn two_element_algebra_passes() {
        let report = check_effect_axioms(&bool2(), DEFAULT_WITNESS_CAP).unwrap();
        assert!(report.all_pass(), "{:?}", report.failed_ids());
    }

    #[test]
    fn one_plus_one_violates_e4() {
        let mut e = bool2();
        e.plus.set(1, 1, Some(1));
        let report = check_effect_axioms(&e, DEFAULT_WITNESS_CAP).unwrap();
        let e4 = report.law("E4").unwrap();
        assert_eq!(e4.witnesses[0].args, vec![1]);
    }

    #[test]
    fn missing_complement_violates_e3() {
        // MV3 with a+a undefined: no u with a+u=1 remains.
        let mut e = mv3();
        e.plus.set(1, 1, None);
        let report = check_effect_axioms(&e, DEFAULT_WITNESS_CAP).unwrap();
        let e3 = report.law("E3").unwrap();
        assert_eq!(e3.witnesses[0].args, vec![1]);
    }

    #[test]
    fn induced_orders_of_catalog_algebras() {
        let p = derive_induced_order(&bool2()).unwrap();
        assert!(p.leq(0, 1) && !p.leq(1, 0));

        let p = derive_induced_order(&mv3()).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(p.leq(x, y), x <= y, "mv3 must order as a chain");
            }
        }

        let p = derive_induced_order(&catalog_effect("diamond")).unwrap();
        assert!(!p.leq(1, 2) && !p.leq(2, 1));
        assert!(p.leq(0, 1) && p.leq(1, 3) && p.leq(2, 3));
    }

    #[test]
    fn mv3_and_diamond_are_lattice_effect_algebras() {
        let le = detect_lattice_effect(&mv3()).unwrap();
        assert_eq!(le.lattice.join.get(1, 1), 1);
        let le = detect_lattice_effect(&catalog_effect("diamond")).unwrap();
        assert_eq!(le.lattice.join.get(1, 2), 3);
    }

    #[test]
    fn lemma_suite_passes_on_catalog() {
        for name in ["bool2", "mv3", "mv4", "diamond", "hsum-mv3"] {
            let le = detect_lattice_effect(&catalog_effect(name)).unwrap();
            let report = check_effect_lemma_properties(&le, DEFAULT_WITNESS_CAP);
            assert!(report.all_pass(), "{name}: {:?}", report.failed_ids());
        }
    }
}
