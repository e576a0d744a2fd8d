//! Commutative quasiresiduated lattices (C1)-(C3) and general
//! quasiresiduated lattices (Q1)-(Q5), divisibility, and the everywhere
//! defined `⊗` reformulation of quasiadjointness.
//!
//! Complements are always derived from the arrow tables at zero
//! (`x' = x→0`, `x̄ = x→0`, `x̃ = x⇝0`), never stored, so (C2)/(Q2) are
//! genuine checks on the tables rather than on redundant inputs.

use crate::finite::{
    validate_poset, Carrier, LatticeTables, PartialBinaryTable, ShapeError, TotalBinaryTable,
};
use crate::report::{CheckReport, LawCheck};
use thiserror::Error;

/// A commutative quasiresiduated lattice candidate
/// `(C, ∨, ∧, ⊙, →, 0, 1)` with `⊙` partial and `→` total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommQResLattice {
    pub carrier: Carrier,
    pub lattice: LatticeTables,
    pub odot: PartialBinaryTable,
    pub arrow: TotalBinaryTable,
    pub zero: usize,
    pub one: usize,
}

/// A quasiresiduated lattice candidate
/// `(Q, ∨, ∧, ⊙, →, ⇝, 0, 1)`; `⊙` need not be commutative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QResLattice {
    pub carrier: Carrier,
    pub lattice: LatticeTables,
    pub odot: PartialBinaryTable,
    pub arrow: TotalBinaryTable,
    pub leadsto: TotalBinaryTable,
    pub zero: usize,
    pub one: usize,
}

impl CommQResLattice {
    /// Derived complement `x' = x→0`.
    pub fn prime(&self, x: usize) -> usize {
        self.arrow.get(x, self.zero)
    }

    /// Lift to a general quasiresiduated lattice with `⇝ := →`.
    pub fn lift(&self) -> QResLattice {
        QResLattice {
            carrier: self.carrier.clone(),
            lattice: self.lattice.clone(),
            odot: self.odot.clone(),
            arrow: self.arrow.clone(),
            leadsto: self.arrow.clone(),
            zero: self.zero,
            one: self.one,
        }
    }
}

impl QResLattice {
    /// Derived left complement `x̄ = x→0`.
    pub fn bar(&self, x: usize) -> usize {
        self.arrow.get(x, self.zero)
    }

    /// Derived right complement `x̃ = x⇝0`.
    pub fn tilde(&self, x: usize) -> usize {
        self.leadsto.get(x, self.zero)
    }
}

/// Validate that stored join/meet tables together with the derived order
/// form a bounded lattice. All defects land under the single law id `LAT`.
pub fn check_lattice_tables(lt: &LatticeTables, cap: usize) -> CheckReport {
    let n = lt.order.size();
    let mut lat = LawCheck::new("LAT", cap);

    let rel: Vec<bool> =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| lt.order.leq(x, y)).collect();
    if let Err(crate::finite::PosetError::Laws(vs)) =
        validate_poset(n, &rel, lt.order.bottom, lt.order.top)
    {
        for v in vs {
            match v {
                crate::finite::PosetViolation::Reflexivity(x) => {
                    lat.fail_note(&[x], "order not reflexive")
                }
                crate::finite::PosetViolation::Antisymmetry(x, y) => {
                    lat.fail_note(&[x, y], "order not antisymmetric")
                }
                crate::finite::PosetViolation::Transitivity(x, y, z) => {
                    lat.fail_note(&[x, y, z], "order not transitive")
                }
                crate::finite::PosetViolation::BottomNotBelow(x) => {
                    lat.fail_note(&[x], "bottom not below element")
                }
                crate::finite::PosetViolation::TopNotAbove(x) => {
                    lat.fail_note(&[x], "top not above element")
                }
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let j = lt.join.get(x, y);
            let lub_ok = lt.order.leq(x, j)
                && lt.order.leq(y, j)
                && (0..n)
                    .filter(|&z| lt.order.leq(x, z) && lt.order.leq(y, z))
                    .all(|z| lt.order.leq(j, z));
            if !lub_ok {
                lat.fail_note(&[x, y], "join is not the least upper bound");
            }
            let m = lt.meet.get(x, y);
            let glb_ok = lt.order.leq(m, x)
                && lt.order.leq(m, y)
                && (0..n)
                    .filter(|&z| lt.order.leq(z, x) && lt.order.leq(z, y))
                    .all(|z| lt.order.leq(z, m));
            if !glb_ok {
                lat.fail_note(&[x, y], "meet is not the greatest lower bound");
            }
            if lt.meet.get(x, lt.join.get(x, y)) != x || lt.join.get(x, lt.meet.get(x, y)) != x {
                lat.fail_note(&[x, y], "absorption fails");
            }
        }
    }

    CheckReport { laws: vec![lat.done()] }
}

fn check_cqrl_shape(c: &CommQResLattice) -> Result<usize, ShapeError> {
    let n = c.carrier.size();
    for (what, sz) in [
        ("join table", c.lattice.join.size()),
        ("meet table", c.lattice.meet.size()),
        ("odot table", c.odot.size()),
        ("arrow table", c.arrow.size()),
        ("order relation", c.lattice.order.size()),
    ] {
        if sz != n {
            return Err(ShapeError::new(what, n, sz));
        }
    }
    if c.zero >= n || c.one >= n {
        return Err(ShapeError::new("constants", n - 1, c.zero.max(c.one)));
    }
    Ok(n)
}

/// Check (C1)-(C3) together with the bounded-lattice prerequisite.
///
/// C1: `(C,⊙,1)` is a partial commutative monoid and `x⊙y` is defined
/// exactly when `x' ≤ y`. C2: `'` is an involution and antitone.
/// C3: commutative quasiadjointness over all triples; an undefined
/// quasiadjointness term is reported as a C1 defect, never a crash.
pub fn check_cqrl_axioms(c: &CommQResLattice, cap: usize) -> Result<CheckReport, ShapeError> {
    let n = check_cqrl_shape(c)?;
    let ord = &c.lattice.order;
    let prime = |x: usize| c.prime(x);

    let mut report = check_lattice_tables(&c.lattice, cap);

    let mut c1 = LawCheck::new("C1", cap);
    for x in 0..n {
        if c.odot.get(x, c.one) != Some(x) {
            c1.fail_note(&[x], "x⊙1=x fails");
        }
        if c.odot.get(c.one, x) != Some(x) {
            c1.fail_note(&[x], "1⊙x=x fails");
        }
    }
    for x in 0..n {
        for y in 0..n {
            match (c.odot.get(x, y), c.odot.get(y, x)) {
                (None, None) => {}
                (Some(a), Some(b)) if a == b => {}
                _ => c1.fail_note(&[x, y], "commutativity"),
            }
            if c.odot.is_defined(x, y) != ord.leq(prime(x), y) {
                c1.fail_note(&[x, y], "definedness pattern x'≤y");
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = c.odot.get(x, y).and_then(|s| c.odot.get(s, z));
                let rhs = c.odot.get(y, z).and_then(|s| c.odot.get(x, s));
                if lhs != rhs {
                    c1.fail_note(&[x, y, z], "associativity");
                }
            }
        }
    }

    let mut c2 = LawCheck::new("C2", cap);
    for x in 0..n {
        if prime(prime(x)) != x {
            c2.fail_note(&[x], "involution");
        }
    }
    for x in 0..n {
        for y in 0..n {
            if ord.leq(x, y) && !ord.leq(prime(y), prime(x)) {
                c2.fail_note(&[x, y], "antitone");
            }
        }
    }

    let mut c3 = LawCheck::new("C3", cap);
    for x in 0..n {
        for y in 0..n {
            let w = c.lattice.join.get(x, prime(y));
            let t = c.odot.get(w, y);
            let t = match t {
                Some(t) => t,
                None => {
                    // Everywhere-definedness of the quasiadjointness term is
                    // a consequence of C1; report it there and move on.
                    c1.fail_note(&[x, y], "quasiadjointness term (x∨y')⊙y undefined");
                    continue;
                }
            };
            for z in 0..n {
                let lhs = ord.leq(t, c.lattice.meet.get(y, z));
                let rhs = ord.leq(w, c.arrow.get(y, z));
                if lhs != rhs {
                    c3.fail(&[x, y, z]);
                }
            }
        }
    }

    report.laws.push(c1.done());
    report.laws.push(c2.done());
    report.laws.push(c3.done());
    Ok(report)
}

/// Divisibility: `x ≤ y` implies `y⊙(y→x)` is defined and equals `x`.
pub fn check_cqrl_divisibility(c: &CommQResLattice, cap: usize) -> CheckReport {
    let n = c.carrier.size();
    let ord = &c.lattice.order;
    let mut div = LawCheck::new("CDIV", cap);
    for x in 0..n {
        for y in 0..n {
            if !ord.leq(x, y) {
                continue;
            }
            match c.odot.get(y, c.arrow.get(y, x)) {
                Some(v) if v == x => {}
                Some(_) => div.fail_note(&[x, y], "value"),
                None => div.fail_note(&[x, y], "y⊙(y→x) undefined"),
            }
        }
    }
    CheckReport { laws: vec![div.done()] }
}

fn check_qrl_shape(q: &QResLattice) -> Result<usize, ShapeError> {
    let n = q.carrier.size();
    for (what, sz) in [
        ("join table", q.lattice.join.size()),
        ("meet table", q.lattice.meet.size()),
        ("odot table", q.odot.size()),
        ("arrow table", q.arrow.size()),
        ("leadsto table", q.leadsto.size()),
        ("order relation", q.lattice.order.size()),
    ] {
        if sz != n {
            return Err(ShapeError::new(what, n, sz));
        }
    }
    if q.zero >= n || q.one >= n {
        return Err(ShapeError::new("constants", n - 1, q.zero.max(q.one)));
    }
    Ok(n)
}

/// Check (Q1)-(Q5) together with the bounded-lattice prerequisite.
///
/// Q1: `(Q,⊙,1)` is a partial monoid (not necessarily commutative) with
/// `x⊙y` defined exactly when `x̃ ≤ y`. Q2: bar/tilde mutually inverse and
/// both antitone. Q3/Q4: the two quasiadjointness biconditionals; undefined
/// terms are Q1 defects. Q5: `tilde(x̄⊙ȳ) = bar(x̃⊙ỹ)` wherever both sides
/// are defined, one-sided definedness reported as a Q5 defect.
pub fn check_qrl_axioms(q: &QResLattice, cap: usize) -> Result<CheckReport, ShapeError> {
    let n = check_qrl_shape(q)?;
    let ord = &q.lattice.order;
    let bar = |x: usize| q.bar(x);
    let tilde = |x: usize| q.tilde(x);

    let mut report = check_lattice_tables(&q.lattice, cap);

    let mut q1 = LawCheck::new("Q1", cap);
    for x in 0..n {
        if q.odot.get(x, q.one) != Some(x) {
            q1.fail_note(&[x], "x⊙1=x fails");
        }
        if q.odot.get(q.one, x) != Some(x) {
            q1.fail_note(&[x], "1⊙x=x fails");
        }
    }
    for x in 0..n {
        for y in 0..n {
            if q.odot.is_defined(x, y) != ord.leq(tilde(x), y) {
                q1.fail_note(&[x, y], "definedness pattern x̃≤y");
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = q.odot.get(x, y).and_then(|s| q.odot.get(s, z));
                let rhs = q.odot.get(y, z).and_then(|s| q.odot.get(x, s));
                if lhs != rhs {
                    q1.fail_note(&[x, y, z], "associativity");
                }
            }
        }
    }

    let mut q2 = LawCheck::new("Q2", cap);
    for x in 0..n {
        if tilde(bar(x)) != x || bar(tilde(x)) != x {
            q2.fail_note(&[x], "bar/tilde not mutually inverse");
        }
    }
    for x in 0..n {
        for y in 0..n {
            if ord.leq(x, y) && (!ord.leq(bar(y), bar(x)) || !ord.leq(tilde(y), tilde(x))) {
                q2.fail_note(&[x, y], "antitone");
            }
        }
    }

    let mut q3 = LawCheck::new("Q3", cap);
    for x in 0..n {
        for y in 0..n {
            let w = q.lattice.join.get(x, bar(y));
            let t = match q.odot.get(w, y) {
                Some(t) => t,
                None => {
                    q1.fail_note(&[x, y], "quasiadjointness term (x∨ȳ)⊙y undefined");
                    continue;
                }
            };
            for z in 0..n {
                let lhs = ord.leq(t, q.lattice.meet.get(y, z));
                let rhs = ord.leq(w, q.arrow.get(y, z));
                if lhs != rhs {
                    q3.fail(&[x, y, z]);
                }
            }
        }
    }

    let mut q4 = LawCheck::new("Q4", cap);
    for x in 0..n {
        for y in 0..n {
            let w = q.lattice.join.get(x, tilde(y));
            let t = match q.odot.get(y, w) {
                Some(t) => t,
                None => {
                    q1.fail_note(&[x, y], "quasiadjointness term y⊙(x∨ỹ) undefined");
                    continue;
                }
            };
            for z in 0..n {
                let lhs = ord.leq(t, q.lattice.meet.get(y, z));
                let rhs = ord.leq(w, q.leadsto.get(y, z));
                if lhs != rhs {
                    q4.fail(&[x, y, z]);
                }
            }
        }
    }

    let mut q5 = LawCheck::new("Q5", cap);
    for x in 0..n {
        for y in 0..n {
            let lhs = q.odot.get(bar(x), bar(y)).map(tilde);
            let rhs = q.odot.get(tilde(x), tilde(y)).map(bar);
            match (lhs, rhs) {
                (None, None) => {}
                (Some(a), Some(b)) if a == b => {}
                (Some(_), Some(_)) => q5.fail_note(&[x, y], "value mismatch"),
                _ => q5.fail_note(&[x, y], "one-sided definedness"),
            }
        }
    }

    report.laws.push(q1.done());
    report.laws.push(q2.done());
    report.laws.push(q3.done());
    report.laws.push(q4.done());
    report.laws.push(q5.done());
    Ok(report)
}

/// Divisibility: `x ≤ y` implies `(y→x)⊙y` and `y⊙(y⇝x)` are both defined
/// and equal `x`.
pub fn check_qrl_divisibility(q: &QResLattice, cap: usize) -> CheckReport {
    let n = q.carrier.size();
    let ord = &q.lattice.order;
    let mut div = LawCheck::new("QDIV", cap);
    for x in 0..n {
        for y in 0..n {
            if !ord.leq(x, y) {
                continue;
            }
            match q.odot.get(q.arrow.get(y, x), y) {
                Some(v) if v == x => {}
                Some(_) => div.fail_note(&[x, y], "(y→x)⊙y value"),
                None => div.fail_note(&[x, y], "(y→x)⊙y undefined"),
            }
            match q.odot.get(y, q.leadsto.get(y, x)) {
                Some(v) if v == x => {}
                Some(_) => div.fail_note(&[x, y], "y⊙(y⇝x) value"),
                None => div.fail_note(&[x, y], "y⊙(y⇝x) undefined"),
            }
        }
    }
    CheckReport { laws: vec![div.done()] }
}

/// The underlying `⊙` application of `⊗` was undefined; this signals a C1
/// violation upstream, since `(x∨y')' ≤ y` always holds under C1/C2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("x⊗y internally undefined at ({x},{y})")]
pub struct OtimesDefect {
    pub x: usize,
    pub y: usize,
}

/// The everywhere defined derived operation `x⊗y := (x∨y')⊙y`.
pub fn otimes(c: &CommQResLattice, x: usize, y: usize) -> Result<usize, OtimesDefect> {
    let w = c.lattice.join.get(x, c.prime(y));
    c.odot.get(w, y).ok_or(OtimesDefect { x, y })
}

/// Verify the `⊗` reformulation: the unit identities `x⊗1 = 1⊗x = x`, the
/// `⊗`-form of quasiadjointness, and (informationally) the identity
/// `y→z = y→(y∧z)` which holds on images of effect algebras.
pub fn check_remark_equivalences(c: &CommQResLattice, cap: usize) -> CheckReport {
    let n = c.carrier.size();
    let ord = &c.lattice.order;

    let mut unit = LawCheck::new("OTIMES-UNIT", cap);
    for x in 0..n {
        if otimes(c, x, c.one) != Ok(x) {
            unit.fail_note(&[x], "x⊗1=x fails");
        }
        if otimes(c, c.one, x) != Ok(x) {
            unit.fail_note(&[x], "1⊗x=x fails");
        }
    }

    let mut adj = LawCheck::new("OTIMES-ADJ", cap);
    for x in 0..n {
        for y in 0..n {
            let t = match otimes(c, x, y) {
                Ok(t) => t,
                Err(_) => {
                    adj.fail_note(&[x, y], "x⊗y internally undefined (C1 defect)");
                    continue;
                }
            };
            let w = c.lattice.join.get(x, c.prime(y));
            for z in 0..n {
                let lhs = ord.leq(t, c.lattice.meet.get(y, z));
                let rhs = ord.leq(w, c.arrow.get(y, z));
                if lhs != rhs {
                    adj.fail(&[x, y, z]);
                }
            }
        }
    }

    // Holds on every image of a lattice effect algebra; for an arbitrary
    // axiom-passing lattice it is evidence, not an axiom.
    let mut am = LawCheck::advisory("ARROW-MEET", cap);
    for y in 0..n {
        for z in 0..n {
            if c.arrow.get(y, z) != c.arrow.get(y, c.lattice.meet.get(y, z)) {
                am.fail(&[y, z]);
            }
        }
    }

    CheckReport { laws: vec![unit.done(), adj.done(), am.done()] }
}

/// Build a `LatticeTables` value from raw join/meet tables, deriving the
/// order syntactically as `x ≤ y iff x∨y = y`. No validation happens here;
/// [`check_lattice_tables`] is the semantic check.
pub fn lattice_tables_from_raw(
    join: TotalBinaryTable,
    meet: TotalBinaryTable,
    bottom: usize,
    top: usize,
) -> LatticeTables {
    let n = join.size();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            rel[x * n + y] = join.get(x, y) == y;
        }
    }
    LatticeTables {
        join,
        meet,
        order: crate::finite::BoundedPoset::from_parts_unchecked(n, rel, bottom, top),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effect::detect_lattice_effect;
    use crate::enumerate::catalog_effect;
    use crate::report::DEFAULT_WITNESS_CAP;
    use crate::transform::cqrl_of_effect;

    fn cqrl(name: &str) -> CommQResLattice {
        let le = detect_lattice_effect(&catalog_effect(name)).unwrap();
        cqrl_of_effect(&le).unwrap()
    }

    #[test]
    fn cqrl_of_mv3_passes_all_axioms() {
        let c = cqrl("mv3");
        // spot-check the tables the construction must produce
        assert_eq!(c.odot.get(1, 1), Some(0));
        assert_eq!(c.arrow.get(1, 1), 2);
        assert_eq!(c.arrow.get(2, 1), 1);
        let report = check_cqrl_axioms(&c, DEFAULT_WITNESS_CAP).unwrap();
        assert!(report.all_pass(), "{:?}", report.failed_ids());
        assert!(check_cqrl_divisibility(&c, DEFAULT_WITNESS_CAP).all_pass());
    }

    #[test]
    fn cqrl_of_bool2_is_classical_implication() {
        let c = cqrl("bool2");
        assert_eq!(c.arrow.get(1, 0), 0);
        assert_eq!(c.arrow.get(0, 0), 1);
        assert_eq!(c.arrow.get(0, 1), 1);
        assert_eq!(c.arrow.get(1, 1), 1);
        assert_eq!(c.odot.get(1, 1), Some(1));
        assert_eq!(c.odot.get(0, 1), Some(0));
        assert!(!c.odot.is_defined(0, 0));
        assert!(check_cqrl_axioms(&c, DEFAULT_WITNESS_CAP).unwrap().all_pass());
    }

    #[test]
    fn mutated_arrow_cell_breaks_c3() {
        let mut c = cqrl("mv3");
        c.arrow.set(1, 1, 1);
        let report = check_cqrl_axioms(&c, DEFAULT_WITNESS_CAP).unwrap();
        assert!(!report.law("C3").unwrap().passed());
    }

    #[test]
    fn divisibility_of_zero_is_annihilation() {
        // x=0: y⊙(y→0) = y⊙y' must be 0 for every y.
        for name in ["bool2", "mv3", "mv4", "diamond", "hsum-mv3"] {
            let c = cqrl(name);
            for y in 0..c.carrier.size() {
                assert_eq!(c.odot.get(y, c.prime(y)), Some(0), "{name} y={y}");
            }
        }
    }

    #[test]
    fn annihilator_is_unique() {
        // x⊙y = 0 iff y = x' over the catalog images.
        for name in ["bool2", "mv3", "mv4", "diamond", "hsum-mv3"] {
            let c = cqrl(name);
            let n = c.carrier.size();
            for x in 0..n {
                for y in 0..n {
                    let zero = c.odot.get(x, y) == Some(c.zero);
                    assert_eq!(zero, y == c.prime(x), "{name} ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn lifted_cqrl_passes_qrl_axioms() {
        for name in ["bool2", "mv3", "mv4", "diamond", "hsum-mv3"] {
            let q = cqrl(name).lift();
            let report = check_qrl_axioms(&q, DEFAULT_WITNESS_CAP).unwrap();
            assert!(report.all_pass(), "{name}: {:?}", report.failed_ids());
            assert!(check_qrl_divisibility(&q, DEFAULT_WITNESS_CAP).all_pass());
            // a→a = 1 and a⇝a = 1
            for a in 0..q.carrier.size() {
                assert_eq!(q.arrow.get(a, a), q.one);
                assert_eq!(q.leadsto.get(a, a), q.one);
            }
        }
    }

    #[test]
    fn mutated_tilde_breaks_q2() {
        let mut q = cqrl("mv3").lift();
        q.leadsto.set(1, 0, 0); // tilde no longer inverse of bar
        let report = check_qrl_axioms(&q, DEFAULT_WITNESS_CAP).unwrap();
        assert!(!report.law("Q2").unwrap().passed());
    }

    #[test]
    fn otimes_values_on_mv3() {
        let c = cqrl("mv3");
        for x in 0..3 {
            assert_eq!(otimes(&c, x, 2), Ok(x));
            assert_eq!(otimes(&c, 2, x), Ok(x));
        }
        assert_eq!(otimes(&c, 1, 1), Ok(0));
        assert_eq!(otimes(&c, 0, 1), Ok(0));
    }

    #[test]
    fn remark_equivalences_hold_on_catalog_images() {
        for name in ["bool2", "mv3", "mv4", "diamond", "hsum-mv3"] {
            let c = cqrl(name);
            let report = check_remark_equivalences(&c, DEFAULT_WITNESS_CAP);
            assert!(report.all_pass(), "{name}: {:?}", report.failed_ids());
            // arrow-meet is advisory but must hold on effect-algebra images
            assert!(report.law("ARROW-MEET").unwrap().passed(), "{name}");
        }
    }
}
