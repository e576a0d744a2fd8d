//! Independent brute-force model generators for very small sizes.
//!
//! These share nothing with the pruned searches except the final axiom
//! checkers: every candidate table is generated by exhaustive scans and
//! filtered through the full checker. They exist purely to cross-validate
//! the pruned searches, so they are deliberately naive and only support
//! sizes 2 and 3.
//!
//! For the residuated kinds a literal product over all five tables is
//! far too large even at size 3, so the scan is layered: lattices first,
//! then complement maps constrained to be antitone involutions (which the
//! axioms force), then product tables on the forced definedness pattern,
//! with arrows scanned last. Each layer's constraint is itself one of the
//! axioms being checked, so the layering cannot exclude a model that the
//! full checker would accept.

use crate::effect::{check_effect_axioms, EffectAlgebra};
use crate::finite::{Carrier, PartialBinaryTable, TotalBinaryTable, UnaryTable};
use crate::pseudoeffect::{check_pseudoeffect_axioms, PseudoeffectAlgebra};
use crate::quasires::{check_cqrl_axioms, check_qrl_axioms, CommQResLattice, QResLattice};

use super::search::bounded_lattices;

pub const ORACLE_MAX_SIZE: usize = 3;

/// Quasiadjointness as a standalone filter. `left` checks the `→` law
/// `(x∨ȳ)⊙y ≤ y∧z ⟺ x∨ȳ ≤ y→z`; otherwise the `⇝` law with the factors
/// swapped. An undefined product term counts as a failure, matching the
/// full checkers.
fn quasiadj_ok(
    n: usize,
    lt: &crate::finite::LatticeTables,
    comp: &[usize],
    odot: &PartialBinaryTable,
    table: &TotalBinaryTable,
    left: bool,
) -> bool {
    for x in 0..n {
        for y in 0..n {
            let w = lt.join.get(x, comp[y]);
            let prod = if left { odot.get(w, y) } else { odot.get(y, w) };
            let Some(prod) = prod else { return false };
            for z in 0..n {
                let lhs = lt.order.leq(prod, lt.meet.get(y, z));
                let rhs = lt.order.leq(w, table.get(y, z));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// All partial binary tables on `n` elements, in lexicographic cell order
/// with "undefined" ordered before the values.
fn all_partial_tables(n: usize) -> Vec<PartialBinaryTable> {
    let cells = n * n;
    let base = n + 1; // 0 = undefined, 1..=n = value-1
    let total = (base as u64).pow(cells as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut t = PartialBinaryTable::new_undefined(n);
        let mut c = code;
        for i in 0..cells {
            let d = (c % base as u64) as usize;
            c /= base as u64;
            if d > 0 {
                t.set(i / n, i % n, Some(d - 1));
            }
        }
        out.push(t);
    }
    out
}

fn all_unary_maps(n: usize) -> Vec<UnaryTable> {
    let total = (n as u64).pow(n as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut vals = vec![0usize; n];
        let mut c = code;
        for v in vals.iter_mut() {
            *v = (c % n as u64) as usize;
            c /= n as u64;
        }
        out.push(UnaryTable::new(vals).expect("in range"));
    }
    out
}

/// Every effect algebra on `{0, .., n-1}` with zero 0 and one n-1. The
/// complement map is derived from the table rather than scanned: any map
/// other than the unique one fails E3 anyway.
pub fn oracle_effect(n: usize) -> Vec<EffectAlgebra> {
    assert!(n <= ORACLE_MAX_SIZE);
    let one = n - 1;
    let mut out = Vec::new();
    for plus in all_partial_tables(n) {
        let comp: Option<Vec<usize>> = (0..n)
            .map(|x| {
                let cs: Vec<usize> = (0..n).filter(|&u| plus.get(x, u) == Some(one)).collect();
                match cs.as_slice() {
                    [u] => Some(*u),
                    _ => None,
                }
            })
            .collect();
        let Some(comp) = comp else { continue };
        let e = EffectAlgebra {
            carrier: Carrier::canonical(n),
            plus: plus.clone(),
            comp: UnaryTable::new(comp).expect("in range"),
            zero: 0,
            one,
        };
        if check_effect_axioms(&e, 1).map(|r| r.all_pass()).unwrap_or(false) {
            out.push(e);
        }
    }
    out
}

/// Every pseudoeffect algebra on `{0, .., n-1}`, complements derived.
pub fn oracle_pseudoeffect(n: usize) -> Vec<PseudoeffectAlgebra> {
    assert!(n <= ORACLE_MAX_SIZE);
    let one = n - 1;
    let mut out = Vec::new();
    for plus in all_partial_tables(n) {
        let maps: Option<(Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                let ls: Vec<usize> = (0..n).filter(|&u| plus.get(u, x) == Some(one)).collect();
                let rs: Vec<usize> = (0..n).filter(|&w| plus.get(x, w) == Some(one)).collect();
                match (ls.as_slice(), rs.as_slice()) {
                    ([u], [w]) => Some((*u, *w)),
                    _ => None,
                }
            })
            .collect::<Option<Vec<(usize, usize)>>>()
            .map(|ps| ps.into_iter().unzip());
        let Some((bar, tilde)) = maps else { continue };
        let p = PseudoeffectAlgebra {
            carrier: Carrier::canonical(n),
            plus: plus.clone(),
            barmap: UnaryTable::new(bar).expect("in range"),
            tildemap: UnaryTable::new(tilde).expect("in range"),
            zero: 0,
            one,
        };
        if check_pseudoeffect_axioms(&p, 1).map(|r| r.all_pass()).unwrap_or(false) {
            out.push(p);
        }
    }
    out
}

/// Total tables with the zero column pinned to `col0` (an arrow table's
/// `x→0` column is the complement map by definition, so scanning other
/// values would be wasted work, not a lost model).
fn arrow_tables(n: usize, col0: &[usize]) -> Vec<TotalBinaryTable> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (1..n).map(move |y| (x, y)))
        .collect();
    let total = (n as u64).pow(cells.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut t = TotalBinaryTable::filled(n, 0);
        for x in 0..n {
            t.set(x, 0, col0[x]);
        }
        let mut c = code;
        for &(x, y) in &cells {
            t.set(x, y, (c % n as u64) as usize);
            c /= n as u64;
        }
        out.push(t);
    }
    out
}

/// Prefilter: units, closure under the pattern, and associativity where
/// all terms are defined. These are all direct axiom fragments; anything
/// that fails them fails the full checker too.
fn monoid_ok(n: usize, one: usize, odot: &PartialBinaryTable) -> bool {
    for x in 0..n {
        for u in [odot.get(x, one), odot.get(one, x)] {
            if let Some(v) = u {
                if v != x {
                    return false;
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = odot.get(x, y).and_then(|s| odot.get(s, z));
                let r = odot.get(y, z).and_then(|s| odot.get(x, s));
                if let (Some(l), Some(r)) = (l, r) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Partial tables restricted to a fixed definedness pattern.
fn patterned_partial_tables(
    n: usize,
    defined: &dyn Fn(usize, usize) -> bool,
) -> Vec<PartialBinaryTable> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| defined(x, y))
        .collect();
    let total = (n as u64).pow(cells.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut t = PartialBinaryTable::new_undefined(n);
        let mut c = code;
        for &(x, y) in &cells {
            t.set(x, y, Some((c % n as u64) as usize));
            c /= n as u64;
        }
        out.push(t);
    }
    out
}

/// Every commutative quasiresiduated lattice on `{0, .., n-1}`. Layered
/// scan: lattice, then prime candidates scanned as full maps and filtered
/// to antitone involutions (axiom C2), then products on the forced
/// definedness pattern (axiom C1), then arrows.
pub fn oracle_cqrl(n: usize) -> Vec<CommQResLattice> {
    assert!(n <= ORACLE_MAX_SIZE);
    let mut out = Vec::new();
    for lt in bounded_lattices(n) {
        for prime in all_unary_maps(n) {
            let p = prime.values();
            let involution = (0..n).all(|x| p[p[x]] == x);
            let antitone = (0..n)
                .all(|a| (0..n).all(|b| !lt.order.leq(a, b) || lt.order.leq(p[b], p[a])));
            if !involution || !antitone {
                continue;
            }
            let defined = |x: usize, y: usize| lt.order.leq(p[x], y);
            for odot in patterned_partial_tables(n, &defined) {
                if !monoid_ok(n, n - 1, &odot) {
                    continue;
                }
                for arrow in arrow_tables(n, p) {
                    let c = CommQResLattice {
                        carrier: Carrier::canonical(n),
                        lattice: lt.clone(),
                        odot: odot.clone(),
                        arrow: arrow.clone(),
                        zero: 0,
                        one: n - 1,
                    };
                    if check_cqrl_axioms(&c, 1).map(|r| r.all_pass()).unwrap_or(false) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// Every quasiresiduated lattice on `{0, .., n-1}`. Same layering with
/// mutually inverse antitone bijections for the two complements (Q2) and
/// a definedness pattern `x̃ ≤ y` (Q1).
pub fn oracle_qrl(n: usize) -> Vec<QResLattice> {
    assert!(n <= ORACLE_MAX_SIZE);
    let mut out = Vec::new();
    for lt in bounded_lattices(n) {
        for barmap in all_unary_maps(n) {
            let bar = barmap.values();
            // bijection with antitone inverse
            let mut tilde = vec![usize::MAX; n];
            let mut ok = true;
            for x in 0..n {
                if tilde[bar[x]] != usize::MAX {
                    ok = false;
                    break;
                }
                tilde[bar[x]] = x;
            }
            if !ok {
                continue;
            }
            let anti = |m: &[usize]| {
                (0..n).all(|a| (0..n).all(|b| !lt.order.leq(a, b) || lt.order.leq(m[b], m[a])))
            };
            if !anti(bar) || !anti(&tilde) {
                continue;
            }
            let defined = |x: usize, y: usize| lt.order.leq(tilde[x], y);
            for odot in patterned_partial_tables(n, &defined) {
                if !monoid_ok(n, n - 1, &odot) {
                    continue;
                }
                for arrow in arrow_tables(n, bar) {
                    // quasiadjointness for → involves only odot and arrow;
                    // filter here so the leadsto scan is not multiplied out
                    if !quasiadj_ok(n, &lt, bar, &odot, &arrow, true) {
                        continue;
                    }
                    for leadsto in arrow_tables(n, &tilde) {
                        let q = QResLattice {
                            carrier: Carrier::canonical(n),
                            lattice: lt.clone(),
                            odot: odot.clone(),
                            arrow: arrow.clone(),
                            leadsto: leadsto.clone(),
                            zero: 0,
                            one: n - 1,
                        };
                        if check_qrl_axioms(&q, 1).map(|r| r.all_pass()).unwrap_or(false) {
                            out.push(q);
                        }
                    }
                }
            }
        }
    }
    out
}
