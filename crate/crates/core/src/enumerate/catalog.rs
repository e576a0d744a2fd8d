//! A small catalog of named algebras, axiom-checked on construction in
//! tests, used as fixtures throughout the suite and exposed through the
//! CLI.

use crate::effect::EffectAlgebra;
use crate::finite::{Carrier, PartialBinaryTable, UnaryTable};
use crate::model::Algebra;
use crate::pseudoeffect::pseudo_from_effect;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub notes: &'static str,
    pub algebra: Algebra,
}

fn chain_effect(n: usize) -> EffectAlgebra {
    // truncated addition on the n-chain: x+y defined iff x+y <= n-1
    let mut plus = PartialBinaryTable::new_undefined(n);
    for x in 0..n {
        for y in 0..n {
            if x + y <= n - 1 {
                plus.set(x, y, Some(x + y));
            }
        }
    }
    let comp = UnaryTable::new((0..n).map(|x| n - 1 - x).collect()).unwrap();
    EffectAlgebra { carrier: Carrier::canonical(n), plus, comp, zero: 0, one: n - 1 }
}

fn diamond_effect() -> EffectAlgebra {
    // Boolean 2x2: atoms a=1, b=2; sums on disjoint pairs only.
    let n = 4;
    let mut plus = PartialBinaryTable::new_undefined(n);
    for x in 0..n {
        plus.set(0, x, Some(x));
        plus.set(x, 0, Some(x));
    }
    plus.set(1, 2, Some(3));
    plus.set(2, 1, Some(3));
    let comp = UnaryTable::new(vec![3, 2, 1, 0]).unwrap();
    EffectAlgebra { carrier: Carrier::canonical(n), plus, comp, zero: 0, one: n - 1 }
}

fn horizontal_sum_mv3() -> EffectAlgebra {
    // Two copies of MV3 glued along 0 and 1; each middle element is its own
    // complement and the two middles have no sum.
    let n = 4;
    let mut plus = PartialBinaryTable::new_undefined(n);
    for x in 0..n {
        plus.set(0, x, Some(x));
        plus.set(x, 0, Some(x));
    }
    plus.set(1, 1, Some(3));
    plus.set(2, 2, Some(3));
    let comp = UnaryTable::new(vec![3, 1, 2, 0]).unwrap();
    EffectAlgebra { carrier: Carrier::canonical(n), plus, comp, zero: 0, one: n - 1 }
}

/// The full catalog: the named effect algebras plus their pseudoeffect
/// reinterpretations (`barmap = tildemap = comp`).
pub fn catalog() -> Vec<CatalogEntry> {
    let effects: Vec<(&'static str, &'static str, EffectAlgebra)> = vec![
        ("bool2", "two-element Boolean effect algebra", chain_effect(2)),
        ("mv3", "three-element chain with a+a=1", chain_effect(3)),
        ("mv4", "four-element chain with truncated addition", chain_effect(4)),
        ("diamond", "Boolean 2x2 viewed as an effect algebra", diamond_effect()),
        ("hsum-mv3", "horizontal sum of two three-element chains", horizontal_sum_mv3()),
    ];
    let mut out = Vec::new();
    for (name, notes, e) in &effects {
        out.push(CatalogEntry { name, notes, algebra: Algebra::Effect(e.clone()) });
    }
    let pseudo: Vec<(&'static str, &'static str)> = vec![
        ("bool2-pseudo", "bool2 reinterpreted with bar = tilde = comp"),
        ("mv3-pseudo", "mv3 reinterpreted with bar = tilde = comp"),
        ("mv4-pseudo", "mv4 reinterpreted with bar = tilde = comp"),
        ("diamond-pseudo", "diamond reinterpreted with bar = tilde = comp"),
        ("hsum-mv3-pseudo", "hsum-mv3 reinterpreted with bar = tilde = comp"),
    ];
    for ((name, notes), (_, _, e)) in pseudo.iter().zip(effects.iter()) {
        out.push(CatalogEntry {
            name,
            notes,
            algebra: Algebra::Pseudo(pseudo_from_effect(e)),
        });
    }
    out
}

pub fn catalog_lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Fetch a catalog effect algebra by name. Panics on unknown names or
/// non-effect entries; intended for fixtures.
pub fn catalog_effect(name: &str) -> EffectAlgebra {
    match catalog_lookup(name).map(|e| e.algebra) {
        Some(Algebra::Effect(e)) => e,
        _ => panic!("no effect algebra named `{name}` in the catalog"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effect::check_effect_axioms;
    use crate::pseudoeffect::check_pseudoeffect_axioms;
    use crate::report::DEFAULT_WITNESS_CAP;

    #[test]
    fn every_entry_passes_its_axiom_checker() {
        for entry in catalog() {
            match &entry.algebra {
                Algebra::Effect(e) => {
                    let r = check_effect_axioms(e, DEFAULT_WITNESS_CAP).unwrap();
                    assert!(r.all_pass(), "{}: {:?}", entry.name, r.failed_ids());
                }
                Algebra::Pseudo(p) => {
                    let r = check_pseudoeffect_axioms(p, DEFAULT_WITNESS_CAP).unwrap();
                    assert!(r.all_pass(), "{}: {:?}", entry.name, r.failed_ids());
                }
                _ => unreachable!("catalog only ships effect and pseudoeffect entries"),
            }
        }
    }

    #[test]
    fn lookups() {
        assert!(catalog_lookup("mv3").is_some());
        assert!(catalog_lookup("diamond").is_some());
        assert!(catalog_lookup("nonesuch").is_none());
        let mv3 = catalog_effect("mv3");
        assert_eq!(mv3.plus.get(1, 1), Some(2));
    }
}
