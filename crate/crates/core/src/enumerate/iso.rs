//! Isomorphism testing for same-kind algebras: search all carrier
//! permutations fixing zero and one that transport every table of one
//! algebra onto the other.

use crate::finite::{PartialBinaryTable, TotalBinaryTable, UnaryTable};
use crate::model::Algebra;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot compare a `{0}` with a `{1}`")]
pub struct KindMismatch(pub &'static str, pub &'static str);

/// All permutations of `0..n` that fix index 0 and index `n-1`.
pub fn permutations_fixing_ends(n: usize) -> Vec<Vec<usize>> {
    let interior: Vec<usize> = (1..n - 1).collect();
    let mut out = Vec::new();
    permute(&mut interior.clone(), 0, &mut |arr| {
        let mut p = Vec::with_capacity(n);
        p.push(0);
        p.extend_from_slice(arr);
        p.push(n - 1);
        out.push(p);
    });
    out
}

fn permute(arr: &mut [usize], k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == arr.len() {
        emit(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute(arr, k + 1, emit);
        arr.swap(k, i);
    }
}

fn transport_partial(t: &PartialBinaryTable, p: &[usize]) -> PartialBinaryTable {
    let n = t.size();
    let mut out = PartialBinaryTable::new_undefined(n);
    for x in 0..n {
        for y in 0..n {
            if let Some(v) = t.get(x, y) {
                out.set(p[x], p[y], Some(p[v]));
            }
        }
    }
    out
}

fn transport_total(t: &TotalBinaryTable, p: &[usize]) -> TotalBinaryTable {
    let n = t.size();
    let mut out = TotalBinaryTable::filled(n, 0);
    for x in 0..n {
        for y in 0..n {
            out.set(p[x], p[y], p[t.get(x, y)]);
        }
    }
    out
}

fn transport_unary(t: &UnaryTable, p: &[usize]) -> UnaryTable {
    let n = t.size();
    let mut map = vec![0; n];
    for x in 0..n {
        map[p[x]] = p[t.get(x)];
    }
    UnaryTable::new(map).expect("permutation keeps values in range")
}

fn transports_onto(a: &Algebra, b: &Algebra, p: &[usize]) -> bool {
    match (a, b) {
        (Algebra::Effect(a), Algebra::Effect(b)) => {
            transport_partial(&a.plus, p) == b.plus && transport_unary(&a.comp, p) == b.comp
        }
        (Algebra::Pseudo(a), Algebra::Pseudo(b)) => {
            transport_partial(&a.plus, p) == b.plus
                && transport_unary(&a.barmap, p) == b.barmap
                && transport_unary(&a.tildemap, p) == b.tildemap
        }
        (Algebra::Cqrl(a), Algebra::Cqrl(b)) => {
            transport_total(&a.lattice.join, p) == b.lattice.join
                && transport_total(&a.lattice.meet, p) == b.lattice.meet
                && transport_partial(&a.odot, p) == b.odot
                && transport_total(&a.arrow, p) == b.arrow
        }
        (Algebra::Qrl(a), Algebra::Qrl(b)) => {
            transport_total(&a.lattice.join, p) == b.lattice.join
                && transport_total(&a.lattice.meet, p) == b.lattice.meet
                && transport_partial(&a.odot, p) == b.odot
                && transport_total(&a.arrow, p) == b.arrow
                && transport_total(&a.leadsto, p) == b.leadsto
        }
        _ => false,
    }
}

/// Search for a witness permutation carrying `a` onto `b`. Returns the
/// first witness in lexicographic generation order, or `None`.
pub fn are_isomorphic(a: &Algebra, b: &Algebra) -> Result<Option<Vec<usize>>, KindMismatch> {
    if a.kind_token() != b.kind_token() {
        return Err(KindMismatch(a.kind_token(), b.kind_token()));
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    for p in permutations_fixing_ends(a.size()) {
        if transports_onto(a, b, &p) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Size of the automorphism group (permutations fixing zero and one that
/// carry the algebra onto itself).
pub fn automorphism_count(a: &Algebra) -> usize {
    permutations_fixing_ends(a.size())
        .iter()
        .filter(|p| transports_onto(a, a, p))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::catalog_effect;

    #[test]
    fn identity_witnesses_self_isomorphism() {
        let a = Algebra::Effect(catalog_effect("diamond"));
        let w = are_isomorphic(&a, &a).unwrap().unwrap();
        assert_eq!(w, vec![0, 1, 2, 3]);
    }

    #[test]
    fn relabeled_mv4_is_isomorphic_by_the_transposition() {
        let d = catalog_effect("mv4");
        let p = vec![0, 2, 1, 3];
        let mut relabeled = d.clone();
        relabeled.plus = transport_partial(&d.plus, &p);
        relabeled.comp = transport_unary(&d.comp, &p);
        let w = are_isomorphic(&Algebra::Effect(d), &Algebra::Effect(relabeled))
            .unwrap()
            .unwrap();
        assert_eq!(w, p);
    }

    #[test]
    fn mv4_is_not_isomorphic_to_the_diamond() {
        let a = Algebra::Effect(catalog_effect("mv4"));
        let b = Algebra::Effect(catalog_effect("diamond"));
        assert_eq!(are_isomorphic(&a, &b).unwrap(), None);
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let a = Algebra::Effect(catalog_effect("mv3"));
        let b = Algebra::Pseudo(crate::pseudoeffect::pseudo_from_effect(&catalog_effect("mv3")));
        assert!(are_isomorphic(&a, &b).is_err());
    }

    #[test]
    fn diamond_has_the_flip_automorphism() {
        let a = Algebra::Effect(catalog_effect("diamond"));
        assert_eq!(automorphism_count(&a), 2);
    }
}
