//! Backtracking searches with constraint propagation, one per base kind.
//!
//! Search canonicalization: zero is index 0 and one is index n-1, so
//! isomorphism reduction only has to permute interior elements. All
//! pruning steps are consequences of the axiom systems (unit laws, the
//! top-element definedness restriction, complement uniqueness,
//! commutativity symmetry, annihilator forcing); candidates that survive
//! to a leaf are still filtered through the full axiom checkers, so a
//! pruning bug can only lose models, never emit a bad one — and losses
//! would show up against the naive oracle at small sizes.
//!
//! Emission order is the deterministic depth-first order of the search.

use crate::effect::{check_effect_axioms, EffectAlgebra};
use crate::finite::{
    lattice_from_poset, validate_poset, Carrier, LatticeTables, PartialBinaryTable,
    TotalBinaryTable, UnaryTable,
};
use crate::pseudoeffect::{check_pseudoeffect_axioms, PseudoeffectAlgebra};
use crate::quasires::{check_cqrl_axioms, check_qrl_axioms, CommQResLattice, QResLattice};

/// Tri-state cell during search: unset, known undefined, or a value.
type Cell = Option<Option<usize>>;

struct Grid {
    n: usize,
    cells: Vec<Cell>,
}

impl Grid {
    fn new(n: usize) -> Self {
        Grid { n, cells: vec![None; n * n] }
    }

    fn get(&self, x: usize, y: usize) -> Cell {
        self.cells[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: Option<usize>) {
        self.cells[x * self.n + y] = Some(v);
    }

    fn clear(&mut self, x: usize, y: usize) {
        self.cells[x * self.n + y] = None;
    }

    /// Three-valued associativity over the assigned prefix: `None` means
    /// "cannot decide yet", `Some(false)` is a definite violation.
    fn associativity_consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.compose(x, y, z, true);
                    let rhs = self.compose(x, y, z, false);
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Evaluate `(x⊙y)⊙z` (left) or `x⊙(y⊙z)` (right) in three-valued
    /// logic: `None` = unknown, `Some(None)` = undefined, `Some(Some(v))`.
    fn compose(&self, x: usize, y: usize, z: usize, left: bool) -> Option<Option<usize>> {
        let inner = if left { self.get(x, y) } else { self.get(y, z) };
        match inner {
            None => None,
            Some(None) => Some(None),
            Some(Some(s)) => {
                if left {
                    self.get(s, z)
                } else {
                    self.get(x, s)
                }
            }
        }
    }

    fn to_partial(&self) -> PartialBinaryTable {
        let mut t = PartialBinaryTable::new_undefined(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                t.set(x, y, self.get(x, y).expect("grid complete"));
            }
        }
        t
    }
}

/// Enumerate effect algebras of size `n` in canonical form. The callback
/// returns `false` to stop the search early.
pub fn search_effect(n: usize, emit: &mut dyn FnMut(EffectAlgebra) -> bool) {
    let mut grid = Grid::new(n);
    let one = n - 1;
    // unit row/column and the top-element restriction
    for x in 0..n {
        grid.set(0, x, Some(x));
        grid.set(x, 0, Some(x));
    }
    for x in 1..n {
        grid.set(one, x, None);
        grid.set(x, one, None);
    }
    // free cells: symmetric interior pairs, lexicographic
    let mut free = Vec::new();
    for x in 1..n - 1 {
        for y in x..n - 1 {
            free.push((x, y));
        }
    }
    effect_step(&mut grid, &free, 0, emit);
}

fn effect_step(
    grid: &mut Grid,
    free: &[(usize, usize)],
    k: usize,
    emit: &mut dyn FnMut(EffectAlgebra) -> bool,
) -> bool {
    let n = grid.n;
    let one = n - 1;
    if k == free.len() {
        // every element needs exactly one complement
        let mut comp = vec![0usize; n];
        for x in 0..n {
            let cs: Vec<usize> =
                (0..n).filter(|&u| grid.get(x, u) == Some(Some(one))).collect();
            match cs.as_slice() {
                [u] => comp[x] = *u,
                _ => return true,
            }
        }
        let e = EffectAlgebra {
            carrier: Carrier::canonical(n),
            plus: grid.to_partial(),
            comp: UnaryTable::new(comp).expect("in range"),
            zero: 0,
            one,
        };
        if check_effect_axioms(&e, 1).map(|r| r.all_pass()).unwrap_or(false) {
            return emit(e);
        }
        return true;
    }
    let (x, y) = free[k];
    // undefined first, then values ascending; 0 excluded (positivity)
    let mut choices: Vec<Option<usize>> = vec![None];
    choices.extend((1..n).map(Some));
    for choice in choices {
        grid.set(x, y, choice);
        grid.set(y, x, choice);
        if effect_prune_ok(grid, x, y) && grid.associativity_consistent() {
            if !effect_step(grid, free, k + 1, emit) {
                grid.clear(x, y);
                grid.clear(y, x);
                return false;
            }
        }
        grid.clear(x, y);
        if x != y {
            grid.clear(y, x);
        }
    }
    true
}

fn effect_prune_ok(grid: &Grid, x: usize, y: usize) -> bool {
    let n = grid.n;
    let one = n - 1;
    // at most one complement per affected row
    for r in [x, y] {
        let count = (0..n).filter(|&u| grid.get(r, u) == Some(Some(one))).count();
        if count > 1 {
            return false;
        }
        // a fully assigned row with no complement is dead
        if count == 0 && (0..n).all(|u| grid.get(r, u).is_some()) {
            return false;
        }
    }
    true
}

/// Enumerate pseudoeffect algebras of size `n` in canonical form.
pub fn search_pseudoeffect(n: usize, emit: &mut dyn FnMut(PseudoeffectAlgebra) -> bool) {
    let mut grid = Grid::new(n);
    let one = n - 1;
    for x in 0..n {
        grid.set(0, x, Some(x));
        grid.set(x, 0, Some(x));
    }
    for x in 1..n {
        grid.set(one, x, None);
        grid.set(x, one, None);
    }
    let mut free = Vec::new();
    for x in 1..n - 1 {
        for y in 1..n - 1 {
            free.push((x, y));
        }
    }
    pseudo_step(&mut grid, &free, 0, emit);
}

fn pseudo_step(
    grid: &mut Grid,
    free: &[(usize, usize)],
    k: usize,
    emit: &mut dyn FnMut(PseudoeffectAlgebra) -> bool,
) -> bool {
    let n = grid.n;
    let one = n - 1;
    if k == free.len() {
        let mut bar = vec![0usize; n];
        let mut tilde = vec![0usize; n];
        for x in 0..n {
            let lefts: Vec<usize> =
                (0..n).filter(|&u| grid.get(u, x) == Some(Some(one))).collect();
            let rights: Vec<usize> =
                (0..n).filter(|&w| grid.get(x, w) == Some(Some(one))).collect();
            match (lefts.as_slice(), rights.as_slice()) {
                ([u], [w]) => {
                    bar[x] = *u;
                    tilde[x] = *w;
                }
                _ => return true,
            }
        }
        let p = PseudoeffectAlgebra {
            carrier: Carrier::canonical(n),
            plus: grid.to_partial(),
            barmap: UnaryTable::new(bar).expect("in range"),
            tildemap: UnaryTable::new(tilde).expect("in range"),
            zero: 0,
            one,
        };
        if check_pseudoeffect_axioms(&p, 1).map(|r| r.all_pass()).unwrap_or(false) {
            return emit(p);
        }
        return true;
    }
    let (x, y) = free[k];
    let mut choices: Vec<Option<usize>> = vec![None];
    choices.extend((1..n).map(Some));
    for choice in choices {
        grid.set(x, y, choice);
        if pseudo_prune_ok(grid, x, y) && grid.associativity_consistent() {
            if !pseudo_step(grid, free, k + 1, emit) {
                grid.clear(x, y);
                return false;
            }
        }
        grid.clear(x, y);
    }
    true
}

fn pseudo_prune_ok(grid: &Grid, x: usize, y: usize) -> bool {
    let n = grid.n;
    let one = n - 1;
    // right complements: at most one per row; left: at most one per column
    let row = (0..n).filter(|&w| grid.get(x, w) == Some(Some(one))).count();
    if row > 1 || (row == 0 && (0..n).all(|w| grid.get(x, w).is_some())) {
        return false;
    }
    let col = (0..n).filter(|&u| grid.get(u, y) == Some(Some(one))).count();
    if col > 1 || (col == 0 && (0..n).all(|u| grid.get(u, y).is_some())) {
        return false;
    }
    true
}

/// All bounded lattices on `0..n-1` with bottom 0 and top n-1, in
/// deterministic relation-bitmask order.
pub fn bounded_lattices(n: usize) -> Vec<LatticeTables> {
    let cells = n * n;
    assert!(cells <= 25, "lattice scan only supported for small sizes");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << cells) {
        let rel: Vec<bool> = (0..cells).map(|i| mask >> i & 1 == 1).collect();
        if let Ok(p) = validate_poset(n, &rel, 0, n - 1) {
            if let Ok(lt) = lattice_from_poset(&p) {
                out.push(lt);
            }
        }
    }
    out
}

/// Antitone involutions of a lattice order (candidate `'` maps under C2).
fn antitone_involutions(lt: &LatticeTables) -> Vec<Vec<usize>> {
    let n = lt.order.size();
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    fn rec(
        k: usize,
        n: usize,
        map: &mut Vec<usize>,
        lt: &LatticeTables,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == n {
            out.push(map.clone());
            return;
        }
        for v in 0..n {
            map[k] = v;
            // involution consistency on the assigned prefix
            let ok_inv = (0..=k).all(|a| {
                let fa = map[a];
                fa > k || map[fa] == a
            });
            let ok_anti = (0..=k).all(|a| {
                (0..=k).all(|b| !lt.order.leq(a, b) || lt.order.leq(map[b], map[a]))
            });
            if ok_inv && ok_anti {
                rec(k + 1, n, map, lt, out);
            }
        }
    }
    rec(0, n, &mut map, lt, &mut out);
    out.retain(|m| (0..n).all(|a| m[m[a]] == a));
    out
}

/// Pairs `(bar, tilde)` of mutually inverse antitone bijections (candidate
/// complement maps under Q2).
fn antitone_inverse_pairs(lt: &LatticeTables) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = lt.order.size();
    let mut out = Vec::new();
    let mut bar: Vec<usize> = (0..n).collect();
    fn rec(
        k: usize,
        n: usize,
        bar: &mut Vec<usize>,
        used: &mut Vec<bool>,
        lt: &LatticeTables,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if k == n {
            let antitone = (0..n).all(|a| {
                (0..n).all(|b| !lt.order.leq(a, b) || lt.order.leq(bar[b], bar[a]))
            });
            if antitone {
                let mut tilde = vec![0usize; n];
                for a in 0..n {
                    tilde[bar[a]] = a;
                }
                let tilde_anti = (0..n).all(|a| {
                    (0..n).all(|b| !lt.order.leq(a, b) || lt.order.leq(tilde[b], tilde[a]))
                });
                if tilde_anti {
                    out.push((bar.clone(), tilde));
                }
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                bar[k] = v;
                rec(k + 1, n, bar, used, lt, out);
                used[v] = false;
            }
        }
    }
    rec(0, n, &mut bar, &mut vec![false; n], lt, &mut out);
    out
}

/// Enumerate commutative quasiresiduated lattices of size `n`.
pub fn search_cqrl(n: usize, emit: &mut dyn FnMut(CommQResLattice) -> bool) {
    for lt in bounded_lattices(n) {
        for prime in antitone_involutions(&lt) {
            if !cqrl_with_prime(n, &lt, &prime, emit) {
                return;
            }
        }
    }
}

fn cqrl_with_prime(
    n: usize,
    lt: &LatticeTables,
    prime: &[usize],
    emit: &mut dyn FnMut(CommQResLattice) -> bool,
) -> bool {
    let one = n - 1;
    let mut grid = Grid::new(n);
    // definedness pattern x⊙y defined iff x' ≤ y; pattern is symmetric
    // because prime is an antitone involution
    let defined = |x: usize, y: usize| lt.order.leq(prime[x], y);
    for x in 0..n {
        for y in 0..n {
            if !defined(x, y) {
                grid.set(x, y, None);
            }
        }
    }
    // forced values: unit row/column and annihilators x⊙x' = 0
    let force = |g: &mut Grid, x: usize, y: usize, v: usize| -> bool {
        match g.get(x, y) {
            None => {
                g.set(x, y, Some(v));
                true
            }
            Some(Some(w)) => w == v,
            Some(None) => false,
        }
    };
    for x in 0..n {
        if defined(x, one) && !force(&mut grid, x, one, x) {
            return true;
        }
        if defined(one, x) && !force(&mut grid, one, x, x) {
            return true;
        }
        if defined(x, prime[x]) && !force(&mut grid, x, prime[x], 0) {
            return true;
        }
    }
    let mut free = Vec::new();
    for x in 0..n {
        for y in x..n {
            if defined(x, y) && grid.get(x, y).is_none() && grid.get(y, x).is_none() {
                free.push((x, y));
            } else if defined(x, y) && grid.get(x, y).is_none() {
                // mirror already forced; copy it
                let v = grid.get(y, x).unwrap();
                grid.set(x, y, v);
            } else if defined(x, y) && x != y && grid.get(y, x).is_none() {
                let v = grid.get(x, y).unwrap();
                grid.set(y, x, v);
            }
        }
    }
    cqrl_odot_step(&mut grid, lt, prime, &free, 0, emit)
}

fn cqrl_odot_step(
    grid: &mut Grid,
    lt: &LatticeTables,
    prime: &[usize],
    free: &[(usize, usize)],
    k: usize,
    emit: &mut dyn FnMut(CommQResLattice) -> bool,
) -> bool {
    let n = grid.n;
    if k == free.len() {
        return cqrl_solve_arrow(grid, lt, prime, emit);
    }
    let (x, y) = free[k];
    // 0 is reserved for the annihilator cells (x⊙y = 0 iff y = x')
    for v in 1..n {
        grid.set(x, y, Some(v));
        grid.set(y, x, Some(v));
        if grid.associativity_consistent() {
            if !cqrl_odot_step(grid, lt, prime, free, k + 1, emit) {
                grid.clear(x, y);
                grid.clear(y, x);
                return false;
            }
        }
        grid.clear(x, y);
        if x != y {
            grid.clear(y, x);
        }
    }
    true
}

/// With the product table fixed, quasiadjointness pins each arrow cell to
/// the candidates `a` with `{w ≥ y' : w ≤ a} = {w ≥ y' : w⊙y ≤ y∧z}`.
fn cqrl_solve_arrow(
    grid: &Grid,
    lt: &LatticeTables,
    prime: &[usize],
    emit: &mut dyn FnMut(CommQResLattice) -> bool,
) -> bool {
    let n = grid.n;
    let odot = grid.to_partial();
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for y in 0..n {
        for z in 0..n {
            let want: Vec<bool> = (0..n)
                .map(|w| {
                    if !lt.order.leq(prime[y], w) {
                        return false;
                    }
                    match odot.get(w, y) {
                        Some(t) => lt.order.leq(t, lt.meet.get(y, z)),
                        None => false,
                    }
                })
                .collect();
            let cands: Vec<usize> = (0..n)
                .filter(|&a| {
                    (0..n)
                        .filter(|&w| lt.order.leq(prime[y], w))
                        .all(|w| lt.order.leq(w, a) == want[w])
                })
                .collect();
            if z == 0 {
                // the zero column is the derived complement; consistency only
                if !cands.contains(&prime[y]) {
                    return true;
                }
                continue;
            }
            if cands.is_empty() {
                return true;
            }
            cells.push((y, z));
            candidates.push(cands);
        }
    }
    let mut arrow = TotalBinaryTable::filled(n, 0);
    for y in 0..n {
        arrow.set(y, 0, prime[y]);
    }
    arrow_product(&mut arrow, &cells, &candidates, 0, &mut |arrow| {
        let c = CommQResLattice {
            carrier: Carrier::canonical(n),
            lattice: lt.clone(),
            odot: odot.clone(),
            arrow: arrow.clone(),
            zero: 0,
            one: n - 1,
        };
        if check_cqrl_axioms(&c, 1).map(|r| r.all_pass()).unwrap_or(false) {
            return emit(c);
        }
        true
    })
}

fn arrow_product(
    arrow: &mut TotalBinaryTable,
    cells: &[(usize, usize)],
    candidates: &[Vec<usize>],
    k: usize,
    leaf: &mut dyn FnMut(&TotalBinaryTable) -> bool,
) -> bool {
    if k == cells.len() {
        return leaf(arrow);
    }
    let (y, z) = cells[k];
    for &v in &candidates[k] {
        arrow.set(y, z, v);
        if !arrow_product(arrow, cells, candidates, k + 1, leaf) {
            return false;
        }
    }
    true
}

/// Enumerate quasiresiduated lattices of size `n`.
pub fn search_qrl(n: usize, emit: &mut dyn FnMut(QResLattice) -> bool) {
    for lt in bounded_lattices(n) {
        for (bar, tilde) in antitone_inverse_pairs(&lt) {
            if !qrl_with_maps(n, &lt, &bar, &tilde, emit) {
                return;
            }
        }
    }
}

fn qrl_with_maps(
    n: usize,
    lt: &LatticeTables,
    bar: &[usize],
    tilde: &[usize],
    emit: &mut dyn FnMut(QResLattice) -> bool,
) -> bool {
    let one = n - 1;
    let mut grid = Grid::new(n);
    let defined = |x: usize, y: usize| lt.order.leq(tilde[x], y);
    for x in 0..n {
        for y in 0..n {
            if !defined(x, y) {
                grid.set(x, y, None);
            }
        }
    }
    let force = |g: &mut Grid, x: usize, y: usize, v: usize| -> bool {
        match g.get(x, y) {
            None => {
                g.set(x, y, Some(v));
                true
            }
            Some(Some(w)) => w == v,
            Some(None) => false,
        }
    };
    // units and the annihilators x⊙x̃ = 0, x̄⊙x = 0
    for x in 0..n {
        if defined(x, one) && !force(&mut grid, x, one, x) {
            return true;
        }
        if defined(one, x) && !force(&mut grid, one, x, x) {
            return true;
        }
        if defined(x, tilde[x]) && !force(&mut grid, x, tilde[x], 0) {
            return true;
        }
        if defined(bar[x], x) && !force(&mut grid, bar[x], x, 0) {
            return true;
        }
    }
    let mut free = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if grid.get(x, y).is_none() {
                free.push((x, y));
            }
        }
    }
    qrl_odot_step(&mut grid, lt, bar, tilde, &free, 0, emit)
}

#[allow(clippy::too_many_arguments)]
fn qrl_odot_step(
    grid: &mut Grid,
    lt: &LatticeTables,
    bar: &[usize],
    tilde: &[usize],
    free: &[(usize, usize)],
    k: usize,
    emit: &mut dyn FnMut(QResLattice) -> bool,
) -> bool {
    let n = grid.n;
    if k == free.len() {
        return qrl_solve_arrows(grid, lt, bar, tilde, emit);
    }
    let (x, y) = free[k];
    // 0 is reserved: x⊙y = 0 iff y = x̃ (equivalently x = ȳ)
    for v in 1..n {
        grid.set(x, y, Some(v));
        if grid.associativity_consistent() {
            if !qrl_odot_step(grid, lt, bar, tilde, free, k + 1, emit) {
                grid.clear(x, y);
                return false;
            }
        }
        grid.clear(x, y);
    }
    true
}

fn qrl_solve_arrows(
    grid: &Grid,
    lt: &LatticeTables,
    bar: &[usize],
    tilde: &[usize],
    emit: &mut dyn FnMut(QResLattice) -> bool,
) -> bool {
    let n = grid.n;
    let odot = grid.to_partial();

    // arrow cells from Q3: {w ≥ ȳ : w⊙y ≤ y∧z} must be {w ≥ ȳ : w ≤ a}
    let mut a_cells = Vec::new();
    let mut a_cands = Vec::new();
    // leadsto cells from Q4: {w ≥ ỹ : y⊙w ≤ y∧z} must be {w ≥ ỹ : w ≤ a}
    let mut l_cells = Vec::new();
    let mut l_cands = Vec::new();
    for y in 0..n {
        for z in 0..n {
            let want_a: Vec<bool> = (0..n)
                .map(|w| {
                    lt.order.leq(bar[y], w)
                        && odot
                            .get(w, y)
                            .map(|t| lt.order.leq(t, lt.meet.get(y, z)))
                            .unwrap_or(false)
                })
                .collect();
            let cands_a: Vec<usize> = (0..n)
                .filter(|&a| {
                    (0..n)
                        .filter(|&w| lt.order.leq(bar[y], w))
                        .all(|w| lt.order.leq(w, a) == want_a[w])
                })
                .collect();
            let want_l: Vec<bool> = (0..n)
                .map(|w| {
                    lt.order.leq(tilde[y], w)
                        && odot
                            .get(y, w)
                            .map(|t| lt.order.leq(t, lt.meet.get(y, z)))
                            .unwrap_or(false)
                })
                .collect();
            let cands_l: Vec<usize> = (0..n)
                .filter(|&a| {
                    (0..n)
                        .filter(|&w| lt.order.leq(tilde[y], w))
                        .all(|w| lt.order.leq(w, a) == want_l[w])
                })
                .collect();
            if z == 0 {
                if !cands_a.contains(&bar[y]) || !cands_l.contains(&tilde[y]) {
                    return true;
                }
                continue;
            }
            if cands_a.is_empty() || cands_l.is_empty() {
                return true;
            }
            a_cells.push((y, z));
            a_cands.push(cands_a);
            l_cells.push((y, z));
            l_cands.push(cands_l);
        }
    }

    let mut arrow = TotalBinaryTable::filled(n, 0);
    let mut leadsto = TotalBinaryTable::filled(n, 0);
    for y in 0..n {
        arrow.set(y, 0, bar[y]);
        leadsto.set(y, 0, tilde[y]);
    }
    arrow_product(&mut arrow, &a_cells, &a_cands, 0, &mut |arrow| {
        let mut leadsto = leadsto.clone();
        arrow_product(&mut leadsto, &l_cells, &l_cands, 0, &mut |leadsto| {
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
                return emit(q);
            }
            true
        })
    })
}
