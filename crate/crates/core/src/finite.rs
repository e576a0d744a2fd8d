//! Finite carriers, partial/total operation tables, bounded posets and
//! lattices.
//!
//! Everything downstream works over dense element indices `0..n-1`; labels
//! are presentation only. Tables are plain index grids, so every law check
//! is a bounded loop and every witness is a tuple of indices.

use thiserror::Error;

/// Reserved token that marks an undefined cell in the text format.
pub const UNDEFINED_TOKEN: &str = ".";

/// A finite carrier set: a size and one display label per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carrier {
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarrierError {
    #[error("carrier must have at least 2 elements, got {0}")]
    TooSmall(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` is empty or reserved")]
    BadLabel(String),
}

impl Carrier {
    pub fn new(labels: Vec<String>) -> Result<Self, CarrierError> {
        if labels.len() < 2 {
            return Err(CarrierError::TooSmall(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l == UNDEFINED_TOKEN {
                return Err(CarrierError::BadLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(CarrierError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier { labels })
    }

    /// Canonical carrier used by the enumerator: `0`, `a`, `b`, ... , `1`
    /// with the bottom constant at index 0 and the top at index `n-1`.
    pub fn canonical(n: usize) -> Self {
        assert!(n >= 2, "carrier size must be at least 2");
        let mut labels = Vec::with_capacity(n);
        labels.push("0".to_string());
        for i in 0..n.saturating_sub(2) {
            labels.push(((b'a' + i as u8) as char).to_string());
        }
        labels.push("1".to_string());
        Carrier { labels }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == token)
    }
}

/// Structural (shape) error, distinct from any law violation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{context}: expected {expected}, found {found}")]
pub struct ShapeError {
    pub context: String,
    pub expected: usize,
    pub found: usize,
}

impl ShapeError {
    pub fn new(context: impl Into<String>, expected: usize, found: usize) -> Self {
        ShapeError { context: context.into(), expected, found }
    }
}

/// An n×n grid of cells that are either `Defined(index)` or undefined.
///
/// Undefinedness is a distinguished cell state (`None`), never a sentinel
/// element value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialBinaryTable {
    n: usize,
    cells: Vec<Option<usize>>,
}

impl PartialBinaryTable {
    pub fn new_undefined(n: usize) -> Self {
        PartialBinaryTable { n, cells: vec![None; n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<Option<usize>>>) -> Result<Self, ShapeError> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(ShapeError::new(format!("partial table row {i}"), n, row.len()));
            }
            for v in &row {
                if let Some(v) = v {
                    if *v >= n {
                        return Err(ShapeError::new("partial table cell value", n - 1, *v));
                    }
                }
            }
            cells.extend(row);
        }
        Ok(PartialBinaryTable { n, cells })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.cells[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: Option<usize>) {
        self.cells[x * self.n + y] = v;
    }

    pub fn is_defined(&self, x: usize, y: usize) -> bool {
        self.get(x, y).is_some()
    }
}

/// An n×n grid of element indices (a total binary operation).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalBinaryTable {
    n: usize,
    cells: Vec<usize>,
}

impl TotalBinaryTable {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, ShapeError> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(ShapeError::new(format!("total table row {i}"), n, row.len()));
            }
            for v in &row {
                if *v >= n {
                    return Err(ShapeError::new("total table cell value", n - 1, *v));
                }
            }
            cells.extend(row);
        }
        Ok(TotalBinaryTable { n, cells })
    }

    pub fn filled(n: usize, v: usize) -> Self {
        TotalBinaryTable { n, cells: vec![v; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: usize) {
        self.cells[x * self.n + y] = v;
    }
}

/// A unary operation stored as a map of n element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnaryTable {
    map: Vec<usize>,
}

impl UnaryTable {
    pub fn new(map: Vec<usize>) -> Result<Self, ShapeError> {
        let n = map.len();
        for v in &map {
            if *v >= n {
                return Err(ShapeError::new("unary table value", n - 1, *v));
            }
        }
        Ok(UnaryTable { map })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn get(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.map
    }
}

/// A bounded partial order on `0..n-1`, stored as an explicit relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedPoset {
    n: usize,
    leq: Vec<bool>,
    pub bottom: usize,
    pub top: usize,
}

/// One violated poset law together with its witness tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetViolation {
    Reflexivity(usize),
    Antisymmetry(usize, usize),
    Transitivity(usize, usize, usize),
    BottomNotBelow(usize),
    TopNotAbove(usize),
}

impl std::fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PosetViolation::Reflexivity(x) => write!(f, "reflexivity fails at {x}"),
            PosetViolation::Antisymmetry(x, y) => write!(f, "antisymmetry fails at ({x},{y})"),
            PosetViolation::Transitivity(x, y, z) => {
                write!(f, "transitivity fails at ({x},{y},{z})")
            }
            PosetViolation::BottomNotBelow(x) => write!(f, "bottom is not below {x}"),
            PosetViolation::TopNotAbove(x) => write!(f, "top is not above {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("poset laws violated ({} violations)", .0.len())]
    Laws(Vec<PosetViolation>),
}

impl BoundedPoset {
    /// Build without validating the laws. Used by parsers and by checkers
    /// that validate separately.
    pub fn from_parts_unchecked(n: usize, leq: Vec<bool>, bottom: usize, top: usize) -> Self {
        assert_eq!(leq.len(), n * n);
        BoundedPoset { n, leq, bottom, top }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }
}

/// Validate reflexivity, antisymmetry, transitivity and boundedness.
///
/// Returns every violated law with the lexicographically first witnesses in
/// scan order x, then y, then z.
pub fn validate_poset(
    n: usize,
    rel: &[bool],
    bottom: usize,
    top: usize,
) -> Result<BoundedPoset, PosetError> {
    if rel.len() != n * n {
        return Err(ShapeError::new("order relation", n * n, rel.len()).into());
    }
    if bottom >= n || top >= n {
        return Err(ShapeError::new("order constants", n - 1, bottom.max(top)).into());
    }
    let at = |x: usize, y: usize| rel[x * n + y];
    let mut violations = Vec::new();
    for x in 0..n {
        if !at(x, x) {
            violations.push(PosetViolation::Reflexivity(x));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && at(x, y) && at(y, x) {
                violations.push(PosetViolation::Antisymmetry(x, y));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if at(x, y) && at(y, z) && !at(x, z) {
                    violations.push(PosetViolation::Transitivity(x, y, z));
                }
            }
        }
    }
    for x in 0..n {
        if !at(bottom, x) {
            violations.push(PosetViolation::BottomNotBelow(x));
        }
        if !at(x, top) {
            violations.push(PosetViolation::TopNotAbove(x));
        }
    }
    if violations.is_empty() {
        Ok(BoundedPoset { n, leq: rel.to_vec(), bottom, top })
    } else {
        Err(PosetError::Laws(violations))
    }
}

/// Join and meet tables together with the order they were computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTables {
    pub join: TotalBinaryTable,
    pub meet: TotalBinaryTable,
    pub order: BoundedPoset,
}

/// Witness that a pair has no unique least upper bound or greatest lower
/// bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no unique {which} for pair ({},{})", pair.0, pair.1)]
pub struct NotALattice {
    pub pair: (usize, usize),
    pub which: BoundKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Join => write!(f, "least upper bound"),
            BoundKind::Meet => write!(f, "greatest lower bound"),
        }
    }
}

/// Compute total join/meet tables by scanning upper and lower bound sets.
pub fn lattice_from_poset(p: &BoundedPoset) -> Result<LatticeTables, NotALattice> {
    let n = p.size();
    let mut join = TotalBinaryTable::filled(n, 0);
    let mut meet = TotalBinaryTable::filled(n, 0);
    for x in 0..n {
        for y in 0..n {
            let ubs: Vec<usize> = (0..n).filter(|&z| p.leq(x, z) && p.leq(y, z)).collect();
            match ubs.iter().find(|&&m| ubs.iter().all(|&z| p.leq(m, z))) {
                Some(&m) => join.set(x, y, m),
                None => {
                    return Err(NotALattice { pair: (x, y), which: BoundKind::Join });
                }
            }
            let lbs: Vec<usize> = (0..n).filter(|&z| p.leq(z, x) && p.leq(z, y)).collect();
            match lbs.iter().find(|&&m| lbs.iter().all(|&z| p.leq(z, m))) {
                Some(&m) => meet.set(x, y, m),
                None => {
                    return Err(NotALattice { pair: (x, y), which: BoundKind::Meet });
                }
            }
        }
    }
    Ok(LatticeTables { join, meet, order: p.clone() })
}

/// Commutativity of a partial table: definedness of `(x,y)` and `(y,x)` must
/// coincide and defined values must agree. Returns the first failing pair.
pub fn table_is_commutative(t: &PartialBinaryTable) -> Result<(), (usize, usize)> {
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            match (t.get(x, y), t.get(y, x)) {
                (None, None) => {}
                (Some(a), Some(b)) if a == b => {}
                _ => return Err((x, y)),
            }
        }
    }
    Ok(())
}

/// Bidirectional associativity of a partial table: `(x⊙y)⊙z` is defined iff
/// `x⊙(y⊙z)` is, and defined values agree. One side defined and the other
/// undefined is a violation. Returns the first failing triple.
pub fn table_is_associative_partial(
    t: &PartialBinaryTable,
) -> Result<(), (usize, usize, usize)> {
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = t.get(x, y).and_then(|s| t.get(s, z));
                let rhs = t.get(y, z).and_then(|s| t.get(x, s));
                if lhs != rhs {
                    return Err((x, y, z));
                }
            }
        }
    }
    Ok(())
}
