//! Concrete finite groups backed by a materialized Cayley table.

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result, TableLine};

/// Index of an element inside a specific [`FiniteGroup`].
pub type ElementId = usize;

/// Largest group order the library will materialize unless told otherwise.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Hard ceiling imposed by 16-bit table entries.
pub const MAX_REPRESENTABLE_ORDER: usize = 1 << 16;

/// Cayley table stored in the narrowest integer width that holds every index.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Table {
    Narrow(Vec<u8>),
    Wide(Vec<u16>),
}

impl Table {
    fn build(order: usize, mut entry: impl FnMut(usize, usize) -> usize) -> Self {
        if order <= 1 << 8 {
            let mut cells = Vec::with_capacity(order * order);
            for i in 0..order {
                for j in 0..order {
                    cells.push(entry(i, j) as u8);
                }
            }
            Table::Narrow(cells)
        } else {
            let mut cells = Vec::with_capacity(order * order);
            for i in 0..order {
                for j in 0..order {
                    cells.push(entry(i, j) as u16);
                }
            }
            Table::Wide(cells)
        }
    }

    #[inline(always)]
    fn get(&self, cell: usize) -> usize {
        match self {
            Table::Narrow(c) => c[cell] as usize,
            Table::Wide(c) => c[cell] as usize,
        }
    }
}

/// A finite group given by its full multiplication table.
///
/// Immutable after construction. Every constructor validates (or, for the
/// built-in families, constructs by design) a table satisfying the group axioms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Table,
    identity: ElementId,
    inverse: Vec<ElementId>,
    labels: Vec<String>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates a raw Cayley table. Labels default to decimal indices.
    pub fn from_cayley_table(order: usize, rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_cayley_table_with_labels(order, rows, None)
    }

    pub fn from_cayley_table_with_labels(
        order: usize,
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if order > MAX_REPRESENTABLE_ORDER {
            return Err(GroupError::OrderCapExceeded {
                order,
                cap: MAX_REPRESENTABLE_ORDER,
            });
        }
        if rows.len() != order {
            return Err(GroupError::BadShape(format!(
                "expected {order} rows, found {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::BadShape(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some((j, &value)) = row.iter().enumerate().find(|(_, &v)| v >= order) {
                return Err(GroupError::EntryOutOfRange {
                    row: i,
                    col: j,
                    value,
                    order,
                });
            }
        }
        check_latin(order, rows)?;

        let identity = (0..order)
            .find(|&e| (0..order).all(|i| rows[e][i] == i && rows[i][e] == i))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(order);
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| rows[i][j] == identity && rows[j][i] == identity)
                .ok_or(GroupError::NoInverse(i))?;
            inverse.push(inv);
        }
        let labels = match labels {
            Some(l) if l.len() == order => l,
            Some(l) => {
                return Err(GroupError::BadShape(format!(
                    "{} labels for {order} elements",
                    l.len()
                )))
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        let group = FiniteGroup {
            order,
            table: Table::build(order, |i, j| rows[i][j]),
            identity,
            inverse,
            labels,
        };
        group.check_associative()?;
        Ok(group)
    }

    /// Builds a group from a product function the caller guarantees satisfies
    /// the group axioms with identity at index 0. Checked in debug builds.
    pub(crate) fn from_product_fn(
        order: usize,
        labels: Vec<String>,
        product: impl FnMut(usize, usize) -> usize,
    ) -> Self {
        assert!(order > 0 && order <= MAX_REPRESENTABLE_ORDER);
        let table = Table::build(order, product);
        let mut inverse = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                if table.get(i * order + j) == 0 {
                    inverse[i] = j;
                    break;
                }
            }
        }
        let group = FiniteGroup {
            order,
            table,
            identity: 0,
            inverse,
            labels,
        };
        debug_assert!(group.inverse.iter().all(|&i| i < order));
        debug_assert!((0..order).all(|i| group.mul(0, i) == i && group.mul(i, 0) == i));
        group
    }

    /// Light's test: the set of `a` with `(x a) y = x (a y)` for all `x, y` is
    /// closed under products, so checking a generating set suffices.
    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let mut reached = ElementSet::empty(n);
        let mut members: Vec<usize> = Vec::new();
        let mut generators = Vec::new();
        reached.insert(self.identity);
        members.push(self.identity);
        for candidate in 0..n {
            if reached.contains(candidate) {
                continue;
            }
            generators.push(candidate);
            // grow the sub-magma generated so far until closed
            let mut queue = vec![candidate];
            reached.insert(candidate);
            members.push(candidate);
            while let Some(u) = queue.pop() {
                let snapshot = members.len();
                for k in 0..snapshot {
                    let v = members[k];
                    for w in [self.mul(u, v), self.mul(v, u)] {
                        if reached.insert(w) {
                            members.push(w);
                            queue.push(w);
                        }
                    }
                }
            }
        }
        for &a in &generators {
            for x in 0..n {
                let xa = self.mul(x, a);
                for y in 0..n {
                    if self.mul(xa, y) != self.mul(x, self.mul(a, y)) {
                        return Err(GroupError::NotAssociative { x, y: a, z: y });
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> ElementId {
        self.identity
    }

    #[inline(always)]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table.get(a * self.order + b)
    }

    #[inline(always)]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverse[a]
    }

    /// `t⁻¹ x t`.
    #[inline]
    pub fn conj(&self, x: ElementId, t: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(t), x), t)
    }

    pub fn pow(&self, x: ElementId, k: usize) -> ElementId {
        let mut acc = self.identity;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    /// Table as nested rows, for serialization and round-trip checks.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Conjugacy classes ordered by their least member, which is also the
    /// reported representative.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut seen = ElementSet::empty(self.order);
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen.contains(x) {
                continue;
            }
            let mut members = ElementSet::empty(self.order);
            for t in 0..self.order {
                members.insert(self.conj(x, t));
            }
            seen.union_with(&members);
            classes.push(ConjugacyClass {
                representative: x,
                members: members.to_vec(),
            });
        }
        classes
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = labels;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: ElementId,
    pub members: Vec<ElementId>,
}

fn check_latin(order: usize, rows: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![usize::MAX; order];
    for (i, row) in rows.iter().enumerate() {
        for &v in row {
            if seen[v] == i {
                return Err(GroupError::NotLatinSquare {
                    line: TableLine::Row,
                    index: i,
                    entry: v,
                });
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..order {
        for row in rows {
            let v = row[j];
            if seen[v] == j {
                return Err(GroupError::NotLatinSquare {
                    line: TableLine::Column,
                    index: j,
                    entry: v,
                });
            }
            seen[v] = j;
        }
    }
    Ok(())
}
