//! Finite binary operations stored as Cayley tables.
//!
//! Elements of a carrier of size `n` are the indices `0..n`. Every
//! distinguished element (a zero, the points `a` and `c`, a subset `A`) is
//! passed around as an explicit index or index set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a carrier element.
pub type Element = usize;

/// An ordered triple `(x, y, z)` of carrier elements.
pub type Triple = [Element; 3];

/// Outcome of a universally quantified check over triples.
///
/// Serialized as `"ok"` or `{"witness": [x, y, z]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Ok,
    Witness(Triple),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    pub fn witness(&self) -> Option<Triple> {
        match self {
            Verdict::Ok => None,
            Verdict::Witness(t) => Some(*t),
        }
    }

    fn from_witness(w: Option<Triple>) -> Self {
        w.map_or(Verdict::Ok, Verdict::Witness)
    }
}

/// Scans all `n³` triples with `x` outermost and `z` innermost and returns
/// the first one for which `holds` is false.
pub(crate) fn first_failing_triple(
    n: usize,
    mut holds: impl FnMut(Element, Element, Element) -> bool,
) -> Option<Triple> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// An `n × n` operation table; `get(x, y)` is `x ∗ y`.
///
/// No algebraic law is assumed on construction, only that every entry lies
/// in the carrier.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OpTableRepr", into = "OpTableRepr")]
pub struct OpTable {
    n: usize,
    entries: Vec<Element>,
}

/// JSON form: `{"n": 2, "table": [[0, 0], [1, 1]]}`, row index = left operand.
#[derive(Serialize, Deserialize)]
struct OpTableRepr {
    n: usize,
    table: Vec<Vec<Element>>,
}

impl TryFrom<OpTableRepr> for OpTable {
    type Error = Error;

    fn try_from(repr: OpTableRepr) -> Result<Self> {
        OpTable::from_rows(repr.n, &repr.table)
    }
}

impl From<OpTable> for OpTableRepr {
    fn from(t: OpTable) -> Self {
        OpTableRepr {
            n: t.n,
            table: t.rows().map(<[_]>::to_vec).collect(),
        }
    }
}

impl OpTable {
    /// Validates a row-major entry sequence of length `n·n`.
    pub fn new(n: usize, entries: Vec<Element>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if entries.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                actual: entries.len(),
            });
        }
        if let Some(&index) = entries.iter().find(|&&e| e >= n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(OpTable { n, entries })
    }

    pub fn from_rows(n: usize, rows: &[Vec<Element>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if rows.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: rows.len(),
            });
        }
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: row.len(),
            });
        }
        OpTable::new(n, rows.concat())
    }

    /// Builds a table from a closure; the closure must stay inside `0..n`.
    pub(crate) fn from_fn(n: usize, f: impl Fn(Element, Element) -> Element) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = f(x, y);
                debug_assert!(v < n, "entry {v} out of range for n = {n}");
                entries.push(v);
            }
        }
        OpTable { n, entries }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.entries[x * self.n + y]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> + '_ {
        self.entries.chunks(self.n)
    }

    /// Returns a copy with entry `(x, y)` replaced by `v`.
    pub fn with_entry(&self, x: Element, y: Element, v: Element) -> Result<Self> {
        for index in [x, y, v] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
        }
        let mut out = self.clone();
        out.entries[x * self.n + y] = v;
        Ok(out)
    }

    /// `Verdict::Ok` iff `(x∗y)∗z = x∗(y∗z)` for all triples, otherwise the
    /// first violating triple in scan order.
    pub fn is_associative(&self) -> Verdict {
        Verdict::from_witness(self.associativity_witness())
    }

    pub fn associativity_witness(&self) -> Option<Triple> {
        first_failing_triple(self.n, |x, y, z| {
            self.get(self.get(x, y), z) == self.get(x, self.get(y, z))
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    pub fn is_band(&self) -> bool {
        (0..self.n).all(|x| self.get(x, x) == x)
    }

    /// First triple violating `s∗x∗y = s∗y∗x` (products read left to right).
    pub fn right_commutativity_witness(&self) -> Option<Triple> {
        first_failing_triple(self.n, |s, x, y| {
            self.get(self.get(s, x), y) == self.get(self.get(s, y), x)
        })
    }

    pub fn is_right_commutative(&self) -> bool {
        self.right_commutativity_witness().is_none()
    }

    /// `x∗y∗z = x∗z` for all triples.
    pub fn is_rectangular(&self) -> bool {
        first_failing_triple(self.n, |x, y, z| {
            self.get(self.get(x, y), z) == self.get(x, z)
        })
        .is_none()
    }

    /// The common value of a constant table, if the table is constant.
    pub fn null_zero(&self) -> Option<Element> {
        let first = self.entries[0];
        self.entries.iter().all(|&e| e == first).then_some(first)
    }

    pub fn is_left_zero_semigroup(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.get(x, y) == x))
    }

    pub fn is_right_zero_semigroup(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.get(x, y) == y))
    }

    pub fn is_left_zero(&self, z: Element) -> bool {
        (0..self.n).all(|a| self.get(z, a) == z)
    }

    pub fn is_right_zero(&self, z: Element) -> bool {
        (0..self.n).all(|a| self.get(a, z) == z)
    }

    pub fn is_left_identity(&self, e: Element) -> bool {
        (0..self.n).all(|a| self.get(e, a) == a)
    }

    pub fn is_right_identity(&self, e: Element) -> bool {
        (0..self.n).all(|a| self.get(a, e) == a)
    }

    /// The unique two-sided zero, if one exists.
    pub fn zero(&self) -> Option<Element> {
        (0..self.n).find(|&z| self.is_left_zero(z) && self.is_right_zero(z))
    }

    pub fn element_roles(&self) -> RoleReport {
        let collect =
            |p: &dyn Fn(Element) -> bool| (0..self.n).filter(|&x| p(x)).collect::<Vec<_>>();
        let left_zeros = collect(&|x| self.is_left_zero(x));
        let right_zeros = collect(&|x| self.is_right_zero(x));
        let left_identities = collect(&|x| self.is_left_identity(x));
        let right_identities = collect(&|x| self.is_right_identity(x));
        let zero = left_zeros.iter().copied().find(|z| right_zeros.contains(z));
        let identities = left_identities
            .iter()
            .copied()
            .filter(|e| right_identities.contains(e))
            .collect();
        RoleReport {
            left_zeros,
            right_zeros,
            zero,
            left_identities,
            right_identities,
            identities,
            idempotents: collect(&|x| self.get(x, x) == x),
        }
    }

    pub fn semigroup_class(&self) -> ClassFlags {
        let commutative = self.is_commutative();
        let band = self.is_band();
        ClassFlags {
            associative: self.associativity_witness().is_none(),
            commutative,
            band,
            semilattice: band && commutative,
            null: self.null_zero().is_some(),
            left_zero_sg: self.is_left_zero_semigroup(),
            right_zero_sg: self.is_right_zero_semigroup(),
            rectangular: self.is_rectangular(),
            right_commutative: self.is_right_commutative(),
        }
    }

    /// The dual operation `x ∗ᵈ y = y ∗ x`, i.e. the transposed table.
    pub fn dual(&self) -> OpTable {
        OpTable::from_fn(self.n, |x, y| self.get(y, x))
    }

    /// Adjoins a fresh zero at index `n`; original entries are kept.
    pub fn adjoin_zero(&self) -> OpTable {
        let zero = self.n;
        OpTable::from_fn(self.n + 1, |x, y| {
            if x == zero || y == zero {
                zero
            } else {
                self.get(x, y)
            }
        })
    }

    /// Transports the operation along the bijection `images`:
    /// the result satisfies `p(x) ∗' p(y) = p(x ∗ y)`.
    pub fn relabel(&self, images: &[Element]) -> OpTable {
        debug_assert_eq!(images.len(), self.n);
        let mut entries = vec![0; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                entries[images[x] * self.n + images[y]] = images[self.get(x, y)];
            }
        }
        OpTable { n: self.n, entries }
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in cayley_lines(self, "*") {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Renders a Cayley square with element indices as row and column headers.
pub fn cayley_lines(t: &OpTable, symbol: &str) -> Vec<String> {
    let width = t
        .size()
        .saturating_sub(1)
        .to_string()
        .len()
        .max(symbol.chars().count());
    let mut lines = Vec::with_capacity(t.size() + 2);
    let header: Vec<String> = (0..t.size()).map(|y| format!("{y:>width$}")).collect();
    lines.push(format!("{symbol:>width$} | {}", header.join(" ")));
    lines.push(format!(
        "{}-+-{}",
        "-".repeat(width),
        "-".repeat(header.join(" ").len())
    ));
    for (x, row) in t.rows().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        lines.push(format!("{x:>width$} | {}", cells.join(" ")));
    }
    lines
}

/// Distinguished elements of a single operation. All sets are sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleReport {
    pub left_zeros: Vec<Element>,
    pub right_zeros: Vec<Element>,
    pub zero: Option<Element>,
    pub left_identities: Vec<Element>,
    pub right_identities: Vec<Element>,
    pub identities: Vec<Element>,
    pub idempotents: Vec<Element>,
}

/// Which standard semigroup classes a table belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassFlags {
    pub associative: bool,
    pub commutative: bool,
    pub band: bool,
    pub semilattice: bool,
    pub null: bool,
    pub left_zero_sg: bool,
    pub right_zero_sg: bool,
    pub rectangular: bool,
    pub right_commutative: bool,
}
