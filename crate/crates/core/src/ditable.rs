//! Pairs of operations `(⊣, ⊢)` and the dimonoid axioms
//!
//! ```text
//! (D1) (x ⊣ y) ⊣ z = x ⊣ (y ⊢ z)
//! (D2) (x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)
//! (D3) (x ⊣ y) ⊢ z = x ⊢ (y ⊢ z)
//! ```
//!
//! together with associativity of both operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{cayley_lines, first_failing_triple, Element, OpTable, Triple, Verdict};

/// Per-axiom outcome; each failing entry carries the first witness in
/// `x, y, z` scan order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AxiomReport {
    pub assoc_left: Verdict,
    pub assoc_right: Verdict,
    pub d1: Verdict,
    pub d2: Verdict,
    pub d3: Verdict,
}

impl AxiomReport {
    pub fn is_dimonoid(&self) -> bool {
        self.entries().iter().all(|(_, v)| v.is_ok())
    }

    /// `(name, verdict)` for all five checks, in a fixed order.
    pub fn entries(&self) -> [(&'static str, Verdict); 5] {
        [
            ("assoc_left", self.assoc_left),
            ("assoc_right", self.assoc_right),
            ("d1", self.d1),
            ("d2", self.d2),
            ("d3", self.d3),
        ]
    }

    pub fn failures(&self) -> Vec<(&'static str, Triple)> {
        self.entries()
            .into_iter()
            .filter_map(|(name, v)| v.witness().map(|w| (name, w)))
            .collect()
    }
}

/// Two operations on the same carrier plus their axiom report.
///
/// Non-dimonoids are representable; callers inspect [`DiTable::report`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiTableRepr", into = "DiTableRepr")]
pub struct DiTable {
    left: OpTable,
    right: OpTable,
    report: AxiomReport,
}

/// JSON form: `{"n": 2, "left": [[...]], "right": [[...]]}`.
#[derive(Serialize, Deserialize)]
struct DiTableRepr {
    n: usize,
    left: Vec<Vec<Element>>,
    right: Vec<Vec<Element>>,
}

impl TryFrom<DiTableRepr> for DiTable {
    type Error = Error;

    fn try_from(r: DiTableRepr) -> Result<Self> {
        DiTable::pair(
            OpTable::from_rows(r.n, &r.left)?,
            OpTable::from_rows(r.n, &r.right)?,
        )
    }
}

impl From<DiTable> for DiTableRepr {
    fn from(d: DiTable) -> Self {
        let rows = |t: &OpTable| t.rows().map(<[_]>::to_vec).collect();
        DiTableRepr {
            n: d.size(),
            left: rows(&d.left),
            right: rows(&d.right),
        }
    }
}

/// Checks associativity of both tables and (D1)–(D3).
pub fn check_axioms(left: &OpTable, right: &OpTable) -> AxiomReport {
    let n = left.size();
    let l = |x, y| left.get(x, y);
    let r = |x, y| right.get(x, y);
    let verdict = |w: Option<Triple>| w.map_or(Verdict::Ok, Verdict::Witness);
    AxiomReport {
        assoc_left: left.is_associative(),
        assoc_right: right.is_associative(),
        d1: verdict(first_failing_triple(n, |x, y, z| {
            l(l(x, y), z) == l(x, r(y, z))
        })),
        d2: verdict(first_failing_triple(n, |x, y, z| {
            l(r(x, y), z) == r(x, l(y, z))
        })),
        d3: verdict(first_failing_triple(n, |x, y, z| {
            r(l(x, y), z) == r(x, r(y, z))
        })),
    }
}

impl DiTable {
    /// Pairs two equally sized tables; axiom failures are recorded, not rejected.
    pub fn pair(left: OpTable, right: OpTable) -> Result<Self> {
        if left.size() != right.size() {
            return Err(Error::SizeMismatch {
                expected: left.size(),
                actual: right.size(),
            });
        }
        let report = check_axioms(&left, &right);
        Ok(DiTable {
            left,
            right,
            report,
        })
    }

    /// The trivial dimonoid `(t, t)`.
    pub fn trivial(t: OpTable) -> Self {
        let report = check_axioms(&t, &t);
        DiTable {
            left: t.clone(),
            right: t,
            report,
        }
    }

    /// Pairs tables known to have the same size.
    pub(crate) fn pair_unchecked(left: OpTable, right: OpTable) -> Self {
        debug_assert_eq!(left.size(), right.size());
        let report = check_axioms(&left, &right);
        DiTable {
            left,
            right,
            report,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.left.size()
    }

    /// The `⊣` operation.
    pub fn left(&self) -> &OpTable {
        &self.left
    }

    /// The `⊢` operation.
    pub fn right(&self) -> &OpTable {
        &self.right
    }

    pub fn report(&self) -> &AxiomReport {
        &self.report
    }

    pub fn is_dimonoid(&self) -> bool {
        self.report.is_dimonoid()
    }

    pub(crate) fn require_dimonoid(&self) -> Result<()> {
        if self.is_dimonoid() {
            return Ok(());
        }
        let failed: Vec<String> = self
            .report
            .failures()
            .into_iter()
            .map(|(name, w)| format!("{name} at {w:?}"))
            .collect();
        Err(Error::NotADimonoid(failed.join(", ")))
    }

    /// `x ⊣ᵈ y = y ⊢ x` and `x ⊢ᵈ y = y ⊣ x`.
    pub fn dual(&self) -> DiTable {
        DiTable::pair_unchecked(self.right.dual(), self.left.dual())
    }

    /// Transposes each table on its own: `x ⊣' y = y ⊣ x`, `x ⊢' y = y ⊢ x`.
    /// In general this is not a dimonoid.
    pub fn naive_flip(&self) -> DiTable {
        DiTable::pair_unchecked(self.left.dual(), self.right.dual())
    }

    pub fn flags(&self) -> Result<DiFlags> {
        self.require_dimonoid()?;
        Ok(DiFlags {
            trivial: self.left == self.right,
            commutative: self.left.is_commutative() && self.right.is_commutative(),
            abelian: self.is_abelian(),
            self_dual: self.dual() == *self,
            rectangular: self.left.is_rectangular() && self.right.is_rectangular(),
        })
    }

    /// `x ⊣ y = y ⊢ x` for all `x, y`, checked pointwise.
    pub fn is_abelian(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.left.get(x, y) == self.right.get(y, x)))
    }

    /// Bar-units: `e` with `e ⊢ x = x = x ⊣ e` for every `x`.
    pub fn halo(&self) -> Result<Vec<Element>> {
        self.require_dimonoid()?;
        Ok(self.bar_units())
    }

    pub(crate) fn bar_units(&self) -> Vec<Element> {
        (0..self.size())
            .filter(|&e| self.right.is_left_identity(e) && self.left.is_right_identity(e))
            .collect()
    }

    /// Adjoins a common zero at index `n` to both operations.
    pub fn adjoin_zero(&self) -> DiTable {
        DiTable::pair_unchecked(self.left.adjoin_zero(), self.right.adjoin_zero())
    }

    /// Closure of a nonempty subset under both operations.
    pub fn is_subdimonoid(&self, subset: &[Element]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let n = self.size();
        let mut mask = vec![false; n];
        for &x in subset {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
            mask[x] = true;
        }
        Ok(subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| mask[self.left.get(a, b)] && mask[self.right.get(a, b)])
        }))
    }

    /// The element that is a zero of both operations, if any.
    pub fn zero(&self) -> Option<Element> {
        self.left.zero().filter(|&z| self.right.zero() == Some(z))
    }

    /// Applies a relabeling to both tables.
    pub fn relabel(&self, images: &[Element]) -> DiTable {
        DiTable::pair_unchecked(self.left.relabel(images), self.right.relabel(images))
    }

    /// Row-major `⊣` entries followed by row-major `⊢` entries.
    pub fn key(&self) -> Vec<Element> {
        let mut k = Vec::with_capacity(2 * self.size() * self.size());
        k.extend_from_slice(self.left.entries());
        k.extend_from_slice(self.right.entries());
        k
    }
}

/// `(t, tᵈ)`: a dimonoid exactly when `t` is right commutative.
///
/// With `strict` set a non right commutative `t` is an error; otherwise the
/// pair is returned with its failing axiom report.
pub fn from_right_commutative(t: &OpTable, strict: bool) -> Result<DiTable> {
    if let Some(w) = t.associativity_witness() {
        return Err(Error::NotAssociative(w));
    }
    if strict {
        if let Some(w) = t.right_commutativity_witness() {
            return Err(Error::NotRightCommutative(w));
        }
    }
    Ok(DiTable::pair_unchecked(t.clone(), t.dual()))
}

impl fmt::Debug for DiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiTable")
            .field("left", &self.left)
            .field("right", &self.right)
            .finish()
    }
}

impl fmt::Display for DiTable {
    /// The `⊣` and `⊢` squares side by side.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left = cayley_lines(&self.left, "⊣");
        let right = cayley_lines(&self.right, "⊢");
        let width = left.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        for (l, r) in left.iter().zip(&right) {
            let pad = width - l.chars().count();
            writeln!(f, "{l}{}    {r}", " ".repeat(pad))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiFlags {
    pub trivial: bool,
    pub commutative: bool,
    pub abelian: bool,
    pub self_dual: bool,
    pub rectangular: bool,
}
