//! Homomorphisms, automorphism groups and canonical forms.
//!
//! Isomorphisms are found by backtracking over element images. Candidates
//! for each element are restricted to elements with the same role
//! signature (zero/identity/idempotent status in both operations and a few
//! counting invariants), since every isomorphism preserves those roles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ditable::{DiFlags, DiTable};
use crate::error::{Error, Result};
use crate::table::{Element, OpTable};

/// Largest carrier accepted by [`canonical_form`].
pub const DEFAULT_CANONICAL_BOUND: usize = 5;

/// A bijection on `0..n`. JSON form: `{"images": [...]}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermutationRepr", into = "PermutationRepr")]
pub struct Permutation(Vec<Element>);

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    images: Vec<Element>,
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;

    fn try_from(r: PermutationRepr) -> Result<Self> {
        Permutation::new(r.images)
    }
}

impl From<Permutation> for PermutationRepr {
    fn from(p: Permutation) -> Self {
        PermutationRepr { images: p.0 }
    }
}

impl Permutation {
    pub fn new(images: Vec<Element>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Exchanges `i` and `j`.
    pub fn transposition(n: usize, i: Element, j: Element) -> Result<Self> {
        for index in [i, j] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        let mut p = Permutation::identity(n);
        p.0.swap(i, j);
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[Element] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.0[x]
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Calls `visit` on every permutation of `0..n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[Element])) {
    let mut p: Vec<Element> = (0..n).collect();
    loop {
        visit(&p);
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismCheck {
    pub homomorphism: bool,
    pub isomorphism: bool,
}

/// Tests `ψ(a ⊣ b) = ψ(a) ⊣ ψ(b)` and `ψ(a ⊢ b) = ψ(a) ⊢ ψ(b)` for all
/// pairs; an isomorphism must in addition be a bijection. The carriers may
/// differ in size, in which case no map is an isomorphism.
pub fn check_morphism(src: &DiTable, dst: &DiTable, map: &[Element]) -> Result<MorphismCheck> {
    let n = src.size();
    if map.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: map.len(),
        });
    }
    let m = dst.size();
    if let Some(&index) = map.iter().find(|&&y| y >= m) {
        return Err(Error::IndexOutOfRange { index, n: m });
    }
    let preserves = |s: &OpTable, d: &OpTable| {
        (0..n).all(|a| (0..n).all(|b| map[s.get(a, b)] == d.get(map[a], map[b])))
    };
    let homomorphism = preserves(src.left(), dst.left()) && preserves(src.right(), dst.right());
    let bijective = m == n && map.iter().collect::<BTreeSet<_>>().len() == n;
    Ok(MorphismCheck {
        homomorphism,
        isomorphism: homomorphism && bijective,
    })
}

/// Isomorphism-invariant description of a single element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    roles: [u8; 2],
    counts: [[usize; 4]; 2],
    bar_unit: bool,
}

fn table_signature(t: &OpTable, x: Element) -> (u8, [usize; 4]) {
    let n = t.size();
    let bits = [
        t.is_left_zero(x),
        t.is_right_zero(x),
        t.is_left_identity(x),
        t.is_right_identity(x),
        t.get(x, x) == x,
    ];
    let roles = bits
        .iter()
        .enumerate()
        .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << i));
    let counts = [
        (0..n).filter(|&y| t.get(x, y) == x).count(),
        (0..n).filter(|&y| t.get(y, x) == x).count(),
        t.entries().iter().filter(|&&v| v == x).count(),
        (0..n).filter(|&y| t.get(y, y) == x).count(),
    ];
    (roles, counts)
}

pub fn signatures(d: &DiTable) -> Vec<Signature> {
    let bar_units = d.bar_units();
    (0..d.size())
        .map(|x| {
            let (rl, cl) = table_signature(d.left(), x);
            let (rr, cr) = table_signature(d.right(), x);
            Signature {
                roles: [rl, rr],
                counts: [cl, cr],
                bar_unit: bar_units.contains(&x),
            }
        })
        .collect()
}

/// Backtracking search for isomorphisms `src → dst`, in lexicographic order
/// of image sequences. Stops after the first hit when `first_only` is set.
fn isomorphisms(src: &DiTable, dst: &DiTable, first_only: bool) -> Vec<Permutation> {
    let n = src.size();
    if dst.size() != n {
        return Vec::new();
    }
    let src_sig = signatures(src);
    let dst_sig = signatures(dst);
    let candidates: Vec<Vec<Element>> = src_sig
        .iter()
        .map(|s| (0..n).filter(|&y| dst_sig[y] == *s).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Vec::new();
    }

    struct Search<'a> {
        n: usize,
        tables: [(&'a OpTable, &'a OpTable); 2],
        candidates: Vec<Vec<Element>>,
        image: Vec<Option<Element>>,
        preimage: Vec<Option<Element>>,
        assigned: Vec<Element>,
        found: Vec<Permutation>,
        first_only: bool,
    }

    impl Search<'_> {
        /// Every product among assigned elements must be respected, and a
        /// forced image must not already belong to another element.
        fn consistent(&self, x: Element) -> bool {
            for &u in &self.assigned {
                for (a, b) in [(x, u), (u, x)] {
                    let (ia, ib) = (self.image[a].unwrap(), self.image[b].unwrap());
                    for (s, d) in self.tables {
                        let p = s.get(a, b);
                        let target = d.get(ia, ib);
                        match self.image[p] {
                            Some(ip) if ip != target => return false,
                            None if self.preimage[target].is_some() => return false,
                            _ => {}
                        }
                    }
                }
            }
            true
        }

        fn run(&mut self, x: Element) -> bool {
            if x == self.n {
                let images = self.image.iter().map(|i| i.unwrap()).collect();
                self.found.push(Permutation(images));
                return self.first_only;
            }
            for k in 0..self.candidates[x].len() {
                let y = self.candidates[x][k];
                if self.preimage[y].is_some() {
                    continue;
                }
                self.image[x] = Some(y);
                self.preimage[y] = Some(x);
                self.assigned.push(x);
                let stop = self.consistent(x) && self.run(x + 1);
                self.assigned.pop();
                self.preimage[y] = None;
                self.image[x] = None;
                if stop {
                    return true;
                }
            }
            false
        }
    }

    let mut search = Search {
        n,
        tables: [(src.left(), dst.left()), (src.right(), dst.right())],
        candidates,
        image: vec![None; n],
        preimage: vec![None; n],
        assigned: Vec::with_capacity(n),
        found: Vec::new(),
        first_only,
    };
    search.run(0);
    search.found
}

/// An isomorphism `src → dst`, if one exists.
pub fn find_isomorphism(src: &DiTable, dst: &DiTable) -> Option<Permutation> {
    isomorphisms(src, dst, true).pop()
}

/// The full automorphism group, as an explicit set of permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutSet {
    n: usize,
    perms: Vec<Permutation>,
}

/// JSON form; `generators` lists the whole group.
#[derive(Serialize)]
struct AutSetRepr<'a> {
    order: usize,
    generators: &'a [Permutation],
}

impl Serialize for AutSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AutSetRepr {
            order: self.order(),
            generators: &self.perms,
        }
        .serialize(s)
    }
}

impl AutSet {
    /// Builds from an arbitrary collection; duplicates are removed.
    pub fn from_perms(n: usize, perms: impl IntoIterator<Item = Permutation>) -> Self {
        let set: BTreeSet<Permutation> = perms.into_iter().collect();
        AutSet {
            n,
            perms: set.into_iter().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Sorted lexicographically by image sequence.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.perms.binary_search(p).is_ok()
    }

    /// Identity, closure under composition and inverses, checked explicitly.
    pub fn is_group(&self) -> bool {
        self.contains(&Permutation::identity(self.n))
            && self.perms.iter().all(|p| self.contains(&p.inverse()))
            && self
                .perms
                .iter()
                .all(|p| self.perms.iter().all(|q| self.contains(&p.compose(q))))
    }
}

/// All automorphisms of a dimonoid.
pub fn automorphisms(d: &DiTable) -> Result<AutSet> {
    d.require_dimonoid()?;
    Ok(AutSet {
        n: d.size(),
        perms: isomorphisms(d, d, false),
    })
}

/// Automorphisms of a single semigroup, via its trivial dimonoid.
pub fn table_automorphisms(t: &OpTable) -> Result<AutSet> {
    if let Some(w) = t.associativity_witness() {
        return Err(Error::NotAssociative(w));
    }
    automorphisms(&DiTable::trivial(t.clone()))
}

/// `S_{B1} × S_{B2} × ...` acting on the carrier: `fixed` points stay put,
/// each block is permuted freely within itself.
///
/// Text form: `fixed=0,1;blocks=2,3,4|5,6`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricProductSpec {
    pub fixed: Vec<Element>,
    pub blocks: Vec<Vec<Element>>,
}

impl SymmetricProductSpec {
    pub fn new(fixed: Vec<Element>, blocks: Vec<Vec<Element>>) -> Self {
        SymmetricProductSpec { fixed, blocks }
    }

    /// Checks that the fixed points and the blocks partition `0..n`.
    /// Empty blocks are allowed and ignored.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for &x in self.fixed.iter().chain(self.blocks.iter().flatten()) {
            if x >= n {
                return Err(Error::BadPartition(format!("{x} is outside 0..{n}")));
            }
            if seen[x] {
                return Err(Error::BadPartition(format!("{x} appears twice")));
            }
            seen[x] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::BadPartition(format!("{missing} is not covered")));
        }
        Ok(())
    }

    /// `∏ |block|!`.
    pub fn group_order(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| (1..=b.len()).product::<usize>())
            .product()
    }

    pub fn admits(&self, p: &Permutation) -> bool {
        self.fixed.iter().all(|&x| p.apply(x) == x)
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&x| b.contains(&p.apply(x))))
    }
}

fn join(xs: &[Element]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for SymmetricProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|b| join(b)).collect();
        write!(f, "fixed={};blocks={}", join(&self.fixed), blocks.join("|"))
    }
}

impl FromStr for SymmetricProductSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let list = |part: &str| -> Result<Vec<Element>> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| parse_err("expected element indices")))
                .collect()
        };
        let mut spec = SymmetricProductSpec::default();
        for section in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = section
                .split_once('=')
                .ok_or_else(|| parse_err("expected key=value"))?;
            match key.trim() {
                "fixed" => spec.fixed = list(value)?,
                "blocks" => spec.blocks = value.split('|').map(list).collect::<Result<Vec<_>>>()?,
                _ => return Err(parse_err("keys are `fixed` and `blocks`")),
            }
        }
        Ok(spec)
    }
}

/// True iff `auts` is exactly the group described by `spec`.
///
/// Since `auts` has no duplicates, containment in the spec's group plus an
/// equal order gives set equality.
pub fn matches_symmetric_product(auts: &AutSet, spec: &SymmetricProductSpec) -> Result<bool> {
    spec.validate(auts.size())?;
    Ok(auts.order() == spec.group_order() && auts.perms().iter().all(|p| spec.admits(p)))
}

/// The lexicographically least relabeling of `d` (comparing the `⊣`
/// entries, then the `⊢` entries) over all permutations of the carrier.
pub fn canonical_form(d: &DiTable) -> Result<DiTable> {
    canonical_form_bounded(d, DEFAULT_CANONICAL_BOUND)
}

pub fn canonical_form_bounded(d: &DiTable, bound: usize) -> Result<DiTable> {
    let n = d.size();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let (left, right) = (d.left().entries(), d.right().entries());
    let mut best: Option<Vec<Element>> = None;
    let mut best_perm: Vec<Element> = (0..n).collect();
    let mut key = vec![0; 2 * n * n];
    for_each_permutation(n, |p| {
        for x in 0..n {
            for y in 0..n {
                let at = p[x] * n + p[y];
                key[at] = p[left[x * n + y]];
                key[n * n + at] = p[right[x * n + y]];
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key.clone());
            best_perm.copy_from_slice(p);
        }
    });
    Ok(d.relabel(&best_perm))
}

/// Cheap isomorphism invariants used to reject non-isomorphic pairs early.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub n: usize,
    pub flags: DiFlags,
    pub halo_size: usize,
    pub roles: Vec<Signature>,
    /// Sorted preimage counts of the diagonal maps `x ↦ x⊣x`, `x ↦ x⊢x`.
    pub diagonal: [Vec<usize>; 2],
}

pub fn fingerprint(d: &DiTable) -> Result<Fingerprint> {
    let flags = d.flags()?;
    let n = d.size();
    let mut roles = signatures(d);
    roles.sort();
    let diagonal = [d.left(), d.right()].map(|t| {
        let mut counts = vec![0; n];
        for x in 0..n {
            counts[t.get(x, x)] += 1;
        }
        counts.sort_unstable();
        counts
    });
    Ok(Fingerprint {
        n,
        flags,
        halo_size: d.bar_units().len(),
        roles,
        diagonal,
    })
}

/// Isomorphism test: fingerprint rejection, then canonical forms (or a
/// direct search beyond the canonical-form bound). Different sizes give
/// `false`.
pub fn are_isomorphic(d1: &DiTable, d2: &DiTable) -> Result<bool> {
    d1.require_dimonoid()?;
    d2.require_dimonoid()?;
    if d1.size() != d2.size() || fingerprint(d1)? != fingerprint(d2)? {
        return Ok(false);
    }
    if d1.size() <= DEFAULT_CANONICAL_BOUND {
        Ok(canonical_form(d1)? == canonical_form(d2)?)
    } else {
        Ok(find_isomorphism(d1, d2).is_some())
    }
}
