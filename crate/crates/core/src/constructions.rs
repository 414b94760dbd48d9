//! The nine parametrised dimonoid constructions, each with its claimed
//! halo, automorphism group and flag properties.
//!
//! `d` is the size of the base set `D = 0..d`. Constructions that adjoin a
//! zero place it at index `d`, so their carrier has `d + 1` elements.

use std::fmt;

use serde::Serialize;

use crate::ditable::{from_right_commutative, DiTable};
use crate::error::Result;
use crate::families::{
    left_zero_sg, lo_arrow, lo_tilde0, lob, null_sg, o_with_fixed, right_zero_sg, ro_arrow, subsets,
};
use crate::morphisms::SymmetricProductSpec;
use crate::table::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConstructionKind {
    /// `LO_{A←D} ⋈ RO_{A←D}`, `A` a nonempty proper subset, `a ∈ A`.
    ArrowPair,
    /// `LO^{~0}_{A←D} ⋈ RO^{~0}_{A←D}`, any `A ⊆ D`.
    TildePair,
    /// `LOB_D ⋈ ROB_D`, `|D| ≥ 2`.
    LobRob,
    /// `(LO_D ⋈ RO_D)^{+0}`.
    LoRoPlusZero,
    /// `LOB_D ⋈ O_D^{{a}}` (zero `c`), `|D| > 2`.
    LobNull,
    /// `LO^{~0}_{{a}←D} ⋈ O^{{a}}_{D⁰}`, `|D| > 1`.
    TildeNull,
    /// `LO_D ⋈ LO_{A←D}`, `A` nonempty.
    LoArrow,
    /// `LO_D ⋈ RO_{A←D}`, `A` nonempty.
    LoRoArrow,
    /// `LO_{A←D} ⋈ O_D` with zero `a ∈ A`.
    ArrowNull,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 9] = [
        ConstructionKind::ArrowPair,
        ConstructionKind::TildePair,
        ConstructionKind::LobRob,
        ConstructionKind::LoRoPlusZero,
        ConstructionKind::LobNull,
        ConstructionKind::TildeNull,
        ConstructionKind::LoArrow,
        ConstructionKind::LoRoArrow,
        ConstructionKind::ArrowNull,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::ArrowPair => "LO_{A<-D} x RO_{A<-D}",
            ConstructionKind::TildePair => "LO~0_{A<-D} x RO~0_{A<-D}",
            ConstructionKind::LobRob => "LOB_D x ROB_D",
            ConstructionKind::LoRoPlusZero => "(LO_D x RO_D)^+0",
            ConstructionKind::LobNull => "LOB_D x O_D^{a}",
            ConstructionKind::TildeNull => "LO~0_{{a}<-D} x O^{a}_{D0}",
            ConstructionKind::LoArrow => "LO_D x LO_{A<-D}",
            ConstructionKind::LoRoArrow => "LO_D x RO_{A<-D}",
            ConstructionKind::ArrowNull => "LO_{A<-D} x O_D",
        }
    }

    /// Every valid parameter choice for a base set of size `d`.
    pub fn instances(self, d: usize) -> Vec<Construction> {
        let mk = |subset: Vec<Element>, a: Option<Element>, c: Option<Element>| Construction {
            kind: self,
            d,
            subset,
            a,
            c,
        };
        let mut out = Vec::new();
        if d == 0 {
            return out;
        }
        match self {
            ConstructionKind::ArrowPair => {
                for s in subsets(d).filter(|s| !s.is_empty() && s.len() < d) {
                    out.extend(s.iter().map(|&a| mk(s.clone(), Some(a), None)));
                }
            }
            ConstructionKind::TildePair => out.extend(subsets(d).map(|s| mk(s, None, None))),
            ConstructionKind::LobRob | ConstructionKind::LobNull => {
                let min = if self == ConstructionKind::LobRob {
                    2
                } else {
                    3
                };
                if d >= min {
                    for a in 0..d {
                        for c in (0..d).filter(|&c| c != a) {
                            out.push(mk(Vec::new(), Some(a), Some(c)));
                        }
                    }
                }
            }
            ConstructionKind::LoRoPlusZero => out.push(mk(Vec::new(), None, None)),
            ConstructionKind::TildeNull => {
                if d >= 2 {
                    out.extend((0..d).map(|a| mk(Vec::new(), Some(a), None)));
                }
            }
            ConstructionKind::LoArrow
            | ConstructionKind::LoRoArrow
            | ConstructionKind::ArrowNull => {
                for s in subsets(d).filter(|s| !s.is_empty()) {
                    out.extend(s.iter().map(|&a| mk(s.clone(), Some(a), None)));
                }
            }
        }
        out
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One instance of a construction. For `ArrowNull` the point `a` is the
/// zero of the null operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub kind: ConstructionKind,
    pub d: usize,
    #[serde(rename = "A")]
    pub subset: Vec<Element>,
    pub a: Option<Element>,
    pub c: Option<Element>,
}

impl Construction {
    fn a(&self) -> Element {
        self.a.expect("construction requires `a`")
    }

    fn c(&self) -> Element {
        self.c.expect("construction requires `c`")
    }

    fn complement(&self) -> Vec<Element> {
        (0..self.d).filter(|x| !self.subset.contains(x)).collect()
    }

    /// `d`, or `d + 1` when a zero is adjoined.
    pub fn carrier_size(&self) -> usize {
        match self.kind {
            ConstructionKind::TildePair
            | ConstructionKind::LoRoPlusZero
            | ConstructionKind::TildeNull => self.d + 1,
            _ => self.d,
        }
    }

    pub fn build(&self) -> Result<DiTable> {
        let d = self.d;
        match self.kind {
            ConstructionKind::ArrowPair => {
                from_right_commutative(&lo_arrow(d, &self.subset, self.a())?, false)
            }
            ConstructionKind::TildePair => {
                from_right_commutative(&lo_tilde0(d, &self.subset)?, false)
            }
            ConstructionKind::LobRob => from_right_commutative(&lob(d, self.a(), self.c())?, false),
            ConstructionKind::LoRoPlusZero => {
                Ok(DiTable::pair(left_zero_sg(d)?, right_zero_sg(d)?)?.adjoin_zero())
            }
            ConstructionKind::LobNull => DiTable::pair(
                lob(d, self.a(), self.c())?,
                o_with_fixed(d, self.c(), &[self.a()])?,
            ),
            ConstructionKind::TildeNull => DiTable::pair(
                lo_tilde0(d, &[self.a()])?,
                o_with_fixed(d + 1, d, &[self.a()])?,
            ),
            ConstructionKind::LoArrow => {
                DiTable::pair(left_zero_sg(d)?, lo_arrow(d, &self.subset, self.a())?)
            }
            ConstructionKind::LoRoArrow => {
                DiTable::pair(left_zero_sg(d)?, ro_arrow(d, &self.subset, self.a())?)
            }
            ConstructionKind::ArrowNull => {
                DiTable::pair(lo_arrow(d, &self.subset, self.a())?, null_sg(d, self.a())?)
            }
        }
    }

    /// The claimed halo. `None` where no claim is made: the rectangular
    /// constructions with `A = D`, and `LO_{A←D} ⋈ O_D` with `|D| ≤ 2`.
    pub fn expected_halo(&self) -> Option<Vec<Element>> {
        let proper = self.subset.len() < self.d;
        match self.kind {
            ConstructionKind::ArrowPair => Some(Vec::new()),
            ConstructionKind::TildePair => Some(self.subset.clone()),
            ConstructionKind::LobRob => Some(vec![self.a()]),
            ConstructionKind::LoRoPlusZero => Some((0..self.d).collect()),
            ConstructionKind::LobNull | ConstructionKind::TildeNull => Some(Vec::new()),
            ConstructionKind::LoArrow | ConstructionKind::LoRoArrow => proper.then(Vec::new),
            ConstructionKind::ArrowNull => (self.d > 2).then(Vec::new),
        }
    }

    /// The claimed automorphism group. `None` where no claim is made: the
    /// `LO_D ⋈ LO_{A←D}` and `LO_D ⋈ RO_{A←D}` cases with `A = D`.
    pub fn expected_aut(&self) -> Option<SymmetricProductSpec> {
        let d = self.d;
        let without =
            |fixed: &[Element]| -> Vec<Element> { (0..d).filter(|x| !fixed.contains(x)).collect() };
        let spec = match self.kind {
            ConstructionKind::ArrowPair
            | ConstructionKind::LoArrow
            | ConstructionKind::LoRoArrow
            | ConstructionKind::ArrowNull => {
                if matches!(
                    self.kind,
                    ConstructionKind::LoArrow | ConstructionKind::LoRoArrow
                ) && self.subset.len() == d
                {
                    return None;
                }
                let a = self.a();
                let rest_of_a = self.subset.iter().copied().filter(|&x| x != a).collect();
                SymmetricProductSpec::new(vec![a], vec![rest_of_a, self.complement()])
            }
            ConstructionKind::TildePair => {
                SymmetricProductSpec::new(vec![d], vec![self.subset.clone(), self.complement()])
            }
            ConstructionKind::LobRob | ConstructionKind::LobNull => {
                let fixed = vec![self.a(), self.c()];
                let block = without(&fixed);
                SymmetricProductSpec::new(fixed, vec![block])
            }
            ConstructionKind::LoRoPlusZero => {
                SymmetricProductSpec::new(vec![d], vec![without(&[])])
            }
            ConstructionKind::TildeNull => {
                SymmetricProductSpec::new(vec![self.a(), d], vec![without(&[self.a()])])
            }
        };
        Some(spec)
    }

    /// Claimed `(abelian, commutative, rectangular)` values, each `None`
    /// when the parameters fall outside the claim's hypothesis.
    pub fn expected_flags(&self) -> [Option<bool>; 3] {
        let d = self.d;
        let k = self.subset.len();
        match self.kind {
            ConstructionKind::ArrowPair => [Some(true), (k > 1).then_some(false), None],
            ConstructionKind::TildePair => [Some(true), (k > 0 && d > 1).then_some(false), None],
            ConstructionKind::LobRob => [Some(true), (d >= 3).then_some(false), None],
            ConstructionKind::LoRoPlusZero => [Some(true), (d > 1).then_some(false), None],
            ConstructionKind::LobNull | ConstructionKind::TildeNull => {
                [Some(false), Some(false), None]
            }
            ConstructionKind::LoArrow => {
                let big = (d > 1).then_some(false);
                [big, big, Some(true)]
            }
            ConstructionKind::LoRoArrow => {
                let proper = (k < d).then_some(false);
                [proper, proper, Some(true)]
            }
            ConstructionKind::ArrowNull => {
                let big = (k > 1).then_some(false);
                [big, big, Some(true)]
            }
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with |D|={}", self.kind, self.d)?;
        if !self.subset.is_empty() {
            write!(f, ", A={:?}", self.subset)?;
        }
        if let Some(a) = self.a {
            write!(f, ", a={a}")?;
        }
        if let Some(c) = self.c {
            write!(f, ", c={c}")?;
        }
        Ok(())
    }
}
