//! Constructors for the named semigroup families.
//!
//! Right-hand variants (`RO`, `ROB`, `RO_arrow`, `RO_tilde0`) are always the
//! dual of the corresponding left-hand table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{Element, OpTable};

fn check_index(index: Element, n: usize) -> Result<()> {
    if index < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, n })
    }
}

fn membership(n: usize, subset: &[Element]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &x in subset {
        check_index(x, n)?;
        mask[x] = true;
    }
    Ok(mask)
}

/// Null semigroup `O_n`: every product is `zero`.
pub fn null_sg(n: usize, zero: Element) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    check_index(zero, n)?;
    Ok(OpTable::from_fn(n, |_, _| zero))
}

/// `O^A`: `x ∗ x = x` for `x ∈ A`, every other product is `zero`.
pub fn o_with_fixed(n: usize, zero: Element, fixed: &[Element]) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    check_index(zero, n)?;
    let mask = membership(n, fixed)?;
    if mask[zero] {
        return Err(Error::ZeroInSubset(zero));
    }
    Ok(OpTable::from_fn(n, |x, y| {
        if x == y && mask[x] {
            x
        } else {
            zero
        }
    }))
}

pub fn left_zero_sg(n: usize) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    Ok(OpTable::from_fn(n, |x, _| x))
}

pub fn right_zero_sg(n: usize) -> Result<OpTable> {
    left_zero_sg(n).map(|t| t.dual())
}

/// `LO^{~0}_{A←S}` on `S = 0..n` with the zero appended at index `n`:
/// `x ∗ y = x` if `y ∈ A`, otherwise the zero.
pub fn lo_tilde0(n: usize, subset: &[Element]) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let mut mask = membership(n, subset)?;
    mask.push(false);
    Ok(OpTable::from_fn(n + 1, |x, y| if mask[y] { x } else { n }))
}

pub fn ro_tilde0(n: usize, subset: &[Element]) -> Result<OpTable> {
    lo_tilde0(n, subset).map(|t| t.dual())
}

/// `LOB` with distinguished `a ≠ c`:
/// `a ∗ a = a`, `a ∗ y = c` for `y ≠ a`, and `x ∗ y = x` for `x ≠ a`.
pub fn lob(n: usize, a: Element, c: Element) -> Result<OpTable> {
    if a == c {
        return Err(Error::EqualDistinguished(a));
    }
    if n < 2 {
        return Err(Error::CarrierTooSmall { n, min: 2 });
    }
    check_index(a, n)?;
    check_index(c, n)?;
    Ok(OpTable::from_fn(n, |x, y| match (x == a, y == a) {
        (true, true) => a,
        (true, false) => c,
        (false, _) => x,
    }))
}

pub fn rob(n: usize, a: Element, c: Element) -> Result<OpTable> {
    lob(n, a, c).map(|t| t.dual())
}

/// `LO_{A←S}`: elements of `A` are left zeros, everything else multiplies to `a`.
pub fn lo_arrow(n: usize, subset: &[Element], a: Element) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mask = membership(n, subset)?;
    check_index(a, n)?;
    if !mask[a] {
        return Err(Error::DistinguishedNotInSubset(a));
    }
    Ok(OpTable::from_fn(n, |x, _| if mask[x] { x } else { a }))
}

pub fn ro_arrow(n: usize, subset: &[Element], a: Element) -> Result<OpTable> {
    lo_arrow(n, subset, a).map(|t| t.dual())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    O,
    #[serde(rename = "O_A")]
    OA,
    LO,
    RO,
    #[serde(rename = "LO_tilde0")]
    LoTilde0,
    #[serde(rename = "RO_tilde0")]
    RoTilde0,
    LOB,
    ROB,
    #[serde(rename = "LO_arrow")]
    LoArrow,
    #[serde(rename = "RO_arrow")]
    RoArrow,
    #[serde(rename = "plus_zero")]
    PlusZero,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::O,
        Family::OA,
        Family::LO,
        Family::RO,
        Family::LoTilde0,
        Family::RoTilde0,
        Family::LOB,
        Family::ROB,
        Family::LoArrow,
        Family::RoArrow,
        Family::PlusZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::O => "O",
            Family::OA => "O_A",
            Family::LO => "LO",
            Family::RO => "RO",
            Family::LoTilde0 => "LO_tilde0",
            Family::RoTilde0 => "RO_tilde0",
            Family::LOB => "LOB",
            Family::ROB => "ROB",
            Family::LoArrow => "LO_arrow",
            Family::RoArrow => "RO_arrow",
            Family::PlusZero => "plus_zero",
        }
    }

    /// Which of (`A`, `a`, `c`, `zero`) the family takes.
    fn takes(self) -> [bool; 4] {
        match self {
            Family::O => [false, false, false, true],
            Family::OA => [true, false, false, true],
            Family::LO | Family::RO => [false, false, false, false],
            Family::LoTilde0 | Family::RoTilde0 => [true, false, false, false],
            Family::LOB | Family::ROB => [false, true, true, false],
            Family::LoArrow | Family::RoArrow => [true, true, false, false],
            Family::PlusZero => unreachable!("plus_zero takes the parameters of its base"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                input: s.to_owned(),
                reason: "unknown family".into(),
            })
    }
}

/// Everything needed to rebuild a family member.
///
/// JSON form: `{"family": "LOB", "n": 3, "a": 0, "c": 1}`. For `plus_zero`
/// the optional `base` names the family the zero is adjoined to (default
/// `LO`) and the remaining fields are that family's parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Family>,
}

impl FamilyParams {
    pub fn new(family: Family, n: usize) -> Self {
        FamilyParams {
            family,
            n,
            subset: None,
            a: None,
            c: None,
            zero: None,
            base: None,
        }
    }

    pub fn subset(mut self, subset: &[Element]) -> Self {
        self.subset = Some(subset.to_vec());
        self
    }

    pub fn a(mut self, a: Element) -> Self {
        self.a = Some(a);
        self
    }

    pub fn c(mut self, c: Element) -> Self {
        self.c = Some(c);
        self
    }

    pub fn zero(mut self, zero: Element) -> Self {
        self.zero = Some(zero);
        self
    }

    pub fn base(mut self, base: Family) -> Self {
        self.base = Some(base);
        self
    }

    /// Checks that exactly the parameters the family needs are present.
    fn check_shape(&self, family: Family) -> Result<()> {
        let name = family.name();
        let present = [
            self.subset.is_some(),
            self.a.is_some(),
            self.c.is_some(),
            self.zero.is_some(),
        ];
        for ((param, takes), present) in ["A", "a", "c", "zero"]
            .into_iter()
            .zip(family.takes())
            .zip(present)
        {
            match (takes, present) {
                (true, false) => {
                    return Err(Error::MissingParameter {
                        family: name,
                        param,
                    })
                }
                (false, true) => {
                    return Err(Error::UnexpectedParameter {
                        family: name,
                        param,
                    })
                }
                _ => {}
            }
        }
        if self.base.is_some() && family != Family::PlusZero {
            return Err(Error::UnexpectedParameter {
                family: name,
                param: "base",
            });
        }
        Ok(())
    }

    /// Dispatches to the matching constructor.
    pub fn build(&self) -> Result<OpTable> {
        if self.family == Family::PlusZero {
            let base = self.base.unwrap_or(Family::LO);
            if base == Family::PlusZero {
                return Err(Error::InvalidParameters(
                    "plus_zero cannot be its own base".into(),
                ));
            }
            let inner = FamilyParams {
                family: base,
                base: None,
                ..self.clone()
            };
            return inner.build().map(|t| t.adjoin_zero());
        }
        self.check_shape(self.family)?;
        let subset = self.subset.as_deref().unwrap_or_default();
        let (n, a, c, zero) = (
            self.n,
            self.a.unwrap_or_default(),
            self.c.unwrap_or_default(),
            self.zero.unwrap_or_default(),
        );
        match self.family {
            Family::O => null_sg(n, zero),
            Family::OA => o_with_fixed(n, zero, subset),
            Family::LO => left_zero_sg(n),
            Family::RO => right_zero_sg(n),
            Family::LoTilde0 => lo_tilde0(n, subset),
            Family::RoTilde0 => ro_tilde0(n, subset),
            Family::LOB => lob(n, a, c),
            Family::ROB => rob(n, a, c),
            Family::LoArrow => lo_arrow(n, subset, a),
            Family::RoArrow => ro_arrow(n, subset, a),
            Family::PlusZero => unreachable!(),
        }
    }
}

/// Every subset of `0..n`, as sorted index lists, in binary counting order.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<Element>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}

/// Every valid parameter record of every family with carrier parameter `n`.
///
/// `plus_zero` is swept over each base family.
pub fn all_params(n: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for family in Family::ALL {
        if family == Family::PlusZero {
            continue;
        }
        out.extend(params_of(family, n));
    }
    for base in Family::ALL {
        if base == Family::PlusZero {
            continue;
        }
        out.extend(params_of(base, n).into_iter().map(|p| FamilyParams {
            family: Family::PlusZero,
            base: Some(base),
            ..p
        }));
    }
    out
}

fn params_of(family: Family, n: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let base = FamilyParams::new(family, n);
    match family {
        Family::O => out.extend((0..n).map(|z| base.clone().zero(z))),
        Family::OA => {
            for z in 0..n {
                for s in subsets(n).filter(|s| !s.contains(&z)) {
                    out.push(base.clone().zero(z).subset(&s));
                }
            }
        }
        Family::LO | Family::RO => out.push(base),
        Family::LoTilde0 | Family::RoTilde0 => {
            out.extend(subsets(n).map(|s| base.clone().subset(&s)))
        }
        Family::LOB | Family::ROB => {
            for a in 0..n {
                out.extend((0..n).filter(|&c| c != a).map(|c| base.clone().a(a).c(c)));
            }
        }
        Family::LoArrow | Family::RoArrow => {
            for s in subsets(n).filter(|s| !s.is_empty()) {
                out.extend(s.iter().map(|&a| base.clone().subset(&s).a(a)));
            }
        }
        Family::PlusZero => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(t: &OpTable) -> Vec<Vec<usize>> {
        t.rows().map(<[_]>::to_vec).collect()
    }

    #[test]
    fn null_examples() {
        assert_eq!(rows(&null_sg(1, 0).unwrap()), vec![vec![0]]);
        let o3 = null_sg(3, 0).unwrap();
        assert_eq!(o3.entries(), &[0; 9]);
        assert_eq!(o3.element_roles().zero, Some(0));
        assert!(matches!(
            null_sg(2, 2),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        ));
    }

    #[test]
    fn o_with_fixed_examples() {
        let t = o_with_fixed(3, 0, &[1]).unwrap();
        assert_eq!(rows(&t), vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]);
        assert_eq!(o_with_fixed(3, 0, &[]).unwrap(), null_sg(3, 0).unwrap());
        let s = o_with_fixed(2, 0, &[1]).unwrap();
        assert!(s.semigroup_class().semilattice);
        assert!(matches!(
            o_with_fixed(3, 1, &[1, 2]),
            Err(Error::ZeroInSubset(1))
        ));
    }

    #[test]
    fn zero_semigroups() {
        assert_eq!(
            rows(&left_zero_sg(2).unwrap()),
            vec![vec![0, 0], vec![1, 1]]
        );
        assert_eq!(
            rows(&right_zero_sg(2).unwrap()),
            vec![vec![0, 1], vec![0, 1]]
        );
        assert_eq!(left_zero_sg(3).unwrap().dual(), right_zero_sg(3).unwrap());
        assert!(matches!(left_zero_sg(0), Err(Error::EmptyCarrier)));
    }

    #[test]
    fn lo_tilde0_examples() {
        let t = lo_tilde0(2, &[0]).unwrap();
        assert_eq!(rows(&t), vec![vec![0, 2, 2], vec![1, 2, 2], vec![2, 2, 2]]);
        assert_eq!(lo_tilde0(2, &[]).unwrap(), null_sg(3, 2).unwrap());
        assert_eq!(
            lo_tilde0(2, &[0, 1]).unwrap(),
            left_zero_sg(2).unwrap().adjoin_zero()
        );
        assert!(matches!(
            lo_tilde0(2, &[2]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn lob_examples() {
        let t = lob(3, 0, 1).unwrap();
        assert_eq!(rows(&t), vec![vec![0, 1, 1], vec![1, 1, 1], vec![2, 2, 2]]);
        let f = t.semigroup_class();
        assert!(f.band && !f.commutative);
        assert!(matches!(lob(3, 1, 1), Err(Error::EqualDistinguished(1))));
        assert!(matches!(lob(1, 0, 0), Err(Error::EqualDistinguished(0))));
        assert!(matches!(
            lob(1, 0, 1),
            Err(Error::CarrierTooSmall { n: 1, min: 2 })
        ));
        assert!(matches!(lob(3, 0, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn lo_arrow_examples() {
        let t = lo_arrow(3, &[0, 1], 0).unwrap();
        assert_eq!(rows(&t), vec![vec![0, 0, 0], vec![1, 1, 1], vec![0, 0, 0]]);
        assert_eq!(lo_arrow(3, &[0], 0).unwrap(), null_sg(3, 0).unwrap());
        assert_eq!(lo_arrow(2, &[0, 1], 0).unwrap(), left_zero_sg(2).unwrap());
        assert!(matches!(
            lo_arrow(3, &[0, 1], 2),
            Err(Error::DistinguishedNotInSubset(2))
        ));
        assert!(matches!(lo_arrow(3, &[], 0), Err(Error::EmptySubset)));
    }

    #[test]
    fn build_dispatch() {
        let rob = FamilyParams::new(Family::ROB, 3).a(0).c(1).build().unwrap();
        assert_eq!(rob, lob(3, 0, 1).unwrap().dual());

        let plus = FamilyParams::new(Family::PlusZero, 2).build().unwrap();
        assert_eq!(plus, left_zero_sg(2).unwrap().adjoin_zero());

        let err = FamilyParams::new(Family::LOB, 1).a(0).c(0).build();
        assert!(matches!(err, Err(Error::EqualDistinguished(0))));

        assert!(matches!(
            FamilyParams::new(Family::LOB, 3).a(0).build(),
            Err(Error::MissingParameter { param: "c", .. })
        ));
        assert!(matches!(
            FamilyParams::new(Family::LO, 3).a(0).build(),
            Err(Error::UnexpectedParameter { param: "a", .. })
        ));
        assert!(matches!(
            FamilyParams::new(Family::PlusZero, 3)
                .base(Family::PlusZero)
                .build(),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn params_json() {
        let p: FamilyParams =
            serde_json::from_str(r#"{"family":"LO_arrow","n":3,"A":[0,1],"a":0}"#).unwrap();
        assert_eq!(
            p,
            FamilyParams::new(Family::LoArrow, 3).subset(&[0, 1]).a(0)
        );
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"family":"LO_arrow","n":3,"A":[0,1],"a":0}"#
        );
        assert_eq!("lob".parse::<Family>().unwrap(), Family::LOB);
        assert!("XYZ".parse::<Family>().is_err());
    }

    #[test]
    fn sweep_builds_everything() {
        for n in 1..=4 {
            for p in all_params(n) {
                let t = p.build().unwrap_or_else(|e| panic!("{p:?}: {e}"));
                assert!(t.is_associative().is_ok(), "{p:?}");
            }
        }
    }
}
