//! Exhaustive verification of the structural results on dimonoids:
//! family soundness, right commutativity, the nine constructions, duality,
//! the right-commutativity criterion and the rectangular criteria.
//!
//! Failures are data: every record carries the first counterexample found.

use serde::Serialize;

use crate::catalog::{enumerate_dimonoids, enumerate_semigroups, DIMONOID_BOUND};
use crate::constructions::{Construction, ConstructionKind};
use crate::ditable::DiTable;
use crate::error::{Error, Result};
use crate::families::{
    all_params, left_zero_sg, lo_arrow, lo_tilde0, lob, null_sg, o_with_fixed, right_zero_sg,
    subsets,
};
use crate::morphisms::{
    are_isomorphic, automorphisms, matches_symmetric_product, table_automorphisms,
};
use crate::table::{Element, OpTable};

/// Largest base-set size accepted by [`run_theorem_suite`].
pub const SUITE_BOUND: usize = 6;

/// Largest order for the family isomorphism-criterion sweep.
const ISO_CRITERIA_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRecord {
    pub id: String,
    pub sweep: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub n_max: usize,
    pub all_passed: bool,
    pub records: Vec<TheoremRecord>,
    /// Observations outside any claim's hypothesis, recorded but not judged.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn record(&self, id: &str) -> Option<&TheoremRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremRecord> {
        self.records.iter().filter(|r| !r.passed)
    }
}

/// Accumulates cases for one record; keeps the first failure.
struct Check {
    id: String,
    sweep: String,
    cases: usize,
    counterexample: Option<String>,
}

impl Check {
    fn new(id: impl Into<String>, sweep: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            sweep: sweep.into(),
            cases: 0,
            counterexample: None,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> TheoremRecord {
        TheoremRecord {
            passed: self.counterexample.is_none(),
            id: self.id,
            sweep: self.sweep,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

/// Which aspect of a construction instance failed, with a reproducible
/// description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFailure {
    pub aspect: &'static str,
    pub detail: String,
}

/// Checks one built instance against its claimed axioms, halo,
/// automorphism group and flags. Takes the tables separately from the
/// parameters so that corrupted tables can be fed in.
pub fn check_instance(c: &Construction, d: &DiTable) -> Vec<InstanceFailure> {
    let mut failures = Vec::new();
    if !d.is_dimonoid() {
        let detail = d
            .report()
            .failures()
            .into_iter()
            .map(|(axiom, w)| format!("{axiom} fails at {w:?}"))
            .collect::<Vec<_>>()
            .join("; ");
        failures.push(InstanceFailure {
            aspect: "axioms",
            detail: format!("{c}: {detail}"),
        });
        return failures;
    }
    if let Some(expected) = c.expected_halo() {
        let halo = d.bar_units();
        if halo != expected {
            failures.push(InstanceFailure {
                aspect: "halo",
                detail: format!("{c}: halo {halo:?}, expected {expected:?}"),
            });
        }
    }
    if let Some(spec) = c.expected_aut() {
        let ok = automorphisms(d)
            .and_then(|auts| matches_symmetric_product(&auts, &spec).map(|m| (m, auts.order())));
        match ok {
            Ok((true, _)) => {}
            Ok((false, order)) => failures.push(InstanceFailure {
                aspect: "aut",
                detail: format!("{c}: |Aut| = {order}, expected {spec}"),
            }),
            Err(e) => failures.push(InstanceFailure {
                aspect: "aut",
                detail: format!("{c}: {e}"),
            }),
        }
    }
    let flags = d.flags().expect("checked dimonoid");
    let [abelian, commutative, rectangular] = c.expected_flags();
    for (name, expected, actual) in [
        ("abelian", abelian, flags.abelian),
        ("commutative", commutative, flags.commutative),
        ("rectangular", rectangular, flags.rectangular),
    ] {
        if expected.is_some_and(|e| e != actual) {
            failures.push(InstanceFailure {
                aspect: "flags",
                detail: format!("{c}: {name} = {actual}"),
            });
        }
    }
    failures
}

fn family_checks(n_max: usize, out: &mut Vec<TheoremRecord>) {
    let mut assoc = Check::new(
        "families.associative",
        format!("every family and parameter choice, n = 1..={n_max}"),
    );
    for n in 1..=n_max {
        for p in all_params(n) {
            match p.build() {
                Ok(t) => assoc.case(t.is_associative().is_ok(), || {
                    format!("{p:?}: {:?}", t.is_associative())
                }),
                Err(e) => assoc.case(false, || format!("{p:?}: {e}")),
            }
        }
    }
    out.push(assoc.finish());

    let mut rc = Check::new(
        "families.right_commutative",
        format!("LO_arrow, LO_tilde0, LOB, LO^+0 right commutative and RO_n not, n = 1..={n_max}"),
    );
    let mut expect_rc = |t: OpTable, expected: bool, what: String| {
        let w = t.right_commutativity_witness();
        rc.case(w.is_none() == expected, || format!("{what}: witness {w:?}"));
    };
    for n in 1..=n_max {
        for s in subsets(n).filter(|s| !s.is_empty()) {
            for &a in &s {
                expect_rc(
                    lo_arrow(n, &s, a).unwrap(),
                    true,
                    format!("LO_arrow({n},{s:?},{a})"),
                );
            }
        }
        for s in subsets(n) {
            expect_rc(
                lo_tilde0(n, &s).unwrap(),
                true,
                format!("LO_tilde0({n},{s:?})"),
            );
        }
        for a in 0..n {
            for c in (0..n).filter(|&c| c != a) {
                expect_rc(lob(n, a, c).unwrap(), true, format!("LOB({n},{a},{c})"));
            }
        }
        expect_rc(
            left_zero_sg(n).unwrap().adjoin_zero(),
            true,
            format!("LO_{n}^+0"),
        );
        if n >= 2 {
            expect_rc(right_zero_sg(n).unwrap(), false, format!("RO_{n}"));
        }
    }
    out.push(rc.finish());

    let iso_max = n_max.min(ISO_CRITERIA_BOUND);
    let mut iso = Check::new(
        "families.iso_criteria",
        format!(
            "O^A, LO~0_(A<-S), LO_(A<-S) iso iff |A| equal; all LOB isomorphic; n = 1..={iso_max}"
        ),
    );
    for n in 1..=iso_max {
        let mut members: Vec<(&str, usize, OpTable)> = Vec::new();
        for s in subsets(n) {
            if !s.contains(&0) {
                members.push(("O_A", s.len(), o_with_fixed(n, 0, &s).unwrap()));
            }
            members.push(("LO_tilde0", s.len(), lo_tilde0(n, &s).unwrap()));
            for &a in &s {
                members.push(("LO_arrow", s.len(), lo_arrow(n, &s, a).unwrap()));
            }
        }
        for a in 0..n {
            for c in (0..n).filter(|&c| c != a) {
                members.push(("LOB", 0, lob(n, a, c).unwrap()));
            }
        }
        for (i, (f1, k1, t1)) in members.iter().enumerate() {
            for (f2, k2, t2) in &members[i + 1..] {
                if f1 != f2 {
                    continue;
                }
                let d1 = DiTable::trivial(t1.clone());
                let d2 = DiTable::trivial(t2.clone());
                let iso_result = are_isomorphic(&d1, &d2).unwrap_or(false);
                iso.case(iso_result == (k1 == k2), || {
                    format!("{f1} on n={n}: |A|={k1} vs |A|={k2}, isomorphic = {iso_result}")
                });
            }
        }
    }
    out.push(iso.finish());
}

fn construction_checks(n_max: usize, out: &mut Vec<TheoremRecord>, notes: &mut Vec<String>) {
    for kind in ConstructionKind::ALL {
        let sweep = format!("all parameters, |D| = 1..={n_max}");
        let mut checks: Vec<Check> = ["axioms", "halo", "aut", "flags"]
            .iter()
            .map(|aspect| Check::new(format!("{}.{aspect}", kind.name()), sweep.clone()))
            .collect();
        for d in 1..=n_max {
            for c in kind.instances(d) {
                let built = match c.build() {
                    Ok(b) => b,
                    Err(e) => {
                        checks[0].case(false, || format!("{c}: {e}"));
                        continue;
                    }
                };
                let failures = check_instance(&c, &built);
                for check in &mut checks {
                    let aspect = check.id.rsplit('.').next().unwrap().to_owned();
                    let applicable = match aspect.as_str() {
                        "halo" => c.expected_halo().is_some(),
                        "aut" => c.expected_aut().is_some(),
                        _ => true,
                    };
                    if !applicable {
                        continue;
                    }
                    let failure = failures.iter().find(|f| f.aspect == aspect);
                    check.case(failure.is_none(), || failure.unwrap().detail.clone());
                }
                if kind == ConstructionKind::ArrowNull && d <= 2 && built.is_dimonoid() {
                    notes.push(format!("{c}: halo = {:?}", built.bar_units()));
                }
            }
        }
        out.extend(checks.into_iter().map(Check::finish));
    }
}

fn remark_check(n_max: usize) -> TheoremRecord {
    let mut check = Check::new(
        "duality.naive_flip_fails",
        format!("naive flip of LO_n x RO_n, n = 2..={n_max}"),
    );
    for n in 2..=n_max {
        let d = DiTable::pair(left_zero_sg(n).unwrap(), right_zero_sg(n).unwrap()).unwrap();
        let f = d.naive_flip();
        // flipped: x ⊣' y = y, x ⊢' y = x, so (x⊣'y)⊣'z = z and x⊣'(y⊢'z) = y
        let ok = f.report().d1.witness().is_some_and(|[x, y, z]| {
            let lhs = f.left().get(f.left().get(x, y), z);
            let rhs = f.left().get(x, f.right().get(y, z));
            lhs == z && rhs == y && lhs != rhs
        });
        check.case(ok, || format!("n={n}: d1 = {:?}", f.report().d1));
    }
    check.finish()
}

/// Checks over every labeled dimonoid of order `1..=max`.
fn duality_checks(max: usize, out: &mut Vec<TheoremRecord>) -> Result<()> {
    let sweep = format!("all labeled dimonoids of order 1..={max}");
    let mut invariance = Check::new("duality.aut_halo_invariance", &sweep);
    let mut equivalence = Check::new("duality.abelian_self_dual_equivalence", &sweep);
    let mut commutative = Check::new("duality.commutativity_preserved", &sweep);
    let mut pairing = Check::new("duality.nonabelian_pairs", &sweep);
    let mut nontrivial = Check::new("duality.commutative_nontrivial_nonabelian", &sweep);
    let mut abelian_aut = Check::new("abelian.aut_of_either_table", &sweep);
    let mut abelian_halo = Check::new("abelian.halo_is_identities", &sweep);
    let mut halo_closed = Check::new("halo.subdimonoid", &sweep);
    let mut plus_zero = Check::new("zero_adjunction.preserves_halo_aut", &sweep);

    for n in 1..=max {
        for d in enumerate_dimonoids(n)? {
            let dual = d.dual();
            let flags = d.flags()?;
            let dual_flags = dual.flags()?;
            let auts = automorphisms(&d)?;
            let halo = d.halo()?;

            invariance.case(
                dual.is_dimonoid() && automorphisms(&dual)? == auts && dual.halo()? == halo,
                || format!("{d:?}"),
            );

            let dual_pair = d.right() == &d.left().dual();
            equivalence.case(
                flags.abelian == flags.self_dual && flags.abelian == dual_pair,
                || {
                    format!(
                        "{d:?}: abelian={} self_dual={} dual_pair={dual_pair}",
                        flags.abelian, flags.self_dual
                    )
                },
            );

            commutative.case(flags.commutative == dual_flags.commutative, || {
                format!("{d:?}")
            });

            if !flags.abelian {
                pairing.case(dual != d && dual.dual() == d, || format!("{d:?}"));
            }
            if flags.commutative && !flags.trivial {
                nontrivial.case(!flags.abelian, || format!("{d:?}"));
            }
            if flags.abelian {
                let by_left = table_automorphisms(d.left())?;
                let by_right = table_automorphisms(d.right())?;
                abelian_aut.case(by_left == auts && by_right == auts, || format!("{d:?}"));
                if !halo.is_empty() {
                    let ok = halo == d.left().element_roles().right_identities
                        && halo == d.right().element_roles().left_identities;
                    abelian_halo.case(ok, || format!("{d:?}: halo {halo:?}"));
                }
            }
            if !halo.is_empty() {
                halo_closed.case(d.is_subdimonoid(&halo)?, || format!("{d:?}: halo {halo:?}"));
            }
            let plus = d.adjoin_zero();
            plus_zero.case(
                plus.is_dimonoid()
                    && plus.halo()? == halo
                    && automorphisms(&plus)?.order() == auts.order(),
                || format!("{d:?}"),
            );
        }
    }
    out.extend(
        [
            invariance,
            equivalence,
            commutative,
            pairing,
            nontrivial,
            abelian_aut,
            abelian_halo,
            halo_closed,
            plus_zero,
        ]
        .into_iter()
        .map(Check::finish),
    );
    Ok(())
}

/// The right-commutativity criterion and the two rectangular criteria, over
/// every labeled semigroup of order `1..=max`.
fn semigroup_criteria(max: usize, out: &mut Vec<TheoremRecord>) -> Result<()> {
    let sweep = format!("all labeled semigroups of order 1..={max}");
    let mut rcommut = Check::new("lemma.right_commutative_iff_dual_pair", &sweep);
    let mut lrec = Check::new("prop.left_zero_pair_iff_rectangular", &sweep);
    let mut lodim = Check::new("prop.null_pair_criterion", format!("{sweep}, every zero"));
    for n in 1..=max {
        let lo = left_zero_sg(n)?;
        for t in enumerate_semigroups(n)? {
            let (ok, _) = right_commutative_criterion(&t);
            rcommut.case(ok, || format!("{t:?}"));

            let pair = DiTable::pair(lo.clone(), t.clone())?;
            lrec.case(pair.is_dimonoid() == t.is_rectangular(), || {
                format!("{t:?}")
            });

            for z in 0..n {
                let pair = DiTable::pair(t.clone(), null_sg(n, z)?)?;
                let predicted = null_pair_predicate(&t, z);
                lodim.case(pair.is_dimonoid() == predicted, || {
                    format!("{t:?}, zero {z}")
                });
            }
        }
    }
    out.extend([rcommut, lrec, lodim].into_iter().map(Check::finish));
    Ok(())
}

/// Whether `(t, tᵈ)` passing the axioms agrees with `t` being right
/// commutative; also returns that dimonoid status.
pub fn right_commutative_criterion(t: &OpTable) -> (bool, bool) {
    let is_dimonoid = DiTable::pair(t.clone(), t.dual())
        .map(|d| d.is_dimonoid())
        .unwrap_or(false);
    (is_dimonoid == t.is_right_commutative(), is_dimonoid)
}

/// `z` is a left zero of `t` and `x∗y∗w = x∗z` for all `x, y, w`.
pub fn null_pair_predicate(t: &OpTable, z: Element) -> bool {
    let n = t.size();
    t.is_left_zero(z)
        && (0..n).all(|x| (0..n).all(|y| (0..n).all(|w| t.get(t.get(x, y), w) == t.get(x, z))))
}

/// Runs every check for base sets up to `n_max`; semigroup- and
/// dimonoid-wide sweeps are capped at order 3.
pub fn run_theorem_suite(n_max: usize) -> Result<SuiteReport> {
    if n_max > SUITE_BOUND {
        return Err(Error::BoundExceeded {
            n: n_max,
            bound: SUITE_BOUND,
        });
    }
    if n_max == 0 {
        return Err(Error::EmptyCarrier);
    }
    let mut records = Vec::new();
    let mut notes = Vec::new();
    family_checks(n_max, &mut records);
    construction_checks(n_max, &mut records, &mut notes);
    records.push(remark_check(n_max));
    let exhaustive = n_max.min(DIMONOID_BOUND);
    duality_checks(exhaustive, &mut records)?;
    semigroup_criteria(exhaustive, &mut records)?;
    Ok(SuiteReport {
        n_max,
        all_passed: records.iter().all(|r| r.passed),
        records,
        notes,
    })
}
