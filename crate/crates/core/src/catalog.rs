//! Exhaustive enumeration and classification of small semigroups and
//! dimonoids.
//!
//! Output never depends on the number of worker threads: parallel stages
//! are order-preserving and classes are keyed by canonical form.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ditable::{DiFlags, DiTable};
use crate::error::{Error, Result};
use crate::morphisms::{automorphisms, canonical_form};
use crate::table::{Element, OpTable};

/// Largest order for which labeled semigroups are enumerated.
pub const SEMIGROUP_BOUND: usize = 4;

/// Largest order for which labeled dimonoids are enumerated.
pub const DIMONOID_BOUND: usize = 3;

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "DIMONOID_WORKERS";

/// Worker count from `DIMONOID_WORKERS`, defaulting to the available cores.
pub fn workers_from_env() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs `f` on a dedicated pool with `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("failed to build worker pool")
        .install(f)
}

const UNSET: usize = usize::MAX;

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

/// Associativity on every triple whose four cells are already filled.
fn partial_associative(n: usize, cells: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = cells[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = cells[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (cells[xy * n + z], cells[x * n + yz]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn fill_semigroups(n: usize, cells: &mut Vec<usize>, k: usize, out: &mut Vec<OpTable>) {
    if k == n * n {
        out.push(OpTable::new(n, cells.clone()).expect("complete table"));
        return;
    }
    for v in 0..n {
        cells[k] = v;
        if partial_associative(n, cells) {
            fill_semigroups(n, cells, k + 1, out);
        }
    }
    cells[k] = UNSET;
}

/// All labeled associative tables of order `n`, each once, in
/// lexicographic order of their entries.
///
/// Tables are built cell by cell and a branch is cut as soon as a fully
/// determined triple violates associativity.
pub fn enumerate_semigroups(n: usize) -> Result<Vec<OpTable>> {
    check_bound(n, SEMIGROUP_BOUND)?;
    // split on the first two cells
    let prefixes: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let k0 = (n * n).min(2);
    let chunks: Vec<Vec<OpTable>> = prefixes
        .into_par_iter()
        .filter(|&(_, b)| k0 == 2 || b == 0)
        .map(|(a, b)| {
            let mut cells = vec![UNSET; n * n];
            cells[0] = a;
            if k0 == 2 {
                cells[1] = b;
            }
            let mut out = Vec::new();
            if partial_associative(n, &cells) {
                fill_semigroups(n, &mut cells, k0, &mut out);
            }
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// (D1)–(D3) only; both tables are assumed associative.
fn satisfies_mixed_axioms(left: &OpTable, right: &OpTable) -> bool {
    let n = left.size();
    let (l, r) = (|x, y| left.get(x, y), |x, y| right.get(x, y));
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                l(l(x, y), z) == l(x, r(y, z))
                    && l(r(x, y), z) == r(x, l(y, z))
                    && r(l(x, y), z) == r(x, r(y, z))
            })
        })
    })
}

/// All labeled dimonoids of order `n`: pairs of labeled semigroups that
/// pass (D1)–(D3). Ordered by `(⊣, ⊢)` entries.
pub fn enumerate_dimonoids(n: usize) -> Result<Vec<DiTable>> {
    check_bound(n, DIMONOID_BOUND)?;
    let semigroups = enumerate_semigroups(n)?;
    let chunks: Vec<Vec<DiTable>> = semigroups
        .par_iter()
        .map(|left| {
            semigroups
                .iter()
                .filter(|right| satisfies_mixed_axioms(left, right))
                .map(|right| DiTable::pair_unchecked(left.clone(), right.clone()))
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Every dimonoid constraint on triples whose cells are already filled.
/// `cells` holds the `⊣` table followed by the `⊢` table.
fn partial_dimonoid(n: usize, cells: &[usize]) -> bool {
    let nn = n * n;
    let l = |x: usize, y: usize| {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            cells[x * n + y]
        }
    };
    let r = |x: usize, y: usize| {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            cells[nn + x * n + y]
        }
    };
    let agree = |a: usize, b: usize| a == UNSET || b == UNSET || a == b;
    for x in 0..n {
        for y in 0..n {
            let (lxy, rxy) = (l(x, y), r(x, y));
            for z in 0..n {
                let (lyz, ryz) = (l(y, z), r(y, z));
                let ok = agree(l(lxy, z), l(x, lyz))
                    && agree(r(rxy, z), r(x, ryz))
                    && agree(l(lxy, z), l(x, ryz))
                    && agree(l(rxy, z), r(x, lyz))
                    && agree(r(lxy, z), r(x, ryz));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Joint backtracking over both tables, cells interleaved
/// (`⊣[0], ⊢[0], ⊣[1], ...`), pruning on every axiom at once.
///
/// Independent of [`enumerate_semigroups`]; used to cross-check
/// [`enumerate_dimonoids`].
pub fn enumerate_dimonoids_joint(n: usize) -> Result<Vec<DiTable>> {
    check_bound(n, DIMONOID_BOUND)?;
    let nn = n * n;
    let order: Vec<usize> = (0..nn).flat_map(|c| [c, nn + c]).collect();

    fn go(n: usize, order: &[usize], k: usize, cells: &mut Vec<usize>, out: &mut Vec<DiTable>) {
        if k == order.len() {
            let nn = n * n;
            let left = OpTable::new(n, cells[..nn].to_vec()).expect("complete table");
            let right = OpTable::new(n, cells[nn..].to_vec()).expect("complete table");
            out.push(DiTable::pair_unchecked(left, right));
            return;
        }
        let cell = order[k];
        for v in 0..n {
            cells[cell] = v;
            if partial_dimonoid(n, cells) {
                go(n, order, k + 1, cells, out);
            }
        }
        cells[cell] = UNSET;
    }

    let chunks: Vec<Vec<DiTable>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut cells = vec![UNSET; 2 * nn];
            cells[order[0]] = first;
            let mut out = Vec::new();
            if partial_dimonoid(n, &cells) {
                go(n, &order, 1, &mut cells, &mut out);
            }
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quotient {
    /// One entry per isomorphism class.
    #[serde(rename = "iso")]
    Iso,
    /// Classes of mutually dual dimonoids are merged.
    #[serde(rename = "iso-dual")]
    IsoAndDuality,
}

/// One isomorphism class. JSON form is one line of the catalog file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub canonical: DiTable,
    pub flags: DiFlags,
    pub halo_size: usize,
    pub aut_order: usize,
    pub labeled_count: usize,
    /// Index of the class containing the dual dimonoid.
    pub dual_class: usize,
}

/// Canonical representative and number of labeled members of every class,
/// counted directly from the labeled enumeration. Sorted by canonical form.
pub fn count_classes_directly(n: usize) -> Result<Vec<(DiTable, usize)>> {
    let labeled = enumerate_dimonoids(n)?;
    let canon: Vec<DiTable> = labeled
        .par_iter()
        .map(canonical_form)
        .collect::<Result<_>>()?;
    let mut classes: BTreeMap<Vec<Element>, (DiTable, usize)> = BTreeMap::new();
    for c in canon {
        classes.entry(c.key()).or_insert_with(|| (c, 0)).1 += 1;
    }
    Ok(classes.into_values().collect())
}

/// Classifies all dimonoids of order `n` up to isomorphism (and optionally
/// duality). `labeled_count` is `n! / |Aut|`.
pub fn classify(n: usize, quotient: Quotient) -> Result<Vec<CatalogEntry>> {
    let classes = count_classes_directly(n)?;
    let index: BTreeMap<Vec<Element>, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, (d, _))| (d.key(), i))
        .collect();
    let n_factorial: usize = (1..=n).product();
    let entries: Vec<CatalogEntry> = classes
        .par_iter()
        .map(|(d, _)| {
            let aut_order = automorphisms(d)?.order();
            let dual_key = canonical_form(&d.dual())?.key();
            Ok(CatalogEntry {
                canonical: d.clone(),
                flags: d.flags()?,
                halo_size: d.halo()?.len(),
                aut_order,
                labeled_count: n_factorial / aut_order,
                dual_class: index[&dual_key],
            })
        })
        .collect::<Result<_>>()?;
    Ok(match quotient {
        Quotient::Iso => entries,
        Quotient::IsoAndDuality => merge_dual_classes(entries),
    })
}

/// Keeps the first class of each dual pair; its labeled count absorbs the
/// partner's and it becomes its own dual class.
fn merge_dual_classes(entries: Vec<CatalogEntry>) -> Vec<CatalogEntry> {
    let mut merged = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        if e.dual_class < i {
            continue;
        }
        let mut kept = e.clone();
        if e.dual_class > i {
            kept.labeled_count += entries[e.dual_class].labeled_count;
        }
        kept.dual_class = merged.len();
        merged.push(kept);
    }
    merged
}

pub fn write_catalog<W: Write>(entries: &[CatalogEntry], mut w: W) -> Result<(), std::io::Error> {
    for e in entries {
        serde_json::to_writer(&mut w, e)?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

/// Parses line-delimited catalog records; errors carry 1-based line numbers.
pub fn read_catalog<R: BufRead>(r: R) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::Format {
            line: line_no,
            reason: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: CatalogEntry = serde_json::from_str(&line).map_err(|e| Error::Format {
            line: line_no,
            reason: e.to_string(),
        })?;
        if !entry.canonical.is_dimonoid() {
            return Err(Error::Format {
                line: line_no,
                reason: "representative is not a dimonoid".into(),
            });
        }
        out.push(entry);
    }
    let count = out.len();
    if let Some(bad) = out.iter().position(|e| e.dual_class >= count) {
        return Err(Error::Format {
            line: bad + 1,
            reason: format!("dual_class {} out of range", out[bad].dual_class),
        });
    }
    Ok(out)
}

pub fn save_catalog(entries: &[CatalogEntry], path: &Path) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_owned(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_catalog(entries, BufWriter::new(file)).map_err(io_err)
}

pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    read_catalog(BufReader::new(file))
}
