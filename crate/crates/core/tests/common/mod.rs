//! Brute-force reference implementations. Nothing here calls the library's
//! own checkers, so agreement with them is meaningful.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dimonoid::{DiTable, OpTable};
use itertools::Itertools;

pub type Perm = Vec<usize>;

pub fn op(t: &OpTable) -> impl Fn(usize, usize) -> usize + '_ {
    move |x, y| t.entries()[x * t.size() + y]
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

pub fn associative(t: &OpTable) -> bool {
    let f = op(t);
    triples(t.size()).all(|(x, y, z)| f(f(x, y), z) == f(x, f(y, z)))
}

/// (D1), (D2), (D3) in that order.
pub fn mixed_axioms(left: &OpTable, right: &OpTable) -> [bool; 3] {
    let (l, r) = (op(left), op(right));
    let n = left.size();
    [
        triples(n).all(|(x, y, z)| l(l(x, y), z) == l(x, r(y, z))),
        triples(n).all(|(x, y, z)| l(r(x, y), z) == r(x, l(y, z))),
        triples(n).all(|(x, y, z)| r(l(x, y), z) == r(x, r(y, z))),
    ]
}

pub fn is_dimonoid(left: &OpTable, right: &OpTable) -> bool {
    associative(left) && associative(right) && mixed_axioms(left, right).iter().all(|&b| b)
}

pub fn right_commutative(t: &OpTable) -> bool {
    let f = op(t);
    triples(t.size()).all(|(s, x, y)| f(f(s, x), y) == f(f(s, y), x))
}

pub fn rectangular(t: &OpTable) -> bool {
    let f = op(t);
    triples(t.size()).all(|(x, y, z)| f(f(x, y), z) == f(x, z))
}

pub fn commutative(t: &OpTable) -> bool {
    let f = op(t);
    let n = t.size();
    (0..n).all(|x| (0..n).all(|y| f(x, y) == f(y, x)))
}

/// Elements `e` with `e ⊢ x = x = x ⊣ e` for every `x`.
pub fn halo(d: &DiTable) -> Vec<usize> {
    let (l, r) = (op(d.left()), op(d.right()));
    let n = d.size();
    (0..n)
        .filter(|&e| (0..n).all(|x| r(e, x) == x && l(x, e) == x))
        .collect()
}

pub fn transpose(t: &OpTable) -> OpTable {
    let f = op(t);
    let n = t.size();
    OpTable::new(n, (0..n * n).map(|k| f(k % n, k / n)).collect()).unwrap()
}

/// `x ⊣ᵈ y = y ⊢ x`, `x ⊢ᵈ y = y ⊣ x`.
pub fn dual(d: &DiTable) -> DiTable {
    DiTable::pair(transpose(d.right()), transpose(d.left())).unwrap()
}

fn preserves(t: &OpTable, p: &[usize]) -> bool {
    let f = op(t);
    let n = t.size();
    (0..n).all(|x| (0..n).all(|y| p[f(x, y)] == f(p[x], p[y])))
}

/// Every permutation of the carrier, checked one by one.
pub fn automorphisms(d: &DiTable) -> BTreeSet<Perm> {
    (0..d.size())
        .permutations(d.size())
        .filter(|p| preserves(d.left(), p) && preserves(d.right(), p))
        .collect()
}

pub fn isomorphic(a: &DiTable, b: &DiTable) -> bool {
    let n = a.size();
    n == b.size()
        && (0..n).permutations(n).any(|p| {
            let (la, lb, ra, rb) = (op(a.left()), op(b.left()), op(a.right()), op(b.right()));
            (0..n).all(|x| {
                (0..n).all(|y| p[la(x, y)] == lb(p[x], p[y]) && p[ra(x, y)] == rb(p[x], p[y]))
            })
        })
}

/// Permutations fixing `fixed` pointwise and mapping each block onto itself.
pub fn symmetric_product(n: usize, fixed: &[usize], blocks: &[Vec<usize>]) -> BTreeSet<Perm> {
    let mut block_of = vec![usize::MAX; n];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = i;
        }
    }
    (0..n)
        .permutations(n)
        .filter(|p| {
            fixed.iter().all(|&x| p[x] == x)
                && (0..n).all(|x| fixed.contains(&x) || block_of[p[x]] == block_of[x])
        })
        .collect()
}

/// All `n^(n²)` tables of order `n`.
pub fn all_tables(n: usize) -> impl Iterator<Item = OpTable> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut entries = vec![0; cells];
        for e in entries.iter_mut().rev() {
            *e = code % n;
            code /= n;
        }
        OpTable::new(n, entries).unwrap()
    })
}

pub fn associative_tables(n: usize) -> Vec<OpTable> {
    all_tables(n).filter(associative).collect()
}
