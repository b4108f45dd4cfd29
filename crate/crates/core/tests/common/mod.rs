//! Brute-force oracles shared by the integration suites. Nothing here calls
//! into the library's search code; only plain data types cross over.
#![allow(dead_code)]

use mnlab::perm::{Perm, PermGroup};
use mnlab::{Partition, UnaryAlgebra};
use std::collections::{BTreeSet, HashSet};

/// Every set partition of `0..n` as a block-label vector, labels numbered
/// by first appearance.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            go(i + 1, n, cur, blocks.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

/// Congruences of a unary algebra by checking `x ~ y ⇒ f(x) ~ f(y)` on all
/// pairs of every partition.
pub fn congruences_by_filter(size: usize, ops: &[Vec<u32>]) -> BTreeSet<Vec<usize>> {
    set_partitions(size)
        .into_iter()
        .filter(|labels| {
            ops.iter().all(|f| {
                (0..size).all(|x| {
                    (0..size)
                        .filter(|&y| labels[x] == labels[y])
                        .all(|y| labels[f[x] as usize] == labels[f[y] as usize])
                })
            })
        })
        .collect()
}

pub fn labels_of(p: &Partition) -> Vec<usize> {
    p.rgs().iter().map(|&b| b as usize).collect()
}

pub fn congruence_set(alg: &UnaryAlgebra) -> BTreeSet<Vec<usize>> {
    mnlab::congruence::all_congruences(alg)
        .unwrap()
        .partitions
        .iter()
        .map(labels_of)
        .collect()
}

fn mul(p: &[u32], q: &[u32]) -> Vec<u32> {
    q.iter().map(|&x| p[x as usize]).collect()
}

/// Closure of a generating set under composition, as raw image vectors.
pub fn closure(degree: usize, gens: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = mul(g, &x);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// All subgroups of `g`, found as closures of every subset of at most
/// `floor(log2 |g|)` elements; a group of order n never needs more
/// generators than that.
pub fn subgroups_by_subsets(g: &PermGroup) -> BTreeSet<BTreeSet<Vec<u32>>> {
    let elems: Vec<Vec<u32>> = g.elements().iter().map(|p| p.images().to_vec()).collect();
    let limit = (usize::BITS - 1 - g.order().leading_zeros()) as usize;
    let mut out = BTreeSet::new();
    let mut pick = Vec::new();
    fn go(
        start: usize,
        left: usize,
        elems: &[Vec<u32>],
        degree: usize,
        pick: &mut Vec<Vec<u32>>,
        out: &mut BTreeSet<BTreeSet<Vec<u32>>>,
    ) {
        out.insert(closure(degree, pick));
        if left == 0 {
            return;
        }
        for i in start..elems.len() {
            pick.push(elems[i].clone());
            go(i + 1, left - 1, elems, degree, pick, out);
            pick.pop();
        }
    }
    go(0, limit, &elems, g.degree(), &mut pick, &mut out);
    out
}

pub fn element_set(g: &PermGroup) -> BTreeSet<Vec<u32>> {
    g.elements().iter().map(|p| p.images().to_vec()).collect()
}

pub fn perm(images: &[u32]) -> Perm {
    Perm::new(images.to_vec()).unwrap()
}

/// Left-coset partition `x ~ y ⇔ x⁻¹y ∈ k` restricted to the given
/// coset representatives.
pub fn coset_partition(reps: &[Perm], k: &PermGroup) -> Partition {
    let labels: Vec<Vec<u32>> = reps
        .iter()
        .map(|r| {
            k.elements()
                .iter()
                .map(|x| mul(r.images(), x.images()))
                .min()
                .unwrap()
        })
        .collect();
    Partition::from_labels(&labels)
}
