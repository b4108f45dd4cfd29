//! Unary algebras and their congruence lattices.
//!
//! Congruences are computed two ways: by generating principal congruences
//! with union-find and closing under joins ([`all_congruences`]), and by
//! filtering every partition of the carrier ([`congruences_oracle`]). Both
//! return partitions in [`Partition::canonical_cmp`] order, so the results
//! can be compared element for element.

mod galois;
mod partition;

pub use galois::{
    galois_closure, generated_sublattice, is_closed_system, is_realizable, preserving_maps,
    PRESERVING_BOUND,
};
pub use partition::{Partition, PartitionIter};
pub(crate) use partition::UnionFind;

use crate::lattice::FinLattice;
use crate::par::*;
use crate::perm::PermGroup;
use crate::{Error, Result};
use std::collections::HashSet;

/// Largest carrier [`all_congruences`] accepts.
pub const CONGRUENCE_BOUND: usize = 64;
/// Largest carrier [`congruences_oracle`] accepts (`Bell(11) = 678570`).
pub const ORACLE_BOUND: usize = 11;
/// Largest congruence lattice either route will materialise.
pub const LATTICE_CAP: usize = 2048;

/// A finite set with unary operations given as tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnaryAlgebra {
    size: usize,
    ops: Vec<Vec<u32>>,
}

impl UnaryAlgebra {
    pub fn new(size: usize, ops: Vec<Vec<u32>>) -> Result<Self> {
        for (k, op) in ops.iter().enumerate() {
            if op.len() != size {
                return Err(Error::InvalidTable(format!(
                    "operation {k} has {} entries, carrier has {size}",
                    op.len()
                )));
            }
            if let Some(&x) = op.iter().find(|&&x| x as usize >= size) {
                return Err(Error::InvalidTable(format!(
                    "operation {k} maps into {x}, outside the carrier of size {size}"
                )));
            }
        }
        Ok(Self { size, ops })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ops(&self) -> &[Vec<u32>] {
        &self.ops
    }

    /// Adds an operation, returning the expanded algebra.
    pub fn with_op(&self, op: Vec<u32>) -> Result<Self> {
        let mut ops = self.ops.clone();
        ops.push(op);
        Self::new(self.size, ops)
    }

    pub fn preserves_all(&self, part: &Partition) -> bool {
        part.size() == self.size && self.ops.iter().all(|op| preserves_unchecked(op, part))
    }
}

/// The G-set of a permutation group: one operation per generator.
pub fn gset_algebra(action: &PermGroup) -> UnaryAlgebra {
    let ops = action
        .generators()
        .iter()
        .map(|g| g.images().to_vec())
        .collect();
    UnaryAlgebra {
        size: action.degree(),
        ops,
    }
}

fn preserves_unchecked(op: &[u32], part: &Partition) -> bool {
    // op must send each block into one block
    let mut image = vec![u32::MAX; part.block_count()];
    op.iter().enumerate().all(|(x, &fx)| {
        let slot = &mut image[part.block_of(x)];
        let target = part.rgs()[fx as usize];
        if *slot == u32::MAX {
            *slot = target;
        }
        *slot == target
    })
}

/// Whether `x ≡ y` implies `op(x) ≡ op(y)`.
pub fn preserves(op: &[u32], part: &Partition) -> Result<bool> {
    if op.len() != part.size() {
        return Err(Error::DegreeMismatch {
            expected: part.size(),
            found: op.len(),
        });
    }
    if let Some(&x) = op.iter().find(|&&x| x as usize >= op.len()) {
        return Err(Error::OutOfRange {
            element: x as usize,
            size: op.len(),
        });
    }
    Ok(preserves_unchecked(op, part))
}

pub(crate) fn principal_unchecked(alg: &UnaryAlgebra, a: usize, b: usize) -> Partition {
    let mut uf = UnionFind::new(alg.size);
    let mut pending = vec![(a, b)];
    while let Some((x, y)) = pending.pop() {
        if uf.union(x, y) {
            for op in &alg.ops {
                pending.push((op[x] as usize, op[y] as usize));
            }
        }
    }
    uf.partition()
}

/// Smallest congruence identifying `a` and `b`.
pub fn principal_congruence(alg: &UnaryAlgebra, a: usize, b: usize) -> Result<Partition> {
    for x in [a, b] {
        if x >= alg.size {
            return Err(Error::OutOfRange {
                element: x,
                size: alg.size,
            });
        }
    }
    Ok(principal_unchecked(alg, a, b))
}

/// A congruence lattice with the partitions behind each element.
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    /// Congruences in canonical order; element `i` of `lattice` is `partitions[i]`.
    pub partitions: Vec<Partition>,
    pub lattice: FinLattice,
}

impl CongruenceLattice {
    pub(crate) fn from_partitions(mut partitions: Vec<Partition>) -> Result<Self> {
        partitions.sort_by(Partition::canonical_cmp);
        let lattice = FinLattice::from_inclusion(&partitions, Partition::refines)?
            .with_labels(partitions.iter().map(|p| p.to_string()).collect());
        Ok(Self {
            partitions,
            lattice,
        })
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn position(&self, part: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == part)
    }
}

/// Principal congruences of every pair `a < b`, deduplicated.
pub fn principal_congruences(alg: &UnaryAlgebra) -> Vec<Partition> {
    let n = alg.size;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let found: Vec<Partition> = pairs
        .par_iter()
        .map(|&(a, b)| principal_unchecked(alg, a, b))
        .collect();
    let mut seen = HashSet::new();
    found.into_iter().filter(|p| seen.insert(p.clone())).collect()
}

/// Con(A) by principal generation and join closure.
pub fn all_congruences(alg: &UnaryAlgebra) -> Result<CongruenceLattice> {
    if alg.size > CONGRUENCE_BOUND {
        return Err(Error::SizeBound {
            size: alg.size,
            bound: CONGRUENCE_BOUND,
        });
    }
    let principal = principal_congruences(alg);
    let mut seen: HashSet<Partition> = principal.iter().cloned().collect();
    seen.insert(Partition::discrete(alg.size));
    let mut pending = principal.clone();
    while let Some(x) = pending.pop() {
        for p in &principal {
            let j = x.join(p);
            if !seen.contains(&j) {
                seen.insert(j.clone());
                if seen.len() > LATTICE_CAP {
                    return Err(Error::SizeBound {
                        size: seen.len(),
                        bound: LATTICE_CAP,
                    });
                }
                pending.push(j);
            }
        }
    }
    CongruenceLattice::from_partitions(seen.into_iter().collect())
}

/// Con(A) by testing every partition of the carrier.
pub fn congruences_oracle(alg: &UnaryAlgebra) -> Result<CongruenceLattice> {
    let n = alg.size;
    if n > ORACLE_BOUND {
        return Err(Error::SizeBound {
            size: n,
            bound: ORACLE_BOUND,
        });
    }
    let prefixes: Vec<Vec<u32>> = Partition::all(n.min(5)).map(|p| p.rgs().to_vec()).collect();
    let kept: Vec<Vec<Partition>> = prefixes
        .into_par_iter()
        .map(|pre| {
            PartitionIter::with_prefix(n, pre)
                .filter(|p| alg.preserves_all(p))
                .collect()
        })
        .collect();
    let kept: Vec<Partition> = kept.into_iter().flatten().collect();
    if kept.len() > LATTICE_CAP {
        return Err(Error::SizeBound {
            size: kept.len(),
            bound: LATTICE_CAP,
        });
    }
    CongruenceLattice::from_partitions(kept)
}
