//! The Galois step from a partition system to the unary maps preserving it,
//! and back to the congruences of those maps.

use super::{all_congruences, principal_unchecked, CongruenceLattice, Partition, UnaryAlgebra};
use crate::par::*;
use crate::{Error, Result};
use std::collections::HashSet;

/// Largest carrier for [`preserving_maps`].
pub const PRESERVING_BOUND: usize = 8;

fn check_system(size: usize, parts: &[Partition]) -> Result<()> {
    if size > PRESERVING_BOUND {
        return Err(Error::SizeBound {
            size,
            bound: PRESERVING_BOUND,
        });
    }
    if let Some(p) = parts.iter().find(|p| p.size() != size) {
        return Err(Error::DegreeMismatch {
            expected: size,
            found: p.size(),
        });
    }
    Ok(())
}

struct MapSearch<'a> {
    size: usize,
    parts: &'a [Partition],
    // image[k][b]: block of parts[k] that block b of parts[k] is sent into
    image: Vec<Vec<u32>>,
    table: Vec<u32>,
}

impl<'a> MapSearch<'a> {
    fn new(size: usize, parts: &'a [Partition]) -> Self {
        Self {
            size,
            parts,
            image: parts.iter().map(|p| vec![u32::MAX; p.block_count()]).collect(),
            table: Vec::with_capacity(size),
        }
    }

    /// Tries `f(x) = v` for `x = table.len()`; on success returns the blocks
    /// whose image it fixed, for undo.
    fn assign(&mut self, v: u32) -> Option<Vec<usize>> {
        let x = self.table.len();
        let mut fixed = Vec::new();
        for (k, p) in self.parts.iter().enumerate() {
            let b = p.block_of(x);
            let target = p.rgs()[v as usize];
            let slot = &mut self.image[k][b];
            if *slot == u32::MAX {
                *slot = target;
                fixed.push(k);
            } else if *slot != target {
                for &k in &fixed {
                    self.image[k][self.parts[k].block_of(x)] = u32::MAX;
                }
                return None;
            }
        }
        self.table.push(v);
        Some(fixed)
    }

    fn unassign(&mut self, fixed: Vec<usize>) {
        self.table.pop();
        let x = self.table.len();
        for k in fixed {
            self.image[k][self.parts[k].block_of(x)] = u32::MAX;
        }
    }

    fn run(&mut self, out: &mut Vec<Vec<u32>>) {
        if self.table.len() == self.size {
            out.push(self.table.clone());
            return;
        }
        for v in 0..self.size as u32 {
            if let Some(fixed) = self.assign(v) {
                self.run(out);
                self.unassign(fixed);
            }
        }
    }
}

/// Every map `f: n → n` preserving all of `parts`, in lexicographic table
/// order. Partial tables that already break a partition are abandoned.
pub fn preserving_maps(size: usize, parts: &[Partition]) -> Result<Vec<Vec<u32>>> {
    check_system(size, parts)?;
    if size == 0 {
        return Ok(vec![Vec::new()]);
    }
    let branches: Vec<Vec<Vec<u32>>> = (0..size as u32)
        .into_par_iter()
        .map(|v0| {
            let mut search = MapSearch::new(size, parts);
            let mut out = Vec::new();
            if let Some(_fixed) = search.assign(v0) {
                search.run(&mut out);
            }
            out
        })
        .collect();
    Ok(branches.concat())
}

/// Con of the algebra of all maps preserving `parts`.
pub fn galois_closure(size: usize, parts: &[Partition]) -> Result<CongruenceLattice> {
    let maps = preserving_maps(size, parts)?;
    all_congruences(&UnaryAlgebra::new(size, maps)?)
}

/// The 0-1 sublattice of the partition lattice generated by `parts`.
pub fn generated_sublattice(size: usize, parts: &[Partition]) -> Result<Vec<Partition>> {
    if let Some(p) = parts.iter().find(|p| p.size() != size) {
        return Err(Error::DegreeMismatch {
            expected: size,
            found: p.size(),
        });
    }
    let mut seen: HashSet<Partition> = parts.iter().cloned().collect();
    seen.insert(Partition::discrete(size));
    seen.insert(Partition::indiscrete(size));
    let mut list: Vec<Partition> = seen.iter().cloned().collect();
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            for q in [list[i].meet(&list[j]), list[i].join(&list[j])] {
                if seen.insert(q.clone()) {
                    list.push(q);
                }
            }
        }
        i += 1;
    }
    list.sort_by(Partition::canonical_cmp);
    Ok(list)
}

/// Whether `parts` are realised exactly: the Galois closure adds nothing
/// beyond the sublattice they generate.
pub fn is_realizable(size: usize, parts: &[Partition]) -> Result<bool> {
    let closure = galois_closure(size, parts)?;
    Ok(closure.partitions == generated_sublattice(size, parts)?)
}

/// Fast form of [`is_realizable`]. The closure is the join closure of the
/// principal congruences of the preserving maps, and always contains the
/// generated sublattice, so the two agree iff every principal congruence
/// already lies in that sublattice.
pub fn is_closed_system(size: usize, parts: &[Partition]) -> Result<bool> {
    let maps = preserving_maps(size, parts)?;
    let alg = UnaryAlgebra::new(size, maps)?;
    let target: HashSet<Partition> = generated_sublattice(size, parts)?.into_iter().collect();
    for a in 0..size {
        for b in a + 1..size {
            if !target.contains(&principal_unchecked(&alg, a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
