use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// An equivalence relation on `{0..n-1}` in restricted-growth form: entry
/// `i` is the block of `i`, blocks numbered by first appearance.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    rgs: Vec<u32>,
}

impl Partition {
    pub fn from_rgs(rgs: Vec<u32>) -> Result<Self> {
        let mut next = 0u32;
        for (i, &b) in rgs.iter().enumerate() {
            if b > next {
                return Err(Error::InvalidArgument(format!(
                    "not a restricted-growth string: entry {i} is {b}, expected at most {next}"
                )));
            }
            if b == next {
                next += 1;
            }
        }
        Ok(Self { rgs })
    }

    /// Canonicalises arbitrary block labels.
    pub fn from_labels<T: std::hash::Hash + Eq>(labels: &[T]) -> Self {
        let mut ids: HashMap<&T, u32> = HashMap::new();
        let rgs = labels
            .iter()
            .map(|l| {
                let next = ids.len() as u32;
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Self { rgs }
    }

    pub fn from_blocks(size: usize, blocks: &[&[usize]]) -> Result<Self> {
        let mut label = vec![usize::MAX; size];
        for (b, block) in blocks.iter().enumerate() {
            for &x in *block {
                if x >= size {
                    return Err(Error::OutOfRange { element: x, size });
                }
                if label[x] != usize::MAX {
                    return Err(Error::InvalidArgument(format!("element {x} in two blocks")));
                }
                label[x] = b;
            }
        }
        // unmentioned elements are singletons
        let mut fresh = blocks.len();
        for l in label.iter_mut().filter(|l| **l == usize::MAX) {
            *l = fresh;
            fresh += 1;
        }
        Ok(Self::from_labels(&label))
    }

    /// Δ: every element alone.
    pub fn discrete(size: usize) -> Self {
        Self {
            rgs: (0..size as u32).collect(),
        }
    }

    /// ∇: a single block.
    pub fn indiscrete(size: usize) -> Self {
        Self { rgs: vec![0; size] }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u32] {
        &self.rgs
    }

    #[inline]
    pub fn block_of(&self, x: usize) -> usize {
        self.rgs[x] as usize
    }

    #[inline]
    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.rgs[x] == self.rgs[y]
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b as usize].push(i);
        }
        blocks
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count() == self.size()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.block_count() <= 1
    }

    /// Intersection of the two relations. Panics on a size mismatch.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.size(), other.size(), "partition size mismatch");
        let pairs: Vec<(u32, u32)> = self.rgs.iter().copied().zip(other.rgs.iter().copied()).collect();
        Partition::from_labels(&pairs)
    }

    /// Smallest equivalence containing both. Panics on a size mismatch.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.size(), other.size(), "partition size mismatch");
        let mut uf = UnionFind::new(self.size());
        for p in [self, other] {
            let mut first = vec![usize::MAX; p.block_count()];
            for (i, &b) in p.rgs.iter().enumerate() {
                let f = &mut first[b as usize];
                if *f == usize::MAX {
                    *f = i;
                } else {
                    uf.union(*f, i);
                }
            }
        }
        uf.partition()
    }

    /// `self ≤ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut image = vec![u32::MAX; self.block_count()];
        self.rgs.iter().zip(&other.rgs).all(|(&a, &b)| {
            let slot = &mut image[a as usize];
            if *slot == u32::MAX {
                *slot = b;
            }
            *slot == b
        })
    }

    /// Order used for every list of partitions this crate emits: more blocks
    /// first (so Δ leads and ∇ trails), ties broken by the RGS.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        other
            .block_count()
            .cmp(&self.block_count())
            .then_with(|| self.rgs.cmp(&other.rgs))
    }

    /// All partitions of an `n`-set in increasing RGS order.
    pub fn all(n: usize) -> PartitionIter {
        PartitionIter::with_prefix(n, if n == 0 { Vec::new() } else { vec![0] })
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::from_rgs(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.rgs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Enumerates restricted-growth strings of length `n` extending a fixed prefix.
pub struct PartitionIter {
    n: usize,
    fixed: usize,
    rgs: Vec<u32>,
    // prefix maxima: max[i] = max(rgs[0..=i])
    max: Vec<u32>,
    done: bool,
}

impl PartitionIter {
    /// `prefix` must itself be a valid restricted-growth string.
    pub fn with_prefix(n: usize, prefix: Vec<u32>) -> Self {
        assert!(prefix.len() <= n);
        let fixed = prefix.len();
        let mut rgs = prefix;
        rgs.resize(n, 0);
        let mut max = vec![0; n];
        let mut m = 0;
        for i in 0..n {
            m = m.max(rgs[i]);
            max[i] = m;
        }
        Self {
            n,
            fixed,
            rgs,
            max,
            done: false,
        }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition {
            rgs: self.rgs.clone(),
        };
        // advance: rightmost free position that may still grow
        let mut i = self.n;
        loop {
            if i <= self.fixed.max(1) {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.max[i - 1] {
                self.rgs[i] += 1;
                self.max[i] = self.max[i - 1].max(self.rgs[i]);
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[j - 1];
                }
                break;
            }
        }
        Some(out)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns whether two classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller root wins so the result does not depend on merge order
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn partition(&mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}
