//! Finite lattices given by an order relation, with precomputed meet and
//! join tables, shape detection, isomorphism search and DOT output.

use crate::bitset::BitSet;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// Largest lattice [`iso_check`] will search.
pub const ISO_BOUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinLattice {
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

impl FinLattice {
    /// Builds the lattice of `items` ordered by `leq`, verifying that `leq` is
    /// a partial order in which every pair has a unique meet and join.
    pub fn from_inclusion<T>(items: &[T], leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let n = items.len();
        if n == 0 {
            return Err(Error::NotPartialOrder("empty carrier".into()));
        }
        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for (a, x) in items.iter().enumerate() {
            for (b, y) in items.iter().enumerate() {
                if leq(x, y) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::NotPartialOrder(format!("{a} ≰ {a}")));
            }
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotPartialOrder(format!("{a} and {b} are equivalent")));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::NotPartialOrder(format!("transitivity fails above {a} ≤ {b}")));
                }
            }
        }
        // strictly larger down-sets for strictly larger elements
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&a| down[a].count());

        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let ub = up[a].intersection(&up[b]);
                let j = linear
                    .iter()
                    .copied()
                    .find(|&c| ub.contains(c))
                    .filter(|&c| ub.is_subset(&up[c]))
                    .ok_or(Error::NotALattice(a, b, "join"))?;
                let lb = down[a].intersection(&down[b]);
                let m = linear
                    .iter()
                    .rev()
                    .copied()
                    .find(|&c| lb.contains(c))
                    .filter(|&c| lb.is_subset(&down[c]))
                    .ok_or(Error::NotALattice(a, b, "meet"))?;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
            }
        }
        let bottom = linear[0];
        let top = linear[n - 1];
        if up[bottom].count() != n || down[top].count() != n {
            return Err(Error::NotALattice(bottom, top, "bound"));
        }
        Ok(Self {
            up,
            down,
            meet,
            join,
            bottom,
            top,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len(), "one label per element");
        self.labels = Some(labels);
        self
    }

    /// The `k`-element chain `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> Self {
        let items: Vec<usize> = (0..k).collect();
        Self::from_inclusion(&items, |a, b| a <= b).expect("chain")
    }

    /// Reference `M_n`: element 0 is the bottom, `1..=n` the atoms, `n+1` the top.
    pub fn m_n(n: usize) -> Self {
        let items: Vec<usize> = (0..n + 2).collect();
        let top = n + 1;
        Self::from_inclusion(&items, |&a, &b| a == b || a == 0 || b == top).expect("M_n")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `b` covers `a`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b) && self.up[a].intersection(&self.down[b]).count() == 2
    }

    /// Hasse diagram edges `(lower, upper)`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in self.up[a].iter() {
                if self.covers(a, b) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| self.down[a].count());
        let mut rank = vec![0usize; n];
        for &b in &order {
            rank[b] = self.down[b]
                .iter()
                .filter(|&a| a != b)
                .map(|a| rank[a] + 1)
                .max()
                .unwrap_or(0);
        }
        rank
    }

    pub fn height(&self) -> usize {
        self.ranks()[self.top]
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.covers(self.bottom, a)).collect()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.covers(a, self.top)).collect()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// `Some(n)` iff this is `M_n` with `n ≥ 3`.
    pub fn detect_mn(&self) -> Option<usize> {
        let len = self.len();
        if len < 5 || self.height() != 2 {
            return None;
        }
        let atoms = self.atoms();
        let coatoms = self.coatoms();
        let middle = len - 2;
        (atoms.len() == middle && atoms == coatoms).then_some(middle)
    }

    pub fn shape(&self) -> Shape {
        if let Some(n) = self.detect_mn() {
            Shape::Mn(n)
        } else if self.is_chain() {
            Shape::Chain
        } else if self.len() == 4 && self.height() == 2 {
            Shape::Boolean2
        } else {
            Shape::Other
        }
    }

    pub fn report(&self) -> LatticeReport {
        let shape = self.shape();
        LatticeReport {
            format: 1,
            size: self.len(),
            height: self.height(),
            atoms: self.atoms().len(),
            coatoms: self.coatoms().len(),
            shape: shape.name().to_string(),
            n: match shape {
                Shape::Mn(n) => Some(n),
                _ => None,
            },
        }
    }

    /// Hasse diagram in DOT syntax, bottom at the bottom.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
        for a in 0..self.len() {
            let label = self
                .labels
                .as_ref()
                .map_or_else(|| a.to_string(), |l| l[a].clone());
            writeln!(out, "  n{a} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
        }
        for (a, b) in self.cover_edges() {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    fn signature(&self, ranks: &[usize], a: usize) -> (usize, usize, usize) {
        (ranks[a], self.up[a].count(), self.down[a].count())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Mn(usize),
    Chain,
    Boolean2,
    Other,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::Mn(_) => "M_n",
            Shape::Chain => "chain",
            Shape::Boolean2 => "boolean-2",
            Shape::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub format: u32,
    pub size: usize,
    pub height: usize,
    pub atoms: usize,
    pub coatoms: usize,
    pub shape: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
}

/// Searches for an order isomorphism `a ↦ map[a]` from `l1` onto `l2`.
///
/// Candidates are restricted to elements of equal rank and equal up/down-set
/// sizes; both lattices must have at most [`ISO_BOUND`] elements.
pub fn iso_check(l1: &FinLattice, l2: &FinLattice) -> Result<Option<Vec<usize>>> {
    for l in [l1, l2] {
        if l.len() > ISO_BOUND {
            return Err(Error::SizeBound {
                size: l.len(),
                bound: ISO_BOUND,
            });
        }
    }
    if l1.len() != l2.len() {
        return Ok(None);
    }
    let n = l1.len();
    let (r1, r2) = (l1.ranks(), l2.ranks());
    let sig1: Vec<_> = (0..n).map(|a| l1.signature(&r1, a)).collect();
    let sig2: Vec<_> = (0..n).map(|a| l2.signature(&r2, a)).collect();
    let mut s1 = sig1.clone();
    let mut s2 = sig2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| l1.down[a].count());

    fn search(
        depth: usize,
        order: &[usize],
        l1: &FinLattice,
        l2: &FinLattice,
        sig1: &[(usize, usize, usize)],
        sig2: &[(usize, usize, usize)],
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let a = order[depth];
        for c in 0..l2.len() {
            if used[c] || sig1[a] != sig2[c] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&x| {
                let fx = map[x].unwrap();
                l1.leq(x, a) == l2.leq(fx, c) && l1.leq(a, x) == l2.leq(c, fx)
            });
            if !consistent {
                continue;
            }
            map[a] = Some(c);
            used[c] = true;
            if search(depth + 1, order, l1, l2, sig1, sig2, map, used) {
                return true;
            }
            map[a] = None;
            used[c] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if search(0, &order, l1, l2, &sig1, &sig2, &mut map, &mut used) {
        Ok(Some(map.into_iter().map(Option::unwrap).collect()))
    } else {
        Ok(None)
    }
}

/// True iff `map` is a bijection with `a ≤ b ⇔ map[a] ≤ map[b]`.
pub fn is_order_isomorphism(l1: &FinLattice, l2: &FinLattice, map: &[usize]) -> bool {
    let n = l1.len();
    if l2.len() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| l1.leq(a, b) == l2.leq(map[a], map[b])))
}
