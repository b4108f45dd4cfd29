use super::{group::PermGroup, Perm};
use crate::bitset::BitSet;
use crate::lattice::FinLattice;
use crate::par::*;
use crate::{Error, Result};
use std::collections::{HashMap, HashSet};

/// Default cap on the order of a group whose subgroups are enumerated.
pub const DEFAULT_ORDER_BOUND: usize = 5040;

/// Cayley table of a group, indexed by canonical element position.
#[derive(Clone, Debug)]
pub struct GroupTable {
    group: PermGroup,
    mul: Vec<u16>,
    inv: Vec<u16>,
    generators: Vec<usize>,
}

impl GroupTable {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let n = group.order();
        if n > u16::MAX as usize {
            return Err(Error::OrderBound {
                order: n,
                bound: u16::MAX as usize,
            });
        }
        let index: HashMap<&Perm, u16> = group
            .elements()
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u16))
            .collect();
        let elements = group.elements();
        let rows: Vec<Vec<u16>> = (0..n)
            .into_par_iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index[&elements[a].compose_unchecked(b)])
                    .collect()
            })
            .collect();
        let mul: Vec<u16> = rows.concat();
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let b = (0..n).find(|&b| mul[a * n + b] == 0).expect("every element has an inverse");
            inv[a] = b as u16;
        }
        let generators = group
            .generators()
            .iter()
            .map(|g| index[g] as usize)
            .collect();
        Ok(Self {
            group: group.clone(),
            mul,
            inv,
            generators,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inv.len()
    }

    /// Position of `element(a) ∘ element(b)`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.group.elements()[i]
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.group.position(p)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            elements: BitSet::from_indices(self.order(), [0]),
            generators: Vec::new(),
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: BitSet::full(self.order()),
            generators: self.generators.clone(),
        }
    }

    pub fn cyclic(&self, x: usize) -> Subgroup {
        let mut elements = BitSet::new(self.order());
        let mut y = 0;
        loop {
            elements.insert(y);
            y = self.mul(x, y);
            if y == 0 {
                break;
            }
        }
        Subgroup {
            elements,
            generators: if x == 0 { Vec::new() } else { vec![x] },
        }
    }

    /// `⟨sub, g⟩` by Dimino's coset extension: the result is a union of
    /// right cosets `H·r`, grown until closed under right multiplication by
    /// every generator.
    pub fn extend(&self, sub: &Subgroup, g: usize) -> Subgroup {
        if sub.elements.contains(g) {
            return sub.clone();
        }
        let base: Vec<usize> = sub.elements.iter().collect();
        let mut elements = sub.elements.clone();
        let mut generators = sub.generators.clone();
        generators.push(g);
        let mut reps = vec![0usize];
        let add_coset = |elements: &mut BitSet, r: usize| {
            for &h in &base {
                elements.insert(self.mul(h, r));
            }
        };
        add_coset(&mut elements, g);
        reps.push(g);
        let mut i = 0;
        while i < reps.len() {
            for &s in &generators {
                let x = self.mul(reps[i], s);
                if !elements.contains(x) {
                    add_coset(&mut elements, x);
                    reps.push(x);
                }
            }
            i += 1;
        }
        Subgroup {
            elements,
            generators,
        }
    }

    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        gens.iter()
            .fold(self.trivial(), |acc, &g| self.extend(&acc, g))
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        b.generators.iter().fold(a.clone(), |acc, &g| self.extend(&acc, g))
    }

    pub fn to_group(&self, sub: &Subgroup) -> PermGroup {
        let elements = sub.elements.iter().map(|i| self.element(i).clone()).collect();
        let generators = sub.generators.iter().map(|&i| self.element(i).clone()).collect();
        PermGroup::from_parts(self.group.degree(), generators, elements)
    }

    pub fn from_group(&self, h: &PermGroup) -> Result<Subgroup> {
        if h.degree() != self.group.degree() {
            return Err(Error::NotASubgroup);
        }
        let mut elements = BitSet::new(self.order());
        for e in h.elements() {
            elements.insert(self.position(e).ok_or(Error::NotASubgroup)?);
        }
        let generators = h
            .generators()
            .iter()
            .map(|g| self.position(g).ok_or(Error::NotASubgroup))
            .collect::<Result<_>>()?;
        Ok(Subgroup {
            elements,
            generators,
        })
    }

    /// Normal in the whole group: conjugating each subgroup generator by each
    /// group generator stays inside.
    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.generators.iter().all(|&g| {
            let gi = self.inv(g);
            sub.generators
                .iter()
                .all(|&h| sub.elements.contains(self.mul(self.mul(g, h), gi)))
        })
    }
}

/// A subgroup as a mask over the positions of a [`GroupTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: BitSet,
    pub generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.count()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.order(), self.elements.iter().collect())
    }
}

/// Every subgroup of a group, sorted by `(order, element positions)`.
///
/// Enumeration starts from the cyclic subgroups and closes under joins with
/// cyclic subgroups until no new subgroup appears. Every subgroup is a join of
/// its cyclic subgroups, so this reaches the full join closure.
#[derive(Clone, Debug)]
pub struct SubgroupSystem {
    table: GroupTable,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<BitSet, usize>,
}

impl SubgroupSystem {
    pub fn enumerate(group: &PermGroup) -> Result<Self> {
        Self::enumerate_bounded(group, DEFAULT_ORDER_BOUND)
    }

    pub fn enumerate_bounded(group: &PermGroup, bound: usize) -> Result<Self> {
        if group.order() > bound {
            return Err(Error::OrderBound {
                order: group.order(),
                bound,
            });
        }
        let table = GroupTable::new(group)?;
        Ok(Self::from_table(table))
    }

    pub fn from_table(table: GroupTable) -> Self {
        let mut seen: HashSet<BitSet> = HashSet::new();
        let mut cyclic = Vec::new();
        for x in 0..table.order() {
            let c = table.cyclic(x);
            if seen.insert(c.elements.clone()) {
                cyclic.push(c);
            }
        }
        let mut all = cyclic.clone();
        let mut frontier = cyclic.clone();
        while !frontier.is_empty() {
            let joined: Vec<Vec<Subgroup>> = frontier
                .par_iter()
                .map(|s| {
                    let mut local: Vec<Subgroup> = Vec::new();
                    for c in &cyclic {
                        if c.is_subgroup_of(s) {
                            continue;
                        }
                        let j = table.extend(s, c.generators[0]);
                        if !local.iter().any(|l| l.elements == j.elements) {
                            local.push(j);
                        }
                    }
                    local
                })
                .collect();
            let mut next = Vec::new();
            for s in joined.into_iter().flatten() {
                if seen.insert(s.elements.clone()) {
                    all.push(s.clone());
                    next.push(s);
                }
            }
            frontier = next;
        }
        let mut keyed: Vec<_> = all.into_iter().map(|s| (s.sort_key(), s)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let subgroups: Vec<Subgroup> = keyed.into_iter().map(|(_, s)| s).collect();
        let lookup = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements.clone(), i))
            .collect();
        Self {
            table,
            subgroups,
            lookup,
        }
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group(&self, i: usize) -> PermGroup {
        self.table.to_group(&self.subgroups[i])
    }

    pub fn groups(&self) -> Vec<PermGroup> {
        (0..self.len()).map(|i| self.group(i)).collect()
    }

    pub fn position(&self, elements: &BitSet) -> Option<usize> {
        self.lookup.get(elements).copied()
    }

    pub fn position_of_group(&self, h: &PermGroup) -> Result<usize> {
        let sub = self.table.from_group(h)?;
        self.position(&sub.elements).ok_or(Error::NotASubgroup)
    }

    pub fn index(&self, i: usize) -> usize {
        self.table.order() / self.subgroups[i].order()
    }

    /// Positions of all subgroups `K` with `subgroups[h] ≤ K`.
    pub fn interval(&self, h: usize) -> Vec<usize> {
        let base = &self.subgroups[h];
        (0..self.len())
            .filter(|&k| base.is_subgroup_of(&self.subgroups[k]))
            .collect()
    }

    /// Subgroup lattice of the whole group.
    pub fn lattice(&self) -> FinLattice {
        let all: Vec<usize> = (0..self.len()).collect();
        self.lattice_of(&all)
    }

    /// Lattice of `I[subgroups[h], G]`.
    pub fn interval_lattice(&self, h: usize) -> FinLattice {
        self.lattice_of(&self.interval(h))
    }

    fn lattice_of(&self, members: &[usize]) -> FinLattice {
        let labels = members
            .iter()
            .map(|&i| format!("order {}", self.subgroups[i].order()))
            .collect();
        FinLattice::from_inclusion(members, |&a, &b| {
            self.subgroups[a].is_subgroup_of(&self.subgroups[b])
        })
        .expect("subgroups ordered by inclusion form a lattice")
        .with_labels(labels)
    }
}

/// Every subgroup of `g`, sorted by `(order, elements)`.
pub fn all_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    Ok(SubgroupSystem::enumerate(g)?.groups())
}

/// All `K` with `h ≤ K ≤ g`, in the same order as [`all_subgroups`].
pub fn interval(g: &PermGroup, h: &PermGroup) -> Result<Vec<PermGroup>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let sys = SubgroupSystem::enumerate(g)?;
    let pos = sys.position_of_group(h)?;
    Ok(sys.interval(pos).into_iter().map(|k| sys.group(k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::group_closure;

    fn p(v: &[usize]) -> Perm {
        Perm::from_slice(v).unwrap()
    }

    fn s3() -> PermGroup {
        group_closure(3, &[p(&[1, 0, 2]), p(&[0, 2, 1])]).unwrap()
    }

    #[test]
    fn table_agrees_with_composition() {
        let g = s3();
        let t = GroupTable::new(&g).unwrap();
        for a in 0..6 {
            assert_eq!(t.mul(a, t.inv(a)), 0);
            for b in 0..6 {
                assert_eq!(
                    t.element(t.mul(a, b)),
                    &g.elements()[a].compose_unchecked(&g.elements()[b])
                );
            }
        }
    }

    #[test]
    fn dimino_matches_closure() {
        let g = group_closure(4, &[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])]).unwrap();
        let t = GroupTable::new(&g).unwrap();
        for x in 0..t.order() {
            for y in 0..t.order() {
                let sub = t.generate(&[x, y]);
                let direct =
                    group_closure(4, &[t.element(x).clone(), t.element(y).clone()]).unwrap();
                assert_eq!(sub.order(), direct.order());
                assert!(t.to_group(&sub).same_elements(&direct));
            }
        }
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&s3()).unwrap().len(), 6);
        let z4 = group_closure(4, &[p(&[1, 2, 3, 0])]).unwrap();
        assert_eq!(all_subgroups(&z4).unwrap().len(), 3);
        assert_eq!(all_subgroups(&PermGroup::trivial(3)).unwrap().len(), 1);
        let s4 = group_closure(4, &[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])]).unwrap();
        assert_eq!(all_subgroups(&s4).unwrap().len(), 30);
    }

    #[test]
    fn order_bound() {
        let s4 = group_closure(4, &[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])]).unwrap();
        assert_eq!(
            SubgroupSystem::enumerate_bounded(&s4, 10).unwrap_err(),
            Error::OrderBound { order: 24, bound: 10 }
        );
    }

    #[test]
    fn interval_examples() {
        let g = s3();
        let all = all_subgroups(&g).unwrap();
        let whole = interval(&g, &PermGroup::trivial(3)).unwrap();
        assert_eq!(whole.len(), 6);
        assert!(whole.iter().zip(&all).all(|(a, b)| a.same_elements(b)));
        let top = interval(&g, &g).unwrap();
        assert_eq!(top.len(), 1);
        let a3 = group_closure(3, &[p(&[1, 2, 0])]).unwrap();
        let i = interval(&g, &a3).unwrap();
        assert_eq!(i.iter().map(PermGroup::order).collect::<Vec<_>>(), vec![3, 6]);
        let foreign = group_closure(3, &[p(&[1, 2, 0])]).unwrap();
        assert!(interval(&foreign, &s3()).is_err());
    }

    #[test]
    fn sorted_by_order_then_elements() {
        let s4 = group_closure(4, &[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])]).unwrap();
        let subs = all_subgroups(&s4).unwrap();
        for w in subs.windows(2) {
            assert!((w[0].order(), w[0].elements()) < (w[1].order(), w[1].elements()));
        }
    }
}
