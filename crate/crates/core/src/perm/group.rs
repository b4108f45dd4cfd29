use super::Perm;
use crate::{Error, Result};
use std::collections::{HashMap, HashSet};

/// A finite permutation group: its generators plus the full, sorted element
/// list. Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            elements: vec![Perm::identity(degree)],
        }
    }

    /// Trusted constructor for callers that already hold a closed, sorted
    /// element list together with generators for it.
    pub(crate) fn from_parts(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.first().is_some_and(Perm::is_identity));
        Self {
            degree,
            generators,
            elements,
        }
    }

    /// Builds a group from an element set, checking closure and choosing a
    /// greedy generating set (each generator lies outside the span of the
    /// earlier ones).
    pub fn from_elements(degree: usize, elements: impl IntoIterator<Item = Perm>) -> Result<Self> {
        let mut elements: Vec<Perm> = elements.into_iter().collect();
        for e in &elements {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: e.degree(),
                });
            }
        }
        elements.sort();
        elements.dedup();
        if elements.first().map_or(true, |e| !e.is_identity()) {
            return Err(Error::InvalidArgument("element set lacks the identity".into()));
        }
        let set: HashSet<&Perm> = elements.iter().collect();
        for a in &elements {
            for b in &elements {
                if !set.contains(&a.compose_unchecked(b)) {
                    return Err(Error::InvalidArgument("element set is not closed".into()));
                }
            }
        }
        let mut generators = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        for e in &elements {
            if !span.contains(e) {
                generators.push(e.clone());
                span = closure_set(degree, &generators);
            }
        }
        Ok(Self {
            degree,
            generators,
            elements,
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements in canonical (lexicographic) order; the identity is first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Same degree and element set. Generators are not compared.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::OutOfRange {
                element: point,
                size: self.degree,
            });
        }
        PermGroup::from_elements(
            self.degree,
            self.elements.iter().filter(|g| g.apply(point) == point).cloned(),
        )
    }
}

fn closure_set(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        for g in gens {
            let y = g.compose_unchecked(&queue[i]);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
        i += 1;
    }
    seen
}

/// Smallest group of the given degree containing `gens`.
pub fn group_closure(degree: usize, gens: &[Perm]) -> Result<PermGroup> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let mut elements: Vec<Perm> = closure_set(degree, gens).into_iter().collect();
    elements.sort();
    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        elements,
    })
}

fn require_subgroup(g: &PermGroup, h: &PermGroup) -> Result<()> {
    if h.is_subgroup_of(g) {
        Ok(())
    } else {
        Err(Error::NotASubgroup)
    }
}

/// A left coset `rH`; `representative` is its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub representative: Perm,
    pub elements: Vec<Perm>,
}

/// Left cosets of `h` in `g`, ordered by representative.
pub fn cosets(g: &PermGroup, h: &PermGroup) -> Result<Vec<Coset>> {
    require_subgroup(g, h)?;
    let mut covered: HashSet<&Perm> = HashSet::with_capacity(g.order());
    let mut out = Vec::with_capacity(g.order() / h.order());
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        let mut elements: Vec<Perm> = h.elements().iter().map(|k| x.compose_unchecked(k)).collect();
        elements.sort();
        for e in &elements {
            // elements of xH are elements of g
            let idx = g.position(e).expect("coset element outside the group");
            covered.insert(&g.elements()[idx]);
        }
        out.push(Coset {
            representative: x.clone(),
            elements,
        });
    }
    Ok(out)
}

/// The permutation action of `g`'s generators on the left cosets of `h`,
/// together with the coset list and the element-to-coset lookup.
pub(crate) struct LeftCosetAction {
    pub action: PermGroup,
    pub cosets: Vec<Coset>,
    pub coset_of: HashMap<Perm, usize>,
}

pub(crate) fn left_coset_action(g: &PermGroup, h: &PermGroup) -> Result<LeftCosetAction> {
    let cosets = cosets(g, h)?;
    let mut coset_of = HashMap::with_capacity(g.order());
    for (i, c) in cosets.iter().enumerate() {
        for e in &c.elements {
            coset_of.insert(e.clone(), i);
        }
    }
    let images_of = |x: &Perm| -> Perm {
        let images = cosets
            .iter()
            .map(|c| coset_of[&x.compose_unchecked(&c.representative)] as u32)
            .collect();
        Perm::new(images).expect("coset action is a bijection")
    };
    let gens: Vec<Perm> = g.generators().iter().map(images_of).collect();
    let action = group_closure(cosets.len(), &gens)?;
    Ok(LeftCosetAction {
        action,
        cosets,
        coset_of,
    })
}

impl LeftCosetAction {
    /// Image of an arbitrary group element under the action.
    pub fn image(&self, x: &Perm) -> Perm {
        let images = self
            .cosets
            .iter()
            .map(|c| self.coset_of[&x.compose_unchecked(&c.representative)] as u32)
            .collect();
        Perm::new(images).expect("coset action is a bijection")
    }
}

/// `h` is normal in `g` iff every generator of `g` conjugates `h` into itself.
pub fn is_normal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    require_subgroup(g, h)?;
    Ok(g.generators().iter().all(|x| {
        let xi = x.inverse();
        h.generators()
            .iter()
            .all(|k| h.contains(&x.compose_unchecked(k).compose_unchecked(&xi)))
    }))
}

/// Largest normal subgroup of `g` inside `h`: the intersection of all
/// conjugates of `h`.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let reps: Vec<Perm> = cosets(g, h)?.into_iter().map(|c| c.representative).collect();
    // k ∈ rHr⁻¹  ⇔  r⁻¹kr ∈ H
    let inv: Vec<Perm> = reps.iter().map(Perm::inverse).collect();
    let kept = h.elements().iter().filter(|k| {
        reps.iter()
            .zip(&inv)
            .all(|(r, ri)| h.contains(&ri.compose_unchecked(k).compose_unchecked(r)))
    });
    PermGroup::from_elements(g.degree(), kept.cloned())
}

/// `⟨a ∪ b⟩`, checked to lie in `g`.
pub fn subgroup_join(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    require_subgroup(g, a)?;
    require_subgroup(g, b)?;
    let gens: Vec<Perm> = a.generators().iter().chain(b.generators()).cloned().collect();
    group_closure(g.degree(), &gens)
}

/// `g / n` realised as the action of `g` on the cosets of `n`.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<PermGroup> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    Ok(left_coset_action(g, n)?.action)
}
