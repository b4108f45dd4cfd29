//! Named groups, their regular and coset actions, and the curated catalog
//! used by the interval sweep.

use crate::perm::{core as core_of, group_closure, Perm, PermGroup};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest group the catalog will build.
pub const CATALOG_BOUND: usize = 48;
/// Largest group [`regular_action`] will translate.
pub const REGULAR_BOUND: usize = 5040;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Dihedral { m: usize },
    Symmetric { n: usize },
    Alternating { n: usize },
    Klein,
    Quaternion,
    DirectProduct { left: Box<GroupSpec>, right: Box<GroupSpec> },
}

impl GroupSpec {
    pub fn realize(&self) -> Result<PermGroup> {
        match self {
            GroupSpec::Cyclic { n } => cyclic(*n),
            GroupSpec::Dihedral { m } => dihedral(*m),
            GroupSpec::Symmetric { n } => symmetric(*n),
            GroupSpec::Alternating { n } => alternating(*n),
            GroupSpec::Klein => Ok(klein()),
            GroupSpec::Quaternion => Ok(quaternion()),
            GroupSpec::DirectProduct { left, right } => {
                direct_product(&left.realize()?, &right.realize()?)
            }
        }
    }

    /// Order predicted by the kind, independent of construction.
    pub fn expected_order(&self) -> usize {
        match self {
            GroupSpec::Cyclic { n } => *n,
            GroupSpec::Dihedral { m } => 2 * m,
            GroupSpec::Symmetric { n } => (1..=*n).product(),
            GroupSpec::Alternating { n } => ((1..=*n).product::<usize>() / 2).max(1),
            GroupSpec::Klein => 4,
            GroupSpec::Quaternion => 8,
            GroupSpec::DirectProduct { left, right } => left.expected_order() * right.expected_order(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupSpec::Cyclic { n } => format!("Z_{n}"),
            GroupSpec::Dihedral { m } => format!("D_{}", 2 * m),
            GroupSpec::Symmetric { n } => format!("S_{n}"),
            GroupSpec::Alternating { n } => format!("A_{n}"),
            GroupSpec::Klein => "Klein".into(),
            GroupSpec::Quaternion => "Q_8".into(),
            GroupSpec::DirectProduct { left, right } => format!("{} x {}", left.name(), right.name()),
        }
    }
}

fn rotation(n: usize) -> Perm {
    Perm::new((0..n as u32).map(|i| (i + 1) % n as u32).collect()).expect("rotation")
}

/// `Z_n` acting on itself by translation; `Z_1` is the trivial group of degree 1.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(Error::InvalidArgument("cyclic group needs n ≥ 1".into())),
        1 => Ok(PermGroup::trivial(1)),
        _ => group_closure(n, &[rotation(n)]),
    }
}

/// Dihedral group of order `2m` on the `m`-gon, generated by the rotation
/// `x ↦ x+1` and the reflection `x ↦ -x`. For `m = 2` the `2`-gon action is
/// not faithful, so the regular Klein group on 4 points is returned.
pub fn dihedral(m: usize) -> Result<PermGroup> {
    match m {
        0 | 1 => Err(Error::InvalidArgument(format!("dihedral group needs m ≥ 2, got {m}"))),
        2 => Ok(klein()),
        _ => {
            let reflection =
                Perm::new((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect()).expect("reflection");
            group_closure(m, &[rotation(m), reflection])
        }
    }
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(Error::InvalidArgument("symmetric group needs n ≥ 1".into())),
        1 => Ok(PermGroup::trivial(1)),
        2 => group_closure(2, &[rotation(2)]),
        _ => {
            let swap = Perm::from_cycles(n, &[&[0, 1]])?;
            group_closure(n, &[rotation(n), swap])
        }
    }
}

/// Alternating group, generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("alternating group needs n ≥ 1".into()));
    }
    if n < 3 {
        return Ok(PermGroup::trivial(n));
    }
    let gens = (2..n)
        .map(|k| Perm::from_cycles(n, &[&[0, 1, k]]))
        .collect::<Result<Vec<_>>>()?;
    group_closure(n, &gens)
}

/// The regular Klein four-group on 4 points.
pub fn klein() -> PermGroup {
    let a = Perm::new(vec![1, 0, 3, 2]).unwrap();
    let b = Perm::new(vec![2, 3, 0, 1]).unwrap();
    group_closure(4, &[a, b]).expect("klein")
}

/// The quaternion group acting on `{1,-1,i,-i,j,-j,k,-k}` (points 0..8 in
/// that order) by left multiplication with `i` and `j`.
pub fn quaternion() -> PermGroup {
    let i = Perm::new(vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap();
    let j = Perm::new(vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap();
    group_closure(8, &[i, j]).expect("quaternion")
}

/// `a × b` acting on the disjoint union of their point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (da, db) = (a.degree(), b.degree());
    let lift_left = |g: &Perm| {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend((da..da + db).map(|x| x as u32));
        Perm::new(images).expect("lifted")
    };
    let lift_right = |g: &Perm| {
        let mut images: Vec<u32> = (0..da as u32).collect();
        images.extend(g.images().iter().map(|&x| x + da as u32));
        Perm::new(images).expect("lifted")
    };
    let gens: Vec<Perm> = a
        .generators()
        .iter()
        .map(lift_left)
        .chain(b.generators().iter().map(lift_right))
        .collect();
    group_closure(da + db, &gens)
}

/// Left-regular representation: generator `g` becomes `x ↦ g∘x` on the
/// canonically ordered elements of `g`'s group.
pub fn regular_action(g: &PermGroup) -> Result<PermGroup> {
    if g.order() > REGULAR_BOUND {
        return Err(Error::OrderBound {
            order: g.order(),
            bound: REGULAR_BOUND,
        });
    }
    let gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|x| {
            let images = g
                .elements()
                .iter()
                .map(|y| g.position(&x.compose_unchecked(y)).expect("closed") as u32)
                .collect();
            Perm::new(images).expect("translation is a bijection")
        })
        .collect();
    group_closure(g.order(), &gens)
}

#[derive(Clone, Debug)]
pub struct CosetAction {
    pub action: PermGroup,
    pub kernel: PermGroup,
}

/// Action of `g` on the left cosets of `h` (ordered by least element),
/// with the kernel computed from the images of every element of `g`.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction> {
    let act = crate::perm::group::left_coset_action(g, h)?;
    let kernel = PermGroup::from_elements(
        g.degree(),
        g.elements()
            .iter()
            .filter(|x| act.image(x).is_identity())
            .cloned(),
    )?;
    Ok(CosetAction {
        action: act.action,
        kernel,
    })
}

/// `core(g, h)`, re-exported here because the coset-action kernel is checked
/// against it.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    core_of(g, h)
}

fn base_specs(max_order: usize) -> Vec<GroupSpec> {
    let mut specs: Vec<GroupSpec> = (1..=max_order).map(|n| GroupSpec::Cyclic { n }).collect();
    // Klein ahead of the dihedral family so the name survives deduplication against D_4
    specs.push(GroupSpec::Klein);
    specs.extend((2..=max_order / 2).map(|m| GroupSpec::Dihedral { m }));
    specs.extend([
        GroupSpec::Symmetric { n: 3 },
        GroupSpec::Symmetric { n: 4 },
        GroupSpec::Alternating { n: 4 },
        GroupSpec::Quaternion,
    ]);
    specs.retain(|s| s.expected_order() <= max_order);
    specs
}

/// Regular representations of the curated family: cyclic, dihedral, `S_3`,
/// `S_4`, `A_4`, Klein, `Q_8`, and direct products of two nontrivial base
/// members, all of order at most `max_order`. Entries whose regular
/// representations coincide element-for-element are kept once, under the
/// first name.
pub fn catalog(max_order: usize) -> Result<Vec<(String, PermGroup)>> {
    if max_order > CATALOG_BOUND {
        return Err(Error::SizeBound {
            size: max_order,
            bound: CATALOG_BOUND,
        });
    }
    let base = base_specs(max_order);
    let mut specs = base.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            let (oa, ob) = (a.expected_order(), b.expected_order());
            if oa > 1 && ob > 1 && oa * ob <= max_order {
                specs.push(GroupSpec::DirectProduct {
                    left: Box::new(a.clone()),
                    right: Box::new(b.clone()),
                });
            }
        }
    }
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for spec in specs {
        let g = regular_action(&spec.realize()?)?;
        if seen.insert(g.elements().to_vec()) {
            out.push((spec.name(), g));
        }
    }
    Ok(out)
}
