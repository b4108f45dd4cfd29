use super::group::PermGroup;
use super::table::SubgroupSystem;
use crate::{Error, Result};

pub fn is_cyclic(g: &PermGroup) -> bool {
    g.elements().iter().any(|x| x.order() == g.order())
}

/// Returns `m` when `g` is dihedral of order `2m` with `m ≥ 2`: it has a
/// cyclic subgroup of index 2 and is generated by two involutions. The Klein
/// group is accepted as `m = 2`.
pub fn is_dihedral(g: &PermGroup) -> Option<usize> {
    let n = g.order();
    if n < 4 || n % 2 != 0 {
        return None;
    }
    let m = n / 2;
    if !g.elements().iter().any(|x| x.order() == m) {
        return None;
    }
    let involutions: Vec<_> = g.elements().iter().filter(|x| x.order() == 2).collect();
    // two distinct involutions s, t generate a dihedral group of order 2·ord(st)
    let generated = involutions.iter().enumerate().any(|(i, s)| {
        involutions[i + 1..]
            .iter()
            .any(|t| 2 * s.compose_unchecked(t).order() == n)
    });
    generated.then_some(m)
}

/// True iff the only normal subgroups are the trivial group and `g` itself.
pub fn is_simple(g: &PermGroup) -> Result<bool> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let sys = SubgroupSystem::enumerate(g)?;
    let normal = sys
        .subgroups()
        .iter()
        .filter(|s| sys.table().is_normal(s))
        .count();
    Ok(normal == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{group_closure, Perm};

    fn p(v: &[usize]) -> Perm {
        Perm::from_slice(v).unwrap()
    }

    fn s3() -> PermGroup {
        group_closure(3, &[p(&[1, 0, 2]), p(&[0, 2, 1])]).unwrap()
    }

    fn z(n: usize) -> PermGroup {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        group_closure(n, &[p(&rot)]).unwrap()
    }

    fn klein() -> PermGroup {
        group_closure(4, &[p(&[1, 0, 3, 2]), p(&[2, 3, 0, 1])]).unwrap()
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(is_dihedral(&s3()), Some(3));
        assert_eq!(is_dihedral(&z(4)), None);
        assert_eq!(is_dihedral(&klein()), Some(2));
        assert_eq!(is_dihedral(&z(2)), None);
        assert_eq!(is_dihedral(&z(6)), None);
    }

    #[test]
    fn dihedral_shortcut_matches_closure() {
        // every pair of distinct involutions in S_4: order formula vs closure
        let s4 = group_closure(4, &[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])]).unwrap();
        let inv: Vec<_> = s4.elements().iter().filter(|x| x.order() == 2).collect();
        for s in &inv {
            for t in &inv {
                if s != t {
                    let h = group_closure(4, &[(*s).clone(), (*t).clone()]).unwrap();
                    assert_eq!(h.order(), 2 * s.compose_unchecked(t).order());
                }
            }
        }
    }

    #[test]
    fn simple_examples() {
        assert!(is_simple(&z(3)).unwrap());
        assert!(!is_simple(&z(4)).unwrap());
        assert!(!is_simple(&s3()).unwrap());
        assert_eq!(is_simple(&PermGroup::trivial(2)), Err(Error::TrivialGroup));
        let a5 = group_closure(5, &[p(&[1, 2, 0, 3, 4]), p(&[0, 1, 3, 4, 2]), p(&[1, 2, 3, 4, 0])])
            .unwrap();
        assert_eq!(a5.order(), 60);
        assert!(is_simple(&a5).unwrap());
    }

    #[test]
    fn cyclic_detection() {
        assert!(is_cyclic(&z(6)));
        assert!(!is_cyclic(&klein()));
        assert!(is_cyclic(&PermGroup::trivial(1)));
    }
}
