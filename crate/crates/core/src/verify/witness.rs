use crate::congruence::{all_congruences, gset_algebra, CongruenceLattice, UnaryAlgebra, CONGRUENCE_BOUND};
use crate::constructions::{dihedral, regular_action};
use crate::perm::is_prime;
use crate::{Error, Result};

/// The regular `D_2p`-set: carrier `2p`, one operation for translation by
/// the rotation and one for translation by the reflection. Its congruence
/// lattice is checked to be `M_{p+1}`.
pub fn minimal_representation(p: usize) -> Result<(UnaryAlgebra, CongruenceLattice)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if 2 * p > CONGRUENCE_BOUND {
        return Err(Error::SizeBound {
            size: 2 * p,
            bound: CONGRUENCE_BOUND,
        });
    }
    let alg = gset_algebra(&regular_action(&dihedral(p)?)?);
    let con = all_congruences(&alg)?;
    if con.lattice.detect_mn() != Some(p + 1) {
        return Err(Error::Internal(format!(
            "regular D_{} has congruence lattice of shape {:?}",
            2 * p,
            con.lattice.shape()
        )));
    }
    Ok((alg, con))
}
