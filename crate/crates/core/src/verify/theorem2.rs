use super::{elapsed_ms, minimal_representation, VerificationReport};
use crate::congruence::{galois_closure, generated_sublattice, is_closed_system, Partition};
use crate::par::*;
use crate::{Error, Result};
use serde::Serialize;
use std::time::Instant;

/// Largest carrier the partition-system sweep accepts.
pub const MAX_SWEEP_SIZE: usize = 6;

/// An `M_{p+1}` atom system that equals its own Galois closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedSystem {
    pub size: usize,
    pub atoms: Vec<Partition>,
}

/// Galois closure of the three atoms of `Eq(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryCheck {
    pub size: usize,
    pub atoms: Vec<Partition>,
    pub closure_size: usize,
    pub closure_shape_n: Option<usize>,
    pub closed: bool,
}

/// `Eq(3) ≅ M_3` is realised on 3 points, below the `2p = 4` of the regular
/// Klein set.
pub fn odd_prime_boundary() -> Result<BoundaryCheck> {
    let atoms: Vec<Partition> = Partition::all(3)
        .filter(|p| !p.is_discrete() && !p.is_indiscrete())
        .collect();
    let closure = galois_closure(3, &atoms)?;
    let closed = closure.partitions == generated_sublattice(3, &atoms)?;
    Ok(BoundaryCheck {
        size: 3,
        closure_size: closure.len(),
        closure_shape_n: closure.lattice.detect_mn(),
        atoms,
        closed,
    })
}

/// Sets of `k` partitions, pairwise meeting to Δ and joining to ∇, as
/// increasing index tuples into `parts`.
fn atom_systems(parts: &[Partition], k: usize) -> Vec<Vec<usize>> {
    let n = parts.len();
    if n == 0 {
        return Vec::new();
    }
    let size = parts[0].size();
    let (bottom, top) = (Partition::discrete(size), Partition::indiscrete(size));
    let compatible: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && parts[i].meet(&parts[j]) == bottom && parts[i].join(&parts[j]) == top)
                .collect()
        })
        .collect();

    fn extend(
        chosen: &mut Vec<usize>,
        candidates: &[usize],
        k: usize,
        compatible: &[Vec<bool>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for (pos, &c) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&d| compatible[c][d])
                .collect();
            if chosen.len() + 1 + next.len() < k {
                continue;
            }
            chosen.push(c);
            extend(chosen, &next, k, compatible, out);
            chosen.pop();
        }
    }

    let firsts: Vec<usize> = (0..n).collect();
    let per_first: Vec<Vec<Vec<usize>>> = firsts
        .par_iter()
        .map(|&i| {
            let cands: Vec<usize> = (i + 1..n).filter(|&j| compatible[i][j]).collect();
            let mut out = Vec::new();
            if k == 1 {
                out.push(vec![i]);
            } else {
                extend(&mut vec![i], &cands, k, &compatible, &mut out);
            }
            out
        })
        .collect();
    per_first.concat()
}

fn pair_count(parts: &[Partition]) -> usize {
    let size = parts.first().map_or(0, Partition::size);
    let (bottom, top) = (Partition::discrete(size), Partition::indiscrete(size));
    let mut count = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if parts[i].meet(&parts[j]) == bottom && parts[i].join(&parts[j]) == top {
                count += 1;
            }
        }
    }
    count
}

/// For each carrier size `s ≤ max_size`, enumerates every `M_{p+1}` atom
/// system and counts those that are Galois-closed. Passes when there are
/// none below `2p` and, if `2p` is swept, at least one at `2p` (including the
/// congruences of the regular `D_2p`-set).
pub fn check_theorem2(p: usize, max_size: usize) -> Result<VerificationReport<ClosedSystem>> {
    let start = Instant::now();
    if p != 3 {
        return Err(Error::Unsupported(format!(
            "theorem2 sweep supports p = 3 only (p >= 5 needs carriers of 9+ points), got {p}"
        )));
    }
    if max_size == 0 || max_size > MAX_SWEEP_SIZE {
        return Err(Error::Unsupported(format!(
            "max size must be in 1..={MAX_SWEEP_SIZE}, got {max_size}"
        )));
    }
    let k = p + 1;
    let mut report = VerificationReport::new(
        "theorem2",
        format!("all systems of {k} partitions pairwise meeting to the identity and joining to the full relation, carriers 1..={max_size}"),
    );
    report.param("p", p);
    report.param("max_size", max_size);

    let mut total_closed = 0;
    let mut below = 0;
    for s in 1..=max_size {
        let mut parts: Vec<Partition> = Partition::all(s)
            .filter(|q| !q.is_discrete() && !q.is_indiscrete())
            .collect();
        parts.sort_by(Partition::canonical_cmp);
        let systems = atom_systems(&parts, k);
        let verdicts: Vec<Result<bool>> = systems
            .par_iter()
            .map(|sys| {
                let atoms: Vec<Partition> = sys.iter().map(|&i| parts[i].clone()).collect();
                is_closed_system(s, &atoms)
            })
            .collect();
        let mut closed = Vec::new();
        for (sys, v) in systems.iter().zip(verdicts) {
            if v? {
                closed.push(ClosedSystem {
                    size: s,
                    atoms: sys.iter().map(|&i| parts[i].clone()).collect(),
                });
            }
        }
        report.summary.push(serde_json::json!({
            "size": s,
            "partitions": parts.len() + if s > 1 { 2 } else { 1 },
            "compatible_pairs": pair_count(&parts),
            "candidate_systems": systems.len(),
            "closed_systems": closed.len(),
        }));
        if s < 2 * p {
            below += closed.len();
        }
        total_closed += closed.len();
        report.findings.extend(closed);
    }

    // full closure route on every closed system: equal to the generated
    // sublattice and a fixed point of the closure operator
    let mut fixed_point_failures = 0;
    for sys in &report.findings {
        let closure = galois_closure(sys.size, &sys.atoms)?;
        let again = galois_closure(sys.size, &closure.partitions)?;
        if closure.partitions != generated_sublattice(sys.size, &sys.atoms)?
            || again.partitions != closure.partitions
        {
            fixed_point_failures += 1;
        }
    }
    report.count("closed_systems", total_closed);
    report.count("closed_below_2p", below);
    report.count("fixed_point_failures", fixed_point_failures);

    report.counterexamples = report
        .findings
        .iter()
        .filter(|c| c.size < 2 * p)
        .cloned()
        .collect();
    report.fail_unless(below == 0, format!("a Galois-closed M_{k} system exists below {} points", 2 * p));
    report.fail_unless(fixed_point_failures == 0, "a closed system is not a closure fixed point");

    if max_size >= 2 * p {
        let (_, con) = minimal_representation(p)?;
        let witness: Vec<Partition> = con
            .partitions
            .iter()
            .filter(|q| !q.is_discrete() && !q.is_indiscrete())
            .cloned()
            .collect();
        let mut sorted = witness.clone();
        sorted.sort_by(Partition::canonical_cmp);
        let found = report
            .findings
            .iter()
            .any(|c| c.size == 2 * p && c.atoms == sorted);
        report.witnesses.push(serde_json::json!({
            "source": format!("congruences of the regular D_{} set", 2 * p),
            "size": 2 * p,
            "atoms": sorted,
            "found_in_sweep": found,
        }));
        let at_2p = report.findings.iter().filter(|c| c.size == 2 * p).count();
        report.count("closed_at_2p", at_2p);
        report.fail_unless(at_2p > 0 && found, format!("regular D_{} system not found closed", 2 * p));
    }
    report.timing_ms = elapsed_ms(start);
    Ok(report)
}
