use super::{elapsed_ms, VerificationReport};
use crate::constructions::{catalog, CATALOG_BOUND};
use crate::perm::{group_closure, is_dihedral, is_prime, is_simple, quotient, PermGroup, SubgroupSystem};
use crate::par::*;
use crate::Result;
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaConclusions {
    pub h_normal: bool,
    pub quotient_dihedral_m: Option<usize>,
    pub n_eq_p_plus_1: bool,
    pub two_index2_intermediates: bool,
    /// Every cyclic subgroup of index 2 in the quotient is simple of prime order.
    pub rotation_simple: bool,
}

impl LemmaConclusions {
    pub fn all_hold(&self) -> bool {
        self.h_normal
            && self.quotient_dihedral_m.is_some()
            && self.n_eq_p_plus_1
            && self.two_index2_intermediates
            && self.rotation_simple
    }
}

/// One subgroup `H` of a catalog group `G` with `I[H,G] ≅ M_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaFinding {
    pub group: String,
    pub group_order: usize,
    /// Positions of `H`'s elements in `G`'s canonical element order.
    pub subgroup: Vec<usize>,
    pub subgroup_order: usize,
    pub n: usize,
    pub index: usize,
    /// `[G:H] < 2n`.
    pub hypothesis: bool,
    pub index2_intermediates: usize,
    pub conclusions: LemmaConclusions,
}

fn rotation_subgroups_simple(q: &PermGroup, m: usize) -> Result<bool> {
    for r in q.elements().iter().filter(|x| x.order() == m) {
        let rot = group_closure(q.degree(), std::slice::from_ref(r))?;
        if !is_prime(rot.order()) || !is_simple(&rot)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sweep_group(name: &str, g: &PermGroup) -> Result<(usize, Vec<LemmaFinding>)> {
    let sys = SubgroupSystem::enumerate(g)?;
    let mut out = Vec::new();
    for h in 0..sys.len() {
        let Some(n) = sys.interval_lattice(h).detect_mn() else {
            continue;
        };
        let sub = &sys.subgroups()[h];
        let index = sys.index(h);
        let index2 = sys
            .interval(h)
            .into_iter()
            .filter(|&k| sys.subgroups()[k].order() == 2 * sub.order() && sys.index(k) > 1)
            .count();
        let h_normal = sys.table().is_normal(sub);
        let (quotient_dihedral_m, rotation_simple) = if h_normal {
            let q = quotient(g, &sys.group(h))?;
            match is_dihedral(&q) {
                Some(m) => (Some(m), rotation_subgroups_simple(&q, m)?),
                None => (None, false),
            }
        } else {
            (None, false)
        };
        let n_eq_p_plus_1 = quotient_dihedral_m.is_some_and(|m| is_prime(m) && n == m + 1);
        out.push(LemmaFinding {
            group: name.to_string(),
            group_order: g.order(),
            subgroup: sub.elements.iter().collect(),
            subgroup_order: sub.order(),
            n,
            index,
            hypothesis: index < 2 * n,
            index2_intermediates: index2,
            conclusions: LemmaConclusions {
                h_normal,
                quotient_dihedral_m,
                n_eq_p_plus_1,
                two_index2_intermediates: index2 >= 2,
                rotation_simple,
            },
        });
    }
    Ok((sys.len(), out))
}

/// For every catalog group `G` and subgroup `H` with `I[H,G] ≅ M_n` and
/// `[G:H] < 2n`, checks that `H` is normal, `G/H` is dihedral `D_2m` with
/// `m` prime and `n = m+1`, at least two intermediates have index 2 over
/// `H`, and the rotation subgroup of the quotient is simple. Also checks the
/// counting bound: with fewer than two index-2 intermediates, `[G:H] ≥ 2n`.
pub fn check_lemma(max_order: usize) -> Result<VerificationReport<LemmaFinding>> {
    let start = Instant::now();
    if max_order > CATALOG_BOUND {
        return Err(crate::Error::SizeBound {
            size: max_order,
            bound: CATALOG_BOUND,
        });
    }
    let cat = catalog(max_order)?;
    let mut report = VerificationReport::new(
        "lemma",
        format!(
            "curated catalog of regular representations (cyclic, dihedral, S_3, S_4, A_4, Klein, Q_8 \
             and direct products of two nontrivial members) of order <= {max_order}; not all finite groups"
        ),
    );
    report.param("max_order", max_order);

    let per_group: Vec<Result<(usize, Vec<LemmaFinding>)>> = cat
        .par_iter()
        .map(|(name, g)| sweep_group(name, g))
        .collect();
    let mut subgroup_pairs = 0;
    let mut findings = Vec::new();
    for r in per_group {
        let (count, f) = r?;
        subgroup_pairs += count;
        findings.extend(f);
    }
    findings.sort_by(|a, b| (&a.group, &a.subgroup).cmp(&(&b.group, &b.subgroup)));

    let hits: Vec<&LemmaFinding> = findings.iter().filter(|f| f.hypothesis).collect();
    let violations: Vec<LemmaFinding> = hits
        .iter()
        .filter(|f| !f.conclusions.all_hold())
        .map(|f| (*f).clone())
        .collect();
    let bound_cases: Vec<&LemmaFinding> =
        findings.iter().filter(|f| f.index2_intermediates < 2).collect();
    let bound_violations: Vec<LemmaFinding> = bound_cases
        .iter()
        .filter(|f| f.index < 2 * f.n)
        .map(|f| (*f).clone())
        .collect();

    report.count("groups", cat.len());
    report.count("subgroup_pairs", subgroup_pairs);
    report.count("mn_intervals", findings.len());
    report.count("hypothesis_hits", hits.len());
    report.count("conclusion_violations", violations.len());
    report.count("counting_bound_cases", bound_cases.len());
    report.count("counting_bound_violations", bound_violations.len());
    for f in &hits {
        report.witnesses.push(serde_json::json!({
            "group": f.group,
            "subgroup_order": f.subgroup_order,
            "n": f.n,
            "index": f.index,
            "quotient": f.conclusions.quotient_dihedral_m.map(|m| format!("D_{}", 2 * m)),
        }));
    }
    report.fail_unless(violations.is_empty(), "a hypothesis-satisfying interval breaks a conclusion");
    report.fail_unless(
        bound_violations.is_empty(),
        "an M_n interval with fewer than two index-2 intermediates has index below 2n",
    );
    report.counterexamples = violations;
    report.counterexamples.extend(bound_violations);
    report.findings = findings;
    report.timing_ms = elapsed_ms(start);
    Ok(report)
}
