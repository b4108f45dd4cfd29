//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use common::{congruences_by_filter, coset_partition, congruence_set, element_set, set_partitions, subgroups_by_subsets};
use mnlab::congruence::{all_congruences, congruences_oracle, gset_algebra};
use mnlab::constructions::{catalog, coset_action};
use mnlab::lattice::is_order_isomorphism;
use mnlab::perm::{all_subgroups, cosets, SubgroupSystem};
use mnlab::verify::{check_lemma, check_theorem1, check_theorem2, minimal_representation, odd_prime_boundary};
use mnlab::{Partition, UnaryAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("took {t:.2?}, limit {limit:?}"));
    }
    Ok(t)
}

fn witness_p3_via_cli() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let alg = dir.path().join("w3.algebra");
    let rep = dir.path().join("con.json");
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_mnlab");
    let w = Command::new(bin).arg("witness").args(["--p", "3", "--out"]).arg(&alg).status().map_err(|e| e.to_string())?;
    ensure!(w.code() == Some(0), "witness exited {w}");
    let c = Command::new(bin).arg("con").arg(&alg).arg("--oracle").arg("--out").arg(&rep).status().map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(1))?;
    ensure!(c.code() == Some(0), "con exited {c}");
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    ensure!(r["size"] == 6, "carrier size {}", r["size"]);
    ensure!(r["congruences"].as_array().map(Vec::len) == Some(6), "congruence count {}", r["lattice"]["size"]);
    ensure!(r["lattice"]["shape"] == "M_n" && r["lattice"]["n"] == 4, "shape {} n={}", r["lattice"]["shape"], r["lattice"]["n"]);
    ensure!(r["oracle"]["agrees"] == true, "oracle disagrees");
    Ok(format!("size 6, |Con| = 6, M_4, oracle identical ({t:.2?})"))
}

fn witness_family() -> Outcome {
    let start = Instant::now();
    for p in [2usize, 3, 5, 7, 11] {
        let (alg, con) = minimal_representation(p).map_err(|e| e.to_string())?;
        ensure!(alg.size() == 2 * p, "p={p}: carrier {}", alg.size());
        ensure!(con.len() == p + 3, "p={p}: |Con| = {}", con.len());
        ensure!(con.lattice.atoms().len() == p + 1, "p={p}: {} atoms", con.lattice.atoms().len());
        ensure!(con.lattice.height() == 2, "p={p}: height {}", con.lattice.height());
        if p <= 5 {
            let brute = congruences_oracle(&alg).map_err(|e| e.to_string())?;
            ensure!(brute.partitions == con.partitions, "p={p}: oracle disagrees");
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("p in {{2,3,5,7,11}} give M_{{p+1}} on 2p points ({t:.2?})"))
}

fn lemma_sweep() -> Outcome {
    let start = Instant::now();
    let rep = check_lemma(24).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(300))?;
    let hits: Vec<_> = rep.findings.iter().filter(|f| f.hypothesis).collect();
    ensure!(rep.passed(), "report status {:?}", rep.status);
    ensure!(hits.len() >= 3, "only {} hits", hits.len());
    ensure!(rep.counts["conclusion_violations"] == 0, "violations {}", rep.counts["conclusion_violations"]);
    for (name, n) in [("Klein", 3), ("D_6", 4)] {
        ensure!(
            hits.iter().any(|f| f.group == name && f.subgroup_order == 1 && f.n == n),
            "no {name}/trivial hit"
        );
    }
    ensure!(
        hits.iter().all(|f| f.conclusions.two_index2_intermediates && f.conclusions.rotation_simple),
        "a hit misses the index-2 or simplicity condition"
    );
    Ok(format!("{} hits over {} groups, 0 violations ({t:.2?})", hits.len(), rep.counts["groups"]))
}

fn theorem1_p2() -> Outcome {
    let start = Instant::now();
    let rep = check_theorem1(2, 5).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(120))?;
    ensure!(rep.findings.len() == 1, "{} hits", rep.findings.len());
    let h = &rep.findings[0];
    ensure!(
        h.regular && h.order == 4 && h.dihedral_m == Some(2) && h.degree == 4,
        "hit {h:?}"
    );
    ensure!(rep.passed(), "report status {:?}", rep.status);
    Ok(format!("exactly one hit: regular Klein on 4 points ({t:.2?})"))
}

fn theorem1_p3() -> Outcome {
    let start = Instant::now();
    let rep = check_theorem1(3, 7).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(900))?;
    ensure!(!rep.findings.is_empty(), "no hits at all");
    ensure!(
        rep.findings.iter().all(|h| h.regular && h.order == 6 && h.dihedral_m == Some(3) && h.degree == 6),
        "a hit is not the regular S_3 action"
    );
    let d7 = rep.summary.iter().find(|s| s["degree"] == 7).ok_or("no degree-7 summary")?;
    ensure!(d7["mode"] == "2-generator sweep", "degree-7 mode {}", d7["mode"]);
    ensure!(
        d7["assumption"].as_str().is_some_and(|a| a.contains("two elements")),
        "degree-7 assumption missing"
    );
    ensure!(rep.passed(), "report status {:?}", rep.status);
    Ok(format!("{} hits, all regular D_6 on 6 points; degree 7 labelled ({t:.2?})", rep.findings.len()))
}

fn theorem2_p3() -> Outcome {
    let start = Instant::now();
    let rep = check_theorem2(3, 6).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(300))?;
    let closed = |s: u64| {
        rep.summary
            .iter()
            .find(|v| v["size"] == s)
            .and_then(|v| v["closed_systems"].as_u64())
    };
    ensure!(closed(4) == Some(0), "size 4: {:?}", closed(4));
    ensure!(closed(5) == Some(0), "size 5: {:?}", closed(5));
    ensure!(closed(6).is_some_and(|c| c >= 1), "size 6: {:?}", closed(6));
    ensure!(rep.passed(), "report status {:?}", rep.status);
    Ok(format!("closed systems 0 / 0 / {} at sizes 4 / 5 / 6 ({t:.2?})", closed(6).unwrap()))
}

fn boundary() -> Outcome {
    let start = Instant::now();
    let b = odd_prime_boundary().map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(1))?;
    ensure!(b.size == 3 && b.closed, "Eq(3) atoms not closed: {b:?}");
    ensure!(b.closure_size == 5 && b.closure_shape_n == Some(3), "closure {b:?}");
    Ok(format!("Eq(3) atoms closed, closure M_3 ({t:.2?})"))
}

fn random_algebra(rng: &mut ChaCha8Rng) -> UnaryAlgebra {
    let n = rng.gen_range(1..=7);
    let k = rng.gen_range(0..=3);
    let ops = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..n as u32)).collect()).collect();
    UnaryAlgebra::new(n, ops).unwrap()
}

fn property_suites() -> Outcome {
    let start = Instant::now();

    let mut rng = ChaCha8Rng::seed_from_u64(0x4d6e);
    for i in 0..200 {
        let alg = random_algebra(&mut rng);
        let got = congruence_set(&alg);
        ensure!(got == congruences_by_filter(alg.size(), alg.ops()), "random algebra {i}: {alg:?}");
        let lib_oracle: BTreeSet<Vec<usize>> = congruences_oracle(&alg)
            .unwrap()
            .partitions
            .iter()
            .map(common::labels_of)
            .collect();
        ensure!(got == lib_oracle, "random algebra {i}: library oracle differs");
    }

    let cat = catalog(24).map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for (name, g) in &cat {
        let sys = SubgroupSystem::enumerate(g).map_err(|e| e.to_string())?;
        for h in 0..sys.len() {
            let hg = sys.group(h);
            let act = coset_action(g, &hg).map_err(|e| e.to_string())?;
            let con = all_congruences(&gset_algebra(&act.action)).map_err(|e| e.to_string())?;
            let reps: Vec<_> = cosets(g, &hg).unwrap().into_iter().map(|c| c.representative).collect();
            let members = sys.interval(h);
            ensure!(members.len() == con.len(), "{name}: |I| = {} but |Con| = {}", members.len(), con.len());
            let map: Option<Vec<usize>> = members
                .iter()
                .map(|&k| con.position(&coset_partition(&reps, &sys.group(k))))
                .collect();
            let map = map.ok_or_else(|| format!("{name}: a coset partition is not a congruence"))?;
            ensure!(
                is_order_isomorphism(&sys.interval_lattice(h), &con.lattice, &map),
                "{name}: interval and Con are not isomorphic"
            );
            pairs += 1;
        }
        let ours: BTreeSet<_> = all_subgroups(g).unwrap().iter().map(element_set).collect();
        ensure!(ours == subgroups_by_subsets(g), "{name}: subgroup lists differ");
    }

    for n in 0..=5 {
        let parts: Vec<Partition> = set_partitions(n).iter().map(|l| Partition::from_labels(l)).collect();
        for a in &parts {
            for b in &parts {
                ensure!(a.meet(&a.join(b)) == *a && a.join(&a.meet(b)) == *a, "absorption fails at {a} / {b}");
                ensure!(a.meet(b) == b.meet(a) && a.join(b) == b.join(a), "commutativity fails at {a} / {b}");
                ensure!(a.refines(b) == (a.meet(b) == *a), "order and meet disagree at {a} / {b}");
                for c in &parts {
                    ensure!(a.meet(&b.meet(c)) == a.meet(b).meet(c), "meet associativity fails");
                    ensure!(a.join(&b.join(c)) == a.join(b).join(c), "join associativity fails");
                }
            }
        }
    }

    let t = within(start, Duration::from_secs(300))?;
    Ok(format!(
        "200 random algebras, {pairs} coset pairs over {} groups, subgroup oracle, partition axioms to size 5 ({t:.2?})",
        cat.len()
    ))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, witness_p3_via_cli),
        (2, witness_family),
        (3, lemma_sweep),
        (4, theorem1_p2),
        (5, theorem1_p3),
        (6, theorem2_p3),
        (7, boundary),
        (8, property_suites),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS — {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL — {why}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
