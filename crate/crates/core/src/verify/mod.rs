//! Verification sweeps over finite search spaces, each producing a
//! [`VerificationReport`].
//!
//! * [`check_lemma`]: intervals `I[H,G] ≅ M_n` of small index in the group
//!   catalog must come from a dihedral quotient `G/H ≅ D_2p` with `n = p+1`.
//! * [`check_theorem1`]: every faithful transitive action of degree below
//!   `2(p+1)` whose congruence lattice is `M_{p+1}` is the regular `D_2p`.
//! * [`check_theorem2`]: no partition system on fewer than `2p` points is
//!   Galois-closed with shape `M_{p+1}` (for `p = 3`).
//! * [`minimal_representation`]: the regular `D_2p`-set with its lattice.

mod lemma;
mod theorem1;
mod theorem2;
mod witness;

pub use lemma::{check_lemma, LemmaConclusions, LemmaFinding};
pub use theorem1::{check_theorem1, conjugacy_class_representatives, TransitiveHit, SLOW_DEGREE};
pub use theorem2::{check_theorem2, odd_prime_boundary, BoundaryCheck, ClosedSystem};
pub use witness::minimal_representation;

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport<F> {
    pub format: u32,
    pub sweep: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    /// What the sweep ranged over.
    pub domain: String,
    pub notes: Vec<String>,
    pub counts: BTreeMap<String, u64>,
    /// Per-slice breakdown (degrees, carrier sizes).
    pub summary: Vec<serde_json::Value>,
    pub findings: Vec<F>,
    pub witnesses: Vec<serde_json::Value>,
    pub counterexamples: Vec<F>,
    pub timing_ms: u64,
}

impl<F: Serialize> VerificationReport<F> {
    pub(crate) fn new(sweep: &str, domain: String) -> Self {
        Self {
            format: crate::io::FORMAT_VERSION,
            sweep: sweep.to_string(),
            params: BTreeMap::new(),
            status: Status::Pass,
            domain,
            notes: Vec::new(),
            counts: BTreeMap::new(),
            summary: Vec::new(),
            findings: Vec::new(),
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            timing_ms: 0,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Serialize) {
        self.params
            .insert(key.to_string(), serde_json::to_value(value).expect("serialisable"));
    }

    pub(crate) fn count(&mut self, key: &str, value: usize) {
        self.counts.insert(key.to_string(), value as u64);
    }

    pub(crate) fn fail_unless(&mut self, ok: bool, why: impl Into<String>) {
        if !ok {
            self.status = Status::Fail;
            self.notes.push(format!("FAIL: {}", why.into()));
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable");
        s.push('\n');
        s
    }

    /// The report with its timing zeroed, for reproducibility comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serialisable");
        v["timing_ms"] = serde_json::Value::from(0);
        serde_json::to_string_pretty(&v).expect("serialisable")
    }
}

pub(crate) fn elapsed_ms(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}
