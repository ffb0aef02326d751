//! Claim verification harness.
//!
//! Each [`ClaimId`] names one statement about Hamiltonian digraphs. A claim is checked on instances, either constructed or drawn
//! from seeded random digraphs. Every instance ends up as a [`ClaimResult`]:
//! a pass, a failure with a self-contained [`Witness`], or vacuous when the
//! hypotheses do not hold.

mod claims;

use std::fmt::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::format::{parse_edge_list, render_edge_list};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Lemma31,
    Lemma32,
    Thm33Bijection,
    Thm34,
    Remark35,
    Thm36,
    Thm41Transfer,
    Lemma43,
    Lemma44,
    Thm45,
    Cor47,
    Cor48,
    Thm49,
    Thm410,
    Thm37Empirical,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::Lemma31,
        ClaimId::Lemma32,
        ClaimId::Thm33Bijection,
        ClaimId::Thm34,
        ClaimId::Remark35,
        ClaimId::Thm36,
        ClaimId::Thm41Transfer,
        ClaimId::Lemma43,
        ClaimId::Lemma44,
        ClaimId::Thm45,
        ClaimId::Cor47,
        ClaimId::Cor48,
        ClaimId::Thm49,
        ClaimId::Thm410,
        ClaimId::Thm37Empirical,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Lemma31 => "LEMMA_3_1",
            ClaimId::Lemma32 => "LEMMA_3_2",
            ClaimId::Thm33Bijection => "THM_3_3_BIJECTION",
            ClaimId::Thm34 => "THM_3_4",
            ClaimId::Remark35 => "REMARK_3_5",
            ClaimId::Thm36 => "THM_3_6",
            ClaimId::Thm41Transfer => "THM_4_1_TRANSFER",
            ClaimId::Lemma43 => "LEMMA_4_3",
            ClaimId::Lemma44 => "LEMMA_4_4",
            ClaimId::Thm45 => "THM_4_5",
            ClaimId::Cor47 => "COR_4_7",
            ClaimId::Cor48 => "COR_4_8",
            ClaimId::Thm49 => "THM_4_9",
            ClaimId::Thm410 => "THM_4_10",
            ClaimId::Thm37Empirical => "THM_3_7_EMPIRICAL",
        }
    }

    /// Empirical claims are reported but never fail a run.
    pub fn kind(self) -> ClaimKind {
        match self {
            ClaimId::Thm37Empirical => ClaimKind::Empirical,
            _ => ClaimKind::MustPass,
        }
    }

    fn index(self) -> u64 {
        ClaimId::ALL.iter().position(|&c| c == self).expect("listed") as u64
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for ClaimId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    MustPass,
    Empirical,
}

/// Claim-specific data attached to an instance digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceData {
    Plain,
    /// An arc to add, or the ends of a Hamiltonian path.
    Pair { u: usize, v: usize },
    /// The distinguished vertex of condition (M).
    Vertex { z0: usize },
    Set { set: VertexSet },
    PathWithVertex { path: Vec<usize>, x: usize },
    CycleWithVertex { cycle: Vec<usize>, x: usize },
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: usize,
    pub descr: String,
    pub digraph: Digraph,
    pub data: InstanceData,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

/// Everything needed to reproduce a failure without the generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Edge-list document of the instance digraph.
    pub digraph: String,
    pub data: InstanceData,
    pub reason: String,
}

impl Witness {
    /// Re-evaluates the claim on the recorded instance; `true` if it fails
    /// again.
    pub fn reproduces(&self, claim: ClaimId) -> Result<bool> {
        let instance = Instance {
            id: 0,
            descr: "witness".into(),
            digraph: parse_edge_list(&self.digraph)?,
            data: self.data.clone(),
        };
        Ok(claims::evaluate(claim, &instance).status == Status::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: ClaimId,
    pub instance_id: usize,
    pub instance_descr: String,
    pub status: Status,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<Witness>,
}

/// Outcome of evaluating one instance, before it is tied to an id.
pub(crate) struct Evaluation {
    pub status: Status,
    pub detail: String,
}

impl Evaluation {
    pub fn pass(detail: impl Into<String>) -> Self {
        Evaluation {
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Evaluation {
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    pub fn vacuous(detail: impl Into<String>) -> Self {
        Evaluation {
            status: Status::Vacuous,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub kind: ClaimKind,
    pub results: Vec<ClaimResult>,
    /// Instances whose hypotheses held.
    pub satisfied: usize,
    pub vacuous: usize,
    pub failed: usize,
}

impl ClaimReport {
    fn from_results(claim_id: ClaimId, mut results: Vec<ClaimResult>) -> Self {
        results.sort_by_key(|r| r.instance_id);
        let count = |s: Status| results.iter().filter(|r| r.status == s).count();
        let vacuous = count(Status::Vacuous);
        let failed = count(Status::Fail);
        ClaimReport {
            claim_id,
            kind: claim_id.kind(),
            satisfied: results.len() - vacuous,
            vacuous,
            failed,
            results,
        }
    }

    /// No failures and at least one instance with true hypotheses.
    pub fn passed(&self) -> bool {
        self.failed == 0 && !self.all_vacuous()
    }

    pub fn all_vacuous(&self) -> bool {
        self.satisfied == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides the per-claim number of random instances.
    pub samples: Option<usize>,
    /// Caps the order of random instances.
    pub max_order: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            samples: None,
            max_order: None,
        }
    }
}

impl VerifyConfig {
    pub fn with_seed(seed: u64) -> Self {
        VerifyConfig {
            seed,
            ..Self::default()
        }
    }
}

fn evaluate_all(claim: ClaimId, instances: &[Instance]) -> ClaimReport {
    let results = instances
        .par_iter()
        .map(|inst| {
            let eval = claims::evaluate(claim, inst);
            let witness = (eval.status == Status::Fail).then(|| Witness {
                digraph: render_edge_list(&inst.digraph),
                data: inst.data.clone(),
                reason: eval.detail.clone(),
            });
            ClaimResult {
                claim_id: claim,
                instance_id: inst.id,
                instance_descr: inst.descr.clone(),
                passed: eval.status == Status::Pass,
                status: eval.status,
                detail: eval.detail,
                witness,
            }
        })
        .collect();
    ClaimReport::from_results(claim, results)
}

/// Runs `claim` on its standard instances.
pub fn verify_claim(claim: ClaimId, config: &VerifyConfig) -> ClaimReport {
    let instances = claims::instances(claim, config);
    evaluate_all(claim, &instances)
}

/// Runs `claim` on caller-supplied instances.
pub fn verify_instances(claim: ClaimId, instances: &[Instance]) -> ClaimReport {
    evaluate_all(claim, instances)
}

/// The standard instances of `claim`, for inspection or replay.
pub fn claim_instances(claim: ClaimId, config: &VerifyConfig) -> Vec<Instance> {
    claims::instances(claim, config)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub claims: Vec<ClaimReport>,
}

impl SuiteReport {
    /// Every must-pass claim passed.
    pub fn must_pass_ok(&self) -> bool {
        self.claims
            .iter()
            .filter(|c| c.kind == ClaimKind::MustPass)
            .all(ClaimReport::passed)
    }

    /// One JSON object per instance result, then one summary object per
    /// claim.
    pub fn to_jsonl(&self) -> String {
        #[derive(Serialize)]
        struct Summary {
            record: &'static str,
            claim_id: ClaimId,
            kind: ClaimKind,
            seed: u64,
            satisfied: usize,
            vacuous: usize,
            failed: usize,
            passed: bool,
        }
        let mut out = String::new();
        for claim in &self.claims {
            for r in &claim.results {
                out.push_str(&serde_json::to_string(r).expect("serializable"));
                out.push('\n');
            }
        }
        for claim in &self.claims {
            let s = Summary {
                record: "summary",
                claim_id: claim.claim_id,
                kind: claim.kind,
                seed: self.seed,
                satisfied: claim.satisfied,
                vacuous: claim.vacuous,
                failed: claim.failed,
                passed: claim.passed(),
            };
            out.push_str(&serde_json::to_string(&s).expect("serializable"));
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = format!("seed {}\n", self.seed);
        for c in &self.claims {
            let verdict = if c.failed > 0 {
                "FAIL"
            } else if c.all_vacuous() {
                "VACUOUS"
            } else {
                "pass"
            };
            let kind = match c.kind {
                ClaimKind::MustPass => "must-pass",
                ClaimKind::Empirical => "empirical",
            };
            writeln!(
                out,
                "{:<18} {:<9} {:<7} satisfied {:>4}  vacuous {:>4}  failed {:>3}",
                c.claim_id.as_str(),
                kind,
                verdict,
                c.satisfied,
                c.vacuous,
                c.failed
            )
            .expect("String write");
            for r in c.results.iter().filter(|r| r.status == Status::Fail) {
                writeln!(out, "  failed #{} {}: {}", r.instance_id, r.instance_descr, r.detail)
                    .expect("String write");
            }
        }
        let must: Vec<_> = self
            .claims
            .iter()
            .filter(|c| c.kind == ClaimKind::MustPass)
            .collect();
        writeln!(
            out,
            "must-pass claims passed: {}/{}",
            must.iter().filter(|c| c.passed()).count(),
            must.len()
        )
        .expect("String write");
        out
    }
}

pub fn verify_suite(claims: &[ClaimId], config: &VerifyConfig) -> SuiteReport {
    SuiteReport {
        seed: config.seed,
        claims: claims.iter().map(|&c| verify_claim(c, config)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
        }
        assert_eq!("thm_3_4".parse::<ClaimId>().unwrap(), ClaimId::Thm34);
        assert_eq!(
            "BOGUS".parse::<ClaimId>(),
            Err(Error::UnknownClaim("BOGUS".into()))
        );
    }

    #[test]
    fn exactly_one_claim_is_empirical() {
        let empirical: Vec<_> = ClaimId::ALL
            .into_iter()
            .filter(|c| c.kind() == ClaimKind::Empirical)
            .collect();
        assert_eq!(empirical, vec![ClaimId::Thm37Empirical]);
    }

    #[test]
    fn all_vacuous_batches_do_not_pass() {
        let report = ClaimReport::from_results(ClaimId::Thm45, Vec::new());
        assert!(report.all_vacuous());
        assert!(!report.passed());
    }
}
