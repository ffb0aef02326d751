use hamconn::harness::{
    claim_instances, verify_claim, verify_instances, ClaimId, Instance, InstanceData, Status,
    VerifyConfig,
};
use hamconn::{Digraph, VertexSet};

#[test]
fn failures_carry_witnesses_that_reproduce() {
    // A directed path plus one arc is never Hamiltonian, so the Remark 3.5
    // evaluator must report a failure here.
    let bogus = Instance {
        id: 0,
        descr: "path".into(),
        digraph: Digraph::directed_path(5).unwrap(),
        data: InstanceData::Pair { u: 0, v: 2 },
    };
    let not_strong = Instance {
        id: 1,
        descr: "two components".into(),
        digraph: Digraph::new(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap(),
        data: InstanceData::Set {
            set: [0, 2].into_iter().collect(),
        },
    };
    let report = verify_instances(ClaimId::Remark35, std::slice::from_ref(&bogus));
    assert_eq!(report.failed, 1);
    let witness = report.results[0].witness.as_ref().unwrap();
    assert!(witness.reproduces(ClaimId::Remark35).unwrap());
    let json = serde_json::to_string(&report.results[0]).unwrap();
    let back: hamconn::harness::ClaimResult = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report.results[0]);

    let report = verify_instances(ClaimId::Thm49, &[not_strong]);
    assert_eq!(report.results[0].status, Status::Vacuous);
    assert!(report.results[0].witness.is_none());
}

#[test]
fn passing_results_have_no_witness() {
    let report = verify_claim(ClaimId::Thm34, &VerifyConfig::default());
    assert!(report.passed());
    assert!(report.results.iter().all(|r| r.passed && r.witness.is_none()));
}

#[test]
fn results_are_sorted_and_reproducible() {
    let config = VerifyConfig {
        seed: 3,
        samples: Some(40),
        max_order: None,
    };
    let a = verify_claim(ClaimId::Thm410, &config);
    let b = verify_claim(ClaimId::Thm410, &config);
    assert_eq!(a, b);
    assert!(a.results.windows(2).all(|w| w[0].instance_id < w[1].instance_id));
    let other = verify_claim(ClaimId::Thm410, &VerifyConfig { seed: 4, ..config });
    assert_ne!(a.results, other.results);
}

#[test]
fn vacuous_batches_are_flagged() {
    let config = VerifyConfig {
        max_order: Some(6),
        ..VerifyConfig::default()
    };
    let report = verify_claim(ClaimId::Thm37Empirical, &config);
    assert!(report.all_vacuous());
    assert!(!report.passed());
}

#[test]
fn meyniel_instances_respect_their_generators() {
    let config = VerifyConfig::with_seed(11);
    for inst in claim_instances(ClaimId::Thm410, &config) {
        let InstanceData::Set { set } = inst.data else {
            panic!("set expected");
        };
        assert!(set.len() >= 2, "{}", inst.descr);
        assert!(set.is_subset(inst.digraph.vertices()));
    }
    for inst in claim_instances(ClaimId::Thm49, &config) {
        let InstanceData::Set { set } = inst.data else {
            panic!("set expected");
        };
        assert_ne!(set, VertexSet::EMPTY);
    }
}
