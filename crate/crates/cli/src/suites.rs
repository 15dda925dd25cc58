//! Verification suites over batches of instances, run in parallel and reported in
//! instance order. Used by `mtorsion selftest` and by the acceptance tests.

use std::fmt;

use matroid_torsion::poset::verify_poset_against_matroid;
use matroid_torsion::{
    bibby_series, build_poset, check_deletion_contraction, check_tutte_f_identity, elliptic_tutte,
    verify_hilbert_tutte, verify_simplicial, CheckReport, EllipticArrangement, Error, Outcome, RMatrix,
    RealizedMatroid, Result, RingKind,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::generator::Generator;
use crate::instance::InstanceSpec;

/// Seed behind the fixed instance batches of the acceptance run.
pub const ACCEPTANCE_SEED: u64 = 20_160_623;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub matrix: RMatrix,
    pub matroid: RealizedMatroid,
}

impl Instance {
    pub fn new(name: String, matrix: RMatrix) -> Self {
        let matroid = RealizedMatroid::realize(&matrix).expect("generated matrices have rows");
        Instance { name, matrix, matroid }
    }

    /// One-line JSON instance, enough to reproduce a failure.
    pub fn describe(&self) -> String {
        let spec = InstanceSpec::from_matrix(&self.matrix);
        format!("{} {}", self.name, serde_json::to_string(&spec).expect("instance serializes"))
    }
}

/// `count` random matrices, cycling through `rings`.
pub fn random_instances(seed: u64, count: usize, rings: &[RingKind]) -> Vec<Instance> {
    let mut g = Generator::new(seed);
    (0..count)
        .map(|k| {
            let ring = rings[k % rings.len()];
            Instance::new(format!("{} #{k}", ring.name()), g.matrix(ring))
        })
        .collect()
}

pub fn unimodular_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut g = Generator::new(seed);
    (0..count).map(|k| Instance::new(format!("unimodular #{k}"), g.unimodular())).collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub instances: usize,
    pub passed_checks: usize,
    pub skipped_checks: usize,
    /// Instances whose poset or torsion exceeded the enumeration limits.
    pub over_budget: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} instances, {} checks passed, {} skipped, {} over budget",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.instances,
            self.passed_checks,
            self.skipped_checks,
            self.over_budget
        )?;
        for line in &self.failures {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

fn is_budget(e: &Error) -> bool {
    matches!(e, Error::TorsionTooLarge { .. } | Error::NodeBudgetExceeded { .. } | Error::GroundTooLarge { .. })
}

pub fn run_suite<F>(name: &str, instances: &[Instance], check: F) -> SuiteResult
where
    F: Fn(&Instance) -> Result<CheckReport> + Sync,
{
    let reports: Vec<Result<CheckReport>> = instances.par_iter().map(&check).collect();
    let mut out = SuiteResult { name: name.to_string(), instances: instances.len(), ..Default::default() };
    for (inst, report) in instances.iter().zip(reports) {
        match report {
            Ok(r) => {
                for item in &r.items {
                    match &item.outcome {
                        Outcome::Pass => out.passed_checks += 1,
                        Outcome::Skipped(_) => out.skipped_checks += 1,
                        Outcome::Fail(why) => out.failures.push(format!("{}: {}: {why}", inst.describe(), item.label)),
                    }
                }
            }
            Err(e) if is_budget(&e) => out.over_budget += 1,
            Err(e) => out.failures.push(format!("{}: {e}", inst.describe())),
        }
    }
    out
}

pub fn deletion_contraction(instances: &[Instance]) -> SuiteResult {
    run_suite("deletion-contraction", instances, |i| check_deletion_contraction(&i.matroid))
}

pub fn tutte_f_identity(instances: &[Instance]) -> SuiteResult {
    run_suite("Tutte polynomial specializes to the f-polynomial", instances, |i| check_tutte_f_identity(&i.matroid))
}

/// Boolean lower intervals, component count, isomorphic components and rank counts.
pub fn poset_structure(instances: &[Instance]) -> SuiteResult {
    run_suite("poset of torsions structure", instances, |i| {
        let p = build_poset(&i.matroid)?;
        let mut report = CheckReport::new("poset");
        report.merge(verify_simplicial(&p));
        report.merge(verify_poset_against_matroid(&i.matroid, &p)?);
        Ok(report)
    })
}

pub fn hilbert_tutte(instances: &[Instance]) -> SuiteResult {
    run_suite("face module Hilbert series from the Tutte polynomial", instances, |i| verify_hilbert_tutte(&i.matroid))
}

/// The multiplicity sum agrees with the Grothendieck evaluation and the series is a polynomial.
pub fn elliptic(instances: &[Instance]) -> SuiteResult {
    run_suite("elliptic arrangements", instances, |i| {
        let e = EllipticArrangement::new(i.matrix.clone())?;
        let mut report = CheckReport::new("elliptic");
        elliptic_tutte(&e)?;
        report.push("multiplicity sum equals the Grothendieck evaluation", Outcome::Pass);
        bibby_series(&e)?;
        report.push("series has no negative powers of t", Outcome::Pass);
        Ok(report)
    })
}

/// Every suite on freshly generated instances.
pub fn selftest(seed: u64, count: usize) -> Vec<SuiteResult> {
    let general = random_instances(seed, count, &[RingKind::Integers, RingKind::Gaussian, RingKind::Eisenstein]);
    let cm =
        random_instances(seed ^ 0x9e37_79b9, count, &[RingKind::Gaussian, RingKind::Eisenstein, RingKind::Integers]);
    vec![
        deletion_contraction(&general),
        tutte_f_identity(&general),
        poset_structure(&general),
        hilbert_tutte(&general),
        elliptic(&cm),
    ]
}
