//! Acceptance run: one PASS/FAIL line per criterion. Instance batches are fixed by
//! `ACCEPTANCE_SEED`; all comparisons are exact.

mod oracles;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use matroid_torsion::poset::{posets_isomorphic, PosetNode};
use matroid_torsion::{
    bibby_series, build_poset, face_module_hilbert, grothendieck_tutte, numeric_f_h, phi_tilde, poset_components,
    tutte_numeric, verify_hilbert_tutte, EllipticArrangement, HilbertSeries, IntPoly, ModuleClass, RMatrix,
    RealizedMatroid, RingElement, RingKind, Subset, SubsetTable, TorsionPoset,
};
use matroid_torsion_cli::suites::{self, random_instances, unimodular_instances, Instance, ACCEPTANCE_SEED};
use num_bigint::BigInt;

const GOLDEN_TIME_LIMIT: Duration = Duration::from_secs(1);
const DELETION_CONTRACTION_TIME_LIMIT: Duration = Duration::from_secs(30);
const RANDOM_INSTANCES: usize = 200;
const ORACLE_INSTANCES: usize = 50;

struct Verdict {
    ok: bool,
    detail: String,
}

impl Verdict {
    fn from_suite(r: &suites::SuiteResult, extra_ok: bool, extra: String) -> Self {
        let mut detail = format!(
            "{} instances, {} checks passed, {} skipped, {} over budget{extra}",
            r.instances, r.passed_checks, r.skipped_checks, r.over_budget
        );
        for f in r.failures.iter().take(5) {
            detail += &format!("\n    {f}");
        }
        Verdict { ok: r.passed() && extra_ok, detail }
    }
}

fn gaussian(a: i64, b: i64) -> RingElement {
    RingElement::new(RingKind::Gaussian, a, b)
}

fn drawn_poset() -> TorsionPoset {
    let node = |e: &[usize]| PosetNode { set: Subset::from_elements(e.iter().copied()), dual: vec![] };
    let nodes =
        vec![node(&[]), node(&[0]), node(&[1]), node(&[1]), node(&[0, 1]), node(&[0, 1]), node(&[0, 1]), node(&[0, 1])];
    let covers = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 4), (2, 5), (3, 6), (3, 7)];
    TorsionPoset::from_parts(RingKind::Gaussian, vec![1, 2], nodes, &covers).unwrap()
}

fn golden() -> Verdict {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            problems.push(what.to_string());
        }
    };
    let matrix = RMatrix::from_rows(
        RingKind::Gaussian,
        vec![vec![gaussian(1, 0), gaussian(1, 1)], vec![gaussian(1, 1), gaussian(0, 0)]],
    )
    .unwrap();
    let m = RealizedMatroid::realize(&matrix).unwrap();
    let class = |a: &[usize]| m.subset_info(Subset::from_elements(a.iter().copied())).unwrap().0;
    expect(class(&[]) == ModuleClass::free(2), "M(∅) = R^2");
    expect(class(&[0]) == ModuleClass::free(1), "M(1) = R");
    expect(class(&[1]) == ModuleClass::from_cyclic(1, &[gaussian(1, 1)]).unwrap(), "M(2) = R ⊕ R/(1+i)");
    expect(class(&[0, 1]) == ModuleClass::from_cyclic(0, &[gaussian(2, 0)]).unwrap(), "M(12) = R/2");
    expect(tutte_numeric(&m).unwrap().to_string() == "x^2 + x + 2", "Tutte polynomial x^2 + x + 2");
    let (f, h) = numeric_f_h(&m).unwrap();
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    expect(f == ints(&[1, 3, 4]), "f = (1,3,4)");
    expect(h == ints(&[1, 1, 2]), "h = (1,1,2)");
    let p = build_poset(&m).unwrap();
    expect(p.len() == 8, "8 nodes");
    expect(poset_components(&p).len() == 1, "one component");
    expect(posets_isomorphic(&p, &drawn_poset()) == Some(true), "isomorphic to the drawn Hasse diagram");
    expect(
        face_module_hilbert(&p) == HilbertSeries::new(IntPoly::from_ints(&[1, 1, 2]), 2),
        "N(t) = (1+t+2t^2)/(1-t)^2",
    );
    expect(verify_hilbert_tutte(&m).unwrap().passed(), "Hilbert series identity");
    let elapsed = start.elapsed();
    expect(elapsed < GOLDEN_TIME_LIMIT, "runtime under 1 s");
    Verdict {
        ok: problems.is_empty(),
        detail: if problems.is_empty() { format!("{elapsed:.2?}") } else { format!("failed: {}", problems.join("; ")) },
    }
}

fn classical_degeneration() -> Verdict {
    let instances = unimodular_instances(ACCEPTANCE_SEED, ORACLE_INSTANCES);
    let mut failures = Vec::new();
    for inst in &instances {
        let t = grothendieck_tutte(&inst.matroid).unwrap();
        if !t.has_unit_coefficients() {
            failures.push(format!("{}: coefficients {t}", inst.describe()));
        }
        let expected = oracles::classical_tutte(&oracles::integer_entries(&inst.matrix));
        let found = phi_tilde(&t);
        if found != expected {
            failures.push(format!("{}: {found} vs corank-nullity {expected}", inst.describe()));
        }
    }
    listed(instances.len(), failures)
}

fn listed(count: usize, failures: Vec<String>) -> Verdict {
    let mut detail = format!("{count} instances, {} mismatches", failures.len());
    for f in failures.iter().take(5) {
        detail += &format!("\n    {f}");
    }
    Verdict { ok: failures.is_empty(), detail }
}

fn minors_oracle() -> Verdict {
    let instances = random_instances(ACCEPTANCE_SEED + 7, ORACLE_INSTANCES, &[RingKind::Integers]);
    let mut failures = Vec::new();
    let mut independent = 0;
    for inst in &instances {
        let table = SubsetTable::build(&inst.matroid).unwrap();
        let a = oracles::integer_entries(&inst.matrix);
        for (s, class, rk) in table.iter() {
            let elements: Vec<usize> = s.iter().collect();
            let (orank, order) = oracles::subset_data(&a, &elements);
            if orank == elements.len() {
                independent += 1;
            }
            if orank != rk || order != class.torsion_cardinality() {
                failures.push(format!(
                    "{}: set {s}: rank {rk}, |tor| {} vs minors rank {orank}, gcd {order}",
                    inst.describe(),
                    class.torsion_cardinality()
                ));
            }
        }
    }
    let mut v = listed(instances.len(), failures);
    v.detail = format!("{independent} independent sets; {}", v.detail);
    v
}

fn elliptic_branch() -> Verdict {
    let cm = random_instances(ACCEPTANCE_SEED + 11, ORACLE_INSTANCES, &[RingKind::Gaussian, RingKind::Eisenstein]);
    let integral = random_instances(ACCEPTANCE_SEED + 13, ORACLE_INSTANCES, &[RingKind::Integers]);
    let mut all: Vec<Instance> = cm.clone();
    all.extend(integral.iter().cloned());
    let suite = suites::elliptic(&all);
    let mut failures = Vec::new();
    for inst in &integral {
        let series = bibby_series(&EllipticArrangement::new(inst.matrix.clone()).unwrap()).unwrap();
        let toric = oracles::toric_series(&oracles::integer_entries(&inst.matrix));
        if series != toric {
            failures.push(format!("{}: {series} vs toric {toric}", inst.describe()));
        }
    }
    let extra =
        format!("; toric path agrees on {}/{} integer instances", integral.len() - failures.len(), integral.len());
    let mut v = Verdict::from_suite(&suite, failures.is_empty(), extra);
    for f in failures.iter().take(5) {
        v.detail += &format!("\n    {f}");
    }
    v
}

fn main() -> ExitCode {
    let instances = random_instances(ACCEPTANCE_SEED, RANDOM_INSTANCES, &[RingKind::Integers, RingKind::Gaussian]);
    let mut verdicts: Vec<(&str, Verdict)> = Vec::new();

    verdicts.push(("1 worked Gaussian example", golden()));

    let start = Instant::now();
    let dc = suites::deletion_contraction(&instances);
    let elapsed = start.elapsed();
    verdicts.push((
        "2 deletion-contraction on random instances",
        Verdict::from_suite(&dc, elapsed < DELETION_CONTRACTION_TIME_LIMIT, format!(", {elapsed:.2?}")),
    ));

    let tf = suites::tutte_f_identity(&instances);
    verdicts.push(("3 Tutte polynomial at y = 1 is the f-polynomial", Verdict::from_suite(&tf, true, String::new())));

    let ps = suites::poset_structure(&instances);
    let materialized = ps.instances - ps.over_budget;
    verdicts.push((
        "4 poset of torsions structure",
        Verdict::from_suite(&ps, materialized > 0, format!(", {materialized} materialized")),
    ));

    let hs = suites::hilbert_tutte(&instances);
    verdicts.push((
        "5 face module Hilbert series from the Tutte polynomial",
        Verdict::from_suite(&hs, true, String::new()),
    ));

    verdicts.push(("6 unimodular instances give the classical Tutte polynomial", classical_degeneration()));
    verdicts.push(("7 torsion orders equal gcds of minors over Z", minors_oracle()));
    verdicts.push(("8 elliptic arrangements", elliptic_branch()));

    let mut all_ok = true;
    for (name, v) in &verdicts {
        println!("criterion {name}: {} ({})", if v.ok { "PASS" } else { "FAIL" }, v.detail);
        all_ok &= v.ok;
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
