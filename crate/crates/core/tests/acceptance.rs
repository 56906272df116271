//! The twelve acceptance criteria, one line each. Every comparison is exact:
//! counts, orders, distributions and printed strings must match verbatim.

use std::process::{Command, ExitCode};

use fano42::generalized::{generalized_build, DEFAULT_COMPONENT_CAP};
use fano42::report::{verify_all, Check, Verdict, VerificationReport};

const TITLES: [&str; 12] = [
    "G basics",
    "neighbours and weak colours of 1^a",
    "K4 and K222 census",
    "neighbourhoods",
    "automorphism group",
    "ultrahomogeneity",
    "reference family",
    "quotient",
    "configurations",
    "holes and tori",
    "determinism",
    "generalized builder",
];

const GOLDEN_4_1: &str = include_str!("golden/generalized_4_1.json");

fn describe(c: &Check) -> String {
    format!("{} (claimed {}, computed {})", c.id, c.claimed, c.computed)
}

fn from_report(report: &VerificationReport, k: u8) -> (bool, String) {
    let checks: Vec<&Check> = report.criterion(k).collect();
    let failed: Vec<String> = checks.iter().filter(|c| c.verdict == Verdict::Fail).map(|c| describe(c)).collect();
    let noted: Vec<&str> = checks
        .iter()
        .filter(|c| c.verdict == Verdict::DiscrepancyNoted)
        .map(|c| c.id.as_str())
        .collect();
    let mut detail = format!("{} checks", checks.len());
    if !noted.is_empty() {
        detail += &format!("; discrepancy noted: {}", noted.join(", "));
    }
    if !failed.is_empty() {
        detail += &format!("; failing: {}", failed.join("; "));
    }
    (report.criterion_passes(k), detail)
}

fn verify_json() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_fano42"))
        .args(["verify", "--json", "-"])
        .output()
        .expect("binary runs");
    out.stdout
}

fn determinism(report: &VerificationReport) -> (bool, String) {
    let (a, b) = (verify_json(), verify_json());
    let in_process = report.to_json() == verify_all().expect("verification runs").to_json();
    let ok = !a.is_empty() && a == b && in_process;
    (ok, format!("two CLI runs: {} bytes each, identical: {}; in-process identical: {in_process}", a.len(), a == b))
}

fn generalized(report: &VerificationReport) -> (bool, String) {
    let (fano_ok, fano) = from_report(report, 12);
    let render = || {
        let built = generalized_build(4, 1, DEFAULT_COMPONENT_CAP).expect("(4,1) builds");
        serde_json::to_string_pretty(&built.report).expect("serializes") + "\n"
    };
    let (first, second) = (render(), render());
    let ok = fano_ok && first == second && first == GOLDEN_4_1;
    (ok, format!("(3,1): {fano}; (4,1) stable: {}, matches golden: {}", first == second, first == GOLDEN_4_1))
}

fn main() -> ExitCode {
    let report = verify_all().expect("verification runs");
    let mut all = true;
    for (i, title) in TITLES.iter().enumerate() {
        let k = i as u8 + 1;
        let (ok, detail) = match k {
            11 => determinism(&report),
            12 => generalized(&report),
            _ => from_report(&report, k),
        };
        all &= ok;
        println!("{} criterion {k:>2} {title}: {detail} [tolerance: exact]", if ok { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
