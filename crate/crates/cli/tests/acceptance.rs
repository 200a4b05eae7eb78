//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

use deltaring::analysis;
use deltaring::classify::{self, Mode};
use deltaring::constructions::{matrix_index, quotient};
use deltaring::harness::{default_corpus, DEFAULT_MANIFEST};
use deltaring::ring::DEFAULT_CAPACITY;
use deltaring::{build, FiniteRing, Structure};

const FAST: Duration = Duration::from_secs(1);
const SUITE_BUDGET: Duration = Duration::from_secs(300);

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltaring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

type Verdict = Result<String, String>;

fn expect(ok: bool, detail: String) -> Verdict {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_1() -> Verdict {
    let started = Instant::now();
    let t2 = build("T(2, Z2)").unwrap();
    let qp = classify::is_delta_quasipolar(&t2);
    let abelian = classify::is_abelian(&t2);
    let uc = classify::is_uniquely_clean(&t2);
    let elapsed = started.elapsed();
    expect(
        qp && !abelian && !uc && elapsed < FAST,
        format!("Δ-qp {qp}, abelian {abelian}, uniquely clean {uc}, {elapsed:?} (limit {FAST:?})"),
    )
}

fn criterion_2() -> Verdict {
    let started = Instant::now();
    let z2 = build("Z2").unwrap();
    let t2 = build("T(2, Z2)").unwrap();
    let delta: BTreeSet<usize> = analysis::delta(&t2).iter().collect();
    let zero = matrix_index(&t2, &[vec![0, 0], vec![0, 0]]).unwrap();
    let e12 = matrix_index(&t2, &[vec![0, 1], vec![0, 0]]).unwrap();
    let dz2: Vec<usize> = analysis::delta(&z2).iter().collect();
    let mut formula = BTreeSet::new();
    for &a in &dz2 {
        for &d in &dz2 {
            for b in z2.elements() {
                formula.insert(matrix_index(&t2, &[vec![a, b], vec![0, d]]).unwrap());
            }
        }
    }
    let elapsed = started.elapsed();
    let expected = BTreeSet::from([zero, e12]);
    expect(
        delta == expected && delta == formula && elapsed < FAST,
        format!("Δ = {delta:?}, {{0, E12}} = {expected:?}, D_2(Δ) + J_2 = {formula:?}, {elapsed:?}"),
    )
}

fn criterion_3() -> Verdict {
    let t2 = build("T(2, Z2)").unwrap();
    let a = matrix_index(&t2, &[vec![1, 1], vec![0, 0]]).unwrap();
    let e11 = matrix_index(&t2, &[vec![1, 0], vec![0, 0]]).unwrap();
    let out = cli(&["spectral", "T(2, Z2)", "--element", &a.to_string()]);
    let got: BTreeSet<usize> = json(&out)["idempotents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    let expected = BTreeSet::from([a, e11]);
    expect(
        got == expected,
        format!("spectral([[1,1],[0,0]] = {a}) = {got:?}, expected {expected:?}"),
    )
}

fn criterion_4() -> Verdict {
    let m2 = build("M(2, Z2)").unwrap();
    let out = cli(&["classify", "M(2, Z2)"]);
    let report = json(&out);
    let qp = report["delta_quasipolar"].as_bool().unwrap();
    let Some(w) = report["witnesses"]["delta_quasipolar"][0].as_u64() else {
        return Err(format!("Δ-qp {qp}, no witness reported"));
    };
    let w = w as usize;
    // Re-verify from the definitions with plain loops.
    let n = m2.size();
    let is_unit = |x: usize| (0..n).any(|y| m2.mul(x, y) == m2.one() && m2.mul(y, x) == m2.one());
    let units: Vec<usize> = (0..n).filter(|&x| is_unit(x)).collect();
    let in_delta = |x: usize| units.iter().all(|&u| is_unit(m2.add(x, u)));
    let commutes = |x: usize, y: usize| m2.mul(x, y) == m2.mul(y, x);
    let admissible: Vec<usize> = (0..n)
        .filter(|&p| {
            m2.mul(p, p) == p
                && (0..n).filter(|&x| commutes(x, w)).all(|x| commutes(p, x))
                && in_delta(m2.add(w, p))
        })
        .collect();
    expect(
        !qp && admissible.is_empty() && out.status.code() == Some(0),
        format!("Δ-qp {qp}, witness {w}, idempotents meeting all three conditions {admissible:?}"),
    )
}

fn criterion_5() -> Verdict {
    let corpus = default_corpus(DEFAULT_CAPACITY).unwrap();
    let max = corpus.rings.iter().map(|e| e.ring.size()).max().unwrap_or(0);
    let started = Instant::now();
    let out = cli(&["verify"]);
    let elapsed = started.elapsed();
    let report = json(&out);
    let results = report["results"].as_array().unwrap();
    let fails = report["summary"]["fail"].as_u64().unwrap();
    let checks: BTreeSet<&str> = results.iter().map(|r| r["check"].as_str().unwrap()).collect();
    let mut qp_rings = 0;
    let mut c22_bad = Vec::new();
    for entry in &corpus.rings {
        if !classify::is_delta_quasipolar(&entry.ring) {
            continue;
        }
        qp_rings += 1;
        let name = entry.ring.descriptor().to_string();
        let find = |id: &str| {
            results
                .iter()
                .find(|r| r["check"] == id && r["ring"] == name.as_str())
                .cloned()
                .unwrap_or(Value::Null)
        };
        let (c22, c15) = (find("C22"), find("C15"));
        let ok = c22["verdict"] == "VACUOUS"
            && c22["note"].as_str().is_some_and(|n| n.contains("2 ∈ Δ(R)"))
            && c15["verdict"] == "PASS";
        if !ok {
            c22_bad.push(name);
        }
    }
    expect(
        fails == 0
            && out.status.code() == Some(0)
            && corpus.len() >= 20
            && max <= 4096
            && checks.len() == 31
            && c22_bad.is_empty()
            && elapsed <= SUITE_BUDGET,
        format!(
            "{} rings (max size {max}), {} checks, {fails} FAIL, C22 VACUOUS with 2 ∈ Δ on {}/{qp_rings} Δ-qp rings, {elapsed:?} (limit {SUITE_BUDGET:?})",
            corpus.len(),
            checks.len(),
            qp_rings - c22_bad.len()
        ),
    )
}

fn criterion_6() -> Verdict {
    let corpus = default_corpus(DEFAULT_CAPACITY).unwrap();
    let mut products = 0;
    for entry in &corpus.rings {
        let r = &entry.ring;
        let delta = analysis::delta(r);
        let (a, b, c) = analysis::delta_alternative_forms(r);
        if &a != delta || &b != delta || &c != delta {
            return Err(format!("characterizations differ on {}", r.descriptor()));
        }
        if let Structure::Product { left, right } = r.structure() {
            products += 1;
            let m = right.size();
            let expected = r.set_where(|x| {
                analysis::delta(left).contains(x / m) && analysis::delta(right).contains(x % m)
            });
            if &expected != delta {
                return Err(format!("Δ of {} is not componentwise", r.descriptor()));
            }
        }
    }
    Ok(format!(
        "3 characterizations agree on {} rings; componentwise Δ on {products} products",
        corpus.len()
    ))
}

fn residue_size(r: &std::sync::Arc<FiniteRing>) -> usize {
    quotient(r, analysis::jacobson_radical(r)).unwrap().size()
}

fn criterion_7() -> Verdict {
    let mut parts = Vec::new();
    for spec in ["Z2", "Z4"] {
        let r = build(spec).unwrap();
        let qp = classify::is_delta_quasipolar(&r);
        let local = classify::is_local(&r);
        let residue = residue_size(&r);
        if !(qp && local && residue == 2) {
            return Err(format!("{spec}: Δ-qp {qp}, local {local}, |R/J| = {residue}"));
        }
        parts.push(format!("{spec}: Δ-qp, local, |R/J| = 2"));
    }
    let f4 = build("table:f4.json").unwrap();
    let qp = classify::is_delta_quasipolar(&f4);
    let residue = residue_size(&f4);
    let two = f4.integer(2);
    let two_in_delta = two == f4.zero() && analysis::delta(&f4).contains(two);
    let witnesses = classify::delta_quasipolar(&f4, Mode::AllWitnesses).witnesses;
    parts.push(format!(
        "F4: Δ-qp {qp}, |R/J| = {residue}, 2 = 0 ∈ Δ {two_in_delta}, failing elements {witnesses:?}"
    ));
    expect(!qp && residue == 4 && two_in_delta, parts.join("; "))
}

fn criterion_8() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let mut table = build("Z4").unwrap().to_table();
    table.mul[2][3] = 1;
    std::fs::write(dir.path().join("z4-bad.json"), table.to_json()).unwrap();
    let spec = format!("table:{}", dir.path().join("z4-bad.json").display());
    let validate = cli(&["validate", &spec]);
    let violations = json(&validate)["report"]["violations"].as_array().map_or(0, Vec::len);
    let manifest = dir.path().join("corpus.txt");
    std::fs::write(&manifest, "Z2\ntable:z4-bad.json\n").unwrap();
    let verify = cli(&["verify", "--manifest", manifest.to_str().unwrap()]);
    let failed = json(&verify)["results"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["verdict"] == "FAIL");
    expect(
        validate.status.code() == Some(1) && violations > 0 && verify.status.code() == Some(1) && failed,
        format!(
            "validate exit {:?} with {violations} violated axioms; verify exit {:?}, FAIL present {failed}",
            validate.status.code(),
            verify.status.code()
        ),
    )
}

fn criterion_9() -> Verdict {
    let first = cli(&["verify"]);
    let second = cli(&["verify"]);
    expect(
        first.stdout == second.stdout && !first.stdout.is_empty(),
        format!("{} bytes, identical {}", first.stdout.len(), first.stdout == second.stdout),
    )
}

fn main() {
    assert!(!DEFAULT_MANIFEST.is_empty());
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("T_2(Z_2) classification", criterion_1),
        ("Δ(T_2(Z_2)) = {0, E12} = D_2(Δ) + J_2", criterion_2),
        ("spectral idempotents of [[1,1],[0,0]] in T_2(Z_2)", criterion_3),
        ("M_2(Z_2) not Δ-quasipolar, witness re-verified", criterion_4),
        ("full suite over the default corpus", criterion_5),
        ("Δ characterizations and product formula", criterion_6),
        ("Z_2, Z_4, F_4 and |R/J| = 2", criterion_7),
        ("mutated Z_4 table is rejected", criterion_8),
        ("deterministic verify output", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
