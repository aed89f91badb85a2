//! Acceptance run: one PASS/FAIL line per criterion. Criteria 4, 6 and 7 fail
//! as literally stated; for those the run instead asserts that the failure is
//! exactly the analyzed counterexample, so a change in either direction (an
//! unexpected pass, or a different failure) breaks the build.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use tn2::algebra::{
    bracket_combo, jacobi_check, preset, psi, verify_morphism, Basis, Direction, GeneratorId, GeneratorMap, Kind,
    LinearCombo, Psi,
};
use tn2::index::{enumerate, ExponentVector};
use tn2::lab::{
    annihilator_mt, closure_check, induced_axiom_violations, is_even_odd, random_identity_cases, random_vectors,
    span_contains, Lab, Rule, Status,
};
use tn2::parse::parse_combo;
use tn2::pbw::{ModuleVector, TwistedInduced};
use tn2::zoo::{generalized_spec, verma_singular_failures, whittaker_spec, SubalgebraSelector, VermaModule};
use tn2::Scalar;

const BRACKET_LIMIT: Duration = Duration::from_secs(1);
const JACOBI_LIMIT: Duration = Duration::from_secs(30);
const AXIOM_LIMIT: Duration = Duration::from_secs(120);
const SEED: u64 = 0;

/// The five worked examples, then 40 entries generated once by the engine and
/// frozen. Hand-checked: [L[3],L[-3]], [G[3/2],G[-3/2]], [G[3/2],G[-1]],
/// [T[5/2],T[-5/2]], [L[2],G[-1/2]].
const GOLDEN: &[(&str, &str, &str)] = &[
    ("L[2]", "L[-2]", "4*L[0] + 1/2*C"),
    ("G[1/2]", "G[-1/2]", "-2*L[0]"),
    ("G[0]", "G[0]", "2*L[0] - 1/12*C"),
    ("G[1]", "G[-1/2]", "-3/2*T[1/2]"),
    ("T[3/2]", "T[-3/2]", "1/2*C"),
    ("L[3]", "L[-3]", "6*L[0] + 2*C"),
    ("L[1]", "L[-1]", "2*L[0]"),
    ("L[2]", "L[1]", "L[3]"),
    ("L[-1]", "L[-2]", "L[-3]"),
    ("L[4]", "L[-4]", "8*L[0] + 5*C"),
    ("L[1]", "T[-1/2]", "1/2*T[1/2]"),
    ("L[-2]", "T[5/2]", "-5/2*T[1/2]"),
    ("L[0]", "T[3/2]", "-3/2*T[3/2]"),
    ("T[1/2]", "T[-1/2]", "1/6*C"),
    ("T[5/2]", "T[-5/2]", "5/6*C"),
    ("T[1/2]", "T[3/2]", "0"),
    ("L[2]", "G[-1/2]", "3/2*G[3/2]"),
    ("L[-1]", "G[0]", "-1/2*G[-1]"),
    ("L[3]", "G[-3]", "9/2*G[0]"),
    ("T[1/2]", "G[0]", "G[1/2]"),
    ("T[-3/2]", "G[1]", "G[-1/2]"),
    ("G[1]", "G[-1]", "2*L[0] + 1/4*C"),
    ("G[1/2]", "G[1/2]", "-2*L[1]"),
    ("G[3/2]", "G[-3/2]", "-2*L[0] - 2/3*C"),
    ("G[2]", "G[-2]", "2*L[0] + 5/4*C"),
    ("G[1/2]", "G[0]", "1/2*T[1/2]"),
    ("G[3/2]", "G[-1]", "5/2*T[1/2]"),
    ("G[-1/2]", "G[0]", "-1/2*T[-1/2]"),
    ("G[2]", "G[1/2]", "-3/2*T[5/2]"),
    ("G[0]", "T[1/2]", "-G[1/2]"),
    ("Lu[2]", "Lu[-2]", "4*Lu[0] + 1/2*Cu"),
    ("Lu[1]", "J[-1]", "J[0]"),
    ("J[1]", "J[-1]", "1/3*Cu"),
    ("J[2]", "J[-2]", "2/3*Cu"),
    ("Lu[1]", "G+[-1/2]", "G+[1/2]"),
    ("J[1]", "G+[-1/2]", "G+[1/2]"),
    ("J[-1]", "G-[3/2]", "-G-[1/2]"),
    ("G+[1/2]", "G-[-1/2]", "2*Lu[0] + J[0]"),
    ("G+[3/2]", "G-[-3/2]", "2*Lu[0] + 3*J[0] + 2/3*Cu"),
    ("G+[1/2]", "G-[1/2]", "2*Lu[1]"),
    ("G+[1/2]", "G+[-1/2]", "0"),
    ("Lu[0]", "G-[1/2]", "-1/2*G-[1/2]"),
    ("G1[1/2]", "G1[-1/2]", "2*Lu[0]"),
    ("G1[1/2]", "G2[-1/2]", "-i*J[0]"),
    ("G2[3/2]", "G2[-3/2]", "2*Lu[0] + 2/3*Cu"),
];

/// How a criterion came out.
struct Verdict {
    pass: bool,
    detail: String,
    /// For criteria that fail as stated: whether the failure is exactly the
    /// analyzed counterexample.
    as_analyzed: Option<bool>,
}

impl Verdict {
    fn plain(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into(), as_analyzed: None }
    }
}

fn whittaker(c: i64) -> Lab {
    Lab::new(whittaker_spec(Scalar::one(), Scalar::from_int(c)).unwrap(), 1).unwrap()
}

fn basis_name(b: Basis) -> &'static str {
    b.name()
}

fn c1_brackets() -> Verdict {
    assert_eq!(GOLDEN.len(), 45);
    let start = Instant::now();
    let mut bad = Vec::new();
    for (x, y, want) in GOLDEN {
        let a = parse_combo(x).unwrap();
        let b = parse_combo(y).unwrap();
        let basis = tn2::algebra::infer_basis(&[&a, &b]).unwrap().unwrap_or(Basis::Twisted);
        let got = bracket_combo(preset(basis), &a, &b).unwrap().to_string();
        if got != *want {
            bad.push(format!("[{x},{y}] = {got}, want {want}"));
        }
    }
    let t = start.elapsed();
    let pass = bad.is_empty() && t < BRACKET_LIMIT;
    Verdict::plain(pass, format!("{} of {} brackets exact in {t:.2?} (limit {BRACKET_LIMIT:?}) {}", GOLDEN.len() - bad.len(), GOLDEN.len(), bad.join("; ")))
}

fn c2_jacobi() -> Verdict {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for b in [Basis::Twisted, Basis::UntwistedPm, Basis::Untwisted12, Basis::TwistedPm] {
        let r = jacobi_check(preset(b), 12);
        ok &= r.passed();
        parts.push(format!("{}: {} violations / {} triples", basis_name(b), r.violations.len(), r.checked));
    }
    let t = start.elapsed();
    Verdict::plain(ok && t < JACOBI_LIMIT, format!("{} in {t:.2?} (limit {JACOBI_LIMIT:?})", parts.join(", ")))
}

fn c3_module_axiom() -> Verdict {
    let l = whittaker(0);
    let start = Instant::now();
    let (bad, checked) = induced_axiom_violations(&l.induced, 6, 6, 4).unwrap();
    let t = start.elapsed();
    let detail = format!("{} violations / {checked} triples, window 6, enumerate(3, 4), {t:.2?} (limit {AXIOM_LIMIT:?}) {}", bad.len(), bad.first().cloned().unwrap_or_default());
    Verdict::plain(bad.is_empty() && t < AXIOM_LIMIT, detail)
}

fn c4_degree_lemma() -> Verdict {
    let l = whittaker(0);
    let report = l.lemma_deg_suite(4, 3);
    let failing: BTreeSet<String> = report
        .rows
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.case.clone())
        .collect();
    let predicted: BTreeSet<String> =
        enumerate(4, 3).into_iter().filter(is_even_odd).map(|i| format!("deg-a {i}")).collect();
    let example = l.induced.act(GeneratorId::of(Kind::G, 1), &l.induced.basis(&"{2:2}".parse().unwrap(), 0)).unwrap();
    Verdict {
        pass: report.status() == Status::Pass,
        detail: format!(
            "{} of {} rows fail, all clause (a) at a G slot with even exponent; e.g. G[1/2]·w{{2:2}}⊗v0 = {}",
            failing.len(),
            report.rows.len(),
            if example.is_zero() { "0".to_string() } else { example.to_string() }
        ),
        as_analyzed: Some(failing == predicted && example.is_zero()),
    }
}

fn c5_simplicity(traces: &mut String) -> Verdict {
    let l = whittaker(0);
    let pool = enumerate(5, 3);
    let vectors = random_vectors(&l.induced, &pool, 50, 4, SEED);
    let mut ok = 0;
    let mut steps = 0;
    let mut even_odd = 0;
    let mut failures = Vec::new();
    for (n, v) in vectors.iter().enumerate() {
        let budget = l.default_budget(v).unwrap();
        match l.reduce_to_m(v, None) {
            Ok(t) if !t.terminal.is_zero() && t.steps.len() <= budget => {
                ok += 1;
                steps += t.steps.len();
                even_odd += t.steps.iter().filter(|s| s.rule == Rule::EvenOdd).count();
                traces.push_str(&format!("# vector {n}: {v}\n{t}\n"));
            }
            Ok(t) => failures.push(format!("vector {n}: terminal {}", t.terminal)),
            Err(e) => failures.push(format!("vector {n}: {e}")),
        }
    }
    Verdict::plain(
        failures.is_empty(),
        format!(
            "{ok}/50 seeded vectors reach 1⊗M within budget, {steps} steps ({even_odd} by the even-exponent rule) {}",
            failures.join("; ")
        ),
    )
}

fn c6_annihilator() -> Verdict {
    let mut pass = true;
    let mut analyzed = true;
    let mut parts = Vec::new();
    for c in [0, 1] {
        let l = whittaker(c);
        let v0 = l.induced.basis(&ExponentVector::zero(), 0);
        let l0v0 = l.induced.act(GeneratorId::of(Kind::L, 0), &v0).unwrap();
        for (w2, len) in [(2, 2), (4, 3)] {
            let r = annihilator_mt(&l.induced, 1, w2, len).unwrap();
            let exact = r.basis.len() == 1 && span_contains(&r.basis, &v0);
            pass &= exact;
            analyzed &= r.basis.len() == 2 && span_contains(&r.basis, &v0) && span_contains(&r.basis, &l0v0);
            parts.push(format!("c={c} ({w2}/2, {len}): dim {}", r.basis.len()));
        }
    }
    Verdict {
        pass,
        detail: format!("{}; kernel = span{{w{{}}⊗v0, L[0]·v0}} since [X, L[0]] = deg(X) X", parts.join(", ")),
        as_analyzed: Some(analyzed),
    }
}

fn t_slice(m: &TwistedInduced, over_v1: bool) -> Vec<ModuleVector> {
    (0..m.labels().len())
        .filter(|&j| m.labels()[j].contains('G') == over_v1)
        .map(|j| m.basis(&ExponentVector::zero(), j))
        .collect()
}

fn c7_dichotomy() -> Verdict {
    let b = SubalgebraSelector::Plus.generators(4);
    let p = SubalgebraSelector::P.generators(4);
    let mut closed = Vec::new();
    let mut analyzed = true;
    let mut witness = String::new();
    let mut p_dichotomy = Vec::new();
    for phi in [0, 1] {
        let m = generalized_spec(Scalar::one(), Scalar::from_int(phi), Scalar::zero(), 4, 3).unwrap().induce();
        let r = closure_check(&m, &t_slice(&m, false), &b).unwrap();
        closed.push(r.closed);
        if let Some((x, s, img)) = &r.witness {
            analyzed &= *x == GeneratorId::of(Kind::G, 1);
            witness = format!("{x}·({s}) = {img}");
        }
        analyzed &= closure_check(&m, &t_slice(&m, false), &p).unwrap().closed;
        p_dichotomy.push(closure_check(&m, &t_slice(&m, true), &p).unwrap().closed);
    }
    analyzed &= closed == [false, false] && p_dichotomy == [true, false];
    Verdict {
        pass: closed == [true, false],
        detail: format!(
            "closed under b: phi(T[3/2])=0 -> {}, =1 -> {}; witness {witness}; under p the slice over G[1/2].v0 is closed iff phi(T[3/2]) = 0: {}",
            closed[0],
            closed[1],
            p_dichotomy == [true, false]
        ),
        as_analyzed: Some(analyzed),
    }
}

fn c8_transport() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (d, back) in [(Direction::PmTo12, Direction::TwelveToPm), (Direction::TwelveToPm, Direction::PmTo12)] {
        let r = verify_morphism(&d, preset(d.source()), preset(d.target()), 8).unwrap();
        let inverse = tn2::algebra::Presentation::window(preset(d.source()), 8).into_iter().all(|g| {
            let x = LinearCombo::gen(g);
            back.apply(&d.apply(&x).unwrap()).unwrap() == x
        });
        ok &= r.passed() && inverse;
        parts.push(format!("{d:?}: {} violations / {} pairs, inverse {inverse}", r.violations.len(), r.checked));
    }
    let pm = preset(Basis::UntwistedPm);
    let r = verify_morphism(&Psi, pm, pm, 10).unwrap();
    let involution = tn2::algebra::Presentation::window(pm, 10).into_iter().all(|g| {
        let x = LinearCombo::gen(g);
        psi(&psi(&x).unwrap()).unwrap() == x
    });
    ok &= r.passed() && involution;
    parts.push(format!("psi: {} violations / {} pairs, psi^2 = id {involution}", r.violations.len(), r.checked));
    Verdict::plain(ok, parts.join(", "))
}

fn c9_verma() -> Verdict {
    let mut bad = Vec::new();
    for c in [0, 1, -2] {
        bad.extend(verma_singular_failures(&VermaModule::new(Scalar::from_int(c), 3)).into_iter().map(|f| format!("c={c}: {f}")));
    }
    Verdict::plain(bad.is_empty(), format!("c in {{0, 1, -2}}, depth 3/2: {} failures {}", bad.len(), bad.join("; ")))
}

fn c10_identity() -> Verdict {
    let l = whittaker(0);
    let report = l.whittaker_identity(&random_identity_cases(200, 4, 3, SEED)).unwrap();
    Verdict::plain(
        report.status() == Status::Pass && report.rows.len() == 200,
        format!("{}/{} seeded pairs at window 4", report.count(Status::Pass), report.rows.len()),
    )
}

fn cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tn2"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn c11_determinism() -> Verdict {
    let invocations: &[&[&str]] = &[
        &["bracket", "G[1]", "G[-1/2]"],
        &["bracket", "1/2*r2*G+[1/2] - i*G-[-1/2]", "G+[-1/2] + 3*J[1]"],
        &["reduce", "{1:1}", "--spec", "configs/whittaker.cfg", "--u", "1/2"],
        &["act", "G[1] T[-1/2] G[0]", "--spec", "configs/whittaker.cfg"],
        &["enumerate", "--max-weight", "2", "--max-length", "3"],
        &["annihilator", "--max-weight", "2", "--max-length", "3"],
        &["verify", "reduction", "--seed", "7", "--max-weight", "5/2"],
        &["verify", "whittaker-identity", "--window", "4", "--seed", "3"],
        &["verify", "scalars", "--seed", "11"],
        &["closure", "--spec", "configs/generalized.cfg", "--selector", "p", "--window", "4", "--subspace", "w{}⊗G[1/2].v0; w{}⊗T[1/2].G[1/2].v0"],
    ];
    let mut differing = Vec::new();
    for args in invocations {
        let (a, ca) = cli(args);
        let (b, cb) = cli(args);
        // exit 1 (a check reporting false) is a valid answer; exit 2 means bad input
        if a != b || ca != cb || ca == 2 || a.is_empty() {
            differing.push(format!("{args:?} (exit {ca}/{cb})"));
        }
    }
    // printed values reparse to the values computed in-process
    let mut trips = 0;
    let mut broken = Vec::new();
    let (out, _) = cli(&["bracket", "1/2*r2*G+[1/2] - i*G-[-1/2]", "G+[-1/2] + 3*J[1]"]);
    let printed = String::from_utf8(out).unwrap();
    let x = parse_combo("1/2*r2*G+[1/2] - i*G-[-1/2]").unwrap();
    let y = parse_combo("G+[-1/2] + 3*J[1]").unwrap();
    let direct = bracket_combo(preset(Basis::UntwistedPm), &x, &y).unwrap();
    trips += 1;
    if parse_combo(printed.trim()).ok() != Some(direct) {
        broken.push(format!("bracket printed {}", printed.trim()));
    }
    let l = whittaker(0);
    let (out, _) = cli(&["act", "G[1] T[-1/2] G[0]", "--spec", "configs/whittaker.cfg"]);
    let printed = String::from_utf8(out).unwrap();
    let g = GeneratorId::of;
    let v0 = l.induced.basis(&ExponentVector::zero(), 0);
    let direct = l.induced.act_word(&[g(Kind::G, 2), g(Kind::T, -1), g(Kind::G, 0)], &v0).unwrap();
    trips += 1;
    if l.induced.parse_vector(printed.trim()).ok() != Some(direct) {
        broken.push(format!("act printed {}", printed.trim()));
    }
    let (out, _) = cli(&["verify", "reduction", "--seed", "7", "--max-weight", "5/2"]);
    for line in String::from_utf8(out).unwrap().lines().filter(|l| l.starts_with("reduce-")) {
        let input = line.split('\t').nth(1).unwrap();
        trips += 1;
        match l.induced.parse_vector(input) {
            Ok(v) if v.to_string() == input => {}
            _ => broken.push(format!("vector {input}")),
        }
    }
    let (out, _) = cli(&["enumerate", "--max-weight", "5/2", "--max-length", "3"]);
    for line in String::from_utf8(out).unwrap().lines().skip(1) {
        let i = line.split('\t').next().unwrap();
        trips += 1;
        if i.parse::<ExponentVector>().map(|e| e.to_string()).ok().as_deref() != Some(i) {
            broken.push(format!("exponent {i}"));
        }
    }
    Verdict::plain(
        differing.is_empty() && broken.is_empty(),
        format!(
            "{} invocations byte-identical across two runs, {} of {trips} printed values reparse equal {}",
            invocations.len() - differing.len(),
            trips - broken.len(),
            [differing, broken].concat().join("; ")
        ),
    )
}

fn main() {
    let mut traces = String::new();
    let criteria: Vec<(u32, &str, Verdict)> = vec![
        (1, "structure constants", c1_brackets()),
        (2, "graded Jacobi", c2_jacobi()),
        (3, "module axiom", c3_module_axiom()),
        (4, "degree lemma", c4_degree_lemma()),
        (5, "constructive simplicity", c5_simplicity(&mut traces)),
        (6, "annihilator recovery", c6_annihilator()),
        (7, "slice dichotomy", c7_dichotomy()),
        (8, "transport and psi", c8_transport()),
        (9, "Verma singular vectors", c9_verma()),
        (10, "Whittaker identity", c10_identity()),
        (11, "determinism and round-trip", c11_determinism()),
    ];
    let trace_path = concat!(env!("CARGO_TARGET_TMPDIR"), "/acceptance_traces.txt");
    std::fs::write(trace_path, &traces).expect("trace file is writable");
    let mut unexpected = Vec::new();
    for (n, name, v) in &criteria {
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{name}]: {status} - {}", v.detail.trim_end());
        match v.as_analyzed {
            None if !v.pass => unexpected.push(format!("criterion {n} failed")),
            Some(true) if !v.pass => {
                println!("             unattainable as stated; the failure matches the recorded counterexample")
            }
            Some(_) if v.pass => unexpected.push(format!("criterion {n} passed; its counterexample analysis is stale")),
            Some(false) => unexpected.push(format!("criterion {n} failed differently from its analysis")),
            _ => {}
        }
    }
    println!("reduction traces written to {trace_path}");
    let passed = criteria.iter().filter(|(_, _, v)| v.pass).count();
    println!("acceptance: {passed} PASS, {} FAIL", criteria.len() - passed);
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes: {}", unexpected.join("; "));
        std::process::exit(1);
    }
}
