use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tn2::algebra::{
    jacobi_check, preset, psi, verify_morphism, Basis, Direction, GeneratorMap, LinearCombo, Psi,
};
use tn2::index::{enumerate, principal_cmp, ExponentVector};
use tn2::lab::{
    annihilator_mt, induced_axiom_violations, random_identity_cases, random_vectors, span_contains, Lab, Report,
    Status,
};
use tn2::parse::fmt_half;
use tn2::zoo::{module_axiom_violations, verma_singular_failures, VermaModule};
use tn2::Scalar;

use crate::commands::{load, load_bmodule, presentation};
use crate::{CliError, Outcome, Settings};

pub struct Context {
    pub settings: Settings,
    pub u2: i32,
    /// Comma-separated presentation names.
    pub algebra: Option<String>,
}

/// A report plus free text appended after it (traces).
pub struct SuiteOutput {
    pub report: Report,
    pub appendix: String,
}

impl From<Report> for SuiteOutput {
    fn from(report: Report) -> Self {
        SuiteOutput { report, appendix: String::new() }
    }
}

/// A named verification suite, selected at runtime.
pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError>;
}

pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, Arc<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn with_presets() -> Self {
        let mut r = SuiteRegistry { suites: BTreeMap::new() };
        let all: [Arc<dyn Suite>; 11] = [
            Arc::new(Scalars),
            Arc::new(Jacobi),
            Arc::new(ModuleAxiom),
            Arc::new(Orders),
            Arc::new(DegLemma),
            Arc::new(Reduction),
            Arc::new(Annihilator),
            Arc::new(WhittakerIdentity),
            Arc::new(Substitution),
            Arc::new(PsiSuite),
            Arc::new(VermaSingular),
        ];
        for s in all {
            r.register(s);
        }
        r
    }

    pub fn register(&mut self, s: Arc<dyn Suite>) {
        self.suites.insert(s.name(), s);
    }

    pub fn run(&self, name: &str, ctx: &Context) -> Result<Outcome, CliError> {
        let suite = self.suites.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.suites.keys().copied().collect();
            CliError::Input(format!("unknown suite `{name}` (known: {})", known.join(", ")))
        })?;
        let out = suite.run(ctx)?;
        let r = &out.report;
        let mut text = r.to_tsv();
        let _ = writeln!(
            text,
            "# {name}\tpass={}\tfail={}\tinconclusive={}",
            r.count(Status::Pass),
            r.count(Status::Fail),
            r.count(Status::Inconclusive)
        );
        text.push_str(&out.appendix);
        Ok(Outcome { text, status: r.status() })
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn truncation(s: &Settings) -> String {
    format!("({}, {})", fmt_half(s.max_weight2 as i32), s.max_length)
}

struct Scalars;

/// Field axioms on seeded random elements with small coordinates.
impl Suite for Scalars {
    fn name(&self) -> &'static str {
        "scalars"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        const N: usize = 1000;
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.settings.seed);
        let q = |rng: &mut ChaCha8Rng| BigRational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=9).into());
        let draw = |rng: &mut ChaCha8Rng| Scalar::new(q(rng), q(rng), q(rng), q(rng));
        let mut failures: BTreeMap<&str, Option<String>> =
            ["add-assoc", "add-comm", "mul-assoc", "mul-comm", "distrib", "inverse", "round-trip"]
                .into_iter()
                .map(|k| (k, None))
                .collect();
        let mut note = |law: &'static str, ok: bool, case: String| {
            let slot = failures.get_mut(law).expect("known law");
            if !ok && slot.is_none() {
                *slot = Some(case);
            }
        };
        for _ in 0..N {
            let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
            let case = format!("a={a} b={b} c={c}");
            note("add-assoc", &(&a + &b) + &c == &a + &(&b + &c), case.clone());
            note("add-comm", &a + &b == &b + &a, case.clone());
            note("mul-assoc", &(&a * &b) * &c == &a * &(&b * &c), case.clone());
            note("mul-comm", &a * &b == &b * &a, case.clone());
            note("distrib", &a * &(&b + &c) == &(&a * &b) + &(&a * &c), case.clone());
            note("inverse", a.is_zero() || a.inv().map(|x| &x * &a == Scalar::one()).unwrap_or(false), case.clone());
            note("round-trip", a.to_string().parse::<Scalar>().ok() == Some(a.clone()), case);
        }
        let mut report = Report::default();
        for (law, bad) in failures {
            let got = bad.clone().unwrap_or_else(|| format!("{N}/{N}"));
            report.push(law, format!("seed={} n={N}", ctx.settings.seed), format!("{N}/{N}"), got, verdict(bad.is_none()));
        }
        let r2 = Scalar::sqrt2().inv().map_err(|e| CliError::Check(e.to_string()))?;
        let half = &r2 * &r2;
        report.push("inv-sqrt2-squared", "(1/r2)^2", "1/2", half.to_string(), verdict(half == Scalar::ratio(1, 2)));
        Ok(report.into())
    }
}

struct Jacobi;

impl Suite for Jacobi {
    fn name(&self) -> &'static str {
        "jacobi"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let names: Vec<String> = match &ctx.algebra {
            Some(a) => a.split(',').map(|s| s.trim().to_string()).collect(),
            None => ["twisted", "twisted-pm", "untwisted-pm", "untwisted-12"].map(String::from).to_vec(),
        };
        let mut report = Report::default();
        for name in names {
            let p = presentation(&name)?;
            let r = jacobi_check(&*p, ctx.settings.window);
            let got = match r.violations.first() {
                None => "0 violations".to_string(),
                Some(v) => {
                    let [x, y, z] = v.triple;
                    format!("{} violations, first ({x}, {y}, {z}) -> {}", r.violations.len(), v.residual)
                }
            };
            report.push(
                format!("jacobi {}", p.name()),
                format!("window={} triples={}", ctx.settings.window, r.checked),
                "0 violations",
                got,
                verdict(r.passed()),
            );
        }
        Ok(report.into())
    }
}

struct ModuleAxiom;

impl Suite for ModuleAxiom {
    fn name(&self) -> &'static str {
        "module-axiom"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let s = &ctx.settings;
        let spec = load_bmodule(s)?;
        let mut report = Report::default();
        let (bad, skipped) = module_axiom_violations(&*spec.module, s.window);
        let got = bad.first().map_or_else(|| "0 violations".to_string(), |w| format!("{} violations, first {w}", bad.len()));
        report.push(
            "base",
            format!("family={} window={} skipped={skipped}", spec.family, s.window),
            "0 violations",
            got,
            verdict(bad.is_empty()),
        );
        let m = spec.induce();
        let (bad, checked) = induced_axiom_violations(&m, s.window, s.max_weight2, s.max_length)?;
        let got = bad.first().map_or_else(|| "0 violations".to_string(), |w| format!("{} violations, first {w}", bad.len()));
        report.push(
            "induced",
            format!("family={} window={} truncation={} triples={checked}", spec.family, s.window, truncation(s)),
            "0 violations",
            got,
            verdict(bad.is_empty()),
        );
        Ok(report.into())
    }
}

struct Orders;

impl Suite for Orders {
    fn name(&self) -> &'static str {
        "orders"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let s = &ctx.settings;
        let all = enumerate(s.max_weight2, s.max_length);
        let inputs = format!("truncation={} size={}", truncation(s), all.len());
        let mut report = Report::default();
        let mut bad = None;
        'outer: for (a, x) in all.iter().enumerate() {
            for (b, y) in all.iter().enumerate() {
                if principal_cmp(x, y) != b.cmp(&a) {
                    bad = Some(format!("{x} vs {y}"));
                    break 'outer;
                }
            }
        }
        report.push("total-descending", &inputs, "consistent", bad.clone().unwrap_or("consistent".into()), verdict(bad.is_none()));
        let bounded = all.iter().all(|i| i.weight2() <= s.max_weight2 && i.length() <= s.max_length);
        report.push("bounded", &inputs, "true", bounded.to_string(), verdict(bounded));
        let trip = all.iter().find(|i| i.to_string().parse::<ExponentVector>().ok().as_ref() != Some(*i));
        report.push("round-trip", &inputs, "all", trip.map_or("all".into(), |i| i.to_string()), verdict(trip.is_none()));
        Ok(report.into())
    }
}

struct DegLemma;

impl Suite for DegLemma {
    fn name(&self) -> &'static str {
        "deg-lemma"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let lab = Lab::new(load_bmodule(&ctx.settings)?, ctx.u2)?;
        Ok(lab.lemma_deg_suite(ctx.settings.max_weight2, ctx.settings.max_length).into())
    }
}

struct Reduction;

impl Suite for Reduction {
    fn name(&self) -> &'static str {
        "reduction"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        const N: usize = 50;
        let s = &ctx.settings;
        let lab = Lab::new(load_bmodule(s)?, ctx.u2)?;
        let pool = enumerate(s.max_weight2, s.max_length);
        let mut report = Report::default();
        let mut appendix = String::new();
        for (n, v) in random_vectors(&lab.induced, &pool, N, 4, s.seed).into_iter().enumerate() {
            let case = format!("reduce-{n}");
            let budget = lab.default_budget(&v)?;
            let expected = format!("nonzero in 1⊗M within {budget} steps");
            match lab.reduce_to_m(&v, None) {
                Ok(t) => {
                    let ok = !t.terminal.is_zero() && t.terminal.terms().all(|((i, _), _)| i.is_zero());
                    report.push(&case, v.to_string(), expected, format!("{} steps: {}", t.steps.len(), t.terminal), verdict(ok));
                    let _ = writeln!(appendix, "# trace {case}\n{t}");
                }
                Err(e) => report.push(&case, v.to_string(), expected, e.to_string(), Status::Fail),
            }
        }
        Ok(SuiteOutput { report, appendix })
    }
}

struct Annihilator;

/// `M_t` at `t = u` against `1 ⊗ M`.
impl Suite for Annihilator {
    fn name(&self) -> &'static str {
        "annihilator"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let s = &ctx.settings;
        let spec = load_bmodule(s)?;
        let m = spec.induce();
        let r = annihilator_mt(&m, ctx.u2, s.max_weight2, s.max_length)?;
        let expected: Vec<_> = (0..m.labels().len()).map(|j| m.basis(&ExponentVector::zero(), j)).collect();
        let equal = r.basis.len() == expected.len() && expected.iter().all(|v| span_contains(&r.basis, v));
        let status = match (equal, r.conclusive) {
            (true, _) => Status::Pass,
            (false, true) => Status::Fail,
            (false, false) => Status::Inconclusive,
        };
        let shown = |vs: &[tn2::pbw::ModuleVector]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        let mut report = Report::default();
        report.push(
            "annihilator",
            format!("family={} t={} truncation={} conclusive={}", spec.family, fmt_half(ctx.u2), truncation(s), r.conclusive),
            format!("span{{{}}}", shown(&expected)),
            format!("span{{{}}}", shown(&r.basis)),
            status,
        );
        Ok(report.into())
    }
}

struct WhittakerIdentity;

impl Suite for WhittakerIdentity {
    fn name(&self) -> &'static str {
        "whittaker-identity"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        const N: usize = 200;
        let s = &ctx.settings;
        let lab = Lab::new(load_bmodule(s)?, ctx.u2)?;
        let cases = random_identity_cases(N, s.window, s.max_length as usize, s.seed);
        Ok(lab.whittaker_identity(&cases)?.into())
    }
}

struct Substitution;

impl Suite for Substitution {
    fn name(&self) -> &'static str {
        "substitution"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let w = ctx.settings.window;
        let mut report = Report::default();
        for (name, d, back) in [
            ("pm_to_12", Direction::PmTo12, Direction::TwelveToPm),
            ("12_to_pm", Direction::TwelveToPm, Direction::PmTo12),
            ("twisted_pm", Direction::TwistedPm, Direction::TwistedPmInv),
            ("twisted_pm_inv", Direction::TwistedPmInv, Direction::TwistedPm),
        ] {
            let r = verify_morphism(&d, preset(d.source()), preset(d.target()), w)
                .map_err(|e| CliError::Check(e.to_string()))?;
            let got = r.violations.first().map_or("0 violations".into(), |v| {
                format!("{} violations, first ({}, {}): {} vs {}", r.violations.len(), v.pair.0, v.pair.1, v.image_of_bracket, v.bracket_of_images)
            });
            report.push(format!("{name} brackets"), format!("window={w} pairs={}", r.checked), "0 violations", got, verdict(r.passed()));
            let bad = preset(d.source()).window(w).into_iter().find(|g| {
                let x = LinearCombo::gen(*g);
                d.apply(&x).and_then(|y| back.apply(&y)).ok() != Some(x)
            });
            report.push(format!("{name} inverse"), format!("window={w}"), "identity", bad.map_or("identity".into(), |g| g.to_string()), verdict(bad.is_none()));
        }
        Ok(report.into())
    }
}

struct PsiSuite;

impl Suite for PsiSuite {
    fn name(&self) -> &'static str {
        "psi"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let w = ctx.settings.window;
        let p = preset(Basis::UntwistedPm);
        let r = verify_morphism(&Psi, p, p, w).map_err(|e| CliError::Check(e.to_string()))?;
        let mut report = Report::default();
        let got = r.violations.first().map_or("0 violations".into(), |v| format!("({}, {})", v.pair.0, v.pair.1));
        report.push("psi brackets", format!("window={w} pairs={}", r.checked), "0 violations", got, verdict(r.passed()));
        let bad = p.window(w).into_iter().find(|g| {
            let x = LinearCombo::gen(*g);
            psi(&x).and_then(|y| psi(&y)).ok() != Some(x)
        });
        report.push("psi involution", format!("window={w}"), "identity", bad.map_or("identity".into(), |g| g.to_string()), verdict(bad.is_none()));
        Ok(report.into())
    }
}

struct VermaSingular;

impl Suite for VermaSingular {
    fn name(&self) -> &'static str {
        "verma-singular"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, CliError> {
        let charges: Vec<Scalar> = match &ctx.settings.spec {
            Some(_) => match load(&ctx.settings)? {
                tn2::zoo::Built::Verma(m) => vec![m.engine().central_charge().clone()],
                _ => return Err(CliError::Input("verma-singular needs a verma spec".into())),
            },
            None => [0, 1, -2].map(Scalar::from_int).to_vec(),
        };
        let mut report = Report::default();
        for c in charges {
            let m = VermaModule::new(c.clone(), 3);
            let f = verma_singular_failures(&m);
            report.push(
                format!("verma c={c}"),
                "depth=3/2 vectors=G+[-1/2]1,G-[-1/2]1",
                "singular, L0 and J0 eigenvectors",
                f.first().cloned().unwrap_or_else(|| "singular, L0 and J0 eigenvectors".into()),
                verdict(f.is_empty()),
            );
        }
        Ok(report.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        let settings = Settings { window: 4, max_weight2: 2, max_length: 2, seed: 0, spec: None };
        Context { settings, u2: 1, algebra: None }
    }

    #[test]
    fn every_suite_is_registered() {
        let r = SuiteRegistry::with_presets();
        assert_eq!(r.suites.len(), 11);
        assert!(matches!(r.run("nope", &ctx()), Err(CliError::Input(_))));
    }

    #[test]
    fn small_suites_pass() {
        let r = SuiteRegistry::with_presets();
        for name in ["scalars", "orders", "substitution", "psi", "verma-singular", "reduction"] {
            assert_eq!(r.run(name, &ctx()).unwrap().status, Status::Pass, "{name}");
        }
    }
}
