use std::fmt::Write;
use std::sync::Arc;

use tn2::algebra::{bracket_combo, infer_basis, jacobi_check, Basis, Presentation, PresentationRegistry};
use tn2::index::{enumerate as enumerate_vectors, ExponentVector};
use tn2::lab::{annihilator_mt, closure_check, Lab, Status};
use tn2::parse::{fmt_half, parse_combo, parse_word};
use tn2::pbw::{parse_element, ModuleVector, TwistedInduced};
use tn2::zoo::{whittaker_spec, BModuleSpec, Built, FamilyRegistry, SubalgebraSelector};
use tn2::Scalar;

use crate::{CliError, Outcome, Settings};

/// The configured module, or `W(T[1/2] -> 1, c = 0)` without `--spec`.
pub fn load(s: &Settings) -> Result<Built, CliError> {
    match &s.spec {
        None => Ok(Built::BModule(whittaker_spec(Scalar::one(), Scalar::zero())?)),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read spec `{}`: {e}", path.display())))?;
            FamilyRegistry::with_presets()
                .build_text(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
    }
}

pub fn load_bmodule(s: &Settings) -> Result<BModuleSpec, CliError> {
    match load(s)? {
        Built::BModule(b) => Ok(b),
        Built::Verma(_) => Err(CliError::Input("this command needs a b-module spec, not a Verma module".into())),
    }
}

/// Looks up a presentation by registry name; `untwisted` means the `±` basis.
pub fn presentation(name: &str) -> Result<Arc<dyn Presentation>, CliError> {
    let name = if name == "untwisted" { "untwisted-pm" } else { name };
    let registry = PresentationRegistry::with_presets();
    registry.get(name).map_err(|e| {
        let known: Vec<&str> = registry.names().collect();
        CliError::Input(format!("{e} (known: {})", known.join(", ")))
    })
}

/// A module vector, or a bare exponent vector meaning `w_i ⊗` the first label.
pub fn parse_vector(m: &TwistedInduced, text: &str) -> Result<ModuleVector, CliError> {
    if text.trim_start().starts_with('{') {
        let i: ExponentVector = text.parse()?;
        return Ok(m.basis(&i, 0));
    }
    Ok(m.parse_vector(text)?)
}

pub fn bracket(x: &str, y: &str, algebra: Option<&str>) -> Result<Outcome, CliError> {
    let a = parse_combo(x)?;
    let b = parse_combo(y)?;
    let basis = infer_basis(&[&a, &b]).map_err(|e| CliError::Input(format!("`{x}`, `{y}`: {e}")))?;
    let p = match (algebra, basis) {
        (Some(name), _) => presentation(name)?,
        (None, Some(basis)) => presentation(basis.name())?,
        (None, None) => presentation(Basis::Twisted.name())?,
    };
    let r = bracket_combo(&*p, &a, &b).map_err(|e| CliError::Input(format!("`{x}`, `{y}`: {e}")))?;
    Ok(Outcome::pass(format!("{r}\n")))
}

pub fn jacobi(s: &Settings, algebra: &str) -> Result<Outcome, CliError> {
    let p = presentation(algebra)?;
    let report = jacobi_check(&*p, s.window);
    let mut text = format!("presentation\t{}\nwindow\t{}\nchecked\t{}\nviolations\t{}\n", p.name(), s.window, report.checked, report.violations.len());
    for v in &report.violations {
        let [x, y, z] = v.triple;
        let _ = writeln!(text, "violation\t{x}\t{y}\t{z}\t{}", v.residual);
    }
    let status = if report.passed() { Status::Pass } else { Status::Fail };
    Ok(Outcome { text, status })
}

pub fn act(s: &Settings, word: &str, vector: Option<&str>) -> Result<Outcome, CliError> {
    let letters = parse_word(word)?;
    match load(s)? {
        Built::BModule(spec) => {
            let m = spec.induce();
            let v = match vector {
                Some(text) => parse_vector(&m, text)?,
                None => m.basis(&ExponentVector::zero(), 0),
            };
            Ok(Outcome::pass(format!("{}\n", m.act_word(&letters, &v)?)))
        }
        Built::Verma(m) => {
            let v = match vector {
                Some(text) => parse_element(text, m.engine())?,
                None => m.vacuum(),
            };
            Ok(Outcome::pass(format!("{}\n", m.show(&m.act_word(&letters, &v)?))))
        }
    }
}

pub fn reduce(s: &Settings, vector: &str, u2: i32) -> Result<Outcome, CliError> {
    let lab = Lab::new(load_bmodule(s)?, u2)?;
    let v = parse_vector(&lab.induced, vector)?;
    let trace = lab.reduce_to_m(&v, None)?;
    Ok(Outcome::pass(format!("{trace}\n")))
}

pub fn annihilator(s: &Settings, t2: i32) -> Result<Outcome, CliError> {
    let m = load_bmodule(s)?.induce();
    let r = annihilator_mt(&m, t2, s.max_weight2, s.max_length)?;
    let mut text = format!(
        "t\t{}\ntruncation\t({}, {})\nconclusive\t{}\ndimension\t{}\n",
        fmt_half(t2),
        fmt_half(s.max_weight2 as i32),
        s.max_length,
        r.conclusive,
        r.basis.len()
    );
    let gens: Vec<String> = r.generators.iter().map(|g| g.to_string()).collect();
    let _ = writeln!(text, "generators\t{}", gens.join(" "));
    for v in &r.basis {
        let _ = writeln!(text, "basis\t{v}");
    }
    let status = if r.conclusive { Status::Pass } else { Status::Inconclusive };
    Ok(Outcome { text, status })
}

pub fn enumerate(s: &Settings) -> Outcome {
    let mut text = String::from("index\tweight\tlength\n");
    for i in enumerate_vectors(s.max_weight2, s.max_length) {
        let _ = writeln!(text, "{i}\t{}\t{}", fmt_half(i.weight2() as i32), i.length());
    }
    Outcome::pass(text)
}

fn subspace_lines(spec: &str) -> Result<Vec<String>, CliError> {
    let text = match spec.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read subspace `{path}`: {e}")))?
            .lines()
            .collect::<Vec<_>>()
            .join(";"),
        None => spec.to_string(),
    };
    Ok(text.split(';').map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from).collect())
}

pub fn closure(s: &Settings, subspace: &str, selector: &str) -> Result<Outcome, CliError> {
    let sel = SubalgebraSelector::parse(selector)
        .ok_or_else(|| CliError::Input(format!("unknown selector `{selector}`")))?;
    let m = load_bmodule(s)?.induce();
    let basis: Vec<ModuleVector> =
        subspace_lines(subspace)?.iter().map(|l| parse_vector(&m, l)).collect::<Result<_, _>>()?;
    let r = closure_check(&m, &basis, &sel.generators(s.window))?;
    let mut text = format!(
        "selector\t{sel}\nwindow\t{}\nsubspace\t{}\nchecked\t{}\nskipped\t{}\nclosed\t{}\n",
        s.window,
        basis.len(),
        r.checked,
        r.skipped,
        r.closed
    );
    if let Some((x, v, img)) = &r.witness {
        let _ = writeln!(text, "witness\t{x}·({v}) = {img}");
    }
    Ok(Outcome { text, status: if r.closed { Status::Pass } else { Status::Fail } })
}
