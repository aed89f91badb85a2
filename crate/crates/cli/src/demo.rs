use std::fmt::Write;

use tn2::algebra::{GeneratorId, Kind};
use tn2::index::ExponentVector;
use tn2::lab::{closure_check, Lab};
use tn2::pbw::BaseModule;
use tn2::zoo::{check_conditions, vanishing_check, FamilyRegistry, SubalgebraSelector};

use crate::{CliError, Outcome, Settings};

const WHITTAKER: &str = "family = whittaker\nlambda = 1\nc = 0\n";
const GENERALIZED: &str = "family = generalized\nphi.L1 = 1\nphi.T3/2 = {t}\nc = 0\n";
const HIGHORDER: &str = "family = highorder\ns = 3/2\nphi.T5/2 = 1\nphi.L2 = 3\nc = 0\n";
const HIGHORDER_BAD: &str = "family = highorder\ns = 3/2\nphi.T7/2 = 1\n";
const B_T0: &str = "family = b_t0\ninner = whittaker\nlambda = 1\nmax_k = 4\n";

fn config(out: &mut String, text: &str) {
    out.push_str("config\n");
    for line in text.lines() {
        let _ = writeln!(out, "  {line}");
    }
}

fn labels(m: &dyn BaseModule) -> String {
    (0..m.dim()).map(|i| m.label(i)).collect::<Vec<_>>().join(", ")
}

pub fn run(s: &Settings, name: &str) -> Result<Outcome, CliError> {
    let reg = FamilyRegistry::with_presets();
    let g = GeneratorId::of;
    let mut out = String::new();
    match name {
        "whittaker" => {
            config(&mut out, WHITTAKER);
            let spec = reg.build_text(WHITTAKER)?.into_bmodule()?;
            let (inj, killed) = check_conditions(&*spec.module, 1);
            let _ = writeln!(out, "conditions at u = 1/2\tT_u injective = {inj}\tG_u M = 0 = {killed}");
            let lab = Lab::new(spec, 1)?;
            let v0 = lab.induced.basis(&ExponentVector::zero(), 0);
            for x in [g(Kind::T, 1), g(Kind::L, 2), g(Kind::G, 1)] {
                let _ = writeln!(out, "{x}·v0 = {}", lab.induced.act(x, &v0)?);
            }
            let v = lab.induced.basis(&"{1:1, 2:1}".parse()?, 0);
            let _ = writeln!(out, "reduction of {v}\n{}", lab.reduce_to_m(&v, None)?);
            let l0 = lab.induced.act(g(Kind::L, 0), &v0)?;
            let _ = writeln!(out, "L[0]·v0 = {l0}; killed by the M_t generators, so M_t is larger than 1⊗M");
        }
        "generalized" => {
            for t in ["0", "1"] {
                let text = GENERALIZED.replace("{t}", t);
                config(&mut out, &text);
                let spec = reg.build_text(&text)?.into_bmodule()?;
                let _ = writeln!(out, "basis\t{}", labels(&*spec.module));
                let m = spec.induce();
                let slice = |over_v1: bool| -> Vec<_> {
                    (0..m.labels().len())
                        .filter(|&j| m.labels()[j].contains('G') == over_v1)
                        .map(|j| m.basis(&ExponentVector::zero(), j))
                        .collect()
                };
                for (what, over_v1, sel) in [
                    ("C[T[1/2]]v0 under b", false, SubalgebraSelector::Plus),
                    ("C[T[1/2]]v0 under p", false, SubalgebraSelector::P),
                    ("C[T[1/2]]v1 under p", true, SubalgebraSelector::P),
                ] {
                    let r = closure_check(&m, &slice(over_v1), &sel.generators(s.window.min(4)))?;
                    let witness = r.witness.map(|(x, v, img)| format!("\twitness {x}·({v}) = {img}")).unwrap_or_default();
                    let _ = writeln!(out, "{what}\tclosed = {}{witness}", r.closed);
                }
            }
        }
        "highorder" => {
            config(&mut out, HIGHORDER);
            let spec = reg.build_text(HIGHORDER)?.into_bmodule()?;
            let _ = writeln!(out, "basis\t{}", labels(&*spec.module));
            for note in &spec.notes {
                let _ = writeln!(out, "note\t{note}");
            }
            config(&mut out, HIGHORDER_BAD);
            match reg.build_text(HIGHORDER_BAD) {
                Ok(_) => out.push_str("accepted\n"),
                Err(e) => {
                    let _ = writeln!(out, "rejected\t{e}");
                }
            }
        }
        "b-t0" => {
            config(&mut out, B_T0);
            let spec = reg.build_text(B_T0)?.into_bmodule()?;
            let m = &*spec.module;
            let _ = writeln!(out, "basis\t{}", labels(m));
            for i in 0..m.dim().saturating_sub(1) {
                let img = m.act(g(Kind::G, 0), i)?;
                let shown: Vec<String> = img
                    .iter()
                    .map(|(j, c)| if c.is_one() { m.label(*j) } else { format!("{c}*{}", m.label(*j)) })
                    .collect();
                let _ = writeln!(out, "G[0]·{} = {}", m.label(i), shown.join(" + "));
            }
            let r = vanishing_check(m, 1, s.window);
            let _ = writeln!(out, "vanishing lemma at t = 1/2\tpart 1: {}\tpart 2: {}", r.part1, r.part2);
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown demo `{other}` (known: whittaker, generalized, highorder, b-t0)"
            )))
        }
    }
    Ok(Outcome::pass(out))
}
