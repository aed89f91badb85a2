use std::sync::Arc;

use tn2::algebra::GeneratorId;
use tn2::zoo::{
    check_conditions, module_axiom_violations, whittaker_spec, Built, Config, FamilyRegistry, ModuleFamily, ZooError,
};
use tn2::Scalar;

const TABLE: &str = "\
# two-dimensional b-module on which T[1/2] is a Jordan block
family = table
labels = a, b
parity.a = 0
parity.b = 0
act.T[1/2].a = 2*a
act.T[1/2].b = a + 2*b
";

#[test]
fn table_family_builds_a_module() {
    let spec = FamilyRegistry::with_presets().build_text(TABLE).unwrap().into_bmodule().unwrap();
    assert_eq!(spec.labels(), vec!["a".to_string(), "b".to_string()]);
    let (bad, _) = module_axiom_violations(&*spec.module, 6);
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(check_conditions(&*spec.module, 1), (true, true));
    let t: GeneratorId = "T[1/2]".parse().unwrap();
    assert_eq!(spec.module.act(t, 1).unwrap(), vec![(0, Scalar::one()), (1, Scalar::from_int(2))]);
}

#[test]
fn errors_name_the_line() {
    let reg = FamilyRegistry::with_presets();
    let cases = [
        ("family = whittaker\nlambda = 1\nlambda = 2\n", 3),
        ("family = whittaker\n\nlambda = x\n", 3),
        ("family = table\nlabels = a\nact.T[1/2].z = a\n", 3),
        ("family = verma\ndepth = -1\n", 2),
        ("family = whittaker\nlambda 1\n", 2),
    ];
    for (text, line) in cases {
        match reg.build_text(text) {
            Err(ZooError::Config { line: got, .. }) => assert_eq!(got, line, "{text}"),
            other => panic!("{text}: {:?}", other.err()),
        }
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let cfg = Config::parse("# header\n\nfamily = whittaker # trailing\nlambda = 1/2\n").unwrap();
    assert_eq!(cfg.get("family"), Some("whittaker"));
    assert_eq!(cfg.scalar("lambda", None).unwrap(), Scalar::ratio(1, 2));
}

struct Doubled;

impl ModuleFamily for Doubled {
    fn name(&self) -> &'static str {
        "doubled-whittaker"
    }
    fn build(&self, cfg: &Config, _: &FamilyRegistry) -> Result<Built, ZooError> {
        let lambda = cfg.scalar("lambda", None)?;
        Ok(Built::BModule(whittaker_spec(&lambda + &lambda, Scalar::zero())?))
    }
}

#[test]
fn registry_accepts_new_families() {
    let mut reg = FamilyRegistry::with_presets();
    reg.register(Arc::new(Doubled));
    assert!(reg.names().any(|n| n == "doubled-whittaker"));
    let spec = reg.build_text("family = doubled-whittaker\nlambda = 3\n").unwrap().into_bmodule().unwrap();
    let t: GeneratorId = "T[1/2]".parse().unwrap();
    assert_eq!(spec.module.act(t, 0).unwrap(), vec![(0, Scalar::from_int(6))]);
}
