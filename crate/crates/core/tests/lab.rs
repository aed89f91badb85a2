use tn2::algebra::{GeneratorId, Kind};
use tn2::index::{enumerate, principal_cmp, ExponentVector};
use tn2::lab::{
    annihilator_mt, closure_check, random_identity_cases, random_vectors, IdentityCase, Lab, LabError, Rule, Status,
};
use tn2::pbw::supp_deg;
use tn2::zoo::{generalized_spec, whittaker_spec, SubalgebraSelector};
use tn2::Scalar;

fn lab(lambda: i64, c: i64) -> Lab {
    Lab::new(whittaker_spec(Scalar::from_int(lambda), Scalar::from_int(c)).unwrap(), 1).unwrap()
}

#[test]
fn random_vectors_reduce_into_m() {
    let l = lab(1, 0);
    let pool = enumerate(5, 3);
    for (n, v) in random_vectors(&l.induced, &pool, 50, 4, 0).into_iter().enumerate() {
        let budget = l.default_budget(&v).unwrap();
        let trace = l.reduce_to_m(&v, None).unwrap_or_else(|e| panic!("vector {n} = {v}: {e}"));
        assert!(trace.steps.len() <= budget);
        assert!(!trace.terminal.is_zero());
        assert!(trace.terminal.terms().all(|((i, _), _)| i.is_zero()));
        let mut prev = trace.start.clone();
        for s in &trace.steps {
            assert_eq!(principal_cmp(&s.deg, &prev), std::cmp::Ordering::Less);
            prev = s.deg.clone();
        }
    }
}

#[test]
fn lemma_steps_drop_by_one_slot() {
    let l = lab(2, 1);
    for i in enumerate(5, 3).into_iter().filter(|i| !i.is_zero()) {
        let v = l.induced.basis(&i, 0);
        let (_, rule, next) = l.reduce_step(&v).unwrap();
        let n_hat = i.min_nonzero_slot().unwrap();
        let drop = if rule == Rule::Lemma { 1 } else { 2 };
        assert_eq!(supp_deg(&next).unwrap().deg, i.sub_at(n_hat, drop).unwrap(), "{i}");
    }
}

#[test]
fn reduction_errors() {
    let l = lab(1, 0);
    let v = l.induced.basis(&"{1:1, 2:1}".parse().unwrap(), 0);
    assert!(matches!(l.reduce_to_m(&v, Some(1)), Err(LabError::Budget(t)) if t.steps.len() == 1));
    assert!(matches!(l.reduce_to_m(&l.induced.zero(), None), Err(LabError::ZeroVector)));
}

#[test]
fn whittaker_identity_on_random_pairs() {
    let l = lab(1, 0);
    let report = l.whittaker_identity(&random_identity_cases(200, 4, 3, 0)).unwrap();
    assert_eq!(report.rows.len(), 200);
    assert_eq!(report.status(), Status::Pass, "{}", report.to_tsv());
}

#[test]
fn whittaker_identity_examples() {
    let l = lab(1, 0);
    let g = GeneratorId::of;
    let cases = [
        IdentityCase { x: g(Kind::T, 1), u: vec![g(Kind::G, 0)] },
        IdentityCase { x: g(Kind::L, 2), u: vec![] },
        IdentityCase { x: g(Kind::G, 1), u: vec![g(Kind::T, -1), g(Kind::G, 0)] },
    ];
    assert_eq!(l.whittaker_identity(&cases).unwrap().status(), Status::Pass);
}

#[test]
fn annihilator_kernel_at_both_charges() {
    for c in [0, 1] {
        let l = lab(1, c);
        let v0 = l.induced.basis(&ExponentVector::zero(), 0);
        let g02 = l.induced.basis(&"{2:2}".parse().unwrap(), 0);
        for (w2, len) in [(2, 2), (4, 3)] {
            let a = annihilator_mt(&l.induced, 1, w2, len).unwrap();
            assert_eq!(a.basis, vec![g02.clone(), v0.clone()], "c = {c}, truncation ({w2}, {len})");
        }
    }
}

fn t_slice(m: &tn2::pbw::TwistedInduced, over_v1: bool) -> Vec<tn2::pbw::ModuleVector> {
    (0..m.labels().len())
        .filter(|&j| m.labels()[j].contains('G') == over_v1)
        .map(|j| m.basis(&ExponentVector::zero(), j))
        .collect()
}

#[test]
fn slice_closure_dichotomy() {
    let b = SubalgebraSelector::Plus.generators(4);
    let p = SubalgebraSelector::P.generators(4);
    for phi_t32 in [0, 1] {
        let m = generalized_spec(Scalar::one(), Scalar::from_int(phi_t32), Scalar::zero(), 4, 3).unwrap().induce();
        // G[1/2] v0 = v1 leaves C[T[1/2]] v0 whatever phi is
        let r = closure_check(&m, &t_slice(&m, false), &b).unwrap();
        assert!(!r.closed);
        assert_eq!(r.witness.unwrap().0, GeneratorId::of(Kind::G, 1));
        assert!(closure_check(&m, &t_slice(&m, false), &p).unwrap().closed);
        // G[1] v1 = -1/2 phi(T[3/2]) v0
        let r = closure_check(&m, &t_slice(&m, true), &p).unwrap();
        assert_eq!(r.closed, phi_t32 == 0);
        if let Some((x, s, img)) = r.witness {
            assert_eq!((x.to_string(), s.to_string(), img.to_string()), ("G[1]".into(), "w{}⊗G[1/2].v0".into(), "-1/2*w{}⊗v0".into()));
        }
    }
    let m = generalized_spec(Scalar::one(), Scalar::zero(), Scalar::zero(), 4, 3).unwrap().induce();
    let full: Vec<_> = (0..m.labels().len()).map(|j| m.basis(&ExponentVector::zero(), j)).collect();
    assert!(closure_check(&m, &full, &b).unwrap().closed);
}
