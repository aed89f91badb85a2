use rayon::prelude::*;

use super::{bracket_combo, super_sign, GeneratorId, LinearCombo, Presentation};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct JacobiViolation {
    pub triple: [GeneratorId; 3],
    pub residual: LinearCombo,
}

#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub window: i32,
    pub checked: usize,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn nested(p: &dyn Presentation, a: GeneratorId, b: GeneratorId, c: GeneratorId) -> LinearCombo {
    let inner = p.bracket_raw(b, c);
    bracket_combo(p, &LinearCombo::gen(a), &inner).expect("window generators share the basis")
}

/// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`
pub fn jacobi_residual(p: &dyn Presentation, x: GeneratorId, y: GeneratorId, z: GeneratorId) -> LinearCombo {
    let mut out = LinearCombo::zero();
    out.add_scaled(&nested(p, x, y, z), &Scalar::from_int(super_sign(&x, &z)));
    out.add_scaled(&nested(p, y, z, x), &Scalar::from_int(super_sign(&y, &x)));
    out.add_scaled(&nested(p, z, x, y), &Scalar::from_int(super_sign(&z, &y)));
    out
}

/// Exhaustive graded Jacobi over all generator triples with `|index2| <= window`.
/// Violations are listed in window order.
pub fn jacobi_check(p: &dyn Presentation, window: i32) -> JacobiReport {
    let gens = p.window(window);
    let n = gens.len();
    let violations: Vec<JacobiViolation> = (0..n * n)
        .into_par_iter()
        .flat_map_iter(|ij| {
            let (x, y) = (gens[ij / n], gens[ij % n]);
            gens.iter().filter_map(move |&z| {
                let residual = jacobi_residual(p, x, y, z);
                (!residual.is_zero()).then_some(JacobiViolation { triple: [x, y, z], residual })
            })
        })
        .collect();
    JacobiReport { window, checked: n * n * n, violations }
}

/// Pairs on which `[x,y] != -(-1)^{|x||y|}[y,x]`.
pub fn antisymmetry_violations(p: &dyn Presentation, window: i32) -> Vec<(GeneratorId, GeneratorId)> {
    let gens = p.window(window);
    let mut bad = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let lhs = p.bracket_raw(x, y);
            let rhs = p.bracket_raw(y, x).scaled(&Scalar::from_int(-super_sign(&x, &y)));
            if lhs != rhs {
                bad.push((x, y));
            }
        }
    }
    bad
}

/// Pairs whose bracket has a term of the wrong degree (or a central term off degree zero).
pub fn degree_violations(p: &dyn Presentation, window: i32) -> Vec<(GeneratorId, GeneratorId)> {
    let gens = p.window(window);
    let mut bad = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let d = x.degree2() + y.degree2();
            if p.bracket_raw(x, y).generators().any(|g| g.degree2() != d) {
                bad.push((x, y));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{DropVirasoroCentral, TwistedPresentation};

    fn g(s: &str) -> GeneratorId {
        s.parse().unwrap()
    }

    #[test]
    fn corrupted_fixture_witness() {
        let p = DropVirasoroCentral(TwistedPresentation);
        assert!(jacobi_residual(&p, g("L[2]"), g("L[-1]"), g("L[-1]")).is_zero());
        let r = jacobi_residual(&p, g("L[2]"), g("G[-1]"), g("G[-1]"));
        assert_eq!(r.to_string(), "-C");
    }
}
