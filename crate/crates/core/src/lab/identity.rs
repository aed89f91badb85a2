use crate::algebra::{GeneratorId, Presentation, TwistedPresentation};
use crate::pbw::{ModuleError, ModuleVector, TwistedInduced};
use crate::scalar::Scalar;

use super::{Lab, LabError, Report, Status};

/// A generator `x` of `b` and a word `u` over `T_{<=0}` (applied right to left).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub x: GeneratorId,
    pub u: Vec<GeneratorId>,
}

/// `[x, y_1 ... y_n] v = sum_k (-1)^{|x|(|y_1|+...+|y_{k-1}|)} y_1 ... [x, y_k] ... y_n v`.
pub fn commutator_action(
    m: &TwistedInduced,
    x: GeneratorId,
    u: &[GeneratorId],
    v: &ModuleVector,
) -> Result<ModuleVector, ModuleError> {
    let mut out = m.zero();
    let mut odd_before = 0u32;
    for k in 0..u.len() {
        let br = TwistedPresentation.bracket_raw(x, u[k]);
        if !br.is_zero() {
            let tail = m.act_word(&u[k + 1..], v)?;
            let mid = m.act_combo(&br, &tail)?;
            let full = m.act_word(&u[..k], &mid)?;
            let sign = if x.is_odd() && odd_before % 2 == 1 { -1 } else { 1 };
            out.add_scaled(&full, &Scalar::from_int(sign));
        }
        odd_before += u[k].parity() as u32;
    }
    Ok(out)
}

impl Lab {
    /// `(x - (-1)^{|x||u|} phi(x)) (u v) = [x, u] v` for a one-dimensional seed `v`.
    pub fn whittaker_identity(&self, cases: &[IdentityCase]) -> Result<Report, LabError> {
        let base = &self.spec.module;
        if base.dim() != 1 {
            return Err(LabError::Precondition("the identity needs a one-dimensional seed".into()));
        }
        let m = &self.induced;
        let v = m.basis(&crate::index::ExponentVector::zero(), 0);
        let mut report = Report::default();
        for (n, case) in cases.iter().enumerate() {
            let phi = base.act(case.x, 0)?.into_iter().map(|(_, c)| c).next().unwrap_or_default();
            let uv = m.act_word(&case.u, &v)?;
            let u_odd = case.u.iter().map(|g| g.parity() as u32).sum::<u32>() % 2 == 1;
            let sign = if case.x.is_odd() && u_odd { -1 } else { 1 };
            let lhs = m.act(case.x, &uv)?.minus(&uv.scaled(&(&phi * &Scalar::from_int(sign))));
            let rhs = commutator_action(m, case.x, &case.u, &v)?;
            let word: Vec<String> = case.u.iter().map(|g| g.to_string()).collect();
            let status = if lhs == rhs { Status::Pass } else { Status::Fail };
            report.push(
                format!("identity-{n}"),
                format!("x={} u={}", case.x, if word.is_empty() { "1".into() } else { word.join(" ") }),
                rhs.to_string(),
                lhs.to_string(),
                status,
            );
        }
        Ok(report)
    }
}
