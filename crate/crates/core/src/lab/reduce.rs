use std::fmt;

use crate::algebra::{GeneratorId, Kind};
use crate::index::{enumerate, ExponentVector};
use crate::pbw::{supp_deg, ModuleVector};
use crate::parse::fmt_half;
use crate::scalar::Scalar;

use super::{Lab, LabError};

/// Extra length allowed when sizing the default step budget. Each step lowers
/// the length of `deg` by at least one, so no slack is needed; one spare step
/// keeps an off-by-one defect visible as a budget failure rather than a silent pass.
pub const LENGTH_SLACK: u64 = 1;

/// The generator that lowers `deg` at its first nonzero slot `n̂`:
/// `L_{u+n-1/2}` for `n̂ = 2n-1` and `G_{u+(n-1)/2}` for `n̂ = 2n`.
pub fn lowering_generator(n_hat: u32, u2: i32) -> GeneratorId {
    let n = n_hat as i32;
    if n % 2 == 1 {
        GeneratorId::of(Kind::L, u2 + n)
    } else {
        GeneratorId::of(Kind::G, u2 + n / 2 - 1)
    }
}

/// The operator applied in one descent step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lowering {
    Gen(GeneratorId),
    /// `x - lambda`
    Shifted(GeneratorId, Scalar),
}

impl fmt::Display for Lowering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lowering::Gen(x) => write!(f, "{x}"),
            Lowering::Shifted(x, l) => write!(f, "({x} - ({l}))"),
        }
    }
}

/// Which rule chose the operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// The degree lemma: `deg` drops by `ε_n̂`.
    Lemma,
    /// `n̂ = 2n` with even exponent, where the lemma's `G` generator cancels:
    /// `T_{u+n-1}` for `n >= 2`, or `T_u - lambda` for `n = 1` when `T_u` acts
    /// on `M` by the scalar `lambda`. `deg` drops by `2ε_n̂`.
    EvenOdd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub op: Lowering,
    pub rule: Rule,
    pub deg: ExponentVector,
    pub weight2: i64,
    pub length: u64,
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub start: ExponentVector,
    pub steps: Vec<Step>,
    pub terminal: ModuleVector,
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start\tdeg={}", self.start)?;
        for (n, s) in self.steps.iter().enumerate() {
            let rule = match s.rule {
                Rule::Lemma => "lemma",
                Rule::EvenOdd => "even-odd",
            };
            writeln!(f, "step {}\t{}\t{rule}\tdeg={}\tweight={}\tlength={}", n + 1, s.op, s.deg, fmt_half(s.weight2 as i32), s.length)?;
        }
        write!(f, "terminal\t{}", self.terminal)
    }
}

impl Lab {
    /// The scalar by which `T_u` acts on `M`, if it acts by one.
    fn t_u_scalar(&self) -> Option<Scalar> {
        let m = &self.spec.module;
        let t = GeneratorId::of(Kind::T, self.u2);
        let mut lambda: Option<Scalar> = None;
        for i in 0..m.dim() {
            let img = m.act(t, i).ok()?;
            let [(j, c)] = img.as_slice() else { return None };
            if *j != i || lambda.as_ref().is_some_and(|l| l != c) {
                return None;
            }
            lambda = Some(c.clone());
        }
        lambda
    }

    fn apply(&self, op: &Lowering, v: &ModuleVector) -> Result<ModuleVector, LabError> {
        Ok(match op {
            Lowering::Gen(x) => self.induced.act(*x, v)?,
            Lowering::Shifted(x, l) => self.induced.act(*x, v)?.minus(&v.scaled(l)),
        })
    }

    /// One descent step. The result's degree is checked against the prediction
    /// of the rule used.
    pub fn reduce_step(&self, v: &ModuleVector) -> Result<(Lowering, Rule, ModuleVector), LabError> {
        let sd = supp_deg(v).map_err(|_| LabError::ZeroVector)?;
        let n_hat = sd.deg.min_nonzero_slot().ok_or(LabError::AlreadyInM)?;
        let e = sd.deg.get(n_hat);
        let (op, rule, drop) = if n_hat % 2 == 1 || e % 2 == 1 {
            (Lowering::Gen(lowering_generator(n_hat, self.u2)), Rule::Lemma, 1)
        } else if n_hat >= 4 {
            let n = (n_hat / 2) as i32;
            (Lowering::Gen(GeneratorId::of(Kind::T, self.u2 + 2 * (n - 1))), Rule::EvenOdd, 2)
        } else {
            let lambda = self.t_u_scalar().ok_or_else(|| {
                LabError::Precondition(format!("deg {} needs T_u to act on M by a scalar", sd.deg))
            })?;
            (Lowering::Shifted(GeneratorId::of(Kind::T, self.u2), lambda), Rule::EvenOdd, 2)
        };
        let next = self.apply(&op, v)?;
        let expected = sd.deg.sub_at(n_hat, drop).expect("exponent is large enough");
        let got = supp_deg(&next).map_err(|_| LabError::Invariant(format!("{op} sends {v} to 0")))?;
        if got.deg != expected {
            return Err(LabError::Invariant(format!("{op}·({v}) has deg {} but expected {expected}", got.deg)));
        }
        Ok((op, rule, next))
    }

    /// Default step budget for `v`: the size of the truncated set below its support.
    pub fn default_budget(&self, v: &ModuleVector) -> Result<usize, LabError> {
        if v.is_zero() {
            return Err(LabError::ZeroVector);
        }
        let max_len = v.terms().map(|((i, _), _)| i.length()).max().unwrap_or(0);
        let max_w2 = v.terms().map(|((i, _), _)| i.weight2()).max().unwrap_or(0);
        Ok(enumerate(max_w2, max_len + LENGTH_SLACK).len())
    }

    /// Iterates [`Lab::reduce_step`] until `deg = 0`.
    pub fn reduce_to_m(&self, v: &ModuleVector, budget: Option<usize>) -> Result<ReductionTrace, LabError> {
        let budget = match budget {
            Some(b) => b,
            None => self.default_budget(v)?,
        };
        let start = supp_deg(v).map_err(|_| LabError::ZeroVector)?.deg;
        let mut trace = ReductionTrace { start, steps: Vec::new(), terminal: v.clone() };
        loop {
            let sd = supp_deg(&trace.terminal).map_err(|_| LabError::ZeroVector)?;
            if sd.deg.is_zero() {
                return Ok(trace);
            }
            if trace.steps.len() == budget {
                return Err(LabError::Budget(Box::new(trace)));
            }
            let (op, rule, next) = self.reduce_step(&trace.terminal)?;
            let sd = supp_deg(&next).expect("reduce_step returns nonzero vectors");
            trace.steps.push(Step { op, rule, weight2: sd.weight2, length: sd.deg.length(), deg: sd.deg });
            trace.terminal = next;
        }
    }
}
