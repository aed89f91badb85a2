use std::sync::Arc;

use crate::algebra::{GeneratorId, Kind, UntwistedPmPresentation};
use crate::pbw::{print_element, untwisted_negative, BaseModule, Element, InducedModule, ModuleError, Word};
use crate::scalar::Scalar;

/// The lowest-weight vector `1`: killed by the positive part, `L_0` and `J_0`.
struct Vacuum;

impl BaseModule for Vacuum {
    fn dim(&self) -> usize {
        1
    }

    fn label(&self, _: usize) -> String {
        "1".into()
    }

    fn act(&self, x: GeneratorId, _: usize) -> Result<Vec<(usize, Scalar)>, ModuleError> {
        if x.degree2() >= 0 {
            Ok(Vec::new())
        } else {
            Err(ModuleError::Invalid(format!("{x} is a creation letter, not absorbed by the vacuum")))
        }
    }

    fn parity(&self, _: usize) -> Option<u8> {
        Some(0)
    }
}

/// The untwisted Verma module `M(c, 0, 0)` over the `±` basis, truncated to
/// PBW vectors of doubled depth `<= depth2`.
pub struct VermaModule {
    engine: InducedModule,
    depth2: i32,
    basis: Vec<Word>,
}

impl VermaModule {
    pub fn new(c: Scalar, depth2: i32) -> Self {
        let engine = InducedModule::new(&UntwistedPmPresentation, untwisted_negative(), Arc::new(Vacuum), c);
        let mut letters: Vec<GeneratorId> = Vec::new();
        for kind in [Kind::Lu, Kind::J, Kind::GPlus, Kind::GMinus] {
            for i2 in -depth2..0 {
                if let Ok(g) = GeneratorId::new(kind, i2) {
                    letters.push(g);
                }
            }
        }
        let template = engine.template().clone();
        letters.sort_by_key(|g| std::cmp::Reverse(template.rank(g)));
        let mut basis = Vec::new();
        fill(&letters, 0, depth2, &mut Vec::new(), &mut basis);
        basis.sort_by_key(|w| (depth(w), w.iter().map(|(_, k)| *k).sum::<u32>()));
        VermaModule { engine, depth2, basis }
    }

    pub fn engine(&self) -> &InducedModule {
        &self.engine
    }

    pub fn depth2(&self) -> i32 {
        self.depth2
    }

    /// PBW basis words, by depth then length.
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    /// `1`
    pub fn vacuum(&self) -> Element {
        self.engine.unit(0)
    }

    /// Applies `x`; errors when the result leaves the truncation.
    pub fn act(&self, x: GeneratorId, v: &Element) -> Result<Element, ModuleError> {
        let out = self.engine.act(x, v)?;
        if let Some(((w, _), _)) = out.iter().find(|((w, _), _)| depth(w) > self.depth2) {
            return Err(ModuleError::Truncation(format!(
                "{} exceeds depth {}/2",
                print_element(&std::iter::once(((w.clone(), 0), Scalar::one())).collect(), &self.engine),
                self.depth2
            )));
        }
        Ok(out)
    }

    pub fn act_word(&self, xs: &[GeneratorId], v: &Element) -> Result<Element, ModuleError> {
        let mut cur = v.clone();
        for x in xs.iter().rev() {
            cur = self.act(*x, &cur)?;
        }
        Ok(cur)
    }

    pub fn show(&self, e: &Element) -> String {
        print_element(e, &self.engine)
    }
}

fn depth(w: &Word) -> i32 {
    w.iter().map(|(g, k)| -g.degree2() * *k as i32).sum()
}

fn fill(letters: &[GeneratorId], from: usize, budget: i32, cur: &mut Word, out: &mut Vec<Word>) {
    if from == letters.len() {
        out.push(cur.clone());
        return;
    }
    let g = letters[from];
    let step = -g.degree2();
    let cap = if g.is_odd() { 1 } else { u32::MAX };
    let mut k = 0u32;
    while k <= cap && (k as i32) * step <= budget {
        if k > 0 {
            cur.push((g, k));
        }
        fill(letters, from + 1, budget - k as i32 * step, cur, out);
        if k > 0 {
            cur.pop();
        }
        k += 1;
    }
}

/// Failures of the singular-vector property for `G^±_{-1/2} 1`: each must be
/// killed by `L_1, L_2, J_1, G^±_{1/2}, G^±_{3/2}` and be an `L_0`, `J_0` eigenvector.
pub fn verma_singular_failures(m: &VermaModule) -> Vec<String> {
    let g = GeneratorId::of;
    let killers = [
        g(Kind::Lu, 2),
        g(Kind::Lu, 4),
        g(Kind::J, 2),
        g(Kind::GPlus, 1),
        g(Kind::GMinus, 1),
        g(Kind::GPlus, 3),
        g(Kind::GMinus, 3),
    ];
    let mut failures = Vec::new();
    for top in [g(Kind::GPlus, -1), g(Kind::GMinus, -1)] {
        let v = match m.act(top, &m.vacuum()) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("{top}·1: {e}"));
                continue;
            }
        };
        for x in killers {
            match m.act(x, &v) {
                Ok(r) if r.is_empty() => {}
                Ok(r) => failures.push(format!("{x}·{top}·1 = {}", m.show(&r))),
                Err(e) => failures.push(format!("{x}·{top}·1: {e}")),
            }
        }
        for h in [g(Kind::Lu, 0), g(Kind::J, 0)] {
            match m.act(h, &v) {
                Ok(r) => {
                    let ratio = r.get(&(vec![(top, 1)], 0)).cloned().unwrap_or_default();
                    let mut expect = Element::new();
                    if !ratio.is_zero() {
                        expect.insert((vec![(top, 1)], 0), ratio);
                    }
                    if r != expect {
                        failures.push(format!("{h}·{top}·1 = {} is not a multiple", m.show(&r)));
                    }
                }
                Err(e) => failures.push(format!("{h}·{top}·1: {e}")),
            }
        }
    }
    failures
}
