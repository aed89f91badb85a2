use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::algebra::{parse_index2, GeneratorId, Kind};
use crate::parse::{parse_label_combo, parse_scalar};
use crate::pbw::{BaseModule, TwistedInduced};
use crate::scalar::Scalar;

use super::{
    character_from_pairs, highorder_letters, reject_trivial, validate_character, Character, CharacterInduced,
    SubalgebraSelector, TableModule, VermaModule, ZeroModeInduced, ZooError,
};

/// Bracket window used when validating characters.
pub const VALIDATION_WINDOW: i32 = 12;

/// Which subalgebra a spec's module is a module over, and so how it induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Induction {
    /// A `b`-module; induce with letters `T_{<=0}`.
    FromB,
    /// A `b + T_0`-module; induce with letters `T_{<0}`.
    FromBPlusT0,
}

/// A finite (possibly truncated) module with its provenance.
#[derive(Clone)]
pub struct BModuleSpec {
    pub family: String,
    pub params: Vec<(String, String)>,
    pub module: Arc<dyn BaseModule>,
    pub c: Scalar,
    pub ungraded: bool,
    pub induction: Induction,
    pub notes: Vec<String>,
}

impl BModuleSpec {
    pub fn induce(&self) -> TwistedInduced {
        match self.induction {
            Induction::FromB => TwistedInduced::new(self.module.clone(), self.c.clone()),
            Induction::FromBPlusT0 => TwistedInduced::from_b_plus_t0(self.module.clone(), self.c.clone()),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.module.dim()).map(|i| self.module.label(i)).collect()
    }
}

impl std::fmt::Debug for BModuleSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BModuleSpec({}, dim {}, c = {})", self.family, self.module.dim(), self.c)
    }
}

/// `W(phi, c)`: the one-dimensional ungraded `b`-module with `T_{1/2}` acting by `lambda`.
pub fn whittaker_spec(lambda: Scalar, c: Scalar) -> Result<BModuleSpec, ZooError> {
    let phi = character_from_pairs(&[(GeneratorId::of(Kind::T, 1), lambda.clone())]);
    whittaker_from_character(phi, c, vec![("lambda".into(), lambda.to_string())])
}

/// A one-dimensional `b`-module from an arbitrary character; rejects values
/// the homomorphism property forbids.
pub fn whittaker_from_character(
    phi: Character,
    c: Scalar,
    params: Vec<(String, String)>,
) -> Result<BModuleSpec, ZooError> {
    validate_character(SubalgebraSelector::Plus, &phi, VALIDATION_WINDOW)?;
    let mut notes = Vec::new();
    if phi.is_empty() {
        notes.push("trivial character: not a simplicity candidate".into());
    }
    let module = CharacterInduced::new(SubalgebraSelector::Plus, Vec::new(), phi, c.clone(), false, 0, 0)?;
    Ok(BModuleSpec {
        family: "whittaker".into(),
        params: with_c(params, &c),
        module: Arc::new(module),
        c,
        ungraded: true,
        induction: Induction::FromB,
        notes,
    })
}

fn with_c(mut params: Vec<(String, String)>, c: &Scalar) -> Vec<(String, String)> {
    params.push(("c".into(), c.to_string()));
    params
}

/// `V_phi = Ind_{frak T}^{b} C_phi` with `phi` supported on `L_1`, `T_{3/2}`;
/// basis `T_{1/2}^a v0` and `T_{1/2}^a G_{1/2} v0`.
pub fn generalized_spec(
    phi_l1: Scalar,
    phi_t32: Scalar,
    c: Scalar,
    max_weight2: i32,
    max_length: u32,
) -> Result<BModuleSpec, ZooError> {
    let phi = character_from_pairs(&[
        (GeneratorId::of(Kind::L, 2), phi_l1.clone()),
        (GeneratorId::of(Kind::T, 3), phi_t32.clone()),
    ]);
    reject_trivial(&phi, "the generalized family")?;
    validate_character(SubalgebraSelector::FrakT, &phi, VALIDATION_WINDOW)?;
    let letters = vec![GeneratorId::of(Kind::T, 1), GeneratorId::of(Kind::G, 1)];
    let module =
        CharacterInduced::new(SubalgebraSelector::FrakT, letters, phi, c.clone(), true, max_weight2, max_length)?;
    Ok(BModuleSpec {
        family: "generalized".into(),
        params: with_c(
            vec![
                ("phi.L1".into(), phi_l1.to_string()),
                ("phi.T3/2".into(), phi_t32.to_string()),
                ("max_weight2".into(), max_weight2.to_string()),
                ("max_length".into(), max_length.to_string()),
            ],
            &c,
        ),
        module: Arc::new(module),
        c,
        ungraded: false,
        induction: Induction::FromB,
        notes: Vec::new(),
    })
}

/// `Ind_{T^(s)}^{b} C_phi` for `s` (doubled) in `1/2 + Z_+`, truncated.
pub fn highorder_spec(
    s2: i32,
    phi: Character,
    c: Scalar,
    max_weight2: i32,
    max_length: u32,
) -> Result<BModuleSpec, ZooError> {
    if s2 <= 0 || s2 % 2 == 0 {
        return Err(ZooError::Invalid(format!("s must lie in 1/2 + Z_+, got {s2}/2")));
    }
    let phi: Character = phi.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    reject_trivial(&phi, "the high-order family")?;
    let kernel = SubalgebraSelector::TU(s2);
    validate_character(kernel, &phi, VALIDATION_WINDOW)?;
    let params = phi.iter().map(|(g, v)| (format!("phi.{g}"), v.to_string())).collect();
    let module = CharacterInduced::new(kernel, highorder_letters(s2), phi, c.clone(), true, max_weight2, max_length)?;
    Ok(BModuleSpec {
        family: "highorder".into(),
        params: with_c(params, &c),
        module: Arc::new(module),
        c,
        ungraded: false,
        induction: Induction::FromB,
        notes: vec!["the induced space is infinite-dimensional; only its truncation is represented".into()],
    })
}

/// `Ind_b^{b + T_0}(M)` with `k <= max_k`.
pub fn b_plus_t0_induce(m: &BModuleSpec, max_k: u32) -> Result<BModuleSpec, ZooError> {
    if m.induction != Induction::FromB {
        return Err(ZooError::Invalid("b_t0 takes a b-module".into()));
    }
    let module = ZeroModeInduced::new(m.module.clone(), m.c.clone(), max_k)?;
    let mut params = vec![("inner".to_string(), m.family.clone()), ("max_k".to_string(), max_k.to_string())];
    params.extend(m.params.iter().cloned());
    Ok(BModuleSpec {
        family: "b_t0".into(),
        params,
        module: Arc::new(module),
        c: m.c.clone(),
        ungraded: m.ungraded,
        induction: Induction::FromBPlusT0,
        notes: m.notes.clone(),
    })
}

/// Line-oriented `key = value` configuration; `#` starts a comment.
#[derive(Debug, Clone, Default)]
pub struct Config {
    entries: BTreeMap<String, (usize, String)>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, ZooError> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| ZooError::Config { line: n + 1, reason: format!("expected `key = value`, got `{raw}`") })?;
            let k = k.trim().to_string();
            if entries.insert(k.clone(), (n + 1, v.trim().to_string())).is_some() {
                return Err(ZooError::Config { line: n + 1, reason: format!("duplicate key `{k}`") });
            }
        }
        Ok(Config { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|(_, v)| v.as_str())
    }

    fn line(&self, key: &str) -> usize {
        self.entries.get(key).map(|(n, _)| *n).unwrap_or(0)
    }

    fn err(&self, key: &str, reason: String) -> ZooError {
        ZooError::Config { line: self.line(key), reason }
    }

    pub fn require(&self, key: &str) -> Result<&str, ZooError> {
        self.get(key).ok_or_else(|| ZooError::Config { line: 0, reason: format!("missing key `{key}`") })
    }

    pub fn scalar(&self, key: &str, default: Option<Scalar>) -> Result<Scalar, ZooError> {
        match (self.get(key), default) {
            (Some(v), _) => parse_scalar(v).map_err(|e| self.err(key, format!("`{key}`: {e}"))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(self.require(key).unwrap_err()),
        }
    }

    /// A half-integer value, doubled.
    pub fn half2(&self, key: &str, default: Option<i32>) -> Result<i32, ZooError> {
        match (self.get(key), default) {
            (Some(v), _) => parse_index2(v).ok_or_else(|| self.err(key, format!("`{key}`: `{v}` is not a half-integer"))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(self.require(key).unwrap_err()),
        }
    }

    pub fn nat(&self, key: &str, default: Option<u32>) -> Result<u32, ZooError> {
        match (self.get(key), default) {
            (Some(v), _) => v.parse().map_err(|_| self.err(key, format!("`{key}`: `{v}` is not a natural number"))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(self.require(key).unwrap_err()),
        }
    }

    /// Entries `prefix.rest = value` as `(rest, value)`, in key order.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = (&'a str, &'a str)> + 'a {
        self.entries.iter().filter_map(move |(k, (_, v))| {
            k.strip_prefix(prefix).and_then(|r| r.strip_prefix('.')).map(|r| (r, v.as_str()))
        })
    }

    /// Rejects keys outside `keys` and `prefixes`.
    pub fn expect_only(&self, keys: &[&str], prefixes: &[&str]) -> Result<(), ZooError> {
        for k in self.entries.keys() {
            let known = keys.contains(&k.as_str())
                || prefixes.iter().any(|p| k.strip_prefix(p).is_some_and(|r| r.starts_with('.')));
            if !known {
                return Err(self.err(k, format!("unknown key `{k}`")));
            }
        }
        Ok(())
    }

    /// A copy without the given keys.
    pub fn without(&self, keys: &[&str]) -> Config {
        let entries = self.entries.iter().filter(|(k, _)| !keys.contains(&k.as_str())).map(|(k, v)| (k.clone(), v.clone())).collect();
        Config { entries }
    }

    pub fn with(&self, key: &str, value: &str) -> Config {
        let mut c = self.clone();
        c.entries.insert(key.to_string(), (0, value.to_string()));
        c
    }
}

/// Parses `L1`, `T3/2`, `G[1/2]` style names used in `phi.<gen>` keys.
pub fn parse_short_generator(text: &str) -> Option<GeneratorId> {
    if text.contains('[') {
        return text.parse().ok();
    }
    let kind = match text.chars().next()? {
        'L' => Kind::L,
        'T' => Kind::T,
        'G' => Kind::G,
        _ => return None,
    };
    GeneratorId::new(kind, parse_index2(&text[1..])?).ok()
}

/// A constructed module: a `b`-module spec or the untwisted Verma module.
pub enum Built {
    BModule(BModuleSpec),
    Verma(VermaModule),
}

impl Built {
    pub fn into_bmodule(self) -> Result<BModuleSpec, ZooError> {
        match self {
            Built::BModule(s) => Ok(s),
            Built::Verma(_) => Err(ZooError::Invalid("the verma family is not a b-module".into())),
        }
    }
}

/// A named constructor for modules from configuration.
pub trait ModuleFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn build(&self, cfg: &Config, registry: &FamilyRegistry) -> Result<Built, ZooError>;
}

const TRUNC_KEYS: [&str; 2] = ["max_weight", "max_length"];

fn truncation(cfg: &Config) -> Result<(i32, u32), ZooError> {
    let w2 = cfg.half2("max_weight", Some(4))?;
    let l = cfg.nat("max_length", Some(3))?;
    if w2 < 0 {
        return Err(ZooError::Config { line: cfg.line("max_weight"), reason: "max_weight must be >= 0".into() });
    }
    Ok((w2, l))
}

struct Whittaker;

impl ModuleFamily for Whittaker {
    fn name(&self) -> &'static str {
        "whittaker"
    }

    fn build(&self, cfg: &Config, _: &FamilyRegistry) -> Result<Built, ZooError> {
        cfg.expect_only(&["family", "lambda", "c"], &["phi"])?;
        let c = cfg.scalar("c", Some(Scalar::zero()))?;
        let mut pairs = vec![(GeneratorId::of(Kind::T, 1), cfg.scalar("lambda", Some(Scalar::zero()))?)];
        for (g, _) in cfg.with_prefix("phi") {
            let key = format!("phi.{g}");
            let gen = parse_short_generator(g).ok_or_else(|| cfg.err(&key, format!("unknown generator in `{key}`")))?;
            pairs.push((gen, cfg.scalar(&key, None)?));
        }
        let mut phi = Character::new();
        for (g, v) in pairs {
            let e: &mut Scalar = phi.entry(g).or_default();
            *e += &v;
        }
        phi.retain(|_, v| !v.is_zero());
        let params = cfg.entries.iter().filter(|(k, _)| k.as_str() != "family" && k.as_str() != "c");
        let params = params.map(|(k, (_, v))| (k.clone(), v.clone())).collect();
        Ok(Built::BModule(whittaker_from_character(phi, c, params)?))
    }
}

struct Generalized;

impl ModuleFamily for Generalized {
    fn name(&self) -> &'static str {
        "generalized"
    }

    fn build(&self, cfg: &Config, _: &FamilyRegistry) -> Result<Built, ZooError> {
        cfg.expect_only(&["family", "c", "phi.L1", "phi.T3/2", TRUNC_KEYS[0], TRUNC_KEYS[1]], &[])?;
        let (w2, l) = truncation(cfg)?;
        let spec = generalized_spec(
            cfg.scalar("phi.L1", Some(Scalar::zero()))?,
            cfg.scalar("phi.T3/2", Some(Scalar::zero()))?,
            cfg.scalar("c", Some(Scalar::zero()))?,
            w2,
            l,
        )?;
        Ok(Built::BModule(spec))
    }
}

struct HighOrder;

impl ModuleFamily for HighOrder {
    fn name(&self) -> &'static str {
        "highorder"
    }

    fn build(&self, cfg: &Config, _: &FamilyRegistry) -> Result<Built, ZooError> {
        cfg.expect_only(&["family", "c", "s", TRUNC_KEYS[0], TRUNC_KEYS[1]], &["phi"])?;
        let (w2, l) = truncation(cfg)?;
        let mut phi = Character::new();
        for (g, _) in cfg.with_prefix("phi") {
            let key = format!("phi.{g}");
            let gen = parse_short_generator(g).ok_or_else(|| cfg.err(&key, format!("unknown generator in `{key}`")))?;
            phi.insert(gen, cfg.scalar(&key, None)?);
        }
        let spec = highorder_spec(cfg.half2("s", None)?, phi, cfg.scalar("c", Some(Scalar::zero()))?, w2, l)?;
        Ok(Built::BModule(spec))
    }
}

struct BPlusT0;

impl ModuleFamily for BPlusT0 {
    fn name(&self) -> &'static str {
        "b_t0"
    }

    fn build(&self, cfg: &Config, registry: &FamilyRegistry) -> Result<Built, ZooError> {
        let inner_name = cfg.require("inner")?;
        if inner_name == self.name() {
            return Err(cfg.err("inner", "b_t0 cannot wrap itself".into()));
        }
        let max_k = cfg.nat("max_k", Some(3))?;
        let inner_cfg = cfg.without(&["inner", "max_k"]).with("family", inner_name);
        let inner = registry.build(&inner_cfg)?.into_bmodule()?;
        Ok(Built::BModule(b_plus_t0_induce(&inner, max_k)?))
    }
}

struct Table;

impl ModuleFamily for Table {
    fn name(&self) -> &'static str {
        "table"
    }

    fn build(&self, cfg: &Config, _: &FamilyRegistry) -> Result<Built, ZooError> {
        cfg.expect_only(&["family", "c", "labels", "ungraded"], &["parity", "act"])?;
        let labels: Vec<String> =
            cfg.require("labels")?.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        let unique: BTreeSet<&String> = labels.iter().collect();
        if labels.is_empty() || unique.len() != labels.len() {
            return Err(cfg.err("labels", "labels must be nonempty and distinct".into()));
        }
        let ungraded = matches!(cfg.get("ungraded"), Some("true" | "yes" | "1"));
        let mut parity = vec![0u8; labels.len()];
        for (l, v) in cfg.with_prefix("parity") {
            let key = format!("parity.{l}");
            let j = labels.iter().position(|x| x == l).ok_or_else(|| cfg.err(&key, format!("unknown label `{l}`")))?;
            parity[j] = match v {
                "0" => 0,
                "1" => 1,
                _ => return Err(cfg.err(&key, format!("parity must be 0 or 1, got `{v}`"))),
            };
        }
        let c = cfg.scalar("c", Some(Scalar::zero()))?;
        let mut m = TableModule::new(labels.clone(), (!ungraded).then_some(parity), c.clone());
        for (rest, v) in cfg.with_prefix("act") {
            let key = format!("act.{rest}");
            let close = rest.find(']').ok_or_else(|| cfg.err(&key, format!("expected `act.<gen>.<label>`, got `{key}`")))?;
            let gen: GeneratorId = rest[..=close].parse().map_err(|e| cfg.err(&key, format!("`{key}`: {e}")))?;
            let label = rest[close + 1..].strip_prefix('.').unwrap_or("");
            let j = labels.iter().position(|x| x == label).ok_or_else(|| cfg.err(&key, format!("unknown label `{label}`")))?;
            let image = parse_label_combo(v, &labels).map_err(|e| cfg.err(&key, format!("`{key}`: {e}")))?;
            m.set(gen, j, image);
        }
        let params = vec![("labels".into(), labels.join(","))];
        Ok(Built::BModule(BModuleSpec {
            family: "table".into(),
            params: with_c(params, &c),
            module: Arc::new(m),
            c,
            ungraded,
            induction: Induction::FromB,
            notes: Vec::new(),
        }))
    }
}

struct Verma;

impl ModuleFamily for Verma {
    fn name(&self) -> &'static str {
        "verma"
    }

    fn build(&self, cfg: &Config, _: &FamilyRegistry) -> Result<Built, ZooError> {
        cfg.expect_only(&["family", "c", "depth"], &[])?;
        let depth2 = cfg.half2("depth", Some(3))?;
        if depth2 < 0 {
            return Err(cfg.err("depth", "depth must be >= 0".into()));
        }
        Ok(Built::Verma(VermaModule::new(cfg.scalar("c", Some(Scalar::zero()))?, depth2)))
    }
}

/// Module families selectable by the `family` key.
pub struct FamilyRegistry {
    families: BTreeMap<String, Arc<dyn ModuleFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry { families: BTreeMap::new() }
    }

    pub fn with_presets() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(Whittaker));
        r.register(Arc::new(Generalized));
        r.register(Arc::new(HighOrder));
        r.register(Arc::new(BPlusT0));
        r.register(Arc::new(Table));
        r.register(Arc::new(Verma));
        r
    }

    pub fn register(&mut self, f: Arc<dyn ModuleFamily>) {
        self.families.insert(f.name().to_string(), f);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.families.keys().map(String::as_str)
    }

    pub fn build(&self, cfg: &Config) -> Result<Built, ZooError> {
        let name = cfg.require("family")?;
        let f = self.families.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.names().collect();
            cfg.err("family", format!("unknown family `{name}` (known: {})", known.join(", ")))
        })?;
        f.build(cfg, self)
    }

    pub fn build_text(&self, text: &str) -> Result<Built, ZooError> {
        self.build(&Config::parse(text)?)
    }
}
