//! Scenario files: one `key = value` per line, `#` starts a comment.
//! Complex values are written `re+imi`, e.g. `0.3-1.2i`.

use std::collections::BTreeMap;

use slater_core::{Complex, TruncationPolicy};

use crate::error::{usage, CliError, CliResult};
use crate::target::{Need, Target};

pub const MAX_TERMS_ENV: &str = "SLATER_ADDITION_MAX_TERMS";
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;
pub const DEFAULT_COMPARE_TOL: f64 = 1e-6;

/// Keys understood for every target.
const GLOBAL_KEYS: &[&str] = &[
    "target",
    "max_terms",
    "rel_tol",
    "abs_tol",
    "tail_window",
    "tol",
    "quad_tol",
];

/// Where a key/value pair came from, for error messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Line(usize),
    Flag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub origin: Origin,
}

fn located(origin: &Origin, msg: String) -> CliError {
    match origin {
        Origin::Line(line) => CliError::Scenario { line: *line, msg },
        Origin::Flag => CliError::Usage(msg),
    }
}

pub fn parse_scenario_text(text: &str) -> CliResult<Vec<Entry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| CliError::Scenario {
            line: i + 1,
            msg: format!("expected `key = value`, got `{line}`"),
        })?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || value.is_empty() {
            return Err(CliError::Scenario {
                line: i + 1,
                msg: "empty key or value".into(),
            });
        }
        out.push(Entry {
            key: key.to_string(),
            value: value.to_string(),
            origin: Origin::Line(i + 1),
        });
    }
    Ok(out)
}

/// A `--param key=value` argument.
pub fn parse_param_flag(arg: &str) -> CliResult<Entry> {
    let (key, value) = arg
        .split_once('=')
        .ok_or_else(|| usage(format!("--param expects key=value, got `{arg}`")))?;
    let (key, value) = (key.trim(), value.trim());
    if key.is_empty() || value.is_empty() {
        return Err(usage(format!("--param expects key=value, got `{arg}`")));
    }
    Ok(Entry {
        key: key.to_string(),
        value: value.to_string(),
        origin: Origin::Flag,
    })
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a real number"))?;
    if v.is_nan() {
        return Err(format!("`{s}` is not a number"));
    }
    Ok(v)
}

/// `1.5`, `2i`, `-i`, `0.3-1.2i`, `1e-3+2.5e+1i`.
pub fn parse_complex(s: &str) -> Result<Complex, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("`{s}` is not a complex number (expected re+imi)");
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(&t).map(|re| Complex::new(re, 0.0));
    };
    // The split point is the last sign that is not a leading sign or part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_real(other).map_err(|_| bad())?,
    };
    let re = parse_real(re).map_err(|_| bad())?;
    Ok(Complex::new(re, im))
}

fn parse_count(s: &str) -> Result<usize, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

/// Resolved parameter values of one target, defaults filled in.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params {
    values: BTreeMap<String, String>,
}

impl Params {
    pub fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    pub fn text(&self, key: &str) -> CliResult<&str> {
        self.values
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| usage(format!("missing parameter `{key}`")))
    }

    pub fn real(&self, key: &str) -> CliResult<f64> {
        parse_real(self.text(key)?).map_err(|m| usage(format!("{key}: {m}")))
    }

    pub fn real_or(&self, key: &str, fallback: f64) -> CliResult<f64> {
        if self.has(key) {
            self.real(key)
        } else {
            Ok(fallback)
        }
    }

    pub fn complex(&self, key: &str) -> CliResult<Complex> {
        parse_complex(self.text(key)?).map_err(|m| usage(format!("{key}: {m}")))
    }

    pub fn count(&self, key: &str) -> CliResult<usize> {
        parse_count(self.text(key)?).map_err(|m| usage(format!("{key}: {m}")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

/// Everything a command needs to evaluate one target.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub target: Target,
    pub params: Params,
    pub policy: TruncationPolicy,
    /// Tolerance for `compare`, relative to the reference.
    pub tol: f64,
    /// Tolerance handed to every quadrature.
    pub quad_tol: f64,
    pub allow_k_gt_1: bool,
}

/// Inputs gathered from the command line before validation.
#[derive(Debug, Clone, Default)]
pub struct ScenarioInput {
    pub target: Option<String>,
    /// Scenario file entries; `--param` entries come after and win.
    pub entries: Vec<Entry>,
    pub tol: Option<f64>,
    pub allow_k_gt_1: bool,
    /// Value of the max-terms environment variable, if set.
    pub env_max_terms: Option<String>,
}

impl Scenario {
    pub fn build(input: ScenarioInput) -> CliResult<Scenario> {
        let mut merged: BTreeMap<String, Entry> = BTreeMap::new();
        for e in input.entries {
            merged.insert(e.key.clone(), e);
        }

        let target = match (input.target.as_deref(), merged.get("target")) {
            (Some(name), Some(e)) if Target::from_name(name) != Target::from_name(&e.value) => {
                return Err(located(
                    &e.origin,
                    format!("target `{}` conflicts with command-line target `{name}`", e.value),
                ));
            }
            (Some(name), _) => Target::from_name(name).ok_or_else(|| usage(format!("unknown target `{name}`")))?,
            (None, Some(e)) => Target::from_name(&e.value)
                .ok_or_else(|| located(&e.origin, format!("unknown target `{}`", e.value)))?,
            (None, None) => {
                return Err(usage(
                    "no target given (positional TARGET or `target =` in the scenario)",
                ))
            }
        };

        let mut policy = TruncationPolicy::default();
        if let Some(raw) = &input.env_max_terms {
            policy.max_terms = parse_count(raw).map_err(|m| usage(format!("{MAX_TERMS_ENV}: {m}")))?;
        }
        let mut tol = DEFAULT_COMPARE_TOL;
        let mut quad_tol = DEFAULT_QUAD_TOL;
        let mut values = BTreeMap::new();
        for (key, e) in &merged {
            let fail = |m: String| located(&e.origin, format!("{key}: {m}"));
            match key.as_str() {
                "target" => {}
                "max_terms" => policy.max_terms = parse_count(&e.value).map_err(fail)?,
                "tail_window" => policy.tail_window = parse_count(&e.value).map_err(fail)?,
                "rel_tol" => policy.rel_tol = parse_real(&e.value).map_err(fail)?,
                "abs_tol" => policy.abs_tol = parse_real(&e.value).map_err(fail)?,
                "tol" => tol = parse_real(&e.value).map_err(fail)?,
                "quad_tol" => quad_tol = parse_real(&e.value).map_err(fail)?,
                _ if target.param(key).is_some() => {
                    values.insert(key.clone(), e.value.clone());
                }
                _ => {
                    let known: Vec<&str> = target.params().iter().map(|p| p.name).collect();
                    return Err(located(
                        &e.origin,
                        format!("unknown key `{key}` for {target} (accepts {})", known.join(", ")),
                    ));
                }
            }
        }
        debug_assert!(GLOBAL_KEYS.iter().all(|k| target.param(k).is_none()));
        if let Some(t) = input.tol {
            tol = t;
        }
        if !(tol >= 0.0) || !(quad_tol > 0.0) {
            return Err(usage("tol must be non-negative and quad_tol positive"));
        }
        policy.validate()?;

        let mut missing = Vec::new();
        for p in target.params() {
            if values.contains_key(p.name) {
                continue;
            }
            match p.need {
                Need::Required => missing.push(p.name),
                Need::Default(v) => {
                    values.insert(p.name.to_string(), v.to_string());
                }
                Need::Optional => {}
            }
        }
        if !missing.is_empty() {
            return Err(usage(format!("{target} needs {}", missing.join(", "))));
        }

        let params = Params { values };
        if params.has("k") && !input.allow_k_gt_1 {
            let k = params.real("k")?;
            if k > 1.0 {
                return Err(usage(format!(
                    "k = {k} exceeds 1, outside the proven convergence region; pass --allow-k-gt-1 to evaluate anyway"
                )));
            }
        }
        Ok(Scenario {
            target,
            params,
            policy,
            tol,
            quad_tol,
            allow_k_gt_1: input.allow_k_gt_1,
        })
    }

    /// The target's example point, for listings and tests.
    pub fn example(target: Target) -> CliResult<Scenario> {
        let entries = target
            .example()
            .iter()
            .map(|(k, v)| Entry {
                key: k.to_string(),
                value: v.to_string(),
                origin: Origin::Flag,
            })
            .collect();
        Scenario::build(ScenarioInput {
            target: Some(target.name().into()),
            entries,
            ..Default::default()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let c = |s| parse_complex(s).unwrap();
        assert_eq!(c("1.5"), Complex::new(1.5, 0.0));
        assert_eq!(c("2i"), Complex::new(0.0, 2.0));
        assert_eq!(c("-i"), Complex::new(0.0, -1.0));
        assert_eq!(c("0.3-1.2i"), Complex::new(0.3, -1.2));
        assert_eq!(c("1e-3+2.5e+1i"), Complex::new(1e-3, 25.0));
        assert_eq!(c("-1e-3-i"), Complex::new(-1e-3, -1.0));
        assert_eq!(c(" 1 + 2i "), Complex::new(1.0, 2.0));
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn scenario_lines() {
        let e = parse_scenario_text("# header\ntarget = theorem1\n\nB = 0.13  # trailing\nC=0.11\n").unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e[1].key, "B");
        assert_eq!(e[1].value, "0.13");
        assert_eq!(e[2].origin, Origin::Line(5));
        match parse_scenario_text("B 0.13") {
            Err(CliError::Scenario { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    fn input(target: &str, text: &str) -> ScenarioInput {
        ScenarioInput {
            target: Some(target.into()),
            entries: parse_scenario_text(text).unwrap(),
            ..Default::default()
        }
    }

    #[test]
    fn unknown_and_missing_keys() {
        assert!(Scenario::build(input("theorem1", "B=0.13\nC=0.11\nx2=0.17\nk=0.23\nfoo=1")).is_err());
        assert!(Scenario::build(input("theorem1", "B=0.13\nC=0.11\nx2=0.17")).is_err());
        let s = Scenario::build(input("theorem1", "B=0.13\nC=0.11\nx2=0.17\nk=0.23\nmax_terms=4")).unwrap();
        assert_eq!(s.policy.max_terms, 4);
        assert_eq!(s.params.text("branch").unwrap(), "principal");
    }

    #[test]
    fn env_max_terms_is_overridden_by_scenario() {
        let mut i = input("theorem1", "B=0.13\nC=0.11\nx2=0.17\nk=0.23");
        i.env_max_terms = Some("7".into());
        assert_eq!(Scenario::build(i.clone()).unwrap().policy.max_terms, 7);
        i.entries.push(parse_param_flag("max_terms=9").unwrap());
        assert_eq!(Scenario::build(i).unwrap().policy.max_terms, 9);
    }

    #[test]
    fn k_gate() {
        let text = "B=0.13\nC=0.11\nx2=0.17\nk=1.5";
        assert!(matches!(
            Scenario::build(input("theorem1", text)),
            Err(CliError::Usage(_))
        ));
        let mut i = input("theorem1", text);
        i.allow_k_gt_1 = true;
        assert!(Scenario::build(i).is_ok());
    }

    #[test]
    fn target_conflict() {
        assert!(Scenario::build(input("theorem1", "target = theorem5\nB=0.13\nC=0.11\nx2=0.17\nk=0.2")).is_err());
        assert!(Scenario::build(input(
            "theorem1",
            "target = theorem1_eval\nB=0.13\nC=0.11\nx2=0.17\nk=0.2"
        ))
        .is_ok());
    }

    #[test]
    fn every_example_builds() {
        for &t in Target::ALL {
            Scenario::example(t).unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }
}
