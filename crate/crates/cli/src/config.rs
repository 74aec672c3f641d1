//! Line-oriented `key = value` config files. Precedence is CLI flags,
//! then config file, then built-in defaults.

use crate::CliError;
use std::path::PathBuf;

/// Optional settings shared by the subcommands; `None` means "not given".
#[derive(Debug, Default, Clone)]
pub struct Overlay {
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub c: Option<f64>,
    pub c_min: Option<f64>,
    pub c_max: Option<f64>,
    pub c_step: Option<f64>,
    pub n: Option<usize>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub model: Option<String>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
}

impl Overlay {
    /// Fill unset fields from `fallback`.
    pub fn or(mut self, fallback: Overlay) -> Overlay {
        self.k = self.k.or(fallback.k);
        self.l = self.l.or(fallback.l);
        self.c = self.c.or(fallback.c);
        self.c_min = self.c_min.or(fallback.c_min);
        self.c_max = self.c_max.or(fallback.c_max);
        self.c_step = self.c_step.or(fallback.c_step);
        self.n = self.n.or(fallback.n);
        self.trials = self.trials.or(fallback.trials);
        self.seed = self.seed.or(fallback.seed);
        self.model = self.model.or(fallback.model);
        self.out = self.out.or(fallback.out);
        self.tol = self.tol.or(fallback.tol);
        self
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str, line: usize) -> Result<T, CliError> {
    value.parse().map_err(|_| {
        CliError::Usage(format!(
            "config line {line}: bad value `{value}` for key `{key}`"
        ))
    })
}

/// Parse a config file body. Keys match the long CLI flags; `#` starts a
/// comment; blank lines are skipped.
pub fn parse_config(text: &str) -> Result<Overlay, CliError> {
    let mut o = Overlay::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("config line {lineno}: expected `key = value`"))
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "k" => o.k = Some(parse(key, value, lineno)?),
            "l" => o.l = Some(parse(key, value, lineno)?),
            "c" => o.c = Some(parse(key, value, lineno)?),
            "c-min" => o.c_min = Some(parse(key, value, lineno)?),
            "c-max" => o.c_max = Some(parse(key, value, lineno)?),
            "c-step" => o.c_step = Some(parse(key, value, lineno)?),
            "n" => o.n = Some(parse(key, value, lineno)?),
            "trials" => o.trials = Some(parse(key, value, lineno)?),
            "seed" => o.seed = Some(parse(key, value, lineno)?),
            "model" => o.model = Some(value.to_string()),
            "out" => o.out = Some(PathBuf::from(value)),
            "tol" => o.tol = Some(parse(key, value, lineno)?),
            _ => {
                return Err(CliError::Usage(format!(
                    "config line {lineno}: unknown key `{key}`"
                )))
            }
        }
    }
    Ok(o)
}
