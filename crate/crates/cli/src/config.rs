//! Flat `key=value` run configuration.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Markdown,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "markdown" | "md" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format '{s}' (markdown, json or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Markdown => "markdown",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Everything a run needs. Indices are 1-based, as typed by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: String,
    pub system: String,
    pub parabolic: Vec<usize>,
    pub order: Option<Vec<usize>>,
    pub format: Format,
    pub max_weyl: usize,
    pub max_q: i32,
    pub seed: u64,
    pub samples: usize,
    pub exceptional: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: String::new(),
            system: String::new(),
            parabolic: Vec::new(),
            order: None,
            format: Format::Markdown,
            max_weyl: qhgr::weyl::DEFAULT_MAX_WEYL,
            max_q: 3,
            seed: 0,
            samples: 200,
            exceptional: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config field '{}': {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError { field: field.into(), message: message.into() }
}

/// `1,2,3`; empty is the empty list.
pub fn parse_indices(field: &str, s: &str) -> Result<Vec<usize>, ConfigError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().ok().filter(|&i| i >= 1).ok_or_else(|| err(field, format!("'{t}' is not a positive index"))))
        .collect()
}

fn join(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_num<T: FromStr>(field: &str, v: &str) -> Result<T, ConfigError> {
    v.trim().parse().map_err(|_| err(field, format!("'{v}' is not a valid number")))
}

impl RunConfig {
    /// Apply one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let value = value.trim();
        match key.trim() {
            "command" => self.command = value.into(),
            "system" => self.system = value.into(),
            "parabolic" => self.parabolic = parse_indices("parabolic", value)?,
            "order" => self.order = if value.is_empty() { None } else { Some(parse_indices("order", value)?) },
            "format" => self.format = value.parse().map_err(|m| err("format", m))?,
            "max_weyl" => {
                self.max_weyl = parse_num("max_weyl", value)?;
                if self.max_weyl == 0 {
                    return Err(err("max_weyl", "must be positive"));
                }
            }
            "max_q" => {
                self.max_q = parse_num("max_q", value)?;
                if self.max_q < 0 {
                    return Err(err("max_q", "must be nonnegative"));
                }
            }
            "seed" => self.seed = parse_num("seed", value)?,
            "samples" => {
                self.samples = parse_num("samples", value)?;
                if self.samples == 0 {
                    return Err(err("samples", "must be positive"));
                }
            }
            "exceptional" => {
                self.exceptional = match value {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return Err(err("exceptional", format!("'{value}' is not a boolean"))),
                }
            }
            other => return Err(err(other, "unknown key")),
        }
        Ok(())
    }

    /// Parse the text form on top of the defaults. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut c = RunConfig::default();
        c.merge(text)?;
        Ok(c)
    }

    /// Apply every line of `text` to this config.
    pub fn merge(&mut self, text: &str) -> Result<(), ConfigError> {
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| err(line, "expected key=value"))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    /// Text form; `parse(emit())` gives back the same config.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command={}\n", self.command));
        out.push_str(&format!("system={}\n", self.system));
        out.push_str(&format!("parabolic={}\n", join(&self.parabolic)));
        if let Some(o) = &self.order {
            out.push_str(&format!("order={}\n", join(o)));
        }
        out.push_str(&format!("format={}\n", self.format));
        out.push_str(&format!("max_weyl={}\n", self.max_weyl));
        out.push_str(&format!("max_q={}\n", self.max_q));
        out.push_str(&format!("seed={}\n", self.seed));
        out.push_str(&format!("samples={}\n", self.samples));
        out.push_str(&format!("exceptional={}\n", self.exceptional));
        out
    }

    /// Check the fields against each other and against the root system.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let rs = qhgr::RootSystem::parse(&self.system).map_err(|e| err("system", e.to_string()))?;
        if let Some(&i) = self.parabolic.iter().find(|&&i| i > rs.rank()) {
            return Err(err("parabolic", format!("index {i} out of range 1..={}", rs.rank())));
        }
        if let Some(o) = &self.order {
            let mut a = o.clone();
            a.sort_unstable();
            let mut b = self.parabolic.clone();
            b.sort_unstable();
            if !b.is_empty() && a != b {
                return Err(err("order", "must list the parabolic indices"));
            }
        }
        Ok(())
    }
}
