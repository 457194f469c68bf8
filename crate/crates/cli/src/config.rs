//! Flat `key = value` experiment files.
//!
//! Blank lines and lines starting with `#` or `;` are ignored. Keys are
//! lower-case identifiers and may appear once. Command-line overrides replace
//! file values. Every key must be consumed by the experiment it configures;
//! leftovers are reported as errors so typos cannot silently fall back to
//! defaults.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use crate::CliError;

#[derive(Debug, Clone, Default)]
pub struct RawConfig {
    entries: BTreeMap<String, String>,
    used: RefCell<BTreeSet<String>>,
}

fn valid_key(key: &str) -> bool {
    !key.is_empty() && key.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim();
            if !valid_key(key) {
                return Err(CliError::Config(format!("line {}: invalid key `{key}`", lineno + 1)));
            }
            if entries.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(CliError::Config(format!("line {}: duplicate key `{key}`", lineno + 1)));
            }
        }
        Ok(RawConfig { entries, used: RefCell::default() })
    }

    /// Applies `key=value` overrides; later ones win.
    pub fn apply_overrides<S: AsRef<str>>(&mut self, overrides: &[S]) -> Result<(), CliError> {
        for o in overrides {
            let o = o.as_ref();
            let (key, value) = o
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("override `{o}` is not key=value")))?;
            let key = key.trim();
            if !valid_key(key) {
                return Err(CliError::Config(format!("override has invalid key `{key}`")));
            }
            self.entries.insert(key.to_string(), value.trim().to_string());
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        let v = self.entries.get(key)?;
        self.used.borrow_mut().insert(key.to_string());
        Some(v.as_str())
    }

    pub fn contains(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, CliError> {
        value
            .parse()
            .map_err(|_| CliError::Config(format!("`{key}`: cannot parse `{value}`")))
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.raw(key).map(|v| Self::parse_value(key, v)).transpose()
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T, CliError> {
        self.get(key)?
            .ok_or_else(|| CliError::Config(format!("missing required key `{key}`")))
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    pub fn get_bool(&self, key: &str, default: bool) -> Result<bool, CliError> {
        match self.raw(key) {
            None => Ok(default),
            Some("true" | "yes" | "1") => Ok(true),
            Some("false" | "no" | "0") => Ok(false),
            Some(v) => Err(CliError::Config(format!("`{key}`: expected a boolean, got `{v}`"))),
        }
    }

    /// Comma-separated list.
    pub fn get_list<T: FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, CliError> {
        let Some(v) = self.raw(key) else { return Ok(None) };
        let items = v
            .split(',')
            .map(|s| Self::parse_value(key, s.trim()))
            .collect::<Result<Vec<T>, _>>()?;
        if items.is_empty() {
            return Err(CliError::Config(format!("`{key}`: empty list")));
        }
        Ok(Some(items))
    }

    /// Errors if any key was never read.
    pub fn finish(&self) -> Result<(), CliError> {
        let used = self.used.borrow();
        let unused: Vec<&str> = self.entries.keys().filter(|k| !used.contains(*k)).map(String::as_str).collect();
        if unused.is_empty() {
            Ok(())
        } else {
            Err(CliError::Config(format!("unknown or unused keys: {}", unused.join(", "))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_whitespace() {
        let c = RawConfig::parse("# comment\n; other\n\n kind = sigma_z \nn_bath=100\n").unwrap();
        assert_eq!(c.raw("kind"), Some("sigma_z"));
        assert_eq!(c.require::<u32>("n_bath").unwrap(), 100);
        c.finish().unwrap();
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(RawConfig::parse("kind sigma_z").is_err());
        assert!(RawConfig::parse("a = 1\na = 2").is_err());
        assert!(RawConfig::parse("Bad-Key = 1").is_err());
    }

    #[test]
    fn overrides_win_and_unused_keys_are_reported() {
        let mut c = RawConfig::parse("epsilon = 1\ntypo = 3").unwrap();
        c.apply_overrides(&["epsilon=2.5"]).unwrap();
        assert_eq!(c.require::<f64>("epsilon").unwrap(), 2.5);
        let err = c.finish().unwrap_err();
        assert!(err.to_string().contains("typo"));
        assert!(c.apply_overrides(&["novalue"]).is_err());
    }

    #[test]
    fn lists_and_bools() {
        let c = RawConfig::parse("n = 10, 50,100\nflag = yes\nbad = maybe").unwrap();
        assert_eq!(c.get_list::<u32>("n").unwrap().unwrap(), vec![10, 50, 100]);
        assert!(c.get_bool("flag", false).unwrap());
        assert!(c.get_bool("bad", false).is_err());
        assert!(!c.get_bool("absent", false).unwrap());
        assert!(c.require::<f64>("absent").is_err());
    }
}
