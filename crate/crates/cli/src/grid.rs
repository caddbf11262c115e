use std::collections::BTreeMap;
use std::str::FromStr;

use crate::CliError;

/// Parameter ranges such as `n=5..20;seeds=1..10` or `q=3,5`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grid {
    keys: BTreeMap<String, Vec<usize>>,
}

impl Grid {
    /// Values for `key`, or `default` (inclusive) when the key is absent.
    pub fn values(&self, key: &str, default: (usize, usize)) -> Vec<usize> {
        self.keys
            .get(key)
            .cloned()
            .unwrap_or_else(|| (default.0..=default.1).collect())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.keys.keys().map(String::as_str)
    }

    /// Rejects keys the claim does not use.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<(), CliError> {
        match self.keys().find(|k| !allowed.contains(k)) {
            Some(k) => Err(CliError::Usage(format!(
                "unknown grid key '{k}', expected one of {}",
                allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }
}

fn parse_values(key: &str, spec: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad range '{spec}' for grid key '{key}'"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let mut out = Vec::new();
    for part in spec.split(',') {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

impl FromStr for Grid {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let mut keys = BTreeMap::new();
        for item in s.split(';').map(str::trim).filter(|i| !i.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("grid item '{item}' lacks '='")))?;
            let k = k.trim().to_string();
            let values = parse_values(&k, v)?;
            if keys.insert(k.clone(), values).is_some() {
                return Err(CliError::Usage(format!("grid key '{k}' given twice")));
            }
        }
        Ok(Grid { keys })
    }
}
