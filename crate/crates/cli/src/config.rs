use std::path::Path;

use shellar_core::search::enumerate::DEFAULT_BUDGET;
use shellar_core::search::par::default_workers;

use crate::args::{Cli, Format};
use crate::error::CliError;

pub const BUDGET_ENV: &str = "SHELLAR_BUDGET";

/// Values read from a config file; unset keys stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub budget: Option<u64>,
    pub workers: Option<usize>,
    pub connected: Option<bool>,
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub budget: u64,
    pub workers: usize,
    pub connected: bool,
    pub format: Option<Format>,
}

pub fn load_config(path: &Path) -> Result<ConfigFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("--config {}: {e}", path.display())))?;
    parse_config(&text).map_err(|(line, msg)| CliError::Usage(format!("{} line {line}: {msg}", path.display())))
}

pub fn parse_config(text: &str) -> Result<ConfigFile, (usize, String)> {
    let mut cfg = ConfigFile::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| (i + 1, msg);
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| err(format!("{key}: {value:?} is not {what}"));
        match key {
            "budget" => cfg.budget = Some(value.parse().map_err(|_| bad("a non-negative integer"))?),
            "workers" => cfg.workers = Some(value.parse().map_err(|_| bad("a non-negative integer"))?),
            "connected" => cfg.connected = Some(value.parse().map_err(|_| bad("true or false"))?),
            "format" => {
                let f = <Format as clap::ValueEnum>::from_str(value, true).map_err(|_| bad("json, csv, text, graph6 or dot"))?;
                cfg.format = Some(f);
            }
            _ => return Err(err(format!("unknown key {key:?}"))),
        }
    }
    Ok(cfg)
}

/// Built-in defaults, then the config file, then flags, then the budget
/// environment variable.
pub fn resolve(cli: &Cli, env_budget: Option<String>) -> Result<Settings, CliError> {
    let file = match &cli.config {
        Some(path) => load_config(path)?,
        None => ConfigFile::default(),
    };
    let mut budget = cli.budget.or(file.budget).unwrap_or(DEFAULT_BUDGET);
    if let Some(v) = env_budget {
        budget = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV}: {v:?} is not a non-negative integer")))?;
    }
    let workers = match cli.workers.or(file.workers).unwrap_or(0) {
        0 => default_workers(),
        w => w,
    };
    Ok(Settings {
        budget,
        workers,
        connected: file.connected.unwrap_or(true),
        format: cli.format.or(file.format),
    })
}

impl Settings {
    pub fn describe(&self) -> String {
        format!(
            "budget = {}\nworkers = {}\nconnected = {}\nformat = {}",
            self.budget,
            self.workers,
            self.connected,
            self.format.map_or("default", Format::name)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = parse_config("# defaults\nbudget = 100000000\nworkers=2\n\nconnected = false # all graphs\nformat = JSON\n").unwrap();
        assert_eq!(
            cfg,
            ConfigFile {
                budget: Some(100_000_000),
                workers: Some(2),
                connected: Some(false),
                format: Some(Format::Json),
            }
        );
        assert_eq!(parse_config("").unwrap(), ConfigFile::default());
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(parse_config("budget = 1\ncolour = red").unwrap_err().0, 2);
        assert_eq!(parse_config("\n\nworkers = many").unwrap_err().0, 3);
        assert_eq!(parse_config("budget").unwrap_err().0, 1);
    }
}
