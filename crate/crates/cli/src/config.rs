use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::ValueEnum;

/// Truncation caps: largest graph order, parameter value and family index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapsSpec {
    pub n: usize,
    pub param: u64,
    pub index: u64,
}

impl Default for CapsSpec {
    fn default() -> Self {
        Self { n: 7, param: 4, index: 4 }
    }
}

impl fmt::Display for CapsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},param={},index={}", self.n, self.param, self.index)
    }
}

/// `n=N,param=P,index=K`; omitted keys keep their defaults.
impl FromStr for CapsSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        let mut caps = CapsSpec::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').with_context(|| format!("expected key=value, got `{part}`"))?;
            let v: u64 = value.trim().parse().with_context(|| format!("`{value}` is not a number"))?;
            match key.trim() {
                "n" => caps.n = v as usize,
                "param" => caps.param = v,
                "index" => caps.index = v,
                other => bail!("unknown cap `{other}` (expected n, param or index)"),
            }
        }
        caps.validate()?;
        Ok(caps)
    }
}

impl CapsSpec {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.n == 0 || self.param == 0 || self.index == 0 {
            bail!("caps must be at least 1, got {self}");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub caps: CapsSpec,
    pub slack: u64,
    pub corpus: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
    /// Record wall-clock milliseconds; off by default so reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            caps: CapsSpec::default(),
            slack: 1,
            corpus: None,
            format: Format::Json,
            seed: 0,
            timing: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        self.caps.validate()?;
        if self.slack == 0 {
            bail!("slack must be at least 1");
        }
        Ok(())
    }
}
