//! Run configuration and its `key = value` file format.

use std::fs;
use std::path::{Path, PathBuf};

use crate::cooccurrence::{AssociationMeasure, MeasureKind};
use crate::disambiguation::ContextMode;
use crate::error::{Error, Result};

pub const DEFAULT_WINDOW: usize = 3;
pub const DEFAULT_MEASURE: MeasureKind = MeasureKind::Spmi;

/// Settings shared by the build, stem and evaluate commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub window_n: usize,
    pub measure: MeasureKind,
    pub alpha: f64,
    pub resource_dir: Option<PathBuf>,
    pub stopword_path: Option<PathBuf>,
    pub matrix_path: Option<PathBuf>,
    pub context_mode: ContextMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            window_n: DEFAULT_WINDOW,
            measure: DEFAULT_MEASURE,
            alpha: AssociationMeasure::DEFAULT_ALPHA,
            resource_dir: None,
            stopword_path: None,
            matrix_path: None,
            context_mode: ContextMode::default(),
        }
    }
}

impl RunConfig {
    /// Applies `key = value` lines on top of `self`. Relative paths are
    /// resolved against `base`.
    ///
    /// Keys: `window`, `measure`, `alpha`, `resources`, `stopwords`,
    /// `matrix`, `context`. Blank lines and `#` comments are ignored.
    pub fn apply(&mut self, text: &str, source: &Path, base: &Path) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let entry = raw.trim();
            if entry.is_empty() || entry.starts_with('#') {
                continue;
            }
            let Some((key, value)) = entry.split_once('=') else {
                return Err(Error::format(source, line, "expected key = value"));
            };
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| Error::format(source, line, format!("invalid {what} {value:?}"));
            match key {
                "window" => self.window_n = value.parse().map_err(|_| bad("window"))?,
                "measure" => self.measure = value.parse().map_err(|_| bad("measure"))?,
                "alpha" => self.alpha = value.parse().map_err(|_| bad("alpha"))?,
                "context" => self.context_mode = value.parse().map_err(|_| bad("context mode"))?,
                "resources" => self.resource_dir = Some(base.join(value)),
                "stopwords" => self.stopword_path = Some(base.join(value)),
                "matrix" => self.matrix_path = Some(base.join(value)),
                other => return Err(Error::format(source, line, format!("unknown key {other:?}"))),
            }
        }
        Ok(())
    }

    /// Defaults overridden by the file at `path`.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut config = RunConfig::default();
        config.apply(&text, path, path.parent().unwrap_or(Path::new("")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.window_n < 2 {
            return Err(Error::InvalidWindow(self.window_n));
        }
        self.association_measure().map(|_| ())
    }

    /// The configured measure. `alpha` is checked even when the measure
    /// ignores it.
    pub fn association_measure(&self) -> Result<AssociationMeasure> {
        AssociationMeasure::new(self.measure, self.alpha)
    }
}
