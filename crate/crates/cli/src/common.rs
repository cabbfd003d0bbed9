use std::sync::Arc;

use coxstat::analysis::LaurentPoly;
use coxstat::bigcox::{enumerate_group, CoxeterMatrix, EnumeratedGroup, GenericStatistic};
use coxstat::enumerate::GroupUniverse;
use coxstat::groups::GroupDescriptor;
use coxstat::statistics::Statistic;
use coxstat::{Error, Result};

/// Default enumeration budget for classical sweeps; generous enough for
/// every default-criteria rank and the extended ones.
pub const DEFAULT_CLASSICAL_CAP: u64 = 1_000_000_000;

/// A group the CLI can sweep: a classical window group or an enumerated
/// generic group.
pub enum GroupHandle {
    Classical(GroupDescriptor),
    Generic(Arc<EnumeratedGroup>),
}

impl GroupHandle {
    /// Accepts `A:n`/`B:n`/`D:n`, a preset name (`I2:<m>`, `H3`, `F4`,
    /// `E6`, `E7`, `E8`) or a path to a Coxeter-matrix JSON file.
    pub fn resolve(text: &str, cap: Option<u64>) -> Result<Self> {
        if let Ok(descriptor) = text.parse::<GroupDescriptor>() {
            return Ok(GroupHandle::Classical(descriptor));
        }
        let matrix = if let Ok(preset) = CoxeterMatrix::preset(text) {
            preset
        } else if std::path::Path::new(text).exists() {
            let raw = std::fs::read_to_string(text)
                .map_err(|e| Error::Parse(format!("cannot read `{text}`: {e}")))?;
            serde_json::from_str(&raw)
                .map_err(|e| Error::Parse(format!("bad Coxeter matrix in `{text}`: {e}")))?
        } else {
            return Err(Error::Parse(format!(
                "`{text}` is neither a descriptor, a preset nor a matrix file"
            )));
        };
        let group = enumerate_group(&matrix, cap.unwrap_or(coxstat::bigcox::DEFAULT_ENUM_CAP))?;
        Ok(GroupHandle::Generic(Arc::new(group)))
    }

    /// Distribution of a named statistic over the whole group.
    pub fn distribution(&self, stat_name: &str, cap: Option<u64>) -> Result<LaurentPoly> {
        match self {
            GroupHandle::Classical(d) => {
                let universe = GroupUniverse::with_cap(*d, cap.unwrap_or(DEFAULT_CLASSICAL_CAP))?;
                let stat = Statistic::resolve(*d, stat_name)?;
                Ok(coxstat::analysis::distribution(&universe, |w| stat.eval(w)))
            }
            GroupHandle::Generic(g) => {
                let stat = GenericStatistic::resolve(g, stat_name)?;
                Ok(coxstat::analysis::distribution(g.as_ref(), |&i| {
                    stat.eval(i)
                }))
            }
        }
    }
}

/// Output format for rendered values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render_poly(poly: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{poly}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(poly).unwrap()),
        Format::Csv => {
            let mut out = String::from("exponent,coefficient\n");
            for (e, c) in poly.terms() {
                out.push_str(&format!("{e},{c}\n"));
            }
            out
        }
    }
}

/// Writes to `--out` when given, stdout otherwise.
pub fn emit(out: &Option<std::path::PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Parse(format!("cannot write `{}`: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Splits `f,g` into exactly two statistic names.
pub fn split_stat_pair(stats: &str) -> Result<(String, String)> {
    let parts: Vec<&str> = stats.split(',').map(str::trim).collect();
    if parts.len() != 2 || parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!(
            "`--stats {stats}` must name exactly two statistics"
        )));
    }
    Ok((parts[0].to_string(), parts[1].to_string()))
}

/// Parses an inclusive `a..b` rank range.
pub fn parse_rank_range(text: &str) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("`--ranks {text}` must look like 1..8")))?;
    let lo: usize = a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank `{a}`")))?;
    let hi: usize = b
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank `{b}`")))?;
    if lo == 0 || hi < lo {
        return Err(Error::Parse(format!("empty rank range `{text}`")));
    }
    Ok((lo, hi))
}
