use std::path::PathBuf;

use coxstat::posets::FiniteGradedPoset;
use coxstat::{Error, Result};

use crate::common::{emit, render_poly, Format, GroupHandle};

pub struct DistArgs {
    pub group: Option<String>,
    pub poset: Option<PathBuf>,
    pub function: Option<PathBuf>,
    pub stat: String,
    pub check_against: Option<String>,
    pub format: Format,
    pub cap: Option<u64>,
    pub out: Option<PathBuf>,
}

fn load_poset(path: &PathBuf) -> Result<FiniteGradedPoset> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read `{}`: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| Error::Parse(format!("bad poset in `{}`: {e}", path.display())))
}

fn load_function(path: &PathBuf, size: usize) -> Result<Vec<i64>> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read `{}`: {e}", path.display())))?;
    let values: Vec<i64> = serde_json::from_str(&raw)
        .map_err(|e| Error::Parse(format!("bad function in `{}`: {e}", path.display())))?;
    if values.len() != size {
        return Err(Error::UniverseMismatch(values.len() as u64, size as u64));
    }
    Ok(values)
}

/// Resolves poset statistics: `rank` or a function file.
pub fn poset_values(
    poset: &FiniteGradedPoset,
    name: &str,
    function: &Option<PathBuf>,
) -> Result<Vec<i64>> {
    match (name, function) {
        ("rank", _) | ("len", _) => Ok(poset.rank_vector()),
        ("fn", Some(path)) => load_function(path, poset.size()),
        _ => Err(Error::UnknownStatistic(format!(
            "`{name}` on a poset (use `rank`, or `fn` with `--fn <file>`)"
        ))),
    }
}

/// Exit status: `Ok(true)` = printed and (if requested) the check passed.
pub fn run(args: &DistArgs) -> Result<bool> {
    let poly = match (&args.group, &args.poset) {
        (Some(group), None) => {
            GroupHandle::resolve(group, args.cap)?.distribution(&args.stat, args.cap)?
        }
        (None, Some(path)) => {
            let poset = load_poset(path)?;
            let values = poset_values(&poset, &args.stat, &args.function)?;
            coxstat::analysis::distribution(&poset, |&i| values[i as usize])
        }
        _ => {
            return Err(Error::Parse(
                "give exactly one of --group or --poset".to_string(),
            ))
        }
    };
    emit(&args.out, &render_poly(&poly, args.format))?;

    if let Some(reference_name) = &args.check_against {
        let reference = match (&args.group, &args.poset) {
            (Some(group), None) => {
                GroupHandle::resolve(group, args.cap)?.distribution(reference_name, args.cap)?
            }
            (None, Some(path)) => {
                let poset = load_poset(path)?;
                let values = poset_values(&poset, reference_name, &args.function)?;
                coxstat::analysis::distribution(&poset, |&i| values[i as usize])
            }
            _ => unreachable!(),
        };
        if poly == reference {
            eprintln!("check: equidistributed with `{reference_name}`: OK");
        } else {
            eprintln!("check: NOT equidistributed with `{reference_name}`");
            return Ok(false);
        }
    }
    Ok(true)
}
