use std::path::PathBuf;

use coxstat::analysis::image_analysis;
use coxstat::enumerate::GroupUniverse;
use coxstat::groups::{Family, GroupDescriptor};
use coxstat::statistics::Statistic;
use coxstat::{Error, Result};

use crate::common::{emit, parse_rank_range, split_stat_pair, Format, DEFAULT_CLASSICAL_CAP};

pub struct ImageArgs {
    pub family: String,
    pub op: String,
    pub stats: String,
    pub ranks: String,
    pub format: Format,
    pub cap: Option<u64>,
    pub out: Option<PathBuf>,
}

struct Row {
    rank: usize,
    group: GroupDescriptor,
    image_size: usize,
    deficiency: i64,
}

/// Per-rank image sizes and deficiency counts over a family. The rank is
/// the Coxeter rank: for family A rank `r` is the group of `(r+1)`-windows,
/// for B and D it is the group of `r`-windows.
pub fn run(args: &ImageArgs) -> Result<bool> {
    let family = match args.family.as_str() {
        "A" | "a" => Family::A,
        "B" | "b" => Family::B,
        "D" | "d" => Family::D,
        other => return Err(Error::Parse(format!("unknown family `{other}`"))),
    };
    let sum = match args.op.as_str() {
        "sum" => true,
        "diff" => false,
        other => return Err(Error::Parse(format!("`--op {other}` must be sum or diff"))),
    };
    let (f_name, g_name) = split_stat_pair(&args.stats)?;
    let (lo, hi) = parse_rank_range(&args.ranks)?;
    let cap = args.cap.unwrap_or(DEFAULT_CLASSICAL_CAP);

    let mut rows = Vec::new();
    for rank in lo..=hi {
        let window = match family {
            Family::A => rank + 1,
            Family::B | Family::D => rank,
        };
        let descriptor = GroupDescriptor::new(family, window)?;
        let universe = GroupUniverse::with_cap(descriptor, cap).map_err(|e| match e {
            Error::CapExceeded { what, needed, cap } => Error::CapExceeded {
                what: format!("{what} (raise --cap and consider --threads)"),
                needed,
                cap,
            },
            other => other,
        })?;
        let f = Statistic::resolve(descriptor, &f_name)?;
        let g = Statistic::resolve(descriptor, &g_name)?;
        let analysis = image_analysis(&universe, |w| f.eval(w), |w| g.eval(w));
        let (image_size, deficiency) = if sum {
            (analysis.image_sum.len(), analysis.k_plus())
        } else {
            (analysis.image_diff.len(), analysis.k_minus())
        };
        rows.push(Row {
            rank,
            group: descriptor,
            image_size,
            deficiency,
        });
    }

    let k_label = if sum { "k_plus" } else { "k_minus" };
    let rendered = match args.format {
        Format::Text => {
            let mut out = format!("rank  group  |Im|  {k_label}\n");
            for r in &rows {
                out.push_str(&format!(
                    "{:<5} {:<6} {:<5} {}\n",
                    r.rank,
                    r.group.to_string(),
                    r.image_size,
                    r.deficiency
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = format!("rank,group,image_size,{k_label}\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.rank, r.group, r.image_size, r.deficiency
                ));
            }
            out
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "rank": r.rank,
                        "group": r.group.to_string(),
                        "image_size": r.image_size,
                        k_label: r.deficiency,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string(&items).unwrap())
        }
    };
    emit(&args.out, &rendered)?;
    Ok(true)
}
