//! Rendering of the three reference tables in table/JSON/CSV form.
//!
//! Output is byte-stable for equal inputs: rows follow the fixed family
//! order and all numbers come from exact integer arithmetic.

use homspace_core::maxdim::{max_dim_table, table3};
use homspace_core::rootsys::{Family, SimpleType};
use serde_json::json;

use crate::OutputFormat;

/// Dimension formula shown for each family's symbolic row.
fn formula(family: Family) -> String {
    match family {
        Family::A => "l^2 + 2l".to_string(),
        Family::B | Family::C => "2l^2 + l".to_string(),
        Family::D => "2l^2 - l".to_string(),
        f => SimpleType::exceptional(f).unwrap().dimension().to_string(),
    }
}

fn rank_constraint(family: Family) -> String {
    match family.fixed_rank() {
        Some(r) => r.to_string(),
        None => format!("l >= {}", family.min_rank()),
    }
}

/// Dimension of `family` at rank `l`, or `None` where the rank is invalid.
fn dim_at(family: Family, l: u32) -> Option<u64> {
    SimpleType::new(family, l).ok().map(|t| t.dimension())
}

pub fn render_table1(max_rank: u32, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut out = String::new();
            let header: Vec<String> = (1..=max_rank).map(|l| format!("l={l}")).collect();
            out.push_str(&format!(
                "{:<8}{:<8}{:<10}{}\n",
                "algebra",
                "rank",
                "dim",
                header.join(" ")
            ));
            for f in Family::ALL {
                let cells: Vec<String> = (1..=max_rank)
                    .map(|l| {
                        dim_at(f, l)
                            .map(|d| d.to_string())
                            .unwrap_or_else(|| "-".to_string())
                    })
                    .collect();
                out.push_str(&format!(
                    "{:<8}{:<8}{:<10}{}\n",
                    f.to_string(),
                    rank_constraint(f),
                    formula(f),
                    cells.join(" ")
                ));
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<_> = Family::ALL
                .iter()
                .map(|&f| {
                    json!({
                        "family": f.to_string(),
                        "rank": rank_constraint(f),
                        "dim": formula(f),
                        "values": (1..=max_rank).map(|l| dim_at(f, l)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string(&rows).unwrap())
        }
        OutputFormat::Csv => {
            let mut out = String::from("family,rank,dim");
            for l in 1..=max_rank {
                out.push_str(&format!(",l={l}"));
            }
            out.push('\n');
            for f in Family::ALL {
                out.push_str(&format!("{},{},{}", f, rank_constraint(f), formula(f)));
                for l in 1..=max_rank {
                    match dim_at(f, l) {
                        Some(d) => out.push_str(&format!(",{d}")),
                        None => out.push_str(",-"),
                    }
                }
                out.push('\n');
            }
            out
        }
    }
}

pub fn render_table2(max_rank: u32, format: OutputFormat) -> String {
    let entries = max_dim_table(max_rank);
    match format {
        OutputFormat::Table => {
            let mut out = format!("{:<6}{}\n", "rank", "max dim / simple algebras");
            for e in &entries {
                let names: Vec<String> =
                    e.witnesses_simple.iter().map(|t| t.to_string()).collect();
                out.push_str(&format!(
                    "{:<6}{} / {}\n",
                    e.rank,
                    e.d_simple,
                    names.join(", ")
                ));
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<_> = entries
                .iter()
                .map(|e| {
                    json!({
                        "rank": e.rank,
                        "max_dim": e.d_simple,
                        "algebras": e.witnesses_simple.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string(&rows).unwrap())
        }
        OutputFormat::Csv => {
            let mut out = String::from("rank,max_dim,algebras\n");
            for e in &entries {
                let names: Vec<String> =
                    e.witnesses_simple.iter().map(|t| t.to_string()).collect();
                out.push_str(&format!("{},{},{}\n", e.rank, e.d_simple, names.join(" ")));
            }
            out
        }
    }
}

pub fn render_table3(format: OutputFormat) -> String {
    let grid = table3();
    let max_cols = 8usize;
    match format {
        OutputFormat::Table => {
            let mut out = String::new();
            let mut line = format!("{:<9}{:<6}", "algebra", "dim");
            for t in 1..=max_cols {
                line.push_str(&format!("{:<5}", format!("t={t}")));
            }
            out.push_str(line.trim_end());
            out.push('\n');
            for (f, row) in &grid {
                let dim = SimpleType::exceptional(*f).unwrap().dimension();
                let mut line = format!("{:<9}{:<6}", f.to_string(), dim);
                for t in 0..max_cols {
                    let cell = row
                        .get(t)
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "-".to_string());
                    line.push_str(&format!("{:<5}", cell));
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<_> = grid
                .iter()
                .map(|(f, row)| {
                    json!({
                        "family": f.to_string(),
                        "dim": SimpleType::exceptional(*f).unwrap().dimension(),
                        "floors": row,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string(&rows).unwrap())
        }
        OutputFormat::Csv => {
            let mut out = String::from("family,dim");
            for t in 1..=max_cols {
                out.push_str(&format!(",t={t}"));
            }
            out.push('\n');
            for (f, row) in &grid {
                let dim = SimpleType::exceptional(*f).unwrap().dimension();
                out.push_str(&format!("{f},{dim}"));
                for t in 0..max_cols {
                    match row.get(t) {
                        Some(v) => out.push_str(&format!(",{v}")),
                        None => out.push_str(",-"),
                    }
                }
                out.push('\n');
            }
            out
        }
    }
}
