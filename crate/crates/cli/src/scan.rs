//! Family scans comparing nilpotency class with c-length.

use std::fmt::Write as _;

use cnorm_core::families::FamilySpec;
use cnorm_core::series::Analysis;
use cnorm_core::{standard_corpus, GroupError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub group_name: String,
    pub order: usize,
    pub nilpotency_class: Option<usize>,
    pub c_length: Option<usize>,
    pub derived_length: Option<usize>,
    /// `nilpotency_class - c_length` when both exist.
    pub question_margin: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub groups: usize,
    pub nilpotent: usize,
    /// Groups whose class exceeds their c-length.
    pub positive_margin: Vec<String>,
    /// Every nilpotent row has `c_length <= max(1, class - 1)`.
    pub class_bound_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub family: String,
    pub max_order: usize,
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

/// The groups a scan visits: every member of `family` of order at most
/// `max_order`, or the standard corpus for `corpus`.
pub fn scan_specs(family: &str, max_order: usize) -> Result<Vec<FamilySpec>, CliError> {
    use FamilySpec::*;
    let specs: Vec<FamilySpec> = match family {
        "corpus" => return Ok(cnorm_core::families::standard_corpus_specs(max_order)),
        "cyclic" => (1..=max_order).map(Cyclic).collect(),
        "dihedral" => (1..=max_order / 2).map(Dihedral).collect(),
        "symmetric" => (1..)
            .map(Symmetric)
            .take_while(|s| s.order().is_ok_and(|o| o <= max_order))
            .collect(),
        "quaternion" => (3..usize::BITS)
            .map(|k| Quaternion(1 << k))
            .take_while(|s| s.order().is_ok_and(|o| o <= max_order))
            .collect(),
        "elemabelian" => {
            let mut v = Vec::new();
            for prime in
                (2..=max_order).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
            {
                v.extend(
                    (1..)
                        .map(|rank| ElementaryAbelian { prime, rank })
                        .take_while(|s| s.order().is_ok_and(|o| o <= max_order)),
                );
            }
            v
        }
        "product" => {
            return Err(CliError::BadParameter(
                "product has no parameter sweep; scan its factors or use `corpus`".into(),
            ))
        }
        other => return Err(CliError::BadFamily(other.to_string())),
    };
    Ok(specs)
}

pub fn scan_row(name: String, analysis: &Analysis, order: usize) -> ScanRow {
    let p = &analysis.profile;
    ScanRow {
        group_name: name,
        order,
        nilpotency_class: p.nilpotency_class,
        c_length: p.c_length,
        derived_length: p.derived_length,
        question_margin: match (p.nilpotency_class, p.c_length) {
            (Some(c), Some(n)) => Some(c as i64 - n as i64),
            _ => None,
        },
    }
}

pub fn scan(family: &str, max_order: usize, cap: usize) -> Result<ScanReport, CliError> {
    if max_order > cap {
        return Err(GroupError::OrderCapExceeded {
            order: max_order,
            cap,
        }
        .into());
    }
    let mut rows = if family == "corpus" {
        standard_corpus(max_order)?
            .into_par_iter()
            .map(|e| Ok(scan_row(e.name, &Analysis::new(&e.group)?, e.group.order())))
            .collect::<Result<Vec<_>, CliError>>()?
    } else {
        scan_specs(family, max_order)?
            .into_par_iter()
            .map(|spec| {
                let g = spec.build(cap)?;
                Ok(scan_row(spec.name(), &Analysis::new(&g)?, g.order()))
            })
            .collect::<Result<Vec<_>, CliError>>()?
    };
    rows.sort_by(|a, b| (a.order, &a.group_name).cmp(&(b.order, &b.group_name)));
    let summary = ScanSummary {
        groups: rows.len(),
        nilpotent: rows.iter().filter(|r| r.nilpotency_class.is_some()).count(),
        positive_margin: rows
            .iter()
            .filter(|r| r.question_margin.is_some_and(|m| m > 0))
            .map(|r| r.group_name.clone())
            .collect(),
        class_bound_holds: rows.iter().all(|r| match (r.nilpotency_class, r.c_length) {
            (Some(c), Some(n)) => n <= c.saturating_sub(1).max(1),
            (Some(_), None) => false,
            (None, _) => true,
        }),
    };
    Ok(ScanReport {
        family: family.to_string(),
        max_order,
        rows,
        summary,
    })
}

pub fn render_scan(out: &mut String, report: &ScanReport) {
    let cell = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
    let _ = writeln!(
        out,
        "  {:<14} {:>6} {:>6} {:>9} {:>8} {:>7}",
        "group", "order", "class", "c-length", "derived", "margin"
    );
    for r in &report.rows {
        let margin = r
            .question_margin
            .map_or_else(|| "-".to_string(), |m| format!("{m:+}"));
        let mark = if r.question_margin.is_some_and(|m| m > 0) {
            '*'
        } else {
            ' '
        };
        let _ = writeln!(
            out,
            "{mark} {:<14} {:>6} {:>6} {:>9} {:>8} {:>7}",
            r.group_name,
            r.order,
            cell(r.nilpotency_class),
            cell(r.c_length),
            cell(r.derived_length),
            margin
        );
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "{} groups, {} nilpotent; class exceeds c-length (*) in {}: {}",
        s.groups,
        s.nilpotent,
        s.positive_margin.len(),
        if s.positive_margin.is_empty() {
            "none".to_string()
        } else {
            s.positive_margin.join(", ")
        }
    );
    let _ = writeln!(
        out,
        "c-length <= max(1, class - 1) on every nilpotent row: {}",
        if s.class_bound_holds { "yes" } else { "no" }
    );
}
