//! JSON report shapes and their plain-text renderings.

use std::fmt::Write as _;

use cnorm_core::series::{SeriesKind, SeriesReport};
use cnorm_core::subgroup::SubgroupCoverage;
use cnorm_core::{Analysis, ClaimResult, ClaimStatus, GroupProfile, Witness};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
}

/// Term orders of each series. A series that stalls before its natural end
/// (`G` for ascending series, `1` for descending ones) lists the stalled term
/// twice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOrders {
    pub c: Vec<usize>,
    pub upper_central: Vec<usize>,
    pub lower_central: Vec<usize>,
    pub derived: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimEntry {
    pub id: String,
    pub status: ClaimStatus,
    pub detail: String,
    pub coverage: Option<SubgroupCoverage>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub group: GroupInfo,
    pub series: SeriesOrders,
    pub profile: GroupProfile,
    pub claims: Vec<ClaimEntry>,
}

fn ascending(kind: SeriesKind) -> bool {
    matches!(kind, SeriesKind::CSeries | SeriesKind::UpperCentral)
}

pub fn listed_orders(s: &SeriesReport) -> Vec<usize> {
    let mut v = s.orders();
    let complete = if ascending(s.kind) {
        s.reaches_whole_group
    } else {
        s.reaches_trivial
    };
    if !complete {
        v.push(*v.last().expect("series has a term"));
    }
    v
}

impl GroupReport {
    pub fn new(name: &str, order: usize, analysis: &Analysis, claims: &[ClaimResult]) -> Self {
        GroupReport {
            group: GroupInfo {
                name: name.to_string(),
                order,
            },
            series: SeriesOrders {
                c: listed_orders(&analysis.c_series),
                upper_central: listed_orders(&analysis.upper_central),
                lower_central: listed_orders(&analysis.lower_central),
                derived: listed_orders(&analysis.derived),
            },
            profile: analysis.profile.clone(),
            claims: claims
                .iter()
                .map(|c| ClaimEntry {
                    id: c.claim_id.clone(),
                    status: c.status,
                    detail: c.detail.clone(),
                    coverage: c.coverage,
                    witness: c.witness.clone(),
                })
                .collect(),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fails)
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn render_header(out: &mut String, g: &GroupInfo) {
    let _ = writeln!(out, "group {} (order {})", g.name, g.order);
}

pub fn render_series(out: &mut String, analysis: &Analysis) {
    let rows = [
        ("C-series", &analysis.c_series),
        ("upper central", &analysis.upper_central),
        ("lower central", &analysis.lower_central),
        ("derived", &analysis.derived),
    ];
    for (label, s) in rows {
        let verdict = match (ascending(s.kind), s.reaches_whole_group, s.reaches_trivial) {
            (true, true, _) => "reaches G",
            (true, false, _) => "stalls below G",
            (false, _, true) => "reaches 1",
            (false, _, false) => "stalls above 1",
        };
        let _ = writeln!(
            out,
            "  {label:<14} orders {:<24} stabilizes at {}, {verdict}",
            join(&listed_orders(s)),
            s.stabilized_at
        );
    }
}

pub fn render_profile(out: &mut String, p: &GroupProfile) {
    let _ = writeln!(
        out,
        "  nilpotent {} (class {}), soluble {} (derived length {}), c-length {}, Baer {}",
        p.is_nilpotent,
        opt(p.nilpotency_class),
        p.is_soluble,
        opt(p.derived_length),
        opt(p.c_length),
        p.is_baer
    );
}

pub fn render_claims(out: &mut String, claims: &[ClaimEntry]) {
    for c in claims {
        let status = match c.status {
            ClaimStatus::Holds => "holds",
            ClaimStatus::HoldsVacuously => "vacuous",
            ClaimStatus::Fails => "FAILS",
        };
        let sampled = match c.coverage {
            Some(SubgroupCoverage::Sampled) => " [sampled]",
            Some(SubgroupCoverage::Exhaustive) => " [exhaustive]",
            None => "",
        };
        let _ = writeln!(out, "  {status:<8} {:<24} {}{sampled}", c.id, c.detail);
        if let Some(w) = &c.witness {
            let _ = writeln!(
                out,
                "           witness {}",
                serde_json::to_string(w).expect("witness serializes")
            );
        }
    }
    let count = |s: ClaimStatus| claims.iter().filter(|c| c.status == s).count();
    let _ = writeln!(
        out,
        "{} claims: {} hold, {} vacuous, {} fail",
        claims.len(),
        count(ClaimStatus::Holds),
        count(ClaimStatus::HoldsVacuously),
        count(ClaimStatus::Fails)
    );
}
