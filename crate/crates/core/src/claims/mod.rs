//! Verification harness: every published statement about reduced power
//! graphs is a *claim*, checked group by group over a corpus. A claim
//! whose hypothesis a group does not meet is skipped with the reason;
//! everything else passes or fails with a witness.

mod checks;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Result;
use crate::group::spec::{Family, GroupSpec};
use crate::group::{Group, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    /// Closed neighborhoods agree across generators of one cyclic subgroup.
    ObsNbhd,
    /// The full power graph is complete iff the group is a cyclic p-group.
    ObsComplete,
    /// Reduced power graph connectivity matches linkage-graph connectivity.
    LemLinkage,
    /// A p-group has one subgroup of order p iff cyclic or generalized
    /// quaternion.
    ObsUniqueP,
    /// For p-groups: reduced power graph connected iff cyclic or
    /// generalized quaternion.
    CorPgrpConn,
    /// For p-groups: component count equals the number of order-p
    /// subgroups.
    CorComponents,
    /// Products of coprime-order groups have connected reduced power
    /// graphs.
    PropCoprime,
    /// A connected factor of non-prime-power order keeps any product
    /// connected.
    PropNpp,
    /// Nilpotent connectivity trichotomy: cyclic, generalized quaternion,
    /// or order divisible by two primes.
    ThmNilpConn,
    /// Diameter 1 exactly for cyclic p-groups of order at least 3.
    Diam1,
    /// Diameter-2 characterization via cyclic-or-quaternion Sylows.
    Diam2,
    /// Remaining connected nilpotent cases have diameter exactly 4.
    Diam4,
    /// Dicyclic groups of odd parameter have diameter 3.
    ExQn3,
    /// Chain enumeration matches lattice-maximality by definition.
    LemMcd,
    /// Maximal cliques live in maximal cyclic subgroups with chain orders.
    LemCliqueCyc,
    /// Clique number equals the weight formula (and full = reduced + 1).
    ThmClique,
    /// Nilpotent clique number equals the weight of the exponent.
    CorCliqueNilp,
}

impl ClaimId {
    pub const ALL: [ClaimId; 17] = [
        ClaimId::ObsNbhd,
        ClaimId::ObsComplete,
        ClaimId::LemLinkage,
        ClaimId::ObsUniqueP,
        ClaimId::CorPgrpConn,
        ClaimId::CorComponents,
        ClaimId::PropCoprime,
        ClaimId::PropNpp,
        ClaimId::ThmNilpConn,
        ClaimId::Diam1,
        ClaimId::Diam2,
        ClaimId::Diam4,
        ClaimId::ExQn3,
        ClaimId::LemMcd,
        ClaimId::LemCliqueCyc,
        ClaimId::ThmClique,
        ClaimId::CorCliqueNilp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::ObsNbhd => "OBS-NBHD",
            ClaimId::ObsComplete => "OBS-COMPLETE",
            ClaimId::LemLinkage => "LEM-LINKAGE",
            ClaimId::ObsUniqueP => "OBS-UNIQUE-P",
            ClaimId::CorPgrpConn => "COR-PGRP-CONN",
            ClaimId::CorComponents => "COR-COMPONENTS",
            ClaimId::PropCoprime => "PROP-COPRIME",
            ClaimId::PropNpp => "PROP-NPP",
            ClaimId::ThmNilpConn => "THM-NILP-CONN",
            ClaimId::Diam1 => "DIAM-1",
            ClaimId::Diam2 => "DIAM-2",
            ClaimId::Diam4 => "DIAM-4",
            ClaimId::ExQn3 => "EX-QN-3",
            ClaimId::LemMcd => "LEM-MCD",
            ClaimId::LemCliqueCyc => "LEM-CLIQUE-CYC",
            ClaimId::ThmClique => "THM-CLIQUE",
            ClaimId::CorCliqueNilp => "COR-CLIQUE-NILP",
        }
    }

    /// Case-insensitive lookup by the hyphenated name.
    pub fn parse(text: &str) -> Option<ClaimId> {
        let upper = text.to_ascii_uppercase();
        ClaimId::ALL.iter().copied().find(|c| c.as_str() == upper)
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The group does not meet the claim's hypothesis, or a resource cap
    /// ruled the check out; the string says which.
    Skipped(String),
}

impl ClaimStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub group: String,
    pub status: ClaimStatus,
    /// For failures: the violating elements or values. For skips: the
    /// reason.
    pub witness: Option<String>,
    pub elapsed: Duration,
}

/// A corpus entry keeps the symbolic spec alongside the built table;
/// product- and family-shaped hypotheses read the spec.
#[derive(Debug, Clone)]
pub struct CorpusGroup {
    pub spec: GroupSpec,
    pub group: Group,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub specs: Vec<GroupSpec>,
    pub limits: Limits,
}

impl Corpus {
    pub fn new(specs: Vec<GroupSpec>, limits: Limits) -> Corpus {
        Corpus { specs, limits }
    }

    /// The standard corpus: cyclic to order 64, dihedral to parameter 32,
    /// dicyclic to parameter 16, the small symmetric and alternating
    /// groups, elementary abelian squares and cubes for p in {2, 3, 5},
    /// and a fixed set of direct products mixing the families.
    pub fn standard(limits: Limits) -> Corpus {
        let atom = |f: Family| GroupSpec::Atom(f);
        let mut specs = Vec::new();
        specs.extend((1..=64).map(|n| atom(Family::Cyclic(n))));
        specs.extend((3..=32).map(|n| atom(Family::Dihedral(n))));
        specs.extend((2..=16).map(|n| atom(Family::Dicyclic(n))));
        specs.extend([
            atom(Family::Symmetric(3)),
            atom(Family::Symmetric(4)),
            atom(Family::Symmetric(5)),
            atom(Family::Alternating(4)),
            atom(Family::Alternating(5)),
        ]);
        for p in [2, 3, 5] {
            specs.push(atom(Family::ElemAbelian(p, 2)));
            specs.push(atom(Family::ElemAbelian(p, 3)));
        }
        let product = |fs: Vec<Family>| GroupSpec::Product(fs.into_iter().map(atom).collect());
        specs.extend([
            product(vec![Family::Symmetric(3), Family::Symmetric(3)]),
            product(vec![Family::Symmetric(3), Family::Cyclic(6)]),
            product(vec![Family::Cyclic(2), Family::Cyclic(2)]),
            product(vec![Family::Cyclic(6), Family::Symmetric(3)]),
            product(vec![Family::Dihedral(4), Family::Cyclic(3)]),
            product(vec![Family::Symmetric(3), Family::Cyclic(5)]),
            product(vec![Family::Cyclic(3), Family::Dicyclic(2)]),
            product(vec![Family::Cyclic(5), Family::Dicyclic(4)]),
        ]);
        Corpus { specs, limits }
    }

    /// Builds every spec whose predicted order fits the limit; larger ones
    /// are silently left out (the limit is the caller's filter).
    pub fn build_groups(&self) -> Result<Vec<CorpusGroup>> {
        let mut out = Vec::with_capacity(self.specs.len());
        for spec in &self.specs {
            if spec.order() > self.limits.max_order as u64 {
                continue;
            }
            let group = spec.build_with(&self.limits)?;
            out.push(CorpusGroup {
                spec: spec.clone(),
                group,
            });
        }
        Ok(out)
    }
}

/// Runs one claim against one group.
pub fn verify(claim: ClaimId, cg: &CorpusGroup) -> ClaimReport {
    let start = Instant::now();
    let check = checks::run_check(claim, cg);
    let elapsed = start.elapsed();
    let (status, witness) = match check {
        checks::Check::Pass => (ClaimStatus::Pass, None),
        checks::Check::Fail(w) => (ClaimStatus::Fail, Some(w)),
        checks::Check::Skip(reason) => (ClaimStatus::Skipped(reason.clone()), Some(reason)),
    };
    ClaimReport {
        claim,
        group: cg.group.name().to_string(),
        status,
        witness,
        elapsed,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub reports: Vec<ClaimReport>,
    pub summary: Summary,
}

/// Builds the corpus and verifies the requested claims, group-major:
/// reports come out in corpus order, claims in their declared order within
/// each group.
pub fn run_corpus(corpus: &Corpus, claims: &[ClaimId]) -> Result<CorpusRun> {
    let groups = corpus.build_groups()?;
    let mut reports = Vec::with_capacity(groups.len() * claims.len());
    let mut summary = Summary::default();
    for cg in &groups {
        for &claim in claims {
            let report = verify(claim, cg);
            match report.status {
                ClaimStatus::Pass => summary.pass += 1,
                ClaimStatus::Fail => summary.fail += 1,
                ClaimStatus::Skipped(_) => summary.skipped += 1,
            }
            reports.push(report);
        }
    }
    Ok(CorpusRun { reports, summary })
}

#[derive(Serialize)]
struct ReportRow<'a> {
    claim: &'a str,
    group: &'a str,
    status: &'a str,
    witness: Option<&'a str>,
    ms: u64,
}

#[derive(Serialize)]
struct SummaryRow {
    pass: usize,
    fail: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct RunDoc<'a> {
    reports: Vec<ReportRow<'a>>,
    summary: SummaryRow,
}

/// JSON rendering of a run. The `ms` column is pinned to 0 so that two
/// runs over the same corpus are byte-identical; wall-clock times stay on
/// [`ClaimReport::elapsed`] for interactive display only.
pub fn run_to_json(run: &CorpusRun) -> String {
    let doc = RunDoc {
        reports: run
            .reports
            .iter()
            .map(|r| ReportRow {
                claim: r.claim.as_str(),
                group: &r.group,
                status: r.status.as_str(),
                witness: r.witness.as_deref(),
                ms: 0,
            })
            .collect(),
        summary: SummaryRow {
            pass: run.summary.pass,
            fail: run.summary.fail,
            skipped: run.summary.skipped,
        },
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("run serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for claim in ClaimId::ALL {
            assert_eq!(ClaimId::parse(claim.as_str()), Some(claim));
            assert_eq!(ClaimId::parse(&claim.as_str().to_lowercase()), Some(claim));
        }
        assert_eq!(ClaimId::parse("NOPE"), None);
    }

    #[test]
    fn standard_corpus_has_128_specs() {
        let corpus = Corpus::standard(Limits::default());
        assert_eq!(corpus.specs.len(), 128);
        let groups = corpus.build_groups().unwrap();
        assert_eq!(groups.len(), 128);
        assert!(groups.iter().all(|cg| cg.group.order() <= 160));
    }

    #[test]
    fn max_order_filters_corpus() {
        let corpus = Corpus::standard(Limits {
            max_order: 10,
            ..Limits::default()
        });
        let groups = corpus.build_groups().unwrap();
        assert!(groups.iter().all(|cg| cg.group.order() <= 10));
        assert!(groups.len() < 128);
        // C1..C10, D3..D5, Dic2, S3, E2^2, E2^3, E3^2, C2xC2.
        assert_eq!(groups.len(), 19);
    }

    #[test]
    fn json_pins_ms_to_zero() {
        let corpus = Corpus::new(vec![GroupSpec::Atom(Family::Cyclic(12))], Limits::default());
        let run = run_corpus(&corpus, &[ClaimId::ThmClique]).unwrap();
        let text = run_to_json(&run);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["reports"][0]["ms"], 0);
        assert_eq!(doc["reports"][0]["claim"], "THM-CLIQUE");
        assert_eq!(doc["reports"][0]["status"], "pass");
        assert_eq!(doc["summary"]["pass"], 1);
    }
}
