//! Serializable reports. Every `--json` output is one of these structs; the
//! schema is described in `docs/report-schema.md`.

use balanceable::conditions::ConditionReport;
use balanceable::ramsey::{BalOutcome, BalancedCopy, Coloring};
use balanceable::reduction::CutInstance;
use balanceable::{ConstructionResult, FamilyVerdict, LemmaId, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetStatus {
    pub log2: u32,
    pub exceeded: bool,
}

/// Output of `classify`, `conditions` and `witness`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub n: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<ConditionReport>,
    pub elapsed_us: u64,
    pub budget: BudgetStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleStatus {
    Balanceable,
    NotBalanceable,
    Undecided,
}

impl From<&Verdict> for OracleStatus {
    fn from(v: &Verdict) -> Self {
        match v.decided() {
            Some(true) => OracleStatus::Balanceable,
            Some(false) => OracleStatus::NotBalanceable,
            None => OracleStatus::Undecided,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// Family spec of the instance, e.g. `chorded:10,3`.
    pub key: String,
    pub n: usize,
    pub m: usize,
    pub verdict: FamilyVerdict,
    pub lemma: LemmaId,
    /// Degree sum of the independent set `I`, when the construction has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_sum: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

/// Output of `family-table`, `grid-table` and `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub command: String,
    pub rows: Vec<TableRow>,
    pub elapsed_us: u64,
    pub budget: BudgetStatus,
}

impl TableReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| r.agree == Some(false)).count()
    }

    pub fn undecided(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.oracle == Some(OracleStatus::Undecided))
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum BalResult {
    /// `bal(n, G)` over all colorings.
    Number { outcome: BalOutcome },
    /// A single coloring was checked.
    Coloring {
        coloring: Coloring,
        copy: Option<BalancedCopy>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalReport {
    pub command: String,
    pub graph: String,
    pub n: usize,
    pub result: BalResult,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub command: String,
    pub input: String,
    pub k: usize,
    pub reduced: CutInstance,
    pub elapsed_us: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use balanceable::{build_family, decide_balanceable, family_witness, Budget};

    fn round_trip<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(value: &T) {
        let json = serde_json::to_string(value).unwrap();
        let back: T = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, value);
    }

    #[test]
    fn reports_round_trip() {
        let params = "chorded:10,4".parse().unwrap();
        let g = build_family(&params).unwrap();
        let report = Report {
            command: "classify".into(),
            input: params.to_string(),
            n: g.n(),
            m: g.m(),
            verdict: Some(decide_balanceable(&g, Budget::default())),
            construction: Some(family_witness(&params).unwrap()),
            conditions: balanceable::conditions::evaluate_all(&g, Budget::default()),
            elapsed_us: 17,
            budget: BudgetStatus {
                log2: 28,
                exceeded: false,
            },
        };
        round_trip(&report);

        let table = TableReport {
            command: "verify".into(),
            rows: vec![TableRow {
                key: "chorded:6,2".into(),
                n: 6,
                m: 12,
                verdict: FamilyVerdict::NotBalanceable,
                lemma: LemmaId::L18,
                degree_sum: None,
                oracle: Some(OracleStatus::NotBalanceable),
                agree: Some(true),
            }],
            elapsed_us: 3,
            budget: report.budget,
        };
        round_trip(&table);

        let bal = BalReport {
            command: "bal".into(),
            graph: "path:2".into(),
            n: 4,
            result: BalResult::Coloring {
                coloring: Coloring::new(4, 0b101).unwrap(),
                copy: None,
            },
            elapsed_us: 1,
        };
        round_trip(&bal);

        let reduce = ReduceReport {
            command: "reduce".into(),
            input: "g.txt".into(),
            k: 2,
            reduced: CutInstance::new(g, 3).unwrap(),
            elapsed_us: 0,
        };
        round_trip(&reduce);
    }

    #[test]
    fn mismatch_counting() {
        let mut t = TableReport {
            command: "verify".into(),
            rows: vec![],
            elapsed_us: 0,
            budget: BudgetStatus {
                log2: 28,
                exceeded: false,
            },
        };
        assert_eq!(t.mismatches(), 0);
        t.rows.push(TableRow {
            key: "x".into(),
            n: 0,
            m: 0,
            verdict: FamilyVerdict::Balanceable,
            lemma: LemmaId::L12,
            degree_sum: None,
            oracle: Some(OracleStatus::NotBalanceable),
            agree: Some(false),
        });
        t.rows.push(TableRow {
            oracle: Some(OracleStatus::Undecided),
            agree: None,
            ..t.rows[0].clone()
        });
        assert_eq!((t.mismatches(), t.undecided()), (1, 1));
    }
}
