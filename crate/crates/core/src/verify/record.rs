use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StatementId {
    /// Edge count forces `k` disjoint spanning trees.
    #[serde(rename = "T1.1")]
    T1_1,
    /// Spectral radius forces `k` disjoint spanning trees unless the graph is the book graph.
    #[serde(rename = "T1.2")]
    T1_2,
    /// Book graph maximises the spectral radius for fixed δ and κ′.
    #[serde(rename = "T1.3")]
    T1_3,
    /// Spectral bracket for the δ+1 split family.
    #[serde(rename = "L2.3")]
    L2_3,
    /// Book graph is the unique spectral maximiser of the δ+1 split family.
    #[serde(rename = "L2.5")]
    L2_5,
    /// Larger splits stay strictly below the book graph.
    #[serde(rename = "L2.6")]
    L2_6,
    /// Spectral bracket for the κ′ cross-edge family.
    #[serde(rename = "L3.2")]
    L3_2,
    /// Book graph is the unique maximiser of the κ′ cross-edge family.
    #[serde(rename = "L3.3")]
    L3_3,
    /// Largest spectral radius among minimal k-tree graphs.
    #[serde(rename = "P5.2")]
    P5_2,
    /// Arboricity / spectral radius pairs.
    #[serde(rename = "P5.3")]
    P5_3,
}

impl StatementId {
    pub const ALL: [StatementId; 10] = [
        StatementId::T1_1,
        StatementId::T1_2,
        StatementId::T1_3,
        StatementId::L2_3,
        StatementId::L2_5,
        StatementId::L2_6,
        StatementId::L3_2,
        StatementId::L3_3,
        StatementId::P5_2,
        StatementId::P5_3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::T1_1 => "T1.1",
            StatementId::T1_2 => "T1.2",
            StatementId::T1_3 => "T1.3",
            StatementId::L2_3 => "L2.3",
            StatementId::L2_5 => "L2.5",
            StatementId::L2_6 => "L2.6",
            StatementId::L3_2 => "L3.2",
            StatementId::L3_3 => "L3.3",
            StatementId::P5_2 => "P5.2",
            StatementId::P5_3 => "P5.3",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown statement id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Consistent,
    Counterexample,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Consistent => "CONSISTENT",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::Indeterminate => "INDETERMINATE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Numeric distance from the decision boundary of a check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Margin {
    /// Difference of real spectral quantities.
    Spectral(f64),
    /// Integer slack of a counting inequality.
    Slack(i64),
}

impl fmt::Display for Margin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Margin::Spectral(x) => write!(f, "{x:.12e}"),
            Margin::Slack(s) => write!(f, "{s}"),
        }
    }
}

/// One checked instance of a statement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub statement: StatementId,
    pub n: usize,
    pub delta: usize,
    pub k_or_kappa: usize,
    /// Subject graph in graph6.
    pub graph6: String,
    pub premise_holds: bool,
    pub conclusion_holds: bool,
    pub margin: Option<Margin>,
    /// Certificate text backing the conclusion, when one was produced.
    pub witness: Option<String>,
    pub verdict: Verdict,
}

impl VerificationRecord {
    pub const CSV_HEADER: &'static str =
        "statement_id,n,delta,k_or_kappa,graph6,premise,conclusion,margin,verdict,witness_path";

    /// Implication semantics for an exactly decided check.
    pub fn implication(premise: bool, conclusion: bool) -> Verdict {
        if premise && !conclusion {
            Verdict::Counterexample
        } else {
            Verdict::Consistent
        }
    }

    pub fn csv_row(&self, witness_path: Option<&str>) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.statement,
            self.n,
            self.delta,
            self.k_or_kappa,
            csv_field(&self.graph6),
            self.premise_holds,
            self.conclusion_holds,
            self.margin.map(|m| m.to_string()).unwrap_or_default(),
            self.verdict,
            witness_path.map(csv_field).unwrap_or_default()
        )
    }
}

/// Quotes a field when it contains CSV metacharacters. graph6 text may
/// contain `"` or `,`.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Process exit status for a batch: 3 if any counterexample, else 2 if any
/// indeterminate, else 0.
pub fn exit_code<'a>(records: impl IntoIterator<Item = &'a VerificationRecord>) -> i32 {
    let mut code = 0;
    for r in records {
        match r.verdict {
            Verdict::Counterexample => return 3,
            Verdict::Indeterminate => code = 2,
            Verdict::Consistent => {}
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_ids_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), id);
        }
        assert!("T9.9".parse::<StatementId>().is_err());
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("C~"), "C~");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("x\"y"), "\"x\"\"y\"");
    }

    #[test]
    fn implication_table() {
        assert_eq!(VerificationRecord::implication(true, false), Verdict::Counterexample);
        assert_eq!(VerificationRecord::implication(false, false), Verdict::Consistent);
        assert_eq!(VerificationRecord::implication(true, true), Verdict::Consistent);
    }
}
