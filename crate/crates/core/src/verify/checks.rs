//! Per-instance checks. Each returns a [`VerificationRecord`] whose verdict
//! follows implication semantics; spectral comparisons inside
//! [`SPECTRAL_MARGIN`] are reported as indeterminate unless an exact
//! structural test settles them.

use serde::{Deserialize, Serialize};

use super::record::{Margin, StatementId, VerificationRecord, Verdict};
use crate::error::{Error, Result};
use crate::extremal::{book_graph, enumerate_family, is_book_graph};
use crate::graph::{edge_connectivity, write_graph6, Graph};
use crate::packing::stp_number;
use crate::spectral::{spectral_radius, SPECTRAL_MARGIN};

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// `C(δ+1,2) + C(n-δ-1,2) + k`.
pub fn edge_threshold(n: usize, delta: usize, k: usize) -> usize {
    binom2(delta + 1) + binom2(n.saturating_sub(delta + 1)) + k
}

/// Edge-count condition: `δ >= 2k`, `n >= 2δ+2`, `e >= C(δ+1,2)+C(n-δ-1,2)+k`
/// should force `τ >= k`.
pub fn check_edge_theorem(g: &Graph, k: usize) -> VerificationRecord {
    let (n, delta) = (g.n(), g.min_degree());
    let threshold = edge_threshold(n, delta, k);
    let premise =
        g.is_connected() && delta >= 2 * k && n >= 2 * delta + 2 && g.m() >= threshold;
    let cert = stp_number(g);
    let conclusion = cert.tau >= k;
    let witness = if conclusion {
        None
    } else {
        cert.violating.as_ref().map(|w| format!("tau={}; {w}", cert.tau))
    };
    VerificationRecord {
        statement: StatementId::T1_1,
        n,
        delta,
        k_or_kappa: k,
        graph6: write_graph6(g),
        premise_holds: premise,
        conclusion_holds: conclusion,
        margin: Some(Margin::Slack(g.m() as i64 - threshold as i64)),
        witness,
        verdict: VerificationRecord::implication(premise, conclusion),
    }
}

fn spectral_hypotheses(n: usize, delta: usize, k: usize) -> Result<()> {
    if k < 2 || delta < 2 * k || n < 2 * delta + 3 {
        return Err(Error::Hypothesis(format!(
            "need k >= 2, delta >= 2k, n >= 2 delta + 3 (n={n}, delta={delta}, k={k})"
        )));
    }
    Ok(())
}

/// Spectral radius of `book_graph(n, δ, k-1)`.
pub fn spectral_threshold(n: usize, delta: usize, k: usize) -> Result<f64> {
    spectral_hypotheses(n, delta, k)?;
    Ok(spectral_radius(&book_graph(n, delta, k - 1)?))
}

/// Spectral condition: for connected `g` with `δ >= 2k`, `n >= 2δ+3`,
/// `ρ(g) >= ρ(B)` should force `τ >= k` unless `g ≅ B`, where
/// `B = book_graph(n, δ, k-1)`.
pub fn check_spectral_theorem(g: &Graph, k: usize) -> VerificationRecord {
    let (n, delta) = (g.n(), g.min_degree());
    let mut record = VerificationRecord {
        statement: StatementId::T1_2,
        n,
        delta,
        k_or_kappa: k,
        graph6: write_graph6(g),
        premise_holds: false,
        conclusion_holds: false,
        margin: None,
        witness: None,
        verdict: Verdict::Consistent,
    };
    let cert = stp_number(g);
    let packs = cert.tau >= k;
    let gated = g.is_connected() && spectral_hypotheses(n, delta, k).is_ok();
    if !gated {
        record.conclusion_holds = packs;
        return record;
    }
    if is_book_graph(g, delta, k - 1) {
        record.premise_holds = true;
        record.conclusion_holds = true;
        record.margin = Some(Margin::Spectral(0.0));
        record.witness = Some(format!("isomorphic to book graph B(n={n}, delta={delta}, i={})", k - 1));
        return record;
    }
    let threshold = spectral_threshold(n, delta, k).expect("hypotheses checked");
    let diff = spectral_radius(g) - threshold;
    record.margin = Some(Margin::Spectral(diff));
    record.conclusion_holds = packs;
    if !packs {
        record.witness = cert.violating.as_ref().map(|w| format!("tau={}; {w}", cert.tau));
    }
    if diff.abs() <= SPECTRAL_MARGIN {
        record.premise_holds = true;
        record.verdict = Verdict::Indeterminate;
        return record;
    }
    record.premise_holds = diff > 0.0;
    record.verdict = VerificationRecord::implication(record.premise_holds, packs);
    record
}

/// Class condition for the connectivity statement: `4 <= κ′ < δ`, `n >= 2δ+4`.
pub fn connectivity_hypotheses(n: usize, delta: usize, kappa: usize) -> Result<()> {
    if kappa < 4 || kappa >= delta || n < 2 * delta + 4 {
        return Err(Error::Hypothesis(format!(
            "need 4 <= kappa < delta and n >= 2 delta + 4 (n={n}, delta={delta}, kappa={kappa})"
        )));
    }
    Ok(())
}

/// For `g` with minimum degree δ and edge connectivity κ′ in the admissible
/// range, `ρ(g) <= ρ(book_graph(n, δ, κ′))` with equality only for the book
/// graph itself.
pub fn check_connectivity_theorem(g: &Graph) -> VerificationRecord {
    let (n, delta) = (g.n(), g.min_degree());
    let kappa = if n >= 2 {
        edge_connectivity(g).expect("n >= 2").0
    } else {
        0
    };
    let mut record = VerificationRecord {
        statement: StatementId::T1_3,
        n,
        delta,
        k_or_kappa: kappa,
        graph6: write_graph6(g),
        premise_holds: false,
        conclusion_holds: false,
        margin: None,
        witness: None,
        verdict: Verdict::Consistent,
    };
    if connectivity_hypotheses(n, delta, kappa).is_err() {
        return record;
    }
    record.premise_holds = true;
    if is_book_graph(g, delta, kappa) {
        record.conclusion_holds = true;
        record.margin = Some(Margin::Spectral(0.0));
        record.witness = Some(format!("isomorphic to book graph B(n={n}, delta={delta}, i={kappa})"));
        return record;
    }
    let bound = spectral_radius(&book_graph(n, delta, kappa).expect("n >= 2 delta + 4"));
    let diff = bound - spectral_radius(g);
    record.margin = Some(Margin::Spectral(diff));
    record.conclusion_holds = diff > SPECTRAL_MARGIN;
    record.verdict = if diff.abs() <= SPECTRAL_MARGIN {
        Verdict::Indeterminate
    } else {
        VerificationRecord::implication(true, record.conclusion_holds)
    };
    record
}

/// Which bracket to check on a clique-pair family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BracketVariant {
    /// `n-δ-2 < ρ < n-δ-1` on `δ+1` splits with `k-1` cross edges.
    L2_3,
    /// `n-δ-2 < ρ < n-δ` on `δ+1` splits with `κ′` cross edges.
    L3_2,
}

/// Checks that every orbit representative of the `δ+1` split family with `i`
/// cross edges has spectral radius strictly inside the variant's bracket.
pub fn check_bracket_lemmas(
    n: usize,
    delta: usize,
    i: usize,
    variant: BracketVariant,
) -> Result<VerificationRecord> {
    let (statement, upper) = match variant {
        BracketVariant::L2_3 => {
            let k = i + 1;
            spectral_hypotheses(n, delta, k)?;
            (StatementId::L2_3, (n - delta - 1) as f64)
        }
        BracketVariant::L3_2 => {
            connectivity_hypotheses(n, delta, i)?;
            (StatementId::L3_2, (n - delta) as f64)
        }
    };
    let lower = (n - delta - 2) as f64;
    let mut worst: Option<(f64, Graph)> = None;
    for member in enumerate_family(n, delta + 1, i)? {
        let rho = spectral_radius(&member.graph);
        let slack = (rho - lower).min(upper - rho);
        if worst.as_ref().is_none_or(|(s, _)| slack < *s) {
            worst = Some((slack, member.graph));
        }
    }
    let (slack, subject) = worst.expect("family is nonempty");
    let verdict = if slack.abs() <= SPECTRAL_MARGIN {
        Verdict::Indeterminate
    } else {
        VerificationRecord::implication(true, slack > 0.0)
    };
    Ok(VerificationRecord {
        statement,
        n,
        delta,
        k_or_kappa: match variant {
            BracketVariant::L2_3 => i + 1,
            BracketVariant::L3_2 => i,
        },
        graph6: write_graph6(&subject),
        premise_holds: true,
        conclusion_holds: slack > SPECTRAL_MARGIN,
        margin: Some(Margin::Spectral(slack)),
        witness: Some(format!("bracket ({lower}, {upper}); tightest member shown")),
        verdict,
    })
}

/// Details of a family extremality scan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalityReport {
    pub record: VerificationRecord,
    pub book_rho: f64,
    /// Largest spectral radius among members not isomorphic to the book graph.
    pub runner_up_rho: Option<f64>,
    pub runner_up_split: Option<usize>,
    pub runner_up_graph6: Option<String>,
    pub members_scanned: usize,
}

fn extremality_scan(
    statement: StatementId,
    n: usize,
    delta: usize,
    i: usize,
    splits: std::ops::RangeInclusive<usize>,
    premise: bool,
) -> Result<ExtremalityReport> {
    let book = book_graph(n, delta, i)?;
    let book_rho = spectral_radius(&book);
    let mut runner: Option<(f64, usize, Graph)> = None;
    let mut scanned = 0;
    for split in splits {
        for member in enumerate_family(n, split, i)? {
            scanned += 1;
            if split == delta + 1 && is_book_graph(&member.graph, delta, i) {
                continue;
            }
            let rho = spectral_radius(&member.graph);
            if runner.as_ref().is_none_or(|(r, _, _)| rho > *r) {
                runner = Some((rho, split, member.graph));
            }
        }
    }
    let margin = runner.as_ref().map(|(r, _, _)| book_rho - r);
    let conclusion = margin.is_none_or(|m| m > SPECTRAL_MARGIN);
    let verdict = match margin {
        Some(m) if m.abs() <= SPECTRAL_MARGIN => Verdict::Indeterminate,
        _ => VerificationRecord::implication(premise, conclusion),
    };
    let record = VerificationRecord {
        statement,
        n,
        delta,
        k_or_kappa: match statement {
            StatementId::L3_3 => i,
            _ => i + 1,
        },
        graph6: write_graph6(&book),
        premise_holds: premise,
        conclusion_holds: conclusion,
        margin: margin.map(Margin::Spectral),
        witness: runner
            .as_ref()
            .map(|(r, split, g)| format!("runner-up split={split} rho={r:.12} graph6={}", write_graph6(g))),
        verdict,
    };
    Ok(ExtremalityReport {
        record,
        book_rho,
        runner_up_rho: runner.as_ref().map(|r| r.0),
        runner_up_split: runner.as_ref().map(|r| r.1),
        runner_up_graph6: runner.as_ref().map(|r| write_graph6(&r.2)),
        members_scanned: scanned,
    })
}

/// The book graph `book_graph(n, δ, i)` should be the strict spectral
/// maximum over every orbit representative of the `δ+1` split family with `i`
/// cross edges and of every larger split `a <= n/2`. The premise records
/// whether `(n, δ, k = i+1)` satisfies the spectral hypotheses; the scan runs
/// either way.
pub fn check_family_extremality(n: usize, delta: usize, i: usize) -> Result<ExtremalityReport> {
    let premise = spectral_hypotheses(n, delta, i + 1).is_ok();
    extremality_scan(StatementId::L2_5, n, delta, i, delta + 1..=n / 2, premise)
}

/// Only the larger splits `δ+2 <= a <= n/2` against the book graph.
pub fn check_split_dominance(n: usize, delta: usize, i: usize) -> Result<ExtremalityReport> {
    let premise = spectral_hypotheses(n, delta, i + 1).is_ok();
    extremality_scan(StatementId::L2_6, n, delta, i, delta + 2..=n / 2, premise)
}

/// Same scan with `i = κ′` under the connectivity hypotheses.
pub fn check_connectivity_extremality(n: usize, delta: usize, kappa: usize) -> Result<ExtremalityReport> {
    let premise = connectivity_hypotheses(n, delta, kappa).is_ok();
    extremality_scan(StatementId::L3_3, n, delta, kappa, delta + 1..=n / 2, premise)
}

/// A vertex set `U` with `|∂U| <= δ-1` but `|U| <= δ`, if one exists.
/// Exhaustive over all nonempty proper subsets.
pub fn small_cut_violation(g: &Graph) -> Result<Option<Vec<usize>>> {
    const LIMIT: usize = 20;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::LimitExceeded {
            what: "exhaustive vertex subsets",
            limit: LIMIT,
            actual: n,
        });
    }
    let delta = g.min_degree();
    if n < 2 || delta == 0 {
        return Ok(None);
    }
    let bits: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    for mask in 1u32..(1u32 << n) - 1 {
        let size = mask.count_ones() as usize;
        if size > delta {
            continue;
        }
        let boundary: u32 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (bits[v] & !mask).count_ones())
            .sum();
        if (boundary as usize) < delta {
            return Ok(Some((0..n).filter(|&v| mask >> v & 1 == 1).collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{complete_graph, family_graph, CrossPattern};

    #[test]
    fn edge_condition_examples() {
        let g = family_graph(12, 5, CrossPattern::new(5, 7, vec![(0, 0)]).unwrap())
            .unwrap()
            .graph;
        let r = check_edge_theorem(&g, 2);
        assert!(!r.premise_holds && !r.conclusion_holds);
        assert_eq!(r.margin, Some(Margin::Slack(-1)));
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(r.witness.is_some());

        let g = family_graph(12, 5, CrossPattern::new(5, 7, vec![(0, 0), (1, 1)]).unwrap())
            .unwrap()
            .graph;
        let r = check_edge_theorem(&g, 2);
        assert!(r.premise_holds && r.conclusion_holds);
        assert_eq!(r.margin, Some(Margin::Slack(0)));

        let r = check_edge_theorem(&complete_graph(4).unwrap(), 2);
        assert!(!r.premise_holds && r.conclusion_holds);
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn thresholds_sit_in_bracket() {
        let t = spectral_threshold(13, 4, 2).unwrap();
        assert!(t > 7.0 && t < 8.0);
        let t = spectral_threshold(14, 4, 2).unwrap();
        assert!(t > 8.0 && t < 9.0);
        assert!(spectral_threshold(10, 4, 2).is_err());
        assert!(spectral_threshold(11, 4, 2).is_ok());
        assert!(spectral_threshold(13, 3, 2).is_err());
    }

    #[test]
    fn spectral_condition_equality_branch() {
        let b = book_graph(13, 4, 1).unwrap();
        let r = check_spectral_theorem(&b, 2);
        assert!(r.premise_holds && r.conclusion_holds);
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.margin, Some(Margin::Spectral(0.0)));

        let r = check_spectral_theorem(&complete_graph(13).unwrap(), 2);
        assert!(!r.premise_holds);
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn bracket_examples() {
        let r = check_bracket_lemmas(13, 4, 1, BracketVariant::L2_3).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(r.conclusion_holds);
        let r = check_bracket_lemmas(14, 5, 4, BracketVariant::L3_2).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(matches!(
            check_bracket_lemmas(10, 4, 1, BracketVariant::L2_3),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn extremality_examples() {
        let r = check_family_extremality(13, 4, 1).unwrap();
        assert!(r.record.conclusion_holds);
        assert_eq!(r.record.verdict, Verdict::Consistent);
        let r = check_family_extremality(13, 4, 2).unwrap();
        assert!(r.record.conclusion_holds);
        assert!(r.runner_up_rho.unwrap() < r.book_rho - 1e-8);
    }

    #[test]
    fn connectivity_equality_branch() {
        let b = book_graph(14, 5, 4).unwrap();
        let r = check_connectivity_theorem(&b);
        assert_eq!(r.k_or_kappa, 4);
        assert!(r.premise_holds && r.conclusion_holds);
        assert_eq!(r.margin, Some(Margin::Spectral(0.0)));
    }
}
