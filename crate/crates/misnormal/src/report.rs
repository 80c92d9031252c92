//! The stable JSON report envelope emitted by the CLI:
//! `{statement, graphs, hypotheses[], verdict, witnesses{name: vertices},
//!   notes[], timings}`.

use std::collections::BTreeMap;
use std::time::Duration;

use misnormal_core::checks::{
    Hypothesis, NormalityReport, NormalityVerdict, PrimitivityReport, PrimitivityVerdict,
    TheoremReport, TheoremStatus,
};
use misnormal_core::VertexSet;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub statement: String,
    pub graphs: Vec<String>,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: String,
    pub witnesses: BTreeMap<String, VertexSet>,
    pub notes: Vec<String>,
    pub timings: Timings,
}

impl Envelope {
    pub fn from_theorem(report: TheoremReport, graphs: Vec<String>, elapsed: Duration) -> Envelope {
        let verdict = match report.status {
            TheoremStatus::Verified => "verified",
            TheoremStatus::HypothesisNotMet => "hypothesis_not_met",
            TheoremStatus::Violated => "violated",
        };
        Envelope {
            statement: report.statement,
            graphs,
            hypotheses: report.hypotheses,
            verdict: verdict.into(),
            witnesses: report.witnesses,
            notes: report.notes,
            timings: Timings { elapsed_ms: elapsed.as_millis() },
        }
    }

    pub fn from_normality(report: &NormalityReport, graphs: Vec<String>, elapsed: Duration) -> Envelope {
        let verdict = match report.verdict {
            NormalityVerdict::Normal => "normal",
            NormalityVerdict::NotNormal => "not_normal",
            NormalityVerdict::Inconclusive => "inconclusive",
        };
        let mut witnesses = BTreeMap::new();
        if let Some(w) = &report.witness {
            witnesses.insert("mixed_witness".into(), w.clone());
        }
        Envelope {
            statement: "mis-normality".into(),
            graphs,
            hypotheses: Vec::new(),
            verdict: verdict.into(),
            witnesses,
            notes: vec![format!(
                "alpha(GxH) = {}, eq1 = {}, {} maximum independent sets",
                report.alpha_product,
                report.eq1_value,
                report.classified.len()
            )],
            timings: Timings { elapsed_ms: elapsed.as_millis() },
        }
    }

    pub fn from_primitivity(report: &PrimitivityReport, graphs: Vec<String>, elapsed: Duration) -> Envelope {
        let verdict = match report.verdict {
            PrimitivityVerdict::Primitive => "primitive",
            PrimitivityVerdict::Imprimitive => "imprimitive",
            PrimitivityVerdict::Inconclusive => "inconclusive",
        };
        let mut witnesses = BTreeMap::new();
        let mut notes = Vec::new();
        if let Some(w) = &report.witness {
            witnesses.insert("imprimitive_witness".into(), w.clone());
        }
        if let Some(w) = &report.max_imprimitive {
            witnesses.insert("max_imprimitive".into(), w.clone());
        }
        if let Some(data) = &report.witness_data {
            witnesses.insert("closed_neighborhood".into(), data.closed_neighborhood.clone());
            notes.push(format!(
                "|A| * |V| = {} and alpha * |N[A]| = {}",
                data.lhs, data.rhs
            ));
        }
        Envelope {
            statement: "is-primitivity".into(),
            graphs,
            hypotheses: Vec::new(),
            verdict: verdict.into(),
            witnesses,
            notes,
            timings: Timings { elapsed_ms: elapsed.as_millis() },
        }
    }

    /// Exit code contract: 0 for affirmative verdicts, 1 for decisive
    /// negatives, 3 for inconclusive/budget-limited outcomes.
    pub fn exit_code(&self) -> i32 {
        match self.verdict.as_str() {
            "verified" | "normal" | "primitive" => 0,
            "inconclusive" => 3,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are serializable")
    }

    /// Human-readable rendering of the same data; never a separate data path.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("statement : {}\n", self.statement));
        out.push_str(&format!("graphs    : {}\n", self.graphs.join(", ")));
        for h in &self.hypotheses {
            out.push_str(&format!(
                "hypothesis: {} = {} ({})\n",
                h.name, h.holds, h.evidence
            ));
        }
        out.push_str(&format!("verdict   : {}\n", self.verdict));
        for (name, set) in &self.witnesses {
            let verts: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("witness   : {} = [{}]\n", name, verts.join(", ")));
        }
        for note in &self.notes {
            out.push_str(&format!("note      : {note}\n"));
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.timings.elapsed_ms));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_contract() {
        let mk = |verdict: &str| Envelope {
            statement: "x".into(),
            graphs: vec![],
            hypotheses: vec![],
            verdict: verdict.into(),
            witnesses: BTreeMap::new(),
            notes: vec![],
            timings: Timings { elapsed_ms: 0 },
        };
        assert_eq!(mk("verified").exit_code(), 0);
        assert_eq!(mk("normal").exit_code(), 0);
        assert_eq!(mk("primitive").exit_code(), 0);
        assert_eq!(mk("not_normal").exit_code(), 1);
        assert_eq!(mk("imprimitive").exit_code(), 1);
        assert_eq!(mk("hypothesis_not_met").exit_code(), 1);
        assert_eq!(mk("inconclusive").exit_code(), 3);
    }
}
