//! The TSV verification report: one row per instance, stable column order,
//! deterministic row order.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    BoundRespected,
    Discrepancy,
    Timeout,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::BoundRespected => "BOUND_RESPECTED",
            Verdict::Discrepancy => "DISCREPANCY",
            Verdict::Timeout => "TIMEOUT",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub id: String,
    pub instance: String,
    pub theorem: String,
    pub predicted: String,
    pub exact: Option<u32>,
    pub verdict: Verdict,
    pub nodes: u64,
    pub millis: u128,
}

#[derive(Debug, Default)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn tsv(&self) -> String {
        let mut out =
            String::from("id\tinstance\ttheorem\tpredicted\texact\tverdict\tnodes\tmillis\n");
        for r in &self.rows {
            let exact = r.exact.map_or("-".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.id, r.instance, r.theorem, r.predicted, exact, r.verdict, r.nodes, r.millis
            ));
        }
        out
    }

    pub fn summary(&self) -> String {
        let count = |v: Verdict| self.rows.iter().filter(|r| r.verdict == v).count();
        format!(
            "{} rows: {} confirmed, {} bound-respected, {} discrepancies, {} timeouts",
            self.rows.len(),
            count(Verdict::Confirmed),
            count(Verdict::BoundRespected),
            count(Verdict::Discrepancy),
            count(Verdict::Timeout),
        )
    }

    pub fn has_discrepancy(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::Discrepancy)
    }
}
