//! Check reports: one record per law, each with explicit witness tuples.
//!
//! Witness tuples are collected in scan order (x, then y, then z) up to a
//! configurable cap, so reports are deterministic and diffable.

use crate::finite::Carrier;

/// Default per-law witness cap.
pub const DEFAULT_WITNESS_CAP: usize = 10;

/// One violating tuple of element indices, optionally with a short note
/// saying which facet of the law broke (e.g. "definedness" vs "value").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub args: Vec<usize>,
    pub note: Option<String>,
}

/// Verdict for a single law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawRecord {
    pub id: String,
    pub witnesses: Vec<Witness>,
    pub truncated: bool,
    /// Advisory records are informational: they never affect the overall
    /// verdict or the exit code.
    pub advisory: bool,
}

impl LawRecord {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Report over a set of laws.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub laws: Vec<LawRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Machine,
}

impl CheckReport {
    /// True when every non-advisory law has zero witnesses.
    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.advisory || l.passed())
    }

    pub fn law(&self, id: &str) -> Option<&LawRecord> {
        self.laws.iter().find(|l| l.id == id)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|l| !l.advisory && !l.passed())
            .map(|l| l.id.as_str())
            .collect()
    }

    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.laws.extend(other.laws);
        self
    }

    /// Render the report. The machine format is line oriented:
    /// `LAW <id> PASS` or `LAW <id> FAIL x=<label> y=<label> z=<label>`,
    /// one line per witness; advisory laws use `INFO` in place of `LAW`.
    pub fn render(&self, carrier: &Carrier, format: ReportFormat) -> String {
        let mut out = String::new();
        for law in &self.laws {
            let head = match (format, law.advisory) {
                (ReportFormat::Machine, false) => format!("LAW {}", law.id),
                (ReportFormat::Machine, true) => format!("INFO {}", law.id),
                (ReportFormat::Text, false) => law.id.clone(),
                (ReportFormat::Text, true) => format!("(info) {}", law.id),
            };
            if law.passed() {
                out.push_str(&head);
                out.push_str(" PASS\n");
                continue;
            }
            for w in &law.witnesses {
                out.push_str(&head);
                out.push_str(" FAIL");
                for (i, &a) in w.args.iter().enumerate() {
                    let name = ["x", "y", "z", "w"][i.min(3)];
                    out.push_str(&format!(" {name}={}", carrier.label(a)));
                }
                if format == ReportFormat::Text {
                    if let Some(note) = &w.note {
                        out.push_str(&format!(" # {note}"));
                    }
                }
                out.push('\n');
            }
            if law.truncated && format == ReportFormat::Text {
                out.push_str(&format!("{head} FAIL (further witnesses suppressed)\n"));
            }
        }
        out
    }
}

/// Builder that accumulates witnesses for one law up to a cap.
#[derive(Debug)]
pub struct LawCheck {
    id: &'static str,
    cap: usize,
    advisory: bool,
    witnesses: Vec<Witness>,
    truncated: bool,
}

impl LawCheck {
    pub fn new(id: &'static str, cap: usize) -> Self {
        LawCheck { id, cap, advisory: false, witnesses: Vec::new(), truncated: false }
    }

    pub fn advisory(id: &'static str, cap: usize) -> Self {
        LawCheck { advisory: true, ..LawCheck::new(id, cap) }
    }

    pub fn fail(&mut self, args: &[usize]) {
        self.push(Witness { args: args.to_vec(), note: None });
    }

    pub fn fail_note(&mut self, args: &[usize], note: &str) {
        self.push(Witness { args: args.to_vec(), note: Some(note.to_string()) });
    }

    fn push(&mut self, w: Witness) {
        if self.witnesses.len() < self.cap {
            self.witnesses.push(w);
        } else {
            self.truncated = true;
        }
    }

    /// True once the witness list is full; callers may stop scanning early.
    pub fn saturated(&self) -> bool {
        self.witnesses.len() >= self.cap
    }

    pub fn has_failures(&self) -> bool {
        !self.witnesses.is_empty()
    }

    pub fn done(self) -> LawRecord {
        LawRecord {
            id: self.id.to_string(),
            witnesses: self.witnesses,
            truncated: self.truncated,
            advisory: self.advisory,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_truncates_and_flags() {
        let mut c = LawCheck::new("E1", 2);
        c.fail(&[0, 1]);
        c.fail(&[1, 0]);
        c.fail(&[1, 1]);
        let rec = c.done();
        assert_eq!(rec.witnesses.len(), 2);
        assert!(rec.truncated);
    }

    #[test]
    fn machine_rendering_is_line_oriented() {
        let carrier = Carrier::canonical(3);
        let mut ok = LawCheck::new("E1", 10);
        let mut bad = LawCheck::new("E4", 10);
        bad.fail(&[1]);
        let report = CheckReport { laws: vec![ok_rec(&mut ok), bad.done()] };
        let text = report.render(&carrier, ReportFormat::Machine);
        assert_eq!(text, "LAW E1 PASS\nLAW E4 FAIL x=a\n");
        fn ok_rec(c: &mut LawCheck) -> LawRecord {
            std::mem::replace(c, LawCheck::new("tmp", 1)).done()
        }
    }
}
