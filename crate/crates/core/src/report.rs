//! Named verification checks with verdicts, witnesses, and timing.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Skipped => write!(f, "skipped"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport {
            title: title.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        let witness = witness.into();
        self.checks.push(Check {
            name: name.into(),
            verdict,
            // a failed check always carries its witness
            witness: if witness.is_empty() && ok {
                None
            } else {
                Some(witness)
            },
            millis: 0,
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            verdict: Verdict::Skipped,
            witness: Some(reason.into()),
            millis: 0,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Overall verdict: every non-skipped check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }
}

impl fmt::Display for VerificationReport {
    /// Deterministic text form; timings deliberately excluded.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "report: {}", self.title)?;
        for c in &self.checks {
            match &c.witness {
                Some(w) if !w.is_empty() => writeln!(f, "  [{}] {} ({})", c.verdict, c.name, w)?,
                _ => writeln!(f, "  [{}] {}", c.verdict, c.name)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {}", n)?;
        }
        write!(
            f,
            "  overall: {}",
            if self.passed() { "pass" } else { "fail" }
        )
    }
}
