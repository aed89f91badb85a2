use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub case: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

/// A deterministic table of cases; rows keep insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<Row>,
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

impl Report {
    pub fn push(&mut self, case: impl Into<String>, inputs: impl Into<String>, expected: impl Into<String>, got: impl Into<String>, status: Status) {
        self.rows.push(Row { case: case.into(), inputs: inputs.into(), expected: expected.into(), got: got.into(), status });
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    /// Fail beats inconclusive beats pass; an empty report passes.
    pub fn status(&self) -> Status {
        if self.count(Status::Fail) > 0 {
            Status::Fail
        } else if self.count(Status::Inconclusive) > 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("case\tinputs\texpected\tgot\tstatus\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                clean(&r.case),
                clean(&r.inputs),
                clean(&r.expected),
                clean(&r.got),
                r.status.as_str()
            );
        }
        out
    }
}
