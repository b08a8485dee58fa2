use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// One verified statement; `anchor` names the identity checked, or is `plumbing`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, anchor: &str, ok: bool) -> Self {
        Check {
            suite: String::new(),
            name: name.to_string(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: None,
            witness: None,
        }
    }

    pub fn from_result(name: &str, anchor: &str, r: Result<(), String>) -> Self {
        let mut c = Check::new(name, anchor, r.is_ok());
        c.witness = r.err();
        c
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub signs: Vec<(String, i32)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Line-oriented form: a header, one line per check, a summary line.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite = {}", self.suite)?;
        writeln!(f, "seed = {}", self.seed)?;
        let signs: Vec<String> = self.signs.iter().map(|(k, v)| format!("{}={}", k, if *v < 0 { "-1" } else { "+1" })).collect();
        writeln!(f, "signs = {}", signs.join(" "))?;
        for c in &self.checks {
            write!(f, "[{}] {}.{} | anchor = {}", c.status.tag(), c.suite, c.name, c.anchor)?;
            if let Some(d) = &c.detail {
                write!(f, " | {}", d)?;
            }
            if let Some(w) = &c.witness {
                write!(f, " | witness = {}", w)?;
            }
            writeln!(f)?;
        }
        writeln!(f, "summary = {} pass, {} fail, {} skipped", self.count(Status::Pass), self.count(Status::Fail), self.count(Status::Skipped))
    }
}
