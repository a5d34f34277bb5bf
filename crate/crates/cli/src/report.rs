use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub descriptors: Vec<String>,
    pub result: Option<String>,
    pub checks: Vec<Check>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: String) -> Self {
        Self { command, descriptors: Vec::new(), result: None, checks: Vec::new(), passed: true, data: None, elapsed_ms: None }
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.passed &= ok;
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, detail: detail.into() });
    }

    pub fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skip, detail: detail.into() });
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for d in &self.descriptors {
            out.push_str(&format!("space: {d}\n"));
        }
        if let Some(r) = &self.result {
            out.push_str(&format!("result: {r}\n"));
        }
        if let Some(data) = &self.data {
            out.push_str(&serde_json::to_string_pretty(data).unwrap_or_default());
            out.push('\n');
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out.push_str(if self.passed { "verdict: PASS\n" } else { "verdict: FAIL\n" });
        out
    }
}
