use serde::Serialize;

/// Outcome of a verification suite: how many identities were checked and
/// which ones failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), ..Default::default() }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, o: Report) {
        self.checked += o.checked;
        self.violations.extend(o.violations);
    }
}
