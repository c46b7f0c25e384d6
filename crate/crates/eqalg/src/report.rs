use std::fmt::Write as _;

/// A single violated law together with the witness tuple that breaks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Label of the violated law, e.g. `"A4"` or `"Prop 2.3(5)"`.
    pub label: String,
    /// Element indices witnessing the violation, in quantifier order.
    pub witness: Vec<usize>,
    /// Optional human-oriented detail.
    pub detail: String,
}

/// Outcome of scanning a family of laws over a finite structure.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport { violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, label: &str, witness: &[usize], detail: impl Into<String>) {
        self.violations.push(Violation {
            label: label.to_string(),
            witness: witness.to_vec(),
            detail: detail.into(),
        });
    }

    /// True if some violation carries the given label.
    pub fn has(&self, label: &str) -> bool {
        self.violations.iter().any(|v| v.label == label)
    }

    /// Merge another report into this one.
    pub fn absorb(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }
}

/// A structured command result: ordered sections of key/value lines.
///
/// Rendering is deterministic; values are already formatted (witnesses in
/// element names, never raw indices).
#[derive(Debug, Clone, Default)]
pub struct Report {
    sections: Vec<(String, Vec<(String, String)>)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Append a key/value line to a section, creating the section on first use.
    pub fn put(&mut self, section: &str, key: &str, value: impl std::fmt::Display) {
        let entry = (key.to_string(), value.to_string());
        match self.sections.iter_mut().find(|(name, _)| name == section) {
            Some((_, entries)) => entries.push(entry),
            None => self.sections.push((section.to_string(), vec![entry])),
        }
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for (name, entries) in &self.sections {
            let _ = writeln!(out, "[{name}]");
            for (key, value) in entries {
                if value.contains('\n') {
                    let _ = writeln!(out, "{key}:");
                    for line in value.trim_end().lines() {
                        let _ = writeln!(out, "  {line}");
                    }
                } else {
                    let _ = writeln!(out, "{key}: {value}");
                }
            }
        }
        out
    }

    /// One `SECTION.KEY=VALUE` line per entry; embedded newlines become `\n`.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for (name, entries) in &self.sections {
            for (key, value) in entries {
                let flat = value.trim_end().replace('\n', "\\n");
                let _ = writeln!(out, "{name}.{key}={flat}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_renders_both_forms() {
        let mut r = Report::new();
        r.put("axioms", "passed", true);
        r.put("cone", "ray.0", "(1, 0, 1, 0)");
        r.put("cone", "table", "a b\nc d");
        assert_eq!(
            r.render_human(),
            "[axioms]\npassed: true\n[cone]\nray.0: (1, 0, 1, 0)\ntable:\n  a b\n  c d\n"
        );
        assert_eq!(
            r.render_machine(),
            "axioms.passed=true\ncone.ray.0=(1, 0, 1, 0)\ncone.table=a b\\nc d\n"
        );
    }
}
