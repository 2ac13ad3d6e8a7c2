//! The one report shape every subcommand emits: a `command` name, the
//! fixed sign-convention tag, the echoed inputs, structured results, and a
//! list of named pass/fail checks. JSON and text renderings carry the same
//! content.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub convention: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, checks: Vec<Check>) -> Self {
        Report {
            command: command.to_string(),
            convention: "sec3".to_string(),
            inputs,
            results,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("convention: {}\n", self.convention));
        out.push_str("inputs:\n");
        render_value(&self.inputs, 1, &mut out);
        out.push_str("results:\n");
        render_value(&self.results, 1, &mut out);
        out.push_str("checks:\n");
        for check in &self.checks {
            let tag = if check.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{tag}] {}: {}\n", check.name, check.detail));
        }
        out
    }
}

fn indent_str(indent: usize) -> String {
    "  ".repeat(indent)
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (key, value) in map {
                match value {
                    Value::Object(_) | Value::Array(_) if !is_empty_container(value) => {
                        out.push_str(&format!("{}{}:\n", indent_str(indent), key));
                        render_value(value, indent + 1, out);
                    }
                    _ => {
                        out.push_str(&format!(
                            "{}{}: {}\n",
                            indent_str(indent),
                            key,
                            scalar_string(value)
                        ));
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) if !is_empty_container(item) => {
                        out.push_str(&format!("{}-\n", indent_str(indent)));
                        render_value(item, indent + 1, out);
                    }
                    _ => {
                        out.push_str(&format!(
                            "{}- {}\n",
                            indent_str(indent),
                            scalar_string(item)
                        ));
                    }
                }
            }
        }
        _ => {
            out.push_str(&format!("{}{}\n", indent_str(indent), scalar_string(v)));
        }
    }
}

fn is_empty_container(v: &Value) -> bool {
    match v {
        Value::Object(map) => map.is_empty(),
        Value::Array(items) => items.is_empty(),
        _ => false,
    }
}

fn scalar_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(_) => "{}".to_string(),
        Value::Array(_) => "[]".to_string(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering_contains_all_content() {
        let report = Report::new(
            "star",
            json!({"m": 1, "f": "x"}),
            json!({"product": "x*p + l", "items": [1, 2]}),
            vec![
                Check::new("sanity", true, "ok"),
                Check::new("broken", false, "nope"),
            ],
        );
        let text = report.to_text();
        assert!(text.contains("command: star"));
        assert!(text.contains("convention: sec3"));
        assert!(text.contains("product: x*p + l"));
        assert!(text.contains("[pass] sanity: ok"));
        assert!(text.contains("[FAIL] broken: nope"));
        assert!(!report.all_pass());
        let parsed: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(parsed["convention"], "sec3");
    }
}
