//! Structured analysis reports: a sorted key/value tree with a canonical
//! human-readable rendering and a JSON mirror. Identical inputs and seeds
//! produce byte-identical reports.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Str(String),
    List(Vec<Value>),
    Map(BTreeMap<String, Value>),
}

impl Value {
    pub fn map() -> BTreeMap<String, Value> {
        BTreeMap::new()
    }

    fn render(&self, indent: usize, out: &mut String) {
        match self {
            Value::Bool(b) => out.push_str(&b.to_string()),
            Value::Int(i) => out.push_str(&i.to_string()),
            Value::Str(s) => out.push_str(s),
            Value::List(items) => {
                for item in items {
                    out.push('\n');
                    out.push_str(&"  ".repeat(indent));
                    out.push_str("- ");
                    match item {
                        Value::Map(_) | Value::List(_) => item.render(indent + 1, out),
                        scalar => scalar.render(indent, out),
                    }
                }
                if items.is_empty() {
                    out.push_str("(empty)");
                }
            }
            Value::Map(entries) => {
                for (k, v) in entries {
                    out.push('\n');
                    out.push_str(&"  ".repeat(indent));
                    out.push_str(k);
                    out.push(':');
                    match v {
                        Value::Map(_) | Value::List(_) => v.render(indent + 1, out),
                        scalar => {
                            out.push(' ');
                            scalar.render(indent, out);
                        }
                    }
                }
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Bool(b) => serde_json::Value::Bool(*b),
            Value::Int(i) => serde_json::Value::Number((*i).into()),
            Value::Str(s) => serde_json::Value::String(s.clone()),
            Value::List(items) => {
                serde_json::Value::Array(items.iter().map(Value::to_json).collect())
            }
            Value::Map(entries) => serde_json::Value::Object(
                entries
                    .iter()
                    .map(|(k, v)| (k.clone(), v.to_json()))
                    .collect(),
            ),
        }
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Str(s)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub fields: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            fields: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("report {}", self.command);
        Value::Map(self.fields.clone()).render(1, &mut out);
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert(
            "report".to_string(),
            serde_json::Value::String(self.command.clone()),
        );
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.to_json());
        }
        serde_json::Value::Object(obj)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("valid json");
        s.push('\n');
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        let mut r = Report::new("class");
        r.set("class", 5usize);
        r.set("algebra", "heis5");
        let mut inner = Value::map();
        inner.insert("dim".into(), Value::Int(4));
        r.set("orbit", Value::Map(inner));
        r.set("items", Value::List(vec![Value::Int(1), Value::Int(3)]));
        let text = r.render_text();
        // keys are sorted: algebra < class < items < orbit
        let a = text.find("\n  algebra:").unwrap();
        let c = text.find("\n  class:").unwrap();
        let i = text.find("\n  items:").unwrap();
        let o = text.find("\n  orbit:").unwrap();
        assert!(a < c && c < i && i < o);
        assert!(text.ends_with('\n'));
        assert_eq!(r.render_text(), text);
        let json: serde_json::Value = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(json["report"], "class");
        assert_eq!(json["class"], 5);
    }
}
