use clap::ValueEnum;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

/// Result of one verb. Serialized with sorted keys, so identical input gives
/// byte-identical output.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub payload: Map<String, Value>,
    pub assumptions: Vec<String>,
    /// Preformatted tabular body for table verbs.
    pub tsv: Option<String>,
}

impl OutputRecord {
    pub fn new(payload: Value) -> Self {
        let payload = match payload {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Self { payload, assumptions: Vec::new(), tsv: None }
    }

    pub fn with_assumptions(mut self, a: impl IntoIterator<Item = String>) -> Self {
        self.assumptions.extend(a);
        self
    }

    pub fn with_tsv(mut self, tsv: String) -> Self {
        self.tsv = Some(tsv);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut m = self.payload.clone();
        m.insert("schema_version".into(), Value::String(SCHEMA_VERSION.into()));
        m.insert("assumptions".into(), Value::from(self.assumptions.clone()));
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Tsv => match &self.tsv {
                Some(t) => t.clone(),
                None => self.lines("\t"),
            },
            Format::Text => {
                let mut s = self.lines(": ");
                if let Some(t) = &self.tsv {
                    s.push_str(t);
                }
                s
            }
        }
    }

    fn lines(&self, sep: &str) -> String {
        let mut out = String::new();
        for (k, v) in &self.payload {
            if self.tsv.is_some() && matches!(k.as_str(), "rows" | "columns") {
                continue;
            }
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}{sep}{v}\n"));
        }
        for a in &self.assumptions {
            out.push_str(&format!("assumption{sep}{a}\n"));
        }
        out
    }
}
