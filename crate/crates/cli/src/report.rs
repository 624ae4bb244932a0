//! Machine-readable command output.
//!
//! Every number is carried as exact text: integers in decimal, rationals as
//! `num/den`, polynomials as coefficient lists (constant term first).

use std::fmt::{self, Display, Write as _};

use milnor::IntegerPolynomial;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Value {
    Integer(String),
    Rational(String),
    Bool(bool),
    Text(String),
    Polynomial(Vec<String>),
    List(Vec<Value>),
    Record(Vec<Field>),
}

impl Value {
    pub fn int(v: impl Display) -> Self {
        Value::Integer(v.to_string())
    }

    pub fn rational(v: impl Display) -> Self {
        Value::Rational(v.to_string())
    }

    pub fn text(v: impl Display) -> Self {
        Value::Text(v.to_string())
    }

    pub fn poly(p: &IntegerPolynomial) -> Self {
        Value::Polynomial(p.coeffs().iter().map(BigInt::to_string).collect())
    }

    pub fn ints<T: Display>(items: impl IntoIterator<Item = T>) -> Self {
        Value::List(items.into_iter().map(Value::int).collect())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Integer(s) | Value::Rational(s) | Value::Text(s) => f.write_str(s),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Polynomial(c) => {
                let coeffs: Option<Vec<BigInt>> = c.iter().map(|s| s.parse().ok()).collect();
                match coeffs {
                    Some(c) => write!(f, "{}", IntegerPolynomial::new(c)),
                    None => write!(f, "[{}]", c.join(", ")),
                }
            }
            Value::List(items) => {
                let parts: Vec<String> = items.iter().map(Value::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Record(fields) => {
                let parts: Vec<String> = fields
                    .iter()
                    .map(|fd| format!("{}={}", fd.key, fd.value))
                    .collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Field {
    pub key: String,
    pub value: Value,
    /// Formula or criterion that produced the value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error { exit_code: i32, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub request: Vec<Field>,
    pub results: Vec<Field>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            request: Vec::new(),
            results: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn echo(&mut self, key: &str, value: Value) -> &mut Self {
        self.request.push(Field {
            key: key.into(),
            value,
            source: None,
        });
        self
    }

    pub fn push(&mut self, key: &str, value: Value, source: &str) -> &mut Self {
        self.results.push(Field {
            key: key.into(),
            value,
            source: Some(source.into()),
        });
        self
    }

    pub fn push_plain(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.push(Field {
            key: key.into(),
            value,
            source: None,
        });
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.results.iter().find(|f| f.key == key).map(|f| &f.value)
    }

    pub fn failed(command: &str, exit_code: i32, message: String) -> Self {
        Self {
            status: Status::Error { exit_code, message },
            ..Self::new(command)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One `key: value` line per result; lists of records print one record
    /// per indented line.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for f in &self.results {
            match &f.value {
                Value::List(items) if items.iter().all(|v| matches!(v, Value::Record(_))) => {
                    let _ = writeln!(out, "{}:", f.key);
                    for item in items {
                        let _ = writeln!(out, "  {item}");
                    }
                }
                v => {
                    let _ = writeln!(out, "{}: {v}", f.key);
                }
            }
        }
        if let Status::Error { message, .. } = &self.status {
            let _ = writeln!(out, "error: {message}");
        }
        out
    }
}
