//! Sequence specifications, CSV export and deterministic JSON output.
//!
//! A sequence is given either inline (`gevrey:1`, `qgevrey:2`) or as a JSON file
//! `{"kind": ..., "params": {...}, "truncation": P}` with kinds
//!
//! | kind       | params                                   |
//! |------------|------------------------------------------|
//! | `gevrey`   | `s > 0`                                  |
//! | `qgevrey`  | `q > 1`                                  |
//! | `quotients`| `mu` (values `mu_1..mu_P`) or `log_mu`   |
//! | `logs`     | `log_m` (values `log M_0..log M_P`)      |
//!
//! `truncation` is optional. Family kinds fall back to the caller's default; explicit data
//! is cut to `truncation` when it is given.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::num::fmt_f64;
use crate::seqcore::LogSequence;

/// Parse an inline spec such as `gevrey:1` or `qgevrey:2`.
pub fn parse_inline(spec: &str, truncation: usize) -> Result<LogSequence> {
    let (kind, param) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("inline spec `{spec}` must look like kind:value")))?;
    let value: f64 = param
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("inline spec `{spec}`: `{param}` is not a number")))?;
    match kind.trim() {
        "gevrey" => LogSequence::gevrey(value, truncation),
        "qgevrey" => LogSequence::qgevrey(value, truncation),
        other => Err(Error::Parse(format!(
            "inline spec `{spec}`: unknown kind `{other}` (expected gevrey or qgevrey)"
        ))),
    }
}

/// Parse a JSON spec document.
pub fn parse_json(text: &str, default_truncation: usize) -> Result<LogSequence> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::Parse("spec must be a JSON object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "kind" | "params" | "truncation") {
            return Err(Error::Parse(format!("field `{key}`: unknown field")));
        }
    }
    let kind = obj
        .get("kind")
        .ok_or_else(|| Error::Parse("field `kind`: missing".into()))?
        .as_str()
        .ok_or_else(|| Error::Parse("field `kind`: expected a string".into()))?;
    let truncation = match obj.get("truncation") {
        None | Some(Value::Null) => None,
        Some(v) => Some(
            v.as_u64()
                .filter(|&p| p > 0)
                .ok_or_else(|| Error::Parse("field `truncation`: expected a positive integer".into()))?
                as usize,
        ),
    };
    let empty = Map::new();
    let params = match obj.get("params") {
        None => &empty,
        Some(v) => v
            .as_object()
            .ok_or_else(|| Error::Parse("field `params`: expected an object".into()))?,
    };
    match kind {
        "gevrey" => LogSequence::gevrey(number(params, "s")?, truncation.unwrap_or(default_truncation)),
        "qgevrey" => LogSequence::qgevrey(number(params, "q")?, truncation.unwrap_or(default_truncation)),
        "quotients" => {
            let log_mu = match (params.get("mu"), params.get("log_mu")) {
                (Some(_), Some(_)) => {
                    return Err(Error::Parse("field `params`: give either `mu` or `log_mu`, not both".into()))
                }
                (Some(_), None) => {
                    let mu = numbers(params, "mu")?;
                    if let Some(i) = mu.iter().position(|v| *v <= 0.0) {
                        return Err(Error::Parse(format!("field `params.mu[{i}]`: quotients must be positive")));
                    }
                    mu.iter().map(|v| v.ln()).collect()
                }
                (None, Some(_)) => numbers(params, "log_mu")?,
                (None, None) => return Err(Error::Parse("field `params.mu`: missing (or give `log_mu`)".into())),
            };
            let log_mu = cut(log_mu, truncation, "params.mu")?;
            LogSequence::from_quotients(&log_mu)
        }
        "logs" => {
            let mut log_m = numbers(params, "log_m")?;
            if let Some(p) = truncation {
                if p + 1 > log_m.len() {
                    return Err(Error::Parse(format!(
                        "field `truncation`: {p} exceeds the {} terms of `params.log_m`",
                        log_m.len().saturating_sub(1)
                    )));
                }
                log_m.truncate(p + 1);
            }
            LogSequence::from_logs(log_m)
        }
        other => Err(Error::Parse(format!(
            "field `kind`: unknown kind `{other}` (expected gevrey, qgevrey, quotients or logs)"
        ))),
    }
}

fn number(params: &Map<String, Value>, key: &str) -> Result<f64> {
    params
        .get(key)
        .ok_or_else(|| Error::Parse(format!("field `params.{key}`: missing")))?
        .as_f64()
        .ok_or_else(|| Error::Parse(format!("field `params.{key}`: expected a number")))
}

fn numbers(params: &Map<String, Value>, key: &str) -> Result<Vec<f64>> {
    let arr = params
        .get(key)
        .ok_or_else(|| Error::Parse(format!("field `params.{key}`: missing")))?
        .as_array()
        .ok_or_else(|| Error::Parse(format!("field `params.{key}`: expected an array of numbers")))?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_f64()
                .ok_or_else(|| Error::Parse(format!("field `params.{key}[{i}]`: expected a number")))
        })
        .collect()
}

fn cut(mut v: Vec<f64>, truncation: Option<usize>, field: &str) -> Result<Vec<f64>> {
    if let Some(p) = truncation {
        if p > v.len() {
            return Err(Error::Parse(format!(
                "field `truncation`: {p} exceeds the {} entries of `{field}`",
                v.len()
            )));
        }
        v.truncate(p);
    }
    Ok(v)
}

/// An inline spec when the argument looks like `kind:value` and no such file exists,
/// otherwise a JSON file.
pub fn load_spec(arg: &str, default_truncation: usize) -> Result<LogSequence> {
    let path = Path::new(arg);
    if !path.exists() && arg.contains(':') {
        return parse_inline(arg, default_truncation);
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read `{arg}`: {e}")))?;
    parse_json(&text, default_truncation).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{arg}: {msg}")),
        other => other,
    })
}

/// Human-readable label of a sequence for reports.
pub fn label(m: &LogSequence) -> String {
    match m.provenance() {
        Some(p) => format!("{} (P = {})", p.describe(), m.truncation()),
        None => format!("explicit sequence (P = {})", m.truncation()),
    }
}

/// CSV with columns `p, logM, logmu`; the `p = 0` quotient is reported as 0.
pub fn sequence_csv(m: &LogSequence) -> String {
    let mut s = String::from("p,logM,logmu\n");
    for (p, (lm, lmu)) in m.log_m().iter().zip(m.log_mu()).enumerate() {
        s.push_str(&format!("{p},{},{}\n", fmt_f64(*lm), fmt_f64(*lmu)));
    }
    s
}

/// Pretty JSON formatter that prints every float with 17 significant digits.
struct Digits17(PrettyFormatter<'static>);

macro_rules! forward {
    ($($name:ident($($arg:ident: $ty:ty),*)),* $(,)?) => {
        $(
            fn $name<W: ?Sized + Write>(&mut self, w: &mut W $(, $arg: $ty)*) -> std::io::Result<()> {
                self.0.$name(w $(, $arg)*)
            }
        )*
    };
}

impl Formatter for Digits17 {
    forward!(
        begin_array(),
        end_array(),
        begin_array_value(first: bool),
        end_array_value(),
        begin_object(),
        end_object(),
        begin_object_key(first: bool),
        begin_object_value(),
        end_object_value(),
    );

    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> std::io::Result<()> {
        w.write_all(fmt_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> std::io::Result<()> {
        self.write_f64(w, value as f64)
    }
}

/// Deterministic JSON: fixed key order (struct order, sorted maps), floats with 17
/// significant digits, non-finite floats as `null`, trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17(PrettyFormatter::new()));
    value.serialize(&mut ser).expect("serializing to memory cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_specs() {
        let m = parse_inline("gevrey:1", 8).unwrap();
        assert_eq!(m.truncation(), 8);
        assert!((m.log_m()[4] - 24f64.ln()).abs() < 1e-12);
        assert!(parse_inline("qgevrey:1", 8).is_err());
        assert!(matches!(parse_inline("bessel:2", 8), Err(Error::Parse(_))));
        assert!(matches!(parse_inline("gevrey:x", 8), Err(Error::Parse(_))));
    }

    #[test]
    fn json_quotients_for_factorial() {
        let text = r#"{"kind": "quotients", "params": {"mu": [1, 2, 3, 4, 5]}}"#;
        let m = parse_json(text, 100).unwrap();
        assert_eq!(m.truncation(), 5);
        assert!((m.log_m()[4] - 24f64.ln()).abs() < 1e-12);
        let m = parse_json(r#"{"kind": "quotients", "params": {"mu": [1, 2, 3]}, "truncation": 2}"#, 9).unwrap();
        assert_eq!(m.truncation(), 2);
    }

    #[test]
    fn json_families_and_logs() {
        let m = parse_json(r#"{"kind": "qgevrey", "params": {"q": 2}, "truncation": 16}"#, 9).unwrap();
        assert_eq!(m.truncation(), 16);
        let m = parse_json(r#"{"kind": "gevrey", "params": {"s": 2}}"#, 9).unwrap();
        assert_eq!(m.truncation(), 9);
        let m = parse_json(r#"{"kind": "logs", "params": {"log_m": [0, 0, 1, 3]}}"#, 9).unwrap();
        assert_eq!(m.log_m(), &[0.0, 0.0, 1.0, 3.0]);
    }

    #[test]
    fn parse_errors_name_the_field() {
        let cases = [
            (r#"{"params": {}}"#, "`kind`"),
            (r#"{"kind": 3}"#, "`kind`"),
            (r#"{"kind": "gevrey", "params": {"q": 2}}"#, "`params.s`"),
            (r#"{"kind": "gevrey", "params": {"s": "two"}}"#, "`params.s`"),
            (r#"{"kind": "quotients", "params": {"mu": [1, "x"]}}"#, "`params.mu[1]`"),
            (r#"{"kind": "quotients", "params": {"mu": [1, -2]}}"#, "`params.mu[1]`"),
            (r#"{"kind": "gevrey", "params": {"s": 1}, "truncation": -1}"#, "`truncation`"),
            (r#"{"kind": "gevrey", "params": {"s": 1}, "extra": 0}"#, "`extra`"),
            (r#"{"kind": "logs", "params": {"log_m": [0, 1]}, "truncation": 5}"#, "`truncation`"),
        ];
        for (text, field) in cases {
            match parse_json(text, 8) {
                Err(Error::Parse(msg)) => assert!(msg.contains(field), "{text}: {msg}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        match parse_json("{\n  \"kind\": \"gevrey\",\n  oops\n}", 8) {
            Err(Error::Parse(msg)) => assert!(msg.starts_with("line 3"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn csv_has_expected_columns() {
        let csv = sequence_csv(&parse_inline("gevrey:1", 4).unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "p,logM,logmu");
        assert_eq!(lines.len(), 6);
        let row4: Vec<&str> = lines[5].split(',').collect();
        assert_eq!(row4[0], "4");
        assert!((row4[1].parse::<f64>().unwrap() - 24f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn json_floats_have_17_digits() {
        #[derive(Serialize)]
        struct S {
            x: f64,
            y: f64,
            n: usize,
        }
        let s = to_json(&S { x: 0.1, y: f64::NAN, n: 3 });
        assert!(s.contains("\"x\": 1.0000000000000001e-1"), "{s}");
        assert!(s.contains("\"y\": null"), "{s}");
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["x"].as_f64(), Some(0.1));
    }
}
