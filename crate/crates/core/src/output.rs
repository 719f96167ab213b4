//! Output formatting shared by the CLI: real-number rendering, undefined
//! markers, and the metadata header that precedes every emitted file.

use serde_json::{Map, Value};

/// Renders a real with 12 significant digits, plain decimal point, and no
/// grouping. Moderate magnitudes print positionally with trailing zeros
/// trimmed; extreme ones fall back to scientific notation.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x < 0.0 {
        return format!("-{}", format_real(-x));
    }
    if !x.is_finite() {
        return x.to_string();
    }

    let formatted = format!("{x:.11e}");
    let (mantissa, exponent) = formatted.split_once('e').expect("exponential format");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    debug_assert_eq!(digits.len(), 12);
    let exponent: i32 = exponent.parse().expect("numeric exponent");

    if (-5..=11).contains(&exponent) {
        let text = if exponent >= 0 {
            let split = exponent as usize + 1;
            format!("{}.{}", &digits[..split], &digits[split..])
        } else {
            format!("0.{}{}", "0".repeat((-exponent - 1) as usize), digits)
        };
        trim_fraction(text)
    } else {
        format!("{}e{exponent}", trim_fraction(mantissa.to_string()))
    }
}

/// Renders an optional statistic, with the literal `undefined` for `None`.
pub fn format_optional(x: Option<f64>) -> String {
    match x {
        Some(v) => format_real(v),
        None => "undefined".to_string(),
    }
}

fn trim_fraction(mut text: String) -> String {
    if text.contains('.') {
        while text.ends_with('0') {
            text.pop();
        }
        if text.ends_with('.') {
            text.pop();
        }
    }
    text
}

/// Ordered key/value metadata echoed at the top of every output: as `# key:
/// value` comment lines in CSV, as a `meta` object in JSON.
#[derive(Debug, Clone, Default)]
pub struct Metadata {
    entries: Vec<(String, String)>,
}

impl Metadata {
    pub fn new(command: &str) -> Self {
        let mut meta = Metadata::default();
        meta.push("tool", format!("linkgraph {}", env!("CARGO_PKG_VERSION")));
        meta.push("command", command);
        meta
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    /// Wall-clock stamp, suppressed under deterministic output.
    pub fn push_timestamp(&mut self, deterministic: bool) {
        if !deterministic {
            let seconds = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            self.push("generated_at_unix", seconds);
        }
    }

    pub fn csv_header(&self) -> String {
        let mut header = String::new();
        for (key, value) in &self.entries {
            header.push_str(&format!("# {key}: {value}\n"));
        }
        header
    }

    pub fn json_object(&self) -> Value {
        let mut map = Map::new();
        for (key, value) in &self.entries {
            map.insert(key.clone(), Value::String(value.clone()));
        }
        Value::Object(map)
    }
}
