//! Deterministic number and report formatting.

/// Formats with 12 significant digits, `.` decimal separator, mirroring
/// `%.12g`: fixed notation for exponents in `[-4, 11]`, scientific otherwise.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.11e}", x);
    let epos = sci.find('e').expect("scientific format has an exponent");
    let exp: i32 = sci[epos + 1..].parse().expect("valid exponent");
    if (-4..=11).contains(&exp) {
        let prec = (11 - exp) as usize;
        format!("{:.*}", prec, x)
    } else {
        sci
    }
}

/// A JSON value that is either pre-formatted (numbers, booleans, arrays) or a
/// string needing quoting.
pub enum JsonValue {
    Raw(String),
    Str(String),
}

impl JsonValue {
    pub fn num(x: f64) -> Self {
        JsonValue::Raw(fmt_sig(x))
    }

    pub fn int(x: u64) -> Self {
        JsonValue::Raw(x.to_string())
    }

    pub fn bool(b: bool) -> Self {
        JsonValue::Raw(b.to_string())
    }

    pub fn str(s: impl Into<String>) -> Self {
        JsonValue::Str(s.into())
    }

    pub fn num_array(xs: &[f64]) -> Self {
        let inner: Vec<String> = xs.iter().map(|x| fmt_sig(*x)).collect();
        JsonValue::Raw(format!("[{}]", inner.join(",")))
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Single-line JSON object with the keys in insertion order.
pub fn json_object(fields: &[(&str, JsonValue)]) -> String {
    let mut parts = Vec::with_capacity(fields.len());
    for (key, value) in fields {
        let rendered = match value {
            JsonValue::Raw(r) => r.clone(),
            JsonValue::Str(s) => format!("\"{}\"", escape(s)),
        };
        parts.push(format!("\"{}\":{}", escape(key), rendered));
    }
    format!("{{{}}}", parts.join(","))
}

/// Human-readable aligned `name  value` lines.
pub fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(name, _)| name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (name, value) in rows {
        out.push_str(&format!("{name:<width$}  {value}\n"));
    }
    out
}
