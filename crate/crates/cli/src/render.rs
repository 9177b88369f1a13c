//! Human-readable rendering of result JSON.

use serde_json::Value;

/// Two-column `key  value` listing; based rings are shown as fusion rules.
pub fn table(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.trim_end().to_string()
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    match value {
        Value::Object(_) if is_ring(value) => write_ring(out, value, indent),
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in map {
                if is_nested(v) {
                    out.push_str(&format!("{:indent$}{k}\n", ""));
                    write_value(out, v, indent + 2);
                } else {
                    out.push_str(&format!("{:indent$}{k:<width$}  {}\n", "", scalar(v)));
                }
            }
        }
        Value::Array(items) if items.iter().any(is_nested) => {
            for (i, item) in items.iter().enumerate() {
                out.push_str(&format!("{:indent$}[{i}]\n", ""));
                write_value(out, item, indent + 2);
            }
        }
        other => out.push_str(&format!("{:indent$}{}\n", "", scalar(other))),
    }
}

fn is_nested(v: &Value) -> bool {
    match v {
        Value::Object(m) => !m.is_empty(),
        Value::Array(items) => items.iter().any(|x| x.is_object() || x.is_array()),
        _ => false,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "[]".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn is_ring(v: &Value) -> bool {
    v.get("rank").is_some() && v.get("N").is_some() && v.get("involution").is_some()
}

fn write_ring(out: &mut String, ring: &Value, indent: usize) {
    let rank = ring["rank"].as_u64().unwrap_or(0) as usize;
    let label = |i: usize| -> String {
        ring["labels"]
            .get(i)
            .and_then(Value::as_str)
            .map(str::to_string)
            .unwrap_or_else(|| format!("b{i}"))
    };
    out.push_str(&format!("{:indent$}rank {rank}, unit {}\n", "", label(ring["unit"].as_u64().unwrap_or(0) as usize)));
    let duals: Vec<String> = (0..rank)
        .map(|i| format!("{}*={}", label(i), label(ring["involution"][i].as_u64().unwrap_or(0) as usize)))
        .collect();
    out.push_str(&format!("{:indent$}{}\n", "", duals.join(" ")));
    for i in 0..rank {
        for j in 0..rank {
            let terms: Vec<String> = (0..rank)
                .filter_map(|k| {
                    let c = &ring["N"][i][j][k];
                    match c {
                        Value::Number(n) if n.as_u64() == Some(0) => None,
                        Value::Number(n) if n.as_u64() == Some(1) => Some(label(k)),
                        other => Some(format!("{}·{}", scalar(other), label(k))),
                    }
                })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            out.push_str(&format!("{:indent$}{} ⊗ {} = {rhs}\n", "", label(i), label(j)));
        }
    }
}
