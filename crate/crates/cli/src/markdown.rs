//! Markdown view of a JSON report.

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace('|', "\\|"),
        Value::Null => String::new(),
        other => other.to_string().replace('|', "\\|"),
    }
}

fn table(rows: &[Value], out: &mut String) {
    let Some(Value::Object(first)) = rows.first() else {
        for r in rows {
            out.push_str(&format!("- {}\n", cell(r)));
        }
        return;
    };
    let keys: Vec<&String> = first.keys().collect();
    out.push_str(&format!("| {} |\n", keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(" | ")));
    out.push_str(&format!("|{}\n", " --- |".repeat(keys.len())));
    for r in rows {
        let cells: Vec<String> = keys.iter().map(|k| cell(r.get(k.as_str()).unwrap_or(&Value::Null))).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
}

fn section(title: &str, v: &Value, depth: usize, out: &mut String) {
    let Value::Object(map) = v else {
        out.push_str(&format!("{}\n", cell(v)));
        return;
    };
    out.push_str(&format!("{} {title}\n\n", "#".repeat(depth.min(6))));
    let scalars: Vec<(&String, &Value)> =
        map.iter().filter(|(_, x)| !matches!(x, Value::Object(_)) && !is_table(x)).collect();
    if !scalars.is_empty() {
        out.push_str("| field | value |\n| --- | --- |\n");
        for (k, x) in scalars {
            out.push_str(&format!("| {k} | {} |\n", cell(x)));
        }
        out.push('\n');
    }
    for (k, x) in map {
        match x {
            Value::Object(_) => section(k, x, depth + 1, out),
            Value::Array(rows) if is_table(x) => {
                out.push_str(&format!("{} {k}\n\n", "#".repeat((depth + 1).min(6))));
                table(rows, out);
                out.push('\n');
            }
            _ => {}
        }
    }
}

fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if rows.first().is_some_and(|r| r.is_object()))
}

pub fn render(title: &str, report: &Value) -> String {
    let mut out = String::new();
    section(title, report, 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tables_and_fields() {
        let r = json!({"count": 2, "pass": true, "rows": [{"a": 1, "b": "x|y"}, {"a": 2, "b": null}]});
        let md = render("report", &r);
        assert!(md.starts_with("# report\n"));
        assert!(md.contains("| count | 2 |"));
        assert!(md.contains("| a | b |\n| --- | --- |\n| 1 | x\\|y |\n| 2 |  |"));
    }
}
