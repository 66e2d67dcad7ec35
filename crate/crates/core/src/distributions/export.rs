use serde_json::{json, Value};

use super::{DistributionTable, StatValue};

fn json_component(v: &StatValue) -> Value {
    match v {
        StatValue::Int(x) => json!(x),
        other => json!(other.to_string()),
    }
}

impl DistributionTable {
    /// `{"schema": [...], "n": .., "class": "..", "counts": [[key, count], ...]}`
    /// with rows in key order.
    pub fn to_json(&self) -> String {
        let schema: Vec<Value> = self
            .schema
            .iter()
            .map(|s| json!({ "name": s.name, "alias": s.alias }))
            .collect();
        let counts: Vec<Value> = self
            .counts
            .iter()
            .map(|(k, c)| json!([k.iter().map(json_component).collect::<Vec<_>>(), c]))
            .collect();
        let doc = json!({
            "schema": schema,
            "n": self.n,
            "class": self.class_label,
            "counts": counts,
        });
        serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
    }

    /// One column per statistic (by alias) followed by `count`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<&str> = self.schema.iter().map(|s| s.alias.as_str()).collect();
        header.push("count");
        w.write_record(&header).expect("in-memory write");
        for (k, c) in &self.counts {
            let mut row: Vec<String> = k.iter().map(|v| v.to_string()).collect();
            row.push(c.to_string());
            w.write_record(&row).expect("in-memory write");
        }
        let bytes = w.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("utf-8 output")
    }

    /// Whitespace-aligned table for terminals.
    pub fn to_plain(&self) -> String {
        let mut rows: Vec<Vec<String>> = Vec::with_capacity(self.counts.len() + 1);
        let mut header: Vec<String> = self.schema.iter().map(|s| s.name.clone()).collect();
        header.push("count".into());
        rows.push(header);
        for (k, c) in &self.counts {
            let mut row: Vec<String> = k.iter().map(|v| v.to_string()).collect();
            row.push(c.to_string());
            rows.push(row);
        }
        let cols = rows[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = format!("# class {} n={}\n", self.class_label, self.n);
        for row in rows {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}", w = *w))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}
