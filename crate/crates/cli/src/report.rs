use std::fmt::Write;

use serde::Serialize;

/// One checked instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub claim: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    /// Wall time, only reported with `--timing` so that reports stay
    /// byte-identical across runs.
    #[serde(serialize_with = "millis")]
    pub millis: Option<u128>,
}

fn millis<S: serde::Serializer>(m: &Option<u128>, s: S) -> Result<S::Ok, S::Error> {
    match m {
        Some(ms) => s.serialize_str(&ms.to_string()),
        None => s.serialize_str("-"),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.rows.is_empty() {
            w.write_record(["claim", "params", "expected", "computed", "pass", "millis"])
                .expect("write to memory");
        }
        for row in &self.rows {
            w.serialize(row).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| claim | params | expected | computed | pass | millis |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let ms = r.millis.map_or("-".to_string(), |m| m.to_string());
            let pass = if r.pass { "yes" } else { "**no**" };
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                r.claim, r.params, r.expected, r.computed, pass, ms
            )
            .expect("write to string");
        }
        writeln!(
            out,
            "\n{} of {} instances pass.",
            self.rows.len() - self.failures(),
            self.rows.len()
        )
        .expect("write to string");
        out
    }
}
