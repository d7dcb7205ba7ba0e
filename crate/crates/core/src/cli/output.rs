use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::invariants::{InvariantQuery, Pipeline, PipelineResult};

/// What `gwgr invariant` prints, one per query.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub query: InvariantQuery,
    pub results: Vec<PipelineResult>,
    pub agree: bool,
    pub formal_value: bool,
}

impl OutputRecord {
    pub fn new(query: InvariantQuery, results: Vec<PipelineResult>) -> Self {
        let agree = results.windows(2).all(|w| w[0].value == w[1].value);
        let formal_value = query.is_formal();
        Self { query, results, agree, formal_value }
    }

    pub fn title(&self) -> String {
        let q = &self.query;
        let monomial: Vec<String> = q
            .s
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("X{}", i + 1) } else { format!("X{}^{e}", i + 1) })
            .collect();
        let monomial = if monomial.is_empty() { "1".to_string() } else { monomial.join(" ") };
        format!("<{monomial}> on G({},{}), genus {}, degree {}", q.r, q.k, q.g, q.d)
    }
}

pub fn residual_cell(r: &PipelineResult) -> String {
    if r.exact {
        "exact".into()
    } else {
        format!("{:.3e}", r.residual)
    }
}

pub fn footer(pipelines: &[Pipeline]) -> String {
    let mut out = String::new();
    for p in pipelines {
        let _ = writeln!(out, "  {:<10} {}", p.name(), p.describe());
    }
    out
}

pub fn render_text(rec: &OutputRecord, tol: f64, budget: u64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", rec.title());
    let width = rec.results.iter().map(|r| r.value.to_string().len()).max().unwrap_or(1);
    for r in &rec.results {
        let _ = writeln!(out, "  {:<10} {:>width$}  {}", r.pipeline.name(), r.value.to_string(), residual_cell(r));
    }
    let _ = writeln!(out, "agree: {}", rec.agree);
    let _ = writeln!(out, "formal value: {}", rec.formal_value);
    let _ = writeln!(out, "tolerance: {tol:e}, floating budget kd <= {budget}");
    let _ = writeln!(out);
    let used: Vec<Pipeline> = rec.results.iter().map(|r| r.pipeline).collect();
    out.push_str(&footer(&used));
    out
}

pub fn render_csv(rec: &OutputRecord) -> String {
    let mut out = String::from("pipeline,value,residual,exact\n");
    for r in &rec.results {
        let _ = writeln!(out, "{},{},{:e},{}", r.pipeline.name(), r.value, r.residual, r.exact);
    }
    out
}

/// One row of `gwgr table`: a value per pipeline, `None` where it was skipped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u32,
    pub m: u32,
    pub record: OutputRecord,
}

impl TableRow {
    pub fn cell(&self, p: Pipeline) -> String {
        self.record
            .results
            .iter()
            .find(|r| r.pipeline == p)
            .map(|r| r.value.to_string())
            .unwrap_or_default()
    }
}

pub const TABLE_PIPELINES: [Pipeline; 4] = [Pipeline::Vi, Pipeline::Oracle, Pipeline::Closed, Pipeline::Flip];

pub fn render_table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,m,vi,oracle,closed,flip,agree\n");
    for row in rows {
        let cells: Vec<String> = TABLE_PIPELINES.iter().map(|&p| row.cell(p)).collect();
        let _ = writeln!(out, "{},{},{},{}", row.n, row.m, cells.join(","), row.record.agree);
    }
    out
}

pub fn render_table_text(rows: &[TableRow], k: u32, d: u32) -> String {
    let mut header = vec!["n".to_string(), "m".to_string()];
    header.extend(TABLE_PIPELINES.iter().map(|p| p.name().to_string()));
    header.push("agree".into());
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let mut cells = vec![row.n.to_string(), row.m.to_string()];
            cells.extend(TABLE_PIPELINES.iter().map(|&p| {
                let c = row.cell(p);
                if c.is_empty() {
                    "-".into()
                } else {
                    c
                }
            }));
            cells.push(row.record.agree.to_string());
            cells
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| body.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    let _ = writeln!(out, "<X1^m X2^n> on G(2,{k}), genus 1, degree {d}, m = {} - 2n", k * d);
    let _ = writeln!(out, "{}", line(&header));
    for r in &body {
        let _ = writeln!(out, "{}", line(r));
    }
    let _ = writeln!(out);
    out.push_str(&footer(&TABLE_PIPELINES));
    out
}
