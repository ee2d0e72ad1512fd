//! Text for each subcommand in each output format.

use std::fmt::Write;

use irregularity::bounds::{BoundReport, BoundValue, LambdaSource};
use irregularity::edgelist::write_edge_list;
use irregularity::study::{summary_json, summary_line, write_rows_csv, StudyOutcome, TreeQuery, TreeRow};
use irregularity::Graph;
use serde_json::json;

use crate::Format;

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

fn rows_csv(rows: &[TreeRow]) -> String {
    let mut buf = Vec::new();
    write_rows_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

pub fn info(g: &Graph, format: Format) -> String {
    let p = g.degree_profile();
    let irr = g.irregularity();
    match format {
        Format::Table => format!(
            "n             {}\nm             {}\nzagreb        {}\npendants      {}\nmax_degree    {}\nirregularity  {}\n",
            g.n(),
            p.m,
            p.zagreb,
            p.pendants,
            p.max_degree,
            irr
        ),
        Format::Json => pretty(&json!({
            "n": g.n(),
            "m": p.m,
            "zagreb": p.zagreb,
            "pendants": p.pendants,
            "max_degree": p.max_degree,
            "irregularity": irr,
        })),
        Format::Csv => format!(
            "n,m,zagreb,pendants,max_degree,irregularity\n{},{},{},{},{},{}\n",
            g.n(),
            p.m,
            p.zagreb,
            p.pendants,
            p.max_degree,
            irr
        ),
    }
}

pub fn bounds(r: &BoundReport, format: Format) -> String {
    let named: [(&str, BoundValue); 4] = [
        ("albertson", r.albertson),
        ("acd", r.acd),
        ("zhou_luo", r.zhou_luo),
        ("laplacian_new", r.laplacian_new),
    ];
    let source = match r.lambda_source {
        LambdaSource::Computed => "computed",
        LambdaSource::MerrisCap => "merris-cap",
    };
    match format {
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "n={} m={} I={}", r.n, r.m, r.irregularity);
            let _ = writeln!(s, "lambda_max {:.6} ({source})", r.lambda_max_used);
            let _ = writeln!(s, "{:<14} {:>20} {:>12}", "bound", "raw", "truncated");
            for (name, b) in named {
                let _ = writeln!(s, "{name:<14} {:>20.6} {:>12}", b.raw, b.truncated);
            }
            if let Some(t) = r.tree_pendant {
                let tight = if r.tree_pendant_tight { " (tight)" } else { "" };
                let _ = writeln!(s, "{:<14} {:>20} {:>12}{tight}", "tree_pendant", "", t);
            }
            if r.empty_graph {
                s.push_str("note: graph has no edges, all bounds are trivially satisfied\n");
            }
            s
        }
        Format::Json => pretty(&serde_json::to_value(r).expect("report serializes")),
        Format::Csv => {
            let mut s = String::from("bound,raw,truncated\n");
            for (name, b) in named {
                let _ = writeln!(s, "{name},{},{}", b.raw, b.truncated);
            }
            if let Some(t) = r.tree_pendant {
                let _ = writeln!(s, "tree_pendant,{t},{t}");
            }
            s
        }
    }
}

pub fn graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Table => write_edge_list(g),
        Format::Json => pretty(&json!({ "n": g.n(), "m": g.m(), "edges": g.edges() })),
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for &(u, v) in g.edges() {
                let _ = writeln!(s, "{u},{v}");
            }
            s
        }
    }
}

fn rows_table(rows: &[TreeRow]) -> String {
    let mut s = format!(
        "{:<32} {:>3} {:>4} {:>14} {:>14} {:>6} {:>8} {:>6}\n",
        "canonical_id", "p", "I", "zl_raw", "new_raw", "trunc", "pendant", "winner"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:<32} {:>3} {:>4} {:>14.6} {:>14.6} {:>6} {:>8} {:>6}",
            r.canonical_id,
            r.p,
            r.irregularity,
            r.zhou_luo,
            r.laplacian_new,
            r.laplacian_trunc,
            r.pendant_bound,
            r.winner.as_str()
        );
    }
    s
}

pub fn study(outcome: &StudyOutcome, format: Format) -> String {
    match format {
        Format::Table => {
            let mut s = rows_table(&outcome.rows);
            s.push_str(&summary_line(&outcome.counts));
            s.push('\n');
            s
        }
        Format::Json => pretty(&summary_json(outcome)),
        Format::Csv => rows_csv(&outcome.rows),
    }
}

pub fn candidates(query: &TreeQuery, rows: &[TreeRow], format: Format) -> String {
    match format {
        Format::Table => {
            let mut s = rows_table(rows);
            let _ = writeln!(
                s,
                "{} tree(s) on {} vertices with p={}, I={}, bound in [{}, {}]",
                rows.len(),
                query.n,
                query.pendants,
                query.irregularity,
                query.bound_low,
                query.bound_high
            );
            s
        }
        Format::Json => pretty(&json!({ "query": query, "matches": rows })),
        Format::Csv => rows_csv(rows),
    }
}
