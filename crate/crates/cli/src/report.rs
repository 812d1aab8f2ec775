//! Results CSV and plot data.

use std::fmt::Write as _;

use crate::bench::{ConvergenceReport, Method, ReportRow};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 5] = ["method", "network", "samples", "run", "rmse"];

/// Rows under `method,network,samples,run,rmse`, then one
/// `# alpha,<method>,<value>` line per method (`undefined` if no fit).
pub fn results_csv(report: &ConvergenceReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in &report.rows {
        w.write_record([
            r.method.name(),
            &report.network,
            &r.samples.to_string(),
            &r.run.to_string(),
            &r.rmse.to_string(),
        ])
        .expect("in-memory write");
    }
    let mut out = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields");
    for s in &report.summary {
        match s.fit {
            Some(f) => writeln!(out, "# alpha,{},{}", s.method, f.alpha),
            None => writeln!(out, "# alpha,{},undefined", s.method),
        }
        .expect("string write");
    }
    out
}

/// Parsed results file: rows with the network name, and the alpha lines.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedResults {
    pub network: String,
    pub rows: Vec<ReportRow>,
    pub alphas: Vec<(Method, Option<f64>)>,
}

pub fn parse_results_csv(text: &str) -> Result<ParsedResults> {
    let bad = |line: u64, m: String| Error::Format { what: "results csv", at: format!("line {line}"), message: m };
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| bad(1, e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(bad(1, format!("unexpected header {header:?}")));
    }
    let mut network = String::new();
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| bad(e.position().map_or(0, |p| p.line()), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != 5 {
            return Err(bad(line, format!("{} fields", rec.len())));
        }
        let field = |i: usize| rec[i].to_string();
        if rows.is_empty() {
            network = field(1);
        } else if rec[1] != network {
            return Err(bad(line, "mixed network names".into()));
        }
        rows.push(ReportRow {
            method: rec[0].parse()?,
            samples: rec[2].parse().map_err(|e| bad(line, format!("samples: {e}")))?,
            run: rec[3].parse().map_err(|e| bad(line, format!("run: {e}")))?,
            rmse: rec[4].parse().map_err(|e| bad(line, format!("rmse: {e}")))?,
        });
    }
    let mut alphas = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(rest) = line.strip_prefix("# alpha,") {
            let (m, v) = rest.split_once(',').ok_or_else(|| bad(i as u64 + 1, "malformed alpha line".into()))?;
            let value = match v {
                "undefined" => None,
                v => Some(v.parse().map_err(|e| bad(i as u64 + 1, format!("alpha: {e}")))?),
            };
            alphas.push((m.parse()?, value));
        }
    }
    Ok(ParsedResults { network, rows, alphas })
}

/// `log2(N/min)` against `log10 rmse`, one column per method (MC uses run means).
pub fn plot_data(report: &ConvergenceReport) -> String {
    let mut out = String::from("log2_n_over_min");
    for s in &report.summary {
        write!(out, ",{}", s.method).expect("string write");
    }
    out.push('\n');
    let sizes: Vec<u64> = report.summary.first().map(|s| s.points.iter().map(|p| p.0).collect()).unwrap_or_default();
    for (k, &n) in sizes.iter().enumerate() {
        let x = (n as f64 / report.min_samples as f64).log2();
        write!(out, "{x}").expect("string write");
        for s in &report.summary {
            write!(out, ",{}", s.points[k].1.log10()).expect("string write");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::{run_experiment, Experiment};
    use crate::formats::parse_network;
    use qmcbn_core::bn::Evidence;

    fn small_report() -> ConvergenceReport {
        let mut e = Experiment::new(parse_network(crate::bundled::COMA).unwrap(), Evidence::new());
        e.methods = vec![Method::Sobol, Method::Mc];
        e.min_samples = 8;
        e.doublings = 1;
        e.mc_runs = 2;
        run_experiment(&e).unwrap()
    }

    #[test]
    fn csv_layout() {
        let r = small_report();
        let text = results_csv(&r);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "method,network,samples,run,rmse");
        assert_eq!(lines.len(), 1 + 2 * 2 + 2 + 2);
        assert!(lines[1].starts_with("mc,coma,8,0,"));
        assert!(lines[7].starts_with("# alpha,mc,"));
        assert!(lines[8].starts_with("# alpha,sobol,"));
    }

    #[test]
    fn csv_round_trip() {
        let r = small_report();
        let parsed = parse_results_csv(&results_csv(&r)).unwrap();
        assert_eq!(parsed.rows, r.rows);
        assert_eq!(parsed.network, "coma");
        assert_eq!(parsed.alphas, r.summary.iter().map(|s| (s.method, s.fit.map(|f| f.alpha))).collect::<Vec<_>>());
    }

    #[test]
    fn csv_quotes_awkward_names() {
        let mut r = small_report();
        r.network = "a, \"b\"".into();
        let parsed = parse_results_csv(&results_csv(&r)).unwrap();
        assert_eq!(parsed.network, r.network);
        assert_eq!(parsed.rows, r.rows);
    }

    #[test]
    fn plot_layout() {
        let r = small_report();
        let text = plot_data(&r);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "log2_n_over_min,mc,sobol");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("0,"));
        assert!(lines[2].starts_with("1,"));
        let sobol: f64 = lines[2].split(',').nth(2).unwrap().parse().unwrap();
        assert_eq!(sobol, r.summary[1].points[1].1.log10());
    }
}
