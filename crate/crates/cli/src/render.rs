//! Output formats. `table` is for people, `csv` has one header row, and
//! `stext` writes one JSON object per line.

use std::fmt::Write;
use std::ops::RangeInclusive;

use clap::ValueEnum;
use gsslab_core::analysis::{Balance, SequenceReport};
use gsslab_core::bits::to_ascii;
use gsslab_core::gf2x::PrimitivePolynomial;
use gsslab_core::gss::{DecimationStep, GssSequence};
use gsslab_core::theorems::VerdictReport;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Stext,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    let cells: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    cells.join(",") + "\n"
}

fn json_lines(values: impl IntoIterator<Item = Value>) -> String {
    values.into_iter().map(|v| v.to_string() + "\n").collect()
}

pub fn members(format: Format, poly: &PrimitivePolynomial, members: &[GssSequence]) -> String {
    match format {
        Format::Table if members.len() == 1 => to_ascii(&members[0].bits) + "\n",
        Format::Table => {
            let mut out = format!("poly={} L={}\n", poly.to_hex(), poly.degree());
            for m in members {
                let _ = writeln!(out, "{}\t{}", m.index, to_ascii(&m.bits));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("index,bits\n");
            for m in members {
                out += &csv_row(&[m.index.to_string(), to_ascii(&m.bits)]);
            }
            out
        }
        Format::Stext => json_lines(members.iter().map(|m| {
            json!({
                "poly": poly.to_string(),
                "index": m.index.to_string(),
                "bits": to_ascii(&m.bits),
            })
        })),
    }
}

fn parity(b: Option<Balance>) -> String {
    b.map_or_else(|| "-".to_string(), |b| b.to_string())
}

fn runs(r: &SequenceReport) -> String {
    r.runs.as_ref().map_or_else(|| "none".to_string(), |h| h.to_string())
}

fn index(r: &SequenceReport) -> String {
    r.index.map_or_else(|| "-".to_string(), |i| i.to_string())
}

pub fn analyses(format: Format, poly: &PrimitivePolynomial, reports: &[SequenceReport]) -> String {
    match format {
        Format::Table => {
            let mut out = format!(
                "{:<6} {:>6} {:>6} {:>6} {:>6} {:>7} {:>7}  runs (len:blocks/gaps)\n",
                "index", "period", "lc", "ones", "zeros", "even", "odd"
            );
            for r in reports {
                let _ = writeln!(
                    out,
                    "{:<6} {:>6} {:>6} {:>6} {:>6} {:>7} {:>7}  {}",
                    index(r),
                    r.least_period,
                    r.linear_complexity,
                    r.balance.ones,
                    r.balance.zeros,
                    parity(r.parity_balance.map(|p| p.0)),
                    parity(r.parity_balance.map(|p| p.1)),
                    runs(r)
                );
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("index,period,lc,ones,zeros,runs,even_balance,odd_balance\n");
            for r in reports {
                out += &csv_row(&[
                    index(r),
                    r.least_period.to_string(),
                    r.linear_complexity.to_string(),
                    r.balance.ones.to_string(),
                    r.balance.zeros.to_string(),
                    runs(r),
                    parity(r.parity_balance.map(|p| p.0)),
                    parity(r.parity_balance.map(|p| p.1)),
                ]);
            }
            out
        }
        Format::Stext => json_lines(reports.iter().map(|r| {
            json!({
                "poly": poly.to_string(),
                "index": index(r),
                "length": r.length,
                "period": r.least_period,
                "lc": r.linear_complexity,
                "ones": r.balance.ones,
                "zeros": r.balance.zeros,
                "runs": runs(r),
                "even_balance": parity(r.parity_balance.map(|p| p.0)),
                "odd_balance": parity(r.parity_balance.map(|p| p.1)),
            })
        })),
    }
}

fn verdict_json(r: &VerdictReport) -> Value {
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "index": w.index.map(|i| i.to_string()),
            "position": w.position,
            "details": w.details,
        })
    });
    json!({
        "poly": r.poly.to_string(),
        "degree": r.degree(),
        "name": r.name,
        "result": r.result,
        "status": r.status.to_string(),
        "witness": witness,
        "notes": r.notes,
    })
}

pub fn verdicts(format: Format, reports: &[VerdictReport]) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for r in reports {
                out += &r.scorecard_line();
                out.push('\n');
            }
            let confirmed = reports.iter().filter(|r| r.is_confirmed()).count();
            let _ = writeln!(out, "confirmed {confirmed}/{}", reports.len());
            out
        }
        Format::Csv => {
            let mut out = String::from("poly,name,status,index,position,details,notes\n");
            for r in reports {
                let w = r.witness.as_ref();
                out += &csv_row(&[
                    r.poly.to_hex(),
                    r.name.to_string(),
                    r.status.to_string(),
                    w.and_then(|w| w.index).map(|i| i.to_string()).unwrap_or_default(),
                    w.and_then(|w| w.position).map(|p| p.to_string()).unwrap_or_default(),
                    w.map(|w| w.details.clone()).unwrap_or_default(),
                    r.notes.join("; "),
                ]);
            }
            out
        }
        Format::Stext => json_lines(reports.iter().map(verdict_json)),
    }
}

fn failed_names(reports: &[VerdictReport]) -> Vec<&'static str> {
    reports.iter().filter(|r| !r.is_confirmed()).map(|r| r.name).collect()
}

pub fn scan(
    format: Format,
    degrees: &RangeInclusive<u32>,
    rows: &[(PrimitivePolynomial, Vec<VerdictReport>)],
) -> String {
    let clean = rows.iter().filter(|(_, rs)| failed_names(rs).is_empty()).count();
    match format {
        Format::Table => {
            let mut out = String::new();
            for (poly, reports) in rows {
                let failed = failed_names(reports);
                let _ = write!(
                    out,
                    "L={} {} {} confirmed {}/{}",
                    poly.degree(),
                    poly.to_hex(),
                    poly,
                    reports.len() - failed.len(),
                    reports.len()
                );
                if !failed.is_empty() {
                    let _ = write!(out, " counterexamples: {}", failed.join(","));
                }
                out.push('\n');
            }
            for l in degrees.clone() {
                let at: Vec<_> = rows.iter().filter(|(p, _)| p.degree() == l).collect();
                let ok = at.iter().filter(|(_, rs)| failed_names(rs).is_empty()).count();
                let _ = writeln!(out, "degree {l}: {} primitive polynomials, {ok} fully confirmed", at.len());
            }
            let _ = writeln!(
                out,
                "total: {} primitive polynomials, {clean} fully confirmed, {} with counterexamples",
                rows.len(),
                rows.len() - clean
            );
            out
        }
        Format::Csv => {
            let mut out = String::from("degree,poly,hex,confirmed,total,counterexamples\n");
            for (poly, reports) in rows {
                let failed = failed_names(reports);
                out += &csv_row(&[
                    poly.degree().to_string(),
                    poly.to_string(),
                    poly.to_hex(),
                    (reports.len() - failed.len()).to_string(),
                    reports.len().to_string(),
                    failed.join(";"),
                ]);
            }
            out
        }
        Format::Stext => {
            let per_poly = rows.iter().map(|(poly, reports)| {
                json!({
                    "degree": poly.degree(),
                    "poly": poly.to_string(),
                    "hex": poly.to_hex(),
                    "confirmed": reports.len() - failed_names(reports).len(),
                    "total": reports.len(),
                    "counterexamples": failed_names(reports),
                })
            });
            let summary = json!({
                "degrees": format!("{}..{}", degrees.start(), degrees.end()),
                "polynomials": rows.len(),
                "fully_confirmed": clean,
            });
            json_lines(per_poly.chain(std::iter::once(summary)))
        }
    }
}

/// The decimation, one row per `n`: selector, source index of `v_n`, its
/// value, and the output slot when kept.
pub fn trace(steps: &[DecimationStep]) -> String {
    let mut out = String::from("n\ta_n\tv_n=a_k\tv_n\tout\n");
    for s in steps {
        let kept = s.output.map_or_else(|| "-".to_string(), |o| format!("b_{o}"));
        let _ = writeln!(
            out,
            "{}\t{}\ta_{}\t{}\t{}",
            s.n,
            u8::from(s.selector),
            s.source,
            u8::from(s.value),
            kept
        );
    }
    out
}
