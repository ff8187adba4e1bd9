//! Byte-stable JSON-lines and CSV rendering.
//!
//! Floats use 17 significant digits in scientific notation, which round-trips
//! every double; non-finite values become `null` (JSON) or an empty cell.

use std::io::Write;

use lorentz_core::matelem::ComplexMatrix;
use lorentz_core::verify::ResidualReport;
use lorentz_core::{Complex64, HalfInt};

use crate::request::{Params, Value};

pub fn float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

fn json_float(x: f64) -> String {
    if x.is_finite() {
        float(x)
    } else {
        "null".to_string()
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization cannot fail")
}

fn json_value(v: Value) -> String {
    match v {
        Value::Half(h) => json_str(&h.to_string()),
        Value::Real(x) => json_float(x),
        Value::Flag(b) => b.to_string(),
    }
}

fn csv_value(v: Value) -> String {
    match v {
        Value::Half(h) => h.to_string(),
        Value::Real(x) => float(x),
        Value::Flag(b) => b.to_string(),
    }
}

fn json_object<'a>(items: impl IntoIterator<Item = (&'a str, String)>) -> String {
    let body: Vec<String> = items.into_iter().map(|(k, v)| format!("{}:{v}", json_str(k))).collect();
    format!("{{{}}}", body.join(","))
}

fn angles_json(p: &Params) -> String {
    json_object(p.angle_entries().into_iter().map(|(k, x)| (k, json_float(x))))
}

pub type Outcome = Result<Complex64, String>;

pub fn eval_json(p: &Params, outcome: &Outcome) -> String {
    let indices = json_object(p.index_entries().into_iter().map(|(k, v)| (k, json_value(v))));
    let mut fields = vec![("family", json_str(p.family.name())), ("indices", indices), ("angles", angles_json(p))];
    match outcome {
        Ok(z) => {
            fields.push(("re", json_float(z.re)));
            fields.push(("im", json_float(z.im)));
        }
        Err(e) => {
            fields.push(("re", "null".into()));
            fields.push(("im", "null".into()));
            fields.push(("error", json_str(e)));
        }
    }
    json_object(fields)
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

fn csv_err(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e)
}

pub fn write_eval<W: Write>(mut out: W, points: &[Params], outcomes: &[Outcome], csv: bool) -> std::io::Result<()> {
    if !csv {
        for (p, o) in points.iter().zip(outcomes) {
            writeln!(out, "{}", eval_json(p, o))?;
        }
        return Ok(());
    }
    let mut w = csv_writer(out);
    if let Some(first) = points.first() {
        let mut header = vec!["family".to_string()];
        header.extend(first.index_entries().iter().map(|(k, _)| k.to_string()));
        header.extend(first.angle_entries().iter().map(|(k, _)| k.to_string()));
        header.extend(["re", "im", "error"].map(String::from));
        w.write_record(&header).map_err(csv_err)?;
    }
    for (p, o) in points.iter().zip(outcomes) {
        let mut row = vec![p.family.name().to_string()];
        row.extend(p.index_entries().into_iter().map(|(_, v)| csv_value(v)));
        row.extend(p.angle_entries().into_iter().map(|(_, x)| float(x)));
        match o {
            Ok(z) => row.extend([float(z.re), float(z.im), String::new()]),
            Err(e) => row.extend([String::new(), String::new(), e.clone()]),
        }
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush()
}

pub fn write_matrix<W: Write>(
    mut out: W,
    l: HalfInt,
    p: &Params,
    mat: &ComplexMatrix,
    det: Option<Complex64>,
    csv: bool,
) -> std::io::Result<()> {
    let labels = mat.labels();
    let n = mat.dim();
    if csv {
        let mut w = csv_writer(out);
        w.write_record(["l", "m", "n", "re", "im"]).map_err(csv_err)?;
        for r in 0..n {
            for c in 0..n {
                let z = mat.get(r, c);
                w.write_record([l.to_string(), labels[r].to_string(), labels[c].to_string(), float(z.re), float(z.im)])
                    .map_err(csv_err)?;
            }
        }
        if let Some(d) = det {
            w.write_record([l.to_string(), "det".into(), "det".into(), float(d.re), float(d.im)]).map_err(csv_err)?;
        }
        return w.flush();
    }
    let labels_json: Vec<String> = labels.iter().map(|h| json_str(&h.to_string())).collect();
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let z = mat.get(r, c);
            entries.push(json_object([
                ("m", json_str(&labels[r].to_string())),
                ("n", json_str(&labels[c].to_string())),
                ("re", json_float(z.re)),
                ("im", json_float(z.im)),
            ]));
        }
    }
    let mut fields = vec![
        ("l", json_str(&l.to_string())),
        ("angles", angles_json(p)),
        ("labels", format!("[{}]", labels_json.join(","))),
        ("entries", format!("[{}]", entries.join(","))),
    ];
    if let Some(d) = det {
        fields.push(("det", json_object([("re", json_float(d.re)), ("im", json_float(d.im))])));
    }
    writeln!(out, "{}", json_object(fields))
}

pub fn write_reports<W: Write>(mut out: W, reports: &[ResidualReport], csv: bool) -> std::io::Result<()> {
    if csv {
        let mut w = csv_writer(out);
        w.write_record(["check", "max_abs_residual", "grid_points", "tolerance", "pass"]).map_err(csv_err)?;
        for r in reports {
            w.write_record([
                r.check_name.clone(),
                float(r.max_abs_residual),
                r.grid_points.to_string(),
                float(r.tolerance),
                r.pass.to_string(),
            ])
            .map_err(csv_err)?;
        }
        return w.flush();
    }
    for r in reports {
        let line = json_object([
            ("check", json_str(&r.check_name)),
            ("max_abs_residual", json_float(r.max_abs_residual)),
            ("grid_points", r.grid_points.to_string()),
            ("tolerance", json_float(r.tolerance)),
            ("pass", r.pass.to_string()),
        ]);
        writeln!(out, "{line}")?;
    }
    Ok(())
}
