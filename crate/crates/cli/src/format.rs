use serde::Serialize;

use hypersub::SpectrumMultiset;

/// `x` with 12 significant digits, trailing zeros dropped; exponent form
/// outside `[1e-5, 1e12)`.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        return format!("{}e{exp}", trim(mantissa));
    }
    let decimals = (11 - exp).max(0) as usize;
    trim(&format!("{x:.decimals$}")).to_string()
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `sig12` read back as a number, so JSON carries the same digits.
pub fn rounded(x: f64) -> f64 {
    sig12(x).parse().expect("formatted float parses")
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub value: f64,
    pub multiplicity: usize,
}

/// Grouped rows; values within the grouping tolerance of zero print as 0.
pub fn rows(spectrum: &SpectrumMultiset) -> Vec<Row> {
    spectrum
        .grouped()
        .into_iter()
        .map(|(v, multiplicity)| Row {
            value: if v.abs() <= spectrum.tolerance() { 0.0 } else { rounded(v) },
            multiplicity,
        })
        .collect()
}

pub fn text_table(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| sig12(r.value).len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:>width$}  multiplicity\n", "value");
    for r in rows {
        out.push_str(&format!("{:>width$}  {}\n", sig12(r.value), r.multiplicity));
    }
    out
}

pub fn csv_table(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["value", "multiplicity"]).expect("in-memory write");
    for r in rows {
        w.write_record([sig12(r.value), r.multiplicity.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn values_line(values: &[f64]) -> String {
    values.iter().map(|&v| sig12(v)).collect::<Vec<_>>().join(" ")
}
