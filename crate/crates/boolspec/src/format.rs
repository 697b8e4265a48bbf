//! Text formats: truth tables, spectrum CSV and the canalizing report.
//!
//! Truth table files are two lines:
//!
//! ```text
//! n=2
//! 0001
//! ```
//!
//! Character `k` of the second line is the output at assignment `k`, where
//! bit `j` of `k` is variable `j+1` (`0` is -1, `1` is +1). `0` and `1` in the
//! table likewise stand for -1 and +1.

use std::fmt::Write as _;
use std::io::{self, Write};

use boolspec_core::{
    CanalizingReport, FourierSpectrum, Sign, SpectrumKind, SubsetMask, TruthTable,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Core(#[from] boolspec_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn parse_truth_table(text: &str) -> Result<TruthTable, FormatError> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty input, expected `n=<arity>`"))?;
    let digits = header
        .strip_prefix("n=")
        .ok_or_else(|| parse_error(1, 1, "expected `n=<arity>`"))?;
    let arity: usize = digits
        .parse()
        .map_err(|_| parse_error(1, 3, format!("invalid arity `{digits}`")))?;
    if arity > boolspec_core::MAX_ARITY {
        return Err(parse_error(
            1,
            3,
            format!(
                "arity {arity} above the maximum of {}",
                boolspec_core::MAX_ARITY
            ),
        ));
    }
    let body = lines
        .next()
        .ok_or_else(|| parse_error(2, 1, "missing output line"))?;
    let mut outputs = Vec::with_capacity(1 << arity);
    for (col, ch) in body.chars().enumerate() {
        match ch {
            '0' => outputs.push(Sign::Minus),
            '1' => outputs.push(Sign::Plus),
            other => {
                return Err(parse_error(
                    2,
                    col + 1,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
    }
    if outputs.len() != 1 << arity {
        return Err(parse_error(
            2,
            outputs.len() + 1,
            format!(
                "expected {} outputs, found {}",
                1usize << arity,
                outputs.len()
            ),
        ));
    }
    if let Some((i, _)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(parse_error(
            i + 3,
            1,
            "unexpected content after the output line",
        ));
    }
    Ok(TruthTable::from_signs(arity, &outputs)?)
}

pub fn write_truth_table(tt: &TruthTable, out: &mut (impl Write + ?Sized)) -> io::Result<()> {
    let mut line = String::with_capacity(tt.len() + 1);
    line.extend(tt.iter().map(|s| if s.is_plus() { '1' } else { '0' }));
    line.push('\n');
    write!(out, "n={}\n{line}", tt.arity())
}

/// `mask,coeff` rows in ascending mask order.
pub fn write_spectrum_csv(s: &FourierSpectrum, out: &mut (impl Write + ?Sized)) -> io::Result<()> {
    let mut buf = String::from("mask,coeff\n");
    for u in 0..s.len() as u32 {
        let mask = SubsetMask(u);
        match s.numerator(mask) {
            Some(p) => writeln!(buf, "{u},{p}/{}", s.denominator()),
            None => writeln!(buf, "{u},{}", fmt17(s.coefficient(mask))),
        }
        .expect("writing to a String");
    }
    out.write_all(buf.as_bytes())
}

/// Reads back what [`write_spectrum_csv`] writes.
pub fn parse_spectrum_csv(text: &str) -> Result<FourierSpectrum, FormatError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "mask,coeff")) => {}
        _ => return Err(parse_error(1, 1, "expected header `mask,coeff`")),
    }
    let mut exact = Vec::new();
    let mut float = Vec::new();
    let mut denominator = None;
    for (i, line) in lines.filter(|(_, l)| !l.is_empty()) {
        let row = i + 1;
        let (mask, coeff) = line
            .split_once(',')
            .ok_or_else(|| parse_error(row, 1, "expected `mask,coeff`"))?;
        let expected = exact.len() + float.len();
        if mask.parse::<usize>().ok() != Some(expected) {
            return Err(parse_error(row, 1, format!("expected mask {expected}")));
        }
        let col = mask.len() + 2;
        match coeff.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p
                    .parse()
                    .map_err(|_| parse_error(row, col, "bad numerator"))?;
                let q: i64 = q
                    .parse()
                    .map_err(|_| parse_error(row, col, "bad denominator"))?;
                if *denominator.get_or_insert(q) != q || !float.is_empty() {
                    return Err(parse_error(row, col, "mixed coefficient formats"));
                }
                exact.push(p);
            }
            None => {
                if !exact.is_empty() {
                    return Err(parse_error(row, col, "mixed coefficient formats"));
                }
                float.push(
                    coeff
                        .parse()
                        .map_err(|_| parse_error(row, col, "bad coefficient"))?,
                );
            }
        }
    }
    let len = exact.len() + float.len();
    if !len.is_power_of_two() {
        return Err(parse_error(
            len + 2,
            1,
            format!("{len} rows is not a power of two"),
        ));
    }
    let arity = len.trailing_zeros() as usize;
    if let Some(q) = denominator {
        if q != 1 << arity {
            return Err(parse_error(
                2,
                1,
                format!("denominator {q} is not 2^{arity}"),
            ));
        }
        return Ok(FourierSpectrum::exact(arity, exact)?);
    }
    Ok(FourierSpectrum::float(arity, float)?)
}

/// One canalizing record as written by the CLI (variables 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanalizingRecord {
    pub variable: usize,
    pub canalizing: bool,
    pub witnesses: Vec<[i32; 2]>,
}

pub fn canalizing_records(report: &CanalizingReport) -> Vec<CanalizingRecord> {
    report
        .variables
        .iter()
        .map(|v| CanalizingRecord {
            variable: v.variable + 1,
            canalizing: v.is_canalizing(),
            witnesses: v
                .witnesses
                .iter()
                .map(|w| [w.restrictive.value(), w.canalized.value()])
                .collect(),
        })
        .collect()
}

/// One JSON object per line.
pub fn write_canalizing(
    report: &CanalizingReport,
    out: &mut (impl Write + ?Sized),
) -> io::Result<()> {
    for record in canalizing_records(report) {
        serde_json::to_writer(&mut *out, &record)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn kind_name(kind: SpectrumKind) -> &'static str {
    match kind {
        SpectrumKind::Exact => "exact",
        SpectrumKind::Float => "float",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use boolspec_core::canalize::detect;
    use boolspec_core::fourier::transform;
    use boolspec_core::ProductDistribution;

    fn parse_err(text: &str) -> (usize, usize) {
        match parse_truth_table(text) {
            Err(FormatError::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_and() {
        let tt = parse_truth_table("n=2\n0001\n").unwrap();
        assert_eq!(tt, TruthTable::from_bits(2, 0b1000).unwrap());
        assert_eq!(parse_truth_table("n=2\r\n0001").unwrap(), tt);
        let mut buf = Vec::new();
        write_truth_table(&tt, &mut buf).unwrap();
        assert_eq!(buf, b"n=2\n0001\n");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(parse_err(""), (1, 1));
        assert_eq!(parse_err("m=2\n0001"), (1, 1));
        assert_eq!(parse_err("n=x\n0001"), (1, 3));
        assert_eq!(parse_err("n=2"), (2, 1));
        assert_eq!(parse_err("n=2\n00a1"), (2, 3));
        assert_eq!(parse_err("n=2\n000"), (2, 4));
        assert_eq!(parse_err("n=2\n00011"), (2, 6));
        assert_eq!(parse_err("n=2\n0001\n\nextra"), (4, 1));
        assert_eq!(parse_err("n=25\n0"), (1, 3));
    }

    #[test]
    fn spectrum_csv_layouts() {
        let and = TruthTable::from_bits(2, 0b1000).unwrap();
        let exact = transform(&and, &ProductDistribution::uniform(2)).unwrap();
        let mut buf = Vec::new();
        write_spectrum_csv(&exact, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf.clone()).unwrap(),
            "mask,coeff\n0,-2/4\n1,2/4\n2,2/4\n3,2/4\n"
        );
        assert_eq!(
            parse_spectrum_csv(std::str::from_utf8(&buf).unwrap()).unwrap(),
            exact
        );

        let d = ProductDistribution::new(vec![-0.4, 0.2]).unwrap();
        let float = transform(&and, &d).unwrap();
        let mut buf = Vec::new();
        write_spectrum_csv(&float, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().starts_with("0,-"));
        assert_eq!(parse_spectrum_csv(&text).unwrap(), float);
    }

    #[test]
    fn canalizing_json_lines() {
        let and = TruthTable::from_bits(2, 0b1000).unwrap();
        let mut buf = Vec::new();
        write_canalizing(&detect(&and), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"variable\":1,\"canalizing\":true,\"witnesses\":[[-1,-1]]}\n\
             {\"variable\":2,\"canalizing\":true,\"witnesses\":[[-1,-1]]}\n"
        );
    }

    #[test]
    fn fmt17_round_trips() {
        for x in [0.1, -1.0 / 3.0, 1e-300, 0.311_278_124_459_132_83] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }

    proptest::proptest! {
        #[test]
        fn truth_table_files_round_trip(n in 0usize..=8, seed in proptest::prelude::any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let tt = TruthTable::from_fn(n, |_| Sign::from_bit(rng.gen())).unwrap();
            let mut buf = Vec::new();
            write_truth_table(&tt, &mut buf).unwrap();
            proptest::prop_assert_eq!(parse_truth_table(std::str::from_utf8(&buf).unwrap()).unwrap(), tt);
        }
    }
}
