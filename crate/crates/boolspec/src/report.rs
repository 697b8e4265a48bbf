//! Human-readable and CSV renderings of verification reports.

use std::io::{self, Write};

use boolspec_core::canalize::Witness;
use boolspec_core::verify::{LemmaReport, Proposition, PropositionReport};

use crate::format::fmt17;

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn witness(w: Option<Witness>) -> String {
    match w {
        Some(w) => format!("({:+},{:+})", w.restrictive.value(), w.canalized.value()),
        None => "tie".into(),
    }
}

pub fn write_proposition_text(
    r: &PropositionReport,
    out: &mut (impl Write + ?Sized),
) -> io::Result<()> {
    let (name, inputs) = match r.proposition {
        Proposition::Uniform => ("proposition 1", "uniform inputs".to_string()),
        Proposition::Product => ("proposition 2", format!("mu={:?}", r.means)),
    };
    writeln!(
        out,
        "{name}: n={} variable {} ({inputs}), {} functions, {} classes: {}",
        r.arity,
        r.variable + 1,
        r.functions,
        r.classes.len(),
        verdict(r.pass())
    )?;
    writeln!(
        out,
        "{:>10} {:>6} {:>12} {:>12} {:>8} {:>10} {:>8}",
        "f0", "size", "max_mi", "boundary_mi", "argmax", "canalizing", "optimal"
    )?;
    for c in &r.classes {
        writeln!(
            out,
            "{:>10.6} {:>6} {:>12.9} {:>12.9} {:>8} {:>10} {:>8}{}",
            c.f0,
            c.size,
            c.max_mi,
            c.boundary_mi,
            c.argmax.len(),
            if c.all_argmax_canalizing() {
                "yes"
            } else {
                "no"
            },
            witness(c.optimal),
            if c.pass { "" } else { "  FAIL" }
        )?;
    }
    Ok(())
}

pub fn write_proposition_csv(
    r: &PropositionReport,
    out: &mut (impl Write + ?Sized),
) -> io::Result<()> {
    writeln!(
        out,
        "class_f0,class_size,max_mi,boundary_mi,all_argmax_canalizing"
    )?;
    for c in &r.classes {
        writeln!(
            out,
            "{},{},{},{},{}",
            fmt17(c.f0),
            c.size,
            fmt17(c.max_mi),
            fmt17(c.boundary_mi),
            c.all_argmax_canalizing()
        )?;
    }
    Ok(())
}

pub fn write_lemma_text(r: &LemmaReport, out: &mut (impl Write + ?Sized)) -> io::Result<()> {
    writeln!(
        out,
        "{}: {} mu values x {} points, {} checks, {} counterexamples: {}",
        r.lemma,
        r.mu_grid.len(),
        r.points,
        r.checked,
        r.counterexamples.len(),
        verdict(r.pass())
    )?;
    for c in &r.counterexamples {
        writeln!(out, "  {c}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use boolspec_core::verify::{default_mu_grid, verify_lemma1, verify_prop1};

    #[test]
    fn csv_rows_per_class() {
        let r = verify_prop1(2, 0).unwrap();
        let mut buf = Vec::new();
        write_proposition_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), r.classes.len() + 1);
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("-1.0000000000000000e0,1,"));
    }

    #[test]
    fn text_headlines() {
        let mut buf = Vec::new();
        write_proposition_text(&verify_prop1(2, 1).unwrap(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(
            "proposition 1: n=2 variable 2 (uniform inputs), 16 functions, 5 classes: PASS"
        ));

        let mut buf = Vec::new();
        write_lemma_text(&verify_lemma1(&default_mu_grid(), 5), &mut buf).unwrap();
        assert!(String::from_utf8(buf)
            .unwrap()
            .ends_with("0 counterexamples: PASS\n"));
    }
}
