//! MI over the feasible `(f0, f1)` region of one variable.

use std::io::{self, Write};

use boolspec_core::canalize::Witness;
use boolspec_core::infomeasure::mi_spectral;
use boolspec_core::{marginal, standardized, Error, Result, Sign};

use crate::format::fmt17;

/// `|f0 + f1 phi(a)|` within this of 1 puts a point on the boundary.
pub const BOUNDARY_TOLERANCE: f64 = 1e-9;

pub const MAX_QUANTIZE: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceRow {
    pub f0: f64,
    pub f1: f64,
    pub mi: f64,
    pub on_boundary: bool,
    /// A canalizing pair whose boundary the point lies on.
    pub witness: Option<Witness>,
}

/// Closed range of `f1` keeping both conditional means in `[-1, 1]`.
pub fn f1_bounds(f0: f64, mu: f64) -> (f64, f64) {
    let plus = standardized(mu, Sign::Plus);
    let minus = standardized(mu, Sign::Minus);
    let lo = ((-1.0 - f0) / plus).max((1.0 - f0) / minus);
    let hi = ((1.0 - f0) / plus).min((-1.0 - f0) / minus);
    (lo, hi)
}

fn boundary_witness(f0: f64, f1: f64, mu: f64) -> Option<Witness> {
    Sign::ALL.into_iter().find_map(|a| {
        let v = f0 + f1 * standardized(mu, a);
        Sign::ALL
            .into_iter()
            .find(|b| (v - b.as_f64()).abs() <= BOUNDARY_TOLERANCE)
            .map(|b| Witness::new(a, b))
    })
}

fn row(f0: f64, f1: f64, mu: f64) -> Result<SurfaceRow> {
    let witness = boundary_witness(f0, f1, mu);
    Ok(SurfaceRow {
        f0,
        f1,
        mi: mi_spectral(f0, f1, mu)?.mi,
        on_boundary: witness.is_some(),
        witness,
    })
}

fn check_mu(mu: f64) -> Result<()> {
    if mu.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidMean { variable: 0, mu })
    }
}

/// `res x res` grid: `res` values of `f0` over `[-1, 1]` and, for each, `res`
/// values of `f1` spanning [`f1_bounds`]. Rows are `f0`-major.
pub fn grid(mu: f64, res: usize) -> Result<Vec<SurfaceRow>> {
    check_mu(mu)?;
    let res = res.max(2);
    let last = (res - 1) as f64;
    let mut rows = Vec::with_capacity(res * res);
    for j in 0..res {
        let f0 = (2 * j as i64 - (res as i64 - 1)) as f64 / last;
        let (lo, hi) = f1_bounds(f0, mu);
        for k in 0..res {
            let f1 = match k {
                0 => lo,
                _ if k == res - 1 => hi,
                _ => (lo * (res - 1 - k) as f64 + hi * k as f64) / last,
            };
            rows.push(row(f0, f1, mu)?);
        }
    }
    Ok(rows)
}

/// The `(f0, f1)` pairs reachable by functions of `n` variables when the
/// others are uniform: every pair of conditional means in
/// `{-1 + 2j / 2^(n-1)}`. Sorted by `f0`, then `f1`.
pub fn lattice(mu: f64, n: usize) -> Result<Vec<SurfaceRow>> {
    check_mu(mu)?;
    if n == 0 || n > MAX_QUANTIZE {
        return Err(Error::ArityTooLarge {
            arity: n,
            max: MAX_QUANTIZE,
        });
    }
    let steps = 1u32 << (n - 1);
    let level = |j: u32| 2.0 * j as f64 / steps as f64 - 1.0;
    let (p_plus, p_minus) = (marginal(mu, Sign::Plus), marginal(mu, Sign::Minus));
    let sigma = (1.0 - mu * mu).sqrt();
    let mut rows = Vec::with_capacity(((steps + 1) * (steps + 1)) as usize);
    for jp in 0..=steps {
        for jm in 0..=steps {
            let (m_plus, m_minus) = (level(jp), level(jm));
            let f0 = p_plus * m_plus + p_minus * m_minus;
            let f1 = sigma * (m_plus - m_minus) / 2.0;
            let witness = [(Sign::Plus, jp), (Sign::Minus, jm)]
                .into_iter()
                .find_map(|(a, j)| match j {
                    0 => Some(Witness::new(a, Sign::Minus)),
                    _ if j == steps => Some(Witness::new(a, Sign::Plus)),
                    _ => None,
                });
            rows.push(SurfaceRow {
                f0,
                f1,
                mi: mi_spectral(f0, f1, mu)?.mi,
                on_boundary: witness.is_some(),
                witness,
            });
        }
    }
    rows.sort_by(|x, y| x.f0.total_cmp(&y.f0).then(x.f1.total_cmp(&y.f1)));
    Ok(rows)
}

pub fn write_csv(rows: &[SurfaceRow], out: &mut (impl Write + ?Sized)) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "f0,f1,mi,on_boundary")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            fmt17(r.f0),
            fmt17(r.f1),
            fmt17(r.mi),
            r.on_boundary
        )?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use boolspec_core::infomeasure::boundary_mi_product;

    #[test]
    fn bounds_at_uniform() {
        assert_eq!(f1_bounds(0.0, 0.0), (-1.0, 1.0));
        assert_eq!(f1_bounds(0.5, 0.0), (-0.5, 0.5));
        let (lo, hi) = f1_bounds(1.0, 0.3);
        assert!(lo.abs() < 1e-15 && hi.abs() < 1e-15);
    }

    #[test]
    fn grid_endpoints_are_boundary() {
        let rows = grid(-0.4, 11).unwrap();
        assert_eq!(rows.len(), 121);
        for slice in rows.chunks(11) {
            assert!(slice[0].on_boundary && slice[10].on_boundary);
            for r in slice {
                let w = r
                    .witness
                    .map(|w| boundary_mi_product(r.f0, -0.4, w).unwrap());
                if let Some(m) = w {
                    assert!((m - r.mi).abs() < 1e-9);
                }
            }
        }
        assert_eq!(rows[5 * 11].f0, 0.0);
    }

    #[test]
    fn lattice_small() {
        // n = 1: the four functions of one variable
        let rows = lattice(0.0, 1).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.on_boundary));
        let mis: Vec<f64> = rows.iter().map(|r| r.mi).collect();
        assert_eq!(mis, [0.0, 1.0, 1.0, 0.0]);
        assert_eq!(lattice(0.2, 3).unwrap().len(), 25);
        assert!(lattice(0.2, 0).is_err() && lattice(0.2, 13).is_err());
        assert!(grid(1.0, 3).is_err());
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        write_csv(&lattice(0.0, 1).unwrap(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("f0,f1,mi,on_boundary"));
        assert_eq!(text.lines().count(), 5);
    }
}
