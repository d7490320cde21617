use std::fs;
use std::path::Path;

use circsurf::catalog;
use circsurf::directrix::curve_from_json_str;
use circsurf::poly::parse_rational;
use circsurf::{CongruenceParam, Error, RationalCurve, Rational, Result};

/// `--curve` accepts a curve-spec JSON path or a catalog name.
pub fn load_curve(arg: &str) -> Result<RationalCurve> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        return curve_from_json_str(&text);
    }
    catalog::by_name(arg).ok_or_else(|| {
        Error::Parse(format!("{arg:?} is neither a readable file nor a catalog curve ({})", catalog::NAMES.join(", ")))
    })
}

pub fn parse_q(arg: &str) -> Result<CongruenceParam> {
    CongruenceParam::parse(arg)
}

pub fn parse_param(arg: &str) -> Result<Rational> {
    parse_rational(arg)
}

pub fn check_tol(tol: f64) -> Result<f64> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Error::Domain(format!("tolerance must be positive, got {tol}")))
    }
}

pub fn check_grid(n: usize, what: &str) -> Result<usize> {
    if n >= 2 {
        Ok(n)
    } else {
        Err(Error::Domain(format!("{what} must be at least 2, got {n}")))
    }
}
