//! Text input formats shared by the command line and the C interface.

use crate::error::{Error, Result};
use crate::normalform::{CoefficientPoint, NormalFormTemplate};
use crate::symcore::{split_signed_terms, Rat, Series};

/// `"4,6,13"` -> `[4, 6, 13]`.
pub fn parse_generators(s: &str) -> Result<Vec<u32>> {
    let out: Vec<u32> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid generator `{}`", p.trim())))
        })
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(out)
}

/// `"b7=1,g1d9=1/2"`; unset coordinates are 0. An empty string is the origin.
pub fn parse_point(template: &NormalFormTemplate, s: &str) -> Result<CoefficientPoint> {
    let mut pairs = Vec::new();
    for item in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got `{item}`")))?;
        pairs.push((k.trim().to_string(), v.parse::<Rat>()?));
    }
    template.point_with_defaults(pairs.iter().map(|(k, v)| (k.as_str(), v.clone())))
}

fn parse_term(term: &str) -> Result<(u32, Rat)> {
    let bad = || Error::Parse(format!("invalid series term `{term}`"));
    let compact: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(pos) = compact.find('t') else {
        return Ok((0, compact.parse()?));
    };
    let (coeff, power) = compact.split_at(pos);
    let coeff = match coeff.strip_suffix('*').unwrap_or(coeff) {
        "" => Rat::one(),
        c => c.parse()?,
    };
    let exp = match &power[1..] {
        "" => 1,
        p => p
            .strip_prefix('^')
            .ok_or_else(bad)?
            .parse::<u32>()
            .map_err(|_| bad())?,
    };
    Ok((exp, coeff))
}

/// A single series such as `t^3 + 1/2*t^4 - t^5`, reduced mod `t^modulus`.
pub fn parse_series(s: &str, modulus: u32) -> Result<Series> {
    let mut terms = Vec::new();
    for (sign, term) in split_signed_terms(s)? {
        let (e, c) = parse_term(&term)?;
        let c = if sign < 0 { -c } else { c };
        terms.push((e, c));
    }
    Ok(Series::from_rats(modulus, terms))
}

/// `;`-separated list of series.
pub fn parse_series_list(s: &str, modulus: u32) -> Result<Vec<Series>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_series(p, modulus))
        .collect()
}
