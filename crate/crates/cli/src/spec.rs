//! Text form of a space: `lp:<n>:<p>`, `l1:<n>`, `linf:<n>`, `regular:<n>`,
//! `polygon:<path>`, `mix:<pos>-<neg>`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rhogeom::{Error, Piece, Polygon, Space};

#[derive(Clone, Debug, PartialEq)]
pub enum SpaceSpec {
    Lp { n: usize, p: f64 },
    L1 { n: usize },
    LInf { n: usize },
    Regular { n: usize },
    Polygon { path: PathBuf },
    Mix { pos: Piece, neg: Piece },
}

fn parse_usize(tok: &str, what: &str) -> Result<usize, Error> {
    tok.parse().map_err(|_| Error::Parse(format!("{what}: expected a positive integer, got {tok:?}")))
}

fn parse_exponent(tok: &str) -> Result<f64, Error> {
    let p = match tok {
        "inf" | "infinity" | "∞" => f64::INFINITY,
        _ => tok.parse().map_err(|_| Error::Parse(format!("exponent: expected a number or inf, got {tok:?}")))?,
    };
    if p.is_nan() || p < 1.0 {
        return Err(Error::Parse(format!("exponent p = {tok} must lie in [1, inf]")));
    }
    Ok(p)
}

fn fmt_exponent(p: f64) -> String {
    if p.is_infinite() {
        "inf".into()
    } else {
        p.to_string()
    }
}

fn parse_piece(tok: &str) -> Result<Piece, Error> {
    match tok {
        "l1" => Ok(Piece::L1),
        "linf" => Ok(Piece::LInf),
        _ => {
            let inner = tok
                .strip_prefix("lp(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("piece must be l1, linf or lp(<p>), got {tok:?}")))?;
            Ok(Piece::Lp(parse_exponent(inner)?))
        }
    }
}

fn fmt_piece(p: Piece) -> String {
    match p {
        Piece::L1 => "l1".into(),
        Piece::LInf => "linf".into(),
        Piece::Lp(p) => format!("lp({})", fmt_exponent(p)),
    }
}

/// Splits `pos-neg` at the first `-` outside parentheses.
fn split_mix(body: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '-' if depth == 0 => return Some((&body[..i], &body[i + 1..])),
            _ => {}
        }
    }
    None
}

impl FromStr for SpaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("space spec {s:?} has no ':'")))?;
        let spec = match kind {
            "lp" => {
                let (n, p) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected lp:<n>:<p>, got {s:?}")))?;
                SpaceSpec::Lp { n: parse_usize(n, "dimension")?, p: parse_exponent(p)? }
            }
            "l1" => SpaceSpec::L1 { n: parse_usize(rest, "dimension")? },
            "linf" => SpaceSpec::LInf { n: parse_usize(rest, "dimension")? },
            "regular" => SpaceSpec::Regular { n: parse_usize(rest, "polygon order")? },
            "polygon" if !rest.is_empty() => SpaceSpec::Polygon { path: PathBuf::from(rest) },
            "mix" => {
                let (a, b) = split_mix(rest).ok_or_else(|| Error::Parse(format!("expected mix:<pos>-<neg>, got {s:?}")))?;
                SpaceSpec::Mix { pos: parse_piece(a)?, neg: parse_piece(b)? }
            }
            _ => return Err(Error::Parse(format!("unknown space family {kind:?}"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::Lp { n, p } => write!(f, "lp:{n}:{}", fmt_exponent(*p)),
            SpaceSpec::L1 { n } => write!(f, "l1:{n}"),
            SpaceSpec::LInf { n } => write!(f, "linf:{n}"),
            SpaceSpec::Regular { n } => write!(f, "regular:{n}"),
            SpaceSpec::Polygon { path } => write!(f, "polygon:{}", path.display()),
            SpaceSpec::Mix { pos, neg } => write!(f, "mix:{}-{}", fmt_piece(*pos), fmt_piece(*neg)),
        }
    }
}

impl SpaceSpec {
    /// Builds the space; bad parameters and unreadable polygon files count as
    /// parse errors.
    pub fn build(&self) -> Result<Space, Error> {
        let as_parse = |e: Error| match e {
            Error::InvalidSpace(m) | Error::DegeneratePolygon(m) => Error::Parse(m),
            other => other,
        };
        match self {
            SpaceSpec::Lp { n, p } => Space::lp(*p, *n),
            SpaceSpec::L1 { n } => Space::l1(*n),
            SpaceSpec::LInf { n } => Space::linf(*n),
            SpaceSpec::Regular { n } => Space::regular(*n),
            SpaceSpec::Polygon { path } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
                Polygon::from_json(&text).map(Space::Polygon)
            }
            SpaceSpec::Mix { pos, neg } => Space::mixed(*pos, *neg),
        }
        .map_err(as_parse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["lp:3:2", "lp:2:inf", "lp:4:1.5", "l1:4", "linf:5", "regular:4", "polygon:/tmp/p.json", "mix:l1-linf", "mix:lp(3)-l1", "mix:lp(inf)-lp(1.5)"] {
            let spec: SpaceSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<SpaceSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "lp:2", "lp:x:2", "lp:2:0.5", "mix:l1", "mix:l2-l1", "cube:3", "polygon:", "regular:-1"] {
            assert!(matches!(s.parse::<SpaceSpec>(), Err(Error::Parse(_))), "{s}");
        }
    }

    #[test]
    fn builds() {
        assert_eq!("mix:l1-linf".parse::<SpaceSpec>().unwrap().build().unwrap(), Space::l1_linf());
        assert!(matches!("regular:1".parse::<SpaceSpec>().unwrap().build(), Err(Error::Parse(_))));
    }
}
