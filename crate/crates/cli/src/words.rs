//! Matrix arguments: either a JSON literal [[a,b],[c,d]] or a word in the
//! generators I, S, T, T' with optional integer powers, e.g. "S*T^3" or
//! "T^-1 * S".

use anyhow::{anyhow, bail, Result};
use period_hecke::Mat2;

pub fn parse_matrix_arg(s: &str) -> Result<Mat2> {
    let s = s.trim();
    if s.starts_with('[') {
        return s
            .parse::<Mat2>()
            .map_err(|e| anyhow!("{e} (expected [[a,b],[c,d]])"));
    }
    parse_word(s)
}

fn parse_word(s: &str) -> Result<Mat2> {
    let mut out = Mat2::I;
    let mut any = false;
    for token in s.split(|c: char| c == '*' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        any = true;
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<i32>()
                    .map_err(|_| anyhow!("bad exponent in token {token:?}"))?,
            ),
            None => (token, 1),
        };
        let gen = match base {
            "I" => Mat2::I,
            "S" => Mat2::S,
            "T" => Mat2::T,
            "T'" => Mat2::T_PRIME,
            other => bail!("unknown generator {other:?} (expected I, S, T or T')"),
        };
        out = out.mul(&gen.pow(exp)?);
    }
    if !any {
        bail!("empty matrix word");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_parse() {
        assert_eq!(parse_matrix_arg("I").unwrap(), Mat2::I);
        assert_eq!(parse_matrix_arg("S*T").unwrap(), Mat2::S.mul(&Mat2::T));
        assert_eq!(parse_matrix_arg("S T").unwrap(), Mat2::S.mul(&Mat2::T));
        assert_eq!(
            parse_matrix_arg("T^3").unwrap(),
            Mat2::new(1, 3, 0, 1)
        );
        assert_eq!(
            parse_matrix_arg("T^-1").unwrap(),
            Mat2::new(1, -1, 0, 1)
        );
        assert_eq!(parse_matrix_arg("T'").unwrap(), Mat2::T_PRIME);
        assert_eq!(parse_matrix_arg("S^2").unwrap(), Mat2::new(-1, 0, 0, -1));
    }

    #[test]
    fn literals_parse() {
        assert_eq!(
            parse_matrix_arg("[[0,1],[-1,2]]").unwrap(),
            Mat2::new(0, 1, -1, 2)
        );
        assert!(parse_matrix_arg("[[1,2],[3]]").is_err());
    }

    #[test]
    fn junk_is_rejected() {
        assert!(parse_matrix_arg("Q").is_err());
        assert!(parse_matrix_arg("T^x").is_err());
        assert!(parse_matrix_arg("").is_err());
    }
}
