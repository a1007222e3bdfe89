//! A small notation for groups: `Z n`, `Z^k p k`, `D n`, `Q8`, `Heis p`,
//! `S n`, and direct products joined by `x` (left-associative), e.g.
//! `Z^k 3 2 x D 4`.

use crate::error::{Error, Result};

use super::{
    direct_product, make_cyclic, make_dihedral, make_elementary_abelian, make_heisenberg,
    make_quaternion, make_symmetric, FiniteGroup,
};

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(Error::InvalidArgument("empty group description".into()));
    }
    let mut factors = tokens.split(|t| t.eq_ignore_ascii_case("x"));
    let first = parse_factor(factors.next().unwrap_or(&[]))?;
    factors.try_fold(first, |acc, f| direct_product(&acc, &parse_factor(f)?))
}

fn parse_factor(tokens: &[&str]) -> Result<FiniteGroup> {
    let bad =
        || Error::InvalidArgument(format!("cannot parse group factor '{}'", tokens.join(" ")));
    let num = |i: usize| -> Result<usize> {
        tokens
            .get(i)
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(bad)
    };
    let (&head, args) = tokens.split_first().ok_or_else(bad)?;
    let expect_args = |n: usize| if args.len() == n { Ok(()) } else { Err(bad()) };
    match head {
        "Z" => {
            expect_args(1)?;
            make_cyclic(num(1)?)
        }
        "Z^k" => {
            expect_args(2)?;
            make_elementary_abelian(num(1)?, num(2)?)
        }
        "D" => {
            expect_args(1)?;
            make_dihedral(num(1)?)
        }
        "Q8" => {
            expect_args(0)?;
            make_quaternion()
        }
        "Heis" => {
            expect_args(1)?;
            make_heisenberg(num(1)?)
        }
        "S" => {
            expect_args(1)?;
            make_symmetric(num(1)?)
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        assert_eq!(parse_group("Z 6").unwrap().order(), 6);
        assert_eq!(parse_group("Z^k 3 2").unwrap().order(), 9);
        assert_eq!(parse_group("D 4").unwrap().order(), 8);
        assert_eq!(parse_group("Q8").unwrap().order(), 8);
        assert_eq!(parse_group("Heis 3").unwrap().order(), 27);
        assert_eq!(parse_group("S 3").unwrap().order(), 6);
        let g = parse_group("Z^k 3 2 x D 4").unwrap();
        assert_eq!(g.order(), 72);
        assert_eq!(g.factors().unwrap().0.order(), 9);
        assert_eq!(parse_group("Z 2 x Z 2 x Z 2").unwrap().order(), 8);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "Z", "Z six", "Q8 2", "Foo 3", "Z 2 x", "Z^k 4 2"] {
            assert!(parse_group(bad).is_err(), "{bad:?}");
        }
    }
}
