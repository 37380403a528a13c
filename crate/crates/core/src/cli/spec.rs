//! The flat `family:args` group-spec mini-language.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groups::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Twisted {
        m: u64,
        n: u64,
        z: u64,
    },
    Metacyclic {
        m: u64,
        n: u64,
        r: u64,
    },
    Thm32 {
        p: u64,
        alpha: u32,
        beta: u32,
    },
    Remark5 {
        alpha: u32,
        beta: u32,
    },
    C6C7,
    C2aM21(u32),
    Symmetric(u32),
    Alternating(u32),
    Perm {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

fn parse_err(spec: &str, why: impl fmt::Display) -> Error {
    Error::Parse(format!("bad group spec {spec:?}: {why}"))
}

fn numbers<T: FromStr>(spec: &str, args: &str, count: usize) -> Result<Vec<T>> {
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(parse_err(
            spec,
            format!("expected {count} comma-separated integers"),
        ));
    }
    parts
        .iter()
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| parse_err(spec, format!("{s:?} is not a non-negative integer")))
        })
        .collect()
}

fn parse_perm(spec: &str, degree: usize, gens: &str) -> Result<Vec<Permutation>> {
    gens.split(';')
        .map(str::trim)
        .filter(|g| !g.is_empty())
        .map(|g| {
            let images = g
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| parse_err(spec, format!("bad image {s:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if images.len() != degree {
                return Err(parse_err(
                    spec,
                    format!(
                        "generator {g:?} has {} images, degree is {degree}",
                        images.len()
                    ),
                ));
            }
            Permutation::new(images).map_err(|e| parse_err(spec, e))
        })
        .collect()
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (family, args) = spec.split_once(':').unwrap_or((spec, ""));
        let parsed = match family {
            "cyclic" => GroupSpec::Cyclic(numbers(spec, args, 1)?[0]),
            "twisted" => {
                let v = numbers(spec, args, 3)?;
                GroupSpec::Twisted {
                    m: v[0],
                    n: v[1],
                    z: v[2],
                }
            }
            "metacyclic" => {
                let v = numbers(spec, args, 3)?;
                GroupSpec::Metacyclic {
                    m: v[0],
                    n: v[1],
                    r: v[2],
                }
            }
            "thm32" => {
                let v: Vec<u64> = numbers(spec, args, 3)?;
                let small =
                    |x: u64| u32::try_from(x).map_err(|_| parse_err(spec, "exponent too large"));
                GroupSpec::Thm32 {
                    p: v[0],
                    alpha: small(v[1])?,
                    beta: small(v[2])?,
                }
            }
            "remark5" => {
                let v = numbers(spec, args, 2)?;
                GroupSpec::Remark5 {
                    alpha: v[0],
                    beta: v[1],
                }
            }
            "c6c7" if args.is_empty() => GroupSpec::C6C7,
            "c2am21" => GroupSpec::C2aM21(numbers(spec, args, 1)?[0]),
            "sn" => GroupSpec::Symmetric(numbers(spec, args, 1)?[0]),
            "an" => GroupSpec::Alternating(numbers(spec, args, 1)?[0]),
            "perm" => {
                let (degree, gens) = args.split_once(':').unwrap_or((args, ""));
                let degree: usize = degree
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(spec, "degree must be an integer"))?;
                GroupSpec::Perm {
                    degree,
                    generators: parse_perm(spec, degree, gens)?,
                }
            }
            _ => return Err(parse_err(spec, "unknown family")),
        };
        Ok(parsed)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Twisted { m, n, z } => write!(f, "twisted:{m},{n},{z}"),
            GroupSpec::Metacyclic { m, n, r } => write!(f, "metacyclic:{m},{n},{r}"),
            GroupSpec::Thm32 { p, alpha, beta } => write!(f, "thm32:{p},{alpha},{beta}"),
            GroupSpec::Remark5 { alpha, beta } => write!(f, "remark5:{alpha},{beta}"),
            GroupSpec::C6C7 => write!(f, "c6c7"),
            GroupSpec::C2aM21(a) => write!(f, "c2am21:{a}"),
            GroupSpec::Symmetric(n) => write!(f, "sn:{n}"),
            GroupSpec::Alternating(n) => write!(f, "an:{n}"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "perm:{degree}:")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    let images: Vec<String> = g.images().iter().map(u32::to_string).collect();
                    write!(f, "{}", images.join(","))?;
                }
                Ok(())
            }
        }
    }
}
