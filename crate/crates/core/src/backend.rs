//! Backend specifications such as `nakayama:m=2,n=2` and `polygon:N=5`.

use std::fmt;
use std::str::FromStr;

use crate::category::{Backend, CatError, CatResult};
use crate::nakayama::Nakayama;
use crate::polygon::PolygonCat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendSpec {
    Nakayama { m: usize, n: usize },
    Polygon { n: usize },
}

impl BackendSpec {
    pub fn build(self) -> CatResult<AnyBackend> {
        Ok(match self {
            BackendSpec::Nakayama { m, n } => AnyBackend::Nakayama(Nakayama::build(m, n)?),
            BackendSpec::Polygon { n } => AnyBackend::Polygon(PolygonCat::new(n)?),
        })
    }
}

impl fmt::Display for BackendSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackendSpec::Nakayama { m, n } => write!(f, "nakayama:m={m},n={n}"),
            BackendSpec::Polygon { n } => write!(f, "polygon:N={n}"),
        }
    }
}

impl FromStr for BackendSpec {
    type Err = CatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatError::Invalid(format!("unrecognized backend {s:?}"));
        let (kind, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let get = |key: &str| -> CatResult<usize> {
            params
                .split(',')
                .filter_map(|kv| kv.split_once('='))
                .find(|(k, _)| k.trim() == key)
                .ok_or_else(|| CatError::Invalid(format!("backend {s:?} lacks {key}")))?
                .1
                .trim()
                .parse()
                .map_err(|_| CatError::Invalid(format!("backend {s:?}: {key} is not a number")))
        };
        match kind.trim() {
            "nakayama" => Ok(BackendSpec::Nakayama {
                m: get("m")?,
                n: get("n")?,
            }),
            "polygon" => Ok(BackendSpec::Polygon { n: get("N")? }),
            _ => Err(bad()),
        }
    }
}

pub enum AnyBackend {
    Nakayama(Nakayama),
    Polygon(PolygonCat),
}

impl AnyBackend {
    pub fn as_dyn(&self) -> &dyn Backend {
        match self {
            AnyBackend::Nakayama(c) => c,
            AnyBackend::Polygon(c) => c,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["nakayama:m=2,n=3", "polygon:N=7"] {
            let spec: BackendSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.build().unwrap().as_dyn().spec(), s);
        }
        assert!("nakayama:m=2".parse::<BackendSpec>().is_err());
        assert!("torus:g=1".parse::<BackendSpec>().is_err());
        assert!("polygon:N=x".parse::<BackendSpec>().is_err());
    }
}
