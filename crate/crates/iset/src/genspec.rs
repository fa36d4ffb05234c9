//! Generator specs of the form `name:key=val,key=val`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use iset_core::generate::{gen_bipartite, gen_clique_union, gen_gnp, gen_triangle_free_process, GenerateError};
use iset_core::Graph;

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Gnp { n: usize, p: f64 },
    Bipartite { left: usize, right: usize, p: f64 },
    TriangleFreeProcess { n: usize },
    CliqueUnion { r: usize, k: usize },
    Empty { n: usize },
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Petersen,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SpecError {
    #[error("unknown generator `{0}` (expected gnp, bipartite, tfp, clique-union, empty, complete, cycle, path, petersen)")]
    UnknownGenerator(String),
    #[error("malformed parameter `{0}` (expected key=value)")]
    Malformed(String),
    #[error("generator `{name}` is missing parameter `{key}`")]
    Missing { name: &'static str, key: &'static str },
    #[error("generator `{name}` does not take parameter `{key}`")]
    Unexpected { name: &'static str, key: String },
    #[error("parameter `{key}` has invalid value `{value}`")]
    BadValue { key: String, value: String },
    #[error(transparent)]
    Generate(#[from] GenerateError),
}

struct Params {
    name: &'static str,
    map: BTreeMap<String, String>,
}

impl Params {
    fn take<T: FromStr>(&mut self, key: &'static str) -> Result<T, SpecError> {
        let value = self.map.remove(key).ok_or(SpecError::Missing { name: self.name, key })?;
        value.parse().map_err(|_| SpecError::BadValue { key: key.into(), value })
    }

    fn finish(self) -> Result<(), SpecError> {
        match self.map.into_keys().next() {
            Some(key) => Err(SpecError::Unexpected { name: self.name, key }),
            None => Ok(()),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut map = BTreeMap::new();
        for item in rest.split(',').filter(|i| !i.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| SpecError::Malformed(item.into()))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        let name: &'static str = match name.trim() {
            "gnp" => "gnp",
            "bipartite" => "bipartite",
            "tfp" => "tfp",
            "clique-union" => "clique-union",
            "empty" => "empty",
            "complete" => "complete",
            "cycle" => "cycle",
            "path" => "path",
            "petersen" => "petersen",
            other => return Err(SpecError::UnknownGenerator(other.into())),
        };
        let mut p = Params { name, map };
        let spec = match name {
            "gnp" => GeneratorSpec::Gnp { n: p.take("n")?, p: p.take("p")? },
            "bipartite" => GeneratorSpec::Bipartite { left: p.take("l")?, right: p.take("r")?, p: p.take("p")? },
            "tfp" => GeneratorSpec::TriangleFreeProcess { n: p.take("n")? },
            "clique-union" => GeneratorSpec::CliqueUnion { r: p.take("r")?, k: p.take("k")? },
            "empty" => GeneratorSpec::Empty { n: p.take("n")? },
            "complete" => GeneratorSpec::Complete { n: p.take("n")? },
            "cycle" => GeneratorSpec::Cycle { n: p.take("n")? },
            "path" => GeneratorSpec::Path { n: p.take("n")? },
            _ => GeneratorSpec::Petersen,
        };
        p.finish()?;
        if let GeneratorSpec::Cycle { n } = spec {
            if n < 3 {
                return Err(SpecError::BadValue { key: "n".into(), value: n.to_string() });
            }
        }
        Ok(spec)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Gnp { n, p } => write!(f, "gnp:n={n},p={p}"),
            GeneratorSpec::Bipartite { left, right, p } => write!(f, "bipartite:l={left},r={right},p={p}"),
            GeneratorSpec::TriangleFreeProcess { n } => write!(f, "tfp:n={n}"),
            GeneratorSpec::CliqueUnion { r, k } => write!(f, "clique-union:r={r},k={k}"),
            GeneratorSpec::Empty { n } => write!(f, "empty:n={n}"),
            GeneratorSpec::Complete { n } => write!(f, "complete:n={n}"),
            GeneratorSpec::Cycle { n } => write!(f, "cycle:n={n}"),
            GeneratorSpec::Path { n } => write!(f, "path:n={n}"),
            GeneratorSpec::Petersen => write!(f, "petersen"),
        }
    }
}

impl GeneratorSpec {
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            GeneratorSpec::Gnp { .. } | GeneratorSpec::Bipartite { .. } | GeneratorSpec::TriangleFreeProcess { .. }
        )
    }

    pub fn build(&self, seed: u64) -> Result<Graph, SpecError> {
        Ok(match *self {
            GeneratorSpec::Gnp { n, p } => gen_gnp(n, p, seed)?,
            GeneratorSpec::Bipartite { left, right, p } => gen_bipartite(left, right, p, seed)?,
            GeneratorSpec::TriangleFreeProcess { n } => gen_triangle_free_process(n, seed)?,
            GeneratorSpec::CliqueUnion { r, k } => gen_clique_union(r, k)?,
            GeneratorSpec::Empty { n } => Graph::empty(n),
            GeneratorSpec::Complete { n } => Graph::complete(n),
            GeneratorSpec::Cycle { n } => Graph::cycle(n),
            GeneratorSpec::Path { n } => Graph::path(n),
            GeneratorSpec::Petersen => Graph::petersen(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        assert_eq!("clique-union:r=2,k=3".parse(), Ok(GeneratorSpec::CliqueUnion { r: 2, k: 3 }));
        assert_eq!("bipartite:l=3,r=3,p=1".parse(), Ok(GeneratorSpec::Bipartite { left: 3, right: 3, p: 1.0 }));
        assert_eq!("tfp:n=100".parse(), Ok(GeneratorSpec::TriangleFreeProcess { n: 100 }));
        assert_eq!("gnp:p=0.5,n=10".parse(), Ok(GeneratorSpec::Gnp { n: 10, p: 0.5 }));
        assert_eq!("petersen".parse(), Ok(GeneratorSpec::Petersen));
        for s in ["gnp:n=10,p=0.5", "bipartite:l=3,r=4,p=0.25", "tfp:n=7", "cycle:n=5", "empty:n=64"] {
            assert_eq!(s.parse::<GeneratorSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(matches!("foo:n=1".parse::<GeneratorSpec>(), Err(SpecError::UnknownGenerator(_))));
        assert!(matches!("gnp:n=10".parse::<GeneratorSpec>(), Err(SpecError::Missing { key: "p", .. })));
        assert!(matches!("gnp:n=10,p=0.5,q=1".parse::<GeneratorSpec>(), Err(SpecError::Unexpected { .. })));
        assert!(matches!("gnp:n=ten,p=0.5".parse::<GeneratorSpec>(), Err(SpecError::BadValue { .. })));
        assert!(matches!("gnp:n".parse::<GeneratorSpec>(), Err(SpecError::Malformed(_))));
        assert!(matches!("cycle:n=2".parse::<GeneratorSpec>(), Err(SpecError::BadValue { .. })));
        let bad_p: GeneratorSpec = "gnp:n=3,p=2".parse().unwrap();
        assert!(matches!(bad_p.build(0), Err(SpecError::Generate(_))));
    }

    #[test]
    fn builds_graphs() {
        let g = "clique-union:r=2,k=3".parse::<GeneratorSpec>().unwrap().build(0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        let k33 = "bipartite:l=3,r=3,p=1".parse::<GeneratorSpec>().unwrap().build(0).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.is_triangle_free());
    }
}
