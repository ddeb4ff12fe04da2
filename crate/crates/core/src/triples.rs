//! Triple systems `T ⊆ A × B × C` for 3-dimensional matching.
//!
//! Text format: a header `t <|A|> <|B|> <|C|> <m>` followed by `m` lines
//! `a b c` with 0-based indices. `#` starts a comment line.

use std::fmt;
use std::str::FromStr;

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::rng::Seed;

pub type Triple = [usize; 3];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TripleSystem {
    sizes: [usize; 3],
    triples: Vec<Triple>,
}

/// A triple system with the matching-size parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchingInstance {
    pub system: TripleSystem,
    pub k: usize,
}

impl TripleSystem {
    /// Triples are sorted and deduplicated.
    pub fn new(sizes: [usize; 3], triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let mut triples: Vec<Triple> = triples.into_iter().collect();
        for t in &triples {
            for c in 0..3 {
                if t[c] >= sizes[c] {
                    return Err(Error::Range {
                        vertex: t[c],
                        n: sizes[c],
                    });
                }
            }
        }
        triples.sort_unstable();
        triples.dedup();
        Ok(TripleSystem { sizes, triples })
    }

    pub fn sizes(&self) -> [usize; 3] {
        self.sizes
    }

    /// Triples in lexicographic order.
    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Keeps the triples selected by `keep`, preserving order.
    pub(crate) fn retain(&self, keep: &[bool]) -> TripleSystem {
        TripleSystem {
            sizes: self.sizes,
            triples: self
                .triples
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .map(|(t, _)| *t)
                .collect(),
        }
    }

    /// `m` distinct triples drawn uniformly from `A × B × C`.
    pub fn random(sizes: [usize; 3], m: usize, seed: Seed) -> Result<Self> {
        let total = sizes[0] * sizes[1] * sizes[2];
        if m > total {
            return Err(Error::Parameter(format!(
                "{m} triples requested but only {total} exist"
            )));
        }
        let mut rng = seed.rng();
        let picked = rand::seq::index::sample(&mut rng, total, m);
        let triples = picked.into_iter().map(|i| {
            let a = i / (sizes[1] * sizes[2]);
            let rest = i % (sizes[1] * sizes[2]);
            [a, rest / sizes[2], rest % sizes[2]]
        });
        TripleSystem::new(sizes, triples)
    }

    /// Random system concentrated on a few hot elements, so that many triples
    /// agree in one or two coordinates.
    pub fn random_clustered(sizes: [usize; 3], m: usize, hot: usize, seed: Seed) -> Result<Self> {
        if sizes.contains(&0) {
            return TripleSystem::new(sizes, []);
        }
        let mut rng = seed.rng();
        let mut out = Vec::with_capacity(m);
        for _ in 0..m {
            let mut t = [0; 3];
            for c in 0..3 {
                let bound = if rng.random_bool(0.6) { hot.clamp(1, sizes[c]) } else { sizes[c] };
                t[c] = rng.random_range(0..bound);
            }
            out.push(t);
        }
        TripleSystem::new(sizes, out)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<([usize; 3], usize)> = None;
        let mut triples = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let nums = |toks: &[&str]| -> Result<Vec<usize>> {
                toks.iter()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::parse(line_no, format!("bad integer '{t}'")))
                    })
                    .collect()
            };
            if toks[0] == "t" {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate header"));
                }
                if toks.len() != 5 {
                    return Err(Error::parse(line_no, "expected 't <A> <B> <C> <m>'"));
                }
                let v = nums(&toks[1..])?;
                header = Some(([v[0], v[1], v[2]], v[3]));
            } else {
                let (sizes, _) =
                    header.ok_or_else(|| Error::parse(line_no, "triple before header"))?;
                if toks.len() != 3 {
                    return Err(Error::parse(line_no, "expected 'a b c'"));
                }
                let v = nums(&toks)?;
                for c in 0..3 {
                    if v[c] >= sizes[c] {
                        return Err(Error::Range {
                            vertex: v[c],
                            n: sizes[c],
                        });
                    }
                }
                triples.push([v[0], v[1], v[2]]);
            }
        }
        let (sizes, m) = header.ok_or_else(|| Error::parse(0, "missing 't' header"))?;
        if triples.len() != m {
            return Err(Error::parse(
                text.lines().count(),
                format!("header announces {m} triples, found {}", triples.len()),
            ));
        }
        TripleSystem::new(sizes, triples)
    }

    pub fn to_text(&self) -> String {
        let [a, b, c] = self.sizes;
        let mut out = format!("t {a} {b} {c} {}\n", self.triples.len());
        for t in &self.triples {
            out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
        }
        out
    }
}

impl FromStr for TripleSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TripleSystem::parse(s)
    }
}

impl fmt::Display for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
