//! Plain-text group fixtures.
//!
//! ```text
//! # comments and blank lines are ignored
//! name order18
//! degree 6
//! gen (1,2,3)
//! gen (4,5,6)
//! gen (2,3)(5,6)
//! sub (1,2,3)
//! sub (2,3)(5,6)
//! ```
//!
//! `gen` lines generate `G`. `sub` lines, when present, generate `H` and the
//! pair is normalized through the coset representation; without them `G` must
//! be transitive and `H` is the stabilizer of 1.

use super::{coset_representation, Caps, GroupError, PairGH, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub subgroup: Option<Vec<Permutation>>,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Fixture, GroupError> {
        let mut name = None;
        let mut degree = None;
        let mut gens: Vec<(usize, String)> = Vec::new();
        let mut subs: Vec<(usize, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let bad = |reason: String| GroupError::Fixture {
                line: lineno + 1,
                reason,
            };
            match keyword {
                "name" => name = Some(rest.to_string()),
                "degree" => {
                    let d = rest
                        .parse::<usize>()
                        .map_err(|_| bad(format!("bad degree {rest:?}")))?;
                    degree = Some(d);
                }
                "gen" => gens.push((lineno + 1, rest.to_string())),
                "sub" => subs.push((lineno + 1, rest.to_string())),
                other => return Err(bad(format!("unknown keyword {other:?}"))),
            }
        }
        let degree = degree.ok_or(GroupError::Fixture {
            line: 0,
            reason: "missing degree line".into(),
        })?;
        let parse_all = |items: &[(usize, String)]| -> Result<Vec<Permutation>, GroupError> {
            items
                .iter()
                .map(|(line, s)| {
                    Permutation::parse_cycles(s, degree).map_err(|e| GroupError::Fixture {
                        line: *line,
                        reason: e.to_string(),
                    })
                })
                .collect()
        };
        let generators = parse_all(&gens)?;
        let subgroup = if subs.is_empty() {
            None
        } else {
            Some(parse_all(&subs)?)
        };
        Ok(Fixture {
            name,
            degree,
            generators,
            subgroup,
        })
    }

    /// Canonical text: the same fixture always renders to the same bytes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name {name}\n"));
        }
        out.push_str(&format!("degree {}\n", self.degree));
        for g in &self.generators {
            out.push_str(&format!("gen {g}\n"));
        }
        for h in self.subgroup.iter().flatten() {
            out.push_str(&format!("sub {h}\n"));
        }
        out
    }

    pub fn groups(&self, caps: &Caps) -> Result<(PermGroup, Option<PermGroup>), GroupError> {
        let g = PermGroup::generate(self.degree, &self.generators, caps)?;
        let h = match &self.subgroup {
            Some(sub) => Some(PermGroup::generate(self.degree, sub, caps)?),
            None => None,
        };
        Ok((g, h))
    }

    pub fn pair(&self, caps: &Caps) -> Result<PairGH, GroupError> {
        match self.groups(caps)? {
            (g, Some(h)) => coset_representation(&g, &h, caps),
            (g, None) => PairGH::from_transitive(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDER18: &str = "# order 18\nname order18\ndegree 6\ngen (1,2,3)\ngen (4,5,6)\ngen (2,3)(5,6)\nsub (1,2,3)\nsub (2,3)(5,6)\n";

    #[test]
    fn parses_and_normalizes() {
        let fx = Fixture::parse(ORDER18).unwrap();
        assert_eq!(fx.name.as_deref(), Some("order18"));
        assert_eq!(fx.generators.len(), 3);
        let pair = fx.pair(&Caps::default()).unwrap();
        assert_eq!((pair.index(), pair.g().order()), (3, 6));
        assert_eq!(Fixture::parse(&fx.to_text()).unwrap(), fx);
    }

    #[test]
    fn transitive_fixture_without_subgroup() {
        let fx = Fixture::parse("degree 4\ngen (1,2,3,4)\ngen (2,4)").unwrap();
        let pair = fx.pair(&Caps::default()).unwrap();
        assert_eq!((pair.g().order(), pair.h_order()), (8, 2));
    }

    #[test]
    fn errors_name_the_line() {
        assert!(matches!(
            Fixture::parse("degree 3\ngen (1,4)"),
            Err(GroupError::Fixture { line: 2, .. })
        ));
        assert!(matches!(
            Fixture::parse("gen (1,2)"),
            Err(GroupError::Fixture { line: 0, .. })
        ));
        assert!(Fixture::parse("degree 3\nfoo 1").is_err());
        let intransitive = Fixture::parse("degree 4\ngen (1,2)").unwrap();
        assert!(matches!(
            intransitive.pair(&Caps::default()),
            Err(GroupError::NotTransitive(4))
        ));
    }
}
