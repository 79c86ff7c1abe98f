//! Where a pair comes from: a named family or a fixture.

use std::path::PathBuf;

use clap::Args;
use sha2::{Digest, Sha256};

use ict_core::groups::{Caps, Family, Fixture, PairGH};

use crate::failure::Failure;

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct PairArgs {
    /// (Sym(N), Sym(N-1))
    #[arg(long, value_name = "N")]
    pub sym: Option<usize>,
    /// (Alt(N), Alt(N-1))
    #[arg(long, value_name = "N")]
    pub alt: Option<usize>,
    /// (D_N, <b>) with b a reflection
    #[arg(long, value_name = "N")]
    pub dihedral: Option<usize>,
    /// The non-abelian group of order P*Q over a subgroup of order P
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub pq: Option<Vec<usize>>,
    /// A fixture file with `degree`, `gen` and optional `sub` lines
    #[arg(long, value_name = "PATH")]
    pub fixture: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub enum PairSource {
    Family(Family),
    Fixture { label: String, fixture: Fixture },
}

impl PairArgs {
    pub fn resolve(&self) -> Result<PairSource, Failure> {
        if let Some(n) = self.sym {
            return Ok(PairSource::Family(Family::Sym(n)));
        }
        if let Some(n) = self.alt {
            return Ok(PairSource::Family(Family::Alt(n)));
        }
        if let Some(n) = self.dihedral {
            return Ok(PairSource::Family(Family::Dihedral(n)));
        }
        if let Some(pq) = &self.pq {
            return Ok(PairSource::Family(Family::Pq(pq[0], pq[1])));
        }
        let path = self.fixture.as_ref().expect("clap enforces one pair source");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read fixture {}: {e}", path.display())))?;
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        PairSource::from_fixture_text(&text, stem)
    }
}

impl PairSource {
    pub fn from_fixture_text(text: &str, fallback_label: Option<String>) -> Result<PairSource, Failure> {
        let fixture = Fixture::parse(text)?;
        let label = fixture
            .name
            .clone()
            .or(fallback_label)
            .unwrap_or_else(|| "fixture".to_string());
        Ok(PairSource::Fixture { label, fixture })
    }

    pub fn family(&self) -> Option<&Family> {
        match self {
            PairSource::Family(f) => Some(f),
            PairSource::Fixture { .. } => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            PairSource::Family(f) => f.key(),
            PairSource::Fixture { label, .. } => format!("fixture:{label}"),
        }
    }

    /// Identity for cache keys. Fixtures hash their canonical text, so
    /// comments and formatting do not matter but the generators do.
    pub fn identity(&self) -> String {
        match self {
            PairSource::Family(f) => f.key(),
            PairSource::Fixture { fixture, .. } => {
                let digest = Sha256::digest(fixture.to_text().as_bytes());
                format!("fixture:{}", hex::encode(digest))
            }
        }
    }

    pub fn build(&self, caps: &Caps) -> Result<PairGH, Failure> {
        Ok(match self {
            PairSource::Family(f) => f.build(caps)?,
            PairSource::Fixture { fixture, .. } => fixture.pair(caps)?,
        })
    }
}
