use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;

use super::HarnessError;
use crate::constructions::BuildContext;
use crate::descriptor::ConstructionDescriptor;
use crate::ring::FiniteRing;

pub const DEFAULT_MANIFEST: &str = include_str!("../../corpus/default.txt");

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// 1-based manifest line.
    pub line: usize,
    pub ring: Arc<FiniteRing>,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub rings: Vec<CorpusEntry>,
}

impl Corpus {
    /// Parses a manifest (one ring spec per line, `#` comments) and builds
    /// every ring.
    pub fn from_manifest(text: &str, ctx: &BuildContext) -> Result<Self, HarnessError> {
        let mut specs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let spec = ConstructionDescriptor::parse(line)
                .map_err(|source| HarnessError::Manifest { line: i + 1, source })?;
            specs.push((i + 1, spec));
        }
        let rings = specs
            .par_iter()
            .map(|(line, spec)| {
                ctx.build(spec)
                    .map(|ring| CorpusEntry { line: *line, ring })
                    .map_err(|source| HarnessError::Manifest {
                        line: *line,
                        source,
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Corpus { rings })
    }

    /// Reads a manifest file; `table:` paths resolve against its directory.
    pub fn from_path(path: &Path, capacity: usize) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            HarnessError::Ring(crate::error::RingError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })
        })?;
        let ctx = BuildContext {
            capacity,
            base_dir: path.parent().map(Path::to_path_buf),
        };
        Self::from_manifest(&text, &ctx)
    }

    pub fn from_rings(rings: impl IntoIterator<Item = Arc<FiniteRing>>) -> Self {
        Corpus {
            rings: rings
                .into_iter()
                .enumerate()
                .map(|(i, ring)| CorpusEntry { line: i + 1, ring })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }
}

pub fn default_corpus(capacity: usize) -> Result<Corpus, HarnessError> {
    Corpus::from_manifest(DEFAULT_MANIFEST, &BuildContext::with_capacity(capacity))
}
