//! Corpus ingestion and claim verification over small-graph corpora.

pub mod claims;
pub mod enumerate;
pub mod report;

use crate::connectivity::{is_connected, vertex_connectivity};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::solid::is_solid;
use crate::structure::{is_brick, is_matching_covered};
use report::StageCount;
use std::fmt;
use std::path::PathBuf;

/// Builtin exhaustive enumeration is capped here; larger orders must come
/// from externally generated graph6 corpora.
pub const BUILTIN_MAX_ORDER: usize = 8;

#[derive(Clone, Debug)]
pub enum CorpusOrigin {
    /// graph6 records, one per line; blank lines and a ">>graph6<<" header
    /// line are skipped.
    File(PathBuf),
    /// Every isomorphism class of graphs with min_order ≤ n ≤ max_order.
    Builtin { min_order: usize, max_order: usize },
    /// Explicitly generated family members.
    Families(Vec<FamilySpec>),
}

/// Predicates applied to the raw stream in declared order, with a count
/// recorded after each stage.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Filter {
    EvenOrder,
    MinDegree(usize),
    Connected,
    KConnected(usize),
    MatchingCovered,
    Brick,
    SolidBrick,
}

impl Filter {
    pub fn name(self) -> String {
        match self {
            Filter::EvenOrder => "even-order".to_string(),
            Filter::MinDegree(d) => format!("min-degree-{d}"),
            Filter::Connected => "connected".to_string(),
            Filter::KConnected(k) => format!("{k}-connected"),
            Filter::MatchingCovered => "matching-covered".to_string(),
            Filter::Brick => "brick".to_string(),
            Filter::SolidBrick => "solid-brick".to_string(),
        }
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::EvenOrder => g.n() % 2 == 0,
            Filter::MinDegree(d) => g.min_degree() >= d,
            Filter::Connected => is_connected(g),
            Filter::KConnected(k) => g.n() >= 2 && vertex_connectivity(g) >= k,
            Filter::MatchingCovered => is_matching_covered(g),
            Filter::Brick => is_brick(g),
            Filter::SolidBrick => is_brick(g) && is_solid(g).unwrap_or(false),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusSource {
    pub origin: CorpusOrigin,
    pub filters: Vec<Filter>,
}

impl CorpusSource {
    pub fn builtin(max_order: usize) -> CorpusSource {
        CorpusSource {
            origin: CorpusOrigin::Builtin {
                min_order: 1,
                max_order,
            },
            filters: Vec::new(),
        }
    }

    pub fn file(path: impl Into<PathBuf>) -> CorpusSource {
        CorpusSource {
            origin: CorpusOrigin::File(path.into()),
            filters: Vec::new(),
        }
    }

    pub fn families(specs: Vec<FamilySpec>) -> CorpusSource {
        CorpusSource {
            origin: CorpusOrigin::Families(specs),
            filters: Vec::new(),
        }
    }

    pub fn with_filter(mut self, f: Filter) -> CorpusSource {
        self.filters.push(f);
        self
    }
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.origin {
            CorpusOrigin::File(p) => write!(f, "file {}", p.display()),
            CorpusOrigin::Builtin {
                min_order,
                max_order,
            } => write!(f, "builtin orders {min_order}..={max_order}"),
            CorpusOrigin::Families(specs) => {
                let names: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
                write!(f, "families [{}]", names.join(", "))
            }
        }
    }
}

/// The materialized corpus: graphs surviving the filter chain plus the
/// per-stage counts.
#[derive(Clone, Debug)]
pub struct Ingest {
    pub graphs: Vec<Graph>,
    pub stages: Vec<StageCount>,
}

pub fn ingest(source: &CorpusSource) -> Result<Ingest> {
    let mut graphs = raw_stream(&source.origin)?;
    let mut stages = vec![StageCount {
        stage: "source".to_string(),
        count: graphs.len() as u64,
    }];
    for filter in &source.filters {
        graphs.retain(|g| filter.accepts(g));
        stages.push(StageCount {
            stage: filter.name(),
            count: graphs.len() as u64,
        });
    }
    Ok(Ingest { graphs, stages })
}

fn raw_stream(origin: &CorpusOrigin) -> Result<Vec<Graph>> {
    match origin {
        CorpusOrigin::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let mut graphs = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line == ">>graph6<<" {
                    continue;
                }
                let g = parse_graph6(line).map_err(|e| Error::Corpus {
                    line: idx + 1,
                    reason: e.to_string(),
                })?;
                graphs.push(g);
            }
            Ok(graphs)
        }
        CorpusOrigin::Builtin {
            min_order,
            max_order,
        } => {
            if *max_order > BUILTIN_MAX_ORDER {
                return Err(Error::argument(format!(
                    "builtin enumeration is capped at order {BUILTIN_MAX_ORDER}, got {max_order}"
                )));
            }
            if min_order > max_order {
                return Err(Error::argument("empty builtin order range".to_string()));
            }
            let mut graphs = Vec::new();
            for order in *min_order..=*max_order {
                graphs.extend(enumerate::graphs_of_order(order));
            }
            Ok(graphs)
        }
        CorpusOrigin::Families(specs) => specs.iter().map(generate).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::iso::are_isomorphic;

    #[test]
    fn builtin_order_4_bricks_is_exactly_k4() {
        let source = CorpusSource {
            origin: CorpusOrigin::Builtin {
                min_order: 4,
                max_order: 4,
            },
            filters: vec![Filter::Brick],
        };
        let ingest = ingest(&source).unwrap();
        assert_eq!(ingest.graphs.len(), 1);
        let k4 = generate(&FamilySpec::of_order(Family::Complete, 4)).unwrap();
        assert!(are_isomorphic(&ingest.graphs[0], &k4));
        assert_eq!(ingest.stages[0].count, 11);
        assert_eq!(ingest.stages[1].count, 1);
    }

    #[test]
    fn builtin_order_6_bricks_include_wheel_and_c6_complement() {
        let source = CorpusSource {
            origin: CorpusOrigin::Builtin {
                min_order: 6,
                max_order: 6,
            },
            filters: vec![Filter::Brick],
        };
        let ingest = ingest(&source).unwrap();
        let w6 = generate(&FamilySpec::of_order(Family::Wheel, 6)).unwrap();
        let cc6 = generate(&FamilySpec::fixed(Family::C6Complement)).unwrap();
        assert!(ingest.graphs.iter().any(|g| are_isomorphic(g, &w6)));
        assert!(ingest.graphs.iter().any(|g| are_isomorphic(g, &cc6)));
    }

    #[test]
    fn file_ingestion_parses_and_reports_line_numbers() {
        let dir = std::env::temp_dir();
        let path = dir.join("mcg-ingest-test.g6");
        std::fs::write(&path, ">>graph6<<\nC~\n\nA_\n").unwrap();
        let ingest = ingest(&CorpusSource::file(&path)).unwrap();
        assert_eq!(ingest.graphs.len(), 2);
        assert_eq!(ingest.graphs[0].n(), 4);

        std::fs::write(&path, "C~\nnot-a-graph\n").unwrap();
        let err = super::ingest(&CorpusSource::file(&path)).unwrap_err();
        assert!(matches!(err, Error::Corpus { line: 2, .. }), "{err}");
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn builtin_above_cap_is_an_error() {
        let err = ingest(&CorpusSource::builtin(9)).unwrap_err();
        assert!(err.to_string().contains("capped"));
    }

    #[test]
    fn filter_counts_are_monotone() {
        let source = CorpusSource {
            origin: CorpusOrigin::Builtin {
                min_order: 1,
                max_order: 6,
            },
            filters: vec![Filter::EvenOrder, Filter::Connected, Filter::MatchingCovered],
        };
        let ingest = ingest(&source).unwrap();
        for pair in ingest.stages.windows(2) {
            assert!(pair[1].count <= pair[0].count);
        }
    }
}
