use std::fs;
use std::path::Path;

use hyper3::generators::{from_arcs, ArcFamily};
use hyper3::{io, Hypergraph3, OrientedHypergraph3};

use crate::CliError;

/// A parsed input file; the extension picks the format.
#[derive(Debug, Clone)]
pub enum Input {
    Plain(Hypergraph3),
    Oriented(OrientedHypergraph3),
    Arcs(ArcFamily),
}

impl Input {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        let in_file = |source| CliError::File {
            path: path.into(),
            source,
        };
        match ext {
            "h3" => io::parse_h3(&text).map(Input::Plain).map_err(in_file),
            "oh3" => io::parse_oh3(&text).map(Input::Oriented).map_err(in_file),
            "iv" => io::parse_iv(&text).map(Input::Arcs).map_err(in_file),
            _ => Err(CliError::Usage(format!(
                "{}: unknown extension, expected .h3, .oh3 or .iv",
                path.display()
            ))),
        }
    }

    pub fn hypergraph(&self) -> Hypergraph3 {
        match self {
            Input::Plain(h) => h.clone(),
            Input::Oriented(oh) => oh.underlying(),
            Input::Arcs(f) => from_arcs(f).0,
        }
    }

    /// The given orientation, or the start-order orientation of an arc family.
    pub fn orientation(&self) -> Option<OrientedHypergraph3> {
        match self {
            Input::Plain(_) => None,
            Input::Oriented(oh) => Some(oh.clone()),
            Input::Arcs(f) => Some(from_arcs(f).1),
        }
    }
}
