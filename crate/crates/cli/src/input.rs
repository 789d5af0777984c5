//! Resolving command-line operands into diagrams or matrices.

use std::path::Path;

use tanglekit::diagram::{crossing, fundamental, identity_spherical, parse_diagram, twist, Fundamental, ParsedDiagram};
use tanglekit::invariant::{compute_invariant_with, InvariantOptions};
use tanglekit::{IntMatrix, LinkDiagram, TangleDiagram};

/// A positional operand after loading.
pub enum Operand {
    Tangle(TangleDiagram),
    Link(LinkDiagram),
    Matrix(IntMatrix),
}

/// `fundamental1`, `fundamental2`, `crossing`, `identity`, `twistN`.
pub fn builder(name: &str) -> Option<TangleDiagram> {
    match name {
        "fundamental1" => Some(fundamental(Fundamental::One)),
        "fundamental2" => Some(fundamental(Fundamental::Two)),
        "crossing" => Some(crossing()),
        "identity" => Some(identity_spherical()),
        _ => {
            let p: i64 = name.strip_prefix("twist")?.parse().ok()?;
            (p.unsigned_abs() <= 10_000).then(|| twist(p))
        }
    }
}

fn read(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

pub fn read_matrix(path: &str) -> Result<IntMatrix, String> {
    IntMatrix::from_json(&read(path)?).map_err(|e| format!("{path}: {e}"))
}

/// A file path takes precedence over a builder of the same name. Files
/// starting with `{` are matrices, anything else is a diagram.
pub fn load(arg: &str) -> Result<Operand, String> {
    if !Path::new(arg).exists() {
        return builder(arg)
            .map(Operand::Tangle)
            .ok_or_else(|| format!("`{arg}` is neither a file nor a builder name"));
    }
    let text = read(arg)?;
    if text.trim_start().starts_with('{') {
        return IntMatrix::from_json(&text)
            .map(Operand::Matrix)
            .map_err(|e| format!("{arg}: {e}"));
    }
    match parse_diagram(&text).map_err(|e| format!("{arg}: {e}"))? {
        ParsedDiagram::Tangle(t) => Ok(Operand::Tangle(t)),
        ParsedDiagram::Link(l) => Ok(Operand::Link(l)),
    }
}

/// The invariant of an operand: matrices pass through, tangles are evaluated.
pub fn invariant_of(arg: &str, opts: InvariantOptions) -> Result<IntMatrix, String> {
    match load(arg)? {
        Operand::Matrix(m) => Ok(m),
        Operand::Tangle(t) => compute_invariant_with(&t, opts).map_err(|e| format!("{arg}: {e}")),
        Operand::Link(_) => Err(format!("{arg}: a closed link has no tangle invariant")),
    }
}
