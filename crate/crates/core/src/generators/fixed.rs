use std::fmt;
use std::str::FromStr;

use crate::{parse_definition, Error, Result, TraversalDefinition};

/// Curves known only in the dimension they were designed for, bundled as
/// definition files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedCurve {
    Polya2D,
    PrismCurve3D,
    PalindromicTetra,
    Sub8,
    Meander2D,
}

impl FixedCurve {
    pub const ALL: [FixedCurve; 5] = [
        FixedCurve::Polya2D,
        FixedCurve::PrismCurve3D,
        FixedCurve::PalindromicTetra,
        FixedCurve::Sub8,
        FixedCurve::Meander2D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixedCurve::Polya2D => "polya",
            FixedCurve::PrismCurve3D => "prism",
            FixedCurve::PalindromicTetra => "palindromic-tetra",
            FixedCurve::Sub8 => "sub8",
            FixedCurve::Meander2D => "meander",
        }
    }

    /// The bundled definition file, comments included.
    pub fn source(self) -> &'static str {
        match self {
            FixedCurve::Polya2D => include_str!("../../definitions/polya2d.txt"),
            FixedCurve::PrismCurve3D => include_str!("../../definitions/prism3d.txt"),
            FixedCurve::PalindromicTetra => include_str!("../../definitions/palindromic-tetra.txt"),
            FixedCurve::Sub8 => include_str!("../../definitions/sub8.txt"),
            FixedCurve::Meander2D => include_str!("../../definitions/meander2d.txt"),
        }
    }

    pub fn definition(self) -> TraversalDefinition {
        parse_definition(self.source()).expect("bundled definition files are valid")
    }
}

impl fmt::Display for FixedCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixedCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let key = key.trim_end_matches("2d").trim_end_matches("3d").trim_end_matches('-');
        let key = match key {
            "polya" | "sierpinski" | "sierpinski-knopp" => "polya",
            "prism" | "prism-curve" => "prism",
            "palindromic-tetra" | "palindromic-tetrahedral" => "palindromic-tetra",
            other => other,
        };
        FixedCurve::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}
