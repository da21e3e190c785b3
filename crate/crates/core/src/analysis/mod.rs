//! Finite-depth checks of the properties claimed for each traversal.
//!
//! Every check returns a [`PropertyReport`]; a failing report carries a
//! witness that reproduces the failure.

mod continuity;
mod locality;
mod order;
mod patterns;

use std::fmt;
use std::str::FromStr;

pub use continuity::{
    adjacency_profile, component_count, max_components, sections, AdjacencyProfile, SectionCounter,
    DEFAULT_SEED, EXHAUSTIVE_LIMIT, SAMPLED_SECTIONS,
};
pub use locality::{max_bbox_ratio, BoxRatio};
pub use order::{check_dominance, check_facet_order, check_palindromic, check_straight_jumping, Facet};
pub use patterns::{
    centre_multiplicities, check_base_pattern, check_cell_cover, check_well_folded_rank, BasePattern,
};

use crate::engine::generate_path;
use crate::{Error, Rational, Result, TraversalDefinition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Outcome of one check, printed as
/// `property subject d depth verdict [details...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    /// What was checked, e.g. a family name or file path.
    pub subject: String,
    pub dim: usize,
    pub depth: usize,
    pub verdict: Verdict,
    /// The witness for a failure; extra information otherwise.
    pub details: String,
}

impl PropertyReport {
    pub fn new(
        property: &str,
        dim: usize,
        depth: usize,
        verdict: Verdict,
        details: impl Into<String>,
    ) -> Self {
        PropertyReport {
            property: property.to_string(),
            subject: "definition".to_string(),
            dim,
            depth,
            verdict,
            details: details.into(),
        }
    }

    pub fn with_subject(mut self, subject: impl Into<String>) -> Self {
        self.subject = subject.into();
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.property, self.subject, self.dim, self.depth, self.verdict
        )?;
        if !self.details.is_empty() {
            write!(f, " {}", self.details)?;
        }
        Ok(())
    }
}

/// Properties that can be requested by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Continuity,
    Components,
    Palindromic,
    Dominance,
    StraightJumping,
    FacetOrder,
    BBox,
    BasePattern,
    WellFolded,
    Cover,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::Continuity,
        Property::Components,
        Property::Palindromic,
        Property::Dominance,
        Property::StraightJumping,
        Property::FacetOrder,
        Property::BBox,
        Property::BasePattern,
        Property::WellFolded,
        Property::Cover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Continuity => "continuity",
            Property::Components => "components",
            Property::Palindromic => "palindromic",
            Property::Dominance => "dominance",
            Property::StraightJumping => "straight-jumping",
            Property::FacetOrder => "facet-order",
            Property::BBox => "bbox",
            Property::BasePattern => "base-pattern",
            Property::WellFolded => "well-folded",
            Property::Cover => "cover",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Property::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Parameters shared by [`run_property`].
#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub depth: usize,
    pub seed: u64,
    /// The `(d-1)`-dimensional member of the same family, for facet orders.
    pub lower: Option<TraversalDefinition>,
    pub component_bound: usize,
    pub bbox_bound: Rational,
    /// Sections examined by the bounding-box check before it falls back to
    /// sampling.
    pub bbox_sections: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            depth: 2,
            seed: DEFAULT_SEED,
            lower: None,
            component_bound: 2,
            bbox_bound: Rational::from_integer(4),
            bbox_sections: 1 << 21,
        }
    }
}

/// Runs one named property; facet orders yield one report per facet.
pub fn run_property(
    property: Property,
    def: &TraversalDefinition,
    opts: &CheckOptions,
) -> Result<Vec<PropertyReport>> {
    let d = def.dim();
    let depth = opts.depth;
    let verdict = |ok: bool| if ok { Verdict::Holds } else { Verdict::Fails };
    let report = match property {
        Property::Continuity => {
            let path = generate_path(def, depth)?;
            let profile = adjacency_profile(&path);
            let details = match profile.first_jump {
                Some(k) => format!(
                    "step {k}: {:?} -> {:?} ({} of {} steps are not face steps)",
                    path.point(k),
                    path.point(k + 1),
                    profile.other_steps,
                    path.len().saturating_sub(1)
                ),
                None => format!("face_steps={} stay_steps={}", profile.face_steps, profile.stay_steps),
            };
            PropertyReport::new(property.name(), d, depth, verdict(profile.is_face_continuous()), details)
        }
        Property::Components => {
            let path = generate_path(def, depth)?;
            let (max, (a, b)) = max_components(&path, opts.seed);
            let details = format!(
                "max={max} bound={} section={a}..={b} sections={}",
                opts.component_bound,
                sections(path.len(), opts.seed).len()
            );
            PropertyReport::new(property.name(), d, depth, verdict(max <= opts.component_bound), details)
        }
        Property::Palindromic => check_palindromic(def, depth)?,
        Property::Dominance => check_dominance(&generate_path(def, depth)?),
        Property::StraightJumping => check_straight_jumping(def, depth)?,
        Property::FacetOrder => {
            let Some(lower) = &opts.lower else {
                return Ok(vec![PropertyReport::new(
                    property.name(),
                    d,
                    depth,
                    Verdict::Inconclusive,
                    "no lower-dimensional traversal to compare with",
                )]);
            };
            return Facet::all(d)
                .into_iter()
                .map(|f| check_facet_order(def, lower, f, depth))
                .collect();
        }
        Property::BBox => {
            let path = generate_path(def, depth)?;
            let r = max_bbox_ratio(&path, opts.bbox_sections, opts.seed);
            let details = format!(
                "ratio={} bound={} section={}..={} sections={}",
                r.ratio, opts.bbox_bound, r.section.0, r.section.1, r.sections_checked
            );
            PropertyReport::new(property.name(), d, depth, verdict(r.ratio <= opts.bbox_bound), details)
        }
        Property::BasePattern => {
            let pattern = check_base_pattern(def);
            let v = if pattern == BasePattern::Other {
                Verdict::Fails
            } else {
                Verdict::Holds
            };
            let details = if pattern == BasePattern::Other {
                "no known base pattern".to_string()
            } else {
                pattern.to_string()
            };
            PropertyReport::new(property.name(), d, 1, v, details)
        }
        Property::WellFolded => check_well_folded_rank(def),
        Property::Cover => {
            if def.is_cubic() {
                check_cell_cover(&generate_path(def, depth)?)
            } else {
                PropertyReport::new(property.name(), d, depth, Verdict::Inconclusive, "not a cube traversal")
            }
        }
    };
    Ok(vec![report])
}
