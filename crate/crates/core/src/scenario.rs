//! Problem instances, path solutions and their JSON forms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget_graph::PolytopeSequence;
use crate::geometry::{GeometryError, Point, Polytope, Representation, DEFAULT_TOL};

/// Wavefront level count used when a scenario file does not set one.
pub const DEFAULT_LEVELS: usize = 4;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("failed to parse scenario: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid scenario: {0}")]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValidationError {
    #[error("budget must be positive, got {0}")]
    NonPositiveBudget(f64),
    #[error("{which} point has a non-finite coordinate")]
    NonFiniteEndpoint { which: &'static str },
    #[error("levels must be at least 1")]
    ZeroLevels,
    #[error("tolerance must be finite and nonnegative, got {0}")]
    BadTolerance(f64),
    #[error("polytope {index}: {source}")]
    Polytope {
        index: usize,
        #[source]
        source: GeometryError,
    },
    #[error("polytopes {first} and {second} are not disjoint (distance {distance:e})")]
    Overlapping {
        first: usize,
        second: usize,
        distance: f64,
    },
}

/// A validated planning problem.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub start: Point,
    pub end: Point,
    /// Maximum travel distance between replenishments.
    pub budget: f64,
    /// Replenishment regions; `polytopes[i].id() == i`.
    pub polytopes: Vec<Polytope>,
    /// Number of wavefront levels between 0 and the budget.
    pub levels: usize,
    pub tol: f64,
    notes: Vec<String>,
}

impl Scenario {
    /// Validates and assembles a scenario. Polytope ids are reassigned to
    /// their list positions.
    pub fn new(
        start: Point,
        end: Point,
        budget: f64,
        polytopes: Vec<Polytope>,
        levels: usize,
        tol: f64,
    ) -> Result<Self, ValidationError> {
        if !start.is_finite() {
            return Err(ValidationError::NonFiniteEndpoint { which: "start" });
        }
        if !end.is_finite() {
            return Err(ValidationError::NonFiniteEndpoint { which: "end" });
        }
        if !budget.is_finite() || budget <= 0.0 {
            return Err(ValidationError::NonPositiveBudget(budget));
        }
        if levels == 0 {
            return Err(ValidationError::ZeroLevels);
        }
        if !tol.is_finite() || tol < 0.0 {
            return Err(ValidationError::BadTolerance(tol));
        }
        let polytopes: Vec<Polytope> = polytopes
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.with_id(i))
            .collect();
        for i in 0..polytopes.len() {
            for j in (i + 1)..polytopes.len() {
                let distance = polytopes[i].distance_to(&polytopes[j]);
                if distance <= tol {
                    return Err(ValidationError::Overlapping {
                        first: i,
                        second: j,
                        distance,
                    });
                }
            }
        }
        let mut notes = Vec::new();
        for (which, p) in [("start", start), ("end", end)] {
            if let Some(poly) = polytopes.iter().find(|poly| poly.contains(p, tol)) {
                notes.push(format!("{which} point lies in polytope {}", poly.id()));
            }
        }
        Ok(Scenario {
            start,
            end,
            budget,
            polytopes,
            levels,
            tol,
            notes,
        })
    }

    /// Informational remarks produced during validation.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Index of the polytope containing `p` (within the scenario tolerance).
    /// Polytopes are disjoint, so there is at most one.
    pub fn region_of(&self, p: Point) -> Option<usize> {
        self.polytopes
            .iter()
            .position(|poly| poly.contains(p, self.tol))
    }

    pub fn straight_line_length(&self) -> f64 {
        self.start.distance(self.end)
    }

    /// Copy with every coordinate and the budget multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Scenario {
        Scenario {
            start: self.start * factor,
            end: self.end * factor,
            budget: self.budget * factor,
            polytopes: self.polytopes.iter().map(|p| p.scaled(factor)).collect(),
            levels: self.levels,
            tol: self.tol,
            notes: self.notes.clone(),
        }
    }

    /// Same scenario with a different wavefront level count.
    pub fn with_levels(&self, levels: usize) -> Result<Scenario, ValidationError> {
        if levels == 0 {
            return Err(ValidationError::ZeroLevels);
        }
        Ok(Scenario {
            levels,
            ..self.clone()
        })
    }

    pub fn from_json(text: &str) -> Result<Scenario, ScenarioError> {
        let file: ScenarioFile = serde_json::from_str(text)?;
        Ok(file.into_scenario()?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ScenarioFile::from(self)).expect("scenario serializes")
    }
}

/// Parses and validates a scenario from raw bytes.
pub fn load_scenario(bytes: &[u8]) -> Result<Scenario, ScenarioError> {
    let file: ScenarioFile = serde_json::from_slice(bytes)?;
    Ok(file.into_scenario()?)
}

pub fn save_scenario(scn: &Scenario) -> String {
    scn.to_json()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    start: Point,
    end: Point,
    budget: f64,
    #[serde(default = "default_levels")]
    levels: usize,
    #[serde(default = "default_tol")]
    tol: f64,
    #[serde(default)]
    polytopes: Vec<PolytopeFile>,
}

fn default_levels() -> usize {
    DEFAULT_LEVELS
}

fn default_tol() -> f64 {
    DEFAULT_TOL
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PolytopeFile {
    Vertices {
        vertices: Vec<Point>,
    },
    HalfSpaces {
        #[serde(rename = "H")]
        normals: Vec<Point>,
        h: Vec<f64>,
    },
}

impl ScenarioFile {
    fn into_scenario(self) -> Result<Scenario, ValidationError> {
        let tol = self.tol;
        if !tol.is_finite() || tol < 0.0 {
            return Err(ValidationError::BadTolerance(tol));
        }
        let polytopes = self
            .polytopes
            .into_iter()
            .enumerate()
            .map(|(index, spec)| {
                let built = match spec {
                    PolytopeFile::Vertices { vertices } => Polytope::from_vertices(index, &vertices, tol),
                    PolytopeFile::HalfSpaces { normals, h } => {
                        Polytope::from_halfspaces(index, normals, h, tol)
                    }
                };
                built.map_err(|source| ValidationError::Polytope { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Scenario::new(self.start, self.end, self.budget, polytopes, self.levels, tol)
    }
}

impl From<&Scenario> for ScenarioFile {
    fn from(scn: &Scenario) -> Self {
        ScenarioFile {
            start: scn.start,
            end: scn.end,
            budget: scn.budget,
            levels: scn.levels,
            tol: scn.tol,
            polytopes: scn
                .polytopes
                .iter()
                .map(|p| match p.representation() {
                    Representation::Vertices => PolytopeFile::Vertices {
                        vertices: p.vertices().to_vec(),
                    },
                    Representation::HalfSpaces => PolytopeFile::HalfSpaces {
                        normals: p.normals().to_vec(),
                        h: p.offsets().to_vec(),
                    },
                })
                .collect(),
        }
    }
}

/// How a path solution was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    GraphOnly,
    Refined,
    StraightLine,
}

/// A planned path. Segment `i` runs from `waypoints[i]` to `waypoints[i+1]`;
/// segments flagged in-region lie inside a replenishment region and are
/// exempt from the budget.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathSolution {
    pub method: Method,
    pub total_length: f64,
    pub waypoints: Vec<Point>,
    pub sequence: PolytopeSequence,
    pub segment_lengths: Vec<f64>,
    pub segment_in_region: Vec<bool>,
}

impl PathSolution {
    /// Computes segment lengths and the total from the waypoints.
    pub fn new(
        method: Method,
        waypoints: Vec<Point>,
        segment_in_region: Vec<bool>,
        sequence: PolytopeSequence,
    ) -> Self {
        assert_eq!(
            segment_in_region.len() + 1,
            waypoints.len().max(1),
            "one region flag per segment"
        );
        let segment_lengths: Vec<f64> = waypoints.windows(2).map(|w| w[0].distance(w[1])).collect();
        let total_length = segment_lengths.iter().sum();
        PathSolution {
            method,
            total_length,
            waypoints,
            sequence,
            segment_lengths,
            segment_in_region,
        }
    }

    pub fn straight_line(scn: &Scenario) -> Self {
        PathSolution::new(
            Method::StraightLine,
            vec![scn.start, scn.end],
            vec![false],
            PolytopeSequence::default(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("solution serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Longest segment that is not exempt from the budget.
    pub fn longest_budgeted_segment(&self) -> f64 {
        self.segment_lengths
            .iter()
            .zip(&self.segment_in_region)
            .filter(|(_, &inside)| !inside)
            .map(|(&l, _)| l)
            .fold(0.0, f64::max)
    }
}

/// Replays `sol` against the budget rule.
///
/// Distance accumulates along segments and resets to zero at every waypoint
/// that lies in a polytope and after every in-region segment. The path is
/// feasible when the accumulator never exceeds `budget + tol`, its ends match
/// the scenario, and each in-region segment has both endpoints in one
/// polytope.
pub fn check_path_feasible(scn: &Scenario, sol: &PathSolution) -> bool {
    let tol = scn.tol;
    let pts = &sol.waypoints;
    let (Some(&first), Some(&last)) = (pts.first(), pts.last()) else {
        return false;
    };
    if first.distance(scn.start) > tol || last.distance(scn.end) > tol {
        return false;
    }
    if pts.len() >= 2 && sol.segment_in_region.len() != pts.len() - 1 {
        return false;
    }
    let mut used = 0.0;
    for (i, w) in pts.windows(2).enumerate() {
        if scn.region_of(w[0]).is_some() {
            used = 0.0;
        }
        if sol.segment_in_region[i] {
            let host = scn.region_of(w[0]);
            if host.is_none() || host != scn.region_of(w[1]) {
                return false;
            }
            used = 0.0;
        } else {
            used += w[0].distance(w[1]);
            if used > scn.budget + tol {
                return false;
            }
        }
    }
    true
}
