//! Random scenario generator for benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{Point, Polytope, DEFAULT_TOL};
use crate::scenario::{Scenario, ValidationError, DEFAULT_LEVELS};

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("generation failed: placed {placed} of {wanted} polytopes before {rejections} rejections")]
    GenerationFailed {
        placed: usize,
        wanted: usize,
        rejections: usize,
    },
    #[error("invalid generator configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

#[derive(Clone, Debug)]
pub struct GeneratorConfig {
    pub polytopes: usize,
    /// Lower-left corner; also the start point.
    pub min: Point,
    /// Upper-right corner; also the end point.
    pub max: Point,
    pub budget: f64,
    pub levels: usize,
    /// Circumradius range of the sampled polygons.
    pub radius: (f64, f64),
    /// Inclusive vertex-count range.
    pub vertices: (usize, usize),
    pub max_rejections: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            polytopes: 15,
            min: Point::new(0.0, 0.0),
            max: Point::new(18.0, 14.0),
            budget: 3.0,
            levels: DEFAULT_LEVELS,
            radius: (1.5, 2.5),
            vertices: (3, 8),
            max_rejections: 10_000,
        }
    }
}

fn round6(v: f64) -> f64 {
    (v * 1e6).round() / 1e6
}

fn sample_polygon(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Option<Polytope> {
    let radius = rng.gen_range(cfg.radius.0..=cfg.radius.1);
    let lo = Point::new(cfg.min.x + radius, cfg.min.y + radius);
    let hi = Point::new(cfg.max.x - radius, cfg.max.y - radius);
    if lo.x >= hi.x || lo.y >= hi.y {
        return None;
    }
    let center = Point::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
    let n = rng.gen_range(cfg.vertices.0..=cfg.vertices.1);
    let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(f64::total_cmp);
    let points: Vec<Point> = angles
        .iter()
        .map(|a| {
            Point::new(
                round6(center.x + radius * a.cos()),
                round6(center.y + radius * a.sin()),
            )
        })
        .collect();
    // Clustered angles can give slivers; those count as rejections.
    let poly = Polytope::from_vertices(0, &points, DEFAULT_TOL).ok()?;
    (poly.area() >= 0.05 * radius * radius).then_some(poly)
}

/// Samples `cfg.polytopes` pairwise-disjoint convex polygons. The same seed
/// always produces the same scenario.
pub fn generate_scenario(cfg: &GeneratorConfig, seed: u64) -> Result<Scenario, GenerateError> {
    if !cfg.budget.is_finite() || cfg.budget <= 0.0 || cfg.min.x >= cfg.max.x || cfg.min.y >= cfg.max.y {
        return Err(GenerateError::BadConfig("bounds must be non-empty and budget positive".into()));
    }
    if cfg.vertices.0 < 3 || cfg.vertices.0 > cfg.vertices.1 || !cfg.radius.0.is_finite() || cfg.radius.0 <= 0.0 || cfg.radius.0 > cfg.radius.1 {
        return Err(GenerateError::BadConfig("need at least 3 vertices and a positive radius range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut placed: Vec<Polytope> = Vec::with_capacity(cfg.polytopes);
    let mut rejections = 0;
    while placed.len() < cfg.polytopes {
        let accepted = sample_polygon(&mut rng, cfg).filter(|p| {
            placed.iter().all(|q| p.distance_to(q) > DEFAULT_TOL)
                && !p.contains(cfg.min, DEFAULT_TOL)
                && !p.contains(cfg.max, DEFAULT_TOL)
        });
        match accepted {
            Some(p) => placed.push(p),
            None => {
                rejections += 1;
                if rejections >= cfg.max_rejections {
                    return Err(GenerateError::GenerationFailed {
                        placed: placed.len(),
                        wanted: cfg.polytopes,
                        rejections,
                    });
                }
            }
        }
    }
    Ok(Scenario::new(cfg.min, cfg.max, cfg.budget, placed, cfg.levels, DEFAULT_TOL)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scenario() {
        let cfg = GeneratorConfig {
            polytopes: 0,
            ..GeneratorConfig::default()
        };
        let scn = generate_scenario(&cfg, 7).unwrap();
        assert!(scn.polytopes.is_empty());
        assert!((scn.straight_line_length() - 520f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn deterministic_for_a_seed() {
        let cfg = GeneratorConfig::default();
        let a = generate_scenario(&cfg, 1).unwrap().to_json();
        let b = generate_scenario(&cfg, 1).unwrap().to_json();
        let c = generate_scenario(&cfg, 2).unwrap().to_json();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn polygons_are_disjoint_and_in_bounds() {
        let scn = generate_scenario(&GeneratorConfig::default(), 3).unwrap();
        assert_eq!(scn.polytopes.len(), 15);
        for (i, p) in scn.polytopes.iter().enumerate() {
            assert!((3..=8).contains(&p.vertices().len()));
            assert!(p.vertices().iter().all(|v| (0.0..=18.0).contains(&v.x) && (0.0..=14.0).contains(&v.y)));
            for q in &scn.polytopes[i + 1..] {
                assert!(p.distance_to(q) > DEFAULT_TOL);
            }
        }
    }

    #[test]
    fn crowded_box_fails() {
        let cfg = GeneratorConfig {
            polytopes: 50,
            max: Point::new(4.0, 4.0),
            max_rejections: 200,
            ..GeneratorConfig::default()
        };
        assert!(matches!(
            generate_scenario(&cfg, 0),
            Err(GenerateError::GenerationFailed { rejections: 200, .. })
        ));
    }
}
